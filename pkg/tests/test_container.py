"""
Container Tests
Örnekleme kutusunun zaman düğümleri ve K örneklemesi
"""

import numpy as np
import pytest

from src.application.services.multiplication import sup_bound_K
from src.container import sample_box
from src.domain import SpatialGrid, TimeGrid
from tests.conftest import make_parameter


@pytest.fixture
def grid():
    return SpatialGrid(((0.0, 1.0),), (8,))


class TestSampleBox:
    """sample_box testleri"""

    def test_every_time_node(self, grid):
        """T=3, dt=1e-3: kutu 3001 zaman düğümünün hepsini içerir"""
        time_grid = TimeGrid(0.0, 3.0, 1e-3)
        box = sample_box(grid, time_grid)

        assert np.array_equal(box.times, time_grid.times)

    def test_long_runs_subsampled(self, grid):
        """10 000 adımın üstünde eşit aralıklı 10 001 düğüm, uçlar dahil"""
        time_grid = TimeGrid(0.0, 20.0, 1e-3)
        box = sample_box(grid, time_grid)

        assert box.times.size == 10_001
        assert box.times[0] == 0.0
        assert box.times[-1] == pytest.approx(20.0)

    def test_fast_oscillation_reaches_peak(self, grid):
        """sin(500π·t) tepeleri tek ızgara düğümlerinde: K = 1.5 tam olarak görülür"""
        time_grid = TimeGrid(0.0, 3.0, 1e-3)
        parameter = make_parameter([["1.5*sin(1570.7963267948965*t)"]], [["0"]], K_bound=2.0)

        K = sup_bound_K([parameter], sample_box(grid, time_grid))

        assert K == pytest.approx(1.5, rel=1e-9)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
