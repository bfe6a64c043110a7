"""
Use Case Registry Tests
Registry ve auto-discovery testleri
"""

import pytest
from pathlib import Path
import sys

# Proje kökünü path'e ekle
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.application.dtos import ScheduleRequest
from src.application.use_cases import EXIT_CONFIG, EXIT_OK, ScheduleUseCase
from src.core import UseCaseRegistry, UseCaseMetadata, get_use_case_registry


class TestUseCaseMetadata:
    """UseCaseMetadata testleri"""

    def test_create_metadata(self):
        """Metadata oluşturma"""
        meta = UseCaseMetadata(
            name="schedule",
            version="1.0.0",
            description="Çizelge",
            requires_config=False,
            writes_output=False,
        )

        assert meta.name == "schedule"
        assert meta.version == "1.0.0"
        assert meta.requires_config is False
        assert meta.writes_output is False

    def test_default_values(self):
        """Varsayılan değerler"""
        meta = UseCaseMetadata(name="simple")

        assert meta.version == "1.0.0"
        assert meta.requires_config is True
        assert meta.writes_output is True


class TestUseCaseRegistry:
    """UseCaseRegistry testleri"""

    def setup_method(self):
        """Test öncesi registry'yi temizle"""
        UseCaseRegistry.reset()

    def teardown_method(self):
        """Test sonrası registry'yi temizle"""
        UseCaseRegistry.reset()

    def test_singleton(self):
        """Singleton pattern testi"""
        registry1 = get_use_case_registry()
        registry2 = get_use_case_registry()

        assert registry1 is registry2

    def test_reset(self):
        """Reset fonksiyonu"""
        registry1 = get_use_case_registry()
        UseCaseRegistry.reset()
        registry2 = get_use_case_registry()

        assert registry1 is not registry2

    def test_discovers_commands(self):
        """Dört alt komut keşfedilir"""
        registry = get_use_case_registry()
        registry.discover()

        assert set(registry.list_plugins()) == {"solve", "verify", "schedule", "study"}
        assert registry.get_metadata("schedule").requires_config is False


class TestScheduleUseCase:
    """Yapılandırma gerektirmeyen use case doğrudan çalıştırılabilir"""

    def test_schedule_ok(self):
        result = ScheduleUseCase().run(ScheduleRequest(N=1, r0="2"))

        assert result.exit_code == EXIT_OK
        assert any("Theta" in line and "2" in line for line in result.summary)

    def test_invalid_r0_maps_to_config_exit(self):
        result = ScheduleUseCase().run(ScheduleRequest(N=1, r0="1"))

        assert result.exit_code == EXIT_CONFIG


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
