"""
CLI Tests
Alt komutlar, çıkış kodları ve stdout raporu
"""

import json

import pytest

from src.container import Container, ContainerBuilder
from src.infrastructure.config import ConfigService
from src.presentation.cli import create_parser, run_cli
from tests.conftest import heat_config


@pytest.fixture
def container(monkeypatch, tmp_path):
    """Ortam değişkenlerinden bağımsız container"""
    for name in ("PDDE_THREADS", "PDDE_LOG_FILE"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("PDDE_OUTPUT_DIR", str(tmp_path / "runs"))
    Container.reset()
    yield ContainerBuilder().with_config(ConfigService()).build()
    Container.reset()


def write_config(tmp_path, raw, name="run.json"):
    path = tmp_path / name
    path.write_text(json.dumps(raw), encoding="utf-8")
    return str(path)


class TestSchedule:
    """pdde schedule"""

    def test_schedule_prints_report(self, container, capsys):
        """N=1, r₀=2: m₀=2, Θ=2"""
        code = run_cli(["schedule", "--N", "1", "--r0", "2"], container)
        out = capsys.readouterr().out

        assert code == 0
        assert "m0: 2" in out
        assert "Theta: 2" in out
        assert "valid: true" in out

    def test_invalid_r0(self, container, capsys):
        """r₀ = 1 yapılandırma hatasıdır"""
        code = run_cli(["schedule", "--N", "1", "--r0", "1"], container)

        assert code == 2
        assert "CONFIG" in capsys.readouterr().out


class TestSolve:
    """pdde solve"""

    def test_missing_config(self, container, tmp_path):
        """Olmayan dosya: çıkış kodu 2"""
        code = run_cli(["solve", "--config", str(tmp_path / "yok.json"), "--out", str(tmp_path / "out")], container)

        assert code == 2

    def test_writes_norms(self, container, tmp_path):
        """Sıfır başlangıç verisiyle norms.csv ve manifest.json yazılır"""
        config = write_config(tmp_path, heat_config(T=1.0, dt=0.1, cells=16, head="0"))
        out = tmp_path / "out"

        code = run_cli(["solve", "--config", config, "--out", str(out)], container)

        assert code == 0
        lines = (out / "norms.csv").read_text(encoding="utf-8").splitlines()
        assert lines[0] == "t,norm_q2,norm_qinf,provenance"
        assert len(lines) == 1 + 11
        t, norm2, norminf, provenance = lines[-1].split(",")
        assert float(t) == pytest.approx(1.0)
        assert float(norm2) == 0.0 and float(norminf) == 0.0
        assert provenance == "measured"
        manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
        assert manifest["command"] == "solve"

    def test_assumption_violation(self, container, tmp_path):
        """Negatif difüzyon DA4 ihlalidir: çıkış kodu 2"""
        raw = heat_config(T=1.0, dt=0.1, cells=16)
        raw["system"]["components"][0]["a"] = [["-1"]]
        config = write_config(tmp_path, raw)

        assert run_cli(["solve", "--config", config, "--out", str(tmp_path / "out")], container) == 2


class TestVerify:
    """pdde verify"""

    def test_unknown_suite(self, container, tmp_path):
        """Bilinmeyen paket adı: çıkış kodu 2"""
        config = write_config(tmp_path, heat_config())

        assert run_cli(["verify", "--suite", "yok", "--config", config], container) == 2

    def test_cocycle_suite_report(self, container, tmp_path):
        """cocycle paketi report.csv yazar ve geçer"""
        config = write_config(tmp_path, heat_config(T=1.0, dt=0.05, cells=16))
        out = tmp_path / "verify"

        code = run_cli(["verify", "--suite", "cocycle", "--config", config, "--out", str(out)], container)

        assert code == 0
        lines = (out / "report.csv").read_text(encoding="utf-8").splitlines()
        assert lines[0] == "check,theoretical,measured,margin,pass,provenance"
        assert all(",true," in line for line in lines[1:])


class TestStudy:
    """pdde study"""

    def test_zero_amplitude(self, container, tmp_path):
        """amp = 0: tüm hatalar sıfır, eğilim geçer"""
        raw = heat_config(
            T=1.0,
            dt=0.05,
            cells=16,
            extra={"study": {"ms": [1, 2, 4], "amp": 0.0, "variant": "short"}},
        )
        raw["system"]["c0"] = [["0.2"]]
        raw["system"]["c1"] = [["-0.2"]]
        config = write_config(tmp_path, raw)
        out = tmp_path / "study"

        code = run_cli(["study", "--config", config, "--out", str(out)], container)

        assert code == 0
        lines = (out / "study.csv").read_text(encoding="utf-8").splitlines()
        assert lines[0] == "m,err,provenance"
        assert len(lines) == 4

    def test_missing_study_section(self, container, tmp_path):
        """study bölümü olmadan çıkış kodu 2"""
        config = write_config(tmp_path, heat_config())

        assert run_cli(["study", "--config", config, "--out", str(tmp_path / "study")], container) == 2


class TestParser:
    """argparse yüzeyi"""

    def test_missing_subcommand(self):
        """Alt komut zorunlu"""
        with pytest.raises(SystemExit) as exc:
            create_parser().parse_args([])
        assert exc.value.code == 2

    def test_schedule_defaults(self):
        """p=1, q=inf, r₀=inf varsayılanları"""
        args = create_parser().parse_args(["schedule", "--N", "2"])

        assert (args.p, args.q, args.r0) == ("1", "inf", "inf")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
