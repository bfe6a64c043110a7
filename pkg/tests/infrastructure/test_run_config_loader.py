"""
RunConfig Loader Tests
JSON yükleme, varsayılanlar, hata sınıflandırması ve yapılandırma özeti
"""

import json

import pytest

from src.domain import ConfigurationError, Quadrature, Scheme, ValidationError
from src.infrastructure.config import ConfigService, RunConfigLoader, config_hash
from tests.conftest import heat_config


class TestRunConfigLoader:
    """RunConfigLoader testleri"""

    def test_defaults_filled(self):
        """Eksik opsiyonel bölümler varsayılanlarla doldurulur"""
        raw = heat_config()
        del raw["output"]
        config = RunConfigLoader().parse(raw)

        assert config.solver.method == "marching"
        assert config.solver.scheme is Scheme.CRANK_NICOLSON
        assert config.solver.quadrature is Quadrature.TRAPEZOID
        assert config.output.norms_q == ("2",)
        assert config.study is None
        assert config.initial.tail is None
        assert config.system.components[0].a_first == ("0",)

    def test_exponents_normalised(self):
        """Üsler kanonik metne çevrilir"""
        config = RunConfigLoader().parse(heat_config(extra={"output": {"norms_q": [2, "INF", 1.5]}}))

        assert config.output.norms_q == ("2", "inf", "1.5")

    def test_missing_section(self):
        """Zorunlu bölüm eksik: ConfigurationError"""
        raw = heat_config()
        del raw["time"]

        with pytest.raises(ConfigurationError):
            RunConfigLoader().parse(raw)

    def test_bad_method(self):
        """Geçersiz çözüm yöntemi: ValidationError"""
        raw = heat_config(extra={"solver": {"method": "shooting"}})

        with pytest.raises(ValidationError):
            RunConfigLoader().parse(raw)

    def test_bad_scheme(self):
        """Geçersiz şema adı ValidationError'a çevrilir"""
        raw = heat_config(extra={"solver": {"scheme": "leapfrog"}})

        with pytest.raises(ValidationError):
            RunConfigLoader().parse(raw)

    def test_wrong_matrix_shape(self):
        """c0 n×n değil"""
        raw = heat_config()
        raw["system"]["c0"] = [["0", "0"]]

        with pytest.raises(ConfigurationError):
            RunConfigLoader().parse(raw)

    def test_study_section(self):
        """study bölümü StudySettings'e dönüşür"""
        raw = heat_config(extra={"study": {"ms": [1, 2], "amp": 0.0, "window": [2.5, 3.0]}})
        study = RunConfigLoader().parse(raw).study

        assert study.ms == (1, 2)
        assert study.amp == 0.0
        assert study.window == (2.5, 3.0)
        assert study.targets == ("c0", "c1")


class TestLoadFromFile:
    """Dosyadan yükleme Result döndürür"""

    def test_missing_file(self, tmp_path):
        result = RunConfigLoader().load(str(tmp_path / "yok.json"))

        assert result.is_error
        assert isinstance(result.error, ConfigurationError)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bozuk.json"
        path.write_text("{ bozuk", encoding="utf-8")

        result = RunConfigLoader().load(str(path))
        assert isinstance(result.error, ConfigurationError)

    def test_valid_file(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps(heat_config()), encoding="utf-8")

        result = RunConfigLoader().load(str(path))
        assert result.is_ok
        assert result.value.source_path == str(path)
        assert len(result.value.config_hash) == 64


class TestConfigHash:
    """config_hash testleri"""

    def test_key_order_irrelevant(self):
        assert config_hash({"a": 1, "b": [1, 2]}) == config_hash({"b": [1, 2], "a": 1})

    def test_value_change_detected(self):
        assert config_hash({"a": 1}) != config_hash({"a": 2})


class TestConfigService:
    """Ortam değişkeni yapılandırması"""

    def test_threads_from_environment(self, monkeypatch):
        monkeypatch.setenv("PDDE_THREADS", "3")

        assert ConfigService().threads == 3
        assert ConfigService().validate() == []

    def test_invalid_threads_reported(self, monkeypatch):
        monkeypatch.setenv("PDDE_THREADS", "sıfır")

        errors = ConfigService().validate()
        assert len(errors) == 1
        assert "PDDE_THREADS" in errors[0]

    def test_output_dir_override(self, monkeypatch, tmp_path):
        monkeypatch.setenv("PDDE_OUTPUT_DIR", str(tmp_path))

        assert ConfigService().output_dir == str(tmp_path)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
