"""
RunConfig Yükleyici
Tek bir JSON belgesini varsayılanlarla doldurup RunConfig'e dönüştürür.
Yapısal hatalar ConfigurationError, değer hataları ValidationError olarak bildirilir.
"""

import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
import logging

from ...application.dtos import (
    ComponentSpec,
    DomainSpec,
    EstimateSettings,
    InitialSpec,
    OutputSettings,
    PicardConfig,
    RunConfig,
    SolverSettings,
    StudySettings,
    SystemSpec,
    TimeSpec,
)
from ...core.result import try_result
from ...domain import AdjointMode, ConfigurationError, Exponent, Quadrature, Scheme, ValidationError

logger = logging.getLogger(__name__)


METHODS = ("marching", "picard")
SECTIONS = ("domain", "time", "system", "initial", "solver", "output", "study")


def config_hash(raw: Mapping[str, Any]) -> str:
    """Kanonik JSON'un sha256 özeti (anahtar sırası ve boşluklardan bağımsız)"""
    canonical = json.dumps(raw, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _expr(value: Any, where: str) -> str:
    """İfade alanı: metin veya sayı"""
    if isinstance(value, bool):
        raise ConfigurationError(f"{where}: ifade bekleniyor, alınan: {value!r}")
    if isinstance(value, (int, float)):
        return repr(float(value))
    if isinstance(value, str) and value.strip():
        return value
    raise ConfigurationError(f"{where}: ifade bekleniyor, alınan: {value!r}")


def _exponent(value: Any, where: str) -> str:
    try:
        return str(Exponent.parse(value if isinstance(value, str) else float(value)))
    except (TypeError, ValueError) as e:
        raise ValidationError(f"{where}: geçersiz üs {value!r}") from e


def _section(raw: Mapping[str, Any], name: str, required: bool = True) -> Dict[str, Any]:
    value = raw.get(name)
    if value is None:
        if required:
            raise ConfigurationError(f"Yapılandırmada '{name}' bölümü eksik")
        return {}
    if not isinstance(value, Mapping):
        raise ConfigurationError(f"'{name}' bir nesne olmalıdır")
    return dict(value)


def _require(section: Mapping[str, Any], key: str, where: str) -> Any:
    if key not in section:
        raise ConfigurationError(f"{where}.{key} eksik")
    return section[key]


def _matrix(value: Any, n: int, where: str) -> Tuple[Tuple[str, ...], ...]:
    if value is None:
        return tuple(tuple("0" for _ in range(n)) for _ in range(n))
    if not isinstance(value, Sequence) or isinstance(value, str) or len(value) != n:
        raise ConfigurationError(f"{where}: {n}×{n} matris bekleniyor")
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, Sequence) or isinstance(row, str) or len(row) != n:
            raise ConfigurationError(f"{where}[{i}]: {n} elemanlı satır bekleniyor")
        rows.append(tuple(_expr(v, f"{where}[{i}]") for v in row))
    return tuple(rows)


def _vector(value: Any, length: int, where: str, default: str = "0") -> Tuple[str, ...]:
    if value is None:
        return tuple(default for _ in range(length))
    if isinstance(value, (str, int, float)) and length == 1:
        return (_expr(value, where),)
    if not isinstance(value, Sequence) or isinstance(value, str) or len(value) != length:
        raise ConfigurationError(f"{where}: {length} elemanlı liste bekleniyor")
    return tuple(_expr(v, f"{where}[{i}]") for i, v in enumerate(value))


def _domain(raw: Mapping[str, Any]) -> DomainSpec:
    section = _section(raw, "domain")
    extents = _require(section, "extents", "domain")
    cells = _require(section, "cells", "domain")
    try:
        parsed_extents = tuple((float(lo), float(hi)) for lo, hi in extents)
        parsed_cells = tuple(int(c) for c in cells)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"domain: geçersiz extents/cells ({e})") from e
    if len(parsed_extents) != len(parsed_cells):
        raise ConfigurationError("domain: extents ve cells aynı uzunlukta olmalıdır")
    return DomainSpec(extents=parsed_extents, cells=parsed_cells)


def _time(raw: Mapping[str, Any]) -> TimeSpec:
    section = _section(raw, "time")
    try:
        return TimeSpec(T=float(_require(section, "T", "time")), dt=float(_require(section, "dt", "time")))
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"time: geçersiz değer ({e})") from e


def _system(raw: Mapping[str, Any], dim: int) -> SystemSpec:
    section = _section(raw, "system")
    components_raw = _require(section, "components", "system")
    if not isinstance(components_raw, Sequence) or not components_raw:
        raise ConfigurationError("system.components boş olmayan bir liste olmalıdır")
    n = int(section.get("n", len(components_raw)))
    if n != len(components_raw):
        raise ConfigurationError(f"system.n={n} ama {len(components_raw)} bileşen verildi")

    identity = tuple(tuple("1" if i == j else "0" for j in range(dim)) for i in range(dim))
    components: List[ComponentSpec] = []
    for k, comp in enumerate(components_raw):
        where = f"system.components[{k}]"
        if not isinstance(comp, Mapping):
            raise ConfigurationError(f"{where} bir nesne olmalıdır")
        a = identity if comp.get("a") is None else _matrix(comp["a"], dim, f"{where}.a")
        components.append(ComponentSpec(
            bc=str(comp.get("bc", "dirichlet")),
            a=a,
            a_first=_vector(comp.get("a_first"), dim, f"{where}.a_first"),
            b_first=_vector(comp.get("b_first"), dim, f"{where}.b_first"),
            d0=_expr(comp.get("d0", "0"), f"{where}.d0"),
        ))

    try:
        alpha0 = float(section.get("alpha0", 1.0))
        K_bound = float(section.get("K_bound", 1.0))
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"system: geçersiz alpha0/K_bound ({e})") from e
    return SystemSpec(
        n=n,
        alpha0=alpha0,
        K_bound=K_bound,
        components=tuple(components),
        c0=_matrix(section.get("c0"), n, "system.c0"),
        c1=_matrix(section.get("c1"), n, "system.c1"),
    )


def _initial(raw: Mapping[str, Any], n: int) -> InitialSpec:
    section = _section(raw, "initial")
    head = _vector(_require(section, "head", "initial"), n, "initial.head")
    tail_raw = section.get("tail")
    tail = None if tail_raw is None else _vector(tail_raw, n, "initial.tail")
    return InitialSpec(head=head, tail=tail, r=_exponent(section.get("r", "inf"), "initial.r"))


def _solver(raw: Mapping[str, Any]) -> SolverSettings:
    section = _section(raw, "solver", required=False)
    scheme = Scheme.parse(section.get("scheme", Scheme.CRANK_NICOLSON.value))
    quadrature = Quadrature.parse(section.get("quadrature", Quadrature.TRAPEZOID.value))
    method = str(section.get("method", "marching")).lower()
    if method not in METHODS:
        raise ValidationError(f"solver.method geçersiz: '{method}'. Mevcut: {list(METHODS)}")
    p = _exponent(section.get("p", "2"), "solver.p")

    picard_raw = dict(section.get("picard") or {})
    picard = PicardConfig(
        mu=None if picard_raw.get("mu") is None else float(picard_raw["mu"]),
        tol=float(picard_raw.get("tol", 1e-10)),
        max_iters=int(picard_raw.get("max_iters", 200)),
        quadrature=quadrature,
        adaptive=bool(picard_raw.get("adaptive", True)),
        p=p,
    )
    estimate_raw = dict(section.get("estimate") or {})
    estimate = EstimateSettings(
        samples=int(estimate_raw.get("samples", 4)),
        seed=int(estimate_raw.get("seed", 0)),
        power_iterations=int(estimate_raw.get("power_iterations", 20)),
    )
    return SolverSettings(
        scheme=scheme,
        quadrature=quadrature,
        method=method,
        adjoint_mode=AdjointMode.parse(section.get("adjoint_mode", AdjointMode.TRANSPOSE.value)),
        p=p,
        picard=picard,
        estimate=estimate,
    )


def _output(raw: Mapping[str, Any]) -> OutputSettings:
    section = _section(raw, "output", required=False)
    norms_q = section.get("norms_q", ["2"])
    if not isinstance(norms_q, Sequence) or isinstance(norms_q, str) or not norms_q:
        raise ConfigurationError("output.norms_q boş olmayan bir liste olmalıdır")
    return OutputSettings(
        norms_q=tuple(_exponent(q, "output.norms_q") for q in norms_q),
        snapshots=bool(section.get("snapshots", False)),
    )


def _study(raw: Mapping[str, Any]) -> Optional[StudySettings]:
    section = _section(raw, "study", required=False)
    if not section:
        return None
    defaults = StudySettings()
    window = section.get("window")
    r0 = section.get("r0")
    return StudySettings(
        ms=tuple(int(m) for m in section.get("ms", defaults.ms)),
        amp=float(section.get("amp", defaults.amp)),
        mode=str(section.get("mode", defaults.mode)),
        targets=tuple(str(t) for t in section.get("targets", defaults.targets)),
        q=_exponent(section.get("q", defaults.q), "study.q"),
        variant=str(section.get("variant", defaults.variant)),
        window=None if window is None else (float(window[0]), float(window[1])),
        r0=None if r0 is None else _exponent(r0, "study.r0"),
        p=_exponent(section.get("p", defaults.p), "study.p"),
        slack=float(section.get("slack", defaults.slack)),
        final_ratio=float(section.get("final_ratio", defaults.final_ratio)),
        condition_policy=str(section.get("condition_policy", defaults.condition_policy)),
        solver=str(section.get("solver", defaults.solver)).lower(),
    )


class RunConfigLoader:
    """
    JSON RunConfig yükleyici.

    Kullanım:
        result = RunConfigLoader().load("run.json")
        if result.is_ok:
            config = result.value
    """

    def parse(self, raw: Mapping[str, Any], source_path: Optional[str] = None) -> RunConfig:
        """
        Sözlükten RunConfig.

        Raises:
            ConfigurationError: Eksik bölüm veya yanlış yapı
            ValidationError: Geçersiz değer
        """
        if not isinstance(raw, Mapping):
            raise ConfigurationError("Yapılandırma kökü bir JSON nesnesi olmalıdır")
        unknown = sorted(set(raw) - set(SECTIONS))
        if unknown:
            logger.warning(f"Bilinmeyen yapılandırma bölümleri yok sayılıyor: {unknown}")

        try:
            domain = _domain(raw)
            system = _system(raw, len(domain.cells))
            config = RunConfig(
                domain=domain,
                time=_time(raw),
                system=system,
                initial=_initial(raw, system.n),
                solver=_solver(raw),
                output=_output(raw),
                study=_study(raw),
                config_hash=config_hash(raw),
                source_path=source_path,
            )
        except (TypeError, KeyError) as e:
            raise ConfigurationError(f"Yapılandırma okunamadı: {e}") from e
        except ValueError as e:
            raise ValidationError(str(e)) from e
        logger.info(f"Yapılandırma yüklendi: {source_path or '<dict>'} (hash={config.config_hash[:12]})")
        return config

    @try_result(ConfigurationError, ValidationError)
    def load(self, path: str) -> RunConfig:
        """JSON dosyasından RunConfig; hatalar Result.fail olarak döner"""
        target = Path(path)
        if not target.is_file():
            raise ConfigurationError(f"Yapılandırma dosyası bulunamadı: {path}")
        try:
            raw = json.loads(target.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Geçersiz JSON: {path}", str(e)) from e
        return self.parse(raw, str(target))
