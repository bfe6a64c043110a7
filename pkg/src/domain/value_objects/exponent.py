"""
Value Object: Exponent
Lebesgue üsleri (p, q, r, ξ, η) için tip güvenliği ve doğrulama sağlar.
1 ≤ p < ∞ veya p = ∞.
"""

from dataclasses import dataclass
import math
from typing import Union


_MIN_EXPONENT = 1.0
_INFINITY_TOKENS = {"inf", "infinity", "∞", "+inf"}


@dataclass(frozen=True)
class Exponent:
    """
    Lebesgue üssü Value Object'i.
    [1, ∞] aralığında bir değer alır ve immutable'dır.
    """

    value: float

    def __post_init__(self):
        try:
            value = float(self.value)
        except (TypeError, ValueError) as e:
            raise ValueError(f"Üs sayı olmalıdır, alınan: {self.value!r}") from e

        if math.isnan(value) or value < _MIN_EXPONENT:
            raise ValueError(f"Üs 1 veya daha büyük olmalıdır, alınan: {self.value}")

        object.__setattr__(self, "value", value)

    @classmethod
    def parse(cls, raw: Union[str, float, int, "Exponent"]) -> "Exponent":
        """String, sayı veya Exponent'ten oluştur ("inf" kabul edilir)"""
        if isinstance(raw, Exponent):
            return raw
        if isinstance(raw, str):
            token = raw.strip().lower()
            if token in _INFINITY_TOKENS:
                return cls(math.inf)
            try:
                return cls(float(token))
            except ValueError as e:
                raise ValueError(f"Geçersiz üs: {raw}") from e
        return cls(float(raw))

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)

    @property
    def reciprocal(self) -> float:
        """1/p (p = ∞ için 0)"""
        return 0.0 if self.is_infinite else 1.0 / self.value

    def conjugate(self) -> "Exponent":
        """Hölder eşleniği p' (1/p + 1/p' = 1)"""
        if self.is_infinite:
            return Exponent(1.0)
        if self.value == 1.0:
            return Exponent(math.inf)
        return Exponent(self.value / (self.value - 1.0))

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"{self.value:g}"
