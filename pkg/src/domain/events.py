"""
Domain Events
Uzun süren hesapların ilerleme olayları
"""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Optional
import uuid


@dataclass(frozen=True)
class DomainEvent:
    """Temel domain event"""
    event_id: str = field(default_factory=lambda: uuid.uuid4().hex)
    occurred_at: datetime = field(default_factory=datetime.now)


@dataclass(frozen=True)
class PicardSweepEvent(DomainEvent):
    """Bir Picard süpürmesi tamamlandığında tetiklenir"""
    iteration: int = 0
    distance: float = 0.0
    sup_increment: float = 0.0
    ratio: Optional[float] = None
    mu: float = 0.0


@dataclass(frozen=True)
class MuAdjustedEvent(DomainEvent):
    """Daralma gözlenmediğinde μ ikiye katlanır"""
    previous_mu: float = 0.0
    new_mu: float = 0.0
    reason: str = ""


@dataclass(frozen=True)
class StudyMemberEvent(DomainEvent):
    """Çalışma dizisinin bir üyesi (m) çözüldüğünde tetiklenir"""
    m: int = 0
    error: float = 0.0
    index: int = 0
    total: int = 0


@dataclass(frozen=True)
class CheckCompletedEvent(DomainEvent):
    """Bir doğrulama kontrolü tamamlandığında tetiklenir"""
    suite: str = ""
    check: str = ""
    passed: bool = True
    margin: float = 0.0
