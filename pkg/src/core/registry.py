"""
Core - Generic Plugin Registry
Doğrulama paketleri ve komut use case'leri için ortak kayıt/keşif tabanı.
Alt sınıflar yalnızca taranacak paketi ve taban sınıfın yolunu bildirir.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import ClassVar, Dict, FrozenSet, Generic, List, Optional, Type, TypeVar
import importlib
import logging
import pkgutil

logger = logging.getLogger(__name__)

T = TypeVar('T')


@dataclass(frozen=True)
class PluginMetadata:
    """Plugin meta bilgileri"""
    name: str
    version: str = "1.0.0"
    description: str = ""
    tags: FrozenSet[str] = field(default_factory=frozenset)
    priority: int = 0  # Küçük = listede önce

    def has_tag(self, tag: str) -> bool:
        return tag in self.tags


class PluginRegistry(Generic[T]):
    """
    Generic Plugin Registry (alt sınıf başına tek instance).

    Yeni registry:
        class SuiteRegistry(PluginRegistry):
            package = "src.application.suites"
            base_path = "src.application.suites.base_suite:VerificationSuite"

    Yeni plugin: taban sınıftan türet, get_metadata() yaz, pakete koy.
    """

    package: ClassVar[str] = ""
    # "modül:Sınıf"; döngüsel import olmaması için ilk keşifte çözülür
    base_path: ClassVar[str] = ""

    _instances: ClassVar[Dict[type, "PluginRegistry"]] = {}

    def __init__(self):
        self._plugins: Dict[str, Type[T]] = {}
        self._metadata: Dict[str, PluginMetadata] = {}
        self._base_class: Optional[Type[T]] = None

    @classmethod
    def get_instance(cls):
        """Alt sınıfın singleton instance'ı"""
        instance = PluginRegistry._instances.get(cls)
        if instance is None:
            instance = PluginRegistry._instances[cls] = cls()
        return instance

    @classmethod
    def reset(cls) -> None:
        """Registry'yi sıfırla (test için)"""
        instance = PluginRegistry._instances.pop(cls, None)
        if instance is not None:
            instance.clear()

    def base_class(self) -> Type[T]:
        if self._base_class is None:
            module_name, _, class_name = self.base_path.partition(":")
            self._base_class = getattr(importlib.import_module(module_name), class_name)
        return self._base_class

    def register(self, plugin_class: Type[T]) -> None:
        """Plugin sınıfını kaydet"""
        if not hasattr(plugin_class, 'get_metadata'):
            raise ValueError(f"{plugin_class.__name__} get_metadata() metoduna sahip değil")

        metadata: PluginMetadata = plugin_class.get_metadata()
        name = metadata.name

        if name in self._plugins and self._plugins[name] is not plugin_class:
            logger.warning(f"Plugin '{name}' zaten kayıtlı, üzerine yazılıyor")

        self._plugins[name] = plugin_class
        self._metadata[name] = metadata
        logger.debug(f"Plugin kaydedildi: {name} (v{metadata.version})")

    def discover(self) -> int:
        """
        Paketteki modülleri tara; somut (abstract olmayan) alt sınıfları kaydet.

        Returns:
            Keşfedilen plugin sayısı
        """
        base = self.base_class()
        try:
            package = importlib.import_module(self.package)
        except ImportError as e:
            logger.error(f"Plugin paketi bulunamadı: {self.package} - {e}")
            return 0

        discovered = set()
        for _, module_name, _ in pkgutil.iter_modules([str(Path(package.__file__).parent)]):
            if module_name.startswith('_'):
                continue
            module = importlib.import_module(f"{self.package}.{module_name}")
            for attr in vars(module).values():
                if (isinstance(attr, type)
                        and issubclass(attr, base)
                        and attr is not base
                        and not getattr(attr, '__abstractmethods__', None)):
                    self.register(attr)
                    discovered.add(attr)

        logger.debug(f"{len(discovered)} plugin keşfedildi ({self.package})")
        return len(discovered)

    def ensure_discovered(self) -> None:
        if not self._plugins:
            self.discover()

    def get(self, name: str, **kwargs) -> T:
        """
        Yeni plugin instance'ı oluştur.

        Raises:
            KeyError: Bilinmeyen plugin adı
        """
        if name not in self._plugins:
            raise KeyError(f"Plugin bulunamadı: '{name}'. Mevcut: {self.list_plugins()}")
        return self._plugins[name](**kwargs)

    def list_plugins(self) -> List[str]:
        """Kayıtlı plugin isimleri (öncelik, sonra ad sırasıyla)"""
        return sorted(self._plugins, key=lambda n: (self._metadata[n].priority, n))

    def get_metadata(self, name: str) -> Optional[PluginMetadata]:
        """Plugin meta bilgilerini al"""
        return self._metadata.get(name)

    def clear(self) -> None:
        self._plugins.clear()
        self._metadata.clear()
