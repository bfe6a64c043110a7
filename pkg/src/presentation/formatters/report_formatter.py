"""
Report Formatter
Komut sonuçlarını terminal için düz metne çevirir (stdout).
"""

from typing import Iterable, List, Sequence

from ...application.dtos import CheckRecord, CommandResult


class ReportFormatter:
    """
    Komut çıktıları için builder.
    Tutarlı formatlama sağlar; başlık, ayraç, gövde.
    """

    SEPARATOR = "─" * 48
    STATUS = {0: "OK", 2: "CONFIG", 3: "SOLVER", 4: "CHECK FAILED"}

    @classmethod
    def success(cls, title: str, body: Sequence[str] = (), footer: str = "") -> str:
        """Başarı bloğu oluştur"""
        lines = [f"[OK] {title}", cls.SEPARATOR]
        lines.extend(body)
        if footer:
            lines.append("")
            lines.append(footer)
        return "\n".join(lines)

    @classmethod
    def error(cls, title: str, details: Sequence[str] = (), suggestion: str = "") -> str:
        """Hata bloğu oluştur"""
        lines = [f"[{title}]", cls.SEPARATOR]
        lines.extend(details)
        if suggestion:
            lines.append("")
            lines.append(f"İpucu: {suggestion}")
        return "\n".join(lines)

    @classmethod
    def checks(cls, records: Iterable[CheckRecord]) -> List[str]:
        """Kontrol tablosu: ad, ölçülen, sınır, durum"""
        records = list(records)
        if not records:
            return []
        width = max(len(r.check) for r in records)
        lines = [f"{'kontrol':<{width}}  {'ölçülen':>12}  {'sınır':>12}  durum"]
        for r in records:
            status = "geçti" if r.passed else "KALDI"
            lines.append(f"{r.check:<{width}}  {r.measured:>12.4e}  {r.theoretical:>12.4e}  {status}")
        return lines

    @classmethod
    def command(cls, name: str, result: CommandResult) -> str:
        """CommandResult'ı çıkış koduna göre biçimlendir"""
        body = list(result.summary) + cls.checks(result.checks)
        footer = "\n".join(f"Yazıldı: {path}" for path in result.outputs)
        if result.success:
            return cls.success(name, body, footer)
        status = cls.STATUS.get(result.exit_code, str(result.exit_code))
        suggestion = "Yapılandırma dosyasını ve varsayımları kontrol edin" if result.exit_code == 2 else ""
        details = body + ([footer] if footer else [])
        return cls.error(f"{name}: {status} (çıkış kodu {result.exit_code})", details, suggestion)
