# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""Terminal output helpers with ASCII fallbacks."""

import sys
from functools import lru_cache


@lru_cache(maxsize=1)
def supports_unicode() -> bool:
    """Check whether stdout can encode the icons used in reports."""
    try:
        encoding = getattr(sys.stdout, "encoding", None) or ""
        if encoding.lower().replace("-", "") in ("utf8", "utf16", "utf32"):
            return True
        if hasattr(sys.stdout, "buffer"):
            "█".encode(encoding)
            return True
    except (UnicodeEncodeError, LookupError, AttributeError):
        pass
    return False


# Icon to ASCII fallback mapping
ICON_FALLBACKS = {
    # Status
    "✅": "[OK]",
    "❌": "[X]",
    "⚠️": "[!]",
    # Reports
    "🧠": "[MEM]",
    "📈": "[RUN]",
    "🎯": "[*]",
    "📁": "[D]",
    # Bars
    "█": "#",
    "░": "-",
    "•": "*",
}


def safe_text(text: str) -> str:
    """Replace icons with ASCII when the terminal cannot show them."""
    if supports_unicode():
        return text
    for icon, fallback in ICON_FALLBACKS.items():
        text = text.replace(icon, fallback)
    return text


def safe_print(*args, file=None, **kwargs) -> None:
    """print() with icon fallback."""
    print(*(safe_text(str(arg)) for arg in args), file=file, **kwargs)


def get_icon(icon: str, ascii_fallback: str | None = None) -> str:
    """The icon, or its ASCII stand-in on terminals without Unicode."""
    if supports_unicode():
        return icon
    if ascii_fallback is not None:
        return ascii_fallback
    return ICON_FALLBACKS.get(icon, icon)


def bar(fraction: float, width: int = 20) -> str:
    """Horizontal fill bar for a fraction in [0, 1]."""
    fraction = min(max(fraction, 0.0), 1.0)
    filled = round(fraction * width)
    return get_icon("█") * filled + get_icon("░") * (width - filled)
