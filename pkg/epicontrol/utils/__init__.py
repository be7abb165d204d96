# MIT License
# Copyright (c) 2025 Matt / Grain Ecosystem

"""Utility helpers."""

from epicontrol.utils.terminal import bar, get_icon, safe_print, safe_text, supports_unicode

__all__ = ["bar", "get_icon", "safe_print", "safe_text", "supports_unicode"]
