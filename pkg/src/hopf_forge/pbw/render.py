"""Text rendering of elements."""
from __future__ import annotations

from ..qfield.render import is_compound, render_scalar

_SLOTS = ("F1", "F12", "F2", "K1", "K2", "Kt1", "Kt2", "E1", "E12", "E2")


def render_mono(m) -> str:
    parts = []
    for name, e in zip(_SLOTS, m):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _term(c, m) -> tuple[bool, str]:
    """(negative?, text) for one term with the sign pulled out when simple."""
    body = render_mono(m)
    text = render_scalar(c)
    neg = False
    if not is_compound(text) and text.startswith("-"):
        neg, text = True, text[1:]
    if is_compound(text):
        text = f"({text})"
    if body == "1":
        return neg, text
    if text == "1":
        return neg, body
    return neg, f"{text}*{body}"


def render_terms(items) -> str:
    out = ""
    for m, c in items:
        neg, text = _term(c, m)
        if not out:
            out = ("-" if neg else "") + text
        else:
            out += (" - " if neg else " + ") + text
    return out or "0"


def render_element(x) -> str:
    return render_terms(x.sorted_terms())
