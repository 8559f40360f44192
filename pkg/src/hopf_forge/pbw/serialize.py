"""JSON forms of algebra elements."""
from __future__ import annotations

from ..qfield import scalar_from_json, scalar_to_json
from .algebra import Algebra, AlgebraError, Element, get_algebra


def mode_to_json(algebra: Algebra) -> dict:
    if algebra.l is None:
        return {"kind": "Generic"}
    return {"kind": "RootOfUnity", "l": algebra.l}


def algebra_from_json(kind: str, mode) -> Algebra:
    if not isinstance(mode, dict) or mode.get("kind") not in ("Generic", "RootOfUnity"):
        raise AlgebraError("bad mode JSON")
    return get_algebra(kind, None if mode["kind"] == "Generic" else int(mode["l"]))


def mono_to_json(m, algebra: Algebra) -> dict:
    out = {"F": list(m[0:3]), "K": list(m[3:5])}
    if algebra.has_tilde:
        out["Kt"] = list(m[5:7])
    out["E"] = list(m[7:10])
    return out


def mono_from_json(d: dict, algebra: Algebra):
    try:
        t = [int(x) for x in d["F"]]
        r = [int(x) for x in d["K"]]
        rt = [int(x) for x in d.get("Kt", [0, 0])]
        s = [int(x) for x in d["E"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise AlgebraError(f"bad monomial JSON: {exc}") from None
    if len(t) != 3 or len(r) != 2 or len(rt) != 2 or len(s) != 3:
        raise AlgebraError("bad monomial JSON: wrong lengths")
    m = tuple(t + r + rt + s)
    if not algebra.is_legal_mono(m):
        raise AlgebraError(f"monomial {m} is not legal in {algebra.kind}")
    return m


def element_to_json(x: Element) -> dict:
    alg = x.algebra
    return {
        "algebra": alg.kind,
        "mode": mode_to_json(alg),
        "terms": [dict(mono_to_json(m, alg), coeff=scalar_to_json(c)) for m, c in x.sorted_terms()],
    }


def element_from_json(data: dict) -> Element:
    if not isinstance(data, dict) or "algebra" not in data or "terms" not in data:
        raise AlgebraError("bad element JSON")
    alg = algebra_from_json(data["algebra"], data.get("mode"))
    terms = {}
    for t in data["terms"]:
        m = mono_from_json(t, alg)
        c = scalar_from_json(t["coeff"])
        if c.field is not alg.field:
            raise AlgebraError("coefficient field does not match the algebra mode")
        if m in terms:
            raise AlgebraError("duplicate monomial in element JSON")
        terms[m] = c
    return Element(alg, terms)
