"""The hopf-forge command line.

Every command computes its whole result before printing anything, so a
failure never leaves partial output.  Errors go to stderr as JSON and the
exit status is 2 (usage, parse or input errors) or 1 (a check failed).
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from .. import __version__
from ..pbw import AlgebraError, element_from_json, element_to_json, get_algebra
from ..pbw.serialize import mode_to_json, mono_to_json
from ..qfield import field_for, render_scalar, scalar_from_json, scalar_to_json
from .parser import ParseError, parse, parse_scalar


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message)


def cap_override(default: int) -> int:
    raw = os.environ.get("HOPF_FORGE_CAP")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HOPF_FORGE_CAP must be an integer, got {raw!r}") from None


# -- argument plumbing ------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--mode", choices=["generic"], default=argparse.SUPPRESS)
    p.add_argument("--l", type=int, default=argparse.SUPPRESS, help="odd l >= 3: work at q = zeta_l")
    p.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    return p


def _l_of(args) -> int | None:
    l = getattr(args, "l", None)
    if l is not None and getattr(args, "mode", None) == "generic":
        raise UsageError("--mode generic and --l are exclusive")
    if l is not None and (l < 3 or l % 2 == 0):
        raise UsageError("--l must be odd and >= 3")
    return l


def _need_l(args) -> int:
    l = _l_of(args)
    if l is None:
        raise UsageError(f"{args.command} needs --l")
    return l


def _algebra(args, default_generic="U", default_root="u"):
    l = _l_of(args)
    kind = getattr(args, "algebra", None) or (default_generic if l is None else default_root)
    return get_algebra(kind, l)


def _parse(text: str, alg):
    return parse(text, alg, cap_override(64))


# -- output helpers ---------------------------------------------------------------------


def tensor_to_json(t) -> dict:
    a, b = t.algebras[0], t.algebras[-1]
    terms = []
    for k, c in t.sorted_terms():
        terms.append({"left": mono_to_json(k[0], a), "right": mono_to_json(k[1], b), "coeff": scalar_to_json(c)})
    return {"algebras": [a.kind, b.kind], "mode": mode_to_json(a), "terms": terms}


class Result:
    """Text lines plus a JSON payload; ``ok`` False makes the exit status 1."""

    def __init__(self, text, data, ok: bool = True):
        self.text = text if isinstance(text, str) else "\n".join(text)
        self.data = data
        self.ok = ok


def _yn(b: bool) -> str:
    return "yes" if b else "no"


# -- element commands -------------------------------------------------------------------


def cmd_nf(args):
    x = _parse(args.expr, _algebra(args))
    return Result(str(x), {"element": element_to_json(x), "text": str(x)})


def cmd_mul(args):
    alg = _algebra(args)
    x = _parse(args.left, alg) * _parse(args.right, alg)
    return Result(str(x), {"element": element_to_json(x), "text": str(x)})


def cmd_delta(args):
    from ..hopf import comultiply

    t = comultiply(_parse(args.expr, _algebra(args)))
    return Result(str(t), {"tensor": tensor_to_json(t), "text": str(t)})


def cmd_antipode(args):
    from ..hopf import antipode

    x = antipode(_parse(args.expr, _algebra(args)))
    return Result(str(x), {"element": element_to_json(x), "text": str(x)})


def cmd_counit(args):
    from ..hopf import counit

    c = counit(_parse(args.expr, _algebra(args)))
    return Result(render_scalar(c), {"scalar": scalar_to_json(c), "text": render_scalar(c)})


def cmd_pair(args):
    from ..hopf import get_pairing, pairing_inverse

    l = _need_l(args)
    x = _parse(args.x, get_algebra("uGeq0", l))
    y = _parse(args.y, get_algebra("uLeq0", l))
    if args.inverse:
        c = pairing_inverse(x, y, args.normalization)
    else:
        c = get_pairing(l, args.normalization).pair(x, y)
    return Result(render_scalar(c), {"scalar": scalar_to_json(c), "text": render_scalar(c), "normalization": args.normalization})


def cmd_double_mul(args):
    from ..hopf import double_multiply, double_pair, to_dphi

    l = _need_l(args)
    plus, minus = get_algebra("uGeq0", l), get_algebra("uLeq0", l)
    p1 = double_pair(_parse(args.a, plus), _parse(args.x, minus))
    p2 = double_pair(_parse(args.b, plus), _parse(args.y, minus))
    t = double_multiply(p1, p2, args.normalization)
    d = to_dphi(t)
    lines = [f"product: {t}", f"in Dphi: {d}"]
    return Result(lines, {"tensor": tensor_to_json(t), "dphi": element_to_json(d), "normalization": args.normalization})


def _central(l: int, powers):
    from ..hopf import CentralParameter

    return CentralParameter.from_powers(l, powers[0], powers[1])


def cmd_pi_z(args):
    from ..hopf import eps_z_value, pi_z

    l = _need_l(args)
    z = _central(l, args.z)
    d = _parse(args.expr, get_algebra("Dphi", l))
    x = pi_z(d, z)
    e = eps_z_value(d, z)
    lines = [f"pi_z: {x}", f"eps_z: {render_scalar(e)}"]
    return Result(lines, {"pi_z": element_to_json(x), "eps_z": scalar_to_json(e)})


# -- module commands --------------------------------------------------------------------


def _character(args, prefix="lam"):
    from ..modules import Character

    f = field_for(None)
    return Character(parse_scalar(getattr(args, f"{prefix}1"), f), parse_scalar(getattr(args, f"{prefix}2"), f))


def cmd_verma(args):
    from ..modules import (
        check_filtration_component,
        check_highest_weight,
        hw_vector_vn,
        weight_space_dimension,
    )

    if _l_of(args) is not None:
        raise UsageError("verma works over Q(q); drop --l")
    char = _character(args)
    v = hw_vector_vn(char, args.n)
    hw = check_highest_weight(v)
    lines = [f"v_{args.n} = {v}", f"highest weight: {_yn(hw)}"]
    data = {"n": args.n, "vector": str(v), "highest_weight": hw}
    ok = hw
    if args.weight:
        i, j = args.weight
        d = weight_space_dimension(char, i, j)
        lines.append(f"dim of weight space ({i}, {j}): {d}")
        data["weight_space_dimension"] = d
    if args.filtration:
        t2, t3 = args.filtration
        good = check_filtration_component(char, t2, t3)
        lines.append(f"filtration component ({t2}, {t3}) isomorphic: {_yn(good)}")
        data["filtration_component"] = good
        ok = ok and good
    return Result(lines, data, ok)


def _module(args):
    """V(m1, m2) over u, the Verma module of u, or L(lambda) over U."""
    from ..modules import build_L, build_V_u, build_verma_u, module_from_json

    if getattr(args, "module", None):
        return module_from_json(_load_json(args.module))
    l = _l_of(args)
    if l is None:
        if args.lam1 is None or args.lam2 is None:
            raise UsageError("generic mode needs --lam1 and --lam2 (or --module)")
        return build_L(_character(args))
    if args.m1 is None or args.m2 is None:
        raise UsageError("root mode needs --m1 and --m2")
    if getattr(args, "verma", False):
        return build_verma_u(args.m1, args.m2, l)
    return build_V_u(args.m1, args.m2, l)


def _module_summary(M) -> tuple[list[str], dict]:
    from ..modules import find_hw_vectors, is_simple, module_axiom_check

    bad = module_axiom_check(M)
    hw = find_hw_vectors(M)
    simple = is_simple(M)
    lines = [f"dimension: {M.dim}", f"relations failing: {', '.join(bad) if bad else 'none'}", f"simple: {_yn(simple)}"]
    for w, vecs in hw:
        lines.append(f"highest weight {w}: multiplicity {len(vecs)}")
    data = {
        "dimension": M.dim,
        "failing_relations": bad,
        "simple": simple,
        "highest_weights": [{"weight": [scalar_to_json(w.l1), scalar_to_json(w.l2)], "text": str(w), "multiplicity": len(v)} for w, v in hw],
    }
    return lines, data


def cmd_simple(args):
    from ..modules import module_to_json

    M = _module(args)
    lines, data = _module_summary(M)
    data["module"] = module_to_json(M)
    return Result(lines, data, not data["failing_relations"])


def cmd_hwv(args):
    from ..modules import find_hw_vectors

    M = _module(args)
    hw = find_hw_vectors(M)
    lines = []
    out = []
    for w, vecs in hw:
        for v in vecs:
            support = " + ".join(f"({render_scalar(c)})*{M.labels[i]}" for i, c in enumerate(v) if c)
            lines.append(f"{w}: {support}")
        out.append({"weight": str(w), "vectors": [[scalar_to_json(c) for c in v] for v in vecs]})
    if not lines:
        lines = ["no highest weight vectors"]
    return Result(lines, {"dimension": M.dim, "highest_weight_vectors": out})


def cmd_tensor(args):
    from ..modules import Character, build_L, build_V_u, module_to_json, tensor

    l = _l_of(args)
    if l is None:
        f = field_for(None)
        M = build_L(Character(parse_scalar(args.left[0], f), parse_scalar(args.left[1], f)))
        N = build_L(Character(parse_scalar(args.right[0], f), parse_scalar(args.right[1], f)))
    else:
        try:
            a = [int(v) for v in args.left + args.right]
        except ValueError:
            raise UsageError("root mode takes integer weights m1 m2") from None
        M, N = build_V_u(a[0], a[1], l), build_V_u(a[2], a[3], l)
    T = tensor(M, N)
    lines, data = _module_summary(T)
    if args.format == "json" and args.with_module:
        data["module"] = module_to_json(T)
    return Result(lines, data, not data["failing_relations"])


def cmd_cg(args):
    from ..modules import Character, clebsch_gordan

    if _l_of(args) is not None:
        raise UsageError("cg works over Q(q); drop --l")
    f = field_for(None)
    lam = Character(f.q_pow(args.m) * args.eps1, parse_scalar(args.lam2, f))
    mu = Character(f.q_pow(args.n) * args.eps2, parse_scalar(args.mu2, f))
    rep = clebsch_gordan(lam, mu)
    lines = [f"lambda = {lam}, mu = {mu}"]
    for w, mult, dim in rep.factors:
        lines.append(f"factor {w}: multiplicity {mult}, dimension {dim}")
    lines.append("expected: " + ", ".join(str(e) for e in rep.expected))
    lines += [f"{k}: {_yn(v)}" for k, v in rep.flags.items()]
    data = {
        "factors": [{"weight": str(w), "multiplicity": m, "dimension": d} for w, m, d in rep.factors],
        "expected": [str(e) for e in rep.expected],
        "flags": rep.flags,
        "ok": rep.ok,
    }
    return Result(lines, data, rep.ok)


def cmd_pullback(args):
    from ..hopf import eps_z_relation_failures, pi_z_relation_failures
    from ..modules import module_axiom_check, pullback_z, twist_check

    l = _need_l(args)
    z = _central(l, args.z)
    M = _module(args)
    Mz = pullback_z(M, z)
    bad = module_axiom_check(Mz)
    twist = twist_check(M, z)
    pi_bad = pi_z_relation_failures(z)
    eps_bad = eps_z_relation_failures(z)
    lines = [
        f"z = ({z.z1}, {z.z2})",
        f"pi_z relations failing: {', '.join(pi_bad) if pi_bad else 'none'}",
        f"eps_z relations failing: {', '.join(eps_bad) if eps_bad else 'none'}",
        f"Dphi relations failing on M_z: {', '.join(bad) if bad else 'none'}",
        f"M_z = eps_z (x) M_1: {_yn(twist)}",
    ]
    ok = not bad and twist and not pi_bad and not eps_bad
    data = {"pi_z_failures": pi_bad, "eps_z_failures": eps_bad, "module_failures": bad, "twist": twist, "ok": ok}
    return Result(lines, data, ok)


# -- idempotents ------------------------------------------------------------------------


def _load_json(src: str):
    if src == "-":
        text = sys.stdin.read()
    elif os.path.exists(src):
        with open(src) as fh:
            text = fh.read()
    else:
        text = src
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc.msg} at line {exc.lineno}, column {exc.colno}") from None


def _solution_json(s) -> dict:
    return {
        "i": s.i,
        "l": s.element.algebra.l,
        "coeffs": [scalar_to_json(c) for c in s.coeffs],
        "coeffs_text": [render_scalar(c) for c in s.coeffs],
        "element": element_to_json(s.element),
    }


def cmd_idem_solve(args):
    from ..idempotents import DEFAULT_MAX_L, solve_idempotents

    l = _need_l(args)
    sols = solve_idempotents(args.i, l, cap_override(DEFAULT_MAX_L))
    lines = [f"{len(sols)} solutions for i = {args.i % l}, l = {l}"]
    for s in sols:
        lines.append(f"({', '.join(render_scalar(c) for c in s.coeffs)}): {s.element}")
    return Result(lines, {"solutions": [_solution_json(s) for s in sols]})


def cmd_idem_verify(args):
    from ..idempotents import build_system, idempotent_element, is_primitive

    data = _load_json(args.json)
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    system_ok = None
    try:
        if "coeffs" in data:
            l, i = int(data["l"]), int(data["i"])
            coeffs = [scalar_from_json(c) for c in data["coeffs"]]
            if len(coeffs) != l:
                raise UsageError(f"need {l} coefficients")
            system_ok = build_system(i, l).is_solution(coeffs)
            e = idempotent_element(i, coeffs, l)
        else:
            e = element_from_json(data.get("element", data))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"bad idempotent JSON: {exc}") from None
    idem = e * e == e
    prim = is_primitive(e) if idem and e.algebra.kind == "u1" else None
    lines = [f"element: {e}", f"idempotent: {_yn(idem)}"]
    if system_ok is not None:
        lines.append(f"solves the quadratic system: {_yn(system_ok)}")
    if prim is not None:
        lines.append(f"primitive: {_yn(prim)}")
    ok = idem and system_ok is not False
    return Result(lines, {"idempotent": idem, "solves_system": system_ok, "primitive": prim, "ok": ok}, ok)


def cmd_idem_decompose(args):
    from ..idempotents import DEFAULT_MAX_L, decompose_regular_u1

    l = _need_l(args)
    d = decompose_regular_u1(l, cap_override(DEFAULT_MAX_L))
    lines = [f"u1 at l = {l}: {len(d.summands)} summands"]
    for s in d.summands:
        coeffs = ", ".join(render_scalar(c) for c in s.coeffs)
        lines.append(f"i={s.i} a=({coeffs}) dim={s.ideal_dim} primitive={_yn(s.primitive)} head=V({s.head[0] if len(s.head) == 1 else s.head})  {s.element}")
    lines += [f"{k}: {_yn(v)}" for k, v in d.flags.items()]
    data = {
        "l": l,
        "summands": [
            dict(_solution_json_raw(s), ideal_dim=s.ideal_dim, primitive=s.primitive, head=s.head) for s in d.summands
        ],
        "flags": d.flags,
        "ok": d.ok,
    }
    return Result(lines, data, d.ok)


def _solution_json_raw(s) -> dict:
    return {
        "i": s.i,
        "coeffs": [scalar_to_json(c) for c in s.coeffs],
        "coeffs_text": [render_scalar(c) for c in s.coeffs],
        "element": element_to_json(s.element),
    }


def cmd_congruence(args):
    from ..idempotents import congruence_holds, congruence_solve

    l = _need_l(args)
    if (args.m1 is None) != (args.m2 is None):
        raise UsageError("give both --m1 and --m2, or neither for every target")
    targets = [(args.m1, args.m2)] if args.m1 is not None else [(a, b) for a in range(l) for b in range(l)]
    rows = []
    ok = True
    for m1, m2 in targets:
        t2, t3 = congruence_solve(m1, m2, l)
        good = congruence_holds(t2, t3, m1, m2, l)
        ok = ok and good
        rows.append({"m1": m1, "m2": m2, "t2": t2, "t3": t3, "holds": good})
    lines = [f"(m1, m2) = ({r['m1']}, {r['m2']}): (t2, t3) = ({r['t2']}, {r['t3']}) {'ok' if r['holds'] else 'FAIL'}" for r in rows]
    return Result(lines, {"l": l, "solutions": rows, "ok": ok}, ok)


# -- selftest ---------------------------------------------------------------------------


def cmd_selftest(args):
    from ..hopf import hopf_axiom_failures, presentation_mismatches
    from ..idempotents import congruence_holds, congruence_solve, decompose_regular_u1
    from ..pbw import defining_relations, normal_form, oracle_normal_form

    seed = getattr(args, "seed", None) or 0
    rng = random.Random(seed)
    checks = []

    def run(name, fn):
        t = time.perf_counter()
        try:
            good = bool(fn())
        except Exception as exc:  # reported, not raised: selftest keeps going
            good = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        checks.append((name, good, time.perf_counter() - t))

    def oracle(l):
        alg = get_algebra("U", l)
        letters = ["E1", "E2", "F1", "F2", "K1", "K2"]
        for _ in range(40):
            w = [rng.choice(letters) for _ in range(rng.randint(0, 6))]
            if normal_form(w, alg) != oracle_normal_form(w, alg):
                return False
        return True

    run("relations vanish in U", lambda: all(x.is_zero() for x in defining_relations(get_algebra("U")).values()))
    run("relations vanish in u (l=3)", lambda: all(x.is_zero() for x in defining_relations(get_algebra("u", 3)).values()))
    run("oracle agrees on random words (generic)", lambda: oracle(None))
    run("oracle agrees on random words (l=3)", lambda: oracle(3))
    run("Hopf axioms in u (l=3)", lambda: not hopf_axiom_failures(get_algebra("u", 3), 10, seed))
    run("double product matches Dphi (symmetric pairing)", lambda: not presentation_mismatches(3, "symmetric"))
    run("u1 decomposition (l=3)", lambda: decompose_regular_u1(3).ok)
    run("congruences (l=5)", lambda: all(congruence_holds(*congruence_solve(a, b, 5), a, b, 5) for a in range(5) for b in range(5)))
    ok = all(g for _, g, _ in checks)
    lines = [f"{'PASS' if g else 'FAIL'} {name} ({dt:.2f}s)" for name, g, dt in checks]
    data = {"checks": [{"name": n, "pass": g} for n, g, _ in checks], "ok": ok, "version": __version__}
    return Result(lines, data, ok)


# -- parser construction ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    p = _Parser(prog="hopf-forge", description="Exact computations in the A2 x A2 quantum group with one linking relation.", parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    def algebra_flag(sp):
        sp.add_argument("--algebra", choices=["U", "u", "u1", "uGeq0", "uLeq0", "Dphi"], default=None)

    def norm_flag(sp):
        sp.add_argument("--normalization", choices=["printed", "symmetric"], default="printed")

    def module_flags(sp):
        sp.add_argument("--m1", type=int)
        sp.add_argument("--m2", type=int)
        sp.add_argument("--lam1")
        sp.add_argument("--lam2")
        sp.add_argument("--module", help="MatrixModule JSON (file, literal or - for stdin)")

    sp = add("nf", cmd_nf, "normal form of an expression")
    algebra_flag(sp)
    sp.add_argument("expr")
    sp = add("mul", cmd_mul, "product of two expressions")
    algebra_flag(sp)
    sp.add_argument("left")
    sp.add_argument("right")
    for name, fn in (("delta", cmd_delta), ("antipode", cmd_antipode), ("counit", cmd_counit)):
        sp = add(name, fn, f"{name} of an expression")
        algebra_flag(sp)
        sp.add_argument("expr")
    sp = add("pair", cmd_pair, "skew pairing phi(x, y), x in uGeq0, y in uLeq0")
    norm_flag(sp)
    sp.add_argument("--inverse", action="store_true", help="phi^-1(x, y) = phi(S(x), y)")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = add("double-mul", cmd_double_mul, "(a (x) x)(b (x) y) in the double crossproduct")
    norm_flag(sp)
    for name in ("a", "x", "b", "y"):
        sp.add_argument(name)
    sp = add("pi-z", cmd_pi_z, "pi_z and eps_z of a Dphi element")
    sp.add_argument("--z", type=int, nargs=2, default=[0, 0], metavar=("K1", "K2"), help="z = (q^K1, q^K2)")
    sp.add_argument("expr")
    sp = add("verma", cmd_verma, "the highest weight vector v_n of M(lambda)")
    sp.add_argument("--lam1", required=True)
    sp.add_argument("--lam2", required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--weight", type=int, nargs=2, metavar=("I", "J"))
    sp.add_argument("--filtration", type=int, nargs=2, metavar=("T2", "T3"))
    sp = add("simple", cmd_simple, "build V(m1, m2) over u or L(lambda) over U and check it")
    module_flags(sp)
    sp = add("hwv", cmd_hwv, "highest weight vectors of a module")
    module_flags(sp)
    sp.add_argument("--verma", action="store_true", help="use the Verma module M(m1, m2) of u")
    sp = add("tensor", cmd_tensor, "tensor product of two simple modules")
    sp.add_argument("--left", nargs=2, required=True)
    sp.add_argument("--right", nargs=2, required=True)
    sp.add_argument("--with-module", action="store_true")
    sp = add("cg", cmd_cg, "Clebsch-Gordan decomposition of L(lambda) (x) L(mu)")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--eps1", type=int, choices=[1, -1], default=1)
    sp.add_argument("--eps2", type=int, choices=[1, -1], default=1)
    sp.add_argument("--lam2", default="1")
    sp.add_argument("--mu2", default="1")
    sp = add("pullback", cmd_pullback, "pull a u-module back along pi_z and check the twist")
    module_flags(sp)
    sp.add_argument("--z", type=int, nargs=2, default=[0, 0], metavar=("K1", "K2"))

    idem = sub.add_parser("idem", parents=[common], help="idempotents of u1")
    isub = idem.add_subparsers(dest="idem_command", parser_class=_Parser)
    isub.required = True
    sp = isub.add_parser("solve", parents=[common])
    sp.add_argument("--i", type=int, required=True)
    sp.set_defaults(func=cmd_idem_solve)
    sp = isub.add_parser("verify", parents=[common])
    sp.add_argument("json", help="solution or element JSON (file, literal or - for stdin)")
    sp.set_defaults(func=cmd_idem_verify)
    sp = isub.add_parser("decompose-u1", parents=[common])
    sp.set_defaults(func=cmd_idem_decompose)

    sp = add("congruence", cmd_congruence, "solve (-t2 + t3, -t2 - 2 t3) = (m1, m2) mod l")
    sp.add_argument("--m1", type=int)
    sp.add_argument("--m2", type=int)
    add("selftest", cmd_selftest, "quick consistency checks")
    return p


# -- entry point ------------------------------------------------------------------------


def _error(exc: Exception, kind: str | None = None) -> dict:
    if isinstance(exc, ParseError):
        return {"error": exc.to_json()}
    return {"error": {"type": kind or type(exc).__name__, "message": str(exc)}}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.format = getattr(args, "format", None) or "text"
        res = args.func(args)
    except (UsageError, ParseError, AlgebraError, ValueError, ZeroDivisionError) as exc:
        kind = "UsageError" if isinstance(exc, UsageError) else None
        err.write(json.dumps(_error(exc, kind), sort_keys=True) + "\n")
        return 2
    if args.format == "json":
        payload = {"command": args.command if args.command != "idem" else f"idem {args.idem_command}", "ok": res.ok, "result": res.data}
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write(res.text + "\n")
    return 0 if res.ok else 1


def main(argv: list[str] | None = None):
    sys.exit(run(argv))
