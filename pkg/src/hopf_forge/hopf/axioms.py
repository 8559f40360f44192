"""Hopf algebra axioms checked on given elements."""
from __future__ import annotations

import random

from ..pbw import Element
from .coproduct import (
    antipode,
    antipode_on_leg,
    comultiply,
    counit,
    counit_on_leg,
    delta_on_leg,
    multiply_legs,
)


def single_axiom_failures(x: Element) -> list[str]:
    """Coassociativity, counit and antipode identities for one element."""
    bad = []
    d = comultiply(x)
    if delta_on_leg(d, 0) != delta_on_leg(d, 1):
        bad.append("coassociativity")
    if counit_on_leg(d, 0) != x:
        bad.append("counit (eps (x) id)")
    if counit_on_leg(d, 1) != x:
        bad.append("counit (id (x) eps)")
    unit = x.algebra.scalar(counit(x))
    if multiply_legs(antipode_on_leg(d, 0)) != unit:
        bad.append("antipode m(S (x) id)Delta")
    if multiply_legs(antipode_on_leg(d, 1)) != unit:
        bad.append("antipode m(id (x) S)Delta")
    return bad


def pair_axiom_failures(x: Element, y: Element) -> list[str]:
    """Delta and eps multiplicative, S anti-multiplicative."""
    bad = []
    xy = x * y
    if comultiply(xy) != comultiply(x) * comultiply(y):
        bad.append("Delta(xy) = Delta(x)Delta(y)")
    if counit(xy) != counit(x) * counit(y):
        bad.append("eps(xy) = eps(x)eps(y)")
    if antipode(xy) != antipode(y) * antipode(x):
        bad.append("S(xy) = S(y)S(x)")
    return bad


def random_elements(algebra, count: int, max_degree: int = 3, rng: random.Random | None = None, terms: int = 3) -> list[Element]:
    """Random combinations of generator words of length <= max_degree with small integer coefficients."""
    rng = rng or random.Random(0)
    names = algebra.generator_names()
    names += [g + "^-1" for g in names if g.startswith("K")]
    out = []
    for _ in range(count):
        x = algebra.zero()
        for _ in range(terms):
            word = [rng.choice(names) for _ in range(rng.randint(0, max_degree))]
            c = rng.choice([-2, -1, 1, 2, 3])
            x = x + algebra.word(word, c)
        out.append(x)
    return out


def hopf_axiom_failures(algebra, samples: int = 100, seed: int = 0) -> list[str]:
    """Run the single and pair axioms on generators and random elements."""
    rng = random.Random(seed)
    gens = algebra.generators()
    rand = random_elements(algebra, samples, 3, rng)
    bad = []
    for x in gens + rand:
        for name in single_axiom_failures(x):
            bad.append(f"{name} on {x}")
    pairs = [(a, b) for a in gens for b in gens]
    pairs += [(rand[k], rand[(k + 1) % len(rand)]) for k in range(len(rand))] if rand else []
    for a, b in pairs:
        for name in pair_axiom_failures(a, b):
            bad.append(f"{name} on ({a}, {b})")
    return bad

