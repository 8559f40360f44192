"""Characters of the group generated by K1, K2."""
from __future__ import annotations

from dataclasses import dataclass

from ..pbw.algebra import CARTAN
from ..qfield import GENERIC, Field, Scalar


@dataclass(frozen=True)
class Character:
    """lambda with lambda(K1) = l1, lambda(K2) = l2."""

    l1: Scalar
    l2: Scalar

    def __post_init__(self):
        if self.l1.is_zero() or self.l2.is_zero():
            raise ValueError("character values must be nonzero")
        if self.l1.field is not self.l2.field:
            raise ValueError("character values live in different fields")

    @property
    def field(self) -> Field:
        return self.l1.field

    @classmethod
    def of(cls, l1, l2, field: Field = GENERIC) -> "Character":
        return cls(field(l1), field(l2))

    def shift(self, e1: int, e2: int) -> "Character":
        """(q^e1 l1, q^e2 l2)."""
        f = self.field
        return Character(f.q_pow(e1) * self.l1, f.q_pow(e2) * self.l2)

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.l1 * other.l1, self.l2 * other.l2)

    def as_tuple(self) -> tuple[Scalar, Scalar]:
        return (self.l1, self.l2)

    def __str__(self):
        return f"({self.l1}, {self.l2})"


def weight_character(m1: int, m2: int, field: Field = GENERIC) -> Character:
    """i(m1 w1 + m2 w2): K_i -> q^((lambda, alpha_i)) with (w_i, alpha_j) = a_ij."""
    e1 = m1 * CARTAN[0][0] + m2 * CARTAN[1][0]
    e2 = m1 * CARTAN[0][1] + m2 * CARTAN[1][1]
    return Character(field.q_pow(e1), field.q_pow(e2))


def signed_q_power(x: Scalar, lo: int = 0, hi: int = 64) -> tuple[int, int] | None:
    """(eps, m) with x = eps q^m and lo <= m <= hi, or None."""
    f = x.field
    for m in range(lo, hi + 1):
        p = f.q_pow(m)
        if x == p:
            return (1, m)
        if x == -p:
            return (-1, m)
    return None
