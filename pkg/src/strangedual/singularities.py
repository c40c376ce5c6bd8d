"""Arnold's 14 exceptional unimodal singularities and their weight systems."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import NamedTuple, Sequence

from .errors import DomainError, UnknownNameError
from .exactalg import IntPoly


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[int, ...]
    h: int

    def __post_init__(self):
        if not self.weights or any(w <= 0 for w in self.weights) or self.h <= 0:
            raise DomainError(f"weights and degree must be positive: {self}")

    def __str__(self) -> str:
        return f"({','.join(map(str, self.weights))};{self.h})"


@dataclass(frozen=True)
class SingularityRecord:
    name: str
    ws: WeightSystem
    dolgachev: tuple[int, int, int]
    gabrielov: tuple[int, int, int]
    dual: str

    @property
    def subscript(self) -> int:
        return int(re.search(r"\d+$", self.name).group())

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "weights": list(self.ws.weights),
            "h": self.ws.h,
            "dolgachev": list(self.dolgachev),
            "gabrielov": list(self.gabrielov),
            "dual": self.dual,
        }


def _row(name, weights, h, delta, gamma, dual) -> SingularityRecord:
    return SingularityRecord(name, WeightSystem(weights, h), delta, gamma, dual)


# Z13, W13 and S11 are printed with a comma before the degree; stored as (a,b,c;h).
_TABLE: tuple[SingularityRecord, ...] = (
    _row("E12", (6, 14, 21), 42, (2, 3, 7), (2, 3, 7), "E12"),
    _row("E13", (4, 10, 15), 30, (2, 4, 5), (2, 3, 8), "Z11"),
    _row("Z11", (6, 8, 15), 30, (2, 3, 8), (2, 4, 5), "E13"),
    _row("E14", (3, 8, 12), 24, (3, 3, 4), (2, 3, 9), "Q10"),
    _row("Q10", (6, 8, 9), 24, (2, 3, 9), (3, 3, 4), "E14"),
    _row("Z12", (4, 6, 11), 22, (2, 4, 6), (2, 4, 6), "Z12"),
    _row("W12", (4, 5, 10), 20, (2, 5, 5), (2, 5, 5), "W12"),
    _row("Z13", (3, 5, 9), 18, (3, 3, 5), (2, 4, 7), "Q11"),
    _row("Q11", (4, 6, 7), 18, (2, 4, 7), (3, 3, 5), "Z13"),
    _row("W13", (3, 4, 8), 16, (3, 4, 4), (2, 5, 6), "S11"),
    _row("S11", (4, 5, 6), 16, (2, 5, 6), (3, 4, 4), "W13"),
    _row("Q12", (3, 5, 6), 15, (3, 3, 6), (3, 3, 6), "Q12"),
    _row("S12", (3, 4, 5), 13, (3, 4, 5), (3, 4, 5), "S12"),
    _row("U12", (3, 4, 4), 12, (4, 4, 4), (4, 4, 4), "U12"),
)


def table() -> list[SingularityRecord]:
    return list(_TABLE)


def lookup(name: str, records: Sequence[SingularityRecord] | None = None) -> SingularityRecord:
    for rec in _TABLE if records is None else records:
        if rec.name == name:
            return rec
    raise UnknownNameError(f"unknown singularity {name!r}")


def strange_dual(name: str, records: Sequence[SingularityRecord] | None = None) -> SingularityRecord:
    return lookup(lookup(name, records).dual, records)


def dual_pairs(records: Sequence[SingularityRecord] | None = None) -> list[tuple[str, ...]]:
    """Distinct dual pairs in table order; self-dual rows appear as singletons."""
    seen: set[str] = set()
    pairs = []
    for rec in _TABLE if records is None else records:
        if rec.name in seen:
            continue
        pair = (rec.name,) if rec.dual == rec.name else (rec.name, rec.dual)
        seen.update(pair)
        pairs.append(pair)
    return pairs


def table_json(records: Sequence[SingularityRecord] | None = None) -> str:
    return json.dumps([r.as_dict() for r in (_TABLE if records is None else records)])


def milnor_number(rec: SingularityRecord) -> int:
    return sum(rec.gabrielov)


def milnor_product(ws: WeightSystem) -> Fraction:
    """``prod(h/a_i - 1)``, exact; the Milnor number of an isolated quasi-homogeneous singularity."""
    return prod((Fraction(ws.h, a) - 1 for a in ws.weights), start=Fraction(1))


def gorenstein_parameter(weights: Sequence[int], h: int) -> int:
    if not weights:
        raise DomainError("empty weight list")
    return sum(weights) - h


class RationalSeries(NamedTuple):
    numerator: IntPoly
    denominator: IntPoly


def hilbert_series(weights: Sequence[int], h: int) -> RationalSeries:
    """Hilbert series ``(1 - t^h) / prod(1 - t^a)`` of a graded hypersurface ring."""
    if any(w <= 0 for w in weights) or h <= 0:
        raise DomainError("weights and degree must be positive")
    one = IntPoly((1,))
    den = one
    for a in weights:
        den = den * (one - IntPoly.monomial(a))
    return RationalSeries(one - IntPoly.monomial(h), den)


def series_coeffs(s: RationalSeries, n: int) -> list[int]:
    """First ``n + 1`` power-series coefficients of ``s``."""
    den = s.denominator.coeffs
    c0 = den[0] if den else 0
    if c0 not in (1, -1):
        raise DomainError("denominator constant term must be +-1")
    num = s.numerator.coeffs
    out: list[int] = []
    for e in range(n + 1):
        acc = num[e] if e < len(num) else 0
        for k in range(1, min(e, len(den) - 1) + 1):
            acc -= den[k] * out[e - k]
        out.append(acc * c0)
    return out


class LElement(NamedTuple):
    """``ell * c + sum(arm[i] * x_i)`` with ``0 <= arm[i] < p_i``."""

    ell: int
    arm: tuple[int, int, int]


def l_normal_form(raw: Sequence[int], p: Sequence[int]) -> LElement:
    """Normalise ``raw = (n1, n2, n3, m)`` meaning ``n1 x1 + n2 x2 + n3 x3 + m c``.

    Uses ``p_i x_i = c``.
    """
    if len(p) != 3 or any(pi < 2 for pi in p):
        raise DomainError(f"orders must satisfy p_i >= 2, got {tuple(p)}")
    *xs, ell = raw
    arm = []
    for n, pi in zip(xs, p):
        q, r = divmod(n, pi)
        ell += q
        arm.append(r)
    return LElement(ell, tuple(arm))


def l_add(u: LElement, v: LElement, p: Sequence[int]) -> LElement:
    return l_normal_form((*(a + b for a, b in zip(u.arm, v.arm)), u.ell + v.ell), p)


def dualizing_element(p: Sequence[int]) -> LElement:
    """Normal form of ``c - x1 - x2 - x3``."""
    return l_normal_form((-1, -1, -1, 1), p)
