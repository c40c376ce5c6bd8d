"""Independent reference computations used only by the tests.

None of these call into the code paths they are used to check.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import sympy


def cofactor_det(rows: list[list[int]]) -> int:
    """Laplace expansion along the first row, memoised on the set of remaining columns."""
    n = len(rows)
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def minor(r: int, cols: frozenset) -> int:
        if r == n:
            return 1
        total = 0
        for sign_pos, c in enumerate(sorted(cols)):
            a = rows[r][c]
            if a:
                total += (-1) ** sign_pos * a * minor(r + 1, cols - {c})
        return total

    return minor(0, frozenset(range(n)))


def sturm_signature(rows: list[list[int]]) -> tuple[int, int, int]:
    """Root counts of the characteristic polynomial with sympy's Sturm-based isolation."""
    t = sympy.Symbol("t")
    p = sympy.Matrix(rows).charpoly(t)
    zero = 0
    while p.eval(0) == 0:
        p = sympy.Poly(sympy.quo(p.as_expr(), t), t)
        zero += 1
    plus = minus = 0
    for fac, mult in sympy.factor_list(p.as_expr())[1]:
        fp = sympy.Poly(fac, t)
        plus += mult * fp.count_roots(0, sympy.oo)
        minus += mult * fp.count_roots(-sympy.oo, 0)
    return plus, zero, minus


def count_monomials(weights: tuple[int, ...], degree: int) -> int:
    """Brute-force count of monomials of the given weighted degree."""
    ranges = [range(degree // w + 1) for w in weights]
    return sum(1 for exps in product(*ranges) if sum(e * w for e, w in zip(exps, weights)) == degree)


def rewrite_l_element(coeffs: tuple[int, int, int], ell: int, p: tuple[int, int, int]):
    """Normal form by repeatedly trading ``p_i x_i`` for ``c`` and ``-x_i`` for ``(p_i - 1) x_i - c``."""
    coeffs = list(coeffs)
    for i in range(3):
        while coeffs[i] < 0:
            coeffs[i] += p[i]
            ell -= 1
        while coeffs[i] >= p[i]:
            coeffs[i] -= p[i]
            ell += 1
    return ell, tuple(coeffs)


def that_edges_one_based(g1: int, g2: int, g3: int):
    """T-hat edges written out from the picture, 1-based: (solid edges, double-dotted edge)."""
    mu = g1 + g2 + g3
    arms = [list(range(2, g1 + 1)), list(range(g1 + 1, g1 + g2)), list(range(g1 + g2, mu - 1))]
    solid = set()
    for arm in arms:
        chain = [1] + arm
        solid.update(frozenset(e) for e in zip(chain, chain[1:]))
        solid.add(frozenset((arm[0], mu - 1)))
    solid.add(frozenset((mu - 1, mu)))
    return solid, frozenset((1, mu - 1))


def sympy_matrix_power_order(rows: list[list[int]], bound: int):
    m = sympy.Matrix(rows)
    ident = sympy.eye(m.rows)
    power = m
    for k in range(1, bound + 1):
        if power == ident:
            return k
        power = power * m
    return None
