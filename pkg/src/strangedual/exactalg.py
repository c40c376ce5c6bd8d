"""Exact integer and rational linear algebra.

Everything here works on Python ints (and ``fractions.Fraction`` where a
division is unavoidable), so no result is ever rounded.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import ContractError, DimensionError, DomainError

DEFAULT_CYCLOTOMIC_BOUND = 84


class IntMat:
    """Immutable dense integer matrix, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise DimensionError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMat is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMat:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, (x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMat:
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMat:
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> IntMat:
        n = len(values)
        return cls(n, n, (values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMat:
        return IntMat(self.cols, self.rows,
                      (self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    T = property(transpose)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __neg__(self) -> IntMat:
        return IntMat(self.rows, self.cols, (-x for x in self.entries))

    def __add__(self, other: IntMat) -> IntMat:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return IntMat(self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMat) -> IntMat:
        return self + (-other)

    def __matmul__(self, other: IntMat) -> IntMat:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = [other.entries[j::other.cols] for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c) if a) for c in cols_b)
        return IntMat(self.rows, other.cols, out)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows))

    def bilinear(self, u: Sequence[int], v: Sequence[int]) -> int:
        """``u^T M v``."""
        return sum(a * b for a, b in zip(u, self.apply(v)))

    def permuted(self, perm: Sequence[int]) -> IntMat:
        """Return ``P M P^T`` where row ``i`` of the input becomes row ``perm[i]``."""
        n = self.rows
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        return IntMat(n, n, (self[inv[i], inv[j]] for i in range(n) for j in range(n)))

    def __repr__(self) -> str:
        return f"IntMat.from_rows({self.to_rows()!r})"


def _require_square(m: IntMat) -> None:
    if not m.is_square:
        raise DimensionError(f"expected a square matrix, got {m.rows}x{m.cols}")


def _require_symmetric(m: IntMat) -> None:
    if not m.is_symmetric():
        raise ContractError("expected a symmetric matrix")


def det_bareiss(m: IntMat) -> int:
    """Fraction-free Gaussian elimination; every intermediate division is exact."""
    _require_square(m)
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def smith_invariant_factors(m: IntMat) -> list[int]:
    """Diagonal of the Smith normal form, ``min(rows, cols)`` entries, zeros last.

    Pivots are chosen by smallest nonzero absolute value to keep entries small.
    """
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    diag: list[int] = []
    for t in range(min(nr, nc)):
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    v = a[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                diag.extend([0] * (min(nr, nc) - t))
                return diag
            _, pi, pj = best
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = a[i][t] // p
                if q:
                    ri, rt = a[i], a[t]
                    for j in range(t, nc):
                        ri[j] -= q * rt[j]
                dirty |= a[i][t] != 0
            for j in range(t + 1, nc):
                q = a[t][j] // p
                if q:
                    for i in range(t, nr):
                        a[i][j] -= q * a[i][t]
                dirty |= a[t][j] != 0
            if dirty:
                continue
            # pivot must divide the whole remaining block
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p), None)
            if bad is None:
                diag.append(abs(p))
                break
            i = bad[0]
            for j in range(t, nc):
                a[t][j] += a[i][j]
    return diag


class Signature(NamedTuple):
    n_plus: int
    n_zero: int
    n_minus: int


def signature_of(m: IntMat) -> Signature:
    """Inertia of a symmetric integer form by rational congruence diagonalization."""
    _require_square(m)
    _require_symmetric(m)
    a = [[Fraction(x) for x in row] for row in m.to_rows()]
    plus = zero = minus = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is not None:
            piv = a[k][k]
            if piv > 0:
                plus += 1
            else:
                minus += 1
            col = [a[i][k] for i in range(n)]
            rest = [i for i in range(n) if i != k]
            a = [[a[i][j] - col[i] * col[j] / piv for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if pair is None:
            zero += n
            break
        # [[0, b], [b, 0]] is a hyperbolic plane: one positive, one negative square.
        i0, j0 = pair
        b = a[i0][j0]
        plus += 1
        minus += 1
        rest = [i for i in range(n) if i not in pair]
        # Schur complement with inverse [[0, 1/b], [1/b, 0]]
        a = [[a[i][j] - (a[i][i0] * a[j0][j] + a[i][j0] * a[i0][j]) / b for j in rest] for i in rest]
    return Signature(plus, zero, minus)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients lowest degree first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def divmod_monic(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        if not divisor.is_monic():
            raise ContractError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPoly(()), self
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd]
            quot[k] = q
            if q:
                for j, c in enumerate(divisor.coeffs):
                    rem[k + j] -= q * c
        return IntPoly(tuple(quot)), IntPoly(tuple(rem[:dd]))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            var = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = str(mag) if (mag != 1 or k == 0) else ""
            body = body + ("*" if body and var else "") + var
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def char_poly(m: IntMat) -> IntPoly:
    """``det(t I - m)`` via Faddeev-LeVerrier.

    The recursion divides by k at step k; the quotients are always integral, which is
    asserted rather than assumed.
    """
    _require_square(m)
    n = m.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    ident = IntMat.identity(n)
    aux = IntMat.zeros(n)
    for k in range(1, n + 1):
        aux = m @ aux + IntMat.diagonal([coeffs[n - k + 1]] * n) if k > 1 else ident
        am = m @ aux
        tr = sum(am[i, i] for i in range(n))
        c, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = c
    return IntPoly(tuple(coeffs))


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """``Phi_d`` from ``t^d - 1`` divided by ``Phi_e`` for every proper divisor ``e``."""
    if d < 1:
        raise DomainError(f"cyclotomic order must be positive, got {d}")
    p = IntPoly.monomial(d) - IntPoly((1,))
    for e in range(1, d):
        if d % e == 0:
            p, r = p.divmod_monic(cyclotomic(e))
            assert not r.coeffs
    return p


def cyclotomic_factorization(p: IntPoly, d_max: int = DEFAULT_CYCLOTOMIC_BOUND) -> list[int] | None:
    """Orders ``d <= d_max`` with ``p == prod(Phi_d)``, sorted; ``None`` if impossible."""
    if p.degree < 1:
        raise ContractError("expected a nonconstant polynomial")
    if not p.is_monic():
        raise ContractError("expected a monic polynomial")
    orders: list[int] = []
    rest = p
    for d in range(1, d_max + 1):
        phi = cyclotomic(d)
        if phi.degree > rest.degree:
            continue
        while rest.degree >= phi.degree:
            q, r = rest.divmod_monic(phi)
            if r.coeffs:
                break
            orders.append(d)
            rest = q
        if rest.degree == 0:
            break
    return orders if rest.coeffs == (1,) else None


def _row_profile(m: IntMat, i: int) -> tuple:
    return m[i, i], tuple(sorted(m.row(i)))


def perm_congruent(a: IntMat, b: IntMat) -> list[int] | None:
    """Find ``perm`` with ``a.permuted(perm) == b``, i.e. ``a[i, j] == b[perm[i], perm[j]]``.

    Backtracking over vertices of ``a`` in breadth-first order of its nonzero pattern,
    so each new choice is constrained by an already-placed neighbour.
    """
    if a.shape != b.shape:
        raise DimensionError(f"size mismatch {a.shape} vs {b.shape}")
    _require_square(a)
    _require_symmetric(a)
    _require_symmetric(b)
    n = a.rows
    prof_a = [_row_profile(a, i) for i in range(n)]
    prof_b = [_row_profile(b, i) for i in range(n)]
    if Counter(prof_a) != Counter(prof_b):
        return None
    if det_bareiss(a) != det_bareiss(b):
        return None
    candidates = [[j for j in range(n) if prof_b[j] == prof_a[i]] for i in range(n)]

    order: list[int] = []
    seen = [False] * n
    for start in sorted(range(n), key=lambda i: len(candidates[i])):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in range(n):
                if not seen[w] and w != v and a[v, w]:
                    seen[w] = True
                    queue.append(w)

    perm = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        placed = order[:pos]
        for cand in candidates[v]:
            if used[cand]:
                continue
            if all(a[v, u] == b[cand, perm[u]] for u in placed):
                perm[v] = cand
                used[cand] = True
                if extend(pos + 1):
                    return True
                used[cand] = False
        perm[v] = -1
        return False

    return perm if extend(0) else None


# Rational polynomial helpers for the Sturm route (lowest degree first, no trailing zeros).

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return _trim(q), _trim(a[:len(b) - 1])


def _pgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return [c / a[-1] for c in a]


def _psub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    width = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(width)])


def _deriv(p: list[Fraction]) -> list[Fraction]:
    return _trim([k * c for k, c in enumerate(p)][1:])


def _sign_changes(values: Iterable[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _distinct_roots_split(p: list[Fraction]) -> tuple[int, int]:
    """(#distinct negative roots, #distinct positive roots) of ``p`` with ``p(0) != 0``."""
    chain = [p, _deriv(p)]
    while chain[-1] and len(chain[-1]) > 1:
        chain.append([-c for c in _pdivmod(chain[-2], chain[-1])[1]])
    chain = [s for s in chain if s]
    at_zero = _sign_changes(s[0] for s in chain)
    at_pos_inf = _sign_changes(s[-1] for s in chain)
    at_neg_inf = _sign_changes(s[-1] * (-1) ** (len(s) - 1) for s in chain)
    return at_neg_inf - at_zero, at_zero - at_pos_inf


def sturm_inertia(m: IntMat) -> Signature:
    """Inertia from root counts of the characteristic polynomial.

    Independent of :func:`signature_of`: square-free decomposition (Yun) followed by
    Sturm sequences on each factor; multiplicities come from the decomposition.
    """
    _require_square(m)
    _require_symmetric(m)
    p = [Fraction(c) for c in char_poly(m).coeffs]
    zero = next(k for k, c in enumerate(p) if c != 0)
    p = p[zero:]
    plus = minus = 0
    # Yun's square-free factorization: p = prod a_i^i
    dp = _deriv(p)
    a0 = _pgcd(p, dp) if dp else [Fraction(1)]
    b = _pdivmod(p, a0)[0]
    c = _pdivmod(dp, a0)[0] if dp else []
    d = _psub(c, _deriv(b))
    mult = 1
    while len(b) > 1:
        a = _pgcd(b, d) if d else b
        neg, pos = _distinct_roots_split(a) if len(a) > 1 else (0, 0)
        minus += mult * neg
        plus += mult * pos
        b = _pdivmod(b, a)[0]
        c = _pdivmod(d, a)[0] if d else []
        d = _psub(c, _deriv(b))
        mult += 1
    return Signature(plus, zero, minus)
