"""Euler forms, Mukai vectors and the numerical Grothendieck lattice.

Sign convention: every spherical class squares to -2 under the Mukai pairing, and
``chi(E, F) = -(v(E), v(F))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from . import diagrams
from .errors import ContractError, DimensionError, DomainError, UnknownNameError
from .exactalg import (
    IntMat,
    Signature,
    det_bareiss,
    signature_of,
    smith_invariant_factors,
)


def euler_simples(q: diagrams.Quiver) -> IntMat:
    """``chi(S_a, S_b) = delta_ab - #solid(b -> a) + #relations(b -> a)``."""
    n = q.n
    a = [[int(i == j) for j in range(n)] for i in range(n)]
    for src, tgt in q.solid_arrows:
        a[tgt][src] -= 1
    for src, tgt in q.relation_arrows:
        a[tgt][src] += 1
    return IntMat.from_rows(a)


def symmetrize_k3(e: IntMat) -> IntMat:
    """Euler form after pushing forward to the total space of the canonical bundle."""
    if not e.is_square:
        raise DimensionError("expected a square matrix")
    return e + e.T


def append_pendant(chi_hat: IntMat, o_index: int) -> IntMat:
    """Add the class of ``O_Y[1]`` as a last basis vector.

    It is spherical (self-pairing 2) and meets only the simple at ``o_index``,
    with ``chi = -1``.
    """
    n = chi_hat.rows
    if not 0 <= o_index < n:
        raise IndexError(f"o_index {o_index} out of range for size {n}")
    rows = [r + [0] for r in chi_hat.to_rows()]
    rows.append([0] * n + [2])
    rows[o_index][n] = rows[n][o_index] = -1
    return IntMat.from_rows(rows)


def mukai_gram(chi_full: IntMat) -> IntMat:
    if not chi_full.is_symmetric():
        raise ContractError("expected a symmetric Euler form")
    return -chi_full


def quiver_k3_gram(p: Sequence[int]) -> IntMat:
    """Mukai Gram matrix of ``(iota_* S_alpha)`` followed by ``O_Y[1]``, quiver vertex order."""
    q = diagrams.lp_quiver(*p)
    chi = append_pendant(symmetrize_k3(euler_simples(q)), q.index("O"))
    return mukai_gram(chi)


def quiver_to_that_witness(p: Sequence[int]) -> list[int]:
    """Expected permutation from ``quiver_k3_gram(p)`` indices to T-hat(p) indices.

    ``W`` goes to the hub, ``U_i^(p_i-1)`` to the hub-adjacent vertex of arm i,
    ``U_i^(1)`` to the arm end, ``O`` to the second hub and ``O_Y[1]`` to the pendant.
    """
    q = diagrams.lp_quiver(*p)
    mu = sum(p)
    perm = [0] * (q.n + 1)
    perm[q.index("W")] = 0
    perm[q.index("O")] = mu - 2
    perm[q.n] = mu - 1
    for i, (pi, arm) in enumerate(zip(p, diagrams.arm_ranges(p)), start=1):
        for j in range(1, pi):
            perm[q.index(diagrams.u_label(i, j))] = arm[pi - 1 - j]
    return perm


@dataclass(frozen=True)
class NSContext:
    gram: IntMat
    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.gram.is_symmetric() or self.gram.rows != len(self.labels):
            raise ContractError("NS context needs a symmetric Gram matrix with one label per row")
        if any(self.gram[i, i] != -2 for i in range(self.gram.rows)):
            raise ContractError("every NS generator must be a (-2)-curve")

    @property
    def rank(self) -> int:
        return self.gram.rows

    def curve(self, label: str) -> tuple[int, ...]:
        try:
            k = self.labels.index(label)
        except ValueError:
            raise UnknownNameError(f"unknown curve {label!r}") from None
        return tuple(int(i == k) for i in range(self.rank))


def ns_context(delta: Sequence[int]) -> NSContext:
    g = diagrams.divisor_graph(*delta)
    return NSContext(diagrams.gram_from_marked_graph(g), g.labels)


@dataclass(frozen=True)
class MukaiVector:
    """``(r, c1, s)``: degree 0, 2 and 4 parts, ``c1`` in curve-class coordinates."""

    r: int
    c1: tuple[int, ...]
    s: int

    def __neg__(self) -> MukaiVector:
        return MukaiVector(-self.r, tuple(-x for x in self.c1), -self.s)

    def as_list(self) -> list:
        return [self.r, list(self.c1), self.s]


def mukai_pairing(v: MukaiVector, w: MukaiVector, ctx: NSContext) -> int:
    """``(c1_v . c1_w) - r_v s_w - s_v r_w``."""
    if len(v.c1) != ctx.rank or len(w.c1) != ctx.rank:
        raise ContractError("Mukai vectors do not match the NS context")
    return ctx.gram.bilinear(v.c1, w.c1) - v.r * w.s - v.s * w.r


@dataclass(frozen=True)
class StructureSheaf:
    pass


@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class CurveTwist:
    """``O_C(k)`` on the (-2)-curve labelled ``curve``."""

    curve: str
    k: int


@dataclass(frozen=True)
class Shift:
    d: int
    inner: "Descriptor"


Descriptor = Union[StructureSheaf, Point, CurveTwist, Shift]


def mukai_vector_of(desc: Descriptor, ctx: NSContext) -> MukaiVector:
    zero = (0,) * ctx.rank
    if isinstance(desc, StructureSheaf):
        return MukaiVector(1, zero, 1)
    if isinstance(desc, Point):
        return MukaiVector(0, zero, 1)
    if isinstance(desc, CurveTwist):
        # ch(O_C(k)) = (0, C, k + 1) since C^2 = -2; sqrt(td) = (1, 0, 1) does not change it
        return MukaiVector(0, ctx.curve(desc.curve), desc.k + 1)
    if isinstance(desc, Shift):
        v = mukai_vector_of(desc.inner, ctx)
        return -v if desc.d % 2 else v
    raise TypeError(f"not a sheaf descriptor: {desc!r}")


def ep_descriptors(delta: Sequence[int]) -> list[Descriptor]:
    """The spherical collection of curve sheaves and ``O_Y[1]``, in T-hat order."""
    labels = diagrams.divisor_labels(*delta)
    out: list[Descriptor] = [CurveTwist("E_inf", -1)]
    out.extend(CurveTwist(lab, -1) for lab in labels[1:])
    out.append(CurveTwist("E_inf", 0))
    out.append(Shift(1, StructureSheaf()))
    return out


def ep_collection(delta: Sequence[int]) -> tuple[list[MukaiVector], NSContext]:
    ctx = ns_context(delta)
    return [mukai_vector_of(d, ctx) for d in ep_descriptors(delta)], ctx


def pairing_gram(vectors: Sequence[MukaiVector], ctx: NSContext) -> IntMat:
    return IntMat.from_rows([[mukai_pairing(v, w, ctx) for w in vectors] for v in vectors])


@dataclass(frozen=True)
class BilinearLattice:
    gram: IntMat

    def __post_init__(self):
        if not self.gram.is_symmetric():
            raise ContractError("lattice Gram matrix must be symmetric")
        if any(self.gram[i, i] % 2 for i in range(self.gram.rows)):
            raise ContractError("lattice must be even")

    @property
    def rank(self) -> int:
        return self.gram.rows

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return self.gram.bilinear(u, v)


def that_lattice(triple: Sequence[int]) -> BilinearLattice:
    return BilinearLattice(diagrams.gram_from_marked_graph(diagrams.that_diagram(*triple)))


def reflection(v: Sequence[int], g: BilinearLattice) -> IntMat:
    """Matrix of ``x -> x + <x, v> v`` acting on column vectors."""
    if len(v) != g.rank:
        raise DimensionError("vector length does not match lattice rank")
    if g.pair(v, v) != -2:
        raise DomainError("reflection needs a root with <v, v> = -2")
    gv = g.gram.apply(v)
    n = g.rank
    return IntMat(n, n, (int(i == j) + v[i] * gv[j] for i in range(n) for j in range(n)))


def coxeter_element(g: BilinearLattice) -> IntMat:
    """``s_1 s_2 ... s_n`` over the basis vectors in index order."""
    n = g.rank
    if any(g.gram[i, i] != -2 for i in range(n)):
        raise DomainError("every basis vector must have square -2")
    c = IntMat.identity(n)
    for i in range(n):
        c = c @ reflection(tuple(int(i == j) for j in range(n)), g)
    return c


def matrix_order(m: IntMat, bound: int) -> int | None:
    ident = IntMat.identity(m.rows)
    power = m
    for k in range(1, bound + 1):
        if power == ident:
            return k
        power = power @ m
    return None


def n_lattice(delta: Sequence[int]) -> BilinearLattice:
    """Mukai Gram of ``[O_Y]``, the curve classes at infinity and ``[O_p]``."""
    ctx = ns_context(delta)
    basis = [mukai_vector_of(StructureSheaf(), ctx)]
    basis.extend(mukai_vector_of(CurveTwist(lab, -1), ctx) for lab in ctx.labels)
    basis.append(mukai_vector_of(Point(), ctx))
    return BilinearLattice(pairing_gram(basis, ctx))


@dataclass(frozen=True)
class LatticeInvariants:
    rank: int
    det: int
    signature: Signature
    invariant_factors: tuple[int, ...]

    @property
    def discriminant_factors(self) -> tuple[int, ...]:
        """Invariant factors other than 1: the cyclic orders of the discriminant group."""
        return tuple(d for d in self.invariant_factors if d != 1)

    def as_dict(self) -> dict:
        return {
            "rank": self.rank,
            "det": self.det,
            "signature": list(self.signature),
            "invariant_factors": list(self.invariant_factors),
        }


def invariants_of(lat: BilinearLattice) -> LatticeInvariants:
    return LatticeInvariants(
        rank=lat.rank,
        det=det_bareiss(lat.gram),
        signature=signature_of(lat.gram),
        invariant_factors=tuple(smith_invariant_factors(lat.gram)),
    )
