"""Irreducible H_n-modules in seminormal form, characters, decomposition.

The simple modules S^lam at generic q are indexed by partitions of n and
carry the seminormal basis labelled by standard Young tableaux.  On a
tableau t the generator T_{s_i} acts by q when i, i+1 share a row, by -1
when they share a column, and otherwise mixes t with the swapped tableau
s_i.t through a 2x2 block whose entries depend only on the axial distance
d = content(i+1) - content(i) in t:

    diagonal   D(d)  = (q-1) q^d / (q^d - 1),
    off-diag   1                    (into s_i.t, when d > 0),
    off-diag   B(d)  = (q^d - q)(q^{d+1} - 1) / (q^d - 1)^2
                                    (into s_i.t, when d < 0, with |d|),

so each block has trace q - 1 and determinant -q.  All defining relations
are re-verified exactly at construction; nothing relies on the formulas
being transcribed correctly.

Decomposition of an arbitrary ModulePresentation uses characters: traces
at minimal-length class representatives form an invertible p(n) x p(n)
system over Q(q), solved exactly.
"""

from __future__ import annotations

from functools import lru_cache

from .hecke import ModulePresentation
from .linalg import ExactMatrix, quotient_structure, rank, solve_unique
from .partitions import (
    partition_label,
    partitions_of,
    pieri_add,
    syt_count,
    syt_enumerate,
)
from .qfield import ONE, Q, Scalar, q_power, scal
from .symgroup import Permutation, conjugacy_min_reps

__all__ = [
    "SPECHT_BOUND",
    "specht_module",
    "character",
    "CharacterTable",
    "character_table",
    "decompose",
    "coinvariant_quotient",
    "coinvariants",
    "branching_check",
]

SPECHT_BOUND = 7

MINUS_ONE = scal(-1)


def _positions(tableau):
    """Map entry -> (row, col), 0-indexed."""
    pos = {}
    for r, row in enumerate(tableau):
        for c, v in enumerate(row):
            pos[v] = (r, c)
    return pos


def _swap_entries(tableau, i):
    """The tableau with entries i and i+1 exchanged."""
    return tuple(
        tuple(i + 1 if v == i else i if v == i + 1 else v for v in row)
        for row in tableau
    )


def _diag(d: int) -> Scalar:
    """D(d) = (q-1) q^d / (q^d - 1) for d != 0, in positive powers of q."""
    if d > 0:
        return (Q - 1) * q_power(d) / (q_power(d) - 1)
    return MINUS_ONE * (Q - 1) / (q_power(-d) - 1)


def _cross(d: int) -> Scalar:
    """B(d) = (q^d - q)(q^{d+1} - 1) / (q^d - 1)^2 for d >= 2."""
    return (q_power(d) - Q) * (q_power(d + 1) - 1) / (q_power(d) - 1) ** 2


def specht_module(lam, bound: int = SPECHT_BOUND) -> ModulePresentation:
    """The seminormal presentation of S^lam, basis in syt_enumerate order."""
    n = sum(lam)
    if n > bound:
        raise ValueError(f"size bound: |lam| = {n} exceeds {bound}")
    basis = syt_enumerate(lam)
    index = {t: a for a, t in enumerate(basis)}
    dim = len(basis)
    gens = []
    for i in range(1, n):
        entries = {}
        for a, t in enumerate(basis):
            pos = _positions(t)
            (r1, c1), (r2, c2) = pos[i], pos[i + 1]
            d = (c2 - r2) - (c1 - r1)
            if d == 1:
                entries[(a, a)] = Q
            elif d == -1:
                entries[(a, a)] = MINUS_ONE
            else:
                b = index[_swap_entries(t, i)]
                entries[(a, a)] = _diag(d)
                entries[(b, a)] = ONE if d > 0 else _cross(-d)
        gens.append(ExactMatrix(dim, dim, entries))
    return ModulePresentation(n, dim, gens, label=f"S({partition_label(lam)})")


def character(V: ModulePresentation, w: Permutation) -> Scalar:
    """Trace of T_w on V; reduced-word independent."""
    if w.n != V.n:
        raise ValueError("rank mismatch")
    return V.word_matrix(w.reduced_word()).trace()


class CharacterTable:
    """Traces of the simple modules at minimal class representatives.

    Rows run over partitions of n in the partitions_of order; columns over
    cycle types with the identity class first (reversed partitions_of
    order).  The matrix is invertible over Q(q), which is what makes exact
    decomposition possible.
    """

    __slots__ = (
        "n",
        "row_labels",
        "classes",
        "class_reps",
        "values",
        "_solve_matrix",
    )

    def __init__(self, n: int):
        self.n = n
        self.row_labels = partitions_of(n)
        self.classes = tuple(reversed(partitions_of(n)))
        reps = conjugacy_min_reps(n)
        self.class_reps = tuple(reps[mu] for mu in self.classes)
        modules = [specht_module(lam) for lam in self.row_labels]
        self.values = tuple(
            tuple(character(V, w) for w in self.class_reps) for V in modules
        )
        # columns as a matrix: entry (class, lam); singularity is fatal
        m = len(self.row_labels)
        mat = ExactMatrix(
            m,
            m,
            {
                (ci, li): self.values[li][ci]
                for li in range(m)
                for ci in range(m)
                if self.values[li][ci]
            },
        )
        if rank(mat) != m:
            raise ValueError("degenerate character table")
        self._solve_matrix = mat

    __slots__ = __slots__ + ("_solve_matrix",)

    def multiplicities(self, traces) -> dict:
        """Solve sum_lam m_lam chi_lam(w_mu) = traces[mu] for the m_lam."""
        rhs = {ci: t for ci, t in enumerate(traces) if t}
        sol = solve_unique(self._solve_matrix, rhs)
        return {lam: sol[li] for li, lam in enumerate(self.row_labels)}


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    return CharacterTable(n)


def decompose(V: ModulePresentation) -> dict:
    """Multiplicities of each S^lam in V, by solving against the table.

    Raises ValueError('not a module') if the solution is not made of
    nonnegative integers summing (with dimensions) to dim V.
    """
    table = character_table(V.n)
    traces = [character(V, w) for w in table.class_reps]
    sol = table.multiplicities(traces)
    out = {}
    total = 0
    for lam, c in sol.items():
        if not c:
            continue
        if not c.is_constant():
            raise ValueError("not a module")
        frac = c.as_fraction()
        if frac.denominator != 1 or frac < 0:
            raise ValueError("not a module")
        out[lam] = int(frac)
        total += int(frac) * syt_count(lam)
    if total != V.dim:
        raise ValueError("not a module")
    return out


def coinvariant_quotient(V: ModulePresentation, a: int, literal: bool = False):
    """Like coinvariants, but returns the full quotient structure.

    Callers that need the section (to build induced maps between
    quotients) use this; everyone else goes through coinvariants.
    Returns (quotient ModulePresentation over H_a, QuotientStructure).
    """
    N = V.n
    if not 0 <= a <= N:
        raise ValueError(f"retained rank {a} outside 0..{N}")
    shift = ONE if literal else Q
    subspace = []
    eye = ExactMatrix.identity(V.dim)
    for j in range(a + 1, N):
        g = V.gen_action[j - 1] - eye.scale(shift)
        subspace.extend(g.columns())
    front = V.gen_action[: max(a - 1, 0)]
    qs = quotient_structure(V.dim, subspace, front)
    quotient = ModulePresentation(
        a,
        qs.quotient_dim,
        qs.induced,
        label=f"{V.label or 'V'}/Q(tail>{a})",
        check=False,
    )
    return quotient, qs


def coinvariants(V: ModulePresentation, a: int, literal: bool = False):
    """Quotient of V by the tail coinvariant subspace, as an H_a-module.

    For V over H_N the tail generators are s_{a+1}, ..., s_{N-1}; the
    subspace Q is spanned by the images of (T_{s_j} - q) for tail j, which
    equals span{T_sigma v - q^{l(sigma)} v} over the tail subalgebra.  The
    front generators s_1, ..., s_{a-1} commute with the tail, so they
    descend to the quotient, the index-isotypic part of the restriction.

    With literal=True the untwisted generators (T_{s_j} - 1) are used
    instead; at generic q both eigenvalues of T_s - 1 are nonzero, so the
    quotient is zero whenever a tail generator exists.  This mode exists
    to make that degeneration observable, not for production use.

    Returns (quotient ModulePresentation over H_a, projection matrix).
    """
    quotient, qs = coinvariant_quotient(V, a, literal=literal)
    return quotient, qs.projection


def branching_check(lam, m: int) -> dict:
    """Compare coinvariants of S^lam against the one-strip branching oracle.

    Removing a horizontal strip of size m: the quotient of S^lam by the
    tail coinvariants of size m decomposes over H_{|lam|-m} as the sum of
    S^mu over mu with lam in pieri_add(mu, m), each once.
    """
    n = sum(lam)
    if not 0 <= m <= n:
        raise ValueError(f"strip size {m} outside 0..{n}")
    a = n - m
    V = specht_module(lam)
    quotient, _ = coinvariants(V, a)
    computed = decompose(quotient) if quotient.dim else {}
    expected = {
        mu: 1 for mu in partitions_of(a) if tuple(lam) in pieri_add(mu, m)
    }
    return {
        "lam": tuple(lam),
        "m": m,
        "computed": computed,
        "expected": expected,
        "match": computed == expected,
    }
