"""Sparse exact linear algebra over Q(q).

Matrices act on column vectors: column j of a matrix is the image of the
j-th basis vector.  Entries are :class:`~heckestab.qfield.Scalar` values and
only nonzero entries are stored.  Rank, kernel and quotient computations run
fully symbolically; an optional specialised mode evaluates a matrix at
random rational points q0 (never 0 or +-1) as a fast probabilistic check,
but it is opt-in and nothing downstream defaults to it.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .qfield import ONE, ZERO, Scalar, scal

__all__ = [
    "ExactMatrix",
    "EchelonBasis",
    "rank",
    "kernel_basis",
    "solve_unique",
    "QuotientStructure",
    "quotient_structure",
    "kron",
]


class ExactMatrix:
    """An immutable sparse matrix over Q(q)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimension")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry ({i}, {j}) outside {rows}x{cols} matrix")
            v = scal(v)
            if v:
                clean[(i, j)] = v
        self.entries = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, {})

    @classmethod
    def from_rows(cls, rows_data) -> "ExactMatrix":
        rows_data = [list(r) for r in rows_data]
        nrows = len(rows_data)
        ncols = len(rows_data[0]) if rows_data else 0
        entries = {}
        for i, row in enumerate(rows_data):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                v = scal(v)
                if v:
                    entries[(i, j)] = v
        return cls(nrows, ncols, entries)

    @classmethod
    def from_columns(cls, nrows: int, columns) -> "ExactMatrix":
        entries = {}
        columns = list(columns)
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    entries[(i, j)] = v
        return cls(nrows, len(columns), entries)

    # -- structure ------------------------------------------------------

    def column(self, j: int) -> dict:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def columns(self):
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            cols[j][i] = v
        return cols

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def to_lists(self):
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        raise TypeError("ExactMatrix is not hashable")

    def is_zero(self) -> bool:
        return not self.entries

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        entries = dict(self.entries)
        for key, v in other.entries.items():
            w = entries.get(key, ZERO) + v
            if w:
                entries[key] = w
            else:
                entries.pop(key, None)
        out = ExactMatrix.zeros(self.rows, self.cols)
        out.entries = entries
        return out

    def __neg__(self):
        out = ExactMatrix.zeros(self.rows, self.cols)
        out.entries = {k: -v for k, v in self.entries.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ExactMatrix":
        c = scal(c)
        out = ExactMatrix.zeros(self.rows, self.cols)
        if c:
            out.entries = {k: v * c for k, v in self.entries.items()}
        return out

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            rows_of_other = [dict() for _ in range(other.rows)]
            for (k, j), v in other.entries.items():
                rows_of_other[k][j] = v
            acc: dict = {}
            for (i, k), u in self.entries.items():
                for j, v in rows_of_other[k].items():
                    key = (i, j)
                    w = acc.get(key, ZERO) + u * v
                    if w:
                        acc[key] = w
                    else:
                        acc.pop(key, None)
            out = ExactMatrix.zeros(self.rows, other.cols)
            out.entries = acc
            return out
        raise TypeError("matmul expects an ExactMatrix")

    def apply(self, vec: dict) -> dict:
        """Image of a sparse column vector {index: Scalar}."""
        out: dict = {}
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            cols[j][i] = v
        for j, c in vec.items():
            if not c:
                continue
            for i, v in cols[j].items():
                w = out.get(i, ZERO) + v * c
                if w:
                    out[i] = w
                else:
                    out.pop(i, None)
        return out

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        t = ZERO
        for (i, j), v in self.entries.items():
            if i == j:
                t = t + v
        return t

    # -- serialization ----------------------------------------------------

    def to_json_obj(self):
        triples = [
            [i, j, v.to_wire()] for (i, j), v in sorted(self.entries.items())
        ]
        return {"rows": self.rows, "cols": self.cols, "entries": triples}

    @classmethod
    def from_json_obj(cls, obj) -> "ExactMatrix":
        entries = {
            (int(i), int(j)): Scalar.from_wire(w) for i, j, w in obj["entries"]
        }
        return cls(int(obj["rows"]), int(obj["cols"]), entries)


# -- sparse vector helpers -------------------------------------------------


def vec_add_scaled(u: dict, v: dict, c: Scalar) -> None:
    """In place: u += c*v."""
    if not c:
        return
    for i, x in v.items():
        w = u.get(i, ZERO) + c * x
        if w:
            u[i] = w
        else:
            u.pop(i, None)


def vec_scale(v: dict, c: Scalar) -> dict:
    return {i: x * c for i, x in v.items()} if c else {}


class EchelonBasis:
    """An incrementally built echelon basis of a subspace of k^dim.

    Each stored vector is normalised to have coefficient 1 at its pivot
    (the smallest nonzero coordinate) and pivots are pairwise distinct,
    so membership tests and reductions are deterministic.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.pivots: dict = {}  # pivot index -> position in self.vectors
        self.vectors: list = []
        self.pivot_order: list = []  # pivots sorted ascending

    def __len__(self):
        return len(self.vectors)

    def reduce(self, vec: dict) -> dict:
        """Return the residue of ``vec`` after reduction, as a fresh dict."""
        v = {i: c for i, c in vec.items() if c}
        for p in self.pivot_order:
            c = v.get(p)
            if c:
                vec_add_scaled(v, self.vectors[self.pivots[p]], -c)
        return v

    def insert(self, vec: dict):
        """Reduce and, if independent, insert; returns the new pivot or None."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v.keys())
        lead = v[p]
        if not lead.is_one():
            v = vec_scale(v, ONE / lead)
        self.pivots[p] = len(self.vectors)
        self.vectors.append(v)
        self.pivot_order.append(p)
        self.pivot_order.sort()
        return p

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec: dict):
        """Coordinates of ``vec`` in this basis, or None if not in the span."""
        v = {i: c for i, c in vec.items() if c}
        coords = [ZERO] * len(self.vectors)
        for p in self.pivot_order:
            c = v.get(p)
            if c:
                coords[self.pivots[p]] = c
                vec_add_scaled(v, self.vectors[self.pivots[p]], -c)
        if v:
            return None
        return coords

    def basis_vectors(self):
        """Basis vectors in insertion order."""
        return list(self.vectors)


def rank(matrix: ExactMatrix, mode: str = "exact", count: int = 3, seed: int = 0) -> int:
    """Rank of a matrix, exactly or by specialisation at random points.

    The specialised mode evaluates all entries at ``count`` random rational
    points q0 (never 0 or +-1, redrawn away from poles), computes ranks over
    Q, and returns the maximum observed value.  Specialisation can only drop
    the rank, so the maximum is a lower bound that is generically exact.
    If the observations disagree, one fresh batch is drawn; persistent
    disagreement raises ``ValueError('unstable specialization')``.
    """
    if mode == "exact":
        basis = EchelonBasis(matrix.rows)
        for col in matrix.columns():
            basis.insert(col)
        return len(basis)
    if mode != "specialized":
        raise ValueError(f"unknown rank mode {mode!r}")
    rng = random.Random(seed)
    observed = _specialized_ranks(matrix, rng, count)
    if len(set(observed)) > 1:
        retry = _specialized_ranks(matrix, rng, count)
        if len(set(retry)) > 1:
            raise ValueError("unstable specialization")
        observed += retry
    return max(observed)


def _specialized_ranks(matrix: ExactMatrix, rng: random.Random, count: int) -> list:
    out = []
    for _ in range(count):
        for _attempt in range(100):
            q0 = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
            if q0 in (0, 1, -1):
                continue
            try:
                out.append(_rank_at_point(matrix, q0))
                break
            except ValueError:
                continue  # drawn onto a pole; redraw
        else:
            raise ValueError("unstable specialization")
    return out


def _rank_at_point(matrix: ExactMatrix, q0: Fraction) -> int:
    cols: list = [dict() for _ in range(matrix.cols)]
    for (i, j), v in matrix.entries.items():
        cols[j][i] = v.specialize(q0)
    pivots: dict = {}
    for col in cols:
        v = {i: c for i, c in col.items() if c}
        while v:
            p = min(v)
            if p in pivots:
                base = pivots[p]
                c = v[p]
                for i, x in base.items():
                    w = v.get(i, 0) - c * x
                    if w:
                        v[i] = w
                    else:
                        v.pop(i, None)
            else:
                inv = 1 / v[p]
                pivots[p] = {i: c * inv for i, c in v.items()}
                break
    return len(pivots)


def kernel_basis(matrix: ExactMatrix) -> list:
    """Basis of the right kernel, as sparse column vectors of length cols.

    Kernel vectors are found by reducing the columns augmented with identity
    coordinates: whenever a column becomes dependent, the bookkeeping part is
    a kernel element.
    """
    n = matrix.rows
    basis = EchelonBasis(n + matrix.cols)
    kernel = []
    for j, col in enumerate(matrix.columns()):
        v = dict(col)
        v[n + j] = ONE
        # only pivots inside the first n coordinates count as "real";
        # reduce fully, then check whether anything real is left
        residue = basis.reduce(v)
        real = {i: c for i, c in residue.items() if i < n}
        if real:
            basis.insert(residue)
        else:
            kernel.append({i - n: c for i, c in residue.items() if i >= n})
    return kernel


def solve_unique(matrix: ExactMatrix, rhs: dict) -> list:
    """Solve M x = rhs when M has full column rank; returns dense list.

    Raises ValueError if the system is inconsistent or underdetermined.
    """
    n = matrix.rows
    basis = EchelonBasis(n)
    for col in matrix.columns():
        if basis.insert(col) is None:
            raise ValueError("matrix does not have full column rank")
    # Express rhs in the echelon basis, then unwind to original columns.
    coords = basis.coordinates(dict(rhs))
    if coords is None:
        raise ValueError("inconsistent linear system")
    # The echelon vectors are triangular combinations of the columns; redo
    # the elimination keeping track of the change of basis.
    change = []  # change[t] = coords of echelon vector t in original columns
    basis2 = EchelonBasis(n)
    for j, col in enumerate(matrix.columns()):
        v = {i: c for i, c in col.items() if c}
        combo = {j: ONE}
        for p in basis2.pivot_order:
            c = v.get(p)
            if c:
                t = basis2.pivots[p]
                vec_add_scaled(v, basis2.vectors[t], -c)
                vec_add_scaled(combo, change[t], -c)
        p = min(v)
        lead = v[p]
        if not lead.is_one():
            inv = ONE / lead
            v = vec_scale(v, inv)
            combo = vec_scale(combo, inv)
        basis2.pivots[p] = len(basis2.vectors)
        basis2.vectors.append(v)
        basis2.pivot_order.append(p)
        basis2.pivot_order.sort()
        change.append(combo)
    out = [ZERO] * matrix.cols
    for t, c in enumerate(coords):
        if c:
            for j, x in change[t].items():
                out[j] = out[j] + c * x
    return out


class QuotientStructure:
    """A quotient space V / U with projection, section and induced maps.

    ``projection`` is a (dim V - dim U) x dim V matrix, ``section`` a right
    inverse of it, and ``induced`` the list of maps induced on the quotient
    by the supplied U-invariant maps.
    """

    __slots__ = ("dim", "subspace_dim", "projection", "section", "induced")

    def __init__(self, dim, subspace_dim, projection, section, induced):
        self.dim = dim
        self.subspace_dim = subspace_dim
        self.projection = projection
        self.section = section
        self.induced = induced

    @property
    def quotient_dim(self):
        return self.dim - self.subspace_dim


def quotient_structure(dim: int, subspace_vectors, maps=()) -> QuotientStructure:
    """Quotient of k^dim by the span of ``subspace_vectors``.

    Each map (a dim x dim ExactMatrix) must send the subspace into itself;
    otherwise ValueError('not invariant') is raised.  The quotient basis is
    the set of non-pivot coordinates of the fully reduced subspace basis, so
    projection * section = identity and the induced maps satisfy
    projection @ map = induced @ projection exactly.
    """
    basis = EchelonBasis(dim)
    for v in subspace_vectors:
        basis.insert(dict(v))
    # full Gauss-Jordan: clear every pivot coordinate from the other vectors
    reduced = [dict(v) for v in basis.vectors]
    for t, v in enumerate(reduced):
        for p in basis.pivot_order:
            if p == min(v):
                continue
            c = v.get(p)
            if c:
                vec_add_scaled(v, reduced[basis.pivots[p]], -c)
    pivot_set = set(basis.pivot_order)
    free = [j for j in range(dim) if j not in pivot_set]
    proj_entries = {}
    for t, j in enumerate(free):
        proj_entries[(t, j)] = ONE
    for v in reduced:
        p = min(v)
        for t, j in enumerate(free):
            c = v.get(j)
            if c:
                proj_entries[(t, p)] = -c
    projection = ExactMatrix(len(free), dim, proj_entries)
    section = ExactMatrix(dim, len(free), {(j, t): ONE for t, j in enumerate(free)})
    induced = []
    for m in maps:
        if m.rows != dim or m.cols != dim:
            raise ValueError("shape mismatch")
        ind = projection @ m @ section
        if projection @ m != ind @ projection:
            raise ValueError("not invariant")
        induced.append(ind)
    return QuotientStructure(dim, len(basis), projection, section, induced)


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product, row-major block layout."""
    entries = {}
    for (ia, ja), ca in a.entries.items():
        for (ib, jb), cb in b.entries.items():
            entries[(ia * b.rows + ib, ja * b.cols + jb)] = ca * cb
    return ExactMatrix(a.rows * b.rows, a.cols * b.cols, entries)
