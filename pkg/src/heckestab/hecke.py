"""The Iwahori-Hecke algebra of type A over Q(q), in the T-basis.

H_n is generated by T_{s_1}, ..., T_{s_{n-1}} subject to

    (T_{s_i} - q)(T_{s_i} + 1) = 0,
    T_{s_i} T_{s_j} = T_{s_j} T_{s_i}          for |i - j| > 1,
    T_{s_i} T_{s_{i+1}} T_{s_i} = T_{s_{i+1}} T_{s_i} T_{s_{i+1}},

with k-basis {T_w : w in S_n} and H_0 = H_1 = k.  The single computational
primitive is left multiplication by a generator:

    T_s T_w = T_{sw}                 if l(sw) > l(w),
    T_s T_w = q T_{sw} + (q-1) T_w   otherwise.

Modules are given concretely as ModulePresentation: one exact matrix per
generator, acting on column vectors, with all defining relations verified
at construction time.
"""

from __future__ import annotations

from math import comb, factorial

from .linalg import ExactMatrix
from .qfield import ONE, Q, ZERO, Scalar, scal
from .symgroup import Permutation, coset_min_reps, is_distinguished, permutations_of

__all__ = [
    "HeckeElement",
    "mult",
    "tau",
    "ModulePresentation",
    "regular_representation",
    "one_dim_rep",
    "index_rep",
    "sign_rep",
    "restrict",
    "induce_pair",
]

REGULAR_BOUND = 6

Q_MINUS_ONE = Q - 1


class HeckeElement:
    """A finitely supported k-linear combination of basis elements T_w."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        clean = {}
        for w, c in (coeffs or {}).items():
            if w.n != n:
                raise ValueError(f"rank mismatch: T_{w.one_line} in H_{n}")
            c = scal(c)
            if c:
                clean[w] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, n: int, w: Permutation) -> "HeckeElement":
        return cls(n, {w: ONE})

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls(n, {Permutation.identity(n): ONE})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        coeffs = dict(self.coeffs)
        for w, c in other.coeffs.items():
            s = coeffs.get(w, ZERO) + c
            if s:
                coeffs[w] = s
            else:
                coeffs.pop(w, None)
        out = HeckeElement(self.n)
        out.coeffs = coeffs
        return out

    def __neg__(self):
        out = HeckeElement(self.n)
        out.coeffs = {w: -c for w, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = scal(c)
        out = HeckeElement(self.n)
        if c:
            out.coeffs = {w: x * c for w, x in self.coeffs.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mult(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("HeckeElement is not hashable")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return f"HeckeElement(H_{self.n}, 0)"
        parts = []
        for w in sorted(self.coeffs, key=lambda w: (w.length, w.one_line)):
            word = w.reduced_word()
            name = "T_e" if not word else "T_" + ".".join(map(str, word))
            parts.append(f"({self.coeffs[w]})*{name}")
        return f"HeckeElement(H_{self.n}, {' + '.join(parts)})"


def gen_left_mult(i: int, x: HeckeElement) -> HeckeElement:
    """T_{s_i} * x via the two-case rule."""
    out: dict = {}
    for w, c in x.coeffs.items():
        sw = w.swap_values(i)
        if sw.length > w.length:
            s = out.get(sw, ZERO) + c
            if s:
                out[sw] = s
            else:
                out.pop(sw, None)
        else:
            s = out.get(sw, ZERO) + Q * c
            if s:
                out[sw] = s
            else:
                out.pop(sw, None)
            s = out.get(w, ZERO) + Q_MINUS_ONE * c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    res = HeckeElement(x.n)
    res.coeffs = out
    return res


def mult(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """The product xy, folding generators of each left factor basis word."""
    if x.n != y.n:
        raise ValueError("rank mismatch")
    total = HeckeElement(x.n)
    for w, c in x.coeffs.items():
        acc = y
        for i in reversed(w.reduced_word()):
            acc = gen_left_mult(i, acc)
        total = total + acc.scale(c)
    return total


def tau(x: HeckeElement) -> HeckeElement:
    """The tower embedding H_n -> H_{n+1}, T_w -> T_w."""
    out = HeckeElement(x.n + 1)
    out.coeffs = {w.embed(x.n + 1): c for w, c in x.coeffs.items()}
    return out


class ModulePresentation:
    """An H_n-module given by one generator matrix per T_{s_i}.

    Matrices act on column vectors; gen_action[i-1] is the action of
    T_{s_i}.  The defining relations are verified exactly at construction
    unless check=False (used internally for data already validated).
    """

    __slots__ = ("n", "dim", "gen_action", "label")

    def __init__(self, n, dim, gen_action, label="", check=True):
        gen_action = tuple(gen_action)
        if len(gen_action) != max(n - 1, 0):
            raise ValueError(f"H_{n} needs {max(n - 1, 0)} generators")
        for g in gen_action:
            if g.rows != dim or g.cols != dim:
                raise ValueError("generator matrix shape mismatch")
        self.n = n
        self.dim = dim
        self.gen_action = gen_action
        self.label = label
        if check:
            self._check_relations()

    def _check_relations(self):
        eye = ExactMatrix.identity(self.dim)
        gens = self.gen_action
        for i, g in enumerate(gens, start=1):
            if g @ g != g.scale(Q_MINUS_ONE) + eye.scale(Q):
                raise ValueError(f"relation failure: quadratic at s_{i}")
        for i in range(len(gens)):
            for j in range(i + 2, len(gens)):
                if gens[i] @ gens[j] != gens[j] @ gens[i]:
                    raise ValueError(
                        f"relation failure: commutation at s_{i + 1}, s_{j + 1}"
                    )
        for i in range(len(gens) - 1):
            a, b = gens[i], gens[i + 1]
            if a @ b @ a != b @ a @ b:
                raise ValueError(f"relation failure: braid at s_{i + 1}")

    def generator(self, i: int) -> ExactMatrix:
        """Action of T_{s_i}."""
        return self.gen_action[i - 1]

    def word_matrix(self, word) -> ExactMatrix:
        """Action of T_{s_{i_1}} ... T_{s_{i_l}} for word (i_1, ..., i_l)."""
        out = ExactMatrix.identity(self.dim)
        for i in word:
            out = out @ self.gen_action[i - 1]
        return out

    def act_element(self, x: HeckeElement) -> ExactMatrix:
        if x.n != self.n:
            raise ValueError("rank mismatch")
        out = ExactMatrix.zeros(self.dim, self.dim)
        for w, c in x.coeffs.items():
            out = out + self.word_matrix(w.reduced_word()).scale(c)
        return out

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"ModulePresentation(H_{self.n}, dim {self.dim}{tag})"


def regular_representation(n: int, bound: int = REGULAR_BOUND) -> ModulePresentation:
    """Left multiplication of H_n on itself in the T_w basis (lex order)."""
    if n > bound:
        raise ValueError(f"size bound: n = {n} exceeds {bound}")
    basis = list(permutations_of(n))
    index = {w.one_line: t for t, w in enumerate(basis)}
    gens = []
    for i in range(1, n):
        entries = {}
        for t, w in enumerate(basis):
            sw = w.swap_values(i)
            if sw.length > w.length:
                entries[(index[sw.one_line], t)] = ONE
            else:
                entries[(index[sw.one_line], t)] = Q
                entries[(t, t)] = Q_MINUS_ONE
        gens.append(ExactMatrix(len(basis), len(basis), entries))
    return ModulePresentation(n, len(basis), gens, label=f"regular H_{n}")


def one_dim_rep(n: int, kind: str) -> ModulePresentation:
    """The two one-dimensional modules: every generator acts by q or by -1."""
    if kind == "index":
        value = Q
    elif kind == "sign":
        value = scal(-1)
    else:
        raise ValueError(f"unknown one-dimensional kind {kind!r}")
    g = ExactMatrix(1, 1, {(0, 0): value})
    return ModulePresentation(
        n, 1, [g] * max(n - 1, 0), label=f"{kind} H_{n}", check=False
    )


def index_rep(n: int) -> ModulePresentation:
    return one_dim_rep(n, "index")


def sign_rep(n: int) -> ModulePresentation:
    return one_dim_rep(n, "sign")


class RestrictedPair:
    """Restriction of an H_n-module to the Young subalgebra H_(n-m, m).

    Same underlying space; ``front`` keeps the generators s_1..s_{n-m-1}
    and ``tail`` the generators s_{n-m+1}..s_{n-1} (relabelled to H_m).
    The generator s_{n-m} linking the factors is dropped.
    """

    __slots__ = ("front", "tail")

    def __init__(self, front, tail):
        self.front = front
        self.tail = tail


def restrict(V: ModulePresentation, split) -> RestrictedPair:
    a, m = split
    if a < 0 or m < 0 or a + m != V.n:
        raise ValueError(f"composition size: {split} does not split {V.n}")
    front = ModulePresentation(
        a, V.dim, V.gen_action[: max(a - 1, 0)],
        label=f"{V.label}|front({a})", check=False,
    )
    tail = ModulePresentation(
        m, V.dim, V.gen_action[a:],
        label=f"{V.label}|tail({m})", check=False,
    )
    return RestrictedPair(front, tail)


def _simple_index(u: Permutation):
    """If u = s_t, return t; otherwise None."""
    diff = [x for x in range(1, u.n + 1) if u(x) != x]
    if len(diff) == 2 and diff[1] == diff[0] + 1 and u(diff[0]) == diff[1]:
        return diff[0]
    return None


def induce_pair(V: ModulePresentation, W: ModulePresentation) -> ModulePresentation:
    """The induced module H_{m+k} tensor_{H_(m,k)} (V boxtimes W).

    Basis T_d (x) (v_i (x) w_j) with d over the distinguished coset
    representatives of S_(m,k), ordered like coset_min_reps.  A generator
    T_s acts by one of three cases on the coset factor: move to the longer
    coset, act through the parabolic on a tensor slot, or the quadratic
    combination when the coset gets shorter.
    """
    m, k = V.n, W.n
    n = m + k
    comp = (m, k)
    reps = coset_min_reps(n, comp)
    rep_index = {d.one_line: t for t, d in enumerate(reps)}
    p, r = V.dim, W.dim
    dim = len(reps) * p * r

    def idx(di, i, j):
        return (di * p + i) * r + j

    gens = []
    for s in range(1, n):
        entries: dict = {}
        for di, d in enumerate(reps):
            sd = d.swap_values(s)
            if is_distinguished(sd, comp):
                ti = rep_index[sd.one_line]
                if sd.length > d.length:
                    for i in range(p):
                        for j in range(r):
                            entries[(idx(ti, i, j), idx(di, i, j))] = ONE
                else:
                    for i in range(p):
                        for j in range(r):
                            entries[(idx(ti, i, j), idx(di, i, j))] = Q
                            entries[(idx(di, i, j), idx(di, i, j))] = Q_MINUS_ONE
            else:
                u = d.inverse() * sd
                t = _simple_index(u)
                if t is None or t == m:
                    raise ValueError(
                        f"coset case analysis failed at s_{s}, d = {d.one_line}"
                    )
                if t < m:
                    g = V.gen_action[t - 1]
                    for (ii, i), c in g.entries.items():
                        for j in range(r):
                            entries[(idx(di, ii, j), idx(di, i, j))] = c
                else:
                    g = W.gen_action[t - m - 1]
                    for (jj, j), c in g.entries.items():
                        for i in range(p):
                            entries[(idx(di, i, jj), idx(di, i, j))] = c
        gens.append(ExactMatrix(dim, dim, entries))
    assert dim == comb(n, m) * p * r
    label = f"Ind({V.label or 'V'}, {W.label or 'W'})"
    return ModulePresentation(n, dim, gens, label=label)
