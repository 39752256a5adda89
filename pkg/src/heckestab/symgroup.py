"""Symmetric group combinatorics: words, lengths, coset representatives.

Permutations are stored in one-line notation over {1..n} and composed as
functions, (sigma * tau)(x) = sigma(tau(x)).  Young subgroups are given by
compositions (tuples of nonnegative integers summing to n) whose parts cut
{1..n} into consecutive position blocks.

>>> w = Permutation((3, 2, 1))
>>> w.length
3
>>> w.reduced_word()
(1, 2, 1)
"""

from __future__ import annotations

import itertools

__all__ = [
    "Permutation",
    "permutations_of",
    "blocks_of",
    "coset_min_reps",
    "double_coset_min_reps",
    "conjugacy_min_reps",
    "double_coset_stabilization",
]


class Permutation:
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ("one_line", "_len")

    def __init__(self, one_line):
        ol = tuple(one_line)
        if sorted(ol) != list(range(1, len(ol) + 1)):
            raise ValueError(f"not a permutation of 1..{len(ol)}: {ol}")
        self.one_line = ol
        self._len = None

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        """The adjacent transposition s_i swapping i and i+1."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"s_{i} is not a generator of S_{n}")
        ol = list(range(1, n + 1))
        ol[i - 1], ol[i] = ol[i], ol[i - 1]
        return cls(ol)

    @classmethod
    def from_word(cls, n: int, word) -> "Permutation":
        """The product s_{i_1} s_{i_2} ... s_{i_l} for word (i_1, ..., i_l)."""
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(n, i)
        return w

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, x: int) -> int:
        return self.one_line[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return Permutation(tuple(self.one_line[v - 1] for v in other.one_line))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, v in enumerate(self.one_line, start=1):
            inv[v - 1] = pos
        return Permutation(inv)

    @property
    def length(self) -> int:
        """Coxeter length = number of inversions."""
        if self._len is None:
            ol = self.one_line
            self._len = sum(
                1
                for a, b in itertools.combinations(range(self.n), 2)
                if ol[a] > ol[b]
            )
        return self._len

    @property
    def is_identity(self) -> bool:
        return self.one_line == tuple(range(1, self.n + 1))

    def swap_values(self, i: int) -> "Permutation":
        """Left multiplication by s_i (exchanges the values i and i+1)."""
        out = Permutation(
            tuple(
                i + 1 if v == i else i if v == i + 1 else v for v in self.one_line
            )
        )
        return out

    def left_descents(self):
        """Generators i with l(s_i w) < l(w), i.e. i appears after i+1."""
        pos = [0] * (self.n + 1)
        for p, v in enumerate(self.one_line):
            pos[v] = p
        return [i for i in range(1, self.n) if pos[i] > pos[i + 1]]

    def reduced_word(self) -> tuple:
        """The lexicographically smallest reduced word.

        Peeling off the smallest left descent at each step is greedy-valid:
        the first letters of reduced words of w are exactly its left
        descents, so the smallest choice extends to the lex-min word.

        >>> Permutation((2, 3, 1)).reduced_word()
        (1, 2)
        """
        w = self
        word = []
        descents = w.left_descents()
        while descents:
            i = descents[0]
            word.append(i)
            w = w.swap_values(i)
            descents = w.left_descents()
        return tuple(word)

    def embed(self, m: int) -> "Permutation":
        """The image under S_n ⊆ S_m fixing the letters n+1..m."""
        if m < self.n:
            raise ValueError("cannot embed into a smaller group")
        return Permutation(self.one_line + tuple(range(self.n + 1, m + 1)))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.one_line == other.one_line

    def __hash__(self):
        return hash(self.one_line)

    def __repr__(self):
        return f"Permutation({self.one_line})"


def permutations_of(n: int):
    """All of S_n in lexicographic one-line order."""
    for ol in itertools.permutations(range(1, n + 1)):
        yield Permutation(ol)


def _check_composition(n: int, comp) -> tuple:
    comp = tuple(comp)
    if any(part < 0 for part in comp) or sum(comp) != n:
        raise ValueError(f"composition size: {comp} does not sum to {n}")
    return comp


def blocks_of(comp) -> tuple:
    """Consecutive position blocks [start, end] (1-based, end inclusive)."""
    out = []
    start = 1
    for part in comp:
        out.append((start, start + part - 1))
        start += part
    return tuple(out)


def is_distinguished(w: Permutation, comp) -> bool:
    """Whether w is the minimal element of its left coset w·S_comp.

    Equivalent to w being increasing on every position block of comp.
    """
    ol = w.one_line
    for start, end in blocks_of(comp):
        for p in range(start, end):
            if ol[p - 1] > ol[p]:
                return False
    return True


def coset_min_reps(n: int, comp) -> list:
    """Distinguished minimal-length left coset representatives of S_comp.

    Every w in S_n factors uniquely as w = d·u with u in the Young subgroup
    and l(w) = l(d) + l(u); the returned d are increasing on each block.
    Order: by the tuple of value sets assigned to the blocks, block by
    block in lexicographic order (so for comp = (m, n-m) the reps follow
    the m-subsets of {1..n} in lexicographic order).

    >>> [d.one_line for d in coset_min_reps(3, (2, 1))]
    [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    """
    comp = _check_composition(n, comp)
    reps = []

    def assign(remaining: tuple, parts: tuple, acc: tuple):
        if not parts:
            reps.append(Permutation(acc))
            return
        k = parts[0]
        for chosen in itertools.combinations(remaining, k):
            rest = tuple(v for v in remaining if v not in set(chosen))
            assign(rest, parts[1:], acc + chosen)

    assign(tuple(range(1, n + 1)), comp, ())
    return reps


def double_coset_min_reps(n: int, mu, lam) -> list:
    """Minimal-length representatives of the double cosets S_mu\\S_n/S_lam.

    A representative is distinguished on the right for lam (increasing on
    lam position blocks) and on the left for mu (values within a mu block
    appear in increasing positions).

    >>> [d.one_line for d in double_coset_min_reps(3, (2, 1), (2, 1))]
    [(1, 2, 3), (1, 3, 2)]
    """
    mu = _check_composition(n, mu)
    lam = _check_composition(n, lam)
    out = []
    for d in coset_min_reps(n, lam):
        pos = [0] * (n + 1)
        for p, v in enumerate(d.one_line):
            pos[v] = p
        ok = True
        for start, end in blocks_of(mu):
            for v in range(start, end):
                if pos[v] > pos[v + 1]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(d)
    return out


def conjugacy_min_reps(n: int) -> dict:
    """A minimal-length representative for each conjugacy class of S_n.

    The class of cycle type mu is represented by the product of disjoint
    cycles on consecutive letters (1 .. mu_1)(mu_1+1 .. mu_1+mu_2)...,
    which has length n - (number of parts), minimal in its class.
    """
    from .partitions import partitions_of

    reps = {}
    for mu in partitions_of(n):
        ol = list(range(1, n + 1))
        start = 1
        for part in mu:
            # cycle start -> start+1 -> ... -> start+part-1 -> start
            for x in range(start, start + part - 1):
                ol[x - 1] = x + 1
            ol[start + part - 2] = start
            start += part
        reps[mu] = Permutation(ol)
    return reps


def double_coset_stabilization(a: int, m: int, n_max: int) -> dict:
    """Track 𝒟_{mu_n, lam_n} for lam_n = (m, a+n-m), mu_n = (1,..,1, n).

    For each probed n, reports the minimal double coset representatives in
    S_{a+n}, whether each set embeds into the next one (fixing new letters),
    and the least n at which the chain stops growing within the bound.
    """
    if a < 0 or m < 0:
        raise ValueError("a and m must be nonnegative")
    n_lo = max(0, m - a)
    chain = []
    reps_by_n = {}
    for n in range(n_lo, n_max + 1):
        lam = (m, a + n - m)
        mu = (1,) * a + (n,)
        reps = double_coset_min_reps(a + n, mu, lam)
        reps_by_n[n] = reps
        chain.append({"n": n, "size": len(reps)})
    inclusions_ok = True
    for n in range(n_lo, n_max):
        embedded = {d.embed(a + n + 1) for d in reps_by_n[n]}
        included = embedded <= set(reps_by_n[n + 1])
        chain[n - n_lo]["included_in_next"] = included
        inclusions_ok = inclusions_ok and included
    stabilized_at = None
    for n in range(n_lo, n_max + 1):
        if all(
            len(reps_by_n[k]) == len(reps_by_n[n]) for k in range(n, n_max + 1)
        ):
            stabilized_at = n
            break
    return {
        "a": a,
        "m": m,
        "n_max": n_max,
        "chain": chain,
        "reps_by_n": reps_by_n,
        "inclusions_ok": inclusions_ok,
        "stabilized_at": stabilized_at,
        "stabilized_by_m": stabilized_at is not None and stabilized_at <= m,
    }


if __name__ == "__main__":
    import doctest

    doctest.testmod()
