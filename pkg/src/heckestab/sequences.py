"""Consistent sequences of H_n-modules and their stability invariants.

A consistent sequence V = (V_n, phi_n) packages one module per rank with
connectors phi_n : V_n -> V_{n+1} that intertwine the H_n-actions through
the tower embedding T_w -> T_w.  On top of that single axiom this module
builds the whole stability toolkit:

  * M(W), the induced sequence sum_{m<=n} H_n (x)_{H_(m,n-m)} (W_m (x) index),
    whose connectors are inclusions of distinguished coset bases;
  * span / generation degree, free covers, kernels, cokernels, sums,
    tensor with an index-like factor;
  * the coinvariant tower Phi_a with its maps T, and the observed
    injective / surjective / stability degrees;
  * weight, multiplicity tables c_{lam,n}, and the uniform-stability
    verdict (injectivity + generation + constant multiplicities);
  * the shift S_{+a} (new letters enter at the front, H_n keeps acting on
    the last n letters) and its M(m) (+) C_a decomposition;
  * a seeded random-submodule experiment probing the noetherian property.

Every degree-indexed claim a report makes is qualified by the truncation
bound n_max: nothing here certifies behaviour beyond the computed window.
"""

from __future__ import annotations

import json
import random
from collections import deque
from fractions import Fraction

from .hecke import ModulePresentation, index_rep, induce_pair, regular_representation
from .linalg import EchelonBasis, ExactMatrix, kernel_basis, kron, quotient_structure, rank
from .partitions import pad, partition_label, unpad
from .qfield import ONE, Q, Scalar, scal
from .specht import coinvariant_quotient, decompose, specht_module
from .symgroup import coset_min_reps

__all__ = [
    "ConsistentSequence",
    "SequenceMorphism",
    "check_consistency",
    "zero_module",
    "zero_sequence",
    "build_M",
    "build_Mm",
    "build_M_specht",
    "non_finitely_generated",
    "span",
    "generation_degree",
    "free_cover",
    "phi_a",
    "PhiSequence",
    "degrees",
    "weight",
    "multiplicity_table",
    "multiplicity_row_label",
    "is_uniformly_stable",
    "shift",
    "shift_decompose_Mm",
    "noetherian_experiment",
    "direct_sum",
    "seq_kernel",
    "seq_cokernel",
    "tensor",
    "sequence_to_json_obj",
    "sequence_from_json_obj",
    "save_sequence",
    "load_sequence",
]

SCHEMA = "hecke-stab/1"


class ConsistentSequence:
    """Modules V_0..V_{n_max} with intertwining connectors."""

    __slots__ = ("n_max", "modules", "connectors", "label")

    def __init__(self, modules, connectors, label="", check=True):
        modules = tuple(modules)
        connectors = tuple(connectors)
        if len(connectors) != max(len(modules) - 1, 0):
            raise ValueError("need one connector per consecutive pair")
        for n, f in enumerate(connectors):
            if f.rows != modules[n + 1].dim or f.cols != modules[n].dim:
                raise ValueError(f"connector {n} shape mismatch")
        for n, mod in enumerate(modules):
            if mod.n != n:
                raise ValueError(f"module at position {n} has rank {mod.n}")
        self.n_max = len(modules) - 1
        self.modules = modules
        self.connectors = connectors
        self.label = label
        if check:
            verdict = check_consistency(self)
            if not verdict["ok"]:
                raise ValueError(
                    f"inconsistent sequence at (n, i) = {verdict['violations']}"
                )

    def dims(self) -> list:
        return [mod.dim for mod in self.modules]

    def phi_composite(self, m: int, n: int) -> ExactMatrix:
        """The composite connector V_m -> V_n (identity when m = n)."""
        if not 0 <= m <= n <= self.n_max:
            raise ValueError(f"composite range {m}..{n} outside truncation")
        out = ExactMatrix.identity(self.modules[m].dim)
        for k in range(m, n):
            out = self.connectors[k] @ out
        return out

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"ConsistentSequence(n_max {self.n_max}, dims {self.dims()}{tag})"


def check_consistency(V: ConsistentSequence) -> dict:
    """Verify every commuting square phi_n T_{s_i} = T_{s_i} phi_n exactly."""
    violations = []
    for n in range(V.n_max):
        f = V.connectors[n]
        for i in range(1, n):
            left = f @ V.modules[n].generator(i)
            right = V.modules[n + 1].generator(i) @ f
            if left != right:
                violations.append((n, i))
    return {"ok": not violations, "violations": violations}


class SequenceMorphism:
    """Degreewise maps f_n that are module maps and commute with connectors."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source, target, components, check=True):
        components = tuple(components)
        if len(components) != source.n_max + 1 or source.n_max != target.n_max:
            raise ValueError("morphism length mismatch")
        for n, f in enumerate(components):
            if f.rows != target.modules[n].dim or f.cols != source.modules[n].dim:
                raise ValueError(f"component {n} shape mismatch")
        self.source = source
        self.target = target
        self.components = components
        if check:
            for n, f in enumerate(components):
                for i in range(1, n):
                    if f @ source.modules[n].generator(i) != target.modules[
                        n
                    ].generator(i) @ f:
                        raise ValueError(
                            f"not a morphism: fails H_{n}-action at s_{i}"
                        )
            for n in range(source.n_max):
                left = components[n + 1] @ source.connectors[n]
                right = target.connectors[n] @ components[n]
                if left != right:
                    raise ValueError(
                        f"not a morphism: square at degree {n} does not commute"
                    )


def zero_module(n: int) -> ModulePresentation:
    gens = [ExactMatrix.zeros(0, 0)] * max(n - 1, 0)
    return ModulePresentation(n, 0, gens, label="0", check=False)


def zero_sequence(n_max: int) -> ConsistentSequence:
    modules = [zero_module(n) for n in range(n_max + 1)]
    connectors = [ExactMatrix.zeros(0, 0) for _ in range(n_max)]
    return ConsistentSequence(modules, connectors, label="0", check=False)


def _presentation_direct_sum(n, parts, label="") -> ModulePresentation:
    """Block-diagonal sum of presentations of the same rank."""
    dim = sum(p.dim for p in parts)
    gens = []
    for i in range(max(n - 1, 0)):
        entries = {}
        offset = 0
        for p in parts:
            for (r, c), v in p.gen_action[i].entries.items():
                entries[(offset + r, offset + c)] = v
            offset += p.dim
        gens.append(ExactMatrix(dim, dim, entries))
    return ModulePresentation(n, dim, gens, label=label, check=False)


def _build_M_layout(W: dict, n_max: int, label: str):
    """build_M plus, per degree, the list of (m, offset, coset reps)."""
    W = {m: P for m, P in W.items() if P.dim > 0}
    for m, P in W.items():
        if P.n != m:
            raise ValueError(f"W[{m}] has rank {P.n}")
    modules = []
    layouts = []
    for n in range(n_max + 1):
        parts = []
        layout = []
        offset = 0
        for m in sorted(W):
            if m > n:
                continue
            ind = induce_pair(W[m], index_rep(n - m))
            layout.append((m, offset, coset_min_reps(n, (m, n - m))))
            parts.append(ind)
            offset += ind.dim
        modules.append(_presentation_direct_sum(n, parts, label=f"{label}_{n}"))
        layouts.append(layout)
    connectors = []
    for n in range(n_max):
        entries = {}
        target = {m: (off, reps) for m, off, reps in layouts[n + 1]}
        for m, off, reps in layouts[n]:
            p = W[m].dim
            off2, reps2 = target[m]
            where = {d.one_line: t for t, d in enumerate(reps2)}
            for di, d in enumerate(reps):
                ti = where[d.embed(n + 1).one_line]
                for i in range(p):
                    entries[(off2 + ti * p + i, off + di * p + i)] = ONE
        connectors.append(
            ExactMatrix(modules[n + 1].dim, modules[n].dim, entries)
        )
    seq = ConsistentSequence(modules, connectors, label=label)
    return seq, layouts


def build_M(W: dict, n_max: int, label: str = "") -> ConsistentSequence:
    """The induced sequence M(W)_n = sum_{m<=n} Ind(W_m, index_{n-m}).

    Connectors send a coset basis vector T_d (x) w to T_d (x) w again,
    reading d inside S_{n+1}; in the distinguished bases this is a 0/1
    inclusion because embedding preserves the subset-lex coset order.
    """
    seq, _ = _build_M_layout(W, n_max, label or "M(W)")
    return seq


def build_Mm(m: int, n_max: int) -> ConsistentSequence:
    """M(m): the sequence induced from the regular H_m-module."""
    return build_M({m: regular_representation(m)}, n_max, label=f"M({m})")


def build_M_specht(lam, n_max: int) -> ConsistentSequence:
    """M(S^lam): induced from the Specht module in degree |lam|."""
    lam = tuple(lam)
    if sum(lam) > n_max:
        raise ValueError(f"|lam| = {sum(lam)} exceeds n_max = {n_max}")
    return build_M(
        {sum(lam): specht_module(lam)},
        n_max,
        label=f"M(S({partition_label(lam)}))",
    )


def non_finitely_generated(n_max: int) -> ConsistentSequence:
    """A sequence acquiring a fresh generator at every degree.

    The direct sum over k <= n_max of M(S^(k)) has a new one-dimensional
    generator appear in each degree, so dim grows like 2^n and the
    multiplicity columns never stabilize.
    """
    W = {k: specht_module((k,) if k else ()) for k in range(n_max + 1)}
    return build_M(W, n_max, label="sum_k M(S(k))")


def _closure(module: ModulePresentation, vectors) -> EchelonBasis:
    """H-span of the vectors: close an echelon basis under the generators."""
    basis = EchelonBasis(module.dim)
    queue = deque()
    for v in vectors:
        if v and basis.insert(dict(v)) is not None:
            queue.append(basis.vectors[-1])
    while queue:
        v = queue.popleft()
        for g in module.gen_action:
            w = g.apply(v)
            if w and basis.insert(w) is not None:
                queue.append(basis.vectors[-1])
    return basis


def _span_bases(V: ConsistentSequence, seeds) -> list:
    """Per-degree echelon bases of the subsequence generated by the seeds."""
    by_degree = {}
    for deg, vec in seeds:
        if not 0 <= deg <= V.n_max:
            raise ValueError(f"seed degree {deg} outside truncation")
        for i in vec:
            if not 0 <= i < V.modules[deg].dim:
                raise ValueError(f"seed coordinate {i} outside V_{deg}")
        by_degree.setdefault(deg, []).append(vec)
    bases = []
    carried = []
    for n in range(V.n_max + 1):
        basis = _closure(V.modules[n], carried + by_degree.get(n, []))
        bases.append(basis)
        if n < V.n_max:
            f = V.connectors[n]
            carried = [f.apply(v) for v in basis.vectors]
    return bases


def _sub_presentation(module, basis: EchelonBasis, label="") -> ModulePresentation:
    dim = len(basis.vectors)
    gens = []
    for g in module.gen_action:
        entries = {}
        for k, v in enumerate(basis.vectors):
            coords = basis.coordinates(g.apply(v))
            if coords is None:
                raise ValueError("subspace is not stable under the action")
            for i, c in enumerate(coords):
                if c:
                    entries[(i, k)] = c
        gens.append(ExactMatrix(dim, dim, entries))
    return ModulePresentation(module.n, dim, gens, label=label, check=False)


def _restriction_matrix(basis_from, basis_to, mat) -> ExactMatrix:
    """mat restricted to span(basis_from) -> span(basis_to), in coordinates."""
    entries = {}
    for k, v in enumerate(basis_from.vectors):
        coords = basis_to.coordinates(mat.apply(v))
        if coords is None:
            raise ValueError("map does not preserve the subspaces")
        for i, c in enumerate(coords):
            if c:
                entries[(i, k)] = c
    return ExactMatrix(len(basis_to.vectors), len(basis_from.vectors), entries)


def span(V: ConsistentSequence, seeds, label: str = "") -> tuple:
    """The subsequence generated by (degree, vector) seeds, plus a report.

    The report's generation_degree is the least d such that the seeds of
    degree <= d already generate the whole ambient V within truncation
    (None when even the full seed set does not).
    """
    seeds = list(seeds)
    bases = _span_bases(V, seeds)
    modules = [
        _sub_presentation(V.modules[n], bases[n], label=f"{label}_{n}")
        for n in range(V.n_max + 1)
    ]
    connectors = [
        _restriction_matrix(bases[n], bases[n + 1], V.connectors[n])
        for n in range(V.n_max)
    ]
    sub = ConsistentSequence(modules, connectors, label=label or "span")
    inclusions = [
        ExactMatrix.from_columns(V.modules[n].dim, bases[n].vectors)
        for n in range(V.n_max + 1)
    ]
    inclusion = SequenceMorphism(sub, V, inclusions)
    dims = sub.dims()
    ambient = V.dims()
    generation = None
    if dims == ambient:
        occupied = sorted({0, *(deg for deg, _ in seeds)})
        for d in occupied:
            prefix = [(deg, vec) for deg, vec in seeds if deg <= d]
            if [len(b.vectors) for b in _span_bases(V, prefix)] == ambient:
                generation = d
                break
    report = {
        "dims": dims,
        "ambient_dims": ambient,
        "spans_ambient": dims == ambient,
        "generation_degree": generation,
        "seed_degrees": sorted({deg for deg, _ in seeds}),
        "inclusion": inclusion,
    }
    return sub, report


def generation_degree(V: ConsistentSequence):
    """Least d with span of the full bases in degrees <= d equal to V.

    The value n_max is possible and carries no predictive content; every
    answer is relative to the truncation window.
    """
    ambient = V.dims()
    target = None
    for d in range(V.n_max + 1):
        seeds = [
            (n, {i: ONE})
            for n in range(d + 1)
            for i in range(V.modules[n].dim)
        ]
        if [len(b.vectors) for b in _span_bases(V, seeds)] == ambient:
            target = d
            break
    return target


def free_cover(V: ConsistentSequence, d: int) -> SequenceMorphism:
    """The canonical epimorphism from sum_{i<=d} M(V_i) onto V.

    On the degree-i summand the map sends T_w (x) v to T_w . phi(v) where
    phi is the composite connector V_i -> V_n.  The construction is well
    defined only when each composite image consists of q-eigenvectors of
    the discarded tail generators; the morphism constructor verifies this
    exactly and raises otherwise.
    """
    gen = generation_degree(V)
    if gen is None or gen > d:
        raise ValueError(
            f"insufficient degree: V needs generation degree {gen}, got {d}"
        )
    W = {i: V.modules[i] for i in range(d + 1) if V.modules[i].dim > 0}
    if not W:
        cover = zero_sequence(V.n_max)
        comps = [ExactMatrix.zeros(V.modules[n].dim, 0) for n in range(V.n_max + 1)]
        return SequenceMorphism(cover, V, comps)
    cover, layouts = _build_M_layout(W, V.n_max, label=f"cover<= {d}")
    components = []
    for n in range(V.n_max + 1):
        entries = {}
        for m, offset, reps in layouts[n]:
            p = W[m].dim
            comp = V.phi_composite(m, n)
            for di, rep in enumerate(reps):
                block = V.modules[n].word_matrix(rep.reduced_word()) @ comp
                for (r, i), c in block.entries.items():
                    entries[(r, offset + di * p + i)] = c
        components.append(
            ExactMatrix(V.modules[n].dim, cover.modules[n].dim, entries)
        )
    morphism = SequenceMorphism(cover, V, components)
    for n, f in enumerate(components):
        if rank(f) != V.modules[n].dim:
            raise ValueError(f"cover not surjective at degree {n}")
    return morphism


class PhiSequence:
    """The coinvariant tower Phi_a(V): H_a-modules with maps T."""

    __slots__ = ("a", "spaces", "maps", "projections")

    def __init__(self, a, spaces, maps, projections):
        self.a = a
        self.spaces = spaces
        self.maps = maps
        self.projections = projections

    def dims(self):
        return [s.dim for s in self.spaces]


def phi_a(V: ConsistentSequence, a: int) -> PhiSequence:
    """Quotients Phi_a(V)_n = V_{a+n} / Q_n and induced maps T.

    T[v] = [phi_{a+n}(v)] is well defined because the connectors push the
    coinvariant subspace forward; both that and the H_a-equivariance of T
    are verified exactly.
    """
    if not 0 <= a <= V.n_max:
        raise ValueError(f"a = {a} outside truncation 0..{V.n_max}")
    spaces = []
    structures = []
    for n in range(V.n_max - a + 1):
        quotient, qs = coinvariant_quotient(V.modules[a + n], a)
        spaces.append(quotient)
        structures.append(qs)
    maps = []
    for n in range(V.n_max - a):
        f = V.connectors[a + n]
        T = structures[n + 1].projection @ f @ structures[n].section
        if T @ structures[n].projection != structures[n + 1].projection @ f:
            raise ValueError(
                f"tail coinvariants not preserved by the connector at n = {n}"
            )
        for i in range(1, a):
            if T @ spaces[n].generator(i) != spaces[n + 1].generator(i) @ T:
                raise ValueError(
                    f"induced map not H_{a}-equivariant at n = {n}, s_{i}"
                )
        maps.append(T)
    return PhiSequence(a, spaces, maps, [qs.projection for qs in structures])


def degrees(
    V: ConsistentSequence,
    a_max: int,
    mode: str = "exact",
    count: int = 3,
    seed: int = 0,
) -> dict:
    """Observed injective / surjective / stability degrees of Phi_a maps.

    Probes every pair 0 <= a <= a_max, 0 <= n < n_max - a.  An observed
    degree is the least s making the property hold at every probed (a, n)
    with n >= s, or None when no probed window suffices.  All statements
    are relative to the truncation.
    """
    if not 0 <= a_max <= V.n_max:
        raise ValueError(f"a_max = {a_max} outside truncation 0..{V.n_max}")
    probes = []
    max_n = 0
    for a in range(a_max + 1):
        tower = phi_a(V, a)
        results = []
        for n, T in enumerate(tower.maps):
            r = rank(T, mode=mode, count=count, seed=seed + 977 * a + n)
            results.append(
                {
                    "n": n,
                    "dim_source": T.cols,
                    "dim_target": T.rows,
                    "injective": r == T.cols,
                    "surjective": r == T.rows,
                }
            )
            max_n = max(max_n, n)
        probes.append({"a": a, "results": results})

    def least_degree(key):
        for s in range(max_n + 2):
            ok = all(
                row[key]
                for block in probes
                for row in block["results"]
                if row["n"] >= s
            )
            if ok:
                return s if s <= max_n else None
        return None

    injective = least_degree("injective")
    surjective = least_degree("surjective")
    stability = None
    for s in range(max_n + 1):
        if all(
            row["injective"] and row["surjective"]
            for block in probes
            for row in block["results"]
            if row["n"] >= s
        ):
            stability = s
            break
    violations = []
    for block in probes:
        rows = block["results"]
        for prev, nxt in zip(rows, rows[1:]):
            # a 0 -> 0 step is vacuously an isomorphism; the module being
            # born right after it is growth, not a degeneration
            nonvacuous = prev["dim_source"] > 0 or prev["dim_target"] > 0
            if (
                nonvacuous
                and prev["injective"]
                and prev["surjective"]
                and not (nxt["injective"] and nxt["surjective"])
            ):
                violations.append((block["a"], nxt["n"]))
    return {
        "label": V.label,
        "n_max": V.n_max,
        "a_max": a_max,
        "mode": mode,
        "probes": probes,
        "injective_degree": injective,
        "surjective_degree": surjective,
        "stability_degree": stability,
        "monotonicity_violations": violations,
        "qualifier": f"within truncation n_max={V.n_max}",
    }


def weight(V: ConsistentSequence) -> int:
    """Max of |unpad(mu)| over all irreducible constituents of all V_n."""
    best = 0
    for module in V.modules:
        if module.dim == 0:
            continue
        for mu in decompose(module):
            best = max(best, sum(unpad(mu)))
    return best


def multiplicity_table(V: ConsistentSequence) -> dict:
    """The table c_{lam,n}: multiplicity of S^{lam[n]} inside V_n.

    Row labels are unpadded partitions; a constituent whose unpadded label
    cannot be re-padded at its own rank (impossible for true partitions,
    kept as a defensive channel) would be filed under ("invalid-pad", mu).
    """
    rows = {}
    for n, module in enumerate(V.modules):
        if module.dim == 0:
            continue
        for mu, c in decompose(module).items():
            lam = unpad(mu)
            key = lam if pad(lam, n) == mu else ("invalid-pad", mu)
            rows.setdefault(key, [0] * (V.n_max + 1))[n] = c
    def row_key(key):
        if key and isinstance(key[0], str):
            return (1, 0, key[1])
        return (0, sum(key), key)

    order = sorted(rows, key=row_key)
    return {
        "label": V.label,
        "n_values": list(range(V.n_max + 1)),
        "rows": {key: rows[key] for key in order},
    }


def multiplicity_row_label(key) -> str:
    """Printable label for a multiplicity-table row key."""
    if key and isinstance(key[0], str):
        return f"invalid-pad:{partition_label(key[1])}"
    return partition_label(key)


def is_uniformly_stable(
    V: ConsistentSequence,
    a_max=None,
    mode: str = "exact",
    count: int = 3,
    seed: int = 0,
) -> dict:
    """Uniform representation stability verdict within the truncation.

    Finds the least N < n_max such that for every N <= n < n_max the
    connector is injective, V_{n+1} is generated over H_{n+1} by its
    image, and the multiplicity columns at n and n+1 agree.  N = n_max is
    never reported: that window is empty, and vacuous evidence must not
    certify a sequence that acquires new generators at the last computed
    degree.  When a_max is given the report also carries the predicted
    onset bound s + m (stability degree plus weight) for comparison;
    mode, count and seed configure the rank backend of that probe, while
    the clause checks themselves stay exact.
    """
    table = multiplicity_table(V)
    clauses = []
    for n in range(V.n_max):
        f = V.connectors[n]
        injective = rank(f) == f.cols
        image = _closure(V.modules[n + 1], f.columns())
        generated = len(image.vectors) == V.modules[n + 1].dim
        constant = all(col[n] == col[n + 1] for col in table["rows"].values())
        clauses.append(
            {
                "n": n,
                "injective": injective,
                "generated": generated,
                "multiplicities_match": constant,
            }
        )
    observed = None
    if V.n_max == 0:
        observed = 0
    for N in range(V.n_max):
        if all(
            c["injective"] and c["generated"] and c["multiplicities_match"]
            for c in clauses
            if c["n"] >= N
        ):
            observed = N
            break
    out = {
        "label": V.label,
        "stable": observed is not None,
        "observed_N": observed,
        "clauses": clauses,
        "qualifier": f"within truncation n_max={V.n_max}",
    }
    if a_max is not None:
        report = degrees(V, a_max, mode=mode, count=count, seed=seed)
        m = weight(V)
        s = report["stability_degree"]
        out["weight"] = m
        out["stability_degree"] = s
        out["predicted_bound"] = None if s is None else s + m
        out["within_predicted"] = (
            s is not None and observed is not None and observed <= s + m
        )
    return out


def shift(V: ConsistentSequence, a: int) -> ConsistentSequence:
    """S_{+a}V: degree n is V_{n+a} with H_n acting on the last n letters.

    The a new letters enter at the front, so the retained generators are
    s_{a+1}, ..., s_{a+n-1}, relabelled to 1, ..., n-1; the connectors are
    reused unchanged and the truncation shrinks to n_max - a.
    """
    if not 0 <= a <= V.n_max:
        raise ValueError(f"shift amount {a} outside truncation 0..{V.n_max}")
    if a == 0:
        return V
    modules = []
    for n in range(V.n_max - a + 1):
        big = V.modules[a + n]
        modules.append(
            ModulePresentation(
                n,
                big.dim,
                big.gen_action[a:],
                label=f"S+{a}({V.label})_{n}",
                check=False,
            )
        )
    connectors = [V.connectors[a + n] for n in range(V.n_max - a)]
    return ConsistentSequence(
        modules, connectors, label=f"S+{a}({V.label})"
    )


def _block_split(mat, rows_b, rows_c, cols_b, cols_c):
    """Split into (B-block, C-block); None if a cross entry exists."""
    rb = {i: t for t, i in enumerate(rows_b)}
    rc = {i: t for t, i in enumerate(rows_c)}
    cb = {j: t for t, j in enumerate(cols_b)}
    cc = {j: t for t, j in enumerate(cols_c)}
    b_entries = {}
    c_entries = {}
    for (i, j), v in mat.entries.items():
        if i in rb and j in cb:
            b_entries[(rb[i], cb[j])] = v
        elif i in rc and j in cc:
            c_entries[(rc[i], cc[j])] = v
        else:
            return None
    return (
        ExactMatrix(len(rows_b), len(cols_b), b_entries),
        ExactMatrix(len(rows_c), len(cols_c), c_entries),
    )


def shift_decompose_Mm(m: int, a: int, n_max: int) -> dict:
    """Exhibit S_{+a}M(m) = M(m) (+) C_a inside the coset basis.

    The degree-n basis of the shifted sequence is indexed by (A, w) with A
    an m-subset of {1..n+a}; the vectors with A disjoint from the new
    front letters {1..a} reproduce M(m)_n verbatim (relabelling A to A-a
    preserves the subset-lex order), and the remaining vectors form the
    complement C_a, a consistent subsequence of generation degree <= m-1.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if a < 0:
        raise ValueError("a must be nonnegative")
    base = build_Mm(m, n_max + a)
    shifted = shift(base, a)
    fresh = build_Mm(m, n_max)
    p = regular_representation(m).dim
    b_positions = []
    c_positions = []
    for n in range(n_max + 1):
        reps = coset_min_reps(n + a, (m, n + a - m)) if n + a >= m else []
        b_idx = []
        c_idx = []
        for di, d in enumerate(reps):
            front_free = all(d(x) > a for x in range(1, m + 1))
            for i in range(p):
                (b_idx if front_free else c_idx).append(di * p + i)
        b_positions.append(b_idx)
        c_positions.append(c_idx)
    matches = True
    c_modules = []
    for n in range(n_max + 1):
        big = shifted.modules[n]
        c_gens = []
        for i in range(1, n):
            split = _block_split(
                big.generator(i),
                b_positions[n], c_positions[n],
                b_positions[n], c_positions[n],
            )
            if split is None:
                raise ValueError(f"blocks not stable at degree {n}, s_{i}")
            b_block, c_block = split
            matches = matches and b_block == fresh.modules[n].generator(i)
            c_gens.append(c_block)
        c_modules.append(
            ModulePresentation(
                n, len(c_positions[n]), c_gens, label=f"C_{a}_{n}", check=False
            )
        )
    c_connectors = []
    for n in range(n_max):
        split = _block_split(
            shifted.connectors[n],
            b_positions[n + 1], c_positions[n + 1],
            b_positions[n], c_positions[n],
        )
        if split is None:
            raise ValueError(f"blocks not connector-stable at degree {n}")
        b_block, c_block = split
        matches = matches and b_block == fresh.connectors[n]
        c_connectors.append(c_block)
    complement = ConsistentSequence(
        c_modules, c_connectors, label=f"C_{a} of S+{a}M({m})"
    )
    gen_deg = generation_degree(complement)
    return {
        "m": m,
        "a": a,
        "n_max": n_max,
        "shifted_dims": shifted.dims(),
        "summand_dims": [len(b) for b in b_positions],
        "complement_dims": complement.dims(),
        "direct_sum_ok": all(
            len(b_positions[n]) + len(c_positions[n]) == shifted.modules[n].dim
            for n in range(n_max + 1)
        ),
        "matches_fresh_Mm": matches,
        "complement_generation_degree": gen_deg,
        "bound_ok": gen_deg is not None and gen_deg <= m - 1,
        "complement": complement,
    }


def noetherian_experiment(m: int, trials: int, seed: int, n_max: int) -> dict:
    """Random submodules of M(m): generation degree and stability, seeded.

    Each trial draws a few sparse rational vectors in random degrees,
    spans them, and asks whether the resulting subsequence is finitely
    generated and uniformly stable within the truncation.  Seed degrees
    are capped at n_max - m - 1: a submodule generated in degree d has
    weight at most m and predicted stable onset at most d + m, so the cap
    is what makes stabilization observable before the window ends.  A
    submodule born in the last degree would be flagged unstable on
    vacuous evidence, which measures the truncation, not the module.
    Evidence, not proof; identical seeds give identical reports.
    """
    V = build_Mm(m, n_max)
    rng = random.Random(seed)
    deg_cap = max(0, n_max - m - 1)
    per_trial = []
    for t in range(trials):
        n_seeds = rng.randint(1, 3)
        seeds = []
        for _ in range(n_seeds):
            deg = rng.randint(0, deg_cap)
            dim = V.modules[deg].dim
            vec = {}
            if dim:
                support = rng.sample(range(dim), rng.randint(1, min(3, dim)))
                for i in sorted(support):
                    c = rng.randint(-3, 3)
                    if c:
                        vec[i] = scal(Fraction(c))
            seeds.append((deg, vec))
        sub, _ = span(V, seeds, label=f"trial {t}")
        gen_deg = generation_degree(sub)
        verdict = is_uniformly_stable(sub)
        table = multiplicity_table(sub)
        per_trial.append(
            {
                "trial": t,
                "seed_degrees": sorted(deg for deg, _ in seeds),
                "dims": sub.dims(),
                "generation_degree": gen_deg,
                "stable": verdict["stable"],
                "observed_N": verdict["observed_N"],
                "multiplicities": {
                    multiplicity_row_label(key): counts
                    for key, counts in table["rows"].items()
                },
            }
        )
    gen_degrees = [row["generation_degree"] for row in per_trial]
    return {
        "m": m,
        "trials": trials,
        "seed": seed,
        "n_max": n_max,
        "per_trial": per_trial,
        "max_generation_degree": max(
            (g for g in gen_degrees if g is not None), default=0
        ),
        "all_finitely_generated": all(g is not None for g in gen_degrees),
        "all_stable": all(row["stable"] for row in per_trial),
    }


def direct_sum(V: ConsistentSequence, W: ConsistentSequence) -> ConsistentSequence:
    if V.n_max != W.n_max:
        raise ValueError("truncation mismatch")
    modules = [
        _presentation_direct_sum(
            n, [V.modules[n], W.modules[n]], label=f"({V.label})(+)({W.label})_{n}"
        )
        for n in range(V.n_max + 1)
    ]
    connectors = []
    for n in range(V.n_max):
        f, g = V.connectors[n], W.connectors[n]
        entries = dict(f.entries)
        entries.update(
            {(i + f.rows, j + f.cols): c for (i, j), c in g.entries.items()}
        )
        connectors.append(
            ExactMatrix(f.rows + g.rows, f.cols + g.cols, entries)
        )
    return ConsistentSequence(
        modules, connectors, label=f"({V.label})(+)({W.label})", check=False
    )


def seq_kernel(f: SequenceMorphism) -> ConsistentSequence:
    """Degreewise kernel, a consistent subsequence of the source."""
    V = f.source
    bases = []
    for n in range(V.n_max + 1):
        basis = EchelonBasis(V.modules[n].dim)
        for v in kernel_basis(f.components[n]):
            basis.insert(v)
        bases.append(basis)
    modules = [
        _sub_presentation(V.modules[n], bases[n], label=f"ker_{n}")
        for n in range(V.n_max + 1)
    ]
    connectors = [
        _restriction_matrix(bases[n], bases[n + 1], V.connectors[n])
        for n in range(V.n_max)
    ]
    return ConsistentSequence(modules, connectors, label=f"ker({V.label})")


def seq_cokernel(f: SequenceMorphism) -> ConsistentSequence:
    """Degreewise cokernel with the induced connectors."""
    W = f.target
    structures = []
    modules = []
    for n in range(W.n_max + 1):
        qs = quotient_structure(
            W.modules[n].dim,
            f.components[n].columns(),
            W.modules[n].gen_action,
        )
        structures.append(qs)
        modules.append(
            ModulePresentation(
                n, qs.quotient_dim, qs.induced, label=f"coker_{n}", check=False
            )
        )
    connectors = []
    for n in range(W.n_max):
        g = W.connectors[n]
        T = structures[n + 1].projection @ g @ structures[n].section
        if T @ structures[n].projection != structures[n + 1].projection @ g:
            raise ValueError("not invariant")
        connectors.append(T)
    return ConsistentSequence(modules, connectors, label=f"coker({W.label})")


def _is_index_like(module: ModulePresentation) -> bool:
    eye_q = ExactMatrix.identity(module.dim).scale(Q)
    return all(g == eye_q for g in module.gen_action)


def tensor(V: ConsistentSequence, W: ConsistentSequence) -> ConsistentSequence:
    """Degreewise tensor product when one factor is index-like.

    At generic q the T-basis carries no coproduct, so a module structure
    on V_n (x) W_n exists only when one factor acts by q everywhere; the
    other factor then acts on its slot and the connectors are phi (x) psi.
    """
    if V.n_max != W.n_max:
        raise ValueError("truncation mismatch")
    modules = []
    for n in range(V.n_max + 1):
        a, b = V.modules[n], W.modules[n]
        if _is_index_like(b):
            gens = [
                kron(g, ExactMatrix.identity(b.dim)) for g in a.gen_action
            ]
        elif _is_index_like(a):
            gens = [
                kron(ExactMatrix.identity(a.dim), g) for g in b.gen_action
            ]
        else:
            raise ValueError("tensor requires an index-like factor")
        modules.append(
            ModulePresentation(
                n, a.dim * b.dim, gens, label=f"({a.label})(x)({b.label})",
                check=False,
            )
        )
    connectors = [
        kron(V.connectors[n], W.connectors[n]) for n in range(V.n_max)
    ]
    return ConsistentSequence(
        modules, connectors, label=f"({V.label})(x)({W.label})"
    )


def sequence_to_json_obj(V: ConsistentSequence) -> dict:
    return {
        "schema": SCHEMA,
        "label": V.label,
        "n_max": V.n_max,
        "modules": [
            {
                "n": n,
                "dim": mod.dim,
                "generators": [g.to_json_obj() for g in mod.gen_action],
            }
            for n, mod in enumerate(V.modules)
        ],
        "connectors": [f.to_json_obj() for f in V.connectors],
    }


def sequence_from_json_obj(obj) -> ConsistentSequence:
    if obj.get("schema") != SCHEMA:
        raise ValueError(f"unknown schema {obj.get('schema')!r}")
    modules = []
    for rec in obj["modules"]:
        gens = [ExactMatrix.from_json_obj(g) for g in rec["generators"]]
        modules.append(
            ModulePresentation(rec["n"], rec["dim"], gens, label="")
        )
    connectors = [ExactMatrix.from_json_obj(f) for f in obj["connectors"]]
    return ConsistentSequence(modules, connectors, label=obj.get("label", ""))


def save_sequence(V: ConsistentSequence, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(sequence_to_json_obj(V), fh, sort_keys=True, indent=2)
        fh.write("\n")


def load_sequence(path) -> ConsistentSequence:
    with open(path, "r", encoding="utf-8") as fh:
        return sequence_from_json_obj(json.load(fh))
