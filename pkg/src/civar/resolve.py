"""Graded modules over Q = F_p[x]/(f) and their minimal free resolutions.

A module is a cokernel presentation: generator degrees plus homogeneous
relation columns in the corresponding graded free module.  Resolutions are
built step by step (syzygies over Q, then a minimal generating set of each
kernel), so every differential has entries in the graded maximal ideal and
Betti numbers can be read off as ranks.

Minimality of each kernel's generating set is decided by linear algebra over
k, degree by degree: a candidate column is kept exactly when it falls outside
the span of (maximal ideal) times the columns already kept.  Unit-pivot
pruning alone cannot do this job; a column can be redundant without any unit
entry appearing anywhere (v3 = v1 + x v2 leaves every entry in the maximal
ideal), and keeping such a column silently inflates every Betti number after
it.
"""

from __future__ import annotations

import numpy as np

from .arith import IncrementalSpan, Poly, PolyRing, DEGREVLEX, fp_inv, mono_deg
from .errors import InputError
from .groebner import (
    FreeElt,
    GroebnerBasis,
    SubmoduleOracle,
    groebner_basis,
    normal_form,
    syzygies,
)


class RingSpec:
    """The complete intersection Q = F_p[x_1..x_n]/(f_1..f_c), validated at
    construction: p an odd prime, each f_i homogeneous of degree >= 2, and
    (f_1..f_c) of codimension c (checked through the dimension of the ideal
    they generate, which certifies the regular-sequence property for
    homogeneous ideals)."""

    __slots__ = (
        "ring",
        "ci",
        "ci_degs",
        "h_ring",
        "_ci_gb",
        "_std_cache",
    )

    def __init__(self, p: int, variables, ci):
        self.ring = PolyRing(p, tuple(variables), DEGREVLEX)
        polys = []
        for i, src in enumerate(ci):
            f = self.ring.parse(src) if isinstance(src, str) else src
            if f.ring != self.ring:
                raise InputError(f"relation {i} lives in a different ring", index=i)
            d = f.homogeneous_degree()
            if d is None or d < 2:
                raise InputError(
                    f"relation {i} must be homogeneous of degree at least 2",
                    index=i,
                )
            polys.append(f)
        if not polys:
            raise InputError("a complete intersection needs at least one relation")
        if len(polys) > self.ring.nvars:
            raise InputError("more relations than variables cannot be a regular sequence")
        from .groebner import ideal_dimension

        dim = ideal_dimension(polys, self.ring)
        if dim != self.ring.nvars - len(polys):
            raise InputError(
                "the given relations do not form a regular sequence "
                f"(codimension {self.ring.nvars - dim}, expected {len(polys)})",
                codim=self.ring.nvars - dim,
            )
        self.ci = tuple(polys)
        self.ci_degs = tuple(f.homogeneous_degree() for f in polys)
        self.h_ring = PolyRing(p, tuple(f"chi{j+1}" for j in range(len(polys))), DEGREVLEX)
        self._ci_gb = None
        self._std_cache = {}

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def codim(self) -> int:
        return len(self.ci)

    @property
    def dim(self) -> int:
        return self.ring.nvars - len(self.ci)

    @property
    def is_artinian(self) -> bool:
        return self.dim == 0

    @property
    def ci_gb(self) -> GroebnerBasis:
        """Groebner basis of (f), with cofactors: element_e = sum_g T[e][g] f_g.
        The cofactors are what lets a reduction to zero be rewritten as an
        exact combination of the f_j themselves."""
        if self._ci_gb is None:
            self._ci_gb = groebner_basis(self.ci, cofactors=True)
        return self._ci_gb

    def qnf(self, f: Poly) -> Poly:
        """Normal form of f modulo (f_1..f_c): the canonical representative
        of its class in Q."""
        return normal_form(f, self.ci_gb)[0].component(0)

    def qnf_elt(self, v: FreeElt) -> FreeElt:
        comps = [self.qnf(f) for f in v.components()]
        return FreeElt.from_polys(comps, v.shifts)

    def standard_monomials(self, d: int):
        """Monomial k-basis of Q in degree d (ambient monomials not divisible
        by any lead of the Groebner basis of (f)), in monomial order."""
        if d < 0:
            return ()
        got = self._std_cache.get(d)
        if got is None:
            leads = [e.lead()[0][1] for e in self.ci_gb.elements]
            from .arith import mono_div

            got = tuple(
                m
                for m in self.ring.monomials_of_degree(d)
                if all(mono_div(m, l) is None for l in leads)
            )
            self._std_cache[d] = got
        return got

    def __eq__(self, other):
        return (
            isinstance(other, RingSpec)
            and self.ring == other.ring
            and self.ci == other.ci
        )

    def __hash__(self):
        return hash((self.ring, self.ci))

    def __repr__(self):
        rels = ", ".join(str(f) for f in self.ci)
        return f"RingSpec(F_{self.p}[{', '.join(self.ring.vars)}]/({rels}))"


class ModulePresentation:
    """Cokernel presentation of a graded Q-module: generator degrees and
    homogeneous relation columns.  Instances are immutable; derived data
    (resolution, vector model, the relation submodule's Groebner basis) is
    cached on the instance."""

    __slots__ = ("rs", "gens", "relations", "_resolution", "_model", "_sub_gb")

    def __init__(self, rs: RingSpec, gens, relations):
        self.rs = rs
        self.gens = tuple(gens)
        self.relations = tuple(relations)
        self._resolution = None
        self._model = None
        self._sub_gb = None

    @property
    def rank(self) -> int:
        return len(self.gens)

    def is_zero_presentation(self) -> bool:
        return not self.gens

    def relation_submodule_gb(self) -> GroebnerBasis:
        """Groebner basis of (relations + f e_i), the kernel of the ambient
        free module's surjection onto the module.  Normal forms against it
        give canonical representatives of module elements."""
        if self._sub_gb is None:
            ext = list(self.relations)
            ring = self.rs.ring
            for f in self.rs.ci:
                for r in range(self.rank):
                    ext.append(
                        FreeElt(ring, self.rank, {(r, m): c for m, c in f.terms.items()}, self.gens)
                    )
            self._sub_gb = groebner_basis(ext)
        return self._sub_gb

    def __repr__(self):
        return f"ModulePresentation(gens={self.gens}, {len(self.relations)} relations)"


def present_module(rs: RingSpec, gen_degrees, relations) -> ModulePresentation:
    """Validate and normalize a presentation: every relation column must be
    homogeneous against the generator degrees; entries are reduced modulo
    (f); zero columns are dropped."""
    gens = tuple(int(d) for d in gen_degrees)
    rank = len(gens)
    cols = []
    for j, col in enumerate(relations):
        if isinstance(col, FreeElt):
            if col.rank != rank:
                raise InputError(f"relation {j} has {col.rank} entries, expected {rank}", index=j)
            elt = FreeElt(rs.ring, rank, dict(col.terms), gens)
        else:
            entries = list(col)
            if len(entries) != rank:
                raise InputError(f"relation {j} has {len(entries)} entries, expected {rank}", index=j)
            polys = [rs.ring.parse(e) if isinstance(e, str) else e for e in entries]
            elt = FreeElt.from_polys(polys, gens) if rank else FreeElt(rs.ring, 0, {}, ())
        elt = rs.qnf_elt(elt) if elt.terms else elt
        if elt.is_zero():
            continue
        if not elt.is_homogeneous():
            raise InputError(f"relation {j} is not homogeneous", index=j)
        cols.append(elt)
    return ModulePresentation(rs, gens, cols)


def residue_field(rs: RingSpec) -> ModulePresentation:
    """k = Q/(x_1..x_n), one generator in degree 0."""
    cols = []
    for v in range(rs.ring.nvars):
        m = rs.ring.gen(v).lead()[0]
        cols.append(FreeElt(rs.ring, 1, {(0, m): 1}, (0,)))
    return ModulePresentation(rs, (0,), cols)


def free_module(rs: RingSpec, degrees) -> ModulePresentation:
    return ModulePresentation(rs, tuple(int(d) for d in degrees), ())


def direct_sum(a: ModulePresentation, b: ModulePresentation) -> ModulePresentation:
    if a.rs != b.rs:
        raise InputError("direct sum of modules over different rings")
    ra = a.rank
    gens = a.gens + b.gens
    rank = len(gens)
    cols = []
    for col in a.relations:
        cols.append(FreeElt(a.rs.ring, rank, dict(col.terms), gens))
    for col in b.relations:
        cols.append(
            FreeElt(a.rs.ring, rank, {(c + ra, m): v for (c, m), v in col.terms.items()}, gens)
        )
    return ModulePresentation(a.rs, gens, cols)


def prune_units(pres: ModulePresentation) -> ModulePresentation:
    """Remove superfluous generators by unit-pivot elimination: whenever a
    relation ties a generator to the others with a unit coefficient, clear
    that generator's row by column operations and delete both.  This yields
    a presentation whose relation entries all lie in the maximal ideal, so
    the surviving generators are a minimal generating set."""
    rs = pres.rs
    gens = list(pres.gens)
    mat = [[col.component(i) for col in pres.relations] for i in range(pres.rank)]
    ncols = len(pres.relations)
    live_rows = list(range(len(gens)))
    live_cols = list(range(ncols))
    while True:
        pivot = None
        for j in live_cols:
            for i in live_rows:
                e = mat[i][j]
                if not e.is_zero() and e.constant_term() != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        u = fp_inv(mat[i][j].constant_term(), rs.p)
        for j2 in live_cols:
            if j2 == j or mat[i][j2].is_zero():
                continue
            q = mat[i][j2].scale(u)
            for r in live_rows:
                if not mat[r][j].is_zero():
                    mat[r][j2] = rs.qnf(mat[r][j2] - q * mat[r][j])
        live_rows.remove(i)
        live_cols.remove(j)
    new_gens = tuple(pres.gens[i] for i in live_rows)
    cols = []
    for j in live_cols:
        entries = [mat[i][j] for i in live_rows]
        if all(e.is_zero() for e in entries):
            continue
        if not entries:
            continue
        cols.append(FreeElt.from_polys(entries, new_gens))
    return ModulePresentation(rs, new_gens, cols)


# ---------------------------------------------------------------------------
# degreewise vectorization of free modules over Q


def _free_basis_keys(rs: RingSpec, shifts, d: int):
    """k-basis of degree-d part of the free module sum Q(-shift_i)e_i, as
    (component, standard monomial) keys in a fixed order."""
    keys = []
    for c, s in enumerate(shifts):
        for m in rs.standard_monomials(d - s):
            keys.append((c, m))
    return keys


def _vectorize(elt: FreeElt, index: dict, width: int) -> np.ndarray:
    v = np.zeros(width, dtype=np.int64)
    for key, coeff in elt.terms.items():
        v[index[key]] = coeff
    return v


def minimal_columns(rs: RingSpec, columns, shifts):
    """Extract a minimal generating set from homogeneous columns, greedily by
    ascending degree: a column is kept iff it is independent of (maximal
    ideal) * (columns kept so far) plus earlier same-degree keeps.  The kept
    set generates the same submodule and is minimal by the graded Nakayama
    argument."""
    cols = []
    for c in columns:
        if c.is_zero():
            continue
        c = rs.qnf_elt(c)
        if not c.is_zero():
            cols.append(c)
    cols.sort(key=lambda c: c.degree())
    kept = []
    i = 0
    while i < len(cols):
        d = cols[i].degree()
        keys = _free_basis_keys(rs, tuple(shifts), d)
        index = {k: pos for pos, k in enumerate(keys)}
        span = IncrementalSpan(rs.p, len(keys))
        for g in kept:
            e = g.degree()
            for m in rs.standard_monomials(d - e):
                if mono_deg(m) == 0:
                    continue
                w = rs.qnf_elt(g.poly_mul(Poly(rs.ring, {m: 1})))
                if not w.is_zero():
                    span.add(_vectorize(w, index, len(keys)))
        while i < len(cols) and cols[i].degree() == d:
            if span.add(_vectorize(cols[i], index, len(keys))):
                kept.append(cols[i])
            i += 1
    return kept


# ---------------------------------------------------------------------------
# resolutions


class Resolution:
    """Minimal graded free resolution of a module over Q, extendable on
    demand.  degs[i] lists the generator degrees of F_i; diffs[i] holds the
    columns of d_i: F_i -> F_{i-1} (diffs[0] is a placeholder).  Because each
    step takes a minimal generating set of the kernel, entries of every
    differential lie in the maximal ideal and len(degs[i]) is the i-th Betti
    number."""

    __slots__ = ("rs", "pres", "pruned", "degs", "diffs", "ops")

    def __init__(self, pres: ModulePresentation):
        self.rs = pres.rs
        self.pres = pres
        self.pruned = prune_units(pres)
        d1 = minimal_columns(self.rs, self.pruned.relations, self.pruned.gens)
        self.degs = [tuple(self.pruned.gens), tuple(c.degree() for c in d1)]
        self.diffs = [None, d1]
        self.ops = None  # filled by the operator-extraction layer

    def extend(self, n: int):
        while len(self.degs) <= n:
            i = len(self.degs) - 1
            cols = self.diffs[i]
            if not cols:
                self.degs.append(())
                self.diffs.append([])
                continue
            syz = syzygies(cols, quotient=list(self.rs.ci))
            nxt = minimal_columns(self.rs, syz, self.degs[i])
            self.degs.append(tuple(c.degree() for c in nxt))
            self.diffs.append(nxt)
        return self

    def betti(self, i: int) -> int:
        if i < 0:
            raise InputError("negative homological degree")
        self.extend(i)
        return len(self.degs[i])

    def betti_sequence(self, n: int):
        self.extend(n)
        return [len(self.degs[i]) for i in range(n + 1)]

    def diff(self, i: int):
        if i < 1:
            raise InputError("differentials start at index 1")
        self.extend(i)
        return self.diffs[i]


def resolve_min(pres: ModulePresentation, steps: int = 1) -> Resolution:
    """The minimal free resolution, computed out to d_steps and cached on the
    presentation, so later calls only extend."""
    if pres._resolution is None:
        pres._resolution = Resolution(pres)
    return pres._resolution.extend(steps)


def syzygy_module(pres: ModulePresentation, n: int) -> ModulePresentation:
    """Presentation of the n-th syzygy module read off the minimal
    resolution: generators F_n, relations the columns of d_{n+1}.  n = 0
    returns the pruned module itself."""
    if n < 0:
        raise InputError("syzygy index must be nonnegative")
    res = resolve_min(pres, n + 1)
    if n == 0:
        return res.pruned
    return ModulePresentation(pres.rs, res.degs[n], list(res.diffs[n + 1]))


def apply_columns(cols, v: FreeElt, target_rank: int, target_shifts) -> FreeElt:
    """Image of v under the map whose matrix has the given columns: each
    component of v multiplies the corresponding column."""
    ring = v.ring
    out = FreeElt(ring, target_rank, {}, target_shifts)
    for c, f in enumerate(v.components()):
        if not f.is_zero():
            out = out + cols[c].poly_mul(f)
    return out


def _transpose_columns(cols, src_rank: int, src_degs, ring):
    """Columns of the dual map: row r of the matrix, placed in the free
    module on the original columns' generators with negated degrees."""
    rank = len(cols)
    shifts = tuple(-d for d in (c.degree() for c in cols)) if cols else ()
    out = []
    for r in range(src_rank):
        terms = {}
        for c, col in enumerate(cols):
            for (cc, m), v in col.terms.items():
                if cc == r:
                    terms[(c, m)] = v
        out.append(FreeElt(ring, rank, terms, shifts))
    return out


def is_mcm(pres: ModulePresentation) -> bool:
    """Maximal Cohen-Macaulay test: over an artinian Q every module
    qualifies; otherwise check Ext^i(M, Q) = 0 for i = 1..dim Q by comparing
    the kernel of the transposed differential with the image of the previous
    one."""
    rs = pres.rs
    if rs.dim == 0:
        return True
    res = resolve_min(pres, rs.dim + 1)
    ring = rs.ring
    for i in range(1, rs.dim + 1):
        bi = len(res.degs[i])
        if bi == 0:
            continue
        dual_shifts = tuple(-d for d in res.degs[i])
        up = res.diffs[i + 1]
        if up:
            ker = syzygies(_transpose_columns(up, bi, res.degs[i], ring), quotient=list(rs.ci))
        else:
            ker = [
                FreeElt(ring, bi, {(r, ring._one_mono): 1}, dual_shifts)
                for r in range(bi)
            ]
        if not ker:
            continue
        down_rows = _transpose_columns(res.diffs[i], len(res.degs[i - 1]), res.degs[i - 1], ring)
        # rows of d_i live in the same dual free module as the kernel
        down = [FreeElt(ring, bi, dict(w.terms), dual_shifts) for w in down_rows]
        oracle = SubmoduleOracle(down, quotient=list(rs.ci))
        for w in ker:
            w2 = FreeElt(ring, bi, dict(w.terms), dual_shifts)
            if not oracle.contains(w2):
                return False
    return True


# ---------------------------------------------------------------------------
# finite-dimensional vector models


class VectorModel:
    """A module of finite k-dimension flattened to explicit linear algebra:
    a monomial basis (component, standard monomial), the degree of each basis
    vector, one action matrix per ring variable, and the coordinates of the
    presentation's generators.  Action matrices are exact mod-p integer
    matrices; composites of them realize the action of any monomial."""

    __slots__ = ("rs", "basis", "degs", "actions", "gen_coords", "_index")

    def __init__(self, rs, basis, degs, actions, gen_coords):
        self.rs = rs
        self.basis = basis
        self.degs = degs
        self.actions = actions
        self.gen_coords = gen_coords
        self._index = {k: i for i, k in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def degree_indices(self, d: int) -> np.ndarray:
        return np.flatnonzero(self.degs == d)

    def top_degree(self) -> int:
        return int(self.degs.max()) if len(self.degs) else -1

    def monomial_action(self, mono: tuple) -> np.ndarray:
        out = np.eye(self.dim, dtype=np.int64)
        from .arith import matmul

        for v, e in enumerate(mono):
            for _ in range(e):
                out = matmul(self.actions[v], out, self.rs.p)
        return out

    def coords(self, elt: FreeElt, gb: GroebnerBasis) -> np.ndarray:
        rem, _ = normal_form(elt, gb)
        v = np.zeros(self.dim, dtype=np.int64)
        for key, coeff in rem.terms.items():
            v[self._index[key]] = coeff
        return v


def vector_model(pres: ModulePresentation) -> VectorModel:
    """Flatten a presentation to a VectorModel.  Raises InputError when the
    module is not finite-dimensional over k (some component of the quotient
    admits no pure power of some variable among the leading terms)."""
    if pres._model is not None:
        return pres._model
    rs = pres.rs
    ring = rs.ring
    rank = pres.rank
    if rank == 0:
        vm = VectorModel(
            rs,
            [],
            np.zeros(0, dtype=np.int64),
            [np.zeros((0, 0), dtype=np.int64) for _ in range(ring.nvars)],
            np.zeros((0, 0), dtype=np.int64),
        )
        pres._model = vm
        return vm
    gb = pres.relation_submodule_gb()
    leads = [e.lead()[0] for e in gb.elements]
    from .arith import mono_div, mono_one

    one = mono_one(ring.nvars)
    bound = [[0] * ring.nvars for _ in range(rank)]
    for c in range(rank):
        comp_leads = [m for (cc, m) in leads if cc == c]
        if one in comp_leads:
            continue
        for v in range(ring.nvars):
            pure = [m[v] for m in comp_leads if all(e == 0 for i, e in enumerate(m) if i != v)]
            if not pure:
                raise InputError(
                    "module has infinite dimension over k "
                    f"(no power of {ring.vars[v]} kills generator {c})",
                    component=c,
                    variable=ring.vars[v],
                )
            bound[c][v] = min(pure)
    basis = []
    for c in range(rank):
        comp_leads = [m for (cc, m) in leads if cc == c]
        if one in comp_leads:
            continue
        for m in _exponent_box(bound[c]):
            if all(mono_div(m, l) is None for l in comp_leads):
                basis.append((c, m))
    basis.sort(key=lambda k: (mono_deg(k[1]) + pres.gens[k[0]], k[0], ring.order.key(k[1])))
    index = {k: i for i, k in enumerate(basis)}
    dim = len(basis)
    degs = np.array([mono_deg(m) + pres.gens[c] for (c, m) in basis], dtype=np.int64)
    actions = []
    from .arith import mono_mul

    for v in range(ring.nvars):
        mat = np.zeros((dim, dim), dtype=np.int64)
        xv = ring.gen(v)
        for col, (c, m) in enumerate(basis):
            image = FreeElt(ring, rank, {(c, mono_mul(m, xv.lead()[0])): 1}, pres.gens)
            rem, _ = normal_form(image, gb)
            for key, coeff in rem.terms.items():
                mat[index[key], col] = coeff
        actions.append(mat)
    gen_coords = np.zeros((rank, dim), dtype=np.int64)
    for c in range(rank):
        rem, _ = normal_form(FreeElt(ring, rank, {(c, one): 1}, pres.gens), gb)
        for key, coeff in rem.terms.items():
            gen_coords[c, index[key]] = coeff
    vm = VectorModel(rs, basis, degs, actions, gen_coords)
    pres._model = vm
    return vm


def _exponent_box(bounds):
    """All exponent tuples with e_v < bounds[v] (bounds[v] >= 1)."""
    if not bounds:
        yield ()
        return
    def rec(i, acc):
        if i == len(bounds):
            yield tuple(acc)
            return
        for e in range(bounds[i]):
            yield from rec(i + 1, acc + [e])
    yield from rec(0, [])


def hilbert_function(pres: ModulePresentation, d: int) -> int:
    """dim_k of the degree-d piece, counted as standard monomials of the
    relation submodule's Groebner basis.  Works whether or not the module has
    finite total dimension."""
    if pres.rank == 0:
        return 0
    gb = pres.relation_submodule_gb()
    from .arith import mono_div

    leads = [e.lead()[0] for e in gb.elements]
    count = 0
    for c, s in enumerate(pres.gens):
        e = d - s
        if e < 0:
            continue
        comp_leads = [m for (cc, m) in leads if cc == c]
        for m in pres.rs.ring.monomials_of_degree(e):
            if all(mono_div(m, l) is None for l in comp_leads):
                count += 1
    return count


def present_from_vector_model(rs: RingSpec, degs, actions) -> ModulePresentation:
    """Reverse direction: from an abstract finite model (basis degrees plus
    commuting action matrices) back to a minimal presentation.  Minimal
    generators are coordinate vectors outside (maximal ideal)*M degree by
    degree; relations come from nullspaces of the evaluation map in each
    degree up to top+1, where the kernel is generated."""
    from .arith import matmul, nullspace

    degs = np.asarray(degs, dtype=np.int64)
    dim = int(degs.shape[0])
    p = rs.p
    if dim == 0:
        return ModulePresentation(rs, (), ())
    gens = []  # (degree, coordinate)
    lo, hi = int(degs.min()), int(degs.max())
    for d in range(lo, hi + 1):
        idx = np.flatnonzero(degs == d)
        if idx.size == 0:
            continue
        span = IncrementalSpan(p, dim)
        prev = np.flatnonzero(degs == d - 1)
        if prev.size:
            for mat in actions:
                for j in prev:
                    span.add(mat[:, j])
        for j in idx:
            unit = np.zeros(dim, dtype=np.int64)
            unit[j] = 1
            if span.add(unit):
                gens.append((d, int(j)))
    gen_degs = tuple(d for d, _ in gens)
    r = len(gens)
    ring = rs.ring
    mono_mats = {}

    def monomial_matrix(m):
        got = mono_mats.get(m)
        if got is None:
            got = np.eye(dim, dtype=np.int64)
            for v, e in enumerate(m):
                for _ in range(e):
                    got = matmul(actions[v], got, p)
            mono_mats[m] = got
        return got

    relations = []
    for d in range(min(gen_degs, default=0), hi + 2):
        keys = []
        columns = []
        for g, (gd, coord) in enumerate(gens):
            for m in rs.standard_monomials(d - gd):
                keys.append((g, m))
                columns.append(monomial_matrix(m)[:, coord])
        if not keys:
            continue
        a = np.stack(columns, axis=1) % p
        for vec in nullspace(a, p):
            terms = {}
            for (g, m), coeff in zip(keys, vec):
                if coeff:
                    terms[(g, m)] = int(coeff)
            relations.append(FreeElt(ring, r, terms, gen_degs))
    minimal = minimal_columns(rs, relations, gen_degs)
    return ModulePresentation(rs, gen_degs, minimal)
