"""Cohomology operators, the module E(M,k) over H = k[chi_1..chi_c], and
support varieties.

The operators come out of the resolution the classical way: differentials
over Q already carry normal-form entries, so read them over the ambient ring
P, compose two consecutive ones, and divide the composite by the Groebner
basis of (f) with cofactor tracking.  The remainder must vanish identically;
the cofactors, pushed through the basis's own expression in f_1..f_c, give
an exact identity d~ d~ = sum_j f_j t~_j.  Reducing t~_j modulo (f) yields
chain maps of degree -2, and their constant-term matrices (transposed) are
the chi_j action on E.

The annihilator is approximated by window linear algebra: for each degree d
collect every homogeneous h with h-action zero on all composable windows
E^i -> E^{i+2d} inside the computed range.  That over-approximates the true
annihilator and shrinks as the range grows, so stabilization is detected by
comparing two window sizes up to radical, with the Betti-growth complexity
estimate as an independent guard on the dimension.
"""

from __future__ import annotations

import numpy as np

from .arith import Poly, matmul, nullspace
from .errors import InputError, InternalError, StabilizationError
from .groebner import (
    FreeElt,
    groebner_basis,
    ideal_dimension,
    ideal_ops,
    normal_form,
    radical_membership,
)
from .resolve import ModulePresentation, Resolution, resolve_min


class CiOperators:
    """For each j and each middle index i, the chain map t_j^{(i)} mapping
    resolution step i+1 to step i-1, stored as columns over Q."""

    __slots__ = ("upto", "cols")

    def __init__(self, c: int):
        self.upto = 0
        self.cols = [dict() for _ in range(c)]


def lift_and_operators(res: Resolution, upto: int) -> Resolution:
    """Extract the operators at middle indices 1..upto: express each
    composite d~_i d~_{i+1} (read over the ambient ring) exactly as
    sum_j f_j t~_j, storing t_j reduced mod (f).  A nonzero remainder in the
    division means the resolution is broken, which is an internal invariant
    violation, never user error."""
    rs = res.rs
    res.extend(upto + 1)
    if res.ops is None:
        res.ops = CiOperators(rs.codim)
    ops = res.ops
    ring = rs.ring
    gb = rs.ci_gb
    cofs_to_f = gb.cofactors  # element_e = sum_g cofs_to_f[e][g] f_g
    for i in range(ops.upto + 1, upto + 1):
        lo_rank = len(res.degs[i - 1])
        lo_shifts = res.degs[i - 1]
        t_cols = [[] for _ in range(rs.codim)]
        for c_idx, v in enumerate(res.diffs[i + 1]):
            w = FreeElt(ring, lo_rank, {}, lo_shifts)
            for r, f in enumerate(v.components()):
                if not f.is_zero():
                    w = w + res.diffs[i][r].poly_mul(f)
            u = [dict() for _ in range(rs.codim)]
            for r in range(lo_rank):
                wr = w.component(r)
                if wr.is_zero():
                    continue
                rem, div_cofs = normal_form(wr, gb)
                if not rem.is_zero():
                    raise InternalError(
                        "composite differential does not vanish modulo the "
                        "defining relations (broken resolution)",
                        step=i,
                        column=c_idx,
                        row=r,
                    )
                for e, q in enumerate(div_cofs):
                    if q.is_zero():
                        continue
                    for j in range(rs.codim):
                        piece = q * cofs_to_f[e][j]
                        if not piece.is_zero():
                            cur = u[j].get(r)
                            u[j][r] = piece if cur is None else cur + piece
            # exactness audit: sum_j f_j u_j must reproduce w identically
            check = FreeElt(ring, lo_rank, {}, lo_shifts)
            for j in range(rs.codim):
                for r, f in u[j].items():
                    check = check + FreeElt(
                        ring, lo_rank, {(r, m): c for m, c in (f * rs.ci[j]).terms.items()}, lo_shifts
                    )
            if check != w:
                raise InternalError(
                    "operator extraction lost exactness", step=i, column=c_idx
                )
            for j in range(rs.codim):
                entries = {}
                for r, f in u[j].items():
                    f = rs.qnf(f)
                    for m, cf in f.terms.items():
                        entries[(r, m)] = cf
                t_cols[j].append(FreeElt(ring, lo_rank, entries, lo_shifts))
        for j in range(rs.codim):
            ops.cols[j][i] = t_cols[j]
    ops.upto = max(ops.upto, upto)
    return res


def operator_columns(res: Resolution, j: int, lo: int):
    """Columns of t_j: step lo+2 -> step lo (middle index lo+1)."""
    return res.ops.cols[j][lo + 1]


class ExtKModule:
    """E(M,k) in cohomological degrees 0..steps: dims[i] = b_i, and for each
    j the action matrices act[j][i]: E^i -> E^{i+2} (shape b_{i+2} x b_i),
    valid for i <= steps-2.  Composites of these matrices commute exactly."""

    __slots__ = ("rs", "steps", "dims", "act", "_composites")

    def __init__(self, rs, steps, dims, act):
        self.rs = rs
        self.steps = steps
        self.dims = dims
        self.act = act
        self._composites = {}

    def monomial_window(self, mono: tuple, i: int) -> np.ndarray:
        """Composite action of the H-monomial chi^mono starting at E^i,
        factors applied in ascending variable index (lowest index acts
        first).  Memoized; commutation makes the order mathematically
        irrelevant, the fixed order makes outputs reproducible."""
        d = sum(mono)
        if i + 2 * d > self.steps:
            raise InputError("window extends past the computed range")
        got = self._composites.get((mono, i))
        if got is not None:
            return got
        if d == 0:
            out = np.eye(self.dims[i], dtype=np.int64)
        else:
            j = next(v for v, e in enumerate(mono) if e)
            rest = tuple(e - 1 if v == j else e for v, e in enumerate(mono))
            first = self.act[j][i]
            out = matmul(self.monomial_window(rest, i + 2), first, self.rs.p)
        self._composites[(mono, i)] = out
        return out


def ext_k_module(res: Resolution, steps: int) -> ExtKModule:
    """E^i = Hom(F_i, k) for i <= steps; the chi_j action is the transpose of
    t_j's constant-term matrix (reducing mod the variables kills everything
    of positive degree, and minimality makes the result independent of the
    lift)."""
    rs = res.rs
    res.extend(steps + 1)
    lift_and_operators(res, steps - 1 if steps >= 2 else 1)
    dims = [len(res.degs[i]) for i in range(steps + 1)]
    act = []
    for j in range(rs.codim):
        per_i = []
        for lo in range(steps - 1):
            cols = operator_columns(res, j, lo)
            mat = np.zeros((dims[lo + 2], dims[lo]), dtype=np.int64)
            for c_idx, col in enumerate(cols):
                for r in range(dims[lo]):
                    mat[c_idx, r] = col.terms.get((r, rs.ring._one_mono), 0)
            per_i.append(mat)
        act.append(per_i)
    return ExtKModule(rs, steps, dims, act)


class VarietyIdeal:
    """A support variety, carried as a homogeneous ideal in H up to radical.
    Generators are canonicalized to the reduced Groebner basis, so equal
    inputs produce byte-identical output.  All predicates are
    radical-invariant: containment is generator-wise radical membership, the
    union is the ideal product, the intersection the ideal sum."""

    __slots__ = ("h_ring", "gens", "meta", "_dim")

    def __init__(self, h_ring, gens, meta=None):
        self.h_ring = h_ring
        polys = []
        for i, g in enumerate(gens):
            g = h_ring.parse(g) if isinstance(g, str) else g
            if g.ring != h_ring:
                raise InputError(f"generator {i} lives in a different ring", index=i)
            if g.is_zero():
                continue
            if g.homogeneous_degree() is None:
                raise InputError(f"generator {i} is not homogeneous", index=i)
            polys.append(g)
        if polys:
            gb = groebner_basis(polys)
            self.gens = tuple(gb.scalar_elements())
        else:
            self.gens = ()
        self.meta = meta or {}
        self._dim = None

    def _check(self, other: "VarietyIdeal"):
        if self.h_ring != other.h_ring:
            raise InputError("varieties over different operator rings")

    def contains_element(self, g) -> bool:
        """Is g in the radical of the defining ideal?"""
        g = self.h_ring.parse(g) if isinstance(g, str) else g
        return radical_membership(g, list(self.gens), self.h_ring)

    def contains_variety(self, other: "VarietyIdeal") -> bool:
        """V(other) inside V(self): every defining generator of self lies in
        the radical of other's ideal."""
        self._check(other)
        return all(radical_membership(g, list(other.gens), self.h_ring) for g in self.gens)

    def equals(self, other: "VarietyIdeal") -> bool:
        return self.contains_variety(other) and other.contains_variety(self)

    def union(self, other: "VarietyIdeal") -> "VarietyIdeal":
        self._check(other)
        if not self.gens or not other.gens:
            # either side is the full space
            return VarietyIdeal(self.h_ring, ())
        prod = ideal_ops(list(self.gens), list(other.gens), "product", self.h_ring)
        return VarietyIdeal(self.h_ring, prod)

    def intersect(self, other: "VarietyIdeal") -> "VarietyIdeal":
        self._check(other)
        return VarietyIdeal(self.h_ring, list(self.gens) + list(other.gens))

    def is_trivial(self) -> bool:
        """Trivial = the single point 0, i.e. every chi_j vanishes on the
        variety.  The zero module and all finite-projective-dimension
        modules land here; the representation (chi_1..chi_c) is canonical."""
        return all(
            radical_membership(self.h_ring.gen(j), list(self.gens), self.h_ring)
            for j in range(self.h_ring.nvars)
        )

    def dimension(self) -> int:
        if self._dim is None:
            if not self.gens:
                self._dim = self.h_ring.nvars
            else:
                self._dim = ideal_dimension(list(self.gens), self.h_ring)
        return self._dim

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) if self.gens else "0"
        return f"VarietyIdeal(({inside}))"


def annihilator_window(ext: ExtKModule, max_op_degree: int = None) -> VarietyIdeal:
    """Candidate annihilator a_N: for each degree d <= D, all homogeneous h
    of degree d in the chi's whose action matrix E^i -> E^{i+2d} vanishes for
    every window inside the computed range.  One nullspace per degree, over
    the coefficients of the degree-d monomials.  Always contains the true
    annihilator; monotone shrinking in N."""
    rs = ext.rs
    h_ring = rs.h_ring
    D = ext.steps // 2 if max_op_degree is None else max_op_degree
    if D < 1 or D > ext.steps // 2:
        raise InputError(
            f"operator degree cap {D} outside [1, {ext.steps // 2}]", cap=D
        )
    found = []
    for d in range(1, D + 1):
        monos = h_ring.monomials_of_degree(d)
        blocks = []
        for i in range(0, ext.steps - 2 * d + 1):
            rows = ext.dims[i + 2 * d] * ext.dims[i]
            if rows == 0:
                continue
            block = np.empty((rows, len(monos)), dtype=np.int64)
            for col, m in enumerate(monos):
                block[:, col] = ext.monomial_window(m, i).reshape(-1)
            blocks.append(block)
        if blocks:
            a = np.concatenate(blocks, axis=0)
            kernel = nullspace(a, rs.p)
        else:
            # no composable window constrains degree d at all
            kernel = [[1 if k == col else 0 for k in range(len(monos))] for col in range(len(monos))]
        for vec in kernel:
            terms = {m: int(cf) for m, cf in zip(monos, vec) if cf}
            if terms:
                found.append(Poly(h_ring, terms))
    # drop generators already inside the ideal of the earlier ones
    kept = []
    for g in found:
        if kept:
            gb = groebner_basis(kept)
            if normal_form(g, gb)[0].is_zero():
                continue
        kept.append(g)
    return VarietyIdeal(h_ring, kept)


def complexity(pres: ModulePresentation, steps: int = 12) -> int:
    """Betti-growth estimate: the least r with b_i growing like i^{r-1},
    from successive finite differences of the tail (last half) of the
    computed Betti numbers.  Even and odd positions are differenced
    separately and the maximum taken, which also fits tails that are
    quasi-polynomial of period 2; on exactly polynomial tails it agrees with
    plain differencing."""
    res = resolve_min(pres, steps)
    seq = [len(res.degs[i]) for i in range(steps + 1)]
    tail = seq[steps // 2 :]

    def growth(s):
        s = list(s)
        count = 0
        while s and any(s):
            s = [b - a for a, b in zip(s, s[1:])]
            count += 1
        return count

    return max(growth(tail[0::2]), growth(tail[1::2]))


def support_variety(
    pres: ModulePresentation,
    steps: int = None,
    max_steps: int = None,
    max_op_degree: int = None,
) -> VarietyIdeal:
    """The support variety of M, as the stabilized window annihilator.

    Candidates a_N and a_{N+2} are computed; they are accepted when mutually
    radical-contained with equal dimension, and when that dimension matches
    the Betti-growth complexity estimate (an independent oracle for
    under-resolution).  Otherwise the window widens by 2 until the cap,
    where a stabilization error reports both candidates."""
    rs = pres.rs
    n0 = steps if steps is not None else max(8, 2 * rs.codim + 4)
    if n0 < 4:
        raise InputError("window of at least 4 steps required", steps=n0)
    cap = max_steps if max_steps is not None else n0 + 8
    res = resolve_min(pres, n0 + 3)
    n = n0
    while True:
        a_lo = annihilator_window(ext_k_module(res, n), max_op_degree)
        a_hi = annihilator_window(ext_k_module(res, n + 2), max_op_degree)
        agree = (
            a_lo.dimension() == a_hi.dimension()
            and a_lo.contains_variety(a_hi)
            and a_hi.contains_variety(a_lo)
        )
        if agree and complexity(pres, n + 2) == a_hi.dimension():
            a_hi.meta = {"stabilized_at": n, "steps_used": n + 2}
            return a_hi
        n += 2
        if n + 2 > cap:
            raise StabilizationError(
                f"window annihilator did not stabilize by N = {cap}",
                candidate_lo=[str(g) for g in a_lo.gens],
                candidate_hi=[str(g) for g in a_hi.gens],
                steps=cap,
            )
