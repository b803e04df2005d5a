"""Groebner machinery for submodules of graded free modules over F_p[x].

An element of a rank-r free module is stored as one dictionary mapping
(component, exponent tuple) to a nonzero residue.  The module order is
position-over-term: a term in a lower component beats any term in a higher
one, ties within a component broken by the ring's monomial order.  Because
the leading components form an elimination block under this order, syzygies
drop out of a single completion run: each generator is given an inert tail
recording how the current element was assembled from the input, and any
element whose module part dies during reduction is harvested, its tail being
exactly a syzygy (the Schreyer generating set, one syzygy per S-pair that
reduces to zero).

Quotient rings never appear explicitly.  To work over Q = P/(f) the callers
adjoin f_j * e_i to the generators and, for syzygies, strip those components
from the harvested tails afterwards.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .arith import Poly, PolyRing, fp_inv, mono_deg, mono_div, mono_lcm, mono_mul, mono_one
from .errors import InputError, ResourceBudgetError


@dataclass(frozen=True)
class Budgets:
    """Hard resource limits for a completion run.  Exceeding one raises
    ResourceBudgetError; there is no silent truncation."""

    max_pairs: int = 50_000
    max_degree: int = 40


DEFAULT_BUDGETS = Budgets()

_current_budgets = DEFAULT_BUDGETS


def configure_budgets(budgets: Budgets | None) -> Budgets:
    """Set the process-wide fallback budgets and return the previous value.
    None restores the shipped defaults.  The CLI runs one job per process,
    which is what makes a process-wide setting safe; library callers that
    need a local override pass `budgets` explicitly."""
    global _current_budgets
    prev = _current_budgets
    _current_budgets = DEFAULT_BUDGETS if budgets is None else budgets
    return prev


# ---------------------------------------------------------------------------
# free module elements


class FreeElt:
    """Element of a free module F = sum Q(-shift_i) e_i, over the ambient
    polynomial ring.  Terms live in a single dict keyed by (component,
    monomial); degree shifts ride along so homogeneity is checkable."""

    __slots__ = ("ring", "rank", "shifts", "terms")

    def __init__(self, ring: PolyRing, rank: int, terms: dict, shifts=None):
        self.ring = ring
        self.rank = rank
        self.terms = terms
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank

    @classmethod
    def from_polys(cls, polys, shifts=None) -> "FreeElt":
        polys = list(polys)
        if not polys:
            raise InputError("a free module element needs at least one component")
        ring = polys[0].ring
        terms = {}
        for c, f in enumerate(polys):
            if f.ring != ring:
                raise InputError("components from different rings")
            for m, v in f.terms.items():
                terms[(c, m)] = v
        return cls(ring, len(polys), terms, shifts)

    def component(self, c: int) -> Poly:
        t = {m: v for (cc, m), v in self.terms.items() if cc == c}
        return Poly(self.ring, t)

    def components(self):
        return [self.component(c) for c in range(self.rank)]

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Common degree of all terms counting shifts; None if mixed, -1 if
        zero."""
        if not self.terms:
            return -1
        degs = {mono_deg(m) + self.shifts[c] for (c, m) in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return self.degree() is not None

    def lead(self):
        """((component, monomial), coefficient) of the leading term under
        position-over-term; None for zero."""
        if not self.terms:
            return None
        key = self.ring.order.key
        cm = max(self.terms, key=lambda t: (-t[0], key(t[1])))
        return cm, self.terms[cm]

    def scale(self, c: int) -> "FreeElt":
        p = self.ring.p
        c %= p
        if c == 0:
            return FreeElt(self.ring, self.rank, {}, self.shifts)
        return FreeElt(
            self.ring, self.rank, {k: (c * v) % p for k, v in self.terms.items()}, self.shifts
        )

    def __add__(self, other):
        self._check(other)
        p = self.ring.p
        t = dict(self.terms)
        for k, v in other.terms.items():
            s = (t.get(k, 0) + v) % p
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return FreeElt(self.ring, self.rank, t, self.shifts)

    def __sub__(self, other):
        self._check(other)
        p = self.ring.p
        t = dict(self.terms)
        for k, v in other.terms.items():
            s = (t.get(k, 0) - v) % p
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return FreeElt(self.ring, self.rank, t, self.shifts)

    def poly_mul(self, f: Poly) -> "FreeElt":
        p = self.ring.p
        t = {}
        for (c, m), v in self.terms.items():
            for fm, fv in f.terms.items():
                k = (c, mono_mul(m, fm))
                s = (t.get(k, 0) + v * fv) % p
                if s:
                    t[k] = s
                else:
                    t.pop(k, None)
        return FreeElt(self.ring, self.rank, t, self.shifts)

    def _check(self, other):
        if self.ring != other.ring or self.rank != other.rank:
            raise InputError("mixing elements of different free modules")

    def __eq__(self, other):
        return (
            isinstance(other, FreeElt)
            and self.ring == other.ring
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.rank, frozenset(self.terms.items())))

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.components()) + ")"

    def __repr__(self):
        return f"<{self}>"


def _wrap(g, ring=None):
    if isinstance(g, FreeElt):
        return g
    if isinstance(g, Poly):
        return FreeElt(g.ring, 1, {(0, m): c for m, c in g.terms.items()}, (0,))
    raise InputError(f"cannot interpret {type(g).__name__} as a module element")


# ---------------------------------------------------------------------------
# completion engine


class _Completion:
    """One Buchberger run.  Basis elements are monic; each carries an inert
    tail (its expression in the input generators) when tracking is on.  Tails
    never produce pairs and are never reduced against, so cofactor identities
    are exact by construction."""

    def __init__(
        self,
        ring: PolyRing,
        rank: int,
        shifts,
        *,
        track: bool,
        collect: bool,
        use_criteria: bool,
        budgets: Budgets,
        graded: bool,
    ):
        self.ring = ring
        self.p = ring.p
        self.rank = rank
        self.shifts = shifts
        self.track = track
        self.collect = collect
        self.use_criteria = use_criteria
        self.budgets = budgets
        self.graded = graded
        self.monokey = ring.order.key
        # parallel arrays for the basis
        self.leads = []  # (comp, mono)
        self.polys = []  # term dicts
        self.tails = []  # tail dicts (expression in input gens) or None
        self.pure = []  # element entirely inside its lead component?
        self.by_comp: dict[int, list[int]] = {}
        self.queue = []  # heap of (deg, lcm key, comp, i, j)
        self.treated = set()
        self.pairs_done = 0
        self.harvested = []  # tail dicts of elements that died

    # -- term helpers ------------------------------------------------------

    def termkey(self, t):
        return (-t[0], self.monokey(t[1]))

    def _lead(self, terms):
        return max(terms, key=self.termkey)

    # -- reduction ---------------------------------------------------------

    def top_reduce(self, terms, tail):
        """Reduce the leading term as long as some basis lead divides it.
        Returns the (possibly empty) reduced dict."""
        p = self.p
        while terms:
            c0, m0 = self._lead(terms)
            hit = -1
            for bi in self.by_comp.get(c0, ()):
                q = mono_div(m0, self.leads[bi][1])
                if q is not None:
                    hit = bi
                    qm = q
                    break
            if hit < 0:
                break
            coeff = terms[(c0, m0)]
            for (gc, gm), gv in self.polys[hit].items():
                k = (gc, mono_mul(gm, qm))
                s = (terms.get(k, 0) - coeff * gv) % p
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
            if tail is not None:
                gt = self.tails[hit]
                if gt:
                    for (gi, gm), gv in gt.items():
                        k = (gi, mono_mul(gm, qm))
                        s = (tail.get(k, 0) - coeff * gv) % p
                        if s:
                            tail[k] = s
                        else:
                            tail.pop(k, None)
        return terms, tail

    # -- basis growth ------------------------------------------------------

    def add_generator(self, terms, tail):
        """Reduce an incoming element against the current basis, then either
        harvest its tail (if it died) or install it."""
        terms, tail = self.top_reduce(dict(terms), tail)
        if not terms:
            if self.collect and tail:
                self.harvested.append(tail)
            return
        lead = self._lead(terms)
        lc = terms[lead]
        if lc != 1:
            inv = fp_inv(lc, self.p)
            terms = {k: (v * inv) % self.p for k, v in terms.items()}
            if tail is not None:
                tail = {k: (v * inv) % self.p for k, v in tail.items()}
        idx = len(self.leads)
        comp = lead[0]
        for other in self.by_comp.get(comp, ()):
            lcm = mono_lcm(self.leads[other][1], lead[1])
            deg = mono_deg(lcm) + (self.shifts[comp] if self.graded else 0)
            heapq.heappush(
                self.queue, (deg, self.monokey(lcm), comp, other, idx)
            )
        self.leads.append(lead)
        self.polys.append(terms)
        self.tails.append(tail)
        self.pure.append(all(c == comp for (c, _m) in terms))
        self.by_comp.setdefault(comp, []).append(idx)

    # -- main loop ---------------------------------------------------------

    def run(self):
        p = self.p
        while self.queue:
            deg, _lcmkey, comp, i, j = heapq.heappop(self.queue)
            if deg > self.budgets.max_degree:
                raise ResourceBudgetError(
                    f"S-pair degree {deg} exceeds the degree budget "
                    f"{self.budgets.max_degree}",
                    degree=deg,
                    budget=self.budgets.max_degree,
                )
            self.pairs_done += 1
            if self.pairs_done > self.budgets.max_pairs:
                raise ResourceBudgetError(
                    f"S-pair budget {self.budgets.max_pairs} exhausted",
                    budget=self.budgets.max_pairs,
                )
            mi, mj = self.leads[i][1], self.leads[j][1]
            lcm = mono_lcm(mi, mj)
            if self.use_criteria and self._criteria_skip(i, j, comp, lcm, mi, mj):
                self.treated.add((i, j))
                continue
            self.treated.add((i, j))
            ui = mono_div(lcm, mi)
            uj = mono_div(lcm, mj)
            terms = {}
            for (gc, gm), gv in self.polys[i].items():
                k = (gc, mono_mul(gm, ui))
                terms[k] = gv
            for (gc, gm), gv in self.polys[j].items():
                k = (gc, mono_mul(gm, uj))
                s = (terms.get(k, 0) - gv) % p
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
            tail = None
            if self.track:
                tail = {}
                for (gi, gm), gv in (self.tails[i] or {}).items():
                    tail[(gi, mono_mul(gm, ui))] = gv
                for (gi, gm), gv in (self.tails[j] or {}).items():
                    k = (gi, mono_mul(gm, uj))
                    s = (tail.get(k, 0) - gv) % p
                    if s:
                        tail[k] = s
                    else:
                        tail.pop(k, None)
            self.add_generator(terms, tail)

    def _criteria_skip(self, i, j, comp, lcm, mi, mj) -> bool:
        # product criterion: only valid when both elements live entirely in
        # the shared lead component, where the classical ideal-case proof
        # applies verbatim.
        if (
            self.pure[i]
            and self.pure[j]
            and all(a == 0 or b == 0 for a, b in zip(mi, mj))
        ):
            return True
        # chain criterion, conservative form: some third lead divides the
        # lcm and both sub-pairs were already treated.
        for k in self.by_comp.get(comp, ()):
            if k == i or k == j:
                continue
            if mono_div(lcm, self.leads[k][1]) is not None:
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a in self.treated and b in self.treated:
                    return True
        return False


# ---------------------------------------------------------------------------
# public entry points


class GroebnerBasis:
    """Reduced Groebner basis of a submodule, sorted with the largest lead
    first.  When built with cofactors=True, cofactors[i][g] expands
    elements[i] as a combination of the input generators."""

    def __init__(self, ring, rank, shifts, elements, cofactors, gens):
        self.ring = ring
        self.rank = rank
        self.shifts = shifts
        self.elements: list[FreeElt] = elements
        self.cofactors = cofactors
        self.gens = gens

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def contains(self, v) -> bool:
        rem, _ = normal_form(v, self)
        return rem.is_zero()

    def scalar_elements(self) -> list[Poly]:
        if self.rank != 1:
            raise InputError("scalar_elements on a module basis")
        return [e.component(0) for e in self.elements]

    def lead_terms(self):
        return [e.lead()[0] for e in self.elements]


def _prepare(gens, require_homogeneous: bool):
    gens = [_wrap(g) for g in gens]
    if not gens:
        raise InputError("empty generator list")
    ring = gens[0].ring
    rank = gens[0].rank
    shifts = gens[0].shifts
    for i, g in enumerate(gens):
        if g.ring != ring or g.rank != rank or g.shifts != shifts:
            raise InputError(f"generator {i} lives in a different free module")
        if require_homogeneous and not g.is_homogeneous():
            raise InputError(f"generator {i} is not homogeneous", index=i)
    return gens, ring, rank, shifts


def groebner_basis(
    gens,
    *,
    cofactors: bool = False,
    budgets: Budgets | None = None,
    _allow_inhomogeneous: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule generated by `gens` (Poly or
    FreeElt).  Deterministic: normal selection strategy, first-match
    reduction, element order fixed by sorting on lead terms."""
    if budgets is None:
        budgets = _current_budgets
    raw = list(gens)
    gens, ring, rank, shifts = _prepare(raw, not _allow_inhomogeneous)
    graded = all(g.is_homogeneous() for g in gens)
    eng = _Completion(
        ring,
        rank,
        shifts,
        track=cofactors,
        collect=False,
        use_criteria=True,
        budgets=budgets,
        graded=graded,
    )
    for idx, g in enumerate(gens):
        tail = {(idx, ring._one_mono): 1} if cofactors else None
        eng.add_generator(g.terms, tail)
    eng.run()
    elements, tails = _reduced_form(eng)
    cofs = None
    if cofactors:
        cofs = [
            [_tail_component(t, g, ring) for g in range(len(gens))] for t in tails
        ]
    return GroebnerBasis(ring, rank, shifts, elements, cofs, [FreeElt(ring, rank, dict(g.terms), shifts) for g in gens])


def _tail_component(tail, g, ring):
    return Poly(ring, {m: c for (gi, m), c in tail.items() if gi == g})


def _reduced_form(eng: _Completion):
    """Minimalize and tail-reduce the completed basis; monic; sorted with the
    largest lead first.  Tails follow every operation so cofactor identities
    survive interreduction."""
    ring = eng.ring
    p = eng.p
    idxs = sorted(range(len(eng.leads)), key=lambda i: eng.termkey(eng.leads[i]))
    kept = []
    for i in idxs:
        ci, mi = eng.leads[i]
        redundant = False
        for k in kept:
            ck, mk = eng.leads[k]
            if ck == ci and mono_div(mi, mk) is not None:
                redundant = True
                break
        if not redundant:
            kept.append(i)
    # full tail reduction of each kept element against the others
    out = []
    for i in kept:
        reducers = [k for k in kept if k != i]
        terms = dict(eng.polys[i])
        tail = dict(eng.tails[i]) if eng.tails[i] is not None else None
        result = {}
        while terms:
            lt = eng._lead(terms)
            coeff = terms[lt]
            hit = -1
            for k in reducers:
                ck, mk = eng.leads[k]
                if ck == lt[0]:
                    q = mono_div(lt[1], mk)
                    if q is not None:
                        hit = k
                        qm = q
                        break
            if hit < 0:
                result[lt] = coeff
                del terms[lt]
                continue
            for (gc, gm), gv in eng.polys[hit].items():
                kk = (gc, mono_mul(gm, qm))
                s = (terms.get(kk, 0) - coeff * gv) % p
                if s:
                    terms[kk] = s
                else:
                    terms.pop(kk, None)
            if tail is not None:
                for (gi, gm), gv in (eng.tails[hit] or {}).items():
                    kk = (gi, mono_mul(gm, qm))
                    s = (tail.get(kk, 0) - gv * coeff) % p
                    if s:
                        tail[kk] = s
                    else:
                        tail.pop(kk, None)
            # the moved-out part of result is already irreducible
        out.append((eng.leads[i], result, tail))
    out.sort(key=lambda t: eng.termkey(t[0]), reverse=True)
    elements = [FreeElt(ring, eng.rank, terms, eng.shifts) for (_l, terms, _t) in out]
    tails = [t for (_l, _terms, t) in out]
    return elements, tails


def normal_form(v, gb: GroebnerBasis):
    """Full division of v by the basis: returns (remainder, cofactors) with
    v = remainder + sum cofactors[i] * gb.elements[i] exactly, and no
    remainder term divisible by any basis lead.  The reducer is always the
    first matching basis element, so the output is deterministic."""
    v = _wrap(v)
    if v.ring != gb.ring or v.rank != gb.rank:
        raise InputError("element does not live in the basis's free module")
    p = gb.ring.p
    key = gb.ring.order.key
    leads = [e.lead() for e in gb.elements]
    terms = dict(v.terms)
    result = {}
    cofs = [dict() for _ in gb.elements]
    while terms:
        lt = max(terms, key=lambda t: (-t[0], key(t[1])))
        coeff = terms[lt]
        hit = -1
        for k, ld in enumerate(leads):
            if ld is None:
                continue
            (ck, mk), _lc = ld
            if ck == lt[0]:
                q = mono_div(lt[1], mk)
                if q is not None:
                    hit = k
                    qm = q
                    break
        if hit < 0:
            result[lt] = coeff
            del terms[lt]
            continue
        # basis elements are monic
        cofs[hit][qm] = (cofs[hit].get(qm, 0) + coeff) % p
        for (gc, gm), gv in gb.elements[hit].terms.items():
            kk = (gc, mono_mul(gm, qm))
            s = (terms.get(kk, 0) - coeff * gv) % p
            if s:
                terms[kk] = s
            else:
                terms.pop(kk, None)
    rem = FreeElt(gb.ring, gb.rank, result, gb.shifts)
    cof_polys = [Poly(gb.ring, {m: c for m, c in d.items() if c}) for d in cofs]
    return rem, cof_polys


def syzygies(
    gens,
    *,
    quotient=None,
    budgets: Budgets | None = None,
) -> list[FreeElt]:
    """Generators of the syzygy module of `gens` (rank-m column vectors of
    relations among them), via one tracked completion run.

    With quotient=[f_1..f_c] the syzygies are taken over P/(f): the f_j e_i
    are adjoined as untracked generators and harvested tails are reduced
    modulo (f).  Criteria pruning is off here: the harvested set must be the
    full Schreyer generating set, and skipping pairs would drop members."""
    if budgets is None:
        budgets = _current_budgets
    raw = list(gens)
    if not raw:
        return []
    gens, ring, rank, shifts = _prepare(raw, True)
    m = len(gens)
    eng = _Completion(
        ring,
        rank,
        shifts,
        track=True,
        collect=True,
        use_criteria=False,
        budgets=budgets,
        graded=True,
    )
    for idx, g in enumerate(gens):
        eng.add_generator(g.terms, {(idx, ring._one_mono): 1})
    if quotient:
        for f in quotient:
            for r in range(rank):
                terms = {(r, mm): c for mm, c in f.terms.items()}
                eng.add_generator(terms, {})
    eng.run()
    qgb = None
    if quotient:
        qgb = groebner_basis(quotient, budgets=budgets)
    col_degs = tuple(g.degree() for g in gens)
    out = []
    for pos, tail in enumerate(eng.harvested):
        comps = []
        for gidx in range(m):
            f = _tail_component(tail, gidx, ring)
            if qgb is not None and not f.is_zero():
                f = normal_form(f, qgb)[0].component(0)
            comps.append(f)
        if all(f.is_zero() for f in comps):
            continue
        elt = FreeElt.from_polys(comps, col_degs)
        lc = elt.lead()[1]
        if lc != 1:
            elt = elt.scale(fp_inv(lc, ring.p))
        out.append((elt.degree(), pos, elt))
    out.sort(key=lambda t: (t[0], t[1]))
    return [e for (_d, _p, e) in out]


class SubmoduleOracle:
    """Membership tests against a fixed generating set, optionally over the
    quotient by (f).  Builds one Groebner basis up front and reuses it."""

    def __init__(self, gens, *, quotient=None, budgets: Budgets | None = None):
        gens = [_wrap(g) for g in gens]
        self.empty = not gens
        if self.empty:
            self.quotient_gb = groebner_basis(quotient, budgets=budgets) if quotient else None
            return
        ring, rank, shifts = gens[0].ring, gens[0].rank, gens[0].shifts
        ext = list(gens)
        if quotient:
            for f in quotient:
                for r in range(rank):
                    ext.append(
                        FreeElt(ring, rank, {(r, m): c for m, c in f.terms.items()}, shifts)
                    )
        self.gb = groebner_basis(ext, budgets=budgets)
        self.quotient_gb = None

    def reduce(self, v):
        if self.empty:
            if self.quotient_gb is not None:
                comps = [
                    normal_form(f, self.quotient_gb)[0].component(0) for f in v.components()
                ]
                return FreeElt.from_polys(comps, v.shifts)
            return v
        return normal_form(v, self.gb)[0]

    def contains(self, v) -> bool:
        return self.reduce(_wrap(v)).is_zero()


# ---------------------------------------------------------------------------
# ideal-level operations


def ideal_dimension(gens, ring: PolyRing = None, *, budgets: Budgets | None = None) -> int:
    """Krull dimension of P/I by the independent-set method: the dimension is
    the largest number of variables S such that no leading monomial of the
    Groebner basis lies entirely in k[S].  Returns -1 for the unit ideal."""
    gens = [g for g in gens if not g.is_zero()] if gens else []
    if ring is None:
        if not gens:
            raise InputError("ideal_dimension of (0) needs an explicit ring")
        ring = gens[0].ring
    n = ring.nvars
    if not gens:
        return n
    gb = groebner_basis(gens, budgets=budgets, _allow_inhomogeneous=True)
    leads = [e.lead()[0][1] for e in gb.elements]
    if any(mono_deg(m) == 0 for m in leads):
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    for size in range(n, -1, -1):
        for subset in _subsets(n, size):
            s = frozenset(subset)
            if all(not sup <= s for sup in supports):
                return size
    return 0


def _subsets(n, size):
    def rec(start, left, acc):
        if left == 0:
            yield tuple(acc)
            return
        for i in range(start, n - left + 1):
            yield from rec(i + 1, left - 1, acc + [i])

    yield from rec(0, size, [])


def _fresh_name(taken, base="t"):
    if base not in taken:
        return base
    i = 0
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def radical_membership(g: Poly, gens, ring: PolyRing = None, *, budgets: Budgets | None = None) -> bool:
    """Is g in the radical of (gens)?  Standard trick: g is in sqrt(I) iff
    1 lies in I + (1 - t g) in the extended ring P[t]."""
    if ring is None:
        ring = g.ring
    if g.is_zero():
        return True
    ext = PolyRing(ring.p, ring.vars + (_fresh_name(set(ring.vars)),), ring.order)
    idx = list(range(ring.nvars))
    lifted = [f.map_to(ext, idx) for f in gens if not f.is_zero()]
    t = ext.gen(ext.nvars - 1)
    lifted.append(ext.one() - t * g.map_to(ext, idx))
    gb = groebner_basis(lifted, budgets=budgets, _allow_inhomogeneous=True)
    return any(e.lead()[0][1] == ext._one_mono for e in gb.elements)


def ideal_ops(a, b, op: str, ring: PolyRing = None, *, budgets: Budgets | None = None) -> list[Poly]:
    """Sum, product, or intersection of two ideals, returned as the reduced
    Groebner basis in the original ring (deterministic generators)."""
    a = [f for f in a if not f.is_zero()]
    b = [f for f in b if not f.is_zero()]
    if ring is None:
        pool = a + b
        if not pool:
            raise InputError("ideal_ops on two zero ideals needs an explicit ring")
        ring = pool[0].ring
    if op == "sum":
        gens = a + b
    elif op == "product":
        gens = [f * g for f in a for g in b]
    elif op == "intersection":
        return _ideal_intersection(a, b, ring, budgets)
    else:
        raise InputError(f"unknown ideal operation {op!r}")
    if not gens:
        return []
    gb = groebner_basis(gens, budgets=budgets, _allow_inhomogeneous=True)
    return gb.scalar_elements()


def _ideal_intersection(a, b, ring, budgets):
    if not a or not b:
        return []
    from .arith import elimination_order

    tname = _fresh_name(set(ring.vars))
    ext = PolyRing(ring.p, (tname,) + ring.vars, elimination_order(1))
    idx = [i + 1 for i in range(ring.nvars)]
    t = ext.gen(0)
    one_minus_t = ext.one() - t
    gens = [t * f.map_to(ext, idx) for f in a]
    gens += [one_minus_t * g.map_to(ext, idx) for g in b]
    gb = groebner_basis(gens, budgets=budgets, _allow_inhomogeneous=True)
    kept = []
    back = list(range(ring.nvars))
    for e in gb.elements:
        f = e.component(0)
        if all(m[0] == 0 for m in f.terms):
            kept.append(Poly(ring, {m[1:]: c for m, c in f.terms.items()}))
    if not kept:
        return []
    gb2 = groebner_basis(kept, budgets=budgets, _allow_inhomogeneous=True)
    return gb2.scalar_elements()
