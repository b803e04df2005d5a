"""Independent oracles for the engine tests.

Everything here reimplements the checked property from scratch on top of
the public term containers, with different tie-breaking than the engine
(reduction picks the LAST matching reducer, not the first), so a shared
bug would have to be shared logic, not shared code paths.
"""

import random

from civar.arith import Poly, mono_div, mono_lcm, mono_mul
from civar.groebner import FreeElt, groebner_basis


def naive_reduce(v, elements):
    """Full top-reduction of a FreeElt by a list of monic FreeElts, always
    choosing the last basis element whose lead divides the current term."""
    if not elements:
        return v
    ring = v.ring
    p = ring.p
    key = ring.order.key
    leads = [e.lead() for e in elements]
    terms = dict(v.terms)
    out = {}
    while terms:
        lt = max(terms, key=lambda t: (-t[0], key(t[1])))
        coeff = terms[lt]
        hit = None
        for k in range(len(elements) - 1, -1, -1):
            (ck, mk), _ = leads[k]
            if ck == lt[0]:
                q = mono_div(lt[1], mk)
                if q is not None:
                    hit = (k, q)
                    break
        if hit is None:
            out[lt] = coeff
            del terms[lt]
            continue
        k, q = hit
        for (gc, gm), gv in elements[k].terms.items():
            kk = (gc, mono_mul(gm, q))
            s = (terms.get(kk, 0) - coeff * gv) % p
            if s:
                terms[kk] = s
            else:
                terms.pop(kk, None)
    return FreeElt(ring, v.rank, out, v.shifts)


def s_element(a, b):
    """The S-vector of two monic FreeElts with leads in one component, or
    None when the leads live in different components."""
    (ca, ma), _ = a.lead()
    (cb, mb), _ = b.lead()
    if ca != cb:
        return None
    lcm = mono_lcm(ma, mb)
    ua = mono_div(lcm, ma)
    ub = mono_div(lcm, mb)
    ring = a.ring
    return a.poly_mul(Poly(ring, {ua: 1})) - b.poly_mul(Poly(ring, {ub: 1}))


def buchberger_holds(gb) -> bool:
    """Every pairwise S-vector of the basis reduces to zero under the
    independent reducer above."""
    els = gb.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            s = s_element(els[i], els[j])
            if s is None or s.is_zero():
                continue
            if not naive_reduce(s, els).is_zero():
                return False
    return True


def brute_radical(g, gens, ring, emax=6):
    """Is some power g^e (e <= emax) in the plain ideal?  Sound but not
    complete; agreement with radical_membership is asserted only where
    this bound suffices."""
    live = [f for f in gens if not f.is_zero()]
    if g.is_zero():
        return True
    if not live:
        return False
    gb = groebner_basis(live, _allow_inhomogeneous=True)
    power = ring.one()
    for _ in range(emax):
        power = power * g
        if gb.contains(power):
            return True
    return False


def random_homogeneous(ring, degree, rng, allow_zero=False):
    """Random homogeneous polynomial of the exact degree, dense over the
    monomial basis."""
    while True:
        terms = {}
        for m in ring.monomials_of_degree(degree):
            c = rng.randrange(ring.p)
            if c:
                terms[m] = c
        poly = Poly(ring, terms)
        if allow_zero or not poly.is_zero():
            return poly


def random_column(ring, shifts, degree, rng):
    """Random homogeneous FreeElt of total degree `degree` against the
    generator shifts; component entries may be zero but not all."""
    while True:
        polys = []
        for s in shifts:
            d = degree - s
            if d < 0:
                polys.append(ring.zero())
            else:
                polys.append(random_homogeneous(ring, d, rng, allow_zero=True))
        elt = FreeElt.from_polys(polys, tuple(shifts))
        if not elt.is_zero():
            return elt


def seeded(tag: str) -> random.Random:
    """One rng per test, reproducible, distinct streams per tag."""
    return random.Random(f"civar:{tag}")
