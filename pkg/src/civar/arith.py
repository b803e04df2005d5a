"""Exact arithmetic over a prime field: polynomials, monomial orders, dense
linear algebra, and univariate factorization.

Scalars are integer residues modulo an odd prime p.  A polynomial is a
dictionary mapping exponent tuples to nonzero residues, so equality of
polynomials is equality of dictionaries and there is no coefficient swell to
manage.  Dense matrices are numpy int64 arrays reduced modulo p after every
operation; with p < 2^31 a single product never overflows, and longer
accumulations are chunked.  Nothing in this module (or anywhere downstream)
touches floating point.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError

# ---------------------------------------------------------------------------
# primes and residues


def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def fp_inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in F_p")
    return pow(a, -1, p)


# ---------------------------------------------------------------------------
# monomials: exponent tuples of fixed length

MONO_ONE_CACHE: dict[int, tuple] = {}


def mono_one(n: int) -> tuple:
    m = MONO_ONE_CACHE.get(n)
    if m is None:
        m = MONO_ONE_CACHE[n] = (0,) * n
    return m


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple):
    """a / b as a monomial, or None when b does not divide a."""
    q = []
    for x, y in zip(a, b):
        if x < y:
            return None
        q.append(x - y)
    return tuple(q)


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: tuple) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders
#
# An order is a key function: monomials compare by their keys, larger key
# meaning larger monomial.  Only global orders appear here, so 1 is always
# the smallest monomial.


class Order:
    """A monomial order, packaged as a sort key."""

    __slots__ = ("name", "key")

    def __init__(self, name: str, key):
        self.name = name
        self.key = key

    def __repr__(self):
        return f"Order({self.name})"

    def __eq__(self, other):
        return isinstance(other, Order) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


def _drl_key(m: tuple):
    # graded, ties broken by smallest last exponent: the usual degrevlex.
    return (sum(m), tuple(-e for e in reversed(m)))


DEGREVLEX = Order("degrevlex", _drl_key)


def elimination_order(block: int) -> Order:
    """Block order whose first `block` variables dominate the rest; degrevlex
    inside each block.  Any monomial containing a leading-block variable is
    larger than every monomial free of them, which is the elimination
    property the intersection and radical routines rely on."""

    def key(m, _b=block):
        return (_drl_key(m[:_b]), _drl_key(m[_b:]))

    return Order(f"elim{block}", key)


# ---------------------------------------------------------------------------
# polynomial rings


_IDENT_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


def _valid_ident(s: str) -> bool:
    return bool(s) and s[0] not in "0123456789" and set(s) <= _IDENT_OK


class PolyRing:
    """F_p[x_1, ..., x_n] with a fixed monomial order."""

    __slots__ = ("p", "vars", "order", "nvars", "_index", "_one_mono")

    def __init__(self, p: int, variables, order: Order = DEGREVLEX):
        if not is_odd_prime(p):
            raise InputError(f"p = {p} is not an odd prime")
        variables = tuple(variables)
        if not variables:
            raise InputError("a polynomial ring needs at least one variable")
        for v in variables:
            if not _valid_ident(v):
                raise InputError(f"bad variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise InputError(f"repeated variable in {variables}")
        self.p = p
        self.vars = variables
        self.order = order
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}
        self._one_mono = mono_one(self.nvars)

    # -- construction -------------------------------------------------------

    def poly(self, terms: dict) -> "Poly":
        """Build a polynomial from {exponent tuple: integer}, normalizing
        coefficients mod p and dropping zeros."""
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.nvars or any(e < 0 or not isinstance(e, int) for e in m):
                raise InputError(f"bad exponent tuple {m} for {self.nvars} variables")
            c %= self.p
            if c:
                clean[m] = c
        return Poly(self, clean)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self._one_mono: 1})

    def const(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {self._one_mono: c} if c else {})

    def gen(self, i) -> "Poly":
        if isinstance(i, str):
            i = self._index[i]
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): 1})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomials_of_degree(self, d: int):
        """All exponent tuples of total degree d, sorted descending in the
        ring order (deterministic enumeration used all over the place)."""
        if d < 0:
            return []
        out = []

        def rec(i, left, acc):
            if i == self.nvars - 1:
                out.append(tuple(acc + [left]))
                return
            for e in range(left, -1, -1):
                rec(i + 1, left - e, acc + [e])

        rec(0, d, [])
        out.sort(key=self.order.key, reverse=True)
        return out

    # -- parsing ------------------------------------------------------------

    def parse(self, text: str) -> "Poly":
        return _parse_poly(self, text)

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.p == other.p
            and self.vars == other.vars
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.p, self.vars, self.order))

    def __repr__(self):
        vs = ",".join(self.vars)
        return f"F_{self.p}[{vs}]/{self.order.name}"


class Poly:
    """Element of a PolyRing.  Treat as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        # trusted constructor: PolyRing.poly validates, internal callers
        # promise normalized dicts.
        self.ring = ring
        self.terms = terms

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_deg(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        """The common degree of all terms, None if inhomogeneous or zero."""
        degs = {mono_deg(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def constant_term(self) -> int:
        return self.terms.get(self.ring._one_mono, 0)

    def lead(self):
        """(monomial, coefficient) of the leading term, None for zero."""
        if not self.terms:
            return None
        m = max(self.terms, key=self.ring.order.key)
        return m, self.terms[m]

    # -- arithmetic ----------------------------------------------------------

    def _assert_same(self, other):
        if self.ring != other.ring:
            raise InputError("mixing polynomials from different rings")

    def __add__(self, other):
        self._assert_same(other)
        p = self.ring.p
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = (t.get(m, 0) + c) % p
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly(self.ring, t)

    def __sub__(self, other):
        self._assert_same(other)
        p = self.ring.p
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = (t.get(m, 0) - c) % p
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        return Poly(self.ring, t)

    def __neg__(self):
        p = self.ring.p
        return Poly(self.ring, {m: p - c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._assert_same(other)
        p = self.ring.p
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = (t.get(m, 0) + c1 * c2) % p
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        return Poly(self.ring, t)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        c %= self.ring.p
        if c == 0:
            return Poly(self.ring, {})
        if c == 1:
            return self
        p = self.ring.p
        return Poly(self.ring, {m: (c * v) % p for m, v in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            raise InputError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def map_to(self, ring: PolyRing, var_map) -> "Poly":
        """Image under the ring map sending variable i to ring variable
        var_map[i].  Coefficients carry over; p must match."""
        if ring.p != self.ring.p:
            raise InputError("cannot map between different characteristics")
        t = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for i, ei in enumerate(m):
                e[var_map[i]] += ei
            t[tuple(e)] = (t.get(tuple(e), 0) + c) % ring.p
        return Poly(ring, {m: c for m, c in t.items() if c})

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        order = self.ring.order
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            factors = []
            for v, e in zip(self.ring.vars, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self}>"


# ---------------------------------------------------------------------------
# parser
#
#   poly := ('+'|'-')? term (('+'|'-') term)*
#   term := coeff ('*'? factor)*  |  factor ('*'? factor)*
#   factor := var ('^' nat)?
#
# '*' between factors is optional; whitespace is free.  Coefficients are
# nonnegative integers (signs come from the poly level) reduced mod p.


def _parse_poly(ring: PolyRing, text: str) -> Poly:
    if not isinstance(text, str):
        raise InputError(f"polynomial source must be a string, got {type(text).__name__}")
    n = len(text)
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def fail(msg):
        raise InputError(f"{msg} at position {pos} in {text!r}")

    def read_int():
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            fail("expected an integer")
        return int(text[start:pos])

    def read_ident():
        nonlocal pos
        start = pos
        while pos < n and (text[pos].isalnum() or text[pos] == "_"):
            pos += 1
        return text[start:pos]

    terms: dict[tuple, int] = {}
    skip_ws()
    if pos == n:
        fail("empty polynomial")
    first = True
    while True:
        skip_ws()
        if pos == n:
            break
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
            skip_ws()
        elif not first:
            fail("expected '+' or '-'")
        first = False
        # one term
        coeff = 1
        exps = [0] * ring.nvars
        saw_anything = False
        if pos < n and text[pos].isdigit():
            coeff = read_int()
            saw_anything = True
        while True:
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                skip_ws()
                if pos == n:
                    fail("dangling '*'")
            if pos < n and (text[pos].isalpha() or text[pos] == "_"):
                name = read_ident()
                idx = ring._index.get(name)
                if idx is None:
                    pos -= len(name)
                    fail(f"unknown variable {name!r}")
                e = 1
                if pos < n and text[pos] == "^":
                    pos += 1
                    e = read_int()
                exps[idx] += e
                saw_anything = True
            else:
                break
        if not saw_anything:
            fail("expected a term")
        m = tuple(exps)
        c = (terms.get(m, 0) + sign * coeff) % ring.p
        if c:
            terms[m] = c
        else:
            terms.pop(m, None)
        skip_ws()
        if pos < n and text[pos] not in "+-":
            fail(f"unexpected character {text[pos]!r}")
        if pos == n:
            break
    return Poly(ring, terms)


# ---------------------------------------------------------------------------
# dense linear algebra mod p (numpy int64, exact)


def as_matrix(rows, p: int, width=None) -> np.ndarray:
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, width or 0)
    if a.size == 0:
        r = a.shape[0] if a.ndim == 2 else 0
        return np.zeros((r, width or (a.shape[1] if a.ndim == 2 else 0)), dtype=np.int64)
    return np.mod(a, p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p without int64 overflow: the inner dimension is chunked so
    every partial sum stays below 2^62."""
    a = np.mod(a, p)
    b = np.mod(b, p)
    inner = a.shape[1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    step = max(1, (1 << 62) // max(1, (p - 1) * (p - 1)))
    if inner <= step:
        return np.mod(a @ b, p)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(0, inner, step):
        out = np.mod(out + a[:, k : k + step] @ b[k : k + step, :], p)
    return out


def rref(a: np.ndarray, p: int):
    """Reduced row echelon form mod p.  Pivoting is deterministic: columns
    left to right, pivot row = first row with a nonzero entry.  Returns
    (matrix, pivot column list)."""
    a = np.mod(np.array(a, dtype=np.int64, copy=True), p)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = np.mod(a[r] * fp_inv(int(a[r, c]), p), p)
        col = a[:, c].copy()
        col[r] = 0
        a -= np.outer(col, a[r])
        np.mod(a, p, out=a)
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace(a: np.ndarray, p: int) -> list[list[int]]:
    """Echelonized basis of {v : a v = 0}, one vector per free column, in
    free-column order."""
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2:
        raise InputError("nullspace wants a matrix")
    cols = a.shape[1]
    r, pivots = rref(a, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = [0] * cols
        v[free] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-int(r[i, free])) % p
        basis.append(v)
    return basis


def solve_linear(a, b, p: int):
    """Solve a x = b over F_p.

    Returns (particular solution, nullspace basis) or None when the system is
    inconsistent.  Both outputs are plain lists; the nullspace basis is the
    echelonized one from `nullspace`."""
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2:
        raise InputError("solve_linear wants a matrix")
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if b.shape[0] != a.shape[0]:
        raise InputError(
            f"dimension mismatch: {a.shape[0]} equations, rhs of length {b.shape[0]}"
        )
    cols = a.shape[1]
    aug = np.concatenate([np.mod(a, p), np.mod(b, p).reshape(-1, 1)], axis=1)
    r, pivots = rref(aug, p)
    if cols in pivots:
        return None
    x = [0] * cols
    for i, pc in enumerate(pivots):
        x[pc] = int(r[i, cols])
    return x, nullspace(a, p)


def identity_matrix(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


class IncrementalSpan:
    """Grow an F_p row space one vector at a time, reporting whether each new
    vector enlarged it.  Rows are kept pivot-normalized so membership testing
    is a single elimination sweep."""

    __slots__ = ("p", "width", "rows", "pivots")

    def __init__(self, p: int, width: int):
        self.p = p
        self.width = width
        self.rows = []
        self.pivots = []  # pivot column of rows[i], strictly increasing order not required

    def residual(self, vec) -> np.ndarray:
        v = np.asarray(vec, dtype=np.int64) % self.p
        for row, pc in zip(self.rows, self.pivots):
            c = int(v[pc])
            if c:
                v = (v - c * row) % self.p
        return v

    def add(self, vec) -> bool:
        """Reduce vec against the span; absorb the residual.  True when the
        vector was independent of what came before."""
        v = self.residual(vec)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        pc = int(nz[0])
        v = (v * fp_inv(int(v[pc]), self.p)) % self.p
        self.rows.append(v)
        self.pivots.append(pc)
        return True

    def contains(self, vec) -> bool:
        return not np.any(self.residual(vec))

    @property
    def dim(self) -> int:
        return len(self.rows)


# ---------------------------------------------------------------------------
# univariate polynomials over F_p, dense ascending coefficient lists
#
# Enough machinery for minimal polynomials and their factorization, which is
# what idempotent splitting consumes.  p is odd throughout (ring-level
# invariant), so Cantor-Zassenhaus splitting applies.


def poly1_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly1_deg(f) -> int:
    return len(f) - 1


def poly1_monic(f, p):
    f = [c % p for c in f]
    poly1_trim(f)
    if not f:
        return f
    inv = fp_inv(f[-1], p)
    return [(c * inv) % p for c in f]


def poly1_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return poly1_trim(out)


def poly1_divmod(f, g, p):
    f = [c % p for c in f]
    poly1_trim(f)
    g = [c % p for c in g]
    poly1_trim(g)
    if not g:
        raise ZeroDivisionError("univariate division by zero")
    inv = fp_inv(g[-1], p)
    q = [0] * max(0, len(f) - len(g) + 1)
    r = list(f)
    while len(r) >= len(g) and r:
        c = (r[-1] * inv) % p
        d = len(r) - len(g)
        q[d] = c
        for i, b in enumerate(g):
            r[d + i] = (r[d + i] - c * b) % p
        poly1_trim(r)
    return poly1_trim(q), r


def poly1_gcd(f, g, p):
    f = poly1_monic(f, p)
    g = poly1_monic(g, p)
    while g:
        f, g = g, poly1_divmod(f, g, p)[1]
        g = poly1_monic(g, p)
    return f


def poly1_xgcd(f, g, p):
    """Extended gcd: returns (d, a, b) with a*f + b*g = d, d monic (or [])."""
    r0, r1 = list(f), list(g)
    a0, a1 = [1], []
    b0, b1 = [], [1]
    while poly1_trim(r1):
        q, r = poly1_divmod(r0, r1, p)
        r0, r1 = r1, r
        a0, a1 = a1, poly1_sub(a0, poly1_mul(q, a1, p), p)
        b0, b1 = b1, poly1_sub(b0, poly1_mul(q, b1, p), p)
    if not r0:
        return [], [], []
    lc = fp_inv(r0[-1], p)
    scale = lambda h: [(c * lc) % p for c in h]
    return scale(r0), scale(a0), scale(b0)


def poly1_sub(f, g, p):
    out = [0] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return poly1_trim(out)


def poly1_powmod(f, e: int, m, p):
    out = [1]
    base = poly1_divmod(f, m, p)[1]
    while e:
        if e & 1:
            out = poly1_divmod(poly1_mul(out, base, p), m, p)[1]
        e >>= 1
        if e:
            base = poly1_divmod(poly1_mul(base, base, p), m, p)[1]
    return out


def poly1_deriv(f, p):
    return poly1_trim([(i * c) % p for i, c in enumerate(f)][1:])


def _pth_root(f, p):
    # over F_p the Frobenius fixes scalars, so the root just reindexes.
    return [f[i] for i in range(0, len(f), p)]


def _ddf(f, p):
    """Distinct-degree factorization of a monic squarefree f: list of
    (product of irreducibles of degree d, d)."""
    out = []
    h = [0, 1]  # T
    s = list(f)
    d = 0
    while poly1_deg(s) >= 2 * (d + 1):
        d += 1
        h = poly1_powmod(h, p, s, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = poly1_gcd(s, diff, p)
        if poly1_deg(g) > 0:
            out.append((g, d))
            s = poly1_divmod(s, g, p)[0]
            h = poly1_divmod(h, s, p)[1] if poly1_deg(s) > 0 else [0]
    if poly1_deg(s) > 0:
        out.append((s, poly1_deg(s)))
    return out


def _edf(f, d, p, rng):
    """Equal-degree splitting (Cantor-Zassenhaus, odd p) of a monic
    squarefree f all of whose irreducible factors have degree d."""
    if poly1_deg(f) == d:
        return [f]
    e = (pow(p, d) - 1) // 2
    while True:
        r = [rng.randrange(p) for _ in range(poly1_deg(f))]
        poly1_trim(r)
        if poly1_deg(r) < 1:
            continue
        w = poly1_powmod(r, e, f, p)
        w = list(w) + [0] * max(0, 1 - len(w))
        w[0] = (w[0] - 1) % p
        poly1_trim(w)
        g = poly1_gcd(f, w, p)
        if 0 < poly1_deg(g) < poly1_deg(f):
            rest = poly1_divmod(f, g, p)[0]
            return _edf(g, d, p, rng) + _edf(rest, d, p, rng)


def factor_univariate(f, p: int, rng) -> list[tuple[list[int], int]]:
    """Factor a nonconstant univariate polynomial over F_p into monic
    irreducibles with multiplicities, sorted by (degree, coefficients).
    The rng drives the equal-degree splitting only, so a seeded rng makes
    the result deterministic."""
    f = poly1_monic(f, p)
    if poly1_deg(f) < 1:
        raise InputError("factoring a constant")
    # collect the distinct irreducible factors; multiplicities come later by
    # trial division, which sidesteps the char-p bookkeeping entirely.
    irreducibles = []
    seen = set()
    work = list(f)
    while poly1_deg(work) > 0:
        der = poly1_deriv(work, p)
        if not der:
            work = _pth_root(work, p)
            continue
        g = poly1_gcd(work, der, p)
        sqfree = poly1_divmod(work, g, p)[0]
        for q, d in _ddf(sqfree, p):
            for irr in _edf(q, d, p, rng):
                key = tuple(irr)
                if key not in seen:
                    seen.add(key)
                    irreducibles.append(irr)
        work = g
    out = []
    rem = list(f)
    for irr in sorted(irreducibles, key=lambda q: (poly1_deg(q), q)):
        mult = 0
        while True:
            quo, r = poly1_divmod(rem, irr, p)
            if r:
                break
            rem = quo
            mult += 1
        if mult:
            out.append((irr, mult))
    if poly1_deg(rem) != 0:
        # should be impossible; fail loudly rather than return a bad answer
        raise ArithmeticError("univariate factorization lost a factor")
    return out
