"""Arithmetic layer: exact mod-p linear algebra, monomial orders, the
polynomial container, and the univariate stack."""

import numpy as np
import pytest

from civar.arith import (
    DEGREVLEX,
    IncrementalSpan,
    PolyRing,
    Poly,
    elimination_order,
    factor_univariate,
    fp_inv,
    is_odd_prime,
    matmul,
    mono_deg,
    mono_div,
    mono_lcm,
    mono_mul,
    nullspace,
    poly1_deg,
    poly1_divmod,
    poly1_gcd,
    poly1_monic,
    poly1_mul,
    poly1_powmod,
    poly1_xgcd,
    rref,
    solve_linear,
)
from civar.errors import InputError

from helpers import seeded


@pytest.fixture
def ring():
    return PolyRing(101, ("x", "y", "z"), DEGREVLEX)


def test_is_odd_prime():
    assert is_odd_prime(101)
    assert is_odd_prime(3)
    assert not is_odd_prime(2)
    assert not is_odd_prime(91)  # 7 * 13
    assert not is_odd_prime(1)


def test_fp_inv():
    rng = seeded("fp_inv")
    for _ in range(50):
        a = rng.randrange(1, 101)
        assert a * fp_inv(a, 101) % 101 == 1


def test_mono_ops():
    a, b = (2, 0, 1), (1, 3, 0)
    assert mono_mul(a, b) == (3, 3, 1)
    assert mono_lcm(a, b) == (2, 3, 1)
    assert mono_div(mono_mul(a, b), b) == a
    assert mono_div(a, b) is None
    assert mono_deg(a) == 3


def test_degrevlex_on_fixed_degree(ring):
    # x^2 > xy > y^2 > xz > yz > z^2 in three variables
    ms = ring.monomials_of_degree(2)
    assert ms == [
        (2, 0, 0),
        (1, 1, 0),
        (0, 2, 0),
        (1, 0, 1),
        (0, 1, 1),
        (0, 0, 2),
    ]
    key = ring.order.key
    assert sorted(ms, key=key, reverse=True) == ms


def test_order_respects_multiplication(ring):
    rng = seeded("order-mul")
    key = ring.order.key
    for _ in range(200):
        a = tuple(rng.randrange(4) for _ in range(3))
        b = tuple(rng.randrange(4) for _ in range(3))
        c = tuple(rng.randrange(4) for _ in range(3))
        if key(a) > key(b):
            assert key(mono_mul(a, c)) > key(mono_mul(b, c))


def test_elimination_order_blocks():
    ring = PolyRing(101, ("t", "x", "y"), elimination_order(1))
    f = ring.parse("t + x^5")
    # anything with t beats anything without
    assert f.lead()[0] == (1, 0, 0)


def test_parse_str_round_trip(ring):
    rng = seeded("parse-roundtrip")
    for _ in range(60):
        terms = {}
        for _k in range(rng.randrange(1, 6)):
            m = tuple(rng.randrange(3) for _ in range(3))
            terms[m] = rng.randrange(1, 101)
        f = Poly(ring, terms)
        assert ring.parse(str(f)) == f


def test_parse_specifics(ring):
    assert ring.parse("0").is_zero()
    assert ring.parse("x^2*y - 3") == ring.parse("-3 + x^2*y")
    assert ring.parse("2*x + 100*x") == ring.parse("x")
    assert ring.parse("2*x + 99*x").is_zero()  # 101 x = 0
    with pytest.raises(InputError):
        ring.parse("x + w")
    with pytest.raises(InputError):
        ring.parse("x ++ y")


def test_parse_error_carries_position(ring):
    with pytest.raises(InputError) as exc:
        ring.parse("x^2 + q")
    assert "position" in str(exc.value)


def test_homogeneous_degree(ring):
    assert ring.parse("x^2 + y*z").homogeneous_degree() == 2
    assert ring.parse("x^2 + y").homogeneous_degree() is None
    assert ring.zero().homogeneous_degree() is None
    assert ring.zero().degree() == -1
    assert ring.parse("x + y").is_homogeneous()


def test_poly_pow_and_scale(ring):
    f = ring.parse("x + y")
    assert f ** 2 == ring.parse("x^2 + 2*x*y + y^2")
    assert f.scale(100) == ring.parse("100*x + 100*y")
    assert (f - f).is_zero()


def test_map_to_permutes_variables(ring):
    other = PolyRing(101, ("a", "b", "c", "d"), DEGREVLEX)
    f = ring.parse("x*y + z^2")
    g = f.map_to(other, [3, 1, 0])  # x->d, y->b, z->a
    assert g == other.parse("d*b + a^2")


def test_matmul_matches_naive():
    rng = seeded("matmul")
    p = 101
    for _ in range(10):
        n, m, k = rng.randrange(1, 7), rng.randrange(1, 7), rng.randrange(1, 7)
        a = np.array([[rng.randrange(p) for _ in range(m)] for _ in range(n)], dtype=np.int64)
        b = np.array([[rng.randrange(p) for _ in range(k)] for _ in range(m)], dtype=np.int64)
        want = [
            [sum(int(a[i, t]) * int(b[t, j]) for t in range(m)) % p for j in range(k)]
            for i in range(n)
        ]
        assert matmul(a, b, p).tolist() == want


def test_rref_shape_and_idempotence():
    rng = seeded("rref")
    p = 101
    for _ in range(20):
        n, m = rng.randrange(1, 8), rng.randrange(1, 8)
        a = np.array([[rng.randrange(p) for _ in range(m)] for _ in range(n)], dtype=np.int64)
        r, piv = rref(a, p)
        assert list(piv) == sorted(piv)
        for i, pc in enumerate(piv):
            col = r[:, pc]
            assert col[i] == 1 and sum(int(x) for x in col) == 1
        r2, piv2 = rref(r, p)
        assert (r2 == r).all()
        assert list(piv2) == list(piv)


def test_nullspace_kills_and_counts():
    rng = seeded("nullspace")
    p = 101
    for _ in range(20):
        n, m = rng.randrange(1, 7), rng.randrange(1, 7)
        a = np.array([[rng.randrange(p) for _ in range(m)] for _ in range(n)], dtype=np.int64)
        _, piv = rref(a, p)
        basis = nullspace(a, p)
        assert len(basis) == m - len(piv)
        for v in basis:
            assert not (matmul(a, np.array(v, dtype=np.int64).reshape(-1, 1), p)).any()


def test_solve_linear_exact_and_inconsistent():
    rng = seeded("solve")
    p = 101
    for _ in range(20):
        n, m = rng.randrange(1, 7), rng.randrange(1, 7)
        a = np.array([[rng.randrange(p) for _ in range(m)] for _ in range(n)], dtype=np.int64)
        x_true = np.array([rng.randrange(p) for _ in range(m)], dtype=np.int64)
        b = matmul(a, x_true.reshape(-1, 1), p).reshape(-1)
        got = solve_linear(a, b, p)
        assert got is not None
        x, _null = got
        assert (matmul(a, np.array(x, dtype=np.int64).reshape(-1, 1), p).reshape(-1) == b).all()
    # x + y = 1 and x + y = 2 cannot both hold
    a = np.array([[1, 1], [1, 1]], dtype=np.int64)
    assert solve_linear(a, np.array([1, 2]), p) is None


def test_incremental_span_tracks_rank():
    rng = seeded("span")
    p = 101
    for _ in range(15):
        w = rng.randrange(1, 8)
        count = rng.randrange(1, 10)
        vecs = [[rng.randrange(p) for _ in range(w)] for _ in range(count)]
        span = IncrementalSpan(p, w)
        for v in vecs:
            span.add(v)
        _, piv = rref(np.array(vecs, dtype=np.int64), p)
        assert span.dim == len(piv)
        for v in vecs:
            assert span.contains(v)


def test_poly1_divmod_identity():
    rng = seeded("poly1")
    p = 101
    for _ in range(40):
        f = [rng.randrange(p) for _ in range(rng.randrange(1, 8))]
        g = [rng.randrange(p) for _ in range(rng.randrange(1, 5))]
        if poly1_deg(g) < 0:
            continue
        q, r = poly1_divmod(f, g, p)
        recomposed = [c % p for c in poly1_mul(q, g, p)]
        width = max(len(recomposed), len(r), len(f), 1)
        total = [0] * width
        for i, c in enumerate(recomposed):
            total[i] = (total[i] + c) % p
        for i, c in enumerate(r):
            total[i] = (total[i] + c) % p
        ftrim = f + [0] * (width - len(f))
        assert all((a - b) % p == 0 for a, b in zip(total, ftrim))
        assert poly1_deg(r) < poly1_deg(g) or poly1_deg(r) < 0


def test_poly1_gcd_divides():
    p = 101
    f = poly1_mul([1, 1], [2, 0, 1], p)  # (x+1)(x^2+2)
    g = poly1_mul([1, 1], [5, 1], p)  # (x+1)(x+5)
    d = poly1_gcd(f, g, p)
    assert poly1_monic(d, p) == [1, 1]


def test_poly1_xgcd_identity():
    rng = seeded("xgcd")
    p = 101
    for _ in range(30):
        f = [rng.randrange(p) for _ in range(rng.randrange(1, 7))]
        g = [rng.randrange(p) for _ in range(rng.randrange(1, 7))]
        d, a, b = poly1_xgcd(f, g, p)
        lhs = poly1_mul(a, f, p)
        rhs = poly1_mul(b, g, p)
        width = max(len(lhs), len(rhs), len(d), 1)
        tot = [0] * width
        for i, c in enumerate(lhs):
            tot[i] = (tot[i] + c) % p
        for i, c in enumerate(rhs):
            tot[i] = (tot[i] + c) % p
        dpad = d + [0] * (width - len(d))
        assert all((x - y) % p == 0 for x, y in zip(tot, dpad))


def test_poly1_powmod():
    p = 101
    m = [1, 0, 1]  # x^2 + 1
    f = [0, 1]  # x
    assert poly1_powmod(f, 2, m, p) == [100]  # x^2 = -1 mod (x^2+1)


def test_factor_univariate_reassembles():
    rng = seeded("factor")
    p = 101
    for _ in range(20):
        target = [1]
        for _i in range(rng.randrange(1, 4)):
            lin = [rng.randrange(p), 1]
            for _m in range(rng.randrange(1, 3)):
                target = poly1_mul(target, lin, p)
        factors = factor_univariate(list(target), p, rng)
        prod = [1]
        for base, mult in factors:
            assert base[-1] == 1
            for _ in range(mult):
                prod = poly1_mul(prod, base, p)
        assert prod == poly1_monic(target, p)


def test_factor_x4_minus_1():
    rng = seeded("factor-x4")
    got = factor_univariate([100, 0, 0, 0, 1], 101, rng)
    # 101 = 1 mod 4, so x^4 - 1 splits into four linear factors
    assert [poly1_deg(b) for b, _ in got] == [1, 1, 1, 1]
    assert all(m == 1 for _, m in got)
