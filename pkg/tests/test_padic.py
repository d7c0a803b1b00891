import random

import pytest

from gsp4hecke.errors import InvalidIndex, ModulusMismatch, PrecisionExhausted
from gsp4hecke.padic import (
    QuatMod,
    adjugate2,
    det2,
    det_mod,
    find_alpha_hat,
    hensel_rs,
    identity,
    inverse2,
    mat_mul,
    mat_scale,
    mat_transpose,
    psi,
    psi_block,
    similitude,
    smith_normal_form,
    verify_dictionary,
)

PRIMES = (3, 7, 11)
K = 6


def rand_quat(rng, p, k=K):
    q = p**k
    return QuatMod.of([rng.randrange(q) for _ in range(4)], p, k)


def test_hensel_examples():
    assert (hensel_rs(3, 1).r, hensel_rs(3, 1).s) == (1, 1)
    assert (hensel_rs(7, 1).r, hensel_rs(7, 1).s) == (2, 3)
    for p in (3, 5, 7, 11, 13, 101):
        pr = hensel_rs(p, K)
        assert (pr.r**2 + pr.s**2 + 1) % p**K == 0


def test_hensel_rejects_bad_input():
    with pytest.raises(InvalidIndex):
        hensel_rs(9, 2)
    with pytest.raises(InvalidIndex):
        hensel_rs(3, 0)


def test_alpha_hat_examples():
    assert find_alpha_hat(3) == (1, 1, 1, 0)
    assert find_alpha_hat(7) == (1, 1, 1, 2)
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 101):
        a = find_alpha_hat(p)
        assert a[0] >= 1 and sum(x * x for x in a) == p


def test_psi_of_one_is_identity():
    pr = hensel_rs(5, 3)
    assert psi(QuatMod(1, 0, 0, 0, p=5, k=3), pr) == identity(2)


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        psi(QuatMod(1, 0, 0, 0, p=5, k=2), hensel_rs(5, 3))
    with pytest.raises(ModulusMismatch):
        QuatMod(1, 0, 0, 0, p=5, k=2) * QuatMod(1, 0, 0, 0, p=5, k=3)


def test_involutions():
    rng = random.Random(3)
    for _ in range(200):
        z = rand_quat(rng, 7)
        assert z.star().star() == z and z.conj().conj() == z
        assert z.prime() == z.conj().star()
        assert (z * z.conj()).coords == (z.norm(), 0, 0, 0)


@pytest.mark.parametrize("p", PRIMES)
def test_psi_is_multiplicative(p):
    rng = random.Random(p)
    pr, q = hensel_rs(p, K), p**K
    for _ in range(1000):
        a, b = rand_quat(rng, p), rand_quat(rng, p)
        assert psi(a * b, pr) == mat_mul(psi(a, pr), psi(b, pr), q)
        assert psi(a + b, pr) == tuple(
            tuple((x + y) % q for x, y in zip(r1, r2)) for r1, r2 in zip(psi(a, pr), psi(b, pr))
        )


@pytest.mark.parametrize("p", PRIMES)
def test_inverse_forms_for_unit_norms(p):
    rng = random.Random(10 * p)
    pr, q = hensel_rs(p, K), p**K
    seen = 0
    while seen < 300:
        a = rand_quat(rng, p)
        if a.norm() % p == 0:
            continue
        seen += 1
        A = psi(a, pr)
        inv = inverse2(A, q)
        assert psi(a.prime(), pr) == mat_scale(mat_transpose(inv), a.norm(), q)
        assert psi(a.conj(), pr) == mat_scale(inv, a.norm(), q)


def _random_gsv2(rng, p, k):
    """Random product of generators of the quaternionic similitude group, with its similitude."""
    q = p**k
    one = QuatMod(1, 0, 0, 0, p=p, k=k)
    zero = QuatMod(0, 0, 0, 0, p=p, k=k)
    g = (one, zero, zero, one)
    mu = 1

    def mul(x, y):
        a, b, c, d = x
        e, f, g_, h = y
        return (a * e + b * g_, a * f + b * h, c * e + d * g_, c * f + d * h)

    for _ in range(6):
        kind = rng.randrange(4)
        if kind == 0:
            b = QuatMod(rng.randrange(q), rng.randrange(q), rng.randrange(q), 0, p=p, k=k)
            step = (one, b, zero, one)
        elif kind == 1:
            c = QuatMod(rng.randrange(q), rng.randrange(q), rng.randrange(q), 0, p=p, k=k)
            step = (one, zero, c, one)
        elif kind == 2:
            a = rand_quat(rng, p, k)
            step = (a, zero, zero, a.prime())
            mu = mu * a.norm() % q
        else:
            step = (zero, one, one * -1, zero)
        g = mul(g, step)
    a, b, c, d = g
    quat_mu = a * d.star() - b * c.star()
    assert quat_mu.coords[1:] == (0, 0, 0) and quat_mu.coords[0] == mu
    return g, mu


@pytest.mark.parametrize("p", PRIMES)
def test_block_image_is_symplectic(p):
    rng = random.Random(100 + p)
    pr, q = hensel_rs(p, K), p**K
    for _ in range(200):
        g, mu = _random_gsv2(rng, p, K)
        assert similitude(psi_block(g, pr), q) == mu


def test_snf_examples():
    assert smith_normal_form(identity(2), 3, 4) == (0, 0)
    ah = QuatMod.of(find_alpha_hat(3), 3, 4)
    assert smith_normal_form(psi(ah**2, hensel_rs(3, 4)), 3, 4) == (0, 2)
    d = ((1, 0, 0, 0), (0, 9, 0, 0), (0, 0, 81, 0), (0, 0, 0, 9))
    assert smith_normal_form(d, 3, 6) == (0, 2, 2, 4)


def test_snf_precision():
    with pytest.raises(PrecisionExhausted):
        smith_normal_form(((1, 0), (0, 27)), 3, 3)


def _random_unimodular(rng, n, p, q):
    while True:
        m = tuple(tuple(rng.randrange(q) for _ in range(n)) for _ in range(n))
        if det_mod(m, q) % p:
            return m


@pytest.mark.parametrize("p", PRIMES)
def test_snf_invariant_under_unimodular_changes(p):
    rng = random.Random(7 * p)
    q = p**K
    for _ in range(100):
        vals = sorted(rng.randrange(3) for _ in range(4))
        d = tuple(tuple(p ** vals[i] if i == j else 0 for j in range(4)) for i in range(4))
        u, v = _random_unimodular(rng, 4, p, q), _random_unimodular(rng, 4, p, q)
        assert smith_normal_form(mat_mul(mat_mul(u, d, q), v, q), p, K) == tuple(vals)


@pytest.mark.parametrize("p, m, l, k, want", [(3, 1, 2, 6, (0, 1, 1, 2)), (7, 0, 1, 4, (0, 0, 1, 1)), (3, 0, 0, 6, (0, 0, 0, 0))])
def test_dictionary_examples(p, m, l, k, want):
    r = verify_dictionary(p, m, l, k)
    assert r.passed
    assert r.smith_valuations == want
    assert r.similitude_valuation == l


def test_dictionary_preconditions():
    with pytest.raises(InvalidIndex):
        verify_dictionary(3, 2, 3)
    with pytest.raises(PrecisionExhausted):
        verify_dictionary(3, 1, 4, k=4)


def test_det_and_adjugate():
    m = ((2, 3), (5, 7))
    assert det2(m, 1000) == (14 - 15) % 1000
    assert mat_mul(m, adjugate2(m, 1000), 1000) == mat_scale(identity(2), det2(m, 1000), 1000)
