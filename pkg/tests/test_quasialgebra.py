import random
from fractions import Fraction

import pytest

from hopfq.quasialgebra import (QuasiElement, qa_associator, qa_inverse,
                                qa_mul, qa_norm, sphere_point)


def rand_element(T, rng, span=4):
    return QuasiElement(T, [Fraction(rng.randint(-span, span),
                                     rng.randint(1, 3))
                            for _ in range(T.size)])


def test_basis_products(tables):
    T = tables[3]
    e = lambda a: QuasiElement.basis(T, a)
    assert qa_mul(e(0b001), e(0b010)) == e(0b011)
    for a in range(1, 8):
        assert qa_mul(e(a), e(a)) == QuasiElement.basis(T, 0, -1)
    u = rand_element(T, random.Random(5))
    assert qa_mul(e(0), u) == u and qa_mul(u, e(0)) == u


def test_anticommutativity_on_distinct_imaginaries(tables):
    for n in (1, 2, 3):
        T = tables[n]
        for a in range(1, T.size):
            for b in range(1, T.size):
                if a == b:
                    continue
                ab = qa_mul(QuasiElement.basis(T, a), QuasiElement.basis(T, b))
                ba = qa_mul(QuasiElement.basis(T, b), QuasiElement.basis(T, a))
                assert ab == -ba


def test_norm_multiplicative_up_to_n3(tables):
    rng = random.Random(99)
    for n in (1, 2, 3):
        T = tables[n]
        for a in range(T.size):
            for b in range(T.size):
                u = QuasiElement.basis(T, a)
                v = QuasiElement.basis(T, b)
                assert qa_norm(qa_mul(u, v)) == qa_norm(u) * qa_norm(v)
        for _ in range(8):
            u = rand_element(T, rng)
            v = rand_element(T, rng)
            assert qa_norm(qa_mul(u, v)) == qa_norm(u) * qa_norm(v)


def test_norm_fails_at_n4(tables):
    T = tables[4]
    witness = None
    for a in range(16):
        for b in range(a + 1, 16):
            u = QuasiElement.basis(T, a) + QuasiElement.basis(T, b)
            for c in range(16):
                for d in range(c + 1, 16):
                    v = QuasiElement.basis(T, c) + QuasiElement.basis(T, d)
                    if qa_norm(qa_mul(u, v)) != qa_norm(u) * qa_norm(v):
                        witness = (a, b, c, d)
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    assert witness is not None


def test_inverse(tables):
    T = tables[3]
    e0 = QuasiElement.basis(T, 0)
    assert qa_inverse(e0) == e0
    for i in range(1, 8):
        ei = QuasiElement.basis(T, i)
        assert qa_inverse(ei) == -ei
    rng = random.Random(7)
    u = sphere_point(T, [Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                         for _ in range(7)])
    for _ in range(5):
        v = rand_element(T, rng)
        assert qa_mul(qa_inverse(u), qa_mul(u, v)) == v
        assert qa_mul(qa_mul(v, u), qa_inverse(u)) == v
    with pytest.raises(ZeroDivisionError):
        qa_inverse(QuasiElement.zero(T))


def test_associator_basis_formula(tables):
    T = tables[3]
    e = lambda a: QuasiElement.basis(T, a)
    for a in range(8):
        for b in range(8):
            for c in range(8):
                got = qa_associator(e(a), e(b), e(c))
                coeff = (T.phi(a, b, c) - 1) * T.F(b, c) * T.F(a, b ^ c)
                want = QuasiElement.basis(T, a ^ b ^ c).scale(coeff)
                assert got == want


def test_associator_vanishes_below_n3(tables):
    rng = random.Random(3)
    for n in (0, 1, 2):
        T = tables[n]
        for _ in range(6):
            u, v, w = (rand_element(T, rng) for _ in range(3))
            assert qa_associator(u, v, w) == QuasiElement.zero(T)


def test_associator_alternating_at_n3(tables):
    T = tables[3]
    e = lambda a: QuasiElement.basis(T, a)
    for a in range(8):
        for b in range(8):
            assert qa_associator(e(a), e(a), e(b)) == QuasiElement.zero(T)
            assert qa_associator(e(a), e(b), e(b)) == QuasiElement.zero(T)
            assert qa_associator(e(a), e(b), e(a)) == QuasiElement.zero(T)
            for c in range(8):
                x = qa_associator(e(a), e(b), e(c))
                assert qa_associator(e(b), e(a), e(c)) == -x
                assert qa_associator(e(a), e(c), e(b)) == -x


def test_sphere_point(tables):
    T = tables[3]
    assert sphere_point(T, [0] * 7) == QuasiElement.basis(T, 0)
    u = sphere_point(T, [1, 0, 0, 0, 0, 0, 0])
    assert u.coeffs[0] == 0 and u.coeffs[1] == 1
    rng = random.Random(11)
    for _ in range(10):
        t = [Fraction(rng.randint(-5, 5), rng.randint(1, 6)) for _ in range(7)]
        assert qa_norm(sphere_point(T, t)) == 1
    with pytest.raises(ValueError):
        sphere_point(T, [1, 2])
