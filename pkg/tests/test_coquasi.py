import random
from fractions import Fraction

import pytest

from hopfq.coquasi import (SphereRing, SpherePoly, TensorPoly, _adapter_for,
                           antipode, check_coassociator, check_coquasigroup,
                           check_moufang_coquasi, coassociator, counit,
                           cross_bounded_check, delta, normal_form, phi_star,
                           phi_star_expected, pipeline, t_contract, t_counit,
                           t_antipode)
from hopfq.loops import sphere_sample
from hopfq.quasialgebra import qa_mul


def sum_of_squares(ring):
    terms = {}
    for a in range(ring.ngen):
        key = 2 << (4 * a)
        terms[key] = terms.get(key, 0) + 1
    return ring.poly(terms)


def test_normal_form_basics():
    R = SphereRing(3)
    assert sum_of_squares(R) == R.one()
    x0, x1 = R.x(0), R.x(1)
    p = x0 * x0 * x1
    # one rewrite step: x_1 - sum_{a != 0} x_a^2 x_1
    assert p.terms.get(R.gen_mono(1)) == 1
    assert len(p.terms) == 8
    q = x0 * x0 * x0
    assert q.terms.get(R.gen_mono(0)) == 1
    # idempotent: re-normalizing canonical terms changes nothing
    assert R.poly(dict(p.terms)) == p


def test_normal_form_ring_homomorphism():
    R = SphereRing(3)
    raw = SphereRing(3, reduce=False, table=R.table)
    rng = random.Random(17)

    def rand_raw():
        t = {}
        for _ in range(4):
            m = 0
            for _ in range(rng.randint(0, 3)):
                m += raw.gen_mono(rng.randrange(8))
            t[m] = t.get(m, 0) + Fraction(rng.randint(-3, 3))
        return raw.poly(t)

    for _ in range(10):
        p, q = rand_raw(), rand_raw()
        lhs = R.poly(dict(p.terms)) * R.poly(dict(q.terms))
        rhs = R.poly(dict((p * q).terms))
        assert lhs == rhs


def test_structure_maps_on_generators():
    R1 = SphereRing(1)
    d = delta(R1.x(0))
    g = R1.gen_mono
    assert d.terms == {(g(0), g(0)): 1, (g(1), g(1)): -1}
    assert counit(R1.x(0)) == 1 and counit(R1.x(1)) == 0

    R3 = SphereRing(3)
    assert antipode(R3.x(0)) == R3.x(0)
    for i in range(1, 8):
        assert antipode(R3.x(i)) == R3.x(i).scale(-1)


def test_antipode_multiplicative_on_random_polys():
    R = SphereRing(2)
    rng = random.Random(23)

    def rand_poly():
        t = {}
        for _ in range(3):
            m = sum(R.gen_mono(rng.randrange(4))
                    for _ in range(rng.randint(0, 3)))
            t[m] = t.get(m, 0) + rng.randint(-2, 2)
        return R.poly(t)

    for _ in range(8):
        p, q = rand_poly(), rand_poly()
        assert antipode(p * q) == antipode(q) * antipode(p)


def test_antipode_cancellation_on_random_polys():
    R = SphereRing(2)
    alg = _adapter_for(R)
    rng = random.Random(29)
    for _ in range(6):
        t = {}
        for _ in range(3):
            m = sum(R.gen_mono(rng.randrange(4))
                    for _ in range(rng.randint(0, 2)))
            t[m] = t.get(m, 0) + rng.randint(-2, 2)
        p = R.poly(t)
        tp = delta(p)
        lhs = t_contract(t_antipode(tp, 0), [[0, 1]])
        rhs = t_contract(t_antipode(tp, 1), [[0, 1]])
        want = TensorPoly.scalar_unit(alg, 1, counit(p))
        assert lhs == want and rhs == want


def test_pipeline_vocabulary():
    R = SphereRing(3)
    alg = _adapter_for(R)
    for dd in range(8):
        el = TensorPoly.element(alg, R.gen_mono(dd))
        t = pipeline(el, ("delta", 0))
        # counit collapse gives the element back
        assert pipeline(t, ("counit", 0)) == el
        assert pipeline(t, ("counit", 1)) == el
        # m(S (x) id) Delta = eps . 1
        s = pipeline(pipeline(t, ("antipode", 0)), ("mul", 0))
        assert s == TensorPoly.scalar_unit(alg, 1, 1 if dd == 0 else 0)
        # (m (x) id)(S (x) id (x) id)(id (x) Delta) Delta = 1 (x) id
        t3 = pipeline(t, ("delta", 1))
        left = pipeline(pipeline(t3, ("antipode", 0)), ("mul", 0))
        assert left == pipeline(el, ("unit", 0))

    with pytest.raises(OverflowError):
        el = TensorPoly.element(alg, R.gen_mono(1))
        t = el
        for _ in range(4):
            t = pipeline(t, ("delta", 0))


def test_check_coquasigroup():
    rep3 = check_coquasigroup(3)
    assert rep3.ok, rep3.text()
    assert rep3["coassociativity-fails"].status == "pass"
    rep2 = check_coquasigroup(2)
    assert rep2.ok, rep2.text()
    assert rep2["coassociative"].status == "pass"


def test_coassociativity_witness_x111():
    from hopfq.coquasi import _dd_left, _dd_right, _el
    R = SphereRing(3)
    alg = _adapter_for(R)
    el = _el(alg, R.gen_mono(7))
    assert _dd_left(alg, el) != _dd_right(alg, el)


def test_moufang_suite():
    for n in (1, 2, 3):
        rep = check_moufang_coquasi(n)
        assert rep.ok, rep.text()


def test_coassociator_suite():
    rep = check_coassociator(3, deep=True)
    assert rep.ok, rep.text()
    rep2 = check_coassociator(2, deep=True)
    assert rep2.ok, rep2.text()


def test_phi_star():
    R2 = SphereRing(2)
    for d in range(4):
        assert phi_star(R2, d).is_zero()
    R3 = SphereRing(3)
    for d in range(8):
        assert phi_star(R3, d) == phi_star_expected(R3, d)


def test_coassociator_counit_spot():
    R = SphereRing(2)
    alg = _adapter_for(R)
    for d in range(4):
        Phi = coassociator(R, d)
        want = TensorPoly.scalar_unit(alg, 2, 1 if d == 0 else 0)
        assert t_counit(Phi, 0) == want


def test_cross_relations_and_witness():
    rep = cross_bounded_check(3)
    status = {c.name: c for c in rep.checks}
    assert status["commutation-relations"].status == "pass"
    assert status["sigma-conjugation"].status == "pass"
    assert status["noncommutativity-witness"].status == "pass"
    assert status["antipode-formula"].status == "pass"
    assert status["inverse-laws"].status == "pass"
    # the Moufang identity genuinely fails on the mixed degree-2 monomials
    # x_a sigma_b at n = 3 (the twisted sphere quasigroup is not Moufang);
    # see the verification notes
    assert status["moufang"].status == "fail"
    assert status["moufang"].witness[0].startswith("x")


def test_cross_moufang_holds_in_coassociative_cases():
    for n in (1, 2):
        rep = cross_bounded_check(n)
        assert rep.ok, rep.text()


def test_cross_quasigroup_moufang_counterexample(tables):
    # quasigroup-level confirmation: sigma-twisted product of exact sphere
    # points violates u(v(uw)) = ((uv)u)w at n = 3
    from hopfq.quasialgebra import QuasiElement, sphere_point
    T = tables[3]

    def act(s, u):
        return QuasiElement(T, [(-1 if bin(s & b).count("1") & 1 else 1) * c
                                for b, c in enumerate(u.coeffs)])

    def cmul(x, y):
        (u, s), (v, t) = x, y
        return (qa_mul(u, act(s, v)), s ^ t)

    u = (sphere_point(T, [Fraction(1, 2), Fraction(-1, 3), 0, 0,
                          Fraction(1, 5), 0, 0]), 1)
    v = (sphere_point(T, [0, Fraction(2, 3), Fraction(1, 7), 0, 0, 0,
                          Fraction(-1, 2)]), 3)
    w = (sphere_point(T, [Fraction(1, 4), 0, 0, Fraction(1, 2), 0,
                          Fraction(1, 3), 0]), 5)
    lhs = cmul(u, cmul(v, cmul(u, w)))
    rhs = cmul(cmul(cmul(u, v), u), w)
    assert lhs[1] == rhs[1]
    assert lhs[0] != rhs[0]
    # while the untwisted points do satisfy it
    u0, v0, w0 = (u[0], 0), (v[0], 0), (w[0], 0)
    assert cmul(u0, cmul(v0, cmul(u0, w0)))[0] == \
        cmul(cmul(cmul(u0, v0), u0), w0)[0]


def test_duality_pairing_with_loop_points(tables):
    # evaluating Delta x_c at a pair of points reproduces the coordinate
    # of their product in the twisted group algebra
    T = tables[2]
    R = SphereRing(2, table=T)
    pts = sphere_sample(T)[:10]
    for c in range(4):
        dxc = delta(R.x(c))
        for u in pts[:5]:
            for v in pts[5:]:
                got = Fraction(0)
                for (m1, m2), coeff in dxc.terms.items():
                    got += coeff * SpherePoly(R, {m1: 1}).evaluate(u.coeffs) \
                        * SpherePoly(R, {m2: 1}).evaluate(v.coeffs)
                assert got == qa_mul(u, v).coeffs[c]


def test_normal_form_public_entry():
    R = SphereRing(2)
    p = normal_form(R, {(2, 0, 0, 0): 1})
    assert p == R.one() - R.x(1) * R.x(1) - R.x(2) * R.x(2) - R.x(3) * R.x(3)
