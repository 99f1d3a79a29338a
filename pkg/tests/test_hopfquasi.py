import pytest

from hopfq.hopfquasi import (LinearHopfData, character_action,
                             check_hopf_quasigroup, cross_product, from_loop,
                             trivial_action)
from hopfq.loops import build_cyclic_twist, build_gn, corrupt_table


def test_from_loop_structure(tables):
    T = tables[3]
    G = build_gn(T)
    H = from_loop(G)
    assert H.dim == 16
    assert all(H.counit[i] == 1 for i in range(16))
    inv = G.inverses()
    for i in range(16):
        assert H.coproduct[i] == ((i, i, 1),)
        assert H.antipode[i] == ((inv[i], 1),)


def test_kg3_full_checks(tables):
    H = from_loop(build_gn(tables[3]))
    rep = check_hopf_quasigroup(H, deep=True)
    assert rep.ok, rep.text()
    assert not H.is_associative()[0]
    # S^2 = id in the cocommutative case
    for i in range(H.dim):
        assert H.S(H.S({i: 1})) == {i: 1}


def test_kg2_is_hopf_algebra(tables):
    H = from_loop(build_gn(tables[2]))
    assert check_hopf_quasigroup(H, deep=True).ok
    assert H.is_associative()[0]


def test_twisted_loop_algebra_consistency(tables):
    # an order-16 inverse-property loop from the order-4 scalar twist
    L = build_cyclic_twist(4, tables[2])
    H = from_loop(L)
    rep = check_hopf_quasigroup(H, deep=True)
    assert rep.ok, rep.text()


def test_identity_antipode_fails(tables):
    H = from_loop(build_gn(tables[3]))
    bad = LinearHopfData(H.dim, H.labels, H.unit, H.product, H.coproduct,
                         H.counit, tuple(((i, 1),) for i in range(H.dim)))
    rep = check_hopf_quasigroup(bad, deep=False)
    status = {c.name: c for c in rep.checks}
    assert status["inverse-law-left-1"].status == "fail"
    assert status["inverse-law-left-1"].witness is not None


def test_from_loop_requires_ip(tables):
    with pytest.raises(ValueError):
        from_loop(corrupt_table(build_gn(tables[3])))


def test_cross_product_dim128(tables):
    T = tables[3]
    H = from_loop(build_gn(T))
    HX = cross_product(H, 3, character_action(T))
    assert HX.dim == 128
    rep = check_hopf_quasigroup(HX, deep=False)
    assert rep.ok, rep.text()


def test_cross_antipode_formula(tables):
    T = tables[3]
    H = from_loop(build_gn(T))
    act = character_action(T)
    HX = cross_product(H, 3, act)
    size = T.size
    G = 8
    for b in range(size):
        for a in range(G):
            i = b * G + a      # (+e_b, sigma_a)
            j, c = H.antipode[b][0]
            j2, c2 = act(a, j)
            assert HX.S({i: 1}) == {j2 * G + a: c * c2}


def test_trivial_action_tensor_product(tables):
    H = from_loop(build_gn(tables[2]))
    HT = cross_product(H, 1, trivial_action)
    assert HT.dim == 16
    assert check_hopf_quasigroup(HT, deep=True).ok


def test_bad_action_rejected(tables):
    H = from_loop(build_gn(tables[2]))

    def bad(a, idx):
        if a == 1 and idx == 3:
            return (4, 1)
        return (idx, 1)

    with pytest.raises(ValueError):
        cross_product(H, 1, bad)
