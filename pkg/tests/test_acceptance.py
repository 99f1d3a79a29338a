"""Acceptance gate: one test per criterion, each timed against its stated
budget and printed as a single PASS/FAIL line (run with -s to see them).

Every comparison is exact equality of canonical forms; there are no
numeric tolerances anywhere in the engine.

Criterion 7 is expected to fail honestly: the noncommutative cross
product at n = 3 satisfies the antipode composite laws but provably
violates the Moufang identity on the mixed degree-2 monomials
x_a sigma_b (counterexamples at three independent levels: the tensor
engine, the raw pipeline, and exact sphere points in the twisted
quasigroup).  See notes in the repository-external decisions ledger.
"""

import time

from hopfq import coquasi, diffcalc, grouptables, hopfquasi, loops, qdeform
from hopfq.grouptables import cochain_build, lin_indep2, lin_indep3


class Budget:
    def __init__(self, number, limit_s):
        self.number = number
        self.limit = limit_s
        self.t0 = time.perf_counter()

    def done(self, ok=True, note=""):
        dt = time.perf_counter() - self.t0
        verdict = "PASS" if ok else "FAIL"
        print("ACCEPTANCE %2d %s  (%.2fs / %ds)%s"
              % (self.number, verdict, dt, self.limit,
                 "  " + note if note else ""))
        assert dt < self.limit, "criterion %d exceeded %ds (%.2fs)" \
            % (self.number, self.limit, dt)
        return ok


def test_criterion_01_composition_identities():
    b = Budget(1, 1)
    ok = True
    for n in (1, 2, 3):
        rep = grouptables.verify_cochain_identities(
            cochain_build(n), names=grouptables.COMPOSITION_CHECKS)
        ok = ok and rep.ok
    rep4 = grouptables.verify_cochain_identities(
        cochain_build(4), names=grouptables.COMPOSITION_CHECKS)
    comp = rep4["composition"]
    ok = ok and comp.status == "fail" and comp.witness is not None
    assert b.done(ok, "n<=3 all hold; (quad) witness at n=4: %s"
                  % (comp.witness,))


def test_criterion_02_independence_closed_forms():
    b = Budget(2, 1)
    ok = True
    for n in (1, 2, 3):
        T = cochain_build(n)
        for a in range(T.size):
            for bb in range(T.size):
                if (T.rho(a, bb) == -1) != lin_indep2(a, bb):
                    ok = False
                for c in range(T.size):
                    if (T.phi(a, bb, c) == -1) != lin_indep3(a, bb, c):
                        ok = False
    T4 = cochain_build(4)
    for a in range(16):
        for bb in range(16):
            if (T4.rho(a, bb) == -1) != lin_indep2(a, bb):
                ok = False
    # recorded, non-gating: the phi closed form needs the composition
    # property and genuinely fails at n = 4 (first witness (2,4,9))
    assert T4.phi(2, 4, 9) == 1 and lin_indep3(2, 4, 9)
    assert b.done(ok, "phi-form n<=3, rho-form n<=4; phi@4 fails at (2,4,9)")


def test_criterion_03_order16_moufang_loop():
    b = Budget(3, 1)
    T = cochain_build(3)
    G = loops.build_gn(T)
    rep = loops.loop_check(G)
    names = ("left-inverse-property", "right-inverse-property",
             "moufang-form-1", "moufang-form-2", "moufang-form-3")
    ok = G.order == 16 and all(rep[k].status == "pass" for k in names)
    ok = ok and loops.signed_basis_associator(T).ok
    assert b.done(ok)


def test_criterion_04_loop_algebra_and_cross_product():
    b = Budget(4, 30)
    T = cochain_build(3)
    H = hopfquasi.from_loop(loops.build_gn(T))
    rep = hopfquasi.check_hopf_quasigroup(H, deep=True)
    names = ("inverse-law-left-1", "inverse-law-left-2",
             "inverse-law-right-1", "inverse-law-right-2",
             "antipode-cancellation", "antipode-antimultiplicative",
             "antipode-anticomultiplicative", "antipode-involutive",
             "moufang-form-1")
    ok = H.dim == 16 and all(rep[k].status == "pass" for k in names)
    HX = hopfquasi.cross_product(H, 3, hopfquasi.character_action(T))
    repx = hopfquasi.check_hopf_quasigroup(HX, deep=False)
    ok = ok and HX.dim == 128 and all(
        repx[k].status == "pass"
        for k in ("inverse-law-left-1", "inverse-law-left-2",
                  "inverse-law-right-1", "inverse-law-right-2"))
    assert b.done(ok)


def test_criterion_05_sphere_coquasigroup():
    b = Budget(5, 10)
    rep3 = coquasi.check_coquasigroup(3)
    okeys = ("inverse-law-left-1", "inverse-law-left-2",
             "inverse-law-right-1", "inverse-law-right-2")
    ok = all(rep3[k].status == "pass" for k in okeys)
    ok = ok and rep3["coassociativity-fails"].status == "pass"
    repm = coquasi.check_moufang_coquasi(3)
    ok = ok and repm["moufang-form-1"].status == "pass"
    rep2 = coquasi.check_coquasigroup(2)
    ok = ok and rep2["coassociative"].status == "pass"
    assert b.done(ok)


def test_criterion_06_coassociator():
    b = Budget(6, 10)
    rep = coquasi.check_coassociator(3, deep=False)
    ok = rep["coassociator-counit-collapse"].status == "pass"
    ok = ok and rep["coassociator-antipode-identities"].status == "pass"
    ok = ok and rep["linearized-coassociator-formula"].status == "pass"
    ok = ok and rep["linearized-adjoint-to-associator"].status == "pass"
    R2 = coquasi.SphereRing(2)
    ok = ok and all(coquasi.phi_star(R2, d).is_zero() for d in range(4))
    assert b.done(ok)


def test_criterion_07_noncommutative_cross_product():
    b = Budget(7, 30)
    rep = coquasi.cross_bounded_check(3)
    ok = rep["noncommutativity-witness"].status == "pass"
    ok = ok and rep["inverse-laws"].status == "pass"
    moufang = rep["moufang"]
    b.done(ok and moufang.status == "pass",
           "Moufang on degree-<=2 monomials: %s (witness %s)"
           % (moufang.status, moufang.witness))
    assert ok
    assert moufang.status == "pass", (
        "The Moufang identity fails on the mixed monomials x_a sigma_b of "
        "the n=3 cross product (first witness %s).  This is a genuine "
        "property of the object, confirmed independently by exact sphere "
        "points in the twisted quasigroup, so this clause of the criterion "
        "is unattainable as stated; see the decisions ledger."
        % (moufang.witness,))


def test_criterion_08_differential_calculus():
    b = Budget(8, 60)
    rep = diffcalc.check_diffcalc(3)
    names = ("tangency", "left-field-commutator",
             "left-right-commutator-defect", "d-field-decomposition",
             "d-field-explicit-form", "d-fields-antisymmetric",
             "d-fields-cyclic-relation", "d-fields-diagonal-sum",
             "d-partial-commutator", "d-d-commutator")
    ok = all(rep[k].status == "pass" for k in names)
    mc3 = diffcalc.check_mc(3)
    ok = ok and mc3["structure-function-antisymmetry"].status == "pass"
    ok = ok and mc3["structure-function-counit"].status == "pass"
    ok = ok and mc3["structure-function-contraction"].status == "pass"
    mc2 = diffcalc.check_mc(2)
    ok = ok and mc2["structure-function-contraction"].status == "pass"
    assert b.done(ok)


def test_criterion_09_malcev():
    b = Budget(9, 5)
    ok = diffcalc.check_malcev(2).ok and diffcalc.check_malcev(3).ok
    assert b.done(ok)


def test_criterion_10_g2_extraction():
    b = Budget(10, 30)
    alg3, rank3, _ = diffcalc.g2_extract(3)
    ok = rank3 == 14 and alg3.antisymmetric() and alg3.jacobi()
    rep2 = diffcalc.check_g2(2)
    ok = ok and rep2["rank"].status == "pass"
    ok = ok and rep2["so3-structure-constants"].status == "pass"
    assert b.done(ok)


def test_criterion_11_d_squared_zero():
    b = Budget(11, 10)
    ok = True
    for n in (2, 3):
        calc = diffcalc.Calculus(n)
        for a in range(calc.ngen):
            w = diffcalc.d_function(calc, calc.ring.x(a))
            if not diffcalc.d_one_form(calc, w).is_zero():
                ok = False
    assert b.done(ok)


def test_criterion_12_q_deformation():
    b = Budget(12, 10)
    rep = qdeform.check_qhopf()
    names = ("rewriting-confluent", "coproduct-respects-relations",
             "counit-respects-relations", "antipode-respects-relations",
             "antipode-laws", "coassociative-on-generators",
             "z-coproducts", "q1-specialization")
    ok = all(rep[k].status == "pass" for k in names)
    entries = {e["relation"]: e for e in qdeform.derive_z_relations()}
    ok = ok and entries["z0 z1 = q z1 z0"]["status"] == "confirmed"
    ok = ok and entries["z0* z0 = z0 z0* + (q - q^-1) z1 z1*"]["status"] \
        == "confirmed"
    r2 = entries["z0* z1 = z1 z0*"]
    ok = ok and r2["status"] == "corrected" and r2["lambda"] == "q^-1"
    sphere = entries["z0 z0* + z1 z1* = 1"]
    ok = ok and sphere["status"] == "corrected" \
        and "q^-1" in sphere["corrected_form"]
    assert b.done(ok)
