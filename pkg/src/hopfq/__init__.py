"""Exact-arithmetic verification engine for twisted group algebras on
Z_2^n, the unit-sphere quasigroup they carry, Hopf quasigroup and Hopf
coquasigroup axiomatics, invariant vector fields with so(3)/g2
extraction, and a q-deformed 3-sphere.

Everything is computed over the rationals (or Gaussian rationals, or an
exact Laurent ring in q^(1/2)); every reported verdict is an exact
equality of canonical forms, never a numeric tolerance.
"""

from .grouptables import (CochainTable, GroupVec, cochain_build, gv_add,
                          verify_cochain_identities)
from .quasialgebra import (QuasiElement, qa_associator, qa_inverse, qa_mul,
                           qa_norm, sphere_point)
from .loops import (FiniteLoop, build_cyclic_twist, build_gn, loop_associator,
                    loop_check, nucleus, center, sampled_sphere_checks)
from .hopfquasi import (LinearHopfData, character_action, check_hopf_quasigroup,
                        cross_product, from_loop)
from .coquasi import (SphereRing, SpherePoly, TensorPoly, antipode,
                      check_coassociator, check_coquasigroup,
                      check_moufang_coquasi, coassociator, counit,
                      cross_bounded_check, cross_coquasi, delta, normal_form,
                      phi_star, pipeline)
from .diffcalc import (BracketAlgebra, Calculus, VectorField, check_diffcalc,
                       check_g2, check_malcev, check_mc, g2_extract,
                       structure_function, vf_apply, vf_commutator)
from .qdeform import (CqSU2, GaussRational, LaurentQ, NCAlgebra, build_cqm2,
                      build_cqsu2, check_qhopf, complexify, derive_z_relations)
from .report import Check, Report

__version__ = "0.1.0"
