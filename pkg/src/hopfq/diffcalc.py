"""Covariant differential calculus on the sphere coordinate algebra:
invariant vector fields, structure functions, Maurer-Cartan data, the
Mal'tsev bracket, and the so(3)/g2 extraction.

Conventions (all indices i, j, k nonzero unless stated):

    left fields      d^i   = - sum_a F(a,i) x_{i+a} d/dx_a
    right fields     d^i_R = - sum_a F(i,a) x_{i+a} d/dx_a
    rotation fields  D_ij  = F(i,j) sum_a F(a,i+j) psi(i,j,a) x_{i+j+a} d/dx_a
    double bracket   [[d^i, d^j]] = 2 F(i,j) d^{i+j}  (0 when i = j)
    Yamaguti bracket [x,y,z] = [[x,[[y,z]]]] + [[y,[[z,x]]]] - [[z,[[x,y]]]]

Field coefficients live in the free (unreduced) polynomial ring: every
identity of fields checked here holds at raw coefficient level, which is
stronger than equality modulo the sphere relation; tangency sums are
raw-zero as well.  Structure functions and differential forms live in
the canonical quotient ring, where d^2 = 0 holds modulo the relation.
"""

from __future__ import annotations

from fractions import Fraction

from .coquasi import (SphereRing, SpherePoly, _adapter_for, _el,
                      _dd_right, t_antipode, t_contract, t_delta)
from .report import Report, timed


class Calculus:
    """A pair of rings (raw for fields, canonical for forms) over one
    cochain table, with the field constructors."""

    def __init__(self, n):
        if n < 1:
            raise ValueError("need n >= 1")
        self.n = n
        self.ring = SphereRing(n)          # canonical: forms, c_i^{jk}
        self.raw = SphereRing(n, reduce=False, table=self.ring.table)
        self.table = self.ring.table
        self.ngen = self.ring.ngen
        self.nz = range(1, self.ngen)

    # -- vector fields ----------------------------------------------------

    def field(self, coeffs):
        return VectorField(self, {a: p for a, p in coeffs.items()
                                  if not p.is_zero()})

    def zero_field(self):
        return VectorField(self, {})

    def left_inv_field(self, i):
        if not i:
            raise ValueError("index must be nonzero")
        F, g = self.table.F, self.raw
        return self.field({a: g.poly({g.gen_mono(i ^ a): -F(a, i)})
                           for a in range(self.ngen)})

    def right_inv_field(self, i):
        if not i:
            raise ValueError("index must be nonzero")
        F, g = self.table.F, self.raw
        return self.field({a: g.poly({g.gen_mono(i ^ a): -F(i, a)})
                           for a in range(self.ngen)})

    def d_field(self, i, j):
        if not i or not j:
            raise ValueError("indices must be nonzero")
        T, g = self.table, self.raw
        fij = T.F(i, j)
        return self.field({a: g.poly({g.gen_mono(i ^ j ^ a):
                                      fij * T.F(a, i ^ j) * T.psi(i, j, a)})
                           for a in range(self.ngen)})

    def mal_bracket_field(self, i, j):
        """[[d^i, d^j]] = 2 F(i,j) d^{i+j} as an actual vector field."""
        if i == j:
            return self.zero_field()
        return self.left_inv_field(i ^ j).scale(2 * self.table.F(i, j))

    def mal_bracket_field_right(self, i, j):
        if i == j:
            return self.zero_field()
        return self.right_inv_field(i ^ j).scale(2 * self.table.F(i, j))

    def yamaguti_field(self, i, j, k):
        """[d^i, d^j, d^k] evaluated through the double bracket."""
        F = self.table.F

        def bb2(a, b, c):
            # [[d^a, [[d^b, d^c]]]]
            if b == c or a == (b ^ c):
                return self.zero_field()
            return self.left_inv_field(a ^ b ^ c).scale(
                4 * F(b, c) * F(a, b ^ c))

        return bb2(i, j, k) + bb2(j, k, i) - bb2(k, i, j)


class VectorField:
    """Derivation sum_a p_a d/dx_a with raw polynomial coefficients."""

    __slots__ = ("calc", "coeffs")

    def __init__(self, calc, coeffs):
        self.calc = calc
        self.coeffs = coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for a, p in other.coeffs.items():
            q = out.get(a)
            s = p if q is None else q + p
            if s.is_zero():
                out.pop(a, None)
            else:
                out[a] = s
        return VectorField(self.calc, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        if not k:
            return VectorField(self.calc, {})
        return VectorField(self.calc,
                           {a: p.scale(k) for a, p in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.coeffs == other.coeffs

    def is_zero(self):
        return not self.coeffs

    def apply(self, p):
        """Derivation action on a polynomial in the same (raw) ring."""
        ring = self.calc.raw
        out = ring.zero()
        for a, pa in self.coeffs.items():
            dp = poly_diff(p, a)
            if not dp.is_zero():
                out = out + pa * dp
        return out

    def commutator(self, other):
        out = {}
        for b in set(self.coeffs) | set(other.coeffs):
            s = self.apply(other.coeff(b)) - other.apply(self.coeff(b))
            if not s.is_zero():
                out[b] = s
        return VectorField(self.calc, out)

    def coeff(self, a):
        return self.coeffs.get(a, self.calc.raw.zero())

    def is_tangent(self):
        """sum_a p_a 2 x_a = 0 at raw coefficient level."""
        ring = self.calc.raw
        total = ring.zero()
        for a, p in self.coeffs.items():
            total = total + p * ring.x(a).scale(2)
        return total.is_zero()

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join("(%s) d/dx%d" % (p, a)
                          for a, p in sorted(self.coeffs.items()))

    __repr__ = __str__


def poly_diff(p, a):
    """Partial derivative with respect to x_a (raw or canonical ring)."""
    ring = p.ring
    g = ring.gen_mono(a)
    shift = 4 * a
    out = {}
    for m, c in p.terms.items():
        e = (m >> shift) & 0xF
        if e:
            mm = m - g
            out[mm] = out.get(mm, 0) + e * c
    return SpherePoly(ring, {m: c for m, c in out.items() if c})


def vf_apply(X, p):
    return X.apply(p)


def vf_commutator(X, Y):
    return X.commutator(Y)


# -- structure functions and forms ------------------------------------------------

def structure_function(calc, i, j, k):
    """c_i^{jk} = -F(i,j) F(i+j,k) sum_a phi(a,i,j) phi(a,i+j,k)
    F(a,i+j+k) x_a x_{a+i+j+k}, canonicalized."""
    T, ring = calc.table, calc.ring
    lead = -T.F(i, j) * T.F(i ^ j, k)
    terms = {}
    s = i ^ j ^ k
    for a in range(calc.ngen):
        m = ring.gen_mono(a) + ring.gen_mono(a ^ s)
        c = lead * T.phi(a, i, j) * T.phi(a, i ^ j, k) * T.F(a, s)
        terms[m] = terms.get(m, 0) + c
    return ring.poly(terms)


def structure_function_first_form(calc, i, j, k):
    """The equivalent form -F(j,k) F(i,j+k) sum_a phi(a,i,j+k)
    phi(a+i,j,k) F(a,i+j+k) x_a x_{a+i+j+k} (for j != k)."""
    T, ring = calc.table, calc.ring
    lead = -T.F(j, k) * T.F(i, j ^ k)
    terms = {}
    s = i ^ j ^ k
    for a in range(calc.ngen):
        m = ring.gen_mono(a) + ring.gen_mono(a ^ s)
        c = lead * T.phi(a, i, j ^ k) * T.phi(a ^ i, j, k) * T.F(a, s)
        terms[m] = terms.get(m, 0) + c
    return ring.poly(terms)


class OneForm:
    """sum_i f_i omega_i with canonical polynomial coefficients."""

    def __init__(self, calc, coeffs):
        self.calc = calc
        self.coeffs = {i: p for i, p in coeffs.items() if not p.is_zero()}

    def __add__(self, other):
        out = dict(self.coeffs)
        for i, p in other.coeffs.items():
            s = out.get(i)
            s = p if s is None else s + p
            if s.is_zero():
                out.pop(i, None)
            else:
                out[i] = s
        return OneForm(self.calc, out)

    def __eq__(self, other):
        return isinstance(other, OneForm) and self.coeffs == other.coeffs

    def is_zero(self):
        return not self.coeffs


class TwoForm:
    """sum_{j<k} f_{jk} omega_j ^ omega_k (antisymmetric storage)."""

    def __init__(self, calc, coeffs=None):
        self.calc = calc
        self.coeffs = {}
        if coeffs:
            for (j, k), p in coeffs.items():
                self.accumulate(j, k, p)

    def accumulate(self, j, k, p):
        if j == k or p.is_zero():
            return
        if j > k:
            j, k, p = k, j, -p
        s = self.coeffs.get((j, k))
        s = p if s is None else s + p
        if s.is_zero():
            self.coeffs.pop((j, k), None)
        else:
            self.coeffs[(j, k)] = s

    def __add__(self, other):
        out = TwoForm(self.calc)
        out.coeffs = dict(self.coeffs)
        for (j, k), p in other.coeffs.items():
            out.accumulate(j, k, p)
        return out

    def __eq__(self, other):
        return isinstance(other, TwoForm) and self.coeffs == other.coeffs

    def is_zero(self):
        return not self.coeffs


def d_function(calc, p):
    """Exterior derivative of a canonical polynomial: df = sum df/dx_a dx_a
    with dx_a = sum_i F(i+a,i) x_{i+a} omega_i."""
    ring, T = calc.ring, calc.table
    out = {}
    for a in range(calc.ngen):
        dp = poly_diff(p, a)
        if dp.is_zero():
            continue
        for i in calc.nz:
            term = dp * ring.poly({ring.gen_mono(i ^ a): T.F(i ^ a, i)})
            if term.is_zero():
                continue
            s = out.get(i)
            s = term if s is None else s + term
            out[i] = s
    return OneForm(calc, out)


def d_omega(calc, i, cfun=None):
    """d omega_i = - sum_{j,k} c_i^{jk} omega_j omega_k as a TwoForm."""
    cfun = cfun or (lambda j, k: structure_function(calc, i, j, k))
    out = TwoForm(calc)
    for j in calc.nz:
        for k in calc.nz:
            if j < k:
                # the (j,k) and (k,j) contributions agree; factor 2
                out.accumulate(j, k, cfun(j, k).scale(-2))
    return out


def d_one_form(calc, w):
    """d(sum f_i omega_i) = sum df_i ^ omega_i + f_i d omega_i."""
    out = TwoForm(calc)
    for i, f in w.coeffs.items():
        df = d_function(calc, f)
        for j, gpoly in df.coeffs.items():
            out.accumulate(j, i, gpoly)
        for (j, k), p in d_omega(calc, i).coeffs.items():
            out.accumulate(j, k, p * f)
    return out


def omega_projection(ring, m):
    """omega applied to a canonical monomial: the index i when the
    monomial is x_0^e x_i (single imaginary factor, exponent one), else 0
    (constants, x_0 powers and anything in the ideal square die)."""
    idx = 0
    mm = m >> 4
    a = 1
    while mm:
        e = mm & 0xF
        if e:
            if e > 1 or idx:
                return 0
            idx = a
        mm >>= 4
        a += 1
    return idx


def cobracket(calc, k):
    """Lie cobracket of omega_k via the adjoint coaction a1 S(a22) (x) a21
    followed by the cotangent projection on both legs."""
    ring = calc.ring
    alg = _adapter_for(ring)
    t = _dd_right(alg, _el(alg, ring.gen_mono(k)))
    ad = t_contract(t_antipode(t, 2), [[0, 2], [1]])
    out = {}
    for (m1, m2), c in ad.terms.items():
        i, j = omega_projection(ring, m1), omega_projection(ring, m2)
        if i and j:
            key = (i, j)
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def maurer_cartan_term(calc, i):
    """-(S a1) a211 omega(a212) omega(a22) for a = x_i, as a TwoForm;
    the Maurer-Cartan equation says this equals d omega_i."""
    ring = calc.ring
    alg = _adapter_for(ring)
    t = t_delta(_el(alg, ring.gen_mono(i)), 0)
    t = t_delta(t, 1)            # a1, a21, a22
    t = t_delta(t, 1)            # a1, a211, a212, a22
    t = t_contract(t_antipode(t, 0), [[0, 1], [2], [3]])
    out = TwoForm(calc)
    for (m0, m2, m3), c in t.terms.items():
        p, q = omega_projection(ring, m2), omega_projection(ring, m3)
        if p and q and p != q:
            out.accumulate(p, q, SpherePoly(ring, {m0: -c}))
    return out


# -- abstract Mal'tsev bracket on coefficient vectors ------------------------------

def mal_bracket(T, x, y):
    """[[.,.]] with structure constants 2F(i,j) on sparse coefficient
    dicts over the nonzero labels."""
    out = {}
    for i, xi in x.items():
        for j, yj in y.items():
            if i == j:
                continue
            k = i ^ j
            v = out.get(k, 0) + 2 * T.F(i, j) * xi * yj
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def malcev_jacobian(T, x, y, z):
    return _dict_add(_dict_add(mal_bracket(T, x, mal_bracket(T, y, z)),
                               mal_bracket(T, y, mal_bracket(T, z, x))),
                     mal_bracket(T, z, mal_bracket(T, x, y)))


def _dict_add(a, b, scale=1):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + scale * v
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def check_malcev(n) -> Report:
    """The Mal'tsev identity [[J(x,y,z),x]] = J(x,y,[[x,z]]) for the
    bracket with constants 2F(i,j), on all basis vectors x = e_i and all
    polarized x = e_i + e_{i'}.

    The identity is quadratic in x and linear in y, z, so over the
    rationals basis plus pairwise polarization is a complete proof.
    """
    from .grouptables import cochain_build
    T = cochain_build(n)
    rep = Report("malcev", n)
    nz = range(1, 1 << n)

    def defect(x, y, z):
        J = malcev_jacobian(T, x, y, z)
        lhs = mal_bracket(T, J, x)
        rhs = malcev_jacobian(T, x, y, mal_bracket(T, x, z))
        return _dict_add(lhs, rhs, -1)

    def basis_cases():
        for i in nz:
            for j in nz:
                for k in nz:
                    if defect({i: 1}, {j: 1}, {k: 1}):
                        return False, (i, j, k)
        return True, None

    def polarized_cases():
        for i in nz:
            for i2 in nz:
                if i2 <= i:
                    continue
                x = {i: 1, i2: 1}
                for j in nz:
                    for k in nz:
                        if defect(x, {j: 1}, {k: 1}):
                            return False, (i, i2, j, k)
        return True, None

    timed(rep, "malcev-basis", basis_cases)
    timed(rep, "malcev-polarized", polarized_cases)
    return rep


# -- main verification batteries ---------------------------------------------------

def check_diffcalc(n) -> Report:
    """Field-level identities: tangency, the left-field commutator,
    left/right commutator defect, the rotation-field decomposition and
    explicit form, the cyclic and diagonal relations, and the full
    commutator tables with their scalar identity."""
    if n not in (2, 3):
        raise ValueError("field suite runs at n = 2 or 3")
    calc = Calculus(n)
    T = calc.table
    rep = Report("diffcalc", n)
    nz = list(calc.nz)
    L = {i: calc.left_inv_field(i) for i in nz}
    Rf = {i: calc.right_inv_field(i) for i in nz}
    D = {(i, j): calc.d_field(i, j) for i in nz for j in nz}

    def tangency():
        for i in nz:
            if not L[i].is_tangent():
                return False, ("left", i)
            if not Rf[i].is_tangent():
                return False, ("right", i)
            for j in nz:
                if not D[(i, j)].is_tangent():
                    return False, ("rotation", i, j)
                if not L[i].commutator(L[j]).is_tangent():
                    return False, ("commutator", i, j)
        return True, None

    timed(rep, "tangency", tangency)

    def left_field_kills_norm():
        for i in nz:
            p = calc.raw.poly({2 << (4 * a): 1 for a in range(calc.ngen)})
            if not L[i].apply(p).is_zero():
                return False, (i,)
        return True, None

    timed(rep, "left-field-kills-norm", left_field_kills_norm)

    def left_commutator_formula():
        for i in nz:
            for j in nz:
                if i == j:
                    continue
                want = calc.field({a: calc.raw.poly(
                    {calc.raw.gen_mono(i ^ j ^ a):
                     -2 * T.F(i, j) * T.F(a, i ^ j) * T.phi(a, i, j)})
                    for a in range(calc.ngen)})
                if L[i].commutator(L[j]) != want:
                    return False, (i, j)
        return True, None

    timed(rep, "left-field-commutator", left_commutator_formula)

    def commutator_defect():
        # [d^i,d^j] - [[d^i,d^j]] = -2 [d^i, d^j_R]
        for i in nz:
            for j in nz:
                lhs = L[i].commutator(L[j]) - calc.mal_bracket_field(i, j)
                rhs = L[i].commutator(Rf[j]).scale(-2)
                if lhs != rhs:
                    return False, (i, j)
        return True, None

    timed(rep, "left-right-commutator-defect", commutator_defect)

    def d_field_decomposition():
        # D_ij = -(3/2)[d^i,d^j] + (1/2)[[d^i,d^j]] + [[d^i_R,d^j_R]]
        half = Fraction(1, 2)
        for i in nz:
            for j in nz:
                want = (L[i].commutator(L[j]).scale(-3 * half)
                        + calc.mal_bracket_field(i, j).scale(half)
                        + calc.mal_bracket_field_right(i, j))
                if D[(i, j)] != want:
                    return False, (i, j)
        return True, None

    timed(rep, "d-field-decomposition", d_field_decomposition)

    def d_field_explicit():
        ring = calc.raw
        for i in nz:
            for j in nz:
                if i == j:
                    if not D[(i, j)].is_zero():
                        return False, (i, j)
                    continue
                coeffs = {j: ring.x(i).scale(4), i: ring.x(j).scale(-4)}
                for k in nz:
                    if k in (i, j, i ^ j):
                        continue
                    coeffs[k] = ring.poly(
                        {ring.gen_mono(i ^ j ^ k):
                         -2 * T.F(i, j) * T.F(k, i ^ j)})
                want = calc.field(coeffs)
                if D[(i, j)] != want:
                    return False, (i, j)
        return True, None

    timed(rep, "d-field-explicit-form", d_field_explicit)

    def d_field_remainder():
        # D_ij - [[d^i,d^j]] = 6(x_i d_j - x_j d_i)
        #                      + 2F(i,j)(x_{i+j} d_0 - x_0 d_{i+j})
        ring = calc.raw
        for i in nz:
            for j in nz:
                if i == j:
                    continue
                want = calc.field({
                    j: ring.x(i).scale(6),
                    i: ring.x(j).scale(-6),
                    0: ring.x(i ^ j).scale(2 * T.F(i, j)),
                    i ^ j: ring.x(0).scale(-2 * T.F(i, j)),
                })
                if D[(i, j)] - calc.mal_bracket_field(i, j) != want:
                    return False, (i, j)
        return True, None

    timed(rep, "d-field-rotation-remainder", d_field_remainder)

    def antisymmetry():
        for i in nz:
            for j in nz:
                if D[(i, j)] != D[(j, i)].scale(-1):
                    return False, (i, j)
        return True, None

    timed(rep, "d-fields-antisymmetric", antisymmetry)

    def cyclic_relation():
        # F(i,j) D_{i+j,k} + F(j,k) D_{j+k,i} + F(k,i) D_{k+i,j} = 0
        vac = True
        for i in nz:
            for j in nz:
                for k in nz:
                    if i == j or j == k or i == k:
                        continue
                    if i ^ j ^ k:
                        vac = False
                    s = (D[(i ^ j, k)].scale(T.F(i, j))
                         + D[(j ^ k, i)].scale(T.F(j, k))
                         + D[(k ^ i, j)].scale(T.F(k, i)))
                    if not s.is_zero():
                        return False, (i, j, k)
        return (True, "all distinct triples dependent") if vac else (True, None)

    ok = timed(rep, "d-fields-cyclic-relation", cyclic_relation)
    if ok and n == 2:
        # every distinct triple in Z_2^2 sums to zero, so the relation
        # carries no content at n = 2
        rep.checks[-1].status = "vacuous"

    def diagonal_sum():
        # sum over ordered pairs i+j=k of F(i,j) D_ij; zero at n=3, and
        # proportional to (x_0 d_k - x_k d_0 - d^k) at n=2
        ring = calc.raw
        scale = 16 - (1 << (n + 1))
        for k in nz:
            s = calc.zero_field()
            for i in nz:
                j = i ^ k
                if j == 0:
                    continue
                s = s + D[(i, j)].scale(T.F(i, j))
            want = calc.zero_field()
            if scale:
                want = (calc.field({k: ring.x(0), 0: ring.x(k).scale(-1)})
                        - L[k]).scale(scale)
            if s != want:
                return False, (k,)
        return True, None

    timed(rep, "d-fields-diagonal-sum", diagonal_sum)

    if n == 2:
        def small_rank_collapse():
            for i in nz:
                for j in nz:
                    if i != j and L[i].commutator(L[j]) != \
                            calc.mal_bracket_field(i, j):
                        return False, ("left", i, j)
                    if not L[i].commutator(Rf[j]).is_zero():
                        return False, ("left-right", i, j)
            return True, None
        timed(rep, "left-fields-close", small_rank_collapse)

    def d_partial_commutator():
        # [D_ij, d^k] = F(i,j) F(k,i+j) psi(i,j,k) d^{i+j+k}
        for i in nz:
            for j in nz:
                for k in nz:
                    got = D[(i, j)].commutator(L[k])
                    c = T.F(i, j) * T.F(k, i ^ j) * T.psi(i, j, k)
                    want = L[i ^ j ^ k].scale(c) if c else calc.zero_field()
                    if got != want:
                        return False, (i, j, k)
        return True, None

    timed(rep, "d-partial-commutator", d_partial_commutator)

    def yamaguti_relation():
        # [D_ij, d^k] = -(1/2) [d^i, d^j, d^k]
        half = Fraction(-1, 2)
        for i in nz:
            for j in nz:
                for k in nz:
                    if D[(i, j)].commutator(L[k]) != \
                            calc.yamaguti_field(i, j, k).scale(half):
                        return False, (i, j, k)
        return True, None

    timed(rep, "yamaguti-commutator", yamaguti_relation)

    def d_d_commutator():
        for i in nz:
            for j in nz:
                Dij = D[(i, j)]
                fij = T.F(i, j)
                for k in nz:
                    ck = fij * T.F(k, i ^ j) * T.psi(i, j, k)
                    for l in nz:
                        cl = fij * T.F(l, i ^ j) * T.psi(i, j, l)
                        want = calc.zero_field()
                        if ck:
                            want = want + D[(i ^ j ^ k, l)].scale(ck)
                        if cl:
                            want = want - D[(i ^ j ^ l, k)].scale(cl)
                        if Dij.commutator(D[(k, l)]) != want:
                            return False, (i, j, k, l)
        return True, None

    timed(rep, "d-d-commutator", d_d_commutator)

    def commutator_scalar_identity():
        psi, phi, rho, F = T.psi, T.phi, T.rho, T.F
        for i in nz:
            for j in nz:
                ij = i ^ j
                for k in nz:
                    for l in nz:
                        kl = k ^ l
                        rhs_base = phi(ij, k, l)
                        for a in range(calc.ngen):
                            lhs = phi(a, ij, kl) * (
                                rho(ij, kl) * psi(i, j, kl ^ a) * psi(k, l, a)
                                - psi(k, l, ij ^ a) * psi(i, j, a))
                            rhs = rhs_base * (
                                rho(k, ij) * psi(i, j, k) * psi(ij ^ k, l, a)
                                - rho(k, l) * rho(l, ij) * psi(i, j, l)
                                * psi(ij ^ l, k, a))
                            if lhs != rhs:
                                return False, (i, j, k, l, a)
        return True, None

    timed(rep, "commutator-scalar-identity", commutator_scalar_identity)

    def jacobi_sanity():
        # vector-field commutators always satisfy Jacobi: a strong
        # internal check of the polynomial engine
        fields = [L[i] for i in nz] + [D[(i, j)] for i in nz for j in nz
                                       if i < j]
        probe = fields[:6]
        for X in probe:
            for Y in probe:
                for Z in probe:
                    s = (X.commutator(Y).commutator(Z)
                         + Y.commutator(Z).commutator(X)
                         + Z.commutator(X).commutator(Y))
                    if not s.is_zero():
                        return False, None
        return True, None

    timed(rep, "vector-field-jacobi", jacobi_sanity)
    # every field identity above compared raw coefficient dictionaries, a
    # strictly stronger statement than equality modulo the sphere relation
    rep.record("comparison-level", "pass", {"level": "raw-coefficients"})
    return rep


def check_mc(n) -> Report:
    """Structure functions and the exterior calculus: antisymmetry, the
    counit values, d^2 = 0 on generators, the contraction identity, the
    cobracket, and the Maurer-Cartan equation on generators."""
    if n not in (2, 3):
        raise ValueError("structure-function suite runs at n = 2 or 3")
    calc = Calculus(n)
    T = calc.table
    ring = calc.ring
    rep = Report("structure-functions", n)
    nz = list(calc.nz)
    C = {(i, j, k): structure_function(calc, i, j, k)
         for i in nz for j in nz for k in nz}

    def two_forms_agree():
        for i in nz:
            for j in nz:
                for k in nz:
                    if j != k and C[(i, j, k)] != \
                            structure_function_first_form(calc, i, j, k):
                        return False, (i, j, k)
        return True, None

    timed(rep, "structure-function-forms", two_forms_agree)

    def antisymmetric():
        for i in nz:
            for j in nz:
                for k in nz:
                    c = C[(i, j, k)]
                    if C[(i, k, j)] != -c or C[(j, i, k)] != -c:
                        return False, (i, j, k)
                    if j == k and not c.is_zero():
                        return False, (i, j, k)
        return True, None

    timed(rep, "structure-function-antisymmetry", antisymmetric)

    def counit_values():
        alg = _adapter_for(ring)
        for i in nz:
            for j in nz:
                for k in nz:
                    eps = sum(c * alg.counit(m)
                              for m, c in C[(i, j, k)].terms.items())
                    want = T.F(j, k) if i == (j ^ k) else 0
                    if eps != want:
                        return False, (i, j, k)
        return True, None

    timed(rep, "structure-function-counit", counit_values)

    def contraction():
        want_diag = -((1 << n) - 2)
        for i in nz:
            for j in nz:
                total = ring.zero()
                for l in nz:
                    for k in nz:
                        total = total + C[(l, i, k)] * C[(k, j, l)]
                want = ring.one().scale(want_diag) if i == j else ring.zero()
                if total != want:
                    return False, (i, j)
        return True, None

    timed(rep, "structure-function-contraction", contraction)

    def cobracket_doubling():
        for k in nz:
            got = cobracket(calc, k)
            want = {}
            for i in nz:
                j = i ^ k
                if j and j != i:
                    want[(i, j)] = 2 * T.F(i, j)
            if got != want:
                return False, (k,)
        return True, None

    timed(rep, "cobracket-doubling", cobracket_doubling)

    def maurer_cartan():
        for i in nz:
            lhs = d_omega(calc, i, cfun=lambda j, k, i=i: C[(i, j, k)])
            if lhs != maurer_cartan_term(calc, i):
                return False, (i,)
        return True, None

    timed(rep, "maurer-cartan-equation", maurer_cartan)

    def d_squared():
        for a in range(calc.ngen):
            w = d_function(calc, ring.x(a))
            if not d_one_form(calc, w).is_zero():
                return False, (a,)
        return True, None

    timed(rep, "d-squared-zero", d_squared)
    return rep


# -- so(3) / g2 extraction ----------------------------------------------------------

class BracketAlgebra:
    """Structure constants of a finite-dimensional bracket algebra."""

    def __init__(self, labels, constants):
        self.dim = len(labels)
        self.labels = list(labels)
        self.constants = constants  # constants[p][q] = list of Fractions

    def bracket(self, p, q):
        return self.constants[p][q]

    def antisymmetric(self):
        for p in range(self.dim):
            for q in range(self.dim):
                if any(self.constants[p][q][r] != -self.constants[q][p][r]
                       for r in range(self.dim)):
                    return False
        return True

    def jacobi(self):
        c = self.constants
        d = self.dim
        for p in range(d):
            for q in range(d):
                for r in range(d):
                    for t in range(d):
                        s = sum(c[p][q][m] * c[m][r][t]
                                + c[q][r][m] * c[m][p][t]
                                + c[r][p][m] * c[m][q][t]
                                for m in range(d))
                        if s:
                            return False
        return True

    def to_json(self):
        return {"dim": self.dim,
                "basis": self.labels,
                "c": [[["%d/%d" % (v.numerator, v.denominator)
                        for v in row] for row in plane]
                      for plane in self.constants]}


def _field_vector(calc, X, columns):
    row = []
    for key in columns:
        a, m = key
        row.append(Fraction(X.coeff(a).terms.get(m, 0)))
    return row


def g2_extract(n):
    """Stack the rotation fields D_ij (i < j), compute their exact rank,
    select the first maximal independent subset in index order, and close
    the commutator table over that basis.

    Returns (BracketAlgebra, rank, basis_pairs).
    """
    if n not in (2, 3):
        raise ValueError("extraction runs at n = 2 or 3")
    calc = Calculus(n)
    nz = list(calc.nz)
    pairs = [(i, j) for i in nz for j in nz if i < j]
    fields = {p: calc.d_field(*p) for p in pairs}

    columns = sorted({(a, m) for X in fields.values()
                      for a, p in X.coeffs.items() for m in p.terms})
    rows = {p: _field_vector(calc, fields[p], columns) for p in pairs}

    basis = []
    echelon = []  # list of (pivot_col, row)

    def reduce_row(row):
        row = list(row)
        for pc, er in echelon:
            if row[pc]:
                f = row[pc] / er[pc]
                row = [a - f * b for a, b in zip(row, er)]
        return row

    for p in pairs:
        red = reduce_row(rows[p])
        pivot = next((c for c, v in enumerate(red) if v), None)
        if pivot is not None:
            echelon.append((pivot, red))
            basis.append(p)
    rank = len(basis)

    # reduce [B | I] once so that coordinates of any spanned vector are a
    # single back-substitution against the reduced rows
    ncols = len(columns)
    aug = [list(rows[p]) + [Fraction(int(r2 == r)) for r2 in range(rank)]
           for r, p in enumerate(basis)]
    piv_cols = []
    for r in range(rank):
        pc = next(c for c in range(ncols) if aug[r][c] and c not in piv_cols)
        piv_cols.append(pc)
        for r2 in range(rank):
            if r2 != r and aug[r2][pc]:
                f = aug[r2][pc] / aug[r][pc]
                aug[r2] = [a - f * b for a, b in zip(aug[r2], aug[r])]

    def coordinates(X):
        vec = _field_vector(calc, X, columns)
        combo = [Fraction(0)] * rank
        for r in range(rank):
            pc = piv_cols[r]
            if vec[pc]:
                f = vec[pc] / aug[r][pc]
                vec = [a - f * b for a, b in zip(vec, aug[r][:ncols])]
                combo = [a + f * b for a, b in zip(combo, aug[r][ncols:])]
        if any(vec):
            raise ValueError("field not in the span of the basis")
        return combo

    labels = ["D%d%d" % p for p in basis]
    constants = [[None] * rank for _ in range(rank)]
    for pi, p in enumerate(basis):
        for qi, q in enumerate(basis):
            constants[pi][qi] = coordinates(
                fields[p].commutator(fields[q]))
    return BracketAlgebra(labels, constants), rank, basis


def check_g2(n) -> Report:
    rep = Report("g2", n)
    alg, rank, basis = g2_extract(n)

    want_rank = 14 if n == 3 else 3
    rep.add("rank", rank == want_rank, {"rank": rank, "expected": want_rank})
    timed(rep, "constants-antisymmetric", lambda: (alg.antisymmetric(), None))
    timed(rep, "jacobi-identity", lambda: (alg.jacobi(), None))

    if n == 2:
        idx = {p: r for r, p in enumerate(basis)}

        def dcoord(i, j):
            if i == j:
                return None, 0
            if i < j:
                return idx[(i, j)], 1
            return idx[(j, i)], -1

        def rotation_table(sign):
            # sign=+1: [D_ij, D_kl] = 4(d_jk D_il - d_ik D_jl
            #                           - d_jl D_ik + d_il D_jk),
            # the standard rotation-algebra table (d = Kronecker delta);
            # sign=-1 tests the same table negated
            for (i, j) in basis:
                for (k, l) in basis:
                    want = [Fraction(0)] * alg.dim
                    for (delta, a, b) in (((j == k), i, l), (-(i == k), j, l),
                                          (-(j == l), i, k), ((i == l), j, k)):
                        if delta:
                            pos, sgn = dcoord(a, b)
                            if pos is not None:
                                want[pos] += 4 * sign * delta * sgn
                    got = alg.bracket(idx[(i, j)], idx[(k, l)])
                    if got != want:
                        return False, (i, j, k, l)
            return True, None

        timed(rep, "so3-structure-constants", lambda: rotation_table(1))
        # the same table with every sign flipped must fail; pinning this
        # down excludes the opposite overall-sign convention exactly
        timed(rep, "so3-negated-variant-excluded",
              lambda: (not rotation_table(-1)[0], None))
    return rep
