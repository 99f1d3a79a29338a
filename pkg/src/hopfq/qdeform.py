"""The q-deformed 3-sphere: a quantum-SU(2) presentation driven by a
confluent rewriting system over an exact Laurent ring in q^(1/2), the
mechanical derivation of the z-generator relations under z_0 = d,
z_1 = q^(-1/2) c, and the complexification bridge back to the commutative
sphere algebras.

Generators a, b, c, d with relations

    ba = q ab   ca = q ac   db = q bd   dc = q cd   bc = cb
    da = ad + (q - q^-1) bc          ad = 1 + q^-1 bc

matrix coproduct Delta a = a(x)a + b(x)c (etc.), counit e(a) = e(d) = 1,
e(b) = e(c) = 0, antipode S(a) = d, S(d) = a, S(b) = -q b,
S(c) = -q^-1 c, and star a* = d, d* = a, b* = -q^-1 c, c* = -q b.

The rewrite rules sort letters into the precedence order b < c < a < d
(so the exchange relations are oriented as ab -> q^-1 ba, ac -> q^-1 ca,
cb -> bc, db -> q bd, dc -> q cd, da -> ad + (q - q^-1) bc) and then
eliminate the now-adjacent pair through ad -> 1 + q^-1 bc.  Termination
follows from the measure (#a + #d, inversion count), under which every
rule strictly decreases each monomial it produces, and local confluence
is verified on all critical pairs at construction time.  Canonical words
are b^k c^j a^i d^l with a and d never both present.  (Orienting the
exchange relations the other way, ba -> q ab and so on, leaves words
like "abd" stuck with a non-adjacent a, d pair and fails the critical
pair "bad" -- the constructor check catches exactly that.)
"""

from __future__ import annotations

from fractions import Fraction

from .coquasi import SphereRing, SpherePoly, TensorPoly, _adapter_for, t_delta
from .grouptables import cochain_build
from .report import Report, timed


class LaurentQ:
    """Laurent polynomial in s = q^(1/2) with exact coefficients."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        if isinstance(c, dict):
            self.c = {k: v for k, v in c.items() if v}
        elif c:
            self.c = {0: c}
        else:
            self.c = {}

    @classmethod
    def s_power(cls, k, coeff=1):
        return cls({k: coeff})

    @classmethod
    def q_power(cls, k, coeff=1):
        return cls({2 * k: coeff})

    @staticmethod
    def _coerce(x):
        return x if isinstance(x, LaurentQ) else LaurentQ(x)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return LaurentQ(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __neg__(self):
        return LaurentQ({k: -v for k, v in self.c.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for k1, v1 in self.c.items():
            for k2, v2 in other.c.items():
                k = k1 + k2
                s = out.get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return LaurentQ(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.c == self._coerce(other).c

    def __bool__(self):
        return bool(self.c)

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def at_q1(self):
        return sum(self.c.values())

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c):
            v = self.c[k]
            if k == 0:
                parts.append(str(v))
                continue
            if k % 2 == 0:
                base = "q" if k == 2 else ("q^%d" % (k // 2))
            else:
                base = "q^(%d/2)" % k
            if v == 1:
                parts.append(base)
            elif v == -1:
                parts.append("-" + base)
            else:
                parts.append("%s*%s" % (v, base))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _qone():
    return LaurentQ(1)


class NCAlgebra:
    """Noncommutative polynomials over LaurentQ with a fixed confluent
    rewriting system.  Words are strings; polynomials are dicts
    word -> LaurentQ."""

    def __init__(self, gens, rules):
        self.gens = gens
        self.rules = rules  # two-letter word -> {word: LaurentQ}
        self._nf = {}

    def normal_form_word(self, w):
        got = self._nf.get(w)
        if got is not None:
            return got
        for p in range(len(w) - 1):
            rhs = self.rules.get(w[p:p + 2])
            if rhs is not None:
                pre, suf = w[:p], w[p + 2:]
                out = {}
                for t, c in rhs.items():
                    for t2, c2 in self.normal_form_word(pre + t + suf).items():
                        s = out.get(t2)
                        s = c * c2 if s is None else s + c * c2
                        if s:
                            out[t2] = s
                        elif t2 in out:
                            del out[t2]
                self._nf[w] = out
                return out
        out = {w: _qone()}
        self._nf[w] = out
        return out

    def nf(self, poly):
        out = {}
        for w, c in poly.items():
            for t, c2 in self.normal_form_word(w).items():
                s = out.get(t)
                s = c * c2 if s is None else s + c * c2
                if s:
                    out[t] = s
                elif t in out:
                    del out[t]
        return out

    def mul(self, p1, p2):
        out = {}
        for w1, c1 in p1.items():
            for w2, c2 in p2.items():
                for t, c3 in self.normal_form_word(w1 + w2).items():
                    c = c1 * c2 * c3
                    s = out.get(t)
                    s = c if s is None else s + c
                    if s:
                        out[t] = s
                    elif t in out:
                        del out[t]
        return out

    def sub(self, p1, p2):
        out = dict(p1)
        for w, c in p2.items():
            s = out.get(w)
            s = -c if s is None else s - c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return out

    def critical_pairs(self):
        """All length-3 overlaps of rule left-hand sides, with both
        reductions; returns the list of unresolved ones."""
        bad = []
        lhss = list(self.rules)
        for u in lhss:
            for v in lhss:
                if u[1] != v[0]:
                    continue
                w = u + v[1]
                # reduce the left factor first vs the right factor first
                left = {}
                for t, c in self.rules[u].items():
                    for t2, c2 in self.normal_form_word(t + v[1]).items():
                        s = left.get(t2, LaurentQ()) + c * c2
                        if s:
                            left[t2] = s
                        elif t2 in left:
                            del left[t2]
                right = {}
                for t, c in self.rules[v].items():
                    for t2, c2 in self.normal_form_word(u[0] + t).items():
                        s = right.get(t2, LaurentQ()) + c * c2
                        if s:
                            right[t2] = s
                        elif t2 in right:
                            del right[t2]
                if left != right:
                    bad.append((w, left, right))
        return bad


def poly_str(p):
    if not p:
        return "0"
    parts = []
    for w in sorted(p, key=lambda w: (len(w), w)):
        c = p[w]
        word = w if w else "1"
        parts.append("(%s)%s" % (c, "" if not w else "*" + word))
    return " + ".join(parts)


def _q(k, coeff=1):
    return LaurentQ.q_power(k, coeff)


def quantum_matrix_rules():
    """The six quadratic exchange relations of the 2x2 quantum matrices."""
    return {
        "ab": {"ba": _q(-1)},
        "ac": {"ca": _q(-1)},
        "db": {"bd": _q(1)},
        "dc": {"cd": _q(1)},
        "cb": {"bc": _qone()},
        "da": {"ad": _qone(), "bc": _q(1) - _q(-1)},
    }


def build_cqm2() -> NCAlgebra:
    return NCAlgebra("abcd", quantum_matrix_rules())


class CqSU2:
    """The quantum group presentation: quantum matrices plus the unit
    determinant relation, with matrix coproduct, counit, antipode and
    star structure."""

    def __init__(self):
        rules = quantum_matrix_rules()
        rules["ad"] = {"": _qone(), "bc": _q(-1)}
        self.alg = NCAlgebra("abcd", rules)
        bad = self.alg.critical_pairs()
        if bad:
            raise ValueError("rewriting system is not confluent: %r"
                             % (bad[0][0],))
        one = _qone()
        self.delta_gen = {
            "a": {("a", "a"): one, ("b", "c"): one},
            "b": {("a", "b"): one, ("b", "d"): one},
            "c": {("c", "a"): one, ("d", "c"): one},
            "d": {("c", "b"): one, ("d", "d"): one},
        }
        self.counit_gen = {"a": one, "b": LaurentQ(), "c": LaurentQ(),
                           "d": one}
        self.antipode_gen = {"a": {"d": one}, "d": {"a": one},
                             "b": {"b": _q(1, -1)}, "c": {"c": _q(-1, -1)}}
        self.star_gen = {"a": {"d": one}, "d": {"a": one},
                         "b": {"c": _q(-1, -1)}, "c": {"b": _q(1, -1)}}

    # -- structure maps on polynomials --------------------------------------

    def delta(self, poly):
        """Algebra-map extension of the matrix coproduct; tensor slots are
        kept in normal form."""
        alg = self.alg
        out = {}
        for w, c in poly.items():
            t = {("", ""): c}
            for ch in w:
                nxt = {}
                for (u1, u2), cu in t.items():
                    for (v1, v2), cv in self.delta_gen[ch].items():
                        for t1, c1 in alg.normal_form_word(u1 + v1).items():
                            for t2, c2 in alg.normal_form_word(u2 + v2).items():
                                key = (t1, t2)
                                s = nxt.get(key, LaurentQ()) \
                                    + cu * cv * c1 * c2
                                if s:
                                    nxt[key] = s
                                elif key in nxt:
                                    del nxt[key]
                t = nxt
            for key, cc in t.items():
                s = out.get(key, LaurentQ()) + cc
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return out

    def counit(self, poly):
        total = LaurentQ()
        for w, c in poly.items():
            v = c
            for ch in w:
                v = v * self.counit_gen[ch]
            total = total + v
        return total

    def antipode(self, poly):
        alg = self.alg
        out = {}
        for w, c in poly.items():
            t = {"": c}
            for ch in reversed(w):
                nxt = {}
                for u, cu in t.items():
                    for v, cv in self.antipode_gen[ch].items():
                        for t2, c2 in alg.normal_form_word(u + v).items():
                            s = nxt.get(t2, LaurentQ()) + cu * cv * c2
                            if s:
                                nxt[t2] = s
                            elif t2 in nxt:
                                del nxt[t2]
                t = nxt
            for t2, cc in t.items():
                s = out.get(t2, LaurentQ()) + cc
                if s:
                    out[t2] = s
                elif t2 in out:
                    del out[t2]
        return out

    def star(self, poly):
        """Antilinear antimultiplicative involution; q is real so the
        coefficient bar is the identity."""
        alg = self.alg
        out = {}
        for w, c in poly.items():
            t = {"": c}
            for ch in reversed(w):
                nxt = {}
                for u, cu in t.items():
                    for v, cv in self.star_gen[ch].items():
                        for t2, c2 in alg.normal_form_word(u + v).items():
                            s = nxt.get(t2, LaurentQ()) + cu * cv * c2
                            if s:
                                nxt[t2] = s
                            elif t2 in nxt:
                                del nxt[t2]
                t = nxt
            for t2, cc in t.items():
                s = out.get(t2, LaurentQ()) + cc
                if s:
                    out[t2] = s
                elif t2 in out:
                    del out[t2]
        return out

    def relations(self):
        """The defining relations as (label, lhs poly, rhs poly)."""
        one = _qone()
        rel = []
        for lhs, rhs in self.alg.rules.items():
            rel.append((lhs, {lhs: one}, dict(rhs)))
        return rel


def build_cqsu2() -> CqSU2:
    return CqSU2()


# -- z generators --------------------------------------------------------------

def z_generators():
    """z_0 = d, z_1 = q^(-1/2) c, z_0* = a, z_1* = -q^(1/2) b."""
    return {
        "z0": {"d": _qone()},
        "z1": {"c": LaurentQ.s_power(-1)},
        "z0*": {"a": _qone()},
        "z1*": {"b": LaurentQ.s_power(1, -1)},
    }


def _proportionality(p1, p2):
    """A monomial lambda with p1 = lambda p2, if one exists."""
    if not p1 or not p2 or set(p1) != set(p2):
        return None
    lam = None
    for w, c in p1.items():
        d = p2[w]
        if len(c.c) != 1 or len(d.c) != 1:
            return None
        (k1, v1), = c.c.items()
        (k2, v2), = d.c.items()
        cand = LaurentQ({k1 - k2: Fraction(v1) / Fraction(v2)})
        if lam is None:
            lam = cand
        elif lam != cand:
            return None
    return lam


def derive_z_relations(H=None):
    """Normal-form every candidate z-relation and compare against the
    undeformed reference forms; entries carry status confirmed (holds
    verbatim), corrected (holds with a q-factor) or derived."""
    H = H or build_cqsu2()
    alg = H.alg
    z = z_generators()
    out = []

    def resid(p):
        return alg.nf(p)

    pairs = [("z0", "z1"), ("z0*", "z1"), ("z0", "z1*"), ("z0*", "z1*"),
             ("z1", "z1*")]
    reference = {
        ("z0", "z1"): ("z0 z1 = q z1 z0", _q(1)),
        ("z0*", "z1"): ("z0* z1 = z1 z0*", _qone()),
    }
    for x, y in pairs:
        xy = alg.mul(z[x], z[y])
        yx = alg.mul(z[y], z[x])
        lam = _proportionality(xy, yx)
        entry = {"relation": "%s %s = lambda %s %s" % (x, y, y, x),
                 "lambda": str(lam) if lam is not None else None}
        if (x, y) in reference:
            label, want = reference[(x, y)]
            residual = alg.sub(xy, {w: want * c for w, c in yx.items()})
            entry["relation"] = label
            entry["status"] = "confirmed" if not residual else "corrected"
            entry["normal_form_residual"] = poly_str(residual)
            if residual and lam is not None:
                entry["corrected_form"] = "%s %s = (%s) %s %s" \
                    % (x, y, lam, y, x)
        else:
            entry["status"] = "derived"
            entry["normal_form_residual"] = "0" if lam is not None else None
        out.append(entry)

    # z0* z0 = z0 z0* + (q - q^-1) z1 z1*
    lhs = alg.mul(z["z0*"], z["z0"])
    rhs = alg.mul(z["z0"], z["z0*"])
    corr = {w: (_q(1) - _q(-1)) * c
            for w, c in alg.mul(z["z1"], z["z1*"]).items()}
    residual = alg.sub(lhs, alg.nf({**{w: c for w, c in rhs.items()}}))
    residual = alg.sub(residual, corr)
    residual = alg.nf(residual)
    out.append({"relation": "z0* z0 = z0 z0* + (q - q^-1) z1 z1*",
                "status": "confirmed" if not residual else "corrected",
                "normal_form_residual": poly_str(residual)})

    # sphere relation: the naive sum z_a z_a* = 1 needs a q-factor; solve
    # for mu with z0* z0 + mu z1 z1* = 1
    naive_sphere = alg.sub(
        alg.sub(alg.mul(z["z0"], z["z0*"]),
                {w: -c for w, c in alg.mul(z["z1"], z["z1*"]).items()}),
        {"": _qone()})
    naive_sphere = alg.nf(naive_sphere)
    r0 = alg.sub(alg.mul(z["z0*"], z["z0"]), {"": _qone()})
    b = alg.mul(z["z1"], z["z1*"])
    mu = _proportionality(alg.nf(r0), {w: -c for w, c in b.items()})
    entry = {"relation": "z0 z0* + z1 z1* = 1",
             "status": "confirmed" if not naive_sphere else "corrected",
             "normal_form_residual": poly_str(naive_sphere)}
    if naive_sphere and mu is not None:
        entry["corrected_form"] = "z0* z0 + (%s) z1 z1* = 1" % mu
        check = alg.nf(alg.sub(
            r0, {w: -(mu * c) for w, c in b.items()}))
        entry["corrected_residual"] = poly_str(check)
    out.append(entry)
    return out


def check_qhopf() -> Report:
    rep = Report("quantum-su2", None)
    H = build_cqsu2()
    alg = H.alg

    timed(rep, "rewriting-confluent",
          lambda: (not alg.critical_pairs(), None))

    def qm_confluent():
        qm = build_cqm2()
        return not qm.critical_pairs(), None

    timed(rep, "quantum-matrices-confluent", qm_confluent)

    def determinant_central():
        # in the quantum matrices (before setting it to 1)
        qm = build_cqm2()
        det = {"ad": _qone(), "bc": _q(-1, -1)}
        for g in "abcd":
            lhs = qm.mul(det, {g: _qone()})
            rhs = qm.mul({g: _qone()}, det)
            if qm.sub(lhs, rhs):
                return False, (g,)
        return True, None

    timed(rep, "determinant-central", determinant_central)

    def delta_respects_relations():
        for label, lhs, rhs in H.relations():
            d = H.delta(lhs)
            for key, c in H.delta(rhs).items():
                s = d.get(key, LaurentQ()) - c
                if s:
                    d[key] = s
                elif key in d:
                    del d[key]
            if d:
                return False, (label,)
        return True, None

    timed(rep, "coproduct-respects-relations", delta_respects_relations)

    def counit_respects_relations():
        for label, lhs, rhs in H.relations():
            if H.counit(lhs) != H.counit(rhs):
                return False, (label,)
        return True, None

    timed(rep, "counit-respects-relations", counit_respects_relations)

    def antipode_respects_relations():
        for label, lhs, rhs in H.relations():
            if alg.sub(H.antipode(lhs), H.antipode(rhs)):
                return False, (label,)
        return True, None

    timed(rep, "antipode-respects-relations", antipode_respects_relations)

    def star_respects_relations():
        for label, lhs, rhs in H.relations():
            if alg.sub(H.star(lhs), H.star(rhs)):
                return False, (label,)
        return True, None

    timed(rep, "star-respects-relations", star_respects_relations)

    def coassociative():
        for g in "abcd":
            d = H.delta({g: _qone()})
            lhs = {}
            rhs = {}
            for (u, v), c in d.items():
                for (u1, u2), c2 in H.delta({u: _qone()}).items():
                    key = (u1, u2, v)
                    lhs[key] = lhs.get(key, LaurentQ()) + c * c2
                for (v1, v2), c2 in H.delta({v: _qone()}).items():
                    key = (u, v1, v2)
                    rhs[key] = rhs.get(key, LaurentQ()) + c * c2
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                return False, (g,)
        return True, None

    timed(rep, "coassociative-on-generators", coassociative)

    def antipode_laws():
        for g in "abcd":
            left = {}
            right = {}
            for (u, v), c in H.delta({g: _qone()}).items():
                for t, c2 in alg.mul(H.antipode({u: _qone()}),
                                     {v: _qone()}).items():
                    s = left.get(t, LaurentQ()) + c * c2
                    if s:
                        left[t] = s
                    elif t in left:
                        del left[t]
                for t, c2 in alg.mul({u: _qone()},
                                     H.antipode({v: _qone()})).items():
                    s = right.get(t, LaurentQ()) + c * c2
                    if s:
                        right[t] = s
                    elif t in right:
                        del right[t]
            want = {"": H.counit_gen[g]} if H.counit_gen[g] else {}
            if left != want or right != want:
                return False, (g,)
        return True, None

    timed(rep, "antipode-laws", antipode_laws)

    def star_involutive():
        for g in "abcd":
            if alg.sub(H.star(H.star({g: _qone()})), {g: _qone()}):
                return False, (g,)
        return True, None

    timed(rep, "star-involutive", star_involutive)

    def star_coproduct():
        # Delta(x*) = (* (x) *) Delta(x)
        for g in "abcd":
            lhs = H.delta(H.star({g: _qone()}))
            rhs = {}
            for (u, v), c in H.delta({g: _qone()}).items():
                for u2, cu in H.star({u: _qone()}).items():
                    for v2, cv in H.star({v: _qone()}).items():
                        key = (u2, v2)
                        s = rhs.get(key, LaurentQ()) + c * cu * cv
                        if s:
                            rhs[key] = s
                        elif key in rhs:
                            del rhs[key]
            if lhs != rhs:
                return False, (g,)
        return True, None

    timed(rep, "star-coproduct-compatible", star_coproduct)

    z = z_generators()

    def z_coproducts():
        # Delta z0 = z0 (x) z0 - z1 (x) z1*,  Delta z1 = z0 (x) z1 + z1 (x) z0*
        want0 = _z_tensor(H, [("z0", "z0", _qone()),
                              ("z1", "z1*", LaurentQ(-1))])
        want1 = _z_tensor(H, [("z0", "z1", _qone()),
                              ("z1", "z0*", _qone())])
        if H.delta(z["z0"]) != want0:
            return False, ("z0",)
        if H.delta(z["z1"]) != want1:
            return False, ("z1",)
        return True, None

    timed(rep, "z-coproducts", z_coproducts)

    def z_antipodes():
        if alg.sub(H.antipode(z["z0"]), z["z0*"]):
            return False, ("z0",)
        want = {w: _q(-1, -1) * c for w, c in z["z1"].items()}
        if alg.sub(H.antipode(z["z1"]), want):
            return False, ("z1",)
        return True, None

    timed(rep, "z-antipodes", z_antipodes)

    def z_relation_statuses():
        entries = derive_z_relations(H)
        by = {e["relation"]: e for e in entries}
        if by["z0 z1 = q z1 z0"]["status"] != "confirmed":
            return False, ("relation-1",)
        if by["z0* z1 = z1 z0*"]["status"] != "corrected":
            return False, ("relation-2",)
        if by["z0* z0 = z0 z0* + (q - q^-1) z1 z1*"]["status"] != "confirmed":
            return False, ("relation-3",)
        if by["z0 z0* + z1 z1* = 1"]["status"] != "corrected":
            return False, ("relation-4",)
        lam = by["z0* z1 = z1 z0*"].get("lambda")
        mu = by["z0 z0* + z1 z1* = 1"].get("corrected_form", "")
        return (lam == "q^-1" and "q^-1" in mu), {"lambda": lam, "mu": mu}

    timed(rep, "z-relation-statuses", z_relation_statuses)

    def q1_specialization():
        # relations commute at q = 1 and the z-coproducts/antipodes agree
        # with the commutative complexified model
        for x in ("z0", "z1", "z0*", "z1*"):
            for y in ("z0", "z1", "z0*", "z1*"):
                comm = alg.sub(alg.mul(z[x], z[y]), alg.mul(z[y], z[x]))
                for w, c in comm.items():
                    if c.at_q1():
                        return False, (x, y, w)
        # S z1 = -q^-1 z1 -> -z1 at q = 1, matching the commutative S
        got = H.antipode(z["z1"])
        for w, c in alg.sub(got, {ww: LaurentQ(-1) * cc
                                  for ww, cc in z["z1"].items()}).items():
            if c.at_q1():
                return False, ("antipode", w)
        return True, None

    timed(rep, "q1-specialization", q1_specialization)
    return rep


def _z_tensor(H, terms):
    """Expand symbolic z-tensor terms into normal-formed word tensors."""
    z = z_generators()
    alg = H.alg
    out = {}
    for x, y, coeff in terms:
        for w1, c1 in z[x].items():
            for w2, c2 in z[y].items():
                for t1, d1 in alg.normal_form_word(w1).items():
                    for t2, d2 in alg.normal_form_word(w2).items():
                        key = (t1, t2)
                        s = out.get(key, LaurentQ()) + coeff * c1 * c2 * d1 * d2
                        if s:
                            out[key] = s
                        elif key in out:
                            del out[key]
    return out


# -- complexification of the commutative spheres -------------------------------

class GaussRational:
    """Exact complex rational a + i b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(x):
        return x if isinstance(x, GaussRational) else GaussRational(x)

    def __add__(self, other):
        other = self._coerce(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce(other)
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conj(self):
        return GaussRational(self.re, -self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        return self.re == other.re and self.im == other.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "%s*i" % self.im
        return "%s%+s*i" % (self.re, self.im)

    __repr__ = __str__


I = GaussRational(0, 1)


def complex_z(ring, a, conj=False):
    """z_a = x_{a0} + i x_{a1} over Gaussian rationals (a0 = bit 0 clear)."""
    im = I.conj() if conj else I
    lo = ring.gen_mono(2 * a)
    hi = ring.gen_mono(2 * a + 1)
    return SpherePoly(ring, {lo: GaussRational(1), hi: im})


def _tensor2(alg, p, q):
    out = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            key = (m1, m2)
            s = out.get(key, GaussRational()) + c1 * c2
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return TensorPoly(alg, 2, out)


def complexify(n) -> Report:
    """Verify the complex-generator form of the sphere coproduct:

        Delta z_a = sum over b+c=a of F'(b,c) z_b^[R'(b,c)] (x) z_c^[F'(b,b)]

    with F', R' the sign tables one level down, exponent +1 meaning z and
    -1 meaning z*; plus the complex sphere relation and antipodes.
    """
    if not (1 <= n <= 3):
        raise ValueError("complexification runs at 1 <= n <= 3")
    rep = Report("complexify", n)
    ring = SphereRing(n)
    alg = _adapter_for(ring)
    Tlow = cochain_build(n - 1)
    half = 1 << (n - 1)

    def true_delta(a):
        lo = t_delta(TensorPoly.element(alg, {ring.gen_mono(2 * a):
                                              GaussRational(1)}), 0)
        hi = t_delta(TensorPoly.element(alg, {ring.gen_mono(2 * a + 1): I}), 0)
        return lo + hi

    def formula_delta(a):
        total = TensorPoly(alg, 2, {})
        for b in range(half):
            c = a ^ b
            left = complex_z(ring, b, conj=Tlow.rho(b, c) < 0)
            right = complex_z(ring, c, conj=Tlow.F(b, b) < 0)
            total = total + _tensor2(alg, left, right).scale(
                GaussRational(Tlow.F(b, c)))
        return total

    def closed_form():
        for a in range(half):
            if true_delta(a) != formula_delta(a):
                return False, (a,)
        return True, None

    timed(rep, "z-coproduct-closed-form", closed_form)

    def sphere_relation():
        total = ring.zero()
        for a in range(half):
            total = total + complex_z(ring, a) * complex_z(ring, a, conj=True)
        return (total == ring.one().scale(GaussRational(1))
                or total == ring.one()), None

    timed(rep, "complex-sphere-relation", sphere_relation)

    def antipodes():
        from .coquasi import antipode
        for a in range(half):
            got = antipode(complex_z(ring, a))
            want = complex_z(ring, a, conj=True) if a == 0 \
                else complex_z(ring, a).scale(-1)
            if got != want:
                return False, (a,)
        return True, None

    timed(rep, "z-antipodes", antipodes)

    if n == 2:
        def matrix_coproducts():
            # Delta z0 = z0 (x) z0 - z1 (x) z1*; Delta z1 = z0 (x) z1 + z1 (x) z0*
            z0 = complex_z(ring, 0)
            z1 = complex_z(ring, 1)
            z0s = complex_z(ring, 0, conj=True)
            z1s = complex_z(ring, 1, conj=True)
            want0 = _tensor2(alg, z0, z0) - _tensor2(alg, z1, z1s)
            want1 = _tensor2(alg, z0, z1) + _tensor2(alg, z1, z0s)
            if true_delta(0) != want0:
                return False, (0,)
            if true_delta(1) != want1:
                return False, (1,)
            return True, None

        timed(rep, "s3-matrix-coproducts", matrix_coproducts)

    if n == 3:
        def epsilon_pattern():
            # Delta z_i = z_i (x) z0* + z0 (x) z_i
            #             + sum over j+k=i, j,k nonzero of eps_ijk zj* (x) zk*
            # where eps_ijk = F'(j,k); a diagonal variant repeating the
            # first index (zj* (x) zj*) is excluded mechanically
            z0 = complex_z(ring, 0)
            z0s = complex_z(ring, 0, conj=True)
            for i in range(1, half):
                zi = complex_z(ring, i)
                want = (_tensor2(alg, zi, z0s) + _tensor2(alg, z0, zi))
                diag = (_tensor2(alg, zi, z0s) + _tensor2(alg, z0, zi))
                for j in range(1, half):
                    k = i ^ j
                    if not k or j == k:
                        continue
                    zjs = complex_z(ring, j, conj=True)
                    zks = complex_z(ring, k, conj=True)
                    f = GaussRational(Tlow.F(j, k))
                    want = want + _tensor2(alg, zjs, zks).scale(f)
                    diag = diag + _tensor2(alg, zjs, zjs).scale(f)
                if true_delta(i) != want:
                    return False, ("pattern", i)
                if true_delta(i) == diag:
                    return False, ("repeated-index-variant-matched", i)
            return True, {"computed-pattern": "zj* (x) zk*",
                          "diagonal-variant": "rejected"}

        timed(rep, "s7-epsilon-pattern", epsilon_pattern)

        def delta_z0_closed_form():
            want = _tensor2(alg, complex_z(ring, 0), complex_z(ring, 0))
            for i in range(1, half):
                want = want - _tensor2(alg, complex_z(ring, i),
                                       complex_z(ring, i, conj=True))
            return true_delta(0) == want, None

        timed(rep, "s7-delta-z0-closed-form", delta_z0_closed_form)
    return rep
