"""Finite inverse-property quasigroups as multiplication tables.

Houses the sign loop {+-e_a} attached to a cochain table (order 2^{n+1},
the Moufang loop of the octonions at n = 3), the general cyclic twist
C x Z_2^n built from any unital 2-cochain, exhaustive checkers for the
inverse property / flexibility / alternativity / the three Moufang laws,
the multiplicative associator phi(u,v,w) = ((uv)w)((w^-1 v^-1) u^-1) with
its nucleus and centre machinery, and exact sampled checks on the unit
sphere inside k_F(Z_2^n).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .quasialgebra import QuasiElement, qa_mul, sphere_point
from .report import Report, timed


def gn_index(size, sign, bits):
    """Index of the sign-loop element (sign, e_bits)."""
    return (0 if sign > 0 else 1) * size + bits


def gn_element(size, index):
    """(sign, bits) of a sign-loop element index."""
    si, bits = divmod(index, size)
    return (1 if si == 0 else -1), bits


class FiniteLoop:
    """Closed multiplication table with a two-sided identity.

    `table[i][j]` is the index of the product of elements i and j.
    Immutable by convention after construction.
    """

    def __init__(self, labels, table, identity=0):
        self.labels = list(labels)
        self.order = len(self.labels)
        self.table = [list(row) for row in table]
        self.identity = identity
        self._inv = None

    def mul(self, i, j):
        return self.table[i][j]

    def inverses(self):
        """Per-element unique two-sided inverse, or None where absent."""
        if self._inv is None:
            e = self.identity
            inv = []
            for i in range(self.order):
                cands = [j for j in range(self.order)
                         if self.table[i][j] == e and self.table[j][i] == e]
                inv.append(cands[0] if len(cands) == 1 else None)
            self._inv = inv
        return self._inv

    def inv(self, i):
        v = self.inverses()[i]
        if v is None:
            raise ValueError("element %r has no unique two-sided inverse"
                             % (self.labels[i],))
        return v

    def csv(self):
        lines = ["," + ",".join(self.labels)]
        for i in range(self.order):
            lines.append(self.labels[i] + ","
                         + ",".join(self.labels[self.table[i][j]]
                                    for j in range(self.order)))
        return "\n".join(lines)


def build_gn(T) -> FiniteLoop:
    """The sign loop {+-e_a} with product (s,a)(t,b) = (s t F(a,b), a+b).

    Element index = (0 for +, 1 for -) * 2^n + a; order 2^{n+1}.
    """
    size = T.size
    labels = []
    for s in (1, -1):
        for a in range(size):
            labels.append(("+e" if s > 0 else "-e") + format(a, "0%db" % T.n))
    table = [[0] * (2 * size) for _ in range(2 * size)]
    for s in (1, -1):
        for a in range(size):
            i = gn_index(size, s, a)
            for t in (1, -1):
                for b in range(size):
                    j = gn_index(size, t, b)
                    table[i][j] = gn_index(size, s * t * T.F(a, b), a ^ b)
    return FiniteLoop(labels, table, identity=0)


def build_cyclic_twist(m, T) -> FiniteLoop:
    """The twist C x Z_2^n for C = Z_m cyclic, product (l,a)(k,b) = (l+k+f(a,b), a+b).

    The sign F(a,b) embeds into Z_m as f = 0 or m/2, so m must be even
    whenever F takes the value -1.  m = 2 recovers the sign loop up to
    relabelling.
    """
    if m < 2:
        raise ValueError("cyclic order must be >= 2")
    size = T.size
    has_minus = any(T.F(a, b) < 0 for a in range(size) for b in range(size))
    if has_minus and m % 2:
        raise ValueError("cochain takes value -1: cyclic order must be even")
    half = m // 2
    labels = ["w%d*e%s" % (l, format(a, "0%db" % max(T.n, 1)))
              for l in range(m) for a in range(size)]
    table = [[0] * (m * size) for _ in range(m * size)]
    for l in range(m):
        for a in range(size):
            i = l * size + a
            for k in range(m):
                for b in range(size):
                    f = 0 if T.F(a, b) > 0 else half
                    table[i][k * size + b] = ((l + k + f) % m) * size + (a ^ b)
    return FiniteLoop(labels, table, identity=0)


# -- exhaustive loop checkers ----------------------------------------------------

def _translations_bijective(L):
    full = set(range(L.order))
    for i in range(L.order):
        if set(L.table[i]) != full:
            return False, (L.labels[i], "row")
        if {L.table[j][i] for j in range(L.order)} != full:
            return False, (L.labels[i], "column")
    return True, None


def _identity_trivial(L):
    e = L.identity
    for i in range(L.order):
        if L.table[e][i] != i or L.table[i][e] != i:
            return False, (L.labels[i],)
    return True, None


def _inverses_unique(L):
    e = L.identity
    for i in range(L.order):
        cands = [j for j in range(L.order)
                 if L.table[i][j] == e and L.table[j][i] == e]
        if len(cands) != 1:
            return False, (L.labels[i], len(cands))
    return True, None


def _ip_left(L):
    inv = L.inverses()
    t = L.table
    for u in range(L.order):
        iu = inv[u]
        if iu is None:
            return False, (L.labels[u], "no inverse")
        for v in range(L.order):
            if t[iu][t[u][v]] != v:
                return False, (L.labels[u], L.labels[v])
    return True, None


def _ip_right(L):
    inv = L.inverses()
    t = L.table
    for u in range(L.order):
        iu = inv[u]
        if iu is None:
            return False, (L.labels[u], "no inverse")
        for v in range(L.order):
            if t[t[v][u]][iu] != v:
                return False, (L.labels[u], L.labels[v])
    return True, None


def _inverse_involutive(L):
    inv = L.inverses()
    for u in range(L.order):
        if inv[u] is None or inv[inv[u]] != u:
            return False, (L.labels[u],)
    return True, None


def _inverse_antiautomorphism(L):
    inv = L.inverses()
    t = L.table
    for u in range(L.order):
        for v in range(L.order):
            if inv[t[u][v]] != t[inv[v]][inv[u]]:
                return False, (L.labels[u], L.labels[v])
    return True, None


def _flexible(L):
    t = L.table
    for u in range(L.order):
        for v in range(L.order):
            if t[u][t[v][u]] != t[t[u][v]][u]:
                return False, (L.labels[u], L.labels[v])
    return True, None


def _left_alternative(L):
    t = L.table
    for u in range(L.order):
        for v in range(L.order):
            if t[u][t[u][v]] != t[t[u][u]][v]:
                return False, (L.labels[u], L.labels[v])
    return True, None


def _right_alternative(L):
    t = L.table
    for u in range(L.order):
        for v in range(L.order):
            if t[t[u][v]][v] != t[u][t[v][v]]:
                return False, (L.labels[u], L.labels[v])
    return True, None


def _moufang1(L):
    t = L.table
    for u in range(L.order):
        for v in range(L.order):
            uv_u = t[t[u][v]][u]
            for w in range(L.order):
                if t[u][t[v][t[u][w]]] != t[uv_u][w]:
                    return False, (L.labels[u], L.labels[v], L.labels[w])
    return True, None


def _moufang2(L):
    t = L.table
    for u in range(L.order):
        for v in range(L.order):
            for w in range(L.order):
                if t[t[t[u][v]][w]][v] != t[u][t[v][t[w][v]]]:
                    return False, (L.labels[u], L.labels[v], L.labels[w])
    return True, None


def _moufang3(L):
    t = L.table
    for u in range(L.order):
        for v in range(L.order):
            for w in range(L.order):
                if t[t[u][v]][t[w][u]] != t[t[u][t[v][w]]][u]:
                    return False, (L.labels[u], L.labels[v], L.labels[w])
    return True, None


def _flexible_conjugation(L):
    # on flexible loops: u (v u^-1) = (u v) u^-1
    inv = L.inverses()
    t = L.table
    for u in range(L.order):
        iu = inv[u]
        if iu is None:
            return False, (L.labels[u], "no inverse")
        for v in range(L.order):
            if t[u][t[v][iu]] != t[t[u][v]][iu]:
                return False, (L.labels[u], L.labels[v])
    return True, None


def is_associative(L):
    t = L.table
    for u in range(L.order):
        for v in range(L.order):
            uv = t[u][v]
            for w in range(L.order):
                if t[uv][w] != t[u][t[v][w]]:
                    return False, (L.labels[u], L.labels[v], L.labels[w])
    return True, None


def loop_check(L) -> Report:
    """Exhaustive structural verdicts for a finite multiplication table."""
    rep = Report("loop", None)
    timed(rep, "translations-bijective", lambda: _translations_bijective(L))
    timed(rep, "identity-element", lambda: _identity_trivial(L))
    inv_ok = timed(rep, "inverses-exist-unique", lambda: _inverses_unique(L))
    if inv_ok:
        timed(rep, "left-inverse-property", lambda: _ip_left(L))
        timed(rep, "right-inverse-property", lambda: _ip_right(L))
        timed(rep, "inverse-involutive", lambda: _inverse_involutive(L))
        timed(rep, "inverse-antiautomorphism", lambda: _inverse_antiautomorphism(L))
    else:
        for name in ("left-inverse-property", "right-inverse-property",
                     "inverse-involutive", "inverse-antiautomorphism"):
            rep.record(name, "skipped", "inverses missing")
    f = timed(rep, "flexible", lambda: _flexible(L))
    timed(rep, "left-alternative", lambda: _left_alternative(L))
    timed(rep, "right-alternative", lambda: _right_alternative(L))
    m1, w1 = _moufang1(L)
    m2, w2 = _moufang2(L)
    m3, w3 = _moufang3(L)
    rep.add("moufang-form-1", m1, w1)
    rep.add("moufang-form-2", m2, w2)
    rep.add("moufang-form-3", m3, w3)
    rep.add("moufang-forms-agree", m1 == m2 == m3, (m1, m2, m3))
    if f and inv_ok:
        timed(rep, "flexible-conjugation", lambda: _flexible_conjugation(L))
    else:
        rep.record("flexible-conjugation", "vacuous", "loop not flexible")
    return rep


# -- multiplicative associator, nucleus, centre ---------------------------------

def loop_associator(L, u, v, w):
    """phi(u,v,w) = ((uv)w)((w^-1 v^-1) u^-1), so (uv)w = phi . (u(vw))."""
    t = L.table
    inv = L.inverses()
    lhs = t[t[u][v]][w]
    rhs = t[t[inv[w]][inv[v]]][inv[u]]
    return t[lhs][rhs]


def nucleus(L):
    """Elements associating with everything, in all three slots."""
    t = L.table
    out = []
    rng = range(L.order)
    for a in rng:
        ok = True
        for u in rng:
            au, ua = t[a][u], t[u][a]
            for v in rng:
                if t[au][v] != t[a][t[u][v]] \
                        or t[ua][v] != t[u][t[a][v]] \
                        or t[t[u][v]][a] != t[u][t[v][a]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(a)
    return out


def center(L):
    """Nucleus elements commuting with everything."""
    t = L.table
    return [a for a in nucleus(L)
            if all(t[a][u] == t[u][a] for u in range(L.order))]


def associator_suite(L) -> Report:
    """Associator calculus on an IP loop: degenerate vanishing cases,
    nucleus characterisation, translation rules, the adjoint 3-cocycle
    law (on quasiassociative loops), and the Moufang truth table."""
    rep = Report("loop-associator", None)
    t = L.table
    inv = L.inverses()
    e = L.identity
    rng = range(L.order)
    N = nucleus(L)
    Nset = set(N)
    Z = center(L)

    def phi(u, v, w):
        return loop_associator(L, u, v, w)

    def degenerate_cases():
        for u in rng:
            for v in rng:
                cases = (
                    phi(e, u, v), phi(u, e, v), phi(u, v, e),
                    phi(u, inv[u], v), phi(u, v, inv[v]),
                    phi(t[u][v], inv[v], inv[u]),
                    phi(inv[u], t[u][v], inv[v]),
                    phi(inv[v], inv[u], t[u][v]),
                )
                if any(c != e for c in cases):
                    return False, (L.labels[u], L.labels[v])
        return True, None

    timed(rep, "associator-degenerate-cases", degenerate_cases)

    def nucleus_via_associator():
        via = [a for a in rng
               if all(phi(a, u, v) == e and phi(u, a, v) == e and phi(u, v, a) == e
                      for u in rng for v in rng)]
        return via == N, {"via_associator": via, "by_definition": N}

    timed(rep, "nucleus-via-associator", nucleus_via_associator)

    def translation_rules():
        for a in N:
            ia = inv[a]
            for u in rng:
                for v in rng:
                    for w in rng:
                        if phi(t[a][u], v, w) != t[t[a][phi(u, v, w)]][ia]:
                            return False, ("conjugation", L.labels[a])
                        if phi(t[u][a], v, w) != phi(u, t[a][v], w):
                            return False, ("slot-12", L.labels[a])
                        if phi(u, t[v][a], w) != phi(u, v, t[a][w]):
                            return False, ("slot-23", L.labels[a])
                        if phi(u, v, t[w][a]) != phi(u, v, w):
                            return False, ("slot-3-right", L.labels[a])
        return True, None

    timed(rep, "associator-nucleus-translation", translation_rules)

    def quasiassociative():
        for u in rng:
            for v in rng:
                for w in rng:
                    p = phi(u, v, w)
                    if p not in Nset:
                        return False, (L.labels[u], L.labels[v], L.labels[w])
                    for x in rng:
                        if t[t[x][p]][inv[x]] not in Nset:
                            return False, ("conjugate", L.labels[x])
        return True, None

    qa_ok = timed(rep, "quasiassociative", quasiassociative)

    def central():
        Zset = set(Z)
        for u in rng:
            for v in rng:
                for w in rng:
                    if phi(u, v, w) not in Zset:
                        return False, (L.labels[u], L.labels[v], L.labels[w])
        return True, None

    timed(rep, "central-associator", central)

    if qa_ok:
        def adjoint_cocycle():
            for u in rng:
                iu = inv[u]
                for v in rng:
                    for w in rng:
                        for z in rng:
                            conj = t[t[u][phi(v, w, z)]][iu]
                            lhs = t[t[phi(u, v, w)][phi(u, t[v][w], z)]][conj]
                            rhs = t[phi(t[u][v], w, z)][phi(u, v, t[w][z])]
                            if lhs != rhs:
                                return False, tuple(L.labels[i] for i in (u, v, w, z))
            return True, None

        timed(rep, "adjoint-3-cocycle", adjoint_cocycle)
    else:
        rep.record("adjoint-3-cocycle", "skipped", "loop not quasiassociative")

    def flexible_iff():
        fx, _ = _flexible(L)
        via = all(phi(u, v, u) == e for u in rng for v in rng)
        return fx == via, {"flexible": fx, "associator-form": via}

    timed(rep, "flexible-iff-associator", flexible_iff)

    def alternative_iff():
        alt = _left_alternative(L)[0] and _right_alternative(L)[0]
        via = all(phi(u, u, v) == e and phi(u, v, v) == e
                  for u in rng for v in rng)
        fx = all(phi(u, v, u) == e for u in rng for v in rng)
        return alt == (via and fx), {"alternative": alt}

    timed(rep, "alternative-iff-associator", alternative_iff)

    def moufang_truth_table():
        M = _moufang1(L)[0]
        A = (_flexible(L)[0] and _left_alternative(L)[0]
             and _right_alternative(L)[0])
        c1 = all(t[t[u][phi(v, u, w)]][inv[u]] == inv[phi(u, t[v][u], w)]
                 for u in rng for v in rng for w in rng)
        c2 = all(phi(u, t[v][w], v) == inv[phi(u, v, w)]
                 for u in rng for v in rng for w in rng)
        c3 = all(phi(t[u][v], w, u) == phi(u, v, w)
                 for u in rng for v in rng for w in rng)
        ok = (M == (A and c1)) and (M == (A and c2)) and (M == (A and c3))
        return ok, {"moufang": M, "alternative": A, "conditions": (c1, c2, c3)}

    timed(rep, "moufang-iff-alternative-plus-condition", moufang_truth_table)
    return rep


def signed_basis_associator(T) -> Report:
    """On the sign loop the associator lands in {+-identity} and its sign
    reproduces the coboundary phi(a,b,c), for every choice of signs."""
    rep = Report("signed-basis-associator", T.n)
    L = build_gn(T)
    size = T.size

    def check():
        for si in (0, 1):
            for a in range(size):
                for ti in (0, 1):
                    for b in range(size):
                        for ri in (0, 1):
                            for c in range(size):
                                got = loop_associator(L, si * size + a,
                                                      ti * size + b,
                                                      ri * size + c)
                                sign = T.phi(a, b, c)
                                want = (0 if sign > 0 else 1) * size
                                if got != want:
                                    return False, (si, a, ti, b, ri, c)
        return True, None

    timed(rep, "associator-reproduces-coboundary", check)
    return rep


def check_cyclic_twist(T, m=2) -> Report:
    """Preconditions and structure of the cyclic twist C x Z_2^n."""
    rep = Report("cyclic-twist", T.n)
    size = T.size

    def cond_left():
        for a in range(size):
            for b in range(size):
                if T.F(a, b) * T.F(a, a ^ b) != T.F(a, a):
                    return False, (a, b)
        return True, None

    def cond_right():
        for a in range(size):
            for b in range(size):
                if T.F(b ^ a, a) * T.F(b, a) != T.F(a, a):
                    return False, (a, b)
        return True, None

    timed(rep, "twist-condition-left", cond_left)
    timed(rep, "twist-condition-right", cond_right)

    L = build_cyclic_twist(m, T)
    timed(rep, "twist-inverse-property",
          lambda: (_ip_left(L)[0] and _ip_right(L)[0], None))

    def scalars_central():
        N = set(nucleus(L))
        t = L.table
        for l in range(m):
            i = l * size  # (l, 0)
            if i not in N:
                return False, (L.labels[i], "not in nucleus")
            for j in range(L.order):
                if t[i][j] != t[j][i]:
                    return False, (L.labels[i], L.labels[j])
        return True, None

    timed(rep, "scalar-subgroup-central", scalars_central)

    if m == 2:
        def matches_sign_loop():
            G = build_gn(T)
            return L.table == G.table, None
        timed(rep, "matches-sign-loop", matches_sign_loop)
    return rep


# -- sampled checks on the unit sphere -------------------------------------------

def default_sphere_seeds(n, count=4):
    """Deterministic stereographic parameter vectors (small rationals)."""
    rng = random.Random(1729 + n)
    seeds = []
    for _ in range(count):
        seeds.append(tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 4))
                           for _ in range((1 << n) - 1)))
    return seeds


def sphere_sample(T, seeds=None):
    """Signed basis points followed by stereographic points, fixed order."""
    pts = []
    for s in (1, -1):
        for a in range(T.size):
            pts.append(QuasiElement.basis(T, a, s))
    for t in (seeds if seeds is not None else default_sphere_seeds(T.n)):
        pts.append(sphere_point(T, t))
    return pts


def sampled_sphere_checks(T, seeds=None) -> Report:
    """Exact inverse-property / flexibility / Moufang evaluation on a
    deterministic finite sample of unit-norm rational points."""
    rep = Report("sphere-sample", T.n)
    pts = sphere_sample(T, seeds)
    inv = [p.inverse() for p in pts]
    k = len(pts)

    def left_ip():
        for i in range(k):
            for j in range(k):
                if qa_mul(inv[i], qa_mul(pts[i], pts[j])) != pts[j]:
                    return False, (i, j)
        return True, None

    def right_ip():
        for i in range(k):
            for j in range(k):
                if qa_mul(qa_mul(pts[j], pts[i]), inv[i]) != pts[j]:
                    return False, (i, j)
        return True, None

    def flexible():
        for i in range(k):
            for j in range(k):
                if qa_mul(pts[i], qa_mul(pts[j], pts[i])) != \
                        qa_mul(qa_mul(pts[i], pts[j]), pts[i]):
                    return False, (i, j)
        return True, None

    def moufang():
        for i in range(k):
            u = pts[i]
            for j in range(k):
                uv_u = qa_mul(qa_mul(u, pts[j]), u)
                for l in range(k):
                    if qa_mul(u, qa_mul(pts[j], qa_mul(u, pts[l]))) != \
                            qa_mul(uv_u, pts[l]):
                        return False, (i, j, l)
        return True, None

    timed(rep, "sampled-left-inverse", left_ip)
    timed(rep, "sampled-right-inverse", right_ip)
    timed(rep, "sampled-flexible", flexible)
    timed(rep, "sampled-moufang", moufang)

    if T.n <= 2:
        def associative():
            for i in range(k):
                for j in range(k):
                    ij = qa_mul(pts[i], pts[j])
                    for l in range(k):
                        if qa_mul(ij, pts[l]) != qa_mul(pts[i], qa_mul(pts[j], pts[l])):
                            return False, (i, j, l)
            return True, None
        timed(rep, "sampled-associative", associative)
    return rep


def corrupt_table(L, u=None, v=None):
    """Copy of L with one entry overwritten (negative-control helper)."""
    if u is None:
        u = L.identity + 1 if L.order > 1 else 0
    if v is None:
        v = u
    table = [list(row) for row in L.table]
    table[u][v] = table[u][(v + 1) % L.order]
    return FiniteLoop(L.labels, table, L.identity)
