"""The twisted group algebra k_F(Z_2^n) over exact rationals.

Elements are dense vectors of Fractions over the basis {e_a : a in Z_2^n}
with product e_a e_b = F(a,b) e_{a+b}.  The Euclidean norm q(u) = sum u_a^2
is multiplicative exactly when F satisfies the composition identities
(n <= 3); unit-norm elements invert as u^{-1} = 2 u_0 e_0 - u, and in
general u^{-1} = (2 u_0 e_0 - u) / q(u).

All arithmetic is exact; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction


class QuasiElement:
    """Element of k_F(Z_2^n): a dense coefficient vector tied to a table."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != table.size:
            raise ValueError("expected %d coefficients, got %d"
                             % (table.size, len(coeffs)))
        self.table = table
        self.coeffs = coeffs

    @classmethod
    def basis(cls, table, a, sign=1):
        c = [Fraction(0)] * table.size
        c[a] = Fraction(sign)
        return cls(table, c)

    @classmethod
    def zero(cls, table):
        return cls(table, [Fraction(0)] * table.size)

    def _check(self, other):
        if self.table.n != other.table.n:
            raise ValueError("dimension mismatch: %d vs %d"
                             % (self.table.n, other.table.n))

    def __add__(self, other):
        self._check(other)
        return QuasiElement(self.table,
                            [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return QuasiElement(self.table,
                            [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return QuasiElement(self.table, [-a for a in self.coeffs])

    def scale(self, k):
        k = Fraction(k)
        return QuasiElement(self.table, [k * a for a in self.coeffs])

    def __mul__(self, other):
        return qa_mul(self, other)

    def __eq__(self, other):
        return (isinstance(other, QuasiElement)
                and self.table.n == other.table.n
                and self.coeffs == other.coeffs)

    def __repr__(self):
        parts = []
        for a, c in enumerate(self.coeffs):
            if c:
                parts.append("%s*e%d" % (c, a))
        return " + ".join(parts) if parts else "0"

    def norm(self):
        return qa_norm(self)

    def inverse(self):
        return qa_inverse(self)

    def support(self):
        return [a for a, c in enumerate(self.coeffs) if c]


def qa_mul(u: QuasiElement, v: QuasiElement) -> QuasiElement:
    """(uv)_c = sum over a+b=c of u_a v_b F(a,b)."""
    u._check(v)
    T = u.table
    out = [Fraction(0)] * T.size
    F = T._F
    for a, ua in enumerate(u.coeffs):
        if not ua:
            continue
        Fa = F[a]
        for b, vb in enumerate(v.coeffs):
            if not vb:
                continue
            out[a ^ b] += ua * vb * Fa[b]
    return QuasiElement(T, out)


def qa_norm(u: QuasiElement) -> Fraction:
    """Euclidean norm q(u) = sum of squared coefficients."""
    return sum((c * c for c in u.coeffs), Fraction(0))


def qa_inverse(u: QuasiElement) -> QuasiElement:
    """(2 u_0 e_0 - u) / q(u); a two-sided inverse whenever the norm composes."""
    q = qa_norm(u)
    if not q:
        raise ZeroDivisionError("element of zero norm is not invertible")
    c = [-x / q for x in u.coeffs]
    c[0] = c[0] + 2 * u.coeffs[0] / q
    return QuasiElement(u.table, c)


def qa_associator(u, v, w) -> QuasiElement:
    """Additive associator (uv)w - u(vw)."""
    return qa_mul(qa_mul(u, v), w) - qa_mul(u, qa_mul(v, w))


def sphere_point(table, ts) -> QuasiElement:
    """Rational unit-norm element by inverse stereographic projection.

    Takes 2^n - 1 rational parameters t_a (a != 0) and returns
    u_0 = (1 - T)/(1 + T), u_a = 2 t_a/(1 + T) with T = sum t_a^2,
    so q(u) = 1 identically.
    """
    ts = [Fraction(t) for t in ts]
    if len(ts) != table.size - 1:
        raise ValueError("expected %d parameters, got %d"
                         % (table.size - 1, len(ts)))
    T = sum((t * t for t in ts), Fraction(0))
    den = 1 + T
    coeffs = [(1 - T) / den] + [2 * t / den for t in ts]
    return QuasiElement(table, coeffs)
