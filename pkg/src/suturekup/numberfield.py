"""Exact number field arithmetic Q[x]/(m(x)).

A field is described by a monic integer minimal polynomial m of degree D >= 1;
irreducibility is the caller's responsibility.  Elements are stored as tuples
of D Fractions (coefficients of 1, x, ..., x^{D-1}).  D = 1 recovers the
rationals.  Elements serialize as "a0 + a1*x + a2*x^2" with rational
coefficients "p/q".
"""

from __future__ import annotations

import re
from fractions import Fraction


class NumberField:
    """Q[x]/(min_poly), with min_poly given constant-coefficient first."""

    def __init__(self, min_poly):
        coeffs = [int(c) for c in min_poly]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise ValueError("min_poly must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("min_poly must be monic with integer coefficients")
        self.min_poly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        # x^D = -(c0 + c1 x + ... + c_{D-1} x^{D-1})
        self._reduction = tuple(Fraction(-c) for c in coeffs[:-1])

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return f"NumberField({list(self.min_poly)})"

    # -- element constructors ------------------------------------------------

    def element(self, coeffs) -> "FieldElement":
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > self.degree:
            vec = self._reduce(vec)
        vec += [Fraction(0)] * (self.degree - len(vec))
        return FieldElement(self, tuple(vec))

    def from_rational(self, q) -> "FieldElement":
        return self.element([Fraction(q)])

    @property
    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    @property
    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def generator(self) -> "FieldElement":
        if self.degree == 1:
            raise ValueError("degree-1 field has no generator beyond Q")
        return self.element([0, 1])

    # -- internal polynomial reduction ----------------------------------------

    def _reduce(self, vec):
        vec = list(vec)
        for i in range(len(vec) - 1, self.degree - 1, -1):
            c = vec[i]
            if c:
                for j, r in enumerate(self._reduction):
                    vec[i - self.degree + j] += c * r
            vec.pop()
        return vec

    # -- parsing ---------------------------------------------------------------

    _TERM = re.compile(
        r"\s*(?P<sign>[+-]?)\s*(?:(?P<num>\d+(?:/\d+)?)\s*(?:\*\s*)?)?"
        r"(?:x(?:\^(?P<exp>\d+))?)?\s*"
    )

    def parse(self, text: str) -> "FieldElement":
        """Parse "a0 + a1*x + a2*x^2" with rational coefficients "p/q"."""
        s = text.strip()
        if not s:
            raise ValueError("empty field element")
        vec = [Fraction(0)] * self.degree
        pos = 0
        first = True
        while pos < len(s):
            m = self._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse field element {text!r} at {s[pos:]!r}")
            sign, num, exp = m.group("sign"), m.group("num"), m.group("exp")
            if not sign and not first:
                raise ValueError(f"missing sign in {text!r}")
            if num is None and exp is None and "x" not in s[pos:m.end()]:
                raise ValueError(f"empty term in {text!r}")
            has_x = "x" in s[pos:m.end()]
            k = int(exp) if exp is not None else (1 if has_x else 0)
            coeff = Fraction(num) if num is not None else Fraction(1)
            if sign == "-":
                coeff = -coeff
            if k >= self.degree:
                raise ValueError(f"term x^{k} exceeds field degree {self.degree}")
            vec[k] += coeff
            pos = m.end()
            first = False
        return FieldElement(self, tuple(vec))


class FieldElement:
    """Immutable element of a NumberField."""

    __slots__ = ("field", "vec")

    def __init__(self, field: NumberField, vec):
        self.field = field
        self.vec = vec

    def __bool__(self):
        return any(self.vec)

    def is_zero(self) -> bool:
        return not any(self.vec)

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.vec == other.vec
        )

    def __hash__(self):
        return hash((self.field.min_poly, self.vec))

    def __add__(self, other):
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.vec, other.vec)))

    def __sub__(self, other):
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.vec, other.vec)))

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.vec))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return FieldElement(self.field, tuple(a * q for a in self.vec))
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, (self.vec[0] * other.vec[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.vec):
            if a:
                for j, b in enumerate(other.vec):
                    if b:
                        prod[i + j] += a * b
        vec = self.field._reduce(prod)
        vec += [Fraction(0)] * (d - len(vec))
        return FieldElement(self.field, tuple(vec))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        """Multiplicative inverse via extended Euclid in Q[x] mod min_poly."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.field.degree == 1:
            return FieldElement(self.field, (1 / self.vec[0],))
        # r0 = min_poly, r1 = self; track s with s*self = r (mod min_poly)
        r0 = [Fraction(c) for c in self.field.min_poly]
        r1 = list(self.vec)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        lead = _polylead(r0)
        if _polydeg(r0) != 0:
            raise ZeroDivisionError("element not invertible (min_poly reducible?)")
        inv_vec = [c / lead for c in s0]
        return self.field.element(inv_vec)

    def __truediv__(self, other):
        return self * other.inv()

    def is_rational(self) -> bool:
        return not any(self.vec[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.vec[0]

    def leading_rational(self) -> Fraction:
        """Coefficient of the highest power of x present (0 for the zero element)."""
        for c in reversed(self.vec):
            if c:
                return c
        return Fraction(0)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.vec):
            if not c:
                continue
            if k == 0:
                body = str(c if c > 0 else -c)
            else:
                mag = c if c > 0 else -c
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    __repr__ = __str__


QQ = NumberField([0, 1])


def _polydeg(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _polylead(p):
    d = _polydeg(p)
    return p[d] if d >= 0 else Fraction(0)


def _polysub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                if d:
                    out[i + j] += c * d
    return out


def _polydivmod(a, b):
    db = _polydeg(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a) + [Fraction(0)]
    q = [Fraction(0)] * max(1, len(a))
    lead = b[db]
    for i in range(_polydeg(r) - db, -1, -1):
        c = r[i + db] / lead
        if c:
            q[i] = c
            for j in range(db + 1):
                r[i + j] -= c * b[j]
    return q, r
