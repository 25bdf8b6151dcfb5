"""Multivariate Laurent polynomials with number-field coefficients.

Terms are a finite map from integer exponent vectors (tuples of length b) to
nonzero field elements.  The unit normalization used for "equality up to
units" translates the support so the lex-smallest exponent vector is zero and
scales by -1 if needed so the coefficient there has positive leading rational
coefficient.  Printing uses variables t1..tb ("t" when b == 1), terms sorted
by lex exponent, e.g. "t^-1 - 1 + t".
"""

from __future__ import annotations

from .numberfield import FieldElement, NumberField


class InexactDivision(ArithmeticError):
    pass


class LaurentRing:
    def __init__(self, field: NumberField, nvars: int):
        self.field = field
        self.nvars = int(nvars)
        if self.nvars < 0:
            raise ValueError("nvars must be >= 0")

    def __eq__(self, other):
        return (
            isinstance(other, LaurentRing)
            and self.field == other.field
            and self.nvars == other.nvars
        )

    def __hash__(self):
        return hash((self.field, self.nvars))

    def __repr__(self):
        return f"LaurentRing({self.field!r}, {self.nvars})"

    @property
    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    @property
    def one(self) -> "LaurentPoly":
        return self.monomial((0,) * self.nvars)

    def monomial(self, exps, coeff=None) -> "LaurentPoly":
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        c = self.field.one if coeff is None else coeff
        if c.is_zero():
            return self.zero
        return LaurentPoly(self, {exps: c})

    def from_field(self, c: FieldElement) -> "LaurentPoly":
        return self.monomial((0,) * self.nvars, c)

    def from_rational(self, q) -> "LaurentPoly":
        return self.from_field(self.field.from_rational(q))

    def from_terms(self, terms) -> "LaurentPoly":
        out = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            if not c.is_zero():
                acc = out.get(exps)
                s = c if acc is None else acc + c
                if s.is_zero():
                    out.pop(exps, None)
                else:
                    out[exps] = s
        return LaurentPoly(self, out)


class LaurentPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: LaurentRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, tuple(sorted((e, p.vec) for e, p in self.terms.items()))))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(self.ring, out)

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            if other.is_zero():
                return self.ring.zero
            return LaurentPoly(self.ring, {e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                acc = out.get(e)
                s = p if acc is None else acc + p
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(self.ring, out)

    def scale_monomial(self, exps) -> "LaurentPoly":
        exps = tuple(int(e) for e in exps)
        return LaurentPoly(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def augmentation(self) -> FieldElement:
        """Sum of all coefficients (the ring map sending every variable to 1)."""
        total = self.ring.field.zero
        for c in self.terms.values():
            total = total + c
        return total

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inv_unit(self) -> "LaurentPoly":
        """Inverse of a unit (a single term with invertible coefficient)."""
        if not self.is_monomial():
            raise InexactDivision("not a unit in the Laurent ring")
        (e, c), = self.terms.items()
        return LaurentPoly(self.ring, {tuple(-x for x in e): c.inv()})

    def min_exponents(self):
        if not self.terms:
            return (0,) * self.ring.nvars
        cols = zip(*self.terms.keys())
        return tuple(min(col) for col in cols)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = _monomial_str(exps)
            sign, body = _coeff_str(c, bool(mono))
            term = f"{body}*{mono}" if body and mono else (body or mono or "1")
            if not pieces:
                pieces.append(term if sign >= 0 else f"-{term}")
            else:
                pieces.append(("+ " if sign >= 0 else "- ") + term)
        return " ".join(pieces)

    __repr__ = __str__


def _monomial_str(exps) -> str:
    n = len(exps)
    parts = []
    for i, e in enumerate(exps):
        if e == 0:
            continue
        var = "t" if n == 1 else f"t{i + 1}"
        parts.append(var if e == 1 else f"{var}^{e}")
    return "*".join(parts)


def _coeff_str(c: FieldElement, has_monomial: bool):
    """Return (sign, magnitude-string); empty string means a suppressed 1."""
    if c.is_rational():
        q = c.rational_value()
        sign = 1 if q >= 0 else -1
        mag = q if q >= 0 else -q
        if has_monomial and mag == 1:
            return sign, ""
        return sign, str(mag)
    return 1, f"({c})"


def normalize_unit(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of p modulo units +-(monomial).

    Translate so the lex-smallest exponent vector is zero, then flip the sign
    so the coefficient there has positive leading rational coefficient.  Zero
    maps to zero.
    """
    if p.is_zero():
        return p
    base = min(p.terms.keys())
    shifted = p.scale_monomial(tuple(-x for x in base))
    anchor = shifted.terms[(0,) * p.ring.nvars]
    if anchor.leading_rational() < 0:
        shifted = -shifted
    return shifted


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact division p / q; raises InexactDivision when q does not divide p."""
    if q.is_zero():
        raise InexactDivision("division by zero")
    if p.is_zero():
        return p
    mp, mq = p.min_exponents(), q.min_exponents()
    pp = p.scale_monomial(tuple(-x for x in mp))
    qq = q.scale_monomial(tuple(-x for x in mq))
    quot = _poly_divide_exact(pp, qq)
    return quot.scale_monomial(tuple(a - b for a, b in zip(mp, mq)))


def _poly_divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    # both have nonnegative exponents; greedy lex-leading-term elimination
    ring = p.ring
    q_lead = max(q.terms.keys())
    q_lead_c = q.terms[q_lead]
    quot = ring.zero
    rem = p
    while not rem.is_zero():
        r_lead = max(rem.terms.keys())
        diff = tuple(a - b for a, b in zip(r_lead, q_lead))
        if any(d < 0 for d in diff):
            raise InexactDivision("leading monomial does not divide")
        t = ring.monomial(diff, rem.terms[r_lead] / q_lead_c)
        quot = quot + t
        rem = rem - t * q
    return quot
