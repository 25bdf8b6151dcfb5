"""Freely reduced words, group rings over a number field, and Fox calculus.

Generators are indexed 0..m-1; a word is a tuple of (generator, +-1) letters
with no adjacent cancelling pair.  The word string grammar used by the file
formats is generator names joined by "*", with a "^-1" (or any integer
exponent) suffix, e.g. "a*alpha*a^-1*alpha^-1".
"""

from __future__ import annotations

from .numberfield import FieldElement, NumberField, QQ


class Word:
    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = free_reduce(letters)

    @classmethod
    def generator(cls, g: int, exp: int = 1) -> "Word":
        return cls(((g, 1),) * exp if exp >= 0 else ((g, -1),) * (-exp))

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        out = Word.identity()
        for _ in range(n):
            out = out * self
        return out

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    def exponent_sums(self, num_generators: int):
        sums = [0] * num_generators
        for g, e in self.letters:
            sums[g] += e
        return sums

    def format(self, names) -> str:
        if not self.letters:
            return "1"
        return "*".join(
            names[g] if e == 1 else f"{names[g]}^{e}" for g, e in self.letters
        )

    def __repr__(self):
        return "Word(" + ",".join(f"{g}^{e}" for g, e in self.letters) + ")"


def free_reduce(letters) -> tuple:
    out = []
    for g, e in letters:
        g = int(g)
        e = int(e)
        if e not in (1, -1):
            raise ValueError("letters must carry exponent +1 or -1")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def parse_word(text: str, names) -> Word:
    """Parse the word grammar over the given generator names ("1" = identity)."""
    index = {name: i for i, name in enumerate(names)}
    s = text.replace(" ", "")
    if s in ("", "1"):
        return Word.identity()
    letters = []
    for chunk in s.split("*"):
        if not chunk:
            raise ValueError(f"empty factor in word {text!r}")
        if "^" in chunk:
            name, _, exp = chunk.partition("^")
            k = int(exp)
        else:
            name, k = chunk, 1
        if name not in index:
            raise ValueError(f"unknown generator {name!r} in word {text!r}")
        g = index[name]
        letters.extend([(g, 1 if k > 0 else -1)] * abs(k))
    return Word(letters)


class GroupRingElement:
    """Finite formal sum of words with number-field coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, field: NumberField, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    self.terms[w] = c

    @classmethod
    def from_word(cls, w: Word, field: NumberField = QQ, coeff=None):
        c = field.one if coeff is None else coeff
        return cls(field, {w: c})

    @classmethod
    def zero(cls, field: NumberField = QQ):
        return cls(field, {})

    @classmethod
    def one(cls, field: NumberField = QQ):
        return cls.from_word(Word.identity(), field)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return GroupRingElement(self.field, out)

    def __neg__(self):
        return GroupRingElement(self.field, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return GroupRingElement(
                self.field, {w: c * other for w, c in self.terms.items()}
            )
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other, self.field)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                p = c1 * c2
                acc = out.get(w)
                s = p if acc is None else acc + p
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return GroupRingElement(self.field, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{w!r}" for w, c in sorted(
            self.terms.items(), key=lambda kv: kv[0].letters))


def fox_derivative(w: Word, g: int, field: NumberField = QQ) -> GroupRingElement:
    """Free differential d(w)/d(g) in the group ring.

    d(g)/d(g) = 1, d(g')/d(g) = 0, d(g^-1)/d(g) = -g^-1, and the Leibniz rule
    d(uv) = d(u) + u*d(v).  Each letter contributes prefix-weighted: a letter
    g at position i adds +prefix, a letter g^-1 adds -prefix*g^-1.
    """
    terms = {}
    prefix = []
    for gen, e in w.letters:
        if gen == g:
            if e == 1:
                key = Word(tuple(prefix))
                _bump(terms, key, field.one)
            else:
                key = Word(tuple(prefix) + ((gen, -1),))
                _bump(terms, key, -field.one)
        prefix.append((gen, e))
    return GroupRingElement(field, terms)


def _bump(terms, w, c):
    acc = terms.get(w)
    s = c if acc is None else acc + c
    if s.is_zero():
        terms.pop(w, None)
    else:
        terms[w] = s


def sigma(e: GroupRingElement) -> GroupRingElement:
    """Linear extension of word inversion g -> g^-1 (an anti-homomorphism)."""
    return GroupRingElement(e.field, {w.inverse(): c for w, c in e.terms.items()})
