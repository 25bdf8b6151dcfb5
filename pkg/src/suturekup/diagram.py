"""Combinatorial ordered, oriented, based extended sutured Heegaard diagrams.

A datum consists of d closed alpha curves and l alpha arcs, each an ordered
list of crossing ids (traversal order from the curve's basepoint), and d beta
curves given as cyclic crossing lists with a basepoint index ("the basepoint
precedes this entry") and a sign for every crossing.  Generator i of the
induced presentation is the dual of closed curve i for i < d and of arc i - d
otherwise.

Geometric validity (curves bounding disks, boundary-touching complements) is
not checkable from crossing data and is trusted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .abelian import AbelianizationMap, abelianize
from .words import Word, fox_derivative

CLOSED = "closed"
ARC = "arc"


@dataclass(frozen=True)
class Crossing:
    id: str
    alpha_kind: str          # CLOSED or ARC
    alpha_index: int         # index into the closed list or the arc list
    beta_index: int
    sign: int                # +1 or -1

    @property
    def epsilon(self) -> int:
        return 0 if self.sign == 1 else 1


@dataclass(frozen=True)
class BetaCurve:
    crossings: tuple          # cyclic order of crossing ids
    basepoint: int = 0        # basepoint sits just before this position

    def from_basepoint(self):
        k = len(self.crossings)
        if k == 0:
            return ()
        b = self.basepoint % k
        return self.crossings[b:] + self.crossings[:b]


@dataclass
class HeegaardDatum:
    alphas: list              # per closed curve: list of crossing ids
    arcs: list                # per arc: list of crossing ids
    betas: list               # list of BetaCurve
    crossings: dict           # id -> Crossing
    alpha_names: list = field(default_factory=list)
    arc_names: list = field(default_factory=list)

    @property
    def d(self) -> int:
        return len(self.alphas)

    @property
    def l(self) -> int:
        return len(self.arcs)

    @property
    def num_generators(self) -> int:
        return self.d + self.l

    def generator_names(self):
        names = list(self.alpha_names) or [f"alpha{i + 1}" for i in range(self.d)]
        anames = list(self.arc_names) or [f"a{i + 1}" for i in range(self.l)]
        return names + anames

    def generator_of(self, crossing: Crossing) -> int:
        if crossing.alpha_kind == CLOSED:
            return crossing.alpha_index
        return self.d + crossing.alpha_index

    def copy(self) -> "HeegaardDatum":
        return HeegaardDatum(
            [list(a) for a in self.alphas],
            [list(a) for a in self.arcs],
            [BetaCurve(tuple(b.crossings), b.basepoint) for b in self.betas],
            dict(self.crossings),
            list(self.alpha_names),
            list(self.arc_names),
        )


@dataclass(frozen=True)
class Multipoint:
    """One crossing per closed alpha curve, hitting every beta exactly once."""

    crossing_ids: tuple

    def validate(self, D: HeegaardDatum):
        if len(self.crossing_ids) != D.d:
            raise ValueError("multipoint must pick one crossing per closed curve")
        alphas_hit = set()
        betas_hit = set()
        for cid in self.crossing_ids:
            c = D.crossings[cid]
            if c.alpha_kind != CLOSED:
                raise ValueError(f"multipoint crossing {cid} lies on an arc")
            alphas_hit.add(c.alpha_index)
            betas_hit.add(c.beta_index)
        if len(alphas_hit) != D.d or len(betas_hit) != D.d:
            raise ValueError("multipoint must be bijective on both curve families")

    def on_beta(self, D: HeegaardDatum, j: int) -> Crossing:
        for cid in self.crossing_ids:
            c = D.crossings[cid]
            if c.beta_index == j:
                return c
        raise ValueError(f"multipoint misses beta {j}")


@dataclass
class Presentation:
    num_generators: int
    closed_count: int
    relators: list            # list of Word
    names: list = field(default_factory=list)

    def generator_names(self):
        if self.names:
            return list(self.names)
        return [f"g{i + 1}" for i in range(self.num_generators)]


class ValidationReport:
    def __init__(self):
        self.errors = []

    def error(self, message):
        self.errors.append(message)

    @property
    def valid(self):
        return not self.errors


def validate(D: HeegaardDatum) -> ValidationReport:
    report = ValidationReport()
    if len(D.betas) != D.d:
        report.error(f"unbalanced diagram: {D.d} closed alpha curves, {len(D.betas)} beta curves")
    seen_alpha = {}
    for kind, curves in ((CLOSED, D.alphas), (ARC, D.arcs)):
        for idx, curve in enumerate(curves):
            for cid in curve:
                if cid in seen_alpha:
                    report.error(f"crossing {cid} listed twice on the alpha side")
                seen_alpha[cid] = (kind, idx)
    seen_beta = {}
    for j, beta in enumerate(D.betas):
        for cid in beta.crossings:
            if cid in seen_beta:
                report.error(f"crossing {cid} listed twice on the beta side")
            seen_beta[cid] = j
    if set(seen_alpha) != set(seen_beta):
        only_a = sorted(set(seen_alpha) - set(seen_beta))
        only_b = sorted(set(seen_beta) - set(seen_alpha))
        if only_a:
            report.error(f"crossings missing on the beta side: {only_a}")
        if only_b:
            report.error(f"crossings missing on the alpha side: {only_b}")
    if set(D.crossings) != set(seen_alpha) | set(seen_beta):
        report.error("crossing table does not match the curve lists")
    for cid, c in D.crossings.items():
        ref = seen_alpha.get(cid)
        if ref is not None and ref != (c.alpha_kind, c.alpha_index):
            report.error(f"crossing {cid} has inconsistent alpha reference")
        bref = seen_beta.get(cid)
        if bref is not None and bref != c.beta_index:
            report.error(f"crossing {cid} has inconsistent beta reference")
        if c.sign not in (1, -1):
            report.error(f"crossing {cid} has sign {c.sign}")
    for j, beta in enumerate(D.betas):
        if beta.crossings and not 0 <= beta.basepoint < len(beta.crossings):
            report.error(f"beta {j} basepoint index out of range")
    return report


def relator_word(D: HeegaardDatum, j: int) -> Word:
    """Word read along beta_j from its basepoint: one letter (gen)^sign per crossing."""
    letters = []
    for cid in D.betas[j].from_basepoint():
        c = D.crossings[cid]
        letters.append((D.generator_of(c), c.sign))
    return Word(letters)


def beta_subword(D: HeegaardDatum, crossing_id: str) -> Word:
    """Prefix of the relator before the crossing; negative crossings append g^-1."""
    target = D.crossings[crossing_id]
    letters = []
    for cid in D.betas[target.beta_index].from_basepoint():
        c = D.crossings[cid]
        if cid == crossing_id:
            if c.sign == -1:
                letters.append((D.generator_of(c), -1))
            return Word(letters)
        letters.append((D.generator_of(c), c.sign))
    raise ValueError(f"crossing {crossing_id} not found on its beta curve")


def presentation(D: HeegaardDatum) -> Presentation:
    return Presentation(
        D.num_generators,
        D.d,
        [relator_word(D, j) for j in range(D.d)],
        D.generator_names(),
    )


def fox_consistency(D: HeegaardDatum) -> bool:
    """d(relator_j)/d(gen_i) must equal the signed sum of the crossing subwords."""
    from .words import GroupRingElement

    for j in range(D.d):
        rel = relator_word(D, j)
        for i in range(D.num_generators):
            expected = GroupRingElement.zero()
            for cid in D.betas[j].crossings:
                c = D.crossings[cid]
                if D.generator_of(c) == i:
                    coeff = (
                        expected.field.one if c.sign == 1 else -expected.field.one
                    )
                    expected = expected + GroupRingElement.from_word(
                        beta_subword(D, cid), coeff=coeff
                    )
            if fox_derivative(rel, i) != expected:
                return False
    return True


def diagram_abelianization(D: HeegaardDatum) -> AbelianizationMap:
    pres = presentation(D)
    return abelianize(pres.num_generators, pres.relators)


# -- basepoints, multipoints and moves ---------------------------------------


def basepoints_from_multipoint(D: HeegaardDatum, x: Multipoint) -> HeegaardDatum:
    """Place each beta basepoint just before (positive) or after (negative) x_i."""
    x.validate(D)
    out = D.copy()
    for cid in x.crossing_ids:
        c = D.crossings[cid]
        beta = out.betas[c.beta_index]
        pos = beta.crossings.index(cid)
        k = len(beta.crossings)
        new_bp = pos if c.sign == 1 else (pos + 1) % k
        out.betas[c.beta_index] = BetaCurve(beta.crossings, new_bp)
    return out


def _arc_word(D: HeegaardDatum, j: int, start: int, end: int) -> Word:
    """Crossing word of the beta_j arc from edge position start to edge position end."""
    beta = D.betas[j]
    k = len(beta.crossings)
    if k == 0:
        return Word.identity()
    letters = []
    pos = start % k
    while pos != end % k:
        c = D.crossings[beta.crossings[pos]]
        letters.append((D.generator_of(c), c.sign))
        pos = (pos + 1) % k
    return Word(letters)


def epsilon_class(D: HeegaardDatum, x: Multipoint, y: Multipoint,
                  h: AbelianizationMap):
    """Sum over beta curves of h(word of the arc from q(x) to q(y)).

    This is the relative class attached to the ordered pair (y, x); it is
    antisymmetric in its arguments and additive along chains of multipoints.
    """
    x.validate(D)
    y.validate(D)
    total = [0] * h.rank
    for j in range(D.d):
        cx = x.on_beta(D, j)
        cy = y.on_beta(D, j)
        beta = D.betas[j]
        k = len(beta.crossings)
        px = beta.crossings.index(cx.id)
        py = beta.crossings.index(cy.id)
        qx = px if cx.sign == 1 else (px + 1) % k
        qy = py if cy.sign == 1 else (py + 1) % k
        img = h.word_image(_arc_word(D, j, qx, qy))
        total = [a + b for a, b in zip(total, img)]
    return tuple(total)


def move_basepoint(D: HeegaardDatum, j: int, new_pos: int):
    """Move beta_j's basepoint; returns (new datum, word of the traversed arc)."""
    beta = D.betas[j]
    k = len(beta.crossings)
    if k == 0:
        return D.copy(), Word.identity()
    word = _arc_word(D, j, beta.basepoint, new_pos)
    out = D.copy()
    out.betas[j] = BetaCurve(beta.crossings, new_pos % k)
    return out, word


def reverse_alpha(D: HeegaardDatum, i: int) -> HeegaardDatum:
    """Reverse closed alpha_i: traversal order reverses, its crossing signs flip."""
    out = D.copy()
    out.alphas[i] = list(reversed(out.alphas[i]))
    on_curve = set(out.alphas[i])
    for cid in on_curve:
        c = out.crossings[cid]
        out.crossings[cid] = Crossing(c.id, c.alpha_kind, c.alpha_index,
                                      c.beta_index, -c.sign)
    return out


def reverse_beta(D: HeegaardDatum, j: int) -> HeegaardDatum:
    """Reverse beta_j keeping the basepoint at the same edge; signs flip."""
    out = D.copy()
    beta = out.betas[j]
    k = len(beta.crossings)
    if k:
        ordered = beta.from_basepoint()
        out.betas[j] = BetaCurve(tuple(reversed(ordered)), 0)
    for cid in beta.crossings:
        c = out.crossings[cid]
        out.crossings[cid] = Crossing(c.id, c.alpha_kind, c.alpha_index,
                                      c.beta_index, -c.sign)
    return out


def rotate_alpha_basepoint(D: HeegaardDatum, i: int, shift: int) -> HeegaardDatum:
    """Move alpha_i's basepoint past `shift` crossings (cyclic rotation)."""
    out = D.copy()
    curve = out.alphas[i]
    if curve:
        s = shift % len(curve)
        out.alphas[i] = curve[s:] + curve[:s]
    return out


def swap_alpha_order(D: HeegaardDatum, i: int, k: int) -> HeegaardDatum:
    """Swap closed curves i and k in the ordering (generators are renumbered)."""
    out = D.copy()
    out.alphas[i], out.alphas[k] = out.alphas[k], out.alphas[i]
    if out.alpha_names:
        out.alpha_names[i], out.alpha_names[k] = out.alpha_names[k], out.alpha_names[i]
    remap = {i: k, k: i}
    for cid, c in list(out.crossings.items()):
        if c.alpha_kind == CLOSED and c.alpha_index in remap:
            out.crossings[cid] = Crossing(c.id, c.alpha_kind, remap[c.alpha_index],
                                          c.beta_index, c.sign)
    return out


def enumerate_multipoints(D: HeegaardDatum, limit=None):
    """All multipoints of the diagram (bijections alpha_i -> crossing on beta_sigma(i))."""
    per_alpha = []
    for i in range(D.d):
        per_alpha.append([cid for cid in D.alphas[i]
                          if D.crossings[cid].alpha_kind == CLOSED])
    out = []

    def rec(i, used_betas, acc):
        if limit is not None and len(out) >= limit:
            return
        if i == len(per_alpha):
            out.append(Multipoint(tuple(acc)))
            return
        for cid in per_alpha[i]:
            j = D.crossings[cid].beta_index
            if j not in used_betas:
                rec(i + 1, used_betas | {j}, acc + [cid])

    rec(0, frozenset(), [])
    return out


def random_datum(seed: int, d: int, l: int, max_crossings: int) -> HeegaardDatum:
    """Deterministic pseudo-random valid datum for property tests."""
    rng = random.Random(seed)
    alphas = [[] for _ in range(d)]
    arcs = [[] for _ in range(l)]
    betas = []
    crossings = {}
    counter = 0
    for j in range(d):
        k = rng.randint(1, max_crossings)
        ids = []
        for _ in range(k):
            cid = f"c{counter}"
            counter += 1
            if l and rng.random() < 0.3:
                kind, idx = ARC, rng.randrange(l)
                arcs[idx].append(cid)
            else:
                kind, idx = CLOSED, rng.randrange(d)
                alphas[idx].append(cid)
            sign = rng.choice((1, -1))
            crossings[cid] = Crossing(cid, kind, idx, j, sign)
            ids.append(cid)
        betas.append(BetaCurve(tuple(ids), rng.randrange(k)))
    for curve in alphas:
        rng.shuffle(curve)
    for curve in arcs:
        rng.shuffle(curve)
    return HeegaardDatum(alphas, arcs, betas, crossings)
