"""Shared builders for the test suite."""

from fractions import Fraction

from suturekup import (
    NumberField,
    QQ,
    Word,
    abelianize,
    presentation,
)
from suturekup.hopf import _minor_det
from suturekup.kuperberg import _mat_inv


def random_invertible(rng, n, field=QQ, span=3):
    """Random invertible matrix with small rational entries."""
    while True:
        m = [
            [field.from_rational(Fraction(rng.randint(-span, span), rng.randint(1, 2)))
             for _ in range(n)]
            for _ in range(n)
        ]
        if not _minor_det(m, list(range(n)), list(range(n)), field).is_zero():
            return m


def homology_diag_matrices(D, n, field=QQ, seeds=(2, 3, 5, 7, 11)):
    """Commuting diagonal generator images factoring through H_1.

    These kill every relator by construction, so the basepoint and
    orientation covariances hold exactly for them.
    """
    pres = presentation(D)
    amap = abelianize(pres.num_generators, pres.relators)
    mats = []
    for g in range(pres.num_generators):
        img = amap.word_image(Word.generator(g))
        diag = [field.one for _ in range(n)]
        for k, e in enumerate(img):
            for i in range(n):
                lam = field.from_rational(seeds[(k * n + i) % len(seeds)])
                p = field.one
                for _ in range(abs(e)):
                    p = p * lam
                if e < 0:
                    p = p.inv()
                diag[i] = diag[i] * p
        mats.append([[diag[i] if i == j else field.zero for j in range(n)]
                     for i in range(n)])
    return mats


def trefoil_braid_sl2(field=QQ):
    """alpha -> [[1,1],[0,1]], a -> [[1,0],[-1,1]] solves the braid relation."""
    one, zero = field.one, field.zero
    alpha = [[one, one], [zero, one]]
    a = [[one, zero], [-one, one]]
    return [alpha, a]


def figure_eight_sl2():
    """The parabolic representation over Q(xi), xi^2 + xi + 1 = 0."""
    field = NumberField([1, 1, 1])
    xi = field.generator()
    one, zero = field.one, field.zero
    X = [[one, one], [zero, one]]
    Y = [[one, zero], [-xi, one]]
    return field, [_mat_inv(X, field), Y]


def identity_matrix(n, ring):
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
