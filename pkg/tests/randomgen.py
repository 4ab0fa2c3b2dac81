"""Seeded generators for valid 3-dimensional Lie algebras with ACB structures."""

from __future__ import annotations

import random
from fractions import Fraction

from acbsoliton.lie import build_manifold

EPS = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}


def _small(rng, lo=-3, hi=3):
    return Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2)))


def bianchi_brackets(rng):
    """c_ij^k = eps_ijl n^lk + a_j delta_i^k - a_i delta_j^k with n symmetric and n a = 0."""
    a = [_small(rng) for _ in range(3)]
    if rng.random() < 0.4:
        a = [Fraction(0)] * 3
    n = [[_small(rng) for _ in range(3)] for _ in range(3)]
    n = [[(n[i][j] + n[j][i]) / 2 for j in range(3)] for i in range(3)]
    if any(a):
        # project n so that n a = 0: n -> P n P with P the projector orthogonal to a
        aa = sum(x * x for x in a)
        P = [[(1 if i == j else 0) - a[i] * a[j] / aa for j in range(3)] for i in range(3)]
        n = [[sum(P[i][k] * n[k][l] * P[l][j] for k in range(3) for l in range(3))
              for j in range(3)] for i in range(3)]
    brackets = {}
    for i in range(3):
        for j in range(i + 1, 3):
            coeffs = {}
            for k in range(3):
                v = sum(EPS.get((i, j, l), 0) * n[l][k] for l in range(3))
                v += a[j] * (i == k) - a[i] * (j == k)
                if v:
                    coeffs[k] = v
            brackets[(i, j)] = coeffs
    return brackets


def random_structure(rng):
    """xi = e0, phi e1 = e2, phi e2 = -e1, g = diag(1, [[a, b], [b, -a]])."""
    while True:
        a, b = _small(rng), _small(rng)
        if a or b:
            break
    metric = [[1, 0, 0], [0, a, b], [0, b, -a]]
    phi = [[0, 0, 0], [0, 0, -1], [0, 1, 0]]
    return metric, phi, [1, 0, 0]


def random_manifold(seed):
    rng = random.Random(seed)
    metric, phi, xi = random_structure(rng)
    return build_manifold(3, (), bianchi_brackets(rng), metric, phi, xi, name=f"random{seed}")
