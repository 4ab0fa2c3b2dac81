"""Built-in manifolds: the two Lie-group examples and a flat control."""

from __future__ import annotations

from .errors import DocumentError
from .lie import Manifold, build_manifold


def _diag(entries):
    d = len(entries)
    return [[entries[i] if i == j else 0 for j in range(d)] for i in range(d)]


def _phi(dim, images):
    """Matrix of phi from ``{j: {i: coeff}}`` meaning phi(e_j) = sum coeff e_i."""
    mat = [[0] * dim for _ in range(dim)]
    for j, img in images.items():
        for i, v in img.items():
            mat[i][j] = v
    return mat


def sasaki5() -> Manifold:
    """Five-dimensional Sasaki-like Lie group with parameters p, q."""
    brackets = {
        (0, 1): {2: "p", 3: 1, 4: "q"},
        (0, 2): {1: "-p", 3: "-q", 4: 1},
        (0, 3): {1: -1, 2: "-q", 4: "p"},
        (0, 4): {1: "q", 2: -1, 3: "-p"},
    }
    phi = _phi(5, {1: {3: 1}, 2: {4: 1}, 3: {1: -1}, 4: {2: -1}})
    return build_manifold(5, ("p", "q"), brackets, _diag([1, 1, 1, -1, -1]), phi,
                          [1, 0, 0, 0, 0], name="sasaki5")


def f5dim3() -> Manifold:
    """Three-dimensional Lie group whose Reeb field is torse-forming (f = -p)."""
    brackets = {(0, 1): {1: "p"}, (0, 2): {2: "p"}}
    phi = _phi(3, {1: {2: 1}, 2: {1: -1}})
    return build_manifold(3, ("p",), brackets, _diag([1, 1, -1]), phi, [1, 0, 0],
                          eta=[1, 0, 0], name="f5dim3")


def flat3() -> Manifold:
    """Abelian group with constant structure: cosymplectic and flat."""
    phi = _phi(3, {1: {2: 1}, 2: {1: -1}})
    return build_manifold(3, (), {}, _diag([1, 1, -1]), phi, [1, 0, 0], name="flat3")


EXAMPLES = {"sasaki5": sasaki5, "f5dim3": f5dim3, "flat3": flat3}


def builtin_example(name: str) -> Manifold:
    try:
        factory = EXAMPLES[name]
    except KeyError:
        raise DocumentError(
            f"unknown example {name!r}; available: {', '.join(sorted(EXAMPLES))}"
        ) from None
    return factory()
