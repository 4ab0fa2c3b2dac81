"""Dense component arrays of Scalars in a fixed left-invariant frame."""

from __future__ import annotations

import itertools

import numpy as np

from .scalars import Scalar


class Tensor:
    """Components of a tensor in the frame ``e_0 .. e_{d-1}``.

    ``variance`` is ``(contravariant, covariant)``. Index order follows the
    construction site; e.g. a connection stores ``gamma[i, j, k]`` as the
    ``e_k`` component of ``nabla_{e_i} e_j``.
    """

    __slots__ = ("data", "variance")

    def __init__(self, data, variance):
        self.data = np.asarray(data, dtype=object)
        self.variance = tuple(variance)
        if self.data.ndim != sum(self.variance):
            raise ValueError(f"rank {self.data.ndim} does not match variance {variance}")

    @classmethod
    def zeros(cls, dim, variance, params):
        rank = sum(variance)
        data = np.empty((dim,) * rank, dtype=object)
        zero = Scalar.zero(params)
        for idx in np.ndindex(data.shape):
            data[idx] = zero
        return cls(data, variance)

    @classmethod
    def build(cls, dim, variance, fn):
        rank = sum(variance)
        data = np.empty((dim,) * rank, dtype=object)
        for idx in np.ndindex(data.shape):
            data[idx] = fn(*idx)
        return cls(data, variance)

    @property
    def shape(self):
        return self.data.shape

    @property
    def rank(self):
        return self.data.ndim

    @property
    def dim(self):
        return self.data.shape[0] if self.data.ndim else 0

    def __getitem__(self, idx):
        return self.data[idx]

    def indices(self):
        return itertools.product(range(self.dim), repeat=self.rank)

    def nonzero(self):
        for idx in self.indices():
            v = self.data[idx]
            if not v.is_zero():
                yield idx, v

    def is_zero(self):
        return all(v.is_zero() for v in self.data.flat)

    def map(self, fn):
        out = np.empty(self.shape, dtype=object)
        for idx in np.ndindex(self.shape):
            out[idx] = fn(self.data[idx])
        return Tensor(out, self.variance)

    def __sub__(self, other):
        out = np.empty(self.shape, dtype=object)
        for idx in np.ndindex(self.shape):
            out[idx] = self.data[idx] - other.data[idx]
        return Tensor(out, self.variance)

    def __add__(self, other):
        out = np.empty(self.shape, dtype=object)
        for idx in np.ndindex(self.shape):
            out[idx] = self.data[idx] + other.data[idx]
        return Tensor(out, self.variance)

    def first_difference(self, other):
        """Index of the first component where the tensors differ, or None."""
        for idx in self.indices():
            if self.data[idx] != other.data[idx]:
                return idx
        return None

    def equals(self, other):
        return self.shape == other.shape and self.first_difference(other) is None

    def __call__(self, *vectors):
        """Multilinear evaluation on component vectors, one per slot."""
        if len(vectors) != self.rank:
            raise ValueError(f"expected {self.rank} vectors, got {len(vectors)}")
        total = None
        supports = [[(i, c) for i, c in enumerate(v) if not c.is_zero()] for v in vectors]
        for combo in itertools.product(*supports):
            idx = tuple(i for i, _ in combo)
            comp = self.data[idx]
            if comp.is_zero():
                continue
            term = comp
            for _, c in combo:
                term = term * c
            total = term if total is None else total + term
        if total is None:
            return self.data.flat[0] * 0
        return total

    def to_lists(self):
        return self.data.tolist()

    def __repr__(self):
        nz = sum(1 for _ in self.nonzero())
        return f"Tensor(variance={self.variance}, dim={self.dim}, nonzero={nz})"
