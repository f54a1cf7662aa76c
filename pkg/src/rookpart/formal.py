"""Formal linear combinations over arbitrary hashable basis keys."""

from __future__ import annotations

from fractions import Fraction


class FormalSum:
    """Map from basis keys to nonzero exact coefficients.

    Zero coefficients are pruned at construction, so equality is plain
    key-wise comparison.  Instances are immutable by convention; all
    operations return new sums.  Keys must be hashable and mutually
    comparable (used only for deterministic iteration order).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                if key in data:
                    data[key] = data[key] + coeff
                else:
                    data[key] = coeff
        self._terms = {k: c for k, c in data.items() if c}

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def term(cls, key, coeff=Fraction(1)) -> "FormalSum":
        return cls([(key, coeff)])

    def coefficient(self, key):
        return self._terms.get(key, Fraction(0))

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def keys(self):
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return FormalSum(out)

    def __sub__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return FormalSum({k: -c for k, c in self._terms.items()})

    def scaled(self, coeff) -> "FormalSum":
        return FormalSum({k: coeff * c for k, c in self._terms.items()})

    def __rmul__(self, coeff):
        return self.scaled(coeff)

    def map_terms(self, fn) -> "FormalSum":
        """Linear extension of ``fn``: key -> FormalSum."""
        acc = {}
        for key, coeff in self._terms.items():
            for k, c in fn(key)._terms.items():
                acc[k] = acc.get(k, 0) + coeff * c
        return FormalSum(acc)

    def map_keys(self, fn) -> "FormalSum":
        """Relabel basis keys with ``fn``: key -> key."""
        return FormalSum([(fn(k), c) for k, c in self._terms.items()])

    def bilinear(self, other: "FormalSum", pair_fn) -> "FormalSum":
        """Sum of c1*c2*pair_fn(k1, k2) over all term pairs; pair_fn returns a FormalSum."""
        acc = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                scale = c1 * c2
                for k, c in pair_fn(k1, k2)._terms.items():
                    acc[k] = acc.get(k, 0) + scale * c
        return FormalSum(acc)

    def __repr__(self) -> str:
        if not self._terms:
            return "FormalSum(0)"
        body = " + ".join(f"({c})*{k!r}" for k, c in self.items())
        return f"FormalSum({body})"
