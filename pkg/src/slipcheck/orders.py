"""Monomial orders: lex, grevlex and weighted lex, each over a variable permutation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import Monomial, PolyRing

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order.

    ``permutation`` lists variable indices from largest to smallest.
    ``weights`` (weighted lex only) are indexed by ring variable position.
    """

    kind: str
    permutation: tuple[int, ...]
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "wlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        n = len(self.permutation)
        if sorted(self.permutation) != list(range(n)):
            raise ValueError(f"{self.permutation} is not a permutation of 0..{n - 1}")
        if self.kind == "wlex":
            if len(self.weights) != n or min(self.weights) <= 0:
                raise ValueError("weighted lex needs one positive weight per variable")
        elif self.weights:
            raise ValueError(f"{self.kind} takes no weights")
        object.__setattr__(self, "_key", _make_key(self))

    @property
    def nvars(self) -> int:
        return len(self.permutation)

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        """Sort key: ``key(m1) < key(m2)`` iff ``m1 < m2`` in this order."""
        return self._key  # type: ignore[attr-defined]

    @classmethod
    def lex(cls, nvars: int, permutation=None) -> "MonomialOrder":
        return cls("lex", tuple(permutation) if permutation is not None else tuple(range(nvars)))

    @classmethod
    def grevlex(cls, nvars: int, permutation=None) -> "MonomialOrder":
        return cls("grevlex", tuple(permutation) if permutation is not None else tuple(range(nvars)))

    @classmethod
    def wlex(cls, weights, permutation=None) -> "MonomialOrder":
        weights = tuple(weights)
        perm = tuple(permutation) if permutation is not None else tuple(range(len(weights)))
        return cls("wlex", perm, weights)

    @classmethod
    def parse(cls, text: str, ring: PolyRing) -> "MonomialOrder":
        """Parse ``lex:a0,a1,a2``, ``grevlex:a2,a1,a0`` or ``wlex:1,2,2/a0,a1,a2``."""
        try:
            kind, rest = text.split(":", 1)
        except ValueError:
            raise ValueError(f"order spec {text!r} lacks a ':'") from None
        kind = kind.strip()
        weights: tuple[int, ...] = ()
        if kind == "wlex":
            try:
                wtext, rest = rest.split("/", 1)
            except ValueError:
                raise ValueError(f"weighted order {text!r} needs 'weights/variables'") from None
            weights = tuple(int(w) for w in wtext.split(","))
        names = [v.strip() for v in rest.split(",") if v.strip()]
        if len(names) != ring.nvars:
            raise ValueError(f"order {text!r} must list all {ring.nvars} variables")
        perm = tuple(ring.index(v) for v in names)
        return cls(kind, perm, weights)

    def spec(self, ring: PolyRing) -> str:
        names = ",".join(ring.names[i] for i in self.permutation)
        if self.kind == "wlex":
            return f"wlex:{','.join(map(str, self.weights))}/{names}"
        return f"{self.kind}:{names}"

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return GT if k1 > k2 else LT if k1 < k2 else EQ

    def leading(self, monos) -> Monomial:
        return max(monos, key=self.key)


def _make_key(order: MonomialOrder) -> Callable[[Monomial], tuple]:
    perm = order.permutation
    if order.kind == "lex":
        return lambda m: tuple(m[i] for i in perm)
    if order.kind == "grevlex":
        rev = perm[::-1]
        return lambda m: (sum(m),) + tuple(-m[i] for i in rev)
    w = order.weights
    return lambda m: (sum(a * b for a, b in zip(w, m)),) + tuple(m[i] for i in perm)


def compare(order: MonomialOrder, m1: Monomial, m2: Monomial) -> int:
    return order.compare(m1, m2)


def default_order(ring: PolyRing) -> MonomialOrder:
    return MonomialOrder.grevlex(ring.nvars)
