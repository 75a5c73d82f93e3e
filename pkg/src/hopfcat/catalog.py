"""Standard small groups, Lie algebras and actions used by tests and fixtures."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Tuple

from .constructors import (
    DEFAULT_DEGREE,
    FiniteGroup,
    HopfAction,
    LieAlgebra,
    StructuralPresentation,
    abelian_lie,
    smash,
)


def cyclic(n: int) -> FiniteGroup:
    labels = ["e", "g"] + [f"g{k}" for k in range(2, n)]
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(tuple(labels[:n]), table, f"C{n}")


def dihedral(n: int, name: str = "") -> FiniteGroup:
    """Symmetries of the n-gon; elements ``r^k s^f`` labelled ``r2s`` etc."""
    elems = [(k, f) for f in (0, 1) for k in range(n)]

    def label(k, f):
        rot = "" if k == 0 else ("r" if k == 1 else f"r{k}")
        if f:
            return rot + "s"
        return rot or "e"

    def mul(a, b):
        (k1, f1), (k2, f2) = a, b
        return ((k1 + (-k2 if f1 else k2)) % n, (f1 + f2) % 2)

    pos = {x: i for i, x in enumerate(elems)}
    table = tuple(tuple(pos[mul(a, b)] for b in elems) for a in elems)
    return FiniteGroup(tuple(label(*x) for x in elems), table, name or f"D{n}")


def symmetric3() -> FiniteGroup:
    return dihedral(3, "S3")


def quaternion() -> FiniteGroup:
    # unit quaternions as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
    names = ["e", "i", "j", "k"]
    elems = [(s, a) for a in range(4) for s in (1, -1)]
    prod = {
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
        (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }

    def mul(x, y):
        (s1, a1), (s2, a2) = x, y
        if a1 == 0:
            return (s1 * s2, a2)
        if a2 == 0:
            return (s1 * s2, a1)
        s, a = prod[(a1, a2)]
        return (s * s1 * s2, a)

    def label(s, a):
        if a == 0:
            return "e" if s == 1 else "m"
        return names[a] if s == 1 else "m" + names[a]

    pos = {x: i for i, x in enumerate(elems)}
    table = tuple(tuple(pos[mul(a, b)] for b in elems) for a in elems)
    return FiniteGroup(tuple(label(*x) for x in elems), table, "Q8")


def catalog_groups() -> List[FiniteGroup]:
    return [cyclic(n) for n in range(1, 9)] + [symmetric3(), dihedral(4), quaternion()]


def aff2() -> LieAlgebra:
    return LieAlgebra(("x", "y"), {(0, 1): {1: 1}}, "aff2")


def heis3() -> LieAlgebra:
    return LieAlgebra(("x", "y", "z"), {(0, 1): {2: 1}}, "heis3")


def sl2() -> LieAlgebra:
    # basis E, F, H with [E,F] = H, [H,E] = 2E, [H,F] = -2F
    return LieAlgebra(("E", "F", "H"), {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}}, "sl2")


def abelian(n: int) -> LieAlgebra:
    return abelian_lie(("x", "y", "z")[:n], f"abel{n}")


def catalog_lie() -> List[LieAlgebra]:
    return [abelian(1), abelian(2), abelian(3), aff2(), heis3(), sl2()]


def _mat(rows: Dict[int, Dict[int, int]], n: int):
    return [{k: Fraction(v) for k, v in rows.get(i, {}).items()} for i in range(n)]


def catalog_actions() -> Dict[str, HopfAction]:
    """Four actions: sign on ⟨x⟩, quarter-turn on abel2, the Chevalley-type
    involution of sl2 and the aff2 reflection y ↦ -y."""
    c2, c4 = cyclic(2), cyclic(4)
    return {
        "H2": HopfAction.from_generators(c2, abelian(1), {"g": _mat({0: {0: -1}}, 1)}),
        "H4": HopfAction.from_generators(c4, abelian(2), {"g": _mat({0: {1: 1}, 1: {0: -1}}, 2)}),
        "Hsl2": HopfAction.from_generators(c2, sl2(), {"g": _mat({0: {1: 1}, 1: {0: 1}, 2: {2: -1}}, 3)}),
        "Haff": HopfAction.from_generators(c2, aff2(), {"g": _mat({0: {0: 1}, 1: {1: -1}}, 2)}),
    }


def catalog_smash(d: int = DEFAULT_DEGREE) -> List[StructuralPresentation]:
    return [smash(act, d, name) for name, act in catalog_actions().items()]


def h2(d: int = DEFAULT_DEGREE) -> StructuralPresentation:
    """``U(⟨x⟩) ⋊ K[C2]`` with g·x = -x."""
    return smash(catalog_actions()["H2"], d, "H2")


def catalog_pairs() -> List[Tuple[LieAlgebra, FiniteGroup]]:
    return list(itertools.product(catalog_lie(), catalog_groups()))
