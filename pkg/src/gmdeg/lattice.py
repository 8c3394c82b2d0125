"""Genus arithmetic for half-classes on the resolved Kummer surface.

Classes have the form (d H - sum a_i E_i) / 2 with H^2 = 4, E_i^2 = -2 and
all other products zero, so D^2 = d^2 - (sum a_i^2) / 2 and the arithmetic
genus is D^2 / 2 + 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

NODES = 16
H_SQUARED = 4
E_SQUARED = -2


@dataclass(frozen=True)
class DivisorClass:
    d: int
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if len(a) != NODES:
            raise ValueError(f"need {NODES} node multiplicities, got {len(a)}")
        if min(a) < 0:
            raise ValueError("multiplicities are non-negative")
        object.__setattr__(self, "a", a)

    @classmethod
    def with_nodes(cls, d: int, counts: dict[int, int]) -> "DivisorClass":
        """Class with counts[m] nodes of multiplicity m (the rest zero)."""
        a = [m for m, n in sorted(counts.items()) for _ in range(n)]
        if len(a) > NODES:
            raise ValueError("more than 16 nodes requested")
        return cls(d, tuple(a) + (0,) * (NODES - len(a)))

    def self_intersection(self) -> Fraction:
        # ((dH - sum a_i E_i) / 2)^2
        return Fraction(self.d ** 2 * H_SQUARED + sum(x * x for x in self.a) * E_SQUARED, 4)


def class_genus(c: DivisorClass) -> Fraction:
    return c.self_intersection() / 2 + 1


def _genus_from_sum(d: int, sum_sq: int) -> Fraction:
    return Fraction(d * d, 2) - Fraction(sum_sq, 4) + 1


def solve_sextic_multiplicities(genus_cap: int = 15, drop_constraint: bool = True,
                                max_multiplicity: int = 2) -> list[tuple[int, ...]]:
    """Node-multiplicity counts (n_0, ..., n_m) for d = 6 surviving the genus tests.

    Kept: integral genus, genus <= cap and, with ``drop_constraint``, genus
    <= cap - #{i : a_i >= 2} since every node of multiplicity at least two
    lowers the genus of the strict transform by at least one.
    """
    out = []
    for counts in product(range(NODES + 1), repeat=max_multiplicity + 1):
        if sum(counts) != NODES:
            continue
        sum_sq = sum(m * m * n for m, n in enumerate(counts))
        g = _genus_from_sum(6, sum_sq)
        if g.denominator != 1 or g > genus_cap:
            continue
        if drop_constraint and g > genus_cap - sum(counts[2:]):
            continue
        out.append(counts)
    return out


@dataclass(frozen=True)
class IntegralityClass:
    d: int
    residue: int
    sums: tuple[int, ...]


def integrality_filter(d: int, allowed: Sequence[int] = (0, 1)) -> IntegralityClass:
    """Achievable sum a_i^2 over 16 nodes giving an integral genus for degree d."""
    squares = sorted({m * m for m in allowed})
    reach = {0}
    for _ in range(NODES):
        reach = {s + q for s in reach for q in squares}
    residue = 2 * d * d % 4
    return IntegralityClass(d, residue, tuple(sorted(s for s in reach if s % 4 == residue)))


@dataclass(frozen=True)
class Splitting:
    size1: int
    genus1: int
    size2: int
    genus2: int

    def as_tuple(self):
        return (self.size1, self.genus1, self.size2, self.genus2)


def cubic_half_classes() -> list[tuple[int, int]]:
    """(|I|, genus) for (3H - sum_{i in I} E_i) / 2 with integral genus."""
    out = []
    for k in range(NODES + 1):
        g = _genus_from_sum(3, k)
        if g.denominator == 1:
            out.append((k, int(g)))
    return out


def enumerate_cubic_splittings(genus_bound: int = 4) -> list[Splitting]:
    """Ways to split the 16 nodes between two cubic half-classes.

    Each unordered pair is listed once, odd-genus member first.  Pairs with
    a member of genus above ``genus_bound`` are dropped: that member would be
    a sextic of too large a genus on an irreducible cubic surface.
    """
    classes = dict(cubic_half_classes())
    seen = set()
    out = []
    for k, g in classes.items():
        k2 = NODES - k
        if k2 not in classes or frozenset((k, k2)) in seen:
            continue
        seen.add(frozenset((k, k2)))
        g2 = classes[k2]
        if max(g, g2) > genus_bound:
            continue
        pair = Splitting(k, g, k2, g2) if g % 2 else Splitting(k2, g2, k, g)
        out.append(pair)
    out.sort(key=lambda s: max(s.genus1, s.genus2))
    return out
