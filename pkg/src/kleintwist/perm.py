"""Permutations of {1..n}, finite permutation groups, subgroup
enumeration, conjugacy, and isomorphism-type recognition for the small
orders this package cares about.

Composition is right-to-left: (a * b)(i) == a(b(i)).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Iterator, Optional

from .errors import NotASubgroup

Images = tuple[int, ...]


def _compose_images(a: Images, b: Images) -> Images:
    return tuple(a[j - 1] for j in b)


def _inverse_images(a: Images) -> Images:
    inv = [0] * len(a)
    for i, j in enumerate(a, start=1):
        inv[j - 1] = i
    return tuple(inv)


class Permutation:
    """A permutation of {1, ..., n} stored as its tuple of images.

    Instances are treated as immutable; they hash and sort by the image
    tuple, so iteration orders built on them are deterministic.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs!r}")
        self.images = imgs

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        imgs = list(range(1, degree + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for pos, point in enumerate(cyc):
                imgs[point - 1] = cyc[(pos + 1) % len(cyc)]
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(_compose_images(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(_inverse_images(self.images))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its minimum and
        sorted by that minimum."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        lens = [len(c) for c in self.cycles()]
        return lcm(*lens) if lens else 1

    def sign(self) -> int:
        transpositions = sum(len(c) - 1 for c in self.cycles())
        return -1 if transpositions % 2 else 1

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.degree + 1))

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "id"
        sep = "" if self.degree <= 9 else " "
        return "".join("(" + sep.join(str(p) for p in c) + ")" for c in cycs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return (self.degree, self.images) < (other.degree, other.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


class PermGroup:
    """A finite group of permutations of one common degree.

    The constructor verifies the identity is present and the set is
    inverse-closed; product closure costs |G|^2 and is only enforced by
    as_subgroup or when is_closed is called, since generate() output is
    closed by construction.
    """

    __slots__ = ("degree", "elements", "generators")

    def __init__(self, degree: int, elements: Iterable[Permutation],
                 generators: Iterable[Permutation] = ()):
        elems = frozenset(elements)
        if not elems:
            raise ValueError("a group needs at least the identity")
        for p in elems:
            if p.degree != degree:
                raise ValueError("mixed degrees in group element set")
        if Permutation.identity(degree) not in elems:
            raise ValueError("identity missing")
        for p in elems:
            if p.inverse() not in elems:
                raise ValueError(f"inverse of {p} missing")
        self.degree = degree
        self.elements = elems
        self.generators = tuple(generators)

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[Permutation]:
        return sorted(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.sorted_elements())

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PermGroup)
                and self.degree == other.degree
                and self.elements == other.elements)

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order}, degree={self.degree})"

    def is_closed(self) -> bool:
        for a in self.elements:
            for b in self.elements:
                if a * b not in self.elements:
                    return False
        return True

    def is_abelian(self) -> bool:
        elems = self.sorted_elements()
        for i, a in enumerate(elems):
            for b in elems[i + 1:]:
                if a * b != b * a:
                    return False
        return True

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.elements <= other.elements

    def conjugate_by(self, g: Permutation) -> "PermGroup":
        ginv = g.inverse()
        return PermGroup(self.degree, {g * h * ginv for h in self.elements})

    def element_order_profile(self) -> tuple[tuple[int, int], ...]:
        counts = Counter(p.order() for p in self.elements)
        return tuple(sorted(counts.items()))


def _closure(degree: int, seed: Iterable[Images]) -> frozenset[Images]:
    ident = tuple(range(1, degree + 1))
    gens = [g for g in set(seed) if g != ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = _compose_images(a, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(seen)


def generate(degree: int, generators: Iterable[Permutation]) -> PermGroup:
    """Smallest group containing the given permutations."""
    gens = tuple(generators)
    elems = _closure(degree, [g.images for g in gens])
    return PermGroup(degree, {Permutation(t) for t in elems}, gens)


def symmetric_group(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("degree must be positive")
    elems = {Permutation(p) for p in itertools.permutations(range(1, n + 1))}
    gens: tuple[Permutation, ...] = ()
    if n >= 2:
        swap = Permutation.from_cycles(n, [(1, 2)])
        cyc = Permutation(tuple(range(2, n + 1)) + (1,))
        gens = (swap,) if n == 2 else (swap, cyc)
    return PermGroup(n, elems, gens)


def klein_group() -> PermGroup:
    """The diagonal Klein four-group in S4: id, (12)(34), (13)(24), (14)(23).

    Sorting its elements by image tuple puts them in exactly that order,
    which the basis conventions elsewhere rely on.
    """
    a = Permutation.from_cycles(4, [(1, 2), (3, 4)])
    b = Permutation.from_cycles(4, [(1, 3), (2, 4)])
    return generate(4, (a, b))


def easy_klein() -> PermGroup:
    """The Klein four-group generated by the disjoint swaps (12) and (34)."""
    a = Permutation.from_cycles(4, [(1, 2)])
    b = Permutation.from_cycles(4, [(3, 4)])
    return generate(4, (a, b))


def as_subgroup(parent: PermGroup, elements: Iterable[Permutation]) -> PermGroup:
    """Wrap elements as a subgroup of parent, verifying full closure.

    Raises NotASubgroup when containment, the identity, an inverse, or a
    product is missing.  Only meant for small sets.
    """
    elems = frozenset(elements)
    for p in elems:
        if p not in parent:
            raise NotASubgroup(f"{p} is not an element of the parent group")
    if Permutation.identity(parent.degree) not in elems:
        raise NotASubgroup("identity missing")
    for p in elems:
        if p.inverse() not in elems:
            raise NotASubgroup(f"inverse of {p} missing")
    for a in elems:
        for b in elems:
            if a * b not in elems:
                raise NotASubgroup(f"product {a} * {b} falls outside the set")
    return PermGroup(parent.degree, elems)


def all_subgroups(G: PermGroup) -> list[PermGroup]:
    """Every subgroup of G, found by repeatedly extending known subgroups
    by one extra generator.  Restricted to |G| <= 48 to keep the closure
    workload trivial."""
    if G.order > 48:
        raise ValueError(f"subgroup enumeration restricted to order <= 48, got {G.order}")
    ident = tuple(range(1, G.degree + 1))
    elems = sorted(p.images for p in G.elements)
    trivial = frozenset({ident})
    found = {trivial}
    layer = [trivial]
    while layer:
        fresh = []
        for H in layer:
            for g in elems:
                if g in H:
                    continue
                K = _closure(G.degree, list(H) + [g])
                if K not in found:
                    found.add(K)
                    fresh.append(K)
        layer = fresh
    ordered = sorted(found, key=lambda S: (len(S), sorted(S)))
    return [PermGroup(G.degree, {Permutation(t) for t in S}) for S in ordered]


def subgroups_of_type(G: PermGroup, t: "GroupType | str") -> list[PermGroup]:
    """All subgroups of G with the given isomorphism type (a GroupType or
    its tag name)."""
    name = t if isinstance(t, str) else t.name
    return [H for H in all_subgroups(G) if isomorphism_type(H).name == name]


def is_characteristic_under_inner(G: PermGroup, H: PermGroup) -> bool:
    """True iff every conjugation by an element of G maps H onto H.

    For groups whose automorphisms are all inner (S4 is one, a classical
    fact this package does not re-prove) this settles being characteristic.
    """
    if not H.is_subgroup_of(G):
        raise NotASubgroup("H is not contained in G")
    return all({g * h * g.inverse() for h in H.elements} == H.elements
               for g in G.elements)


def are_conjugate(G: PermGroup, H1: PermGroup, H2: PermGroup) -> Optional[Permutation]:
    """A g in G with g H1 g^-1 == H2, or None.  The identity is tried
    first so equal subgroups get the identity witness."""
    candidates = [Permutation.identity(G.degree)] + G.sorted_elements()
    target = H2.elements
    for g in candidates:
        ginv = g.inverse()
        if {g * h * ginv for h in H1.elements} == target:
            return g
    return None


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    members = set()
    for g in G.elements:
        ginv = g.inverse()
        if {g * h * ginv for h in H.elements} == H.elements:
            members.add(g)
    return PermGroup(G.degree, members)


@dataclass(frozen=True)
class GroupType:
    """Isomorphism-type fingerprint: order, abelianness, and the sorted
    (element order, count) profile.  Named tags cover the types that can
    occur in this project; anything else is tagged Other but still
    carries the distinguishing fields."""

    name: str
    order: int
    abelian: bool
    profile: tuple[tuple[int, int], ...]


_NAMED_TYPES: dict[tuple[int, bool, tuple[tuple[int, int], ...]], str] = {
    (1, True, ((1, 1),)): "Trivial",
    (2, True, ((1, 1), (2, 1))): "Z2",
    (3, True, ((1, 1), (3, 2))): "Z3",
    (4, True, ((1, 1), (2, 1), (4, 2))): "Z4",
    (4, True, ((1, 1), (2, 3))): "Klein",
    (6, False, ((1, 1), (2, 3), (3, 2))): "S3",
    (8, True, ((1, 1), (2, 1), (4, 2), (8, 4))): "Z8",
    (8, True, ((1, 1), (2, 3), (4, 4))): "Z2xZ4",
    (8, True, ((1, 1), (2, 7))): "Z2xZ2xZ2",
    (8, False, ((1, 1), (2, 5), (4, 2))): "D4",
    (8, False, ((1, 1), (2, 1), (4, 6))): "Q8",
    (12, False, ((1, 1), (2, 3), (3, 8))): "A4",
    # Among the fifteen groups of order 24 only S4 has this profile: the
    # other two with eight order-3 elements, SL(2,3) and Z2 x A4, have one
    # and seven involutions respectively.
    (24, False, ((1, 1), (2, 9), (3, 8), (4, 6))): "S4",
}


def isomorphism_type(G: PermGroup) -> GroupType:
    if G.order > 24:
        raise ValueError(f"type recognition restricted to order <= 24, got {G.order}")
    profile = G.element_order_profile()
    abelian = G.is_abelian()
    name = _NAMED_TYPES.get((G.order, abelian, profile), "Other")
    return GroupType(name, G.order, abelian, profile)
