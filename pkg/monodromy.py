# monodromy.py

"""
Permutation representations of the knot group.

Permutations act on the right: x^(uv) = (x^u)^v, so a word is evaluated
letter by letter from the left. Points are 1-based at the API boundary and
0-based inside `Permutation.images`.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from config import MAX_ENUM_DEGREE
from errors import DegreeTooLarge, MissingGenerator, OutOfRange, ParseError, RepeatedEntry
from utils import suggest

logger = logging.getLogger(__name__)

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(n))
        for cycle in cycles:
            for index, point in enumerate(cycle):
                images[point - 1] = cycle[(index + 1) % len(cycle)] - 1
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self first, then other
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        result = [0] * self.n
        for i, image in enumerate(self.images):
            result[image] = i
        return Permutation(tuple(result))

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.n)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = set()
        result = []
        for start in range(self.n):
            if start in seen:
                continue
            cycle = []
            point = start
            while point not in seen:
                seen.add(point)
                cycle.append(point + 1)
                point = self.images[point]
            if len(cycle) > 1 or include_fixed:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def conjugate(self, relabel: "Permutation") -> "Permutation":
        """The same permutation with every point x renamed to relabel(x)."""
        images = [0] * self.n
        for i, image in enumerate(self.images):
            images[relabel.images[i]] = relabel.images[image]
        return Permutation(tuple(images))

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in cycle) + ")" for cycle in cycles)


def parse_perm(text: str, n: int) -> Permutation:
    """Parse disjoint-cycle notation such as "(1 2 3)(4 5)"; "()" is the identity."""
    stripped = text.strip()
    if not stripped or _CYCLE.sub('', stripped).strip():
        raise ParseError(f"'{text}' is not in disjoint-cycle notation")
    cycles = []
    seen = set()
    for body in _CYCLE.findall(stripped):
        entries = body.replace(',', ' ').split()
        cycle = []
        for entry in entries:
            if not entry.isdigit():
                raise ParseError(f"'{entry}' is not a point in '{text}'")
            point = int(entry)
            if not 1 <= point <= n:
                raise OutOfRange(f"point {point} is outside 1..{n} in '{text}'")
            if point in seen:
                raise RepeatedEntry(f"point {point} repeated in '{text}'")
            seen.add(point)
            cycle.append(point)
        if cycle:
            cycles.append(cycle)
    return Permutation.from_cycles(cycles, n)


def max_point(text: str) -> int:
    """Largest point mentioned in cycle notation (0 for the identity)."""
    points = [int(entry) for body in _CYCLE.findall(text) for entry in body.replace(',', ' ').split() if entry.isdigit()]
    return max(points, default=0)


########################################
# Representations
########################################
@dataclass(frozen=True)
class MonodromyRep:
    n: int
    assignment: tuple[tuple[str, Permutation], ...]

    @classmethod
    def from_mapping(cls, names: Sequence[str], mapping: Mapping[str, Permutation]) -> "MonodromyRep":
        missing = [name for name in names if name not in mapping]
        if missing:
            raise MissingGenerator(f"no permutation given for {', '.join(missing)}" + suggest(missing[0], mapping))
        degrees = {mapping[name].n for name in names}
        if len(degrees) > 1:
            raise ParseError(f"permutations have different degrees {sorted(degrees)}")
        n = degrees.pop() if degrees else 1
        return cls(n, tuple((name, mapping[name]) for name in names))

    def __getitem__(self, name: str) -> Permutation:
        for key, perm in self.assignment:
            if key == name:
                return perm
        raise MissingGenerator(f"representation has no generator '{name}'" + suggest(name, self.names))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.assignment)

    @property
    def perms(self) -> tuple[Permutation, ...]:
        return tuple(perm for _, perm in self.assignment)

    def key(self) -> tuple[int, ...]:
        return tuple(image for perm in self.perms for image in perm.images)

    def conjugate(self, relabel: Permutation) -> "MonodromyRep":
        return MonodromyRep(self.n, tuple((name, perm.conjugate(relabel)) for name, perm in self.assignment))

    def describe(self) -> str:
        return " ".join(f"{name}={perm}" for name, perm in self.assignment)


@dataclass(frozen=True)
class RepClassification:
    relations_ok: bool
    transitive: bool
    cyclic: bool
    locally_cyclic: bool
    regular: bool

    @property
    def valid(self) -> bool:
        return self.relations_ok and self.transitive

    def as_dict(self) -> dict[str, bool]:
        return {
            'relations_ok': self.relations_ok,
            'transitive': self.transitive,
            'cyclic': self.cyclic,
            'locally_cyclic': self.locally_cyclic,
            'regular': self.regular,
        }


def evaluate_word(word: Iterable[tuple[str, int]], rep: MonodromyRep) -> Permutation:
    result = Permutation.identity(rep.n)
    for name, exponent in word:
        perm = rep[name]
        result = result * (perm if exponent == 1 else perm ** exponent)
    return result


def orbits(perms: Sequence[Permutation], n: int) -> list[list[int]]:
    """Orbits of the generated group on 1..n, each sorted, in order of smallest point."""
    seen = set()
    result = []
    for start in range(n):
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        for point in orbit:
            for perm in perms:
                image = perm.images[point]
                if image not in seen:
                    seen.add(image)
                    orbit.append(image)
        result.append(sorted(p + 1 for p in orbit))
    return result


def image_order(perms: Sequence[Permutation], n: int, limit: int) -> int | None:
    """Order of the generated group, or None once it exceeds `limit`."""
    identity = Permutation.identity(n)
    elements = {identity}
    frontier = [identity]
    while frontier:
        following = []
        for element in frontier:
            for perm in perms:
                product = element * perm
                if product not in elements:
                    elements.add(product)
                    if len(elements) > limit:
                        return None
                    following.append(product)
        frontier = following
    return len(elements)


def _semiregular(perms: Sequence[Permutation], n: int) -> bool:
    sizes = {len(orbit) for orbit in orbits(perms, n)}
    if len(sizes) != 1:
        return False
    size = sizes.pop()
    return image_order(perms, n, size) == size


def validate_rep(fan, rep: MonodromyRep) -> RepClassification:
    missing = [name for name in fan.generators if name not in rep.names]
    if missing:
        raise MissingGenerator(f"representation does not assign {', '.join(missing)}")
    relations_ok = all(evaluate_word(word, rep).is_identity() for word in fan.relations)
    perms = rep.perms
    transitive = len(orbits(perms, rep.n)) == 1
    cyclic = all(a * b == b * a for a, b in itertools.combinations(perms, 2))
    locally_cyclic = rep[fan.meridian].cycle_type() == (rep.n,)
    classification = RepClassification(
        relations_ok=relations_ok,
        transitive=transitive,
        cyclic=cyclic,
        locally_cyclic=locally_cyclic,
        regular=_semiregular(perms, rep.n),
    )
    logger.debug(f"Classified {rep.describe()}: {classification.as_dict()}")
    return classification


def trivial_rep(fan) -> MonodromyRep:
    identity = Permutation.identity(1)
    return MonodromyRep(1, tuple((name, identity) for name in fan.generators))


def cyclic_rep(fan, n: int) -> MonodromyRep:
    """m -> (1 2 ... n) and every dual generator -> m^3, the cyclic covers of the trefoil fan."""
    meridian = Permutation(tuple((i + 1) % n for i in range(n)))
    mapping = {fan.meridian: meridian}
    for dual in fan.duals:
        mapping[dual.name] = meridian ** 3
    return MonodromyRep.from_mapping(fan.generators, mapping)


def rep_from_texts(fan, texts: Mapping[str, str], n: int | None = None) -> MonodromyRep:
    """Build a representation from cycle-notation strings, inferring n from the largest point."""
    for name in fan.generators:
        if name not in texts:
            raise MissingGenerator(f"no permutation given for '{name}'" + suggest(name, texts))
    if n is None:
        n = max([max_point(text) for text in texts.values()] + [1])
    return MonodromyRep.from_mapping(fan.generators, {name: parse_perm(texts[name], n) for name in fan.generators})


########################################
# Enumeration
########################################
@dataclass(frozen=True)
class EnumeratedRep:
    rep: MonodromyRep
    classification: RepClassification


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _perm_of_type(partition: tuple[int, ...]) -> Permutation:
    cycles = []
    start = 1
    for part in partition:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles, sum(partition))


def canonical_rep(rep: MonodromyRep) -> MonodromyRep:
    """The conjugate with the lexicographically smallest image tuple."""
    best = rep
    for images in itertools.permutations(range(rep.n)):
        candidate = rep.conjugate(Permutation(images))
        if candidate.key() < best.key():
            best = candidate
    return best


def conjugacy_orbit(rep: MonodromyRep) -> set[MonodromyRep]:
    return {rep.conjugate(Permutation(images)) for images in itertools.permutations(range(rep.n))}


def enumerate_reps(fan, n: int, up_to_conjugacy: bool = True, max_degree: int = MAX_ENUM_DEGREE) -> list[EnumeratedRep]:
    """
    Every transitive representation of degree n satisfying the fan relations.

    The meridian image is fixed to one permutation per cycle type, which
    meets every conjugacy class; the dual generators are swept exhaustively.
    """
    if n < 1:
        raise ParseError(f"degree must be positive, got {n}")
    if n > max_degree:
        raise DegreeTooLarge(f"degree {n} exceeds the enumeration bound {max_degree}")

    all_perms = [Permutation(images) for images in itertools.permutations(range(n))]
    duals = [dual.name for dual in fan.duals]
    found: dict[tuple[int, ...], MonodromyRep] = {}
    checked = 0
    for partition in _partitions(n):
        meridian = _perm_of_type(partition)
        for images in itertools.product(all_perms, repeat=len(duals)):
            checked += 1
            rep = MonodromyRep(n, ((fan.meridian, meridian),) + tuple(zip(duals, images)))
            if not all(evaluate_word(word, rep).is_identity() for word in fan.relations):
                continue
            if len(orbits(rep.perms, n)) != 1:
                continue
            canonical = canonical_rep(rep)
            found.setdefault(canonical.key(), canonical)

    if up_to_conjugacy:
        reps = list(found.values())
    else:
        reps = {member for rep in found.values() for member in conjugacy_orbit(rep)}
    reps = sorted(reps, key=MonodromyRep.key)
    logger.info(f"Enumerated degree {n}: {checked} candidates, {len(found)} classes, {len(reps)} returned")
    return [EnumeratedRep(rep, validate_rep(fan, rep)) for rep in reps]
