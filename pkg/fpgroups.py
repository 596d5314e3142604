# fpgroups.py

"""
Finitely presented groups.

Words are tuples of nonzero ints: k stands for the k-th generator (1-based)
and -k for its inverse. Everything here is exact and deterministic.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from config import (
    HOM_COUNT_MAX_DEGREE,
    HOM_COUNT_MAX_GENERATORS,
    MAX_COSETS,
    TIETZE_MAX_PASSES,
    TIETZE_MAX_TOTAL_LENGTH,
)
from errors import CapacityError, InvalidN, ParseError
from utils import format_letters, iter_lines, parse_word_tokens, suggest

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


########################################################################
# Words
########################################################################

def inverse_word(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def free_reduce(word: Iterable[int]) -> Word:
    stack: list[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def cyclic_reduce(word: Iterable[int]) -> Word:
    reduced = free_reduce(word)
    start, end = 0, len(reduced)
    while end - start > 1 and reduced[start] == -reduced[end - 1]:
        start += 1
        end -= 1
    return reduced[start:end]


def canonical_relator(word: Iterable[int]) -> Word:
    """Smallest rotation of the cyclically reduced word or of its inverse."""
    reduced = cyclic_reduce(word)
    if not reduced:
        return ()
    candidates = []
    for candidate in (reduced, inverse_word(reduced)):
        candidates.extend(candidate[i:] + candidate[:i] for i in range(len(candidate)))
    return min(candidates)


def distinct_relators(relators: Iterable[Sequence[int]]) -> list[Word]:
    """Cyclically reduced relators, one per class up to rotation and inversion, first occurrence kept."""
    seen = {}
    for relator in relators:
        key = canonical_relator(relator)
        if key and key not in seen:
            seen[key] = cyclic_reduce(relator)
    return list(seen.values())


def exponent_sum(word: Iterable[int], generator: int) -> int:
    return sum(1 if x == generator else -1 for x in word if abs(x) == generator)


########################################################################
# Presentations
########################################################################

@dataclass(frozen=True)
class Presentation:
    name: str
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        count = len(self.generators)
        for relator in self.relators:
            for letter in relator:
                if letter == 0 or abs(letter) > count:
                    raise ValueError(f"relator letter {letter} does not name one of {count} generators")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def format_word(self, word: Sequence[int]) -> str:
        return format_letters((self.generators[abs(x) - 1], 1 if x > 0 else -1) for x in word)

    def distinct(self) -> "Presentation":
        return Presentation(self.name, self.generators, tuple(distinct_relators(self.relators)))

    def total_length(self) -> int:
        return sum(len(relator) for relator in self.relators)

    def to_text(self) -> str:
        lines = [f"group {self.name}", ' '.join(['gen', *self.generators]).rstrip()]
        lines.extend(f"rel {self.format_word(relator)}" for relator in self.relators if relator)
        return '\n'.join(lines) + '\n'


def parse_presentation(text: str) -> Presentation:
    name = None
    generators: list[str] = []
    relators = []
    for lineno, tokens in iter_lines(text):
        keyword = tokens[0]
        if keyword == 'group':
            if len(tokens) != 2:
                raise ParseError("expected 'group <name>'", lineno, 1)
            name = tokens[1]
        elif keyword == 'gen':
            for column, token in enumerate(tokens[1:], start=2):
                if token in generators:
                    raise ParseError(f"generator '{token}' declared twice", lineno, column)
                generators.append(token)
        elif keyword == 'rel':
            index = {gen: i for i, gen in enumerate(generators, start=1)}
            word = []
            for column, (gen, exponent) in enumerate(parse_word_tokens(tokens[1:], lineno), start=2):
                if gen not in index:
                    raise ParseError(f"unknown generator '{gen}'{suggest(gen, generators)}", lineno, column)
                word.append(exponent * index[gen])
            relators.append(tuple(word))
        else:
            raise ParseError(f"unknown keyword '{keyword}'{suggest(keyword, ['group', 'gen', 'rel'])}", lineno, 1)
    if name is None:
        raise ParseError("missing 'group <name>' line")
    return Presentation(name, tuple(generators), tuple(relators))


########################################################################
# Abelianization
########################################################################

@dataclass(frozen=True)
class AbelianInvariants:
    factors: tuple[int, ...]

    @property
    def free_rank(self) -> int:
        return sum(1 for factor in self.factors if factor == 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(factor for factor in self.factors if factor)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def __str__(self) -> str:
        return '[' + ', '.join(str(factor) for factor in self.factors) + ']'


def relation_matrix(pres: Presentation) -> np.ndarray:
    """Exponent-sum matrix (relators x generators) holding Python ints."""
    matrix = np.zeros((len(pres.relators), pres.rank), dtype=object)
    for row, relator in enumerate(pres.relators):
        for letter in relator:
            matrix[row, abs(letter) - 1] += 1 if letter > 0 else -1
    return matrix


def _smallest_entry(matrix: np.ndarray, t: int) -> Optional[tuple[int, int]]:
    best = None
    rows, cols = matrix.shape
    for i in range(t, rows):
        for j in range(t, cols):
            value = abs(matrix[i, j])
            if value and (best is None or value < best[0]):
                best = (value, i, j)
    return None if best is None else best[1:]


def smith_diagonal(matrix: np.ndarray) -> list[int]:
    """Diagonal of the Smith normal form; each entry divides the next."""
    a = np.array(matrix, dtype=object, copy=True)
    if a.size == 0:
        return []
    rows, cols = a.shape
    diagonal = []
    t = 0
    while t < min(rows, cols):
        pivot = _smallest_entry(a, t)
        if pivot is None:
            break
        i, j = pivot
        a[[t, i], :] = a[[i, t], :]
        a[:, [t, j]] = a[:, [j, t]]
        clean = True
        for r in range(t + 1, rows):
            if a[r, t]:
                a[r, :] = a[r, :] - (a[r, t] // a[t, t]) * a[t, :]
                clean = clean and a[r, t] == 0
        for c in range(t + 1, cols):
            if a[t, c]:
                a[:, c] = a[:, c] - (a[t, c] // a[t, t]) * a[:, t]
                clean = clean and a[t, c] == 0
        if not clean:
            continue
        stray = next(
            (r for r in range(t + 1, rows) for c in range(t + 1, cols) if a[r, c] % a[t, t]),
            None,
        )
        if stray is not None:
            a[t, :] = a[t, :] + a[stray, :]
            continue
        diagonal.append(abs(a[t, t]))
        t += 1
    return diagonal


def abelianization(pres: Presentation) -> AbelianInvariants:
    diagonal = smith_diagonal(relation_matrix(pres))
    torsion = tuple(d for d in diagonal if d != 1)
    return AbelianInvariants(torsion + (0,) * (pres.rank - len(diagonal)))


########################################################################
# Coset enumeration
########################################################################

@dataclass(frozen=True)
class CosetResult:
    outcome: str  # 'Finite' or 'Exceeded'
    value: int

    @property
    def finite(self) -> bool:
        return self.outcome == 'Finite'

    @property
    def order(self) -> Optional[int]:
        return self.value if self.finite else None

    def __str__(self) -> str:
        return f"{self.outcome}({self.value})"


class _Exceeded(Exception):
    pass


@dataclass
class _CosetTable:
    columns: int
    limit: int
    rows: list[list[Optional[int]]] = field(default_factory=list)
    parent: list[int] = field(default_factory=list)
    defined: int = 0

    def __post_init__(self):
        self.new_row()

    def new_row(self) -> int:
        if self.defined >= self.limit:
            raise _Exceeded()
        self.rows.append([None] * self.columns)
        self.parent.append(len(self.parent))
        self.defined += 1
        return len(self.rows) - 1

    def live(self, coset: int) -> bool:
        return self.parent[coset] == coset

    def find(self, coset: int) -> int:
        root = coset
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[coset] != root:
            self.parent[coset], coset = root, self.parent[coset]
        return root

    def define(self, coset: int, column: int) -> None:
        new = self.new_row()
        self.rows[coset][column] = new
        self.rows[new][column ^ 1] = coset

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.find(k), self.find(l)
        if k == l:
            return
        low, high = min(k, l), max(k, l)
        self.parent[high] = low
        queue.append(high)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            dead = queue[i]
            i += 1
            for column in range(self.columns):
                target = self.rows[dead][column]
                if target is None:
                    continue
                self.rows[target][column ^ 1] = None
                e, f = self.find(dead), self.find(target)
                if self.rows[e][column] is not None:
                    self._merge(f, self.rows[e][column], queue)
                elif self.rows[f][column ^ 1] is not None:
                    self._merge(e, self.rows[f][column ^ 1], queue)
                else:
                    self.rows[e][column] = f
                    self.rows[f][column ^ 1] = e

    def scan_and_fill(self, coset: int, word: Sequence[int]) -> None:
        rows = self.rows
        forward, backward = coset, coset
        i, j = 0, len(word) - 1
        while True:
            while i <= j and rows[forward][word[i]] is not None:
                forward = rows[forward][word[i]]
                i += 1
            if i > j:
                if forward != backward:
                    self.coincidence(forward, backward)
                return
            while j >= i and rows[backward][word[j] ^ 1] is not None:
                backward = rows[backward][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(forward, backward)
                return
            if i == j:
                rows[forward][word[i]] = backward
                rows[backward][word[i] ^ 1] = forward
                return
            self.define(forward, word[i])


def _column(letter: int) -> int:
    return 2 * (abs(letter) - 1) + (1 if letter < 0 else 0)


def todd_coxeter(pres: Presentation, max_cosets: int = MAX_COSETS) -> CosetResult:
    """HLT enumeration of the cosets of the trivial subgroup, with at most `max_cosets` cosets ever defined."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    words = [[_column(x) for x in relator] for relator in distinct_relators(pres.relators)]
    table = _CosetTable(2 * pres.rank, max_cosets)
    try:
        coset = 0
        while coset < len(table.rows):
            if table.live(coset):
                for word in words:
                    table.scan_and_fill(coset, word)
                    if not table.live(coset):
                        break
                if table.live(coset):
                    for column in range(table.columns):
                        if table.rows[coset][column] is None:
                            table.define(coset, column)
            coset += 1
    except _Exceeded:
        logger.debug(f"Coset enumeration for '{pres.name}' exceeded {max_cosets} cosets")
        return CosetResult('Exceeded', max_cosets)
    order = sum(1 for c in range(len(table.rows)) if table.live(c))
    logger.debug(f"Coset enumeration for '{pres.name}' closed with {order} cosets ({table.defined} defined)")
    return CosetResult('Finite', order)


########################################################################
# Tietze transformations
########################################################################

def _eliminable(relators: list[Word]) -> Optional[tuple[int, int]]:
    """(relator index, generator) for the shortest relator holding a generator exactly once."""
    for index in sorted(range(len(relators)), key=lambda r: (len(relators[r]), r)):
        counts: dict[int, int] = {}
        for letter in relators[index]:
            counts[abs(letter)] = counts.get(abs(letter), 0) + 1
        once = sorted(gen for gen, count in counts.items() if count == 1)
        if once:
            return index, once[0]
    return None


def _solve_for(relator: Word, generator: int) -> Word:
    """Word equal to `generator` in the group, read off a relator where it occurs once."""
    position = next(i for i, x in enumerate(relator) if abs(x) == generator)
    rotated = relator[position:] + relator[:position]
    rest = rotated[1:]
    return inverse_word(rest) if rotated[0] > 0 else rest


def _substitute(word: Word, generator: int, value: Word) -> Word:
    result = []
    for letter in word:
        if letter == generator:
            result.extend(value)
        elif letter == -generator:
            result.extend(inverse_word(value))
        else:
            result.append(letter)
    return free_reduce(result)


def _drop_generator(word: Word, generator: int) -> Word:
    return tuple(x - 1 if x > generator else x + 1 if x < -generator else x for x in word)


def tietze_simplify(
    pres: Presentation,
    max_total_length: int = TIETZE_MAX_TOTAL_LENGTH,
    max_passes: int = TIETZE_MAX_PASSES,
) -> Presentation:
    generators = list(pres.generators)
    relators = distinct_relators(pres.relators)
    for step in range(max_passes):
        found = _eliminable(relators)
        if found is None:
            break
        index, generator = found
        value = _solve_for(relators[index], generator)
        rest = [_substitute(r, generator, value) for i, r in enumerate(relators) if i != index]
        if sum(len(r) for r in rest) > max_total_length:
            logger.debug(f"Tietze pass {step} stopped: eliminating {generators[generator - 1]} exceeds length {max_total_length}")
            break
        logger.debug(f"Tietze pass {step}: eliminated {generators[generator - 1]}")
        relators = distinct_relators(_drop_generator(r, generator) for r in rest)
        del generators[generator - 1]
    return Presentation(pres.name, tuple(generators), tuple(relators))


########################################################################
# Homomorphism counts
########################################################################

def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[x] for x in p)


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    result = [0] * len(p)
    for i, x in enumerate(p):
        result[x] = i
    return tuple(result)


def _holds(relator: Word, images: list[tuple[int, ...]], inverses: list[tuple[int, ...]], k: int) -> bool:
    for start in range(k):
        point = start
        for letter in relator:
            point = images[letter - 1][point] if letter > 0 else inverses[-letter - 1][point]
        if point != start:
            return False
    return True


def hom_count(
    pres: Presentation,
    k: int,
    max_degree: int = HOM_COUNT_MAX_DEGREE,
    max_generators: int = HOM_COUNT_MAX_GENERATORS,
) -> int:
    """Number of homomorphisms into the symmetric group on k points."""
    if k < 1:
        raise ValueError("degree must be positive")
    if k > max_degree:
        raise CapacityError(f"hom_count degree {k} exceeds {max_degree}")
    simplified = tietze_simplify(pres)
    if simplified.rank > max_generators:
        raise CapacityError(f"hom_count needs at most {max_generators} generators, '{pres.name}' simplifies to {simplified.rank}")

    # relators checked as soon as their largest generator is assigned
    due: dict[int, list[Word]] = {}
    for relator in simplified.relators:
        due.setdefault(max(abs(x) for x in relator), []).append(relator)
    elements = list(itertools.permutations(range(k)))
    images: list[tuple[int, ...]] = []
    inverses: list[tuple[int, ...]] = []

    def extend(depth: int) -> int:
        if depth == simplified.rank:
            return 1
        total = 0
        for element in elements:
            images.append(element)
            inverses.append(_invert(element))
            if all(_holds(r, images, inverses, k) for r in due.get(depth + 1, [])):
                total += extend(depth + 1)
            images.pop()
            inverses.pop()
        return total

    count = extend(0)
    logger.debug(f"hom_count('{pres.name}', {k}) = {count}")
    return count


########################################################################
# Sieradski presentations
########################################################################

def sieradski(n: int) -> Presentation:
    """Generators g1..gn with g_i = g_{i-1} g_{i+1}, indices mod n."""
    if n < 2:
        raise InvalidN(f"Sieradski presentations need n >= 2, got {n}")
    relators = []
    for i in range(1, n + 1):
        before = (i - 2) % n + 1
        after = i % n + 1
        relators.append((before, after, -i))
    return Presentation(f"sieradski_{n}", tuple(f"g{i}" for i in range(1, n + 1)), tuple(relators))


def match_sieradski(pres: Presentation) -> Optional[int]:
    """n when the presentation is sieradski(n) up to an index shift or reversal of its generators."""
    n = pres.rank
    relators = distinct_relators(pres.relators)
    if n < 2 or len(relators) != n:
        return None
    target = {canonical_relator(r) for r in sieradski(n).relators}
    for shift in range(n):
        for direction in (1, -1):
            # generator at position shift + direction*(i-1) plays g_i
            relabel = {(shift + direction * (i - 1)) % n + 1: i for i in range(1, n + 1)}
            renamed = {
                canonical_relator(tuple(relabel[abs(x)] * (1 if x > 0 else -1) for x in r))
                for r in relators
            }
            if renamed == target:
                return n
    return None


########################################################################
# Fingerprints
########################################################################

def fingerprint(pres: Presentation, degrees: Sequence[int] = (2, 3, 4), max_cosets: int = MAX_COSETS) -> dict:
    """Isomorphism invariants: bounded order, abelian invariants and hom counts."""
    return {
        'order': str(todd_coxeter(pres, max_cosets)),
        'abelian': str(abelianization(pres)),
        'homs': {k: hom_count(pres, k) for k in degrees},
    }
