# algebra/chains.py
"""
Overlap Chains of a Monomial Relation Set

Builds the chain sets AP(0..n_max) indexing the projective summands of the
resolution of the vertex-simple modules over KΓ/⟨ρ⟩, grows every chain on the
left (a_n = r·a_{n−1}) and exposes the degree bookkeeping derived from them.

Features:
- build_chains(): levels 0 (vertices), 1 (arrows), 2 (ρ) and n ≥ 3 by left extension
- Each chain records its parent, the prefix r and the relation heading it
- Degree table (source vertex, word length) per level
- Admissible sequences and global-dimension detection
- Cross-check of level 3 against pairwise maximal overlaps

Level n ≥ 3 rule: with a_{n−1} = s·a_{n−2}, a prefix r extends a_{n−1} when
r·s = a₂·s′ for some a₂ ∈ ρ with 1 ≤ ℓ(r) < ℓ(a₂), and a₂ is the only
occurrence of an element of ρ inside the segment r·s.

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set, Tuple

from algebra.errors import PreconditionError
from algebra.groebner import TipSet
from algebra.quiver import Path, find_offsets, maximal_overlaps

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chain:
    """One element of AP(level) with its unique left factorization."""

    word: Path
    level: int
    prefix: Optional[Path] = field(default=None, compare=False)
    parent: Optional["Chain"] = field(default=None, compare=False, repr=False)
    head: Optional[Path] = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return self.word.length

    @property
    def source_name(self) -> str:
        return self.word.source_name

    def __str__(self) -> str:
        return str(self.word)


class ChainTable:
    """AP(0..n_max) for one tip set; `levels[n]` is sorted by (length, word)."""

    def __init__(self, rho: TipSet, n_max: int, levels: Dict[int, List[Chain]],
                 max_length: Optional[int] = None, capped: bool = False):
        self.rho = rho
        self.quiver = rho.quiver
        self.n_max = n_max
        self.levels = levels
        self.max_length = max_length
        self.capped = capped

    def level(self, n: int) -> List[Chain]:
        if n < 0 or n > self.n_max:
            raise PreconditionError(f"Level {n} outside 0..{self.n_max}")
        return self.levels.get(n, [])

    def words(self, n: int) -> Set[Path]:
        return {c.word for c in self.level(n)}

    def lengths(self, n: int) -> List[int]:
        return sorted(c.length for c in self.level(n))

    def __iter__(self) -> Iterator[Chain]:
        for n in range(self.n_max + 1):
            yield from self.level(n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainTable):
            return NotImplemented
        return (self.rho == other.rho and self.n_max == other.n_max and self.capped == other.capped
                and all(self.level(n) == other.level(n) for n in range(self.n_max + 1)))


def _sort_key(chain: Chain) -> Tuple:
    return (chain.length, chain.word.word, chain.word.vertex if chain.word.vertex is not None else -1)


def _segment_is_clean(segment: Tuple[int, ...], rho_words: Tuple[Tuple[int, ...], ...]) -> bool:
    """No element of ρ occurs in `segment` except at offset 0."""
    for t in rho_words:
        if any(i >= 1 for i in find_offsets(segment, t)):
            return False
    return True


def extend_chain(parent: Chain, rho: TipSet) -> List[Chain]:
    """All left extensions r·parent admitted by the level n ≥ 3 rule."""
    quiver = rho.quiver
    s = parent.prefix.word
    rho_words = rho.words
    found: List[Chain] = []
    for a2 in rho.paths:
        t = a2.word
        for cut in range(1, len(t)):
            rest = t[cut:]
            if len(rest) > len(s) or s[:len(rest)] != rest:
                continue
            r = t[:cut]
            if not _segment_is_clean(r + s, rho_words):
                continue
            word = quiver.path_from_word(r + parent.word.word)
            found.append(Chain(word, parent.level + 1, Path(quiver, r, None), parent, a2))
    return found


def build_chains(rho: TipSet, n_max: int, max_length: Optional[int] = None) -> ChainTable:
    """
    AP(0..n_max). With `max_length`, chains longer than the cap are dropped;
    since words only grow, every kept level is exact up to the cap.
    """
    if n_max < 0:
        raise PreconditionError("n_max must be ≥ 0")
    quiver = rho.quiver
    levels: Dict[int, List[Chain]] = {}
    capped = False

    vertices = [Chain(quiver.vertex_path(i), 0) for i in range(quiver.vertex_count)]
    levels[0] = vertices
    if n_max >= 1:
        levels[1] = sorted(
            (Chain(quiver.path_from_word((i,)), 1, quiver.path_from_word((i,)), vertices[a.target])
             for i, a in enumerate(quiver.arrows)),
            key=_sort_key,
        )
    if n_max >= 2:
        arrows = {c.word.word[0]: c for c in levels[1]}
        level2 = []
        for p in rho.paths:
            level2.append(Chain(p, 2, p.sub(0, p.length - 1), arrows[p.word[-1]], p))
        levels[2] = sorted(level2, key=_sort_key)

    for n in range(3, n_max + 1):
        seen: Dict[Path, Chain] = {}
        for parent in levels[n - 1]:
            for chain in extend_chain(parent, rho):
                if max_length is not None and chain.length > max_length:
                    capped = True
                    continue
                if chain.word in seen:
                    logger.warning(f"AP({n}) word {chain.word} reached from two parents")
                    continue
                seen[chain.word] = chain
        levels[n] = sorted(seen.values(), key=_sort_key)
        logger.debug(f"AP({n}): {len(levels[n])} chains")
        if not levels[n]:
            for m in range(n + 1, n_max + 1):
                levels[m] = []
            break

    if max_length is not None:
        for n, chains in levels.items():
            kept = [c for c in chains if c.length <= max_length]
            capped = capped or len(kept) != len(chains)
            levels[n] = kept
    return ChainTable(rho, n_max, levels, max_length, capped)


def level_three_from_overlaps(rho: TipSet) -> Set[Path]:
    """Union of maximal_overlaps(t′, t, ρ) over ordered pairs of ρ."""
    words: Set[Path] = set()
    for t_prime in rho.paths:
        for t in rho.paths:
            words |= maximal_overlaps(t_prime, t, rho.paths)
    return words


def degree_table(table: ChainTable) -> Dict[int, Counter]:
    """Per level, multiset of (source vertex name, word length)."""
    return {
        n: Counter((c.source_name, c.length) for c in table.level(n))
        for n in range(table.n_max + 1)
    }


def admissible_sequence(chain: Chain) -> List[Path]:
    """(p_{n−1}, …, p₁): the relation heading each chain down to level 2."""
    if chain.level < 2:
        raise PreconditionError("Admissible sequences start at level 2")
    sequence: List[Path] = []
    current: Optional[Chain] = chain
    while current is not None and current.level >= 2:
        sequence.append(current.head)
        current = current.parent
    return sequence


def global_dimension_bound(table: ChainTable) -> Optional[int]:
    """n − 1 for the first empty level n, when one occurs within the table."""
    if table.capped:
        return None
    for n in range(table.n_max + 1):
        if not table.level(n):
            return n - 1
    return None
