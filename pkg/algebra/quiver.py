# algebra/quiver.py
"""
Quivers and Paths

Finite directed multigraphs and their paths. Paths are immutable, hashable and
compared structurally; words are read left to right in traversal order, so
`compose(p, q)` means "walk p, then walk q" and requires target(p) == source(q).

Features:
- Quiver validation (unique ids, non-empty vertex set, declared endpoints)
- Path construction from arrow names or compact text ("xyy", "a*b*c")
- Composition, subpath search (all offsets, proper-only variant)
- Overlap enumeration p·r = s·q and maximal overlaps relative to a relation set
- Enumeration of all paths of a given length

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

from algebra.errors import CompositionMismatchError, PreconditionError, QuiverError

logger = logging.getLogger(__name__)

ArrowSpec = Union[Tuple[str, str, str], Dict[str, str]]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


class Quiver:
    """
    A finite quiver with named vertices and arrows.

    Vertices and arrows are stored by declaration index; the index doubles as the
    default arrow priority for admissible orders.
    """

    def __init__(self, vertices: Sequence[str], arrows: Sequence[ArrowSpec]):
        if not vertices:
            raise QuiverError("A quiver needs at least one vertex.")
        self.vertices: Tuple[str, ...] = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError(f"Duplicate vertex ids in {list(self.vertices)}")
        self.vertex_index: Dict[str, int] = {v: i for i, v in enumerate(self.vertices)}

        parsed: List[Arrow] = []
        for spec in arrows:
            if isinstance(spec, dict):
                name, src, tgt = spec.get("name"), spec.get("source"), spec.get("target")
            else:
                try:
                    name, src, tgt = spec
                except (TypeError, ValueError):
                    raise QuiverError(f"Arrow spec must be (name, source, target), got {spec!r}")
            if name is None or src not in self.vertex_index or tgt not in self.vertex_index:
                raise QuiverError(f"Arrow {name!r} references undeclared endpoint ({src!r} -> {tgt!r})")
            parsed.append(Arrow(str(name), self.vertex_index[src], self.vertex_index[tgt]))
        self.arrows: Tuple[Arrow, ...] = tuple(parsed)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError(f"Duplicate arrow ids in {names}")
        self.arrow_index: Dict[str, int] = {a.name: i for i, a in enumerate(self.arrows)}
        self._outgoing: Dict[int, Tuple[int, ...]] = {
            v: tuple(i for i, a in enumerate(self.arrows) if a.source == v)
            for v in range(len(self.vertices))
        }
        self._compact = all(len(n) == 1 for n in names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.vertices, self.arrows))

    def __repr__(self) -> str:
        return f"Quiver(vertices={list(self.vertices)}, arrows={[a.name for a in self.arrows]})"

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)

    def outgoing(self, vertex: int) -> Tuple[int, ...]:
        return self._outgoing.get(vertex, ())

    # --- path construction ---

    def vertex_path(self, vertex: Union[str, int]) -> "Path":
        idx = self.vertex_index[vertex] if isinstance(vertex, str) else int(vertex)
        if not 0 <= idx < len(self.vertices):
            raise QuiverError(f"Unknown vertex {vertex!r}")
        return Path(self, (), idx)

    def path(self, *names: str) -> "Path":
        """Build a path of length ≥ 1 from arrow names, checking composability."""
        if not names:
            raise PreconditionError("Use vertex_path() for length-0 paths.")
        try:
            word = tuple(self.arrow_index[n] for n in names)
        except KeyError as e:
            raise QuiverError(f"Unknown arrow {e.args[0]!r}")
        return self.path_from_word(word)

    def path_from_word(self, word: Sequence[int]) -> "Path":
        word = tuple(word)
        for left, right in zip(word, word[1:]):
            if self.arrows[left].target != self.arrows[right].source:
                raise CompositionMismatchError(
                    f"Arrow {self.arrows[left].name} does not end where {self.arrows[right].name} starts"
                )
        return Path(self, word, None)

    def parse_path(self, text: str) -> "Path":
        """
        Parse compact path text. Separators '*' or whitespace split arrow names;
        without separators every character is an arrow name (single-letter quivers).
        A bare vertex id yields the trivial path at that vertex.
        """
        text = text.strip()
        if text in self.vertex_index and text not in self.arrow_index:
            return self.vertex_path(text)
        if "*" in text or any(ch.isspace() for ch in text):
            names = [t for t in text.replace("*", " ").split() if t]
        elif text in self.arrow_index:
            names = [text]
        else:
            names = list(text)
        return self.path(*names)

    def paths_of_length(self, length: int, source: Optional[int] = None) -> Iterator["Path"]:
        """All paths of the given length, optionally restricted to one source vertex."""
        starts = range(len(self.vertices)) if source is None else (source,)
        if length == 0:
            for v in starts:
                yield Path(self, (), v)
            return

        def extend(prefix: Tuple[int, ...], at: int) -> Iterator[Tuple[int, ...]]:
            if len(prefix) == length:
                yield prefix
                return
            for a in self.outgoing(at):
                yield from extend(prefix + (a,), self.arrows[a].target)

        for v in starts:
            for word in extend((), v):
                yield Path(self, word, None)

    def word_text(self, word: Sequence[int]) -> str:
        names = [self.arrows[a].name for a in word]
        return "".join(names) if self._compact else "*".join(names)


@dataclass(frozen=True)
class Path:
    """
    A path in a quiver: a tuple of arrow indices, or a vertex for length 0.

    Equality and hashing ignore the quiver reference.
    """

    quiver: Quiver = field(compare=False, hash=False, repr=False)
    word: Tuple[int, ...]
    vertex: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    @property
    def source(self) -> int:
        return self.vertex if not self.word else self.quiver.arrows[self.word[0]].source

    @property
    def target(self) -> int:
        return self.vertex if not self.word else self.quiver.arrows[self.word[-1]].target

    @property
    def source_name(self) -> str:
        return self.quiver.vertices[self.source]

    @property
    def target_name(self) -> str:
        return self.quiver.vertices[self.target]

    @property
    def arrow_names(self) -> List[str]:
        return [self.quiver.arrows[a].name for a in self.word]

    def __str__(self) -> str:
        if not self.word:
            return f"e_{self.quiver.vertices[self.vertex]}"
        return self.quiver.word_text(self.word)

    def sub(self, start: int, stop: Optional[int] = None) -> "Path":
        """Subpath word[start:stop]; empty slices become the vertex at that position."""
        stop = len(self.word) if stop is None else stop
        piece = self.word[start:stop]
        if piece:
            return Path(self.quiver, piece, None)
        if not self.word:
            return self
        at = self.quiver.arrows[self.word[start]].source if start < len(self.word) else self.target
        return Path(self.quiver, (), at)

    def __mul__(self, other: "Path") -> "Path":
        return compose(self, other)


def compose(p: Path, q: Path) -> Path:
    """p then q; trivial paths act as identities at their vertex."""
    if p.target != q.source:
        raise CompositionMismatchError(f"Cannot compose {p} (ends at {p.target_name}) with {q} (starts at {q.source_name})")
    if not p.word:
        return q
    if not q.word:
        return p
    return Path(p.quiver, p.word + q.word, None)


def find_offsets(word: Sequence[int], sub: Sequence[int]) -> List[int]:
    n, m = len(word), len(sub)
    if m == 0 or m > n:
        return []
    first = sub[0]
    sub = tuple(sub)
    return [i for i in range(n - m + 1) if word[i] == first and tuple(word[i:i + m]) == sub]


def subpath_offsets(q: Path, p: Path, proper: bool = False) -> List[int]:
    """
    Offsets i with p = r·q·s where ℓ(r) = i. With proper=True only occurrences
    with ℓ(r) ≥ 1 and ℓ(s) ≥ 1 are returned.
    """
    if q.length < 1:
        raise PreconditionError("Subpath search needs a path of length ≥ 1.")
    offsets = find_offsets(p.word, q.word)
    if proper:
        last = p.length - q.length
        offsets = [i for i in offsets if 1 <= i < last]
    return offsets


def is_subpath(q: Path, p: Path, proper: bool = False) -> bool:
    return bool(subpath_offsets(q, p, proper))


@dataclass(frozen=True)
class OverlapWitness:
    """p·r = s·q with ℓ(s) < ℓ(p); `amount` arrows of p and q coincide."""

    p: Path
    q: Path
    r: Path
    s: Path

    @property
    def amount(self) -> int:
        return self.p.length - self.s.length

    @property
    def word(self) -> Path:
        return compose(self.p, self.r)


def overlap_amounts(p_word: Sequence[int], q_word: Sequence[int]) -> List[int]:
    """Overlap sizes k with 1 ≤ k < min(ℓ(p), ℓ(q)) and suffix_k(p) == prefix_k(q), largest first."""
    top = min(len(p_word), len(q_word)) - 1
    p_word, q_word = tuple(p_word), tuple(q_word)
    return [k for k in range(top, 0, -1) if p_word[len(p_word) - k:] == q_word[:k]]


def overlaps(p: Path, q: Path) -> List[OverlapWitness]:
    """All proper overlaps p·r = s·q; full containment is never an overlap."""
    result = []
    for k in overlap_amounts(p.word, q.word):
        r = Path(p.quiver, q.word[k:], None)
        s = Path(p.quiver, p.word[:p.length - k], None)
        result.append(OverlapWitness(p, q, r, s))
    return result


def contains_any(word: Sequence[int], rho_words: Iterable[Tuple[int, ...]], proper: bool = False) -> bool:
    word = tuple(word)
    for t in rho_words:
        for i in find_offsets(word, t):
            if not proper or (i >= 1 and i + len(t) <= len(word) - 1):
                return True
    return False


def maximal_overlaps(t_prime: Path, t: Path, rho: Iterable[Path]) -> Set[Path]:
    """
    Overlap words t′·s = w·t (ℓ(w) ≥ 1, overlap amount ≥ 1) containing no element
    of `rho` as a proper subpath. Several amounts can qualify, so the result is a set.
    """
    rho_words = [x.word for x in rho]
    found: Set[Path] = set()
    for witness in overlaps(t_prime, t):
        candidate = witness.word
        if not contains_any(candidate.word, rho_words, proper=True):
            found.add(candidate)
    return found
