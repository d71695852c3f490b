# algebra/groebner.py
"""
Groebner Bases in Path Algebras

Degree-bounded completion of homogeneous uniform generators into the reduced
Groebner basis, together with tip sets (monomial anti-chains) and degree
stratification.

Features:
- TipSet: validated anti-chain of paths of length ≥ 2
- buchberger(): overlap-driven completion, processed one degree at a time
  (FIFO by creation within a degree, full inter-reduction after each level)
- Optional worker threads reducing one degree level against a frozen snapshot
- Completeness flag: False when a nonzero overlap element lies beyond the bound
- tip_ideal() and stratify_by_degree() helpers

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from algebra.errors import (
    InhomogeneousInputError,
    PreconditionError,
    QuiverError,
)
from algebra.freealg import AlgebraElement, monic, reduce, tip
from algebra.quiver import Path, Quiver, find_offsets, overlaps
from plugins.plugin_interface import AdmissibleOrder

logger = logging.getLogger(__name__)


class TipSet:
    """An anti-chain of paths of length ≥ 2 (no element is a subpath of another)."""

    def __init__(self, quiver: Quiver, paths: Iterable[Path]):
        self.quiver = quiver
        unique = sorted(set(paths), key=lambda p: (p.length, p.word))
        for p in unique:
            if p.length < 2:
                raise PreconditionError(f"Relation {p} has length < 2")
        for p in unique:
            for q in unique:
                if q is not p and q.length <= p.length and q != p and find_offsets(p.word, q.word):
                    raise PreconditionError(f"{q} is a subpath of {p}: not an anti-chain")
        self.paths: Tuple[Path, ...] = tuple(unique)

    @classmethod
    def minimal(cls, quiver: Quiver, paths: Iterable[Path]) -> "TipSet":
        """Keep only the paths containing no other given path."""
        unique = sorted(set(paths), key=lambda p: (p.length, p.word))
        kept: List[Path] = []
        for p in unique:
            if not any(find_offsets(p.word, q.word) for q in kept):
                kept.append(p)
        return cls(quiver, kept)

    @property
    def words(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(p.word for p in self.paths)

    def degrees(self) -> List[int]:
        return sorted({p.length for p in self.paths})

    def stratum(self, degree: int) -> "TipSet":
        return TipSet(self.quiver, [p for p in self.paths if p.length == degree])

    @property
    def max_degree(self) -> int:
        return max((p.length for p in self.paths), default=0)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def __contains__(self, path: object) -> bool:
        return path in self.paths

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TipSet) and self.paths == other.paths

    def __repr__(self) -> str:
        return f"TipSet({[str(p) for p in self.paths]})"

    def as_elements(self, domain: Any) -> List[AlgebraElement]:
        return [AlgebraElement.from_path(p, domain) for p in self.paths]


@dataclass(frozen=True)
class GroebnerBasis:
    """
    Reduced, monic, uniform basis valid up to `valid_to_degree`. `complete` is
    True only when no nonzero overlap element exists beyond that degree.
    """

    quiver: Quiver
    domain: Any
    order: AdmissibleOrder
    elements: Tuple[AlgebraElement, ...]
    valid_to_degree: int
    complete: bool

    def __iter__(self) -> Iterator[AlgebraElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def tips(self) -> List[Path]:
        return [tip(g, self.order) for g in self.elements]

    @property
    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self.elements)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.elements), default=0)


def _prepare(generators: Iterable[AlgebraElement], order: AdmissibleOrder) -> List[AlgebraElement]:
    prepared: List[AlgebraElement] = []
    seen = set()
    for x in generators:
        if x.is_zero():
            continue
        if x.quiver != order.quiver:
            raise QuiverError("Generator and order belong to different quivers")
        if not x.is_homogeneous():
            raise InhomogeneousInputError(f"Relation {x.format(order)} is not length-homogeneous")
        if x.degree < 2:
            raise PreconditionError(f"Relation {x.format(order)} does not lie in J^2 (degree {x.degree})")
        for part in x.uniform_components():
            m = monic(part, order)
            if m not in seen:
                seen.add(m)
                prepared.append(m)
    return prepared


def s_element(f: AlgebraElement, g: AlgebraElement, r: Path, s: Path) -> AlgebraElement:
    """f·r − s·g for the overlap tip(f)·r = s·tip(g)."""
    return f.right_multiply(r) - g.left_multiply(s)


def _tail_reduce(group: List[AlgebraElement], fixed: List[AlgebraElement], order: AdmissibleOrder) -> List[AlgebraElement]:
    # Same-degree elements, smallest tip first: each tail only meets already-reduced tips.
    group = sorted(group, key=lambda g: order.sort_key(tip(g, order)))
    done: List[AlgebraElement] = []
    for g in group:
        t = tip(g, order)
        head = AlgebraElement.from_path(t, g.domain)
        tail = g - head
        done.append(head + reduce(tail, fixed + done, order))
    return done


def _reduce_level(batch: List[AlgebraElement], snapshot: List[AlgebraElement],
                  order: AdmissibleOrder, workers: int) -> List[AlgebraElement]:
    if workers <= 1 or len(batch) < 2:
        return [reduce(h, snapshot, order) for h in batch]
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="GroebnerWorker") as pool:
        return list(pool.map(lambda h: reduce(h, snapshot, order), batch))


def buchberger(generators: Iterable[AlgebraElement], order: AdmissibleOrder, max_degree: int,
               workers: int = 1, domain: Any = None) -> GroebnerBasis:
    """
    Complete `generators` to the reduced Groebner basis truncated at `max_degree`.

    Generators must be homogeneous and lie in J²; non-uniform ones are split by
    vertex idempotents first.
    """
    quiver = order.quiver
    generators = list(generators)
    if domain is None:
        domain = generators[0].domain if generators else QQ
    prepared = _prepare(generators, order)

    creation = itertools.count()
    pending: Dict[int, List[Tuple[int, AlgebraElement]]] = {}
    overflow: List[AlgebraElement] = []
    for g in prepared:
        if g.degree > max_degree:
            overflow.append(g)
        else:
            pending.setdefault(g.degree, []).append((next(creation), g))

    basis: List[AlgebraElement] = []
    for degree in range(2, max_degree + 1):
        batch = [h for _, h in sorted(pending.pop(degree, []), key=lambda item: item[0])]
        if not batch:
            continue
        snapshot = list(basis)
        reduced = _reduce_level(batch, snapshot, order, workers)

        fresh: List[AlgebraElement] = []
        for h in reduced:
            h = reduce(h, fresh, order)
            if h:
                fresh.append(monic(h, order))
        if not fresh:
            logger.debug(f"Degree {degree}: {len(batch)} candidates, all reduced to zero")
            continue
        fresh = _tail_reduce(fresh, snapshot, order)
        basis = snapshot + fresh
        logger.debug(f"Degree {degree}: {len(batch)} candidates, {len(fresh)} new basis elements")

        new_ids = set(range(len(snapshot), len(basis)))
        tips = [tip(g, order) for g in basis]
        for i, j in itertools.product(range(len(basis)), repeat=2):
            if i not in new_ids and j not in new_ids:
                continue
            for w in overlaps(tips[i], tips[j]):
                s = s_element(basis[i], basis[j], w.r, w.s)
                if s.is_zero():
                    continue
                target = w.p.length + w.r.length
                if target > max_degree:
                    overflow.append(s)
                else:
                    pending.setdefault(target, []).append((next(creation), s))

    complete = all(reduce(h, basis, order).is_zero() for h in overflow)
    if not complete:
        logger.info(f"Groebner basis truncated at degree {max_degree}; overlap elements remain beyond the bound")
    basis.sort(key=lambda g: order.sort_key(tip(g, order)))
    return GroebnerBasis(quiver, domain, order, tuple(basis), max_degree, complete)


def tip_ideal(basis: GroebnerBasis) -> TipSet:
    return TipSet(basis.quiver, basis.tips)


def stratify_by_degree(basis: GroebnerBasis) -> Dict[int, List[AlgebraElement]]:
    strata: Dict[int, List[AlgebraElement]] = {}
    for g in basis.elements:
        strata.setdefault(g.degree, []).append(g)
    return dict(sorted(strata.items()))
