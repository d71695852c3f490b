# algebra/freealg.py
"""
Path Algebra Elements

Finite linear combinations of paths with coefficients in an exact sympy domain,
plus tips, monic normalization and reduction by a set of uniform elements.

Features:
- Immutable AlgebraElement with a zero-free term mapping
- Concatenation product (mismatched endpoints give zero)
- Uniform / homogeneous predicates and splitting by vertex idempotents
- Tip and monic relative to an admissible order plugin
- Reduction with an optional rewrite trace and two site-selection policies

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import logging
from types import MappingProxyType
from typing import Any, Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from algebra.errors import NonUniformError, ZeroElementError
from algebra.quiver import Path, Quiver, find_offsets
from plugins.plugin_interface import AdmissibleOrder

logger = logging.getLogger(__name__)

SITE_LEFTMOST_LARGEST = "leftmost_largest"
SITE_RIGHTMOST_SMALLEST = "rightmost_smallest"


class AlgebraElement:
    """
    Σ c_i·p_i over distinct paths p_i, every c_i nonzero. The empty sum is zero.
    """

    __slots__ = ("quiver", "domain", "_terms")

    def __init__(self, quiver: Quiver, domain: Any, terms: Optional[Mapping[Path, Any]] = None):
        self.quiver = quiver
        self.domain = domain
        clean: Dict[Path, Any] = {}
        for path, coeff in (terms or {}).items():
            if not domain.is_zero(coeff):
                clean[path] = coeff
        self._terms = clean

    @classmethod
    def from_path(cls, path: Path, domain: Any, coeff: Any = None) -> "AlgebraElement":
        return cls(path.quiver, domain, {path: domain.one if coeff is None else coeff})

    @classmethod
    def zero(cls, quiver: Quiver, domain: Any) -> "AlgebraElement":
        return cls(quiver, domain, {})

    @property
    def terms(self) -> Mapping[Path, Any]:
        return MappingProxyType(self._terms)

    @property
    def support(self) -> List[Path]:
        return list(self._terms)

    def coefficient(self, path: Path) -> Any:
        return self._terms.get(path, self.domain.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"AlgebraElement({self.format()})"

    def format(self, order: Optional[AdmissibleOrder] = None) -> str:
        if not self._terms:
            return "0"
        paths = order.descending(self._terms) if order else sorted(self._terms, key=lambda p: (p.length, p.word, p.vertex or 0))
        parts = []
        for p in paths:
            c = self.domain.to_sympy(self._terms[p])
            parts.append(str(p) if c == 1 else f"({c})*{p}")
        return " + ".join(parts)

    # --- linear structure ---

    def _combine(self, other: "AlgebraElement", sign: int) -> "AlgebraElement":
        terms = dict(self._terms)
        for p, c in other._terms.items():
            terms[p] = terms.get(p, self.domain.zero) + (c if sign > 0 else -c)
        return AlgebraElement(self.quiver, self.domain, terms)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self._combine(other, 1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self._combine(other, -1)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.quiver, self.domain, {p: -c for p, c in self._terms.items()})

    def scale(self, coeff: Any) -> "AlgebraElement":
        return AlgebraElement(self.quiver, self.domain, {p: c * coeff for p, c in self._terms.items()})

    # --- multiplicative structure ---

    def left_multiply(self, path: Path) -> "AlgebraElement":
        """path·self; terms whose source differs from path's target vanish."""
        terms = {}
        for p, c in self._terms.items():
            if path.target == p.source:
                terms[path * p] = c
        return AlgebraElement(self.quiver, self.domain, terms)

    def right_multiply(self, path: Path) -> "AlgebraElement":
        terms = {}
        for p, c in self._terms.items():
            if p.target == path.source:
                terms[p * path] = c
        return AlgebraElement(self.quiver, self.domain, terms)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        terms: Dict[Path, Any] = {}
        for p, c in self._terms.items():
            for q, d in other._terms.items():
                if p.target == q.source:
                    pq = p * q
                    terms[pq] = terms.get(pq, self.domain.zero) + c * d
        return AlgebraElement(self.quiver, self.domain, terms)

    # --- predicates ---

    def is_uniform(self) -> bool:
        ends = {(p.source, p.target) for p in self._terms}
        return len(ends) <= 1

    def is_homogeneous(self) -> bool:
        return len({p.length for p in self._terms}) <= 1

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ZeroElementError("The zero element has no degree")
        return max(p.length for p in self._terms)

    def uniform_components(self) -> List["AlgebraElement"]:
        """Split into v·x·w over vertex pairs (v, w); zero parts are dropped."""
        buckets: Dict[Tuple[int, int], Dict[Path, Any]] = {}
        for p, c in self._terms.items():
            buckets.setdefault((p.source, p.target), {})[p] = c
        return [AlgebraElement(self.quiver, self.domain, buckets[key]) for key in sorted(buckets)]

    def tip(self, order: AdmissibleOrder) -> Path:
        return tip(self, order)

    def monic(self, order: AdmissibleOrder) -> "AlgebraElement":
        return monic(self, order)


def compare(order: AdmissibleOrder, p: Path, q: Path) -> int:
    return order.compare(p, q)


def tip(x: AlgebraElement, order: AdmissibleOrder) -> Path:
    if x.is_zero():
        raise ZeroElementError("The zero element has no tip")
    return order.largest(x.support)


def monic(x: AlgebraElement, order: AdmissibleOrder) -> AlgebraElement:
    t = tip(x, order)
    return x.scale(x.domain.one / x.coefficient(t))


class Rewrite(NamedTuple):
    """One reduction step: c·left·G[index]·right was subtracted."""

    coeff: Any
    left: Path
    index: int
    right: Path


class _TipTable:
    """Monic reducers indexed by tip, tried largest tip first."""

    def __init__(self, basis: Sequence[AlgebraElement], order: AdmissibleOrder):
        self.entries: List[Tuple[Path, int, AlgebraElement]] = []
        for i, g in enumerate(basis):
            if g.is_zero():
                continue
            if not g.is_uniform():
                raise NonUniformError(f"Reducer {g} is not uniform")
            m = monic(g, order)
            self.entries.append((tip(m, order), i, m))
        self.entries.sort(key=lambda e: order.sort_key(e[0]), reverse=True)

    def site(self, path: Path, policy: str) -> Optional[Tuple[int, Path, int, AlgebraElement]]:
        entries = self.entries if policy == SITE_LEFTMOST_LARGEST else list(reversed(self.entries))
        for t, i, g in entries:
            offsets = find_offsets(path.word, t.word)
            if offsets:
                at = offsets[0] if policy == SITE_LEFTMOST_LARGEST else offsets[-1]
                return at, t, i, g
        return None


def reduce_with_trace(x: AlgebraElement, basis: Sequence[AlgebraElement], order: AdmissibleOrder,
                      policy: str = SITE_LEFTMOST_LARGEST) -> Tuple[AlgebraElement, List[Rewrite]]:
    """
    Normal form of x with respect to `basis` and the trace of rewrites, so that
    x − nf = Σ c·left·basis[index]·right.

    The order-largest reducible support path is rewritten first; within it the
    site is picked by `policy`.
    """
    table = _TipTable(basis, order)
    domain = x.domain
    todo: Dict[Path, Any] = dict(x.terms)
    done: Dict[Path, Any] = {}
    trace: List[Rewrite] = []
    while todo:
        path = order.largest(todo)
        coeff = todo.pop(path)
        found = table.site(path, policy) if path.length else None
        if found is None:
            done[path] = coeff
            continue
        at, t, index, g = found
        left = path.sub(0, at)
        right = path.sub(at + t.length)
        trace.append(Rewrite(coeff, left, index, right))
        for p, c in g.terms.items():
            if p == t:
                continue
            q = left * p * right
            value = todo.get(q, domain.zero) - coeff * c
            if domain.is_zero(value):
                todo.pop(q, None)
            else:
                todo[q] = value
    return AlgebraElement(x.quiver, domain, done), trace


def reduce(x: AlgebraElement, basis: Sequence[AlgebraElement], order: AdmissibleOrder,
           policy: str = SITE_LEFTMOST_LARGEST) -> AlgebraElement:
    return reduce_with_trace(x, basis, order, policy)[0]


def replay_trace(trace: Iterable[Rewrite], basis: Sequence[AlgebraElement], order: AdmissibleOrder,
                 quiver: Quiver, domain: Any) -> AlgebraElement:
    """Σ c·left·monic(basis[index])·right over a trace."""
    total = AlgebraElement.zero(quiver, domain)
    for step in trace:
        g = monic(basis[step.index], order)
        total = total + g.left_multiply(step.left).right_multiply(step.right).scale(step.coeff)
    return total
