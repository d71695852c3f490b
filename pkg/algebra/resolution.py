# algebra/resolution.py
"""
Resolution Degree Tables

Two independent routes to the graded Betti data of the vertex-simple modules
Λ₀ over Λ = KΓ/I:

- combinatorial: the chain table of the tip set (exact for monomial algebras,
  an upper bound in general), with its explicit monomial differential;
- linear-algebraic (the oracle): a minimal graded projective resolution built
  degree by degree from exact kernels over normal-word bases. It never looks
  at chain data.

Modules are left Λ-modules. A generator sitting at vertex v spans Λ·v, whose
degree-k part has the normal words ending at v as basis; the generator's own
vertex is the source of the paths in its image.

Features:
- NormalBasis enumeration indexed by (source, target, degree)
- QuotientAlgebra multiplication of normal words (monomial or via reduction)
- BettiTable with truncation flags, comparison and sub-multiset checks
- oracle_resolution() with deterministic generator choice (largest word pivots first)
- monomial_differential() and verify_differential() (d∘d = 0)

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ

from algebra.chains import Chain, ChainTable, degree_table
from algebra.errors import IncompleteGroebnerError, PreconditionError
from algebra.freealg import AlgebraElement, reduce
from algebra.groebner import GroebnerBasis, TipSet, tip_ideal
from algebra.linalg import kernel_basis, pivot_columns
from algebra.quiver import Path, Quiver, find_offsets
from plugins.orders.deglex_order import DeglexOrder
from plugins.plugin_interface import AdmissibleOrder

logger = logging.getLogger(__name__)

METHOD_CHAINS = "chains"
METHOD_ORACLE = "oracle"


class NormalBasis:
    """All paths of length ≤ max_degree avoiding every tip as a subpath."""

    def __init__(self, quiver: Quiver, tips: TipSet, max_degree: int):
        self.quiver = quiver
        self.tips = tips
        self.max_degree = max_degree
        self._index: Dict[Tuple[int, int, int], List[Path]] = {}
        self._normal: set = set()
        tip_words = tips.words
        layer = [quiver.vertex_path(v) for v in range(quiver.vertex_count)]
        self._store(layer, 0)
        for degree in range(1, max_degree + 1):
            nxt = []
            for w in layer:
                for a in quiver.outgoing(w.target):
                    word = w.word + (a,)
                    if any(len(t) <= len(word) and word[len(word) - len(t):] == t for t in tip_words):
                        continue
                    nxt.append(Path(quiver, word, None))
            self._store(nxt, degree)
            layer = nxt
            if not layer:
                break

    def _store(self, paths: List[Path], degree: int) -> None:
        for p in sorted(paths, key=lambda p: p.word):
            self._index.setdefault((p.source, p.target, degree), []).append(p)
            self._normal.add(p)

    def words(self, degree: int, source: Optional[int] = None, target: Optional[int] = None) -> List[Path]:
        if degree > self.max_degree:
            raise PreconditionError(f"Degree {degree} beyond the basis cap {self.max_degree}")
        if source is not None and target is not None:
            return list(self._index.get((source, target, degree), []))
        found = []
        for (s, t, d), paths in sorted(self._index.items()):
            if d == degree and (source is None or s == source) and (target is None or t == target):
                found.extend(paths)
        return found

    def is_normal(self, path: Path) -> bool:
        if path.length <= self.max_degree:
            return path in self._normal
        return not any(find_offsets(path.word, t) for t in self.tips.words)

    def dimension(self, degree: int) -> int:
        return len(self.words(degree))

    def top_degree(self) -> Optional[int]:
        """L when Λ_L ≠ 0 = Λ_{L+1} within the cap, else None."""
        for degree in range(1, self.max_degree + 1):
            if not self.words(degree):
                return degree - 1
        return None


def normal_words(rho_or_G: Union[TipSet, GroebnerBasis], max_degree: int) -> NormalBasis:
    tips = tip_ideal(rho_or_G) if isinstance(rho_or_G, GroebnerBasis) else rho_or_G
    return NormalBasis(tips.quiver, tips, max_degree)


class QuotientAlgebra:
    """Λ truncated at max_degree, multiplying normal words into normal forms."""

    def __init__(self, algebra: Union[GroebnerBasis, TipSet], max_degree: int,
                 domain: Any = None, order: Optional[AdmissibleOrder] = None):
        if isinstance(algebra, GroebnerBasis):
            self.tips = tip_ideal(algebra)
            self.elements = list(algebra.elements)
            self.order = algebra.order
            self.domain = algebra.domain
            self.monomial = algebra.is_monomial
        else:
            self.tips = algebra
            self.elements = []
            self.order = order or DeglexOrder(algebra.quiver)
            self.domain = domain or QQ
            self.monomial = True
        self.quiver = self.tips.quiver
        self.basis = NormalBasis(self.quiver, self.tips, max_degree)
        self._cache: Dict[Tuple[Tuple[int, ...], Path], Dict[Path, Any]] = {}

    def product(self, x: Path, y: Path) -> Dict[Path, Any]:
        """Normal form of x·y for normal x, y with target(x) = source(y)."""
        if not x.word:
            return {y: self.domain.one}
        key = (x.word, y)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        xy = x * y
        if self.monomial:
            result = {xy: self.domain.one} if self.basis.is_normal(xy) else {}
        else:
            result = dict(reduce(AlgebraElement.from_path(xy, self.domain), self.elements, self.order).terms)
        self._cache[key] = result
        return result


@dataclass
class BettiRow:
    n: int
    entries: Counter = field(default_factory=Counter)
    truncated: bool = False

    def degrees(self) -> List[int]:
        return sorted(d for (_, d), m in self.entries.items() for _ in range(m))

    def restricted(self, max_degree: Optional[int]) -> Counter:
        if max_degree is None:
            return Counter(self.entries)
        return Counter({k: m for k, m in self.entries.items() if k[1] <= max_degree})


@dataclass
class BettiTable:
    method: str
    max_degree: Optional[int]
    rows: List[BettiRow]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> BettiRow:
        return self.rows[n]

    def degrees(self, n: int) -> List[int]:
        return self.rows[n].degrees()


def betti_from_chains(table: ChainTable, max_degree: Optional[int] = None) -> BettiTable:
    rows = []
    for n, counter in degree_table(table).items():
        row = BettiRow(n, Counter(counter), table.capped)
        if max_degree is not None:
            kept = row.restricted(max_degree)
            row.truncated = row.truncated or kept != row.entries
            row.entries = kept
        rows.append(row)
    return BettiTable(METHOD_CHAINS, max_degree if max_degree is not None else table.max_length, rows)


def compare_tables(a: BettiTable, b: BettiTable, max_degree: Optional[int] = None) -> List[Tuple[int, Tuple[str, int], int, int]]:
    """Entries (n, (vertex, degree), count in a, count in b) that differ up to max_degree."""
    diffs = []
    for n in range(min(a.n_max, b.n_max) + 1):
        ra, rb = a.row(n).restricted(max_degree), b.row(n).restricted(max_degree)
        for key in sorted(set(ra) | set(rb)):
            if ra[key] != rb[key]:
                diffs.append((n, key, ra[key], rb[key]))
    return diffs


def is_submultiset(small: BettiTable, big: BettiTable, max_degree: Optional[int] = None) -> bool:
    for n in range(min(small.n_max, big.n_max) + 1):
        rs, rb = small.row(n).restricted(max_degree), big.row(n).restricted(max_degree)
        if any(m > rb[k] for k, m in rs.items()):
            return False
    return True


# --- oracle ---

Key = Tuple[int, Path]
Vector = Dict[Key, Any]


@dataclass
class _Generator:
    vertex: int
    degree: int
    image: Optional[Vector] = None


def _act(algebra: QuotientAlgebra, x: Path, vector: Vector) -> Vector:
    result: Vector = {}
    domain = algebra.domain
    for (i, y), c in vector.items():
        for p, d in algebra.product(x, y).items():
            key = (i, p)
            value = result.get(key, domain.zero) + c * d
            if domain.is_zero(value):
                result.pop(key, None)
            else:
                result[key] = value
    return result


def _module_basis(algebra: QuotientAlgebra, gens: Sequence[_Generator], degree: int, vertex: int) -> List[Key]:
    keys = []
    for j, g in enumerate(gens):
        if degree - g.degree < 0:
            continue
        for x in algebra.basis.words(degree - g.degree, source=vertex, target=g.vertex):
            keys.append((j, x))
    keys.sort(key=lambda k: (algebra.order.sort_key(k[1]), -k[0]), reverse=True)
    return keys


def _key_order(algebra: QuotientAlgebra, key: Key) -> Tuple:
    return (algebra.order.sort_key(key[1]), -key[0])


def _complement(algebra: QuotientAlgebra, spanned: List[Vector], kernel: List[Vector]) -> List[Vector]:
    """Vectors of `kernel` completing span(spanned) to span(kernel)."""
    if not kernel:
        return []
    coords = sorted({k for v in spanned + kernel for k in v}, key=lambda k: _key_order(algebra, k), reverse=True)
    index = {k: i for i, k in enumerate(coords)}
    columns = [{index[k]: c for k, c in v.items()} for v in spanned + kernel]
    pivots = pivot_columns(columns, len(coords), algebra.domain)
    return [kernel[j - len(spanned)] for j in pivots if j >= len(spanned)]


def _kernel(algebra: QuotientAlgebra, gens: Sequence[_Generator], degree: int, vertex: int) -> List[Vector]:
    domain_keys = _module_basis(algebra, gens, degree, vertex)
    if not domain_keys:
        return []
    images = [_act(algebra, x, gens[j].image) for j, x in domain_keys]
    coords = sorted({k for img in images for k in img}, key=lambda k: _key_order(algebra, k), reverse=True)
    index = {k: i for i, k in enumerate(coords)}
    columns = [{index[k]: c for k, c in img.items()} for img in images]
    basis = kernel_basis(columns, len(coords), algebra.domain)
    return [{domain_keys[j]: c for j, c in vec.items()} for vec in basis]


def _row_from(n: int, gens: Sequence[_Generator], quiver: Quiver, truncated: bool) -> BettiRow:
    return BettiRow(n, Counter((quiver.vertices[g.vertex], g.degree) for g in gens), truncated)


def oracle_resolution(algebra: Union[GroebnerBasis, TipSet], max_n: int, max_degree: int,
                      domain: Any = None, order: Optional[AdmissibleOrder] = None) -> BettiTable:
    """
    Betti table of a minimal graded projective resolution of Λ₀, exact for all
    generators of internal degree ≤ max_degree.
    """
    if max_degree < 1:
        raise PreconditionError("max_degree must be ≥ 1")
    complete = True
    if isinstance(algebra, GroebnerBasis):
        if algebra.valid_to_degree < max_degree:
            raise IncompleteGroebnerError(
                f"Groebner basis valid to degree {algebra.valid_to_degree} < requested {max_degree}"
            )
        complete = algebra.complete
    A = QuotientAlgebra(algebra, max_degree, domain, order)
    quiver = A.quiver
    vertices = range(quiver.vertex_count)
    g_max = A.tips.max_degree
    top = A.basis.top_degree()

    gens = [_Generator(v, 0) for v in vertices]
    rows = [_row_from(0, gens, quiver, False)]
    kernel: Dict[Tuple[int, int], List[Vector]] = {}
    for k in range(1, max_degree + 1):
        for v in vertices:
            keys = _module_basis(A, gens, k, v)
            if keys:
                kernel[(k, v)] = [{key: A.domain.one} for key in keys]

    for n in range(1, max_n + 1):
        fresh: List[_Generator] = []
        for k in range(1, max_degree + 1):
            for v in vertices:
                current = kernel.get((k, v), [])
                if not current:
                    continue
                spanned = []
                for a in quiver.outgoing(v):
                    arrow = quiver.path_from_word((a,))
                    for z in kernel.get((k - 1, quiver.arrows[a].target), []):
                        image = _act(A, arrow, z)
                        if image:
                            spanned.append(image)
                for vec in _complement(A, spanned, current):
                    fresh.append(_Generator(v, k, vec))

        previous = rows[-1]
        truncated = not _row_complete(n, previous, complete, g_max, top, max_degree)
        rows.append(_row_from(n, fresh, quiver, truncated))
        logger.debug(f"Oracle row {n}: {len(fresh)} generators")
        if n == max_n:
            break
        gens = fresh
        kernel = {}
        for k in range(1, max_degree + 1):
            for v in vertices:
                basis = _kernel(A, gens, k, v)
                if basis:
                    kernel[(k, v)] = basis
    return BettiTable(METHOD_ORACLE, max_degree, rows)


def _row_complete(n: int, previous: BettiRow, complete: bool, g_max: int,
                  top: Optional[int], max_degree: int) -> bool:
    if n <= 1:
        return True
    if not previous.truncated and not previous.entries:
        return True
    if complete and (g_max == 0 or 1 + (n - 1) * (g_max - 1) <= max_degree):
        return True
    if top is not None and not previous.truncated:
        highest = max((d for (_, d) in previous.entries), default=0)
        return highest + top <= max_degree
    return False


# --- monomial differential ---

@dataclass(frozen=True)
class DifferentialImage:
    """d(gen(chain)) = coeff · prefix · gen(target)."""

    chain: Chain
    coeff: int
    prefix: Path
    target: Chain


def monomial_differential(table: ChainTable) -> Dict[int, List[DifferentialImage]]:
    return {
        n: [DifferentialImage(c, 1, c.prefix, c.parent) for c in table.level(n)]
        for n in range(1, table.n_max + 1)
    }


def verify_differential(table: ChainTable) -> List[Tuple[Chain, Path]]:
    """Composites r_n·r_{n−1} avoiding every element of ρ; each one breaks d∘d = 0."""
    failures = []
    rho_words = table.rho.words
    for n in range(2, table.n_max + 1):
        for c in table.level(n):
            composite = c.prefix.word + c.parent.prefix.word
            if not any(find_offsets(composite, t) for t in rho_words):
                failures.append((c, table.quiver.path_from_word(composite)))
    return failures
