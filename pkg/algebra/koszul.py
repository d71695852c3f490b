# algebra/koszul.py
"""
Koszul-Type Decision Procedures

Finite and bounded decisions about the graded resolution of Λ₀ over Λ = KΓ/I:
d-Koszulity of monomial algebras, (weakly) F-determined tables, 2-d-determined
algebras, Ext generation in degrees 0, 1, 2, and the classification pipeline
that transfers verdicts between Λ and its tip algebra Λ_mon = KΓ/⟨tip(I)⟩.

Every verdict is one of yes / no / inconclusive (plus out_of_scope), states
whether it is exact or only holds up to a bound, names the criteria used and
carries a concrete witness whenever it says no.

Features:
- delta(), DegreeFunction (delta / table / linear) and projective-dimension bounds
- is_d_koszul_monomial() with two independent overlap routes that must agree
- check_f_determined() in strict and weak modes
- is_2d_determined_monomial() plus the third-syzygy length route
- check_ext_generation_012() factorization check on chain tables
- classify(): Groebner basis, chains, oracle and every transfer in one report

Project: Koszul Toolkit
License: MIT
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from algebra.chains import (
    ChainTable,
    build_chains,
    global_dimension_bound,
    level_three_from_overlaps,
)
from algebra.errors import (
    MixedDegreeError,
    PreconditionError,
    TruncatedRowError,
    WrongDegreeProfileError,
)
from algebra.groebner import GroebnerBasis, TipSet, buchberger, stratify_by_degree, tip_ideal
from algebra.presentation import AlgebraPresentation
from algebra.quiver import maximal_overlaps, overlaps
from algebra.resolution import (
    BettiTable,
    betti_from_chains,
    compare_tables,
    oracle_resolution,
)
from utils.helpers import (
    MODE_STRICT,
    MODE_WEAK,
    VERDICT_INCONCLUSIVE,
    VERDICT_NO,
    VERDICT_OUT_OF_SCOPE,
    VERDICT_YES,
)

logger = logging.getLogger(__name__)

# Criteria cited in verdicts
CRIT_OVERLAP_LENGTH = "maximal overlaps have length d+1"
CRIT_OVERLAP_SUBPATH = "length-d subpaths of overlaps lie in the relation set"
CRIT_TIP_TRANSFER = "d-Koszulity transfers between an algebra concentrated in degree d and its tip algebra"
CRIT_QUADRATIC_MONOMIAL = "quadratic monomial algebras are Koszul"
CRIT_TOP_STRATUM = "monomial 2-d algebra is 2-d-determined iff its degree-d part is d-Koszul"
CRIT_TIP_STRATUM_SUFFICIENCY = "d-Koszul degree-d tip stratum makes the algebra 2-d-determined"
CRIT_LEVEL_THREE_BOUND = "third syzygy generated in degree <= d+1"
CRIT_EXT_FACTORIZATION = "every chain factors through a relation or an arrow"
CRIT_MONOMIAL_2D_EXT = "monomial 2-d: 2-d-determined iff Ext generated in degrees 0, 1, 2"
CRIT_D_KOSZUL_EXT = "d-Koszul algebras have Ext generated in degrees 0, 1, 2"
CRIT_WEAK_F_TRANSFER = "weakly F-determined tip algebra bounds the algebra"
CRIT_STRICT_F_TRANSFER = "F-determined tip algebra makes the algebra F-determined with minimal AGS resolution"
CRIT_MINIMAL_CONVERSE = "F-determined algebra with minimal AGS resolution has F-determined tip algebra"
CRIT_ORACLE_WITNESS = "exact minimal resolution data below the degree bound"
CRIT_MONOMIAL_AGS_MINIMAL = "AGS resolutions of monomial algebras are minimal"
CRIT_PD_BOUND = "F not strictly increasing bounds the projective dimension"
CRIT_EMPTY_LEVEL = "an empty chain level bounds the global dimension"


def delta(n: int, d: int) -> int:
    if n < 0 or d < 2:
        raise PreconditionError(f"delta needs n >= 0 and d >= 2 (got n={n}, d={d})")
    if n % 2 == 0:
        return n * d // 2
    return (n - 1) * d // 2 + 1


def delta_table(d: int, n_max: int) -> List[int]:
    return [delta(n, d) for n in range(n_max + 1)]


@dataclass(frozen=True)
class DegreeFunction:
    """F: n ↦ internal degree, defined on 0..cap with F(n) ≥ n."""

    kind: str
    params: tuple
    cap: int

    def __post_init__(self):
        for n in range(self.cap + 1):
            if self(n) < n:
                raise PreconditionError(f"{self.spec} violates F(n) >= n at n={n}")

    def __call__(self, n: int) -> int:
        if self.kind == "delta":
            return delta(n, self.params[0])
        if self.kind == "table":
            if n >= len(self.params):
                raise PreconditionError(f"{self.spec} is undefined at n={n}")
            return self.params[n]
        a, b = self.params
        return a * n + b

    @property
    def spec(self) -> str:
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"


def degree_function_from_spec(text: str, cap: int) -> DegreeFunction:
    """Parse `delta:D`, `table:F0,F1,...` or `linear:A,B` (F(n) = A·n + B)."""
    kind, _, rest = text.strip().partition(":")
    try:
        params = tuple(int(p) for p in rest.split(",") if p.strip())
    except ValueError:
        raise PreconditionError(f"Cannot parse degree function {text!r}")
    if kind == "delta" and len(params) == 1:
        return DegreeFunction(kind, params, cap)
    if kind == "table" and params:
        return DegreeFunction(kind, params, min(cap, len(params) - 1))
    if kind == "linear" and len(params) == 2:
        return DegreeFunction(kind, params, cap)
    raise PreconditionError(f"Unknown degree function {text!r}; use delta:D, table:F0,F1,... or linear:A,B")


def projective_dimension_bound(F: DegreeFunction, cap: Optional[int] = None) -> Optional[int]:
    """Smallest m < cap with F(m+1) ≤ F(m)."""
    cap = F.cap if cap is None else min(cap, F.cap)
    for m in range(cap):
        if F(m + 1) <= F(m):
            return m
    return None


@dataclass
class Verdict:
    status: str
    exact: bool = True
    bound: Optional[int] = None
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    criteria: List[str] = field(default_factory=list)
    note: str = ""
    evidence: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_yes(self) -> bool:
        return self.status == VERDICT_YES

    @property
    def is_no(self) -> bool:
        return self.status == VERDICT_NO


def _require_degree(rho: TipSet, d: int) -> None:
    wrong = [p for p in rho if p.length != d]
    if wrong:
        raise MixedDegreeError(f"Relations {[str(p) for p in wrong]} are not of degree {d}")


def is_d_koszul_monomial(rho: TipSet, d: int) -> Verdict:
    """
    Finite decision for KΓ/⟨ρ⟩ with ρ concentrated in degree d. Both overlap
    routes are run; a disagreement is logged and reported in the evidence.
    """
    _require_degree(rho, d)
    length_witnesses = []
    for t_prime in rho:
        for t in rho:
            for word in sorted(maximal_overlaps(t_prime, t, rho.paths), key=lambda p: (p.length, p.word)):
                if word.length != d + 1:
                    length_witnesses.append({"overlap": str(word), "length": word.length, "pair": [str(t_prime), str(t)]})

    subpath_witnesses = []
    members = set(rho.paths)
    for p in rho:
        for q in rho:
            for w in overlaps(p, q):
                if not 1 <= w.r.length < d:
                    continue
                word = w.word
                for i in range(word.length - d + 1):
                    piece = word.sub(i, i + d)
                    if piece not in members:
                        subpath_witnesses.append({"overlap": str(word), "subpath": str(piece), "offset": i})
                        break

    by_length = not length_witnesses
    by_subpath = not subpath_witnesses
    if by_length != by_subpath:
        logger.error(f"Overlap routes disagree for {rho}: length route {by_length}, subpath route {by_subpath}")
    criteria = [CRIT_OVERLAP_LENGTH, CRIT_OVERLAP_SUBPATH]
    if d == 2:
        criteria.append(CRIT_QUADRATIC_MONOMIAL)
    return Verdict(
        status=VERDICT_YES if by_length else VERDICT_NO,
        exact=True,
        witnesses=length_witnesses or subpath_witnesses,
        criteria=criteria,
        evidence={
            "d": d,
            "length_route": by_length,
            "subpath_route": by_subpath,
            "routes_agree": by_length == by_subpath,
            "subpath_witnesses": subpath_witnesses,
        },
    )


def check_f_determined(table: BettiTable, F: DegreeFunction, mode: str,
                       allow_truncated: bool = False) -> Verdict:
    """
    strict: every row-n degree equals F(n); weak: every row-n degree lies in
    [n, F(n)]. Checked for n ≤ min(table rows, F's cap).
    """
    if mode not in (MODE_STRICT, MODE_WEAK):
        raise PreconditionError(f"Unknown mode {mode!r}")
    top = min(table.n_max, F.cap)
    witnesses = []
    complete_to = top
    for n in range(top + 1):
        row = table.row(n)
        if row.truncated:
            if not allow_truncated:
                raise TruncatedRowError(f"Row {n} of the {table.method} table is truncated")
            complete_to = min(complete_to, n - 1)
        target = F(n)
        for (vertex, degree), mult in sorted(row.entries.items()):
            bad = degree != target if mode == MODE_STRICT else not n <= degree <= target
            if bad:
                witnesses.append({"n": n, "vertex": vertex, "degree": degree, "expected": target, "multiplicity": mult})
    criteria = [CRIT_ORACLE_WITNESS] if table.method == "oracle" else []
    if witnesses:
        return Verdict(VERDICT_NO, True, None, witnesses, criteria, evidence={"function": F.spec, "mode": mode})
    if complete_to < 0:
        return Verdict(VERDICT_INCONCLUSIVE, False, 0, [], criteria, "rows truncated by the degree bound",
                       evidence={"function": F.spec, "mode": mode})
    return Verdict(VERDICT_YES, False, complete_to, [], criteria, evidence={"function": F.spec, "mode": mode})


def _profile_d(degrees: Sequence[int]) -> Optional[int]:
    others = sorted(set(degrees) - {2})
    if len(others) == 1 and others[0] >= 3:
        return others[0]
    return None


def is_2d_determined_monomial(rho: TipSet, d: int) -> Verdict:
    """Decided by the degree-d stratum; also reports the third-syzygy length route."""
    if d < 3 or any(p.length not in (2, d) for p in rho):
        raise WrongDegreeProfileError(f"Relation degrees {rho.degrees()} are not within {{2, {d}}} with d >= 3")
    top = rho.stratum(d)
    if not len(top):
        return Verdict(VERDICT_OUT_OF_SCOPE, True, note="no relations of degree d: quadratic (Koszul) case")
    stratum = is_d_koszul_monomial(top, d)
    level_three = sorted(level_three_from_overlaps(rho), key=lambda p: (p.length, p.word))
    long_words = [{"chain": str(w), "length": w.length} for w in level_three if w.length > d + 1]
    route_agrees = stratum.is_yes == (not long_words)
    if not route_agrees:
        logger.error(f"Third-syzygy route disagrees with the stratum route for {rho}")
    return Verdict(
        status=stratum.status,
        exact=True,
        witnesses=stratum.witnesses,
        criteria=[CRIT_TOP_STRATUM, CRIT_LEVEL_THREE_BOUND] + stratum.criteria[:2],
        evidence={"d": d, "level_three_route": not long_words, "routes_agree": route_agrees,
                  "level_three_witnesses": long_words},
    )


def check_ext_generation_012(table: ChainTable) -> Verdict:
    """Each chain a_n (n ≥ 3) has ℓ(r) = 1 or equals its head times its grandparent word."""
    witnesses = []
    for n in range(3, table.n_max + 1):
        for c in table.level(n):
            if c.prefix.length == 1:
                continue
            grandparent = c.parent.parent
            if c.head.word + grandparent.word.word == c.word.word:
                continue
            witnesses.append({"n": n, "chain": str(c.word), "prefix": str(c.prefix), "head": str(c.head)})
    if witnesses:
        return Verdict(VERDICT_NO, False, table.n_max, witnesses, [CRIT_EXT_FACTORIZATION])
    return Verdict(VERDICT_YES, False, table.n_max, [], [CRIT_EXT_FACTORIZATION])


# --- classification ---

@dataclass
class Bounds:
    max_degree: int
    max_n: int
    functions: List[DegreeFunction] = field(default_factory=list)
    workers: int = 1
    run_oracle: bool = True
    d_override: Optional[int] = None


@dataclass
class KoszulReport:
    input: Dict[str, Any]
    bounds: Dict[str, Any]
    groebner: Dict[str, Any]
    verdicts: Dict[str, Verdict]
    f_checks: Dict[str, Dict[str, Verdict]]
    ags_minimal: Verdict
    global_dimension_bound: Optional[int]
    notes: List[str] = field(default_factory=list)
    timing: Dict[str, float] = field(default_factory=dict, compare=False)
    basis: Optional[GroebnerBasis] = field(default=None, compare=False, repr=False)
    chains: Optional[ChainTable] = field(default=None, compare=False, repr=False)
    chain_table: Optional[BettiTable] = field(default=None, compare=False, repr=False)
    oracle_table: Optional[BettiTable] = field(default=None, compare=False, repr=False)

    def inconclusive(self) -> List[str]:
        """Names of verdicts (including F checks) that came out inconclusive."""
        names = [k for k, v in self.verdicts.items() if v.status == VERDICT_INCONCLUSIVE]
        for spec, checks in self.f_checks.items():
            names += [f"{spec}/{k}" for k, v in checks.items() if v.status == VERDICT_INCONCLUSIVE]
        return names


def _timed(timing: Dict[str, float], stage: str, fn: Callable[[], Any]) -> Any:
    start = time.perf_counter()
    result = fn()
    timing[stage] = round((time.perf_counter() - start) * 1000, 3)
    return result


def _oracle_violations(oracle: Optional[BettiTable], bound: Callable[[int], int], mode: str) -> List[Dict[str, Any]]:
    if oracle is None:
        return []
    found = []
    for row in oracle.rows:
        target = bound(row.n)
        for (vertex, degree), mult in sorted(row.entries.items()):
            bad = degree != target if mode == MODE_STRICT else not row.n <= degree <= target
            if bad:
                found.append({"n": row.n, "vertex": vertex, "degree": degree, "expected": target, "source": "oracle"})
    return found


def _ags_minimality(basis: GroebnerBasis, oracle: Optional[BettiTable], chain_table: BettiTable,
                    bounds: Bounds) -> Verdict:
    if basis.is_monomial and basis.complete:
        return Verdict(VERDICT_YES, True, criteria=[CRIT_MONOMIAL_AGS_MINIMAL])
    if oracle is None:
        return Verdict(VERDICT_INCONCLUSIVE, False, bounds.max_n, note="oracle disabled")
    diffs = compare_tables(oracle, chain_table, bounds.max_degree)
    if diffs:
        witnesses = [{"n": n, "vertex": v, "degree": deg, "oracle": a, "chains": b} for n, (v, deg), a, b in diffs]
        return Verdict(VERDICT_NO, True, None, witnesses, [CRIT_ORACLE_WITNESS])
    return Verdict(VERDICT_YES, False, bounds.max_n, [], [CRIT_ORACLE_WITNESS],
                   note=f"oracle and chain tables agree up to internal degree {bounds.max_degree}")


def _d_koszul_verdict(basis: GroebnerBasis, degrees: List[int], tips: TipSet, chain_table: BettiTable,
                      oracle: Optional[BettiTable], bounds: Bounds) -> Verdict:
    if not basis.elements:
        return Verdict(VERDICT_OUT_OF_SCOPE, True, note="no relations: the path algebra is hereditary")
    d = bounds.d_override or (degrees[0] if len(degrees) == 1 else None)
    if d is not None and len(degrees) == 1 and degrees[0] == d and basis.complete:
        verdict = is_d_koszul_monomial(tips, d)
        verdict.criteria.append(CRIT_TIP_TRANSFER)
        if verdict.is_yes:
            verdict.criteria.append(CRIT_D_KOSZUL_EXT)
            strict = check_f_determined(chain_table, DegreeFunction("delta", (d,), chain_table.n_max), MODE_STRICT)
            verdict.evidence["strict_delta_to_n"] = strict.bound
        if oracle is not None and oracle.n_max >= 3:
            verdict.evidence["oracle_row3_degrees"] = sorted(set(oracle.degrees(3)))
        return verdict

    # Not decidable by the finite criteria: look for exact counterexamples in the oracle.
    guess = d
    if guess is None and oracle is not None and oracle.n_max >= 2 and oracle.degrees(2):
        guess = min(oracle.degrees(2))
    if guess is not None and guess >= 2:
        witnesses = _oracle_violations(oracle, lambda n: delta(n, guess), MODE_STRICT)
        if witnesses:
            return Verdict(VERDICT_NO, True, None, witnesses, [CRIT_ORACLE_WITNESS], evidence={"d": guess})
    reason = "Groebner basis incomplete at the degree bound" if not basis.complete else "Groebner basis not concentrated in one degree"
    return Verdict(VERDICT_INCONCLUSIVE, False, bounds.max_degree, note=reason, evidence={"degrees": degrees})


def _two_d_verdicts(basis: GroebnerBasis, degrees: List[int], tips: TipSet, chains: ChainTable,
                    oracle: Optional[BettiTable], ags: Verdict, bounds: Bounds, notes: List[str]) -> Dict[str, Verdict]:
    d = bounds.d_override or _profile_d(degrees)
    out_of_scope = Verdict(VERDICT_OUT_OF_SCOPE, True, note=f"degree profile {degrees} is not {{2, d}} with d >= 3")
    if not basis.elements or set(degrees) == {2}:
        out_of_scope = Verdict(VERDICT_OUT_OF_SCOPE, True, note="no relations of degree d >= 3")
    if d is None or not set(degrees) <= {2, d} or not basis.elements:
        return {"determined": out_of_scope, "koszul": out_of_scope, "monomial_koszul": out_of_scope}

    if not basis.complete:
        witnesses = _oracle_violations(oracle, lambda n: delta(n, d), MODE_WEAK)
        if witnesses:
            no = Verdict(VERDICT_NO, True, None, witnesses, [CRIT_ORACLE_WITNESS])
            return {"determined": no, "koszul": no, "monomial_koszul": Verdict(VERDICT_INCONCLUSIVE, False, bounds.max_degree)}
        pending = Verdict(VERDICT_INCONCLUSIVE, False, bounds.max_degree, note="Groebner basis incomplete at the degree bound")
        return {"determined": pending, "koszul": pending, "monomial_koszul": pending}

    if d > 3 and 2 in degrees:
        notes.append("the quadratic stratum is its own reduced Groebner basis, so its algebra is Koszul")

    monomial_verdict = is_2d_determined_monomial(tips, d)
    if basis.is_monomial:
        determined = monomial_verdict
        koszul = Verdict(monomial_verdict.status, True, None, list(monomial_verdict.witnesses),
                         [CRIT_MONOMIAL_2D_EXT])
        return {"determined": determined, "koszul": koszul, "monomial_koszul": koszul}

    mon_koszul = Verdict(monomial_verdict.status, True, None, list(monomial_verdict.witnesses),
                         [CRIT_TOP_STRATUM, CRIT_MONOMIAL_2D_EXT])
    if monomial_verdict.is_yes:
        determined = Verdict(VERDICT_YES, True, criteria=[CRIT_TIP_STRATUM_SUFFICIENCY])
    else:
        witnesses = _oracle_violations(oracle, lambda n: delta(n, d), MODE_WEAK)
        if witnesses:
            determined = Verdict(VERDICT_NO, True, None, witnesses, [CRIT_ORACLE_WITNESS])
        else:
            note = "the converse direction needs a minimal AGS resolution"
            if ags.is_yes:
                note += f"; minimality holds up to n = {ags.bound}"
            determined = Verdict(VERDICT_INCONCLUSIVE, False, bounds.max_n, note=note,
                                 criteria=[CRIT_MINIMAL_CONVERSE], evidence={"ags_minimal": ags.status})
    koszul = Verdict(VERDICT_INCONCLUSIVE, False, bounds.max_n,
                     note="2-d-Koszulity is only decided for monomial algebras",
                     evidence={"factorization": check_ext_generation_012(chains).status})
    if determined.is_no:
        koszul = Verdict(VERDICT_NO, True, None, determined.witnesses, determined.criteria)
    return {"determined": determined, "koszul": koszul, "monomial_koszul": mon_koszul}


def _ext_verdict(basis: GroebnerBasis, degrees: List[int], chains: ChainTable,
                 d_koszul: Verdict, two_d: Verdict) -> Verdict:
    factorization = check_ext_generation_012(chains)
    evidence = {"factorization": factorization.status, "factorization_to_n": chains.n_max,
                "factorization_witnesses": factorization.witnesses}
    if d_koszul.is_yes:
        return Verdict(VERDICT_YES, True, chains.n_max, [], [CRIT_D_KOSZUL_EXT], evidence=evidence)
    if basis.is_monomial and basis.complete and two_d.status in (VERDICT_YES, VERDICT_NO):
        return Verdict(two_d.status, True, chains.n_max, list(two_d.witnesses), [CRIT_MONOMIAL_2D_EXT], evidence=evidence)
    if basis.is_monomial and basis.complete and factorization.is_yes:
        return Verdict(VERDICT_YES, False, chains.n_max, [], [CRIT_EXT_FACTORIZATION], evidence=evidence)
    return Verdict(VERDICT_INCONCLUSIVE, False, chains.n_max,
                   note="factorization data reported as evidence only", evidence=evidence)


def _truncated_tip_check(F: DegreeFunction, chains: ChainTable, mode: str, max_degree: int) -> Verdict:
    # Chains of length <= D only use tips of length <= D, which a truncated basis already has right.
    visible = check_f_determined(betti_from_chains(chains, max_degree), F, mode, allow_truncated=True)
    if visible.is_no:
        return visible
    return Verdict(VERDICT_INCONCLUSIVE, False, max_degree, note="Groebner basis incomplete at the degree bound",
                   evidence={"function": F.spec, "mode": mode})


def _f_checks(F: DegreeFunction, basis: GroebnerBasis, chains: ChainTable, chain_table: BettiTable,
              oracle: Optional[BettiTable], ags: Verdict, bounds: Bounds, notes: List[str]) -> Dict[str, Verdict]:
    checks: Dict[str, Verdict] = {}
    for mode in (MODE_WEAK, MODE_STRICT):
        if basis.complete:
            mon = check_f_determined(chain_table, F, mode)
        else:
            mon = _truncated_tip_check(F, chains, mode, bounds.max_degree)
        checks[f"lambda_mon_{mode}"] = mon
        if mon.is_yes:
            crit = CRIT_WEAK_F_TRANSFER if mode == MODE_WEAK else CRIT_STRICT_F_TRANSFER
            checks[f"lambda_{mode}"] = Verdict(VERDICT_YES, False, mon.bound, [], [crit])
            continue
        if oracle is not None:
            direct = check_f_determined(oracle, F, mode, allow_truncated=True)
            if direct.is_no:
                checks[f"lambda_{mode}"] = direct
                continue
            if mode == MODE_STRICT and mon.is_no and direct.is_yes and ags.is_yes:
                # Λ passes while Λ_mon fails: contradicts the converse transfer.
                logger.warning(f"{F.spec}: algebra passes the strict check but its tip algebra fails")
            note = f"tip algebra check is {mon.status}; the algebra itself is only checked to the bound"
            checks[f"lambda_{mode}"] = Verdict(VERDICT_INCONCLUSIVE, False, direct.bound, note=note,
                                               evidence={"oracle": direct.status})
        else:
            checks[f"lambda_{mode}"] = Verdict(VERDICT_INCONCLUSIVE, False, chain_table.n_max, note="oracle disabled")
    if checks[f"lambda_mon_{MODE_WEAK}"].is_yes:
        m = projective_dimension_bound(F, chain_table.n_max)
        if m is not None:
            checks[f"lambda_mon_{MODE_WEAK}"].evidence["projective_dimension_bound"] = m
            checks[f"lambda_{MODE_WEAK}"].criteria.append(CRIT_PD_BOUND)
            checks[f"lambda_{MODE_WEAK}"].evidence["projective_dimension_bound"] = m
            notes.append(f"{F.spec}: F stops increasing at n = {m}, so pd(Λ₀) <= {m}")
    return checks


def classify(presentation: AlgebraPresentation, bounds: Bounds) -> KoszulReport:
    """Run the whole pipeline for one algebra and assemble the report."""
    timing: Dict[str, float] = {}
    notes: List[str] = []
    basis = _timed(timing, "groebner_ms", lambda: buchberger(
        presentation.relations, presentation.order, bounds.max_degree, bounds.workers, presentation.domain))
    strata = stratify_by_degree(basis)
    degrees = list(strata)
    tips = tip_ideal(basis)
    chains = _timed(timing, "chains_ms", lambda: build_chains(tips, bounds.max_n))
    chain_table = betti_from_chains(chains)
    oracle = None
    if bounds.run_oracle:
        oracle = _timed(timing, "oracle_ms", lambda: oracle_resolution(basis, bounds.max_n, bounds.max_degree))
    ags = _ags_minimality(basis, oracle, chain_table, bounds)

    gd = global_dimension_bound(chains) if basis.complete else None
    if gd is not None:
        notes.append(f"chain level {gd + 1} is empty: pd(Λ₀) <= {gd} for the algebra and its tip algebra")

    d_koszul = _d_koszul_verdict(basis, degrees, tips, chain_table, oracle, bounds)
    two_d = _two_d_verdicts(basis, degrees, tips, chains, oracle, ags, bounds, notes)
    verdicts = {
        "d_koszul": d_koszul,
        "two_d_determined": two_d["determined"],
        "ext_generated_012": _ext_verdict(basis, degrees, chains, d_koszul, two_d["determined"]),
        "two_d_koszul": two_d["koszul"],
        "monomial_two_d_koszul": two_d["monomial_koszul"],
    }
    f_checks = {F.spec: _f_checks(F, basis, chains, chain_table, oracle, ags, bounds, notes)
                for F in bounds.functions}
    logger.info(f"Classified {presentation.name or 'algebra'}: "
                + ", ".join(f"{k}={v.status}" for k, v in verdicts.items()))
    return KoszulReport(
        input=presentation.descriptor(),
        bounds={"max_degree": bounds.max_degree, "max_n": bounds.max_n, "oracle": bounds.run_oracle},
        groebner={
            "degrees": degrees,
            "size": len(basis),
            "complete": basis.complete,
            "valid_to_degree": basis.valid_to_degree,
            "monomial": basis.is_monomial,
            "tips": [str(t) for t in tips],
        },
        verdicts=verdicts,
        f_checks=f_checks,
        ags_minimal=ags,
        global_dimension_bound=gd,
        notes=notes,
        timing=timing,
        basis=basis,
        chains=chains,
        chain_table=chain_table,
        oracle_table=oracle,
    )
