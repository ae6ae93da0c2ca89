"""Backtracking and randomized search for small codes under nest constraints.

The search state is the syndrome assignment, not the generator matrix: the
per-qubit (sx, sz) pairs are chosen left to right in numeric order, so the
distinctness constraints prune as early as possible and the first solution
is the lexicographically least assignment.  Commutation, independence and
the forbidden-element conditions are checked on the materialized fragment
at the leaves, and every emission is re-verified by the independent
checker before it leaves the generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .nesting import cross_commutation_ok, materialize, strong_constraints, SyndromeAssignment
from .stabilizer import CodeFragment
from .symplectic import gf2_rank, symplectic_product

EXHAUSTIVE_MAX_N = 8
EXHAUSTIVE_MAX_S = 8
RNG_ALGORITHM = "python-random-mt19937"


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConstraints:
    left_rows_even_parity: bool = False
    right_rows_even_parity: bool = False
    distinct_xyz_syndromes: bool = False
    full_distance3: bool = False
    forbid_uniform_elements: bool = False
    require_commuting: bool = False
    require_independent: bool = False
    cross_partner: Optional[CodeFragment] = None

    def flags(self) -> List[str]:
        names = [
            "left_rows_even_parity", "right_rows_even_parity",
            "distinct_xyz_syndromes", "full_distance3",
            "forbid_uniform_elements", "require_commuting", "require_independent",
        ]
        return [n for n in names if getattr(self, n)]

    def __post_init__(self):
        if not self.flags():
            raise SearchError("at least one structural constraint flag must be set")


@dataclass(frozen=True)
class SearchStrategy:
    mode: str = "exhaustive"  # or "randomized"
    seed: int = 0
    max_candidates: int = 10000
    emit_limit: int = 100

    def __post_init__(self):
        if self.mode not in ("exhaustive", "randomized"):
            raise SearchError("mode must be 'exhaustive' or 'randomized'")


@dataclass(frozen=True)
class ConstraintCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: Tuple[ConstraintCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _first_collision(values: Sequence[int]) -> Optional[Tuple[int, int]]:
    seen = {}
    for q, v in enumerate(values, start=1):
        if v in seen:
            return seen[v], q
        seen[v] = q
    return None


def verify_found(fragment: CodeFragment, constraints: SearchConstraints) -> VerificationReport:
    """Independent per-constraint recheck, decoupled from search pruning."""
    from .nesting import syndromes_of

    a = syndromes_of(fragment)
    sy = tuple(a.sy(q) for q in range(a.n))
    report: List[ConstraintCheck] = []
    con = strong_constraints(fragment)
    if constraints.left_rows_even_parity:
        bad = [r + 1 for r, p in enumerate(con.left_row_parities) if p]
        report.append(ConstraintCheck(
            "left-even-parity", not bad,
            "odd left-half rows: %s" % bad if bad else ""))
    if constraints.right_rows_even_parity:
        bad = [r + 1 for r, p in enumerate(con.right_row_parities) if p]
        report.append(ConstraintCheck(
            "right-even-parity", not bad,
            "odd right-half rows: %s" % bad if bad else ""))
    if constraints.distinct_xyz_syndromes:
        hit = None
        for label, values in (("sx", a.sx), ("sz", a.sz), ("sy", sy)):
            pair = _first_collision(values)
            if pair:
                hit = "%s of qubits %d and %d collide" % (label, pair[0], pair[1])
                break
        report.append(ConstraintCheck("distinct-xyz", hit is None, hit or ""))
    if constraints.full_distance3:
        combined = list(a.sx) + list(a.sz) + list(sy)
        pair = _first_collision(combined)
        zero = 0 in combined
        ok = pair is None and not zero
        detail = "zero syndrome present" if zero else (
            "entries %d and %d of the 3n list collide" % pair if pair else "")
        report.append(ConstraintCheck("full-distance3", ok, detail))
    if constraints.forbid_uniform_elements:
        report.append(ConstraintCheck(
            "forbid-uniform", not con.any_forbidden,
            "a uniform element lies in the row space" if con.any_forbidden else ""))
    if constraints.require_commuting:
        bad_pair = None
        rows = fragment.rows
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                if symplectic_product(rows[i], rows[j]):
                    bad_pair = (i + 1, j + 1)
                    break
            if bad_pair:
                break
        report.append(ConstraintCheck(
            "commuting", bad_pair is None,
            "rows %d and %d anticommute" % bad_pair if bad_pair else ""))
    if constraints.require_independent:
        rank = gf2_rank(fragment.rows)
        report.append(ConstraintCheck(
            "independent", rank == fragment.s,
            "" if rank == fragment.s else "rank %d < %d rows" % (rank, fragment.s)))
    if constraints.cross_partner is not None:
        ok = cross_commutation_ok(constraints.cross_partner, fragment)
        report.append(ConstraintCheck(
            "cross-partner", ok, "" if ok else "cross commutation fails"))
    return VerificationReport(tuple(report))


def _admissible(constraints: SearchConstraints, sx: List[int], sz: List[int],
                new_sx: int, new_sz: int, last: bool,
                want_sz_xor: int, want_sx_xor: int) -> bool:
    """Incremental prune for one more qubit choice."""
    new_sy = new_sx ^ new_sz
    if constraints.full_distance3:
        if new_sx == 0 or new_sz == 0 or new_sy == 0:
            return False
        used = set(sx) | set(sz) | {x ^ z for x, z in zip(sx, sz)}
        if new_sx in used or new_sz in used or new_sy in used:
            return False
        if len({new_sx, new_sz, new_sy}) != 3:
            return False
    if constraints.distinct_xyz_syndromes:
        if new_sx in sx or new_sz in sz:
            return False
        if new_sy in {x ^ z for x, z in zip(sx, sz)}:
            return False
    if last:
        if constraints.left_rows_even_parity and want_sz_xor != new_sz:
            return False
        if constraints.right_rows_even_parity and want_sx_xor != new_sx:
            return False
    return True


def _leaf_fragment(n: int, s: int, sx: Sequence[int], sz: Sequence[int],
                   constraints: SearchConstraints) -> Optional[CodeFragment]:
    fragment = materialize(SyndromeAssignment(n, s, tuple(sx), tuple(sz)))
    if verify_found(fragment, constraints).ok:
        return fragment
    return None


def search_codes(
    n: int, s: int, constraints: SearchConstraints, strategy: SearchStrategy
) -> Iterator[CodeFragment]:
    """Stream fragments satisfying the constraints, deterministically ordered."""
    if n < 1 or s < 1:
        raise SearchError("need n >= 1 and s >= 1")
    if n > EXHAUSTIVE_MAX_N or s > EXHAUSTIVE_MAX_S:
        raise SearchError(
            "search is limited to n <= %d, s <= %d" % (EXHAUSTIVE_MAX_N, EXHAUSTIVE_MAX_S)
        )
    if strategy.mode == "exhaustive":
        yield from _exhaustive(n, s, constraints, strategy.emit_limit)
    else:
        yield from _randomized(n, s, constraints, strategy)


def _exhaustive(n: int, s: int, constraints: SearchConstraints,
                emit_limit: int) -> Iterator[CodeFragment]:
    top = 1 << s
    sx: List[int] = []
    sz: List[int] = []
    emitted = 0

    def descend(depth: int, xor_sx: int, xor_sz: int) -> Iterator[CodeFragment]:
        nonlocal emitted
        last = depth == n - 1
        for cand_sx in range(top):
            for cand_sz in range(top):
                if not _admissible(constraints, sx, sz, cand_sx, cand_sz,
                                   last, xor_sz, xor_sx):
                    continue
                sx.append(cand_sx)
                sz.append(cand_sz)
                if last:
                    fragment = _leaf_fragment(n, s, sx, sz, constraints)
                    if fragment is not None:
                        emitted += 1
                        yield fragment
                else:
                    yield from descend(depth + 1, xor_sx ^ cand_sx, xor_sz ^ cand_sz)
                sx.pop()
                sz.pop()
                if emitted >= emit_limit:
                    return

    return descend(0, 0, 0)


def _randomized(n: int, s: int, constraints: SearchConstraints,
                strategy: SearchStrategy) -> Iterator[CodeFragment]:
    rng = random.Random(strategy.seed)
    top = 1 << s
    emitted = 0
    for _ in range(strategy.max_candidates):
        sx = [rng.randrange(top) for _ in range(n)]
        sz = [rng.randrange(top) for _ in range(n)]
        fragment = _leaf_fragment(n, s, sx, sz, constraints)
        if fragment is not None:
            emitted += 1
            yield fragment
            if emitted >= strategy.emit_limit:
                return
