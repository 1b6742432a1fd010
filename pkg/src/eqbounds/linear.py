"""Systems of unit and addition equations over n variables.

The equation universe is

    { x_i = 1 : 1 <= i <= n }  u  { x_i + x_j = x_k : 1 <= i <= j <= n, 1 <= k <= n }

A system is a duplicate-free list of such equations.  Its matrix
encoding stacks one row per equation: a unit equation contributes the
standard basis row e_i with right-hand side 1, an addition equation
contributes the formal sum e_i + e_j - e_k (colliding indices cancel or
accumulate, so entries always land in {-1, 0, 1, 2}) with right-hand
side 0.

This module also hosts the generators (randomized and exhaustive) and
the bound checkers driven by the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, Sequence

from .linalg import (
    DimensionMismatchError,
    QMatrix,
    QVector,
    det_bareiss,
    is_consistent,
    qvec,
    rref,
)
from .rng import SplitMix64


class InconsistentSystemError(Exception):
    pass


class CapExceededError(Exception):
    pass


class PreconditionError(Exception):
    pass


@dataclass(frozen=True, order=True)
class Unit:
    """x_i = 1"""

    i: int


@dataclass(frozen=True, order=True)
class Add:
    """x_i + x_j = x_k, stored with i <= j."""

    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.i > self.j:
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)


LinEquation = Unit | Add


def _check_indices(eq: LinEquation, n: int) -> None:
    idx = (eq.i,) if isinstance(eq, Unit) else (eq.i, eq.j, eq.k)
    for v in idx:
        if not 1 <= v <= n:
            raise ValueError(f"variable index {v} outside [1, {n}] in {eq}")


@dataclass(frozen=True)
class LinSystem:
    n: int
    equations: tuple[LinEquation, ...]

    def __init__(self, n: int, equations: Iterable[LinEquation]):
        if n < 1:
            raise ValueError("n must be >= 1")
        eqs = []
        seen = set()
        for eq in equations:
            _check_indices(eq, n)
            if eq not in seen:
                seen.add(eq)
                eqs.append(eq)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "equations", tuple(eqs))


@dataclass(frozen=True)
class EncodedSystem:
    a: QMatrix
    b: QVector
    provenance: tuple[LinEquation, ...]


def _row_of(eq: LinEquation, n: int) -> list[int]:
    row = [0] * n
    if isinstance(eq, Unit):
        row[eq.i - 1] = 1
    else:
        row[eq.i - 1] += 1
        row[eq.j - 1] += 1
        row[eq.k - 1] -= 1
    return row


def encode(s: LinSystem) -> EncodedSystem:
    """Matrix encoding of a system; row order preserves equation order."""
    rows = [_row_of(eq, s.n) for eq in s.equations]
    b = [1 if isinstance(eq, Unit) else 0 for eq in s.equations]
    return EncodedSystem(QMatrix(rows, cols=s.n), qvec(b), s.equations)


def solves(s: LinSystem, x: Sequence[Fraction]) -> bool:
    """Exact check that the tuple x satisfies every equation of s."""
    if len(x) != s.n:
        return False
    for eq in s.equations:
        if isinstance(eq, Unit):
            if x[eq.i - 1] != 1:
                return False
        elif x[eq.i - 1] + x[eq.j - 1] != x[eq.k - 1]:
            return False
    return True


def normalize_units(s: LinSystem) -> tuple[LinSystem, dict[int, int]]:
    """Merge all unit equations onto the smallest unit index.

    Every variable carrying a unit equation is replaced by the one with
    the minimal index, the survivors are renumbered contiguously with
    the unit variable first, and the substitution old index -> new index
    is returned alongside.  A system without unit equations is returned
    unchanged (the all-zeros tuple solves it when it is consistent).
    """
    unit_vars = sorted({eq.i for eq in s.equations if isinstance(eq, Unit)})
    if not unit_vars:
        return s, {v: v for v in range(1, s.n + 1)}
    rep = unit_vars[0]
    collapse = {v: rep for v in unit_vars}
    survivors = [v for v in range(1, s.n + 1) if v not in unit_vars[1:]]
    ordered = [rep] + [v for v in survivors if v != rep]
    new_index = {old: pos + 1 for pos, old in enumerate(ordered)}
    mapping = {v: new_index[collapse.get(v, v)] for v in range(1, s.n + 1)}
    new_eqs = []
    for eq in s.equations:
        if isinstance(eq, Unit):
            new_eqs.append(Unit(mapping[eq.i]))
        else:
            new_eqs.append(Add(mapping[eq.i], mapping[eq.j], mapping[eq.k]))
    return LinSystem(len(ordered), new_eqs), mapping


def expand_solution(x: Sequence[Fraction], mapping: dict[int, int]) -> QVector:
    """Lift a solution of the reduced system back to the original variables."""
    return tuple(x[mapping[v] - 1] for v in sorted(mapping))


def enlarge_to_unique(s: LinSystem) -> LinSystem:
    """Pin every free variable to zero so the system gains a unique solution.

    For each non-pivot column j of the encoded matrix the equation
    x_j + x_j = x_j (which encodes x_j = 0) is appended; the result has
    encoded rank n.
    """
    enc = encode(s)
    if not is_consistent(enc.a, enc.b):
        raise InconsistentSystemError("cannot enlarge an inconsistent system")
    _, pivots = rref(enc.a)
    free = [j + 1 for j in range(s.n) if j not in pivots]
    return LinSystem(s.n, list(s.equations) + [Add(j, j, j) for j in free])


# ---------------------------------------------------------------------------
# incremental elimination used by the generators

class _Echelon:
    """Forward-elimination state over Fractions; rows are augmented with b."""

    __slots__ = ("width", "rows")

    def __init__(self, width: int):
        self.width = width
        self.rows: list[tuple[int, list[Fraction]]] = []  # (pivot col, row)

    def reduce(self, row: Sequence[Fraction]) -> tuple[int, list[Fraction]] | None:
        """Reduce against current rows; None when the lhs becomes zero."""
        work = list(row)
        for pc, prow in self.rows:
            if work[pc] != 0:
                f = work[pc] / prow[pc]
                work = [x - f * y for x, y in zip(work, prow)]
        pivot = next((c for c in range(self.width) if work[c] != 0), None)
        if pivot is None:
            return None
        return pivot, work

    def push(self, entry: tuple[int, list[Fraction]]) -> None:
        self.rows.append(entry)

    def pop(self) -> None:
        self.rows.pop()

    @property
    def rank(self) -> int:
        return len(self.rows)

    def back_substitute(self) -> QVector:
        """Solution when rank equals width (augmented column holds b)."""
        assert self.rank == self.width
        x: list[Fraction] = [Fraction(0)] * self.width
        for pc, row in sorted(self.rows, key=lambda e: -e[0]):
            acc = row[self.width]
            for c in range(pc + 1, self.width):
                acc -= row[c] * x[c]
            x[pc] = acc / row[pc]
        return tuple(x)


def _augmented(row: Sequence[int], rhs: int) -> list[Fraction]:
    return [Fraction(v) for v in row] + [Fraction(rhs)]


# ---------------------------------------------------------------------------
# generators

def random_unique_system(n: int, rng: SplitMix64) -> LinSystem:
    """Unit equation on x_1 plus addition rows kept only when they raise rank.

    Triples (i, j, k) are drawn uniformly from [1, n]^3 until the stack
    under e_1 reaches rank n; the walk terminates with probability 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    eqs: list[LinEquation] = [Unit(1)]
    ech = _Echelon(n)
    ech.push(ech.reduce(_augmented(_row_of(Unit(1), n), 1)))
    while ech.rank < n:
        i = rng.randint(1, n)
        j = rng.randint(1, n)
        k = rng.randint(1, n)
        eq = Add(i, j, k)
        entry = ech.reduce(_augmented(_row_of(eq, n), 0))
        if entry is not None:
            ech.push(entry)
            eqs.append(eq)
    return LinSystem(n, eqs)


def random_card_le_n_system(n: int, rng: SplitMix64, verbatim_rhs: bool = True) -> EncodedSystem:
    """Row e_1 with rhs 1 followed by n-1 unconditионally appended random rows.

    With ``verbatim_rhs`` the right-hand side of a drawn row e_i+e_j-e_k
    is 1 whenever k = j (the row then reads x_i = 1, a unit equation);
    without it the semantic encoding is used and every drawn row gets
    right-hand side 0.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = [_row_of(Unit(1), n)]
    b = [1]
    provenance: list[LinEquation] = [Unit(1)]
    for _ in range(n - 1):
        i = rng.randint(1, n)
        j = rng.randint(1, n)
        k = rng.randint(1, n)
        row = [0] * n
        row[i - 1] += 1
        row[j - 1] += 1
        row[k - 1] -= 1
        rows.append(row)
        if verbatim_rhs and k == j:
            b.append(1)
            provenance.append(Unit(i))
        else:
            b.append(0)
            provenance.append(Add(i, j, k))
    return EncodedSystem(QMatrix(rows, cols=n), qvec(b), tuple(provenance))


def addition_row_pool(n: int) -> list[tuple[tuple[int, ...], Add]]:
    """Distinct rows e_i + e_j - e_k over [1, n]^3, minus e_1.

    Rows appear in first-occurrence order of the (i, j, k) triple loop;
    each row carries the canonical equation that produced it first.
    """
    seen: dict[tuple[int, ...], Add] = {}
    order: list[tuple[int, ...]] = []
    for i, j, k in product(range(1, n + 1), repeat=3):
        row = [0] * n
        row[i - 1] += 1
        row[j - 1] += 1
        row[k - 1] -= 1
        key = tuple(row)
        if key not in seen:
            seen[key] = Add(i, j, k)
            order.append(key)
    e1 = tuple(1 if c == 0 else 0 for c in range(n))
    return [(row, seen[row]) for row in order if row != e1]


DEFAULT_EXHAUSTIVE_CAP = 5


@dataclass
class ExhaustiveScan:
    """Counters filled in by exhaustive_unique_systems."""

    subsets_considered: int = 0
    yielded: int = 0


def exhaustive_unique_systems(
    n: int,
    start: int | None = None,
    end: int | None = None,
    cap: int = DEFAULT_EXHAUSTIVE_CAP,
    scan: ExhaustiveScan | None = None,
) -> Iterator[tuple[EncodedSystem, QVector]]:
    """All rank-n stacks of n-1 pool rows under e_1, with their solutions.

    (n-1)-subsets of the deduplicated addition-row pool are visited in
    lexicographic order of row indices; ``start``/``end`` select a
    half-open interval of combination ranks so runs can be partitioned
    and resumed.  Subtrees whose prefix is already rank-deficient are
    skipped in bulk but still counted as considered, so the number of
    subsets considered always matches C(|pool|, n-1) for a full scan.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceededError(f"exhaustive enumeration capped at n = {cap}")
    pool = addition_row_pool(n)
    p = len(pool)
    slots = n - 1
    total = comb(p, slots)
    lo = 0 if start is None else max(0, start)
    hi = total if end is None else min(total, end)
    if scan is None:
        scan = ExhaustiveScan()

    ech = _Echelon(n)
    ech.push(ech.reduce(_augmented(_row_of(Unit(1), n), 1)))
    chosen: list[int] = []
    pos = 0  # lex rank of the next combination to be visited

    def emit() -> tuple[EncodedSystem, QVector]:
        eqs: list[LinEquation] = [Unit(1)]
        rows = [_row_of(Unit(1), n)]
        b = [1]
        for idx in chosen:
            row, eq = pool[idx]
            rows.append(list(row))
            b.append(0)
            eqs.append(eq)
        enc = EncodedSystem(QMatrix(rows, cols=n), qvec(b), tuple(eqs))
        return enc, ech.back_substitute()

    def walk(first: int, slots_left: int) -> Iterator[tuple[EncodedSystem, QVector]]:
        nonlocal pos
        if slots_left == 0:
            if lo <= pos < hi:
                scan.subsets_considered += 1
                scan.yielded += 1
                yield emit()
            pos += 1
            return
        for idx in range(first, p - slots_left + 1):
            subtree = comb(p - idx - 1, slots_left - 1)
            if pos + subtree <= lo or pos >= hi:
                pos += subtree
                continue
            entry = ech.reduce(_augmented(pool[idx][0], 0))
            if entry is None:
                overlap = min(pos + subtree, hi) - max(pos, lo)
                if overlap > 0:
                    scan.subsets_considered += overlap
                pos += subtree
                continue
            ech.push(entry)
            chosen.append(idx)
            yield from walk(idx + 1, slots_left - 1)
            chosen.pop()
            ech.pop()

    yield from walk(0, slots)
    if lo == 0 and hi == total and scan.subsets_considered != total:
        raise AssertionError(
            f"enumerator visited {scan.subsets_considered} subsets, expected {total}"
        )


# ---------------------------------------------------------------------------
# checkers

@dataclass(frozen=True)
class BoundVerdict:
    passed: bool
    witness_index: int | None = None  # 1-based index of the first violation


def check_bound_pow2(x: Sequence[Fraction], n: int) -> BoundVerdict:
    """Pass iff |x_i| <= 2^(n-1) for every entry, compared exactly."""
    bound = Fraction(2) ** (n - 1)
    for pos, value in enumerate(x, start=1):
        if abs(value) > bound:
            return BoundVerdict(False, pos)
    return BoundVerdict(True)


def check_bound_sqrt5(x: Sequence[Fraction], n: int) -> BoundVerdict:
    """Pass iff x_i^2 <= 5^(n-1); squaring keeps the comparison rational."""
    bound = Fraction(5) ** (n - 1)
    for pos, value in enumerate(x, start=1):
        if value * value > bound:
            return BoundVerdict(False, pos)
    return BoundVerdict(True)


def conj3_stats(x: Sequence[Fraction]) -> tuple[int, int]:
    """(max |numerator|, max denominator) over entries in lowest terms."""
    max_num = 0
    max_den = 1
    for value in x:
        max_num = max(max_num, abs(value.numerator))
        max_den = max(max_den, value.denominator)
    return max_num, max_den


def conj4_check(x: Sequence[Fraction]) -> tuple[Fraction, bool]:
    """Max consecutive ratio of the ascending clamped profile c_i = max(1, |x_i|).

    The clamp makes the |x_i| >= 1 hypothesis automatic; verdict passes
    iff the largest ratio is <= 2 (exact comparison).
    """
    clamped = sorted(max(Fraction(1), abs(Fraction(v))) for v in x)
    ratio = Fraction(1)
    for small, big in zip(clamped, clamped[1:]):
        ratio = max(ratio, big / small)
    return ratio, ratio <= 2


CONJ2_PATTERNS: tuple[tuple[int, ...], ...] = (
    (1,),
    (-1, 2),
    (2, -1),
    (-1, 1, 1),
    (1, -1, 1),
    (1, 1, -1),
)


def conj2_rows(n: int) -> list[tuple[int, ...]]:
    """All width-n rows whose nonzero entries read as one of the six patterns.

    Count is n + 2*C(n,2) + 3*C(n,3).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    rows: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for pattern in CONJ2_PATTERNS:
        if len(pattern) > n:
            continue
        for positions in combinations(range(n), len(pattern)):
            row = [0] * n
            for pos, value in zip(positions, pattern):
                row[pos] = value
            key = tuple(row)
            if key not in seen:
                seen.add(key)
                rows.append(key)
    return rows


def conj2_check(rows: Sequence[Sequence[int | Fraction]]) -> tuple[Fraction, bool]:
    """Max |det| over the n minors obtained by deleting one column.

    Expects n-1 rows of width n; verdict passes iff the maximum is
    <= 2^(n-1) (exact).
    """
    if not rows:
        raise DimensionMismatchError("need at least one row")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionMismatchError("ragged rows")
    if len(rows) != n - 1:
        raise DimensionMismatchError(f"expected {n - 1} rows of width {n}, got {len(rows)}")
    best = Fraction(0)
    for skip in range(n):
        minor = QMatrix([[r[c] for c in range(n) if c != skip] for r in rows], cols=n - 1)
        best = max(best, abs(det_bareiss(minor)))
    return best, best <= Fraction(2) ** (n - 1)


HAT_CONSTANTS = (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2))


def observation1_hat_search(s: LinSystem, x: Sequence[Fraction]) -> QVector | None:
    """Search the per-coordinate grid {x_i, 0, 1, 2, 1/2} for a bounded solution.

    Candidates per coordinate keep x_i first, then 0, 1, 2, 1/2, filtered
    to |r| <= 2^(n-1); the first grid point solving the system exactly is
    returned.  None at n <= 4 refutes the replacement claim and must be
    treated as a hard failure by callers.
    """
    if s.n > 4:
        raise PreconditionError("hat search only supports n <= 4")
    xs = qvec(x)
    if not solves(s, xs):
        raise PreconditionError("x does not solve the system")
    bound = Fraction(2) ** (s.n - 1)
    axes: list[list[Fraction]] = []
    for value in xs:
        candidates = []
        for option in (value, *HAT_CONSTANTS):
            if abs(option) <= bound and option not in candidates:
                candidates.append(option)
        axes.append(candidates)
    for hat in product(*axes):
        if solves(s, hat):
            return hat
    return None
