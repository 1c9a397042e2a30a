"""Tableau diagrams, factor sequences and the conjectured LR rule for c_mu(r)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from itertools import product as cartesian
from typing import Iterator

from .quiver import RankConditions, compute_P, rectangle_diagram
from .schubert import Permutation, _ambient, rank_conditions_of
from .tableaux import EMPTY, Partition, Tableau, entries, factorizations, product, shape


@dataclass(frozen=True)
class TableauDiagram:
    n: int
    tab: dict = field(hash=False)

    def __getitem__(self, ij: tuple[int, int]) -> Tableau:
        return self.tab[ij]

    def bottom(self) -> TableauDiagram:
        """The diagram with its top row removed, reindexed like the rank conditions."""
        return TableauDiagram(
            self.n - 1, {(i, j - 1): t for (i, j), t in self.tab.items() if j - i >= 2}
        )

    def total_boxes(self) -> int:
        return sum(len(entries(t)) for t in self.tab.values())


def cone(i: int, j: int) -> Iterator[tuple[int, int]]:
    """Positions (k, l) above (i, j) within 45 degrees: i <= k < l <= j, (k, l) != (i, j)."""
    for k in range(i, j):
        for l in range(k + 1, j + 1):
            if (k, l) != (i, j):
                yield k, l


def canonical_tableau_diagram(r: RankConditions, variant: str = "rows") -> TableauDiagram:
    """Fill every rectangle above the maximum entry of its cone.

    ``variant="rows"`` fills row t of a rectangle with offset + t;
    ``variant="staggered"`` uses offset + t + c for the box in column c, a
    second valid filling for spot-checking filling independence.
    """
    if variant not in ("rows", "staggered"):
        raise ValueError(f"unknown filling variant {variant!r}")
    diagram = rectangle_diagram(r)
    tab: dict[tuple[int, int], Tableau] = {}
    top: dict[tuple[int, int], int] = {}
    for k in range(1, r.n + 1):
        for i in range(r.n + 1 - k):
            j = i + k
            R = diagram[(i, j)]
            offset = max((top[kl] for kl in cone(i, j)), default=0)
            if R.is_empty():
                tab[(i, j)] = EMPTY
                top[(i, j)] = offset
                continue
            if variant == "rows":
                t = tuple(tuple([offset + row] * R.cols) for row in range(1, R.rows + 1))
            else:
                t = tuple(
                    tuple(offset + row + col for col in range(R.cols)) for row in range(1, R.rows + 1)
                )
            tab[(i, j)] = t
            top[(i, j)] = max(entries(t))
    return TableauDiagram(r.n, tab)


def check_tableau_diagram(d: TableauDiagram, r: RankConditions) -> list[str]:
    """Violations of the tableau-diagram conditions (empty list when valid)."""
    diagram = rectangle_diagram(r)
    problems = []
    for (i, j), t in d.tab.items():
        R = diagram[(i, j)]
        want = R.partition()
        if shape(t) != want:
            problems.append(f"T_({i},{j}) has shape {shape(t)}, expected {want}")
        lo = min(entries(t), default=None)
        if lo is None:
            continue
        for kl in cone(i, j):
            above = entries(d.tab[kl])
            if above and max(above) >= lo:
                problems.append(f"T_({i},{j}) is not strictly above T_{kl}")
    return problems


def factor_sequences(d: TableauDiagram) -> frozenset[tuple[Tableau, ...]]:
    """All distinct factor sequences (W_1..W_n) of the tableau diagram."""
    memo: dict[int, frozenset] = {}

    def rec(level: TableauDiagram) -> frozenset:
        if level.n in memo:
            return memo[level.n]
        if level.n == 1:
            found = frozenset({(level[(0, 1)],)})
        elif level.n == 0:
            found = frozenset({()})
        else:
            n = level.n
            top = [level[(i, i + 1)] for i in range(n)]
            seen = set()
            for U in rec(level.bottom()):
                for split in cartesian(*(sorted(factorizations(u)) for u in U)):
                    W = []
                    for i in range(n):
                        parts = []
                        if i > 0:
                            parts.append(split[i - 1][1])
                        parts.append(top[i])
                        if i < n - 1:
                            parts.append(split[i][0])
                        W.append(reduce(product, parts, EMPTY))
                    seen.add(tuple(W))
            found = frozenset(seen)
        memo[level.n] = found
        return found

    return rec(d)


def shape_counts(seqs) -> Counter:
    return Counter(tuple(shape(W) for W in seq) for seq in seqs)


def in_proven_regime(r: RankConditions) -> bool:
    """Rows 4 and below empty, and no two neighbouring non-empty rectangles in row 3."""
    diagram = rectangle_diagram(r)
    for k in range(4, r.n + 1):
        if any(not R.is_empty() for R in diagram.row(k)):
            return False
    if r.n >= 3:
        third = [not R.is_empty() for R in diagram.row(3)]
        if any(a and b for a, b in zip(third, third[1:])):
            return False
    return True


@dataclass
class ConjectureReport:
    entries: dict
    proven_regime: bool
    witness: dict = field(default_factory=dict)

    @property
    def all_match(self) -> bool:
        return all(e["match"] for e in self.entries.values())

    def mismatches(self) -> dict:
        return {k: e for k, e in self.entries.items() if not e["match"]}

    def to_json(self) -> dict:
        return {
            "proven_regime": self.proven_regime,
            "all_match": self.all_match,
            "terms": {
                str([list(lam) for lam in key]): dict(e) for key, e in sorted(self.entries.items())
            },
        }


def conjecture_check(r: RankConditions, variant: str = "rows") -> ConjectureReport:
    """Compare factor-sequence counts by shape with the coefficients of P_r."""
    counts = shape_counts(factor_sequences(canonical_tableau_diagram(r, variant)))
    coeffs = compute_P(r).terms
    entries_ = {}
    for key in set(counts) | set(coeffs):
        fc, c = counts.get(key, 0), coeffs.get(key, 0)
        entries_[key] = {"factor_count": fc, "coefficient": c, "match": fc == c}
    report = ConjectureReport(entries_, in_proven_regime(r))
    if not report.all_match:
        report.witness = {"rank_conditions": r.rows, "variant": variant}
    return report


def middle_only_counts(w: Permutation, variant: str = "rows") -> Counter:
    """Shapes of W over factor sequences (∅, .., ∅, W, ∅, .., ∅) of w's diagram."""
    w = _ambient(w)
    m = w.size - 1
    seqs = factor_sequences(canonical_tableau_diagram(rank_conditions_of(w), variant))
    out: Counter = Counter()
    for seq in seqs:
        if all(not W for k, W in enumerate(seq) if k != m - 1):
            out[shape(seq[m - 1])] += 1
    return out


def column_tableaux(w: Permutation) -> dict[int, Tableau]:
    """T_j = T_{0j} · T_{1j} · ... · T_{m-1,j} for j = m..2m-1."""
    w = _ambient(w)
    m = w.size - 1
    d = canonical_tableau_diagram(rank_conditions_of(w))
    return {j: reduce(product, (d[(i, j)] for i in range(m)), EMPTY) for j in range(m, 2 * m)}


def w_right(w: Permutation) -> Tableau:
    cols = column_tableaux(w)
    return reduce(product, (cols[j] for j in sorted(cols)), EMPTY)


def w_left(w: Permutation) -> Tableau:
    w = _ambient(w)
    m = w.size - 1
    d = canonical_tableau_diagram(rank_conditions_of(w))
    out = EMPTY
    for i in range(m):
        for j in range(m, 2 * m):
            out = product(out, d[(i, j)])
    return out
