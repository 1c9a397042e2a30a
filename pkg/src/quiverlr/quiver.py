"""Rank conditions, rectangle diagrams and the quiver coefficients c_mu(r).

Rank conditions for a sequence E_0 -> E_1 -> ... -> E_n are stored as the
rows of the rank diagram: ``rows[k][i] = r_{i, i+k}``, so ``rows[0]`` holds the
ranks of the spaces themselves.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .schur import (
    PartitionTuple,
    TensorElement,
    straighten,
    tensor_coproduct_at,
    tensor_embed,
    tensor_multiply,
)
from .tableaux import Partition, conjugate, skew_lr_expansion, subpartitions


class Rectangle(NamedTuple):
    rows: int
    cols: int

    @property
    def boxes(self) -> int:
        return self.rows * self.cols

    def is_empty(self) -> bool:
        return self.rows == 0 or self.cols == 0

    def partition(self) -> Partition:
        return (self.cols,) * self.rows if self.cols else ()


@dataclass(frozen=True)
class RankConditions:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("rank diagram needs at least one row")
        width = len(rows[0])
        for k, row in enumerate(rows):
            if len(row) != width - k:
                raise ValueError(f"rank diagram row {k} has {len(row)} entries, expected {width - k}")
            if any(v < 0 for v in row):
                raise ValueError(f"rank diagram row {k} has a negative entry")
        if len(rows) != width:
            raise ValueError(f"rank diagram has {len(rows)} rows, expected {width}")

    @classmethod
    def from_function(cls, n: int, r) -> RankConditions:
        return cls(tuple(tuple(r(i, i + k) for i in range(n + 1 - k)) for k in range(n + 1)))

    @property
    def n(self) -> int:
        """Number of maps."""
        return len(self.rows) - 1

    def r(self, i: int, j: int) -> int:
        if not 0 <= i <= j <= self.n:
            raise IndexError(f"no rank condition r_({i},{j}) for n={self.n}")
        return self.rows[j - i][i]

    def ranks(self) -> tuple[int, ...]:
        return self.rows[0]

    def bottom(self) -> RankConditions:
        """Drop the top row of the rank diagram (the ranks of the spaces)."""
        return RankConditions(self.rows[1:])

    def restrict(self, indices: Sequence[int]) -> RankConditions:
        """Rank conditions of the subsequence E_{indices[0]} -> E_{indices[1]} -> ..."""
        idx = list(indices)
        return RankConditions.from_function(len(idx) - 1, lambda a, b: self.r(idx[a], idx[b]))

    def to_text(self) -> str:
        return "\n".join([str(self.n)] + [" ".join(map(str, row)) for row in self.rows]) + "\n"

    @classmethod
    def from_text(cls, text: str) -> RankConditions:
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or len(lines[0]) != 1:
            raise ValueError("first line must hold the number of maps n")
        try:
            n = int(lines[0][0])
            rows = [[int(v) for v in ln] for ln in lines[1:]]
        except ValueError as exc:
            raise ValueError(f"rank diagram entries must be integers: {exc}") from None
        if n < 0 or len(rows) != n + 1:
            raise ValueError(f"expected {n + 1} rank diagram rows after n={n}, got {len(rows)}")
        return cls(tuple(tuple(row) for row in rows))

    def __str__(self) -> str:
        return "\n".join(" " * k + "  ".join(map(str, row)) for k, row in enumerate(self.rows))


def occurrence_violations(r: RankConditions) -> list[str]:
    out = []
    for i in range(r.n + 1):
        for j in range(i + 1, r.n + 1):
            if r.r(i, j) > min(r.r(i, j - 1), r.r(i + 1, j)):
                out.append(f"r_({i},{j}) = {r.r(i, j)} exceeds min(r_({i},{j - 1}), r_({i + 1},{j}))")
            if j - i >= 2:
                excess = r.r(i, j) - r.r(i, j - 1) - r.r(i + 1, j) + r.r(i + 1, j - 1)
                if excess < 0:
                    out.append(f"r_({i},{j}) - r_({i},{j - 1}) - r_({i + 1},{j}) + r_({i + 1},{j - 1}) < 0")
    return out


def validate(r: RankConditions) -> bool:
    return not occurrence_violations(r)


def _require_valid(r: RankConditions) -> None:
    bad = occurrence_violations(r)
    if bad:
        raise ValueError("rank conditions cannot occur: " + "; ".join(bad))


def rectangle(r: RankConditions, i: int, j: int) -> Rectangle:
    return Rectangle(r.r(i + 1, j) - r.r(i, j), r.r(i, j - 1) - r.r(i, j))


@dataclass(frozen=True)
class RectangleDiagram:
    n: int
    rect: dict

    def __getitem__(self, ij: tuple[int, int]) -> Rectangle:
        return self.rect[ij]

    def total_boxes(self) -> int:
        return sum(R.boxes for R in self.rect.values())

    def nonempty(self) -> list[tuple[int, int]]:
        return sorted(ij for ij, R in self.rect.items() if not R.is_empty())

    def row(self, k: int) -> list[Rectangle]:
        """k-th row of the diagram (k = 1 is the top row R_{i,i+1})."""
        return [self.rect[(i, i + k)] for i in range(self.n + 1 - k)]


def rectangle_diagram(r: RankConditions) -> RectangleDiagram:
    _require_valid(r)
    return RectangleDiagram(
        r.n, {(i, j): rectangle(r, i, j) for i in range(r.n) for j in range(i + 1, r.n + 1)}
    )


def expected_codim(r: RankConditions) -> int:
    """d(r) = sum over i < j of (r_{i,j-1} - r_{ij})(r_{i+1,j} - r_{ij})."""
    return sum(
        (r.r(i, j - 1) - r.r(i, j)) * (r.r(i + 1, j) - r.r(i, j))
        for i in range(r.n)
        for j in range(i + 1, r.n + 1)
    )


# -- the inductive algorithm ----------------------------------------------------


@lru_cache(maxsize=None)
def _splittings(mu: Partition, max_rows: int) -> tuple[tuple[Partition, Partition, int], ...]:
    """Pairs (sigma, tau) with c^mu_{sigma,tau} != 0 and len(sigma) <= max_rows."""
    out = []
    for sigma in subpartitions(mu):
        if len(sigma) > max_rows:
            continue
        for tau, c in skew_lr_expansion(mu, sigma).items():
            out.append((sigma, tau, c))
    return tuple(out)


@lru_cache(maxsize=None)
def attach(rect: Rectangle, sigma: Partition, tau: Partition) -> tuple[int, Partition]:
    """Straightened Schur function of R with sigma glued right and tau below."""
    if rect.rows == 0:
        if sigma:
            raise ValueError("nothing can be attached to the right of a rectangle with no rows")
        return 1, tau
    padded = sigma + (0,) * (rect.rows - len(sigma))
    seq = [rect.cols + s for s in padded] + list(tau)
    return straighten(seq)


@lru_cache(maxsize=None)
def _compute_P(r: RankConditions) -> TensorElement:
    n = r.n
    if n == 0:
        return TensorElement.one(0)
    if n == 1:
        return TensorElement(1, {(rectangle(r, 0, 1).partition(),): 1})
    top = [rectangle(r, i, i + 1) for i in range(n)]
    acc: dict[PartitionTuple, int] = defaultdict(int)
    for key, coeff in _compute_P(r.bottom()).terms.items():
        # options[i] lists (sigma_{i+1}, tau_{i+1}, c) for the (i+1)-st factor of P_rbar
        options = [_splittings(mu, top[i].rows) for i, mu in enumerate(key)]
        for choice in _choices(options):
            c = coeff
            out: list[Partition] = []
            for i in range(n):
                sigma = choice[i][0] if i < n - 1 else ()
                tau = choice[i - 1][1] if i > 0 else ()
                sign, lam = attach(top[i], sigma, tau)
                if sign == 0:
                    break
                c *= sign
                out.append(lam)
            else:
                for s, t, lr in choice:
                    c *= lr
                acc[tuple(out)] += c
    return TensorElement(n, acc)


def _choices(options: list) -> Iterator[tuple]:
    if not options:
        yield ()
        return
    for rest in _choices(options[1:]):
        for opt in options[0]:
            yield (opt,) + rest


def compute_P(r: RankConditions) -> TensorElement:
    """P_r = sum_mu c_mu(r) s_{mu_1} ⊗ ... ⊗ s_{mu_n}."""
    _require_valid(r)
    if r.n < 1:
        raise ValueError("compute_P needs at least one map")
    return _compute_P(r)


def coefficient(r: RankConditions, mu: Sequence[Sequence[int]]) -> int:
    if len(mu) != r.n:
        raise ValueError(f"expected {r.n} partitions, got {len(mu)}")
    return compute_P(r).coefficient(mu)


def dual(r: RankConditions) -> RankConditions:
    """Mirror the rank diagram: r^v_{ij} = r_{n-j, n-i}."""
    n = r.n
    return RankConditions.from_function(n, lambda i, j: r.r(n - j, n - i))


def dual_tuple(mu: Sequence[Sequence[int]]) -> PartitionTuple:
    return tuple(conjugate(tuple(lam)) for lam in reversed(mu))


# -- independent subsequences -----------------------------------------------------


def independent_intervals(r: RankConditions, additive: bool = True) -> list[tuple[int, int]]:
    """Intervals [p, q], 1 <= p <= q <= n-1, such that every rectangle with
    exactly one of i, j in [p, q] is empty.

    With ``additive`` (the default) an interval is kept only when the two
    restrictions have expected codimensions adding up to d(r).  Emptiness alone
    is not enough: for dims (1, 0, 1) with all ranks 0 the middle space passes
    the emptiness test, yet dropping it creates a new rectangle.
    """
    diagram = rectangle_diagram(r)
    d = diagram.total_boxes()
    found = []
    for p in range(1, r.n):
        for q in range(p, r.n):
            if not all(
                R.is_empty()
                for (i, j), R in diagram.rect.items()
                if (p <= i <= q) != (p <= j <= q)
            ):
                continue
            if additive:
                inner, outer = split_at(r, p, q)
                if expected_codim(inner) + expected_codim(outer) != d:
                    continue
            found.append((p, q))
    return found


def split_at(r: RankConditions, p: int, q: int) -> tuple[RankConditions, RankConditions]:
    inner = r.restrict(range(p, q + 1))
    outer = r.restrict([k for k in range(r.n + 1) if not p <= k <= q])
    return inner, outer


def split_independent(r: RankConditions):
    """First independent subsequence as ``(p, q, r_inner, r_outer)``, or None."""
    intervals = independent_intervals(r)
    if not intervals:
        return None
    p, q = max(intervals, key=lambda pq: (pq[1] - pq[0], -pq[0]))
    return (p, q) + split_at(r, p, q)


def split_product(r: RankConditions, p: int, q: int) -> TensorElement:
    """(1^p ⊗ P_{r'} ⊗ 1^{n-q}) · Phi^{q-p+2}_p(P_{r''}) for the split at [p, q]."""
    inner, outer = split_at(r, p, q)
    left = tensor_embed(_compute_P(inner), p, r.n - q)
    right = tensor_coproduct_at(_compute_P(outer), p, q - p + 2)
    return tensor_multiply(left, right)
