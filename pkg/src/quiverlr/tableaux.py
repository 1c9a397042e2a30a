"""Partitions, semistandard tableaux and Littlewood-Richardson numbers.

Partitions are plain tuples of positive ints in weakly decreasing order
(trailing zeros stripped).  Tableaux are tuples of rows, each row a tuple
of positive ints; the empty tableau is ``()``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product as cartesian
from math import factorial
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]

EMPTY: Tableau = ()


def make_partition(parts: Iterable[int]) -> Partition:
    """Canonical partition from ``parts``; raises on increasing or negative parts."""
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ValueError(f"parts of a partition must weakly decrease: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"partition parts must be non-negative: {parts}")
    return parts


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def weight(shape: Sequence[int]) -> int:
    return sum(shape)


def conjugate(shape: Sequence[int]) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > c) for c in range(shape[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def subpartitions(shape: Partition) -> Iterator[Partition]:
    """All partitions contained in ``shape`` (including ``()`` and ``shape``)."""

    def rec(k: int, bound: int) -> Iterator[Partition]:
        if k == len(shape):
            yield ()
            return
        for part in range(min(bound, shape[k]), -1, -1):
            if part == 0:
                yield ()
            else:
                for rest in rec(k + 1, part):
                    yield (part,) + rest

    yield from rec(0, shape[0] if shape else 0)


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``lam`` is below ``mu`` in dominance order."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance order needs equal weights: {tuple(lam)} vs {tuple(mu)}")
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a > b:
            return False
    return True


def hook_lengths(shape: Partition) -> list[int]:
    conj = conjugate(shape)
    return [shape[i] - j + conj[j] - i - 1 for i in range(len(shape)) for j in range(shape[i])]


def standard_tableau_count(shape: Partition) -> int:
    """Number of standard Young tableaux of ``shape`` by the hook length formula."""
    denom = 1
    for h in hook_lengths(shape):
        denom *= h
    return factorial(weight(shape)) // denom


# -- tableaux -----------------------------------------------------------------


def shape(tab: Tableau) -> Partition:
    return tuple(len(row) for row in tab)


def entries(tab: Tableau) -> list[int]:
    return [v for row in tab for v in row]


def is_semistandard(tab: Sequence[Sequence[int]]) -> bool:
    if not is_partition([len(row) for row in tab]):
        return False
    for r, row in enumerate(tab):
        if any(v < 1 for v in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if r and any(tab[r - 1][c] >= row[c] for c in range(len(row))):
            return False
    return True


def make_tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    tab = tuple(tuple(row) for row in rows if len(tuple(row)))
    if not is_semistandard(tab):
        raise ValueError(f"not a semistandard tableau: {tab}")
    return tab


def row_word(tab: Tableau) -> list[int]:
    """Reading word: rows from bottom to top, each left to right."""
    return [v for row in reversed(tab) for v in row]


def insert(tab: Tableau, value: int) -> Tableau:
    """Schensted row insertion of ``value`` into ``tab``."""
    if value < 1:
        raise ValueError(f"tableau entries must be positive, got {value}")
    rows = [list(row) for row in tab]
    for row in rows:
        # leftmost entry strictly greater than value gets bumped
        for c, v in enumerate(row):
            if v > value:
                row[c], value = value, v
                break
        else:
            row.append(value)
            return tuple(tuple(r) for r in rows)
    rows.append([value])
    return tuple(tuple(r) for r in rows)


def product(left: Tableau, right: Tableau) -> Tableau:
    """Plactic product ``left · right``: insert the reading word of ``right``."""
    out = left
    for v in row_word(right):
        out = insert(out, v)
    return out


def tableaux_with_content(content: Mapping[int, int]) -> Iterator[Tableau]:
    """All semistandard tableaux (any shape) with the given entry multiplicities.

    Built value by value: the boxes holding ``v`` form a horizontal strip.
    """
    values = sorted(v for v, c in content.items() if c)

    def strips(sh: list[int], size: int, row: int) -> Iterator[list[int]]:
        # add ``size`` boxes as a horizontal strip, rows ``row``.. of ``sh``
        if size == 0:
            yield [0] * (len(sh) + 1 - row)
            return
        if row > len(sh):
            return
        limit = size if row == 0 else min(size, sh[row - 1] - (sh[row] if row < len(sh) else 0))
        for k in range(limit, -1, -1):
            for rest in strips(sh, size - k, row + 1):
                yield [k] + rest

    def rec(idx: int, rows: list[list[int]]) -> Iterator[Tableau]:
        if idx == len(values):
            yield tuple(tuple(r) for r in rows)
            return
        v = values[idx]
        sh = [len(r) for r in rows]
        for added in strips(sh, content[v], 0):
            new = [list(r) for r in rows] + [[]]
            for r, k in enumerate(added):
                new[r].extend([v] * k)
            yield from rec(idx + 1, [r for r in new if r])

    yield from rec(0, [])


@lru_cache(maxsize=None)
def factorizations(tab: Tableau) -> frozenset[tuple[Tableau, Tableau]]:
    """All pairs ``(P, Q)`` with ``product(P, Q) == tab``."""
    counts = Counter(entries(tab))
    values = sorted(counts)
    full = shape(tab)
    found = set()
    for split in cartesian(*(range(counts[v] + 1) for v in values)):
        left = {v: k for v, k in zip(values, split) if k}
        right = {v: counts[v] - k for v, k in zip(values, split) if counts[v] - k}
        lefts = [p for p in tableaux_with_content(left) if contains(full, shape(p))]
        rights = [q for q in tableaux_with_content(right) if contains(full, shape(q))]
        for p in lefts:
            for q in rights:
                if product(p, q) == tab:
                    found.add((p, q))
    return frozenset(found)


# -- Littlewood-Richardson ------------------------------------------------------


@lru_cache(maxsize=None)
def _skew_lr(outer: Partition, inner: Partition) -> Mapping[Partition, int]:
    if not contains(outer, inner):
        return MappingProxyType({})
    inner = inner + (0,) * (len(outer) - len(inner))
    cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(outer) + 2)
    result: Counter = Counter()

    # cells are visited in reverse reading order: rows top to bottom, right to left
    def rec(k: int) -> None:
        if k == len(cells):
            result[tuple(c for c in counts[1:] if c)] += 1
            return
        r, c = cells[k]
        hi = filling.get((r, c + 1), len(outer))
        lo = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            rec(k + 1)
            counts[v] -= 1
            del filling[(r, c)]

    rec(0)
    return MappingProxyType(dict(result))


def skew_lr_expansion(outer: Partition, inner: Partition) -> Mapping[Partition, int]:
    """Schur expansion of the skew shape ``outer/inner``: ``{nu: c^outer_{inner,nu}}``."""
    return _skew_lr(tuple(outer), tuple(inner))


def lr_coefficient(mu: Partition, sigma: Partition, tau: Partition) -> int:
    """Littlewood-Richardson coefficient c^mu_{sigma,tau}."""
    if weight(sigma) + weight(tau) != weight(mu):
        return 0
    return skew_lr_expansion(tuple(mu), tuple(sigma)).get(tuple(tau), 0)
