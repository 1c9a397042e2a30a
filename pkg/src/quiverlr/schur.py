"""Symmetric functions in the Schur basis and their tensor powers."""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .tableaux import (
    Partition,
    contains,
    partitions,
    skew_lr_expansion,
    subpartitions,
    weight,
)

PartitionTuple = tuple[Partition, ...]


def straighten(seq: Sequence[int]) -> tuple[int, Partition]:
    """Rewrite the Jacobi-Trudi determinant s_I as ``sign * s_lambda``.

    Returns ``(0, ())`` when the determinant vanishes.
    """
    p = len(seq)
    shifted = [a + p - i for i, a in enumerate(seq, start=1)]
    if len(set(shifted)) < p:
        return 0, ()
    # parity of the sorting permutation by counting inversions
    inversions = sum(1 for i in range(p) for j in range(i + 1, p) if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    parts = [v - (p - i) for i, v in enumerate(ordered, start=1)]
    if parts and parts[-1] < 0:
        return 0, ()
    while parts and parts[-1] == 0:
        parts.pop()
    return (-1 if inversions % 2 else 1), tuple(parts)


def partition_key(lam: Partition) -> tuple:
    return (len(lam), lam)


def _fmt_partition(lam: Partition) -> str:
    return "s[" + ",".join(map(str, lam)) + "]" if lam else "1"


def _fmt_term(coeff: int, body: str, first: bool) -> str:
    sign = "-" if coeff < 0 else ("" if first else "+")
    mag = abs(coeff)
    if body == "1":
        text = str(mag)
    else:
        text = body if mag == 1 else f"{mag}*{body}"
    if first:
        return sign + text
    return f" {sign} {text}"


class SchurElement:
    """Finite Z-linear combination of Schur functions ``s_lambda``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = ()):
        acc: dict[Partition, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            acc[tuple(lam)] += c
        self._terms = {lam: c for lam, c in acc.items() if c}

    @classmethod
    def schur(cls, lam: Sequence[int], coeff: int = 1) -> SchurElement:
        return cls({tuple(lam): coeff})

    @classmethod
    def one(cls) -> SchurElement:
        return cls({(): 1})

    @property
    def terms(self) -> Mapping[Partition, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self._terms.items(), key=lambda kv: partition_key(kv[0]))

    def coefficient(self, lam: Sequence[int]) -> int:
        return self._terms.get(tuple(lam), 0)

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def is_homogeneous(self, degree: int) -> bool:
        return all(weight(lam) == degree for lam in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = SchurElement({(): other})
        if not isinstance(other, SchurElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: SchurElement) -> SchurElement:
        return SchurElement(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> SchurElement:
        return SchurElement({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other: SchurElement) -> SchurElement:
        return self + (-other)

    def __mul__(self, other: SchurElement | int) -> SchurElement:
        if isinstance(other, int):
            return SchurElement({lam: c * other for lam, c in self._terms.items()})
        return schur_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SchurElement:
        out = SchurElement.one()
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return "".join(
            _fmt_term(c, _fmt_partition(lam), i == 0) for i, (lam, c) in enumerate(self.items())
        )

    def __repr__(self) -> str:
        return f"SchurElement({str(self)!r})"

    def to_json(self) -> dict[str, int]:
        return {"[" + ",".join(map(str, lam)) + "]": c for lam, c in self.items()}


@lru_cache(maxsize=None)
def schur_product_basis(sigma: Partition, tau: Partition) -> tuple[tuple[Partition, int], ...]:
    """``s_sigma * s_tau`` as a tuple of ``(mu, c^mu_{sigma,tau})``."""
    n = weight(sigma) + weight(tau)
    top = (sigma[0] if sigma else 0) + (tau[0] if tau else 0)
    out = []
    for mu in partitions(n, top):
        if len(mu) > len(sigma) + len(tau) or not contains(mu, sigma) or not contains(mu, tau):
            continue
        c = skew_lr_expansion(mu, sigma).get(tau, 0)
        if c:
            out.append((mu, c))
    return tuple(out)


def schur_multiply(f: SchurElement, g: SchurElement) -> SchurElement:
    acc: dict[Partition, int] = defaultdict(int)
    for sigma, a in f._terms.items():
        for tau, b in g._terms.items():
            for mu, c in schur_product_basis(sigma, tau):
                acc[mu] += a * b * c
    return SchurElement(acc)


@lru_cache(maxsize=None)
def _coproduct(lam: Partition, k: int) -> tuple[tuple[PartitionTuple, int], ...]:
    if k == 1:
        return (((lam,), 1),)
    acc: dict[PartitionTuple, int] = defaultdict(int)
    for first in subpartitions(lam):
        for nu, c in skew_lr_expansion(lam, first).items():
            for rest, c2 in _coproduct(nu, k - 1):
                acc[(first,) + rest] += c * c2
    return tuple((key, c) for key, c in acc.items() if c)


def coproduct_k(lam: Sequence[int], k: int) -> dict[PartitionTuple, int]:
    """k-fold coproduct of s_lam: ``{(sigma_1..sigma_k): c^lam_{sigma_1..sigma_k}}``."""
    if k < 1:
        raise ValueError(f"coproduct arity must be positive, got {k}")
    return dict(_coproduct(tuple(lam), k))


class TensorElement:
    """Element of the n-th tensor power of the symmetric functions, Schur basis."""

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[PartitionTuple, int] | Iterable = ()):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        acc: dict[PartitionTuple, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            key = tuple(tuple(lam) for lam in key)
            if len(key) != arity:
                raise ValueError(f"key {key} does not have arity {arity}")
            acc[key] += c
        self.arity = arity
        self._terms = {key: c for key, c in acc.items() if c}

    @classmethod
    def one(cls, arity: int) -> TensorElement:
        return cls(arity, {((),) * arity: 1})

    @classmethod
    def from_schur(cls, f: SchurElement) -> TensorElement:
        return cls(1, {(lam,): c for lam, c in f.terms.items()})

    @property
    def terms(self) -> Mapping[PartitionTuple, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[PartitionTuple, int]]:
        return sorted(self._terms.items(), key=lambda kv: tuple(map(partition_key, kv[0])))

    def coefficient(self, key: Sequence[Sequence[int]]) -> int:
        key = tuple(tuple(lam) for lam in key)
        if len(key) != self.arity:
            raise ValueError(f"key {key} does not have arity {self.arity}")
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self._terms.items())))

    def __add__(self, other: TensorElement) -> TensorElement:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        return TensorElement(self.arity, list(self._terms.items()) + list(other._terms.items()))

    def __mul__(self, other: TensorElement) -> TensorElement:
        return tensor_multiply(self, other)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        if self.arity == 0:
            return str(self._terms[()])
        return "".join(
            _fmt_term(c, " ⊗ ".join(map(_fmt_partition, key)), i == 0)
            for i, (key, c) in enumerate(self.items())
        )

    def __repr__(self) -> str:
        return f"TensorElement({self.arity}, {str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"shapes": [list(lam) for lam in key], "coeff": c} for key, c in self.items()]


def tensor_embed(elem: TensorElement, left_pad: int, right_pad: int) -> TensorElement:
    """``1^{left_pad} ⊗ elem ⊗ 1^{right_pad}``."""
    pad_l, pad_r = ((),) * left_pad, ((),) * right_pad
    return TensorElement(
        elem.arity + left_pad + right_pad,
        {pad_l + key + pad_r: c for key, c in elem.terms.items()},
    )


def tensor_multiply(a: TensorElement, b: TensorElement) -> TensorElement:
    """Factor-wise product."""
    if a.arity != b.arity:
        raise ValueError(f"arity mismatch: {a.arity} vs {b.arity}")
    acc: dict[PartitionTuple, int] = defaultdict(int)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            slots = [schur_product_basis(x, y) for x, y in zip(ka, kb)]
            for key, c in _expand_slots(slots):
                acc[key] += ca * cb * c
    return TensorElement(a.arity, acc)


def _expand_slots(slots: list) -> Iterator[tuple[PartitionTuple, int]]:
    if not slots:
        yield (), 1
        return
    for rest, c in _expand_slots(slots[1:]):
        for lam, c0 in slots[0]:
            yield (lam,) + rest, c0 * c


def tensor_coproduct_at(elem: TensorElement, slot: int, k: int) -> TensorElement:
    """Apply the k-fold coproduct to factor ``slot`` (1-based)."""
    if not 1 <= slot <= elem.arity:
        raise ValueError(f"slot {slot} out of range for arity {elem.arity}")
    if k < 1:
        raise ValueError(f"coproduct arity must be positive, got {k}")
    acc: dict[PartitionTuple, int] = defaultdict(int)
    for key, c in elem.terms.items():
        for split, c2 in _coproduct(key[slot - 1], k):
            acc[key[: slot - 1] + split + key[slot:]] += c * c2
    return TensorElement(elem.arity + k - 1, acc)
