"""Exact polynomials in x_1, x_2, ... and y_1, y_2, ... over the integers.

A monomial is a pair of exponent tuples ``(xexp, yexp)`` with trailing
zeros stripped, so a polynomial does not carry a fixed variable count and
``x_1`` compares equal whether it came from a ring with 2 or 9 variables.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .schur import SchurElement
from .tableaux import Partition, partitions

Exponent = tuple[int, ...]
Monomial = tuple[Exponent, Exponent]


def _strip(exp: Iterable[int]) -> Exponent:
    exp = list(exp)
    while exp and exp[-1] == 0:
        exp.pop()
    return tuple(exp)


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    # sum of two stripped exponents is stripped: its last entry is positive
    if not b:
        return a
    if not a:
        return b
    if len(a) < len(b):
        a, b = b, a
    return tuple(u + v for u, v in zip(a, b)) + a[len(b):]


class Polynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        acc: dict[Monomial, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (xe, ye), c in items:
            if any(e < 0 for e in xe) or any(e < 0 for e in ye):
                raise ValueError("exponents must be non-negative")
            acc[(_strip(xe), _strip(ye))] += c
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def _clean(cls, terms: dict[Monomial, int]) -> Polynomial:
        # terms already hold stripped exponents; only zero coefficients are dropped
        out = cls.__new__(cls)
        out._terms = {m: c for m, c in terms.items() if c}
        return out

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls({((), ()): c})

    @classmethod
    def x(cls, i: int, power: int = 1) -> Polynomial:
        return cls({((0,) * (i - 1) + (power,), ()): 1})

    @classmethod
    def y(cls, j: int, power: int = 1) -> Polynomial:
        return cls({((), (0,) * (j - 1) + (power,)): 1})

    @classmethod
    def monomial(cls, xexp: Sequence[int], yexp: Sequence[int] = (), coeff: int = 1) -> Polynomial:
        return cls({(tuple(xexp), tuple(yexp)): coeff})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    @property
    def nx(self) -> int:
        return max((len(xe) for xe, _ in self._terms), default=0)

    @property
    def ny(self) -> int:
        return max((len(ye) for _, ye in self._terms), default=0)

    def degree(self) -> int:
        return max((sum(xe) + sum(ye) for xe, ye in self._terms), default=-1)

    def is_homogeneous(self, d: int) -> bool:
        return all(sum(xe) + sum(ye) == d for xe, ye in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial._clean(acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        return self + (-other)

    def __rsub__(self, other: int) -> Polynomial:
        return Polynomial.constant(other) - self

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial._clean({m: c * other for m, c in self._terms.items()})
        acc: dict[Monomial, int] = defaultdict(int)
        for (xa, ya), ca in self._terms.items():
            for (xb, yb), cb in other._terms.items():
                acc[(_add_exp(xa, xb), _add_exp(ya, yb))] += ca * cb
        return Polynomial._clean(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def coefficient(self, xexp: Sequence[int], yexp: Sequence[int] = ()) -> int:
        return self._terms.get((_strip(xexp), _strip(yexp)), 0)

    def swap_x(self, i: int) -> Polynomial:
        """Exchange x_i and x_{i+1}."""
        out = {}
        for (xe, ye), c in self._terms.items():
            e = list(xe) + [0] * max(0, i + 1 - len(xe))
            e[i - 1], e[i] = e[i], e[i - 1]
            out[(_strip(e), ye)] = c
        return Polynomial(out)

    def truncate(self, nx: int, ny: int) -> Polynomial:
        """Set x_i = 0 for i > nx and y_j = 0 for j > ny."""
        return Polynomial(
            {m: c for m, c in self._terms.items() if len(m[0]) <= nx and len(m[1]) <= ny}
        )

    def is_symmetric_in_x(self, n: int) -> bool:
        if self.nx > n:
            return False
        return all(self.swap_x(i) == self for i in range(1, n))

    def __str__(self) -> str:
        if not self._terms:
            return "0"

        def mono(xe: Exponent, ye: Exponent) -> str:
            parts = []
            for name, exp in (("x", xe), ("y", ye)):
                for k, e in enumerate(exp, start=1):
                    if e == 1:
                        parts.append(f"{name}{k}")
                    elif e:
                        parts.append(f"{name}{k}^{e}")
            return "*".join(parts)

        ordered = sorted(
            self._terms.items(),
            key=lambda kv: (-(sum(kv[0][0]) + sum(kv[0][1])), [-e for e in kv[0][0]], [-e for e in kv[0][1]]),
        )
        out = []
        for k, ((xe, ye), c) in enumerate(ordered):
            body = mono(xe, ye)
            mag = abs(c)
            text = (str(mag) if not body else (body if mag == 1 else f"{mag}*{body}"))
            sign = "-" if c < 0 else ("" if k == 0 else "+")
            out.append(sign + text if k == 0 else f" {sign} {text}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def divided_difference(f: Polynomial, i: int, check: bool = False) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.

    For a monomial with exponents a, b at x_i, x_{i+1} the quotient of
    x_i^a x_{i+1}^b - x_i^b x_{i+1}^a by x_i - x_{i+1} is the geometric sum
    below.  ``check`` multiplies back and raises if the quotient is off.
    """
    if i < 1:
        raise ValueError(f"divided difference index must be >= 1, got {i}")
    acc: dict[Monomial, int] = defaultdict(int)
    for (xe, ye), c in f.terms.items():
        e = list(xe) + [0] * max(0, i + 1 - len(xe))
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, hi = min(a, b), max(a, b)
        for k in range(hi - lo):
            e[i - 1], e[i] = hi - 1 - k, lo + k
            acc[(_strip(e), ye)] += sign * c
    out = Polynomial(acc)
    if check and out * (Polynomial.x(i) - Polynomial.x(i + 1)) != f - f.swap_x(i):
        raise ArithmeticError(f"divided difference d_{i} is not exact")
    return out


# -- symmetric polynomials ---------------------------------------------------------


@lru_cache(maxsize=None)
def complete_homogeneous(k: int, n: int) -> Polynomial:
    """h_k(x_1..x_n)."""
    if k < 0:
        return Polynomial()
    if k == 0:
        return Polynomial.constant(1)
    if n == 0:
        return Polynomial()
    # h_k(x_1..x_n) = sum_j x_n^j h_{k-j}(x_1..x_{n-1})
    out = Polynomial()
    for j in range(k + 1):
        out = out + Polynomial.x(n, j) * complete_homogeneous(k - j, n - 1)
    return out


@lru_cache(maxsize=None)
def elementary_y(k: int, m: int) -> Polynomial:
    """e_k(y_1..y_m)."""
    if k < 0 or k > m:
        return Polynomial()
    out = Polynomial()
    for idx in combinations(range(m), k):
        ye = [0] * m
        for j in idx:
            ye[j] = 1
        out = out + Polynomial.monomial((), ye)
    return out


@lru_cache(maxsize=None)
def super_complete(k: int, n: int, m: int) -> Polynomial:
    """h_k(x/y) = sum_b (-1)^b e_b(y) h_{k-b}(x)."""
    if k < 0:
        return Polynomial()
    out = Polynomial()
    for b in range(min(k, m) + 1):
        out = out + elementary_y(b, m) * complete_homogeneous(k - b, n) * (-1) ** b
    return out


def determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Laplace expansion along the first row, memoized on the column subset."""
    size = len(matrix)
    memo: dict[tuple[int, ...], Polynomial] = {}

    def minor(row: int, cols: tuple[int, ...]) -> Polynomial:
        if row == size:
            return Polynomial.constant(1)
        if cols in memo:
            return memo[cols]
        out = Polynomial()
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            term = entry * sub
            out = out - term if pos % 2 else out + term
        memo[cols] = out
        return out

    return minor(0, tuple(range(size)))


@lru_cache(maxsize=None)
def super_schur_eval(lam: Partition, n: int, m: int) -> Polynomial:
    """Super-symmetric Schur polynomial s_lam(x_1..x_n / y_1..y_m) by Jacobi-Trudi."""
    p = len(lam)
    matrix = [[super_complete(lam[i] + j - i, n, m) for j in range(p)] for i in range(p)]
    return determinant(matrix)


def schur_eval(lam: Sequence[int], n: int) -> Polynomial:
    """s_lam(x_1..x_n)."""
    return super_schur_eval(tuple(lam), n, 0)


def monomial_coefficient(f: Polynomial, xexp: Sequence[int], yexp: Sequence[int] = ()) -> int:
    return f.coefficient(xexp, yexp)


def expand_symmetric_in_schur(f: Polynomial, n: int, degree: int) -> SchurElement:
    """Schur expansion of a symmetric polynomial in x_1..x_n, homogeneous of ``degree``.

    Peels off the lexicographically leading monomial, whose exponent is then a
    partition, until nothing is left.
    """
    if f.ny:
        raise ValueError("expected a polynomial in x only")
    if not f.is_homogeneous(degree) and f:
        raise ValueError(f"polynomial is not homogeneous of degree {degree}")
    if not f.is_symmetric_in_x(n):
        raise ValueError(f"polynomial is not symmetric in x_1..x_{n}")
    if degree > n:
        raise ValueError(f"degree {degree} exceeds variable count {n}; expansion not faithful")
    shapes = set(partitions(degree))
    rest = f
    out: dict[Partition, int] = {}
    while rest:
        xe, _ = max(rest.terms, key=lambda m: m[0] + (0,) * (n - len(m[0])))
        lam = tuple(xe)
        if lam not in shapes:
            raise ValueError(f"leading exponent {xe} is not a partition of {degree}")
        c = rest.coefficient(xe)
        out[lam] = c
        rest = rest - schur_eval(lam, n) * c
    result = SchurElement(out)
    check = Polynomial()
    for lam, c in result.terms.items():
        check = check + schur_eval(lam, n) * c
    if check != f:
        raise ArithmeticError("Schur expansion does not re-evaluate to the input")
    return result
