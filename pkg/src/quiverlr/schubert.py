"""Permutations, their rank conditions, and double Schubert polynomials.

A permutation w in S_{m+1} gives the sequence
F_1 ⊂ ... ⊂ F_m -> G_m ->> ... ->> G_1 with 2m spaces; space k is F_{k+1}
for k < m and G_{2m-k} for k >= m.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _all_perms
from typing import Iterator, Sequence

from .poly import Polynomial, divided_difference, super_schur_eval
from .quiver import RankConditions, compute_P
from .tableaux import Partition

CoeffKey = tuple[tuple[int, ...], tuple[int, ...], Partition]


@dataclass(frozen=True, order=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(int(v) for v in self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """One-line notation: ``"2431"`` or ``"2,4,3,1"``."""
        text = text.strip()
        try:
            if "," in text:
                image = tuple(int(t) for t in text.split(","))
            else:
                if not text.isdigit():
                    raise ValueError
                image = tuple(int(ch) for ch in text)
        except ValueError:
            raise ValueError(f"cannot parse permutation {text!r}") from None
        return cls(image)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __len__(self) -> int:
        return len(self.image)

    def __str__(self) -> str:
        if self.size <= 9:
            return "".join(map(str, self.image))
        return ",".join(map(str, self.image))

    def length(self) -> int:
        w = self.image
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, v in enumerate(self.image, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def extend(self, size: int) -> Permutation:
        """Same permutation viewed in S_size (fixed points appended)."""
        if size < self.size:
            raise ValueError(f"cannot view {self} inside S_{size}")
        return Permutation(self.image + tuple(range(self.size + 1, size + 1)))

    def compose(self, other: Permutation) -> Permutation:
        """(self ∘ other)(i) = self(other(i)); sizes are padded to agree."""
        size = max(self.size, other.size)
        a, b = self.extend(size), other.extend(size)
        return Permutation(tuple(a(b(i)) for i in range(1, size + 1)))

    def swap_positions(self, i: int) -> Permutation:
        """w s_i: exchange the values at positions i and i+1."""
        w = list(self.extend(max(self.size, i + 1)).image)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image, start=1))


def length(w: Permutation) -> int:
    return w.length()


def inverse(w: Permutation) -> Permutation:
    return w.inverse()


def shift(w: Permutation, n: int) -> Permutation:
    """1^n × w."""
    return Permutation(tuple(range(1, n + 1)) + tuple(v + n for v in w.image))


def cross(w: Permutation, u: Permutation) -> Permutation:
    """w × u in S_{m+n}."""
    return Permutation(w.image + tuple(v + w.size for v in u.image))


def longest(m: int) -> Permutation:
    return Permutation(tuple(range(m, 0, -1)))


def all_permutations(m: int) -> list[Permutation]:
    return [Permutation(p) for p in _all_perms(range(1, m + 1))]


def rank_function(w: Permutation, p: int, q: int) -> int:
    """r_w(p, q) = #{i <= p : w(i) <= q}."""
    return sum(1 for i in range(1, p + 1) if w(i) <= q)


def _ambient(w: Permutation) -> Permutation:
    # S_1 carries no maps; view it in S_2
    return w if w.size >= 2 else w.extend(2)


def rank_conditions_of(w: Permutation) -> RankConditions:
    """Rank conditions of the flag-to-dual-flag sequence attached to w in S_{m+1}."""
    w = _ambient(w)
    m = w.size - 1

    def r(i: int, j: int) -> int:
        if j <= m - 1:
            return i + 1
        if i >= m:
            return 2 * m - j
        return rank_function(w, 2 * m - j, i + 1)

    return RankConditions.from_function(2 * m - 1, r)


def nonempty_rectangle_test(w: Permutation, i: int, j: int) -> bool:
    """Closed-form test for a non-empty rectangle R_ij in the diagram of w."""
    w = _ambient(w)
    m = w.size - 1
    if not 0 <= i < j <= 2 * m - 1:
        raise ValueError(f"no rectangle R_({i},{j}) for w in S_{m + 1}")
    if i > m - 1 or j < m:
        return False
    return w(2 * m + 1 - j) <= i + 1 and w.inverse()(i + 2) <= 2 * m - j


def quiver_coefficients(w: Permutation, strict: bool = False) -> dict[CoeffKey, int]:
    """Table of c_w(a, b, lambda), keyed by ``((a_2..a_m), (b_2..b_m), lambda)``.

    Terms of P_r whose flag slots are not rows (or dual-flag slots not
    columns) vanish in the Schubert specialisation and are dropped; with
    ``strict`` their presence raises instead.
    """
    w = _ambient(w)
    m = w.size - 1
    table: dict[CoeffKey, int] = defaultdict(int)
    for mu, c in compute_P(rank_conditions_of(w)).terms.items():
        rows, lam, cols = mu[: m - 1], mu[m - 1], mu[m:]
        if any(len(a) > 1 for a in rows) or any(any(v != 1 for v in b) for b in cols):
            if strict:
                raise ValueError(f"P_r term {mu} is not of Schubert type")
            continue
        a = tuple(part[0] if part else 0 for part in rows)
        # slots m+1..2m-1 carry (1^{b_m}), ..., (1^{b_2})
        b = tuple(len(part) for part in reversed(cols))
        table[(a, b, lam)] += c
    return {key: c for key, c in table.items() if c}


def assemble_schubert(w: Permutation, nx: int | None = None, ny: int | None = None) -> Polynomial:
    """Double Schubert polynomial from the quiver coefficients.

    With ``nx``/``ny`` larger than m, w is viewed in a larger symmetric group
    so that s_lam(x/y) runs over max(nx, ny) variables of each kind.
    """
    w = _ambient(w)
    m = w.size - 1
    size = max(m, nx or m, ny or m)
    w = w.extend(size + 1)
    m = size
    out = Polynomial()
    for (a, b, lam), c in quiver_coefficients(w).items():
        term = super_schur_eval(lam, m, m) * c
        for k, e in enumerate(a, start=2):
            if e:
                term = term * Polynomial.y(k, e)
        for k, e in enumerate(b, start=2):
            if e:
                term = term * Polynomial.x(k, e) * (-1) ** e
        out = out + term
    return out


def _longest_polynomial(size: int, use_y: bool) -> Polynomial:
    out = Polynomial.constant(1)
    for i in range(1, size):
        for j in range(1, size + 1 - i):
            out = out * (Polynomial.x(i) - Polynomial.y(j) if use_y else Polynomial.x(i))
    return out


@lru_cache(maxsize=4096)
def _schubert_recursive(image: tuple[int, ...], use_y: bool) -> Polynomial:
    w = Permutation(image)
    for i in range(1, w.size):
        if w(i) < w(i + 1):
            return divided_difference(_schubert_recursive(w.swap_positions(i).image, use_y), i)
    return _longest_polynomial(w.size, use_y)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """One reduced word (a_1..a_l) with w = s_{a_1} ... s_{a_l}, peeling the last descent."""
    word = []
    while not w.is_identity():
        i = max(k for k in range(1, w.size) if w(k) > w(k + 1))
        word.append(i)
        w = w.swap_positions(i)
    return tuple(reversed(word))


def schubert_oracle(
    w: Permutation, size: int | None = None, use_y: bool = True, word: Sequence[int] | None = None
) -> Polynomial:
    """Schubert polynomial by divided differences from the longest element.

    S_w = d_{a_1} ... d_{a_k} S_{w0} for a reduced word (a_1..a_k) of w^{-1} w0,
    with S_{w0} = prod_{i+j <= size} (x_i - y_j) (or x^delta when ``use_y`` is
    false).  ``word`` selects the reduced word; by default a memoised ascent
    recursion is used, which corresponds to one particular word.
    """
    size = max(size or w.size, w.size)
    w = w.extend(size)
    if word is None:
        return _schubert_recursive(w.image, use_y)
    target = w.inverse().compose(longest(size))
    check = Permutation.identity(size)
    for a in word:
        check = check.swap_positions(a)
    if check != target or len(word) != target.length():
        raise ValueError(f"{tuple(word)} is not a reduced word for w^-1 w0 = {target}")
    f = _longest_polynomial(size, use_y)
    for a in reversed(word):
        f = divided_difference(f, a)
    return f


def product_formula_check(w: Permutation, u: Permutation) -> bool:
    """S_{w×u} = S_w · S_{1^m × u}, each side assembled from quiver coefficients."""
    lhs = assemble_schubert(cross(w, u))
    rhs = assemble_schubert(w) * assemble_schubert(shift(u, w.size))
    return lhs == rhs


def permutations_of_size(m: int) -> Iterator[Permutation]:
    yield from all_permutations(m)
