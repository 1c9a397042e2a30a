"""Stanley symmetric functions from quiver coefficients, and their oracles."""

from __future__ import annotations

from typing import Iterator

from .poly import expand_symmetric_in_schur
from .schubert import Permutation, cross, inverse, quiver_coefficients, schubert_oracle, shift
from .schur import SchurElement
from .tableaux import Partition, conjugate, dominance_leq, partitions, standard_tableau_count


def stanley_function(w: Permutation) -> SchurElement:
    """F_w = sum over lambda of c_w(0, 0, lambda') s_lambda."""
    out = {}
    for (a, b, lam), c in quiver_coefficients(w).items():
        if not any(a) and not any(b):
            out[conjugate(lam)] = c
    return SchurElement(out)


def reduced_words(w: Permutation) -> Iterator[tuple[int, ...]]:
    """All reduced words (a_1..a_l) with w = s_{a_1} ... s_{a_l}.

    Depth-first over right descents: if w(i) > w(i+1) then every reduced
    word of w s_i extended by i is a reduced word of w.
    """
    if w.is_identity():
        yield ()
        return
    for i in range(1, w.size):
        if w(i) > w(i + 1):
            for word in reduced_words(w.swap_positions(i)):
                yield word + (i,)


def reduced_word_count_via_stanley(w: Permutation) -> int:
    return sum(c * standard_tableau_count(lam) for lam, c in stanley_function(w).terms.items())


def stable_limit(w: Permutation, nvars: int) -> SchurElement:
    """Schur expansion of S_{1^n × w^{-1}}(x_1..x_N, 0, ...) with n = N - 1."""
    ell = w.length()
    if nvars < ell:
        raise ValueError(f"need at least l(w) = {ell} variables, got {nvars}")
    v = shift(inverse(w), max(nvars - 1, 0))
    f = schubert_oracle(v, use_y=False).truncate(nvars, 0)
    return expand_symmetric_in_schur(f, nvars, ell)


def stable_limit_check(w: Permutation, nvars: int) -> bool:
    return stable_limit(w, nvars) == stanley_function(w)


def lehmer_left(w: Permutation) -> tuple[int, ...]:
    """r_p(w) = #{q < p : w(q) > w(p)} for p = 1..size."""
    return tuple(sum(1 for q in range(1, p) if w(q) > w(p)) for p in range(1, w.size + 1))


def lambda_of(w: Permutation) -> Partition:
    return tuple(sorted((v for v in lehmer_left(w) if v), reverse=True))


def mu_of(w: Permutation) -> Partition:
    return conjugate(lambda_of(w.inverse()))


def extremal_report(w: Permutation) -> dict:
    f = stanley_function(w)
    lo, hi = lambda_of(w), mu_of(w)
    between = [
        lam for lam in f.support() if not (dominance_leq(lo, lam) and dominance_leq(lam, hi))
    ]
    return {
        "lambda": lo,
        "mu": hi,
        "alpha_lambda": f.coefficient(lo),
        "alpha_mu": f.coefficient(hi),
        "outside_interval": between,
    }


def extremal_check(w: Permutation) -> bool:
    rep = extremal_report(w)
    return rep["alpha_lambda"] == 1 and rep["alpha_mu"] == 1 and not rep["outside_interval"]


def family_2143(p: int) -> Permutation:
    """2 1 4 3 ... (2p) (2p-1)."""
    image = []
    for k in range(p):
        image += [2 * k + 2, 2 * k + 1]
    return Permutation(tuple(image))


def family_2143_check(p: int) -> bool:
    if p < 1:
        raise ValueError("p must be positive")
    f = stanley_function(family_2143(p))
    predicted = SchurElement({lam: standard_tableau_count(lam) for lam in partitions(p)})
    return f == predicted and f == SchurElement.schur((1,)) ** p


def stanley_product_check(w: Permutation, u: Permutation) -> bool:
    """F_{w×u} = F_w · F_u."""
    return stanley_function(cross(w, u)) == stanley_function(w) * stanley_function(u)
