"""Verification suites run by ``quiverlr verify``.

Each check returns ``(name, ok, detail)``; the suites cover the identities
relating quiver coefficients to Schubert polynomials and Stanley functions.
"""

from __future__ import annotations

import logging
from typing import Callable, Iterator

from .factorseq import (
    column_tableaux,
    conjecture_check,
    middle_only_counts,
    w_left,
    w_right,
)
from .quiver import (
    compute_P,
    dual,
    dual_tuple,
    expected_codim,
    independent_intervals,
    rectangle_diagram,
    split_product,
)
from .schubert import (
    Permutation,
    all_permutations,
    assemble_schubert,
    cross,
    longest,
    product_formula_check,
    quiver_coefficients,
    rank_conditions_of,
    schubert_oracle,
)
from .stanley import (
    extremal_report,
    family_2143_check,
    lambda_of,
    lehmer_left,
    mu_of,
    reduced_word_count_via_stanley,
    reduced_words,
    stable_limit_check,
    stanley_function,
    stanley_product_check,
)
from .tableaux import conjugate, entries, shape

log = logging.getLogger(__name__)

Check = tuple[str, bool, str]


def _oracles(w: Permutation) -> Iterator[Check]:
    yield f"schubert {w}", assemble_schubert(w) == schubert_oracle(w), ""
    yield f"stable-limit {w}", stable_limit_check(w, max(w.length(), 1)), ""
    count = sum(1 for _ in reduced_words(w))
    via = reduced_word_count_via_stanley(w)
    yield f"reduced-words {w}", count == via, f"dfs={count} stanley={via}"


def _symmetries(w: Permutation) -> Iterator[Check]:
    table = quiver_coefficients(w)
    inv = quiver_coefficients(w.inverse())
    mirrored = {(b, a, conjugate(lam)): c for (a, b, lam), c in table.items()}
    yield f"inverse-symmetry {w}", mirrored == inv, ""
    r = rank_conditions_of(w)
    P, Pd = compute_P(r), compute_P(dual(r))
    yield f"duality {w}", all(Pd.coefficient(dual_tuple(mu)) == c for mu, c in P.terms.items()) and len(
        P
    ) == len(Pd), ""
    F, Finv = stanley_function(w), stanley_function(w.inverse())
    yield f"alpha-conjugate {w}", all(
        Finv.coefficient(conjugate(lam)) == c for lam, c in F.terms.items()
    ) and len(F.terms) == len(Finv.terms), ""


def _structure(w: Permutation) -> Iterator[Check]:
    r = rank_conditions_of(w)
    d = expected_codim(r)
    boxes = rectangle_diagram(r).total_boxes()
    yield f"codim {w}", d == w.length() == boxes, f"d={d} l={w.length()} boxes={boxes}"
    P = compute_P(r)
    yield f"homogeneous {w}", all(sum(map(sum, mu)) == d for mu in P.terms), ""
    negative = {mu: c for mu, c in P.terms.items() if c < 0}
    if negative:
        log.warning("negative quiver coefficients for %s: %s", w, negative)


def _extremal(w: Permutation) -> Iterator[Check]:
    rep = extremal_report(w)
    ok = rep["alpha_lambda"] == 1 and rep["alpha_mu"] == 1 and not rep["outside_interval"]
    yield f"extremal {w}", ok, str(rep)
    m = max(w.size, 2) - 1
    sizes = lehmer_left(w.extend(m + 1))
    cols = column_tableaux(w)
    ok_cols = all(
        len(entries(cols[j])) == sizes[2 * m - j] and all(len(row) == 1 for row in cols[j])
        for j in cols
    )
    yield f"columns {w}", ok_cols, ""
    yield f"w-right {w}", shape(w_right(w)) == conjugate(lambda_of(w)), ""
    yield f"w-left {w}", shape(w_left(w)) == conjugate(mu_of(w)), ""


def _conjecture(w: Permutation) -> Iterator[Check]:
    rep = conjecture_check(rank_conditions_of(w))
    if rep.all_match:
        yield f"factor-sequences {w}", True, ""
    elif rep.proven_regime:
        yield f"factor-sequences {w}", False, str(rep.mismatches())
    else:
        log.warning("conjecture mismatch outside proven regime for %s: %s", w, rep.to_json())
    F = stanley_function(w)
    mid = middle_only_counts(w)
    predicted = {conjugate(s): c for s, c in mid.items()}
    yield f"middle-only {w}", predicted == dict(F.terms), ""


def _pairs(w: Permutation, u: Permutation) -> Iterator[Check]:
    x = cross(w, u)
    r = rank_conditions_of(x)
    P = compute_P(r)
    bad = [pq for pq in independent_intervals(r) if split_product(r, *pq) != P]
    yield f"split {w}x{u}", not bad, f"failing intervals {bad}" if bad else ""
    yield f"product-formula {w}x{u}", product_formula_check(w, u), ""
    yield f"stanley-product {w}x{u}", stanley_product_check(w, u), ""


def _staircase(m: int) -> Check:
    stair = tuple(range(m - 1, 0, -1))
    F = stanley_function(longest(m))
    return f"staircase S_{m}", dict(F.terms) == {stair: 1}, str(F)


def suite(name: str) -> Iterator[Check]:
    """Checks of suite ``s3``, ``s4`` or ``s5``."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    yield from SUITES[name]()


def _s3() -> Iterator[Check]:
    for w in all_permutations(3):
        yield from _oracles(w)
        yield from _symmetries(w)
        yield from _structure(w)
        yield from _extremal(w)
        yield from _conjecture(w)
    for w in all_permutations(2):
        for u in all_permutations(2):
            yield from _pairs(w, u)
    yield "family p=1", family_2143_check(1), ""
    yield "family p=2", family_2143_check(2), ""


def _s4() -> Iterator[Check]:
    F = stanley_function(Permutation.parse("2431"))
    yield "example F_2431", dict(F.terms) == {(3, 1): 1}, str(F)
    for m in (2, 3, 4, 5):
        yield _staircase(m)
    for w in all_permutations(4):
        yield from _oracles(w)
        yield from _symmetries(w)
        yield from _structure(w)
        yield from _conjecture(w)
    for w in all_permutations(3):
        for u in all_permutations(3):
            yield from _pairs(w, u)
    for p in (1, 2, 3):
        yield f"family p={p}", family_2143_check(p), ""


def _s5() -> Iterator[Check]:
    for w in all_permutations(5):
        yield from _structure(w)
        yield from _extremal(w)


SUITES: dict[str, Callable[[], Iterator[Check]]] = {"s3": _s3, "s4": _s4, "s5": _s5}
