"""Brute-force reference implementations used only by the tests.

Nothing here imports the code paths it is used to check.
"""

from __future__ import annotations

from itertools import permutations, product

from quiverlr.poly import Polynomial


def standard_fillings(shape):
    """Count standard fillings of ``shape`` by trying every placement of 1..n."""
    n = sum(shape)
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    count = 0
    for perm in permutations(range(1, n + 1)):
        val = dict(zip(cells, perm))
        if all(
            (c == 0 or val[(r, c - 1)] < v) and (r == 0 or val[(r - 1, c)] < v)
            for (r, c), v in val.items()
        ):
            count += 1
    return count


def skew_standard_count(outer, inner):
    """Standard fillings of the skew shape outer/inner."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    cells = [(r, c) for r in range(len(outer)) for c in range(inner[r], outer[r])]
    count = 0
    for perm in permutations(range(1, len(cells) + 1)):
        val = dict(zip(cells, perm))
        if all(
            ((r, c - 1) not in val or val[(r, c - 1)] < v) and ((r - 1, c) not in val or val[(r - 1, c)] < v)
            for (r, c), v in val.items()
        ):
            count += 1
    return count


def ssyt(shape, max_entry):
    """All semistandard tableaux of ``shape`` with entries <= max_entry.

    Cells are filled one at a time in reading order, checking only the left and
    upper neighbours of the cell being filled.
    """
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    val = {}

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(val[(r, c)] for c in range(shape[r])) for r in range(len(shape)))
            return
        r, c = cells[k]
        lo = max(val[(r, c - 1)] if c else 1, val[(r - 1, c)] + 1 if r else 1)
        for v in range(lo, max_entry + 1):
            val[(r, c)] = v
            yield from fill(k + 1)
        val.pop((r, c), None)

    yield from fill(0)


def schur_by_tableaux(shape, n):
    """s_shape(x_1..x_n) as the sum of x^T over semistandard tableaux."""
    terms = {}
    for t in ssyt(shape, n):
        exp = [0] * n
        for row in t:
            for v in row:
                exp[v - 1] += 1
        key = (tuple(exp), ())
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(terms)


def h_poly(k, n):
    """h_k(x_1..x_n) as the sum of all monomials of degree k."""
    if k < 0:
        return Polynomial()
    terms = {}
    for exp in product(range(k + 1), repeat=n):
        if sum(exp) == k:
            terms[(exp, ())] = 1
    return Polynomial(terms) if n or k == 0 else (Polynomial.constant(1) if k == 0 else Polynomial())


def leibniz_det(matrix):
    size = len(matrix)
    total = Polynomial()
    for perm in permutations(range(size)):
        inv = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
        term = Polynomial.constant(-1 if inv % 2 else 1)
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
        total = total + term
    return total


def jdt_rectify(skew):
    """Rectify a skew tableau given as {(r, c): value} by jeu de taquin slides."""
    cells = dict(skew)
    while True:
        holes = _inner_corners(cells)
        if not holes:
            break
        r, c = holes[-1]
        while True:
            below, right = cells.get((r + 1, c)), cells.get((r, c + 1))
            if below is None and right is None:
                break
            if right is None or (below is not None and below <= right):
                cells[(r, c)] = below
                del cells[(r + 1, c)]
                r += 1
            else:
                cells[(r, c)] = right
                del cells[(r, c + 1)]
                c += 1
    rows = {}
    for (r, c), v in cells.items():
        rows.setdefault(r, {})[c] = v
    return tuple(tuple(rows[r][c] for c in sorted(rows[r])) for r in sorted(rows))


def _inner_corners(cells):
    # empty cells of the inner shape whose right and lower neighbours are not empty-inner cells
    if not cells:
        return []
    rows = {}
    for r, c in cells:
        rows.setdefault(r, []).append(c)
    start = {r: min(cs) for r, cs in rows.items()}
    corners = []
    for r, s in start.items():
        if s > 0:
            c = s - 1
            below_start = start.get(r + 1)
            if below_start is None or below_start <= c or (r + 1, c) in cells:
                corners.append((r, c))
    return sorted(corners)


def plactic_by_jdt(left, right):
    """left · right: place ``right`` north-east of ``left`` and rectify."""
    width = len(left[0]) if left else 0
    skew = {}
    for r, row in enumerate(right):
        for c, v in enumerate(row):
            skew[(r, width + c)] = v
    offset = len(right)
    for r, row in enumerate(left):
        for c, v in enumerate(row):
            skew[(offset + r, c)] = v
    return jdt_rectify(skew)


def all_tableaux(max_boxes, max_entry):
    from quiverlr.tableaux import partitions

    out = []
    for n in range(max_boxes + 1):
        for lam in partitions(n):
            out.extend(ssyt(lam, max_entry))
    return out


def jacobi_trudi_mismatches(max_len=3, lo=-2, hi=4):
    """Sequences a (length <= max_len, entries in [lo, hi]) where straighten disagrees
    with the literal determinant det(h_{a_i + j - i}) evaluated in len(a) variables."""
    from quiverlr.schur import straighten

    bad = []
    for p in range(1, max_len + 1):
        for seq in product(range(lo, hi + 1), repeat=p):
            det = leibniz_det([[h_poly(seq[i] + j - i, p) for j in range(p)] for i in range(p)])
            sign, lam = straighten(seq)
            expected = Polynomial() if sign == 0 else schur_by_tableaux(lam, p) * Polynomial.constant(sign)
            if det != expected:
                bad.append(seq)
    return bad


def associativity_failures(max_boxes=4, max_entry=4):
    """Triples (P, Q, R), each with at most max_boxes boxes, where the plactic product
    is not associative.  Pairwise products are memoised so the full cube stays cheap."""
    from quiverlr.tableaux import product as mult

    pool = all_tableaux(max_boxes, max_entry)
    pair = {(i, j): mult(P, Q) for i, P in enumerate(pool) for j, Q in enumerate(pool)}
    left, right = {}, {}
    failures = []
    for i, P in enumerate(pool):
        for j in range(len(pool)):
            PQ = pair[(i, j)]
            for k, R in enumerate(pool):
                QR = pair[(j, k)]
                a = left.get((i, QR))
                if a is None:
                    a = left[(i, QR)] = mult(P, QR)
                b = right.get((PQ, k))
                if b is None:
                    b = right[(PQ, k)] = mult(PQ, R)
                if a != b:
                    failures.append((P, pool[j], R))
    return failures, len(pool) ** 3


def matrix_rank(rows):
    """Rank over Q by Gaussian elimination on Fractions."""
    from fractions import Fraction

    m = [[Fraction(v) for v in row] for row in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def representation_ranks(dims, maps):
    """Rank conditions r_ij of E_0 -> E_1 -> ... where maps[i] is a dims[i+1] x dims[i] matrix."""
    n = len(maps)

    def r(i, j):
        if i == j:
            return dims[i]
        if any(dims[k] == 0 for k in range(i, j + 1)):
            return 0
        acc = maps[i]
        for k in range(i + 1, j):
            acc = matmul(maps[k], acc)
        return matrix_rank(acc)

    return n, r
