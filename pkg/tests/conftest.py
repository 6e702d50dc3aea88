"""Shared oracles and fixtures.

The oracles here recompute results by routes independent of the package
internals: operators act on actual polynomials, ranks come from
fraction-free integer elimination, path counts come from walking the
quiver.  Tests compare library output against these, never against the
library itself.
"""

import random
from fractions import Fraction

import pytest

from weyldeform import QMatrix, WeylElement, inverse


def apply_to_poly(w: WeylElement, coeffs):
    """Apply an operator to a polynomial given by coefficients of x^k.

    t acts as multiplication by x, d as d/dx.  Returns the coefficient
    list of the image, trimmed of trailing zeros.
    """
    out = {}
    for (i, j), c in w.items():
        for k, a in enumerate(coeffs):
            if a == 0:
                continue
            # d^j x^k = k(k-1)...(k-j+1) x^(k-j), then multiply by x^i
            if j > k:
                continue
            fall = 1
            for step in range(j):
                fall *= k - step
            deg = k - j + i
            out[deg] = out.get(deg, Fraction(0)) + c * a * fall
    if not out:
        return []
    top = max(d for d, v in out.items() if v != 0) if any(out.values()) else -1
    if top < 0:
        return []
    return [out.get(k, Fraction(0)) for k in range(top + 1)]


def poly_eq(a, b):
    la = [Fraction(x) for x in a]
    lb = [Fraction(x) for x in b]
    while la and la[-1] == 0:
        la.pop()
    while lb and lb[-1] == 0:
        lb.pop()
    return la == lb


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free elimination."""
    m = [[int(x) for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank_val = 0
    prev = 1
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        pivot_row = None
        for r in range(row, nrows):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for r in range(row + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (pivot * m[r][c] - m[r][col] * m[row][c]) // prev
            m[r][col] = 0
        prev = pivot
        row += 1
        rank_val += 1
    return rank_val


def path_count_dims(arrow_counts, order):
    """dim of (paths of length < order) in a quiver, by direct walking.

    arrow_counts[i][j] is the number of arrows from point j to point i.
    Paths are composed arrow-after-arrow, so a path arriving at a point
    extends by any arrow leaving that point.
    """
    npts = len(arrow_counts)
    total = 0
    # frontier[v] = number of paths of the current length ending at v
    frontier = [1] * npts
    for _ in range(order):
        total += sum(frontier)
        nxt = [0] * npts
        for i in range(npts):
            for j in range(npts):
                nxt[i] += arrow_counts[i][j] * frontier[j]
        frontier = nxt
    return total


def rand_weyl(rng: random.Random, max_deg=3, max_coef=4, terms=4) -> WeylElement:
    w = WeylElement.zero()
    for _ in range(rng.randint(0, terms)):
        i = rng.randint(0, max_deg)
        j = rng.randint(0, max_deg)
        num = rng.randint(-max_coef, max_coef)
        den = rng.randint(1, 3)
        w = w + WeylElement.monomial(i, j) * Fraction(num, den)
    return w


def rand_poly(rng: random.Random, max_deg=5, max_coef=6):
    return [Fraction(rng.randint(-max_coef, max_coef)) for _ in range(rng.randint(0, max_deg) + 1)]


def rand_invertible(rng: random.Random, n: int) -> QMatrix:
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        if inverse(rows) is not None:
            return QMatrix(rows)


@pytest.fixture
def rng():
    return random.Random(90125)


# The canonical family table, frozen as literals.  Each entry is
# (dims (p, q), e1 rows, s12 rows, s21 rows) at parameter value a for
# the parametric families.  Kept independent of the library's own
# table builder on purpose.
def frozen_family(label, a=Fraction(1)):
    z1 = ((0,),)
    tables = {
        "T_1_1": ((1, 0), ((1,),), z1, z1),
        "T_1_2": ((0, 1), ((0,),), z1, z1),
        "T_2_1": ((0, 2), ((0, 0), (0, 0)), ((0, 0), (0, 0)), ((0, 0), (0, 0))),
        "T_2_2": ((2, 0), ((1, 0), (0, 1)), ((0, 0), (0, 0)), ((0, 0), (0, 0))),
        "T_2_3": ((1, 1), ((1, 0), (0, 0)), ((0, 0), (0, 0)), ((0, 0), (0, 0))),
        "T_2_4": ((1, 1), ((1, 0), (0, 0)), ((0, 0), (0, 0)), ((0, 0), (1, 0))),
        "T_2_5": ((1, 1), ((1, 0), (0, 0)), ((0, 1), (0, 0)), ((0, 0), (0, 0))),
        "T_2_6": ((1, 1), ((1, 0), (0, 0)), ((0, 1), (0, 0)), ((0, 0), (a, 0))),
        "T_3_1": ((0, 3), ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0))),
        "T_3_2": ((3, 0), ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0))),
        "T_3_3": ((1, 2), ((1, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0))),
        "T_3_4": ((1, 2), ((1, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (1, 0, 0), (0, 0, 0))),
        "T_3_5": ((1, 2), ((1, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 1, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0))),
        "T_3_6": ((1, 2), ((1, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 1, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (1, 0, 0))),
        "T_3_7": ((1, 2), ((1, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 1, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (a, 0, 0), (0, 0, 0))),
        "T_3_8": ((2, 1), ((1, 0, 0), (0, 1, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0))),
        "T_3_9": ((2, 1), ((1, 0, 0), (0, 1, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 0, 0)),
                  ((0, 0, 0), (0, 0, 0), (0, 1, 0))),
        "T_3_10": ((2, 1), ((1, 0, 0), (0, 1, 0), (0, 0, 0)),
                   ((0, 0, 0), (0, 0, 1), (0, 0, 0)),
                   ((0, 0, 0), (0, 0, 0), (0, 0, 0))),
        "T_3_11": ((2, 1), ((1, 0, 0), (0, 1, 0), (0, 0, 0)),
                   ((0, 0, 0), (0, 0, 1), (0, 0, 0)),
                   ((0, 0, 0), (0, 0, 0), (1, 0, 0))),
        "T_3_12": ((2, 1), ((1, 0, 0), (0, 1, 0), (0, 0, 0)),
                   ((0, 0, 0), (0, 0, 1), (0, 0, 0)),
                   ((0, 0, 0), (0, 0, 0), (0, a, 0))),
    }
    return tables[label]
