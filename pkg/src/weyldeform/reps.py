"""Finite-dimensional representations of the pointed hull relations.

A representation is a triple of rational matrices (e1, s12, s21) obeying
the seven pointed relations: e1 idempotent, both s-matrices square-zero,
and the unit and annihilation laws that make s12 run from the second
point to the first and s21 back.  Such a triple decomposes the space
into the two eigenblocks of e1, with s12 and s21 carried by a pair of
blocks A and B; classification is the orbit problem for (A, B) under
basis changes of the two eigenspaces.

Everything here is exact Fraction arithmetic.  Dimensions up to 3 are
classified completely; dimension 4 is a documented best effort and
anything larger is refused rather than approximated.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .linalg import QMatrix, kernel_basis, rref_rows
from .linalg import solve as solve_linear

_PARAMETER_SAMPLES = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))

_RNG = random.Random(174)


class UnsupportedDimensionError(ValueError):
    pass


class RelationViolation(ValueError):
    """Raised when a matrix triple breaks the pointed relations.

    violations lists every broken law as (name, residual matrix), not
    just the first one found.
    """

    def __init__(self, violations):
        self.violations = tuple(violations)
        names = ", ".join(name for name, _ in self.violations)
        super().__init__(f"relations violated: {names}")


def _qmat(data) -> QMatrix:
    if isinstance(data, QMatrix):
        return data
    return QMatrix(data)


class Representation:
    """A matrix triple acted on by conjugation."""

    __slots__ = ("e1", "s12", "s21", "label", "params")

    def __init__(self, e1, s12, s21, label: str | None = None,
                 params: dict | None = None):
        self.e1 = _qmat(e1)
        self.s12 = _qmat(s12)
        self.s21 = _qmat(s21)
        n = self.e1.nrows
        for m in (self.e1, self.s12, self.s21):
            if m.shape != (n, n):
                raise ValueError("the three matrices must be square, same size")
        self.label = label
        self.params = dict(params) if params else {}

    @property
    def n(self) -> int:
        return self.e1.nrows

    @property
    def e2(self) -> QMatrix:
        return QMatrix.identity(self.n) - self.e1

    def triple(self) -> tuple[QMatrix, QMatrix, QMatrix]:
        return (self.e1, self.s12, self.s21)

    def conjugate(self, g: QMatrix) -> "Representation":
        g = _qmat(g)
        ginv = g.inverse()
        if ginv is None:
            raise ValueError("change of basis must be invertible")
        return Representation(
            g * self.e1 * ginv, g * self.s12 * ginv, g * self.s21 * ginv
        )

    def direct_sum(self, other: "Representation") -> "Representation":
        def block(a: QMatrix, b: QMatrix) -> QMatrix:
            za = QMatrix.zeros(a.nrows, b.ncols)
            zb = QMatrix.zeros(b.nrows, a.ncols)
            return QMatrix.from_blocks([[a, za], [zb, b]])

        return Representation(
            block(self.e1, other.e1),
            block(self.s12, other.s12),
            block(self.s21, other.s21),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self.triple() == other.triple()

    def __hash__(self) -> int:
        return hash(self.triple())

    def __repr__(self) -> str:
        tag = self.label or f"dim {self.n}"
        return f"Representation<{tag}>"


def validate(rep: Representation) -> None:
    """Check all seven pointed relations, collecting every violation."""
    e1, s12, s21 = rep.triple()
    n = rep.n
    zero = QMatrix.zeros(n, n)
    checks = (
        ("S12^2 = 0", s12 * s12 - zero),
        ("S21^2 = 0", s21 * s21 - zero),
        ("E1^2 = E1", e1 * e1 - e1),
        ("E1*S12 = S12", e1 * s12 - s12),
        ("S21*E1 = S21", s21 * e1 - s21),
        ("S12*E1 = 0", s12 * e1),
        ("E1*S21 = 0", e1 * s21),
    )
    bad = [(name, residual) for name, residual in checks if not residual.is_zero()]
    if bad:
        raise RelationViolation(bad)


def evaluate_word(rep: Representation, word: Sequence[str]) -> QMatrix:
    table = {"e1": rep.e1, "e2": rep.e2, "s12": rep.s12, "s21": rep.s21}
    out = QMatrix.identity(rep.n)
    for name in word:
        if name not in table:
            raise KeyError(f"no matrix for generator {name!r}")
        out = out * table[name]
    return out


def satisfies(rep: Representation, relation) -> bool:
    """Whether the rep satisfies every equation of an ext-layer relation."""
    for lhs, rhs in relation.equations:
        left = evaluate_word(rep, lhs)
        right = (
            QMatrix.zeros(rep.n, rep.n) if rhs is None else evaluate_word(rep, rhs)
        )
        if left != right:
            return False
    return True


# -- quiver coordinates ----------------------------------------------------


@dataclass(frozen=True)
class QuiverForm:
    """Block coordinates of a representation.

    basis columns list an eigenbasis of e1 (the dim-p eigenvalue-1 part
    first); conjugating by basis^-1 puts the triple into block shape
    with a sitting in the upper right of s12 and b in the lower left of
    s21.
    """

    dims: tuple[int, int]
    a: QMatrix
    b: QMatrix
    basis: QMatrix


def quiver_form(rep: Representation) -> QuiverForm:
    validate(rep)
    n = rep.n
    eye = QMatrix.identity(n)
    ones = (rep.e1 - eye).kernel()
    zeros = rep.e1.kernel()
    p, q = len(ones), len(zeros)
    if p + q != n:
        raise RelationViolation([("E1^2 = E1", rep.e1 * rep.e1 - rep.e1)])
    basis = QMatrix(list(zip(*(ones + zeros)))) if n else QMatrix([])
    binv = basis.inverse()
    if binv is None:
        raise RelationViolation([("E1^2 = E1", rep.e1 * rep.e1 - rep.e1)])
    s12c = binv * rep.s12 * basis
    s21c = binv * rep.s21 * basis
    a = QMatrix([[s12c[i, p + j] for j in range(q)] for i in range(p)])
    b = QMatrix([[s21c[p + i, j] for j in range(p)] for i in range(q)])
    rebuilt = _rep_from_blocks(p, q, a.to_rows(), b.to_rows())
    if rebuilt.triple() != (binv * rep.e1 * basis, s12c, s21c):
        raise RuntimeError("block reconstruction failed")
    return QuiverForm((p, q), a, b, basis)


def _rep_from_blocks(p: int, q: int, a_rows, b_rows,
                     label: str | None = None,
                     params: dict | None = None) -> Representation:
    n = p + q
    e1 = [[1 if (i == j and i < p) else 0 for j in range(n)] for i in range(n)]
    s12 = [[Fraction(0)] * n for _ in range(n)]
    s21 = [[Fraction(0)] * n for _ in range(n)]
    for i in range(p):
        for j in range(q):
            s12[i][p + j] = Fraction(a_rows[i][j])
    for i in range(q):
        for j in range(p):
            s21[p + i][j] = Fraction(b_rows[i][j])
    return Representation(e1, s12, s21, label=label, params=params)


# -- the canonical families -------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    label: str
    dims: tuple[int, int]
    parameter: str | None
    a_rows: Callable[[Fraction | None], list]
    b_rows: Callable[[Fraction | None], list]


def _const(rows):
    return lambda _v: rows


def _families() -> dict[str, FamilySpec]:
    specs = [
        FamilySpec("T_1_1", (1, 0), None, _const([]), _const([])),
        FamilySpec("T_1_2", (0, 1), None, _const([]), _const([])),
        FamilySpec("T_2_1", (0, 2), None, _const([]), _const([])),
        FamilySpec("T_2_2", (2, 0), None, _const([]), _const([])),
        FamilySpec("T_2_3", (1, 1), None, _const([[0]]), _const([[0]])),
        FamilySpec("T_2_4", (1, 1), None, _const([[0]]), _const([[1]])),
        FamilySpec("T_2_5", (1, 1), None, _const([[1]]), _const([[0]])),
        FamilySpec("T_2_6", (1, 1), "a", _const([[1]]), lambda v: [[v]]),
        FamilySpec("T_3_1", (0, 3), None, _const([]), _const([])),
        FamilySpec("T_3_2", (3, 0), None, _const([]), _const([])),
        FamilySpec("T_3_3", (1, 2), None, _const([[0, 0]]), _const([[0], [0]])),
        FamilySpec("T_3_4", (1, 2), None, _const([[0, 0]]), _const([[1], [0]])),
        FamilySpec("T_3_5", (1, 2), None, _const([[1, 0]]), _const([[0], [0]])),
        FamilySpec("T_3_6", (1, 2), None, _const([[1, 0]]), _const([[0], [1]])),
        FamilySpec("T_3_7", (1, 2), "b", _const([[1, 0]]), lambda v: [[v], [0]]),
        FamilySpec("T_3_8", (2, 1), None, _const([[0], [0]]), _const([[0, 0]])),
        FamilySpec("T_3_9", (2, 1), None, _const([[0], [0]]), _const([[0, 1]])),
        FamilySpec("T_3_10", (2, 1), None, _const([[0], [1]]), _const([[0, 0]])),
        FamilySpec("T_3_11", (2, 1), None, _const([[0], [1]]), _const([[1, 0]])),
        FamilySpec("T_3_12", (2, 1), "c", _const([[0], [1]]), lambda v: [[0, v]]),
        FamilySpec("T_4_1", (0, 4), None, _const([]), _const([])),
        FamilySpec("T_4_2", (4, 0), None, _const([]), _const([])),
        FamilySpec("T_4_3", (1, 3), None,
                   _const([[0, 0, 0]]), _const([[0], [0], [0]])),
        FamilySpec("T_4_4", (1, 3), None,
                   _const([[0, 0, 0]]), _const([[1], [0], [0]])),
        FamilySpec("T_4_5", (1, 3), None,
                   _const([[1, 0, 0]]), _const([[0], [0], [0]])),
        FamilySpec("T_4_6", (1, 3), None,
                   _const([[1, 0, 0]]), _const([[0], [1], [0]])),
        FamilySpec("T_4_7", (1, 3), "e",
                   _const([[1, 0, 0]]), lambda v: [[v], [0], [0]]),
        FamilySpec("T_4_8", (3, 1), None,
                   _const([[0], [0], [0]]), _const([[0, 0, 0]])),
        FamilySpec("T_4_9", (3, 1), None,
                   _const([[0], [0], [0]]), _const([[0, 0, 1]])),
        FamilySpec("T_4_10", (3, 1), None,
                   _const([[0], [0], [1]]), _const([[0, 0, 0]])),
        FamilySpec("T_4_11", (3, 1), None,
                   _const([[0], [0], [1]]), _const([[1, 0, 0]])),
        FamilySpec("T_4_12", (3, 1), "e",
                   _const([[0], [0], [1]]), lambda v: [[0, 0, v]]),
        FamilySpec("T_4_13", (2, 2), None,
                   _const([[0, 0], [0, 0]]), _const([[0, 0], [0, 0]])),
        FamilySpec("T_4_14", (2, 2), None,
                   _const([[0, 0], [0, 0]]), _const([[1, 0], [0, 0]])),
        FamilySpec("T_4_15", (2, 2), None,
                   _const([[0, 0], [0, 0]]), _const([[1, 0], [0, 1]])),
        FamilySpec("T_4_16", (2, 2), None,
                   _const([[1, 0], [0, 0]]), _const([[0, 0], [0, 0]])),
        FamilySpec("T_4_17", (2, 2), None,
                   _const([[1, 0], [0, 0]]), _const([[0, 1], [0, 0]])),
        FamilySpec("T_4_18", (2, 2), None,
                   _const([[1, 0], [0, 0]]), _const([[0, 0], [1, 0]])),
        FamilySpec("T_4_19", (2, 2), None,
                   _const([[1, 0], [0, 0]]), _const([[0, 0], [0, 1]])),
        FamilySpec("T_4_20", (2, 2), None,
                   _const([[1, 0], [0, 0]]), _const([[0, 1], [1, 0]])),
        FamilySpec("T_4_21", (2, 2), "e",
                   _const([[1, 0], [0, 0]]), lambda v: [[v, 0], [0, 0]]),
        FamilySpec("T_4_22", (2, 2), "e",
                   _const([[1, 0], [0, 0]]), lambda v: [[v, 0], [0, 1]]),
        FamilySpec("T_4_23", (2, 2), None,
                   _const([[1, 0], [0, 1]]), _const([[0, 0], [0, 0]])),
        FamilySpec("T_4_24", (2, 2), None,
                   _const([[1, 0], [0, 1]]), _const([[0, 1], [0, 0]])),
        FamilySpec("T_4_25", (2, 2), "e",
                   _const([[1, 0], [0, 1]]), lambda v: [[v, 1], [0, v]]),
        FamilySpec("T_4_26", (2, 2), "e",
                   _const([[1, 0], [0, 1]]), lambda v: [[v, 0], [0, v]]),
    ]
    return {s.label: s for s in specs}


FAMILIES = _families()


def representative(label: str, params: dict | None = None) -> Representation:
    """Canonical representative of a family, by label.

    Parametric families need their parameter supplied and nonzero;
    whatever extra keys arrive in params are ignored.
    """
    spec = FAMILIES.get(label)
    if spec is None:
        raise KeyError(f"unknown family label {label!r}")
    value = None
    if spec.parameter is not None:
        if not params or spec.parameter not in params:
            raise ValueError(
                f"family {label} needs parameter {spec.parameter!r}"
            )
        value = Fraction(params[spec.parameter])
        if value == 0:
            raise ValueError(
                f"parameter {spec.parameter!r} of {label} must be nonzero"
            )
    p, q = spec.dims
    rep = _rep_from_blocks(
        p, q, spec.a_rows(value), spec.b_rows(value),
        label=label,
        params={spec.parameter: value} if spec.parameter else None,
    )
    return rep


def _match_quiver(p: int, q: int, a: QMatrix, b: QMatrix):
    """Identify block data of total dimension <= 3 as (label, parameter)."""
    n = p + q
    if n == 1:
        return ("T_1_1", None) if p == 1 else ("T_1_2", None)
    if n == 2:
        if (p, q) == (0, 2):
            return ("T_2_1", None)
        if (p, q) == (2, 0):
            return ("T_2_2", None)
        av, bv = a[0, 0], b[0, 0]
        if av == 0 and bv == 0:
            return ("T_2_3", None)
        if av == 0:
            return ("T_2_4", None)
        if bv == 0:
            return ("T_2_5", None)
        return ("T_2_6", av * bv)
    if n == 3:
        if (p, q) == (0, 3):
            return ("T_3_1", None)
        if (p, q) == (3, 0):
            return ("T_3_2", None)
        if (p, q) == (1, 2):
            ab = sum(a[0, k] * b[k, 0] for k in range(2))
            if a.is_zero() and b.is_zero():
                return ("T_3_3", None)
            if a.is_zero():
                return ("T_3_4", None)
            if b.is_zero():
                return ("T_3_5", None)
            return ("T_3_7", ab) if ab != 0 else ("T_3_6", None)
        if (p, q) == (2, 1):
            ba = sum(b[0, k] * a[k, 0] for k in range(2))
            if a.is_zero() and b.is_zero():
                return ("T_3_8", None)
            if b.is_zero():
                return ("T_3_10", None)
            if a.is_zero():
                return ("T_3_9", None)
            return ("T_3_12", ba) if ba != 0 else ("T_3_11", None)
    raise UnsupportedDimensionError(
        f"no family matching for dimension {n}"
    )


def match_label(rep: Representation):
    """(label, parameter) of a representation of dimension at most 3."""
    if rep.n > 3:
        raise UnsupportedDimensionError("matching is exact only up to dimension 3")
    form = quiver_form(rep)
    return _match_quiver(form.dims[0], form.dims[1], form.a, form.b)


def _coupling_components(p: int, q: int, a: QMatrix, b: QMatrix):
    """Connected components of the block-coupling graph.

    Nodes are the p-side and q-side basis vectors; a nonzero entry of
    either block ties its two endpoints together.  Each component gives
    an invariant direct summand in these coordinates.
    """
    nodes = [(0, i) for i in range(p)] + [(1, j) for j in range(q)]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i in range(p):
        for j in range(q):
            if a[i, j] != 0 or b[j, i] != 0:
                parent[find((0, i))] = find((1, j))
    comps: dict = {}
    for v in nodes:
        comps.setdefault(find(v), []).append(v)
    return sorted(comps.values(), key=lambda vs: min(vs))


def _component_blocks(comp, a: QMatrix, b: QMatrix):
    ps = [i for side, i in comp if side == 0]
    qs = [j for side, j in comp if side == 1]
    sub_a = QMatrix([[a[i, j] for j in qs] for i in ps])
    sub_b = QMatrix([[b[j, i] for i in ps] for j in qs])
    return len(ps), len(qs), sub_a, sub_b


# -- conjugacy, simplicity, decomposability ---------------------------------


def intertwiners(rep1: Representation, rep2: Representation) -> list[QMatrix]:
    """Basis of {g : g x = x' g for the three matrices}."""
    if rep1.n != rep2.n:
        raise ValueError("intertwiners need equal dimensions")
    n = rep1.n
    rows = []
    for x, xp in zip(rep1.triple(), rep2.triple()):
        # (g x - xp g)[i][j] = sum_k g[i][k] x[k][j] - xp[i][k] g[k][j]
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[i * n + k] += x[k, j]
                    row[k * n + j] -= xp[i, k]
                rows.append(row)
    basis = []
    for vec in _kernel(rows, n * n):
        basis.append(QMatrix([vec[i * n : (i + 1) * n] for i in range(n)]))
    return basis


def _kernel(rows, ncols):
    return kernel_basis(rows, ncols)


def are_conjugate(rep1: Representation, rep2: Representation) -> QMatrix | None:
    """An invertible g with g rep1 g^-1 = rep2, or None.

    The search space is the intertwiner kernel; invertibility is decided
    by scanning basis elements, a batch of seeded random combinations,
    and finally a full grid whose per-variable range exceeds the degree
    of the determinant, so a None from the grid is a proof.
    """
    if rep1.n != rep2.n:
        raise ValueError("representations of different dimensions")
    n = rep1.n
    if rep1.triple() == rep2.triple():
        return QMatrix.identity(n)
    basis = intertwiners(rep1, rep2)
    if not basis:
        return None

    def check(g: QMatrix) -> QMatrix | None:
        ginv = g.inverse()
        if ginv is None:
            return None
        for x, xp in zip(rep1.triple(), rep2.triple()):
            if g * x * ginv != xp:
                return None
        return g

    for g in basis:
        got = check(g)
        if got is not None:
            return got
    d = len(basis)
    for _ in range(32):
        coeffs = [_RNG.randint(-2, 2) for _ in range(d)]
        g = _combo(basis, coeffs, n)
        got = check(g)
        if got is not None:
            return got
    # determinant has degree <= n in each coordinate, so the grid below
    # finds a nonvanishing point whenever one exists
    grid = range(n + 1)
    stack = [()]
    for _ in range(d):
        stack = [s + (c,) for s in stack for c in grid]
    for coeffs in stack:
        g = _combo(basis, list(coeffs), n)
        got = check(g)
        if got is not None:
            return got
    return None


def _combo(basis: list[QMatrix], coeffs: list, n: int) -> QMatrix:
    out = QMatrix.zeros(n, n)
    for c, b in zip(coeffs, basis):
        if c:
            out = out + b * Fraction(c)
    return out


def is_simple(rep: Representation) -> bool:
    """Whether the three matrices generate the full matrix algebra.

    This is the Burnside criterion: over the rationals it certifies
    simplicity with scalar endomorphisms.  A simple module whose
    endomorphisms form a larger field would report False; no family in
    the tables here does that.
    """
    validate(rep)
    n = rep.n
    gens = [rep.e1, rep.s12, rep.s21]
    target = n * n

    reduced: list[list[Fraction]] = []
    pivots: list[int] = []

    def insert(mat: QMatrix) -> bool:
        vec = [mat[i, j] for i in range(n) for j in range(n)]
        for r, piv in zip(reduced, pivots):
            f = vec[piv]
            if f:
                vec = [x - f * y for x, y in zip(vec, r)]
        for idx, x in enumerate(vec):
            if x:
                inv = 1 / x
                vec = [v * inv for v in vec]
                reduced.append(vec)
                pivots.append(idx)
                return True
        return False

    frontier = [QMatrix.identity(n)]
    insert(frontier[0])
    while frontier and len(reduced) < target:
        nxt = []
        for w in frontier:
            for g in gens:
                cand = g * w
                if insert(cand):
                    nxt.append(cand)
                cand = w * g
                if insert(cand):
                    nxt.append(cand)
        frontier = nxt
    return len(reduced) == target


def _eigen_kernels(e1: QMatrix, s12: QMatrix, s21: QMatrix) -> tuple[list, list]:
    """Kernel bases of the stacked maps, one per e1 eigenvalue.

    A vector in either kernel spans an invariant line: the s-matrices
    kill it and e1 scales it by 0 or 1.
    """
    n = e1.nrows
    eye = QMatrix.identity(n)
    k0 = QMatrix.from_blocks([[s12], [s21], [e1]]).kernel()
    k1 = QMatrix.from_blocks([[s12], [s21], [e1 - eye]]).kernel()
    return k0, k1


def find_proper_submodule(rep: Representation):
    """A basis of a proper nonzero invariant subspace, or None.

    Lines and hyperplanes are checked, which is a complete search in
    dimension at most 3.  Larger dimensions are refused.
    """
    validate(rep)
    n = rep.n
    if n > 3:
        raise UnsupportedDimensionError(
            "submodule search is complete only up to dimension 3"
        )
    if n == 1:
        return None
    k0, k1 = _eigen_kernels(rep.e1, rep.s12, rep.s21)
    for vec in k0 + k1:
        sub = (tuple(vec),)
        if _invariant(rep, sub):
            return sub
    l0, l1 = _eigen_kernels(
        rep.e1.transpose(), rep.s12.transpose(), rep.s21.transpose()
    )
    for w in l0 + l1:
        rows = [list(w)]
        comp = _kernel(rows, n)
        sub = tuple(tuple(v) for v in comp)
        if sub and len(sub) < n and _invariant(rep, sub):
            return sub
    return None


def _invariant(rep: Representation, basis: tuple) -> bool:
    span_rows = [list(v) for v in basis]
    _, piv = rref_rows(span_rows)
    dim = len(piv)
    for m in rep.triple():
        rows = [list(v) for v in basis]
        for v in basis:
            rows.append(m.apply(v))
        _, piv2 = rref_rows(rows)
        if len(piv2) != dim:
            return False
    return True


def _dim1_summand_exists(rep: Representation) -> bool:
    """Whether some invariant line splits off as a direct summand.

    Pair each eigenvalue's invariant lines against the same eigenvalue's
    invariant hyperplanes; a nonzero pairing gives a line plus a
    complement, both invariant.
    """
    k0, k1 = _eigen_kernels(rep.e1, rep.s12, rep.s21)
    l0, l1 = _eigen_kernels(
        rep.e1.transpose(), rep.s12.transpose(), rep.s21.transpose()
    )
    for lines, covectors in ((k0, l0), (k1, l1), (k0, l1), (k1, l0)):
        for v in lines:
            for w in covectors:
                if sum(x * y for x, y in zip(v, w)) != 0:
                    return True
    return False


def _min_poly(m: QMatrix) -> list[Fraction]:
    """Monic minimal polynomial coefficients, constant term first."""
    n = m.nrows

    def flat(mat: QMatrix) -> list[Fraction]:
        return [mat[i, j] for i in range(n) for j in range(n)]

    powers = [QMatrix.identity(n)]
    while True:
        nxt = powers[-1] * m
        rows = [list(r) for r in zip(*(flat(p) for p in powers))]
        sol = solve_linear(rows, flat(nxt), len(powers))
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        powers.append(nxt)


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of the monic polynomial, with the leading
    coefficient cleared to integers first."""
    from math import gcd

    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return []
    lead = ints[-1]
    const = next((c for c in ints if c != 0), 0)
    shift = next(i for i, c in enumerate(ints) if c != 0)
    roots = set()
    if shift > 0:
        roots.add(Fraction(0))

    def divisors(x):
        x = abs(x)
        out = []
        d = 1
        while d * d <= x:
            if x % d == 0:
                out.append(d)
                out.append(x // d)
            d += 1
        return out

    for num in divisors(const):
        for den in divisors(lead):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if sum(c * cand**i for i, c in enumerate(coeffs)) == 0:
                    roots.add(cand)
    return sorted(roots)


def _poly_div_out_root(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """Divide out (x - root) once, constant-first coefficients."""
    deg = len(coeffs) - 1
    out = [Fraction(0)] * deg
    carry = Fraction(0)
    for i in range(deg - 1, -1, -1):
        carry = coeffs[i + 1] + root * carry
        out[i] = carry
    return out


def is_indecomposable(rep: Representation) -> bool:
    """Whether the representation admits no nontrivial direct splitting.

    Complete through dimension 3: scalar endomorphisms prove it, and a
    missing dimension-1 summand refutes decomposability there.  In
    dimension 4 a splitting can avoid dimension-1 summands, so after the
    cheap checks a bounded search for a splitting endomorphism runs and
    an unrefuted representation is reported indecomposable.
    """
    validate(rep)
    n = rep.n
    if n > 4:
        raise UnsupportedDimensionError(
            "indecomposability is decided only up to dimension 4"
        )
    if n == 1:
        return True
    endos = intertwiners(rep, rep)
    if len(endos) == 1:
        return True
    if _dim1_summand_exists(rep):
        return False
    if n <= 3:
        return True
    form = quiver_form(rep)
    comps = _coupling_components(form.dims[0], form.dims[1], form.a, form.b)
    if len(comps) > 1:
        return False
    d = min(len(endos), 6)
    grid = [Fraction(c) for c in (-1, 0, 1, 2)]
    stack = [()]
    for _ in range(d):
        stack = [s + (c,) for s in stack for c in grid]
        if len(stack) > 4096:
            stack = stack[:4096]
    for coeffs in stack:
        u = _combo(endos[:d], list(coeffs), n)
        if u.is_zero():
            continue
        mp = _min_poly(u)
        roots = _rational_roots(mp)
        if len(roots) >= 2:
            return False
        if len(roots) == 1:
            rest = mp
            while True:
                quo = _poly_div_out_root(rest, roots[0])
                if sum(c * roots[0] ** i for i, c in enumerate(quo)) != 0:
                    rest = quo
                    break
                rest = quo
            if len(rest) > 1:
                return False
    return True


# -- classification ----------------------------------------------------------


@dataclass(frozen=True)
class Family:
    """One stratum of the classification."""

    label: str
    dims: tuple[int, int]
    parameter: str | None
    samples: tuple[Fraction, ...] | None
    representative: Representation
    simple: bool
    indecomposable: bool
    decomposition: tuple[str, ...] | None


@dataclass(frozen=True)
class ClassificationResult:
    n: int
    exact: bool
    families: tuple[Family, ...]
    notes: tuple[str, ...]

    @property
    def discrete(self) -> tuple[str, ...]:
        return tuple(f.label for f in self.families if f.parameter is None)

    @property
    def parametric(self) -> tuple[str, ...]:
        return tuple(f.label for f in self.families if f.parameter is not None)


def classify(n: int, parameter_samples: Iterable = _PARAMETER_SAMPLES) -> ClassificationResult:
    """Classify n-dimensional representations up to conjugation.

    Dimensions 1 to 3 list every orbit: finitely many discrete ones plus
    one-parameter families whose parameter is the displayed invariant.
    Dimension 4 lists the strata found by the same block analysis but is
    flagged exact=False; its notes name what was left out.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("dimension must be a positive integer")
    if n > 4:
        raise UnsupportedDimensionError(
            "classification is available for dimensions 1 through 4"
        )
    samples = tuple(dict.fromkeys(Fraction(s) for s in parameter_samples))
    if any(s == 0 for s in samples):
        raise ValueError("parameter samples must be nonzero")
    if not samples:
        raise ValueError("at least one parameter sample is needed")
    families = []
    notes: list[str] = []
    for spec in FAMILIES.values():
        if sum(spec.dims) != n:
            continue
        fam = _build_family(spec, samples)
        families.append(fam)
    if n == 4:
        notes.append(
            "dimension 4 is a best-effort table: strata whose invariant "
            "needs two parameters or irrational eigenvalues are omitted"
        )
        exact = False
    else:
        exact = True
    return ClassificationResult(n, exact, tuple(families), tuple(notes))


def _build_family(spec: FamilySpec, samples: tuple[Fraction, ...]) -> Family:
    if spec.parameter is None:
        rep = representative(spec.label)
        reps = [rep]
        fam_samples = None
    else:
        reps = [
            representative(spec.label, {spec.parameter: s}) for s in samples
        ]
        rep = reps[0]
        fam_samples = samples
    simple = all(is_simple(r) for r in reps)
    indec = all(is_indecomposable(r) for r in reps)
    decomposition = None
    if not indec:
        decomposition = _decomposition_labels(spec, reps, samples)
    return Family(
        spec.label, spec.dims, spec.parameter, fam_samples, rep,
        simple, indec, decomposition,
    )


def _decomposition_labels(spec: FamilySpec, reps: list[Representation],
                          samples: tuple[Fraction, ...]) -> tuple[str, ...]:
    per_sample: list[list[tuple[str, Fraction | None]]] = []
    for rep in reps:
        form = quiver_form(rep)
        comps = _coupling_components(form.dims[0], form.dims[1], form.a, form.b)
        labels = [
            _match_quiver(*_component_blocks(c, form.a, form.b)) for c in comps
        ]
        per_sample.append(labels)
    rendered = []
    for idx, (label, param) in enumerate(per_sample[0]):
        if param is None:
            rendered.append(label)
            continue
        values = [ls[idx][1] for ls in per_sample]
        if spec.parameter is not None and values == list(samples[: len(values)]) and len(values) == len(per_sample):
            rendered.append(f"{label}({spec.parameter})")
        else:
            rendered.append(f"{label}({param})")
    return tuple(rendered)
