"""Left modules over the first Weyl algebra and exact maps between them.

A module is either a ``CyclicModule`` (one generator, one relation, the
quotient D/Dp) or a ``PresentedModule`` (n generators with the rows of an
n-by-n relation matrix as relations).  Elements of a free module D^n are
row vectors; a presentation matrix acts by right multiplication, so the
submodule being quotiented out is spanned by ``m * row_i`` over all
monomials m.

All searches are exact linear algebra over degree-truncated monomial
coordinates.  Degree caps default to ``DEFAULT_MAX_DEGREE`` and are never
allowed past ``HARD_CAP``.  Membership witnesses can have higher degree
than the vector they certify (cancellation), so spans are built over a
window ``WINDOW_MARGIN`` degrees wider than the range being reported.
Positive answers carry witnesses that re-verify by plain multiplication;
negative answers always mean "no witness up to the degree bound".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .linalg import kernel_basis, rref_rows
from .linalg import solve as solve_linear
from .weyl import WeylElement, parse_weyl, print_weyl

DEFAULT_MAX_DEGREE = 8
HARD_CAP = 16
WINDOW_MARGIN = 4
STABLE_RUN = 3
CERT_SLACK = 2

_ZERO = WeylElement.zero()
_ONE = WeylElement.one()

Wmat = Tuple[Tuple[WeylElement, ...], ...]


def _deg(w: WeylElement) -> int:
    d = w.degree()
    return -1 if d is None else d


def _check_degree(n: int) -> int:
    if not isinstance(n, int) or n < 0 or n > HARD_CAP:
        raise ValueError(f"degree bound must be an integer in [0, {HARD_CAP}]")
    return n


def truncated_monomials(n: int) -> list[tuple[int, int]]:
    """Exponent pairs (i, j) with i + j <= n, by total degree then j."""
    return [(total - j, j) for total in range(n + 1) for j in range(total + 1)]


def monomial_count(n: int) -> int:
    if n < 0:
        return 0
    return (n + 1) * (n + 2) // 2


# -- module presentations ----------------------------------------------


class CyclicModule:
    """D/Dp for a nonzero relation p.

    The relation is normalized so its leading coefficient (in the
    canonical term order) is 1; scaling by a nonzero rational does not
    change the submodule Dp.
    """

    __slots__ = ("p",)

    def __init__(self, p):
        if isinstance(p, str):
            p = parse_weyl(p)
        if not isinstance(p, WeylElement):
            raise TypeError("relation must be a WeylElement or a string")
        if p.is_zero():
            raise ValueError("cyclic presentation needs a nonzero relation")
        lead = p.items()[-1][1]
        self.p = p * (1 / lead)

    @property
    def n(self) -> int:
        return 1

    def to_presented(self) -> "PresentedModule":
        return PresentedModule(((self.p,),))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicModule):
            return NotImplemented
        return self.p == other.p

    def __hash__(self) -> int:
        return hash(("cyclic", self.p))

    def __repr__(self) -> str:
        return f"CyclicModule({print_weyl(self.p)!r})"


class PresentedModule:
    """D^n modulo the row space of a square relation matrix."""

    __slots__ = ("delta", "n")

    def __init__(self, delta: Iterable[Iterable]):
        rows = []
        for row in delta:
            rows.append(
                tuple(parse_weyl(e) if isinstance(e, str) else e for e in row)
            )
        n = len(rows)
        if n == 0:
            raise ValueError("presentation needs at least one generator")
        for row in rows:
            if len(row) != n:
                raise ValueError("presentation matrix must be square")
            for e in row:
                if not isinstance(e, WeylElement):
                    raise TypeError("matrix entries must be WeylElements or strings")
        self.delta = tuple(rows)
        self.n = n

    def row_degree(self, i: int) -> int:
        degs = [_deg(e) for e in self.delta[i]]
        return max(degs) if degs else -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, PresentedModule):
            return NotImplemented
        return self.delta == other.delta

    def __hash__(self) -> int:
        return hash(self.delta)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(print_weyl(e) for e in row) for row in self.delta
        )
        return f"PresentedModule[{body}]"


def as_presented(m) -> PresentedModule:
    if isinstance(m, CyclicModule):
        return m.to_presented()
    if isinstance(m, PresentedModule):
        return m
    raise TypeError(f"not a module presentation: {m!r}")


def _coerce_module(m):
    if isinstance(m, (str, WeylElement)):
        return CyclicModule(m)
    if isinstance(m, (CyclicModule, PresentedModule)):
        return m
    raise TypeError(f"not a module presentation: {m!r}")


def block_decompose(m: PresentedModule) -> list[tuple[tuple[int, ...], PresentedModule]]:
    """Split a presentation into its block-diagonal components.

    Generators i and j land in the same block when delta couples them in
    either matrix position.  Returns (index tuple, submatrix) pairs in
    order of smallest index.
    """
    n = m.n
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(n):
            if i != j and (not m.delta[i][j].is_zero() or not m.delta[j][i].is_zero()):
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = []
    for members in sorted(groups.values(), key=lambda g: g[0]):
        sub = PresentedModule(
            tuple(tuple(m.delta[i][j] for j in members) for i in members)
        )
        out.append((tuple(members), sub))
    return out


# -- matrices over the algebra ------------------------------------------


def wmat(rows: Iterable[Iterable]) -> Wmat:
    return tuple(
        tuple(parse_weyl(e) if isinstance(e, str) else e for e in row) for row in rows
    )


def wmat_identity(n: int) -> Wmat:
    return tuple(
        tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)
    )


def wmat_zero(nrows: int, ncols: int) -> Wmat:
    return tuple(tuple(_ZERO for _ in range(ncols)) for _ in range(nrows))


def wmat_mul(a: Wmat, b: Wmat) -> Wmat:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch in product")
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(len(b))), _ZERO)
            for j in range(len(b[0]) if b else 0)
        )
        for i in range(len(a))
    )


def wmat_sub(a: Wmat, b: Wmat) -> Wmat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def wmat_is_zero(a: Wmat) -> bool:
    return all(e.is_zero() for row in a for e in row)


def wmat_deg(a: Wmat) -> int:
    degs = [_deg(e) for row in a for e in row]
    return max(degs) if degs else -1


# -- truncated spans ------------------------------------------------------


class TruncatedSpan:
    """Row space of degree-bounded vectors in D^ngens, reduced once.

    Coordinates are ordered by descending total degree, so a reduced
    row's pivot is its highest-degree monomial and the whole row lies in
    degree <= pivot degree.  Consequently the number of pivots of degree
    <= n equals dim(span intersect V_n) for every n up to the window,
    and one reduction serves the full degree profile.
    """

    def __init__(self, vectors: Sequence[tuple], ngens: int, window: int):
        self.ngens = ngens
        self.window = window
        monos = truncated_monomials(window)
        cols = sorted(
            ((g, m) for g in range(ngens) for m in monos),
            key=lambda c: (-(c[1][0] + c[1][1]), c[1][1], c[0]),
        )
        self._cols = cols
        self._pos = {c: k for k, c in enumerate(cols)}
        dense = [self._dense(v) for v in vectors]
        if dense:
            self._rows, self._pivots = rref_rows(dense)
        else:
            self._rows, self._pivots = [], []
        self._pivot_degree = [
            cols[p][1][0] + cols[p][1][1] for p in self._pivots
        ]

    def _dense(self, vec: tuple) -> list[Fraction]:
        if len(vec) != self.ngens:
            raise ValueError("vector has the wrong number of components")
        row = [Fraction(0)] * len(self._cols)
        for g, w in enumerate(vec):
            for ij, c in w.items():
                pos = self._pos.get((g, ij))
                if pos is None:
                    raise ValueError("vector exceeds the span window")
                row[pos] = c
        return row

    def _sparse(self, row: Sequence[Fraction]) -> tuple:
        parts: list[dict] = [{} for _ in range(self.ngens)]
        for (g, ij), c in zip(self._cols, row):
            if c:
                parts[g][ij] = c
        return tuple(WeylElement(p) for p in parts)

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def dim_cap(self, n: int) -> int:
        return sum(1 for dd in self._pivot_degree if dd <= n)

    def pivot_positions(self) -> list[int]:
        return list(self._pivots)

    def pivot_degrees(self) -> list[int]:
        return list(self._pivot_degree)

    def basis_vectors(self) -> list[tuple]:
        return [self._sparse(r) for r in self._rows]

    def reduce(self, vec: tuple) -> tuple:
        dense = self._dense(vec)
        for r_idx, p in enumerate(self._pivots):
            f = dense[p]
            if f:
                row = self._rows[r_idx]
                dense = [a - f * b for a, b in zip(dense, row)]
        return self._sparse(dense)

    def contains(self, vec: tuple) -> bool:
        return all(e.is_zero() for e in self.reduce(vec))

    def standard_monomials(self, n: int) -> list[tuple[int, tuple[int, int]]]:
        """Non-pivot coordinates of degree <= n, ascending canonical order."""
        pivot_set = set(self._pivots)
        out = [
            (g, ij)
            for k, (g, ij) in enumerate(self._cols)
            if k not in pivot_set and ij[0] + ij[1] <= n
        ]
        out.sort(key=lambda c: (c[1][0] + c[1][1], c[1][1], c[0]))
        return out


# -- linear systems with algebra-element unknowns -------------------------


class WeylLinearSystem:
    """Exact linear system whose unknowns are algebra elements.

    Each unknown has a degree bound; constraints have the form
    sum_k coef_k * left_k * X_{name_k} * right_k = rhs and expand over
    the monomial coordinates of both sides.
    """

    def __init__(self):
        self._monos: dict[str, list[tuple[int, int]]] = {}
        self._names: list[str] = []
        self._eqs: list[tuple[list, WeylElement]] = []

    def unknown(self, name: str, degree: int) -> str:
        if name in self._monos:
            raise ValueError(f"duplicate unknown {name!r}")
        self._monos[name] = truncated_monomials(degree) if degree >= 0 else []
        self._names.append(name)
        return name

    def equate(self, terms: Iterable[tuple], rhs: WeylElement | None = None) -> None:
        terms = list(terms)
        for _, name, _, _ in terms:
            if name not in self._monos:
                raise KeyError(f"unknown {name!r} is not declared")
        self._eqs.append((terms, _ZERO if rhs is None else rhs))

    def _assemble(self):
        offset: dict[str, int] = {}
        total = 0
        for name in self._names:
            offset[name] = total
            total += len(self._monos[name])
        rows: list[list[Fraction]] = []
        rhs_vals: list[Fraction] = []
        for terms, rhs in self._eqs:
            rowmap: dict[tuple[int, int], list[Fraction]] = {}

            def row_for(key):
                row = rowmap.get(key)
                if row is None:
                    row = [Fraction(0)] * total
                    rowmap[key] = row
                return row

            for left, name, right, coef in terms:
                base = offset[name]
                cf = Fraction(coef)
                for k, (a, b) in enumerate(self._monos[name]):
                    w = left * WeylElement.monomial(a, b) * right
                    for ij, c in w.items():
                        row_for(ij)[base + k] += cf * c
            for ij, _ in rhs.items():
                row_for(ij)
            for key in sorted(rowmap):
                rows.append(rowmap[key])
                rhs_vals.append(rhs.coeff(*key))
        return rows, rhs_vals, offset, total

    def _unpack(self, x: Sequence[Fraction], offset: dict) -> dict[str, WeylElement]:
        out = {}
        for name in self._names:
            base = offset[name]
            terms = {
                mono: x[base + k]
                for k, mono in enumerate(self._monos[name])
                if x[base + k]
            }
            out[name] = WeylElement(terms)
        return out

    def solve(self) -> dict[str, WeylElement] | None:
        rows, rhs_vals, offset, total = self._assemble()
        x = solve_linear(rows, rhs_vals, total)
        return None if x is None else self._unpack(x, offset)

    def kernel(self) -> list[dict[str, WeylElement]]:
        for _, rhs in self._eqs:
            if not rhs.is_zero():
                raise ValueError("kernel of an inhomogeneous system")
        rows, _, offset, total = self._assemble()
        return [self._unpack(v, offset) for v in kernel_basis(rows, total)]


# -- membership in presentation images ------------------------------------

_image_cache: dict = {}


def module_image_span(m: PresentedModule, window: int) -> TruncatedSpan:
    """Truncated span of {mono * row_i : all rows, mono within the window}."""
    key = (m.delta, window)
    span = _image_cache.get(key)
    if span is None:
        vectors = []
        for i in range(m.n):
            rd = m.row_degree(i)
            if rd < 0:
                continue
            for a, b in truncated_monomials(window - rd):
                mono = WeylElement.monomial(a, b)
                vectors.append(tuple(mono * e for e in m.delta[i]))
        span = TruncatedSpan(vectors, m.n, window)
        _image_cache[key] = span
    return span


def image_witness(m: PresentedModule, vec: tuple, window: int):
    """Row c with c * delta = vec, searched within the window, or None."""
    sys = WeylLinearSystem()
    for i in range(m.n):
        rd = m.row_degree(i)
        sys.unknown(f"c{i}", window - rd if rd >= 0 else -1)
    for j in range(m.n):
        sys.equate(
            [(_ONE, f"c{i}", m.delta[i][j], 1) for i in range(m.n)],
            rhs=vec[j],
        )
    sol = sys.solve()
    if sol is None:
        return None
    return tuple(sol[f"c{i}"] for i in range(m.n))


def divide_left(r: WeylElement, q: WeylElement) -> WeylElement | None:
    """The unique s with s*q = r, or None when q does not divide r."""
    if q.is_zero():
        raise ValueError("division by the zero element")
    if r.is_zero():
        return _ZERO
    ds = _deg(r) - _deg(q)
    if ds < 0:
        return None
    sys = WeylLinearSystem()
    sys.unknown("s", ds)
    sys.equate([(_ONE, "s", q, 1)], rhs=r)
    sol = sys.solve()
    return None if sol is None else sol["s"]


# -- hom spaces between cyclic modules ------------------------------------


@dataclass(frozen=True)
class HomBasis:
    """Basis of hom classes D/Dp -> D/Dq up to a degree bound.

    A map is right multiplication by r with p*r in Dq; r and r' give the
    same map when r - r' is in Dq.  dims[n] counts classes with a
    representative of degree <= n; basis holds one representative per
    class at the bound.
    """

    source: CyclicModule
    target: CyclicModule
    max_degree: int
    dims: tuple[int, ...]
    basis: tuple[WeylElement, ...]

    @property
    def dim(self) -> int:
        return self.dims[-1]

    def stabilized_at(self) -> int | None:
        run = STABLE_RUN
        for n in range(len(self.dims) - run + 1):
            if len(set(self.dims[n : n + run])) == 1:
                return n
        return None


_hom_cache: dict = {}


def hom_search(source, target, max_degree: int = DEFAULT_MAX_DEGREE) -> HomBasis:
    """Hom classes between cyclic modules, with the degree profile.

    Solves p*r = u*q for (r, u) with deg r <= max_degree (the bound on u
    is then forced by degree additivity, so the profile is exact, not a
    window estimate).  Every returned representative is rechecked by an
    exact division before the basis is handed back.
    """
    source = _coerce_module(source)
    target = _coerce_module(target)
    if not isinstance(source, CyclicModule) or not isinstance(target, CyclicModule):
        raise TypeError("hom_search expects cyclic modules")
    n_cap = _check_degree(max_degree)
    key = (source.p, target.p, n_cap)
    cached = _hom_cache.get(key)
    if cached is not None:
        return cached
    p, q = source.p, target.p
    dp, dq = _deg(p), _deg(q)
    sys = WeylLinearSystem()
    sys.unknown("r", n_cap)
    sys.unknown("u", dp + n_cap - dq)
    sys.equate([(p, "r", _ONE, 1), (_ONE, "u", q, -1)])
    sols = sys.kernel()
    rspan = TruncatedSpan([(s["r"],) for s in sols], 1, n_cap)
    qvecs = [
        (WeylElement.monomial(a, b) * q,)
        for a, b in truncated_monomials(n_cap - dq)
    ]
    qspan = TruncatedSpan(qvecs, 1, n_cap)
    dims = tuple(
        rspan.dim_cap(n) - qspan.dim_cap(n) for n in range(n_cap + 1)
    )
    qpivots = set(qspan.pivot_positions())
    basis = tuple(
        vec[0]
        for vec, pos in zip(rspan.basis_vectors(), rspan.pivot_positions())
        if pos not in qpivots
    )
    for r in basis:
        if divide_left(p * r, q) is None:
            raise RuntimeError("hom basis element failed the exact recheck")
    result = HomBasis(source, target, n_cap, dims, basis)
    _hom_cache[key] = result
    return result


# -- isomorphism certificates ----------------------------------------------


@dataclass(frozen=True)
class IsoWitness:
    """Two-sided isomorphism certificate between presented modules.

    With Da, Db the presentation matrices of source and target, the
    matrices here satisfy, exactly,

        Da * r = u * Db          (r defines a map source -> target)
        Db * s = v * Da          (s defines a map target -> source)
        r * s - 1 = c_a * Da     (the composite is the identity on source)
        s * r - 1 = c_b * Db     (and on target)

    verify() rechecks all four lines by plain multiplication.
    """

    source: object
    target: object
    r: Wmat
    s: Wmat
    u: Wmat
    v: Wmat
    c_a: Wmat
    c_b: Wmat
    max_degree: int

    def verify(self) -> bool:
        da = as_presented(self.source).delta
        db = as_presented(self.target).delta
        na = len(da)
        nb = len(db)
        return (
            wmat_mul(da, self.r) == wmat_mul(self.u, db)
            and wmat_mul(db, self.s) == wmat_mul(self.v, da)
            and wmat_sub(wmat_mul(self.r, self.s), wmat_identity(na))
            == wmat_mul(self.c_a, da)
            and wmat_sub(wmat_mul(self.s, self.r), wmat_identity(nb))
            == wmat_mul(self.c_b, db)
        )

    def reversed(self) -> "IsoWitness":
        return IsoWitness(
            source=self.target,
            target=self.source,
            r=self.s,
            s=self.r,
            u=self.v,
            v=self.u,
            c_a=self.c_b,
            c_b=self.c_a,
            max_degree=self.max_degree,
        )


def _identity_witness(m, max_degree: int) -> IsoWitness:
    n = as_presented(m).n
    ident = wmat_identity(n)
    zero = wmat_zero(n, n)
    return IsoWitness(m, m, ident, ident, ident, ident, zero, zero, max_degree)


def compose_iso(w1: IsoWitness, w2: IsoWitness) -> IsoWitness:
    """Compose certificates without re-solving.

    The new correction terms come from substituting one certificate's
    identities into the other, so the result verifies by construction.
    """
    if as_presented(w1.target).delta != as_presented(w2.source).delta:
        raise ValueError("witness endpoints do not match")
    r = wmat_mul(w1.r, w2.r)
    s = wmat_mul(w2.s, w1.s)
    u = wmat_mul(w1.u, w2.u)
    v = wmat_mul(w2.v, w1.v)
    c_a = tuple(
        tuple(x + y for x, y in zip(ra, rb))
        for ra, rb in zip(w1.c_a, wmat_mul(wmat_mul(w1.r, w2.c_a), w1.v))
    )
    c_b = tuple(
        tuple(x + y for x, y in zip(ra, rb))
        for ra, rb in zip(w2.c_b, wmat_mul(wmat_mul(w2.s, w1.c_b), w2.u))
    )
    out = IsoWitness(
        w1.source, w2.target, r, s, u, v, c_a, c_b,
        max(w1.max_degree, w2.max_degree),
    )
    if not out.verify():
        raise RuntimeError("composed witness failed verification")
    return out


def _s_rungs(max_degree: int) -> list[int]:
    return sorted({min(x, max_degree) for x in (1, 2, 4, 6)})


def _finish_cyclic_iso(a: CyclicModule, b: CyclicModule, r: WeylElement,
                       s_pool: list[WeylElement], max_degree: int) -> IsoWitness | None:
    p, q = a.p, b.p
    dp = _deg(p)
    u = divide_left(p * r, q)
    if u is None:
        return None
    ca_deg = max(0, _deg(r) + max(_deg(s) for s in s_pool) - dp + CERT_SLACK)
    sys = WeylLinearSystem()
    for j in range(len(s_pool)):
        sys.unknown(f"y{j}", 0)
    sys.unknown("ca", ca_deg)
    sys.equate(
        [(r * s_pool[j], f"y{j}", _ONE, 1) for j in range(len(s_pool))]
        + [(_ONE, "ca", p, -1)],
        rhs=_ONE,
    )
    sol = sys.solve()
    if sol is None:
        return None
    s = _ZERO
    for j, cand in enumerate(s_pool):
        s = s + cand * sol[f"y{j}"].coeff(0, 0)
    c_b = divide_left(s * r - _ONE, q)
    if c_b is None:
        return None
    v = divide_left(q * s, p)
    if v is None:
        return None
    out = IsoWitness(
        a, b,
        ((r,),), ((s,),), ((u,),), ((v,),),
        ((sol["ca"],),), ((c_b,),),
        max_degree,
    )
    if not out.verify():
        raise RuntimeError("cyclic witness failed verification")
    return out


def _cyclic_iso(a: CyclicModule, b: CyclicModule, max_degree: int) -> IsoWitness | None:
    if a.p == b.p:
        return _identity_witness(a, max_degree)
    hab = hom_search(a, b, max_degree)
    if hab.dim == 0:
        return None
    hba = hom_search(b, a, max_degree)
    if hba.dim == 0:
        return None
    candidates = list(hab.basis)
    for i in range(len(hab.basis)):
        for j in range(i + 1, len(hab.basis)):
            if len(candidates) >= 12:
                break
            candidates.append(hab.basis[i] + hab.basis[j])
    s_all = sorted(hba.basis, key=_deg)
    rungs = sorted({(min(2, max_degree),) * 2, (min(4, max_degree),) * 2,
                    (max_degree,) * 2})
    tried = set()
    for dr_cap, ds_cap in rungs:
        rs = [r for r in candidates if 0 <= _deg(r) <= dr_cap]
        ss = [s for s in s_all if 0 <= _deg(s) <= ds_cap]
        key = (tuple(rs), tuple(ss))
        if not rs or not ss or key in tried:
            continue
        tried.add(key)
        for r in rs:
            w = _finish_cyclic_iso(a, b, r, ss, max_degree)
            if w is not None:
                return w
    return None


def _generator_candidates(m: PresentedModule) -> list[tuple]:
    n = m.n
    t = WeylElement.t()
    d = WeylElement.d()

    def vec(entries: dict[int, WeylElement]) -> tuple:
        return tuple(entries.get(i, _ZERO) for i in range(n))

    cands = [vec({i: _ONE}) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            cands.append(vec({i: _ONE, j: _ONE}))
            cands.append(vec({i: _ONE, j: -_ONE}))
    for i in range(n):
        for j in range(n):
            if i != j:
                cands.append(vec({i: _ONE, j: t}))
                cands.append(vec({i: _ONE, j: d}))
    return cands[:12]


def _certify_generator(a: CyclicModule, b: PresentedModule, g: tuple, u_row: tuple,
                       s_degree: int, max_degree: int) -> IsoWitness | None:
    """Certify D/Dp = b with the cyclic generator mapping to g."""
    p = a.p
    dp = _deg(p)
    n = b.n
    db = wmat_deg(b.delta)
    sys = WeylLinearSystem()
    for j in range(n):
        sys.unknown(f"s{j}", s_degree)
    for i in range(n):
        sys.unknown(f"v{i}", max(-1, db + s_degree - dp + CERT_SLACK))
    for i in range(n):
        sys.equate(
            [(b.delta[i][j], f"s{j}", _ONE, 1) for j in range(n)]
            + [(_ONE, f"v{i}", p, -1)]
        )
    basis = sys.kernel()
    if not basis:
        return None
    g_deg = max(0, max(_deg(e) for e in g))
    cw = s_degree + g_deg + WINDOW_MARGIN
    sys2 = WeylLinearSystem()
    for k in range(len(basis)):
        sys2.unknown(f"x{k}", 0)
    sys2.unknown("ca", max(0, g_deg + s_degree - dp + CERT_SLACK))
    for i in range(n):
        for l in range(n):
            rd = b.row_degree(l)
            sys2.unknown(f"cb_{i}_{l}", cw - rd if rd >= 0 else -1)
    gs = [
        sum((g[j] * basis[k][f"s{j}"] for j in range(n)), _ZERO)
        for k in range(len(basis))
    ]
    sys2.equate(
        [(gs[k], f"x{k}", _ONE, 1) for k in range(len(basis))]
        + [(_ONE, "ca", p, -1)],
        rhs=_ONE,
    )
    for i in range(n):
        for j in range(n):
            terms = [
                (basis[k][f"s{i}"] * g[j], f"x{k}", _ONE, 1)
                for k in range(len(basis))
            ]
            terms += [
                (_ONE, f"cb_{i}_{l}", b.delta[l][j], -1) for l in range(n)
            ]
            sys2.equate(terms, rhs=_ONE if i == j else _ZERO)
    sol = sys2.solve()
    if sol is None:
        return None
    xs = [sol[f"x{k}"].coeff(0, 0) for k in range(len(basis))]
    s_col = tuple(
        (sum((basis[k][f"s{i}"] * xs[k] for k in range(len(basis))), _ZERO),)
        for i in range(n)
    )
    v_col = tuple(
        (sum((basis[k][f"v{i}"] * xs[k] for k in range(len(basis))), _ZERO),)
        for i in range(n)
    )
    c_b = tuple(
        tuple(sol[f"cb_{i}_{l}"] for l in range(n)) for i in range(n)
    )
    out = IsoWitness(
        a, b,
        (tuple(g),), s_col, (tuple(u_row),), v_col,
        ((sol["ca"],),), c_b,
        max_degree,
    )
    if not out.verify():
        raise RuntimeError("generator witness failed verification")
    return out


def _cyclic_to_presented_iso(a: CyclicModule, b: PresentedModule, max_degree: int,
                             generators: list[tuple] | None = None) -> IsoWitness | None:
    p = a.p
    window = max_degree + WINDOW_MARGIN
    span = module_image_span(b, window)
    gens = generators if generators is not None else _generator_candidates(b)
    for g in gens:
        pg = tuple(p * e for e in g)
        if not span.contains(pg):
            continue
        u_row = image_witness(b, pg, window)
        if u_row is None:
            continue
        for sd in _s_rungs(max_degree):
            w = _certify_generator(a, b, g, u_row, sd, max_degree)
            if w is not None:
                return w
    return None


def iso_witness(source, target, max_degree: int = DEFAULT_MAX_DEGREE) -> IsoWitness | None:
    """Search for a certified isomorphism between two modules.

    Dispatches on the presentation shapes; every returned witness passes
    verify().  None means no witness was found within the degree bound,
    which is a bounded negative, not a proof of non-isomorphism.
    """
    n_cap = _check_degree(max_degree)
    source = _coerce_module(source)
    target = _coerce_module(target)
    s_cyc = isinstance(source, CyclicModule)
    t_cyc = isinstance(target, CyclicModule)
    if s_cyc and t_cyc:
        return _cyclic_iso(source, target, n_cap)
    if s_cyc and not t_cyc:
        return _cyclic_to_presented_iso(source, target, n_cap)
    if not s_cyc and t_cyc:
        w = _cyclic_to_presented_iso(target, source, n_cap)
        return None if w is None else w.reversed()
    if source.delta == target.delta:
        return _identity_witness(source, n_cap)
    ca = cyclic_form(source, n_cap)
    if ca is None:
        return None
    cyc_a, w_a = ca
    w_direct = _cyclic_to_presented_iso(cyc_a, target, n_cap)
    if w_direct is not None:
        return compose_iso(w_a.reversed(), w_direct)
    cb = cyclic_form(target, n_cap)
    if cb is None:
        return None
    cyc_b, w_b = cb
    w_mid = _cyclic_iso(cyc_a, cyc_b, n_cap)
    if w_mid is None:
        return None
    return compose_iso(w_a.reversed(), compose_iso(w_mid, w_b))


# -- recovering a cyclic presentation --------------------------------------

_cform_cache: dict = {}

_CFORM_ATTEMPT_CAP = 60


def cyclic_form(m: PresentedModule, max_degree: int = DEFAULT_MAX_DEGREE):
    """(CyclicModule, witness cyclic -> m) when a single generator with a
    certifiable principal annihilator is found within the bounds, else None.

    The search tries short generator combinations, collects low-degree
    annihilator elements for each, and certifies candidates starting from
    the smallest degrees.  The attempt budget is bounded, so None is a
    bounded negative.
    """
    n_cap = _check_degree(max_degree)
    key = (m.delta, n_cap)
    if key in _cform_cache:
        return _cform_cache[key]
    result = _cyclic_form_search(m, n_cap)
    _cform_cache[key] = result
    return result


def _scaling_witness(m: PresentedModule, max_degree: int):
    p = m.delta[0][0]
    cyc = CyclicModule(p)
    lead = p.items()[-1][1]
    one = ((_ONE,),)
    w = IsoWitness(
        cyc, m,
        one, one,
        ((WeylElement.constant(1 / lead),),),
        ((WeylElement.constant(lead),),),
        ((_ZERO,),), ((_ZERO,),),
        max_degree,
    )
    if not w.verify():
        raise RuntimeError("scaling witness failed verification")
    return cyc, w


def _cyclic_form_search(m: PresentedModule, n_cap: int):
    if m.n == 1:
        if m.delta[0][0].is_zero():
            return None
        return _scaling_witness(m, n_cap)
    attempts = 0
    ann_rungs = sorted({min(x, n_cap) for x in (1, 2, 4, 6)})
    gens = _generator_candidates(m)
    ann_cache: dict[int, list[WeylElement]] = {}
    tried_cert: set = set()
    for sd in _s_rungs(n_cap):
        for gi, g in enumerate(gens):
            candidates = ann_cache.get(gi)
            if candidates is None:
                candidates = _annihilator_candidates(m, g, ann_rungs)
                ann_cache[gi] = candidates
            for p_cand in candidates:
                cert_key = (gi, p_cand, sd)
                if cert_key in tried_cert:
                    continue
                tried_cert.add(cert_key)
                if attempts >= _CFORM_ATTEMPT_CAP:
                    return None
                attempts += 1
                cyc = CyclicModule(p_cand)
                window = n_cap + WINDOW_MARGIN
                pg = tuple(cyc.p * e for e in g)
                span = module_image_span(m, window)
                if not span.contains(pg):
                    continue
                u_row = image_witness(m, pg, window)
                if u_row is None:
                    continue
                w = _certify_generator(cyc, m, g, u_row, sd, n_cap)
                if w is not None:
                    return cyc, w
    return None


def _annihilator_candidates(m: PresentedModule, g: tuple, rungs: list[int]) -> list[WeylElement]:
    """Low-degree elements a with a*g in the image of the presentation."""
    g_deg = max(0, max(_deg(e) for e in g))
    seen: set[WeylElement] = set()
    out: list[WeylElement] = []
    for k in rungs:
        sys = WeylLinearSystem()
        sys.unknown("a", k)
        for i in range(m.n):
            rd = m.row_degree(i)
            bound = k + g_deg + WINDOW_MARGIN - rd if rd >= 0 else -1
            sys.unknown(f"x{i}", bound)
        for j in range(m.n):
            sys.equate(
                [(_ONE, "a", g[j], 1)]
                + [(_ONE, f"x{i}", m.delta[i][j], -1) for i in range(m.n)]
            )
        sols = sys.kernel()
        avecs = [(s["a"],) for s in sols if not s["a"].is_zero()]
        if not avecs:
            continue
        span = TruncatedSpan(avecs, 1, k)
        rows = list(zip(span.basis_vectors(), span.pivot_degrees()))
        rows.sort(key=lambda rp: rp[1])
        for (vec, _degree) in rows:
            cand = CyclicModule(vec[0]).p
            if cand not in seen:
                seen.add(cand)
                out.append(cand)
        if out:
            break
    return out[:6]


def cyclic_identify(m: PresentedModule, max_degree: int = DEFAULT_MAX_DEGREE) -> CyclicModule | None:
    """Recognize a presentation as D/Dp.

    Presentations that split into more than one diagonal block report
    None here; direct sums are reported through the block decomposition
    instead.  A None on a single block means no cyclic form was found
    within the degree bound.
    """
    if not isinstance(m, PresentedModule):
        raise TypeError("cyclic_identify expects a PresentedModule")
    n_cap = _check_degree(max_degree)
    if len(block_decompose(m)) > 1:
        return None
    found = cyclic_form(m, n_cap)
    return None if found is None else found[0]


def clear_caches() -> None:
    _image_cache.clear()
    _hom_cache.clear()
    _cform_cache.clear()
