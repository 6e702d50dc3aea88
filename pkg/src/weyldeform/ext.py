"""Extension spaces between cyclic modules and the unobstructed hull.

For cyclic left modules D/Dp and D/Dq the first extension space is the
quotient D / (pD + Dq): pD collects right multiples of p, Dq left
multiples of q.  Dimensions are read off a single truncated-span
reduction whose window is wider than the reported range, because a
membership witness can exceed the degree of the element it certifies.

Both modules here have free resolutions of length one, so the second
extension space vanishes for structural reasons; ext2_dim records that
reason instead of running a search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .modules import (
    CyclicModule,
    DEFAULT_MAX_DEGREE,
    STABLE_RUN,
    TruncatedSpan,
    WINDOW_MARGIN,
    _check_degree,
    _coerce_module,
    _deg,
    monomial_count,
    truncated_monomials,
)
from .weyl import WeylElement


@dataclass(frozen=True)
class FreeResolution:
    """A free resolution 0 -> D -> D -> D/Dp -> 0 of a cyclic module.

    The single differential is right multiplication by the relation.
    Longer resolutions can be described but not computed with here.
    """

    module: CyclicModule
    length: int = 1

    def __post_init__(self):
        if not isinstance(self.module, CyclicModule):
            raise TypeError("resolution needs a cyclic module")
        if self.length < 1:
            raise ValueError("resolution length must be positive")

    @property
    def differential(self) -> WeylElement:
        return self.module.p


@dataclass(frozen=True)
class Ext1Result:
    """Dimension and representatives for one first-extension space.

    dims[n] is the dimension seen at degree cutoff n; the reported dim
    is dims at the full bound.  Iterating yields (dim, representatives)
    so the result unpacks as a pair.
    """

    dim: int
    representatives: tuple[WeylElement, ...]
    dims: tuple[int, ...]
    stabilized_at: int | None

    @property
    def stable(self) -> bool:
        return self.stabilized_at is not None

    def __iter__(self):
        return iter((self.dim, self.representatives))


class Ext2Result(int):
    """An integer that carries the reason it is zero."""

    def __new__(cls, value: int, reason: str):
        out = super().__new__(cls, value)
        out.reason = reason
        return out


class ObstructionError(RuntimeError):
    pass


def _stabilized_at(dims: tuple[int, ...]) -> int | None:
    for n in range(len(dims) - STABLE_RUN + 1):
        if len(set(dims[n : n + STABLE_RUN])) == 1:
            return n
    return None


_ext_cache: dict = {}


def ext1_dim(source, target, max_degree: int = DEFAULT_MAX_DEGREE) -> Ext1Result:
    """Compute Ext^1(D/Dp, D/Dq) = D/(pD + Dq) up to a degree bound.

    Representatives are the standard monomials of the reduced span, in
    ascending order, one per dimension of the reported quotient.
    """
    source = _coerce_module(source)
    target = _coerce_module(target)
    if not isinstance(source, CyclicModule) or not isinstance(target, CyclicModule):
        raise TypeError("ext1_dim expects cyclic modules")
    n_cap = _check_degree(max_degree)
    p, q = source.p, target.p
    key = (p, q, n_cap)
    cached = _ext_cache.get(key)
    if cached is not None:
        return cached
    window = n_cap + WINDOW_MARGIN
    dp, dq = _deg(p), _deg(q)
    vectors = []
    for a, b in truncated_monomials(window - dp):
        vectors.append((p * WeylElement.monomial(a, b),))
    for a, b in truncated_monomials(window - dq):
        vectors.append((WeylElement.monomial(a, b) * q,))
    span = TruncatedSpan(vectors, 1, window)
    dims = tuple(monomial_count(n) - span.dim_cap(n) for n in range(n_cap + 1))
    reps = tuple(
        WeylElement.monomial(*ij) for _, ij in span.standard_monomials(n_cap)
    )
    result = Ext1Result(dims[-1], reps, dims, _stabilized_at(dims))
    _ext_cache[key] = result
    return result


def ext2_dim(source, target, max_degree: int = DEFAULT_MAX_DEGREE) -> Ext2Result:
    """Second extension space; zero whenever both resolutions are short.

    Accepts modules or FreeResolution values.  Resolutions longer than
    one step are rejected rather than guessed at.
    """
    resolutions = []
    for m in (source, target):
        if isinstance(m, FreeResolution):
            resolutions.append(m)
        else:
            resolutions.append(FreeResolution(_coerce_module(m)))
    for res in resolutions:
        if res.length != 1:
            raise ValueError(
                "ext2_dim needs free resolutions of length 1; "
                f"got length {res.length}"
            )
    _check_degree(max_degree)
    return Ext2Result(
        0, "free resolutions of length 1 leave nothing in degree 2"
    )


@dataclass(frozen=True)
class ExtTable:
    """First and second extension dimensions over a list of modules.

    dims1[i][j] is dim Ext^1(M_j, M_i): column index is the source,
    row index the target, matching the convention that the (i, j) entry
    counts arrows drawn from point j to point i.
    """

    modules: tuple[CyclicModule, ...]
    max_degree: int
    dims1: tuple[tuple[int, ...], ...]
    dims2: tuple[tuple[int, ...], ...]
    representatives: tuple[tuple[tuple[WeylElement, ...], ...], ...]
    stabilized_at: int | None

    @property
    def stable(self) -> bool:
        return self.stabilized_at is not None


def ext_table(modules: Iterable | None = None,
              max_degree: int = DEFAULT_MAX_DEGREE) -> ExtTable:
    if modules is None:
        modules = (CyclicModule("d"), CyclicModule("t"))
    mods = tuple(_coerce_module(m) for m in modules)
    n_cap = _check_degree(max_degree)
    results = [
        [ext1_dim(mods[j], mods[i], n_cap) for j in range(len(mods))]
        for i in range(len(mods))
    ]
    dims1 = tuple(tuple(r.dim for r in row) for row in results)
    dims2 = tuple(
        tuple(int(ext2_dim(mods[j], mods[i], n_cap)) for j in range(len(mods)))
        for i in range(len(mods))
    )
    reps = tuple(tuple(r.representatives for r in row) for row in results)
    stab: int | None = 0
    for row in results:
        for r in row:
            if r.stabilized_at is None:
                stab = None
            elif stab is not None:
                stab = max(stab, r.stabilized_at)
    return ExtTable(mods, n_cap, dims1, dims2, reps, stab)


# -- the pointed hull -------------------------------------------------------


@dataclass(frozen=True)
class Arrow:
    """One extension class, drawn as an arrow between the two points."""

    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Relation:
    """A displayed relation plus its word equations.

    Each equation is (lhs, rhs) with words as tuples of generator names
    and rhs None standing for zero.  One display line may carry several
    equations (a chain like x^2 = y^2 = 0).
    """

    display: str
    equations: tuple[tuple[tuple[str, ...], tuple[str, ...] | None], ...]


@dataclass(frozen=True)
class PointedAlgebra:
    """Completed path algebra of the extension quiver, with relations.

    The underlying vector space is spanned by paths; trunc_dim(m) counts
    paths of length below m, which is the dimension of the quotient by
    the m-th power of the arrow ideal.
    """

    points: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...]
    arrow_counts: tuple[tuple[int, ...], ...]

    def trunc_dim(self, order: int) -> int:
        return hull_trunc_dim(self, order)

    def component_dims(self, order: int) -> tuple[tuple[int, ...], ...]:
        """Path counts between points, lengths below the given order."""
        k = len(self.points)
        total = [[0] * k for _ in range(k)]
        power = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
        for _ in range(max(0, order)):
            for i in range(k):
                for j in range(k):
                    total[i][j] += power[i][j]
            power = [
                [
                    sum(self.arrow_counts[i][l] * power[l][j] for l in range(k))
                    for j in range(k)
                ]
                for i in range(k)
            ]
        return tuple(tuple(row) for row in total)


def hull_unobstructed(table: ExtTable) -> PointedAlgebra:
    """Build the hull of the deformation problem the table describes.

    Vanishing second extensions mean no obstruction can appear, so the
    hull is the completed path algebra of the extension quiver and the
    relations are exactly the pointed-idempotent laws.  A nonzero entry
    in dims2 would invalidate that shortcut, hence the error.
    """
    for row in table.dims2:
        for entry in row:
            if entry != 0:
                raise ObstructionError(
                    "nonzero second extension space; the quadratic hull "
                    "shortcut does not apply"
                )
    if len(table.modules) != 2:
        raise ValueError("the pointed relation rule is set up for two points")
    arrows = []
    for i, row in enumerate(table.dims1):
        for j, count in enumerate(row):
            base = f"s{i + 1}{j + 1}"
            if count == 1:
                arrows.append(Arrow(base, source=j + 1, target=i + 1))
            else:
                for k in range(count):
                    arrows.append(
                        Arrow(f"{base}_{k + 1}", source=j + 1, target=i + 1)
                    )
    relations = _pointed_relations(tuple(arrows))
    return PointedAlgebra(
        points=("e1", "e2"),
        arrows=tuple(arrows),
        relations=relations,
        arrow_counts=table.dims1,
    )


def _pointed_relations(arrows: tuple[Arrow, ...]) -> tuple[Relation, ...]:
    out: list[Relation] = []
    crossing = sorted((a for a in arrows if a.source != a.target),
                      key=lambda a: a.name)
    if crossing:
        display = " = ".join(f"{a.name}^2" for a in crossing) + " = 0"
        eqs = tuple(((a.name, a.name), None) for a in crossing)
        out.append(Relation(display, eqs))
    out.append(Relation("e1^2 = e1", ((("e1", "e1"), ("e1",)),)))
    for a in sorted(arrows, key=lambda x: x.name):
        if a.target == 1:
            out.append(Relation(
                f"e1*{a.name} = {a.name}",
                ((("e1", a.name), (a.name,)),),
            ))
        if a.source == 1:
            out.append(Relation(
                f"{a.name}*e1 = {a.name}",
                (((a.name, "e1"), (a.name,)),),
            ))
    for a in sorted(arrows, key=lambda x: x.name):
        if a.source == 2:
            out.append(Relation(
                f"{a.name}*e1 = 0",
                (((a.name, "e1"), None),),
            ))
        if a.target == 2:
            out.append(Relation(
                f"e1*{a.name} = 0",
                ((("e1", a.name), None),),
            ))
    return tuple(out)


def hull_trunc_dim(hull: PointedAlgebra, order: int) -> int:
    """Dimension of the hull modulo the order-th power of the arrow ideal."""
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    comp = hull.component_dims(order)
    return sum(sum(row) for row in comp)
