"""Presented modules, hom search, and isomorphism certificates."""

import random
from fractions import Fraction

import pytest

from weyldeform import (
    CyclicModule,
    IsoWitness,
    PresentedModule,
    WeylElement,
    WeylLinearSystem,
    as_presented,
    block_decompose,
    compose_iso,
    cyclic_form,
    cyclic_identify,
    divide_left,
    hom_search,
    iso_witness,
    parse_weyl,
)
from weyldeform.modules import (
    TruncatedSpan,
    image_witness,
    module_image_span,
    monomial_count,
    truncated_monomials,
)

from conftest import rand_weyl

t = WeylElement.t()
d = WeylElement.d()
one = WeylElement.one()


def test_truncated_monomial_counts():
    assert truncated_monomials(0) == [(0, 0)]
    assert len(truncated_monomials(1)) == 3
    assert monomial_count(12) == 91
    for n in range(7):
        assert len(truncated_monomials(n)) == monomial_count(n)
        assert all(i + j <= n for i, j in truncated_monomials(n))


def test_cyclic_module_normalizes_monic():
    m = CyclicModule(t * d * 2 - one)
    assert m.p == t * d - one * Fraction(1, 2)
    assert m.n == 1
    with pytest.raises(ValueError):
        CyclicModule(WeylElement.zero())


def test_presented_module_accepts_strings():
    m = PresentedModule((("d", "-1"), ("0", "t")))
    assert m.n == 2
    assert m.delta[0][1] == -one
    assert as_presented(m) is m
    assert as_presented(CyclicModule("d")).delta == ((d,),)


def test_block_decompose():
    diag = PresentedModule((("d", "0"), ("0", "t")))
    blocks = block_decompose(diag)
    assert [idx for idx, _ in blocks] == [(0,), (1,)]
    assert [b.delta for _, b in blocks] == [((d,),), ((t,),)]

    coupled = PresentedModule((("d", "-1"), ("-1", "t")))
    assert len(block_decompose(coupled)) == 1


def test_truncated_span_membership_window():
    span = TruncatedSpan([(d,), (t,)], 1, 2)
    assert span.dim == 2
    assert span.contains((t * 2 - d,))
    assert not span.contains((one,))
    with pytest.raises(ValueError):
        span.contains((t ** 3,))


def test_divide_left_examples():
    q = t * d - one
    r = (t * t + d) * q
    assert divide_left(r, q) == t * t + d
    assert divide_left(t, d) is None
    assert divide_left(WeylElement.zero(), q) == WeylElement.zero()
    with pytest.raises(ValueError):
        divide_left(t, WeylElement.zero())


def test_divide_left_fuzz():
    rng = random.Random(717)
    for _ in range(60):
        q = rand_weyl(rng, max_deg=2)
        if q.is_zero():
            continue
        c = rand_weyl(rng, max_deg=2)
        assert divide_left(c * q, q) == c


def test_hom_endomorphisms_of_m1():
    basis = hom_search(CyclicModule("d"), CyclicModule("d"), 6)
    assert basis.dims == (1,) * 7
    assert basis.stabilized_at() == 0
    assert list(basis.basis) == [one]


def test_hom_m1_to_m2_vanishes():
    basis = hom_search(CyclicModule("d"), CyclicModule("t"), 8)
    assert basis.dim == 0
    assert basis.dims == (0,) * 9
    assert basis.basis == ()


def test_hom_shift_witness():
    # r = t gives a map D/D(td - 1) -> D/Dd since (td - 1) t = t^2 d
    basis = hom_search(CyclicModule(t * d - one), CyclicModule("d"), 6)
    assert basis.dim >= 1
    assert any(r == t for r in basis.basis)
    p = t * d - one
    for r in basis.basis:
        assert divide_left(p * r, d) is not None


def test_hom_table_of_the_pair():
    mods = [CyclicModule("d"), CyclicModule("t")]
    dims = [
        [hom_search(mods[j], mods[i], 8).dim for j in range(2)]
        for i in range(2)
    ]
    assert dims == [[1, 0], [0, 1]]


def test_iso_identity():
    m = CyclicModule(t * d - one)
    w = iso_witness(m, m, 6)
    assert w is not None
    assert w.verify()
    assert w.r == ((one,),)


def test_iso_half_integer_shift():
    w = iso_witness(CyclicModule("t*d - 1/2"), CyclicModule("t*d - 3/2"), 8)
    assert w is not None
    assert w.verify()
    assert w.r == ((d,),)
    assert w.s == ((t * Fraction(2, 3),),)
    back = w.reversed()
    assert back.verify()


def test_iso_rejects_m1_m2():
    assert iso_witness(CyclicModule("d"), CyclicModule("t"), 8) is None


def test_iso_integer_wall():
    # the unit shift is blocked exactly between t*d + 1 and t*d
    a = CyclicModule(t * d + one)
    b = CyclicModule(t * d)
    assert iso_witness(a, b, 8) is None
    assert iso_witness(b, a, 8) is None


def test_iso_unit_shift_exists_off_wall():
    w = iso_witness(CyclicModule(t * d), CyclicModule(t * d - one), 8)
    assert w is not None and w.verify()
    w2 = iso_witness(CyclicModule(t * d - one), CyclicModule(t * d - one * 2), 8)
    assert w2 is not None and w2.verify()


def test_compose_iso_checks_endpoints():
    w1 = iso_witness(CyclicModule("t*d - 1/2"), CyclicModule("t*d - 3/2"), 8)
    w2 = iso_witness(CyclicModule("t*d - 3/2"), CyclicModule("t*d - 5/2"), 8)
    comp = compose_iso(w1, w2)
    assert comp.verify()
    assert as_presented(comp.source).delta == as_presented(w1.source).delta
    with pytest.raises(ValueError):
        compose_iso(w2, w1)


def test_cyclic_identify_block_diagonal_is_none():
    m = PresentedModule((("d", "0"), ("0", "t")))
    assert cyclic_identify(m) is None


def test_cyclic_identify_upper_triangular():
    m = PresentedModule((("d", "-1"), ("0", "t")))
    cyc = cyclic_identify(m)
    assert cyc is not None
    assert cyc.p == t * d


def test_cyclic_identify_requires_presented():
    with pytest.raises(TypeError):
        cyclic_identify(CyclicModule("d"))


def test_cyclic_form_returns_verified_witness():
    m = PresentedModule((("d", "-2"), ("-1", "t")))
    found = cyclic_form(m, 8)
    assert found is not None
    cyc, witness = found
    assert witness.verify()
    assert as_presented(witness.source).delta == ((cyc.p,),)
    assert as_presented(witness.target).delta == m.delta


def test_image_span_and_witness():
    m = PresentedModule((("d", "-1"), ("-1", "t")))
    span = module_image_span(m, 4)
    p = t * d - one
    vec = (p, WeylElement.zero())
    assert span.contains(vec)
    coeffs = image_witness(m, vec, 4)
    assert coeffs is not None
    for k in range(2):
        got = sum(
            (coeffs[i] * m.delta[i][k] for i in range(2)), WeylElement.zero()
        )
        assert got == vec[k]


def test_weyl_linear_system_solve_and_kernel():
    # solve the commutator equation d x - x d = t inside the algebra
    sys = WeylLinearSystem()
    sys.unknown("x", 2)
    sys.equate([(d, "x", one, 1), (one, "x", d, -1)], rhs=t)
    sol = sys.solve()
    assert sol is not None
    assert d * sol["x"] - sol["x"] * d == t

    hom = WeylLinearSystem()
    hom.unknown("y", 0)
    hom.equate([(one, "y", one, 1)])
    kernel = hom.kernel()
    assert kernel == []

    bad = WeylLinearSystem()
    bad.unknown("z", 0)
    bad.equate([(one, "z", one, 1)], rhs=one)
    with pytest.raises(ValueError):
        bad.kernel()


def test_degree_bound_validation():
    with pytest.raises(ValueError):
        iso_witness(CyclicModule("d"), CyclicModule("d"), 17)
    with pytest.raises(ValueError):
        iso_witness(CyclicModule("d"), CyclicModule("d"), -1)


def test_iso_presented_to_presented():
    a = PresentedModule((("d", "-1"), ("-1", "t")))
    b = PresentedModule((("d", "-1/2"), ("-2", "t")))
    w = iso_witness(a, b, 8)
    assert w is not None
    assert w.verify()
