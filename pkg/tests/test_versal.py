"""Specialization of the differential and certified identification."""

from fractions import Fraction

import pytest

from weyldeform import (
    CommutativePoint,
    CyclicModule,
    PresentedModule,
    RelationViolation,
    Representation,
    QMatrix,
    STANDARD_DIFFERENTIAL,
    VersalDifferential,
    WeylElement,
    as_presented,
    commutative_specialize,
    cross_certify,
    identify_specialization,
    representative,
    specialize,
)

t = WeylElement.t()
d = WeylElement.d()
one = WeylElement.one()


def test_standard_differential_validates():
    STANDARD_DIFFERENTIAL.validate()
    action = STANDARD_DIFFERENTIAL.action_on("e1")
    assert action == {"e1": d, "s21": -one}
    action = STANDARD_DIFFERENTIAL.action_on("e2")
    assert action == {"e2": t, "s12": -one}


def test_broken_differential_rejected():
    wrong = VersalDifferential(terms=(
        (1, d, "e1"),
        (-1, one, "s12"),
        (1, one, "s21"),
        (1, t, "e2"),
    ))
    with pytest.raises(ValueError):
        wrong.validate()


def test_specialize_one_dimensional():
    assert specialize(representative("T_1_1")).delta == ((d,),)
    assert specialize(representative("T_1_2")).delta == ((t,),)


def test_specialize_coupled_family():
    pres = specialize(representative("T_2_6", {"a": Fraction(3)}))
    assert pres.delta == ((d, -one * 3), (-one, t))
    pres = specialize(representative("T_2_6", {"a": Fraction(-1, 2)}))
    assert pres.delta == ((d, one * Fraction(1, 2)), (-one, t))


def test_specialize_respects_direct_sums():
    summed = representative("T_1_1").direct_sum(representative("T_1_2"))
    pres = specialize(summed)
    assert pres.delta == ((d, WeylElement.zero()), (WeylElement.zero(), t))

    pieces = specialize(representative("T_1_1")), specialize(representative("T_1_2"))
    assert pres.delta[0][0] == pieces[0].delta[0][0]
    assert pres.delta[1][1] == pieces[1].delta[0][0]


def test_specialize_validates_input():
    bad = Representation(QMatrix([[1]]), QMatrix([[1]]), QMatrix([[0]]))
    with pytest.raises(RelationViolation):
        specialize(bad)


def test_identify_basic_modules():
    report = identify_specialization(representative("T_1_1"))
    assert report.identified
    assert report.alias == "M1"
    assert report.target == CyclicModule("d")
    assert report.witness.verify()

    report = identify_specialization(representative("T_1_2"))
    assert report.alias == "M2"
    assert report.target == CyclicModule("t")


def test_identify_minus_one_lands_on_dt():
    report = identify_specialization(representative("T_2_6", {"a": Fraction(-1)}))
    assert report.identified
    assert report.target_kind == "cyclic"
    # d*t in normal form is t*d + 1
    assert report.target.p == t * d + one
    assert report.witness.verify()


def test_identify_half_integer_keeps_parameter():
    report = identify_specialization(representative("T_2_6", {"a": Fraction(1, 2)}))
    assert report.identified
    assert report.shift == 0
    assert report.target.p == t * d - one * Fraction(1, 2)
    assert report.witness.verify()


def test_identify_integer_points_stay_on_shift_family():
    # the exact computation identifies a = 1 with t*d - 1 itself
    report = identify_specialization(representative("T_2_6", {"a": Fraction(1)}))
    assert report.identified
    assert report.alias is None
    assert report.shift == 0
    assert report.target.p == t * d - one

    report = identify_specialization(representative("T_2_6", {"a": Fraction(-2)}))
    assert report.identified
    # a = -2 reaches d*t = t*d + 1 through an allowed unit shift
    assert report.target.p == t * d + one


def test_identify_direct_sum_blockwise():
    report = identify_specialization(representative("T_3_7", {"b": Fraction(2)}))
    assert report.identified
    assert report.target_kind == "direct_sum"
    sub_targets = [s.target.p for s in report.target]
    assert sub_targets == [t * d - one * 2, t]
    assert [s.alias for s in report.target] == [None, "M2"]


def test_report_messages():
    report = identify_specialization(representative("T_1_1"))
    assert "M1" in report.message
    report = identify_specialization(representative("T_2_6", {"a": Fraction(1, 2)}))
    assert "t*d - 1/2" in report.message


def test_commutative_origin_splits():
    report = commutative_specialize((0, 0))
    assert report.identified
    assert report.target_kind == "direct_sum"
    assert [s.alias for s in report.target] == ["M1", "M2"]
    assert report.point == CommutativePoint(0, 0)


def test_commutative_axis_points():
    report = commutative_specialize((1, 0))
    assert report.identified
    assert report.target.p == t * d + one

    report = commutative_specialize((0, 1))
    assert report.identified
    assert report.target.p == t * d


def test_commutative_interior_points():
    report = commutative_specialize((1, 1))
    assert report.identified
    assert report.target.p == t * d - one
    report = commutative_specialize((2, 1))
    assert report.identified
    assert report.target.p == t * d - one * 2
    assert report.presentation.delta == ((d, -one), (-one * 2, t))


def test_commutative_accepts_point_objects():
    report = commutative_specialize(CommutativePoint(Fraction(1, 2), 1))
    assert report.identified
    assert report.target.p == t * d - one * Fraction(1, 2)


def test_cross_certification():
    w = cross_certify(representative("T_2_6", {"a": Fraction(1)}), (1, 1))
    assert w is not None
    assert w.verify()
    direct = specialize(representative("T_2_6", {"a": Fraction(1)}))
    assert as_presented(w.source).delta == direct.delta

    w = cross_certify(representative("T_2_6", {"a": Fraction(2)}), (2, 1))
    assert w is not None
    assert w.verify()


def test_cross_certification_mismatch_is_none():
    assert cross_certify(representative("T_1_1"), (1, 1)) is None


def test_unidentified_reports_bounded_message():
    # degree zero leaves no room for the coupled generator, an honest miss
    report = commutative_specialize((1, 1), max_degree=0)
    assert not report.identified
    assert report.message == "no certified match up to degree 0"
    assert report.witness is None and report.target is None
    # one more degree is already enough
    assert commutative_specialize((1, 1), max_degree=1).identified
