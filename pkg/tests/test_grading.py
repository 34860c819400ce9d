import pytest
from hypothesis import given, settings, strategies as st

from agraded import counterexample as cx
from agraded.exponents import InputError, MonomialIdeal
from agraded.grading import (
    GradingMap,
    agraded_verify,
    enumerate_agraded,
    fiber_enumerate,
    is_pointed,
    quotient_group,
    triangulation,
)
from agraded.standard_pairs import compute_standard_pairs, layer
from oracles import naive_agraded_count, naive_fiber

CUBIC = GradingMap.from_columns([(1, 0), (1, 1), (1, 2)])


@pytest.fixture(scope="module")
def example():
    ideal, A = cx.build()
    return ideal, A, compute_standard_pairs(ideal)


def test_columns_of_counterexample(example):
    _, A, _ = example
    assert A.apply(cx.mono(cx.e(0))) == (2, 0, 0)
    assert A.apply(cx.mono(cx.k(6))) == (3, 3, 3)
    assert A.apply(cx.mono(cx.f(1))) == (0, 1, 0)
    assert A.apply(cx.mono(cx.g(2))) == (1, 1, 2)


def test_pointed_examples(example):
    _, A, _ = example
    cert = is_pointed(A)
    assert cert.pointed and cert.validate(A)
    from agraded.grading import Pointedness
    assert Pointedness(True, (1, 1, 1)).validate(A)

    bad = GradingMap.from_rows([[1, -1]])
    cert = is_pointed(bad)
    assert not cert.pointed and cert.vector == (1, 1) and cert.validate(bad)

    ident = GradingMap.from_columns([(1, 0), (0, 1)])
    assert is_pointed(ident).pointed


@settings(max_examples=150)
@given(st.integers(1, 3).flatmap(lambda d: st.lists(
    st.tuples(*[st.integers(-3, 3)] * d), min_size=1, max_size=5)))
def test_pointedness_certificates_validate(columns):
    A = GradingMap.from_columns(columns)
    assert is_pointed(A).validate(A)


def test_fiber_examples(example):
    _, A, _ = example
    assert fiber_enumerate(GradingMap.from_rows([[1, 1]]), (2,)) == [(0, 2), (1, 1), (2, 0)]
    assert fiber_enumerate(A, (1, 1, 1)) == [cx.mono(cx.f(0), cx.f(1), cx.f(2))]
    fiber = fiber_enumerate(A, (3, 2, 2))
    assert cx.mono(cx.k(0)) in fiber
    assert cx.mono(cx.f(0), cx.f(1), cx.f(2), cx.g(0)) in fiber
    for a in fiber:
        assert A.apply(a) == (3, 2, 2)


def test_fiber_requires_pointed():
    with pytest.raises(InputError):
        fiber_enumerate(GradingMap.from_rows([[1, -1]]), (0,))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 2).flatmap(lambda d: st.tuples(
    st.lists(st.tuples(*[st.integers(0, 2)] * d).filter(any), min_size=1, max_size=4),
    st.tuples(*[st.integers(0, 4)] * d))))
def test_fiber_completeness(data):
    columns, q = data
    A = GradingMap.from_columns(columns)
    assert fiber_enumerate(A, q) == naive_fiber(columns, q, max(q))


def test_agraded_examples():
    A1 = GradingMap.from_rows([[1]])
    report = agraded_verify(MonomialIdeal(1, ((1,),)), A1, (3,))
    assert not report.ok and 1 in {q[0] for q in report.offending}
    assert agraded_verify(MonomialIdeal(3, ((0, 2, 0),)), CUBIC, (6, 6)).ok
    assert agraded_verify(MonomialIdeal(3, ((1, 0, 1),)), CUBIC, (6, 6)).ok
    assert not agraded_verify(MonomialIdeal(3, ((1, 1, 0),)), CUBIC, (6, 6)).ok


def test_agraded_counterexample(example):
    ideal, A, _ = example
    report = agraded_verify(ideal, A, (6, 6, 6))
    assert report.ok and report.degrees_checked == 343
    assert len(report.standard) == 343
    assert report.standard[(1, 1, 1)] == cx.mono(cx.f(0), cx.f(1), cx.f(2))
    assert report.standard[(2, 3, 2)] == cx.mono(cx.k(1))


def test_agraded_rejects_mismatch():
    with pytest.raises(InputError):
        agraded_verify(MonomialIdeal(2), CUBIC, (2, 2))


def test_quotient_examples(example):
    ideal, A, basis = example
    es = frozenset(cx.e(i) for i in range(3))
    quot = quotient_group(A, es)
    assert quot.invariant_factors == (2, 2, 2) and quot.rank == 0 and quot.order == 8
    residues = [quot.residue(A.apply(r)) for r in layer(basis, es).roots]
    assert sorted(residues) == sorted(quot.elements())

    full = quotient_group(CUBIC, {0, 1})
    assert full.invariant_factors == () and full.rank == 0 and full.order == 1
    with pytest.raises(InputError):
        quot.residue((1, 0))


def test_quotient_outside_lattice():
    A = GradingMap.from_rows([[2, 4]])
    with pytest.raises(InputError):
        quotient_group(A, {0}).residue((1,))
    q = quotient_group(A, {1})
    assert q.invariant_factors == (2,)
    assert q.residue((2,)) != q.residue((4,))


def test_quotient_free_part():
    q = quotient_group(CUBIC, {0})
    assert q.rank == 1 and q.order is None


def test_triangulation_counterexample(example):
    _, A, basis = example
    report = triangulation(basis, A)
    assert report.ok
    assert [c.face for c in report.cells] == [frozenset(cx.e(i) for i in range(3))]
    assert sorted(report.cells[0].rays) == [(0, 0, 2), (0, 2, 0), (2, 0, 0)]


def test_triangulation_small():
    A = GradingMap.from_rows([[1, 1]])
    report = triangulation(compute_standard_pairs(MonomialIdeal(2, ((0, 1),))), A)
    assert report.ok and [c.rays for c in report.cells] == [((1,),)]

    single = triangulation(compute_standard_pairs(MonomialIdeal(3, ((0, 2, 0),))), CUBIC)
    assert single.ok and [c.face for c in single.cells] == [frozenset({0, 2})]

    two = triangulation(compute_standard_pairs(MonomialIdeal(3, ((1, 0, 1),))), CUBIC)
    assert two.ok
    faces = sorted(sorted(c.face) for c in two.cells)
    assert faces == [[0, 1], [1, 2]]
    shared = set(two.cells[0].rays) & set(two.cells[1].rays)
    assert shared == {(1, 1)}


def test_triangulation_flags_bad_cells():
    # (xy) on the twisted cubic is not A-graded: its cells {x,z} and {y,z}
    # overlap.
    report = triangulation(compute_standard_pairs(MonomialIdeal(3, ((1, 1, 0),))), CUBIC)
    assert not report.ok


def test_enumerate_examples():
    A = GradingMap.from_rows([[1, 1]])
    cands = enumerate_agraded(A, 3)
    assert sorted(c.ideal.generators for c in cands) == [((0, 1),), ((1, 0),)]
    assert len(cands) == naive_agraded_count((1, 1), 3)

    ident = GradingMap.from_columns([(1, 0), (0, 1)])
    cands = enumerate_agraded(ident, 4)
    assert len(cands) == 1 and cands[0].ideal.generators == ()

    A = GradingMap.from_rows([[1, 2, 3]])
    assert is_pointed(A).vector == (1,)
    assert len(enumerate_agraded(A, 8)) == naive_agraded_count((1, 2, 3), 8)


def test_enumerated_candidates_are_agraded_within_bound():
    A = GradingMap.from_rows([[1, 2, 3]])
    for cand in enumerate_agraded(A, 6):
        assert agraded_verify(cand.ideal, A, (6,)).ok
