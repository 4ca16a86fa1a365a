"""Combinatorial polytopes: incidence data, illumination, stacking, families."""

import itertools

import pytest

from galepoly.errors import (
    BadParametersError,
    NotAFacetError,
    NotASimplexFacetError,
    TooLargeForBruteForceError,
    UnknownVertexError,
)
from galepoly.polytope import (
    IncidencePolytope,
    crosspolytope,
    cyclic_polytope,
    gamma,
    illumination_report,
    inner_diagonal_matching,
    inner_diagonals,
    is_edge,
    missing_edges,
    simplex,
    stack_simplex_facet,
)

SQUARE = IncidencePolytope(
    d=2,
    vertices=("1", "2", "3", "4"),
    facets=(("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")),
)

PYRAMID = IncidencePolytope(
    d=3,
    vertices=("a", "b", "c", "d", "e"),
    facets=(
        ("a", "b", "c", "d"),
        ("a", "b", "e"),
        ("b", "c", "e"),
        ("c", "d", "e"),
        ("d", "a", "e"),
    ),
)


def test_validation_rejects_malformed_incidence_data():
    with pytest.raises(BadParametersError):
        IncidencePolytope(d=0, vertices=("a",), facets=(("a",),))
    with pytest.raises(BadParametersError):
        IncidencePolytope(d=1, vertices=("a", "a"), facets=(("a",),))
    with pytest.raises(UnknownVertexError):
        IncidencePolytope(d=1, vertices=("a", "b"), facets=(("c",),))
    with pytest.raises(BadParametersError):
        IncidencePolytope(d=1, vertices=("a", "b"), facets=(("a", "b"),))
    with pytest.raises(BadParametersError):
        IncidencePolytope(
            d=2,
            vertices=("a", "b", "c"),
            facets=(("a", "b"), ("b",), ("c", "a")),
        )
    with pytest.raises(BadParametersError):
        IncidencePolytope(d=2, vertices=("a", "b", "c"), facets=(("a", "b"),))


def test_facets_are_canonicalized():
    p = IncidencePolytope(
        d=2,
        vertices=("x", "y", "z", "w"),
        facets=(("w", "z"), ("y", "x"), ("y", "z"), ("x", "w")),
    )
    assert p.facets == (("x", "y"), ("x", "w"), ("y", "z"), ("z", "w"))


def test_accessors():
    assert SQUARE.f0 == 4
    assert SQUARE.vertex_index("3") == 2
    with pytest.raises(UnknownVertexError):
        SQUARE.vertex_index("9")
    assert SQUARE.facets_containing("1") == (("1", "2"), ("1", "4"))
    assert SQUARE.is_simplicial()
    assert not PYRAMID.is_simplicial()


def test_edges_of_the_square():
    assert is_edge(SQUARE, "1", "2")
    assert not is_edge(SQUARE, "1", "3")
    with pytest.raises(BadParametersError):
        is_edge(SQUARE, "1", "1")
    assert inner_diagonals(SQUARE) == (("1", "3"), ("2", "4"))
    assert missing_edges(SQUARE) == (("1", "3"), ("2", "4"))


def test_pyramid_base_diagonals_are_not_inner():
    # the base diagonals a-c and b-d lie on the base facet, so the pyramid
    # has missing edges but no inner diagonal at all
    report = illumination_report(PYRAMID)
    assert not report.illuminated
    assert not report.unneighborly
    assert all(p is None for _, p in report.diagonal_partner)
    edge_partners = dict(report.missing_edge_partner)
    assert edge_partners["a"] == "c" and edge_partners["b"] == "d"
    assert edge_partners["e"] is None
    assert inner_diagonals(PYRAMID) == ()
    assert missing_edges(PYRAMID) == (("a", "c"), ("b", "d"))


def test_simplices_have_no_missing_edges():
    # d = 1 is the degenerate segment whose endpoints count as a diagonal,
    # so the non-illumination claim starts at d = 2
    for d in range(2, 6):
        s = simplex(d)
        assert s.f0 == d + 1
        assert len(s.facets) == d + 1
        assert s.is_simplicial()
        assert missing_edges(s) == ()
        report = illumination_report(s)
        assert not report.illuminated
        assert not report.unneighborly


def test_crosspolytopes_are_illuminated_with_antipodal_diagonals():
    for d in range(1, 6):
        c = crosspolytope(d)
        assert c.f0 == 2 * d
        assert len(c.facets) == 2**d
        assert c.is_simplicial()
        report = illumination_report(c)
        assert report.illuminated
        if d >= 2:
            assert report.unneighborly
        diagonals = inner_diagonals(c)
        assert diagonals == tuple((f"+{i}", f"-{i}") for i in range(1, d + 1))


def test_crosspolytope_matching_is_perfect():
    for d in (2, 3, 4):
        match = inner_diagonal_matching(crosspolytope(d))
        assert match.perfect
        assert match.pairs == tuple((f"+{i}", f"-{i}") for i in range(1, d + 1))
    no_match = inner_diagonal_matching(simplex(3))
    assert not no_match.perfect
    assert no_match.pairs == ()


def test_cyclic_polytope_pinned_cases():
    pentagon = cyclic_polytope(2, 5)
    assert pentagon.facets == (
        ("1", "2"),
        ("1", "5"),
        ("2", "3"),
        ("3", "4"),
        ("4", "5"),
    )
    assert cyclic_polytope(3, 4).facets == simplex(3).facets
    c46 = cyclic_polytope(4, 6)
    assert c46.f0 == 6
    assert len(c46.facets) == 9
    assert c46.is_simplicial()
    # neighborly: every pair of the 6 vertices is an edge in dimension 4
    assert missing_edges(c46) == ()


def test_cyclic_polytope_validation():
    with pytest.raises(BadParametersError):
        cyclic_polytope(2, 2)
    with pytest.raises(BadParametersError):
        cyclic_polytope(0, 5)


def test_cyclic_facets_obey_gale_evenness():
    n = 7
    poly = cyclic_polytope(4, n)
    index = {v: i for i, v in enumerate(poly.vertices)}
    for facet in poly.facets:
        chosen = {index[v] for v in facet}
        # collect maximal runs of consecutive chosen indices
        runs = []
        start = None
        for i in range(n + 1):
            if i < n and i in chosen:
                if start is None:
                    start = i
            elif start is not None:
                runs.append((start, i - 1))
                start = None
        for lo, hi in runs:
            if lo > 0 and hi < n - 1:
                assert (hi - lo + 1) % 2 == 0, f"odd interior run in {facet}"


def test_gamma_pinned_values():
    assert gamma(crosspolytope(3)).value == 1
    assert gamma(crosspolytope(4)).value == 1
    assert gamma(simplex(3)).value == 0
    report = gamma(crosspolytope(2))
    assert report.value == 1
    assert report.vertex is not None and len(report.witness) == 1


def test_gamma_respects_the_brute_force_cap():
    with pytest.raises(TooLargeForBruteForceError):
        gamma(crosspolytope(8), cap=10)


def test_stacking_a_crosspolytope_facet():
    c3 = crosspolytope(3)
    stacked = stack_simplex_facet(c3, ("+1", "+2", "+3"))
    assert stacked.f0 == 7
    assert len(stacked.facets) == 2**3 - 1 + 3
    assert stacked.vertices[-1] == "z0"
    # the apex replaces the stacked facet: three new simplex facets
    apex_facets = [f for f in stacked.facets if "z0" in f]
    assert len(apex_facets) == 3
    assert stacked.is_simplicial()
    report = illumination_report(stacked)
    assert report.illuminated
    partners = dict(report.diagonal_partner)
    assert partners["z0"] == "-1"


def test_stacking_validation():
    c3 = crosspolytope(3)
    with pytest.raises(UnknownVertexError):
        stack_simplex_facet(c3, ("+1", "+2", "nope"))
    with pytest.raises(NotAFacetError):
        stack_simplex_facet(c3, ("+1", "+2", "-1"))
    with pytest.raises(NotASimplexFacetError):
        stack_simplex_facet(PYRAMID, ("a", "b", "c", "d"))
    with pytest.raises(BadParametersError):
        stack_simplex_facet(c3, ("+1", "+2", "+3"), new_label="-1")


def test_stack_label_defaults_skip_used_names():
    c3 = crosspolytope(3)
    once = stack_simplex_facet(c3, ("+1", "+2", "+3"))
    twice = stack_simplex_facet(once, ("-1", "-2", "-3"))
    assert twice.vertices[-1] == "z1"
    named = stack_simplex_facet(c3, ("+1", "+2", "+3"), new_label="apex")
    assert named.vertices[-1] == "apex"


def test_illumination_implies_unneighborly_on_catalogue():
    catalogue = [crosspolytope(d) for d in range(2, 6)]
    catalogue += [cyclic_polytope(2, n) for n in range(4, 8)]
    catalogue += [simplex(d) for d in range(2, 6)]
    catalogue.append(PYRAMID)
    catalogue.append(stack_simplex_facet(crosspolytope(3), ("+1", "+2", "+3")))
    for poly in catalogue:
        report = illumination_report(poly)
        if report.illuminated:
            assert report.unneighborly
        # diagonals are always missing edges
        assert set(inner_diagonals(poly)) <= set(missing_edges(poly))
