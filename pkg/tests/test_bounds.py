from fractions import Fraction
from math import comb

import pytest

import shellbound as sb

from corpus import shelled_spheres_d_le_3

SQUARE_ORDER = ("e12", "e23", "e34", "e41")


def ball2() -> sb.FaceLattice:
    return sb.from_facets([[1, 2, 3], [2, 3, 4]])


# -- coefficients --------------------------------------------------------


def test_rho_values():
    assert sb.rho(4, 1).value == 1
    assert sb.rho(3, 1).value == Fraction(3, 2)
    assert sb.rho(5, 2).value == 2
    assert sb.rho(3, 0).value == Fraction(1, 2)
    for d in range(0, 9):
        assert sb.rho(d + 1, d).value == 1


def test_rho_range():
    with pytest.raises(sb.RangeError):
        sb.rho(4, 4)
    with pytest.raises(sb.RangeError):
        sb.rho(4, -1)
    with pytest.raises(sb.RangeError):
        sb.rho(0, 0)


def test_rho_closed_form():
    for d in range(1, 13):
        hi, lo = (d + 2) // 2, (d + 1) // 2
        for k in range(d + 1):
            got = sb.rho(d + 1, k).value
            assert got == Fraction(comb(hi, d - k) + comb(lo, d - k), 2)
            assert got.denominator in (1, 2)


def test_binomial_split_lb_examples():
    assert sb.binomial_split_lb(3, 1, 3, 1)
    assert sb.binomial_split_lb(2, 2, 3, 2)
    assert sb.binomial_split_lb(4, 0, 3, 2)
    assert sb.binomial_split_lb(7, 3, 5, 3)


def test_binomial_split_lb_holds_for_all_small_splits():
    for d in range(1, 13):
        hi = (d + 2) // 2
        for total in range(d + 1, 2 * (d + 1) + 1):
            for a in range(total + 1):
                for m in range(1, hi + 1):
                    assert sb.binomial_split_lb(a, total - a, d, m), (a, total - a, d, m)


def test_binomial_split_lb_preconditions():
    with pytest.raises(sb.PreconditionViolated):
        sb.binomial_split_lb(-1, 5, 3, 1)
    with pytest.raises(sb.PreconditionViolated):
        sb.binomial_split_lb(1, 1, 3, 1)
    with pytest.raises(sb.PreconditionViolated):
        sb.binomial_split_lb(3, 1, 3, 0)
    with pytest.raises(sb.PreconditionViolated):
        sb.binomial_split_lb(3, 1, 3, 3)


# -- split_complexes -----------------------------------------------------


def test_split_complexes_square():
    g = sb.ngon(4)
    pair = sb.split_complexes(g, SQUARE_ORDER, 2)
    assert pair.begin_interior.members == {"e12", "e23", "v2"}
    assert pair.end_interior.members == {"e34", "e41", "v4"}
    assert "v1" in pair.begin and "v1" in pair.end


def test_split_complexes_extreme_positions():
    g = sb.ngon(4)
    whole = sb.split_complexes(g, SQUARE_ORDER, 0)
    assert whole.begin.mask == 0
    assert len(whole.begin_interior) == 0
    assert whole.end_interior.members == set(g.face_ids())
    full = sb.split_complexes(g, SQUARE_ORDER, 4)
    assert full.begin_interior.members == set(g.face_ids())
    assert len(full.end_interior) == 0


def test_split_complexes_octahedron_first_cut():
    oct_ = sb.cross_polytope(2)
    order = sb.find_shelling(oct_)
    pair = sb.split_complexes(oct_, order, 1)
    fv = sb.f_vector(pair.begin_interior)
    assert (fv[0], fv[1], fv[2]) == (0, 0, 1)


def test_split_interiors_partition_the_sphere():
    for name, L, order in shelled_spheres_d_le_3():
        if len(L.facets()) > 6:
            continue
        for j in range(len(order) + 1):
            pair = sb.split_complexes(L, order, j)
            shared = pair.begin.mask & pair.end.mask & L._real_mask
            pieces = (pair.begin_interior.mask, pair.end_interior.mask, shared)
            assert sum(p.bit_count() for p in pieces) == L._real_mask.bit_count(), (name, j)
            assert pieces[0] | pieces[1] | pieces[2] == L._real_mask, (name, j)


def test_split_complexes_rejects_bad_input():
    g = sb.ngon(4)
    with pytest.raises(sb.InvalidSplit):
        sb.split_complexes(g, SQUARE_ORDER, 5)
    with pytest.raises(sb.InvalidSplit):
        sb.split_complexes(g, SQUARE_ORDER, -1)
    with pytest.raises(sb.NotAShelling):
        sb.split_complexes(g, ("e12", "e34", "e23", "e41"), 2)
    order = sb.find_shelling(ball2())
    with pytest.raises(sb.PreconditionViolated):
        sb.split_complexes(ball2(), order.facets, 1)


# -- check_split_count ---------------------------------------------------


def test_check_split_count_square():
    g = sb.ngon(4)
    res = sb.check_split_count(g, SQUARE_ORDER, 2, 1)
    assert (res.lhs, res.rhs, res.fk_begin, res.fk_end) == (4, 3, 2, 2)
    assert res.ok
    res0 = sb.check_split_count(g, SQUARE_ORDER, 0, 1)
    assert (res0.lhs, res0.rhs) == (4, 3)
    resk0 = sb.check_split_count(g, SQUARE_ORDER, 2, 0)
    assert (resk0.lhs, resk0.rhs) == (2, 1)


def test_check_split_count_octahedron():
    oct_ = sb.cross_polytope(2)
    order = sb.find_shelling(oct_)
    res = sb.check_split_count(oct_, order, 4, 1)
    assert res.rhs == 2
    assert res.ok


def test_check_split_count_whole_corpus():
    for name, L, order in shelled_spheres_d_le_3():
        if len(L.facets()) > 8:
            continue
        delta = L.dim
        for j in range(len(order) + 1):
            for k in range(delta // 2, delta + 1):
                assert sb.check_split_count(L, order, j, k).ok, (name, j, k)


def test_check_split_count_range_errors():
    oct_ = sb.cross_polytope(2)
    order = sb.find_shelling(oct_)
    with pytest.raises(sb.RangeError):
        sb.check_split_count(oct_, order, 2, 0)
    with pytest.raises(sb.RangeError):
        sb.check_split_count(oct_, order, 2, 3)
    with pytest.raises(sb.RangeError):
        sb.check_split_count(oct_, order, 9, 1)


# -- witness pairs -------------------------------------------------------


def test_witness_square_positions():
    g = sb.ngon(4)
    w2 = sb.find_witness_pair(g, SQUARE_ORDER, 2)
    assert (w2.begin_face, w2.end_face) == ("v2", "e34")
    assert (w2.begin_dim, w2.end_dim) == (0, 1)
    assert w2.begin_in_interior and w2.end_in_interior
    w1 = sb.find_witness_pair(g, SQUARE_ORDER, 1)
    assert (w1.begin_face, w1.end_face) == ("e12", "v3")
    w3 = sb.find_witness_pair(g, SQUARE_ORDER, 3)
    assert (w3.begin_face, w3.end_face) == ("v3", "e41")


def test_witness_zero_sphere():
    L = sb.from_facets([[1], [2]])
    w = sb.find_witness_pair(L, ("1", "2"), 1)
    assert (w.begin_face, w.end_face) == ("1", "2")
    assert (w.begin_dim, w.end_dim) == (0, 0)


def test_witness_octahedron_first_cut():
    oct_ = sb.cross_polytope(2)
    order = sb.find_shelling(oct_)
    w = sb.find_witness_pair(oct_, order, 1)
    assert w.begin_face == order.facets[0]
    assert (w.begin_dim, w.end_dim) == (2, 0)


def test_witness_json_shape():
    g = sb.ngon(4)
    w = sb.find_witness_pair(g, SQUARE_ORDER, 2)
    assert w.to_json_dict() == {
        "C": "v2",
        "D": "e34",
        "dim_C": 0,
        "dim_D": 1,
        "split": 2,
        "C_in_interior": True,
        "D_in_interior": True,
    }


def test_witness_sweep_small_spheres():
    for name, L, order in shelled_spheres_d_le_3():
        if len(L.facets()) > 6:
            continue
        for j in range(1, len(order)):
            w = sb.find_witness_pair(L, order, j)
            assert w.begin_dim + w.end_dim <= L.dim, (name, j)


def test_witness_rejects_bad_input():
    g = sb.ngon(4)
    with pytest.raises(sb.InvalidSplit):
        sb.find_witness_pair(g, SQUARE_ORDER, 0)
    with pytest.raises(sb.InvalidSplit):
        sb.find_witness_pair(g, SQUARE_ORDER, 4)
    with pytest.raises(sb.NotAShelling) as exc:
        sb.find_witness_pair(g, ("e12", "e34", "e23", "e41"), 2)
    assert exc.value.failure.step == 2


# -- facet decomposition -------------------------------------------------


def test_facet_decomposition_two_triangle_ball():
    B = ball2()
    decomp = sb.facet_decomposition(B, ("123", "234"))
    first, second = decomp.splits
    assert first.facet == "123" and first.j == 1
    assert first.before.mask == 0
    assert sb.f_vector(first.after).proper == (3, 3)
    assert len(first.before_interior) == 0

    assert sb.f_vector(second.before).proper == (2, 1)
    assert second.before_interior.members == {"23"}
    assert sb.f_vector(second.after).proper == (3, 2)
    assert second.after_interior.members == {"24", "34", "4"}


def test_facet_decomposition_octahedron_ends():
    oct_ = sb.cross_polytope(2)
    order = sb.find_shelling(oct_)
    decomp = sb.facet_decomposition(oct_, order)
    first, last = decomp.splits[0], decomp.splits[-1]
    boundary_of_first = sb.sub_lattice(oct_, first.facet)
    assert sb.f_vector(first.after).proper == tuple(
        sb.f_vector(boundary_of_first).proper
    )
    assert last.after.mask == 0
    assert sb.f_vector(last.before).proper == (3, 3)


def test_facet_decomposition_rejects_bad_input():
    with pytest.raises(sb.RangeError):
        sb.facet_decomposition(sb.from_facets([[1], [2]]), ("1", "2"))
    with pytest.raises(sb.NotAShelling):
        sb.facet_decomposition(sb.ngon(4), ("e12", "e34", "e23", "e41"))


def test_facet_decomposition_interiors_are_disjoint_families():
    for L in (sb.cross_polytope(2), ball2(), sb.ngon(5)):
        order = sb.find_shelling(L)
        decomp = sb.facet_decomposition(L, order)
        bd = sb.boundary_complex(L).mask
        ridge_and_below = L._real_mask & ~L._rank_masks[L.dim + 1]
        after_union = 0
        before_union = 0
        for split in decomp.splits:
            after_union |= split.after_interior.mask
            before_union |= split.before_interior.mask
        # pairwise disjointness: the union is exactly as big as the parts
        assert before_union.bit_count() == sum(
            len(s.before_interior) for s in decomp.splits
        )
        assert after_union.bit_count() == sum(
            len(s.after_interior) for s in decomp.splits
        )
        assert before_union & bd == 0
        assert (before_union | after_union) & ~ridge_and_below == 0


# -- the main inequality -------------------------------------------------


def test_bound_octahedron_equality():
    oct_ = sb.cross_polytope(2)
    report = sb.verify_lower_bound(oct_, sb.find_shelling(oct_), 1)
    assert (report.lhs, report.rhs) == (12, 12)
    assert report.equality and report.expected_equality
    assert report.ok
    assert len(report.per_facet) == 8
    assert all(p.bound == 3 for p in report.per_facet)


def test_bound_cube_slack():
    cube = sb.hypercube_boundary(2)
    report = sb.verify_lower_bound(cube, sb.find_shelling(cube), 1)
    assert (report.lhs, report.rhs, report.slack) == (12, 9, 3)
    assert not report.equality and not report.expected_equality
    assert report.ok


def test_bound_ball_with_boundary_term():
    B = ball2()
    r1 = sb.verify_lower_bound(B, ("123", "234"), 1)
    assert (r1.lhs, r1.rhs) == (5, 5)
    assert r1.equality and r1.expected_equality and r1.ok
    r0 = sb.verify_lower_bound(B, ("123", "234"), 0)
    assert (r0.lhs, r0.rhs, r0.slack) == (4, 3, 1)
    assert not r0.equality and not r0.expected_equality and r0.ok


def test_bound_square_top_dimension():
    g = sb.ngon(4)
    r = sb.verify_lower_bound(g, SQUARE_ORDER, 1)
    assert (r.lhs, r.rhs) == (4, 4)
    assert r.equality and r.expected_equality and r.ok
    assert r.per_facet == ()
    r0 = sb.verify_lower_bound(g, SQUARE_ORDER, 0)
    assert r0.equality and r0.expected_equality and r0.ok


def test_bound_four_sphere_equality():
    S = sb.simplex_boundary(3)
    r = sb.verify_lower_bound(S, sb.find_shelling(S), 2)
    assert (r.lhs, r.rhs) == (10, 10)
    assert r.equality and r.expected_equality and r.ok


def test_bound_report_json_schema():
    oct_ = sb.cross_polytope(2)
    data = sb.verify_lower_bound(oct_, sb.find_shelling(oct_), 1).to_json_dict()
    assert sorted(data) == [
        "equality", "expected_equality", "k", "lhs", "per_facet",
        "rhs_den", "rhs_num", "slack_den", "slack_num",
    ]
    assert sorted(data["per_facet"][0]) == ["bound", "fk_int_C", "fk_int_D", "j"]
    assert (data["rhs_num"], data["rhs_den"]) == (12, 1)


def test_bound_interior_sum_ceiling():
    for name, L, order in shelled_spheres_d_le_3():
        if len(L.facets()) > 8:
            continue
        d = L.dim
        for k in range((d - 1) // 2, d + 1):
            rep = sb.verify_lower_bound(L, order, k)
            assert rep.ok, (name, k)
            f = sb.f_vector(L)
            assert rep.interior_sum <= 2 * f[k], (name, k)


def test_bound_rejects_bad_input():
    C46 = sb.cyclic_boundary(4, 6)
    order = sb.find_shelling(C46)
    with pytest.raises(sb.RangeError):
        sb.verify_lower_bound(C46, order, 0)
    with pytest.raises(sb.RangeError):
        sb.verify_lower_bound(C46, order, 4)
    with pytest.raises(sb.NotAShelling):
        sb.verify_lower_bound(sb.ngon(4), ("e12", "e34", "e23", "e41"), 1)


# -- simpliciality and identities ----------------------------------------


def test_is_simplicial():
    assert sb.is_simplicial(sb.cross_polytope(2))
    assert not sb.is_simplicial(sb.hypercube_boundary(2))
    assert sb.is_simplicial(sb.simplex_boundary(3))
    assert sb.is_simplicial(sb.ngon(7))
    with pytest.raises(sb.PreconditionViolated):
        sb.is_simplicial(
            sb.build_lattice(
                [("_bot", 0), ("_top", 4), ("v1", 1), ("v2", 1), ("v3", 1),
                 ("v4", 1), ("e12", 2), ("e13", 2), ("e23", 2), ("e34", 2), ("f", 3)],
                [("_bot", "v1"), ("_bot", "v2"), ("_bot", "v3"), ("_bot", "v4"),
                 ("v1", "e12"), ("v2", "e12"), ("v1", "e13"), ("v3", "e13"),
                 ("v2", "e23"), ("v3", "e23"), ("v3", "e34"), ("v4", "e34"),
                 ("e12", "f"), ("e13", "f"), ("e23", "f"), ("f", "_top")],
                2,
            )
        )


def test_simplicial_equality_identity():
    assert sb.simplicial_equality_identity(sb.cross_polytope(2))
    assert sb.simplicial_equality_identity(ball2())
    assert sb.simplicial_equality_identity(sb.simplex_boundary(3))
    with pytest.raises(sb.NotSimplicial):
        sb.simplicial_equality_identity(sb.hypercube_boundary(2))


def test_vandermonde_check():
    assert sb.vandermonde_check(3, 2)
    assert not sb.vandermonde_check(3, 1)
    assert sb.vandermonde_check(5, 4)
    assert sb.vandermonde_check(2, 1)
    for d in range(1, 13):
        for k in range(d + 1):
            assert sb.vandermonde_check(d, k) == (k >= d - 1), (d, k)
    with pytest.raises(sb.RangeError):
        sb.vandermonde_check(0, 0)
    with pytest.raises(sb.RangeError):
        sb.vandermonde_check(3, 4)


# -- corollaries ---------------------------------------------------------


def test_corollaries_octahedron():
    oct_ = sb.cross_polytope(2)
    r = sb.corollary_bounds(oct_, 1)
    assert r.dual_cl_shellable and r.cl_shellable
    assert r.facet_bound == 12 and r.facet_bound_ok
    assert r.vertex_bound == 9 and r.vertex_bound_ok
    assert r.barany_bound == 6 and r.barany_ok
    r0 = sb.corollary_bounds(oct_, 0)
    assert r0.facet_bound == 4 and r0.facet_bound_ok
    assert r0.vertex_bound == 6 and r0.vertex_bound_ok


def test_corollaries_cube():
    cube = sb.hypercube_boundary(2)
    r = sb.corollary_bounds(cube, 1)
    assert r.facet_bound == 9 and r.facet_bound_ok
    assert r.vertex_bound == 12 and r.vertex_bound_ok
    assert r.barany_bound == 6 and r.barany_ok


def test_corollaries_absent_when_hypothesis_fails():
    L = sb.from_facets([[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]])
    r = sb.corollary_bounds(L, 1)
    assert not r.dual_cl_shellable and not r.cl_shellable
    assert r.facet_bound is None and r.facet_bound_ok is None
    assert r.vertex_bound is None and r.vertex_bound_ok is None
    assert r.barany_bound is None and r.barany_ok is None
    data = r.to_json_dict()
    assert data["facet_bound"] is None and data["barany_bound"] is None


def test_corollaries_json_fractions():
    data = sb.corollary_bounds(sb.ngon(5), 0).to_json_dict()
    assert data["facet_bound"] == {"num": 5, "den": 1}
    assert data["vertex_bound"] == {"num": 5, "den": 1}


def test_corollaries_rejects_bad_input():
    with pytest.raises(sb.NotDiamond):
        sb.corollary_bounds(sb.from_facets([[1, 2], [2, 3]]), 0)
    with pytest.raises(sb.RangeError):
        sb.corollary_bounds(sb.ngon(4), 2)


def test_barany_check():
    assert sb.barany_check(sb.cross_polytope(2))
    assert sb.barany_check(sb.hypercube_boundary(2))
    assert sb.barany_check(sb.simplex_boundary(3))
    assert sb.barany_check(sb.cyclic_boundary(4, 7))
    with pytest.raises(sb.NotDiamond):
        sb.barany_check(sb.from_facets([[1, 2], [2, 3]]))
    with pytest.raises(sb.NotShellable):
        sb.barany_check(sb.from_facets([[1, 2], [2, 3], [1, 3], [4, 5], [5, 6], [4, 6]]))
