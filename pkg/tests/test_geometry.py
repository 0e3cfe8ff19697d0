import pytest
from hypothesis import given
from hypothesis import strategies as st

from heilbronn.geometry import (
    GridArrangement,
    GridPoint,
    PointSet,
    UnitPoint,
    collinear,
    lattice_points_half_open,
    min_area_triangle,
    normalize_area,
    twice_signed_area,
)
from heilbronn.montecarlo import sample_unit_square

from conftest import random_arrangement

coord = st.integers(min_value=-50, max_value=50)
point = st.tuples(coord, coord)


def shoelace_twice(p, q, r):
    # independent oracle: shoelace formula
    return p[0] * (q[1] - r[1]) + q[0] * (r[1] - p[1]) + r[0] * (p[1] - q[1])


class TestTwiceSignedArea:
    def test_unit_right_triangle(self):
        assert twice_signed_area((0, 0), (1, 0), (0, 1)) == 1

    def test_collinear_is_zero(self):
        assert twice_signed_area((0, 0), (2, 1), (4, 2)) == 0

    def test_hand_determinant(self):
        # 6*3 - 4*1 = 14, cross-checked by the shoelace oracle
        assert shoelace_twice((0, 0), (6, 4), (1, 3)) == 14
        assert twice_signed_area((0, 0), (6, 4), (1, 3)) == 14

    @given(point, point, point)
    def test_matches_shoelace_oracle(self, p, q, r):
        assert twice_signed_area(p, q, r) == shoelace_twice(p, q, r)

    @given(point, point, point)
    def test_antisymmetry_and_rotation(self, p, q, r):
        t = twice_signed_area(p, q, r)
        assert twice_signed_area(p, r, q) == -t
        assert twice_signed_area(q, r, p) == t
        assert twice_signed_area(r, p, q) == t

    @given(point, point, point, coord, coord)
    def test_translation_invariance(self, p, q, r, a, b):
        sh = lambda u: (u[0] + a, u[1] + b)
        assert twice_signed_area(sh(p), sh(q), sh(r)) == twice_signed_area(p, q, r)

    def test_rejects_mixed_mode(self):
        with pytest.raises(ValueError, match="mixed-mode"):
            twice_signed_area((0, 0), (1.0, 0.5), (0, 1))

    def test_float_mode(self):
        assert twice_signed_area((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)) == 1.0


class TestCollinear:
    def test_diagonal(self):
        assert collinear((0, 0), (1, 1), (2, 2))

    def test_independent_triangle(self):
        assert not collinear((0, 0), (1, 0), (0, 1))

    def test_exact_determinant_zero(self):
        assert collinear((0, 0), (3, 1), (6, 2))

    def test_continuous_tolerance(self):
        assert collinear((0.0, 0.0), (0.5, 0.5 + 1e-16), (1.0, 1.0))
        assert not collinear((0.0, 0.0), (0.5, 0.51), (1.0, 1.0))

    @given(point, point, point)
    def test_grid_equivalence(self, p, q, r):
        assert collinear(p, q, r) == (twice_signed_area(p, q, r) == 0)


class TestLatticePoints:
    def test_paper_segment(self):
        # (0,0)->(6,4): lattice points (0,0) and (3,2)
        assert lattice_points_half_open(GridPoint(0, 0), GridPoint(6, 4)) == 2

    def test_primitive_step(self):
        assert lattice_points_half_open(GridPoint(0, 0), GridPoint(1, 0)) == 1

    def test_gcd_oracle(self):
        from math import gcd

        assert lattice_points_half_open(GridPoint(0, 0), GridPoint(12, 18)) == 6
        assert gcd(12, 18) == 6

    def test_rejects_equal_points(self):
        with pytest.raises(ValueError):
            lattice_points_half_open(GridPoint(3, 3), GridPoint(3, 3))

    @given(point, point, point)
    def test_g_divides_every_form_value(self, p, q, r):
        # the linear form values over lattice points are multiples of g
        if p == q:
            return
        g = lattice_points_half_open(GridPoint(*p), GridPoint(*q))
        assert twice_signed_area(p, q, r) % g == 0


class TestNormalizeArea:
    def test_examples(self):
        assert normalize_area(1, 2) == 0.5
        assert normalize_area(1, 101) == 1 / 20000
        assert normalize_area(14, 8) == pytest.approx(1 / 7, abs=0)

    def test_rejects_small_K(self):
        with pytest.raises(ValueError):
            normalize_area(1, 1)


class TestMinAreaTriangle:
    def test_four_corners(self):
        ps = PointSet.from_coords([(0, 0), (1, 0), (0, 1), (1, 1)])
        rep = min_area_triangle(ps, mode="exhaustive")
        assert rep.area == 0.5
        assert rep.indices == (0, 1, 2)
        fast = min_area_triangle(ps, mode="fast")
        assert (fast.indices, fast.area) == (rep.indices, rep.area)

    def test_collinear_triple_gives_zero(self):
        ps = PointSet.from_coords([(0, 0), (0.25, 0.25), (0.5, 0.5), (0.9, 0.1)])
        assert min_area_triangle(ps).area == 0.0

    def test_seeded_32_points_match_exhaustive_oracle(self):
        ps = sample_unit_square(32, seed=7, stream_id=0)
        ex = min_area_triangle(ps, mode="exhaustive")
        fa = min_area_triangle(ps, mode="fast")
        assert fa.twice_area == ex.twice_area
        assert fa.indices == ex.indices

    @pytest.mark.parametrize("n", [3, 5, 9, 17, 33, 64])
    def test_fast_equals_exhaustive_continuous(self, n):
        ps = sample_unit_square(n, seed=n, stream_id=1)
        ex = min_area_triangle(ps, mode="exhaustive")
        fa = min_area_triangle(ps, mode="fast")
        assert (fa.i, fa.j, fa.k, fa.twice_area) == (ex.i, ex.j, ex.k, ex.twice_area)

    @pytest.mark.parametrize("K,n,seed", [(8, 6, 1), (64, 12, 2), (1 << 20, 24, 3)])
    def test_fast_equals_exhaustive_grid(self, K, n, seed):
        a = random_arrangement(K, n, seed)
        ex = min_area_triangle(a, mode="exhaustive")
        fa = min_area_triangle(a, mode="fast")
        assert (fa.i, fa.j, fa.k, fa.twice_area) == (ex.i, ex.j, ex.k, ex.twice_area)
        assert fa.area == fa.twice_area / (2 * (K - 1) ** 2)

    def test_tie_break_on_lattice(self):
        # every cell of a 3x3 grid: masses of equal-area and zero-area triples
        a = GridArrangement.from_points(3, [(x, y) for x in range(3) for y in range(3)])
        ex = min_area_triangle(a, mode="exhaustive")
        fa = min_area_triangle(a, mode="fast")
        assert ex.twice_area == 0
        assert fa.indices == ex.indices == (0, 1, 2)

    def test_rejects_too_few(self):
        with pytest.raises(ValueError):
            min_area_triangle(PointSet.from_coords([(0, 0), (1, 1)]))

    def test_rejects_bad_mode(self):
        ps = PointSet.from_coords([(0, 0), (1, 0), (0, 1)])
        with pytest.raises(ValueError):
            min_area_triangle(ps, mode="quick")


class TestDomainTypes:
    def test_grid_arrangement_validates(self):
        with pytest.raises(ValueError):
            GridArrangement.from_points(4, [(0, 0), (0, 0)])
        with pytest.raises(ValueError):
            GridArrangement.from_points(4, [(0, 0), (4, 1)])
        with pytest.raises(ValueError):
            GridArrangement(4, (GridPoint(1, 1), GridPoint(0, 0)))  # unsorted
        with pytest.raises(ValueError):
            GridArrangement.from_points(1, [(0, 0)])

    def test_unit_point_validates(self):
        with pytest.raises(ValueError):
            UnitPoint(1.5, 0.0)

    def test_cells_are_row_major(self):
        a = GridArrangement.from_points(4, [(2, 1), (0, 0), (3, 3)])
        assert a.cells() == (0, 6, 15)

    def test_unit_embedding(self):
        a = GridArrangement.from_points(5, [(0, 0), (4, 2)])
        ps = a.to_unit_points()
        assert ps.points[1] == UnitPoint(1.0, 0.5)
