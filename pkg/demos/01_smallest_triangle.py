"""Smallest-triangle basics: exact grid arithmetic vs continuous points.

Every triangle query reduces to the cross product (q-p) x (r-p), which is
an exact integer on grid coordinates.  On a K x K grid the smallest
nondegenerate triangle has area exactly 1/(2(K-1)^2), which is why the
grid-to-unit-square normalization divides twice-areas by 2(K-1)^2.
"""

from heilbronn import (
    GridArrangement,
    PointSet,
    min_area_triangle,
    normalize_area,
    sample_unit_square,
    twice_signed_area,
)

# --- exact integer mode ----------------------------------------------------

print("cross product of (0,0),(6,4),(1,3):", twice_signed_area((0, 0), (6, 4), (1, 3)))

grid = GridArrangement.from_points(8, [(0, 0), (6, 4), (1, 3), (7, 7), (2, 5)])
rep = min_area_triangle(grid, mode="exhaustive")
print(f"grid minimum: triple {rep.indices}, twice-area {rep.twice_area} "
      f"-> unit area {rep.area}")
print("normalize_area(14, K=8) =", normalize_area(14, 8), "(exactly 1/7)")

# --- continuous mode ---------------------------------------------------------

corners = PointSet.from_coords([(0, 0), (1, 0), (0, 1), (1, 1)])
print("four corners ->", min_area_triangle(corners).area)

# seeded random points: the 'fast' vectorized scan returns exactly the same
# triple as the exhaustive reference (this equality is part of the contract)
pts = sample_unit_square(48, seed=2024, stream_id=0)
fast = min_area_triangle(pts, mode="fast")
slow = min_area_triangle(pts, mode="exhaustive")
assert (fast.indices, fast.twice_area) == (slow.indices, slow.twice_area)
print(f"48 random points: A = {fast.area:.3e} at triple {fast.indices} "
      f"(fast == exhaustive verified)")
