"""Best-case placements: maximizing the minimum triangle area at small n.

Random-restart hill climbing with decaying coordinate steps.  For n = 3
and n = 4 the optimum is 1/2 (square corners); afterwards the best value
falls steeply.  Reported values are re-verified with the exhaustive scan
and are deterministic per seed.
"""

from heilbronn import optimize_heilbronn

print(f"{'n':>3} {'best min area':>14}")
for n in range(3, 9):
    res = optimize_heilbronn(n, restarts=10, steps=3000, seed=42)
    print(f"{n:>3} {res.value:>14.6f}")

res = optimize_heilbronn(4, restarts=10, steps=3000, seed=42)
print("\nn=4 points (corners up to symmetry):")
for p in res.points.points:
    print(f"  ({p.x:.4f}, {p.y:.4f})")
