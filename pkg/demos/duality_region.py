# Sweep of the accessible region in the plane spanned by the spatial duality
# sum (x = C_q + distinguishability bound) and the causal coherence (y).
# A 21 x 21 grid over the order weight and a signed detector overlap reaches
# down to x ~ 0 (destructively mixing branch coherences), up to y = 1
# (balanced commuting sector), and in particular hits the corner (1, 1) that
# rules out any linear spatial-causal tradeoff.

import numpy as np

from switchlab.relations import region_sweep

points = region_sweep(21, 21)
xs = np.array([pt.x for pt in points])
ys = np.array([pt.y for pt in points])

print(f"{len(points)} grid points")
print(f"x range: [{xs.min():.6f}, {xs.max():.6f}]")
print(f"y range: [{ys.min():.6f}, {ys.max():.6f}]")
corner = [pt for pt in points if abs(pt.x - 1) < 1e-9 and abs(pt.y - 1) < 1e-9]
print(f"grid points at the corner (1, 1): {len(corner)}")
sample = corner[0]
print(
    f"  e.g. order weight {sample.order_weight}, detector overlap "
    f"{sample.detector_overlap} (orthogonal marking, commuting interference)"
)

# coarse occupancy map of the achieved points (x right, y up)
bins = 12
grid = [[" "] * bins for _ in range(bins)]
for pt in points:
    col = min(int(pt.x * bins), bins - 1)
    row = min(int(pt.y * bins), bins - 1)
    grid[row][col] = "*"
print("\noccupied cells (x right, y up):")
for row in reversed(grid):
    print("  |" + "".join(row) + "|")
print("  +" + "-" * bins + "+")
