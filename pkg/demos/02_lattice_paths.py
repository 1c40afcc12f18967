"""UVD paths, 2-Schroeder paths, the step relabelling, and Dyck statistics.

Run as: python3 demos/02_lattice_paths.py
"""

from invpaths import (
    count_dyck_final_descent,
    enumerate_dyck,
    enumerate_schroeder,
    enumerate_uvd,
    schroeder_block,
    schroeder_to_uvd,
    uvd_stats,
)
from invpaths.paths import block_word, final_descent_length

print("UVD paths of semilength 3 (weakly above the axis, no uv/vu, end in d):")
for p in enumerate_uvd(3):
    s = uvd_stats(p)
    print(f"  {p.word:10}  vox={s.vox}  returns={s.block}")

print("\nThe relabelling N->u, E->v, H->d carries 2-Schroeder paths to UVD paths")
print("and the return count to vox + 1:")
for p in enumerate_schroeder(3):
    image = schroeder_to_uvd(p)
    print(
        f"  {p.word:9} -> {image.word:10}  block={schroeder_block(p)}"
        f"  vox+1={uvd_stats(image).vox + 1}"
    )

print("\nDyck paths of semilength 4, classified two ways that always agree:")
n = 4
by_descent = {}
by_returns = {}
for p in enumerate_dyck(n):
    by_descent.setdefault(final_descent_length(p.word), []).append(p.word)
    by_returns.setdefault(block_word(p.word), []).append(p.word)
for k in range(1, n + 1):
    formula = count_dyck_final_descent(n, k)
    print(
        f"  k={k}: final descent length k: {len(by_descent.get(k, [])):2}"
        f"  |  k returns: {len(by_returns.get(k, [])):2}  |  k/n*C(2n-k-1,n-1) = {formula}"
    )
