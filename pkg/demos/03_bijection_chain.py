"""Walk one labeled F-path through the whole bijection chain.

The example is a 19-step path of semilength 24 and height 3; its image
under phi is a 25-entry 102-avoiding sequence of rank 3, and its image
under psi is a 59-step UVD path with vox 3.

Run as: python3 demos/03_bijection_chain.py
"""

from invpaths import (
    LabeledFPath,
    LabeledStep,
    is_to_schroeder,
    lf_stats,
    phi,
    phi_inv,
    psi,
    psi_inv,
    schroeder_to_is,
    stats,
    uvd_stats,
)

S = LabeledStep
Q = LabeledFPath(
    tuple(
        [S.rise(0)] * 3
        + [S.rise(1), S.rise(3)]
        + [S.rise(0)] * 4
        + [S.down(2, [0])]
        + [S.rise(0)] * 2
        + [S.down(1, [-1])]
        + [S.rise(0)] * 4
        + [S.down(1, [0, 0, 0]), S.down(1, [0, -1, 0, -1])]
    )
)

semilength, height = lf_stats(Q)
print(f"Q has {len(Q)} steps, semilength {semilength}, height {height}")
print(f"  steps: {Q}")

print("\nphi builds the sequence step by step; after each prefix:")
for j in (3, 4, 5, 9, 10, 13, 18, 19):
    e = phi(LabeledFPath(Q.steps[:j]))
    print(f"  first {j:2} steps -> {''.join(str(v) for v in e.entries)}")

e = phi(Q)
st = stats(e)
print(f"\nphi(Q): length {len(e)}, max {st.max_val}, prmx {st.prmx}, rank {st.rank}")
assert phi_inv(e) == Q

s = psi(Q)
print(f"\npsi(Q) is a UVD word of {len(s.word)} steps with {uvd_stats(s).vox} axis valleys:")
print(f"  {s.word}")
assert psi_inv(s) == Q

p = is_to_schroeder(e)
print(f"\nThe composite carries it to a 2-Schroeder path of semilength {p.semilength}:")
print(f"  {p.word}")
assert schroeder_to_is(p) == e
print("\nround trips: phi_inv(phi(Q)) == Q, psi_inv(psi(Q)) == Q, composite inverts  [ok]")
