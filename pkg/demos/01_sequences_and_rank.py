"""Tour of inversion sequences, pattern avoidance, and the rank statistic.

Run as: python3 demos/01_sequences_and_rank.py
"""

from invpaths import InversionSequence, contains_pattern, enumerate_is, reduce_word, stats

print("Reduction relabels the i-th smallest value as i-1:")
for word in ([2, 0, 2], [5, 1, 7], [0, 0, 1]):
    print(f"  {word} -> {reduce_word(word)}")

print("\nPattern containment looks for an order-isomorphic subsequence:")
e = InversionSequence((0, 1, 0, 2))
print(f"  {e} contains 102? {contains_pattern(e, '102')}  (witness: entries 1,0,2)")

print("\nAll inversion sequences of length 3, with their statistics:")
print("  sequence   max  prmx  rank  avoids 102?")
for e in enumerate_is(3):
    s = stats(e)
    ok = not contains_pattern(e, "102")
    print(f"  {str(e):10} {s.max_val:3}  {s.prmx:4}  {s.rank:4}  {ok}")

print("\nCounting 102-avoiders by length (every length-3 sequence avoids 102):")
for n in range(1, 9):
    print(f"  n={n}: {len(enumerate_is(n, ['102']))}")

print("\nPartition of the length-6 avoiders by rank:")
hist = {}
for e in enumerate_is(6, ["102"]):
    hist[stats(e).rank] = hist.get(stats(e).rank, 0) + 1
for t in sorted(hist):
    print(f"  rank {t}: {hist[t]}")
