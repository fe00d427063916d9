"""Size thresholds and the predicted two-point window.

level_threshold(k) is the smallest n where the expected number of
independent k-sets in a random graph with edge density 1/2 clears the
slack 1/eps(k).  Between consecutive level thresholds the predicted
maximum clique-free size moves through a chain of defect thresholds,
one pair per breakpoint, and the prediction for any n is read off by
counting which thresholds n has passed.
"""

from cliquefree.thresholds import (
    level,
    level_threshold,
    predicted_interval,
    predicted_pmf,
    threshold_table,
)

print("level thresholds and consecutive ratios")
prev = None
for k in range(3, 13):
    a = level_threshold(k)
    ratio = "" if prev is None else f"  ratio {a / prev:.4f}"
    print(f"  k = {k:2d}  a_k = {a:5d}{ratio}")
    prev = a
print("  (the ratio drifts toward sqrt(2) ~ 1.4142 as k grows)")
print()

tab = threshold_table(10, 2)
print("threshold table at level k = 10, part count r = 2")
print(f"  level starts {tab.level_start}, next level at {tab.level_end}")
print(f"  breakpoints {tab.breakpoints}, mus {tab.mus}, xis {tab.xis}")
print(f"  raw lower {tab.raw_lower} -> clamped {tab.lower}")
print(f"  raw upper {tab.raw_upper} -> clamped {tab.upper}")
print("  (a raw threshold below the level start is clamped up to it)")
print()

print("predicted window around the k = 10 -> 11 seam, r = 2")
a11 = level_threshold(11)
for n in (116, 150, a11 - 1, a11, a11 + 40):
    lo, hi = predicted_interval(n, 2)
    print(f"  n = {n:4d}  level {level(n):2d}  window [{lo}, {hi}]")
print()

out = predicted_pmf(40, 2)
print("surrogate law of the maximum size at n = 40, r = 2")
print(f"  level k = {out.k}, candidate sizes and masses:")
for size in sorted(out.pmf):
    print(f"    alpha = {size:2d}  mass {out.pmf[size]: .4f}")
print(f"  mass defect {out.mass_defect:.4f}")
print(f"  flagged breakpoints (rate too large for the one-ingredient "
      f"surrogate): {out.flagged}")
print("  (negative mass near a level seam is an artifact of pricing each")
print("   size by its scarcest ingredient only; flagged entries mark it)")
