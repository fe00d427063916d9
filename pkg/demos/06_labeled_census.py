"""Exhaustive and sampled censuses of triangle-free labeled graphs.

For small vertex counts every labeled graph can be enumerated, each
triangle-free one scored by how many edge deletions separate it from
bipartite.  Past about 24 edge slots the sweep switches to seeded
sampling.  The classic asymptotic says almost every triangle-free graph
is bipartite; these desk sizes show the opposite trend, still dominated
by odd cycles.
"""

from cliquefree.enumeration import partite_census

print("full sweeps (every labeled graph)")
print("  m  graphs     triangle-free  bipartite fraction  distance histogram")
for m in range(3, 8):
    pc = partite_census(m, 2)
    total = 2 ** (m * (m - 1) // 2)
    print(f"  {m}  {total:10d}  {pc.clique_free:12d}  {pc.exact_partite_fraction:17.4f}"
          f"  {dict(pc.distance_histogram)}")
print()
print("the fraction falls at these sizes: a 5-cycle fits long before")
print("bipartite dominance takes over (that needs far more vertices)")
print()

print("sampled sweep at m = 8 (6000 seeded graphs, 28 edge slots)")
pc = partite_census(8, 2, sample_size=6000, seed=20260825)
print(f"  triangle-free rate: {pc.clique_free / pc.total:.4f}")
print(f"  bipartite fraction among those: {pc.exact_partite_fraction:.4f}")
print(f"  distance histogram: {dict(pc.distance_histogram)}")
print("  (triangle-free graphs thin out fast under uniform sampling,")
print("   which is why the full sweep stops at 24 edge slots)")
