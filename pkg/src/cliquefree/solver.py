"""Exact solvers: largest clique-free induced subgraphs and defect structures.

max_clique_free computes the maximum number of vertices inducing no clique
on q vertices, by branch and bound over vertex masks.  The bound is the
plain size bound |chosen| + |candidates|; the include step is gated by an
exact clique search inside the chosen neighborhood, so every reported
witness is correct by construction.

build_structure assembles the certificate family behind the lower-bound
side of the two-point prediction: j parts of size k+1 carrying mu or mu+1
defect edges, plus r-j independent k-sets, one per defect edge, each
covering its edge (no common neighbor of the endpoints inside the set).
Any clique meets each part in at most a defect-edge clique and each cover
in at most one vertex, and using a defect edge locks the clique out of
that edge's cover, so the union contains no clique on r+1 vertices; this
is checked invariant by invariant in verify_structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .census import DEFAULT_NODE_LIMIT, census, cover_family
from .errors import NodeLimitError
from .graphs import Graph, covers_edge, mask_to_vertices
from .profiles import mu_xi


@dataclass(frozen=True)
class SolveResult:
    size: int
    witness: int  # vertex mask
    nodes: int

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "witness": mask_to_vertices(self.witness),
            "nodes": self.nodes,
        }


def has_clique(g: Graph, mask: int, q: int) -> bool:
    """True iff the mask contains a clique on q vertices."""
    if q <= 0:
        return True
    if q == 1:
        return mask != 0
    rows = g.rows

    def walk(cand: int, need: int) -> bool:
        if need == 1:
            return cand != 0
        while cand:
            if cand.bit_count() < need:
                return False
            b = cand & -cand
            cand ^= b
            # extend with v's later neighbors only, so each clique is
            # enumerated once in ascending order
            if walk(rows[b.bit_length() - 1] & cand, need - 1):
                return True
        return False

    return walk(mask, q)


def max_clique_free(
    g: Graph,
    q: int,
    *,
    node_limit: int = DEFAULT_NODE_LIMIT,
    at_least: int | None = None,
) -> SolveResult:
    """Maximum induced subgraph with no clique on q vertices.

    at_least stops the search as soon as a witness of that size is found;
    the returned size is then a lower bound rather than the maximum.
    """
    if q < 2:
        raise ValueError("clique order q must be at least 2")
    n = g.n
    rows = g.rows

    # greedy seed: scan vertices in order, keep those not completing a clique
    best_mask = 0
    best = 0
    for v in range(n):
        if not has_clique(g, rows[v] & best_mask, q - 1):
            best_mask |= 1 << v
            best += 1

    nodes = 0
    target = at_least if at_least is not None else n + 1

    def dfs(cand: int, chosen: int, size: int):
        nonlocal best, best_mask, nodes
        if best >= target:
            return
        nodes += 1
        if nodes > node_limit:
            raise NodeLimitError(
                f"solver exceeded {node_limit} nodes",
                nodes,
                partial=SolveResult(best, best_mask, nodes),
            )
        if size + cand.bit_count() <= best:
            return
        b = cand & -cand
        v = b.bit_length() - 1
        rest = cand ^ b
        if not has_clique(g, rows[v] & chosen, q - 1):
            if size + 1 > best:
                best = size + 1
                best_mask = chosen | b
            dfs(rest, chosen | b, size + 1)
        dfs(rest, chosen, size)

    dfs(g.full_mask, 0, 0)
    return SolveResult(best, best_mask, nodes)


def contains_subgraph(g: Graph, f: Graph, *, within: int | None = None) -> bool:
    """True iff g has a (not necessarily induced) copy of f.

    within restricts the copy to a vertex mask of g.
    """
    if f.n == 0:
        return True
    if within is None:
        within = g.full_mask
    if within.bit_count() < f.n:
        return False
    # order pattern vertices by descending degree, ties by label
    order = sorted(range(f.n), key=lambda a: (-f.degree(a), a))
    back = []  # for each position, pattern neighbors at earlier positions
    for pos, a in enumerate(order):
        back.append([p for p in range(pos) if f.has_edge(a, order[p])])

    image = [0] * f.n  # g-vertex chosen for each position

    def extend(pos: int, used: int) -> bool:
        if pos == f.n:
            return True
        cand = within & ~used
        for p in back[pos]:
            cand &= g.rows[image[p]]
        while cand:
            b = cand & -cand
            cand ^= b
            image[pos] = b.bit_length() - 1
            if extend(pos + 1, used | b):
                return True
        return False

    return extend(0, 0)


def max_pattern_free(
    g: Graph,
    f: Graph,
    *,
    node_limit: int = DEFAULT_NODE_LIMIT,
    at_least: int | None = None,
) -> SolveResult:
    """Maximum induced subgraph containing no copy of the pattern f.

    With f a complete graph this computes the same quantity as
    max_clique_free, through a general subgraph matcher instead of the
    clique recursion.
    """
    if f.n < 1 or f.edge_count() == 0:
        raise ValueError("pattern must have at least one edge")
    n = g.n
    nodes = 0
    target = at_least if at_least is not None else n + 1

    best_mask = 0
    best = 0
    for v in range(n):
        cand = best_mask | (1 << v)
        if not contains_subgraph(g, f, within=cand):
            best_mask = cand
            best += 1

    def dfs(cand: int, chosen: int, size: int):
        nonlocal best, best_mask, nodes
        if best >= target:
            return
        nodes += 1
        if nodes > node_limit:
            raise NodeLimitError(
                f"solver exceeded {node_limit} nodes",
                nodes,
                partial=SolveResult(best, best_mask, nodes),
            )
        if size + cand.bit_count() <= best:
            return
        b = cand & -cand
        rest = cand ^ b
        if not contains_subgraph(g, f, within=chosen | b):
            if size + 1 > best:
                best = size + 1
                best_mask = chosen | b
            dfs(rest, chosen | b, size + 1)
        dfs(rest, chosen, size)

    dfs(g.full_mask, 0, 0)
    return SolveResult(best, best_mask, nodes)


# -- defect structures --------------------------------------------------------


def _edges_of(g: Graph, mask: int) -> tuple[tuple[int, int], ...]:
    """Edges inside a mask, sorted, endpoints ascending."""
    out = []
    verts = mask_to_vertices(mask)
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if g.has_edge(u, v):
                out.append((u, v))
    return tuple(out)


@dataclass(frozen=True)
class DefectStructure:
    """A clique-free certificate on k*r + j vertices.

    parts: j masks of k+1 vertices; the defect lists record their induced
    edges (mu or mu+1 each).  covers: r-j independent k-set masks, one per
    defect edge; cover_edges[t] is the defect edge assigned to covers[t].
    """

    r: int
    j: int
    k: int
    mu: int
    xi: int
    parts: tuple[int, ...]
    part_defects: tuple[tuple[tuple[int, int], ...], ...]
    covers: tuple[int, ...]
    cover_edges: tuple[tuple[int, int], ...]

    @property
    def union_mask(self) -> int:
        m = 0
        for p in self.parts:
            m |= p
        for c in self.covers:
            m |= c
        return m

    @property
    def size(self) -> int:
        return self.k * self.r + self.j

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "j": self.j,
            "k": self.k,
            "mu": self.mu,
            "xi": self.xi,
            "size": self.size,
            "parts": [mask_to_vertices(p) for p in self.parts],
            "part_defects": [list(map(list, d)) for d in self.part_defects],
            "covers": [mask_to_vertices(c) for c in self.covers],
            "cover_edges": [list(e) for e in self.cover_edges],
            "vertices": mask_to_vertices(self.union_mask),
        }


def build_structure(
    g: Graph,
    r: int,
    j: int,
    k: int,
    *,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> DefectStructure | None:
    """Search for a defect structure with parameters (r, j, k) in g.

    Deterministic: candidate parts and covers are tried in ascending mask
    order, so the same graph always yields the same structure.  Returns
    None when the search space is exhausted without a hit.
    """
    if k < 1:
        raise ValueError("part size parameter k must be positive")
    mu, xi = mu_xi(r, j)
    need_small = xi          # parts with mu defects
    need_large = j - xi      # parts with mu + 1 defects

    scan = census(
        g, k + 1, mu + (1 if need_large else 0),
        witnesses=True, node_limit=node_limit,
    )
    if not scan.witnesses_complete:
        raise NodeLimitError(
            "part enumeration exceeded the witness cap", scan.nodes, partial=scan
        )
    small = [m for m, e in scan.witnesses if e == mu]
    large = [m for m, e in scan.witnesses if e == mu + 1] if need_large else []
    if len(small) < need_small or len(large) < need_large:
        return None

    nodes = 0

    def bump():
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise NodeLimitError(
                f"structure search exceeded {node_limit} nodes", nodes
            )

    def pick_parts(pool: list[int], start: int, need: int, used: int, acc: list[int]):
        """Disjoint selections from pool[start:], ascending, as a generator."""
        if need == 0:
            yield acc
            return
        for idx in range(start, len(pool) - need + 1):
            m = pool[idx]
            if m & used:
                continue
            bump()
            yield from pick_parts(pool, idx + 1, need - 1, used | m, acc + [m])

    def pick_covers(defects, used, acc):
        if not defects:
            return acc
        (u, v), rest = defects[0], defects[1:]
        for cm in cover_family(g, u, v, k, node_limit=node_limit):
            if cm & used:
                continue
            bump()
            got = pick_covers(rest, used | cm, acc + [cm])
            if got is not None:
                return got
        return None

    for smalls in pick_parts(small, 0, need_small, 0, []):
        used_small = 0
        for m in smalls:
            used_small |= m
        for larges in pick_parts(large, 0, need_large, used_small, []):
            parts = tuple(smalls) + tuple(larges)
            used = used_small
            for m in larges:
                used |= m
            defects = []
            for pm in parts:
                defects.extend(_edges_of(g, pm))
            covers = pick_covers(tuple(defects), used, [])
            if covers is not None:
                return DefectStructure(
                    r=r, j=j, k=k, mu=mu, xi=xi,
                    parts=parts,
                    part_defects=tuple(_edges_of(g, pm) for pm in parts),
                    covers=tuple(covers),
                    cover_edges=tuple(defects),
                )
    return None


_DIRECT_CHECK_LIMIT = 30


def verify_structure(g: Graph, s: DefectStructure) -> bool:
    """Re-check every invariant of a defect structure against the graph.

    The invariants are exactly the premises of the freeness argument, so a
    True return certifies the union induces no clique on r+1 vertices.  On
    graphs small enough for it (n <= 30) the clique search is also run
    directly as a belt-and-braces check.
    """
    r, j, k = s.r, s.j, s.k
    if not 1 <= j <= r or k < 1:
        return False
    mu, xi = mu_xi(r, j)
    if (mu, xi) != (s.mu, s.xi):
        return False
    if len(s.parts) != j or len(s.part_defects) != j:
        return False
    if len(s.covers) != r - j or len(s.cover_edges) != r - j:
        return False

    union = 0
    small_count = 0
    for pm, claimed in zip(s.parts, s.part_defects):
        if pm.bit_count() != k + 1 or pm & union:
            return False
        union |= pm
        actual = _edges_of(g, pm)
        if actual != tuple(claimed):
            return False
        if len(actual) == mu:
            small_count += 1
        elif len(actual) != mu + 1:
            return False
    if small_count != xi and j != xi:
        return False
    if j == xi and small_count != j:
        return False

    all_defects = []
    for d in s.part_defects:
        all_defects.extend(d)
    if sorted(all_defects) != sorted(s.cover_edges):
        return False

    for cm, (u, v) in zip(s.covers, s.cover_edges):
        if cm.bit_count() != k or cm & union:
            return False
        union |= cm
        if g.edges_within(cm) != 0:
            return False
        if not covers_edge(g, cm, u, v):
            return False

    if union.bit_count() != k * r + j:
        return False
    if g.n <= _DIRECT_CHECK_LIMIT and has_clique(g, union, r + 1):
        return False
    return True
