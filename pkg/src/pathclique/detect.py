"""Exact subgraph and structure detection.

Clique counting and path search run over bitmask adjacency rows; the path
routines are branch-and-bound with a reachability bound and early exit,
since the hot question everywhere is just "is there a path on k vertices".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional

from .canon import canonical
from .constructions import g1, g2, g3, g4, g5
from .formulas import delta_k
from .graphs import Graph, copies, induced, join, primitive


def count_cliques(g: Graph, r: int) -> int:
    """Number of K_r subgraphs; N_0 = 1, N_1 = n, N_2 = e(G)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return 1
    if r == 1:
        return g.n
    rows = g.rows
    total = 0

    def rec(cand: int, need: int) -> None:
        nonlocal total
        if need == 1:
            total += cand.bit_count()
            return
        while cand:
            if cand.bit_count() < need:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            rec(rows[v] & cand, need - 1)

    rec((1 << g.n) - 1, r)
    return total


def has_clique_in(g: Graph, mask: int, m: int) -> bool:
    """True iff the vertices of mask span a K_m."""
    if m <= 0:
        return True
    if m == 1:
        return mask != 0
    rows = g.rows

    def rec(cand: int, need: int) -> bool:
        if need == 1:
            return cand != 0
        while cand:
            if cand.bit_count() < need:
                return False
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if rec(rows[v] & cand, need - 1):
                return True
        return False

    return rec(mask, m)


def has_clique(g: Graph, m: int) -> bool:
    return has_clique_in(g, (1 << g.n) - 1, m)


def _reachable(rows: tuple[int, ...], seed: int, banned: int) -> int:
    seen = seed & ~banned
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= rows[v]
        nxt &= ~seen & ~banned
        seen |= nxt
        frontier = nxt
    return seen


def longest_path_order(g: Graph, stop_at: Optional[int] = None) -> int:
    """Order of a longest path (0 for the graph on 0 vertices).

    Branch-and-bound from every start vertex, pruned by the size of the
    region still reachable; with stop_at the search exits as soon as a
    path on stop_at vertices is found.
    """
    n, rows = g.n, g.rows
    if n == 0:
        return 0
    best = 1
    goal = stop_at if stop_at is not None else n
    # with a fixed target, a state (visited, end) that failed once can
    # never succeed; memoizing these turns the search tree into a DAG
    failed: set[tuple[int, int]] = set()

    def dfs(v: int, visited: int, length: int) -> bool:
        nonlocal best
        if length > best:
            best = length
            if best >= goal:
                return True
        if stop_at is not None and (visited, v) in failed:
            return False
        ext = rows[v] & ~visited
        while ext:
            u = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            reach = _reachable(rows, 1 << u, visited)
            bound = length + reach.bit_count()
            if stop_at is not None:
                if bound < goal:
                    continue
            elif bound <= best:
                continue
            if dfs(u, visited | (1 << u), length + 1):
                return True
        if stop_at is not None:
            failed.add((visited, v))
        return False

    for s in range(n):
        if dfs(s, 1 << s, 1):
            break
    return best


def has_path(g: Graph, k: int) -> bool:
    """True iff g contains a path on k vertices."""
    if k <= 0:
        return True
    if k == 1:
        return g.n >= 1
    return longest_path_order(g, stop_at=k) >= k


def is_free(g: Graph, k: int, m: int) -> bool:
    """{P_k, K_m}-free."""
    return not has_clique(g, m) and not has_path(g, k)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return _reachable(g.rows, 1, 0) == g.vertex_mask()


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs or bridges) and cut vertices.

    Isolated vertices belong to no block.  An end block contains exactly
    one cut vertex.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    end_blocks: tuple[int, ...]


def blocks(g: Graph) -> BlockDecomposition:
    n = g.n
    disc = [0] * n
    low = [0] * n
    parent = [-1] * n
    timer = [1]
    estack: list[tuple[int, int]] = []
    found: list[frozenset[int]] = []
    cut: set[int] = set()

    def dfs(u: int) -> None:
        disc[u] = low[u] = timer[0]
        timer[0] += 1
        children = 0
        for v in g.neighbors(u):
            if not disc[v]:
                children += 1
                parent[v] = u
                estack.append((u, v))
                dfs(v)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if parent[u] != -1 or children > 1:
                        cut.add(u)
                    comp: set[int] = set()
                    while True:
                        e = estack.pop()
                        comp.add(e[0])
                        comp.add(e[1])
                        if e == (u, v):
                            break
                    found.append(frozenset(comp))
            elif v != parent[u] and disc[v] < disc[u]:
                estack.append((u, v))
                low[u] = min(low[u], disc[v])

    for root in range(n):
        if not disc[root]:
            dfs(root)
    end = tuple(i for i, b in enumerate(found) if len(b & cut) == 1)
    return BlockDecomposition(tuple(found), frozenset(cut), end)


def is_2connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not blocks(g).cut_vertices


def sigma3(g: Graph) -> Optional[int]:
    """Max degree sum over independent triples; None if no such triple."""
    degs = g.degrees()
    best = None
    for u, v, w in combinations(range(g.n), 3):
        if g.has_edge(u, v) or g.has_edge(u, w) or g.has_edge(v, w):
            continue
        s = degs[u] + degs[v] + degs[w]
        if best is None or s > best:
            best = s
    return best


def _dominates(g: Graph, mask: int) -> bool:
    outside = g.vertex_mask() & ~mask
    while outside:
        v = (outside & -outside).bit_length() - 1
        outside &= outside - 1
        if g.rows[v] & ~mask:
            return False
    return True


def strong_dominating_path(g: Graph) -> Optional[tuple[int, ...]]:
    """Longest path with every off-path vertex's neighbours on the path."""
    n, rows = g.n, g.rows
    if n == 0:
        return None
    best: Optional[tuple[int, ...]] = None

    def dfs(v: int, visited: int, seq: list[int]) -> None:
        nonlocal best
        if (best is None or len(seq) > len(best)) and _dominates(g, visited):
            best = tuple(seq)
        ext = rows[v] & ~visited
        while ext:
            u = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            seq.append(u)
            dfs(u, visited | (1 << u), seq)
            seq.pop()

    for s in range(n):
        dfs(s, 1 << s, [s])
    return best


def strong_dominating_cycle(g: Graph) -> Optional[tuple[int, ...]]:
    """Some cycle with every off-cycle vertex's neighbours on the cycle."""
    n, rows = g.n, g.rows
    result: Optional[tuple[int, ...]] = None

    def dfs(start: int, v: int, visited: int, seq: list[int]) -> bool:
        nonlocal result
        if len(seq) >= 3 and (rows[v] >> start) & 1 and _dominates(g, visited):
            result = tuple(seq)
            return True
        ext = rows[v] & ~visited
        while ext:
            u = (ext & -ext).bit_length() - 1
            ext &= ext - 1
            if u < start:
                continue
            if len(seq) == 1 or u > seq[1]:  # break reflection symmetry
                seq.append(u)
                if dfs(start, u, visited | (1 << u), seq):
                    return True
                seq.pop()
        return False

    for s in range(n):
        if dfs(s, s, 1 << s, [s]):
            return result
    return None


class StructureClass(Enum):
    CLASS1 = "Class1"
    CLASS2_G1 = "Class2-G1"
    CLASS2_G2 = "Class2-G2"
    CLASS2_G3 = "Class2-G3"
    CLASS3_G4 = "Class3-G4"
    CLASS3_G5 = "Class3-G5"
    CLASS4_I2 = "Class4-I2"
    CLASS4_K2 = "Class4-K2"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class ClassificationOutcome:
    class_tag: StructureClass
    witness: object = None


def _edges_outside(g: Graph, smask: int) -> int:
    rest = g.vertex_mask() & ~smask
    total = 0
    m = rest
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        total += (g.rows[v] & rest).bit_count()
    return total // 2


def classify_structure(g: Graph, k: int, m: int) -> ClassificationOutcome:
    """Assign a connected {P_k,K_m}-free graph with min degree >= delta_k
    to its structural class, trying classes in the fixed order 1..4.

    Class 1 is decided by a witness set S of delta_k vertices whose
    induced subgraph is K_{m-1}-free and whose removal leaves at most one
    edge (none when k is even); this is equivalent to the subgraph-of-a-
    join formulation.
    """
    dk = delta_k(k)
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if not is_free(g, k, m):
        raise ValueError("graph must be {P_k, K_m}-free")
    if g.min_degree() < dk:
        raise ValueError(f"minimum degree must be at least delta_k = {dk}")
    if g.n < k:
        raise ValueError("need |G| >= k")

    n = g.n
    edge_limit = 1 if k % 2 == 1 else 0
    for subset in combinations(range(n), dk):
        smask = 0
        for v in subset:
            smask |= 1 << v
        if _edges_outside(g, smask) > edge_limit:
            continue
        if has_clique(induced(g, subset), m - 1):
            continue
        return ClassificationOutcome(StructureClass.CLASS1, frozenset(subset))

    code = canonical(g)

    if m >= dk + 2:
        if (n - 1) % dk == 0 and (n - 1) // dk >= 1:
            if canonical(g1(n, k)) == code:
                return ClassificationOutcome(
                    StructureClass.CLASS2_G1, {"n": n, "k": k}
                )
        if k % 2 == 1:
            n1 = 1 + dk
            while n1 <= n - 1 - dk:
                n2 = n - n1
                if (n2 - 1) % dk == 0 and (n2 - 1) // dk >= 1:
                    if canonical(g2(n1, n2, k)) == code:
                        return ClassificationOutcome(
                            StructureClass.CLASS2_G2,
                            {"n1": n1, "n2": n2, "k": k},
                        )
                n1 += dk
            rest = n - dk - 2
            if rest >= dk and rest % dk == 0:
                from .oracle import g3_block_family, valid_attach_vertices

                for block in g3_block_family(k, m):
                    for attach in valid_attach_vertices(block, dk):
                        cand = g3(n, k, block, attach)
                        if cand.min_degree() < dk:
                            continue
                        if canonical(cand) == code:
                            return ClassificationOutcome(
                                StructureClass.CLASS2_G3,
                                {"n": n, "k": k, "block": canonical(block)},
                            )

    if k == 7 and m >= 4:
        for n1 in range(3, n - 2, 2):
            n2 = n + 1 - n1
            if n2 < 4:
                continue
            if canonical(g4(n1, n2)) == code:
                return ClassificationOutcome(
                    StructureClass.CLASS3_G4, {"n1": n1, "n2": n2}
                )
            if canonical(g5(n1, n2)) == code:
                return ClassificationOutcome(
                    StructureClass.CLASS3_G5, {"n1": n1, "n2": n2}
                )

    if k == 9 and n >= 4 and n % 2 == 0:
        t = (n - 2) // 2
        matching = copies(t, primitive("complete", 2))
        if m >= 4 and canonical(join(primitive("empty", 2), matching)) == code:
            return ClassificationOutcome(StructureClass.CLASS4_I2, {"n": n})
        if m >= 5 and canonical(join(primitive("complete", 2), matching)) == code:
            return ClassificationOutcome(StructureClass.CLASS4_K2, {"n": n})

    return ClassificationOutcome(StructureClass.UNCLASSIFIED, None)
