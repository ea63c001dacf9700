"""Canonical labelling by partition refinement with backtracking.

The canonical form of a graph is the relabelling whose adjacency code
(tuple of row bitmasks) is lexicographically smallest over the leaves of
an individualisation-refinement search tree.  Two invariants are what
callers rely on: isomorphic graphs get equal codes, and the code is
unchanged by any relabelling of the input.

Branches are pruned with automorphisms: the search seeds the generator
list with twin transpositions (interchangeable vertices are everywhere in
joins and Turan graphs) and records further automorphisms whenever two
leaves produce the same code.
"""

from __future__ import annotations

from .graph6 import graph6_encode
from .graphs import Graph, relabel


def _twin_transpositions(g: Graph) -> list[tuple[int, ...]]:
    n, rows = g.n, g.rows
    gens = []
    ident = list(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                a = ident[:]
                a[u], a[v] = v, u
                gens.append(tuple(a))
    return gens


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; order is invariant."""
    changed = True
    while changed:
        changed = False
        for si in range(len(cells)):
            w = 0
            for v in cells[si]:
                w |= 1 << v
            newcells: list[list[int]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    newcells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((rows[v] & w).bit_count(), []).append(v)
                if len(groups) == 1:
                    newcells.append(cell)
                else:
                    split = True
                    for key in sorted(groups):
                        newcells.append(groups[key])
            if split:
                cells = newcells
                changed = True
                break
    return cells


def _fixes(a: tuple[int, ...], mask: int) -> bool:
    m = mask
    while m:
        u = (m & -m).bit_length() - 1
        m &= m - 1
        if a[u] != u:
            return False
    return True


def canonical_labeling(g: Graph) -> tuple[list[int], list[tuple[int, ...]]]:
    """Return (perm, generators): perm[old] = new canonical label.

    generators are automorphisms of g (old labels) discovered during the
    search; they generate a subgroup of Aut(g), not necessarily all of it.
    """
    n, rows = g.n, g.rows
    if n == 0:
        return [], []
    bydeg: dict[int, list[int]] = {}
    for v in range(n):
        bydeg.setdefault(rows[v].bit_count(), []).append(v)
    cells0 = [bydeg[d] for d in sorted(bydeg)]
    autos = _twin_transpositions(g)
    best_code: list[tuple[int, ...] | None] = [None]
    best_order: list[list[int] | None] = [None]

    def leaf(order: list[int]) -> None:
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            r = 0
            m = rows[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                r |= 1 << pos[u]
            code.append(r)
        tcode = tuple(code)
        if best_code[0] is None or tcode < best_code[0]:
            best_code[0] = tcode
            best_order[0] = order[:]
        elif tcode == best_code[0] and order != best_order[0]:
            b = best_order[0]
            a = [0] * n
            for i in range(n):
                a[b[i]] = order[i]
            autos.append(tuple(a))

    def search(cells: list[list[int]], fixed: int) -> None:
        cells = _refine(rows, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target < 0:
            leaf([c[0] for c in cells])
            return
        cell = cells[target]
        done = 0
        for v in cell:
            if (done >> v) & 1:
                continue
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :], fixed | (1 << v))
            done |= 1 << v
            # close the tried set under automorphisms fixing the prefix
            grew = True
            while grew:
                grew = False
                for a in autos:
                    if not _fixes(a, fixed):
                        continue
                    img = 0
                    m = done
                    while m:
                        u = (m & -m).bit_length() - 1
                        m &= m - 1
                        img |= 1 << a[u]
                    if img & ~done:
                        done |= img
                        grew = True

    search(cells0, 0)
    order = best_order[0]
    assert order is not None
    perm = [0] * n
    for i, v in enumerate(order):
        perm[v] = i
    return perm, autos


def canonical_form(g: Graph) -> Graph:
    """The canonically relabelled copy of g."""
    perm, _ = canonical_labeling(g)
    return relabel(g, perm)


def canonical_with_generators(g: Graph) -> tuple[Graph, list[tuple[int, ...]]]:
    """Canonical form plus automorphism generators in canonical labels."""
    perm, gens = canonical_labeling(g)
    cf = relabel(g, perm)
    out = []
    seen = set()
    for a in gens:
        b = [0] * g.n
        for u in range(g.n):
            b[perm[u]] = perm[a[u]]
        tb = tuple(b)
        if tb not in seen:
            seen.add(tb)
            out.append(tb)
    return cf, out


def canonical(g: Graph) -> bytes:
    """Canonical code: graph6 bytes of the canonically relabelled graph."""
    return graph6_encode(canonical_form(g)).encode("ascii")
