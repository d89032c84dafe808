"""Canonical labeling, isomorphism tests, and automorphism group order.

The canonical form is defined by this module's own procedure: vertices are
partitioned by degree (descending), the partition is refined to equitability
by neighbour counts, and a backtracking search over the first smallest
non-singleton cell returns the lexicographically least upper-triangle
adjacency encoding among the labelings the refinement tree admits.  Only
internal consistency is promised: equal byte strings exactly for isomorphic
graphs.

A useful side effect of the cell ordering (used by the generators): the
vertex at the last canonical position always has minimum degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, bits_of
from .graph6 import to_graph6


def initial_cells(n: int, adj: tuple[int, ...]) -> list[int]:
    """Degree classes as cell bitmasks, highest degree first."""
    by_deg: dict[int, int] = {}
    for v, row in enumerate(adj):
        d = row.bit_count()
        by_deg[d] = by_deg.get(d, 0) | (1 << v)
    return [by_deg[d] for d in sorted(by_deg, reverse=True)]


def refine(n: int, adj: tuple[int, ...], cells: list[int], work: list[int] | None = None) -> list[int]:
    """Equitable refinement; splits order sub-cells by neighbour count, descending."""
    cells = list(cells)
    work = list(cells) if work is None else list(work)
    while work:
        splitter = work.pop()
        i = 0
        while i < len(cells):
            cell = cells[i]
            if cell & (cell - 1) == 0:
                i += 1
                continue
            groups: dict[int, int] = {}
            m = cell
            while m:
                low = m & -m
                c = (adj[low.bit_length() - 1] & splitter).bit_count()
                groups[c] = groups.get(c, 0) | low
                m ^= low
            if len(groups) > 1:
                parts = [groups[c] for c in sorted(groups, reverse=True)]
                cells[i : i + 1] = parts
                work.extend(parts)
                i += len(parts)
            else:
                i += 1
    return cells


@dataclass(frozen=True)
class CanonReport:
    """Result of a full canonical search."""

    n: int
    encoding: int  # upper-triangle bits of the canonical labeling, msb first
    labeling: tuple[int, ...]  # canonical position -> original vertex
    generators: tuple[tuple[int, ...], ...]  # discovered Aut(G) generators

    @property
    def key(self) -> tuple[int, int]:
        return (self.n, self.encoding)


def _uf_find(uf: list[int], x: int) -> int:
    while uf[x] != x:
        uf[x] = uf[uf[x]]
        x = uf[x]
    return x


def search_canonical(n: int, adj: tuple[int, ...]) -> CanonReport:
    """Backtracking canonical search with discovered-automorphism pruning."""
    identity = tuple(range(n))
    best_enc: int | None = None
    best_lab: list[int] | None = None
    gens: list[tuple[int, ...]] = []
    gen_seen: set[tuple[int, ...]] = set()

    def visit(cells: list[int], path: list[int]) -> None:
        nonlocal best_enc, best_lab
        target_idx = -1
        target_size = n + 1
        for idx, c in enumerate(cells):
            sz = c.bit_count()
            if 1 < sz < target_size:
                target_size = sz
                target_idx = idx
                if sz == 2:
                    break
        if target_idx < 0:
            lab = [c.bit_length() - 1 for c in cells]
            enc = 0
            for j in range(1, n):
                col = adj[lab[j]]
                for i in range(j):
                    enc = enc << 1 | (col >> lab[i] & 1)
            if best_enc is None or enc < best_enc:
                best_enc = enc
                best_lab = lab
            elif enc == best_enc:
                p = [0] * n
                for i in range(n):
                    p[lab[i]] = best_lab[i]
                tp = tuple(p)
                if tp != identity and tp not in gen_seen:
                    gen_seen.add(tp)
                    gens.append(tp)
            return
        cell = cells[target_idx]
        prefix = cells[:target_idx]
        suffix = cells[target_idx + 1 :]
        tried: list[int] = []
        for v in bits_of(cell):
            if tried:
                # skip vertices equivalent to an already-expanded sibling under
                # the discovered automorphisms fixing the individualized path
                uf = list(range(n))
                for g in gens:
                    if all(g[x] == x for x in path):
                        for x in range(n):
                            a, b = _uf_find(uf, x), _uf_find(uf, g[x])
                            if a != b:
                                uf[a] = b
                        rv = _uf_find(uf, v)
                        if any(_uf_find(uf, t) == rv for t in tried):
                            break
                rv = _uf_find(uf, v)
                if any(_uf_find(uf, t) == rv for t in tried):
                    continue
            tried.append(v)
            bit = 1 << v
            new_cells = prefix + [bit, cell ^ bit] + suffix
            path.append(v)
            visit(refine(n, adj, new_cells, [bit, cell ^ bit]), path)
            path.pop()

    visit(refine(n, adj, initial_cells(n, adj)), [])
    assert best_lab is not None
    return CanonReport(n, best_enc, tuple(best_lab), tuple(gens))


def canonical_relabel(g: Graph) -> Graph:
    """The canonically labelled copy of g."""
    rep = search_canonical(g.n, g.adj)
    pos = [0] * g.n
    for i, v in enumerate(rep.labeling):
        pos[v] = i
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        for u in bits_of(row):
            adj[pos[v]] |= 1 << pos[u]
    return Graph._raw(g.n, tuple(adj))


def canonical_form(g: Graph) -> bytes:
    """graph6 byte string of the canonically relabelled graph."""
    return to_graph6(canonical_relabel(g))


def canonical_key(g: Graph) -> tuple[int, int]:
    """Cheap hashable canonical identity (vertex count, adjacency encoding)."""
    rep = search_canonical(g.n, g.adj)
    return rep.key


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    return canonical_key(g1) == canonical_key(g2)


def vertex_orbits(n: int, gens: Iterable[tuple[int, ...]]) -> list[int]:
    """Orbit representative (union-find root) for each vertex."""
    uf = list(range(n))
    for g in gens:
        for x in range(n):
            a, b = _uf_find(uf, x), _uf_find(uf, g[x])
            if a != b:
                uf[a] = b
    return [_uf_find(uf, x) for x in range(n)]


def group_order(n: int, gens: Iterable[tuple[int, ...]]) -> int:
    """Order of the permutation group generated by gens (Schreier-Sims)."""
    identity = tuple(range(n))
    pending = [tuple(g) for g in gens if tuple(g) != identity]
    if not pending:
        return 1

    base: list[int] = []
    level_gens: list[list[tuple[int, ...]]] = []
    transversal: list[dict[int, tuple[int, ...]]] = []

    def rebuild(i: int) -> None:
        b = base[i]
        tr = {b: identity}
        queue = [b]
        while queue:
            x = queue.pop()
            tx = tr[x]
            for g in level_gens[i]:
                y = g[x]
                if y not in tr:
                    tr[y] = tuple(g[tx[k]] for k in range(n))
                    queue.append(y)
        transversal[i] = tr

    def sift_in(i: int, p: tuple[int, ...]) -> None:
        while True:
            if p == identity:
                return
            if i == len(base):
                b = min(k for k in range(n) if p[k] != k)
                base.append(b)
                level_gens.append([])
                transversal.append({b: identity})
            b = base[i]
            tr = transversal[i]
            y = p[b]
            if y in tr:
                t = tr[y]
                tinv = [0] * n
                for k in range(n):
                    tinv[t[k]] = k
                p = tuple(tinv[p[k]] for k in range(n))
                i += 1
                continue
            level_gens[i].append(p)
            rebuild(i)
            tr = transversal[i]
            for x in list(tr):
                tx = tr[x]
                for g in list(level_gens[i]):
                    ty = tr[g[x]]
                    tyinv = [0] * n
                    for k in range(n):
                        tyinv[ty[k]] = k
                    sg = tuple(tyinv[g[tx[k]]] for k in range(n))
                    sift_in(i + 1, sg)
            return

    for g in pending:
        sift_in(0, g)
    order = 1
    for tr in transversal:
        order *= len(tr)
    return order


def automorphism_count(g: Graph) -> int:
    """Exact order of Aut(g); capped at 32 vertices."""
    if g.n > 32:
        raise ValueError("automorphism_count capped at 32 vertices")
    rep = search_canonical(g.n, g.adj)
    return group_order(g.n, rep.generators)


def dedupe_stream(graphs: Iterable[Graph]) -> Iterator[Graph]:
    """Yield the first representative of each isomorphism class, in input order."""
    seen: set[tuple[int, int]] = set()
    for g in graphs:
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            yield g


def has_subgraph(g: Graph, h: Graph) -> bool:
    """True iff g contains a (not necessarily induced) subgraph isomorphic to h."""
    if h.n > g.n or h.edge_count > g.edge_count:
        return False
    h_order = sorted(range(h.n), key=lambda v: -h.adj[v].bit_count())
    g_degs = g.degrees()
    h_degs = h.degrees()

    def place(idx: int, assigned: list[int], used: int) -> bool:
        if idx == h.n:
            return True
        hv = h_order[idx]
        # g-candidates must cover hv's already-placed neighbours
        need = 0
        for j in range(idx):
            if h.adj[hv] >> h_order[j] & 1:
                need_v = assigned[j]
                need |= 1 << need_v
        for gv in range(g.n):
            if used >> gv & 1 or g_degs[gv] < h_degs[hv]:
                continue
            if need & ~g.adj[gv]:
                continue
            assigned.append(gv)
            if place(idx + 1, assigned, used | 1 << gv):
                return True
            assigned.pop()
        return False

    return place(0, [], 0)
