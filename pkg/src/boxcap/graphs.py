"""Immutable simple graphs: construction, I/O, predicates, isomorphism, enumeration.

Vertices are dense integer ids 0..n-1; optional text labels are side
metadata and never take part in equality. All values are immutable and
every operation is a pure function, so everything here is safe to share
across threads.
"""

from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence


class GraphError(ValueError):
    """Malformed graph construction or serialization input."""


class Graph:
    """A finite simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "labels", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Optional[Mapping[int, str]] = None):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self.labels = dict(labels) if labels else {}
        self._hash = None

    # -- basic accessors ----------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    # -- derived graphs -----------------------------------------------------

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex permutation v -> perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced_subgraph(self, vs: Iterable[int]) -> "Graph":
        """Induced subgraph on the given vertices, renumbered in sorted order."""
        order = sorted(set(vs))
        pos = {v: i for i, v in enumerate(order)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        return Graph(len(order), edges)

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges() + [(u, v)])

    def with_labels(self, labels: Mapping[int, str]) -> "Graph":
        return Graph(self.n, self.edges(), labels=labels)

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from explicit edges; duplicates are merged, loops rejected."""
    return Graph(n, edges)


# -- predicates ---------------------------------------------------------------


def is_connected(g: Graph) -> bool:
    """True when one BFS from vertex 0 reaches everything (vacuous for n <= 1)."""
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def connected_components(g: Graph) -> list[list[int]]:
    seen = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted in decreasing order."""
    return tuple(sorted((g.degree(v) for v in range(g.n)), reverse=True))


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def is_path(g: Graph) -> bool:
    if not is_connected(g):
        return False
    if g.n <= 2:
        return True
    degs = sorted(g.degree(v) for v in range(g.n))
    return degs[0] == degs[1] == 1 and all(d == 2 for d in degs[2:])


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def biconnected_blocks(g: Graph) -> list[list[int]]:
    """Vertex sets of the biconnected components (iterative lowpoint DFS).

    Bridges count as two-vertex blocks; isolated vertices yield no block.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[list[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                if low[v] < low[pv]:
                    low[pv] = low[v]
                if low[v] >= disc[pv]:
                    members = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        members.update((a, b))
                        if (a, b) == (pv, v):
                            break
                    if members:
                        blocks.append(sorted(members))
    return blocks


def is_biconnected(g: Graph) -> bool:
    if g.n < 3:
        return is_connected(g)
    blocks = biconnected_blocks(g)
    return len(blocks) == 1 and len(blocks[0]) == g.n


# -- planarity (Demoucron / Malgrange / Pertuiset face placement) ---------------


def is_planar(g: Graph) -> bool:
    """Exact planarity test: each block is embedded face by face.

    Fragments relative to the embedded part are placed into admissible
    faces, most-constrained fragment first; the graph is planar exactly
    when this never runs out of admissible faces. Quadratic, fine at the
    package's working sizes.
    """
    for block_vs in biconnected_blocks(g):
        if len(block_vs) <= 2:
            continue
        if not _planar_block(g.induced_subgraph(block_vs)):
            return False
    return True


def _find_cycle(g: Graph) -> list[int]:
    """Some simple cycle: a BFS tree plus one non-tree edge, joined at the LCA."""
    parent = {0: -1}
    depth = {0: 0}
    tree: set[tuple[int, int]] = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                tree.add((min(v, w), max(v, w)))
                queue.append(w)
    for u, v in g.edges():
        if (u, v) in tree or u not in parent or v not in parent:
            continue
        pu, pv = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            pu.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            pv.append(b)
        while a != b:
            a = parent[a]
            pu.append(a)
            b = parent[b]
            pv.append(b)
        return pu + pv[-2::-1]
    return []


def _planar_block(g: Graph) -> bool:
    n, m = g.n, g.m
    if n <= 4 or m - n + 1 <= 3:
        # any nonplanar graph needs at least 4 independent cycles
        return True
    if m > 3 * n - 6:
        return False
    cycle = _find_cycle(g)
    faces: list[list[int]] = [list(cycle), list(cycle)]
    in_h = [False] * n
    for v in cycle:
        in_h[v] = True
    embedded: set[tuple[int, int]] = set()
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        embedded.add((min(a, b), max(a, b)))

    while len(embedded) < m:
        fragments = _fragments(g, in_h, embedded)
        best = None
        for frag in fragments:
            contacts, interior = frag
            admissible = [i for i, f in enumerate(faces) if contacts <= set(f)]
            if not admissible:
                return False
            if best is None or len(admissible) < len(best[2]):
                best = (contacts, interior, admissible)
                if len(admissible) == 1:
                    break
        contacts, interior, admissible = best
        path = _fragment_path(g, contacts, interior)
        face = faces[admissible[0]]
        ia, ib = face.index(path[0]), face.index(path[-1])
        if ia <= ib:
            seg1, seg2 = face[ia:ib + 1], face[ib:] + face[:ia + 1]
        else:
            seg1, seg2 = face[ia:] + face[:ib + 1], face[ib:ia + 1]
        inner = path[1:-1]
        faces[admissible[0]] = seg1 + inner[::-1]
        faces.append(seg2 + inner)
        for v in inner:
            in_h[v] = True
        for a, b in zip(path, path[1:]):
            embedded.add((min(a, b), max(a, b)))
    return True


def _fragments(g: Graph, in_h: list[bool], embedded: set[tuple[int, int]]):
    """Chords and attachment components relative to the embedded subgraph."""
    out = []
    for u, v in g.edges():
        if in_h[u] and in_h[v] and (u, v) not in embedded:
            out.append((frozenset((u, v)), frozenset()))
    seen = [False] * g.n
    for s in range(g.n):
        if in_h[s] or seen[s]:
            continue
        comp = {s}
        contacts = set()
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if in_h[y]:
                    contacts.add(y)
                elif not seen[y]:
                    seen[y] = True
                    comp.add(y)
                    queue.append(y)
        out.append((frozenset(contacts), frozenset(comp)))
    return out


def _fragment_path(g: Graph, contacts: frozenset[int], interior: frozenset[int]) -> list[int]:
    """A path between two distinct contact vertices through the fragment."""
    contacts_sorted = sorted(contacts)
    if not interior:
        return contacts_sorted[:2]
    a = contacts_sorted[0]
    starts = sorted(g.neighbors(a) & interior)
    parent = {starts[0]: a}
    queue = deque([starts[0]])
    while queue:
        x = queue.popleft()
        for y in sorted(g.neighbors(x)):
            if y in contacts and y != a:
                path = [y, x]
                while path[-1] != a:
                    path.append(parent[path[-1]])
                return path[::-1]
            if y in interior and y not in parent:
                parent[y] = x
                queue.append(y)
    raise GraphError("internal: fragment with a single reachable contact")


# -- graph6 ------------------------------------------------------------------
#
# Standard format: one byte n+63 for n <= 62, then the upper triangle of the
# adjacency matrix read column by column ((0,1), (0,2), (1,2), (0,3), ...),
# packed big-endian into 6-bit chunks, each chunk stored as chr(value + 63).


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError(f"graph6 emitter supports at most 62 vertices, got {g.n}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise GraphError(f"character {ch!r} outside graph6 range 63..126")
    if s[0] == "~":
        raise GraphError("graph6 strings for n > 62 are not supported")
    n = ord(s[0]) - 63
    body = s[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphError(
            f"graph6 bit vector for n={n} needs {need} characters, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


# -- plain-text formats --------------------------------------------------------


def emit_edge_list(g: Graph) -> str:
    """Text form: first line "n m", then one "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln for ln in (ln.strip() for ln in text.splitlines()) if ln]
    if not rows:
        raise GraphError("empty edge-list text")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphError(f"edge-list header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphError(f"bad edge-list header {rows[0]!r}") from exc
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    g = Graph(n, edges)
    if g.m != m:
        raise GraphError(f"edge-list header declares {m} edges, found {g.m}")
    return g


def emit_dot(g: Graph, labels: Optional[Mapping[int, str]] = None) -> str:
    """DOT output with stable vertex order; labels fall back to vertex ids."""
    labels = dict(g.labels, **(labels or {}))
    lines = ["graph G {"]
    for v in range(g.n):
        text = labels.get(v, str(v))
        lines.append(f'  {v} [label="{text}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- isomorphism ---------------------------------------------------------------


def _refine_colors(g: Graph, colors: list[int]) -> list[int]:
    """Iterated neighborhood refinement until the partition stabilizes."""
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
               for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _color_multiset(colors: list[int]) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    return tuple(sorted(counts.items()))


def find_isomorphism(g: Graph, h: Graph,
                     seed: Optional[dict[int, int]] = None) -> Optional[dict[int, int]]:
    """An edge-preserving bijection g -> h, or None.

    Refinement narrows candidates to same-color classes, then backtracking
    fills the map most-constrained vertex first. A seed mapping pins chosen
    vertices in advance. Exact but intended for graphs up to roughly 20
    vertices; larger inputs may be slow.
    """
    if g.n != h.n or g.m != h.m:
        return None
    if degree_sequence(g) != degree_sequence(h):
        return None
    gcol = _refine_colors(g, [0] * g.n)
    hcol = _refine_colors(h, [0] * h.n)
    if _color_multiset(gcol) != _color_multiset(hcol):
        return None

    h_by_color: dict[int, list[int]] = {}
    for v in range(h.n):
        h_by_color.setdefault(hcol[v], []).append(v)

    # Most-constrained first: small color class, then high degree.
    class_size = {c: len(vs) for c, vs in h_by_color.items()}
    order = sorted(range(g.n), key=lambda v: (class_size[gcol[v]], -g.degree(v), v))

    mapping: dict[int, int] = {}
    used = [False] * h.n
    if seed:
        for v, w in seed.items():
            if gcol[v] != hcol[w] or used[w]:
                return None
            mapping[v] = w
            used[w] = True
        for v1 in seed:
            for v2 in seed:
                if v1 < v2 and g.has_edge(v1, v2) != h.has_edge(seed[v1], seed[v2]):
                    return None
        order = [v for v in order if v not in seed]

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in h_by_color.get(gcol[v], ()):
            if used[w]:
                continue
            ok = True
            for u in g.neighbors(v):
                if u in mapping and not h.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                # Non-edges must map to non-edges too (counts are equal, but
                # check locally so failures prune early).
                for u in mapping:
                    if not g.has_edge(v, u) and h.has_edge(w, mapping[u]):
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    if extend(0):
        return dict(mapping)
    return None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbit representative (smallest member) of every vertex.

    Orbits are joined by seeding v -> w into the isomorphism search of the
    graph against itself, so this is exact, not a refinement approximation.
    """
    colors = _refine_colors(g, [0] * g.n)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in range(g.n):
        for w in range(v + 1, g.n):
            if colors[v] != colors[w] or find(v) == find(w):
                continue
            if find_isomorphism(g, g, seed={v: w}) is not None:
                rv, rw = find(v), find(w)
                if rv < rw:
                    parent[rw] = rv
                else:
                    parent[rv] = rw
    return [find(v) for v in range(g.n)]


def _invariant_key(g: Graph) -> tuple:
    """Cheap isomorphism-invariant fingerprint used to bucket candidates."""
    colors = _refine_colors(g, [0] * g.n)
    per_vertex = sorted(
        (colors[v], g.degree(v), tuple(sorted(colors[u] for u in g.neighbors(v))))
        for v in range(g.n))
    triangles = sum(1 for u, v in g.edges() for w in g.neighbors(u)
                    if w > v and g.has_edge(v, w))
    return (g.n, g.m, triangles, tuple(per_vertex))


# -- enumeration ---------------------------------------------------------------


def _connected_mask(n: int, adj_masks: list[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= adj_masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


@lru_cache(maxsize=None)
def _enumerate_connected_cached(n: int) -> tuple[Graph, ...]:
    pairs = list(itertools.combinations(range(n), 2))
    reps: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for mask in range(1 << len(pairs)):
        adj_masks = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                adj_masks[u] |= 1 << v
                adj_masks[v] |= 1 << u
        if n > 1 and not _connected_mask(n, adj_masks):
            continue
        g = Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])
        key = _invariant_key(g)
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic(g, other) for other in bucket):
            bucket.append(g)
            reps.append(g)
    return tuple(reps)


def enumerate_connected(n: int, allow_slow: bool = False) -> tuple[Graph, ...]:
    """All connected simple graphs on n vertices up to isomorphism.

    Brute force over labeled graphs with isomorphism dedup. n = 7 takes a
    few minutes and must be opted into; n > 7 is rejected outright.
    """
    if n < 1:
        raise GraphError("enumeration needs n >= 1")
    if n > 7:
        raise GraphError("enumeration limited to n <= 7")
    if n == 7 and not allow_slow:
        raise GraphError("n = 7 enumeration is slow; pass allow_slow=True")
    return _enumerate_connected_cached(n)
