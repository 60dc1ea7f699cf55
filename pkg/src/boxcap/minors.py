"""Minor operations, branch-set witnesses, and exact minor-containment search.

A minor script is an explicit ordered list of vertex deletions, edge
deletions, and edge contractions, executed under the simple-graph
convention (contractions drop loops and parallel edges). Scripts reference
vertices by hashable keys so the same machinery runs on plain integer
vertices and on product coordinates (g, h).

has_minor decides pattern-in-host containment exactly, returning a
branch-set witness that verify_witness (an independent checker) accepts.
Minor containment is NP-hard in general, so the search carries an explicit
node budget; exhausting it raises BudgetExceededError rather than ever
returning a wrong answer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional, Sequence, Union

from boxcap.graphs import (Graph, automorphism_orbits, biconnected_blocks,
                           is_biconnected, is_planar)

Key = Hashable

DEFAULT_NODE_BUDGET = 4_000_000


class ScriptError(ValueError):
    """A minor operation referenced a vertex or edge that does not exist."""


class BudgetExceededError(RuntimeError):
    """Raised when a bounded search gives up: undecided, never wrong."""


# -- operations ----------------------------------------------------------------


@dataclass(frozen=True)
class DeleteVertex:
    v: Key


@dataclass(frozen=True)
class DeleteEdge:
    u: Key
    v: Key


@dataclass(frozen=True)
class ContractEdge:
    u: Key
    v: Key
    label: Optional[Key] = None  # merged vertex keeps u's key when omitted


MinorOp = Union[DeleteVertex, DeleteEdge, ContractEdge]


@dataclass(frozen=True)
class MinorScript:
    """An ordered operation sequence against a named base graph."""

    base: str
    ops: tuple[MinorOp, ...]

    def __iter__(self):
        return iter(self.ops)


@dataclass
class MinorWitness:
    """A branch-set model proving pattern <= host.

    branch_sets[a] is the host vertex set contracted to pattern vertex a;
    edge_assignment maps each pattern edge (a, b), a < b, to a host edge
    joining branch_sets[a] to branch_sets[b].
    """

    branch_sets: tuple[frozenset[int], ...]
    edge_assignment: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)


# -- script execution ----------------------------------------------------------


class _Workspace:
    """Mutable keyed graph tracking contraction classes of original vertices."""

    def __init__(self, base: Graph, keys: Optional[Sequence[Key]]):
        if keys is None:
            keys = list(range(base.n))
        if len(keys) != base.n or len(set(keys)) != base.n:
            raise ScriptError("vertex keys must be distinct and cover the base graph")
        self.order: list[Key] = list(keys)
        self.adj: dict[Key, set[Key]] = {k: set() for k in keys}
        self.cls: dict[Key, list[int]] = {k: [v] for v, k in enumerate(keys)}
        for u, v in base.edges():
            self.adj[keys[u]].add(keys[v])
            self.adj[keys[v]].add(keys[u])

    def require_vertex(self, k: Key):
        if k not in self.adj:
            raise ScriptError(f"vertex {k!r} does not exist at this point")

    def require_edge(self, u: Key, v: Key):
        self.require_vertex(u)
        self.require_vertex(v)
        if v not in self.adj[u]:
            raise ScriptError(f"edge ({u!r}, {v!r}) does not exist at this point")

    def delete_vertex(self, v: Key):
        self.require_vertex(v)
        for w in self.adj[v]:
            self.adj[w].discard(v)
        del self.adj[v]
        del self.cls[v]
        self.order.remove(v)

    def delete_edge(self, u: Key, v: Key):
        self.require_edge(u, v)
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def contract_edge(self, u: Key, v: Key, label: Optional[Key]):
        self.require_edge(u, v)
        new = u if label is None else label
        if new != u and new != v and new in self.adj:
            raise ScriptError(f"contraction label {new!r} is already a vertex")
        merged = (self.adj[u] | self.adj[v]) - {u, v}
        merged_cls = self.cls[u] + self.cls[v]
        for w in self.adj[u]:
            self.adj[w].discard(u)
        for w in self.adj[v]:
            self.adj[w].discard(v)
        del self.adj[u], self.cls[u]
        del self.adj[v], self.cls[v]
        if new == v:
            self.order.remove(u)
        else:
            self.order[self.order.index(u)] = new
            self.order.remove(v)
        self.adj[new] = set(merged)
        self.cls[new] = merged_cls
        for w in merged:
            self.adj[w].add(new)

    def run(self, ops: Iterable[MinorOp]):
        for i, op in enumerate(ops):
            try:
                if isinstance(op, DeleteVertex):
                    self.delete_vertex(op.v)
                elif isinstance(op, DeleteEdge):
                    self.delete_edge(op.u, op.v)
                elif isinstance(op, ContractEdge):
                    self.contract_edge(op.u, op.v, op.label)
                else:
                    raise ScriptError(f"unknown operation {op!r}")
            except ScriptError as exc:
                raise ScriptError(f"op {i} ({type(op).__name__}): {exc}") from None

    def to_graph(self) -> Graph:
        pos = {k: i for i, k in enumerate(self.order)}
        edges = [(pos[u], pos[v]) for u in self.order for v in self.adj[u] if pos[u] < pos[v]]
        labels = {i: _key_text(k) for i, k in enumerate(self.order)}
        return Graph(len(self.order), edges, labels=labels)


def _ops_of(script) -> Iterable[MinorOp]:
    if isinstance(script, MinorScript):
        return script.ops
    return tuple(script)


def apply_script(base: Graph, script, keys: Optional[Sequence[Key]] = None) -> Graph:
    """Execute a minor script on the base graph and return the result.

    Resulting vertices are renumbered densely in surviving key order
    (a contraction occupies the slot of its first endpoint); the original
    keys survive as text labels.
    """
    ws = _Workspace(base, keys)
    ws.run(_ops_of(script))
    return ws.to_graph()


def script_to_witness(base: Graph, script, keys: Optional[Sequence[Key]] = None) -> MinorWitness:
    """Replay a script while tracking contraction classes into a witness.

    The witness pattern is apply_script(base, script); branch sets are the
    classes of surviving vertices, and each surviving pattern edge is backed
    by some base edge between its two classes.
    """
    ws = _Workspace(base, keys)
    ws.run(_ops_of(script))
    pos = {k: i for i, k in enumerate(ws.order)}
    branch_sets = tuple(frozenset(ws.cls[k]) for k in ws.order)
    assignment: dict[tuple[int, int], tuple[int, int]] = {}
    for k in ws.order:
        for k2 in ws.adj[k]:
            a, b = pos[k], pos[k2]
            if a >= b:
                continue
            edge = _host_edge_between(base, branch_sets[a], branch_sets[b])
            if edge is None:
                raise ScriptError(
                    f"internal: no base edge backs pattern edge ({k!r}, {k2!r})")
            assignment[(a, b)] = edge
    return MinorWitness(branch_sets, assignment)


def _host_edge_between(host: Graph, sa: frozenset[int], sb: frozenset[int]):
    for u in sorted(sa):
        hits = host.neighbors(u) & sb
        if hits:
            return (u, min(hits))
    return None


# -- witness verification (independent of the search path) ----------------------


def verify_witness(host: Graph, pattern: Graph, witness: MinorWitness) -> bool:
    """Check every branch-set model invariant; False on any defect."""
    try:
        sets = witness.branch_sets
        if len(sets) != pattern.n:
            return False
        seen: set[int] = set()
        for s in sets:
            if not s:
                return False
            for v in s:
                if not (0 <= v < host.n) or v in seen:
                    return False
                seen.add(v)
        for s in sets:
            if not _induces_connected(host, s):
                return False
        for a, b in pattern.edges():
            key = (a, b) if (a, b) in witness.edge_assignment else (b, a)
            if key not in witness.edge_assignment:
                return False
            u, v = witness.edge_assignment[key]
            if not host.has_edge(u, v):
                return False
            sa, sb = sets[key[0]], sets[key[1]]
            if not ((u in sa and v in sb) or (u in sb and v in sa)):
                return False
        return True
    except (TypeError, ValueError, IndexError, KeyError):
        return False


def _induces_connected(host: Graph, vs: frozenset[int]) -> bool:
    start = next(iter(vs))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in host.neighbors(v):
            if w in vs and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vs)


# -- host preprocessing ----------------------------------------------------------
#
# Long induced paths of degree-2 vertices (threads) can be shortened before
# searching: a model of a k-vertex pattern either leaves some thread vertex
# unused, or places two adjacent thread vertices in one branch set, or
# tiles the interior with single-vertex runs of distinct branch sets. A run
# without a thread endpoint cannot reach the rest of its branch set, so
# each set has at most one run except the set holding both endpoints, and
# the interior has at most k+1 vertices. In every case an interior longer
# than k+1 admits a containment-preserving contraction, so capping at k+1
# is sound; the same argument caps an all-degree-2 cycle at max(3, k+1).


def _reduce_threads(host: Graph, cap: int):
    """Contract over-long degree-2 threads; returns (graph, classes)."""
    cap = max(cap, 2)
    adj = {v: set(host.neighbors(v)) for v in range(host.n)}
    cls = {v: [v] for v in range(host.n)}

    def contract(u, v):
        adj[u].discard(v)
        adj[v].discard(u)
        for w in adj[v]:
            adj[w].discard(v)
            adj[w].add(u)
            adj[u].add(w)
        cls[u].extend(cls[v])
        del adj[v], cls[v]

    def shorten(chain, target):
        while len(chain) > target:
            contract(chain[0], chain[1])
            del chain[1]

    visited: set[int] = set()
    for b in list(adj):
        if b not in adj or len(adj[b]) == 2:
            continue
        for nb in sorted(adj[b]):
            if nb in visited or nb not in adj or len(adj[nb]) != 2:
                continue
            chain = []
            prev, cur = b, nb
            while cur in adj and len(adj[cur]) == 2 and cur not in visited:
                visited.add(cur)
                chain.append(cur)
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
            shorten(chain, cap)
    # Components that are bare cycles have no branch vertex to walk from.
    for v in list(adj):
        if v not in adj or v in visited or len(adj[v]) != 2:
            continue
        cycle = []
        prev, cur = None, v
        while cur not in visited:
            visited.add(cur)
            cycle.append(cur)
            nxt = [w for w in sorted(adj[cur]) if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
        shorten(cycle, max(cap, 3))

    if len(adj) == host.n:
        return host, None
    order = sorted(adj)
    pos = {k: i for i, k in enumerate(order)}
    edges = [(pos[u], pos[v]) for u in order for v in adj[u] if pos[u] < pos[v]]
    classes = [frozenset(cls[k]) for k in order]
    return Graph(len(order), edges), classes


# -- exact minor search -----------------------------------------------------------


def _pattern_order(pattern: Graph) -> list[int]:
    """Highest degree first, then greedily maximize adjacency to placed vertices."""
    if pattern.n == 0:
        return []
    placed: list[int] = []
    remaining = set(range(pattern.n))
    first = max(remaining, key=lambda v: (pattern.degree(v), -v))
    placed.append(first)
    remaining.discard(first)
    while remaining:
        nxt = max(remaining, key=lambda v: (
            sum(1 for u in pattern.neighbors(v) if u in placed),
            pattern.degree(v), -v))
        placed.append(nxt)
        remaining.discard(nxt)
    return placed


def has_minor(host: Graph, pattern: Graph,
              node_budget: Optional[int] = None) -> Optional[MinorWitness]:
    """Search for a branch-set model of pattern inside host.

    Exact: returns a verified witness when the pattern is a minor, None when
    it is not, and raises BudgetExceededError when the node budget runs out
    before either is established. Deterministic for fixed inputs (first
    model in canonical DFS order). Intended scale: patterns up to ~16
    vertices, hosts up to ~35 after thread reduction.
    """
    budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
    if pattern.n == 0:
        return MinorWitness(())
    if pattern.n > host.n or pattern.m > host.m:
        return None

    # Minors of planar graphs stay planar, so a nonplanar pattern inside a
    # planar host is impossible; this resolves the otherwise hardest
    # negative instances immediately.
    if pattern.n >= 5 and not _is_planar_cached(pattern) and _is_planar_cached(host):
        return None

    if pattern.n >= 3 and is_biconnected(pattern):
        # A 2-connected pattern is a minor of the host exactly when it is a
        # minor of one of the host's blocks.
        remaining = budget
        for block in biconnected_blocks(host):
            if len(block) < pattern.n:
                continue
            order_map = sorted(block)
            sub = host.induced_subgraph(order_map)
            if pattern.m > sub.m:
                continue
            witness = _minor_on_connected(sub, pattern, remaining)
            if witness is not None:
                lifted = tuple(frozenset(order_map[v] for v in s)
                               for s in witness.branch_sets)
                return _with_assignment(host, pattern, lifted)
        return None
    return _minor_on_connected(host, pattern, budget)


def _minor_on_connected(host: Graph, pattern: Graph, budget: int):
    reduced, classes = _reduce_threads(host, pattern.n + 1)
    if pattern.n > reduced.n or pattern.m > reduced.m:
        return None
    # Symmetric hosts make the top search level churn through equivalent
    # choices; restricting the first branch set's root to one vertex per
    # automorphism orbit is sound because any model can be mapped so that
    # it meets a representative.
    roots = None
    if reduced.n >= 10:
        orbit_rep = automorphism_orbits(reduced)
        roots = sorted(set(orbit_rep))
    # Two complementary candidate orders: a budget slice tries chunky
    # low-waste branch sets first (contraction-heavy models show up fast),
    # then the canonical lazy order gets the rest of the budget. A finished
    # search is exhaustive under either order, so None from the probe is
    # final and the fallback only runs when the probe hits its slice.
    probe = max(budget // 8, 50_000)
    try:
        masks = _search_branch_sets(reduced, pattern, probe, chunk_first=True,
                                    step0_roots=roots)
    except BudgetExceededError:
        masks = _search_branch_sets(reduced, pattern, budget, chunk_first=False,
                                    step0_roots=roots)
    if masks is None:
        return None
    order = _pattern_order(pattern)
    sets_by_pattern: list[frozenset[int]] = [frozenset()] * pattern.n
    for step, pv in enumerate(order):
        vs = frozenset(_bits(masks[step]))
        if classes is not None:
            vs = frozenset(v for r in vs for v in classes[r])
        sets_by_pattern[pv] = vs
    return _with_assignment(host, pattern, tuple(sets_by_pattern))


def _with_assignment(host: Graph, pattern: Graph,
                     sets_by_pattern: tuple[frozenset[int], ...]) -> MinorWitness:
    assignment: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b in pattern.edges():
        edge = _host_edge_between(host, sets_by_pattern[a], sets_by_pattern[b])
        if edge is None:
            raise RuntimeError("internal: search produced an unbacked pattern edge")
        assignment[(a, b)] = edge
    return MinorWitness(sets_by_pattern, assignment)


_planarity_cache: dict[Graph, bool] = {}


def _is_planar_cached(g: Graph) -> bool:
    cached = _planarity_cache.get(g)
    if cached is None:
        if len(_planarity_cache) > 4096:
            _planarity_cache.clear()
        cached = _planarity_cache[g] = is_planar(g)
    return cached


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _search_branch_sets(host: Graph, pattern: Graph, budget: int,
                        chunk_first: bool = False,
                        step0_roots=None):
    """Core DFS: assign a connected host vertex set to each pattern vertex.

    Pruning: per-step size caps from the global edge slack (every extra
    branch-set vertex costs one internal host edge) and the vertex count,
    adjacency to every previously placed pattern neighbor, and enough host
    edges from the candidate set toward untouched vertices to serve the
    pattern neighbors still to come. Candidate sets are enumerated exactly
    once via a canonical least-root extension scheme.
    """
    n = host.n
    k = pattern.n
    adj = [0] * n
    for u, v in host.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1
    popcount = int.bit_count if hasattr(int, "bit_count") else lambda x: bin(x).count("1")

    order = _pattern_order(pattern)
    pos_of = {pv: i for i, pv in enumerate(order)}
    anchors: list[list[int]] = []
    future_deg: list[int] = []
    for i, pv in enumerate(order):
        nb_steps = [pos_of[u] for u in pattern.neighbors(pv)]
        anchors.append(sorted(j for j in nb_steps if j < i))
        future_deg.append(sum(1 for j in nb_steps if j > i))

    edge_slack = host.m - pattern.m
    vertex_slack = n - k
    branch: list[int] = [0] * k
    nodes = [budget]

    def nbhd(mask: int) -> int:
        out = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            out |= adj[low.bit_length() - 1]
        return out

    edge_deg = [0] * n  # host degree per vertex, for waste accounting
    for v in range(n):
        edge_deg[v] = popcount(adj[v])

    # Forward-check state: each placed set must keep one free-region host
    # edge per pattern edge it still owes to unplaced neighbors.
    want_left = [0] * k
    boundary_left = [0] * k

    def grow(i: int, root: int, allowed: int, used: int, size_cap: int,
             anc_masks: list[int], placed: list[tuple[int, bool]], waste_cap: int):
        """Connected supersets of {root} within allowed, each exactly once.

        Classic extension scheme: candidates are processed in ascending
        order and a declined vertex is excluded from the whole remaining
        subtree of its level, which makes every subset appear once. Edge
        waste (host edges beyond a spanning tree, contacts with placed sets
        beyond one per owed pattern edge) grows monotonically with the set,
        so over-budget growth is cut off early, as is growth that eats a
        placed set's remaining boundary. Emitted candidates come with their
        waste and per-placed-set contact counts for the caller.
        """
        want = future_deg[i]
        not_used = full & ~used
        placed_masks = [pm for pm, _ in placed]
        allowance = [1 if is_anchor else 0 for _, is_anchor in placed]
        np = len(placed)

        def rec(bmask: int, bnbhd: int, ext: int, excl: int, size: int,
                waste: int, contacts: list[int]):
            nodes[0] -= 1
            if nodes[0] < 0:
                raise BudgetExceededError("undecided: budget")
            ok = True
            for am in anc_masks:
                if not (bnbhd & am):
                    ok = False
                    break
            if ok:
                avail = not_used & ~bmask
                ext_edges = 0
                m = bmask
                while m and ext_edges < want:
                    low = m & -m
                    m ^= low
                    ext_edges += popcount(adj[low.bit_length() - 1] & avail)
                if ext_edges >= want:
                    yield bmask, waste, contacts
            if size >= size_cap:
                return
            e = ext
            excl_local = excl
            while e:
                low = e & -e
                e ^= low
                v = low.bit_length() - 1
                av = adj[v]
                new_waste = waste + popcount(av & bmask) - 1
                if new_waste <= waste_cap:
                    new_contacts = contacts
                    feasible = True
                    if np:
                        new_contacts = contacts[:]
                        for idx in range(np):
                            pm = placed_masks[idx]
                            if av & pm:
                                c = new_contacts[idx] + popcount(av & pm)
                                new_contacts[idx] = c
                                over = c - allowance[idx]
                                if over > 0:
                                    new_waste += popcount(av & pm) \
                                        if c - popcount(av & pm) >= allowance[idx] \
                                        else over
                                if new_waste > waste_cap or \
                                        boundary_left[idx] - c < want_left[idx] - allowance[idx]:
                                    feasible = False
                                    break
                    if feasible:
                        new_b = bmask | low
                        new_ext = (e | (av & allowed)) & ~new_b & ~excl_local
                        yield from rec(new_b, bnbhd | av, new_ext, excl_local,
                                       size + 1, new_waste, new_contacts)
                excl_local |= low

        root_contacts = [0] * np
        root_waste = 0
        av = adj[root]
        feasible = True
        for idx in range(np):
            pm = placed_masks[idx]
            if av & pm:
                c = popcount(av & pm)
                root_contacts[idx] = c
                root_waste += max(0, c - allowance[idx])
                if boundary_left[idx] - c < want_left[idx] - allowance[idx]:
                    feasible = False
                    break
        if feasible and root_waste <= waste_cap:
            yield from rec(1 << root, av, av & allowed, 0, 1, root_waste, root_contacts)

    def candidates(i: int, used: int, spent: int, waste: int):
        """Candidate branch sets for step i, canonical order, least roots first."""
        size_cap = 1 + min(edge_slack - spent - waste, vertex_slack - spent)
        if size_cap < 1:
            return
        anchor_set = set(anchors[i])
        anc_masks = [branch[j] for j in anchors[i]]
        placed = [(branch[j], j in anchor_set) for j in range(i)]
        waste_cap = edge_slack - spent - waste
        if anc_masks:
            # Roots may be limited to the free neighborhood of one placed
            # pattern neighbor; pick the tightest such pool.
            pools = sorted((popcount(nbhd(am) & ~used), kk) for kk, am in enumerate(anc_masks))
            if pools[0][0] == 0:
                return
            root_pool = nbhd(anc_masks[pools[0][1]]) & ~used
        elif i == 0 and step0_roots is not None:
            # Orbit representatives only; without the least-root convention
            # duplicates are possible, so do not ban smaller vertices.
            for root in step0_roots:
                allowed = full & ~(1 << root)
                yield from grow(i, root, allowed, used, size_cap, anc_masks, placed, waste_cap)
            return
        else:
            root_pool = full & ~used
        banned = 0
        for root in _bits(root_pool):
            allowed = full & ~used & ~banned & ~(1 << root)
            yield from grow(i, root, allowed, used, size_cap, anc_masks, placed, waste_cap)
            banned |= 1 << root

    def solve(i: int, used: int, spent: int, waste: int) -> bool:
        if i == k:
            return True
        anchor_set = set(anchors[i])
        if chunk_first:
            # Snug chunks first: least provable waste, then larger sets.
            # Models at tight slack contract whole fibers, and committing
            # to a chunk early beats a flood of singleton prefixes.
            cands = sorted(candidates(i, used, spent, waste),
                           key=lambda t: (t[1], -popcount(t[0]), t[0]))
        else:
            cands = candidates(i, used, spent, waste)
        for cand, cand_waste, to_placed in cands:
            size = popcount(cand)
            if spent + size - 1 + waste + cand_waste > edge_slack:
                continue
            branch[i] = cand
            avail = full & ~used & ~cand
            ext_edges = 0
            m = cand
            while m:
                low = m & -m
                m ^= low
                ext_edges += popcount(adj[low.bit_length() - 1] & avail)
            want_left[i] = future_deg[i]
            boundary_left[i] = ext_edges
            for j in range(i):
                boundary_left[j] -= to_placed[j]
                if j in anchor_set:
                    want_left[j] -= 1
            if solve(i + 1, used | cand, spent + size - 1, waste + cand_waste):
                return True
            for j in range(i):
                boundary_left[j] += to_placed[j]
                if j in anchor_set:
                    want_left[j] += 1
            branch[i] = 0
        return False

    if solve(0, 0, 0, 0):
        return list(branch)
    return None


# -- JSON forms -------------------------------------------------------------------


def _key_text(key: Key) -> str:
    if isinstance(key, tuple):
        return ":".join(str(part) for part in key)
    return str(key)


def _key_from_text(text: str) -> Key:
    if ":" in text:
        return tuple(int(p) if p.lstrip("-").isdigit() else p for p in text.split(":"))
    if text.lstrip("-").isdigit():
        return int(text)
    return text


def script_to_json(script: MinorScript) -> dict:
    ops = []
    for op in script.ops:
        if isinstance(op, DeleteVertex):
            ops.append({"op": "deleteVertex", "v": _key_text(op.v)})
        elif isinstance(op, DeleteEdge):
            ops.append({"op": "deleteEdge", "u": _key_text(op.u), "v": _key_text(op.v)})
        else:
            entry = {"op": "contractEdge", "u": _key_text(op.u), "v": _key_text(op.v)}
            if op.label is not None:
                entry["label"] = _key_text(op.label)
            ops.append(entry)
    return {"base": script.base, "ops": ops}


def script_from_json(data: dict) -> MinorScript:
    ops: list[MinorOp] = []
    for entry in data["ops"]:
        kind = entry["op"]
        if kind == "deleteVertex":
            ops.append(DeleteVertex(_key_from_text(entry["v"])))
        elif kind == "deleteEdge":
            ops.append(DeleteEdge(_key_from_text(entry["u"]), _key_from_text(entry["v"])))
        elif kind == "contractEdge":
            label = entry.get("label")
            ops.append(ContractEdge(_key_from_text(entry["u"]), _key_from_text(entry["v"]),
                                    _key_from_text(label) if label is not None else None))
        else:
            raise ScriptError(f"unknown op kind {kind!r}")
    return MinorScript(data.get("base", ""), tuple(ops))


def witness_to_json(witness: MinorWitness, host_labels=None, pattern_labels=None) -> dict:
    def hlab(v: int) -> str:
        return host_labels[v] if host_labels else str(v)

    def plab(a: int) -> str:
        return pattern_labels[a] if pattern_labels else str(a)

    return {
        "branchSets": {plab(a): sorted(hlab(v) for v in s)
                       for a, s in enumerate(witness.branch_sets)},
        "edgeAssignment": {f"{plab(a)}--{plab(b)}": [hlab(u), hlab(v)]
                           for (a, b), (u, v) in sorted(witness.edge_assignment.items())},
    }


def witness_to_script(host: Graph, pattern: Graph, witness: MinorWitness,
                      keys: Optional[Sequence[Key]] = None,
                      pattern_keys: Optional[Sequence[Key]] = None
                      ) -> tuple[MinorScript, dict[int, Key]]:
    """Turn a branch-set witness into an explicit operation script.

    Deletes unused host vertices, contracts each branch set along a spanning
    tree (the merged vertex takes the pattern key), then deletes surplus
    edges so the result is exactly the pattern. Singleton branch sets keep
    their host key, so the returned map gives the final key of every pattern
    vertex.
    """
    if keys is None:
        keys = list(range(host.n))
    if pattern_keys is None:
        pattern_keys = list(range(pattern.n))
    used = set()
    for s in witness.branch_sets:
        used.update(s)
    ops: list[MinorOp] = [DeleteVertex(keys[v]) for v in range(host.n) if v not in used]
    final_key: dict[int, Key] = {}
    for a, s in enumerate(witness.branch_sets):
        root = min(s)
        seen = {root}
        current_key: Key = keys[root]
        frontier = deque([root])
        tree_order = []
        while frontier:
            v = frontier.popleft()
            for w in sorted(host.neighbors(v)):
                if w in s and w not in seen:
                    seen.add(w)
                    tree_order.append(w)
                    frontier.append(w)
        for w in tree_order:
            ops.append(ContractEdge(current_key, keys[w], pattern_keys[a]))
            current_key = pattern_keys[a]
        final_key[a] = current_key
    for a, b in _realized_edges(host, witness):
        if not pattern.has_edge(a, b):
            ops.append(DeleteEdge(final_key[a], final_key[b]))
    return MinorScript("witness", tuple(ops)), final_key


def _realized_edges(host: Graph, witness: MinorWitness):
    sets = witness.branch_sets
    for a in range(len(sets)):
        for b in range(a + 1, len(sets)):
            if _host_edge_between(host, sets[a], sets[b]) is not None:
                yield (a, b)
