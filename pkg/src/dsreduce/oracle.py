"""Slow reference implementations for tests.

Everything here favors being obviously correct over being fast: set
arithmetic, full rescans, exponential search.  Production code paths
must never import this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph
from .pipeline import RelationSet, canonical_reference

EXACT_LIMIT = 24


@dataclass
class TypePartition:
    """Disjoint split of a reference vertex's neighbors."""

    n1: list[int]
    n2: list[int]
    n3: list[int]


@dataclass
class AnnotatedInstance:
    graph: Graph
    covered: bytearray

    @classmethod
    def fresh(cls, g: Graph) -> "AnnotatedInstance":
        return cls(g, bytearray(g.n))


def classify_types(g: Graph, covered: Optional[bytearray], rho: int) -> TypePartition:
    """Split N(rho) into escaping, escape-adjacent and enclosed vertices.

    A neighbor escapes (n1) when it has an edge to a vertex outside
    N[rho] that still needs domination; with no covered flags every
    outside vertex counts.  Neighbors adjacent to an escaping one form
    n2, the rest n3.
    """
    closed = set(g.adj[rho])
    closed.add(rho)
    n1 = []
    rest = []
    for u in g.adj[rho]:
        esc = False
        for w in g.adj[u]:
            if w in closed:
                continue
            if covered is None or not covered[w]:
                esc = True
                break
        (n1 if esc else rest).append(u)
    n1set = set(n1)
    n2 = []
    n3 = []
    for u in rest:
        if any(w in n1set for w in g.adj[u]):
            n2.append(u)
        else:
            n3.append(u)
    return TypePartition(n1, n2, n3)


def suitable_set_direct(
    g: Graph,
    covered: Optional[bytearray] = None,
    fixed: Optional[bytearray] = None,
) -> RelationSet:
    """Witness set straight from the definitions, one classify per vertex.

    Committed vertices behave like escapers: they are never witnesses
    and disqualify adjacent witnesses, matching the leaf gadget a
    literal reading would attach to them.  With covered flags the
    covered-aware escape predicate applies to the witness's classified
    neighbors, but the witness's own neighborhood must still sit inside
    N[reference]; covered witnesses are skipped.
    """
    pairs = []
    for rho in range(g.n):
        part = classify_types(g, covered, rho)
        closed = set(g.adj[rho])
        closed.add(rho)
        enclosed = set(part.n3)
        for u in g.adj[rho]:
            if u not in enclosed:
                continue
            if fixed is not None and fixed[u]:
                continue
            if covered is not None and covered[u]:
                continue
            if any(w not in closed for w in g.adj[u]):
                continue
            if fixed is not None and any(fixed[w] for w in g.adj[u] if w != rho):
                continue
            if canonical_reference(g, u) == rho:
                pairs.append((u, rho))
    return RelationSet(g.n, sorted(pairs))


def exhaustive_original_rule1(g: Graph) -> tuple[list[int], list[int]]:
    """Repeat the single-reference reduction until it no longer applies.

    Scans vertices in ascending id each time, fires on the first vertex
    with an enclosed neighbor, deletes that vertex's non-escaping
    neighbors, and restarts.  Committed vertices behave like escaping
    neighbors and are never picked as references again; this mirrors the
    leaf gadget that a straight reimplementation would attach to them.
    """
    n = g.n
    adj = [set(a) for a in g.adj]
    alive = bytearray([1] * n)
    fixed_mask = bytearray(n)
    fixed: list[int] = []
    removed: list[int] = []

    def escapes(u: int, closed: set[int]) -> bool:
        if fixed_mask[u]:
            return True
        return any(w not in closed for w in adj[u])

    while True:
        fired = False
        for rho in range(n):
            if not alive[rho] or fixed_mask[rho]:
                continue
            closed = adj[rho] | {rho}
            n1 = {u for u in adj[rho] if escapes(u, closed)}
            doomed = [
                u
                for u in adj[rho]
                if u not in n1 and not (adj[u] & n1)
            ]
            if not doomed:
                continue
            deletable = [u for u in adj[rho] if u not in n1]
            fixed_mask[rho] = 1
            fixed.append(rho)
            for u in deletable:
                alive[u] = 0
                for w in adj[u]:
                    adj[w].discard(u)
                adj[u].clear()
                removed.append(u)
            fired = True
            break
        if not fired:
            return fixed, removed


def exact_annotated_gamma(inst: AnnotatedInstance) -> tuple[int, list[int]]:
    """Minimum set dominating every vertex that still needs it.

    Branch and bound over bitmasks: pick the needy vertex with the
    fewest closed neighbors, try each of them as the next pick.  Only
    meant for tiny instances; refuses anything above EXACT_LIMIT.
    """
    g = inst.graph
    n = g.n
    if n > EXACT_LIMIT:
        raise ValueError(f"instance too large for exact search: n={n} > {EXACT_LIMIT}")
    if n == 0:
        return 0, []

    reach = [0] * n
    for v in range(n):
        b = 1 << v
        for w in g.adj[v]:
            b |= 1 << w
        reach[v] = b

    need0 = 0
    for v in range(n):
        if not inst.covered[v]:
            need0 |= 1 << v
    if need0 == 0:
        return 0, []

    cand = [[] for _ in range(n)]
    for v in range(n):
        members = [v] + list(g.adj[v])
        members.sort(key=lambda x: -bin(reach[x]).count("1"))
        cand[v] = members

    best_set: list[int] = []
    best = n + 1

    greedy_need = need0
    greedy_pick: list[int] = []
    while greedy_need:
        v = max(range(n), key=lambda x: bin(reach[x] & greedy_need).count("1"))
        greedy_pick.append(v)
        greedy_need &= ~reach[v]
    best = len(greedy_pick)
    best_set = greedy_pick

    chosen: list[int] = []

    def bb(need: int) -> None:
        nonlocal best, best_set
        if not need:
            if len(chosen) < best:
                best = len(chosen)
                best_set = list(chosen)
            return
        if len(chosen) + 1 >= best:
            return
        pick_from = -1
        pick_width = n + 2
        m = need
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            width = len(cand[v])
            if width < pick_width:
                pick_width = width
                pick_from = v
        for v in cand[pick_from]:
            chosen.append(v)
            bb(need & ~reach[v])
            chosen.pop()

    bb(need0)
    return best, sorted(best_set)
