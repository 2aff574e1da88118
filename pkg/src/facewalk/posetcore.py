"""Graded-poset cover graphs, listing checkers, and brute-force oracles.

Every face-lattice family in this package reduces to the same small data
model: elements carry a rank (the face dimension, with the bottom element
at rank -1), the cover graph joins elements whose ranks differ by one, and
a listing is a sequence of element ids that may close up cyclically.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

EMPTY = "EMPTY"

DEFAULT_BUDGET = 5000


class BudgetExceededError(Exception):
    """An oracle was asked to handle an instance above its vertex budget."""


def oracle_budget(default: int = DEFAULT_BUDGET) -> int:
    """Vertex budget for brute-force oracles, overridable via FACEWALK_BUDGET."""
    raw = os.environ.get("FACEWALK_BUDGET")
    if raw is None:
        return default
    return int(raw)


@dataclass(frozen=True)
class Report:
    """Outcome of a verification: pass, or the first violation found."""

    ok: bool
    position: Optional[int] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok

    def format(self) -> str:
        if self.ok:
            return "OK"
        pos = "-" if self.position is None else str(self.position)
        return f"FAIL {pos} {self.reason}"


class CoverGraph:
    """Cover graph of a graded poset: ranked elements, rank-1-difference edges."""

    def __init__(self, ranks: Mapping[str, int], edges: Iterable[tuple[str, str]]):
        self.ranks = dict(ranks)
        adj: dict[str, list[str]] = {v: [] for v in self.ranks}
        edge_set: set[tuple[str, str]] = set()
        for a, b in edges:
            if a not in self.ranks or b not in self.ranks:
                raise ValueError(f"edge ({a},{b}) mentions unknown element")
            if abs(self.ranks[a] - self.ranks[b]) != 1:
                raise ValueError(
                    f"edge ({a},{b}) joins ranks {self.ranks[a]},{self.ranks[b]}"
                )
            key = (a, b) if a < b else (b, a)
            if key in edge_set:
                continue
            edge_set.add(key)
            adj[a].append(b)
            adj[b].append(a)
        self.edges = edge_set
        self.adj = {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def __len__(self) -> int:
        return len(self.ranks)

    def has_edge(self, a: str, b: str) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edges

    def degree(self, v: str) -> int:
        return len(self.adj[v])


@dataclass(frozen=True)
class Listing:
    """A sequence of element ids, optionally cyclic."""

    ids: tuple[str, ...]
    cyclic: bool = True

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self) -> Iterator[str]:
        return iter(self.ids)

    def header(self, family: str, n: int) -> str:
        return f"#family={family} n={n} cyclic={1 if self.cyclic else 0}"

    def dump(self, family: str, n: int) -> str:
        return "\n".join([self.header(family, n), *self.ids]) + "\n"

    @staticmethod
    def parse(text: str) -> tuple["Listing", dict[str, str]]:
        """Parse the one-id-per-line format; returns (listing, header fields)."""
        lines = text.splitlines()
        meta: dict[str, str] = {}
        ids: list[str] = []
        for line in lines:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    if "=" in tok:
                        k, v = tok.split("=", 1)
                        meta[k] = v
                continue
            ids.append(line)
        cyclic = meta.get("cyclic", "1") != "0"
        return Listing(tuple(ids), cyclic), meta


def check_hamiltonian(graph: CoverGraph, listing: Listing) -> Report:
    """Pass iff the listing visits every element exactly once along cover edges.

    When the listing is cyclic the wrap-around pair must be an edge too.
    """
    seen: dict[str, int] = {}
    for pos, v in enumerate(listing.ids):
        if v not in graph.ranks:
            return Report(False, pos, f"unknown id {v!r}")
        if v in seen:
            return Report(False, pos, f"duplicate id {v!r} (first at {seen[v]})")
        seen[v] = pos
    if len(listing.ids) != len(graph.ranks):
        return Report(
            False,
            None,
            f"not spanning: {len(listing.ids)} of {len(graph.ranks)} elements",
        )
    ids = listing.ids
    last = len(ids) - 1
    for pos in range(last):
        if not graph.has_edge(ids[pos], ids[pos + 1]):
            return Report(
                False, pos, f"pair ({ids[pos]},{ids[pos + 1]}) is not a cover edge"
            )
    if listing.cyclic and len(ids) > 1:
        if not graph.has_edge(ids[last], ids[0]):
            return Report(
                False, last, f"wrap pair ({ids[last]},{ids[0]}) is not a cover edge"
            )
    return Report(True)


def brute_force_hamiltonian(
    graph: CoverGraph, budget: Optional[int] = None
) -> Optional[Listing]:
    """Backtracking Hamiltonian-cycle oracle for small cover graphs.

    Branches are ordered by ascending remaining degree (fail-first), ties by
    id, so the result is deterministic.  Returns None when no cycle exists.
    """
    limit = oracle_budget() if budget is None else budget
    nv = len(graph.ranks)
    if nv > limit:
        raise BudgetExceededError(f"instance too large: {nv} > budget {limit}")
    if nv == 0:
        return None
    if nv == 1:
        return None
    if nv == 2:
        a, b = sorted(graph.ranks)
        if graph.has_edge(a, b):
            return Listing((a, b), cyclic=True)
        return None

    start = min(graph.ranks)
    adj = graph.adj
    visited = {start}
    path = [start]
    # remaining degree = neighbours not yet on the path
    rdeg = {v: len(adj[v]) for v in graph.ranks}

    def extend() -> bool:
        if len(path) == nv:
            return graph.has_edge(path[-1], start)
        cur = path[-1]
        cand = [w for w in adj[cur] if w not in visited]
        cand.sort(key=lambda w: (rdeg[w], w))
        for w in cand:
            visited.add(w)
            path.append(w)
            for u in adj[w]:
                rdeg[u] -= 1
            # A vertex whose unvisited neighbours are exhausted can only be
            # reached via w, and then only as the final vertex of the cycle.
            ok = True
            if len(path) < nv:
                for u in adj[w]:
                    if u not in visited and rdeg[u] == 0:
                        if not (len(path) == nv - 1 and graph.has_edge(u, start)):
                            ok = False
                            break
            if ok and extend():
                return True
            for u in adj[w]:
                rdeg[u] += 1
            path.pop()
            visited.remove(w)
        return False

    for u in adj[start]:
        rdeg[u] -= 1
    if extend():
        found = Listing(tuple(path), cyclic=True)
        assert check_hamiltonian(graph, found).ok
        return found
    return None


def f_vector(ranks: Mapping[str, int]) -> tuple[int, ...]:
    """Counts (f_-1, f_0, ..., f_d); requires one bottom element at rank -1."""
    if not ranks:
        raise ValueError("empty element set")
    lo = min(ranks.values())
    hi = max(ranks.values())
    if lo != -1:
        raise ValueError("missing bottom element of rank -1")
    counts = [0] * (hi + 2)
    for r in ranks.values():
        counts[r + 1] += 1
    if counts[0] != 1:
        raise ValueError(f"expected exactly one rank -1 element, got {counts[0]}")
    if any(c == 0 for c in counts):
        raise ValueError("ranks are not contiguous")
    return tuple(counts)


def check_euler(f: Sequence[int]) -> bool:
    """True iff the alternating sum of the f-vector vanishes."""
    return sum((-1) ** i * fi for i, fi in enumerate(f)) == 0


def maximal_chains(graph: CoverGraph) -> Iterator[tuple[str, ...]]:
    """All bottom-to-top chains of the cover graph (brute-force helper)."""
    lo = min(graph.ranks.values())
    hi = max(graph.ranks.values())
    bottoms = sorted(v for v, r in graph.ranks.items() if r == lo)
    chain: list[str] = []

    def walk(v: str) -> Iterator[tuple[str, ...]]:
        chain.append(v)
        if graph.ranks[v] == hi:
            yield tuple(chain)
        else:
            for w in graph.adj[v]:
                if graph.ranks[w] == graph.ranks[v] + 1:
                    yield from walk(w)
        chain.pop()

    for b in bottoms:
        yield from walk(b)


def count_maximal_chains(graph: CoverGraph) -> int:
    """Number of bottom-to-top chains, by dynamic programming over ranks."""
    lo = min(graph.ranks.values())
    hi = max(graph.ranks.values())
    ways = {v: 1 for v, r in graph.ranks.items() if r == lo}
    for r in range(lo, hi):
        nxt: dict[str, int] = {}
        for v, w in ways.items():
            for u in graph.adj[v]:
                if graph.ranks[u] == r + 1:
                    nxt[u] = nxt.get(u, 0) + w
        ways = nxt
    return sum(ways.values())
