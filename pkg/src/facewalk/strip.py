"""Rhombic strips: cylinder embeddings of cover-graph subgraphs.

A strip assigns every element an exact rational angular coordinate in
[0,1) at the height of its rank.  Edges run between consecutive ranks and
are drawn as straight lines on the cylinder; each edge takes the shortest
horizontal displacement (ties broken rightward), so coordinates fully
determine the embedding.  A valid strip is spanning, crossing-free, and
all of its faces are rhombi: 4-cycles spanning three consecutive ranks.

Sweeping a maximal chain left-to-right across the rhombi yields the
facet-Hamiltonian flag cycle of the omnitruncated polytope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from facewalk.posetcore import CoverGraph, Report


class StripError(Exception):
    """Structural problem that prevents interpreting or sweeping a strip."""


@dataclass(frozen=True)
class Rhombus:
    """One face of the embedding: bottom, top, and the two middle corners."""

    bottom: str
    top: str
    left: str
    right: str


class RhombicStrip:
    def __init__(
        self,
        ranks: Mapping[int, Sequence[tuple[str, Fraction]]],
        edges: Iterable[tuple[str, str]],
    ):
        self.ranks: dict[int, tuple[tuple[str, Fraction], ...]] = {}
        self.rank_of: dict[str, int] = {}
        self.x_of: dict[str, Fraction] = {}
        for r in sorted(ranks):
            row = tuple(sorted(((str(i), Fraction(x)) for i, x in ranks[r]), key=lambda p: p[1]))
            self.ranks[r] = row
            for i, x in row:
                if i in self.rank_of:
                    raise StripError(f"element {i!r} appears twice")
                if not (0 <= x < 1):
                    raise StripError(f"x coordinate of {i!r} outside [0,1): {x}")
                self.rank_of[i] = r
                self.x_of[i] = x
        norm = set()
        for a, b in edges:
            if a not in self.rank_of or b not in self.rank_of:
                raise StripError(f"edge ({a},{b}) mentions unknown element")
            ra, rb = self.rank_of[a], self.rank_of[b]
            if rb - ra == 1:
                norm.add((a, b))
            elif ra - rb == 1:
                norm.add((b, a))
            else:
                raise StripError(f"edge ({a},{b}) joins ranks {ra},{rb}")
        self.edges: tuple[tuple[str, str], ...] = tuple(sorted(norm))
        self.ups: dict[str, list[str]] = {i: [] for i in self.rank_of}
        self.downs: dict[str, list[str]] = {i: [] for i in self.rank_of}
        for lo, hi in self.edges:
            self.ups[lo].append(hi)
            self.downs[hi].append(lo)

    @property
    def r_min(self) -> int:
        return min(self.ranks)

    @property
    def r_max(self) -> int:
        return max(self.ranks)

    def __len__(self) -> int:
        return len(self.rank_of)

    def lift(self, lo: str, hi: str) -> Fraction:
        """Horizontal displacement of the edge drawn bottom-up, in (-1/2, 1/2]."""
        d = (self.x_of[hi] - self.x_of[lo]) % 1
        if d > Fraction(1, 2):
            d -= 1
        return d

    def _scaled(self) -> tuple[dict[str, int], int]:
        """Coordinates as integers over one common denominator (for speed)."""
        if not hasattr(self, "_scaled_cache"):
            from math import lcm

            denom = 1
            for x in self.x_of.values():
                denom = lcm(denom, x.denominator)
            xi = {i: int(x * denom) for i, x in self.x_of.items()}
            self._scaled_cache = (xi, denom)
        return self._scaled_cache

    def lift_int(self, lo: str, hi: str) -> int:
        xi, denom = self._scaled()
        d = (xi[hi] - xi[lo]) % denom
        if 2 * d > denom:
            d -= denom
        return d

    # -- serialization ----------------------------------------------------

    def dump(self, family: str, n: int) -> str:
        lines = [f"#strip family={family} n={n}"]
        for r in sorted(self.ranks):
            row = " ".join(f"{i}@{x.numerator}/{x.denominator}" for i, x in self.ranks[r])
            lines.append(f"{r}: {row}")
        lines.append("edges:")
        for lo, hi in self.edges:
            lines.append(f"{lo} {hi}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse(text: str) -> tuple["RhombicStrip", dict[str, str]]:
        meta: dict[str, str] = {}
        ranks: dict[int, list[tuple[str, Fraction]]] = {}
        edges: list[tuple[str, str]] = []
        in_edges = False
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for tok in line[1:].split():
                    if "=" in tok:
                        k, v = tok.split("=", 1)
                        meta[k] = v
                continue
            if line == "edges:":
                in_edges = True
                continue
            if in_edges:
                a, b = line.split()
                edges.append((a, b))
            else:
                head, _, rest = line.partition(":")
                r = int(head)
                row = []
                for tok in rest.split():
                    i, _, frac = tok.rpartition("@")
                    num, _, den = frac.partition("/")
                    row.append((i, Fraction(int(num), int(den or "1"))))
                ranks[r] = row
        return RhombicStrip(ranks, edges), meta


def _rotations(strip: RhombicStrip) -> dict[str, list[str]]:
    """Counterclockwise neighbour order at each vertex, from the geometry.

    Up-edges leave in the upper half-plane (angle decreasing in the lift),
    down-edges in the lower half-plane (angle increasing in the lift).
    """
    rot: dict[str, list[str]] = {}
    for v in strip.rank_of:
        ups = sorted(strip.ups[v], key=lambda w: strip.lift_int(v, w), reverse=True)
        downs = sorted(strip.downs[v], key=lambda w: -strip.lift_int(w, v))
        rot[v] = ups + downs
    return rot


def _face_orbits(strip: RhombicStrip) -> list[list[tuple[str, str]]]:
    """Faces of the embedding as dart cycles (rotation-system traversal)."""
    rot = _rotations(strip)
    index = {v: {w: k for k, w in enumerate(ws)} for v, ws in rot.items()}
    seen: set[tuple[str, str]] = set()
    orbits: list[list[tuple[str, str]]] = []
    darts = [(a, b) for a, b in strip.edges] + [(b, a) for a, b in strip.edges]
    darts.sort()
    for start in darts:
        if start in seen:
            continue
        orbit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            u, v = cur
            k = index[v][u]
            w = rot[v][(k - 1) % len(rot[v])]
            cur = (v, w)
        if cur != start:
            raise StripError(f"face traversal did not close at {start}")
        orbits.append(orbit)
    return orbits


def _orbit_rhombus(strip: RhombicStrip, orbit: Sequence[tuple[str, str]]) -> Optional[Rhombus]:
    """Interpret a face orbit as a rhombus, or None if it is not one."""
    if len(orbit) != 4:
        return None
    verts = [d[0] for d in orbit]
    if len(set(verts)) != 4:
        return None
    rk = sorted(strip.rank_of[v] for v in verts)
    if not (rk[0] + 1 == rk[1] == rk[2] == rk[3] - 1):
        return None
    bottom = next(v for v in verts if strip.rank_of[v] == rk[0])
    top = next(v for v in verts if strip.rank_of[v] == rk[3])
    # The traversal orients every face the same way, so the middle corner
    # whose outgoing dart descends to the bottom is always the left one
    # (robust even for the two faces that wind around the cylinder).
    left = right = None
    for k, (a, b) in enumerate(orbit):
        if a in (bottom, top):
            continue
        if strip.rank_of[b] < strip.rank_of[a]:
            left = a
        else:
            right = a
    if left is None or right is None:
        return None
    return Rhombus(bottom=bottom, top=top, left=left, right=right)


def strip_faces(strip: RhombicStrip) -> list[Rhombus]:
    """All faces as rhombi; raises StripError if any face is not a rhombus."""
    faces = []
    for orbit in _face_orbits(strip):
        rh = _orbit_rhombus(strip, orbit)
        if rh is None:
            walk = ",".join(d[0] for d in orbit)
            raise StripError(f"face ({walk}) is not a rhombus")
        faces.append(rh)
    return faces


def _band_crossing(
    strip: RhombicStrip, band: Sequence[tuple[str, str]]
) -> Optional[tuple[tuple[str, str], tuple[str, str]]]:
    """First pair of crossing edges within one rank band, if any."""
    xi, denom = strip._scaled()
    segs = []
    for lo, hi in band:
        a = xi[lo]
        segs.append((a, a + strip.lift_int(lo, hi), (lo, hi)))
    segs.sort()
    for i in range(len(segs)):
        a1, b1, e1 = segs[i]
        for j in range(i + 1, len(segs)):
            a2, b2, e2 = segs[j]
            for t in (-denom, 0, denom):
                s1 = a1 - a2 - t
                s2 = b1 - b2 - t
                if (s1 < 0 < s2) or (s2 < 0 < s1):
                    return e1, e2
    return None


def validate_strip(strip: RhombicStrip, graph: CoverGraph) -> Report:
    """Check all rhombic-strip invariants against the underlying cover graph."""
    missing = set(graph.ranks) - set(strip.rank_of)
    if missing:
        return Report(False, None, f"not spanning: missing {sorted(missing)[0]!r}")
    extra = set(strip.rank_of) - set(graph.ranks)
    if extra:
        return Report(False, None, f"unknown element {sorted(extra)[0]!r}")
    for i, r in strip.rank_of.items():
        if graph.ranks[i] != r:
            return Report(False, None, f"element {i!r} at rank {r}, poset says {graph.ranks[i]}")
    for lo, hi in strip.edges:
        if not graph.has_edge(lo, hi):
            return Report(False, None, f"edge ({lo},{hi}) is not a cover relation")
    for r, row in strip.ranks.items():
        for k in range(1, len(row)):
            if row[k - 1][1] == row[k][1]:
                return Report(
                    False, None, f"rank {r}: {row[k - 1][0]!r},{row[k][0]!r} share x={row[k][1]}"
                )
    bands: dict[int, list[tuple[str, str]]] = {}
    for lo, hi in strip.edges:
        bands.setdefault(strip.rank_of[lo], []).append((lo, hi))
    for r, band in bands.items():
        hit = _band_crossing(strip, band)
        if hit:
            return Report(False, None, f"edges {hit[0]} and {hit[1]} cross in band {r}")
    try:
        faces = strip_faces(strip)
    except StripError as e:
        return Report(False, None, str(e))
    # Euler count on the compactified cylinder; a mismatch means the
    # coordinates do not describe a genus-0 embedding.
    v, e, f = len(strip.rank_of), len(strip.edges), len(faces)
    if v - e + f != 2:
        return Report(False, None, f"euler check failed: V-E+F = {v}-{e}+{f}")
    return Report(True)


Flag = tuple[str, ...]


def leftmost_flag(strip: RhombicStrip) -> Flag:
    """Minimum-x element per rank, bottom to top."""
    return tuple(strip.ranks[r][0][0] for r in sorted(strip.ranks))


def sweep_flags(strip: RhombicStrip) -> list[Flag]:
    """Cyclic flag listing obtained by sweeping a chain across the rhombi.

    Starts at the leftmost flag; when several rhombi are advanceable the one
    at the lowest rank moves, which makes the output deterministic.  Every
    rhombus is traversed exactly once; the number of flags equals the number
    of rhombi.
    """
    faces = strip_faces(strip)
    advance: dict[tuple[str, str, str], tuple[str, int]] = {}
    for idx, rh in enumerate(faces):
        key = (rh.left, rh.bottom, rh.top)
        if key in advance:
            raise StripError(f"two rhombi share the advance key {key}")
        advance[key] = (rh.right, idx)

    start = leftmost_flag(strip)
    flag = list(start)
    out: list[Flag] = [start]
    used = [False] * len(faces)
    for _ in range(len(faces)):
        for pos in range(1, len(flag) - 1):
            key = (flag[pos], flag[pos - 1], flag[pos + 1])
            hit = advance.get(key)
            if hit is not None and not used[hit[1]]:
                flag[pos] = hit[0]
                used[hit[1]] = True
                break
        else:
            raise StripError(f"sweep stuck at flag {'>'.join(flag)}")
        cur = tuple(flag)
        if cur == start:
            if not all(used):
                raise StripError("sweep closed before traversing every rhombus")
            if len(out) != len(faces):
                raise StripError("sweep closed with wrong length")
            return out
        out.append(cur)
    raise StripError("sweep did not return to the start flag")


def check_facet_hamiltonian_flags(
    flags: Sequence[Flag], faces: Iterable[str]
) -> Report:
    """Hourglass criterion: every nontrivial face appears in one cyclic run.

    Also checks that consecutive flags differ in exactly one position and
    that no flag repeats.
    """
    n = len(flags)
    if n == 0:
        return Report(False, None, "empty flag listing")
    width = len(flags[0])
    seen: dict[Flag, int] = {}
    for i, fl in enumerate(flags):
        if len(fl) != width:
            return Report(False, i, "flag of wrong length")
        if fl in seen:
            return Report(False, i, f"flag repeated (first at {seen[fl]})")
        seen[fl] = i
    for i in range(n):
        j = (i + 1) % n
        diff = sum(1 for a, b in zip(flags[i], flags[j]) if a != b)
        if diff != 1:
            return Report(False, i, f"consecutive flags differ in {diff} positions")
    positions: dict[str, list[int]] = {}
    for i, fl in enumerate(flags):
        for el in fl:
            positions.setdefault(el, []).append(i)
    for face in faces:
        pos = positions.get(face)
        if not pos:
            return Report(False, None, f"face {face!r} missed by every flag")
        breaks = [
            k for k in range(len(pos)) if (pos[(k + 1) % len(pos)] - pos[k]) % n != 1
        ]
        # one cyclic run has exactly one break (back to the start of the run)
        if len(pos) == n:
            continue
        if len(breaks) > 1:
            k1, k2 = breaks[0], breaks[1]
            return Report(
                False,
                None,
                f"face {face!r} occupies disjoint arcs ending at positions "
                f"{pos[k1]} and {pos[k2]}",
            )
    return Report(True)


def flags_dump(flags: Sequence[Flag], family: str, n: int) -> str:
    lines = [f"#flags family={family} n={n} cyclic=1"]
    lines.extend(">".join(fl) for fl in flags)
    return "\n".join(lines) + "\n"


def flags_parse(text: str) -> tuple[list[Flag], dict[str, str]]:
    meta: dict[str, str] = {}
    flags: list[Flag] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                if "=" in tok:
                    k, v = tok.split("=", 1)
                    meta[k] = v
            continue
        flags.append(tuple(line.split(">")))
    return flags, meta
