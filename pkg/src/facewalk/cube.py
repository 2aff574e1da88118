"""Boolean lattices and hypercube face lattices: Gray codes and strips.

Faces of the n-cube are ternary words over {0,1,-} (the dashes mark free
coordinates); the bottom element is EMPTY.  The face listing is the
ternary reflected Gray code; the three strip constructions build cylinder
embeddings by mirroring and stacking prefixed copies of smaller strips.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterator

from facewalk.posetcore import EMPTY, CoverGraph, Listing
from facewalk.strip import RhombicStrip


def word_rank(word: str) -> int:
    return -1 if word == EMPTY else word.count("-")


def brgc(n: int) -> Iterator[str]:
    """Binary reflected Gray code over {0,1}^n, rightmost bit fastest.

    Cyclic Hamiltonian listing of the hypercube skeleton; loopless
    (worst-case O(1) work between successive words).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ch = (48, 49)
    a = [0] * n
    o = [1] * n
    f = list(range(n + 1))
    buf = bytearray(b"0" * n)
    yield bytes(buf).decode()
    while True:
        j = f[0]
        f[0] = 0
        if j == n:
            return
        a[j] += o[j]
        buf[n - 1 - j] = ch[a[j]]
        o[j] = -o[j]
        f[j] = f[j + 1]
        f[j + 1] = j + 1
        yield bytes(buf).decode()


def gamma(n: int) -> Iterator[str]:
    """Ternary reflected Gray code over {0,1,-}^n with digit order 0 < - < 1.

    Starts at 0^n, ends at 1^n; each step flips one position 0<->dash or
    dash<->1.  Appending EMPTY closes the Hamiltonian cycle of the face
    lattice.  Loopless via focus pointers.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ch = (48, 45, 49)  # '0', '-', '1'
    a = [0] * n
    o = [1] * n
    f = list(range(n + 1))
    buf = bytearray(b"0" * n)
    yield bytes(buf).decode()
    while True:
        j = f[0]
        f[0] = 0
        if j == n:
            return
        a[j] += o[j]
        buf[n - 1 - j] = ch[a[j]]
        if a[j] == 0 or a[j] == 2:
            o[j] = -o[j]
            f[j] = f[j + 1]
            f[j + 1] = j + 1
        yield bytes(buf).decode()


def gamma_listing(n: int) -> Listing:
    """The face listing of L(Q_n) as a cyclic Listing (EMPTY appended)."""
    return Listing(tuple(gamma(n)) + (EMPTY,), cyclic=True)


def brgc_listing(n: int) -> Listing:
    return Listing(tuple(brgc(n)), cyclic=True)


def cube_cover_graph(n: int) -> CoverGraph:
    """Brute-force cover graph of the face lattice L(Q_n)."""
    ranks = {EMPTY: -1}
    edges = []
    for t in product("01-", repeat=n):
        w = "".join(t)
        ranks[w] = w.count("-")
        if "-" not in w:
            edges.append((EMPTY, w))
        for i, c in enumerate(w):
            if c == "-":
                edges.append((w, w[:i] + "0" + w[i + 1 :]))
                edges.append((w, w[:i] + "1" + w[i + 1 :]))
    return CoverGraph(ranks, edges)


def boolean_cover_graph(n: int) -> CoverGraph:
    """Cover graph of the Boolean lattice Q_n (bitstrings ranked by weight)."""
    ranks = {}
    edges = []
    for t in product("01", repeat=n):
        w = "".join(t)
        ranks[w] = w.count("1")
        for i, c in enumerate(w):
            if c == "0":
                edges.append((w, w[:i] + "1" + w[i + 1 :]))
    return CoverGraph(ranks, edges)


def nontrivial_cube_faces(n: int) -> list[str]:
    """All faces except EMPTY and the full cube (the facet set of tr(Q_n))."""
    top = "-" * n
    return ["".join(t) for t in product("01-", repeat=n) if "".join(t) != top]


# -- rhombic strips -----------------------------------------------------------
#
# All three constructions keep a plane drawing through the recursion (no
# zipper edges) and wrap it onto the cylinder at the end: the drawing is
# squeezed into [0, w) and the zipper crosses the remaining gap, so the
# shortest-displacement rule recovers the intended embedding.


def _mirror_plane(n: int):
    """Proof-by-mirroring state: x in [0,1], edge set, chains C and D."""
    if n == 2:
        x = {"00": Fraction(0), "01": Fraction(0), "10": Fraction(1), "11": Fraction(0)}
        edges = {("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")}
        return x, edges, ["00", "01", "11"], ["00", "10", "11"]
    x0, e0, c0, d0 = _mirror_plane(n - 1)
    s = Fraction(2, 5)
    x = {}
    for w, xx in x0.items():
        x["0" + w] = xx * s
        x["1" + w] = 1 - xx * s
    edges = set()
    for a, b in e0:
        edges.add(("0" + a, "0" + b))
        edges.add(("1" + a, "1" + b))
    for y in d0:
        edges.add(("0" + y, "1" + y))
    c = ["0" + w for w in c0] + ["1" * n]
    d = ["0" * n] + ["1" + w for w in c0]
    return x, edges, c, d


def strip_boolean_mirror(n: int) -> RhombicStrip:
    """Rhombic strip of G(Q_n): mirrored prefixed copies plus zipper edges."""
    if n < 2:
        raise ValueError("n must be >= 2")
    x, edges, _, _ = _mirror_plane(n)
    w = Fraction(3, 4)
    zipper = [
        ("0" * (n - i) + "1" * i, "1" + "0" * (n - i - 1) + "1" * i)
        for i in range(1, n - 1)
    ]
    edges = set(edges) | set(zipper)
    ranks: dict[int, list[tuple[str, Fraction]]] = {}
    for word, xx in x.items():
        ranks.setdefault(word.count("1"), []).append((word, xx * w))
    return RhombicStrip(ranks, edges)


def _stack_path(n: int):
    """Proof-by-stacking state: x-monotone path plus A/B/Z edge sets."""
    if n == 2:
        return ["00", "10", "11", "01"], set(), {("00", "01")}, set()
    p0, a0, b0, z0 = _stack_path(n - 1)
    m = len(p0)
    p: list[str] = []
    for i, q in enumerate(p0):
        if i % 2 == 0:
            p.append("0" + q)
            p.append("1" + q)
        else:
            p.append("1" + q)
            p.append("0" + q)
    a = {("1" + u, "1" + v) for u, v in a0}
    a |= {("1" + p0[i], "1" + p0[i + 1]) for i in range(1, m - 1, 2)}
    b = {("0" + u, "0" + v) for u, v in b0}
    b |= {("0" + p0[i], "0" + p0[i + 1]) for i in range(0, m - 1, 2)}
    z = {("1" + u, "1" + v) for u, v in z0}
    z.add(("1" + p0[-1], "1" + "0" * (n - 1)))
    return p, a, b, z


def strip_boolean_stack(n: int) -> RhombicStrip:
    """Rhombic strip of G(Q_n) built around an x-monotone Hamiltonian path."""
    if n < 2:
        raise ValueError("n must be >= 2")
    p, a, b, z = _stack_path(n)
    w = Fraction(5, 6)
    edges = set(zip(p, p[1:])) | a | b | z
    scale = w / len(p)
    ranks: dict[int, list[tuple[str, Fraction]]] = {}
    for pos, word in enumerate(p):
        ranks.setdefault(word.count("1"), []).append((word, pos * scale))
    return RhombicStrip(ranks, edges)


def _cubefaces_path(n: int):
    """Three-copy induction state for L(Q_n): path plus A/B edge sets."""
    if n == 1:
        return ["0", "-", "1"], set(), set()
    p0, a0, b0 = _cubefaces_path(n - 1)
    m = len(p0)  # odd
    p: list[str] = []
    for i, q in enumerate(p0):
        if i % 2 == 0:
            p.append("0" + q)
            p.append("-" + q)
        else:
            p.append("-" + q)
            p.append("0" + q)
    p.extend("1" + q for q in reversed(p0))
    a = {("-" + u, "-" + v) for u, v in a0} | {("1" + u, "1" + v) for u, v in a0}
    a |= {("-" + p0[i], "-" + p0[i + 1]) for i in range(1, m - 1, 2)}
    # F-edges join the 1-copy to the dash-copy along the old right chain; the
    # one at the old path's end becomes a path edge, the rest go above it.
    d_chain = ["1" + "-" * i + "0" * (n - 2 - i) for i in range(n - 1)] + ["-" * (n - 1)]
    a |= {("1" + y, "-" + y) for y in d_chain if y != p0[-1]}
    b = {("0" + u, "0" + v) for u, v in b0} | {("1" + u, "1" + v) for u, v in b0}
    b |= {("0" + p0[i], "0" + p0[i + 1]) for i in range(0, m - 2, 2)}
    return p, a, b


def strip_cube_faces(n: int) -> RhombicStrip:
    """Rhombic strip of G(L(Q_n)) including EMPTY and the full cube."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p, a, b = _cubefaces_path(n)
    w = Fraction(5, 6)
    edges = set(zip(p, p[1:])) | a | b
    # zipper between the mirrored 1-copy and the dash-copy of the left chain
    c_prev = ["-" * i + "0" * (n - 1 - i) for i in range(n)]
    edges |= {("1" + q, "-" + q) for q in c_prev[: n - 1]}
    edges |= {(EMPTY, wd) for wd in p if "-" not in wd}
    scale = w / len(p)
    ranks: dict[int, list[tuple[str, Fraction]]] = {-1: [(EMPTY, Fraction(0))]}
    for pos, word in enumerate(p):
        ranks.setdefault(word.count("-"), []).append((word, pos * scale))
    return RhombicStrip(ranks, edges)
