"""Face-lattice Gray codes for permutahedra and B-permutahedra.

Faces of the permutahedron are ordered partitions of [n]; one step of the
listing merges two adjacent blocks or splits one block.  B-permutahedron
faces are signed ordered partitions, either fully signed (type 1) or with
a boxed first block carrying both signs (type 2).  The facet-Hamiltonian
cycle of the B-permutahedron arises by sweeping the hypercube face strip
and reading each flag as a signed permutation.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, Sequence

from facewalk.cube import strip_cube_faces
from facewalk.posetcore import EMPTY, CoverGraph, Listing
from facewalk.strip import Flag, sweep_flags

Blocks = tuple[tuple[int, ...], ...]


def _el(e: int, wide: bool) -> str:
    return str(e)


def partition_id(blocks: Sequence[Sequence[int]]) -> str:
    """Canonical id: blocks ascending by |value|, joined by bars."""
    wide = max(abs(e) for b in blocks for e in b) > 9
    sep = "," if wide else ""
    return "|".join(sep.join(str(e) for e in sorted(b, key=abs)) for b in blocks)


def signed_partition_id(blocks: Sequence[Sequence[int]], boxed: bool) -> str:
    wide = max(abs(e) for b in blocks for e in b) > 9
    sep = "," if wide else ""
    parts = [sep.join(str(e) for e in sorted(b, key=abs)) for b in blocks]
    if boxed:
        parts[0] = f"[{parts[0]}]"
    return "|".join(parts)


def insert_bar(x: Blocks, i: int) -> Blocks:
    """Insert the singleton {n+1} as a new block after block i (0 <= i <= k)."""
    k = len(x)
    if not 0 <= i <= k:
        raise IndexError(f"bar position {i} out of range 0..{k}")
    nxt = sum(len(b) for b in x) + 1
    return x[:i] + ((nxt,),) + x[i:]


def insert_join(x: Blocks, i: int) -> Blocks:
    """Add the element n+1 to block i (1 <= i <= k)."""
    k = len(x)
    if not 1 <= i <= k:
        raise IndexError(f"join position {i} out of range 1..{k}")
    nxt = sum(len(b) for b in x) + 1
    return x[: i - 1] + (tuple(sorted(x[i - 1] + (nxt,))),) + x[i:]


def cvec(x: Blocks) -> list[Blocks]:
    """Insertion path (bar_0, join_1, bar_1, ..., join_k, bar_k)."""
    out = [insert_bar(x, 0)]
    for i in range(1, len(x) + 1):
        out.append(insert_join(x, i))
        out.append(insert_bar(x, i))
    return out


def face_listing_perm_reference(n: int) -> list[Blocks]:
    """Materialized recursion; the streaming engine is checked against it."""
    if n < 1:
        raise ValueError("n must be >= 1")
    seq: list[Blocks] = [((1,),)]
    for _ in range(2, n + 1):
        out: list[Blocks] = []
        for i, x in enumerate(seq):
            path = cvec(x)
            out.extend(reversed(path) if i % 2 == 0 else path)
        seq = out
    return seq


def face_listing_perm_blocks(n: int) -> Iterator[list[list[int]]]:
    """Stream the face listing of the permutahedron as mutable block lists.

    Yields the same list object every time (amortized O(1) work per face,
    O(n) memory); callers must not mutate or retain it.  Element m zigzags
    across the partition of [m-1] between moves of the level below.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    blocks = [[i] for i in range(1, n + 1)]
    yield blocks
    if n == 1:
        return
    # per-level sweep state, indexed by the inserted element m (2..n)
    j = [0] * (n + 1)  # ops done in the current sweep
    two_k = [0] * (n + 1)  # 2k for the current sweep
    dr = [0] * (n + 1)  # +1 sweeping right, -1 sweeping left
    idx = [0] * (n + 1)  # local block index of m's block
    side = [1] * (n + 1)  # 1 = resting at right end, 0 = left end
    for m in range(2, n + 1):
        two_k[m] = 2 * (m - 1)
        dr[m] = -1
        idx[m] = m - 1
    while True:
        m = n
        while m >= 2 and j[m] == two_k[m]:
            side[m] = 1 if dr[m] == 1 else 0  # record where the sweep rests
            m -= 1
        if m < 2:
            return
        # absolute position: deeper elements parked at the left end shift us
        a = idx[m]
        if m < n:
            a += sum(1 for mm in range(m + 1, n + 1) if side[mm] == 0)
        if dr[m] == 1:
            if j[m] & 1 == 0:  # join with the block to the right
                blocks.pop(a)
                blocks[a].append(m)
            else:  # split back out, to the right
                blocks[a].pop()
                idx[m] += 1
                blocks.insert(a + 1, [m])
        else:
            if j[m] & 1 == 0:  # join with the block to the left
                blocks.pop(a)
                blocks[a - 1].append(m)
                idx[m] -= 1
            else:  # split back out, to the left
                blocks[a].pop()
                blocks.insert(a, [m])
        j[m] += 1
        if m < n:
            # deeper levels start fresh sweeps from where they rest; idx is
            # local (elements deeper than mm are ignored by its indexing)
            for mm in range(m + 1, n + 1):
                dr[mm] = -dr[mm]
                j[mm] = 0
                two_k[mm] = 2 * (len(blocks) - (n - mm + 1))
                idx[mm] = 0 if side[mm] == 0 else len(blocks) - 1 - (n - mm)
        yield blocks


def face_listing_perm(n: int) -> Iterator[str]:
    """Face listing of the permutahedron as canonical ids, EMPTY appended."""
    if n < 2:
        raise ValueError("n must be >= 2")
    for blocks in face_listing_perm_blocks(n):
        yield "|".join("".join(map(str, b)) for b in blocks) if n <= 9 else "|".join(
            ",".join(map(str, b)) for b in blocks
        )
    yield EMPTY


def ordered_partitions(n: int) -> Iterator[Blocks]:
    """All ordered partitions of [n] (brute-force oracle enumeration)."""

    def rec(rest: tuple[int, ...]) -> Iterator[Blocks]:
        if not rest:
            yield ()
            return
        first = rest[0]
        others = rest[1:]
        # choose the block containing the smallest remaining element
        from itertools import combinations

        for r in range(len(others) + 1):
            for comb in combinations(others, r):
                block = tuple(sorted((first,) + comb))
                remaining = tuple(e for e in rest if e not in block)
                for tail in rec(remaining):
                    yield (block,) + tail

    def interleave(blocks_set: Blocks) -> Iterator[Blocks]:
        yield from permutations(blocks_set)

    seen = set()
    for part in rec(tuple(range(1, n + 1))):
        key = tuple(sorted(part))
        if key in seen:
            continue
        seen.add(key)
        yield from interleave(key)


def fubini(n: int) -> int:
    """Ordered Bell number: ordered partitions of [n]."""
    from math import comb

    a = [1] + [0] * n
    for m in range(1, n + 1):
        a[m] = sum(comb(m, k) * a[m - k] for k in range(1, m + 1))
    return a[n]


def perm_cover_graph(n: int) -> CoverGraph:
    """Brute-force cover graph of L(Pi_n)."""
    ranks = {EMPTY: -1}
    edges = []
    for part in ordered_partitions(n):
        pid = partition_id(part)
        ranks[pid] = n - len(part)
        if len(part) == n:
            edges.append((EMPTY, pid))
        for i in range(len(part) - 1):
            merged = part[:i] + (tuple(sorted(part[i] + part[i + 1])),) + part[i + 2 :]
            edges.append((pid, partition_id(merged)))
    return CoverGraph(ranks, edges)


# -- B-permutahedron ----------------------------------------------------------

SignedFace = tuple[Blocks, bool]  # (blocks of signed ints, boxed first block)


def _bp_id(face: SignedFace) -> str:
    return signed_partition_id(face[0], face[1])


def _bp_rank(face: SignedFace, n: int) -> int:
    blocks, boxed = face
    return n - len(blocks) + (1 if boxed else 0)


def _bp_covers(face: SignedFace) -> Iterator[SignedFace]:
    """Faces covering this one, per the type-1/type-2 cover rules."""
    blocks, boxed = face
    k = len(blocks)
    if not boxed:
        yield (tuple(sorted(abs(e) for e in blocks[0])),) + blocks[1:], True
        for i in range(k - 1):
            merged = tuple(sorted(blocks[i] + blocks[i + 1], key=abs))
            yield blocks[:i] + (merged,) + blocks[i + 2 :], False
    else:
        if k >= 2:
            absorbed = tuple(sorted(blocks[0] + tuple(abs(e) for e in blocks[1])))
            yield (absorbed,) + blocks[2:], True
        for i in range(1, k - 1):
            merged = tuple(sorted(blocks[i] + blocks[i + 1], key=abs))
            yield blocks[:i] + (merged,) + blocks[i + 2 :], True


def bperm_faces(n: int) -> Iterator[SignedFace]:
    from itertools import product

    for part in ordered_partitions(n):
        for signs in product((1, -1), repeat=n):
            signed = tuple(
                tuple(sorted((signs[e - 1] * e for e in b), key=abs)) for b in part
            )
            yield signed, False
    for part in ordered_partitions(n):
        rest = sum(len(b) for b in part[1:])
        for signs in product((1, -1), repeat=rest):
            flat = [e for b in part[1:] for e in b]
            sign_of = {e: s for e, s in zip(flat, signs)}
            signed = (part[0],) + tuple(
                tuple(sorted((sign_of[e] * e for e in b), key=abs)) for b in part[1:]
            )
            yield signed, True


def bperm_cover_graph(n: int) -> CoverGraph:
    ranks = {EMPTY: -1}
    edges = []
    seen = set()
    for face in bperm_faces(n):
        fid = _bp_id(face)
        if fid in seen:
            continue
        seen.add(fid)
        ranks[fid] = _bp_rank(face, n)
        if ranks[fid] == 0:
            edges.append((EMPTY, fid))
        for up in _bp_covers(face):
            edges.append((fid, _bp_id(up)))
    return CoverGraph(ranks, edges)


def _bp_cpath(x: SignedFace) -> list[SignedFace]:
    """Insertion path c(x): sweep +(n+1) right-to-left, box, sweep -(n+1) back."""
    blocks, boxed = x
    k = len(blocks)
    nxt = sum(len(b) for b in blocks) + 1

    def bar(i: int, e: int) -> SignedFace:
        return blocks[:i] + ((e,),) + blocks[i:], boxed

    def join(i: int, e: int) -> SignedFace:
        merged = tuple(sorted(blocks[i - 1] + (e,), key=abs))
        return blocks[: i - 1] + (merged,) + blocks[i:], boxed

    out: list[SignedFace] = []
    if not boxed:
        for i in range(k, 0, -1):
            out.append(bar(i, nxt))
            out.append(join(i, nxt))
        out.append(bar(0, nxt))
        out.append((((nxt,),) + blocks, True))  # boxed singleton in front
        out.append(bar(0, -nxt))
        for i in range(1, k + 1):
            out.append(join(i, -nxt))
            out.append(bar(i, -nxt))
    else:
        for i in range(k, 1, -1):
            out.append(bar(i, nxt))
            out.append(join(i, nxt))
        out.append(bar(1, nxt))
        absorbed = (tuple(sorted(blocks[0] + (nxt,))),) + blocks[1:]
        out.append((absorbed, True))
        out.append(bar(1, -nxt))
        for i in range(2, k + 1):
            out.append(join(i, -nxt))
            out.append(bar(i, -nxt))
    return out


def face_listing_bperm_faces(n: int) -> Iterator[SignedFace]:
    """Recursive zigzag over signed set partitions (without EMPTY)."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def level(m: int) -> Iterator[SignedFace]:
        if m == 1:
            yield ((1,),), False
            yield ((1,),), True
            yield ((-1,),), False
            return
        for i, x in enumerate(level(m - 1)):
            path = _bp_cpath(x)
            yield from (reversed(path) if i % 2 == 1 else path)

    return level(n)


def face_listing_bperm(n: int) -> Iterator[str]:
    """Face listing of the B-permutahedron as canonical ids, EMPTY appended."""
    for face in face_listing_bperm_faces(n):
        yield _bp_id(face)
    yield EMPTY


# -- flags of the hypercube <-> signed permutations ---------------------------


def flag_to_signed_perm(flag: Flag) -> tuple[int, ...]:
    """Read a maximal chain of L(Q_n) as a signed permutation.

    Entry i is the position dashed at step i, negative when the bottom
    vertex has a 0 there.  This is a bijection onto all signed permutations.
    """
    if len(flag) < 3 or flag[0] != EMPTY:
        raise ValueError("flag must start at EMPTY")
    x0 = flag[1]
    n = len(x0)
    if set(x0) - {"0", "1"} or flag[-1] != "-" * n:
        raise ValueError("flag must run from a vertex to the full cube")
    out = []
    prev = x0
    for word in flag[2:]:
        changed = [p for p in range(n) if word[p] != prev[p]]
        if len(changed) != 1 or word[changed[0]] != "-":
            raise ValueError(f"not a cover step: {prev} -> {word}")
        p = changed[0]
        out.append((p + 1) if x0[p] == "1" else -(p + 1))
        prev = word
    return tuple(out)


def signed_perm_id(perm: Sequence[int]) -> str:
    return partition_id([(e,) for e in perm])


def facet_hamiltonian_bperm(n: int) -> Listing:
    """Facet-Hamiltonian cycle of the B-permutahedron, as signed permutations.

    Sweeps the rhombic strip of L(Q_n) and maps each flag to a vertex of
    the omnitruncation; the cycle has one vertex per nontrivial cube face.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    flags = sweep_flags(strip_cube_faces(n))
    return Listing(
        tuple(signed_perm_id(flag_to_signed_perm(f)) for f in flags), cyclic=True
    )
