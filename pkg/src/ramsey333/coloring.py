"""Edge colorings of complete graphs and exact triangle accounting.

Every edge of K_n carries one of three colors: blue, red, yellow.  Edges are
numbered by the lexicographic ordinal of the pair (i, j) with i < j, so a
coloring is a byte string of length C(n, 2) and serializes canonically.

Triangle counting comes in two flavors.  `census` is the brute-force oracle:
it walks all C(n, 3) vertex triples and classifies each as monochromatic,
bichromatic, or rainbow.  `fast_mono_counts` is the bit-parallel path: per
color, vertex adjacencies are packed into integer bit rows, and the triangles
through an edge (i, j) are the set bits of row_i AND row_j.  The fast path is
capped at 64 vertices so a row fits one machine word; the oracle has no cap.

Colorings are immutable and hashable; every function here is pure.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .errors import CapacityError

# Bit rows above this vertex count no longer fit a machine word.
FAST_PATH_MAX_VERTICES = 64


class Color(IntEnum):
    """One of the three edge labels, totally ordered Blue < Red < Yellow."""

    BLUE = 0
    RED = 1
    YELLOW = 2

    @property
    def char(self) -> str:
        return "BRY"[self.value]

    @classmethod
    def from_char(cls, ch: str) -> "Color":
        idx = "BRY".find(ch)
        if idx < 0:
            raise ValueError(f"not a color character: {ch!r}")
        return cls(idx)

    def __str__(self) -> str:
        return self.name.capitalize()


COLORS = (Color.BLUE, Color.RED, Color.YELLOW)


def edge_index(i: int, j: int, n: int) -> int:
    """Ordinal of edge (i, j), i < j, in lexicographic order: (0,1), (0,2), ..."""
    if not 0 <= i < j < n:
        raise ValueError(f"invalid edge ({i}, {j}) for n={n}")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


@lru_cache(maxsize=None)
def edge_list(n: int) -> tuple[tuple[int, int], ...]:
    """All edges of K_n in ordinal order."""
    return tuple(combinations(range(n), 2))


def edge_endpoints(ordinal: int, n: int) -> tuple[int, int]:
    """Inverse of edge_index."""
    edges = edge_list(n)
    if not 0 <= ordinal < len(edges):
        raise ValueError(f"edge ordinal {ordinal} out of range for n={n}")
    return edges[ordinal]


class MonoTriangle(NamedTuple):
    i: int
    j: int
    k: int
    color: Color


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of colors to the C(n, 2) edges of K_n.

    `colors` holds Color values (0, 1, 2) in edge-ordinal order.  Instances
    are immutable; derive new colorings with the functions in this module.
    """

    n: int
    colors: bytes

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        expected = comb(self.n, 2)
        if len(self.colors) != expected:
            raise ValueError(
                f"need {expected} edge colors for n={self.n}, got {len(self.colors)}"
            )
        if any(b > 2 for b in self.colors):
            raise ValueError("edge colors must be 0 (B), 1 (R) or 2 (Y)")

    @classmethod
    def from_colors(cls, n: int, colors: Iterable[int]) -> "EdgeColoring":
        return cls(n, bytes(int(c) for c in colors))

    @classmethod
    def from_string(cls, n: int, s: str) -> "EdgeColoring":
        return cls(n, bytes(Color.from_char(ch) for ch in s))

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int], int]) -> "EdgeColoring":
        """Color edge (i, j) with f(i, j); f is called with i < j."""
        return cls(n, bytes(int(f(i, j)) for i, j in edge_list(n)))

    def color(self, i: int, j: int) -> Color:
        if i > j:
            i, j = j, i
        return Color(self.colors[edge_index(i, j, self.n)])

    def color_string(self) -> str:
        return "".join("BRY"[b] for b in self.colors)

    def recolored(self, ordinal: int, x: Color) -> "EdgeColoring":
        """Copy with one edge changed."""
        if not 0 <= ordinal < len(self.colors):
            raise ValueError(f"edge ordinal {ordinal} out of range")
        buf = bytearray(self.colors)
        buf[ordinal] = int(x)
        return EdgeColoring(self.n, bytes(buf))


@lru_cache(maxsize=512)
def bit_rows(c: EdgeColoring) -> tuple[tuple[int, ...], ...]:
    """Per-color adjacency rows: bit j of rows[x][i] is set iff edge (i,j) has color x."""
    rows = [[0] * c.n for _ in range(3)]
    o = 0
    for i in range(c.n):
        for j in range(i + 1, c.n):
            x = c.colors[o]
            rows[x][i] |= 1 << j
            rows[x][j] |= 1 << i
            o += 1
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class TriangleCensus:
    """Exact triangle classification of one coloring."""

    mono: tuple[int, int, int]  # per color, index = Color value
    bichromatic: int
    rainbow: int
    mono_list: tuple[MonoTriangle, ...]

    @property
    def total_mono(self) -> int:
        return sum(self.mono)

    @property
    def total(self) -> int:
        return self.total_mono + self.bichromatic + self.rainbow


def census(c: EdgeColoring) -> TriangleCensus:
    """Brute-force triangle count over all C(n, 3) triples.  The oracle."""
    n = c.n
    cols = c.colors
    mono = [0, 0, 0]
    bi = 0
    rainbow = 0
    mono_list: list[MonoTriangle] = []
    # base[i] + j is the ordinal of edge (i, j)
    base = [i * (2 * n - i - 1) // 2 - (i + 1) for i in range(n)]
    for i in range(n - 2):
        bi_base = base[i]
        for j in range(i + 1, n - 1):
            cij = cols[bi_base + j]
            bj_base = base[j]
            for k in range(j + 1, n):
                cik = cols[bi_base + k]
                cjk = cols[bj_base + k]
                if cij == cik == cjk:
                    mono[cij] += 1
                    mono_list.append(MonoTriangle(i, j, k, Color(cij)))
                elif cij != cik and cik != cjk and cij != cjk:
                    rainbow += 1
                else:
                    bi += 1
    return TriangleCensus((mono[0], mono[1], mono[2]), bi, rainbow, tuple(mono_list))


def fast_mono_counts(c: EdgeColoring) -> tuple[int, int, int]:
    """Per-color monochromatic counts via bit rows; equals census(c).mono.

    Each triangle i < j < k is counted once, at its edge (i, j), by masking
    the row intersection to bits above j.
    """
    if c.n > FAST_PATH_MAX_VERTICES:
        raise CapacityError(
            f"bit-parallel fast path supports n <= {FAST_PATH_MAX_VERTICES}, got {c.n}"
        )
    rows = bit_rows(c)
    counts = [0, 0, 0]
    o = 0
    for i in range(c.n):
        for j in range(i + 1, c.n):
            x = c.colors[o]
            counts[x] += ((rows[x][i] & rows[x][j]) >> (j + 1)).bit_count()
            o += 1
    return (counts[0], counts[1], counts[2])


def permute_colors(c: EdgeColoring, pi: Mapping[Color, Color]) -> EdgeColoring:
    """Replace every edge color x by pi[x]; pi must be a bijection on the colors."""
    images = {Color(pi[x]) for x in COLORS}
    if images != set(COLORS):
        raise ValueError("color permutation must be a bijection on {B, R, Y}")
    table = bytearray(range(256))
    for x in COLORS:
        table[x.value] = Color(pi[x]).value
    return EdgeColoring(c.n, c.colors.translate(bytes(table)))


def permute_vertices(c: EdgeColoring, rho: Sequence[int]) -> EdgeColoring:
    """Relabel vertices: edge (rho[i], rho[j]) in the result gets the color of (i, j)."""
    if sorted(rho) != list(range(c.n)):
        raise ValueError("vertex permutation must be a bijection on range(n)")
    out = bytearray(len(c.colors))
    for o, (i, j) in enumerate(edge_list(c.n)):
        a, b = rho[i], rho[j]
        if a > b:
            a, b = b, a
        out[edge_index(a, b, c.n)] = c.colors[o]
    return EdgeColoring(c.n, bytes(out))


def delete_vertex(c: EdgeColoring, v: int) -> EdgeColoring:
    """Coloring of K_{n-1} on the remaining vertices; indices above v shift down."""
    if not 0 <= v < c.n:
        raise ValueError(f"vertex {v} out of range for n={c.n}")
    if c.n < 2:
        raise ValueError("cannot delete a vertex from K_1")
    keep = [u for u in range(c.n) if u != v]
    return EdgeColoring.from_function(
        c.n - 1, lambda i, j: c.colors[edge_index(keep[i], keep[j], c.n)]
    )


def color_degree_profile(c: EdgeColoring, v: int) -> tuple[int, int, int]:
    """Number of edges of each color at vertex v; sums to n - 1."""
    if not 0 <= v < c.n:
        raise ValueError(f"vertex {v} out of range for n={c.n}")
    rows = bit_rows(c)
    return tuple(rows[x][v].bit_count() for x in range(3))


def fingerprint(c: EdgeColoring) -> str:
    """Deterministic token from a relabeling-invariant summary.

    Token inequality proves the colorings are not vertex-relabelings of each
    other; equality proves nothing.  The summary is the sorted multiset of
    color degree profiles plus the triangle census counts.
    """
    profiles = sorted(color_degree_profile(c, v) for v in range(c.n))
    cen = census(c)
    payload = repr((c.n, profiles, cen.mono, cen.bichromatic, cen.rainbow))
    return hashlib.sha256(payload.encode("ascii")).hexdigest()
