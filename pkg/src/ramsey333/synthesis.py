"""Seventeen-vertex assembly from a shared triangle-free K_15.

Delete a vertex from a triangle-free K_16, enumerate the spoke colorings
that extend the remaining K_15 back to a triangle-free K_16, then mount two
such extensions side by side: vertices 0-14 form the shared K_15, vertices
15 and 16 carry the two extensions, and only the edge {15, 16} is left open.
Every triangle avoiding that edge lies inside one of the two triangle-free
16-vertex restrictions, so after closing the edge with color x the
monochromatic triangles are exactly {v, 15, 16} for the shared vertices v
whose two spokes both carry x.  With twin extensions that overlap is a full
spoke color class: five triangles, all in the chosen color.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    COLORS,
    Color,
    EdgeColoring,
    TriangleCensus,
    bit_rows,
    census,
    delete_vertex,
    edge_index,
    edge_list,
)
from .constructions import construct_gf16
from .errors import NotTriangleFreeError
from .templates import ColoringTemplate


@dataclass(frozen=True)
class VertexExtension:
    """Spoke colors for one new vertex, indexed by host vertex."""

    spoke_colors: tuple[Color, ...]

    @classmethod
    def from_string(cls, s: str) -> "VertexExtension":
        return cls(tuple(Color.from_char(ch) for ch in s))

    def color_string(self) -> str:
        return "".join(x.char for x in self.spoke_colors)

    def __len__(self) -> int:
        return len(self.spoke_colors)


@dataclass(frozen=True)
class AssemblyReport:
    """Result of closing the open edge of an assembled template."""

    added_edge_color: Color
    census: TriangleCensus
    triangles_through_new_edge: int
    coloring: EdgeColoring


def extension_of_vertex(c: EdgeColoring, v: int) -> VertexExtension:
    """The spokes vertex v already has in c, indexed like delete_vertex(c, v)."""
    if not 0 <= v < c.n:
        raise ValueError(f"vertex {v} out of range for n={c.n}")
    return VertexExtension(
        tuple(c.color(u, v) for u in range(c.n) if u != v)
    )


def _require_triangle_free(c: EdgeColoring, what: str) -> None:
    cen = census(c)
    if cen.total_mono:
        raise NotTriangleFreeError(
            f"{what} contains {cen.total_mono} monochromatic triangle(s)"
        )


def find_extensions(c: EdgeColoring, limit: int | None = None) -> list[VertexExtension]:
    """All spoke colorings whose one-vertex extension of c stays triangle-free.

    Depth-first over host vertices in index order, colors in order B < R < Y;
    the output order is that DFS order.  The host must be triangle-free.
    A spoke pair (u, v) colored x is forbidden exactly when edge (u, v) has
    color x, so candidates are pruned with one bit-row intersection.
    """
    _require_triangle_free(c, "host coloring")
    rows = bit_rows(c)
    n = c.n
    out: list[VertexExtension] = []
    spokes = bytearray(n)
    chosen = [0, 0, 0]  # per color, bitmask of vertices already given that spoke

    def dfs(v: int) -> bool:
        if v == n:
            out.append(VertexExtension(tuple(Color(b) for b in spokes)))
            return limit is not None and len(out) >= limit
        for x in (0, 1, 2):
            if chosen[x] & rows[x][v]:
                continue
            spokes[v] = x
            chosen[x] |= 1 << v
            done = dfs(v + 1)
            chosen[x] &= ~(1 << v)
            if done:
                return True
        return False

    dfs(0)
    return out


def extend_with(c: EdgeColoring, e: VertexExtension) -> EdgeColoring:
    """K_{n+1} with the new vertex appended as index n."""
    if len(e) != c.n:
        raise ValueError(f"extension length {len(e)} does not match n={c.n}")
    return EdgeColoring.from_function(
        c.n + 1,
        lambda i, j: e.spoke_colors[i] if j == c.n else c.colors[edge_index(i, j, c.n)],
    )


def assemble(
    k15: EdgeColoring, ea: VertexExtension, eb: VertexExtension
) -> ColoringTemplate:
    """Template on 17 vertices: shared K_15, two extended vertices, one open edge.

    Vertices 0-14 copy k15, vertex 15 is colored by ea, vertex 16 by eb, and
    edge (15, 16) keeps the full domain.  Both 16-vertex restrictions are
    checked triangle-free up front.
    """
    if k15.n != 15:
        raise ValueError(f"shared core must have 15 vertices, got {k15.n}")
    _require_triangle_free(k15, "shared K15")
    for name, ext in (("ea", ea), ("eb", eb)):
        if len(ext) != 15:
            raise ValueError(f"extension {name} has length {len(ext)}, need 15")
        extended = extend_with(k15, ext)
        cen = census(extended)
        if cen.total_mono:
            raise NotTriangleFreeError(
                f"extension {name} is not valid for the shared K15: "
                f"{cen.total_mono} monochromatic triangle(s)"
            )

    n = 17
    full = frozenset(COLORS)
    domains: list[frozenset[Color]] = []
    for i, j in edge_list(n):
        if j < 15:
            domains.append(frozenset({Color(k15.colors[edge_index(i, j, 15)])}))
        elif j == 15:
            domains.append(frozenset({ea.spoke_colors[i]}))
        elif i < 15:  # j == 16
            domains.append(frozenset({eb.spoke_colors[i]}))
        else:  # the open edge (15, 16)
            domains.append(full)
    return ColoringTemplate(n, tuple(domains))


def complete_edge(t: ColoringTemplate, x: Color) -> AssemblyReport:
    """Close the single open edge of a template with color x and take census."""
    opens = t.open_ordinals()
    if len(opens) != 1 or t.domains[opens[0]] != frozenset(COLORS):
        raise ValueError(
            "template must have exactly one open edge with the full color domain"
        )
    o = opens[0]
    colors = bytearray(next(iter(dom)).value for dom in t.domains)
    colors[o] = Color(x).value
    c = EdgeColoring(t.n, bytes(colors))
    cen = census(c)
    u, v = edge_list(t.n)[o]
    through = sum(1 for tr in cen.mono_list if u in tr[:3] and v in tr[:3])
    return AssemblyReport(Color(x), cen, through, c)


def twin_k17(x: Color, deleted_vertex: int = 0) -> AssemblyReport:
    """End-to-end pipeline: GF(16) K_16, delete a vertex, remount it twice.

    The two extensions are the deleted vertex's original spokes, so the shared
    K_15 extends to two identical triangle-free halves and the closed edge
    creates exactly five monochromatic triangles, all in color x.
    """
    g = construct_gf16()
    ext = extension_of_vertex(g, deleted_vertex)
    k15 = delete_vertex(g, deleted_vertex)
    t = assemble(k15, ext, ext)
    return complete_edge(t, x)
