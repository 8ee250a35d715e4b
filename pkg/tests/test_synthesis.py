"""Vertex extensions and the 17-vertex assembly."""

from itertools import product

import pytest

from ramsey333 import (
    COLORS,
    Color,
    ColoringTemplate,
    EdgeColoring,
    NotTriangleFreeError,
    VertexExtension,
    assemble,
    census,
    complete_edge,
    construct_gf16,
    delete_vertex,
    edge_index,
    exhaustive_min,
    extend_with,
    extension_of_vertex,
    find_extensions,
    twin_k17,
)

# The 15-vertex core of the finite-field coloring extends back to a
# triangle-free K16 in exactly one way: the spokes it lost.  Regression
# constant established by the exhaustive DFS (cross-checked against brute
# force at n = 8 below).
GF16_K15_EXTENSION_COUNT = 1


def _gf16_k15():
    return delete_vertex(construct_gf16(), 0)


def test_find_extensions_on_single_edge_host():
    host = EdgeColoring.from_string(2, "B")
    exts = find_extensions(host)
    assert len(exts) == 8  # all 9 spoke pairs except (Blue, Blue)
    assert VertexExtension((Color.BLUE, Color.BLUE)) not in exts


def test_find_extensions_requires_triangle_free_host():
    with pytest.raises(NotTriangleFreeError):
        find_extensions(EdgeColoring.from_string(3, "RRR"))


def test_find_extensions_complete_and_sound_vs_brute_force():
    g = construct_gf16()
    host = g
    while host.n > 8:
        host = delete_vertex(host, host.n - 1)
    pentagon = exhaustive_min(5, 2)[1]
    for small in (host, pentagon):
        brute = []
        for combo in product(range(3), repeat=small.n):
            ext = VertexExtension(tuple(Color(x) for x in combo))
            if census(extend_with(small, ext)).total_mono == 0:
                brute.append(ext)
        assert find_extensions(small) == brute


def test_gf16_k15_extension_is_unique():
    k15 = _gf16_k15()
    exts = find_extensions(k15)
    assert len(exts) == GF16_K15_EXTENSION_COUNT
    assert exts[0] == extension_of_vertex(construct_gf16(), 0)


def test_find_extensions_limit():
    host = EdgeColoring.from_string(2, "B")
    assert find_extensions(host, limit=3) == find_extensions(host)[:3]


def test_extend_with_round_trip():
    g = construct_gf16()
    k15 = delete_vertex(g, 15)
    restored = extend_with(k15, extension_of_vertex(g, 15))
    assert restored == g
    with pytest.raises(ValueError):
        extend_with(k15, VertexExtension((Color.BLUE,) * 3))


def test_extensions_extend_triangle_free():
    k15 = _gf16_k15()
    for ext in find_extensions(k15):
        assert census(extend_with(k15, ext)).mono == (0, 0, 0)


def test_assemble_builds_one_open_edge_template():
    k15 = _gf16_k15()
    ext = find_extensions(k15)[0]
    t = assemble(k15, ext, ext)
    assert t.n == 17
    assert t.open_ordinals() == [edge_index(15, 16, 17)]
    # both 16-vertex restrictions are the same triangle-free coloring
    for x in COLORS:
        rep = complete_edge(t, x)
        for dropped in (15, 16):
            assert census(delete_vertex(rep.coloring, dropped)).mono == (0, 0, 0)


def test_assemble_preconditions():
    k15 = _gf16_k15()
    ext = find_extensions(k15)[0]
    with pytest.raises(ValueError):
        assemble(delete_vertex(k15, 0), ext, ext)  # 14 vertices
    with pytest.raises(NotTriangleFreeError):
        bad = EdgeColoring(15, bytes(len(k15.colors)))  # all blue, full of triangles
        assemble(bad, ext, ext)
    with pytest.raises(NotTriangleFreeError):
        # recoloring one spoke breaks the extension
        broken = list(ext.spoke_colors)
        broken[0] = Color((broken[0] + 1) % 3)
        assemble(k15, VertexExtension(tuple(broken)), ext)


def test_complete_edge_requires_one_open_edge():
    rainbow = EdgeColoring.from_string(3, "BRY")
    with pytest.raises(ValueError):
        complete_edge(ColoringTemplate.from_coloring(rainbow), Color.BLUE)


def _manual_assembly(host, ea, eb):
    """Mount two extensions over any host, leaving the last edge open."""
    n = host.n + 2
    full = frozenset(COLORS)
    domains = []
    for i in range(n):
        for j in range(i + 1, n):
            if j < host.n:
                domains.append(frozenset({host.color(i, j)}))
            elif j == host.n:
                domains.append(frozenset({ea.spoke_colors[i]}))
            elif i < host.n:
                domains.append(frozenset({eb.spoke_colors[i]}))
            else:
                domains.append(full)
    return ColoringTemplate(n, tuple(domains))


def test_overlap_law_with_distinct_extensions():
    # pentagon host: triangle-free K5 with plenty of distinct extensions
    _, host = exhaustive_min(5, 2)
    assert census(host).total_mono == 0
    exts = find_extensions(host)
    assert len(exts) > 1
    pairs = [(exts[0], exts[1]), (exts[1], exts[0]), (exts[0], exts[-1]),
             (exts[2], exts[2])]
    for ea, eb in pairs:
        t = _manual_assembly(host, ea, eb)
        for x in COLORS:
            rep = complete_edge(t, x)
            overlap = sum(
                1 for v in range(host.n)
                if ea.spoke_colors[v] == eb.spoke_colors[v] == x
            )
            expected = [0, 0, 0]
            expected[x] = overlap
            assert rep.census.mono == tuple(expected)
            assert rep.triangles_through_new_edge == rep.census.total_mono


def test_twin_k17_counts():
    for x in COLORS:
        rep = twin_k17(x)
        expected = [0, 0, 0]
        expected[x] = 5
        assert rep.census.mono == tuple(expected)
        assert rep.triangles_through_new_edge == 5
        assert rep.census.total == 680  # C(17, 3)
        for tri in rep.census.mono_list:
            assert tri.color == x
            assert {15, 16} <= {tri.i, tri.j, tri.k}


def test_twin_k17_mono_triangles_match_spoke_class():
    rep = twin_k17(Color.BLUE, deleted_vertex=0)
    ext = extension_of_vertex(construct_gf16(), 0)
    blue_spokes = {v for v, col in enumerate(ext.spoke_colors) if col == Color.BLUE}
    assert {tri[:3] for tri in rep.census.mono_list} == {
        (v, 15, 16) for v in blue_spokes
    }


def test_twin_k17_any_deleted_vertex():
    for v in (3, 9):
        rep = twin_k17(Color.RED, deleted_vertex=v)
        assert rep.census.mono == (0, 5, 0)


def test_vertex_extension_string_round_trip():
    ext = VertexExtension.from_string("BRY")
    assert ext.color_string() == "BRY"
    assert len(ext) == 3
