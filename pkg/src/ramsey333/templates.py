"""Partial colorings: per-edge color domains plus edge-to-edge couplings.

A template generalizes "a complete graph minus some color decisions": every
edge carries a nonempty domain of allowed colors, and optional couplings tie
one edge's color to another's through the cyclic shift Blue -> Red -> Yellow
-> Blue.  A template whose domains are all singletons is exactly a coloring.

solve_template completes a template into triangle-free colorings by
depth-first backtracking: edges are decided in ordinal order, colors tried
in order B < R < Y, coupled edges forced immediately, and any assignment
that closes a monochromatic triangle is pruned.  The search order is fixed,
so the first solution is canonical and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .coloring import COLORS, Color, EdgeColoring, edge_list


def rotate_color(x: Color, k: int) -> Color:
    """Shift a color k steps along the 3-cycle Blue -> Red -> Yellow -> Blue."""
    return Color((int(x) + k) % 3)


@dataclass(frozen=True)
class Coupling:
    """Functional constraint: color(dst) = rotate_color(color(src), shift)."""

    src: int
    dst: int
    shift: int


@dataclass(frozen=True)
class ColoringTemplate:
    """Partial coloring of K_n: one nonempty domain per edge ordinal."""

    n: int
    domains: tuple[frozenset[Color], ...]
    couplings: tuple[Coupling, ...] = ()

    def __post_init__(self):
        m = comb(self.n, 2)
        if len(self.domains) != m:
            raise ValueError(f"need {m} domains for n={self.n}, got {len(self.domains)}")
        for o, dom in enumerate(self.domains):
            if not dom:
                raise ValueError(f"empty domain at edge ordinal {o}")
            if not dom <= set(COLORS):
                raise ValueError(f"domain at edge ordinal {o} contains non-colors")
        for cp in self.couplings:
            if not (0 <= cp.src < m and 0 <= cp.dst < m):
                raise ValueError(f"coupling ordinal out of range: {cp}")
            if cp.src == cp.dst:
                raise ValueError(f"coupling ties an edge to itself: {cp}")
            if cp.shift not in (0, 1, 2):
                raise ValueError(f"coupling shift must be 0, 1 or 2: {cp}")

    @classmethod
    def from_coloring(cls, c: EdgeColoring) -> "ColoringTemplate":
        return cls(c.n, tuple(frozenset({Color(b)}) for b in c.colors))

    def open_ordinals(self) -> list[int]:
        return [o for o, dom in enumerate(self.domains) if len(dom) > 1]


def template_violations(t: ColoringTemplate, c: EdgeColoring) -> list[str]:
    """Independent post-hoc check that a coloring satisfies a template.

    Checks every domain and every coupling directly, with no shared state
    with the solver.  Returns human-readable violation messages; empty means
    the coloring conforms.
    """
    if c.n != t.n:
        return [f"vertex count mismatch: template n={t.n}, coloring n={c.n}"]
    msgs = []
    for o, dom in enumerate(t.domains):
        if Color(c.colors[o]) not in dom:
            i, j = edge_list(t.n)[o]
            msgs.append(f"edge ({i},{j}) colored {Color(c.colors[o]).char} outside domain")
    for cp in t.couplings:
        want = rotate_color(Color(c.colors[cp.src]), cp.shift)
        if Color(c.colors[cp.dst]) != want:
            msgs.append(
                f"coupling broken: edge {cp.dst} should be {want.char} "
                f"(edge {cp.src} shifted by {cp.shift})"
            )
    return msgs


def solve_template(t: ColoringTemplate, limit: int = 1) -> list[EdgeColoring]:
    """Triangle-free completions of a template, at most `limit`, in DFS order.

    Deterministic: edges in ordinal order, colors in order B < R < Y,
    couplings propagated eagerly.  An empty list means no completion exists.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    n = t.n
    m = comb(n, 2)
    edges = edge_list(n)
    partners: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    for cp in t.couplings:
        partners[cp.src].append((cp.dst, cp.shift))
        partners[cp.dst].append((cp.src, (3 - cp.shift) % 3))

    UNSET = 255
    assigned = bytearray([UNSET]) * m
    rows = [[0] * n for _ in range(3)]  # per-color adjacency over assigned edges
    solutions: list[EdgeColoring] = []

    def place(o: int, x: int) -> None:
        i, j = edges[o]
        assigned[o] = x
        rows[x][i] |= 1 << j
        rows[x][j] |= 1 << i

    def unplace(o: int) -> None:
        x = assigned[o]
        i, j = edges[o]
        assigned[o] = UNSET
        rows[x][i] &= ~(1 << j)
        rows[x][j] &= ~(1 << i)

    domain_masks = [sum(1 << c for c in dom) for dom in t.domains]

    def feasible_mask(e: int) -> int:
        """Colors in e's domain that close no triangle under the current rows."""
        i, j = edges[e]
        mask = 0
        for x in (0, 1, 2):
            if not rows[x][i] & rows[x][j]:
                mask |= 1 << x
        return mask & domain_masks[e]

    def assign_with_couplings(o: int, x: int, trail: list[int]) -> bool:
        """Assign o=x and everything it forces; False on any contradiction."""
        pending = [(o, x)]
        while pending:
            e, cx = pending.pop()
            if assigned[e] != UNSET:
                if assigned[e] != cx:
                    return False
                continue
            if cx not in t.domains[e]:
                return False
            i, j = edges[e]
            if rows[cx][i] & rows[cx][j]:
                return False  # would close a monochromatic triangle
            place(e, cx)
            trail.append(e)
            for f, k in partners[e]:
                pending.append((f, (cx + k) % 3))
        # Forward check: a branch is dead as soon as some undecided edge has no
        # usable color left, or some coupled pair of undecided edges cannot be
        # satisfied jointly.  Pruning only, so the DFS leaf order is unchanged.
        for e in range(m):
            if assigned[e] == UNSET and not feasible_mask(e):
                return False
        for cp in t.couplings:
            if assigned[cp.src] == UNSET and assigned[cp.dst] == UNSET:
                src_ok = feasible_mask(cp.src)
                dst_ok = feasible_mask(cp.dst)
                if not any(
                    src_ok >> cx & 1 and dst_ok >> ((cx + cp.shift) % 3) & 1
                    for cx in (0, 1, 2)
                ):
                    return False
        return True

    def dfs(start: int) -> bool:
        o = start
        while o < m and assigned[o] != UNSET:
            o += 1
        if o == m:
            solutions.append(EdgeColoring(n, bytes(assigned)))
            return len(solutions) >= limit
        for x in (0, 1, 2):
            if x not in t.domains[o]:
                continue
            trail: list[int] = []
            if assign_with_couplings(o, x, trail):
                if dfs(o + 1):
                    return True
            for e in reversed(trail):
                unplace(e)
        return False

    dfs(0)
    return solutions
