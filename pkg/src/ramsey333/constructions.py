"""The two triangle-free 16-vertex colorings.

`construct_gf16` is the finite-field recipe: vertices are the 16 field
elements, and edge {u, w} takes the color of the cubic-residue class that
contains u XOR w.  Sum-freeness of the classes makes the result
triangle-free; the output is deterministic and bit-identical across runs.

The cylinder coloring is defined by structural rules rather than an explicit
edge list: a hub vertex O with blue, red, yellow spokes to the three blocks
A1..A5, B1..B5, C1..C5; each block K_5 colored with two of the three colors;
and cross edges tied together by the cyclic shift sigma, so the color of
BiCj is sigma of AiBj and the color of CiAj is sigma squared of AiBj.
`cylinder_template` records exactly those rules; `solve_template` recovers a
concrete coloring from them by backtracking (the first solution under the
fixed search order is the canonical one).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .coloring import COLORS, Color, EdgeColoring, edge_index
from .gf16 import cubic_classes
from .templates import ColoringTemplate, Coupling, rotate_color

# Residue class index -> edge color, fixed for canonical output.
CLASS_COLORS = (Color.BLUE, Color.RED, Color.YELLOW)


def sigma(x: Color) -> Color:
    """The cyclic color shift Red -> Yellow -> Blue -> Red; sigma^3 = identity."""
    return rotate_color(x, 1)


def construct_gf16() -> EdgeColoring:
    """Triangle-free K_16: vertex = field element, edge color = class of u XOR w."""
    classes = cubic_classes()
    return EdgeColoring.from_function(
        16, lambda u, w: CLASS_COLORS[classes.class_of(u ^ w)]
    )


_CYLINDER_LABELS = ("O",) + tuple(f"{g}{i}" for g in "ABC" for i in range(1, 6))


@dataclass(frozen=True)
class CylinderLabels:
    """Fixed vertex roles: 0 = O, 1-5 = A1..A5, 6-10 = B1..B5, 11-15 = C1..C5."""

    labels: tuple[str, ...] = _CYLINDER_LABELS

    def label(self, v: int) -> str:
        return self.labels[v]

    def vertex(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown cylinder label: {label!r}") from None


CYLINDER_LABELS = CylinderLabels()


def _a(i: int) -> int:
    return i


def _b(i: int) -> int:
    return 5 + i


def _c(i: int) -> int:
    return 10 + i


def cylinder_template() -> ColoringTemplate:
    """Structural rules of the cylinder coloring as a 16-vertex template.

    Spokes are fixed (O-Ai blue, O-Bi red, O-Ci yellow), each block K_5 is
    restricted to two colors (A: red/yellow, B: yellow/blue, C: blue/red),
    AiBj cross edges are unrestricted, and couplings force
    color(BiCj) = sigma(color(AiBj)) and color(CiAj) = sigma^2(color(AiBj)).
    """
    n = 16
    full = frozenset(COLORS)
    domains = [full] * comb(n, 2)

    spoke_colors = {_a: Color.BLUE, _b: Color.RED, _c: Color.YELLOW}
    block_domains = {
        _a: frozenset({Color.RED, Color.YELLOW}),
        _b: frozenset({Color.YELLOW, Color.BLUE}),
        _c: frozenset({Color.BLUE, Color.RED}),
    }
    for group, spoke in spoke_colors.items():
        for i in range(1, 6):
            domains[edge_index(0, group(i), n)] = frozenset({spoke})
        for i, j in product(range(1, 6), repeat=2):
            if i < j:
                domains[edge_index(group(i), group(j), n)] = block_domains[group]

    couplings = []
    for i, j in product(range(1, 6), repeat=2):
        ab = edge_index(_a(i), _b(j), n)
        bc = edge_index(_b(i), _c(j), n)
        ca = edge_index(_a(j), _c(i), n)  # the pair {Ci, Aj}, stored low-high
        couplings.append(Coupling(src=ab, dst=bc, shift=1))
        couplings.append(Coupling(src=ab, dst=ca, shift=2))

    return ColoringTemplate(n, tuple(domains), tuple(couplings))
