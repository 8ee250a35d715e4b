"""The coloring document: a line-oriented text format for edge colorings.

Version 1 layout, in this exact order:

    coloring/1
    n: 16
    k: 3
    colors: BRYB...            one character per edge, ordinal order
    meta.<key>: <value>        zero or more, sorted by key

`k` is the number of colors the document admits; the colors string may only
use the first k characters of "BRY".  Meta entries are free-form provenance
(method, seed, parameters); unknown meta keys are preserved and ignored.
Serialization is byte-stable: equal inputs give equal documents.

A template variant replaces undecided edges with '?' (meaning the full
domain).  Only one-open-edge assemblies need it, but the reader accepts any
number of open edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .coloring import COLORS, Color, EdgeColoring
from .errors import FormatError
from .templates import ColoringTemplate

FORMAT_TAG = "coloring/1"


def _infer_k(colors: bytes) -> int:
    return max(2, 1 + max(colors, default=0))


@dataclass(frozen=True)
class ColoringDocument:
    """Parsed form of one document: counts, colors string, provenance map."""

    n: int
    k: int
    colors: str
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.k not in (2, 3):
            raise FormatError(f"k must be 2 or 3, got {self.k}")
        if self.n < 1:
            raise FormatError(f"n must be positive, got {self.n}")
        expected = comb(self.n, 2)
        if len(self.colors) != expected:
            raise FormatError(
                f"colors string must have length C({self.n},2) = {expected}, "
                f"got {len(self.colors)}"
            )
        allowed = "BRY"[: self.k] + "?"
        bad = set(self.colors) - set(allowed)
        if bad:
            raise FormatError(f"colors string uses characters outside {allowed!r}: {sorted(bad)}")
        for key in self.meta:
            if not key or any(ch in key for ch in " :\n"):
                raise FormatError(f"bad meta key: {key!r}")

    @classmethod
    def from_coloring(
        cls, c: EdgeColoring, k: int | None = None, meta: dict[str, str] | None = None
    ) -> "ColoringDocument":
        if k is None:
            k = _infer_k(c.colors)
        return cls(c.n, k, c.color_string(), dict(meta or {}))

    def to_coloring(self) -> EdgeColoring:
        if "?" in self.colors:
            raise FormatError("document has open edges; parse it as a template")
        return EdgeColoring.from_string(self.n, self.colors)

    def to_template(self) -> ColoringTemplate:
        full = frozenset(COLORS)
        domains = tuple(
            full if ch == "?" else frozenset({Color.from_char(ch)})
            for ch in self.colors
        )
        return ColoringTemplate(self.n, domains)

    def to_text(self) -> str:
        lines = [
            FORMAT_TAG,
            f"n: {self.n}",
            f"k: {self.k}",
            f"colors: {self.colors}",
        ]
        for key in sorted(self.meta):
            value = str(self.meta[key])
            if "\n" in value:
                raise FormatError(f"meta value for {key!r} contains a newline")
            lines.append(f"meta.{key}: {value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ColoringDocument":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise FormatError("empty document")
        if lines[0].strip() != FORMAT_TAG:
            raise FormatError(f"unknown format header: {lines[0]!r}")
        fields: dict[str, str] = {}
        meta: dict[str, str] = {}
        for ln in lines[1:]:
            key, sep, value = ln.partition(":")
            if not sep:
                raise FormatError(f"line is not 'key: value': {ln!r}")
            key = key.strip()
            value = value.strip()
            if key.startswith("meta."):
                meta[key[len("meta.") :]] = value
            elif key in ("n", "k", "colors"):
                if key in fields:
                    raise FormatError(f"duplicate field: {key}")
                fields[key] = value
            else:
                raise FormatError(f"unknown field: {key!r}")
        for required in ("n", "k", "colors"):
            if required not in fields:
                raise FormatError(f"missing field: {required}")
        try:
            n = int(fields["n"])
            k = int(fields["k"])
        except ValueError:
            raise FormatError("n and k must be integers") from None
        return cls(n, k, fields["colors"], meta)


def serialize(
    c: EdgeColoring, k: int | None = None, meta: dict[str, str] | None = None
) -> str:
    """Canonical document text for a coloring; byte-stable for equal inputs."""
    return ColoringDocument.from_coloring(c, k=k, meta=meta).to_text()


def parse(text: str) -> EdgeColoring:
    """Read a document back into a coloring; raises FormatError on bad input."""
    return ColoringDocument.from_text(text).to_coloring()


def parse_document(text: str) -> ColoringDocument:
    return ColoringDocument.from_text(text)


def serialize_template(t: ColoringTemplate, meta: dict[str, str] | None = None) -> str:
    """Document text for a template whose domains are all singleton or full.

    Open edges are written as '?'.  Templates with two-color domains or
    couplings have no document form.
    """
    if t.couplings:
        raise FormatError("templates with couplings have no document form")
    chars = []
    full = frozenset(COLORS)
    for o, dom in enumerate(t.domains):
        if len(dom) == 1:
            chars.append(next(iter(dom)).char)
        elif dom == full:
            chars.append("?")
        else:
            raise FormatError(f"edge ordinal {o} has a partial domain; not serializable")
    doc = ColoringDocument(t.n, 3, "".join(chars), dict(meta or {}))
    return doc.to_text()


def parse_template(text: str) -> ColoringTemplate:
    """Read a document, allowing '?' for open edges."""
    return ColoringDocument.from_text(text).to_template()
