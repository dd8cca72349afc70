"""Standalone SVG rendering of a risk diagram."""

from lxml import etree
from lxml.builder import ElementMaker

from app.models.diagram import RiskDiagram

SVG_NS = "http://www.w3.org/2000/svg"
MIN_WIDTH = 200
MIN_HEIGHT = 150

MARGIN = 10
TITLE_HEIGHT = 30

STYLE = """
.title { font-family: sans-serif; font-size: 14px; font-weight: bold; }
.label { font-family: sans-serif; font-size: 11px; dominant-baseline: middle; }
.band-high { fill: #c0392b; }
.band-elevated { fill: #e67e22; }
.band-moderate { fill: #f1c40f; }
.band-low { fill: #27ae60; }
.negative { stroke: #000000; stroke-width: 1; }
.hatch { fill: url(#hatch); }
"""

E = ElementMaker(namespace=SVG_NS, nsmap={None: SVG_NS})


def _px(value: float) -> str:
    return f"{value:.2f}"


def emit_svg(diagram: RiskDiagram, width_px: int, height_px: int) -> bytes:
    """
    Horizontal bar chart, one bar per entry in rank order.

    Bar length is |p_m| relative to the largest |p_m| of the diagram. Bars of
    negative p_m carry the ``negative`` class and a hatched overlay; every bar
    carries its ``band-<name>`` class.
    """
    if width_px < MIN_WIDTH or height_px < MIN_HEIGHT:
        raise ValueError(
            f"SVG must be at least {MIN_WIDTH}x{MIN_HEIGHT} px, got {width_px}x{height_px}"
        )

    label_width = min(160, width_px // 3)
    bar_area = width_px - label_width - MARGIN
    row_height = (height_px - TITLE_HEIGHT - MARGIN) / len(diagram.entries)
    bar_height = row_height * 0.7
    max_abs = max(abs(e.p_m) for e in diagram.entries)

    start, end = diagram.period
    title = f"Investment risk diagram {start.isoformat()} to {end.isoformat()}"

    root = E.svg(
        E.title(title),
        E.defs(
            E.style(STYLE),
            E.pattern(
                E.line(x1="0", y1="0", x2="0", y2="6", stroke="#000000", **{"stroke-width": "2"}),
                id="hatch",
                patternUnits="userSpaceOnUse",
                width="6",
                height="6",
                patternTransform="rotate(45)",
            ),
        ),
        E.text(title, {"class": "title"}, x=str(MARGIN), y="20"),
        version="1.1",
        width=str(width_px),
        height=str(height_px),
        viewBox=f"0 0 {width_px} {height_px}",
    )

    for i, entry in enumerate(diagram.entries):
        top = TITLE_HEIGHT + i * row_height
        length = round(bar_area * abs(entry.p_m) / max_abs) if max_abs > 0 else 0
        sign_class = "negative" if entry.p_m < 0 else "positive"

        group = E.g({"class": f"entry rank-{entry.rank}"})
        group.append(
            E.text(
                f"{entry.symbol} {entry.p_m:.6f}",
                {"class": "label"},
                x=str(MARGIN),
                y=_px(top + row_height / 2),
            )
        )
        bar_attrs = dict(
            x=str(label_width),
            y=_px(top + (row_height - bar_height) / 2),
            width=str(length),
            height=_px(bar_height),
        )
        group.append(E.rect({"class": f"bar band-{entry.band.value} {sign_class}"}, **bar_attrs))
        if entry.p_m < 0:
            group.append(E.rect({"class": "hatch"}, **bar_attrs))
        root.append(group)

    return etree.tostring(root, xml_declaration=True, encoding="UTF-8", pretty_print=True)
