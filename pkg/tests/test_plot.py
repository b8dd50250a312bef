import xml.etree.ElementTree as ET

from mqeraser.plot import Series, render_svg


def test_renders_valid_svg():
    svg = render_svg([("t", [Series("a", (0.0, 1.0, 2.0), (0.0, 0.5, 1.0)), Series("b<", (0.0, 2.0), (1.0, -1.0))])])
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert len(root.findall("{http://www.w3.org/2000/svg}polyline")) == 2
    assert "b&lt;" in svg


def test_flat_and_single_point_series():
    svg = render_svg([("flat", [Series("c", (3.0,), (0.0,))])])
    ET.fromstring(svg)


def test_deterministic():
    panel = [("t", [Series("a", (0.0, 1.0), (0.2, 0.4))])]
    assert render_svg(panel) == render_svg(panel)
