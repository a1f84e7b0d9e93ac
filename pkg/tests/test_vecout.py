import re
import xml.etree.ElementTree as ET

import pytest

from xcycloid.core import Point2, TrochoidParams
from xcycloid.scene import FrameScene, build_animation, build_static
from xcycloid.vecout import CapacityError, emit_svg, write_sequence

NS = {"svg": "http://www.w3.org/2000/svg"}


def layers(doc):
    root = ET.fromstring(doc)
    groups = {g.get("id"): list(g) for g in root.findall("svg:g", NS)}
    return root, groups["persistent"], groups["dynamic"]


@pytest.fixture(scope="module")
def frames():
    return build_animation(TrochoidParams(N=4))


def test_static_only():
    scene = FrameScene(build_static(TrochoidParams()), ())
    _, persistent, dynamic = layers(emit_svg(scene))
    assert [e.get("class") for e in persistent] == ["circle", "dot", "grid"]
    assert dynamic == []


def test_deterministic(frames):
    assert emit_svg(frames[2]) == emit_svg(frames[2])


def test_dynamic_order(frames):
    root, _, dynamic = layers(emit_svg(frames[1]))
    assert [e.get("class") for e in dynamic] == [
        "curve", "dot", "segment", "segment", "circle", "dot", "dot"]
    labels = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
    assert labels == ["P", "R-r", "d"]


def test_canvas_and_flip(frames):
    root, persistent, _ = layers(emit_svg(frames[0], 10.0, 72))
    assert root.get("viewBox") == "0.0000 0.0000 10.0000 10.0000"
    assert root.get("width") == "10.0000cm"
    assert (persistent[0].get("cx"), persistent[0].get("cy")) == ("5.0000", "5.0000")
    # frame 1 at 90 degrees: contact point at model (0, 4) -> SVG y = 5 - 4
    _, _, dynamic = layers(emit_svg(frames[1]))
    assert (dynamic[6].get("cx"), dynamic[6].get("cy")) == ("5.0000", "1.0000")


def test_four_decimals(frames):
    doc = emit_svg(frames[3])
    numbers = re.findall(r' (?:x|y|x1|y1|x2|y2|cx|cy|r|stroke-width|font-size)="([^"]*)"', doc)
    numbers += [n for pts in re.findall(r'points="([^"]*)"', doc) for n in re.split("[ ,]", pts)]
    assert numbers
    assert all(re.fullmatch(r"-?\d+\.\d{4}", n) for n in numbers), numbers
    assert "-0.0000" not in doc


def test_label_escaped():
    from xcycloid.scene import DotPrim
    scene = FrameScene((), (DotPrim(Point2(0, 0), "a<b&c"),))
    root = ET.fromstring(emit_svg(scene))
    assert next(root.iter("{http://www.w3.org/2000/svg}text")).text == "a<b&c"


def test_write_sequence(tmp_path, frames):
    paths = write_sequence(tmp_path, "xcycloid", frames[:3])
    assert [p.name for p in paths] == ["xcycloid-0001.svg", "xcycloid-0002.svg", "xcycloid-0003.svg"]
    assert paths[1].read_text() == emit_svg(frames[1])


def test_write_sequence_idempotent(tmp_path, frames):
    first = [p.read_bytes() for p in write_sequence(tmp_path, "x", frames)]
    second = [p.read_bytes() for p in write_sequence(tmp_path, "x", frames)]
    assert first == second


def test_empty_sequence(tmp_path):
    assert write_sequence(tmp_path / "none", "x", []) == []
    assert not (tmp_path / "none").exists()


def test_default_length(tmp_path):
    paths = write_sequence(tmp_path, "xcycloid", build_animation(TrochoidParams(R=3, r=1, d=1)))
    assert len(paths) == 101
    assert paths[-1].name == "xcycloid-0101.svg"


def test_capacity(tmp_path, frames):
    with pytest.raises(CapacityError):
        write_sequence(tmp_path, "x", [frames[0]] * 10000)
    assert list(tmp_path.iterdir()) == []


def test_unwritable(tmp_path, frames):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(OSError):
        write_sequence(blocker, "x", frames[:1])
