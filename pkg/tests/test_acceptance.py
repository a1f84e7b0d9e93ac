"""Exit criteria for the package, one test per criterion.

Each test records one ``ACCEPTANCE <n> PASS|FAIL`` line, printed in the
pytest terminal summary, and then asserts.
"""

import math
import random
import re
import subprocess
import sys
import time
from pathlib import Path

import pytest

from xcycloid import raster
from xcycloid.core import (
    Point2,
    TrochoidParams,
    closed_form_epitrochoid,
    closed_form_hypotrochoid,
    epitrochoid_phase,
    initial_layout,
    rotation_about,
    sample_angles,
    t2,
    trochoid_point,
)
from xcycloid.encoder import build_plan, to_argv
from xcycloid.scene import build_animation
from xcycloid.usersetting import ParseError, parse_usersetting

from conftest import ACCEPTANCE_LINES, find_ffmpeg

SEED = 20231006


def report(number, title, ok, detail=""):
    line = f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def random_params(rng, sign, count):
    out = []
    for _ in range(count):
        R = rng.uniform(0.5, 10.0)
        out.append(TrochoidParams(R=R, r=rng.uniform(0.1, 1.5 * R), d=rng.uniform(0.0, 2 * R),
                                  sign=sign, turns=rng.randint(1, 3)))
    return out


def test_01_hypotrochoid_oracle():
    rng = random.Random(SEED)
    sets = [TrochoidParams(R=4, r=2, d=1), TrochoidParams(R=4, r=2, d=2)]
    sets += random_params(rng, -1, 20)
    start = time.perf_counter()
    worst = 0.0
    for p in sets:
        for phi in sample_angles(p.turns, 1000):
            err = trochoid_point(p, phi).dist(closed_form_hypotrochoid(p, math.radians(phi)))
            worst = max(worst, err)
    elapsed = time.perf_counter() - start
    report(1, "hypotrochoid composition == closed form",
           worst <= 1e-9 and elapsed < 1.0, f"max err {worst:.2e}, {elapsed:.3f} s")


def test_02_epitrochoid_rotation_equivalence():
    rng = random.Random(SEED + 1)
    sets = [TrochoidParams(R=3, r=1, d=0.5, sign=1)] + random_params(rng, 1, 20)
    worst = 0.0
    for p in sets:
        alpha = epitrochoid_phase(p)
        spin = rotation_about(math.degrees(alpha), p.O_R)
        for phi in sample_angles(p.turns, 1000):
            expected = spin(closed_form_epitrochoid(p, math.radians(phi) - alpha))
            worst = max(worst, trochoid_point(p, phi).dist(expected))
    report(2, "epitrochoid composition == closed form rotated by pi*r/R",
           worst <= 1e-9, f"max err {worst:.2e}")


def _wrap(deg):
    return (deg + 180.0) % 360.0 - 180.0


def test_03_rolling_constraint():
    rng = random.Random(SEED + 2)
    worst = 0.0
    for _ in range(100):
        R, r = rng.uniform(0.5, 10), rng.uniform(0.1, 10)
        s = rng.choice([1, -1])
        phi = rng.uniform(0, 360)
        theta = s * phi * R / r
        T = t2(phi, s, r / R, Point2(rng.uniform(-5, 5), rng.uniform(-5, 5)))
        # angle read back from the matrix, compared modulo a full turn
        err = abs(_wrap(T.angle_deg - theta))
        arcs = abs(R * math.radians(phi) - r * math.radians(abs(theta)))
        worst = max(worst, err, arcs)
    report(3, "t2 angle == s*phi*R/r (equal arcs)", worst <= 1e-12, f"max abs err {worst:.2e}")


@pytest.mark.parametrize("R, r, turns", [(3, 1, 1), (4, 2, 1), (5, 3, 3)])
def test_04_closure(R, r, turns):
    p = TrochoidParams(R=R, r=r, d=1.0)
    gap = trochoid_point(p, 360 * turns).dist(initial_layout(p)[1])
    early = min(trochoid_point(p, 360 * t).dist(initial_layout(p)[1]) for t in range(1, turns))\
        if turns > 1 else math.inf
    report(4, f"R={R}, r={r} closes after {turns} turn(s)", gap <= 1e-9 and early > 1e-6,
           f"gap {gap:.2e}")


def malformed_strings(count, seed):
    """Mutations of the reference -u string that a whole-grammar regex rejects."""
    num = r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?"
    pair = rf"[A-Za-z_][A-Za-z0-9_]*[ \t]*=[ \t]*{num}"
    grammar = re.compile(rf"[ \t]*(?:{pair}(?:[ \t]*;[ \t]*{pair})*)?[ \t]*")
    rng = random.Random(seed)
    base = "R=3;r=1;d=1;N=100"
    junk = "=;;.,-+eE \t#'\"()[]x9_é\x00\n"
    found = []
    while len(found) < count:
        s = list(base)
        for _ in range(rng.randint(1, 4)):
            op = rng.random()
            pos = rng.randrange(len(s) + 1)
            if op < 0.4:
                s.insert(pos, rng.choice(junk))
            elif op < 0.7 and s:
                del s[min(pos, len(s) - 1)]
            elif s:
                s[min(pos, len(s) - 1)] = rng.choice(junk)
        text = "".join(s)
        if not grammar.fullmatch(text) and text not in found:
            found.append(text)
    return found


def test_05_parser():
    table = parse_usersetting("R=3;r=1;d=1;N=100")
    exact = table.entries == [("R", 3), ("r", 1), ("d", 1), ("N", 100)]
    rejected, other = 0, []
    fuzz = malformed_strings(50, SEED + 3)
    for text in fuzz:
        try:
            parse_usersetting(text)
        except ParseError:
            rejected += 1
        except Exception as exc:  # anything else is a crash
            other.append((text, exc))
    report(5, "usersetting parses reference string; fuzzed garbage -> ParseError",
           exact and rejected == 50 and not other, f"{rejected}/50 rejected")


def test_06_frame_count():
    frames = build_animation(TrochoidParams(N=100, turns=1))
    prefixes = all(
        frames[i + 1].dynamic[0].points[: len(frames[i].dynamic[0].points)]
        == frames[i].dynamic[0].points
        and len(frames[i].dynamic[0].points) == i + 1
        for i in range(len(frames) - 1))
    report(6, "N=100 -> 101 frames with growing path", len(frames) == 101 and prefixes,
           f"{len(frames)} frames")


def test_07_raster_dims(tmp_path):
    scene = build_animation(TrochoidParams(N=10))[4]
    b72 = raster.rasterize(scene, 10.0, 72)
    b600 = raster.rasterize(scene, 10.0, 600)
    p72, p600 = raster.pad_even(b72), raster.pad_even(b600)
    dims = [(b.width, b.height) for b in (b72, p72, b600, p600)]
    for name in ("a.ppm", "b.ppm"):
        raster.write_ppm(raster.pad_even(raster.rasterize(scene, 10.0, 72)), tmp_path / name)
    same = (tmp_path / "a.ppm").read_bytes() == (tmp_path / "b.ppm").read_bytes()
    ok = dims == [(283, 283), (284, 284), (2362, 2362), (2362, 2362)] and same
    report(7, "raster 283->284 at 72 dpi, 2362 at 600 dpi; PPM reproducible", ok, f"{dims}")


def test_08_encoder_argv():
    expected = ("ffmpeg -r 30 -f image2 -start_number 1 -i video/xcycloid-%04d.png -c:v libx264 "
             "-vf pad=ceil(iw/2)*2:ceil(ih/2)*2 video/xcycloid.mp4").split()[1:]
    argv = to_argv(build_plan(30, "video/xcycloid-%04d.png", 1, "libx264", "video/xcycloid.mp4"))
    report(8, "encoder argv == printed ffmpeg command", argv == expected and len(argv) == 13)


def test_09_pipeline_dry_run(tmp_path):
    base = tmp_path / "video" / "xcycloid"
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "xcycloid", "pipeline", "--dry-run", "-u", "R=3;r=1;d=1;N=100",
         "-o", str(base), "--dpi", "150"],
        capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    frames = sorted(Path(base.parent).glob("xcycloid-*.ppm"))
    argv = proc.stdout.splitlines()
    ok = (proc.returncode == 0 and len(frames) == 101 and len(argv) == 13
          and argv[7] == f"{base}-%04d.ppm" and elapsed < 30)
    report(9, "pipeline --dry-run writes 101 frames and prints argv", ok,
           f"exit {proc.returncode}, {len(frames)} frames, {elapsed:.2f} s")


def test_10_live_pipeline(tmp_path):
    exe = find_ffmpeg()
    if exe is None:
        ACCEPTANCE_LINES.append("ACCEPTANCE 10 SKIP  no ffmpeg-compatible encoder")
        pytest.skip("no ffmpeg-compatible encoder available")
    base = tmp_path / "xcycloid"
    proc = subprocess.run(
        [sys.executable, "-m", "xcycloid", "pipeline", "-u", "R=3;r=1;d=1;N=100",
         "-o", str(base), "--dpi", "72", "--encoder-path", exe],
        capture_output=True, text=True)
    video = tmp_path / "xcycloid.mp4"
    ok = proc.returncode == 0 and video.is_file() and video.stat().st_size > 0
    report(10, "live pipeline produces a nonempty mp4", ok,
           f"exit {proc.returncode}, {video.stat().st_size if video.exists() else 0} bytes")
