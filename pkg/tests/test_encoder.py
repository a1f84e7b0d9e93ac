import os
import stat

import pytest

from xcycloid import raster
from xcycloid.encoder import (
    PAD_FILTER,
    EncoderError,
    EncoderLaunchError,
    EncoderPlan,
    InvalidPatternError,
    build_plan,
    run_plan,
    to_argv,
)

REFERENCE_ARGV = ["-r", "30", "-f", "image2", "-start_number", "1", "-i",
              "video/xcycloid-%04d.png", "-c:v", "libx264", "-vf",
              "pad=ceil(iw/2)*2:ceil(ih/2)*2", "video/xcycloid.mp4"]


def script(tmp_path, name, body):
    path = tmp_path / name
    path.write_text("#!/bin/sh\n" + body)
    path.chmod(path.stat().st_mode | stat.S_IEXEC)
    return path


def test_reference_plan():
    plan = build_plan(30, "video/xcycloid-%04d.png", 1, "libx264", "video/xcycloid.mp4")
    assert plan == EncoderPlan(30, "image2", 1, "video/xcycloid-%04d.png", "libx264",
                               PAD_FILTER, "video/xcycloid.mp4")
    assert to_argv(plan) == REFERENCE_ARGV


def test_minimal_plan():
    argv = to_argv(build_plan(1, "f-%04d.ppm", 0, "libx264", "o.mp4"))
    assert len(argv) == 13 and argv[1] == "1" and argv[5] == "0"


def test_fps_slot():
    a = to_argv(build_plan(30, "v-%04d.png", 1, "libx264", "o.mp4"))
    b = to_argv(build_plan(60, "v-%04d.png", 1, "libx264", "o.mp4"))
    assert [i for i, (x, y) in enumerate(zip(a, b)) if x != y] == [1]


@pytest.mark.parametrize("pattern", ["frames.png", "f-%d.png", "f-%04d-%04d.png", "f-%00d.png"])
def test_invalid_pattern(pattern):
    with pytest.raises(InvalidPatternError):
        build_plan(30, pattern, 1, "libx264", "o.mp4")


@pytest.mark.parametrize("kw", [dict(fps=0), dict(start=-1), dict(out="")])
def test_invalid_fields(kw):
    args = dict(fps=30, pattern="f-%04d.png", start=1, codec="libx264", out="o.mp4") | kw
    with pytest.raises(ValueError):
        build_plan(**args)


def test_missing_executable(tmp_path):
    plan = build_plan(30, str(tmp_path / "f-%04d.ppm"), 1, "libx264", str(tmp_path / "o.mp4"))
    with pytest.raises(EncoderLaunchError, match="--encoder-path"):
        run_plan(plan, tmp_path / "nonexistent")
    assert not (tmp_path / "o.mp4").exists()


def test_nonzero_exit_carries_stderr(tmp_path):
    exe = script(tmp_path, "bad", 'echo "boom: $2" >&2\nexit 3\n')
    plan = build_plan(25, str(tmp_path / "f-%04d.ppm"), 1, "libx264", str(tmp_path / "o.mp4"))
    with pytest.raises(EncoderError) as info:
        run_plan(plan, exe)
    assert info.value.returncode == 3
    assert "boom: 25" in info.value.stderr


def test_spawn_passes_argv(tmp_path):
    log = tmp_path / "argv.txt"
    exe = script(tmp_path, "fake", f'for a in "$@"; do echo "$a"; done > {log}\n'
                                   'for last; do :; done\necho data > "$last"\n')
    out = tmp_path / "sub" / "o.mp4"
    plan = build_plan(30, str(tmp_path / "f-%04d.ppm"), 1, "libx264", str(out))
    out.parent.mkdir()
    out.write_text("stale")
    assert run_plan(plan, exe) == 0
    assert log.read_text().splitlines() == to_argv(plan)
    assert out.read_text() == "data\n"


def test_success_without_output_is_error(tmp_path):
    exe = script(tmp_path, "lazy", "exit 0\n")
    plan = build_plan(30, str(tmp_path / "f-%04d.ppm"), 1, "libx264", str(tmp_path / "o.mp4"))
    with pytest.raises(EncoderError, match="missing or empty"):
        run_plan(plan, exe)


def test_real_encoder(tmp_path, ffmpeg_exe):
    frame = raster.PixelBuffer.blank(16, 16, (200, 30, 30))
    raster.write_ppm_sequence(tmp_path, "f", [frame] * 3)
    plan = build_plan(30, str(tmp_path / "f-%04d.ppm"), 1, "libx264", str(tmp_path / "o.mp4"))
    assert run_plan(plan, ffmpeg_exe) == 0
    assert os.path.getsize(tmp_path / "o.mp4") > 0


def test_real_encoder_without_frames(tmp_path, ffmpeg_exe):
    plan = build_plan(30, str(tmp_path / "none-%04d.ppm"), 1, "libx264", str(tmp_path / "o.mp4"))
    with pytest.raises(EncoderError) as info:
        run_plan(plan, ffmpeg_exe)
    assert info.value.returncode != 0
    assert info.value.stderr
