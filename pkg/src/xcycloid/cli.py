"""Command-line front end: inspect, frames, video, pipeline.

Frame files are named ``<base>-0001.<ext>``, ``<base>-0002.<ext>`` and so on.
Next to them ``<base>-frames.txt`` lists the written frame paths, one per
line (the raster frames when both kinds are written); ``video`` reads it to
infer the input pattern.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import encoder, raster, vecout
from .core import DEFAULTS, TrochoidParams, classify, closure_turns
from .scene import build_animation
from .usersetting import UsersettingError, apply_overrides, parse_usersetting

DEFAULT_BASE = "video/xcycloid"
DEFAULT_DPI = 600
DEFAULT_FPS = 30
DEFAULT_CODEC = "libx264"
CANVAS_CM = 10.0
_NUMBERED = re.compile(r"^(?P<stem>.*-)(?P<num>\d{4})(?P<ext>\.[^./\\]+)$")


class StageError(Exception):
    def __init__(self, stage: str, error: BaseException):
        self.stage = stage
        self.error = error
        super().__init__(f"{stage}: {error}")


def _fail(stage: str, error: BaseException) -> int:
    print(f"error [{stage}]: {error}", file=sys.stderr)
    return 1


def _info(stage: str, message: str) -> None:
    print(f"[{stage}] {message}", file=sys.stderr)


def resolve_params(usersetting: str) -> TrochoidParams:
    table = parse_usersetting(usersetting)
    for warning in table.warnings:
        _info("overrides", f"warning: {warning}")
    return apply_overrides(DEFAULTS, table)


def manifest_path(base: str | Path) -> Path:
    base = Path(base)
    return base.with_name(base.name + "-frames.txt")


def write_manifest(base, paths) -> Path:
    path = manifest_path(base)
    path.write_text("".join(f"{p}\n" for p in paths), encoding="utf-8")
    return path


def pattern_from_manifest(path: Path) -> tuple[str, int]:
    lines = [ln for ln in path.read_text(encoding="utf-8").splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"manifest {path} lists no frames")
    m = _NUMBERED.match(lines[0])
    if m is None:
        raise ValueError(f"cannot infer a %04d pattern from {lines[0]!r}")
    return f"{m['stem']}%04d{m['ext']}", int(m["num"])


def render_frames(params, base, *, svg, ppm, dpi, canvas_cm=CANVAS_CM):
    """Build the animation and write the requested sequences; return paths by kind."""
    base = Path(base)
    try:
        vecout.check_capacity(params.frame_count)
        scenes = build_animation(params)
        written = {}
        if svg:
            written["svg"] = vecout.write_sequence(base.parent, base.name, scenes,
                                                   canvas_cm, dpi)
    except (OSError, ValueError) as exc:
        raise StageError("frames", exc) from exc
    if ppm:
        try:
            buffers = (raster.pad_even(raster.rasterize(s, canvas_cm, dpi)) for s in scenes)
            written["ppm"] = raster.write_ppm_sequence(base.parent, base.name, buffers)
        except (OSError, ValueError) as exc:
            raise StageError("raster", exc) from exc
    listed = written.get("ppm") or written.get("svg") or []
    if listed:
        write_manifest(base, listed)
    return written


def cmd_inspect(args) -> int:
    try:
        p = resolve_params(args.usersetting)
    except UsersettingError as exc:
        return _fail("overrides", exc)
    period = closure_turns(p)
    lines = [
        f"R = {p.R:g}",
        f"r = {p.r:g}",
        f"d = {p.d:g}",
        f"sign = {p.sign:+d}",
        f"N = {p.N}",
        f"turns = {p.turns}",
        f"O_R = ({p.O_R.x:g}, {p.O_R.y:g})",
        f"k = {p.k:g}",
        f"class = {classify(p).label}",
        f"frames = {p.frame_count}",
        f"closure = {period} turn(s)" if period is not None else "closure = irrational/unknown",
    ]
    print("\n".join(lines))
    return 0


def cmd_frames(args) -> int:
    try:
        p = resolve_params(args.usersetting)
    except UsersettingError as exc:
        return _fail("overrides", exc)
    want_svg, want_ppm = args.svg, args.ppm or not args.svg
    try:
        written = render_frames(p, args.output, svg=want_svg, ppm=want_ppm, dpi=args.dpi,
                                canvas_cm=args.canvas)
    except StageError as exc:
        return _fail(exc.stage, exc.error)
    for kind, paths in written.items():
        print(f"{len(paths)} {kind} frames")
        for path in paths:
            print(path)
    return 0


def _plan_from_args(args, base) -> encoder.EncoderPlan:
    start = args.start_number
    if args.pattern:
        pattern = args.pattern
    elif manifest_path(base).is_file():
        pattern, first = pattern_from_manifest(manifest_path(base))
        start = first if start is None else start
    else:
        pattern = f"{base}-%04d.png"
    output = args.out or f"{base}.mp4"
    return encoder.build_plan(args.fps, pattern, 1 if start is None else start,
                              args.codec, output)


def _encode(plan, args) -> int:
    if args.dry_run:
        print("\n".join(encoder.to_argv(plan)))
        return 0
    status = encoder.run_plan(plan, args.encoder_path)
    _info("encoder", f"wrote {plan.output}")
    return status


def cmd_video(args) -> int:
    try:
        plan = _plan_from_args(args, args.output)
        return _encode(plan, args)
    except (ValueError, OSError, encoder.EncoderError) as exc:
        return _fail("encoder", exc)


def cmd_pipeline(args) -> int:
    try:
        p = resolve_params(args.usersetting)
    except UsersettingError as exc:
        return _fail("overrides", exc)
    try:
        written = render_frames(p, args.output, svg=args.svg, ppm=True, dpi=args.dpi,
                                canvas_cm=args.canvas)
    except StageError as exc:
        return _fail(exc.stage, exc.error)
    _info("raster", f"wrote {len(written['ppm'])} frames at {args.dpi} dpi")
    args.pattern = f"{args.output}-%04d.ppm"
    try:
        return _encode(_plan_from_args(args, args.output), args)
    except (ValueError, OSError, encoder.EncoderError) as exc:
        return _fail("encoder", exc)


def _add_usersetting(p):
    p.add_argument("-u", "--usersetting", default="", metavar="'NAME=VALUE;...'",
                   help="overrides for sign, R, r, d, N, turns, e.g. 'R=3;r=1;d=1;N=100'")


def _add_raster(p):
    p.add_argument("--dpi", type=int, default=DEFAULT_DPI, help="raster resolution (default 600)")
    p.add_argument("--canvas", type=float, default=CANVAS_CM, help="canvas side in cm (default 10)")


def _add_encoder(p):
    p.add_argument("--fps", type=int, default=DEFAULT_FPS, help="frame rate (default 30)")
    p.add_argument("--codec", default=DEFAULT_CODEC, help="video codec (default libx264)")
    p.add_argument("--start-number", type=int, default=None, help="first frame number (default 1)")
    p.add_argument("--out", default=None, help="video file (default <base>.mp4)")
    p.add_argument("--encoder-path", default="ffmpeg", help="ffmpeg-compatible executable")
    p.add_argument("--dry-run", action="store_true", help="print the encoder argv, one token per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xcycloid", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="show resolved parameters and curve class")
    _add_usersetting(p)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("frames", help="write SVG and/or padded PPM frames")
    _add_usersetting(p)
    p.add_argument("-o", "--output", required=True, metavar="DIR/BASENAME")
    p.add_argument("--svg", action="store_true", help="write SVG frames")
    p.add_argument("--ppm", action="store_true", help="write PPM frames (default if neither given)")
    _add_raster(p)
    p.set_defaults(func=cmd_frames)

    p = sub.add_parser("video", help="encode frames with ffmpeg")
    p.add_argument("pattern", nargs="?", default=None,
                   help="frame pattern such as video/xcycloid-%%04d.png "
                        "(default: from <base>-frames.txt, else <base>-%%04d.png)")
    p.add_argument("-o", "--output", default=DEFAULT_BASE, metavar="DIR/BASENAME")
    _add_encoder(p)
    p.set_defaults(func=cmd_video)

    p = sub.add_parser("pipeline", help="frames, raster and encoder in sequence")
    _add_usersetting(p)
    p.add_argument("-o", "--output", default=DEFAULT_BASE, metavar="DIR/BASENAME")
    p.add_argument("--svg", action="store_true", help="also write SVG frames")
    _add_raster(p)
    _add_encoder(p)
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
