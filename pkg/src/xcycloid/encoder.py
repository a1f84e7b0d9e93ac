"""Build and run the ffmpeg invocation that turns numbered frames into a video."""

from __future__ import annotations

import os
import re
import shutil
import subprocess
from dataclasses import dataclass
from pathlib import Path

PAD_FILTER = "pad=ceil(iw/2)*2:ceil(ih/2)*2"
_FIELD = re.compile(r"%0[1-9][0-9]*d")


class InvalidPatternError(ValueError):
    pass


class EncoderError(RuntimeError):
    def __init__(self, message: str, returncode: int | None = None, stderr: str = ""):
        super().__init__(message)
        self.returncode = returncode
        self.stderr = stderr


class EncoderLaunchError(EncoderError):
    pass


@dataclass(frozen=True)
class EncoderPlan:
    fps: int
    input_format: str
    start_number: int
    input_pattern: str
    codec: str
    filter: str
    output: str

    def __post_init__(self):
        if self.fps < 1:
            raise ValueError(f"fps must be >= 1, got {self.fps}")
        if self.start_number < 0:
            raise ValueError(f"start_number must be >= 0, got {self.start_number}")
        if len(_FIELD.findall(self.input_pattern)) != 1:
            raise InvalidPatternError(
                f"input pattern {self.input_pattern!r} needs exactly one %0Nd field")
        if not self.output:
            raise ValueError("output path must be nonempty")


def build_plan(fps: int, pattern: str | os.PathLike, start: int, codec: str,
               out: str | os.PathLike) -> EncoderPlan:
    return EncoderPlan(fps=fps, input_format="image2", start_number=start,
                       input_pattern=os.fspath(pattern), codec=codec,
                       filter=PAD_FILTER, output=os.fspath(out))


def to_argv(plan: EncoderPlan) -> list[str]:
    return ["-r", str(plan.fps), "-f", plan.input_format,
            "-start_number", str(plan.start_number), "-i", plan.input_pattern,
            "-c:v", plan.codec, "-vf", plan.filter, plan.output]


def run_plan(plan: EncoderPlan, executable: str | os.PathLike = "ffmpeg",
             timeout: float | None = None) -> int:
    """Spawn the encoder and wait for it.

    An existing output file is removed first, since ffmpeg would otherwise
    stop at its overwrite prompt.
    """
    exe = os.fspath(executable)
    resolved = shutil.which(exe)
    if resolved is None:
        raise EncoderLaunchError(
            f"encoder {exe!r} not found; install ffmpeg or pass --encoder-path")
    out = Path(plan.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    if out.exists():
        out.unlink()
    try:
        proc = subprocess.run([resolved, *to_argv(plan)], stdin=subprocess.DEVNULL,
                              capture_output=True, text=True, timeout=timeout)
    except OSError as exc:
        raise EncoderLaunchError(f"could not start {exe!r}: {exc}") from exc
    if proc.returncode != 0:
        tail = "\n".join(proc.stderr.strip().splitlines()[-5:])
        raise EncoderError(f"{exe} exited with status {proc.returncode}: {tail}",
                           proc.returncode, proc.stderr)
    if not out.is_file() or out.stat().st_size == 0:
        raise EncoderError(f"{exe} reported success but {out} is missing or empty",
                           proc.returncode, proc.stderr)
    return proc.returncode
