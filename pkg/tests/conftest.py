import shutil

import pytest
from hypothesis import strategies as st

from xcycloid.core import TrochoidParams

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def find_ffmpeg():
    exe = shutil.which("ffmpeg")
    if exe:
        return exe
    try:
        import imageio_ffmpeg
    except ImportError:
        return None
    try:
        return imageio_ffmpeg.get_ffmpeg_exe()
    except RuntimeError:
        return None


@pytest.fixture(scope="session")
def ffmpeg_exe():
    exe = find_ffmpeg()
    if exe is None:
        pytest.skip("no ffmpeg-compatible encoder available")
    return exe


radii = st.floats(min_value=0.1, max_value=20.0, allow_nan=False)


@st.composite
def trochoid_params(draw, sign=None, max_N=200):
    R = draw(radii)
    r = draw(radii)
    d = draw(st.floats(min_value=0.0, max_value=30.0))
    s = draw(st.sampled_from([1, -1])) if sign is None else sign
    return TrochoidParams(R=R, r=r, d=d, sign=s,
                          N=draw(st.integers(1, max_N)), turns=draw(st.integers(1, 4)))
