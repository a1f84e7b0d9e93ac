"""Compare the compiled and numpy raster kernels on one animation.

    python benchmarks/bench_raster.py --dpi 150 --frames 101 --repeat 3
"""

import argparse
import time

from xcycloid.core import TrochoidParams
from xcycloid.raster import _backend, rasterize
from xcycloid.scene import build_animation
from xcycloid.usersetting import apply_overrides, parse_usersetting


def bench(scenes, dpi, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        buffers = [rasterize(s, 10.0, dpi, backend=backend) for s in scenes]
        best = min(best, time.perf_counter() - start)
    return best, buffers


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-u", "--usersetting", default="R=3;r=1;d=1;N=100")
    parser.add_argument("--dpi", type=int, default=150)
    parser.add_argument("--frames", type=int, default=None, help="limit the frame count")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    params = apply_overrides(TrochoidParams(), parse_usersetting(args.usersetting))
    scenes = build_animation(params)[: args.frames]
    results = {}
    for name in _backend.available():
        seconds, buffers = bench(scenes, args.dpi, name, args.repeat)
        results[name] = (seconds, buffers)
        print(f"{name:>7}: {seconds:8.3f} s  ({seconds / len(scenes) * 1e3:7.2f} ms/frame,"
              f" {len(scenes)} frames at {args.dpi} dpi)")
    if len(results) == 2:
        (tc, bc), (tp, bp) = results["cython"], results["python"]
        assert bc == bp, "backends disagree"
        print(f"speedup: {tp / tc:.2f}x, outputs identical")
    return results


if __name__ == "__main__":
    main()
