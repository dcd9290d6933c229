"""Compare the compiled and pure-Python scan kernels.

Replicates the fixture sources into a large input and times both
kernel implementations on identical work.

Usage: python benchmarks/bench_scan.py [repeats]
"""

from __future__ import annotations

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from ecstmetrics.lexer import JAVA_SPEC, MODULA2_SPEC  # noqa: E402
from ecstmetrics.scan import KERNEL, _kernel  # noqa: E402

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"
REPLICAS = 400


def _load_inputs():
    inputs = []
    for name, spec in (("QuickSort.mod", MODULA2_SPEC), ("QuickSort.java", JAVA_SPEC)):
        body = (FIXTURES / name).read_text(encoding="utf-8")
        inputs.append((name, body * REPLICAS, spec))
    return inputs


def _time(scan_fn, text, spec, repeats):
    best = None
    count = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        tokens = scan_fn(
            text,
            spec.line_comment,
            spec.block_open,
            spec.block_close,
            spec.nested_blocks,
            spec.two_char_ops,
            spec.single_chars,
            spec.string_escapes,
        )
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
        count = len(tokens)
    return best, count


def main() -> int:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    kernels = [("python", _kernel.scan)]
    try:
        from ecstmetrics.scan import _kernel_c

        kernels.append(("c", _kernel_c.scan))
    except ImportError:
        print("compiled kernel not built; timing the pure kernel only")
    print(f"active kernel at import time: {KERNEL}")
    for name, text, spec in _load_inputs():
        print(f"\n{name} x{REPLICAS} ({len(text)} chars):")
        timings = {}
        for kernel_name, fn in kernels:
            best, count = _time(fn, text, spec, repeats)
            timings[kernel_name] = best
            rate = len(text) / best / 1e6
            print(
                f"  {kernel_name:<6} {best * 1e3:8.2f} ms   "
                f"{rate:7.1f} Mchar/s   {count} tokens"
            )
        if len(timings) == 2:
            print(f"  speedup: {timings['python'] / timings['c']:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
