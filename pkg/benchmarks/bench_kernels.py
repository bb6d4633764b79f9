"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit
from importlib.resources import files

from lpreadings import _pykernels
from lpreadings.completion import clark_completion
from lpreadings.logic import compile_theory
from lpreadings.modal import gelfond_embedding
from lpreadings.syntax import ground_text

try:
    from lpreadings import _ckernels
except ImportError:
    _ckernels = None


def corpus(name):
    return ground_text((files("lpreadings") / "corpus" / f"{name}.lp").read_text())


def choice_program(k):
    """k independent even loops: 2^k stable models over 2k atoms."""
    return ground_text("".join(f"a{i} :- not b{i}.\nb{i} :- not a{i}.\n" for i in range(k)))


def workloads():
    trans = corpus("trans")
    index = trans.index
    comp_code = compile_theory(clark_completion(trans).formulas(), index)
    # no naf literals, so the only guess believes nothing
    kernel = [f.kernel(frozenset()) for f in gelfond_embedding(trans).formulas]
    worlds_code = compile_theory(kernel, index)
    n = len(trans.herbrand_base)

    big = choice_program(10)
    bh, bp, bn = big.masks
    naf = big.full_mask

    small = choice_program(6)
    sh, sp, sn = small.masks

    return [
        ("completion models, closure (18 atoms)", lambda k: k.enumerate_models(comp_code, n)),
        ("AEL worlds, closure (18 atoms)", lambda k: k.enumerate_models(worlds_code, n)),
        ("stable search, 10 even loops (20 atoms)", lambda k: k.stable_candidates(bh, bp, bn, naf)),
        ("partial stable 3^n, 6 even loops (12 atoms)", lambda k: k.partial_stable(sh, sp, sn, 12)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'workload':<46}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in workloads():
        results = {name: fn(mod) for name, mod in backends}
        if len(results) == 2:
            assert sorted(results["python"]) == sorted(results["cython"]), label
        times = [
            min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) for _, mod in backends
        ]
        speed = f"{times[0] / times[1]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<46}" + "".join(f"{t:>11.4f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
