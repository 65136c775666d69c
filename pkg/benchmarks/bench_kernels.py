"""Time the axiom scans workload under the compiled and the pure-Python kernels.

Each backend runs in its own interpreter, since the choice is made at import:

    python3 benchmarks/bench_kernels.py [--repeat N] [--max-arrows N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
from smctensor import kernels
from smctensor.corpus import corpus
from smctensor.homcat import build_hom_smc
from smctensor.monoidal import validate_monoidal_functor, validate_monoidal_nattrans, validate_smc

names = ("terminal", "z2", "z3", "monoid_e", "z2xz3", "sline")
homs = [build_hom_smc(corpus()[a], corpus()[b]) for a in names for b in names]
homs = [h for h in homs if len(h.trans) <= {max_arrows}]
best = float("inf")
for _ in range({repeat}):
    start = time.perf_counter()
    for h in homs:
        validate_smc(h.smc)
        for f in h.functors:
            validate_monoidal_functor(f)
        for t in h.trans:
            validate_monoidal_nattrans(t)
    best = min(best, time.perf_counter() - start)
print(json.dumps({{"backend": kernels.BACKEND, "seconds": best, "homs": len(homs)}}))
"""


def run(pure: bool, repeat: int, max_arrows: int) -> dict:
    env = dict(os.environ)
    env.pop("SMCTENSOR_PURE_PYTHON", None)
    if pure:
        env["SMCTENSOR_PURE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, "-c", WORKLOAD.format(repeat=repeat, max_arrows=max_arrows)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    # the fallback needs over a minute for a single hom SMC with a few hundred arrows
    ap.add_argument("--max-arrows", type=int, default=100, help="skip hom SMCs with more arrows")
    args = ap.parse_args()
    fast, slow = run(False, args.repeat, args.max_arrows), run(True, args.repeat, args.max_arrows)
    if fast["backend"] != "compiled":
        print("compiled kernels are not built; both runs used the Python fallback")
    for r in (fast, slow):
        print(f"{r['backend']:>9}: {r['seconds']:.3f}s over {r['homs']} hom SMCs (best of {args.repeat})")
    print(f"  speedup: {slow['seconds'] / fast['seconds']:.1f}x")


if __name__ == "__main__":
    main()
