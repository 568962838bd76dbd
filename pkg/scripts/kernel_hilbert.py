"""Graded kernel of the bracket map and the image Hilbert function, degree by degree.

    python3 scripts/kernel_hilbert.py --algebra sp 4 --max-degree 5
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from adjres.symcheck import build_algebra, check_nu_in_kernel, image_hilbert_check, predicted_kernel_dim


@dataclass
class KernelRun:
    kind: str = "sl"
    size: int = 3
    max_degree: int = 4


def main(cfg: KernelRun) -> int:
    t0 = time.perf_counter()
    alg = build_algebra(cfg.kind, cfg.size)
    print(f"{cfg.kind}_{cfg.size}: dim {alg.dim}, type {alg.lie_type}")
    print(f"gradients of trace invariants lie in ker ad: {check_nu_in_kernel(alg)}")
    ok = True
    for h in image_hilbert_check(alg, cfg.max_degree):
        ker = predicted_kernel_dim(alg, h.t)
        print(f"t={h.t}: image {h.image}, image + free part {h.log_derivations}, "
              f"from Betti table {h.predicted}, predicted kernel {ker}")
        ok &= h.ok
    print(f"{'consistent' if ok else 'MISMATCH'} ({time.perf_counter() - t0:.1f}s)")
    return 0 if ok else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--algebra", nargs=2, default=["sl", "3"], metavar=("KIND", "SIZE"))
    ap.add_argument("--max-degree", type=int, default=4)
    a = ap.parse_args()
    raise SystemExit(main(KernelRun(a.algebra[0], int(a.algebra[1]), a.max_degree)))
