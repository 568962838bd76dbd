"""Locate the quasi-minuscule class for the non-simply-laced types and compare with quoted j.

    python3 scripts/j_arbitration.py
"""
from __future__ import annotations

from dataclasses import dataclass, field

from adjres.adjointres import ComputeConfig, adjoint_catalog, arbitrate_j


@dataclass
class ArbitrationRun:
    types: list[str] = field(default_factory=lambda: ["B2", "B3", "B4", "C2", "C3", "C4", "G2", "F4"])


def main(cfg: ArbitrationRun) -> None:
    compute = ComputeConfig.from_env()
    print(f"{'type':<5} {'(p,q)':<10} {'j computed':>10} {'j quoted':>9}  assembled==predicted(computed j)")
    for t in cfg.types:
        rep = arbitrate_j(adjoint_catalog(t), compute)
        print(f"{t:<5} {str(rep.qm_locations):<10} {rep.j_computed!s:>10} {rep.j_catalog:>9}  "
              f"{rep.assembled_matches_computed}")
    print()
    print("\n".join(arbitrate_j(adjoint_catalog("F4"), compute).lines()))


if __name__ == "__main__":
    main(ArbitrationRun())
