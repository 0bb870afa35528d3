"""Named verification suites."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import checks as C

DEFAULT_CORPUS = ("A2", "A3", "A4", "B2", "B3", "D4", "H3") + tuple(f"I2({m})" for m in range(2, 13))
SUITES = ("coeffs", "dihedral", "group-presentations", "braid-presentations", "rs", "generating-sets")


@dataclass
class SuiteReport:
    name: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        # timing is left out so the output is reproducible
        return {
            "suite": self.name,
            "passed": self.passed,
            "count": len(self.checks),
            "failed": len(self.failures),
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"suite {self.name}: {len(self.checks) - len(self.failures)}/{len(self.checks)} passed"]
        lines += [f"  {c}" for c in self.checks]
        return "\n".join(lines)


def _braid_ranks(corpus) -> list[int]:
    ranks = sorted({int(name[1:]) for name in corpus if name.startswith("A") and name[1:].isdigit()})
    return ranks or list(range(1, 7))


def run_suite(name: str, corpus=None, cap: int = 50_000, seed: int = 0) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    corpus = tuple(corpus) if corpus else DEFAULT_CORPUS
    start = time.perf_counter()
    out: list = []
    if name == "coeffs":
        out += C.check_small_m_relations()
        out += C.check_generating_functions()
        out += C.check_one_param_formula()
        out += C.check_coeff_invariants()
    elif name == "dihedral":
        out += C.check_dihedral_suite(seed=seed)
    elif name == "group-presentations":
        for t in corpus:
            out += C.check_group_presentations(t, cap)
    elif name == "braid-presentations":
        ranks = _braid_ranks(corpus) if corpus != DEFAULT_CORPUS else list(range(1, 7))
        for n in ranks:
            out += C.check_braid_presentations(n)
        for t in corpus:
            out += C.check_quotients(t)
    elif name == "rs":
        for t in corpus:
            out += C.check_rs(t)
    elif name == "generating-sets":
        out += C.check_generating_sets()
        for t in corpus:
            out += C.check_redundant_generators(t)
        for n in range(2, 7):
            out += C.check_generator_identities_artin(n)
    return SuiteReport(name, out, time.perf_counter() - start)
