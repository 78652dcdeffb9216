"""Named verification suites behind the `verify` command.

Each suite runs a family of exact checks and returns a SuiteResult with the
first counterexamples formatted for display. All checks are pure; a suite
that returns ok=True has verified every instance it names, no sampling.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import catident, profiles, reflect
from .catident import PathSpec, path_variants
from .fibcore import (
    DimPair,
    EVEN_PAIR,
    NOT_A_PAIR,
    ODD_PAIR,
    check_three_term,
    classify_pair,
    fib,
)
from .reflect import ORACLE_CAP

MAX_REPORTED_FAILURES = 5


@dataclass
class SuiteResult:
    suite: str
    ok: bool
    checked: int
    failures: list[str] = field(default_factory=list)


def _collect(suite: str, failures: list[str], checked: int) -> SuiteResult:
    return SuiteResult(suite, not failures, checked, failures[:MAX_REPORTED_FAILURES])


def run_prop41(t_max: int = 6, *, cap: int = ORACLE_CAP, **_) -> SuiteResult:
    failures, checked = [], 0
    for t in range(1, t_max + 1):
        for letter in "012":
            rep = catident.check_prop41(t, y_letter=letter, cap=cap)
            checked += 1
            if not rep.ok:
                bad = rep.first_failure()
                failures.append(f"t={t} y={letter!r}: {bad.label} {bad.detail}")
    return _collect("prop41", failures, checked)


def run_cor42(t_max: int = 6, *, paths: int = 3, seed: int = 0, cap: int = ORACLE_CAP, **_) -> SuiteResult:
    failures, checked = [], 0
    for t in range(1, t_max + 1):
        for walk in path_variants(t + 1, paths, seed):
            rep = catident.check_cor42(t, PathSpec(tuple(walk)), cap=cap)
            checked += 1
            if not rep.ok:
                bad = rep.first_failure()
                failures.append(f"t={t} path={walk}: {bad.label} {bad.detail}")
    return _collect("cor42", failures, checked)


def run_cor43(t_max: int = 6, *, paths: int = 3, seed: int = 0, cap: int = ORACLE_CAP, **_) -> SuiteResult:
    failures, checked = [], 0
    for t in range(0, t_max + 1):
        for walk in path_variants(t + 3, paths, seed):
            spec = PathSpec(tuple(walk[1:-1]), before=walk[0], after=walk[-1])
            rep = catident.check_cor43(t, spec, cap=cap)
            checked += 1
            if not rep.ok:
                bad = rep.first_failure()
                failures.append(f"t={t} path={walk}: {bad.label} {bad.detail}")
    return _collect("cor43", failures, checked)


def run_oracle(t_max: int = 8, *, cap: int = ORACLE_CAP, **_) -> SuiteResult:
    """Compressed profiles against the literal reflection oracle, both ways."""
    failures, checked = [], 0
    for t in range(t_max + 1):
        prof = profiles.radial_profile(t)
        vec = reflect.s_vec(t, cap=cap)
        checked += 2
        if not profiles.expand_radial(prof, cap=cap).equals(vec):
            failures.append(f"t={t}: expanded radial profile differs from the vertex vector")
        if profiles.compress_radial(vec, cap=cap) != prof:
            failures.append(f"t={t}: compressed vertex vector differs from the stepped profile")
    for tt in range(t_max // 2 + 1):
        prof = profiles.u_profile(tt)
        vec = reflect.r_vec(2 * tt, cap=cap)
        checked += 2
        if not profiles.expand_biradial(prof, cap=cap).equals(vec):
            failures.append(f"index {tt}: expanded signed profile differs from the edge vector")
        if profiles.compress_biradial(vec, cap=cap) != prof:
            failures.append(f"index {tt}: compressed edge vector differs from the stepped profile")
    return _collect("oracle", failures, checked)


def run_sums(t_max: int = 300, **_) -> SuiteResult:
    """Weighted profile sums against the Fibonacci numbers, every step."""
    failures, checked = [], 0
    u, p = profiles.u_start(), profiles.radial_start()
    for t in range(t_max + 1):
        checked += 2
        if profiles.u_sums(u) != (fib(4 * t - 1), fib(4 * t + 1)):
            failures.append(f"signed sums at index {t}: {profiles.u_sums(u)}")
        if profiles.radial_sums(p) != (fib(2 * t), fib(2 * t + 2)):
            failures.append(f"radial sums at step {t}: {profiles.radial_sums(p)}")
        if any(v < 0 for v in u.values) or any(v < 0 for v in p.values):
            failures.append(f"negative profile entry at step {t}")
        if t < t_max:
            u, p = profiles.u_step(u), profiles.radial_step(p)
    return _collect("sums", failures, checked)


def run_three_term(lo: int = -100, hi: int = 100, **_) -> SuiteResult:
    failures, checked = [], 0
    for t in range(lo, hi + 1):
        checked += 2
        if not check_three_term(t):
            failures.append(f"three-term recursion fails at t={t}")
        sign = 1 if (t + 1) % 2 == 0 else -1
        if fib(-t) != sign * fib(t):
            failures.append(f"index negation fails at t={t}")
    return _collect("three-term", failures, checked)


def run_pairs(bound: int = 200, **_) -> SuiteResult:
    """Exhaustive box scan: the classifier accepts exactly the |q| = 1
    points, with the kind matching the sign of q."""
    failures, checked = [], 0
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            checked += 1
            q = x * x + y * y - 3 * x * y
            verdict = classify_pair(DimPair(x, y))
            if (abs(q) == 1) != (verdict.kind != NOT_A_PAIR):
                failures.append(f"acceptance mismatch at ({x}, {y}): q={q}, kind={verdict.kind}")
            elif verdict.kind == EVEN_PAIR and q != 1:
                failures.append(f"({x}, {y}) classified even but q={q}")
            elif verdict.kind == ODD_PAIR and q != -1:
                failures.append(f"({x}, {y}) classified odd but q={q}")
            if len(failures) > MAX_REPORTED_FAILURES:
                return _collect("pairs", failures, checked)
    return _collect("pairs", failures, checked)


SUITES = {
    "prop41": run_prop41,
    "cor42": run_cor42,
    "cor43": run_cor43,
    "oracle": run_oracle,
    "sums": run_sums,
    "three-term": run_three_term,
    "pairs": run_pairs,
}
