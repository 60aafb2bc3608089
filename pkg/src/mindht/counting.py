"""Instrumented operation counting for the fast kernels.

A CountingScalar behaves exactly like a float (same values, same operation
order, bit for bit) while tallying every addition/subtraction and every
multiplication by a non-trivial constant into a per-invocation accumulator.
Running a kernel on counting scalars therefore *measures* its cost instead of
trusting a hand count, and the audit compares the measurement against the
declared budgets and the multiplicative-complexity lower bounds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import kernel_flow
from .layers import SUPPORTED_SIZES, check_size

__all__ = [
    "OpCount",
    "OpTally",
    "CountingScalar",
    "EXPECTED_COUNTS",
    "MU_LOWER_BOUND",
    "mu_lower_bound",
    "count_ops",
    "AuditRow",
    "audit_report",
    "audit_table",
    "audit_dict",
    "audit_passes",
]

# Declared kernel budgets (additions, multiplications) per block length.
EXPECTED_COUNTS: dict[int, tuple[int, int]] = {
    4: (8, 0),
    8: (22, 2),
    12: (52, 4),
    24: (138, 12),
}

# Minimal number of real multiplications any algorithm needs for these
# transform lengths.
MU_LOWER_BOUND: dict[int, int] = {4: 0, 8: 2, 12: 4, 24: 12}


def mu_lower_bound(n: int) -> int:
    """Minimal multiplicative complexity for block length n."""
    check_size(n)
    return MU_LOWER_BOUND[n]


@dataclass(frozen=True)
class OpCount:
    """Tally of real additions (incl. subtractions) and real multiplications."""

    additions: int
    multiplications: int


class OpTally:
    """Mutable accumulator shared by the counting scalars of one invocation."""

    __slots__ = ("additions", "multiplications")

    def __init__(self):
        self.additions = 0
        self.multiplications = 0

    def snapshot(self) -> OpCount:
        return OpCount(self.additions, self.multiplications)


class CountingScalar:
    """Float stand-in that counts the operations applied to it.

    Addition and subtraction cost one addition each.  Multiplication by a
    constant outside {-1, 0, 1} costs one multiplication; sign flips and
    trivial constants are free (the usual convention for multiplicative
    complexity).  Scalar-by-scalar products never occur in a linear transform,
    so they raise instead of being silently miscounted.
    """

    __slots__ = ("value", "tally")

    def __init__(self, value: float, tally: OpTally):
        self.value = float(value)
        self.tally = tally

    def __add__(self, other):
        if not isinstance(other, CountingScalar):
            return NotImplemented
        self.tally.additions += 1
        return CountingScalar(self.value + other.value, self.tally)

    def __sub__(self, other):
        if not isinstance(other, CountingScalar):
            return NotImplemented
        self.tally.additions += 1
        return CountingScalar(self.value - other.value, self.tally)

    def __neg__(self):
        return CountingScalar(-self.value, self.tally)

    def _scale(self, const):
        if isinstance(const, CountingScalar):
            raise TypeError("kernels multiply by constants, not by data values")
        c = float(const)
        if c not in (-1.0, 0.0, 1.0):
            self.tally.multiplications += 1
        return CountingScalar(c * self.value, self.tally)

    def __mul__(self, other):
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def __float__(self):
        return self.value

    def __repr__(self):
        return f"CountingScalar({self.value!r})"


def run_counted(n: int, v) -> tuple[np.ndarray, OpCount]:
    """Run the length-n kernel on v through counting scalars.

    Returns the spectrum (as plain floats) and the measured operation count.
    The numeric path is identical to the float kernel, so the spectrum matches
    the plain-double result bit for bit.
    """
    check_size(n)
    a = np.asarray(v, dtype=float)
    if a.shape != (n,):
        raise ValueError(f"signal has shape {a.shape}, expected ({n},)")
    tally = OpTally()
    wrapped = [CountingScalar(x, tally) for x in a.tolist()]
    out = kernel_flow(n)(wrapped)
    return np.array([s.value for s in out]), tally.snapshot()


def count_ops(n: int, seed: int = 0) -> OpCount:
    """Measure the operation count of the length-n kernel on a random input.

    The dataflow has no data-dependent branches, so the count is the same for
    every input; the seed only picks the probe signal.
    """
    rng = np.random.default_rng(seed)
    _, ops = run_counted(n, rng.uniform(-1.0, 1.0, check_size(n)))
    return ops


@dataclass(frozen=True)
class AuditRow:
    n: int
    additions: int
    multiplications: int
    mu: int
    meets_bound: bool


def audit_report(seed: int = 0) -> list[AuditRow]:
    """Measure every kernel and compare against the lower bounds."""
    rows = []
    for n in SUPPORTED_SIZES:
        ops = count_ops(n, seed=seed)
        mu = MU_LOWER_BOUND[n]
        rows.append(
            AuditRow(
                n=n,
                additions=ops.additions,
                multiplications=ops.multiplications,
                mu=mu,
                meets_bound=ops.multiplications == mu,
            )
        )
    return rows


def audit_passes(rows: list[AuditRow]) -> bool:
    """True iff every kernel meets its bound and its declared addition count."""
    return all(
        r.meets_bound and (r.additions, r.multiplications) == EXPECTED_COUNTS[r.n]
        for r in rows
    )


def audit_table(rows: list[AuditRow]) -> str:
    """Render audit rows as an aligned text table."""
    header = f"{'N':>4}  {'adds':>6}  {'mults':>6}  {'mu(N)':>6}  {'meets bound':>11}"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r.n:>4}  {r.additions:>6}  {r.multiplications:>6}  {r.mu:>6}  "
            f"{'yes' if r.meets_bound else 'NO':>11}"
        )
    return "\n".join(lines)


def audit_dict(rows: list[AuditRow]) -> dict:
    """Render audit rows as a machine-readable document."""
    return {
        "kernels": [
            {
                "n": r.n,
                "additions": r.additions,
                "multiplications": r.multiplications,
                "mu_lower_bound": r.mu,
                "meets_bound": r.meets_bound,
            }
            for r in rows
        ],
        "all_meet_bound": all(r.meets_bound for r in rows),
    }
