"""Reconstruction and verification of the kernel factorizations.

The fast kernels factor the Hartley matrix H_N as

    H_N = (post additions) . (constant diagonal) . (pre-addition layers)
          + special-addition corrections

where only the pre-addition layer listings are given directly; the residual
matrices T(k) - what remains of the transform after k layers, satisfying
V = T(k) . S(k) - are reconstructed here as H_N . P_k^{-1} with P_k the exact
integer layer composition.  Balancing splits oversized residual entries
(magnitude above one) into an integer part, applied as a "special addition"
of an already-computed layer value, plus a remainder that lands back in the
kernel's constant alphabet.  The resulting multiplication sites and special
vectors are frozen as per-kernel plans, and verify_decomposition multiplies
every stage back out to check the factorization reproduces H_N exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .kernels import SQRT2, SQRT2_HALF, SQRT3_M1_HALF, SQRT6_HALF
from .layers import LAYER_SPECS, check_size, max_order
from .reference import dht_matrix

__all__ = [
    "DerivationError",
    "ResidualMatrix",
    "SpecialAdditionVector",
    "MultSite",
    "KernelPlan",
    "pre_addition_matrix",
    "layer_matrix",
    "residual_matrix",
    "entry_alphabet",
    "merge_pairs",
    "balance_split",
    "balance_stages",
    "kernel_plan",
    "plan_matrix",
    "DecompositionReport",
    "verify_decomposition",
]

RECONSTRUCTION_TOL = 1e-10


class DerivationError(ValueError):
    """A layer listing failed to produce a usable factorization stage."""


# ---------------------------------------------------------------------------
# pre-addition matrices and residuals


def _rows_to_matrix(n: int, spec) -> np.ndarray:
    m = np.zeros((n, n), dtype=np.int64)
    for r, op in enumerate(spec):
        if op[0] == "pass":
            m[r, op[1]] = 1
        elif op[0] == "add":
            m[r, op[1]] = 1
            m[r, op[2]] = 1
        else:
            m[r, op[1]] = 1
            m[r, op[2]] = -1
    return m


def layer_matrix(n: int, order: int) -> np.ndarray:
    """Integer matrix of a single layer, mapping S(order-1) to S(order)."""
    check_size(n)
    specs = LAYER_SPECS[n]
    if not 1 <= order <= len(specs):
        raise ValueError(f"layer order {order} invalid for N={n}")
    return _rows_to_matrix(n, specs[order - 1])


def pre_addition_matrix(n: int, order: int) -> np.ndarray:
    """Integer matrix P with P @ v = pre_addition_state(v, n, order).values.

    Order 0 is the identity; higher orders compose the layer listings.
    """
    check_size(n)
    specs = LAYER_SPECS[n]
    if not 0 <= order <= len(specs):
        raise ValueError(
            f"layer order {order} invalid for N={n}; valid orders are 0..{len(specs)}"
        )
    m = np.eye(n, dtype=np.int64)
    for k in range(order):
        m = _rows_to_matrix(n, specs[k]) @ m
    return m


def _exact_inverse(m: np.ndarray) -> np.ndarray:
    """Invert an integer matrix exactly via Fraction Gauss-Jordan.

    The layer compositions all have determinant +-2^k, so the inverse entries
    are dyadic rationals and convert to float without rounding.
    """
    n = m.shape[0]
    a = [[Fraction(int(m[i, j])) for j in range(n)] for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise DerivationError(
                f"pre-addition matrix is singular at column {col}; "
                "a transcribed layer row is likely wrong"
            )
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return np.array([[float(x) for x in row] for row in inv])


@dataclass(frozen=True)
class ResidualMatrix:
    """T(order) for one kernel: the matrix with V = T(order) @ S(order)."""

    n: int
    order: int
    entries: np.ndarray


def residual_matrix(n: int, order: int) -> ResidualMatrix:
    """Compute T(order) = H_n @ P_order^{-1} and gate the reconstruction.

    Raises DerivationError if the layer composition is singular or the
    product T @ P fails to reproduce H_n to within 1e-10 entrywise.
    """
    p = pre_addition_matrix(n, order)
    h = dht_matrix(n)
    t = h @ _exact_inverse(p)
    err = float(np.max(np.abs(h - t @ p)))
    if err > RECONSTRUCTION_TOL:
        raise DerivationError(
            f"residual reconstruction failed for N={n} order {order}: "
            f"max deviation {err:.3e}"
        )
    return ResidualMatrix(n=n, order=order, entries=t)


def entry_alphabet(t, tol: float = 1e-9) -> tuple[float, ...]:
    """Cluster the absolute entry values of a matrix and return representatives.

    Clusters are formed by gaps larger than tol in the sorted magnitudes;
    each is reported by its mean, snapped exactly to 0 or 1 when within tol.
    Two representatives closer than 2*tol indicate the tolerance cannot
    separate genuine constants and raise DerivationError.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    entries = t.entries if isinstance(t, ResidualMatrix) else np.asarray(t)
    mags = np.sort(np.abs(np.asarray(entries, dtype=float)).ravel())
    reps: list[float] = []
    start = 0
    for i in range(1, mags.size + 1):
        if i == mags.size or mags[i] - mags[i - 1] > tol:
            rep = float(np.mean(mags[start:i]))
            if abs(rep) <= tol:
                rep = 0.0
            elif abs(rep - 1.0) <= tol:
                rep = 1.0
            reps.append(rep)
            start = i
    for a, b in zip(reps, reps[1:]):
        if b - a < 2 * tol:
            raise DerivationError(
                f"alphabet clusters {a!r} and {b!r} are closer than 2*tol={2 * tol}"
            )
    return tuple(reps)


# ---------------------------------------------------------------------------
# balancing


@dataclass(frozen=True)
class SpecialAdditionVector:
    """Integer corrections peeled off a residual: row k gains sign * S(order)[idx].

    entries maps spectral row -> (sign, layer slot).  Rows absent from the
    mapping need no correction.
    """

    n: int
    source_order: int
    entries: dict[int, tuple[int, int]]

    def as_matrix(self) -> np.ndarray:
        z = np.zeros((self.n, self.n), dtype=np.int64)
        for row, (sign, idx) in self.entries.items():
            z[row, idx] = sign
        return z

    def describe(self) -> list[str]:
        out = []
        for row in range(self.n):
            if row in self.entries:
                sign, idx = self.entries[row]
                out.append(
                    f"V[{row}] <- {'+' if sign > 0 else '-'}S{self.source_order}[{idx}]"
                )
        return out


def merge_pairs(n: int, order: int) -> list[tuple[int, int]]:
    """Slot pairs of S(order-1) that layer `order` combines with butterflies."""
    check_size(n)
    specs = LAYER_SPECS[n]
    if not 1 <= order <= len(specs):
        return []
    pairs = []
    for op in specs[order - 1]:
        if op[0] == "add":
            pairs.append((op[1], op[2]))
    return pairs


def balance_split(t: ResidualMatrix, tol: float = 1e-9):
    """Split T into a special-addition vector Z plus a balanced remainder.

    Wherever the next layer merges two residual columns whose entries disagree
    in magnitude, the oversized entry (magnitude > 1) sheds an integer +-1
    into Z so the remainder matches its partner.  Column pairs whose entries
    differ by an exact factor of two are left untouched: they are resolved at
    the terminal stage by a multiplication site on a cross-layer sum rather
    than by an integer correction.  Any other mismatch is a transcription
    error in the layer listings and raises a diagnostic.

    Returns (Z, T') with T = Z.as_matrix() + T'.entries on the peeled rows.
    """
    pairs = merge_pairs(t.n, t.order + 1)
    e = t.entries.copy()
    z: dict[int, tuple[int, int]] = {}
    offenders = []
    for i, j in pairs:
        for r in range(t.n):
            x, y = e[r, i], e[r, j]
            if abs(abs(x) - abs(y)) <= tol:
                continue
            if abs(x) >= abs(y):
                col, big, small = i, x, y
            else:
                col, big, small = j, y, x
            peeled = big - (1.0 if big > 0 else -1.0)
            if abs(big) > 1 + tol and abs(abs(peeled) - abs(small)) <= tol:
                if r in z:
                    offenders.append((r, i, j, x, y))
                    continue
                z[r] = (1 if big > 0 else -1, col)
                e[r, col] = peeled
            elif abs(abs(big) - 2 * abs(small)) <= tol:
                continue  # factor-of-two pair, handled by a cross-layer site
            else:
                offenders.append((r, i, j, x, y))
    if offenders:
        detail = "; ".join(
            f"row {r}, cols ({i},{j}): {x:.6f} vs {y:.6f}" for r, i, j, x, y in offenders
        )
        raise DerivationError(f"no valid balance split for N={t.n}: {detail}")
    return (
        SpecialAdditionVector(n=t.n, source_order=t.order, entries=z),
        ResidualMatrix(n=t.n, order=t.order, entries=e),
    )


# Layer transitions at which each kernel peels a special-addition vector.
# Balancing starts once no un-combined matching columns remain (order 2).
BALANCE_TRANSITIONS: dict[int, tuple[int, ...]] = {4: (), 8: (), 12: (2,), 24: (2, 3)}


def balance_stages(n: int, tol: float = 1e-9):
    """Run the full balancing pipeline for one kernel.

    Returns (stages, terminal) where stages is the list of special-addition
    vectors in the order they are peeled and terminal is the balanced
    residual at the deepest layer.
    """
    check_size(n)
    transitions = BALANCE_TRANSITIONS[n]
    order = min(transitions) if transitions else max_order(n)
    t = residual_matrix(n, order)
    stages = []
    for k in transitions:
        if t.order != k:
            raise DerivationError(f"pipeline out of step: at order {t.order}, expected {k}")
        z, t_bal = balance_split(t, tol=tol)
        stages.append(z)
        nxt = layer_matrix(n, k + 1)
        t = ResidualMatrix(n=n, order=k + 1, entries=t_bal.entries @ _exact_inverse(nxt))
    return stages, t


# ---------------------------------------------------------------------------
# frozen kernel plans

# Operand/term references: ("S", order, idx) is slot idx of layer `order`;
# ("m", k) is multiplication site k of the plan.


@dataclass(frozen=True)
class MultSite:
    """One constant multiplication: value * (signed sum of layer slots)."""

    value: float
    label: str
    operand: tuple  # of (sign, ("S", order, idx))

    def operand_text(self) -> str:
        parts = []
        for sign, (_, order, idx) in self.operand:
            parts.append(("+" if sign > 0 else "-") if parts or sign < 0 else "")
            parts[-1] += f"S{order}[{idx}]"
        return " ".join(parts)


@dataclass(frozen=True)
class KernelPlan:
    n: int
    mult_sites: tuple[MultSite, ...]
    special_stages: tuple[SpecialAdditionVector, ...]
    post_rows: tuple[tuple, ...]  # row k -> tuple of (sign, ref)


def _site(value, label, *terms):
    return MultSite(value=value, label=label, operand=tuple(terms))


def _plan_4() -> KernelPlan:
    rows = []
    h = np.rint(dht_matrix(4)).astype(int)
    for k in range(4):
        rows.append(tuple((int(h[k, i]), ("S", 0, i)) for i in range(4)))
    return KernelPlan(4, (), (), tuple(rows))


def _plan_8() -> KernelPlan:
    sites = (
        _site(SQRT2, "sqrt(2)", (1, ("S", 1, 5))),
        _site(SQRT2, "sqrt(2)", (1, ("S", 1, 7))),
    )
    s = lambda i: ("S", 2, i)
    rows = (
        ((1, s(0)), (1, s(2)), (1, s(4))),
        ((1, s(1)), (1, s(3)), (1, ("m", 0))),
        ((1, s(0)), (-1, s(2)), (1, s(5))),
        ((1, s(1)), (-1, s(3)), (1, ("m", 1))),
        ((1, s(0)), (1, s(2)), (-1, s(4))),
        ((1, s(1)), (1, s(3)), (-1, ("m", 0))),
        ((1, s(0)), (-1, s(2)), (-1, s(5))),
        ((1, s(1)), (-1, s(3)), (-1, ("m", 1))),
    )
    return KernelPlan(8, sites, (), rows)


def _plan_12() -> KernelPlan:
    b = SQRT3_M1_HALF
    sites = tuple(
        _site(b, "(sqrt(3)-1)/2", (1, ("S", 3, idx))) for idx in (5, 6, 9, 10)
    )
    z = SpecialAdditionVector(
        n=12,
        source_order=2,
        entries={
            1: (1, 6),
            2: (1, 5),
            4: (-1, 8),
            5: (-1, 11),
            7: (-1, 7),
            8: (-1, 4),
            10: (-1, 9),
            11: (-1, 10),
        },
    )
    s3 = lambda i: ("S", 3, i)
    s2 = lambda i: ("S", 2, i)
    rows = (
        ((1, s3(0)), (1, s3(2)), (1, s3(4))),
        ((1, s3(1)), (1, s3(3)), (1, s2(6)), (1, ("m", 3))),
        ((1, s3(0)), (-1, s3(2)), (1, s2(5)), (1, ("m", 1))),
        ((1, s3(1)), (-1, s3(3)), (1, s3(8))),
        ((1, s3(0)), (1, s3(2)), (-1, s2(8)), (1, ("m", 0))),
        ((1, s3(1)), (1, s3(3)), (-1, s2(11)), (-1, ("m", 3))),
        ((1, s3(0)), (-1, s3(2)), (-1, s3(7))),
        ((1, s3(1)), (-1, s3(3)), (-1, s2(7)), (-1, ("m", 2))),
        ((1, s3(0)), (1, s3(2)), (-1, s2(4)), (-1, ("m", 0))),
        ((1, s3(1)), (1, s3(3)), (-1, s3(11))),
        ((1, s3(0)), (-1, s3(2)), (-1, s2(9)), (-1, ("m", 1))),
        ((1, s3(1)), (-1, s3(3)), (-1, s2(10)), (1, ("m", 2))),
    )
    return KernelPlan(12, sites, (z,), rows)


def _plan_24() -> KernelPlan:
    b, w, s6 = SQRT3_M1_HALF, SQRT2_HALF, SQRT6_HALF
    sites = (
        _site(b, "(sqrt(3)-1)/2", (1, ("S", 4, 9))),
        _site(b, "(sqrt(3)-1)/2", (1, ("S", 4, 11))),
        _site(b, "(sqrt(3)-1)/2", (1, ("S", 4, 13))),
        _site(b, "(sqrt(3)-1)/2", (1, ("S", 4, 15))),
        _site(b, "(sqrt(3)-1)/2", (1, ("S", 4, 20))),
        _site(b, "(sqrt(3)-1)/2", (1, ("S", 4, 21))),
        _site(w, "sqrt(2)/2", (1, ("S", 4, 16))),
        _site(w, "sqrt(2)/2", (1, ("S", 4, 19))),
        _site(w, "sqrt(2)/2", (1, ("S", 4, 18)), (1, ("S", 3, 21))),
        _site(w, "sqrt(2)/2", (1, ("S", 4, 17)), (-1, ("S", 3, 23))),
        _site(s6, "sqrt(6)/2", (1, ("S", 4, 22))),
        _site(s6, "sqrt(6)/2", (1, ("S", 4, 23))),
    )
    z_odd = SpecialAdditionVector(
        n=24,
        source_order=2,
        entries={
            1: (1, 10),
            5: (-1, 19),
            7: (-1, 11),
            11: (-1, 18),
            13: (1, 10),
            17: (-1, 19),
            19: (-1, 11),
            23: (-1, 18),
        },
    )
    z_even = SpecialAdditionVector(
        n=24,
        source_order=3,
        entries={
            2: (1, 8),
            4: (1, 7),
            8: (-1, 10),
            10: (-1, 13),
            14: (-1, 9),
            16: (-1, 6),
            20: (-1, 11),
            22: (-1, 12),
        },
    )
    s4 = lambda i: ("S", 4, i)
    s3 = lambda i: ("S", 3, i)
    s2 = lambda i: ("S", 2, i)
    m = lambda k: ("m", k)
    rows = (
        ((1, s4(0)), (1, s4(2)), (1, s4(4)), (1, s4(8))),
        ((1, s4(1)), (1, s4(3)), (1, s2(10)), (1, m(4)), (1, m(6)), (1, m(10))),
        ((1, s4(0)), (-1, s4(2)), (1, s4(5)), (1, s3(8)), (1, m(0))),
        ((1, s4(1)), (-1, s4(3)), (1, s4(7)), (1, m(8))),
        ((1, s4(0)), (1, s4(2)), (-1, s4(4)), (1, s3(7)), (1, m(2))),
        ((1, s4(1)), (1, s4(3)), (-1, s2(19)), (-1, m(4)), (-1, m(6)), (1, m(10))),
        ((1, s4(0)), (-1, s4(2)), (-1, s4(5)), (1, s4(12))),
        ((1, s4(1)), (-1, s4(3)), (-1, s2(11)), (-1, m(5)), (-1, m(7)), (1, m(11))),
        ((1, s4(0)), (1, s4(2)), (1, s4(4)), (-1, s3(10)), (1, m(1))),
        ((1, s4(1)), (1, s4(3)), (-1, s4(6)), (1, m(9))),
        ((1, s4(0)), (-1, s4(2)), (1, s4(5)), (-1, s3(13)), (-1, m(0))),
        ((1, s4(1)), (-1, s4(3)), (-1, s2(18)), (1, m(5)), (1, m(7)), (1, m(11))),
        ((1, s4(0)), (1, s4(2)), (-1, s4(4)), (-1, s4(14))),
        ((1, s4(1)), (1, s4(3)), (1, s2(10)), (1, m(4)), (-1, m(6)), (-1, m(10))),
        ((1, s4(0)), (-1, s4(2)), (-1, s4(5)), (-1, s3(9)), (-1, m(3))),
        ((1, s4(1)), (-1, s4(3)), (1, s4(7)), (-1, m(8))),
        ((1, s4(0)), (1, s4(2)), (1, s4(4)), (-1, s3(6)), (-1, m(1))),
        ((1, s4(1)), (1, s4(3)), (-1, s2(19)), (-1, m(4)), (1, m(6)), (-1, m(10))),
        ((1, s4(0)), (-1, s4(2)), (1, s4(5)), (-1, s4(10))),
        ((1, s4(1)), (-1, s4(3)), (-1, s2(11)), (-1, m(5)), (1, m(7)), (-1, m(11))),
        ((1, s4(0)), (1, s4(2)), (-1, s4(4)), (-1, s3(11)), (-1, m(2))),
        ((1, s4(1)), (1, s4(3)), (-1, s4(6)), (-1, m(9))),
        ((1, s4(0)), (-1, s4(2)), (-1, s4(5)), (-1, s3(12)), (1, m(3))),
        ((1, s4(1)), (-1, s4(3)), (-1, s2(18)), (1, m(5)), (-1, m(7)), (-1, m(11))),
    )
    return KernelPlan(24, sites, (z_odd, z_even), rows)


_PLANS: dict[int, KernelPlan] = {}


def kernel_plan(n: int) -> KernelPlan:
    """Frozen factorization plan for one kernel (sites, specials, post rows)."""
    check_size(n)
    if n not in _PLANS:
        _PLANS[n] = {4: _plan_4, 8: _plan_8, 12: _plan_12, 24: _plan_24}[n]()
    return _PLANS[n]


# ---------------------------------------------------------------------------
# full verification


@dataclass(frozen=True)
class DecompositionReport:
    n: int
    ok: bool
    max_error: float
    alphabets: dict[int, tuple[float, ...]]
    mult_sites: tuple[MultSite, ...]
    special_stages: tuple[SpecialAdditionVector, ...]
    additions_scheduled: int
    multiplications_scheduled: int


def _site_vectors(n: int, plan: KernelPlan) -> list[np.ndarray]:
    mats = {order: pre_addition_matrix(n, order) for order in range(max_order(n) + 1)}
    vecs = []
    for site in plan.mult_sites:
        v = np.zeros(n)
        for sign, (_, order, idx) in site.operand:
            v = v + sign * mats[order][idx].astype(float)
        vecs.append(site.value * v)
    return vecs


def plan_matrix(n: int) -> np.ndarray:
    """Multiply the plan's stages out into one n x n matrix.

    Each spectral row is the signed sum of its post-addition terms: layer
    slots contribute the matching row of P_order, multiplication sites their
    constant times the operand vector.
    """
    plan = kernel_plan(n)
    mats = {order: pre_addition_matrix(n, order) for order in range(max_order(n) + 1)}
    sites = _site_vectors(n, plan)
    rebuilt = np.zeros((n, n))
    for k, terms in enumerate(plan.post_rows):
        acc = np.zeros(n)
        for sign, ref in terms:
            if ref[0] == "S":
                acc = acc + sign * mats[ref[1]][ref[2]].astype(float)
            else:
                acc = acc + sign * sites[ref[1]]
        rebuilt[k] = acc
    return rebuilt


def verify_decomposition(n: int) -> DecompositionReport:
    """Multiply out every derived stage and compare against the DHT matrix.

    Reassembles each spectral row from the plan's post-addition terms (layer
    slots carry integer weight, multiplication sites carry their constant) and
    checks the result equals dht_matrix(n) to within 1e-10 entrywise.  The
    report also carries the per-layer residual alphabets, the balancing
    stages, and the scheduled operation counts of the kernel implementing the
    plan.
    """
    from .counting import count_ops  # local import to avoid a cycle

    plan = kernel_plan(n)
    err = float(np.max(np.abs(plan_matrix(n) - dht_matrix(n))))
    ops = count_ops(n)
    return DecompositionReport(
        n=n,
        ok=err <= RECONSTRUCTION_TOL,
        max_error=err,
        alphabets={
            order: entry_alphabet(residual_matrix(n, order))
            for order in range(max_order(n) + 1)
        },
        mult_sites=plan.mult_sites,
        special_stages=plan.special_stages,
        additions_scheduled=ops.additions,
        multiplications_scheduled=ops.multiplications,
    )
