"""Acceptance suite: the contract the package is shipped against.

Each test prints one PASS/FAIL line; run with ``pytest tests/test_acceptance.py -s``
to see the full checklist.  Tolerances are fixed here, not configurable.
"""

import math

import numpy as np

from mindht import (
    SUPPORTED_SIZES,
    balance_split,
    cas,
    cas_prime,
    count_ops,
    dft_to_dht,
    dht_matrix,
    dht_to_dft,
    entry_alphabet,
    fast_dht,
    kernel_plan,
    mu_lower_bound,
    naive_dft,
    naive_dht,
    residual_matrix,
    verify_decomposition,
)
from mindht.derivation import balance_stages

TRIALS = 1000


def _report(num: int, label: str, ok: bool):
    print(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {label}")
    assert ok, f"criterion {num} failed: {label}"


def test_criterion_1_multiplication_counts():
    expected = {4: 0, 8: 2, 12: 4, 24: 12}
    measured = {n: count_ops(n).multiplications for n in SUPPORTED_SIZES}
    _report(
        1,
        f"multiplications exactly {expected} (measured {measured})",
        measured == expected,
    )


def test_criterion_2_addition_counts():
    expected = {4: 8, 8: 22, 12: 52, 24: 138}
    measured = {n: count_ops(n).additions for n in SUPPORTED_SIZES}
    _report(
        2,
        f"additions exactly {expected} (measured {measured})",
        measured == expected,
    )


def test_criterion_3_oracle_equivalence():
    ok = True
    detail = []
    for n in SUPPORTED_SIZES:
        rng = np.random.default_rng(n)
        worst = 0.0
        for _ in range(TRIALS):
            v = rng.uniform(-1.0, 1.0, n)
            tol = 1e-10 * n * max(1.0, float(np.max(np.abs(v))))
            err = float(np.max(np.abs(fast_dht(v) - naive_dht(v))))
            worst = max(worst, err)
            ok = ok and err <= tol
        detail.append(f"N={n}:{worst:.1e}")
    _report(3, f"{TRIALS} random signals per N, fast == naive ({', '.join(detail)})", ok)


def test_criterion_4_involution():
    ok = True
    for n in SUPPORTED_SIZES:
        h = dht_matrix(n)
        ok = ok and np.max(np.abs(h @ h - n * np.eye(n))) <= 1e-10
        rng = np.random.default_rng(n + 1)
        v = rng.uniform(-1.0, 1.0, n)
        ok = ok and np.max(np.abs(fast_dht(fast_dht(v)) - n * v)) <= 1e-9 * n * n
    _report(4, "dht_matrix(N)^2 = N*I and double fast transform = N*v", ok)


def test_criterion_5_dft_bridge():
    ok = True
    for n in SUPPORTED_SIZES:
        rng = np.random.default_rng(n + 2)
        for _ in range(TRIALS):
            v = rng.uniform(-1.0, 1.0, n)
            V = naive_dht(v)
            U = naive_dft(v)
            ok = ok and np.max(np.abs(dht_to_dft(V) - U)) <= 1e-10
            ok = ok and np.max(np.abs(dft_to_dht(dht_to_dft(V)) - V)) <= 1e-12
    _report(5, f"{TRIALS} signals per N: DHT->DFT matches and round-trips", ok)


def test_criterion_6_identity_suite():
    rng = np.random.default_rng(6)
    ok = True
    for alpha, beta in rng.uniform(-30.0, 30.0, (10_000, 2)):
        lhs = cas(alpha - beta)
        rhs = math.cos(beta) * cas(alpha) - math.sin(beta) * cas_prime(alpha)
        ok = ok and abs(lhs - rhs) <= 1e-12
    for n in SUPPORTED_SIZES:  # exhaustive shift identity
        for k in range(n):
            for i in range(n):
                lhs = cas(2 * math.pi * k * (i + n // 2) / n)
                rhs = (-1) ** k * cas(2 * math.pi * k * i / n)
                ok = ok and abs(lhs - rhs) <= 1e-12
    _report(6, "cas arc-addition at 10^4 points and half-period shift, tol 1e-12", ok)


def test_criterion_7_derivation_reconstruction():
    ok = all(verify_decomposition(n).ok for n in SUPPORTED_SIZES)
    z, _ = balance_split(residual_matrix(12, 2))
    table = {
        1: (1, 6),
        2: (1, 5),
        4: (-1, 8),
        5: (-1, 11),
        7: (-1, 7),
        8: (-1, 4),
        10: (-1, 9),
        11: (-1, 10),
    }
    ok = ok and dict(z.entries) == table
    _report(7, "all four decompositions rebuild H_N; N=12 split matches the table", ok)


def test_criterion_8_constant_identification():
    alpha8 = entry_alphabet(residual_matrix(8, 2))
    ok = any(abs(a - math.sqrt(2.0) / 2.0) <= 1e-12 for a in alpha8)
    _, term12 = balance_stages(12)
    alpha12 = entry_alphabet(term12)
    ok = ok and any(abs(a - (math.sqrt(3.0) - 1.0) / 2.0) <= 1e-12 for a in alpha12)
    ok = ok and len(kernel_plan(24).mult_sites) == 12
    _report(8, "constants sqrt(2)/2 and (sqrt(3)-1)/2 identified; 12 sites at N=24", ok)


def test_bounds_met_summary():
    rows = {n: (count_ops(n).multiplications, mu_lower_bound(n)) for n in SUPPORTED_SIZES}
    ok = all(m == mu for m, mu in rows.values())
    print(f"{'PASS' if ok else 'FAIL'}  summary: every kernel meets its multiplication bound")
    assert ok
