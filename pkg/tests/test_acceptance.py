"""Exit criteria.  Run with ``pytest tests/test_acceptance.py -s`` to see one line per criterion."""
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from subspace_mass.mass_model import inferred_scale_report, ratio_electron, ratio_pion, ratio_proton
from subspace_mass.phase_kinematics import (
    KinematicState,
    SpinorPair,
    boost_chiral,
    compton_frequency,
    energy_momentum,
    rotation_eigenvalue,
)
from subspace_mass.repcheck import (
    check_fifth_plane,
    commutator,
    fifth_plane_grid_search,
    hs_norm,
    random_unit_generator,
    solve_fourth_plane,
)
from subspace_mass.sampling import estimate_accrual, estimate_alignment, haar_subspace, sample_stream
from subspace_mass.subspace_core import build_frame, coefficient_norm, expand, subspace_dot


def report(number, title, ok, detail=""):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} {detail}".rstrip())
    assert ok, f"criterion {number} failed: {detail}"


def sig3(x):
    return float(f"{x:.3g}")


def test_1_exact_ratios():
    got = (ratio_electron().ratio_exact, ratio_pion().ratio_exact, ratio_proton().ratio_exact)
    ok = got == (Fraction(1, 1820), Fraction(14, 99), Fraction(1))
    report(1, "exact ratios 1/1820, 14/99, 1", ok, f"got {[str(g) for g in got]}")


def test_2_deviation_claims():
    e = 100 * ratio_electron().relative_deviation
    p = 100 * ratio_pion().relative_deviation
    ok = abs(e - 0.86) <= 0.02 and abs(p - 1.77) <= 0.02
    report(2, "deviations 0.86% and 1.77% (+-0.02pp)", ok, f"electron {e:.4f}%, pion {p:.4f}%")


def test_3_inferred_scale():
    values, mean = inferred_scale_report()
    ok = [sig3(v) for v in values] == [930.0, 955.0, 938.0] and sig3(mean) == 941.0
    report(3, "inferred M rounds to 930, 955, 938; mean 941", ok,
           f"M = {[round(v, 2) for v in values]}, mean {mean:.2f}")


def test_4_frequencies():
    nus = [compton_frequency(m) for m in (0.511, 135.0, 938.0)]
    ok = (
        [float(f"{nu:.4g}") for nu in nus] == [0.1236, 32.64, 226.8]
        and [sig3(nu) for nu in nus] == [0.124, 32.6, 227.0]
    )
    report(4, "Compton frequencies 0.124, 32.6, 227 ZHz", ok, f"got {[f'{nu:.5g}' for nu in nus]}")


def test_5_monte_carlo_alignment():
    start = time.perf_counter()
    e16 = estimate_alignment(16, 200_000, seed=0)
    e12 = estimate_alignment(12, 200_000, seed=0)
    q16 = estimate_alignment(16, 50_000, seed=1)
    q12 = estimate_alignment(12, 50_000, seed=1)
    elapsed = time.perf_counter() - start
    r16, r12 = e16.stderr / q16.stderr, e12.stderr / q12.stderr
    ok = (
        abs(e16.mean - 1 / 1820) < 3 * e16.stderr
        and abs(e12.mean - 1 / 495) < 3 * e12.stderr
        and 0.4 <= r16 <= 0.6 and 0.4 <= r12 <= 0.6
        and elapsed < 30
    )
    report(5, "MC alignment within 3 stderr; stderr halves on 4x samples", ok,
           f"N=16 {e16.deviation_in_stderr():.2f} se, N=12 {e12.deviation_in_stderr():.2f} se, "
           f"stderr ratios {r16:.3f}/{r12:.3f}, {elapsed:.1f}s")


def test_6_monte_carlo_accrual():
    start = time.perf_counter()
    pion = estimate_accrual("pion", 10_000, seed=0)
    proton = estimate_accrual("proton", 10_000, seed=0)
    elapsed = time.perf_counter() - start
    ok = abs(pion.mean - 14 / 99) < 3 * pion.stderr and proton.mean == 1.0 and elapsed < 60
    report(6, "MC accrual: pion within 3 stderr of 14/99, proton exactly 1", ok,
           f"pion {pion.mean:.5f} +- {pion.stderr:.5f}, proton {proton.mean!r}, {elapsed:.1f}s")


def test_7_cauchy_binet_suite():
    start = time.perf_counter()
    worst_norm = worst_dot = worst_sign = 0.0
    rng = np.random.default_rng(7)
    for N in (8, 12, 16):
        frames = [haar_subspace(N, 4, sample_stream(N, i)) for i in range(1000)]
        for i, a in enumerate(frames):
            worst_norm = max(worst_norm, abs(coefficient_norm(expand(a)) - 1.0))
            b = frames[i - 1]
            d = subspace_dot(a, b)
            worst_dot = max(worst_dot, abs(d))
            q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
            flipped = subspace_dot(a.recombined(q), b)
            worst_sign = max(worst_sign, abs(flipped - np.sign(np.linalg.det(q)) * d))
    elapsed = time.perf_counter() - start
    ok = worst_norm < 1e-10 and worst_dot <= 1 + 1e-12 and worst_sign < 1e-12 and elapsed < 10
    report(7, "Cauchy-Binet over 3000 Haar frames", ok,
           f"max|sum w^2 - 1| {worst_norm:.1e}, max|dot| {worst_dot:.6f}, "
           f"max sign error {worst_sign:.1e}, {elapsed:.1f}s")


def test_8_representation_checker():
    start = time.perf_counter()
    rng = np.random.default_rng(8)
    worst_bracket, all_two, all_infeasible, grid_hits = 0.0, True, True, 0
    for _ in range(50):
        g = random_unit_generator(rng)
        sols = solve_fourth_plane(g)
        all_two &= len(sols.solutions) == 2 and sols.solutions[0].isclose(g) and sols.solutions[1].isclose(-g)
        for s in sols.solutions:
            worst_bracket = max(worst_bracket, hs_norm(commutator(s, g)))
            all_infeasible &= not check_fifth_plane(g, s).feasible
            grid_hits += fifth_plane_grid_search(g, s, points=10_000, tol=1e-6).feasible_points
    elapsed = time.perf_counter() - start
    ok = all_two and worst_bracket < 1e-12 and all_infeasible and grid_hits == 0 and elapsed < 10
    report(8, "two 34-plane solutions, no 35-plane generator (50 generators)", ok,
           f"max bracket {worst_bracket:.1e}, grid hits {grid_hits}, {elapsed:.1f}s")


def test_9_kinematics():
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(1000):
        n = rng.standard_normal(3)
        n /= np.linalg.norm(n)
        m, u = rng.uniform(0.1, 1000), rng.uniform(-5, 5)
        E, p = energy_momentum(KinematicState(m, u, tuple(n)))
        worst = max(worst, abs(E**2 - p @ p - m**2) / m**2)
    double_cover = abs(rotation_eigenvalue(2 * math.pi) + 1)
    pair = SpinorPair([1, 0.5j], [0.3, -2])
    u = 1.37
    ratio_err = abs(boost_chiral(pair, u).norm_ratio() / pair.norm_ratio() - math.exp(u)) / math.exp(u)
    ok = worst < 1e-9 and double_cover < 1e-12 and ratio_err < 1e-12
    report(9, "mass shell, double cover, chiral boost ratio", ok,
           f"mass-shell rel {worst:.1e}, |e(2pi)+1| {double_cover:.1e}, ratio err {ratio_err:.1e}")
