"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

The lines are printed in the terminal summary (see conftest.py) and also
written straight to the terminal when run with ``-s``.
"""
import math
import os
import random
import re
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from logcorners.cli.main import run
from logcorners.geometry import Chart, MonoidElement
from logcorners.geometry.scale import Regularization, check_regularization
from logcorners.integration import IntegrationDomain, integrate
from logcorners.logforms import LogForm, LogFunction
from logcorners.numeric import QuadratureSpec, divergence_fit, quadrature
from logcorners.periods import (
    KummerConfig, fourier_profile, i2_closed_form, i2_quadrature, i2_via_stokes, kummer_period_matrix,
    residue_radius_zero,
)
from logcorners.symcore import Scalar

TWO_PI_I = Scalar.two_pi_i()
HERE = os.path.dirname(os.path.abspath(__file__))


def report(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}" + (f"  [{detail}]" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


# ------------------------------------------------------------------ 1
def test_criterion_1_kummer_matrix():
    m, dt = timed(kummer_period_matrix, KummerConfig("a", "lam"))
    a = Scalar.param("a")
    expected = [[a, Scalar.log("a") - Scalar.log("lam")], [Scalar(), TWO_PI_I]]
    unit, dt1 = timed(kummer_period_matrix, KummerConfig("a", 1))
    code, doc = run(["period", "kummer", "--a", "a", "--lam", "lam"])
    cli_ok = code == 0 and doc["matrix"] == [["a", "log(a)-log(lam)"], ["0", "2*i*pi"]]
    ok = m == expected and unit[0][1] == Scalar.log("a") and cli_ok and dt + dt1 < 1.0
    report(1, "Kummer period matrix [[a, log a - log lam], [0, 2 pi i]]; lam=1 gives log a", ok,
           f"{dt + dt1:.3f}s")


# ------------------------------------------------------------------ 2
def test_criterion_2_i2():
    value, dt = timed(i2_via_stokes, "a")
    symbolic_ok = value == TWO_PI_I * Scalar.log("a") * 2 == i2_closed_form("a")
    code, doc = run(["period", "i2", "--a", "a"])
    cli_ok = code == 0 and doc["exact"] == "4*i*pi*log(a)"
    exact2 = i2_via_stokes(2).evaluate()
    oracle, dt_oracle = timed(i2_quadrature, 2.0)
    near_ok = abs(exact2 - 8.710262j) < 1e-4 and abs(oracle - 8.710262j) < 1e-4 and abs(oracle - exact2) < 1e-4
    ok = symbolic_ok and cli_ok and near_ok and dt < 1.0 and dt_oracle < 60.0
    report(2, "I2 = 2 pi i log|a|^2 exactly; a=2 matches the quadrature oracle", ok,
           f"exact {exact2.imag:.6f}i, oracle {oracle.imag:.6f}i, symbolic {dt:.3f}s, oracle {dt_oracle:.1f}s")


# ------------------------------------------------------------------ 3
def test_criterion_3_residue():
    profiles = [None, fourier_profile({1: 0.5, -1: 0.5}, 3),
                fourier_profile({2: Fraction(1, 4) * 1j, -2: Fraction(-1, 4) * 1j}, Fraction(1, 7))]
    t0 = time.perf_counter()
    values = [residue_radius_zero(p) for p in profiles]
    dt = time.perf_counter() - t0
    ok = all(v == TWO_PI_I for v in values) and dt < 1.0
    report(3, "residue at radius zero is 2 pi i for three normal profiles", ok, f"{dt:.3f}s")


# ------------------------------------------------------------------ 4
def test_criterion_4_convergent_integral():
    chart = Chart(basic=("r",), bounds={"r": MonoidElement.constant("a")})
    w = LogForm.dr(chart, "r") * LogFunction.log(chart, "r")
    a = Scalar.param("a")
    target = a * Scalar.log("a") - a
    rng = random.Random(20261016)
    lams = [Fraction(rng.randint(1, 50), rng.randint(1, 50)) for _ in range(2)]
    values = [integrate(w, IntegrationDomain(chart, {"r": lam})).exact for lam in lams]
    num = quadrature(w, QuadratureSpec(tolerance=1e-12), {"a": 2.5}).value
    ref = 2.5 * math.log(2.5) - 2.5
    ok = all(v == target for v in values) and abs(num - ref) < 1e-8
    report(4, "int_0^a log r dr = a log a - a for two random regularizations; oracle within 1e-8", ok,
           f"lam={lams[0]},{lams[1]}, |num-exact|={abs(num - ref):.1e}")


# ------------------------------------------------------------------ 5
def _quadrant(a1, a2, f1, f2):
    q = Chart(basic=("r1", "r2"))
    faces = {
        "r1": {"t1": MonoidElement(coeff=f2) * MonoidElement.coordinate("r2", power=a2)},
        "r2": {"t2": MonoidElement(coeff=f1) * MonoidElement.coordinate("r1", power=a1)},
    }
    return Regularization(q, {}, faces, {frozenset(("r1", "r2")): {"t1": None, "t2": None}})


def test_criterion_5_quadrant_solver():
    t0 = time.perf_counter()
    solved = check_regularization(_quadrant(0, 0, Fraction(3), Fraction(5)))
    bad = check_regularization(_quadrant(1, 1, Fraction(2), Fraction(3)))
    family = check_regularization(_quadrant(1, 1, Fraction(2), Fraction(1, 2)))
    dt = time.perf_counter() - t0
    ok = (solved.status == "solved" and bad.status == "unsolvable"
          and family.status == "underdetermined" and len(family.free_parameters) == 1 and dt < 1.0)
    report(5, "quadrant regimes: (0,0) solved, (1,1) unsolvable, (1,1) one-parameter family", ok,
           f"{solved.status}/{bad.status}/{family.status}, {dt:.3f}s")


# ------------------------------------------------------------------ 6
PROPERTY_SUITES = {
    "d^2 = 0": ["test_logforms.py::test_d_squared_is_zero"],
    "pullback commutes with d": ["test_logforms.py::test_pullback_commutes_with_d",
                                 "test_logforms.py::test_pullback_commutes_with_d_exp_units"],
    "pullback respects composition": ["test_logforms.py::test_pullback_respects_composition",
                                      "test_logforms.py::test_pullback_respects_composition_exp_units"],
    "Stokes on [0,a], [0,a]^2, [0,a]xS1": ["test_integration.py::test_stokes_interval",
                                          "test_integration.py::test_stokes_square",
                                          "test_integration.py::test_stokes_annulus"],
    "Fubini": ["test_integration.py::test_fubini_square", "test_integration.py::test_fubini_annulus"],
    "homotopy identities": ["test_regularization.py::test_phantom_homotopy_identity",
                            "test_regularization.py::test_interval_homotopy_identity_on_kernel",
                            "test_regularization.py::test_combined_homotopy_identity"],
    "scale independence on convergent forms": ["test_integration.py::test_scale_independence_on_convergent_forms"],
    "reglim of continuous functions": ["test_regularization.py::test_reglim_of_continuous_function_is_the_ordinary_limit"],
    "change of variables r = u^2": ["test_integration.py::test_change_of_variables_r_equals_u_squared"],
}

_STATS = re.compile(r"^(tests/\S+::\S+):\s*$|(\d+) passing examples")


def _passing_counts(text):
    counts, current = {}, None
    for line in text.splitlines():
        m = _STATS.search(line.strip()) if "passing examples" in line else _STATS.match(line.strip())
        if m and m.group(1):
            current = m.group(1).split("/", 1)[1]
            counts.setdefault(current, 0)
        elif m and m.group(2) and current:
            counts[current] += int(m.group(2))
    return counts


def test_criterion_6_property_suites():
    ids = [f"tests/{n}" for group in PROPERTY_SUITES.values() for n in group]
    env = dict(os.environ, LOGC_HYPOTHESIS_PROFILE="default")
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", "--hypothesis-show-statistics", *ids],
        cwd=os.path.dirname(HERE), env=env, capture_output=True, text=True, timeout=600,
    )
    dt = time.perf_counter() - t0
    counts = _passing_counts(proc.stdout)
    short = [n for n in (i.split("/", 1)[1] for i in ids) if counts.get(n, 0) < 200]
    for title, group in PROPERTY_SUITES.items():
        low = min(counts.get(n, 0) for n in group)
        ACCEPTANCE_LINES.append(f"      {'ok ' if low >= 200 and proc.returncode == 0 else 'BAD'}"
                                f" {title}: >= {low} cases per test")
    ok = proc.returncode == 0 and not short and dt < 300
    detail = f"{len(ids)} tests, {dt:.0f}s" + (f", under 200 cases: {short}" if short else "")
    if proc.returncode:
        detail += ", failures:\n" + proc.stdout[-2000:]
    report(6, "property suites, each >= 200 randomized cases", ok, detail)


# ------------------------------------------------------------------ 7
def test_criterion_7_divergence_fit():
    chart = Chart(basic=("r",), bounds={"r": MonoidElement.constant(1)})
    fit = divergence_fit(LogForm.basis(chart, "r"))
    c0, c1 = complex(fit.coefficients[0]), complex(fit.coefficients[1])
    ok = abs(c0) < 1e-5 and abs(c1 + 1) < 1e-5
    report(7, "cutoff fit of dlog r on [0,1]: c0 = 0, c1 = -1", ok, f"c0={abs(c0):.1e}, c1={c1.real:.8f}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
