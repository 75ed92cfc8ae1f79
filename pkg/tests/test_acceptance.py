"""Exit criteria.  Each test records one PASS/FAIL line, printed at the end of
the session (see conftest.py) or directly when run as a script:

    python tests/test_acceptance.py
"""

import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

import oracles
from calibration import WITT_OFFSET
from cli_cases import CASES
from daehee import padic, sequences
from daehee.cli import main
from daehee.numerics import format_rational
from daehee.padic import Integrand, IntegrandKind

F = Fraction
GOLDEN = Path(__file__).parent / "golden"
SAMPLES = [F(0), F(1), F(-1), F(1, 2), F(-3, 7), F(22, 7)]

RESULTS = {}


def record(number, title, ok, detail=""):
    RESULTS[number] = f"criterion {number} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    assert ok, RESULTS[number]


def test_1_identity_suite():
    start = time.perf_counter()
    code = main(["verify", "--ids", "all", "--n-max", "25",
                 "--x=" + ",".join(format_rational(x) for x in SAMPLES),
                 "--format", "csv"])
    elapsed = time.perf_counter() - start
    record(1, "identity suite n_max=25, six sample points, exit 0, < 60 s",
           code == 0 and elapsed < 60, f"exit {code}, {elapsed:.1f} s")


def test_2_triple_route_agreement():
    n_max = 25
    S1 = sequences.stirling1(n_max)
    B = sequences.bernoulli_numbers(n_max)
    D = sequences.daehee_numbers(n_max)
    D2 = sequences.daehee2_numbers(n_max)
    bad = []
    for n in range(n_max + 1):
        via_stirling = sum(S1(n, l) * B[l] for l in range(n + 1))
        via_norlund = sequences.bernoulli_higher(n, n + 2, 1)
        if not (D[n] == via_stirling == via_norlund):
            bad.append(("D", n))
        via_stirling2 = sum(S1(n, l) * (-1) ** l * B[l] for l in range(n + 1))
        via_norlund2 = sequences.bernoulli_higher(n, n + 2, 2)
        if not (D2[n] == via_stirling2 == via_norlund2):
            bad.append(("D^", n))
    record(2, "D_n and D^_n agree across GF, Stirling-Bernoulli and Norlund routes, n <= 25",
           not bad, f"mismatches {bad}" if bad else "exact")


def test_3_closed_forms():
    D = sequences.daehee_numbers(30)
    D2 = sequences.daehee2_numbers(30)
    bad = [n for n in range(31) if D[n] != oracles.daehee_closed(n)]
    bad += [n for n in range(1, 31) if D2[n] != oracles.daehee2_closed(n)]
    record(3, "closed forms for D_n and D^_n, n <= 30", not bad, f"mismatches at {bad}" if bad else "exact")


def test_4_witt_convergence():
    start = time.perf_counter()
    problems = []
    spot = []
    for kind in ("first", "second"):
        for p in (2, 3, 5):
            top = padic.max_level(p)
            for n in range(7):
                r = padic.convergence_report(Integrand(IntegrandKind(kind), n), p, range(1, top + 1))
                c = WITT_OFFSET[kind][p][n]
                vals = r.valuations()
                if any(v < N - c for N, v in enumerate(vals, start=1)):
                    problems.append((kind, p, n, "bound"))
                tail = vals[max(n, 1) - 1:]
                if any(a > b for a, b in zip(tail, tail[1:])):
                    problems.append((kind, p, n, "monotone"))
                if not vals[-1] > 6:
                    problems.append((kind, p, n, "final"))
    r = padic.convergence_report(Integrand(IntegrandKind.FALLING, 1), 3, [2])
    spot.append((r.levels[0].error, r.levels[0].error_valuation) == (F(9, 2), 2))
    r = padic.convergence_report(Integrand(IntegrandKind.FALLING, 2), 2, [3])
    spot.append((r.levels[0].error, r.levels[0].error_valuation) == (F(40, 3), 3))
    elapsed = time.perf_counter() - start
    ok = not problems and all(spot) and elapsed < 60
    record(4, "Witt convergence p in {2,3,5}, n <= 6, levels up to the 2e6-term budget",
           ok, f"{problems or 'bounds hold'}, spot values {spot}, {elapsed:.1f} s")


def test_5_inverse_pair():
    S1, S2 = sequences.stirling1(15), sequences.stirling2(15)
    bad = [(n, m) for n in range(16) for m in range(16)
           if sum(S1(n, k) * S2(k, m) for k in range(16)) != (n == m)]
    record(5, "sum_k S1(n,k) S2(k,m) = delta(n,m), n, m <= 15", not bad, f"bad {bad}" if bad else "exact")


def test_6_shift_identity():
    bad = []
    for kind in IntegrandKind:
        for x in SAMPLES:
            for n in range(7):
                f = Integrand(kind, n, x)
                if f.translate().exact_limit() - f.exact_limit() != f.derivative_at_zero():
                    bad.append((kind.value, n, x))
    record(6, "I(f_1) - I(f) = f'(0) for all integrand families, n <= 6", not bad,
           f"bad {bad}" if bad else "exact")


def test_7_cli_golden():
    mismatches = []
    per_command = {}
    for name, (argv, code) in sorted(CASES.items()):
        per_command[argv[0]] = per_command.get(argv[0], 0) + 1
        golden = (GOLDEN / f"{name}.out").read_bytes()
        for _ in range(2):
            proc = subprocess.run([sys.executable, "-m", "daehee", *argv], capture_output=True)
            if proc.returncode != code or proc.stdout != golden:
                mismatches.append(name)
                break
    counts_ok = all(per_command.get(c, 0) >= 4 for c in ("table", "eval", "verify", "volkenborn"))
    record(7, "CLI golden files byte-identical, exit codes honored, 4 cases per subcommand",
           not mismatches and counts_ok, f"mismatches {mismatches}" if mismatches else f"{sum(per_command.values())} cases")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
