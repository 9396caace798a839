"""Shared generators for seeded randomized tests, plus the acceptance
summary printer."""

from __future__ import annotations

import random
import sys

from holocurves import validate
from holocurves.errors import ValidationError
from holocurves.poly import ExactPoly, gcd_pair
from holocurves.rational import GaussianRational


def random_gaussian_int(rng: random.Random, span: int = 4) -> GaussianRational:
    return GaussianRational(rng.randint(-span, span), rng.randint(-span, span))


def random_poly(rng: random.Random, degree: int, span: int = 4) -> ExactPoly:
    """Random polynomial of exact degree `degree` with small Gaussian-integer
    coefficients."""
    while True:
        coeffs = [random_gaussian_int(rng, span) for _ in range(degree + 1)]
        if not coeffs[-1].is_zero():
            return ExactPoly(coeffs)


def random_curve(rng: random.Random, k: int):
    """Random valid full curve of degree exactly k (rejection sampling)."""
    while True:
        degs = [rng.randint(0, k) for _ in range(3)]
        degs[rng.randrange(3)] = k
        try:
            f = validate(*(random_poly(rng, d, span=3) for d in degs))
        except ValidationError:
            continue
        if f.k == k:
            return f


def random_monic_squarefree(rng: random.Random, degree: int) -> ExactPoly:
    while True:
        p = random_poly(rng, degree, span=3)
        p = p.monic()
        if degree == 0 or gcd_pair(p, p.derivative()).degree == 0:
            return p


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria summary")
        for line in lines:
            terminalreporter.write_line(line)
