"""Independent oracles used by the tests.

Nothing here imports the code paths it checks: continued fractions come from
high-precision floats, Hermite forms from brute-force lattice point sets, and
unimodular matrices from explicit elementary products.
"""

import random

from mpmath import mp


def cf_float(value_fn, n: int, precision: int = 512) -> list[int]:
    """First n partial quotients of value_fn() by floor/reciprocal on floats."""
    with mp.workprec(precision):
        v = value_fn()
        out = []
        for _ in range(n):
            a = int(mp.floor(v))
            out.append(a)
            v = 1 / (v - a)
        return out


def hnf_oracle(u1: int, v1: int, u2: int, v2: int, window: int = 60):
    """Brute-force column Hermite data (a, b, c) of the lattice spanned by
    (u1, v1) and (u2, v2): a = least positive x with (x, 0) in the lattice,
    c = least positive y, b = representative x mod a at height c."""
    pts = set()
    for m in range(-window, window + 1):
        for n in range(-window, window + 1):
            pts.add((m * u1 + n * u2, m * v1 + n * v2))
    a = min(p[0] for p in pts if p[0] > 0 and p[1] == 0)
    c = min(p[1] for p in pts if p[1] > 0)
    b = min(p[0] % a for p in pts if p[1] == c)
    return a, b, c


def random_unimodular(rng: random.Random, size_cap: int = 40):
    """A GL2(Z) matrix from a short product of elementary generators."""
    from lattes_sft import IntMatrix2

    gens = [
        IntMatrix2(1, 1, 0, 1),
        IntMatrix2(1, -1, 0, 1),
        IntMatrix2(1, 0, 1, 1),
        IntMatrix2(1, 0, -1, 1),
        IntMatrix2(0, 1, 1, 0),
    ]
    while True:
        T = IntMatrix2.identity()
        for _ in range(rng.randint(1, 5)):
            T = T * rng.choice(gens)
        if max(abs(e) for e in T.entries()) <= size_cap:
            return T


def random_nonsingular_curve(rng: random.Random):
    from fractions import Fraction

    from lattes_sft import DomainError, EllipticCurve

    while True:
        a = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        b = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        try:
            return EllipticCurve(a, b, c)
        except DomainError:
            continue
