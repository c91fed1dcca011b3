"""Exact dynamics of rational self-maps of the projective line: composition,
Moebius conjugation, periodic-point counting, and truncated zeta series.

Counts are symbolic (degrees of exact polynomials); the floating root finder
only locates the finitely many distinct finite periodic points and never
feeds back into a count.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf

from .errors import DomainError
from .exactnum import Poly
from .lattes import RationalMap


@dataclass(frozen=True)
class Mobius:
    """z -> (a z + b)/(c z + d) with ad - bc != 0."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a * self.d - self.b * self.c == 0:
            raise DomainError("Moebius transformation must have ad - bc != 0")

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    def as_map(self) -> RationalMap:
        return RationalMap(Poly((self.b, self.a)), Poly((self.d, self.c)))

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def after(self, other: "Mobius") -> "Mobius":
        """Composite self o other (matrix product)."""
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def compose(f: RationalMap, g: RationalMap) -> RationalMap:
    """Exact composition f o g, reduced to lowest terms."""
    m = f.degree
    r, s = g.num, g.den
    rp = [Poly.one()]
    sp = [Poly.one()]
    for _ in range(m):
        rp.append(rp[-1] * r)
        sp.append(sp[-1] * s)
    num = Poly()
    den = Poly()
    for i in range(m + 1):
        cross = rp[i] * sp[m - i]
        cn = f.num.coefficient(i)
        cd = f.den.coefficient(i)
        if cn:
            num = num + cn * cross
        if cd:
            den = den + cd * cross
    return RationalMap(num, den)


def iterate(f: RationalMap, n: int) -> RationalMap:
    if n < 1:
        raise DomainError("iteration count must be >= 1")
    out = f
    for _ in range(n - 1):
        out = compose(f, out)
    return out


def conjugate(f: RationalMap, m: Mobius) -> RationalMap:
    """The conjugate m^{-1} o f o m."""
    return compose(m.inverse().as_map(), compose(f, m.as_map()))


@dataclass(frozen=True)
class PeriodicReport:
    n: int
    degree: int
    count_with_multiplicity: int
    count_distinct: int
    finite_points: tuple[complex, ...]
    infinity_fixed: bool

    def __post_init__(self):
        if self.count_with_multiplicity != self.degree**self.n + 1:
            raise DomainError("count with multiplicity must be degree^n + 1")
        if self.count_distinct > self.count_with_multiplicity:
            raise DomainError("distinct count cannot exceed the total")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "count_with_multiplicity": self.count_with_multiplicity,
            "count_distinct": self.count_distinct,
            "finite_points": [[z.real, z.imag] for z in self.finite_points],
            "infinity_fixed": self.infinity_fixed,
        }


def _initial_points(coeffs, deg):
    """Starting points on circles whose radii come from the upper convex
    hull of (i, log|c_i|); clusters of very different magnitude each get a
    circle of roughly the right size."""
    pts = [(i, mp.log(abs(c))) for i, c in enumerate(coeffs) if c != 0]
    hull = []
    for px, py in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (px - x1) <= (py - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append((px, py))
    z = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        r = mp.e ** ((y1 - y2) / (x2 - x1))
        count = x2 - x1
        for k in range(count):
            angle = 2 * mp.pi * (mpf(k) / count + mpf(73) / 1000 + mpf(x1) / (3 * deg))
            z.append(r * mp.e ** (mpc(0, angle)))
    return z


def aberth_roots(p: Poly, precision: int = 128, max_sweeps: int = 200):
    """All complex roots of a square-free polynomial by simultaneous
    (Aberth-Ehrlich) iteration; deterministic start, deterministic order."""
    if p.degree <= 0:
        return []
    zero_roots = 0
    q = p
    while q.coefficient(0) == 0:
        zero_roots += 1
        q = Poly(q.coeffs[1:])
    roots = []
    with mp.workprec(precision + 32):
        if q.degree > 0:
            coeffs = [mpf(c.numerator) / c.denominator for c in q.coeffs]
            dcoeffs = [i * c for i, c in enumerate(coeffs)][1:]
            deg = q.degree
            z = _initial_points(coeffs, deg)
            tol = mpf(2) ** (10 - precision)
            floor_mag = mpf(2) ** (-precision)

            def horner(cs, v):
                out = mpc(0)
                for c in reversed(cs):
                    out = out * v + c
                return out

            converged = False
            for _ in range(max_sweeps):
                converged = True
                for i in range(deg):
                    pv = horner(coeffs, z[i])
                    if pv == 0:
                        continue
                    dv = horner(dcoeffs, z[i])
                    if dv == 0:
                        z[i] += mpf(2) ** (-precision // 2)
                        converged = False
                        continue
                    w = pv / dv
                    ssum = mpc(0)
                    for j in range(deg):
                        if j != i:
                            ssum += 1 / (z[i] - z[j])
                    denom = 1 - w * ssum
                    if denom == 0:
                        z[i] += mpf(2) ** (-precision // 2)
                        converged = False
                        continue
                    delta = w / denom
                    z[i] -= delta
                    if abs(delta) > tol * max(abs(z[i]), floor_mag):
                        converged = False
                if converged:
                    break
            if not converged:
                warnings.warn(
                    "root refinement did not converge at this precision; "
                    "counts remain exact",
                    RuntimeWarning,
                )
            roots.extend(z)
        roots.extend(mpc(0) for _ in range(zero_roots))
        roots.sort(key=lambda v: (v.real, v.imag))
    return roots


def periodic_points(phi: RationalMap, n: int, precision: int = 128) -> PeriodicReport:
    """Solutions of phi^n(x) = x with exact counts and float locations."""
    if n < 1:
        raise DomainError("period must be >= 1")
    d = phi.degree
    if d < 2:
        raise DomainError("map degree must be >= 2")
    phin = iterate(phi, n)
    P, Q = phin.num, phin.den
    F = P - Poly.x() * Q
    infinity_fixed = P.degree > Q.degree
    sqf = F.squarefree_part()
    count_distinct = sqf.degree + (1 if infinity_fixed else 0)
    pts = tuple(
        sorted(
            (complex(float(z.real), float(z.imag)) for z in aberth_roots(sqf, precision)),
            key=lambda v: (v.real, v.imag),
        )
    )
    return PeriodicReport(
        n=n,
        degree=d,
        count_with_multiplicity=d**n + 1,
        count_distinct=count_distinct,
        finite_points=pts,
        infinity_fixed=infinity_fixed,
    )


def zeta_from_counts(counts, N: int) -> list[Fraction]:
    """Coefficients through degree N of exp(sum counts[n-1] t^n / n)."""
    counts = list(counts)
    if len(counts) < N:
        raise DomainError(f"need at least {N} counts")
    e = [Fraction(1)] + [Fraction(0)] * N
    for k in range(1, N + 1):
        total = sum((counts[j - 1] * e[k - j] for j in range(1, k + 1)), Fraction(0))
        e[k] = total / k
    return e
