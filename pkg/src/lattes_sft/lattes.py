"""Elliptic curves y^2 = x^3 + a*x^2 + b*x + c and the x-coordinate doubling
map, plus floating-point tangent-line doubling used as an oracle.

The doubling map descends to the degree-4 rational map

    (x^4 - 2b x^2 - 8c x + b^2 - 4ac) / (4 (x^3 + a x^2 + b x + c)),

which is the expansion of lambda^2 - a - 2x for the tangent slope
lambda = (3x^2 + 2ax + b)/(2y) on the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from mpmath import mp, mpc

from .errors import DomainError, ParseError
from .exactnum import Poly


@dataclass(frozen=True)
class EllipticCurve:
    a: Fraction
    b: Fraction
    c: Fraction
    cm_D: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))
        rhs = self.rhs()
        if rhs.gcd(rhs.derivative()).degree > 0:
            raise DomainError("singular curve: x^3+ax^2+bx+c has a repeated root")

    def rhs(self) -> Poly:
        return Poly((self.c, self.b, self.a, Fraction(1)))

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    @classmethod
    def parse(cls, text: str, cm_D: int | None = None) -> "EllipticCurve":
        toks = text.strip().split(",")
        if len(toks) != 3:
            raise ParseError(f"bad curve text {text!r}; expected 'a,b,c'")
        try:
            a, b, c = (Fraction(t.strip()) for t in toks)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad curve text {text!r}") from exc
        return cls(a, b, c, cm_D)


@dataclass(frozen=True)
class RationalMap:
    """A rational self-map num/den of the projective line, held in lowest
    terms with integer-primitive coefficients and positive denominator lead."""

    num: Poly
    den: Poly

    def __post_init__(self):
        num, den = self.num, self.den
        if den.is_zero:
            raise DomainError("zero denominator")
        if num.is_zero:
            raise DomainError("the zero map is not a self-map of degree >= 1")
        g = num.gcd(den)
        if g.degree > 0:
            num //= g
            den //= g
        scale = lcm(
            *(c.denominator for c in num.coeffs), *(c.denominator for c in den.coeffs)
        )
        ni = [int(c * scale) for c in num.coeffs]
        di = [int(c * scale) for c in den.coeffs]
        content = 0
        for v in ni + di:
            content = gcd(content, abs(v))
        ni = [v // content for v in ni]
        di = [v // content for v in di]
        if di[-1] < 0:
            ni = [-v for v in ni]
            di = [-v for v in di]
        num, den = Poly(ni), Poly(di)
        if max(num.degree, den.degree) < 1:
            raise DomainError("constant map")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def eval_mp(self, z):
        """Value at an mpmath complex number in the caller's precision."""
        dv = self.den.eval_mp(z)
        if dv == 0:
            raise DomainError("evaluation at a pole")
        return self.num.eval_mp(z) / dv

    def __str__(self) -> str:
        return f"{self.num.to_text()} / {self.den.to_text()}"

    @classmethod
    def parse(cls, text: str) -> "RationalMap":
        if " / " in text:
            ntext, dtext = text.split(" / ", 1)
        else:
            parts = text.split("/")
            if len(parts) != 2:
                raise ParseError(
                    f"bad map text {text!r}; expected 'num_coeffs / den_coeffs'"
                )
            ntext, dtext = parts
        return cls(Poly.from_text(ntext), Poly.from_text(dtext))


def duplication_map(E: EllipticCurve) -> RationalMap:
    """x-coordinate of point doubling on E, a degree-4 rational map."""
    a, b, c = E.a, E.b, E.c
    num = Poly((b * b - 4 * a * c, -8 * c, -2 * b, Fraction(0), Fraction(1)))
    den = Poly((4 * c, 4 * b, 4 * a, Fraction(4)))
    return RationalMap(num, den)


def _to_mpc(x) -> mpc:
    if isinstance(x, Fraction):
        return mpc(x.numerator) / x.denominator
    return mpc(x)


def lift_y(E: EllipticCurve, x, precision: int = 128):
    """Principal square root of x^3 + a*x^2 + b*x + c at the given precision."""
    with mp.workprec(precision):
        return mp.sqrt(E.rhs().eval_mp(_to_mpc(x)))


def double_point(E: EllipticCurve, x, y, precision: int = 128, rel_tol: float = 1e-9):
    """Tangent-line doubling of the affine point (x, y).

    The point must satisfy the curve equation to within rel_tol and must not
    be 2-torsion (y = 0 doubles to the point at infinity).
    """
    with mp.workprec(precision):
        xz, yz = _to_mpc(x), _to_mpc(y)
        f = E.rhs().eval_mp(xz)
        if yz == 0:
            raise DomainError("2-torsion point: doubling lands at infinity")
        resid = abs(yz * yz - f)
        if resid > rel_tol * max(1, abs(yz * yz), abs(f)):
            raise DomainError("point does not lie on the curve")
        a, b = E.a, E.b
        lam = (3 * xz * xz + 2 * _to_mpc(a) * xz + _to_mpc(b)) / (2 * yz)
        xp = lam * lam - _to_mpc(a) - 2 * xz
        yp = lam * (xz - xp) - yz
        return xp, yp
