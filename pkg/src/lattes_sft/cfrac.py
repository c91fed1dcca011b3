"""Periodic continued fractions of real quadratic irrationals.

A quadratic surd is kept in the classical integer form (P + sqrt(D))/Q with
Q dividing D - P*P, which makes the expansion recurrence

    a = floor((P + sqrt(D)) / Q),   P' = a*Q - P,   Q' = (D - P'*P') / Q

purely integral.  States (P, Q) repeat by Lagrange periodicity; the expansion
is cut at the first repeated state, so the preperiod is as short as possible
and the returned period is a minimal cycle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError, ParseError


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def square_part(n: int) -> tuple[int, int]:
    """Split n > 0 as m*m * kernel with kernel square-free; returns (m, kernel)."""
    m = 1
    kernel = 1
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            m *= p ** (e // 2)
            if e % 2:
                kernel *= p
        p += 1 if p == 2 else 2
    if rest > 1:
        kernel *= rest
    return m, kernel


def is_squarefree(n: int) -> bool:
    return n > 0 and square_part(n)[0] == 1


@dataclass(frozen=True)
class IntMatrix2:
    """2x2 integer matrix ((a, b), (c, d))."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> "IntMatrix2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix2":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def pow(self, e: int) -> "IntMatrix2":
        if e < 0:
            raise DomainError("negative matrix power")
        out = IntMatrix2.identity()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def transpose(self) -> "IntMatrix2":
        return IntMatrix2(self.a, self.c, self.b, self.d)

    def is_nonnegative(self) -> bool:
        return all(e >= 0 for e in self.entries())

    def __str__(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"

    @classmethod
    def parse(cls, text: str) -> "IntMatrix2":
        try:
            rows = [[int(v) for v in row.split(",")] for row in text.strip().split(";")]
        except ValueError as exc:
            raise ParseError(f"bad matrix text {text!r}") from exc
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ParseError(f"expected a 2x2 matrix, got {text!r}")
        return cls.from_rows(rows)


_SURD_RE = re.compile(
    r"^\(\s*(-?\d+)\s*\+\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(-?\d+)$"
)


def _surd_floor(P: int, Q: int, D: int) -> int:
    s = isqrt(D)
    if Q > 0:
        return (P + s) // Q
    return -((P + s) // (-Q)) - 1


@dataclass(frozen=True, eq=False)
class QuadSurd:
    """The real quadratic irrational (P + sqrt(D))/Q."""

    P: int
    Q: int
    D: int

    def __post_init__(self):
        if self.Q == 0:
            raise DomainError("surd denominator Q must be nonzero")
        if self.D <= 0 or is_square(self.D):
            raise DomainError("D must be positive and not a perfect square")
        if (self.D - self.P * self.P) % self.Q != 0:
            # rescale so that Q | D - P*P; the value is unchanged
            q = abs(self.Q)
            object.__setattr__(self, "P", self.P * q)
            object.__setattr__(self, "D", self.D * q * q)
            object.__setattr__(self, "Q", self.Q * q)

    def _canonical(self) -> tuple[int, int, int, int]:
        m, kernel = square_part(self.D)
        g = gcd(gcd(abs(self.P), m), abs(self.Q))
        return (self.P // g, m // g, kernel, self.Q // g)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadSurd):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(self._canonical())

    def floor(self) -> int:
        return _surd_floor(self.P, self.Q, self.D)

    def translate(self, k: int) -> "QuadSurd":
        """The surd plus the integer k."""
        return QuadSurd(self.P + k * self.Q, self.Q, self.D)

    def is_positive(self) -> bool:
        num_pos = self.P >= 0 or self.P * self.P < self.D
        return num_pos if self.Q > 0 else not num_pos

    def cmp_fraction(self, r: Fraction) -> int:
        """Sign of (self - r), computed exactly (never 0: self is irrational)."""
        t = Fraction(r) * self.Q - self.P  # compare sqrt(D) with t, up to sign(Q)
        if t < 0:
            s = 1
        else:
            s = 1 if self.D > t * t else -1
        return s if self.Q > 0 else -s

    def value(self, precision: int = 128):
        """Floating approximation at the given binary precision."""
        from mpmath import mp

        with mp.workprec(precision):
            return (self.P + mp.sqrt(self.D)) / self.Q

    def __str__(self) -> str:
        return f"({self.P}+sqrt({self.D}))/{self.Q}"

    @classmethod
    def parse(cls, text: str) -> "QuadSurd":
        m = _SURD_RE.match(text.strip())
        if not m:
            raise ParseError(f"bad surd text {text!r}; expected '(P+sqrt(D))/Q'")
        return cls(int(m.group(1)), int(m.group(3)), int(m.group(2)))


@dataclass(frozen=True)
class ContinuedFraction:
    """Eventually periodic continued fraction: preperiod then repeating period."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(b) for b in self.preperiod))
        object.__setattr__(self, "period", tuple(int(a) for a in self.period))
        if not self.period:
            raise DomainError("period must be nonempty")
        if any(a < 1 for a in self.period):
            raise DomainError("period entries must be >= 1")
        if any(b < 1 for b in self.preperiod[1:]):
            raise DomainError("preperiod entries after the first must be >= 1")

    def quotients(self, n: int) -> list[int]:
        """First n partial quotients, cycling through the period."""
        out = list(self.preperiod[:n])
        i = 0
        while len(out) < n:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out

    def __str__(self) -> str:
        pre = ",".join(map(str, self.preperiod))
        per = ",".join(map(str, self.period))
        return f"[{pre};({per})]"

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        t = text.strip()
        m = re.match(r"^\[([0-9,\-\s]*);\(([0-9,\s]+)\)\]$", t)
        if not m:
            raise ParseError(f"bad continued fraction text {text!r}")
        pre = [int(v) for v in m.group(1).split(",") if v.strip() != ""]
        per = [int(v) for v in m.group(2).split(",") if v.strip() != ""]
        return cls(tuple(pre), tuple(per))


def expand(x: QuadSurd) -> ContinuedFraction:
    """Exact eventually periodic continued fraction of a quadratic surd."""
    P, Q, D = x.P, x.Q, x.D
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(quotients)
        a = _surd_floor(P, Q, D)
        quotients.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    return ContinuedFraction(tuple(quotients[:start]), tuple(quotients[start:]))


def period_matrix(cf: ContinuedFraction) -> IntMatrix2:
    """Product of ((a, 1), (1, 0)) over the period, in order."""
    M = IntMatrix2.identity()
    for a in cf.period:
        M = M * IntMatrix2(a, 1, 1, 0)
    return M


def convergents(cf: ContinuedFraction, n: int) -> list[Fraction]:
    """First n convergents p_i/q_i by the standard recurrence."""
    if n < 1:
        raise DomainError("need at least one convergent")
    pm1, pm2 = 1, 0
    qm1, qm2 = 0, 1
    out = []
    for a in cf.quotients(n):
        p = a * pm1 + pm2
        q = a * qm1 + qm2
        out.append(Fraction(p, q))
        pm2, pm1 = pm1, p
        qm2, qm1 = qm1, q
    return out
