"""Subshifts of finite type presented by non-negative integer matrices.

Periodic-point counts come from two independent routes (matrix trace versus
explicit closed-walk enumeration in the edge multigraph), zeta functions from
det(I - tA), and K-type invariants from Smith normal form.  Shift equivalence
is decided by invariant pre-filters followed by a bounded exhaustive search:
any certificate (R, S, k) satisfies the Sylvester constraints A R = R B and
B S = S A, so candidates are enumerated from those solution lattices
intersected with the entry box.  Exhausting the bounds yields Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt

from .cfrac import IntMatrix2, is_square
from .errors import BudgetExceededError, DomainError, ParseError
from .exactnum import Poly
from .intlinalg import (
    charpoly,
    identity,
    mat_mul,
    mat_pow,
    mat_sub,
    scalar_matrix,
    smith_diagonal,
    solve_right,
    sylvester_solutions,
    trace,
    transpose,
)

ENUMERATION_BUDGET = 10**7


@dataclass(frozen=True)
class SFTMatrix:
    """Square non-negative integer matrix defining an edge shift."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DomainError("matrix must be square and nonempty")
        if any(v < 0 for r in rows for v in r):
            raise DomainError("matrix entries must be non-negative")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def from_intmatrix2(cls, M: IntMatrix2) -> "SFTMatrix":
        if not M.is_nonnegative():
            raise DomainError(
                f"matrix {M} has negative entries and defines no edge shift"
            )
        return cls(M.rows())

    @cached_property
    def is_irreducible(self) -> bool:
        """Strong connectivity of the edge multigraph: (I + A)^(n-1) > 0."""
        n = self.n
        if n == 1:
            return self.rows[0][0] > 0
        P = identity(n)
        IA = tuple(
            tuple(self.rows[i][j] + (1 if i == j else 0) for j in range(n))
            for i in range(n)
        )
        for _ in range(n - 1):
            P = mat_mul(P, IA)
        return all(v > 0 for r in P for v in r)

    @cached_property
    def is_primitive(self) -> bool:
        """Some single power is strictly positive (Wielandt bound on the
        exponent).  Implies irreducibility but not conversely."""
        n = self.n
        bound = (n - 1) * (n - 1) + 1
        P = self.rows
        for _ in range(bound):
            if all(v > 0 for r in P for v in r):
                return True
            P = mat_mul(P, self.rows)
        return False

    @property
    def total_edges(self) -> int:
        return sum(v for r in self.rows for v in r)

    def spectral_radius_float(self) -> float:
        """Largest absolute eigenvalue, as a float convenience."""
        from mpmath import mp

        with mp.workprec(64):
            rts = mp.polyroots([mp.mpf(c) for c in reversed(charpoly(self.rows))])
            return float(max(abs(r) for r in rts)) if rts else 0.0

    def __str__(self) -> str:
        return ";".join(",".join(str(v) for v in r) for r in self.rows)

    @classmethod
    def parse(cls, text: str) -> "SFTMatrix":
        try:
            rows = tuple(
                tuple(int(v) for v in row.split(",")) for row in text.strip().split(";")
            )
        except ValueError as exc:
            raise ParseError(f"bad matrix text {text!r}") from exc
        return cls(rows)


@dataclass(frozen=True)
class ZetaRational:
    """Rational function num/den in t, coprime, den(0) = 1."""

    num: Poly
    den: Poly

    def __post_init__(self):
        num, den = self.num, self.den
        if den.is_zero:
            raise DomainError("zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num //= g
            den //= g
        d0 = den.coefficient(0)
        if d0 == 0:
            raise DomainError("denominator must not vanish at t = 0")
        num *= 1 / d0
        den *= 1 / d0
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def series(self, N: int) -> list[Fraction]:
        """Power-series coefficients through degree N."""
        b = self.den
        out = []
        for k in range(N + 1):
            v = self.num.coefficient(k)
            v -= sum(b.coefficient(j) * out[k - j] for j in range(1, k + 1))
            out.append(v)  # b(0) = 1
        return out

    def __str__(self) -> str:
        n = self.num.pretty("t")
        if self.den == Poly.one():
            return n
        return f"{n}/({self.den.pretty('t')})"

    def to_json_dict(self) -> dict:
        return {
            "num": [str(c) for c in self.num.coeffs],
            "den": [str(c) for c in self.den.coeffs],
        }


@dataclass(frozen=True)
class AbelianGroupInvariant:
    """Isomorphism type Z^rank + Z/d1 + ... with d1 | d2 | ... , each > 1."""

    rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise DomainError("rank must be non-negative")
        if any(d <= 1 for d in self.torsion):
            raise DomainError("torsion divisors must exceed 1")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x != 0:
                raise DomainError("torsion divisors must form a divisibility chain")

    @classmethod
    def from_smith_diagonal(cls, diag) -> "AbelianGroupInvariant":
        rank = sum(1 for d in diag if d == 0)
        torsion = tuple(d for d in diag if d > 1)
        return cls(rank, torsion)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        if self.is_trivial:
            return "trivial"
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts)

    def to_json_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class KInvariants:
    K0: AbelianGroupInvariant
    K1_rank: int
    bowen_franks: AbelianGroupInvariant

    def to_json_dict(self) -> dict:
        return {
            "K0": self.K0.to_json_dict(),
            "K1_rank": self.K1_rank,
            "BowenFranks": self.bowen_franks.to_json_dict(),
        }


@dataclass(frozen=True)
class SECertificate:
    """Witness (R, S, k) for shift equivalence: A R = R B, B S = S A,
    A^k = R S, S R = B^k."""

    R: tuple[tuple[int, ...], ...]
    S: tuple[tuple[int, ...], ...]
    k: int

    def verify(self, A: "SFTMatrix", B: "SFTMatrix") -> bool:
        R, S, k = self.R, self.S, self.k
        a, b = A.rows, B.rows
        return (
            mat_mul(a, R) == mat_mul(R, b)
            and mat_mul(b, S) == mat_mul(S, a)
            and mat_pow(a, k) == mat_mul(R, S)
            and mat_mul(S, R) == mat_pow(b, k)
        )

    @classmethod
    def build(cls, A: "SFTMatrix", B: "SFTMatrix", R, S, k: int) -> "SECertificate":
        cert = cls(tuple(tuple(r) for r in R), tuple(tuple(r) for r in S), int(k))
        if k < 1:
            raise DomainError("lag must be positive")
        if any(v < 0 for M in (cert.R, cert.S) for row in M for v in row):
            raise DomainError("certificate matrices must be non-negative")
        if not cert.verify(A, B):
            raise DomainError("certificate fails the shift-equivalence equations")
        return cert

    def to_json_dict(self) -> dict:
        return {
            "R": [list(r) for r in self.R],
            "S": [list(r) for r in self.S],
            "k": self.k,
        }


@dataclass(frozen=True)
class SEResult:
    status: str  # "equivalent" | "not_equivalent" | "unknown"
    certificate: SECertificate | None = None
    witness: str | None = None

    def to_json_dict(self) -> dict:
        doc: dict = {"status": self.status}
        if self.certificate is not None:
            doc["certificate"] = self.certificate.to_json_dict()
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


@dataclass(frozen=True)
class SimilarityResult:
    status: str  # "similar" | "not_similar" | "unknown"
    T: IntMatrix2 | None = None
    witness: str | None = None

    def to_json_dict(self) -> dict:
        doc: dict = {"status": self.status}
        if self.T is not None:
            doc["T"] = [list(r) for r in self.T.rows()]
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


def per_count_trace(A: SFTMatrix, n: int) -> int:
    """Number of n-periodic points of the edge shift, as tr(A^n)."""
    if n < 1:
        raise DomainError("period must be >= 1")
    return trace(mat_pow(A.rows, n))


def _closed_walks(adj, cur: int, start: int, steps: int) -> int:
    if steps == 1:
        return adj[cur].count(start)
    total = 0
    for w in adj[cur]:
        total += _closed_walks(adj, w, start, steps - 1)
    return total


def per_count_enumerate(A: SFTMatrix, n: int) -> int:
    """Independent count of closed edge paths of length n, enumerated
    explicitly in the multigraph with A[i][j] parallel edges i -> j."""
    if n < 1:
        raise DomainError("period must be >= 1")
    edges = A.total_edges
    if edges**n > ENUMERATION_BUDGET:
        raise BudgetExceededError(
            f"enumeration budget exceeded: {edges}^{n} closed-walk bound"
        )
    adj = [
        [j for j in range(A.n) for _ in range(A.rows[i][j])] for i in range(A.n)
    ]
    return sum(_closed_walks(adj, v, v, n) for v in range(A.n))


def zeta_sft(A: SFTMatrix) -> ZetaRational:
    """The rational zeta function 1/det(I - tA) of the edge shift."""
    cp = charpoly(A.rows)  # det(tI - A), lowest first
    den = Poly(tuple(reversed(cp)))  # det(I - tA) = t^n charpoly(1/t)
    return ZetaRational(Poly.one(), den)


def k_invariants(A) -> KInvariants:
    """K-group data of the shift matrix via Smith normal form.

    K0 = Z^n/(I - A^t)Z^n, K1 = ker(I - A^t), Bowen-Franks = Z^n/(I - A)Z^n.
    Accepts an SFTMatrix or any square integer row tuple (non-negativity is
    not needed for these quotients).
    """
    rows = A.rows if isinstance(A, SFTMatrix) else tuple(
        tuple(int(v) for v in r) for r in A
    )
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("matrix must be square")
    I = identity(n)
    k0 = AbelianGroupInvariant.from_smith_diagonal(
        smith_diagonal(mat_sub(I, transpose(rows)))
    )
    bf = AbelianGroupInvariant.from_smith_diagonal(smith_diagonal(mat_sub(I, rows)))
    return KInvariants(K0=k0, K1_rank=k0.rank, bowen_franks=bf)


def _nonsingular_charpoly(rows) -> tuple[int, ...]:
    """Characteristic polynomial with the nilpotent-part factor t^m removed."""
    cs = list(charpoly(rows))
    while cs and cs[0] == 0:
        cs.pop(0)
    return tuple(cs)


def _poly_text(cs) -> str:
    return Poly(cs).pretty("t")


SEARCH_BUDGET = 2 * 10**6


def shift_equivalent(
    A: SFTMatrix, B: SFTMatrix, entry_bound: int = 10, lag_bound: int = 6
) -> SEResult:
    """Decide shift equivalence over the non-negative integers within bounds.

    Invariant pre-filters give exact negatives; a certificate is searched for
    lexicographically by (lag, R, S), so the returned certificate is the
    least one inside the bounds.  A = B short-circuits to the reflexivity
    certificate (I, A, 1).
    """
    if A.n != B.n:
        raise DomainError("matrices must have the same size")
    if entry_bound < 1 or lag_bound < 1:
        raise DomainError("bounds must be >= 1")
    if A == B:
        cert = SECertificate.build(A, B, identity(A.n), A.rows, 1)
        return SEResult("equivalent", certificate=cert)

    pa, pb = _nonsingular_charpoly(A.rows), _nonsingular_charpoly(B.rows)
    if pa != pb:
        return SEResult(
            "not_equivalent",
            witness=(
                "characteristic polynomials of the nonsingular parts differ "
                f"(trace/determinant data): {_poly_text(pa)} vs {_poly_text(pb)}"
            ),
        )
    bfa = k_invariants(A).bowen_franks
    bfb = k_invariants(B).bowen_franks
    if bfa != bfb:
        return SEResult(
            "not_equivalent",
            witness=f"Bowen-Franks groups differ: {bfa} vs {bfb}",
        )

    r_cands = sorted(sylvester_solutions(A.rows, B.rows, 0, entry_bound))
    s_cands = sorted(sylvester_solutions(B.rows, A.rows, 0, entry_bound))
    work = 0
    for k in range(1, lag_bound + 1):
        Ak = mat_pow(A.rows, k)
        Bk = mat_pow(B.rows, k)
        for R in r_cands:
            sol = solve_right(R, Ak)
            if sol is not None:
                if any(v.denominator != 1 for row in sol for v in row):
                    continue
                S = tuple(tuple(int(v) for v in row) for row in sol)
                if any(v < 0 or v > entry_bound for row in S for v in row):
                    continue
                if (
                    mat_mul(B.rows, S) == mat_mul(S, A.rows)
                    and mat_mul(S, R) == Bk
                ):
                    return SEResult(
                        "equivalent", certificate=SECertificate.build(A, B, R, S, k)
                    )
            else:
                for S in s_cands:
                    work += 1
                    if work > SEARCH_BUDGET:
                        return SEResult(
                            "unknown",
                            witness="search budget exceeded before exhausting bounds",
                        )
                    if mat_mul(R, S) == Ak and mat_mul(S, R) == Bk:
                        return SEResult(
                            "equivalent",
                            certificate=SECertificate.build(A, B, R, S, k),
                        )
    return SEResult(
        "unknown",
        witness=f"no certificate with entries <= {entry_bound} and lag <= {lag_bound}",
    )


def _signed_key(rows) -> tuple:
    """Order matrices by absolute entry size, non-negative before negative."""
    return tuple((abs(v), 0 if v >= 0 else 1) for r in rows for v in r)


def gl2z_similar(A: IntMatrix2, B: IntMatrix2, bound: int = 10) -> SimilarityResult:
    """Decide GL2(Z) similarity A' = T^{-1} A T within the entry bound."""
    if bound < 1:
        raise DomainError("bound must be >= 1")
    if A == B:
        return SimilarityResult("similar", T=IntMatrix2.identity())
    if (A.trace(), A.det()) != (B.trace(), B.det()):
        return SimilarityResult(
            "not_similar",
            witness=(
                f"characteristic polynomials differ: trace {A.trace()} vs "
                f"{B.trace()}, determinant {A.det()} vs {B.det()}"
            ),
        )
    tr, dt = A.trace(), A.det()
    disc = tr * tr - 4 * dt
    if disc >= 0 and is_square(disc):
        s = isqrt(disc)
        if (tr - s) % 2 == 0:
            for lam in ((tr + s) // 2, (tr - s) // 2):
                dA = smith_diagonal(mat_sub(A.rows(), scalar_matrix(2, lam)))
                dB = smith_diagonal(mat_sub(B.rows(), scalar_matrix(2, lam)))
                if dA != dB:
                    return SimilarityResult(
                        "not_similar",
                        witness=(
                            f"Smith forms of (A - {lam} I) differ: "
                            f"{list(dA)} vs {list(dB)}"
                        ),
                    )
    cands = sylvester_solutions(A.rows(), B.rows(), -bound, bound)
    valid = [T for T in cands if abs(T[0][0] * T[1][1] - T[0][1] * T[1][0]) == 1]
    if valid:
        best = min(valid, key=_signed_key)
        return SimilarityResult("similar", T=IntMatrix2.from_rows(best))
    return SimilarityResult(
        "unknown", witness=f"no unimodular conjugator with |entries| <= {bound}"
    )
