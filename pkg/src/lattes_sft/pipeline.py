"""End-to-end chain from a CM-annotated curve and an integral field element
to shift-dynamics invariants, plus the side-by-side periodic-point
comparison harness.

The comparison harness only asserts identities that are internally forced
(the Bezout count degree^n + 1 and the trace/enumeration agreement); the
complex-map distinct count is reported next to the trace count, never
asserted equal to it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cfrac import ContinuedFraction, IntMatrix2, QuadSurd, expand, period_matrix, square_part
from .dynsys import periodic_points
from .errors import DomainError
from .exactnum import QuadElem, companion_matrix
from .lattes import EllipticCurve, duplication_map
from .lattice import PseudoLattice, cm_to_rm, scale_lattice
from .sft import (
    AbelianGroupInvariant,
    SEResult,
    SFTMatrix,
    SimilarityResult,
    ZetaRational,
    gl2z_similar,
    k_invariants,
    per_count_enumerate,
    per_count_trace,
    shift_equivalent,
    zeta_sft,
)


@dataclass(frozen=True)
class FunctorOutput:
    D: int
    epsilon: QuadElem
    A: IntMatrix2
    theta_prime: QuadSurd
    cf: ContinuedFraction
    T: IntMatrix2
    zeta: ZetaRational
    K0: AbelianGroupInvariant

    def to_json_dict(self) -> dict:
        return {
            "D": self.D,
            "epsilon": str(self.epsilon),
            "A": [list(r) for r in self.A.rows()],
            "theta_prime": str(self.theta_prime),
            "cf": {"preperiod": list(self.cf.preperiod), "period": list(self.cf.period)},
            "T": [list(r) for r in self.T.rows()],
            "zeta": self.zeta.to_json_dict(),
            "K0": self.K0.to_json_dict(),
        }


def _check_field(D: int, eps: QuadElem) -> None:
    if square_part(D)[1] != eps.D:
        raise DomainError(
            f"epsilon lies in Q(sqrt({eps.D})) but D = {D} has square-free part "
            f"{square_part(D)[1]}"
        )


def functor_invariants(D: int, eps: QuadElem) -> FunctorOutput:
    """Chain: discriminant transfer, companion matrix, lattice rescaling,
    continued fraction, period matrix, zeta function, K0."""
    D = cm_to_rm(D)
    _check_field(D, eps)
    A = companion_matrix(eps)
    sub = scale_lattice(PseudoLattice.from_sqrt(D), eps)
    theta_prime = sub.normalized.theta
    cf = expand(theta_prime.translate(-theta_prime.floor()))
    T = period_matrix(cf)
    sft_A = SFTMatrix.from_intmatrix2(A)
    return FunctorOutput(
        D=D,
        epsilon=eps,
        A=A,
        theta_prime=theta_prime,
        cf=cf,
        T=T,
        zeta=zeta_sft(sft_A),
        K0=k_invariants(sft_A).K0,
    )


def apply_functor(E: EllipticCurve, eps: QuadElem) -> FunctorOutput:
    """Shift-dynamics invariants of the doubling dynamics on a CM curve."""
    if E.cm_D is None:
        raise DomainError("curve carries no CM discriminant annotation")
    return functor_invariants(E.cm_D, eps)


@dataclass(frozen=True)
class ConjugacyVerdict:
    shift_equivalence: SEResult
    gl2_similarity: SimilarityResult

    def to_json_dict(self) -> dict:
        return {
            "shift_equivalence": self.shift_equivalence.to_json_dict(),
            "gl2_similarity": self.gl2_similarity.to_json_dict(),
        }


def conjugacy_test(
    out1: FunctorOutput,
    out2: FunctorOutput,
    entry_bound: int = 10,
    lag_bound: int = 6,
    similarity_bound: int = 10,
) -> ConjugacyVerdict:
    """Shift equivalence of the two shift matrices, with GL2(Z) similarity
    reported as corroboration."""
    se = shift_equivalent(
        SFTMatrix.from_intmatrix2(out1.A),
        SFTMatrix.from_intmatrix2(out2.A),
        entry_bound,
        lag_bound,
    )
    sim = gl2z_similar(out1.A, out2.A, similarity_bound)
    return ConjugacyVerdict(se, sim)


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    trace_count: int
    distinct_count: int
    multiplicity_count: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "trace_count": self.trace_count,
            "distinct_count": self.distinct_count,
            "multiplicity_count": self.multiplicity_count,
        }


def comparison_report(
    E: EllipticCurve, eps: QuadElem, n_max: int, precision: int = 128
) -> list[ComparisonRow]:
    """Side-by-side periodic-point counts for the doubling map of E and the
    edge shift of the companion matrix of eps, for n = 1..n_max."""
    if not 1 <= n_max <= 4:
        raise DomainError("n_max must be between 1 and 4 (degree growth guard)")
    if E.cm_D is None:
        raise DomainError("curve carries no CM discriminant annotation")
    _check_field(E.cm_D, eps)
    phi = duplication_map(E)
    A = SFTMatrix.from_intmatrix2(companion_matrix(eps))
    d = phi.degree
    rows = []
    for n in range(1, n_max + 1):
        rep = periodic_points(phi, n, precision)
        tr = per_count_trace(A, n)
        if rep.count_with_multiplicity != d**n + 1:
            raise ArithmeticError("Bezout count identity violated")
        if tr != per_count_enumerate(A, n):
            raise ArithmeticError("trace/enumeration identity violated")
        rows.append(
            ComparisonRow(
                n=n,
                trace_count=tr,
                distinct_count=rep.count_distinct,
                multiplicity_count=rep.count_with_multiplicity,
            )
        )
    return rows
