"""Dirichlet problem on the slab (a,b) x R^d with polynomial boundary data.

The solver composes an even CK extension of the data at the left wall with an
odd CK extension whose trace at the right wall is fitted by inverting the
trace operator.  Because all data is polynomial, the solution is a harmonic
polynomial on all of R^(d+1) and every identity below is exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .laplace import even_ck_extension, invert_trace_operator, odd_ck_extension
from .poly import MultiPoly, Scalar, _frac
from .report import VerificationReport


@dataclass(frozen=True)
class SlabProblem:
    """Boundary data f0 at t = a and f1 at t = b, both t-free."""

    a: Fraction
    b: Fraction
    d: int
    f0: MultiPoly
    f1: MultiPoly

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        if self.a >= self.b:
            raise ValueError(f"slab endpoints must satisfy a < b, got a={self.a}, b={self.b}")
        if self.f0.d != self.d or self.f1.d != self.d:
            raise ValueError("boundary data dimension does not match problem dimension")
        if not self.f0.is_t_free or not self.f1.is_t_free:
            raise ValueError("boundary data must be t-free")

    def to_json_dict(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "d": self.d,
            "f0": self.f0.to_json_dict(),
            "f1": self.f1.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, obj: Mapping) -> "SlabProblem":
        return cls(
            a=Fraction(obj["a"]),
            b=Fraction(obj["b"]),
            d=obj["d"],
            f0=MultiPoly.from_json_dict(obj["f0"]),
            f1=MultiPoly.from_json_dict(obj["f1"]),
        )


def solve_slab(prob: SlabProblem) -> MultiPoly:
    """Harmonic polynomial h with trace(h,a) = f0 and trace(h,b) = f1.

    Works in the shifted variable s = t - a: start from the even CK extension
    of f0, then correct the trace at s = c = b - a with an odd CK extension.
    """
    c = prob.b - prob.a
    base = even_ck_extension(prob.f0)
    g = invert_trace_operator(c, prob.f1 - base.trace(c))
    h_shifted = base + odd_ck_extension(g)
    return h_shifted.shift_t(-prob.a)


def verify_boundary(h: MultiPoly, prob: SlabProblem) -> VerificationReport:
    """Exact residuals of the two boundary traces and of harmonicity."""
    start = time.perf_counter()
    residuals = {
        "trace_at_a": h.trace(prob.a) - prob.f0,
        "trace_at_b": h.trace(prob.b) - prob.f1,
        "laplacian": h.laplacian(),
    }
    return VerificationReport.from_residuals(
        "slab_boundary", residuals, elapsed=time.perf_counter() - start
    )


def _require_harmonic(h: MultiPoly, check: str) -> None:
    lap = h.laplacian()
    if not lap.is_zero:
        raise ValueError(f"{check} requires a harmonic input; laplacian = {lap}")


def even_reflection_identity(h: MultiPoly) -> VerificationReport:
    """Check h(t,y) + h(-t,y) = 2 H(t,y) with H the even CK extension of h's
    trace at 0 (the generalized reflection identity across t = 0)."""
    _require_harmonic(h, "even_reflection_identity")
    start = time.perf_counter()
    two_h_even = even_ck_extension(h.trace(0)).scale(2)
    residual = (h + h.negate_t()) - two_h_even
    return VerificationReport.from_residuals(
        "even_reflection_identity",
        {"reflection": residual},
        elapsed=time.perf_counter() - start,
    )


def odd_wall_reflection(h: MultiPoly, c: Scalar) -> VerificationReport:
    """Check h(c+t,y) = -h(c-t,y) at a wall c where the trace vanishes."""
    _require_harmonic(h, "odd_wall_reflection")
    wall_trace = h.trace(c)
    if not wall_trace.is_zero:
        raise ValueError(f"odd_wall_reflection requires trace(h, {c}) = 0, got {wall_trace}")
    start = time.perf_counter()
    p = h.shift_t(c)
    return VerificationReport.from_residuals(
        "odd_wall_reflection",
        {"odd_reflection": p + p.negate_t()},
        elapsed=time.perf_counter() - start,
    )


def zero_data_rigidity(h: MultiPoly, a: Scalar, b: Scalar) -> VerificationReport:
    """A harmonic polynomial vanishing on both walls is identically zero.

    (Its reflection extension is periodic in t; a periodic polynomial is
    t-free, and a t-free polynomial vanishing at t = a is zero.)
    """
    _require_harmonic(h, "zero_data_rigidity")
    if not (h.trace(a).is_zero and h.trace(b).is_zero):
        return VerificationReport.not_applicable(
            "zero_data_rigidity", reason="boundary traces are not both zero"
        )
    return VerificationReport.from_residuals("zero_data_rigidity", {"h": h})
