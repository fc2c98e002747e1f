"""Cauchy-Kovalevskaya extension operators and the polynomial Poisson solver.

For t-free polynomial data f the harmonic extension with prescribed Cauchy
data on the hyperplane t = 0 is a finite series:

    even:  H(t,y) = sum_k (-1)^k t^(2k)   / (2k)!   * Lap_y^k f(y)
    odd:   V(t,y) = sum_k (-1)^k t^(2k+1) / (2k+1)! * Lap_y^k f(y)

Both terminate because Lap_y strictly lowers degree.  The trace operator
L_c f = V(c, y) is invertible on polynomials by a finite Neumann series for
the same reason, and the Poisson solver uses the radial |y|^2 ansatz per
homogeneous component.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import MultiPoly, Scalar, _frac


def _mul_t_power(p: MultiPoly, n: int) -> MultiPoly:
    """Multiply by t^n (cheap exponent shift)."""
    return MultiPoly(p.d, {(e[0] + n,) + e[1:]: c for e, c in p.terms.items()})


def _require_t_free(p: MultiPoly, what: str) -> None:
    if not p.is_t_free:
        raise ValueError(f"{what} must not depend on t: {p}")


def even_ck_extension(f: MultiPoly) -> MultiPoly:
    """Harmonic H with H(0,y) = f(y) and dH/dt(0,y) = 0; even in t."""
    _require_t_free(f, "even_ck_extension input")
    result = MultiPoly.zero(f.d)
    term = f  # Lap_y^k f
    coeff = Fraction(1)  # (-1)^k / (2k)!
    k = 0
    while not term.is_zero:
        result = result + _mul_t_power(term, 2 * k).scale(coeff)
        term = term.laplacian_y()
        k += 1
        coeff = -coeff / (2 * k * (2 * k - 1))
    return result


def odd_ck_extension(g: MultiPoly) -> MultiPoly:
    """Harmonic V with V(0,y) = 0 and dV/dt(0,y) = g(y); odd in t."""
    _require_t_free(g, "odd_ck_extension input")
    result = MultiPoly.zero(g.d)
    term = g
    coeff = Fraction(1)  # (-1)^k / (2k+1)!
    k = 0
    while not term.is_zero:
        result = result + _mul_t_power(term, 2 * k + 1).scale(coeff)
        term = term.laplacian_y()
        k += 1
        coeff = -coeff / (2 * k * (2 * k + 1))
    return result


def trace_operator(c: Scalar, g: MultiPoly) -> MultiPoly:
    """L_c g = (odd CK extension of g) evaluated at t = c, kept t-free.

    Equals sum_k (-1)^k c^(2k+1) Lap_y^k g / (2k+1)!.
    """
    _require_t_free(g, "trace_operator input")
    c = _frac(c)
    result = MultiPoly.zero(g.d)
    term = g
    coeff = c  # (-1)^k c^(2k+1) / (2k+1)!
    k = 0
    while not term.is_zero:
        result = result + term.scale(coeff)
        term = term.laplacian_y()
        k += 1
        coeff = -coeff * c * c / (2 * k * (2 * k + 1))
    return result


def invert_trace_operator(c: Scalar, p: MultiPoly) -> MultiPoly:
    """Solve L_c g = p for t-free polynomial p.

    L_c = c (I + N_c) where N_c lowers degree by at least 2, so N_c is
    nilpotent on polynomials and the Neumann series below is finite.
    """
    _require_t_free(p, "invert_trace_operator input")
    c = _frac(c)
    if c == 0:
        raise ValueError("trace operator height c must be nonzero")

    def n_c(q: MultiPoly) -> MultiPoly:
        return trace_operator(c, q).scale(1 / c) - q

    total = p
    term = p
    while not term.is_zero:
        term = -n_c(term)
        total = total + term
    return total.scale(1 / c)


def poisson_solve(f: MultiPoly) -> MultiPoly:
    """A t-free polynomial G with Lap_y G = f, exactly.

    Per homogeneous component f_m of degree m the radial ansatz

        G_m = sum_k c_k |y|^(2k+2) Lap_y^k f_m,
        c_0 = 1/(2(2m+d)),  c_k = -c_(k-1) / (2(k+1)(2m-2k+d))

    gives a particular solution; solutions are unique only up to a harmonic
    addend, so the exact residual check at the end is the contract.
    """
    _require_t_free(f, "poisson_solve input")
    d = f.d
    r2 = MultiPoly.zero(d)
    for j in range(1, d + 1):
        yj = MultiPoly.variable(d, j)
        r2 = r2 + yj * yj

    # split into homogeneous components by total degree
    components: dict[int, dict] = {}
    for exps, coeff in f.terms.items():
        components.setdefault(sum(exps), {})[exps] = coeff

    result = MultiPoly.zero(d)
    for m, terms in components.items():
        fm = MultiPoly(d, terms)
        coeff = Fraction(1, 2 * (2 * m + d))
        term = fm
        r2_pow = r2
        k = 0
        while not term.is_zero:
            result = result + (r2_pow * term).scale(coeff)
            term = term.laplacian_y()
            if term.is_zero:
                break
            k += 1
            coeff = -coeff / (2 * (k + 1) * (2 * m - 2 * k + d))
            r2_pow = r2_pow * r2

    residual = result.laplacian_y() - f
    if not residual.is_zero:
        raise ArithmeticError(f"poisson_solve residual is nonzero: {residual}")
    return result
