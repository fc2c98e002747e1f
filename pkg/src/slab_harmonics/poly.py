"""Exact sparse polynomial arithmetic in the variables (t, y1, ..., yd).

Coefficients are `fractions.Fraction`, so every operation is exact and
polynomial identities can be checked by literal equality.  Variable index 0
is always t, the distinguished reflection/shift variable; indices 1..d are
the y-variables.

Terms live in a dict mapping exponent tuples (length d+1) to nonzero
coefficients.  The zero polynomial has an empty term map and, by convention,
total degree -1.  The canonical serialized term order is graded
lexicographic (leading term first), with t ordered before y1 < ... < yd.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence, Union

Scalar = Union[Fraction, int, str]


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class MultiPoly:
    """Immutable sparse multivariate polynomial over the rationals."""

    __slots__ = ("d", "_terms")

    def __init__(self, d: int, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        if d < 1:
            raise ValueError(f"dimension d must be >= 1, got {d}")
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != d + 1:
                    raise ValueError(
                        f"exponent vector {exps} has length {len(exps)}, expected {d + 1}"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                c = _frac(coeff)
                if c:
                    clean[exps] = c
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, d: int) -> "MultiPoly":
        return cls(d)

    @classmethod
    def constant(cls, d: int, value: Scalar) -> "MultiPoly":
        return cls(d, {(0,) * (d + 1): _frac(value)})

    @classmethod
    def variable(cls, d: int, index: int) -> "MultiPoly":
        """The monomial for variable `index` (0 = t, 1..d = y1..yd)."""
        if not 0 <= index <= d:
            raise IndexError(f"variable index {index} out of range 0..{d}")
        exps = [0] * (d + 1)
        exps[index] = 1
        return cls(d, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, d: int, exps: Sequence[int], coeff: Scalar = 1) -> "MultiPoly":
        return cls(d, {tuple(exps): _frac(coeff)})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: int) -> int:
        """Degree in a single variable; -1 for the zero polynomial."""
        self._check_var(var)
        if not self._terms:
            return -1
        return max(e[var] for e in self._terms)

    @property
    def is_t_free(self) -> bool:
        return all(e[0] == 0 for e in self._terms)

    def _check_var(self, var: int) -> None:
        if not 0 <= var <= self.d:
            raise IndexError(f"variable index {var} out of range 0..{self.d}")

    def _check_space(self, other: "MultiPoly") -> None:
        if self.d != other.d:
            raise ValueError(f"dimension mismatch: d={self.d} vs d={other.d}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_space(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            out[exps] = out.get(exps, Fraction(0)) + c
        return MultiPoly(self.d, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_space(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            out[exps] = out.get(exps, Fraction(0)) - c
        return MultiPoly(self.d, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.d, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "MultiPoly | Scalar") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check_space(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                out[exps] = out.get(exps, Fraction(0)) + ca * cb
        return MultiPoly(self.d, out)

    def __rmul__(self, other: Scalar) -> "MultiPoly":
        return self.scale(other)

    def scale(self, c: Scalar) -> "MultiPoly":
        c = _frac(c)
        return MultiPoly(self.d, {e: c * v for e, v in self._terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.d, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.d == other.d and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.d, frozenset(self._terms.items())))

    # -- calculus ----------------------------------------------------------

    def derivative(self, var: int) -> "MultiPoly":
        """Exact partial derivative with respect to variable `var`."""
        self._check_var(var)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self._terms.items():
            n = exps[var]
            if n == 0:
                continue
            e = list(exps)
            e[var] = n - 1
            out[tuple(e)] = c * n
        return MultiPoly(self.d, out)

    def laplacian(self) -> "MultiPoly":
        """Sum of second partials over all d+1 variables."""
        result = MultiPoly.zero(self.d)
        for var in range(self.d + 1):
            result = result + self.derivative(var).derivative(var)
        return result

    def laplacian_y(self) -> "MultiPoly":
        """Sum of second partials over the y-variables only."""
        result = MultiPoly.zero(self.d)
        for var in range(1, self.d + 1):
            result = result + self.derivative(var).derivative(var)
        return result

    @property
    def is_harmonic(self) -> bool:
        return self.laplacian().is_zero

    def integrate_t(self) -> "MultiPoly":
        """Antiderivative in t vanishing at t = 0."""
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self._terms.items():
            n = exps[0]
            out[(n + 1,) + exps[1:]] = c / (n + 1)
        return MultiPoly(self.d, out)

    # -- substitutions in t --------------------------------------------------

    def shift_t(self, s: Scalar) -> "MultiPoly":
        """Substitute t <- t + s, expanded exactly by the binomial theorem."""
        s = _frac(s)
        if s == 0:
            return self
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self._terms.items():
            n = exps[0]
            rest = exps[1:]
            # (t+s)^n = sum_j C(n,j) s^(n-j) t^j
            for j in range(n + 1):
                e = (j,) + rest
                out[e] = out.get(e, Fraction(0)) + c * math.comb(n, j) * s ** (n - j)
        return MultiPoly(self.d, out)

    def negate_t(self) -> "MultiPoly":
        """Substitute t <- -t (flips the sign of odd-in-t terms)."""
        return MultiPoly(
            self.d, {e: -c if e[0] % 2 else c for e, c in self._terms.items()}
        )

    def parity_split_t(self) -> tuple["MultiPoly", "MultiPoly"]:
        """Split into (even, odd) parts with respect to t at t0 = 0."""
        even = {e: c for e, c in self._terms.items() if e[0] % 2 == 0}
        odd = {e: c for e, c in self._terms.items() if e[0] % 2 == 1}
        return MultiPoly(self.d, even), MultiPoly(self.d, odd)

    def trace(self, t0: Scalar) -> "MultiPoly":
        """Restrict t = t0; the result has zero t-exponent everywhere."""
        t0 = _frac(t0)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self._terms.items():
            e = (0,) + exps[1:]
            out[e] = out.get(e, Fraction(0)) + c * t0 ** exps[0]
        return MultiPoly(self.d, out)

    # -- evaluation ----------------------------------------------------------

    def eval_exact(self, point: Sequence[Scalar]) -> Fraction:
        """Exact evaluation at a rational point of length d+1."""
        if len(point) != self.d + 1:
            raise ValueError(f"point has length {len(point)}, expected {self.d + 1}")
        pt = [_frac(x) for x in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            v = c
            for x, e in zip(pt, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def eval_float(self, point: Sequence[float]) -> float:
        """Float evaluation; convenient for sampling, not authoritative."""
        if len(point) != self.d + 1:
            raise ValueError(f"point has length {len(point)}, expected {self.d + 1}")
        total = 0.0
        for exps, c in self._terms.items():
            v = float(c)
            for x, e in zip(point, exps):
                if e:
                    v *= float(x) ** e
            total += v
        return total

    # -- canonical form and serialization -------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in canonical graded-lexicographic order, leading term first."""
        return sorted(
            self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "terms": [
                {"coeff": str(c), "exps": list(e)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: Mapping) -> "MultiPoly":
        d = obj["d"]
        if not isinstance(d, int):
            raise ValueError(f"'d' must be an integer, got {d!r}")
        terms: dict[tuple[int, ...], Fraction] = {}
        for item in obj["terms"]:
            exps = tuple(item["exps"])
            if not all(isinstance(e, int) for e in exps):
                raise ValueError(f"exponents must be integers: {exps!r}")
            coeff = Fraction(item["coeff"])
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return cls(d, terms)

    # -- display ---------------------------------------------------------------

    def _var_name(self, index: int) -> str:
        return "t" if index == 0 else f"y{index}"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps, c in self.sorted_terms():
            factors = [
                self._var_name(i) if e == 1 else f"{self._var_name(i)}^{e}"
                for i, e in enumerate(exps)
                if e
            ]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"MultiPoly(d={self.d}, {self})"


def variables(d: int) -> tuple[MultiPoly, ...]:
    """The tuple (t, y1, ..., yd) of coordinate polynomials in dimension d."""
    return tuple(MultiPoly.variable(d, i) for i in range(d + 1))
