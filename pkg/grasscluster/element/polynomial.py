# --------------------------------------------------
# Integer polynomials in q and cyclotomic integers Z[q]/Φ_n(q).
#
# Both wrap sympy's Poly over ZZ so all arithmetic and division stays exact.
# Coefficient lists are ascending by degree everywhere in this package.
# --------------------------------------------------

import cmath
import logging
from functools import lru_cache

from sympy import ZZ, Poly, divisors, symbols, totient

from grasscluster.element.element import Element
from grasscluster.errors import InputFormatError, InternalConsistencyError, ParameterError

logger = logging.getLogger(__name__)

q = symbols("q")


class IntPolynomial(Element):
    """An element of Z[q]; coefficients are trimmed of trailing zeros."""

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.poly = Poly(list(reversed(coeffs)) or [0], q, domain=ZZ)

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPolynomial":
        return cls(reversed([int(c) for c in poly.all_coeffs()]))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def coefficients(self) -> list:
        if self.poly.is_zero:
            return []
        return [int(c) for c in reversed(self.poly.all_coeffs())]

    @property
    def degree(self) -> int:
        return -1 if self.poly.is_zero else int(self.poly.degree())

    def __add__(self, other):
        return IntPolynomial.from_poly(self.poly + _as_poly(other))

    __radd__ = __add__

    def __sub__(self, other):
        return IntPolynomial.from_poly(self.poly - _as_poly(other))

    def __neg__(self):
        return IntPolynomial.from_poly(-self.poly)

    def __mul__(self, other):
        return IntPolynomial.from_poly(self.poly * _as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return IntPolynomial.from_poly(self.poly ** k)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient by other; a nonzero remainder is an internal error."""
        quotient, remainder = self.poly.div(_as_poly(other))
        if not remainder.is_zero:
            raise InternalConsistencyError(f"Division by {other} is not exact.")
        return IntPolynomial.from_poly(quotient)

    def rem(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.poly.rem(_as_poly(other)))

    def __call__(self, x):
        return self.poly.eval(x)

    def at_one(self) -> int:
        return sum(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = "q" if k == 1 else f"q^{k}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms) if terms else "0"

    def to_json(self):
        return self.coefficients

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
            raise InputFormatError("A polynomial is a list of integer coefficients.")
        return cls(data)


def _as_poly(other) -> Poly:
    if isinstance(other, IntPolynomial):
        return other.poly
    if isinstance(other, int):
        return Poly(other, q, domain=ZZ)
    raise TypeError(f"Cannot combine IntPolynomial with {type(other).__name__}")


def quantum_integer(m: int) -> IntPolynomial:
    """[m]_q = 1 + q + ... + q^{m-1}."""
    if m < 0:
        raise ParameterError(f"[m]_q needs m >= 0, got {m}.")
    return IntPolynomial([1] * m)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPolynomial:
    """Φ_n, by dividing q^n − 1 by Φ_d for every proper divisor d of n."""
    if n < 1:
        raise ParameterError(f"Φ_n needs n >= 1, got {n}.")
    result = IntPolynomial.monomial(n) - 1
    for d in divisors(n):
        if d < n:
            result = result.exact_div(cyclotomic_poly(d))
    return result


class CyclotomicInt(Element):
    """
    An element of Z[q]/Φ_n(q), i.e. an integer combination of powers of ζ = e^{2πi/n}.

    Stored reduced: degree < φ(n).
    """

    def __init__(self, n: int, coeffs=()):
        if n < 1:
            raise ParameterError(f"Root order must be >= 1, got {n}.")
        self.n = n
        poly = IntPolynomial(coeffs)
        if poly.degree >= int(totient(n)):
            poly = poly.rem(cyclotomic_poly(n))
        self.value = poly

    @classmethod
    def from_integer(cls, n: int, m: int) -> "CyclotomicInt":
        return cls(n, [m])

    @property
    def coeffs(self) -> list:
        return self.value.coefficients

    def _check(self, other):
        if isinstance(other, int):
            return CyclotomicInt.from_integer(self.n, other)
        if not isinstance(other, CyclotomicInt) or other.n != self.n:
            raise ParameterError("Cyclotomic integers of different orders do not combine.")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CyclotomicInt(self.n, (self.value + other.value).coefficients)

    def __sub__(self, other):
        other = self._check(other)
        return CyclotomicInt(self.n, (self.value - other.value).coefficients)

    def __mul__(self, other):
        other = self._check(other)
        return CyclotomicInt(self.n, (self.value * other.value).coefficients)

    def is_integer(self) -> bool:
        return len(self.coeffs) <= 1

    def as_integer(self):
        """The rational integer this equals, or None."""
        if not self.is_integer():
            return None
        return self.coeffs[0] if self.coeffs else 0

    def to_complex(self) -> complex:
        zeta = cmath.exp(2j * cmath.pi / self.n)
        return sum(c * zeta ** k for k, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_integer(self.n, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, tuple(self.coeffs)))

    def __repr__(self):
        return f"CyclotomicInt(n={self.n}, {self.value!r})"

    def __str__(self):
        m = self.as_integer()
        return str(m) if m is not None else f"{self.value!r} (q=ζ_{self.n})"

    def to_json(self):
        return {"n": self.n, "coeffs": self.coeffs}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["n"]), data["coeffs"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"Malformed cyclotomic integer: {exc}")
