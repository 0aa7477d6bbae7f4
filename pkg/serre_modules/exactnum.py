"""
Exact rational scalars, q-combinatorics and univariate polynomials.

Scalars are ``fractions.Fraction`` values: always in lowest terms with a
positive denominator, and every arithmetic operation is exact.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InvalidParameter

Scalar = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?[0-9]+)\s*(?:/\s*([0-9]+))?\s*$")

# longest numerator or denominator accepted from text
MAX_DIGITS = 4000


def to_scalar(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidParameter(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if not match:
            raise InvalidParameter(f"not a rational number: {value!r}")
        numerator, denominator = match.groups()
        if max(len(numerator), len(denominator or "")) > MAX_DIGITS:
            raise InvalidParameter(f"numerator or denominator longer than {MAX_DIGITS} digits")
        try:
            numerator, denominator = int(numerator), int(denominator or 1)
        except ValueError as exc:
            raise InvalidParameter(f"cannot read {len(value)} characters as a rational number: {exc}")
        if denominator == 0:
            raise InvalidParameter(f"zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    raise InvalidParameter(f"not a rational number: {value!r}")


def format_scalar(value):
    """Render a Scalar as ``"p/q"``; the sign sits on the numerator."""
    value = to_scalar(value)
    return f"{value.numerator}/{value.denominator}"


def check_q(q):
    """Return q as a Scalar, rejecting 0, 1 and -1."""
    q = to_scalar(q)
    if q == 0 or abs(q) == 1:
        raise InvalidParameter(f"q must satisfy q != 0 and |q| != 1, got {format_scalar(q)}")
    return q


def qbracket(n, q):
    """[n]_q = (q^n - q^-n) / (q - q^-1)."""
    q = check_q(q)
    if n < 0:
        raise InvalidParameter(f"qbracket needs n >= 0, got {n}")
    return (q ** n - q ** -n) / (q - 1 / q)


def qfactorial(n, q):
    """[n]_q [n-1]_q ... [1]_q, with the empty product equal to 1."""
    q = check_q(q)
    if n < 0:
        raise InvalidParameter(f"qfactorial needs n >= 0, got {n}")
    result = Fraction(1)
    for k in range(1, n + 1):
        result *= qbracket(k, q)
    return result


def critical_value(q):
    """The evaluation point q^-1 (q - q^-1)^-2 of the irreducibility criterion."""
    q = check_q(q)
    return 1 / (q * (q - 1 / q) ** 2)


@dataclass(frozen=True)
class Polynomial:
    """
    A univariate polynomial in z over the rationals.

    ``coefficients[i]`` is the coefficient of z^i. Trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple.
    """

    coefficients: tuple = ()

    def __post_init__(self):
        coefficients = [to_scalar(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def geometric(cls, k):
        """1 + z + ... + z^k."""
        return cls((1,) * (k + 1))

    @property
    def degree(self):
        # -1 for the zero polynomial
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def coefficient(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __call__(self, z0):
        return poly_eval(self, z0)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __add__(self, other):
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __sub__(self, other):
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self.coefficient(i) - other.coefficient(i) for i in range(size)))

    def __divmod__(self, divisor):
        if divisor.is_zero():
            raise InvalidParameter("polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - divisor.degree, 0)
        lead = divisor.coefficients[-1]
        for shift in range(len(quotient) - 1, -1, -1):
            factor = remainder[shift + divisor.degree] / lead
            quotient[shift] = factor
            if factor:
                for i, c in enumerate(divisor.coefficients):
                    remainder[shift + i] -= factor * c
        return Polynomial(tuple(quotient)), Polynomial(tuple(remainder))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            monomial = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if monomial and abs(c) == 1:
                text = monomial
            else:
                text = f"{abs(c)}{monomial}"
            terms.append(("-" if c < 0 else "+", text))
        sign, text = terms[0]
        out = ("-" if sign == "-" else "") + text
        for sign, text in terms[1:]:
            out += f" {sign} {text}"
        return out


def poly_eval(p, z0):
    """Horner evaluation of p at z0."""
    z0 = to_scalar(z0)
    result = Fraction(0)
    for c in reversed(p.coefficients):
        result = result * z0 + c
    return result


def poly_mul(p1, p2):
    """Exact convolution product."""
    if p1.is_zero() or p2.is_zero():
        return Polynomial()
    product = [Fraction(0)] * (len(p1.coefficients) + len(p2.coefficients) - 1)
    for i, a in enumerate(p1.coefficients):
        if a == 0:
            continue
        for j, b in enumerate(p2.coefficients):
            product[i + j] += a * b
    return Polynomial(tuple(product))
