"""
Drinfel'd polynomials of type (1,1) modules and the A_q irreducibility criterion.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import PreconditionError, TheoremViolation, WrongType
from .exactnum import Polynomial, critical_value, qfactorial
from .uqrep import ModuleSpec, is_uq_irreducible, spec_reducibility_reason, weight_decomposition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DrinfeldData:
    sigma: tuple
    poly: Polynomial
    critical_value: Fraction
    critical_eval: Fraction

    @property
    def predicted_aq_irreducible(self):
        return self.critical_eval != 0


def _lowest_weight_vector(rep, weights):
    if weights.type != (1, 1):
        raise WrongType(f"module has type {weights.type}, expected (1, 1)")
    if weights.spaces[0].dim != 1:
        raise TheoremViolation(f"U_0 has dimension {weights.spaces[0].dim}, expected 1")
    return weights.spaces[0].vectors()[0]


def sigma(rep, i, weights=None):
    """The eigenvalue of (e1^+)^i (e0^+)^i on U_0; zero beyond the diameter."""
    weights = weights or weight_decomposition(rep)
    u = _lowest_weight_vector(rep, weights)
    if i > weights.diameter:
        return Fraction(0)
    w = u
    for _ in range(i):
        w = rep["e0p"].apply(w)
    for _ in range(i):
        w = rep["e1p"].apply(w)
    pivot = next(k for k, x in enumerate(u) if x)
    value = w[pivot] / u[pivot]
    if w != tuple(value * x for x in u):
        raise TheoremViolation(f"U_0 is not an eigenspace of (e1^+)^{i} (e0^+)^{i}")
    return value


def drinfeld_poly(rep, weights=None):
    """P_V = sum_i (-1)^i sigma_i q^i z^i / ([i]!)^2, computed from the sigma_i."""
    weights = weights or weight_decomposition(rep)
    q = rep.q
    coefficients = []
    for i in range(weights.diameter + 1):
        coefficients.append((-1) ** i * sigma(rep, i, weights) * q ** i / qfactorial(i, q) ** 2)
    return Polynomial(tuple(coefficients))


def evaluation_poly(d, a, q):
    """(1 - q^(d-1) a z)(1 - q^(d-3) a z) ... (1 - q^(1-d) a z)."""
    result = Polynomial.one()
    for k in range(d):
        result = result * Polynomial((1, -(q ** (d - 1 - 2 * k)) * a))
    return result


def drinfeld_poly_spec(spec):
    result = Polynomial.one()
    for f in spec.factors:
        result = result * evaluation_poly(f.d, f.a, spec.q)
    return result


def criterion(rep_or_spec):
    """
    Evaluate P_V at q^-1 (q - q^-1)^-2.

    Returns (value, predicted) where predicted is True when the value is
    nonzero, i.e. when the module should be irreducible over A_q.
    """
    if isinstance(rep_or_spec, ModuleSpec):
        reason = spec_reducibility_reason(rep_or_spec)
        if reason is not None:
            raise PreconditionError(reason)
        poly = drinfeld_poly_spec(rep_or_spec)
    else:
        if not is_uq_irreducible(rep_or_spec):
            raise PreconditionError("module is reducible over U_q(affine sl2)")
        poly = drinfeld_poly(rep_or_spec)
    value = poly(critical_value(rep_or_spec.q))
    logger.debug("criterion value %s for P_V = %s", value, poly)
    return value, value != 0


def drinfeld_data(rep, weights=None):
    weights = weights or weight_decomposition(rep)
    sigmas = tuple(sigma(rep, i, weights) for i in range(weights.diameter + 1))
    poly = drinfeld_poly(rep, weights)
    c = critical_value(rep.q)
    return DrinfeldData(sigmas, poly, c, poly(c))
