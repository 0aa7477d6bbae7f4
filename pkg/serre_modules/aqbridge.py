"""
The A_q side of a type (1,1) module.

A = e0^+ + K0 and A* = e1^+ + K1 satisfy the cubic q-Serre relations. This
module computes their eigenspaces and spectral projections, checks the
projection identity that links E*_0 E_0 to the Drinfel'd polynomial, decides
irreducibility over A_q both by criterion and by the Burnside oracle, and
rebuilds the equitable operators K, B, B*, R, L, r, l.
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .drinfeld import criterion, drinfeld_poly
from .exactnum import critical_value
from .exceptions import (
    ConsistencyFailure,
    InvalidParameter,
    PreconditionError,
    SemisimplicityViolation,
    TheoremViolation,
    WrongType,
)
from .linalg import (
    Matrix,
    Subspace,
    block_operator,
    eigenspace,
    generated_algebra_dim,
    image,
    is_direct_sum,
    is_invariant,
    subspace_intersection,
    subspace_sum,
)
from .uqrep import (
    RelationReport,
    borel_irreducible,
    is_uq_irreducible,
    serre_expression,
    spec_reducibility_reason,
    weight_decomposition,
)

logger = logging.getLogger(__name__)

PROJECTOR_KINDS = ("E", "Estar", "F")


@dataclass(frozen=True)
class AqPair:
    q: Fraction
    dim: int
    A: Matrix
    Astar: Matrix
    diameter: int
    eig_A: tuple
    eig_Astar: tuple
    rep: object = field(default=None, compare=False, repr=False)
    weights: object = field(default=None, compare=False, repr=False)

    def theta(self, i):
        return self.q ** (2 * i - self.diameter)

    def theta_star(self, i):
        return self.q ** (self.diameter - 2 * i)


@dataclass(frozen=True)
class EquitableSet:
    K: Matrix
    B: Matrix
    Bstar: Matrix
    R: Matrix
    L: Matrix
    r: Matrix
    l: Matrix
    decomps: dict
    report: RelationReport = None


@dataclass(frozen=True)
class IrreducibilityVerdict:
    criterion_value: Fraction
    criterion_verdict: bool
    oracle_algebra_dim: int
    oracle_verdict: bool
    witness: Subspace = None


class EepCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    holds: bool


def _reducible_reason(rep):
    if rep.spec is not None:
        return spec_reducibility_reason(rep.spec)
    return "module is reducible over U_q(affine sl2)"


def build_aq_pair(rep, weights=None):
    weights = weights or weight_decomposition(rep)
    if weights.type != (1, 1):
        raise WrongType(f"module has type {weights.type}, expected (1, 1)")
    if not is_uq_irreducible(rep):
        raise PreconditionError(_reducible_reason(rep))
    q, d, n = rep.q, weights.diameter, rep.dim
    A = rep["e0p"] + rep["K0"]
    Astar = rep["e1p"] + rep["K1"]
    eig_A = tuple(eigenspace(A, q ** (2 * i - d)) for i in range(d + 1))
    eig_Astar = tuple(eigenspace(Astar, q ** (d - 2 * i)) for i in range(d + 1))
    for name, spaces in (("A", eig_A), ("A*", eig_Astar)):
        total = sum(s.dim for s in spaces)
        if total != n:
            raise SemisimplicityViolation(
                f"{name} eigenspaces at the prescribed eigenvalues have total dimension {total}, expected {n}"
            )
    logger.debug("built A_q pair of dimension %d, diameter %d", n, d)
    return AqPair(q, n, A, Astar, d, eig_A, eig_Astar, rep=rep, weights=weights)


def check_qserre(A, Astar, q):
    return RelationReport.from_residuals({
        "qserre_A_Astar": serre_expression(A, Astar, q),
        "qserre_Astar_A": serre_expression(Astar, A, q),
    })


def _check_index(pair, i):
    if not 0 <= i <= pair.diameter:
        raise InvalidParameter(f"index {i} outside 0..{pair.diameter}")


def projector(pair, kind, i):
    """Spectral projection onto V_i (E), V*_i (Estar) or the weight space U_i (F)."""
    _check_index(pair, i)
    d, n = pair.diameter, pair.dim
    if kind == "F":
        weights = pair.weights or weight_decomposition(pair.rep)
        return block_operator(weights.spaces, [int(j == i) for j in range(d + 1)])
    if kind == "E":
        X, theta = pair.A, pair.theta
    elif kind == "Estar":
        X, theta = pair.Astar, pair.theta_star
    else:
        raise InvalidParameter(f"unknown projector kind {kind!r}")
    identity = Matrix.identity(n)
    result = identity
    for j in range(d + 1):
        if j != i:
            result = result @ (X - identity * theta(j)) / (theta(i) - theta(j))
    return result


def projector_sum_form(pair, kind, i, j):
    """
    The action of E_i (or E*_i) on U_j written as a weighted sum of powers
    of e0^+ (or e1^+).

    The result is returned as an operator on the whole space that agrees with
    the projection on U_j and vanishes on the other weight spaces, so it can
    be compared with ``projector(pair, kind, i) @ projector(pair, "F", j)``.
    """
    _check_index(pair, i)
    _check_index(pair, j)
    d, n = pair.diameter, pair.dim
    f_j = projector(pair, "F", j)
    rep = pair.rep
    total = Matrix.zeros(n)
    if kind == "E":
        if i < j:
            return total
        theta = pair.theta
        e = rep["e0p"]
        scale = Fraction(1)
        for k in range(j, i):
            scale /= theta(i) - theta(k)
        for h in range(d - i + 1):
            weight = Fraction(1)
            for m in range(1, h + 1):
                weight /= theta(i) - theta(i + m)
            total = total + e.power(i - j + h) * weight
    elif kind == "Estar":
        if i > j:
            return total
        theta = pair.theta_star
        e = rep["e1p"]
        scale = Fraction(1)
        for k in range(i + 1, j + 1):
            scale /= theta(i) - theta(k)
        for h in range(i + 1):
            weight = Fraction(1)
            for m in range(1, h + 1):
                weight /= theta(i) - theta(i - m)
            total = total + e.power(j - i + h) * weight
    else:
        raise InvalidParameter(f"sum form exists only for E and Estar, got {kind!r}")
    return total @ f_j * scale


def _lowest_vector(pair):
    weights = pair.weights or weight_decomposition(pair.rep)
    return weights.spaces[0].vectors()[0]


def verify_eep(rep, pair=None):
    """Compare the U_0 eigenvalue of E*_0 E_0 with P_V(q^-1 (q - q^-1)^-2)."""
    pair = pair or build_aq_pair(rep)
    u = _lowest_vector(pair)
    w = (projector(pair, "Estar", 0) @ projector(pair, "E", 0)).apply(u)
    pivot = next(k for k, x in enumerate(u) if x)
    lhs = w[pivot] / u[pivot]
    if w != tuple(lhs * x for x in u):
        raise TheoremViolation("E*_0 E_0 does not preserve U_0")
    rhs = drinfeld_poly(rep, pair.weights)(critical_value(rep.q))
    return EepCheck(lhs, rhs, lhs == rhs)


def witness_submodule(pair):
    """
    W = sum over i < d of (V_0 + ... + V_i) meet (V*_{i+1} + ... + V*_d).

    Nonzero and proper exactly when the module is reducible over A_q.
    """
    n, d = pair.dim, pair.diameter
    pieces = [Subspace.zero(n)]
    for i in range(d):
        lower = subspace_sum(*pair.eig_A[: i + 1])
        upper = subspace_sum(*pair.eig_Astar[i + 1:])
        pieces.append(subspace_intersection(lower, upper))
    return subspace_sum(*pieces)


def aq_irreducibility(rep, pair=None):
    pair = pair or build_aq_pair(rep)
    value, predicted = criterion(rep)
    oracle_dim = generated_algebra_dim([pair.A, pair.Astar])
    oracle = oracle_dim == pair.dim ** 2
    if predicted != oracle:
        logger.error("criterion value %s disagrees with oracle dimension %d", value, oracle_dim)
        raise ConsistencyFailure(
            f"criterion predicts irreducible={predicted} but the generated algebra has dimension {oracle_dim}"
        )
    witness = None
    if not predicted:
        witness = witness_submodule(pair)
        if not 0 < witness.dim < pair.dim:
            raise TheoremViolation(f"witness has dimension {witness.dim} in a module of dimension {pair.dim}")
        if not (is_invariant(pair.A, witness) and is_invariant(pair.Astar, witness)):
            raise TheoremViolation("witness is not invariant under A and A*")
        logger.info("reducible over A_q; witness of dimension %d", witness.dim)
    return IrreducibilityVerdict(value, predicted, oracle_dim, oracle, witness)


def _q_commutator(X, Y, q):
    return (X @ Y * q - Y @ X / q) / (q - 1 / q)


def check_equitable_relations(eq, pair):
    q, n = pair.q, pair.dim
    A, Astar = pair.A, pair.Astar
    K, B, Bstar, R, L, r, l = eq.K, eq.B, eq.Bstar, eq.R, eq.L, eq.r, eq.l
    Kinv = K.inverse()
    identity = Matrix.identity(n)
    residuals = {
        "qAB": _q_commutator(A, B, q) - identity,
        "qBAstar": _q_commutator(B, Astar, q) - identity,
        "qAstarBstar": _q_commutator(Astar, Bstar, q) - identity,
        "qBstarA": _q_commutator(Bstar, A, q) - identity,
        "qKinvA": _q_commutator(Kinv, A, q) - identity,
        "qBKinv": _q_commutator(B, Kinv, q) - identity,
        "qKAstar": _q_commutator(K, Astar, q) - identity,
        "qBstarK": _q_commutator(Bstar, K, q) - identity,
        "K_R": K @ R @ Kinv - R * q ** 2,
        "K_L": K @ L @ Kinv - L * q ** -2,
        "K_r": K @ r @ Kinv - r * q ** 2,
        "K_l": K @ l @ Kinv - l * q ** -2,
        "r_L_commutator": r @ L - L @ r - (K - Kinv) / (q - 1 / q),
        "l_R_commutator": l @ R - R @ l - (Kinv - K) / (q - 1 / q),
        "l_L_commute": l @ L - L @ l,
        "r_R_commute": r @ R - R @ r,
        "serre_R_L": serre_expression(R, L, q),
        "serre_L_R": serre_expression(L, R, q),
        "serre_r_l": serre_expression(r, l, q),
        "serre_l_r": serre_expression(l, r, q),
        "serre_A_Astar": serre_expression(A, Astar, q),
        "serre_Astar_A": serre_expression(Astar, A, q),
        "serre_B_Bstar": serre_expression(B, Bstar, q),
        "serre_Bstar_B": serre_expression(Bstar, B, q),
    }
    return RelationReport.from_residuals(residuals)


def equitable_operators(rep, pair=None):
    """Build K, B, B* from the three intersection decompositions and derive R, L, r, l."""
    pair = pair or build_aq_pair(rep)
    q, d, n = pair.q, pair.diameter, pair.dim
    V, Vs = pair.eig_A, pair.eig_Astar
    decomps = {
        "U": tuple(subspace_intersection(subspace_sum(*Vs[: i + 1]), subspace_sum(*V[i:])) for i in range(d + 1)),
        "W": tuple(subspace_intersection(subspace_sum(*Vs[: i + 1]), subspace_sum(*V[: d - i + 1])) for i in range(d + 1)),
        "Wstar": tuple(subspace_intersection(subspace_sum(*Vs[d - i:]), subspace_sum(*V[i:])) for i in range(d + 1)),
    }
    for name, spaces in decomps.items():
        if not is_direct_sum(spaces, n):
            raise TheoremViolation(f"the {name} intersections do not decompose the module")
    K = block_operator(decomps["U"], [q ** (2 * i - d) for i in range(d + 1)])
    B = block_operator(decomps["W"], [q ** (2 * i - d) for i in range(d + 1)])
    Bstar = block_operator(decomps["Wstar"], [q ** (d - 2 * i) for i in range(d + 1)])
    Kinv = K.inverse()
    identity = Matrix.identity(n)
    scale = q * (q - 1 / q) ** 2
    eq = EquitableSet(
        K=K,
        B=B,
        Bstar=Bstar,
        R=pair.A - K,
        L=pair.Astar - Kinv,
        r=(identity - K @ Bstar) / scale,
        l=(identity - Kinv @ B) / scale,
        decomps=decomps,
    )
    report = check_equitable_relations(eq, pair)
    if not report.all_hold:
        raise TheoremViolation(f"equitable relations fail: {[c.name for c in report.failures()]}")
    return replace(eq, report=report)


def eigenstructure_checks(pair):
    """Named booleans for how A and A* interact with the weight spaces."""
    rep = pair.rep
    weights = pair.weights or weight_decomposition(rep)
    U = weights.spaces
    V, Vs = pair.eig_A, pair.eig_Astar
    d, n = pair.diameter, pair.dim
    identity = Matrix.identity(n)

    def at(spaces, i):
        return spaces[i] if 0 <= i <= d else Subspace.zero(n)

    def agree_on(X, Y, space):
        return all(X.apply(v) == Y.apply(v) for v in space.vectors())

    def neighbours(spaces, i):
        return subspace_sum(at(spaces, i - 1), at(spaces, i), at(spaces, i + 1))

    checks = {}
    checks["e0p_raises"] = all(
        agree_on(rep["e0p"], pair.A - identity * pair.theta(i), U[i])
        and at(U, i + 1).contains(image(pair.A - identity * pair.theta(i), U[i]))
        for i in range(d + 1)
    )
    checks["e1p_lowers"] = all(
        agree_on(rep["e1p"], pair.Astar - identity * pair.theta_star(i), U[i])
        and at(U, i - 1).contains(image(pair.Astar - identity * pair.theta_star(i), U[i]))
        for i in range(d + 1)
    )
    checks["flag_A"] = all(subspace_sum(*V[i:]) == subspace_sum(*U[i:]) for i in range(d + 1))
    checks["flag_Astar"] = all(subspace_sum(*Vs[: i + 1]) == subspace_sum(*U[: i + 1]) for i in range(d + 1))
    checks["tridiagonal_Astar"] = all(neighbours(V, i).contains(image(pair.Astar, V[i])) for i in range(d + 1))
    checks["tridiagonal_A"] = all(neighbours(Vs, i).contains(image(pair.A, Vs[i])) for i in range(d + 1))

    u = U[0].vectors()[0]
    line = Subspace.span([u], n)
    highest = not any(rep["e1p"].apply(u))
    for i in range(d + 1):
        w = (rep["e1p"].power(i) @ rep["e0p"].power(i)).apply(u)
        highest = highest and line.contains_vector(w)
    checks["lowest_weight_vector"] = highest

    def inverse_pair(kind, targets):
        for i in range(d + 1):
            f_i, p_i = projector(pair, "F", i), projector(pair, kind, i)
            if not agree_on(f_i @ p_i, identity, U[i]):
                return False
            if not agree_on(p_i @ f_i, identity, targets[i]):
                return False
        return True

    checks["bijection_E"] = inverse_pair("E", V)
    checks["bijection_Estar"] = inverse_pair("Estar", Vs)
    checks["borel_irreducible"] = borel_irreducible(rep)
    return checks


def serre_locality(A, Astar, q, eigenvalues):
    """
    For each eigenvalue theta of A: (does the q-Serre expression vanish on
    V_A(theta), is A* V_A(theta) inside V_A(q^2 theta) + V_A(theta) + V_A(q^-2 theta)).

    For semisimple A the two answers coincide.
    """
    expression = serre_expression(A, Astar, q)
    rows = []
    for theta in eigenvalues:
        space = eigenspace(A, theta)
        vanishes = all(not any(expression.apply(v)) for v in space.vectors())
        band = subspace_sum(eigenspace(A, q ** 2 * theta), space, eigenspace(A, q ** -2 * theta))
        rows.append((theta, vanishes, band.contains(image(Astar, space))))
    return rows


def zigzag_span(pair):
    """
    Span of (e1^+)^i1 (e0^+)^i2 (e1^+)^i3 ... (e0^+)^in u over even-length
    sequences 0 <= i1 < i2 < ... < in <= d, with u spanning U_0.
    """
    rep = pair.rep
    d, n = pair.diameter, pair.dim
    u = _lowest_vector(pair)
    vectors = [u]
    for length in range(2, d + 2, 2):
        for exponents in combinations(range(d + 1), length):
            w = u
            for position in range(length - 1, -1, -1):
                generator = rep["e0p"] if position % 2 else rep["e1p"]
                w = generator.power(exponents[position]).apply(w)
            vectors.append(w)
    return Subspace.span(vectors, n)
