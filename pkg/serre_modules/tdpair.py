"""
Tridiagonal pair checks for exact matrix pairs.
"""
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import NamedTuple

from sympy import Matrix as SymMatrix, Poly, Rational, factor_list, symbols

from .exactnum import Polynomial, to_scalar
from .exceptions import DimensionMismatch, InvalidParameter, UnsupportedInput
from .linalg import eigenspace, generated_algebra_dim, hstack

logger = logging.getLogger(__name__)

_z = symbols("z")


@dataclass(frozen=True)
class TdReport:
    axiom_semisimple: tuple
    axiom_tridiag_A: bool
    axiom_tridiag_Astar: bool
    axiom_irreducible: bool
    ordering_A: tuple
    ordering_Astar: tuple
    diameters: tuple
    shape: tuple = None
    q_geometric: bool = None

    @property
    def is_tdpair(self):
        return (
            all(self.axiom_semisimple)
            and self.axiom_tridiag_A
            and self.axiom_tridiag_Astar
            and self.axiom_irreducible
        )

    @property
    def equal_diameters(self):
        return self.diameters[0] == self.diameters[1]

    @property
    def is_leonard(self):
        return self.shape is not None and all(rho == 1 for rho in self.shape)


class QGeometric(NamedTuple):
    q_geometric: bool
    alpha: Fraction = None
    alpha_star: Fraction = None

    def __bool__(self):
        return self.q_geometric


def rational_spectrum(M):
    """
    Distinct eigenvalues of a rational matrix with their algebraic multiplicities.

    The characteristic polynomial is factored over the rationals; an
    irreducible factor of degree above one raises UnsupportedInput.
    """
    if not M.is_square:
        raise DimensionMismatch("spectrum of a non-square matrix")
    sym = SymMatrix(M.rows, M.cols, [Rational(a.numerator, a.denominator) for a in M.flatten()])
    charpoly = sym.charpoly(_z).as_expr()
    _, factors = factor_list(charpoly, _z)
    spectrum = {}
    for factor, multiplicity in factors:
        poly = Poly(factor, _z)
        if poly.degree() != 1:
            raise UnsupportedInput(f"characteristic polynomial has an irreducible factor {factor}")
        c1, c0 = poly.all_coeffs()
        root = -Rational(c0) / Rational(c1)
        spectrum[Fraction(int(root.p), int(root.q))] = multiplicity
    return dict(sorted(spectrum.items()))


def _standard_ordering(X, Y, eigenvalues, spaces):
    """
    Order the eigenspaces of X so that Y acts tridiagonally, if possible.

    Two eigenspaces are neighbours when Y maps one of them into a space with
    a nonzero component in the other. The neighbour graph must be a union of
    paths; components are listed by their smallest endpoint.
    """
    n = X.rows
    k = len(eigenvalues)
    change = hstack([s.basis for s in spaces], rows=n)
    inverse = change.inverse()
    blocks, start = [], 0
    for s in spaces:
        blocks.append(range(start, start + s.dim))
        start += s.dim
    adjacent = {i: set() for i in range(k)}
    for i, space in enumerate(spaces):
        for v in space.vectors():
            coords = inverse.apply(Y.apply(v))
            for j, block in enumerate(blocks):
                if j != i and any(coords[b] for b in block):
                    adjacent[i].add(j)
                    adjacent[j].add(i)
    if any(len(nbrs) > 2 for nbrs in adjacent.values()):
        return None
    order, seen = [], set()
    for start in sorted(range(k), key=lambda i: eigenvalues[i]):
        if start in seen or len(adjacent[start]) == 2:
            continue
        node, previous = start, None
        while node is not None:
            order.append(node)
            seen.add(node)
            following = [j for j in adjacent[node] if j != previous]
            previous, node = node, (following[0] if following else None)
    if len(seen) != k:
        # a cycle
        return None
    return order


def verify_tdpair(A, Astar, q=None):
    if not (A.is_square and Astar.is_square and A.rows == Astar.rows):
        raise DimensionMismatch("A and A* must be square matrices of the same size")
    n = A.rows
    orderings, tridiagonal, semisimple, diameters, dims = [], [], [], [], []
    for X, Y in ((A, Astar), (Astar, A)):
        eigenvalues = list(rational_spectrum(X))
        spaces = [eigenspace(X, theta) for theta in eigenvalues]
        diameters.append(len(eigenvalues) - 1)
        is_semisimple = sum(s.dim for s in spaces) == n
        semisimple.append(is_semisimple)
        order = _standard_ordering(X, Y, eigenvalues, spaces) if is_semisimple else None
        tridiagonal.append(order is not None)
        orderings.append(tuple(eigenvalues[i] for i in order) if order is not None else ())
        dims.append(tuple(spaces[i].dim for i in order) if order is not None else ())
    irreducible = generated_algebra_dim([A, Astar]) == n * n
    report = TdReport(
        axiom_semisimple=tuple(semisimple),
        axiom_tridiag_A=tridiagonal[0],
        axiom_tridiag_Astar=tridiagonal[1],
        axiom_irreducible=irreducible,
        ordering_A=orderings[0],
        ordering_Astar=orderings[1],
        diameters=tuple(diameters),
    )
    shape = dims[0] if report.is_tdpair else None
    geometric = None
    if q is not None and report.is_tdpair:
        geometric = is_q_geometric(report, q).q_geometric
    report = replace(report, shape=shape, q_geometric=geometric)
    logger.debug("tridiagonal pair check: %s", report)
    return report


def _q_string_alpha(ordering, q):
    d = len(ordering) - 1
    for candidate in (tuple(ordering), tuple(reversed(ordering))):
        if all(candidate[i] == candidate[i + 1] * q ** 2 for i in range(d)):
            return candidate[0] / q ** d
    return None


def is_q_geometric(report, q):
    """Both standard orderings are q-strings alpha q^(d-2i); returns the type (alpha, alpha*)."""
    q = to_scalar(q)
    if not report.ordering_A or not report.ordering_Astar:
        return QGeometric(False)
    alpha = _q_string_alpha(report.ordering_A, q)
    alpha_star = _q_string_alpha(report.ordering_Astar, q)
    if alpha is None or alpha_star is None:
        return QGeometric(False)
    return QGeometric(True, alpha, alpha_star)


def normalize_type(A, Astar, alpha, alpha_star):
    """Rescale a pair of type (alpha, alpha*) to type (1, 1)."""
    alpha, alpha_star = to_scalar(alpha), to_scalar(alpha_star)
    if alpha == 0 or alpha_star == 0:
        raise InvalidParameter("type scalars must be nonzero")
    return A / alpha, Astar / alpha_star


def shape_factorization(shape):
    """
    Diameters d_1 >= d_2 >= ... with sum rho_i z^i = prod (1 + z + ... + z^d_j),
    or None when no such factorization exists.
    """
    shape = list(shape)
    if not shape or shape[0] != 1:
        raise InvalidParameter(f"shape must be nonempty with rho_0 = 1, got {shape}")

    def search(poly, largest):
        if poly == Polynomial.one():
            return []
        for k in range(min(largest, poly.degree), 0, -1):
            quotient, remainder = divmod(poly, Polynomial.geometric(k))
            if remainder.is_zero():
                rest = search(quotient, k)
                if rest is not None:
                    return [k] + rest
        return None

    target = Polynomial(tuple(shape))
    return search(target, target.degree)
