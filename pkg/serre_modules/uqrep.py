"""
Finite-dimensional U_q(affine sl2)-modules given by Chevalley generator matrices.

Evaluation modules, the trivial module, tensor products and sign twists are
built here, together with the relation checker and the weight-space
decomposition every later stage relies on.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import DimensionMismatch, InvalidParameter, NotAWeightModule
from .exactnum import Polynomial, check_q, format_scalar, qbracket, to_scalar
from .linalg import (
    Matrix,
    eigenspace,
    generated_algebra_dim,
    image,
    is_direct_sum,
    Subspace,
)

logger = logging.getLogger(__name__)

GENERATORS = ("e0p", "e0m", "e1p", "e1m", "K0", "K1")


@dataclass(frozen=True)
class Factor:
    d: int
    a: Fraction

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 1:
            raise InvalidParameter(f"evaluation module diameter must be a positive integer, got {self.d!r}")
        a = to_scalar(self.a)
        if a == 0:
            raise InvalidParameter("evaluation parameter a must be nonzero")
        object.__setattr__(self, "a", a)


@dataclass(frozen=True)
class ModuleSpec:
    """A tensor product of evaluation modules; no factors means the trivial module."""

    q: Fraction
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "q", check_q(self.q))
        factors = tuple(f if isinstance(f, Factor) else Factor(*f) for f in self.factors)
        object.__setattr__(self, "factors", factors)

    @property
    def dim(self):
        result = 1
        for f in self.factors:
            result *= f.d + 1
        return result

    @property
    def diameters(self):
        return [f.d for f in self.factors]

    def concat(self, other):
        if self.q != other.q:
            raise DimensionMismatch("cannot combine specs with different q")
        return ModuleSpec(self.q, self.factors + other.factors)

    def __str__(self):
        parts = ", ".join(f"({f.d}, {format_scalar(f.a)})" for f in self.factors)
        return f"q={format_scalar(self.q)} [{parts}]"


@dataclass(frozen=True)
class UqRep:
    """
    Generator matrices of a U_q(affine sl2)-module.

    ``mats`` maps each name in GENERATORS to a dim x dim Matrix. The inverses
    of K0 and K1 are computed once on construction and exposed as
    ``rep["K0inv"]`` and ``rep["K1inv"]``. ``spec`` records the evaluation
    module factorization when the rep was built from one.
    """

    q: Fraction
    dim: int
    mats: dict
    spec: ModuleSpec = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", check_q(self.q))
        missing = set(GENERATORS) - set(self.mats)
        if missing:
            raise InvalidParameter(f"missing generator matrices: {sorted(missing)}")
        for name in GENERATORS:
            m = self.mats[name]
            if (m.rows, m.cols) != (self.dim, self.dim):
                raise DimensionMismatch(f"{name} is {m.rows}x{m.cols}, expected {self.dim}x{self.dim}")
        mats = {name: self.mats[name] for name in GENERATORS}
        mats["K0inv"] = mats["K0"].inverse()
        mats["K1inv"] = mats["K1"].inverse()
        object.__setattr__(self, "mats", mats)

    def __getitem__(self, name):
        return self.mats[name]

    def replace(self, **changes):
        """A copy with some generator matrices swapped out; provenance is dropped."""
        mats = {name: changes.get(name, self.mats[name]) for name in GENERATORS}
        return UqRep(self.q, self.dim, mats)


@dataclass(frozen=True)
class RelationCheck:
    name: str
    holds: bool
    witness_entry: tuple = None


@dataclass(frozen=True)
class RelationReport:
    """Per-relation exact-zero status; failed checks carry (row, col, value) of the worst entry."""

    checks: tuple

    @classmethod
    def from_residuals(cls, residuals):
        checks = []
        for name, residual in residuals.items():
            entry = residual.max_entry()
            checks.append(RelationCheck(name, entry is None, entry))
        report = cls(tuple(checks))
        for check in report.failures():
            logger.warning("relation %s fails at %s", check.name, check.witness_entry)
        return report

    @property
    def all_hold(self):
        return all(c.holds for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.holds]

    def names(self):
        return [c.name for c in self.checks]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class WeightData:
    type: tuple
    diameter: int
    spaces: tuple

    @property
    def dims(self):
        return [s.dim for s in self.spaces]


def _zero_or(rows, entries):
    m = [[Fraction(0)] * rows for _ in range(rows)]
    for (i, j), value in entries.items():
        m[i][j] = value
    return Matrix.from_rows(m)


def evaluation_module(d, a, q):
    """The (d+1)-dimensional evaluation module V(d, a) in the basis v_0, ..., v_d."""
    factor = Factor(d, a)
    q = check_q(q)
    d, a = factor.d, factor.a
    n = d + 1
    e0p = _zero_or(n, {(i + 1, i): a / q * qbracket(i + 1, q) for i in range(d)})
    e0m = _zero_or(n, {(i - 1, i): q / a * qbracket(d - i + 1, q) for i in range(1, n)})
    e1p = _zero_or(n, {(i - 1, i): qbracket(d - i + 1, q) for i in range(1, n)})
    e1m = _zero_or(n, {(i + 1, i): qbracket(i + 1, q) for i in range(d)})
    k0 = Matrix.diagonal([q ** (2 * i - d) for i in range(n)])
    k1 = Matrix.diagonal([q ** (d - 2 * i) for i in range(n)])
    logger.debug("built evaluation module V(%d, %s) at q=%s", d, a, q)
    mats = {"e0p": e0p, "e0m": e0m, "e1p": e1p, "e1m": e1m, "K0": k0, "K1": k1}
    return UqRep(q, n, mats, spec=ModuleSpec(q, (factor,)))


def trivial_module(q):
    q = check_q(q)
    zero = Matrix.zeros(1)
    one = Matrix.identity(1)
    mats = {"e0p": zero, "e0m": zero, "e1p": zero, "e1m": zero, "K0": one, "K1": one}
    return UqRep(q, 1, mats, spec=ModuleSpec(q, ()))


def tensor(V, W):
    """
    V tensor W with basis v_r (x) w_s ordered r major, s minor.

    e_i^+ acts as e_i^+ (x) K_i + 1 (x) e_i^+, e_i^- as e_i^- (x) 1 + K_i^-1 (x) e_i^-
    and K_i as K_i (x) K_i.
    """
    if V.q != W.q:
        raise DimensionMismatch(f"q mismatch: {format_scalar(V.q)} vs {format_scalar(W.q)}")
    id_v = Matrix.identity(V.dim)
    id_w = Matrix.identity(W.dim)
    mats = {}
    for i in ("0", "1"):
        k = f"K{i}"
        mats[f"e{i}p"] = V[f"e{i}p"].kron(W[k]) + id_v.kron(W[f"e{i}p"])
        mats[f"e{i}m"] = V[f"e{i}m"].kron(id_w) + V[f"{k}inv"].kron(W[f"e{i}m"])
        mats[k] = V[k].kron(W[k])
    spec = V.spec.concat(W.spec) if V.spec is not None and W.spec is not None else None
    return UqRep(V.q, V.dim * W.dim, mats, spec=spec)


def from_spec(spec):
    rep = trivial_module(spec.q)
    if spec.factors:
        first, *rest = spec.factors
        rep = evaluation_module(first.d, first.a, spec.q)
        for f in rest:
            rep = tensor(rep, evaluation_module(f.d, f.a, spec.q))
    logger.debug("built module %s of dimension %d", spec, rep.dim)
    return rep


def twist(rep, eps0, eps1):
    """Apply the sign automorphism K_i -> eps_i K_i, e_i^+ -> eps_i e_i^+."""
    signs = {"0": eps0, "1": eps1}
    if any(s not in (1, -1) for s in signs.values()):
        raise InvalidParameter(f"twist signs must be +1 or -1, got ({eps0}, {eps1})")
    mats = {}
    for i, s in signs.items():
        mats[f"K{i}"] = rep[f"K{i}"] * s
        mats[f"e{i}p"] = rep[f"e{i}p"] * s
        mats[f"e{i}m"] = rep[f"e{i}m"]
    return UqRep(rep.q, rep.dim, mats)


def serre_expression(x, y, q):
    """x^3 y - [3] x^2 y x + [3] x y x^2 - y x^3."""
    b3 = qbracket(3, q)
    x2 = x @ x
    x3 = x2 @ x
    return x3 @ y - (x2 @ y @ x) * b3 + (x @ y @ x2) * b3 - y @ x3


def check_chevalley_relations(rep):
    q = rep.q
    n = rep.dim
    identity = Matrix.identity(n)
    residuals = {}
    for i in ("0", "1"):
        k, kinv = rep[f"K{i}"], rep[f"K{i}inv"]
        residuals[f"K{i}_inverse"] = k @ kinv - identity
    residuals["K0_K1_commute"] = rep["K0"] @ rep["K1"] - rep["K1"] @ rep["K0"]
    for i in ("0", "1"):
        k, kinv = rep[f"K{i}"], rep[f"K{i}inv"]
        for j in ("0", "1"):
            same = i == j
            for sign, letter in ((1, "p"), (-1, "m")):
                e = rep[f"e{j}{letter}"]
                power = 2 * sign if same else -2 * sign
                residuals[f"K{i}_e{j}{letter}"] = k @ e @ kinv - e * q ** power
    for i in ("0", "1"):
        ep, em = rep[f"e{i}p"], rep[f"e{i}m"]
        rhs = (rep[f"K{i}"] - rep[f"K{i}inv"]) / (q - 1 / q)
        residuals[f"e{i}p_e{i}m_commutator"] = ep @ em - em @ ep - rhs
    residuals["e0p_e1m_commute"] = rep["e0p"] @ rep["e1m"] - rep["e1m"] @ rep["e0p"]
    residuals["e0m_e1p_commute"] = rep["e0m"] @ rep["e1p"] - rep["e1p"] @ rep["e0m"]
    for letter in ("p", "m"):
        e0, e1 = rep[f"e0{letter}"], rep[f"e1{letter}"]
        residuals[f"serre_e0{letter}_e1{letter}"] = serre_expression(e0, e1, q)
        residuals[f"serre_e1{letter}_e0{letter}"] = serre_expression(e1, e0, q)
    return RelationReport.from_residuals(residuals)


def _acts_as_scalar(M, space, value):
    return all(M.apply(v) == tuple(value * x for x in v) for v in space.vectors())


def check_weight_ladders(rep, weights):
    """Raising/lowering containments of the weight spaces, as named booleans."""
    spaces = weights.spaces
    d = weights.diameter
    n = rep.dim

    def target(i):
        return spaces[i] if 0 <= i <= d else Subspace.zero(n)

    checks = {}
    for name, step in (("e0p", 1), ("e1m", 1), ("e0m", -1), ("e1p", -1)):
        checks[name] = all(target(i + step).contains(image(rep[name], spaces[i])) for i in range(d + 1))
    return checks


def weight_decomposition(rep):
    """
    Find the type (eps0, eps1), the diameter d and the spaces U_0, ..., U_d.

    U_i is the eps0 q^(2i-d) eigenspace of K0; K1 must act on it as
    eps1 q^(d-2i) and the generators must move between neighbouring spaces.
    """
    q, n = rep.q, rep.dim
    k0, k1 = rep["K0"], rep["K1"]
    for d in range(n):
        for eps0 in (1, -1):
            spaces = tuple(eigenspace(k0, eps0 * q ** (2 * i - d)) for i in range(d + 1))
            if not is_direct_sum(spaces, n):
                continue
            u0 = spaces[0].vectors()[0]
            eps1 = next((s for s in (1, -1) if k1.apply(u0) == tuple(s * q ** d * x for x in u0)), None)
            if eps1 is None:
                raise NotAWeightModule("K1 does not act on the lowest K0 eigenspace as a signed power of q")
            for i, space in enumerate(spaces):
                if not _acts_as_scalar(k1, space, eps1 * q ** (d - 2 * i)):
                    raise NotAWeightModule(f"K1 does not act as a scalar of the right form on U_{i}")
            weights = WeightData((eps0, eps1), d, spaces)
            ladders = check_weight_ladders(rep, weights)
            broken = [name for name, ok in ladders.items() if not ok]
            if broken:
                raise NotAWeightModule(f"generators {broken} do not shift the weight spaces")
            logger.debug("weight decomposition: type=%s d=%d dims=%s", weights.type, d, weights.dims)
            return weights
    raise NotAWeightModule("K0 spectrum is not of the form eps q^(2i-d)")


def spec_reducibility_reason(spec):
    """
    Name the first factor pair breaking the tensor-product irreducibility
    condition, or return None when no ratio a_i/a_j lies in
    {q^(d_i+d_j), q^(d_i+d_j-2), ..., q^(|d_i-d_j|+2)}.
    """
    q = spec.q
    for i, fi in enumerate(spec.factors):
        for j, fj in enumerate(spec.factors):
            if i == j:
                continue
            exponents = [fi.d + fj.d - 2 * k for k in range(min(fi.d, fj.d))]
            ratio = fi.a / fj.a
            for e in exponents:
                if ratio == q ** e:
                    return (
                        f"tensor-product irreducibility condition fails: a_{i + 1}/a_{j + 1} = "
                        f"{format_scalar(ratio)} = q^{e}, with d_{i + 1} = {fi.d} and d_{j + 1} = {fj.d}"
                    )
    return None


def is_irreducible_spec(spec):
    return spec_reducibility_reason(spec) is None


def weight_generating_poly(spec):
    result = Polynomial.one()
    for f in spec.factors:
        result = result * Polynomial.geometric(f.d)
    return result


def is_irreducible_rep(rep):
    gens = [rep[name] for name in GENERATORS]
    return generated_algebra_dim(gens) == rep.dim ** 2


def borel_irreducible(rep):
    """Irreducibility under the subalgebra generated by e0^+, e1^+ and K_i^(+-1)."""
    gens = [rep[name] for name in ("e0p", "e1p", "K0", "K0inv", "K1", "K1inv")]
    return generated_algebra_dim(gens) == rep.dim ** 2


def is_uq_irreducible(rep):
    if rep.spec is not None:
        return is_irreducible_spec(rep.spec)
    return is_irreducible_rep(rep)
