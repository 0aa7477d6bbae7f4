"""
Analysis pipeline shared by the management commands and the HTTP views.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field

from .aqbridge import aq_irreducibility, build_aq_pair, check_qserre, equitable_operators, verify_eep
from .drinfeld import drinfeld_data, drinfeld_poly_spec
from .exactnum import format_scalar, to_scalar
from .exceptions import (
    InvalidParameter,
    NotAWeightModule,
    PreconditionError,
    SerreError,
    TheoremViolation,
    UnsupportedInput,
    WrongType,
)
from .tdpair import shape_factorization, verify_tdpair
from .uqrep import (
    ModuleSpec,
    check_chevalley_relations,
    from_spec,
    spec_reducibility_reason,
    weight_decomposition,
    weight_generating_poly,
)
from .words import count_table

logger = logging.getLogger(__name__)

@dataclass
class AnalysisReport:
    spec: ModuleSpec
    dim: int
    type: tuple
    diameter: int
    weight_dims: list
    weight_poly_ok: bool
    drinfeld: object
    drinfeld_consistent: bool
    uq_irreducible: bool
    chevalley_ok: bool
    qserre_ok: bool
    aq_verdict: object = None
    aq_skipped_reason: str = None
    eep_ok: bool = None
    equitable_ok: bool = None
    tdpair: object = None
    shape: list = None
    factorization: list = None
    timing_ms: dict = field(default=None)


class _Stopwatch:
    def __init__(self):
        self.stages = {}

    @contextmanager
    def stage(self, name):
        started = time.perf_counter()
        try:
            yield
        finally:
            elapsed = round((time.perf_counter() - started) * 1000, 3)
            self.stages[name] = elapsed
            logger.debug('stage %s took %.3f ms', name, elapsed)


def analyze(spec, strict=False, timing=False):
    """
    Run every check on the module described by ``spec``.

    A module that is reducible over U_q skips the A_q stages and records the
    reason, unless ``strict`` is set, in which case PreconditionError is raised.
    """
    clock = _Stopwatch()
    with clock.stage('construct'):
        rep = from_spec(spec)
        chevalley_ok = check_chevalley_relations(rep).all_hold
    with clock.stage('weights'):
        weights = weight_decomposition(rep)
        poly_dims = list(weight_generating_poly(spec).coefficients)
        weight_poly_ok = [int(c) for c in poly_dims] == weights.dims
    reducible_reason = spec_reducibility_reason(spec)
    uq_irreducible = reducible_reason is None
    with clock.stage('drinfeld'):
        data = drinfeld_data(rep, weights)
        consistent = data.poly == drinfeld_poly_spec(spec)
        if uq_irreducible and not consistent:
            raise TheoremViolation('Drinfel\'d polynomial from sigma values differs from the product formula')
    with clock.stage('qserre'):
        qserre_ok = check_qserre(rep['e0p'] + rep['K0'], rep['e1p'] + rep['K1'], spec.q).all_hold
    report = AnalysisReport(
        spec=spec,
        dim=rep.dim,
        type=weights.type,
        diameter=weights.diameter,
        weight_dims=weights.dims,
        weight_poly_ok=weight_poly_ok,
        drinfeld=data,
        drinfeld_consistent=consistent,
        uq_irreducible=uq_irreducible,
        chevalley_ok=chevalley_ok,
        qserre_ok=qserre_ok,
    )
    if not uq_irreducible:
        if strict:
            raise PreconditionError(reducible_reason)
        logger.info('skipping A_q analysis of %s: %s', spec, reducible_reason)
        report.aq_skipped_reason = reducible_reason
    else:
        with clock.stage('aq_verdict'):
            pair = build_aq_pair(rep, weights)
            verdict = aq_irreducibility(rep, pair)
            report.aq_verdict = verdict
        with clock.stage('eep'):
            report.eep_ok = verify_eep(rep, pair).holds
        if verdict.oracle_verdict:
            with clock.stage('equitable'):
                report.equitable_ok = equitable_operators(rep, pair).report.all_hold
            with clock.stage('tdpair'):
                td = verify_tdpair(pair.A, pair.Astar, spec.q)
                report.tdpair = td
                report.shape = list(td.shape) if td.shape is not None else None
                if report.shape is not None:
                    report.factorization = shape_factorization(report.shape)
                    if report.shape != weights.dims:
                        raise TheoremViolation(f'shape {report.shape} differs from weight dimensions {weights.dims}')
    if timing:
        report.timing_ms = clock.stages
    logger.info('analyzed %s in %.3f ms', spec, sum(clock.stages.values()))
    return report


def relation_reports(spec):
    rep = from_spec(spec)
    return {
        'chevalley': check_chevalley_relations(rep),
        'qserre': check_qserre(rep['e0p'] + rep['K0'], rep['e1p'] + rep['K1'], spec.q),
    }


def scan_grid(a_from, a_to, a_step):
    a_from, a_to, a_step = to_scalar(a_from), to_scalar(a_to), to_scalar(a_step)
    if a_step <= 0:
        raise InvalidParameter('a-step must be positive')
    values = []
    a = a_from
    while a <= a_to:
        values.append(a)
        a += a_step
    return values


def scan_row(d, a, q):
    row = {'d': d, 'a': format_scalar(a)}
    try:
        spec = ModuleSpec(q, ((d, a),))
        rep = from_spec(spec)
        verdict = aq_irreducibility(rep)
    except SerreError as exc:
        row['error'] = str(exc)
        return row
    row.update({
        'criterion_value': verdict.criterion_value,
        'criterion': verdict.criterion_verdict,
        'oracle_dim': verdict.oracle_algebra_dim,
        'oracle': verdict.oracle_verdict,
        'witness_dim': verdict.witness.dim if verdict.witness is not None else None,
    })
    return row


def scan(d, a_from, a_to, a_step, q, jobs=1):
    """One verdict row per evaluation parameter on the grid, in grid order."""
    values = scan_grid(a_from, a_to, a_step)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(lambda a: scan_row(d, a, q), values))
    return [scan_row(d, a, q) for a in values]


def word_counts(max_len):
    return count_table(max_len)


def exit_code_for(exc):
    if isinstance(exc, InvalidParameter):
        return 2
    if isinstance(exc, (PreconditionError, WrongType, NotAWeightModule, UnsupportedInput)):
        return 3
    return 4
