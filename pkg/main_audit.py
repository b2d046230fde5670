"""Theorem audit - Cloud Function
Entry point: audit_http(request)

Enumerates the semigroup corpus of a given order (or all orders up to it) and evaluates every
characterization check on it. Disagreements come back as records carrying
the offending table and both predicate values.
Request: {"n_max": 3, "checks": ["T-planarity"], "up_to": false}
"""

import json
import logging
from typing import List, Optional, Sequence

import functions_framework

from shared.audit import AuditReport, run_audit, select_checks
from shared.config import AUDIT_ORDER_CAP, LOG_LEVEL, PARALLEL_WIDTH
from shared.enumeration import DedupMode, EnumerationConfig, corpus, enumerate_semigroups
from shared.errors import InvalidParams, OrderCapExceeded, SemigroupError
from shared.semigroup_core import CayleyTable

logging.basicConfig(level=LOG_LEVEL)
logger = logging.getLogger(__name__)


def audit_corpus(n_max: int, up_to: bool = False, parallel_width: int = 1) -> List[CayleyTable]:
    """Semigroups up to iso and anti-iso: order n_max, or orders 1..n_max with up_to"""
    if n_max < 1:
        raise InvalidParams(f"n_max must be at least 1, got {n_max}")
    if n_max > AUDIT_ORDER_CAP:
        raise OrderCapExceeded(n_max, AUDIT_ORDER_CAP)
    if up_to:
        return list(corpus(n_max, DedupMode.UP_TO_ISO_AND_ANTI, parallel_width))
    cfg = EnumerationConfig(n_max, DedupMode.UP_TO_ISO_AND_ANTI, parallel_width)
    return list(enumerate_semigroups(cfg))


def audit(n_max: int, selectors: Optional[Sequence[str]] = None, up_to: bool = False,
          parallel_width: int = 1) -> AuditReport:
    checks = select_checks(selectors)
    tables = audit_corpus(n_max, up_to, parallel_width)
    logger.info(f"Audit: {len(checks)} checks over {len(tables)} semigroups (n_max={n_max})")
    return run_audit(checks, tables, parallel_width)


@functions_framework.http
def audit_http(request):
    """
    Cloud Function entry point for the theorem audit.

    Request JSON (all optional):
        n_max: Order of the corpus (default: 3)
        checks: Check ids or theorem numbers (default: all)
        up_to: Audit every order 1..n_max instead (default: false)
    """
    try:
        request_json = request.get_json(silent=True) or {}
        n_max = int(request_json.get('n_max', 3))
        report = audit(
            n_max,
            request_json.get('checks'),
            bool(request_json.get('up_to', False)),
            PARALLEL_WIDTH,
        )

        result = {
            'status': 'success' if report.passed else 'counterexamples',
            'n_max': n_max,
            'checks': len(report.outcomes),
            'total_counterexamples': report.total_counterexamples,
            'summary': report.summary_lines(),
            'records': report.to_records(),
        }
        logger.info(f"Audit complete: {report.total_counterexamples} counterexamples")
        return json.dumps(result, default=str), 200, {'Content-Type': 'application/json'}

    except (SemigroupError, ValueError) as e:
        logger.error(f"Audit rejected request: {str(e)}")
        return _error_response(str(e)), 400

    except Exception as e:
        logger.error(f"Audit failed: {str(e)}")
        return _error_response(str(e)), 500


def _error_response(message):
    return json.dumps({'status': 'error', 'error': message})
