"""Runs the theorem checks over a batch of homomorphisms."""
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sectio import logger
from sectio.cli.catalog import catalog
from sectio.config.settings import configure, settings
from sectio.groups.homs import Hom
from sectio.verification.checks import ALL_CHECKS, CheckContext, TheoremCheck
from sectio.verification.report import CaseReport, VerificationReport

# Settings forwarded to worker processes
_FORWARDED = (
    "MAX_ORDER",
    "SEARCH_BUDGET_NODES",
    "COVER_BUDGET_NODES",
    "COBOUNDARY_BUDGET",
    "COVERS_MAX_ORDER",
    "ORACLE_MAX_ORDER",
    "PAIR_CHECK_LIMIT",
    "RANDOM_SEED",
)


def _select(names: Optional[Iterable[str]]) -> Tuple[TheoremCheck, ...]:
    if names is None:
        return ALL_CHECKS
    wanted = set(names)
    unknown = wanted - {c.name for c in ALL_CHECKS}
    if unknown:
        raise ValueError(f"Unknown checks: {', '.join(sorted(unknown))}")
    return tuple(c for c in ALL_CHECKS if c.name in wanted)


def _run_cases(
    batch: Sequence[Tuple[str, Hom]],
    keys: Iterable[str],
    checks: Sequence[TheoremCheck],
    context: CheckContext,
) -> List[CaseReport]:
    by_key = dict(batch)
    reports = []
    for key in keys:
        f = by_key[key]
        logger.debug(f"Verifying {key}")
        reports.append(CaseReport(case=key, outcomes=[check(key, f, context) for check in checks]))
    return reports


def verify_theorems(
    batch: Sequence[Tuple[str, Hom]],
    checks: Optional[Iterable[str]] = None,
) -> VerificationReport:
    """
    Evaluate every check on every case of the batch.

    Pair checks draw their partners from the same batch. Budget exhaustion
    is reported as BUDGET and never aborts the run.

    Args:
        batch: (case key, homomorphism) pairs with unique keys
        checks: names of the checks to run, all by default

    Returns:
        The report, cases sorted by key
    """
    selected = _select(checks)
    context = CheckContext([f for _, f in batch])
    reports = _run_cases(batch, [k for k, _ in batch], selected, context)
    report = VerificationReport.merge(reports)
    logger.info(f"Verified {len(batch)} cases: {report.summary()}")
    return report


# Worker state, rebuilt in each process
_worker: Dict[str, object] = {}


def _init_worker(max_order: int, overrides: Dict[str, int], checks: Optional[Tuple[str, ...]]) -> None:
    configure(**overrides)
    batch = catalog(max_order).homs
    _worker["batch"] = batch
    _worker["checks"] = _select(checks)
    _worker["context"] = CheckContext([f for _, f in batch])


def _verify_keys(keys: List[str]) -> List[CaseReport]:
    return _run_cases(_worker["batch"], keys, _worker["checks"], _worker["context"])


def verify_batch(
    max_order: Optional[int] = None,
    jobs: Optional[int] = None,
    checks: Optional[Iterable[str]] = None,
) -> VerificationReport:
    """
    Verify every catalog case up to max_order, spreading cases over `jobs`
    worker processes. The merged report does not depend on `jobs`.
    """
    max_order = max_order or settings.CATALOG_MAX_ORDER
    jobs = jobs or settings.JOBS
    cat = catalog(max_order)
    if jobs <= 1:
        return verify_theorems(cat.homs, checks)

    names = tuple(checks) if checks is not None else None
    _select(names)
    keys = [k for k, _ in cat.homs]
    chunks = [keys[i::jobs] for i in range(jobs)]
    overrides = {name: getattr(settings, name) for name in _FORWARDED}
    reports: List[CaseReport] = []
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=_init_worker, initargs=(max_order, overrides, names)
    ) as pool:
        for part in pool.map(_verify_keys, chunks):
            reports.extend(part)
    report = VerificationReport.merge(reports)
    logger.info(f"Verified {len(keys)} cases on {jobs} workers: {report.summary()}")
    return report
