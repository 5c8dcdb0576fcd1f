"""
Runner Service - Identity Suites over Parameter Grids
"""
import fnmatch
import logging
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from typing import Dict, List, Optional, Tuple, Union

from plastic_kit.config import load_config
from plastic_kit.errors import CapExceeded, GridParamError, InadmissibleParams
from plastic_kit.models.grid import ParamGrid, parse_grid
from plastic_kit.models.identity import CheckResult, IdentityDescriptor
from plastic_kit.models.report import CorrectionOutcome, ErrataFinding, IdentityTally, Report
from plastic_kit.services.identities import IdentityService, catalog

logger = logging.getLogger(__name__)

MAX_LISTED_FAILURES = 10


def _failed_result(descriptor: IdentityDescriptor, params: dict, error: Exception) -> CheckResult:
    return CheckResult(descriptor.id, dict(params), None, None, False, error=f'{type(error).__name__}: {error}')


def _evaluate_chunk(identity_id: str, points: List[Dict[str, int]]) -> dict:
    """
    Evaluate one run of grid points in order.

    Module level so worker processes can unpickle it; each worker evaluates
    against its own engine.
    """
    descriptor = catalog.get(identity_id)
    outcome = {
        'passes': 0,
        'skipped': 0,
        'failed': 0,
        'failures': [],
        'correction_failed': [0] * len(descriptor.corrections),
    }

    for params in points:
        try:
            result = IdentityService.evaluate(identity_id, params)
        except InadmissibleParams as e:
            logger.debug('%s skipped at %s: %s', identity_id, params, e.message)
            outcome['skipped'] += 1
            continue
        except Exception as e:
            result = _failed_result(descriptor, params, e)

        if result.passed:
            outcome['passes'] += 1
        else:
            outcome['failed'] += 1
            if len(outcome['failures']) < MAX_LISTED_FAILURES:
                outcome['failures'].append(result)

        for index, correction in enumerate(descriptor.corrections):
            try:
                corrected = IdentityService.evaluate_correction(descriptor, correction, params)
            except InadmissibleParams:
                continue
            except Exception:
                corrected = None
            if corrected is None or not corrected.passed:
                outcome['correction_failed'][index] += 1

    return outcome


class RunnerService:
    """Grid resolution, suite execution and report assembly."""

    @staticmethod
    def parse_grid(spec: str, cap: int = None) -> ParamGrid:
        if cap is None:
            return parse_grid(spec)
        return parse_grid(spec, cap=cap)

    @staticmethod
    def grid_for(descriptor: IdentityDescriptor, override: Union[str, ParamGrid, None] = None,
                 config: dict = None) -> ParamGrid:
        """
        Effective grid for one identity.

        Catalog default (or its small variant), then config file entries whose
        glob matches the id, then the command-line override.

        Raises:
            GridParamError: the grid names a parameter the identity does not take
            CapExceeded: too many points
        """
        config = config or load_config()
        cap = config['POINT_CAP']
        unbounded = float('inf')

        base = descriptor.small_grid if config.get('GRID_SCALE') == 'small' else descriptor.grid
        grid = parse_grid(base, cap=unbounded)
        for glob, spec in sorted(config.get('GRIDS', {}).items()):
            if fnmatch.fnmatchcase(descriptor.id, glob):
                grid = grid.merge(parse_grid(spec, cap=unbounded))
        if override is not None:
            if isinstance(override, str):
                override = parse_grid(override, cap=unbounded)
            grid = grid.merge(override)

        unknown = sorted(set(grid.names) - set(descriptor.param_names))
        if unknown:
            raise GridParamError(
                f"{descriptor.id} takes {list(descriptor.param_names)}, not {unknown}",
                id=descriptor.id, unknown=unknown,
            )
        if grid.count > cap:
            raise CapExceeded(
                f'{descriptor.id}: grid has {grid.count} points, cap is {cap}',
                id=descriptor.id, count=grid.count, cap=cap,
            )
        return grid

    @staticmethod
    def _chunks(points: List[dict], size: int) -> List[List[dict]]:
        return [points[i:i + size] for i in range(0, len(points), size)] or [[]]

    @staticmethod
    def run_suite(pattern: str = '*', grid: Union[str, ParamGrid, None] = None, jobs: int = 1,
                  config: dict = None, timestamp: bool = False) -> Report:
        """
        Evaluate every identity matching pattern over its grid.

        Report content does not depend on jobs: chunks come back in submission
        order and are merged in catalog order.

        Raises:
            NoMatch: pattern matches nothing
        """
        config = config or load_config()
        descriptors = catalog.match(pattern)
        grids = [RunnerService.grid_for(d, grid, config) for d in descriptors]

        tasks: List[Tuple[int, str, List[dict]]] = []
        size = max(int(config.get('CHUNK_SIZE', 400)), 1)
        for index, (descriptor, effective) in enumerate(zip(descriptors, grids)):
            for chunk in RunnerService._chunks(list(effective.points()), size):
                tasks.append((index, descriptor.id, chunk))

        logger.info('Running %d identities, %d points, %d jobs',
                    len(descriptors), sum(g.count for g in grids), jobs)

        ids = [task[1] for task in tasks]
        chunks = [task[2] for task in tasks]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                outcomes = list(executor.map(_evaluate_chunk, ids, chunks))
        else:
            outcomes = [_evaluate_chunk(i, c) for i, c in zip(ids, chunks)]

        tallies = [
            IdentityTally(id=d.id, title=d.title, errata_watch=d.errata_watch, grid=g.format())
            for d, g in zip(descriptors, grids)
        ]
        correction_failed = [[0] * len(d.corrections) for d in descriptors]
        for (index, _, chunk), outcome in zip(tasks, outcomes):
            tally = tallies[index]
            tally.points_tested += len(chunk)
            tally.passes += outcome['passes']
            tally.skipped += outcome['skipped']
            tally.failed += outcome['failed']
            room = MAX_LISTED_FAILURES - len(tally.failures)
            tally.failures.extend(outcome['failures'][:max(room, 0)])
            for k, count in enumerate(outcome['correction_failed']):
                correction_failed[index][k] += count

        findings = []
        for descriptor, tally, failed_counts in zip(descriptors, tallies, correction_failed):
            logger.info('%s: %d points, %d passes, %d failures, %d skipped',
                        tally.id, tally.points_tested, tally.passes, tally.failed, tally.skipped)
            if descriptor.errata_watch:
                finding = RunnerService._finding(descriptor, tally, failed_counts)
                findings.append(finding)
                if finding.status != 'confirmed':
                    logger.warning('%s: printed form fails at %d points; accepted correction: %s',
                                   finding.id, finding.points_failed, finding.accepted_correction)

        run = {
            'filter': pattern,
            'grid_override': grid.format() if isinstance(grid, ParamGrid) else grid,
            'grid_scale': config.get('GRID_SCALE', 'default'),
        }
        if timestamp:
            run['timestamp'] = datetime.now(timezone.utc).isoformat()

        report = Report(
            version=str(config.get('CATALOG_VERSION', '1.0')),
            run=run,
            results=tallies,
            errata_findings=findings,
        )
        if not report.reconciles():
            logger.error('Report totals do not reconcile')
        return report

    @staticmethod
    def _finding(descriptor: IdentityDescriptor, tally: IdentityTally,
                 failed_counts: List[int]) -> ErrataFinding:
        corrections = [
            CorrectionOutcome(label=c.label, passes=count == 0, points_failed=count)
            for c, count in zip(descriptor.corrections, failed_counts)
        ]
        confirmed = tally.failed == 0
        accepted: Optional[str] = None
        if not confirmed:
            accepted = next((c.label for c in corrections if c.passes), None)
        return ErrataFinding(
            id=descriptor.id,
            anchor=f'{descriptor.anchor.source}: {descriptor.anchor.statement}',
            status='confirmed' if confirmed else 'counterexample',
            points_failed=tally.failed,
            first_counterexample=tally.failures[0] if tally.failures else None,
            corrections=corrections,
            accepted_correction=accepted,
        )
