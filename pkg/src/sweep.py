"""
Sampled property sweep over random GL types.

Each sample is a random valid type; the sweep records the rigidity report,
the Hilbert identity between the regraded ring, the triangular tensor form and
the section algebra, the arrow generation check and the interval size.
"""

from datetime import datetime
from typing import Any, Dict, List, Optional

import numpy as np
from tqdm import tqdm

from src.config import Config
from src.errors import ConfigError
from src.geometry.gltype import GLType, validate_type
from src.grading.lgroup import interval, interval_size
from src.logs import banner, get_logger
from src.regrade.regrade import b_algebra_dim, component_total, triangular_tensor_dim
from src.tilting.bundle import build_tilting, rigidity_report
from src.tilting.quiver import arrow_generation_check

logger = get_logger(__name__)

HILBERT_MAX_RANK = 27
GENERATION_MAX_D = 2


def sample_type(rng: np.random.Generator, max_d: int, max_n: int, max_weight: int,
                max_coefficient: int, max_attempts: int = 50) -> Optional[GLType]:
    """Random type with integer hyperplane rows, redrawn until in general position."""
    d = int(rng.integers(1, max_d + 1))
    n = int(rng.integers(0, max_n + 1))
    weights = [int(p) for p in rng.integers(1, max_weight + 1, size=n)]
    for _ in range(max_attempts):
        rows = rng.integers(-max_coefficient, max_coefficient + 1, size=(n, d + 1))
        if n and not np.all(rows.any(axis=1)):
            continue
        t = GLType.create(d, weights, [[int(v) for v in row] for row in rows])
        if validate_type(t).ok:
            return t
    return None


def hilbert_identity(t: GLType, max_degree: int) -> List[Dict[str, int]]:
    return [{'h': h, 'regraded': component_total(h, t), 'triangular': triangular_tensor_dim(h, t),
             'b_algebra': b_algebra_dim(h, t)} for h in range(max_degree + 1)]


class PropertySweep:
    def __init__(self, config: Config):
        self.config = config
        self.rng = np.random.default_rng(config.sweep.seed)
        self.records: List[Dict[str, Any]] = []
        self.skipped = 0

    def check_type(self, index: int, t: GLType) -> Dict[str, Any]:
        T = build_tilting(t)
        rigidity = rigidity_report(T)
        lo, hi = rigidity.ell_range or (0, 0)
        record = {
            'sample': index,
            'd': t.d,
            'n': t.n,
            'weights': " ".join(map(str, t.weights)),
            'order_rank': t.order_rank,
            'interval_size': len(T),
            'interval_ok': len(T) == interval_size(t) == len(interval(t)),
            'rigidity_ok': rigidity.ok,
            'ell_lo': lo,
            'ell_hi': hi,
            'ell_certified': rigidity.ell_certified,
            'hilbert_ok': None,
            'generation_ok': None,
            'deficits': 0,
        }
        if t.order_rank <= HILBERT_MAX_RANK:
            rows = hilbert_identity(t, self.config.sweep.max_degree)
            record['hilbert_ok'] = all(r['regraded'] == r['triangular'] == r['b_algebra'] for r in rows)
        if t.n >= t.d + 1 and t.d <= GENERATION_MAX_D:
            generation = arrow_generation_check(T)
            record['generation_ok'] = generation.ok
            record['deficits'] = len(generation.deficits)
        record['ok'] = (record['interval_ok'] and record['rigidity_ok'] and record['ell_certified']
                        and record['hilbert_ok'] is not False and record['generation_ok'] is not False)
        return record

    def run(self) -> List[Dict[str, Any]]:
        cfg = self.config.sweep
        banner(logger, "PROPERTY SWEEP")
        logger.info(f"  Samples: {cfg.num_samples}, d <= {cfg.max_d}, n <= {cfg.max_n}, p_i <= {cfg.max_weight}")
        self.records = []
        for index in tqdm(range(cfg.num_samples), desc="sweep", disable=not self.config.verbose):
            t = sample_type(self.rng, cfg.max_d, cfg.max_n, cfg.max_weight, cfg.max_coefficient, cfg.max_attempts)
            if t is None:
                self.skipped += 1
                logger.debug(f"sample {index}: no type in general position after {cfg.max_attempts} draws")
                continue
            record = self.check_type(index, t)
            if not record['ok']:
                logger.warning(f"sample {index} failed: d={t.d} weights={list(t.weights)}")
            self.records.append(record)
        if not self.records:
            raise ConfigError("sweep produced no valid types; raise max_attempts or max_coefficient")
        return self.records

    def summary(self) -> Dict[str, Any]:
        failures = [r['sample'] for r in self.records if not r['ok']]
        return {
            'samples': len(self.records),
            'skipped': self.skipped,
            'failures': failures,
            'ok': not failures,
            'rigidity_failures': sum(1 for r in self.records if not r['rigidity_ok']),
            'hilbert_checked': sum(1 for r in self.records if r['hilbert_ok'] is not None),
            'generation_checked': sum(1 for r in self.records if r['generation_ok'] is not None),
            'max_interval_size': max(r['interval_size'] for r in self.records),
            'seed': self.config.sweep.seed,
            'max_degree': self.config.sweep.max_degree,
            'timestamp': datetime.now().isoformat(),
        }
