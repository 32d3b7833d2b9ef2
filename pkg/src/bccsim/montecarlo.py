"""Seeded Monte-Carlo BER estimation over power and training-length sweeps.

Each BER point runs a number of independent (train, transmit) blocks so
the estimate averages over training randomness as well as data noise.
Every block owns a private substream derived from the scenario seed and
the (sweep kind, point, technique, block) coordinates, which makes
results identical for any worker count or execution order.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .channels import NodeProfile
from .detectors import MRC, TECHNIQUES, compute_training_stats, detect, mrc_detect
from .errors import DegenerateTrainingError, ParameterError
from .link import LinkParams, generate_data_symbols, generate_received, training_symbols

__all__ = [
    "Scenario",
    "BerPoint",
    "make_ber_point",
    "run_point",
    "run_sweep",
    "run_nt_sweep",
    "run_scenario",
]

_TECH_INDEX = {name: i for i, name in enumerate(TECHNIQUES)}
_POWER_SWEEP_DOMAIN = 0
_NT_SWEEP_DOMAIN = 1


def _default_power_sweep() -> tuple[float, ...]:
    return tuple(float(p) for p in range(-20, 31, 2))


@dataclass(frozen=True)
class Scenario:
    """One full experiment: nodes, training length, sweep, budget, seed.

    ``nt_sweep`` switches the scenario from a transmit-power sweep to a
    training-length sweep at the single fixed power in ``power_sweep_dbm``.
    ``blocks`` is the number of independent (train, transmit) repetitions
    each point is averaged over.
    """

    nodes: tuple[NodeProfile, ...]
    n_t: int = 50
    power_sweep_dbm: tuple[float, ...] = field(default_factory=_default_power_sweep)
    n_data_symbols: int = 1_000_000
    techniques: tuple[str, ...] = TECHNIQUES
    seed: int = 0
    n0_dbm_per_hz: float = -174.0
    bandwidth_hz: float = 1.0e5
    nt_sweep: tuple[int, ...] | None = None
    blocks: int = 100

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "power_sweep_dbm",
                           tuple(float(p) for p in self.power_sweep_dbm))
        object.__setattr__(self, "techniques", tuple(self.techniques))
        if self.nt_sweep is not None:
            object.__setattr__(self, "nt_sweep", tuple(int(v) for v in self.nt_sweep))
        _validate_scenario(self)


def _validate_scenario(s: Scenario) -> None:
    if not s.nodes:
        raise ParameterError("nodes must be a nonempty list of receive nodes")
    ids = [n.node_id for n in s.nodes]
    if len(set(ids)) != len(ids):
        raise ParameterError(f"nodes must have unique node_id values, got {ids}")
    if s.n_t < 4 or s.n_t % 2:
        raise ParameterError(f"n_t must be an even integer >= 4, got {s.n_t}")
    if s.n_data_symbols < 1:
        raise ParameterError(f"n_data_symbols must be >= 1, got {s.n_data_symbols}")
    if not s.power_sweep_dbm:
        raise ParameterError("power_sweep_dbm must be nonempty")
    for p in s.power_sweep_dbm:
        if math.isnan(p) or p == math.inf:
            raise ParameterError(f"power_sweep_dbm must not contain NaN or +inf, got {p!r}")
    if any(b <= a for a, b in zip(s.power_sweep_dbm, s.power_sweep_dbm[1:])):
        raise ParameterError(
            f"power_sweep_dbm must be strictly increasing, got {s.power_sweep_dbm}")
    if not s.techniques:
        raise ParameterError("techniques must be nonempty")
    unknown = [t for t in s.techniques if t not in TECHNIQUES]
    if unknown:
        raise ParameterError(
            f"techniques contains unknown entries {unknown}; known: {list(TECHNIQUES)}")
    if len(set(s.techniques)) != len(s.techniques):
        raise ParameterError(f"techniques must not repeat, got {s.techniques}")
    if not 0 <= s.seed < 2 ** 64:
        raise ParameterError(f"seed must fit an unsigned 64-bit integer, got {s.seed}")
    if s.blocks < 1:
        raise ParameterError(f"blocks must be >= 1, got {s.blocks}")
    if s.nt_sweep is not None:
        if len(s.power_sweep_dbm) != 1:
            raise ParameterError(
                "nt_sweep requires a single-entry power_sweep_dbm (the fixed power)")
        for v in s.nt_sweep:
            if v < 4 or v % 2:
                raise ParameterError(f"nt_sweep entries must be even integers >= 4, got {v}")
    # rejects NaN spectral density / negative bandwidth early
    LinkParams(s.power_sweep_dbm[0], s.n0_dbm_per_hz, s.bandwidth_hz)


@dataclass(frozen=True)
class BerPoint:
    """One measured BER sample with a 95% binomial confidence half-width."""

    technique: str
    tx_power_dbm: float
    n_t: int
    error_count: int
    symbol_count: int
    ber: float
    ci95: float


def make_ber_point(technique: str, tx_power_dbm: float, n_t: int,
                   error_count: int, symbol_count: int) -> BerPoint:
    """Build a BerPoint, deriving the rate and the normal-approximation CI."""
    if symbol_count < 1 or not 0 <= error_count <= symbol_count:
        raise ParameterError(
            f"need 0 <= errors <= symbols with symbols >= 1, got {error_count}/{symbol_count}")
    ber = error_count / symbol_count
    ci95 = 1.96 * math.sqrt(ber * (1.0 - ber) / symbol_count)
    return BerPoint(technique=technique, tx_power_dbm=float(tx_power_dbm), n_t=int(n_t),
                    error_count=int(error_count), symbol_count=int(symbol_count),
                    ber=ber, ci95=ci95)


def _block_sizes(total: int, blocks: int) -> list[int]:
    n_blocks = min(blocks, total)
    base, extra = divmod(total, n_blocks)
    return [base + 1 if i < extra else base for i in range(n_blocks)]


def _block_rng(seed: int, domain: int, point_index: int, technique: str, block_index: int):
    key = (domain, point_index, _TECH_INDEX[technique], block_index)
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=key))


def _run_block(nodes, link: LinkParams, n_t: int, technique: str, n_symbols: int, rng) -> int:
    """One (train, transmit) repetition; returns the error count."""
    if technique == MRC:
        x = generate_data_symbols(n_symbols, rng)
        frame = generate_received(x, nodes, link, rng)
        decisions = mrc_detect(frame.y, frame.h, link.tx_power_w)
        return int(np.count_nonzero(decisions != x))
    training = generate_received(training_symbols(n_t), nodes, link, rng)
    stats = compute_training_stats(training)
    x = generate_data_symbols(n_symbols, rng)
    frame = generate_received(x, nodes, link, rng)
    decisions = detect(technique, np.abs(frame.y), stats)
    return int(np.count_nonzero(decisions != x))


def _simulate_point(scenario: Scenario, power_dbm: float, n_t: int, technique: str,
                    domain: int, point_index: int) -> BerPoint:
    link = LinkParams(power_dbm, scenario.n0_dbm_per_hz, scenario.bandwidth_hz)
    errors = 0
    symbols = 0
    failures = 0
    for block_index, size in enumerate(_block_sizes(scenario.n_data_symbols, scenario.blocks)):
        rng = _block_rng(scenario.seed, domain, point_index, technique, block_index)
        try:
            errors += _run_block(scenario.nodes, link, n_t, technique, size, rng)
        except DegenerateTrainingError:
            failures += 1
            continue
        symbols += size
    if symbols == 0:
        raise DegenerateTrainingError(
            f"technique {technique!r} at {power_dbm} dBm, n_t={n_t}: "
            f"all {failures} training blocks were degenerate")
    return make_ber_point(technique, power_dbm, n_t, errors, symbols)


@dataclass(frozen=True)
class _PointFailure:
    message: str


def _simulate_point_safe(args):
    try:
        return _simulate_point(*args)
    except DegenerateTrainingError as exc:
        return _PointFailure(str(exc))


def _execute(tasks, jobs) -> list[BerPoint]:
    if jobs is not None and jobs < 1:
        raise ParameterError(f"jobs must be >= 1, got {jobs!r}")
    if jobs in (None, 1) or len(tasks) <= 1:
        results = [_simulate_point_safe(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_simulate_point_safe, tasks))
    points = []
    for result in results:
        if isinstance(result, _PointFailure):
            warnings.warn(f"skipping BER point: {result.message}", RuntimeWarning,
                          stacklevel=2)
        else:
            points.append(result)
    return sorted(points, key=lambda p: (p.technique, p.tx_power_dbm, p.n_t))


def run_point(scenario: Scenario, power_dbm: float, technique: str) -> BerPoint:
    """One BER point of the power sweep; deterministic in (seed, power, technique)."""
    if technique not in scenario.techniques:
        raise ParameterError(
            f"technique {technique!r} is not part of the scenario (has {scenario.techniques})")
    try:
        point_index = scenario.power_sweep_dbm.index(float(power_dbm))
    except ValueError:
        raise ParameterError(f"power {power_dbm!r} dBm is not in the scenario sweep") from None
    return _simulate_point(scenario, float(power_dbm), scenario.n_t, technique,
                           _POWER_SWEEP_DOMAIN, point_index)


def run_sweep(scenario: Scenario, jobs: int | None = None) -> list[BerPoint]:
    """All (power, technique) BER points of the scenario's power sweep.

    Points are independent; with ``jobs`` > 1 they run in a process pool.
    Degenerate points are reported as RuntimeWarnings and omitted.  The
    output order is deterministic: sorted by (technique, power, n_t).
    """
    tasks = [
        (scenario, power, scenario.n_t, technique, _POWER_SWEEP_DOMAIN, index)
        for index, power in enumerate(scenario.power_sweep_dbm)
        for technique in scenario.techniques
    ]
    return _execute(tasks, jobs)


def run_nt_sweep(scenario: Scenario, nt_values, fixed_power_dbm: float,
                 jobs: int | None = None) -> list[BerPoint]:
    """BER per (training length, technique) at one fixed transmit power."""
    nt_values = tuple(int(v) for v in nt_values)
    if not nt_values:
        raise ParameterError("nt_values must be nonempty")
    for v in nt_values:
        if v < 4 or v % 2:
            raise ParameterError(f"nt_values entries must be even integers >= 4, got {v}")
    tasks = [
        (scenario, float(fixed_power_dbm), nt, technique, _NT_SWEEP_DOMAIN, index)
        for index, nt in enumerate(nt_values)
        for technique in scenario.techniques
    ]
    return _execute(tasks, jobs)


def run_scenario(scenario: Scenario, jobs: int | None = None) -> list[BerPoint]:
    """Run the scenario's sweep: the power sweep, or the nt sweep when set."""
    if scenario.nt_sweep is not None:
        return run_nt_sweep(scenario, scenario.nt_sweep, scenario.power_sweep_dbm[0], jobs=jobs)
    return run_sweep(scenario, jobs=jobs)
