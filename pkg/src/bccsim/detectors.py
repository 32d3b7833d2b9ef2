"""Training statistics, per-node detection weights, fusion, and MRC baseline.

All operations are pure and vectorized: per-node inputs are arrays with
the node axis first, so a whole block of data slots is detected in one
call with shape (K, N).

Three noncoherent techniques share the same training phase and the same
fusion rule but differ in how each node turns a received amplitude into
a pair of evidence weights:

* probability  -- hard-detect against the amplitude threshold, then score
  both hypotheses with logs of the empirical conditional probabilities.
* deviation    -- signed distances between the amplitude and the two
  half-frame mean amplitudes.
* combination  -- squared deviations scaled by the reference amplitudes,
  with the log-probability score as a balancing exponent term.

The coherent baseline is matched-filter combining with perfect per-slot
channel knowledge.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTrainingError, ParameterError
from .link import ReceivedFrame

__all__ = [
    "PROBABILITY",
    "DEVIATION",
    "COMBINATION",
    "MRC",
    "TECHNIQUES",
    "TrainingStats",
    "WeightPair",
    "compute_training_stats",
    "prob_weights",
    "dev_weights",
    "comb_weights",
    "fuse",
    "detect",
    "mrc_detect",
]

PROBABILITY = "probability"
DEVIATION = "deviation"
COMBINATION = "combination"
MRC = "mrc"
TECHNIQUES = (PROBABILITY, DEVIATION, COMBINATION, MRC)


@dataclass(frozen=True)
class TrainingStats:
    """Per-node reference values extracted from one training frame.

    ``a_th`` is the mean received amplitude over the whole frame, ``a_one``
    and ``a_zero`` the half-frame means over the ones/zeros halves, ``p11``
    and ``p00`` the clamped empirical correct-detection probabilities.
    All arrays have shape (K,).
    """

    a_th: np.ndarray
    a_one: np.ndarray
    a_zero: np.ndarray
    p11: np.ndarray
    p00: np.ndarray
    n_t: int

    @property
    def n_nodes(self) -> int:
        return self.a_th.shape[0]


@dataclass(frozen=True)
class WeightPair:
    """Evidence scores for symbol 1 (w1) and symbol 0 (w0), node axis first."""

    w1: np.ndarray
    w0: np.ndarray


def compute_training_stats(frame: ReceivedFrame) -> TrainingStats:
    """Reference values from a received training frame.

    The amplitude threshold is the midpoint of the two half-frame means,
    which is algebraically the full-frame mean; computing it as the
    midpoint keeps the identity exact in floating point.  Each training
    slot is re-detected against the threshold (>= maps to symbol 1) and
    the per-half correct-detection rates are clamped into
    [2/n_t, 1 - 2/n_t] so that downstream log-weights stay finite.
    """
    x = np.asarray(frame.x)
    n_t = x.size
    if n_t < 4 or n_t % 2:
        raise ParameterError(f"n_t must be an even integer >= 4 for training, got {n_t}")
    half = n_t // 2
    if not (np.all(x[:half] == 1) and np.all(x[half:] == 0)):
        raise ParameterError("frame does not carry the training pattern (ones then zeros)")
    amp = np.abs(frame.y)
    a_one = amp[:, :half].mean(axis=1)
    a_zero = amp[:, half:].mean(axis=1)
    a_th = 0.5 * (a_one + a_zero)
    detected = amp >= a_th[:, None]
    lo, hi = 2.0 / n_t, 1.0 - 2.0 / n_t
    p11 = np.clip(detected[:, :half].mean(axis=1), lo, hi)
    p00 = np.clip(1.0 - detected[:, half:].mean(axis=1), lo, hi)
    return TrainingStats(a_th=a_th, a_one=a_one, a_zero=a_zero, p11=p11, p00=p00, n_t=n_t)


def _node_col(values: np.ndarray, ndim: int) -> np.ndarray:
    return values[:, None] if ndim == 2 else values


def _as_amplitudes(y_abs, stats: TrainingStats) -> np.ndarray:
    y = np.asarray(y_abs, dtype=float)
    if y.ndim not in (1, 2) or y.shape[0] != stats.n_nodes:
        raise ParameterError(
            f"y_abs must have the node axis first with {stats.n_nodes} rows, got shape {y.shape}")
    return y


def prob_weights(y_abs, stats: TrainingStats) -> WeightPair:
    """Log-probability weights of the probability technique.

    Each node hard-detects the slot against its amplitude threshold, then
    scores hypothesis 1 with log(p11) or log(1 - p11) and hypothesis 0
    with log(1 - p00) or log(p00).  Clamping during training keeps every
    log argument inside (0, 1), so the weights are always finite.
    """
    y = _as_amplitudes(y_abs, stats)
    detected = y >= _node_col(stats.a_th, y.ndim)
    p11 = _node_col(stats.p11, y.ndim)
    p00 = _node_col(stats.p00, y.ndim)
    w1 = np.where(detected, np.log(p11), np.log1p(-p11))
    w0 = np.where(detected, np.log1p(-p00), np.log(p00))
    return WeightPair(w1=w1, w0=w0)


def dev_weights(y_abs, stats: TrainingStats) -> WeightPair:
    """Deviation weights: w1 = |y| - A1 and w0 = A0 - |y| per node."""
    y = _as_amplitudes(y_abs, stats)
    w1 = y - _node_col(stats.a_one, y.ndim)
    w0 = _node_col(stats.a_zero, y.ndim) - y
    return WeightPair(w1=w1, w0=w0)


def comb_weights(y_abs, stats: TrainingStats) -> WeightPair:
    """Combination weights built from the deviation and probability weights.

    For each hypothesis the squared deviation weight is divided by the
    matching reference amplitude, and the same square over the threshold
    amplitude multiplies the log-probability weight, balancing the two
    contributions.  Requires strictly positive reference amplitudes.
    """
    if np.any(stats.a_one == 0.0) or np.any(stats.a_zero == 0.0) or np.any(stats.a_th == 0.0):
        raise DegenerateTrainingError(
            "training produced a zero reference amplitude; combination weights are undefined")
    y = _as_amplitudes(y_abs, stats)
    d = dev_weights(y, stats)
    p = prob_weights(y, stats)
    a_one = _node_col(stats.a_one, y.ndim)
    a_zero = _node_col(stats.a_zero, y.ndim)
    a_th = _node_col(stats.a_th, y.ndim)
    w1 = -(d.w1 ** 2) / a_one + (d.w1 ** 2) / a_th * p.w1
    w0 = -(d.w0 ** 2) / a_zero + (d.w0 ** 2) / a_th * p.w0
    return WeightPair(w1=w1, w0=w0)


def fuse(weights: WeightPair):
    """Fusion-center decision: 1 when the summed symbol-1 evidence wins.

    The comparison sums per-node weight differences rather than the two
    sums separately, so a perfectly balanced weight set cancels to an
    exact zero; ties resolve to symbol 0.  Returns a scalar int for (K,)
    inputs and an int array for (K, N) inputs.
    """
    w1 = np.asarray(weights.w1, dtype=float)
    w0 = np.asarray(weights.w0, dtype=float)
    if w1.shape != w0.shape:
        raise ParameterError(f"w1 and w0 must have matching shapes, got {w1.shape} and {w0.shape}")
    if w1.ndim not in (1, 2) or w1.shape[0] == 0:
        raise ParameterError("weights must be nonempty with the node axis first")
    margin = (w1 - w0).sum(axis=0)
    decision = margin > 0.0
    if decision.ndim == 0:
        return int(decision)
    return decision.astype(np.int64)


_WEIGHT_FNS = {PROBABILITY: prob_weights, DEVIATION: dev_weights, COMBINATION: comb_weights}


def detect(technique: str, y_abs, stats: TrainingStats):
    """Detect symbols with one noncoherent technique.

    ``y_abs`` is (K,) for a single slot or (K, N) for a block; the result
    is a scalar int or an (N,) int array accordingly.
    """
    try:
        weight_fn = _WEIGHT_FNS[technique]
    except KeyError:
        raise ParameterError(
            f"unknown noncoherent technique {technique!r}; expected one of "
            f"{sorted(_WEIGHT_FNS)}") from None
    return fuse(weight_fn(y_abs, stats))


def mrc_detect(y, h, p_watts: float):
    """Coherent MRC baseline with perfect per-slot channel knowledge.

    Matched-filter statistic sum_k h_k*y_k compared against the midpoint
    threshold (sqrt(P)/2) * sum_k h_k^2; ties resolve to 0.
    """
    y = np.asarray(y, dtype=float)
    h = np.asarray(h, dtype=float)
    if y.shape != h.shape or y.ndim not in (1, 2) or y.shape[0] == 0:
        raise ParameterError("y and h must be matching nonempty arrays with the node axis first")
    if not p_watts >= 0.0:
        raise ParameterError(f"p_watts must be >= 0, got {p_watts!r}")
    z = (h * y).sum(axis=0)
    threshold = 0.5 * np.sqrt(p_watts) * (h * h).sum(axis=0)
    decision = z > threshold
    if decision.ndim == 0:
        return int(decision)
    return decision.astype(np.int64)
