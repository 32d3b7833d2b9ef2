"""Physical-layer model: unit bridges, OOK symbol frames, per-slot fading.

The received amplitude at node k in slot n is
``y = sqrt(P) * h * x + noise`` with a fresh independent channel draw per
node and per slot (fast-varying channels), and real Gaussian noise of
variance N0*B/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

__all__ = [
    "LinkParams",
    "ReceivedFrame",
    "dbm_to_watts",
    "noise_variance",
    "training_symbols",
    "generate_data_symbols",
    "generate_received",
]


def dbm_to_watts(p_dbm: float) -> float:
    """Convert dBm to watts.  -inf maps to 0 W (the zero-power limit)."""
    p_dbm = float(p_dbm)
    if np.isnan(p_dbm) or p_dbm == np.inf:
        raise ParameterError(f"power in dBm must not be NaN or +inf, got {p_dbm!r}")
    return float(10.0 ** ((p_dbm - 30.0) / 10.0))


def noise_variance(n0_dbm_per_hz: float, bandwidth_hz: float) -> float:
    """Real-noise variance N0*B/2 in watts."""
    if not bandwidth_hz >= 0.0:
        raise ParameterError(f"bandwidth_hz must be >= 0, got {bandwidth_hz!r}")
    return dbm_to_watts(n0_dbm_per_hz) * bandwidth_hz / 2.0


@dataclass(frozen=True)
class LinkParams:
    """Transmit power, noise spectral density, and bandwidth of one link."""

    tx_power_dbm: float
    n0_dbm_per_hz: float = -174.0
    bandwidth_hz: float = 1.0e5

    def __post_init__(self):
        dbm_to_watts(self.tx_power_dbm)
        noise_variance(self.n0_dbm_per_hz, self.bandwidth_hz)

    @property
    def tx_power_w(self) -> float:
        return dbm_to_watts(self.tx_power_dbm)

    @property
    def noise_variance_w(self) -> float:
        return noise_variance(self.n0_dbm_per_hz, self.bandwidth_hz)


def training_symbols(n_t: int) -> np.ndarray:
    """Known training pattern: n_t/2 ones followed by n_t/2 zeros."""
    if n_t < 2 or n_t % 2:
        raise ParameterError(f"n_t must be an even integer >= 2, got {n_t!r}")
    x = np.zeros(n_t, dtype=np.int64)
    x[: n_t // 2] = 1
    return x


def generate_data_symbols(n: int, rng) -> np.ndarray:
    """n i.i.d. equiprobable OOK symbols; a uniform draw < 0.5 maps to symbol 1."""
    if n < 1:
        raise ParameterError(f"symbol count must be >= 1, got {n!r}")
    return (rng.random(n) < 0.5).astype(np.int64)


@dataclass(frozen=True)
class ReceivedFrame:
    """Received amplitudes of one frame.

    ``y`` holds one row per node and one column per slot.  ``h`` carries
    the channel gains that produced it, kept as oracle access for the
    coherent baseline.  ``x`` is the transmitted symbol sequence.
    """

    y: np.ndarray
    x: np.ndarray
    h: np.ndarray
    params: LinkParams

    @property
    def n_nodes(self) -> int:
        return self.y.shape[0]

    @property
    def n_slots(self) -> int:
        return self.y.shape[1]


def generate_received(x, nodes, params: LinkParams, rng) -> ReceivedFrame:
    """Push symbols through K fading links: y = sqrt(P) * h * x + noise.

    Every node and every slot gets a fresh independent channel draw, so
    no slot can be equalized from a neighbor.  Draw order per call: one
    uniform block (K, N) for the channels, then one normal block (K, N)
    for the noise; this makes frames bit-reproducible for a given stream.
    """
    x = np.asarray(x)
    if x.ndim != 1 or x.size == 0:
        raise ParameterError("x must be a nonempty 1-D symbol array")
    if not np.all((x == 0) | (x == 1)):
        raise ParameterError("symbols must be 0 or 1")
    nodes = tuple(nodes)
    if not nodes:
        raise ParameterError("nodes must be a nonempty list of receive nodes")
    shape = (len(nodes), x.size)
    u = rng.random(shape)
    h = np.empty(shape)
    for i, node in enumerate(nodes):
        h[i] = node.dist.inverse_cdf(u[i])
    noise = rng.normal(0.0, np.sqrt(params.noise_variance_w), shape)
    y = np.sqrt(params.tx_power_w) * h * x + noise
    return ReceivedFrame(y=y, x=x, h=h, params=params)
