"""Link-level simulator and noncoherent OOK detectors for body-channel
communication with distributed receive nodes.

The package splits into five layers:

* :mod:`bccsim.channels`   -- Burr XII / Weibull amplitude laws, exact
  inverse-transform sampling, and the f1..f9 registry.
* :mod:`bccsim.link`       -- unit conversions, training/data symbols, and
  the per-slot received-signal model.
* :mod:`bccsim.detectors`  -- training statistics, the probability /
  deviation / combination weights, fusion, and the coherent MRC baseline.
* :mod:`bccsim.montecarlo` -- seeded, parallel BER estimation over power
  and training-length sweeps.
* :mod:`bccsim.cli`        -- scenario files, figure presets, CSV output.
"""

from .channels import (
    STRONG_NODES,
    WEAK_NODES,
    BurrXII,
    DistributionSpec,
    NodeProfile,
    Weibull,
    burr_inverse_cdf,
    registry_entry,
    registry_name,
    sample_channel,
    table1_registry,
    weibull_inverse_cdf,
)
from .config import load_scenario, loads_scenario, scenario_to_config
from .detectors import (
    COMBINATION,
    DEVIATION,
    MRC,
    PROBABILITY,
    TECHNIQUES,
    TrainingStats,
    WeightPair,
    comb_weights,
    compute_training_stats,
    detect,
    dev_weights,
    fuse,
    mrc_detect,
    prob_weights,
)
from .errors import ConfigError, DegenerateTrainingError, DomainError, ParameterError
from .link import (
    LinkParams,
    ReceivedFrame,
    dbm_to_watts,
    generate_data_symbols,
    generate_received,
    noise_variance,
    training_symbols,
)
from .montecarlo import (
    BerPoint,
    Scenario,
    make_ber_point,
    run_nt_sweep,
    run_point,
    run_scenario,
    run_sweep,
)
from .presets import PRESET_NAMES, preset

__version__ = "0.1.0"
