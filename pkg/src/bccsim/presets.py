"""Named scenario presets matching the reference experiment protocols."""

from __future__ import annotations

from .channels import STRONG_NODES, WEAK_NODES, registry_entry, table1_registry
from .detectors import COMBINATION, DEVIATION, MRC, PROBABILITY
from .errors import ParameterError
from .montecarlo import Scenario

__all__ = ["PRESET_NAMES", "preset"]

PRESET_NAMES = ("fig3", "fig4", "fig5-weak", "fig5-strong", "fig6", "fig7")

_NONCOHERENT = (PROBABILITY, DEVIATION, COMBINATION)
_ALL_TECHNIQUES = (PROBABILITY, DEVIATION, COMBINATION, MRC)
_NT_SWEEP = (10, 20, 50, 100, 200, 500, 1000)


def _nodes(names):
    return tuple(registry_entry(name) for name in names)


def preset(name: str):
    """Build the Scenario for a named preset.

    "fig3" is the per-channel single-node study and returns a list of
    nine K=1 scenarios (one per registry channel); every other name
    returns a single Scenario.
    """
    if name == "fig3":
        return [Scenario(nodes=(profile,), techniques=(PROBABILITY,))
                for profile in table1_registry()]
    if name == "fig4":
        return Scenario(nodes=_nodes(("f9",)), techniques=_ALL_TECHNIQUES)
    if name == "fig5-weak":
        return Scenario(nodes=_nodes(WEAK_NODES), techniques=_NONCOHERENT)
    if name == "fig5-strong":
        return Scenario(nodes=_nodes(STRONG_NODES), techniques=_NONCOHERENT)
    if name == "fig6":
        return Scenario(nodes=tuple(table1_registry()), techniques=_ALL_TECHNIQUES)
    if name == "fig7":
        return Scenario(nodes=_nodes(WEAK_NODES), power_sweep_dbm=(10.0,),
                        nt_sweep=_NT_SWEEP, techniques=_NONCOHERENT)
    raise ParameterError(
        f"unknown preset {name!r}; known presets: {', '.join(PRESET_NAMES)}")
