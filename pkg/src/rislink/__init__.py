"""Channel gain, path gain and wideband capacity of a RIS-relayed D-band link."""

from .antenna import (
    CosinePattern,
    GainValue,
    exponent_from_gain,
    gain_from_pattern,
    pattern_value,
)
from .atmosphere import (
    AbsorptionSpectrum,
    AtmosphereState,
    default_spectrum,
    load_spectrum,
    transmittance,
    vacuum_spectrum,
)
from .capacity import (
    NoiseSpec,
    PowerAllocation,
    SubBandPlan,
    capacity,
    equal_power_allocation,
    make_subband_plan,
    snr_per_band,
)
from .channel import (
    SPEED_OF_LIGHT,
    ChannelConfig,
    ComplexGain,
    ReflectionCoefficient,
    channel_gain_exact,
    channel_gain_far_field,
    channel_gain_specular,
    path_gain_db,
)
from .config import Scenario, load_scenario, resolve_spectrum
from .geometry import (
    CellIndex,
    LinkGeometry,
    NodePosition,
    RisGrid,
    cell_center,
    cell_distance,
    far_field_boundary,
    geometry_from_positions,
    positions_from_geometry,
    specular_geometry,
)
from .output import Table
from .presets import figure_preset
from .sweep import SweepAxis, SweepSpec, run_point, run_sweep

__version__ = "0.1.0"

__all__ = [
    "AbsorptionSpectrum",
    "AtmosphereState",
    "CellIndex",
    "ChannelConfig",
    "ComplexGain",
    "CosinePattern",
    "GainValue",
    "LinkGeometry",
    "NodePosition",
    "NoiseSpec",
    "PowerAllocation",
    "ReflectionCoefficient",
    "RisGrid",
    "SPEED_OF_LIGHT",
    "Scenario",
    "SubBandPlan",
    "SweepAxis",
    "SweepSpec",
    "Table",
    "capacity",
    "cell_center",
    "cell_distance",
    "channel_gain_exact",
    "channel_gain_far_field",
    "channel_gain_specular",
    "default_spectrum",
    "equal_power_allocation",
    "exponent_from_gain",
    "far_field_boundary",
    "figure_preset",
    "gain_from_pattern",
    "geometry_from_positions",
    "load_scenario",
    "load_spectrum",
    "make_subband_plan",
    "path_gain_db",
    "pattern_value",
    "positions_from_geometry",
    "resolve_spectrum",
    "run_point",
    "run_sweep",
    "snr_per_band",
    "specular_geometry",
    "transmittance",
    "vacuum_spectrum",
    "__version__",
]
