"""Beamforming gain with nonideal phase shifters.

Convex-geometry tools, worst-case shortfall constants, exact discrete
beamforming solvers, and a Monte Carlo fading harness.
"""

from .bounds import (
    BoundReport,
    asymptotic_constants,
    best_constant,
    build_report,
    crude_constant,
    onoff_small_n_constant,
    refined_constant,
    shortfall_db,
)
from .geometry import (
    ConvexPolygon,
    SupportEvaluation,
    convex_hull,
    mean_width,
    min_support,
    minkowski_sum,
    perimeter,
    scale_rotate,
    support,
    width,
)
from .sets import (
    Arc,
    CustomSamples,
    Discrete,
    FeasibleSet,
    OnOff,
    RegularMGon,
    RisLorentz,
    ShiftedCircle,
    from_descriptor,
)
from .solver import (
    BeamformingSolution,
    PhasorChannel,
    brute_force,
    greedy_quantize,
    ideal_gain,
    onoff_subset_check,
    ris_solve,
    solve_angle_sweep,
    solve_minkowski,
    tightness_channel,
    worst_case_channel,
)
from .fading import FadingConfig, FadingRecord, convergence_experiment, expected_modulus, sample_channel

__version__ = "0.1.0"
