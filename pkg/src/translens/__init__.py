"""Compression-based transition coefficients for automata dynamics.

The package measures how strongly a computing system reacts to changes in
its input: evolutions over a canonical enumeration of initial conditions
are serialized, compressed with a fixed dictionary compressor, and the
growth rate of the resulting sensitivity curve is the system's transition
coefficient.  Elementary cellular automata and small Turing machines are
built in, together with exhaustive Busy Beaver search and a desk-scale
logical-depth estimator.
"""

__version__ = "0.1.0"

from translens.compressor import (
    COMPRESSOR_VERSION,
    MalformedTokenError,
    TokenStream,
    compress,
    compressed_length,
    decompress,
)
from translens.enumeration import init_condition, initial_conditions
from translens.eca import EcaRule, EcaSystem, SpaceTimeDiagram, evolve, serialize, step
from translens.coefficient import (
    DegenerateInputError,
    TransitionCoefficient,
    TransitionSeries,
    characteristic_exponent,
    least_squares_slope,
    transition_coefficient,
    transition_series,
)
from translens.turing import (
    Background,
    RunResult,
    TapeState,
    TmSystem,
    TuringMachine,
    final_pattern,
    run,
    spacetime,
)
from translens.busy_beaver import (
    BusyBeaverRecord,
    DepthEstimate,
    logical_depth_estimate,
    nonhalt_detect,
    search,
    search_full,
    verify,
)
from translens.experiments import (
    ClassificationReport,
    classify_all,
    conjecture1_report,
    conjecture3_report,
)
