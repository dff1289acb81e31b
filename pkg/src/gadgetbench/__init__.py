"""Exact reduction gadgets, solvers, and audit tooling for 3SUM-hard
geometric containment and Hausdorff-distance problems.

The usual flow: build or load an instance (``instances``, ``generators``,
``files``), walk it down the reduction chain (``linear``, ``combs``,
``rotation``, ``hausdorff``), solve each stage with its exact or certified
solver, and let ``pipeline`` compare the answers against brute oracles.
"""

from .combs import CombPair, CombParams, build_comb_pair, comb_polygon, default_fattening, fatten
from .config import Config, load_config
from .containment import PlacementWitness, polygon_contains_at, solve_cpct, solve_polycont
from .errors import (
    BoundsExceeded,
    BudgetExceeded,
    ChainInvalid,
    DegenerateInput,
    GadgetbenchError,
    InvalidFattening,
    PreconditionViolated,
    ProvenanceRequired,
)
from .generators import generate
from .geometry import (
    ConvexPolygon,
    Interval,
    IntervalSet,
    Point2,
    Polygon,
    Side,
    convex_hull,
    orient2d,
    point_in_polygon,
)
from .hausdorff import (
    DistanceBounds,
    Line,
    Segment,
    SegmentSet,
    SeparationBound,
    ThresholdDecision,
    certify_threshold,
    compute_epsilon,
    decide_threshold,
    directed_hausdorff,
    hausdorff,
    min_directed_1d,
    min_hausdorff_translation,
    reduce_to_hausdorff,
)
from .instances import (
    EqDistInstance,
    PairSumIdx,
    Provenance,
    QuadIdx,
    SegContPntInstance,
    Shift,
    ThreeSumInstance,
    ThreeSumPrimeInstance,
    TripleIdx,
)
from .linear import (
    extend_to_segcontpnt,
    feasible_shifts,
    infeasibility_margin,
    normalize_to_unit_interval,
    one_dim_slack,
    reduce_3sum_to_prime,
    reduce_prime_to_3sum,
    reduce_prime_to_eqdist,
    solve_3sum,
    solve_3sum_prime,
    solve_eqdist,
    solve_segcontpnt,
    verify_3sum,
    verify_3sum_prime,
    verify_eqdist,
    verify_segcontpnt,
)
from .pipeline import AuditReport, InstanceAudit, StageRecord, audit_batch, run_pipeline
from .rotation import (
    ArcSet,
    FlipProbe,
    RotationVerdict,
    WedgePolygon,
    build_wedge,
    circle_map,
    flip_probe,
    pad_and_normalize,
    solve_rigid,
    solve_rotation,
    verify_rotation_angle,
    wedges_from_instance,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
