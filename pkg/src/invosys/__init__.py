"""Toolkit for finitely generated involution systems.

Parses presentations over involution generators, certifies word-level
properties (sign character, 2-recognizability, the rank-3 classification),
builds certified Cayley-graph balls, computes the weak order with meets and
joins, extracts irreducible cycles and canonical presentations, and compares
systems against their Coxeter companions (growth, cone types, walls and the
voracious language).
"""

from .presentation import (
    CyclicClass,
    Presentation,
    Rank3Class,
    classify_rank3,
    cyc,
    cyc_canonical,
    free_reduce,
    has_sign_character,
    inverse,
    is_two_recognizable,
    make_presentation,
    parse_presentation,
    rank3_presentation,
)
from .engine import (
    CayleyBall,
    FiniteGroupTable,
    NotClosedWithinLimit,
    UNKNOWN,
    ball_from_table,
    build_ball,
    dehn_reduce,
    equal,
    todd_coxeter,
)
from .weakorder import (
    AuditResult,
    HasseBall,
    MedianResult,
    NoJoin,
    NoMeet,
    Unbounded,
    UnknownWithinRadius,
    audit_semilattice,
    descents,
    is_median,
    join,
    leq,
    meet,
    orient,
)
from .cycles import (
    AtLeast,
    CoxeterGraph,
    Cycle,
    companion_graph,
    coxeter_type,
    extract_presentation,
    irreducible_cycles_at,
    is_convex,
    is_coxeter,
    nu_word,
    weak_intersection_check,
)
from .companion import (
    ConeTypeIndex,
    IsoResult,
    Wall,
    WallSeparation,
    companion_presentation,
    cone_types,
    elementary_walls,
    growth_coefficients,
    quasi_coxeter_test,
    transported_walls,
    voracious_language,
    voracious_member,
    voracious_projection,
    walls,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
