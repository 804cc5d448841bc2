//! Top-level procedures: the finiteness classifier for covers, classification
//! of degree-`d` points over a finite Mordell-Weil group, the construction of
//! curves with a prescribed primitive point, fiber sampling and the
//! quadratic-twist census.

mod classes;
mod construct;
mod finiteness;
mod twist;

pub use classes::{
    class_divisor, class_labels, class_representatives, classify_class, classify_points, degree_shift,
    enumerate_classes, format_label, skip_reason, ClassInfo, MWSpec, OrbitVerdict, Outcome, SkipReason, Summary,
};
pub use construct::{
    construct_primitive_curve, fiber_function, is_admissible, specialize_fiber, witness_field, FiberOutcome,
    FiberReport, PrimitiveConstruction,
};
pub use finiteness::{
    classify_finiteness, classify_row, cs_bound, Cover, Finite, FinitenessInput, FinitenessReason,
    FinitenessVerdict, Hypothesis, TableRow, TableVerdict,
};
pub use twist::{
    abscissae, check_census_input, search_twist, squarefree_twists, tabulate, twist_census, TwistCensusResult,
    TwistHit,
};
