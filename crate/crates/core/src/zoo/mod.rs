//! Named groups, finite fields and the component constructions used to
//! build CD-minimal groups.

pub mod components;
pub mod field;
pub mod named;
pub mod spec;
pub mod unitriangular;

pub use components::{
    brewster, brewster_quotient, center_action, expected_hk, hypothesis_check, minimal, prop9_action, s0, theorem2_build,
    theorem2_order, Component, HypothesisReport, Theorem2Group,
};
pub use field::{make_field, Field, FieldElement};
pub use named::{cyclic, dih, elemab, extraspecial, q8, qd16, sym, trivial, Extraspecial};
pub use spec::{parse_spec, Evaluated, GroupSpec, ParseError};
pub use unitriangular::unitriangular;
