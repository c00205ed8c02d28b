//! Exact tools for matchings in k-uniform hypergraphs.
//!
//! Families of k-subsets of `{1..n}` ([`KGraph`]), their matching, cover and
//! clique numbers, shifting, the named extremal constructions with exact
//! counts, bound tables, cross-intersecting families, and an exhaustive
//! search for the largest family with bounded matching number.
//!
//! All arithmetic on counts and bounds is exact.

pub mod binomial;
pub mod bounds;
pub mod crossint;
mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod khg;
pub mod search;
pub mod shifting;

pub use binomial::binomial;
pub use bounds::{bounds_report, BoundReport, Winner};
pub use crossint::{is_cross_intersecting, max_cross_sum_oracle, sfq_bound, CrossSystem};
pub use error::{Error, Result};
pub use families::{count_family, gen_family, FamilyKind, FamilySpec};
pub use graph::{Edge, KGraph, LinkKind};
pub use invariants::{
    clique_number, matching_number, vertex_cover_number, InvariantResult, Witness, DEFAULT_BUDGET,
};
pub use khg::{read_khg, write_khg};
pub use search::{max_family, verify_report, Certificate, SearchMode, SearchProblem};
pub use shifting::{shift, shift_closure, Relabeling, ShiftTrace};
