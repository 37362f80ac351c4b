//! Bounded powers of graph edge ideals.
//!
//! For a simple graph `G` on vertices `1..=n` and a positive capacity vector
//! `c`, the engine computes the saturation exponent `δ_c(I(G))` (the largest
//! size of an edge multiset whose degree vector stays below `c`), enumerates
//! the discrete polymatroid base set `B(G, c)`, materializes the ground-set
//! rank function and decides whether `conv(D(G, c))` is a Gorenstein polytope
//! through its closed and inseparable subsets.
//!
//! Module map:
//!
//! * [`graph`]: validated graphs, graph files, family constructors, matchings.
//! * [`polymatroid`]: `δ`, exact degree realizability, base enumeration.
//! * [`rank`]: rank tables, closedness and inseparability.
//! * [`gorenstein`]: the Gorenstein verdict and H-description checks.
//! * [`harness`]: classification predicates and parameter sweeps.
//! * [`cli`]: the `polymat` command line front end.

pub mod cli;
pub mod error;
pub mod gorenstein;
pub mod graph;
pub mod harness;
mod flow;
pub mod polymatroid;
pub mod rank;

pub use error::{Error, Result};
pub use gorenstein::{gorenstein_report, verify_h_description, GorensteinReport, HDescription};
pub use graph::{FamilySpec, Graph};
pub use polymatroid::{bases, delta, is_realizable, BaseSet, CapacityVector, ExponentVector};
pub use rank::{rank_table, RankTable, Subset};

/// Serializes with object keys in sorted order, on one line.
pub fn to_canonical_json<T: serde::Serialize>(value: &T) -> String {
    // `serde_json::Value` keeps objects in a BTreeMap
    serde_json::to_value(value)
        .and_then(|v| serde_json::to_string(&v))
        .expect("report types always serialize")
}
