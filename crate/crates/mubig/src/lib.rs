//! Mixed unit interval bigraphs.
//!
//! Graph and interval models, the forbidden catalog with generators and
//! interval fixtures, a recognizer for mixed unit interval representations,
//! closed-interval searches and the bad-pair repair procedure.

pub mod bigraph;
pub mod bits;
pub mod canon;
pub mod closed;
pub mod diffcon;
pub mod embed;
pub mod enumerate;
pub mod equivalence;
pub mod families;
pub mod fixtures;
pub mod interval;
pub mod par;
pub mod recognize;
pub mod render;
pub mod repair;
pub mod representation;

pub use bigraph::{Bigraph, GraphError, ParseError, Side};
pub use canon::{canonical_form, is_isomorphic, CanonCode};
pub use embed::{induced_subgraph_search, Embedding};
pub use enumerate::enumerate_connected_bipartite;
pub use families::{forbidden_catalog, generate, Family, FamilyError, FamilyId, Modifier};
pub use fixtures::{fixture, FixtureId, Variant};
pub use interval::{Interval, IntervalClass, Rational};
pub use recognize::{recognize_mixed_unit, Budget, RecognitionOutcome, Status};
pub use representation::{
    intersection_bigraph, is_almost_proper, is_mixed_proper, is_mixed_unit, list_bad_pairs, validate, BadPair,
    Representation, ValidityReport,
};
