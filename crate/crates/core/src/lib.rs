//! Power graphs of finite groups and their L(2,1)-labeling number λ.
//!
//! Groups are built as Cayley tables ([`groups`]), turned into power graphs
//! ([`powergraph`]) and measured with exact invariants ([`invariants`]).
//! λ is computed by [`exact::lambda_exact`], which combines the bound
//! [`ledger`], the complement path-cover formula and a backtracking search,
//! and is checked against the closed forms in [`oracle`].

pub mod arith;
pub mod corpus;
pub mod error;
pub mod exact;
pub mod graph;
pub mod groups;
pub mod groupspec;
pub mod invariants;
pub mod labeling;
pub mod ledger;
pub mod limits;
pub mod oracle;
pub mod powergraph;

pub use error::{Error, Result};
pub use exact::{lambda_exact, ExactOptions, LambdaReport, Method};
pub use graph::Graph;
pub use groups::{Descriptor, FiniteGroup, Permutation};
pub use groupspec::{parse_group_spec, GroupSpec};
pub use labeling::{validate_l21, Labeling};
pub use limits::Limits;
pub use powergraph::{build_power_graph, PowerGraph};
