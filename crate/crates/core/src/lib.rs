//! Joint distributions of ascent, descent, record and disjoint-pair
//! statistics over permutations avoiding two patterns of length 3.
//!
//! The crate enumerates avoidance classes, evaluates the statistics, stores
//! the known rational generating functions for each class and checks them
//! against exhaustive enumeration. It also provides the two composition-based
//! bijections that swap ascents and descents on the structured classes.

pub mod bijections;
pub mod catalog;
pub mod error;
pub mod perm;
pub mod poly;
pub mod stats;
pub mod verify;

pub use bijections::{map_f, map_g, Composition};
pub use catalog::{class_count, gf_for, single_stat_gf, GfFamily, SymmetryOp, SymmetryTransform};
pub use error::{BijectionError, CatalogError, PermError, PolyError};
pub use perm::{enumerate_class, Pattern, PatternPair, Permutation};
pub use poly::{expand, Monomial, MultiPoly, RationalGF, SeriesTable, Var};
pub use stats::{stat_vector, StatVector, Statistic};
pub use verify::{brute_distribution, DistributionPoly, VerifyReport};
