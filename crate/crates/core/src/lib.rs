//! Simultaneous core partitions and the lattice paths that encode them.
//!
//! A partition is a `t`-core when none of its hook lengths equals `t`. For
//! coprime `s` and `d`, the partitions that are simultaneously
//! `(s, s+d, ..., s+pd)`-core are in bijection with rational Motzkin paths of
//! type `(s+d, -d)` that avoid the factors `U F^i U` for `0 <= i <= p-3`, and
//! those paths are in turn in bijection with a family of generalized Dyck
//! paths. This crate implements the objects, the bijections, the closed
//! counting formulas, and an independent brute-force oracle used to verify
//! everything against first principles.
//!
//! Module layout:
//!
//! - [`partition`]: partitions, hooks, beta-sets, core predicates
//! - [`abacus`]: the extended `(s+d, d)`-abacus and its boundary profile
//! - [`paths`]: rational Motzkin paths, label vectors, generalized Dyck paths
//! - [`bijections`]: core <-> path maps and the path-to-path map `phi`
//! - [`counting`]: exact closed-form counts (arbitrary precision)
//! - [`oracle`]: brute-force enumerators, independent of the above

#![forbid(unsafe_code)]

pub mod abacus;
pub mod bijections;
pub mod counting;
pub mod oracle;
pub mod partition;
pub mod paths;

pub use abacus::{BoundaryProfile, ExtendedAbacus};
pub use partition::{BetaSet, CoreFamily, Partition};
pub use paths::{GenDyckPath, GenStep, LabelVector, RationalMotzkinPath, Step, StepWord};
