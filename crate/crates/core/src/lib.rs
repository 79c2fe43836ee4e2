//! Combinatorics of Hessenberg Schubert varieties in type A.
//!
//! The crate computes subsets of Weyl type `S ⊆ Φ_h⁺` for a Hessenberg
//! function `h`, the partition of `S_n` into weak-order intervals they
//! induce, the matching acyclic orientations of the incomparability graph
//! `Γ_h`, reachability on those orientations, and the torus-fixed points of
//! opposite Hessenberg Schubert varieties by two independent routes:
//! the reachability sets `J_{w,h,k}` and Bruhat intervals `[w_S, w_0]`.
//!
//! Indices, one-line notation and roots `t_i - t_j` are 1-based throughout.
//!
//! ```
//! use hessenberg_schubert::{HessenbergFunction, Permutation, WeylSubset};
//!
//! let h = HessenbergFunction::new(&[3, 4, 4, 4]).unwrap();
//! let w = Permutation::from_one_line(&[2, 3, 1, 4]).unwrap();
//! let s = WeylSubset::of_permutation(&w, &h).unwrap();
//! assert_eq!(s.w_max(), w);
//! assert_eq!(
//!     hessenberg_schubert::fixed_points_chl(&w, &h).unwrap(),
//!     hessenberg_schubert::fixed_points_interval(&s),
//! );
//! ```

pub mod error;
pub mod fixed;
pub mod hessenberg;
#[cfg(feature = "oracles")]
pub mod oracles;
pub mod order;
pub mod par;
pub mod perm;
pub mod reach;
#[cfg(feature = "oracles")]
pub mod verify;
pub mod weyl;

/// Largest supported `n`. Root sets are packed into 121 bits.
pub const MAX_N: usize = 11;

pub use error::{ClosureViolation, Error, Result};
pub use fixed::{
    dimension_report, fixed_points_cell, fixed_points_chl, fixed_points_interval, fixed_points_schubert,
    reducibility_witness, DimensionReport,
};
pub use hessenberg::{enumerate_hessenberg, HessenbergFunction, IncomparabilityGraph, ReducedHessenberg};
pub use order::{bruhat_interval, bruhat_leq, ktuple_leq, sort_action, weak_interval, weak_left_leq, KTuple};
pub use par::Exec;
pub use perm::{Permutation, Root, RootSet};
pub use reach::{is_reachable, j_set, largest_source, set_reachable, sources, ReachabilityTable};
pub use weyl::{
    enumerate_weyl_subsets, is_weyl_type, subset_of_orientation, weyl_subset_of, Direction, InducedSubset, Orientation,
    WeylSubset,
};
