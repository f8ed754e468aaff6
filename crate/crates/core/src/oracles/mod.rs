//! Independent reference implementations used as ground truth in tests and
//! in the `oracle-compare` command.

pub mod arith;
pub mod classical;
pub mod matroid;
pub mod preorder;
pub mod tropical;

pub use classical::{classical_wedge, ClassicalExteriorElement};
pub use matroid::{basis_exchange_check, subspace_plucker_enumerate, tropical_plucker_check};
pub use preorder::brute_force_preorder;
pub use tropical::{tropical_wedge, TropicalExteriorElement};
