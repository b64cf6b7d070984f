//! Graded mod 2 cohomology rings of dihedral and cyclic groups, total
//! Stiefel-Whitney classes of `xi_{n,k}`, their duals, restriction maps and
//! the test-graph classification built on them.

mod classify;
mod restrict;
mod ring;
mod sw;

pub use classify::{classify, vanishing_window, vanishing_windows, ClassificationReport, Verdict, Window};
pub use restrict::{restrict, Restriction};
pub use ring::{ring_for, GradedPoly, RingCase, RingDescriptor, DEFAULT_MAX_DEGREE};
pub use sw::{total_sw_class, total_sw_class_from_blocks, wbar};
