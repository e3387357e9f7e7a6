//! Exact checkers and constructors for unweighted graph-synthesis problems.
//!
//! Every decision procedure in this crate is two-sided: a feasible instance
//! yields a constructed witness that is re-verified before it is returned,
//! and an infeasible instance yields a violating certificate that can be
//! re-evaluated independently. The problem families covered are
//!
//! * simple bipartite graphs fitting exact degree specifications
//!   ([`realize::check_gale_ryser`], [`realize::construct_gale_ryser`]),
//! * simple bipartite graphs covering a supermodular demand function on one
//!   side, under exact degrees, degree bounds, and edge-count bounds
//!   (the rest of [`realize`]),
//! * packings of arc-disjoint branchings with prescribed or bounded sizes
//!   and indegrees ([`branchings`]),
//! * 0-1 matrices / bigraphs of maximum term rank ([`termrank`]),
//! * forests with exact degrees on one side and wooded hypergraphs
//!   ([`forests`]).
//!
//! The [`oracle`] module re-decides every family by exhaustive search with
//! deliberately independent code; it is the trust anchor for the test suite.
//!
//! The crate is `no_std`-compatible (requires `alloc`). Node subsets are
//! bitmasks over at most 64 elements, and the subset dynamic programs cap
//! the relevant ground sets at 16 elements.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bits;
pub mod branchings;
pub mod error;
pub mod ext;
pub mod forests;
pub mod graph;
pub mod oracle;
pub mod realize;
pub mod setfn;
pub mod termrank;

pub use error::Error;
pub use ext::Ext;

/// Result of a decision or construction: either a witness or a certificate
/// of infeasibility. Errors (bad input, capacity, internal defects) travel
/// separately as [`Error`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<W, C> {
    Feasible(W),
    Infeasible(C),
}

impl<W, C> Outcome<W, C> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Outcome::Feasible(_))
    }

    pub fn feasible(self) -> Option<W> {
        match self {
            Outcome::Feasible(w) => Some(w),
            Outcome::Infeasible(_) => None,
        }
    }

    pub fn infeasible(self) -> Option<C> {
        match self {
            Outcome::Feasible(_) => None,
            Outcome::Infeasible(c) => Some(c),
        }
    }
}

/// Outcome of a pure check: no witness beyond "feasible".
pub type Verdict<C> = Outcome<(), C>;
