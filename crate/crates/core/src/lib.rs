//! Spanning trees of small average distance, bounded by the independence
//! number.
//!
//! Every connected graph `G` with independence number `alpha` has a
//! spanning tree `T` with `mu(T) < alpha + 1`, and for `alpha >= 7` and
//! `n >= 2 alpha` even `mu(T) < alpha + 1/2 + 4(alpha - 1)/alpha^2`. This
//! crate builds such trees, emits certificates for the bound, and checks
//! everything against exact brute force.
//!
//! All quantities are exact: Wiener indices are integers and average
//! distances are [`rational::Rational`].
//!
//! ```
//! use spanmu::construct::{build_spanning_tree, verify_certificate, BuildOptions};
//! use spanmu::graph::Graph;
//! use spanmu::mis::independence_number;
//!
//! let g = Graph::cycle(7).unwrap();
//! let alpha = independence_number(&g);
//! let out = build_spanning_tree(&g, BuildOptions::default()).unwrap();
//! assert!(verify_certificate(&g, &out.tree, &out.certificate, Some(alpha)).is_ok());
//! ```

pub mod construct;
pub mod format;
pub mod formulas;
pub mod graph;
pub mod mis;
pub mod oracle;
pub mod rational;
pub mod trees;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/average-distance.md")]
    mod average_distance {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/independence.md")]
    mod independence {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
