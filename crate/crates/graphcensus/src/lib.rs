//! Exact counts of small graphs by edges and vertices.
//!
//! The crate enumerates isomorphism classes of directed and undirected graphs
//! (loops and multiedges allowed), tags each class with its connectivity,
//! isolated-vertex, multiedge and loop properties, and tallies unlabeled and
//! vertex-labeled counts. Connected loopless multigraphs are also counted by
//! Pólya substitution into edge cycle indices, and graphs with several
//! components are assembled from connected ones by the multiset transform.
//!
//! ```
//! use graphcensus::census::{count, CensusQuery};
//!
//! // connected simple undirected graphs with 6 edges on 6 vertices
//! let q = CensusQuery::new("-dc-i-m-l".parse().unwrap(), false, 6, 6);
//! let t = count(&q).unwrap();
//! assert_eq!(t.get(6, 6).unwrap().to_string(), "13");
//! ```

mod canon;
pub mod census;
pub mod classify;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod mset;
pub mod polya;
pub mod verify;

pub use census::{CensusQuery, CountTable};
pub use classify::{classify, impossible_patterns, pattern_matches, TagPattern, TagSet};
pub use error::{Error, Result};
pub use graph::{
    automorphism_info, automorphisms, canonical_form, AutomorphismInfo, CanonicalKey, Graph,
};

// The book's snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/tags.md")]
    mod tags {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/polya.md")]
    mod polya {}
    #[doc = include_str!("../../../book/src/multisets.md")]
    mod multisets {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
