//! Generating functions of connected loopless multigraphs by Pólya substitution.
//!
//! Every connected multigraph without loops collapses to a connected simple
//! graph. Replacing each edge of that underlying graph by one or more
//! parallel edges and averaging over its automorphisms is the substitution
//! `t_i = x^i / (1 - x^i)` into the cycle index of the automorphism group
//! acting on the edges.

mod cycle_index;
mod gf;
mod poly;
mod symmetric;
mod underlying;

pub use cycle_index::{edge_cycle_index, polya_substitute, CycleIndex, CycleType, Weight};
pub use gf::{series_expand, FactoredGf, RationalGf};
pub use poly::Poly;
pub use symmetric::{connected_table, graph_totals};
pub use underlying::{
    ancillary_files, connected_multigraph_gf, connected_multigraph_gf_factored,
    connected_simple_gf, connected_simple_graphs, read_underlying_records, series_strings,
    underlying_records, write_underlying_records, UnderlyingGraphRecord,
};
