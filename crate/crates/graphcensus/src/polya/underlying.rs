//! Connected simple graphs as supports of multigraphs, and the `G.V.E.txt` files.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::cycle_index::{edge_cycle_index, polya_substitute, CycleIndex, Weight};
use super::gf::{FactoredGf, RationalGf};
use super::poly::Poly;
use crate::census::{Census, Family};
use crate::error::{Error, Result};
use crate::graph::{automorphism_info, canonical_form, Graph};

/// One connected simple graph with its labeled multiplicity and edge cycle index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderlyingGraphRecord {
    /// Canonical representative.
    pub graph: Graph,
    /// Tag string, e.g. `-dc-i-m-l`.
    pub label: String,
    /// `V! / |Aut|`.
    pub multiplicity: u64,
    pub edge_cycle_index: CycleIndex,
}

impl UnderlyingGraphRecord {
    pub fn new(g: &Graph) -> Result<Self> {
        let z = edge_cycle_index(g)?;
        let graph = canonical_form(g).to_graph();
        Ok(UnderlyingGraphRecord {
            label: crate::classify::classify(&graph).to_string(),
            multiplicity: automorphism_info(&graph).orbit_weight,
            edge_cycle_index: z,
            graph,
        })
    }
}

fn check_vertices(v: usize) -> Result<()> {
    if !(2..=7).contains(&v) {
        return Err(Error::OutOfRange(format!("vertex count {v} outside 2..=7")));
    }
    Ok(())
}

/// Connected simple graphs with `edges` edges on `vertices` vertices, sorted
/// by canonical key.
pub fn underlying_records(vertices: usize, edges: usize) -> Result<Vec<UnderlyingGraphRecord>> {
    let mut census = Census::new(Family::simple(false));
    records_from(&mut census, vertices, edges)
}

fn records_from(census: &mut Census, vertices: usize, edges: usize) -> Result<Vec<UnderlyingGraphRecord>> {
    if vertices == 0 || edges > vertices * (vertices - 1) / 2 {
        return Ok(Vec::new());
    }
    let graphs: Vec<Graph> = census
        .classes(edges, vertices)?
        .iter()
        .filter(|c| c.tags.weakly_connected)
        .map(|c| c.graph())
        .collect();
    graphs.par_iter().map(UnderlyingGraphRecord::new).collect()
}

/// All connected simple graphs on `vertices` vertices, by increasing edge count.
pub fn connected_simple_graphs(vertices: usize) -> Result<Vec<UnderlyingGraphRecord>> {
    let mut census = Census::new(Family::simple(false));
    let mut out = Vec::new();
    for e in vertices.saturating_sub(1)..=vertices * vertices.saturating_sub(1) / 2 {
        out.extend(records_from(&mut census, vertices, e)?);
    }
    Ok(out)
}

/// Generating function, by edge count, of connected loopless multigraphs on
/// `vertices` vertices, in factored form.
pub fn connected_multigraph_gf_factored(vertices: usize) -> Result<FactoredGf> {
    check_vertices(vertices)?;
    let records = connected_simple_graphs(vertices)?;
    let parts: Vec<FactoredGf> = records
        .par_iter()
        .map(|r| r.edge_cycle_index.substitute_at_least_one())
        .collect();
    Ok(parts.iter().fold(FactoredGf::zero(), |acc, g| acc.add(g)).reduced())
}

/// Generating function, by edge count, of connected loopless multigraphs on
/// `vertices` vertices (`2 <= vertices <= 7`).
///
/// ```
/// use graphcensus::polya::connected_multigraph_gf;
///
/// let g = connected_multigraph_gf(4).unwrap();
/// let s: Vec<String> = g.series(12).unwrap().iter().map(|c| c.to_string()).collect();
/// assert_eq!(s.join(","), "0,0,0,2,5,11,22,37,61,95,141,203");
/// ```
pub fn connected_multigraph_gf(vertices: usize) -> Result<RationalGf> {
    Ok(connected_multigraph_gf_factored(vertices)?.to_rational())
}

/// `sum over connected simple graphs of x^E`, i.e. the same sum with `t_i = x`.
pub fn connected_simple_gf(vertices: usize) -> Result<RationalGf> {
    check_vertices(vertices)?;
    let records = connected_simple_graphs(vertices)?;
    Ok(records.iter().fold(RationalGf::from_poly(Poly::zero()), |acc, r| {
        &acc + &polya_substitute(&r.edge_cycle_index, Weight::CountUnderlying)
    }))
}

/// Renders a `G.V.E.txt` document: a `V E` line, then per graph its
/// adjacency matrix, a `<tags> <multiplicity>` line and its cycle index.
///
/// ```
/// use graphcensus::polya::{underlying_records, write_underlying_records};
///
/// let text = write_underlying_records(3, 2, &underlying_records(3, 2).unwrap()).unwrap();
/// assert_eq!(text, "3 2\n0 0 1\n0 0 1\n1 1 0\n-dc-i-m-l 3\n(t1^2 + t2^1)/2\n");
/// ```
pub fn write_underlying_records(
    vertices: usize,
    edges: usize,
    records: &[UnderlyingGraphRecord],
) -> Result<String> {
    let mut out = format!("{vertices} {edges}\n");
    for r in records {
        if r.graph.vertex_count() != vertices || r.graph.edge_count() != edges {
            return Err(Error::Incompatible(format!(
                "record with V={} E={} in file for V={vertices} E={edges}",
                r.graph.vertex_count(),
                r.graph.edge_count()
            )));
        }
        out.push_str(&r.graph.to_matrix_text());
        writeln!(out, "{} {}", r.label, r.multiplicity).unwrap();
        writeln!(out, "{}", r.edge_cycle_index).unwrap();
    }
    Ok(out)
}

/// Reads a document written by [`write_underlying_records`].
pub fn read_underlying_records(text: &str) -> Result<(usize, usize, Vec<UnderlyingGraphRecord>)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    let nums: Vec<usize> = head
        .split_whitespace()
        .map(|s| s.parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::parse(1, "header must be `V E`"))?;
    let [v, e] = nums[..] else {
        return Err(Error::parse(1, "header must be `V E`"));
    };
    let mut records = Vec::new();
    loop {
        let mut matrix = String::new();
        let mut last = 0;
        for _ in 0..v {
            match lines.next() {
                Some((i, l)) => {
                    matrix.push_str(l);
                    matrix.push('\n');
                    last = i + 1;
                }
                None if matrix.is_empty() => return Ok((v, e, records)),
                None => return Err(Error::parse(last, "truncated matrix")),
            }
        }
        let graph = Graph::from_matrix_text(false, &matrix)?;
        let (i, tag_line) = lines.next().ok_or_else(|| Error::parse(last, "missing tag line"))?;
        let (label, mult) = tag_line
            .rsplit_once(' ')
            .ok_or_else(|| Error::parse(i + 1, "tag line must be `<tags> <multiplicity>`"))?;
        let multiplicity = mult.parse().map_err(|_| Error::parse(i + 1, "bad multiplicity"))?;
        let (_, z) = lines.next().ok_or_else(|| Error::parse(i + 1, "missing cycle index"))?;
        records.push(UnderlyingGraphRecord {
            graph,
            label: label.to_string(),
            multiplicity,
            edge_cycle_index: z.parse()?,
        });
    }
}

/// One ancillary file per edge count `V-1 ..= V(V-1)/2`: `(file name, contents)`.
pub fn ancillary_files(vertices: usize) -> Result<Vec<(String, String)>> {
    check_vertices(vertices)?;
    let mut census = Census::new(Family::simple(false));
    let mut out = Vec::new();
    for e in vertices - 1..=vertices * (vertices - 1) / 2 {
        let records = records_from(&mut census, vertices, e)?;
        out.push((format!("G.{vertices}.{e}.txt"), write_underlying_records(vertices, e, &records)?));
    }
    Ok(out)
}

/// Coefficients `[x^0 .. x^(n-1)]` of a generating function as decimal strings.
pub fn series_strings(g: &RationalGf, n: usize) -> Result<Vec<String>> {
    Ok(g.series(n)?.iter().map(BigInt::to_string).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_per_edge_count() {
        let counts: Vec<usize> = (3..=6).map(|e| underlying_records(4, e).unwrap().len()).collect();
        assert_eq!(counts, [2, 2, 1, 1]);
        assert_eq!(underlying_records(7, 21).unwrap().len(), 1);
    }

    #[test]
    fn file_round_trip() {
        let recs = underlying_records(4, 4).unwrap();
        let text = write_underlying_records(4, 4, &recs).unwrap();
        let (v, e, back) = read_underlying_records(&text).unwrap();
        assert_eq!((v, e), (4, 4));
        assert_eq!(back, recs);
        assert_eq!(write_underlying_records(2, 0, &[]).unwrap(), "2 0\n");
        assert!(write_underlying_records(5, 4, &recs).is_err());
    }

    #[test]
    fn vertex_range() {
        assert!(connected_multigraph_gf(1).is_err());
        assert!(connected_multigraph_gf(8).is_err());
    }

    #[test]
    fn two_vertices() {
        let g = connected_multigraph_gf_factored(2).unwrap();
        assert_eq!(g.to_string(), "x/(1 - x)");
        assert_eq!(series_strings(&g.to_rational(), 6).unwrap(), ["0", "1", "1", "1", "1", "1"]);
    }
}
