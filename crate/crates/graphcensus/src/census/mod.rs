//! Exhaustive generation of isomorphism classes and the count tables built on it.
//!
//! Classes with `E` edges on `V` vertices are produced from the classes with
//! `E - 1` edges by adding one edge in every allowed slot and keeping one
//! representative per canonical key. Removing any edge of a graph in a family
//! closed under edge deletion gives a graph of the same family, so every
//! class is reached.

pub(crate) mod table;

pub use table::{marginal, CountTable};

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::canon::{canonize, Matrix};
use crate::classify::{classify, TagPattern, TagSet};
use crate::error::{Error, Result};
use crate::graph::{AutomorphismInfo, CanonicalKey, Graph};

/// Default ceiling on generated candidates per table cell.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "GRAPHCENSUS_BUDGET";

/// Candidate budget from the environment, or the default.
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().replace('_', "").parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Which graphs are generated: directedness and whether loops and
/// multiedges may occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    pub directed: bool,
    pub loops: bool,
    pub multiedges: bool,
}

impl Family {
    /// Loops and multiedges allowed.
    pub fn all(directed: bool) -> Self {
        Family {
            directed,
            loops: true,
            multiedges: true,
        }
    }

    /// No loops, no multiedges.
    pub fn simple(directed: bool) -> Self {
        Family {
            directed,
            loops: false,
            multiedges: false,
        }
    }

    /// Loopless, multiedges allowed.
    pub fn loopless(directed: bool) -> Self {
        Family {
            directed,
            loops: false,
            multiedges: true,
        }
    }

    /// Smallest family containing every graph of the given directedness that
    /// can match `pattern`.
    pub fn for_pattern(pattern: &TagPattern, directed: bool) -> Self {
        Family {
            directed,
            loops: pattern.flag('l') != Some(false),
            multiedges: pattern.flag('m') != Some(false),
        }
    }

    fn slots(&self, v: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..v {
            let from = if self.directed { 0 } else { i };
            for j in from..v {
                if i == j && !self.loops {
                    continue;
                }
                out.push((i, j));
            }
        }
        out
    }
}

/// One isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub key: CanonicalKey,
    pub info: AutomorphismInfo,
    pub tags: TagSet,
}

impl ClassRecord {
    /// The canonical representative.
    pub fn graph(&self) -> Graph {
        self.key.to_graph()
    }
}

/// Cached class lists for one family, grown on demand.
pub struct Census {
    family: Family,
    budget: u64,
    // layers[v][e]
    layers: HashMap<usize, Vec<Vec<ClassRecord>>>,
}

impl Census {
    pub fn new(family: Family) -> Self {
        Self::with_budget(family, budget_from_env())
    }

    pub fn with_budget(family: Family, budget: u64) -> Self {
        Census {
            family,
            budget,
            layers: HashMap::new(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// All classes with exactly `e` edges on `v` vertices, sorted by key.
    pub fn classes(&mut self, e: usize, v: usize) -> Result<&[ClassRecord]> {
        if v > crate::graph::MAX_VERTICES {
            return Err(Error::OutOfRange(format!("{v} vertices")));
        }
        let family = self.family;
        let budget = self.budget;
        let layers = self.layers.entry(v).or_insert_with(|| {
            let empty = Graph::new(family.directed, v);
            vec![vec![record(&empty.to_matrix(), family.directed)]]
        });
        while layers.len() <= e {
            let next = grow(family, budget, layers.last().unwrap(), layers.len(), v)?;
            layers.push(next);
        }
        Ok(&layers[e])
    }

    /// Counts the classes matching `pattern` for `0 <= E <= max_edges`,
    /// `1 <= V <= max_vertices`. Graphs of the other directedness contribute nothing.
    pub fn count(
        &mut self,
        pattern: &TagPattern,
        labeled: bool,
        max_edges: usize,
        max_vertices: usize,
    ) -> Result<CountTable> {
        let mut table = CountTable::new(pattern.clone(), labeled, max_edges, max_vertices);
        let other_side = pattern.directed() == Some(!self.family.directed);
        let covered = Family::for_pattern(pattern, self.family.directed);
        if (covered.loops && !self.family.loops) || (covered.multiedges && !self.family.multiedges) {
            return Err(Error::Incompatible(format!(
                "pattern `{pattern}` needs graphs outside the generated family"
            )));
        }
        for v in 1..=max_vertices {
            for e in 0..=max_edges {
                let n = if other_side {
                    BigUint::default()
                } else {
                    tally(self.classes(e, v)?, pattern, labeled)
                };
                table.set(e, v, n);
            }
        }
        Ok(table)
    }
}

fn tally(classes: &[ClassRecord], pattern: &TagPattern, labeled: bool) -> BigUint {
    let mut n = BigUint::default();
    for c in classes.iter().filter(|c| pattern.matches(&c.tags)) {
        n += if labeled { c.info.orbit_weight } else { 1 };
    }
    n
}

fn record(m: &Matrix, directed: bool) -> ClassRecord {
    let c = canonize(m);
    let key = CanonicalKey::from_matrix(directed, &c.matrix);
    let tags = classify(&key.to_graph());
    ClassRecord {
        info: AutomorphismInfo::new(m.order(), c.aut_order),
        key,
        tags,
    }
}

fn grow(
    family: Family,
    budget: u64,
    parents: &[ClassRecord],
    e: usize,
    v: usize,
) -> Result<Vec<ClassRecord>> {
    let slots = family.slots(v);
    let candidates = parents.len() as u64 * slots.len() as u64;
    if candidates > budget {
        return Err(Error::BudgetExceeded {
            budget,
            edges: e,
            vertices: v,
        });
    }
    let found: HashMap<Vec<u8>, u64> = parents
        .par_iter()
        .fold(HashMap::new, |mut acc, parent| {
            let base = Matrix::from_entries(v, parent.key.matrix().to_vec());
            for &(i, j) in &slots {
                let k = base.get(i, j);
                if (k > 0 && !family.multiedges) || k == u8::MAX {
                    continue;
                }
                let mut m = base.clone();
                m.set(i, j, k + 1);
                if !family.directed {
                    m.set(j, i, k + 1);
                }
                let c = canonize(&m);
                acc.entry(c.matrix.entries().to_vec()).or_insert(c.aut_order);
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            if a.len() < b.len() {
                return merge(b, a);
            }
            a.extend(b);
            a
        });

    let mut out: Vec<ClassRecord> = found
        .into_par_iter()
        .map(|(entries, aut)| {
            let key = CanonicalKey::from_matrix(family.directed, &Matrix::from_entries(v, entries));
            let tags = classify(&key.to_graph());
            ClassRecord {
                key,
                info: AutomorphismInfo::new(v, aut),
                tags,
            }
        })
        .collect();
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

fn merge(mut a: HashMap<Vec<u8>, u64>, b: HashMap<Vec<u8>, u64>) -> HashMap<Vec<u8>, u64> {
    a.extend(b);
    a
}

/// One representative per class of graphs (loops and multiedges allowed) with
/// exactly `edges` edges on `vertices` vertices, sorted by canonical key.
///
/// ```
/// use graphcensus::census::enumerate_classes;
///
/// let classes = enumerate_classes(false, 2, 2).unwrap();
/// assert_eq!(classes.len(), 4);
/// ```
pub fn enumerate_classes(
    directed: bool,
    edges: usize,
    vertices: usize,
) -> Result<Vec<(Graph, AutomorphismInfo, TagSet)>> {
    if vertices == 0 {
        return Err(Error::OutOfRange("census tables start at one vertex".into()));
    }
    let mut census = Census::new(Family::all(directed));
    Ok(census
        .classes(edges, vertices)?
        .iter()
        .map(|c| (c.graph(), c.info, c.tags))
        .collect())
}

/// A request for one count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusQuery {
    pub pattern: TagPattern,
    pub labeled: bool,
    pub max_edges: usize,
    pub max_vertices: usize,
}

impl CensusQuery {
    pub fn new(pattern: TagPattern, labeled: bool, max_edges: usize, max_vertices: usize) -> Self {
        CensusQuery {
            pattern,
            labeled,
            max_edges,
            max_vertices,
        }
    }
}

/// Runs `query` with fresh class caches.
///
/// Only the smallest family that can hold a matching graph is generated; a
/// pattern that leaves `d` open adds the directed and undirected counts.
pub fn count(query: &CensusQuery) -> Result<CountTable> {
    let sides: Vec<bool> = match query.pattern.directed() {
        Some(d) => vec![d],
        None => vec![false, true],
    };
    let mut total: Option<CountTable> = None;
    for directed in sides {
        let mut census = Census::new(Family::for_pattern(&query.pattern, directed));
        let t = census.count(&query.pattern, query.labeled, query.max_edges, query.max_vertices)?;
        total = Some(match total {
            None => t,
            Some(acc) => acc.add_cells(&t)?,
        });
    }
    Ok(total.unwrap())
}

/// Connected graphs without loops or multiedges (weakly connected for digraphs).
/// The single vertex with no edges counts as connected.
pub fn connected_census(
    directed: bool,
    labeled: bool,
    max_edges: usize,
    max_vertices: usize,
) -> Result<CountTable> {
    let pattern: TagPattern = if directed { "dc.*-m-l" } else { "-dc.*-m-l" }.parse()?;
    count(&CensusQuery::new(pattern, labeled, max_edges, max_vertices))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> TagPattern {
        s.parse().unwrap()
    }

    #[test]
    fn small_cells() {
        assert_eq!(enumerate_classes(false, 0, 3).unwrap().len(), 1);
        assert_eq!(enumerate_classes(false, 2, 2).unwrap().len(), 4);
        assert_eq!(enumerate_classes(true, 2, 2).unwrap().len(), 6);
    }

    #[test]
    fn output_is_sorted_and_unique() {
        let mut census = Census::new(Family::all(false));
        let classes = census.classes(4, 4).unwrap();
        assert!(classes.windows(2).all(|w| w[0].key < w[1].key));
    }

    #[test]
    fn family_restriction() {
        let mut simple = Census::new(Family::simple(false));
        // the 2 simple graphs with 3 edges on 4 vertices that are connected, plus triangle + point
        assert_eq!(simple.classes(3, 4).unwrap().len(), 3);
        let t = simple.count(&p("-d.*-l"), false, 2, 2);
        assert!(t.is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let mut c = Census::with_budget(Family::all(true), 100);
        match c.classes(3, 4) {
            Err(Error::BudgetExceeded { edges, vertices, .. }) => assert_eq!((edges, vertices), (3, 4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn labeled_totals_closed_form() {
        let t = count(&CensusQuery::new(p("-d"), true, 4, 4)).unwrap();
        assert_eq!(t.get(4, 4), Some(&BigUint::from(715u32)));
        assert_eq!(t.get(2, 2), Some(&BigUint::from(6u32)));
    }

    #[test]
    fn undirected_table_under_directed_pattern_is_zero() {
        let mut c = Census::new(Family::all(false));
        let t = c.count(&p("dCc"), false, 2, 2).unwrap();
        assert!(t.cells().all(|(_, n)| *n == BigUint::default()));
    }
}
