//! Small multigraphs with loops, stored as an endpoint-pair multiplicity map.
//!
//! Vertices are `0..vertex_count`. In an undirected graph the pair `{u, v}` is
//! stored once with `u <= v`; a loop is the pair `(v, v)` and contributes its
//! multiplicity once to the edge count. The adjacency matrix of an undirected
//! graph is symmetric and carries the loop multiplicity (not twice that) on
//! the diagonal.

use std::collections::BTreeMap;
use std::fmt;

use crate::canon::{self, Matrix};
use crate::error::{Error, Result};

/// Largest vertex count accepted by the canonical-form machinery.
pub const MAX_VERTICES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    directed: bool,
    vertex_count: usize,
    edges: BTreeMap<(usize, usize), u32>,
}

impl Graph {
    /// The edgeless graph on `vertex_count` vertices.
    pub fn new(directed: bool, vertex_count: usize) -> Self {
        Graph {
            directed,
            vertex_count,
            edges: BTreeMap::new(),
        }
    }

    pub fn undirected(vertex_count: usize) -> Self {
        Self::new(false, vertex_count)
    }

    pub fn directed(vertex_count: usize) -> Self {
        Self::new(true, vertex_count)
    }

    /// Builds a graph from a list of edges; a repeated pair raises its multiplicity.
    ///
    /// ```
    /// use graphcensus::Graph;
    ///
    /// let g = Graph::from_edges(false, 3, [(0, 1), (1, 0), (2, 2)]).unwrap();
    /// assert_eq!(g.multiplicity(0, 1), 2);
    /// assert_eq!(g.edge_count(), 3);
    /// ```
    pub fn from_edges<I>(directed: bool, vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(directed, vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from a row-major `V x V` multiplicity matrix.
    ///
    /// Undirected input must be symmetric; only the upper triangle (with the
    /// diagonal) is read.
    pub fn from_matrix(directed: bool, vertex_count: usize, entries: &[u32]) -> Result<Self> {
        let n = vertex_count;
        if entries.len() != n * n {
            return Err(Error::InvalidGraph(format!(
                "matrix has {} entries, expected {}",
                entries.len(),
                n * n
            )));
        }
        let mut g = Self::new(directed, n);
        for u in 0..n {
            for v in 0..n {
                let m = entries[u * n + v];
                if !directed {
                    if m != entries[v * n + u] {
                        return Err(Error::InvalidGraph(format!(
                            "undirected matrix is not symmetric at ({u}, {v})"
                        )));
                    }
                    if v < u {
                        continue;
                    }
                }
                if m > 0 {
                    g.set_multiplicity(u, v, m)?;
                }
            }
        }
        Ok(g)
    }

    fn slot(&self, u: usize, v: usize) -> Result<(usize, usize)> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::InvalidGraph(format!(
                "endpoint ({u}, {v}) out of range for {} vertices",
                self.vertex_count
            )));
        }
        Ok(if self.directed || u <= v { (u, v) } else { (v, u) })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let slot = self.slot(u, v)?;
        let m = self.edges.entry(slot).or_insert(0);
        if *m == u8::MAX as u32 {
            return Err(Error::InvalidGraph("multiplicity above 255".into()));
        }
        *m += 1;
        Ok(())
    }

    /// Sets the multiplicity of a pair; zero removes it.
    pub fn set_multiplicity(&mut self, u: usize, v: usize, multiplicity: u32) -> Result<()> {
        let slot = self.slot(u, v)?;
        if multiplicity > u8::MAX as u32 {
            return Err(Error::InvalidGraph("multiplicity above 255".into()));
        }
        if multiplicity == 0 {
            self.edges.remove(&slot);
        } else {
            self.edges.insert(slot, multiplicity);
        }
        Ok(())
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Multiplicity of the pair `(u, v)`; order is ignored for undirected graphs.
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        match self.slot(u, v) {
            Ok(slot) => self.edges.get(&slot).copied().unwrap_or(0),
            Err(_) => 0,
        }
    }

    /// Iterates over the stored pairs and their multiplicities.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m))
    }

    /// Total number of edges, counting each loop once.
    pub fn edge_count(&self) -> usize {
        self.edges.values().map(|&m| m as usize).sum()
    }

    /// Row-major adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<u32> {
        let n = self.vertex_count;
        let mut a = vec![0u32; n * n];
        for (&(u, v), &m) in &self.edges {
            a[u * n + v] = m;
            if !self.directed {
                a[v * n + u] = m;
            }
        }
        a
    }

    pub(crate) fn to_matrix(&self) -> Matrix {
        let n = self.vertex_count;
        let mut m = Matrix::zero(n);
        for (&(u, v), &k) in &self.edges {
            m.set(u, v, k as u8);
            if !self.directed {
                m.set(v, u, k as u8);
            }
        }
        m
    }

    pub(crate) fn from_canon_matrix(directed: bool, m: &Matrix) -> Self {
        let n = m.order();
        let mut edges = BTreeMap::new();
        for u in 0..n {
            for v in 0..n {
                if !directed && v < u {
                    continue;
                }
                let k = m.get(u, v);
                if k > 0 {
                    edges.insert((u, v), k as u32);
                }
            }
        }
        Graph {
            directed,
            vertex_count: n,
            edges,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
        }
        let mut g = Self::new(self.directed, self.vertex_count);
        for (&(u, v), &m) in &self.edges {
            g.set_multiplicity(perm[u], perm[v], m)?;
        }
        Ok(g)
    }

    /// Writes the adjacency matrix as `V` lines of `V` space-separated integers.
    pub fn to_matrix_text(&self) -> String {
        let n = self.vertex_count;
        let a = self.adjacency_matrix();
        let mut out = String::new();
        for u in 0..n {
            let row: Vec<String> = a[u * n..(u + 1) * n].iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`Graph::to_matrix_text`]; blank lines are ignored.
    pub fn from_matrix_text(directed: bool, text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            rows += 1;
            for tok in line.split_whitespace() {
                let x: u32 = tok
                    .parse()
                    .map_err(|_| Error::parse(i + 1, format!("bad matrix entry `{tok}`")))?;
                entries.push(x);
            }
        }
        if entries.len() != rows * rows {
            return Err(Error::parse(rows, "matrix is not square"));
        }
        Self::from_matrix(directed, rows, &entries)
    }
}

/// Isomorphism-class key: `[directed, V]` followed by the canonical matrix, row-major,
/// one byte per entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub(crate) fn from_matrix(directed: bool, m: &Matrix) -> Self {
        let mut bytes = Vec::with_capacity(2 + m.entries().len());
        bytes.push(directed as u8);
        bytes.push(m.order() as u8);
        bytes.extend_from_slice(m.entries());
        CanonicalKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn is_directed(&self) -> bool {
        self.0[0] != 0
    }

    pub fn vertex_count(&self) -> usize {
        self.0[1] as usize
    }

    /// The canonical matrix entries, row-major.
    pub fn matrix(&self) -> &[u8] {
        &self.0[2..]
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Graph {
        let m = Matrix::from_entries(self.vertex_count(), self.matrix().to_vec());
        Graph::from_canon_matrix(self.is_directed(), &m)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:", if self.is_directed() { 'd' } else { 'u' }, self.vertex_count())?;
        for b in self.matrix() {
            write!(f, "{b:x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AutomorphismInfo {
    /// Order of the vertex automorphism group.
    pub aut_order: u64,
    /// `V! / aut_order`: the number of vertex-labeled graphs in the class.
    pub orbit_weight: u64,
}

impl AutomorphismInfo {
    pub(crate) fn new(vertex_count: usize, aut_order: u64) -> Self {
        let total = factorial(vertex_count);
        debug_assert_eq!(total % aut_order, 0);
        AutomorphismInfo {
            aut_order,
            orbit_weight: total / aut_order,
        }
    }
}

/// `n!`, for `n <= 20`.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Canonical form of `g`: equal keys iff the graphs are isomorphic.
///
/// ```
/// use graphcensus::{canonical_form, Graph};
///
/// let centre_first = Graph::from_edges(false, 3, [(0, 1), (0, 2)]).unwrap();
/// let centre_last = Graph::from_edges(false, 3, [(0, 2), (1, 2)]).unwrap();
/// assert_eq!(canonical_form(&centre_first), canonical_form(&centre_last));
/// ```
pub fn canonical_form(g: &Graph) -> CanonicalKey {
    canonical_form_with_automorphisms(g).0
}

/// Automorphism group order and labeled-orbit weight of `g`.
pub fn automorphism_info(g: &Graph) -> AutomorphismInfo {
    canonical_form_with_automorphisms(g).1
}

/// Both results of the canonical search in one pass.
pub fn canonical_form_with_automorphisms(g: &Graph) -> (CanonicalKey, AutomorphismInfo) {
    assert!(g.vertex_count() <= MAX_VERTICES, "vertex count above {MAX_VERTICES}");
    let m = g.to_matrix();
    let result = canon::canonize(&m);
    (
        CanonicalKey::from_matrix(g.is_directed(), &result.matrix),
        AutomorphismInfo::new(g.vertex_count(), result.aut_order),
    )
}

/// All vertex permutations `p` with `multiplicity(u, v) == multiplicity(p[u], p[v])`.
///
/// Found by backtracking over vertex images restricted to the same refinement
/// class; intended for the small graphs of the generating-function code.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    canon::automorphisms(&g.to_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(false, 3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn edge_count_conventions() {
        assert_eq!(Graph::undirected(3).edge_count(), 0);
        let loop_only = Graph::from_edges(false, 1, [(0, 0)]).unwrap();
        assert_eq!(loop_only.edge_count(), 1);
        let g = Graph::from_edges(false, 2, [(0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.adjacency_matrix(), vec![0, 2, 2, 1]);
    }

    #[test]
    fn out_of_range_endpoint_is_rejected() {
        assert!(Graph::from_edges(false, 2, [(0, 2)]).is_err());
    }

    #[test]
    fn asymmetric_undirected_matrix_is_rejected() {
        assert!(Graph::from_matrix(false, 2, &[0, 1, 0, 0]).is_err());
        assert!(Graph::from_matrix(true, 2, &[0, 1, 0, 0]).is_ok());
    }

    #[test]
    fn triangle_key_is_its_own_matrix() {
        let k3 = Graph::from_edges(false, 3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let key = canonical_form(&k3);
        let input: Vec<u8> = k3.adjacency_matrix().iter().map(|&x| x as u8).collect();
        assert_eq!(key.matrix(), &input[..]);
        assert_eq!(key.to_graph(), k3);
    }

    #[test]
    fn empty_graph_has_empty_key() {
        let key = canonical_form(&Graph::undirected(0));
        assert!(key.matrix().is_empty());
        assert_eq!(key.vertex_count(), 0);
    }

    #[test]
    fn automorphism_examples() {
        let info = automorphism_info(&path3());
        assert_eq!((info.aut_order, info.orbit_weight), (2, 3));

        let k3 = Graph::from_edges(false, 3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let info = automorphism_info(&k3);
        assert_eq!((info.aut_order, info.orbit_weight), (6, 1));

        let two_cycle = Graph::from_edges(true, 2, [(0, 1), (1, 0)]).unwrap();
        let info = automorphism_info(&two_cycle);
        assert_eq!((info.aut_order, info.orbit_weight), (2, 1));
    }

    #[test]
    fn matrix_text_round_trip() {
        let g = Graph::from_edges(true, 3, [(0, 1), (0, 1), (2, 0), (1, 1)]).unwrap();
        let text = g.to_matrix_text();
        assert_eq!(text, "0 2 0\n0 1 0\n1 0 0\n");
        assert_eq!(Graph::from_matrix_text(true, &text).unwrap(), g);
    }

    #[test]
    fn explicit_group_matches_search_order() {
        let square = Graph::from_edges(false, 4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(automorphisms(&square).len(), 8);
        assert_eq!(automorphism_info(&square).aut_order, 8);
    }
}
