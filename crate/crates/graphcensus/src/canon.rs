//! Canonical labeling by individualization and colour refinement.
//!
//! The refinement is label-invariant, so the minimum permuted matrix over all
//! leaves of the search tree is a canonical form, and the leaves that reach it
//! form a single free orbit of the automorphism group. Twin vertices (whose
//! transposition is an automorphism) are explored once and weighted.

use std::cmp::Ordering;

/// Square `u8` multiplicity matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Matrix {
    n: usize,
    e: Vec<u8>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { n, e: vec![0; n * n] }
    }

    pub fn from_entries(n: usize, e: Vec<u8>) -> Self {
        debug_assert_eq!(e.len(), n * n);
        Matrix { n, e }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.e[u * self.n + v]
    }

    #[inline]
    pub fn set(&mut self, u: usize, v: usize, x: u8) {
        self.e[u * self.n + v] = x;
    }

    pub fn entries(&self) -> &[u8] {
        &self.e
    }

    fn permuted(&self, pos: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut out = vec![0u8; n * n];
        for u in 0..n {
            let row = pos[u] * n;
            for v in 0..n {
                out[row + pos[v]] = self.e[u * n + v];
            }
        }
        out
    }

    fn are_twins(&self, u: usize, v: usize) -> bool {
        if self.get(u, u) != self.get(v, v) || self.get(u, v) != self.get(v, u) {
            return false;
        }
        (0..self.n)
            .filter(|&w| w != u && w != v)
            .all(|w| self.get(u, w) == self.get(v, w) && self.get(w, u) == self.get(w, v))
    }
}

pub(crate) struct Canonized {
    pub matrix: Matrix,
    pub aut_order: u64,
}

/// Ranks the vertices by `keys`; equal keys share a colour.
fn rank<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let colours = keys
        .iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect();
    (colours, sorted.len())
}

fn initial_colours(m: &Matrix) -> (Vec<u32>, usize) {
    let n = m.n;
    let keys: Vec<(u8, u32, u32)> = (0..n)
        .map(|v| {
            let out: u32 = (0..n).filter(|&u| u != v).map(|u| m.get(v, u) as u32).sum();
            let inn: u32 = (0..n).filter(|&u| u != v).map(|u| m.get(u, v) as u32).sum();
            (m.get(v, v), out, inn)
        })
        .collect();
    rank(&keys)
}

/// Iterated neighbourhood refinement until the number of cells is stable.
fn refine(m: &Matrix, colours: &mut Vec<u32>, mut cells: usize) -> usize {
    let n = m.n;
    loop {
        let keys: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut sig: Vec<u32> = (0..n)
                    .filter(|&u| u != v)
                    .filter_map(|u| {
                        let (a, b) = (m.get(v, u), m.get(u, v));
                        if a == 0 && b == 0 {
                            None
                        } else {
                            Some(colours[u] << 16 | (a as u32) << 8 | b as u32)
                        }
                    })
                    .collect();
                sig.sort_unstable();
                sig.insert(0, colours[v]);
                sig
            })
            .collect();
        let (next, count) = rank(&keys);
        *colours = next;
        if count == cells || count == n {
            return count;
        }
        cells = count;
    }
}

fn individualize(colours: &[u32], w: usize) -> Vec<u32> {
    colours
        .iter()
        .enumerate()
        .map(|(v, &c)| if v == w { 2 * c } else { 2 * c + 1 })
        .collect()
}

struct Search<'a> {
    m: &'a Matrix,
    best: Option<Vec<u8>>,
    count: u64,
}

impl Search<'_> {
    fn visit(&mut self, mut colours: Vec<u32>, cells: usize, weight: u64) {
        let n = self.m.n;
        let cells = refine(self.m, &mut colours, cells);
        if cells == n {
            let pos: Vec<usize> = colours.iter().map(|&c| c as usize).collect();
            let leaf = self.m.permuted(&pos);
            match self.best.as_ref().map(|b| leaf.cmp(b)) {
                None | Some(Ordering::Less) => {
                    self.best = Some(leaf);
                    self.count = weight;
                }
                Some(Ordering::Equal) => self.count += weight,
                Some(Ordering::Greater) => {}
            }
            return;
        }
        let mut size = vec![0usize; n];
        for &c in &colours {
            size[c as usize] += 1;
        }
        let target = size.iter().position(|&s| s > 1).unwrap() as u32;
        let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();

        let mut done = vec![false; cell.len()];
        for i in 0..cell.len() {
            if done[i] {
                continue;
            }
            let mut class = 1u64;
            for j in i + 1..cell.len() {
                if !done[j] && self.m.are_twins(cell[i], cell[j]) {
                    done[j] = true;
                    class += 1;
                }
            }
            let next = individualize(&colours, cell[i]);
            self.visit(next, cells + 1, weight * class);
        }
    }
}

pub(crate) fn canonize(m: &Matrix) -> Canonized {
    if m.n == 0 {
        return Canonized {
            matrix: Matrix::zero(0),
            aut_order: 1,
        };
    }
    let (colours, cells) = initial_colours(m);
    let mut search = Search {
        m,
        best: None,
        count: 0,
    };
    search.visit(colours, cells, 1);
    Canonized {
        matrix: Matrix::from_entries(m.n, search.best.unwrap()),
        aut_order: search.count,
    }
}

/// Every permutation `p` (as images `p[v]`) preserving the matrix.
pub(crate) fn automorphisms(m: &Matrix) -> Vec<Vec<usize>> {
    let n = m.n;
    if n == 0 {
        return vec![vec![]];
    }
    let (mut colours, cells) = initial_colours(m);
    refine(m, &mut colours, cells);

    fn extend(
        m: &Matrix,
        colours: &[u32],
        image: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = image.len();
        if v == m.n {
            out.push(image.clone());
            return;
        }
        for p in 0..m.n {
            if used[p] || colours[p] != colours[v] || m.get(v, v) != m.get(p, p) {
                continue;
            }
            let fits = (0..v).all(|w| {
                m.get(v, w) == m.get(p, image[w]) && m.get(w, v) == m.get(image[w], p)
            });
            if fits {
                used[p] = true;
                image.push(p);
                extend(m, colours, image, used, out);
                image.pop();
                used[p] = false;
            }
        }
    }

    let mut out = Vec::new();
    extend(m, &colours, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn undirected(n: usize, edges: &[(usize, usize)]) -> Matrix {
        let mut m = Matrix::zero(n);
        for &(u, v) in edges {
            m.set(u, v, m.get(u, v) + 1);
            if u != v {
                m.set(v, u, m.get(v, u) + 1);
            }
        }
        m
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute(m: &Matrix) -> (Vec<u8>, u64) {
        let perms = all_perms(m.n);
        let best = perms.iter().map(|p| m.permuted(p)).min().unwrap();
        let fix = perms.iter().filter(|p| m.permuted(p) == m.e).count() as u64;
        (best, fix)
    }

    #[test]
    fn petersen_group_order() {
        let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let m = undirected(10, &edges);
        assert_eq!(canonize(&m).aut_order, 120);
        assert_eq!(automorphisms(&m).len(), 120);
    }

    #[test]
    fn regular_graphs_agree_with_brute_force() {
        // two triangles vs. a hexagon: both 2-regular, refinement alone cannot split them
        let two_triangles = undirected(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let hexagon = undirected(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        for m in [&two_triangles, &hexagon] {
            let c = canonize(m);
            let (_, fix) = brute(m);
            assert_eq!(c.aut_order, fix);
        }
        assert_ne!(canonize(&two_triangles).matrix, canonize(&hexagon).matrix);
        assert_eq!(canonize(&two_triangles).aut_order, 72);
        assert_eq!(canonize(&hexagon).aut_order, 12);
    }

    #[test]
    fn directed_cycle_and_tournament() {
        let mut c4 = Matrix::zero(4);
        for i in 0..4 {
            c4.set(i, (i + 1) % 4, 1);
        }
        assert_eq!(canonize(&c4).aut_order, 4);
        assert_eq!(automorphisms(&c4).len(), 4);

        let mut t3 = Matrix::zero(3);
        t3.set(0, 1, 1);
        t3.set(1, 2, 1);
        t3.set(2, 0, 1);
        t3.set(0, 0, 2);
        assert_eq!(canonize(&t3).aut_order, 1);
    }

    #[test]
    fn canonical_matrix_is_invariant_under_all_relabelings() {
        let m = undirected(5, &[(0, 1), (0, 1), (1, 2), (2, 2), (3, 4), (0, 3)]);
        let c = canonize(&m).matrix;
        for p in all_perms(5) {
            let q = Matrix::from_entries(5, m.permuted(&p));
            assert_eq!(canonize(&q).matrix, c);
        }
    }
}
