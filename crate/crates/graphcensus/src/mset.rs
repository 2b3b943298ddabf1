//! Multiset coefficients and the multiset transform, in one weight and in
//! correlated (edge, vertex) weight pairs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Number of `m`-element multisets drawn from `n` kinds: `C(n + m - 1, m)`.
///
/// ```
/// use graphcensus::mset::multiset_coefficient;
///
/// assert_eq!(multiset_coefficient(&3u32.into(), 4), 15u32.into());
/// assert_eq!(multiset_coefficient(&0u32.into(), 0), 1u32.into());
/// ```
pub fn multiset_coefficient(n: &BigUint, m: u64) -> BigUint {
    if m == 0 {
        return BigUint::one();
    }
    if n.is_zero() {
        return BigUint::zero();
    }
    binomial(n + BigUint::from(m) - 1u32, BigUint::from(m))
}

/// Number of objects of each weight.
///
/// With [`Seq::from_positive`] weights start at 1, as for the fruit example.
/// [`Seq::with_zero_weight`] also admits objects of weight 0 (the isolated
/// vertex, when graphs are weighted by edges); multisets of exactly `k` objects
/// stay finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seq {
    values: Vec<BigUint>,
    zero_weight: bool,
}

impl Seq {
    /// `T_{1,1}, T_{2,1}, ...`; `T_{0,1} = 1` is implied and not an object.
    pub fn from_positive<T: Into<BigUint>>(values: impl IntoIterator<Item = T>) -> Self {
        let mut v = vec![BigUint::one()];
        v.extend(values.into_iter().map(Into::into));
        Seq {
            values: v,
            zero_weight: false,
        }
    }

    /// `T_{0,1}, T_{1,1}, ...` with the weight-0 entry counted as objects.
    pub fn with_zero_weight<T: Into<BigUint>>(values: impl IntoIterator<Item = T>) -> Self {
        Seq {
            values: values.into_iter().map(Into::into).collect(),
            zero_weight: true,
        }
    }

    /// `T_{n,1}`; zero beyond the stored window.
    pub fn get(&self, n: usize) -> BigUint {
        self.values.get(n).cloned().unwrap_or_default()
    }

    /// Largest stored weight.
    pub fn max_weight(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    fn min_part(&self) -> usize {
        if self.zero_weight {
            0
        } else {
            1
        }
    }
}

/// `T_{n,k}` for `0 <= n <= n_max`, `1 <= k <= k_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformTable {
    rows: Vec<Vec<BigUint>>,
}

impl TransformTable {
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.rows
            .get(n)
            .and_then(|r| k.checked_sub(1).and_then(|i| r.get(i)))
            .cloned()
            .unwrap_or_default()
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `sum_k T_{n,k}` over the computed `k`.
    pub fn row_sum(&self, n: usize) -> BigUint {
        self.rows[n].iter().sum()
    }
}

type Visit<'a> = &'a mut dyn FnMut(&[(usize, u64)]);

/// Calls `f` with `(part, frequency)` lists of the partitions of `n` into
/// exactly `k` parts, each part at least `min_part`, largest part first.
fn for_each_partition(n: usize, k: usize, min_part: usize, f: Visit<'_>) {
    fn go(
        rest: usize,
        slots: usize,
        max: usize,
        min: usize,
        acc: &mut Vec<usize>,
        f: Visit<'_>,
    ) {
        if slots == 0 {
            if rest == 0 {
                let mut grouped: Vec<(usize, u64)> = Vec::new();
                for &p in acc.iter() {
                    match grouped.last_mut() {
                        Some((q, c)) if *q == p => *c += 1,
                        _ => grouped.push((p, 1)),
                    }
                }
                f(&grouped);
            }
            return;
        }
        let hi = max.min(rest - min * (slots - 1));
        for part in (min..=hi).rev() {
            if part * slots < rest {
                break;
            }
            acc.push(part);
            go(rest - part, slots - 1, part, min, acc, f);
            acc.pop();
        }
    }
    if k == 0 || n < min_part * k {
        return;
    }
    go(n, k, n, min_part, &mut Vec::with_capacity(k), f);
}

/// The multiset transform of `t`.
///
/// ```
/// use graphcensus::mset::{multiset_transform, Seq};
///
/// // three kinds of apple, a banana, a melon
/// let fruit = Seq::from_positive([3u32, 1, 0, 1]);
/// let t = multiset_transform(&fruit, 8, 8);
/// assert_eq!(t.get(3, 3), 10u32.into());
/// assert_eq!(t.get(6, 2), 1u32.into());
/// assert_eq!(t.row_sum(8), 118u32.into());
/// ```
pub fn multiset_transform(t: &Seq, n_max: usize, k_max: usize) -> TransformTable {
    let rows = (0..=n_max)
        .map(|n| {
            (1..=k_max)
                .map(|k| {
                    let mut total = BigUint::zero();
                    for_each_partition(n, k, t.min_part(), &mut |parts| {
                        let mut prod = BigUint::one();
                        for &(part, f) in parts {
                            prod *= multiset_coefficient(&t.get(part), f);
                        }
                        total += prod;
                    });
                    total
                })
                .collect()
        })
        .collect();
    TransformTable { rows }
}

/// A multiset of `(edges, vertices)` pairs, sorted by edges then vertices,
/// both descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMultiset {
    pub parts: Vec<((usize, usize), u64)>,
}

impl PairMultiset {
    /// Number of pairs counted with frequency.
    pub fn len(&self) -> u64 {
        self.parts.iter().map(|p| p.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn edges(&self) -> usize {
        self.parts.iter().map(|&((e, _), f)| e * f as usize).sum()
    }

    pub fn vertices(&self) -> usize {
        self.parts.iter().map(|&((_, v), f)| v * f as usize).sum()
    }
}

/// All multisets of `k` pairs `(e_i, v_i)` with `sum e_i = E`, `sum v_i = V`
/// and every `v_i >= 1`.
///
/// ```
/// use graphcensus::mset::pair_multisets;
///
/// let ms = pair_multisets(2, 3, 3);
/// let parts: Vec<_> = ms.iter().map(|m| m.parts.clone()).collect();
/// assert_eq!(parts, vec![vec![((2, 1), 1), ((0, 1), 2)], vec![((1, 1), 2), ((0, 1), 1)]]);
/// ```
pub fn pair_multisets(edges: usize, vertices: usize, k: usize) -> Vec<PairMultiset> {
    fn go(
        e: usize,
        v: usize,
        slots: usize,
        bound: (usize, usize),
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<PairMultiset>,
    ) {
        if slots == 0 {
            if e == 0 && v == 0 {
                let mut parts: Vec<((usize, usize), u64)> = Vec::new();
                for &p in acc.iter() {
                    match parts.last_mut() {
                        Some((q, f)) if *q == p => *f += 1,
                        _ => parts.push((p, 1)),
                    }
                }
                out.push(PairMultiset { parts });
            }
            return;
        }
        for pe in (0..=e.min(bound.0)).rev() {
            if pe * slots < e {
                break;
            }
            let vmax = if pe == bound.0 { bound.1 } else { usize::MAX };
            let hi = vmax.min(v - (slots - 1));
            for pv in (1..=hi).rev() {
                if (pe, pv) > bound {
                    continue;
                }
                acc.push((pe, pv));
                go(e - pe, v - pv, slots - 1, (pe, pv), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k == 0 || vertices < k {
        return out;
    }
    go(edges, vertices, k, (edges, vertices), &mut Vec::with_capacity(k), &mut out);
    out
}

/// Counts indexed by `(E, V)`, as read from or written to a component file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTable {
    pub name: String,
    pub k: usize,
    pub labeled: bool,
    values: BTreeMap<(usize, usize), BigUint>,
}

impl PairTable {
    pub fn new(name: impl Into<String>, k: usize, labeled: bool) -> Self {
        PairTable {
            name: name.into(),
            k,
            labeled,
            values: BTreeMap::new(),
        }
    }

    pub fn get(&self, e: usize, v: usize) -> Option<&BigUint> {
        self.values.get(&(e, v))
    }

    pub fn set(&mut self, e: usize, v: usize, n: BigUint) {
        self.values.insert((e, v), n);
    }

    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), &BigUint)> {
        self.values.iter().map(|(&k, n)| (k, n))
    }

    pub fn max_edges(&self) -> usize {
        self.values.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn max_vertices(&self) -> usize {
        self.values.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Copy restricted to `E <= max_edges`, `V <= max_vertices`.
    pub fn restricted(&self, max_edges: usize, max_vertices: usize) -> PairTable {
        PairTable {
            name: self.name.clone(),
            k: self.k,
            labeled: self.labeled,
            values: self
                .values
                .iter()
                .filter(|(&(e, v), _)| e <= max_edges && v <= max_vertices)
                .map(|(&k, n)| (k, n.clone()))
                .collect(),
        }
    }

    fn lookup(&self, e: usize, v: usize) -> Result<&BigUint> {
        self.get(e, v).ok_or_else(|| Error::MissingCell {
            table: self.name.clone(),
            edges: e,
            vertices: v,
        })
    }

    /// `# base=<name> k=<k> labeled=<bool>` then `E,V,count` rows.
    pub fn to_text(&self) -> String {
        let mut out = format!("# base={} k={} labeled={}\n", self.name, self.k, self.labeled);
        for ((e, v), n) in self.cells() {
            writeln!(out, "{e},{v},{n}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
        let header = header
            .strip_prefix("# ")
            .ok_or_else(|| Error::parse(1, "missing `# base=...` header"))?;
        let mut t = PairTable::new("", 1, false);
        let mut seen = 0;
        for word in header.split_whitespace() {
            let (key, value) = word.split_once('=').ok_or_else(|| Error::parse(1, "bad header"))?;
            match key {
                "base" => t.name = value.to_string(),
                "k" => t.k = value.parse().map_err(|_| Error::parse(1, "bad k"))?,
                "labeled" => t.labeled = value.parse().map_err(|_| Error::parse(1, "bad labeled"))?,
                _ => return Err(Error::parse(1, format!("unknown header key `{key}`"))),
            }
            seen += 1;
        }
        if seen != 3 {
            return Err(Error::parse(1, "header needs base, k and labeled"));
        }
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split(',').collect();
            let bad = || Error::parse(i + 1, format!("bad row `{line}`"));
            if f.len() != 3 {
                return Err(bad());
            }
            let e = f[0].parse().map_err(|_| bad())?;
            let v = f[1].parse().map_err(|_| bad())?;
            t.set(e, v, f[2].parse().map_err(|_| bad())?);
        }
        Ok(t)
    }
}

fn component_cell(base: &PairTable, e: usize, v: usize, k: usize) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for ms in pair_multisets(e, v, k) {
        let mut prod = BigUint::one();
        for &((pe, pv), f) in &ms.parts {
            prod *= multiset_coefficient(base.lookup(pe, pv)?, f);
        }
        total += prod;
    }
    Ok(total)
}

/// `G(E, V, k)` for `E <= max_edges`, `1 <= V <= max_vertices` from the
/// connected counts `G(e, v, 1)` in `base`.
///
/// A base cell needed within reach but absent is an error, never a zero.
pub fn k_component_table(
    base: &PairTable,
    k: usize,
    max_edges: usize,
    max_vertices: usize,
) -> Result<PairTable> {
    let cells: Vec<(usize, usize)> = (0..=max_edges)
        .flat_map(|e| (1..=max_vertices).map(move |v| (e, v)))
        .collect();
    let values = cells
        .par_iter()
        .map(|&(e, v)| component_cell(base, e, v, k).map(|n| ((e, v), n)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(PairTable {
        name: base.name.clone(),
        k,
        labeled: base.labeled,
        values,
    })
}

/// `sum_k G(E, V, k)`: every graph of the family, connected or not.
pub fn total_over_components(base: &PairTable, max_edges: usize, max_vertices: usize) -> Result<PairTable> {
    let mut out = PairTable::new(base.name.clone(), 0, base.labeled);
    let cells: Vec<(usize, usize)> = (0..=max_edges)
        .flat_map(|e| (1..=max_vertices).map(move |v| (e, v)))
        .collect();
    let sums = cells
        .par_iter()
        .map(|&(e, v)| {
            let mut s = BigUint::zero();
            for k in 1..=v {
                s += component_cell(base, e, v, k)?;
            }
            Ok(((e, v), s))
        })
        .collect::<Result<Vec<_>>>()?;
    for ((e, v), s) in sums {
        out.set(e, v, s);
    }
    Ok(out)
}

/// Inverts [`total_over_components`]: connected counts from totals, by
/// increasing vertex count.
pub fn connected_from_totals(
    totals: &PairTable,
    name: &str,
    max_edges: usize,
    max_vertices: usize,
) -> Result<PairTable> {
    let mut base = PairTable::new(name, 1, totals.labeled);
    for v in 1..=max_vertices {
        let row = (0..=max_edges)
            .into_par_iter()
            .map(|e| {
                let t = totals.lookup(e, v)?;
                let mut rest = BigUint::zero();
                for k in 2..=v {
                    rest += component_cell(&base, e, v, k)?;
                }
                if &rest > t {
                    return Err(Error::Incompatible(format!(
                        "totals at E={e}, V={v} are smaller than the disconnected count"
                    )));
                }
                Ok((e, t - rest))
            })
            .collect::<Result<Vec<_>>>()?;
        for (e, n) in row {
            base.set(e, v, n);
        }
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_pairs(e: usize, v: usize, k: usize) -> Vec<PairMultiset> {
        // all ordered k-tuples, then sorted and deduplicated
        fn go(e: usize, v: usize, k: usize, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
            if k == 0 {
                if e == 0 && v == 0 {
                    out.push(acc.clone());
                }
                return;
            }
            for pe in 0..=e {
                for pv in 1..=v {
                    acc.push((pe, pv));
                    go(e - pe, v - pv, k - 1, acc, out);
                    acc.pop();
                }
            }
        }
        let mut tuples = Vec::new();
        go(e, v, k, &mut Vec::new(), &mut tuples);
        let mut sets: Vec<PairMultiset> = tuples
            .into_iter()
            .map(|mut t| {
                t.sort_by(|a, b| b.cmp(a));
                let mut parts: Vec<((usize, usize), u64)> = Vec::new();
                for p in t {
                    match parts.last_mut() {
                        Some((q, f)) if *q == p => *f += 1,
                        _ => parts.push((p, 1)),
                    }
                }
                PairMultiset { parts }
            })
            .collect();
        sets.sort();
        sets.dedup();
        sets
    }

    #[test]
    fn multiset_coefficient_small() {
        for m in 0..10 {
            assert_eq!(multiset_coefficient(&BigUint::one(), m), BigUint::one());
        }
        for n in 0u32..10 {
            let c2 = n * n.saturating_sub(1) / 2;
            assert_eq!(multiset_coefficient(&n.into(), 2), BigUint::from(n + c2));
        }
        assert!(multiset_coefficient(&BigUint::zero(), 3).is_zero());
    }

    #[test]
    fn pair_multisets_match_brute_force() {
        for e in 0..6 {
            for v in 1..7 {
                for k in 1..=v {
                    let mut fast = pair_multisets(e, v, k);
                    fast.sort();
                    assert_eq!(fast, brute_pairs(e, v, k), "E={e} V={v} k={k}");
                }
            }
        }
        assert!(pair_multisets(3, 2, 3).is_empty());
        assert_eq!(pair_multisets(0, 4, 4).len(), 1);
    }

    #[test]
    fn partitions_into_k_parts() {
        let mut count = 0;
        for_each_partition(10, 3, 1, &mut |_| count += 1);
        assert_eq!(count, 8);
        let mut seen = Vec::new();
        for_each_partition(3, 3, 0, &mut |p| seen.push(p.to_vec()));
        assert_eq!(seen, vec![vec![(3, 1), (0, 2)], vec![(2, 1), (1, 1), (0, 1)], vec![(1, 3)]]);
    }

    #[test]
    fn component_file_round_trip() {
        let mut t = PairTable::new("simple", 2, false);
        t.set(0, 2, BigUint::one());
        t.set(1, 3, BigUint::one());
        let text = t.to_text();
        assert_eq!(text, "# base=simple k=2 labeled=false\n0,2,1\n1,3,1\n");
        assert_eq!(PairTable::from_text(&text).unwrap(), t);
        assert!(PairTable::from_text("0,2,1\n").is_err());
    }

    #[test]
    fn missing_base_cell_is_named() {
        let mut base = PairTable::new("partial", 1, false);
        base.set(0, 1, BigUint::one());
        match k_component_table(&base, 2, 1, 2) {
            Err(Error::MissingCell { edges, vertices, .. }) => assert_eq!((edges, vertices), (1, 1)),
            other => panic!("{other:?}"),
        }
    }
}
