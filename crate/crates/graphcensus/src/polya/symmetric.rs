//! Totals of all unlabeled graphs by edges and vertices from the cycle index
//! of the symmetric group acting on vertex pairs.
//!
//! Summing over cycle types of `S_V` instead of over graphs reaches vertex
//! counts far beyond exhaustive generation; the connected counts then follow
//! from [`crate::mset::connected_from_totals`].

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::census::Family;
use crate::error::{Error, Result};
use crate::mset::{connected_from_totals, PairTable};

/// Partitions of `n` as `(part, multiplicity)` lists.
fn partitions(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: usize, max: usize, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            for m in (1..=rest / part).rev() {
                acc.push((part, m));
                go(rest - part * m, part - 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Cycle counts on the edge slots induced by a vertex permutation with the
/// given cycle lengths: `counts[l]` cycles of length `l`.
fn slot_cycles(family: Family, cycles: &[usize]) -> Vec<usize> {
    let longest = cycles.iter().copied().max().unwrap_or(1);
    let mut counts = vec![0usize; longest * longest + 1];
    for (i, &a) in cycles.iter().enumerate() {
        if family.loops {
            counts[a] += 1;
        }
        if family.directed {
            counts[a] += a - 1;
        } else {
            counts[a] += (a - 1) / 2;
            if a % 2 == 0 {
                counts[a / 2] += 1;
            }
        }
        for &b in &cycles[i + 1..] {
            let (g, l) = (a.gcd(&b), a.lcm(&b));
            counts[l] += if family.directed { 2 * g } else { g };
        }
    }
    counts
}

fn truncated_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Series of one slot cycle of length `len`, up to `x^n`.
fn slot_weight(family: Family, len: usize, n: usize) -> Vec<BigInt> {
    let mut w = vec![BigInt::zero(); n + 1];
    w[0] = BigInt::one();
    if family.multiedges {
        let mut k = len;
        while k <= n {
            w[k] = BigInt::one();
            k += len;
        }
    } else if len <= n {
        w[len] = BigInt::one();
    }
    w
}

/// Unlabeled graphs of `family` with `E <= max_edges` edges on exactly
/// `V` vertices for `1 <= V <= max_vertices`, isolated vertices included.
pub fn graph_totals(family: Family, max_edges: usize, max_vertices: usize) -> Result<PairTable> {
    let name = family_name(family);
    let mut table = PairTable::new(format!("{name}-total"), 0, false);
    for v in 1..=max_vertices {
        let mut sum = vec![BigInt::zero(); max_edges + 1];
        let v_fact: BigUint = (1..=v).map(BigUint::from).product();
        for lambda in partitions(v) {
            let mut z = BigUint::one();
            let mut cycles = Vec::new();
            for &(part, m) in &lambda {
                z *= BigUint::from(part).pow(m as u32);
                z *= (1..=m).map(BigUint::from).product::<BigUint>();
                cycles.extend(std::iter::repeat_n(part, m));
            }
            let class_size = BigInt::from(&v_fact / &z);
            let mut term = vec![BigInt::zero(); max_edges + 1];
            term[0] = class_size;
            for (len, &count) in slot_cycles(family, &cycles).iter().enumerate() {
                if count == 0 || len == 0 {
                    continue;
                }
                let w = slot_weight(family, len, max_edges);
                for _ in 0..count {
                    term = truncated_mul(&term, &w, max_edges);
                }
            }
            for (s, t) in sum.iter_mut().zip(term) {
                *s += t;
            }
        }
        let v_fact = BigInt::from(v_fact);
        for (e, s) in sum.into_iter().enumerate() {
            let (q, r) = s.div_rem(&v_fact);
            if !r.is_zero() {
                return Err(Error::Series(format!("orbit sum at E={e}, V={v} not divisible")));
            }
            table.set(e, v, q.to_biguint().expect("non-negative count"));
        }
    }
    Ok(table)
}

fn family_name(f: Family) -> &'static str {
    match (f.directed, f.loops, f.multiedges) {
        (false, false, false) => "simple",
        (false, false, true) => "multigraph",
        (false, true, false) => "simple-loops",
        (false, true, true) => "multigraph-loops",
        (true, false, false) => "digraph",
        (true, false, true) => "multidigraph",
        (true, true, false) => "digraph-loops",
        (true, true, true) => "multidigraph-loops",
    }
}

/// Connected unlabeled graphs of `family` by edges and vertices.
///
/// ```
/// use graphcensus::{census::Family, polya::connected_table};
///
/// let simple = connected_table(Family::simple(false), 6, 5).unwrap();
/// assert_eq!(simple.get(4, 4).unwrap().to_string(), "2");
/// assert_eq!(simple.name, "simple");
/// ```
pub fn connected_table(family: Family, max_edges: usize, max_vertices: usize) -> Result<PairTable> {
    let totals = graph_totals(family, max_edges, max_vertices)?;
    connected_from_totals(&totals, family_name(family), max_edges, max_vertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn slot_cycles_cover_all_slots() {
        for family in [Family::simple(false), Family::all(false), Family::simple(true), Family::all(true)] {
            for v in 1..=7 {
                let slots = match (family.directed, family.loops) {
                    (false, false) => v * (v - 1) / 2,
                    (false, true) => v * (v + 1) / 2,
                    (true, false) => v * (v - 1),
                    (true, true) => v * v,
                };
                for lambda in partitions(v) {
                    let cycles: Vec<usize> =
                        lambda.iter().flat_map(|&(p, m)| std::iter::repeat_n(p, m)).collect();
                    let c = slot_cycles(family, &cycles);
                    let covered: usize = c.iter().enumerate().map(|(l, n)| l * n).sum();
                    assert_eq!(covered, slots);
                }
            }
        }
    }

    #[test]
    fn simple_graph_totals() {
        // simple graphs on 4 vertices by edges: 1,1,2,3,2,1,1
        let t = graph_totals(Family::simple(false), 6, 4).unwrap();
        let row: Vec<String> = (0..=6).map(|e| t.get(e, 4).unwrap().to_string()).collect();
        assert_eq!(row, ["1", "1", "2", "3", "2", "1", "1"]);
    }

    #[test]
    fn directed_multigraph_totals_match_small_census() {
        let t = graph_totals(Family::all(true), 2, 2).unwrap();
        assert_eq!(t.get(2, 2).unwrap().to_string(), "6");
        let t = graph_totals(Family::all(false), 2, 2).unwrap();
        assert_eq!(t.get(2, 2).unwrap().to_string(), "4");
    }
}
