//! Cycle indices of permutation groups acting on edge slots.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gf::{FactoredGf, RationalGf};
use super::poly::Poly;
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::graph::{automorphisms, Graph};

/// Exponents of `t_1, t_2, ...`; no trailing zeros.
///
/// Ordered so that larger exponents of `t_1` come first, then `t_2`, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        CycleType(exponents)
    }

    /// Cycle type of a permutation given by images.
    pub fn of_permutation(p: &[usize]) -> Self {
        let mut seen = vec![false; p.len()];
        let mut exps = Vec::new();
        for start in 0..p.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = p[i];
                len += 1;
            }
            if exps.len() < len {
                exps.resize(len, 0);
            }
            exps[len - 1] += 1;
        }
        CycleType::new(exps)
    }

    /// Exponent of `t_len`.
    pub fn exponent(&self, len: usize) -> u32 {
        len.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Number of points permuted: the sum of `len * exponent`.
    pub fn degree(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &e)| (i + 1) * e as usize).sum()
    }

    /// `(len, exponent)` for the nonzero exponents.
    pub fn parts(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i + 1, e))
    }
}

impl Ord for CycleType {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        let n = self.0.len().max(o.0.len());
        for i in 0..n {
            let (a, b) = (self.exponent(i + 1), o.exponent(i + 1));
            if a != b {
                return b.cmp(&a);
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

/// Group average of `prod t_len^exponent`: `terms[c] / order` is the
/// coefficient of cycle type `c`.
///
/// Text form: `(t1^3 + 3*t1^1*t2^1 + 2*t3^1)/6`, terms in [`CycleType`] order,
/// a coefficient of 1 omitted and the empty monomial written `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleIndex {
    order: BigUint,
    terms: BTreeMap<CycleType, BigUint>,
}

impl CycleIndex {
    /// Cycle index of the group generated by listing all its permutations.
    pub fn of_group(perms: &[Vec<usize>]) -> Self {
        let mut terms: BTreeMap<CycleType, BigUint> = BTreeMap::new();
        for p in perms {
            *terms.entry(CycleType::of_permutation(p)).or_default() += 1u32;
        }
        CycleIndex {
            order: BigUint::from(perms.len()),
            terms,
        }
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Number of group elements with each cycle type.
    pub fn terms(&self) -> &BTreeMap<CycleType, BigUint> {
        &self.terms
    }

    pub fn coefficient(&self, c: &CycleType) -> BigRational {
        let n = self.terms.get(c).cloned().unwrap_or_default();
        BigRational::new(BigInt::from(n), BigInt::from(self.order.clone()))
    }

    /// Sum of the coefficients; 1 for every cycle index.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.keys().map(|c| self.coefficient(c)).fold(BigRational::zero(), |a, b| a + b)
    }

    /// Number of points acted on, if all terms agree.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|c| c.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Substitutes `t_i = x^i / (1 - x^i)`, keeping the denominator factored.
    pub fn substitute_at_least_one(&self) -> FactoredGf {
        let Some(shift) = self.degree() else {
            return FactoredGf::zero();
        };
        // exponent of Psi_d in prod (1 - x^i)^{e_i}
        let psi_exps = |c: &CycleType| {
            let mut m: BTreeMap<usize, u32> = BTreeMap::new();
            for (len, e) in c.parts() {
                for d in (1..=len).filter(|d| len % d == 0) {
                    *m.entry(d).or_default() += e;
                }
            }
            m
        };
        let mut den: BTreeMap<usize, u32> = BTreeMap::new();
        for c in self.terms.keys() {
            for (d, e) in psi_exps(c) {
                let x = den.entry(d).or_default();
                *x = (*x).max(e);
            }
        }
        let mut num = Poly::zero();
        for (c, n) in &self.terms {
            let have = psi_exps(c);
            let mut t = Poly::new([BigInt::from(n.clone())]);
            for (&d, &e) in &den {
                let missing = e - have.get(&d).copied().unwrap_or(0);
                if missing > 0 {
                    t = &t * &Poly::psi(d).pow(missing);
                }
            }
            num = &num + &t;
        }
        FactoredGf::new(shift, num, den)
            .div_integer(&BigInt::from(self.order.clone()))
            .expect("group order divides the orbit sum")
            .reduced()
    }
}

/// Weight substituted for each edge slot cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// `t_i = x^i / (1 - x^i)`: every underlying edge carries one or more parallel edges.
    AtLeastOneEdge,
    /// `t_i = x^i`: each underlying graph counts once, as `x^E`.
    CountUnderlying,
}

/// Pólya substitution into `z`.
///
/// ```
/// use graphcensus::polya::{polya_substitute, CycleIndex, Weight};
///
/// let z: CycleIndex = "(t1^2 + t2^1)/2".parse().unwrap();
/// let g = polya_substitute(&z, Weight::AtLeastOneEdge);
/// let s: Vec<String> = g.series(8).unwrap().iter().map(|c| c.to_string()).collect();
/// assert_eq!(s.join(","), "0,0,1,1,2,2,3,3");
/// ```
pub fn polya_substitute(z: &CycleIndex, weight: Weight) -> RationalGf {
    match weight {
        Weight::AtLeastOneEdge => z.substitute_at_least_one().to_rational(),
        Weight::CountUnderlying => {
            let mut num = Poly::zero();
            for (c, n) in z.terms() {
                num = &num + &Poly::monomial(BigInt::from(n.clone()), c.degree());
            }
            RationalGf::new(num, Poly::new([BigInt::from(z.order().clone())]))
                .expect("nonzero group order")
        }
    }
}

/// Cycle index of the automorphism group of a connected simple undirected
/// graph acting on its edges.
///
/// ```
/// use graphcensus::{polya::edge_cycle_index, Graph};
///
/// let star = Graph::from_edges(false, 4, [(0, 1), (0, 2), (0, 3)]).unwrap();
/// assert_eq!(edge_cycle_index(&star).unwrap().to_string(), "(t1^3 + 3*t1^1*t2^1 + 2*t3^1)/6");
/// ```
pub fn edge_cycle_index(g: &Graph) -> Result<CycleIndex> {
    let t = classify(g);
    if g.is_directed() || t.has_loop || t.has_multiedge {
        return Err(Error::InvalidGraph("edge cycle index needs a simple undirected graph".into()));
    }
    if !t.weakly_connected || g.vertex_count() == 0 {
        return Err(Error::InvalidGraph("edge cycle index needs a connected graph".into()));
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|(e, _)| e).collect();
    let index: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let perms: Vec<Vec<usize>> = automorphisms(g)
        .iter()
        .map(|p| {
            edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    index[&(a, b)]
                })
                .collect()
        })
        .collect();
    Ok(CycleIndex::of_group(&perms))
}

impl fmt::Display for CycleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(c, n)| {
                let vars: Vec<String> = c.parts().map(|(l, e)| format!("t{l}^{e}")).collect();
                match (n.is_one(), vars.is_empty()) {
                    (_, true) => n.to_string(),
                    (true, false) => vars.join("*"),
                    (false, false) => format!("{n}*{}", vars.join("*")),
                }
            })
            .collect();
        write!(f, "({})/{}", terms.join(" + "), self.order)
    }
}

impl FromStr for CycleIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |r: &str| Error::parse(1, format!("cycle index `{s}`: {r}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact.strip_prefix('(').ok_or_else(|| bad("missing `(`"))?;
        let (body, order) = body.rsplit_once(")/").ok_or_else(|| bad("missing `)/order`"))?;
        let order: BigUint = order.parse().map_err(|_| bad("bad group order"))?;
        let mut terms: BTreeMap<CycleType, BigUint> = BTreeMap::new();
        for term in body.split('+') {
            let mut coef = BigUint::one();
            let mut exps: Vec<u32> = Vec::new();
            for (k, factor) in term.split('*').enumerate() {
                if let Some(var) = factor.strip_prefix('t') {
                    let (len, e) = var.split_once('^').ok_or_else(|| bad("variable without `^`"))?;
                    let len: usize = len.parse().map_err(|_| bad("bad cycle length"))?;
                    let e: u32 = e.parse().map_err(|_| bad("bad exponent"))?;
                    if len == 0 {
                        return Err(bad("cycle length 0"));
                    }
                    if exps.len() < len {
                        exps.resize(len, 0);
                    }
                    exps[len - 1] += e;
                } else if k == 0 {
                    coef = factor.parse().map_err(|_| bad("bad coefficient"))?;
                } else {
                    return Err(bad("coefficient must come first"));
                }
            }
            *terms.entry(CycleType::new(exps)).or_default() += coef;
        }
        let total: BigUint = terms.values().sum();
        if total != order {
            return Err(bad("coefficients do not sum to 1"));
        }
        Ok(CycleIndex { order, terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(false, n, edges.iter().copied()).unwrap()
    }

    fn series(z: &CycleIndex, n: usize) -> Vec<i64> {
        z.substitute_at_least_one()
            .series(n)
            .unwrap()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect()
    }

    #[test]
    fn square_and_k4() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let z = edge_cycle_index(&c4).unwrap();
        assert_eq!(z, "(t1^4 + 2*t4^1 + 2*t1^2*t2^1 + 3*t2^2)/8".parse().unwrap());
        assert_eq!(series(&z, 11), [0, 0, 0, 0, 1, 1, 3, 4, 8, 10, 16]);
        let g = z.substitute_at_least_one();
        assert_eq!(g.to_string(), "x^4*(1 - x + x^2)/((1 - x)^4*(1 + x)^2*(1 + x^2))");

        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let z = edge_cycle_index(&k4).unwrap();
        assert_eq!(z, "(t1^6 + 9*t1^2*t2^2 + 8*t3^2 + 6*t2^1*t4^1)/24".parse().unwrap());
    }

    #[test]
    fn diamond_has_an_inert_diagonal() {
        let diamond = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        let z = edge_cycle_index(&diamond).unwrap();
        assert_eq!(z.to_string(), "(t1^5 + 3*t1^1*t2^2)/4");
    }

    #[test]
    fn coefficients_sum_to_one() {
        let p = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let z = edge_cycle_index(&p).unwrap();
        assert_eq!(z.coefficient_sum(), BigRational::one());
        assert_eq!(z.degree(), Some(6));
    }

    #[test]
    fn rejects_non_simple_or_disconnected() {
        assert!(edge_cycle_index(&graph(2, &[(0, 1), (0, 1)])).is_err());
        assert!(edge_cycle_index(&graph(3, &[(0, 1)])).is_err());
        assert!(edge_cycle_index(&graph(2, &[(0, 1), (1, 1)])).is_err());
    }

    #[test]
    fn count_underlying_is_a_monomial() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let z = edge_cycle_index(&k4).unwrap();
        let g = polya_substitute(&z, Weight::CountUnderlying);
        assert_eq!(g, RationalGf::from_poly(Poly::monomial(1, 6)));
    }

    #[test]
    fn text_round_trip_and_errors() {
        for s in ["(t1^3 + 3*t1^1*t2^1 + 2*t3^1)/6", "(1)/1", "(t1^2 + t2^1)/2"] {
            assert_eq!(s.parse::<CycleIndex>().unwrap().to_string(), s);
        }
        assert!("(t1^2 + t2^1)/3".parse::<CycleIndex>().is_err());
        assert!("t1^2/1".parse::<CycleIndex>().is_err());
        assert!("(t0^1)/1".parse::<CycleIndex>().is_err());
    }
}
