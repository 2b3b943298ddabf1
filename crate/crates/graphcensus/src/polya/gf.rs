//! Rational generating functions with exact power-series expansion.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// `num / den` in lowest terms over the integers.
///
/// The denominator is normalized to a positive constant term (or a positive
/// leading coefficient when the constant term vanishes), so equal functions
/// have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalGf {
    num: Poly,
    den: Poly,
}

impl RationalGf {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Series("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RationalGf {
                num,
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        let mut c = if c.is_zero() { BigInt::one() } else { c };
        let lead = if den.coeff(0).is_zero() { den.leading() } else { den.coeff(0) };
        if lead.is_negative() {
            c = -c;
        }
        num = num.div_scalar(&c);
        den = den.div_scalar(&c);
        Ok(RationalGf { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalGf {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// First `n_terms` Taylor coefficients at `x = 0`.
    ///
    /// ```
    /// use graphcensus::polya::{Poly, RationalGf};
    ///
    /// // x^3 / ((1 + x) (1 - x)^3)
    /// let den = &Poly::new([1, 1]) * &Poly::new([1, -1]).pow(3);
    /// let g = RationalGf::new(Poly::monomial(1, 3), den).unwrap();
    /// let s: Vec<String> = g.series(12).unwrap().iter().map(|c| c.to_string()).collect();
    /// assert_eq!(s.join(","), "0,0,0,1,2,4,6,9,12,16,20,25");
    /// ```
    pub fn series(&self, n_terms: usize) -> Result<Vec<BigInt>> {
        series_expand(&self.num, &self.den, n_terms)
    }

    fn add_ref(&self, o: &RationalGf) -> RationalGf {
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        RationalGf::new(num, &self.den * &o.den).expect("nonzero denominators")
    }
}

impl Add for &RationalGf {
    type Output = RationalGf;
    fn add(self, o: &RationalGf) -> RationalGf {
        self.add_ref(o)
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Taylor coefficients of `num / den`; fails when `den(0) = 0` or a
/// coefficient is not an integer.
pub fn series_expand(num: &Poly, den: &Poly, n_terms: usize) -> Result<Vec<BigInt>> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::Series("denominator vanishes at x = 0".into()));
    }
    let d = den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        let mut acc = num.coeff(n);
        for k in 1..d.len().min(n + 1) {
            acc -= &d[k] * &out[n - k];
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            return Err(Error::Series(format!("coefficient {n} is not an integer")));
        }
        out.push(q);
    }
    Ok(out)
}

/// `x^shift * num / prod_d Psi_d^e_d`, the shape produced by Pólya substitution
/// with `t_i = x^i / (1 - x^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredGf {
    shift: usize,
    num: Poly,
    den: BTreeMap<usize, u32>,
}

impl FactoredGf {
    pub fn new(shift: usize, num: Poly, den: BTreeMap<usize, u32>) -> Self {
        let den = den.into_iter().filter(|&(_, e)| e > 0).collect();
        FactoredGf { shift, num, den }
    }

    pub fn zero() -> Self {
        FactoredGf::new(0, Poly::zero(), BTreeMap::new())
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    /// Exponent of each `Psi_d` in the denominator.
    pub fn denominator_factors(&self) -> &BTreeMap<usize, u32> {
        &self.den
    }

    pub fn denominator(&self) -> Poly {
        self.den
            .iter()
            .fold(Poly::one(), |acc, (&d, &e)| &acc * &Poly::psi(d).pow(e))
    }

    /// Sum over a common denominator (exponent-wise maximum).
    pub fn add(&self, o: &FactoredGf) -> FactoredGf {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        let mut den = self.den.clone();
        for (&d, &e) in &o.den {
            let x = den.entry(d).or_insert(0);
            *x = (*x).max(e);
        }
        let lift = |g: &FactoredGf, shift: usize| {
            let mut p = g.num.shift(g.shift - shift);
            for (&d, &e) in &den {
                let have = g.den.get(&d).copied().unwrap_or(0);
                if e > have {
                    p = &p * &Poly::psi(d).pow(e - have);
                }
            }
            p
        };
        let shift = self.shift.min(o.shift);
        let num = &lift(self, shift) + &lift(o, shift);
        FactoredGf::new(shift, num, den)
    }

    /// Divides the numerator by an integer that divides all its coefficients.
    pub fn div_integer(&self, c: &BigInt) -> Result<FactoredGf> {
        let r = self.num.coeffs().iter().all(|x| (x % c).is_zero());
        if !r {
            return Err(Error::Series(format!("numerator not divisible by {c}")));
        }
        Ok(FactoredGf::new(self.shift, self.num.div_scalar(c), self.den.clone()))
    }

    /// Cancels every `Psi_d` and power of `x` shared by numerator and denominator.
    pub fn reduced(&self) -> FactoredGf {
        let mut num = self.num.clone();
        let mut shift = self.shift;
        if num.is_zero() {
            return FactoredGf::zero();
        }
        while num.coeff(0).is_zero() {
            num = Poly::new(num.coeffs()[1..].to_vec());
            shift += 1;
        }
        let mut den = self.den.clone();
        for (&d, e) in den.iter_mut() {
            let psi = Poly::psi(d);
            while *e > 0 {
                match num.div_exact(&psi) {
                    Some(q) => {
                        num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        FactoredGf::new(shift, num, den)
    }

    pub fn to_rational(&self) -> RationalGf {
        RationalGf::new(self.num.shift(self.shift), self.denominator()).expect("nonzero denominator")
    }

    pub fn series(&self, n_terms: usize) -> Result<Vec<BigInt>> {
        series_expand(&self.num.shift(self.shift), &self.denominator(), n_terms)
    }
}

impl fmt::Display for FactoredGf {
    /// e.g. `x^4*(1 - x + x^2)/((1 - x)^4*(1 + x)^2*(1 + x^2))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut top = Vec::new();
        match self.shift {
            0 => {}
            1 => top.push("x".to_string()),
            s => top.push(format!("x^{s}")),
        }
        if self.num != Poly::one() || top.is_empty() {
            let n = self.num.to_string();
            top.push(if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({n})")
            } else {
                n
            });
        }
        f.write_str(&top.join("*"))?;
        if self.den.is_empty() {
            return Ok(());
        }
        let parts: Vec<String> = self
            .den
            .iter()
            .map(|(&d, &e)| {
                let p = format!("({})", Poly::psi(d));
                if e == 1 {
                    p
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        if parts.len() == 1 {
            write!(f, "/{}", parts[0])
        } else {
            write!(f, "/({})", parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn geometric_series() {
        let g = RationalGf::new(Poly::one(), Poly::new([1, -1])).unwrap();
        assert_eq!(g.series(5).unwrap(), ints(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn degenerate_denominator() {
        let g = RationalGf::new(Poly::one(), Poly::new([0, 1])).unwrap();
        assert!(g.series(3).is_err());
        assert!(series_expand(&Poly::one(), &Poly::new([2, 1]), 3).is_err());
        assert!(RationalGf::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn normalization_is_unique() {
        let a = RationalGf::new(Poly::new([0, 2]), Poly::new([-2, 2])).unwrap();
        let b = RationalGf::new(Poly::new([0, -1]), Poly::new([1, -1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.denominator().coeff(0), BigInt::one());
        let c = RationalGf::new(
            &Poly::new([0, 1]) * &Poly::new([1, 1]),
            &Poly::new([1, 1]) * &Poly::new([1, -1]),
        )
        .unwrap();
        assert_eq!(c, RationalGf::new(Poly::new([0, 1]), Poly::new([1, -1])).unwrap());
        assert_eq!(&c + &b, RationalGf::from_poly(Poly::zero()));
    }

    #[test]
    fn g2_expansion() {
        // x^4 / ((1 + x)(1 - x)^4)
        let mut den = BTreeMap::new();
        den.insert(1, 4);
        den.insert(2, 1);
        let g = FactoredGf::new(4, Poly::one(), den);
        assert_eq!(g.series(10).unwrap(), ints(&[0, 0, 0, 0, 1, 3, 7, 13, 22, 34]));
        assert_eq!(g.to_string(), "x^4/((1 - x)^4*(1 + x))");
    }

    #[test]
    fn factored_sum_and_reduction() {
        // x/(1-x) + x/(1+x) = 2x/((1-x)(1+x))
        let a = FactoredGf::new(1, Poly::one(), [(1, 1)].into_iter().collect());
        let b = FactoredGf::new(1, Poly::one(), [(2, 1)].into_iter().collect());
        let s = a.add(&b);
        assert_eq!(s.series(6).unwrap(), ints(&[0, 2, 0, 2, 0, 2]));
        // (1 - x^2)/(1 - x) reduces to 1 + x
        let c = FactoredGf::new(0, Poly::new([1, 0, -1]), [(1, 1)].into_iter().collect()).reduced();
        assert!(c.denominator_factors().is_empty());
        assert_eq!(c.numerator(), &Poly::new([1, 1]));
        assert_eq!(c.to_rational(), RationalGf::from_poly(Poly::new([1, 1])));
    }
}
