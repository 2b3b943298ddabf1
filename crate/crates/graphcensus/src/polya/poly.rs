//! Dense integer polynomials in one variable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = Poly(coeffs.into_iter().map(Into::into).collect());
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![BigInt::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Poly::new(v)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `d`, which must divide them all.
    pub fn div_scalar(&self, d: &BigInt) -> Poly {
        Poly::new(self.0.iter().map(|c| {
            debug_assert!((c % d).is_zero());
            c / d
        }))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        Poly(v)
    }

    /// Primitive part with a positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let dn = d.degree()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let lead = d.leading();
        let mut rem = self.0.clone();
        let n = rem.len() - 1;
        if n < dn {
            return None;
        }
        let mut q = vec![BigInt::zero(); n - dn + 1];
        for i in (0..=n - dn).rev() {
            let top = &rem[i + dn];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.0.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            q[i] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Poly::new(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `d`.
    fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dn = d.degree().expect("nonzero divisor");
        let lead = d.leading();
        let mut r = self.clone();
        while let Some(rn) = r.degree() {
            if rn < dn {
                break;
            }
            let c = r.leading();
            r = &r.scale(&lead) - &d.scale(&c).shift(rn - dn);
        }
        r
    }

    /// Greatest common divisor, primitive with a positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Value at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `1 - x^k`.
    pub fn one_minus_power(k: usize) -> Poly {
        &Poly::one() - &Poly::monomial(1, k)
    }

    /// `Psi_d`: `1 - x` for `d = 1`, the `d`-th cyclotomic polynomial otherwise,
    /// so that `1 - x^i` is the product of `Psi_d` over the divisors `d` of `i`.
    pub fn psi(d: usize) -> Poly {
        assert!(d >= 1);
        if d == 1 {
            return Poly::one_minus_power(1);
        }
        let mut p = Poly::one_minus_power(d);
        for k in 1..d {
            if d.is_multiple_of(k) {
                p = p.div_exact(&Poly::psi(k)).expect("cyclotomic division");
            }
        }
        p
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.0.iter().map(|c| -c))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl fmt::Display for Poly {
    /// Ascending powers of `x`, e.g. `1 - x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_values() {
        assert_eq!(Poly::psi(1), Poly::new([1, -1]));
        assert_eq!(Poly::psi(2), Poly::new([1, 1]));
        assert_eq!(Poly::psi(4), Poly::new([1, 0, 1]));
        assert_eq!(Poly::psi(6), Poly::new([1, -1, 1]));
        assert_eq!(Poly::psi(12), Poly::new([1, 0, -1, 0, 1]));
        for i in 1..=12 {
            let mut prod = Poly::one();
            for d in (1..=i).filter(|d| i % d == 0) {
                prod = &prod * &Poly::psi(d);
            }
            assert_eq!(prod, Poly::one_minus_power(i));
        }
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = Poly::new([1, 1]);
        let b = Poly::new([1, -1, 1]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&Poly::new([2, 1])), None);
        let g = (&p * &Poly::new([3, 0, 2])).gcd(&(&p * &Poly::new([5, 7])));
        assert_eq!(g, p);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::new([1, -1, 1]).to_string(), "1 - x + x^2");
        assert_eq!(Poly::new([0, 0, -3]).to_string(), "-3*x^2");
    }
}
