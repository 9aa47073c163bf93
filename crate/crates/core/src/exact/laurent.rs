//! Laurent polynomials in the quantum variable `A` with rational
//! coefficients: the coefficient ring of every skein element.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Result, SkeinError};
use crate::exact::{rat_int, Rational};

/// An element of `Q[A, A^{-1}]`. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

/// Result of [`LaurentPoly::divisibility_order`]: `Finite(k)` is the largest
/// `k` with `f` in `g^k Q[A, A^{-1}]`; `Infinite` is the sentinel for `f = 0`
/// (or a unit divisor), where every power divides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisibilityOrder {
    Finite(u32),
    Infinite,
}

impl DivisibilityOrder {
    pub fn at_least(&self, k: u32) -> bool {
        match self {
            DivisibilityOrder::Finite(n) => *n >= k,
            DivisibilityOrder::Infinite => true,
        }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, rat_int(1))
    }

    /// The variable `A` itself.
    pub fn var() -> Self {
        Self::monomial(1, rat_int(1))
    }

    /// `c * A^k`.
    pub fn monomial(k: i64, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    /// `A^k` with integer coefficient 1.
    pub fn a_pow(k: i64) -> Self {
        Self::monomial(k, rat_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    /// Convenience constructor from `(exponent, integer coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(k, c) in terms {
            p.add_term(k, rat_int(c));
        }
        p
    }

    /// The loop value `delta = -A^2 - A^{-2}`.
    pub fn delta() -> Self {
        Self::from_terms(&[(2, -1), (-2, -1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Laurent powers: negative exponents are allowed only for units
    /// (single monomials).
    pub fn pow_i(&self, n: i64) -> Self {
        if n >= 0 {
            return self.pow(n as u32);
        }
        let inv = self.unit_inverse().expect("pow_i with negative exponent needs a unit");
        inv.pow((-n) as u32)
    }

    /// Units of `Q[A, A^{-1}]` are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (k, c) = self.coeffs.iter().next().unwrap();
        Some(Self::monomial(-k, c.recip()))
    }

    /// Evaluation at `A = -1`: the coefficient-level augmentation.
    pub fn eval_at_minus_one(&self) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in &self.coeffs {
            if k.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Evaluation at an arbitrary rational point (nonzero when negative
    /// exponents are present).
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in &self.coeffs {
            let mut p = Rational::one();
            let e = k.unsigned_abs();
            for _ in 0..e {
                p *= x;
            }
            if *k < 0 {
                p = p.recip();
            }
            acc += c * p;
        }
        acc
    }

    /// Exact division in `Q[A, A^{-1}]`; `None` when `g` does not divide
    /// `self`.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Clear the units A^min so both operands become ordinary polynomials
        // with nonzero constant term; divisibility is insensitive to units.
        let fshift = self.min_exp().unwrap();
        let gshift = g.min_exp().unwrap();
        let f = self.shift(-fshift);
        let g0 = g.shift(-gshift);
        let fd = f.max_exp().unwrap();
        let gd = g0.max_exp().unwrap();
        if fd < gd {
            return None;
        }
        let glead = g0.coeff(gd);
        let mut rem = f;
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let rd = rem.max_exp().unwrap();
            if rd < gd {
                return None;
            }
            let q = rem.coeff(rd) / &glead;
            let qm = Self::monomial(rd - gd, q);
            rem = &rem - &(&qm * &g0);
            quot = &quot + &qm;
        }
        Some(quot.shift(fshift - gshift))
    }

    /// Largest `k` with `self` in `g^k Q[A, A^{-1}]`.
    pub fn divisibility_order(&self, g: &Self) -> Result<DivisibilityOrder> {
        if g.is_zero() {
            return Err(SkeinError::ZeroDivisor);
        }
        if self.is_zero() || g.is_unit() {
            return Ok(DivisibilityOrder::Infinite);
        }
        let mut cur = self.clone();
        let mut k = 0u32;
        while let Some(q) = cur.exact_div(g) {
            cur = q;
            k += 1;
        }
        Ok(DivisibilityOrder::Finite(k))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &rhs.coeffs {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.coeffs {
            self.add_term(*k, c.clone());
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            match (*k, coeff_is_one) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "A")?,
                (1, false) => write!(f, "{}*A", mag)?,
                (e, true) => write!(f, "A^{}", e)?,
                (e, false) => write!(f, "{}*A^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn eval_at_minus_one() {
        // A + A^{-1} |-> -2
        let p = LaurentPoly::from_terms(&[(1, 1), (-1, 1)]);
        assert_eq!(p.eval_at_minus_one(), rat_int(-2));
        // delta |-> -2
        assert_eq!(LaurentPoly::delta().eval_at_minus_one(), rat_int(-2));
        // (A+1) * f |-> 0 for a messy f
        let a1 = LaurentPoly::from_terms(&[(1, 1), (0, 1)]);
        let fs = LaurentPoly::from_terms(&[(5, 3), (-4, 7), (0, -2)]);
        assert_eq!((&a1 * &fs).eval_at_minus_one(), rat_int(0));
    }

    #[test]
    fn divisibility_orders() {
        let a1 = LaurentPoly::from_terms(&[(1, 1), (0, 1)]);
        // (A - A^{-1})^2 has order 2 at A+1
        let f = LaurentPoly::from_terms(&[(1, 1), (-1, -1)]).pow(2);
        assert_eq!(f.divisibility_order(&a1).unwrap(), DivisibilityOrder::Finite(2));
        assert_eq!(a1.divisibility_order(&a1).unwrap(), DivisibilityOrder::Finite(1));
        assert_eq!(
            LaurentPoly::var().divisibility_order(&a1).unwrap(),
            DivisibilityOrder::Finite(0)
        );
        assert_eq!(
            LaurentPoly::zero().divisibility_order(&a1).unwrap(),
            DivisibilityOrder::Infinite
        );
        assert_eq!(
            a1.divisibility_order(&LaurentPoly::zero()),
            Err(SkeinError::ZeroDivisor)
        );
    }

    #[test]
    fn exact_division() {
        let a1 = LaurentPoly::from_terms(&[(1, 1), (0, 1)]);
        let f = &a1 * &LaurentPoly::from_terms(&[(3, 2), (-2, 5)]);
        let q = f.exact_div(&a1).unwrap();
        assert_eq!(q, LaurentPoly::from_terms(&[(3, 2), (-2, 5)]));
        assert!(LaurentPoly::var().exact_div(&a1).is_none());
    }

    #[test]
    fn rational_coefficients_survive() {
        let p = LaurentPoly::monomial(-3, rat(2, 3));
        let q = LaurentPoly::monomial(3, rat(3, 2));
        assert!((&p * &q).is_one());
    }
}
