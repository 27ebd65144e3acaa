//! Dense univariate polynomials over a field, and the rational function
//! field `Q(λ)` built on top of them.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::polyring::Coeff;

/// The operations the Euclidean algorithm needs.
pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on division by zero.
    fn div(&self, other: &Self) -> Self;
    fn from_u64(n: u64) -> Self;
}

impl Field for Coeff {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        assert!(!Zero::is_zero(other), "division by zero");
        self / other
    }
    fn from_u64(n: u64) -> Self {
        Coeff::from_integer(n.into())
    }
}

/// `sum c_k t^k`, coefficients indexed by power, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c t^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul(&F::from_u64(k as u64)))
                .collect(),
        )
    }

    /// Divides by `t^k`; the caller guarantees `k <= order`.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem = self.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            let c = rem.coeffs[r].div(&lead);
            quot[r - d] = c.clone();
            rem = rem.sub(&divisor.mul(&Self::monomial(c, r - d)));
        }
        (Self::new(quot), rem)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = F::one().div(l);
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True when the polynomial has no repeated factor over the algebraic
    /// closure of `F` (characteristic zero).
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }
}

/// Polynomials in `λ` over the rationals.
pub type QPoly = UniPoly<Coeff>;

/// An element `num / den` of `Q(λ)`, kept reduced with a monic denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num,
                den: QPoly::constant(<Coeff as One>::one()),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero").clone();
        let inv = <Coeff as One>::one() / lead;
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc {
            num: p,
            den: QPoly::constant(<Coeff as One>::one()),
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(QPoly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(QPoly::constant(<Coeff as One>::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero");
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }
    fn from_u64(n: u64) -> Self {
        RatFunc::from_poly(QPoly::constant(Coeff::from_integer(n.into())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::int;

    fn q(cs: &[i64]) -> QPoly {
        QPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn euclid_over_rationals() {
        // (t - 1)(t - 2) and (t - 1)(t + 3)
        let a = q(&[2, -3, 1]);
        let b = q(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), q(&[-1, 1]));
        let (quot, rem) = a.div_rem(&q(&[-1, 1]));
        assert_eq!(quot, q(&[-2, 1]));
        assert!(rem.is_zero());
        assert!(a.is_squarefree());
        assert!(!q(&[1, -2, 1]).is_squarefree());
        assert_eq!(a.eval(&int(2)), int(0));
    }

    #[test]
    fn rational_functions_reduce() {
        let lam = q(&[0, 1]);
        let r = RatFunc::new(lam.mul(&q(&[1, 1])), lam.mul(&q(&[2])));
        assert_eq!(
            r.numerator(),
            &q(&[1, 1]).scale(&Coeff::new(1.into(), 2.into()))
        );
        assert_eq!(r.denominator(), &q(&[1]));
        let s = r.div(&r);
        assert_eq!(s, RatFunc::one());
    }

    #[test]
    fn squarefree_over_function_field() {
        // t^2 + 2 λ t + λ^2 = (t + λ)^2 is not squarefree; t^2 + λ is.
        let lam = RatFunc::from_poly(q(&[0, 1]));
        let sq = UniPoly::new(vec![lam.mul(&lam), lam.add(&lam), RatFunc::one()]);
        assert!(!sq.is_squarefree());
        let sf = UniPoly::new(vec![lam.clone(), RatFunc::zero(), RatFunc::one()]);
        assert!(sf.is_squarefree());
    }
}
