//! Sparse multivariate polynomials over the rationals, ordered by a local
//! monomial ordering.
//!
//! Terms are kept sorted from the leading monomial downwards, so two
//! polynomials are equal exactly when their term vectors are equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact coefficient type.
pub type Coeff = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
}

/// An exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// If the monomial is `x_i^e` with `e > 0`, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// Negative-degree ordering with a reverse-lexicographic tie-break.
///
/// Lower total degree is greater, so the constant monomial is the maximum.
/// Among monomials of equal degree, the one with the smaller exponent at the
/// first differing variable is greater (e.g. `y^2 > x*y`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LocalOrder;

impl LocalOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        b.degree().cmp(&a.degree()).then_with(|| {
            for (x, y) in a.0.iter().zip(&b.0) {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        LocalOrder.compare(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in a fixed number of variables with exact rational
/// coefficients. Terms are sorted in decreasing [`LocalOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial { nvars, terms }
    }

    /// The coordinate function `x_index`.
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::monomial(Monomial::var(nvars, index), Coeff::one())
    }

    /// Builds a polynomial from arbitrary terms, merging repeated monomials
    /// and dropping zero coefficients.
    ///
    /// Panics if a monomial has the wrong length.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial length does not match ring");
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: BTreeMap<Monomial, Coeff>) -> Self {
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Polynomial { nvars, terms }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            nvars,
            terms.iter().map(|(c, e)| {
                (
                    Monomial::new(e.to_vec()),
                    Coeff::from_integer(BigInt::from(*c)),
                )
            }),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing local order (leading term first).
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Coeff::zero(),
        }
    }

    /// The greatest term under [`LocalOrder`]. For a polynomial with a
    /// nonzero constant term, that term leads.
    pub fn leading_term(&self) -> Result<(&Monomial, &Coeff), PolyError> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximal total degree of a term; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    /// Minimal total degree of a term (the order at the origin).
    pub fn order(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    /// Mora's écart: total degree minus degree of the leading monomial.
    pub fn ecart(&self) -> u32 {
        match self.leading_monomial() {
            Some(lm) => self.total_degree() - lm.degree(),
            None => 0,
        }
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma * mb).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    // Linear merge of two sorted term lists.
    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        let sign = |c: &Coeff| if negate_other { -c } else { c.clone() };
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb) {
                    Ordering::Greater => {
                        out.push((ma.clone(), ca.clone()));
                        a.next();
                    }
                    Ordering::Less => {
                        out.push((mb.clone(), sign(cb)));
                        b.next();
                    }
                    Ordering::Equal => {
                        let c = ca + sign(cb);
                        if !c.is_zero() {
                            out.push((ma.clone(), c));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((ma, ca)), None) => {
                    out.push((ma.clone(), ca.clone()));
                    a.next();
                }
                (None, Some((mb, cb))) => {
                    out.push((mb.clone(), sign(cb)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    /// Multiplies by the single term `c * m`. Order is preserved since the
    /// local ordering is multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, d)| (t * m, d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.nvars), c)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to `x_index`.
    pub fn partial(&self, index: usize) -> Result<Polynomial, PolyError> {
        if index >= self.nvars {
            return Err(PolyError::VariableOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.0[index];
            (e > 0).then(|| {
                let mut d = m.clone();
                d.0[index] -= 1;
                (d, c * Coeff::from_integer(BigInt::from(e)))
            })
        });
        Ok(Polynomial::from_terms(self.nvars, terms))
    }

    /// Rescales by a nonzero rational so that the coefficients are coprime
    /// integers and the leading coefficient is positive.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let denom_lcm = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut content = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&denom_lcm / c.denom());
            content = content.gcd(&n);
        }
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        let factor = Coeff::new(denom_lcm, content);
        self.scale(&factor)
    }

    /// Evaluates every variable at zero.
    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Substitutes polynomials (all in a common ring) for the variables.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = images.first().map(Polynomial::nvars).unwrap_or(0);
        for img in images {
            if img.nvars != target {
                return Err(PolyError::DimensionMismatch {
                    left: target,
                    right: img.nvars,
                });
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    term = &term * &img.pow(e);
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Renders with the given variable names; falls back to `x0, x1, ...`
    /// when `names` is too short.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self
                    .names
                    .get(i)
                    .cloned()
                    .unwrap_or_else(|| format!("x{i}"));
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&[]).fmt(f)
    }
}

// Operator forms panic on a ring mismatch; use the named methods to get a
// `Result` instead.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Shorthand for an integer coefficient.
pub fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(nvars: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(nvars, terms)
    }

    #[test]
    fn add_cancels_and_identity() {
        let xy = p(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let mx = p(2, &[(-1, &[1, 0])]);
        assert_eq!(xy.add(&mx).unwrap(), p(2, &[(1, &[0, 1])]));
        assert_eq!(Polynomial::zero(2).add(&xy).unwrap(), xy);
        let a = p(1, &[(1, &[2]), (1, &[0])]);
        let b = p(1, &[(1, &[2]), (-1, &[0])]);
        assert_eq!(a.add(&b).unwrap(), p(1, &[(2, &[2])]));
    }

    #[test]
    fn mul_examples() {
        let a = p(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let b = p(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(a.mul(&b).unwrap(), p(2, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert_eq!(Polynomial::one(2).mul(&a).unwrap(), a);
        assert_eq!(b.pow(2), p(2, &[(1, &[2, 0]), (2, &[1, 1]), (1, &[0, 2])]));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(2, 0);
        let b = Polynomial::var(3, 0);
        assert!(matches!(
            a.add(&b),
            Err(PolyError::DimensionMismatch { left: 2, right: 3 })
        ));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn partial_derivatives() {
        let cusp = p(2, &[(1, &[2, 0]), (-1, &[0, 3])]);
        assert_eq!(cusp.partial(0).unwrap(), p(2, &[(2, &[1, 0])]));
        assert_eq!(cusp.partial(1).unwrap(), p(2, &[(-3, &[0, 2])]));
        let f = p(3, &[(1, &[1, 0, 0]), (2, &[0, 1, 0]), (1, &[0, 0, 2])]);
        assert_eq!(f.partial(2).unwrap(), p(3, &[(2, &[0, 0, 1])]));
        assert_eq!(
            f.partial(3),
            Err(PolyError::VariableOutOfRange { index: 3, nvars: 3 })
        );
    }

    #[test]
    fn leading_terms_under_local_order() {
        let a = p(1, &[(1, &[0]), (1, &[1])]);
        assert_eq!(a.leading_term().unwrap(), (&Monomial::one(1), &int(1)));
        let cusp = p(2, &[(1, &[2, 0]), (-1, &[0, 3])]);
        assert_eq!(
            cusp.leading_term().unwrap(),
            (&Monomial::new(vec![2, 0]), &int(1))
        );
        let b = p(2, &[(1, &[0, 2]), (1, &[1, 1])]);
        assert_eq!(
            b.leading_term().unwrap(),
            (&Monomial::new(vec![0, 2]), &int(1))
        );
        assert_eq!(
            Polynomial::zero(2).leading_term(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn leading_term_agrees_with_enumeration() {
        // Independent comparator written straight from the order's definition.
        fn greater(a: &[u32], b: &[u32]) -> bool {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            if da != db {
                return da < db;
            }
            match a.iter().zip(b).find(|(x, y)| x != y) {
                Some((x, y)) => x < y,
                None => false,
            }
        }
        for f in [
            p(2, &[(1, &[2, 0]), (-1, &[0, 3])]),
            p(2, &[(1, &[0, 2]), (1, &[1, 1])]),
        ] {
            let best = f
                .terms()
                .iter()
                .map(|(m, _)| m)
                .find(|m| {
                    f.terms()
                        .iter()
                        .all(|(o, _)| o == *m || greater(m.exponents(), o.exponents()))
                })
                .unwrap();
            assert_eq!(best, f.leading_monomial().unwrap());
        }
    }

    fn all_monomials(nvars: usize, max_deg: u32) -> Vec<Monomial> {
        let mut out = vec![Vec::new()];
        for _ in 0..nvars {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..=max_deg).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        out.into_iter()
            .filter(|e| e.iter().sum::<u32>() <= max_deg)
            .map(Monomial::new)
            .collect()
    }

    #[test]
    fn local_order_axioms_exhaustive() {
        for nvars in 1..=3 {
            let ms = all_monomials(nvars, 4);
            let one = Monomial::one(nvars);
            for i in 0..nvars {
                assert_eq!(one.cmp(&Monomial::var(nvars, i)), Ordering::Greater);
            }
            for a in &ms {
                assert_eq!(a.cmp(a), Ordering::Equal);
                for b in &ms {
                    let ab = a.cmp(b);
                    assert_eq!(ab, b.cmp(a).reverse());
                    if a != b {
                        assert_ne!(ab, Ordering::Equal);
                    }
                    for c in &ms {
                        if ab == Ordering::Less {
                            assert_eq!((a * c).cmp(&(b * c)), Ordering::Less);
                            if b.cmp(c) == Ordering::Less {
                                assert_eq!(a.cmp(c), Ordering::Less);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_clears_denominators() {
        let f = Polynomial::from_terms(
            2,
            vec![
                (
                    Monomial::new(vec![1, 0]),
                    Coeff::new(BigInt::from(-2), BigInt::from(3)),
                ),
                (
                    Monomial::new(vec![0, 2]),
                    Coeff::new(BigInt::from(4), BigInt::from(9)),
                ),
            ],
        );
        assert_eq!(f.primitive(), p(2, &[(3, &[1, 0]), (-2, &[0, 2])]));
    }

    #[test]
    fn display_is_readable() {
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let f = p(2, &[(1, &[2, 0]), (-1, &[0, 3]), (3, &[0, 0])]);
        assert_eq!(f.display_with(&names).to_string(), "3 + x^2 - y^3");
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..4, nvars), -9i64..=9), 0..6).prop_map(
            move |ts| {
                Polynomial::from_terms(
                    nvars,
                    ts.into_iter().map(|(e, c)| (Monomial::new(e), int(c))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn leibniz_rule(a in arb_poly(3), b in arb_poly(3), i in 0usize..3) {
            let lhs = (&a * &b).partial(i).unwrap();
            let rhs = &(&a * &b.partial(i).unwrap()) + &(&b * &a.partial(i).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn terms_are_canonical(a in arb_poly(3), b in arb_poly(3)) {
            let s = &a * &b;
            prop_assert!(s.terms().iter().all(|(_, c)| !c.is_zero()));
            prop_assert!(s.terms().windows(2).all(|w| w[0].0 > w[1].0));
        }
    }
}
