//! Morse-point counting on plane monomial curves.
//!
//! The curve `{x^p = y^q}` is the image of `t -> (t^q, t^p)`. Pulling a
//! function back along this map turns critical points on the regular part
//! into roots `t != 0` of a one-variable derivative. For the deformation
//! `f + λ l` the roots that tend to `t = 0` as `λ -> 0` are counted by
//! comparing `t`-adic orders:
//!
//! ```text
//! count = ord_t F'(t, 0) - ord_t F'(t, λ)     (λ generic)
//! ```
//!
//! `λ` stays symbolic throughout; no root is ever approximated.

use num_integer::Integer;
use num_traits::One;
use rand::Rng;
use thiserror::Error;

use crate::invariants::{
    self, GenericityConfig, GermSpec, InvariantError, InvariantReport, LinearForm,
};
use crate::polyring::{Coeff, Monomial, Polynomial};
use crate::unipoly::{QPoly, RatFunc, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorsifyError {
    #[error("invalid curve exponents ({p}, {q}): need coprime 2 <= p < q")]
    InvalidCurve { p: u32, q: u32 },
    #[error("function must be a polynomial in the two variables x, y")]
    NotPlanar,
    #[error("function does not vanish at the origin")]
    NonVanishing,
    #[error("derivative of the pulled-back function is identically zero")]
    ZeroDerivative,
    #[error("perturbation pulls back to zero")]
    ZeroPerturbation,
    #[error("no general perturbation found in {0} draws")]
    NoGeneralPerturbation(usize),
    #[error("Morse counts disagree across perturbations: {0:?}")]
    PerturbationDisagreement(Vec<u64>),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// The germ `{x^p - y^q = 0} ⊂ (C^2, 0)` with `gcd(p, q) = 1`, `2 <= p < q`,
/// parametrized by `x = t^q`, `y = t^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialCurve {
    p: u32,
    q: u32,
}

impl MonomialCurve {
    pub fn new(p: u32, q: u32) -> Result<Self, MorsifyError> {
        if p < 2 || p >= q || p.gcd(&q) != 1 {
            return Err(MorsifyError::InvalidCurve { p, q });
        }
        Ok(MonomialCurve { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `x^p - y^q`.
    pub fn defining_equation(&self) -> Polynomial {
        Polynomial::from_terms(
            2,
            [
                (Monomial::new(vec![self.p, 0]), Coeff::one()),
                (Monomial::new(vec![0, self.q]), -Coeff::one()),
            ],
        )
    }

    pub fn germ(&self, f: Polynomial) -> Result<GermSpec, InvariantError> {
        GermSpec::new(2, vec![self.defining_equation()], f)
    }

    /// A linear form is general for the curve when it does not vanish on the
    /// tangent line (the `y`-axis), i.e. its pullback has the minimal order
    /// `p`.
    pub fn is_general(&self, form: &LinearForm) -> bool {
        form.nvars() == 2 && form.coefficients()[1] != 0
    }
}

/// Substitutes `x = t^q`, `y = t^p` into `f`.
pub fn pullback(curve: &MonomialCurve, f: &Polynomial) -> Result<QPoly, MorsifyError> {
    if f.nvars() != 2 {
        return Err(MorsifyError::NotPlanar);
    }
    if !f.vanishes_at_origin() {
        return Err(MorsifyError::NonVanishing);
    }
    let mut acc = QPoly::zero();
    for (m, c) in f.terms() {
        let e = m.exponents();
        let k = (curve.q * e[0] + curve.p * e[1]) as usize;
        acc = acc.add(&QPoly::monomial(c.clone(), k));
    }
    Ok(acc)
}

/// `F(t, λ) = sum_k c_k(λ) t^k` with polynomial coefficients in `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbedPullback {
    coeffs: Vec<QPoly>,
}

impl PerturbedPullback {
    /// `base(t) + λ * perturbation(t)`.
    pub fn new(base: &QPoly, perturbation: &QPoly) -> Self {
        let n = base.coeffs().len().max(perturbation.coeffs().len());
        let coeffs = (0..n)
            .map(|k| QPoly::new(vec![base.coeff(k), perturbation.coeff(k)]))
            .collect();
        PerturbedPullback { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(QPoly::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// `d/dt`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Coeff::from_integer((k as u64).into())))
            .collect();
        PerturbedPullback { coeffs }.trimmed()
    }

    /// The specialization `λ = 0`.
    pub fn at_zero(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c.coeff(0)).collect())
    }

    /// `t`-adic order over the field `Q(λ)`.
    pub fn generic_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn to_function_field(&self) -> UniPoly<RatFunc> {
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| RatFunc::from_poly(c.clone()))
                .collect(),
        )
    }
}

/// Result of one Morse count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseCount {
    /// Critical points on the regular part converging to the origin.
    pub count: u64,
    pub order_at_zero: usize,
    pub generic_order: usize,
    /// False when the deflated derivative has a repeated factor over `Q(λ)`,
    /// so some root may not be a simple Morse point.
    pub simple_roots: bool,
}

/// Counts the critical points of `f + λ l` on the regular part of the curve
/// that converge to the origin as `λ -> 0`.
pub fn morse_count(
    curve: &MonomialCurve,
    f: &Polynomial,
    perturbation: &LinearForm,
) -> Result<MorseCount, MorsifyError> {
    let base = pullback(curve, f)?;
    let pert = pullback(curve, &perturbation.to_polynomial())?;
    if pert.is_zero() {
        return Err(MorsifyError::ZeroPerturbation);
    }
    let derivative = PerturbedPullback::new(&base, &pert).derivative();
    let generic_order = derivative
        .generic_order()
        .ok_or(MorsifyError::ZeroDerivative)?;
    let order_at_zero = derivative
        .at_zero()
        .order()
        .ok_or(MorsifyError::ZeroDerivative)?;
    let deflated = derivative.to_function_field().shift_down(generic_order);
    Ok(MorseCount {
        count: (order_at_zero - generic_order) as u64,
        order_at_zero,
        generic_order,
        simple_roots: deflated.is_squarefree(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Independent perturbations to count with; all must agree.
    pub draws: usize,
    pub bound: i64,
    /// Cap on rejected non-general draws.
    pub max_attempts: usize,
    pub genericity: GenericityConfig,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            draws: 5,
            bound: 7,
            max_attempts: 1000,
            genericity: GenericityConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseDraw {
    pub form: LinearForm,
    pub count: MorseCount,
}

/// Morse count versus the Euler obstruction computed from Milnor numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorsificationReport {
    pub curve: MonomialCurve,
    pub draws: Vec<MorseDraw>,
    pub morse_count: u64,
    pub eu_f: i64,
    pub invariants: InvariantReport,
    /// `morse_count == (-1)^1 * Eu_f`.
    pub passed: bool,
}

fn draw_general<R: Rng + ?Sized>(
    curve: &MonomialCurve,
    rng: &mut R,
    cfg: &OracleConfig,
) -> Result<LinearForm, MorsifyError> {
    for _ in 0..cfg.max_attempts.max(1) {
        let form = LinearForm::random(rng, 2, cfg.bound);
        if curve.is_general(&form) {
            return Ok(form);
        }
    }
    Err(MorsifyError::NoGeneralPerturbation(cfg.max_attempts))
}

/// Compares the number of Morse points of a Morsification on the regular part
/// of the curve with `-Eu_f` from the Milnor-number route.
pub fn verify_morsification<R: Rng + ?Sized>(
    curve: &MonomialCurve,
    f: &Polynomial,
    rng: &mut R,
    cfg: &OracleConfig,
) -> Result<MorsificationReport, MorsifyError> {
    pullback(curve, f)?;
    let germ = curve.germ(f.clone())?;
    let invariants = invariants::euler_obstruction(&germ, rng, &cfg.genericity)?;

    let mut draws = Vec::with_capacity(cfg.draws);
    for _ in 0..cfg.draws.max(1) {
        let form = draw_general(curve, rng, cfg)?;
        let count = morse_count(curve, f, &form)?;
        draws.push(MorseDraw { form, count });
    }
    let counts: Vec<u64> = draws.iter().map(|d| d.count.count).collect();
    if counts.iter().any(|&c| c != counts[0]) {
        return Err(MorsifyError::PerturbationDisagreement(counts));
    }
    let morse = counts[0];
    let eu_f = invariants.eu_f;
    Ok(MorsificationReport {
        curve: *curve,
        draws,
        morse_count: morse,
        eu_f,
        passed: morse as i64 == -eu_f,
        invariants,
    })
}
