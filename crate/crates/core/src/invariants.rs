//! Milnor numbers of ICIS germs and of functions on them, the GSV index
//! `mu_G`, and the Euler obstruction `Eu_f` with its cross-checks.
//!
//! The ICIS Milnor number is computed by slicing with generic linear forms:
//!
//! ```text
//! mu(X) + mu(X ∩ {l = 0}) = colength <g_1..g_p, maximal minors of Jac(g, l)>
//! ```
//!
//! bottoming out at dimension zero with `mu = colength <g> - 1`.
//!
//! All randomness comes from the caller's generator and is consumed in a
//! fixed order, so results are reproducible per seed.

use std::fmt;

use itertools::Itertools;
use rand::Rng;
use thiserror::Error;

use crate::polyring::{int, Polynomial};
use crate::stdbasis::{self, BasisConfig, Colength, IdealSpec, StdBasisError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("invalid germ: {0}")]
    InvalidGerm(String),
    #[error("non-isolated singularity: Jacobian ideal has infinite colength")]
    NonIsolated,
    #[error("not an ICIS: {reason} (slice level {level})")]
    NonIcis { level: usize, reason: String },
    #[error("function does not have an isolated singularity on X: {0}")]
    FunctionNotIsolated(String),
    #[error(
        "genericity failure at slice level {level}: no sampled linear form gave an isolated slice"
    )]
    GenericityFailure {
        level: usize,
        samples: Vec<FormSample>,
    },
    #[error("mu_G paths disagree: Milnor sum {path_a}, critical-locus colength {path_b}")]
    PathMismatch { path_a: u64, path_b: u64 },
    #[error(transparent)]
    Algebra(#[from] StdBasisError),
}

/// Sampling parameters for generic linear forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericityConfig {
    pub samples: usize,
    /// Coefficients are drawn from `[-bound, bound]`.
    pub bound: i64,
    pub basis: BasisConfig,
}

impl Default for GenericityConfig {
    fn default() -> Self {
        GenericityConfig {
            samples: 3,
            bound: 7,
            basis: BasisConfig::default(),
        }
    }
}

/// `sum c_i x_i` with integer coefficients, not all zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm(Vec<i64>);

impl LinearForm {
    pub fn new(coefficients: Vec<i64>) -> Option<Self> {
        coefficients
            .iter()
            .any(|&c| c != 0)
            .then_some(LinearForm(coefficients))
    }

    /// Uniform coefficients in `[-bound, bound]`, redrawn if all vanish.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, nvars: usize, bound: i64) -> Self {
        let bound = bound.max(1);
        loop {
            let c: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-bound..=bound)).collect();
            if let Some(form) = LinearForm::new(c) {
                return form;
            }
        }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.0.len();
        self.0
            .iter()
            .enumerate()
            .fold(Polynomial::zero(n), |acc, (i, &c)| {
                &acc + &Polynomial::var(n, i).scale(&int(c))
            })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// A germ `X = {g_1 = .. = g_p = 0} ⊂ (C^N, 0)` with a function `f` on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermSpec {
    nvars: usize,
    defining: Vec<Polynomial>,
    func: Polynomial,
}

impl GermSpec {
    pub fn new(
        nvars: usize,
        defining: Vec<Polynomial>,
        func: Polynomial,
    ) -> Result<Self, InvariantError> {
        if defining.len() >= nvars {
            return Err(InvariantError::InvalidGerm(format!(
                "{} equations in {} variables leave no positive-dimensional germ",
                defining.len(),
                nvars
            )));
        }
        for (k, g) in defining.iter().chain(std::iter::once(&func)).enumerate() {
            if g.nvars() != nvars {
                return Err(InvariantError::InvalidGerm(format!(
                    "polynomial #{k} lives in {} variables, expected {nvars}",
                    g.nvars()
                )));
            }
            if !g.vanishes_at_origin() {
                return Err(InvariantError::InvalidGerm(format!(
                    "polynomial #{k} does not vanish at the origin"
                )));
            }
        }
        Ok(GermSpec {
            nvars,
            defining,
            func,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn defining(&self) -> &[Polynomial] {
        &self.defining
    }

    pub fn func(&self) -> &Polynomial {
        &self.func
    }

    pub fn dim_x(&self) -> usize {
        self.nvars - self.defining.len()
    }

    /// Same space, different function.
    pub fn with_function(&self, func: Polynomial) -> Result<Self, InvariantError> {
        GermSpec::new(self.nvars, self.defining.clone(), func)
    }
}

/// One sampled linear form and the Milnor number of its slice (`None` when
/// the slice is not an ICIS).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSample {
    pub form: LinearForm,
    pub mu: Option<u64>,
}

/// The outcome of generic-form sampling on a germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericChoice {
    pub form: LinearForm,
    pub mu: u64,
    pub samples: Vec<FormSample>,
}

impl GenericChoice {
    /// True when the samples did not all produce the same value.
    pub fn disagreement(&self) -> bool {
        self.samples.iter().any(|s| s.mu != Some(self.mu))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColengthPurpose {
    /// `<g_1..g_N>` at the zero-dimensional bottom of the slicing.
    SliceBase,
    /// `<g, maximal minors of Jac(g, l)>` used to peel one slice.
    LeGreuel,
    /// `<g, maximal minors of Jac(g, f)>`, the direct `mu_G` route.
    CriticalLocus,
}

impl fmt::Display for ColengthPurpose {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ColengthPurpose::SliceBase => "slice-base",
            ColengthPurpose::LeGreuel => "le-greuel",
            ColengthPurpose::CriticalLocus => "critical-locus",
        };
        f.write_str(s)
    }
}

/// A colength evaluated while computing a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColengthRecord {
    pub purpose: ColengthPurpose,
    /// Number of generic hyperplanes cut before this ideal was formed.
    pub level: usize,
    pub ideal: IdealSpec,
    pub value: Colength,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// The full invariant tower of a germ and function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub dim_x: usize,
    pub mu_x: u64,
    pub mu_f: u64,
    pub mu_l: u64,
    /// `mu(f) + mu(X)`.
    pub mu_g_f: u64,
    /// `mu(l) + mu(X)`.
    pub mu_g_l: u64,
    /// Colength of the critical-locus ideal of `f`.
    pub mu_g_f_direct: u64,
    /// Colength of the critical-locus ideal of `l`.
    pub mu_g_l_direct: u64,
    /// `(-1)^dim X (mu(f) - mu(l))`.
    pub eu_f: i64,
    /// `(-1)^dim X (mu_G(f) - mu_G(l))` from the direct colengths.
    pub eu_f_gsv: i64,
    /// `(-1)^dim X Eu_f`: the number of Morse points on the regular part.
    pub alpha_q: i64,
    pub checks: Vec<Check>,
    pub genericity: GenericChoice,
    pub colengths: Vec<ColengthRecord>,
}

impl InvariantReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn sign(dim: usize) -> i64 {
    if dim.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn determinant(m: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(nvars),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Polynomial::zero(nvars);
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &determinant(&minor, nvars);
                acc = if col % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

/// All maximal minors of the Jacobian matrix of `polys` (one row per
/// polynomial, one column per variable). Zero minors are dropped.
pub fn maximal_minors(polys: &[Polynomial], nvars: usize) -> Vec<Polynomial> {
    let jac: Vec<Vec<Polynomial>> = polys
        .iter()
        .map(|p| {
            (0..nvars)
                .map(|i| p.partial(i).expect("index in range"))
                .collect()
        })
        .collect();
    let rows = polys.len();
    (0..nvars)
        .combinations(rows)
        .map(|cols| {
            let sub: Vec<Vec<Polynomial>> = jac
                .iter()
                .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                .collect();
            determinant(&sub, nvars)
        })
        .filter(|p| !p.is_zero())
        .collect()
}

struct Session<'r, R: Rng + ?Sized> {
    rng: &'r mut R,
    cfg: GenericityConfig,
    nvars: usize,
    log: Vec<ColengthRecord>,
}

impl<'r, R: Rng + ?Sized> Session<'r, R> {
    fn new(rng: &'r mut R, cfg: &GenericityConfig, nvars: usize) -> Self {
        Session {
            rng,
            cfg: *cfg,
            nvars,
            log: Vec::new(),
        }
    }

    fn colength(
        &mut self,
        purpose: ColengthPurpose,
        level: usize,
        gens: Vec<Polynomial>,
    ) -> Result<Colength, InvariantError> {
        let gens = if gens.is_empty() {
            vec![Polynomial::zero(self.nvars)]
        } else {
            gens
        };
        let ideal = IdealSpec::new(gens)?;
        let value = stdbasis::colength_with(&ideal, &self.cfg.basis)?;
        self.log.push(ColengthRecord {
            purpose,
            level,
            ideal,
            value,
        });
        Ok(value)
    }

    fn critical_locus(
        &mut self,
        g: &[Polynomial],
        h: &Polynomial,
        purpose: ColengthPurpose,
        level: usize,
    ) -> Result<Colength, InvariantError> {
        let mut rows = g.to_vec();
        rows.push(h.clone());
        let mut gens = g.to_vec();
        gens.extend(maximal_minors(&rows, self.nvars));
        self.colength(purpose, level, gens)
    }

    /// Milnor number of the ICIS `{g = 0}`; `level` counts the hyperplanes
    /// already cut.
    fn icis(&mut self, g: &[Polynomial], level: usize) -> Result<u64, InvariantError> {
        let p = g.len();
        if p == 0 {
            return Ok(0);
        }
        if p > self.nvars {
            return Err(InvariantError::NonIcis {
                level,
                reason: format!("{p} equations in {} variables", self.nvars),
            });
        }
        if p == self.nvars {
            return match self.colength(ColengthPurpose::SliceBase, level, g.to_vec())? {
                Colength::Finite(0) => Err(InvariantError::NonIcis {
                    level,
                    reason: "the zero-dimensional slice is empty".into(),
                }),
                Colength::Finite(c) => Ok(c - 1),
                Colength::Infinite => Err(InvariantError::NonIcis {
                    level,
                    reason: "zero-dimensional slice has infinite colength".into(),
                }),
            };
        }
        let choice = self.pick_generic(g, level)?;
        let l = choice.form.to_polynomial();
        let total = match self.critical_locus(g, &l, ColengthPurpose::LeGreuel, level)? {
            Colength::Finite(c) => c,
            Colength::Infinite => {
                return Err(InvariantError::NonIcis {
                    level,
                    reason: format!(
                        "singular locus is not isolated (critical-locus ideal of the generic form {} has infinite colength)",
                        choice.form
                    ),
                })
            }
        };
        total
            .checked_sub(choice.mu)
            .ok_or_else(|| InvariantError::NonIcis {
                level,
                reason: format!(
                    "Le-Greuel colength {total} is smaller than the slice Milnor number {}",
                    choice.mu
                ),
            })
    }

    fn pick_generic(
        &mut self,
        g: &[Polynomial],
        level: usize,
    ) -> Result<GenericChoice, InvariantError> {
        let mut samples = Vec::with_capacity(self.cfg.samples);
        for _ in 0..self.cfg.samples.max(1) {
            let form = LinearForm::random(self.rng, self.nvars, self.cfg.bound);
            let mut sliced = g.to_vec();
            sliced.push(form.to_polynomial());
            let mu = match self.icis(&sliced, level + 1) {
                Ok(mu) => Some(mu),
                Err(InvariantError::NonIcis { .. })
                | Err(InvariantError::GenericityFailure { .. }) => None,
                Err(e) => return Err(e),
            };
            samples.push(FormSample { form, mu });
        }
        let best = samples
            .iter()
            .filter_map(|s| s.mu.map(|mu| (mu, s)))
            .min_by_key(|(mu, _)| *mu);
        match best {
            Some((mu, s)) => Ok(GenericChoice {
                form: s.form.clone(),
                mu,
                samples: samples.clone(),
            }),
            None => Err(InvariantError::GenericityFailure { level, samples }),
        }
    }
}

/// Milnor number of an isolated hypersurface singularity `{h = 0}`: the
/// colength of the Jacobian ideal. A smooth point gives 0.
pub fn milnor_hypersurface(h: &Polynomial) -> Result<u64, InvariantError> {
    milnor_hypersurface_with(h, &BasisConfig::default())
}

pub fn milnor_hypersurface_with(h: &Polynomial, cfg: &BasisConfig) -> Result<u64, InvariantError> {
    if h.is_zero() {
        return Err(InvariantError::InvalidGerm("zero polynomial".into()));
    }
    if !h.vanishes_at_origin() {
        return Err(InvariantError::InvalidGerm(
            "polynomial does not vanish at the origin".into(),
        ));
    }
    let partials: Vec<Polynomial> = (0..h.nvars())
        .map(|i| h.partial(i).expect("index in range"))
        .collect();
    let ideal = IdealSpec::new(partials)?;
    match stdbasis::colength_with(&ideal, cfg)? {
        Colength::Finite(c) => Ok(c),
        Colength::Infinite => Err(InvariantError::NonIsolated),
    }
}

fn check_icis_input(g: &[Polynomial], nvars: usize) -> Result<(), InvariantError> {
    if g.len() > nvars {
        return Err(InvariantError::InvalidGerm(format!(
            "{} equations in {nvars} variables",
            g.len()
        )));
    }
    for (k, p) in g.iter().enumerate() {
        if p.nvars() != nvars {
            return Err(InvariantError::InvalidGerm(format!(
                "equation #{k} lives in {} variables, expected {nvars}",
                p.nvars()
            )));
        }
        if !p.vanishes_at_origin() {
            return Err(InvariantError::InvalidGerm(format!(
                "equation #{k} does not vanish at the origin"
            )));
        }
    }
    Ok(())
}

/// Checks that `{g = 0}` is an ICIS by running every slicing colength used by
/// [`milnor_icis`]. The error names the slice level that failed.
pub fn validate_icis<R: Rng + ?Sized>(
    g: &[Polynomial],
    nvars: usize,
    rng: &mut R,
    cfg: &GenericityConfig,
) -> Result<(), InvariantError> {
    if g.len() >= nvars {
        return Err(InvariantError::InvalidGerm(format!(
            "{} equations in {nvars} variables: need p < N",
            g.len()
        )));
    }
    milnor_icis(g, nvars, rng, cfg).map(|_| ())
}

/// Milnor number of the ICIS `{g = 0} ⊂ (C^nvars, 0)`.
pub fn milnor_icis<R: Rng + ?Sized>(
    g: &[Polynomial],
    nvars: usize,
    rng: &mut R,
    cfg: &GenericityConfig,
) -> Result<u64, InvariantError> {
    check_icis_input(g, nvars)?;
    Session::new(rng, cfg, nvars).icis(g, 0)
}

fn with_function(germ: &GermSpec, f: &Polynomial) -> Vec<Polynomial> {
    let mut gens = germ.defining().to_vec();
    gens.push(f.clone());
    gens
}

fn function_not_isolated(e: InvariantError) -> InvariantError {
    match e {
        InvariantError::NonIcis { level, reason } => InvariantError::FunctionNotIsolated(format!(
            "the zero set of f on X is not an ICIS: {reason} (slice level {level})"
        )),
        other => other,
    }
}

/// Milnor number of `f` on `X`: the ICIS Milnor number of `X ∩ {f = 0}`.
pub fn milnor_of_function<R: Rng + ?Sized>(
    germ: &GermSpec,
    rng: &mut R,
    cfg: &GenericityConfig,
) -> Result<u64, InvariantError> {
    Session::new(rng, cfg, germ.nvars())
        .icis(&with_function(germ, germ.func()), 0)
        .map_err(function_not_isolated)
}

/// Samples `cfg.samples` linear forms and returns one minimizing the slice
/// Milnor number `mu(l)`, along with every sampled value.
pub fn pick_generic<R: Rng + ?Sized>(
    germ: &GermSpec,
    rng: &mut R,
    cfg: &GenericityConfig,
) -> Result<GenericChoice, InvariantError> {
    Session::new(rng, cfg, germ.nvars()).pick_generic(germ.defining(), 0)
}

/// The two routes to the GSV index of `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GsvIndex {
    /// `mu(f) + mu(X)`.
    pub milnor_sum: u64,
    /// Colength of `<g, maximal minors of Jac(g, f)>`.
    pub critical_locus: u64,
}

/// `mu_G(f)`, computed both as `mu(f) + mu(X)` and as a critical-locus
/// colength. Disagreement is an error.
pub fn mu_g<R: Rng + ?Sized>(
    germ: &GermSpec,
    rng: &mut R,
    cfg: &GenericityConfig,
) -> Result<u64, InvariantError> {
    let both = mu_g_paths(germ, rng, cfg)?;
    if both.milnor_sum != both.critical_locus {
        return Err(InvariantError::PathMismatch {
            path_a: both.milnor_sum,
            path_b: both.critical_locus,
        });
    }
    Ok(both.milnor_sum)
}

pub fn mu_g_paths<R: Rng + ?Sized>(
    germ: &GermSpec,
    rng: &mut R,
    cfg: &GenericityConfig,
) -> Result<GsvIndex, InvariantError> {
    let mut s = Session::new(rng, cfg, germ.nvars());
    let mu_x = s.icis(germ.defining(), 0)?;
    let mu_f = s
        .icis(&with_function(germ, germ.func()), 0)
        .map_err(function_not_isolated)?;
    let direct = s.critical_locus(
        germ.defining(),
        germ.func(),
        ColengthPurpose::CriticalLocus,
        0,
    )?;
    let critical_locus = direct.finite().ok_or_else(|| {
        InvariantError::FunctionNotIsolated("critical-locus ideal has infinite colength".into())
    })?;
    Ok(GsvIndex {
        milnor_sum: mu_f + mu_x,
        critical_locus,
    })
}

/// Computes the invariant tower and every identity check for `germ`.
pub fn euler_obstruction<R: Rng + ?Sized>(
    germ: &GermSpec,
    rng: &mut R,
    cfg: &GenericityConfig,
) -> Result<InvariantReport, InvariantError> {
    let dim_x = germ.dim_x();
    let sg = sign(dim_x);
    let mut s = Session::new(rng, cfg, germ.nvars());

    let mu_x = s.icis(germ.defining(), 0)?;
    let mu_f = s
        .icis(&with_function(germ, germ.func()), 0)
        .map_err(function_not_isolated)?;
    let genericity = s.pick_generic(germ.defining(), 0)?;
    let mu_l = genericity.mu;
    let l = genericity.form.to_polynomial();

    let direct_f = s
        .critical_locus(
            germ.defining(),
            germ.func(),
            ColengthPurpose::CriticalLocus,
            0,
        )?
        .finite()
        .ok_or_else(|| {
            InvariantError::FunctionNotIsolated("critical-locus ideal has infinite colength".into())
        })?;
    let direct_l = s
        .critical_locus(germ.defining(), &l, ColengthPurpose::CriticalLocus, 0)?
        .finite()
        .ok_or_else(|| InvariantError::GenericityFailure {
            level: 0,
            samples: genericity.samples.clone(),
        })?;

    let mu_g_f = mu_f + mu_x;
    let mu_g_l = mu_l + mu_x;
    let eu_f = sg * (mu_f as i64 - mu_l as i64);
    let eu_f_gsv = sg * (direct_f as i64 - direct_l as i64);
    let alpha_q = sg * eu_f;

    let singular = mu_x > 0;
    let checks = vec![
        Check {
            name: "mu_G(f) two-path agreement",
            passed: mu_g_f == direct_f,
            detail: format!("mu(f) + mu(X) = {mu_g_f}, critical-locus colength = {direct_f}"),
        },
        Check {
            name: "mu_G(l) two-path agreement",
            passed: mu_g_l == direct_l,
            detail: format!("mu(l) + mu(X) = {mu_g_l}, critical-locus colength = {direct_l}"),
        },
        Check {
            name: "Eu_f from Milnor numbers equals Eu_f from GSV indices",
            passed: eu_f == eu_f_gsv,
            detail: format!("{eu_f} vs {eu_f_gsv}"),
        },
        Check {
            name: "mu(f) >= (-1)^dim X Eu_f",
            passed: mu_f as i64 >= sg * eu_f,
            detail: format!("{mu_f} >= {}", sg * eu_f),
        },
        Check {
            name: "strict inequality when X is singular",
            passed: !singular || mu_f as i64 > sg * eu_f,
            detail: if singular {
                format!("mu(X) = {mu_x}: {mu_f} > {}", sg * eu_f)
            } else {
                "X smooth: not applicable".into()
            },
        },
        Check {
            name: "mu(l) > 0 when X is singular",
            passed: !singular || mu_l > 0,
            detail: if singular {
                format!("mu(X) = {mu_x}, mu(l) = {mu_l}")
            } else {
                "X smooth: not applicable".into()
            },
        },
        Check {
            name: "alpha_q >= 0",
            passed: alpha_q >= 0,
            detail: format!("alpha_q = {alpha_q}"),
        },
    ];

    Ok(InvariantReport {
        dim_x,
        mu_x,
        mu_f,
        mu_l,
        mu_g_f,
        mu_g_l,
        mu_g_f_direct: direct_f,
        mu_g_l_direct: direct_l,
        eu_f,
        eu_f_gsv,
        alpha_q,
        checks,
        genericity,
        colengths: s.log,
    })
}
