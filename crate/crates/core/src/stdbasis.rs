//! Standard bases in the local ring at the origin.
//!
//! Completion follows Buchberger's pair scheme with Mora's weak normal form
//! (minimal-écart reducer selection, reducers with larger écart than the
//! current remainder push that remainder onto the reducer set). Colengths are
//! counted from the leading-ideal staircase.
//!
//! [`colength_oracle`] computes the same numbers by plain linear algebra on a
//! degree truncation and shares no code with the completion.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyring::{Coeff, Monomial, PolyError, Polynomial};

/// Default cap on the number of critical pairs created during completion.
pub const DEFAULT_MAX_PAIRS: usize = 100_000;
/// Default cap on the number of standard monomials enumerated.
pub const DEFAULT_MAX_STANDARD_MONOMIALS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StdBasisError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("ideal needs at least one generator")]
    NoGenerators,
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("oracle inconclusive: truncated dimension did not stabilize up to degree {0}")]
    Inconclusive(u32),
}

/// Vector-space dimension of a quotient of the local ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Colength::Finite(_))
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

/// Generators of an ideal in the local ring `Q[x_1..x_N]` localized at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    generators: Vec<Polynomial>,
    nvars: usize,
}

impl IdealSpec {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self, StdBasisError> {
        let nvars = generators
            .first()
            .ok_or(StdBasisError::NoGenerators)?
            .nvars();
        for g in &generators {
            if g.nvars() != nvars {
                return Err(PolyError::DimensionMismatch {
                    left: nvars,
                    right: g.nvars(),
                }
                .into());
            }
        }
        Ok(IdealSpec { generators, nvars })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True when some generator is a unit of the local ring.
    pub fn has_unit_generator(&self) -> bool {
        self.generators.iter().any(|g| !g.vanishes_at_origin())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisConfig {
    pub max_pairs: usize,
    pub max_standard_monomials: u64,
}

impl Default for BasisConfig {
    fn default() -> Self {
        BasisConfig {
            max_pairs: DEFAULT_MAX_PAIRS,
            max_standard_monomials: DEFAULT_MAX_STANDARD_MONOMIALS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasis {
    pub basis: Vec<Polynomial>,
    /// Minimal generators of the leading ideal.
    pub staircase: Vec<Monomial>,
    pub zero_dimensional: bool,
    /// The ideal is the whole local ring.
    pub unit: bool,
    nvars: usize,
}

impl StandardBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True when `m` lies in the leading ideal.
    pub fn in_leading_ideal(&self, m: &Monomial) -> bool {
        self.staircase.iter().any(|s| s.divides(m))
    }

    /// Counts standard monomials (those outside the leading ideal).
    pub fn colength(&self, limit: u64) -> Result<Colength, StdBasisError> {
        if self.unit {
            return Ok(Colength::Finite(0));
        }
        if !self.zero_dimensional {
            return Ok(Colength::Infinite);
        }
        // Depth-first walk over the complement of the leading ideal. The
        // complement is closed under division, so a monomial in the ideal
        // prunes its whole subtree. Only variables at or after the last
        // raised one are raised again, so each monomial is visited once.
        let mut count: u64 = 0;
        let mut stack = vec![(Monomial::one(self.nvars), 0usize)];
        while let Some((m, first)) = stack.pop() {
            if self.in_leading_ideal(&m) {
                continue;
            }
            count += 1;
            if count > limit {
                return Err(StdBasisError::ResourceLimit(format!(
                    "more than {limit} standard monomials"
                )));
            }
            for i in first..self.nvars {
                let mut e = m.exponents().to_vec();
                e[i] += 1;
                stack.push((Monomial::new(e), i));
            }
        }
        Ok(Colength::Finite(count))
    }
}

#[derive(Debug, Clone)]
struct Reducer {
    poly: Polynomial,
    lm: Monomial,
    ecart: u32,
}

impl Reducer {
    fn new(poly: Polynomial) -> Self {
        let lm = poly
            .leading_monomial()
            .expect("reducers are nonzero")
            .clone();
        let ecart = poly.ecart();
        Reducer { poly, lm, ecart }
    }
}

// h - (lt(h) / lt(g)) * g, scaled to avoid fractions.
fn reduce_step(h: &Polynomial, g: &Reducer) -> Polynomial {
    let (lm_h, lc_h) = h.leading_term().expect("nonzero");
    let lc_g = g.poly.leading_coeff().expect("nonzero");
    let shift = lm_h.checked_div(&g.lm).expect("divisible");
    let lhs = h.scale(lc_g);
    let rhs = g.poly.mul_term(&shift, lc_h);
    (&lhs - &rhs).primitive()
}

fn weak_normal_form(p: &Polynomial, basis: &[Reducer]) -> Polynomial {
    let mut h = p.primitive();
    let mut extra: Vec<Reducer> = Vec::new();
    loop {
        let Some(lm_h) = h.leading_monomial() else {
            return h;
        };
        let chosen = basis
            .iter()
            .chain(extra.iter())
            .filter(|g| g.lm.divides(lm_h))
            .min_by(|a, b| a.ecart.cmp(&b.ecart).then_with(|| b.lm.cmp(&a.lm)))
            .cloned();
        let Some(g) = chosen else {
            return h;
        };
        let ecart_h = h.ecart();
        if g.ecart > ecart_h {
            extra.push(Reducer {
                poly: h.clone(),
                lm: lm_h.clone(),
                ecart: ecart_h,
            });
        }
        h = reduce_step(&h, &g);
    }
}

/// Mora's weak normal form of `p` with respect to `g`.
///
/// The result `r` satisfies `u * p - r ∈ <g>` for some unit `u` of the
/// local ring, and either `r = 0` or its leading monomial is not divisible
/// by any leading monomial of `g`. Returned remainders are primitive.
pub fn normal_form(p: &Polynomial, g: &[Polynomial]) -> Result<Polynomial, StdBasisError> {
    for q in g {
        if q.nvars() != p.nvars() {
            return Err(PolyError::DimensionMismatch {
                left: p.nvars(),
                right: q.nvars(),
            }
            .into());
        }
    }
    let reducers: Vec<Reducer> = g
        .iter()
        .filter(|q| !q.is_zero())
        .map(|q| Reducer::new(q.primitive()))
        .collect();
    Ok(weak_normal_form(p, &reducers))
}

fn s_polynomial(f: &Reducer, g: &Reducer) -> Polynomial {
    let lcm = f.lm.lcm(&g.lm);
    let cf = f.poly.leading_coeff().expect("nonzero");
    let cg = g.poly.leading_coeff().expect("nonzero");
    let a = f.poly.mul_term(&lcm.checked_div(&f.lm).expect("lcm"), cg);
    let b = g.poly.mul_term(&lcm.checked_div(&g.lm).expect("lcm"), cf);
    &a - &b
}

#[derive(PartialEq, Eq)]
struct Pair {
    degree: u32,
    serial: usize,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree, self.serial).cmp(&(other.degree, other.serial))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn minimize(mut lms: Vec<Monomial>) -> Vec<Monomial> {
    lms.sort_by(|a, b| b.cmp(a));
    lms.dedup();
    let keep: Vec<Monomial> = lms
        .iter()
        .filter(|m| !lms.iter().any(|o| o != *m && o.divides(m)))
        .cloned()
        .collect();
    keep
}

fn unit_basis(nvars: usize) -> StandardBasis {
    StandardBasis {
        basis: vec![Polynomial::one(nvars)],
        staircase: vec![Monomial::one(nvars)],
        zero_dimensional: true,
        unit: true,
        nvars,
    }
}

pub fn standard_basis(ideal: &IdealSpec) -> Result<StandardBasis, StdBasisError> {
    standard_basis_with(ideal, &BasisConfig::default())
}

/// Computes a standard basis of `ideal` for [`crate::polyring::LocalOrder`].
pub fn standard_basis_with(
    ideal: &IdealSpec,
    config: &BasisConfig,
) -> Result<StandardBasis, StdBasisError> {
    let nvars = ideal.nvars();
    if ideal.has_unit_generator() {
        return Ok(unit_basis(nvars));
    }
    let mut basis: Vec<Reducer> = Vec::new();
    for g in ideal.generators() {
        if g.is_zero() {
            continue;
        }
        basis.push(Reducer::new(g.primitive()));
    }

    let mut queue: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
    let mut serial = 0usize;
    let mut push_pairs = |basis: &[Reducer], j: usize, queue: &mut BinaryHeap<Reverse<Pair>>| {
        for i in 0..j {
            if basis[i].lm.is_coprime(&basis[j].lm) {
                continue;
            }
            serial += 1;
            if serial > config.max_pairs {
                return Err(StdBasisError::ResourceLimit(format!(
                    "more than {} critical pairs",
                    config.max_pairs
                )));
            }
            let degree = basis[i].lm.lcm(&basis[j].lm).degree();
            queue.push(Reverse(Pair {
                degree,
                serial,
                i,
                j,
            }));
        }
        Ok(())
    };
    for j in 0..basis.len() {
        push_pairs(&basis, j, &mut queue)?;
    }

    while let Some(Reverse(pair)) = queue.pop() {
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let h = weak_normal_form(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if !h.vanishes_at_origin() {
            return Ok(unit_basis(nvars));
        }
        basis.push(Reducer::new(h));
        let j = basis.len() - 1;
        push_pairs(&basis, j, &mut queue)?;
    }

    let staircase = minimize(basis.iter().map(|r| r.lm.clone()).collect());
    let zero_dimensional = (0..nvars).all(|i| {
        staircase
            .iter()
            .any(|m| matches!(m.as_pure_power(), Some((k, _)) if k == i))
    });
    Ok(StandardBasis {
        basis: basis.into_iter().map(|r| r.poly).collect(),
        staircase,
        zero_dimensional,
        unit: false,
        nvars,
    })
}

/// Colength of `ideal` in the local ring: the number of standard monomials,
/// or [`Colength::Infinite`] when the ideal is not zero-dimensional.
pub fn colength(ideal: &IdealSpec) -> Result<Colength, StdBasisError> {
    colength_with(ideal, &BasisConfig::default())
}

pub fn colength_with(ideal: &IdealSpec, config: &BasisConfig) -> Result<Colength, StdBasisError> {
    standard_basis_with(ideal, config)?.colength(config.max_standard_monomials)
}

fn monomials_below(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(i: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == current.len() {
            out.push(Monomial::new(current.clone()));
            return;
        }
        for e in 0..=left {
            current[i] = e;
            rec(i + 1, left - e, current, out);
        }
        current[i] = 0;
    }
    if bound > 0 {
        rec(0, bound - 1, &mut current, &mut out);
    }
    out
}

/// `dim Q[x] / (I + m^k)` by Gaussian elimination over the monomials of
/// degree below `k`.
pub fn truncated_colength(ideal: &IdealSpec, k: u32) -> u64 {
    let nvars = ideal.nvars();
    let columns = monomials_below(nvars, k);
    let index: BTreeMap<Monomial, usize> = columns
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();

    // Echelon rows keyed by pivot column; each pivot entry is 1.
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Coeff>> = BTreeMap::new();
    for g in ideal.generators() {
        let order = g.order().unwrap_or(k);
        for shift in &columns {
            if shift.degree() + order >= k {
                continue;
            }
            let mut row: BTreeMap<usize, Coeff> = BTreeMap::new();
            for (m, c) in g.terms() {
                let prod = shift * m;
                if let Some(&col) = index.get(&prod) {
                    row.insert(col, c.clone());
                }
            }
            while let Some((&col, _)) = row.iter().next() {
                let lead = row.remove(&col).expect("present");
                match pivots.get(&col) {
                    Some(prow) => {
                        for (&c2, v) in prow.iter().skip(1) {
                            let entry = row.entry(c2).or_insert_with(Coeff::zero);
                            *entry -= &lead * v;
                            if entry.is_zero() {
                                row.remove(&c2);
                            }
                        }
                    }
                    None => {
                        let inv = Coeff::one() / &lead;
                        let mut normalized: BTreeMap<usize, Coeff> =
                            row.into_iter().map(|(c2, v)| (c2, v * &inv)).collect();
                        normalized.insert(col, Coeff::one());
                        pivots.insert(col, normalized);
                        break;
                    }
                }
            }
        }
    }
    (columns.len() - pivots.len()) as u64
}

/// Colength by truncated linear algebra, independent of the standard-basis
/// machinery. Raises the truncation degree from 1 until two consecutive
/// truncations agree (then `m^k ⊆ I` by Nakayama and the value is exact).
pub fn colength_oracle(ideal: &IdealSpec, k_max: u32) -> Result<u64, StdBasisError> {
    let mut previous = truncated_colength(ideal, 1);
    for k in 2..=k_max {
        let current = truncated_colength(ideal, k);
        if current == previous {
            return Ok(current);
        }
        previous = current;
    }
    Err(StdBasisError::Inconclusive(k_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse, VarTable};
    use proptest::prelude::*;

    fn ideal(vars: &[&str], gens: &[&str]) -> IdealSpec {
        let v = VarTable::new(vars.iter().copied()).unwrap();
        IdealSpec::new(gens.iter().map(|g| parse(g, &v).unwrap()).collect()).unwrap()
    }

    fn poly(vars: &[&str], src: &str) -> Polynomial {
        parse(src, &VarTable::new(vars.iter().copied()).unwrap()).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    const XY: &[&str] = &["x", "y"];

    #[test]
    fn normal_form_examples() {
        let x = poly(XY, "x");
        assert!(normal_form(&poly(XY, "x^2"), std::slice::from_ref(&x))
            .unwrap()
            .is_zero());
        assert_eq!(normal_form(&poly(XY, "y"), &[x]).unwrap(), poly(XY, "y"));
        let jac = [poly(XY, "2*x"), poly(XY, "-3*y^2")];
        assert!(normal_form(&poly(XY, "x^2 - y^3"), &jac).unwrap().is_zero());
        // Explicit certificate of membership: (x/2)(2x) + (y/3)(-3y^2).
        let combo = &(&poly(XY, "1/2*x") * &jac[0]) + &(&poly(XY, "1/3*y") * &jac[1]);
        assert_eq!(combo, poly(XY, "x^2 - y^3"));
    }

    #[test]
    fn normal_form_needs_a_unit() {
        // y - x*y = (1 - x) y: divisible by y only up to the unit 1 - x.
        let g = [poly(XY, "y - x*y")];
        assert!(normal_form(&poly(XY, "y"), &g).unwrap().is_zero());
    }

    #[test]
    fn staircase_examples() {
        let sb = standard_basis(&ideal(XY, &["x", "y^3"])).unwrap();
        assert_eq!(sb.staircase, vec![mono(&[1, 0]), mono(&[0, 3])]);
        assert!(sb.zero_dimensional);

        let sb = standard_basis(&ideal(XY, &["2*x", "-3*y^2"])).unwrap();
        let mut st = sb.staircase.clone();
        st.sort_by_key(|m| m.exponents().to_vec());
        assert_eq!(st, vec![mono(&[0, 2]), mono(&[1, 0])]);
        for m in [mono(&[0, 0]), mono(&[0, 1])] {
            let r = normal_form(&Polynomial::monomial(m.clone(), Coeff::one()), &sb.basis).unwrap();
            assert_eq!(r.leading_monomial(), Some(&m));
        }

        let sb = standard_basis(&ideal(XY, &["x^2 - y^3", "y"])).unwrap();
        let mut st = sb.staircase.clone();
        st.sort_by_key(|m| m.exponents().to_vec());
        assert_eq!(st, vec![mono(&[0, 1]), mono(&[2, 0])]);
    }

    #[test]
    fn colength_examples() {
        assert_eq!(
            colength(&ideal(XY, &["x", "y"])).unwrap(),
            Colength::Finite(1)
        );
        assert_eq!(
            colength(&ideal(XY, &["2*x", "-3*y^2"])).unwrap(),
            Colength::Finite(2)
        );
        assert_eq!(
            colength(&ideal(XY, &["x^2 - y^3", "3*y^2"])).unwrap(),
            Colength::Finite(4)
        );
        assert_eq!(
            colength(&ideal(XY, &["x^2", "x*y"])).unwrap(),
            Colength::Infinite
        );
        assert_eq!(
            colength(&ideal(XY, &["1 + x", "y"])).unwrap(),
            Colength::Finite(0)
        );
        assert_eq!(colength(&ideal(XY, &["0"])).unwrap(), Colength::Infinite);
    }

    #[test]
    fn unit_found_during_completion() {
        // The third generator is y times a unit.
        let i = ideal(XY, &["x", "x + y^2", "y - y^3 + y^2*x"]);
        assert_eq!(colength(&i).unwrap(), Colength::Finite(1));
        let sb = standard_basis(&ideal(XY, &["x*y", "x - y + x*y"])).unwrap();
        assert!(sb.zero_dimensional);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(truncated_colength(&ideal(XY, &["x", "y"]), 3), 1);
        assert_eq!(truncated_colength(&ideal(XY, &["2*x", "-3*y^2"]), 4), 2);
        assert_eq!(truncated_colength(&ideal(XY, &["x^2", "y^3"]), 6), 6);
        assert_eq!(
            colength_oracle(&ideal(XY, &["x^2 - y^3", "3*y^2"]), 20).unwrap(),
            4
        );
        assert_eq!(
            colength_oracle(&ideal(XY, &["x^2", "x*y"]), 8),
            Err(StdBasisError::Inconclusive(8))
        );
    }

    #[test]
    fn colength_matches_oracle_on_catalog() {
        let xyz: &[&str] = &["x", "y", "z"];
        let cases: Vec<IdealSpec> = vec![
            ideal(XY, &["x^3 - y^2 + x*y^2", "x*y - y^4"]),
            ideal(XY, &["x^2 + y^3", "x*y"]),
            ideal(XY, &["x^2 - y^5", "5*y^4"]),
            ideal(XY, &["3*x^2 + y^2", "2*x*y + 4*y^3"]),
            ideal(xyz, &["x^2 + y^2 + z^2", "x*y", "z^3 - x*y*z"]),
            ideal(xyz, &["x + y^2", "y + z^2", "z^3 + x^2"]),
            ideal(xyz, &["x*y", "y*z", "x*z", "x^2 + y^2 + z^2 - x^3"]),
        ];
        for i in cases {
            let sb = colength(&i).unwrap().finite().unwrap();
            let or = colength_oracle(&i, 40).unwrap();
            assert_eq!(sb, or, "ideal {:?}", i.generators());
        }
    }

    #[test]
    fn zero_dimensionality_matches_finiteness() {
        let xyz: &[&str] = &["x", "y", "z"];
        let finite = [
            ideal(XY, &["x^2", "y^2"]),
            ideal(xyz, &["x", "y^2 - z^3", "y*z"]),
        ];
        let infinite = [
            ideal(XY, &["x^2 - y^2"]),
            ideal(xyz, &["x^2 - y^2", "x*z", "y*z"]),
            ideal(xyz, &["x", "y"]),
        ];
        for i in finite {
            let sb = standard_basis(&i).unwrap();
            assert!(sb.zero_dimensional);
            assert!(sb.colength(1000).unwrap().is_finite());
        }
        for i in infinite {
            let sb = standard_basis(&i).unwrap();
            assert!(!sb.zero_dimensional);
            assert_eq!(sb.colength(1000).unwrap(), Colength::Infinite);
        }
    }

    #[test]
    fn pair_limit_is_enforced() {
        let i = ideal(&["x", "y", "z"], &["x^2 + y^3", "x*y + z^3", "y^2 + x^3"]);
        let cfg = BasisConfig {
            max_pairs: 1,
            ..BasisConfig::default()
        };
        assert!(matches!(
            standard_basis_with(&i, &cfg),
            Err(StdBasisError::ResourceLimit(_))
        ));
    }

    #[test]
    fn monomial_enumeration_limit_is_enforced() {
        let i = ideal(XY, &["x^40", "y^40"]);
        let sb = standard_basis(&i).unwrap();
        assert!(matches!(
            sb.colength(100),
            Err(StdBasisError::ResourceLimit(_))
        ));
        assert_eq!(sb.colength(10_000).unwrap(), Colength::Finite(1600));
    }

    fn arb_gen() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..4, 2), -5i64..=5), 1..4).prop_map(|ts| {
            Polynomial::from_terms(
                2,
                ts.into_iter()
                    .filter(|(e, _)| e.iter().sum::<u32>() > 0)
                    .map(|(e, c)| (Monomial::new(e), crate::polyring::int(c))),
            )
        })
    }

    fn with_pure_powers(extra: Vec<Polynomial>, a: u32, b: u32) -> Vec<Polynomial> {
        let mut gens = extra;
        gens.push(Polynomial::from_int_terms(2, &[(1, &[a, 0]), (1, &[1, 1])]));
        gens.push(Polynomial::from_int_terms(
            2,
            &[(1, &[0, b]), (-2, &[2, 1])],
        ));
        gens
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn generators_reduce_to_zero(extra in prop::collection::vec(arb_gen(), 0..3)) {
            let i = IdealSpec::new(with_pure_powers(extra, 3, 4)).unwrap();
            let sb = standard_basis(&i).unwrap();
            for g in i.generators() {
                prop_assert!(normal_form(g, &sb.basis).unwrap().is_zero());
            }
            for (k, a) in sb.staircase.iter().enumerate() {
                for b in &sb.staircase[k + 1..] {
                    prop_assert!(!a.divides(b) && !b.divides(a));
                }
            }
        }

        #[test]
        fn colength_agrees_with_oracle(extra in prop::collection::vec(arb_gen(), 0..3),
                                       a in 2u32..5, b in 2u32..5) {
            let i = IdealSpec::new(with_pure_powers(extra, a, b)).unwrap();
            let c = colength(&i).unwrap().finite().unwrap();
            prop_assume!(c <= 30);
            prop_assert_eq!(c, colength_oracle(&i, 40).unwrap());
        }

        #[test]
        fn colength_invariant_under_generator_moves(
            extra in prop::collection::vec(arb_gen(), 0..2),
            scale in 1i64..5,
            mult in arb_gen(),
        ) {
            let gens = with_pure_powers(extra, 3, 3);
            let base = colength(&IdealSpec::new(gens.clone()).unwrap()).unwrap();

            let mut permuted = gens.clone();
            permuted.reverse();
            prop_assert_eq!(base, colength(&IdealSpec::new(permuted).unwrap()).unwrap());

            let mut scaled = gens.clone();
            scaled[0] = scaled[0].scale(&crate::polyring::int(-scale));
            prop_assert_eq!(base, colength(&IdealSpec::new(scaled).unwrap()).unwrap());

            let mut combined = gens.clone();
            let n = combined.len();
            combined[0] = &combined[0] + &(&mult * &combined[n - 1]);
            prop_assert_eq!(base, colength(&IdealSpec::new(combined).unwrap()).unwrap());
        }
    }
}
