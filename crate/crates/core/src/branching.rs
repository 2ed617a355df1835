//! Branching coefficients through the injection fan.
//!
//! With `F = Π_{α ∈ Δ+ \ Δ_perp+} (1 - e^{-π_ã α}) / Π_{β ∈ Δ_a+} (1 - e^{-β})`
//! and `N = Σ_u ε(u) dim L_perp^{μ_perp(u)} e^{π_ã[u(μ+ρ)-ρ]}`, the projected
//! character satisfies `k · F = N` where `k = Σ_ν b_ν Ψ_a^ν`. Writing
//! `F = -Σ s(γ) e^{-γ}` with lowest `γ0`, the coefficients of `k` follow from
//!
//! `k_ξ = -(1/s(γ0)) [ N(ξ - γ0) + Σ_{γ ∈ Γ} s(γ + γ0) k_{ξ+γ} ]`
//!
//! swept from the top down, and `b_ν = k_ν` on the dominant chamber of `a`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddingSpec;
use crate::formal::FormalElement;
use crate::rootspace::RootSystem;
use crate::singular::{decompose, SingularDecomposition};
use crate::weight::{weight_map, Rational, Weight};
use crate::weyl::{act, WeylElement};
use crate::{Error, Result};

/// Upper bound on recurrence steps, as a guard against non-terminating sweeps.
const MAX_SWEEP_STEPS: usize = 2_000_000;

/// A weight keyed by `(<x, grading>, x)`: the monomial order of the sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Graded {
    g: Rational,
    w: Weight,
}

impl Ord for Graded {
    fn cmp(&self, other: &Self) -> Ordering {
        self.g.cmp(&other.g).then_with(|| self.w.cmp(&other.w))
    }
}

impl PartialOrd for Graded {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    /// Lowest vector of the carrier set of `F = -Σ s(γ) e^{-γ}`.
    pub gamma0: Weight,
    pub s0: i64,
    /// `γ ↦ s(γ + γ0)` for the nonzero `γ` of `Γ`.
    #[serde(with = "weight_map")]
    pub shifts: BTreeMap<Weight, i64>,
    /// Largest grading of a recorded shift.
    #[serde(with = "crate::weight::rational")]
    pub depth: Rational,
    /// Vector whose pairing orders weights of `ã`.
    pub grading: Weight,
    /// Projected vectors with their exponents in the defining product.
    pub factors: Vec<(Weight, u32)>,
}

impl Fan {
    pub fn grade(&self, x: &Weight) -> Rational {
        x.dot(&self.grading)
    }

    /// `-Σ s(γ) e^{-γ}`
    pub fn polynomial(&self) -> FormalElement {
        let mut f = FormalElement::monomial(-&self.gamma0, -self.s0);
        for (shift, &s) in &self.shifts {
            f.add_term(-&(shift + &self.gamma0), -s);
        }
        f
    }

    /// Multiplies the fan polynomial by the series inverse of the defining
    /// product and checks that the result is `1` on all monomials of refined
    /// grade `≥ -depth`. Each factor is expanded downward in the sweep order;
    /// the refined grade is a linear functional positive on every factor
    /// oriented that way, so windows stay finite even when the grading
    /// vanishes on a factor.
    pub fn round_trip(&self, depth: Rational) -> bool {
        let poly = self.polynomial();
        let dim = self.grading.dim();
        let zero = Graded { g: Rational::zero(), w: Weight::zero(dim) };
        let oriented: Vec<(Weight, bool, u32)> = self
            .factors
            .iter()
            .map(|(gamma, n)| {
                let positive = Graded { g: self.grade(gamma), w: gamma.clone() } > zero;
                let up = if positive { gamma.clone() } else { -gamma };
                (up, positive, *n)
            })
            .collect();
        let height = refined_grading(dim, &oriented.iter().map(|(g, _, _)| (self.grade(g), g)).collect::<Vec<_>>());
        let refined = |x: &Weight| self.grade(x) * height.0 + x.dot(&height.1);
        let top = poly.terms().map(|(w, _)| refined(w)).max().unwrap_or_else(Rational::zero);
        let floor = -depth - top;
        let mut inverse = FormalElement::one(dim);
        // 1/(1 - e^{-γ}) = Σ_{k≥0} e^{-kγ} for γ above zero, and
        // -Σ_{k≥1} e^{kγ} otherwise.
        for (up, positive, n) in &oriented {
            let step = -up;
            let (lead, sign) = if *positive { (Weight::zero(dim), 1) } else { (step.clone(), -1) };
            for _ in 0..*n {
                let mut next = FormalElement::new();
                for (w, c) in inverse.terms() {
                    let mut x = w + &lead;
                    while refined(&x) >= floor {
                        next.add_term(x.clone(), sign * c);
                        x = &x + &step;
                    }
                }
                inverse = next;
            }
        }
        let product = &poly * &inverse;
        let windowed = product.filtered(|w| refined(w) >= -depth);
        windowed == FormalElement::one(dim)
    }
}

/// `(K, v)` such that `K·g + <x, v>` is positive on each `(g, x)` with
/// `(g, x)` above zero in the (grade, lexicographic) order.
fn refined_grading(dim: usize, factors: &[(Rational, &Weight)]) -> (Rational, Weight) {
    let one = Rational::from_integer(1);
    let mut base = one;
    for (g, x) in factors {
        if !g.is_zero() {
            continue;
        }
        if let Some(i) = x.coords().iter().position(|c| !c.is_zero()) {
            let tail: Rational = x.coords()[i + 1..].iter().map(|c| c.abs()).sum();
            base = base.max((tail / x.coords()[i]).floor() + one);
        }
    }
    let mut power = one;
    let mut lex = vec![Rational::zero(); dim];
    for c in lex.iter_mut().rev() {
        *c = power;
        power *= base;
    }
    let lex = Weight::new(lex);
    let mut k = one;
    for (g, x) in factors {
        if g.is_positive() {
            k = k.max((x.dot(&lex).abs() / g).floor() + one);
        }
    }
    (k, lex)
}

pub fn compute_fan(spec: &EmbeddingSpec) -> Result<Fan> {
    let ambient = spec.ambient();
    let dim = ambient.ambient_dim();
    let grading = spec.a_tilde_grading();
    let perp: std::collections::HashSet<&Weight> = spec.perp_roots().collect();
    let mut counts: BTreeMap<Weight, i64> = BTreeMap::new();
    for root in ambient.positive_roots() {
        if perp.contains(&root.vector) {
            continue;
        }
        *counts.entry(spec.project_a_tilde(&root.vector)).or_default() += root.multiplicity as i64;
    }
    for root in spec.a_system().positive_roots() {
        *counts.entry(root.vector.clone()).or_default() -= root.multiplicity as i64;
    }
    let mut poly = FormalElement::one(dim);
    let mut factors = Vec::new();
    for (gamma, n) in counts {
        // a-roots are positive roots of g off the partner, so every exponent is ≥ 0
        assert!(n >= 0, "negative fan exponent at {gamma}");
        if n == 0 {
            continue;
        }
        let factor = &FormalElement::one(dim) - &FormalElement::monomial(-&gamma, 1);
        poly = &poly * &factor.pow(n as u32, dim);
        factors.push((gamma, n as u32));
    }
    let graded = |w: &Weight| Graded { g: w.dot(&grading), w: w.clone() };
    // F = -Σ s(γ) e^{-γ}: the top monomial of F is e^{-γ0}
    let (top, top_coeff) = poly
        .terms()
        .max_by(|a, b| graded(a.0).cmp(&graded(b.0)))
        .map(|(w, c)| (w.clone(), c))
        .expect("product of binomials is nonzero");
    let gamma0 = -&top;
    let s0 = -top_coeff;
    let mut shifts = BTreeMap::new();
    let mut depth = Rational::zero();
    for (w, c) in poly.terms() {
        if *w == top {
            continue;
        }
        let shift = &(-w) - &gamma0;
        let g = shift.dot(&grading);
        if g > depth {
            depth = g;
        }
        shifts.insert(shift, -c);
    }
    Ok(Fan { gamma0, s0, shifts, depth, grading, factors })
}

/// Weyl dimension formula in an arbitrary (possibly reducible or empty) system.
pub fn module_dimension(system: &RootSystem, lambda: &Weight) -> Result<u64> {
    let shifted = lambda + system.rho();
    let mut num = BigRational::from_integer(BigInt::from(1));
    for root in system.positive_roots() {
        let a = system.pair(&shifted, &root.vector);
        let b = system.pair(system.rho(), &root.vector);
        num *= BigRational::new(BigInt::from(*a.numer()), BigInt::from(*a.denom()));
        num /= BigRational::new(BigInt::from(*b.numer()), BigInt::from(*b.denom()));
    }
    if !num.is_integer() || num.is_negative() {
        return Err(Error::NonIntegralDimension);
    }
    num.to_integer().to_u64().ok_or(Error::NonIntegralDimension)
}

/// `dim L_perp^{μ_perp(u)}`
pub fn perp_dimension(spec: &EmbeddingSpec, u: &WeylElement, mu: &Weight) -> Result<u64> {
    let ambient = spec.ambient();
    ambient.check_dominant_integral(mu)?;
    let hw = &act(ambient, u, &(mu + ambient.rho()))? - ambient.rho();
    let perp_hw = &spec.project_perp(&hw) - spec.defect_perp();
    let perp = spec.perp_system();
    if !perp.is_strictly_dominant(&(&perp_hw + perp.rho())) {
        return Err(Error::NotDominantIntegral(perp_hw));
    }
    module_dimension(perp, &perp_hw)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingResult {
    pub mu: Weight,
    pub depth: u32,
    /// `k_ξ` on projected weights.
    #[serde(with = "weight_map")]
    pub k_table: BTreeMap<Weight, i64>,
    /// `b_ν` for `ν` in the closed dominant chamber of `a`.
    #[serde(with = "weight_map")]
    pub b: BTreeMap<Weight, u64>,
}

/// One row of a branching table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchRow {
    pub weight: Weight,
    /// Dynkin labels of `ν` for `a`.
    #[serde(with = "crate::weight::rational_vec")]
    pub labels: Vec<Rational>,
    /// Coordinates of the `h_perp` component of `ν`.
    #[serde(with = "crate::weight::rational_vec")]
    pub charge: Vec<Rational>,
    pub multiplicity: u64,
    pub dimension: u64,
}

impl BranchingResult {
    /// Rows sorted by decreasing grade, then by weight.
    pub fn rows(&self, spec: &EmbeddingSpec) -> Result<Vec<BranchRow>> {
        let grading = spec.a_tilde_grading();
        let mut rows = self
            .b
            .iter()
            .map(|(w, &m)| {
                Ok(BranchRow {
                    weight: w.clone(),
                    labels: spec.a_system().dynkin_labels(w),
                    charge: spec.h_perp_charge(w),
                    multiplicity: m,
                    dimension: module_dimension(spec.a_system(), w)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.sort_by(|x, y| y.weight.dot(&grading).cmp(&x.weight.dot(&grading)).then_with(|| y.weight.cmp(&x.weight)));
        Ok(rows)
    }

    /// `Σ_ν b_ν dim L_a^ν`
    pub fn total_dimension(&self, spec: &EmbeddingSpec) -> Result<u64> {
        self.b.iter().map(|(w, &m)| Ok(m * module_dimension(spec.a_system(), w)?)).sum()
    }
}

/// `N(p) = Σ_u ε(u) dim L_perp^{μ_perp(u)}` at `p = π_ã[u(μ+ρ)-ρ]`.
pub fn source_terms(spec: &EmbeddingSpec, decomposition: &SingularDecomposition) -> Result<FormalElement> {
    let mut n = FormalElement::new();
    for e in &decomposition.entries {
        let dim = module_dimension(spec.perp_system(), &e.perp_hw)?;
        n.add_term(&e.carrier - spec.defect_perp(), e.sign * dim as i64);
    }
    Ok(n)
}

fn grade_span(f: &FormalElement, grading: &Weight) -> Rational {
    let grades: Vec<Rational> = f.terms().map(|(w, _)| w.dot(grading)).collect();
    match (grades.iter().max(), grades.iter().min()) {
        (Some(a), Some(b)) => a - b,
        _ => Rational::zero(),
    }
}

fn ceil_u32(r: Rational) -> u32 {
    r.ceil().to_integer().max(0) as u32
}

/// Sweep depth that covers the whole projected diagram:
/// `max(⌈<2 π_ã(μ+ρ), grading>⌉ + 2, ⌈span N - span F⌉)`.
pub fn default_depth(spec: &EmbeddingSpec, mu: &Weight) -> Result<u32> {
    let grading = spec.a_tilde_grading();
    let shifted = spec.project_a_tilde(&(mu + spec.ambient().rho()));
    let heuristic = ceil_u32(shifted.scale_int(2).dot(&grading)) + 2;
    let fan = compute_fan(spec)?;
    let n = source_terms(spec, &decompose(spec, mu)?)?;
    let exact = grade_span(&n, &grading) - grade_span(&fan.polynomial(), &grading);
    Ok(heuristic.max(ceil_u32(exact)))
}

pub fn branch(spec: &EmbeddingSpec, mu: &Weight, depth: u32) -> Result<BranchingResult> {
    let fan = compute_fan(spec)?;
    let decomposition = decompose(spec, mu)?;
    let n = source_terms(spec, &decomposition)?;
    let k_table = sweep(&fan, &n, depth)?;
    let a = spec.a_system();
    let mut b = BTreeMap::new();
    for (xi, &k) in &k_table {
        if a.is_dominant(xi) {
            if k < 0 {
                return Err(Error::NegativeMultiplicity(xi.clone()));
            }
            b.insert(xi.clone(), k as u64);
        }
    }
    Ok(BranchingResult { mu: mu.clone(), depth, k_table, b })
}

/// `branch` at [`default_depth`].
pub fn branch_auto(spec: &EmbeddingSpec, mu: &Weight) -> Result<BranchingResult> {
    branch(spec, mu, default_depth(spec, mu)?)
}

/// Descending sweep of the recurrence; `acc[ξ]` collects the bracket.
fn sweep(fan: &Fan, n: &FormalElement, depth: u32) -> Result<BTreeMap<Weight, i64>> {
    let key = |w: Weight| Graded { g: w.dot(&fan.grading), w };
    let mut acc: BTreeMap<Graded, i64> = n.terms().map(|(p, c)| (key(p + &fan.gamma0), c)).collect();
    let shifts: Vec<(Weight, i64)> = fan.shifts.iter().map(|(w, &s)| (w.clone(), s)).collect();
    let mut k_table = BTreeMap::new();
    let mut top: Option<Rational> = None;
    let limit = Rational::from_integer(depth as i64);
    let mut steps = 0usize;
    while let Some((xi, bracket)) = acc.pop_last() {
        if bracket == 0 {
            continue;
        }
        steps += 1;
        let top_g = *top.get_or_insert(xi.g);
        if top_g - xi.g > limit || steps > MAX_SWEEP_STEPS {
            return Err(Error::DepthInsufficient(depth));
        }
        if bracket % fan.s0 != 0 {
            return Err(Error::DivisionInconsistency);
        }
        let k = -bracket / fan.s0;
        for (gamma, s) in &shifts {
            *acc.entry(key(&xi.w - gamma)).or_default() += s * k;
        }
        k_table.insert(xi.w, k);
    }
    Ok(k_table)
}

/// `(k · F)(p)` read back from a coefficient table: the bracket of the
/// recurrence at `ξ = p + γ0`, with the sign that makes it equal `N(p)`.
pub fn recovered_source(fan: &Fan, k_table: &BTreeMap<Weight, i64>) -> FormalElement {
    let mut candidates: HashMap<Weight, ()> = HashMap::new();
    for xi in k_table.keys() {
        candidates.insert(xi.clone(), ());
        for gamma in fan.shifts.keys() {
            candidates.insert(xi - gamma, ());
        }
    }
    let k = |w: &Weight| k_table.get(w).copied().unwrap_or(0);
    candidates
        .into_keys()
        .map(|xi| {
            let mut value = fan.s0 * k(&xi);
            for (gamma, s) in &fan.shifts {
                value += s * k(&(&xi + gamma));
            }
            (&xi - &fan.gamma0, -value)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::build_embedding;
    use crate::rootspace::build_root_datum;

    fn spec(alg: &str, roots: &[&[i64]]) -> EmbeddingSpec {
        let d = build_root_datum(alg.parse().unwrap()).unwrap();
        build_embedding(&d, &roots.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn labels_table(spec: &EmbeddingSpec, r: &BranchingResult) -> BTreeMap<Vec<i64>, u64> {
        r.rows(spec)
            .unwrap()
            .into_iter()
            .map(|row| (row.labels.iter().map(|x| x.to_integer()).collect(), row.multiplicity))
            .collect()
    }

    #[test]
    fn round_trip_with_grade_zero_factors() {
        let s = spec("C3", &[&[1, 0, 0], &[0, 0, 1]]);
        let fan = compute_fan(&s).unwrap();
        assert!(fan.factors.iter().any(|(g, _)| fan.grade(g).is_zero()));
        for depth in [2, 4, 8] {
            assert!(fan.round_trip(Rational::from_integer(depth)));
        }
        let mut broken = fan.clone();
        *broken.shifts.values_mut().next().unwrap() += 1;
        assert!(!broken.round_trip(Rational::from_integer(8)));
    }

    #[test]
    fn whole_algebra_fan_is_trivial() {
        let s = spec("B2", &[&[1, 0], &[0, 1]]);
        let fan = compute_fan(&s).unwrap();
        assert_eq!(fan.s0, -1);
        assert!(fan.gamma0.is_zero());
        assert!(fan.shifts.is_empty());
        let mu = s.ambient().from_dynkin_labels(&[2, 1]).unwrap();
        let r = branch_auto(&s, &mu).unwrap();
        assert_eq!(r.b, BTreeMap::from([(mu, 1)]));
    }

    #[test]
    fn b2_short_root_a1_fan() {
        let s = spec("B2", &[&[1, 2]]);
        let fan = compute_fan(&s).unwrap();
        let theta = Weight::from_ints(&[1, 1]);
        let half = theta.scale(Rational::new(1, 2));
        assert_eq!(fan.factors, vec![(half.clone(), 2)]);
        assert!(fan.gamma0.is_zero());
        assert_eq!(fan.s0, -1);
        assert_eq!(fan.shifts, BTreeMap::from([(half, 2), (theta, -1)]));
        assert!(fan.round_trip(Rational::from_integer(6)));
    }

    #[test]
    fn b2_short_root_a1_branching() {
        let s = spec("B2", &[&[1, 2]]);
        let d = s.ambient().clone();
        let r = branch_auto(&s, &d.fundamental_weights()[0]).unwrap();
        assert_eq!(labels_table(&s, &r), BTreeMap::from([(vec![1], 2), (vec![0], 1)]));
        assert_eq!(r.total_dimension(&s).unwrap(), 5);
        let r = branch_auto(&s, &d.fundamental_weights()[1]).unwrap();
        assert_eq!(labels_table(&s, &r), BTreeMap::from([(vec![1], 1), (vec![0], 2)]));
        assert_eq!(r.total_dimension(&s).unwrap(), 4);
    }

    #[test]
    fn negative_projected_root_gives_shifted_gamma0() {
        // a = <a1> in B2: the partner is A1 along e1 + e2 and e2 projects below zero
        let s = spec("B2", &[&[1, 0]]);
        let fan = compute_fan(&s).unwrap();
        assert!(!fan.gamma0.is_zero());
        assert_eq!(fan.s0, 1);
        assert!(fan.round_trip(Rational::from_integer(5)));
        let d = s.ambient().clone();
        let mu = d.fundamental_weights()[0].clone();
        let r = branch_auto(&s, &mu).unwrap();
        // weights ±e1, ±e2, 0 project to labels 1, 1, -1, -1, 0
        assert_eq!(labels_table(&s, &r), BTreeMap::from([(vec![1], 2), (vec![0], 1)]));
        assert_eq!(r.total_dimension(&s).unwrap(), 5);
    }

    #[test]
    fn perp_dimensions() {
        let s = spec("B2", &[&[1, 2]]);
        let d = s.ambient().clone();
        let w1 = d.fundamental_weights()[0].clone();
        assert_eq!(perp_dimension(&s, &WeylElement::identity(), &w1).unwrap(), 2);
        let whole = spec("B2", &[&[1, 0], &[0, 1]]);
        assert_eq!(perp_dimension(&whole, &WeylElement { word: vec![0, 1] }, &w1).unwrap(), 1);
        let a1 = build_root_datum("A1".parse().unwrap()).unwrap();
        for m in 0..5 {
            let lambda = a1.from_dynkin_labels(&[m]).unwrap();
            assert_eq!(module_dimension(&a1, &lambda).unwrap(), m as u64 + 1);
        }
    }

    #[test]
    fn recovered_source_matches() {
        let s = spec("B3", &[&[0, 1, 0]]);
        let mu = s.ambient().from_dynkin_labels(&[1, 0, 1]).unwrap();
        let r = branch_auto(&s, &mu).unwrap();
        let fan = compute_fan(&s).unwrap();
        let n = source_terms(&s, &decompose(&s, &mu).unwrap()).unwrap();
        assert_eq!(recovered_source(&fan, &r.k_table), n);
    }

    #[test]
    fn too_shallow_depth_is_reported() {
        let s = spec("B2", &[&[1, 2]]);
        let mu = s.ambient().from_dynkin_labels(&[2, 2]).unwrap();
        assert_eq!(branch(&s, &mu, 0), Err(Error::DepthInsufficient(0)));
    }
}
