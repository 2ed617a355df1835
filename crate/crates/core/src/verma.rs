//! Generalized (parabolic) Verma characters and the generalized Weyl-Verma
//! decomposition of `ch L^μ`.
//!
//! Characters are computed on truncation windows: the offsets `λ - ξ` that are
//! non-negative integer combinations of simple roots of height at most
//! `depth`. Levi and nilradical roots are kept in the frame of the orthogonal
//! partner itself, so the Levi is `Δ_perp+` and the nilradical is
//! `Δ+ \ Δ_perp+`; the standard parabolic `Δ_I+` conjugate to the Levi is
//! recorded through a Weyl group witness.

use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddingSpec;
use crate::formal::FormalElement;
use crate::rootspace::RootSystem;
use crate::singular::decompose;
use crate::weight::Weight;
use crate::weyl::WeylElement;
use crate::window::Window;
use crate::{Error, Result};

/// Default truncation depth of character windows.
pub const DEFAULT_DEPTH: u32 = 8;

#[derive(Clone, Debug)]
pub struct ParabolicData {
    /// Indices of the simple roots `I`.
    pub subset: Vec<usize>,
    /// `w` with `w(β)` simple for every simple root `β` of the partner.
    pub witness: WeylElement,
    pub levi_roots: Vec<Weight>,
    pub nilradical_roots: Vec<Weight>,
    ambient: RootSystem,
    perp: RootSystem,
}

impl ParabolicData {
    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    pub fn perp(&self) -> &RootSystem {
        &self.perp
    }
}

pub fn parabolic_data(spec: &EmbeddingSpec) -> Result<ParabolicData> {
    let ambient = spec.ambient();
    let perp = spec.perp_system();
    let group = ambient.weyl_group()?;
    let simple = ambient.simple_roots();
    let found = (0..group.order()).find_map(|i| {
        let images: Option<Vec<usize>> = perp
            .simple_roots()
            .iter()
            .map(|b| {
                let image = group.act_by_index(i, b);
                simple.iter().position(|s| *s == image)
            })
            .collect();
        images.map(|img| (i, img))
    });
    let (idx, mut subset) = found.ok_or(Error::NoParabolicIdentification)?;
    subset.sort_unstable();
    let levi_roots: Vec<Weight> = spec.perp_roots().cloned().collect();
    let nilradical_roots =
        ambient.positive_roots().iter().map(|r| r.vector.clone()).filter(|v| !levi_roots.contains(v)).collect();
    Ok(ParabolicData {
        subset,
        witness: group.element(idx).clone(),
        levi_roots,
        nilradical_roots,
        ambient: ambient.system().clone(),
        perp: perp.clone(),
    })
}

/// Truncated character of a generalized Verma module `M_I^λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GVChar {
    pub highest_weight: Weight,
    pub depth: u32,
    pub terms: FormalElement,
}

fn check_perp_dominant(perp: &RootSystem, lambda: &Weight) -> Result<()> {
    let labels = perp.dynkin_labels(lambda);
    if labels.iter().any(|l| !l.is_integer() || *l < 0.into()) {
        return Err(Error::NotDominantIntegral(lambda.clone()));
    }
    Ok(())
}

/// `(v, q_v)` with `q_v = λ - (v(λ+ρ_perp) - ρ_perp)` in simple-root
/// coordinates of the ambient algebra, for `v` in the partner's Weyl group.
fn perp_orbit_offsets(pd: &ParabolicData, lambda: &Weight) -> Result<Vec<(i64, Vec<i64>)>> {
    let group = pd.perp.weyl_group()?;
    let shifted = lambda + pd.perp.rho();
    (0..group.order())
        .map(|i| {
            let top = &group.act_by_index(i, &shifted) - pd.perp.rho();
            let q = pd
                .ambient
                .integer_root_coordinates(&(lambda - &top))
                .ok_or(Error::NotDominantIntegral(lambda.clone()))?;
            Ok((group.sign(i), q))
        })
        .collect()
}

fn root_coords(d: &RootSystem, roots: &[Weight]) -> Vec<Vec<i64>> {
    roots.iter().map(|r| d.integer_root_coordinates(r).expect("roots have integer coordinates")).collect()
}

/// `ch L_perp^λ / Π_{η ∈ nilradical} (1 - e^{-η})`, with the Levi character
/// obtained as `Ψ_perp^λ / R_perp`.
pub fn gv_character(pd: &ParabolicData, lambda: &Weight, depth: u32) -> Result<GVChar> {
    check_perp_dominant(&pd.perp, lambda)?;
    let window = Window::new(pd.ambient.rank(), depth);
    let mut g = window.zeros();
    for (sign, q) in perp_orbit_offsets(pd, lambda)? {
        window.place(&mut g, &q, sign);
    }
    for eta in root_coords(&pd.ambient, &pd.levi_roots) {
        window.divide_by_factor(&mut g, &eta);
    }
    for eta in root_coords(&pd.ambient, &pd.nilradical_roots) {
        window.divide_by_factor(&mut g, &eta);
    }
    Ok(GVChar { highest_weight: lambda.clone(), depth, terms: window.to_formal(&pd.ambient, lambda, &g) })
}

/// Kostant partition function of `Δ+` on a window.
fn kostant_table(d: &RootSystem, window: &Window) -> Vec<i64> {
    let mut p = window.zeros();
    window.place(&mut p, &vec![0; d.rank()], 1);
    for eta in root_coords(d, &d.positive_roots().iter().map(|r| r.vector.clone()).collect::<Vec<_>>()) {
        window.divide_by_factor(&mut p, &eta);
    }
    p
}

/// `Σ sign · ch M^{top - q}` on the window below `top`.
fn verma_sum(d: &RootSystem, top: &Weight, terms: &[(i64, Vec<i64>)], depth: u32) -> FormalElement {
    let window = Window::new(d.rank(), depth);
    let kostant = kostant_table(d, &window);
    let mut g = window.zeros();
    for (i, pt) in window.points().enumerate() {
        if kostant[i] == 0 {
            continue;
        }
        for (sign, q) in terms {
            let shifted: Vec<i64> = pt.iter().zip(q).map(|(&a, &b)| a as i64 + b).collect();
            window.place(&mut g, &shifted, sign * kostant[i]);
        }
    }
    window.to_formal(d, top, &g)
}

/// `Σ_{v ∈ W_perp} ε(v) ch M^{v(λ+ρ_perp)-ρ_perp}`
pub fn gv_to_ordinary(pd: &ParabolicData, lambda: &Weight, depth: u32) -> Result<FormalElement> {
    check_perp_dominant(&pd.perp, lambda)?;
    Ok(verma_sum(&pd.ambient, lambda, &perp_orbit_offsets(pd, lambda)?, depth))
}

/// `Σ_{w ∈ W} ε(w) ch M^{w(μ+ρ)-ρ}`
pub fn standard_weyl_verma(d: &RootSystem, mu: &Weight, depth: u32) -> Result<FormalElement> {
    d.check_dominant_integral(mu)?;
    let group = d.weyl_group()?;
    let shifted = mu + d.rho();
    let terms: Vec<(i64, Vec<i64>)> = (0..group.order())
        .map(|i| {
            let q = d
                .integer_root_coordinates(&(&shifted - &group.act_by_index(i, &shifted)))
                .expect("orbit differences lie in the root lattice");
            (group.sign(i), q)
        })
        .collect();
    Ok(verma_sum(d, mu, &terms, depth))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylVermaEntry {
    pub u: WeylElement,
    pub sign: i64,
    pub carrier: Weight,
    pub gv: GVChar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylVermaDecomposition {
    pub mu: Weight,
    pub depth: u32,
    pub entries: Vec<WeylVermaEntry>,
}

impl WeylVermaDecomposition {
    /// `Σ_u ε(u) e^{μ_ã(u)} ch M_I^{μ_perp(u)}` on the window below `μ`.
    pub fn euler_sum(&self, d: &RootSystem) -> FormalElement {
        let mut out = FormalElement::new();
        for e in &self.entries {
            for (w, c) in e.gv.terms.terms() {
                out.add_term(w + &e.carrier, e.sign * c);
            }
        }
        out.below(d, &self.mu, self.depth)
    }
}

pub fn weyl_verma_decompose(spec: &EmbeddingSpec, mu: &Weight, depth: u32) -> Result<WeylVermaDecomposition> {
    let pd = parabolic_data(spec)?;
    let entries = decompose(spec, mu)?
        .entries
        .into_iter()
        .map(|e| {
            Ok(WeylVermaEntry { gv: gv_character(&pd, &e.perp_hw, depth)?, u: e.u, sign: e.sign, carrier: e.carrier })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeylVermaDecomposition { mu: mu.clone(), depth, entries })
}
