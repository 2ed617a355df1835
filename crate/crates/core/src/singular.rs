//! Singular elements `Ψ^μ = Σ_w ε(w) e^{w(μ+ρ)-ρ}` and their decomposition
//! into singular elements of the orthogonal partner.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddingSpec;
use crate::formal::FormalElement;
use crate::rootspace::RootSystem;
use crate::weight::Weight;
use crate::weyl::WeylElement;
use crate::Result;

pub fn singular_element(d: &RootSystem, mu: &Weight) -> Result<FormalElement> {
    d.check_dominant_integral(mu)?;
    shifted_alternating_sum(d, mu)
}

/// `Σ_w ε(w) e^{w(λ+ρ)-ρ}` without the dominance check; used for the
/// partner's singular elements, whose highest weights live in its own chamber.
pub(crate) fn shifted_alternating_sum(d: &RootSystem, lambda: &Weight) -> Result<FormalElement> {
    let group = d.weyl_group()?;
    let shifted = lambda + d.rho();
    Ok((0..group.order()).map(|i| (&group.act_by_index(i, &shifted) - d.rho(), group.sign(i))).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularEntry {
    pub u: WeylElement,
    pub sign: i64,
    pub length: usize,
    /// `u(μ+ρ) - ρ`
    pub highest_weight: Weight,
    /// `μ_ã(u) = π_ã[u(μ+ρ)-ρ] + D_perp`
    pub carrier: Weight,
    /// `μ_perp(u) = π_perp[u(μ+ρ)-ρ] - D_perp`
    pub perp_hw: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularDecomposition {
    pub mu: Weight,
    pub entries: Vec<SingularEntry>,
}

impl SingularDecomposition {
    /// `Σ_u ε(u) e^{μ_ã(u)} Ψ_perp^{μ_perp(u)}`
    pub fn expand(&self, spec: &EmbeddingSpec) -> Result<FormalElement> {
        let mut out = FormalElement::new();
        for e in &self.entries {
            let psi = shifted_alternating_sum(spec.perp_system(), &e.perp_hw)?;
            for (w, c) in psi.terms() {
                out.add_term(w + &e.carrier, c * e.sign);
            }
        }
        Ok(out)
    }
}

/// Indices (in the ambient Weyl group) of the representatives `U`: those `u`
/// with `u(μ+ρ)` strictly dominant for the partner.
fn representative_indices(spec: &EmbeddingSpec, mu: &Weight) -> Result<Vec<usize>> {
    let ambient = spec.ambient();
    ambient.check_dominant_integral(mu)?;
    let group = ambient.weyl_group()?;
    let shifted = mu + ambient.rho();
    let perp = spec.perp_system();
    Ok((0..group.order())
        .filter(|&i| {
            let x = group.act_by_index(i, &shifted);
            (0..perp.rank()).all(|j| perp.coroot_pairing(&x, j).is_positive())
        })
        .collect())
}

pub fn compute_u(spec: &EmbeddingSpec, mu: &Weight) -> Result<Vec<WeylElement>> {
    let group = spec.ambient().weyl_group()?;
    Ok(representative_indices(spec, mu)?.into_iter().map(|i| group.element(i).clone()).collect())
}

pub fn decompose(spec: &EmbeddingSpec, mu: &Weight) -> Result<SingularDecomposition> {
    let ambient = spec.ambient();
    let group = ambient.weyl_group()?;
    let shifted = mu + ambient.rho();
    let mut entries: Vec<SingularEntry> = representative_indices(spec, mu)?
        .into_iter()
        .map(|i| {
            let highest_weight = &group.act_by_index(i, &shifted) - ambient.rho();
            let u = group.element(i).clone();
            SingularEntry {
                sign: u.sign(),
                length: u.word_len(),
                carrier: &spec.project_a_tilde(&highest_weight) + spec.defect_perp(),
                perp_hw: &spec.project_perp(&highest_weight) - spec.defect_perp(),
                highest_weight,
                u,
            }
        })
        .collect();
    entries.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.highest_weight.cmp(&b.highest_weight)));
    Ok(SingularDecomposition { mu: mu.clone(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::build_embedding;
    use crate::rootspace::build_root_datum;
    use crate::weight::Rational;

    fn datum(s: &str) -> crate::RootDatum {
        build_root_datum(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_trivial_weight() {
        let d = datum("A1");
        let psi = singular_element(&d, &d.zero()).unwrap();
        let alpha = d.simple_roots()[0].clone();
        let expected: FormalElement = [(d.zero(), 1), (-&alpha, -1)].into_iter().collect();
        assert_eq!(psi, expected);
    }

    #[test]
    fn denominator_identity_b2() {
        let d = datum("B2");
        let psi = singular_element(&d, &d.zero()).unwrap();
        let mut r = FormalElement::one(2);
        for root in d.positive_roots() {
            r = &r * &(&FormalElement::one(2) - &FormalElement::monomial(-&root.vector, 1));
        }
        assert_eq!(psi.len(), 8);
        assert_eq!(psi, r);
    }

    #[test]
    fn b2_vector_module() {
        let d = datum("B2");
        let w1 = d.fundamental_weights()[0].clone();
        let psi = singular_element(&d, &w1).unwrap();
        assert_eq!(psi.len(), 8);
        let shifted = &w1 + d.rho();
        for (w, c) in psi.terms() {
            assert!(c == 1 || c == -1);
            assert!(crate::weyl::orbit(&d, &shifted).contains(&(w + d.rho())));
        }
        assert!(singular_element(&d, &Weight::from_ints(&[-1, 0])).is_err());
        assert!(singular_element(&d, &Weight::new(vec![Rational::new(1, 3), Rational::from_integer(0)])).is_err());
    }

    #[test]
    fn b2_short_root_a1_decomposition() {
        let d = datum("B2");
        let spec = build_embedding(&d, &[vec![1, 2]]).unwrap();
        let w1 = d.fundamental_weights()[0].clone();
        let dec = decompose(&spec, &w1).unwrap();
        assert_eq!(dec.entries.len(), 4);
        assert_eq!(dec.expand(&spec).unwrap(), singular_element(&d, &w1).unwrap());
        let first = &dec.entries[0];
        assert!(first.u.is_identity());
        assert_eq!(first.perp_hw, Weight::new(vec![Rational::new(1, 2), Rational::new(-1, 2)]));
        assert_eq!(first.carrier, spec.project_a_tilde(&w1));
    }

    #[test]
    fn degenerate_limits() {
        let d = datum("B2");
        let whole = build_embedding(&d, &[vec![1, 0], vec![0, 1]]).unwrap();
        let mu = d.from_dynkin_labels(&[1, 1]).unwrap();
        assert_eq!(compute_u(&whole, &mu).unwrap().len(), 8);
        let none = build_embedding(&d, &[]).unwrap();
        let u = compute_u(&none, &mu).unwrap();
        assert_eq!(u, vec![WeylElement::identity()]);
        for spec in [&whole, &none] {
            let dec = decompose(spec, &mu).unwrap();
            assert_eq!(dec.expand(spec).unwrap(), singular_element(&d, &mu).unwrap());
        }
    }

    #[test]
    fn b3_rank_two_partner() {
        let d = datum("B3");
        // a = A1 along e1 = a1 + a2 + a3; the partner is B2 on <a2, a3>
        let spec = build_embedding(&d, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(spec.perp_system().simple_roots(), &d.simple_roots()[1..]);
        let mu = d.from_dynkin_labels(&[1, 0, 0]).unwrap();
        let dec = decompose(&spec, &mu).unwrap();
        let perp_order = spec.orthogonal_weyl_subgroup().unwrap().len();
        assert_eq!(dec.entries.len() * perp_order, 48);
        assert_eq!(dec.expand(&spec).unwrap(), singular_element(&d, &mu).unwrap());
        for e in &dec.entries {
            let p = spec.perp_system();
            let shifted = &e.perp_hw + p.rho();
            assert!(p.is_strictly_dominant(&shifted));
        }
    }
}
