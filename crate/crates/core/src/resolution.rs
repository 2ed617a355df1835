//! Generalized BGG resolutions graded by Weyl length, their Euler
//! characteristic, and their recovery from branching data when the orthogonal
//! partner has rank one.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::branching::{branch, compute_fan, default_depth, recovered_source};
use crate::embedding::EmbeddingSpec;
use crate::formal::FormalElement;
use crate::singular::{decompose, SingularEntry};
use crate::verma::{gv_character, parabolic_data, standard_weyl_verma};
use crate::weight::{Rational, Weight};
use crate::weyl::{act, to_dominant};
use crate::{Error, Result};

/// Grade `k` lists the modules `M_I^{u(μ+ρ)-ρ}` with `length(u) = k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionSequence {
    pub mu: Weight,
    pub grades: Vec<Vec<SingularEntry>>,
}

impl ResolutionSequence {
    fn from_entries(mu: &Weight, mut entries: Vec<SingularEntry>) -> Self {
        entries.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.highest_weight.cmp(&b.highest_weight)));
        let top = entries.iter().map(|e| e.length).max().unwrap_or(0);
        let mut grades = vec![Vec::new(); top + 1];
        for e in entries {
            grades[e.length].push(e);
        }
        Self { mu: mu.clone(), grades }
    }

    pub fn len(&self) -> usize {
        self.grades.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &SingularEntry)> {
        self.grades.iter().enumerate().flat_map(|(k, g)| g.iter().map(move |e| (k, e)))
    }
}

pub fn bgg_resolution(spec: &EmbeddingSpec, mu: &Weight) -> Result<ResolutionSequence> {
    Ok(ResolutionSequence::from_entries(mu, decompose(spec, mu)?.entries))
}

/// `Σ_k (-1)^k Σ e^{carrier} ch M_I^{perp_hw}` against `ch L^μ` on the
/// window of the given depth below `μ`. Entries whose sign disagrees with
/// their grade make the check fail.
pub fn verify_euler(seq: &ResolutionSequence, spec: &EmbeddingSpec, depth: u32) -> Result<bool> {
    let pd = parabolic_data(spec)?;
    let ambient = spec.ambient();
    let mut sum = FormalElement::new();
    for (k, e) in seq.entries() {
        let expected = if k % 2 == 0 { 1 } else { -1 };
        if e.sign != expected {
            return Ok(false);
        }
        let gv = gv_character(&pd, &e.perp_hw, depth)?;
        for (w, c) in gv.terms.terms() {
            sum.add_term(w + &e.carrier, e.sign * c);
        }
    }
    let sum = sum.below(ambient, &seq.mu, depth);
    Ok(sum == standard_weyl_verma(ambient, &seq.mu, depth)?)
}

/// Rebuilds the resolution from the branching coefficients alone, for a
/// rank-one partner: each nonzero value of `k · F` at `p` gives a module with
/// carrier `p + D_perp`, sign and dimension `|N(p)|`, whose partner highest
/// weight is `((dim - 1)/2) α_I` carried back by the parabolic witness.
pub fn resolution_from_branching(spec: &EmbeddingSpec, mu: &Weight, depth: Option<u32>) -> Result<ResolutionSequence> {
    let perp_rank = spec.perp_system().rank();
    if perp_rank != 1 {
        return Err(Error::PerpNotRankOne(perp_rank));
    }
    let ambient = spec.ambient();
    let depth = match depth {
        Some(d) => d,
        None => default_depth(spec, mu)?,
    };
    let result = branch(spec, mu, depth)?;
    let fan = compute_fan(spec)?;
    let source = recovered_source(&fan, &result.k_table);
    let pd = parabolic_data(spec)?;
    let alpha_i = &ambient.simple_roots()[pd.subset[0]];
    let back = pd.witness.inverse();
    let group = ambient.weyl_group()?;
    let shifted_mu = mu + ambient.rho();

    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for (p, value) in source.terms() {
        let dim = value.abs();
        let sign = value.signum();
        let perp_hw = act(ambient, &back, &alpha_i.scale(Rational::new(dim - 1, 2)))?;
        let carrier = p + spec.defect_perp();
        let y = &(&carrier + &perp_hw) + ambient.rho();
        let (dominant, w, _) = to_dominant(ambient, &y);
        if dominant != shifted_mu {
            return Err(Error::AmbiguousCarrier(format!("carrier {carrier} is not on the orbit of mu + rho")));
        }
        let u = group.canonical(ambient, &w.inverse())?;
        if u.sign() != sign || !seen.insert(u.clone()) {
            return Err(Error::AmbiguousCarrier(format!("carrier {carrier} does not determine u")));
        }
        entries.push(SingularEntry {
            sign,
            length: u.word_len(),
            highest_weight: &y - ambient.rho(),
            carrier,
            perp_hw,
            u,
        });
    }
    if entries.len() * 2 != group.order() {
        return Err(Error::AmbiguousCarrier(format!(
            "recovered {} modules, expected {}",
            entries.len(),
            group.order() / 2
        )));
    }
    Ok(ResolutionSequence::from_entries(mu, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::build_embedding;
    use crate::rootspace::build_root_datum;
    use crate::weyl::WeylElement;

    fn spec(alg: &str, roots: &[&[i64]]) -> EmbeddingSpec {
        let d = build_root_datum(alg.parse().unwrap()).unwrap();
        build_embedding(&d, &roots.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn classical_bgg_for_a1() {
        let s = spec("A1", &[&[1]]);
        let mu = s.ambient().zero();
        let seq = bgg_resolution(&s, &mu).unwrap();
        assert_eq!(seq.grades.len(), 2);
        assert_eq!(seq.grades[0][0].u, WeylElement::identity());
        assert_eq!(seq.grades[1][0].u, WeylElement { word: vec![0] });
        assert!(verify_euler(&seq, &s, 4).unwrap());
    }

    #[test]
    fn b2_short_root_a1_sequence() {
        let s = spec("B2", &[&[1, 2]]);
        let d = s.ambient().clone();
        let w1 = d.fundamental_weights()[0].clone();
        let seq = bgg_resolution(&s, &w1).unwrap();
        assert_eq!(seq.len(), 4);
        let first = &seq.grades[0][0];
        assert_eq!(seq.grades[0].len(), 1);
        assert_eq!(first.carrier, &s.project_a_tilde(&w1) + s.defect_perp());
        assert_eq!(first.perp_hw, &s.project_perp(&w1) - s.defect_perp());
        for depth in [4, 6, 8] {
            assert!(verify_euler(&seq, &s, depth).unwrap());
        }
        let mut flipped = seq.clone();
        flipped.grades[1][0].sign *= -1;
        assert!(!verify_euler(&flipped, &s, 8).unwrap());
    }

    #[test]
    fn recovered_from_branching() {
        let s = spec("B2", &[&[1, 2]]);
        let d = s.ambient().clone();
        for mu in d.fundamental_weights() {
            assert_eq!(resolution_from_branching(&s, mu, None).unwrap(), bgg_resolution(&s, mu).unwrap());
        }
        let rotated = spec("B2", &[&[1, 0]]);
        let mu = d.from_dynkin_labels(&[1, 2]).unwrap();
        assert_eq!(resolution_from_branching(&rotated, &mu, None).unwrap(), bgg_resolution(&rotated, &mu).unwrap());
        let rank_two = spec("B3", &[&[1, 1, 1]]);
        let mu = rank_two.ambient().zero();
        assert_eq!(resolution_from_branching(&rank_two, &mu, None), Err(Error::PerpNotRankOne(2)));
    }
}
