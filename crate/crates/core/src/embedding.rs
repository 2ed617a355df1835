//! Regular reductive subalgebras `a ⊂ g` given by simple roots, their
//! orthogonal partners, the splitting `h = h_a ⊕ h_perp_roots ⊕ h_perp`,
//! orthogonal projections, and the defects of the injection.

use std::collections::HashSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::rootspace::{build_root_datum, AlgebraId, RootDatum, RootSystem};
use crate::weight::{independent_subset, Projector, Rational, Weight};
use crate::weyl::WeylElement;
use crate::{Error, Result};

/// JSON descriptor `{"ambient": "B2", "a_roots": [[1, 2]]}`; each entry of
/// `a_roots` lists the simple-root coefficients of one simple root of `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDescriptor {
    pub ambient: AlgebraId,
    pub a_roots: Vec<Vec<i64>>,
}

impl EmbeddingDescriptor {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("embedding descriptor: {e}")))
    }

    pub fn build(&self) -> Result<EmbeddingSpec> {
        build_embedding(&build_root_datum(self.ambient)?, &self.a_roots)
    }
}

#[derive(Clone, Debug)]
pub struct EmbeddingSpec {
    ambient: RootDatum,
    a_roots: Vec<Vec<i64>>,
    a_system: RootSystem,
    perp_system: RootSystem,
    h_perp_basis: Vec<Weight>,
    defect_a: Weight,
    defect_perp: Weight,
    proj_a: Projector,
    proj_perp: Projector,
    proj_h: Projector,
    proj_h_perp: Projector,
}

pub fn build_embedding(ambient: &RootDatum, a_roots: &[Vec<i64>]) -> Result<EmbeddingSpec> {
    let rank = ambient.rank();
    let dim = ambient.ambient_dim();
    let mut a_vectors = Vec::with_capacity(a_roots.len());
    for coeffs in a_roots {
        if coeffs.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, found: coeffs.len() });
        }
        let v = ambient.from_integer_root_coordinates(coeffs);
        if ambient.positive_root_index(&v).is_none() {
            return Err(Error::NotPositiveRoot(coeffs.clone()));
        }
        a_vectors.push(v);
    }
    let distinct: HashSet<&Weight> = a_vectors.iter().collect();
    if distinct.len() != a_vectors.len() {
        return Err(Error::InvalidSimpleSystem("repeated root".into()));
    }
    if independent_subset(&a_vectors).len() != a_vectors.len() {
        return Err(Error::InvalidSimpleSystem("roots are linearly dependent".into()));
    }
    // from_simple_roots rejects positive off-diagonal Cartan integers
    let a_system = RootSystem::from_simple_roots(ambient.form(), dim, a_vectors.clone())?;
    if let Some(bad) = a_system.positive_roots().iter().find(|r| ambient.positive_root_index(&r.vector).is_none()) {
        return Err(Error::InvalidSimpleSystem(format!(
            "generated root {} of the subalgebra is not a root of {}",
            bad.vector, ambient.id
        )));
    }

    let perp_roots: Vec<Weight> = ambient
        .positive_roots()
        .iter()
        .map(|r| r.vector.clone())
        .filter(|b| a_vectors.iter().all(|a| b.dot(a).is_zero()))
        .collect();
    let perp_set: HashSet<&Weight> = perp_roots.iter().collect();
    let perp_simple: Vec<Weight> =
        perp_roots.iter().filter(|b| !perp_roots.iter().any(|c| perp_set.contains(&(*b - c)))).cloned().collect();
    let perp_system = RootSystem::from_simple_roots(ambient.form(), dim, perp_simple)?;
    debug_assert_eq!(perp_system.positive_roots().len(), perp_roots.len());

    let proj_a = Projector::new(a_vectors, dim);
    let proj_perp = Projector::new(perp_system.simple_roots().to_vec(), dim);
    let proj_h = Projector::new(ambient.simple_roots().to_vec(), dim);

    let residuals: Vec<Weight> =
        ambient.simple_roots().iter().map(|s| &(s - &proj_a.project(s)) - &proj_perp.project(s)).collect();
    let h_perp_basis: Vec<Weight> = independent_subset(&residuals).into_iter().map(|i| residuals[i].clone()).collect();
    let proj_h_perp = Projector::new(h_perp_basis.clone(), dim);

    let rho = ambient.rho();
    let defect_a = a_system.rho() - &proj_a.project(rho);
    let defect_perp = perp_system.rho() - &proj_perp.project(rho);

    Ok(EmbeddingSpec {
        ambient: ambient.clone(),
        a_roots: a_roots.to_vec(),
        a_system,
        perp_system,
        h_perp_basis,
        defect_a,
        defect_perp,
        proj_a,
        proj_perp,
        proj_h,
        proj_h_perp,
    })
}

/// Root coordinates of every nonempty subset of simple roots, followed by the
/// `A1` on the highest root when that is not already a simple root.
pub fn standard_embeddings(ambient: &RootDatum) -> Vec<Vec<Vec<i64>>> {
    let r = ambient.rank();
    let unit = |i: usize| (0..r).map(|j| i64::from(i == j)).collect::<Vec<i64>>();
    let mut out: Vec<Vec<Vec<i64>>> =
        (1u32..(1 << r)).map(|mask| (0..r).filter(|i| mask & (1 << i) != 0).map(unit).collect()).collect();
    let theta = ambient.highest_root().coeffs.clone();
    if theta.iter().sum::<i64>() > 1 {
        out.push(vec![theta]);
    }
    out
}

impl EmbeddingSpec {
    pub fn ambient(&self) -> &RootDatum {
        &self.ambient
    }

    pub fn descriptor(&self) -> EmbeddingDescriptor {
        EmbeddingDescriptor { ambient: self.ambient.id, a_roots: self.a_roots.clone() }
    }

    pub fn a_roots(&self) -> &[Vec<i64>] {
        &self.a_roots
    }

    /// Root system of the subalgebra `a`.
    pub fn a_system(&self) -> &RootSystem {
        &self.a_system
    }

    /// Root system of the orthogonal partner `a_perp`.
    pub fn perp_system(&self) -> &RootSystem {
        &self.perp_system
    }

    pub fn perp_roots(&self) -> impl Iterator<Item = &Weight> {
        self.perp_system.positive_roots().iter().map(|r| &r.vector)
    }

    pub fn h_perp_basis(&self) -> &[Weight] {
        &self.h_perp_basis
    }

    /// `D_a = rho_a - pi_a(rho)`
    pub fn defect_a(&self) -> &Weight {
        &self.defect_a
    }

    /// `D_perp = rho_perp - pi_perp(rho)`
    pub fn defect_perp(&self) -> &Weight {
        &self.defect_perp
    }

    pub fn project_a(&self, x: &Weight) -> Weight {
        self.proj_a.project(x)
    }

    pub fn project_perp(&self, x: &Weight) -> Weight {
        self.proj_perp.project(x)
    }

    pub fn project_h_perp(&self, x: &Weight) -> Weight {
        self.proj_h_perp.project(x)
    }

    /// Projection onto `h_a ⊕ h_perp`, the weight space of `a~ = a ⊕ h_perp`.
    pub fn project_a_tilde(&self, x: &Weight) -> Weight {
        &self.proj_h.project(x) - &self.proj_perp.project(x)
    }

    /// Coordinates of the `h_perp` component in [`Self::h_perp_basis`].
    pub fn h_perp_charge(&self, x: &Weight) -> Vec<Rational> {
        self.proj_h_perp.coefficients(x)
    }

    /// True when `a = g`, so that `a_perp = 0` and `h_perp = 0`.
    pub fn is_whole_algebra(&self) -> bool {
        self.a_system.positive_roots().len() == self.ambient.positive_roots().len()
    }

    /// `W_perp` as elements of the ambient Weyl group.
    pub fn orthogonal_weyl_subgroup(&self) -> Result<Vec<WeylElement>> {
        let ambient_group = self.ambient.weyl_group()?;
        let perp_group = self.perp_system.weyl_group()?;
        let rho = self.ambient.rho();
        Ok((0..perp_group.order())
            .map(|i| {
                let image = perp_group.act_by_index(i, rho);
                let idx = ambient_group.index_of_rho_image(&image).expect("reflections in roots of g lie in W");
                ambient_group.element(idx).clone()
            })
            .collect())
    }

    /// Grading used to order weights of `a~`: pairing with the projection of
    /// the ambient `rho_check`.
    pub fn a_tilde_grading(&self) -> Weight {
        self.project_a_tilde(self.ambient.rho_check())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn spec(alg: &str, roots: &[&[i64]]) -> EmbeddingSpec {
        let d = build_root_datum(alg.parse().unwrap()).unwrap();
        build_embedding(&d, &roots.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn b2_short_root_a1_embedding() {
        let s = spec("B2", &[&[1, 2]]);
        let perp: Vec<&Weight> = s.perp_roots().collect();
        assert_eq!(perp, vec![&Weight::from_ints(&[1, -1])]);
        assert!(s.h_perp_basis().is_empty());
        let beta = Weight::from_ints(&[1, 1]);
        assert_eq!(*s.defect_a(), beta.scale(q(-1, 2)));
        assert!(s.defect_perp().is_zero());
        let e1 = Weight::from_ints(&[1, 0]);
        assert_eq!(s.project_a(&e1), Weight::new(vec![q(1, 2), q(1, 2)]));
        assert_eq!(s.project_perp(&e1), Weight::new(vec![q(1, 2), q(-1, 2)]));
        assert_eq!(s.orthogonal_weyl_subgroup().unwrap().len(), 2);
    }

    #[test]
    fn simple_root_subalgebras_have_no_defect() {
        for (alg, roots) in
            [("B2", vec![vec![1, 0]]), ("B3", vec![vec![0, 1, 0], vec![0, 0, 1]]), ("G2", vec![vec![0, 1]])]
        {
            let d = build_root_datum(alg.parse().unwrap()).unwrap();
            let s = build_embedding(&d, &roots).unwrap();
            assert!(s.defect_a().is_zero(), "{alg}");
        }
    }

    #[test]
    fn splitting_dimensions_add_up() {
        for (alg, roots) in [
            ("B2", vec![vec![1, 0]]),
            ("A3", vec![vec![1, 0, 0]]),
            ("A3", vec![vec![0, 1, 0]]),
            ("B3", vec![vec![1, 0, 0]]),
            ("C3", vec![vec![1, 2, 1]]),
            ("A2", vec![vec![1, 0], vec![0, 1]]),
        ] {
            let d = build_root_datum(alg.parse().unwrap()).unwrap();
            let s = build_embedding(&d, &roots).unwrap();
            assert_eq!(s.a_system().rank() + s.perp_system().rank() + s.h_perp_basis().len(), d.rank());
            for x in d.fundamental_weights().iter().chain(d.positive_roots().iter().map(|r| &r.vector)) {
                let sum = &(&s.project_a(x) + &s.project_perp(x)) + &s.project_h_perp(x);
                assert_eq!(sum, *x);
                assert!(s.project_a(&s.project_perp(x)).is_zero());
                assert_eq!(s.project_a(&s.project_a(x)), s.project_a(x));
            }
        }
    }

    #[test]
    fn b3_perp_of_type_a1_a1() {
        // a = A1 on e2: roots orthogonal to e2 are e1 - e3, e1 + e3, e1, e3; keep the A1 x A1 part.
        let s = spec("B3", &[&[0, 1, 0]]);
        // a = e2 - e3, perp = {e1, e2 + e3}
        assert_eq!(s.perp_system().rank(), 2);
        assert_eq!(s.orthogonal_weyl_subgroup().unwrap().len(), 4);
    }

    #[test]
    fn trivial_perp_gives_trivial_subgroup() {
        let s = spec("A2", &[&[1, 0], &[0, 1]]);
        assert!(s.is_whole_algebra());
        let sub = s.orthogonal_weyl_subgroup().unwrap();
        assert_eq!(sub, vec![WeylElement::identity()]);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let d = build_root_datum("B2".parse().unwrap()).unwrap();
        assert!(matches!(build_embedding(&d, &[vec![2, 1]]), Err(Error::NotPositiveRoot(_))));
        // a1 and a1 + a2 have a positive Cartan integer
        assert!(matches!(build_embedding(&d, &[vec![1, 0], vec![1, 1]]), Err(Error::InvalidSimpleSystem(_))));
        assert!(build_embedding(&d, &[vec![1, 0, 0]]).is_err());
        assert!(build_embedding(&d, &[vec![1, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn descriptor_json() {
        let desc = EmbeddingDescriptor::from_json(r#"{"ambient": "B2", "a_roots": [[1, 2]]}"#).unwrap();
        assert_eq!(desc.a_roots, vec![vec![1, 2]]);
        let s = desc.build().unwrap();
        assert_eq!(s.descriptor(), desc);
        assert!(s.defect_perp().coords().iter().all(|c| c.is_zero()));
    }
}
