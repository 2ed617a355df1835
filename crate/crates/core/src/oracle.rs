//! Brute-force ground truth, independent of the singular-element machinery:
//! Freudenthal multiplicities, the Weyl dimension formula, branching by
//! projecting and peeling weight diagrams, and characters by formal division.
//!
//! Only the root-system and Weyl-group layers are shared with the main path.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::embedding::EmbeddingSpec;
use crate::formal::FormalElement;
use crate::rootspace::RootSystem;
use crate::weight::{weight_map, Rational, Weight};
use crate::weyl::to_dominant;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDiagram {
    pub hw: Weight,
    #[serde(with = "weight_map")]
    pub multiplicities: BTreeMap<Weight, u64>,
}

impl WeightDiagram {
    pub fn dimension(&self) -> u64 {
        self.multiplicities.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.multiplicities.get(w).copied().unwrap_or(0)
    }

    pub fn to_formal(&self) -> FormalElement {
        self.multiplicities.iter().map(|(w, &m)| (w.clone(), m as i64)).collect()
    }
}

/// `μ - λ` in simple-root coordinates when it is a non-negative integer
/// combination.
fn depth_below(d: &RootSystem, top: &Weight, x: &Weight) -> Option<i64> {
    let q = d.integer_root_coordinates(&(top - x))?;
    q.iter().all(|&c| c >= 0).then(|| q.iter().sum())
}

/// Freudenthal's recursion on dominant weights, spread over Weyl orbits.
pub fn freudenthal(d: &RootSystem, mu: &Weight) -> Result<WeightDiagram> {
    d.check_dominant_integral(mu)?;
    // all weights whose dominant representative lies below mu, reached from
    // mu by subtracting simple roots
    let in_diagram = |x: &Weight| depth_below(d, mu, &to_dominant(d, x).0).is_some();
    let mut weights: HashSet<Weight> = HashSet::from([mu.clone()]);
    let mut queue = VecDeque::from([mu.clone()]);
    while let Some(x) = queue.pop_front() {
        for a in d.simple_roots() {
            let y = &x - a;
            if !weights.contains(&y) && in_diagram(&y) {
                weights.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut dominant: Vec<(i64, Weight)> = weights
        .iter()
        .filter(|w| d.is_dominant(w))
        .map(|w| (depth_below(d, mu, w).expect("dominant weights lie below mu"), w.clone()))
        .collect();
    dominant.sort();

    let shifted_mu = mu + d.rho();
    let norm_top = d.pair(&shifted_mu, &shifted_mu);
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    let lookup = |mult: &HashMap<Weight, u64>, x: &Weight| -> u64 {
        if !weights.contains(x) {
            return 0;
        }
        mult.get(&to_dominant(d, x).0).copied().unwrap_or(0)
    };
    for (depth, lambda) in &dominant {
        if *depth == 0 {
            mult.insert(lambda.clone(), 1);
            continue;
        }
        let mut sum = Rational::zero();
        for root in d.positive_roots() {
            let alpha = &root.vector;
            let mut x = lambda + alpha;
            loop {
                let m = lookup(&mult, &x);
                if m == 0 && !weights.contains(&x) {
                    break;
                }
                sum += Rational::from_integer(m as i64) * d.pair(&x, alpha);
                x = &x + alpha;
            }
        }
        let shifted = lambda + d.rho();
        let denom = norm_top - d.pair(&shifted, &shifted);
        let value = Rational::from_integer(2) * sum / denom;
        if !value.is_integer() || value.is_negative() {
            return Err(Error::NonIntegralDimension);
        }
        mult.insert(lambda.clone(), value.to_integer() as u64);
    }
    let multiplicities = weights.iter().map(|w| (w.clone(), lookup(&mult, w))).filter(|(_, m)| *m > 0).collect();
    Ok(WeightDiagram { hw: mu.clone(), multiplicities })
}

/// `Π_{α>0} <μ+ρ, α^v> / <ρ, α^v>`
pub fn weyl_dimension(d: &RootSystem, mu: &Weight) -> Result<u64> {
    d.check_dominant_integral(mu)?;
    let shifted = mu + d.rho();
    let big = |r: Rational| BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    let value = d.positive_roots().iter().fold(BigRational::one(), |acc, root| {
        acc * big(d.coroot_pairing_with(&shifted, &root.vector)) / big(d.coroot_pairing_with(d.rho(), &root.vector))
    });
    if !value.is_integer() {
        return Err(Error::NonIntegralDimension);
    }
    value.to_integer().to_u64().ok_or(Error::NonIntegralDimension)
}

/// Orthogonal projection onto `span(vectors)` via Gram-Schmidt.
struct Orthogonal {
    basis: Vec<Weight>,
}

impl Orthogonal {
    fn new(vectors: &[Weight]) -> Self {
        let mut basis: Vec<Weight> = Vec::new();
        for v in vectors {
            let mut r = v.clone();
            for b in &basis {
                r = r.add_scaled(-(v.dot(b) / b.dot(b)), b);
            }
            if !r.is_zero() {
                basis.push(r);
            }
        }
        Self { basis }
    }

    fn project(&self, x: &Weight) -> Weight {
        self.basis.iter().fold(Weight::zero(x.dim()), |acc, b| acc.add_scaled(x.dot(b) / b.dot(b), b))
    }
}

/// Project every weight of `L^μ` to `ã` and peel off irreducible
/// `ã`-characters from the top.
pub fn brute_force_branch(spec: &EmbeddingSpec, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let ambient = spec.ambient();
    let diagram = freudenthal(ambient, mu)?;
    let perp_roots: Vec<Weight> = spec.perp_roots().cloned().collect();
    let perp = Orthogonal::new(&perp_roots);
    let a = spec.a_system();
    let a_span = Orthogonal::new(a.simple_roots());

    let mut remaining: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, &m) in &diagram.multiplicities {
        *remaining.entry(w - &perp.project(w)).or_default() += m as i64;
    }
    let rho_a = a.rho().clone();
    let mut characters: HashMap<Weight, WeightDiagram> = HashMap::new();
    let mut b = BTreeMap::new();
    loop {
        remaining.retain(|_, m| *m != 0);
        let Some((nu, count)) = remaining
            .iter()
            .max_by(|x, y| x.0.dot(&rho_a).cmp(&y.0.dot(&rho_a)).then_with(|| x.0.cmp(y.0)))
            .map(|(w, &m)| (w.clone(), m))
        else {
            break;
        };
        if count < 0 {
            return Err(Error::NegativeMultiplicity(nu));
        }
        let core = a_span.project(&nu);
        let offset = &nu - &core;
        if !characters.contains_key(&core) {
            characters.insert(core.clone(), freudenthal(a, &core)?);
        }
        for (w, &m) in &characters[&core].multiplicities {
            let slot = remaining.entry(w + &offset).or_default();
            *slot -= count * m as i64;
            if *slot < 0 {
                return Err(Error::NegativeMultiplicity(w + &offset));
            }
        }
        b.insert(nu, count as u64);
    }
    Ok(b)
}

/// `ch L^μ = Ψ^μ / Ψ^0` by long division in the offsets `μ - ξ`, on the
/// window of offsets of height at most `depth`.
pub fn character_by_division(d: &RootSystem, mu: &Weight, depth: u32) -> Result<FormalElement> {
    d.check_dominant_integral(mu)?;
    let group = d.weyl_group()?;
    let rank = d.rank();
    let offsets = |lambda: &Weight| -> Result<HashMap<Vec<i64>, i64>> {
        let shifted = lambda + d.rho();
        let mut out = HashMap::new();
        for i in 0..group.order() {
            let x = group.act_by_index(i, &shifted);
            let q = d.integer_root_coordinates(&(&shifted - &x)).ok_or(Error::DivisionInconsistency)?;
            *out.entry(q).or_insert(0) += group.sign(i);
        }
        Ok(out)
    };
    let numerator = offsets(mu)?;
    let denominator: Vec<(Vec<i64>, i64)> =
        offsets(&d.zero())?.into_iter().filter(|(q, _)| q.iter().any(|&c| c != 0)).collect();

    // offsets by increasing height
    let mut layer: Vec<Vec<i64>> = vec![vec![0; rank]];
    let mut order: Vec<Vec<i64>> = layer.clone();
    for _ in 0..depth {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for q in &layer {
            for k in 0..rank {
                let mut p = q.clone();
                p[k] += 1;
                next.push(p);
            }
        }
        next.sort();
        next.dedup();
        order.extend(next.iter().cloned());
        layer = next;
    }
    let lowest = -&to_dominant(d, &-mu).0;
    let span = depth_below(d, mu, &lowest).expect("lowest weight lies below mu");

    let mut c: HashMap<Vec<i64>, i64> = HashMap::new();
    for q in &order {
        let mut value = numerator.get(q).copied().unwrap_or(0);
        for (p, s) in &denominator {
            let r: Vec<i64> = q.iter().zip(p).map(|(a, b)| a - b).collect();
            if let Some(v) = c.get(&r) {
                value -= s * v;
            }
        }
        let height: i64 = q.iter().sum();
        if value < 0 || (value != 0 && height > span) {
            return Err(Error::DivisionInconsistency);
        }
        if value != 0 {
            c.insert(q.clone(), value);
        }
    }
    Ok(c.into_iter().map(|(q, v)| (mu - &d.from_integer_root_coordinates(&q), v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::build_embedding;
    use crate::rootspace::build_root_datum;

    fn datum(s: &str) -> crate::RootDatum {
        build_root_datum(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_strings() {
        let d = datum("A1");
        for m in 0..6 {
            let mu = d.from_dynkin_labels(&[m]).unwrap();
            let diag = freudenthal(&d, &mu).unwrap();
            assert_eq!(diag.multiplicities.len(), m as usize + 1);
            assert!(diag.multiplicities.values().all(|&x| x == 1));
            assert_eq!(weyl_dimension(&d, &mu).unwrap(), m as u64 + 1);
        }
    }

    #[test]
    fn b2_small_modules() {
        let d = datum("B2");
        let diag = freudenthal(&d, &d.fundamental_weights()[0]).unwrap();
        let expected: BTreeMap<Weight, u64> =
            [[1, 0], [-1, 0], [0, 1], [0, -1], [0, 0]].iter().map(|c| (Weight::from_ints(c), 1)).collect();
        assert_eq!(diag.multiplicities, expected);
        let mu = d.from_dynkin_labels(&[1, 1]).unwrap();
        assert_eq!(freudenthal(&d, &mu).unwrap().dimension(), 16);
        assert_eq!(weyl_dimension(&d, &mu).unwrap(), 16);
        assert_eq!(weyl_dimension(&d, &d.fundamental_weights()[1]).unwrap(), 4);
        assert_eq!(weyl_dimension(&d, &d.zero()).unwrap(), 1);
    }

    #[test]
    fn g2_and_a2_adjoint() {
        let g2 = datum("G2");
        assert_eq!(weyl_dimension(&g2, &g2.fundamental_weights()[0]).unwrap(), 7);
        let a2 = datum("A2");
        let adj = a2.from_dynkin_labels(&[1, 1]).unwrap();
        let diag = freudenthal(&a2, &adj).unwrap();
        assert_eq!(diag.dimension(), 8);
        assert_eq!(diag.multiplicity(&a2.zero()), 2);
        assert_eq!(character_by_division(&a2, &adj, 6).unwrap(), diag.to_formal());
    }

    #[test]
    fn diagrams_are_weyl_invariant() {
        for alg in ["A3", "B3", "C3", "G2"] {
            let d = datum(alg);
            let labels: Vec<i64> = (0..d.rank()).map(|i| (i % 2) as i64 + 1).collect();
            let mu = d.from_dynkin_labels(&labels).unwrap();
            let diag = freudenthal(&d, &mu).unwrap();
            assert_eq!(diag.dimension(), weyl_dimension(&d, &mu).unwrap(), "{alg}");
            for (w, &m) in &diag.multiplicities {
                for i in 0..d.rank() {
                    assert_eq!(diag.multiplicity(&crate::weyl::reflect(&d, i, w)), m);
                }
            }
        }
    }

    #[test]
    fn division_matches_freudenthal() {
        let d = datum("B2");
        let w1 = d.fundamental_weights()[0].clone();
        let full = freudenthal(&d, &w1).unwrap().to_formal();
        assert_eq!(character_by_division(&d, &w1, 6).unwrap(), full);
        assert_eq!(character_by_division(&d, &d.zero(), 4).unwrap(), FormalElement::one(2));
        let partial = character_by_division(&d, &w1, 1).unwrap();
        assert_eq!(partial.len(), 2);
    }

    #[test]
    fn b2_short_root_a1_brute_force() {
        let d = datum("B2");
        let spec = build_embedding(&d, &[vec![1, 2]]).unwrap();
        let beta_half = Weight::new(vec![Rational::new(1, 2), Rational::new(1, 2)]);
        let b = brute_force_branch(&spec, &d.fundamental_weights()[0]).unwrap();
        assert_eq!(b, BTreeMap::from([(beta_half.clone(), 2), (d.zero(), 1)]));
        let b = brute_force_branch(&spec, &d.fundamental_weights()[1]).unwrap();
        assert_eq!(b, BTreeMap::from([(beta_half, 1), (d.zero(), 2)]));
        let whole = build_embedding(&d, &[vec![1, 0], vec![0, 1]]).unwrap();
        let mu = d.from_dynkin_labels(&[1, 2]).unwrap();
        assert_eq!(brute_force_branch(&whole, &mu).unwrap(), BTreeMap::from([(mu, 1)]));
    }
}
