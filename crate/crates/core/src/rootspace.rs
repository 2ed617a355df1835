//! Root systems of finite-dimensional simple Lie algebras, and of the
//! reductive subsystems cut out of them, in exact rational arithmetic.
//!
//! Every root system lives in an ambient orthogonal e-basis. The invariant
//! form is a rational multiple of the Euclidean dot product, normalized so
//! that long roots of the simple algebra have squared length 2.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::weight::{invert, Matrix, Rational, Weight};
use crate::weyl::WeylGroup;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// Series letter plus rank, written `B2`, `A3`, `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId {
    pub series: Series,
    pub rank: usize,
}

impl AlgebraId {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok || rank > 8 {
            return Err(Error::InvalidAlgebra(format!("{series:?}{rank}")));
        }
        Ok(AlgebraId { series, rank })
    }

    /// Order of the Weyl group from the classical tables.
    pub fn weyl_group_order(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        let r = self.rank;
        match self.series {
            Series::A => fact(r + 1),
            Series::B | Series::C => (1u64 << r) * fact(r),
            Series::D => (1u64 << (r - 1)) * fact(r),
            Series::E => match r {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1_152,
            Series::G => 12,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let r = self.rank;
        match self.series {
            Series::A => r * (r + 1) / 2,
            Series::B | Series::C => r * r,
            Series::D => r * (r - 1),
            Series::E => match r {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for AlgebraId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::InvalidAlgebra(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidAlgebra(s.to_string()))?;
        AlgebraId::new(series, rank)
    }
}

impl Serialize for AlgebraId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlgebraId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The invariant bilinear form: `scale` times the ambient dot product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Form {
    pub scale: Rational,
}

impl Form {
    pub fn pair(&self, x: &Weight, y: &Weight) -> Rational {
        self.scale * x.dot(y)
    }
}

/// A positive root together with its simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub vector: Weight,
    pub coeffs: Vec<i64>,
    /// Always 1 for finite root systems.
    pub multiplicity: u32,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// A finite (possibly reducible, possibly empty) root system inside the
/// ambient space, determined by its simple roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    form: Form,
    ambient_dim: usize,
    simple_roots: Vec<Weight>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    root_index: HashMap<Weight, usize>,
    rho: Weight,
    rho_check: Weight,
    fundamental_weights: Vec<Weight>,
    gram_inv: Matrix,
    weyl: OnceLock<Arc<WeylGroup>>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.form == other.form && self.ambient_dim == other.ambient_dim && self.simple_roots == other.simple_roots
    }
}

impl RootSystem {
    /// Builds the system generated by `simple_roots`, closing the positive
    /// roots under root strings until stable.
    pub fn from_simple_roots(form: Form, ambient_dim: usize, simple_roots: Vec<Weight>) -> Result<Self> {
        let r = simple_roots.len();
        if simple_roots.iter().any(|a| a.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: simple_roots.iter().map(Weight::dim).find(|&d| d != ambient_dim).unwrap_or(0),
            });
        }
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let c = Rational::from_integer(2) * simple_roots[i].dot(&simple_roots[j])
                    / simple_roots[j].dot(&simple_roots[j]);
                if !c.is_integer() || (i != j && c.is_positive()) {
                    return Err(Error::InvalidSimpleSystem(format!(
                        "Cartan integer <a{i}, a{j}^v> = {c} is not a non-positive integer"
                    )));
                }
                cartan[i][j] = c.to_integer();
            }
        }
        let gram: Matrix = simple_roots.iter().map(|a| simple_roots.iter().map(|b| a.dot(b)).collect()).collect();
        let gram_inv =
            invert(&gram).ok_or_else(|| Error::InvalidSimpleSystem("simple roots are linearly dependent".into()))?;

        let coeff_roots = close_positive_roots(&cartan);
        let positive_roots: Vec<Root> = coeff_roots
            .into_iter()
            .map(|coeffs| {
                let mut v = Weight::zero(ambient_dim);
                for (c, a) in coeffs.iter().zip(&simple_roots) {
                    if *c != 0 {
                        v = v.add_scaled(Rational::from_integer(*c), a);
                    }
                }
                Root { vector: v, coeffs, multiplicity: 1 }
            })
            .collect();
        let root_index = positive_roots.iter().enumerate().map(|(i, root)| (root.vector.clone(), i)).collect();

        let mut rho = Weight::zero(ambient_dim);
        for root in &positive_roots {
            rho += &root.vector;
        }
        let rho = rho.scale(Rational::new(1, 2));

        // rho_check pairs to 1 with every simple root under the form.
        let ones: Vec<Rational> = vec![Rational::one(); r];
        let mut rho_check = Weight::zero(ambient_dim);
        for (k, a) in simple_roots.iter().enumerate() {
            let c: Rational = gram_inv[k].iter().zip(&ones).map(|(x, y)| x * y).sum::<Rational>() / form.scale;
            rho_check = rho_check.add_scaled(c, a);
        }

        let cartan_q: Matrix =
            cartan.iter().map(|row| row.iter().map(|&c| Rational::from_integer(c)).collect()).collect();
        let fundamental_weights = match invert(&cartan_q) {
            Some(cinv) => cinv
                .iter()
                .map(|row| {
                    row.iter().zip(&simple_roots).fold(Weight::zero(ambient_dim), |acc, (c, a)| acc.add_scaled(*c, a))
                })
                .collect(),
            None => Vec::new(),
        };

        Ok(RootSystem {
            form,
            ambient_dim,
            simple_roots,
            cartan,
            positive_roots,
            root_index,
            rho,
            rho_check,
            fundamental_weights,
            gram_inv,
            weyl: OnceLock::new(),
        })
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// The vector pairing to 1 with every simple root; `<x, rho_check>` is
    /// the height of `x` for elements of the root lattice.
    pub fn rho_check(&self) -> &Weight {
        &self.rho_check
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.ambient_dim)
    }

    pub fn pair(&self, x: &Weight, y: &Weight) -> Rational {
        self.form.pair(x, y)
    }

    /// `<x, a_i^v> = 2<x, a_i>/<a_i, a_i>`.
    pub fn coroot_pairing(&self, x: &Weight, i: usize) -> Rational {
        let a = &self.simple_roots[i];
        Rational::from_integer(2) * x.dot(a) / a.dot(a)
    }

    pub fn coroot_pairing_with(&self, x: &Weight, root: &Weight) -> Rational {
        Rational::from_integer(2) * x.dot(root) / root.dot(root)
    }

    pub fn dynkin_labels(&self, x: &Weight) -> Vec<Rational> {
        (0..self.rank()).map(|i| self.coroot_pairing(x, i)).collect()
    }

    /// Closed fundamental chamber membership.
    pub fn is_dominant(&self, x: &Weight) -> bool {
        (0..self.rank()).all(|i| !self.coroot_pairing(x, i).is_negative())
    }

    pub fn is_strictly_dominant(&self, x: &Weight) -> bool {
        (0..self.rank()).all(|i| self.coroot_pairing(x, i).is_positive())
    }

    /// Coordinates of the projection of `x` on the root span, in the basis
    /// of simple roots.
    pub fn root_coordinates(&self, x: &Weight) -> Vec<Rational> {
        let rhs: Vec<Rational> = self.simple_roots.iter().map(|a| x.dot(a)).collect();
        self.gram_inv.iter().map(|row| row.iter().zip(&rhs).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect()
    }

    pub fn from_root_coordinates(&self, coeffs: &[Rational]) -> Weight {
        coeffs
            .iter()
            .zip(&self.simple_roots)
            .fold(self.zero(), |acc, (c, a)| if c.is_zero() { acc } else { acc.add_scaled(*c, a) })
    }

    pub fn from_integer_root_coordinates(&self, coeffs: &[i64]) -> Weight {
        coeffs.iter().zip(&self.simple_roots).fold(self.zero(), |acc, (c, a)| {
            if *c == 0 {
                acc
            } else {
                acc.add_scaled(Rational::from_integer(*c), a)
            }
        })
    }

    /// Integer simple-root coordinates, when `x` lies in the root lattice.
    pub fn integer_root_coordinates(&self, x: &Weight) -> Option<Vec<i64>> {
        let coords = self.root_coordinates(x);
        if self.from_root_coordinates(&coords) != *x {
            return None;
        }
        coords.into_iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn from_dynkin_labels(&self, labels: &[i64]) -> Result<Weight> {
        if labels.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: labels.len() });
        }
        Ok(labels
            .iter()
            .zip(&self.fundamental_weights)
            .fold(self.zero(), |acc, (l, w)| acc.add_scaled(Rational::from_integer(*l), w)))
    }

    /// True when `x` lies in the span of the roots and has integral labels.
    pub fn is_integral(&self, x: &Weight) -> bool {
        let labels = self.dynkin_labels(x);
        if !labels.iter().all(|l| l.is_integer()) {
            return false;
        }
        let ints: Vec<i64> = labels.iter().map(|l| l.to_integer()).collect();
        self.from_dynkin_labels(&ints).map(|w| w == *x).unwrap_or(false)
    }

    pub fn check_dominant_integral(&self, x: &Weight) -> Result<()> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: x.dim() });
        }
        if !self.is_integral(x) || !self.is_dominant(x) {
            return Err(Error::NotDominantIntegral(x.clone()));
        }
        Ok(())
    }

    /// Index of `v` among the positive roots.
    pub fn positive_root_index(&self, v: &Weight) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    pub fn is_root(&self, v: &Weight) -> bool {
        self.root_index.contains_key(v) || self.root_index.contains_key(&-v)
    }

    /// `<x, rho_check>`: the height of lattice elements, extended linearly.
    pub fn height(&self, x: &Weight) -> Rational {
        self.form.pair(x, &self.rho_check)
    }

    /// The Weyl group, enumerated once and shared.
    pub fn weyl_group(&self) -> Result<Arc<WeylGroup>> {
        if let Some(w) = self.weyl.get() {
            return Ok(w.clone());
        }
        let group = Arc::new(WeylGroup::enumerate(self)?);
        Ok(self.weyl.get_or_init(|| group).clone())
    }
}

/// Positive roots in simple-root coordinates, ordered by height, obtained by
/// extending root strings: `b + a_i` is a root iff `p - <b, a_i^v> > 0`.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; r];
        v[i] = 1;
        v
    };
    let mut roots: Vec<Vec<i64>> = (0..r).map(unit).collect();
    let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for root in &layer {
            for i in 0..r {
                let mut p = 0i64;
                loop {
                    let mut t = root.clone();
                    t[i] -= p + 1;
                    if seen.contains(&t) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| root[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut n = root.clone();
                    n[i] += 1;
                    if seen.insert(n.clone()) {
                        next.push(n);
                    }
                }
            }
        }
        next.sort();
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

/// All Dynkin label vectors of length `rank` with entries in `0..=max_label`,
/// in lexicographic order.
pub fn label_grid(rank: usize, max_label: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max_label).map(move |l| {
                    let mut w = v.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// Root datum of a simple Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct RootDatum {
    pub id: AlgebraId,
    system: RootSystem,
}

impl Deref for RootDatum {
    type Target = RootSystem;
    fn deref(&self) -> &RootSystem {
        &self.system
    }
}

impl RootDatum {
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn highest_root(&self) -> &Root {
        self.system.positive_roots().iter().max_by_key(|r| r.height()).expect("simple algebras have roots")
    }
}

fn e(dim: usize, i: usize) -> Weight {
    let mut v = vec![0i64; dim];
    v[i] = 1;
    Weight::from_ints(&v)
}

fn half(coords: &[i64]) -> Weight {
    Weight::new(coords.iter().map(|&c| Rational::new(c, 2)).collect())
}

/// Standard simple roots: `A_r` in the zero-sum hyperplane of `R^{r+1}`,
/// `G2` in that of `R^3`, `E6`/`E7` inside the `E8` lattice of `R^8`.
fn standard_simple_roots(id: AlgebraId) -> (Form, usize, Vec<Weight>) {
    let r = id.rank;
    let unit = Form { scale: Rational::one() };
    let diff = |dim: usize, i: usize| &e(dim, i) - &e(dim, i + 1);
    match id.series {
        Series::A => (unit, r + 1, (0..r).map(|i| diff(r + 1, i)).collect()),
        Series::B => {
            let mut s: Vec<Weight> = (0..r - 1).map(|i| diff(r, i)).collect();
            s.push(e(r, r - 1));
            (unit, r, s)
        }
        Series::C => {
            let mut s: Vec<Weight> = (0..r - 1).map(|i| diff(r, i)).collect();
            s.push(e(r, r - 1).scale_int(2));
            (Form { scale: Rational::new(1, 2) }, r, s)
        }
        Series::D => {
            let mut s: Vec<Weight> = (0..r - 1).map(|i| diff(r, i)).collect();
            s.push(&e(r, r - 2) + &e(r, r - 1));
            (unit, r, s)
        }
        Series::E => {
            let mut s = vec![half(&[1, -1, -1, -1, -1, -1, -1, 1]), &e(8, 0) + &e(8, 1)];
            for i in 0..6 {
                s.push(&e(8, i + 1) - &e(8, i));
            }
            s.truncate(r);
            (unit, 8, s)
        }
        Series::F => (unit, 4, vec![diff(4, 1), diff(4, 2), e(4, 3), half(&[1, -1, -1, -1])]),
        Series::G => (Form { scale: Rational::new(1, 3) }, 3, vec![diff(3, 0), Weight::from_ints(&[-2, 1, 1])]),
    }
}

pub fn build_root_datum(id: AlgebraId) -> Result<RootDatum> {
    let id = AlgebraId::new(id.series, id.rank)?;
    let (form, dim, simple) = standard_simple_roots(id);
    let system = RootSystem::from_simple_roots(form, dim, simple)?;
    debug_assert_eq!(system.positive_roots().len(), id.positive_root_count());
    Ok(RootDatum { id, system })
}

pub fn inner_product(d: &RootSystem, x: &Weight, y: &Weight) -> Result<Rational> {
    for w in [x, y] {
        if w.dim() != d.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: d.ambient_dim(), found: w.dim() });
        }
    }
    Ok(d.pair(x, y))
}
