//! Exact rational weights in the ambient orthogonal basis, plus the handful
//! of dense linear-algebra routines the root machinery needs.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = Rational64;

/// A vector of `h*` written in the ambient e-basis.
///
/// Ordering is lexicographic on coordinates, which is what every serialized
/// map in this crate is sorted by.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: Rational) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn scale_int(&self, k: i64) -> Weight {
        self.scale(Rational::from_integer(k))
    }

    /// Euclidean dot product of the raw coordinates.
    pub fn dot(&self, other: &Weight) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `self + k * other`
    pub fn add_scaled(&self, k: Rational, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|c| *c.numer() as f64 / *c.denom() as f64).collect()
    }
}

impl Index<usize> for Weight {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl<'a> Add<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Weight> for &'a Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| format!("bad rational `{s}`"))?;
            let d: i64 = d.trim().parse().map_err(|_| format!("bad rational `{s}`"))?;
            if d == 0 {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rational::new(n, d))
        }
        None => s.parse::<i64>().map(Rational::from_integer).map_err(|_| format!("bad rational `{s}`")),
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Weight {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        inner.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>().map(Weight)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.0.iter().map(format_rational).collect();
        strs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(deserializer)?;
        strs.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `BTreeMap<Weight, T>`: JSON object keys must be strings,
/// so these maps travel as sorted `[weight, value]` pairs.
pub mod weight_map {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::Weight;

    pub fn serialize<T: Serialize, S: Serializer>(map: &BTreeMap<Weight, T>, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(&Weight, &T)> = map.iter().collect();
        pairs.serialize(serializer)
    }

    pub fn deserialize<'de, T: Deserialize<'de>, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<BTreeMap<Weight, T>, D::Error> {
        let pairs = Vec::<(Weight, T)>::deserialize(deserializer)?;
        Ok(pairs.into_iter().collect())
    }
}

/// Serde adapter for a single [`Rational`], written as a string like `"-1/2"`.
pub mod rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Rational>`, written as a list of strings.
pub mod rational_vec {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], serializer: S) -> Result<S::Ok, S::Error> {
        v.iter().map(format_rational).collect::<Vec<_>>().serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(deserializer)?
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub(crate) type Matrix = Vec<Vec<Rational>>;

/// Gauss-Jordan inverse; `None` when singular.
pub(crate) fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, v) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Indices of a maximal linearly independent prefix-greedy subset of `vectors`.
pub(crate) fn independent_subset(vectors: &[Weight]) -> Vec<usize> {
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut row = v.coords().to_vec();
        for (e, &p) in echelon.iter().zip(&pivots) {
            if !row[p].is_zero() {
                let f = row[p] / e[p];
                for (x, y) in row.iter_mut().zip(e) {
                    *x -= f * y;
                }
            }
        }
        if let Some(p) = row.iter().position(|x| !x.is_zero()) {
            echelon.push(row);
            pivots.push(p);
            chosen.push(idx);
        }
    }
    chosen
}

/// Orthogonal projection onto the span of a linearly independent family,
/// with respect to the ambient dot product.
#[derive(Clone, Debug, PartialEq)]
pub struct Projector {
    basis: Vec<Weight>,
    gram_inv: Matrix,
    dim: usize,
}

impl Projector {
    pub(crate) fn new(basis: Vec<Weight>, dim: usize) -> Self {
        let gram: Matrix = basis.iter().map(|a| basis.iter().map(|b| a.dot(b)).collect()).collect();
        let gram_inv = invert(&gram).expect("projector basis must be linearly independent");
        Projector { basis, gram_inv, dim }
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coefficients of the projection in the stored basis.
    pub fn coefficients(&self, x: &Weight) -> Vec<Rational> {
        let rhs: Vec<Rational> = self.basis.iter().map(|b| x.dot(b)).collect();
        self.gram_inv.iter().map(|row| row.iter().zip(&rhs).fold(Rational::zero(), |acc, (a, b)| acc + a * b)).collect()
    }

    pub fn project(&self, x: &Weight) -> Weight {
        let mut out = Weight::zero(self.dim);
        for (c, b) in self.coefficients(x).iter().zip(&self.basis) {
            if !c.is_zero() {
                out = out.add_scaled(*c, b);
            }
        }
        out
    }
}
