//! Finite integer combinations of formal exponentials `e^ξ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::rootspace::RootSystem;
use crate::weight::Weight;

/// `Σ c_ξ e^ξ` with no zero coefficients stored. Terms iterate in
/// lexicographic order of the weights.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FormalElement {
    #[serde(with = "crate::weight::weight_map")]
    terms: BTreeMap<Weight, i64>,
}

impl FormalElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(weight: Weight, coefficient: i64) -> Self {
        let mut f = Self::new();
        f.add_term(weight, coefficient);
        f
    }

    /// `e^0` in an ambient space of dimension `dim`.
    pub fn one(dim: usize) -> Self {
        Self::monomial(Weight::zero(dim), 1)
    }

    pub fn add_term(&mut self, weight: Weight, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.terms.entry(weight);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, weight: &Weight) -> i64 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn as_map(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::new();
        }
        Self { terms: self.terms.iter().map(|(w, &c)| (w.clone(), c * k)).collect() }
    }

    /// Multiply by `e^shift`.
    pub fn shift(&self, shift: &Weight) -> Self {
        Self { terms: self.terms.iter().map(|(w, &c)| (w + shift, c)).collect() }
    }

    /// Push every exponent through `f`, merging collisions.
    pub fn map_weights(&self, mut f: impl FnMut(&Weight) -> Weight) -> Self {
        let mut out = Self::new();
        for (w, &c) in &self.terms {
            out.add_term(f(w), c);
        }
        out
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Weight, i64) -> bool) {
        self.terms.retain(|w, c| keep(w, *c));
    }

    pub fn filtered(&self, mut keep: impl FnMut(&Weight) -> bool) -> Self {
        Self { terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, &c)| (w.clone(), c)).collect() }
    }

    /// Terms `e^ξ` with `top - ξ` a non-negative integer combination of simple
    /// roots of `d` of height at most `depth`.
    pub fn below(&self, d: &RootSystem, top: &Weight, depth: u32) -> Self {
        self.filtered(|w| {
            d.integer_root_coordinates(&(top - w))
                .is_some_and(|q| q.iter().all(|&c| c >= 0) && q.iter().sum::<i64>() <= depth as i64)
        })
    }

    /// Sum of all coefficients (the dimension, for a character).
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn pow(&self, n: u32, dim: usize) -> Self {
        (0..n).fold(Self::one(dim), |acc, _| &acc * self)
    }
}

impl FromIterator<(Weight, i64)> for FormalElement {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut f = Self::new();
        for (w, c) in iter {
            f.add_term(w, c);
        }
        f
    }
}

impl Add for &FormalElement {
    type Output = FormalElement;
    fn add(self, rhs: &FormalElement) -> FormalElement {
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &FormalElement {
    type Output = FormalElement;
    fn sub(self, rhs: &FormalElement) -> FormalElement {
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &FormalElement {
    type Output = FormalElement;
    fn neg(self) -> FormalElement {
        self.scale(-1)
    }
}

impl Mul for &FormalElement {
    type Output = FormalElement;
    fn mul(self, rhs: &FormalElement) -> FormalElement {
        let mut out = FormalElement::new();
        for (a, &x) in &self.terms {
            for (b, &y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Debug for FormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "e^{w}")?;
        }
        Ok(())
    }
}
