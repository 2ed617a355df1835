//! Finite Weyl groups: enumeration, action, lengths, orbits and dominant
//! representatives.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rootspace::RootSystem;
use crate::weight::{Rational, Weight};
use crate::{Error, Result};

/// Groups above this order are not enumerated.
pub const MAX_ENUMERATED_ORDER: usize = 100_000;

/// A Weyl group element as a reduced word in simple reflections.
///
/// The word `[i1, i2, ..., ik]` denotes `s_i1 s_i2 ... s_ik`, acting on
/// weights right to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Word length; equals the Coxeter length when the word is reduced.
    pub fn word_len(&self) -> usize {
        self.word.len()
    }

    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement { word: self.word.iter().rev().copied().collect() }
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend(&other.word);
        WeylElement { word }
    }
}

/// `s_i(x) = x - <x, a_i^v> a_i`
pub fn reflect(d: &RootSystem, i: usize, x: &Weight) -> Weight {
    let c = d.coroot_pairing(x, i);
    if c.is_zero() {
        x.clone()
    } else {
        x.add_scaled(-c, &d.simple_roots()[i])
    }
}

pub fn reflect_in(root: &Weight, x: &Weight) -> Weight {
    let c = Rational::from_integer(2) * x.dot(root) / root.dot(root);
    if c.is_zero() {
        x.clone()
    } else {
        x.add_scaled(-c, root)
    }
}

pub fn act(d: &RootSystem, w: &WeylElement, x: &Weight) -> Result<Weight> {
    if let Some(&bad) = w.word.iter().find(|&&i| i >= d.rank()) {
        return Err(Error::IndexOutOfRange { index: bad, rank: d.rank() });
    }
    if x.dim() != d.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: d.ambient_dim(), found: x.dim() });
    }
    Ok(w.word.iter().rev().fold(x.clone(), |acc, &i| reflect(d, i, &acc)))
}

/// Number of positive roots sent to negative roots.
pub fn length(d: &RootSystem, w: &WeylElement) -> Result<usize> {
    let mut n = 0;
    for root in d.positive_roots() {
        let image = act(d, w, &root.vector)?;
        if d.height(&image).is_negative() {
            n += 1;
        }
    }
    Ok(n)
}

/// Returns `(dominant, w, sign)` with `w x = dominant`. The greedy descent
/// produces the shortest such `w`, which matters when `x` is on a wall.
pub fn to_dominant(d: &RootSystem, x: &Weight) -> (Weight, WeylElement, i64) {
    let mut y = x.clone();
    let mut applied = Vec::new();
    while let Some(i) = (0..d.rank()).find(|&i| d.coroot_pairing(&y, i).is_negative()) {
        y = reflect(d, i, &y);
        applied.push(i);
    }
    applied.reverse();
    let w = WeylElement { word: applied };
    let sign = w.sign();
    (y, w, sign)
}

pub fn orbit(d: &RootSystem, x: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::new();
    seen.insert(x.clone());
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for i in 0..d.rank() {
            let z = reflect(d, i, &y);
            if !seen.contains(&z) {
                seen.insert(z.clone());
                queue.push_back(z);
            }
        }
    }
    seen
}

/// Dense rational matrix acting on ambient coordinates.
#[derive(Clone, Debug, PartialEq)]
struct ActionMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl ActionMatrix {
    fn identity(dim: usize) -> Self {
        let mut entries = vec![Rational::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Rational::from_integer(1);
        }
        ActionMatrix { dim, entries }
    }

    fn apply(&self, x: &Weight) -> Weight {
        let n = self.dim;
        let xs = x.coords();
        Weight::new(
            (0..n)
                .map(|i| {
                    let row = &self.entries[i * n..(i + 1) * n];
                    row.iter().zip(xs).fold(Rational::zero(), |acc, (m, v)| {
                        if m.is_zero() || v.is_zero() {
                            acc
                        } else {
                            acc + m * v
                        }
                    })
                })
                .collect(),
        )
    }

    /// `M * s_a`, where `s_a = I - 2 a a^T / (a.a)`.
    fn times_reflection(&self, a: &Weight) -> Self {
        let n = self.dim;
        let ma = self.apply(a);
        let k = Rational::from_integer(2) / a.dot(a);
        let mut entries = self.entries.clone();
        for i in 0..n {
            if ma[i].is_zero() {
                continue;
            }
            let f = ma[i] * k;
            for j in 0..n {
                if !a[j].is_zero() {
                    entries[i * n + j] -= f * a[j];
                }
            }
        }
        ActionMatrix { dim: n, entries }
    }
}

#[derive(Clone, Debug)]
struct GroupEntry {
    element: WeylElement,
    matrix: ActionMatrix,
}

/// All elements of a finite Weyl group, listed breadth-first so that words
/// are reduced and lengths are non-decreasing.
///
/// Elements are identified by their image of `rho`, which is regular.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    entries: Vec<GroupEntry>,
    by_rho_image: HashMap<Weight, usize>,
    rho: Weight,
}

impl WeylGroup {
    pub fn enumerate(d: &RootSystem) -> Result<Self> {
        let dim = d.ambient_dim();
        let rho = d.rho().clone();
        let mut entries = vec![GroupEntry { element: WeylElement::identity(), matrix: ActionMatrix::identity(dim) }];
        let mut by_rho_image = HashMap::from([(rho.clone(), 0usize)]);
        let mut head = 0;
        while head < entries.len() {
            for (i, a) in d.simple_roots().iter().enumerate() {
                let matrix = entries[head].matrix.times_reflection(a);
                let image = matrix.apply(&rho);
                if by_rho_image.contains_key(&image) {
                    continue;
                }
                if entries.len() >= MAX_ENUMERATED_ORDER {
                    return Err(Error::GroupTooLarge(MAX_ENUMERATED_ORDER));
                }
                let mut word = entries[head].element.word.clone();
                word.push(i);
                by_rho_image.insert(image, entries.len());
                entries.push(GroupEntry { element: WeylElement { word }, matrix });
            }
            head += 1;
        }
        Ok(WeylGroup { entries, by_rho_image, rho })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn element(&self, idx: usize) -> &WeylElement {
        &self.entries[idx].element
    }

    pub fn elements(&self) -> impl Iterator<Item = &WeylElement> {
        self.entries.iter().map(|e| &e.element)
    }

    pub fn act_by_index(&self, idx: usize, x: &Weight) -> Weight {
        self.entries[idx].matrix.apply(x)
    }

    pub fn sign(&self, idx: usize) -> i64 {
        self.entries[idx].element.sign()
    }

    /// Index of the element taking `rho` to `image`.
    pub fn index_of_rho_image(&self, image: &Weight) -> Option<usize> {
        self.by_rho_image.get(image).copied()
    }

    /// Index of the element equal to `w`.
    pub fn index_of(&self, d: &RootSystem, w: &WeylElement) -> Result<usize> {
        let image = act(d, w, &self.rho)?;
        Ok(self.index_of_rho_image(&image).expect("every word names an element of the enumerated group"))
    }

    /// The stored (breadth-first, reduced) word for `w`.
    pub fn canonical(&self, d: &RootSystem, w: &WeylElement) -> Result<WeylElement> {
        Ok(self.element(self.index_of(d, w)?).clone())
    }
}

pub fn enumerate_group(d: &RootSystem) -> Result<Vec<WeylElement>> {
    Ok(d.weyl_group()?.elements().cloned().collect())
}
