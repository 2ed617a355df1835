//! Truncation windows below a top weight: all offsets `q ∈ Z≥0^r` (simple-root
//! coordinates) with `|q| ≤ depth`, stored densely in increasing height.

use std::collections::HashMap;

use crate::formal::FormalElement;
use crate::rootspace::RootSystem;
use crate::weight::Weight;

pub(crate) struct Window {
    points: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl Window {
    pub fn new(rank: usize, depth: u32) -> Self {
        let mut points = vec![vec![0u32; rank]];
        let mut frontier = points.clone();
        for _ in 0..depth {
            let mut next = Vec::new();
            for p in &frontier {
                // extend only at or after the last nonzero slot so each point is produced once
                let start = p.iter().rposition(|&x| x > 0).unwrap_or(0);
                for k in start..rank {
                    let mut q = p.clone();
                    q[k] += 1;
                    next.push(q);
                }
            }
            points.extend(next.iter().cloned());
            frontier = next;
        }
        let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Self { points, index }
    }

    pub fn points(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn index_of(&self, q: &[i64]) -> Option<usize> {
        if q.iter().any(|&x| x < 0) {
            return None;
        }
        let key: Vec<u32> = q.iter().map(|&x| x as u32).collect();
        self.index.get(&key).copied()
    }

    /// Index of `points[i] - eta`, for every `i`.
    fn shift_table(&self, eta: &[i64]) -> Vec<Option<usize>> {
        self.points
            .iter()
            .map(|p| {
                let q: Vec<i64> = p.iter().zip(eta).map(|(&a, &b)| a as i64 - b).collect();
                self.index_of(&q)
            })
            .collect()
    }

    /// In-place multiplication by `1 / (1 - e^{-eta})` for a nonzero `eta ≥ 0`.
    pub fn divide_by_factor(&self, g: &mut [i64], eta: &[i64]) {
        let table = self.shift_table(eta);
        for i in 0..g.len() {
            if let Some(j) = table[i] {
                g[i] += g[j];
            }
        }
    }

    /// Dense vector with `coefficient` placed at offset `q` (dropped outside).
    pub fn place(&self, g: &mut [i64], q: &[i64], coefficient: i64) {
        if let Some(i) = self.index_of(q) {
            g[i] += coefficient;
        }
    }

    pub fn zeros(&self) -> Vec<i64> {
        vec![0; self.len()]
    }

    /// `Σ g[q] e^{top - q·α}` as a formal element.
    pub fn to_formal(&self, system: &RootSystem, top: &Weight, g: &[i64]) -> FormalElement {
        self.points
            .iter()
            .zip(g)
            .filter(|(_, &c)| c != 0)
            .map(|(p, &c)| {
                let coeffs: Vec<i64> = p.iter().map(|&x| x as i64).collect();
                (top - &system.from_integer_root_coordinates(&coeffs), c)
            })
            .collect()
    }
}
