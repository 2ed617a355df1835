#![allow(dead_code)]

use wv_core::embedding::{build_embedding, standard_embeddings, EmbeddingSpec};
use wv_core::rootspace::{build_root_datum, label_grid, RootDatum};
use wv_core::weight::Weight;

pub const MATRIX_ALGEBRAS: [&str; 6] = ["A2", "B2", "G2", "A3", "B3", "C3"];

pub fn datum(name: &str) -> RootDatum {
    build_root_datum(name.parse().expect("known algebra")).expect("root datum")
}

pub fn spec(name: &str, roots: &[&[i64]]) -> EmbeddingSpec {
    let roots: Vec<Vec<i64>> = roots.iter().map(|r| r.to_vec()).collect();
    build_embedding(&datum(name), &roots).expect("valid embedding")
}

/// One embedding of the test matrix with all its highest weights.
pub struct MatrixEntry {
    pub algebra: &'static str,
    pub spec: EmbeddingSpec,
    pub weights: Vec<(Vec<i64>, Weight)>,
}

impl MatrixEntry {
    pub fn label(&self) -> String {
        format!("{} a={:?}", self.algebra, self.spec.a_roots())
    }
}

/// Every simple-root subset and the highest-root A1 of each matrix algebra,
/// with all Dynkin labels up to `max_label`.
pub fn matrix(max_label: i64) -> Vec<MatrixEntry> {
    let mut out = Vec::new();
    for algebra in MATRIX_ALGEBRAS {
        let d = datum(algebra);
        let weights: Vec<(Vec<i64>, Weight)> = label_grid(d.rank(), max_label)
            .into_iter()
            .map(|l| {
                let w = d.from_dynkin_labels(&l).expect("integral labels");
                (l, w)
            })
            .collect();
        for roots in standard_embeddings(&d) {
            out.push(MatrixEntry {
                algebra,
                spec: build_embedding(&d, &roots).expect("standard embedding"),
                weights: weights.clone(),
            });
        }
    }
    out
}
