//! Gram matrices of eigenvector sets under the ordinary and the
//! reflected inner product.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{to_pair, Cx, Real};
use crate::solver::Contour;

/// `gram_hermitian[k][n] = ∫ conj(Φ_k) Φ_n` and
/// `gram_pt[k][n] = ∫ conj(Ψ_k(x)) Ψ_n(−x)`, trapezoid rule.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthoReport<T> {
    pub gram_hermitian: Vec<Vec<Cx<T>>>,
    pub gram_pt: Vec<Vec<Cx<T>>>,
    /// `max |G − I|`
    pub dev_hermitian: T,
    /// `max |G_pt − iI|`
    pub dev_pt_plus: T,
    /// `max |G_pt + iI|`
    pub dev_pt_minus: T,
}

fn max_dev<T: Real>(g: &[Vec<Cx<T>>], diag: Cx<T>) -> T {
    let zero = Cx::new(T::zero(), T::zero());
    let mut worst = T::zero();
    for (k, row) in g.iter().enumerate() {
        for (n, &v) in row.iter().enumerate() {
            let target = if k == n { diag } else { zero };
            worst = worst.max((v - target).norm());
        }
    }
    worst
}

/// Builds both Gram matrices. Every vector must hold one value per
/// contour sample, and the contour must be symmetric so that index
/// reversal is the reflection `x → −x`.
pub fn ortho_check<T: Real>(vectors: &[Vec<Cx<T>>], grid: &Contour<T>) -> Result<OrthoReport<T>> {
    let n = grid.n_points;
    if let Some((i, v)) = vectors.iter().enumerate().find(|(_, v)| v.len() != n) {
        return Err(Error::GridMismatch(format!(
            "vector {i} has {} samples, grid has {n}",
            v.len()
        )));
    }
    if !grid.is_symmetric() {
        return Err(Error::GridMismatch(
            "grid is not symmetric about zero".into(),
        ));
    }
    let h = grid.step();
    let w = |j: usize| {
        if j == 0 || j + 1 == n {
            h / T::lit(2.0)
        } else {
            h
        }
    };
    let zero = Cx::new(T::zero(), T::zero());
    let k = vectors.len();
    let mut gh = vec![vec![zero; k]; k];
    let mut gp = vec![vec![zero; k]; k];
    for a in 0..k {
        for b in 0..k {
            let (va, vb) = (&vectors[a], &vectors[b]);
            let mut sh = zero;
            let mut sp = zero;
            for j in 0..n {
                let wa = va[j].conj() * w(j);
                sh = sh + wa * vb[j];
                sp = sp + wa * vb[n - 1 - j];
            }
            gh[a][b] = sh;
            gp[a][b] = sp;
        }
    }
    let one = Cx::new(T::one(), T::zero());
    let i = Cx::new(T::zero(), T::one());
    Ok(OrthoReport {
        dev_hermitian: max_dev(&gh, one),
        dev_pt_plus: max_dev(&gp, i),
        dev_pt_minus: max_dev(&gp, -i),
        gram_hermitian: gh,
        gram_pt: gp,
    })
}

#[derive(Serialize)]
struct OrthoWire {
    dim: usize,
    gram_hermitian: Vec<Vec<[f64; 2]>>,
    gram_pt: Vec<Vec<[f64; 2]>>,
    dev_hermitian: f64,
    dev_pt_plus: f64,
    dev_pt_minus: f64,
}

impl<T: Real> OrthoReport<T> {
    pub fn dim(&self) -> usize {
        self.gram_hermitian.len()
    }

    pub fn to_json(&self) -> String {
        let m = |g: &Vec<Vec<Cx<T>>>| -> Vec<Vec<[f64; 2]>> {
            g.iter()
                .map(|r| r.iter().map(|&z| to_pair(z)).collect())
                .collect()
        };
        let wire = OrthoWire {
            dim: self.dim(),
            gram_hermitian: m(&self.gram_hermitian),
            gram_pt: m(&self.gram_pt),
            dev_hermitian: self.dev_hermitian.as_f64(),
            dev_pt_plus: self.dev_pt_plus.as_f64(),
            dev_pt_minus: self.dev_pt_minus.as_f64(),
        };
        let mut s = serde_json::to_string_pretty(&wire).expect("report serializes");
        s.push('\n');
        s
    }
}
