//! Cyclic complex Jacobi eigensolver for small Hermitian matrices.

use core::cmp::Ordering;

use super::matrix::{Mat4, SquareMatrix};
use crate::{math, tol, Error, Result, C64};

/// Spectral decomposition of a 4×4 Hermitian matrix.
///
/// Eigenvalues are sorted descending; `vectors[k]` is the unit eigenvector
/// for `values[k]`, phase-fixed so that its first nonzero component is real
/// and positive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spectrum {
    pub values: [f64; 4],
    pub vectors: [[C64; 4]; 4],
}

impl Spectrum {
    /// `Σ λₖ vₖ vₖ†`.
    pub fn reconstruct(&self) -> Mat4 {
        let mut m = Mat4::zero();
        for (lambda, v) in self.values.iter().zip(self.vectors.iter()) {
            for i in 0..4 {
                for j in 0..4 {
                    m.0[i][j] += v[i] * v[j].conj() * *lambda;
                }
            }
        }
        m
    }
}

/// Full spectral decomposition of a Hermitian 4×4 matrix.
pub fn hermitian_eigen(m: &Mat4) -> Result<Spectrum> {
    let (values, vectors) = jacobi_eigen(m)?;
    Ok(Spectrum { values, vectors })
}

/// Cyclic Jacobi on an `N×N` Hermitian matrix.
///
/// Returns eigenvalues in descending order with matching phase-normalized
/// eigenvectors. Ties (within `1e-12`) are ordered by the lexicographically
/// larger eigenvector, comparing real then imaginary parts component by
/// component. Only the upper triangle of `m` is trusted to be consistent
/// with Hermiticity; callers validate that beforehand.
pub fn jacobi_eigen<const N: usize>(m: &SquareMatrix<N>) -> Result<([f64; N], [[C64; N]; N])> {
    let mut a = m.0;
    let mut v = SquareMatrix::<N>::identity().0;

    let mut sweeps = 0;
    let mut off = SquareMatrix(a).off_diagonal_norm();
    while !(off < tol::JACOBI_OFF_NORM) {
        if sweeps == tol::JACOBI_MAX_SWEEPS {
            return Err(Error::Convergence { sweeps, off_norm: off });
        }
        for p in 0..N {
            for q in p + 1..N {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
        off = SquareMatrix(a).off_diagonal_norm();
    }

    let mut pairs: [(f64, [C64; N]); N] = [(0.0, [C64::new(0.0, 0.0); N]); N];
    for (k, pair) in pairs.iter_mut().enumerate() {
        let mut col = [C64::new(0.0, 0.0); N];
        for (i, c) in col.iter_mut().enumerate() {
            *c = v[i][k];
        }
        *pair = (a[k][k].re, normalize_phase(col));
    }

    // insertion sort: N is tiny and the comparator is tolerance-based
    for i in 1..N {
        let mut j = i;
        while j > 0 && order(&pairs[j], &pairs[j - 1]) == Ordering::Less {
            pairs.swap(j, j - 1);
            j -= 1;
        }
    }

    let mut values = [0.0; N];
    let mut vectors = [[C64::new(0.0, 0.0); N]; N];
    for (k, (lambda, vec)) in pairs.into_iter().enumerate() {
        values[k] = lambda;
        vectors[k] = vec;
    }
    Ok((values, vectors))
}

/// One complex Jacobi rotation zeroing `a[p][q]`; accumulates into `v`.
fn rotate<const N: usize>(a: &mut [[C64; N]; N], v: &mut [[C64; N]; N], p: usize, q: usize) {
    let apq = a[p][q];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq / g;
    let tau = (a[q][q].re - a[p][p].re) / (2.0 * g);
    let t = if tau >= 0.0 {
        1.0 / (tau + math::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + math::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / math::sqrt(1.0 + t * t);
    let s = t * c;

    // J has columns p = (c, -s·conj(phase)) and q = (s·phase, c) on rows (p, q).
    let jpp = C64::new(c, 0.0);
    let jpq = phase * s;
    let jqp = -phase.conj() * s;
    let jqq = C64::new(c, 0.0);

    // A ← A J
    for row in a.iter_mut() {
        let (x, y) = (row[p], row[q]);
        row[p] = x * jpp + y * jqp;
        row[q] = x * jpq + y * jqq;
    }
    // A ← J† A
    for k in 0..N {
        let (x, y) = (a[p][k], a[q][k]);
        a[p][k] = jpp.conj() * x + jqp.conj() * y;
        a[q][k] = jpq.conj() * x + jqq.conj() * y;
    }
    a[p][q] = C64::new(0.0, 0.0);
    a[q][p] = C64::new(0.0, 0.0);
    a[p][p].im = 0.0;
    a[q][q].im = 0.0;

    for row in v.iter_mut() {
        let (x, y) = (row[p], row[q]);
        row[p] = x * jpp + y * jqp;
        row[q] = x * jpq + y * jqq;
    }
}

fn normalize_phase<const N: usize>(mut col: [C64; N]) -> [C64; N] {
    let norm = math::sqrt(col.iter().map(|z| z.norm_sqr()).sum());
    let lead = col.iter().copied().find(|z| z.norm() > 1e-12);
    let rot = match lead {
        Some(z) => z.conj() / z.norm(),
        None => C64::new(1.0, 0.0),
    };
    for z in col.iter_mut() {
        *z = *z * rot / norm;
    }
    col
}

fn order<const N: usize>(a: &(f64, [C64; N]), b: &(f64, [C64; N])) -> Ordering {
    if math::abs(a.0 - b.0) > 1e-12 {
        return b.0.partial_cmp(&a.0).unwrap_or(Ordering::Equal);
    }
    for (x, y) in a.1.iter().zip(b.1.iter()) {
        for (u, w) in [(x.re, y.re), (x.im, y.im)] {
            if u != w {
                return w.partial_cmp(&u).unwrap_or(Ordering::Equal);
            }
        }
    }
    Ordering::Equal
}
