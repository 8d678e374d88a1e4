use core::ops::{Add, Mul, Sub};

use crate::{math, C64};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Dense square complex matrix of fixed size, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquareMatrix<const N: usize>(pub [[C64; N]; N]);

pub type Mat2 = SquareMatrix<2>;
pub type Mat4 = SquareMatrix<4>;

impl<const N: usize> SquareMatrix<N> {
    pub const fn zero() -> Self {
        SquareMatrix([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_real_diagonal(d: [f64; N]) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = C64::new(d[i], 0.0);
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn scale(&self, k: f64) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for x in row.iter_mut() {
                *x *= k;
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    /// `max |a_ij − conj(a_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// `K A K†`.
    pub fn conjugate_by(&self, k: &Self) -> Self {
        *k * *self * k.adjoint()
    }

    /// Frobenius norm of the strictly off-diagonal part.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..N {
            for j in 0..N {
                if i != j {
                    acc += self.0[i][j].norm_sqr();
                }
            }
        }
        math::sqrt(acc)
    }
}

impl<const N: usize> Add for SquareMatrix<N> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] += o.0[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Sub for SquareMatrix<N> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] -= o.0[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Mul for SquareMatrix<N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    m.0[i][j] += a * o.0[k][j];
                }
            }
        }
        m
    }
}

/// Pauli matrix `σ₁`, `σ₂` or `σ₃` for `axis` 0, 1, 2.
pub fn pauli(axis: usize) -> Mat2 {
    let i = C64::new(0.0, 1.0);
    match axis {
        0 => SquareMatrix([[ZERO, ONE], [ONE, ZERO]]),
        1 => SquareMatrix([[ZERO, -i], [i, ZERO]]),
        2 => SquareMatrix([[ONE, ZERO], [ZERO, -ONE]]),
        _ => panic!("pauli axis must be 0, 1 or 2, got {axis}"),
    }
}

/// Kronecker product `a ⊗ b`; `a` acts on the first (party a) factor.
pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut m = Mat4::zero();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    m.0[2 * i + k][2 * j + l] = a.0[i][j] * b.0[k][l];
                }
            }
        }
    }
    m
}
