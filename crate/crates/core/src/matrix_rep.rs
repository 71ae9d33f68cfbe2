//! Matrix representations of the algebra.
//!
//! The four space-time units and the four vector units each act by left
//! multiplication on a 4-component coefficient column, giving 4x4 unit
//! matrices. Nesting the space-time pattern over the vector pattern yields
//! the faithful 16x16 left-regular representation of a full sedeon. A
//! second, vector-major nesting exists and is related to the first by a
//! permutation. Projecting onto the eigenbasis of `a_3` produces the
//! four-component form in which the vector units act as block spin
//! matrices.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::{unit_product, Complex64, Sedeon, UnitCoeff};
use crate::error::SedeonError;

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Dense 4x4 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[Complex64; 4]; 4]);

impl Matrix4 {
    pub fn zeros() -> Matrix4 {
        Matrix4([[C_ZERO; 4]; 4])
    }

    pub fn identity() -> Matrix4 {
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            m.0[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn conj_transpose(&self) -> Matrix4 {
        let mut out = Matrix4::zeros();
        for r in 0..4 {
            for c in 0..4 {
                out.0[r][c] = self.0[c][r].conj();
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Apply to a coefficient column.
    pub fn apply(&self, v: &[Complex64; 4]) -> [Complex64; 4] {
        let mut out = [C_ZERO; 4];
        for r in 0..4 {
            for c in 0..4 {
                out[r] += self.0[r][c] * v[c];
            }
        }
        out
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;
    fn add(self, rhs: Matrix4) -> Matrix4 {
        let mut out = self;
        for r in 0..4 {
            for c in 0..4 {
                out.0[r][c] += rhs.0[r][c];
            }
        }
        out
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;
    fn sub(self, rhs: Matrix4) -> Matrix4 {
        let mut out = self;
        for r in 0..4 {
            for c in 0..4 {
                out.0[r][c] -= rhs.0[r][c];
            }
        }
        out
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut out = Matrix4::zeros();
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = C_ZERO;
                for t in 0..4 {
                    acc += self.0[r][t] * rhs.0[t][c];
                }
                out.0[r][c] = acc;
            }
        }
        out
    }
}

impl Mul<Complex64> for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Complex64) -> Matrix4 {
        let mut out = self;
        for row in &mut out.0 {
            for z in row {
                *z *= rhs;
            }
        }
        out
    }
}

// Row-major flat array of [re, im] pairs, the shared matrix JSON encoding.
impl Serialize for Matrix4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(16))?;
        for row in &self.0 {
            for z in row {
                seq.serialize_element(&[z.re, z.im])?;
            }
        }
        seq.end()
    }
}

impl fmt::Display for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            for z in row {
                write!(f, "({:+.3}{:+.3}i) ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Dense 16x16 complex matrix (heap-backed).
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix16(pub Box<[[Complex64; 16]; 16]>);

impl Matrix16 {
    pub fn zeros() -> Matrix16 {
        Matrix16(Box::new([[C_ZERO; 16]; 16]))
    }

    pub fn identity() -> Matrix16 {
        let mut m = Matrix16::zeros();
        for i in 0..16 {
            m.0[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn matmul(&self, rhs: &Matrix16) -> Matrix16 {
        let mut out = Matrix16::zeros();
        for r in 0..16 {
            for t in 0..16 {
                let x = self.0[r][t];
                if x.re == 0.0 && x.im == 0.0 {
                    continue;
                }
                for c in 0..16 {
                    out.0[r][c] += x * rhs.0[t][c];
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix16) -> Matrix16 {
        let mut out = self.clone();
        for r in 0..16 {
            for c in 0..16 {
                out.0[r][c] -= rhs.0[r][c];
            }
        }
        out
    }

    /// Apply to a 16-component column.
    pub fn apply(&self, v: &[Complex64; 16]) -> [Complex64; 16] {
        let mut out = [C_ZERO; 16];
        for r in 0..16 {
            for c in 0..16 {
                out[r] += self.0[r][c] * v[c];
            }
        }
        out
    }

    /// Frobenius inner product `tr(self^H rhs)`.
    pub fn frobenius_inner(&self, rhs: &Matrix16) -> Complex64 {
        let mut acc = C_ZERO;
        for r in 0..16 {
            for c in 0..16 {
                acc += self.0[r][c].conj() * rhs.0[r][c];
            }
        }
        acc
    }

    /// Smallest singular value.
    pub fn smallest_singular_value(&self) -> f64 {
        let m = DMatrix::from_fn(16, 16, |r, c| self.0[r][c]);
        let values = m.singular_values();
        values.iter().cloned().fold(f64::INFINITY, f64::min)
    }
}

impl Serialize for Matrix16 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(256))?;
        for row in self.0.iter() {
            for z in row {
                seq.serialize_element(&[z.re, z.im])?;
            }
        }
        seq.end()
    }
}

fn check_unit_index(i: usize) -> Result<(), SedeonError> {
    if i > 3 {
        return Err(SedeonError::IndexOutOfRange { n: i, k: 0 });
    }
    Ok(())
}

/// Left-multiplication pattern over one unit triple: the 4x4 matrix whose
/// action on a coefficient column reproduces multiplication by the value
/// with the given coefficients.
fn left_mul_pattern(coeffs: &[Complex64; 4]) -> Matrix4 {
    let mut m = Matrix4::zeros();
    for src in 0..4 {
        for i in 0..4 {
            let (coeff, dst) = unit_product(i, src);
            m.0[dst][src] = coeff.apply(coeffs[i]);
        }
    }
    m
}

/// 4x4 matrix of the space-time unit `e_n` acting by left multiplication on
/// the `(V_0, V_1, V_2, V_3)` coefficient column.
pub fn unit_matrix_e(n: usize) -> Result<Matrix4, SedeonError> {
    check_unit_index(n)?;
    let mut coeffs = [C_ZERO; 4];
    coeffs[n] = Complex64::new(1.0, 0.0);
    Ok(left_mul_pattern(&coeffs))
}

/// 4x4 matrix of the vector unit `a_k`; the vector triple follows the same
/// table, so the matrices coincide with the space-time ones.
pub fn unit_matrix_a(k: usize) -> Result<Matrix4, SedeonError> {
    check_unit_index(k)?;
    unit_matrix_e(k)
}

/// Column vector of components in n-major order (the storage order).
pub fn vec_components(v: &Sedeon) -> [Complex64; 16] {
    *v.components()
}

/// Column vector of components in k-major (vector-unit first) order.
pub fn vec_components_amajor(v: &Sedeon) -> [Complex64; 16] {
    let mut out = [C_ZERO; 16];
    for n in 0..4 {
        for k in 0..4 {
            out[4 * k + n] = v.at(n, k);
        }
    }
    out
}

/// The 16x16 left-regular representation in n-major ordering:
/// `M(V) vec(B) = vec(V B)` for every sedeon `B`. Rows and columns nest the
/// space-time pattern outside and the vector pattern inside.
pub fn left_regular_matrix(v: &Sedeon) -> Matrix16 {
    let mut m = Matrix16::zeros();
    for col in 0..16 {
        let (nb, kb) = (col / 4, col % 4);
        for src in 0..16 {
            let (na, ka) = (src / 4, src % 4);
            let (ce, ne) = unit_product(na, nb);
            let (ca, kc) = unit_product(ka, kb);
            m.0[4 * ne + kc][col] = ce.mul(ca).apply(v.at(na, ka));
        }
    }
    m
}

/// The same representation in the k-major ordering. Equal to the n-major
/// matrix conjugated by the index-swap permutation.
pub fn left_regular_matrix_amajor(v: &Sedeon) -> Matrix16 {
    let mut m = Matrix16::zeros();
    for col in 0..16 {
        let (kb, nb) = (col / 4, col % 4);
        for src in 0..16 {
            let (na, ka) = (src / 4, src % 4);
            let (ce, ne) = unit_product(na, nb);
            let (ca, kc) = unit_product(ka, kb);
            m.0[4 * kc + ne][col] = ce.mul(ca).apply(v.at(na, ka));
        }
    }
    m
}

/// Conjugate an n-major 16x16 matrix by the index-swap permutation,
/// producing its k-major form.
pub fn swap_ordering(m: &Matrix16) -> Matrix16 {
    let perm = |i: usize| 4 * (i % 4) + i / 4;
    let mut out = Matrix16::zeros();
    for r in 0..16 {
        for c in 0..16 {
            out.0[r][c] = m.0[perm(r)][perm(c)];
        }
    }
    out
}

/// Projection of a sedeon onto the eigenbasis of `a_3`:
/// `W_1 = (V_0 + V_3)/2`, `W_2 = (V_1 + i V_2)/2`,
/// `W_3 = (V_1 - i V_2)/2`, `W_4 = (V_0 - V_3)/2`,
/// where `V_k` is the space-time content of the `a_k` column. Each `W`
/// is a pure sedeon-scalar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracComponents {
    pub w1: Sedeon,
    pub w2: Sedeon,
    pub w3: Sedeon,
    pub w4: Sedeon,
}

pub fn dirac_project(v: &Sedeon) -> DiracComponents {
    let mut w1 = Sedeon::zero();
    let mut w2 = Sedeon::zero();
    let mut w3 = Sedeon::zero();
    let mut w4 = Sedeon::zero();
    for n in 0..4 {
        let v0 = v.at(n, 0);
        let v1 = v.at(n, 1);
        let v2 = v.at(n, 2);
        let v3 = v.at(n, 3);
        let iv2 = UnitCoeff::I.apply(v2);
        *w1.at_mut(n, 0) = 0.5 * (v0 + v3);
        *w2.at_mut(n, 0) = 0.5 * (v1 + iv2);
        *w3.at_mut(n, 0) = 0.5 * (v1 - iv2);
        *w4.at_mut(n, 0) = 0.5 * (v0 - v3);
    }
    DiracComponents { w1, w2, w3, w4 }
}

/// Rebuild the sedeon from its projection:
/// `V = W_1 (1 + a_3) + W_2 (a_1 - i a_2) + W_3 (a_1 + i a_2) + W_4 (1 - a_3)`.
/// The basis combinations are idempotent/nilpotent (hence non-invertible);
/// the reassembly works purely by multiplication, never by division.
pub fn dirac_reassemble(w: &DiracComponents) -> Sedeon {
    let one = Sedeon::one();
    let a1 = Sedeon::unit(0, 1);
    let a2 = Sedeon::unit(0, 2);
    let a3 = Sedeon::unit(0, 3);
    let i = Complex64::new(0.0, 1.0);
    w.w1.product(&(one + a3))
        + w.w2.product(&(a1 - a2 * i))
        + w.w3.product(&(a1 + a2 * i))
        + w.w4.product(&(one - a3))
}

/// The four basis combinations of the `a_3` eigenbasis, in column order.
pub fn dirac_basis_elements() -> [Sedeon; 4] {
    let one = Sedeon::one();
    let a1 = Sedeon::unit(0, 1);
    let a2 = Sedeon::unit(0, 2);
    let a3 = Sedeon::unit(0, 3);
    let i = Complex64::new(0.0, 1.0);
    [one + a3, a1 - a2 * i, a1 + a2 * i, one - a3]
}

/// Block spin matrix of the vector unit `a_j` (j = 1..3) in the `a_3`
/// eigenbasis.
pub fn sigma_matrix(j: usize) -> Result<Matrix4, SedeonError> {
    if !(1..=3).contains(&j) {
        return Err(SedeonError::IndexOutOfRange { n: 0, k: j });
    }
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let z = C_ZERO;
    Ok(match j {
        1 => Matrix4([
            [z, one, z, z],
            [one, z, z, z],
            [z, z, z, one],
            [z, z, one, z],
        ]),
        2 => Matrix4([
            [z, -i, z, z],
            [i, z, z, z],
            [z, z, z, -i],
            [z, z, i, z],
        ]),
        _ => Matrix4([
            [one, z, z, z],
            [z, -one, z, z],
            [z, z, one, z],
            [z, z, z, -one],
        ]),
    })
}

/// Matrix of left multiplication by `a_j` expressed on the `(W_1..W_4)`
/// coordinates, computed through the algebra itself. Coincides with
/// [`sigma_matrix`].
pub fn sigma_action_matrix(j: usize) -> Result<Matrix4, SedeonError> {
    if !(1..=3).contains(&j) {
        return Err(SedeonError::IndexOutOfRange { n: 0, k: j });
    }
    let aj = Sedeon::unit(0, j);
    let mut m = Matrix4::zeros();
    for (col, basis) in dirac_basis_elements().iter().enumerate() {
        let acted = aj.product(basis);
        let w = dirac_project(&acted);
        for (row, part) in [w.w1, w.w2, w.w3, w.w4].iter().enumerate() {
            // The action permutes W-slots with scalar factors, so each part
            // stays a plain complex multiple of the identity slot.
            debug_assert!(part.at(1, 0).norm() + part.at(2, 0).norm() + part.at(3, 0).norm() == 0.0);
            m.0[row][col] = part.at(0, 0);
        }
    }
    Ok(m)
}
