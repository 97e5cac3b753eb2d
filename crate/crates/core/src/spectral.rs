//! Cartan and Coxeter matrices of a triple and the spectrum of the Coxeter
//! transformation.
//!
//! All matrix work is exact. The Coxeter matrix always has eigenvalue `-1`;
//! the other two eigenvalues `lambda, 1/lambda` satisfy
//! `lambda + 1/lambda = C - 2`, so they follow from the Markov constant by a
//! quadratic.

use std::ops::Mul;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::triple::{decimal, Triple};

/// Exact 3x3 integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix3(pub [[BigInt; 3]; 3]);

impl Matrix3 {
    pub fn identity() -> Matrix3 {
        Matrix3(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { BigInt::one() } else { BigInt::zero() })
        }))
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.0[i][j]
    }

    pub fn transpose(&self) -> Matrix3 {
        Matrix3(std::array::from_fn(|i| std::array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn neg(&self) -> Matrix3 {
        Matrix3(self.0.clone().map(|row| row.map(|v| -v)))
    }

    pub fn trace(&self) -> BigInt {
        (0..3).map(|i| self.0[i][i].clone()).sum()
    }

    fn minor(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> BigInt {
        let m = &self.0;
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    }

    pub fn determinant(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * self.minor(1, 2, 1, 2) - &m[0][1] * self.minor(1, 2, 0, 2)
            + &m[0][2] * self.minor(1, 2, 0, 1)
    }

    /// Sum of the principal 2x2 minors.
    pub fn principal_minor_sum(&self) -> BigInt {
        self.minor(0, 1, 0, 1) + self.minor(0, 2, 0, 2) + self.minor(1, 2, 1, 2)
    }

    /// Transposed cofactor matrix, so that `m * adj(m) = det(m) * I`.
    pub fn adjugate(&self) -> Matrix3 {
        let cofactor = |i: usize, j: usize| {
            let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (0..3).filter(|&c| c != j).collect();
            let value = self.minor(rows[0], rows[1], cols[0], cols[1]);
            if (i + j).is_multiple_of(2) {
                value
            } else {
                -value
            }
        };
        Matrix3(std::array::from_fn(|i| std::array::from_fn(|j| cofactor(j, i))))
    }
}

impl Mul for &Matrix3 {
    type Output = Matrix3;

    fn mul(self, rhs: &Matrix3) -> Matrix3 {
        Matrix3(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| &self.0[i][k] * &rhs.0[k][j]).sum())
        }))
    }
}

/// Upper unitriangular matrix with `x` at (1,2), `y` at (1,3), `z` at (2,3).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix(Matrix3);

impl CartanMatrix {
    pub fn matrix(&self) -> &Matrix3 {
        &self.0
    }

    /// Exact inverse; integral because the determinant is 1.
    pub fn inverse(&self) -> Matrix3 {
        self.0.adjugate()
    }
}

pub fn cartan(t: &Triple) -> CartanMatrix {
    let (o, l) = (BigInt::zero(), BigInt::one());
    CartanMatrix(Matrix3([
        [l.clone(), t.x.clone(), t.y.clone()],
        [o.clone(), l.clone(), t.z.clone()],
        [o.clone(), o, l],
    ]))
}

/// `-D^T D^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix(Matrix3);

impl CoxeterMatrix {
    pub fn matrix(&self) -> &Matrix3 {
        &self.0
    }

    pub fn trace(&self) -> BigInt {
        self.0.trace()
    }

    pub fn determinant(&self) -> BigInt {
        self.0.determinant()
    }
}

pub fn coxeter(d: &CartanMatrix) -> CoxeterMatrix {
    CoxeterMatrix((&d.0.transpose() * &d.inverse()).neg())
}

/// Monic cubic `c0 + c1 T + c2 T^2 + T^3`, coefficients in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CharPoly {
    #[serde(serialize_with = "serialize_coeffs")]
    pub coeffs: [BigInt; 4],
}

fn serialize_coeffs<S: serde::Serializer>(c: &[BigInt; 4], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(|v| v.to_string()))
}

impl CharPoly {
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs[0] == self.coeffs[3] && self.coeffs[1] == self.coeffs[2]
    }
}

/// `det(T I - Phi) = T^3 - tr T^2 + e2 T - det`, with `e2` the sum of the
/// principal 2x2 minors.
pub fn char_poly(phi: &CoxeterMatrix) -> CharPoly {
    let m = &phi.0;
    CharPoly {
        coeffs: [-m.determinant(), m.principal_minor_sum(), -m.trace(), BigInt::one()],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `0 < C < 4`: `lambda` is non-real on the unit circle.
    Tame,
    /// `C = 0` or `C = 4`: `lambda = -1` or `lambda = 1`, a double root.
    Boundary,
    /// `C < 0` or `C > 4`: `lambda` is real with `|lambda| > 1`.
    Wild,
}

/// Eigenvalues `-1, lambda, 1/lambda` of the Coxeter transformation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoxeterSpectrum {
    #[serde(with = "decimal")]
    pub constant: BigInt,
    /// `lambda + 1/lambda = C - 2`, exact.
    #[serde(with = "decimal")]
    pub lambda_sum: BigInt,
    /// `(C - 2)^2 - 4 = C (C - 4)`; non-positive exactly when `|lambda| = 1`.
    #[serde(with = "decimal")]
    pub discriminant: BigInt,
    #[serde(serialize_with = "serialize_complex")]
    pub lambda: Complex64,
    #[serde(serialize_with = "serialize_complex")]
    pub lambda_inverse: Complex64,
    pub regime: Regime,
}

fn serialize_complex<S: serde::Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    // Adding 0.0 turns -0.0 into 0.0 so equal spectra print identically.
    s.collect_seq([z.re + 0.0, z.im + 0.0])
}

impl CoxeterSpectrum {
    pub fn on_unit_circle(&self) -> bool {
        self.regime != Regime::Wild
    }

    /// Eigenvalues with the fixed `-1` first.
    pub fn eigenvalues(&self) -> [Complex64; 3] {
        [Complex64::new(-1.0, 0.0), self.lambda, self.lambda_inverse]
    }
}

/// Spectrum from the Markov constant alone.
pub fn spectrum_for_constant(c: &BigInt) -> CoxeterSpectrum {
    let lambda_sum: BigInt = c - 2;
    let discriminant: BigInt = &lambda_sum * &lambda_sum - 4;
    let s: f64 = lambda_sum.to_f64().unwrap_or(f64::NAN);
    let regime = if discriminant.is_negative() {
        Regime::Tame
    } else if discriminant.is_zero() {
        Regime::Boundary
    } else {
        Regime::Wild
    };
    let lambda = match regime {
        Regime::Tame => {
            // s^2 < 4 here, so s is one of -1, 0, 1 and the square root is exact enough.
            let im = (4.0 - s * s).sqrt() / 2.0;
            Complex64::new(s / 2.0, im)
        }
        Regime::Boundary => Complex64::new(s / 2.0, 0.0),
        Regime::Wild => {
            // Root of larger modulus: s/2 + sign(s) sqrt(s^2/4 - 1).
            let half = s / 2.0;
            let r = (half.abs() + (half * half - 1.0).sqrt()).copysign(half);
            Complex64::new(r, 0.0)
        }
    };
    CoxeterSpectrum {
        constant: c.clone(),
        lambda_sum,
        discriminant,
        lambda,
        lambda_inverse: lambda.inv(),
        regime,
    }
}

pub fn spectrum(t: &Triple) -> CoxeterSpectrum {
    spectrum_for_constant(&t.markov_constant())
}
