//! Real geometry of the level sets `V(C) = { C(x, y, z) = C }`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triple::{Triple, Vertex};

/// Shape of the plane conic `V(C)_z` obtained by fixing `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SliceKind {
    Empty,
    Point,
    Ellipse,
    OneLine,
    TwoParallelLines,
    TwoCrossingLines,
    Hyperbola,
}

/// Fixing `z` leaves `x^2 + y^2 - zxy = C - z^2`, a conic whose type depends
/// on `|z|` against 2 and on the sign of `C - z^2`.
pub fn slice_classify(c: &BigInt, z: &BigInt) -> SliceKind {
    let two = BigInt::from(2);
    let rhs = c - z * z;
    match z.abs().cmp(&two) {
        Ordering::Less => match rhs.sign() {
            num_bigint::Sign::Minus => SliceKind::Empty,
            num_bigint::Sign::NoSign => SliceKind::Point,
            num_bigint::Sign::Plus => SliceKind::Ellipse,
        },
        // (x -+ y)^2 = C - 4
        Ordering::Equal => match rhs.sign() {
            num_bigint::Sign::Minus => SliceKind::Empty,
            num_bigint::Sign::NoSign => SliceKind::OneLine,
            num_bigint::Sign::Plus => SliceKind::TwoParallelLines,
        },
        Ordering::Greater => {
            if rhs.sign() == num_bigint::Sign::NoSign {
                SliceKind::TwoCrossingLines
            } else {
                SliceKind::Hyperbola
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// Singular points of `V(C)`, sorted.
///
/// `V(4)` has the four cone points `(2,2,2)`, `(2,-2,-2)`, `(-2,2,-2)` and
/// `(-2,-2,2)` over both fields. Over the complex numbers the origin is also
/// singular on `V(0)`; over the reals it is an isolated point of `V(0)` and
/// is not counted.
pub fn singular_points(c: &BigInt, field: Field) -> Vec<Triple> {
    let mut points = if *c == BigInt::from(4) {
        vec![
            Triple::new(2, 2, 2),
            Triple::new(2, -2, -2),
            Triple::new(-2, 2, -2),
            Triple::new(-2, -2, 2),
        ]
    } else if c.sign() == num_bigint::Sign::NoSign && field == Field::Complex {
        vec![Triple::new(0, 0, 0)]
    } else {
        Vec::new()
    };
    points.sort();
    points
}

/// Gradient of the Markov polynomial, `(2x - yz, 2y - xz, 2z - xy)`.
pub fn gradient(t: &Triple) -> [BigInt; 3] {
    let two = BigInt::from(2);
    Vertex::ALL.map(|v| &two * t.get(v) - (t.mutated_entry(v) + t.get(v)))
}

/// Connected-component counts for one level set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentCounts {
    pub total: u32,
    pub smooth_part: u32,
    pub compact: u32,
}

pub fn component_table(c: &BigInt) -> ComponentCounts {
    let (total, smooth_part, compact) = match c.cmp(&BigInt::from(0)) {
        Ordering::Less => (4, 4, 0),
        Ordering::Equal => (5, 5, 1),
        Ordering::Greater => match c.cmp(&BigInt::from(4)) {
            Ordering::Less => (5, 5, 1),
            Ordering::Equal => (1, 5, 0),
            Ordering::Greater => (1, 1, 0),
        },
    };
    ComponentCounts {
        total,
        smooth_part,
        compact,
    }
}

/// Connected component of `V(C)` for `0 <= C <= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    /// The piece inside `[-2, 2]^3`.
    Compact,
    PosPosPos,
    NegNegPos,
    NegPosNeg,
    PosNegNeg,
}

pub type RealPoint = [f64; 3];

/// Slack used when a floating point value is compared with an exact boundary.
const REAL_EPS: f64 = 1e-9;

pub fn markov_constant_real([x, y, z]: RealPoint) -> f64 {
    x * x + y * y + z * z - x * y * z
}

pub fn mutate_real(p: RealPoint, v: Vertex) -> RealPoint {
    let [x, y, z] = p;
    match v {
        Vertex::One => [y * z - x, y, z],
        Vertex::Two => [x, x * z - y, z],
        Vertex::Three => [x, y, x * y - z],
    }
}

pub fn component_of(p: RealPoint) -> Result<Component> {
    let c = markov_constant_real(p);
    if !(-REAL_EPS..=4.0 + REAL_EPS).contains(&c) {
        return Err(Error::ConstantOutOfRange {
            point: p,
            constant: c,
        });
    }
    let is_cone_point = p.iter().all(|v| (v.abs() - 2.0).abs() <= REAL_EPS)
        && p.iter().filter(|v| v.is_sign_negative()).count() % 2 == 0;
    if is_cone_point {
        return Err(Error::SingularPoint(p));
    }
    if p.iter().all(|v| v.abs() <= 2.0) {
        return Ok(Component::Compact);
    }
    match p.map(|v| v > 0.0) {
        [true, true, true] => Ok(Component::PosPosPos),
        [false, false, true] => Ok(Component::NegNegPos),
        [false, true, false] => Ok(Component::NegPosNeg),
        [true, false, false] => Ok(Component::PosNegNeg),
        _ => Err(Error::NoComponent(p)),
    }
}
