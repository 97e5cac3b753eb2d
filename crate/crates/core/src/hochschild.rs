//! First Hochschild cohomology of hereditary algebras of acyclic quivers
//! with three vertices, and its relation to the Markov constant.
//!
//! For a path algebra `H` of an acyclic quiver, Happel's formula gives
//! `dim H^1(H) = d - n + sum over arrows a of nu(a)`, where `d` counts
//! connected components, `n` vertices, and `nu(a)` the paths parallel to `a`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::Matrix3;
use crate::triple::{decimal, Triple};

/// The acyclic quiver with `r` arrows `1 -> 2`, `s` arrows `2 -> 3` and `t`
/// arrows `1 -> 3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AcyclicQuiver3 {
    #[serde(with = "decimal")]
    pub r: BigInt,
    #[serde(with = "decimal")]
    pub s: BigInt,
    #[serde(with = "decimal")]
    pub t: BigInt,
}

impl AcyclicQuiver3 {
    pub fn new(r: impl Into<BigInt>, s: impl Into<BigInt>, t: impl Into<BigInt>) -> Result<AcyclicQuiver3> {
        let q = AcyclicQuiver3 {
            r: r.into(),
            s: s.into(),
            t: t.into(),
        };
        if q.r.is_negative() || q.s.is_negative() || q.t.is_negative() {
            return Err(Error::NegativeArrowCount {
                r: q.r.to_string(),
                s: q.s.to_string(),
                t: q.t.to_string(),
            });
        }
        Ok(q)
    }

    /// Arrow multiplicities, `a[i][j]` arrows from vertex `i + 1` to `j + 1`.
    pub fn adjacency(&self) -> Matrix3 {
        let o = BigInt::zero;
        Matrix3([
            [o(), self.r.clone(), self.t.clone()],
            [o(), o(), self.s.clone()],
            [o(), o(), o()],
        ])
    }

    /// Connected components of the underlying undirected graph.
    pub fn components(&self) -> u32 {
        let links = [&self.r, &self.s, &self.t]
            .iter()
            .filter(|c| c.is_positive())
            .count() as u32;
        // Three vertices: any two links already connect everything.
        3 - links.min(2)
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    fn labels(&self) -> (String, String, String) {
        (self.r.to_string(), self.s.to_string(), self.t.to_string())
    }
}

impl std::fmt::Display for AcyclicQuiver3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Q({}, {}, {})", self.r, self.s, self.t)
    }
}

/// Number of paths parallel to an arrow of each class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathCounts {
    #[serde(with = "decimal")]
    pub one_two: BigInt,
    #[serde(with = "decimal")]
    pub two_three: BigInt,
    #[serde(with = "decimal")]
    pub one_three: BigInt,
}

/// All-lengths path counts `A + A^2 + ...` for the adjacency matrix `A`.
/// The quiver is acyclic, so the series stops after at most two terms.
fn path_matrix(q: &AcyclicQuiver3) -> Matrix3 {
    let a = q.adjacency();
    let mut total = a.clone();
    let mut power = a.clone();
    loop {
        power = &power * &a;
        if power.0.iter().flatten().all(Zero::is_zero) {
            break;
        }
        for i in 0..3 {
            for j in 0..3 {
                total.0[i][j] += &power.0[i][j];
            }
        }
    }
    total
}

pub fn path_counts(q: &AcyclicQuiver3) -> PathCounts {
    let p = path_matrix(q);
    PathCounts {
        one_two: p.0[0][1].clone(),
        two_three: p.0[1][2].clone(),
        one_three: p.0[0][2].clone(),
    }
}

/// `d - n + sum nu(a)` with every arrow counted with multiplicity.
pub fn dim_h1(q: &AcyclicQuiver3) -> BigInt {
    let a = q.adjacency();
    let p = path_matrix(q);
    let arrow_sum: BigInt = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| &a.0[i][j] * &p.0[i][j])
        .sum();
    BigInt::from(q.components()) - 3 + arrow_sum
}

/// `r^2 + s^2 + t^2 + rst - 2`, valid for connected quivers.
pub fn dim_h1_closed_form(q: &AcyclicQuiver3) -> Option<BigInt> {
    q.is_connected().then(|| {
        let AcyclicQuiver3 { r, s, t } = q;
        r * r + s * s + t * t + r * s * t - 2
    })
}

/// Mutating `Q(r, s, t)` at vertex 2 gives the cyclic quiver with
/// `t + rs` arrows `1 -> 3`, `s` arrows `3 -> 2` and `r` arrows `2 -> 1`.
/// Numbering `1, 3, 2` as `1, 2, 3` this is the triple `(t + rs, s, r)`.
pub fn mutate_to_cyclic(q: &AcyclicQuiver3) -> Result<Triple> {
    if !q.r.is_positive() || !q.s.is_positive() {
        let (r, s, t) = q.labels();
        return Err(Error::NoCycleAtVertexTwo { r, s, t });
    }
    Ok(Triple::new(&q.t + &q.r * &q.s, q.s.clone(), q.r.clone()))
}

/// Both sides of `C(cyclic) - 2 = dim H^1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionCheck {
    pub quiver: AcyclicQuiver3,
    pub cyclic: Triple,
    #[serde(with = "decimal")]
    pub constant: BigInt,
    #[serde(with = "decimal")]
    pub dim_h1: BigInt,
    pub holds: bool,
}

pub fn check_dimension_identity(q: &AcyclicQuiver3) -> Result<DimensionCheck> {
    if !q.is_connected() {
        let (r, s, t) = q.labels();
        return Err(Error::Disconnected { r, s, t });
    }
    let cyclic = mutate_to_cyclic(q)?;
    let constant = cyclic.markov_constant();
    let dim = dim_h1(q);
    Ok(DimensionCheck {
        quiver: q.clone(),
        holds: &constant - 2 == dim,
        cyclic,
        constant,
        dim_h1: dim,
    })
}

pub fn verify_dimension_identity(q: &AcyclicQuiver3) -> Result<bool> {
    check_dimension_identity(q).map(|c| c.holds)
}

/// All `Q(r, s, t)` with `r, s > 0`, `t >= 0` and `r^2 + s^2 + t^2 + rst = C`,
/// sorted. Each such algebra has `dim H^1 + 2 = C`.
pub fn hereditary_candidates(c: &BigInt) -> Vec<AcyclicQuiver3> {
    let mut out = Vec::new();
    if c < &BigInt::from(2) {
        return out;
    }
    let bound = c.sqrt();
    let mut r = BigInt::one();
    while r <= bound {
        let mut s = BigInt::one();
        while s <= bound {
            // t^2 + rs t + (r^2 + s^2 - C) = 0, larger root.
            let rs = &r * &s;
            let k = &r * &r + &s * &s - c;
            if !k.is_positive() {
                let disc: BigInt = &rs * &rs - 4 * &k;
                let root = disc.sqrt();
                if &root * &root == disc {
                    let twice_t = &root - &rs;
                    if !twice_t.is_negative() && (&twice_t % 2u32).is_zero() {
                        out.push(AcyclicQuiver3 {
                            r: r.clone(),
                            s: s.clone(),
                            t: twice_t / 2,
                        });
                    }
                }
            }
            s += 1;
        }
        r += 1;
    }
    out.sort();
    out
}
