//! Deciding cluster-cyclicity.
//!
//! Three independent routes decide whether a non-negative triple is
//! cluster-cyclic:
//!
//! * [`acyclic_by_constant`]: the Markov constant exceeds 4 or some entry is
//!   below 2;
//! * [`cyclic_by_band`]: all entries are at least 2 and `z` lies in the band
//!   `[m-(x, y), m+(x, y)]`, tested with exact integers;
//! * [`descend`]: mutate downhill until the triple either lands in the
//!   fundamental domain `F` or acquires a non-positive entry.
//!
//! They agree on every input; the acceptance suite checks this exhaustively.

mod band;
pub mod geometry;

pub use band::{band_functions, m_minus, m_plus, BandFunctions};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triple::{decimal, GroupWord, Letter, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Cyclic,
    Acyclic,
}

/// Outcome of [`descend`].
///
/// For a cyclic verdict `representative` is the unique orbit element in `F`.
/// For an acyclic verdict it is the first triple reached with an entry
/// `<= 0`. In both cases `input.apply_word(&witness) == representative`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub representative: Triple,
    pub witness: GroupWord,
    #[serde(with = "decimal")]
    pub constant: BigInt,
}

impl Classification {
    pub fn is_cyclic(&self) -> bool {
        self.verdict == Verdict::Cyclic
    }
}

fn require_nonnegative(t: &Triple) -> Result<()> {
    if t.is_nonnegative() {
        Ok(())
    } else {
        Err(Error::NegativeEntry(t.clone()))
    }
}

/// `C(t) > 4` or `min(t) < 2`. Returns `true` for cluster-acyclic triples.
pub fn acyclic_by_constant(t: &Triple) -> Result<bool> {
    require_nonnegative(t)?;
    let two = BigInt::from(2);
    Ok(t.markov_constant() > BigInt::from(4) || t.min_entry() < &two)
}

/// `x, y, z >= 2` and `(2z - xy)^2 <= (x^2 - 4)(y^2 - 4)`. Returns `true` for
/// cluster-cyclic triples.
///
/// The squared inequality is the exact form of `m-(x,y) <= z <= m+(x,y)`.
pub fn cyclic_by_band(t: &Triple) -> Result<bool> {
    require_nonnegative(t)?;
    let two = BigInt::from(2);
    if t.min_entry() < &two {
        return Ok(false);
    }
    let Triple { x, y, z } = t;
    let four = BigInt::from(4);
    let centred = &two * z - x * y;
    Ok(&centred * &centred <= (x * x - &four) * (y * y - &four))
}

/// `x >= y >= z >= 2` and `yz >= 2x`.
pub fn in_fundamental_domain(t: &Triple) -> bool {
    let Triple { x, y, z } = t;
    let two = BigInt::from(2);
    x >= y && y >= z && z >= &two && y * z >= &two * x
}

/// `F` with the `(u, u, 2)` family removed, i.e. `F` intersected with `C < 4`.
pub fn in_open_domain(t: &Triple) -> bool {
    in_fundamental_domain(t) && t.markov_constant() < BigInt::from(4)
}

/// Mutation descent.
///
/// Each round sorts the triple into descending order and, while every entry
/// is at least 2, applies `mu1` if it strictly lowers the largest entry. When
/// `yz >= 2x` no mutation lowers the triple, it is in `F`, and the orbit is
/// cluster-cyclic. An entry of 0 or below ends the descent as acyclic; an
/// entry of exactly 1 is finished off by `(x, y, 1) -> (y - x, y, 1)`.
pub fn descend(t: &Triple) -> Result<Classification> {
    require_nonnegative(t)?;
    let constant = t.markov_constant();
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    let mut witness = GroupWord::new();
    let mut current = t.clone();

    let verdict = loop {
        if current.has_nonpositive_entry() {
            break Verdict::Acyclic;
        }
        let (sort, sorted) = current.sorting_word();
        witness.0.extend(sort.0);
        current = sorted;

        if current.z == one {
            // Sorted, so x >= y >= 1 and y - x <= 0.
            current = Letter::Mu1.apply(&current);
            witness.push(Letter::Mu1);
            break Verdict::Acyclic;
        }

        debug_assert!(current.z >= two);
        if &current.y * &current.z >= &two * &current.x {
            break Verdict::Cyclic;
        }
        current = Letter::Mu1.apply(&current);
        witness.push(Letter::Mu1);
    };

    Ok(Classification {
        verdict,
        representative: current,
        witness,
        constant,
    })
}

/// The unique element of `F` in the orbit of a cluster-cyclic triple.
pub fn fundamental_representative(t: &Triple) -> Result<Triple> {
    let c = descend(t)?;
    match c.verdict {
        Verdict::Cyclic => Ok(c.representative),
        Verdict::Acyclic => Err(Error::NotCyclic(t.clone())),
    }
}

/// Verdict for any triple of `Z^3`: a triple with a non-positive entry
/// already encodes an acyclic quiver, otherwise [`descend`] decides.
pub fn verdict_of(t: &Triple) -> Verdict {
    if t.has_nonpositive_entry() {
        Verdict::Acyclic
    } else {
        descend(t).expect("positive entries").verdict
    }
}
