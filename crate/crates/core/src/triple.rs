//! Signed arrow-count triples and the action of the extended mutation group.
//!
//! A [`Triple`] `(x, y, z)` stands for the cyclic quiver with `x` arrows
//! `1 -> 2`, `y` arrows `2 -> 3` and `z` arrows `3 -> 1`. The group acting on
//! triples is generated by the three mutations
//!
//! ```text
//! mu1: (x, y, z) -> (yz - x, y, z)
//! mu2: (x, y, z) -> (x, xz - y, z)
//! mu3: (x, y, z) -> (x, y, xy - z)
//! ```
//!
//! together with the coordinate permutations. Every generator is an
//! involution. The formulas are applied on all of `Z^3`; they agree with
//! quiver mutation only while the quiver stays cyclic, so callers that track
//! actual quivers stop once an entry becomes non-positive.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the three quiver vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    One,
    Two,
    Three,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::One, Vertex::Two, Vertex::Three];

    /// Zero-based coordinate position.
    pub fn index(self) -> usize {
        match self {
            Vertex::One => 0,
            Vertex::Two => 1,
            Vertex::Three => 2,
        }
    }

    pub fn from_index(i: usize) -> Vertex {
        Vertex::ALL[i]
    }
}

impl TryFrom<u8> for Vertex {
    type Error = Error;

    fn try_from(i: u8) -> Result<Vertex> {
        match i {
            1 => Ok(Vertex::One),
            2 => Ok(Vertex::Two),
            3 => Ok(Vertex::Three),
            other => Err(Error::InvalidVertex(other)),
        }
    }
}

/// A permutation of the three coordinates. The entry at position `i` moves to
/// position `image[i]` (all zero-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: [usize; 3],
}

impl Permutation {
    pub const IDENTITY: Permutation = Permutation { image: [0, 1, 2] };

    /// Builds a permutation from one-based images, e.g. `[2, 1, 3]` swaps the
    /// first two coordinates.
    pub fn from_images(images: [u8; 3]) -> Result<Permutation> {
        let mut seen = [false; 3];
        let mut image = [0usize; 3];
        for (slot, &img) in images.iter().enumerate() {
            if !(1..=3).contains(&img) || seen[(img - 1) as usize] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[(img - 1) as usize] = true;
            image[slot] = (img - 1) as usize;
        }
        Ok(Permutation { image })
    }

    /// The transposition exchanging vertices `a` and `b`.
    pub fn transposition(a: Vertex, b: Vertex) -> Permutation {
        let mut image = [0, 1, 2];
        image.swap(a.index(), b.index());
        Permutation { image }
    }

    /// All six elements of S3, identity first.
    pub fn all() -> [Permutation; 6] {
        [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]]
            .map(|image| Permutation { image })
    }

    pub fn apply_to_vertex(&self, v: Vertex) -> Vertex {
        Vertex::from_index(self.image[v.index()])
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = [0; 3];
        for (i, &j) in self.image.iter().enumerate() {
            image[j] = i;
        }
        Permutation { image }
    }
}

/// A generator of the extended group: a mutation or a transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    Mu1,
    Mu2,
    Mu3,
    Swap12,
    Swap13,
    Swap23,
}

impl Letter {
    pub const ALL: [Letter; 6] = [
        Letter::Mu1,
        Letter::Mu2,
        Letter::Mu3,
        Letter::Swap12,
        Letter::Swap13,
        Letter::Swap23,
    ];

    pub const MUTATIONS: [Letter; 3] = [Letter::Mu1, Letter::Mu2, Letter::Mu3];

    pub fn mutation(v: Vertex) -> Letter {
        match v {
            Vertex::One => Letter::Mu1,
            Vertex::Two => Letter::Mu2,
            Vertex::Three => Letter::Mu3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::Mu1 => "mu1",
            Letter::Mu2 => "mu2",
            Letter::Mu3 => "mu3",
            Letter::Swap12 => "swap12",
            Letter::Swap13 => "swap13",
            Letter::Swap23 => "swap23",
        }
    }

    pub fn is_mutation(self) -> bool {
        matches!(self, Letter::Mu1 | Letter::Mu2 | Letter::Mu3)
    }

    pub fn apply(self, t: &Triple) -> Triple {
        match self {
            Letter::Mu1 => t.mutate(Vertex::One),
            Letter::Mu2 => t.mutate(Vertex::Two),
            Letter::Mu3 => t.mutate(Vertex::Three),
            Letter::Swap12 => t.permute(&Permutation::transposition(Vertex::One, Vertex::Two)),
            Letter::Swap13 => t.permute(&Permutation::transposition(Vertex::One, Vertex::Three)),
            Letter::Swap23 => t.permute(&Permutation::transposition(Vertex::Two, Vertex::Three)),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        Letter::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidLetter(s.to_string()))
    }
}

/// A word in the generators, applied left to right.
///
/// Every letter is an involution, so the inverse of a word is its reversal.
/// Words are not reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupWord(pub Vec<Letter>);

impl GroupWord {
    pub fn new() -> GroupWord {
        GroupWord(Vec::new())
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().copied().collect())
    }

    /// Number of mutation letters in the word.
    pub fn mutation_count(&self) -> usize {
        self.0.iter().filter(|l| l.is_mutation()).count()
    }
}

impl FromIterator<Letter> for GroupWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        GroupWord(iter.into_iter().collect())
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|l| l.name()).collect();
        write!(f, "[{}]", names.join(", "))
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    /// Parses a comma-separated list such as `mu1,swap12,mu3`. The empty
    /// string is the empty word.
    fn from_str(s: &str) -> Result<GroupWord> {
        s.split(',')
            .map(str::trim)
            .filter(|part| !part.is_empty())
            .map(Letter::from_str)
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }
}

/// How many of the three mutations do not decrease a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MCase {
    /// All three.
    M1,
    /// Exactly two.
    M2,
    /// At most one.
    M3,
}

/// A point of `Z^3`. Ordering is lexicographic in `(x, y, z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
}

impl Triple {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Triple {
        Triple {
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    pub fn from_array([x, y, z]: [BigInt; 3]) -> Triple {
        Triple { x, y, z }
    }

    pub fn into_array(self) -> [BigInt; 3] {
        [self.x, self.y, self.z]
    }

    pub fn get(&self, v: Vertex) -> &BigInt {
        match v {
            Vertex::One => &self.x,
            Vertex::Two => &self.y,
            Vertex::Three => &self.z,
        }
    }

    pub fn entries(&self) -> [&BigInt; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn min_entry(&self) -> &BigInt {
        self.entries().into_iter().min().expect("three entries")
    }

    pub fn max_entry(&self) -> &BigInt {
        self.entries().into_iter().max().expect("three entries")
    }

    /// Largest absolute value of an entry.
    pub fn max_abs(&self) -> BigInt {
        self.entries()
            .into_iter()
            .map(|e| e.abs())
            .max()
            .expect("three entries")
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().into_iter().all(|e| !e.is_negative())
    }

    /// True when some entry is `<= 0`, i.e. the triple no longer describes a
    /// cyclic orientation.
    pub fn has_nonpositive_entry(&self) -> bool {
        self.entries().into_iter().any(|e| !e.is_positive())
    }

    /// `x^2 + y^2 + z^2 - xyz`.
    pub fn markov_constant(&self) -> BigInt {
        let Triple { x, y, z } = self;
        x * x + y * y + z * z - x * y * z
    }

    /// The new value the mutation at `v` would put in position `v`.
    pub fn mutated_entry(&self, v: Vertex) -> BigInt {
        let Triple { x, y, z } = self;
        match v {
            Vertex::One => y * z - x,
            Vertex::Two => x * z - y,
            Vertex::Three => x * y - z,
        }
    }

    pub fn mutate(&self, v: Vertex) -> Triple {
        let mut out = self.clone();
        let value = self.mutated_entry(v);
        match v {
            Vertex::One => out.x = value,
            Vertex::Two => out.y = value,
            Vertex::Three => out.z = value,
        }
        out
    }

    pub fn permute(&self, sigma: &Permutation) -> Triple {
        let mut slots: [Option<BigInt>; 3] = [None, None, None];
        for (i, value) in self.entries().into_iter().enumerate() {
            slots[sigma.image[i]] = Some(value.clone());
        }
        let [x, y, z] = slots.map(|s| s.expect("permutation is a bijection"));
        Triple { x, y, z }
    }

    pub fn apply_word(&self, word: &GroupWord) -> Triple {
        word.letters()
            .iter()
            .fold(self.clone(), |t, letter| letter.apply(&t))
    }

    /// Entries reordered so that `x >= y >= z`.
    pub fn sorted_descending(&self) -> Triple {
        let mut e = [self.x.clone(), self.y.clone(), self.z.clone()];
        e.sort_by(|a, b| b.cmp(a));
        Triple::from_array(e)
    }

    /// Transpositions that sort the triple into descending order, together
    /// with the sorted triple.
    pub fn sorting_word(&self) -> (GroupWord, Triple) {
        let mut word = GroupWord::new();
        let mut t = self.clone();
        // Three-element bubble sort.
        for (letter, a, b) in [
            (Letter::Swap12, 0, 1),
            (Letter::Swap23, 1, 2),
            (Letter::Swap12, 0, 1),
        ] {
            let e = t.entries();
            if e[a] < e[b] {
                t = letter.apply(&t);
                word.push(letter);
            }
        }
        (word, t)
    }

    /// Number of mutations whose image is `>=` the triple in the componentwise
    /// order. Only the changed coordinate needs comparing, and ties count.
    pub fn non_decreasing_mutations(&self) -> usize {
        Vertex::ALL
            .into_iter()
            .filter(|&v| &self.mutated_entry(v) >= self.get(v))
            .count()
    }

    pub fn m_case(&self) -> MCase {
        match self.non_decreasing_mutations() {
            3 => MCase::M1,
            2 => MCase::M2,
            _ => MCase::M3,
        }
    }

    /// True when every mutation fixes the triple.
    pub fn is_mutation_fixed_point(&self) -> bool {
        Vertex::ALL
            .into_iter()
            .all(|v| &self.mutated_entry(v) == self.get(v))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl From<(i64, i64, i64)> for Triple {
    fn from((x, y, z): (i64, i64, i64)) -> Triple {
        Triple::new(x, y, z)
    }
}

/// Parses a decimal integer of any size, accepting an optional sign.
pub fn parse_integer(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::ParseInt(s.to_string()))
}

impl FromStr for Triple {
    type Err = Error;

    /// Accepts `x,y,z` with optional surrounding parentheses.
    fn from_str(s: &str) -> Result<Triple> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::ParseInt(s.to_string()));
        }
        Ok(Triple::new(
            parse_integer(parts[0])?,
            parse_integer(parts[1])?,
            parse_integer(parts[2])?,
        ))
    }
}

// Triples cross the JSON boundary as `["x", "y", "z"]` so that big values are
// preserved exactly.
impl Serialize for Triple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(3)?;
        for e in self.entries() {
            tup.serialize_element(&e.to_string())?;
        }
        tup.end()
    }
}

impl<'de> Deserialize<'de> for Triple {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Triple, D::Error> {
        struct TripleVisitor;

        impl<'de> Visitor<'de> for TripleVisitor {
            type Value = Triple;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of three decimal strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Triple, A::Error> {
                let mut entries: Vec<BigInt> = Vec::with_capacity(3);
                while let Some(s) = seq.next_element::<String>()? {
                    entries.push(parse_integer(&s).map_err(de::Error::custom)?);
                }
                let [x, y, z]: [BigInt; 3] = entries
                    .try_into()
                    .map_err(|v: Vec<BigInt>| de::Error::invalid_length(v.len(), &self))?;
                Ok(Triple { x, y, z })
            }
        }

        deserializer.deserialize_tuple(3, TripleVisitor)
    }
}

/// Serde helpers for big integers written as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(deserializer)?;
        super::parse_integer(&s).map_err(serde::de::Error::custom)
    }
}
