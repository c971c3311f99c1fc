//! JSON encoding of solutions.
//!
//! A solution is `{"k": 3, "lhs": [29, 22], "rhs": [30, 20, 4, -3]}`. Terms
//! are JSON numbers while they fit the 53-bit range every JSON consumer can
//! represent exactly, and decimal strings beyond it. Decoding accepts either
//! form for any term, so encode/decode is lossless.

use num_bigint::BigInt;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::system::{Solution, Term};

/// Largest magnitude emitted as a bare JSON number: 2^53 - 1.
pub const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

#[derive(Deserialize)]
#[serde(untagged)]
enum TermRepr {
    Signed(i64),
    Unsigned(u64),
    Text(String),
}

fn encode_term<S: Serializer>(t: &Term, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(t) {
        Ok(v) if v.abs() <= MAX_SAFE_INTEGER => s.serialize_i64(v),
        _ => s.serialize_str(&t.to_string()),
    }
}

fn decode_term<E: de::Error>(repr: TermRepr) -> Result<Term, E> {
    match repr {
        TermRepr::Signed(v) => Ok(BigInt::from(v)),
        TermRepr::Unsigned(v) => Ok(BigInt::from(v)),
        TermRepr::Text(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| E::custom(format!("invalid integer term {s:?}"))),
    }
}

/// `serde(with = ...)` adapter for a list of terms.
pub mod terms {
    use super::*;

    pub fn serialize<S: Serializer>(terms: &[Term], s: S) -> Result<S::Ok, S::Error> {
        struct One<'a>(&'a Term);
        impl Serialize for One<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                encode_term(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for t in terms {
            seq.serialize_element(&One(t))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Term>, D::Error> {
        Vec::<TermRepr>::deserialize(d)?
            .into_iter()
            .map(decode_term)
            .collect()
    }
}

/// `serde(with = ...)` adapter for a single term.
pub mod term {
    use super::*;

    pub fn serialize<S: Serializer>(t: &Term, s: S) -> Result<S::Ok, S::Error> {
        encode_term(t, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Term, D::Error> {
        decode_term(TermRepr::deserialize(d)?)
    }
}

#[derive(Serialize, Deserialize)]
struct SolutionJson {
    k: u32,
    #[serde(with = "terms")]
    lhs: Vec<Term>,
    #[serde(with = "terms")]
    rhs: Vec<Term>,
}

impl Serialize for Solution {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SolutionJson {
            k: self.k(),
            lhs: self.lhs().to_vec(),
            rhs: self.rhs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Solution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SolutionJson::deserialize(d)?;
        Solution::new(raw.k, raw.lhs, raw.rhs).map_err(de::Error::custom)
    }
}

/// A solution together with the exponents it was checked for and its
/// triviality flag. This is the record the command-line tool prints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub k: u32,
    #[serde(with = "terms")]
    pub lhs: Vec<Term>,
    #[serde(with = "terms")]
    pub rhs: Vec<Term>,
    pub verified_r: Vec<u32>,
    pub trivial: bool,
}

impl From<&Solution> for SolutionRecord {
    fn from(s: &Solution) -> Self {
        SolutionRecord {
            k: s.k(),
            lhs: s.lhs().to_vec(),
            rhs: s.rhs().to_vec(),
            verified_r: s.exponents_holding(),
            trivial: s.is_trivial(),
        }
    }
}

impl SolutionRecord {
    pub fn to_solution(&self) -> crate::Result<Solution> {
        Solution::new(self.k, self.lhs.clone(), self.rhs.clone())
    }
}
