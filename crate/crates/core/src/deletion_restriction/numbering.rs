//! Serialized hyperplane indices are 1-based, matching the command-line flags.

use serde::ser::{SerializeSeq, Serializer};

pub fn one<S: Serializer>(i: &usize, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(*i as u64 + 1)
}

pub fn all<S: Serializer>(v: &[usize], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for i in v {
        seq.serialize_element(&(*i as u64 + 1))?;
    }
    seq.end()
}
