//! Serde helpers: big integers serialize as decimal strings and rationals as
//! `"num/den"` (or plain `"num"` when integral), so reports never lose
//! exactness to a JSON number type.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn opt_bigint<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

pub fn rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn opt_bigint_triple<S: Serializer>(
    v: &Option<(BigInt, BigInt, BigInt)>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some((a, b, c)) => {
            let mut seq = s.serialize_seq(Some(3))?;
            seq.serialize_element(&a.to_string())?;
            seq.serialize_element(&b.to_string())?;
            seq.serialize_element(&c.to_string())?;
            seq.end()
        }
        None => s.serialize_none(),
    }
}
