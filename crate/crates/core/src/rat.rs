//! Small helpers around [`Rational64`], including a serde encoding that
//! writes integral values as JSON numbers and everything else as `"p/q"`.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Q = Rational64;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `coeff * x` rendered as a term, e.g. `3/2 x`, `-x`, or empty for zero.
pub(crate) fn fmt_term(coeff: &Q, var: &str) -> String {
    if coeff.is_one() {
        var.to_string()
    } else if *coeff == -Q::one() {
        format!("-{var}")
    } else {
        format!("{}{}", fmt_q(coeff), var)
    }
}

/// Render a vector in a named basis: `[3, 2]` over `(a, b)` gives `3a+2b`.
pub fn fmt_combination(coords: &[Q], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coords.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let term = fmt_term(&c.abs(), name);
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                return None;
            }
            Some(Q::new(n.trim().parse().ok()?, d))
        }
        None => s.parse().ok().map(Q::from_integer),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum QRepr {
    Int(i64),
    Str(String),
}

impl From<&Q> for QRepr {
    fn from(x: &Q) -> Self {
        if x.is_integer() {
            QRepr::Int(x.to_integer())
        } else {
            QRepr::Str(fmt_q(x))
        }
    }
}

impl QRepr {
    fn into_q<E: serde::de::Error>(self) -> Result<Q, E> {
        match self {
            QRepr::Int(n) => Ok(Q::from_integer(n)),
            QRepr::Str(s) => parse_q(&s).ok_or_else(|| E::custom(format!("bad rational {s:?}"))),
        }
    }
}

pub mod qser {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        QRepr::from(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        QRepr::deserialize(d)?.into_q()
    }
}

pub mod qvec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(QRepr::from))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<QRepr>::deserialize(d)?
            .into_iter()
            .map(QRepr::into_q)
            .collect()
    }
}

pub mod qopt {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        x.as_ref().map(QRepr::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        match Option::<QRepr>::deserialize(d)? {
            Some(r) => r.into_q().map(Some),
            None => Ok(None),
        }
    }
}

pub mod qvec_opt {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &Option<Vec<Q>>, s: S) -> Result<S::Ok, S::Error> {
        xs.as_ref().map(|v| v.iter().map(QRepr::from).collect::<Vec<_>>()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Q>>, D::Error> {
        match Option::<Vec<QRepr>>::deserialize(d)? {
            Some(v) => v.into_iter().map(QRepr::into_q).collect::<Result<_, _>>().map(Some),
            None => Ok(None),
        }
    }
}

/// The JSON encoding used by [`qser`], as a value.
pub fn q_json(x: &Q) -> serde_json::Value {
    serde_json::to_value(QRepr::from(x)).expect("rational encodes")
}

pub fn qvec_json(xs: &[Q]) -> serde_json::Value {
    serde_json::Value::Array(xs.iter().map(q_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_encoding_mixes_numbers_and_fractions() {
        #[derive(Serialize, Deserialize, PartialEq, Debug)]
        struct W {
            #[serde(with = "qvec")]
            v: Vec<Q>,
        }
        let w = W { v: vec![qi(2), q(3, 2), qi(-1)] };
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"v":[2,"3/2",-1]}"#);
        assert_eq!(serde_json::from_str::<W>(&s).unwrap(), w);
        assert!(serde_json::from_str::<W>(r#"{"v":["1/0"]}"#).is_err());
    }

    #[test]
    fn combination_rendering() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(fmt_combination(&[qi(3), qi(2)], &names), "3a + 2b");
        assert_eq!(fmt_combination(&[qi(0), qi(-1)], &names), "-b");
        assert_eq!(fmt_combination(&[q(1, 2), qi(-1)], &names), "1/2a - b");
        assert_eq!(fmt_combination(&[qi(0), qi(0)], &names), "0");
    }
}
