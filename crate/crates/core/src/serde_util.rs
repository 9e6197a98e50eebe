//! Serde helpers: rationals and big integers travel as canonical strings
//! (`p` or `p/q`), never as floats, and Puiseux series use the fixed
//! `{"center": ..., "terms": [{"exp": ..., "coeff": ...}]}` schema.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::newton::Branch;
use crate::puiseux::OrderValue;
use crate::scalar::parse_rat;
use crate::{Int, Rat, Series, SeriesVec};

/// `#[serde(with = "rat_str")]` for `Rat` fields.
pub mod rat_str {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        parse_rat(&s).map_err(DeError::custom)
    }
}

/// `#[serde(with = "rat_str_opt")]` for `Option<Rat>` fields.
pub mod rat_str_opt {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<Rat>, ser: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => ser.serialize_some(&v.to_string()),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rat>, D::Error> {
        let s: Option<String> = Option::deserialize(de)?;
        s.map(|v| parse_rat(&v).map_err(DeError::custom)).transpose()
    }
}

/// `#[serde(with = "rat_str_vec")]` for `Vec<Rat>` fields.
pub mod rat_str_vec {
    use super::*;

    pub fn serialize<S: Serializer>(value: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = value.iter().map(|v| v.to_string()).collect();
        strings.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rat>, D::Error> {
        let strings: Vec<String> = Vec::deserialize(de)?;
        strings
            .iter()
            .map(|s| parse_rat(s).map_err(DeError::custom))
            .collect()
    }
}

/// `#[serde(with = "int_str")]` for `Int` fields.
pub mod int_str {
    use super::*;
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(value: &Int, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Int, D::Error> {
        let s = String::deserialize(de)?;
        Int::from_str(s.trim()).map_err(DeError::custom)
    }
}

impl Serialize for OrderValue {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            OrderValue::Infinite => ser.serialize_str("inf"),
            OrderValue::Finite(v) => ser.serialize_str(&v.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for OrderValue {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        if s.trim() == "inf" {
            return Ok(OrderValue::Infinite);
        }
        parse_rat(&s)
            .map(OrderValue::Finite)
            .map_err(DeError::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    center: String,
    terms: Vec<TermRepr>,
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let repr = SeriesRepr {
            center: self.center().to_string(),
            terms: self
                .terms()
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: e.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(de)?;
        let center = parse_rat(&repr.center).map_err(DeError::custom)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in &repr.terms {
            let exp = parse_rat(&t.exp).map_err(DeError::custom)?;
            let coeff = parse_rat(&t.coeff).map_err(DeError::custom)?;
            terms.push((exp, coeff));
        }
        Ok(Series::from_terms(center, terms))
    }
}

impl Serialize for SeriesVec {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.components().serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SeriesVec {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let components: Vec<Series> = Vec::deserialize(de)?;
        SeriesVec::new(components).map_err(DeError::custom)
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct BranchRepr<'a> {
            expansion: &'a Series,
            attained_precision: String,
            status: crate::newton::BranchStatus,
            residual_order: &'a OrderValue,
        }
        BranchRepr {
            expansion: &self.expansion,
            attained_precision: self.attained_precision.to_string(),
            status: self.status,
            residual_order: &self.residual_order,
        }
        .serialize(ser)
    }
}
