//! JSON forms of the ring elements. Classes are named by their labels in the
//! class table, coefficients are JSON integers (strings when they overflow
//! `i64`) and rationals are strings such as `"-3/2"`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::burnside::{BurnsideElement, MarksVector};
use crate::error::{Error, Result};
use crate::groups::{Caps, ConjugacyClassTable, PermGroup, TableRef};
use crate::induced::ParksMapMatrix;
use crate::linalg::Rational;
use crate::partitions::DecoratedPartition;
use crate::wreath_power::{AAElement, ParksVector};

/// An integer coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff(pub BigInt);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Coeff(BigInt::from(v))),
            Raw::Text(t) => t
                .trim()
                .parse()
                .map(Coeff)
                .map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCoeff {
    pub class: String,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurnsideJson {
    #[serde(default)]
    pub group: String,
    pub coords: Vec<ClassCoeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartJson {
    pub class: String,
    pub size: usize,
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub parts: Vec<PartJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCoeff {
    pub partition: PartitionJson,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AAJson {
    #[serde(default)]
    pub group: String,
    pub n: usize,
    pub coords: Vec<PartitionCoeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassValue {
    pub class: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarksJson {
    pub group: String,
    pub values: Vec<ClassValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionValue {
    pub partition: PartitionJson,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParksJson {
    pub group: String,
    pub n: usize,
    pub values: Vec<PartitionValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParksMapJson {
    pub source: String,
    pub target: String,
    pub n: usize,
    pub rows: Vec<PartitionJson>,
    pub cols: Vec<PartitionJson>,
    pub entries: Vec<Vec<String>>,
}

/// Builds a group from its spec string together with its class table.
pub fn table_for_spec(spec: &str, caps: &Caps) -> Result<TableRef> {
    let g = Arc::new(PermGroup::from_spec(spec, caps)?);
    Ok(Arc::new(ConjugacyClassTable::new(g, caps)?))
}

/// An empty spec is accepted for any group.
fn check_group(spec: &str, table: &TableRef) -> Result<()> {
    let g = table.group();
    if spec.is_empty() || spec == g.spec_string() || spec == g.label() {
        return Ok(());
    }
    let caps = Caps {
        max_elements: g.order().max(1),
        ..Caps::default()
    };
    match PermGroup::from_spec(spec, &caps) {
        Ok(other) if other.same_group(g) => Ok(()),
        _ => Err(Error::GroupMismatch),
    }
}

fn class_index(table: &TableRef, label: &str) -> Result<usize> {
    table.find_label(label).ok_or_else(|| {
        Error::Json(format!(
            "unknown class `{label}` in {}",
            table.group().label()
        ))
    })
}

fn parse_rational(text: &str) -> Result<Rational> {
    text.trim()
        .parse()
        .map_err(|_| Error::Json(format!("bad rational `{text}`")))
}

pub fn burnside_to_json(x: &BurnsideElement) -> BurnsideJson {
    let t = x.table();
    BurnsideJson {
        group: t.group().spec_string(),
        coords: x
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ClassCoeff {
                class: t.label(i).to_string(),
                coeff: Coeff(c.clone()),
            })
            .collect(),
    }
}

pub fn burnside_from_json(table: &TableRef, j: &BurnsideJson) -> Result<BurnsideElement> {
    check_group(&j.group, table)?;
    let mut coords = vec![BigInt::zero(); table.len()];
    for c in &j.coords {
        coords[class_index(table, &c.class)?] += &c.coeff.0;
    }
    Ok(BurnsideElement::from_big(table.clone(), coords))
}

pub fn partition_to_json(table: &TableRef, lambda: &DecoratedPartition) -> PartitionJson {
    PartitionJson {
        parts: lambda
            .parts()
            .map(|((x, m), k)| PartJson {
                class: table.label(x).to_string(),
                size: m,
                mult: k,
            })
            .collect(),
    }
}

pub fn partition_from_json(table: &TableRef, j: &PartitionJson) -> Result<DecoratedPartition> {
    let mut out = DecoratedPartition::empty();
    for p in &j.parts {
        if p.size == 0 {
            return Err(Error::Json("parts have positive size".into()));
        }
        out.insert(class_index(table, &p.class)?, p.size, p.mult);
    }
    Ok(out)
}

pub fn aa_to_json(x: &AAElement) -> AAJson {
    let t = x.table();
    AAJson {
        group: t.group().spec_string(),
        n: x.degree(),
        coords: x
            .terms()
            .map(|(l, c)| PartitionCoeff {
                partition: partition_to_json(t, l),
                coeff: Coeff(c.clone()),
            })
            .collect(),
    }
}

pub fn aa_from_json(table: &TableRef, j: &AAJson) -> Result<AAElement> {
    check_group(&j.group, table)?;
    let terms = j
        .coords
        .iter()
        .map(|c| Ok((partition_from_json(table, &c.partition)?, c.coeff.0.clone())))
        .collect::<Result<Vec<_>>>()?;
    AAElement::from_terms(table.clone(), j.n, terms)
}

pub fn marks_to_json(f: &MarksVector) -> MarksJson {
    let t = f.table();
    MarksJson {
        group: t.group().spec_string(),
        values: f
            .values()
            .iter()
            .enumerate()
            .map(|(i, v)| ClassValue {
                class: t.label(i).to_string(),
                value: v.to_string(),
            })
            .collect(),
    }
}

pub fn marks_from_json(table: &TableRef, j: &MarksJson) -> Result<MarksVector> {
    check_group(&j.group, table)?;
    let mut values = vec![Rational::zero(); table.len()];
    for v in &j.values {
        values[class_index(table, &v.class)?] = parse_rational(&v.value)?;
    }
    Ok(MarksVector::new(table.clone(), values))
}

pub fn parks_to_json(f: &ParksVector) -> ParksJson {
    let t = f.table();
    ParksJson {
        group: t.group().spec_string(),
        n: f.degree(),
        values: f
            .support()
            .map(|(l, v)| PartitionValue {
                partition: partition_to_json(t, l),
                value: v.to_string(),
            })
            .collect(),
    }
}

pub fn parks_from_json(table: &TableRef, j: &ParksJson) -> Result<ParksVector> {
    check_group(&j.group, table)?;
    let mut out = ParksVector::zero(table.clone(), j.n);
    for v in &j.values {
        let lambda = partition_from_json(table, &v.partition)?;
        if lambda.size() != j.n {
            return Err(Error::DegreeMismatch {
                expected: j.n,
                found: lambda.size(),
            });
        }
        out.set(lambda, parse_rational(&v.value)?);
    }
    Ok(out)
}

pub fn parks_map_to_json(m: &ParksMapMatrix) -> ParksMapJson {
    ParksMapJson {
        source: m.source().group().spec_string(),
        target: m.target().group().spec_string(),
        n: m.degree(),
        rows: m
            .rows()
            .iter()
            .map(|l| partition_to_json(m.target(), l))
            .collect(),
        cols: m
            .cols()
            .iter()
            .map(|l| partition_to_json(m.source(), l))
            .collect(),
        entries: m
            .entries()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect(),
    }
}

/// Pretty JSON text.
pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

pub fn from_str<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath_power::{parks_char, power_op};

    #[test]
    fn round_trips() {
        let caps = Caps::default();
        let t = table_for_spec("S3", &caps).unwrap();
        let x = BurnsideElement::from_coords(t.clone(), &[-1, 3, 0, 2]);
        let text = to_string(&burnside_to_json(&x));
        assert_eq!(
            burnside_from_json(&t, &from_str(&text).unwrap()).unwrap(),
            x
        );
        let p = power_op(&BurnsideElement::from_coords(t.clone(), &[1, 1, 0, 0]), 2).unwrap();
        let text = to_string(&aa_to_json(&p));
        assert_eq!(aa_from_json(&t, &from_str(&text).unwrap()).unwrap(), p);
        let f = parks_char(&p).scale(&crate::linalg::rat_frac(-1, 3));
        assert_eq!(
            parks_from_json(&t, &from_str(&to_string(&parks_to_json(&f))).unwrap()).unwrap(),
            f
        );
        let m = x.chi();
        assert_eq!(
            marks_from_json(&t, &from_str(&to_string(&marks_to_json(&m))).unwrap()).unwrap(),
            m
        );
    }

    #[test]
    fn documented_shapes() {
        let caps = Caps::default();
        let t = table_for_spec("S3", &caps).unwrap();
        let x = BurnsideElement::from_coords(t.clone(), &[-1, 3, 0, 0]);
        let v: serde_json::Value = serde_json::to_value(burnside_to_json(&x)).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"group": "S3", "coords": [{"class": "e", "coeff": -1}, {"class": "C2", "coeff": 3}]})
        );
        let big: Coeff = serde_json::from_str("\"123456789012345678901234567890\"").unwrap();
        assert_eq!(
            serde_json::to_string(&big).unwrap(),
            "\"123456789012345678901234567890\""
        );
        let other = table_for_spec("C3", &caps).unwrap();
        assert_eq!(
            burnside_from_json(&other, &burnside_to_json(&x)),
            Err(Error::GroupMismatch)
        );
    }
}
