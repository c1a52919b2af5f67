//! JSON exchange format for matrix tuples:
//!
//! ```json
//! { "field": "Fp:3", "n": 2, "g": 2, "form": "none",
//!   "mats": [[["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]] }
//! ```
//!
//! `field` is one of `Q`, `Fp:<p>`, `Q(x,y)`, `Q(sqrt x,y)`; `form` is one of
//! `none`, `symplectic`, `split-symmetric`; entries use the canonical text
//! form of the field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Symbols;
use crate::form::{BilForm, FormKind, Group};
use crate::matrix::{Mat, MatJson};
use crate::stability::ModTuple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormName {
    None,
    Symplectic,
    SplitSymmetric,
}

impl FormName {
    /// The group whose stability the form calls for.
    pub fn group(self) -> Group {
        match self {
            FormName::None => Group::GL,
            FormName::Symplectic => Group::Sp,
            FormName::SplitSymmetric => Group::SO,
        }
    }

    pub fn build<F: Symbols>(self, n: usize) -> Result<Option<BilForm<F>>> {
        if self != FormName::None && !n.is_multiple_of(2) {
            return Err(Error::Form(format!("standard forms need even dimension, got {}", n)));
        }
        Ok(match self {
            FormName::None => None,
            FormName::Symplectic => Some(BilForm::standard_symplectic(n / 2)),
            FormName::SplitSymmetric => Some(BilForm::split_symmetric(n / 2)),
        })
    }
}

/// The coefficient field named in a tuple file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Q,
    Fp(u32),
    RationalFunctions,
    QuadraticExtension,
}

impl FieldTag {
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse { offset: 0, msg: format!("unknown field '{}'", s) };
        match s {
            "Q" => Ok(FieldTag::Q),
            "Q(x,y)" => Ok(FieldTag::RationalFunctions),
            "Q(sqrt x,y)" => Ok(FieldTag::QuadraticExtension),
            _ => {
                let p: u32 = s.strip_prefix("Fp:").and_then(|p| p.parse().ok()).ok_or_else(bad)?;
                if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
                    return Err(Error::Parse { offset: 3, msg: format!("{} is not prime", p) });
                }
                Ok(FieldTag::Fp(p))
            }
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Q => write!(f, "Q"),
            FieldTag::Fp(p) => write!(f, "Fp:{}", p),
            FieldTag::RationalFunctions => write!(f, "Q(x,y)"),
            FieldTag::QuadraticExtension => write!(f, "Q(sqrt x,y)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleJson {
    pub field: String,
    pub n: usize,
    pub g: usize,
    pub form: FormName,
    pub mats: Vec<MatJson>,
}

impl TupleJson {
    /// Parses the document, reporting syntax and schema errors with byte offsets.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            let offset = text.split_inclusive('\n').take(e.line().saturating_sub(1)).map(str::len).sum::<usize>()
                + e.column().saturating_sub(1);
            Error::Parse { offset, msg: e.to_string() }
        })
    }

    pub fn field_tag(&self) -> Result<FieldTag> {
        FieldTag::parse(&self.field)
    }

    /// Builds the tuple over `F`, which must match the declared field.
    pub fn to_tuple<F: Symbols>(&self) -> Result<ModTuple<F>> {
        if self.field != F::field_name() {
            return Err(Error::Parse {
                offset: 0,
                msg: format!("file declares field {}, reading as {}", self.field, F::field_name()),
            });
        }
        if self.mats.len() != self.g {
            return Err(Error::Shape(format!("g = {} but {} matrices given", self.g, self.mats.len())));
        }
        let mats = self
            .mats
            .iter()
            .enumerate()
            .map(|(i, m)| {
                m.parse::<F>().map_err(|e| match e {
                    Error::Parse { offset, msg } => Error::Parse { offset, msg: format!("mats[{}]: {}", i, msg) },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ModTuple::new(self.n, mats, self.form.build(self.n)?)
    }

    pub fn from_tuple<F: Symbols>(t: &ModTuple<F>) -> Result<Self> {
        let form = match t.form() {
            None => FormName::None,
            Some(b) => {
                let half = t.n() / 2;
                let (name, std) = match b.kind() {
                    FormKind::Alternating => (FormName::Symplectic, BilForm::standard_symplectic(half)),
                    FormKind::Symmetric => (FormName::SplitSymmetric, BilForm::split_symmetric(half)),
                };
                if !t.n().is_multiple_of(2) || b.gram() != std.gram() {
                    return Err(Error::Form("only the standard forms are serializable".into()));
                }
                name
            }
        };
        Ok(TupleJson {
            field: F::field_name(),
            n: t.n(),
            g: t.g(),
            form,
            mats: t.mats().iter().map(MatJson::from).collect(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

pub fn tuple_to_json<F: Symbols>(t: &ModTuple<F>) -> Result<String> {
    Ok(TupleJson::from_tuple(t)?.to_json())
}

pub fn tuple_from_json<F: Symbols>(text: &str) -> Result<ModTuple<F>> {
    TupleJson::parse(text)?.to_tuple()
}

pub fn mat_to_json<F: Symbols>(m: &Mat<F>) -> MatJson {
    MatJson::from(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, Fp};
    use crate::K;

    #[test]
    fn roundtrip_finite_field() {
        let text = r#"{ "field": "Fp:3", "n": 2, "g": 2, "form": "none",
            "mats": [[["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]] }"#;
        let t: ModTuple<Fp<3>> = tuple_from_json(text).unwrap();
        assert_eq!(t.mats()[0], Mat::unit(2, 0, 1));
        let back: ModTuple<Fp<3>> = tuple_from_json(&tuple_to_json(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn roundtrip_extension() {
        let a = Mat::diag(&[K::s(), K::s().neg()]);
        let t = ModTuple::new(2, vec![a], Some(BilForm::standard_symplectic(1))).unwrap();
        let json = tuple_to_json(&t).unwrap();
        assert!(json.contains("Q(sqrt x,y)"));
        assert_eq!(tuple_from_json::<K>(&json).unwrap(), t);
    }

    #[test]
    fn errors_carry_locations() {
        let bad = "{ \"field\": \"Q\",\n  \"n\": \"two\" }";
        match TupleJson::parse(bad) {
            Err(Error::Parse { offset, .. }) => assert!(offset > 15),
            other => panic!("{:?}", other),
        }
        let text = r#"{ "field": "Q", "n": 1, "g": 1, "form": "none", "mats": [[["1/0"]]] }"#;
        assert!(matches!(tuple_from_json::<crate::Rational>(text), Err(Error::Parse { .. })));
        assert!(matches!(FieldTag::parse("Fp:9"), Err(Error::Parse { .. })));
        assert_eq!(FieldTag::parse("Fp:7").unwrap(), FieldTag::Fp(7));
    }
}
