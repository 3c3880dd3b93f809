//! JSON form of a hyperbicycle spec.
//!
//! Either explicit blocks, each a list of `0`/`1` row strings:
//!
//! ```json
//! { "c": 5, "chi": 3, "a": [["11", "01"], ...], "b": [...] }
//! ```
//!
//! or circulant blocks split from the circulants of `pa` and `pb` on
//! `c * nSmall` bits:
//!
//! ```json
//! { "c": 5, "chi": 3, "nSmall": 3, "pa": "1+x", "pb": "1+x" }
//! ```
//!
//! `css` defaults to true; `repeated` asks for the divisibility check of
//! repeated cyclic inputs.

use serde::{Deserialize, Serialize};

use crate::construct::{circulant_spec, repeated_cyclic_inputs, HyperbicycleSpec};
use crate::error::{parse_err, Error, Result};
use crate::gf2::BinMat;
use crate::poly::BinPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SpecFile {
    pub c: usize,
    #[serde(default = "one")]
    pub chi: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_small: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pa: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pb: Option<String>,
    #[serde(default)]
    pub repeated: bool,
    #[serde(default = "yes")]
    pub css: bool,
}

fn one() -> usize {
    1
}

fn yes() -> bool {
    true
}

fn blocks(rows: &[Vec<String>]) -> Result<Vec<BinMat>> {
    rows.iter()
        .map(|b| {
            let strs: Vec<&str> = b.iter().map(String::as_str).collect();
            BinMat::from_strs(&strs)
        })
        .collect()
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
    }

    pub fn to_spec(&self) -> Result<HyperbicycleSpec> {
        match (&self.a, &self.b, &self.n_small, &self.pa, &self.pb) {
            (Some(a), Some(b), None, None, None) => HyperbicycleSpec::new(self.c, self.chi, blocks(a)?, blocks(b)?),
            (None, None, Some(n), Some(pa), pb) => {
                let pa: BinPoly = pa.parse()?;
                let pb: BinPoly = match pb {
                    Some(s) => s.parse()?,
                    None => pa.clone(),
                };
                if self.repeated {
                    repeated_cyclic_inputs(&pa, *n, &pb, *n, self.c, self.chi)
                } else {
                    circulant_spec(*n, self.c, self.chi, &pa, &pb)
                }
            }
            _ => Err(Error::Invalid(
                "spec needs either both `a` and `b`, or `nSmall` with `pa` (and optionally `pb`)".into(),
            )),
        }
    }

    /// Explicit-block form of `spec`.
    pub fn from_spec(spec: &HyperbicycleSpec, css: bool) -> Self {
        let rows = |ms: &[BinMat]| ms.iter().map(BinMat::to_strings).collect();
        Self {
            c: spec.c,
            chi: spec.chi,
            a: Some(rows(&spec.a)),
            b: Some(rows(&spec.b)),
            n_small: None,
            pa: None,
            pb: None,
            repeated: false,
            css,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_form() {
        let f = SpecFile::parse(r#"{"c": 5, "chi": 3, "nSmall": 3, "pa": "1+x"}"#).unwrap();
        let spec = f.to_spec().unwrap();
        assert_eq!(spec.block_length(), 90);
        let back = SpecFile::parse(&SpecFile::from_spec(&spec, true).to_json()).unwrap();
        assert_eq!(back.to_spec().unwrap(), spec);
    }

    #[test]
    fn errors_carry_lines() {
        let err = SpecFile::parse("{\n  \"c\": 2,\n  \"chi\": x\n}").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = SpecFile::parse(r#"{"c": 2}"#).unwrap().to_spec().unwrap_err();
        assert!(err.to_string().contains("nSmall"));
    }

    #[test]
    fn commensurate_is_rejected() {
        let f = SpecFile::parse(r#"{"c": 4, "chi": 2, "nSmall": 3, "pa": "1+x"}"#).unwrap();
        assert!(matches!(f.to_spec(), Err(Error::Commensurate { c: 4, chi: 2 })));
    }
}
