//! Curve files: `key: value` lines naming the variables, the characteristic
//! and the cubic.
//!
//! ```text
//! # the Fermat cubic
//! variables: x0, x1, x2
//! char: 0
//! cubic: x0^3 + x1^3 + x2^3
//! ```
//!
//! `variables` defaults to `x0, x1, x2` and `char` to 0.

use std::path::Path;

use crate::error::{Error, Result};
use crate::segre::CubicCurve;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub variables: Vec<String>,
    pub characteristic: u64,
    pub cubic: String,
}

impl CurveSpec {
    pub fn parse(text: &str) -> Result<CurveSpec> {
        let mut variables = None;
        let mut characteristic = None;
        let mut cubic = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::CurveFile(format!("line {}: expected `key: value`", lineno + 1)))?;
            let value = value.trim();
            let slot_taken = |what: &str| Error::CurveFile(format!("line {}: duplicate `{what}`", lineno + 1));
            match key.trim() {
                "variables" => {
                    let vars: Vec<String> = value
                        .split([',', ' '])
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect();
                    if variables.replace(vars).is_some() {
                        return Err(slot_taken("variables"));
                    }
                }
                "char" | "characteristic" => {
                    let c: u64 = value
                        .parse()
                        .map_err(|_| Error::CurveFile(format!("line {}: bad characteristic `{value}`", lineno + 1)))?;
                    if characteristic.replace(c).is_some() {
                        return Err(slot_taken("char"));
                    }
                }
                "cubic" => {
                    if cubic.replace(value.to_string()).is_some() {
                        return Err(slot_taken("cubic"));
                    }
                }
                other => {
                    return Err(Error::CurveFile(format!("line {}: unknown key `{other}`", lineno + 1)));
                }
            }
        }
        let variables = variables.unwrap_or_else(|| vec!["x0".into(), "x1".into(), "x2".into()]);
        if variables.len() != 3 {
            return Err(Error::CurveFile(format!(
                "expected 3 variables, found {}",
                variables.len()
            )));
        }
        Ok(CurveSpec {
            variables,
            characteristic: characteristic.unwrap_or(0),
            cubic: cubic.ok_or_else(|| Error::CurveFile("missing `cubic`".into()))?,
        })
    }

    pub fn read(path: &Path) -> Result<CurveSpec> {
        CurveSpec::parse(&std::fs::read_to_string(path)?)
    }

    /// The curve over the file's own characteristic.
    pub fn curve(&self) -> Result<CubicCurve> {
        self.curve_over(self.characteristic)
    }

    /// The curve parsed directly over characteristic `c`.
    pub fn curve_over(&self, c: u64) -> Result<CubicCurve> {
        let vars: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        CubicCurve::parse(c, &vars, &self.cubic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_file() {
        let spec = CurveSpec::parse("# c\nvariables: a, b, c\nchar: 7\ncubic: a^3 + b^3 + c^3\n").unwrap();
        assert_eq!(spec.variables, ["a", "b", "c"]);
        assert_eq!(spec.characteristic, 7);
        let c = spec.curve().unwrap();
        assert_eq!(c.characteristic(), 7);
        assert_eq!(spec.curve_over(0).unwrap().characteristic(), 0);
    }

    #[test]
    fn defaults_and_errors() {
        let spec = CurveSpec::parse("cubic: x0^3 + x1^3 + x2^3").unwrap();
        assert_eq!(spec.characteristic, 0);
        assert!(CurveSpec::parse("char: 5").is_err());
        assert!(CurveSpec::parse("cubic x^3").is_err());
        assert!(CurveSpec::parse("variables: x, y\ncubic: x^3").is_err());
        assert!(CurveSpec::parse("cubic: x0^3\ncubic: x1^3").is_err());
        assert!(CurveSpec::parse("colour: red\ncubic: x0^3").is_err());
        let spec = CurveSpec::parse("cubic: x0^2").unwrap();
        assert!(matches!(spec.curve(), Err(Error::NotCubic(_))));
    }
}
