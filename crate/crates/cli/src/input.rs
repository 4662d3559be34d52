//! Loading curves and ideals named on the command line.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use segrelab::curvefile::CurveSpec;
use segrelab::depthlab::{example_ideal, Fixture};
use segrelab::segre::CubicCurve;
use segrelab::{Ideal, PolyRing};

/// The curve file's cubic, or the Fermat cubic when no file is given.
pub fn load_curve(path: Option<&Path>) -> Result<CurveSpec> {
    match path {
        Some(p) => CurveSpec::read(p).with_context(|| format!("reading {}", p.display())),
        None => Ok(CurveSpec {
            variables: vec!["x0".into(), "x1".into(), "x2".into()],
            characteristic: 0,
            cubic: "x0^3 + x1^3 + x2^3".into(),
        }),
    }
}

/// The curve over `char` if given, else over the file's characteristic.
pub fn curve_over(spec: &CurveSpec, char: Option<u64>) -> Result<CubicCurve> {
    Ok(spec.curve_over(char.unwrap_or(spec.characteristic))?)
}

/// An ideal file: `variables:`, `char:` and `generators:` lines, with the
/// generators separated by commas or semicolons.
pub fn parse_ideal_file(text: &str, char_override: Option<u64>) -> Result<Ideal> {
    let mut vars = None;
    let mut char = 0u64;
    let mut gens = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            bail!("line {}: expected `key: value`", n + 1);
        };
        let value = value.trim();
        match key.trim() {
            "variables" => {
                vars = Some(
                    value
                        .split([',', ' '])
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect::<Vec<_>>(),
                )
            }
            "char" | "characteristic" => {
                char = value.parse().with_context(|| format!("line {}: bad characteristic", n + 1))?
            }
            "generators" | "generator" => gens.extend(
                value
                    .split([',', ';'])
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(str::to_string),
            ),
            other => bail!("line {}: unknown key `{other}`", n + 1),
        }
    }
    let Some(vars) = vars else {
        bail!("ideal file lacks a `variables` line");
    };
    let ring = PolyRing::with_characteristic(&vars, char_override.unwrap_or(char))?;
    Ok(Ideal::parse(&ring, &gens)?)
}

pub struct NamedIdeal {
    pub label: String,
    pub ideal: Ideal,
}

/// Resolves `--fixture NAME` or `--ideal NAME|FILE`.
pub fn load_ideal(fixture: Option<&str>, ideal: Option<&str>, char: Option<u64>) -> Result<NamedIdeal> {
    let name = match (fixture, ideal) {
        (Some(_), Some(_)) => bail!("give either --fixture or --ideal, not both"),
        (None, None) => bail!("an ideal is required: use --fixture NAME or --ideal NAME|FILE"),
        (Some(f), None) => f,
        (None, Some(i)) => i,
    };
    if let Ok(fx) = name.parse::<Fixture>() {
        let ideal = example_ideal(fx, char.unwrap_or(0))?;
        return Ok(NamedIdeal {
            label: fx.to_string(),
            ideal,
        });
    }
    let path = PathBuf::from(name);
    if fixture.is_some() || !path.exists() {
        return Err(segrelab::Error::UnknownFixture(name.to_string()).into());
    }
    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    Ok(NamedIdeal {
        label: path.display().to_string(),
        ideal: parse_ideal_file(&text, char)?,
    })
}
