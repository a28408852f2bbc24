use std::fmt;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use elliptic_weyl::rational::{format_rational, parse_rational};
use elliptic_weyl::rootcore::RootSystemSpec;
use elliptic_weyl::weyl::DEFAULT_CAP;
use elliptic_weyl::Rational;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    #[value(alias = "json")]
    Machine,
}

/// Report sections selectable for text output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Section {
    Grading,
    Chambers,
    Criterion,
    Cells,
    Codim,
    Poincare,
    Checks,
}

impl Section {
    pub const DEFAULT: [Section; 6] = [
        Section::Grading,
        Section::Chambers,
        Section::Criterion,
        Section::Cells,
        Section::Codim,
        Section::Poincare,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub cap: u128,
    pub format: Format,
    pub sections: Vec<Section>,
    pub verify: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cap: DEFAULT_CAP,
            format: Format::Text,
            sections: Section::DEFAULT.to_vec(),
            verify: false,
        }
    }
}

/// A validated problem: root system, elliptic vector `t`, coloring `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInput {
    pub spec: RootSystemSpec,
    pub t: Vec<Rational>,
    pub z: Vec<i64>,
    pub options: Options,
}

impl ProblemInput {
    pub fn new(spec: RootSystemSpec, t: Vec<Rational>, z: Vec<i64>) -> Result<Self, CliError> {
        let rank = spec.rank();
        if t.len() != rank {
            return Err(CliError::input(
                "t",
                format!("expected {rank} entries for {spec}, got {}", t.len()),
            ));
        }
        if z.len() != rank {
            return Err(CliError::input(
                "z",
                format!("expected {rank} entries for {spec}, got {}", z.len()),
            ));
        }
        if t.iter().all(|x| *x == Rational::from_integer(0.into())) {
            return Err(CliError::input("t", "zero elliptic element (T must be non-zero)"));
        }
        Ok(ProblemInput {
            spec,
            t,
            z,
            options: Options::default(),
        })
    }

    /// Builds from textual fields; `z` defaults to all zeros.
    pub fn parse(spec: &str, t: &str, z: Option<&str>) -> Result<Self, CliError> {
        let spec = parse_spec(spec)?;
        let t = parse_t(t)?;
        let z = match z {
            Some(z) => parse_z(z)?,
            None => vec![0; spec.rank()],
        };
        Self::new(spec, t, z)
    }

    pub fn with_options(mut self, options: Options) -> Self {
        self.options = options;
        self
    }

    pub fn from_document(doc: InputDocument) -> Result<Self, CliError> {
        let spec = parse_spec(&doc.root_system)?;
        let t = doc
            .t
            .iter()
            .enumerate()
            .map(|(k, s)| parse_entry(k, &s.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let z = doc.z.unwrap_or_else(|| vec![0; spec.rank()]);
        let mut options = Options::default();
        if let Some(cap) = doc.cap {
            options.cap = cap.into();
        }
        if let Some(f) = doc.format {
            options.format = f;
        }
        if let Some(s) = doc.sections {
            options.sections = s;
        }
        options.verify = doc.verify.unwrap_or(false);
        Ok(Self::new(spec, t, z)?.with_options(options))
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let doc: InputDocument = serde_json::from_str(&text)
            .map_err(|e| CliError::input(path.display().to_string(), e))?;
        Self::from_document(doc)
    }

    pub fn to_document(&self) -> InputDocument {
        InputDocument {
            root_system: self.spec.to_string(),
            t: self.t.iter().map(|x| Scalar::Text(format_rational(x))).collect(),
            z: Some(self.z.clone()),
            cap: u64::try_from(self.options.cap).ok(),
            format: Some(self.options.format),
            sections: Some(self.options.sections.clone()),
            verify: Some(self.options.verify),
        }
    }
}

/// On-disk form of [`ProblemInput`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(alias = "type", alias = "spec")]
    pub root_system: String,
    pub t: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sections: Option<Vec<Section>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<bool>,
}

/// A `t` entry: `"p/q"` text or a bare JSON integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Text(s) => f.write_str(s),
        }
    }
}

pub fn parse_spec(s: &str) -> Result<RootSystemSpec, CliError> {
    RootSystemSpec::from_str(s).map_err(|e| CliError::input("type", e))
}

fn parse_entry(k: usize, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::input(format!("t[{}]", k + 1), e))
}

pub fn parse_t(s: &str) -> Result<Vec<Rational>, CliError> {
    split_list(s).enumerate().map(|(k, x)| parse_entry(k, x)).collect()
}

pub fn parse_z(s: &str) -> Result<Vec<i64>, CliError> {
    split_list(s)
        .enumerate()
        .map(|(k, x)| {
            x.parse::<i64>()
                .map_err(|_| CliError::input(format!("z[{}]", k + 1), format!("malformed integer `{x}`")))
        })
        .collect()
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(str::trim)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetName {
    #[value(name = "g2_case_a")]
    G2CaseA,
    #[value(name = "g2_case_b")]
    G2CaseB,
    #[value(name = "su_pq")]
    SuPq,
    #[value(name = "hermitian_su")]
    HermitianSu,
}

/// The worked examples as ready-made problems.
pub mod presets {
    use super::*;

    fn unit(n: usize, k: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        v[k - 1] = 1;
        v
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    fn type_a(n: usize) -> RootSystemSpec {
        format!("A{n}").parse().expect("valid type A")
    }

    /// G₂ with `t = (1, -2)`, `z = (0, 1)`.
    pub fn g2_case_a() -> ProblemInput {
        let spec = "G2".parse().expect("valid type G2");
        ProblemInput::new(spec, ints(&[1, -2]), vec![0, 1]).expect("valid preset")
    }

    /// G₂ with `t = (1, -3)`, `z = (0, 1)`.
    pub fn g2_case_b() -> ProblemInput {
        let spec = "G2".parse().expect("valid type G2");
        ProblemInput::new(spec, ints(&[1, -3]), vec![0, 1]).expect("valid preset")
    }

    /// `su(p,q)` with `T = iZ_h`, `0 < h < p`: type `A_{p+q-1}`, `t = e_h`,
    /// `z = e_p`.
    pub fn su_pq(p: usize, q: usize, h: usize) -> Result<ProblemInput, CliError> {
        if p == 0 || q == 0 {
            return Err(CliError::input("p/q", "p and q must be positive"));
        }
        if h == 0 || h >= p {
            return Err(CliError::input("h", format!("need 0 < h < p, got h = {h}, p = {p}")));
        }
        let n = p + q - 1;
        ProblemInput::new(type_a(n), ints(&unit(n, h)), unit(n, p))
    }

    /// `su(p,q)` with `T = iZ_p`, the Hermitian symmetric case: `t = z = e_p`.
    pub fn hermitian_su(p: usize, q: usize) -> Result<ProblemInput, CliError> {
        if p == 0 || q == 0 {
            return Err(CliError::input("p/q", "p and q must be positive"));
        }
        let n = p + q - 1;
        ProblemInput::new(type_a(n), ints(&unit(n, p)), unit(n, p))
    }
}

pub fn expand_preset(
    name: PresetName,
    p: Option<usize>,
    q: Option<usize>,
    h: Option<usize>,
) -> Result<ProblemInput, CliError> {
    let need = |v: Option<usize>, field: &str| {
        v.ok_or_else(|| CliError::input(field, format!("required by preset {name:?}")))
    };
    match name {
        PresetName::G2CaseA => Ok(presets::g2_case_a()),
        PresetName::G2CaseB => Ok(presets::g2_case_b()),
        PresetName::SuPq => presets::su_pq(need(p, "p")?, need(q, "q")?, need(h, "h")?),
        PresetName::HermitianSu => presets::hermitian_su(need(p, "p")?, need(q, "q")?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parses_flags() {
        let p = ProblemInput::parse("G2", "1,-2", Some("0,1")).unwrap();
        assert_eq!(p.spec.to_string(), "G2");
        assert_eq!(p.t, vec![r("1"), r("-2")]);
        assert_eq!(p.z, vec![0, 1]);
        let p = ProblemInput::parse("A1+B2", "1/2, 0, -3/4", None).unwrap();
        assert_eq!(p.t, vec![r("1/2"), r("0"), r("-3/4")]);
        assert_eq!(p.z, vec![0, 0, 0]);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let field = |e: CliError| match e {
            CliError::Input { field, .. } => field,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(field(ProblemInput::parse("A1", "0", None).unwrap_err()), "t");
        assert_eq!(field(ProblemInput::parse("G2", "1,x", None).unwrap_err()), "t[2]");
        assert_eq!(field(ProblemInput::parse("G2", "1,1/0", None).unwrap_err()), "t[2]");
        assert_eq!(field(ProblemInput::parse("G2", "1", None).unwrap_err()), "t");
        assert_eq!(field(ProblemInput::parse("G2", "1,1", Some("1")).unwrap_err()), "z");
        assert_eq!(field(ProblemInput::parse("G2", "1,1", Some("1,y")).unwrap_err()), "z[2]");
        assert_eq!(field(ProblemInput::parse("H3", "1,1,1", None).unwrap_err()), "type");
    }

    #[test]
    fn preset_fixtures() {
        let g2 = |t: [&str; 2]| ProblemInput {
            spec: "G2".parse().unwrap(),
            t: t.iter().map(|s| r(s)).collect(),
            z: vec![0, 1],
            options: Options::default(),
        };
        assert_eq!(presets::g2_case_a(), g2(["1", "-2"]));
        assert_eq!(presets::g2_case_b(), g2(["1", "-3"]));

        let su = presets::su_pq(3, 2, 1).unwrap();
        assert_eq!(su.spec.to_string(), "A4");
        assert_eq!(su.t, vec![r("1"), r("0"), r("0"), r("0")]);
        assert_eq!(su.z, vec![0, 0, 1, 0]);

        let herm = presets::hermitian_su(2, 1).unwrap();
        assert_eq!(herm.spec.to_string(), "A2");
        assert_eq!(herm.t, vec![r("0"), r("1")]);
        assert_eq!(herm.z, vec![0, 1]);

        assert!(presets::su_pq(2, 2, 2).is_err());
        assert!(presets::su_pq(2, 0, 1).is_err());
        assert!(expand_preset(PresetName::SuPq, Some(3), Some(2), None).is_err());
    }

    #[test]
    fn document_round_trip() {
        let mut p = presets::su_pq(3, 1, 2).unwrap();
        p.options.verify = true;
        p.options.sections = vec![Section::Cells];
        let json = serde_json::to_string(&p.to_document()).unwrap();
        let back = ProblemInput::from_document(serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn document_accepts_integers_and_aliases() {
        let doc: InputDocument =
            serde_json::from_str(r#"{"type": "G2", "t": [1, "-2"], "z": [0, 1]}"#).unwrap();
        assert_eq!(ProblemInput::from_document(doc).unwrap(), presets::g2_case_a());
        assert!(serde_json::from_str::<InputDocument>(r#"{"type": "G2", "t": [1], "w": 1}"#).is_err());
    }
}
