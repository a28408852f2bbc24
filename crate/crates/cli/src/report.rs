use serde::{Deserialize, Serialize};

use elliptic_weyl::checks::verify_instance;
use elliptic_weyl::criterion::{check_condition_s, Verdict};
use elliptic_weyl::kostant::{
    bruhat_cells, complement_codimension, grading_sets, poincare_profile, Codimension,
    EllipticVector,
};
use elliptic_weyl::rational::format_rational;
use elliptic_weyl::realform::{compact_type, InvolutionColoring};
use elliptic_weyl::rootcore::{Root, RootSystem};
use elliptic_weyl::weyl::{WeylElement, WeylGroup};
use elliptic_weyl::Error;

use crate::error::CliError;
use crate::input::ProblemInput;

/// Everything computed for one problem. Roots are coefficient vectors in
/// the simple roots, words list 1-based simple reflection indices and
/// rationals are `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub root_system: String,
    pub t: Vec<String>,
    pub z: Vec<i64>,
    pub weyl_order: u64,
    pub u_plus_size: usize,
    pub levi_size: usize,
    /// `dim u⁺`, also the dimension of the flag domain `G_ℂ/Q⁻`.
    pub r: usize,
    pub compact_type: String,
    pub chambers: Vec<ChamberRow>,
    pub verdict: VerdictField,
    pub k_meets_u: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction_note: Option<String>,
    pub witnesses: Vec<Witness>,
    pub failures: Vec<Failure>,
    /// Word of the chamber whose cells are listed below.
    pub cells_chamber: Vec<usize>,
    pub w1_order: usize,
    pub cells: Vec<Cell>,
    pub complement_codim: CodimField,
    pub poincare: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<ChecksField>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum VerdictField {
    Holds,
    Fails,
    Obstructed,
}

impl From<Verdict> for VerdictField {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Holds => VerdictField::Holds,
            Verdict::Fails => VerdictField::Fails,
            Verdict::Obstructed => VerdictField::Obstructed,
        }
    }
}

impl VerdictField {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictField::Holds => "HOLDS",
            VerdictField::Fails => "FAILS",
            VerdictField::Obstructed => "OBSTRUCTED",
        }
    }
}

/// An integer, or `"inf"` when no cell lies outside the open set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CodimField {
    Finite(usize),
    Infinite(Inf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Inf {
    #[serde(rename = "inf")]
    Inf,
}

impl From<Codimension> for CodimField {
    fn from(c: Codimension) -> Self {
        match c {
            Codimension::Finite(n) => CodimField::Finite(n),
            Codimension::Infinite => CodimField::Infinite(Inf::Inf),
        }
    }
}

impl std::fmt::Display for CodimField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CodimField::Finite(n) => write!(f, "{n}"),
            CodimField::Infinite(_) => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberRow {
    pub word: Vec<usize>,
    pub simple_roots: Vec<Vec<i64>>,
    pub t_in_chamber: Vec<String>,
    pub s2: bool,
    pub violators: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub word: Vec<usize>,
    pub simple_roots: Vec<Vec<i64>>,
    pub t_in_chamber: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub word: Vec<usize>,
    pub violators: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub word: Vec<usize>,
    pub n: usize,
    pub dim: usize,
    pub delta_sigma: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksField {
    pub passed: usize,
    pub failed: usize,
    pub results: Vec<CheckRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn word(w: &[u8]) -> Vec<usize> {
    w.iter().map(|&i| usize::from(i) + 1).collect()
}

fn vector(rs: &RootSystem, a: Root) -> Vec<i64> {
    rs.coords(a).to_vec()
}

fn vectors(rs: &RootSystem, roots: &[Root]) -> Vec<Vec<i64>> {
    roots.iter().map(|&a| vector(rs, a)).collect()
}

fn rationals(t: &EllipticVector) -> Vec<String> {
    t.values().iter().map(format_rational).collect()
}

/// Runs the whole pipeline. Cell data, the complement codimension and the
/// Poincaré profile are taken in the first witness chamber, or the first
/// (s1) chamber when there is no witness; `Δ_σ` is reported in the
/// original coordinates.
pub fn run_report(input: &ProblemInput) -> Result<Report, CliError> {
    let rs = RootSystem::build(&input.spec)?;
    let weyl = WeylGroup::enumerate_with_cap(&rs, input.options.cap)?;
    let t = EllipticVector::new(input.t.clone())?;
    t.check_rank(&rs)?;
    let z = InvolutionColoring::new(input.z.clone());
    z.check_rank(&rs)?;

    let grading = grading_sets(&rs, &t)?;
    let criterion = check_condition_s(&rs, &weyl, &t, &z)?;

    let chambers = criterion
        .chambers
        .iter()
        .map(|c| ChamberRow {
            word: word(&c.candidate.word),
            simple_roots: vectors(&rs, &c.candidate.simple_roots),
            t_in_chamber: rationals(&c.candidate.t_in_chamber),
            s2: c.s2.pass,
            violators: vectors(&rs, &c.s2.violators),
        })
        .collect();
    let witnesses = criterion
        .witnesses()
        .map(|c| Witness {
            word: word(&c.word),
            simple_roots: vectors(&rs, &c.simple_roots),
            t_in_chamber: rationals(&c.t_in_chamber),
        })
        .collect();
    let failures = criterion
        .failures()
        .map(|(c, v)| Failure {
            word: word(&c.word),
            violators: vectors(&rs, v),
        })
        .collect();

    let chosen = criterion
        .chambers
        .iter()
        .find(|c| c.s2.pass)
        .or_else(|| criterion.chambers.first())
        .map(|c| &c.candidate)
        .ok_or_else(|| Error::Internal("no (s1) chamber".into()))?;
    let frame: &WeylElement = weyl.element(chosen.element);
    let dominant = &chosen.t_in_chamber;
    let kostant = match &criterion.kostant {
        Some(k) => k.clone(),
        None => bruhat_cells(&rs, &weyl, dominant)?,
    };
    let cells = kostant
        .entries
        .iter()
        .map(|e| Cell {
            word: word(&e.word),
            n: e.n,
            dim: e.cell_dim,
            delta_sigma: e
                .delta_sigma
                .iter()
                .map(|&g| vector(&rs, frame.apply(g)))
                .collect(),
        })
        .collect();

    let checks = if input.options.verify {
        let summary = verify_instance(&rs, &weyl, &t, &z)?;
        Some(ChecksField {
            passed: summary.passed(),
            failed: summary.failed(),
            results: summary
                .results
                .iter()
                .map(|c| CheckRow {
                    name: c.name.to_string(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        })
    } else {
        None
    };

    Ok(Report {
        root_system: input.spec.to_string(),
        t: rationals(&t),
        z: input.z.clone(),
        weyl_order: weyl.order() as u64,
        u_plus_size: grading.u_plus.len(),
        levi_size: grading.levi.len(),
        r: grading.r,
        compact_type: compact_type(&rs, &z)?.unwrap_or_else(|| "?".to_string()),
        chambers,
        verdict: criterion.verdict.into(),
        k_meets_u: criterion.k_meets_u,
        obstruction_note: criterion.obstruction_note.clone(),
        witnesses,
        failures,
        cells_chamber: word(&chosen.word),
        w1_order: kostant.w1_order,
        cells,
        complement_codim: complement_codimension(&rs, &weyl, dominant)?.into(),
        poincare: poincare_profile(&rs, &weyl, dominant)?,
        checks,
    })
}
