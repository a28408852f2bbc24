//! Deciding condition (S): some fundamental system `Π` has `-iT` dominant
//! (s1) and every `β ∈ Π` with `β(T) ≠ 0` compact (s2).
//!
//! Fundamental systems are `Π_w = {w(α_1), …, w(α_ℓ)}` for `w` in the Weyl
//! group, and (s1) holds for `Π_w` iff `w⁻¹·t` is dominant. Those `w` form a
//! coset of the stabilizer of `t`, so enumerating them is exhaustive and a
//! negative answer is a proof.

use std::fmt;

use num_integer::binomial;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::kostant::{bruhat_cells, EllipticVector, KostantDecomposition};
use crate::realform::{is_compact, k_cap_u_obstruction, InvolutionColoring};
use crate::rootcore::{Root, RootSystem};
use crate::weyl::{act_on_coweight, WeylGroup};
use crate::{Rational, Result};

/// A fundamental system satisfying (s1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberCandidate {
    /// Element index of `w`.
    pub element: usize,
    pub word: Vec<u8>,
    /// `w(α_i)` in ambient coordinates, in the order `i = 1..ℓ`.
    pub simple_roots: Vec<Root>,
    /// `w⁻¹·t`: the values of `w(α_i)` on `-iT`. Dominant.
    pub t_in_chamber: EllipticVector,
}

/// All chambers whose closure contains `t`, sorted by word.
pub fn s1_chambers(
    rs: &RootSystem,
    weyl: &WeylGroup,
    t: &EllipticVector,
) -> Result<Vec<ChamberCandidate>> {
    t.check_rank(rs)?;
    let values = t.evaluations(rs);
    let mut out = Vec::new();
    for (id, w) in weyl.elements().iter().enumerate() {
        let simple_roots: Vec<Root> = (0..rs.rank()).map(|i| w.apply(rs.simple_root(i))).collect();
        if simple_roots.iter().all(|b| !values[b.index()].is_negative()) {
            let t_in_chamber = act_on_coweight(rs, weyl.element(weyl.inverse(id)), t)?;
            out.push(ChamberCandidate {
                element: id,
                word: w.word().to_vec(),
                simple_roots,
                t_in_chamber,
            });
        }
    }
    out.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct S2Outcome {
    pub pass: bool,
    /// Simple roots `β` of the chamber with `β(T) ≠ 0` that are noncompact.
    pub violators: Vec<Root>,
}

pub fn check_s2(
    rs: &RootSystem,
    candidate: &ChamberCandidate,
    t: &EllipticVector,
    z: &InvolutionColoring,
) -> S2Outcome {
    let violators: Vec<Root> = candidate
        .simple_roots
        .iter()
        .copied()
        .filter(|&b| !t.eval(rs, b).is_zero() && !is_compact(rs, z, b))
        .collect();
    S2Outcome {
        pass: violators.is_empty(),
        violators,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    /// No witness, and no compact root meets `u` at all.
    Obstructed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::Obstructed => "OBSTRUCTED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberResult {
    pub candidate: ChamberCandidate,
    pub s2: S2Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub verdict: Verdict,
    /// Every (s1) chamber with its (s2) outcome, sorted by word.
    pub chambers: Vec<ChamberResult>,
    /// `k ∩ u ≠ 0` at root level.
    pub k_meets_u: bool,
    pub obstruction_note: Option<String>,
    /// Cell data in the first witness chamber, present iff the verdict holds.
    pub kostant: Option<KostantDecomposition>,
}

impl CriterionReport {
    pub fn witnesses(&self) -> impl Iterator<Item = &ChamberCandidate> {
        self.chambers
            .iter()
            .filter(|c| c.s2.pass)
            .map(|c| &c.candidate)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&ChamberCandidate, &[Root])> {
        self.chambers
            .iter()
            .filter(|c| !c.s2.pass)
            .map(|c| (&c.candidate, c.s2.violators.as_slice()))
    }
}

pub fn check_condition_s(
    rs: &RootSystem,
    weyl: &WeylGroup,
    t: &EllipticVector,
    z: &InvolutionColoring,
) -> Result<CriterionReport> {
    z.check_rank(rs)?;
    let chambers: Vec<ChamberResult> = s1_chambers(rs, weyl, t)?
        .into_iter()
        .map(|candidate| {
            let s2 = check_s2(rs, &candidate, t, z);
            ChamberResult { candidate, s2 }
        })
        .collect();
    let k_meets_u = k_cap_u_obstruction(rs, t, z)?;
    let first_witness = chambers.iter().find(|c| c.s2.pass);
    let (verdict, obstruction_note, kostant) = match first_witness {
        Some(w) => (
            Verdict::Holds,
            None,
            Some(bruhat_cells(rs, weyl, &w.candidate.t_in_chamber)?),
        ),
        None if !k_meets_u => (
            Verdict::Obstructed,
            Some("k ∩ u = 0: every root graded non-zero by T is noncompact".to_string()),
            None,
        ),
        None => (Verdict::Fails, None, None),
    };
    Ok(CriterionReport {
        verdict,
        chambers,
        k_meets_u,
        obstruction_note,
        kostant,
    })
}

/// All `m ∈ ℕ^r` with `Σ n_j m_j = N`, in lexicographic order. Empty unless
/// `N` is a non-negative integer.
///
/// # Panics
///
/// If some `n_j` is zero.
pub fn taylor_support(weights: &[u64], total: &Rational) -> Vec<Vec<u64>> {
    assert!(weights.iter().all(|&n| n >= 1), "weights must be positive");
    if total.is_negative() || !total.is_integer() {
        return Vec::new();
    }
    let Some(total) = total.to_integer().to_u64() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut current = vec![0u64; weights.len()];
    fill(weights, total, 0, &mut current, &mut out);
    out
}

fn fill(weights: &[u64], remaining: u64, j: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if j == weights.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    for m in 0..=remaining / weights[j] {
        current[j] = m;
        fill(weights, remaining - m * weights[j], j + 1, current, out);
    }
    current[j] = 0;
}

/// `C(N + r - 1, r - 1)`, the number of monomials of degree `N` in `r`
/// variables; bounds `|taylor_support(n, N)|`.
pub fn taylor_support_bound(r: usize, total: u64) -> u128 {
    if r == 0 {
        return u128::from(total == 0);
    }
    binomial(total as u128 + r as u128 - 1, r as u128 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, parse_rational};

    fn setup(s: &str) -> (RootSystem, WeylGroup) {
        let r = RootSystem::build(&s.parse().unwrap()).unwrap();
        let w = WeylGroup::enumerate(&r).unwrap();
        (r, w)
    }

    fn ev(v: &[i64]) -> EllipticVector {
        EllipticVector::from_ints(v).unwrap()
    }

    fn coords(r: &RootSystem, roots: &[Root]) -> Vec<Vec<i64>> {
        roots.iter().map(|&a| r.coords(a).to_vec()).collect()
    }

    #[test]
    fn g2_case_a_chambers() {
        let (r, w) = setup("G2");
        let ch = s1_chambers(&r, &w, &ev(&[1, -2])).unwrap();
        assert_eq!(ch.len(), 2);
        let pi_a = ch
            .iter()
            .find(|c| coords(&r, &c.simple_roots) == vec![vec![2, 1], vec![-3, -2]])
            .expect("Π_a is an (s1) chamber");
        assert_eq!(pi_a.t_in_chamber, ev(&[0, 1]));
        for c in &ch {
            assert!(c.t_in_chamber.is_dominant());
        }
    }

    #[test]
    fn g2_case_b_chambers() {
        let (r, w) = setup("G2");
        let ch = s1_chambers(&r, &w, &ev(&[1, -3])).unwrap();
        assert_eq!(ch.len(), 2);
        let pi_b = ch
            .iter()
            .find(|c| coords(&r, &c.simple_roots) == vec![vec![1, 0], vec![-3, -1]])
            .expect("Π_b is an (s1) chamber");
        assert_eq!(pi_b.t_in_chamber, ev(&[1, 0]));
    }

    #[test]
    fn regular_dominant_has_one_chamber() {
        let (r, w) = setup("A2");
        let ch = s1_chambers(&r, &w, &ev(&[1, 1])).unwrap();
        assert_eq!(ch.len(), 1);
        assert!(ch[0].word.is_empty());
    }

    #[test]
    fn s2_examples() {
        let (r, w) = setup("G2");
        let z = InvolutionColoring::new(vec![0, 1]);
        let t = ev(&[1, -2]);
        let ch = s1_chambers(&r, &w, &t).unwrap();
        let pi_a = ch
            .iter()
            .find(|c| r.coords(c.simple_roots[0]) == [2, 1])
            .unwrap();
        assert!(check_s2(&r, pi_a, &t, &z).pass);

        let (r, w) = setup("A2");
        let t = ev(&[0, 1]);
        let ch = s1_chambers(&r, &w, &t).unwrap();
        let standard = ch.iter().find(|c| c.word.is_empty()).unwrap();
        let out = check_s2(&r, standard, &t, &z);
        assert!(!out.pass);
        assert_eq!(coords(&r, &out.violators), vec![vec![0, 1]]);

        let all = InvolutionColoring::new(vec![0, 0]);
        assert!(check_s2(&r, standard, &t, &all).pass);
    }

    #[test]
    fn condition_s_examples() {
        let (r, w) = setup("A2");
        let z = InvolutionColoring::new(vec![0, 1]);
        let rep = check_condition_s(&r, &w, &ev(&[1, 0]), &z).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!(rep.witnesses().any(|c| c.word.is_empty()));
        let k = rep.kostant.as_ref().unwrap();
        assert_eq!(k.entries.len(), 3);

        let rep = check_condition_s(&r, &w, &ev(&[0, 1]), &z).unwrap();
        assert_eq!(rep.verdict, Verdict::Obstructed);
        assert_eq!(rep.witnesses().count(), 0);
        assert_eq!(rep.chambers.len(), 2);
        assert!(rep.kostant.is_none());

        let (r, w) = setup("G2");
        let rep = check_condition_s(&r, &w, &ev(&[1, -3]), &z).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!(rep
            .witnesses()
            .any(|c| coords(&r, &c.simple_roots) == vec![vec![1, 0], vec![-3, -1]]));
    }

    #[test]
    fn plain_failure() {
        // regular t: the only chamber is the standard one and α1 is noncompact,
        // while α2 is a compact root with α2(T) ≠ 0
        let (r, w) = setup("A2");
        let rep = check_condition_s(&r, &w, &ev(&[1, 1]), &InvolutionColoring::new(vec![1, 0])).unwrap();
        assert!(rep.k_meets_u);
        assert_eq!(rep.verdict, Verdict::Fails);
        assert_eq!(rep.chambers.len(), 1);
        let (_, violators) = rep.failures().next().unwrap();
        assert_eq!(coords(&r, violators), vec![vec![1, 0]]);
        assert!(rep.obstruction_note.is_none());
    }

    #[test]
    fn taylor_examples() {
        assert_eq!(
            taylor_support(&[1, 2], &from_int(3)),
            vec![vec![1, 1], vec![3, 0]]
        );
        assert_eq!(taylor_support(&[1, 1], &from_int(0)), vec![vec![0, 0]]);
        assert!(taylor_support(&[2], &from_int(3)).is_empty());
        assert!(taylor_support(&[1], &parse_rational("5/2").unwrap()).is_empty());
        assert!(taylor_support(&[1], &from_int(-1)).is_empty());
        assert_eq!(taylor_support_bound(2, 3), 4);
        assert_eq!(taylor_support_bound(1, 7), 1);
    }
}
