//! Invariant suites run against a single problem instance.
//!
//! Each check recomputes a structural identity by a second route and
//! reports a pass/fail line. The command-line `--verify` flag runs
//! [`verify_instance`].

use std::collections::BTreeSet;

use crate::criterion::{check_condition_s, s1_chambers};
use crate::kostant::{
    bruhat_cells, complement_codimension, grading_sets, integralize, levi_reflection_subgroup,
    levi_weyl, minimal_reps, Codimension, EllipticVector,
};
use crate::realform::{is_compact, InvolutionColoring};
use crate::rootcore::{Root, RootSystem};
use crate::weyl::{act_on_coweight, inversion_set, WeylGroup};
use crate::Result;

use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckSummary {
    pub results: Vec<CheckResult>,
}

impl CheckSummary {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.results.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    fn record(&mut self, name: &'static str, outcome: std::result::Result<(), String>) {
        let (passed, detail) = match outcome {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e),
        };
        self.results.push(CheckResult {
            name,
            passed,
            detail,
        });
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn root_closure(rs: &RootSystem) -> Check {
    for a in rs.roots() {
        ensure(rs.neg(rs.neg(a)) == a, || format!("neg(neg({:?})) differs", rs.coords(a)))?;
        ensure(rs.pairing(a, a) == 2, || format!("⟨α, α^∨⟩ ≠ 2 for {:?}", rs.coords(a)))?;
        let positive = rs.coords(a).iter().all(|&c| c >= 0);
        ensure(positive == rs.is_positive(a), || {
            format!("sign convention broken at {:?}", rs.coords(a))
        })?;
        for i in 0..rs.rank() {
            let b = rs.reflect(a, i);
            ensure(rs.reflect(b, i) == a, || format!("s_{} is not an involution", i + 1))?;
        }
    }
    ensure(rs.len() == 2 * rs.positive_count(), || "|Δ| ≠ 2|Δ⁺|".into())
}

pub fn grading_partition(rs: &RootSystem, t: &EllipticVector) -> Check {
    let g = grading_sets(rs, t).map_err(|e| e.to_string())?;
    let u_plus: BTreeSet<Root> = g.u_plus.iter().copied().collect();
    let u_minus: BTreeSet<Root> = g.u_minus.iter().copied().collect();
    let levi: BTreeSet<Root> = g.levi.iter().copied().collect();
    ensure(u_plus.len() + u_minus.len() + levi.len() == rs.len(), || {
        "grading sets do not partition Δ".into()
    })?;
    let neg_u: BTreeSet<Root> = u_plus.iter().map(|&a| rs.neg(a)).collect();
    ensure(neg_u == u_minus, || "u⁻ ≠ -u⁺".into())?;
    ensure(levi.iter().all(|&a| levi.contains(&rs.neg(a))), || "levi ≠ -levi".into())?;
    ensure(g.r == u_plus.len(), || "r ≠ |u⁺|".into())?;
    if t.is_dominant() {
        ensure(u_plus.iter().all(|&a| rs.is_positive(a)), || {
            "u⁺ ⊄ Δ⁺ for dominant t".into()
        })?;
    }
    Ok(())
}

pub fn bracket_grading(rs: &RootSystem, t: &EllipticVector) -> Check {
    let values = t.evaluations(rs);
    for a in rs.roots() {
        for b in rs.roots() {
            if let Some(c) = rs.add(a, b) {
                ensure(values[c.index()] == &values[a.index()] + &values[b.index()], || {
                    format!("grading not additive at {:?} + {:?}", rs.coords(a), rs.coords(b))
                })?;
            }
        }
    }
    Ok(())
}

pub fn stabilizer_is_reflection_subgroup(rs: &RootSystem, w: &WeylGroup, t: &EllipticVector) -> Check {
    let stab = levi_weyl(rs, w, t).map_err(|e| e.to_string())?;
    let refl = levi_reflection_subgroup(rs, w, t).map_err(|e| e.to_string())?;
    ensure(stab == refl, || {
        format!("|Stab(t)| = {} but the Levi reflection subgroup has {} elements", stab.len(), refl.len())
    })?;
    for &s in &stab {
        let moved = act_on_coweight(rs, w.element(s), t).map_err(|e| e.to_string())?;
        ensure(&moved == t, || "stabilizer element moves t".into())?;
    }
    Ok(())
}

pub fn chamber_count(rs: &RootSystem, w: &WeylGroup, t: &EllipticVector) -> Check {
    let chambers = s1_chambers(rs, w, t).map_err(|e| e.to_string())?;
    let stab = levi_weyl(rs, w, t).map_err(|e| e.to_string())?;
    ensure(chambers.len() == stab.len(), || {
        format!("{} (s1) chambers but |𝒲₁| = {}", chambers.len(), stab.len())
    })?;
    for c in &chambers {
        ensure(c.t_in_chamber.is_dominant(), || "t_in_chamber is not dominant".into())?;
        for (i, &b) in c.simple_roots.iter().enumerate() {
            ensure(t.eval(rs, b) == c.t_in_chamber.values()[i], || {
                "t_in_chamber disagrees with the chamber's simple roots".into()
            })?;
        }
    }
    Ok(())
}

pub fn complementary_inversions(rs: &RootSystem, w: &WeylGroup) -> Check {
    let kappa = w.longest();
    ensure(
        inversion_set(rs, w.element(kappa)).len() == rs.positive_count(),
        || "Φ_κ ≠ Δ⁺".into(),
    )?;
    for id in 0..w.order() {
        let a = inversion_set(rs, w.element(id));
        ensure(a.len() == w.element(id).length(), || {
            format!("|Φ_w| ≠ ℓ(w) for word {:?}", w.element(id).word())
        })?;
        let b = inversion_set(rs, w.element(w.compose(id, kappa)));
        let union: BTreeSet<Root> = a.iter().chain(&b).copied().collect();
        ensure(a.len() + b.len() == rs.positive_count() && union.len() == rs.positive_count(), || {
            format!("Φ_w ⊔ Φ_wκ ≠ Δ⁺ for word {:?}", w.element(id).word())
        })?;
    }
    Ok(())
}

fn poly_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut c = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

/// Counting, factorization and length-polynomial identities for dominant `t`.
pub fn kostant_factorization(rs: &RootSystem, w: &WeylGroup, t: &EllipticVector) -> Check {
    let levi = levi_weyl(rs, w, t).map_err(|e| e.to_string())?;
    let reps = minimal_reps(rs, w, t).map_err(|e| e.to_string())?;
    ensure(levi.len() * reps.len() == w.order(), || {
        format!("|𝒲₁|·|𝒲¹| = {}·{} ≠ |𝒲| = {}", levi.len(), reps.len(), w.order())
    })?;
    let whole = w.length_polynomial(0..w.order());
    let product = poly_mul(
        &w.length_polynomial(levi.iter().copied()),
        &w.length_polynomial(reps.iter().copied()),
    );
    ensure(whole == product, || format!("W(q) = {whole:?} but W₁(q)·W¹(q) = {product:?}"))?;

    let mut hits = vec![0usize; w.order()];
    for &tau in &levi {
        for &sigma in &reps {
            hits[w.compose(tau, sigma)] += 1;
        }
    }
    ensure(hits.iter().all(|&h| h == 1), || "𝒲 ≠ 𝒲₁·𝒲¹ uniquely".into())?;

    let values = t.evaluations(rs);
    let levi_pos: Vec<Root> = rs.positive_roots().filter(|a| values[a.index()].is_zero()).collect();
    let graded_simple: BTreeSet<usize> = (0..rs.rank())
        .filter(|&i| !values[i].is_zero())
        .map(|i| w.from_word(rs, &[i]))
        .collect();
    for &sigma in &reps {
        let e = w.element(sigma);
        for &g in &levi_pos {
            ensure(rs.is_positive(e.apply_inverse(g)), || {
                format!("σ⁻¹ sends a positive Levi root negative for {:?}", e.word())
            })?;
        }
        let n = e.length();
        ensure((n == 0) == (sigma == w.identity()), || "n_σ = 0 ⇎ σ = e".into())?;
        ensure((n == 1) == graded_simple.contains(&sigma), || {
            format!("n_σ = 1 ⇎ σ = s_β with β(T) ≠ 0, at {:?}", e.word())
        })?;
    }
    let ones = reps.iter().filter(|&&s| w.element(s).length() == 1).count();
    ensure(ones == graded_simple.len(), || "length-one count mismatch".into())
}

pub fn cell_identity(rs: &RootSystem, w: &WeylGroup, t: &EllipticVector) -> Check {
    let g = grading_sets(rs, t).map_err(|e| e.to_string())?;
    let k = bruhat_cells(rs, w, t).map_err(|e| e.to_string())?;
    let u_plus: BTreeSet<Root> = g.u_plus.iter().copied().collect();
    ensure(k.entries.len() * k.w1_order == w.order(), || "|entries|·|𝒲₁| ≠ |𝒲|".into())?;
    let mut top = 0;
    for e in &k.entries {
        let elem = w.element(e.sigma);
        let image: BTreeSet<Root> = e.delta_sigma.iter().map(|&g| elem.apply(g)).collect();
        let expected: BTreeSet<Root> = u_plus.difference(&e.phi.iter().copied().collect()).copied().collect();
        ensure(image == expected, || format!("σ(Δ_σ) ≠ Δ(u⁺) − Φ_σ at {:?}", e.word))?;
        ensure(e.cell_dim == g.r - e.n && e.delta_sigma.len() == e.cell_dim, || {
            format!("cell dimension mismatch at {:?}", e.word)
        })?;
        if e.cell_dim == g.r {
            top += 1;
        }
    }
    ensure(top == 1, || format!("{top} top-dimensional cells"))?;
    let codim_one = k.entries.iter().filter(|e| e.cell_dim + 1 == g.r).count();
    let graded = t.values().iter().filter(|x| !x.is_zero()).count();
    ensure(codim_one == graded, || format!("{codim_one} codimension-one cells, {graded} graded simple roots"))
}

pub fn complement_codim_at_least_two(rs: &RootSystem, w: &WeylGroup, t: &EllipticVector) -> Check {
    match complement_codimension(rs, w, t).map_err(|e| e.to_string())? {
        Codimension::Finite(n) => ensure(n >= 2, || format!("complement codimension {n} < 2")),
        Codimension::Infinite => Ok(()),
    }
}

pub fn parity_coloring(rs: &RootSystem, z: &InvolutionColoring) -> Check {
    for a in rs.roots() {
        ensure(is_compact(rs, z, a) == is_compact(rs, z, rs.neg(a)), || {
            "compactness not symmetric under negation".into()
        })?;
        for b in rs.roots() {
            if let Some(c) = rs.add(a, b) {
                ensure(
                    is_compact(rs, z, c) == (is_compact(rs, z, a) == is_compact(rs, z, b)),
                    || format!("parity not additive at {:?} + {:?}", rs.coords(a), rs.coords(b)),
                )?;
            }
        }
    }
    let shifted = z.shifted(&vec![1; rs.rank()]);
    ensure(rs.roots().all(|a| is_compact(rs, z, a) == is_compact(rs, &shifted, a)), || {
        "z and z + 2v color differently".into()
    })
}

/// Verdict and witnesses survive integralizing `t` and shifting `z`, and
/// every witness chamber reproduces the grading.
pub fn verdict_invariance(rs: &RootSystem, w: &WeylGroup, t: &EllipticVector, z: &InvolutionColoring) -> Check {
    let err = |e: crate::Error| e.to_string();
    let base = check_condition_s(rs, w, t, z).map_err(err)?;
    let witness_words = |r: &crate::criterion::CriterionReport| -> Vec<Vec<u8>> {
        r.witnesses().map(|c| c.word.clone()).collect()
    };
    let scaled = check_condition_s(rs, w, &integralize(t), z).map_err(err)?;
    ensure(scaled.verdict == base.verdict && witness_words(&scaled) == witness_words(&base), || {
        "verdict changes under integralization".into()
    })?;
    let shifted = check_condition_s(rs, w, t, &z.shifted(&vec![-1; rs.rank()])).map_err(err)?;
    ensure(shifted.verdict == base.verdict && witness_words(&shifted) == witness_words(&base), || {
        "verdict changes under z → z + 2v".into()
    })?;
    let g = grading_sets(rs, t).map_err(err)?;
    for c in base.witnesses() {
        let gc = grading_sets(rs, &c.t_in_chamber).map_err(err)?;
        ensure(
            gc.u_plus.iter().all(|&a| rs.is_positive(a)) && gc.r == g.r && gc.levi.len() == g.levi.len(),
            || format!("witness {:?} does not reproduce the grading", c.word),
        )?;
    }
    ensure(
        (base.verdict == crate::criterion::Verdict::Holds) == (base.witnesses().count() > 0),
        || "verdict disagrees with witness list".into(),
    )
}

/// Runs every suite on `(rs, t, z)`. Kostant checks use the dominant
/// representative of `t`.
pub fn verify_instance(
    rs: &RootSystem,
    w: &WeylGroup,
    t: &EllipticVector,
    z: &InvolutionColoring,
) -> Result<CheckSummary> {
    t.check_rank(rs)?;
    z.check_rank(rs)?;
    let dominant = s1_chambers(rs, w, t)?
        .into_iter()
        .next()
        .map(|c| c.t_in_chamber)
        .ok_or_else(|| crate::Error::Internal("no (s1) chamber".into()))?;

    let mut s = CheckSummary::default();
    s.record("root_closure", root_closure(rs));
    s.record("grading_partition", grading_partition(rs, t));
    s.record("bracket_grading", bracket_grading(rs, t));
    s.record("stabilizer_is_reflection_subgroup", stabilizer_is_reflection_subgroup(rs, w, t));
    s.record("chamber_count", chamber_count(rs, w, t));
    s.record("complementary_inversions", complementary_inversions(rs, w));
    s.record("kostant_factorization", kostant_factorization(rs, w, &dominant));
    s.record("cell_identity", cell_identity(rs, w, &dominant));
    s.record("complement_codimension", complement_codim_at_least_two(rs, w, &dominant));
    s.record("parity_coloring", parity_coloring(rs, z));
    s.record("verdict_invariance", verdict_invariance(rs, w, t, z));
    Ok(s)
}
