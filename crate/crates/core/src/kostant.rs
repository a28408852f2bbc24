//! Grading of the roots by an elliptic element and Kostant's coset data.
//!
//! An elliptic element `T` is encoded by the rational values
//! `t_i = α_i(-iT)` on the simple roots. A root `α = Σ c_i α_i` then has
//! `α(-iT) = Σ c_i t_i`, and its sign decides whether `g_α` lies in the
//! nilradical `u⁺`, the Levi factor, or `u⁻`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::rational::{denominator_lcm, from_int};
use crate::rootcore::{Root, RootSystem};
use crate::weyl::{inversion_set, WeylGroup};
use crate::{Error, Rational, Result};

/// The values `α_i(-iT)` of the simple roots on `-iT`. Never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EllipticVector(Vec<Rational>);

impl EllipticVector {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.iter().all(Zero::is_zero) {
            return Err(Error::ZeroElliptic);
        }
        Ok(Self(values))
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| from_int(x)).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn check_rank(&self, rs: &RootSystem) -> Result<()> {
        if self.0.len() != rs.rank() {
            return Err(Error::RankMismatch {
                field: "t",
                expected: rs.rank(),
                got: self.0.len(),
            });
        }
        Ok(())
    }

    /// `α(-iT)` for the root `α`.
    pub fn eval(&self, rs: &RootSystem, a: Root) -> Rational {
        self.eval_coords(rs.coords(a))
    }

    pub fn eval_coords(&self, coords: &[i64]) -> Rational {
        coords
            .iter()
            .zip(&self.0)
            .filter(|(c, _)| **c != 0)
            .map(|(&c, t)| t * from_int(c))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Values on every root, indexed like the root system.
    pub fn evaluations(&self, rs: &RootSystem) -> Vec<Rational> {
        rs.roots().map(|a| self.eval(rs, a)).collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// Fails with the first simple root on which `t` is negative.
    pub fn ensure_dominant(&self) -> Result<()> {
        match self.0.iter().position(Signed::is_negative) {
            Some(i) => Err(Error::NotDominant {
                index: i + 1,
                value: self.0[i].clone(),
            }),
            None => Ok(()),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }
}

impl fmt::Display for EllipticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Partition of the roots by the sign of `α(-iT)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingData {
    pub u_plus: Vec<Root>,
    pub u_minus: Vec<Root>,
    pub levi: Vec<Root>,
    /// `dim u⁺ = |u_plus|`, also the complex dimension of `G_ℂ/Q⁻`.
    pub r: usize,
}

impl GradingData {
    /// `dim l_ℂ = ℓ + |levi|`.
    pub fn levi_dimension(&self, rs: &RootSystem) -> usize {
        rs.rank() + self.levi.len()
    }
}

pub fn grading_sets(rs: &RootSystem, t: &EllipticVector) -> Result<GradingData> {
    t.check_rank(rs)?;
    let (mut u_plus, mut u_minus, mut levi) = (Vec::new(), Vec::new(), Vec::new());
    for a in rs.roots() {
        let v = t.eval(rs, a);
        if v.is_positive() {
            u_plus.push(a);
        } else if v.is_negative() {
            u_minus.push(a);
        } else {
            levi.push(a);
        }
    }
    let r = u_plus.len();
    Ok(GradingData {
        u_plus,
        u_minus,
        levi,
        r,
    })
}

/// `𝒲₁` as the stabilizer of `t`, sorted by element index.
pub fn levi_weyl(rs: &RootSystem, weyl: &WeylGroup, t: &EllipticVector) -> Result<Vec<usize>> {
    t.check_rank(rs)?;
    let values = t.evaluations(rs);
    // w·t = t  ⇔  (wα_i)(t) = α_i(t) for every simple root
    Ok((0..weyl.order())
        .filter(|&id| {
            let p = weyl.element(id).perm();
            (0..rs.rank()).all(|i| values[p[i] as usize] == values[i])
        })
        .collect())
}

/// The subgroup generated by the reflections `s_γ`, `γ` in the Levi roots.
pub fn levi_reflection_subgroup(
    rs: &RootSystem,
    weyl: &WeylGroup,
    t: &EllipticVector,
) -> Result<Vec<usize>> {
    let grading = grading_sets(rs, t)?;
    let gens: Vec<usize> = grading
        .levi
        .iter()
        .filter(|&&g| rs.is_positive(g))
        .map(|&g| weyl.reflection(rs, g))
        .collect();
    let mut member = vec![false; weyl.order()];
    member[weyl.identity()] = true;
    let mut found = vec![weyl.identity()];
    let mut head = 0;
    while head < found.len() {
        let x = found[head];
        head += 1;
        for &g in &gens {
            let y = weyl.compose(x, g);
            if !member[y] {
                member[y] = true;
                found.push(y);
            }
        }
    }
    found.sort_unstable();
    Ok(found)
}

fn u_plus_mask(rs: &RootSystem, t: &EllipticVector) -> Vec<bool> {
    rs.roots().map(|a| t.eval(rs, a).is_positive()).collect()
}

fn check_dominant(rs: &RootSystem, t: &EllipticVector) -> Result<()> {
    t.check_rank(rs)?;
    t.ensure_dominant()
}

/// `𝒲¹ = {σ : Φ_σ ⊆ Δ(u⁺)}` for dominant `t`, sorted by element index.
pub fn minimal_reps(rs: &RootSystem, weyl: &WeylGroup, t: &EllipticVector) -> Result<Vec<usize>> {
    check_dominant(rs, t)?;
    let in_u = u_plus_mask(rs, t);
    Ok((0..weyl.order())
        .filter(|&id| {
            let p = weyl.element(id).perm();
            rs.negative_roots().all(|g| {
                let b = p[g.index()] as usize;
                b >= rs.positive_count() || in_u[b]
            })
        })
        .collect())
}

/// The unique `(τ, σ) ∈ 𝒲₁ × 𝒲¹` with `w = τσ`.
pub fn factorize(
    rs: &RootSystem,
    weyl: &WeylGroup,
    t: &EllipticVector,
    w: usize,
) -> Result<(usize, usize)> {
    check_dominant(rs, t)?;
    let levi = levi_weyl(rs, weyl, t)?;
    let mut is_min = vec![false; weyl.order()];
    for s in minimal_reps(rs, weyl, t)? {
        is_min[s] = true;
    }
    let mut hits = levi.iter().filter_map(|&tau| {
        let sigma = weyl.compose(weyl.inverse(tau), w);
        is_min[sigma].then_some((tau, sigma))
    });
    match (hits.next(), hits.next()) {
        (Some(pair), None) => Ok(pair),
        (None, _) => Err(Error::Internal(format!("no factorization of element {w}"))),
        (Some(_), Some(_)) => Err(Error::Internal(format!(
            "factorization of element {w} is not unique"
        ))),
    }
}

/// One generalized Bruhat cell, indexed by `σ ∈ 𝒲¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellEntry {
    /// Element index of `σ` in the Weyl group.
    pub sigma: usize,
    pub word: Vec<u8>,
    /// `Φ_σ`.
    pub phi: Vec<Root>,
    /// `n_σ = |Φ_σ|`.
    pub n: usize,
    /// `Δ_σ = {γ ∈ Φ_{σ⁻¹κ} : σγ ∈ Δ(u⁺)}`.
    pub delta_sigma: Vec<Root>,
    /// `r - n_σ`.
    pub cell_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostantDecomposition {
    pub entries: Vec<CellEntry>,
    pub w1_order: usize,
    pub r: usize,
}

pub fn bruhat_cells(
    rs: &RootSystem,
    weyl: &WeylGroup,
    t: &EllipticVector,
) -> Result<KostantDecomposition> {
    check_dominant(rs, t)?;
    let grading = grading_sets(rs, t)?;
    let in_u = u_plus_mask(rs, t);
    let w1_order = levi_weyl(rs, weyl, t)?.len();
    let kappa = weyl.longest();
    let mut entries: Vec<CellEntry> = minimal_reps(rs, weyl, t)?
        .into_iter()
        .map(|sigma| {
            let elem = weyl.element(sigma);
            let phi = inversion_set(rs, elem);
            let n = phi.len();
            let partner = weyl.compose(weyl.inverse(sigma), kappa);
            let delta_sigma: Vec<Root> = inversion_set(rs, weyl.element(partner))
                .into_iter()
                .filter(|&g| in_u[elem.apply(g).index()])
                .collect();
            CellEntry {
                sigma,
                word: elem.word().to_vec(),
                phi,
                n,
                delta_sigma,
                cell_dim: grading.r - n,
            }
        })
        .collect();
    entries.sort_by(|a, b| b.cell_dim.cmp(&a.cell_dim).then_with(|| a.word.cmp(&b.word)));
    Ok(KostantDecomposition {
        entries,
        w1_order,
        r: grading.r,
    })
}

/// Smallest codimension of a cell outside the open set `𝒪`, or
/// [`Codimension::Infinite`] when every cell lies in `𝒪`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Codimension {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Codimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Codimension::Finite(n) => write!(f, "{n}"),
            Codimension::Infinite => f.write_str("inf"),
        }
    }
}

/// Minimum of `n_σ` over `𝒲¹` without the identity and the simple
/// reflections `s_β` with `β(T) ≠ 0`.
pub fn complement_codimension(
    rs: &RootSystem,
    weyl: &WeylGroup,
    t: &EllipticVector,
) -> Result<Codimension> {
    check_dominant(rs, t)?;
    let mut excluded = vec![weyl.identity()];
    for (i, x) in t.values().iter().enumerate() {
        if !x.is_zero() {
            excluded.push(weyl.from_word(rs, &[i]));
        }
    }
    Ok(minimal_reps(rs, weyl, t)?
        .into_iter()
        .filter(|s| !excluded.contains(s))
        .map(|s| weyl.element(s).length())
        .min()
        .map_or(Codimension::Infinite, Codimension::Finite))
}

/// `m·t` for the least positive integer `m` making every entry integral.
pub fn integralize(t: &EllipticVector) -> EllipticVector {
    let m = Rational::from_integer(denominator_lcm(t.values()));
    EllipticVector(t.values().iter().map(|x| x * &m).collect())
}

/// Coefficients of `Σ_{σ ∈ 𝒲¹} q^{n_σ}`.
pub fn poincare_profile(rs: &RootSystem, weyl: &WeylGroup, t: &EllipticVector) -> Result<Vec<usize>> {
    Ok(weyl.length_polynomial(minimal_reps(rs, weyl, t)?))
}
