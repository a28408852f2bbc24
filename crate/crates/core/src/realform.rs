//! Equal-rank real forms given by inner involutions `θ = exp(π ad iZ)`.
//!
//! With `z_i = α_i(Z)` integral, `θ` acts on `g_α` by `(-1)^{α(Z)}`, so a
//! root is compact (`g_α ⊂ k_ℂ`) exactly when `α(Z)` is even.

use num_traits::Zero;

use crate::kostant::EllipticVector;
use crate::rootcore::{Component, Root, RootSystem};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvolutionColoring {
    z: Vec<i64>,
}

impl InvolutionColoring {
    pub fn new(z: Vec<i64>) -> Self {
        Self { z }
    }

    pub fn values(&self) -> &[i64] {
        &self.z
    }

    pub fn check_rank(&self, rs: &RootSystem) -> Result<()> {
        if self.z.len() != rs.rank() {
            return Err(Error::RankMismatch {
                field: "z",
                expected: rs.rank(),
                got: self.z.len(),
            });
        }
        Ok(())
    }

    /// `z + 2v`, which induces the same coloring.
    pub fn shifted(&self, v: &[i64]) -> Self {
        Self::new(self.z.iter().zip(v).map(|(z, v)| z + 2 * v).collect())
    }
}

pub fn is_compact(rs: &RootSystem, z: &InvolutionColoring, a: Root) -> bool {
    let s: i64 = rs.coords(a).iter().zip(&z.z).map(|(c, z)| c * z).sum();
    s.rem_euclid(2) == 0
}

/// All compact roots, sorted by root index.
pub fn compact_subsystem(rs: &RootSystem, z: &InvolutionColoring) -> Result<Vec<Root>> {
    z.check_rank(rs)?;
    Ok(rs.roots().filter(|&a| is_compact(rs, z, a)).collect())
}

/// Simple roots of the compact subsystem relative to the ambient positive
/// roots: compact positive roots that are not a sum of two such.
pub fn compact_simple_roots(rs: &RootSystem, z: &InvolutionColoring) -> Result<Vec<Root>> {
    let positive: Vec<Root> = compact_subsystem(rs, z)?
        .into_iter()
        .filter(|&a| rs.is_positive(a))
        .collect();
    Ok(positive
        .iter()
        .copied()
        .filter(|&c| {
            !positive
                .iter()
                .any(|&a| positive.iter().any(|&b| rs.add(a, b) == Some(c)))
        })
        .collect())
}

/// Cartan type of the compact subsystem, e.g. `"A1+A1"`; `"0"` when no
/// root is compact and `None` if the type is not recognized.
pub fn compact_type(rs: &RootSystem, z: &InvolutionColoring) -> Result<Option<String>> {
    let simple = compact_simple_roots(rs, z)?;
    if simple.is_empty() {
        return Ok(Some("0".to_string()));
    }
    Ok(rs.classify_simple_system(&simple).map(|cs| {
        cs.iter()
            .map(Component::to_string)
            .collect::<Vec<_>>()
            .join("+")
    }))
}

/// Whether `k ∩ u ≠ 0` at root level: some compact root `α` has `α(T) ≠ 0`.
///
/// `false` rules out the condition in every chamber, since each chamber's
/// graded simple roots would have to be compact roots outside the Levi part.
pub fn k_cap_u_obstruction(
    rs: &RootSystem,
    t: &EllipticVector,
    z: &InvolutionColoring,
) -> Result<bool> {
    t.check_rank(rs)?;
    z.check_rank(rs)?;
    Ok(rs
        .roots()
        .any(|a| is_compact(rs, z, a) && !t.eval(rs, a).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    fn ev(v: &[i64]) -> EllipticVector {
        EllipticVector::from_ints(v).unwrap()
    }

    fn root(r: &RootSystem, c: &[i64]) -> Root {
        r.find(c).unwrap()
    }

    #[test]
    fn g2_coloring() {
        let r = rs("G2");
        let z = InvolutionColoring::new(vec![0, 1]);
        assert!(is_compact(&r, &z, root(&r, &[1, 0])));
        assert!(!is_compact(&r, &z, root(&r, &[0, 1])));
        assert!(is_compact(&r, &z, root(&r, &[3, 2])));
        let mut k: Vec<Vec<i64>> = compact_subsystem(&r, &z)
            .unwrap()
            .iter()
            .map(|&a| r.coords(a).to_vec())
            .collect();
        k.sort();
        assert_eq!(k, vec![vec![-3, -2], vec![-1, 0], vec![1, 0], vec![3, 2]]);
        assert_eq!(compact_type(&r, &z).unwrap().as_deref(), Some("A1+A1"));
    }

    #[test]
    fn su21_coloring() {
        let r = rs("A2");
        let z = InvolutionColoring::new(vec![0, 1]);
        assert!(is_compact(&r, &z, root(&r, &[1, 0])));
        assert!(!is_compact(&r, &z, root(&r, &[0, 1])));
        assert!(!is_compact(&r, &z, root(&r, &[1, 1])));
        assert_eq!(compact_subsystem(&r, &z).unwrap().len(), 2);
        assert_eq!(compact_type(&r, &z).unwrap().as_deref(), Some("A1"));

        let all = InvolutionColoring::new(vec![0, 0]);
        assert_eq!(compact_subsystem(&r, &all).unwrap().len(), 6);
        assert_eq!(compact_type(&r, &all).unwrap().as_deref(), Some("A2"));
    }

    #[test]
    fn negative_entries_use_parity() {
        let r = rs("A2");
        let z = InvolutionColoring::new(vec![-1, 3]);
        assert!(is_compact(&r, &z, root(&r, &[1, 1])));
        assert!(!is_compact(&r, &z, root(&r, &[-1, 0])));
    }

    #[test]
    fn known_compact_types() {
        // so(2,3)-type coloring of B2 and sp(1,1) style colorings
        let r = rs("B3");
        assert_eq!(
            compact_type(&r, &InvolutionColoring::new(vec![1, 0, 0]))
                .unwrap()
                .as_deref(),
            Some("B2")
        );
        let r = rs("C3");
        assert_eq!(
            compact_type(&r, &InvolutionColoring::new(vec![0, 0, 1]))
                .unwrap()
                .as_deref(),
            Some("A2")
        );
        let r = rs("F4");
        assert_eq!(
            compact_type(&r, &InvolutionColoring::new(vec![1, 0, 0, 0]))
                .unwrap()
                .as_deref(),
            Some("A1+C3")
        );
    }

    #[test]
    fn k_meets_u_examples() {
        let a2 = rs("A2");
        let z = InvolutionColoring::new(vec![0, 1]);
        assert!(!k_cap_u_obstruction(&a2, &ev(&[0, 1]), &z).unwrap());
        assert!(k_cap_u_obstruction(&a2, &ev(&[1, 0]), &z).unwrap());
        let g2 = rs("G2");
        assert!(k_cap_u_obstruction(&g2, &ev(&[1, -2]), &z).unwrap());
    }

    #[test]
    fn rank_checks() {
        let a2 = rs("A2");
        let z = InvolutionColoring::new(vec![0]);
        assert!(matches!(
            compact_subsystem(&a2, &z),
            Err(Error::RankMismatch { field: "z", .. })
        ));
    }
}
