//! The Weyl group as a group of permutations of the roots.
//!
//! An element is stored as the permutation `α ↦ w(α)` of root indices. The
//! action on roots is faithful, and an element is already determined by the
//! images of the simple roots, which is the key used for deduplication.

use std::collections::HashMap;

use crate::kostant::EllipticVector;
use crate::rootcore::{Root, RootSystem};
use crate::{Error, Result};

/// Default bound on the number of enumerated elements.
pub const DEFAULT_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<u16>,
    word: Vec<u8>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        Self {
            perm: (0..rs.len() as u16).collect(),
            word: Vec::new(),
        }
    }

    /// The product `s_{i_1} s_{i_2} ⋯ s_{i_k}` of simple reflections, with
    /// `word` recorded verbatim (reduced or not).
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = Self::identity(rs);
        for &i in word {
            w = w.times_simple(rs, i);
        }
        w
    }

    /// `w · s_i`, whose permutation is `α ↦ w(s_i(α))`.
    pub fn times_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let perm = (0..rs.len())
            .map(|a| self.perm[rs.reflect(Root(a), i).0])
            .collect();
        let mut word = self.word.clone();
        word.push(i as u8);
        Self { perm, word }
    }

    /// Permutation of root indices, `perm()[α] = w(α)`.
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// 0-based simple reflection indices.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(a, &b)| a == b as usize)
    }

    pub fn apply(&self, a: Root) -> Root {
        Root(self.perm[a.0] as usize)
    }

    pub fn apply_inverse(&self, a: Root) -> Root {
        let k = self
            .perm
            .iter()
            .position(|&b| b as usize == a.0)
            .expect("perm is a bijection");
        Root(k)
    }

    fn key(&self, rs: &RootSystem) -> Vec<u16> {
        (0..rs.rank()).map(|i| self.perm[i]).collect()
    }
}

/// `Φ_w = {β > 0 : w⁻¹β < 0}`, sorted by root index.
pub fn inversion_set(rs: &RootSystem, w: &WeylElement) -> Vec<Root> {
    let mut out: Vec<Root> = rs
        .negative_roots()
        .map(|g| w.apply(g))
        .filter(|&b| rs.is_positive(b))
        .collect();
    out.sort();
    out
}

/// The longest element, built greedily by right-multiplying with `s_i`
/// while some `w(α_i)` is still positive (smallest such `i` first).
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    while let Some(i) = (0..rs.rank()).find(|&i| rs.is_positive(w.apply(rs.simple_root(i)))) {
        w = w.times_simple(rs, i);
    }
    w
}

/// `w · t`, defined so that `α(w·t) = (w⁻¹α)(t)` for every root `α`.
pub fn act_on_coweight(rs: &RootSystem, w: &WeylElement, t: &EllipticVector) -> Result<EllipticVector> {
    t.check_rank(rs)?;
    let values = (0..rs.rank())
        .map(|i| t.eval(rs, w.apply_inverse(rs.simple_root(i))))
        .collect();
    EllipticVector::new(values)
}

/// The full Weyl group, enumerated breadth-first by word length.
///
/// Element 0 is the identity. Each element carries the lexicographically
/// smallest of its reduced words.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    lookup: HashMap<Vec<u16>, usize>,
    longest: usize,
}

impl WeylGroup {
    pub fn enumerate(rs: &RootSystem) -> Result<Self> {
        Self::enumerate_with_cap(rs, DEFAULT_CAP)
    }

    pub fn enumerate_with_cap(rs: &RootSystem, cap: u128) -> Result<Self> {
        let order = rs.spec().weyl_order();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        if rs.len() > u16::MAX as usize {
            return Err(Error::CapExceeded {
                order,
                cap: u16::MAX as u128,
            });
        }
        let rank = rs.rank();
        let identity = WeylElement::identity(rs);
        let mut lookup = HashMap::with_capacity(order as usize);
        lookup.insert(identity.key(rs), 0);
        let mut elements = vec![identity];

        // Elements are appended in shortlex order of their words, so the vector
        // doubles as the BFS queue.
        let mut head = 0;
        while head < elements.len() {
            for i in 0..rank {
                let parent = &elements[head];
                let key: Vec<u16> = (0..rank)
                    .map(|j| parent.perm[rs.reflect(rs.simple_root(j), i).0])
                    .collect();
                if lookup.contains_key(&key) {
                    continue;
                }
                let child = parent.times_simple(rs, i);
                lookup.insert(key, elements.len());
                elements.push(child);
            }
            head += 1;
        }
        if elements.len() as u128 != order {
            return Err(Error::Internal(format!(
                "enumerated {} Weyl group elements for {}, expected {order}",
                elements.len(),
                rs.spec()
            )));
        }
        let longest = elements.len() - 1;
        if elements[longest].length() != rs.positive_count() {
            return Err(Error::Internal("last BFS element is not the longest element".into()));
        }
        Ok(Self {
            rank,
            elements,
            lookup,
            longest,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &WeylElement {
        &self.elements[id]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the longest element `κ`.
    pub fn longest(&self) -> usize {
        self.longest
    }

    /// Index of the stored element with the same action as `w`.
    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        let key: Vec<u16> = w.perm[..self.rank].to_vec();
        self.lookup.get(&key).copied()
    }

    fn index_of_key(&self, key: &[u16]) -> usize {
        *self
            .lookup
            .get(key)
            .expect("group is closed under composition")
    }

    /// Index of `a · b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let (pa, pb) = (&self.elements[a].perm, &self.elements[b].perm);
        let key: Vec<u16> = (0..self.rank).map(|j| pa[pb[j] as usize]).collect();
        self.index_of_key(&key)
    }

    pub fn inverse(&self, a: usize) -> usize {
        let p = &self.elements[a].perm;
        let mut key = vec![0u16; self.rank];
        for (g, &img) in p.iter().enumerate() {
            if (img as usize) < self.rank {
                key[img as usize] = g as u16;
            }
        }
        self.index_of_key(&key)
    }

    /// Index of the element given by a (possibly non-reduced) word.
    pub fn from_word(&self, rs: &RootSystem, word: &[usize]) -> usize {
        self.index_of(&WeylElement::from_word(rs, word))
            .expect("group contains every word")
    }

    /// Index of the reflection `s_β`.
    pub fn reflection(&self, rs: &RootSystem, b: Root) -> usize {
        let key: Vec<u16> = (0..self.rank)
            .map(|j| rs.reflect_along(rs.simple_root(j), b).0 as u16)
            .collect();
        self.index_of_key(&key)
    }

    /// `Σ_w q^{ℓ(w)}` over the given elements, as a coefficient vector.
    pub fn length_polynomial(&self, ids: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut c: Vec<usize> = Vec::new();
        for id in ids {
            let l = self.elements[id].length();
            if c.len() <= l {
                c.resize(l + 1, 0);
            }
            c[l] += 1;
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    fn coords(r: &RootSystem, roots: &[Root]) -> Vec<Vec<i64>> {
        roots.iter().map(|&a| r.coords(a).to_vec()).collect()
    }

    fn ev(v: &[i64]) -> EllipticVector {
        EllipticVector::new(v.iter().map(|&x| from_int(x)).collect()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(WeylGroup::enumerate(&rs("A1")).unwrap().order(), 2);
        assert_eq!(WeylGroup::enumerate(&rs("A2")).unwrap().order(), 6);
        assert_eq!(WeylGroup::enumerate(&rs("G2")).unwrap().order(), 12);
        assert_eq!(WeylGroup::enumerate(&rs("A1+A2")).unwrap().order(), 12);
    }

    #[test]
    fn cap_is_a_hard_error() {
        let err = WeylGroup::enumerate_with_cap(&rs("A3"), 23).unwrap_err();
        assert_eq!(err, Error::CapExceeded { order: 24, cap: 23 });
        let err = WeylGroup::enumerate(&rs("E8")).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { order: 696_729_600, .. }));
    }

    #[test]
    fn a1_elements() {
        let r = rs("A1");
        let w = WeylGroup::enumerate(&r).unwrap();
        assert!(w.element(0).is_identity());
        assert_eq!(w.element(1).word(), &[0]);
    }

    #[test]
    fn words_are_lexicographically_least() {
        let r = rs("A2");
        let w = WeylGroup::enumerate(&r).unwrap();
        let words: Vec<&[u8]> = w.elements().iter().map(|e| e.word()).collect();
        assert_eq!(
            words,
            vec![&[][..], &[0], &[1], &[0, 1], &[1, 0], &[0, 1, 0]]
        );
    }

    #[test]
    fn inversion_sets() {
        let r = rs("A2");
        let s1 = WeylElement::from_word(&r, &[0]);
        assert_eq!(coords(&r, &inversion_set(&r, &s1)), vec![vec![1, 0]]);
        let s2s1 = WeylElement::from_word(&r, &[1, 0]);
        assert_eq!(
            coords(&r, &inversion_set(&r, &s2s1)),
            vec![vec![0, 1], vec![1, 1]]
        );
        assert!(inversion_set(&r, &WeylElement::identity(&r)).is_empty());
    }

    #[test]
    fn longest_elements() {
        let a2 = rs("A2");
        let k = longest_element(&a2);
        assert_eq!(k.word(), &[0, 1, 0]);
        assert_eq!(inversion_set(&a2, &k).len(), 3);
        // -(diagram flip): α1 ↦ -α2
        assert_eq!(a2.coords(k.apply(a2.simple_root(0))), &[0, -1]);

        let g2 = rs("G2");
        let k = longest_element(&g2);
        assert_eq!(k.length(), 6);
        for a in g2.roots() {
            assert_eq!(k.apply(a), g2.neg(a));
        }
        let wg = WeylGroup::enumerate(&g2).unwrap();
        assert_eq!(wg.index_of(&k), Some(wg.longest()));

        let a1 = rs("A1");
        assert_eq!(longest_element(&a1).word(), &[0]);
    }

    #[test]
    fn coweight_action() {
        let a2 = rs("A2");
        let t = ev(&[1, 0]);
        assert_eq!(act_on_coweight(&a2, &WeylElement::identity(&a2), &t).unwrap(), t);
        let s1 = WeylElement::from_word(&a2, &[0]);
        assert_eq!(act_on_coweight(&a2, &s1, &t).unwrap(), ev(&[-1, 1]));

        let g2 = rs("G2");
        let s2 = WeylElement::from_word(&g2, &[1]);
        let moved = act_on_coweight(&g2, &s2, &ev(&[1, -2])).unwrap();
        assert_eq!(moved.eval(&g2, g2.simple_root(1)), from_int(2));
    }

    #[test]
    fn group_tables() {
        let r = rs("B3");
        let w = WeylGroup::enumerate(&r).unwrap();
        for a in 0..w.order() {
            assert_eq!(w.compose(a, w.inverse(a)), 0);
            assert_eq!(w.compose(w.inverse(a), a), 0);
            assert_eq!(w.compose(a, 0), a);
        }
        for a in (0..w.order()).step_by(7) {
            for b in (0..w.order()).step_by(5) {
                for c in (0..w.order()).step_by(11) {
                    assert_eq!(
                        w.compose(w.compose(a, b), c),
                        w.compose(a, w.compose(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn reflections_are_involutions() {
        let r = rs("C3");
        let w = WeylGroup::enumerate(&r).unwrap();
        for b in r.positive_roots() {
            let s = w.reflection(&r, b);
            assert_eq!(w.compose(s, s), 0);
            assert_eq!(w.element(s).apply(b), r.neg(b));
        }
        assert_eq!(w.reflection(&r, r.simple_root(2)), w.from_word(&r, &[2]));
    }

    #[test]
    fn length_polynomial_of_a2() {
        let r = rs("A2");
        let w = WeylGroup::enumerate(&r).unwrap();
        assert_eq!(w.length_polynomial(0..w.order()), vec![1, 2, 2, 1]);
    }
}
