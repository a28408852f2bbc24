//! Finite crystallographic root systems in simple-root coordinates.
//!
//! Every root is stored as an integer vector of coefficients on the simple
//! roots, so pairings and evaluations on coweights are exact.
//!
//! # Cartan matrix convention
//!
//! `cartan[i][j] = ⟨α_i, α_j^∨⟩ = 2(α_i, α_j) / (α_j, α_j)`, with simple roots
//! numbered as in Bourbaki:
//!
//! | family | diagram (0-based indices) | non-simply-laced entries |
//! |--------|---------------------------|--------------------------|
//! | `A_n`  | chain `0 - 1 - … - n-1` | none |
//! | `B_n`  | chain, `α_n` short | `cartan[n-2][n-1] = -2`, `cartan[n-1][n-2] = -1` |
//! | `C_n`  | chain, `α_n` long | `cartan[n-2][n-1] = -1`, `cartan[n-1][n-2] = -2` |
//! | `D_n`  | chain `0 … n-2`, plus `n-1` attached to `n-3` | none |
//! | `E_n`  | `0-2-3-4-…-(n-1)`, plus `1` attached to `3` | none |
//! | `F_4`  | chain, `α_1, α_2` long, `α_3, α_4` short | `cartan[1][2] = -2`, `cartan[2][1] = -1` |
//! | `G_2`  | `α_1` short, `α_2` long | `cartan[0][1] = -1`, `cartan[1][0] = -3` |
//!
//! So for `G_2` the simple reflection `s_1` sends `α_2` to `3α_1 + α_2`, and the
//! positive roots are `α_1, α_2, α_1+α_2, 2α_1+α_2, 3α_1+α_2, 3α_1+2α_2`.
//!
//! `C_2` is accepted and is `B_2` with the two simple roots swapped.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// One simple factor `X_n` of a semisimple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    family: Family,
    rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            let reason = match family {
                Family::A => "rank must be at least 1",
                Family::B | Family::C => "rank must be at least 2",
                Family::D => "rank must be at least 4",
                Family::E => "rank must be 6, 7 or 8",
                Family::F => "rank must be 4",
                Family::G => "rank must be 2",
            };
            Err(Error::InvalidComponent {
                component: format!("{}{}", family.letter(), rank),
                reason: reason.to_string(),
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of roots, positive and negative.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    fn cartan(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
        }
        match self.family {
            Family::B => m[n - 2][n - 1] = -2,
            Family::C => m[n - 1][n - 2] = -2,
            Family::F => m[1][2] = -2,
            Family::G => m[1][0] = -3,
            _ => {}
        }
        m
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let invalid = |reason: &str| Error::InvalidComponent {
            component: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| invalid("unknown family (expected one of A-G)"))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| invalid("missing or malformed rank"))?;
        Component::new(family, rank)
    }
}

/// A semisimple type as a list of simple factors, e.g. `A2+G2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    components: Vec<Component>,
}

impl RootSystemSpec {
    pub fn new(components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidComponent {
                component: String::new(),
                reason: "a root system needs at least one component".to_string(),
            });
        }
        Ok(Self { components })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![Component::new(family, rank)?])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.weyl_order()).product()
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Accepts `G2`, `A2+B3`, `A1xA1`, `A1×A1`.
impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split(['+', 'x', 'X', '×'])
            .map(str::parse)
            .collect::<Result<Vec<Component>>>()?;
        Self::new(components)
    }
}

/// Handle to a root of a particular [`RootSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(pub(crate) usize);

impl Root {
    pub fn index(self) -> usize {
        self.0
    }
}

/// An immutable finite root system.
///
/// Positive roots come first, sorted by height and then with larger
/// coefficient vectors first (so `α_1, …, α_ℓ` get indices `0..ℓ`). The
/// negative of positive root `k` has index `positive_count + k`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: RootSystemSpec,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    component_of: Vec<usize>,
    roots: Vec<Vec<i64>>,
    positive_count: usize,
    index: HashMap<Vec<i64>, usize>,
    // reflections[root * rank + i] = s_i(root)
    reflections: Vec<usize>,
}

impl RootSystem {
    pub fn build(spec: &RootSystemSpec) -> Result<Self> {
        // revalidate: specs can be cloned and edited only through `new`, but be strict anyway
        for c in &spec.components {
            Component::new(c.family, c.rank)?;
        }
        let rank = spec.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut component_of = Vec::with_capacity(rank);
        let mut offset = 0;
        for (k, c) in spec.components.iter().enumerate() {
            let block = c.cartan();
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[offset + i][offset + j] = block[i][j];
                }
                component_of.push(k);
            }
            offset += c.rank;
        }
        let symmetrizer = symmetrize(&cartan)?;

        let reflect_vec = |v: &[i64], i: usize| -> Vec<i64> {
            let c: i64 = (0..rank).map(|j| v[j] * cartan[j][i]).sum();
            let mut w = v.to_vec();
            w[i] -= c;
            w
        };

        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..rank {
                let w = reflect_vec(&v, i);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }

        let mut positives: Vec<Vec<i64>> = Vec::new();
        for v in &seen {
            let first = v.iter().find(|&&x| x != 0).copied().unwrap_or(0);
            if first > 0 {
                if v.iter().any(|&x| x < 0) {
                    return Err(Error::Internal(format!(
                        "root {v:?} has mixed-sign coordinates"
                    )));
                }
                positives.push(v.clone());
            } else if !v.iter().all(|&x| x <= 0) || first == 0 {
                return Err(Error::Internal(format!(
                    "root {v:?} has mixed-sign coordinates"
                )));
            }
        }
        positives.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let positive_count = positives.len();
        let expected: usize = spec.components.iter().map(|c| c.root_count()).sum();
        if 2 * positive_count != seen.len() || seen.len() != expected {
            return Err(Error::Internal(format!(
                "{spec}: enumerated {} roots ({} positive), expected {expected}",
                seen.len(),
                positive_count
            )));
        }

        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|v| v.iter().map(|x| -x).collect()));
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k))
            .collect();

        let mut reflections = Vec::with_capacity(roots.len() * rank);
        for v in &roots {
            for i in 0..rank {
                let w = reflect_vec(v, i);
                let k = *index.get(&w).ok_or_else(|| {
                    Error::Internal(format!("s_{}({v:?}) = {w:?} is not a root", i + 1))
                })?;
                reflections.push(k);
            }
        }

        Ok(Self {
            spec: spec.clone(),
            rank,
            cartan,
            symmetrizer,
            component_of,
            roots,
            positive_count,
            index,
            reflections,
        })
    }

    pub fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan()[i][j] = ⟨α_i, α_j^∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive integers `d` with `cartan[i][j] * d[j]` symmetric; `d[j]` is
    /// half the squared length of `α_j`, normalized so the shortest simple
    /// root of each component has `d = 1`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.positive_count
    }

    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.roots.len()).map(Root)
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = Root> + '_ {
        (0..self.positive_count).map(Root)
    }

    pub fn negative_roots(&self) -> impl Iterator<Item = Root> + '_ {
        (self.positive_count..self.roots.len()).map(Root)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        assert!(i < self.rank, "simple index {i} out of range");
        Root(i)
    }

    pub fn root(&self, index: usize) -> Option<Root> {
        (index < self.roots.len()).then_some(Root(index))
    }

    pub fn coords(&self, a: Root) -> &[i64] {
        &self.roots[a.0]
    }

    pub fn find(&self, coords: &[i64]) -> Option<Root> {
        self.index.get(coords).copied().map(Root)
    }

    pub fn neg(&self, a: Root) -> Root {
        if a.0 < self.positive_count {
            Root(a.0 + self.positive_count)
        } else {
            Root(a.0 - self.positive_count)
        }
    }

    pub fn is_positive(&self, a: Root) -> bool {
        a.0 < self.positive_count
    }

    pub fn height(&self, a: Root) -> i64 {
        self.roots[a.0].iter().sum()
    }

    /// `α + β` if it is a root.
    pub fn add(&self, a: Root, b: Root) -> Option<Root> {
        let sum: Vec<i64> = self.roots[a.0]
            .iter()
            .zip(&self.roots[b.0])
            .map(|(x, y)| x + y)
            .collect();
        self.find(&sum)
    }

    /// The invariant form `(x, y) = Σ x_i y_j cartan[i][j] d[j]` on coordinate vectors.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for (xi, row) in x.iter().zip(&self.cartan) {
            if *xi == 0 {
                continue;
            }
            for ((yj, c), d) in y.iter().zip(row).zip(&self.symmetrizer) {
                acc += xi * yj * c * d;
            }
        }
        acc
    }

    pub fn inner(&self, a: Root, b: Root) -> i64 {
        self.form(&self.roots[a.0], &self.roots[b.0])
    }

    /// The Cartan integer `⟨α, β^∨⟩ = 2(α, β) / (β, β)`.
    pub fn pairing(&self, a: Root, b: Root) -> i64 {
        let num = 2 * self.inner(a, b);
        let den = self.inner(b, b);
        debug_assert_eq!(num % den, 0, "non-integral Cartan integer");
        num / den
    }

    /// `s_i(α) = α - ⟨α, α_i^∨⟩ α_i`.
    pub fn reflect(&self, a: Root, i: usize) -> Root {
        assert!(i < self.rank, "simple index {i} out of range");
        Root(self.reflections[a.0 * self.rank + i])
    }

    /// `s_β(α) = α - ⟨α, β^∨⟩ β`.
    pub fn reflect_along(&self, a: Root, b: Root) -> Root {
        let c = self.pairing(a, b);
        let v: Vec<i64> = self.roots[a.0]
            .iter()
            .zip(&self.roots[b.0])
            .map(|(x, y)| x - c * y)
            .collect();
        self.find(&v).expect("root systems are closed under reflections")
    }

    /// Index of the simple factor containing simple root `i`.
    pub fn component_of_simple(&self, i: usize) -> usize {
        self.component_of[i]
    }

    /// The simple factor a root lives in (roots are supported on one factor).
    pub fn component_of_root(&self, a: Root) -> usize {
        let i = self.roots[a.0]
            .iter()
            .position(|&x| x != 0)
            .expect("roots are non-zero");
        self.component_of[i]
    }

    /// The highest root of each simple factor, in factor order.
    pub fn highest_roots(&self) -> Vec<Root> {
        (0..self.spec.components.len())
            .map(|k| {
                self.positive_roots()
                    .filter(|&a| self.component_of_root(a) == k)
                    .max_by_key(|&a| (self.height(a), std::cmp::Reverse(a.0)))
                    .expect("every factor has a positive root")
            })
            .collect()
    }

    /// Recognizes the Cartan type of the root subsystem with simple system
    /// `simple` (given as roots of `self`). Factors are returned sorted;
    /// `None` if the pairings do not form a finite Dynkin diagram.
    pub fn classify_simple_system(&self, simple: &[Root]) -> Option<Vec<Component>> {
        let k = simple.len();
        let m: Vec<Vec<i64>> = simple
            .iter()
            .map(|&a| simple.iter().map(|&b| self.pairing(a, b)).collect())
            .collect();
        let lengths: Vec<i64> = simple.iter().map(|&a| self.inner(a, a)).collect();

        let mut visited = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if visited[start] {
                continue;
            }
            let mut nodes = vec![start];
            visited[start] = true;
            let mut head = 0;
            while head < nodes.len() {
                let a = nodes[head];
                head += 1;
                for b in 0..k {
                    if !visited[b] && m[a][b] != 0 {
                        visited[b] = true;
                        nodes.push(b);
                    }
                }
            }
            out.push(classify_connected(&nodes, &m, &lengths)?);
        }
        out.sort();
        Some(out)
    }
}

fn classify_connected(nodes: &[usize], m: &[Vec<i64>], lengths: &[i64]) -> Option<Component> {
    let n = nodes.len();
    if n == 1 {
        return Component::new(Family::A, 1).ok();
    }
    let mut edges = Vec::new();
    let mut degree = vec![0usize; m.len()];
    for (x, &a) in nodes.iter().enumerate() {
        for &b in &nodes[x + 1..] {
            if m[a][b] != 0 {
                let bond = m[a][b] * m[b][a];
                if !(1..=3).contains(&bond) {
                    return None;
                }
                edges.push((a, b, bond));
                degree[a] += 1;
                degree[b] += 1;
            }
        }
    }
    if edges.len() != n - 1 {
        return None;
    }
    let multi: Vec<_> = edges.iter().filter(|e| e.2 > 1).collect();
    let max_degree = nodes.iter().map(|&a| degree[a]).max().unwrap_or(0);
    match multi.as_slice() {
        [] => {
            if max_degree <= 2 {
                return Component::new(Family::A, n).ok();
            }
            let branches: Vec<usize> = nodes.iter().copied().filter(|&a| degree[a] >= 3).collect();
            if branches.len() != 1 || degree[branches[0]] != 3 {
                return None;
            }
            let centre = branches[0];
            let mut arms: Vec<usize> = nodes
                .iter()
                .copied()
                .filter(|&b| b != centre && m[centre][b] != 0)
                .map(|first| {
                    let (mut prev, mut cur, mut len) = (centre, first, 1);
                    loop {
                        let next = nodes
                            .iter()
                            .copied()
                            .find(|&c| c != prev && c != cur && m[cur][c] != 0);
                        match next {
                            Some(c) => {
                                prev = cur;
                                cur = c;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Component::new(Family::D, n).ok(),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Component::new(Family::E, n).ok(),
                _ => None,
            }
        }
        [&(a, b, bond)] => {
            if max_degree > 2 {
                return None;
            }
            match bond {
                3 => (n == 2).then(|| Component::new(Family::G, 2).ok()).flatten(),
                _ if n == 2 => Component::new(Family::B, 2).ok(),
                _ => {
                    let (end, inner) = if degree[a] == 1 {
                        (a, b)
                    } else if degree[b] == 1 {
                        (b, a)
                    } else {
                        return (n == 4).then(|| Component::new(Family::F, 4).ok()).flatten();
                    };
                    if lengths[end] < lengths[inner] {
                        Component::new(Family::B, n).ok()
                    } else {
                        Component::new(Family::C, n).ok()
                    }
                }
            }
        }
        _ => None,
    }
}

/// Solves `cartan[i][j] d[j] = cartan[j][i] d[i]` over each connected factor.
fn symmetrize(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    // d as fractions num/den, then cleared per factor
    let mut num = vec![0i64; n];
    let mut den = vec![1i64; n];
    let mut done = vec![false; n];
    let gcd = |mut a: i64, mut b: i64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    };
    for start in 0..n {
        if done[start] {
            continue;
        }
        num[start] = 1;
        done[start] = true;
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() {
            let i = comp[head];
            head += 1;
            for j in 0..n {
                if j == i || cartan[i][j] == 0 {
                    continue;
                }
                // d_j = cartan[j][i] d_i / cartan[i][j]
                let (p, q) = (cartan[j][i] * num[i], cartan[i][j] * den[i]);
                let g = gcd(p, q);
                let (p, q) = if q < 0 { (-p / g, -q / g) } else { (p / g, q / g) };
                if done[j] {
                    if num[j] * q != p * den[j] {
                        return Err(Error::Internal("Cartan matrix is not symmetrizable".into()));
                    }
                } else {
                    num[j] = p;
                    den[j] = q;
                    done[j] = true;
                    comp.push(j);
                }
            }
        }
        let l = comp.iter().fold(1i64, |acc, &i| acc / gcd(acc, den[i]) * den[i]);
        let scaled: Vec<i64> = comp.iter().map(|&i| num[i] * (l / den[i])).collect();
        let g = scaled.iter().fold(0i64, |acc, &x| gcd(acc, x));
        for (&i, &v) in comp.iter().zip(&scaled) {
            num[i] = v / g;
            den[i] = 1;
        }
    }
    if num.iter().any(|&d| d <= 0) {
        return Err(Error::Internal("non-positive symmetrizer entry".into()));
    }
    Ok(num)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(&s.parse().unwrap()).unwrap()
    }

    fn coords_of(r: &RootSystem, it: impl Iterator<Item = Root>) -> Vec<Vec<i64>> {
        it.map(|a| r.coords(a).to_vec()).collect()
    }

    #[test]
    fn rejects_invalid_components() {
        for bad in ["D3", "E5", "E9", "F3", "G3", "B1", "A0", "H3", "A", "Aq"] {
            let err = bad.parse::<RootSystemSpec>().unwrap_err();
            match err {
                Error::InvalidComponent { component, .. } => assert_eq!(component, bad),
                other => panic!("unexpected {other:?}"),
            }
        }
        let err = "A2+D3".parse::<RootSystemSpec>().unwrap_err();
        assert!(err.to_string().contains("D3"), "{err}");
    }

    #[test]
    fn parses_products() {
        let spec: RootSystemSpec = "a2xG2+B3".parse().unwrap();
        assert_eq!(spec.to_string(), "A2+G2+B3");
        assert_eq!(spec.rank(), 7);
        assert_eq!(spec.weyl_order(), 6 * 12 * 48);
    }

    #[test]
    fn small_systems() {
        let a1 = rs("A1");
        assert_eq!(coords_of(&a1, a1.roots()), vec![vec![1], vec![-1]]);

        let a2 = rs("A2");
        assert_eq!(
            coords_of(&a2, a2.roots()),
            vec![
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![-1, 0],
                vec![0, -1],
                vec![-1, -1]
            ]
        );

        let g2 = rs("G2");
        assert_eq!(g2.len(), 12);
        assert_eq!(g2.positive_count(), 6);
        assert_eq!(
            coords_of(&g2, g2.positive_roots()),
            vec![
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![3, 2]
            ]
        );
    }

    #[test]
    fn pairings() {
        let g2 = rs("G2");
        let (a1, a2) = (g2.simple_root(0), g2.simple_root(1));
        assert_eq!(g2.pairing(a1, a2), -1);
        assert_eq!(g2.pairing(a2, a1), -3);
        assert_eq!(g2.symmetrizer(), &[1, 3]);

        let a2sys = rs("A2");
        let sum = a2sys.find(&[1, 1]).unwrap();
        assert_eq!(a2sys.pairing(sum, a2sys.simple_root(0)), 1);

        for name in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let r = rs(name);
            for a in r.roots() {
                assert_eq!(r.pairing(a, a), 2);
            }
        }
    }

    #[test]
    fn simple_reflections() {
        let a2 = rs("A2");
        assert_eq!(a2.coords(a2.reflect(a2.simple_root(1), 0)), &[1, 1]);
        let g2 = rs("G2");
        assert_eq!(g2.coords(g2.reflect(g2.simple_root(1), 0)), &[3, 1]);
        for name in ["A3", "B2", "G2", "F4"] {
            let r = rs(name);
            for i in 0..r.rank() {
                let a = r.simple_root(i);
                assert_eq!(r.reflect(a, i), r.neg(a));
            }
        }
    }

    #[test]
    fn reflect_along_matches_simple_case() {
        let r = rs("B3");
        for a in r.roots() {
            for i in 0..r.rank() {
                assert_eq!(r.reflect_along(a, r.simple_root(i)), r.reflect(a, i));
            }
        }
    }

    #[test]
    fn symmetrizer_makes_cartan_symmetric() {
        for name in ["B4", "C4", "F4", "G2", "A2+C3", "E7"] {
            let r = rs(name);
            let (c, d) = (r.cartan(), r.symmetrizer());
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    assert_eq!(c[i][j] * d[j], c[j][i] * d[i], "{name} ({i},{j})");
                }
            }
        }
        assert_eq!(rs("B3").symmetrizer(), &[2, 2, 1]);
        assert_eq!(rs("C3").symmetrizer(), &[1, 1, 2]);
    }

    #[test]
    fn highest_roots() {
        let r = rs("G2+A2");
        let hs = r.highest_roots();
        assert_eq!(hs.len(), 2);
        assert_eq!(r.coords(hs[0]), &[3, 2, 0, 0]);
        assert_eq!(r.coords(hs[1]), &[0, 0, 1, 1]);
        let e8 = rs("E8");
        assert_eq!(e8.coords(e8.highest_roots()[0]), &[2, 3, 4, 6, 5, 4, 3, 2]);
        let f4 = rs("F4");
        assert_eq!(f4.coords(f4.highest_roots()[0]), &[2, 3, 4, 2]);
    }

    #[test]
    fn classifies_subsystems() {
        let g2 = rs("G2");
        let simple: Vec<Root> = (0..2).map(|i| g2.simple_root(i)).collect();
        assert_eq!(
            g2.classify_simple_system(&simple).unwrap(),
            vec![Component::new(Family::G, 2).unwrap()]
        );
        let long_a1s = [g2.simple_root(0), g2.find(&[3, 2]).unwrap()];
        let t = g2.classify_simple_system(&long_a1s).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.iter().all(|c| c.to_string() == "A1"));

        for name in ["A4", "B3", "C3", "D5", "E6", "E7", "F4", "B2"] {
            let r = rs(name);
            let simple: Vec<Root> = (0..r.rank()).map(|i| r.simple_root(i)).collect();
            let got = r.classify_simple_system(&simple).unwrap();
            assert_eq!(got.len(), 1);
            assert_eq!(got[0].to_string(), name);
        }
    }
}
