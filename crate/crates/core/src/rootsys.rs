//! Root systems of the simple Hermitian Lie algebras.
//!
//! Roots are integer coefficient vectors over the simple roots
//! `α_1, …, α_n` in the labelings of the classification tables; all metric
//! data lives in the Gram matrix, normalized so the shortest roots have
//! squared length 1. One simple root is marked noncompact.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use num_traits::{Signed, Zero};

use crate::algebra::AlgebraId;
use crate::error::{Error, Result};
use crate::linalg::{int, leading_minors, rat, Rational};

/// A root written in coordinates over the simple roots of its ambient system.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    /// The simple root `α_{index+1}` (indices here are 0-based).
    pub fn simple(rank: usize, index: usize) -> Self {
        let mut c = vec![0; rank];
        c[index] = 1;
        Root(c)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().map(|&c| c as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    /// Coefficientwise `self >= other`.
    pub fn dominates(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn scaled(&self, k: i32) -> Root {
        Root(self.0.iter().map(|&c| c * k).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        -&self
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Parses `[1,2,2,1,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("root literal must be bracketed: '{s}'")))?;
        if inner.trim().is_empty() {
            return Err(Error::Parse("empty root literal".to_string()));
        }
        inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad coefficient '{}' in '{s}'", x.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Root)
    }
}

/// Parses `;`-separated root literals, e.g. `[1,0,0,0];[0,1,1,1]`.
pub fn parse_root_list(s: &str) -> Result<Vec<Root>> {
    s.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// Dynkin diagram with squared lengths of the simple roots (1 or 2) and
/// bonds `(i, j, multiplicity)`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub norms: Vec<i64>,
    pub edges: Vec<(usize, usize, u8)>,
    pub noncompact: usize,
}

impl Diagram {
    fn chain(norms: Vec<i64>, noncompact: usize) -> Self {
        let edges = (1..norms.len()).map(|i| (i - 1, i, 1)).collect();
        Diagram {
            norms,
            edges,
            noncompact,
        }
    }

    /// Gram matrix: squared lengths on the diagonal and
    /// `⟨α_i, α_j⟩ = -m·min(|α_i|², |α_j|²)/2` across a bond of multiplicity `m`.
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        let n = self.norms.len();
        let mut g = vec![vec![Rational::zero(); n]; n];
        for (i, &norm) in self.norms.iter().enumerate() {
            g[i][i] = int(norm);
        }
        for &(i, j, m) in &self.edges {
            let v = rat(-(m as i64) * self.norms[i].min(self.norms[j]), 2);
            g[i][j] = v;
            g[j][i] = v;
        }
        g
    }

    /// The diagram of an ambient algebra, following the node labels drawn
    /// in the classification tables (1-based in comments).
    pub fn for_algebra(algebra: AlgebraId) -> Self {
        match algebra {
            AlgebraId::Su { p, q } => {
                // α_{q+1} - … - α_{p+q-1} - α_1 - α_2 - … - α_q
                let (p, q) = (p as usize, q as usize);
                let n = p + q - 1;
                let mut edges: Vec<(usize, usize, u8)> = Vec::new();
                for i in 1..q {
                    edges.push((i - 1, i, 1));
                }
                for i in q + 1..p + q - 1 {
                    edges.push((i - 1, i, 1));
                }
                if p >= 2 {
                    edges.push((p + q - 2, 0, 1));
                }
                Diagram {
                    norms: vec![1; n],
                    edges,
                    noncompact: 0,
                }
            }
            AlgebraId::Sp { p } => {
                // α_1 (long) = α_2 - α_3 - … - α_p
                let mut norms = vec![1; p as usize];
                norms[0] = 2;
                let mut d = Diagram::chain(norms, 0);
                d.edges[0].2 = 2;
                d
            }
            AlgebraId::SoStar { p } => {
                // α_1 - … - α_{p-1}, with α_p hanging off α_2 as drawn.
                let p = p as usize;
                let mut d = Diagram::chain(vec![1; p - 1], p - 1);
                d.norms.push(1);
                d.edges.push((1, p - 1, 1));
                d
            }
            AlgebraId::So2 { p } if p % 2 == 0 => {
                // D_k, k = (p+2)/2: α_1 - … - α_{k-1}, α_k on α_{k-2}.
                let k = (p as usize + 2) / 2;
                let mut d = Diagram::chain(vec![1; k - 1], 0);
                d.norms.push(1);
                d.edges.push((k - 3, k - 1, 1));
                d
            }
            AlgebraId::So2 { p } => {
                // B_k, k = (p+1)/2: α_1 - … - α_{k-1} => α_k (short).
                let k = (p as usize + 1) / 2;
                let mut norms = vec![2; k];
                norms[k - 1] = 1;
                let mut d = Diagram::chain(norms, 0);
                d.edges[k - 2].2 = 2;
                d
            }
            AlgebraId::E6 => {
                // α_1 - α_2 - α_3 - α_4 - α_5, α_6 on α_3.
                let mut d = Diagram::chain(vec![1; 5], 0);
                d.norms.push(1);
                d.edges.push((2, 5, 1));
                d
            }
            AlgebraId::E7 => {
                // α_1 - … - α_6, α_7 on α_4 (the node carrying coefficient 4
                // in the highest root).
                let mut d = Diagram::chain(vec![1; 6], 0);
                d.norms.push(1);
                d.edges.push((3, 6, 1));
                d
            }
        }
    }
}

/// Standard number of roots of the ambient Cartan type.
pub fn expected_root_count(algebra: AlgebraId) -> usize {
    match algebra {
        AlgebraId::Su { p, q } => {
            let n = (p + q - 1) as usize;
            n * (n + 1)
        }
        AlgebraId::Sp { p } => 2 * (p as usize).pow(2),
        AlgebraId::SoStar { p } => 2 * p as usize * (p as usize - 1),
        AlgebraId::So2 { p } if p % 2 == 0 => {
            let k = (p as usize + 2) / 2;
            2 * k * (k - 1)
        }
        AlgebraId::So2 { p } => {
            let k = (p as usize + 1) / 2;
            2 * k * k
        }
        AlgebraId::E6 => 72,
        AlgebraId::E7 => 126,
    }
}

/// A complete root system with its Hermitian marking.
#[derive(Clone, Debug)]
pub struct RootSystem {
    algebra: AlgebraId,
    diagram: Diagram,
    gram: Vec<Vec<Rational>>,
    roots: Vec<Root>,
    highest: Root,
}

impl RootSystem {
    /// Builds the root system of an ambient algebra and checks every
    /// structural invariant; any failure is an internal error.
    pub fn build(algebra: AlgebraId) -> Result<Self> {
        algebra.check_ambient()?;
        let diagram = Diagram::for_algebra(algebra);
        let gram = diagram.gram();
        let roots = generate_roots(&gram);
        let highest = highest_root_of(&roots)
            .ok_or_else(|| Error::Internal(format!("{algebra}: no unique highest root")))?;
        let rs = RootSystem {
            algebra,
            diagram,
            gram,
            roots,
            highest,
        };
        rs.check_invariants()?;
        Ok(rs)
    }

    fn check_invariants(&self) -> Result<()> {
        let name = self.algebra.to_string();
        let fail = |what: &str| Err(Error::Internal(format!("{name}: {what}")));
        if leading_minors(&self.gram).iter().any(|m| !m.is_positive()) {
            return fail("Gram matrix is not positive definite");
        }
        let min_diag = (0..self.rank()).map(|i| self.gram[i][i]).min();
        if min_diag != Some(int(1)) {
            return fail("shortest simple root does not have squared length 1");
        }
        if self.roots.len() != expected_root_count(self.algebra) {
            return fail("root count differs from the standard count");
        }
        let max_norm = self.roots.iter().map(|r| self.norm(r)).max();
        if Some(self.norm(&self.highest)) != max_norm {
            return fail("highest root is not long");
        }
        let nc = self.diagram.noncompact;
        if self.roots.iter().any(|r| r.0[nc].abs() > 1) {
            return fail("noncompact coefficient outside {-1,0,1}");
        }
        Ok(())
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.diagram.norms.len()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    /// 0-based index of the noncompact simple root.
    pub fn noncompact_index(&self) -> usize {
        self.diagram.noncompact
    }

    /// All roots, sorted, closed under negation.
    pub fn all_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn simple_root(&self, index: usize) -> Root {
        Root::simple(self.rank(), index)
    }

    pub fn contains(&self, a: &Root) -> bool {
        a.len() == self.rank() && self.roots.binary_search(a).is_ok()
    }

    fn check_dim(&self, a: &Root) -> Result<()> {
        if a.len() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                found: a.len(),
            });
        }
        Ok(())
    }

    /// `aᵀ · gram · b`.
    pub fn inner(&self, a: &Root, b: &Root) -> Result<Rational> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        Ok(inner_with(&self.gram, a, b))
    }

    pub(crate) fn norm(&self, a: &Root) -> Rational {
        inner_with(&self.gram, a, a)
    }

    pub fn is_noncompact(&self, a: &Root) -> Result<bool> {
        self.check_dim(a)?;
        if !self.contains(a) {
            return Err(Error::NotARoot {
                root: a.to_string(),
                algebra: self.algebra.to_string(),
            });
        }
        Ok(a.0[self.diagram.noncompact] != 0)
    }

    pub(crate) fn not_a_root(&self, a: &Root) -> Error {
        Error::NotARoot {
            root: a.to_string(),
            algebra: self.algebra.to_string(),
        }
    }
}

pub(crate) fn inner_with(gram: &[Vec<Rational>], a: &Root, b: &Root) -> Rational {
    let mut acc = Rational::zero();
    for (i, &ai) in a.0.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.0.iter().enumerate() {
            if bj != 0 {
                acc += gram[i][j] * int(ai as i64 * bj as i64);
            }
        }
    }
    acc
}

/// Generates all roots from the simple roots by saturating root strings:
/// `β + α_i` is a root iff `q = p - ⟨β, α_i^∨⟩ > 0`, where `p` is the length
/// of the string below `β`. Processes positive roots by height.
pub fn generate_roots(gram: &[Vec<Rational>]) -> Vec<Root> {
    let n = gram.len();
    let simple: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut positive: BTreeSet<Root> = simple.iter().cloned().collect();
    let mut layer: Vec<Root> = simple.clone();
    while !layer.is_empty() {
        let mut next: BTreeSet<Root> = BTreeSet::new();
        for beta in &layer {
            for (i, alpha) in simple.iter().enumerate() {
                let mut below = 0i64;
                let mut cur = beta - alpha;
                while positive.contains(&cur) {
                    below += 1;
                    cur = &cur - alpha;
                }
                let pairing = inner_with(gram, beta, alpha) * int(2) / gram[i][i];
                debug_assert!(pairing.is_integer());
                let above = below - pairing.to_integer();
                if above > 0 {
                    next.insert(beta + alpha);
                }
            }
        }
        layer = next
            .iter()
            .filter(|r| !positive.contains(*r))
            .cloned()
            .collect();
        positive.extend(next);
    }
    let mut roots: Vec<Root> = positive.iter().cloned().collect();
    roots.extend(positive.iter().map(|r| -r));
    roots.sort();
    roots
}

/// The unique positive root dominating every positive root, if it exists.
pub fn highest_root_of(roots: &[Root]) -> Option<Root> {
    let top = roots
        .iter()
        .filter(|r| r.is_positive())
        .max_by_key(|r| r.height())?;
    roots
        .iter()
        .filter(|r| r.is_positive())
        .all(|r| top.dominates(r))
        .then(|| top.clone())
}

/// Human-readable description of a root as a combination `α_1+2α_2+…`.
pub fn describe(root: &Root) -> String {
    let mut out = String::new();
    for (i, &c) in root.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&format!("{}", c.abs()));
        }
        out.push_str(&format!("α{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(v: &[i32]) -> Root {
        Root::new(v.to_vec())
    }

    #[test]
    fn su_2_3_is_a4() {
        let rs = RootSystem::build(AlgebraId::su(2, 3)).unwrap();
        assert_eq!(rs.rank(), 4);
        assert_eq!(rs.all_roots().len(), 20);
        assert_eq!(rs.highest_root(), &coeffs(&[1, 1, 1, 1]));
    }

    #[test]
    fn sp_highest_root_and_lengths() {
        for p in 2..=6 {
            let rs = RootSystem::build(AlgebraId::Sp { p }).unwrap();
            let mut expect = vec![2; p as usize];
            expect[0] = 1;
            let gamma = rs.highest_root().clone();
            assert_eq!(gamma, Root::new(expect));
            assert_eq!(rs.inner(&gamma, &gamma).unwrap(), int(2));
            assert_eq!(
                rs.inner(&rs.simple_root(1), &rs.simple_root(1)).unwrap(),
                int(1)
            );
        }
    }

    #[test]
    fn e7_highest_root() {
        let rs = RootSystem::build(AlgebraId::E7).unwrap();
        assert_eq!(rs.all_roots().len(), 126);
        assert_eq!(rs.highest_root(), &coeffs(&[1, 2, 3, 4, 3, 2, 2]));
    }

    #[test]
    fn e6_highest_root() {
        let rs = RootSystem::build(AlgebraId::E6).unwrap();
        assert_eq!(rs.all_roots().len(), 72);
        assert_eq!(rs.highest_root(), &coeffs(&[1, 2, 3, 2, 1, 2]));
    }

    #[test]
    fn so_star_highest_root() {
        for p in 5..=9u32 {
            let rs = RootSystem::build(AlgebraId::SoStar { p }).unwrap();
            let mut expect = vec![2; p as usize];
            expect[0] = 1;
            expect[p as usize - 2] = 1;
            expect[p as usize - 1] = 1;
            assert_eq!(rs.highest_root(), &Root::new(expect));
        }
    }

    #[test]
    fn so2_even_highest_root() {
        for p in [6u32, 8, 10, 12] {
            let rs = RootSystem::build(AlgebraId::So2 { p }).unwrap();
            let k = (p as usize + 2) / 2;
            let mut expect = vec![2; k];
            expect[0] = 1;
            expect[k - 2] = 1;
            expect[k - 1] = 1;
            assert_eq!(rs.highest_root(), &Root::new(expect));
            let gamma = rs.highest_root().clone();
            assert!(rs.is_noncompact(&gamma).unwrap());
        }
    }

    #[test]
    fn so2_odd_highest_root_is_b_type() {
        // For B_k the highest root is α_1 + 2(α_2 + … + α_k); the even-case
        // pattern α_1 + 2(α_2..α_{k-2}) + α_{k-1} + α_k is not a root for
        // k >= 4 and a short root for k = 3.
        for p in [5u32, 7, 9, 11, 13] {
            let rs = RootSystem::build(AlgebraId::So2 { p }).unwrap();
            let k = (p as usize + 1) / 2;
            let mut expect = vec![2; k];
            expect[0] = 1;
            assert_eq!(rs.highest_root(), &Root::new(expect));
            let mut even_pattern = vec![2; k];
            even_pattern[0] = 1;
            even_pattern[k - 2] = 1;
            even_pattern[k - 1] = 1;
            let even_pattern = Root::new(even_pattern);
            if k >= 4 {
                assert!(!rs.contains(&even_pattern));
            } else {
                assert_eq!(rs.inner(&even_pattern, &even_pattern).unwrap(), int(1));
            }
        }
    }

    #[test]
    fn noncompact_marking() {
        let rs = RootSystem::build(AlgebraId::su(2, 3)).unwrap();
        // −α_q with q = 3
        assert!(!rs.is_noncompact(&-rs.simple_root(2)).unwrap());
        assert!(rs.is_noncompact(&rs.simple_root(0)).unwrap());
        let sp = RootSystem::build(AlgebraId::Sp { p: 3 }).unwrap();
        assert!(sp.is_noncompact(&sp.simple_root(0)).unwrap());
        assert!(rs.is_noncompact(&coeffs(&[2, 0, 0, 0])).is_err());
    }

    #[test]
    fn inner_dimension_mismatch() {
        let rs = RootSystem::build(AlgebraId::su(2, 3)).unwrap();
        assert!(matches!(
            rs.inner(&coeffs(&[1, 0]), &rs.simple_root(0)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn parameter_errors_name_the_bound() {
        let err = RootSystem::build(AlgebraId::SoStar { p: 3 }).unwrap_err();
        assert_eq!(
            err,
            Error::ParameterRange {
                algebra: "so*(6)".to_string(),
                bound: "p >= 5"
            }
        );
    }

    #[test]
    fn root_literals() {
        let r: Root = "[1, 2,2,1,1]".parse().unwrap();
        assert_eq!(r.to_string(), "[1,2,2,1,1]");
        assert!("1,2".parse::<Root>().is_err());
        assert_eq!(parse_root_list("[1,0];[0,1]").unwrap().len(), 2);
    }

    #[test]
    fn rank_one_subsystem_highest_root() {
        let a = coeffs(&[0, 1, 0]);
        let roots = vec![-a.clone(), a.clone()];
        assert_eq!(highest_root_of(&roots), Some(a));
    }
}
