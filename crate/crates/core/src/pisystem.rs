//! Π-systems: validation, the generated root subsystem `Λ(Δ)` and
//! identification of the simple factors of the regular subalgebra.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::algebra::AlgebraId;
use crate::error::{Error, Result};
use crate::linalg::{determinant, int, integer_rank, solve, Rational};
use crate::rootsys::{Root, RootSystem};

/// The first failed Π-system condition together with its witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// (i): `a - b` is a root.
    DifferenceIsRoot { a: Root, b: Root },
    /// (ii): the set is linearly dependent.
    LinearlyDependent { rank: usize, size: usize },
    /// (iii): two noncompact roots in one connected component.
    TwoNoncompact { a: Root, b: Root },
}

impl Violation {
    pub fn condition(&self) -> &'static str {
        match self {
            Violation::DifferenceIsRoot { .. } => "i",
            Violation::LinearlyDependent { .. } => "ii",
            Violation::TwoNoncompact { .. } => "iii",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DifferenceIsRoot { a, b } => {
                write!(f, "(i) {a} - {b} is a root")
            }
            Violation::LinearlyDependent { rank, size } => {
                write!(f, "(ii) {size} roots span a space of rank {rank}")
            }
            Violation::TwoNoncompact { a, b } => {
                write!(f, "(iii) {a} and {b} are noncompact in the same component")
            }
        }
    }
}

/// A validated Π-system `Δ` of an ambient root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiSystem {
    ambient: AlgebraId,
    delta: Vec<Root>,
}

impl PiSystem {
    /// Validates `delta` and wraps it; a failed condition becomes an error.
    pub fn new(rs: &RootSystem, delta: Vec<Root>) -> Result<Self> {
        match validate(rs, &delta)? {
            None => Ok(PiSystem {
                ambient: rs.algebra(),
                delta,
            }),
            Some(v) => Err(Error::NotPiSystem(v.to_string())),
        }
    }

    pub fn ambient(&self) -> AlgebraId {
        self.ambient
    }

    pub fn roots(&self) -> &[Root] {
        &self.delta
    }

    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    fn check_ambient(&self, rs: &RootSystem) -> Result<()> {
        if rs.algebra() != self.ambient {
            return Err(Error::Internal(format!(
                "Π-system of {} used with {}",
                self.ambient,
                rs.algebra()
            )));
        }
        Ok(())
    }
}

/// Checks conditions (i)–(iii) in order and reports the first failure.
///
/// Condition (i) asks that no difference of two members is a root.
pub fn validate(rs: &RootSystem, delta: &[Root]) -> Result<Option<Violation>> {
    for a in delta {
        if a.len() != rs.rank() {
            return Err(Error::Dimension {
                expected: rs.rank(),
                found: a.len(),
            });
        }
        if !rs.contains(a) {
            return Err(rs.not_a_root(a));
        }
    }
    for (i, a) in delta.iter().enumerate() {
        for b in &delta[i + 1..] {
            if rs.contains(&(a - b)) {
                return Ok(Some(Violation::DifferenceIsRoot {
                    a: a.clone(),
                    b: b.clone(),
                }));
            }
        }
    }
    let rows: Vec<Vec<i64>> = delta
        .iter()
        .map(|r| r.coeffs().iter().map(|&c| c as i64).collect())
        .collect();
    let rank = integer_rank(&rows);
    if rank < delta.len() {
        return Ok(Some(Violation::LinearlyDependent {
            rank,
            size: delta.len(),
        }));
    }
    for comp in components(rs, delta) {
        let nc: Vec<&Root> = comp
            .iter()
            .map(|&i| &delta[i])
            .filter(|r| r.coeffs()[rs.noncompact_index()] != 0)
            .collect();
        if nc.len() > 1 {
            return Ok(Some(Violation::TwoNoncompact {
                a: nc[0].clone(),
                b: nc[1].clone(),
            }));
        }
    }
    Ok(None)
}

/// Connected components of `delta` under nonzero inner product, as sorted
/// index lists ordered by their smallest member.
pub fn components(rs: &RootSystem, delta: &[Root]) -> Vec<Vec<usize>> {
    let n = delta.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && !rs.norm_pair(&delta[i], &delta[j]).is_zero() {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

impl RootSystem {
    fn norm_pair(&self, a: &Root, b: &Root) -> Rational {
        crate::rootsys::inner_with(self.gram(), a, b)
    }
}

/// Coordinates of `r` over the independent set `basis`, if `r` lies in its
/// rational span.
fn span_coords(rs: &RootSystem, basis: &[Root], r: &Root) -> Option<Vec<Rational>> {
    let g: Vec<Vec<Rational>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| rs.norm_pair(a, b)).collect())
        .collect();
    let rhs: Vec<Rational> = basis.iter().map(|a| rs.norm_pair(a, r)).collect();
    let x = solve(&g, &rhs)?;
    let mut back = vec![Rational::zero(); r.len()];
    for (xi, b) in x.iter().zip(basis) {
        for (slot, &c) in back.iter_mut().zip(b.coeffs()) {
            *slot += *xi * int(c as i64);
        }
    }
    let matches = back
        .iter()
        .zip(r.coeffs())
        .all(|(v, &c)| *v == int(c as i64));
    matches.then_some(x)
}

fn integer_coords(rs: &RootSystem, basis: &[Root], r: &Root) -> Option<Vec<i64>> {
    let x = span_coords(rs, basis, r)?;
    x.iter()
        .map(|v| v.is_integer().then(|| v.to_integer()))
        .collect()
}

/// `Λ(Δ) = (Σ ℤα) ∩ Λ`, sorted.
pub fn subsystem(rs: &RootSystem, ps: &PiSystem) -> Result<Vec<Root>> {
    ps.check_ambient(rs)?;
    Ok(lattice_roots(rs, ps.roots()))
}

fn lattice_roots(rs: &RootSystem, basis: &[Root]) -> Vec<Root> {
    rs.all_roots()
        .iter()
        .filter(|r| integer_coords(rs, basis, r).is_some())
        .cloned()
        .collect()
}

/// Cartan–Killing letter of a simple root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub letter: CartanLetter,
    pub rank: usize,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.letter, self.rank)
    }
}

/// One simple factor of a regular subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorDescriptor {
    /// `None` for compact factors.
    pub hermitian: Option<AlgebraId>,
    pub cartan_type: CartanType,
    pub rank: u32,
    /// Highest root of the component, in ambient coordinates.
    pub gamma: Root,
    pub noncompact_root: Option<Root>,
    /// The members of `Δ` in this component, sorted.
    pub members: Vec<Root>,
}

impl FactorDescriptor {
    pub fn is_compact(&self) -> bool {
        self.hermitian.is_none()
    }

    pub fn name(&self) -> String {
        match self.hermitian {
            Some(a) => a.to_string(),
            None => format!("compact {}", self.cartan_type),
        }
    }
}

/// The shape of a connected Dynkin diagram, with node orderings useful for
/// locating the noncompact node.
enum Shape {
    /// Nodes along the path. For B the short node is last; for C the long
    /// node is first.
    Path(Vec<usize>),
    /// The three arms, each listed outward from the branch node,
    /// sorted by length.
    Fork([Vec<usize>; 3]),
}

fn cartan_shape(rs: &RootSystem, roots: &[Root]) -> Result<(CartanType, Shape)> {
    let n = roots.len();
    let norms: Vec<Rational> = roots.iter().map(|r| rs.norm_pair(r, r)).collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut mult_edges: Vec<(usize, usize, i64)> = Vec::new();
    let describe = || {
        roots
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(";")
    };
    for i in 0..n {
        for j in i + 1..n {
            let g = rs.norm_pair(&roots[i], &roots[j]);
            if g.is_zero() {
                continue;
            }
            let m = g * g * int(4) / (norms[i] * norms[j]);
            if !m.is_integer() || !(1..=3).contains(&m.to_integer()) || g.is_positive() {
                return Err(Error::CartanType(format!("bad bond in {}", describe())));
            }
            adj[i].push(j);
            adj[j].push(i);
            if m.to_integer() > 1 {
                mult_edges.push((i, j, m.to_integer()));
            }
        }
    }
    let edge_count: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edge_count + 1 != n {
        return Err(Error::CartanType(format!(
            "diagram is not a tree: {}",
            describe()
        )));
    }
    let ty = |letter| CartanType { letter, rank: n };
    if n == 1 {
        return Ok((ty(CartanLetter::A), Shape::Path(vec![0])));
    }
    let max_deg = adj.iter().map(Vec::len).max().unwrap_or(0);
    if max_deg <= 2 {
        let end = (0..n).find(|&i| adj[i].len() == 1).unwrap();
        let mut path = walk(&adj, end, usize::MAX);
        match mult_edges.as_slice() {
            [] => Ok((ty(CartanLetter::A), Shape::Path(path))),
            [(_, _, 3)] if n == 2 => Ok((ty(CartanLetter::G), Shape::Path(path))),
            [(i, j, 2)] => {
                let (i, j) = (*i, *j);
                let at_end = |k: usize| adj[k].len() == 1;
                let end_node = if at_end(i) {
                    Some(i)
                } else if at_end(j) {
                    Some(j)
                } else {
                    None
                };
                let Some(e) = end_node else {
                    return if n == 4 {
                        Ok((ty(CartanLetter::F), Shape::Path(path)))
                    } else {
                        Err(Error::CartanType(format!(
                            "double bond inside a path: {}",
                            describe()
                        )))
                    };
                };
                let other = if e == i { j } else { i };
                if n == 2 {
                    // B2 = C2: spelled C, long node first.
                    if norms[e] < norms[other] {
                        path = vec![other, e];
                    } else {
                        path = vec![e, other];
                    }
                    return Ok((ty(CartanLetter::C), Shape::Path(path)));
                }
                if path[0] == e {
                    path.reverse();
                }
                // path now ends at the node `e` beyond the double bond.
                if norms[e] < norms[other] {
                    Ok((ty(CartanLetter::B), Shape::Path(path)))
                } else {
                    path.reverse();
                    Ok((ty(CartanLetter::C), Shape::Path(path)))
                }
            }
            _ => Err(Error::CartanType(format!(
                "too many multiple bonds: {}",
                describe()
            ))),
        }
    } else {
        let branches: Vec<usize> = (0..n).filter(|&i| adj[i].len() >= 3).collect();
        if branches.len() != 1 || max_deg != 3 || !mult_edges.is_empty() {
            return Err(Error::CartanType(format!(
                "not a Dynkin diagram: {}",
                describe()
            )));
        }
        let b = branches[0];
        let mut arms: Vec<Vec<usize>> = adj[b].iter().map(|&s| walk(&adj, s, b)).collect();
        arms.sort_by_key(Vec::len);
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        let letter = match lens.as_slice() {
            [1, 1, _] => CartanLetter::D,
            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => CartanLetter::E,
            _ => {
                return Err(Error::CartanType(format!(
                    "not a Dynkin diagram: {}",
                    describe()
                )))
            }
        };
        let arms: [Vec<usize>; 3] = [arms[0].clone(), arms[1].clone(), arms[2].clone()];
        Ok((ty(letter), Shape::Fork(arms)))
    }
}

/// Walks away from `from` starting at `start` until the path ends.
fn walk(adj: &[Vec<usize>], start: usize, from: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut cur = start;
    while let Some(x) = adj[cur]
        .iter()
        .copied()
        .find(|&x| x != from && !out.contains(&x))
    {
        out.push(x);
        cur = x;
    }
    out
}

fn hermitian_name(ty: CartanType, shape: &Shape, nc: usize, roots: &[Root]) -> Result<AlgebraId> {
    let n = ty.rank as u32;
    let unrecognized =
        || Error::UnrecognizedCominuscule(format!("{ty} with noncompact root {}", roots[nc]));
    match (ty.letter, shape) {
        (CartanLetter::A, Shape::Path(path)) => {
            let l = path.iter().position(|&x| x == nc).unwrap() as u32 + 1;
            let (a, b) = (l, n + 1 - l);
            Ok(AlgebraId::su(a.min(b), a.max(b)))
        }
        (CartanLetter::B, Shape::Path(path)) if path[0] == nc => {
            Ok(AlgebraId::So2 { p: 2 * n - 1 })
        }
        (CartanLetter::C, Shape::Path(path)) if path[0] == nc => Ok(AlgebraId::Sp { p: n }),
        (CartanLetter::D, Shape::Fork(arms)) => {
            let tip = |arm: &Vec<usize>| arm.last() == Some(&nc);
            if n == 4 && arms.iter().any(tip) {
                Ok(AlgebraId::So2 { p: 6 })
            } else if tip(&arms[2]) {
                Ok(AlgebraId::So2 { p: 2 * n - 2 })
            } else if tip(&arms[0]) || tip(&arms[1]) {
                Ok(AlgebraId::SoStar { p: n })
            } else {
                Err(unrecognized())
            }
        }
        (CartanLetter::E, Shape::Fork(arms)) => {
            // The cominuscule node ends an arm of length 2 (E6) or 3 (E7).
            let arm = arms.iter().find(|a| a.last() == Some(&nc)).map(Vec::len);
            match (n, arm) {
                (6, Some(2)) => Ok(AlgebraId::E6),
                (7, Some(3)) => Ok(AlgebraId::E7),
                _ => Err(unrecognized()),
            }
        }
        _ => Err(unrecognized()),
    }
}

/// Splits `Δ` into components and names each simple factor.
///
/// The result is sorted, so it does not depend on the order of `Δ`.
pub fn identify(rs: &RootSystem, ps: &PiSystem) -> Result<Vec<FactorDescriptor>> {
    ps.check_ambient(rs)?;
    let delta = ps.roots();
    let mut out = Vec::new();
    for comp in components(rs, delta) {
        let roots: Vec<Root> = comp.iter().map(|&i| delta[i].clone()).collect();
        let (ty, shape) = cartan_shape(rs, &roots)?;
        let cartan: Vec<Vec<Rational>> = roots
            .iter()
            .map(|a| {
                roots
                    .iter()
                    .map(|b| rs.norm_pair(a, b) * int(2) / rs.norm_pair(b, b))
                    .collect()
            })
            .collect();
        if !determinant(&cartan).is_positive() {
            return Err(Error::Internal(format!(
                "Cartan matrix of {ty} is not positive"
            )));
        }
        let nc = roots
            .iter()
            .position(|r| r.coeffs()[rs.noncompact_index()] != 0);
        let hermitian = match nc {
            Some(i) => Some(hermitian_name(ty, &shape, i, &roots)?),
            None => None,
        };
        let gamma = component_highest_root(rs, &roots)?;
        let mut members = roots.clone();
        members.sort();
        out.push(FactorDescriptor {
            hermitian,
            cartan_type: ty,
            rank: hermitian.map_or(0, |h| h.rank()),
            gamma,
            noncompact_root: nc.map(|i| roots[i].clone()),
            members,
        });
    }
    out.sort();
    Ok(out)
}

/// Highest root of `Λ(component)` with respect to the component as a base.
fn component_highest_root(rs: &RootSystem, basis: &[Root]) -> Result<Root> {
    let mut best: Option<(Vec<i64>, Root)> = None;
    let mut positives: Vec<Vec<i64>> = Vec::new();
    for r in rs.all_roots() {
        let Some(x) = integer_coords(rs, basis, r) else {
            continue;
        };
        if x.iter().all(|&c| c >= 0) {
            let h: i64 = x.iter().sum();
            if best
                .as_ref()
                .map_or(true, |(bx, _)| bx.iter().sum::<i64>() < h)
            {
                best = Some((x.clone(), r.clone()));
            }
            positives.push(x);
        } else if !x.iter().all(|&c| c <= 0) {
            return Err(Error::Internal(format!(
                "component {} is not a base of its lattice roots",
                basis
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(";")
            )));
        }
    }
    let (top, root) = best.ok_or_else(|| Error::Internal("empty component".to_string()))?;
    if positives
        .iter()
        .any(|x| x.iter().zip(&top).any(|(a, b)| a > b))
    {
        return Err(Error::Internal(
            "component has no dominant root".to_string(),
        ));
    }
    Ok(root)
}

/// Multiset comparison of identified factors against claimed names, using
/// the canonical spellings of low-dimensional isomorphisms. Compact factors
/// are ignored.
pub fn matches_claim(factors: &[FactorDescriptor], claimed: &[AlgebraId]) -> bool {
    canonical_multiset(factors.iter().filter_map(|f| f.hermitian))
        == canonical_multiset(claimed.iter().copied())
}

pub fn canonical_multiset(algebras: impl Iterator<Item = AlgebraId>) -> Vec<AlgebraId> {
    let mut v: Vec<AlgebraId> = algebras.flat_map(|a| a.canonical()).collect();
    v.sort();
    v
}

/// Distinct roots of `Λ(Δ)` that are positive with respect to `Δ`.
pub fn positive_subsystem(rs: &RootSystem, ps: &PiSystem) -> Result<BTreeSet<Root>> {
    ps.check_ambient(rs)?;
    Ok(lattice_roots(rs, ps.roots())
        .into_iter()
        .filter(|r| integer_coords(rs, ps.roots(), r).is_some_and(|x| x.iter().all(|&c| c >= 0)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i32]) -> Root {
        Root::new(v.to_vec())
    }

    #[test]
    fn full_base_identifies_ambient() {
        for a in [
            AlgebraId::su(2, 3),
            AlgebraId::su(1, 4),
            AlgebraId::Sp { p: 4 },
            AlgebraId::SoStar { p: 6 },
            AlgebraId::SoStar { p: 7 },
            AlgebraId::So2 { p: 8 },
            AlgebraId::So2 { p: 9 },
            AlgebraId::E6,
            AlgebraId::E7,
        ] {
            let rs = RootSystem::build(a).unwrap();
            let base: Vec<Root> = (0..rs.rank()).map(|i| rs.simple_root(i)).collect();
            let ps = PiSystem::new(&rs, base).unwrap();
            let f = identify(&rs, &ps).unwrap();
            assert_eq!(f.len(), 1, "{a}");
            assert_eq!(f[0].hermitian.unwrap().canonical(), a.canonical(), "{a}");
            assert_eq!(&f[0].gamma, rs.highest_root(), "{a}");
            assert_eq!(subsystem(&rs, &ps).unwrap().len(), rs.all_roots().len());
        }
    }

    #[test]
    fn dependent_set_fails_ii() {
        let rs = RootSystem::build(AlgebraId::su(2, 2)).unwrap();
        let a = rs.simple_root(0);
        let v = validate(&rs, &[a.clone(), -a]).unwrap().unwrap();
        assert_eq!(v.condition(), "ii");
    }

    #[test]
    fn difference_fails_i() {
        let rs = RootSystem::build(AlgebraId::su(3, 3)).unwrap();
        let v = validate(&rs, &[rs.simple_root(1), r(&[0, 1, 1, 0, 0])])
            .unwrap()
            .unwrap();
        assert_eq!(v.condition(), "i");
    }

    #[test]
    fn non_root_member_is_an_error() {
        let rs = RootSystem::build(AlgebraId::su(2, 2)).unwrap();
        assert!(matches!(
            validate(&rs, &[r(&[2, 0, 0])]),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn rank_one_subsystem() {
        let rs = RootSystem::build(AlgebraId::Sp { p: 3 }).unwrap();
        let ps = PiSystem::new(&rs, vec![rs.simple_root(0)]).unwrap();
        let sub = subsystem(&rs, &ps).unwrap();
        assert_eq!(sub, vec![-rs.simple_root(0), rs.simple_root(0)]);
        let f = identify(&rs, &ps).unwrap();
        assert_eq!(f[0].hermitian, Some(AlgebraId::su(1, 1)));
    }

    #[test]
    fn compact_component() {
        let rs = RootSystem::build(AlgebraId::su(2, 3)).unwrap();
        let ps = PiSystem::new(&rs, vec![rs.simple_root(1), rs.simple_root(2)]).unwrap();
        let f = identify(&rs, &ps).unwrap();
        assert!(f[0].is_compact());
        assert_eq!(f[0].cartan_type.to_string(), "A2");
        assert_eq!(f[0].rank, 0);
    }
}
