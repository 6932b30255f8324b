//! Skew-symmetric tensor representations `ρₘ: su(p,1) → ∧ᵐV` with
//! `V = ℂ^{p+1}`: signatures, eigenvalues of the disc image, the closed-form
//! pairings and brute-force oracles built from explicit matrices.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{int, Rational};
use crate::matrixalg::{
    complex_structure, disc_sostar, disc_su, include, scaled_pairing, z_disc, CMatrix,
    GaussianRational, Model, ModelElement,
};
use crate::tightness::Status;

/// Largest `p` accepted by the brute-force oracles.
pub const ORACLE_MAX_P: usize = 8;

/// `C(n,k)`, zero outside `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    num_integer::binomial(n, k)
}

fn check_range(p: usize, m: usize) -> Result<()> {
    if p < 1 || m < 1 || m > p {
        return Err(Error::Domain(format!("need 1 <= m <= p, got p={p}, m={m}")));
    }
    Ok(())
}

/// `ρₘ` of `su(p,1)` with the signature of the induced form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorRepDescriptor {
    pub p: usize,
    pub m: usize,
    pub p_prime: usize,
    pub q_prime: usize,
}

impl TensorRepDescriptor {
    pub fn new(p: usize, m: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::Domain(format!("need p >= 2, got {p}")));
        }
        let (p_prime, q_prime) = signature(p, m)?;
        Ok(TensorRepDescriptor {
            p,
            m,
            p_prime,
            q_prime,
        })
    }

    pub fn dimension(&self) -> usize {
        self.p_prime + self.q_prime
    }

    /// `p′ = q′`, which happens exactly for odd `p` and `m = (p+1)/2`.
    pub fn is_balanced(&self) -> bool {
        self.p_prime == self.q_prime
    }
}

/// `(C(p,m), C(p,m-1))`.
pub fn signature(p: usize, m: usize) -> Result<(usize, usize)> {
    check_range(p, m)?;
    let (p, m) = (p as i64, m as i64);
    Ok((binom(p, m) as usize, binom(p, m - 1) as usize))
}

/// Strictly increasing subset of `{1,…,p+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetBasisElement {
    indices: Vec<usize>,
}

impl SubsetBasisElement {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        let ok = indices.windows(2).all(|w| w[0] < w[1])
            && indices.first().is_none_or(|&i| i >= 1)
            && indices.last().is_none_or(|&i| i <= n);
        if !ok {
            return Err(Error::Domain(format!(
                "{indices:?} is not an ordered subset of 1..={n}"
            )));
        }
        Ok(SubsetBasisElement { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn last(&self) -> usize {
        *self.indices.last().expect("nonempty subset")
    }

    /// `F^m(e_I, e_I)`: `+1` unless `p+1 ∈ I`.
    pub fn norm_sign(&self, p: usize) -> i32 {
        if self.last() == p + 1 {
            -1
        } else {
            1
        }
    }

    fn complement(&self, n: usize) -> SubsetBasisElement {
        SubsetBasisElement {
            indices: (1..=n).filter(|i| !self.indices.contains(i)).collect(),
        }
    }
}

/// All `m`-subsets of `{1,…,n}` in lexicographic order.
pub fn subsets(n: usize, m: usize) -> Vec<SubsetBasisElement> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=m).collect();
    if m > n {
        return out;
    }
    loop {
        out.push(SubsetBasisElement {
            indices: cur.clone(),
        });
        let Some(i) = (0..m).rev().find(|&i| cur[i] < n - m + i + 1) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..m {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// The basis of `∧ᵐV`: the positive subsets (`iₘ ≤ p`) lexicographically
/// with those ending in `p` moved last, then the negative ones.
pub fn ordered_basis(p: usize, m: usize) -> Vec<SubsetBasisElement> {
    let all = subsets(p + 1, m);
    let (neg, pos): (Vec<_>, Vec<_>) = all.into_iter().partition(|s| s.last() == p + 1);
    let (ends_p, rest): (Vec<_>, Vec<_>) = pos.into_iter().partition(|s| s.last() == p);
    rest.into_iter().chain(ends_p).chain(neg).collect()
}

/// Multiplicities of the eigenvalues `+i/2`, `-i/2`, `0` of `ρₘd_{p,1}Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EigenMultiplicities {
    pub plus_half_i: usize,
    pub minus_half_i: usize,
    pub zero: usize,
}

impl EigenMultiplicities {
    pub fn total(&self) -> usize {
        self.plus_half_i + self.minus_half_i + self.zero
    }
}

pub fn disc_image_eigenvalues(p: usize, m: usize) -> Result<EigenMultiplicities> {
    check_range(p, m)?;
    let (p, m) = (p as i64, m as i64);
    let k = binom(p - 1, m - 1) as usize;
    Ok(EigenMultiplicities {
        plus_half_i: k,
        minus_half_i: k,
        zero: binom(p + 1, m) as usize - 2 * k,
    })
}

/// `-(C(p+1,m)+1)(C(p-1,m-1) - min(p′,q′))`; for `p′ ≥ q′` the second
/// factor is `C(p-1,m-1) - C(p,m-1)`.
pub fn su_target_pairing(p: usize, m: usize) -> Result<i64> {
    check_range(p, m)?;
    let (pp, qp) = signature(p, m)?;
    let (p, m) = (p as i64, m as i64);
    let n = binom(p + 1, m);
    let k = binom(p - 1, m - 1);
    Ok(-(n + 1) * (k - pp.min(qp) as i64))
}

/// `m = (p+1)/2` for odd `p`.
fn middle(p: usize) -> usize {
    p.div_ceil(2)
}

/// `(2p′-2)(C(p-1,m-1) - p′ + 1)` for `p ≡ 3 (mod 4)`, `m = (p+1)/2`.
pub fn sostar_target_pairing(p: usize) -> Result<i64> {
    if p % 4 != 3 {
        return Err(Error::Domain(format!(
            "so* target needs p ≡ 3 mod 4, got p={p}"
        )));
    }
    let m = middle(p);
    let (pp, _) = signature(p, m)?;
    let pp = pp as i64;
    let k = binom(p as i64 - 1, m as i64 - 1);
    Ok((2 * pp - 2) * (k - pp + 1))
}

/// The factorization argument for a balanced `ρₘ` landing in a tube-type
/// target `g ⊂ su(p′,p′)` that is itself tightly embedded: the composite
/// into `su(p′,p′)` is not tight, hence neither is `ρₘ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorizationArgument {
    pub p: usize,
    pub m: usize,
    pub p_prime: usize,
    /// `su_target_pairing(p, m)`, nonzero.
    pub composite_value: i64,
    pub status: Status,
}

fn factorization(p: usize) -> Result<FactorizationArgument> {
    let m = middle(p);
    let (p_prime, _) = signature(p, m)?;
    let composite_value = su_target_pairing(p, m)?;
    let status = if composite_value != 0 {
        Status::NotTight
    } else {
        Status::Unknown
    };
    Ok(FactorizationArgument {
        p,
        m,
        p_prime,
        composite_value,
        status,
    })
}

/// `ρₘ: su(p,1) → sp(2p′)` for `p ≡ 1 (mod 4)`.
pub fn sp_target_verdict(p: usize) -> Result<FactorizationArgument> {
    if p % 4 != 1 || p < 5 {
        return Err(Error::Domain(format!(
            "sp target needs p ≡ 1 mod 4, p >= 5, got p={p}"
        )));
    }
    factorization(p)
}

/// `ρₘ: su(p,1) → so*(2p′)` for `p ≡ 3 (mod 4)` with `p′` even, where
/// `so*(2p′) ⊂ su(p′,p′)` is tight.
pub fn sostar_even_verdict(p: usize) -> Result<FactorizationArgument> {
    if p % 4 != 3 {
        return Err(Error::Domain(format!(
            "so* target needs p ≡ 3 mod 4, got p={p}"
        )));
    }
    let f = factorization(p)?;
    if f.p_prime % 2 == 1 {
        return Err(Error::Domain(format!("p′ = {} is odd", f.p_prime)));
    }
    Ok(f)
}

/// Values of the explicit matrix computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleValue {
    /// `Re Tr((ρdZ - d′Z)Z′)`.
    pub trace: Rational,
    /// The trace under the scale `2(p′+q′)`.
    pub killing: Rational,
    /// The trace under the scale of the closed-form pairing where one is
    /// known (`2(p′+q′+1)` for su targets), otherwise equal to `killing`.
    pub value: Rational,
}

/// `ρₘ(X)` on `e_I` for diagonal `X`: the sum of the entries at `I`.
fn rho_diagonal(x: &CMatrix, basis: &[SubsetBasisElement]) -> Vec<GaussianRational> {
    basis
        .iter()
        .map(|s| {
            s.indices()
                .iter()
                .fold(GaussianRational::zero(), |acc, &i| {
                    acc + x.get(i - 1, i - 1)
                })
        })
        .collect()
}

fn guard(p: usize) -> Result<()> {
    if p > ORACLE_MAX_P {
        return Err(Error::SizeGuard(format!(
            "brute force is limited to p <= {ORACLE_MAX_P}, got {p}"
        )));
    }
    Ok(())
}

/// Builds `∧ᵐV`, the matrices `ρₘd_{p,1}Z`, `d_{p′,q′}Z` and `Z_{p′,q′}`,
/// and evaluates the pairing.
pub fn brute_force_pairing(p: usize, m: usize) -> Result<OracleValue> {
    guard(p)?;
    let rep = TensorRepDescriptor::new(p, m)?;
    let z = z_disc();
    let dz = disc_su(p, 1, &z)?;
    let basis = ordered_basis(p, m);
    let target = Model::Su {
        p: rep.p_prime,
        q: rep.q_prime,
    };
    let rho = ModelElement::new(target, CMatrix::diag(&rho_diagonal(dz.matrix(), &basis)))?;
    let dprime = disc_su(rep.p_prime, rep.q_prime, &z)?;
    let zprime = complex_structure(target);
    let diff = ModelElement::new(target, rho.matrix().sub(dprime.matrix())?)?;
    let trace = scaled_pairing(&diff, &zprime, Some(int(1)))?;
    let n = rep.dimension() as i64;
    Ok(OracleValue {
        trace,
        killing: int(2 * n) * trace,
        value: int(2 * (n + 1)) * trace,
    })
}

/// The so* computation for `p ≡ 3 (mod 4)` with `p′` odd: the basis
/// `e_{I₁},…,e_{I_k}, σ₁e_{I₁ᶜ},…`, the disc `d_{p′}` and `Z` of `so*(2p′)`.
pub fn brute_force_sostar(p: usize) -> Result<OracleValue> {
    guard(p)?;
    if p % 4 != 3 {
        return Err(Error::Domain(format!(
            "so* target needs p ≡ 3 mod 4, got p={p}"
        )));
    }
    let m = middle(p);
    let rep = TensorRepDescriptor::new(p, m)?;
    let pp = rep.p_prime;
    let z = z_disc();
    let dz = disc_su(p, 1, &z)?;
    let (rest, ends_p): (Vec<_>, Vec<_>) = subsets(p, m).into_iter().partition(|s| s.last() != p);
    let first: Vec<_> = rest.into_iter().chain(ends_p).collect();
    let basis: Vec<_> = first
        .iter()
        .cloned()
        .chain(first.iter().map(|s| s.complement(p + 1)))
        .collect();
    let model = Model::SoStar { p: pp };
    let rho = ModelElement::new(model, CMatrix::diag(&rho_diagonal(dz.matrix(), &basis)))?;
    let dprime = disc_sostar(pp, &z)?;
    let j = complex_structure(model);
    let (rho, dprime, j) = (include(&rho)?, include(&dprime)?, include(&j)?);
    let diff = ModelElement::new(rho.model(), rho.matrix().sub(dprime.matrix())?)?;
    let trace = scaled_pairing(&diff, &j, Some(int(1)))?;
    let killing = int(4 * pp as i64) * trace;
    Ok(OracleValue {
        trace,
        killing,
        value: killing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures() {
        assert_eq!(signature(4, 2).unwrap(), (6, 4));
        assert_eq!(signature(7, 1).unwrap(), (7, 1));
        assert_eq!(signature(5, 3).unwrap(), (10, 10));
        assert!(signature(3, 4).is_err());
        assert!(signature(3, 0).is_err());
    }

    #[test]
    fn eigenvalues() {
        let e = disc_image_eigenvalues(4, 2).unwrap();
        assert_eq!((e.plus_half_i, e.minus_half_i, e.zero), (3, 3, 4));
        let e = disc_image_eigenvalues(3, 2).unwrap();
        assert_eq!((e.plus_half_i, e.minus_half_i, e.zero), (2, 2, 2));
        let e = disc_image_eigenvalues(6, 1).unwrap();
        assert_eq!((e.plus_half_i, e.minus_half_i, e.zero), (1, 1, 5));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(su_target_pairing(4, 2).unwrap(), 11);
        assert_eq!(su_target_pairing(3, 2).unwrap(), 7);
        assert_eq!(su_target_pairing(6, 1).unwrap(), 0);
        assert_eq!(su_target_pairing(6, 6).unwrap(), 0);
        assert_eq!(sostar_target_pairing(3).unwrap(), 0);
        assert_eq!(sostar_target_pairing(7).unwrap(), -952);
        assert_ne!(sostar_target_pairing(11).unwrap(), 0);
        assert!(sostar_target_pairing(5).is_err());
    }

    #[test]
    fn subset_enumeration() {
        let s = subsets(4, 2);
        assert_eq!(s.len(), 6);
        assert_eq!(s[0].indices(), &[1, 2]);
        assert_eq!(s[5].indices(), &[3, 4]);
        let b = ordered_basis(3, 2);
        let lasts: Vec<usize> = b.iter().map(SubsetBasisElement::last).collect();
        assert_eq!(lasts, [2, 3, 3, 4, 4, 4]);
        assert!(SubsetBasisElement::new(alloc::vec![2, 1], 4).is_err());
    }

    #[test]
    fn oracle_small() {
        assert_eq!(brute_force_pairing(4, 2).unwrap().value, int(11));
        assert_eq!(brute_force_pairing(3, 1).unwrap().value, int(0));
        assert!(matches!(
            brute_force_pairing(9, 2),
            Err(Error::SizeGuard(_))
        ));
    }

    #[test]
    fn sostar_oracle() {
        assert_eq!(brute_force_sostar(3).unwrap().trace, int(0));
        // trace = -(C(p-1,m-1) - p′ + 1)/2 by counting eigenvalues
        let v = brute_force_sostar(7).unwrap();
        assert_eq!(v.trace, crate::linalg::rat(14, 2));
        assert_eq!(v.killing, int(4 * 35 * 7));
    }

    #[test]
    fn factorization_arguments() {
        assert_eq!(sp_target_verdict(5).unwrap().status, Status::NotTight);
        assert_eq!(sp_target_verdict(9).unwrap().status, Status::NotTight);
        assert!(sp_target_verdict(7).is_err());
        assert_eq!(sostar_even_verdict(11).unwrap().p_prime, 462);
        assert!(sostar_even_verdict(7).is_err());
    }
}
