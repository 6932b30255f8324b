//! The curvature-ratio criterion for regular subalgebras and the verdict
//! combinators for products and compositions.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::AlgebraId;
use crate::error::{Error, Result};
use crate::linalg::{int, Rational};
use crate::pisystem::FactorDescriptor;
use crate::rootsys::{Root, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Tight,
    NotTight,
    Unknown,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Tight => "Tight",
            Status::NotTight => "NotTight",
            Status::Unknown => "Unknown",
        }
    }

    pub fn from_bool(tight: bool) -> Self {
        if tight {
            Status::Tight
        } else {
            Status::NotTight
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of the one-directional rank test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankRule {
    Tight,
    Inconclusive,
}

/// Rank and tube type of a Hermitian simple algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HermitianData {
    pub algebra: AlgebraId,
    pub rank: u32,
    pub tube_type: bool,
}

impl From<AlgebraId> for HermitianData {
    fn from(algebra: AlgebraId) -> Self {
        HermitianData {
            algebra,
            rank: algebra.rank(),
            tube_type: algebra.is_tube_type(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessCertificate {
    pub ratios: Vec<Rational>,
    pub ranks: Vec<u32>,
    pub ambient_rank: u32,
    pub weighted_sum: Rational,
    pub verdict: Status,
}

/// `c_i = ⟨γ,γ⟩ / ⟨γ_i,γ_i⟩`.
pub fn curvature_ratio(rs: &RootSystem, gamma_i: &Root) -> Result<Rational> {
    if !rs.contains(gamma_i) {
        return Err(rs.not_a_root(gamma_i));
    }
    let gamma = rs.highest_root();
    Ok(rs.inner(gamma, gamma)? / rs.inner(gamma_i, gamma_i)?)
}

/// Tight iff `Σ c_i r_i = r`. Compact factors are skipped.
pub fn regular_verdict(
    rs: &RootSystem,
    factors: &[FactorDescriptor],
) -> Result<TightnessCertificate> {
    let mut ratios = Vec::new();
    let mut ranks = Vec::new();
    let mut sum = Rational::zero();
    for f in factors.iter().filter(|f| !f.is_compact()) {
        let c = curvature_ratio(rs, &f.gamma)?;
        if c < int(1) {
            return Err(Error::Internal(format!(
                "curvature ratio {c} < 1 for {}",
                f.name()
            )));
        }
        sum += c * int(f.rank as i64);
        ratios.push(c);
        ranks.push(f.rank);
    }
    let r = rs.algebra().rank();
    if sum > int(r as i64) {
        return Err(Error::Internal(format!(
            "weighted sum {sum} exceeds the rank {r} of {}",
            rs.algebra()
        )));
    }
    Ok(TightnessCertificate {
        ratios,
        ranks,
        ambient_rank: r,
        weighted_sum: sum,
        verdict: Status::from_bool(sum == int(r as i64)),
    })
}

/// Tight when the factor ranks add up to the ambient rank; otherwise the
/// test says nothing.
pub fn rank_rule(factor_ranks: &[u32], ambient_rank: u32) -> RankRule {
    if factor_ranks.iter().sum::<u32>() == ambient_rank {
        RankRule::Tight
    } else {
        RankRule::Inconclusive
    }
}

fn conjunction(verdicts: &[Status]) -> Status {
    if verdicts.contains(&Status::NotTight) {
        Status::NotTight
    } else if verdicts.contains(&Status::Unknown) {
        Status::Unknown
    } else {
        Status::Tight
    }
}

/// A composition is tight iff every link is. The empty chain is the identity.
pub fn chain_rule(links: &[Status]) -> Status {
    conjunction(links)
}

/// A map into a product is tight iff every component is.
pub fn product_rule(factor_verdicts: &[Status]) -> Status {
    conjunction(factor_verdicts)
}

/// The norm of the bounded Kähler class is `rank · π`; returns the
/// coefficient of `π`.
pub fn toledo_norm(data: &HermitianData) -> u32 {
    data.rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pisystem::{identify, PiSystem};
    use alloc::vec;

    #[test]
    fn combinators() {
        use Status::*;
        assert_eq!(chain_rule(&[]), Tight);
        assert_eq!(chain_rule(&[Tight, Tight]), Tight);
        assert_eq!(chain_rule(&[Tight, NotTight]), NotTight);
        assert_eq!(product_rule(&[Unknown, NotTight]), NotTight);
        assert_eq!(product_rule(&[Unknown, Tight]), Unknown);
        assert_eq!(product_rule(&[NotTight]), NotTight);
    }

    #[test]
    fn rank_rule_examples() {
        assert_eq!(rank_rule(&[2], 2), RankRule::Tight);
        assert_eq!(rank_rule(&[2, 1], 3), RankRule::Tight);
        assert_eq!(rank_rule(&[1], 2), RankRule::Inconclusive);
    }

    #[test]
    fn toledo_norms() {
        assert_eq!(toledo_norm(&AlgebraId::su(2, 3).into()), 2);
        assert_eq!(toledo_norm(&AlgebraId::E7.into()), 3);
        assert_eq!(toledo_norm(&AlgebraId::su(1, 1).into()), 1);
    }

    #[test]
    fn long_root_factor_in_sp() {
        let rs = RootSystem::build(AlgebraId::Sp { p: 3 }).unwrap();
        let ps = PiSystem::new(&rs, vec![rs.simple_root(0)]).unwrap();
        let cert = regular_verdict(&rs, &identify(&rs, &ps).unwrap()).unwrap();
        assert_eq!(cert.ratios, vec![int(1)]);
        assert_eq!(cert.verdict, Status::NotTight);
        let short = rs.simple_root(1);
        assert_eq!(curvature_ratio(&rs, &short).unwrap(), int(2));
    }
}
