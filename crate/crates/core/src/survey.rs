//! The full table of expected verdicts: every catalog entry over a sweep and
//! the representations of the irreducible (H2) classification.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraId, Family};
use crate::catalog::{instances, instantiate, maximal_entries, SweepBounds, SystemCache};
use crate::classify::{classify, spin_descriptor, MapDescriptor, TargetTag};
use crate::error::Result;
use crate::matrixalg::Inclusion;
use crate::pisystem::identify;
use crate::tightness::{regular_verdict, Status, TightnessCertificate};

/// One comparison of an expected verdict with the computed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub label: String,
    pub expected: Status,
    pub actual: Status,
    /// The rules or certificate that produced `actual`.
    pub detail: String,
}

impl SurveyRow {
    pub fn matches(&self) -> bool {
        self.expected == self.actual
    }
}

/// Largest `p` for the tensor rows with an su target.
pub const TENSOR_MAX_P: usize = 12;
/// Largest `p` for the spin rows.
pub const SPIN_MAX_P: usize = 13;
/// Largest `p` for the ι₁/ι₂ rows.
pub const INCLUSION_MAX_P: usize = 9;

/// The representations and their expected verdicts.
pub fn golden_maps() -> Vec<(MapDescriptor, Status)> {
    let mut out = Vec::new();
    for p in 2..=INCLUSION_MAX_P {
        out.push((
            MapDescriptor::DiscInclusion(Inclusion::Iota1, p),
            Status::Tight,
        ));
    }
    for p in 3..=INCLUSION_MAX_P {
        let expected = Status::from_bool(p % 2 == 0);
        out.push((MapDescriptor::DiscInclusion(Inclusion::Iota2, p), expected));
    }
    for p in 5..=SPIN_MAX_P {
        for target in [TargetTag::Su, TargetTag::Sp, TargetTag::SoStar] {
            let d = spin_descriptor(p);
            let pp = d.p_prime as u32;
            let a = match target {
                TargetTag::Su => AlgebraId::su(pp, pp),
                TargetTag::Sp => AlgebraId::Sp { p: pp },
                TargetTag::SoStar => AlgebraId::SoStar { p: pp },
            };
            if d.targets.contains(&a) {
                out.push((MapDescriptor::SpinRep { p, target }, Status::Tight));
            }
        }
    }
    for p in 2..=TENSOR_MAX_P {
        for m in 1..=p {
            let expected = Status::from_bool(m == 1 || m == p);
            out.push((
                MapDescriptor::TensorRep {
                    p,
                    m,
                    target: TargetTag::Su,
                },
                expected,
            ));
        }
    }
    for p in (5..=TENSOR_MAX_P).filter(|p| p % 4 == 1) {
        let m = p.div_ceil(2);
        out.push((
            MapDescriptor::TensorRep {
                p,
                m,
                target: TargetTag::Sp,
            },
            Status::NotTight,
        ));
    }
    for p in (3..=TENSOR_MAX_P).filter(|p| p % 4 == 3) {
        let m = p.div_ceil(2);
        let expected = Status::from_bool(p == 3);
        out.push((
            MapDescriptor::TensorRep {
                p,
                m,
                target: TargetTag::SoStar,
            },
            expected,
        ));
    }
    out
}

pub fn representation_rows() -> Result<Vec<SurveyRow>> {
    golden_maps()
        .into_iter()
        .map(|(map, expected)| {
            let v = classify(&map)?;
            let rules: Vec<&str> = v.trace.iter().map(|s| s.rule.name()).collect();
            Ok(SurveyRow {
                label: format!("{map}"),
                expected,
                actual: v.status,
                detail: rules.join(","),
            })
        })
        .collect()
}

/// `c=[..] r=[..] sum=s/r`.
pub fn describe_certificate(cert: &TightnessCertificate) -> String {
    let ratios: Vec<String> = cert.ratios.iter().map(|c| format!("{c}")).collect();
    let ranks: Vec<String> = cert.ranks.iter().map(|r| format!("{r}")).collect();
    format!(
        "c=[{}] r=[{}] sum={}/{}",
        ratios.join(","),
        ranks.join(","),
        cert.weighted_sum,
        cert.ambient_rank
    )
}

/// Every entry of `family` at every admissible instance of the sweep, with
/// documented corrections applied.
pub fn catalog_rows(family: Family, bounds: &SweepBounds) -> Result<Vec<SurveyRow>> {
    let mut cache = SystemCache::default();
    let mut rows = Vec::new();
    let Some(&sample) = bounds.ambients(family).first() else {
        return Ok(rows);
    };
    for entry in maximal_entries(sample) {
        for inst in instances(&entry, bounds) {
            let rs = cache.get(inst.ambient)?;
            let ps = instantiate(&entry, rs, &inst.params)?;
            let cert = regular_verdict(rs, &identify(rs, &ps)?)?;
            let own = inst.params.restrict(entry.entry_params);
            rows.push(SurveyRow {
                label: format!("{} {}:{}", inst.ambient, entry.id, own),
                expected: entry.verdict.expected(&inst.params),
                actual: cert.verdict,
                detail: describe_certificate(&cert),
            });
        }
    }
    Ok(rows)
}

#[derive(Clone, Debug, Default)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
}

impl SurveyReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &SurveyRow> {
        self.rows.iter().filter(|r| !r.matches())
    }
}

/// The catalog over `bounds` followed by the representation table.
pub fn run_survey(bounds: &SweepBounds) -> Result<SurveyReport> {
    let mut rows = Vec::new();
    for family in crate::catalog::FAMILIES {
        rows.extend(catalog_rows(family, bounds)?);
    }
    rows.extend(representation_rows()?);
    Ok(SurveyReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representation_table_matches() {
        let rows = representation_rows().unwrap();
        let bad: Vec<&SurveyRow> = rows.iter().filter(|r| !r.matches()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn small_catalog_sweep_matches() {
        let b = SweepBounds::parse("su=6,sp=4,sostar=6,so2=7").unwrap();
        for family in [Family::Su, Family::Sp, Family::E6] {
            let rows = catalog_rows(family, &b).unwrap();
            assert!(!rows.is_empty());
            assert!(rows.iter().all(SurveyRow::matches), "{family:?}");
        }
    }
}
