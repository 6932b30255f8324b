//! Parameter sweeps over the catalog, the correction search and the
//! discrepancy report.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::form::Form;
use super::{ambient_params, maximal_entries, named_table, CatalogEntry};
use crate::algebra::{AlgebraId, Family};
use crate::error::Result;
use crate::expr::Params;
use crate::pisystem::{identify, matches_claim, FactorDescriptor, PiSystem};
use crate::rootsys::RootSystem;

/// Upper limits of the verification sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    /// All `su(p,q)` with `1 <= p <= q` and `p + q <= su_max_sum`.
    pub su_max_sum: u32,
    pub sp_max: u32,
    pub sostar_max: u32,
    pub so2_max: u32,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            su_max_sum: 10,
            sp_max: 9,
            sostar_max: 9,
            so2_max: 13,
        }
    }
}

impl SweepBounds {
    /// Parses `su=10,sp=9,sostar=9,so2=13`; omitted keys keep their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut b = SweepBounds::default();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| {
                crate::Error::Parse(format!("expected key=value in sweep bounds, got '{part}'"))
            })?;
            let v: u32 = v
                .trim()
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad bound '{part}'")))?;
            match k.trim() {
                "su" => b.su_max_sum = v,
                "sp" => b.sp_max = v,
                "sostar" | "so*" => b.sostar_max = v,
                "so2" => b.so2_max = v,
                other => {
                    return Err(crate::Error::Parse(format!("unknown sweep key '{other}'")));
                }
            }
        }
        Ok(b)
    }

    pub fn ambients(&self, family: Family) -> Vec<AlgebraId> {
        match family {
            Family::Su => (2..=self.su_max_sum)
                .flat_map(|n| (1..=n / 2).map(move |p| AlgebraId::su(p, n - p)))
                .collect(),
            Family::Sp => (2..=self.sp_max).map(|p| AlgebraId::Sp { p }).collect(),
            Family::SoStar => (5..=self.sostar_max)
                .map(|p| AlgebraId::SoStar { p })
                .collect(),
            Family::So2Even => (5..=self.so2_max)
                .filter(|p| p % 2 == 0)
                .map(|p| AlgebraId::So2 { p })
                .collect(),
            Family::So2Odd => (5..=self.so2_max)
                .filter(|p| p % 2 == 1)
                .map(|p| AlgebraId::So2 { p })
                .collect(),
            Family::E6 => vec![AlgebraId::E6],
            Family::E7 => vec![AlgebraId::E7],
        }
    }
}

pub const FAMILIES: [Family; 7] = [
    Family::Su,
    Family::SoStar,
    Family::Sp,
    Family::So2Even,
    Family::So2Odd,
    Family::E6,
    Family::E7,
];

/// All parameter bindings (ambient and entry) satisfying the entry's
/// inequalities.
pub fn admissible_params(entry: &CatalogEntry, ambient: AlgebraId) -> Vec<Params> {
    let base = ambient_params(ambient);
    let bound = base.iter().map(|(_, v)| v).max().unwrap_or(0) + 2;
    let mut out = vec![base];
    for &name in entry.entry_params {
        out = out
            .into_iter()
            .flat_map(|p| (0..=bound).map(move |v| p.clone().with(name, v)))
            .collect();
    }
    out.retain(|p| {
        entry
            .constraints
            .iter()
            .all(|c| c.holds(p).unwrap_or(false))
    });
    out
}

/// A concrete instance of an entry.
#[derive(Clone, Debug)]
pub struct Instance {
    pub ambient: AlgebraId,
    pub params: Params,
}

/// Root systems of a sweep, built once.
#[derive(Default)]
pub struct SystemCache(BTreeMap<AlgebraId, RootSystem>);

impl SystemCache {
    pub fn get(&mut self, a: AlgebraId) -> Result<&RootSystem> {
        if !self.0.contains_key(&a) {
            let rs = RootSystem::build(a)?;
            self.0.insert(a, rs);
        }
        Ok(&self.0[&a])
    }
}

/// Builds a form at an instance and checks that it is a Π-system whose
/// factors are the claimed ones. `Err` carries a description of the failure.
pub fn check_form(
    entry: &CatalogEntry,
    rs: &RootSystem,
    params: &Params,
    form: &Form,
    use_fix: bool,
) -> core::result::Result<Vec<FactorDescriptor>, String> {
    let names = named_table(entry.family);
    let resolver = names.resolver(use_fix, rs.rank());
    let roots = form
        .roots(params, rs.rank(), &resolver)
        .map_err(|e| e.to_string())?;
    let ps = PiSystem::new(rs, roots).map_err(|e| e.to_string())?;
    let factors = identify(rs, &ps).map_err(|e| e.to_string())?;
    let claimed = entry.claimed_factors(params).map_err(|e| e.to_string())?;
    if !matches_claim(&factors, &claimed) {
        return Err(format!("identified {}", describe_factors(&factors)));
    }
    Ok(factors)
}

pub fn describe_factors(factors: &[FactorDescriptor]) -> String {
    if factors.is_empty() {
        return "nothing".to_string();
    }
    factors
        .iter()
        .map(|f| f.name())
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn instances(entry: &CatalogEntry, bounds: &SweepBounds) -> Vec<Instance> {
    bounds
        .ambients(entry.family)
        .into_iter()
        .flat_map(|ambient| {
            admissible_params(entry, ambient)
                .into_iter()
                .map(move |params| Instance { ambient, params })
        })
        .collect()
}

fn in_boundary(entry: &CatalogEntry, params: &Params) -> bool {
    entry
        .correction
        .as_ref()
        .is_some_and(|c| c.boundary.iter().any(|b| (b.applies)(params)))
}

/// All sparse shift vectors over `slots` endpoints with `Σ|δ| = l1`, in a
/// fixed order.
fn shift_vectors(slots: usize, l1: i64) -> Vec<Vec<(usize, i64)>> {
    fn go(
        slot: usize,
        slots: usize,
        left: i64,
        cur: &mut Vec<(usize, i64)>,
        out: &mut Vec<Vec<(usize, i64)>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if slot == slots {
            return;
        }
        for mag in (1..=left).rev() {
            for d in [mag, -mag] {
                cur.push((slot, d));
                go(slot + 1, slots, left - mag, cur, out);
                cur.pop();
            }
        }
        go(slot + 1, slots, left, cur, out);
    }
    let mut out = Vec::new();
    go(0, slots, l1, &mut Vec::new(), &mut out);
    out
}

/// Searches index shifts of the printed form in order of increasing total
/// shift and returns the first one under which every given instance yields
/// the claimed factors.
pub fn search_correction(
    entry: &CatalogEntry,
    instances: &[Instance],
    max_l1: i64,
    use_fix: bool,
    cache: &mut SystemCache,
) -> Result<Option<Vec<(usize, i64)>>> {
    for inst in instances {
        cache.get(inst.ambient)?;
    }
    for l1 in 0..=max_l1 {
        for shifts in shift_vectors(entry.printed.slot_count(), l1) {
            let form = entry.printed.shifted(&shifts);
            let ok = instances.iter().all(|inst| {
                let rs = cache.get(inst.ambient).expect("cached");
                check_form(entry, rs, &inst.params, &form, use_fix).is_ok()
            });
            if ok {
                return Ok(Some(shifts));
            }
        }
    }
    Ok(None)
}

/// An entry whose printed list does not reproduce its claimed factors.
#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub entry: &'static str,
    pub ambient: AlgebraId,
    /// The first failing instance (entry parameters only).
    pub params: Params,
    pub printed: String,
    pub corrected: String,
    /// What the printed list gives at `params`.
    pub identified: String,
    /// The documented correction reproduces the claim on the whole sweep.
    pub resolved: bool,
    /// No smaller index shift would do.
    pub minimal: bool,
    pub failing_instances: usize,
    pub note: String,
}

#[derive(Clone, Debug, Default)]
pub struct CatalogReport {
    pub discrepancies: Vec<Discrepancy>,
    pub instances: usize,
    /// Entries whose documented correction is never needed.
    pub superfluous: Vec<&'static str>,
}

impl CatalogReport {
    pub fn unresolved(&self) -> usize {
        self.discrepancies
            .iter()
            .filter(|d| !d.resolved || !d.minimal)
            .count()
            + self.superfluous.len()
    }
}

fn describe_corrected(entry: &CatalogEntry) -> String {
    let Some(c) = &entry.correction else {
        return String::from("(none)");
    };
    let mut parts = Vec::new();
    if !c.shifts.is_empty() || c.boundary.is_empty() {
        parts.push(entry.printed.shifted(&c.shifts).to_string());
    }
    for b in &c.boundary {
        parts.push(format!("{} when {}", b.form, b.condition));
    }
    if c.named_fix {
        for fix in named_table(entry.family).fixes {
            parts.push(format!("{} = {}", fix.name.symbol(), fix.corrected));
        }
    }
    parts.join("; ")
}

fn describe_printed(entry: &CatalogEntry) -> String {
    let mut s = entry.printed.to_string();
    if entry.correction.as_ref().is_some_and(|c| c.named_fix) {
        for fix in named_table(entry.family).fixes {
            s.push_str(&format!("; {} = {}", fix.name.symbol(), fix.printed));
        }
    }
    s
}

/// Checks every entry over the sweep, as printed and as corrected.
pub fn verify_catalog(bounds: &SweepBounds) -> Result<CatalogReport> {
    verify_families(bounds, &FAMILIES)
}

impl CatalogReport {
    /// Appends `other`, keeping the order of the parts.
    pub fn merge(&mut self, other: CatalogReport) {
        self.discrepancies.extend(other.discrepancies);
        self.instances += other.instances;
        self.superfluous.extend(other.superfluous);
    }
}

/// [`verify_catalog`] restricted to some families.
pub fn verify_families(bounds: &SweepBounds, families: &[Family]) -> Result<CatalogReport> {
    let mut cache = SystemCache::default();
    let mut report = CatalogReport::default();
    for &family in families {
        let Some(&sample) = bounds.ambients(family).first() else {
            continue;
        };
        for entry in maximal_entries(sample) {
            let insts = instances(&entry, bounds);
            report.instances += insts.len();
            let mut failing: Vec<(&Instance, String)> = Vec::new();
            let mut corrected_ok = true;
            for inst in &insts {
                let rs = cache.get(inst.ambient)?;
                if let Err(why) = check_form(&entry, rs, &inst.params, &entry.printed, false) {
                    failing.push((inst, why));
                }
                let form = entry.corrected_form(&inst.params);
                let fix = entry.correction.as_ref().is_some_and(|c| c.named_fix);
                if check_form(&entry, rs, &inst.params, &form, fix).is_err() {
                    corrected_ok = false;
                }
            }
            let Some((first, why)) = failing.first() else {
                if entry.correction.is_some() && !insts.is_empty() {
                    report.superfluous.push(entry.id);
                }
                continue;
            };
            let minimal = match &entry.correction {
                None => false,
                Some(c) => {
                    let used: i64 = c.shifts.iter().map(|(_, d)| d.abs()).sum();
                    let shift_insts: Vec<Instance> = insts
                        .iter()
                        .filter(|i| c.boundary.is_empty() || !in_boundary(&entry, &i.params))
                        .cloned()
                        .collect();
                    let smaller = if used > 0 {
                        search_correction(&entry, &shift_insts, used - 1, c.named_fix, &mut cache)?
                    } else {
                        None
                    };
                    // A boundary replacement is only justified when no
                    // uniform shift covers the boundary too.
                    let uniform = if c.boundary.is_empty() {
                        None
                    } else {
                        search_correction(&entry, &insts, 2, c.named_fix, &mut cache)?
                    };
                    smaller.is_none() && uniform.is_none()
                }
            };
            report.discrepancies.push(Discrepancy {
                entry: entry.id,
                ambient: first.ambient,
                params: first.params.restrict(entry.entry_params),
                printed: describe_printed(&entry),
                corrected: describe_corrected(&entry),
                identified: why.clone(),
                resolved: entry.correction.is_some() && corrected_ok,
                minimal,
                failing_instances: failing.len(),
                note: entry
                    .correction
                    .as_ref()
                    .map_or(String::new(), |c| String::from(c.note)),
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_vector_counts() {
        assert_eq!(shift_vectors(3, 0), vec![Vec::<(usize, i64)>::new()]);
        assert_eq!(shift_vectors(3, 1).len(), 6);
        // Σ|δ| = 2 over 3 slots: 3·2 (one slot ±2) + 3·4 (two slots ±1).
        assert_eq!(shift_vectors(3, 2).len(), 18);
    }

    #[test]
    fn default_sweep_sizes() {
        let b = SweepBounds::default();
        assert_eq!(b.ambients(Family::Su).len(), 25);
        assert_eq!(b.ambients(Family::So2Even).len(), 4);
        assert_eq!(b.ambients(Family::So2Odd).len(), 5);
        assert_eq!(
            SweepBounds::parse("su=6,so2=7")
                .unwrap()
                .ambients(Family::Su)
                .len(),
            9
        );
    }
}
