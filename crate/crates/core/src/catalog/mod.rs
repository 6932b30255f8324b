//! The tables of maximal regular subalgebras of the simple Hermitian Lie
//! algebras, as executable data.
//!
//! Each entry keeps its root list exactly as printed, in symbolic form, plus
//! an optional [`Correction`] when the printed list does not produce the
//! claimed factors. [`verify`] checks both over parameter sweeps and runs the
//! correction search.

pub mod entries;
pub mod form;
pub mod verify;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraId, Family};
use crate::error::{Error, Result};
use crate::expr::{Affine, Params};
use crate::pisystem::PiSystem;
use crate::rootsys::{Root, RootSystem};
use crate::tightness::Status;

pub use entries::{maximal_entries, named_table, NamedFix, NamedTable};
pub use form::{Combination, Form, Item, Named, NamedRoots};
pub use verify::{
    admissible_params, instances, search_correction, verify_catalog, verify_families,
    CatalogReport, Discrepancy, Instance, SweepBounds, SystemCache, FAMILIES,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Lt,
}

/// One inequality between affine expressions, e.g. `l < p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub lhs: Affine,
    pub cmp: Cmp,
    pub rhs: Affine,
}

impl Constraint {
    /// Parses a chain such as `1 <= l < p` into its links.
    pub fn parse_chain(text: &str) -> Result<Vec<Constraint>> {
        let mut parts: Vec<String> = Vec::new();
        let mut ops: Vec<Cmp> = Vec::new();
        let mut cur = String::new();
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            if c == '<' {
                parts.push(core::mem::take(&mut cur));
                if chars.peek() == Some(&'=') {
                    chars.next();
                    ops.push(Cmp::Le);
                } else {
                    ops.push(Cmp::Lt);
                }
            } else {
                cur.push(c);
            }
        }
        parts.push(cur);
        if ops.is_empty() {
            return Err(Error::Parse(format!("no comparison in '{text}'")));
        }
        let exprs = parts
            .iter()
            .map(|p| Affine::parse(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(ops
            .iter()
            .enumerate()
            .map(|(i, &cmp)| Constraint {
                lhs: exprs[i].clone(),
                cmp,
                rhs: exprs[i + 1].clone(),
            })
            .collect())
    }

    pub fn holds(&self, params: &Params) -> Result<bool> {
        let (a, b) = (self.lhs.eval(params)?, self.rhs.eval(params)?);
        Ok(match self.cmp {
            Cmp::Le => a <= b,
            Cmp::Lt => a < b,
        })
    }
}

impl core::fmt::Display for Constraint {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let op = match self.cmp {
            Cmp::Le => "<=",
            Cmp::Lt => "<",
        };
        write!(f, "{} {op} {}", self.lhs, self.rhs)
    }
}

/// The verdict stated for an entry, possibly depending on parameters.
#[derive(Clone, Copy, Debug)]
pub enum VerdictRule {
    Always(Status),
    TightIff {
        condition: &'static str,
        test: fn(&Params) -> bool,
    },
}

impl VerdictRule {
    pub fn expected(&self, params: &Params) -> Status {
        match self {
            VerdictRule::Always(s) => *s,
            VerdictRule::TightIff { test, .. } => Status::from_bool(test(params)),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            VerdictRule::Always(s) => format!("{s}"),
            VerdictRule::TightIff { condition, .. } => format!("Tight iff {condition}"),
        }
    }
}

/// A parameter region where the printed list is replaced outright.
#[derive(Clone, Debug)]
pub struct Boundary {
    pub condition: &'static str,
    pub applies: fn(&Params) -> bool,
    pub form: Form,
}

/// How an entry deviates from its printed list.
#[derive(Clone, Debug, Default)]
pub struct Correction {
    /// `(slot, delta)` index shifts; slots number the index endpoints of
    /// the printed form in reading order.
    pub shifts: Vec<(usize, i64)>,
    /// Use the corrected definitions of the family's named roots.
    pub named_fix: bool,
    pub boundary: Vec<Boundary>,
    pub note: &'static str,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub family: Family,
    /// Names of the entry's own parameters (beyond the ambient ones).
    pub entry_params: &'static [char],
    pub constraints: Vec<Constraint>,
    pub printed: Form,
    /// Claimed factor names, in terms of the parameters.
    pub claimed: Vec<&'static str>,
    pub verdict: VerdictRule,
    pub correction: Option<Correction>,
}

/// Bindings for the ambient parameters: `p`, `q` for `su(p,q)`; `p` for
/// `sp(2p)` and `so*(2p)`; `p` and `k` for `so(p,2)`.
pub fn ambient_params(algebra: AlgebraId) -> Params {
    match algebra {
        AlgebraId::Su { p, q } => Params::new().with('p', p as i64).with('q', q as i64),
        AlgebraId::Sp { p } | AlgebraId::SoStar { p } => Params::new().with('p', p as i64),
        AlgebraId::So2 { p } => {
            let k = if p % 2 == 0 { (p + 2) / 2 } else { (p + 1) / 2 };
            Params::new().with('p', p as i64).with('k', k as i64)
        }
        AlgebraId::E6 | AlgebraId::E7 => Params::new(),
    }
}

impl CatalogEntry {
    fn check_family(&self, ambient: AlgebraId) -> Result<()> {
        if ambient.family() != self.family {
            return Err(Error::Constraint(format!(
                "entry {} does not belong to {ambient}",
                self.id
            )));
        }
        Ok(())
    }

    /// Ambient and entry parameters together, after checking the entry's
    /// inequalities.
    pub fn bind(&self, ambient: AlgebraId, entry_params: &Params) -> Result<Params> {
        self.check_family(ambient)?;
        ambient.check_ambient()?;
        let mut params = ambient_params(ambient);
        for name in self.entry_params {
            let v = entry_params.get(*name).ok_or_else(|| {
                Error::Constraint(format!("entry {} needs parameter {name}", self.id))
            })?;
            params.set(*name, v);
        }
        for c in &self.constraints {
            if !c.holds(&params)? {
                return Err(Error::Constraint(format!(
                    "{c} fails for {}: {params}",
                    self.id
                )));
            }
        }
        Ok(params)
    }

    pub fn claimed_factors(&self, params: &Params) -> Result<Vec<AlgebraId>> {
        self.claimed
            .iter()
            .map(|c| AlgebraId::parse_with(c, params))
            .collect()
    }

    /// The form used at these parameters: printed, shifted, or a boundary
    /// replacement.
    pub fn corrected_form(&self, params: &Params) -> Form {
        match &self.correction {
            None => self.printed.clone(),
            Some(c) => c
                .boundary
                .iter()
                .find(|b| (b.applies)(params))
                .map(|b| b.form.clone())
                .unwrap_or_else(|| self.printed.shifted(&c.shifts)),
        }
    }

    fn uses_named_fix(&self) -> bool {
        self.correction.as_ref().is_some_and(|c| c.named_fix)
    }

    /// The roots exactly as printed (they need not form a Π-system).
    pub fn printed_roots(&self, rs: &RootSystem, params: &Params) -> Result<Vec<Root>> {
        let table = named_table(self.family);
        self.printed
            .roots(params, rs.rank(), &table.resolver(false, rs.rank()))
    }

    pub fn corrected_roots(&self, rs: &RootSystem, params: &Params) -> Result<Vec<Root>> {
        let table = named_table(self.family);
        let names = table.resolver(self.uses_named_fix(), rs.rank());
        self.corrected_form(params).roots(params, rs.rank(), &names)
    }
}

/// The Π-system of an entry at concrete parameters, with any documented
/// correction applied.
pub fn instantiate(
    entry: &CatalogEntry,
    rs: &RootSystem,
    entry_params: &Params,
) -> Result<PiSystem> {
    let params = entry.bind(rs.algebra(), entry_params)?;
    PiSystem::new(rs, entry.corrected_roots(rs, &params)?)
}

/// Looks up `id` among the entries of `algebra`'s family.
pub fn find_entry(algebra: AlgebraId, id: &str) -> Result<CatalogEntry> {
    maximal_entries(algebra)
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Parse(format!("no catalog entry '{id}' for {algebra}")))
}

/// Splits an address such as `su4:l=1,s=2` into the id and its parameters.
pub fn parse_address(text: &str) -> Result<(String, Params)> {
    let (id, rest) = text.split_once(':').unwrap_or((text, ""));
    Ok((String::from(id.trim()), Params::parse(rest)?))
}
