//! Table data: named roots per family and the maximal regular subalgebra
//! entries, transcribed with their printed indices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::form::{Combination, Form, Named, NamedRoots};
use super::{Boundary, CatalogEntry, Constraint, Correction, VerdictRule};
use crate::algebra::{AlgebraId, Family};
use crate::error::{Error, Result};
use crate::expr::Params;
use crate::rootsys::Root;
use crate::tightness::Status;

/// A named root whose printed definition is not the intended root.
#[derive(Clone, Debug)]
pub struct NamedFix {
    pub name: Named,
    pub printed: Combination,
    pub corrected: Combination,
    pub note: &'static str,
}

#[derive(Clone, Debug)]
pub struct NamedTable {
    pub defs: Vec<(Named, Combination)>,
    pub fixes: Vec<NamedFix>,
}

pub struct Resolver<'a> {
    table: &'a NamedTable,
    use_fix: bool,
    rank: usize,
}

impl NamedTable {
    pub fn resolver(&self, use_fix: bool, rank: usize) -> Resolver<'_> {
        Resolver {
            table: self,
            use_fix,
            rank,
        }
    }

    pub fn printed_definition(&self, name: Named) -> Option<&Combination> {
        self.fixes
            .iter()
            .find(|f| f.name == name)
            .map(|f| &f.printed)
            .or_else(|| self.defs.iter().find(|(n, _)| *n == name).map(|(_, c)| c))
    }
}

impl NamedRoots for Resolver<'_> {
    fn named(&self, name: Named, params: &Params) -> Result<Root> {
        if let Some(fix) = self.table.fixes.iter().find(|f| f.name == name) {
            let c = if self.use_fix {
                &fix.corrected
            } else {
                &fix.printed
            };
            return c.eval(params, self.rank);
        }
        self.table
            .defs
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::Parse(format!("{} is not defined here", name.symbol())))?
            .1
            .eval(params, self.rank)
    }
}

fn comb(s: &str) -> Combination {
    Combination::parse(s).expect("well-formed named root")
}

/// Named roots of a family, with their printed definitions.
pub fn named_table(family: Family) -> NamedTable {
    let defs = |list: &[(Named, &str)]| list.iter().map(|(n, s)| (*n, comb(s))).collect();
    match family {
        Family::Su => NamedTable {
            defs: defs(&[(Named::Gamma, "a(1..p+q-1)")]),
            fixes: vec![],
        },
        Family::Sp => NamedTable {
            defs: defs(&[
                (Named::Gamma, "a(1)+2a(2..p)"),
                (Named::Beta, "a(2..p)"),
                (Named::Alpha12, "a(1..2)"),
            ]),
            fixes: vec![],
        },
        Family::SoStar => NamedTable {
            defs: defs(&[
                (Named::Gamma, "a(1)+2a(2..p-2)+a(p-1)+a(p)"),
                (Named::Beta, "a(2..p)"),
            ]),
            fixes: vec![],
        },
        Family::So2Even => NamedTable {
            defs: defs(&[
                (Named::Gamma, "a(1)+2a(2..k-2)+a(k-1)+a(k)"),
                (Named::Beta1, "a(2)+2a(3..k-2)+a(k-1)+a(k)"),
                (Named::Beta2, "a(k-2..k)"),
            ]),
            fixes: vec![],
        },
        Family::So2Odd => NamedTable {
            defs: defs(&[
                (Named::Beta1, "a(2)+2a(3..k)"),
                (Named::Beta2, "a(k-1)+2a(k)"),
                (Named::Beta3, "a(k-1..k)"),
                (Named::Beta4, "a(1..k)"),
            ]),
            fixes: vec![NamedFix {
                name: Named::Gamma,
                printed: comb("a(1)+2a(2..k-2)+a(k-1)+a(k)"),
                corrected: comb("a(1)+2a(2..k)"),
                note: "the printed highest root repeats the even-p formula; for B_k the highest root is α_1+2(α_2+…+α_k)",
            }],
        },
        Family::E6 => NamedTable {
            defs: defs(&[
                (Named::Gamma, "a(1)+2a(2)+3a(3)+2a(4)+a(5)+2a(6)"),
                (Named::Beta1, "a(2)+2a(3)+2a(4)+a(5)+a(6)"),
                (Named::Beta2, "a(3..6)"),
            ]),
            fixes: vec![],
        },
        Family::E7 => NamedTable {
            defs: defs(&[
                (Named::Gamma, "a(1)+2a(2)+3a(3)+4a(4)+3a(5)+2a(6)+2a(7)"),
                (Named::Beta2, "a(3)+2a(4)+2a(5)+a(6)+a(7)"),
                (Named::Beta3, "a(4..7)"),
            ]),
            fixes: vec![NamedFix {
                name: Named::Beta1,
                printed: comb("a(2)+2a(3)+2a(5)+a(6)+2a(7)"),
                corrected: comb("a(2)+2a(3)+3a(4)+2a(5)+a(6)+2a(7)"),
                note: "the printed β₁ omits the α_4 term and is not a root",
            }],
        },
    }
}

struct Row {
    id: &'static str,
    params: &'static [char],
    constraints: &'static [&'static str],
    printed: &'static str,
    claimed: &'static [&'static str],
    verdict: VerdictRule,
    correction: Option<Correction>,
}

const TIGHT: VerdictRule = VerdictRule::Always(Status::Tight);
const NOT_TIGHT: VerdictRule = VerdictRule::Always(Status::NotTight);

fn shifts(list: &[(usize, i64)], note: &'static str) -> Option<Correction> {
    Some(Correction {
        shifts: list.to_vec(),
        note,
        ..Correction::default()
    })
}

fn named_fix(note: &'static str) -> Option<Correction> {
    Some(Correction {
        named_fix: true,
        note,
        ..Correction::default()
    })
}

fn build(family: Family, rows: Vec<Row>) -> Vec<CatalogEntry> {
    rows.into_iter()
        .map(|s| CatalogEntry {
            id: s.id,
            family,
            entry_params: s.params,
            constraints: s
                .constraints
                .iter()
                .flat_map(|c| Constraint::parse_chain(c).expect("well-formed constraint"))
                .collect(),
            printed: Form::parse(s.printed).expect("well-formed form"),
            claimed: s.claimed.to_vec(),
            verdict: s.verdict,
            correction: s.correction,
        })
        .collect()
}

/// Every maximal regular subalgebra listed for the family of `algebra`.
pub fn maximal_entries(algebra: AlgebraId) -> Vec<CatalogEntry> {
    let family = algebra.family();
    let rows = match family {
        Family::Su => su_entries(),
        Family::SoStar => sostar_entries(),
        Family::Sp => sp_entries(),
        Family::So2Even => so2_even_entries(),
        Family::So2Odd => so2_odd_entries(),
        Family::E6 => e6_entries(),
        Family::E7 => e7_entries(),
    };
    build(family, rows)
}

fn su_entries() -> Vec<Row> {
    vec![
        Row {
            id: "su1",
            params: &['l'],
            constraints: &["1 <= l < p"],
            printed: "a(p+q-l..p+q-1), a(1..q)",
            claimed: &["su(l,q)"],
            verdict: NOT_TIGHT,
            correction: shifts(
                &[(0, 1)],
                "the first run has l+1 roots; starting it at α_{p+q-l+1} gives rank l+q-1",
            ),
        },
        Row {
            id: "su2",
            params: &['s'],
            constraints: &["p <= s < q"],
            printed: "a(q+1..p+q-1), a(1..s)",
            claimed: &["su(p,s)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "su3",
            params: &['s'],
            constraints: &["1 <= s < p"],
            printed: "d(s..1), d(p+q-1..q+1)",
            claimed: &["su(s,p)"],
            verdict: NOT_TIGHT,
            correction: None,
        },
        Row {
            id: "su4",
            params: &['l', 's'],
            constraints: &["1 <= l <= s", "p-l <= q-s", "l < p"],
            printed: "a(p+q-l..p+q-2), a(1..s) | -d(p+q-l-2..q+1), gamma, -d(q..s+2)",
            claimed: &["su(l,s)", "su(p-l,q-s)"],
            verdict: TIGHT,
            correction: shifts(
                &[(0, 1), (1, 1), (4, 1)],
                "the first chain runs α_{p+q-l+1},…,α_{p+q-1}; the second block starts at -α_{p+q-l-1}",
            ),
        },
        Row {
            id: "su5",
            params: &['l', 's'],
            constraints: &["1 <= s < l < p"],
            printed: "d(s..1), d(p+q-1..p+q-l) | -d(p+q-l-2..q+1), gamma, -d(q..s+2)",
            claimed: &["su(s,l)", "su(p-l,q-s)"],
            verdict: NOT_TIGHT,
            correction: shifts(
                &[(3, 1), (4, 1)],
                "the first chain ends at α_{p+q-l+1}; the second block starts at -α_{p+q-l-1}",
            ),
        },
    ]
}

fn sostar_entries() -> Vec<Row> {
    vec![
        Row {
            id: "so1",
            params: &['l'],
            constraints: &["1 <= l <= h"],
            printed: "-a(p-l+2..p-1), beta, a(1..p-l)",
            claimed: &["su(l,p-l)"],
            verdict: VerdictRule::TightIff {
                condition: "l = [p/2]",
                test: |p| p.val('l') == p.val('h'),
            },
            correction: shifts(
                &[(0, -1), (3, -1)],
                "the negative run starts at -α_{p-l+1} and the positive run ends at α_{p-l-1}",
            ),
        },
        Row {
            id: "so2",
            params: &['l'],
            constraints: &["h <= l <= p-2"],
            printed: "a(1..l-1), a(p) | gamma, -d(p-2..l+1), -a(p-1)",
            claimed: &["so*(2l)", "so*(2(p-l))"],
            verdict: VerdictRule::TightIff {
                condition: "p odd or l even",
                test: |p| p.val('p') % 2 == 1 || p.val('l') % 2 == 0,
            },
            correction: None,
        },
        Row {
            id: "so3",
            params: &[],
            constraints: &[],
            printed: "a(1..p-2), a(p)",
            claimed: &["so*(2(p-1))"],
            verdict: VerdictRule::TightIff {
                condition: "p odd",
                test: |p| p.val('p') % 2 == 1,
            },
            correction: None,
        },
    ]
}

fn sp_entries() -> Vec<Row> {
    vec![
        Row {
            id: "sp1",
            params: &['l'],
            constraints: &["1 <= l <= h"],
            printed: "-a(p-l+3..p), beta, a12, a(3..p-l+1)",
            claimed: &["su(l,p-l)"],
            verdict: VerdictRule::TightIff {
                condition: "l = p/2",
                test: |p| 2 * p.val('l') == p.val('p'),
            },
            correction: Some(Correction {
                boundary: vec![Boundary {
                    condition: "l = 1",
                    applies: |p| p.val('l') == 1,
                    form: Form::parse("a12, a(3..p)").expect("well-formed form"),
                }],
                note: "for l = 1 the list has p roots for a rank p-1 factor; β is dropped",
                ..Correction::default()
            }),
        },
        Row {
            id: "sp2",
            params: &['l'],
            constraints: &["h <= l <= p-1"],
            printed: "a(1..l) | gamma, -d(p..l+2)",
            claimed: &["sp(2l)", "sp(2(p-l))"],
            verdict: TIGHT,
            correction: None,
        },
    ]
}

fn so2_even_entries() -> Vec<Row> {
    vec![
        Row {
            id: "soj1",
            params: &[],
            constraints: &[],
            printed: "a(1) | gamma",
            claimed: &["su(1,1)", "su(1,1)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "soj2",
            params: &['l'],
            constraints: &["2 <= l <= k-1"],
            printed: "a(1..l)",
            claimed: &["su(1,l)"],
            verdict: NOT_TIGHT,
            correction: None,
        },
        Row {
            id: "soj3",
            params: &[],
            constraints: &[],
            printed: "a(1..k-2), a(k)",
            claimed: &["su(1,k-1)"],
            verdict: NOT_TIGHT,
            correction: None,
        },
        Row {
            id: "soj4",
            params: &[],
            constraints: &[],
            printed: "beta1, a(1), a(2)",
            claimed: &["su(2,2)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "soj5",
            params: &[],
            constraints: &[],
            printed: "a(2..k-1), beta2",
            claimed: &["so(p-2,2)"],
            verdict: TIGHT,
            correction: shifts(&[(0, -1), (1, -1)], "the run is α_1,…,α_{k-2}"),
        },
    ]
}

fn so2_odd_entries() -> Vec<Row> {
    vec![
        Row {
            id: "sou1",
            params: &[],
            constraints: &[],
            printed: "a(1) | gamma",
            claimed: &["su(1,1)", "su(1,1)"],
            verdict: TIGHT,
            correction: named_fix("uses the B_k highest root"),
        },
        Row {
            id: "sou2",
            params: &['l'],
            constraints: &["2 <= l <= k-2"],
            printed: "a(1..l)",
            claimed: &["su(1,l)"],
            verdict: NOT_TIGHT,
            correction: None,
        },
        Row {
            id: "sou3",
            params: &[],
            constraints: &[],
            printed: "beta1, a(1), a(2)",
            claimed: &["su(2,2)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "sou4",
            params: &[],
            constraints: &[],
            printed: "beta4",
            claimed: &["su(1,1)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "sou5",
            params: &[],
            constraints: &[],
            printed: "a(2..k-1), beta2",
            claimed: &["so(p-1,2)"],
            verdict: TIGHT,
            correction: shifts(&[(0, -1)], "the run is α_1,…,α_{k-1}"),
        },
        Row {
            id: "sou6",
            params: &[],
            constraints: &[],
            printed: "a(2..k-1), beta3",
            claimed: &["so(p-2,2)"],
            verdict: TIGHT,
            correction: shifts(&[(0, -1), (1, -1)], "the run is α_1,…,α_{k-2}"),
        },
    ]
}

fn e6_entries() -> Vec<Row> {
    vec![
        Row {
            id: "e6a",
            params: &[],
            constraints: &[],
            printed: "a(1..5) | gamma",
            claimed: &["su(1,5)", "su(1,1)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "e6b",
            params: &[],
            constraints: &[],
            printed: "a(1), a(2) | gamma, -a(6)",
            claimed: &["su(1,2)", "su(1,2)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "e6c",
            params: &[],
            constraints: &[],
            printed: "beta1, a(1), a(2), a(3), a(6)",
            claimed: &["su(2,4)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "e6d",
            params: &[],
            constraints: &[],
            printed: "a(1), a(2), a(3), a(4), beta2",
            claimed: &["so*(10)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "e6e",
            params: &[],
            constraints: &[],
            printed: "a(1), a(2), a(3), a(4), a(6)",
            claimed: &["so(8,2)"],
            verdict: TIGHT,
            correction: None,
        },
    ]
}

fn e7_entries() -> Vec<Row> {
    vec![
        Row {
            id: "e1",
            params: &[],
            constraints: &[],
            printed: "a(1..4), a(7) | gamma, -a(6)",
            claimed: &["su(1,5)", "su(1,2)"],
            verdict: NOT_TIGHT,
            correction: None,
        },
        Row {
            id: "e2",
            params: &[],
            constraints: &[],
            printed: "a(1), a(2), a(3) | gamma, -a(6), -a(5)",
            claimed: &["su(1,3)", "su(1,3)"],
            verdict: NOT_TIGHT,
            correction: None,
        },
        Row {
            id: "e3",
            params: &[],
            constraints: &[],
            printed: "beta1, a(1..6)",
            claimed: &["su(2,6)"],
            verdict: NOT_TIGHT,
            correction: named_fix("uses the corrected β₁"),
        },
        Row {
            id: "e4",
            params: &[],
            constraints: &[],
            printed: "-a(7), beta1, a(1), a(2), a(3)",
            claimed: &["su(3,3)"],
            verdict: TIGHT,
            correction: named_fix("uses the corrected β₁"),
        },
        Row {
            id: "e5",
            params: &[],
            constraints: &[],
            printed: "a(1), a(2), a(3), a(4), a(7), beta2",
            claimed: &["so*(12)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "e6",
            params: &[],
            constraints: &[],
            printed: "a(1..5), a(7) | gamma",
            claimed: &["so(10,2)", "su(1,1)"],
            verdict: TIGHT,
            correction: None,
        },
        Row {
            id: "e7",
            params: &[],
            constraints: &[],
            printed: "a(2..6), beta3",
            claimed: &["e6(-14)"],
            verdict: NOT_TIGHT,
            correction: shifts(&[(0, -1), (1, -1)], "the run is α_1,…,α_5"),
        },
    ]
}
