//! Symbolic root lists: the printed shape of a catalog entry with affine
//! indices, evaluated against concrete parameters.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::expr::{Affine, Params};
use crate::rootsys::Root;

/// The named roots used by the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Named {
    Gamma,
    Beta,
    Beta1,
    Beta2,
    Beta3,
    Beta4,
    /// `α_1 + α_2`.
    Alpha12,
}

impl Named {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "gamma" => Named::Gamma,
            "beta" => Named::Beta,
            "beta1" => Named::Beta1,
            "beta2" => Named::Beta2,
            "beta3" => Named::Beta3,
            "beta4" => Named::Beta4,
            "a12" => Named::Alpha12,
            _ => return None,
        })
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Named::Gamma => "γ",
            Named::Beta => "β",
            Named::Beta1 => "β₁",
            Named::Beta2 => "β₂",
            Named::Beta3 => "β₃",
            Named::Beta4 => "β₄",
            Named::Alpha12 => "α_1+α_2",
        }
    }
}

/// A linear combination `Σ c·(α_from + … + α_to)` defining a named root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination(Vec<(i32, Affine, Affine)>);

impl Combination {
    /// Parses `a(1)+2a(2..k-2)+a(k-1)+a(k)`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for part in split_top(text, '+') {
            let part = part.trim();
            let digits: String = part.chars().take_while(|c| c.is_ascii_digit()).collect();
            let coeff = if digits.is_empty() {
                1
            } else {
                digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in '{part}'")))?
            };
            let body = &part[digits.len()..];
            let inner = body
                .strip_prefix("a(")
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad term '{part}' in '{text}'")))?;
            let (from, to) = match inner.split_once("..") {
                Some((a, b)) => (Affine::parse(a)?, Affine::parse(b)?),
                None => (Affine::parse(inner)?, Affine::parse(inner)?),
            };
            terms.push((coeff, from, to));
        }
        Ok(Combination(terms))
    }

    pub fn eval(&self, params: &Params, rank: usize) -> Result<Root> {
        let mut c = vec![0i32; rank];
        for (k, from, to) in &self.0 {
            let (a, b) = (from.eval(params)?, to.eval(params)?);
            for i in a..=b {
                let slot = check_index(i, rank)?;
                c[slot] += k;
            }
        }
        Ok(Root::new(c))
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (k, from, to)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("+")?;
            }
            let body = if from == to {
                format!("α_{{{from}}}")
            } else {
                format!("(α_{{{from}}}+…+α_{{{to}}})")
            };
            if *k == 1 {
                f.write_str(&body)?;
            } else {
                write!(f, "{k}{body}")?;
            }
        }
        Ok(())
    }
}

/// One printed element of a root list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Simple {
        negated: bool,
        index: Affine,
    },
    /// `α_from, …, α_to`, ascending or descending; empty when the endpoints
    /// are out of order for the direction.
    Run {
        negated: bool,
        from: Affine,
        to: Affine,
        descending: bool,
    },
    Named {
        negated: bool,
        name: Named,
    },
}

impl Item {
    fn slot_count(&self) -> usize {
        match self {
            Item::Simple { .. } => 1,
            Item::Run { .. } => 2,
            Item::Named { .. } => 0,
        }
    }
}

/// Groups of items; the groups are the `∪`-separated blocks of the tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub groups: Vec<Vec<Item>>,
}

/// Resolves named roots to concrete roots.
pub trait NamedRoots {
    fn named(&self, name: Named, params: &Params) -> Result<Root>;
}

impl Form {
    /// Parses the table notation: groups separated by `|`, items by `,`.
    /// Items are `a(i)`, `a(i..j)` (ascending run), `d(i..j)` (descending run
    /// from `α_i` down to `α_j`) or a named root, each optionally negated.
    pub fn parse(text: &str) -> Result<Self> {
        let mut groups = Vec::new();
        for g in text.split('|') {
            let mut items = Vec::new();
            for raw in split_top(g, ',') {
                let raw = raw.trim();
                let (negated, body) = match raw.strip_prefix('-') {
                    Some(rest) => (true, rest.trim()),
                    None => (false, raw),
                };
                if let Some(name) = Named::parse(body) {
                    items.push(Item::Named { negated, name });
                    continue;
                }
                let (kind, inner) = body
                    .split_once('(')
                    .and_then(|(k, r)| r.strip_suffix(')').map(|r| (k, r)))
                    .ok_or_else(|| Error::Parse(format!("bad item '{raw}'")))?;
                match (kind, inner.split_once("..")) {
                    ("a", None) => items.push(Item::Simple {
                        negated,
                        index: Affine::parse(inner)?,
                    }),
                    ("a" | "d", Some((from, to))) => items.push(Item::Run {
                        negated,
                        from: Affine::parse(from)?,
                        to: Affine::parse(to)?,
                        descending: kind == "d",
                    }),
                    _ => return Err(Error::Parse(format!("bad item '{raw}'"))),
                }
            }
            groups.push(items);
        }
        Ok(Form { groups })
    }

    /// Number of index endpoints: one per single root, two per run.
    pub fn slot_count(&self) -> usize {
        self.groups.iter().flatten().map(Item::slot_count).sum()
    }

    /// The same form with `delta` added to the given slots.
    pub fn shifted(&self, shifts: &[(usize, i64)]) -> Form {
        let delta = |slot: usize| -> i64 {
            shifts
                .iter()
                .filter(|(s, _)| *s == slot)
                .map(|(_, d)| d)
                .sum()
        };
        let mut slot = 0;
        let groups = self
            .groups
            .iter()
            .map(|g| {
                g.iter()
                    .map(|item| {
                        let out = match item {
                            Item::Simple { negated, index } => Item::Simple {
                                negated: *negated,
                                index: index.shifted(delta(slot)),
                            },
                            Item::Run {
                                negated,
                                from,
                                to,
                                descending,
                            } => Item::Run {
                                negated: *negated,
                                from: from.shifted(delta(slot)),
                                to: to.shifted(delta(slot + 1)),
                                descending: *descending,
                            },
                            named => named.clone(),
                        };
                        slot += item.slot_count();
                        out
                    })
                    .collect()
            })
            .collect();
        Form { groups }
    }

    /// Evaluates to concrete roots in an ambient of the given rank. Runs
    /// whose endpoints are out of order contribute nothing.
    pub fn roots(&self, params: &Params, rank: usize, named: &dyn NamedRoots) -> Result<Vec<Root>> {
        let mut out = Vec::new();
        for item in self.groups.iter().flatten() {
            match item {
                Item::Simple { negated, index } => {
                    let i = check_index(index.eval(params)?, rank)?;
                    out.push(sign(Root::simple(rank, i), *negated));
                }
                Item::Run {
                    negated,
                    from,
                    to,
                    descending,
                } => {
                    let (a, b) = (from.eval(params)?, to.eval(params)?);
                    let indices: Vec<i64> = if *descending {
                        (b..=a).rev().collect()
                    } else {
                        (a..=b).collect()
                    };
                    for i in indices {
                        let i = check_index(i, rank)?;
                        out.push(sign(Root::simple(rank, i), *negated));
                    }
                }
                Item::Named { negated, name } => {
                    out.push(sign(named.named(*name, params)?, *negated));
                }
            }
        }
        Ok(out)
    }
}

fn sign(r: Root, negated: bool) -> Root {
    if negated {
        -r
    } else {
        r
    }
}

fn check_index(i: i64, rank: usize) -> Result<usize> {
    if i < 1 || i > rank as i64 {
        return Err(Error::Constraint(format!(
            "simple root index {i} outside 1..={rank}"
        )));
    }
    Ok(i as usize - 1)
}

/// Splits on `sep` outside parentheses.
fn split_top(text: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

fn alpha(negated: bool, index: &Affine) -> String {
    format!("{}α_{{{index}}}", if negated { "-" } else { "" })
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Simple { negated, index } => f.write_str(&alpha(*negated, index)),
            Item::Run {
                negated, from, to, ..
            } => write!(f, "{},…,{}", alpha(*negated, from), alpha(*negated, to)),
            Item::Named { negated, name } => {
                if *negated {
                    write!(f, "-{}", name.symbol())
                } else {
                    f.write_str(name.symbol())
                }
            }
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, g) in self.groups.iter().enumerate() {
            if n > 0 {
                f.write_str(" ∪ ")?;
            }
            let items: Vec<String> = g.iter().map(|i| i.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct NoNames;
    impl NamedRoots for NoNames {
        fn named(&self, name: Named, _: &Params) -> Result<Root> {
            Err(Error::Internal(format!("{name:?}")))
        }
    }

    #[test]
    fn runs_and_slots() {
        let f = Form::parse("a(p+q-l..p+q-1), a(1..q) | d(s..1), -a(2)").unwrap();
        assert_eq!(f.slot_count(), 7);
        let p = Params::new()
            .with('p', 2)
            .with('q', 3)
            .with('l', 1)
            .with('s', 2);
        let roots = f.roots(&p, 4, &NoNames).unwrap();
        let shown: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            shown,
            [
                "[0,0,0,1]",
                "[1,0,0,0]",
                "[0,1,0,0]",
                "[0,0,1,0]",
                "[0,1,0,0]",
                "[1,0,0,0]",
                "[0,-1,0,0]"
            ]
        );
        assert_eq!(
            f.to_string(),
            "{α_{p+q-l},…,α_{p+q-1},α_{1},…,α_{q}} ∪ {α_{s},…,α_{1},-α_{2}}"
        );
    }

    #[test]
    fn empty_runs_and_shifts() {
        let f = Form::parse("-a(p-l+2..p-1), a(1..p-l)").unwrap();
        let p = Params::new().with('p', 5).with('l', 1);
        assert_eq!(f.roots(&p, 5, &NoNames).unwrap().len(), 4);
        let g = f.shifted(&[(0, -1), (3, -1)]);
        assert_eq!(g.to_string(), "{-α_{p-l+1},…,-α_{p-1},α_{1},…,α_{p-l-1}}");
        assert!(Form::parse("a(9)").unwrap().roots(&p, 5, &NoNames).is_err());
    }

    #[test]
    fn combinations() {
        let c = Combination::parse("a(1)+2a(2..k-2)+a(k-1)+a(k)").unwrap();
        let p = Params::new().with('k', 5);
        assert_eq!(c.eval(&p, 5).unwrap().to_string(), "[1,2,2,1,1]");
        assert_eq!(c.to_string(), "α_{1}+2(α_{2}+…+α_{k-2})+α_{k-1}+α_{k}");
    }
}
