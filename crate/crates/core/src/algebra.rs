//! Names of the simple Hermitian Lie algebras, their real ranks, tube-type
//! predicate and low-dimensional isomorphisms.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::expr::{Affine, Params};

/// A simple Hermitian Lie algebra (or a member of one of the families,
/// possibly degenerate in low dimension).
///
/// `Sp { p }` is `sp(2p)`, `SoStar { p }` is `so*(2p)` and `So2 { p }` is
/// `so(p,2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraId {
    Su { p: u32, q: u32 },
    Sp { p: u32 },
    SoStar { p: u32 },
    So2 { p: u32 },
    E6,
    E7,
}

/// The catalog families. `so(p,2)` splits by the parity of `p` because the
/// two parities have different Dynkin diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Su,
    Sp,
    SoStar,
    So2Even,
    So2Odd,
    E6,
    E7,
}

impl AlgebraId {
    pub fn su(p: u32, q: u32) -> Self {
        AlgebraId::Su { p, q }
    }

    pub fn family(&self) -> Family {
        match *self {
            AlgebraId::Su { .. } => Family::Su,
            AlgebraId::Sp { .. } => Family::Sp,
            AlgebraId::SoStar { .. } => Family::SoStar,
            AlgebraId::So2 { p } if p % 2 == 0 => Family::So2Even,
            AlgebraId::So2 { .. } => Family::So2Odd,
            AlgebraId::E6 => Family::E6,
            AlgebraId::E7 => Family::E7,
        }
    }

    /// Checks the parameter ranges used for ambient algebras: `1 ≤ p ≤ q`
    /// for `su(p,q)`, `p ≥ 2` for `sp(2p)`, `p ≥ 5` for `so*(2p)` and
    /// `so(p,2)`. Smaller members are covered by isomorphisms.
    pub fn check_ambient(&self) -> Result<()> {
        let fail = |bound| {
            Err(Error::ParameterRange {
                algebra: self.to_string(),
                bound,
            })
        };
        match *self {
            AlgebraId::Su { p, .. } if p < 1 => fail("1 <= p"),
            AlgebraId::Su { p, q } if p > q => fail("p <= q"),
            AlgebraId::Sp { p } if p < 2 => fail("p >= 2"),
            AlgebraId::SoStar { p } if p < 5 => fail("p >= 5"),
            AlgebraId::So2 { p } if p < 5 => fail("p >= 5"),
            _ => Ok(()),
        }
    }

    /// Real rank of the associated symmetric space.
    pub fn rank(&self) -> u32 {
        match *self {
            AlgebraId::Su { p, q } => p.min(q),
            AlgebraId::Sp { p } => p,
            AlgebraId::SoStar { p } => p / 2,
            AlgebraId::So2 { p } => p.min(2),
            AlgebraId::E6 => 2,
            AlgebraId::E7 => 3,
        }
    }

    pub fn is_tube_type(&self) -> bool {
        match *self {
            AlgebraId::Su { p, q } => p == q,
            AlgebraId::Sp { .. } => true,
            AlgebraId::SoStar { p } => p % 2 == 0,
            AlgebraId::So2 { .. } => true,
            AlgebraId::E6 => false,
            AlgebraId::E7 => true,
        }
    }

    /// Noncompact simple factors under the low-dimensional isomorphisms,
    /// each in a single canonical spelling. Compact parts are dropped.
    ///
    /// `sp(2) = su(1,1)`, `sp(4) = so(3,2)` (spelled `sp(4)`),
    /// `so*(4) = su(1,1) + su(2)`, `so*(6) = su(1,3)`, `so*(8) = so(6,2)`,
    /// `so(1,2) = su(1,1)`, `so(2,2) = su(1,1) + su(1,1)`, `so(4,2) = su(2,2)`.
    pub fn canonical(&self) -> Vec<AlgebraId> {
        use AlgebraId::*;
        match *self {
            Su { p, q } if p == 0 || q == 0 => vec![],
            Su { p, q } => vec![Su {
                p: p.min(q),
                q: p.max(q),
            }],
            Sp { p: 0 } => vec![],
            Sp { p: 1 } => vec![Su { p: 1, q: 1 }],
            SoStar { p } if p <= 1 => vec![],
            SoStar { p: 2 } => vec![Su { p: 1, q: 1 }],
            SoStar { p: 3 } => vec![Su { p: 1, q: 3 }],
            SoStar { p: 4 } => vec![So2 { p: 6 }],
            So2 { p: 0 } => vec![],
            So2 { p: 1 } => vec![Su { p: 1, q: 1 }],
            So2 { p: 2 } => vec![Su { p: 1, q: 1 }, Su { p: 1, q: 1 }],
            So2 { p: 3 } => vec![Sp { p: 2 }],
            So2 { p: 4 } => vec![Su { p: 2, q: 2 }],
            other => vec![other],
        }
    }

    /// Parses an algebra name whose parameters may be affine expressions in
    /// symbols resolved from `params`, e.g. `sp(2p)` with `p = 4` or
    /// `su(p-l,q-s)`.
    pub fn parse_with(text: &str, params: &Params) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "e6" | "e6(-14)" | "e_6(-14)" => return Ok(AlgebraId::E6),
            "e7" | "e7(-25)" | "e_7(-25)" => return Ok(AlgebraId::E7),
            _ => {}
        }
        let open = lower
            .find('(')
            .ok_or_else(|| Error::Parse(format!("expected parameters in '{text}'")))?;
        if !lower.ends_with(')') {
            return Err(Error::Parse(format!("unbalanced parentheses in '{text}'")));
        }
        let head = &lower[..open];
        let args: Vec<&str> = lower[open + 1..lower.len() - 1].split(',').collect();
        let eval = |a: &str| Affine::parse(a)?.eval(params);
        let pos = |v: i64| -> Result<u32> {
            u32::try_from(v).map_err(|_| Error::Parse(format!("negative parameter in '{text}'")))
        };
        let half = |v: i64| -> Result<u32> {
            if v % 2 != 0 {
                return Err(Error::Parse(format!("'{text}' needs an even dimension")));
            }
            pos(v / 2)
        };
        match (head, args.as_slice()) {
            ("su", [a, b]) => Ok(AlgebraId::Su {
                p: pos(eval(a)?)?,
                q: pos(eval(b)?)?,
            }),
            ("sp", [a]) => Ok(AlgebraId::Sp { p: half(eval(a)?)? }),
            ("so*", [a]) => Ok(AlgebraId::SoStar { p: half(eval(a)?)? }),
            ("so", [a, b]) if eval(b)? == 2 => Ok(AlgebraId::So2 { p: pos(eval(a)?)? }),
            _ => Err(Error::Parse(format!("unknown algebra '{text}'"))),
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AlgebraId::Su { p, q } => write!(f, "su({p},{q})"),
            AlgebraId::Sp { p } => write!(f, "sp({})", 2 * p),
            AlgebraId::SoStar { p } => write!(f, "so*({})", 2 * p),
            AlgebraId::So2 { p } => write!(f, "so({p},2)"),
            AlgebraId::E6 => f.write_str("e6(-14)"),
            AlgebraId::E7 => f.write_str("e7(-25)"),
        }
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraId::parse_with(s, &Params::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for name in [
            "su(2,3)", "sp(8)", "so*(10)", "so(8,2)", "e6(-14)", "e7(-25)",
        ] {
            let a: AlgebraId = name.parse().unwrap();
            assert_eq!(a.to_string(), name);
        }
        assert_eq!("e7".parse::<AlgebraId>().unwrap(), AlgebraId::E7);
        assert!("sp(7)".parse::<AlgebraId>().is_err());
        assert!("so(8,3)".parse::<AlgebraId>().is_err());
    }

    #[test]
    fn symbolic_parameters() {
        let params = Params::new().with('p', 4).with('q', 6);
        assert_eq!(
            AlgebraId::parse_with("sp(2p)", &params).unwrap(),
            AlgebraId::Sp { p: 4 }
        );
        assert_eq!(
            AlgebraId::parse_with("su(p,q)", &params).unwrap(),
            AlgebraId::Su { p: 4, q: 6 }
        );
        assert!(AlgebraId::parse_with("so*(2r)", &params).is_err());
    }

    #[test]
    fn ambient_ranges() {
        assert!(AlgebraId::Su { p: 3, q: 2 }.check_ambient().is_err());
        assert!(AlgebraId::SoStar { p: 4 }.check_ambient().is_err());
        assert!(AlgebraId::So2 { p: 4 }.check_ambient().is_err());
        assert!(AlgebraId::Sp { p: 1 }.check_ambient().is_err());
        assert!(AlgebraId::Sp { p: 2 }.check_ambient().is_ok());
    }

    #[test]
    fn rank_and_tube_tables() {
        assert_eq!(AlgebraId::su(2, 3).rank(), 2);
        assert_eq!(AlgebraId::SoStar { p: 7 }.rank(), 3);
        assert_eq!(AlgebraId::E7.rank(), 3);
        assert!(AlgebraId::Sp { p: 5 }.is_tube_type());
        assert!(!AlgebraId::su(2, 3).is_tube_type());
        assert!(!AlgebraId::SoStar { p: 3 }.is_tube_type());
        assert!(!AlgebraId::E6.is_tube_type());
    }

    #[test]
    fn canonical_forms_preserve_rank() {
        for a in [
            AlgebraId::Sp { p: 1 },
            AlgebraId::SoStar { p: 2 },
            AlgebraId::SoStar { p: 3 },
            AlgebraId::SoStar { p: 4 },
            AlgebraId::So2 { p: 2 },
            AlgebraId::So2 { p: 3 },
            AlgebraId::So2 { p: 4 },
            AlgebraId::su(3, 1),
        ] {
            let sum: u32 = a.canonical().iter().map(|c| c.rank()).sum();
            assert_eq!(sum, a.rank(), "{a}");
        }
    }
}
