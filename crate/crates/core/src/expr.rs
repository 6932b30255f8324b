//! Affine integer expressions over single-letter parameters, such as
//! `p+q-l-2` or `2(p-l)`, used for catalog indices and algebra names.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::error::{Error, Result};

/// Parameter bindings. `h` is bound to `⌊p/2⌋` whenever `p` is bound.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(BTreeMap<char, i64>);

impl Params {
    pub fn new() -> Self {
        Params(BTreeMap::new())
    }

    pub fn with(mut self, name: char, value: i64) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: char, value: i64) {
        self.0.insert(name, value);
        if name == 'p' {
            self.0.insert('h', value.div_euclid(2));
        }
    }

    pub fn get(&self, name: char) -> Option<i64> {
        self.0.get(&name).copied()
    }

    /// The value of `name`; panics if unbound. For use after the catalog has
    /// checked its bindings.
    pub fn val(&self, name: char) -> i64 {
        self.0[&name]
    }

    pub fn iter(&self) -> impl Iterator<Item = (char, i64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    /// Only the given names, e.g. to separate entry parameters from ambient
    /// ones.
    pub fn restrict(&self, names: &[char]) -> Params {
        Params(
            self.0
                .iter()
                .filter(|(k, _)| names.contains(k))
                .map(|(&k, &v)| (k, v))
                .collect(),
        )
    }

    /// Parses `l=1,s=2`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Params::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected name=value, got '{part}'")))?;
            let mut chars = k.trim().chars();
            let (Some(name), None) = (chars.next(), chars.next()) else {
                return Err(Error::Parse(format!(
                    "parameter names are single letters: '{k}'"
                )));
            };
            let value = v
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad value in '{part}'")))?;
            out.set(name, value);
        }
        Ok(out)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.iter().filter(|(k, _)| *k != 'h') {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// `constant + Σ coeff·var`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    constant: i64,
    terms: BTreeMap<char, i64>,
}

impl Affine {
    pub fn constant(c: i64) -> Self {
        Affine {
            constant: c,
            terms: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let chars: alloc::vec::Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let e = parse_sum(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in '{text}'")));
        }
        Ok(e)
    }

    pub fn eval(&self, params: &Params) -> Result<i64> {
        let mut acc = self.constant;
        for (&name, &c) in &self.terms {
            let v = params
                .get(name)
                .ok_or_else(|| Error::Parse(format!("unbound parameter '{name}'")))?;
            acc += c * v;
        }
        Ok(acc)
    }

    pub fn shifted(&self, delta: i64) -> Self {
        let mut out = self.clone();
        out.constant += delta;
        out
    }

    fn add_scaled(&mut self, other: &Affine, k: i64) {
        self.constant += k * other.constant;
        for (&name, &c) in &other.terms {
            let e = self.terms.entry(name).or_insert(0);
            *e += k * c;
            if *e == 0 {
                self.terms.remove(&name);
            }
        }
    }
}

fn parse_sum(s: &[char], pos: &mut usize) -> Result<Affine> {
    let mut acc = Affine::constant(0);
    let mut sign = 1;
    if s.get(*pos) == Some(&'-') {
        sign = -1;
        *pos += 1;
    }
    loop {
        let t = parse_term(s, pos)?;
        acc.add_scaled(&t, sign);
        match s.get(*pos) {
            Some('+') => sign = 1,
            Some('-') => sign = -1,
            _ => return Ok(acc),
        }
        *pos += 1;
    }
}

fn parse_term(s: &[char], pos: &mut usize) -> Result<Affine> {
    let start = *pos;
    while s.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
        *pos += 1;
    }
    let digits: String = s[start..*pos].iter().collect();
    let coeff = if digits.is_empty() {
        None
    } else {
        Some(
            digits
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad number '{digits}'")))?,
        )
    };
    let body = match s.get(*pos) {
        Some('(') => {
            *pos += 1;
            let inner = parse_sum(s, pos)?;
            if s.get(*pos) != Some(&')') {
                return Err(Error::Parse("missing ')'".into()));
            }
            *pos += 1;
            Some(inner)
        }
        Some(&c) if c.is_ascii_lowercase() => {
            *pos += 1;
            let mut a = Affine::constant(0);
            a.terms.insert(c, 1);
            Some(a)
        }
        _ => None,
    };
    match (coeff, body) {
        (Some(k), Some(b)) => {
            let mut a = Affine::constant(0);
            a.add_scaled(&b, k);
            Ok(a)
        }
        (None, Some(b)) => Ok(b),
        (Some(k), None) => Ok(Affine::constant(k)),
        (None, None) => Err(Error::Parse(format!(
            "expected a term at position {start} of '{}'",
            s.iter().collect::<String>()
        ))),
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: alloc::vec::Vec<(char, i64)> =
            self.terms.iter().map(|(&k, &v)| (k, v)).collect();
        terms.sort_by_key(|(name, _)| "pqkhlsm".find(*name).unwrap_or(usize::MAX));
        let mut first = true;
        for (name, c) in terms {
            match (c, first) {
                (1, true) => {}
                (1, false) => f.write_str("+")?,
                (-1, _) => f.write_str("-")?,
                (c, true) => write!(f, "{c}")?,
                (c, false) if c > 0 => write!(f, "+{c}")?,
                (c, false) => write!(f, "{c}")?,
            }
            write!(f, "{name}")?;
            first = false;
        }
        if first {
            write!(f, "{}", self.constant)
        } else if self.constant > 0 {
            write!(f, "+{}", self.constant)
        } else if self.constant < 0 {
            write!(f, "{}", self.constant)
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_eval_display() {
        let p = Params::new().with('p', 5).with('q', 7).with('l', 2);
        let e = Affine::parse("p+q-l-2").unwrap();
        assert_eq!(e.eval(&p).unwrap(), 8);
        assert_eq!(e.to_string(), "p+q-l-2");
        assert_eq!(Affine::parse("2(p-l)").unwrap().eval(&p).unwrap(), 6);
        assert_eq!(Affine::parse("h").unwrap().eval(&p).unwrap(), 2);
        assert_eq!(Affine::parse("-1").unwrap().eval(&p).unwrap(), -1);
        assert_eq!(Affine::parse("l-l").unwrap().to_string(), "0");
        assert!(Affine::parse("p+").is_err());
        assert!(Affine::parse("r").unwrap().eval(&p).is_err());
    }

    #[test]
    fn params_text() {
        let p = Params::parse("l=1, s=2").unwrap();
        assert_eq!(p.val('s'), 2);
        assert_eq!(p.to_string(), "l=1,s=2");
        assert!(Params::parse("ll=1").is_err());
        assert!(Params::parse("l").is_err());
    }
}
