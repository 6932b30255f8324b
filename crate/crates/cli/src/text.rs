//! Aligned text tables.

use tightmaps_core::Rational;

/// Left-aligned columns separated by two spaces; widths count chars.
pub fn table<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> String {
    let mut all: Vec<Vec<&str>> = Vec::new();
    if !header.is_empty() {
        all.push(header.to_vec());
    }
    all.extend(rows.iter().map(|r| r.iter().map(AsRef::as_ref).collect()));
    let cols = all.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            all.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in &all {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < row.len() {
                let pad = widths[c] - cell.chars().count() + 2;
                line.extend(std::iter::repeat_n(' ', pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Two-column `key  value` listing.
pub fn pairs(rows: &[(&str, String)]) -> String {
    let rows: Vec<Vec<&str>> = rows.iter().map(|(k, v)| vec![*k, v.as_str()]).collect();
    table(&[], &rows)
}

pub fn rational(r: &Rational) -> String {
    r.to_string()
}

pub fn list<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
