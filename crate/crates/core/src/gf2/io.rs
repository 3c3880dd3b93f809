//! Text formats for binary matrices.
//!
//! `dense01`: first line `rows cols`, then one line of `0`/`1` characters per row.
//!
//! `alist`: the sparse index-list format used by classical LDPC tools:
//!
//! ```text
//! rows cols
//! max_row_weight max_col_weight
//! <row weights>
//! <col weights>
//! <one line per row: 1-based column indices, optionally zero-padded>
//! <one line per column: 1-based row indices, optionally zero-padded>
//! ```
//!
//! The column section is checked against the row section on read.

use std::fmt::Write as _;

use super::{ones, BinMat};
use crate::error::{parse_err, Result};

pub fn write_dense01(m: &BinMat) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for row in m.to_strings() {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

fn header(line_no: usize, line: Option<&str>, what: &str) -> Result<(usize, usize)> {
    let line = line.ok_or_else(|| parse_err(line_no, format!("missing {what} line")))?;
    let nums: Vec<&str> = line.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(parse_err(line_no, format!("expected two integers for {what}, got {line:?}")));
    }
    let p = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("bad integer {s:?}")))
    };
    Ok((p(nums[0])?, p(nums[1])?))
}

pub fn read_dense01(text: &str) -> Result<BinMat> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, hdr) = lines.next().map_or((1, None), |(i, l)| (i, Some(l)));
    let (rows, cols) = header(hline, hdr, "dense01 header")?;
    let mut m = BinMat::zeros(rows, cols);
    for r in 0..rows {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline + r + 1, format!("expected {rows} rows, found {r}")))?;
        let bits: Vec<char> = line.chars().filter(|c| !c.is_whitespace()).collect();
        if bits.len() != cols {
            return Err(parse_err(ln, format!("row has {} entries, expected {cols}", bits.len())));
        }
        for (c, ch) in bits.into_iter().enumerate() {
            match ch {
                '0' => {}
                '1' => m.set(r, c, true),
                other => return Err(parse_err(ln, format!("unexpected character {other:?}"))),
            }
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "trailing data after last row"));
    }
    Ok(m)
}

pub fn write_alist(m: &BinMat) -> String {
    let t = m.transpose();
    let row_lists: Vec<Vec<usize>> = (0..m.rows()).map(|r| ones(m.row(r)).collect()).collect();
    let col_lists: Vec<Vec<usize>> = (0..t.rows()).map(|r| ones(t.row(r)).collect()).collect();
    let max_r = row_lists.iter().map(Vec::len).max().unwrap_or(0);
    let max_c = col_lists.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    let join = |v: &mut dyn Iterator<Item = usize>| v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let _ = writeln!(out, "{} {}", m.rows(), m.cols());
    let _ = writeln!(out, "{max_r} {max_c}");
    let _ = writeln!(out, "{}", join(&mut row_lists.iter().map(Vec::len)));
    let _ = writeln!(out, "{}", join(&mut col_lists.iter().map(Vec::len)));
    for (lists, width) in [(&row_lists, max_r), (&col_lists, max_c)] {
        for l in lists.iter() {
            let mut padded: Vec<usize> = l.iter().map(|&x| x + 1).collect();
            padded.resize(width, 0);
            let _ = writeln!(out, "{}", join(&mut padded.into_iter()));
        }
    }
    out
}

pub fn read_alist(text: &str) -> Result<BinMat> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('#'));
    let mut next = |what: &str| -> Result<(usize, Vec<usize>)> {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("unexpected end of file reading {what}")))?;
        let nums = line
            .split_whitespace()
            .map(|s| s.parse::<usize>().map_err(|_| parse_err(ln, format!("bad integer {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok((ln, nums))
    };
    let (ln, dims) = next("dimensions")?;
    let [rows, cols] = dims[..] else {
        return Err(parse_err(ln, "expected `rows cols`"));
    };
    next("maximum weights")?;
    let (ln, row_w) = next("row weights")?;
    if row_w.len() != rows {
        return Err(parse_err(ln, format!("expected {rows} row weights")));
    }
    let (ln, col_w) = next("column weights")?;
    if col_w.len() != cols {
        return Err(parse_err(ln, format!("expected {cols} column weights")));
    }
    let mut m = BinMat::zeros(rows, cols);
    for r in 0..rows {
        let (ln, idx) = next("row list")?;
        let idx: Vec<usize> = idx.into_iter().filter(|&i| i != 0).collect();
        if idx.len() != row_w[r] {
            return Err(parse_err(ln, format!("row {} lists {} entries, weight says {}", r + 1, idx.len(), row_w[r])));
        }
        for i in idx {
            if i > cols {
                return Err(parse_err(ln, format!("column index {i} exceeds {cols}")));
            }
            m.set(r, i - 1, true);
        }
    }
    for c in 0..cols {
        let (ln, idx) = next("column list")?;
        let mut idx: Vec<usize> = idx.into_iter().filter(|&i| i != 0).collect();
        idx.sort_unstable();
        let expect: Vec<usize> = (0..rows).filter(|&r| m.get(r, c)).map(|r| r + 1).collect();
        if idx != expect || idx.len() != col_w[c] {
            return Err(parse_err(ln, format!("column {} list disagrees with row lists", c + 1)));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn dense01_roundtrip_and_errors() {
        let m = BinMat::from_strs(&["110", "011"]).unwrap();
        let text = write_dense01(&m);
        assert_eq!(text, "2 3\n110\n011\n");
        assert_eq!(read_dense01(&text).unwrap(), m);
        let err = read_dense01("2 3\n110\n01\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!(read_dense01("1 2\n1x\n").is_err());
        assert_eq!(read_dense01("0 4\n").unwrap().cols(), 4);
    }

    #[test]
    fn alist_roundtrip() {
        let m = BinMat::from_strs(&["1101", "0110", "0000"]).unwrap();
        let text = write_alist(&m);
        assert_eq!(read_alist(&text).unwrap(), m);
    }

    #[test]
    fn alist_rejects_inconsistent_columns() {
        let bad = "2 2\n1 1\n1 1\n1 1\n1\n2\n2\n1\n";
        assert!(read_alist(bad).is_err());
        let good = "2 2\n1 1\n1 1\n1 1\n1\n2\n1\n2\n";
        assert_eq!(read_alist(good).unwrap(), BinMat::identity(2));
    }
}
