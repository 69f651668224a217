//! CSV output: a `#` metadata line followed by a header and rows. Reals are
//! printed with 12 significant digits.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Formats `x` with 12 significant digits, fixed-point for moderate
/// magnitudes and scientific otherwise, without trailing zeros.
pub fn fmt_real(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();

    if !(-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let mut m = mantissa.trim_end_matches('0').to_string();
        if m.ends_with('.') {
            m.pop();
        }
        return format!("{sign}{m}e{exp}");
    }

    let mut out = String::from(sign);
    if exp < 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
        out.push_str(&digits);
    } else {
        let int_len = exp as usize + 1;
        out.push_str(&digits[..int_len]);
        out.push('.');
        out.push_str(&digits[int_len..]);
    }
    let trimmed = out.trim_end_matches('0').trim_end_matches('.');
    trimmed.to_string()
}

/// Accumulates a CSV document in memory.
#[derive(Debug, Clone, Default)]
pub struct Table {
    buf: String,
}

impl Table {
    /// Starts a document whose first line is `# <comment>`.
    pub fn new(comment: &str, header: &[&str]) -> Self {
        let mut buf = String::new();
        writeln!(buf, "# {comment}").unwrap();
        writeln!(buf, "{}", header.join(",")).unwrap();
        Self { buf }
    }

    pub fn row(&mut self, cells: &[Cell]) {
        let line: Vec<String> = cells.iter().map(Cell::render).collect();
        writeln!(self.buf, "{}", line.join(",")).unwrap();
    }

    pub fn as_str(&self) -> &str {
        &self.buf
    }

    /// Everything after the metadata line.
    pub fn body(&self) -> &str {
        self.buf.split_once('\n').map_or("", |(_, rest)| rest)
    }

    /// Writes to `path`, or to stdout when `path` is `None` or `-`.
    pub fn write_to(&self, path: Option<&Path>) -> io::Result<()> {
        match path {
            Some(p) if p != Path::new("-") => std::fs::write(p, &self.buf),
            _ => {
                let mut out = io::stdout().lock();
                out.write_all(self.buf.as_bytes())?;
                out.flush()
            }
        }
    }
}

pub enum Cell<'a> {
    Text(&'a str),
    Int(u64),
    Real(f64),
    Bool(bool),
}

impl Cell<'_> {
    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Real(x) => fmt_real(*x),
            Cell::Bool(b) => b.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_real(7.0 / 30.0), "0.233333333333");
        assert_eq!(fmt_real(0.25), "0.25");
        assert_eq!(fmt_real(1.0), "1");
        assert_eq!(fmt_real(-2.5), "-2.5");
        assert_eq!(fmt_real(123456.0), "123456");
        assert_eq!(fmt_real(1.0 / 3.0 * 1e-3), "0.000333333333333");
        assert_eq!(fmt_real(1e-7), "1e-7");
        assert_eq!(fmt_real(2.0e15), "2e15");
        assert_eq!(fmt_real(0.0), "0");
        assert_eq!(fmt_real(9.9999999999999), "10");
        assert_eq!(fmt_real(f64::INFINITY), "inf");
    }

    #[test]
    fn table_layout() {
        let mut t = Table::new("tool x --a 1", &["a", "b"]);
        t.row(&[Cell::Text("x"), Cell::Real(0.5)]);
        t.row(&[Cell::Int(3), Cell::Bool(true)]);
        assert_eq!(t.as_str(), "# tool x --a 1\na,b\nx,0.5\n3,true\n");
        assert_eq!(t.body(), "a,b\nx,0.5\n3,true\n");
    }
}
