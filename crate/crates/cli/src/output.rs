//! Rendering of result rows as JSON lines, CSV, a LaTeX tabular or aligned text.

use cox_core::arith::int;
use cox_core::Rational;
use serde_json::{Map, Number, Value};

use crate::Format;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Rat(Rational),
    Bool(bool),
    Text(String),
    List(Vec<Cell>),
}

impl Cell {
    pub fn int(v: i64) -> Cell {
        Cell::Rat(int(v))
    }

    fn json(&self) -> Value {
        match self {
            Cell::Rat(x) if x.is_integer() => {
                Value::Number(x.to_integer().to_string().parse::<Number>().expect("integer literal"))
            }
            Cell::Rat(x) => Value::String(x.to_string()),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::List(items) => Value::Array(items.iter().map(Cell::json).collect()),
        }
    }

    fn plain(&self, sep: &str) -> String {
        match self {
            Cell::Rat(x) => x.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::List(items) => items.iter().map(|c| c.plain(sep)).collect::<Vec<_>>().join(sep),
        }
    }

    fn latex(&self, column: &str) -> String {
        match self {
            Cell::Rat(x) if x.is_integer() => format!("${x}$"),
            Cell::Rat(x) => format!("$\\frac{{{}}}{{{}}}$", x.numer(), x.denom()),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) if column == "type" => latex_type(s),
            Cell::Text(s) => s.replace('_', "\\_"),
            Cell::List(items) => {
                let inner: Vec<String> = items.iter().map(|c| c.latex(column).replace('$', "")).collect();
                format!("$\\{{{}\\}}$", inner.join(","))
            }
        }
    }
}

/// `E8` becomes `$E_{8}$`, `I2(7)` becomes `$I_2(7)$`.
fn latex_type(s: &str) -> String {
    let (family, rest) = s.split_at(1);
    match rest.strip_prefix('2').filter(|r| r.starts_with('(')) {
        Some(m) if family == "I" => format!("${family}_2{m}$"),
        _ => format!("${family}_{{{rest}}}$"),
    }
}

fn latex_header(column: &str) -> String {
    match column {
        "gamma" => "$\\gamma$".into(),
        "alpha" => "$\\alpha$".into(),
        "beta" => "$\\beta$".into(),
        "nu" => "$\\nu$".into(),
        "r" | "h" | "d" | "n" | "A" | "B" => format!("${column}$"),
        "V+" => "$V_+$".into(),
        "V-" => "$V_-$".into(),
        c if c.starts_with('S') && c[1..].chars().all(|ch| ch.is_ascii_digit()) && c.len() > 1 => {
            format!("$S_{{{}}}$", &c[1..])
        }
        c => c.replace('_', " "),
    }
}

/// Parameter columns lead in LaTeX output in this order.
const LATEX_ORDER: [&str; 10] = ["type", "r", "h", "gamma", "d", "A", "B", "alpha", "beta", "nu"];

/// Rows sharing one set of columns.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OutputDocument {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl OutputDocument {
    pub fn single<K: Into<String>>(row: Vec<(K, Cell)>) -> Self {
        Self::from_rows(vec![row])
    }

    pub fn from_rows<K: Into<String>>(rows: Vec<Vec<(K, Cell)>>) -> Self {
        let mut columns = Vec::new();
        let mut out = Vec::with_capacity(rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            let (keys, cells): (Vec<String>, Vec<Cell>) = row.into_iter().map(|(k, c)| (k.into(), c)).unzip();
            if i == 0 {
                columns = keys;
            } else {
                debug_assert_eq!(columns, keys);
            }
            out.push(cells);
        }
        OutputDocument { columns, rows: out }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json_lines(),
            Format::Csv => self.to_csv(),
            Format::Latex => self.to_latex(),
            Format::Pretty => self.to_pretty(),
        }
    }

    /// One JSON object per row and line, keys in column order.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let object: Map<String, Value> = self.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect();
            out.push_str(&Value::Object(object).to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            writer.write_record(row.iter().map(|c| c.plain(";"))).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    pub fn to_latex(&self) -> String {
        let mut order: Vec<usize> =
            LATEX_ORDER.iter().filter_map(|name| self.columns.iter().position(|c| c == name)).collect();
        let rest: Vec<usize> = (0..self.columns.len()).filter(|i| !order.contains(i)).collect();
        order.extend(rest);
        let mut out = format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "c".repeat(order.len()));
        let header: Vec<String> = order.iter().map(|&i| latex_header(&self.columns[i])).collect();
        out.push_str(&format!("{} \\\\\n\\hline\n", header.join(" & ")));
        for row in &self.rows {
            let cells: Vec<String> = order.iter().map(|&i| row[i].latex(&self.columns[i])).collect();
            out.push_str(&format!("{} \\\\\n", cells.join(" & ")));
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }

    pub fn to_pretty(&self) -> String {
        if self.rows.len() == 1 {
            let width = self.columns.iter().map(String::len).max().unwrap_or(0);
            return self
                .columns
                .iter()
                .zip(&self.rows[0])
                .map(|(k, v)| format!("{k:<width$}  {}\n", v.plain(" ")))
                .collect();
        }
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(|c| c.plain(" ")).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| cells.iter().map(|r| r[i].len()).chain([self.columns[i].len()]).max().unwrap_or(0))
            .collect();
        let line = |items: &[String]| -> String {
            let padded: Vec<String> = items.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        let mut out = line(&self.columns);
        for row in &cells {
            out.push_str(&line(row));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cox_core::arith::rat;

    fn doc() -> OutputDocument {
        OutputDocument::from_rows(vec![
            vec![("type", Cell::Text("E8".into())), ("d", Cell::int(6)), ("S1", Cell::int(120))],
            vec![("type", Cell::Text("I2(7)".into())), ("d", Cell::Rat(rat(7, 2))), ("S1", Cell::int(7))],
        ])
    }

    #[test]
    fn json_lines_keep_key_order_and_exact_values() {
        assert_eq!(
            doc().to_json_lines(),
            "{\"type\":\"E8\",\"d\":6,\"S1\":120}\n{\"type\":\"I2(7)\",\"d\":\"7/2\",\"S1\":7}\n"
        );
    }

    #[test]
    fn large_integers_are_plain_numbers() {
        let big: Rational = int(10).pow(40);
        let d = OutputDocument::single(vec![("x", Cell::Rat(big))]);
        assert_eq!(d.to_json_lines(), format!("{{\"x\":1{}}}\n", "0".repeat(40)));
    }

    #[test]
    fn csv_has_header() {
        assert_eq!(doc().to_csv(), "type,d,S1\nE8,6,120\nI2(7),7/2,7\n");
    }

    #[test]
    fn latex_is_one_tabular() {
        let t = doc().to_latex();
        assert_eq!(t.matches("\\begin{tabular}").count(), 1);
        assert!(t.contains("$E_{8}$ & $6$ & $120$ \\\\"));
        assert!(t.contains("$I_2(7)$ & $\\frac{7}{2}$"));
    }

    #[test]
    fn pretty_single_row_is_key_value() {
        let d = OutputDocument::single(vec![("type", Cell::Text("A1".into())), ("exponents", Cell::List(vec![Cell::int(1)]))]);
        assert_eq!(d.to_pretty(), "type       A1\nexponents  1\n");
    }
}
