use serde_json::Value;

use super::config::Format;

/// A command result: canonical JSON plus a flat table for CSV and LaTeX.
#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub pass: bool,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("serializable")),
            Format::Csv => {
                let mut s = String::new();
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    s.push_str(&cells.join(","));
                    s.push('\n');
                }
                s
            }
            Format::Tex => {
                let mut s = format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "l".repeat(self.header.len()));
                s.push_str(&tex_row(&self.header));
                s.push_str("\\hline\n");
                for row in &self.rows {
                    s.push_str(&tex_row(row));
                }
                s.push_str("\\hline\n\\end{tabular}\n");
                s
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn tex_row(row: &[String]) -> String {
    let cells: Vec<String> = row
        .iter()
        .map(|c| {
            let escaped =
                c.replace('\\', "\\textbackslash{}").replace('_', "\\_").replace('&', "\\&").replace('#', "\\#");
            if escaped.contains('^') {
                format!("${}$", brace_exponents(&escaped))
            } else {
                escaped
            }
        })
        .collect();
    format!("{} \\\\\n", cells.join(" & "))
}

/// `v^-12` becomes `v^{-12}`.
fn brace_exponents(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            let mut exp = String::new();
            if chars.peek() == Some(&'-') {
                exp.push(chars.next().unwrap());
            }
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                exp.push(*d);
                chars.next();
            }
            out.push_str(&format!("{{{exp}}}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_all_formats() {
        let out = Output {
            json: serde_json::json!({"a": 1}),
            header: vec!["x".into(), "y_1".into()],
            rows: vec![vec!["v^-1 + v".into(), "a,b".into()]],
            pass: true,
        };
        assert_eq!(out.render(Format::Csv), "x,y_1\nv^-1 + v,\"a,b\"\n");
        assert!(out.render(Format::Tex).contains("$v^{-1} + v$ & a,b \\\\"));
        assert!(out.render(Format::Json).contains("\"a\": 1"));
    }
}
