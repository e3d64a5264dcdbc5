//! Deterministic number formatting and key/value rendering.

use serde::Serialize;

use crate::Format;

/// Fixed 12 decimals with trailing zeros dropped; `-0` prints as `0`.
pub fn num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serialises");
    s.push('\n');
    s
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_line<S: AsRef<str>>(fields: &[S]) -> String {
    let mut line = fields
        .iter()
        .map(|f| csv_field(f.as_ref()))
        .collect::<Vec<_>>()
        .join(",");
    line.push('\n');
    line
}

/// Ordered `key: value` pairs, rendered as aligned text or two-column CSV.
#[derive(Default)]
pub struct KeyValues(Vec<(String, String)>);

impl KeyValues {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.0.push((key.into(), value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut s = csv_line(&["key", "value"]);
                for (k, v) in &self.0 {
                    s.push_str(&csv_line(&[k, v]));
                }
                s
            }
            _ => {
                let width = self.0.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                self.0.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(num(0.14), "0.14");
        assert_eq!(num(22.0), "22");
        assert_eq!(num(-1e-15), "0");
        assert_eq!(num(0.1715728752538099), "0.171572875254");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_line(&["a", "b,c", "d\"e"]), "a,\"b,c\",\"d\"\"e\"\n");
    }
}
