//! Text rendering of command results. Everything shown is read off the
//! JSON value, so text and `--json` output never disagree.

use std::fmt::Write;
use std::io::IsTerminal;

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorChoice {
    Auto,
    Always,
    Never,
}

impl ColorChoice {
    /// Reads `TORIPARAM_COLOR`; unset means `auto`.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var("TORIPARAM_COLOR").as_deref() {
            Err(_) | Ok("auto") => Ok(ColorChoice::Auto),
            Ok("always") => Ok(ColorChoice::Always),
            Ok("never") => Ok(ColorChoice::Never),
            Ok(other) => Err(format!("TORIPARAM_COLOR must be auto, always or never, not {other:?}")),
        }
    }

    pub fn enabled(self) -> bool {
        match self {
            ColorChoice::Auto => std::io::stdout().is_terminal(),
            ColorChoice::Always => true,
            ColorChoice::Never => false,
        }
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && is_flat(x)),
        Value::Object(_) => false,
        _ => true,
    }
}

/// Scalars and nested arrays of scalars on one line; strings unquoted.
fn inline(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn key(k: &str, color: bool) -> String {
    let label = k.replace('_', " ");
    if color {
        format!("\x1b[1;36m{label}\x1b[0m")
    } else {
        label
    }
}

fn write_object(out: &mut String, map: &serde_json::Map<String, Value>, indent: usize, color: bool) {
    let pad = " ".repeat(indent);
    for (k, v) in map {
        if matches!(v, Value::Array(a) if a.is_empty()) {
            continue;
        }
        if is_flat(v) {
            let _ = writeln!(out, "{pad}{}: {}", key(k, color), inline(v));
            continue;
        }
        let _ = writeln!(out, "{pad}{}:", key(k, color));
        match v {
            Value::Array(items) => {
                for item in items {
                    match item {
                        Value::Object(m) => {
                            let mut inner = String::new();
                            write_object(&mut inner, m, indent + 4, color);
                            // first line carries the list marker
                            let body = inner.replacen(&" ".repeat(indent + 4), &format!("{pad}  - "), 1);
                            out.push_str(&body);
                        }
                        other => {
                            let _ = writeln!(out, "{pad}  - {}", inline(other));
                        }
                    }
                }
            }
            Value::Object(m) => write_object(out, m, indent + 2, color),
            _ => unreachable!("flat values handled above"),
        }
    }
}

pub fn render_human(v: &Value, color: bool) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => write_object(&mut out, map, 0, color),
        other => {
            let _ = writeln!(out, "{}", inline(other));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_rendering() {
        let v = json!({
            "smooth": false,
            "rays": [[1, 0], [0, 1]],
            "singular_cones": [{"cone": [1, 2], "determinant": "2"}],
            "warnings": [],
        });
        let text = render_human(&v, false);
        assert_eq!(
            text,
            "smooth: false\nrays: [[1, 0], [0, 1]]\nsingular cones:\n  - cone: [1, 2]\n    determinant: 2\n"
        );
    }

    #[test]
    fn colored_keys() {
        let text = render_human(&json!({"holds": true}), true);
        assert!(text.starts_with("\x1b[1;36mholds\x1b[0m: true"));
    }
}
