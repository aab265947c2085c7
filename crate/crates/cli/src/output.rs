//! Deterministic machine-readable output.
//!
//! Floats are rendered as the shortest round-trip representation capped at
//! 12 significant digits, locale-independent, so identical invocations
//! produce byte-identical output. JSON objects keep insertion order.

/// Shortest round-trip float, capped at 12 significant digits.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    // round to 12 significant digits when the shortest form is longer
    let y = if sig_digits(&format!("{x}")) <= 12 {
        x
    } else {
        snap12(x)
    };
    // std Display is always positional; switch to scientific where the
    // positional form would degenerate into strings of zeros
    let a = y.abs();
    if a < 1e-5 || a >= 1e16 {
        format!("{y:e}")
    } else {
        format!("{y}")
    }
}

/// Snap a float to 12 significant digits (used to clean accumulated
/// stepping noise in generated grids).
pub fn snap12(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn sig_digits(s: &str) -> usize {
    let mantissa = s.split(['e', 'E']).next().unwrap_or(s);
    let digits: Vec<u8> = mantissa
        .bytes()
        .filter(|b| b.is_ascii_digit())
        .collect();
    let leading_zeros = digits.iter().take_while(|&&b| b == b'0').count();
    digits.len() - leading_zeros
}

/// JSON value with deterministic object ordering.
pub enum Val {
    Str(String),
    Num(f64),
    Int(i64),
    Bool(bool),
    List(Vec<Val>),
    Map(Vec<(String, Val)>),
}

impl Val {
    pub fn s(v: impl Into<String>) -> Val {
        Val::Str(v.into())
    }

    pub fn json(&self) -> String {
        let mut out = String::new();
        self.render(&mut out);
        out
    }

    fn render(&self, out: &mut String) {
        match self {
            Val::Str(s) => {
                out.push('"');
                for c in s.chars() {
                    match c {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        c if (c as u32) < 0x20 => {
                            out.push_str(&format!("\\u{:04x}", c as u32))
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Val::Num(x) => {
                if x.is_finite() {
                    out.push_str(&fmt_f64(*x));
                } else {
                    // JSON has no infinities; quote them
                    out.push('"');
                    out.push_str(&fmt_f64(*x));
                    out.push('"');
                }
            }
            Val::Int(i) => out.push_str(&i.to_string()),
            Val::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Val::List(items) => {
                out.push('[');
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    v.render(out);
                }
                out.push(']');
            }
            Val::Map(pairs) => {
                out.push('{');
                for (i, (k, v)) in pairs.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    Val::s(k.clone()).render(out);
                    out.push(':');
                    v.render(out);
                }
                out.push('}');
            }
        }
    }
}

/// One machine-readable result record.
pub struct OutputRecord {
    pub command: String,
    pub inputs: Vec<(String, Val)>,
    pub result: Val,
    pub diagnostics: Vec<(String, Val)>,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        Val::Map(vec![
            ("command".into(), Val::s(self.command.clone())),
            (
                "inputs".into(),
                Val::Map(
                    self.inputs
                        .iter()
                        .map(|(k, v)| (k.clone(), clone_val(v)))
                        .collect(),
                ),
            ),
            ("result".into(), clone_val(&self.result)),
            (
                "diagnostics".into(),
                Val::Map(
                    self.diagnostics
                        .iter()
                        .map(|(k, v)| (k.clone(), clone_val(v)))
                        .collect(),
                ),
            ),
        ])
        .render(&mut out);
        out
    }
}

fn clone_val(v: &Val) -> Val {
    match v {
        Val::Str(s) => Val::Str(s.clone()),
        Val::Num(x) => Val::Num(*x),
        Val::Int(i) => Val::Int(*i),
        Val::Bool(b) => Val::Bool(*b),
        Val::List(items) => Val::List(items.iter().map(clone_val).collect()),
        Val::Map(pairs) => {
            Val::Map(pairs.iter().map(|(k, v)| (k.clone(), clone_val(v))).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting() {
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(-0.0), "0");
        assert_eq!(fmt_f64(1.0), "1");
        assert_eq!(fmt_f64(0.1), "0.1");
        assert_eq!(fmt_f64(-0.3545096), "-0.3545096");
        // 17 significant digits gets capped to 12
        assert_eq!(fmt_f64(0.4000000000000001), "0.4");
        assert_eq!(fmt_f64(-0.19999999999999998), "-0.2");
        assert_eq!(fmt_f64(0.35450962124039226), "0.35450962124");
        assert_eq!(fmt_f64(f64::INFINITY), "inf");
    }

    #[test]
    fn snapping_cleans_step_noise() {
        let raw = 0.1 + 0.2;
        assert_ne!(raw, 0.3);
        assert_eq!(snap12(raw), 0.3);
        assert_eq!(fmt_f64(raw), "0.3");
    }

    #[test]
    fn tiny_and_huge_magnitudes_use_scientific() {
        assert_eq!(fmt_f64(1.54344459426e-12), "1.54344459426e-12");
        assert_eq!(fmt_f64(1e-300), "1e-300");
        assert_eq!(fmt_f64(2.5e17), "2.5e17");
        assert_eq!(fmt_f64(-3.2e-7), "-3.2e-7");
    }

    #[test]
    fn json_escapes_and_orders() {
        let rec = OutputRecord {
            command: "eval".into(),
            inputs: vec![("x".into(), Val::Num(2.5)), ("s".into(), Val::s("a\"b"))],
            result: Val::Num(1.0),
            diagnostics: vec![("terms".into(), Val::Int(3))],
        };
        assert_eq!(
            rec.to_json(),
            r#"{"command":"eval","inputs":{"x":2.5,"s":"a\"b"},"result":1,"diagnostics":{"terms":3}}"#
        );
    }
}
