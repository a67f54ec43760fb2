use bertini_core::{SeedPoly, TriPoly};
use serde_json::{json, Map, Value};

/// Terms in graded-lex descending order; coefficients as exact decimal strings.
pub fn form_json(f: &TriPoly) -> Value {
    Value::Array(
        f.terms_desc()
            .map(|(m, c)| json!({ "e": m.0, "c": c.to_string() }))
            .collect(),
    )
}

pub fn seed_json(seed: &SeedPoly) -> Value {
    json!({
        "coefficients": seed.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "polynomial": seed.to_string(),
    })
}

/// One run's output; rendered canonically as JSON or as `key = value` lines.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub seed: Option<SeedPoly>,
    /// `u, v, w, Q` when computed.
    pub forms: Option<[TriPoly; 4]>,
    pub checks: Map<String, Value>,
    pub witnesses: Map<String, Value>,
}

const FORM_NAMES: [&str; 4] = ["u", "v", "w", "Q"];

impl Report {
    pub fn new(command: &'static str, seed: Option<SeedPoly>) -> Self {
        Self {
            command,
            seed,
            forms: None,
            checks: Map::new(),
            witnesses: Map::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        let forms = self.forms.as_ref().map_or(Value::Null, |fs| {
            Value::Object(
                FORM_NAMES
                    .iter()
                    .zip(fs)
                    .map(|(n, f)| ((*n).to_owned(), form_json(f)))
                    .collect(),
            )
        });
        json!({
            "command": self.command,
            "seed": self.seed.as_ref().map_or(Value::Null, seed_json),
            "forms": forms,
            "checks": Value::Object(self.checks.clone()),
            "witnesses": Value::Object(self.witnesses.clone()),
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut lines = vec![format!("command = {}", self.command)];
        match &self.seed {
            Some(seed) => {
                lines.push(format!("seed = {seed}"));
                let coeffs: Vec<String> = seed
                    .coefficients()
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                lines.push(format!("seed.coefficients = {}", coeffs.join(",")));
            }
            None => lines.push("seed = null".to_owned()),
        }
        if let Some(fs) = &self.forms {
            for (n, f) in FORM_NAMES.iter().zip(fs) {
                lines.push(format!("forms.{n} = {f}"));
            }
        }
        flatten("checks", &Value::Object(self.checks.clone()), &mut lines);
        flatten(
            "witnesses",
            &Value::Object(self.witnesses.clone()),
            &mut lines,
        );
        let mut s = lines.join("\n");
        s.push('\n');
        s
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".to_owned()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(scalar_text)
            .collect::<Option<Vec<_>>>()
            .map(|parts| format!("[{}]", parts.join(", "))),
        Value::Object(_) => None,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    if let Some(text) = scalar_text(v) {
        out.push(format!("{prefix} = {text}"));
        return;
    }
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&format!("{prefix}.{k}"), child, out);
            }
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), child, out);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
