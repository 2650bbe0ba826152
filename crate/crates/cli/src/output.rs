//! Rendering of command results as text, JSON or CSV.

use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{OutputFormat, RunConfig, SCHEMA_VERSION, VERSION};

/// A rectangular table of display strings.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    fn to_text(&self) -> String {
        let cols = self.header.len();
        let mut width = vec![0usize; cols];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |row: &[String]| {
            let cells: Vec<String> = row
                .iter()
                .zip(&width)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            cells.join("  ").trim_end().to_string()
        };
        let mut out = vec![line(&self.header)];
        out.extend(self.rows.iter().map(|r| line(r)));
        out.join("\n")
    }
}

/// What a subcommand hands back for rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub table: Option<Table>,
    /// False turns into exit status 1.
    pub ok: bool,
}

impl Outcome {
    pub fn new(result: impl Serialize, text: impl Into<String>) -> Self {
        Outcome {
            result: serde_json::to_value(result).expect("results serialize to JSON"),
            text: text.into(),
            table: None,
            ok: true,
        }
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

/// The JSON envelope: schema, version, invocation and config around the
/// result.
pub fn envelope(command: &str, args: &[String], config: &RunConfig, outcome: &Outcome) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "version": VERSION,
        "command": command,
        "args": args,
        "config": config,
        "ok": outcome.ok,
        "result": outcome.result,
    })
}

pub fn render(command: &str, args: &[String], config: &RunConfig, outcome: &Outcome) -> String {
    match config.output {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&envelope(command, args, config, outcome))
                .expect("envelope serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(command, args, config, outcome),
        OutputFormat::Text => {
            let mut s = format!("# {}\n", config.summary());
            if !outcome.text.is_empty() {
                s.push_str(outcome.text.trim_end());
                s.push('\n');
            }
            if let Some(t) = &outcome.table {
                s.push_str(&t.to_text());
                s.push('\n');
            }
            s
        }
    }
}

fn render_csv(command: &str, args: &[String], config: &RunConfig, outcome: &Outcome) -> String {
    let meta = json!({
        "schema": SCHEMA_VERSION,
        "version": VERSION,
        "command": command,
        "args": args,
        "config": config,
        "ok": outcome.ok,
    });
    let mut w = csv::Writer::from_writer(Vec::new());
    match &outcome.table {
        Some(t) => {
            w.write_record(&t.header).expect("in-memory write");
            for r in &t.rows {
                w.write_record(r).expect("in-memory write");
            }
        }
        None => {
            w.write_record(["key", "value"]).expect("in-memory write");
            if let Value::Object(map) = &outcome.result {
                for (k, v) in map {
                    let cell = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    w.write_record([k.as_str(), cell.as_str()]).expect("in-memory write");
                }
            }
        }
    }
    let body = String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8");
    format!("# {meta}\n{body}")
}
