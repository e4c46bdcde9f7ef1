use std::fmt;
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};

pub const SCHEMA: u64 = 1;

pub const EXIT_OK: u8 = 0;
pub const EXIT_ASSERTION: u8 = 1;
pub const EXIT_PARAM: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Core(kconn_core::Error),
    Io { path: PathBuf, source: std::io::Error },
    Param(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Core(kconn_core::Error::Capacity { .. }) => EXIT_CAPACITY,
            _ => EXIT_PARAM,
        }
    }

    pub fn kind(&self) -> &'static str {
        use kconn_core::Error as E;
        match self {
            CliError::Core(E::Graph6 { .. }) => "graph6",
            CliError::Core(E::Codec(_)) => "codec",
            CliError::Core(E::Capacity { .. }) => "capacity",
            CliError::Core(E::UndefinedConnectivity(_)) => "undefined_connectivity",
            CliError::Core(_) | CliError::Param(_) => "param",
            CliError::Io { .. } => "io",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut err = Map::new();
        err.insert("kind".into(), self.kind().into());
        err.insert("message".into(), self.to_string().into());
        if let CliError::Core(kconn_core::Error::Capacity { bracket: Some(b), .. }) = self {
            err.insert("bracket".into(), b.clone().into());
        }
        let mut top = Map::new();
        top.insert("schema".into(), SCHEMA.into());
        top.insert("error".into(), Value::Object(err));
        Value::Object(top)
    }

    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Param(msg) => f.write_str(msg),
        }
    }
}

impl From<kconn_core::Error> for CliError {
    fn from(e: kconn_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// A finished command: the JSON document, the table rows shown without
/// `--json`, and the exit code.
pub struct Report {
    fields: Map<String, Value>,
    rows: Vec<(String, String)>,
    plain: Option<String>,
    pub code: u8,
    /// Printed to stderr when the code is nonzero.
    pub note: Option<String>,
}

impl Report {
    pub fn new() -> Self {
        let mut fields = Map::new();
        fields.insert("schema".into(), SCHEMA.into());
        Report { fields, rows: Vec::new(), plain: None, code: EXIT_OK, note: None }
    }

    /// Adds a field to both renderings.
    pub fn field(&mut self, key: &str, value: impl Into<Value>, shown: impl fmt::Display) -> &mut Self {
        self.fields.insert(key.into(), value.into());
        self.rows.push((key.replace('_', " "), shown.to_string()));
        self
    }

    /// Adds a field to the JSON rendering only.
    pub fn json_only(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.into(), value.into());
        self
    }

    /// Replaces the table with a single line of text.
    pub fn plain(&mut self, line: impl Into<String>) -> &mut Self {
        self.plain = Some(line.into());
        self
    }

    pub fn fail(&mut self, code: u8, note: impl Into<String>) -> &mut Self {
        self.code = code;
        self.note = Some(note.into());
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let doc = Value::Object(self.fields.clone());
            return serde_json::to_string_pretty(&doc).expect("JSON values serialise") + "\n";
        }
        if let Some(line) = &self.plain {
            return format!("{line}\n");
        }
        let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        self.rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}
