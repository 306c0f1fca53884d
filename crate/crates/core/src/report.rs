//! Line-structured run reports: a header line followed by one JSON object
//! per result.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub const SCHEMA_VERSION: &str = "ckform-report/1";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("report is empty")]
    Empty,
    #[error("line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
    #[error("unsupported schema version `{0}`")]
    Schema(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct Header {
    schema_version: String,
    command: String,
    inputs: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub results: Vec<Value>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> Self {
        Self { schema_version: SCHEMA_VERSION.into(), command: command.into(), inputs, results: Vec::new() }
    }

    pub fn push<T: Serialize>(&mut self, result: &T) {
        self.results.push(serde_json::to_value(result).expect("report values serialize"));
    }

    pub fn to_lines(&self) -> String {
        let header = Header {
            schema_version: self.schema_version.clone(),
            command: self.command.clone(),
            inputs: self.inputs.clone(),
        };
        let mut out = serde_json::to_string(&header).expect("header serializes");
        out.push('\n');
        for r in &self.results {
            out.push_str(&serde_json::to_string(r).expect("value serializes"));
            out.push('\n');
        }
        out
    }

    pub fn from_lines(text: &str) -> Result<Self, ReportError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(ReportError::Empty)?;
        let header: Header = serde_json::from_str(first).map_err(|source| ReportError::Json { line: 1, source })?;
        if header.schema_version != SCHEMA_VERSION {
            return Err(ReportError::Schema(header.schema_version));
        }
        let results = lines
            .map(|(i, l)| serde_json::from_str(l).map_err(|source| ReportError::Json { line: i + 1, source }))
            .collect::<Result<_, _>>()?;
        Ok(Self { schema_version: header.schema_version, command: header.command, inputs: header.inputs, results })
    }
}
