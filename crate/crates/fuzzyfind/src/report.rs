//! Line-oriented `key=value` run reports.
//!
//! Every command and long-running operation emits one of these: the first
//! line names the command, each following line is a single `key=value`
//! pair. The format is diffable in CI and trivially parseable; field
//! names are part of the stable interface.

use std::fmt;
use std::time::Duration;

/// An ordered list of `key=value` fields under a command name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    command: String,
    fields: Vec<(String, String)>,
}

impl RunReport {
    /// Start a report for `command`.
    pub fn new(command: impl Into<String>) -> Self {
        Self { command: command.into(), fields: Vec::new() }
    }

    /// Append a field. Keys should be lowercase snake_case and stable.
    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    /// Append a float field with fixed 4-decimal formatting.
    pub fn push_f64(&mut self, key: impl Into<String>, value: f64) -> &mut Self {
        self.fields.push((key.into(), format!("{value:.4}")));
        self
    }

    /// Append a duration as integer milliseconds under `<key>_ms`.
    pub fn push_duration(&mut self, key: &str, value: Duration) -> &mut Self {
        self.fields.push((format!("{key}_ms"), value.as_millis().to_string()));
        self
    }

    /// The field value for `key`, if present.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Print to stdout.
    pub fn print(&self) {
        print!("{self}");
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command={}", self.command)?;
        for (key, value) in &self.fields {
            writeln!(f, "{key}={value}")?;
        }
        Ok(())
    }
}
