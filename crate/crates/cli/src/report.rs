use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub line: usize,
    pub statement: String,
    pub status: Status,
    pub summary: String,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Entry {
    pub fn new(line: usize, statement: String) -> Self {
        Entry {
            line,
            statement,
            status: Status::Pass,
            summary: String::new(),
            witnesses: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn witness(&mut self, label: impl Into<String>, value: impl ToString) {
        self.witnesses.push(Witness {
            label: label.into(),
            value: value.to_string(),
        });
    }

    pub fn fail(&mut self, summary: impl Into<String>) {
        self.status = self.status.max(Status::Fail);
        self.summary = summary.into();
    }

    pub fn error(&mut self, summary: impl Into<String>) {
        self.status = Status::Error;
        self.summary = summary.into();
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub field: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub declarations: Vec<Entry>,
    pub commands: Vec<Entry>,
}

impl Report {
    pub fn parse_failure(message: String) -> Self {
        Report {
            field: None,
            status: Status::Error,
            error: Some(message),
            declarations: Vec::new(),
            commands: Vec::new(),
        }
    }

    pub fn finish(&mut self) {
        self.status = self
            .declarations
            .iter()
            .chain(&self.commands)
            .map(|e| e.status)
            .max()
            .unwrap_or(Status::Pass)
            .max(if self.error.is_some() {
                Status::Error
            } else {
                Status::Pass
            });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn write_entries(f: &mut fmt::Formatter<'_>, title: &str, entries: &[Entry]) -> fmt::Result {
    if entries.is_empty() {
        return Ok(());
    }
    writeln!(f, "{title}")?;
    writeln!(f, "{:>5}  {:<6} statement", "line", "status")?;
    for e in entries {
        writeln!(f, "{:>5}  {:<6} {}", e.line, e.status.to_string(), e.statement)?;
        if !e.summary.is_empty() {
            writeln!(f, "{:>14}{}", "", e.summary)?;
        }
        for w in &e.witnesses {
            writeln!(f, "{:>14}{}: {}", "", w.label, w.value)?;
        }
        if let Some(ms) = e.elapsed_ms {
            writeln!(f, "{:>14}{ms:.1} ms", "")?;
        }
    }
    Ok(())
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(field) = &self.field {
            writeln!(f, "field {field}")?;
        }
        if let Some(e) = &self.error {
            writeln!(f, "error: {e}")?;
        }
        write_entries(f, "declarations", &self.declarations)?;
        write_entries(f, "commands", &self.commands)?;
        let n = self.commands.len();
        let passed = self.commands.iter().filter(|e| e.status == Status::Pass).count();
        writeln!(f, "{}: {passed}/{n} commands passed", self.status)
    }
}
