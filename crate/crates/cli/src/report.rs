//! Line-oriented reports in two renderings: `key=value` for machines
//! and golden files, aligned prose for people. Key order is insertion
//! order and identical invocations emit identical bytes.

use std::fs;
use std::io::{self, Write};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

enum TextForm {
    /// Render as `key = value` in text mode.
    Auto,
    /// Render as this line in text mode.
    Line(String),
    /// Structured output only.
    Skip,
}

struct Entry {
    key: String,
    value: String,
    text: TextForm,
}

pub struct Report {
    format: Format,
    entries: Vec<Entry>,
}

impl Report {
    pub fn new(format: Format) -> Self {
        Report {
            format,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push(Entry {
            key: key.into(),
            value: value.to_string(),
            text: TextForm::Auto,
        });
    }

    /// Entry with a dedicated human rendering.
    pub fn push_line(
        &mut self,
        key: impl Into<String>,
        value: impl ToString,
        line: impl Into<String>,
    ) {
        self.entries.push(Entry {
            key: key.into(),
            value: value.to_string(),
            text: TextForm::Line(line.into()),
        });
    }

    /// Entry that only appears in structured output.
    pub fn push_detail(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push(Entry {
            key: key.into(),
            value: value.to_string(),
            text: TextForm::Skip,
        });
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match self.format {
                Format::Structured => {
                    out.push_str(&e.key);
                    out.push('=');
                    out.push_str(&e.value);
                    out.push('\n');
                }
                Format::Text => match &e.text {
                    TextForm::Auto => {
                        out.push_str(&e.key);
                        out.push_str(" = ");
                        out.push_str(&e.value);
                        out.push('\n');
                    }
                    TextForm::Line(line) => {
                        out.push_str(line);
                        out.push('\n');
                    }
                    TextForm::Skip => {}
                },
            }
        }
        out
    }

    /// Write to the path when given, stdout otherwise.
    pub fn emit(&self, out_path: Option<&str>) -> io::Result<()> {
        let text = self.render();
        match out_path {
            Some(path) => fs::write(path, text),
            None => io::stdout().write_all(text.as_bytes()),
        }
    }
}

/// Join display items with commas; the uniform list rendering.
pub fn comma_join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    v.join(",")
}
