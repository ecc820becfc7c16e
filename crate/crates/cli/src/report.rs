use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};

/// A plain-text report with a stable `#` header.
pub struct Report {
    text: String,
}

impl Report {
    pub fn new(command: &str, n: Option<usize>) -> Self {
        let mut text = String::new();
        let _ = writeln!(text, "# ingleton {}", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(text, "# command {command}");
        if let Some(n) = n {
            let _ = writeln!(text, "# n {n}");
        }
        Report { text }
    }

    /// A bare report without header, for outputs that are themselves data files.
    pub fn raw() -> Self {
        Report {
            text: String::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.text, "# {key} {value}");
    }

    pub fn line(&mut self, line: impl std::fmt::Display) {
        let _ = writeln!(self.text, "{line}");
    }

    pub fn push_str(&mut self, s: &str) {
        self.text.push_str(s);
    }

    pub fn finish(self, out: Option<&Path>) -> Result<()> {
        match out {
            Some(path) => {
                fs::write(path, &self.text).with_context(|| format!("writing {}", path.display()))
            }
            None => {
                print!("{}", self.text);
                Ok(())
            }
        }
    }
}

/// Writes `lines` to `dir/name`, creating `dir` if needed.
pub fn emit(dir: &Path, name: &str, lines: &[String]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    let mut body = lines.join("\n");
    if !body.is_empty() {
        body.push('\n');
    }
    fs::write(&path, body).with_context(|| format!("writing {}", path.display()))
}
