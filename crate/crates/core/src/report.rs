//! Canonical report trees.
//!
//! A report is a tree of sections holding `key = value` lines, always
//! rendered with sorted keys so two runs of the same job diff cleanly.
//! Timings live in a separate section after a `---` separator and are the
//! only non-deterministic part of the output.

use std::collections::BTreeMap;
use std::fmt::{self, Write};
use std::time::Duration;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Section {
    values: BTreeMap<String, String>,
    children: BTreeMap<String, Section>,
}

impl Section {
    pub fn new() -> Section {
        Section::default()
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Section {
        let text = value.to_string().replace('\n', " ");
        self.values.insert(key.into(), text);
        self
    }

    /// Child section, created on first use.
    pub fn section(&mut self, name: impl Into<String>) -> &mut Section {
        self.children.entry(name.into()).or_default()
    }

    pub fn insert(&mut self, name: impl Into<String>, child: Section) {
        self.children.insert(name.into(), child);
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn child(&self, name: &str) -> Option<&Section> {
        self.children.get(name)
    }

    /// Looks up a dotted path such as `flags.kernel_matches_seven`.
    pub fn lookup(&self, path: &str) -> Option<&str> {
        match path.split_once('.') {
            None => self.get(path),
            Some((head, rest)) => self.children.get(head)?.lookup(rest),
        }
    }

    fn render(&self, out: &mut String, depth: usize, sep: &str) {
        let pad = "  ".repeat(depth);
        for (k, v) in &self.values {
            let _ = writeln!(out, "{pad}{k}{sep}{v}");
        }
        for (name, child) in &self.children {
            if sep == " = " {
                let _ = writeln!(out, "{pad}{name} {{");
                child.render(out, depth + 1, sep);
                let _ = writeln!(out, "{pad}}}");
            } else {
                let _ = writeln!(out, "{pad}{name}:");
                child.render(out, depth + 1, sep);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    kind: String,
    body: Section,
    timings: Vec<(String, Duration)>,
}

impl Report {
    pub fn new(kind: impl Into<String>) -> Report {
        Report {
            kind: kind.into(),
            body: Section::new(),
            timings: Vec::new(),
        }
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn body(&self) -> &Section {
        &self.body
    }

    pub fn body_mut(&mut self) -> &mut Section {
        &mut self.body
    }

    pub fn timing(&mut self, label: impl Into<String>, d: Duration) {
        self.timings.push((label.into(), d));
    }

    pub fn timings(&self) -> &[(String, Duration)] {
        &self.timings
    }

    /// Only the deterministic part of the structured rendering.
    pub fn deterministic(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "report {} {{", self.kind);
        self.body.render(&mut out, 1, " = ");
        out.push_str("}\n");
        out
    }

    pub fn structured(&self) -> String {
        let mut out = self.deterministic();
        if !self.timings.is_empty() {
            out.push_str("---\ntimings {\n");
            for (label, d) in &self.timings {
                let _ = writeln!(out, "  {label} = {:.3}s", d.as_secs_f64());
            }
            out.push_str("}\n");
        }
        out
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.kind);
        self.body.render(&mut out, 1, ": ");
        if !self.timings.is_empty() {
            out.push_str("timings:\n");
            for (label, d) in &self.timings {
                let _ = writeln!(out, "  {label}: {:.3}s", d.as_secs_f64());
            }
        }
        out
    }
}

/// Formats a boolean the way reports spell it.
pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Zero-padded key so numeric rows sort numerically.
pub fn row_key(prefix: &str, n: u64) -> String {
    format!("{prefix}{n:06}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_nested() {
        let mut r = Report::new("demo");
        r.body_mut().set("zeta", 1).set("alpha", "x");
        r.body_mut().section("inner").set("b", true).set("a", false);
        r.timing("step", Duration::from_millis(1500));
        let s = r.structured();
        assert_eq!(
            s,
            "report demo {\n  alpha = x\n  zeta = 1\n  inner {\n    a = false\n    b = true\n  }\n}\n---\ntimings {\n  step = 1.500s\n}\n"
        );
        assert!(s.starts_with(&r.deterministic()));
        assert_eq!(r.body().lookup("inner.b"), Some("true"));
    }

    #[test]
    fn row_keys_sort_numerically() {
        assert!(row_key("p", 7) < row_key("p", 11));
    }
}
