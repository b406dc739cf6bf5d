use std::fmt::{Display, Write as _};
use std::time::{Duration, Instant};

pub const REPORT_HEADER: &str = "starpack-report v1";
pub const TIMING_SECTION: &str = "[timing]";

/// How a command ended. Each outcome has its own exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    InputError,
    ProvenNegative,
    BudgetExceeded,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::InputError => 1,
            Outcome::ProvenNegative => 2,
            Outcome::BudgetExceeded => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Outcome::Ok => "ok",
            Outcome::InputError => "input-error",
            Outcome::ProvenNegative => "proven-negative",
            Outcome::BudgetExceeded => "budget-exceeded",
        }
    }

    /// The more severe of two outcomes, for multi-step commands.
    pub fn worst(self, other: Outcome) -> Outcome {
        let rank = |o: Outcome| match o {
            Outcome::Ok => 0,
            Outcome::ProvenNegative => 1,
            Outcome::BudgetExceeded => 2,
            Outcome::InputError => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

/// Line-oriented `key=value` report. Everything above the timing section
/// depends only on the command and its inputs.
#[derive(Debug)]
pub struct Report {
    entries: Vec<(String, String)>,
    timings: Vec<(String, Duration)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            entries: vec![("command".into(), command.into())],
            timings: Vec::new(),
        }
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl Display) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .rev()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn time<T>(&mut self, step: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push((step.to_string(), start.elapsed()));
        out
    }

    pub fn render(&self, outcome: Outcome) -> String {
        let mut out = format!("{REPORT_HEADER}\n");
        for (k, v) in &self.entries {
            writeln!(out, "{k}={v}").unwrap();
        }
        writeln!(out, "status={}", outcome.name()).unwrap();
        writeln!(out, "exit={}", outcome.exit_code()).unwrap();
        writeln!(out, "{TIMING_SECTION}").unwrap();
        for (step, d) in &self.timings {
            writeln!(out, "{step}.ms={:.3}", d.as_secs_f64() * 1e3).unwrap();
        }
        out
    }
}

/// The part of a rendered report that excludes timings.
pub fn stable_section(rendered: &str) -> &str {
    match rendered.find(TIMING_SECTION) {
        Some(i) => &rendered[..i],
        None => rendered,
    }
}

/// 1-based, space-separated vertex list.
pub fn vertices(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
