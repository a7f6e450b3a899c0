use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::components::ComponentReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, witness: Option<String>) -> Self {
        Check { name: name.into(), pass, witness }
    }
}

/// The report schema shared by the workflows and the CLI.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub lattice: String,
    pub checks: Vec<Check>,
    pub components: Vec<ComponentReport>,
    /// Seconds per stage; left out unless requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn new(lattice: impl Into<String>) -> Self {
        Report { lattice: lattice.into(), checks: Vec::new(), components: Vec::new(), timings: None }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// Runs `f` and records its wall time under `name`.
    pub(crate) fn timed<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.get_or_insert_with(BTreeMap::new).insert(name.to_string(), start.elapsed().as_secs_f64());
        out
    }
}
