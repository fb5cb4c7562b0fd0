use std::fmt;

use crate::linear::Vector;

/// One failing instance of an identity on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// A downstream statement asserted after a check succeeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Consequence {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub consequences: Vec<Consequence>,
}

impl CheckReport {
    pub fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort_by(|a, b| {
            a.indices
                .cmp(&b.indices)
                .then_with(|| a.identity.cmp(&b.identity))
        });
        CheckReport {
            ok: violations.is_empty(),
            violations,
            consequences: Vec::new(),
        }
    }

    pub fn passed() -> Self {
        Self::from_violations(Vec::new())
    }

    /// Merges another report's violations and consequences into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
        self.consequences.extend(other.consequences);
        let v = std::mem::take(&mut self.violations);
        let c = std::mem::take(&mut self.consequences);
        *self = CheckReport::from_violations(v);
        self.consequences = c;
    }

    pub fn consequence(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.consequences.push(Consequence {
            name: name.into(),
            ok,
            detail: detail.into(),
        });
    }

    /// Records a nested report as a single consequence line.
    pub fn consequence_from(&mut self, name: impl Into<String>, report: &CheckReport) {
        let detail = match report.violations.first() {
            Some(v) => format!(
                "{} violation(s), first {} at {:?}",
                report.violations.len(),
                v.identity,
                v.indices
            ),
            None if !report.consequences_ok() => "nested consequence failed".to_string(),
            None => String::new(),
        };
        self.consequence(name, report.ok && report.consequences_ok(), detail);
    }

    pub fn consequences_ok(&self) -> bool {
        self.consequences.iter().all(|c| c.ok)
    }

    pub fn failed_consequences(&self) -> impl Iterator<Item = &Consequence> {
        self.consequences.iter().filter(|c| !c.ok)
    }

    /// Violation tuples without the vectors, for cross-checking two paths.
    pub fn signature(&self) -> Vec<(String, Vec<usize>)> {
        self.violations
            .iter()
            .map(|v| (v.identity.clone(), v.indices.clone()))
            .collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ok: {}", self.ok)?;
        for v in &self.violations {
            writeln!(
                f,
                "  violation {} at {:?}: lhs {:?}, rhs {:?}",
                v.identity, v.indices, v.lhs, v.rhs
            )?;
        }
        for c in &self.consequences {
            let mark = if c.ok { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "  [{mark}] {}", c.name)?;
            } else {
                writeln!(f, "  [{mark}] {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn violation(
    identity: &str,
    indices: Vec<usize>,
    lhs: Vector,
    rhs: Vector,
) -> Violation {
    Violation {
        identity: identity.to_string(),
        indices,
        lhs,
        rhs,
    }
}
