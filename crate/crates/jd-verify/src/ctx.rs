//! Per-run context: parameter ranges, resource caps and error triage.

use std::fmt::Display;

use jd_enumeration::EnumError;
use jd_lie::LieError;
use jd_operators::OpError;
use jd_spaces::{ideg_bound, SpaceError};

use crate::report::{Case, Params};

/// Why a case could not produce a value.
#[derive(Debug)]
pub enum Problem {
    Resource(String),
    Failed(String),
}

pub type Outcome<T> = Result<T, Problem>;

fn triage(space: Option<&SpaceError>, shown: impl Display) -> Problem {
    match space {
        Some(SpaceError::Bounds { .. }) => Problem::Resource(shown.to_string()),
        _ => Problem::Failed(format!("error: {shown}")),
    }
}

impl From<SpaceError> for Problem {
    fn from(e: SpaceError) -> Self {
        triage(Some(&e), &e)
    }
}

impl From<LieError> for Problem {
    fn from(e: LieError) -> Self {
        let s = match &e {
            LieError::Space(s) => Some(s),
            _ => None,
        };
        triage(s, &e)
    }
}

impl From<OpError> for Problem {
    fn from(e: OpError) -> Self {
        let s = match &e {
            OpError::Space(s) => Some(s),
            _ => None,
        };
        triage(s, &e)
    }
}

impl From<EnumError> for Problem {
    fn from(e: EnumError) -> Self {
        let s = match &e {
            EnumError::Space(s) => Some(s),
            EnumError::Lie(LieError::Space(s)) => Some(s),
            _ => None,
        };
        triage(s, &e)
    }
}

/// How a case touches the diagram modules.
#[derive(Clone, Copy, Debug)]
pub enum Cost {
    /// Presents a whole module of this i-degree.
    Module(usize),
    /// Only reduces individual combinations of this i-degree.
    Terms(usize),
    /// No diagram modules.
    Free,
}

pub struct Ctx<'a> {
    pub params: &'a Params,
}

impl Ctx<'_> {
    /// The genera to run: the requested one, or the suite's defaults.
    pub fn genera(&self, defaults: &[u16]) -> Vec<u16> {
        match self.params.genus {
            Some(g) => vec![g],
            None => defaults.to_vec(),
        }
    }

    /// Whether a degree-parameter value is within the requested bound.
    pub fn degree_ok(&self, d: usize) -> bool {
        self.params.degree.is_none_or(|m| d <= m)
    }

    /// Largest admissible i-degree for a cost class at genus `g`.
    pub fn cap(&self, g: u16, cost: Cost) -> usize {
        let base = match cost {
            Cost::Module(_) => ideg_bound(g),
            Cost::Terms(_) => ideg_bound(g) + 2,
            Cost::Free => usize::MAX,
        };
        self.params.max_ideg.map_or(base, |m| base.min(m))
    }

    /// Runs a case under the caps; the closure yields the computed side.
    pub fn case(&self, id: impl Into<String>, expected: impl Into<String>, g: u16, cost: Cost, f: impl FnOnce() -> Outcome<String>) -> Case {
        let (id, expected) = (id.into(), expected.into());
        let need = match cost {
            Cost::Module(d) | Cost::Terms(d) => d,
            Cost::Free => 0,
        };
        let cap = self.cap(g, cost);
        if need > cap {
            return Case::skipped(id, expected, format!("needs i-degree {need}, cap {cap} at genus {g}"));
        }
        match f() {
            Ok(computed) => Case::compare(id, expected, computed),
            Err(Problem::Resource(r)) => Case::skipped(id, expected, r),
            Err(Problem::Failed(r)) => Case::compare(id, expected, r),
        }
    }

    /// As [`case`](Self::case), for cases whose expected side is itself
    /// computed and may fail.
    pub fn case_with(&self, id: impl Into<String>, g: u16, cost: Cost, f: impl FnOnce() -> Outcome<(String, String)>) -> Case {
        let id = id.into();
        let mut expected = String::from("not computed");
        let c = self.case(id.clone(), "", g, cost, || {
            let (e, c) = f()?;
            expected = e;
            Ok(c)
        });
        match c.status {
            crate::report::Status::SkippedResource => Case::skipped(id, expected, c.computed),
            _ => Case::compare(id, expected, c.computed),
        }
    }
}

/// Tally for exhaustive identity checks: `k of N nonzero (first: …)`.
#[derive(Default)]
pub struct Tally {
    pub total: usize,
    pub bad: usize,
    pub first: Option<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.bad += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    pub fn expected(&self) -> String {
        format!("0 of {} nonzero", self.total)
    }

    pub fn computed(&self) -> String {
        match &self.first {
            None => self.expected(),
            Some(f) => format!("{} of {} nonzero (first: {f})", self.bad, self.total),
        }
    }
}

/// `iso`, `injective`, `surjective` or `neither`.
pub fn hom_kind(h: &jd_abelian::GroupHom) -> &'static str {
    match (h.is_injective(), h.is_surjective()) {
        (true, true) => "iso",
        (true, false) => "injective",
        (false, true) => "surjective",
        (false, false) => "neither",
    }
}
