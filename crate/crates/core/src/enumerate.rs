//! Bounded depth-first search over intersection arrays of a fixed diameter.
//!
//! The search binds `k`, then `b_1`, then `c_2, b_2, c_3, b_3, ...` up to
//! `c_D`. Generation ranges already enforce `k > b_1 >= b_2 >= ...` and
//! `1 = c_1 <= c_2 <= ...`. Inner nodes are cut by the parts of R0 and R3 that
//! the bound prefix decides, and by every filter conjunct whose variables are
//! all bound. Complete arrays run the selected rules, integer ones first.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebraic::Precision;
use crate::array::IntersectionArray;
use crate::exceptions::match_exception;
use crate::filter::{Filter, FilterError, Var};
use crate::params::Params;
use crate::rules::{evaluate_with, first_violation, Assumption, RuleId, RuleReport, RuleSet};

/// Hard limits that keep a search at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub k_max: u32,
    pub diameter: usize,
    /// Search-tree nodes visited before the search gives up.
    pub nodes: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            k_max: 64,
            diameter: 12,
            nodes: 100_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub diameter: usize,
    /// Smallest valency searched. Defaults to 3: valency 2 gives polygons,
    /// which the classification statements exclude.
    pub k_min: u32,
    pub k_max: u32,
    pub filter: Filter,
    pub assumption: Assumption,
    pub rules: RuleSet,
    pub precision: Precision,
    pub caps: Caps,
}

impl SearchSpec {
    pub fn new(diameter: usize, k_max: u32) -> SearchSpec {
        SearchSpec {
            diameter,
            k_min: 3,
            k_max,
            filter: Filter::default(),
            assumption: Assumption::None,
            rules: RuleSet::all(),
            precision: Precision::default(),
            caps: Caps::default(),
        }
    }

    pub fn with_filter(mut self, src: &str) -> Result<SearchSpec, FilterError> {
        self.filter = Filter::parse(src)?;
        Ok(self)
    }

    pub fn with_rules(mut self, rules: RuleSet) -> SearchSpec {
        self.rules = rules;
        self
    }

    pub fn with_assumption(mut self, assumption: Assumption) -> SearchSpec {
        self.assumption = assumption;
        self
    }

    pub fn with_k_min(mut self, k_min: u32) -> SearchSpec {
        self.k_min = k_min;
        self
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.diameter == 0 || self.diameter > self.caps.diameter {
            return Err(SearchError::DiameterOutOfRange {
                diameter: self.diameter,
                cap: self.caps.diameter,
            });
        }
        if self.k_max > self.caps.k_max {
            return Err(SearchError::ValencyCapExceeded {
                k_max: self.k_max,
                cap: self.caps.k_max,
            });
        }
        self.filter.check_diameter(self.diameter)?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    DiameterOutOfRange { diameter: usize, cap: usize },
    ValencyCapExceeded { k_max: u32, cap: u32 },
    BudgetExceeded { nodes: u64 },
    Filter(FilterError),
}

impl From<FilterError> for SearchError {
    fn from(e: FilterError) -> Self {
        SearchError::Filter(e)
    }
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::DiameterOutOfRange { diameter, cap } => {
                write!(f, "diameter {diameter} is outside 1..={cap}")
            }
            SearchError::ValencyCapExceeded { k_max, cap } => write!(f, "max valency {k_max} exceeds the cap {cap}"),
            SearchError::BudgetExceeded { nodes } => write!(f, "search aborted after {nodes} nodes (budget exhausted)"),
            SearchError::Filter(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for SearchError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Survivor {
    pub array: IntersectionArray,
    pub report: RuleReport,
    /// Named family or sporadic array the survivor matches, if any.
    pub exception: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Sorted by the array ordering.
    pub survivors: Vec<Survivor>,
    /// For each selected rule, the subtrees (inner nodes or complete arrays)
    /// it removed first.
    pub pruned: Vec<(RuleId, u64)>,
    pub pruned_by_filter: u64,
    pub nodes: u64,
    /// Complete arrays reached.
    pub leaves: u64,
}

impl SearchResult {
    pub fn pruned_by(&self, id: RuleId) -> u64 {
        self.pruned.iter().find(|(r, _)| *r == id).map_or(0, |(_, n)| *n)
    }

    /// One line per survivor, canonical text form.
    pub fn survivor_lines(&self) -> String {
        self.survivors.iter().map(|s| format!("{}\n", s.array)).collect()
    }
}

/// A progress snapshot handed to the callback every 10^6 nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progress {
    pub nodes: u64,
    pub k: u32,
    pub survivors: usize,
}

pub const PROGRESS_INTERVAL: u64 = 1_000_000;

pub fn enumerate(spec: &SearchSpec) -> Result<SearchResult, SearchError> {
    run(spec, true, &mut |_| {})
}

pub fn enumerate_with_progress(
    spec: &SearchSpec,
    progress: &mut dyn FnMut(Progress),
) -> Result<SearchResult, SearchError> {
    run(spec, true, progress)
}

/// The same generation space with no inner pruning: every complete array is
/// judged by the filter and the full rule set. Only useful as a reference.
pub fn enumerate_exhaustive(spec: &SearchSpec) -> Result<SearchResult, SearchError> {
    run(spec, false, &mut |_| {})
}

fn run(spec: &SearchSpec, incremental: bool, progress: &mut dyn FnMut(Progress)) -> Result<SearchResult, SearchError> {
    spec.validate()?;
    let d = spec.diameter;
    let mut search = Search {
        spec,
        incremental,
        check_r0: incremental && spec.rules.contains(RuleId::R0),
        check_r3: incremental && spec.rules.contains(RuleId::R3),
        filter_steps: (0..spec.filter.len())
            .map(|i| spec.filter.vars(i).iter().map(|&v| bind_step(v, d)).max().unwrap_or(0))
            .collect(),
        progress,
        k: 0,
        b: vec![0; d + 1],
        c: vec![0; d + 1],
        kdist: vec![0; d + 1],
        survivors: Vec::new(),
        pruned: spec.rules.iter().map(|r| (r, 0)).collect(),
        pruned_by_filter: 0,
        nodes: 0,
        leaves: 0,
    };
    for k in spec.k_min.max(2)..=spec.k_max {
        search.root(k)?;
    }
    let mut survivors = search.survivors;
    survivors.sort_by(|x, y| x.array.cmp(&y.array));
    Ok(SearchResult {
        survivors,
        pruned: search.pruned,
        pruned_by_filter: search.pruned_by_filter,
        nodes: search.nodes,
        leaves: search.leaves,
    })
}

/// Binding steps: 0 is the root (`k`, `D`, `b_0`, `c_0`, `c_1`, `a_0`), then
/// `b_1`, `c_2`, `b_2`, ..., `b_{D-1}`, `c_D`.
fn bind_step(v: Var, d: usize) -> usize {
    let b_step = |i: usize| if i == 0 { 0 } else { 2 * i - 1 };
    let c_step = |i: usize| if i <= 1 { 0 } else { 2 * i - 2 };
    match v {
        Var::K | Var::D => 0,
        Var::B(i) => b_step(i),
        Var::C(i) => c_step(i),
        Var::A(i) if i < d => b_step(i).max(c_step(i)),
        Var::A(i) => c_step(i),
    }
}

struct Search<'a> {
    spec: &'a SearchSpec,
    incremental: bool,
    check_r0: bool,
    check_r3: bool,
    filter_steps: Vec<usize>,
    progress: &'a mut dyn FnMut(Progress),
    k: u32,
    /// `b[0..D]`, with `b[D] = 0`.
    b: Vec<u32>,
    /// `c[0..=D]`, with `c[0] = 0`.
    c: Vec<u32>,
    /// Integral `k_i` of the bound prefix; maintained only when R0 prunes.
    kdist: Vec<u128>,
    survivors: Vec<Survivor>,
    pruned: Vec<(RuleId, u64)>,
    pruned_by_filter: u64,
    nodes: u64,
    leaves: u64,
}

impl Search<'_> {
    fn d(&self) -> usize {
        self.spec.diameter
    }

    fn count(&mut self, id: RuleId) {
        if let Some(slot) = self.pruned.iter_mut().find(|(r, _)| *r == id) {
            slot.1 += 1;
        }
    }

    fn visit(&mut self) -> Result<(), SearchError> {
        self.nodes += 1;
        if self.nodes > self.spec.caps.nodes {
            return Err(SearchError::BudgetExceeded {
                nodes: self.spec.caps.nodes,
            });
        }
        if self.nodes.is_multiple_of(PROGRESS_INTERVAL) {
            (self.progress)(Progress {
                nodes: self.nodes,
                k: self.k,
                survivors: self.survivors.len(),
            });
        }
        Ok(())
    }

    fn value(&self, v: Var) -> i128 {
        let d = self.d();
        match v {
            Var::K => self.k.into(),
            Var::D => d as i128,
            Var::B(i) => self.b[i].into(),
            Var::C(i) => self.c[i].into(),
            Var::A(i) => i128::from(self.k) - i128::from(self.b[i]) - i128::from(self.c[i]),
        }
    }

    /// Filter conjuncts that become decidable at `step`.
    fn filter_ok(&mut self, step: usize) -> Result<bool, SearchError> {
        for i in 0..self.filter_steps.len() {
            if self.filter_steps[i] == step && !self.spec.filter.eval_conjunct(i, &|v| self.value(v))? {
                self.pruned_by_filter += 1;
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn root(&mut self, k: u32) -> Result<(), SearchError> {
        self.k = k;
        self.b[0] = k;
        self.c[0] = 0;
        self.c[1] = 1;
        self.kdist[0] = 1;
        self.kdist[1] = k.into();
        self.visit()?;
        if self.incremental && !self.filter_ok(0)? {
            return Ok(());
        }
        self.choose_b(1)
    }

    /// Binds `b_i` (`1 <= i < D`), or completes the array when `i = D`.
    fn choose_b(&mut self, i: usize) -> Result<(), SearchError> {
        let d = self.d();
        if i == d {
            return self.leaf();
        }
        let hi = if i == 1 { self.k - 1 } else { self.b[i - 1] };
        for bi in (1..=hi).rev() {
            self.b[i] = bi;
            self.visit()?;
            if self.incremental && !self.b_ok(i)? {
                continue;
            }
            self.choose_c(i + 1)?;
        }
        Ok(())
    }

    fn b_ok(&mut self, i: usize) -> Result<bool, SearchError> {
        let d = self.d();
        let a = i64::from(self.k) - i64::from(self.b[i]) - i64::from(self.c[i]);
        if self.check_r0 && a < 0 {
            self.count(RuleId::R0);
            return Ok(false);
        }
        if self.check_r3 && (1..=i.min(d - i)).any(|j| self.b[i] < self.c[j]) {
            self.count(RuleId::R3);
            return Ok(false);
        }
        self.filter_ok(2 * i - 1)
    }

    /// Binds `c_i` (`2 <= i <= D`).
    fn choose_c(&mut self, i: usize) -> Result<(), SearchError> {
        for ci in self.c[i - 1]..=self.k {
            self.c[i] = ci;
            self.visit()?;
            if self.incremental && !self.c_ok(i)? {
                continue;
            }
            self.choose_b(i)?;
        }
        Ok(())
    }

    fn c_ok(&mut self, i: usize) -> Result<bool, SearchError> {
        let d = self.d();
        if self.check_r0 {
            let num = self.kdist[i - 1] * u128::from(self.b[i - 1]);
            if !num.is_multiple_of(u128::from(self.c[i])) {
                self.count(RuleId::R0);
                return Ok(false);
            }
            self.kdist[i] = num / u128::from(self.c[i]);
        }
        if self.check_r3 && (0..i.min(d - i + 1)).any(|j| self.b[j] < self.c[i]) {
            self.count(RuleId::R3);
            return Ok(false);
        }
        self.filter_ok(2 * i - 2)
    }

    fn leaf(&mut self) -> Result<(), SearchError> {
        self.leaves += 1;
        let d = self.d();
        if !self.incremental && !self.spec.filter.eval(&|v| self.value(v))? {
            self.pruned_by_filter += 1;
            return Ok(());
        }
        let array = IntersectionArray::new(self.b[..d].to_vec(), self.c[1..].to_vec())
            .expect("generated arrays are well formed");
        let params = Params::new(&array);
        let spec = self.spec;
        if let Some(id) = first_violation(&params, spec.assumption, spec.rules, spec.precision) {
            self.count(id);
            return Ok(());
        }
        let report = evaluate_with(&params, spec.assumption, spec.rules, spec.precision);
        self.survivors.push(Survivor {
            exception: match_exception(&array),
            array,
            report,
        });
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bind_steps() {
        assert_eq!(bind_step(Var::K, 4), 0);
        assert_eq!(bind_step(Var::C(1), 4), 0);
        assert_eq!(bind_step(Var::B(1), 4), 1);
        assert_eq!(bind_step(Var::C(2), 4), 2);
        assert_eq!(bind_step(Var::A(2), 4), 3);
        assert_eq!(bind_step(Var::A(1), 4), 1);
        assert_eq!(bind_step(Var::A(4), 4), 6);
        assert_eq!(bind_step(Var::C(4), 4), 6);
    }

    #[test]
    fn diameter_two_small() {
        let spec = SearchSpec::new(2, 5);
        let r = enumerate(&spec).unwrap();
        let lines = r.survivor_lines();
        // Petersen, K_{3,3}, octahedron, 3x3 rook's graph, K_{4,4}, C5 complement's relatives...
        for expect in ["{3,2;1,1}", "{3,2;1,3}", "{4,1;1,4}", "{4,2;1,2}"] {
            assert!(lines.lines().any(|l| l == expect), "{expect} missing from\n{lines}");
        }
        assert_eq!(
            r.survivor_lines(),
            enumerate_exhaustive(&spec).unwrap().survivor_lines()
        );
    }

    #[test]
    fn filter_prunes() {
        let spec = SearchSpec::new(3, 6).with_filter("c2 >= 2").unwrap();
        let r = enumerate(&spec).unwrap();
        assert!(r.survivors.iter().all(|s| s.array.c(2) >= 2));
        assert!(r.pruned_by_filter > 0);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate(&SearchSpec::new(13, 4)),
            Err(SearchError::DiameterOutOfRange { .. })
        ));
        assert!(matches!(
            enumerate(&SearchSpec::new(3, 65)),
            Err(SearchError::ValencyCapExceeded { .. })
        ));
        let mut tight = SearchSpec::new(4, 10);
        tight.caps.nodes = 100;
        assert_eq!(enumerate(&tight), Err(SearchError::BudgetExceeded { nodes: 100 }));
        let bad = SearchSpec::new(3, 4).with_filter("c4 > 1").unwrap();
        assert!(matches!(enumerate(&bad), Err(SearchError::Filter(_))));
    }
}
