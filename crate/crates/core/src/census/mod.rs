//! Exhaustive verification of the ev/paired uniqueness correspondences over
//! all small trees and connected graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::domination::{spanned_vertices, EvFamily, PairedFamily, Solver};
use crate::error::{Error, Result};
use crate::graph::{emit_graph6, perfect_matchings, EdgeSet, Graph, VertexSet};
use crate::lemma::{check_claim, detangle, detangle_violations, sharing_pairs};

mod generate;

pub use generate::{
    connected_up_to, generate_connected_graphs, generate_trees, known_connected_count,
    known_tree_count, trees_up_to, CONNECTED_COUNTS, CONNECTED_MAX_N, TREE_COUNTS, TREE_MAX_N,
};

pub const REPORT_VERSION: &str = "report-v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `2 * gamma_ev = gamma_pr`.
    Thm1,
    /// Trees: ev-unique iff paired-unique.
    Thm2,
    /// ev-unique implies paired-unique.
    Cor1,
    /// Trees: the unique sets determine each other through spans and
    /// perfect matchings.
    CorGeneral,
    /// Paired-unique iff every minimum ev-set spans the same vertices.
    CorGeneral2,
    /// No three edges of a minimum ev-set form a P4 or a triangle.
    Claim,
    /// Detangle succeeds on every minimum ev-set with a sharing pair.
    Lemma1,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Thm1,
        Check::Thm2,
        Check::Cor1,
        Check::CorGeneral,
        Check::CorGeneral2,
        Check::Claim,
        Check::Lemma1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm1 => "thm1",
            Check::Thm2 => "thm2",
            Check::Cor1 => "cor1",
            Check::CorGeneral => "cor_general",
            Check::CorGeneral2 => "cor_general2",
            Check::Claim => "claim",
            Check::Lemma1 => "lemma1",
        }
    }

    fn needs_paired(self) -> bool {
        !matches!(self, Check::Claim | Check::Lemma1)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown check `{s}`")))
    }
}

/// Parses a comma-separated check list; `all` selects every check.
pub fn parse_checks(list: &str) -> Result<BTreeSet<Check>> {
    let mut out = BTreeSet::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "all" {
            out.extend(Check::ALL);
        } else {
            out.insert(item.parse()?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    NotApplicable,
    Skipped(String),
}

/// A non-failing observation worth reporting, such as a non-tree where
/// the tree equivalence breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub graph6: String,
    pub kind: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct GraphVerification {
    pub verdicts: BTreeMap<Check, Verdict>,
    pub findings: Vec<Finding>,
    pub ev: Option<EvFamily>,
    pub paired: Option<PairedFamily>,
}

impl GraphVerification {
    pub fn failures(&self) -> impl Iterator<Item = (Check, &str)> + '_ {
        self.verdicts.iter().filter_map(|(c, v)| match v {
            Verdict::Fail(why) => Some((*c, why.as_str())),
            _ => None,
        })
    }
}

fn pass_if(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(detail())
    }
}

/// Runs the selected checks on one graph. Solver errors become `Skipped`.
pub fn verify_graph(g: &Graph, checks: &BTreeSet<Check>, solver: &Solver) -> GraphVerification {
    let mut out = GraphVerification::default();
    let graph6 = emit_graph6(g).unwrap_or_default();

    let ev = match solver.solve_ev(g) {
        Ok(family) => family,
        Err(e) => {
            for &c in checks {
                out.verdicts.insert(c, Verdict::Skipped(e.to_string()));
            }
            return out;
        }
    };
    let paired = if checks.iter().any(|c| c.needs_paired()) {
        match solver.solve_pr(g) {
            Ok(family) => Some(family),
            Err(e) => {
                for &c in checks.iter().filter(|c| c.needs_paired()) {
                    out.verdicts.insert(c, Verdict::Skipped(e.to_string()));
                }
                None
            }
        }
    } else {
        None
    };
    let is_tree = g.is_tree();

    for &check in checks {
        if out.verdicts.contains_key(&check) {
            continue;
        }
        let verdict = match (check, &paired) {
            (Check::Claim, _) => claim_verdict(&ev),
            (Check::Lemma1, _) => lemma_verdict(g, &ev, &graph6, &mut out.findings),
            (_, None) => unreachable!("paired family is solved for every check needing it"),
            (Check::Thm1, Some(pr)) => pass_if(2 * ev.gamma == pr.gamma, || {
                format!("2 * gamma_ev = {} but gamma_pr = {}", 2 * ev.gamma, pr.gamma)
            }),
            (Check::Thm2, Some(pr)) => {
                let agree = ev.is_unique() == pr.is_unique();
                if is_tree {
                    pass_if(agree, || uniqueness_detail(&ev, pr))
                } else {
                    if !agree {
                        out.findings.push(Finding {
                            graph6: graph6.clone(),
                            kind: "thm2_probe".into(),
                            detail: uniqueness_detail(&ev, pr),
                        });
                    }
                    Verdict::NotApplicable
                }
            }
            (Check::Cor1, Some(pr)) => pass_if(!ev.is_unique() || pr.is_unique(), || {
                uniqueness_detail(&ev, pr)
            }),
            (Check::CorGeneral, Some(pr)) => {
                if is_tree {
                    cor_general_verdict(g, &ev, pr)
                } else {
                    Verdict::NotApplicable
                }
            }
            (Check::CorGeneral2, Some(pr)) => cor_general2_verdict(&ev, pr),
        };
        out.verdicts.insert(check, verdict);
    }
    out.ev = Some(ev);
    out.paired = paired;
    out
}

fn uniqueness_detail(ev: &EvFamily, pr: &PairedFamily) -> String {
    format!(
        "{} minimum ev-sets, {} minimum paired-dominating sets",
        ev.sets.len(),
        pr.sets.len()
    )
}

fn claim_verdict(ev: &EvFamily) -> Verdict {
    match ev.sets.iter().find(|m| !check_claim(m)) {
        Some(m) => Verdict::Fail(format!("{m} contains a P4 or a triangle")),
        None => Verdict::Pass,
    }
}

fn lemma_verdict(g: &Graph, ev: &EvFamily, graph6: &str, findings: &mut Vec<Finding>) -> Verdict {
    for m in ev.sets.iter().filter(|m| sharing_pairs(m) > 0) {
        let result = match detangle(g, m) {
            Ok(r) => r,
            Err(e) => return Verdict::Fail(format!("detangle({m}) failed: {e}")),
        };
        let mut problems = detangle_violations(g, m, &result);
        if !ev.sets.contains(&result.left) || !ev.sets.contains(&result.right) {
            problems.push("an output is not in the enumerated family".into());
        }
        if !problems.is_empty() {
            return Verdict::Fail(format!("detangle({m}): {}", problems.join("; ")));
        }
        if let Some(step) = result.branch_sharing.iter().position(|(l, r)| l != r) {
            findings.push(Finding {
                graph6: graph6.to_string(),
                kind: "branch_sharing_mismatch".into(),
                detail: format!(
                    "detangle({m}) step {}: left/right sharing pairs {:?}",
                    step + 1,
                    result.branch_sharing[step]
                ),
            });
        }
    }
    Verdict::Pass
}

fn cor_general_verdict(g: &Graph, ev: &EvFamily, pr: &PairedFamily) -> Verdict {
    if pr.is_unique() {
        let d = &pr.sets[0];
        if !ev.is_unique() {
            return Verdict::Fail(format!(
                "unique paired set {d} but {} minimum ev-sets",
                ev.sets.len()
            ));
        }
        let m = &ev.sets[0];
        if spanned_vertices(m) != *d {
            return Verdict::Fail(format!("ev-set {m} does not span {d}"));
        }
        let matchings = match matchings_of(g, d) {
            Ok(ms) => ms,
            Err(e) => return Verdict::Skipped(e.to_string()),
        };
        if matchings != [m.clone()] {
            return Verdict::Fail(format!(
                "G[{d}] has {} perfect matchings, expected exactly {m}",
                matchings.len()
            ));
        }
    }
    if ev.is_unique() {
        let span = spanned_vertices(&ev.sets[0]);
        if pr.sets != [span.clone()] {
            return Verdict::Fail(format!(
                "unique ev-set spans {span} but paired family is {:?}",
                pr.sets
            ));
        }
    }
    Verdict::Pass
}

/// Perfect matchings of `G[d]`, in the ids of `g`.
fn matchings_of(g: &Graph, d: &VertexSet) -> Result<Vec<EdgeSet>> {
    let (induced, map) = g.induced_subgraph(d)?;
    let mut out: Vec<EdgeSet> = perfect_matchings(&induced)?
        .into_iter()
        .map(|m| {
            m.iter()
                .map(|e| crate::graph::Edge::new(map[e.u], map[e.v]))
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

fn cor_general2_verdict(ev: &EvFamily, pr: &PairedFamily) -> Verdict {
    let common = ev.verdict().common_span;
    if pr.is_unique() != common.is_some() {
        return Verdict::Fail(format!(
            "paired-unique = {} but common ev span = {}",
            pr.is_unique(),
            common.map_or("none".to_string(), |s| s.to_string())
        ));
    }
    if let Some(span) = common {
        if span != pr.sets[0] {
            return Verdict::Fail(format!(
                "common ev span {span} differs from paired set {}",
                pr.sets[0]
            ));
        }
    }
    Verdict::Pass
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Trees,
    ConnectedGraphs,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(Family::Trees),
            "graphs" | "connected_graphs" => Ok(Family::ConnectedGraphs),
            _ => Err(Error::Argument(format!("unknown family `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    pub checks: BTreeSet<Check>,
    pub worker_count: usize,
    pub budget: u64,
}

impl CensusConfig {
    pub fn new(family: Family, n_min: usize, n_max: usize) -> Self {
        CensusConfig {
            family,
            n_min,
            n_max,
            checks: Check::ALL.into_iter().collect(),
            worker_count: 1,
            budget: crate::domination::DEFAULT_BUDGET,
        }
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = Check>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn with_workers(mut self, worker_count: usize) -> Self {
        self.worker_count = worker_count;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bound = match self.family {
            Family::Trees => TREE_MAX_N,
            Family::ConnectedGraphs => CONNECTED_MAX_N,
        };
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(Error::Argument(format!(
                "vertex range {}..={} must start at 2 or more and be nonempty",
                self.n_min, self.n_max
            )));
        }
        if self.n_max > bound {
            return Err(Error::Capability(format!(
                "census of {:?} supports n <= {bound}, got {}",
                self.family, self.n_max
            )));
        }
        if self.checks.is_empty() {
            return Err(Error::Argument("no checks selected".into()));
        }
        if self.worker_count == 0 {
            return Err(Error::Argument("worker count must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub check: String,
    pub detail: String,
    pub ev_sets: Vec<EdgeSet>,
    pub paired_sets: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub graph6: String,
    pub check: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRecord {
    pub n: usize,
    pub graphs_examined: usize,
    pub expected_count: Option<usize>,
    pub checks: BTreeMap<Check, Tally>,
    pub counterexamples: Vec<Counterexample>,
    pub skipped: Vec<Skip>,
    pub findings: Vec<Finding>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub graphs_examined: usize,
    pub counterexamples: usize,
    pub skipped: usize,
    pub findings: usize,
    pub all_passed: bool,
}

/// Machine-readable census outcome. Serializes deterministically; wall
/// time is kept out of the document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub version: String,
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    pub checks: Vec<Check>,
    pub budget: u64,
    pub records: Vec<OrderRecord>,
    pub totals: Totals,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CensusReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Argument(format!("invalid report: {e}")))
    }

    pub fn record(&self, n: usize) -> Option<&OrderRecord> {
        self.records.iter().find(|r| r.n == n)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Counterexample> {
        self.records.iter().flat_map(|r| r.counterexamples.iter())
    }

    pub fn findings(&self) -> impl Iterator<Item = &Finding> {
        self.records.iter().flat_map(|r| r.findings.iter())
    }
}

pub fn run_census(config: &CensusConfig) -> Result<CensusReport> {
    config.validate()?;
    let started = Instant::now();
    let levels = match config.family {
        Family::Trees => trees_up_to(config.n_max)?,
        Family::ConnectedGraphs => connected_up_to(config.n_max)?,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.worker_count)
        .build()
        .map_err(|e| Error::Argument(format!("cannot start {} workers: {e}", config.worker_count)))?;
    let solver = Solver::new(config.budget);

    let mut records = Vec::new();
    for n in config.n_min..=config.n_max {
        let graphs = &levels[n - 1];
        // order-preserving collect keeps the report independent of scheduling
        let results: Vec<GraphVerification> = pool.install(|| {
            graphs
                .par_iter()
                .map(|g| verify_graph(g, &config.checks, &solver))
                .collect()
        });
        records.push(aggregate(config, n, graphs, results));
    }

    let totals = Totals {
        graphs_examined: records.iter().map(|r| r.graphs_examined).sum(),
        counterexamples: records.iter().map(|r| r.counterexamples.len()).sum(),
        skipped: records.iter().map(|r| r.skipped.len()).sum(),
        findings: records.iter().map(|r| r.findings.len()).sum(),
        all_passed: records.iter().all(|r| r.counterexamples.is_empty()),
    };
    Ok(CensusReport {
        version: REPORT_VERSION.to_string(),
        family: config.family,
        n_min: config.n_min,
        n_max: config.n_max,
        checks: config.checks.iter().copied().collect(),
        budget: config.budget,
        records,
        totals,
        wall_time: started.elapsed(),
    })
}

fn aggregate(
    config: &CensusConfig,
    n: usize,
    graphs: &[Graph],
    results: Vec<GraphVerification>,
) -> OrderRecord {
    let expected_count = match config.family {
        Family::Trees => known_tree_count(n),
        Family::ConnectedGraphs => known_connected_count(n),
    };
    let mut checks: BTreeMap<Check, Tally> =
        config.checks.iter().map(|&c| (c, Tally::default())).collect();
    let mut counterexamples = Vec::new();
    let mut skipped = Vec::new();
    let mut findings = Vec::new();

    if expected_count.is_some_and(|k| k != graphs.len()) {
        counterexamples.push(Counterexample {
            graph6: String::new(),
            check: "generator_count".into(),
            detail: format!(
                "generated {} classes, expected {}",
                graphs.len(),
                expected_count.unwrap_or_default()
            ),
            ev_sets: Vec::new(),
            paired_sets: Vec::new(),
        });
    }

    for (g, result) in graphs.iter().zip(results) {
        let graph6 = emit_graph6(g).unwrap_or_default();
        for (check, verdict) in &result.verdicts {
            let tally = checks.entry(*check).or_default();
            match verdict {
                Verdict::Pass => tally.pass += 1,
                Verdict::NotApplicable => tally.not_applicable += 1,
                Verdict::Skipped(reason) => {
                    tally.skipped += 1;
                    skipped.push(Skip {
                        graph6: graph6.clone(),
                        check: check.to_string(),
                        reason: reason.clone(),
                    });
                }
                Verdict::Fail(detail) => {
                    tally.fail += 1;
                    counterexamples.push(Counterexample {
                        graph6: graph6.clone(),
                        check: check.to_string(),
                        detail: detail.clone(),
                        ev_sets: result.ev.as_ref().map(|f| f.sets.clone()).unwrap_or_default(),
                        paired_sets: result
                            .paired
                            .as_ref()
                            .map(|f| f.sets.clone())
                            .unwrap_or_default(),
                    });
                }
            }
        }
        findings.extend(result.findings);
    }

    OrderRecord {
        n,
        graphs_examined: graphs.len(),
        expected_count,
        checks,
        counterexamples,
        skipped,
        findings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::pendant_square;

    fn all_checks() -> BTreeSet<Check> {
        Check::ALL.into_iter().collect()
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert_eq!(parse_checks("thm1, cor1").unwrap().len(), 2);
        assert_eq!(parse_checks("all").unwrap().len(), 7);
        assert!(parse_checks("thm9").is_err());
    }

    #[test]
    fn pendant_square_verdicts() {
        let v = verify_graph(&pendant_square(), &all_checks(), &Solver::default());
        assert_eq!(v.verdicts[&Check::Thm1], Verdict::Pass);
        assert_eq!(v.verdicts[&Check::CorGeneral2], Verdict::Pass);
        assert_eq!(v.verdicts[&Check::Thm2], Verdict::NotApplicable);
        assert_eq!(v.verdicts[&Check::CorGeneral], Verdict::NotApplicable);
        assert_eq!(v.failures().count(), 0);
        assert_eq!(v.findings.len(), 1);
        assert_eq!(v.findings[0].kind, "thm2_probe");
    }

    #[test]
    fn short_paths_pass_everything() {
        for n in [3, 4] {
            let v = verify_graph(&Graph::path(n), &all_checks(), &Solver::default());
            assert!(v.verdicts.values().all(|x| *x == Verdict::Pass), "P{n}: {v:?}");
        }
        let p4 = verify_graph(&Graph::path(4), &all_checks(), &Solver::default());
        assert!(p4.ev.unwrap().is_unique() && p4.paired.unwrap().is_unique());
        let p3 = verify_graph(&Graph::path(3), &all_checks(), &Solver::default());
        assert_eq!(p3.ev.unwrap().sets.len(), 2);
        assert_eq!(p3.paired.unwrap().sets.len(), 2);
    }

    #[test]
    fn budget_exhaustion_is_skipped_not_passed() {
        let v = verify_graph(&Graph::path(10), &all_checks(), &Solver::new(2));
        assert!(v.verdicts.values().all(|x| matches!(x, Verdict::Skipped(_))));
    }

    #[test]
    fn config_validation() {
        assert!(CensusConfig::new(Family::Trees, 2, 10).validate().is_ok());
        assert!(CensusConfig::new(Family::Trees, 1, 10).validate().is_err());
        assert!(CensusConfig::new(Family::ConnectedGraphs, 2, 9).validate().is_err());
        assert!(CensusConfig::new(Family::Trees, 2, 5)
            .with_checks([])
            .validate()
            .is_err());
        assert!(CensusConfig::new(Family::Trees, 2, 5)
            .with_workers(0)
            .validate()
            .is_err());
    }

    #[test]
    fn small_tree_census_is_clean() {
        let report = run_census(&CensusConfig::new(Family::Trees, 2, 7)).unwrap();
        let counts: Vec<usize> = report.records.iter().map(|r| r.graphs_examined).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 6, 11]);
        assert!(report.totals.all_passed);
        assert_eq!(report.totals.counterexamples, 0);
        let again = CensusReport::from_json(&report.to_json()).unwrap();
        assert_eq!(again.records, report.records);
    }
}
