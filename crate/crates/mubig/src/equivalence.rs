//! Exhaustive comparison of the recognizer with the forbidden catalog over
//! all small connected bipartite graphs, plus the repair pipeline on every
//! graph that has a closed-interval representation.

use std::fs;
use std::io;
use std::path::Path;

use crate::bigraph::Bigraph;
use crate::closed::{min_bad_pair_representation, recognize_interval_closed};
use crate::embed::contains_induced;
use crate::enumerate::connected_bipartite_exact;
use crate::families::{forbidden_catalog_ids, FamilyId};
use crate::par;
use crate::recognize::{recognize_mixed_unit, Budget, Status};
use crate::repair::repair;
use crate::representation::{is_mixed_proper, is_valid};

#[derive(Clone, Debug)]
pub struct GraphReport {
    pub graph: Bigraph,
    pub status: Status,
    pub nodes: u64,
    /// First catalog member found as an induced subgraph.
    pub hit: Option<FamilyId>,
    pub interval: bool,
    /// `None` when repair was not attempted.
    pub repair: Option<Result<usize, String>>,
}

impl GraphReport {
    /// Recognizer and catalog agree: SAT exactly for interval bigraphs
    /// containing no catalog member.
    pub fn agrees(&self) -> bool {
        match self.status {
            Status::Sat => self.interval && self.hit.is_none(),
            Status::Unsat => !self.interval || self.hit.is_some(),
            Status::BudgetExceeded => false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LevelSummary {
    pub n: usize,
    pub graphs: usize,
    pub sat: usize,
    pub unsat: usize,
    pub budget: usize,
    /// Graphs that are not interval bigraphs.
    pub non_interval: usize,
    /// Non-interval graphs with no catalog member inside.
    pub non_interval_clean: usize,
    pub disagreements: usize,
    pub repaired: usize,
    pub repair_failures: usize,
}

impl LevelSummary {
    fn to_line(&self) -> String {
        format!(
            "{} {} {} {} {} {} {} {} {} {}",
            self.n,
            self.graphs,
            self.sat,
            self.unsat,
            self.budget,
            self.non_interval,
            self.non_interval_clean,
            self.disagreements,
            self.repaired,
            self.repair_failures
        )
    }

    fn from_line(line: &str) -> Option<LevelSummary> {
        let v: Vec<usize> = line.split_whitespace().map(|t| t.parse().ok()).collect::<Option<_>>()?;
        let [n, graphs, sat, unsat, budget, non_interval, non_interval_clean, disagreements, repaired, repair_failures] =
            v[..]
        else {
            return None;
        };
        Some(LevelSummary {
            n,
            graphs,
            sat,
            unsat,
            budget,
            non_interval,
            non_interval_clean,
            disagreements,
            repaired,
            repair_failures,
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct EquivalenceSummary {
    pub levels: Vec<LevelSummary>,
    /// Reports for disagreements and repair failures, in enumeration order.
    pub problems: Vec<GraphReport>,
}

impl EquivalenceSummary {
    pub fn total(&self, f: impl Fn(&LevelSummary) -> usize) -> usize {
        self.levels.iter().map(f).sum()
    }
}

pub struct EquivalenceOptions<'a> {
    pub max_n: usize,
    pub budget: Budget,
    pub repair: bool,
    /// Completed vertex counts are read from and appended to this file.
    pub checkpoint: Option<&'a Path>,
}

/// Checks one graph against the catalog.
pub fn check_graph(g: &Bigraph, catalog: &[(FamilyId, Bigraph)], budget: &Budget, run_repair: bool) -> GraphReport {
    let out = recognize_mixed_unit(g, budget, true);
    let hit = catalog.iter().find(|(_, h)| h.n() <= g.n() && contains_induced(g, h)).map(|(id, _)| *id);
    let interval = recognize_interval_closed(g).expect("desk-scale graph").is_some();
    let repair = (run_repair && interval && out.status == Status::Sat).then(|| {
        let rep = min_bad_pair_representation(g).expect("desk-scale graph").expect("interval bigraph");
        match repair(g, &rep, false) {
            Ok(r) if is_valid(g, &r.rep) && is_mixed_proper(&r.rep) => Ok(r.iterations),
            Ok(_) => Err("output not valid and mixed proper".to_string()),
            Err(f) => Err(f.to_string()),
        }
    });
    GraphReport { graph: g.clone(), status: out.status, nodes: out.stats.nodes, hit, interval, repair }
}

fn read_checkpoint(path: &Path) -> io::Result<Vec<LevelSummary>> {
    match fs::read_to_string(path) {
        Ok(s) => Ok(s.lines().filter_map(LevelSummary::from_line).collect()),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Vec::new()),
        Err(e) => Err(e),
    }
}

/// Runs every vertex count up to `max_n`, resuming from the checkpoint.
/// Problems are only collected for counts computed in this call.
pub fn run_equivalence(
    opts: &EquivalenceOptions,
    mut progress: impl FnMut(&LevelSummary),
) -> io::Result<EquivalenceSummary> {
    let catalog = forbidden_catalog_ids(opts.max_n);
    let mut summary = EquivalenceSummary::default();
    let done = match opts.checkpoint {
        Some(p) => read_checkpoint(p)?,
        None => Vec::new(),
    };
    for n in 1..=opts.max_n {
        if let Some(l) = done.iter().find(|l| l.n == n) {
            progress(l);
            summary.levels.push(l.clone());
            continue;
        }
        let graphs = connected_bipartite_exact(n);
        let reports = par::map(&graphs, |g| check_graph(g, &catalog, &opts.budget, opts.repair));
        let mut level = LevelSummary { n, graphs: graphs.len(), ..Default::default() };
        for r in reports {
            match r.status {
                Status::Sat => level.sat += 1,
                Status::Unsat => level.unsat += 1,
                Status::BudgetExceeded => level.budget += 1,
            }
            if !r.interval {
                level.non_interval += 1;
                if r.hit.is_none() {
                    level.non_interval_clean += 1;
                }
            }
            let mut problem = !r.agrees();
            if !r.agrees() {
                level.disagreements += 1;
            }
            match &r.repair {
                Some(Ok(_)) => level.repaired += 1,
                Some(Err(_)) => {
                    level.repair_failures += 1;
                    problem = true;
                }
                None => {}
            }
            if problem {
                summary.problems.push(r);
            }
        }
        if let Some(p) = opts.checkpoint {
            let mut text = fs::read_to_string(p).unwrap_or_default();
            text.push_str(&level.to_line());
            text.push('\n');
            fs::write(p, text)?;
        }
        progress(&level);
        summary.levels.push(level);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels_agree() {
        let opts = EquivalenceOptions { max_n: 5, budget: Budget::unlimited(), repair: true, checkpoint: None };
        let s = run_equivalence(&opts, |_| {}).unwrap();
        assert_eq!(s.total(|l| l.graphs), 1 + 1 + 1 + 3 + 5);
        assert_eq!(s.total(|l| l.disagreements), 0);
        assert_eq!(s.total(|l| l.repair_failures), 0);
    }

    #[test]
    fn summary_lines_round_trip() {
        let l = LevelSummary { n: 4, graphs: 3, sat: 3, repaired: 3, ..Default::default() };
        assert_eq!(LevelSummary::from_line(&l.to_line()), Some(l));
    }
}
