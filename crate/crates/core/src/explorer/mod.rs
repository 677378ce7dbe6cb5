//! Parameter sweeps over the verifier, probes of the multi-index ratios for
//! arbitrary `j`, and the persistent result cache.

mod cache;
mod conjecture;
mod grid;

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;

pub use cache::{read_entries, witness_digest, CacheEntry, ResultCache};
pub use conjecture::{explore, explore_conjecture_1, explore_conjecture_2, Conjecture, ConjectureRecord};
pub use grid::{Axis, Grid};

use crate::error::{Error, Result};
use crate::verifier::{find_check, run_check, CheckResult, MultiIndexSpec, Params, Status};

/// Default `j` window for conjecture probes: `|j| <= 2m + 2`.
pub const DEFAULT_J_WINDOW: &str = "j=-2m-2..2m+2";

/// A check id (or `conj1`/`conj2`), a grid, an optional point budget and an
/// optional cache file.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub check_id: String,
    pub grid: Grid,
    pub budget: Option<usize>,
    pub cache_path: Option<PathBuf>,
}

impl SweepSpec {
    pub fn new(check_id: &str, grid: &str) -> Result<Self> {
        Ok(Self { check_id: check_id.to_string(), grid: grid.parse()?, budget: None, cache_path: None })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn with_cache(mut self, path: impl Into<PathBuf>) -> Self {
        self.cache_path = Some(path.into());
        self
    }

    fn is_multi_index(&self) -> Result<bool> {
        if Conjecture::from_check_id(&self.check_id).is_some() {
            return Ok(true);
        }
        Ok(find_check(&self.check_id)?.is_multi_index())
    }

    /// Parameter points in sweep order, after budget truncation.
    pub fn points(&self) -> Result<Vec<Params>> {
        let multi = self.is_multi_index()?;
        let mut grid = self.grid.clone();
        if Conjecture::from_check_id(&self.check_id).is_some() && !grid.has_axis("j") {
            grid.push(DEFAULT_J_WINDOW)?;
        }
        let mut points = grid::grid_params(&grid, multi)?;
        if let Some(budget) = self.budget {
            points.truncate(budget);
        }
        Ok(points)
    }

    fn validate(&self) -> Result<()> {
        let names: Vec<&str> = self.grid.axes().iter().map(|a| a.name.as_str()).collect();
        let (accepts, required): (Box<dyn Fn(&str) -> bool>, Vec<&str>) =
            match Conjecture::from_check_id(&self.check_id) {
                Some(_) => (
                    Box::new(|n: &str| ["a", "m", "r", "j"].contains(&n) || grid::n_index(n).is_some()),
                    vec!["a", "r", "n1"],
                ),
                None => {
                    let def = find_check(&self.check_id)?;
                    let mut req: Vec<&str> = def.params.iter().copied().filter(|p| *p != "ns").collect();
                    if def.is_multi_index() {
                        req.push("n1");
                    }
                    (Box::new(move |n: &str| def.accepts(n)), req)
                }
            };
        if let Some(bad) = names.iter().find(|n| !accepts(n)) {
            return Err(Error::UnexpectedParam(format!("{bad} for {}", self.check_id)));
        }
        if let Some(missing) = required.iter().find(|r| !names.contains(r)) {
            return Err(Error::MissingParam(format!("{missing} for {}", self.check_id)));
        }
        Ok(())
    }
}

/// One point, as a result. Domain errors become `DomainSkip`.
pub fn run_point(check_id: &str, params: &Params) -> Result<CheckResult> {
    let started = Instant::now();
    let outcome = match Conjecture::from_check_id(check_id) {
        Some(c) => MultiIndexSpec::from_params(params).map(|spec| conjecture::probe(c, &spec).1),
        None => run_check(check_id, params),
    };
    match outcome {
        Ok(r) => Ok(r),
        Err(Error::Domain(why)) => Ok(CheckResult {
            check_id: check_id.to_string(),
            params: params.clone(),
            status: Status::DomainSkip,
            witness: None,
            detail: Some(why),
            elapsed: started.elapsed(),
        }),
        Err(e) => Err(e),
    }
}

fn entry_for(check_id: &str, result: &CheckResult) -> Result<CacheEntry> {
    if let Some(c) = Conjecture::from_check_id(check_id) {
        if result.status != Status::DomainSkip {
            let spec = MultiIndexSpec::from_params(&result.params)?;
            let record = explore(c, &spec);
            return Ok(record.to_entry(c, result.elapsed));
        }
    }
    Ok(CacheEntry::from_result(result, true))
}

/// One result per grid point in lexicographic order. Cached points are
/// loaded; the rest run in parallel and are appended to the cache.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<CheckResult>> {
    spec.validate()?;
    let points = spec.points()?;
    let cache = spec.cache_path.as_ref().map(ResultCache::open).transpose()?;
    let cached: Vec<Option<CheckResult>> = points
        .iter()
        .map(|p| match cache.as_ref().and_then(|c| c.get(&spec.check_id, p)) {
            Some(entry) => entry.to_result().map(Some),
            None => Ok(None),
        })
        .collect::<Result<_>>()?;
    log::info!(
        "{}: {} points, {} cached",
        spec.check_id,
        points.len(),
        cached.iter().filter(|c| c.is_some()).count()
    );
    points
        .par_iter()
        .zip(cached.into_par_iter())
        .map(|(params, hit)| {
            if let Some(hit) = hit {
                return Ok(hit);
            }
            let result = run_point(&spec.check_id, params)?;
            if let Some(cache) = &cache {
                cache.append(&entry_for(&spec.check_id, &result)?)?;
            }
            Ok(result)
        })
        .collect()
}

/// Conjecture records over a grid, in sweep order, using the cache if given.
/// Points outside `0 <= a <= n_1` are skipped.
pub fn explore_grid(spec: &SweepSpec) -> Result<Vec<ConjectureRecord>> {
    let conjecture = Conjecture::from_check_id(&spec.check_id)
        .ok_or_else(|| Error::UnknownCheckId(format!("{} is not a conjecture probe", spec.check_id)))?;
    spec.validate()?;
    let points = spec.points()?;
    let cache = spec.cache_path.as_ref().map(ResultCache::open).transpose()?;
    let specs: Vec<MultiIndexSpec> = points
        .iter()
        .filter_map(|p| match MultiIndexSpec::from_params(p) {
            Err(Error::Domain(why)) => {
                log::debug!("skipping {p}: {why}");
                None
            }
            other => Some(other),
        })
        .collect::<Result<_>>()?;
    specs
        .par_iter()
        .map(|ms| {
            let params = &ms.to_params();
            if let Some(entry) = cache.as_ref().and_then(|c| c.get(conjecture.check_id(), params)) {
                return ConjectureRecord::from_entry(entry);
            }
            let started = Instant::now();
            let record = explore(conjecture, ms);
            if let Some(cache) = &cache {
                cache.append(&record.to_entry(conjecture, started.elapsed()))?;
            }
            Ok(record)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recover_sweep() {
        let results = sweep(&SweepSpec::new("recover", "n=1..10").unwrap()).unwrap();
        assert_eq!(results.len(), 10);
        assert!(results.iter().all(CheckResult::holds));
        assert_eq!(results[3].params.get("n"), Some(4));
    }

    #[test]
    fn empty_range() {
        assert!(sweep(&SweepSpec::new("recover", "n=5..4").unwrap()).unwrap().is_empty());
    }

    #[test]
    fn validation() {
        assert!(matches!(sweep(&SweepSpec::new("nope", "n=1").unwrap()), Err(Error::UnknownCheckId(_))));
        assert!(matches!(sweep(&SweepSpec::new("recover", "m=1").unwrap()), Err(Error::UnexpectedParam(_))));
        assert!(matches!(sweep(&SweepSpec::new("bnk-power", "n=1,a=0,r=0").unwrap()), Err(Error::MissingParam(_))));
    }

    #[test]
    fn budget_truncates() {
        let spec = SweepSpec::new("q1-bnk", "n=1..6,a=0..n,r=0..1").unwrap().with_budget(5);
        assert_eq!(sweep(&spec).unwrap().len(), 5);
    }

    #[test]
    fn domain_points_are_skipped() {
        let results = sweep(&SweepSpec::new("q1-bnk", "n=0..1,a=0..n,r=0").unwrap()).unwrap();
        assert_eq!(results[0].status, Status::DomainSkip);
        assert!(results[1..].iter().all(CheckResult::holds));
    }

    #[test]
    fn warm_cache_is_identical() {
        let dir = tempfile::tempdir().unwrap();
        let spec = SweepSpec::new("bnk-power", "n=1..3,a=0..n,r=0..1,j=0..2r+1").unwrap().with_cache(dir.path().join("c"));
        let cold = sweep(&spec).unwrap();
        let warm = sweep(&spec).unwrap();
        assert_eq!(cold.len(), warm.len());
        assert!(cold.iter().zip(&warm).all(|(a, b)| a.same_outcome(b)));
    }

    #[test]
    fn conjecture_grid_defaults_j_window() {
        let spec = SweepSpec::new("conj1", "n1=1..2,a=0..1,r=0").unwrap();
        let pts = spec.points().unwrap();
        // m = 1 implied, j from -4 to 4.
        assert_eq!(pts.len(), 2 * 2 * 9);
        let dir = tempfile::tempdir().unwrap();
        let spec = spec.with_cache(dir.path().join("c"));
        let cold = explore_grid(&spec).unwrap();
        let warm = explore_grid(&spec).unwrap();
        assert_eq!(cold, warm);
        assert!(cold.iter().all(|r| !r.contradicts_theorem()));
    }
}
