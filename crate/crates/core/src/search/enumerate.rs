use std::path::PathBuf;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::axioms;
use crate::error::{Error, Result};
use crate::substructure::has_nontrivial_subloop;
use crate::table::CayleyTable;

use super::canonical::{is_canonical, row_cycle_type};

pub const MAX_SEARCH_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraints {
    pub invertible: bool,
    pub nafil: bool,
    pub abelian: bool,
    pub plain: bool,
    pub composite: bool,
}

impl Constraints {
    pub fn describe(&self) -> String {
        let names: Vec<&str> = [
            (self.invertible, "invertible"),
            (self.nafil, "nafil"),
            (self.abelian, "abelian"),
            (self.plain, "plain"),
            (self.composite, "composite"),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, name)| *name)
        .collect();
        if names.is_empty() {
            "loops".to_string()
        } else {
            names.join(", ")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Count,
    /// Keep the representatives in memory.
    Collect,
    /// Write one `.tbl` per representative plus `manifest.json` into a directory.
    Emit(PathBuf),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    #[default]
    RowMajor,
    MostConstrained,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub order: usize,
    pub constraints: Constraints,
    pub mode: SearchMode,
    pub job_count: usize,
    pub strategy: Strategy,
    /// When false every reduced table (identity 1) is counted, not one per
    /// isomorphism class.
    pub isomorph_rejection: bool,
}

impl SearchSpec {
    pub fn new(order: usize, constraints: Constraints) -> Self {
        SearchSpec {
            order,
            constraints,
            mode: SearchMode::Count,
            job_count: 1,
            strategy: Strategy::RowMajor,
            isomorph_rejection: true,
        }
    }

    pub fn with_mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.job_count = jobs;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn labeled(mut self) -> Self {
        self.isomorph_rejection = false;
        self
    }

    /// Checks the spec; `nafil` switches on `invertible`.
    pub fn validated(&self) -> Result<SearchSpec> {
        if self.order == 0 || self.order > MAX_SEARCH_ORDER {
            return Err(Error::UnsupportedOrder(self.order));
        }
        if self.constraints.plain && self.constraints.composite {
            return Err(Error::InvalidSearchSpec(
                "plain and composite are mutually exclusive".into(),
            ));
        }
        if self.job_count == 0 {
            return Err(Error::InvalidSearchSpec(
                "job count must be positive".into(),
            ));
        }
        let mut spec = self.clone();
        if spec.constraints.nafil {
            spec.constraints.invertible = true;
        }
        Ok(spec)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusResult {
    pub order: usize,
    pub constraints: Constraints,
    pub isomorph_rejection: bool,
    /// Isomorphism classes found, or reduced tables when rejection is off.
    pub count: u64,
    /// Sorted canonical representatives, unless counting only.
    pub representatives: Option<Vec<CayleyTable>>,
    pub wall_time: Duration,
}

const EMPTY: u8 = u8::MAX;

#[derive(Clone)]
struct State {
    cells: [u8; 64],
    row_used: [u16; 8],
    col_used: [u16; 8],
    row_missing: [u8; 8],
    /// Shape tracking for row 2 while it is filled left to right.
    cycle_start: usize,
    last_cycle: usize,
    /// Packed cycle type of row 2 once complete, 0 before.
    row2_key: u64,
}

struct Search<'a> {
    spec: &'a SearchSpec,
    n: usize,
    full: u16,
    /// Cells to fill, in row-major order (upper triangle when abelian).
    cells: Vec<(usize, usize)>,
    /// Number of leading cells that make up the split prefix.
    prefix_len: usize,
    count: u64,
    keep: bool,
    found: Vec<CayleyTable>,
}

impl<'a> Search<'a> {
    fn new(spec: &'a SearchSpec) -> Self {
        let n = spec.order;
        let abelian = spec.constraints.abelian;
        let cells: Vec<(usize, usize)> = (1..n)
            .flat_map(|i| (1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !abelian || i <= j)
            .collect();
        let prefix_len = cells.iter().filter(|&&(i, _)| i <= 2).count();
        Search {
            spec,
            n,
            full: ((1u32 << n) - 1) as u16,
            cells,
            prefix_len,
            count: 0,
            keep: !matches!(spec.mode, SearchMode::Count),
            found: Vec::new(),
        }
    }

    fn initial(&self) -> State {
        let n = self.n;
        let mut s = State {
            cells: [EMPTY; 64],
            row_used: [0; 8],
            col_used: [0; 8],
            row_missing: [0; 8],
            cycle_start: 0,
            last_cycle: 0,
            row2_key: 0,
        };
        for j in 0..n {
            s.cells[j] = j as u8;
            s.cells[j * n] = j as u8;
            s.row_used[0] |= 1 << j;
            s.col_used[0] |= 1 << j;
            s.row_used[j] |= 1 << j;
            s.col_used[j] |= 1 << j;
        }
        for i in 1..n {
            s.row_missing[i] = (n - 1) as u8;
        }
        s
    }

    fn candidates(&self, s: &State, i: usize, j: usize) -> u16 {
        let c = &self.spec.constraints;
        let mut mask = self.full & !(s.row_used[i] | s.col_used[j]);
        if c.abelian && i != j {
            mask &= !(s.row_used[j] | s.col_used[i]);
        }
        if c.plain && i == j {
            mask &= !1;
        }
        if c.invertible && !c.abelian && i != j {
            let mirror = s.cells[j * self.n + i];
            if mirror == 0 {
                mask &= 1;
            } else if mirror != EMPTY {
                mask &= !1;
            } else if s.row_used[j] & 1 != 0 || s.col_used[i] & 1 != 0 {
                // the mirror cell can no longer hold the identity
                mask &= !1;
            }
        }
        if self.spec.isomorph_rejection && i == 1 {
            // Row 2 must follow the cycle shape: close the current cycle or
            // move on to the next fresh label.
            let mut shape = 1u16 << s.cycle_start;
            if j + 1 < self.n {
                shape |= 1 << (j + 1);
            }
            mask &= shape;
        }
        mask
    }

    fn place(&self, s: &mut State, i: usize, j: usize, v: usize) -> bool {
        let n = self.n;
        let set = |s: &mut State, a: usize, b: usize, v: usize| {
            s.cells[a * n + b] = v as u8;
            s.row_used[a] |= 1 << v;
            s.col_used[b] |= 1 << v;
            s.row_missing[a] -= 1;
        };
        set(s, i, j, v);
        if self.spec.constraints.abelian && i != j {
            set(s, j, i, v);
        }
        if self.spec.isomorph_rejection && i == 1 && v == s.cycle_start {
            if s.cycle_start != 0 {
                let len = j + 1 - s.cycle_start;
                if len < s.last_cycle {
                    return false;
                }
                s.last_cycle = len;
            }
            s.cycle_start = j + 1;
        }
        let rows = if self.spec.constraints.abelian && i != j {
            [i, j]
        } else {
            [i, i]
        };
        rows.iter()
            .all(|&r| s.row_missing[r] != 0 || self.row_complete(s, r))
    }

    /// Pruning once a whole row is known: no left translation may have a
    /// smaller cycle type than row 2.
    fn row_complete(&self, s: &mut State, r: usize) -> bool {
        if !self.spec.isomorph_rejection {
            return true;
        }
        let n = self.n;
        let key = row_cycle_type(&s.cells[r * n..r * n + n]).key();
        if r == 1 {
            s.row2_key = key;
            return true;
        }
        s.row2_key == 0 || key >= s.row2_key
    }

    fn finish(&mut self, s: &State) {
        let n = self.n;
        let t = CayleyTable::from_raw(n, s.cells[..n * n].to_vec());
        let c = &self.spec.constraints;
        if c.nafil && axioms::is_associative(&t) {
            return;
        }
        if c.plain || c.composite {
            let composite = has_nontrivial_subloop(&t, 0);
            if composite != c.composite {
                return;
            }
        }
        if self.spec.isomorph_rejection && !is_canonical(&t) {
            return;
        }
        self.count += 1;
        if self.keep {
            self.found.push(t);
        }
    }

    fn pick_cell(&self, s: &State, depth: usize) -> (usize, usize) {
        if self.spec.strategy == Strategy::RowMajor || depth < self.prefix_len {
            return self.cells[depth];
        }
        let mut best = None;
        let mut best_count = u32::MAX;
        for &(i, j) in &self.cells[self.prefix_len..] {
            if s.cells[i * self.n + j] != EMPTY {
                continue;
            }
            let c = self.candidates(s, i, j).count_ones();
            if c < best_count {
                best_count = c;
                best = Some((i, j));
                if c <= 1 {
                    break;
                }
            }
        }
        best.expect("an empty cell remains")
    }

    fn run(&mut self, s: &State, depth: usize) {
        if depth == self.cells.len() {
            self.finish(s);
            return;
        }
        let (i, j) = self.pick_cell(s, depth);
        let mut mask = self.candidates(s, i, j);
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            let mut next = s.clone();
            if self.place(&mut next, i, j, v) {
                self.run(&next, depth + 1);
            }
        }
    }

    /// All consistent fillings of the split prefix, in search order.
    fn prefixes(&self, s: &State, depth: usize, out: &mut Vec<State>) {
        if depth == self.prefix_len {
            out.push(s.clone());
            return;
        }
        let (i, j) = self.cells[depth];
        let mut mask = self.candidates(s, i, j);
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            let mut next = s.clone();
            if self.place(&mut next, i, j, v) {
                self.prefixes(&next, depth + 1, out);
            }
        }
    }
}

fn trivial_result(spec: &SearchSpec, start: Instant) -> CensusResult {
    let t = CayleyTable::from_raw(1, vec![0]);
    // The trivial loop is a group: plain, not composite, not a NAFIL.
    let ok = !spec.constraints.nafil && !spec.constraints.composite;
    CensusResult {
        order: 1,
        constraints: spec.constraints,
        isomorph_rejection: spec.isomorph_rejection,
        count: u64::from(ok),
        representatives: (!matches!(spec.mode, SearchMode::Count)).then(|| {
            if ok {
                vec![t]
            } else {
                vec![]
            }
        }),
        wall_time: start.elapsed(),
    }
}

/// Enumerates loops of a small order under constraints, one per isomorphism
/// class (or every reduced table when isomorph rejection is off).
///
/// Search subtrees are split after the first two free rows; subtree `i`
/// goes to job `i mod jobs`, so results do not depend on scheduling.
pub fn enumerate(spec: &SearchSpec) -> Result<CensusResult> {
    let start = Instant::now();
    let spec = spec.validated()?;
    let mut result = if spec.order == 1 {
        trivial_result(&spec, start)
    } else {
        let root = Search::new(&spec);
        let mut prefixes = Vec::new();
        root.prefixes(&root.initial(), 0, &mut prefixes);
        let jobs = spec.job_count.min(prefixes.len()).max(1);
        let depth = root.prefix_len;
        let partials: Vec<(u64, Vec<CayleyTable>)> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    let prefixes = &prefixes;
                    let spec = &spec;
                    scope.spawn(move || {
                        let mut search = Search::new(spec);
                        for p in prefixes.iter().skip(w).step_by(jobs) {
                            search.run(p, depth);
                        }
                        (search.count, search.found)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
        let count = partials.iter().map(|(c, _)| c).sum();
        let representatives = (!matches!(spec.mode, SearchMode::Count)).then(|| {
            let mut all: Vec<CayleyTable> = partials.into_iter().flat_map(|(_, f)| f).collect();
            all.sort();
            all
        });
        CensusResult {
            order: spec.order,
            constraints: spec.constraints,
            isomorph_rejection: spec.isomorph_rejection,
            count,
            representatives,
            wall_time: start.elapsed(),
        }
    };
    result.wall_time = start.elapsed();
    if let SearchMode::Emit(dir) = &spec.mode {
        super::emit::write(dir, &result)?;
    }
    Ok(result)
}
