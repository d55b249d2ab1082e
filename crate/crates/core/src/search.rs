//! Exhaustive, certifying searches.
//!
//! * [`optimal_rgr`] finds the least length of a resolvable Golomb ruler by
//!   proving every shorter length infeasible.
//! * [`find_rmgr`] and [`find_ggr`] search coset transversals of a subgroup
//!   for a set with distinct differences, or exhaust the space.
//!
//! Work is split over the choices for the first free mark. Every branch runs
//! to its own first witness (or exhaustion) and results are merged in branch
//! order, so outcomes and node counts do not depend on scheduling. Node
//! budgets apply per top-level branch.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions;
use crate::data::optimal_golomb_length;
use crate::error::{Error, Result};
use crate::groups::{Element, FiniteGroup, GroupRuler, Subgroup};
use crate::numtheory::binomial2;
use crate::rulers::{bound_report, golomb_min_length, ModularRuler, Ruler};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    ExhaustedNonexistent,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome<W> {
    pub status: SearchStatus,
    pub witness: Option<W>,
    pub nodes_explored: u64,
    pub node_budget: Option<u64>,
}

impl<W> SearchOutcome<W> {
    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> SearchOutcome<V> {
        SearchOutcome {
            status: self.status,
            witness: self.witness.map(f),
            nodes_explored: self.nodes_explored,
            node_budget: self.node_budget,
        }
    }
}

#[derive(Debug, Default)]
struct BranchResult {
    found: Option<Vec<u64>>,
    nodes: u64,
    capped: bool,
}

struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Bits {
        Bits(vec![0; n / 64 + 1])
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    fn clear(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }
}

/// Backtracking for rulers of order `k` with both end marks fixed.
#[derive(Debug, Clone)]
pub struct RulerSearch {
    k: usize,
    resolvable: bool,
    mirror_reduce: bool,
    /// `span[m]` lower-bounds the length of any Golomb ruler with `m` marks
    span: Vec<u64>,
}

impl RulerSearch {
    pub fn new(k: usize, resolvable: bool) -> RulerSearch {
        // tabulated optimal lengths only for proper sub-rulers
        let span = (0..=k)
            .map(|m| {
                optimal_golomb_length(m)
                    .filter(|_| m < k)
                    .unwrap_or_else(|| binomial2(m as u64).max(golomb_min_length(m)))
            })
            .collect();
        RulerSearch {
            k,
            resolvable,
            mirror_reduce: true,
            span,
        }
    }

    /// Searches only one ruler of each mirror pair when set (the default).
    pub fn with_mirror_reduction(mut self, on: bool) -> RulerSearch {
        self.mirror_reduce = on;
        self
    }

    /// Candidate positions for the second mark at the given length.
    fn second_marks(&self, length: u64) -> Vec<u64> {
        if self.k < 3 {
            return vec![];
        }
        let hi = length.saturating_sub(self.span[self.k - 1]);
        (1..=hi).collect()
    }

    fn trivially_infeasible(&self, length: u64) -> bool {
        (self.resolvable && self.k > 1 && length.is_multiple_of(self.k as u64))
            || length < self.span[self.k]
    }

    /// Runs one top-level branch: marks `0`, `second` and `length` fixed.
    fn run_branch(&self, length: u64, second: Option<u64>, cap: Option<u64>) -> BranchResult {
        let k = self.k;
        let mut state = State {
            search: self,
            length,
            marks: vec![0],
            pos: Bits::new(length as usize + 1),
            dist: Bits::new(length as usize + 1),
            residues: vec![false; k],
            nodes: 0,
            cap: cap.unwrap_or(u64::MAX),
            capped: false,
        };
        state.pos.set(0);
        state.pos.set(length as usize);
        state.dist.set(length as usize);
        if self.resolvable {
            state.residues[0] = true;
            state.residues[(length % k as u64) as usize] = true;
        }
        let found = match (k, second) {
            (1, _) => (length == 0).then(|| vec![0]),
            (2, _) => (length > 0).then(|| vec![0, length]),
            (_, None) => None,
            (_, Some(x)) => {
                if state.try_place(x) {
                    state.nodes += 1;
                    let ok = state.descend();
                    ok.then(|| state.full_marks())
                } else {
                    None
                }
            }
        };
        BranchResult {
            found,
            nodes: state.nodes,
            capped: state.capped,
        }
    }

    /// Searches for a ruler of exactly `length`, all branches in parallel.
    fn search_length(&self, length: u64, cap: Option<u64>) -> (Option<Vec<u64>>, u64, bool) {
        if self.trivially_infeasible(length) {
            return (None, 0, false);
        }
        if self.k < 3 {
            let r = self.run_branch(length, None, cap);
            return (r.found, r.nodes, r.capped);
        }
        let results: Vec<BranchResult> = self
            .second_marks(length)
            .into_par_iter()
            .map(|x| self.run_branch(length, Some(x), cap))
            .collect();
        merge(results)
    }

    /// Lexicographically least ruler of exactly `length`: branches are taken
    /// in increasing order of the second mark, in waves of fixed size.
    fn least_of_length(&self, length: u64, cap: Option<u64>) -> (Option<Vec<u64>>, u64, bool) {
        const WAVE: usize = 8;
        let plain = self.clone().with_mirror_reduction(false);
        if self.k < 3 {
            return plain.search_length(length, cap);
        }
        let seconds = plain.second_marks(length);
        let mut nodes = 0;
        for wave in seconds.chunks(WAVE) {
            let results: Vec<BranchResult> = wave
                .par_iter()
                .map(|&x| plain.run_branch(length, Some(x), cap))
                .collect();
            nodes += results.iter().map(|r| r.nodes).sum::<u64>();
            if let Some(r) = results.iter().find(|r| r.found.is_some() || r.capped) {
                return (r.found.clone(), nodes, r.capped);
            }
        }
        (None, nodes, false)
    }
}

fn merge(results: Vec<BranchResult>) -> (Option<Vec<u64>>, u64, bool) {
    let nodes = results.iter().map(|r| r.nodes).sum();
    let capped = results.iter().any(|r| r.capped);
    let found = results.into_iter().find_map(|r| r.found);
    (found, nodes, capped)
}

struct State<'a> {
    search: &'a RulerSearch,
    length: u64,
    marks: Vec<u64>,
    pos: Bits,
    dist: Bits,
    residues: Vec<bool>,
    nodes: u64,
    cap: u64,
    capped: bool,
}

impl State<'_> {
    fn full_marks(&self) -> Vec<u64> {
        let mut m = self.marks.clone();
        m.push(self.length);
        m
    }

    /// Checks and commits mark `p`; nothing is changed on failure.
    fn try_place(&mut self, p: u64) -> bool {
        let k = self.search.k as u64;
        if self.search.resolvable && self.residues[(p % k) as usize] {
            return false;
        }
        let end = self.length - p;
        if self.dist.get(end as usize) {
            return false;
        }
        // p - y == L - p for the mark y = 2p - L
        if 2 * p >= self.length && self.pos.get((2 * p - self.length) as usize) {
            return false;
        }
        if self.marks.iter().any(|&y| self.dist.get((p - y) as usize)) {
            return false;
        }
        for &y in &self.marks {
            self.dist.set((p - y) as usize);
        }
        self.dist.set(end as usize);
        self.pos.set(p as usize);
        if self.search.resolvable {
            self.residues[(p % k) as usize] = true;
        }
        self.marks.push(p);
        true
    }

    fn undo(&mut self) {
        let p = self.marks.pop().unwrap();
        for &y in &self.marks {
            self.dist.clear((p - y) as usize);
        }
        self.dist.clear((self.length - p) as usize);
        self.pos.clear(p as usize);
        if self.search.resolvable {
            self.residues[(p % self.search.k as u64) as usize] = false;
        }
    }

    /// Fills the remaining interior marks; true when a full ruler is found.
    fn descend(&mut self) -> bool {
        let s = self.search;
        let placed = self.marks.len();
        let remaining = s.k - 1 - placed;
        let last = *self.marks.last().unwrap();
        if remaining == 0 {
            return !(s.mirror_reduce && s.k >= 3 && self.marks[1] >= self.length - last);
        }
        // [p, L] holds remaining + 1 marks, [0, p] holds placed + 1
        let Some(mut hi) = self.length.checked_sub(s.span[remaining + 1]) else {
            return false;
        };
        if s.mirror_reduce {
            // the eventual last interior mark must satisfy x_{k-1} < L - x_2
            hi = hi.min(self.length - self.marks[1] - 1);
        }
        let lo = (last + 1).max(s.span[placed + 1]);
        for p in lo..=hi {
            if self.try_place(p) {
                self.nodes += 1;
                if self.nodes > self.cap {
                    self.capped = true;
                    self.undo();
                    return false;
                }
                if self.descend() {
                    return true;
                }
                self.undo();
                if self.capped {
                    return false;
                }
            }
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalRuler {
    pub k: usize,
    pub length: u64,
    pub witness: Ruler,
    /// lengths proven infeasible by exhaustion, in increasing order
    pub exhausted_lengths: Vec<u64>,
    pub nodes_explored: u64,
}

/// Least length of a resolvable Golomb ruler of order `k`, with the
/// lexicographically least witness of that length.
pub fn optimal_rgr(k: usize, budget: Option<u64>) -> Result<OptimalRuler> {
    optimal_ruler(k, true, budget)
}

/// Same engine without the residue constraint (plain optimal Golomb rulers).
pub fn optimal_golomb(k: usize, budget: Option<u64>) -> Result<OptimalRuler> {
    optimal_ruler(k, false, budget)
}

/// Shortest ruler the constructions provide for order `k`, if any.
fn best_constructed(k: usize) -> Option<Ruler> {
    let mut candidates: Vec<Ruler> = Vec::new();
    if let Ok(r) = constructions::cubic_rgr(k) {
        candidates.push(r);
    }
    if let Ok((_, r)) = constructions::ruzsa_best(k as u64 + 1) {
        candidates.push(r);
    }
    candidates.into_iter().min_by_key(|r| r.length())
}

fn optimal_ruler(k: usize, resolvable: bool, budget: Option<u64>) -> Result<OptimalRuler> {
    if k == 0 {
        return Err(Error::OrderTooSmall(0));
    }
    let search = RulerSearch::new(k, resolvable);
    let start = if resolvable {
        bound_report(k).effective_bound
    } else {
        binomial2(k as u64).max(golomb_min_length(k))
    };
    let start = if k == 1 { 0 } else { start };
    let mut nodes = 0u64;
    let mut exhausted = Vec::new();
    let over = |nodes: u64, capped: bool| capped || budget.is_some_and(|b| nodes > b);
    for length in start.. {
        let remaining = budget.map(|b| b.saturating_sub(nodes));
        let (found, n, capped) = search.search_length(length, remaining);
        nodes += n;
        if found.is_none() && over(nodes, capped) {
            return Err(Error::BudgetExceeded {
                proven_lower: length,
                best_known: best_constructed(k),
                nodes,
            });
        }
        if let Some(first) = found {
            let remaining = budget.map(|b| b.saturating_sub(nodes));
            let (least, n, capped) = search.least_of_length(length, remaining);
            nodes += n;
            let marks = match least {
                Some(m) => m,
                None if capped => first,
                None => {
                    return Err(Error::VerificationFailed(format!(
                        "length {length} found with mirror reduction but not without"
                    )))
                }
            };
            let witness = Ruler::from_unsigned(&marks)?;
            let verified = witness.is_golomb() && (!resolvable || witness.is_resolvable());
            if !verified || witness.length() != length || witness.order() != k {
                return Err(Error::VerificationFailed(format!(
                    "search produced {:?}",
                    witness.marks()
                )));
            }
            return Ok(OptimalRuler {
                k,
                length,
                witness,
                exhausted_lengths: exhausted,
                nodes_explored: nodes,
            });
        }
        exhausted.push(length);
    }
    unreachable!("the length loop only exits by returning")
}

/// Precomputed difference table for a group.
struct DiffTable {
    order: usize,
    table: Vec<u32>,
}

impl DiffTable {
    fn cyclic(v: usize) -> DiffTable {
        let table = (0..v * v)
            .map(|i| ((i / v + v - i % v) % v) as u32)
            .collect();
        DiffTable { order: v, table }
    }

    fn group(g: &FiniteGroup) -> DiffTable {
        let n = g.order();
        let table = (0..n * n)
            .map(|i| g.diff((i / n) as Element, (i % n) as Element))
            .collect();
        DiffTable { order: n, table }
    }

    #[inline]
    fn diff(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }
}

/// Searches transversals of `cosets` (the first coset's representative is
/// fixed to element 0) with all differences `a * b^-1` distinct.
struct TransversalSearch<'a> {
    diffs: &'a DiffTable,
    cosets: &'a [Vec<u32>],
}

struct TState<'a> {
    search: &'a TransversalSearch<'a>,
    chosen: Vec<u32>,
    used: Vec<bool>,
    scratch: Vec<u32>,
    nodes: u64,
    cap: u64,
    capped: bool,
}

impl TState<'_> {
    fn try_add(&mut self, x: u32) -> bool {
        self.scratch.clear();
        let d = self.search.diffs;
        for &y in &self.chosen {
            for e in [d.diff(x, y), d.diff(y, x)] {
                if self.used[e as usize] {
                    for &u in &self.scratch {
                        self.used[u as usize] = false;
                    }
                    return false;
                }
                self.used[e as usize] = true;
                self.scratch.push(e);
            }
        }
        self.chosen.push(x);
        true
    }

    fn remove(&mut self) {
        let x = self.chosen.pop().unwrap();
        let d = self.search.diffs;
        for &y in &self.chosen {
            self.used[d.diff(x, y) as usize] = false;
            self.used[d.diff(y, x) as usize] = false;
        }
    }

    fn descend(&mut self) -> bool {
        let level = self.chosen.len();
        if level == self.search.cosets.len() {
            return true;
        }
        for &x in &self.search.cosets[level] {
            if self.try_add(x) {
                self.nodes += 1;
                if self.nodes > self.cap {
                    self.capped = true;
                    self.remove();
                    return false;
                }
                if self.descend() {
                    return true;
                }
                self.remove();
                if self.capped {
                    return false;
                }
            }
        }
        false
    }
}

impl TransversalSearch<'_> {
    fn run(&self, budget: Option<u64>) -> SearchOutcome<Vec<u32>> {
        let k = self.cosets.len();
        let fresh = || TState {
            search: self,
            chosen: Vec::with_capacity(k),
            used: vec![false; self.diffs.order],
            scratch: Vec::new(),
            nodes: 0,
            cap: budget.unwrap_or(u64::MAX),
            capped: false,
        };
        let one_branch = |first: Option<u32>| -> BranchResult {
            let mut st = fresh();
            st.chosen.push(0);
            st.nodes = 1;
            let ok = match first {
                None => st.descend(),
                Some(x) => {
                    st.try_add(x) && {
                        st.nodes += 1;
                        st.descend()
                    }
                }
            };
            BranchResult {
                found: ok.then(|| st.chosen.iter().map(|&e| e as u64).collect()),
                nodes: st.nodes,
                capped: st.capped,
            }
        };
        let results: Vec<BranchResult> = if k < 2 {
            vec![one_branch(None)]
        } else {
            self.cosets[1]
                .par_iter()
                .map(|&x| one_branch(Some(x)))
                .collect()
        };
        let nodes = results.iter().map(|r| r.nodes).sum();
        let capped = results.iter().any(|r| r.capped);
        let witness = results
            .into_iter()
            .filter_map(|r| r.found)
            .map(|mut w| {
                w.sort_unstable();
                w
            })
            .min();
        let status = match (&witness, capped) {
            (Some(_), _) => SearchStatus::Found,
            (None, true) => SearchStatus::BudgetExceeded,
            (None, false) => SearchStatus::ExhaustedNonexistent,
        };
        SearchOutcome {
            status,
            witness: witness.map(|w| w.into_iter().map(|e| e as u32).collect()),
            nodes_explored: nodes,
            node_budget: budget,
        }
    }
}

/// Finds a `(v, k)`-RMGR containing 0, or proves none exists.
pub fn find_rmgr(v: u64, k: usize, budget: Option<u64>) -> Result<SearchOutcome<ModularRuler>> {
    if k == 0 || !v.is_multiple_of(k as u64) {
        return Err(Error::ModulusNotDivisible { modulus: v, k });
    }
    let w = v / k as u64;
    let cosets: Vec<Vec<u32>> = (0..k as u64)
        .map(|r| (0..w).map(|j| (r + j * k as u64) as u32).collect())
        .collect();
    let diffs = DiffTable::cyclic(v as usize);
    let outcome = TransversalSearch {
        diffs: &diffs,
        cosets: &cosets,
    }
    .run(budget);
    let outcome = outcome.map(|marks| {
        ModularRuler::new(marks.into_iter().map(u64::from).collect(), v)
            .expect("transversal marks are distinct residues")
    });
    if let Some(m) = &outcome.witness {
        if m.is_rmgr() != Ok(true) {
            return Err(Error::VerificationFailed(format!(
                "{:?} is not an RMGR",
                m.marks()
            )));
        }
    }
    Ok(outcome)
}

/// Finds a `(G, H)`-GGR containing the identity, or proves none exists.
pub fn find_ggr(h: &Subgroup, budget: Option<u64>) -> Result<SearchOutcome<GroupRuler>> {
    let cosets = h.left_cosets();
    let diffs = DiffTable::group(h.group());
    let outcome = TransversalSearch {
        diffs: &diffs,
        cosets: &cosets,
    }
    .run(budget);
    let mut mapped = SearchOutcome {
        status: outcome.status,
        witness: None,
        nodes_explored: outcome.nodes_explored,
        node_budget: outcome.node_budget,
    };
    if let Some(marks) = outcome.witness {
        let gr = GroupRuler::new(h, &marks)?;
        if !gr.is_ggr() {
            return Err(Error::VerificationFailed(
                "search witness is not a GGR".into(),
            ));
        }
        mapped.witness = Some(gr);
    }
    Ok(mapped)
}
