//! Deliberately naive reference implementations used as test oracles.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use rgrkit::configurations::Configuration;

/// All pairwise differences as a multiset; Golomb iff every count is one.
pub fn golomb(marks: &[i64]) -> bool {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for (i, &a) in marks.iter().enumerate() {
        for (j, &b) in marks.iter().enumerate() {
            if i < j {
                *counts.entry((a - b).abs()).or_default() += 1;
            }
        }
    }
    counts.values().all(|&c| c == 1) && !counts.contains_key(&0)
}

pub fn resolvable(marks: &[i64]) -> bool {
    let k = marks.len() as i64;
    let residues: HashSet<i64> = marks.iter().map(|m| m.rem_euclid(k)).collect();
    residues.len() == marks.len()
}

/// Directed differences mod `v` as a multiset, plus the transversal test.
pub fn rmgr(marks: &[u64], v: u64) -> bool {
    let k = marks.len() as u64;
    if !v.is_multiple_of(k) {
        return false;
    }
    let mut seen: Vec<u64> = Vec::new();
    for &a in marks {
        for &b in marks {
            if a != b {
                seen.push((a + v - b) % v);
            }
        }
    }
    let n = seen.len();
    seen.sort_unstable();
    seen.dedup();
    let residues: HashSet<u64> = marks.iter().map(|m| m % k).collect();
    seen.len() == n && !seen.contains(&0) && residues.len() == marks.len()
}

/// Visits every `size`-subset of `0..n` in lexicographic order.
pub fn subsets(n: u64, size: usize, mut f: impl FnMut(&[u64]) -> bool) -> bool {
    fn go(
        n: u64,
        size: usize,
        start: u64,
        cur: &mut Vec<u64>,
        f: &mut dyn FnMut(&[u64]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for x in start..n {
            cur.push(x);
            if go(n, size, x + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(n, size, 0, &mut Vec::new(), &mut f)
}

/// Plain enumeration of `k`-subsets of `Z_v` that contain 0.
pub fn rmgr_exists(v: u64, k: usize) -> Option<Vec<u64>> {
    if k == 0 {
        return None;
    }
    let mut found = None;
    subsets(v - 1, k - 1, |rest| {
        let marks: Vec<u64> = std::iter::once(0)
            .chain(rest.iter().map(|x| x + 1))
            .collect();
        if rmgr(&marks, v) {
            found = Some(marks);
            true
        } else {
            false
        }
    });
    found
}

/// Number of times each unordered pair of points is covered.
pub fn pair_counts(c: &Configuration) -> BTreeMap<(u32, u32), usize> {
    let mut counts = BTreeMap::new();
    for b in c.blocks() {
        for (i, &x) in b.iter().enumerate() {
            for &y in &b[i + 1..] {
                *counts.entry((x.min(y), x.max(y))).or_default() += 1;
            }
        }
    }
    counts
}

/// Partition test for a resolution written out longhand.
pub fn classes_partition(c: &Configuration, classes: &[Vec<usize>]) -> bool {
    let mut used = vec![0usize; c.b()];
    for class in classes {
        let mut pts: Vec<u32> = class
            .iter()
            .flat_map(|&b| c.block(b).iter().copied())
            .collect();
        pts.sort_unstable();
        if pts != (0..c.v() as u32).collect::<Vec<_>>() {
            return false;
        }
        for &b in class {
            used[b] += 1;
        }
    }
    used.iter().all(|&u| u == 1)
}
