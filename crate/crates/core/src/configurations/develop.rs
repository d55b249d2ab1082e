use std::collections::{BTreeSet, HashSet};

use super::{Configuration, Point, Resolution};
use crate::error::{Error, Result};
use crate::groups::GroupRuler;
use crate::rulers::ModularRuler;

/// Develops an RMGR through `Z_v`: block `t` is `X + t`, and class `i`
/// collects the blocks with `t ≡ i (mod k)`.
pub fn develop_rmgr(m: &ModularRuler) -> Result<(Configuration, Resolution)> {
    if m.is_rmgr() != Ok(true) {
        return Err(Error::NotRmgr);
    }
    develop_multi(&[m.marks().to_vec()], m.modulus(), m.order())
}

/// Develops a GGR: block `g` is `X g`, and the classes are indexed by the
/// right cosets `H g`, i.e. the orbit of `{X h : h in H}` under `G`.
pub fn develop_ggr(x: &GroupRuler) -> Result<(Configuration, Resolution)> {
    if !x.is_ggr() {
        return Err(Error::NotGgr);
    }
    let g = x.group();
    let blocks = g
        .elements()
        .map(|a| x.marks().iter().map(|&m| g.op(m, a)).collect())
        .collect();
    let classes = x
        .subgroup()
        .right_cosets()
        .into_iter()
        .map(|coset| coset.into_iter().map(|a| a as usize).collect())
        .collect();
    let labels = g.elements().map(|a| g.format_element(a)).collect();
    let c = Configuration::new(g.order(), x.marks().len(), blocks).with_labels(labels);
    Ok((c, Resolution::new(classes)))
}

/// Develops several base blocks through `Z_v`. Base block `i` contributes
/// blocks `i*v + t = B_i + t` and `k` classes `{B_i + r + kj}`.
pub fn develop_multi(
    base_blocks: &[Vec<u64>],
    v: u64,
    k: usize,
) -> Result<(Configuration, Resolution)> {
    if k == 0 || !v.is_multiple_of(k as u64) {
        return Err(Error::ModulusNotDivisible { modulus: v, k });
    }
    for (i, base) in base_blocks.iter().enumerate() {
        let residues: BTreeSet<u64> = base.iter().map(|&x| x % k as u64).collect();
        if base.len() != k || residues.len() != k || base.iter().any(|&x| x >= v) {
            return Err(Error::NotTransversal { block: i, k });
        }
    }
    let mut blocks = Vec::with_capacity(base_blocks.len() * v as usize);
    let mut seen: HashSet<(u64, u64)> = HashSet::new();
    for base in base_blocks {
        for t in 0..v {
            let block: Vec<u64> = base.iter().map(|&x| (x + t) % v).collect();
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[i + 1..] {
                    let pair = (a.min(b), a.max(b));
                    if !seen.insert(pair) {
                        return Err(Error::PairCovered(pair.0, pair.1));
                    }
                }
            }
            blocks.push(block.into_iter().map(|p| p as Point).collect());
        }
    }
    let mut classes = Vec::with_capacity(base_blocks.len() * k);
    for i in 0..base_blocks.len() {
        for r in 0..k as u64 {
            classes.push(
                (r..v)
                    .step_by(k)
                    .map(|t| i * v as usize + t as usize)
                    .collect(),
            );
        }
    }
    Ok((
        Configuration::new(v as usize, k, blocks),
        Resolution::new(classes),
    ))
}

/// Recovers the base block of a cyclic resolvable configuration.
///
/// Checks that the block set is closed under `x -> x + 1`, then returns the
/// first block once its class stabilizer has order `v/k` and it verifies as
/// an RMGR.
pub fn recover_rmgr(c: &Configuration, r: &Resolution) -> Result<ModularRuler> {
    let v = c.v() as u64;
    let k = c.k();
    let not = || Error::NotRmgr;
    let set = c.block_set();
    let shift = |b: &[Point], t: u64| -> Vec<Point> {
        let mut s: Vec<Point> = b.iter().map(|&p| ((p as u64 + t) % v) as Point).collect();
        s.sort_unstable();
        s
    };
    if c.blocks().is_empty() || !c.blocks().iter().all(|b| set.contains(&shift(b, 1))) {
        return Err(not());
    }
    let base = c.block(0);
    let class = r
        .classes()
        .iter()
        .find(|cl| cl.contains(&0))
        .ok_or_else(not)?;
    let class_blocks: BTreeSet<Vec<Point>> = class.iter().map(|&i| c.block(i).to_vec()).collect();
    let stabilizer = (0..v)
        .filter(|&t| class_blocks.contains(&shift(base, t)))
        .count();
    if stabilizer as u64 * k as u64 != v {
        return Err(not());
    }
    let m = ModularRuler::new(base.iter().map(|&p| p as u64).collect(), v)?;
    if m.is_rmgr()? {
        Ok(m)
    } else {
        Err(not())
    }
}
