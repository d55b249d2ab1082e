use super::{is_resolvable_configuration, Configuration, Point, Resolution};
use crate::error::{Error, Result};

/// Completes a resolvable `(k^2, k)` configuration to an affine plane of
/// order `k` by adding one parallel class.
///
/// Two points are related when they are equal or lie in no common block. For
/// valid input this is an equivalence relation whose `k` classes, each of
/// size `k`, become the new blocks.
pub fn complete_to_affine(
    c: &Configuration,
    r: &Resolution,
) -> Result<(Configuration, Resolution)> {
    let k = c.k();
    if k < 3 || c.v() != k * k || r.len() != k || !is_resolvable_configuration(c, r) {
        return Err(Error::WrongParameters(format!(
            "expected a resolvable ({}, {k}) configuration with {k} classes and k >= 3",
            k * k
        )));
    }
    let v = c.v();
    let mut collinear = vec![false; v * v];
    for block in c.blocks() {
        for &a in block {
            for &b in block {
                collinear[a as usize * v + b as usize] = true;
            }
        }
    }
    let related = |a: usize, b: usize| a == b || !collinear[a * v + b];
    let mut assigned = vec![false; v];
    let mut new_blocks: Vec<Vec<Point>> = Vec::with_capacity(k);
    for p in 0..v {
        if assigned[p] {
            continue;
        }
        let class: Vec<usize> = (0..v).filter(|&q| related(p, q)).collect();
        let closed = class.len() == k
            && class
                .iter()
                .all(|&a| !assigned[a] && class.iter().all(|&b| related(a, b)));
        if !closed {
            return Err(Error::Nonextendable);
        }
        for &a in &class {
            assigned[a] = true;
        }
        new_blocks.push(class.into_iter().map(|a| a as Point).collect());
    }
    let mut out = c.clone();
    let first = out.b();
    out.blocks_mut().extend(new_blocks);
    let mut res = r.clone();
    res.push((first..out.b()).collect());
    Ok((out, res))
}
