//! Configurations, resolutions and their verification.
//!
//! A [`Configuration`] is a plain block list on points `0..v`; it is not
//! validated on construction so that broken inputs can be reported by
//! [`verify_configuration`]. Equality is label-wise.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod affine;
mod develop;
mod hosts;
mod mols;

pub use affine::complete_to_affine;
pub use develop::{develop_ggr, develop_multi, develop_rmgr, recover_rmgr};
pub use hosts::{assign_hosts, render_pdp, HostAssignment};
pub use mols::from_mols;

pub type Point = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    v: usize,
    k: usize,
    blocks: Vec<Vec<Point>>,
    labels: Option<Vec<String>>,
}

impl Configuration {
    /// Blocks are sorted internally; nothing else is checked.
    pub fn new(v: usize, k: usize, blocks: Vec<Vec<Point>>) -> Configuration {
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Configuration {
            v,
            k,
            blocks,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Configuration {
        self.labels = Some(labels);
        self
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    /// Replication number implied by `bk = vr`, if integral.
    pub fn r(&self) -> Option<usize> {
        let bk = self.b() * self.k;
        (self.v > 0 && bk.is_multiple_of(self.v)).then(|| bk / self.v)
    }

    pub fn blocks(&self) -> &[Vec<Point>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[Point] {
        &self.blocks[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, p: Point) -> String {
        match &self.labels {
            Some(l) => l[p as usize].clone(),
            None => p.to_string(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.b() == self.v
    }

    /// The blocks as a set, ignoring order.
    pub fn block_set(&self) -> BTreeSet<Vec<Point>> {
        self.blocks.iter().cloned().collect()
    }

    pub(crate) fn blocks_mut(&mut self) -> &mut Vec<Vec<Point>> {
        &mut self.blocks
    }
}

/// A partition of the block indices into parallel classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    classes: Vec<Vec<usize>>,
}

impl Resolution {
    pub fn new(classes: Vec<Vec<usize>>) -> Resolution {
        Resolution { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub(crate) fn push(&mut self, class: Vec<usize>) {
        self.classes.push(class);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    BlockSize {
        block: usize,
        size: usize,
    },
    PointOutOfRange {
        block: usize,
        point: Point,
    },
    RepeatedPoint {
        block: usize,
        point: Point,
    },
    CountIdentity {
        b: usize,
        k: usize,
        v: usize,
    },
    Replication {
        point: Point,
        count: usize,
        expected: usize,
    },
    PairRepeated {
        pair: (Point, Point),
        blocks: Vec<usize>,
    },
    NotDivisible {
        v: usize,
        k: usize,
    },
    BlockOutOfRange {
        class: usize,
        block: usize,
    },
    BlockNotInOneClass {
        block: usize,
        classes: Vec<usize>,
    },
    ClassNotPartition {
        class: usize,
        missing: Vec<Point>,
        repeated: Vec<Point>,
    },
    ClassCount {
        classes: usize,
        expected: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            BlockSize { block, size } => write!(f, "block {block} has size {size}"),
            PointOutOfRange { block, point } => write!(
                f,
                "block {block} contains point {point} outside the point set"
            ),
            RepeatedPoint { block, point } => write!(f, "block {block} repeats point {point}"),
            CountIdentity { b, k, v } => write!(f, "bk = {} is not divisible by v = {v}", b * k),
            Replication {
                point,
                count,
                expected,
            } => write!(
                f,
                "point {point} lies in {count} blocks, expected {expected}"
            ),
            PairRepeated { pair, blocks } => write!(
                f,
                "pair {{{}, {}}} lies in blocks {blocks:?}",
                pair.0, pair.1
            ),
            NotDivisible { v, k } => write!(f, "v = {v} is not divisible by k = {k}"),
            BlockOutOfRange { class, block } => {
                write!(f, "class {class} names missing block {block}")
            }
            BlockNotInOneClass { block, classes } => {
                write!(f, "block {block} lies in classes {classes:?}")
            }
            ClassNotPartition {
                class,
                missing,
                repeated,
            } => write!(
                f,
                "class {class} misses {missing:?} and repeats {repeated:?}"
            ),
            ClassCount { classes, expected } => write!(f, "{classes} classes, expected {expected}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks block sizes, replication, `bk = vr` and that no pair of points is
/// covered twice.
pub fn verify_configuration(c: &Configuration) -> Report {
    let mut violations = Vec::new();
    let mut counts = vec![0usize; c.v];
    let mut pairs: HashMap<(Point, Point), Vec<usize>> = HashMap::new();
    for (i, block) in c.blocks.iter().enumerate() {
        if block.len() != c.k {
            violations.push(Violation::BlockSize {
                block: i,
                size: block.len(),
            });
        }
        for w in block.windows(2).filter(|w| w[0] == w[1]) {
            violations.push(Violation::RepeatedPoint {
                block: i,
                point: w[0],
            });
        }
        for &p in block {
            match counts.get_mut(p as usize) {
                Some(n) => *n += 1,
                None => violations.push(Violation::PointOutOfRange { block: i, point: p }),
            }
        }
        for (a_idx, &a) in block.iter().enumerate() {
            for &b in &block[a_idx + 1..] {
                if a != b {
                    pairs.entry((a, b)).or_default().push(i);
                }
            }
        }
    }
    match c.r() {
        None => violations.push(Violation::CountIdentity {
            b: c.b(),
            k: c.k,
            v: c.v,
        }),
        Some(r) => {
            for (p, &n) in counts.iter().enumerate() {
                if n != r {
                    violations.push(Violation::Replication {
                        point: p as Point,
                        count: n,
                        expected: r,
                    });
                }
            }
        }
    }
    let mut repeated: Vec<_> = pairs.into_iter().filter(|(_, b)| b.len() > 1).collect();
    repeated.sort();
    violations.extend(
        repeated
            .into_iter()
            .map(|(pair, blocks)| Violation::PairRepeated { pair, blocks }),
    );
    Report { violations }
}

/// Checks that the classes partition the blocks and that each class
/// partitions the points.
pub fn verify_resolution(c: &Configuration, r: &Resolution) -> Report {
    let mut violations = Vec::new();
    if c.k == 0 || !c.v.is_multiple_of(c.k) {
        violations.push(Violation::NotDivisible { v: c.v, k: c.k });
    }
    let mut owner: Vec<Vec<usize>> = vec![Vec::new(); c.b()];
    for (ci, class) in r.classes.iter().enumerate() {
        let mut hits = vec![0usize; c.v];
        for &bi in class {
            match c.blocks.get(bi) {
                None => violations.push(Violation::BlockOutOfRange {
                    class: ci,
                    block: bi,
                }),
                Some(block) => {
                    owner[bi].push(ci);
                    for &p in block {
                        if let Some(h) = hits.get_mut(p as usize) {
                            *h += 1;
                        }
                    }
                }
            }
        }
        let missing: Vec<Point> = (0..c.v)
            .filter(|&p| hits[p] == 0)
            .map(|p| p as Point)
            .collect();
        let repeated: Vec<Point> = (0..c.v)
            .filter(|&p| hits[p] > 1)
            .map(|p| p as Point)
            .collect();
        if !missing.is_empty() || !repeated.is_empty() {
            violations.push(Violation::ClassNotPartition {
                class: ci,
                missing,
                repeated,
            });
        }
    }
    for (bi, classes) in owner.into_iter().enumerate() {
        if classes.len() != 1 {
            violations.push(Violation::BlockNotInOneClass { block: bi, classes });
        }
    }
    if let Some(rep) = c.r() {
        if r.len() != rep {
            violations.push(Violation::ClassCount {
                classes: r.len(),
                expected: rep,
            });
        }
    }
    Report { violations }
}

/// Both reports clean.
pub fn is_resolvable_configuration(c: &Configuration, r: &Resolution) -> bool {
    verify_configuration(c).is_ok() && verify_resolution(c, r).is_ok()
}

/// On-disk form: `{"v":…, "k":…, "blocks":[[…]], "classes":[[…]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationFile {
    pub v: usize,
    pub k: usize,
    pub blocks: Vec<Vec<Point>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ConfigurationFile {
    pub fn from_parts(c: &Configuration, r: Option<&Resolution>) -> ConfigurationFile {
        ConfigurationFile {
            v: c.v,
            k: c.k,
            blocks: c.blocks.clone(),
            classes: r.map(|r| r.classes.clone()),
            labels: c.labels.clone(),
        }
    }

    pub fn into_parts(self) -> Result<(Configuration, Option<Resolution>)> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.v {
                return Err(Error::InvalidConfiguration(format!(
                    "{} labels for {} points",
                    labels.len(),
                    self.v
                )));
            }
        }
        let mut c = Configuration::new(self.v, self.k, self.blocks);
        c.labels = self.labels;
        Ok((c, self.classes.map(Resolution::new)))
    }
}
