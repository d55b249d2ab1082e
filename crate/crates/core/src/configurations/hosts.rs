use std::fmt::Write;

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};
use serde::{Deserialize, Serialize};

use super::{verify_configuration, verify_resolution, Configuration, Point, Resolution};
use crate::error::{Error, Result};

/// `host[i]` is the point hosting block `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostAssignment {
    pub host: Vec<Point>,
}

impl HostAssignment {
    /// Every block is hosted by one of its own points and no point hosts
    /// twice.
    pub fn verify(&self, c: &Configuration) -> bool {
        let mut used = vec![false; c.v()];
        self.host.len() == c.b()
            && self.host.iter().zip(c.blocks()).all(|(&h, block)| {
                block.contains(&h)
                    && (h as usize) < used.len()
                    && !std::mem::replace(&mut used[h as usize], true)
            })
    }
}

/// Finds a host bijection for a resolvable symmetric configuration.
///
/// The block/point incidence graph is `k`-regular, so a perfect matching
/// exists.
pub fn assign_hosts(c: &Configuration, r: &Resolution) -> Result<HostAssignment> {
    let report = verify_configuration(c);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidConfiguration(v.to_string()));
    }
    let report = verify_resolution(c, r);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidConfiguration(v.to_string()));
    }
    if !c.is_symmetric() {
        return Err(Error::NotSymmetric { v: c.v(), b: c.b() });
    }
    let blocks = c.blocks();
    let incidence =
        UnGraph::<(), ()>::from_edges(blocks.iter().enumerate().flat_map(|(i, block)| {
            block
                .iter()
                .map(move |&p| (i as u32, (blocks.len() + p as usize) as u32))
        }));
    let matching = maximum_matching(&incidence);
    let host: Option<Vec<Point>> = (0..blocks.len())
        .map(|i| {
            matching
                .mate(NodeIndex::new(i))
                .map(|p| (p.index() - blocks.len()) as Point)
        })
        .collect();
    let host = host.ok_or(Error::MatchingIncomplete {
        matched: matching.len(),
        blocks: blocks.len(),
    })?;
    let h = HostAssignment { host };
    debug_assert!(h.verify(c));
    Ok(h)
}

/// The dinner-party schedule: one section per course (parallel class), one
/// line per house (block) listing its guests with the host starred.
pub fn render_pdp(c: &Configuration, r: &Resolution, h: &HostAssignment) -> String {
    let mut out = String::new();
    for (i, class) in r.classes().iter().enumerate() {
        writeln!(out, "course {}", i + 1).unwrap();
        for &b in class {
            let host = h.host[b];
            let guests: Vec<String> = c
                .block(b)
                .iter()
                .map(|&p| {
                    if p == host {
                        format!("{}*", c.label(p))
                    } else {
                        c.label(p)
                    }
                })
                .collect();
            writeln!(out, "  house {}: {}", c.label(host), guests.join(" ")).unwrap();
        }
    }
    out
}
