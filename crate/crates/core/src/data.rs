//! Tabulated values shipped with the crate. Everything loaded from the JSON
//! data files is verified before it is handed out.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupRuler, Subgroup};
use crate::rulers::{ModularRuler, Ruler};

/// Lengths of optimal (not necessarily resolvable) Golomb rulers, indexed by
/// the number of marks.
const OPTIMAL_GOLOMB: [u64; 14] = [0, 0, 1, 3, 6, 11, 17, 25, 34, 44, 55, 72, 85, 106];

pub fn optimal_golomb_length(k: usize) -> Option<u64> {
    OPTIMAL_GOLOMB.get(k).copied()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownRgr {
    pub k: usize,
    pub length: u64,
    pub marks: Vec<u64>,
}

/// Optimal resolvable Golomb rulers for `3 <= k <= 13`.
pub fn optimal_rgr_table() -> &'static [(KnownRgr, Ruler)] {
    static TABLE: OnceLock<Vec<(KnownRgr, Ruler)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let rows: Vec<KnownRgr> = serde_json::from_str(include_str!("../data/optimal_rgr.json"))
            .expect("optimal_rgr.json is well-formed");
        rows.into_iter()
            .map(|row| {
                let r = Ruler::from_unsigned(&row.marks).expect("distinct marks");
                assert!(
                    r.is_rgr() && r.length() == row.length && r.order() == row.k,
                    "stored RGR for k = {} does not verify",
                    row.k
                );
                (row, r)
            })
            .collect()
    })
}

pub fn optimal_rgr_length(k: usize) -> Option<u64> {
    optimal_rgr_table()
        .iter()
        .find(|(row, _)| row.k == k)
        .map(|(row, _)| row.length)
}

pub fn optimal_rgr_ruler(k: usize) -> Option<&'static Ruler> {
    optimal_rgr_table()
        .iter()
        .find(|(row, _)| row.k == k)
        .map(|(_, r)| r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StoredKind {
    Rmgr(ModularRuler),
    Ggr {
        group: String,
        subgroup: Vec<String>,
        marks: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredWitness {
    pub name: String,
    pub k: usize,
    pub w: u64,
    pub kind: StoredKind,
}

#[derive(Debug, Clone)]
pub enum VerifiedWitness {
    Rmgr(ModularRuler),
    Ggr(GroupRuler),
}

impl StoredWitness {
    /// Rebuilds and checks the witness.
    pub fn verify(&self) -> Result<VerifiedWitness> {
        let bad = |why: &str| Error::BadData(format!("{}: {why}", self.name));
        match &self.kind {
            StoredKind::Rmgr(m) => {
                if m.order() != self.k || m.modulus() != self.k as u64 * self.w {
                    return Err(bad("parameters do not match"));
                }
                if m.is_rmgr()? {
                    Ok(VerifiedWitness::Rmgr(m.clone()))
                } else {
                    Err(bad("not an RMGR"))
                }
            }
            StoredKind::Ggr {
                group,
                subgroup,
                marks,
            } => {
                let g = FiniteGroup::parse(group)?;
                let gens = subgroup
                    .iter()
                    .map(|s| g.parse_element(s))
                    .collect::<Result<Vec<_>>>()?;
                let h = Subgroup::generated(&g, &gens)?;
                let x = marks
                    .iter()
                    .map(|s| g.parse_element(s))
                    .collect::<Result<Vec<_>>>()?;
                let gr = GroupRuler::new(&h, &x)?;
                if h.order() as u64 != self.w || h.index() != self.k {
                    return Err(bad("parameters do not match"));
                }
                if gr.is_ggr() {
                    Ok(VerifiedWitness::Ggr(gr))
                } else {
                    Err(bad("not a GGR"))
                }
            }
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self.kind, StoredKind::Rmgr(_))
    }
}

/// Stored RMGR/GGR witnesses, each verified on first access.
pub fn stored_witnesses() -> &'static [(StoredWitness, VerifiedWitness)] {
    static STORE: OnceLock<Vec<(StoredWitness, VerifiedWitness)>> = OnceLock::new();
    STORE.get_or_init(|| {
        let rows: Vec<StoredWitness> = serde_json::from_str(include_str!("../data/witnesses.json"))
            .expect("witnesses.json is well-formed");
        rows.into_iter()
            .map(|row| {
                let v = row
                    .verify()
                    .unwrap_or_else(|e| panic!("stored witness failed verification: {e}"));
                (row, v)
            })
            .collect()
    })
}

pub fn stored_witness(k: usize, w: u64) -> Option<&'static (StoredWitness, VerifiedWitness)> {
    stored_witnesses()
        .iter()
        .find(|(s, _)| s.k == k && s.w == w)
}
