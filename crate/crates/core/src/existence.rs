//! Existence of resolvable symmetric `(kw, k)` configurations for small `k`,
//! and the general construction for `w >= k^2`.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::configurations::{
    develop_ggr, develop_rmgr, from_mols, is_resolvable_configuration, Configuration, Resolution,
};
use crate::constructions::{cubic_rgr, embed_as_rmgr};
use crate::data::{optimal_rgr_length, optimal_rgr_ruler, stored_witness, VerifiedWitness};
use crate::error::{Error, Result};
use crate::numtheory::prime_power;
use crate::rulers::ModularRuler;

pub const K_MIN: usize = 3;
pub const K_MAX: usize = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exists,
    Nonexistent,
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Authority {
    /// `v >= k^2` is necessary.
    #[serde(rename = "necessary-condition")]
    NecessaryCondition,
    /// No affine plane of order 6 or 10.
    #[serde(rename = "affine-nonexistence")]
    AffineNonexistence,
    /// Block sizes 3, 4 and 5 are settled completely.
    #[serde(rename = "small-block-size")]
    SmallBlockSize,
    #[serde(rename = "MOLS")]
    Mols,
    #[serde(rename = "RGR-corollary")]
    RgrCorollary,
    #[serde(rename = "RMGR-example")]
    RmgrExample,
    #[serde(rename = "GGR-example")]
    GgrExample,
    #[serde(rename = "open")]
    Open,
}

impl Authority {
    pub fn name(self) -> &'static str {
        match self {
            Authority::NecessaryCondition => "necessary-condition",
            Authority::AffineNonexistence => "affine-nonexistence",
            Authority::SmallBlockSize => "small-block-size",
            Authority::Mols => "MOLS",
            Authority::RgrCorollary => "RGR-corollary",
            Authority::RmgrExample => "RMGR-example",
            Authority::GgrExample => "GGR-example",
            Authority::Open => "open",
        }
    }
}

/// How an existing configuration is built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "via", rename_all = "kebab-case")]
pub enum WitnessRef {
    /// Transversal design from GF(w).
    Mols { q: u64 },
    /// The optimal RGR of order `k` read modulo `kw`.
    RgrEmbedding { length: u64, modulus: u64 },
    /// A shipped RMGR or GGR.
    Stored { name: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceRecord {
    pub k: usize,
    pub w: u64,
    pub status: Status,
    pub authority: Authority,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRef>,
    /// Whether the witness develops over `Z_{kw}`.
    pub cyclic: bool,
}

/// Least `w` with `kw >= 2L + 1`, `L` the optimal RGR length.
pub fn threshold_w(k: usize) -> Result<u64> {
    let l = optimal_rgr_length(k).ok_or(Error::OutOfRange { k, w: 0 })?;
    Ok((2 * l + 1).div_ceil(k as u64))
}

fn is_prime_power(w: u64) -> bool {
    prime_power(w).is_some()
}

/// A witness from MOLS or the RGR corollary, if one applies.
fn generic_witness(k: usize, w: u64) -> Option<(Authority, WitnessRef, bool)> {
    if is_prime_power(w) && w >= k as u64 {
        return Some((Authority::Mols, WitnessRef::Mols { q: w }, false));
    }
    let length = optimal_rgr_length(k)?;
    (w >= threshold_w(k).ok()?).then(|| {
        (
            Authority::RgrCorollary,
            WitnessRef::RgrEmbedding {
                length,
                modulus: k as u64 * w,
            },
            true,
        )
    })
}

pub fn classify(k: usize, w: u64) -> Result<ExistenceRecord> {
    if !(K_MIN..=K_MAX).contains(&k) || w == 0 {
        return Err(Error::OutOfRange { k, w });
    }
    let record = |status, authority, witness, cyclic| ExistenceRecord {
        k,
        w,
        status,
        authority,
        witness,
        cyclic,
    };
    if w < k as u64 {
        return Ok(record(
            Status::Nonexistent,
            Authority::NecessaryCondition,
            None,
            false,
        ));
    }
    if w == k as u64 && (k == 6 || k == 10) {
        return Ok(record(
            Status::Nonexistent,
            Authority::AffineNonexistence,
            None,
            false,
        ));
    }
    let generic = generic_witness(k, w);
    if k <= 5 {
        let (_, witness, cyclic) = generic.expect("every w >= k is constructive for k <= 5");
        return Ok(record(
            Status::Exists,
            Authority::SmallBlockSize,
            Some(witness),
            cyclic,
        ));
    }
    if let Some((authority, witness, cyclic)) = generic {
        return Ok(record(Status::Exists, authority, Some(witness), cyclic));
    }
    if let Some((stored, _)) = stored_witness(k, w) {
        let authority = if stored.is_cyclic() {
            Authority::RmgrExample
        } else {
            Authority::GgrExample
        };
        return Ok(record(
            Status::Exists,
            authority,
            Some(WitnessRef::Stored {
                name: stored.name.clone(),
            }),
            stored.is_cyclic(),
        ));
    }
    Ok(record(Status::Open, Authority::Open, None, false))
}

/// Builds and verifies the configuration behind an `Exists` record.
pub fn materialize(record: &ExistenceRecord) -> Result<(Configuration, Resolution)> {
    let (k, w) = (record.k, record.w);
    let witness = record
        .witness
        .as_ref()
        .ok_or_else(|| Error::NoWitness(format!("({}, {k})", k as u64 * w)))?;
    let (c, r) = match witness {
        WitnessRef::Mols { q } => from_mols(k, *q)?,
        WitnessRef::RgrEmbedding { .. } => {
            let ruler = optimal_rgr_ruler(k).ok_or(Error::OutOfRange { k, w })?;
            develop_rmgr(&embed_as_rmgr(ruler, w)?)?
        }
        WitnessRef::Stored { name } => {
            let (_, verified) = stored_witness(k, w)
                .filter(|(s, _)| &s.name == name)
                .ok_or_else(|| Error::NoWitness(name.clone()))?;
            match verified {
                VerifiedWitness::Rmgr(m) => develop_rmgr(m)?,
                VerifiedWitness::Ggr(x) => develop_ggr(x)?,
            }
        }
    };
    if c.v() as u64 != k as u64 * w || c.k() != k || !c.is_symmetric() {
        return Err(Error::VerificationFailed(format!(
            "witness for ({}, {k}) has the wrong shape",
            k as u64 * w
        )));
    }
    if !is_resolvable_configuration(&c, &r) {
        return Err(Error::VerificationFailed(format!(
            "witness for ({}, {k}) does not verify",
            k as u64 * w
        )));
    }
    Ok((c, r))
}

/// The pairs `(k, w)` with `k <= k_max` and `w` below the corollary
/// threshold that remain open.
pub fn open_cases(k_max: usize) -> Vec<(usize, u64)> {
    (K_MIN..=k_max.min(K_MAX))
        .flat_map(|k| {
            let top = threshold_w(k).expect("tabulated");
            (k as u64..top).map(move |w| (k, w))
        })
        .filter(|&(k, w)| {
            classify(k, w)
                .map(|r| r.status == Status::Open)
                .unwrap_or(false)
        })
        .collect()
}

/// Configurations exist for every `k >= 3` and `w >= k^2`, and for every
/// `w >= k` when `k <= 5`.
pub fn general_existence(k: usize, w: u64) -> bool {
    k >= 3 && (w >= (k * k) as u64 || (k <= 5 && w >= k as u64))
}

/// A cyclic witness: the cubic RGR read modulo `kw`, falling back to the
/// tabulated optimal RGR when the cubic one does not fit. At `k = 3` the
/// cubic family degenerates and only the fallback is used.
pub fn general_witness(k: usize, w: u64) -> Result<ModularRuler> {
    if !general_existence(k, w) {
        return Err(Error::OutOfRange { k, w });
    }
    let cubic = cubic_rgr(k).and_then(|r| embed_as_rmgr(&r, w));
    let m = match (cubic, optimal_rgr_ruler(k)) {
        (Ok(m), _) => m,
        (Err(_), Some(r)) => embed_as_rmgr(r, w)?,
        (Err(e), None) => return Err(e),
    };
    if !m.is_rmgr()? {
        return Err(Error::NotRmgr);
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub k: usize,
    pub length: u64,
    pub numerator: u64,
    pub w_min: u64,
}

/// Rows of the corollary-threshold table for `6 <= k <= k_max`.
pub fn threshold_table(k_max: usize) -> Vec<ThresholdRow> {
    (6..=k_max.min(K_MAX))
        .map(|k| {
            let length = optimal_rgr_length(k).expect("tabulated");
            ThresholdRow {
                k,
                length,
                numerator: 2 * length + 1,
                w_min: threshold_w(k).expect("tabulated"),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceRow {
    pub k: usize,
    pub ws: Vec<u64>,
    pub status: Status,
    pub authority: Authority,
}

/// Classification of `k <= w < threshold_w(k)` for `6 <= k <= k_max`,
/// grouped by status and authority.
pub fn existence_table(k_max: usize) -> Vec<ExistenceRow> {
    let mut rows: Vec<ExistenceRow> = Vec::new();
    for k in 6..=k_max.min(K_MAX) {
        let first = rows.len();
        for w in k as u64..threshold_w(k).expect("tabulated") {
            let rec = classify(k, w).expect("in range");
            match rows[first..]
                .iter_mut()
                .find(|r| r.status == rec.status && r.authority == rec.authority)
            {
                Some(row) => row.ws.push(w),
                None => rows.push(ExistenceRow {
                    k,
                    ws: vec![w],
                    status: rec.status,
                    authority: rec.authority,
                }),
            }
        }
    }
    rows
}

pub fn render_threshold_table(rows: &[ThresholdRow]) -> String {
    let mut out = String::from("k   RGR(k,L)     cyclic resolvable (kw,k)-configurations\n");
    for r in rows {
        let rgr = format!("RGR({},{})", r.k, r.length);
        writeln!(
            out,
            "{:<3} {:<12} w >= ceil({}/{}) = {}",
            r.k, rgr, r.numerator, r.k, r.w_min
        )
        .unwrap();
    }
    out
}

pub fn render_existence_table(rows: &[ExistenceRow]) -> String {
    let mut out = String::from("k   w            existence  authority\n");
    for r in rows {
        let ws: Vec<String> = r.ws.iter().map(u64::to_string).collect();
        let status = match r.status {
            Status::Exists => "yes",
            Status::Nonexistent => "no",
            Status::Open => "?",
        };
        let authority = if r.authority == Authority::Open {
            ""
        } else {
            r.authority.name()
        };
        writeln!(
            out,
            "{:<3} {:<12} {:<10} {}",
            r.k,
            ws.join(","),
            status,
            authority
        )
        .unwrap();
    }
    out.lines()
        .map(str::trim_end)
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}
