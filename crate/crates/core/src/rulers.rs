//! Golomb rulers, modular Golomb rulers and the resolvability predicates.
//!
//! A [`Ruler`] is always stored normalized so that its smallest mark is 0.
//! A [`ModularRuler`] keeps its marks as given, reduced into `[0, v)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::binomial2;

/// A finite set of integer marks, normalized to start at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RulerRepr", into = "RulerRepr")]
pub struct Ruler {
    marks: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RulerRepr {
    marks: Vec<i64>,
}

impl TryFrom<RulerRepr> for Ruler {
    type Error = Error;

    fn try_from(repr: RulerRepr) -> Result<Self> {
        Ruler::new(repr.marks)
    }
}

impl From<Ruler> for RulerRepr {
    fn from(r: Ruler) -> Self {
        RulerRepr {
            marks: r.marks.iter().map(|&m| m as i64).collect(),
        }
    }
}

impl Ruler {
    /// Builds a ruler from marks in any order, shifting so the minimum is 0.
    pub fn new(marks: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut raw: Vec<i64> = marks.into_iter().collect();
        raw.sort_unstable();
        if raw.is_empty() {
            return Err(Error::EmptyRuler);
        }
        if let Some(w) = raw.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMark(w[0]));
        }
        let min = raw[0];
        Ok(Ruler {
            marks: raw.iter().map(|&x| (x - min) as u64).collect(),
        })
    }

    pub fn from_unsigned(marks: &[u64]) -> Result<Self> {
        Ruler::new(marks.iter().map(|&m| m as i64))
    }

    pub fn marks(&self) -> &[u64] {
        &self.marks
    }

    pub fn order(&self) -> usize {
        self.marks.len()
    }

    pub fn length(&self) -> u64 {
        *self.marks.last().unwrap()
    }

    /// The reflected ruler `L - x`.
    pub fn mirror(&self) -> Ruler {
        let l = self.length();
        let mut marks: Vec<u64> = self.marks.iter().map(|&x| l - x).collect();
        marks.reverse();
        Ruler { marks }
    }

    pub fn is_golomb(&self) -> bool {
        let mut seen = vec![false; self.length() as usize + 1];
        for (j, &b) in self.marks.iter().enumerate() {
            for &a in &self.marks[..j] {
                let d = (b - a) as usize;
                if seen[d] {
                    return false;
                }
                seen[d] = true;
            }
        }
        true
    }

    pub fn is_resolvable(&self) -> bool {
        covers_residues(self.marks.iter().copied(), self.order())
    }

    /// Golomb and resolvable.
    pub fn is_rgr(&self) -> bool {
        self.is_golomb() && self.is_resolvable()
    }

    /// Short human label such as `RGR(5,14)`.
    pub fn label(&self) -> String {
        let kind = match (self.is_golomb(), self.is_resolvable()) {
            (true, true) => "RGR",
            (true, false) => "GR",
            _ => "ruler",
        };
        format!("{kind}({},{})", self.order(), self.length())
    }
}

fn covers_residues(marks: impl Iterator<Item = u64>, k: usize) -> bool {
    let mut seen = vec![false; k];
    for x in marks {
        let r = (x % k as u64) as usize;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// Golomb check on raw (possibly negative, unsorted) marks.
pub fn golomb_marks(marks: &[i64]) -> bool {
    Ruler::new(marks.iter().copied()).is_ok_and(|r| r.is_golomb())
}

/// Resolvability check on raw marks: residues mod `marks.len()` are all distinct.
pub fn resolvable_marks(marks: &[i64]) -> bool {
    let k = marks.len() as i64;
    let mut seen = vec![false; marks.len()];
    for &x in marks {
        let r = x.rem_euclid(k) as usize;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// Marks interpreted in `Z_v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ModularRepr", into = "ModularRepr")]
pub struct ModularRuler {
    marks: Vec<u64>,
    modulus: u64,
}

#[derive(Serialize, Deserialize)]
struct ModularRepr {
    marks: Vec<u64>,
    modulus: u64,
}

impl TryFrom<ModularRepr> for ModularRuler {
    type Error = Error;

    fn try_from(repr: ModularRepr) -> Result<Self> {
        ModularRuler::new(repr.marks, repr.modulus)
    }
}

impl From<ModularRuler> for ModularRepr {
    fn from(m: ModularRuler) -> Self {
        ModularRepr {
            marks: m.marks,
            modulus: m.modulus,
        }
    }
}

impl ModularRuler {
    pub fn new(mut marks: Vec<u64>, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if marks.is_empty() {
            return Err(Error::EmptyRuler);
        }
        if let Some(&mark) = marks.iter().find(|&&m| m >= modulus) {
            return Err(Error::MarkOutOfRange { mark, modulus });
        }
        marks.sort_unstable();
        if let Some(w) = marks.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMark(w[0] as i64));
        }
        Ok(ModularRuler { marks, modulus })
    }

    pub fn marks(&self) -> &[u64] {
        &self.marks
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.marks.len()
    }

    /// The marks read as an ordinary (non-modular) ruler.
    pub fn as_ruler(&self) -> Ruler {
        Ruler::from_unsigned(&self.marks).expect("marks are distinct and nonempty")
    }

    /// `X + c (mod v)`.
    pub fn translate(&self, c: u64) -> ModularRuler {
        let v = self.modulus;
        let marks = self.marks.iter().map(|&x| (x + c % v) % v).collect();
        ModularRuler::new(marks, v).expect("translation preserves distinctness")
    }

    /// All `k(k-1)` directed differences are distinct in `Z_v`.
    pub fn is_mgr(&self) -> bool {
        let v = self.modulus;
        let mut seen = vec![false; v as usize];
        for &a in &self.marks {
            for &b in &self.marks {
                if a == b {
                    continue;
                }
                let d = ((a + v - b) % v) as usize;
                if seen[d] {
                    return false;
                }
                seen[d] = true;
            }
        }
        true
    }

    /// MGR whose marks form a transversal of the residues mod `k`.
    pub fn is_rmgr(&self) -> Result<bool> {
        let k = self.order();
        if !self.modulus.is_multiple_of(k as u64) {
            return Err(Error::ModulusNotDivisible {
                modulus: self.modulus,
                k,
            });
        }
        Ok(self.is_mgr() && covers_residues(self.marks.iter().copied(), k))
    }
}

/// Counting inequality `L - floor(L/k) >= C(k,2)`.
pub fn counting_inequality_holds(k: usize, length: u64) -> bool {
    length - length / k as u64 >= binomial2(k as u64)
}

/// Smallest length permitted for an RGR of order `k` by the counting argument.
pub fn counting_bound(k: usize) -> u64 {
    let k = k as u64;
    if k.is_multiple_of(2) {
        k * k / 2 - 1
    } else {
        (k * k - 1) / 2
    }
}

const SQRT_TOLERANCE: f64 = 1e-9;

/// `k^2 - 2k sqrt(k) + sqrt(k) - 2`, a strict lower bound on the length of any
/// Golomb ruler of order `k`.
pub fn golomb_lower_bound(k: usize) -> f64 {
    let kf = k as f64;
    let s = exact_sqrt(k as u64)
        .map(|s| s as f64)
        .unwrap_or_else(|| kf.sqrt());
    kf * kf - 2.0 * kf * s + s - 2.0
}

fn exact_sqrt(n: u64) -> Option<u64> {
    let s = (n as f64).sqrt().round() as u64;
    (s * s == n).then_some(s)
}

/// Least integer length strictly greater than [`golomb_lower_bound`], clamped at 0.
pub fn golomb_min_length(k: usize) -> u64 {
    let b = golomb_lower_bound(k);
    let nearest = b.round();
    let least = if (b - nearest).abs() < SQRT_TOLERANCE {
        nearest + 1.0
    } else {
        b.ceil()
    };
    least.max(0.0) as u64
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub k: usize,
    pub counting_bound: u64,
    pub golomb_bound: f64,
    pub effective_bound: u64,
}

pub fn bound_report(k: usize) -> BoundReport {
    let counting = counting_bound(k);
    BoundReport {
        k,
        counting_bound: counting,
        golomb_bound: golomb_lower_bound(k),
        effective_bound: counting.max(golomb_min_length(k)),
    }
}
