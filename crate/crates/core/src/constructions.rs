//! Explicit ruler constructions: Ruzsa's modular rulers with gap rotation,
//! rulers from Costas permutations, the cubic family, and the embedding of
//! an RGR into `Z_{kw}`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{
    binomial2, crt_pair, is_prime, is_primitive_root, mod_pow, primitive_roots,
};
use crate::rulers::{ModularRuler, Ruler};

/// A prime together with one of its primitive roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuzsaParams {
    p: u64,
    g: u64,
}

impl RuzsaParams {
    pub fn new(p: u64, g: u64) -> Result<Self> {
        if !is_prime(p) || p < 3 {
            return Err(Error::NotPrime(p));
        }
        if !is_primitive_root(g, p) || g >= p {
            return Err(Error::NotPrimitiveRoot { p, g });
        }
        Ok(RuzsaParams { p, g })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn g(&self) -> u64 {
        self.g
    }
}

/// The unrotated set A = {a_i}, with a_i ≡ i (mod p-1) and a_i ≡ g^i (mod p).
pub fn ruzsa_set(params: RuzsaParams) -> Vec<u64> {
    let (p, g) = (params.p, params.g);
    (1..p)
        .map(|i| crt_pair(i % (p - 1), p - 1, mod_pow(g, i, p), p))
        .collect()
}

/// Ruzsa's set rotated at its largest cyclic gap and normalized to start at 0.
///
/// Ties between maximal gaps go to the gap with the smallest left endpoint.
pub fn ruzsa_rgr(params: RuzsaParams) -> Ruler {
    let n = params.p * (params.p - 1);
    let mut b = ruzsa_set(params);
    b.sort_unstable();
    let len = b.len();
    // gap i runs from b[i] to b[(i + 1) % len]
    let gap = |i: usize| (b[(i + 1) % len] + n - b[i]) % n;
    let best = (0..len)
        .max_by(|&i, &j| gap(i).cmp(&gap(j)).then(j.cmp(&i)))
        .expect("p >= 3 gives at least one mark");
    let start = b[(best + 1) % len];
    Ruler::from_unsigned(&b.iter().map(|&x| (x + n - start) % n).collect::<Vec<_>>())
        .expect("residues mod p(p-1) of distinct marks stay distinct")
}

/// Best Ruzsa ruler over all primitive roots of `p`: minimal length, then minimal `g`.
pub fn ruzsa_best(p: u64) -> Result<(u64, Ruler)> {
    if !is_prime(p) || p < 3 {
        return Err(Error::NotPrime(p));
    }
    primitive_roots(p)
        .into_par_iter()
        .map(|g| (g, ruzsa_rgr(RuzsaParams { p, g })))
        .min_by(|(g1, r1), (g2, r2)| r1.length().cmp(&r2.length()).then(g1.cmp(g2)))
        .ok_or(Error::NotPrime(p))
}

/// A permutation `f` of `1..=n` with all displacement vectors distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct CostasPermutation {
    image: Vec<u64>,
}

impl TryFrom<Vec<u64>> for CostasPermutation {
    type Error = Error;

    fn try_from(image: Vec<u64>) -> Result<Self> {
        CostasPermutation::new(image)
    }
}

impl From<CostasPermutation> for Vec<u64> {
    fn from(c: CostasPermutation) -> Self {
        c.image
    }
}

impl CostasPermutation {
    /// `image[i - 1] = f(i)`.
    pub fn new(image: Vec<u64>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &y in &image {
            if y == 0 || y as usize > n || seen[y as usize] {
                return Err(Error::NotPermutation(n));
            }
            seen[y as usize] = true;
        }
        if !has_costas_property(&image) {
            return Err(Error::NotCostas);
        }
        Ok(CostasPermutation { image })
    }

    pub fn order(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[u64] {
        &self.image
    }
}

/// For every shift `s`, the differences `f(i+s) - f(i)` are pairwise distinct.
fn has_costas_property(f: &[u64]) -> bool {
    let n = f.len();
    let mut seen = vec![usize::MAX; 2 * n + 1];
    for s in 1..n {
        for i in 0..n - s {
            let d = (f[i + s] as i64 - f[i] as i64 + n as i64) as usize;
            if seen[d] == s {
                return false;
            }
            seen[d] = s;
        }
    }
    true
}

/// Exponential Welch permutation `f(i) = g^i mod p`, of order `p - 1`.
pub fn welch_costas(p: u64, g: u64) -> Result<CostasPermutation> {
    let params = RuzsaParams::new(p, g)?;
    let image = (1..p).map(|i| mod_pow(params.g, i, p)).collect();
    CostasPermutation::new(image)
}

/// Raw marks `x_i = (i-1) m + f(i)` before normalization.
pub fn costas_marks(c: &CostasPermutation, spacing: u64) -> Vec<u64> {
    c.image
        .iter()
        .enumerate()
        .map(|(i, &f)| i as u64 * spacing + f)
        .collect()
}

/// Golomb ruler from a Costas permutation with column spacing `spacing >= 2n - 2`.
///
/// Only `spacing` divisible by `n` guarantees resolvability; see [`costas_rgr`].
pub fn costas_ruler(c: &CostasPermutation, spacing: u64) -> Result<Ruler> {
    let n = c.order() as u64;
    if spacing < (2 * n).saturating_sub(2) {
        return Err(Error::WrongParameters(format!(
            "spacing {spacing} is below 2n - 2 = {}",
            2 * n - 2
        )));
    }
    Ruler::from_unsigned(&costas_marks(c, spacing))
}

/// Resolvable Golomb ruler of order `n` from a Costas permutation, spacing `2n`.
pub fn costas_rgr(c: &CostasPermutation) -> Ruler {
    costas_ruler(c, 2 * c.order() as u64).expect("spacing 2n always satisfies the bound")
}

/// Unverified marks `C(i,2) k - i` for `0 <= i < k`.
pub fn cubic_marks(k: usize) -> Vec<i64> {
    (0..k as i64)
        .map(|i| binomial2(i as u64) as i64 * k as i64 - i)
        .collect()
}

/// Closed-form length `(k+1)(k-2)^2 / 2` of the cubic family.
pub fn cubic_length(k: usize) -> u64 {
    let k = k as u64;
    (k + 1) * (k - 2) * (k - 2) / 2
}

/// The cubic family, normalized and re-verified.
///
/// Fails with [`Error::VerificationFailed`] if the output is not an RGR; this
/// happens at `k = 3`, where the marks collapse to `{0, 1, 2}`.
pub fn cubic_rgr(k: usize) -> Result<Ruler> {
    if k < 3 {
        return Err(Error::OrderTooSmall(k));
    }
    let r = Ruler::new(cubic_marks(k))?;
    if !r.is_golomb() {
        return Err(Error::VerificationFailed(format!(
            "cubic construction at k = {k} gives {:?}, which repeats a difference",
            r.marks()
        )));
    }
    if !r.is_resolvable() {
        return Err(Error::VerificationFailed(format!(
            "cubic construction at k = {k} is not resolvable"
        )));
    }
    Ok(r)
}

/// Reads an RGR of order `k` as a subset of `Z_{kw}`; requires `kw >= 2L+1`.
pub fn embed_as_rmgr(r: &Ruler, w: u64) -> Result<ModularRuler> {
    if !r.is_rgr() {
        return Err(Error::NotRgr);
    }
    let v = r.order() as u64 * w;
    let required = 2 * r.length() + 1;
    if v < required {
        return Err(Error::ModulusTooSmall {
            modulus: v,
            required,
        });
    }
    ModularRuler::new(r.marks().to_vec(), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ruzsa_small_cases() {
        let r = ruzsa_rgr(RuzsaParams::new(5, 2).unwrap());
        assert_eq!(r.marks(), &[0, 2, 3, 9]);
        let mut a = ruzsa_set(RuzsaParams::new(11, 6).unwrap());
        assert_eq!(a, vec![61, 102, 73, 64, 65, 16, 107, 48, 79, 100]);
        a.sort_unstable();
        let r = ruzsa_rgr(RuzsaParams::new(11, 6).unwrap());
        assert_eq!(r.marks(), &[0, 13, 16, 17, 25, 31, 52, 54, 59, 78]);
        assert!(r.is_rgr());
        assert_eq!(ruzsa_best(7).unwrap().1.length(), 20);
    }

    #[test]
    fn ruzsa_best_table_rows() {
        assert_eq!(ruzsa_rgr(RuzsaParams::new(11, 2).unwrap()).length(), 78);
        assert_eq!(ruzsa_best(11).unwrap().1.length(), 78);
        assert_eq!(ruzsa_best(13).unwrap().1.length(), 112);
        assert_eq!(ruzsa_best(23).unwrap().1.length(), 392);
        assert_eq!(ruzsa_best(12), Err(Error::NotPrime(12)));
    }

    #[test]
    fn ruzsa_param_errors() {
        assert_eq!(RuzsaParams::new(9, 2), Err(Error::NotPrime(9)));
        assert_eq!(
            RuzsaParams::new(7, 2),
            Err(Error::NotPrimitiveRoot { p: 7, g: 2 })
        );
    }

    #[test]
    fn welch_examples() {
        assert_eq!(welch_costas(5, 2).unwrap().image(), &[2, 4, 3, 1]);
        assert_eq!(welch_costas(3, 2).unwrap().image(), &[2, 1]);
        assert_eq!(welch_costas(7, 3).unwrap().image(), &[3, 2, 6, 4, 5, 1]);
        assert!(welch_costas(8, 3).is_err());
    }

    #[test]
    fn costas_examples() {
        let c = CostasPermutation::new(vec![2, 1, 3, 4]).unwrap();
        assert_eq!(costas_marks(&c, 8), vec![2, 9, 19, 28]);
        let r = costas_rgr(&c);
        assert!(r.is_rgr());
        assert_eq!(r.length(), 26);

        let one = CostasPermutation::new(vec![1]).unwrap();
        assert_eq!(costas_marks(&one, 2), vec![1]);
        assert_eq!(costas_rgr(&one).length(), 0);

        let w = welch_costas(5, 2).unwrap();
        assert_eq!(costas_marks(&w, 8), vec![2, 12, 19, 25]);
        let r = costas_rgr(&w);
        assert!(r.is_rgr());
        assert_eq!(r.length(), 23);
    }

    #[test]
    fn costas_rejects_bad_input() {
        assert_eq!(CostasPermutation::new(vec![1, 2, 3]), Err(Error::NotCostas));
        assert_eq!(
            CostasPermutation::new(vec![1, 1]),
            Err(Error::NotPermutation(2))
        );
        let c = CostasPermutation::new(vec![2, 1, 3, 4]).unwrap();
        assert!(costas_ruler(&c, 5).is_err());
        assert!(costas_ruler(&c, 6).unwrap().is_golomb());
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(cubic_marks(4), vec![0, -1, 2, 9]);
        assert_eq!(cubic_rgr(4).unwrap().marks(), &[0, 1, 3, 10]);
        assert_eq!(cubic_length(10), 352);
        assert_eq!(cubic_rgr(10).unwrap().length(), 352);
        assert_eq!(cubic_rgr(2), Err(Error::OrderTooSmall(2)));
        // k = 3 collapses to {0, 1, 2}
        let raw = Ruler::new(cubic_marks(3)).unwrap();
        assert_eq!(raw.marks(), &[0, 1, 2]);
        assert!(!raw.is_golomb());
        assert!(raw.is_resolvable());
        assert!(matches!(cubic_rgr(3), Err(Error::VerificationFailed(_))));
    }

    #[test]
    fn embed_examples() {
        let r = Ruler::new([0, 1, 8, 12, 14]).unwrap();
        let m = embed_as_rmgr(&r, 6).unwrap();
        assert_eq!(m.modulus(), 30);
        assert_eq!(m.is_rmgr(), Ok(true));
        let r3 = Ruler::new([0, 1, 5]).unwrap();
        assert_eq!(embed_as_rmgr(&r3, 4).unwrap().is_rmgr(), Ok(true));
        assert_eq!(
            embed_as_rmgr(&r3, 3),
            Err(Error::ModulusTooSmall {
                modulus: 9,
                required: 11
            })
        );
        let direct = ModularRuler::new(vec![0, 1, 5], 9).unwrap();
        assert_eq!(direct.is_rmgr(), Ok(false));
        assert_eq!(
            embed_as_rmgr(&Ruler::new([0, 1, 3]).unwrap(), 10),
            Err(Error::NotRgr)
        );
    }
}
