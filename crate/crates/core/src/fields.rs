//! Finite fields GF(q) for q <= 1024, and the MOLS they provide.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! polynomial coefficients, least significant digit = constant term.

use crate::error::{Error, Result};
use crate::numtheory::prime_power;

pub const MAX_ORDER: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    m: u32,
    /// low coefficients of the monic modulus, `c_0 .. c_{m-1}`
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
}

type Poly = Vec<u32>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Poly {
    // b is monic
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lead = *r.last().unwrap();
        for (i, &c) in b.iter().enumerate() {
            let idx = i + shift;
            r[idx] = (r[idx] + p - (lead * c) % p) % p;
        }
        r = trim(r);
    }
    r
}

fn digits(mut x: u64, p: u32, len: usize) -> Poly {
    let mut d = Vec::with_capacity(len);
    for _ in 0..len {
        d.push((x % p as u64) as u32);
        x /= p as u64;
    }
    d
}

fn monic(low: &[u32]) -> Poly {
    let mut f = low.to_vec();
    f.push(1);
    f
}

/// Irreducibility by trial division against every monic polynomial of degree
/// `1..=deg/2`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..(p as u64).pow(d as u32) {
            let g = monic(&digits(low, p, d));
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `m` over GF(p) whose low coefficients,
/// read as a base-`p` number with `c_{m-1}` most significant, are least.
pub fn least_irreducible(p: u32, m: u32) -> Vec<u32> {
    (0..(p as u64).pow(m))
        .map(|low| digits(low, p, m as usize))
        .find(|low| is_irreducible(&monic(low), p))
        .expect("irreducible polynomials exist in every degree")
}

pub fn make_field(q: u64) -> Result<FiniteField> {
    let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q > MAX_ORDER {
        return Err(Error::FieldTooLarge(q));
    }
    let (p, qs) = (p as u32, q as usize);
    let modulus = least_irreducible(p, m);
    let f = monic(&modulus);
    let mut add = vec![0u16; qs * qs];
    let mut mul = vec![0u16; qs * qs];
    let encode = |c: &[u32]| {
        c.iter()
            .rev()
            .fold(0u64, |acc, &d| acc * p as u64 + d as u64) as u16
    };
    let polys: Vec<Poly> = (0..q).map(|x| digits(x, p, m as usize)).collect();
    for a in 0..qs {
        for b in 0..qs {
            let sum: Poly = polys[a]
                .iter()
                .zip(&polys[b])
                .map(|(x, y)| (x + y) % p)
                .collect();
            add[a * qs + b] = encode(&sum);
            let mut prod = vec![0u32; 2 * m as usize - 1];
            for (i, &x) in polys[a].iter().enumerate() {
                for (j, &y) in polys[b].iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            mul[a * qs + b] = encode(&poly_rem(&prod, &f, p));
        }
    }
    Ok(FiniteField {
        p,
        m,
        modulus,
        add,
        mul,
    })
}

impl FiniteField {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.m)
    }

    /// Low coefficients `c_0 .. c_{m-1}` of the monic modulus.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.order() + b as usize] as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order() + b as usize] as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.order() as u32)
            .find(|&b| self.add(a, b) == 0)
            .unwrap()
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (1..self.order() as u32).find(|&b| self.mul(a, b) == 1)
    }
}

/// A latin square stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<u32>,
}

impl LatinSquare {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.cells[row * self.n + col]
    }

    pub fn is_latin(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            let mut rows = vec![false; n];
            let mut cols = vec![false; n];
            (0..n).all(|j| {
                let a = self.get(i, j) as usize;
                let b = self.get(j, i) as usize;
                a < n
                    && b < n
                    && !std::mem::replace(&mut rows[a], true)
                    && !std::mem::replace(&mut cols[b], true)
            })
        })
    }

    pub fn is_orthogonal_to(&self, other: &LatinSquare) -> bool {
        let n = self.n;
        if other.n != n {
            return false;
        }
        let mut seen = vec![false; n * n];
        (0..n * n).all(|c| {
            let pair = self.cells[c] as usize * n + other.cells[c] as usize;
            !std::mem::replace(&mut seen[pair], true)
        })
    }
}

/// `count` MOLS of order `q`: `L_c(a, b) = a + c b` for the first `count`
/// nonzero field elements `c`.
pub fn mols(q: u64, count: usize) -> Result<Vec<LatinSquare>> {
    let field = make_field(q)?;
    let n = field.order();
    if count == 0 || count > n - 1 {
        return Err(Error::TooManyRequested {
            requested: count,
            max: n - 1,
        });
    }
    Ok((1..=count as u32)
        .map(|c| LatinSquare {
            n,
            cells: (0..n * n)
                .map(|i| field.add((i / n) as u32, field.mul(c, (i % n) as u32)))
                .collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field(f: &FiniteField) {
        let q = f.order() as u32;
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert!(f.inv(a).is_some(), "no inverse for {a}");
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19] {
            check_field(&make_field(q).unwrap());
        }
    }

    #[test]
    fn chosen_moduli() {
        let f7 = make_field(7).unwrap();
        assert_eq!((f7.characteristic(), f7.degree()), (7, 1));
        assert_eq!(f7.mul(3, 5), 1);
        // x^3 + x + 1
        assert_eq!(make_field(8).unwrap().modulus(), &[1, 1, 0]);
        // x^2 + 1
        assert_eq!(make_field(9).unwrap().modulus(), &[1, 0]);
    }

    #[test]
    fn cubic_moduli_over_gf2_by_root_test() {
        // a cubic is irreducible iff it has no root
        let irreducible: Vec<Vec<u32>> = (0..8u64)
            .map(|low| digits(low, 2, 3))
            .filter(|low| {
                let f = monic(low);
                (0..2u32).all(|x| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % 2) != 0)
            })
            .collect();
        assert_eq!(irreducible, vec![vec![1, 1, 0], vec![1, 0, 1]]);
        assert_eq!(least_irreducible(2, 3), irreducible[0]);
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(6), Err(Error::NotPrimePower(6)));
        assert_eq!(make_field(2048), Err(Error::FieldTooLarge(2048)));
        assert!(matches!(
            mols(5, 5),
            Err(Error::TooManyRequested {
                requested: 5,
                max: 4
            })
        ));
    }

    fn brute_orthogonal(a: &LatinSquare, b: &LatinSquare) -> bool {
        let n = a.order();
        let mut pairs = std::collections::HashSet::new();
        for i in 0..n {
            for j in 0..n {
                pairs.insert((a.get(i, j), b.get(i, j)));
            }
        }
        pairs.len() == n * n
    }

    #[test]
    fn mols_are_latin_and_orthogonal() {
        for (q, count) in [(3, 2), (2, 1), (8, 7), (9, 8), (7, 6)] {
            let squares = mols(q, count).unwrap();
            assert_eq!(squares.len(), count);
            for s in &squares {
                assert!(s.is_latin());
            }
            for i in 0..count {
                for j in i + 1..count {
                    assert!(brute_orthogonal(&squares[i], &squares[j]));
                    assert!(squares[i].is_orthogonal_to(&squares[j]));
                }
            }
        }
    }
}
