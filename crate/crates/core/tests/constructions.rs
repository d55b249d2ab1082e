mod common;

use std::collections::HashSet;

use rgrkit::constructions::{
    costas_rgr, costas_ruler, cubic_length, cubic_marks, cubic_rgr, ruzsa_best, ruzsa_rgr,
    ruzsa_set, welch_costas, CostasPermutation, RuzsaParams,
};
use rgrkit::numtheory::{is_prime, mod_pow};

fn primitive_roots_naive(p: u64) -> Vec<u64> {
    (1..p)
        .filter(|&g| {
            let powers: HashSet<u64> = (1..p).map(|i| mod_pow(g, i, p)).collect();
            powers.len() == p as usize - 1
        })
        .collect()
}

fn signed(marks: &[u64]) -> Vec<i64> {
    marks.iter().map(|&x| x as i64).collect()
}

#[test]
fn ruzsa_sets_match_brute_force_crt() {
    for p in (3..60).filter(|&p| is_prime(p)) {
        for g in primitive_roots_naive(p) {
            let n = p * (p - 1);
            let expected: Vec<u64> = (1..p)
                .map(|i| {
                    (0..n)
                        .find(|&a| a % (p - 1) == i % (p - 1) && a % p == mod_pow(g, i, p))
                        .unwrap()
                })
                .collect();
            assert_eq!(
                ruzsa_set(RuzsaParams::new(p, g).unwrap()),
                expected,
                "p={p} g={g}"
            );
        }
    }
}

#[test]
fn every_ruzsa_ruler_is_short_and_resolvable() {
    for p in (3..100).filter(|&p| is_prime(p)) {
        let roots = primitive_roots_naive(p);
        let mut best = u64::MAX;
        for &g in &roots {
            let r = ruzsa_rgr(RuzsaParams::new(p, g).unwrap());
            let marks = signed(r.marks());
            assert_eq!(r.order(), p as usize - 1);
            assert!(
                common::golomb(&marks) && common::resolvable(&marks),
                "p={p} g={g}"
            );
            assert!(r.length() <= p * p - 2 * p, "p={p} g={g} L={}", r.length());
            best = best.min(r.length());
        }
        assert_eq!(ruzsa_best(p).unwrap().1.length(), best);
    }
}

#[test]
fn welch_permutations_are_costas() {
    for p in (3..40).filter(|&p| is_prime(p)) {
        for g in primitive_roots_naive(p) {
            let c = welch_costas(p, g).unwrap();
            let f = c.image();
            let n = f.len();
            assert_eq!(n, p as usize - 1);
            let expected: Vec<u64> = (1..p).map(|i| mod_pow(g, i, p)).collect();
            assert_eq!(f, &expected[..]);
            let mut vectors = HashSet::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        assert!(
                            vectors.insert((j as i64 - i as i64, f[j] as i64 - f[i] as i64)),
                            "p={p} g={g}"
                        );
                    }
                }
            }
            for spacing in [2 * n as u64 - 2, 2 * n as u64 + 3] {
                let r = costas_ruler(&c, spacing).unwrap();
                assert!(common::golomb(&signed(r.marks())));
            }
            let r = costas_rgr(&c);
            assert!(common::golomb(&signed(r.marks())) && common::resolvable(&signed(r.marks())));
            assert!(r.length() <= (n as u64 - 1) * (2 * n as u64 + 1));
        }
    }
}

#[test]
fn non_costas_permutations_are_rejected() {
    // (2,1,4,3) repeats the vector (1,-1)
    assert!(CostasPermutation::new(vec![2, 1, 4, 3]).is_err());
    assert!(CostasPermutation::new(vec![1, 1, 2]).is_err());
}

#[test]
fn cubic_family_from_four_to_two_hundred() {
    for k in 4..=200 {
        let r = cubic_rgr(k).unwrap();
        let marks = signed(r.marks());
        assert!(common::golomb(&marks), "k={k}");
        assert!(common::resolvable(&marks), "k={k}");
        assert_eq!(r.length(), ((k + 1) * (k - 2) * (k - 2) / 2) as u64);
        assert_eq!(r.length(), cubic_length(k));
    }
}

#[test]
fn cubic_family_at_three_repeats_a_difference() {
    let raw = cubic_marks(3);
    let mut sorted = raw.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![-1, 0, 1]);
    assert!(!common::golomb(&raw));
    assert!(common::resolvable(&raw));
    assert!(cubic_rgr(3).is_err());
}
