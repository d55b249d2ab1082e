//! Small-integer number theory used by the constructions and the field code.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, m)` with `q = p^m` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Whether `g` generates the multiplicative group modulo the prime `p`.
pub fn is_primitive_root(g: u64, p: u64) -> bool {
    if p == 2 {
        return g % 2 == 1;
    }
    let g = g % p;
    if g == 0 {
        return false;
    }
    factorize(p - 1)
        .iter()
        .all(|&(q, _)| mod_pow(g, (p - 1) / q, p) != 1)
}

/// All primitive roots modulo the prime `p`, in increasing order.
pub fn primitive_roots(p: u64) -> Vec<u64> {
    let factors = factorize(p - 1);
    (1..p)
        .filter(|&g| {
            factors
                .iter()
                .all(|&(q, _)| mod_pow(g, (p - 1) / q, p) != 1)
        })
        .collect()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Combines `x ≡ a (mod m)` and `x ≡ b (mod n)` for coprime moduli; result in `[0, mn)`.
pub fn crt_pair(a: u64, m: u64, b: u64, n: u64) -> u64 {
    debug_assert_eq!(gcd(m, n), 1);
    // x = a + m * t with m t ≡ b - a (mod n)
    let inv = mod_inverse(m % n, n).expect("moduli must be coprime");
    let diff = (b + n - a % n) % n;
    let t = (diff as u128 * inv as u128 % n as u128) as u64;
    a % m + m * t
}

pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}

pub fn binomial2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn primitive_roots_match_brute_force() {
        for p in [3u64, 5, 7, 11, 13, 23, 97] {
            let brute: Vec<u64> = (1..p)
                .filter(|&g| {
                    let mut seen = vec![false; p as usize];
                    let mut x = 1;
                    for _ in 0..p - 1 {
                        x = x * g % p;
                        seen[x as usize] = true;
                    }
                    seen[1..].iter().all(|&b| b)
                })
                .collect();
            assert_eq!(primitive_roots(p), brute, "p = {p}");
            for g in 1..p {
                assert_eq!(is_primitive_root(g, p), brute.contains(&g));
            }
        }
    }

    #[test]
    fn crt_solves_both_congruences() {
        for i in 1..=10u64 {
            let a = crt_pair(i % 10, 10, mod_pow(6, i, 11), 11);
            assert!(a < 110);
            assert_eq!(a % 10, i % 10);
            assert_eq!(a % 11, mod_pow(6, i, 11));
        }
    }
}
