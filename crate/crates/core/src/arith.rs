//! Small integer helpers: gcd/lcm, primality by trial division, factorization,
//! Euler's totient.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Prime divisors of n, ascending.
pub fn prime_divisors_of(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Euler's totient function.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1, "totient requires n >= 1");
    let mut result = n;
    for (p, _) in factorize(n) {
        result = result / p * (p - 1);
    }
    result
}

/// Largest power of p dividing n.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        part *= p;
        n /= p;
    }
    part
}

pub fn is_prime_power(n: u64) -> bool {
    n == 1 || factorize(n).len() == 1
}

/// All divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of a modulo m (a coprime to m).
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    assert!(gcd(a, m) == 1);
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_small_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(7), 6);
        // direct count of coprime residues in [1, 30]
        let count = (1..=30).filter(|&k| gcd(k, 30) == 1).count() as u64;
        assert_eq!(count, 8);
        assert_eq!(totient(30), 8);
    }

    #[test]
    fn totient_matches_coprime_count() {
        for n in 1..200u64 {
            let count = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(totient(n), count, "totient({n})");
        }
    }

    #[test]
    fn factorize_and_divisors() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(prime_divisors_of(30), vec![2, 3, 5]);
        assert!(prime_divisors_of(1).is_empty());
    }

    #[test]
    fn prime_checks() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime_power(8) && is_prime_power(27) && !is_prime_power(12));
    }

    #[test]
    fn mult_order() {
        // 2 has order 4 mod 5
        assert_eq!(multiplicative_order(2, 5), 4);
        assert_eq!(pow_mod(2, 4, 5), 1);
    }
}
