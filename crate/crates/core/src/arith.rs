//! Small integer helpers: primality and prime-power decomposition.

/// Trial-division primality test.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Returns `(p, e)` with `n = p^e`, `e >= 1`, when `n` is a prime power.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    let mut m = n;
    let mut e = 0;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

pub fn smallest_prime_factor(n: usize) -> usize {
    debug_assert!(n >= 2);
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut m = n;
    let mut part = 1;
    while m % p == 0 {
        m /= p;
        part *= p;
    }
    part
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow(base: usize, exp: u32) -> Option<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_below_thirty() {
        let primes: alloc::vec::Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(p_part(96, 2), 32);
        assert_eq!(p_part(96, 5), 1);
    }
}
