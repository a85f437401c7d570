use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer-valued rational, convenient in tests and examples.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Raise to a possibly negative integer power. Panics on `0^negative`.
pub(crate) fn pow_signed(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow::Pow::pow(x.clone(), e as u64)
    } else {
        assert!(!x.is_zero(), "zero has no negative powers");
        num_traits::pow::Pow::pow(x.clone().recip(), (-e) as u64)
    }
}

fn int_nth_root_exact(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.is_negative() {
        if n % 2 == 0 {
            return None;
        }
        return int_nth_root_exact(&(-x), n).map(|r| -r);
    }
    let root = num_integer::Roots::nth_root(x, n);
    if num_traits::pow::Pow::pow(root.clone(), n) == *x {
        Some(root)
    } else {
        None
    }
}

/// Exact rational `n`-th root, when one exists. For even `n` the positive
/// root is returned.
pub fn rational_nth_root(x: &Rational, n: u32) -> Option<Rational> {
    assert!(n >= 1);
    if n == 1 {
        return Some(x.clone());
    }
    let num = int_nth_root_exact(x.numer(), n)?;
    let den = int_nth_root_exact(x.denom(), n)?;
    Some(Rational::new(num, den))
}

/// gcd of a nonempty list of positive integers.
pub(crate) fn gcd_all(values: &[u32]) -> u32 {
    values.iter().fold(0u32, |acc, &v| acc.gcd(&v))
}

/// Integers `u_i` with `sum u_i * k_i = gcd(k)`, by iterated extended gcd.
pub(crate) fn bezout_for_gcd(ks: &[u32]) -> Vec<i64> {
    assert!(!ks.is_empty());
    // running gcd g of the prefix together with coefficients producing it
    let mut coeffs: Vec<i64> = vec![0; ks.len()];
    let mut g: i64 = 0;
    for (i, &k) in ks.iter().enumerate() {
        let (new_g, s, t) = extended_gcd(g, k as i64);
        for c in coeffs.iter_mut().take(i) {
            *c *= s;
        }
        coeffs[i] = t;
        g = new_g;
    }
    coeffs
}

fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a.abs(), a.signum(), 0);
    }
    let (g, s, t) = extended_gcd(b, a.rem_euclid(b));
    (g, t, s - (a.div_euclid(b)) * t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nth_roots() {
        assert_eq!(rational_nth_root(&ratio(4, 9), 2), Some(ratio(2, 3)));
        assert_eq!(rational_nth_root(&rat(-8), 3), Some(rat(-2)));
        assert_eq!(rational_nth_root(&rat(-4), 2), None);
        assert_eq!(rational_nth_root(&ratio(1, 2), 2), None);
        assert_eq!(rational_nth_root(&rat(1), 5), Some(rat(1)));
    }

    #[test]
    fn bezout_combination_hits_gcd() {
        for ks in [vec![2u32], vec![2, 3], vec![4, 6], vec![6, 10, 15]] {
            let g = gcd_all(&ks) as i64;
            let us = bezout_for_gcd(&ks);
            let total: i64 = ks.iter().zip(&us).map(|(&k, &u)| k as i64 * u).sum();
            assert_eq!(total, g, "ks={ks:?} us={us:?}");
        }
    }

    #[test]
    fn signed_powers() {
        assert_eq!(pow_signed(&ratio(2, 3), -2), ratio(9, 4));
        assert_eq!(pow_signed(&rat(5), 0), rat(1));
        assert_eq!(pow_signed(&rat(2), 3), rat(8));
    }
}
