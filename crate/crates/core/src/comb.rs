//! Exact combinatorial helpers on arbitrary-precision integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Binomial coefficient `C(n, k)` as an exact big integer; zero when
/// `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Signed binomial for alternating-sum formulas.
pub fn binom_i(n: u64, k: u64) -> BigInt {
    BigInt::from(binom(n, k))
}

/// `q^e` as a big integer.
pub fn upow(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// Gaussian binomial `[k r]_q`: the number of `r`-dimensional subspaces of
/// an `k`-dimensional space over `GF(q)`.
pub fn gaussian_binom(k: u64, r: u64, q: u64) -> BigUint {
    if r > k {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        num *= upow(q, k - i) - 1u32;
        den *= upow(q, i + 1) - 1u32;
    }
    num / den
}

/// Exact division, rejecting any nonzero remainder.
pub fn exact_div(num: &BigUint, den: &BigUint, what: &str) -> Result<BigUint> {
    if den.is_zero() {
        return Err(Error::NotExact(format!("{what}: division by zero")));
    }
    let (quot, rem) = num.div_rem(den);
    if !rem.is_zero() {
        return Err(Error::NotExact(format!("{what}: {num}/{den} is not an integer")));
    }
    Ok(quot)
}

/// Exact signed division; the quotient must also be non-negative.
pub fn exact_div_nonneg(num: &BigInt, den: &BigInt, what: &str) -> Result<BigUint> {
    if den.is_zero() {
        return Err(Error::NotExact(format!("{what}: division by zero")));
    }
    let (quot, rem) = num.div_rem(den);
    if !rem.is_zero() {
        return Err(Error::NotExact(format!("{what}: {num}/{den} is not an integer")));
    }
    if quot.is_negative() {
        return Err(Error::NotExact(format!("{what}: value {quot} is negative")));
    }
    Ok(quot.to_biguint().unwrap())
}

/// Visit every `r`-subset of `{0, .., n-1}` in lexicographic order.
pub fn for_each_combination<F: FnMut(&[usize])>(n: usize, r: usize, mut visit: F) {
    if r > n {
        return;
    }
    if r == 0 {
        visit(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        visit(&idx);
        let mut i = r;
        while i > 0 && idx[i - 1] == n - r + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
