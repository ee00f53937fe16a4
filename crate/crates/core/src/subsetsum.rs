//! Counting subsets of nonzero field elements by their sum.
//!
//! `N(r, b)` below is the number of `r`-element subsets of `GF(q)*` whose
//! elements sum to `b`.  A classical character-sum evaluation collapses it
//! to binomials:
//!
//! `N(r, b) = (1/q) [ C(q-1, r) + (-1)^(r + floor(r/p)) v(b) C(q/p - 1, floor(r/p)) ]`
//!
//! with `v(0) = q - 1` and `v(b) = -1` otherwise, so the count only
//! depends on whether `b` vanishes.  On top of it, inclusion-exclusion
//! counts subsets drawn from `GF(q)*` minus two prescribed elements, the
//! quantity controlling minimum-weight words in the exponent-gap family.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::comb::{binom, binom_i, exact_div_nonneg};
use crate::gf::{Elem, Field};
use crate::{Error, Result};

/// `N(r, b)`: subsets of `GF(q)*` of size `r` summing to `b`, by the
/// closed formula.
pub fn count_closed(f: &Field, r: u64, b: Elem) -> BigUint {
    let q = f.q();
    let p = f.p();
    let v = if b == 0 { BigInt::from(q - 1) } else { BigInt::from(-1) };
    let fluct = binom_i(q / p - 1, r / p) * v;
    let mut total = binom_i(q - 1, r);
    if (r + r / p) % 2 == 0 {
        total += fluct;
    } else {
        total -= fluct;
    }
    exact_div_nonneg(&total, &BigInt::from(q), "closed subset-sum count")
        .expect("the closed subset-sum count is a nonnegative integer")
}

/// `N(r, b, A)` for `A = GF(q)*` minus an explicit exclusion list, by
/// direct enumeration of `r`-subsets.  Oracle-grade, capped.
pub fn count_brute(f: &Field, r: usize, b: Elem, excluded: &[Elem], cap: u64) -> Result<BigUint> {
    let allowed: Vec<Elem> = f.elements().filter(|&x| x != 0 && !excluded.contains(&x)).collect();
    let work = binom(allowed.len() as u64, r as u64);
    if work > cap.into() {
        return Err(Error::CapExceeded {
            needed: u128::try_from(&work).unwrap_or(u128::MAX),
            cap: cap as u128,
        });
    }
    let mut count = 0u64;
    crate::comb::for_each_combination(allowed.len(), r, |subset| {
        let sum = subset.iter().fold(0 as Elem, |acc, &i| f.add(acc, allowed[i]));
        if sum == b {
            count += 1;
        }
    });
    Ok(BigUint::from(count))
}

/// Subsets of `GF(q)* \ {x1, x2}` of size `k - 2` summing to `x1 + x2`,
/// evaluated exactly by unrolling inclusion-exclusion down to the closed
/// one-line count:
///
/// `N(r, t, A \ {x}) = sum_j (-1)^j N(r-j, t - j*x, A)`,
///
/// applied once for `x2` and once for `x1`.  Over characteristic two the
/// result does not depend on which distinct nonzero pair is chosen.
pub fn count_restricted(f: &Field, k: usize, x1: Elem, x2: Elem) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::Unsupported(format!(
            "restricted count needs k >= 2, got {k}"
        )));
    }
    if x1 == 0 || x2 == 0 || x1 == x2 {
        return Err(Error::Unsupported(
            "the excluded pair must be distinct nonzero elements".into(),
        ));
    }
    let r = (k - 2) as u64;
    let t = f.add(x1, x2);
    let mut acc = BigInt::zero();
    for i in 0..=r {
        for j in 0..=(r - i) {
            let b = f.sub(f.sub(t, f.int_mul(i, x2)), f.int_mul(j, x1));
            let term = BigInt::from(count_closed(f, r - i - j, b));
            if (i + j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
    }
    acc.to_biguint().ok_or_else(|| {
        Error::Inconsistent(format!("restricted subset-sum count came out negative: {acc}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_formula_matches_enumeration_for_every_sum() {
        for (p, h) in [(2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)] {
            let f = Field::new(p, h, None).unwrap();
            let q = f.q();
            for r in 0..q {
                let zero_count = count_brute(&f, r as usize, 0, &[], 1 << 22).unwrap();
                assert_eq!(count_closed(&f, r, 0), zero_count, "q={q} r={r} b=0");
                // Every nonzero target gives one and the same count.
                for b in 1..q as Elem {
                    let c = count_brute(&f, r as usize, b, &[], 1 << 22).unwrap();
                    assert_eq!(count_closed(&f, r, b), c, "q={q} r={r} b={b}");
                }
            }
        }
    }

    #[test]
    fn zero_sum_counts_vanish_just_below_full_size() {
        // In characteristic two no (q-3)- or (q-2)-subset of GF(q)* sums
        // to zero; these two facts make the largest family members MDS.
        for h in [3u32, 4, 5] {
            let f = Field::new(2, h, None).unwrap();
            let q = f.q();
            assert!(count_closed(&f, q - 3, 0).is_zero(), "q={q}");
            assert!(count_closed(&f, q - 2, 0).is_zero(), "q={q}");
            // The full set, by contrast, does sum to zero.
            assert_eq!(count_closed(&f, q - 1, 0), 1u32.into(), "q={q}");
        }
    }

    #[test]
    fn restricted_count_is_pair_independent_and_matches_enumeration() {
        let f = Field::new(2, 3, None).unwrap();
        for k in 2..=7 {
            let mut values = std::collections::HashSet::new();
            for x1 in 1..8 as Elem {
                for x2 in 1..8 as Elem {
                    if x1 == x2 {
                        continue;
                    }
                    let fast = count_restricted(&f, k, x1, x2).unwrap();
                    let slow = count_brute(&f, k - 2, f.add(x1, x2), &[x1, x2], 1 << 20).unwrap();
                    assert_eq!(fast, slow, "k={k} pair=({x1},{x2})");
                    values.insert(fast);
                }
            }
            assert_eq!(values.len(), 1, "k={k}: one value across all pairs");
        }
    }

    #[test]
    fn restricted_count_known_values() {
        // q=8, k=4: two pairs away from {x1, x2} sum to x1 + x2.
        let f8 = Field::new(2, 3, None).unwrap();
        assert_eq!(count_restricted(&f8, 4, 1, 2).unwrap(), 2u32.into());
        // q=16, k=7.
        let f16 = Field::new(2, 4, None).unwrap();
        assert_eq!(count_restricted(&f16, 7, 1, 2).unwrap(), 87u32.into());
        let slow = count_brute(&f16, 5, f16.add(1, 2), &[1, 2], 1 << 20).unwrap();
        assert_eq!(slow, 87u32.into());
    }

    #[test]
    fn restricted_count_works_in_odd_characteristic_too() {
        // The inclusion-exclusion identity is characteristic-agnostic even
        // though pair-independence is special to characteristic two.
        let f = Field::new(5, 1, None).unwrap();
        for k in 2..=5 {
            for (x1, x2) in [(1, 2), (1, 4), (3, 4)] {
                let fast = count_restricted(&f, k, x1, x2).unwrap();
                let slow = count_brute(&f, k - 2, f.add(x1, x2), &[x1, x2], 1 << 20).unwrap();
                assert_eq!(fast, slow, "k={k} pair=({x1},{x2})");
            }
        }
    }

    #[test]
    fn input_validation() {
        let f = Field::new(2, 3, None).unwrap();
        assert!(count_restricted(&f, 1, 1, 2).is_err());
        assert!(count_restricted(&f, 4, 0, 2).is_err());
        assert!(count_restricted(&f, 4, 3, 3).is_err());
        assert!(matches!(
            count_brute(&f, 3, 0, &[], 10),
            Err(Error::CapExceeded { needed: 35, cap: 10 })
        ));
    }
}
