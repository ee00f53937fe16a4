//! An infinite family of codes over `GF(2^h)` built from consecutive
//! powers of a primitive element with one skipped exponent.
//!
//! For `q = 2^h >= 8` and a primitive `a`, the `k x (q-1)` matrix whose
//! column at position `i` is `(a^(i*e))_{e in E}` with exponent list
//! `E = {0, 1, .., k-2, k}` generates the member `C_k`.  Every `k x k`
//! minor is a generalized Vandermonde determinant that factors as a plain
//! Vandermonde times the elementary symmetric sum of the chosen column
//! elements, so singular minors correspond exactly to `k`-subsets of
//! `GF(q)*` that sum to zero.  Consequences handled here:
//!
//! * `C_(q-3)` and `C_(q-2)` are MDS (no such subsets exist there);
//! * for `3 <= k <= q-4` the code is `[q-1, k, q-k-1]` with defect one on
//!   both sides, its minimum-weight count and whole distribution are
//!   pinned down by the restricted subset-sum count `lambda_1`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::codecore::{
    nmds_distribution, EnumOpts, LinearCode, LmdsReport, Verdict, WeightDistribution,
};
use crate::comb::{binom, exact_div};
use crate::gf::{Elem, Field};
use crate::subsetsum::{count_closed, count_restricted};
use crate::{Error, Result};

/// Raw generator rows of the family member: entry `(e, i)` is `a^(i*e)`
/// for `e` running over `{0, 1, .., k-2, k}` and `i` over `0..q-1`.
pub fn ck_matrix(f: &Field, k: usize) -> Result<Vec<Vec<Elem>>> {
    let q = f.q();
    if k < 1 || k as u64 > q - 2 {
        return Err(Error::Unsupported(format!(
            "family member needs 1 <= k <= q-2, got k={k} over GF({q})"
        )));
    }
    let exponents: Vec<u64> = (0..k as u64 - 1).chain([k as u64]).collect();
    Ok(exponents
        .iter()
        .map(|&e| (0..q - 1).map(|i| f.alpha_pow(i * e)).collect())
        .collect())
}

/// The family member `C_k` as a code (rows reduced to canonical form).
pub fn build_ck(f: &Field, k: usize) -> Result<LinearCode> {
    let code = LinearCode::from_rows(f.clone(), ck_matrix(f, k)?)?;
    if code.k() != k {
        return Err(Error::Inconsistent(format!(
            "family generator for k={k} has rank {}",
            code.k()
        )));
    }
    Ok(code)
}

fn family_field(f: &Field) -> Result<()> {
    if f.p() != 2 || f.h() < 3 {
        return Err(Error::Unsupported(format!(
            "the family is defined over GF(2^h) with h >= 3, got {f}"
        )));
    }
    Ok(())
}

fn family_k(f: &Field, k: usize) -> Result<()> {
    family_field(f)?;
    if k < 3 || k as u64 > f.q() - 2 {
        return Err(Error::Unsupported(format!(
            "family claims cover 3 <= k <= q-2, got k={k} over GF({})",
            f.q()
        )));
    }
    Ok(())
}

fn defect_one_range(f: &Field, k: usize) -> Result<()> {
    family_k(f, k)?;
    if k as u64 > f.q() - 4 {
        return Err(Error::Unsupported(format!(
            "defect-one members need 3 <= k <= q-4, got k={k} over GF({})",
            f.q()
        )));
    }
    Ok(())
}

/// The pair `(lambda_1, lambda_2)`.  `lambda_1` counts `(k-2)`-subsets of
/// `GF(q)* \ {x1, x2}` summing to `x1 + x2` (independent of the pair);
/// `lambda_2 = lambda_1 * C(q-3, k) / C(q-3, k-2)`.
pub fn ck_lambda(f: &Field, k: usize) -> Result<(BigUint, BigUint)> {
    defect_one_range(f, k)?;
    let q = f.q();
    let lambda1 = count_restricted(f, k, 1, f.alpha())?;
    let lambda2 = exact_div(
        &(&lambda1 * binom(q - 3, k as u64)),
        &binom(q - 3, k as u64 - 2),
        "lambda_2",
    )?;
    Ok((lambda1, lambda2))
}

/// Number of minimum-weight words of a defect-one member (equal on both
/// sides): `lambda_1 (q-1)^2 (q-2) / (k (k-1))`.
pub fn ck_min_count(f: &Field, k: usize) -> Result<BigUint> {
    defect_one_range(f, k)?;
    let q = f.q();
    let (lambda1, _) = ck_lambda(f, k)?;
    exact_div(
        &(lambda1 * BigUint::from((q - 1) * (q - 1) * (q - 2))),
        &BigUint::from((k * (k - 1)) as u64),
        "minimum-weight count",
    )
}

/// Full weight distributions of a defect-one member and its dual, from the
/// closed minimum-weight count alone.
pub fn ck_enumerator(f: &Field, k: usize) -> Result<(WeightDistribution, WeightDistribution)> {
    defect_one_range(f, k)?;
    let a_min = ck_min_count(f, k)?;
    nmds_distribution(f.q() as usize - 1, k, f.q(), &a_min)
}

/// Family verdict for one member.
#[derive(Clone, Debug)]
pub struct CkReport {
    pub q: u64,
    pub k: usize,
    pub n: usize,
    /// Verdict pinned down by the theory.
    pub predicted: Verdict,
    /// Minimum distance pinned down by the theory.
    pub predicted_d: usize,
    /// `N(k, 0)`: zero-sum `k`-subsets of `GF(q)*`, whose vanishing is
    /// equivalent to the member being MDS.
    pub zero_sum_k_subsets: BigUint,
    /// Exhaustive classification, when the cap allowed one; always agrees
    /// with the prediction (disagreement is an internal error).
    pub observed: Option<LmdsReport>,
}

/// Predict the verdict for `C_k` from the subset-sum characterization and,
/// caps permitting, verify it against an exhaustive classification.
pub fn ck_verdict(f: &Field, k: usize, opts: &EnumOpts) -> Result<CkReport> {
    family_k(f, k)?;
    let q = f.q();
    let n = q as usize - 1;
    let boundary = k as u64 >= q - 3;
    let zero_sums = count_closed(f, k as u64, 0);
    // The two boundary members are exactly the MDS ones, and the subset-sum
    // count must corroborate the side we are on.
    let (predicted, predicted_d) = if boundary {
        if !zero_sums.is_zero() {
            return Err(Error::Inconsistent(format!(
                "k={k} is a boundary member but N(k,0)={zero_sums} != 0"
            )));
        }
        (Verdict::Mds, n - k + 1)
    } else {
        if zero_sums.is_zero() {
            return Err(Error::Inconsistent(format!(
                "k={k} is an interior member but no k-subset of GF({q})* sums to zero"
            )));
        }
        (Verdict::LMds(1), n - k)
    };

    let code = build_ck(f, k)?;
    let observed = match code.classify(opts) {
        Ok(report) => Some(report),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(report) = &observed {
        if report.verdict != predicted || report.d != predicted_d {
            return Err(Error::Inconsistent(format!(
                "family prediction [{n},{k},{predicted_d}] {predicted} disagrees with \
                 exhaustive classification {report}"
            )));
        }
    }
    Ok(CkReport { q, k, n, predicted, predicted_d, zero_sum_k_subsets: zero_sums, observed })
}
