//! General results on codes with matching Singleton defects: the
//! distance-sum characterization, closed-form weight distributions from
//! boundary counts, bounds on minimum-weight codeword counts, and bounds
//! on the maximum length attainable at a given dimension and defect.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::codecore::{EnumOpts, LinearCode, LmdsReport, Source, WeightDistribution};
use crate::comb::{binom, binom_i, upow};
use crate::{Error, Result};

/// Result of testing the distance-sum characterization
/// `defect(C) = defect(C*) = l  <=>  d(C) + d(C*) = n - 2l + 2`
/// which is valid whenever `n > (l-1)q + l + k - 2` and
/// `k > (l-1)q + l - 2`.
#[derive(Clone, Debug)]
pub enum Characterization {
    /// The premise inequalities fail, so the equivalence is not claimed.
    HypothesesUnmet { report: LmdsReport },
    /// The premises hold and both sides of the equivalence agree.
    EquivalentVerified { report: LmdsReport, distance_sum: usize, target: i64 },
    /// The premises hold but exactly one side holds.
    Counterexample { report: LmdsReport, distance_sum: usize, target: i64 },
}

/// Check the distance-sum characterization for a concrete code at a given
/// defect.
pub fn characterization(code: &LinearCode, ell: u32, opts: &EnumOpts) -> Result<Characterization> {
    let report = code.classify(opts)?;
    let (n, k, q) = (code.n() as i64, code.k() as i64, code.field().q() as i64);
    let l = ell as i64;
    if !(n > (l - 1) * q + l + k - 2 && k > (l - 1) * q + l - 2) {
        return Ok(Characterization::HypothesesUnmet { report });
    }
    let distance_sum = report.d + report.dual_d;
    let target = n - 2 * l + 2;
    let is_lmds = report.defect == ell && report.dual_defect == ell;
    let sum_matches = distance_sum as i64 == target;
    if is_lmds == sum_matches {
        Ok(Characterization::EquivalentVerified { report, distance_sum, target })
    } else {
        Ok(Characterization::Counterexample { report, distance_sum, target })
    }
}

/// One side of the closed-form distribution: length `n`, dimension `kk`,
/// defect `l`, given the `2l - 1` boundary counts `A_i` for
/// `n - kk - l + 1 <= i <= n - kk + l - 1`.  The remaining counts are
///
/// `A_{n-kk+l+s} = C(n, kk-l-s) * sum_{j=0}^{s} (-1)^j C(n-kk+l+s, j) (q^{l+s-j} - 1)`
/// `            + sum_i (-1)^{s+1} C(n-i, kk-l-s) C(n-i-kk+l+s-1, s) A_i`
///
/// for `s = 0 .. kk - l`.
fn formula_side(n: usize, kk: usize, q: u64, ell: u32, boundary: &[BigUint]) -> Result<Vec<BigUint>> {
    let l = ell as usize;
    if l < 1 || l > n - kk {
        return Err(Error::Unsupported(format!(
            "defect {l} is outside 1..={} for an [{n},{kk}] side",
            n - kk
        )));
    }
    if boundary.len() != 2 * l - 1 {
        return Err(Error::LengthMismatch { left: boundary.len(), right: 2 * l - 1 });
    }
    let lo = n - kk - l + 1;
    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::one();
    for (off, a) in boundary.iter().enumerate() {
        counts[lo + off] = a.clone();
    }
    for s in 0..=(kk - l) {
        let w = n - kk + l + s;
        let mut head = BigInt::zero();
        for j in 0..=s {
            let term = binom_i(w as u64, j as u64)
                * (BigInt::from(upow(q, (l + s - j) as u64)) - BigInt::one());
            if j % 2 == 0 {
                head += term;
            } else {
                head -= term;
            }
        }
        head *= binom_i(n as u64, (kk - l - s) as u64);
        let mut tail = BigInt::zero();
        for (off, a) in boundary.iter().enumerate() {
            let i = lo + off;
            tail += binom_i((n - i) as u64, (kk - l - s) as u64)
                * binom_i((n - i + l + s - kk - 1) as u64, s as u64)
                * BigInt::from(a.clone());
        }
        let total = if s % 2 == 0 { head - tail } else { head + tail };
        counts[w] = total.to_biguint().ok_or_else(|| {
            Error::Inconsistent(format!(
                "the boundary counts force a negative count at weight {w}"
            ))
        })?;
    }
    let sum: BigUint = counts.iter().sum();
    if sum != upow(q, kk as u64) {
        return Err(Error::Inconsistent(format!(
            "the boundary counts are infeasible: counts sum to {sum}, not q^{kk}"
        )));
    }
    Ok(counts)
}

/// The primal half of [`lmds_distribution`]: rebuild the full distribution
/// of an `[n, k]_q` code with defect `ell` on both sides from its `2*ell-1`
/// boundary counts alone.  The dual distribution then follows by the
/// MacWilliams transform.
pub fn lmds_primal(
    n: usize,
    k: usize,
    q: u64,
    ell: u32,
    boundary: &[BigUint],
) -> Result<WeightDistribution> {
    if k == 0 || k >= n {
        return Err(Error::Unsupported(format!(
            "need 0 < k < n for a boundary reconstruction, got [{n},{k}]"
        )));
    }
    let counts = formula_side(n, k, q, ell, boundary)?;
    Ok(WeightDistribution::from_big_counts(n, counts, q, k as u64, Source::Formula))
}

/// Closed-form weight distributions of an `[n, k]_q` code with defect
/// `ell` on both sides, given the boundary counts of both codes:
/// `boundary[i]` holds `A_{n-k-ell+1+i}` and `dual_boundary[i]` holds
/// `A*_{k-ell+1+i}`, each of length `2*ell - 1`.
pub fn lmds_distribution(
    n: usize,
    k: usize,
    q: u64,
    ell: u32,
    boundary: &[BigUint],
    dual_boundary: &[BigUint],
) -> Result<(WeightDistribution, WeightDistribution)> {
    if k == 0 || k >= n {
        return Err(Error::Unsupported(format!(
            "need 0 < k < n for a two-sided distribution, got [{n},{k}]"
        )));
    }
    let counts = formula_side(n, k, q, ell, boundary)?;
    let dual_counts = formula_side(n, n - k, q, ell, dual_boundary)?;
    Ok((
        WeightDistribution::from_big_counts(n, counts, q, k as u64, Source::Formula),
        WeightDistribution::from_big_counts(n, dual_counts, q, (n - k) as u64, Source::Formula),
    ))
}

/// Upper bounds on the number of minimum-weight codewords of a code with
/// defect `ell` on both sides, together with the older general-purpose
/// bounds and the predicate telling which is tighter.
#[derive(Clone, Debug)]
pub struct MinWeightBounds {
    /// `floor(C(n, k-l)(q^l - 1) / C(k+l-1, k-l))` bounding `A_{n-k-l+1}`.
    pub bound_a: BigUint,
    /// `floor(C(n, k+l)(q^l - 1) / C(n-k+l-1, 2l-1))` bounding `A*_{k-l+1}`.
    pub bound_a_dual: BigUint,
    /// The generic bound `C(n, k+l-1)(q - 1)` on `A_{n-k-l+1}`.
    pub generic_a: BigUint,
    /// The generic bound `C(n, k-l+1)(q - 1)` on `A*_{k-l+1}`.
    pub generic_a_dual: BigUint,
    /// `(q^l - 1)/(q - 1) < C(n-k+l, 2l-1)`: the refined primal bound is
    /// strictly tighter than the generic one.
    pub refined_tighter_a: bool,
    /// `(q^l - 1)/(q - 1) < C(k+l, 2l-1)`: same on the dual side.
    pub refined_tighter_a_dual: bool,
}

/// Geometric sum `1 + q + .. + q^(l-1) = (q^l - 1)/(q - 1)`.
fn geometric(q: u64, l: u32) -> BigUint {
    (0..l).map(|e| upow(q, e as u64)).sum()
}

/// Evaluate the minimum-weight-count bounds for an `[n, k]_q` code with
/// defect `ell` on both sides.
pub fn minweight_bounds(n: usize, k: usize, q: u64, ell: u32) -> Result<MinWeightBounds> {
    let l = ell as usize;
    if l < 1 || k < l || n - k < l || k >= n {
        return Err(Error::Unsupported(format!(
            "minimum-weight bounds need 1 <= ell <= min(k, n-k), got [{n},{k}] ell={ell}"
        )));
    }
    let scale = upow(q, l as u64) - BigUint::one();
    let bound_a = binom(n as u64, (k - l) as u64) * &scale
        / binom((k + l - 1) as u64, (k - l) as u64);
    let bound_a_dual = binom(n as u64, (k + l) as u64) * &scale
        / binom((n - k + l - 1) as u64, (2 * l - 1) as u64);
    let q1 = BigUint::from(q - 1);
    let generic_a = binom(n as u64, (k + l - 1) as u64) * &q1;
    let generic_a_dual = binom(n as u64, (k - l + 1) as u64) * &q1;
    let ratio = geometric(q, ell);
    Ok(MinWeightBounds {
        bound_a,
        bound_a_dual,
        generic_a,
        generic_a_dual,
        refined_tighter_a: ratio < binom((n - k + l) as u64, (2 * l - 1) as u64),
        refined_tighter_a_dual: ratio < binom((k + l) as u64, (2 * l - 1) as u64),
    })
}

/// Upper and lower bounds on the maximum length `N` at which an
/// `[N, k, N - k - ell + 1]_q` code can exist.
#[derive(Clone, Debug)]
pub struct MaxLenBounds {
    pub k: usize,
    pub q: u64,
    pub ell: u32,
    /// `(l+1)q + l + k - 1`, valid for `k >= 2`.
    pub upper_general: Option<i64>,
    /// `lq + l + k - 1`, valid for `k > (l+1)q + l - 1` and `l >= 1`.
    pub upper_high_dim: Option<i64>,
    /// `k + 2l + floor(l/3) + 1`, valid for `q = 2` and `k >= 3`.
    pub upper_binary: Option<i64>,
    /// The least applicable upper bound.
    pub tightest_upper: Option<i64>,
    /// `k + 1 + l`: the defect-increment chain seeded with the
    /// single-parity `[k+1, k, 2]` witness at defect zero.
    pub lower_chain: i64,
}

/// Evaluate the applicable maximum-length bounds.
pub fn maxlen_bounds(k: usize, q: u64, ell: u32) -> Result<MaxLenBounds> {
    if k == 0 || q < 2 {
        return Err(Error::Unsupported(format!(
            "maximum-length bounds need k >= 1 and q >= 2, got k={k} q={q}"
        )));
    }
    let (ki, qi, l) = (k as i64, q as i64, ell as i64);
    let upper_general = (k >= 2).then(|| (l + 1) * qi + l + ki - 1);
    let upper_high_dim = (ell >= 1 && ki > (l + 1) * qi + l - 1).then(|| l * qi + l + ki - 1);
    let upper_binary = (q == 2 && k >= 3).then(|| ki + 2 * l + l / 3 + 1);
    let tightest_upper = [upper_general, upper_high_dim, upper_binary]
        .into_iter()
        .flatten()
        .min();
    Ok(MaxLenBounds {
        k,
        q,
        ell,
        upper_general,
        upper_high_dim,
        upper_binary,
        tightest_upper,
        lower_chain: ki + 1 + l,
    })
}

/// The binary upper bound `k + 2l + floor(l/3) + 1` (needs `k >= 3`).
pub fn binary_maxlen(k: usize, ell: u32) -> Result<i64> {
    if k < 3 {
        return Err(Error::Unsupported(format!(
            "the binary maximum-length bound needs k >= 3, got k={k}"
        )));
    }
    let l = ell as i64;
    Ok(k as i64 + 2 * l + l / 3 + 1)
}

/// Whether a binary `[n, k]` code with defect `ell` on both sides is ruled
/// out by the binary maximum-length bound.
pub fn excluded_by_binary_bound(n: usize, k: usize, ell: u32) -> Result<bool> {
    Ok(n as i64 > binary_maxlen(k, ell)?)
}

/// Conditional dimension-shift inequality: under the recorded hypotheses,
/// the maximum length at dimension `k` is at most `s` more than at `k - s`.
#[derive(Clone, Debug)]
pub struct ShiftRecord {
    pub k: usize,
    pub q: u64,
    pub ell: u32,
    pub s: usize,
    /// `s < k`; shifting to dimension zero is undefined.
    pub applicable: bool,
    /// `k > (l-1)q + l + s - 3`, which is checkable directly.
    pub dim_hypothesis_met: bool,
    /// The remaining hypothesis asks the maximum length at dimension
    /// `k - s + 1` to exceed this value; it is recorded, not resolved.
    pub length_hypothesis_threshold: i64,
    pub conclusion: String,
}

/// Build the conditional dimension-shift record for `1 <= s <= k`.
pub fn maxlen_shift(k: usize, q: u64, ell: u32, s: usize) -> Result<ShiftRecord> {
    if s == 0 || s > k {
        return Err(Error::Unsupported(format!("shift needs 1 <= s <= k, got s={s} k={k}")));
    }
    let (ki, qi, l, si) = (k as i64, q as i64, ell as i64, s as i64);
    Ok(ShiftRecord {
        k,
        q,
        ell,
        s,
        applicable: s < k,
        dim_hypothesis_met: ki > (l - 1) * qi + l + si - 3,
        length_hypothesis_threshold: (l - 1) * qi + ki + l - si - 1,
        conclusion: format!("N_{ell}({k},{q}) <= N_{ell}({},{q}) + {s}", k - s),
    })
}

/// Griesmer lower bound on length: `sum_{i=0}^{k-1} ceil(d / q^i)`.
pub fn griesmer(k: u64, d: u64, q: u64) -> u64 {
    let mut total = 0u64;
    let mut power = 1u64;
    for i in 0..k {
        if power >= d {
            // Every remaining term is exactly one.
            total += k - i;
            break;
        }
        total += d.div_ceil(power);
        match power.checked_mul(q) {
            Some(p) => power = p,
            None => power = u64::MAX,
        }
    }
    total
}
