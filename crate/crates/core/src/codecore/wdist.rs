//! Weight distributions, the MacWilliams transform, and the closed-form
//! distribution of codes whose defect and dual defect are both one.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::comb::{binom_i, exact_div_nonneg, upow};
use crate::{Error, Result};

/// How a distribution was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Source {
    /// Direct codeword enumeration.
    Enumerated,
    /// MacWilliams transform of the dual's enumerated distribution.
    MacWilliams,
    /// Closed formula.
    Formula,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Enumerated => write!(f, "enumerated"),
            Source::MacWilliams => write!(f, "macwilliams"),
            Source::Formula => write!(f, "formula"),
        }
    }
}

/// Exact weight distribution `A_0, .., A_n` of an `[n, k]_q` code.
/// `A_0 = 1` and the counts sum to `q^k`; both are asserted on creation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    n: usize,
    counts: Vec<BigUint>,
    source: Source,
}

impl WeightDistribution {
    pub(crate) fn from_counts(
        n: usize,
        counts: Vec<u64>,
        q: u64,
        k: u64,
        source: Source,
    ) -> WeightDistribution {
        let counts = counts.into_iter().map(BigUint::from).collect();
        WeightDistribution::from_big_counts(n, counts, q, k, source)
    }

    pub(crate) fn from_big_counts(
        n: usize,
        counts: Vec<BigUint>,
        q: u64,
        k: u64,
        source: Source,
    ) -> WeightDistribution {
        assert_eq!(counts.len(), n + 1, "distribution must have n + 1 entries");
        assert!(counts[0].is_one(), "A_0 must be 1");
        assert_eq!(
            counts.iter().sum::<BigUint>(),
            upow(q, k),
            "counts must sum to q^k"
        );
        WeightDistribution { n, counts, source }
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// All counts, index `i` holding `A_i`.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `A_i`.
    pub fn count(&self, i: usize) -> &BigUint {
        &self.counts[i]
    }

    /// How this distribution was produced.
    pub fn source(&self) -> Source {
        self.source
    }

    /// Minimum distance: the least positive weight with a nonzero count.
    pub fn min_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&i| !self.counts[i].is_zero())
    }

    /// Largest weight with a nonzero count.
    pub fn max_weight(&self) -> Option<usize> {
        (1..=self.n).rev().find(|&i| !self.counts[i].is_zero())
    }

    /// Number of codewords, `q^k`.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

impl fmt::Display for WeightDistribution {
    /// Polynomial form, e.g. `1 + 49z^3 + 49z^4 + 882z^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "z")?,
                1 => write!(f, "{c}z")?,
                _ if c.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "{c}z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// MacWilliams transform: from the distribution of an `[n, k]_q` code to
/// its dual's, via Krawtchouk sums in exact integer arithmetic.
pub fn macwilliams(wd: &WeightDistribution, q: u64, k: u64) -> Result<WeightDistribution> {
    let n = wd.n;
    if wd.total() != upow(q, k) {
        return Err(Error::Inconsistent(format!(
            "distribution does not sum to {q}^{k}"
        )));
    }
    let divisor = BigInt::from(upow(q, k));
    let qm1 = BigInt::from(q - 1);
    // Powers of (q - 1) up to n.
    let mut qm1_pows = vec![BigInt::one()];
    for _ in 0..n {
        qm1_pows.push(qm1_pows.last().unwrap() * &qm1);
    }
    let counts_i: Vec<BigInt> = wd.counts.iter().map(|c| BigInt::from(c.clone())).collect();
    let mut dual = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, a_i) in counts_i.iter().enumerate() {
            if a_i.is_zero() {
                continue;
            }
            // Krawtchouk K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i,s) C(n-i,j-s)
            let mut kraw = BigInt::zero();
            for s in 0..=j {
                let term = binom_i(i as u64, s as u64)
                    * binom_i((n - i) as u64, (j - s) as u64)
                    * &qm1_pows[j - s];
                if s % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            acc += a_i * kraw;
        }
        dual.push(exact_div_nonneg(&acc, &divisor, "MacWilliams transform")?);
    }
    Ok(WeightDistribution::from_big_counts(
        n,
        dual,
        q,
        n as u64 - k,
        Source::MacWilliams,
    ))
}

/// One side of the defect-one closed form: the distribution of an
/// `[n, kk, n - kk - 1]_q` code with both defects one, given its count of
/// minimum-weight words.  Every weight above the minimum is determined:
///
/// `A_{n-kk+s} = C(n, n-kk+s) * sum_{i=0}^{s-1} (-1)^i C(n-kk+s, i)
///               (q^{s-i} - 1) + (-1)^s C(kk, s) * A_{n-kk}` for `1 <= s <= kk`.
fn defect_one_side(n: usize, kk: usize, q: u64, a_min: &BigUint) -> Result<Vec<BigUint>> {
    let a_min_i = BigInt::from(a_min.clone());
    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::one();
    counts[n - kk] = a_min.clone();
    for s in 1..=kk {
        let w = n - kk + s;
        let mut inner = BigInt::zero();
        for i in 0..s {
            let term = binom_i(w as u64, i as u64)
                * (BigInt::from(upow(q, (s - i) as u64)) - BigInt::one());
            if i % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        let mut val = binom_i(n as u64, w as u64) * inner;
        let tail = binom_i(kk as u64, s as u64) * &a_min_i;
        if s % 2 == 0 {
            val += tail;
        } else {
            val -= tail;
        }
        if val.sign() == num_bigint::Sign::Minus {
            return Err(Error::Inconsistent(format!(
                "defect-one distribution would need A_{w} = {val} < 0; \
                 the minimum-weight count {a_min} is infeasible"
            )));
        }
        counts[w] = val.to_biguint().unwrap();
    }
    Ok(counts)
}

/// Weight distributions of a code with defect and dual defect both one and
/// of its dual, determined by `(n, k, q)` and the shared count of
/// minimum-weight words (`A_{n-k}` of the code, equal to `A_k` of the dual).
pub fn nmds_distribution(
    n: usize,
    k: usize,
    q: u64,
    a_min: &BigUint,
) -> Result<(WeightDistribution, WeightDistribution)> {
    if k == 0 || k >= n {
        return Err(Error::Degenerate(format!(
            "defect-one parameters need 0 < k < n, got [{n}, {k}]"
        )));
    }
    let primal = defect_one_side(n, k, q, a_min)?;
    let dual = defect_one_side(n, n - k, q, a_min)?;
    Ok((
        WeightDistribution::from_big_counts(n, primal, q, k as u64, Source::Formula),
        WeightDistribution::from_big_counts(n, dual, q, (n - k) as u64, Source::Formula),
    ))
}
