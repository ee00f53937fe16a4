//! Linear codes as canonical generator matrices, their duals, weight
//! distributions and Singleton-defect classification.
//!
//! A `[n, k, d]_q` code is stored as the unique reduced row echelon form of
//! its generator matrix, so structural equality of values coincides with
//! equality of codes.  The Singleton defect is `s(C) = n - k - d + 1`; a
//! code is `MDS` when `s(C) = s(C_dual) = 0` and `l`-MDS when both defects
//! equal `l >= 1`.

mod enumerate;
mod io;
mod wdist;

use std::fmt;

use crate::gf::{Elem, Field};
use crate::{linalg, Error, Result};

pub use enumerate::{for_each_codeword, EnumOpts};
pub use io::{read_code, read_code_from_path, write_code, write_code_to_path};
pub use wdist::{macwilliams, nmds_distribution, Source, WeightDistribution};

/// A linear code over an explicit finite field, canonicalized to RREF.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    gen: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{},{}] over {}", self.n, self.gen.len(), self.field)
    }
}

impl LinearCode {
    /// Build a code from generator rows; rows are reduced to RREF and the
    /// rank becomes the dimension.  Rejects ragged input, invalid symbols
    /// and the all-zero matrix.
    pub fn from_rows(field: Field, rows: Vec<Vec<Elem>>) -> Result<LinearCode> {
        let n = rows.first().map_or(0, Vec::len);
        if n == 0 {
            return Err(Error::Degenerate("code length must be at least 1".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRows { row: i, got: row.len(), expected: n });
            }
            for &x in row {
                if x as u64 >= field.q() {
                    return Err(Error::InvalidElement { value: x as u64, q: field.q() });
                }
            }
        }
        let mut gen = rows;
        let pivots = linalg::rref(&field, &mut gen);
        if gen.is_empty() {
            return Err(Error::ZeroCode);
        }
        Ok(LinearCode { field, n, gen, pivots })
    }

    /// The underlying field.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Code dimension.
    pub fn k(&self) -> usize {
        self.gen.len()
    }

    /// Canonical (RREF) generator rows.
    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.gen
    }

    /// Encode a length-`k` message.
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.k() {
            return Err(Error::LengthMismatch { left: msg.len(), right: self.k() });
        }
        Ok(linalg::encode(&self.field, &self.gen, msg))
    }

    /// Membership test.
    pub fn contains(&self, word: &[Elem]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let f = &self.field;
        let mut w = word.to_vec();
        for (row, &p) in self.gen.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                for (wj, &gj) in w.iter_mut().zip(row) {
                    *wj = f.sub(*wj, f.mul(c, gj));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// Euclidean dual code.  The dual of the full space `[n, n]` is the
    /// zero code and is rejected.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k() == self.n {
            return Err(Error::Degenerate(
                "dual of the full space is the zero code".into(),
            ));
        }
        let basis = linalg::right_kernel(&self.field, &self.gen, self.n);
        LinearCode::from_rows(self.field.clone(), basis)
    }

    /// `e`-Galois dual: the Frobenius image `sigma^(h-e)` of the Euclidean
    /// dual.  For `e = 0` this is exactly [`LinearCode::dual`].
    pub fn galois_dual(&self, e: u32) -> Result<LinearCode> {
        let h = self.field.h();
        let e = e % h;
        let dual = self.dual()?;
        if e == 0 {
            return Ok(dual);
        }
        let power = h - e;
        let rows = dual
            .gen
            .iter()
            .map(|row| row.iter().map(|&x| self.field.frobenius(x, power)).collect())
            .collect();
        LinearCode::from_rows(self.field.clone(), rows)
    }

    /// Exact weight distribution.  Enumerates all `q^k` codewords when that
    /// fits the cap, otherwise enumerates the dual and applies MacWilliams;
    /// if neither side fits, fails with the smaller requirement.
    pub fn weight_distribution(&self, opts: &EnumOpts) -> Result<WeightDistribution> {
        let q = self.field.q();
        let primal = enumerate::space_size(q, self.k());
        if primal <= opts.cap as u128 {
            let counts = enumerate::weight_counts(self, opts);
            return Ok(WeightDistribution::from_counts(
                self.n,
                counts,
                q,
                self.k() as u64,
                Source::Enumerated,
            ));
        }
        let dual_size = enumerate::space_size(q, self.n - self.k());
        if self.k() < self.n && dual_size <= opts.cap as u128 {
            let dual = self.dual()?;
            let dual_counts = enumerate::weight_counts(&dual, opts);
            let dual_wd = WeightDistribution::from_counts(
                self.n,
                dual_counts,
                q,
                dual.k() as u64,
                Source::Enumerated,
            );
            return macwilliams(&dual_wd, q, dual.k() as u64);
        }
        Err(Error::CapExceeded { needed: primal.min(dual_size), cap: opts.cap as u128 })
    }

    /// Weight distributions of the code and of its dual, enumerating only
    /// the cheaper side and transforming for the other.
    pub fn wd_pair(&self, opts: &EnumOpts) -> Result<(WeightDistribution, WeightDistribution)> {
        let q = self.field.q();
        if self.k() == self.n {
            return Err(Error::Degenerate(
                "dual of the full space is the zero code".into(),
            ));
        }
        let primal_size = enumerate::space_size(q, self.k());
        if primal_size <= opts.cap as u128 {
            let counts = enumerate::weight_counts(self, opts);
            let wd = WeightDistribution::from_counts(
                self.n,
                counts,
                q,
                self.k() as u64,
                Source::Enumerated,
            );
            let dual_wd = macwilliams(&wd, q, self.k() as u64)?;
            return Ok((wd, dual_wd));
        }
        let dual_size = enumerate::space_size(q, self.n - self.k());
        if dual_size <= opts.cap as u128 {
            let dual = self.dual()?;
            let counts = enumerate::weight_counts(&dual, opts);
            let dual_wd = WeightDistribution::from_counts(
                self.n,
                counts,
                q,
                dual.k() as u64,
                Source::Enumerated,
            );
            let wd = macwilliams(&dual_wd, q, dual.k() as u64)?;
            return Ok((wd, dual_wd));
        }
        Err(Error::CapExceeded {
            needed: primal_size.min(dual_size),
            cap: opts.cap as u128,
        })
    }

    /// Classify the code by its Singleton defect and its dual's.
    pub fn classify(&self, opts: &EnumOpts) -> Result<LmdsReport> {
        let (wd, dual_wd) = self.wd_pair(opts)?;
        let d = wd.min_weight().ok_or_else(|| {
            Error::Inconsistent("nonzero code with no nonzero weight".into())
        })?;
        let dual_d = dual_wd.min_weight().ok_or_else(|| {
            Error::Inconsistent("nonzero dual with no nonzero weight".into())
        })?;
        let n = self.n as i64;
        let k = self.k() as i64;
        let defect = n - k - d as i64 + 1;
        let dual_defect = k - dual_d as i64 + 1;
        if defect < 0 || dual_defect < 0 {
            return Err(Error::Inconsistent(format!(
                "Singleton bound violated: defects {defect}/{dual_defect}"
            )));
        }
        let (defect, dual_defect) = (defect as u32, dual_defect as u32);
        let verdict = Verdict::from_defects(defect, dual_defect);

        // Sufficient condition: when n > lq + l + k - 1 and
        // k > (l-1)q + l - 2 with l the primal defect, every code with this
        // (n, k, d) must be l-MDS.  Record it and cross-check.
        let q = self.field.q() as i64;
        let l = defect as i64;
        let forced = n > l * q + l + k - 1 && k > (l - 1) * q + l - 2;
        if forced && dual_defect != defect {
            return Err(Error::Inconsistent(format!(
                "sufficiency hypotheses hold for l={l} but dual defect is {dual_defect}"
            )));
        }
        Ok(LmdsReport {
            n: self.n,
            k: self.k(),
            d,
            dual_d,
            defect,
            dual_defect,
            verdict,
            forced_by_sufficiency: forced,
        })
    }

    /// `r`-th generalized Hamming weight: the minimum support size over all
    /// `r`-dimensional subcodes, found by exhausting canonical subspace
    /// bases of the message space.
    pub fn ghw(&self, r: usize, cap: u64) -> Result<usize> {
        let k = self.k();
        if r == 0 || r > k {
            return Err(Error::Unsupported(format!(
                "subcode dimension {r} out of range 1..={k}"
            )));
        }
        if self.n > 128 {
            return Err(Error::Unsupported("ghw supports n <= 128".into()));
        }
        let total = crate::comb::gaussian_binom(k as u64, r as u64, self.field.q());
        if total > cap.into() {
            return Err(Error::CapExceeded {
                needed: u128::try_from(&total).unwrap_or(u128::MAX),
                cap: cap as u128,
            });
        }
        Ok(enumerate::min_support_subspaces(self, r))
    }

    /// Full profile `d_1 < d_2 < ... < d_k` of generalized Hamming weights.
    pub fn ghw_profile(&self, cap: u64) -> Result<Vec<usize>> {
        (1..=self.k()).map(|r| self.ghw(r, cap)).collect()
    }

    /// Delete coordinate `pos` (0-based).  Dimension may drop by one when
    /// the code has a weight-one word there.
    pub fn puncture(&self, pos: usize) -> Result<LinearCode> {
        self.check_coord(pos)?;
        let rows: Vec<Vec<Elem>> = self
            .gen
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != pos)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        LinearCode::from_rows(self.field.clone(), rows)
    }

    /// Shorten at coordinate `pos`: keep the codewords vanishing there and
    /// delete the coordinate.
    pub fn shorten(&self, pos: usize) -> Result<LinearCode> {
        self.check_coord(pos)?;
        let f = &self.field;
        let mut rows = self.gen.clone();
        if let Some(pr) = (0..rows.len()).find(|&i| rows[i][pos] != 0) {
            let pivot = rows[pr].clone();
            let pinv = f.inv(pivot[pos])?;
            for (i, row) in rows.iter_mut().enumerate() {
                if i != pr && row[pos] != 0 {
                    let factor = f.mul(row[pos], pinv);
                    for (rj, &pj) in row.iter_mut().zip(&pivot) {
                        *rj = f.sub(*rj, f.mul(factor, pj));
                    }
                }
            }
            rows.remove(pr);
        }
        if rows.is_empty() {
            return Err(Error::Degenerate("shortening empties the code".into()));
        }
        let rows = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|&(j, _)| j != pos)
                    .map(|(_, x)| x)
                    .collect()
            })
            .collect();
        LinearCode::from_rows(self.field.clone(), rows)
    }

    fn check_coord(&self, pos: usize) -> Result<()> {
        if self.n < 2 {
            return Err(Error::Degenerate("code length would drop below 1".into()));
        }
        if pos >= self.n {
            return Err(Error::Unsupported(format!(
                "coordinate {pos} out of range for length {}",
                self.n
            )));
        }
        Ok(())
    }
}

/// Defect verdict for a code/dual pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Both defects are zero.
    Mds,
    /// Both defects equal this common value `l >= 1`.
    LMds(u32),
    /// The two defects differ.
    NotLMds,
}

impl Verdict {
    /// Verdict from a (defect, dual defect) pair.
    pub fn from_defects(defect: u32, dual_defect: u32) -> Verdict {
        match (defect, dual_defect) {
            (0, 0) => Verdict::Mds,
            (a, b) if a == b => Verdict::LMds(a),
            _ => Verdict::NotLMds,
        }
    }

    /// The common defect when one exists (0 for MDS).
    pub fn common_defect(&self) -> Option<u32> {
        match self {
            Verdict::Mds => Some(0),
            Verdict::LMds(l) => Some(*l),
            Verdict::NotLMds => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Mds => write!(f, "MDS"),
            Verdict::LMds(l) => write!(f, "{l}-MDS"),
            Verdict::NotLMds => write!(f, "not-l-MDS"),
        }
    }
}

/// Outcome of [`LinearCode::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmdsReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub dual_d: usize,
    pub defect: u32,
    pub dual_defect: u32,
    pub verdict: Verdict,
    /// True when the sufficient condition already pins the verdict from
    /// `(n, k, d, q)` alone; always cross-checked against the computation.
    pub forced_by_sufficiency: bool,
}

impl fmt::Display for LmdsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}] defect={} dual_defect={} verdict={}",
            self.n, self.k, self.d, self.defect, self.dual_defect, self.verdict
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(p: u64, h: u32, rows: &[&[Elem]]) -> LinearCode {
        let f = Field::new(p, h, None).unwrap();
        LinearCode::from_rows(f, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn hamming() -> LinearCode {
        code(
            2,
            1,
            &[
                &[1, 0, 0, 0, 1, 1, 0],
                &[0, 1, 0, 0, 1, 0, 1],
                &[0, 0, 1, 0, 0, 1, 1],
                &[0, 0, 0, 1, 1, 1, 1],
            ],
        )
    }

    fn tetracode() -> LinearCode {
        code(3, 1, &[&[1, 0, 1, 1], &[0, 1, 1, 2]])
    }

    /// Independent check for generalized weights: `d_r` is the least `|S|`
    /// such that the codewords supported inside `S` form an `>= r`-dim
    /// subcode, i.e. `k - rank(G restricted outside S) >= r`.
    fn ghw_oracle(c: &LinearCode, r: usize) -> usize {
        let (n, k) = (c.n(), c.k());
        for w in 1..=n {
            let mut found = false;
            crate::comb::for_each_combination(n, w, |s| {
                if found {
                    return;
                }
                let outside: Vec<usize> = (0..n).filter(|j| !s.contains(j)).collect();
                let restricted: Vec<Vec<Elem>> = c
                    .rows()
                    .iter()
                    .map(|row| outside.iter().map(|&j| row[j]).collect())
                    .collect();
                if k - linalg::rank(c.field(), &restricted) >= r {
                    found = true;
                }
            });
            if found {
                return w;
            }
        }
        unreachable!("a nonzero code has every generalized weight");
    }

    #[test]
    fn construction_is_canonical_and_validated() {
        let f = Field::new(2, 1, None).unwrap();
        // Same row space, different presentations: equal after reduction.
        let a = LinearCode::from_rows(f.clone(), vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let b = LinearCode::from_rows(f.clone(), vec![vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            LinearCode::from_rows(f.clone(), vec![vec![0, 0]]),
            Err(Error::ZeroCode)
        ));
        assert!(matches!(
            LinearCode::from_rows(f.clone(), vec![vec![1, 0], vec![1]]),
            Err(Error::RaggedRows { row: 1, got: 1, expected: 2 })
        ));
        assert!(matches!(
            LinearCode::from_rows(f, vec![vec![1, 3]]),
            Err(Error::InvalidElement { value: 3, q: 2 })
        ));
    }

    #[test]
    fn membership_and_encoding_agree() {
        let c = tetracode();
        for m in [[0, 0], [1, 0], [2, 1], [1, 2]] {
            let cw = c.encode(&m).unwrap();
            assert!(c.contains(&cw));
        }
        assert!(!c.contains(&[1, 0, 0, 0]));
        assert!(!c.contains(&[1, 0, 1])); // wrong length
    }

    #[test]
    fn dual_of_dual_is_the_original() {
        for c in [hamming(), tetracode(), code(2, 3, &[&[1, 5, 2, 7], &[0, 3, 1, 1]])] {
            let dd = c.dual().unwrap().dual().unwrap();
            assert_eq!(dd, c);
        }
        let full = code(2, 1, &[&[1, 0], &[0, 1]]);
        assert!(matches!(full.dual(), Err(Error::Degenerate(_))));
    }

    #[test]
    fn hamming_code_has_defect_one_on_both_sides() {
        let report = hamming().classify(&EnumOpts::default()).unwrap();
        assert_eq!((report.d, report.dual_d), (3, 4));
        assert_eq!(report.verdict, Verdict::LMds(1));
        // n = 7 > 1*2 + 1 + 4 - 1 and k = 4 > -1: the parameters alone
        // already force the verdict here.
        assert!(report.forced_by_sufficiency);
    }

    #[test]
    fn repetition_and_tetracode_are_mds() {
        let rep = code(2, 1, &[&[1, 1, 1, 1, 1]]);
        let report = rep.classify(&EnumOpts::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Mds);
        assert_eq!((report.d, report.dual_d), (5, 2));

        let report = tetracode().classify(&EnumOpts::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Mds);
        assert_eq!(report.d, 3);
    }

    #[test]
    fn mismatched_defects_are_not_l_mds() {
        let c = code(2, 1, &[&[1, 0, 0, 0], &[0, 1, 1, 1]]);
        let report = c.classify(&EnumOpts::default()).unwrap();
        assert_eq!((report.defect, report.dual_defect), (2, 1));
        assert_eq!(report.verdict, Verdict::NotLMds);
        assert!(!report.forced_by_sufficiency);
        assert_eq!(report.verdict.common_defect(), None);
    }

    #[test]
    fn weight_distribution_sources_and_caps() {
        let c = hamming();
        let direct = c.weight_distribution(&EnumOpts::with_cap(16)).unwrap();
        assert_eq!(direct.source(), Source::Enumerated);
        assert_eq!(direct.to_string(), "1 + 7z^3 + 7z^4 + z^7");
        // Too small for 2^4 but enough for the dual's 2^3: transformed.
        let via_dual = c.weight_distribution(&EnumOpts::with_cap(8)).unwrap();
        assert_eq!(via_dual.source(), Source::MacWilliams);
        assert_eq!(via_dual.counts(), direct.counts());
        let err = c.weight_distribution(&EnumOpts::with_cap(4)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { needed: 8, cap: 4 }));
    }

    #[test]
    fn wd_pair_agrees_with_both_sides() {
        let c = tetracode();
        let (wd, dual_wd) = c.wd_pair(&EnumOpts::default()).unwrap();
        let dual_direct = c.dual().unwrap().weight_distribution(&EnumOpts::default()).unwrap();
        assert_eq!(dual_wd.counts(), dual_direct.counts());
        assert_eq!(wd.min_weight(), Some(3));
    }

    #[test]
    fn ghw_profile_of_the_simplex_code() {
        let simplex = code(2, 1, &[&[0, 0, 0, 1, 1, 1, 1], &[0, 1, 1, 0, 0, 1, 1], &[1, 0, 1, 0, 1, 0, 1]]);
        assert_eq!(simplex.ghw_profile(1 << 20).unwrap(), vec![4, 6, 7]);
    }

    #[test]
    fn ghw_matches_the_subset_rank_oracle() {
        let samples = [
            hamming(),
            tetracode(),
            code(2, 3, &[&[1, 0, 2, 3, 1], &[0, 1, 1, 7, 4]]),
            code(5, 1, &[&[1, 0, 0, 4, 2], &[0, 1, 0, 1, 1], &[0, 0, 1, 3, 2]]),
        ];
        for c in samples {
            for r in 1..=c.k() {
                assert_eq!(
                    c.ghw(r, 1 << 20).unwrap(),
                    ghw_oracle(&c, r),
                    "rank-{r} weight of {c:?}"
                );
            }
        }
    }

    #[test]
    fn ghw_profile_is_strictly_increasing() {
        let profile = hamming().ghw_profile(1 << 20).unwrap();
        assert_eq!(profile, vec![3, 5, 6, 7]);
        assert!(profile.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ghw_duality_partitions_the_coordinate_range() {
        // The weights of C and the reflected complements of the dual's
        // weights tile {1, .., n} exactly.
        for c in [hamming(), tetracode()] {
            let n = c.n();
            let primal = c.ghw_profile(1 << 20).unwrap();
            let dual = c.dual().unwrap().ghw_profile(1 << 20).unwrap();
            let mut union: Vec<usize> = primal
                .iter()
                .copied()
                .chain(dual.iter().map(|&d| n + 1 - d))
                .collect();
            union.sort();
            assert_eq!(union, (1..=n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn ghw_respects_the_cap() {
        let err = hamming().ghw(2, 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { needed: 35, cap: 10 }));
        assert!(matches!(hamming().ghw(0, 100), Err(Error::Unsupported(_))));
        assert!(matches!(hamming().ghw(5, 100), Err(Error::Unsupported(_))));
    }

    #[test]
    fn puncture_keeps_or_drops_dimension() {
        let c = tetracode();
        let p = c.puncture(3).unwrap();
        assert_eq!((p.n(), p.k()), (3, 2));
        let report = p.classify(&EnumOpts::default()).unwrap();
        assert_eq!(report.d, 2);
        // A coordinate carrying a weight-one word: dimension drops.
        let id = code(2, 1, &[&[1, 0, 0], &[0, 1, 0]]);
        let dropped = id.puncture(1).unwrap();
        assert_eq!((dropped.n(), dropped.k()), (2, 1));
        assert!(id.puncture(5).is_err());
    }

    #[test]
    fn shorten_fixes_a_zero_coordinate() {
        let c = tetracode();
        let s = c.shorten(3).unwrap();
        assert_eq!((s.n(), s.k()), (3, 1));
        // Every codeword of the shortened code lifts back with a zero there.
        let wd = s.weight_distribution(&EnumOpts::default()).unwrap();
        assert_eq!(wd.min_weight(), Some(3));
        // Shortening a [1+]-dim code at a full coordinate of a 1-dim code
        // would empty it.
        let rep = code(2, 1, &[&[1, 1, 1]]);
        assert!(matches!(rep.shorten(0), Err(Error::Degenerate(_))));
        // Column of zeros: dimension is kept.
        let z = code(2, 1, &[&[1, 0, 1], &[0, 0, 1]]);
        let sz = z.shorten(1).unwrap();
        assert_eq!((sz.n(), sz.k()), (2, 2));
    }

    #[test]
    fn galois_duals_pair_to_zero_and_share_weights() {
        let c = code(2, 2, &[&[1, 0, 2, 3], &[0, 1, 1, 1]]);
        let f = c.field().clone();
        let reference = c.dual().unwrap().weight_distribution(&EnumOpts::default()).unwrap();
        for e in 0..f.h() {
            let dual_e = c.galois_dual(e).unwrap();
            for g in c.rows() {
                for y in dual_e.rows() {
                    assert_eq!(f.galois_inner(g, y, e).unwrap(), 0, "e={e}");
                }
            }
            let wd = dual_e.weight_distribution(&EnumOpts::default()).unwrap();
            assert_eq!(wd.counts(), reference.counts(), "e={e}");
        }
        assert_eq!(c.galois_dual(0).unwrap(), c.dual().unwrap());
    }

    #[test]
    fn defect_zero_is_always_forced_by_the_sufficient_condition() {
        // Evaluation code at points 1..4 over GF(5), reduced: an MDS code.
        // Defect 0 satisfies the hypotheses trivially, so the classifier
        // must record the verdict as forced and the dual must agree.
        let rs = code(5, 1, &[&[1, 0, 4, 3], &[0, 1, 2, 3]]);
        let report = rs.classify(&EnumOpts::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Mds);
        assert!(report.forced_by_sufficiency);
    }
}
