//! Locality of codes and optimality as locally repairable codes.
//!
//! Coordinate `i` has locality `r_i` when some dual codeword of weight
//! `r_i + 1` touches it: the other `r_i` coordinates of that dual word
//! recover position `i`.  The code's locality is the worst coordinate.
//! Two optimality notions are checked exactly:
//!
//! * `d`-optimality against `d <= n - k - ceil(k/r) + 2`;
//! * `k`-optimality against `k <= min_t [ r t + K(n - t(r+1), d) ]`, with
//!   the Singleton surrogate `K(n', d) = max(0, n' - d + 1)` standing in
//!   for the true optimal dimension.

use crate::codecore::{EnumOpts, LinearCode};
use crate::designs::supports_at_weight;
use crate::{Error, Result};

/// Minimum distance found by scanning weights upward with the support
/// extractor, which stays feasible even when the full codeword walk does
/// not fit the cap.
pub fn min_distance_scan(code: &LinearCode, opts: &EnumOpts) -> Result<usize> {
    for w in 1..=code.n() {
        if !supports_at_weight(code, w, opts)?.is_empty() {
            return Ok(w);
        }
    }
    Err(Error::Inconsistent("a nonzero code has a nonzero word".into()))
}

/// Per-coordinate locality: entry `i` is one less than the lightest dual
/// codeword weight covering coordinate `i`.
pub fn coordinate_localities(code: &LinearCode, opts: &EnumOpts) -> Result<Vec<usize>> {
    let n = code.n();
    let dual = code.dual()?;
    let mut loc: Vec<Option<usize>> = vec![None; n];
    let mut missing = n;
    for w in 1..=n {
        if missing == 0 {
            break;
        }
        for mask in supports_at_weight(&dual, w, opts)?.keys() {
            for (i, slot) in loc.iter_mut().enumerate() {
                if slot.is_none() && mask & (1 << i) != 0 {
                    *slot = Some(w - 1);
                    missing -= 1;
                }
            }
        }
    }
    loc.into_iter()
        .enumerate()
        .map(|(i, slot)| {
            slot.ok_or_else(|| {
                Error::Degenerate(format!(
                    "coordinate {i} is touched by no dual codeword and cannot be repaired"
                ))
            })
        })
        .collect()
}

/// The locality of the code: the largest per-coordinate locality.
pub fn locality(code: &LinearCode, opts: &EnumOpts) -> Result<usize> {
    Ok(coordinate_localities(code, opts)?.into_iter().max().unwrap())
}

/// Upper bound `n - k - ceil(k/r) + 2` on the minimum distance of any
/// `[n, k]` code with locality `r`.
pub fn singleton_like_bound(n: usize, k: usize, r: usize) -> Result<usize> {
    if k == 0 || r == 0 || k > n {
        return Err(Error::Unsupported(format!(
            "bound needs 1 <= k <= n and r >= 1, got n={n} k={k} r={r}"
        )));
    }
    let bound = n as i64 - k as i64 - k.div_ceil(r) as i64 + 2;
    if bound < 1 {
        return Err(Error::Degenerate(format!(
            "no [{n}, {k}] code with locality {r} exists (distance bound {bound})"
        )));
    }
    Ok(bound as usize)
}

/// Dimension bound `min_t [ r t + max(0, n - t(r+1) - d + 1) ]` over
/// `t >= 1`, with the minimizing `t`.
pub fn cm_bound(n: usize, d: usize, r: usize) -> Result<(usize, usize)> {
    if r == 0 || d == 0 || d > n {
        return Err(Error::Unsupported(format!(
            "bound needs 1 <= d <= n and r >= 1, got n={n} d={d} r={r}"
        )));
    }
    let mut best: Option<(usize, usize)> = None;
    for t in 1..=n {
        let slack = (n + 1).saturating_sub(t * (r + 1) + d);
        let value = r * t + slack;
        if best.map_or(true, |(b, _)| value < b) {
            best = Some((value, t));
        }
        if slack == 0 {
            break;
        }
    }
    Ok(best.expect("t = 1 is always evaluated"))
}

/// Locality report with both optimality verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrcReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub locality: usize,
    /// Distance bound for this (n, k, locality).
    pub singleton_like: usize,
    pub d_optimal: bool,
    /// Dimension bound for this (n, d, locality), and its minimizing t.
    pub cm: usize,
    pub cm_t: usize,
    pub k_optimal: bool,
}

/// Measure the code's locality and compare it against both bounds.
pub fn lrc_report(code: &LinearCode, opts: &EnumOpts) -> Result<LrcReport> {
    let (n, k) = (code.n(), code.k());
    let d = min_distance_scan(code, opts)?;
    let r = locality(code, opts)?;
    if r == 0 {
        return Err(Error::Degenerate(
            "a coordinate is identically zero; locality bounds do not apply".into(),
        ));
    }
    let singleton_like = singleton_like_bound(n, k, r)?;
    if d > singleton_like {
        return Err(Error::Inconsistent(format!(
            "distance {d} exceeds the locality-{r} bound {singleton_like}"
        )));
    }
    let (cm, cm_t) = cm_bound(n, d, r)?;
    if k > cm {
        return Err(Error::Inconsistent(format!(
            "dimension {k} exceeds the locality-{r} bound {cm}"
        )));
    }
    Ok(LrcReport {
        n,
        k,
        d,
        locality: r,
        singleton_like,
        d_optimal: d == singleton_like,
        cm,
        cm_t,
        k_optimal: k == cm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ckfamily::build_ck;
    use crate::gf::Field;

    #[test]
    fn hamming_code_is_an_optimal_lrc() {
        let f = Field::new(2, 1, None).unwrap();
        let code = LinearCode::from_rows(
            f,
            vec![
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap();
        let report = lrc_report(&code, &EnumOpts::default()).unwrap();
        assert_eq!(report.d, 3);
        assert_eq!(report.locality, 3, "simplex dual words have weight 4");
        assert_eq!(report.singleton_like, 3);
        assert!(report.d_optimal);
        assert_eq!((report.cm, report.cm_t), (4, 1));
        assert!(report.k_optimal);
    }

    #[test]
    fn repetition_code_locality() {
        let f = Field::new(2, 1, None).unwrap();
        let code = LinearCode::from_rows(f, vec![vec![1, 1, 1]]).unwrap();
        let report = lrc_report(&code, &EnumOpts::default()).unwrap();
        assert_eq!(report.locality, 1);
        assert_eq!(report.d, 3);
        assert!(report.d_optimal);
    }

    #[test]
    fn family_members_and_their_duals_are_doubly_optimal() {
        let f = Field::new(2, 3, None).unwrap();
        for k in 3..=4usize {
            let code = build_ck(&f, k).unwrap();
            let report = lrc_report(&code, &EnumOpts::default()).unwrap();
            assert_eq!(report.d, 7 - k);
            assert_eq!(report.locality, k - 1, "dual minimum weight is k");
            assert!(report.d_optimal, "k={k}");
            assert!(report.k_optimal, "k={k}");

            let dual_report = lrc_report(&code.dual().unwrap(), &EnumOpts::default()).unwrap();
            assert_eq!(dual_report.d, k);
            assert_eq!(dual_report.locality, 7 - k - 1);
            assert!(dual_report.d_optimal, "dual k={k}");
            assert!(dual_report.k_optimal, "dual k={k}");
        }
    }

    #[test]
    fn q16_member_is_doubly_optimal_through_the_subset_route() {
        let f = Field::new(2, 4, None).unwrap();
        let code = build_ck(&f, 7).unwrap();
        let report = lrc_report(&code, &EnumOpts::default()).unwrap();
        assert_eq!(report.d, 8);
        assert_eq!(report.locality, 6);
        assert!(report.d_optimal);
        assert!(report.k_optimal);
    }

    #[test]
    fn per_coordinate_localities_are_reported() {
        // One coordinate is repaired by a weight-2 dual word; the others
        // need weight 3.
        let f = Field::new(2, 1, None).unwrap();
        let code = LinearCode::from_rows(
            f,
            vec![vec![1, 0, 0, 1, 1], vec![0, 1, 0, 1, 0], vec![0, 0, 1, 1, 0]],
        )
        .unwrap();
        let locs = coordinate_localities(&code, &EnumOpts::default()).unwrap();
        assert_eq!(locs.len(), 5);
        assert_eq!(locs.iter().max(), Some(&locality(&code, &EnumOpts::default()).unwrap()));
    }

    #[test]
    fn unrepairable_coordinates_are_rejected() {
        // G = [1 0; 0 1] punctured down: the dual of [2, 1] {(0,1)} is
        // {(1,0)}: coordinate 1 is touched by no dual word.
        let f = Field::new(2, 1, None).unwrap();
        let code = LinearCode::from_rows(f, vec![vec![0, 1]]).unwrap();
        assert!(matches!(
            coordinate_localities(&code, &EnumOpts::default()),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn bound_guards() {
        assert!(singleton_like_bound(7, 0, 2).is_err());
        assert!(singleton_like_bound(7, 4, 0).is_err());
        assert!(singleton_like_bound(3, 3, 1).is_err());
        assert!(cm_bound(7, 0, 2).is_err());
        assert_eq!(cm_bound(7, 3, 3).unwrap(), (4, 1));
    }
}
