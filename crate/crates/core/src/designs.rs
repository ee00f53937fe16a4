//! Combinatorial designs carried by the supports of fixed-weight words.
//!
//! For several families, the supports of all minimum-weight codewords,
//! taken once per scalar class (each support is shared by exactly the
//! `q - 1` scalar multiples), form a `t`-design on the coordinate set.
//! This module extracts the support multiset of any weight class and
//! checks the design property exactly.

use std::collections::BTreeMap;

use crate::codecore::{for_each_codeword, EnumOpts, LinearCode};
use crate::comb::{binom, for_each_combination};
use crate::gf::Elem;
use crate::{linalg, Error, Result};

/// Supports of all codewords of Hamming weight `w`, as coordinate
/// bitmasks with the number of codewords sharing each support.
///
/// Either the whole code is walked (when `q^k` fits the cap) or, for
/// larger codes, each candidate `w`-subset of coordinates is tested by
/// restricting the generator matrix: the words supported inside a subset
/// `S` form a subcode of dimension `k - rank(G outside S)`, which is then
/// enumerated on its own.
pub fn supports_at_weight(
    code: &LinearCode,
    w: usize,
    opts: &EnumOpts,
) -> Result<BTreeMap<u64, u64>> {
    let n = code.n();
    if n > 64 {
        return Err(Error::Unsupported("support extraction needs n <= 64".into()));
    }
    if w == 0 || w > n {
        return Err(Error::Unsupported(format!(
            "weight {w} out of range 1..={n}"
        )));
    }
    let q = code.field().q();
    let mut size = 1u128;
    for _ in 0..code.k() {
        size = size.saturating_mul(q as u128);
    }
    if size <= opts.cap as u128 {
        let mut map = BTreeMap::new();
        for_each_codeword(code, opts.cap, |word| {
            let mut mask = 0u64;
            let mut weight = 0;
            for (j, &x) in word.iter().enumerate() {
                if x != 0 {
                    mask |= 1 << j;
                    weight += 1;
                }
            }
            if weight == w {
                *map.entry(mask).or_insert(0) += 1;
            }
        })?;
        return Ok(map);
    }
    supports_by_subsets(code, w, opts)
}

fn supports_by_subsets(code: &LinearCode, w: usize, opts: &EnumOpts) -> Result<BTreeMap<u64, u64>> {
    let f = code.field();
    let q = f.q();
    let (n, k) = (code.n(), code.k());
    let subsets = binom(n as u64, w as u64);
    if subsets > opts.cap.into() {
        return Err(Error::CapExceeded {
            needed: u128::try_from(&subsets).unwrap_or(u128::MAX),
            cap: opts.cap as u128,
        });
    }
    let mut map = BTreeMap::new();
    let mut failure: Option<Error> = None;
    for_each_combination(n, w, |inside| {
        if failure.is_some() {
            return;
        }
        let mask = inside.iter().fold(0u64, |m, &j| m | 1 << j);
        // Message vectors sending every outside coordinate to zero.
        let outside_cols: Vec<Vec<Elem>> = (0..n)
            .filter(|j| mask & (1 << j) == 0)
            .map(|j| code.rows().iter().map(|row| row[j]).collect())
            .collect();
        let kernel = linalg::right_kernel(f, &outside_cols, k);
        let delta = kernel.len();
        if delta == 0 {
            return;
        }
        let mut sub_size = 1u128;
        for _ in 0..delta {
            sub_size = sub_size.saturating_mul(q as u128);
        }
        if sub_size > opts.cap as u128 {
            failure = Some(Error::CapExceeded { needed: sub_size, cap: opts.cap as u128 });
            return;
        }
        // Walk the subcode spanned by the kernel messages and keep the
        // words whose support is exactly the chosen subset.
        let sub = LinearCode::from_rows(
            f.clone(),
            kernel.iter().map(|m| linalg::encode(f, code.rows(), m)).collect(),
        )
        .expect("kernel messages encode to independent nonzero words");
        let mut exact = 0u64;
        let res = for_each_codeword(&sub, opts.cap, |word| {
            let full = word
                .iter()
                .enumerate()
                .all(|(j, &x)| mask & (1 << j) == 0 || x != 0);
            if full {
                exact += 1;
            }
        });
        if let Err(e) = res {
            failure = Some(e);
            return;
        }
        if exact > 0 {
            map.insert(mask, exact);
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(map),
    }
}

/// Result of a design check over a block multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignCheck {
    pub t: usize,
    /// Number of points (code length).
    pub points: usize,
    /// Common block size.
    pub block_size: usize,
    /// Number of blocks, with multiplicity.
    pub blocks: u64,
    /// True when no block repeats.
    pub simple: bool,
    /// The common `t`-subset count when the multiset is a design.
    pub lambda: Option<u64>,
    /// Smallest and largest `t`-subset counts actually observed.
    pub lambda_range: (u64, u64),
}

impl DesignCheck {
    /// Whether the blocks form a `t`-design.
    pub fn is_design(&self) -> bool {
        self.lambda.is_some()
    }
}

/// Check the `t`-design property of an explicit block multiset on
/// `points` points; all blocks must share one size.
pub fn check_block_multiset(
    points: usize,
    blocks: &BTreeMap<u64, u64>,
    t: usize,
) -> Result<DesignCheck> {
    if blocks.is_empty() {
        return Err(Error::Degenerate("no blocks to check".into()));
    }
    if points > 64 {
        return Err(Error::Unsupported("design check needs at most 64 points".into()));
    }
    let block_size = blocks.keys().next().unwrap().count_ones() as usize;
    if t > block_size {
        return Err(Error::Unsupported(format!(
            "t={t} exceeds the block size {block_size}"
        )));
    }
    for mask in blocks.keys() {
        if mask.count_ones() as usize != block_size {
            return Err(Error::Inconsistent(format!(
                "blocks of mixed sizes: {} vs {block_size}",
                mask.count_ones()
            )));
        }
        if *mask >> points != 0 {
            return Err(Error::Inconsistent("block uses a point out of range".into()));
        }
    }
    let mut min_l = u64::MAX;
    let mut max_l = 0u64;
    for_each_combination(points, t, |subset| {
        let tmask = subset.iter().fold(0u64, |m, &j| m | 1 << j);
        let count: u64 = blocks
            .iter()
            .filter(|(mask, _)| *mask & tmask == tmask)
            .map(|(_, mult)| mult)
            .sum();
        min_l = min_l.min(count);
        max_l = max_l.max(count);
    });
    Ok(DesignCheck {
        t,
        points,
        block_size,
        blocks: blocks.values().sum(),
        simple: blocks.values().all(|&m| m == 1),
        lambda: (min_l == max_l).then_some(min_l),
        lambda_range: (min_l, max_l),
    })
}

/// Check whether the supports of the weight-`w` codewords, one block per
/// scalar class, form a `t`-design.
pub fn check_design(code: &LinearCode, w: usize, t: usize, opts: &EnumOpts) -> Result<DesignCheck> {
    let scalars = code.field().q() - 1;
    let supports = supports_at_weight(code, w, opts)?;
    if supports.is_empty() {
        return Err(Error::Degenerate(format!("the code has no words of weight {w}")));
    }
    let mut blocks = BTreeMap::new();
    for (mask, count) in supports {
        if count % scalars != 0 {
            return Err(Error::Inconsistent(format!(
                "support {mask:#b} carries {count} words, not a multiple of q-1 = {scalars}"
            )));
        }
        blocks.insert(mask, count / scalars);
    }
    check_block_multiset(code.n(), &blocks, t)
}

/// Parameters of the complementary design: replacing every block of a
/// `t-(v, w, lambda)` design by its complement yields a
/// `t-(v, v-w, lambda * C(v-t, w) / C(v-t, w-t))` design.
pub fn complementary_params(t: usize, v: usize, w: usize, lambda: u64) -> Result<(usize, usize, usize, u64)> {
    if w > v || t > v - w {
        return Err(Error::Unsupported(format!(
            "complement of blocks of size {w} on {v} points has no {t}-design structure"
        )));
    }
    let num = binom((v - t) as u64, w as u64) * lambda;
    let lam = crate::comb::exact_div(&num, &binom((v - t) as u64, (w - t) as u64), "complementary lambda")?;
    let lam = u64::try_from(&lam)
        .map_err(|_| Error::Unsupported("complementary lambda exceeds u64".into()))?;
    Ok((t, v, v - w, lam))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ckfamily::build_ck;
    use crate::gf::Field;

    #[test]
    fn minimum_supports_of_the_q8_k4_member_form_the_fano_plane() {
        let f = Field::new(2, 3, None).unwrap();
        let code = build_ck(&f, 4).unwrap();
        let check = check_design(&code, 3, 2, &EnumOpts::default()).unwrap();
        assert!(check.is_design());
        assert_eq!(check.lambda, Some(1));
        assert_eq!(check.blocks, 7);
        assert!(check.simple);
        assert_eq!((check.points, check.block_size), (7, 3));

        // The dual's minimum-weight supports form the complementary design.
        let dual_check = check_design(&code.dual().unwrap(), 4, 2, &EnumOpts::default()).unwrap();
        assert_eq!(dual_check.lambda, Some(2));
        assert_eq!(dual_check.blocks, 7);
    }

    #[test]
    fn complement_formula_matches_directly_complemented_blocks() {
        let f = Field::new(2, 3, None).unwrap();
        let code = build_ck(&f, 4).unwrap();
        let supports = supports_at_weight(&code, 3, &EnumOpts::default()).unwrap();
        let flipped: BTreeMap<u64, u64> = supports
            .iter()
            .map(|(mask, count)| ((!mask) & 0x7f, count / 7))
            .collect();
        let direct = check_block_multiset(7, &flipped, 2).unwrap();
        let (t, v, w, lam) = complementary_params(2, 7, 3, 1).unwrap();
        assert_eq!((t, v, w), (2, 7, 4));
        assert_eq!(direct.lambda, Some(lam));
        assert_eq!(lam, 2);
    }

    #[test]
    fn subset_path_agrees_with_full_enumeration() {
        let f = Field::new(2, 3, None).unwrap();
        let code = build_ck(&f, 3).unwrap();
        for w in [3usize, 4, 5, 6] {
            let full = supports_at_weight(&code, w, &EnumOpts::default()).unwrap();
            // 8^3 = 512 > 256 forces the per-subset route.
            let subset = supports_at_weight(&code, w, &EnumOpts::with_cap(256)).unwrap();
            assert_eq!(full, subset, "w={w}");
        }
    }

    #[test]
    fn non_designs_are_reported_with_their_spread() {
        let f = Field::new(2, 1, None).unwrap();
        let code = LinearCode::from_rows(
            f,
            vec![vec![1, 0, 0, 0], vec![0, 1, 1, 1]],
        )
        .unwrap();
        let check = check_design(&code, 1, 1, &EnumOpts::default()).unwrap();
        assert!(!check.is_design());
        assert_eq!(check.lambda_range, (0, 1));
    }

    #[test]
    fn q16_member_designs_via_the_subset_route() {
        let f = Field::new(2, 4, None).unwrap();
        let code = build_ck(&f, 7).unwrap();
        // Dual minimum weight 7: a 2-(15, 7, 87) design, 435 blocks.
        let dual = code.dual().unwrap();
        let check = check_design(&dual, 7, 2, &EnumOpts::default()).unwrap();
        assert_eq!(check.lambda, Some(87));
        assert_eq!(check.blocks, 435);
        // Primal minimum weight 8: the complementary 2-(15, 8, 116) design.
        let check = check_design(&code, 8, 2, &EnumOpts::default()).unwrap();
        assert_eq!(check.lambda, Some(116));
        assert_eq!(check.blocks, 435);
        assert_eq!(
            complementary_params(2, 15, 7, 87).unwrap(),
            (2, 15, 8, 116)
        );
    }

    #[test]
    fn guards() {
        let f = Field::new(2, 1, None).unwrap();
        let code = LinearCode::from_rows(f, vec![vec![1, 1, 1]]).unwrap();
        assert!(supports_at_weight(&code, 0, &EnumOpts::default()).is_err());
        assert!(supports_at_weight(&code, 4, &EnumOpts::default()).is_err());
        assert!(matches!(
            check_design(&code, 2, 1, &EnumOpts::default()),
            Err(Error::Degenerate(_))
        ));
        let blocks: BTreeMap<u64, u64> = [(0b111u64, 1), (0b11u64, 1)].into_iter().collect();
        assert!(matches!(
            check_block_multiset(5, &blocks, 1),
            Err(Error::Inconsistent(_))
        ));
    }
}
