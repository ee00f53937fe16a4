//! Exhaustive codeword walks.
//!
//! Messages are visited in a loopless reflected mixed-radix Gray order, so
//! consecutive codewords differ in exactly one message digit and the running
//! codeword is updated by adding a single pre-scaled generator row.  Over
//! characteristic two, codewords are additionally bit-packed into a `u64`
//! (one lane per coordinate) and Hamming weights are read off with
//! lane-parallel mask arithmetic instead of a per-coordinate scan.

use super::LinearCode;
use crate::gf::{Elem, Field};
use crate::{Error, Result};

/// Knobs for exhaustive enumeration.
#[derive(Clone, Copy, Debug)]
pub struct EnumOpts {
    /// Largest number of words a single enumeration may visit.
    pub cap: u64,
    /// Worker threads for the packed characteristic-two path.
    pub threads: usize,
}

impl Default for EnumOpts {
    fn default() -> Self {
        EnumOpts { cap: 1 << 24, threads: 1 }
    }
}

impl EnumOpts {
    /// Default options with a different cap.
    pub fn with_cap(cap: u64) -> Self {
        EnumOpts { cap, ..Default::default() }
    }
}

/// `q^k`, saturating, for cap checks.
pub(crate) fn space_size(q: u64, k: usize) -> u128 {
    let mut size: u128 = 1;
    for _ in 0..k {
        size = size.saturating_mul(q as u128);
    }
    size
}

/// Loopless reflected mixed-radix Gray walk over `radix^k` messages.
/// Each step names the single digit that changed and its old/new values.
struct GrayWalker {
    radix: u32,
    digits: Vec<u32>,
    dirs: Vec<i8>,
    focus: Vec<usize>,
}

impl GrayWalker {
    fn new(k: usize, radix: u32) -> GrayWalker {
        debug_assert!(radix >= 2);
        GrayWalker {
            radix,
            digits: vec![0; k],
            dirs: vec![1; k],
            focus: (0..=k).collect(),
        }
    }

    fn step(&mut self) -> Option<(usize, u32, u32)> {
        let j = self.focus[0];
        self.focus[0] = 0;
        if j == self.digits.len() {
            return None;
        }
        let old = self.digits[j];
        let new = (old as i64 + self.dirs[j] as i64) as u32;
        self.digits[j] = new;
        if new == 0 || new == self.radix - 1 {
            self.dirs[j] = -self.dirs[j];
            self.focus[j] = self.focus[j + 1];
            self.focus[j + 1] = j + 1;
        }
        Some((j, old, new))
    }
}

/// Weight histogram over all `q^k` codewords (including zero).  The caller
/// is responsible for the cap check.
pub(crate) fn weight_counts(code: &LinearCode, opts: &EnumOpts) -> Vec<u64> {
    let f = code.field();
    if f.p() == 2 && code.n() * (f.h() as usize) <= 64 {
        packed_counts(code, opts)
    } else {
        generic_counts(code)
    }
}

fn generic_counts(code: &LinearCode) -> Vec<u64> {
    let f = code.field();
    let q = f.q() as u32;
    let (n, k) = (code.n(), code.k());
    let scaled = scaled_rows(f, code.rows());
    let mut counts = vec![0u64; n + 1];
    let mut cur = vec![0 as Elem; n];
    let mut weight = 0usize;
    counts[0] += 1;
    let mut walker = GrayWalker::new(k, q);
    while let Some((j, old, new)) = walker.step() {
        let delta = f.sub(new as Elem, old as Elem);
        for (c, &dx) in cur.iter_mut().zip(&scaled[j][delta as usize]) {
            if dx != 0 {
                let was = *c;
                *c = f.add(was, dx);
                weight += (*c != 0) as usize;
                weight -= (was != 0) as usize;
            }
        }
        counts[weight] += 1;
    }
    counts
}

/// `scaled[j][s] = s * row_j` for every element code `s`.
fn scaled_rows(f: &Field, rows: &[Vec<Elem>]) -> Vec<Vec<Vec<Elem>>> {
    rows.iter()
        .map(|row| {
            (0..f.q() as Elem)
                .map(|s| row.iter().map(|&x| f.mul(s, x)).collect())
                .collect()
        })
        .collect()
}

fn packed_counts(code: &LinearCode, opts: &EnumOpts) -> Vec<u64> {
    let f = code.field();
    let q = f.q() as u32;
    let w = f.h() as usize;
    let (n, k) = (code.n(), code.k());

    // Per-lane masks: `hi` holds each lane's top bit, `low` the rest.
    let mut hi = 0u64;
    let mut low = 0u64;
    for i in 0..n {
        let base = i * w;
        hi |= 1u64 << (base + w - 1);
        low |= ((1u64 << (w - 1)) - 1) << base;
    }

    // row_packed[j][s] = packed(s * row_j); in characteristic two, packing
    // turns vector addition into XOR, so the Gray-step deltas below are
    // plain XOR masks.
    let row_packed: Vec<Vec<u64>> = code
        .rows()
        .iter()
        .map(|row| {
            (0..q as Elem)
                .map(|s| {
                    let mut word = 0u64;
                    for (i, &x) in row.iter().enumerate() {
                        word |= (f.mul(s, x) as u64) << (i * w);
                    }
                    word
                })
                .collect()
        })
        .collect();
    // trans[j][a] flips the codeword between messages whose digit j is a
    // and a+1 (Gray steps only ever move a digit by one).
    let trans: Vec<Vec<u64>> = row_packed
        .iter()
        .map(|per_s| (0..q as usize - 1).map(|a| per_s[a] ^ per_s[a + 1]).collect())
        .collect();

    let mut counts = vec![0u64; n + 1];
    let threads = opts.threads.min(q as usize);
    if threads > 1 && k >= 2 {
        // Partition on the top message digit; each worker walks the
        // remaining k-1 digits.  Counting is order-independent, so the
        // merged histogram is deterministic.
        let chunk = (q as usize).div_ceil(threads);
        let partials = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for t in 0..threads {
                let lo = t * chunk;
                let top = ((t + 1) * chunk).min(q as usize);
                let row_packed = &row_packed;
                let trans = &trans;
                handles.push(scope.spawn(move || {
                    let mut local = vec![0u64; n + 1];
                    for v in lo..top {
                        let mut cur = row_packed[k - 1][v];
                        local[nonzero_lanes(cur, hi, low) as usize] += 1;
                        let mut walker = GrayWalker::new(k - 1, q);
                        while let Some((j, old, new)) = walker.step() {
                            cur ^= trans[j][old.min(new) as usize];
                            local[nonzero_lanes(cur, hi, low) as usize] += 1;
                        }
                    }
                    local
                }));
            }
            handles.into_iter().map(|h| h.join().unwrap()).collect::<Vec<_>>()
        });
        for partial in partials {
            for (c, v) in counts.iter_mut().zip(partial) {
                *c += v;
            }
        }
    } else {
        let mut cur = 0u64;
        counts[0] += 1;
        let mut walker = GrayWalker::new(k, q);
        while let Some((j, old, new)) = walker.step() {
            cur ^= trans[j][old.min(new) as usize];
            counts[nonzero_lanes(cur, hi, low) as usize] += 1;
        }
    }
    counts
}

/// Number of nonzero `w`-bit lanes of `x`, where `hi` marks each lane's top
/// bit and `low` the remaining bits.  A lane is nonzero iff its top bit is
/// set or its low part carries into the top position when `low` is added.
#[inline]
fn nonzero_lanes(x: u64, hi: u64, low: u64) -> u32 {
    let carry = ((x & low) + low) & hi;
    ((x & hi) | carry).count_ones()
}

/// Visit every codeword exactly once, starting from zero.
pub fn for_each_codeword<F: FnMut(&[Elem])>(
    code: &LinearCode,
    cap: u64,
    mut visit: F,
) -> Result<()> {
    let f = code.field();
    let q = f.q();
    let size = space_size(q, code.k());
    if size > cap as u128 {
        return Err(Error::CapExceeded { needed: size, cap: cap as u128 });
    }
    let scaled = scaled_rows(f, code.rows());
    let mut cur = vec![0 as Elem; code.n()];
    visit(&cur);
    let mut walker = GrayWalker::new(code.k(), q as u32);
    while let Some((j, old, new)) = walker.step() {
        let delta = f.sub(new as Elem, old as Elem);
        for (c, &dx) in cur.iter_mut().zip(&scaled[j][delta as usize]) {
            if dx != 0 {
                *c = f.add(*c, dx);
            }
        }
        visit(&cur);
    }
    Ok(())
}

/// Minimum support size over all `r`-dimensional subcodes, by walking the
/// canonical echelon bases of `r`-subspaces of the message space.  Bases
/// sharing a pivot set are visited by an odometer over the free entries,
/// updating the encoded rows incrementally.
pub(crate) fn min_support_subspaces(code: &LinearCode, r: usize) -> usize {
    let f = code.field().clone();
    let q = f.q() as u32;
    let k = code.k();
    let n = code.n();
    let gen = code.rows();
    let mut best = n;
    crate::comb::for_each_combination(k, r, |pivots| {
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in (p + 1)..k {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        // Start of this pivot block: basis row i is the unit message
        // vector at pivot i, so its encoding is generator row pivots[i].
        let mut enc: Vec<Vec<Elem>> = pivots.iter().map(|&p| gen[p].clone()).collect();
        let mut digits = vec![0u32; free.len()];
        'block: loop {
            let mut support = 0u128;
            for row in &enc {
                for (j, &x) in row.iter().enumerate() {
                    if x != 0 {
                        support |= 1 << j;
                    }
                }
            }
            best = best.min(support.count_ones() as usize);

            let mut t = 0;
            loop {
                if t == digits.len() {
                    break 'block;
                }
                let (i, j) = free[t];
                let old = digits[t];
                let new = if old + 1 == q { 0 } else { old + 1 };
                digits[t] = new;
                let delta = f.sub(new as Elem, old as Elem);
                for (c, &g) in enc[i].iter_mut().zip(&gen[j]) {
                    *c = f.add(*c, f.mul(delta, g));
                }
                if new != 0 {
                    break;
                }
                t += 1;
            }
        }
    });
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn code(p: u64, h: u32, rows: &[&[Elem]]) -> LinearCode {
        let f = Field::new(p, h, None).unwrap();
        LinearCode::from_rows(f, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn gray_walk_visits_every_message_once() {
        for (k, q) in [(1usize, 2u32), (3, 2), (2, 5), (3, 4), (4, 3)] {
            let mut walker = GrayWalker::new(k, q);
            let mut seen = std::collections::HashSet::new();
            seen.insert(walker.digits.clone());
            while let Some((j, old, new)) = walker.step() {
                assert_eq!(old.abs_diff(new), 1, "digit moved by one");
                assert!(j < k);
                assert!(seen.insert(walker.digits.clone()), "message repeated");
            }
            assert_eq!(seen.len(), (q as usize).pow(k as u32));
        }
    }

    #[test]
    fn packed_and_generic_paths_agree() {
        let samples = [
            code(2, 3, &[&[1, 2, 4, 3, 0, 1, 1], &[0, 1, 0, 5, 2, 7, 6], &[0, 0, 1, 1, 1, 1, 4]]),
            code(2, 2, &[&[1, 0, 2, 3, 1, 2], &[0, 1, 1, 1, 3, 0], &[0, 0, 1, 2, 3, 1]]),
            code(2, 1, &[&[1, 0, 1, 1, 0, 1, 1], &[0, 1, 0, 1, 1, 1, 0]]),
        ];
        for c in samples {
            let packed = packed_counts(&c, &EnumOpts::default());
            let generic = generic_counts(&c);
            assert_eq!(packed, generic);
            assert_eq!(packed.iter().sum::<u64>(), c.field().q().pow(c.k() as u32));
        }
    }

    #[test]
    fn threaded_walk_matches_single_threaded() {
        let c = code(
            2,
            3,
            &[&[1, 0, 0, 3, 5, 7, 2], &[0, 1, 0, 1, 6, 2, 4], &[0, 0, 1, 2, 2, 1, 1]],
        );
        let single = packed_counts(&c, &EnumOpts { cap: 1 << 24, threads: 1 });
        let multi4 = packed_counts(&c, &EnumOpts { cap: 1 << 24, threads: 4 });
        assert_eq!(single, multi4);
    }

    #[test]
    fn codeword_visitor_reaches_the_whole_code() {
        let c = code(3, 1, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let mut words = Vec::new();
        for_each_codeword(&c, 100, |w| words.push(w.to_vec())).unwrap();
        assert_eq!(words.len(), 9);
        words.sort();
        words.dedup();
        assert_eq!(words.len(), 9, "every codeword distinct");
        assert!(words.iter().all(|w| c.contains(w)));
        let err = for_each_codeword(&c, 8, |_| {}).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { needed: 9, cap: 8 }));
    }

    #[test]
    fn subspace_walk_covers_the_gaussian_binomial() {
        // Count visits with a side channel: every 2-subspace of GF(3)^3
        // should appear exactly once (13 of them).
        let c = code(3, 1, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let mut visits = 0u64;
        crate::comb::for_each_combination(3, 2, |pivots| {
            let free = pivots
                .iter()
                .map(|&p| ((p + 1)..3).filter(|j| !pivots.contains(j)).count())
                .sum::<usize>();
            visits += 3u64.pow(free as u32);
        });
        assert_eq!(visits, 13);
        assert_eq!(min_support_subspaces(&c, 2), 2);
    }
}
