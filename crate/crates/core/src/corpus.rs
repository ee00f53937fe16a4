//! Deterministic code corpora for property checking: a seeded random
//! family over several small fields plus named witness codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codecore::LinearCode;
use crate::gf::{Elem, Field};

/// Default seed for the shared property-check corpus.
pub const CORPUS_SEED: u64 = 0xC0DE;

/// A ternary [9,5,3] code with defect two on both sides, used by several
/// worked checks; its dual is a [9,4,4] code.
pub fn ternary_953_witness() -> LinearCode {
    let f = Field::new(3, 1, None).unwrap();
    LinearCode::from_rows(
        f,
        vec![
            vec![1, 0, 0, 0, 0, 0, 1, 1, 2],
            vec![0, 1, 0, 0, 0, 2, 1, 1, 0],
            vec![0, 0, 1, 0, 0, 1, 2, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0, 2, 1],
            vec![0, 0, 0, 0, 1, 1, 1, 1, 1],
        ],
    )
    .unwrap()
}

/// The [7,4,3] binary code with defect one on both sides.
pub fn binary_743_witness() -> LinearCode {
    let f = Field::new(2, 1, None).unwrap();
    LinearCode::from_rows(
        f,
        vec![
            vec![1, 0, 0, 0, 1, 1, 0],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1, 1],
        ],
    )
    .unwrap()
}

/// One uniformly random `[n, k]` code: generator entries drawn uniformly,
/// redrawn until the rows are independent.
pub fn random_code(f: &Field, n: usize, k: usize, rng: &mut ChaCha8Rng) -> LinearCode {
    loop {
        let rows: Vec<Vec<Elem>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..f.q()) as Elem).collect())
            .collect();
        match LinearCode::from_rows(f.clone(), rows) {
            Ok(code) if code.k() == k => return code,
            _ => continue,
        }
    }
}

/// A deterministic corpus of over 500 random codes across the fields of
/// sizes 2, 3, 4, and 8 with lengths 4 through 12 and every intermediate
/// dimension.
pub fn corpus(seed: u64) -> Vec<LinearCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (p, h) in [(2u64, 1u32), (3, 1), (2, 2), (2, 3)] {
        let f = Field::new(p, h, None).unwrap();
        let reps = if f.q() == 2 { 3 } else { 2 };
        for n in 4..=12usize {
            for k in 1..n {
                for _ in 0..reps {
                    out.push(random_code(&f, n, k, &mut rng));
                }
            }
        }
    }
    out
}
