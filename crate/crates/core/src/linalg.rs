//! Dense row-reduction helpers over an explicit finite field.

use crate::gf::{Elem, Field};

/// Reduce `rows` in place to reduced row echelon form, drop zero rows, and
/// return the pivot columns.  The result is the unique canonical basis of
/// the row space.
pub(crate) fn rref(f: &Field, rows: &mut Vec<Vec<Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        if inv != 1 {
            for x in rows[r].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..ncols {
                    let t = f.mul(factor, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Rank of a matrix (the input is consumed by reduction on a copy).
pub(crate) fn rank(f: &Field, rows: &[Vec<Elem>]) -> usize {
    let mut copy: Vec<Vec<Elem>> = rows.to_vec();
    rref(f, &mut copy);
    copy.len()
}

/// Basis of the right kernel `{ v : M v^T = 0 }` of a matrix with `ncols`
/// columns, one vector per non-pivot column, in RREF itself.
pub(crate) fn right_kernel(f: &Field, rows: &[Vec<Elem>], ncols: usize) -> Vec<Vec<Elem>> {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let pivots = rref(f, &mut m);
    let mut basis = Vec::new();
    for c in 0..ncols {
        if pivots.contains(&c) {
            continue;
        }
        let mut v = vec![0 as Elem; ncols];
        v[c] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(m[i][c]);
        }
        basis.push(v);
    }
    let _ = rref(f, &mut basis);
    basis
}

/// `msg * gen`: encode a message against a `k x n` generator matrix.
pub(crate) fn encode(f: &Field, gen: &[Vec<Elem>], msg: &[Elem]) -> Vec<Elem> {
    let n = gen.first().map_or(0, Vec::len);
    let mut out = vec![0 as Elem; n];
    for (mi, row) in msg.iter().zip(gen) {
        if *mi != 0 {
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(*mi, g));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn rref_canonicalizes() {
        let f = Field::new(3, 1, None).unwrap();
        let mut rows = vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 1, 0]];
        let pivots = rref(&f, &mut rows);
        assert_eq!(pivots, vec![0, 1, 2]);
        assert_eq!(rows, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);

        // Proportional rows collapse: [2,1,0] is 2 * [1,2,0] over GF(3).
        let mut dep = vec![vec![2, 1, 0], vec![1, 2, 0], vec![0, 0, 1]];
        let pivots = rref(&f, &mut dep);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(dep, vec![vec![1, 2, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn kernel_is_orthogonal_and_complementary() {
        let f = Field::new(2, 3, None).unwrap();
        let rows = vec![vec![1, 0, 3, 5], vec![0, 1, 2, 7]];
        let ker = right_kernel(&f, &rows, 4);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for r in &rows {
                assert_eq!(f.inner(r, v).unwrap(), 0);
            }
        }
        assert_eq!(rank(&f, &ker), 2);
    }

    #[test]
    fn encoding_is_linear() {
        let f = Field::new(2, 2, None).unwrap();
        let gen = vec![vec![1, 0, 2], vec![0, 1, 3]];
        assert_eq!(encode(&f, &gen, &[1, 0]), vec![1, 0, 2]);
        assert_eq!(encode(&f, &gen, &[2, 3]), {
            let mut v = vec![0; 3];
            for j in 0..3 {
                v[j] = f.add(f.mul(2, gen[0][j]), f.mul(3, gen[1][j]));
            }
            v
        });
    }
}
