//! Dense exact linear algebra over the rationals.

use crate::exactnum::Fraction;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Fraction>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = *x * inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, v) in m[i].iter_mut().zip(pivot_row) {
                    *x -= f * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Fraction>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// Coefficients `c` with `Σ c_j · vectors[j] = target`, if any exist.
pub fn express(vectors: &[Vec<Fraction>], target: &[Fraction]) -> Option<Vec<Fraction>> {
    let dim = target.len();
    let k = vectors.len();
    // Augmented system: one row per coordinate, one column per vector.
    let mut m: Vec<Vec<Fraction>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Fraction> = vectors.iter().map(|v| v[i]).collect();
            row.push(target[i]);
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut coeffs = vec![Fraction::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        coeffs[c] = m[row][k];
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Fraction> {
        xs.iter().map(|&x| Fraction::from(x)).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(rank(&[v(&[1, 2]), v(&[3, 4])]), 2);
        assert_eq!(rank(&[v(&[0, 0])]), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn express_finds_combination() {
        let basis = [v(&[1, 0, 1]), v(&[0, 1, 1])];
        let c = express(&basis, &v(&[2, 3, 5])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(express(&basis, &v(&[1, 1, 0])).is_none());
        assert_eq!(express(&[], &v(&[0, 0])), Some(vec![]));
        assert!(express(&[], &v(&[1, 0])).is_none());
    }
}
