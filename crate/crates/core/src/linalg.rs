//! Small dense exact linear algebra over a coefficient field: rank and
//! invertibility by Gaussian elimination.

use crate::field::{Field, Scalar};

pub fn rank(field: &Field, rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut r = 0;
    for col in 0..ncols {
        let pivot = (r..m.len()).find(|&i| !field.is_zero(&m[i][col]));
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = field.inv(&m[r][col]).expect("nonzero pivot");
        for i in 0..m.len() {
            if i == r || field.is_zero(&m[i][col]) {
                continue;
            }
            let factor = field.mul(&m[i][col], &inv);
            for j in col..ncols {
                let t = field.mul(&factor, &m[r][j]);
                m[i][j] = field.sub(&m[i][j], &t);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn is_invertible(field: &Field, m: &[Vec<Scalar>]) -> bool {
    let n = m.len();
    m.iter().all(|row| row.len() == n) && rank(field, m) == n
}
