//! Exact dense linear solving over the rationals (Gauss-Jordan).

use crate::scalar::Rat;
use num_traits::Zero;

/// One solution of A x = b if the system is consistent, with free variables
/// set to zero.
#[allow(clippy::needless_range_loop)] // row operations borrow two rows at once
pub(crate) fn solve(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].clone();
        for j in c..cols {
            a[r][j] = &a[r][j] / &inv;
        }
        b[r] = &b[r] / &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    a[i][j] = &a[i][j] - &(&f * &a[r][j]);
                }
                b[i] = &b[i] - &(&f * &b[r]);
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &c) in pivot_cols.iter().enumerate() {
        x[c] = b[row].clone();
    }
    Some(x)
}
