//! Exact linear algebra over Q(i): row reduction, kernels, span tests,
//! and the signature of a rational symmetric matrix by congruence
//! (Sylvester's law; no floating point anywhere).

use crate::scalar::Scalar;
use num::rational::BigRational;
use num::{Signed, Zero};

pub type Vector = Vec<Scalar>;
pub type Matrix = Vec<Vec<Scalar>>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn add_assign_scaled(dst: &mut [Scalar], src: &[Scalar], c: &Scalar) {
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        *d = d.clone() + &(c * s);
    }
}

/// Reduce `rows` in place to row echelon form; returns pivot column list.
pub fn row_echelon(rows: &mut Matrix) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = -rows[i][c].clone();
                add_assign_scaled(&mut rows[i], &pivot_row, &f);
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &Matrix) -> usize {
    let mut m = rows.clone();
    row_echelon(&mut m).len()
}

/// Is `v` in the row span of `span`?
pub fn in_span(span: &Matrix, v: &Vector) -> bool {
    let base = rank(span);
    let mut m = span.clone();
    m.push(v.clone());
    rank(&m) == base
}

/// Is every row of `sub` in the row span of `span`?
pub fn subspace_contained(sub: &Matrix, span: &Matrix) -> bool {
    sub.iter().all(|v| in_span(span, v))
}

pub fn subspace_equal(a: &Matrix, b: &Matrix) -> bool {
    subspace_contained(a, b) && subspace_contained(b, a)
}

/// Basis of the null space of `a` (solutions x of a x = 0), where `a` is
/// given as a list of rows.
pub fn kernel_basis(a: &Matrix) -> Vec<Vector> {
    if a.is_empty() {
        return vec![];
    }
    let ncols = a[0].len();
    let mut m = a.clone();
    let pivots = row_echelon(&mut m);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    for &fc in &free {
        let mut v = zero_vector(ncols);
        v[fc] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][fc].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solve a x = b for a single solution, if any. `a` is a list of rows.
pub fn solve(a: &Matrix, b: &Vector) -> Option<Vector> {
    if a.is_empty() {
        return if b.iter().all(|x| x.is_zero()) {
            Some(vec![])
        } else {
            None
        };
    }
    let ncols = a[0].len();
    let mut m: Matrix = a
        .iter()
        .zip(b.iter())
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = row_echelon(&mut m);
    if pivots.contains(&ncols) {
        return None; // inconsistent
    }
    let mut x = zero_vector(ncols);
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if invertible.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Scalar::one() } else { Scalar::zero() });
            }
            r
        })
        .collect();
    let pivots = row_echelon(&mut m);
    if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = if n > 0 { a[0].len() } else { 0 };
    let m = if !b.is_empty() { b[0].len() } else { 0 };
    let mut out = vec![zero_vector(m); n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] = out[i][j].clone() + &(&a[i][l] * &b[l][j]);
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &Vector) -> Vector {
    a.iter()
        .map(|row| {
            let mut acc = Scalar::zero();
            for (x, y) in row.iter().zip(v.iter()) {
                if !x.is_zero() && !y.is_zero() {
                    acc = acc + &(x * y);
                }
            }
            acc
        })
        .collect()
}

/// Signature (positives minus negatives) of a rational symmetric matrix,
/// by symmetric Gaussian elimination with congruence bookkeeping. Zero
/// diagonals with a nonzero off-diagonal entry are handled by the
/// standard row/column addition that creates a usable pivot; such a
/// hyperbolic pair contributes one +1 and one -1.
pub fn symmetric_signature(g: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let n = g.len();
    let mut a: Vec<Vec<BigRational>> = g.to_vec();
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n);
        for j in 0..n {
            assert_eq!(row[j], g[j][i], "matrix must be symmetric");
        }
    }
    let mut alive: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    while let Some(&_first) = alive.first() {
        // Prefer a nonzero diagonal pivot.
        let diag = alive.iter().position(|&i| !a[i][i].is_zero());
        let pivot = match diag {
            Some(k) => alive[k],
            None => {
                // Look for a nonzero off-diagonal pair among the live rows.
                let mut found = None;
                'outer: for (x, &i) in alive.iter().enumerate() {
                    for &j in &alive[x + 1..] {
                        if !a[i][j].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    None => {
                        zero += alive.len();
                        break;
                    }
                    Some((i, j)) => {
                        // row_i += row_j; col_i += col_j makes a[i][i] = 2 a[i][j] != 0.
                        for c in 0..n {
                            let t = a[j][c].clone();
                            a[i][c] += t;
                        }
                        for r in 0..n {
                            let t = a[r][j].clone();
                            a[r][i] += t;
                        }
                        i
                    }
                }
            }
        };
        let d = a[pivot][pivot].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        alive.retain(|&x| x != pivot);
        for &r in &alive {
            if a[r][pivot].is_zero() {
                continue;
            }
            let f = &a[r][pivot] / &d;
            for c in 0..n {
                let t = &f * &a[pivot][c];
                a[r][c] -= t;
            }
            for rr in 0..n {
                let t = &f * &a[rr][pivot];
                a[rr][r] -= t;
            }
        }
    }
    (pos, neg, zero)
}

/// Signature as a single integer pos - neg.
pub fn signature(g: &[Vec<BigRational>]) -> i64 {
    let (p, n, _) = symmetric_signature(g);
    p as i64 - n as i64
}
