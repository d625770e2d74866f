//! Exact linear algebra over ordered fields and over the integers.
//!
//! Field routines are generic over [`ExactField`]; the lattice routines
//! (column echelon form, integer kernels, saturation, integer solving) work on
//! [`BigInt`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{ExactField, ExactInteger};

/// Reduced row echelon form. Returns the reduced non-zero rows and their
/// pivot columns.
pub fn rref<F: ExactField>(mut rows: Vec<Vec<F>>) -> (Vec<Vec<F>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    *x = x.clone() - f.clone() * p.clone();
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
    (rows, pivots)
}

pub fn rank<F: ExactField>(rows: &[Vec<F>]) -> usize {
    rref(rows.to_vec()).1.len()
}

/// Basis of the right kernel `{x : A x = 0}` of an `m × ncols` matrix.
pub fn kernel<F: ExactField>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let (red, pivots) = rref(rows.to_vec());
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant by fraction-tracking Gaussian elimination.
pub fn determinant<F: ExactField>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = det * a[c][c].clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / a[c][c].clone();
            let (top, bottom) = a.split_at_mut(i);
            for (x, p) in bottom[0][c..n].iter_mut().zip(&top[c][c..n]) {
                *x = x.clone() - f.clone() * p.clone();
            }
        }
    }
    det
}

/// Solves the square system `A x = b`.
pub fn solve<F: ExactField>(a: &[Vec<F>], b: &[F]) -> Result<Vec<F>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition("solve expects a square system".into()));
    }
    let augmented: Vec<Vec<F>> =
        a.iter().zip(b).map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect()).collect();
    let (red, pivots) = rref(augmented);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular(format!("{n}×{n} system has rank {}", pivots.len().min(n))));
    }
    Ok(red.iter().map(|row| row[n].clone()).collect())
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination;
/// `None` on overflow of `T`.
fn bareiss<T: ExactInteger>(mut a: Vec<Vec<T>>) -> Option<T> {
    let n = a.len();
    if n == 0 {
        return Some(T::one());
    }
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Some(T::zero());
            };
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].checked_mul(&a[k][k])?.checked_sub(&a[i][k].checked_mul(&a[k][j])?)?;
                a[i][j] = t / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Some(if sign_flip { -d } else { d })
}

/// Exact determinant of an integer matrix, with an `i128` fast path.
pub fn determinant_int(m: &[Vec<BigInt>]) -> BigInt {
    if m.iter().any(|row| row.iter().all(Zero::is_zero)) {
        return BigInt::zero();
    }
    let small: Option<Vec<Vec<i128>>> = m.iter().map(|row| row.iter().map(|v| v.to_i128()).collect()).collect();
    if let Some(d) = small.and_then(bareiss) {
        return BigInt::from(d);
    }
    bareiss(m.to_vec()).expect("BigInt arithmetic does not overflow")
}

/// Divides an integer vector by the gcd of its entries.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// The primitive integer vector on the ray through a rational vector.
pub fn primitive_integer_vector<F: ExactField>(v: &[F]) -> Vec<BigInt> {
    let l = crate::scalar::common_denominator(v);
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|x| {
            let q = x.to_rational() * BigRational::from_integer(l.clone());
            q.to_integer()
        })
        .collect();
    make_primitive(&mut out);
    out
}

/// Column echelon form `A U = H` with `U` unimodular. Returns `(H, U, rank)`;
/// the columns of `H` from `rank` on are zero.
pub fn column_echelon(a: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, usize) {
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> =
        (0..ncols).map(|i| (0..ncols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let swap_cols = |m: &mut Vec<Vec<BigInt>>, x: usize, y: usize| {
        for row in m.iter_mut() {
            row.swap(x, y);
        }
    };
    // column op: (col x, col y) <- (p·x + q·y, r·x + s·y)
    let combine = |m: &mut Vec<Vec<BigInt>>, x: usize, y: usize, c: [&BigInt; 4]| {
        for row in m.iter_mut() {
            let (vx, vy) = (row[x].clone(), row[y].clone());
            row[x] = c[0] * &vx + c[1] * &vy;
            row[y] = c[2] * &vx + c[3] * &vy;
        }
    };
    let mut p = 0;
    for i in 0..h.len() {
        if p == ncols {
            break;
        }
        for j in p + 1..ncols {
            if h[i][j].is_zero() {
                continue;
            }
            if h[i][p].is_zero() {
                swap_cols(&mut h, p, j);
                swap_cols(&mut u, p, j);
                continue;
            }
            let (x, y) = (h[i][p].clone(), h[i][j].clone());
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (xg, yg) = (&x / &g, &y / &g);
            let neg_yg = -&yg;
            // [s -y/g; t x/g] has determinant (s x + t y)/g = 1
            combine(&mut h, p, j, [&s, &t, &neg_yg, &xg]);
            combine(&mut u, p, j, [&s, &t, &neg_yg, &xg]);
        }
        if !h[i][p].is_zero() {
            if h[i][p].is_negative() {
                for m in [&mut h, &mut u] {
                    for row in m.iter_mut() {
                        row[p] = -&row[p];
                    }
                }
            }
            p += 1;
        }
    }
    (h, u, p)
}

/// Basis of the lattice `{x ∈ ℤ^ncols : A x = 0}`.
pub fn integer_kernel(a: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let (_, u, rank) = column_echelon(a, ncols);
    (rank..ncols).map(|c| u.iter().map(|row| row[c].clone()).collect()).collect()
}

/// Basis of `span(rows) ∩ ℤ^ncols`.
pub fn saturated_basis(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let orth = integer_kernel(rows, ncols);
    integer_kernel(&orth, ncols)
}

/// An integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &[Vec<BigInt>], b: &[BigInt], ncols: usize) -> Option<Vec<BigInt>> {
    let (h, u, rank) = column_echelon(a, ncols);
    let mut y = vec![BigInt::zero(); ncols];
    let mut col = 0;
    for (i, row) in h.iter().enumerate() {
        if col == rank {
            break;
        }
        if row[col].is_zero() {
            continue;
        }
        let partial: BigInt = (0..col).map(|l| &row[l] * &y[l]).sum();
        let (q, rem) = (&b[i] - partial).div_rem(&row[col]);
        if !rem.is_zero() {
            return None;
        }
        y[col] = q;
        col += 1;
    }
    let x: Vec<BigInt> = u.iter().map(|row| row.iter().zip(&y).map(|(a, b)| a * b).sum()).collect();
    let consistent = a.iter().zip(b).all(|(row, rhs)| row.iter().zip(&x).map(|(p, q)| p * q).sum::<BigInt>() == *rhs);
    consistent.then_some(x)
}

pub fn to_rational_matrix(m: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    m.iter().map(|row| row.iter().map(|v| BigRational::from_integer(v.clone())).collect()).collect()
}
