//! Double description: extreme rays of a pointed polyhedral cone
//! `{y : A y ≥ 0}` given by integer rows.
//!
//! Runs in `i128` with checked arithmetic and restarts in `BigInt` if any
//! intermediate overflows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::ExactInteger;

#[derive(Clone)]
struct Ray<T> {
    v: Vec<T>,
    zeros: Vec<u64>,
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn popcount(a: &[u64]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

fn dot<T: ExactInteger>(a: &[T], b: &[T]) -> Option<T> {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.checked_add(&x.checked_mul(y)?)?;
    }
    Some(acc)
}

fn normalize<T: ExactInteger>(v: &mut [T]) {
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = x.clone() / g.clone();
        }
    }
}

/// Extreme rays of `{y : ⟨row, y⟩ ≥ 0 for every row}`, as primitive integer
/// vectors. The rows must span the whole space (the cone is pointed).
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let dim = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != dim) {
        return Err(Error::Precondition("ragged constraint matrix".into()));
    }
    let basis = independent_rows(rows, dim)?;
    let small: Option<Vec<Vec<i128>>> = rows.iter().map(|r| r.iter().map(ToPrimitive::to_i128).collect()).collect();
    if let Some(small) = small {
        if let Some(rays) = run::<i128>(&small, &basis, dim)? {
            return Ok(rays.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect());
        }
    }
    run::<BigInt>(rows, &basis, dim)?.ok_or(Error::Overflow("double description"))
}

fn independent_rows(rows: &[Vec<BigInt>], dim: usize) -> Result<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut acc: Vec<Vec<BigRational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if chosen.len() == dim {
            break;
        }
        acc.push(row.iter().map(|v| BigRational::from_integer(v.clone())).collect());
        if linalg::rank(&acc) == acc.len() {
            chosen.push(i);
        } else {
            acc.pop();
        }
    }
    if chosen.len() < dim {
        return Err(Error::Precondition(format!(
            "constraint rows have rank {} < {dim}; cone is not pointed",
            chosen.len()
        )));
    }
    Ok(chosen)
}

/// `Ok(None)` signals overflow of `T`.
fn run<T: ExactInteger>(rows: &[Vec<T>], basis: &[usize], dim: usize) -> Result<Option<Vec<Vec<T>>>> {
    let words = rows.len().div_ceil(64);
    let b: Vec<Vec<BigRational>> =
        basis.iter().map(|&i| rows[i].iter().map(|v| BigRational::from_integer(v.to_bigint())).collect()).collect();

    // columns of B^{-1}: ray j is positive on basis row j and tight on the rest
    let mut rays: Vec<Ray<T>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut e = vec![BigRational::zero(); dim];
        e[j] = BigRational::one();
        let col = linalg::solve(&b, &e)?;
        let ints = linalg::primitive_integer_vector(&col);
        let Some(v) = ints.iter().map(T::from_bigint).collect::<Option<Vec<T>>>() else {
            return Ok(None);
        };
        let mut zeros = vec![0u64; words];
        for (k, &row) in basis.iter().enumerate() {
            if k != j {
                set_bit(&mut zeros, row);
            }
        }
        rays.push(Ray { v, zeros });
    }

    let mut processed = vec![0u64; words];
    for &i in basis {
        set_bit(&mut processed, i);
    }

    for (idx, row) in rows.iter().enumerate() {
        if basis.contains(&idx) {
            continue;
        }
        let mut signs = Vec::with_capacity(rays.len());
        for ray in &rays {
            match dot(row, &ray.v) {
                Some(s) => signs.push(s),
                None => return Ok(None),
            }
        }
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for (k, s) in signs.iter().enumerate() {
            if s.is_positive() {
                pos.push(k);
            } else if s.is_negative() {
                neg.push(k);
            } else {
                zero.push(k);
            }
        }
        set_bit(&mut processed, idx);
        if neg.is_empty() {
            for &k in &zero {
                set_bit(&mut rays[k].zeros, idx);
            }
            continue;
        }

        let mut next: Vec<Ray<T>> = Vec::with_capacity(pos.len() + zero.len());
        for &p in &pos {
            for &q in &neg {
                let common: Vec<u64> = rays[p].zeros.iter().zip(&rays[q].zeros).map(|(a, b)| a & b).collect();
                if popcount(&common) + 2 < dim {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(k, r)| k != p && k != q && subset(&common, &r.zeros));
                if blocked {
                    continue;
                }
                let (sp, sq) = (&signs[p], &signs[q]);
                let mut v = Vec::with_capacity(dim);
                for (x, y) in rays[p].v.iter().zip(&rays[q].v) {
                    let Some(t) =
                        x.checked_mul(&-sq.clone()).and_then(|a| y.checked_mul(sp).and_then(|b| a.checked_add(&b)))
                    else {
                        return Ok(None);
                    };
                    v.push(t);
                }
                normalize(&mut v);
                let mut zeros = common;
                set_bit(&mut zeros, idx);
                next.push(Ray { v, zeros });
            }
        }
        for &k in &zero {
            let mut r = rays[k].clone();
            set_bit(&mut r.zeros, idx);
            next.push(r);
        }
        for &k in &pos {
            next.push(rays[k].clone());
        }
        rays = next;
    }
    let mut out: Vec<Vec<T>> = rays.into_iter().map(|r| r.v).collect();
    out.sort_by(|a, b| {
        let a: Vec<BigInt> = a.iter().map(ExactInteger::to_bigint).collect();
        let b: Vec<BigInt> = b.iter().map(ExactInteger::to_bigint).collect();
        a.cmp(&b)
    });
    Ok(Some(out))
}
