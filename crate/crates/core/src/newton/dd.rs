//! Double description: extreme rays of a pointed cone `{y : A·y ≥ 0}`.
//!
//! Rows and rays are integer vectors; every ray is kept primitive (gcd 1),
//! so the arithmetic stays fraction-free.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct NotPointed;

#[derive(Clone)]
struct Ray {
    coords: Vec<BigInt>,
    zeros: Bitset,
}

#[derive(Clone, PartialEq, Eq)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(bits: usize) -> Self {
        Bitset(vec![0; bits.div_ceil(64)])
    }

    fn insert(&mut self, bit: usize) {
        self.0[bit / 64] |= 1 << (bit % 64);
    }

    fn intersection(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &Bitset) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x = &*x / &g;
        }
    }
    v
}

/// Rank of a set of rational vectors.
pub(crate) fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Picks linearly independent rows greedily and returns their indices.
fn independent_rows(rows: &[Vec<BigInt>], n: usize) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut candidate = basis.clone();
        candidate.push(row.iter().cloned().map(BigRational::from_integer).collect());
        if rank(&candidate) == candidate.len() {
            basis = candidate;
            chosen.push(i);
            if chosen.len() == n {
                break;
            }
        }
    }
    chosen
}

/// Columns of the inverse of a square invertible integer matrix, each scaled
/// to a primitive integer vector.
fn inverse_columns(square: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = square.len();
    let mut aug: Vec<Vec<BigRational>> = square
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().cloned().map(BigRational::from_integer).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).expect("matrix is invertible");
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
    }
    (0..n)
        .map(|j| {
            let column: Vec<BigRational> = (0..n).map(|i| aug[i][n + j].clone()).collect();
            let denom = column.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            primitive(column.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect())
        })
        .collect()
}

/// Extreme rays of `{y : rows·y ≥ 0}`, as primitive integer vectors.
///
/// Fails when the rows do not span the ambient space (the cone has a
/// lineality space and no extreme-ray description).
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], n: usize) -> Result<Vec<Vec<BigInt>>, NotPointed> {
    let basis = independent_rows(rows, n);
    if basis.len() < n {
        return Err(NotPointed);
    }
    let square: Vec<Vec<BigInt>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let total = rows.len();
    let mut rays: Vec<Ray> = inverse_columns(&square)
        .into_iter()
        .enumerate()
        .map(|(j, coords)| {
            let mut zeros = Bitset::new(total);
            for (k, &row_index) in basis.iter().enumerate() {
                if k != j {
                    zeros.insert(row_index);
                }
            }
            Ray { coords, zeros }
        })
        .collect();

    for (index, row) in rows.iter().enumerate() {
        if basis.contains(&index) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if negative.is_empty() {
            for (ray, value) in rays.iter_mut().zip(&values) {
                if value.is_zero() {
                    ray.zeros.insert(index);
                }
            }
            continue;
        }

        let mut created = Vec::new();
        for &p in &positive {
            for &q in &negative {
                let common = rays[p].zeros.intersection(&rays[q].zeros);
                if common.len() + 2 < n {
                    continue;
                }
                let adjacent =
                    rays.iter().enumerate().all(|(r, ray)| r == p || r == q || !common.is_subset(&ray.zeros));
                if !adjacent {
                    continue;
                }
                let coords: Vec<BigInt> =
                    rays[p].coords.iter().zip(&rays[q].coords).map(|(x, y)| &values[p] * y - &values[q] * x).collect();
                let mut zeros = common;
                zeros.insert(index);
                created.push(Ray { coords: primitive(coords), zeros });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut ray, value) in rays.into_iter().zip(values) {
            if value.is_negative() {
                continue;
            }
            if value.is_zero() {
                ray.zeros.insert(index);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }
    Ok(rays.into_iter().map(|r| r.coords).collect())
}
