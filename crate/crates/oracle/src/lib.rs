//! Brute-force membership oracle for `conv(g₁…g_k) + R^d_+`.
//!
//! Decides feasibility of `{p = Σλⱼgⱼ + s, λ ≥ 0, Σλⱼ = 1, s ≥ 0}` by
//! Fourier-Motzkin elimination over exact rationals. The interior test shifts
//! the point by `-ε·𝟏` with `ε` an infinitesimal: right-hand sides live in
//! `Q + Q·ε`, ordered lexicographically.
//!
//! Deliberately independent of any facet computation; use it only to check
//! one.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Outside,
    Boundary,
    Interior,
}

/// `a + b·ε`, compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Perturbed {
    value: BigRational,
    epsilon: BigRational,
}

impl Perturbed {
    fn scaled(&self, factor: &BigRational) -> Perturbed {
        Perturbed { value: &self.value * factor, epsilon: &self.epsilon * factor }
    }

    fn plus(&self, other: &Perturbed) -> Perturbed {
        Perturbed { value: &self.value + &other.value, epsilon: &self.epsilon + &other.epsilon }
    }

    fn is_nonnegative(&self) -> bool {
        match self.value.cmp(&BigRational::zero()) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => !self.epsilon.is_negative(),
        }
    }
}

/// `Σ coeffs·λ ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Constraint {
    coeffs: Vec<BigRational>,
    bound: Perturbed,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn feasible(mut constraints: Vec<Constraint>, variables: usize) -> bool {
    for var in 0..variables {
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let mut rest = Vec::new();
        for c in constraints {
            match c.coeffs[var].cmp(&BigRational::zero()) {
                Ordering::Greater => upper.push(c),
                Ordering::Less => lower.push(c),
                Ordering::Equal => rest.push(c),
            }
        }
        for up in &upper {
            for low in &lower {
                let up_factor = -low.coeffs[var].clone();
                let low_factor = up.coeffs[var].clone();
                let coeffs = up.coeffs.iter().zip(&low.coeffs).map(|(a, b)| a * &up_factor + b * &low_factor).collect();
                let bound = up.bound.scaled(&up_factor).plus(&low.bound.scaled(&low_factor));
                let combined = Constraint { coeffs, bound };
                if !rest.contains(&combined) {
                    rest.push(combined);
                }
            }
        }
        constraints = rest;
    }
    constraints.iter().all(|c| c.bound.is_nonnegative())
}

fn system(generators: &[Vec<u32>], point: &[BigRational], shift: i64) -> (Vec<Constraint>, usize) {
    let k = generators.len();
    let vars = k - 1;
    let last = &generators[k - 1];
    let mut constraints = Vec::new();
    for j in 0..vars {
        let mut coeffs = vec![BigRational::zero(); vars];
        coeffs[j] = rat(-1);
        constraints.push(Constraint { coeffs, bound: Perturbed { value: rat(0), epsilon: rat(0) } });
    }
    // λ_k = 1 - Σ λ_j ≥ 0
    constraints.push(Constraint { coeffs: vec![rat(1); vars], bound: Perturbed { value: rat(1), epsilon: rat(0) } });
    for (i, p) in point.iter().enumerate() {
        let coeffs = (0..vars).map(|j| rat(i64::from(generators[j][i]) - i64::from(last[i]))).collect();
        constraints
            .push(Constraint { coeffs, bound: Perturbed { value: p - rat(i64::from(last[i])), epsilon: rat(-shift) } });
    }
    (constraints, vars)
}

/// Is `point` in `conv(generators) + R^d_+`, and strictly inside it?
pub fn locate(generators: &[Vec<u32>], point: &[BigRational]) -> Location {
    assert!(!generators.is_empty(), "at least one generator");
    let (closed, vars) = system(generators, point, 0);
    if !feasible(closed, vars) {
        return Location::Outside;
    }
    let (open, vars) = system(generators, point, 1);
    if feasible(open, vars) {
        Location::Interior
    } else {
        Location::Boundary
    }
}

/// Location of `point` relative to `scale · (conv(generators) + R^d_+)`.
pub fn locate_scaled(generators: &[Vec<u32>], point: &[BigRational], scale: &BigRational) -> Location {
    assert!(scale.is_positive(), "scale must be positive");
    let unscaled: Vec<BigRational> = point.iter().map(|p| p / scale).collect();
    locate(generators, &unscaled)
}

/// Is `generators[index]` an extreme point of the hull plus orthant?
pub fn is_vertex(generators: &[Vec<u32>], index: usize) -> bool {
    let others: Vec<Vec<u32>> = generators
        .iter()
        .enumerate()
        .filter(|&(j, g)| j != index && g != &generators[index])
        .map(|(_, g)| g.clone())
        .collect();
    if others.is_empty() {
        return true;
    }
    let point: Vec<BigRational> = generators[index].iter().map(|&e| rat(i64::from(e))).collect();
    locate(&others, &point) == Location::Outside
}
