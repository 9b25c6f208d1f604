//! Exponent vectors and the algebra of monomial ideals.
//!
//! A [`MonomialIdeal`] always holds its minimal generators in canonical order:
//! ascending total degree, and within a degree descending lexicographically
//! (`x1 > x2 > …`). Two ideals are equal exactly when their representations are.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponents of a monomial `x^w` in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }

    pub fn zero(dimension: usize) -> Self {
        ExponentVector(vec![0; dimension])
    }

    pub fn unit(dimension: usize, index: usize) -> Self {
        let mut coords = vec![0; dimension];
        coords[index] = 1;
        ExponentVector(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Componentwise `self ≤ other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("monomial product")))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_scale(&self, factor: u32) -> Result<ExponentVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(factor).ok_or(Error::Overflow("monomial power")))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise maximum (the exponent of `lcm(x^self, x^other)`).
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn squarefree_part(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&a| a.min(1)).collect())
    }

    pub fn without(&self, index: usize) -> ExponentVector {
        let mut coords = self.0.clone();
        coords.remove(index);
        ExponentVector(coords)
    }

    pub fn with_inserted(&self, index: usize, value: u32) -> ExponentVector {
        let mut coords = self.0.clone();
        coords.insert(index, value);
        ExponentVector(coords)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(coords: [u32; N]) -> Self {
        ExponentVector(coords.to_vec())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A nonzero monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dimension: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Keeps the divisibility-minimal elements of `raw`, canonically ordered.
    pub fn minimalize<I>(dimension: usize, raw: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut raw: Vec<ExponentVector> = raw.into_iter().collect();
        if let Some(bad) = raw.iter().find(|g| g.dimension() != dimension) {
            return Err(Error::DimensionMismatch { expected: dimension, found: bad.dimension() });
        }
        if raw.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        raw.sort();
        raw.dedup();
        // a proper divisor has strictly smaller degree, so it is already kept
        let mut generators: Vec<ExponentVector> = Vec::new();
        for candidate in raw {
            if !generators.iter().any(|g| g.divides(&candidate)) {
                generators.push(candidate);
            }
        }
        Ok(MonomialIdeal { dimension, generators })
    }

    /// Convenience constructor from plain coordinate lists.
    pub fn from_exponents(dimension: usize, raw: &[&[u32]]) -> Result<MonomialIdeal> {
        MonomialIdeal::minimalize(dimension, raw.iter().map(|g| ExponentVector::new(g.to_vec())))
    }

    pub fn unit(dimension: usize) -> Result<MonomialIdeal> {
        MonomialIdeal::minimalize(dimension, [ExponentVector::zero(dimension)])
    }

    /// The maximal ideal `(x1, …, xd)`.
    pub fn maximal(dimension: usize) -> Result<MonomialIdeal> {
        MonomialIdeal::minimalize(dimension, (0..dimension).map(|i| ExponentVector::unit(dimension, i)))
    }

    /// `(x1^e1, …, xd^ed)`; every exponent must be positive.
    pub fn diagonal(exponents: &[u32]) -> Result<MonomialIdeal> {
        let dimension = exponents.len();
        MonomialIdeal::minimalize(
            dimension,
            exponents.iter().enumerate().map(|(i, &e)| {
                let mut coords = vec![0; dimension];
                coords[i] = e;
                ExponentVector::new(coords)
            }),
        )
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].degree() == 0
    }

    fn check_dimension(&self, found: usize) -> Result<()> {
        if found == self.dimension {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dimension, found })
        }
    }

    pub fn contains_monomial(&self, w: &ExponentVector) -> Result<bool> {
        self.check_dimension(w.dimension())?;
        Ok(self.generators.iter().any(|g| g.divides(w)))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        Ok(self.first_missing_generator(other)?.is_none())
    }

    /// Canonically least generator of `other` outside `self`, if any.
    ///
    /// Every monomial of `other` outside `self` is divisible by such a
    /// generator, so this is also the least monomial witnessing `other ⊄ self`.
    pub fn first_missing_generator(&self, other: &MonomialIdeal) -> Result<Option<ExponentVector>> {
        self.check_dimension(other.dimension)?;
        Ok(other.generators.iter().find(|h| !self.generators.iter().any(|g| g.divides(h))).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dimension(other.dimension)?;
        let mut raw = Vec::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                raw.push(g.checked_add(h)?);
            }
        }
        MonomialIdeal::minimalize(self.dimension, raw)
    }

    pub fn power(&self, exponent: u32) -> Result<MonomialIdeal> {
        let mut result = MonomialIdeal::unit(self.dimension)?;
        for _ in 0..exponent {
            result = result.product(self)?;
        }
        Ok(result)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dimension(other.dimension)?;
        MonomialIdeal::minimalize(self.dimension, self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dimension(other.dimension)?;
        MonomialIdeal::minimalize(
            self.dimension,
            self.generators.iter().flat_map(|g| other.generators.iter().map(move |h| g.lcm(h))),
        )
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.dimension, self.generators.iter().map(ExponentVector::squarefree_part))
            .expect("radical of a nonzero ideal is nonzero")
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.coords().iter().all(|&e| e <= 1))
    }

    /// Sets `x_index = 0` (0-based index), giving an ideal in one fewer variable.
    pub fn restrict_to_hyperplane(&self, index: usize) -> Result<MonomialIdeal> {
        if index >= self.dimension {
            return Err(Error::CoordinateOutOfRange { index, dimension: self.dimension });
        }
        if self.dimension == 1 {
            return Err(Error::ZeroDimension);
        }
        let survivors: Vec<ExponentVector> =
            self.generators.iter().filter(|g| g.coords()[index] == 0).map(|g| g.without(index)).collect();
        if survivors.is_empty() {
            return Err(Error::ZeroRestriction { coordinate: index + 1 });
        }
        MonomialIdeal::minimalize(self.dimension - 1, survivors)
    }

    /// Least total degree of a generator.
    pub fn order(&self) -> u64 {
        self.generators.iter().map(ExponentVector::degree).min().unwrap_or(0)
    }

    /// Largest single exponent over all generators.
    pub fn max_exponent(&self) -> u32 {
        self.generators.iter().flat_map(|g| g.coords().iter().copied()).max().unwrap_or(0)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("MonomialIdeal", 2)?;
        state.serialize_field("dimension", &self.dimension)?;
        state.serialize_field("generators", &self.generators)?;
        state.end()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
