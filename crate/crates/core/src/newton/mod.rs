//! Newton polyhedra `P(a) = conv{exponents of a} + R^d_+` in half-space form.
//!
//! Facets are stored as `⟨v, ξ⟩ ≥ q` with `v` a primitive non-negative integer
//! vector. Non-coordinate facets (`q > 0`) come first, ordered by the direction
//! `v / |v|₁` descending lexicographically; coordinate half-spaces `ξᵢ ≥ 0`
//! follow in index order.

mod dd;
mod planar;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::limits::Limits;
use crate::rational::{common_denominator, Rational};

/// Position of a point relative to a (scaled) polyhedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Position {
    Outside,
    Boundary,
    Interior,
}

/// The inequality `⟨normal, ξ⟩ ≥ offset`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Facet {
    normal: Vec<BigInt>,
    offset: Rational,
}

impl Facet {
    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `ξᵢ ≥ 0` for some coordinate `i`.
    pub fn is_coordinate(&self) -> bool {
        self.offset.is_zero()
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        self.normal.iter().zip(point).map(|(v, p)| p * v).fold(Rational::zero(), |acc, x| acc + x)
    }

    /// `⟨normal, w + 𝟏⟩` for a lattice point `w`.
    pub fn evaluate_shifted(&self, w: &ExponentVector) -> BigInt {
        self.normal.iter().zip(w.coords()).map(|(v, &e)| v * BigInt::from(u64::from(e) + 1)).sum()
    }

    fn direction_cmp(&self, other: &Facet) -> Ordering {
        let s: BigInt = self.normal.iter().sum();
        let t: BigInt = other.normal.iter().sum();
        for (a, b) in self.normal.iter().zip(&other.normal) {
            match (b * &s).cmp(&(a * &t)) {
                Ordering::Equal => continue,
                unequal => return unequal,
            }
        }
        self.offset.cmp(&other.offset)
    }

    fn coordinate_index(&self) -> Option<usize> {
        self.normal.iter().position(|v| !v.is_zero())
    }
}

/// Irredundant half-space description of a Newton polyhedron, possibly
/// rescaled by a positive rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dimension: usize,
    facets: Vec<Facet>,
    vertices: Vec<Vec<Rational>>,
}

/// Hull construction strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullMethod {
    /// Lower staircase for `d = 2`, double description otherwise.
    Auto,
    DoubleDescription,
}

pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    NewtonPolyhedron::build(ideal, &Limits::default(), HullMethod::Auto)
}

pub fn newton_polyhedron_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<NewtonPolyhedron> {
    NewtonPolyhedron::build(ideal, limits, HullMethod::Auto)
}

impl NewtonPolyhedron {
    pub fn build(ideal: &MonomialIdeal, limits: &Limits, method: HullMethod) -> Result<Self> {
        let dimension = ideal.dimension();
        if dimension > limits.dimension_cap {
            return Err(Error::DimensionCap { dimension, cap: limits.dimension_cap });
        }
        let raw = if dimension == 2 && method == HullMethod::Auto {
            planar::to_big(planar::staircase_facets(ideal))
        } else {
            hull_facets(ideal)
        };
        let facets = canonical_facets(raw);
        let points: Vec<Vec<Rational>> = ideal
            .generators()
            .iter()
            .map(|g| g.coords().iter().map(|&e| Rational::from_integer(BigInt::from(e))).collect())
            .collect();
        let vertices = extreme_points(dimension, &facets, points);
        Ok(NewtonPolyhedron { dimension, facets, vertices })
    }

    /// The up-set `{ξ ≥ 0 : ⟨v, ξ⟩ ≥ q for every given half-space}`.
    ///
    /// Normals must be non-negative. Vertices are found by double description,
    /// then the hull is rebuilt from their common-denominator lattice multiple.
    pub fn from_halfspaces(dimension: usize, halfspaces: &[(Vec<BigInt>, Rational)], limits: &Limits) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        if dimension > limits.dimension_cap {
            return Err(Error::DimensionCap { dimension, cap: limits.dimension_cap });
        }
        let n = dimension + 1;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (normal, offset) in halfspaces {
            if normal.len() != dimension {
                return Err(Error::DimensionMismatch { expected: dimension, found: normal.len() });
            }
            let den = offset.denom().clone();
            let mut row = vec![-(offset.numer().clone())];
            row.extend(normal.iter().map(|v| v * &den));
            rows.push(row);
        }
        rows.push(unit_row(n, 0));
        rows.extend((1..n).map(|i| unit_row(n, i)));
        let rays = dd::extreme_rays(&rows, n).expect("orthant rows make the cone pointed");
        let vertices: Vec<Vec<Rational>> = rays
            .into_iter()
            .filter(|r| r[0].is_positive())
            .map(|r| r[1..].iter().map(|x| Rational::new(x.clone(), r[0].clone())).collect())
            .collect();
        let denom = common_denominator(vertices.iter().flatten());
        let lattice = vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| {
                        (x * Rational::from_integer(denom.clone()))
                            .to_integer()
                            .to_u32()
                            .ok_or(Error::Overflow("vertex of a half-space polyhedron"))
                    })
                    .collect::<Result<Vec<u32>>>()
                    .map(ExponentVector::new)
            })
            .collect::<Result<Vec<_>>>()?;
        let ideal = MonomialIdeal::minimalize(dimension, lattice)?;
        NewtonPolyhedron::build(&ideal, limits, HullMethod::Auto)?.scaled(&Rational::new(BigInt::one(), denom))
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Facets with positive offset (every facet other than `ξᵢ ≥ 0`).
    pub fn positive_facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter().filter(|f| !f.is_coordinate())
    }

    /// Extreme points, in canonical generator order for lattice polyhedra.
    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// Vertices as exponent vectors, when all of them are lattice points.
    pub fn lattice_vertices(&self) -> Option<Vec<ExponentVector>> {
        self.vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| if x.is_integer() { x.to_integer().to_u32() } else { None })
                    .collect::<Option<Vec<u32>>>()
                    .map(ExponentVector::new)
            })
            .collect()
    }

    /// `factor · P`.
    pub fn scaled(&self, factor: &Rational) -> Result<NewtonPolyhedron> {
        if !factor.is_positive() {
            return Err(Error::Coefficient { requirement: "positive", value: factor.to_string() });
        }
        Ok(NewtonPolyhedron {
            dimension: self.dimension,
            facets: self
                .facets
                .iter()
                .map(|f| Facet { normal: f.normal.clone(), offset: &f.offset * factor })
                .collect(),
            vertices: self.vertices.iter().map(|v| v.iter().map(|x| x * factor).collect()).collect(),
        })
    }

    /// Locates `point` relative to `scale · P`.
    pub fn member(&self, point: &[Rational], scale: &Rational) -> Result<Position> {
        if !scale.is_positive() {
            return Err(Error::Coefficient { requirement: "positive", value: scale.to_string() });
        }
        if point.len() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, found: point.len() });
        }
        let mut position = Position::Interior;
        for facet in &self.facets {
            let lhs = facet.evaluate(point);
            let rhs = &facet.offset * scale;
            match lhs.cmp(&rhs) {
                Ordering::Less => return Ok(Position::Outside),
                Ordering::Equal => position = Position::Boundary,
                Ordering::Greater => {}
            }
        }
        Ok(position)
    }

    /// Locates the lattice point `w + 𝟏` relative to `scale · P`.
    pub fn member_shifted(&self, w: &ExponentVector, scale: &Rational) -> Result<Position> {
        let point: Vec<Rational> =
            w.coords().iter().map(|&e| Rational::from_integer(BigInt::from(u64::from(e) + 1))).collect();
        self.member(&point, scale)
    }
}

fn unit_row(n: usize, index: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); n];
    row[index] = BigInt::one();
    row
}

/// Facets of `conv(gens) + R^d_+` by double description on the dual of the
/// homogenized cone spanned by `(1, g)` and `(0, eᵢ)`.
fn hull_facets(ideal: &MonomialIdeal) -> Vec<(Vec<BigInt>, BigInt)> {
    let d = ideal.dimension();
    let n = d + 1;
    let mut rows: Vec<Vec<BigInt>> = (1..n).map(|i| unit_row(n, i)).collect();
    rows.extend(ideal.generators().iter().map(|g| {
        let mut row = vec![BigInt::one()];
        row.extend(g.coords().iter().map(|&e| BigInt::from(e)));
        row
    }));
    let rays = dd::extreme_rays(&rows, n).expect("orthant rows make the dual cone pointed");
    rays.into_iter().filter(|r| r[1..].iter().any(|x| !x.is_zero())).map(|r| (r[1..].to_vec(), -r[0].clone())).collect()
}

fn canonical_facets(raw: Vec<(Vec<BigInt>, BigInt)>) -> Vec<Facet> {
    let mut facets: Vec<Facet> = Vec::with_capacity(raw.len());
    for (normal, offset) in raw {
        let g = normal.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let normal: Vec<BigInt> = normal.iter().map(|x| x / &g).collect();
        let offset = Rational::new(offset, g);
        let facet = Facet { normal, offset };
        if !facets.contains(&facet) {
            facets.push(facet);
        }
    }
    facets.sort_by(|a, b| match (a.is_coordinate(), b.is_coordinate()) {
        (false, false) => a.direction_cmp(b),
        (true, true) => a.coordinate_index().cmp(&b.coordinate_index()),
        (false, true) => Ordering::Less,
        (true, false) => Ordering::Greater,
    });
    facets
}

/// Points at which the tight facet normals span the whole space.
fn extreme_points(dimension: usize, facets: &[Facet], points: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    points
        .into_iter()
        .filter(|p| {
            let tight: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| f.evaluate(p) == f.offset)
                .map(|f| f.normal.iter().cloned().map(Rational::from_integer).collect())
                .collect();
            tight.len() >= dimension && dd::rank(&tight) == dimension
        })
        .collect()
}

/// `c·P(a) + e·P(b)`, realized as `(1/m)·P(a′·b′)` where `m` clears the
/// denominators of `c` and `e` and `a′`, `b′` are generated by the vertices of
/// `P(a)`, `P(b)` scaled by `m·c`, `m·e`.
pub fn scale_combination(
    a: &MonomialIdeal,
    c: &Rational,
    b: &MonomialIdeal,
    e: &Rational,
    limits: &Limits,
) -> Result<NewtonPolyhedron> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch { expected: a.dimension(), found: b.dimension() });
    }
    for value in [c, e] {
        if value.is_negative() {
            return Err(Error::Coefficient { requirement: "non-negative", value: value.to_string() });
        }
    }
    if c.is_zero() && e.is_zero() {
        return Err(Error::Coefficient { requirement: "positive for at least one ideal", value: "0".into() });
    }
    let m = common_denominator([c, e]);
    let multiplier = |value: &Rational| -> Result<u32> {
        let scaled = (value * Rational::from_integer(m.clone())).to_integer();
        match scaled.to_u64() {
            Some(k) if k <= limits.exponent_bound => Ok(k as u32),
            _ => Err(Error::ExponentBound { value: scaled.to_string(), bound: limits.exponent_bound }),
        }
    };
    let (k, l) = (multiplier(c)?, multiplier(e)?);
    let vertex_power = |ideal: &MonomialIdeal, factor: u32| -> Result<MonomialIdeal> {
        let vertices = newton_polyhedron_with(ideal, limits)?.lattice_vertices().expect("lattice polyhedron");
        MonomialIdeal::minimalize(
            ideal.dimension(),
            vertices.iter().map(|v| v.checked_scale(factor)).collect::<Result<Vec<_>>>()?,
        )
    };
    let combined = vertex_power(a, k)?.product(&vertex_power(b, l)?)?;
    newton_polyhedron_with(&combined, limits)?.scaled(&Rational::new(BigInt::one(), m))
}
