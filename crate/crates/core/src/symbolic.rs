//! Symbolic powers of squarefree monomial ideals.
//!
//! A squarefree monomial ideal is the intersection of the primes
//! `P_S = (xᵢ : i ∈ S)` over the minimal vertex covers `S` of its generator
//! supports. Its `m`-th symbolic power is `∩ P_S^m`, i.e. the monomials with
//! `Σ_{j∈S} wⱼ ≥ m` for every minimal prime, and the family `q^(p)/p`
//! stabilises to the polyhedron `∩ {Σ_{j∈S} ξⱼ ≥ 1}`.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::howald::polyhedron_multiplier_ideal;
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::limits::Limits;
use crate::newton::NewtonPolyhedron;
use crate::rational::Rational;
use crate::theorems::{evaluate, CheckReport, Containment};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    base: MonomialIdeal,
    minimal_primes: Vec<Vec<usize>>,
}

impl SquarefreeIdeal {
    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    /// Minimal primes as sorted 0-based variable sets, smallest first.
    pub fn minimal_primes(&self) -> &[Vec<usize>] {
        &self.minimal_primes
    }

    pub fn dimension(&self) -> usize {
        self.base.dimension()
    }

    /// The common size of the minimal primes, when they all agree.
    pub fn pure_codimension(&self) -> Option<usize> {
        let first = self.minimal_primes[0].len();
        self.minimal_primes.iter().all(|p| p.len() == first).then_some(first)
    }

    /// The exponent `e` in `q^(e·m) ⊆ q^m`: the pure codimension, or `d`.
    pub fn containment_exponent(&self) -> usize {
        self.pure_codimension().unwrap_or(self.dimension())
    }
}

fn prime_ideal(d: usize, support: &[usize]) -> Result<MonomialIdeal> {
    MonomialIdeal::minimalize(d, support.iter().map(|&i| ExponentVector::unit(d, i)))
}

pub fn analyze(q: &MonomialIdeal) -> Result<SquarefreeIdeal> {
    analyze_with(q, &Limits::default())
}

/// Minimal primes by exhaustive search over variable subsets.
pub fn analyze_with(q: &MonomialIdeal, limits: &Limits) -> Result<SquarefreeIdeal> {
    let d = q.dimension();
    if d > limits.dimension_cap {
        return Err(Error::DimensionCap { dimension: d, cap: limits.dimension_cap });
    }
    if let Some(g) = q.generators().iter().find(|g| g.coords().iter().any(|&e| e > 1)) {
        return Err(Error::NotSquarefree { generator: g.coords().to_vec() });
    }
    if q.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let supports: Vec<u32> = q
        .generators()
        .iter()
        .map(|g| g.coords().iter().enumerate().filter(|&(_, &e)| e == 1).fold(0u32, |acc, (i, _)| acc | (1 << i)))
        .collect();
    let covers = |set: u32| supports.iter().all(|&s| s & set != 0);
    let mut minimal_primes: Vec<Vec<usize>> = (1u32..(1 << d))
        .filter(|&set| covers(set) && (0..d).all(|i| set & (1 << i) == 0 || !covers(set & !(1 << i))))
        .map(|set| (0..d).filter(|&i| set & (1 << i) != 0).collect())
        .collect();
    minimal_primes.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let mut meet = prime_ideal(d, &minimal_primes[0])?;
    for prime in &minimal_primes[1..] {
        meet = meet.intersect(&prime_ideal(d, prime)?)?;
    }
    if &meet != q {
        return Err(Error::Hypothesis(format!("intersection of minimal primes is {meet}, not {q}")));
    }
    Ok(SquarefreeIdeal { base: q.clone(), minimal_primes })
}

fn check_positive(name: &'static str, value: u32) -> Result<()> {
    if value == 0 {
        Err(Error::Hypothesis(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// `q^(m) = ∩ P_S^m`.
pub fn symbolic_power(q: &SquarefreeIdeal, m: u32) -> Result<MonomialIdeal> {
    check_positive("m", m)?;
    let d = q.dimension();
    let mut result: Option<MonomialIdeal> = None;
    for prime in &q.minimal_primes {
        let power = prime_ideal(d, prime)?.power(m)?;
        result = Some(match result {
            None => power,
            Some(acc) => acc.intersect(&power)?,
        });
    }
    Ok(result.expect("at least one minimal prime"))
}

/// `∩ {Σ_{j∈S} ξⱼ ≥ 1}` over the minimal primes, in irredundant facet form.
pub fn symbolic_polyhedron(q: &SquarefreeIdeal) -> Result<NewtonPolyhedron> {
    let d = q.dimension();
    let halfspaces: Vec<(Vec<BigInt>, Rational)> = q
        .minimal_primes
        .iter()
        .map(|prime| {
            let normal = (0..d).map(|i| BigInt::from(u8::from(prime.contains(&i)))).collect();
            (normal, Rational::one())
        })
        .collect();
    let limits = Limits { dimension_cap: d, ..Limits::default() };
    NewtonPolyhedron::from_halfspaces(d, &halfspaces, &limits)
}

/// `J(q_(•)^c)`: the monomials `x^w` with `w + 𝟏` interior to `c·Q`.
pub fn asymptotic_multiplier_ideal(q: &SquarefreeIdeal, c: &Rational) -> Result<MonomialIdeal> {
    if !c.is_positive() {
        return Err(Error::Coefficient { requirement: "positive", value: c.to_string() });
    }
    polyhedron_multiplier_ideal(&symbolic_polyhedron(q)?, c)
}

fn instance(q: &SquarefreeIdeal, extra: Value) -> Value {
    let mut value = json!({
        "q": serde_json::to_value(&q.base).expect("ideal serializes"),
        "minimal_primes": q.minimal_primes.iter()
            .map(|p| p.iter().map(|i| i + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    if let (Value::Object(map), Value::Object(more)) = (&mut value, extra) {
        map.extend(more);
    }
    value
}

/// `a_ℓ^m ⊆ a_(ℓm) ⊆ J(a_•^(ℓm)) ⊆ J(a_•^ℓ)^m` for `a_k = q^(k)`.
pub fn check_graded_chain(q: &SquarefreeIdeal, l: u32, m: u32) -> Result<CheckReport> {
    check_positive("ℓ", l)?;
    check_positive("m", m)?;
    let lm = l.checked_mul(m).ok_or(Error::Overflow("graded chain exponent"))?;
    let a_l = symbolic_power(q, l)?;
    let a_lm = symbolic_power(q, lm)?;
    let j_lm = asymptotic_multiplier_ideal(q, &Rational::from_integer(lm.into()))?;
    let j_l = asymptotic_multiplier_ideal(q, &Rational::from_integer(l.into()))?;
    let claims = [
        Containment::new("a_l^m ⊆ a_(lm)", a_l.power(m)?, a_lm.clone()),
        Containment::new("a_(lm) ⊆ J(a^(lm))", a_lm, j_lm.clone()),
        Containment::new("J(a^(lm)) ⊆ J(a^l)^m", j_lm, j_l.power(m)?),
    ];
    evaluate("graded-chain", instance(q, json!({"l": l, "m": m})), None, claims)
}

/// `q^(e·m) ⊆ q^m`, plus the trivial `q^m ⊆ q^(m)`.
///
/// The details carry the least generator of `q^(m)` outside `q^m`, when the
/// symbolic power is strictly larger.
pub fn check_symbolic_containment(q: &SquarefreeIdeal, m: u32) -> Result<CheckReport> {
    check_positive("m", m)?;
    let e = q.containment_exponent() as u32;
    let em = e.checked_mul(m).ok_or(Error::Overflow("symbolic containment exponent"))?;
    let ordinary = q.base.power(m)?;
    let symbolic_m = symbolic_power(q, m)?;
    let claims = [
        Containment::new(format!("q^({em}) ⊆ q^{m}"), symbolic_power(q, em)?, ordinary.clone()),
        Containment::new(format!("q^{m} ⊆ q^({m})"), ordinary.clone(), symbolic_m.clone()),
    ];
    let mut report = evaluate("symbolic-containment", instance(q, json!({"m": m})), None, claims)?;
    report.details.insert("e".into(), json!(e));
    report.details.insert("pure".into(), json!(q.pure_codimension().is_some()));
    let strict = ordinary.first_missing_generator(&symbolic_m)?;
    report.details.insert(
        "strictness_witness".into(),
        strict.map_or(Value::Null, |w| serde_json::to_value(w).expect("vector serializes")),
    );
    Ok(report)
}

/// `min_S |S|`: the threshold `c*(0)` of the symbolic polyhedron.
pub fn symbolic_threshold(q: &SquarefreeIdeal) -> Rational {
    let smallest = q.minimal_primes.iter().map(Vec::len).min().expect("nonempty");
    Rational::from_integer(BigInt::from(smallest))
}

/// Human-readable primes, e.g. `{x1,x2}`.
pub fn format_prime(prime: &[usize]) -> String {
    let names: Vec<String> = prime.iter().map(|i| format!("x{}", i + 1)).collect();
    format!("{{{}}}", names.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::newton_polyhedron;
    use crate::rational::{int, ratio};

    fn ideal(d: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(d, gens).unwrap()
    }

    fn triangle() -> SquarefreeIdeal {
        analyze(&ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])).unwrap()
    }

    fn ev(c: &[u32]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    #[test]
    fn triangle_primes() {
        assert_eq!(triangle().minimal_primes(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(triangle().pure_codimension(), Some(2));
    }

    #[test]
    fn principal_and_rejected() {
        let x = analyze(&ideal(2, &[&[1, 0]])).unwrap();
        assert_eq!(x.minimal_primes(), &[vec![0]]);
        assert!(matches!(analyze(&ideal(2, &[&[2, 1]])), Err(Error::NotSquarefree { .. })));
        assert!(matches!(analyze(&MonomialIdeal::unit(2).unwrap()), Err(Error::UnitIdeal)));
    }

    #[test]
    fn mixed_codimension() {
        let q = analyze(&ideal(3, &[&[1, 1, 0], &[1, 0, 1]])).unwrap();
        assert_eq!(q.minimal_primes(), &[vec![0], vec![1, 2]]);
        assert_eq!(q.containment_exponent(), 3);
        // (x, yz) is unmixed: (x,y) ∩ (x,z)
        let r = analyze(&ideal(3, &[&[1, 0, 0], &[0, 1, 1]])).unwrap();
        assert_eq!(r.pure_codimension(), Some(2));
    }

    #[test]
    fn triangle_strictness() {
        let q = triangle();
        let second = symbolic_power(&q, 2).unwrap();
        let xyz = ev(&[1, 1, 1]);
        assert!(second.contains_monomial(&xyz).unwrap());
        assert!(!q.base().power(2).unwrap().contains_monomial(&xyz).unwrap());
        assert_eq!(symbolic_power(&q, 1).unwrap(), *q.base());
    }

    #[test]
    fn smooth_collapse() {
        let x = analyze(&ideal(2, &[&[1, 0]])).unwrap();
        for m in 1..=5 {
            assert_eq!(symbolic_power(&x, m).unwrap(), x.base().power(m).unwrap());
        }
        let p = analyze(&MonomialIdeal::maximal(3).unwrap()).unwrap();
        for m in 1..=4 {
            assert_eq!(symbolic_power(&p, m).unwrap(), p.base().power(m).unwrap());
        }
    }

    #[test]
    fn triangle_polyhedron() {
        let poly = symbolic_polyhedron(&triangle()).unwrap();
        let facets: Vec<(Vec<i64>, Rational)> = poly
            .facets()
            .iter()
            .map(|f| (f.normal().iter().map(|v| i64::try_from(v).unwrap()).collect(), f.offset().clone()))
            .collect();
        assert_eq!(
            facets,
            vec![
                (vec![1, 1, 0], int(1)),
                (vec![1, 0, 1], int(1)),
                (vec![0, 1, 1], int(1)),
                (vec![1, 0, 0], int(0)),
                (vec![0, 1, 0], int(0)),
                (vec![0, 0, 1], int(0)),
            ]
        );
        assert!(poly.vertices().contains(&vec![ratio(1, 2); 3]));
    }

    #[test]
    fn single_prime_polyhedra() {
        let max = analyze(&MonomialIdeal::maximal(2).unwrap()).unwrap();
        let poly = symbolic_polyhedron(&max).unwrap();
        assert_eq!(poly.positive_facets().count(), 1);
        assert_eq!(poly.facets().len(), 3);
        let x = analyze(&ideal(2, &[&[1, 0]])).unwrap();
        let poly = symbolic_polyhedron(&x).unwrap();
        let normals: Vec<_> = poly.facets().iter().map(|f| f.normal().to_vec()).collect();
        assert_eq!(normals, vec![vec![BigInt::from(1), BigInt::from(0)], vec![BigInt::from(0), BigInt::from(1)]]);
        assert_eq!(poly.facets()[0].offset(), &int(1));
    }

    #[test]
    fn stabilised_polyhedron() {
        let q = triangle();
        let target = symbolic_polyhedron(&q).unwrap();
        for p in 1..=6u32 {
            let scaled =
                newton_polyhedron(&symbolic_power(&q, p).unwrap()).unwrap().scaled(&ratio(1, p as i64)).unwrap();
            if p % 2 == 0 {
                assert_eq!(scaled.facets(), target.facets(), "p = {p}");
            } else {
                // the vertex (1/2,1/2,1/2) is not a lattice point of pQ
                assert_ne!(scaled.facets(), target.facets(), "p = {p}");
                for v in scaled.vertices() {
                    assert_ne!(target.member(v, &int(1)).unwrap(), crate::newton::Position::Outside);
                }
            }
        }
    }

    #[test]
    fn asymptotic_ideals() {
        let q = triangle();
        let j2 = asymptotic_multiplier_ideal(&q, &int(2)).unwrap();
        assert!(q.base().contains_ideal(&j2).unwrap());
        assert!(asymptotic_multiplier_ideal(&q, &ratio(3, 2)).unwrap().is_unit());
        assert!(!asymptotic_multiplier_ideal(&q, &int(2)).unwrap().is_unit());
        assert_eq!(symbolic_threshold(&q), int(2));

        let x = analyze(&ideal(3, &[&[1, 0, 0]])).unwrap();
        assert_eq!(asymptotic_multiplier_ideal(&x, &int(1)).unwrap(), *x.base());
        let p = analyze(&ideal(3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert_eq!(asymptotic_multiplier_ideal(&p, &int(2)).unwrap(), *p.base());
        assert!(asymptotic_multiplier_ideal(&p, &int(0)).is_err());
    }

    #[test]
    fn graded_chains() {
        let q = triangle();
        assert!(check_graded_chain(&q, 2, 2).unwrap().passed());
        assert!(check_graded_chain(&q, 1, 1).unwrap().passed());
        let x = analyze(&ideal(2, &[&[1, 0]])).unwrap();
        for (l, m) in [(1, 3), (2, 2), (3, 1)] {
            assert!(check_graded_chain(&x, l, m).unwrap().passed());
            let a_l = symbolic_power(&x, l).unwrap();
            let j_l = asymptotic_multiplier_ideal(&x, &int(l as i64)).unwrap();
            assert_eq!(a_l, j_l);
        }
        assert!(check_graded_chain(&q, 0, 1).is_err());
    }

    #[test]
    fn symbolic_containments() {
        let q = triangle();
        for m in 1..=3 {
            assert!(check_symbolic_containment(&q, m).unwrap().passed());
        }
        let report = check_symbolic_containment(&q, 2).unwrap();
        assert_eq!(report.details["strictness_witness"], json!([1, 1, 1]));
        assert_eq!(report.details["e"], json!(2));
        let mixed = analyze(&ideal(3, &[&[1, 1, 0], &[1, 0, 1]])).unwrap();
        assert!(check_symbolic_containment(&mixed, 1).unwrap().passed());
        assert_eq!(check_symbolic_containment(&mixed, 1).unwrap().details["e"], json!(3));
    }
}
