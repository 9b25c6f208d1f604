//! Two-variable hull: the lower-left convex chain of the staircase.

use num_bigint::BigInt;

use crate::ideal::MonomialIdeal;

/// Raw facets `(normal, offset)` of `conv(gens) + R²₊`, unnormalized and
/// unordered.
pub(super) fn staircase_facets(ideal: &MonomialIdeal) -> Vec<([i64; 2], i64)> {
    // minimal generators in the plane have distinct x and y strictly decreasing in x
    let mut points: Vec<(i64, i64)> =
        ideal.generators().iter().map(|g| (i64::from(g.coords()[0]), i64::from(g.coords()[1]))).collect();
    points.sort();

    let mut chain: Vec<(i64, i64)> = Vec::with_capacity(points.len());
    for p in points {
        while chain.len() >= 2 {
            let a = chain[chain.len() - 2];
            let b = chain[chain.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - b.1) - (b.1 - a.1) * (p.0 - b.0);
            if cross > 0 {
                break;
            }
            chain.pop();
        }
        chain.push(p);
    }

    let first = chain[0];
    let last = chain[chain.len() - 1];
    let mut facets = vec![([1, 0], first.0), ([0, 1], last.1)];
    for pair in chain.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let normal = [a.1 - b.1, b.0 - a.0];
        facets.push((normal, normal[0] * a.0 + normal[1] * a.1));
    }
    facets
}

pub(super) fn to_big(facets: Vec<([i64; 2], i64)>) -> Vec<(Vec<BigInt>, BigInt)> {
    facets.into_iter().map(|(n, q)| (n.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(q))).collect()
}
