//! Seeded random instances for property runs and the verification suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{DistanceMatrix, Face, Graph, SimplicialComplex};
use crate::labelled::{make_labelled, LabelledComplex};
use crate::monomial::{AtomTable, FactoredElement};

/// Distance matrix of `n` points: half the time uniform points in the unit
/// square, otherwise a symmetric matrix of small integers (so thresholds tie).
pub fn random_distance<R: Rng + ?Sized>(rng: &mut R, n: usize) -> DistanceMatrix {
    if rng.gen_bool(0.5) {
        let pts: Vec<Vec<f64>> = (0..n).map(|_| vec![rng.gen::<f64>(), rng.gen::<f64>()]).collect();
        DistanceMatrix::euclidean(&pts).expect("finite points")
    } else {
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = f64::from(rng.gen_range(1..=6u8));
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        DistanceMatrix::new(m).expect("symmetric with zero diagonal")
    }
}

pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: u32, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("valid pairs")
}

/// Closure of up to `max_gens` random faces with at most `max_size` vertices.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, n: u32, max_gens: usize, max_size: usize) -> SimplicialComplex {
    let verts: Vec<u32> = (1..=n).collect();
    let count = rng.gen_range(0..=max_gens);
    let gens = (0..count).filter_map(|_| {
        let size = rng.gen_range(1..=max_size.min(n as usize).max(1));
        let pick: Vec<u32> = verts.choose_multiple(rng, size.min(verts.len())).copied().collect();
        (!pick.is_empty()).then(|| Face::new(pick).expect("distinct vertices"))
    });
    let gens: Vec<Face> = gens.collect();
    SimplicialComplex::from_generators(n, gens).expect("vertices in range")
}

/// Monomial labels in `t` variables with exponents up to `max_exp`.
pub fn random_monomial_labels<R: Rng + ?Sized>(rng: &mut R, n: u32, t: usize, max_exp: u32) -> Vec<FactoredElement> {
    (0..n)
        .map(|_| {
            let e: Vec<u32> = (0..t).map(|_| if rng.gen_bool(0.5) { rng.gen_range(1..=max_exp) } else { 0 }).collect();
            FactoredElement::from_exponents(&e)
        })
        .collect()
}

pub fn random_labelled<R: Rng + ?Sized>(rng: &mut R, complex: SimplicialComplex, t: usize, reduced: bool) -> LabelledComplex {
    let labels = random_monomial_labels(rng, complex.n(), t, 2);
    make_labelled(complex, AtomTable::variables(t), labels, reduced).expect("labels match the vertex count")
}

/// Componentwise degree of the lcm of all labels, indexed by coordinate.
pub fn lcm_degree(lc: &LabelledComplex) -> Vec<u32> {
    let all = lc.labels().iter().fold(FactoredElement::unit(), |a, l| a.lcm(l));
    let t = lc.atoms().coords();
    match lc.atoms().variable_coordinates() {
        Some(coords) => {
            let mut out = vec![0; t];
            for (a, c) in coords.into_iter().enumerate() {
                out[c] = all.exponent(a);
            }
            out
        }
        None => vec![0; t],
    }
}

/// Random `α` with `0 ≤ α ≤ deg lcm` componentwise.
pub fn random_alpha<R: Rng + ?Sized>(rng: &mut R, lc: &LabelledComplex) -> Vec<u32> {
    lcm_degree(lc).into_iter().map(|d| rng.gen_range(0..=d)).collect()
}
