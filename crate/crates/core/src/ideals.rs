//! Stanley-Reisner and edge ideals, the inverse correspondence, and the two
//! independent routes to their associated primes.

use crate::complex::{Face, Graph, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::monomial::{FactoredElement, LinearPrime, MonomialIdeal};

/// `I_Δ`, minimally generated by the minimal non-faces. The full simplex on
/// `[n]` gives the zero ideal.
pub fn stanley_reisner(k: &SimplicialComplex) -> MonomialIdeal {
    MonomialIdeal::from_faces(k.n(), k.minimal_nonfaces().iter()).expect("non-faces lie in [n]")
}

/// Anything with a set of edges on `[n]`.
pub trait EdgeSource {
    fn edge_graph(&self) -> Graph;
}

impl EdgeSource for Graph {
    fn edge_graph(&self) -> Graph {
        self.clone()
    }
}

impl EdgeSource for SimplicialComplex {
    fn edge_graph(&self) -> Graph {
        self.graph()
    }
}

/// Ideal generated by `x_i x_j` over edges (1-faces).
pub fn edge_ideal<S: EdgeSource + ?Sized>(source: &S) -> MonomialIdeal {
    let g = source.edge_graph();
    let gens = g.edges().map(|(a, b)| FactoredElement::from_factors([(a as usize - 1, 1), (b as usize - 1, 1)]));
    MonomialIdeal::new(g.n(), gens).expect("edges lie in [n]")
}

/// `{σ ≠ ∅ : x_σ ∉ I}` for a proper square-free monomial ideal.
pub fn complex_of_squarefree_ideal(ideal: &MonomialIdeal, n: u32) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if n < ideal.ambient_n() {
        return Err(Error::Input(format!("n = {n} smaller than ambient {}", ideal.ambient_n())));
    }
    // Grow faces dimension by dimension; a set is a face iff x_σ ∉ I, which is
    // downward closed.
    let mut faces: Vec<Face> = Vec::new();
    let mut layer: Vec<Face> = (1..=n).map(Face::vertex).filter(|f| !ideal.contains(&FactoredElement::of_face(f))).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for f in &layer {
            let start = f.max_vertex().expect("nonempty") + 1;
            for v in start..=n {
                let g = f.with_vertex(v);
                if !ideal.contains(&FactoredElement::of_face(&g)) {
                    next.push(g);
                }
            }
        }
        faces.append(&mut layer);
        layer = next;
    }
    SimplicialComplex::from_faces(n, faces)
}

/// Associated primes of `I_Δ` via maximal faces: `P_W` with `W^c` maximal.
pub fn sr_associated_primes(k: &SimplicialComplex) -> Vec<LinearPrime> {
    let n = k.n();
    let mut primes: Vec<LinearPrime> = k
        .maximal_faces()
        .into_iter()
        .map(|f| LinearPrime(Face::from_sorted((1..=n).filter(|v| !f.contains(*v)).collect())))
        .collect();
    if primes.is_empty() {
        // empty complex: I_Δ = ⟨x_1..x_n⟩ is itself prime
        primes.push(LinearPrime(Face::from_sorted((1..=n).collect())));
    }
    primes.sort();
    primes
}

/// All inclusion-minimal vertex covers, as linear primes.
///
/// Complements of the maximal independent sets, which are the maximal cliques
/// of the complement graph.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<LinearPrime> {
    let n = g.n();
    let comp = g.complement();
    let mut out: Vec<LinearPrime> = Vec::new();
    // Bron-Kerbosch with pivoting over the complement graph.
    let neighbours = |v: Vertex| -> Vec<Vertex> { (1..=n).filter(|&u| u != v && comp.has_edge(u, v)).collect() };
    fn bk(
        r: Vec<Vertex>,
        p: Vec<Vertex>,
        x: Vec<Vertex>,
        nb: &dyn Fn(Vertex) -> Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p.iter().chain(&x).copied().max_by_key(|&u| nb(u).iter().filter(|w| p.contains(w)).count());
        let pn = pivot.map(nb).unwrap_or_default();
        let mut p = p;
        let mut x = x;
        for v in p.clone().into_iter().filter(|v| !pn.contains(v)) {
            let nv = nb(v);
            let mut r2 = r.clone();
            r2.push(v);
            bk(
                r2,
                p.iter().copied().filter(|u| nv.contains(u)).collect(),
                x.iter().copied().filter(|u| nv.contains(u)).collect(),
                nb,
                out,
            );
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    if n == 0 {
        return vec![LinearPrime::zero()];
    }
    let mut cliques = Vec::new();
    bk(Vec::new(), (1..=n).collect(), Vec::new(), &neighbours, &mut cliques);
    for c in cliques {
        out.push(LinearPrime(Face::from_sorted((1..=n).filter(|v| !c.contains(v)).collect())));
    }
    out.sort();
    out
}

pub fn complement_graph(g: &Graph) -> Graph {
    g.complement()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(v: &[u32]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    fn x(vars: &[u32]) -> FactoredElement {
        FactoredElement::of_face(&f(vars))
    }

    fn prime(v: &[u32]) -> LinearPrime {
        LinearPrime::new(v.iter().copied()).unwrap()
    }

    fn ideal(n: u32, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| x(g))).unwrap()
    }

    fn example_313() -> (Graph, SimplicialComplex) {
        let g = Graph::new(4, [(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let k = g.clique_complex(3);
        (g, k)
    }

    #[test]
    fn sr_ideal_example_313() {
        let (_, k) = example_313();
        assert_eq!(stanley_reisner(&k), ideal(4, &[&[1, 4], &[2, 4]]));
        let k_prime = SimplicialComplex::from_generators(4, [f(&[3, 4]), f(&[1, 2]), f(&[1, 3]), f(&[2, 3])]).unwrap();
        assert_eq!(stanley_reisner(&k_prime), ideal(4, &[&[1, 4], &[2, 4], &[1, 2, 3]]));
        let simplex = SimplicialComplex::simplex(4, &f(&[1, 2, 3, 4])).unwrap();
        assert!(stanley_reisner(&simplex).is_zero());
    }

    #[test]
    fn edge_ideal_example_313() {
        let (g, k) = example_313();
        let expected = ideal(4, &[&[1, 2], &[1, 3], &[2, 3], &[3, 4]]);
        assert_eq!(edge_ideal(&k), expected);
        assert_eq!(edge_ideal(&g), expected);
        let tilde = g.complement().clique_complex(3);
        assert_eq!(edge_ideal(&tilde), ideal(4, &[&[1, 4], &[2, 4]]));
        assert!(edge_ideal(&Graph::new(3, []).unwrap()).is_zero());
    }

    #[test]
    fn inverse_correspondence() {
        let (_, k) = example_313();
        let i = ideal(4, &[&[1, 4], &[2, 4]]);
        assert_eq!(complex_of_squarefree_ideal(&i, 4).unwrap(), k);
        let simplex = SimplicialComplex::simplex(3, &f(&[1, 2, 3])).unwrap();
        assert_eq!(complex_of_squarefree_ideal(&MonomialIdeal::zero(3), 3).unwrap(), simplex);
        let sq = MonomialIdeal::new(2, [FactoredElement::from_exponents(&[2])]).unwrap();
        assert!(matches!(complex_of_squarefree_ideal(&sq, 2), Err(Error::NotSquareFree)));
    }

    #[test]
    fn sr_primes_examples() {
        let (_, k) = example_313();
        assert_eq!(sr_associated_primes(&k), vec![prime(&[1, 2]), prime(&[4])]);
        let simplex = SimplicialComplex::simplex(3, &f(&[1, 2, 3])).unwrap();
        assert_eq!(sr_associated_primes(&simplex), vec![LinearPrime::zero()]);
        let k311 = SimplicialComplex::from_generators(3, [f(&[1, 2]), f(&[1, 3])]).unwrap();
        assert_eq!(sr_associated_primes(&k311), vec![prime(&[2]), prime(&[3])]);
    }

    #[test]
    fn vertex_cover_examples() {
        let path = Graph::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(minimal_vertex_covers(&path), vec![prime(&[1, 3]), prime(&[2])]);
        assert_eq!(minimal_vertex_covers(&Graph::new(3, []).unwrap()), vec![LinearPrime::zero()]);
        let k3 = Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(minimal_vertex_covers(&k3), vec![prime(&[1, 2]), prime(&[1, 3]), prime(&[2, 3])]);
    }

    #[test]
    fn complement_examples() {
        let (g, _) = example_313();
        assert_eq!(complement_graph(&g).edges().collect::<Vec<_>>(), vec![(1, 4), (2, 4)]);
        let k4 = Graph::new(4, (1..=4).flat_map(|a| (a + 1..=4).map(move |b| (a, b)))).unwrap();
        assert_eq!(complement_graph(&k4).num_edges(), 0);
    }

    #[test]
    fn simplex_characterisation() {
        // Δ is the simplex over W iff I_Δ = ⟨x_i : i ∉ W⟩
        let w = f(&[1, 3]);
        let k = SimplicialComplex::simplex(4, &w).unwrap();
        assert_eq!(stanley_reisner(&k), ideal(4, &[&[2], &[4]]));
    }

    fn random_graph(n: u32) -> impl Strategy<Value = Graph> {
        let pairs: Vec<(u32, u32)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            Graph::new(n, pairs.iter().zip(mask).filter(|(_, m)| *m).map(|(p, _)| *p)).unwrap()
        })
    }

    fn random_complex(n: u32) -> impl Strategy<Value = SimplicialComplex> {
        prop::collection::vec(1u64..(1 << n), 0..5)
            .prop_map(move |gens| SimplicialComplex::from_generators(n, gens.into_iter().map(Face::from_bits)).unwrap())
    }

    proptest! {
        #[test]
        fn round_trip_through_ideal(k in random_complex(6)) {
            let i = stanley_reisner(&k);
            prop_assert_eq!(complex_of_squarefree_ideal(&i, 6).unwrap(), k);
        }

        #[test]
        fn clique_complex_sr_is_complement_edge_ideal(g in random_graph(7)) {
            prop_assert_eq!(stanley_reisner(&g.clique_complex(6)), edge_ideal(&complement_graph(&g)));
        }

        #[test]
        fn complement_is_an_involution(g in random_graph(6)) {
            prop_assert_eq!(complement_graph(&complement_graph(&g)), g);
        }

        #[test]
        fn both_routes_to_sr_primes_agree(k in random_complex(6)) {
            prop_assert_eq!(sr_associated_primes(&k), stanley_reisner(&k).minimal_primes().unwrap());
        }

        #[test]
        fn vertex_covers_agree_with_transversals(g in random_graph(7)) {
            prop_assert_eq!(minimal_vertex_covers(&g), edge_ideal(&g).minimal_primes().unwrap());
        }

        #[test]
        fn ideals_reverse_inclusion(k in random_complex(6), extra in random_complex(6)) {
            // k ⊆ k ∪ extra
            let big = SimplicialComplex::from_generators(6, k.faces().chain(extra.faces()).cloned()).unwrap();
            prop_assert!(stanley_reisner(&big).is_subset_of(&stanley_reisner(&k)));
            prop_assert!(edge_ideal(&k).is_subset_of(&edge_ideal(&big)));
        }
    }
}
