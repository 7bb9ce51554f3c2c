//! Stanley-Reisner and edge ideals of a clique complex and its relatives.

use persistent_ideals::complex::{Face, Graph, SimplicialComplex};
use persistent_ideals::ideals::{complement_graph, complex_of_squarefree_ideal, edge_ideal, stanley_reisner};

fn main() -> persistent_ideals::Result<()> {
    let g = Graph::new(4, [(1, 2), (1, 3), (2, 3), (3, 4)])?;
    let k = g.clique_complex(3);
    let tilde = complement_graph(&g).clique_complex(3);

    println!("maximal faces   {:?}", k.maximal_faces().iter().map(Face::to_string).collect::<Vec<_>>());
    println!("I_K             {}", stanley_reisner(&k));
    println!("I_edge(K)       {}", edge_ideal(&k));
    println!("I_edge(K~)      {}", edge_ideal(&tilde));

    let hollow = SimplicialComplex::from_generators(4, [Face::new([3, 4])?, Face::new([1, 2])?, Face::new([1, 3])?, Face::new([2, 3])?])?;
    println!("I_K'            {}", stanley_reisner(&hollow));
    assert_ne!(stanley_reisner(&hollow), edge_ideal(&tilde));

    let back = complex_of_squarefree_ideal(&stanley_reisner(&k), 4)?;
    assert_eq!(back, k);
    Ok(())
}
