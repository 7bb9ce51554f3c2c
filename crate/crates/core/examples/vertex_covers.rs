//! Associated primes two ways: closed-form routes and minimal transversals.

use persistent_ideals::complex::{Face, Graph, SimplicialComplex};
use persistent_ideals::ideals::{edge_ideal, minimal_vertex_covers, sr_associated_primes, stanley_reisner};

fn main() -> persistent_ideals::Result<()> {
    let cycle = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])?;
    let covers = minimal_vertex_covers(&cycle);
    println!("minimal vertex covers of C5:");
    for c in &covers {
        println!("  {c}");
    }
    assert_eq!(covers, edge_ideal(&cycle).minimal_primes()?);

    let k = SimplicialComplex::from_generators(5, [Face::new([1, 2, 3])?, Face::new([3, 4])?, Face::new([4, 5])?])?;
    let primes = sr_associated_primes(&k);
    println!("associated primes of I_K = {}:", stanley_reisner(&k));
    for p in &primes {
        println!("  {p}");
    }
    assert_eq!(primes, stanley_reisner(&k).minimal_primes()?);
    Ok(())
}
