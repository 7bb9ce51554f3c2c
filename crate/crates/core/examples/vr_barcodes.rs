//! Prime barcodes of the Stanley-Reisner and edge ideals along a Rips filtration.

use persistent_ideals::complex::{vr_filtration, DistanceMatrix};
use persistent_ideals::persistence::{coverage_report, prime_barcode, IdealKind};

fn main() -> persistent_ideals::Result<()> {
    let dist = DistanceMatrix::euclidean(&[vec![0.0, 0.0], vec![2.0, 0.0], vec![0.0, 2.0]])?;
    let filtration = vr_filtration(&dist, 2)?;
    println!("critical parameters: {:?}", filtration.params());

    for kind in [IdealKind::Sr, IdealKind::Edge] {
        let barcode = prime_barcode(&filtration, kind);
        println!("{kind}");
        for e in barcode.entries() {
            let death = e.death.map_or("inf".to_string(), |d| format!("{d:.6}"));
            println!("  {:<12} [{:.6}, {death})", e.prime.to_string(), e.birth);
        }
        assert!(barcode.resurrected_primes().is_empty());
    }

    let sr = prime_barcode(&filtration, IdealKind::Sr);
    let coverage = coverage_report(&dist, &sr);
    println!("half-distances among SR endpoints: {}/{}", coverage.pairs_checked - coverage.violations.len(), coverage.pairs_checked);
    Ok(())
}
