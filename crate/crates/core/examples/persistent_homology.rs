//! Persistent homology bars and Betti jumps, compared with prime endpoints.

use persistent_ideals::complex::{vr_filtration, DistanceMatrix};
use persistent_ideals::linalg::FieldKind;
use persistent_ideals::persistence::{betti_profile, jump_witness, ph_barcode, prime_barcode, IdealKind};

fn main() -> persistent_ideals::Result<()> {
    let dist = DistanceMatrix::euclidean(&[vec![0.0, 0.0], vec![2.0, 0.0], vec![0.0, 2.0]])?;
    let filtration = vr_filtration(&dist, 2)?;

    let ph = ph_barcode(&filtration, FieldKind::F2, 1)?;
    for bar in &ph.bars {
        println!("H{} [{}, {})", bar.dim, bar.birth, bar.death.map_or("inf".into(), |d| d.to_string()));
    }

    let sqrt2 = 2f64.sqrt();
    println!("PH endpoint at sqrt(2): {}", ph.endpoints().contains(&sqrt2));
    println!("SR endpoint at sqrt(2): {}", prime_barcode(&filtration, IdealKind::Sr).endpoints().contains(&sqrt2));

    let profile = betti_profile(&filtration, FieldKind::Rational, false);
    for (t, k) in profile.jumps() {
        let w = jump_witness(&filtration, k, t, FieldKind::Rational)?.expect("a jump has a witness");
        println!("b_{k} jumps at {t}: {} -> {}, witnessed by {} ({:?})", w.betti_before, w.betti_after, w.prime, w.level);
    }
    Ok(())
}
