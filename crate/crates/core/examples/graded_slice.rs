//! A graded slice of a labelled chain complex is the reduced chain complex of
//! the faces whose label divides `x^α`.

use persistent_ideals::complex::{Face, SimplicialComplex};
use persistent_ideals::homology::betti_numbers;
use persistent_ideals::labelled::{graded_slice, make_labelled, slice_iso_check};
use persistent_ideals::linalg::FieldKind;
use persistent_ideals::monomial::{AtomTable, FactoredElement};

fn main() -> persistent_ideals::Result<()> {
    let k = SimplicialComplex::from_generators(4, [Face::new([1, 2, 3])?, Face::new([1, 4])?])?;
    let labels = [[1, 0, 0, 0], [0, 1, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]].map(|e| FactoredElement::from_exponents(&e));
    let lc = make_labelled(k, AtomTable::variables(4), labels.to_vec(), true)?;

    let alpha = [0, 1, 1, 1];
    let slice = graded_slice(&lc, &alpha)?;
    println!("m_alpha = {}", slice.m_alpha);
    println!("support = {:?}", slice.support.faces().map(Face::to_string).collect::<Vec<_>>());
    for (dim, basis) in &slice.bases {
        let b: Vec<String> = basis.iter().map(|(q, s)| format!("{q}*{s}")).collect();
        println!("  C_{dim}: {}", b.join(", "));
    }
    for m in &slice.maps {
        println!("  d{}: {:?}", m.dim, m.matrix.to_dense());
    }
    let slice_betti = slice.betti(FieldKind::Rational);
    let support_betti = betti_numbers(&slice.support, FieldKind::Rational, true, lc.top_dim());
    println!("slice Betti {:?}, support Betti {:?}", slice_betti.values(), support_betti.values());
    assert!(slice_iso_check(&lc, &alpha)?);
    Ok(())
}
