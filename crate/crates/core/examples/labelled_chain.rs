//! Boundary matrices of a monomially labelled complex, their ranks over the
//! fraction field, and evaluation at a point.

use persistent_ideals::complex::{Face, SimplicialComplex};
use persistent_ideals::labelled::{
    boundary_matrices, chain_condition_holds, classical_ranks, diag_relation_check, evaluate_chain, fraction_field_ranks,
    make_labelled, EvaluationPoint,
};
use persistent_ideals::linalg::FieldKind;
use persistent_ideals::monomial::{AtomTable, FactoredElement};

fn main() -> persistent_ideals::Result<()> {
    let k = SimplicialComplex::from_generators(4, [Face::new([1, 2, 3])?, Face::new([1, 4])?])?;
    let labels = [[1, 0, 0, 0], [0, 1, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]].map(|e| FactoredElement::from_exponents(&e));
    let lc = make_labelled(k, AtomTable::variables(4), labels.to_vec(), true)?;

    let bm = boundary_matrices(&lc);
    for map in &bm.maps {
        println!("d{}: columns {:?}", map.dim, map.cols.iter().map(Face::to_string).collect::<Vec<_>>());
        for (i, row) in map.rows.iter().enumerate() {
            let cells: Vec<String> = (0..map.cols.len())
                .map(|j| map.matrix.get(i, j).map_or("0".into(), |e| lc.format_entry(e)))
                .collect();
            println!("  {:<10} {}", row.to_string(), cells.join("  "));
        }
    }
    assert!(chain_condition_holds(&bm));
    assert!(diag_relation_check(&lc));

    let unreduced = lc.with_reduced(false);
    println!("fraction-field ranks {:?}", fraction_field_ranks(&unreduced)?);
    println!("classical ranks      {:?}", classical_ranks(&unreduced, FieldKind::Rational));

    let point = EvaluationPoint::from_integers(&[2, 3, -1, 5]);
    let chain = evaluate_chain(&unreduced, &point, FieldKind::Rational)?;
    println!("Betti numbers at {:?}: {:?}", [2, 3, -1, 5], chain.betti().values());
    Ok(())
}
