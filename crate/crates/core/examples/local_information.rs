//! Where labels vanish the evaluated complex only sees the full subcomplex on
//! the surviving vertices.

use std::collections::BTreeSet;

use persistent_ideals::complex::{Face, SimplicialComplex};
use persistent_ideals::labelled::{evaluate_chain, local_subcomplex, make_labelled, vanishing_vertices, EvaluationPoint, LocalWindow};
use persistent_ideals::linalg::scalar::rational;
use persistent_ideals::linalg::{FieldKind, Polynomial};
use persistent_ideals::monomial::{AtomTable, FactoredElement};

fn main() -> persistent_ideals::Result<()> {
    let sum = Polynomial::from_terms(2, [(rational(1), vec![1, 0]), (rational(1), vec![0, 1])])?;
    let atoms = AtomTable::with_expansions(
        vec!["x1".into(), "x2".into(), "x1+x2".into()],
        2,
        vec![Polynomial::var(2, 0), Polynomial::var(2, 1), sum],
    )?;
    let k = SimplicialComplex::from_generators(3, [Face::new([1, 2])?, Face::new([1, 3])?, Face::new([2, 3])?])?;
    let labels = vec![
        FactoredElement::from_exponents(&[0, 0, 1]),
        FactoredElement::from_exponents(&[1, 0, 0]),
        FactoredElement::from_exponents(&[1, 1, 0]),
    ];
    let lc = make_labelled(k, atoms, labels, false)?;

    let point: EvaluationPoint = "1,-1".parse()?;
    println!("vanishing at (1,-1): {:?}", vanishing_vertices(&lc, &point, FieldKind::Rational)?);
    match evaluate_chain(&lc, &point, FieldKind::Rational) {
        Ok(_) => println!("admissible"),
        Err(e) => println!("not admissible: {e}"),
    }
    let local = local_subcomplex(&lc, &LocalWindow::Point(point.clone()))?;
    let chain = evaluate_chain(&local.restricted, &point, FieldKind::Rational)?;
    println!("window {} with Betti numbers {:?}", local.window, chain.betti().values());

    let only_x1: BTreeSet<usize> = [0].into();
    println!("window of x1-only labels: {}", local_subcomplex(&lc, &LocalWindow::Atoms(only_x1))?.window);
    Ok(())
}
