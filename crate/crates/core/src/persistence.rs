//! Persistent associated primes, Betti profiles and persistent homology along
//! a filtration, plus the cross-checks relating them.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::complex::{DistanceMatrix, Face, Filtration, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::homology::{betti_numbers, face_index, BettiVector};
use crate::ideals::{minimal_vertex_covers, sr_associated_primes, stanley_reisner};
use crate::linalg::{persistence_reduce, BoundaryColumn, FieldKind};
use crate::monomial::{LinearPrime, MonomialIdeal};

/// Which ideal of each step the primes are taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealKind {
    /// Stanley-Reisner ideal of the step's complex.
    Sr,
    /// Edge ideal of the step's 1-skeleton.
    Edge,
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealKind::Sr => "SR",
            IdealKind::Edge => "EDGE",
        })
    }
}

/// Half-open interval `[birth, death)` during which `prime` is associated.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimeInterval {
    pub prime: LinearPrime,
    pub birth: f64,
    /// `None` means the prime is still associated at the final step.
    pub death: Option<f64>,
    pub kind: IdealKind,
}

impl PrimeInterval {
    /// The interval belongs to the zero prime `P_∅`.
    pub fn is_zero_prime(&self) -> bool {
        self.prime.is_zero_prime()
    }

    pub fn contains(&self, t: f64) -> bool {
        self.birth <= t && self.death.is_none_or(|d| t < d)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrimeBarcode {
    kind: IdealKind,
    entries: Vec<PrimeInterval>,
}

impl PrimeBarcode {
    /// Assembles maximal runs from the per-step associated primes. `params`
    /// and `primes` are parallel; entries are sorted by birth, then prime.
    pub fn from_steps(kind: IdealKind, params: &[f64], primes: &[Vec<LinearPrime>]) -> Self {
        assert_eq!(params.len(), primes.len(), "one prime list per step");
        let mut open: BTreeMap<LinearPrime, f64> = BTreeMap::new();
        let mut entries = Vec::new();
        for (&t, ass) in params.iter().zip(primes) {
            let closing: Vec<LinearPrime> = open.keys().filter(|p| !ass.contains(p)).cloned().collect();
            for p in closing {
                let birth = open.remove(&p).expect("open");
                entries.push(PrimeInterval { prime: p, birth, death: Some(t), kind });
            }
            for p in ass {
                open.entry(p.clone()).or_insert(t);
            }
        }
        for (prime, birth) in open {
            entries.push(PrimeInterval { prime, birth, death: None, kind });
        }
        entries.sort_by(|a, b| a.birth.total_cmp(&b.birth).then_with(|| a.prime.size_lex_cmp(&b.prime)));
        PrimeBarcode { kind, entries }
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn entries(&self) -> &[PrimeInterval] {
        &self.entries
    }

    pub fn intervals_of<'a>(&'a self, p: &'a LinearPrime) -> impl Iterator<Item = &'a PrimeInterval> + 'a {
        self.entries.iter().filter(move |e| &e.prime == p)
    }

    /// Primes associated at parameter `t`.
    pub fn primes_at(&self, t: f64) -> Vec<LinearPrime> {
        let mut v: Vec<LinearPrime> = self.entries.iter().filter(|e| e.contains(t)).map(|e| e.prime.clone()).collect();
        v.sort();
        v
    }

    /// All finite births and deaths, sorted and deduplicated.
    pub fn endpoints(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.entries.iter().flat_map(|e| std::iter::once(e.birth).chain(e.death)).collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    }

    /// Primes with more than one interval. Empty whenever the chain of ideals
    /// is monotone, since a prime that stops being associated never returns.
    pub fn resurrected_primes(&self) -> Vec<LinearPrime> {
        let mut counts: BTreeMap<&LinearPrime, usize> = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(&e.prime).or_default() += 1;
        }
        counts.into_iter().filter(|&(_, c)| c > 1).map(|(p, _)| p.clone()).collect()
    }
}

/// Associated primes of the chosen ideal at every step, computed in parallel.
pub fn associated_primes_per_step(f: &Filtration, kind: IdealKind) -> Vec<Vec<LinearPrime>> {
    f.steps()
        .par_iter()
        .map(|s| match kind {
            IdealKind::Sr => sr_associated_primes(&s.complex),
            IdealKind::Edge => minimal_vertex_covers(&s.complex.graph()),
        })
        .collect()
}

pub fn prime_barcode(f: &Filtration, kind: IdealKind) -> PrimeBarcode {
    PrimeBarcode::from_steps(kind, &f.params(), &associated_primes_per_step(f, kind))
}

/// Barcode of the minimal primes of an arbitrary square-free ideal attached
/// to each step, computed by minimal transversals.
pub fn prime_barcode_with<I>(f: &Filtration, kind: IdealKind, ideal: I) -> Result<PrimeBarcode>
where
    I: Fn(&SimplicialComplex) -> MonomialIdeal + Sync,
{
    let primes = f.steps().par_iter().map(|s| ideal(&s.complex).minimal_primes()).collect::<Result<Vec<_>>>()?;
    Ok(PrimeBarcode::from_steps(kind, &f.params(), &primes))
}

/// Betti vectors at every step, each covering dimensions up to the top
/// dimension of the final complex.
#[derive(Clone, Debug, PartialEq)]
pub struct BettiProfile {
    pub field: FieldKind,
    pub reduced: bool,
    pub params: Vec<f64>,
    pub vectors: Vec<BettiVector>,
}

impl BettiProfile {
    /// Betti vector in force at `t`, or `None` before the first step.
    pub fn at(&self, t: f64) -> Option<&BettiVector> {
        self.params.iter().rposition(|&p| p <= t).map(|i| &self.vectors[i])
    }

    /// `(parameter, dimension)` pairs at which `b_k` changes from the
    /// previous step.
    pub fn jumps(&self) -> Vec<(f64, isize)> {
        let mut out = Vec::new();
        for i in 1..self.vectors.len() {
            let (a, b) = (&self.vectors[i - 1], &self.vectors[i]);
            let top = a.top_dim().max(b.top_dim());
            for k in a.lowest_dim()..=top {
                if a.get(k) != b.get(k) {
                    out.push((self.params[i], k));
                }
            }
        }
        out
    }
}

pub fn betti_profile(f: &Filtration, field: FieldKind, reduced: bool) -> BettiProfile {
    let max_dim = f.last_complex().dim().max(0);
    let vectors = f.steps().par_iter().map(|s| betti_numbers(&s.complex, field, reduced, max_dim)).collect();
    BettiProfile { field, reduced, params: f.params(), vectors }
}

/// One persistent homology bar `[birth, death)` in dimension `dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhBar {
    pub dim: usize,
    pub birth: f64,
    pub death: Option<f64>,
}

impl PhBar {
    pub fn contains(&self, t: f64) -> bool {
        self.birth <= t && self.death.is_none_or(|d| t < d)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PhBarcode {
    pub field: FieldKind,
    pub max_dim: usize,
    /// Sorted by dimension, birth, then death with infinite last.
    pub bars: Vec<PhBar>,
}

impl PhBarcode {
    /// Bars of dimension `dim` alive at `t`.
    pub fn count_alive(&self, dim: usize, t: f64) -> usize {
        self.bars.iter().filter(|b| b.dim == dim && b.contains(t)).count()
    }

    pub fn endpoints(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.bars.iter().flat_map(|b| std::iter::once(b.birth).chain(b.death)).collect();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    }
}

/// Faces of the final complex up to `max_dim + 1`, ordered by (birth,
/// dimension, lexicographic), each with its birth.
pub fn filtration_order(f: &Filtration, max_dim: usize) -> Vec<(Face, f64)> {
    let mut faces: Vec<(Face, f64)> =
        f.births().into_iter().filter(|(s, _)| !s.is_empty() && s.dim() <= max_dim as isize + 1).collect();
    faces.sort_by(|(a, ta), (b, tb)| ta.total_cmp(tb).then(a.dim().cmp(&b.dim())).then_with(|| a.cmp(b)));
    faces
}

/// Standard persistent homology; zero-length pairs are dropped.
pub fn ph_barcode(f: &Filtration, field: FieldKind, max_dim: usize) -> Result<PhBarcode> {
    let order = filtration_order(f, max_dim);
    let faces: Vec<Face> = order.iter().map(|(s, _)| s.clone()).collect();
    let index = face_index(&faces);
    let columns: Vec<BoundaryColumn> = faces
        .iter()
        .map(|s| BoundaryColumn {
            dim: s.dim() as usize,
            entries: if s.len() < 2 {
                Vec::new()
            } else {
                s.facets().enumerate().map(|(pos, t)| (index(&t), if pos % 2 == 0 { -1 } else { 1 })).collect()
            },
        })
        .collect();
    let pairing = persistence_reduce(&columns, field)?;
    let birth = |i: usize| order[i].1;
    let dim = |i: usize| columns[i].dim;
    let mut bars: Vec<PhBar> = pairing
        .pairs
        .iter()
        .filter(|&&(c, d)| birth(c) < birth(d))
        .map(|&(c, d)| PhBar { dim: dim(c), birth: birth(c), death: Some(birth(d)) })
        .chain(pairing.unpaired.iter().map(|&c| PhBar { dim: dim(c), birth: birth(c), death: None }))
        .filter(|b| b.dim <= max_dim)
        .collect();
    bars.sort_by(|a, b| {
        a.dim.cmp(&b.dim).then(a.birth.total_cmp(&b.birth)).then_with(|| match (a.death, b.death) {
            (Some(x), Some(y)) => x.total_cmp(&y),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => std::cmp::Ordering::Equal,
        })
    });
    Ok(PhBarcode { field, max_dim, bars })
}

/// How a jump witness was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessLevel {
    /// The prime enters or leaves the associated primes across the jump.
    Associated,
    /// Only the indicator of `I ⊆ P` changes.
    Containment,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JumpWitness {
    pub prime: LinearPrime,
    pub level: WitnessLevel,
    pub betti_before: usize,
    pub betti_after: usize,
}

/// Largest universe for the containment-level fallback search.
const CONTAINMENT_SEARCH_LIMIT: u32 = 20;

/// If `b_k` differs between the left and right limits at `t0`, returns a
/// linear prime whose Stanley-Reisner indicator changes across `t0`.
///
/// Candidates are ordered by size then lexicographically. Primes leaving or
/// entering the associated set are tried first, then containment of the
/// whole ideal. Returns `None` when `b_k` is continuous at `t0`.
pub fn jump_witness(f: &Filtration, k: isize, t0: f64, field: FieldKind) -> Result<Option<JumpWitness>> {
    let lo = f.steps()[0].param;
    if !t0.is_finite() || t0 <= lo {
        return Err(Error::OutOfRange { t: t0, lo });
    }
    let after = f.step_index_at(t0).expect("t0 after the first step");
    let before = f.steps().iter().rposition(|s| s.param < t0).expect("t0 after the first step");
    let (ka, kb) = (&f.steps()[before].complex, &f.steps()[after].complex);
    let top = k.max(0);
    let (b0, b1) = (betti_numbers(ka, field, false, top).get(k), betti_numbers(kb, field, false, top).get(k));
    if b0 == b1 {
        return Ok(None);
    }
    let witness = |prime, level| Some(JumpWitness { prime, level, betti_before: b0, betti_after: b1 });
    let (pa, pb) = (sr_associated_primes(ka), sr_associated_primes(kb));
    let mut changed: Vec<LinearPrime> =
        pa.iter().filter(|p| !pb.contains(p)).chain(pb.iter().filter(|p| !pa.contains(p))).cloned().collect();
    changed.sort_by(LinearPrime::size_lex_cmp);
    if let Some(p) = changed.into_iter().next() {
        return Ok(witness(p, WitnessLevel::Associated));
    }
    let n = f.n();
    if n > CONTAINMENT_SEARCH_LIMIT {
        return Err(Error::TooManyVariables(n as usize));
    }
    let (ia, ib) = (stanley_reisner(ka), stanley_reisner(kb));
    let mut subsets: Vec<LinearPrime> = (0u64..1 << n).map(|bits| LinearPrime(Face::from_bits(bits))).collect();
    subsets.sort_by(LinearPrime::size_lex_cmp);
    Ok(subsets
        .into_iter()
        .find(|p| ia.is_contained_in_prime(p) != ib.is_contained_in_prime(p))
        .and_then(|p| witness(p, WitnessLevel::Containment)))
}

/// A pair whose half-distance is not an endpoint of any interval.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverageViolation {
    pub i: Vertex,
    pub j: Vertex,
    pub half_distance: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverageReport {
    pub pairs_checked: usize,
    pub violations: Vec<CoverageViolation>,
}

impl CoverageReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every `h_ij / 2` is a birth or death of some interval of a
/// barcode built from the Vietoris-Rips filtration of `dist`.
pub fn coverage_report(dist: &DistanceMatrix, barcode: &PrimeBarcode) -> CoverageReport {
    let endpoints = barcode.endpoints();
    let n = dist.len() as Vertex;
    let mut pairs_checked = 0;
    let mut violations = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs_checked += 1;
            let h = dist.edge_threshold(i, j);
            if !endpoints.contains(&h) {
                violations.push(CoverageViolation { i, j, half_distance: h });
            }
        }
    }
    CoverageReport { pairs_checked, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::vr_filtration;

    fn p(v: &[u32]) -> LinearPrime {
        LinearPrime::new(v.iter().copied()).unwrap()
    }

    /// Three points with h12 = h13 = 2 and h23 = 2√2.
    fn right_triangle() -> DistanceMatrix {
        DistanceMatrix::euclidean(&[vec![0.0, 0.0], vec![2.0, 0.0], vec![0.0, 2.0]]).unwrap()
    }

    #[test]
    fn sr_barcode_of_right_triangle() {
        let f = vr_filtration(&right_triangle(), 2).unwrap();
        let bc = prime_barcode(&f, IdealKind::Sr);
        let r2 = 2f64.sqrt();
        let got: Vec<(LinearPrime, f64, Option<f64>)> =
            bc.entries().iter().map(|e| (e.prime.clone(), e.birth, e.death)).collect();
        assert_eq!(
            got,
            vec![
                (p(&[1, 2]), 0.0, Some(1.0)),
                (p(&[1, 3]), 0.0, Some(1.0)),
                (p(&[2, 3]), 0.0, Some(1.0)),
                (p(&[2]), 1.0, Some(r2)),
                (p(&[3]), 1.0, Some(r2)),
                (LinearPrime::zero(), r2, None),
            ]
        );
        assert!(bc.resurrected_primes().is_empty());
    }

    #[test]
    fn ph_of_right_triangle_misses_the_last_threshold() {
        let f = vr_filtration(&right_triangle(), 2).unwrap();
        for field in [FieldKind::F2, FieldKind::Rational] {
            let ph = ph_barcode(&f, field, 1).unwrap();
            let b: Vec<(usize, f64, Option<f64>)> = ph.bars.iter().map(|b| (b.dim, b.birth, b.death)).collect();
            assert_eq!(b, vec![(0, 0.0, Some(1.0)), (0, 0.0, Some(1.0)), (0, 0.0, None)]);
            assert!(!ph.endpoints().contains(&2f64.sqrt()));
        }
        let sr = prime_barcode(&f, IdealKind::Sr);
        assert!(sr.endpoints().contains(&2f64.sqrt()));
    }

    #[test]
    fn coverage_of_right_triangle() {
        let d = right_triangle();
        let f = vr_filtration(&d, 2).unwrap();
        let report = coverage_report(&d, &prime_barcode(&f, IdealKind::Sr));
        assert_eq!(report.pairs_checked, 3);
        assert!(report.is_clean());
    }

    #[test]
    fn betti_profile_of_right_triangle() {
        let f = vr_filtration(&right_triangle(), 2).unwrap();
        let prof = betti_profile(&f, FieldKind::Rational, false);
        assert_eq!(prof.at(0.0).unwrap().values(), &[3, 0, 0]);
        assert_eq!(prof.at(1.2).unwrap().values(), &[1, 0, 0]);
        assert_eq!(prof.at(5.0).unwrap().values(), &[1, 0, 0]);
        assert_eq!(prof.jumps(), vec![(1.0, 0)]);
    }

    #[test]
    fn jump_witness_at_first_edges() {
        let f = vr_filtration(&right_triangle(), 2).unwrap();
        let w = jump_witness(&f, 0, 1.0, FieldKind::F2).unwrap().unwrap();
        assert_eq!(w.level, WitnessLevel::Associated);
        assert_eq!((w.betti_before, w.betti_after), (3, 1));
        assert_eq!(w.prime, p(&[2]));
        assert!(jump_witness(&f, 0, 1.2, FieldKind::F2).unwrap().is_none());
        assert!(jump_witness(&f, 0, 2f64.sqrt(), FieldKind::F2).unwrap().is_none());
        assert!(matches!(jump_witness(&f, 0, 0.0, FieldKind::F2), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn single_step_filtration() {
        let k = SimplicialComplex::from_generators(3, [Face::new([1, 2]).unwrap(), Face::vertex(3)]).unwrap();
        let f = Filtration::constant(k, 0.5).unwrap();
        let bc = prime_barcode(&f, IdealKind::Sr);
        assert!(bc.entries().iter().all(|e| e.birth == 0.5 && e.death.is_none()));
        assert_eq!(bc.primes_at(0.5), vec![p(&[1, 2]), p(&[3])]);
        let ph = ph_barcode(&f, FieldKind::F2, 1).unwrap();
        assert_eq!(ph.bars.len(), 2);
    }

    #[test]
    fn single_vertex_has_one_infinite_bar() {
        let f = vr_filtration(&DistanceMatrix::new(vec![vec![0.0]]).unwrap(), 1).unwrap();
        let ph = ph_barcode(&f, FieldKind::F2, 1).unwrap();
        assert_eq!(ph.bars, vec![PhBar { dim: 0, birth: 0.0, death: None }]);
    }

    #[test]
    fn edge_barcode_starts_with_zero_prime() {
        let f = vr_filtration(&right_triangle(), 2).unwrap();
        let bc = prime_barcode(&f, IdealKind::Edge);
        assert_eq!(bc.entries()[0].prime, LinearPrime::zero());
        assert_eq!(bc.entries()[0].death, Some(1.0));
        assert!(bc.resurrected_primes().is_empty());
        assert_eq!(bc.primes_at(10.0), vec![p(&[1, 2]), p(&[1, 3]), p(&[2, 3])]);
    }

    #[test]
    fn resurrection_is_detected() {
        let params = [0.0, 1.0, 2.0];
        let steps = vec![vec![p(&[1])], vec![p(&[2])], vec![p(&[1])]];
        let bc = PrimeBarcode::from_steps(IdealKind::Sr, &params, &steps);
        assert_eq!(bc.resurrected_primes(), vec![p(&[1])]);
    }

    #[test]
    fn generic_hook_agrees_with_fast_routes() {
        let d = DistanceMatrix::euclidean(&[vec![0.0, 0.0], vec![1.0, 0.2], vec![0.3, 1.7], vec![2.2, 1.1]]).unwrap();
        let f = vr_filtration(&d, 3).unwrap();
        assert_eq!(prime_barcode_with(&f, IdealKind::Sr, stanley_reisner).unwrap(), prime_barcode(&f, IdealKind::Sr));
        let edge = |k: &SimplicialComplex| crate::ideals::edge_ideal(k);
        assert_eq!(prime_barcode_with(&f, IdealKind::Edge, edge).unwrap(), prime_barcode(&f, IdealKind::Edge));
    }
}
