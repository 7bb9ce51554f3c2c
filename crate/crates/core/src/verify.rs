//! Seeded randomized suites checking the structural theorems on small
//! instances. Every suite reports its case count and first failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{vr_filtration, DistanceMatrix, Filtration};
use crate::homology::betti_numbers;
use crate::ideals::{complement_graph, edge_ideal, minimal_vertex_covers, sr_associated_primes, stanley_reisner};
use crate::labelled::{
    boundary_matrices, chain_condition_holds, classical_betti, classical_ranks, diag_relation_check, evaluate_chain,
    fraction_field_ranks, graded_slice, local_subcomplex, random_point_ranks, slice_iso_check, EvaluationPoint,
    LabelledComplex, LocalWindow,
};
use crate::linalg::FieldKind;
use crate::monomial::LinearPrime;
use crate::persistence::{
    associated_primes_per_step, betti_profile, coverage_report, jump_witness, ph_barcode, prime_barcode, IdealKind,
    PrimeBarcode,
};
use crate::random::{random_alpha, random_complex, random_distance, random_graph, random_labelled};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest vertex count drawn.
    pub max_n: u32,
    /// Instances per suite.
    pub trials: usize,
    /// Corrupts the per-step primes before barcode assembly so that the
    /// no-resurrection suite must fail.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 42, max_n: 8, trials: 40, inject_fault: false }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub max_n: u32,
    pub trials: usize,
    pub fault_injected: bool,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
}

struct Tally {
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failures: 0, first: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    fn finish(self, name: &'static str, statement: &'static str) -> SuiteResult {
        SuiteResult { name, statement, cases: self.cases, failures: self.failures, first_failure: self.first }
    }
}

type Suite = fn(&mut ChaCha8Rng, &VerifyConfig) -> SuiteResult;

const SUITES: &[(&str, Suite)] = &[
    ("no-resurrection", no_resurrection),
    ("betti-jump-witness", betti_jump_witness),
    ("threshold-coverage", threshold_coverage),
    ("clique-complement", clique_complement),
    ("associated-prime-oracles", associated_prime_oracles),
    ("ph-betti-consistency", ph_betti_consistency),
    ("chain-and-diagonal", chain_and_diagonal),
    ("evaluation-equivalence", evaluation_equivalence),
    ("fraction-field-equivalence", fraction_field_equivalence),
    ("local-information", local_information),
    ("graded-slices", graded_slices),
    ("labelled-filtration", labelled_filtration),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

fn suite_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let suites: Vec<SuiteResult> =
        SUITES.iter().enumerate().map(|(i, (_, suite))| suite(&mut suite_rng(cfg.seed, i), cfg)).collect();
    VerifyReport {
        seed: cfg.seed,
        max_n: cfg.max_n,
        trials: cfg.trials,
        fault_injected: cfg.inject_fault,
        passed: suites.iter().all(SuiteResult::passed),
        suites,
    }
}

fn draw_n(rng: &mut ChaCha8Rng, cfg: &VerifyConfig, cap: u32) -> u32 {
    rng.gen_range(1..=cfg.max_n.clamp(1, cap))
}

fn draw_vr(rng: &mut ChaCha8Rng, cfg: &VerifyConfig, cap: u32) -> (DistanceMatrix, Filtration) {
    let n = draw_n(rng, cfg, cap);
    let d = random_distance(rng, n as usize);
    let f = vr_filtration(&d, n as usize).expect("random matrices are valid");
    (d, f)
}

fn describe(d: &DistanceMatrix) -> String {
    let n = d.len() as u32;
    let rows: Vec<String> = (1..=n)
        .map(|i| (1..=n).map(|j| format!("{}", d.get(i, j))).collect::<Vec<_>>().join(","))
        .collect();
    format!("distance matrix [{}]", rows.join("; "))
}

/// Re-inserts the first prime that stopped being associated into the final
/// step, producing a resurrection whenever any prime dies.
fn inject_resurrection(steps: &mut [Vec<LinearPrime>]) {
    let last = steps.len().saturating_sub(1);
    for i in 0..last {
        if let Some(p) = steps[i].iter().find(|p| !steps[i + 1].contains(p)).cloned() {
            if !steps[last].contains(&p) {
                steps[last].push(p);
                steps[last].sort();
                return;
            }
        }
    }
}

fn no_resurrection(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for _ in 0..cfg.trials {
        let (d, f) = draw_vr(rng, cfg, 8);
        for kind in [IdealKind::Sr, IdealKind::Edge] {
            let mut steps = associated_primes_per_step(&f, kind);
            if cfg.inject_fault {
                inject_resurrection(&mut steps);
            }
            let bc = PrimeBarcode::from_steps(kind, &f.params(), &steps);
            let again = bc.resurrected_primes();
            t.check(again.is_empty(), || format!("{kind} primes {again:?} resurrected for {}", describe(&d)));
        }
    }
    t.finish("no-resurrection", "each SR and edge prime is associated on a single interval")
}

fn betti_jump_witness(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for i in 0..cfg.trials {
        let (d, f) = draw_vr(rng, cfg, 8);
        let field = if i % 2 == 0 { FieldKind::F2 } else { FieldKind::Rational };
        for (param, k) in betti_profile(&f, field, false).jumps() {
            let w = jump_witness(&f, k, param, field);
            t.check(matches!(w, Ok(Some(_))), || format!("no witness for b_{k} at {param} ({w:?}) for {}", describe(&d)));
        }
    }
    t.finish("betti-jump-witness", "every Betti jump changes some linear-prime indicator")
}

fn threshold_coverage(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for _ in 0..cfg.trials {
        let (d, f) = draw_vr(rng, cfg, 8);
        let report = coverage_report(&d, &prime_barcode(&f, IdealKind::Sr));
        t.check(report.is_clean(), || format!("uncovered {:?} for {}", report.violations, describe(&d)));
    }
    t.finish("threshold-coverage", "every half-distance is an SR prime endpoint")
}

fn clique_complement(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for _ in 0..cfg.trials {
        let n = draw_n(rng, cfg, 8);
        let density = rng.gen_range(0.1..0.9);
        let g = random_graph(rng, n, density);
        let lhs = stanley_reisner(&g.clique_complex(n as usize));
        let rhs = edge_ideal(&complement_graph(&g));
        t.check(lhs == rhs, || format!("graph {:?}: {lhs:?} vs {rhs:?}", g.edges().collect::<Vec<_>>()));
    }
    t.finish("clique-complement", "SR ideal of a clique complex is the edge ideal of the complement")
}

fn associated_prime_oracles(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for _ in 0..cfg.trials {
        let n = draw_n(rng, cfg, 8);
        let k = random_complex(rng, n, 5, 4);
        let fast = sr_associated_primes(&k);
        let slow = stanley_reisner(&k).minimal_primes();
        t.check(slow.as_ref().is_ok_and(|s| *s == fast), || format!("complex {:?}: {fast:?} vs {slow:?}", k.maximal_faces()));
        let g = random_graph(rng, n, 0.4);
        let covers = minimal_vertex_covers(&g);
        let slow = edge_ideal(&g).minimal_primes();
        t.check(slow.as_ref().is_ok_and(|s| *s == covers), || format!("graph {:?}: {covers:?} vs {slow:?}", g.edges().collect::<Vec<_>>()));
    }
    t.finish("associated-prime-oracles", "maximal-face and vertex-cover routes agree with minimal transversals")
}

fn ph_betti_consistency(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for i in 0..cfg.trials {
        let (d, f) = draw_vr(rng, cfg, 7);
        let field = if i % 2 == 0 { FieldKind::F2 } else { FieldKind::Rational };
        let top = f.last_complex().dim().max(0) as usize;
        let ph = ph_barcode(&f, field, top).expect("filtration order is valid");
        let prof = betti_profile(&f, field, false);
        for (param, b) in prof.params.iter().zip(&prof.vectors) {
            for k in 0..=top {
                let alive = ph.count_alive(k, *param);
                t.check(alive == b.get(k as isize), || format!("b_{k}({param}) = {} but {alive} bars for {}", b.get(k as isize), describe(&d)));
            }
        }
    }
    t.finish("ph-betti-consistency", "bars alive at each parameter match the Betti numbers")
}

fn draw_labelled(rng: &mut ChaCha8Rng, cfg: &VerifyConfig, reduced: bool) -> LabelledComplex {
    let n = draw_n(rng, cfg, 7);
    let k = random_complex(rng, n, 5, 4);
    let t = rng.gen_range(1..=4);
    random_labelled(rng, k, t, reduced)
}

fn describe_labelled(lc: &LabelledComplex) -> String {
    let labels: Vec<String> = lc.labels().iter().map(|l| lc.atoms().format(l)).collect();
    format!("complex {:?} labels [{}] reduced={}", lc.complex().maximal_faces(), labels.join(", "), lc.is_reduced())
}

/// Random integer point; with `admissible`, redrawn until no label vanishes.
fn draw_point(rng: &mut ChaCha8Rng, lc: &LabelledComplex, admissible: bool) -> EvaluationPoint {
    loop {
        let p = EvaluationPoint::from_integers(&(0..lc.atoms().coords()).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
        if !admissible || evaluate_chain(lc, &p, FieldKind::Rational).is_ok() {
            return p;
        }
    }
}

const FIELDS: [FieldKind; 4] = [FieldKind::Rational, FieldKind::F2, FieldKind::Prime(3), FieldKind::SPOT_CHECK];

fn chain_and_diagonal(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for i in 0..cfg.trials {
        let lc = draw_labelled(rng, cfg, i % 2 == 0);
        t.check(chain_condition_holds(&boundary_matrices(&lc)), || format!("δ̃∘δ̃ ≠ 0 for {}", describe_labelled(&lc)));
        t.check(diag_relation_check(&lc), || format!("diagonal relation fails for {}", describe_labelled(&lc)));
    }
    t.finish("chain-and-diagonal", "labelled boundaries compose to zero and conjugate the classical ones")
}

fn evaluation_equivalence(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for i in 0..cfg.trials {
        let lc = draw_labelled(rng, cfg, i % 2 == 0);
        let field = FIELDS[i % FIELDS.len()];
        let p = loop {
            let p = draw_point(rng, &lc, true);
            if evaluate_chain(&lc, &p, field).is_ok() {
                break p;
            }
        };
        let got = evaluate_chain(&lc, &p, field).map(|c| c.betti());
        let want = classical_betti(&lc, field);
        t.check(got.as_ref().is_ok_and(|g| *g == want), || format!("{got:?} vs {want:?} at {p:?} over {field} for {}", describe_labelled(&lc)));
    }
    t.finish("evaluation-equivalence", "evaluation at an admissible point preserves Betti numbers")
}

fn fraction_field_equivalence(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for i in 0..cfg.trials {
        let lc = draw_labelled(rng, cfg, i % 2 == 0);
        let classical = classical_ranks(&lc, FieldKind::Rational);
        let bareiss = fraction_field_ranks(&lc);
        t.check(bareiss.as_ref().is_ok_and(|b| *b == classical), || format!("{bareiss:?} vs {classical:?} for {}", describe_labelled(&lc)));
        let sampled = random_point_ranks(&lc, rng, 2);
        t.check(sampled.as_ref().is_ok_and(|s| *s == classical), || format!("sampled {sampled:?} vs {classical:?} for {}", describe_labelled(&lc)));
    }
    t.finish("fraction-field-equivalence", "fraction-field ranks of labelled boundaries equal classical ranks")
}

fn local_information(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for i in 0..cfg.trials {
        let lc = draw_labelled(rng, cfg, i % 2 == 0);
        let p = draw_point(rng, &lc, false);
        let local = local_subcomplex(&lc, &LocalWindow::Point(p.clone())).expect("point has the right arity");
        let got = evaluate_chain(&local.restricted, &p, FieldKind::Rational).map(|c| c.betti());
        let want = classical_betti(&local.restricted, FieldKind::Rational);
        t.check(got.as_ref().is_ok_and(|g| *g == want), || format!("window {:?}: {got:?} vs {want:?} for {}", local.window, describe_labelled(&lc)));
        let allowed = (0..lc.atoms().len()).filter(|_| rng.gen_bool(0.5)).collect();
        let local = local_subcomplex(&lc, &LocalWindow::Atoms(allowed)).expect("atoms window");
        let frac = fraction_field_ranks(&local.restricted);
        let want = classical_ranks(&local.restricted, FieldKind::Rational);
        t.check(frac.as_ref().is_ok_and(|f| *f == want), || format!("window {:?}: {frac:?} vs {want:?} for {}", local.window, describe_labelled(&lc)));
    }
    t.finish("local-information", "equivalences hold on the full subcomplex of the window")
}

fn graded_slices(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for _ in 0..cfg.trials {
        let lc = draw_labelled(rng, cfg, true);
        for _ in 0..3 {
            let alpha = random_alpha(rng, &lc);
            let slice = graded_slice(&lc, &alpha).expect("monomial labels");
            let top = lc.top_dim();
            let got = slice.betti(FieldKind::Rational);
            let want = betti_numbers(&slice.support, FieldKind::Rational, true, top);
            t.check(got == want, || format!("α={alpha:?}: {got:?} vs {want:?} for {}", describe_labelled(&lc)));
            let iso = slice_iso_check(&lc, &alpha);
            t.check(matches!(iso, Ok(true)), || format!("α={alpha:?}: iso {iso:?} for {}", describe_labelled(&lc)));
        }
    }
    t.finish("graded-slices", "degree-α slices compute reduced homology of the label-divisor subcomplex")
}

fn labelled_filtration(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    for _ in 0..cfg.trials.div_ceil(4) {
        let (d, f) = draw_vr(rng, cfg, 6);
        let vars = rng.gen_range(1..=3);
        let base = random_labelled(rng, f.steps()[0].complex.clone(), vars, true);
        let p = draw_point(rng, &base, true);
        let alpha = random_alpha(rng, &base);
        for step in f.steps() {
            let lc = base.relabel_complex(step.complex.clone()).expect("same vertex set");
            let ev = evaluate_chain(&lc, &p, FieldKind::Rational).map(|c| c.betti());
            let want = classical_betti(&lc, FieldKind::Rational);
            t.check(ev.as_ref().is_ok_and(|e| *e == want), || format!("step {}: {ev:?} vs {want:?} for {}", step.param, describe(&d)));
            let frac = fraction_field_ranks(&lc);
            let ranks = classical_ranks(&lc, FieldKind::Rational);
            t.check(frac.as_ref().is_ok_and(|r| *r == ranks), || format!("step {}: {frac:?} vs {ranks:?}", step.param));
            let iso = slice_iso_check(&lc, &alpha);
            t.check(matches!(iso, Ok(true)), || format!("step {}: slice iso {iso:?}", step.param));
        }
    }
    t.finish("labelled-filtration", "the labelled equivalences hold at every step with fixed labels")
}
