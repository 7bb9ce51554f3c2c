//! Atom-factored elements of a UFD, monomial ideals and prime decomposition of
//! square-free monomial ideals.
//!
//! A [`FactoredElement`] is a finite product of declared irreducible atoms, so
//! lcm and divisibility reduce to exponent-wise max and comparison. Monomial
//! ideals over `k[x_1..x_n]` use atom `i - 1` for the variable `x_i`.

use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{Face, Vertex};
use crate::error::{Error, Result};
use crate::linalg::Polynomial;

/// Ordered list of pairwise coprime irreducible atoms, each with an expansion
/// as a polynomial in some coordinate ring `Q[y_1..y_c]`.
#[derive(Clone, Debug, PartialEq)]
pub struct AtomTable {
    names: Vec<String>,
    coords: usize,
    expansions: Vec<Polynomial>,
}

impl AtomTable {
    /// `t` plain variables `x1..xt`; atom `i` expands to coordinate `i`.
    pub fn variables(t: usize) -> Self {
        AtomTable {
            names: (1..=t).map(|i| format!("x{i}")).collect(),
            coords: t,
            expansions: (0..t).map(|i| Polynomial::var(t, i)).collect(),
        }
    }

    /// Atoms with explicit polynomial expansions over `coords` coordinates.
    pub fn with_expansions(names: Vec<String>, coords: usize, expansions: Vec<Polynomial>) -> Result<Self> {
        if names.len() != expansions.len() {
            return Err(Error::Input(format!(
                "{} atom names but {} expansions",
                names.len(),
                expansions.len()
            )));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::Input("atom names must be distinct".into()));
        }
        for p in &expansions {
            if p.nvars() != coords {
                return Err(Error::Arity { expected: coords, got: p.nvars() });
            }
            if p.is_zero() {
                return Err(Error::Input("an atom expands to zero".into()));
            }
        }
        Ok(AtomTable { names, coords, expansions })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn coords(&self) -> usize {
        self.coords
    }

    pub fn expansion(&self, atom: usize) -> &Polynomial {
        &self.expansions[atom]
    }

    /// Fails if `e` uses an atom outside this table.
    pub fn check(&self, e: &FactoredElement) -> Result<()> {
        match e.atoms().find(|&a| a >= self.len()) {
            Some(index) => Err(Error::AtomOutOfRange { index, size: self.len() }),
            None => Ok(()),
        }
    }

    /// If every atom expands to a distinct coordinate `y_j`, the coordinate
    /// index of each atom.
    pub fn variable_coordinates(&self) -> Option<Vec<usize>> {
        let mut seen = BTreeSet::new();
        self.expansions
            .iter()
            .map(|p| {
                let mut terms = p.terms();
                let (e, c) = terms.next()?;
                if terms.next().is_some() || !num_traits::One::is_one(c) || e.degree() != 1 {
                    return None;
                }
                let j = e.0.iter().position(|&k| k == 1)?;
                seen.insert(j).then_some(j)
            })
            .collect()
    }

    /// Expands a factored element into a polynomial over the coordinates.
    pub fn expand(&self, e: &FactoredElement) -> Result<Polynomial> {
        self.check(e)?;
        let mut acc = Polynomial::one(self.coords);
        for (a, k) in e.iter() {
            acc = acc.try_mul(&self.expansions[a].pow(k))?;
        }
        Ok(acc)
    }

    /// Renders `e` using atom names, e.g. `x1*(x1+x2)^2`.
    pub fn format(&self, e: &FactoredElement) -> String {
        if e.is_unit() {
            return "1".into();
        }
        e.iter()
            .map(|(a, k)| {
                let name = self.names.get(a).cloned().unwrap_or_else(|| format!("a{a}"));
                let name = if name.contains(['+', '-']) { format!("({name})") } else { name };
                if k == 1 {
                    name
                } else {
                    format!("{name}^{k}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Product of atoms with positive exponents; the empty product is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FactoredElement {
    // sorted by atom, no zero exponents
    factors: Vec<(usize, u32)>,
}

impl FactoredElement {
    pub fn unit() -> Self {
        FactoredElement::default()
    }

    /// The atom `a` to the first power.
    pub fn atom(a: usize) -> Self {
        FactoredElement { factors: vec![(a, 1)] }
    }

    /// From a dense exponent vector indexed by atom.
    pub fn from_exponents(exps: &[u32]) -> Self {
        FactoredElement {
            factors: exps.iter().enumerate().filter(|(_, &k)| k > 0).map(|(a, &k)| (a, k)).collect(),
        }
    }

    /// From `(atom, exponent)` pairs in any order; repeated atoms add up.
    pub fn from_factors(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(usize, u32)> = Vec::new();
        let mut pairs: Vec<_> = pairs.into_iter().filter(|(_, k)| *k > 0).collect();
        pairs.sort_unstable();
        for (a, k) in pairs {
            match v.last_mut() {
                Some((b, e)) if *b == a => *e += k,
                _ => v.push((a, k)),
            }
        }
        FactoredElement { factors: v }
    }

    /// The square-free monomial `x_σ` over the variables of a vertex set.
    pub fn of_face(face: &Face) -> Self {
        FactoredElement { factors: face.vertices().iter().map(|&v| (v as usize - 1, 1)).collect() }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.factors.iter().copied()
    }

    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        self.factors.iter().map(|(a, _)| *a)
    }

    pub fn exponent(&self, atom: usize) -> u32 {
        self.factors.binary_search_by_key(&atom, |(a, _)| *a).map_or(0, |i| self.factors[i].1)
    }

    /// Dense exponent vector of length `len`.
    pub fn exponents(&self, len: usize) -> Vec<u32> {
        let mut v = vec![0; len];
        for &(a, k) in &self.factors {
            if a < len {
                v[a] = k;
            }
        }
        v
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|(_, k)| k).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, k)| *k == 1)
    }

    /// Vertices `{a + 1}` of the atoms in the support.
    pub fn support_face(&self) -> Face {
        Face::from_sorted(self.factors.iter().map(|(a, _)| *a as Vertex + 1).collect())
    }

    /// Product of the distinct atoms dividing `self`.
    pub fn radical(&self) -> Self {
        FactoredElement { factors: self.factors.iter().map(|(a, _)| (*a, 1)).collect() }
    }

    /// Exponent-wise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a.max(b))
    }

    /// Exponent-wise minimum.
    pub fn gcd(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a.min(b))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a + b)
    }

    /// `self` divides `other` iff every exponent is at most the other's.
    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|&(a, k)| other.exponent(a) >= k)
    }

    /// `self / divisor` when the quotient is an element.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if !divisor.divides(self) {
            return None;
        }
        Some(FactoredElement {
            factors: self
                .factors
                .iter()
                .map(|&(a, k)| (a, k - divisor.exponent(a)))
                .filter(|(_, k)| *k > 0)
                .collect(),
        })
    }

    fn merge(&self, other: &Self, op: impl Fn(u32, u32) -> u32) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let (atom, x, y) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                i += 1;
                (a[i - 1].0, a[i - 1].1, 0)
            } else if i >= a.len() || b[j].0 < a[i].0 {
                j += 1;
                (b[j - 1].0, 0, b[j - 1].1)
            } else {
                i += 1;
                j += 1;
                (a[i - 1].0, a[i - 1].1, b[j - 1].1)
            };
            let k = op(x, y);
            if k > 0 {
                out.push((atom, k));
            }
        }
        FactoredElement { factors: out }
    }
}

impl fmt::Debug for FactoredElement {
    /// Variable-style rendering `x1*x3^2`, atom `i` printed as `x{i+1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(a, k)| if *k == 1 { format!("x{}", a + 1) } else { format!("x{}^{k}", a + 1) })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Display for FactoredElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Inclusion-minimal generators under divisibility, sorted canonically.
pub fn minimal_basis(gens: &[FactoredElement]) -> Vec<FactoredElement> {
    let mut sorted: Vec<FactoredElement> = gens.to_vec();
    sorted.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
    sorted.dedup();
    let mut kept: Vec<FactoredElement> = Vec::new();
    for g in sorted {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Generators of the radical: each generator replaced by its support, then
/// minimised.
pub fn radical_generators(gens: &[FactoredElement]) -> Vec<FactoredElement> {
    let flat: Vec<FactoredElement> = gens.iter().map(FactoredElement::radical).collect();
    minimal_basis(&flat)
}

/// Ideal of `k[x_1..x_n]` generated by monomials, kept in minimal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: u32,
    generators: Vec<FactoredElement>,
}

impl MonomialIdeal {
    pub fn new(n: u32, gens: impl IntoIterator<Item = FactoredElement>) -> Result<Self> {
        let gens: Vec<FactoredElement> = gens.into_iter().collect();
        for g in &gens {
            if let Some(a) = g.atoms().find(|&a| a >= n as usize) {
                return Err(Error::AtomOutOfRange { index: a, size: n as usize });
            }
        }
        Ok(MonomialIdeal { n, generators: minimal_basis(&gens) })
    }

    pub fn zero(n: u32) -> Self {
        MonomialIdeal { n, generators: Vec::new() }
    }

    /// Ideal generated by the square-free monomials `x_σ`.
    pub fn from_faces<'a>(n: u32, faces: impl IntoIterator<Item = &'a Face>) -> Result<Self> {
        Self::new(n, faces.into_iter().map(FactoredElement::of_face))
    }

    /// The linear prime `⟨x_i : i ∈ W⟩` as a monomial ideal.
    pub fn of_prime(n: u32, p: &LinearPrime) -> Result<Self> {
        Self::new(n, p.vertices().iter().map(|&v| FactoredElement::atom(v as usize - 1)))
    }

    pub fn ambient_n(&self) -> u32 {
        self.n
    }

    /// Minimal generators in canonical order.
    pub fn generators(&self) -> &[FactoredElement] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(FactoredElement::is_unit)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(FactoredElement::is_squarefree)
    }

    /// `m ∈ I` iff some generator divides `m`.
    pub fn contains(&self, m: &FactoredElement) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal { n: self.n, generators: radical_generators(&self.generators) }
    }

    /// `I ⊆ P_W` iff the support of every generator meets `W`.
    pub fn is_contained_in_prime(&self, p: &LinearPrime) -> bool {
        self.generators.iter().all(|g| g.atoms().any(|a| p.contains(a as Vertex + 1)))
    }

    /// The unique minimal primes of a square-free monomial ideal: the minimal
    /// transversals of its generator supports, sorted. The zero ideal yields
    /// `{P_∅}`.
    pub fn minimal_primes(&self) -> Result<Vec<LinearPrime>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !self.is_squarefree() {
            return Err(Error::NotSquareFree);
        }
        if self.n > 64 {
            return Err(Error::TooManyVariables(self.n as usize));
        }
        let supports: Vec<u64> = self
            .generators
            .iter()
            .map(|g| g.atoms().fold(0u64, |acc, a| acc | 1 << a))
            .collect();
        let mut primes: Vec<LinearPrime> =
            minimal_transversals(&supports).into_iter().map(|b| LinearPrime(Face::from_bits(b))).collect();
        primes.sort();
        Ok(primes)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "⟨0⟩");
        }
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "⟨{}⟩", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Inclusion-minimal hitting sets of a family of nonempty bit-sets.
///
/// Branches on the vertices of the first edge not yet hit; vertices tried in
/// earlier sibling branches are forbidden, so each set is visited once. A
/// branch is cut as soon as some chosen vertex has no private edge left.
pub fn minimal_transversals(edges: &[u64]) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    if edges.is_empty() {
        out.insert(0);
        return out;
    }
    fn has_private_edges(edges: &[u64], chosen: u64) -> bool {
        let mut rest = chosen;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if !edges.iter().any(|&e| e & chosen == v) {
                return false;
            }
        }
        true
    }
    fn go(edges: &[u64], chosen: u64, forbidden: u64, out: &mut BTreeSet<u64>) {
        let Some(&e) = edges.iter().find(|&&e| e & chosen == 0) else {
            out.insert(chosen);
            return;
        };
        let mut forbidden = forbidden;
        let mut cand = e & !forbidden;
        while cand != 0 {
            let v = cand & cand.wrapping_neg();
            cand &= cand - 1;
            let next = chosen | v;
            if has_private_edges(edges, next) {
                go(edges, next, forbidden, out);
            }
            forbidden |= v;
        }
    }
    go(edges, 0, 0, &mut out);
    out
}

/// The prime `P_W = ⟨x_i : i ∈ W⟩`; `W = ∅` is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearPrime(pub Face);

impl LinearPrime {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        Face::new(vertices).map(LinearPrime)
    }

    pub fn zero() -> Self {
        LinearPrime(Face::empty())
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.0.vertices()
    }

    /// `P_∅`, the zero ideal.
    pub fn is_zero_prime(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(v)
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// Order by generator count, then lexicographically.
    pub fn size_lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.height().cmp(&other.height()).then_with(|| self.cmp(other))
    }
}

impl fmt::Debug for LinearPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero_prime() {
            return write!(f, "⟨0⟩");
        }
        let parts: Vec<String> = self.vertices().iter().map(|v| format!("x{v}")).collect();
        write!(f, "⟨{}⟩", parts.join(","))
    }
}

impl fmt::Display for LinearPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(exps: &[u32]) -> FactoredElement {
        FactoredElement::from_exponents(exps)
    }

    /// `x_{i}` products from 1-based variable lists.
    fn x(vars: &[u32]) -> FactoredElement {
        FactoredElement::of_face(&Face::new(vars.iter().copied()).unwrap())
    }

    fn prime(v: &[u32]) -> LinearPrime {
        LinearPrime::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(x(&[1]).lcm(&x(&[1, 2])), x(&[1, 2]));
        assert_eq!(x(&[2, 3]).lcm(&FactoredElement::unit()), x(&[2, 3]));
        assert_eq!(x(&[2, 3]).lcm(&x(&[2, 4])), x(&[2, 3, 4]));
        assert_eq!(m(&[2, 0, 1]).lcm(&m(&[1, 3])), m(&[2, 3, 1]));
    }

    #[test]
    fn divides_examples() {
        assert!(x(&[2, 3]).divides(&x(&[2, 3, 4])));
        assert!(FactoredElement::unit().divides(&x(&[4])));
        assert!(!x(&[1]).divides(&x(&[2, 3, 4])));
        assert!(!m(&[2]).divides(&m(&[1])));
    }

    #[test]
    fn minimal_basis_example_313() {
        let gens = [x(&[1, 4]), x(&[2, 4]), x(&[1, 2, 4]), x(&[1, 3, 4]), x(&[2, 3, 4]), x(&[1, 2, 3, 4])];
        assert_eq!(minimal_basis(&gens), vec![x(&[1, 4]), x(&[2, 4])]);
        assert_eq!(minimal_basis(&[x(&[3])]), vec![x(&[3])]);
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical_generators(&[m(&[2, 1])]), vec![x(&[1, 2])]);
        assert_eq!(radical_generators(&[x(&[1, 4]), x(&[2, 4])]), vec![x(&[1, 4]), x(&[2, 4])]);
        assert_eq!(radical_generators(&[m(&[3]), m(&[1, 2])]), vec![x(&[1])]);
    }

    #[test]
    fn membership_examples() {
        let i = MonomialIdeal::new(4, [x(&[1, 4]), x(&[2, 4])]).unwrap();
        assert!(i.contains(&x(&[1, 2, 4])));
        assert!(!i.contains(&x(&[3])));
        assert!(!i.contains(&FactoredElement::unit()));
        let unit = MonomialIdeal::new(4, [FactoredElement::unit()]).unwrap();
        assert!(unit.contains(&FactoredElement::unit()));
    }

    #[test]
    fn minimal_primes_examples() {
        let i = MonomialIdeal::new(3, [x(&[2, 3])]).unwrap();
        assert_eq!(i.minimal_primes().unwrap(), vec![prime(&[2]), prime(&[3])]);
        assert_eq!(MonomialIdeal::zero(3).minimal_primes().unwrap(), vec![LinearPrime::zero()]);
        let i = MonomialIdeal::new(4, [x(&[1, 4]), x(&[2, 4])]).unwrap();
        assert_eq!(i.minimal_primes().unwrap(), vec![prime(&[1, 2]), prime(&[4])]);
    }

    #[test]
    fn minimal_primes_errors() {
        let unit = MonomialIdeal::new(2, [FactoredElement::unit()]).unwrap();
        assert!(matches!(unit.minimal_primes(), Err(Error::UnitIdeal)));
        let sq = MonomialIdeal::new(2, [m(&[2])]).unwrap();
        assert!(matches!(sq.minimal_primes(), Err(Error::NotSquareFree)));
        assert!(MonomialIdeal::new(2, [x(&[3])]).is_err());
    }

    #[test]
    fn atom_table_formatting_and_expansion() {
        use crate::linalg::scalar::rational;
        let x1 = Polynomial::var(2, 0);
        let x2 = Polynomial::var(2, 1);
        let table = AtomTable::with_expansions(
            vec!["x1".into(), "x2".into(), "x1+x2".into()],
            2,
            vec![x1.clone(), x2.clone(), x1.try_add(&x2).unwrap()],
        )
        .unwrap();
        let e = m(&[1, 0, 1]);
        assert_eq!(table.format(&e), "x1*(x1+x2)");
        let p = table.expand(&e).unwrap();
        assert_eq!(p.evaluate(&[rational(1), rational(1)]).unwrap(), rational(2));
        assert!(table.variable_coordinates().is_none());
        assert_eq!(AtomTable::variables(3).variable_coordinates(), Some(vec![0, 1, 2]));
        assert!(matches!(table.check(&m(&[0, 0, 0, 1])), Err(Error::AtomOutOfRange { index: 3, size: 3 })));
    }

    /// Exhaustive oracle: all `W ⊆ [n]` meeting every support, keep minimal ones.
    fn transversal_oracle(n: u32, supports: &[u64]) -> BTreeSet<u64> {
        let covers: Vec<u64> = (0..1u64 << n).filter(|&w| supports.iter().all(|&s| s & w != 0)).collect();
        covers.iter().copied().filter(|&w| !covers.iter().any(|&c| c != w && c & !w == 0)).collect()
    }

    fn squarefree_ideal(n: u32) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(1u64..(1 << n), 0..7).prop_map(move |masks| {
            MonomialIdeal::new(n, masks.into_iter().map(|b| FactoredElement::of_face(&Face::from_bits(b)))).unwrap()
        })
    }

    fn element() -> impl Strategy<Value = FactoredElement> {
        prop::collection::vec(0u32..3, 4).prop_map(|v| FactoredElement::from_exponents(&v))
    }

    proptest! {
        #[test]
        fn lcm_is_a_semilattice(a in element(), b in element(), c in element()) {
            prop_assert_eq!(a.lcm(&b), b.lcm(&a));
            prop_assert_eq!(a.lcm(&b).lcm(&c), a.lcm(&b.lcm(&c)));
            prop_assert_eq!(a.lcm(&a), a.clone());
            prop_assert!(a.divides(&a.lcm(&b)) && b.divides(&a.lcm(&b)));
        }

        #[test]
        fn divides_is_a_partial_order(a in element(), b in element(), c in element()) {
            prop_assert!(a.divides(&a));
            if a.divides(&b) && b.divides(&a) { prop_assert_eq!(&a, &b); }
            if a.divides(&b) && b.divides(&c) { prop_assert!(a.divides(&c)); }
        }

        #[test]
        fn minimal_basis_is_an_equivalent_antichain(gens in prop::collection::vec(element(), 1..7)) {
            let basis = minimal_basis(&gens);
            for (i, p) in basis.iter().enumerate() {
                for (j, q) in basis.iter().enumerate() {
                    prop_assert!(i == j || !p.divides(q));
                }
            }
            // pairwise-divisibility filter oracle
            let oracle: BTreeSet<FactoredElement> = gens.iter()
                .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
                .cloned().collect();
            prop_assert_eq!(basis.iter().cloned().collect::<BTreeSet<_>>(), oracle);
        }

        #[test]
        fn radical_is_idempotent_and_squarefree(gens in prop::collection::vec(element(), 1..6)) {
            let r = radical_generators(&gens);
            prop_assert!(r.iter().all(FactoredElement::is_squarefree));
            prop_assert_eq!(radical_generators(&r), r);
        }

        #[test]
        fn prime_decomposition_matches_oracle(i in squarefree_ideal(6)) {
            let primes = i.minimal_primes().unwrap();
            let supports: Vec<u64> = i.generators().iter().map(|g| g.support_face().bits().unwrap()).collect();
            let expected: Vec<LinearPrime> = transversal_oracle(6, &supports)
                .into_iter().map(|b| LinearPrime(Face::from_bits(b))).collect();
            let mut got = primes.clone();
            got.sort();
            let mut exp = expected;
            exp.sort();
            prop_assert_eq!(&got, &exp);
            // the intersection of the primes is I, tested on all square-free monomials
            for b in 0..(1u64 << 6) {
                let mono = FactoredElement::of_face(&Face::from_bits(b));
                let in_all = primes.iter().all(|p| p.vertices().iter().any(|&v| b >> (v - 1) & 1 == 1));
                prop_assert_eq!(in_all, i.contains(&mono));
            }
            // antichain
            for p in &primes {
                for q in &primes {
                    prop_assert!(p == q || !p.0.is_subset(&q.0));
                }
            }
            // I ⊆ P_W iff every support meets W
            for w in 0..(1u64 << 6) {
                let p = LinearPrime(Face::from_bits(w));
                let by_members = i.is_subset_of(&MonomialIdeal::of_prime(6, &p).unwrap());
                prop_assert_eq!(by_members, i.is_contained_in_prime(&p));
            }
        }
    }
}
