//! Simplicial complexes, graphs, clique complexes and Vietoris-Rips filtrations.
//!
//! Vertices are the integers `1..=n`. A [`Face`] is a strictly increasing list
//! of vertices; a [`SimplicialComplex`] is a downward-closed set of nonempty
//! faces over the vertex universe `[n]`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Vertex identifier, `1..=n`.
pub type Vertex = u32;

/// A simplex given by its strictly increasing vertex list.
///
/// The empty face is only used at chain level (reduced complexes); it is never
/// stored inside a [`SimplicialComplex`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(Vec<Vertex>);

impl Face {
    /// Builds a face from arbitrary vertices, sorting them. Duplicates and the
    /// vertex `0` are rejected.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFace(format!("duplicate vertex in {v:?}")));
        }
        if v.first() == Some(&0) {
            return Err(Error::InvalidFace("vertices are numbered from 1".into()));
        }
        Ok(Face(v))
    }

    /// Builds a face from a slice already known to be strictly increasing.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertex(v: Vertex) -> Self {
        Face(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `#σ - 1`; the empty face has dimension `-1`.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    /// Bit pattern with bit `v - 1` set for each vertex, when every vertex fits.
    pub fn bits(&self) -> Option<u64> {
        let mut b = 0u64;
        for &v in &self.0 {
            if v > 64 {
                return None;
            }
            b |= 1 << (v - 1);
        }
        Some(b)
    }

    pub fn from_bits(bits: u64) -> Self {
        Face((0..64).filter(|i| bits >> i & 1 == 1).map(|i| i + 1).collect())
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if let (Some(a), Some(b)) = (self.bits(), other.bits()) {
            return a & !b == 0;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// The face with the vertex at position `pos` removed.
    pub fn remove_at(&self, pos: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(pos);
        Face(v)
    }

    pub fn with_vertex(&self, v: Vertex) -> Face {
        let mut out = self.0.clone();
        match out.binary_search(&v) {
            Ok(_) => {}
            Err(i) => out.insert(i, v),
        }
        Face(out)
    }

    /// Codimension-one faces in the order of the removed vertex, smallest first.
    pub fn facets(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |i| self.remove_at(i))
    }

    /// Every nonempty subset of this face.
    pub fn nonempty_subfaces(&self) -> Vec<Face> {
        let k = self.0.len();
        (1u64..(1u64 << k))
            .map(|mask| Face((0..k).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect()))
            .collect()
    }

    /// Colexicographic order: compare the largest vertices first.
    pub fn colex_cmp(&self, other: &Face) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Downward-closed family of nonempty faces over `[n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    n: u32,
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// The complex with no faces at all (the degenerate full subcomplex on ∅).
    pub fn empty(n: u32) -> Self {
        SimplicialComplex { n, faces: BTreeSet::new() }
    }

    /// Downward closure of the given generating faces.
    pub fn from_generators<I>(n: u32, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = Face>,
    {
        let mut faces = BTreeSet::new();
        for g in generators {
            if g.is_empty() {
                continue;
            }
            if let Some(m) = g.max_vertex() {
                if m > n {
                    return Err(Error::InvalidFace(format!("{g} exceeds vertex universe [{n}]")));
                }
            }
            if faces.contains(&g) {
                continue;
            }
            for s in g.nonempty_subfaces() {
                faces.insert(s);
            }
        }
        Ok(SimplicialComplex { n, faces })
    }

    /// Builds a complex from an explicit face list, rejecting it unless it is
    /// already downward closed.
    pub fn from_faces<I>(n: u32, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = Face>,
    {
        let faces: BTreeSet<Face> = faces.into_iter().filter(|f| !f.is_empty()).collect();
        for f in &faces {
            if f.max_vertex().is_some_and(|m| m > n) {
                return Err(Error::InvalidFace(format!("{f} exceeds vertex universe [{n}]")));
            }
            if let Some(missing) = f.facets().find(|t| !t.is_empty() && !faces.contains(t)) {
                return Err(Error::NotDownwardClosed(format!("{f} present but {missing} missing")));
            }
        }
        Ok(SimplicialComplex { n, faces })
    }

    /// The full simplex on `w` (all nonempty subsets).
    pub fn simplex(n: u32, w: &Face) -> Result<Self> {
        Self::from_generators(n, [w.clone()])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.faces.contains(f)
    }

    /// Largest face dimension, `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.iter().map(Face::dim).max().unwrap_or(-1)
    }

    /// Vertices `v` with `{v}` a face.
    pub fn vertex_set(&self) -> Vec<Vertex> {
        self.faces.iter().filter(|f| f.len() == 1).map(|f| f.vertices()[0]).collect()
    }

    /// Faces of dimension `k` in canonical (colexicographic) order. For
    /// `k = -1` this is `[∅]`, the basis of the reduced augmentation.
    pub fn faces_of_dim(&self, k: isize) -> Vec<Face> {
        if k < -1 {
            return Vec::new();
        }
        if k == -1 {
            return vec![Face::empty()];
        }
        let mut out: Vec<Face> = self.faces.iter().filter(|f| f.dim() == k).cloned().collect();
        out.sort_by(Face::colex_cmp);
        out
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.faces.is_subset(&other.faces)
    }

    /// Faces of dimension at most `max_dim`.
    pub fn skeleton(&self, max_dim: isize) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            faces: self.faces.iter().filter(|f| f.dim() <= max_dim).cloned().collect(),
        }
    }

    /// The 1-skeleton as a graph on `[n]`.
    pub fn graph(&self) -> Graph {
        let edges = self
            .faces
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| (f.vertices()[0], f.vertices()[1]))
            .collect();
        Graph { n: self.n, edges }
    }

    pub fn is_full_simplex_on(&self, w: &Face) -> bool {
        self.faces.len() == (1usize << w.len()) - 1 && self.faces.contains(w)
    }

    /// Subfaces contained in `w`: the full subcomplex of `self` on `w`.
    pub fn full_subcomplex(&self, w: &Face) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            faces: self.faces.iter().filter(|f| f.is_subset(w)).cloned().collect(),
        }
    }

    /// Faces with no proper superface, in lexicographic order.
    pub fn maximal_faces(&self) -> Vec<Face> {
        self.faces
            .iter()
            .filter(|f| {
                (1..=self.n)
                    .filter(|v| !f.contains(*v))
                    .all(|v| !self.faces.contains(&f.with_vertex(v)))
            })
            .cloned()
            .collect()
    }

    /// Non-faces all of whose proper nonempty subsets are faces.
    ///
    /// Every minimal non-face `σ` has `σ ∖ {max σ}` in the complex (or empty),
    /// so candidates are generated by extending faces with a larger vertex.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let mut out = BTreeSet::new();
        let is_face = |f: &Face| f.is_empty() || self.faces.contains(f);
        let seeds = std::iter::once(Face::empty()).chain(self.faces.iter().cloned());
        for tau in seeds {
            let start = tau.max_vertex().unwrap_or(0) + 1;
            for v in start..=self.n {
                let sigma = tau.with_vertex(v);
                if self.faces.contains(&sigma) {
                    continue;
                }
                if sigma.facets().all(|f| is_face(&f)) {
                    out.insert(sigma);
                }
            }
        }
        out.into_iter().collect()
    }
}

/// Simple undirected graph on `[n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: u32,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph; each pair is normalised to `(min, max)`. Loops and
    /// vertices outside `[n]` are rejected, repeated edges collapse.
    pub fn new(n: u32, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidGraph(format!("edge {{{a},{b}}} outside [{n}]")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if !self.edges.contains(&(a, b)) {
                    edges.insert((a, b));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Clique complex truncated to faces of dimension `<= max_dim`. Every
    /// vertex of `[n]` is included.
    pub fn clique_complex(&self, max_dim: usize) -> SimplicialComplex {
        let n = self.n;
        let mut adj = vec![Vec::new(); n as usize + 1];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
        }
        let mut faces = BTreeSet::new();
        // Grow cliques by appending larger neighbours of every current vertex.
        let mut frontier: Vec<Face> = (1..=n).map(Face::vertex).collect();
        let mut dim = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in &frontier {
                if dim < max_dim {
                    let last = f.max_vertex().expect("nonempty");
                    for &w in &adj[last as usize] {
                        if f.vertices().iter().all(|&u| self.has_edge(u, w)) {
                            next.push(f.with_vertex(w));
                        }
                    }
                }
            }
            faces.extend(frontier);
            frontier = next;
            dim += 1;
        }
        SimplicialComplex { n, faces }
    }
}

/// Symmetric, nonnegative, zero-diagonal matrix of pairwise distances.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidDistance(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        for i in 0..n {
            for j in 0..n {
                let h = data[i * n + j];
                if !h.is_finite() {
                    return Err(Error::InvalidDistance(format!("entry ({},{}) is not finite", i + 1, j + 1)));
                }
                if h < 0.0 {
                    return Err(Error::InvalidDistance(format!("entry ({},{}) is negative", i + 1, j + 1)));
                }
                if i == j && h != 0.0 {
                    return Err(Error::InvalidDistance(format!("diagonal entry ({},{}) is nonzero", i + 1, i + 1)));
                }
                if h != data[j * n + i] {
                    return Err(Error::InvalidDistance(format!(
                        "matrix not symmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(DistanceMatrix { n, data })
    }

    /// Euclidean distances between points given as coordinate rows.
    pub fn euclidean(points: &[Vec<f64>]) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::InvalidDistance("points have differing dimensions".into()));
        }
        let rows = points
            .iter()
            .map(|p| {
                points
                    .iter()
                    .map(|q| p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt())
                    .collect()
            })
            .collect();
        Self::new(rows)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Distance between vertices `i` and `j` (1-based).
    pub fn get(&self, i: Vertex, j: Vertex) -> f64 {
        self.data[(i as usize - 1) * self.n + (j as usize - 1)]
    }

    /// Parameter at which edge `{i,j}` enters the Rips filtration.
    pub fn edge_threshold(&self, i: Vertex, j: Vertex) -> f64 {
        self.get(i, j) / 2.0
    }

    /// Graph of pairs with `h_ij / 2 <= t`.
    pub fn threshold_graph(&self, t: f64) -> Graph {
        let n = self.n as u32;
        let edges = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.edge_threshold(i, j) <= t);
        Graph::new(n, edges).expect("pairs are valid")
    }
}

/// A single step: a parameter value and the complex in force from it onward.
#[derive(Clone, Debug, PartialEq)]
pub struct FiltrationStep {
    pub param: f64,
    pub complex: SimplicialComplex,
}

/// Monotone sequence of complexes over strictly increasing parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct Filtration {
    n: u32,
    steps: Vec<FiltrationStep>,
}

impl Filtration {
    pub fn new(n: u32, steps: Vec<FiltrationStep>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidFiltration("no steps".into()));
        }
        for s in &steps {
            if !s.param.is_finite() {
                return Err(Error::InvalidFiltration("non-finite parameter".into()));
            }
            if s.complex.n() != n {
                return Err(Error::InvalidFiltration("vertex universe differs between steps".into()));
            }
        }
        for w in steps.windows(2) {
            if w[0].param >= w[1].param {
                return Err(Error::InvalidFiltration(format!(
                    "parameters not strictly increasing: {} then {}",
                    w[0].param, w[1].param
                )));
            }
            if !w[0].complex.is_subcomplex_of(&w[1].complex) {
                return Err(Error::InvalidFiltration(format!(
                    "complex at {} is not contained in complex at {}",
                    w[0].param, w[1].param
                )));
            }
        }
        Ok(Filtration { n, steps })
    }

    /// One-step filtration holding `complex` from parameter `t` onward.
    pub fn constant(complex: SimplicialComplex, t: f64) -> Result<Self> {
        let n = complex.n();
        Self::new(n, vec![FiltrationStep { param: t, complex }])
    }

    /// Builds the filtration from a birth map (face → entry parameter).
    pub fn from_births(n: u32, births: &BTreeMap<Face, f64>) -> Result<Self> {
        for (f, &b) in births {
            for t in f.facets().filter(|t| !t.is_empty()) {
                match births.get(&t) {
                    Some(&bt) if bt <= b => {}
                    Some(_) => {
                        return Err(Error::InvalidFiltration(format!("{t} born after its coface {f}")));
                    }
                    None => return Err(Error::NotDownwardClosed(format!("{f} present but {t} missing"))),
                }
            }
        }
        let mut params: Vec<f64> = births.values().copied().collect();
        params.sort_by(f64::total_cmp);
        params.dedup();
        let steps = params
            .into_iter()
            .map(|t| {
                let faces = births.iter().filter(|(_, &b)| b <= t).map(|(f, _)| f.clone());
                SimplicialComplex::from_faces(n, faces).map(|complex| FiltrationStep { param: t, complex })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, steps)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn steps(&self) -> &[FiltrationStep] {
        &self.steps
    }

    pub fn params(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.param).collect()
    }

    /// Index of the step in force at parameter `t` (closed convention), or
    /// `None` before the first step.
    pub fn step_index_at(&self, t: f64) -> Option<usize> {
        self.steps.iter().rposition(|s| s.param <= t)
    }

    pub fn complex_at(&self, t: f64) -> Option<&SimplicialComplex> {
        self.step_index_at(t).map(|i| &self.steps[i].complex)
    }

    pub fn last_complex(&self) -> &SimplicialComplex {
        &self.steps.last().expect("nonempty").complex
    }

    /// Entry parameter of every face of the final complex.
    pub fn births(&self) -> BTreeMap<Face, f64> {
        let mut out = BTreeMap::new();
        for s in &self.steps {
            for f in s.complex.faces() {
                out.entry(f.clone()).or_insert(s.param);
            }
        }
        out
    }
}

/// Vietoris-Rips filtration: edge `{i,j}` enters at exactly `h_ij / 2`, and
/// each step is the clique complex of the threshold graph truncated to
/// `max_dim`. Steps sit at `{0} ∪ {h_ij / 2}`.
pub fn vr_filtration(dist: &DistanceMatrix, max_dim: usize) -> Result<Filtration> {
    let n = dist.len() as u32;
    if n == 0 {
        return Err(Error::InvalidDistance("empty distance matrix".into()));
    }
    let mut params = vec![0.0f64];
    for i in 1..=n {
        for j in i + 1..=n {
            params.push(dist.edge_threshold(i, j));
        }
    }
    params.sort_by(f64::total_cmp);
    params.dedup();
    let steps = params
        .into_iter()
        .map(|t| FiltrationStep { param: t, complex: dist.threshold_graph(t).clique_complex(max_dim) })
        .collect();
    Filtration::new(n, steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[u32]) -> Face {
        Face::new(v.iter().copied()).unwrap()
    }

    fn example_313_graph() -> Graph {
        Graph::new(4, [(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    fn example_311() -> DistanceMatrix {
        let r = 2.0 * 2f64.sqrt();
        DistanceMatrix::new(vec![vec![0.0, 2.0, 2.0], vec![2.0, 0.0, r], vec![2.0, r, 0.0]]).unwrap()
    }

    #[test]
    fn face_rejects_duplicates_and_zero() {
        assert!(Face::new([1, 1]).is_err());
        assert!(Face::new([0, 2]).is_err());
        assert_eq!(f(&[3, 1, 2]).vertices(), &[1, 2, 3]);
        assert_eq!(Face::empty().dim(), -1);
    }

    #[test]
    fn colex_order() {
        let mut faces = vec![f(&[1, 4]), f(&[2, 3]), f(&[1, 3]), f(&[1, 2])];
        faces.sort_by(Face::colex_cmp);
        assert_eq!(faces, vec![f(&[1, 2]), f(&[1, 3]), f(&[2, 3]), f(&[1, 4])]);
    }

    #[test]
    fn from_faces_requires_closure() {
        assert!(SimplicialComplex::from_faces(3, [f(&[1, 2]), f(&[1])]).is_err());
        assert!(SimplicialComplex::from_faces(3, [f(&[1, 2]), f(&[1]), f(&[2])]).is_ok());
        assert!(SimplicialComplex::from_generators(2, [f(&[1, 3])]).is_err());
    }

    #[test]
    fn clique_complex_example_313() {
        let k = example_313_graph().clique_complex(3);
        let expected = SimplicialComplex::from_faces(
            4,
            [[1].as_slice(), &[2], &[3], &[4], &[3, 4], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]]
                .iter()
                .map(|v| f(v)),
        )
        .unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn clique_complex_edgeless_and_k4() {
        let g = Graph::new(3, []).unwrap();
        let k = g.clique_complex(2);
        assert_eq!(k.len(), 3);
        assert_eq!(k.maximal_faces(), vec![f(&[1]), f(&[2]), f(&[3])]);

        let k4 = Graph::new(4, (1..=4).flat_map(|a| (a + 1..=4).map(move |b| (a, b)))).unwrap();
        let k = k4.clique_complex(2);
        assert_eq!(k.len(), 14);
        assert!(!k.contains(&f(&[1, 2, 3, 4])));
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn full_subcomplex_of_triangle() {
        let tri = SimplicialComplex::simplex(3, &f(&[1, 2, 3])).unwrap();
        let sub = tri.full_subcomplex(&f(&[2, 3]));
        assert_eq!(sub, SimplicialComplex::from_generators(3, [f(&[2, 3])]).unwrap());
        assert_eq!(tri.full_subcomplex(&f(&[1, 2, 3])), tri);
        assert!(tri.full_subcomplex(&Face::empty()).is_empty());
    }

    #[test]
    fn maximal_faces_and_nonfaces_example_313() {
        let k = example_313_graph().clique_complex(3);
        assert_eq!(k.maximal_faces(), vec![f(&[1, 2, 3]), f(&[3, 4])]);
        assert_eq!(k.minimal_nonfaces(), vec![f(&[1, 4]), f(&[2, 4])]);
        let simplex = SimplicialComplex::simplex(4, &f(&[1, 2, 3, 4])).unwrap();
        assert!(simplex.minimal_nonfaces().is_empty());
        assert_eq!(simplex.maximal_faces(), vec![f(&[1, 2, 3, 4])]);
    }

    #[test]
    fn missing_vertex_is_a_minimal_nonface() {
        let k = SimplicialComplex::from_generators(3, [f(&[1, 2])]).unwrap();
        assert_eq!(k.minimal_nonfaces(), vec![f(&[3])]);
    }

    #[test]
    fn vr_example_311() {
        let filt = vr_filtration(&example_311(), 2).unwrap();
        let params = filt.params();
        assert_eq!(params, vec![0.0, 1.0, 2f64.sqrt()]);
        let steps = filt.steps();
        assert_eq!(steps[0].complex.len(), 3);
        assert_eq!(steps[1].complex.maximal_faces(), vec![f(&[1, 2]), f(&[1, 3])]);
        assert_eq!(steps[2].complex.maximal_faces(), vec![f(&[1, 2, 3])]);
        assert_eq!(filt.step_index_at(1.2), Some(1));
        assert_eq!(filt.step_index_at(-0.5), None);
    }

    #[test]
    fn vr_singleton() {
        let d = DistanceMatrix::new(vec![vec![0.0]]).unwrap();
        let filt = vr_filtration(&d, 2).unwrap();
        assert_eq!(filt.steps().len(), 1);
        assert_eq!(filt.steps()[0].param, 0.0);
        assert_eq!(filt.last_complex().len(), 1);
    }

    #[test]
    fn vr_duplicate_points_merge_at_zero() {
        let d = DistanceMatrix::new(vec![vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let filt = vr_filtration(&d, 1).unwrap();
        assert_eq!(filt.steps().len(), 1);
        assert!(filt.last_complex().contains(&f(&[1, 2])));
    }

    #[test]
    fn distance_matrix_validation() {
        assert!(DistanceMatrix::new(vec![vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(DistanceMatrix::new(vec![vec![0.0, -1.0], vec![-1.0, 0.0]]).is_err());
        assert!(DistanceMatrix::new(vec![vec![1.0]]).is_err());
        assert!(DistanceMatrix::new(vec![vec![0.0, 1.0]]).is_err());
    }

    #[test]
    fn births_roundtrip() {
        let filt = vr_filtration(&example_311(), 2).unwrap();
        let rebuilt = Filtration::from_births(3, &filt.births()).unwrap();
        assert_eq!(rebuilt, filt);
    }

    #[test]
    fn complement_graph_example_313() {
        let c = example_313_graph().complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(1, 4), (2, 4)]);
    }
}
