//! Simplicial complexes given by their facets, and the graphs attached to them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;

/// Upper bound on vertex counts; subsets are handled as `u128` bitmasks.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("the facet list is empty")]
    NoFacets,
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("vertex `{vertex}` appears twice in facet {facet}")]
    DuplicateVertexInFacet { facet: usize, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownName(String),
    #[error("vertex name `{0}` is declared twice")]
    DuplicateName(String),
    #[error("vertex `{0}` lies in no facet")]
    IsolatedVertex(String),
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(usize),
    #[error("{0} vertices exceed the supported maximum of 128")]
    TooManyVertices(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub id: VertexId,
    pub name: String,
}

/// A simplicial complex stored by its inclusion-maximal facets.
///
/// Facets are sorted vertex-id lists, kept in input order after contained
/// sets have been dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Vec<VertexId>>,
}

fn mask_of(set: &[VertexId]) -> u128 {
    set.iter().fold(0u128, |m, &v| m | (1u128 << v))
}

fn members(mask: u128) -> Vec<VertexId> {
    (0..128).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Build a complex from facets given by vertex names; ids follow first appearance.
pub fn validate_complex<S: AsRef<str>>(raw_facets: &[Vec<S>]) -> Result<SimplicialComplex, ComplexError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for facet in raw_facets {
        for name in facet {
            let name = name.as_ref();
            if !index.contains_key(name) {
                index.insert(name.to_string(), names.len());
                names.push(name.to_string());
            }
        }
    }
    SimplicialComplex::from_named(&names, raw_facets)
}

impl SimplicialComplex {
    /// Complex on a declared vertex list; every name in a facet must be declared
    /// and every declared vertex must lie in some facet.
    pub fn from_named<S: AsRef<str>, T: AsRef<str>>(
        vertices: &[S],
        raw_facets: &[Vec<T>],
    ) -> Result<Self, ComplexError> {
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_ref(), i).is_some() {
                return Err(ComplexError::DuplicateName(v.as_ref().to_string()));
            }
        }
        let mut facets = Vec::with_capacity(raw_facets.len());
        for (fi, facet) in raw_facets.iter().enumerate() {
            let mut ids = Vec::with_capacity(facet.len());
            for name in facet {
                let id = *index
                    .get(name.as_ref())
                    .ok_or_else(|| ComplexError::UnknownName(name.as_ref().to_string()))?;
                if ids.contains(&id) {
                    return Err(ComplexError::DuplicateVertexInFacet {
                        facet: fi,
                        vertex: name.as_ref().to_string(),
                    });
                }
                ids.push(id);
            }
            facets.push(ids);
        }
        let names = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_ids(names, facets)
    }

    /// Complex from vertex names and facets given by ids into `names`.
    pub fn from_ids(names: Vec<String>, facets: Vec<Vec<VertexId>>) -> Result<Self, ComplexError> {
        if names.len() > MAX_VERTICES {
            return Err(ComplexError::TooManyVertices(names.len()));
        }
        if facets.is_empty() {
            return Err(ComplexError::NoFacets);
        }
        let mut sorted = Vec::with_capacity(facets.len());
        for (fi, mut f) in facets.into_iter().enumerate() {
            if f.is_empty() {
                return Err(ComplexError::EmptyFacet(fi));
            }
            if let Some(&bad) = f.iter().find(|&&v| v >= names.len()) {
                return Err(ComplexError::VertexOutOfRange(bad));
            }
            f.sort_unstable();
            if let Some(w) = f.windows(2).find(|w| w[0] == w[1]) {
                return Err(ComplexError::DuplicateVertexInFacet {
                    facet: fi,
                    vertex: names[w[0]].clone(),
                });
            }
            sorted.push(f);
        }
        let masks: Vec<u128> = sorted.iter().map(|f| mask_of(f)).collect();
        let mut kept = Vec::new();
        for (i, f) in sorted.iter().enumerate() {
            let contained = masks.iter().enumerate().any(|(j, &m)| {
                j != i && masks[i] & !m == 0 && (masks[i] != m || j < i)
            });
            if !contained {
                kept.push(f.clone());
            }
        }
        let covered = kept.iter().fold(0u128, |m, f| m | mask_of(f));
        if let Some(v) = (0..names.len()).find(|&v| covered >> v & 1 == 0) {
            return Err(ComplexError::IsolatedVertex(names[v].clone()));
        }
        let vertices = names
            .into_iter()
            .enumerate()
            .map(|(id, name)| Vertex { id, name })
            .collect();
        Ok(SimplicialComplex { vertices, facets: kept })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn names(&self) -> Vec<String> {
        self.vertices.iter().map(|v| v.name.clone()).collect()
    }

    pub fn nvertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Vec<VertexId>] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(1) - 1
    }

    pub fn name(&self, id: VertexId) -> &str {
        &self.vertices[id].name
    }

    pub fn id_of(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// Index of the facet equal to the given vertex set.
    pub fn facet_index(&self, set: &[VertexId]) -> Option<usize> {
        let m = mask_of(set);
        self.facets.iter().position(|f| mask_of(f) == m && f.len() == set.len())
    }

    pub fn is_face(&self, set: &[VertexId]) -> bool {
        let m = mask_of(set);
        self.facets.iter().any(|f| m & !mask_of(f) == 0)
    }

    /// Facets containing every vertex of `set`.
    pub fn facets_containing(&self, set: &[VertexId]) -> Vec<usize> {
        let m = mask_of(set);
        (0..self.facets.len())
            .filter(|&i| m & !mask_of(&self.facets[i]) == 0)
            .collect()
    }

    /// Vertices of facet `index` lying in no other facet.
    pub fn interior(&self, index: usize) -> Vec<VertexId> {
        self.facets[index]
            .iter()
            .copied()
            .filter(|&v| self.facets_containing(&[v]).len() == 1)
            .collect()
    }

    pub fn format_facet(&self, index: usize) -> String {
        let names: Vec<&str> = self.facets[index].iter().map(|&v| self.name(v)).collect();
        format!("[{}]", names.join(", "))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.facets.len()).map(|i| self.format_facet(i)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A simple undirected graph on a set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        Graph {
            adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    /// Adds an edge between known vertices; loops are ignored.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert!(self.adj.contains_key(&u) && self.adj.contains_key(&v), "unknown vertex");
        if u != v {
            self.adj.get_mut(&u).unwrap().insert(v);
            self.adj.get_mut(&v).unwrap().insert(u);
        }
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        if let Some(s) = self.adj.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.adj.get_mut(&v) {
            s.remove(&u);
        }
    }

    pub fn remove_vertex(&mut self, v: VertexId) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                self.adj.get_mut(&u).unwrap().remove(&v);
            }
        }
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn nvertices(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adj[&v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[&v].len()
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (&u, nbrs) in &self.adj {
            for &v in nbrs.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn nedges(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, set: &[VertexId]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Subgraph induced on the given vertices (unknown ids are skipped).
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let mut g = Graph::new(keep.iter().copied().filter(|v| self.has_vertex(*v)));
        for (u, v) in self.edges() {
            if keep.contains(&u) && keep.contains(&v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Edges present in both graphs, on the vertex set of `self`.
    pub fn intersect_edges(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.vertices());
        for (u, v) in self.edges() {
            if other.has_edge(u, v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[&u] {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Is the graph a forest?
    pub fn is_acyclic(&self) -> bool {
        self.nedges() + self.components().len() == self.nvertices()
    }

    /// Maximal cliques (Bron–Kerbosch with pivoting), each sorted, listed in
    /// lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<VertexId>> {
        fn bk(
            g: &Graph,
            r: &mut Vec<VertexId>,
            p: BTreeSet<VertexId>,
            mut x: BTreeSet<VertexId>,
            out: &mut Vec<Vec<VertexId>>,
        ) {
            if p.is_empty() {
                if x.is_empty() {
                    let mut c = r.clone();
                    c.sort_unstable();
                    out.push(c);
                }
                return;
            }
            let pivot = *p
                .union(&x)
                .max_by_key(|&&u| (p.intersection(g.neighbors(u)).count(), std::cmp::Reverse(u)))
                .unwrap();
            let candidates: Vec<VertexId> = p.difference(g.neighbors(pivot)).copied().collect();
            let mut p = p;
            for v in candidates {
                let nv = g.neighbors(v);
                r.push(v);
                bk(
                    g,
                    r,
                    p.intersection(nv).copied().collect(),
                    x.intersection(nv).copied().collect(),
                    out,
                );
                r.pop();
                p.remove(&v);
                x.insert(v);
            }
        }
        let mut out = Vec::new();
        bk(self, &mut Vec::new(), self.vertices().collect(), BTreeSet::new(), &mut out);
        out.sort();
        out
    }

    pub fn clique_number(&self) -> usize {
        self.maximal_cliques().iter().map(|c| c.len()).max().unwrap_or(0)
    }
}

/// The 1-skeleton: all vertices, and an edge for every pair lying in a common facet.
pub fn skeleton_graph(complex: &SimplicialComplex) -> Graph {
    let mut g = Graph::new(0..complex.nvertices());
    for f in complex.facets() {
        for (i, &u) in f.iter().enumerate() {
            for &v in &f[i + 1..] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Complex whose facets are the maximal cliques of `graph`.
///
/// `names[id]` names graph vertex `id`; the graph's vertex ids must be
/// `0..names.len()`.
pub fn clique_complex(graph: &Graph, names: &[String]) -> Result<SimplicialComplex, ComplexError> {
    if let Some(v) = graph.vertices().find(|&v| v >= names.len()) {
        return Err(ComplexError::VertexOutOfRange(v));
    }
    SimplicialComplex::from_ids(names.to_vec(), graph.maximal_cliques())
}

/// One vertex per facet, an edge when two facets meet.
pub fn facet_intersection_graph(complex: &SimplicialComplex) -> Graph {
    let masks: Vec<u128> = complex.facets().iter().map(|f| mask_of(f)).collect();
    let mut g = Graph::new(0..masks.len());
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] != 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DTreeFailure {
    EmptyGraph,
    Disconnected,
    /// No clique on `d + 1` vertices.
    NoBaseClique,
    /// A clique larger than `d + 1`.
    CliqueTooLarge,
    /// Elimination got stuck before reaching the base clique.
    Stuck,
}

impl DTreeFailure {
    pub fn code(&self) -> &'static str {
        match self {
            DTreeFailure::EmptyGraph => "empty-graph",
            DTreeFailure::Disconnected => "disconnected",
            DTreeFailure::NoBaseClique => "no-base-clique",
            DTreeFailure::CliqueTooLarge => "clique-too-large",
            DTreeFailure::Stuck => "stuck",
        }
    }
}

/// Outcome of the generalized d-tree test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DTreeVerdict {
    pub is_tree: bool,
    /// Vertices in removal order; each had a clique of 1..=d neighbours among
    /// the remaining vertices when removed.
    pub elimination_order: Vec<VertexId>,
    /// The complete graph on d + 1 vertices left at the end.
    pub base_clique: Vec<VertexId>,
    pub failure: Option<DTreeFailure>,
    /// Verdict of the clique-tree criterion on the clique complex.
    pub clique_tree_verdict: bool,
}

/// Generalized d-tree recognition by vertex elimination.
///
/// The first maximal clique of size `d + 1` is kept as the base; the
/// lowest-id removable vertex outside it is eliminated first.
pub fn is_generalized_d_tree(graph: &Graph, d: usize) -> DTreeVerdict {
    let clique_tree_verdict = clique_tree_criterion(graph, d);
    let fail = |failure| DTreeVerdict {
        is_tree: false,
        elimination_order: Vec::new(),
        base_clique: Vec::new(),
        failure: Some(failure),
        clique_tree_verdict,
    };
    if graph.nvertices() == 0 {
        return fail(DTreeFailure::EmptyGraph);
    }
    if !graph.is_connected() {
        return fail(DTreeFailure::Disconnected);
    }
    let cliques = graph.maximal_cliques();
    if cliques.iter().any(|c| c.len() > d + 1) {
        return fail(DTreeFailure::CliqueTooLarge);
    }
    let Some(base) = cliques.iter().find(|c| c.len() == d + 1).cloned() else {
        return fail(DTreeFailure::NoBaseClique);
    };

    let mut g = graph.clone();
    let mut order = Vec::new();
    while g.nvertices() > base.len() {
        let next = g.vertices().find(|&v| {
            if base.contains(&v) {
                return false;
            }
            let nbrs: Vec<VertexId> = g.neighbors(v).iter().copied().collect();
            (1..=d).contains(&nbrs.len()) && g.is_clique(&nbrs)
        });
        match next {
            Some(v) => {
                g.remove_vertex(v);
                order.push(v);
            }
            None => {
                return DTreeVerdict {
                    is_tree: false,
                    elimination_order: order,
                    base_clique: base,
                    failure: Some(DTreeFailure::Stuck),
                    clique_tree_verdict,
                };
            }
        }
    }
    DTreeVerdict {
        is_tree: true,
        elimination_order: order,
        base_clique: base,
        failure: None,
        clique_tree_verdict,
    }
}

/// Independent test: connected, clique number exactly `d + 1`, and the
/// maximal cliques admit a clique tree (a maximum-weight spanning tree of the
/// clique intersection graph of weight `sum |K_i| - |V|`).
pub fn clique_tree_criterion(graph: &Graph, d: usize) -> bool {
    if graph.nvertices() == 0 || !graph.is_connected() {
        return false;
    }
    let cliques = graph.maximal_cliques();
    if cliques.iter().map(|c| c.len()).max() != Some(d + 1) {
        return false;
    }
    let masks: Vec<u128> = cliques.iter().map(|c| mask_of(c)).collect();
    let mut weighted = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            let w = (masks[i] & masks[j]).count_ones() as usize;
            if w > 0 {
                weighted.push((w, i, j));
            }
        }
    }
    weighted.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut parent: Vec<usize> = (0..masks.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut weight = 0usize;
    for (w, i, j) in weighted {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a] = b;
            weight += w;
        }
    }
    let total: usize = cliques.iter().map(|c| c.len()).sum();
    weight + graph.nvertices() == total
}

/// Minimal non-faces, each a sorted vertex list, ordered by size then
/// lexicographically.
pub fn stanley_reisner_generators(complex: &SimplicialComplex) -> Vec<Vec<VertexId>> {
    let n = complex.nvertices();
    let facet_masks: Vec<u128> = complex.facets().iter().map(|f| mask_of(f)).collect();
    let is_face = |m: u128| facet_masks.iter().any(|&f| m & !f == 0);
    let mut out = Vec::new();
    // faces of the current size, as masks with their largest element
    let mut level: Vec<(u128, usize)> = (0..n).map(|v| (1u128 << v, v)).collect();
    for _size in 2..=complex.dim() + 2 {
        let mut next = Vec::new();
        for &(face, top) in &level {
            for v in top + 1..n {
                let cand = face | 1u128 << v;
                if is_face(cand) {
                    next.push((cand, v));
                } else if members(cand).iter().all(|&u| is_face(cand & !(1u128 << u))) {
                    out.push(members(cand));
                }
            }
        }
        level = next;
    }
    out
}

/// A candidate origin of a facet with the edges from it that lie in no other facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperStar {
    pub facet: usize,
    pub origin: VertexId,
    pub targets: Vec<VertexId>,
}

/// Is the edge `{u, v}` contained in exactly one facet?
pub fn is_proper_edge(complex: &SimplicialComplex, u: VertexId, v: VertexId) -> bool {
    u != v && complex.facets_containing(&[u, v]).len() == 1
}

/// For each facet, every origin with at least one proper edge, ascending by id.
pub fn proper_edge_stars(complex: &SimplicialComplex) -> Vec<Vec<ProperStar>> {
    complex
        .facets()
        .iter()
        .enumerate()
        .map(|(fi, f)| {
            f.iter()
                .filter_map(|&o| {
                    let targets: Vec<VertexId> = f
                        .iter()
                        .copied()
                        .filter(|&t| t != o && is_proper_edge(complex, o, t))
                        .collect();
                    (!targets.is_empty()).then_some(ProperStar {
                        facet: fi,
                        origin: o,
                        targets,
                    })
                })
                .collect()
        })
        .collect()
}
