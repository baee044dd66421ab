//! Extension complexes: facets whose proper edges are subdivided by new
//! points, the scroll matrices built from them, and the binomial ideals they
//! define.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::complex::{
    is_proper_edge, skeleton_graph, stanley_reisner_generators, ComplexError, Graph,
    SimplicialComplex, VertexId,
};
use crate::poly::{Field, IntPoly, MonomialOrder, PolyError, PolyRing, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("extension refers to facet {0}, which does not exist")]
    FacetOutOfRange(usize),
    #[error("facet {0} is extended twice")]
    DuplicateExtension(usize),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("`{vertex}` cannot be the origin of a star in facet {facet}")]
    OriginMismatch { facet: usize, vertex: String },
    #[error("target `{target}` is not in facet {facet}")]
    TargetNotInFacet { facet: usize, target: String },
    #[error("target `{target}` is listed twice in facet {facet}")]
    DuplicateTarget { facet: usize, target: String },
    #[error("edge {origin}{target} of facet {facet} lies in another facet")]
    NotAProperEdge {
        facet: usize,
        origin: String,
        target: String,
    },
    #[error("extension of facet {0} lists no edges")]
    EmptyStar(usize),
    #[error("point name `{0}` is already in use")]
    DuplicatePointName(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// One subdivided edge: the target vertex and the new points, listed from
/// the origin towards the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSpec {
    pub target: String,
    pub points: Vec<String>,
}

/// Extension of one facet along a star of proper edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub facet: usize,
    pub origin: String,
    pub edges: Vec<EdgeSpec>,
}

impl ExtensionSpec {
    /// Shorthand: `ExtensionSpec::new(0, "a", &[("b", &["x"]), ("c", &["y"])])`.
    pub fn new(facet: usize, origin: &str, edges: &[(&str, &[&str])]) -> Self {
        ExtensionSpec {
            facet,
            origin: origin.to_string(),
            edges: edges
                .iter()
                .map(|(t, pts)| EdgeSpec {
                    target: t.to_string(),
                    points: pts.iter().map(|p| p.to_string()).collect(),
                })
                .collect(),
        }
    }
}

/// A resolved facet extension in variable ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetExtension {
    pub facet: usize,
    pub origin: VertexId,
    pub targets: Vec<VertexId>,
    /// New points per edge, aligned with `targets`.
    pub points: Vec<Vec<VertexId>>,
}

impl FacetExtension {
    pub fn all_points(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.points.iter().flatten().copied()
    }
}

/// A block of the scroll matrix, given by its run of variables. The columns
/// are the consecutive pairs of the run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollBlock {
    pub run: Vec<VertexId>,
}

impl ScrollBlock {
    pub fn ncolumns(&self) -> usize {
        self.run.len() - 1
    }

    pub fn columns(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.run.windows(2).map(|w| (w[0], w[1]))
    }

    /// Last entry: the target vertex of the block.
    pub fn end(&self) -> VertexId {
        *self.run.last().unwrap()
    }
}

/// A 2x2 minor `plus[0]*plus[1] - minus[0]*minus[1]` of two columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub columns: (usize, usize),
    pub plus: [VertexId; 2],
    pub minus: [VertexId; 2],
}

impl Minor {
    pub fn to_poly(&self, nvars: usize) -> IntPoly {
        IntPoly::binomial(nvars, self.plus, self.minus)
    }

    /// Written as in the matrix, e.g. `x*c - b*y`; squares as `x^2`.
    pub fn format(&self, names: &[String]) -> String {
        let side = |[u, v]: [VertexId; 2]| {
            if u == v {
                format!("{}^2", names[u])
            } else {
                format!("{}*{}", names[u], names[v])
            }
        };
        format!("{} - {}", side(self.plus), side(self.minus))
    }
}

/// Two-row matrix made of catalecticant blocks.
///
/// Block 1 runs `x0, y_{1,1}, .., y_{1,j1}, x_1`; block `j >= 2` runs
/// `y_{j,1}, .., y_{j,jj}, x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrollMatrix {
    pub facet: usize,
    pub blocks: Vec<ScrollBlock>,
}

impl ScrollMatrix {
    pub fn new(facet: usize, runs: Vec<Vec<VertexId>>) -> Self {
        ScrollMatrix {
            facet,
            blocks: runs.into_iter().map(|run| ScrollBlock { run }).collect(),
        }
    }

    pub fn origin(&self) -> VertexId {
        self.blocks[0].run[0]
    }

    /// Number of blocks, `k`.
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    /// `x_j`, the end of block `j` (1-based).
    pub fn x(&self, j: usize) -> VertexId {
        self.blocks[j - 1].end()
    }

    /// Targets `x_1..x_k`.
    pub fn targets(&self) -> Vec<VertexId> {
        self.blocks.iter().map(|b| b.end()).collect()
    }

    /// New points of block `j` (1-based), `Y_j`.
    pub fn y(&self, j: usize) -> &[VertexId] {
        let run = &self.blocks[j - 1].run;
        if j == 1 {
            &run[1..run.len() - 1]
        } else {
            &run[..run.len() - 1]
        }
    }

    /// `y_{j,1}` for `j >= 2`: the head of block `j`.
    pub fn first_y(&self, j: usize) -> VertexId {
        debug_assert!(j >= 2);
        self.blocks[j - 1].run[0]
    }

    pub fn variables(&self) -> Vec<VertexId> {
        self.blocks.iter().flat_map(|b| b.run.iter().copied()).collect()
    }

    /// Is `v` one of the new points?
    pub fn is_y(&self, v: VertexId) -> bool {
        (1..=self.k()).any(|j| self.y(j).contains(&v))
    }

    /// Block (1-based) and index in the block run of a variable.
    pub fn position(&self, v: VertexId) -> Option<(usize, usize)> {
        self.blocks
            .iter()
            .enumerate()
            .find_map(|(b, blk)| blk.run.iter().position(|&u| u == v).map(|i| (b + 1, i)))
    }

    pub fn columns(&self) -> Vec<(VertexId, VertexId)> {
        self.blocks.iter().flat_map(|b| b.columns()).collect()
    }

    /// Global column index of column `i` of block `b` (1-based block).
    pub fn column_index(&self, block: usize, i: usize) -> usize {
        self.blocks[..block - 1].iter().map(|b| b.ncolumns()).sum::<usize>() + i
    }

    /// All 2x2 minors, by increasing column pair.
    pub fn minors(&self) -> Vec<Minor> {
        let cols = self.columns();
        let mut out = Vec::new();
        for i in 0..cols.len() {
            for j in i + 1..cols.len() {
                out.push(self.minor(i, j));
            }
        }
        out
    }

    /// Minor of global columns `i < j`.
    pub fn minor(&self, i: usize, j: usize) -> Minor {
        let cols = self.columns();
        let (t1, b1) = cols[i];
        let (t2, b2) = cols[j];
        Minor {
            columns: (i, j),
            plus: [t1, b2],
            minus: [b1, t2],
        }
    }

    pub fn format(&self, names: &[String]) -> String {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let run: Vec<&str> = b.run.iter().map(|&v| names[v].as_str()).collect();
                format!("[{}]", run.join(", "))
            })
            .collect();
        blocks.join(" ")
    }
}

/// Generators in named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    pub names: Vec<String>,
    pub generators: Vec<IntPoly>,
}

impl IdealPresentation {
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn format(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.format(&self.names)).collect()
    }

    pub fn ring<F: Field>(&self, field: F, order: MonomialOrder) -> Result<PolyRing<F>, PolyError> {
        PolyRing::new(field, self.names.clone(), order)
    }

    pub fn polys<F: Field>(&self, ring: &PolyRing<F>) -> Result<Vec<Polynomial<F::Elem>>, PolyError> {
        self.generators.iter().map(|g| ring.from_int(g)).collect()
    }
}

/// A complex together with scroll extensions of some of its facets.
///
/// Variables are the base vertices in their order, followed by the new
/// points by facet, edge and position along the edge.
#[derive(Clone, Debug)]
pub struct ExtensionComplex {
    base: SimplicialComplex,
    extended: SimplicialComplex,
    names: Vec<String>,
    extensions: Vec<Option<FacetExtension>>,
    matrices: Vec<Option<ScrollMatrix>>,
}

pub fn build_extension_complex(
    base: &SimplicialComplex,
    specs: &[ExtensionSpec],
) -> Result<ExtensionComplex, ExtensionError> {
    ExtensionComplex::new(base.clone(), specs)
}

impl ExtensionComplex {
    pub fn new(base: SimplicialComplex, specs: &[ExtensionSpec]) -> Result<Self, ExtensionError> {
        let nf = base.facets().len();
        let mut order: Vec<&ExtensionSpec> = specs.iter().collect();
        order.sort_by_key(|s| s.facet);
        let mut names = base.names();
        let mut used: HashSet<String> = names.iter().cloned().collect();
        let mut extensions: Vec<Option<FacetExtension>> = vec![None; nf];

        for spec in order {
            let fi = spec.facet;
            if fi >= nf {
                return Err(ExtensionError::FacetOutOfRange(fi));
            }
            if extensions[fi].is_some() {
                return Err(ExtensionError::DuplicateExtension(fi));
            }
            if spec.edges.is_empty() {
                return Err(ExtensionError::EmptyStar(fi));
            }
            let facet = &base.facets()[fi];
            let lookup = |name: &str| base.id_of(name).ok_or_else(|| ExtensionError::UnknownVertex(name.to_string()));
            let origin = lookup(&spec.origin)?;
            if !facet.contains(&origin) {
                return Err(ExtensionError::OriginMismatch {
                    facet: fi,
                    vertex: spec.origin.clone(),
                });
            }
            let mut targets = Vec::new();
            let mut points = Vec::new();
            for edge in &spec.edges {
                let t = lookup(&edge.target)?;
                if t == origin {
                    return Err(ExtensionError::OriginMismatch {
                        facet: fi,
                        vertex: edge.target.clone(),
                    });
                }
                if !facet.contains(&t) {
                    return Err(ExtensionError::TargetNotInFacet {
                        facet: fi,
                        target: edge.target.clone(),
                    });
                }
                if targets.contains(&t) {
                    return Err(ExtensionError::DuplicateTarget {
                        facet: fi,
                        target: edge.target.clone(),
                    });
                }
                if !is_proper_edge(&base, origin, t) {
                    return Err(ExtensionError::NotAProperEdge {
                        facet: fi,
                        origin: spec.origin.clone(),
                        target: edge.target.clone(),
                    });
                }
                let mut ids = Vec::new();
                for p in &edge.points {
                    if !used.insert(p.clone()) {
                        return Err(ExtensionError::DuplicatePointName(p.clone()));
                    }
                    ids.push(names.len());
                    names.push(p.clone());
                }
                targets.push(t);
                points.push(ids);
            }
            extensions[fi] = Some(FacetExtension {
                facet: fi,
                origin,
                targets,
                points,
            });
        }

        let facets: Vec<Vec<VertexId>> = base
            .facets()
            .iter()
            .zip(&extensions)
            .map(|(f, e)| {
                let mut f = f.clone();
                if let Some(e) = e {
                    f.extend(e.all_points());
                }
                f
            })
            .collect();
        let extended = SimplicialComplex::from_ids(names.clone(), facets)?;
        let matrices = extensions
            .iter()
            .map(|e| e.as_ref().and_then(effective_matrix))
            .collect();
        Ok(ExtensionComplex {
            base,
            extended,
            names,
            extensions,
            matrices,
        })
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    /// The complex of extended facets, in base facet order.
    pub fn extended(&self) -> &SimplicialComplex {
        &self.extended
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Number of base vertices; variables below this are base vertices.
    pub fn nbase(&self) -> usize {
        self.base.nvertices()
    }

    pub fn is_point(&self, v: VertexId) -> bool {
        v >= self.nbase()
    }

    /// The dimension of the base complex.
    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn nfacets(&self) -> usize {
        self.base.facets().len()
    }

    pub fn extension(&self, facet: usize) -> Option<&FacetExtension> {
        self.extensions[facet].as_ref()
    }

    /// Scroll matrix of a facet; `None` when the facet has no new points.
    pub fn matrix(&self, facet: usize) -> Option<&ScrollMatrix> {
        self.matrices[facet].as_ref()
    }

    pub fn matrices(&self) -> impl Iterator<Item = &ScrollMatrix> {
        self.matrices.iter().flatten()
    }

    /// Is the base vertex `v` in no facet but `facet`?
    pub fn is_interior(&self, facet: usize, v: VertexId) -> bool {
        self.extended.facets_containing(&[v]) == [facet]
    }

    pub fn presentation(&self, generators: Vec<IntPoly>) -> IdealPresentation {
        IdealPresentation {
            names: self.names.clone(),
            generators,
        }
    }
}

/// Matrix of an extension. Block 1 is kept even with no points on its edge,
/// as long as some later edge carries points; later edges without points
/// contribute nothing and are left out of the star.
fn effective_matrix(ext: &FacetExtension) -> Option<ScrollMatrix> {
    if ext.points.iter().all(|p| p.is_empty()) {
        return None;
    }
    let mut runs = Vec::new();
    let mut first = vec![ext.origin];
    first.extend(&ext.points[0]);
    first.push(ext.targets[0]);
    runs.push(first);
    for (t, pts) in ext.targets.iter().zip(&ext.points).skip(1) {
        if pts.is_empty() {
            continue;
        }
        let mut run = pts.clone();
        run.push(*t);
        runs.push(run);
    }
    Some(ScrollMatrix::new(ext.facet, runs))
}

pub fn scroll_minors(matrix: &ScrollMatrix, nvars: usize) -> Vec<IntPoly> {
    matrix.minors().iter().map(|m| m.to_poly(nvars)).collect()
}

/// `J_l`: the minors of the facet's matrix and every variable outside the
/// extended facet.
pub fn component_ideals(ext: &ExtensionComplex) -> Vec<IdealPresentation> {
    let n = ext.nvars();
    (0..ext.nfacets())
        .map(|l| {
            let mut gens = ext.matrix(l).map(|m| scroll_minors(m, n)).unwrap_or_default();
            let facet = &ext.extended().facets()[l];
            gens.extend((0..n).filter(|v| !facet.contains(v)).map(|v| IntPoly::variable(n, v)));
            ext.presentation(gens)
        })
        .collect()
}

/// `B`: all scroll minors together with the Stanley–Reisner generators of
/// the extended complex.
pub fn binomial_extension_ideal(ext: &ExtensionComplex) -> IdealPresentation {
    let n = ext.nvars();
    let mut gens: Vec<IntPoly> = ext.matrices().flat_map(|m| scroll_minors(m, n)).collect();
    gens.extend(
        stanley_reisner_generators(ext.extended())
            .iter()
            .map(|s| IntPoly::product(n, s)),
    );
    ext.presentation(gens)
}

/// The graph to be colored: base vertices plus the head `y_{j,1}` of every
/// block `j >= 2`. Edges `x0 x_j` (`j >= 2`) are removed and `y_{j,1}` is
/// joined to `x0` and `x_2`.
pub fn reduced_graph(ext: &ExtensionComplex) -> Graph {
    let mut g = skeleton_graph(ext.base());
    let mut added = Vec::new();
    for m in ext.matrices() {
        let x0 = m.origin();
        for j in 2..=m.k() {
            g.remove_edge(x0, m.x(j));
            let y = m.first_y(j);
            added.push((x0, y));
            added.push((m.x(2), y));
        }
    }
    for (u, v) in added {
        g.add_vertex(v);
        g.add_edge(u, v);
    }
    g
}

/// Vertices of the reduced graph.
pub fn reduced_vertices(ext: &ExtensionComplex) -> BTreeSet<VertexId> {
    reduced_graph(ext).vertices().collect()
}
