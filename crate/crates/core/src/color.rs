//! Colorations of the reduced graph and the linear forms they define.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::complex::{
    clique_complex, is_generalized_d_tree, skeleton_graph, Graph, SimplicialComplex, VertexId,
};
use crate::extension::{reduced_graph, ExtensionComplex};
use crate::poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("vertex {0} has no color")]
    UncoloredVertex(VertexId),
    #[error("color class {0} is empty")]
    EmptyClass(usize),
    #[error("color {color} is out of range for {nclasses} classes")]
    ColorOutOfRange { color: usize, nclasses: usize },
    #[error("the skeleton is not a generalized d-tree: {0}")]
    NotADTree(String),
    #[error("constructed coloration is invalid: {0}")]
    ValidationFailed(String),
}

/// A partial map from vertices to classes `0..nclasses`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloration {
    nclasses: usize,
    assignment: BTreeMap<VertexId, usize>,
}

impl Coloration {
    pub fn new(nclasses: usize) -> Self {
        Coloration {
            nclasses,
            assignment: BTreeMap::new(),
        }
    }

    pub fn from_assignment(
        nclasses: usize,
        assignment: impl IntoIterator<Item = (VertexId, usize)>,
    ) -> Result<Self, ColorError> {
        let mut c = Coloration::new(nclasses);
        for (v, k) in assignment {
            c.set(v, k)?;
        }
        Ok(c)
    }

    /// Classes listed as vertex sets; class `i` gets color `i`.
    pub fn from_classes(nclasses: usize, classes: &[Vec<VertexId>]) -> Result<Self, ColorError> {
        Self::from_assignment(
            nclasses,
            classes
                .iter()
                .enumerate()
                .flat_map(|(k, class)| class.iter().map(move |&v| (v, k))),
        )
    }

    pub fn set(&mut self, v: VertexId, color: usize) -> Result<(), ColorError> {
        if color >= self.nclasses {
            return Err(ColorError::ColorOutOfRange {
                color,
                nclasses: self.nclasses,
            });
        }
        self.assignment.insert(v, color);
        Ok(())
    }

    pub fn nclasses(&self) -> usize {
        self.nclasses
    }

    pub fn color(&self, v: VertexId) -> Option<usize> {
        self.assignment.get(&v).copied()
    }

    pub fn colored(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.assignment.keys().copied()
    }

    pub fn assignment(&self) -> &BTreeMap<VertexId, usize> {
        &self.assignment
    }

    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.nclasses];
        for (&v, &k) in &self.assignment {
            out[k].push(v);
        }
        out
    }

    /// Classes sorted, ignoring color names; for comparisons up to renaming.
    pub fn partition(&self) -> BTreeSet<Vec<VertexId>> {
        self.classes().into_iter().filter(|c| !c.is_empty()).collect()
    }

    pub fn format_classes(&self, names: &[String]) -> Vec<Vec<String>> {
        self.classes()
            .iter()
            .map(|c| c.iter().map(|&v| names[v].clone()).collect())
            .collect()
    }
}

fn require_colored(g: &Graph, c: &Coloration) -> Result<(), ColorError> {
    match g.vertices().find(|&v| c.color(v).is_none()) {
        Some(v) => Err(ColorError::UncoloredVertex(v)),
        None => Ok(()),
    }
}

/// No edge joins two vertices of the same color.
pub fn is_proper_coloration(g: &Graph, c: &Coloration) -> Result<bool, ColorError> {
    require_colored(g, c)?;
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

/// Proper, and every cycle carries at least three colors: the union of any
/// two classes induces a forest.
pub fn is_good_coloration(g: &Graph, c: &Coloration) -> Result<bool, ColorError> {
    if !is_proper_coloration(g, c)? {
        return Ok(false);
    }
    Ok(two_class_unions_acyclic(g, |v| c.color(v), c.nclasses()))
}

fn two_class_unions_acyclic(g: &Graph, color: impl Fn(VertexId) -> Option<usize>, n: usize) -> bool {
    for i in 0..n {
        for j in i + 1..n {
            let keep: BTreeSet<VertexId> = g
                .vertices()
                .filter(|&v| matches!(color(v), Some(k) if k == i || k == j))
                .collect();
            if !g.induced(&keep).is_acyclic() {
                return false;
            }
        }
    }
    true
}

/// `G'`: edges of the reduced graph that are also edges of the skeleton.
pub fn g_prime(ext: &ExtensionComplex) -> Graph {
    reduced_graph(ext).intersect_edges(&skeleton_graph(ext.base()))
}

/// Vertices of facet `l` that must be colored, grouped as the binomial
/// conditions require: `{x0, x_2}`, `{y_{j,1}, x_{j+1}}` for `2 <= j < k`,
/// `{y_{k,1}}`, and singletons for everything else.
pub fn facet_groups(ext: &ExtensionComplex, l: usize) -> Vec<(u8, Vec<VertexId>)> {
    let base = &ext.base().facets()[l];
    let mut groups: Vec<(u8, Vec<VertexId>)> = Vec::new();
    let mut grouped = BTreeSet::new();
    if let Some(m) = ext.matrix(l).filter(|m| m.k() >= 2) {
        let k = m.k();
        groups.push((1, sorted(vec![m.origin(), m.x(2)])));
        for j in 2..k {
            groups.push((2, sorted(vec![m.first_y(j), m.x(j + 1)])));
        }
        groups.push((3, vec![m.first_y(k)]));
        for (_, g) in &groups {
            grouped.extend(g.iter().copied());
        }
    }
    for &v in base {
        if !grouped.contains(&v) {
            groups.push((4, vec![v]));
        }
    }
    groups
}

fn sorted(mut v: Vec<VertexId>) -> Vec<VertexId> {
    v.sort_unstable();
    v
}

/// A violated binomial condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialViolation {
    pub facet: usize,
    /// 1 to 4 for the four class conditions; 0 when the colored set is not
    /// the vertex set of the reduced graph.
    pub condition: u8,
    pub expected: Vec<VertexId>,
    pub found: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialCheck {
    pub violations: Vec<BinomialViolation>,
}

impl BinomialCheck {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the four per-facet class conditions, and that exactly the
/// reduced-graph vertices are colored.
pub fn is_binomial_coloration(ext: &ExtensionComplex, c: &Coloration) -> BinomialCheck {
    let mut violations = Vec::new();
    let wanted: BTreeSet<VertexId> = reduced_graph(ext).vertices().collect();
    let have: BTreeSet<VertexId> = c.colored().collect();
    if wanted != have {
        violations.push(BinomialViolation {
            facet: usize::MAX,
            condition: 0,
            expected: wanted.into_iter().collect(),
            found: have.into_iter().collect(),
        });
        return BinomialCheck { violations };
    }
    for l in 0..ext.nfacets() {
        let facet: BTreeSet<VertexId> = ext.extended().facets()[l].iter().copied().collect();
        for (condition, group) in facet_groups(ext, l) {
            for &v in &group {
                let k = c.color(v).unwrap();
                let found: Vec<VertexId> = facet
                    .iter()
                    .copied()
                    .filter(|&w| c.color(w) == Some(k))
                    .collect();
                if found != group {
                    violations.push(BinomialViolation {
                        facet: l,
                        condition,
                        expected: group.clone(),
                        found,
                    });
                    break;
                }
            }
        }
    }
    BinomialCheck { violations }
}

/// Binomial conditions plus goodness on `G'`.
pub fn validate_coloration(ext: &ExtensionComplex, c: &Coloration) -> Result<(), String> {
    let check = is_binomial_coloration(ext, c);
    if let Some(v) = check.violations.first() {
        return Err(format!(
            "binomial condition {} fails on facet {}",
            v.condition, v.facet
        ));
    }
    match is_good_coloration(&g_prime(ext), c) {
        Ok(true) => Ok(()),
        Ok(false) => Err("not a good coloration of G'".to_string()),
        Err(e) => Err(e.to_string()),
    }
}

/// Backtracking search for a binomial coloration with `d + 1` classes that is
/// good on `G'`. Forced groups are colored first, then the remaining vertices
/// by decreasing degree in the reduced graph.
pub fn search_binomial_coloration(ext: &ExtensionComplex) -> Option<Coloration> {
    let nclasses = ext.dim() + 1;
    let reduced = reduced_graph(ext);
    let gp = g_prime(ext);

    // union-find over forced groups
    let vertices: Vec<VertexId> = reduced.vertices().collect();
    let mut parent: BTreeMap<VertexId, VertexId> = vertices.iter().map(|&v| (v, v)).collect();
    fn find(p: &mut BTreeMap<VertexId, VertexId>, v: VertexId) -> VertexId {
        let mut r = v;
        while p[&r] != r {
            r = p[&r];
        }
        p.insert(v, r);
        r
    }
    let mut facet_sets: Vec<Vec<Vec<VertexId>>> = Vec::new();
    let mut forced = BTreeSet::new();
    for l in 0..ext.nfacets() {
        let groups = facet_groups(ext, l);
        for (cond, g) in &groups {
            if *cond != 4 && g.len() > 1 {
                let a = find(&mut parent, g[0]);
                let b = find(&mut parent, g[1]);
                parent.insert(a.max(b), a.min(b));
                forced.extend(g.iter().copied());
            }
        }
        facet_sets.push(groups.into_iter().map(|(_, g)| g).collect());
    }
    let mut units: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &v in &vertices {
        let r = find(&mut parent, v);
        units.entry(r).or_default().push(v);
    }
    let mut order: Vec<Vec<VertexId>> = units.into_values().collect();
    order.sort_by_key(|u| {
        let is_forced = u.iter().any(|v| forced.contains(v));
        let deg: usize = u.iter().map(|&v| reduced.degree(v)).sum();
        (!is_forced, std::cmp::Reverse(deg), u[0])
    });

    // groups of one facet must get pairwise distinct colors
    let mut conflicts: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for groups in &facet_sets {
        for (i, a) in groups.iter().enumerate() {
            for b in &groups[i + 1..] {
                for &u in a {
                    for &v in b {
                        conflicts.entry(u).or_default().insert(v);
                        conflicts.entry(v).or_default().insert(u);
                    }
                }
            }
        }
    }

    struct Search<'a> {
        order: &'a [Vec<VertexId>],
        conflicts: &'a BTreeMap<VertexId, BTreeSet<VertexId>>,
        gp: &'a Graph,
        ext: &'a ExtensionComplex,
        nclasses: usize,
        color: BTreeMap<VertexId, usize>,
    }

    impl Search<'_> {
        fn consistent(&self, unit: &[VertexId], k: usize) -> bool {
            for &u in unit {
                if let Some(cs) = self.conflicts.get(&u) {
                    if cs.iter().any(|w| self.color.get(w) == Some(&k)) {
                        return false;
                    }
                }
                if self.gp.has_vertex(u) && self.gp.neighbors(u).iter().any(|w| self.color.get(w) == Some(&k)) {
                    return false;
                }
            }
            two_class_unions_acyclic(self.gp, |v| self.color.get(&v).copied(), self.nclasses)
        }

        fn run(&mut self, idx: usize, used: usize) -> Option<Coloration> {
            if idx == self.order.len() {
                let c = Coloration::from_assignment(self.nclasses, self.color.clone()).ok()?;
                return validate_coloration(self.ext, &c).is_ok().then_some(c);
            }
            let unit = &self.order[idx];
            // colors beyond the first unused one are symmetric
            for k in 0..self.nclasses.min(used + 1) {
                for &u in unit {
                    self.color.insert(u, k);
                }
                if self.consistent(unit, k) {
                    if let Some(c) = self.run(idx + 1, used.max(k + 1)) {
                        return Some(c);
                    }
                }
                for &u in unit {
                    self.color.remove(&u);
                }
            }
            None
        }
    }

    let mut search = Search {
        order: &order,
        conflicts: &conflicts,
        gp: &gp,
        ext,
        nclasses,
        color: BTreeMap::new(),
    };
    search.run(0, 0)
}

/// Is the base complex the clique complex of its skeleton, with a skeleton
/// that is a generalized d-tree for `d = dim`?
pub fn has_d_tree_skeleton(base: &SimplicialComplex) -> Result<(), String> {
    let g = skeleton_graph(base);
    let verdict = is_generalized_d_tree(&g, base.dim());
    if !verdict.is_tree {
        let code = verdict.failure.map(|f| f.code()).unwrap_or("unknown");
        return Err(format!("skeleton fails the d-tree test ({code})"));
    }
    let flag = clique_complex(&g, &base.names()).map_err(|e| e.to_string())?;
    let mine: BTreeSet<&Vec<VertexId>> = base.facets().iter().collect();
    let theirs: BTreeSet<&Vec<VertexId>> = flag.facets().iter().collect();
    if mine != theirs {
        return Err("complex is not the clique complex of its skeleton".to_string());
    }
    Ok(())
}

/// Facet order in which each facet meets the earlier ones only inside one
/// earlier facet (its parent): Prim's algorithm on facet intersection sizes.
pub fn facet_tree_order(base: &SimplicialComplex) -> Vec<(usize, Option<usize>)> {
    let facets = base.facets();
    let n = facets.len();
    let meet = |a: usize, b: usize| facets[a].iter().filter(|v| facets[b].contains(v)).count();
    let mut out = vec![(0, None)];
    let mut done = vec![false; n];
    done[0] = true;
    while out.len() < n {
        let mut best: Option<(usize, usize, usize)> = None;
        for &(p, _) in &out {
            for (f, _) in done.iter().enumerate().filter(|(_, d)| !**d) {
                let w = meet(p, f);
                if best.is_none_or(|(bw, _, _)| w > bw) {
                    best = Some((w, p, f));
                }
            }
        }
        let (_, p, f) = best.unwrap();
        done[f] = true;
        out.push((f, Some(p)));
    }
    out
}

/// Coloration built facet by facet along a facet tree. Groups that already
/// hold a colored vertex keep its color; new groups take the lowest color not
/// yet used in the facet. The result is re-validated.
pub fn dtree_coloration(ext: &ExtensionComplex) -> Result<Coloration, ColorError> {
    has_d_tree_skeleton(ext.base()).map_err(ColorError::NotADTree)?;
    let nclasses = ext.dim() + 1;
    let mut color: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (l, _parent) in facet_tree_order(ext.base()) {
        let mut groups: Vec<Vec<VertexId>> = facet_groups(ext, l).into_iter().map(|(_, g)| g).collect();
        groups.sort_by_key(|g| g[0]);
        let mut used = BTreeSet::new();
        let mut fresh = Vec::new();
        for g in &groups {
            let existing: BTreeSet<usize> = g.iter().filter_map(|v| color.get(v).copied()).collect();
            match existing.len() {
                0 => fresh.push(g),
                1 => {
                    let k = *existing.iter().next().unwrap();
                    if !used.insert(k) {
                        return Err(ColorError::ValidationFailed(format!(
                            "color {k} is needed twice in facet {l}"
                        )));
                    }
                    for &v in g {
                        color.insert(v, k);
                    }
                }
                _ => {
                    return Err(ColorError::ValidationFailed(format!(
                        "a forced group of facet {l} already has two colors"
                    )))
                }
            }
        }
        for g in fresh {
            let k = (0..nclasses).find(|k| !used.contains(k)).ok_or_else(|| {
                ColorError::ValidationFailed(format!("facet {l} needs more than {nclasses} colors"))
            })?;
            used.insert(k);
            for &v in g {
                color.insert(v, k);
            }
        }
    }
    let c = Coloration::from_assignment(nclasses, color)?;
    validate_coloration(ext, &c).map_err(ColorError::ValidationFailed)?;
    Ok(c)
}

/// `g_i`, the sum of the variables of color `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionVectors {
    pub classes: Vec<Vec<VertexId>>,
    pub forms: Vec<IntPoly>,
}

impl ReductionVectors {
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Drop one form (for negative tests and partial systems).
    pub fn without(&self, index: usize) -> ReductionVectors {
        let mut r = self.clone();
        r.classes.remove(index);
        r.forms.remove(index);
        r
    }

    pub fn format(&self, names: &[String]) -> Vec<String> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|&v| names[v].as_str()).collect::<Vec<_>>().join(" + "))
            .collect()
    }
}

pub fn reduction_vectors(c: &Coloration, nvars: usize) -> Result<ReductionVectors, ColorError> {
    let classes = c.classes();
    if let Some(i) = classes.iter().position(|k| k.is_empty()) {
        return Err(ColorError::EmptyClass(i));
    }
    let forms = classes.iter().map(|k| IntPoly::linear_form(nvars, k)).collect();
    Ok(ReductionVectors { classes, forms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::validate_complex;
    use crate::extension::ExtensionSpec;

    fn cx(facets: &[&[&str]]) -> SimplicialComplex {
        let raw: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        validate_complex(&raw).unwrap()
    }

    fn path(n: usize) -> Graph {
        let mut g = Graph::new(0..n);
        for i in 0..n - 1 {
            g.add_edge(i, i + 1);
        }
        g
    }

    fn greduit() -> ExtensionComplex {
        let base = cx(&[&["a", "b", "c", "d"]]);
        let spec = ExtensionSpec::new(0, "a", &[("b", &["x"]), ("c", &["y"]), ("d", &["z"])]);
        ExtensionComplex::new(base, &[spec]).unwrap()
    }

    fn two_facet() -> ExtensionComplex {
        let base = cx(&[&["a", "b", "c"], &["b", "c", "d"]]);
        let specs = [
            ExtensionSpec::new(0, "a", &[("b", &["x"]), ("c", &["y"])]),
            ExtensionSpec::new(1, "d", &[("b", &["u"]), ("c", &["v"])]),
        ];
        ExtensionComplex::new(base, &specs).unwrap()
    }

    fn ids(ext: &ExtensionComplex, names: &[&str]) -> Vec<VertexId> {
        names
            .iter()
            .map(|n| ext.names().iter().position(|m| m == n).unwrap())
            .collect()
    }

    #[test]
    fn proper_and_good() {
        let c = Coloration::from_assignment(2, [(0, 0), (1, 1), (2, 0)]).unwrap();
        assert!(is_good_coloration(&path(3), &c).unwrap());

        let mut tri = path(3);
        tri.add_edge(0, 2);
        assert!(!is_proper_coloration(&tri, &c).unwrap());

        let mut sq = path(4);
        sq.add_edge(3, 0);
        let c = Coloration::from_assignment(2, [(0, 0), (1, 1), (2, 0), (3, 1)]).unwrap();
        assert!(is_proper_coloration(&sq, &c).unwrap());
        assert!(!is_good_coloration(&sq, &c).unwrap());

        let partial = Coloration::from_assignment(2, [(0, 0)]).unwrap();
        assert_eq!(is_proper_coloration(&sq, &partial), Err(ColorError::UncoloredVertex(1)));
    }

    #[test]
    fn binomial_conditions_on_fixtures() {
        let e = two_facet();
        let good = Coloration::from_classes(3, &[ids(&e, &["a", "c", "d"]), ids(&e, &["b"]), ids(&e, &["y", "v"])]).unwrap();
        assert!(is_binomial_coloration(&e, &good).ok());

        let bad = Coloration::from_classes(3, &[ids(&e, &["a", "b", "c", "d"]), vec![], ids(&e, &["y", "v"])]).unwrap();
        let check = is_binomial_coloration(&e, &bad);
        assert!(check.violations.iter().any(|v| v.facet == 0 && v.condition == 4));

        let g = greduit();
        let c = Coloration::from_classes(4, &[ids(&g, &["a", "c"]), ids(&g, &["y", "d"]), ids(&g, &["z"]), ids(&g, &["b"])]).unwrap();
        assert!(is_binomial_coloration(&g, &c).ok());
        assert!(is_good_coloration(&g_prime(&g), &c).unwrap());
    }

    #[test]
    fn constructions_match_expected_classes() {
        let e = two_facet();
        let c = dtree_coloration(&e).unwrap();
        let expected: BTreeSet<Vec<VertexId>> = [ids(&e, &["a", "c", "d"]), ids(&e, &["b"]), ids(&e, &["y", "v"])]
            .into_iter()
        .map(sorted)
        .collect();
        assert_eq!(c.partition(), expected);

        let g = greduit();
        let c = dtree_coloration(&g).unwrap();
        let r = reduction_vectors(&c, g.nvars()).unwrap();
        assert_eq!(r.format(g.names()), vec!["a + c", "b", "d + y", "z"]);
    }

    #[test]
    fn search_finds_valid_colorations() {
        for e in [greduit(), two_facet()] {
            let c = search_binomial_coloration(&e).unwrap();
            assert!(validate_coloration(&e, &c).is_ok());
        }
        let simplex = ExtensionComplex::new(cx(&[&["a", "b", "c"]]), &[]).unwrap();
        let c = search_binomial_coloration(&simplex).unwrap();
        assert_eq!(c.partition().len(), 3);
    }

    #[test]
    fn search_fails_when_forced_groups_clash() {
        // hollow triangle: three vertices pairwise in a common facet, two colors
        let base = cx(&[&["a", "b"], &["a", "c"], &["b", "c"]]);
        let e = ExtensionComplex::new(base, &[]).unwrap();
        assert!(search_binomial_coloration(&e).is_none());
    }

    #[test]
    fn dtree_rejects_non_flag_complex() {
        let hollow = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let e = ExtensionComplex::new(hollow, &[]).unwrap();
        assert!(matches!(dtree_coloration(&e), Err(ColorError::NotADTree(_))));
    }

    #[test]
    fn empty_class_is_reported() {
        let c = Coloration::from_classes(3, &[vec![0], vec![1]]).unwrap();
        assert_eq!(reduction_vectors(&c, 2), Err(ColorError::EmptyClass(2)));
    }
}
