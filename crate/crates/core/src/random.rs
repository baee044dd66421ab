//! Seeded random instances: complexes, generalized d-trees and scroll matrices.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{clique_complex, proper_edge_stars, validate_complex, Graph, SimplicialComplex};
use crate::extension::{EdgeSpec, ExtensionComplex, ExtensionSpec, ScrollMatrix};

fn vertex_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Random extensions of the facets of `base`: each facet is extended with
/// probability one half along a random proper star, with up to `max_points`
/// new points per edge.
pub fn random_extensions<R: Rng>(rng: &mut R, base: &SimplicialComplex, max_points: usize) -> Vec<ExtensionSpec> {
    let mut specs = Vec::new();
    let mut counter = 0;
    for (fi, stars) in proper_edge_stars(base).into_iter().enumerate() {
        if stars.is_empty() || !rng.gen_bool(0.5) {
            continue;
        }
        let star = stars.choose(rng).unwrap();
        let mut targets = star.targets.clone();
        targets.shuffle(rng);
        targets.truncate(rng.gen_range(1..=targets.len()));
        let edges = targets
            .iter()
            .map(|&t| {
                let points = (0..rng.gen_range(0..=max_points))
                    .map(|_| {
                        counter += 1;
                        format!("p{counter}")
                    })
                    .collect();
                EdgeSpec {
                    target: base.name(t).to_string(),
                    points,
                }
            })
            .collect();
        specs.push(ExtensionSpec {
            facet: fi,
            origin: base.name(star.origin).to_string(),
            edges,
        });
    }
    specs
}

/// Random complex on at most `max_vertices` vertices with at most
/// `max_facets` facets, each of size 2 to 4, randomly extended.
pub fn random_extension_complex<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_facets: usize,
    max_points: usize,
) -> ExtensionComplex {
    loop {
        let n = rng.gen_range(3..=max_vertices.max(3));
        let nf = rng.gen_range(1..=max_facets.max(1));
        let names = vertex_names(n);
        let mut facets: Vec<Vec<String>> = Vec::new();
        for _ in 0..nf {
            let size = rng.gen_range(2..=4.min(n));
            let mut pick: Vec<String> = names.clone();
            pick.shuffle(rng);
            pick.truncate(size);
            facets.push(pick);
        }
        let Ok(base) = validate_complex(&facets) else { continue };
        let specs = random_extensions(rng, &base, max_points);
        if let Ok(ext) = ExtensionComplex::new(base, &specs) {
            return ext;
        }
    }
}

/// Random generalized d-tree: start from `K_{d+1}` and attach new vertices to
/// random cliques of 1 to `d` vertices, stopping at `max_facets` maximal cliques.
pub fn random_generalized_d_tree<R: Rng>(rng: &mut R, d: usize, max_facets: usize) -> SimplicialComplex {
    let mut g = Graph::new(0..=d);
    for u in 0..=d {
        for v in u + 1..=d {
            g.add_edge(u, v);
        }
    }
    let target = rng.gen_range(1..=max_facets.max(1));
    let mut n = d + 1;
    while g.maximal_cliques().len() < target {
        let cliques = g.maximal_cliques();
        let host = cliques.choose(rng).unwrap();
        let mut attach = host.clone();
        attach.shuffle(rng);
        attach.truncate(rng.gen_range(1..=d.min(host.len())));
        g.add_vertex(n);
        for &u in &attach {
            g.add_edge(u, n);
        }
        n += 1;
    }
    clique_complex(&g, &vertex_names(n)).expect("graph vertices are dense")
}

/// Random extension of a random generalized d-tree.
pub fn random_d_tree_extension<R: Rng>(rng: &mut R, d: usize, max_facets: usize, max_points: usize) -> ExtensionComplex {
    let base = random_generalized_d_tree(rng, d, max_facets);
    let specs = random_extensions(rng, &base, max_points);
    ExtensionComplex::new(base, &specs).expect("random stars are proper")
}

/// Random scroll matrix with 1 to `max_blocks` blocks of 1 to `max_columns`
/// columns each, with its variable names.
pub fn random_scroll_matrix<R: Rng>(rng: &mut R, max_blocks: usize, max_columns: usize) -> (ScrollMatrix, Vec<String>) {
    let k = rng.gen_range(1..=max_blocks.max(1));
    let mut names = vec!["x0".to_string()];
    let mut runs = Vec::new();
    for j in 1..=k {
        let cols = rng.gen_range(1..=max_columns.max(1));
        let mut run = Vec::new();
        if j == 1 {
            run.push(0);
        }
        let npoints = if j == 1 { cols - 1 } else { cols };
        for m in 1..=npoints {
            run.push(names.len());
            names.push(format!("y{j}_{m}"));
        }
        run.push(names.len());
        names.push(format!("x{j}"));
        runs.push(run);
    }
    (ScrollMatrix::new(0, runs), names)
}
