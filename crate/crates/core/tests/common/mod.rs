#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scrollext::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(0..n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Graph on `n` vertices whose edge set is given by the bits of `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(0..n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

/// Does `g` have a simple cycle using at most two colors? Plain path search
/// from every start vertex.
pub fn has_two_colored_cycle(g: &Graph, color: &dyn Fn(usize) -> usize) -> bool {
    fn extend(
        g: &Graph,
        color: &dyn Fn(usize) -> usize,
        start: usize,
        path: &mut Vec<usize>,
        colors: &mut Vec<usize>,
    ) -> bool {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                return true;
            }
            if w <= start || path.contains(&w) {
                continue;
            }
            let c = color(w);
            let fresh = !colors.contains(&c);
            if fresh && colors.len() == 2 {
                continue;
            }
            if fresh {
                colors.push(c);
            }
            path.push(w);
            if extend(g, color, start, path, colors) {
                return true;
            }
            path.pop();
            if fresh {
                colors.pop();
            }
        }
        false
    }
    g.vertices().any(|s| extend(g, color, s, &mut vec![s], &mut vec![color(s)]))
}
