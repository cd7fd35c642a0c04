#![allow(dead_code)]

use std::collections::BTreeSet;

use listcolor::{Color, ColorList, Graph, Instance};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    Graph::from_edges(
        n,
        pairs(n)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e),
    )
    .unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    Graph::from_edges(n, pairs(n).into_iter().filter(|_| rng.gen_bool(density))).unwrap()
}

/// Each color of `[1, kappa]` lands in each list independently with
/// probability `keep`.
pub fn random_lists(rng: &mut impl Rng, n: usize, kappa: Color, keep: f64) -> Vec<ColorList> {
    (0..n)
        .map(|_| (1..=kappa).filter(|_| rng.gen_bool(keep)).collect())
        .collect()
}

pub fn random_instance(rng: &mut impl Rng, n: usize, density: f64, kappa: Color) -> Instance {
    let g = random_graph(rng, n, density);
    let keep = rng.gen_range(0.3..0.9);
    Instance::new(g, kappa, random_lists(rng, n, kappa, keep)).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, pairs(n)).unwrap()
}

pub fn disjoint_triangles(k: usize) -> Graph {
    Graph::from_edges(
        3 * k,
        (0..k).flat_map(|t| [(3 * t, 3 * t + 1), (3 * t + 1, 3 * t + 2), (3 * t, 3 * t + 2)]),
    )
    .unwrap()
}

pub fn perfect_matching(k: usize) -> Graph {
    Graph::from_edges(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1))).unwrap()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn edge_mask(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let index = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        // position of (a, b) in `pairs(n)`
        a * (2 * n - a - 1) / 2 + (b - a - 1)
    };
    g.edges().fold(0, |m, (u, v)| m | 1 << index(perm[u], perm[v]))
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, as the class's smallest edge mask.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let m = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1 << m) {
        let g = graph_from_mask(n, mask);
        let canon = perms.iter().map(|p| edge_mask(&g, p)).min().unwrap();
        seen.insert(canon);
    }
    seen.into_iter().map(|mask| graph_from_mask(n, mask)).collect()
}

/// Applies a vertex permutation and a color permutation (`colors[c - 1]` is
/// the new name of color `c`) to an instance.
pub fn relabel(inst: &Instance, vertices: &[usize], colors: &[Color]) -> Instance {
    let n = inst.order();
    let mut lists = vec![ColorList::default(); n];
    for v in 0..n {
        lists[vertices[v]] = inst.list(v).iter().map(|c| colors[c as usize - 1]).collect();
    }
    Instance::new(inst.graph().permuted(vertices), inst.kappa(), lists).unwrap()
}

pub fn shuffled(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
