#![allow(dead_code)]

use qec_core::generators::{self, Family};
use qec_core::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Connected G(n, p) samples, rejecting disconnected draws.
pub fn random_connected_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n);
        let p: f64 = rng.gen_range(0.15..0.9);
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Every constructible SRG with μ ≥ 1 used by the suites.
pub fn srg_corpus() -> Vec<(String, Graph)> {
    let mut fams = vec![Family::Cycle(4), Family::Cycle(5)];
    fams.extend((2..=6).map(Family::CocktailParty));
    for p in 2..=5 {
        for q in 2..=5 {
            fams.push(Family::CompleteMultipartite(vec![q; p]));
        }
    }
    fams.push(Family::Petersen);
    fams.extend((4..=8).map(Family::Triangular));
    fams.extend((2..=6).map(Family::Rook));
    fams.extend([5, 13, 17, 29].map(Family::Paley));
    fams.push(Family::Clebsch);
    fams.push(Family::Shrikhande);
    fams.into_iter()
        .map(|f| (f.to_string(), f.generate().unwrap()))
        .collect()
}

pub fn complete(n: usize) -> Graph {
    generators::complete(n).unwrap()
}
