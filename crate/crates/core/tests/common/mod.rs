#![allow(dead_code)]

use edgering::Graph;
use proptest::prelude::*;

/// Any simple graph on 1..=max_d vertices.
pub fn any_graph(max_d: usize) -> impl Strategy<Value = Graph> {
    (1..=max_d).prop_flat_map(|d| {
        prop::collection::vec(any::<bool>(), d * (d - 1) / 2).prop_map(move |bits| {
            let pairs = (0..d).flat_map(|u| (u + 1..d).map(move |v| (u, v)));
            Graph::new(d, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Connected graphs on `min_d..=max_d` vertices: a random tree plus extra
/// edges kept with probability about `density / 8`.
pub fn connected_graph(min_d: usize, max_d: usize, density: u8) -> impl Strategy<Value = Graph> {
    (min_d..=max_d).prop_flat_map(move |d| {
        let parents = prop::collection::vec(any::<prop::sample::Index>(), d - 1);
        let extra = prop::collection::vec(0u8..8, d * (d - 1) / 2);
        (parents, extra).prop_map(move |(parents, extra)| {
            let mut edges: Vec<(usize, usize)> =
                parents.iter().enumerate().map(|(k, p)| (p.index(k + 1), k + 1)).collect();
            let pairs = (0..d).flat_map(|u| (u + 1..d).map(move |v| (u, v)));
            for (e, roll) in pairs.zip(extra) {
                if roll < density && !edges.contains(&e) {
                    edges.push(e);
                }
            }
            Graph::new(d, edges).unwrap()
        })
    })
}

pub fn connected_nonbipartite(min_d: usize, max_d: usize, density: u8) -> impl Strategy<Value = Graph> {
    connected_graph(min_d.max(3), max_d, density).prop_filter("needs an odd cycle", |g| !g.is_bipartite())
}

/// Brute-force 2-colorability of the subgraph induced by the vertices in `s`.
pub fn brute_two_colorable(g: &Graph, s: &[usize]) -> bool {
    (0u64..1 << s.len()).any(|coloring| {
        g.edges().iter().all(|&(u, v)| {
            match (s.iter().position(|&x| x == u), s.iter().position(|&x| x == v)) {
                (Some(a), Some(b)) => (coloring >> a & 1) != (coloring >> b & 1),
                _ => true,
            }
        })
    })
}

/// Two connected nonbipartite blocks joined through 1..=3 connector
/// vertices, each adjacent to a nonempty part of both blocks. These are the
/// graphs where regular cut vertices and disconnecting fundamental sets
/// show up, so both (R1) verdicts are common.
pub fn glued_blocks() -> impl Strategy<Value = Graph> {
    let block = || connected_nonbipartite(3, 5, 4);
    (block(), block(), 1usize..=3, any::<u64>()).prop_map(|(a, b, connectors, seed)| {
        let (da, db) = (a.order(), b.order());
        let d = da + db + connectors;
        let mut edges: Vec<(usize, usize)> = a.edges().to_vec();
        edges.extend(b.edges().iter().map(|&(u, v)| (u + da, v + da)));
        let mut bits = seed;
        let mut take = |n: usize| {
            let pick = (bits % ((1 << n) - 1)) as usize + 1;
            bits = bits.rotate_left(7) ^ 0x9e37_79b9_7f4a_7c15;
            pick
        };
        for c in 0..connectors {
            let hub = da + db + c;
            let left = take(da);
            let right = take(db);
            edges.extend((0..da).filter(|v| left >> v & 1 == 1).map(|v| (v, hub)));
            edges.extend((0..db).filter(|v| right >> v & 1 == 1).map(|v| (v + da, hub)));
        }
        Graph::new(d, edges).unwrap()
    })
}
