use graph_core::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use std::collections::{HashMap, HashSet};

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Exhaustive canonical key: least graph6 key over all relabelings.
fn brute_key(g: &Graph, perms: &[Vec<usize>]) -> GraphKey {
    perms.iter().map(|p| GraphKey::of(&g.permute(p))).min().unwrap()
}

fn graph_from_bits(n: usize, mut b: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if b & 1 == 1 {
                g.add_edge(i, j);
            }
            b >>= 1;
        }
    }
    g
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn hexacode() -> Graph {
    // K2[K3]: two triangles joined by a perfect matching
    Graph::from_edges(
        6,
        &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

#[test]
fn canonical_classes_match_brute_force_exhaustively_up_to_6() {
    for n in 1..=6 {
        let perms = all_perms(n);
        let m = n * (n - 1) / 2;
        let mut pairing: HashMap<Vec<u8>, GraphKey> = HashMap::new();
        let mut reverse: HashMap<GraphKey, Vec<u8>> = HashMap::new();
        for b in 0..(1u64 << m) {
            let g = graph_from_bits(n, b);
            let ours = canonical_form(&g).code;
            let theirs = brute_key(&g, &perms);
            // the two class labelings must be in bijection
            assert_eq!(pairing.entry(ours.clone()).or_insert(theirs.clone()), &theirs);
            assert_eq!(reverse.entry(theirs).or_insert(ours.clone()), &ours);
        }
        let expected = [1, 2, 4, 11, 34, 156][n - 1];
        assert_eq!(pairing.len(), expected, "n={n}");
    }
}

#[test]
fn canonical_classes_match_brute_force_sampled_at_7() {
    let perms = all_perms(7);
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let graphs: Vec<Graph> = (0..400).map(|_| random_graph(&mut rng, 7, 0.5)).collect();
    // plant isomorphic copies so both outcomes get exercised
    let mut all = graphs.clone();
    for g in graphs.iter().take(100) {
        let p = perms[rng.gen_range(0..perms.len())].clone();
        all.push(g.permute(&p));
    }
    let ours: Vec<_> = all.iter().map(|g| canonical_form(g).code).collect();
    let theirs: Vec<_> = all.iter().map(|g| brute_key(g, &perms)).collect();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            assert_eq!(ours[i] == ours[j], theirs[i] == theirs[j]);
        }
    }
}

#[test]
fn canonical_form_invariant_under_random_relabeling() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let mut tests = vec![hexacode(), graph6::decode("IheA@GUAo").unwrap()];
    for n in [9, 14, 20, 32] {
        tests.push(random_graph(&mut rng, n, 0.3));
    }
    tests.push(Graph::cycle(24).unwrap());
    for g in &tests {
        let cf = canonical_form(g);
        assert_eq!(graph6::encode_bytes(&g.permute(&cf.perm)), cf.code);
        let mut p: Vec<usize> = (0..g.n()).collect();
        for _ in 0..1000 {
            p.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.permute(&p)).code, cf.code);
        }
    }
}

#[test]
fn strongly_regular_graphs_canonise_consistently() {
    // Paley(13) and a relabelling: highly symmetric, exercises the pruning
    let mut g = Graph::empty(13).unwrap();
    let qr: HashSet<usize> = (1..13).map(|x| x * x % 13).collect();
    for a in 0..13 {
        for b in a + 1..13 {
            if qr.contains(&((b - a) % 13)) {
                g.add_edge(a, b);
            }
        }
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    let mut p: Vec<usize> = (0..13).collect();
    p.shuffle(&mut rng);
    assert!(is_isomorphic(&g, &g.permute(&p)));
    assert!(is_isomorphic(&g, &g.complement()));
}

#[test]
fn connected_graph_counts() {
    assert_eq!(generate_connected(7).unwrap().len(), 853);
    assert_eq!(generate_connected(8).unwrap().len(), 11117);
}

#[test]
fn hypergraph_classes_match_brute_force() {
    let n = 4;
    let perms = all_perms(n);
    let candidates: Vec<u32> = (0u32..16).filter(|m| m.count_ones() >= 2).collect();
    let mut sets: Vec<Vec<u32>> = vec![vec![]];
    for k in 1..=3 {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            sets.push(idx.iter().map(|&i| candidates[i]).collect());
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] < candidates.len() - k + i {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    idx.clear();
                }
            }
            if idx.is_empty() {
                break;
            }
        }
    }
    let brute = |h: &Hypergraph| {
        perms
            .iter()
            .map(|p| h.permute(p).edges().to_vec())
            .min()
            .unwrap()
    };
    let hs: Vec<Hypergraph> = sets.into_iter().map(|e| Hypergraph::new(n, e).unwrap()).collect();
    let ours: Vec<_> = hs.iter().map(|h| h.canonical_form().unwrap().code).collect();
    let theirs: Vec<_> = hs.iter().map(brute).collect();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            assert_eq!(ours[i] == ours[j], theirs[i] == theirs[j], "{:?} {:?}", hs[i], hs[j]);
        }
    }
}

#[test]
fn plain_graph_hypergraph_classes_agree() {
    for g in generate_all(5).unwrap() {
        for h in generate_all(5).unwrap() {
            let a = Hypergraph::from_graph(&g).canonical_form().unwrap().code;
            let b = Hypergraph::from_graph(&h).canonical_form().unwrap().code;
            assert_eq!(a == b, g == h);
        }
    }
}

#[test]
fn petersen_independence_by_subsets() {
    let pet = graph6::decode("IheA@GUAo").unwrap();
    let brute = (0u32..1 << 10)
        .filter(|&s| pet.is_independent(s))
        .map(|s| s.count_ones())
        .max()
        .unwrap();
    assert_eq!(brute, 4);
    assert_eq!(independence_number(&pet), 4);
}

#[test]
fn hexacode_lc_gives_wheel() {
    let h = hexacode();
    assert_eq!(independence_number(&h), 2);
    let mut wheel = Graph::cycle(5).unwrap().extend(0b11111).unwrap();
    for v in 0..6 {
        let g = h.local_complement(v).unwrap();
        assert!(is_isomorphic(&g, &wheel));
        assert_eq!(independence_number(&g), 2);
    }
    // LC at the hub just complements the rim C5 into another C5
    assert!(is_isomorphic(&wheel.local_complement(5).unwrap(), &wheel));
    wheel.lc_in_place(0);
    assert!(is_isomorphic(&wheel, &h));
}

#[test]
fn dodecacode_is_three_disjoint_4_cliques_plus_cycle() {
    let mut g = Graph::empty(12).unwrap();
    for a in 0..12 {
        for off in [3, 5, 6, 7, 9] {
            let b = (a + off) % 12;
            if a < b {
                g.add_edge(a, b);
            }
        }
    }
    let quads: Vec<u32> = maximal_cliques(&g).filter(|c| c.count_ones() == 4).collect();
    let mut cover = 0u32;
    let mut disjoint = Vec::new();
    for q in quads {
        if q & cover == 0 {
            cover |= q;
            disjoint.push(q);
        }
    }
    assert_eq!(disjoint.len(), 3);
    assert_eq!(cover, 0xfff);
}

#[test]
fn two_k2_has_two_components() {
    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(g.components().len(), 2);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn lc_is_an_involution(g in arb_graph(16), v in 0usize..16) {
        let v = v % g.n();
        prop_assert_eq!(g.local_complement(v).unwrap().local_complement(v).unwrap(), g);
    }

    #[test]
    fn lc_only_touches_the_neighbourhood(g in arb_graph(14), v in 0usize..14) {
        let v = v % g.n();
        let h = g.local_complement(v).unwrap();
        prop_assert_eq!(h.n(), g.n());
        let nv = g.row(v);
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                let inside = nv >> a & 1 == 1 && nv >> b & 1 == 1;
                prop_assert_eq!(h.has_edge(a, b) != g.has_edge(a, b), inside);
            }
        }
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(20)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn independence_plus_cover_is_n(g in arb_graph(12)) {
        let s = max_independent_set(&g);
        prop_assert!(g.is_independent(s));
        let brute = (0u32..1 << g.n()).filter(|&s| g.is_independent(s)).map(u32::count_ones).max().unwrap();
        prop_assert_eq!(s.count_ones(), brute);
        // a vertex cover is exactly the complement of an independent set
        let cover = g.vertex_mask() & !s;
        prop_assert!(g.edges().iter().all(|&(a, b)| cover >> a & 1 == 1 || cover >> b & 1 == 1));
        prop_assert_eq!(independence_number(&g) + min_vertex_cover_size(&g), g.n());
    }

    #[test]
    fn maximal_cliques_match_subset_enumeration(g in arb_graph(8)) {
        let n = g.n();
        let mut brute: Vec<u32> = (1u32..1 << n)
            .filter(|&s| g.is_clique(s))
            .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !g.is_clique(s | 1 << v)))
            .collect();
        let mut ours: Vec<u32> = maximal_cliques(&g).collect();
        brute.sort();
        ours.sort();
        prop_assert_eq!(ours, brute);
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(32)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn extensions_count(g in arb_graph(9)) {
        let ext: Vec<Graph> = extensions(&g).unwrap().collect();
        prop_assert_eq!(ext.len(), (1usize << g.n()) - 1);
        prop_assert!(ext.iter().all(|e| e.n() == g.n() + 1 && e.degree(g.n()) > 0));
    }
}
