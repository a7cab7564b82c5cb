use edge_invariants::complex::SimplicialComplex;
use edge_invariants::independence::{maximal_independent_sets, GraphStats};
use edge_invariants::invariants::h_polynomial;
use edge_invariants::region::{enumerate_cstarstar, in_cc, in_cstar, Tuple2};
use edge_invariants::witness::checked_witness;
use edge_invariants::{
    betti_table_hochster, betti_table_koszul, graph_betti_table, invariant_tuple, parse_graph6,
    to_graph6, FieldSpec, Graph, SquarefreeIdeal, VertexSet,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|b| (0..b).map(move |a| (a, b)))
                .zip(bits)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn brute_maximal_independent(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let indep: Vec<VertexSet> = (0..1u64 << n)
        .map(VertexSet)
        .filter(|&s| g.is_independent(s))
        .collect();
    indep
        .iter()
        .copied()
        .filter(|&s| (0..n).all(|v| s.contains(v) || !g.is_independent(s.with(v))))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_roundtrip(g in graph(64)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn maximal_independent_sets_match_brute_force(g in graph(10)) {
        let mut fast: Vec<VertexSet> = maximal_independent_sets(&g).collect();
        fast.sort();
        let slow = brute_maximal_independent(&g);
        prop_assert_eq!(&fast, &slow);
        let stats = GraphStats::of(&g);
        prop_assert_eq!(stats.d, slow.iter().map(|s| s.len()).max().unwrap());
        prop_assert_eq!(stats.p, slow.iter().map(|s| s.len()).min().unwrap());
    }

    #[test]
    fn invariant_relations_hold(g in graph(9)) {
        let t = invariant_tuple(&g, FieldSpec::Rationals).unwrap();
        prop_assert!(t.check().is_ok());
        prop_assert!(t.depth >= 1);
    }

    #[test]
    fn multiplicity_counts_maximum_independent_sets(g in graph(9)) {
        let h = h_polynomial(&g).unwrap();
        let d = GraphStats::of(&g).d;
        let top = maximal_independent_sets(&g).filter(|s| s.len() == d).count() as i64;
        prop_assert_eq!(h.eval(1), top);
    }

    #[test]
    fn cached_hochster_matches_generic(g in graph(9), gf2 in any::<bool>()) {
        let field = if gf2 { FieldSpec::GF2 } else { FieldSpec::Rationals };
        let cached = graph_betti_table(&g, field).unwrap();
        let generic = betti_table_hochster(&SimplicialComplex::independence_complex(&g), field).unwrap();
        prop_assert_eq!(cached, generic);
    }

    #[test]
    fn koszul_matches_hochster(n in 1usize..=6, gens in proptest::collection::vec(1u64..64, 1..6)) {
        let mask = (1u64 << n) - 1;
        let gens: Vec<VertexSet> = gens.into_iter().map(|b| VertexSet(b & mask)).filter(|s| !s.is_empty()).collect();
        prop_assume!(!gens.is_empty());
        let ideal = SquarefreeIdeal::new(n, gens).unwrap();
        let koszul = betti_table_koszul(&ideal, FieldSpec::Rationals).unwrap();
        let hochster = betti_table_hochster(&SimplicialComplex::stanley_reisner(&ideal), FieldSpec::Rationals).unwrap();
        prop_assert_eq!(koszul, hochster);
    }

    #[test]
    fn deletion_and_suspension_sizes(g in graph(12), v in 0usize..12) {
        prop_assume!(v < g.n());
        let (minus, map) = g.delete_vertices(VertexSet::singleton(v));
        prop_assert_eq!(minus.n(), g.n() - 1);
        prop_assert_eq!(map.len(), g.n() - 1);
        let twin = g.duplicate_vertex(v).unwrap();
        prop_assert_eq!(twin.neighbors(g.n()), g.neighbors(v));
        let cone = g.s_suspension(VertexSet::EMPTY).unwrap();
        prop_assert_eq!(cone.degree(g.n()), g.n());
    }

    #[test]
    fn single_colour_region_is_the_flat_region(n in 3usize..40, d in 1usize..40, p in 1usize..40) {
        prop_assert_eq!(in_cc(n, 1, Tuple2::new(d, p)), in_cstar(n, Tuple2::new(d, p)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn witnesses_beyond_the_acceptance_range(n in 11usize..=13, pick in any::<prop::sample::Index>()) {
        let tuples = enumerate_cstarstar(n).unwrap();
        let t = tuples[pick.index(tuples.len())];
        prop_assert!(checked_witness(n, t.d, t.p, t.r, FieldSpec::GF2).is_ok(), "{}", t);
    }
}

/// Straightforward graph6 writer used as an oracle for the library encoder.
fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push((v + 63) as char);
    }
    out
}

#[test]
fn graph6_matches_reference_on_all_five_vertex_graphs() {
    for mask in 0..1u64 << 10 {
        let g = Graph::from_edge_mask(5, mask);
        let s = to_graph6(&g);
        assert_eq!(s, reference_graph6(&g));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
