use awlab::admissible::{
    dimension_formula, dominant_cocharacters, make_family, s_adm_circ, s_adm_circ_cox, FamilyParams,
};
use awlab::alcove::BasicClass;
use awlab::reduction::{
    classify_move, default_depth, find_minimal_form, reduction_graph, replay, stable_simple_set, MoveClass,
    NodeStatus, ReductionGraph, ReductionMove,
};
use awlab::AffWeylElt;

fn check_edges(g: &ReductionGraph) {
    for e in &g.edges {
        let (from, to) = (&g.nodes[e.from], &g.nodes[e.to]);
        assert_eq!(e.kind.apply(&from.element), to.element);
        match e.kind {
            ReductionMove::SplitClosed(s) => {
                assert_eq!(classify_move(&from.element, s), MoveClass::Split);
                assert_eq!(to.length + 2, from.length);
            }
            ReductionMove::SplitOpen(s) => {
                assert_eq!(classify_move(&from.element, s), MoveClass::Split);
                assert_eq!(to.length + 1, from.length);
            }
            ReductionMove::SimpleConjEqual(s) => {
                assert_eq!(classify_move(&from.element, s), MoveClass::Equal);
                assert_eq!(to.length, from.length);
            }
            ReductionMove::OmegaConj(_) => assert_eq!(to.length, from.length),
        }
        if matches!(e.kind, ReductionMove::SimpleConjEqual(_) | ReductionMove::OmegaConj(_)) {
            assert_eq!(from.nonempty, to.nonempty);
        }
    }
}

#[test]
fn edges_respect_move_classes() {
    for n in 2..=3 {
        for lambda in dominant_cocharacters(n, -2, 2) {
            let b = BasicClass::for_cocharacter(&lambda);
            for w in s_adm_circ(&lambda).unwrap() {
                let g = reduction_graph(&w, &b, w.length() + 1).unwrap();
                check_edges(&g);
                assert_eq!(g.root_node().unwrap().element, w);
            }
        }
    }
}

#[test]
fn dimension_matches_formula_where_resolved() {
    let mut resolved = 0;
    for i in [0u8, 1] {
        for p in FamilyParams::grid(&[2, 3], &[0, 1], &[0, 1, 2], i) {
            let f = make_family(p).unwrap();
            let b = p.basic();
            let expected = dimension_formula(&f.lambda, &b).unwrap().total;
            let mut best = None;
            let mut complete = true;
            for w in s_adm_circ_cox(&f.lambda).unwrap() {
                let g = reduction_graph(&w, &b, w.length() + 1).unwrap();
                let root = g.root_node().unwrap();
                match root.status {
                    NodeStatus::Resolved => best = best.max(root.dimension),
                    NodeStatus::Unresolved => complete = false,
                    NodeStatus::Empty => {}
                }
            }
            if complete {
                assert_eq!(best, Some(expected), "{p:?}");
                resolved += 1;
            }
        }
    }
    assert!(resolved > 0);
}

#[test]
fn minimal_form_is_reached_from_every_small_element() {
    for n in 2..=4 {
        for lambda in dominant_cocharacters(n, -1, 2) {
            for w in s_adm_circ(&lambda).unwrap() {
                let m = find_minimal_form(&w, default_depth(&w) + n).unwrap().unwrap_or_else(|| panic!("{w}"));
                assert_eq!(replay(&w, &m.path), m.reached);
                assert!(m.v.support().is_subset(&stable_simple_set(&m.coset_rep)));
                assert_eq!(&AffWeylElt::finite(m.v.clone()) * &m.coset_rep, m.reached);
            }
        }
    }
}

#[test]
fn json_dump_mirrors_dot() {
    let f = make_family(FamilyParams::new(3, 0, 1, 1).unwrap()).unwrap();
    let g = reduction_graph(&f.w, &f.params.basic(), 64).unwrap();
    let json: serde_json::Value = serde_json::to_value(&g).unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), g.nodes.len());
    assert_eq!(json["edges"].as_array().unwrap().len(), g.edges.len());
    let dot = awlab::reduction::export_dot(&g);
    for node in &g.nodes {
        assert!(dot.contains(&node.element.to_string()));
        let text = json["nodes"][node.id]["element"].as_str().unwrap();
        assert_eq!(text.parse::<AffWeylElt>().unwrap(), node.element);
    }
}
