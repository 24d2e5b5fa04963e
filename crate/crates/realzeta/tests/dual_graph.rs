use realzeta::dual_graph::{build_graph, DualGraph, Vertex};
use realzeta::parse::parse_polynomial;
use realzeta::resolution::{resolve, Germ};
use realzeta::zeta::ratio;

fn graph(text: &str) -> DualGraph {
    build_graph(&resolve(&Germ::from_poly(&parse_polynomial(text).unwrap()).unwrap()).unwrap())
}

fn v(id: usize, nu: u64, n: u64, strict: bool) -> Vertex {
    Vertex { id, nu, n, strict, ratio: ratio(nu, n) }
}

#[test]
fn cusp_graph() {
    let g = graph("y^2 - x^3");
    assert_eq!(g.vertices.len(), 4);
    assert_eq!(g.edges.len(), 3);
    assert!(g.is_tree());
    let rupture = g.vertices.iter().find(|v| v.n == 6).unwrap();
    assert_eq!(g.minimal, [rupture.id].into_iter().collect());
    assert!(g.monotonicity_check().is_ok());
    assert!(g.local_ordering_check().is_ok());
}

#[test]
fn properties_over_several_germs() {
    for text in ["y^3 - x^5", "(y^2 - x^3)^2 - x^5*y", "x*y*(x - y)*(x + y)", "y^2 - x^4 + x^5", "x^3 - x*y^4"] {
        let g = graph(text);
        assert!(g.is_tree(), "{}", text);
        assert!(g.minimal_connected(), "{}", text);
        assert!(g.monotonicity_check().is_ok(), "{}", text);
        assert!(g.local_ordering_check().is_ok(), "{}", text);
    }
}

#[test]
fn dot_labels_and_shapes() {
    let g = graph("y^2 - x^3");
    let dot = g.to_dot();
    assert!(dot.starts_with("graph dual {"));
    let rupture = g.vertices.iter().find(|v| v.n == 6).unwrap().id;
    assert!(dot.contains(&format!("E{} [label=\"E{} (5,6)\", shape=doublecircle];", rupture, rupture)));
    let strict = g.vertices.iter().find(|v| v.strict).unwrap().id;
    assert!(dot.contains(&format!("E{} [label=\"E{} (1,1)\", shape=box];", strict, strict)));
    assert_eq!(dot, g.to_dot());
}

// a path whose ratios dip after leaving the minimum violates both orderings
#[test]
fn synthetic_negative_control() {
    let g = DualGraph::from_parts(vec![v(1, 1, 2, false), v(2, 2, 3, false), v(3, 3, 5, false), v(4, 1, 1, true)], &[(1, 2), (2, 3), (3, 4)]);
    assert_eq!(g.minimal, [1].into_iter().collect());
    assert_eq!(g.monotonicity_check(), Err(vec![1, 2, 3]));
    // E2 at 2/3 sits between 1/2 and 3/5
    assert_eq!(g.local_ordering_check(), Err(2));
    assert!(g.is_tree());
    let cyc = DualGraph::from_parts(vec![v(1, 1, 2, false), v(2, 2, 3, false), v(3, 3, 4, false)], &[(1, 2), (2, 3), (1, 3)]);
    assert!(!cyc.is_tree());
    let split = DualGraph::from_parts(vec![v(1, 1, 2, false), v(2, 2, 3, false), v(3, 1, 2, false)], &[(1, 2), (2, 3)]);
    assert!(!split.minimal_connected());
}
