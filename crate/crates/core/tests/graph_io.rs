use edgepowers::graph::TEMPLATE_NAMES;
use edgepowers::{Error, Graph};
use proptest::prelude::*;

#[test]
fn every_template_round_trips() {
    for name in TEMPLATE_NAMES {
        let g = Graph::parse(&format!("template:{name}")).unwrap();
        assert_eq!(Graph::parse(&g.to_json()).unwrap(), g, "{name}");
    }
}

#[test]
fn fixture_syntax_resolves_to_the_fixture_graph() {
    let via_fixture = Graph::parse("fixture:c5star").unwrap();
    assert_eq!(via_fixture, Graph::parse("template:c5star").unwrap());
    assert!(matches!(Graph::parse("fixture:missing"), Err(Error::UnknownFixture(_))));
}

#[test]
fn malformed_inputs_are_rejected() {
    for bad in [
        "{\"n\": 3, \"edges\": [[1, 2]]}",
        "{\"n\": 2, \"edges\": [[1, 1]]}",
        "{\"n\": 2, \"edges\": [[1, 3]]}",
        "{\"n\": 2, \"edges\": [[1, 2]], \"extra\": 1}",
        "cycle:2",
        "path:1",
        "template:nope",
        "custom:3:1-2",
        "wheel:5",
    ] {
        assert!(Graph::parse(bad).is_err(), "{bad}");
    }
}

proptest! {
    #[test]
    fn json_round_trip(n in 2usize..10, bits in prop::collection::vec(any::<bool>(), 45)) {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                if bits[k] {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        for v in 1..=n {
            if !edges.iter().any(|&(a, b)| a == v || b == v) {
                edges.push(if v < n { (v, v + 1) } else { (v - 1, v) });
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let back = Graph::from_json(&g.to_json()).unwrap();
        prop_assert_eq!(&back, &g);
        let custom = format!(
            "custom:{n}:{}",
            g.edges_one_based().iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",")
        );
        prop_assert_eq!(Graph::parse(&custom).unwrap(), g);
    }
}
