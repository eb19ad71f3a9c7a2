#![no_main]

use libfuzzer_sys::fuzz_target;
use plutus_core::io::{graph_to_json, instance_to_json, parse_graph_json};

fuzz_target!(|data: &[u8]| {
    let Ok(input) = parse_graph_json(data) else {
        return;
    };
    assert!(input.graph.is_well_formed());
    let again = parse_graph_json(graph_to_json(&input.graph).as_bytes()).unwrap();
    assert_eq!(again.graph, input.graph);
    if let Some(geometry) = &input.geometry {
        let again = parse_graph_json(instance_to_json(geometry).as_bytes()).unwrap();
        assert_eq!(again.graph, input.graph);
    }
});
