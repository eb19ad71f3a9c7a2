#![no_main]

use libfuzzer_sys::fuzz_target;
use plutus_core::io::parse_graph_json;
use plutus_core::verify::is_m_connected_k_dominating;
use plutus_core::{run_plutus, PlutusConfig};

fuzz_target!(|data: &[u8]| {
    let Some((&params, doc)) = data.split_first() else {
        return;
    };
    let Ok(input) = parse_graph_json(doc) else {
        return;
    };
    let g = input.graph;
    if g.node_count() > 40 {
        return;
    }
    let k = (params & 0x3) as usize + 1;
    let m = (params >> 2) % 3 + 1;
    if let Ok(result) = run_plutus(&g, &PlutusConfig::new(k, m)) {
        let d = &result.dominating_set;
        let report = is_m_connected_k_dominating(&g, d, if g.min_degree() >= k { k } else { 1 }, m);
        assert!(report.overall, "{report:?}");
    }
});
