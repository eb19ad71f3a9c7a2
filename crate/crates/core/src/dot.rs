//! Graphviz export. Dominators are black, reluctant nodes gray and prone
//! nodes white; the backbone sits in its own cluster.

use std::fmt::Write;

use crate::graph::Graph;
use crate::pipeline::{PlutusResult, Role};

fn fill(role: Role) -> &'static str {
    match role {
        Role::Dominator => "black",
        Role::DominationReluctant => "gray",
        Role::DominationProne => "white",
    }
}

pub fn to_dot(g: &Graph, result: &PlutusResult) -> String {
    let mut out = String::from("graph plutus {\n  node [style=filled, shape=circle];\n");
    out.push_str("  subgraph cluster_backbone {\n    label=\"D\";\n");
    for &v in &result.dominating_set {
        let role = result.roles.get(v).copied().unwrap_or(Role::Dominator);
        writeln!(out, "    {v} [fillcolor={}, fontcolor=white];", fill(role)).unwrap();
    }
    out.push_str("  }\n");
    for v in g.nodes().filter(|v| !result.dominating_set.contains(v)) {
        let role = result
            .roles
            .get(v)
            .copied()
            .unwrap_or(Role::DominationProne);
        writeln!(out, "  {v} [fillcolor={}];", fill(role)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{run_plutus, PlutusConfig};

    #[test]
    fn p3_drawing() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let r = run_plutus(&g, &PlutusConfig::new(1, 1)).unwrap();
        let dot = to_dot(&g, &r);
        assert!(dot.starts_with("graph plutus {"));
        assert!(dot.contains("    1 [fillcolor=black, fontcolor=white];"));
        assert!(dot.contains("  0 [fillcolor=gray];"));
        assert!(dot.contains("  1 -- 2;"));
        assert!(!dot.contains("->"));
    }
}
