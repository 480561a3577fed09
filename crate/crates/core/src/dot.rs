//! Graphviz export of a labeled spider.

use std::fmt::Write;

use crate::certificate::LabelingCertificate;
use crate::spider::{induced_colors, SpiderError, SpiderGraph};

/// DOT text for `cert`: edges carry their labels, vertices their induced
/// colors. The core is `u` and leg vertices are `L{leg}V{index}`.
pub fn to_dot(cert: &LabelingCertificate) -> Result<String, SpiderError> {
    let g = SpiderGraph::new(cert.signature.clone());
    let colors = induced_colors(&g, &cert.labeling)?;
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", cert.signature).unwrap();
    for v in g.vertices() {
        writeln!(out, "  {v} [label=\"{v}\\n{}\"];", colors.color(&g, v)).unwrap();
    }
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        let label = cert.labeling.get(e).unwrap_or_default();
        writeln!(out, "  {a} -- {b} [label=\"{label}\"];").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{appendix_labeling, construct_eol, construct_leg1};

    #[test]
    fn counts_nodes_and_edges() {
        let text = to_dot(&construct_eol(1, 0, 2).unwrap()).unwrap();
        assert_eq!(text.matches(" [label=").count(), 8 + 7);
        assert_eq!(text.matches(" -- ").count(), 7);
        assert!(text.contains("  u [label=\"u\\n6\"];"));
        let text = to_dot(&appendix_labeling(6, 1).unwrap()).unwrap();
        assert_eq!(text.matches(" -- ").count(), 15);
    }

    #[test]
    fn star_center_has_degree_three() {
        let sig = "1,1,1".parse().unwrap();
        let text = to_dot(&construct_leg1(&sig).unwrap()).unwrap();
        assert_eq!(text.matches("-- u ").count(), 3);
    }
}
