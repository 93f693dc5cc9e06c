use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ring::RingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportFormat {
    Json,
    Csv,
    Dot,
}

fn label(spec: &RingSpec, g: &Graph, v: usize) -> String {
    spec.format_element(&spec.element_of_index(g.labels()[v]))
}

#[derive(Serialize)]
struct GraphDocument {
    provenance: String,
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

/// `{provenance, vertices, edges}` with edges as vertex positions.
pub fn write_json(spec: &RingSpec, g: &Graph, out: impl Write) -> Result<()> {
    let doc = GraphDocument {
        provenance: g.provenance().to_string(),
        vertices: (0..g.vertex_count()).map(|v| label(spec, g, v)).collect(),
        edges: g.edges().collect(),
    };
    serde_json::to_writer_pretty(out, &doc).map_err(|e| Error::Io(e.to_string()))
}

/// Edge list with one `u,v` row per adjacency, endpoints as element labels.
pub fn write_csv(spec: &RingSpec, g: &Graph, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["u", "v"]).map_err(|e| Error::Io(e.to_string()))?;
    for (u, v) in g.edges() {
        w.write_record([label(spec, g, u), label(spec, g, v)]).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Graphviz: one node per vertex labeled by its element, one edge per adjacency.
pub fn write_dot(spec: &RingSpec, g: &Graph, mut out: impl Write) -> Result<()> {
    writeln!(out, "graph \"{}\" {{", g.provenance())?;
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v} [label=\"{}\"];", label(spec, g, v).replace('"', "\\\""))?;
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};")?;
    }
    writeln!(out, "}}")?;
    Ok(())
}

pub fn export_graph(spec: &RingSpec, g: &Graph, format: ExportFormat, out: impl Write) -> Result<()> {
    match format {
        ExportFormat::Json => write_json(spec, g, out),
        ExportFormat::Csv => write_csv(spec, g, out),
        ExportFormat::Dot => write_dot(spec, g, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_gamma;
    use crate::harness::parse_ring_spec;

    fn render(text: &str, format: ExportFormat) -> String {
        let spec = parse_ring_spec(text).unwrap();
        let g = build_gamma(&spec);
        let mut buf = Vec::new();
        export_graph(&spec, &g, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn dot_for_z8() {
        let dot = render("Z8", ExportFormat::Dot);
        assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 3);
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 2);
        assert!(dot.contains("[label=\"4\"]"));
    }

    #[test]
    fn dot_for_empty_graph() {
        let dot = render("Z7", ExportFormat::Dot);
        assert_eq!(dot, "graph \"gamma\" {\n}\n");
    }

    #[test]
    fn json_and_csv() {
        let json: serde_json::Value = serde_json::from_str(&render("Z2xGF(4)", ExportFormat::Json)).unwrap();
        assert_eq!(json["vertices"].as_array().unwrap().len(), 4);
        assert_eq!(json["edges"].as_array().unwrap().len(), 3);
        let csv = render("Z8", ExportFormat::Csv);
        assert_eq!(csv, "u,v\n2,4\n4,6\n");
    }
}
