//! Browser bindings: interval reports, Bruhat graph drawings and the
//! dihedral table. The plain functions return `Result<String, String>` so
//! they can be tested natively; the `#[wasm_bindgen]` wrappers only convert
//! errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use bruhat::report::{DihedralTable, IntervalReport};
use bruhat::{BruhatGraph, CoxeterType, Element, Group, RContext};
use wasm_bindgen::prelude::*;

/// Drawings and reports refuse longer intervals to keep the page responsive.
pub const MAX_LENGTH: u32 = 10;

fn resolve(group: &str, u: &str, w: &str) -> Result<(Group, Element, Element), String> {
    let ty: CoxeterType = group.parse().map_err(|e: bruhat::Error| e.to_string())?;
    let g = Group::new(ty).map_err(|e| e.to_string())?;
    let u = g.parse_element(u).map_err(|e| e.to_string())?;
    let w = g.parse_element(w).map_err(|e| e.to_string())?;
    let l = g.interval(u, w).map_err(|e| e.to_string())?.length();
    if l > MAX_LENGTH {
        return Err(format!("interval of length {l} is too long to show here (limit {MAX_LENGTH})"));
    }
    Ok((g, u, w))
}

pub fn interval_json(group: &str, u: &str, w: &str) -> Result<String, String> {
    let (g, u, w) = resolve(group, u, w)?;
    let mut ctx = RContext::new(&g);
    let report = IntervalReport::build(&mut ctx, u, w).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Hasse-style drawing: ranks by length from the bottom, short edges solid,
/// long edges dashed.
pub fn graph_svg(group: &str, u: &str, w: &str) -> Result<String, String> {
    let (g, u, w) = resolve(group, u, w)?;
    let graph = BruhatGraph::build(&g, g.interval(u, w).map_err(|e| e.to_string())?);
    let mut ranks: BTreeMap<u32, Vec<Element>> = BTreeMap::new();
    for &v in graph.vertices() {
        ranks.entry(g.length(v)).or_default().push(v);
    }
    let widest = ranks.values().map(Vec::len).max().unwrap_or(1);
    let (dx, dy, pad) = (90.0, 80.0, 40.0);
    let width = widest as f64 * dx + 2.0 * pad;
    let height = (ranks.len().max(1) - 1) as f64 * dy + 2.0 * pad;
    let bottom = g.length(u);
    let mut pos: BTreeMap<usize, (f64, f64)> = BTreeMap::new();
    for (&l, row) in &ranks {
        let offset = (width - row.len() as f64 * dx) / 2.0 + dx / 2.0;
        for (i, v) in row.iter().enumerate() {
            pos.insert(v.id(), (offset + i as f64 * dx, height - pad - (l - bottom) as f64 * dy));
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    for e in graph.edges() {
        let (x1, y1) = pos[&e.source.id()];
        let (x2, y2) = pos[&e.target.id()];
        let style = if e.is_short() { "" } else { r#" stroke-dasharray="5,4""# };
        let _ = writeln!(svg, r##"  <line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="#555"{style}/>"##);
    }
    for &v in graph.vertices() {
        let (x, y) = pos[&v.id()];
        let label = escape(&g.label(v));
        let _ = writeln!(
            svg,
            r##"  <g><rect x="{:.1}" y="{:.1}" width="70" height="22" rx="4" fill="#fff" stroke="#222"/><text x="{x:.1}" y="{:.1}" text-anchor="middle" font-family="monospace" font-size="12">{label}</text></g>"##,
            x - 35.0,
            y - 11.0,
            y + 4.0
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn dihedral_json(max_n: usize) -> Result<String, String> {
    if max_n > 60 {
        return Err("n is limited to 60".into());
    }
    serde_json::to_string(&DihedralTable::new(max_n)).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn interval_report(group: &str, u: &str, w: &str) -> Result<String, JsError> {
    interval_json(group, u, w).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bruhat_svg(group: &str, u: &str, w: &str) -> Result<String, JsError> {
    graph_svg(group, u, w).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn dihedral_table(max_n: usize) -> Result<String, JsError> {
    dihedral_json(max_n).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_is_json() {
        let v: serde_json::Value = serde_json::from_str(&interval_json("A3", "e", "3412").unwrap()).unwrap();
        assert_eq!(v["vertices"], 14);
        assert!(interval_json("A3", "3412", "1243").unwrap_err().contains("not below"));
    }

    #[test]
    fn svg_has_every_vertex_and_edge() {
        let svg = graph_svg("I2:5", "e", "s1 s2 s1 s2 s1").unwrap();
        assert_eq!(svg.matches("<rect").count(), 10);
        assert_eq!(svg.matches("<line").count(), 25);
        assert_eq!(svg.matches("stroke-dasharray").count(), 9);
        let point = graph_svg("A2", "e", "e").unwrap();
        assert_eq!(point.matches("<rect").count(), 1);
        assert!(graph_svg("A5", "e", "654321").is_err());
    }

    #[test]
    fn dihedral_rows() {
        let v: serde_json::Value = serde_json::from_str(&dihedral_json(8).unwrap()).unwrap();
        assert_eq!(v["rows"][8]["total"], 398);
        assert!(dihedral_json(61).is_err());
    }
}
