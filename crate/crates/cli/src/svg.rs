//! Static SVG rendering of planar Newton polygons.

use std::fmt::Write as _;

use multiplier_core::{MonomialIdeal, NewtonPolyhedron};

const UNIT: u32 = 40;
const MARGIN: u32 = 40;

/// The polygon boundary, shaded region, lattice points and generators of a
/// two-variable ideal. Returns `None` for other dimensions.
pub fn render(ideal: &MonomialIdeal, polyhedron: &NewtonPolyhedron, names: &[String]) -> Option<String> {
    if ideal.dimension() != 2 {
        return None;
    }
    let vertices: Vec<(u32, u32)> =
        polyhedron.lattice_vertices()?.iter().map(|v| (v.coords()[0], v.coords()[1])).collect();
    let mut sorted = vertices.clone();
    sorted.sort();
    let extent = ideal.generators().iter().flat_map(|g| g.coords().iter().copied()).max().unwrap_or(0) + 2;
    let size = 2 * MARGIN + extent * UNIT;
    let px = |x: u32| MARGIN + x * UNIT;
    let py = |y: u32| size - MARGIN - y * UNIT;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    writeln!(out, r#"  <rect width="{size}" height="{size}" fill="white"/>"#).unwrap();

    let mut region = vec![(sorted[0].0, extent)];
    region.extend(sorted.iter().copied());
    let last = *sorted.last().expect("nonempty vertex list");
    region.push((extent, last.1));
    region.push((extent, extent));
    let points: Vec<String> = region.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
    writeln!(out, r##"  <polygon class="region" points="{}" fill="#cfe3f7" stroke="none"/>"##, points.join(" "))
        .unwrap();

    let axis_end = px(extent);
    writeln!(
        out,
        r#"  <g class="axes" stroke="black" stroke-width="1.5">
    <line x1="{o}" y1="{oy}" x2="{axis_end}" y2="{oy}"/>
    <line x1="{o}" y1="{oy}" x2="{o}" y2="{top}"/>
  </g>"#,
        o = px(0),
        oy = py(0),
        top = py(extent)
    )
    .unwrap();
    writeln!(
        out,
        r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="14">{}</text>"#,
        axis_end + 6,
        py(0) + 5,
        escape(&names[0])
    )
    .unwrap();
    writeln!(
        out,
        r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="14">{}</text>"#,
        px(0) - 5,
        py(extent) - 8,
        escape(&names[1])
    )
    .unwrap();

    writeln!(out, r##"  <g class="lattice" fill="#888888">"##).unwrap();
    for x in 0..=extent {
        for y in 0..=extent {
            writeln!(out, r#"    <circle cx="{}" cy="{}" r="2"/>"#, px(x), py(y)).unwrap();
        }
    }
    writeln!(out, "  </g>").unwrap();

    let path: Vec<String> = region[..region.len() - 1].iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
    writeln!(
        out,
        r##"  <polyline class="staircase" points="{}" fill="none" stroke="#1f4e8c" stroke-width="2.5"/>"##,
        path.join(" ")
    )
    .unwrap();

    for g in ideal.generators() {
        let (x, y) = (g.coords()[0], g.coords()[1]);
        let vertex = vertices.contains(&(x, y));
        writeln!(
            out,
            r##"  <circle class="generator" cx="{}" cy="{}" r="5" fill="{}" stroke="black"><title>{}</title></circle>"##,
            px(x),
            py(y),
            if vertex { "#d62728" } else { "white" },
            g
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Some(out)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
