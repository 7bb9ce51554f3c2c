//! Static SVG barcode plots: one `<rect>` per interval, one group per kind.

use std::fmt::Write;

use crate::io::BarcodeJson;

const WIDTH: f64 = 640.0;
const LEFT: f64 = 140.0;
const RIGHT: f64 = 24.0;
const BAR: f64 = 8.0;
const GAP: f64 = 4.0;
const HEADER: f64 = 28.0;

fn colour(kind: &str) -> &'static str {
    match kind {
        "SR" => "#1f77b4",
        "EDGE" => "#2ca02c",
        "PH" => "#d62728",
        _ => "#7f7f7f",
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn label(i: &crate::io::IntervalJson) -> String {
    match (&i.prime, i.dim) {
        (Some(p), _) if p.is_empty() => "⟨0⟩".into(),
        (Some(p), _) => format!("⟨{}⟩", p.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join(",")),
        (None, Some(d)) => format!("H{d}"),
        (None, None) => String::new(),
    }
}

/// Renders the barcodes on a shared parameter axis. Infinite intervals run to
/// the right edge and are marked with `data-infinite="true"`.
pub fn render_svg(barcodes: &[BarcodeJson]) -> String {
    let finite = barcodes
        .iter()
        .flat_map(|b| &b.intervals)
        .flat_map(|i| std::iter::once(i.birth).chain(i.death.finite()))
        .fold(0.0f64, f64::max);
    let t_max = if finite > 0.0 { finite * 1.1 } else { 1.0 };
    let plot = WIDTH - LEFT - RIGHT;
    let x = |t: f64| LEFT + plot * (t / t_max);
    let rows: usize = barcodes.iter().map(|b| b.intervals.len()).sum();
    let height = HEADER * (barcodes.len() as f64 + 1.0) + (BAR + GAP) * rows as f64;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height:.1}" viewBox="0 0 {WIDTH} {height:.1}" font-family="monospace" font-size="10">"#
    );
    let axis_y = height - HEADER / 2.0;
    let _ = writeln!(s, r##"  <line x1="{LEFT}" y1="{axis_y:.1}" x2="{:.1}" y2="{axis_y:.1}" stroke="#000"/>"##, WIDTH - RIGHT);
    let _ = writeln!(s, r#"  <text x="{LEFT}" y="{:.1}">0</text>"#, axis_y + 12.0);
    let _ = writeln!(s, r#"  <text x="{:.1}" y="{:.1}" text-anchor="end">{:.4}</text>"#, WIDTH - RIGHT, axis_y + 12.0, t_max);
    let mut y = 0.0;
    for b in barcodes {
        let kind = escape(&b.kind);
        let _ = writeln!(s, r#"  <g id="{kind}" class="barcode" data-kind="{kind}">"#);
        let _ = writeln!(s, r#"    <text x="4" y="{:.1}" font-weight="bold">{kind}</text>"#, y + HEADER * 0.7);
        y += HEADER;
        for i in &b.intervals {
            let (x0, x1) = (x(i.birth), i.death.finite().map_or(WIDTH - RIGHT, x));
            let w = (x1 - x0).max(1.0);
            let _ = writeln!(
                s,
                r#"    <rect class="bar" x="{x0:.2}" y="{y:.1}" width="{w:.2}" height="{BAR}" fill="{}" data-birth="{}" data-death="{}" data-infinite="{}"/>"#,
                colour(&b.kind),
                i.birth,
                i.death.finite().map_or("inf".to_string(), |d| d.to_string()),
                i.death.finite().is_none()
            );
            let _ = writeln!(s, r#"    <text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#, LEFT - 4.0, y + BAR, escape(&label(i)));
            y += BAR + GAP;
        }
        let _ = writeln!(s, "  </g>");
    }
    s.push_str("</svg>\n");
    s
}
