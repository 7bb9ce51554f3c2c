//! Writes all three barcodes of a point cloud as JSON and SVG.

use persistent_ideals::complex::{vr_filtration, DistanceMatrix};
use persistent_ideals::io::{to_pretty_json, BarcodeJson};
use persistent_ideals::linalg::FieldKind;
use persistent_ideals::persistence::{ph_barcode, prime_barcode, IdealKind};
use persistent_ideals::svg::render_svg;

fn main() -> persistent_ideals::Result<()> {
    let points: Vec<Vec<f64>> = (0..6).map(|i| {
        let a = std::f64::consts::TAU * f64::from(i) / 6.0;
        vec![a.cos(), a.sin()]
    }).collect();
    let f = vr_filtration(&DistanceMatrix::euclidean(&points)?, 2)?;
    let barcodes = vec![
        BarcodeJson::from_primes(&prime_barcode(&f, IdealKind::Sr)),
        BarcodeJson::from_primes(&prime_barcode(&f, IdealKind::Edge)),
        BarcodeJson::from_ph(&ph_barcode(&f, FieldKind::F2, 1)?),
    ];
    let dir = std::env::temp_dir().join("persistent-ideals-hexagon");
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join("barcodes.json"), to_pretty_json(&barcodes)?)?;
    std::fs::write(dir.join("barcodes.svg"), render_svg(&barcodes))?;
    for b in &barcodes {
        println!("{:<4} {} intervals", b.kind, b.intervals.len());
    }
    println!("wrote {}", dir.display());
    Ok(())
}
