//! dim R^(d) = Σ_{e ≤ d} dim R_0^(e) for each flavor, plus the series tables.

use nalg::constants::verify_hilbert_product;
use nalg::series::{series, SeriesName};
use nalg::Flavor;

fn main() {
    for flavor in Flavor::ALL {
        let report = verify_hilbert_product(flavor, 2, 5);
        let bad = report.rows.iter().filter(|r| !r.pass()).count();
        println!("{flavor}: {} multidegrees checked, {bad} mismatches", report.rows.len());
    }
    for name in [
        SeriesName::Catalan,
        SeriesName::Gamma,
        SeriesName::Generators,
        SeriesName::MagmaHilb { vars: 2 },
        SeriesName::CommHilb { vars: 1 },
        SeriesName::AssocConstHilb { vars: 2 },
    ] {
        let t = series(name, 9);
        let coeffs: Vec<String> = t.coefficients.iter().map(ToString::to_string).collect();
        println!("{name}: {} (cross-check {})", coeffs.join(" "), t.consistent);
    }
}
