//! TikZ export of circle configurations.

use std::fmt::Write;

use crate::config::Configuration;
use crate::scalar::Scalar;

pub const DEFAULT_WIDTH_CM: f64 = 8.0;

fn fmt4(v: f64) -> String {
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

/// Deterministic TikZ picture of `conf`.
///
/// The drawing is translated to the origin and scaled so that the bounding
/// box of all disks is `width_cm` wide. Each circle gets one `\draw` (or a
/// `\filldraw` dot when its radius is zero) followed by a label node at its
/// center, in label order.
pub fn export_tikz<T: Scalar>(conf: &Configuration<T>, width_cm: f64) -> String {
    let circles: Vec<(f64, f64, f64)> = conf
        .circles()
        .iter()
        .map(|c| (c.cx.to_f64().unwrap_or(0.0), c.cy.to_f64().unwrap_or(0.0), c.r.to_f64().unwrap_or(0.0)))
        .collect();
    let min_x = circles.iter().map(|c| c.0 - c.2).fold(f64::INFINITY, f64::min);
    let max_x = circles.iter().map(|c| c.0 + c.2).fold(f64::NEG_INFINITY, f64::max);
    let min_y = circles.iter().map(|c| c.1 - c.2).fold(f64::INFINITY, f64::min);
    let span = max_x - min_x;
    let scale = if span > 0.0 { width_cm / span } else { 1.0 };

    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}\n");
    for (i, &(x, y, r)) in circles.iter().enumerate() {
        let (px, py) = (fmt4((x - min_x) * scale), fmt4((y - min_y) * scale));
        if r > 0.0 {
            let _ = writeln!(out, "  \\draw ({px},{py}) circle ({});", fmt4(r * scale));
        } else {
            let _ = writeln!(out, "  \\filldraw ({px},{py}) circle (1pt);");
        }
        let _ = writeln!(out, "  \\node at ({px},{py}) {{${}$}};", conf.ground().label(i));
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
