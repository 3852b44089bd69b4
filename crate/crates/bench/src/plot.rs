//! Hand-written SVG line charts with a logarithmic y axis.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::bench::{Algo, BenchRecord};
use crate::error::{BenchError, Result};
use crate::fit::medians_by_size;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Metric {
    /// Median wall time in milliseconds.
    Time,
    /// Median modelled footprint in digits.
    Memory,
}

impl Metric {
    fn value(self, r: &BenchRecord) -> f64 {
        match self {
            Metric::Time => r.wall_ns as f64 / 1e6,
            Metric::Memory => r.paper_digits as f64,
        }
    }

    fn title(self) -> &'static str {
        match self {
            Metric::Time => "time consumption",
            Metric::Memory => "memory footprint",
        }
    }

    fn unit(self) -> &'static str {
        match self {
            Metric::Time => "time (ms)",
            Metric::Memory => "footprint (digits)",
        }
    }
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

fn colour(algo: Algo) -> &'static str {
    match algo {
        Algo::Packed => "#d62728",
        Algo::Schoolbook => "#1f77b4",
        Algo::Strassen => "#2ca02c",
    }
}

/// One polyline per algorithm present in `records`, medians over trials.
/// Packed runs are drawn for the first radix that appears.
pub fn render_plot(records: &[BenchRecord], metric: Metric) -> Result<String> {
    if records.is_empty() {
        return Err(BenchError::NoRecords);
    }
    let packed_radix = records.iter().find(|r| r.algo == Algo::Packed).map(|r| r.radix);
    let mut series = Vec::new();
    for algo in Algo::ALL {
        let rs: Vec<&BenchRecord> =
            records.iter().filter(|r| r.algo == algo && (algo != Algo::Packed || Some(r.radix) == packed_radix)).collect();
        if !rs.is_empty() {
            series.push((algo, medians_by_size(&rs, |r| metric.value(r).max(f64::MIN_POSITIVE))));
        }
    }

    let all = series.iter().flat_map(|(_, pts)| pts.iter());
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(n, v) in all {
        let (x, y) = ((n as f64).log10(), v.log10());
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let (ylo, yhi) = (ymin.floor(), ymax.ceil().max(ymin.floor() + 1.0));
    if xmax - xmin < 1e-9 {
        xmin -= 0.5;
        xmax += 0.5;
    }
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |n: f64| LEFT + (n.log10() - xmin) / (xmax - xmin) * plot_w;
    let py = |v: f64| TOP + (yhi - v.log10()) / (yhi - ylo) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(svg, r#"<text x="{}" y="24" text-anchor="middle" font-size="15">{} against size</text>"#, WIDTH / 2.0, metric.title());
    let _ = writeln!(
        svg,
        r#"<g class="axes" stroke="black" fill="none"><line x1="{LEFT}" y1="{0}" x2="{1}" y2="{0}"/><line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{0}"/></g>"#,
        TOP + plot_h,
        LEFT + plot_w
    );
    let mut decade = ylo as i32;
    while decade as f64 <= yhi {
        let y = py(10f64.powi(decade));
        let _ = writeln!(
            svg,
            r##"<line x1="{LEFT}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="#ddd"/><text x="{:.1}" y="{:.1}" text-anchor="end">1e{decade}</text>"##,
            LEFT + plot_w,
            LEFT - 6.0,
            y + 4.0
        );
        decade += 1;
    }
    let mut sizes: Vec<usize> = series.iter().flat_map(|(_, pts)| pts.iter().map(|&(n, _)| n)).collect();
    sizes.sort_unstable();
    sizes.dedup();
    for n in sizes {
        let x = px(n as f64);
        let _ = writeln!(svg, r#"<text x="{x:.1}" y="{:.1}" text-anchor="middle">{n}</text>"#, TOP + plot_h + 18.0);
    }
    let _ = writeln!(svg, r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">matrix size n</text>"#, LEFT + plot_w / 2.0, HEIGHT - 16.0);
    let _ = writeln!(
        svg,
        r#"<text transform="translate(18 {:.1}) rotate(-90)" text-anchor="middle">{} (log scale)</text>"#,
        TOP + plot_h / 2.0,
        metric.unit()
    );

    for (i, (algo, pts)) in series.iter().enumerate() {
        let c = colour(*algo);
        let coords: Vec<String> = pts.iter().map(|&(n, v)| format!("{:.1},{:.1}", px(n as f64), py(v))).collect();
        let _ = writeln!(svg, r#"<g class="series" data-algo="{algo}" stroke="{c}" fill="{c}">"#);
        let _ = writeln!(svg, r#"<polyline fill="none" stroke-width="2" points="{}"/>"#, coords.join(" "));
        for &(n, v) in pts {
            let _ = writeln!(svg, r#"<circle cx="{:.1}" cy="{:.1}" r="3"/>"#, px(n as f64), py(v));
        }
        let ly = TOP + 10.0 + 20.0 * i as f64;
        let lx = LEFT + plot_w + 16.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke-width="2"/><text x="{:.1}" y="{:.1}" stroke="none" fill="black">{algo}</text>"#,
            lx + 20.0,
            lx + 26.0,
            ly + 4.0
        );
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn emit_plot(records: &[BenchRecord], metric: Metric, path: &Path) -> Result<()> {
    fs::write(path, render_plot(records, metric)?)?;
    Ok(())
}
