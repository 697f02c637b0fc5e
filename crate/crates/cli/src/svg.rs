//! Minimal SVG 1.1 line plots.

use std::fmt::Write as _;

use crate::table::Table;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN: f64 = 60.0;
const COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Axes {
    pub log_x: bool,
    pub log_y: bool,
}

struct Scale {
    lo: f64,
    hi: f64,
    log: bool,
}

impl Scale {
    fn fit(values: impl Iterator<Item = f64>, log: bool) -> Option<Self> {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in values {
            let v = if log { v.log10() } else { v };
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if !lo.is_finite() || !hi.is_finite() {
            return None;
        }
        if hi == lo {
            lo -= 0.5;
            hi += 0.5;
        }
        Some(Self { lo, hi, log })
    }

    fn unit(&self, v: f64) -> f64 {
        let v = if self.log { v.log10() } else { v };
        (v - self.lo) / (self.hi - self.lo)
    }

    fn label(&self, t: f64) -> String {
        let v = self.lo + t * (self.hi - self.lo);
        if self.log {
            format!("1e{v:.1}")
        } else {
            format!("{v:.3}")
        }
    }
}

fn usable(v: f64, log: bool) -> bool {
    v.is_finite() && (!log || v > 0.0)
}

/// Plots every numeric column after the first against the first column.
/// Points that are non-finite, or non-positive on a log axis, are skipped.
pub fn render(table: &Table, title: &str, axes: Axes) -> String {
    let xs: Vec<Option<f64>> = table.rows.iter().map(|r| r[0].as_real()).collect();
    let series: Vec<(usize, &str)> = table
        .columns
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(i, _)| table.rows.iter().any(|r| r[*i].as_real().is_some()))
        .map(|(i, c)| (i, c.as_str()))
        .collect();

    let points = |col: usize| -> Vec<(f64, f64)> {
        table
            .rows
            .iter()
            .zip(&xs)
            .filter_map(|(r, x)| Some(((*x)?, r[col].as_real()?)))
            .filter(|(x, y)| usable(*x, axes.log_x) && usable(*y, axes.log_y))
            .collect()
    };
    let all: Vec<(f64, f64)> = series.iter().flat_map(|(i, _)| points(*i)).collect();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">
<rect width="100%" height="100%" fill="white"/>
<text x="{:.1}" y="24" text-anchor="middle" font-family="sans-serif" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );
    let (Some(sx), Some(sy)) = (
        Scale::fit(all.iter().map(|p| p.0), axes.log_x),
        Scale::fit(all.iter().map(|p| p.1), axes.log_y),
    ) else {
        out.push_str("</svg>\n");
        return out;
    };

    let px = |x: f64| MARGIN + sx.unit(x) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - sy.unit(y) * (HEIGHT - 2.0 * MARGIN);
    let (x0, x1, y0, y1) = (MARGIN, WIDTH - MARGIN, HEIGHT - MARGIN, MARGIN);
    let _ = writeln!(
        out,
        r#"<path d="M{x0:.1},{y1:.1} L{x0:.1},{y0:.1} L{x1:.1},{y0:.1}" fill="none" stroke="black"/>"#
    );
    for k in 0..=4 {
        let t = f64::from(k) / 4.0;
        let gx = x0 + t * (x1 - x0);
        let gy = y0 - t * (y0 - y1);
        let _ = writeln!(
            out,
            r#"<text x="{gx:.1}" y="{:.1}" text-anchor="middle" font-family="sans-serif" font-size="10">{}</text>"#,
            y0 + 16.0,
            sx.label(t)
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end" font-family="sans-serif" font-size="10">{}</text>"#,
            x0 - 6.0,
            gy + 3.0,
            sy.label(t)
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" font-family="sans-serif" font-size="12">{}</text>"#,
        WIDTH / 2.0,
        HEIGHT - 16.0,
        escape(&table.columns[0])
    );

    for (k, (col, name)) in series.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let pts: Vec<String> = points(*col)
            .iter()
            .map(|(x, y)| format!("{:.2},{:.2}", px(*x), py(*y)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            pts.join(" ")
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="11" fill="{color}">{}</text>"#,
            x1 - 90.0,
            y1 + 14.0 * (k as f64 + 1.0),
            escape(name)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Cell;

    fn table() -> Table {
        let mut t = Table::new(&["wbar", "g", "g_asymptote"]);
        for (x, g, a) in [
            (0.0, 1.0, f64::INFINITY),
            (1.0, 0.3, 0.2),
            (10.0, 0.09, 0.08),
        ] {
            t.push(vec![Cell::Real(x), Cell::Real(g), Cell::Real(a)]);
        }
        t
    }

    #[test]
    fn one_polyline_per_series() {
        let s = render(&table(), "g", Axes::default());
        assert!(s.starts_with("<?xml"));
        assert_eq!(s.matches("<polyline").count(), 2);
        assert!(s.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn log_axes_drop_non_positive_points() {
        let s = render(
            &table(),
            "g",
            Axes {
                log_x: true,
                log_y: true,
            },
        );
        let first = s.lines().find(|l| l.starts_with("<polyline")).unwrap();
        assert_eq!(first.matches(',').count(), 2);
    }

    #[test]
    fn empty_table_is_valid() {
        let s = render(&Table::new(&["x", "y"]), "<empty>", Axes::default());
        assert!(s.contains("&lt;empty&gt;"));
        assert!(s.trim_end().ends_with("</svg>"));
    }
}
