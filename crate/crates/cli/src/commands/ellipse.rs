use serde::Serialize;
use xwave::squeezing::{normalized_squeezing, optimal_velocity, SqueezedAxis};

use super::{table_format, Rendered};
use crate::args::At;
use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};
use crate::output::{render_json, render_table};

const POINTS: usize = 360;

#[derive(Debug, Clone, Serialize)]
struct Summary {
    j: u32,
    m: i32,
    x: f64,
    xi_n: f64,
    squeezed_axis: &'static str,
    x_semi_axis: f64,
    y_semi_axis: f64,
}

#[derive(Debug, Clone, Serialize)]
struct Point {
    angle_deg: f64,
    quad_x: f64,
    quad_y: f64,
}

/// CSV row: the summary repeated next to each boundary point.
#[derive(Serialize)]
struct Row {
    j: u32,
    m: i32,
    x: f64,
    xi_n: f64,
    squeezed_axis: &'static str,
    x_semi_axis: f64,
    y_semi_axis: f64,
    angle_deg: f64,
    quad_x: f64,
    quad_y: f64,
}

#[derive(Serialize)]
struct Report {
    #[serde(flatten)]
    summary: Summary,
    points: Vec<Point>,
}

pub fn run(j: u32, m: i32, at: At, cfg: &RunConfig) -> CliResult<Rendered> {
    let x = match at {
        At::Opt => optimal_velocity(j, m).x_opt,
        At::X(x) if x.is_finite() && x >= 0.0 => x,
        At::X(x) => return Err(CliError::Config(format!("--at must be a non-negative velocity, got {x}"))),
    };
    let xi_n = normalized_squeezing(x, m, j);
    let axis = SqueezedAxis::for_oam(m);
    let (wide, narrow) = (xi_n.abs().exp(), (-xi_n.abs()).exp());
    let (ax, ay) = match axis {
        SqueezedAxis::Y => (wide, narrow),
        SqueezedAxis::X => (narrow, wide),
    };
    let s = Summary {
        j,
        m,
        x,
        xi_n,
        squeezed_axis: axis.label(),
        x_semi_axis: ax,
        y_semi_axis: ay,
    };
    let points: Vec<Point> = (0..POINTS)
        .map(|k| {
            let deg = k as f64 * 360.0 / POINTS as f64;
            let t = deg.to_radians();
            Point {
                angle_deg: deg,
                quad_x: ax * t.cos(),
                quad_y: ay * t.sin(),
            }
        })
        .collect();
    let bytes = match table_format(cfg) {
        Format::Csv => {
            let rows: Vec<Row> = points
                .iter()
                .map(|p| Row {
                    j: s.j,
                    m: s.m,
                    x: s.x,
                    xi_n: s.xi_n,
                    squeezed_axis: s.squeezed_axis,
                    x_semi_axis: s.x_semi_axis,
                    y_semi_axis: s.y_semi_axis,
                    angle_deg: p.angle_deg,
                    quad_x: p.quad_x,
                    quad_y: p.quad_y,
                })
                .collect();
            render_table(&rows, Format::Csv)?
        }
        Format::Json => render_json(&Report { summary: s, points })?,
    };
    Ok(Rendered {
        bytes,
        warnings: Vec::new(),
    })
}
