use serde::Serialize;
use xwave::phasematch::{
    crystal_length, interaction_time, matched_velocity_length, matched_velocity_time, transition_probability_length,
    transition_probability_time, MatchOrder, VelocityPair,
};

use super::{finite, table_format, Rendered};
use crate::args::Form;
use crate::config::RunConfig;
use crate::error::CliResult;
use crate::output::render_table;

pub struct Request<'a> {
    pub v: f64,
    pub orders: &'a [u32],
    pub form: Form,
    pub delta_omega_prime: f64,
    pub time: Option<f64>,
    pub length: Option<f64>,
}

#[derive(Debug, Serialize)]
struct Row {
    order: u32,
    v: f64,
    u: Option<f64>,
    t: Option<f64>,
    length: Option<f64>,
    l_minus_vt: Option<f64>,
    probability: Option<f64>,
    matched: bool,
    note: String,
}

pub fn run(req: &Request, cfg: &RunConfig) -> CliResult<Rendered> {
    let p = &cfg.params;
    let mut rows = Vec::with_capacity(req.orders.len());
    for &order in req.orders {
        let ord = MatchOrder(order);
        let row = match req.form {
            Form::Time => {
                let t = match req.time {
                    Some(t) => Ok(t),
                    None => interaction_time(req.v, ord, p),
                };
                let length = crystal_length(req.v, ord, p).ok();
                match t.and_then(|t| matched_velocity_time(req.v, ord, t, req.delta_omega_prime, p).map(|u| (t, u))) {
                    Ok((t, u)) => {
                        let pair = VelocityPair::new(u, req.v, req.delta_omega_prime);
                        let prob = transition_probability_time(&pair, t, p)?;
                        Row {
                            order,
                            v: req.v,
                            u: Some(u),
                            t: Some(t),
                            length,
                            l_minus_vt: length.and_then(|l| finite(l - req.v * t)),
                            probability: Some(prob),
                            matched: (prob - 4.0).abs() <= 1e-9,
                            note: String::new(),
                        }
                    }
                    Err(e) => unmatched(order, req.v, length, e),
                }
            }
            Form::Length => {
                let length = match req.length {
                    Some(l) => Ok(l),
                    None => crystal_length(req.v, ord, p),
                };
                match length.clone().and_then(|l| matched_velocity_length(req.v, ord, l, p).map(|u| (l, u))) {
                    Ok((l, u)) => {
                        let pair = VelocityPair::new(u, req.v, 0.0);
                        let prob = transition_probability_length(&pair, l, p)?;
                        let t = l / req.v;
                        Row {
                            order,
                            v: req.v,
                            u: Some(u),
                            t: Some(t),
                            length: Some(l),
                            l_minus_vt: finite(l - req.v * t),
                            probability: Some(prob),
                            matched: (prob - 4.0).abs() <= 1e-9,
                            note: String::new(),
                        }
                    }
                    Err(e) => unmatched(order, req.v, length.ok(), e),
                }
            }
        };
        rows.push(row);
    }
    Ok(Rendered {
        bytes: render_table(&rows, table_format(cfg))?,
        warnings: Vec::new(),
    })
}

fn unmatched(order: u32, v: f64, length: Option<f64>, e: xwave::Error) -> Row {
    Row {
        order,
        v,
        u: None,
        t: None,
        length,
        l_minus_vt: None,
        probability: None,
        matched: false,
        note: e.to_string(),
    }
}
