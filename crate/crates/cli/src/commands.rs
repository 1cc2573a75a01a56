use chsh_exact::bell::{
    bell_exact_configuration, chsh_evaluate, chsh_scan_grid, exact_quadruple, limit_table_csv,
    quadruple_from_frame, singular_limit_table, sphere_realizable, MeasurementFrame,
};
use chsh_exact::ensemble::{outcomes_csv, run_chsh_experiment};
use chsh_exact::exact_arith::{classify_third_side, niven_classify};
use chsh_exact::padic_geometry::{
    gp_distance, is_pythagorean_prime, CantorGeometry, CantorPoint, PythagoreanPrime, StateSpacePoint,
};
use chsh_exact::{CosClass, PiAngle, Rational};
use serde_json::{json, Value};

use crate::args::{ChshCommand, Command, Format, GeometryArgs, GpCommand, Grid, Modulus, Positions};
use crate::config::{parse_grid, RunConfig};
use crate::error::CliError;

/// Rendered command output; `undefined` selects exit status 2.
pub struct Output {
    pub body: String,
    pub undefined: bool,
}

impl Output {
    fn json(v: &impl serde::Serialize, undefined: bool) -> Result<Self, CliError> {
        Ok(Output {
            body: serde_json::to_string_pretty(v)? + "\n",
            undefined,
        })
    }

    fn text(body: String) -> Self {
        Output { body, undefined: false }
    }
}

pub const DEFAULT_LIMIT_NS: [u64; 9] = [4, 12, 16, 28, 36, 40, 52, 112, 520];

pub fn run(cmd: Command, cfg: RunConfig) -> Result<Output, CliError> {
    match cmd {
        Command::Niven { a, b } => {
            let phi = PiAngle::new(a, b)?;
            let class = niven_classify(&phi);
            Output::json(&cos_class_json(&class), !class.is_rational())
        }
        Command::ClassifySide {
            cos_a,
            cos_b,
            gamma_a,
            gamma_b,
        } => {
            let ca: Rational = cos_a.parse()?;
            let cb: Rational = cos_b.parse()?;
            let class = classify_third_side(&ca, &cb, &PiAngle::new(gamma_a, gamma_b)?)?;
            Output::json(&cos_class_json(&class), !class.is_rational())
        }
        Command::Chsh { command } => chsh(command, cfg),
        Command::Gp { command } => gp(command, cfg),
    }
}

fn cos_class_json(c: &CosClass) -> Value {
    match c {
        CosClass::RationalCos(v) => json!({ "rational": true, "value": v }),
        CosClass::IrrationalCos(w) => {
            let mut v = json!({ "rational": false, "degree": w.degree });
            if w.degree_is_bound {
                v["degree_is_bound"] = json!(true);
            }
            if let Some(p) = &w.min_poly {
                v["minpoly"] = json!(p);
            }
            v
        }
    }
}

fn with_modulus(mut cfg: RunConfig, m: &Modulus) -> Result<RunConfig, CliError> {
    if let Some(n) = m.n {
        cfg.n = n;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn with_grid(mut cfg: RunConfig, g: &Grid) -> Result<RunConfig, CliError> {
    if let Some(text) = &g.grid {
        cfg.grid = parse_grid(text)?;
    }
    Ok(cfg)
}

fn frame_from(p: &Positions) -> Result<MeasurementFrame, CliError> {
    let Some(text) = &p.positions else {
        return Ok(MeasurementFrame::textbook());
    };
    let angles = text
        .split(',')
        .map(|s| s.trim().parse::<PiAngle>())
        .collect::<Result<Vec<_>, _>>()?;
    let angles: [PiAngle; 4] = angles
        .try_into()
        .map_err(|_| CliError::Usage("--positions needs exactly four angles".into()))?;
    Ok(MeasurementFrame::from_positions(angles))
}

fn chsh(cmd: ChshCommand, cfg: RunConfig) -> Result<Output, CliError> {
    match cmd {
        ChshCommand::Scan { modulus, grid } => {
            let cfg = with_grid(with_modulus(cfg, &modulus)?, &grid)?;
            let report = chsh_scan_grid(cfg.n, cfg.grid)?;
            match cfg.format {
                Format::Json => Output::json(&report, false),
                Format::Csv => Ok(Output::text(format!("N,S_max,gap\n{},{},{}\n", report.n, report.s(), report.gap))),
            }
        }
        ChshCommand::Eval { modulus, positions } => {
            let cfg = with_modulus(cfg, &modulus)?;
            let frame = frame_from(&positions)?;
            let exact_q = exact_quadruple(&frame);
            let exact = chsh_evaluate(&exact_q);
            let snapped = quadruple_from_frame(&frame, cfg.n)?;
            let snapped_result = chsh_evaluate(&snapped.quadruple);
            let values = snapped.quadruple.values().expect("snapped values are defined");
            let body = json!({
                "N": cfg.n,
                "frame": frame,
                "exact": { "correlations": exact_q, "result": exact },
                "snapped": {
                    "snaps": snapped.snaps,
                    "result": snapped_result,
                    "realizable": sphere_realizable(&values),
                },
            });
            Output::json(&body, !exact.is_defined())
        }
        ChshCommand::Sim {
            modulus,
            m,
            seed,
            positions,
        } => {
            let cfg = with_modulus(cfg, &modulus)?;
            let frame = frame_from(&positions)?;
            let m = m.or(cfg.m).unwrap_or(cfg.n);
            if m == 0 {
                return Err(CliError::Usage("--M must be positive".into()));
            }
            let report = run_chsh_experiment(&frame, cfg.n, m, seed.unwrap_or(cfg.seed))?;
            match cfg.format {
                Format::Json => Output::json(&report, false),
                Format::Csv => Ok(Output::text(outcomes_csv(&report.ensembles))),
            }
        }
        ChshCommand::Exact => {
            let frame = MeasurementFrame::textbook();
            let result = bell_exact_configuration();
            let body = json!({
                "frame": frame,
                "correlations": exact_quadruple(&frame),
                "result": result,
            });
            Output::json(&body, !result.is_defined())
        }
        ChshCommand::LimitTable { ns, grid } => {
            let cfg = with_grid(cfg, &grid)?;
            let ns: Vec<u64> = match ns {
                None => DEFAULT_LIMIT_NS.to_vec(),
                Some(text) => text
                    .split(',')
                    .map(|s| s.trim().parse().map_err(|_| CliError::Usage(format!("bad modulus {s:?}"))))
                    .collect::<Result<_, _>>()?,
            };
            let rows = singular_limit_table(&ns, cfg.grid)?;
            match cfg.format {
                Format::Json => Output::json(&rows, false),
                Format::Csv => Ok(Output::text(limit_table_csv(&rows))),
            }
        }
    }
}

fn geometry(cfg: &RunConfig, g: &GeometryArgs) -> Result<CantorGeometry, CliError> {
    let prime = PythagoreanPrime::new(g.p.unwrap_or(cfg.n + 1))?;
    let s = match &g.s {
        Some(text) => text.parse()?,
        None if g.p.is_some() => Rational::frac(1, 2 * prime.n() as i64),
        None => cfg.contraction(),
    };
    Ok(CantorGeometry::new(prime, s)?)
}

/// Digits padded with the centre digit 0 up to the configured depth.
fn cantor_point(text: &str, depth: usize) -> Result<CantorPoint, CliError> {
    let mut digits = text
        .split(',')
        .map(|s| s.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("bad digit {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if digits.len() > depth {
        return Err(CliError::Usage(format!("{} digits exceed depth {depth}", digits.len())));
    }
    digits.resize(depth, 0);
    Ok(CantorPoint::new(digits)?)
}

fn off_point(text: &str) -> Result<StateSpacePoint, CliError> {
    let (x, y) = text
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("--off expects x,y, got {text:?}")))?;
    Ok(StateSpacePoint::OffSet(x.trim().parse()?, y.trim().parse()?))
}

fn gp(cmd: GpCommand, cfg: RunConfig) -> Result<Output, CliError> {
    match cmd {
        GpCommand::Prime { p } => {
            let body = match is_pythagorean_prime(p) {
                Some(q) => json!({ "pythagorean": true, "s": q.s(), "t": q.t() }),
                None => json!({ "pythagorean": false }),
            };
            Output::json(&body, false)
        }
        GpCommand::Dist { on, off, geometry: g } => {
            let geom = geometry(&cfg, &g)?;
            let mut points = Vec::new();
            for text in &on {
                points.push(StateSpacePoint::OnSet(cantor_point(text, cfg.depth)?));
            }
            for text in &off {
                points.push(off_point(text)?);
            }
            let [x, y]: [StateSpacePoint; 2] = points
                .try_into()
                .map_err(|_| CliError::Usage("gp dist needs exactly two points".into()))?;
            let d = gp_distance(&x, &y, &geom)?;
            Output::json(&json!({ "distance": d, "distance_float": d.to_f64() }), false)
        }
        GpCommand::Embed { on, geometry: g } => {
            let geom = geometry(&cfg, &g)?;
            let point = cantor_point(&on, cfg.depth)?;
            let (x, y) = geom.embed(&point)?;
            let body = json!({
                "digits": point,
                "p": geom.prime().p(),
                "s": geom.contraction(),
                "x": x,
                "y": y,
                "x_float": x.to_f64(),
                "y_float": y.to_f64(),
            });
            Output::json(&body, false)
        }
    }
}
