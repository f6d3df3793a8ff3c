use std::fmt;
use std::path::Path;
use std::time::Instant;

use borderidx_core::json::{
    decomposition_from_json, decomposition_to_json, exponents_to_json, gf_to_json, ideal_to_json,
    index_table_to_json, rational_to_json, IdealSpec,
};
use borderidx_core::random::random_order_ideal;
use borderidx_core::{
    assemble_ind_gf, check_admissible, enlarged_box_decomposition, higher_border, ind_gf,
    ind_gf_2d, index_table, parse_rational, pn_closed, pn_derivative_oracle, pn_series_oracle,
    validate_partition, verify_ind_gf, Admissibility, Error, ExponentVector, IndGf, LinearWeight,
    OrderIdeal, SeriesTable, StanleyDecomposition, Verification,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{digest, RunReport};
use crate::{render, Command, Format, Method};

pub const SEED_VAR: &str = "BORDERIDX_SEED";
const DEFAULT_SEED: u64 = 0;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    InvalidIdeal(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Parse(msg) => write!(f, "{msg}"),
            Self::InvalidIdeal(msg) => write!(f, "invalid order ideal: {msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyIdeal | Error::NotDivisionClosed { .. } | Error::InvalidPartition(_) => {
                Self::InvalidIdeal(e.to_string())
            }
            _ => Self::Parse(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command prints, and whether all of its checks passed.
pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

struct Ctx {
    argv: Vec<String>,
    input_digest: Option<String>,
    start: Instant,
}

impl Ctx {
    fn finish(
        self,
        format: Format,
        output: Value,
        verdicts: Value,
        text: String,
        verified: bool,
    ) -> CliResult<Outcome> {
        let text = if format == Format::Json {
            let report = RunReport {
                command: self.argv,
                input_digest: self.input_digest,
                output,
                verdicts,
                elapsed_ms: self.start.elapsed().as_millis(),
            };
            let mut s = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            s.push('\n');
            s
        } else {
            text
        };
        Ok(Outcome { text, verified })
    }
}

fn require_format(command: &str, format: Format, allowed: &[Format]) -> CliResult<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Parse(format!(
            "`{command}` does not support --format {}",
            format_name(format)
        )))
    }
}

fn format_name(format: Format) -> &'static str {
    match format {
        Format::Json => "json",
        Format::Matrix => "matrix",
        Format::Latex => "latex",
        Format::Text => "text",
    }
}

pub fn parse_bounds(s: &str) -> CliResult<ExponentVector> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(ExponentVector::new(Vec::new()));
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Parse(format!("bad bound {part:?} in {s:?}")))
        })
        .collect::<CliResult<Vec<_>>>()
        .map(ExponentVector::new)
}

fn parse_rationals(s: &str) -> CliResult<Vec<borderidx_core::Rational>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| parse_rational(part).map_err(CliError::from))
        .collect()
}

fn check_dim(what: &str, v: &ExponentVector, dim: usize) -> CliResult<()> {
    if v.dim() == dim {
        Ok(())
    } else {
        Err(CliError::Parse(format!(
            "{what} has {} coordinates but the dimension is {dim}",
            v.dim()
        )))
    }
}

fn read(path: &Path) -> CliResult<Vec<u8>> {
    std::fs::read(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn utf8(bytes: &[u8], path: &Path) -> CliResult<String> {
    String::from_utf8(bytes.to_vec())
        .map_err(|_| CliError::Parse(format!("{} is not UTF-8", path.display())))
}

/// Reads an ideal file. Malformed JSON is a parse error; well-formed input
/// that does not describe a nonempty order ideal is an invalid ideal.
fn load_ideal(path: &Path) -> CliResult<(OrderIdeal, String)> {
    let bytes = read(path)?;
    let text = utf8(&bytes, path)?;
    let spec = IdealSpec::parse(&text)?;
    let ideal = spec.build().map_err(|e| match e {
        Error::Parse(msg) => CliError::Parse(msg),
        other => CliError::InvalidIdeal(other.to_string()),
    })?;
    if ideal.is_empty() {
        return Err(CliError::InvalidIdeal(Error::EmptyIdeal.to_string()));
    }
    Ok((ideal, digest(&bytes)))
}

fn verification_json(v: &Verification) -> Value {
    match v {
        Verification::Agrees => json!({ "agrees": true }),
        Verification::Mismatch {
            point,
            index,
            coefficient,
        } => json!({
            "agrees": false,
            "point": point,
            "index": index,
            "coefficient": rational_to_json(coefficient),
        }),
    }
}

fn verification_text(v: &Verification) -> String {
    match v {
        Verification::Agrees => "agrees".into(),
        Verification::Mismatch {
            point,
            index,
            coefficient,
        } => format!(
            "mismatch at {point}: index {index}, coefficient {}",
            borderidx_core::format_rational(coefficient)
        ),
    }
}

fn series_check(got: &SeriesTable, want: &SeriesTable) -> (Value, String) {
    match got.first_difference(want) {
        None => (json!({ "agrees": true }), "agrees".into()),
        Some(p) => (
            json!({ "agrees": false, "point": p }),
            format!("mismatch at {p}"),
        ),
    }
}

fn admissibility_json(a: &Admissibility) -> Value {
    match a {
        Admissibility::Proved => json!({ "verdict": "proved" }),
        Admissibility::SampledOk => json!({ "verdict": "sampled_ok" }),
        Admissibility::Falsified {
            cone,
            beta,
            expected,
            actual,
        } => json!({
            "verdict": "falsified",
            "cone": cone,
            "beta": beta,
            "expected": expected,
            "actual": actual,
        }),
    }
}

pub fn run(command: &Command, argv: &[String]) -> CliResult<Outcome> {
    let ctx = Ctx {
        argv: argv.to_vec(),
        input_digest: None,
        start: Instant::now(),
    };
    match command {
        Command::Index {
            input,
            bounds,
            format,
        } => cmd_index(ctx, input, bounds, *format),
        Command::Border { input, k, format } => cmd_border(ctx, input, *k, *format),
        Command::Gf {
            input,
            method,
            verify_bounds,
            format,
        } => cmd_gf(ctx, input, *method, verify_bounds.as_deref(), *format),
        Command::Pn {
            a,
            b,
            check_bounds,
            format,
        } => cmd_pn(ctx, a, b, check_bounds.as_deref(), *format),
        Command::Decompose {
            input,
            check,
            sample_bounds,
            format,
        } => cmd_decompose(
            ctx,
            input,
            check.as_deref(),
            sample_bounds.as_deref(),
            *format,
        ),
        Command::Verify {
            input,
            bounds,
            count,
            max_dim,
            format,
        } => cmd_verify(
            ctx,
            input.as_deref(),
            bounds.as_deref(),
            *count,
            *max_dim,
            *format,
        ),
    }
}

fn cmd_index(mut ctx: Ctx, input: &Path, bounds: &str, format: Format) -> CliResult<Outcome> {
    require_format(
        "index",
        format,
        &[Format::Matrix, Format::Json, Format::Text],
    )?;
    let (ideal, d) = load_ideal(input)?;
    ctx.input_digest = Some(d);
    let bounds = parse_bounds(bounds)?;
    check_dim("--bounds", &bounds, ideal.dim())?;
    let table = index_table(&ideal, &bounds)?;
    let text = render::matrix(&table);
    ctx.finish(format, index_table_to_json(&table), json!({}), text, true)
}

fn cmd_border(mut ctx: Ctx, input: &Path, k: u32, format: Format) -> CliResult<Outcome> {
    require_format("border", format, &[Format::Json, Format::Text])?;
    let (ideal, d) = load_ideal(input)?;
    ctx.input_digest = Some(d);
    let points = higher_border(&ideal, k)?;
    let output = json!({ "k": k, "border": exponents_to_json(&points) });
    ctx.finish(format, output, json!({}), render::points(&points), true)
}

fn compute_gf(ideal: &OrderIdeal, method: Method) -> CliResult<IndGf> {
    match method {
        Method::Box => Ok(ind_gf(ideal)?),
        Method::TwoD => {
            let lambda = ideal.to_partition().ok_or_else(|| {
                CliError::Parse("--method 2d needs a two-dimensional order ideal".into())
            })?;
            Ok(ind_gf_2d(&lambda)?)
        }
    }
}

fn gf_output(g: &IndGf) -> Value {
    json!({
        "gf": gf_to_json(&g.gf),
        "method": g.method.to_string(),
        "terms": g.terms,
        "latex": g.gf.to_latex(),
    })
}

fn cmd_gf(
    mut ctx: Ctx,
    input: &Path,
    method: Method,
    verify_bounds: Option<&str>,
    format: Format,
) -> CliResult<Outcome> {
    require_format("gf", format, &[Format::Json, Format::Latex, Format::Text])?;
    let (ideal, d) = load_ideal(input)?;
    ctx.input_digest = Some(d);
    let bounds = verify_bounds.map(parse_bounds).transpose()?;
    if let Some(b) = &bounds {
        check_dim("--verify-bounds", b, ideal.dim())?;
    }
    let g = compute_gf(&ideal, method)?;

    let clears =
        g.gf.clears_denominator(&ExponentVector::new(vec![2; ideal.dim()]));
    let mut verified = clears;
    let mut verdicts = json!({ "denominator_divides_square": clears });
    let mut text = match format {
        Format::Latex => g.gf.to_latex(),
        _ => g.gf.to_string(),
    };
    text.push('\n');
    if format == Format::Text && !clears {
        text.push_str("# denominator check failed\n");
    }
    if let Some(b) = &bounds {
        let v = verify_ind_gf(&g.gf, &ideal, b)?;
        verified &= v.agrees();
        verdicts["verify"] = verification_json(&v);
        verdicts["verify"]["bounds"] = json!(b);
        if format == Format::Text {
            text.push_str(&format!("# verify {b}: {}\n", verification_text(&v)));
        } else if !v.agrees() && format != Format::Json {
            eprintln!("verify {b}: {}", verification_text(&v));
        }
    }
    ctx.finish(format, gf_output(&g), verdicts, text, verified)
}

fn cmd_pn(
    ctx: Ctx,
    a: &str,
    b: &str,
    check_bounds: Option<&str>,
    format: Format,
) -> CliResult<Outcome> {
    require_format("pn", format, &[Format::Json, Format::Latex, Format::Text])?;
    let w = LinearWeight::new(parse_rationals(a)?, parse_rational(b)?);
    let bounds = check_bounds.map(parse_bounds).transpose()?;
    if let Some(bd) = &bounds {
        check_dim("--check-bounds", bd, w.dim())?;
    }
    let g = pn_closed(&w);

    let mut text = match format {
        Format::Latex => g.to_latex(),
        _ => g.to_string(),
    };
    text.push('\n');
    let mut verified = true;
    let mut verdicts = json!({});
    if let Some(bd) = &bounds {
        let series = g.expand(bd)?;
        let (v, msg) = series_check(&series, &pn_series_oracle(&w, bd)?);
        verified &= v["agrees"] == json!(true);
        verdicts["series"] = v;
        let mut lines = vec![format!("# series oracle {bd}: {msg}")];
        match pn_derivative_oracle(&w, bd) {
            Ok(oracle) => {
                let (v, msg) = series_check(&series, &oracle);
                verified &= v["agrees"] == json!(true);
                verdicts["derivative"] = v;
                lines.push(format!("# derivative oracle {bd}: {msg}"));
            }
            Err(Error::NotNonnegativeInteger { .. }) => {
                verdicts["derivative"] =
                    json!({ "skipped": "weights are not nonnegative integers" });
                lines.push(
                    "# derivative oracle: skipped (weights are not nonnegative integers)".into(),
                );
            }
            Err(e) => return Err(e.into()),
        }
        if format == Format::Text {
            for line in lines {
                text.push_str(&line);
                text.push('\n');
            }
        } else if !verified && format != Format::Json {
            eprintln!("{}", lines.join("\n"));
        }
    }
    let output = json!({
        "a": w.a.iter().map(rational_to_json).collect::<Vec<_>>(),
        "b": rational_to_json(&w.b),
        "gf": gf_to_json(&g),
        "latex": g.to_latex(),
    });
    ctx.finish(format, output, verdicts, text, verified)
}

fn default_sample_bounds(
    d: &StanleyDecomposition,
    ideal: &OrderIdeal,
) -> CliResult<ExponentVector> {
    let corner = ideal.bounding_box()?.corner;
    Ok(d.cones()
        .iter()
        .fold(corner, |acc, c| acc.join(&c.anchor))
        .shifted(4))
}

fn decomposition_text(d: &StanleyDecomposition) -> String {
    d.cones().iter().map(|c| format!("{c}\n")).collect()
}

fn cmd_decompose(
    mut ctx: Ctx,
    input: &Path,
    check: Option<&Path>,
    sample_bounds: Option<&str>,
    format: Format,
) -> CliResult<Outcome> {
    require_format("decompose", format, &[Format::Json, Format::Text])?;
    let (ideal, digest_ideal) = load_ideal(input)?;
    let d = match check {
        None => {
            ctx.input_digest = Some(digest_ideal);
            enlarged_box_decomposition(&ideal)?
        }
        Some(path) => {
            let bytes = read(path)?;
            ctx.input_digest = Some(format!("{digest_ideal} {}", digest(&bytes)));
            decomposition_from_json(&utf8(&bytes, path)?, ideal.dim())?
        }
    };
    let bounds = match sample_bounds {
        Some(s) => parse_bounds(s)?,
        None => default_sample_bounds(&d, &ideal)?,
    };
    check_dim("--sample-bounds", &bounds, ideal.dim())?;

    let partition = validate_partition(&d, &ideal)?;
    let mut verdicts = json!({
        "partition": { "valid": partition.is_valid(), "detail": partition.to_string() },
    });
    let mut text = decomposition_text(&d);
    text.push_str(&format!("# partition: {partition}\n"));
    let mut output = json!({ "decomposition": decomposition_to_json(&d) });
    let mut verified = partition.is_valid();

    if partition.is_valid() {
        let adm = check_admissible(&d, &ideal, &bounds)?;
        verdicts["admissibility"] = admissibility_json(&adm);
        verdicts["admissibility"]["sample_bounds"] = json!(bounds);
        text.push_str(&format!("# admissibility: {adm}\n"));
        if matches!(adm, Admissibility::Falsified { .. }) {
            verified = false;
        } else {
            let g = assemble_ind_gf(&d, &ideal)?;
            text.push_str(&format!("# Ind = {}\n", g.gf));
            output["gf"] = gf_to_json(&g.gf);
        }
    }
    ctx.finish(format, output, verdicts, text, verified)
}

/// Checks one ideal: both GF routes against the index table on `bounds`,
/// the denominator bound, and partition plus admissibility of the box
/// decomposition. Returns the verdict object and a list of failures.
fn verify_ideal(ideal: &OrderIdeal, bounds: &ExponentVector) -> CliResult<(Value, Vec<String>)> {
    let mut failures = Vec::new();
    let g = ind_gf(ideal)?;
    let v = verify_ind_gf(&g.gf, ideal, bounds)?;
    if !v.agrees() {
        failures.push(format!("box route: {}", verification_text(&v)));
    }
    let clears =
        g.gf.clears_denominator(&ExponentVector::new(vec![2; ideal.dim()]));
    if !clears {
        failures.push("denominator does not divide Π(1-y_i)^2".into());
    }
    let d = enlarged_box_decomposition(ideal)?;
    let partition = validate_partition(&d, ideal)?;
    if !partition.is_valid() {
        failures.push(format!("box decomposition: {partition}"));
    }
    let adm = check_admissible(&d, ideal, bounds)?;
    if matches!(adm, Admissibility::Falsified { .. }) {
        failures.push(format!("box decomposition: {adm}"));
    }
    let mut verdict = json!({
        "bounds": bounds,
        "verify": verification_json(&v),
        "denominator_divides_square": clears,
        "partition_valid": partition.is_valid(),
        "admissibility": adm.to_string(),
    });
    if let Some(lambda) = ideal.to_partition() {
        let g2 = ind_gf_2d(&lambda)?;
        let same = g2.gf == g.gf;
        if !same {
            failures.push("2d route disagrees with box route".into());
        }
        verdict["routes_agree"] = json!(same);
    }
    Ok((verdict, failures))
}

fn seed_from_env() -> CliResult<u64> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("{SEED_VAR}={s:?} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn cmd_verify(
    mut ctx: Ctx,
    input: Option<&Path>,
    bounds: Option<&str>,
    count: usize,
    max_dim: usize,
    format: Format,
) -> CliResult<Outcome> {
    require_format("verify", format, &[Format::Json, Format::Text])?;
    let explicit = bounds.map(parse_bounds).transpose()?;
    let mut cases: Vec<(OrderIdeal, ExponentVector)> = Vec::new();
    let mut output = json!({});
    match input {
        Some(path) => {
            let (ideal, d) = load_ideal(path)?;
            ctx.input_digest = Some(d);
            let b = match explicit {
                Some(b) => b,
                None => ideal.bounding_box()?.corner.shifted(3),
            };
            check_dim("--bounds", &b, ideal.dim())?;
            cases.push((ideal, b));
        }
        None => {
            if max_dim == 0 {
                return Err(CliError::Parse("--max-dim must be at least 1".into()));
            }
            let seed = seed_from_env()?;
            output["seed"] = json!(seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let dim = rng.gen_range(1..=max_dim);
                let ideal = random_order_ideal(&mut rng, dim, 60);
                let b = ideal.bounding_box()?.corner.shifted(3);
                cases.push((ideal, b));
            }
        }
    }

    let mut verdicts = Vec::new();
    let mut text = String::new();
    let mut failed = 0;
    for (n, (ideal, b)) in cases.iter().enumerate() {
        let (mut verdict, failures) = verify_ideal(ideal, b)?;
        if input.is_none() {
            verdict["ideal"] = ideal_to_json(ideal);
        }
        verdict["ok"] = json!(failures.is_empty());
        if failures.is_empty() {
            text.push_str(&format!(
                "PASS  case {n}: dim {}, {} elements\n",
                ideal.dim(),
                ideal.len()
            ));
        } else {
            failed += 1;
            text.push_str(&format!(
                "FAIL  case {n}: dim {}, {} elements\n",
                ideal.dim(),
                ideal.len()
            ));
            for f in &failures {
                text.push_str(&format!("      {f}\n"));
            }
        }
        verdicts.push(verdict);
    }
    if let Some(seed) = output.get("seed") {
        text.push_str(&format!("seed {seed}: "));
    }
    text.push_str(&format!(
        "{} of {} cases passed\n",
        cases.len() - failed,
        cases.len()
    ));
    output["cases"] = json!(cases.len());
    output["failed"] = json!(failed);
    ctx.finish(format, output, Value::Array(verdicts), text, failed == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_parse() {
        assert_eq!(
            parse_bounds("7, 7").unwrap(),
            ExponentVector::new(vec![7, 7])
        );
        assert_eq!(parse_bounds("").unwrap().dim(), 0);
        assert!(matches!(parse_bounds("1,-1"), Err(CliError::Parse(_))));
        assert!(matches!(
            parse_bounds("4294967296"),
            Err(CliError::Parse(_))
        ));
    }

    #[test]
    fn error_classes() {
        assert!(matches!(
            CliError::from(Error::EmptyIdeal),
            CliError::InvalidIdeal(_)
        ));
        assert!(matches!(
            CliError::from(Error::Parse("x".into())),
            CliError::Parse(_)
        ));
    }
}
