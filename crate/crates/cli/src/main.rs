//! `pseudocodes`: command-line front end. Exit codes: 0 success or property
//! satisfied, 1 property violated, 2 usage error, 3 budget or tape error.

mod args;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use serde::Serialize;

use args::*;
use pseudocodes::audit::{self, AuditPoint};
use pseudocodes::code::{dual_code, min_distance, EnsembleKind, LinearCode};
use pseudocodes::ensembles::{pclp_dual, EnsembleSpec, PclpCode};
use pseudocodes::field::{make_extension, LinearizedPoly};
use pseudocodes::io::{
    code_from_json, code_to_json, from_json, matrix_from_text, symbols_from_str, symbols_to_string, taus_from_json,
    to_json, CodeDocument, FORMAT_VERSION,
};
use pseudocodes::local::{
    check_list_decodable, check_list_recoverable, check_local_property, estimate_containment, q_ary_entropy,
    q_ary_entropy_inv, similarity_many, BoundVerdict, CenterMode, EstimateMode, ListMode, Verdict,
};
use pseudocodes::tape::RandomnessTape;

/// A bad flag value; reported with the flag and exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(Usage(msg.into()))
}

/// Whether the command's verdict was a violation.
enum Outcome {
    Ok,
    Violated,
}

#[derive(Serialize)]
struct Document<'a, C: Serialize, R: Serialize> {
    format_version: &'static str,
    command: &'a str,
    config: &'a C,
    result: R,
}

fn emit(out: &OutputArgs, text: String) -> Result<()> {
    match &out.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn document<C: Serialize, R: Serialize>(command: &str, config: &C, result: R) -> String {
    to_json(&Document {
        format_version: FORMAT_VERSION,
        command,
        config,
        result,
    })
}

fn parse_seed(flag: &str, s: &str) -> Result<u64> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|e| usage(format!("{flag}: {s:?} is not a 64-bit hex seed ({e})")))
}

fn require_seed(flag: &str, s: &Option<String>, why: &str) -> Result<u64> {
    match s {
        Some(s) => parse_seed(flag, s),
        None => Err(usage(format!("{flag} is required {why}"))),
    }
}

fn parse_ratio(flag: &str, s: &str) -> Result<pseudocodes::Ratio<usize>> {
    let bad = || usage(format!("{flag}: {s:?} is not a fraction like 1/7"));
    let (a, b) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if b == 0 {
        return Err(bad());
    }
    Ok(pseudocodes::Ratio::new(a, b))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_code(path: &Path) -> Result<LinearCode> {
    code_from_json(&read(path)?).map_err(|e| usage(format!("--code {}: {e}", path.display())))
}

fn spec_of(e: &EnsembleArgs) -> Result<EnsembleSpec> {
    let kind = match e.ensemble {
        Ensemble::Pclp => EnsembleKind::Pclp,
        Ensemble::Pcrcp => EnsembleKind::Pcrcp,
        Ensemble::Wozencraft => EnsembleKind::Wozencraft,
        Ensemble::Rlc => EnsembleKind::Rlc,
    };
    let ell = if kind == EnsembleKind::Rlc { 1 } else { e.ell };
    let spec = EnsembleSpec { kind, q: e.q, n: e.n, k: e.k, ell };
    spec.validate().map_err(|err| usage(format!("--ensemble {}: {err}", kind.name())))?;
    if e.k == 0 || e.k > e.n {
        return Err(usage(format!("--k: need 1 <= k <= n, got k = {}, n = {}", e.k, e.n)));
    }
    Ok(spec)
}

fn with_threads<T: Send>(parallel: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match parallel {
        None => Ok(f()),
        Some(0) => Err(usage("--parallel must be at least 1")),
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
    }
}

fn estimate_mode(e: &EstimatorArgs) -> Result<EstimateMode> {
    Ok(match e.mode {
        Mode::Exhaustive => EstimateMode::Exhaustive,
        Mode::MonteCarlo => EstimateMode::MonteCarlo {
            trials: e.trials.ok_or_else(|| usage("--trials is required with --mode monte-carlo"))?,
            seed: require_seed("--seed", &e.seed, "with --mode monte-carlo")?,
        },
    })
}

fn sample(a: &SampleArgs) -> Result<Outcome> {
    let spec = spec_of(&a.ensemble)?;
    let mut tape = match (&a.seed, &a.tape) {
        (Some(s), _) => RandomnessTape::seeded(parse_seed("--seed", s)?),
        (None, Some(bits)) => RandomnessTape::from_bit_str(bits).map_err(|e| usage(format!("--tape: {e}")))?,
        (None, None) => return Err(usage("--seed or --tape is required")),
    };
    let code = spec.sample(&mut tape)?;
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => code_to_json(&code),
        Format::Text => pseudocodes::io::matrix_to_text(code.q(), code.generator()),
    };
    emit(&a.output, text)?;
    Ok(Outcome::Ok)
}

fn encode(a: &EncodeArgs) -> Result<Outcome> {
    let code = load_code(&a.code)?;
    let msg = symbols_from_str(code.q(), &a.message).map_err(|e| usage(format!("--message: {e}")))?;
    if msg.len() != code.k() {
        return Err(usage(format!("--message: expected {} symbols, got {}", code.k(), msg.len())));
    }
    let word = symbols_to_string(code.q(), &code.encode(&msg)?);
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => document("encode", a, serde_json::json!({ "message": a.message, "codeword": word })),
        Format::Text => word + "\n",
    };
    emit(&a.output, text)?;
    Ok(Outcome::Ok)
}

/// Rebuilds a linearized-polynomial code from its recorded field and coefficients.
fn pclp_from_file(code: &LinearCode) -> Result<PclpCode> {
    let doc = CodeDocument::from_code(code);
    if doc.ensemble != EnsembleKind::Pclp {
        return Err(usage("--method algebraic needs a pclp code file"));
    }
    let field = make_extension(doc.q, doc.n)?;
    if doc.modulus.as_deref() != Some(&symbols_to_string(field.q(), field.modulus())) {
        return Err(usage("--code: recorded modulus differs from the canonical one"));
    }
    let coeffs = code
        .provenance()
        .aux
        .f
        .iter()
        .map(|c| field.elem(c.clone()))
        .collect::<pseudocodes::Result<Vec<_>>>()?;
    let pc = PclpCode::new(field, doc.k, LinearizedPoly::new(coeffs))?;
    if pc.code().generator() != code.generator() {
        return Err(usage("--code: generator does not match the recorded polynomial"));
    }
    Ok(pc)
}

fn dual(a: &DualArgs) -> Result<Outcome> {
    let code = load_code(&a.code)?;
    let d = match a.method {
        DualMethod::Elimination => dual_code(&code),
        DualMethod::Algebraic => pclp_dual(&pclp_from_file(&code)?)?,
    };
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => code_to_json(&d),
        Format::Text => pseudocodes::io::matrix_to_text(d.q(), d.generator()),
    };
    emit(&a.output, text)?;
    Ok(Outcome::Ok)
}

fn check(a: &CheckArgs) -> Result<Outcome> {
    let code = load_code(&a.code)?;
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("{flag} is required for --property")));
    let rho = || -> Result<_> {
        let s = a.rho.as_deref().ok_or_else(|| usage("--rho is required for this --property"))?;
        parse_ratio("--rho", s)
    };
    let format = a.output.format.unwrap_or(Format::Json);
    let report = match a.property {
        Property::Distance => {
            let d = min_distance(&code, a.budget)?;
            let result = serde_json::json!({
                "distance": d.distance,
                "zero_code": d.zero_code,
                "witness": d.witness.as_ref().map(|w| symbols_to_string(code.q(), w)),
            });
            let text = match format {
                Format::Json => document("check", a, result),
                Format::Text if d.zero_code => format!("distance {} (zero code sentinel)\n", d.distance),
                Format::Text => format!("distance {}\n", d.distance),
            };
            emit(&a.output, text)?;
            return Ok(Outcome::Ok);
        }
        Property::ListDecoding => {
            let mode = match a.centers {
                Centers::Exhaustive => CenterMode::Exhaustive,
                Centers::Sampled => CenterMode::Sampled {
                    trials: a.trials.ok_or_else(|| usage("--trials is required with --centers sampled"))?,
                    seed: require_seed("--seed", &a.seed, "with --centers sampled")?,
                },
            };
            let (rho, l) = (rho()?, need(a.l, "--L")?);
            with_threads(a.parallel, || check_list_decodable(&code, rho, l, mode, a.budget))??
        }
        Property::ListRecovery => {
            let lists = match &a.lists {
                None => ListMode::Exhaustive,
                Some(path) => {
                    let raw: Vec<Vec<String>> =
                        from_json(&read(path)?).map_err(|e| usage(format!("--lists {}: {e}", path.display())))?;
                    let tuples = raw
                        .iter()
                        .map(|t| t.iter().map(|s| symbols_from_str(code.q(), s)).collect())
                        .collect::<pseudocodes::Result<_>>()
                        .map_err(|e| usage(format!("--lists: {e}")))?;
                    ListMode::Explicit(tuples)
                }
            };
            check_list_recoverable(&code, rho()?, need(a.lambda, "--lambda")?, need(a.l, "--L")?, lists, a.budget)?
        }
        Property::Local => {
            let path = a.tau.as_ref().ok_or_else(|| usage("--tau is required for --property local"))?;
            let taus = taus_from_json(&read(path)?).map_err(|e| usage(format!("--tau {}: {e}", path.display())))?;
            check_local_property(&code, &taus, a.budget)?
        }
    };
    let text = match format {
        Format::Json => document("check", a, &report),
        Format::Text => format!("{:?}\n", report.verdict).to_lowercase(),
    };
    emit(&a.output, text)?;
    Ok(if report.verdict == Verdict::Violated { Outcome::Violated } else { Outcome::Ok })
}

fn containment(a: &ContainmentArgs) -> Result<Outcome> {
    let spec = spec_of(&a.ensemble)?;
    let m = matrix_from_text(spec.q as usize, &read(&a.matrix)?)
        .map_err(|e| usage(format!("--matrix {}: {e}", a.matrix.display())))?;
    let mode = estimate_mode(&a.estimator)?;
    let est = with_threads(a.estimator.parallel, || estimate_containment(&spec, &m, mode, a.dual))??;
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => document("containment", a, &est),
        Format::Text => format!("{}/{} vs q^-{}: {:?}\n", est.hits, est.samples, est.bound_exponent, est.verdict),
    };
    emit(&a.output, text)?;
    Ok(if est.verdict == BoundVerdict::Violated { Outcome::Violated } else { Outcome::Ok })
}

fn similarity(a: &SimilarityArgs) -> Result<Outcome> {
    let spec = spec_of(&a.ensemble)?;
    let taus = taus_from_json(&read(&a.tau)?).map_err(|e| usage(format!("--tau {}: {e}", a.tau.display())))?;
    let mode = estimate_mode(&a.estimator)?;
    let est = with_threads(a.estimator.parallel, || similarity_many(&spec, &taus, mode, a.budget))??;
    let violated = est.iter().any(|e| e.verdict == BoundVerdict::Violated);
    let text = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => document("similarity", a, &est),
        Format::Text => est
            .iter()
            .map(|e| format!("b={} E={} bound={} {:?}\n", e.b, e.expectation, e.bound, e.verdict))
            .collect(),
    };
    emit(&a.output, text)?;
    Ok(if violated { Outcome::Violated } else { Outcome::Ok })
}

fn parse_points(s: &str) -> Result<Vec<AuditPoint>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let v: Vec<usize> = p
                .split(',')
                .map(|x| x.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| usage(format!("--points: {p:?} is not q,n,k,ell")))?;
            match v[..] {
                [q, n, k, ell] => Ok(AuditPoint { q: q as u64, n, k, ell }),
                _ => bail!(usage(format!("--points: {p:?} is not q,n,k,ell"))),
            }
        })
        .collect()
}

fn audit_cmd(a: &AuditArgs) -> Result<Outcome> {
    let seed = parse_seed("--seed", &a.seed)?;
    let grid = match &a.points {
        Some(p) => parse_points(p)?,
        None => audit::default_grid(),
    };
    let rows = audit::audit_report(&grid, seed)?;
    let text = match a.format {
        AuditFormat::Table => audit::report_table(&rows),
        AuditFormat::Csv => audit::report_csv(&rows),
        AuditFormat::Json => document("audit", a, &rows),
    };
    emit(
        &OutputArgs {
            out: a.out.clone(),
            format: None,
        },
        text,
    )?;
    Ok(Outcome::Ok)
}

fn entropy(a: &EntropyArgs) -> Result<Outcome> {
    let value = if a.inverse { q_ary_entropy_inv(a.q, a.x) } else { q_ary_entropy(a.q, a.x) }
        .map_err(|e| usage(format!("--x / --q: {e}")))?;
    let text = match a.output.format.unwrap_or(Format::Text) {
        Format::Text => format!("{value:?}\n"),
        Format::Json => document("entropy", a, serde_json::json!({ "value": value })),
    };
    emit(&a.output, text)?;
    Ok(Outcome::Ok)
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Sample(a) => sample(a),
        Command::Encode(a) => encode(a),
        Command::Dual(a) => dual(a),
        Command::Check(a) => check(a),
        Command::Containment(a) => containment(a),
        Command::Similarity(a) => similarity(a),
        Command::Audit(a) => audit_cmd(a),
        Command::Entropy(a) => entropy(a),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.downcast_ref::<pseudocodes::Error>() {
        Some(e) if e.is_resource_limit() => 3,
        Some(pseudocodes::Error::NotFullRank { .. })
        | Some(pseudocodes::Error::NotFullRankTau { .. })
        | Some(pseudocodes::Error::ArityExceedsLocality { .. })
        | Some(pseudocodes::Error::BadListSize { .. })
        | Some(pseudocodes::Error::DimensionMismatch(_))
        | Some(pseudocodes::Error::LengthMismatch { .. })
        | Some(pseudocodes::Error::DomainError(_))
        | Some(pseudocodes::Error::BadDimensions(_))
        | Some(pseudocodes::Error::NotPrimePower(_))
        | Some(pseudocodes::Error::Parse(_)) => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
