//! Command-line front end: compute the polynomials, run the box verifier,
//! and trace the involution.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 domain error. All output is deterministic for fixed inputs.

use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use glab::{
    gpoly_by_rpp, jt_determinant, phi, verify_box, Identity, NPathJson, Polynomial, SkewShape,
    VerifyConfig, VerifyReport,
};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "glab",
    version,
    about = "Refined dual stable Grothendieck polynomials: generating functions, determinants, and the sign-reversing involution"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the weight generating function over reverse plane partitions.
    Gpoly(PolyArgs),
    /// Print the Jacobi-Trudi determinant (or its binomial t=1 variant).
    Jt(JtArgs),
    /// Check the identity chain on every nested shape pair in a box.
    Verify(VerifyArgs),
    /// Run the involution on one path family and emit the full trace.
    InvolutionTrace(TraceArgs),
}

#[derive(Args)]
struct PolyArgs {
    /// Skew shape, e.g. "6,5,4,4,2/4,3,1"; the inner part is optional.
    #[arg(long)]
    shape: String,
    /// Number of x variables.
    #[arg(long, default_value_t = 2)]
    xvars: u32,
    /// Set every t variable to 0.
    #[arg(long, conflicts_with = "t1")]
    t0: bool,
    /// Set every t variable to 1.
    #[arg(long)]
    t1: bool,
    /// Emit JSON instead of the canonical text form.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct JtArgs {
    #[command(flatten)]
    poly: PolyArgs,
    /// Use the binomial entries (the determinant for the t=1 polynomial).
    #[arg(long)]
    binomial: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Box of outer shapes as "RxC"; defaults to $GLAB_BOX or 4x4.
    #[arg(long = "box")]
    box_: Option<String>,
    /// Number of x variables.
    #[arg(long, default_value_t = 2)]
    xvars: u32,
    /// Comma-separated identity ids to check (default: all).
    #[arg(long)]
    identities: Option<String>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Self-test: corrupt the signed path sum and require a failure.
    #[arg(long)]
    expect_fail: bool,
    /// Emit the full JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TraceArgs {
    /// Path to the family JSON ("-" reads standard input).
    #[arg(long)]
    input: String,
}

fn parse_shape(s: &str) -> Result<SkewShape, u8> {
    SkewShape::from_str(s).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    })
}

fn print_poly(p: &Polynomial, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(p).expect("polynomial serializes")
        );
    } else {
        println!("{p}");
    }
}

fn specialized(p: Polynomial, t0: bool, t1: bool) -> Polynomial {
    if t0 {
        p.specialize_t(0)
    } else if t1 {
        p.specialize_t(1)
    } else {
        p
    }
}

fn run_gpoly(a: &PolyArgs) -> Result<(), u8> {
    let shape = parse_shape(&a.shape)?;
    if !shape.is_contained() {
        eprintln!("error: the inner shape is not contained in the outer shape");
        return Err(EXIT_DOMAIN);
    }
    let p = gpoly_by_rpp(&shape.outer, &shape.inner, a.xvars);
    print_poly(&specialized(p, a.t0, a.t1), a.json);
    Ok(())
}

fn run_jt(a: &JtArgs) -> Result<(), u8> {
    let shape = parse_shape(&a.poly.shape)?;
    let p = if a.binomial {
        glab::binomial_determinant(&shape.outer, &shape.inner, a.poly.xvars)
    } else {
        jt_determinant(&shape.outer, &shape.inner, a.poly.xvars)
    };
    print_poly(&specialized(p, a.poly.t0, a.poly.t1), a.poly.json);
    Ok(())
}

fn parse_box(spec: &str) -> Result<(usize, usize), u8> {
    let err = || {
        eprintln!("error: box must look like 4x4");
        EXIT_USAGE
    };
    let (r, c) = spec.split_once(['x', 'X']).ok_or_else(err)?;
    Ok((
        r.trim().parse().map_err(|_| err())?,
        c.trim().parse().map_err(|_| err())?,
    ))
}

fn print_verify_text(report: &VerifyReport) {
    for s in &report.shapes {
        if s.ok {
            println!("ok   {}", s.shape);
        } else {
            for c in s.checks.iter().filter(|c| !c.ok) {
                println!(
                    "FAIL {} [{}]: {}",
                    s.shape,
                    c.id,
                    c.detail.as_deref().unwrap_or("")
                );
            }
        }
    }
    let bad = report.shapes.iter().filter(|s| !s.ok).count();
    println!(
        "checked {} shapes in the {}x{} box with {} x-variables: {}",
        report.shapes.len(),
        report.box_rows,
        report.box_cols,
        report.xvars,
        if bad == 0 {
            "all identities hold".to_string()
        } else {
            format!("{bad} shapes FAILED")
        }
    );
}

fn run_verify(a: &VerifyArgs) -> Result<(), u8> {
    let box_spec = match &a.box_ {
        Some(b) => b.clone(),
        None => std::env::var("GLAB_BOX").unwrap_or_else(|_| "4x4".into()),
    };
    let (rows, cols) = parse_box(&box_spec)?;
    let identities = match &a.identities {
        None => Vec::new(),
        Some(list) => list
            .split(',')
            .map(|s| {
                Identity::parse(s.trim()).ok_or_else(|| {
                    eprintln!("error: unknown identity {:?}", s.trim());
                    EXIT_USAGE
                })
            })
            .collect::<Result<Vec<_>, u8>>()?,
    };
    if let Some(jobs) = a.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| {
                eprintln!("error: {e}");
                EXIT_USAGE
            })?;
    }
    let report = verify_box(&VerifyConfig {
        rows,
        cols,
        p: a.xvars,
        identities,
        mutate: a.expect_fail,
    });
    if a.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print_verify_text(&report);
    }
    if a.expect_fail {
        if report.ok {
            eprintln!("error: the injected corruption went undetected");
            return Err(EXIT_VERIFY);
        }
        println!("injected corruption detected as expected");
        return Ok(());
    }
    if report.ok {
        Ok(())
    } else {
        Err(EXIT_VERIFY)
    }
}

fn run_trace(a: &TraceArgs) -> Result<(), u8> {
    let raw = if a.input == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| {
            eprintln!("error: {e}");
            EXIT_USAGE
        })?;
        buf
    } else {
        fs::read_to_string(&a.input).map_err(|e| {
            eprintln!("error: {}: {e}", a.input);
            EXIT_USAGE
        })?
    };
    let parsed: NPathJson = serde_json::from_str(&raw).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    })?;
    let (shape, np) = parsed.decode().map_err(|e| {
        eprintln!("error: {e}");
        EXIT_DOMAIN
    })?;
    let trace = phi(&np, &shape).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_DOMAIN
    })?;
    let mut v = trace.to_json();
    v["shape"] = serde_json::to_value(&shape).expect("shape serializes");
    println!(
        "{}",
        serde_json::to_string_pretty(&v).expect("trace serializes")
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error.
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.cmd {
        Cmd::Gpoly(a) => run_gpoly(a),
        Cmd::Jt(a) => run_jt(a),
        Cmd::Verify(a) => run_verify(a),
        Cmd::InvolutionTrace(a) => run_trace(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
