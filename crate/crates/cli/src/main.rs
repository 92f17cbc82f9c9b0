//! Command-line front end: core/quotient decomposition, Maya diagrams,
//! fixed-point enumeration, tangent characters, equivariant integrals,
//! truncated series, and golden-file verification.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use quiver_comb::{
    decompose, enumerate_p_w_v, equivariant_integral, euler_generating, gottsche,
    hilbert_series_z, rank_one_closed_form, rational_functions_agree, reconstruct,
    tangent_character, theta_core, to_maya, verify_identity_a6, z_bruteforce_par,
    z_bruteforce_with, z_closed, z_quot_closed, ale_charts, plane_chart, CharacterSum, ColorSpec,
    DimVector, Partition, QSeries, VerifyMode,
};

/// Exit status for a failed verification, distinct from clap's usage errors.
const VERIFY_FAILED: u8 = 3;
/// Exit status for malformed input detected after argument parsing.
const USAGE_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "quiver-comb", version, about = "Exact core/quotient combinatorics, fixed points, localization, and q-series")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Brute,
    Quot,
    Core,
    Closed,
    Euler,
    Gottsche,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Random,
}

#[derive(Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Core/quotient decomposition of a partition.
    Corequot {
        #[arg(long)]
        l: u32,
        /// Partition as "3,2,1"; "-" is the empty partition.
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Maya diagram of a partition, optionally with its l subsequences.
    Maya {
        #[arg(long)]
        partition: String,
        /// Also print the l arithmetic subsequences and their charges.
        #[arg(long)]
        l: Option<u32>,
    },
    /// Torus fixed points with the given framing residues and dimension vector.
    Fixedpoints {
        #[arg(long)]
        l: u32,
        /// Framing multiplicities per residue, e.g. "1,1".
        #[arg(long)]
        w: String,
        /// Dimension vector (box count per residue), e.g. "1,1".
        #[arg(long)]
        v: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Tangent character at one fixed point, e.g. --point "(2)|-".
    Character {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        w: String,
        /// Tuple of partitions separated by '|'; "-" is empty.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Equivariant localization integral as an exact rational function.
    Integral {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
        /// Optional evaluation point, e.g. "e1=1/2,e2=-1/3,a1=0,a2=5".
        #[arg(long)]
        at: Option<String>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Truncated generating series.
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long)]
        l: u32,
        /// Framing residue for kinds brute, core, closed.
        #[arg(long, default_value_t = 0)]
        j: u32,
        /// Framing multiplicities for kind euler.
        #[arg(long)]
        w: Option<String>,
        /// Betti numbers for kind gottsche, e.g. "1,0,1".
        #[arg(long)]
        betti: Option<String>,
        /// Truncation: all terms of q-degree at most this bound.
        #[arg(long)]
        max_q: i64,
        /// Use the single (undoubled) cohomological grading in kind brute.
        #[arg(long)]
        single_grading: bool,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Run a verification suite against the checked-in golden files.
    Verify {
        #[arg(long, default_value = "paper-examples")]
        suite: String,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Seed for random-point identity checks; ignored in exact mode.
        #[arg(long, default_value_t = 20260823)]
        seed: u64,
        /// Number of random points per identity in random mode.
        #[arg(long, default_value_t = 8)]
        points: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Corequot { l, partition, fmt } => {
            let y = parse_partition(&partition)?;
            let cq = decompose(&y, l).map_err(stringify)?;
            match fmt.format {
                Format::Json => {
                    let out = serde_json::json!({
                        "l": l,
                        "partition": y.parts(),
                        "core": cq.core.parts(),
                        "quotient": cq.quotient.iter().map(|q| q.parts()).collect::<Vec<_>>(),
                        "k": cq.k,
                        "weights": {
                            "total": y.weight(),
                            "core": cq.core.weight(),
                            "quotient": cq.quotient_weight(),
                        },
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                Format::Text => {
                    println!("partition: {y}");
                    println!("core:      {}", cq.core);
                    for (i, q) in cq.quotient.iter().enumerate() {
                        println!("quot[{i}]:   {q}");
                    }
                    println!("k:         {:?}", cq.k);
                    println!(
                        "weights:   total {} = core {} + {} x quotient {}",
                        y.weight(),
                        cq.core.weight(),
                        l,
                        cq.quotient_weight()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Maya { partition, l } => {
            let y = parse_partition(&partition)?;
            let m = to_maya(&y);
            println!("maya:   {m}");
            println!("charge: {}", m.charge());
            if let Some(l) = l {
                for i in 0..l {
                    let sub = m.subsequence(l, i).map_err(stringify)?;
                    println!("sub[{i}]: {sub}  (charge {})", sub.charge());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Fixedpoints { l, w, v, fmt } => {
            let (spec, v) = parse_spec(l, &w, &v)?;
            let points = enumerate_p_w_v(&spec, &v).map_err(stringify)?;
            match fmt.format {
                Format::Json => {
                    let out = serde_json::json!({
                        "l": l,
                        "w": spec.w_vector().0,
                        "v": v.0,
                        "count": points.len(),
                        "points": points
                            .iter()
                            .map(|ys| ys.iter().map(|y| y.parts()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                Format::Text => {
                    for ys in &points {
                        println!("{}", format_tuple(ys));
                    }
                    println!("count: {}", points.len());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Character { l, w, point, fmt } => {
            let ys = parse_tuple(&point)?;
            let spec = parse_colorspec(l, &w)?;
            let c = tangent_character(&ys, &spec).map_err(stringify)?;
            match fmt.format {
                Format::Json => {
                    let out = serde_json::json!({
                        "l": l,
                        "w": spec.w_vector().0,
                        "point": ys.iter().map(|y| y.parts()).collect::<Vec<_>>(),
                        "terms": c.terms,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                Format::Text => {
                    println!("{}", format_character(&c));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Integral { l, w, v, at, fmt } => {
            let (spec, v) = parse_spec(l, &w, &v)?;
            let r = equivariant_integral(&spec, &v).map_err(stringify)?;
            if let Some(at) = at {
                let point = parse_point(&at, spec.rank())?;
                match r.eval(&point) {
                    Some(value) => println!("{value}"),
                    None => return Err("denominator vanishes at the given point".into()),
                }
                return Ok(ExitCode::SUCCESS);
            }
            match fmt.format {
                Format::Json => {
                    let out = serde_json::json!({
                        "l": l,
                        "w": spec.w_vector().0,
                        "v": v.0,
                        "numerator": r.numerator().to_string(),
                        "denominator": r.denominator().to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                Format::Text => println!("{r}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Series { kind, l, j, w, betti, max_q, single_grading, fmt } => {
            let series = match kind {
                SeriesKind::Brute => {
                    if single_grading {
                        z_bruteforce_with(l, j, max_q, false).map_err(stringify)?
                    } else {
                        z_bruteforce_par(l, j, max_q, worker_count()).map_err(stringify)?
                    }
                }
                SeriesKind::Quot => z_quot_closed(l, max_q).map_err(stringify)?,
                SeriesKind::Core => theta_core(l, j, max_q).map_err(stringify)?,
                SeriesKind::Closed => z_closed(l, j, max_q).map_err(stringify)?,
                SeriesKind::Euler => {
                    let w = w.ok_or("kind euler requires --w")?;
                    let w = DimVector(parse_ints(&w)?);
                    euler_generating(l, &w, max_q).map_err(stringify)?
                }
                SeriesKind::Gottsche => {
                    let betti = betti.ok_or("kind gottsche requires --betti")?;
                    let betti: Vec<i64> =
                        parse_ints::<i64>(&betti)?;
                    gottsche(&betti, max_q)
                }
            };
            print_series(&series, fmt.format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, mode, seed, points } => {
            if suite != "paper-examples" {
                return Err(format!("unknown suite {suite:?}"));
            }
            let ok = run_verify_suite(mode, seed, points);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(VERIFY_FAILED) })
        }
    }
}

fn stringify(e: quiver_comb::CombError) -> String {
    e.to_string()
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    Partition::from_str(s).map_err(|e| e.to_string())
}

fn parse_tuple(s: &str) -> Result<Vec<Partition>, String> {
    s.split('|').map(parse_partition).collect()
}

fn parse_ints<T: FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| format!("bad integer {t:?}")))
        .collect()
}

fn parse_colorspec(l: u32, w: &str) -> Result<ColorSpec, String> {
    let w = DimVector(parse_ints(w)?);
    ColorSpec::from_w(l, &w).map_err(stringify)
}

fn parse_spec(l: u32, w: &str, v: &str) -> Result<(ColorSpec, DimVector), String> {
    let spec = parse_colorspec(l, w)?;
    let v = DimVector(parse_ints(v)?);
    if v.0.len() != l as usize {
        return Err(format!("v must have length {l}"));
    }
    Ok((spec, v))
}

/// Parses "e1=1/2,e2=-1/3,a1=0,..." into coordinates ordered e1, e2, a1..ar.
fn parse_point(s: &str, rank: usize) -> Result<Vec<BigRational>, String> {
    let mut map = BTreeMap::new();
    for item in s.split(',') {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("bad assignment {item:?}"))?;
        let value = parse_rational(value.trim())?;
        map.insert(name.trim().to_string(), value);
    }
    let mut names = vec!["e1".to_string(), "e2".to_string()];
    for i in 1..=rank {
        names.push(format!("a{i}"));
    }
    names
        .iter()
        .map(|n| map.remove(n).ok_or_else(|| format!("missing value for {n}")))
        .collect()
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| format!("bad rational {s:?}"))?;
    let den = BigInt::from_str(den.trim()).map_err(|_| format!("bad rational {s:?}"))?;
    if den == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

fn format_tuple(ys: &[Partition]) -> String {
    ys.iter()
        .map(|y| if y.is_empty() { "-".to_string() } else { format!("({y})") })
        .collect::<Vec<_>>()
        .join("|")
}

fn format_character(c: &CharacterSum) -> String {
    c.terms
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(" + ")
}

fn worker_count() -> usize {
    match std::env::var("QUIVER_COMB_WORKERS") {
        Ok(s) => s.parse().unwrap_or(1).max(1),
        Err(_) => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    }
}

fn series_json(series: &QSeries) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = series
        .terms()
        .map(|(e, c)| {
            serde_json::json!({
                "q": e.q,
                "t": e.t,
                "r": e.r,
                "coeff": c.to_string(),
            })
        })
        .collect();
    serde_json::json!({
        "max_q": series.truncation(),
        "terms": terms,
    })
}

fn print_series(series: &QSeries, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&series_json(series)).unwrap());
        }
        Format::Text => {
            for (e, c) in series.terms() {
                let r = e
                    .r
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                println!("q^{:<3} t^{:<3} r[{}]  {}", e.q, e.t, r, c);
            }
        }
    }
}

// Golden files; regenerate with the matching subcommands if the text forms
// ever change intentionally.
const GOLDEN_COREQUOT: &str = include_str!("../golden/corequot_l5_staircase.json");
const GOLDEN_FIXEDPOINTS: &str = include_str!("../golden/fixedpoints_l2_w11_v11.json");
const GOLDEN_CHARACTERS: &str = include_str!("../golden/characters_l2_w11_v11.txt");
const GOLDEN_INTEGRAL: &str = include_str!("../golden/integral_l2_w11_v11.txt");
const GOLDEN_SERIES: &str = include_str!("../golden/series_closed_l2_j0_q4.json");

fn run_verify_suite(mode: Mode, seed: u64, points: usize) -> bool {
    match mode {
        Mode::Exact => println!("suite: paper-examples  mode: exact"),
        Mode::Random => {
            println!("suite: paper-examples  mode: random  seed: {seed}  points: {points}")
        }
    }
    let checks: Vec<(&str, Result<(), String>)> = vec![
        ("staircase-decomposition", check_staircase()),
        ("rank-two-fixed-points", check_fixedpoints()),
        ("rank-two-characters", check_characters()),
        ("rank-two-integral", check_integral(mode, seed, points)),
        ("series-closed-form", check_series_closed()),
        ("hook-identity", check_hook_identity(mode, seed, points)),
        ("toric-chart-series", check_toric_series()),
    ];
    let mut ok = true;
    for (name, result) in checks {
        match result {
            Ok(()) => println!("ok   {name}"),
            Err(msg) => {
                ok = false;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    println!("result: {}", if ok { "pass" } else { "fail" });
    ok
}

fn check_staircase() -> Result<(), String> {
    let y = parse_partition("3,2,1")?;
    let cq = decompose(&y, 5).map_err(stringify)?;
    let got = serde_json::json!({
        "core": cq.core.parts(),
        "quotient": cq.quotient.iter().map(|q| q.parts()).collect::<Vec<_>>(),
        "k": cq.k,
    });
    let expected: serde_json::Value =
        serde_json::from_str(GOLDEN_COREQUOT).map_err(|e| e.to_string())?;
    if got != expected {
        return Err(format!("got {got}, expected {expected}"));
    }
    let back = reconstruct(&cq.core, &cq.quotient, 5).map_err(stringify)?;
    if back != y {
        return Err(format!("reconstruct gave {back}"));
    }
    Ok(())
}

fn rank_two_spec() -> (ColorSpec, DimVector) {
    let w = DimVector(vec![1, 1]);
    (ColorSpec::from_w(2, &w).unwrap(), DimVector(vec![1, 1]))
}

fn check_fixedpoints() -> Result<(), String> {
    let (spec, v) = rank_two_spec();
    let points = enumerate_p_w_v(&spec, &v).map_err(stringify)?;
    let got: Vec<String> = points.iter().map(|ys| format_tuple(ys)).collect();
    let expected: Vec<String> =
        serde_json::from_str(GOLDEN_FIXEDPOINTS).map_err(|e| e.to_string())?;
    for (i, (g, e)) in got.iter().zip(&expected).enumerate() {
        if g != e {
            return Err(format!("tuple {i}: got {g}, expected {e}"));
        }
    }
    if got.len() != expected.len() {
        return Err(format!("got {} tuples, expected {}", got.len(), expected.len()));
    }
    Ok(())
}

fn check_characters() -> Result<(), String> {
    let (spec, v) = rank_two_spec();
    let points = enumerate_p_w_v(&spec, &v).map_err(stringify)?;
    for (ys, golden_line) in points.iter().zip(GOLDEN_CHARACTERS.lines()) {
        let (label, expected) = golden_line
            .split_once(": ")
            .ok_or_else(|| format!("malformed golden line {golden_line:?}"))?;
        if label != format_tuple(ys) {
            return Err(format!("point order: got {}, expected {label}", format_tuple(ys)));
        }
        let got = format_character(&tangent_character(ys, &spec).map_err(stringify)?);
        if got != expected {
            return Err(format!("at {label}: got {got:?}, expected {expected:?}"));
        }
    }
    Ok(())
}

fn check_integral(mode: Mode, seed: u64, points: usize) -> Result<(), String> {
    let (spec, v) = rank_two_spec();
    let r = equivariant_integral(&spec, &v).map_err(stringify)?;
    let got = r.to_string();
    let expected = GOLDEN_INTEGRAL.trim();
    if got != expected {
        return Err(format!("got {got:?}, expected {expected:?}"));
    }
    if let Mode::Random = mode {
        if !rational_functions_agree(&r, &rank_two_reference(), seed, points) {
            return Err("random-point comparison with the reference form failed".into());
        }
    }
    Ok(())
}

/// (4 e1^2 + 10 e1 e2 + 4 e2^2 - (a1 - a2)^2) over
/// e1 e2 E(1,-1,2,1) E(1,-1,1,2) E(-1,1,2,1) E(-1,1,1,2),
/// with E(x, y, z, w) = x a1 + y a2 + z e1 + w e2.
fn rank_two_reference() -> quiver_comb::RationalFunction {
    use quiver_comb::{LinearForm, MultiPoly, RationalFunction};
    let nv = 4;
    let var = |i| MultiPoly::var(nv, i);
    let (e1, e2, a1, a2) = (var(0), var(1), var(2), var(3));
    let diff = a1.sub(&a2);
    let num = e1
        .mul(&e1)
        .scale(&BigInt::from(4))
        .add(&e1.mul(&e2).scale(&BigInt::from(10)))
        .add(&e2.mul(&e2).scale(&BigInt::from(4)))
        .sub(&diff.mul(&diff));
    let ee = |x: i64, y: i64, z: i64, w: i64| LinearForm::new(z, w, vec![x, y]).to_poly(nv);
    let den = e1
        .mul(&e2)
        .mul(&ee(1, -1, 2, 1))
        .mul(&ee(1, -1, 1, 2))
        .mul(&ee(-1, 1, 2, 1))
        .mul(&ee(-1, 1, 1, 2));
    RationalFunction::new(num, den)
}

fn check_series_closed() -> Result<(), String> {
    let golden: serde_json::Value =
        serde_json::from_str(GOLDEN_SERIES).map_err(|e| e.to_string())?;
    let got = series_json(&z_closed(2, 0, 4).map_err(stringify)?);
    if got != golden {
        return Err(format!("closed series l=2 j=0: got {got}"));
    }
    for l in 2..=3u32 {
        for j in 0..l {
            let brute = z_bruteforce_par(l, j, 8, worker_count()).map_err(stringify)?;
            let closed = z_closed(l, j, 8).map_err(stringify)?;
            if brute != closed {
                let diff = first_series_mismatch(&brute, &closed);
                return Err(format!("l={l} j={j}: first mismatch at {diff}"));
            }
        }
    }
    Ok(())
}

fn first_series_mismatch(a: &QSeries, b: &QSeries) -> String {
    for (e, c) in a.terms() {
        if b.coeff(e) != *c {
            return format!("q^{} t^{} r{:?}: {} vs {}", e.q, e.t, e.r, c, b.coeff(e));
        }
    }
    for (e, c) in b.terms() {
        if a.coeff(e) != *c {
            return format!("q^{} t^{} r{:?}: {} vs {}", e.q, e.t, e.r, a.coeff(e), c);
        }
    }
    "no mismatch".into()
}

fn check_hook_identity(mode: Mode, seed: u64, points: usize) -> Result<(), String> {
    let vmode = match mode {
        Mode::Exact => VerifyMode::Exact,
        Mode::Random => VerifyMode::Random { seed, points },
    };
    let cases: Vec<(u32, u32, Vec<u64>)> = vec![
        (2, 0, vec![1, 1]),
        (2, 0, vec![2, 2]),
        (2, 1, vec![2, 1]),
        (3, 0, vec![1, 1, 1]),
        (3, 1, vec![1, 2, 1]),
    ];
    for (l, j, v) in cases {
        let v = DimVector(v);
        if !verify_identity_a6(l, j, &v, vmode).map_err(stringify)? {
            return Err(format!("identity fails at l={l} j={j} v={:?}", v.0));
        }
    }
    Ok(())
}

fn check_toric_series() -> Result<(), String> {
    let plane = hilbert_series_z(&plane_chart(), 4).map_err(stringify)?;
    for (n, zn) in plane.iter().enumerate() {
        if *zn != rank_one_closed_form(n as u64, 1) {
            return Err(format!("plane order {n}: got {zn}"));
        }
    }
    for l in 2..=3u32 {
        let z = hilbert_series_z(&ale_charts(l).map_err(stringify)?, 2).map_err(stringify)?;
        for (n, zn) in z.iter().enumerate() {
            if *zn != rank_one_closed_form(n as u64, l) {
                return Err(format!("l={l} order {n}: got {zn}"));
            }
        }
    }
    Ok(())
}
