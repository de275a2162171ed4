//! Command-line surface over the 2-group representation invariants.
//!
//! Exit codes: 0 on success, 1 on a mathematical failure or mismatch,
//! 2 on I/O or parse errors.  All output is deterministic: identical
//! inputs produce byte-identical output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use rep2v::charlat::{dual_group, QZ};
use rep2v::cohom::{Cochain, EnumLimits, ScalarCochain, TrivialQzModule};
use rep2v::grp::FiniteGroup;
use rep2v::intertwine::{
    end_omega_basis_component, hom_rank, orbit_decomposition, universal_roundtrip, zregular_count,
    HomReport,
};
use rep2v::repq::{enumerate_reps, equivalent, regular_rep, RawQuadruple, RepQuadruple};
use rep2v::twogrp::{RawTwoGroup, TwoGroupData};

#[derive(Parser)]
#[command(name = "rep2v", version, about = "Exact invariants of 2-group representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Tsv,
    Json,
}

#[derive(Args, Clone, Copy)]
struct FormatArg {
    /// Emit JSON instead of the default TSV tables.
    #[arg(long, conflicts_with = "tsv")]
    json: bool,
    /// Emit TSV tables (the default).
    #[arg(long)]
    tsv: bool,
}

impl FormatArg {
    fn get(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Tsv
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a 2-group file or a quadruple file; prints one line per
    /// check with a witness on failure.
    Validate { file: PathBuf },
    /// Emit the classifying quadruple of the regular representation.
    Regular {
        two_group: PathBuf,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Intertwining orbit table and the total intertwining number.
    HomRank {
        rep1: PathBuf,
        rep2: PathBuf,
        /// Also compute the reverse direction and compare.
        #[arg(long)]
        both: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Full orbit decomposition of X(n′,n) with intertwining flags.
    Orbits {
        rep1: PathBuf,
        rep2: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Number of z-regular conjugacy classes of a group for a scalar
    /// 2-cocycle file.
    Zregular { group: PathBuf, cocycle: PathBuf },
    /// Search for an equivalence witness between two quadruples.
    Equiv { rep1: PathBuf, rep2: PathBuf },
    /// Enumerate all pairwise inequivalent representations of a given
    /// dimension.
    Enumerate {
        two_group: PathBuf,
        /// Representation dimension.
        #[arg(long)]
        n: usize,
        /// Bound on the dimension accepted by the enumerator.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Bound on |π₀| accepted by the enumerator.
        #[arg(long, default_value_t = 12)]
        max_order: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check the universal-functor roundtrip identity on a multiplicity
    /// vector.
    UniversalCheck {
        rep: PathBuf,
        /// Comma-separated multiplicities, one per basis index.
        #[arg(long, value_delimiter = ',')]
        d: Vec<usize>,
    },
    /// Components of the basis endomorphisms ζ_{χ,g} of End(ω) on a
    /// representation.
    BasisEndomega {
        rep: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
}

/// Failures carry the exit code dictated by the contract.
enum Failure {
    /// Mathematical failure or mismatch.
    Math(String),
    /// I/O or parse error.
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Math(_) => 1,
            Failure::Io(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Math(m) | Failure::Io(m) => m,
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

/// Parses JSON, mapping syntax trouble to exit 2 and semantic
/// (validation) trouble to exit 1.
fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| {
        let msg = format!("{}: {e}", path.display());
        match e.classify() {
            serde_json::error::Category::Data => Failure::Math(msg),
            _ => Failure::Io(msg),
        }
    })
}

fn load_two_group(path: &Path) -> Result<TwoGroupData, Failure> {
    let text = read_file(path)?;
    parse_json::<TwoGroupData>(path, &text)
}

fn load_quadruple(path: &Path) -> Result<RepQuadruple, Failure> {
    let text = read_file(path)?;
    let q: RepQuadruple = parse_json(path, &text)?;
    let report = q.validate();
    if !report.passed() {
        return Err(Failure::Math(format!(
            "{} fails validation:\n{report}",
            path.display()
        )));
    }
    Ok(q)
}

fn math<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Math(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Regular { two_group, output } => cmd_regular(&two_group, output.as_deref()),
        Command::HomRank { rep1, rep2, both, format } => {
            cmd_hom_rank(&rep1, &rep2, both, format.get())
        }
        Command::Orbits { rep1, rep2, format } => cmd_orbits(&rep1, &rep2, format.get()),
        Command::Zregular { group, cocycle } => cmd_zregular(&group, &cocycle),
        Command::Equiv { rep1, rep2 } => cmd_equiv(&rep1, &rep2),
        Command::Enumerate { two_group, n, max_n, max_order, format } => {
            cmd_enumerate(&two_group, n, max_n, max_order, format.get())
        }
        Command::UniversalCheck { rep, d } => cmd_universal_check(&rep, &d),
        Command::BasisEndomega { rep, format } => cmd_basis_endomega(&rep, format.get()),
    }
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

fn cmd_validate(file: &Path) -> Result<(), Failure> {
    let text = read_file(file)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Io(format!("{}: {e}", file.display())))?;
    let is_quadruple = value.get("n").is_some() || value.get("rho").is_some();
    if is_quadruple {
        let raw: RawQuadruple = parse_json(file, &text)?;
        let q = raw.build().map_err(|e| Failure::Math(format!("structure: {e}")))?;
        let report = q.validate();
        print!("{report}");
        if report.passed() {
            println!("valid quadruple: n = {}", q.dim());
            Ok(())
        } else {
            Err(Failure::Math("quadruple validation failed".to_string()))
        }
    } else {
        let raw: RawTwoGroup = parse_json(file, &text)?;
        let t = raw.build().map_err(math)?;
        println!("ok   pi0 (order {})", t.p());
        println!("ok   pi1 (order {})", t.q());
        println!("ok   action");
        println!("ok   alpha normalized 3-cocycle");
        println!("valid 2-group: p = {}, q = {}, split = {}", t.p(), t.q(), t.is_split());
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// regular
// ---------------------------------------------------------------------------

fn cmd_regular(two_group: &Path, output: Option<&Path>) -> Result<(), Failure> {
    let t = load_two_group(two_group)?;
    let r = regular_rep(&t);
    let json = serde_json::to_string_pretty(&r)
        .map_err(|e| Failure::Io(format!("serialization: {e}")))?;
    match output {
        Some(path) => std::fs::write(path, json + "\n")
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{json}"),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// hom-rank / orbits
// ---------------------------------------------------------------------------

fn orbit_table(report: &HomReport) -> String {
    let mut out = String::new();
    out.push_str("rep\tsize\tstab\ttorsor\tzregular\n");
    for rec in &report.orbits {
        let o = &rec.orbit;
        let _ = writeln!(
            out,
            "({},{})\t{}\t{}\t{}\t{}",
            o.representative.0,
            o.representative.1,
            o.points.len(),
            o.stabilizer.len(),
            if o.is_torsor { "yes" } else { "no" },
            rec.zregular_count
        );
    }
    let _ = writeln!(out, "total\t{}", report.total_rank);
    out
}

fn cmd_hom_rank(rep1: &Path, rep2: &Path, both: bool, format: Format) -> Result<(), Failure> {
    let q1 = load_quadruple(rep1)?;
    let q2 = load_quadruple(rep2)?;
    let forward = hom_rank(&q1, &q2).map_err(math)?;
    match format {
        Format::Json => {
            if both {
                let reverse = hom_rank(&q2, &q1).map_err(math)?;
                let pair = serde_json::json!({
                    "forward": forward,
                    "reverse": reverse,
                    "symmetric": forward.total_rank == reverse.total_rank,
                });
                println!("{}", serde_json::to_string_pretty(&pair).unwrap());
            } else {
                println!("{}", serde_json::to_string_pretty(&forward).unwrap());
            }
        }
        Format::Tsv => {
            print!("{}", orbit_table(&forward));
            if both {
                let reverse = hom_rank(&q2, &q1).map_err(math)?;
                println!("reverse");
                print!("{}", orbit_table(&reverse));
                println!(
                    "symmetric\t{}",
                    if forward.total_rank == reverse.total_rank { "yes" } else { "no" }
                );
            }
        }
    }
    Ok(())
}

fn cmd_orbits(rep1: &Path, rep2: &Path, format: Format) -> Result<(), Failure> {
    let q1 = load_quadruple(rep1)?;
    let q2 = load_quadruple(rep2)?;
    let d = orbit_decomposition(&q1, &q2).map_err(math)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&d).unwrap()),
        Format::Tsv => {
            println!("rep\tsize\tstab\ttorsor\tintertwining");
            for (o, keep) in d.orbits.iter().zip(&d.intertwining) {
                println!(
                    "({},{})\t{}\t{}\t{}\t{}",
                    o.representative.0,
                    o.representative.1,
                    o.points.len(),
                    o.stabilizer.len(),
                    if o.is_torsor { "yes" } else { "no" },
                    if *keep { "yes" } else { "no" }
                );
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// zregular
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct RawScalarCocycle {
    z: Vec<Vec<QZ>>,
}

fn cmd_zregular(group: &Path, cocycle: &Path) -> Result<(), Failure> {
    let gtext = read_file(group)?;
    let g: FiniteGroup = parse_json(group, &gtext)?;
    let ztext = read_file(cocycle)?;
    let raw: RawScalarCocycle = parse_json(cocycle, &ztext)?;
    let p = g.order();
    if raw.z.len() != p || raw.z.iter().any(|r| r.len() != p) {
        return Err(Failure::Math(format!("cocycle table must be {p}×{p}")));
    }
    let values: Vec<QZ> = raw.z.into_iter().flatten().collect();
    let z: ScalarCochain =
        Cochain::new(TrivialQzModule::new(g.clone()), 2, values).map_err(math)?;
    let count = zregular_count(&g, &z).map_err(math)?;
    println!("zregular\t{count}");
    Ok(())
}

// ---------------------------------------------------------------------------
// equiv
// ---------------------------------------------------------------------------

fn cmd_equiv(rep1: &Path, rep2: &Path) -> Result<(), Failure> {
    let q1 = load_quadruple(rep1)?;
    let q2 = load_quadruple(rep2)?;
    match equivalent(&q1, &q2).map_err(math)? {
        Some(sigma) => {
            println!("equivalent\tsigma={:?}", sigma.images());
            Ok(())
        }
        None => {
            println!("inequivalent");
            Err(Failure::Math("quadruples are not equivalent".to_string()))
        }
    }
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

fn cmd_enumerate(
    two_group: &Path,
    n: usize,
    max_n: usize,
    max_order: usize,
    format: Format,
) -> Result<(), Failure> {
    let t = load_two_group(two_group)?;
    let limits = EnumLimits {
        max_group_order: max_order,
        max_rank: max_n,
        ..EnumLimits::default()
    };
    let reps = enumerate_reps(&t, n, &limits).map_err(math)?;
    match format {
        Format::Json => {
            let raw: Vec<RawQuadruple> = reps.iter().map(RawQuadruple::from).collect();
            println!("{}", serde_json::to_string_pretty(&raw).unwrap());
        }
        Format::Tsv => {
            println!("classes\t{}", reps.len());
            for (idx, q) in reps.iter().enumerate() {
                let rho: Vec<&[usize]> =
                    q.rho().images().iter().map(|p| p.images()).collect();
                let beta: Vec<&[u64]> = q.gamma().iter().map(|c| c.exps()).collect();
                let mut cvals = String::new();
                let p = t.p();
                for g1 in 0..p {
                    for g2 in 0..p {
                        for v in q.c().value(&[g1, g2]) {
                            if !cvals.is_empty() {
                                cvals.push(',');
                            }
                            let _ = write!(cvals, "{v}");
                        }
                    }
                }
                println!("{idx}\tn={}\trho={rho:?}\tbeta={beta:?}\tc=[{cvals}]", q.dim());
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// universal-check / basis-endomega
// ---------------------------------------------------------------------------

fn cmd_universal_check(rep: &Path, d: &[usize]) -> Result<(), Failure> {
    let q = load_quadruple(rep)?;
    let out = universal_roundtrip(d, &q).map_err(math)?;
    if out == d {
        println!("pass\t{:?}", out);
        Ok(())
    } else {
        println!("fail\texpected {:?} got {:?}", d, out);
        Err(Failure::Math("universal roundtrip mismatch".to_string()))
    }
}

fn cmd_basis_endomega(rep: &Path, format: Format) -> Result<(), Failure> {
    let q = load_quadruple(rep)?;
    let t = q.two_group();
    let chars = dual_group(t.pi1());
    let n = q.dim();
    // Basis order matches the lexicographic order on (χ, g) pairs used
    // for the regular representation: character index major.
    let mut rows = Vec::new();
    for (k, chi) in chars.iter().enumerate() {
        for g in 0..t.p() {
            let comps: Vec<Option<usize>> = (0..n)
                .map(|i| end_omega_basis_component(chi, g, &q, i))
                .collect::<Result<_, _>>()
                .map_err(math)?;
            rows.push((k, g, comps));
        }
    }
    match format {
        Format::Json => {
            let json: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(k, g, comps)| {
                    serde_json::json!({ "chi": k, "g": g, "components": comps })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&json).unwrap());
        }
        Format::Tsv => {
            println!("chi\tg\tcomponents");
            for (k, g, comps) in rows {
                let rendered: Vec<String> = comps
                    .into_iter()
                    .map(|c| c.map_or("-".to_string(), |j| j.to_string()))
                    .collect();
                println!("{k}\t{g}\t{}", rendered.join(","));
            }
        }
    }
    Ok(())
}
