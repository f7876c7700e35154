use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mpgb::algebra::{Element, Field, FieldKind, Grade, MonomialOrder, PolyRing, PrimeField, Rationals};
use mpgb::bench::run_bench;
use mpgb::bifiltration::{generate_ellipse_bifiltration, read_points_csv, GridSpec, PointCloud};
use mpgb::filtration::{Multifiltration, Simplex};
use mpgb::homology::export::export_modules;
use mpgb::homology::oracle::{check_oracle_agreement, default_bound};
use mpgb::homology::{compute, HomologyError, HomologyOptions, PersistenceModules};
use mpgb::presentation::build_shifted_boundary;

#[derive(Parser)]
#[command(name = "mpgb", version, about = "Gröbner bases of multifiltered simplicial homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every face is listed and enters no later than its cofaces.
    Validate { file: PathBuf },
    /// Compute boundary, cycle and homology bases per dimension.
    Homology {
        file: PathBuf,
        /// Dimension to compute; repeatable. All dimensions by default.
        #[arg(long = "dim")]
        dims: Vec<usize>,
        /// Coefficient field: `q` or `gf:<p>`.
        #[arg(long, default_value = "q")]
        field: String,
        /// Monomial order, e.g. `pot-grlex`, `pot-lex`, `top-grlex`.
        #[arg(long, default_value = "pot-grlex")]
        order: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Verify every degree against exact linear algebra.
        #[arg(long)]
        oracle: bool,
        /// Degree bound for the oracle, e.g. `5,4`. Defaults to v' + 2.
        #[arg(long, requires = "oracle")]
        bound: Option<String>,
        /// Also emit relations among homology generators.
        #[arg(long)]
        quotient: bool,
    },
    /// Print the shifted boundary matrices.
    Matrices {
        file: PathBuf,
        #[arg(long = "dim")]
        dims: Vec<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build an ellipse bifiltration from a CSV point cloud.
    Generate {
        points: PathBuf,
        /// Direction of the first semi-axis, `dx,dy`.
        #[arg(long, default_value = "1,0")]
        direction: String,
        /// Grid `a_max,b_max,steps_a,steps_b`.
        #[arg(long)]
        grid: String,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time the pipeline on generated bifiltrations of the given sizes.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [25, 50, 100, 200])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failures split by exit code: invalid input data or everything else.
enum Failure {
    Invalid(anyhow::Error),
    Internal(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Internal(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn threads() -> Option<usize> {
    std::env::var("MPGB_THREADS").ok()?.trim().parse().ok().filter(|&t| t > 0)
}

fn read_filtration(path: &Path) -> anyhow::Result<Multifiltration> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Multifiltration::parse(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> anyhow::Result<Vec<T>> {
    text.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| anyhow!("invalid {what} `{text}`")))
        .collect()
}

fn cmd_validate(file: &Path) -> Outcome {
    let mf = read_filtration(file)?;
    let report = mf.validate();
    if report.ok() {
        println!("ok");
        return Ok(());
    }
    for v in &report.violations {
        println!("{v}");
    }
    Err(Failure::Invalid(anyhow!("{} violations", report.violations.len())))
}

fn render(f: &Element<impl std::fmt::Display>, basis: &[Simplex]) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    f.terms()
        .iter()
        .map(|t| {
            let mono = if t.mono.is_zero() { String::new() } else { format!("{}*", t.mono.monomial_string()) };
            format!("{}*{}{}", t.coeff, mono, basis[t.basis])
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn print_text<C: std::fmt::Display>(m: &PersistenceModules<C>) {
    println!("v' = {}", m.v_prime);
    println!("field {}, order {}", m.field, m.order);
    for d in &m.dimensions {
        let basis = m.bases.get(d.n).map_or(&[][..], Vec::as_slice);
        println!();
        println!("dimension {}: {} fundamental elements, rank D_{} = {}", d.n, d.fundamentals, d.n, d.d_rank);
        let sections: [(&str, &[Element<C>]); 3] = [
            ("boundaries", d.boundaries.generators()),
            ("cycles", d.cycles.generators()),
            ("homology", &d.homology),
        ];
        for (name, gens) in sections {
            println!("  {name} ({}):", gens.len());
            for g in gens {
                println!("    {}", render(g, basis));
            }
        }
        if let Some(q) = &d.quotient {
            println!("  relations ({}):", q.relations.len());
            for r in &q.relations {
                let terms: Vec<String> = r
                    .terms()
                    .iter()
                    .map(|t| format!("{}*{}*h_{}", t.coeff, t.mono.monomial_string(), t.basis + 1))
                    .collect();
                println!("    {}", terms.join(" + "));
            }
        }
        println!("  time {:.3} ms", d.stats.timings.total().as_secs_f64() * 1e3);
    }
}

struct HomologyArgs<'a> {
    dims: &'a [usize],
    format: Format,
    oracle: bool,
    bound: Option<&'a str>,
    quotient: bool,
}

fn run_homology<F: Field>(ring: &PolyRing<F>, mf: &Multifiltration, args: &HomologyArgs) -> Outcome {
    let options = HomologyOptions {
        dims: (!args.dims.is_empty()).then(|| args.dims.to_vec()),
        threads: threads(),
        quotient: args.quotient,
        ..HomologyOptions::default()
    };
    let modules = match compute(ring, mf, &options) {
        Ok(m) => m,
        Err(HomologyError::InvalidFiltration(report)) => {
            for v in &report.violations {
                eprintln!("{v}");
            }
            return Err(Failure::Invalid(anyhow!("the filtration is invalid")));
        }
        Err(e) => return Err(e.into()),
    };
    match args.format {
        Format::Text => print_text(&modules),
        Format::Json => println!("{}", serde_json::to_string_pretty(&export_modules(&modules))?),
    }
    if args.oracle {
        let bound = match args.bound {
            Some(b) => {
                let g = Grade::from(parse_list::<u32>(b, "bound")?);
                if g.nvars() != mf.nvars() {
                    return Err(Failure::Invalid(anyhow!("bound {g} needs {} coordinates", mf.nvars())));
                }
                g
            }
            None => default_bound(&modules.v_prime),
        };
        let report = check_oracle_agreement(ring, mf, &modules, &bound)?;
        eprintln!(
            "oracle: {} dimensions, {} degrees up to {bound} agree",
            report.dimensions, report.degrees
        );
    }
    Ok(())
}

fn cmd_homology(file: &Path, field: &str, order: &str, args: HomologyArgs) -> Outcome {
    let mf = read_filtration(file)?;
    let order: MonomialOrder = order.parse().map_err(|e| Failure::Invalid(anyhow!("{e}")))?;
    let field: FieldKind = field.parse().map_err(|e| Failure::Invalid(anyhow!("{e}")))?;
    let r = mf.nvars();
    match field {
        FieldKind::Rationals => run_homology(&PolyRing::new(Rationals, r, order), &mf, &args),
        FieldKind::Prime(p) => run_homology(&PolyRing::new(PrimeField::new(p)?, r, order), &mf, &args),
    }
}

fn cmd_matrices(file: &Path, dims: &[usize], format: Format) -> Outcome {
    let mf = read_filtration(file)?;
    let dims: Vec<usize> = if dims.is_empty() {
        mf.dimension().map_or(Vec::new(), |t| (1..=t).collect())
    } else {
        dims.to_vec()
    };
    let mut out = Vec::new();
    for n in dims {
        let p = build_shifted_boundary(&mf, n)?;
        match format {
            Format::Text => {
                println!("shifted boundary in dimension {n} ({} x {}):", p.rows.len(), p.columns.len());
                print!("{}", p.render());
                println!();
            }
            Format::Json => out.push(json!({
                "n": n,
                "rows": p.rows.iter().map(|s| s.vertices().to_vec()).collect::<Vec<_>>(),
                "columns": p.fundamentals.iter().zip(&p.columns).map(|(f, c)| json!({
                    "simplex": f.simplex.vertices(),
                    "grade": f.grade.as_slice(),
                    "entries": c.entries.iter().map(|&(row, v)| json!({
                        "row": row,
                        "coeff": v.to_string(),
                        "monomial": c.grade.as_slice(),
                    })).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            })),
        }
    }
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&out)?);
    }
    Ok(())
}

fn cmd_generate(points: &Path, direction: &str, grid: &str, max_dim: usize, out: &Path) -> Outcome {
    let dir = parse_list::<f64>(direction, "direction").map_err(Failure::Invalid)?;
    let g = parse_list::<f64>(grid, "grid").map_err(Failure::Invalid)?;
    let (&[dx, dy], &[a, b, na, nb]) = (dir.as_slice(), g.as_slice()) else {
        return Err(Failure::Invalid(anyhow!("expected --direction dx,dy and --grid amax,bmax,na,nb")));
    };
    if na.fract() != 0.0 || nb.fract() != 0.0 || na < 1.0 || nb < 1.0 {
        return Err(Failure::Invalid(anyhow!("grid step counts must be positive integers")));
    }
    let grid = GridSpec::new(a, b, na as u32, nb as u32).map_err(|e| Failure::Invalid(e.into()))?;
    let file = fs::File::open(points).with_context(|| format!("cannot read {}", points.display()))?;
    let pts = read_points_csv(file).with_context(|| format!("malformed CSV {}", points.display()))?;
    let cloud = PointCloud::new(pts, [dx, dy]).map_err(|e| Failure::Invalid(e.into()))?;
    let mf = generate_ellipse_bifiltration(&cloud, &grid, max_dim);
    fs::write(out, mf.to_text()).with_context(|| format!("cannot write {}", out.display()))?;
    eprintln!(
        "wrote {} simplices ({}one-critical) to {}",
        mf.len(),
        if mf.is_one_critical() { "" } else { "not " },
        out.display()
    );
    Ok(())
}

fn cmd_bench(sizes: &[usize], seed: u64) -> Outcome {
    let report = run_bench(sizes, seed, threads())?;
    println!(
        "{:>6} {:>6} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "size", "fund", "present_ms", "bound_ms", "syz_ms", "cycle_ms", "homol_ms", "wall_ms"
    );
    let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
    for r in &report.rows {
        let s = &r.stages;
        println!(
            "{:>6} {:>6} {:>12.3} {:>12.3} {:>12.3} {:>12.3} {:>12.3} {:>12.3}",
            r.size,
            r.fundamentals,
            ms(s.presentation),
            ms(s.boundaries),
            ms(s.syzygies),
            ms(s.cycles),
            ms(s.homology),
            ms(r.wall)
        );
    }
    match report.slope {
        Some(s) => println!("log-log slope {s:.3}"),
        None => println!("log-log slope n/a"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Homology { file, dims, field, order, format, oracle, bound, quotient } => cmd_homology(
            file,
            field,
            order,
            HomologyArgs {
                dims,
                format: *format,
                oracle: *oracle,
                bound: bound.as_deref(),
                quotient: *quotient,
            },
        ),
        Command::Matrices { file, dims, format } => cmd_matrices(file, dims, *format),
        Command::Generate { points, direction, grid, max_dim, out } => cmd_generate(points, direction, grid, *max_dim, out),
        Command::Bench { sizes, seed } => cmd_bench(sizes, *seed),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
