//! Command-line front end.
//!
//! Every command reads and writes the JSON layouts of [`HomJson`] and
//! [`SpaceJson`] and prints a [`Report`] (or, for `gen` and `export`, the
//! artifact itself). The process exits non-zero when a report check fails.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::actions::{empirical_irs, hom_metric, invariance_defect, schreier_ball, HomJson, Homomorphism};
use crate::analysis::{
    ball_stability_check, boundary_ratio, core_check, folner_search, generates_classwise_symmetric,
    genericity_sweep, realizes_tau_fraction, transitivity_degree, Property,
};
use crate::constructions::{
    build_corefree_perturbation, build_folner_perturbation, build_ht_perturbation, orbits_within_blocks,
    periodic_truncate, splice,
};
use crate::error::{Error, Result};
use crate::finite_model::{uniform_metric, FiniteSpace, FullGroupElement};
use crate::free_words::ReducedWord;
use crate::rational::{self, to_text, Rational};
use crate::report::Report;
use crate::rng::{derive, streams};

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "IRSLAB_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "irslab", version, about = "Free-group actions in finite full groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a space or a homomorphism.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Build a perturbed homomorphism.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Run a diagnostic on a homomorphism.
    #[command(subcommand)]
    Analyze(AnalyzeCommand),
    /// Fraction of random perturbations satisfying a property.
    Sweep(SweepArgs),
    /// Write a homomorphism as JSON, its stabilizer distribution as CSV, or
    /// a Schreier ball as DOT.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// `s1` acts by the odometer `x ↦ x+1 mod N`, the rest at random.
    LeanAperiodic,
    /// Every generator at random.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    /// Number of atoms is `2^log2`.
    #[arg(long, default_value_t = 10)]
    pub log2: u32,
    /// `single`, or `blocks:k` for classes of `2^k` consecutive atoms.
    #[arg(long, default_value = "single")]
    pub classes: String,
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    Space {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Hom {
        #[arg(long, value_enum, default_value = "lean-aperiodic")]
        model: Model,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct HomIo {
    /// Input homomorphism (JSON).
    #[arg(long)]
    pub hom: PathBuf,
    /// Where to write the constructed homomorphism.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ConstructCommand {
    /// Replace one generator by its splice with a target on a set.
    Splice {
        #[command(flatten)]
        io: HomIo,
        /// 1-based generator index.
        #[arg(long, default_value_t = 1)]
        generator: usize,
        /// Atoms of the set, separated by commas or spaces.
        #[arg(long)]
        set: String,
        /// Target permutation as its list of images.
        #[arg(long, conflicts_with = "seed")]
        target: Option<String>,
        /// Draw a random class-preserving target instead.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Close every generator into cycles inside the level-`j` blocks.
    Periodic {
        #[command(flatten)]
        io: HomIo,
        #[arg(long)]
        level: u32,
    },
    /// Plant finite classes of the given sizes.
    Folner {
        #[command(flatten)]
        io: HomIo,
        #[arg(long, value_parser = parse_rational)]
        epsilon: Rational,
        #[arg(long)]
        sizes: String,
    },
    /// Make `s2` realize `τ` on a Rokhlin tower.
    Ht {
        #[command(flatten)]
        io: HomIo,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        tau: String,
        #[arg(long, value_parser = parse_rational)]
        epsilon: Rational,
    },
    /// Make a word act non-trivially on every orbit.
    Corefree {
        #[command(flatten)]
        io: HomIo,
        #[arg(long)]
        word: String,
        #[arg(long, value_parser = parse_rational)]
        epsilon: Rational,
    },
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeCommand {
    /// Orbit-size distribution.
    Index {
        #[arg(long)]
        hom: PathBuf,
    },
    /// Empirical stabilizer distribution and its invariance defect.
    Irs {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        /// Also write the distribution as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Search a `1/l`-Følner set in the orbit of an atom.
    Folner {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long, default_value_t = 0)]
        atom: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
    /// Mass of the orbits on which a word acts trivially.
    Core {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Fraction of atoms realizing `τ`.
    Realize {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        tau: String,
        /// Defaults to twice the number of atoms.
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Transitivity degree on the orbit of an atom.
    Degree {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long, default_value_t = 0)]
        atom: usize,
        /// Defaults to the orbit size.
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Whether every class carries its full symmetric group.
    Symmetric {
        #[arg(long)]
        hom: PathBuf,
    },
    /// Fraction of atoms whose balls differ between two actions.
    Stability {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long)]
        other: PathBuf,
        #[arg(long, default_value_t = 1)]
        radius: usize,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub hom: PathBuf,
    #[arg(long, value_parser = parse_rational)]
    pub epsilon: Rational,
    #[arg(long)]
    pub samples: usize,
    /// `folner:<l>:<R>`, `realizes:<m>:<τ>:<R>`, `corefree:<word>`,
    /// `periodic:<j>`, `always` or `never`.
    #[arg(long)]
    pub property: String,
    #[arg(long)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long)]
    pub hom: PathBuf,
    #[arg(long, value_enum)]
    pub format: Format,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub radius: usize,
    /// Root of the exported Schreier ball.
    #[arg(long, default_value_t = 0)]
    pub atom: usize,
}

/// What a command prints and whether its checks passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub passed: bool,
}

impl Outcome {
    fn artifact(stdout: String) -> Self {
        Outcome { stdout, passed: true }
    }

    fn report(report: &Report) -> Self {
        Outcome {
            stdout: report.to_json(),
            passed: report.passed,
        }
    }
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Usage(format!("not a list of integers: {s:?}"))))
        .collect()
}

fn build_space(args: &SpaceArgs) -> Result<FiniteSpace> {
    match args.classes.as_str() {
        "single" => FiniteSpace::dyadic(args.log2),
        other => match other.strip_prefix("blocks:").map(str::parse::<u32>) {
            Some(Ok(k)) => FiniteSpace::dyadic_blocks(args.log2, k),
            _ => Err(Error::Usage(format!("unknown class layout {other:?}"))),
        },
    }
}

/// Generator images for `gen hom`: the odometer first for the lean model,
/// the rest class-preserving and uniform from the seed.
pub fn generate_hom(space: FiniteSpace, model: Model, rank: usize, seed: u64) -> Result<Homomorphism> {
    if rank == 0 {
        return Err(Error::Usage("rank must be at least 1".into()));
    }
    let mut rng = derive(seed, streams::GEN_HOM, 0);
    let n = space.n_atoms();
    let mut gens = Vec::with_capacity(rank);
    if model == Model::LeanAperiodic {
        let odometer = FullGroupElement::odometer(n);
        odometer.check_in(&space)?;
        gens.push(odometer);
    }
    while gens.len() < rank {
        gens.push(FullGroupElement::random_in(&space, &mut rng));
    }
    Homomorphism::new(space, gens)
}

pub fn read_hom(path: &Path) -> Result<Homomorphism> {
    let json: HomJson = serde_json::from_str(&fs::read_to_string(path)?)?;
    Homomorphism::from_json(&json)
}

pub fn hom_to_json(hom: &Homomorphism) -> String {
    let mut s = serde_json::to_string_pretty(&hom.to_json()).expect("hom serializes");
    s.push('\n');
    s
}

fn write_or_print(out: &Option<PathBuf>, text: String) -> Result<Outcome> {
    match out {
        Some(path) => {
            fs::write(path, &text)?;
            Ok(Outcome::artifact(String::new()))
        }
        None => Ok(Outcome::artifact(text)),
    }
}

fn save(io: &HomIo, hom: &Homomorphism, report: &mut Report) -> Result<()> {
    report.input("hom", io.hom.display().to_string());
    if let Some(path) = &io.out {
        fs::write(path, hom_to_json(hom))?;
        report.output("hom", path.display().to_string());
    }
    Ok(())
}

fn rationals(values: &[Rational]) -> Value {
    Value::from(values.iter().map(to_text).collect::<Vec<_>>())
}

/// Parses arguments (without the program name) and runs the command.
pub fn run<I, T>(args: I) -> Result<Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("irslab")).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::Usage(e.to_string()))?;
    execute(cli)
}

/// Builds the global thread pool from `IRSLAB_WORKERS` when it is set.
pub fn configure_workers() -> Result<()> {
    if let Ok(value) = std::env::var(WORKERS_ENV) {
        let workers: usize = value
            .parse()
            .map_err(|_| Error::Usage(format!("{WORKERS_ENV} must be a positive integer")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| Error::Usage(e.to_string()))?;
    }
    Ok(())
}

pub fn execute(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Gen(cmd) => gen(cmd),
        Command::Construct(cmd) => construct(cmd),
        Command::Analyze(cmd) => analyze(cmd),
        Command::Sweep(args) => sweep(args),
        Command::Export(args) => export(args),
    }
}

fn gen(cmd: GenCommand) -> Result<Outcome> {
    match cmd {
        GenCommand::Space { space, out } => {
            let space = build_space(&space)?;
            let mut text = serde_json::to_string_pretty(&space.to_json())?;
            text.push('\n');
            write_or_print(&out, text)
        }
        GenCommand::Hom {
            model,
            rank,
            seed,
            space,
            out,
        } => {
            let hom = generate_hom(build_space(&space)?, model, rank, seed)?;
            write_or_print(&out, hom_to_json(&hom))
        }
    }
}

fn construct(cmd: ConstructCommand) -> Result<Outcome> {
    match cmd {
        ConstructCommand::Splice {
            io,
            generator,
            set,
            target,
            seed,
        } => {
            let alpha = read_hom(&io.hom)?;
            if generator == 0 || generator > alpha.rank() {
                return Err(Error::BadGenerator {
                    index: generator as i64,
                    rank: alpha.rank(),
                });
            }
            let space = alpha.space();
            let set = parse_list(&set)?;
            let tau = match (target, seed) {
                (Some(t), _) => FullGroupElement::new(space, parse_list(&t)?)?,
                (None, Some(s)) => FullGroupElement::random_in(space, &mut derive(s, streams::GEN_HOM, 1)),
                (None, None) => return Err(Error::Usage("splice needs --target or --seed".into())),
            };
            let sigma = alpha.gen(generator - 1);
            let spliced = splice(space, sigma, &set, &tau)?;
            let beta = alpha.with_generator(generator - 1, spliced.clone())?;
            let mut report = Report::new("construct splice");
            save(&io, &beta, &mut report)?;
            let distance = uniform_metric(sigma, &spliced)?;
            let mu = space.measure(set.len());
            report
                .input("generator", generator)
                .input("set", set.clone())
                .input("target", tau.forward().to_vec())
                .output_rational("distance", &distance)
                .output_rational("set_measure", &mu)
                .check(
                    "agrees_on_set",
                    set.iter().all(|&x| spliced.apply(x) == tau.apply(x)),
                    "spliced map equals the target on the set",
                )
                .check(
                    "distance_at_most_twice_set_measure",
                    distance <= mu * Rational::from_integer(2),
                    format!("{} <= 2·{}", to_text(&distance), to_text(&mu)),
                )
                .check("in_full_group", spliced.is_in(space), "class preserving");
            Ok(Outcome::report(&report))
        }
        ConstructCommand::Periodic { io, level } => {
            let alpha = read_hom(&io.hom)?;
            let t = periodic_truncate(&alpha, level)?;
            let mut report = Report::new("construct periodic");
            save(&io, &t.hom, &mut report)?;
            let distances = alpha
                .gens()
                .iter()
                .zip(t.hom.gens())
                .map(|(a, b)| uniform_metric(a, b))
                .collect::<Result<Vec<_>>>()?;
            report
                .input("level", level)
                .output("distances", rationals(&distances))
                .output("exit_mass", rationals(&t.exit_mass))
                .check(
                    "orbits_within_blocks",
                    orbits_within_blocks(&t.hom, level)?,
                    format!("level {level}"),
                )
                .check(
                    "distance_equals_exit_mass",
                    distances == t.exit_mass,
                    "per generator",
                );
            Ok(Outcome::report(&report))
        }
        ConstructCommand::Folner { io, epsilon, sizes } => {
            let alpha = read_hom(&io.hom)?;
            let sizes = parse_list(&sizes)?;
            let c = build_folner_perturbation(&alpha, epsilon, &sizes)?;
            let mut report = Report::new("construct folner");
            save(&io, &c.hom, &mut report)?;
            let distance = hom_metric(&alpha, &c.hom)?;
            let r = c.hom.rank() as i64;
            let ratios: Vec<Rational> = c.classes.iter().map(|class| boundary_ratio(&c.hom, class)).collect();
            let within = c
                .classes
                .iter()
                .zip(&ratios)
                .all(|(class, q)| *q <= Rational::new(2 * (r - 1), class.len() as i64));
            report
                .input("epsilon", to_text(&epsilon))
                .input("sizes", sizes.clone())
                .output_rational("distance", &distance)
                .output("boundary_ratios", rationals(&ratios))
                .output("classes", json!(c.classes))
                .check(
                    "distance_at_most_epsilon",
                    distance <= epsilon,
                    format!("{} <= {}", to_text(&distance), to_text(&epsilon)),
                )
                .check("boundary_ratio_bound", within, "ratio <= 2(r-1)/n for every class");
            Ok(Outcome::report(&report))
        }
        ConstructCommand::Ht { io, m, tau, epsilon } => {
            let alpha = read_hom(&io.hom)?;
            let tau = parse_list(&tau)?;
            let c = build_ht_perturbation(&alpha, m, &tau, epsilon)?;
            let mut report = Report::new("construct ht");
            save(&io, &c.hom, &mut report)?;
            let distance = hom_metric(&alpha, &c.hom)?;
            let radius = 2 * max_hitting_time(c.hom.gen(0), &c.base) + 1;
            let fraction = realizes_tau_fraction(&c.hom, m, &tau, radius)?;
            report
                .input("epsilon", to_text(&epsilon))
                .input("m", m)
                .input("tau", tau.clone())
                .output_rational("distance", &distance)
                .output("base_size", c.base.len())
                .output("realize_radius", radius)
                .output_rational("realized_fraction", &fraction)
                .check(
                    "distance_below_epsilon",
                    distance < epsilon,
                    format!("{} < {}", to_text(&distance), to_text(&epsilon)),
                )
                .check(
                    "realized_everywhere",
                    fraction == rational::one(),
                    format!("fraction {} at radius {radius}", to_text(&fraction)),
                );
            Ok(Outcome::report(&report))
        }
        ConstructCommand::Corefree { io, word, epsilon } => {
            let alpha = read_hom(&io.hom)?;
            let g = ReducedWord::parse(alpha.rank(), &word)?;
            let c = build_corefree_perturbation(&alpha, &g, epsilon)?;
            let mut report = Report::new("construct corefree");
            save(&io, &c.hom, &mut report)?;
            let distance = hom_metric(&alpha, &c.hom)?;
            let trivial = core_check(&c.hom, &g)?;
            report
                .input("epsilon", to_text(&epsilon))
                .input("word", g.to_string())
                .output_rational("distance", &distance)
                .output("core", c.core.to_string())
                .output("tau", c.tau.clone())
                .output_rational("trivial_orbit_mass", &trivial)
                .check(
                    "distance_below_epsilon",
                    distance < epsilon,
                    format!("{} < {}", to_text(&distance), to_text(&epsilon)),
                )
                .check(
                    "nontrivial_on_every_orbit",
                    trivial == rational::zero(),
                    format!("trivial mass {}", to_text(&trivial)),
                );
            Ok(Outcome::report(&report))
        }
    }
}

/// `max_y min{n ≥ 0 : σ^n y ∈ base}` for a single-cycle `σ`.
fn max_hitting_time(sigma: &FullGroupElement, base: &[usize]) -> usize {
    let n = sigma.len();
    let mut in_base = vec![false; n];
    for &x in base {
        in_base[x] = true;
    }
    let Some(&start) = base.first() else { return n };
    // walk backwards from a base point, counting steps since the last hit
    let mut worst = 0;
    let mut steps = 0;
    let mut y = sigma.apply_inverse(start);
    for _ in 1..n {
        steps = if in_base[y] { 0 } else { steps + 1 };
        worst = worst.max(steps);
        y = sigma.apply_inverse(y);
    }
    worst
}

fn analyze(cmd: AnalyzeCommand) -> Result<Outcome> {
    match cmd {
        AnalyzeCommand::Index { hom } => {
            let alpha = read_hom(&hom)?;
            let dist = alpha.index_distribution();
            let total = dist.values().fold(rational::zero(), |a, b| a + b);
            let mut report = Report::new("analyze index");
            report
                .input("hom", hom.display().to_string())
                .output(
                    "distribution",
                    dist.iter().map(|(k, v)| (k.to_string(), Value::from(to_text(v)))).collect::<serde_json::Map<_, _>>(),
                )
                .check("total_mass_one", total == rational::one(), to_text(&total));
            Ok(Outcome::report(&report))
        }
        AnalyzeCommand::Irs { hom, radius, csv } => {
            let alpha = read_hom(&hom)?;
            let irs = empirical_irs(&alpha, radius);
            let defect = invariance_defect(&alpha, radius);
            if let Some(path) = &csv {
                fs::write(path, irs.to_csv())?;
            }
            let mut report = Report::new("analyze irs");
            report
                .input("hom", hom.display().to_string())
                .input("radius", radius)
                .output("support_size", irs.support_size())
                .output_rational("invariance_defect", &defect)
                .check(
                    "conjugation_invariant",
                    defect == rational::zero(),
                    format!("defect {}", to_text(&defect)),
                );
            Ok(Outcome::report(&report))
        }
        AnalyzeCommand::Folner { hom, atom, l, radius } => {
            let alpha = read_hom(&hom)?;
            check_atom(&alpha, atom)?;
            let res = folner_search(&alpha, atom, l, radius);
            let mut report = Report::new("analyze folner");
            report
                .input("hom", hom.display().to_string())
                .input("atom", atom)
                .input("l", l)
                .input("radius", radius)
                .output("orbit_size", res.orbit_size);
            if let Some((set, ratio)) = &res.best {
                report.output("set", set.clone()).output_rational("ratio", ratio);
            }
            report.check(
                "ratio_below_one_over_l",
                res.success,
                match &res.best {
                    Some((_, ratio)) => format!("{} < 1/{l}", to_text(ratio)),
                    None => "no proper subset of at most half the orbit".into(),
                },
            );
            Ok(Outcome::report(&report))
        }
        AnalyzeCommand::Core { hom, word } => {
            let alpha = read_hom(&hom)?;
            let g = ReducedWord::parse(alpha.rank(), &word)?;
            let trivial = core_check(&alpha, &g)?;
            let mut report = Report::new("analyze core");
            report
                .input("hom", hom.display().to_string())
                .input("word", g.to_string())
                .output_rational("trivial_orbit_mass", &trivial)
                .check(
                    "nontrivial_on_every_orbit",
                    trivial == rational::zero(),
                    format!("trivial mass {}", to_text(&trivial)),
                );
            Ok(Outcome::report(&report))
        }
        AnalyzeCommand::Realize { hom, m, tau, radius } => {
            let alpha = read_hom(&hom)?;
            let tau = parse_list(&tau)?;
            let radius = radius.unwrap_or(2 * alpha.n_atoms());
            let fraction = realizes_tau_fraction(&alpha, m, &tau, radius)?;
            let mut report = Report::new("analyze realize");
            report
                .input("hom", hom.display().to_string())
                .input("m", m)
                .input("tau", tau)
                .input("radius", radius)
                .output_rational("fraction", &fraction)
                .check(
                    "realized_everywhere",
                    fraction == rational::one(),
                    format!("fraction {}", to_text(&fraction)),
                );
            Ok(Outcome::report(&report))
        }
        AnalyzeCommand::Degree { hom, atom, k_max } => {
            let alpha = read_hom(&hom)?;
            check_atom(&alpha, atom)?;
            let orbit_size = alpha.orbit(atom).len();
            let k_max = k_max.unwrap_or(orbit_size);
            let degree = transitivity_degree(&alpha, atom, k_max)?;
            let mut report = Report::new("analyze degree");
            report
                .input("hom", hom.display().to_string())
                .input("atom", atom)
                .input("k_max", k_max)
                .output("orbit_size", orbit_size)
                .output("degree", degree);
            Ok(Outcome::report(&report))
        }
        AnalyzeCommand::Symmetric { hom } => {
            let alpha = read_hom(&hom)?;
            let res = generates_classwise_symmetric(&alpha)?;
            let mut report = Report::new("analyze symmetric");
            report
                .input("hom", hom.display().to_string())
                .output("symmetric", res.symmetric)
                .check(
                    "degree_equals_orbit_size",
                    !res.symmetric || res.degrees_consistent,
                    "checked on every orbit when symmetric",
                );
            Ok(Outcome::report(&report))
        }
        AnalyzeCommand::Stability { hom, other, radius } => {
            let alpha = read_hom(&hom)?;
            let beta = read_hom(&other)?;
            let c = ball_stability_check(&alpha, &beta, radius)?;
            let mut report = Report::new("analyze stability");
            report
                .input("hom", hom.display().to_string())
                .input("other", other.display().to_string())
                .input("radius", radius)
                .output_rational("delta", &c.delta)
                .output_rational("observed", &c.observed)
                .output_rational("bound", &c.bound)
                .check(
                    "observed_within_bound",
                    c.holds,
                    format!("{} <= {}", to_text(&c.observed), to_text(&c.bound)),
                );
            Ok(Outcome::report(&report))
        }
    }
}

fn check_atom(hom: &Homomorphism, atom: usize) -> Result<()> {
    if atom >= hom.n_atoms() {
        return Err(Error::AtomOutOfRange {
            atom,
            n_atoms: hom.n_atoms(),
        });
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> Result<Outcome> {
    let alpha = read_hom(&args.hom)?;
    let property: Property = args.property.parse()?;
    let fraction = genericity_sweep(&alpha, args.epsilon, args.samples, &property, args.seed)?;
    let mut report = Report::new("sweep");
    report
        .input("hom", args.hom.display().to_string())
        .input("epsilon", to_text(&args.epsilon))
        .input("samples", args.samples)
        .input("property", property.to_string())
        .input("seed", args.seed)
        .output_rational("fraction", &fraction);
    Ok(Outcome::report(&report))
}

fn export(args: ExportArgs) -> Result<Outcome> {
    let alpha = read_hom(&args.hom)?;
    let text = match args.format {
        Format::Json => hom_to_json(&alpha),
        Format::Csv => empirical_irs(&alpha, args.radius).to_csv(),
        Format::Dot => {
            check_atom(&alpha, args.atom)?;
            schreier_ball(&alpha, args.atom, args.radius).to_dot()
        }
    };
    fs::write(&args.out, text)?;
    Ok(Outcome::artifact(String::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hitting_time() {
        let sigma = FullGroupElement::odometer(10);
        assert_eq!(max_hitting_time(&sigma, &[0, 5]), 4);
        assert_eq!(max_hitting_time(&sigma, &[3]), 9);
        assert_eq!(max_hitting_time(&sigma, &(0..10).collect::<Vec<_>>()), 0);
    }

    #[test]
    fn lists_and_layouts() {
        assert_eq!(parse_list("1 0, 2").unwrap(), vec![1, 0, 2]);
        assert!(parse_list("1 x").is_err());
        let blocks = SpaceArgs {
            log2: 4,
            classes: "blocks:2".into(),
        };
        assert_eq!(build_space(&blocks).unwrap().n_classes(), 4);
        let bad = SpaceArgs {
            log2: 4,
            classes: "stripes".into(),
        };
        assert!(build_space(&bad).is_err());
    }

    #[test]
    fn lean_model_needs_one_class() {
        let space = FiniteSpace::dyadic_blocks(4, 2).unwrap();
        assert!(generate_hom(space, Model::LeanAperiodic, 2, 1).is_err());
        let space = FiniteSpace::dyadic_blocks(4, 2).unwrap();
        assert!(generate_hom(space, Model::Random, 2, 1).is_ok());
    }
}
