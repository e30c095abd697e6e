use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use howekit::bicrystal::{charge_report, dilate, jdt_bar, kappa, kappa_bar};
use howekit::characters::{char_product, decompose, weyl_character};
use howekit::crystal::{crystal_character, family_ops, generate_crystal_graph, DEFAULT_VERTEX_CAP};
use howekit::duality::{is_king_tableau, king_weight, star, star_inverse};
use howekit::partfn::{branching_coefficient, kostant_partition, restricted_partition, twisted_partition_c, weight_multiplicity};
use howekit::partition::{hat, parse_partition, parse_weight};
use howekit::verify::{
    injectivity_specs, verify_bijection, verify_contraction, verify_generalized, verify_howe_duality,
    verify_injectivity, verify_jdt, verify_schur_duality,
};
use howekit::weyl::positive_roots;
use howekit::{
    DiagramSpec, Family, KingElement, LaurentPolynomial, MultiPartition, Report, RootSystemId, SweepConfig,
    TensorElement,
};

#[derive(Parser)]
#[command(name = "howekit", version, about = "Exact combinatorics for symplectic Howe duality")]
struct Cli {
    /// Print machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for sweeps (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// TOML file with sweep bounds
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Allow sweeps beyond the configured bounds
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugate of the complement of a partition in the n x m box
    Hat {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Conjugate partition
    Conjugate {
        #[arg(long)]
        partition: String,
    },
    /// Kostant partition function
    Kostant {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value = "C")]
        family: Family,
        /// Evaluate P(I(beta)) for C
        #[arg(long)]
        twisted: bool,
        /// Only count roots outside the blocks of this spec, e.g. C1+A2
        #[arg(long)]
        spec: Option<DiagramSpec>,
    },
    /// Weight multiplicity K_{lambda,mu}
    WeightMult {
        #[arg(long, default_value = "C")]
        family: Family,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Branching coefficient from sp_2m to a block subalgebra
    Branch {
        #[arg(long)]
        spec: DiagramSpec,
        #[arg(long)]
        kappa: String,
        /// Components separated by '/'
        #[arg(long)]
        nu: String,
    },
    /// Irreducible character as a Laurent polynomial
    Character {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "C")]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Compute it from the crystal graph
        #[arg(long)]
        crystal: bool,
    },
    /// Decompose an invariant Laurent polynomial into irreducible characters
    Decompose {
        /// JSON list of {"exp":[..],"coef":c}, or @path
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "C")]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Decompose the tensor product attached to a spec and multipartition
    Product {
        #[arg(long)]
        spec: DiagramSpec,
        /// Components separated by '/'
        #[arg(long)]
        mu: String,
        #[arg(long)]
        n: usize,
    },
    /// Crystal graph generated from a seed element
    CrystalGraph {
        /// Columns separated by '/', barred letters negative
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "C")]
        family: Family,
        /// Emit Graphviz DOT
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Dual King element of a tensor element, or the inverse with --king
    Star {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "king")]
        element: Option<String>,
        /// King columns separated by '/', e.g. 1,2b/2
        #[arg(long)]
        king: Option<String>,
        #[arg(long)]
        n: usize,
        /// Alphabet bound, required with --king
        #[arg(long)]
        m: Option<usize>,
    },
    /// Test whether a King element is a King tableau
    KingCheck {
        #[arg(long)]
        king: String,
        #[arg(long)]
        m: usize,
    },
    /// Contraction of column j
    Kappa {
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: u32,
        /// Barred contraction between columns j and j+1
        #[arg(long, conflicts_with = "dilate")]
        bar: bool,
        /// Inverse operation
        #[arg(long)]
        dilate: bool,
    },
    /// Column jeu de taquin between columns j and j+1
    Jdt {
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: u32,
    },
    /// Charge and D statistic of a weight-zero element
    Charge {
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        n: usize,
    },
    VerifySchur(Bounds),
    VerifyHowe(Bounds),
    VerifyBijection(Bounds),
    VerifyContraction(Bounds),
    VerifyJdt(Bounds),
    VerifyGeneralized {
        /// Maximum number of blocks
        #[arg(long)]
        r: Option<usize>,
        /// Maximum block size
        #[arg(long)]
        block: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Search for coinciding branching vectors
    Injectivity {
        /// Specs to scan (repeatable); default is the built-in list
        #[arg(long)]
        spec: Vec<DiagramSpec>,
        #[arg(long)]
        part_bound: Option<u32>,
        #[arg(long)]
        n_bound: Option<u32>,
    },
}

/// Upper bounds for a sweep; omitted values come from the config.
#[derive(Args)]
struct Bounds {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

enum Failure {
    Input(String),
    Verification(Report),
}

impl From<howekit::Error> for Failure {
    fn from(e: howekit::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn input_err<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Input(msg.into()))
}

fn parse_element(s: &str, n: usize) -> Result<TensorElement, Failure> {
    let s = s.trim();
    let cols: Vec<Vec<i32>> = if s.starts_with('[') {
        serde_json::from_str(s).map_err(|e| Failure::Input(format!("bad element {s:?}: {e}")))?
    } else {
        s.split('/')
            .map(|c| {
                c.split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i32>().map_err(|e| Failure::Input(format!("bad letter {t:?}: {e}"))))
                    .collect()
            })
            .collect::<Result<_, _>>()?
    };
    Ok(TensorElement::from_vecs(cols, n)?)
}

fn parse_king(s: &str, m: usize) -> Result<KingElement, Failure> {
    let s = s.trim();
    let cols: Vec<Vec<String>> = if s.starts_with('[') {
        serde_json::from_str(s).map_err(|e| Failure::Input(format!("bad King element {s:?}: {e}")))?
    } else {
        s.split('/')
            .map(|c| c.split(',').map(str::trim).filter(|t| !t.is_empty()).map(String::from).collect())
            .collect()
    };
    let refs: Vec<Vec<&str>> = cols.iter().map(|c| c.iter().map(String::as_str).collect()).collect();
    let slices: Vec<&[&str]> = refs.iter().map(Vec::as_slice).collect();
    Ok(KingElement::parse(&slices, m)?)
}

fn parse_multi(s: &str, blocks: &[usize]) -> Result<MultiPartition, Failure> {
    let comps = s.split('/').map(parse_partition).collect::<howekit::Result<Vec<_>>>()?;
    if comps.len() != blocks.len() {
        return input_err(format!("{} components given for {} blocks", comps.len(), blocks.len()));
    }
    Ok(MultiPartition::new(comps, blocks.to_vec())?)
}

fn id_for(family: Family, rank: usize) -> RootSystemId {
    match family {
        Family::A => RootSystemId::a(rank),
        Family::C => RootSystemId::c(rank),
    }
}

struct Ctx {
    json: bool,
    cfg: SweepConfig,
}

impl Ctx {
    /// JSON when requested, otherwise the human form.
    fn emit<T: Serialize>(&self, value: &T, human: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string(value).expect("serializable"));
        } else {
            println!("{}", human());
        }
    }

    fn bound(&self, what: &str, given: Option<usize>, default: usize) -> Result<usize, Failure> {
        let v = given.unwrap_or(default);
        self.cfg.guard(what, v, default)?;
        Ok(v)
    }

    fn report(&self, r: Report) -> Outcome {
        if !r.ok() {
            return Err(Failure::Verification(r));
        }
        self.emit(&r, || format!("ok: {} cells in {} ms", r.cells, r.runtime_ms));
        Ok(())
    }
}

fn element_json(b: &Option<TensorElement>) -> Value {
    b.as_ref().map_or(Value::Null, |b| json!(b.columns))
}

fn element_human(b: &Option<TensorElement>) -> String {
    b.as_ref().map_or_else(|| "none".into(), TensorElement::to_string)
}

fn run(cli: Cli) -> Outcome {
    let cfg = match &cli.config {
        Some(path) => SweepConfig::load(path)?,
        None => SweepConfig::default(),
    };
    let cfg = SweepConfig { allow_large: cfg.allow_large || cli.allow_large, ..cfg };
    let ctx = Ctx { json: cli.json, cfg };
    match cli.command {
        Command::Hat { partition, n, m } => {
            let h = hat(&parse_partition(&partition)?, n, m)?;
            println!("{}", serde_json::to_string(&h).expect("serializable"));
        }
        Command::Conjugate { partition } => {
            let c = parse_partition(&partition)?.conjugate();
            println!("{}", serde_json::to_string(&c).expect("serializable"));
        }
        Command::Kostant { beta, family, twisted, spec } => {
            let beta = parse_weight(&beta)?;
            let count = match (twisted, spec) {
                (true, Some(_)) => return input_err("--twisted and --spec are exclusive"),
                (true, None) => twisted_partition_c(&beta, beta.len())?,
                (false, Some(spec)) => restricted_partition(&spec, &beta)?,
                (false, None) => kostant_partition(&positive_roots(id_for(family, beta.len())), &beta)?,
            };
            println!("{count}");
        }
        Command::WeightMult { family, rank, lambda, mu } => {
            let k = weight_multiplicity(id_for(family, rank), &parse_partition(&lambda)?, &parse_weight(&mu)?)?;
            println!("{k}");
        }
        Command::Branch { spec, kappa, nu } => {
            let nu = parse_multi(&nu, &spec.sizes)?;
            println!("{}", branching_coefficient(&parse_partition(&kappa)?, &spec, &nu)?);
        }
        Command::Character { lambda, family, n, crystal } => {
            let lam = parse_partition(&lambda)?;
            let ch = if crystal { crystal_character(&lam, family, n)? } else { (*weyl_character(&lam, family, n)?).clone() };
            ctx.emit(&ch, || ch.to_string());
        }
        Command::Decompose { poly, family, n } => {
            let text = match poly.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?,
                None => poly,
            };
            let d = decompose(&LaurentPolynomial::from_json(&text, n)?, family, n)?;
            ctx.emit(&d, || d.mults.iter().map(|(l, k)| format!("{l}: {k}")).collect::<Vec<_>>().join("\n"));
        }
        Command::Product { spec, mu, n } => {
            let mu = parse_multi(&mu, &spec.sizes)?;
            let d = decompose(&char_product(&mu, &spec, n)?, Family::C, n)?;
            ctx.emit(&d, || d.mults.iter().map(|(l, k)| format!("{l}: {k}")).collect::<Vec<_>>().join("\n"));
        }
        Command::CrystalGraph { seed, n, family, dot, cap } => {
            let g = generate_crystal_graph(&parse_element(&seed, n)?, &family_ops(family, n), cap)?;
            if dot {
                print!("{}", g.to_dot());
            } else {
                ctx.emit(&g, || {
                    let mut s = format!("{} vertices, {} edges", g.vertices.len(), g.edges.len());
                    for (a, b, i) in &g.edges {
                        s.push_str(&format!("\n{} -{i}-> {}", g.vertices[*a], g.vertices[*b]));
                    }
                    s
                });
            }
        }
        Command::Star { element, king, n, m } => match (element, king) {
            (Some(e), None) => {
                let t = star(&parse_element(&e, n)?);
                let w = king_weight(&t);
                ctx.emit(&json!({"king": t, "weight": w}), || format!("{t}\nrows: {}\nweight: {w}", t.rows_string()));
            }
            (None, Some(k)) => {
                let Some(m) = m else { return input_err("--m is required with --king") };
                let b = star_inverse(&parse_king(&k, m)?, n)?;
                ctx.emit(&b.columns, || b.to_string());
            }
            _ => return input_err("give exactly one of --element and --king"),
        },
        Command::KingCheck { king, m } => {
            let ok = is_king_tableau(&parse_king(&king, m)?)?;
            println!("{ok}");
        }
        Command::Kappa { element, n, j, bar, dilate: inverse } => {
            let b = parse_element(&element, n)?;
            if j == 0 || j as usize > b.len() || (bar && j as usize >= b.len()) {
                return input_err(format!("column index {j} out of range"));
            }
            let out = if bar {
                kappa_bar(j, &b)
            } else if inverse {
                dilate(j, &b)
            } else {
                kappa(j, &b)
            };
            ctx.emit(&element_json(&out), || element_human(&out));
        }
        Command::Jdt { element, n, j } => {
            let b = parse_element(&element, n)?;
            if j == 0 || j as usize >= b.len() {
                return input_err(format!("column index {j} out of range"));
            }
            let out = jdt_bar(j, &b);
            ctx.emit(&element_json(&out), || element_human(&out));
        }
        Command::Charge { element, n } => {
            let r = charge_report(&parse_element(&element, n)?)?;
            ctx.emit(&r, || format!("charge {} D {} delta {:?} gamma {:?}", r.charge, r.d, r.delta, r.gamma));
        }
        Command::VerifySchur(b) => {
            let (n, m) = (ctx.bound("n", b.n, ctx.cfg.schur_max)?, ctx.bound("m", b.m, ctx.cfg.schur_max)?);
            ctx.report(verify_schur_duality(n, m))?;
        }
        Command::VerifyHowe(b) => {
            let (n, m) = (ctx.bound("n", b.n, ctx.cfg.howe_max)?, ctx.bound("m", b.m, ctx.cfg.howe_max)?);
            ctx.report(verify_howe_duality(n, m))?;
        }
        Command::VerifyBijection(b) => {
            let (n, m) = (ctx.bound("n", b.n, ctx.cfg.bijection_max)?, ctx.bound("m", b.m, ctx.cfg.bijection_max)?);
            ctx.report(verify_bijection(n, m))?;
        }
        Command::VerifyContraction(b) => {
            let (n, m) = (ctx.bound("n", b.n, ctx.cfg.crystal_n_max)?, ctx.bound("m", b.m, ctx.cfg.crystal_m_max)?);
            ctx.report(verify_contraction(n, m))?;
        }
        Command::VerifyJdt(b) => {
            let (n, m) = (ctx.bound("n", b.n, ctx.cfg.crystal_n_max)?, ctx.bound("m", b.m, ctx.cfg.crystal_m_max)?);
            ctx.report(verify_jdt(n, m))?;
        }
        Command::VerifyGeneralized { r, block, n } => {
            let r = ctx.bound("r", r, ctx.cfg.generalized_r_max)?;
            let block = ctx.bound("block", block, ctx.cfg.generalized_block_max)?;
            let n = ctx.bound("n", n, ctx.cfg.generalized_n_max)?;
            ctx.report(verify_generalized(r, block, n))?;
        }
        Command::Injectivity { spec, part_bound, n_bound } => {
            let pb = ctx.bound("part-bound", part_bound.map(|x| x as usize), ctx.cfg.injectivity_part_bound as usize)?;
            let nb = ctx.bound("n-bound", n_bound.map(|x| x as usize), ctx.cfg.injectivity_n_bound as usize)?;
            let specs = if spec.is_empty() { injectivity_specs(ctx.cfg.generalized_block_max) } else { spec };
            ctx.report(verify_injectivity(&specs, pb as u32, nb as u32))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(r)) => {
            println!("{}", serde_json::to_string(&r).expect("serializable"));
            ExitCode::from(1)
        }
    }
}
