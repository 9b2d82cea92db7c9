//! `fano`: command-line front end for the Fano polygon toolkit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use fano_core::barycentric::{type_bk, DEFAULT_CAP};
use fano_core::constructions::{make_phk, phk_vertices, refine_lattice, search_ke_quads, SearchConfig};
use fano_core::ehrhart::{dual_dilation_counts, heights_from_series};
use fano_core::mutation::{count_distinguished, enumerate_mutations, explore_class, mutate, ClassCaps, MutationSpec};
use fano_core::reference::fixtures;
use fano_core::report::analyze;
use fano_core::{DualVector, FanoError, LatticePoint, LatticePolygon};

#[derive(Parser)]
#[command(name = "fano", version, about = "Exact computations with Fano lattice polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report on a polygon.
    Analyze {
        /// Vertex list such as "[[1,0],[0,1],[-1,-1]]", or a file containing one.
        polygon: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Explore the mutation class of a Fano polygon.
    Class {
        polygon: String,
        #[arg(long, default_value_t = ClassCaps::default().max_polygons)]
        max_polygons: usize,
        #[arg(long, default_value_t = ClassCaps::default().max_boundary_points)]
        max_boundary: i64,
    },
    /// Apply one mutation, or list every mutation when no grading is given.
    Mutate {
        polygon: String,
        /// Grading as "[a,b]".
        #[arg(long)]
        w: Option<String>,
        /// Primitive factor direction as "[x,y]"; defaults to the kernel direction of w.
        #[arg(long)]
        d: Option<String>,
        /// Factor multiplicity.
        #[arg(long, default_value_t = 1)]
        k: i64,
    },
    /// Iterate the barycentric transformation.
    Bary {
        polygon: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// The hexagon P(h, k).
    Phk {
        #[arg(allow_negative_numbers = true)]
        h: i64,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        /// Build the vertex list without checking that (h, k) is admissible.
        #[arg(long)]
        raw: bool,
    },
    /// Rewrite a polygon in a refined lattice N + (1/k) v Z.
    Refine {
        polygon: String,
        #[arg(long)]
        k: i64,
        /// Vector v as "[x,y]".
        #[arg(long)]
        v: String,
    },
    /// Search for Kähler–Einstein quadrilaterals from a JSON config of parameter ranges.
    SearchKe { config: PathBuf },
    /// Lattice point counts of dilations of the dual polygon.
    Ehrhart {
        polygon: String,
        #[arg(long = "k-max", default_value_t = 10)]
        k_max: usize,
        /// Also recover long-edge heights from the series.
        #[arg(long)]
        heights: bool,
    },
    /// Replay every reference fixture; one line per fixture.
    VerifyPaper,
}

enum Failure {
    Verify,
    Parse(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify => 1,
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }
}

impl From<FanoError> for Failure {
    fn from(e: FanoError) -> Self {
        match e {
            FanoError::Parse(_) => Failure::Parse(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_input(arg: &str) -> Result<String, Failure> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with('[') && path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

/// Any failure while reading a polygon, geometric or syntactic, is a parse error.
fn parse_polygon(arg: &str) -> Result<LatticePolygon, Failure> {
    read_input(arg)?.trim().parse().map_err(|e: FanoError| Failure::Parse(e.to_string()))
}

fn parse_pair(what: &str, s: &str) -> Result<[i64; 2], Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Parse(format!("{what}: expected [x,y], {e}")))
}

fn require_fano(p: &LatticePolygon) -> Outcome {
    if p.is_fano() {
        Ok(())
    } else {
        Err(Failure::Precondition(format!("{p} is not Fano")))
    }
}

/// One JSON document per line. A closed stdout is not an error.
fn emit(v: &impl serde::Serialize) {
    line(&serde_json::to_string(v).expect("serializable output"));
}

fn line(s: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Analyze { polygon, cap } => {
            emit(&analyze(&parse_polygon(&polygon)?, cap));
        }
        Command::Class { polygon, max_polygons, max_boundary } => {
            let p = parse_polygon(&polygon)?;
            require_fano(&p)?;
            let class = explore_class(&p, ClassCaps { max_polygons, max_boundary_points: max_boundary });
            let (symmetric, ke_triangles) = count_distinguished(&class);
            emit(&json!({
                "size": class.len(),
                "exhausted": class.exhausted,
                "distinguished": { "symmetric": symmetric, "ke_triangles": ke_triangles },
                "invariants_consistent": class.invariants_consistent(),
                "class": class,
            }));
        }
        Command::Mutate { polygon, w, d, k } => {
            let p = parse_polygon(&polygon)?;
            match w {
                None => {
                    let all: Vec<Value> = enumerate_mutations(&p)
                        .into_iter()
                        .map(|(spec, q)| json!({ "spec": spec, "polygon": q }))
                        .collect();
                    emit(&all);
                }
                Some(w) => {
                    let [a, b] = parse_pair("--w", &w)?;
                    let w = DualVector::new(a, b);
                    let d = match d {
                        Some(d) => {
                            let [x, y] = parse_pair("--d", &d)?;
                            LatticePoint::new(x, y)
                        }
                        None => w.kernel_direction(),
                    };
                    let spec = MutationSpec::new(w, d, k)?;
                    let q = mutate(&p, &spec)?;
                    emit(&json!({ "spec": spec, "polygon": q }));
                }
            }
        }
        Command::Bary { polygon, cap } => {
            emit(&type_bk(&parse_polygon(&polygon)?, cap)?);
        }
        Command::Phk { h, k, raw } => {
            let p = if raw { phk_vertices(h, k)? } else { make_phk(h, k)? };
            emit(&p);
        }
        Command::Refine { polygon, k, v } => {
            let p = parse_polygon(&polygon)?;
            let [x, y] = parse_pair("--v", &v)?;
            emit(&refine_lattice(&p, k, LatticePoint::new(x, y))?);
        }
        Command::SearchKe { config } => {
            let text = read_input(&config.to_string_lossy())?;
            let cfg: SearchConfig =
                serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", config.display())))?;
            let hits = search_ke_quads(&cfg);
            if let Some(out) = &cfg.output {
                let body = serde_json::to_string_pretty(&hits).expect("serializable output");
                std::fs::write(out, body).map_err(|e| Failure::Precondition(format!("{out}: {e}")))?;
            }
            emit(&hits);
        }
        Command::Ehrhart { polygon, k_max, heights } => {
            let p = parse_polygon(&polygon)?;
            let series = dual_dilation_counts(&p, k_max)?;
            if heights {
                let hs = heights_from_series(&p)?;
                emit(&json!({ "K": series.k_max, "counts": series.counts, "heights": hs }));
            } else {
                emit(&series);
            }
        }
        Command::VerifyPaper => {
            let mut failed = 0;
            for f in fixtures() {
                match (f.check)() {
                    Ok(()) => line(&format!("PASS {}", f.name)),
                    Err(msg) => {
                        failed += 1;
                        line(&format!("FAIL {}: {msg}", f.name));
                    }
                }
            }
            if failed > 0 {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verify => {}
                Failure::Parse(m) | Failure::Precondition(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
