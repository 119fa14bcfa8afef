//! Command-line front end: zigzag complexes, knot decompositions, signatures,
//! λ/λ⁰/Λ queries, replacement obstructions, and the self-test runner.
//!
//! Exit codes: 0 success (and "admissible" verdicts), 1 obstructed verdicts
//! or self-test failure, 2 argument errors, 3 engine errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gordian_core::acceptance;
use gordian_core::lambda::{
    lambda_region_brute, lambda_region_structured, small_lambda, small_lambda0, BruteCaps,
    Region, StructuredRegion,
};
use gordian_core::obstruct;
use gordian_core::pairing::two_bridge_complex;
use gordian_core::pieces::{
    decompose, reassemble, torsion_profile, torus_decomposition, torus_params, Decomposition,
};
use gordian_core::rational::{graded_zz, s_invariant, two_bridge_signature, zz, Slope};
use gordian_core::{Error, FreeComplex, RingTag};

#[derive(Parser)]
#[command(name = "gordian", version, about = "Bar-Natan complexes of rational tangle closures and Gordian distance lower bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Structured,
    Brute,
    Both,
}

#[derive(Args)]
struct PairArgs {
    /// Left knot: unknot | torus:A,B | twobridge:P/Q | file:PATH
    #[arg(long)]
    left: String,
    /// Right knot, same syntax.
    #[arg(long)]
    right: String,
    /// Coefficient ring: Z | Q | F2 | F3 | F5 | F7 | F<p>
    #[arg(long, default_value = "Z")]
    ring: String,
    #[arg(long, value_enum, default_value_t = Engine::Structured)]
    engine: Engine,
    /// Allow 3-strand torus complexes over rings where they are conjectural.
    #[arg(long)]
    conjectural: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the zigzag complex of a rational tangle.
    Zz {
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
        /// Anchor absolute bigradings (odd/odd slopes only).
        #[arg(long)]
        graded: bool,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Pawn/knight decomposition of a knot complex.
    Knot {
        /// unknot | torus:A,B | twobridge:P/Q | file:PATH
        #[arg(long)]
        spec: String,
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long)]
        conjectural: bool,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Two-bridge signature σ and Rasmussen invariant s of Q_{P/Q}(0).
    Signature {
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
    },
    /// λ between two knots.
    Lambda(PairArgs),
    /// λ⁰ between two knots.
    Lambda0(PairArgs),
    /// The region Λ between two knots, as JSON plus an ASCII staircase.
    Region(PairArgs),
    /// α slope function.
    Alpha {
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
    },
    /// β slope function.
    Beta {
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
    },
    /// Test whether a replacement Q₋₁ ⇝ Q_{P/Q} is admissible for a pair.
    Obstruct {
        #[arg(long, allow_hyphen_values = true)]
        slope: String,
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Run the acceptance suite; nonzero exit on failure.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn caps_from_env() -> Result<BruteCaps, Error> {
    let mut caps = BruteCaps::default();
    if let Ok(v) = std::env::var("GORDIAN_CAPS") {
        let (g, d) = v
            .split_once(',')
            .ok_or_else(|| Error::SchemaError("GORDIAN_CAPS wants \"gens,dim\"".into()))?;
        caps.max_generators = g
            .trim()
            .parse()
            .map_err(|_| Error::SchemaError("bad GORDIAN_CAPS generator cap".into()))?;
        caps.max_map_dim = d
            .trim()
            .parse()
            .map_err(|_| Error::SchemaError("bad GORDIAN_CAPS dimension cap".into()))?;
    }
    Ok(caps)
}

/// Resolves a knot spec into a complex over ℤ or directly over the ring.
fn resolve(spec: &str, ring: RingTag, conjectural: bool) -> Result<FreeComplex, Error> {
    let to_ring = |c: FreeComplex| -> Result<FreeComplex, Error> {
        if ring == RingTag::Z {
            Ok(c)
        } else {
            c.base_change(ring)
        }
    };
    if spec == "unknot" {
        return to_ring(FreeComplex::pawn_complex(RingTag::Z, 0, 0));
    }
    if let Some(rest) = spec.strip_prefix("torus:") {
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| Error::SchemaError(format!("bad torus spec {spec:?}")))?;
        let a: u32 = a
            .parse()
            .map_err(|_| Error::SchemaError(format!("bad torus spec {spec:?}")))?;
        let b: u32 = b
            .parse()
            .map_err(|_| Error::SchemaError(format!("bad torus spec {spec:?}")))?;
        let params = torus_params(a, b)?;
        return Ok(reassemble(&torus_decomposition(params, ring, conjectural)?));
    }
    if let Some(rest) = spec.strip_prefix("twobridge:") {
        let s = Slope::parse(rest)?;
        return to_ring(two_bridge_complex(s)?);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::SchemaError(format!("{path}: {e}")))?;
        let c = FreeComplex::read_json(&text)?;
        if c.ring == ring {
            return Ok(c);
        }
        if c.ring == RingTag::Z {
            return c.base_change(ring);
        }
        return Err(Error::MixedRings);
    }
    Err(Error::SchemaError(format!("unknown knot spec {spec:?}")))
}

fn structured_exact(left: &FreeComplex, right: &FreeComplex) -> Result<Region, Error> {
    let d1 = decompose(left)?;
    let d2 = decompose(right)?;
    match lambda_region_structured(&d1, &d2)? {
        StructuredRegion::Exact(r) => Ok(r),
        StructuredRegion::Indeterminate { inner, outer } => {
            eprintln!(
                "note: region is indeterminate; inner {} outer {}",
                inner.to_json(),
                outer.to_json()
            );
            Err(Error::NotSplit("region not determined exactly".into()))
        }
    }
}

/// Over ℤ a non-split pair falls back to the intersection of the per-field
/// regions, which contains Λ_ℤ; the result is labeled non-exact on stderr.
/// Fields where the structured engine is itself indeterminate contribute
/// their outer bound, keeping the intersection a valid superset.
fn z_upper_approximation(args: &PairArgs) -> Result<Region, Error> {
    let fields = [RingTag::Q, RingTag::Fp(2), RingTag::Fp(3), RingTag::Fp(5)];
    let mut acc: Option<Region> = None;
    for ring in fields {
        let left = resolve(&args.left, ring, args.conjectural)?;
        let right = resolve(&args.right, ring, args.conjectural)?;
        let (r, exactness) =
            match lambda_region_structured(&decompose(&left)?, &decompose(&right)?)? {
                StructuredRegion::Exact(r) => (r, "exact"),
                StructuredRegion::Indeterminate { outer, .. } => (outer, "outer bound"),
            };
        eprintln!("note: region over {ring} ({exactness}): {}", r.to_json());
        acc = Some(match acc {
            None => r,
            Some(prev) => prev.intersect(&r),
        });
    }
    eprintln!("note: Z region is non-exact; reporting the intersection of field regions (an upper approximation)");
    Ok(acc.expect("field list is nonempty"))
}

fn pair_regions(args: &PairArgs) -> Result<(Region, Option<Region>), Error> {
    let ring = RingTag::parse(&args.ring)?;
    let left = resolve(&args.left, ring, args.conjectural)?;
    let right = resolve(&args.right, ring, args.conjectural)?;
    let brute = || -> Result<Region, Error> { lambda_region_brute(&left, &right, caps_from_env()?) };
    match args.engine {
        Engine::Structured => match structured_exact(&left, &right) {
            Ok(r) => Ok((r, None)),
            Err(Error::NotSplit(_)) if ring == RingTag::Z => {
                Ok((z_upper_approximation(args)?, None))
            }
            Err(e) => Err(e),
        },
        Engine::Brute => Ok((brute()?, None)),
        Engine::Both => {
            let s = structured_exact(&left, &right)?;
            let b = brute()?;
            if s != b {
                return Err(Error::NotSplit(format!(
                    "engines disagree: structured {} vs brute {}",
                    s.to_json(),
                    b.to_json()
                )));
            }
            Ok((s.clone(), Some(b)))
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Zz {
            slope,
            graded,
            format,
        } => {
            let s = Slope::parse(&slope)?;
            let z = if graded { graded_zz(s)? } else { zz(s)? };
            match format {
                Format::Tsv => {
                    println!("object\tvertex\tt\tq");
                    for (i, o) in z.objects.iter().enumerate() {
                        let t = o.t.map_or("-".into(), |v| v.to_string());
                        let q = o.q.map_or("-".into(), |v| v.to_string());
                        println!("{i}\t{}\t{t}\t{q}", o.vertex);
                    }
                    println!("arrow\tfrom\tto\tlabel\tparity");
                    for (i, a) in z.arrows.iter().enumerate() {
                        println!("{i}\t{}\t{}\t{}\t{:?}", a.from, a.to, a.label, a.label.parity());
                    }
                }
                Format::Json => {
                    let objs: Vec<serde_json::Value> = z
                        .objects
                        .iter()
                        .map(|o| {
                            serde_json::json!({
                                "vertex": o.vertex.to_string(),
                                "t": o.t,
                                "q": o.q,
                            })
                        })
                        .collect();
                    let arrows: Vec<serde_json::Value> = z
                        .arrows
                        .iter()
                        .map(|a| {
                            serde_json::json!({
                                "from": a.from,
                                "to": a.to,
                                "label": a.label.to_string(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({"objects": objs, "arrows": arrows})
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Knot {
            spec,
            ring,
            conjectural,
            format,
        } => {
            let ring = RingTag::parse(&ring)?;
            let c = resolve(&spec, ring, conjectural)?;
            let d = decompose(&c)?;
            match format {
                Format::Json => println!("{}", d.to_json()),
                Format::Tsv => print_decomposition_tsv(&d),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Signature { slope } => {
            let s = Slope::parse(&slope)?;
            let sigma = two_bridge_signature(s)?;
            println!("sigma\t{sigma}");
            println!("s\t{}", s_invariant(s)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Lambda(args) => {
            let (r, _) = pair_regions(&args)?;
            println!("{}", small_lambda(&r));
            Ok(ExitCode::SUCCESS)
        }
        Command::Lambda0(args) => {
            let (r, _) = pair_regions(&args)?;
            println!("{}", small_lambda0(&r));
            Ok(ExitCode::SUCCESS)
        }
        Command::Region(args) => {
            let (r, _) = pair_regions(&args)?;
            println!("{}", r.to_json());
            print!("{}", r.render_ascii());
            Ok(ExitCode::SUCCESS)
        }
        Command::Alpha { slope } => {
            println!("{}", obstruct::alpha(Slope::parse(&slope)?)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Beta { slope } => {
            println!("{}", obstruct::beta(Slope::parse(&slope)?)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Obstruct { slope, pair } => {
            let s = Slope::parse(&slope)?;
            let (r, _) = pair_regions(&pair)?;
            eprintln!(
                "note: verdict assumes the standard orientation at the tangle ends; \
                 reversing the orientation of one strand invalidates the obstruction"
            );
            if obstruct::admissible(&r, s)? {
                println!("admissible");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("obstructed");
                Ok(ExitCode::from(1))
            }
        }
        Command::Selftest => {
            let results = acceptance::run_all();
            let mut ok = true;
            for r in &results {
                println!("{}", r.line());
                ok &= r.passed();
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn print_decomposition_tsv(d: &Decomposition) {
    println!("ring\t{}", d.ring);
    println!("pawn\t{}", d.pawn.s);
    for n in &d.knights {
        println!("knight\t{}\t{}\t{}", n.k, n.i, n.q0);
    }
    let prof = torsion_profile(d);
    println!("umax\t{}", prof.umax);
}
