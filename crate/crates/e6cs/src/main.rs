//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use clap::{Args, Parser, Subcommand};
use e6cs::e6::{positive_roots, weyl_dimension};
use e6cs::golden::{corpus_from_dir, embedded_corpus, run_golden};
use e6cs::kappa::KRat;
use e6cs::operator::{epsilon, operator};
use e6cs::orbits::{dominant_weights_below, orbit};
use e6cs::rep::{character_expansion, freudenthal};
use e6cs::series::{deformed_cg, recurrence_coefficients, rho_height, verify_closed_forms};
use e6cs::solver::{solve_iterative, solve_projection};
use e6cs::text::{krat_to_json, parse_zpoly, zpoly_to_json};
use e6cs::weight::{Weight, RANK};
use e6cs::zpoly::ZPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

#[derive(Parser)]
#[command(name = "e6cs", version, about = "E6 trigonometric Calogero-Sutherland operator in character variables: exact eigenpolynomials, deformed Clebsch-Gordan series, recurrence coefficients")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WeightArg {
    /// Six integer coordinates in the fundamental-weight basis.
    #[arg(num_args = 6, allow_hyphen_values = true, value_names = ["M1", "M2", "M3", "M4", "M5", "M6"])]
    m: Vec<i32>,
}

impl WeightArg {
    fn weight(&self) -> Weight {
        Weight(std::array::from_fn(|i| self.m[i]))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the 36 positive roots grouped by height.
    Roots,
    /// Weyl dimension of the representation with the given highest weight.
    Dim(WeightArg),
    /// Weyl orbit of a weight: size and members in canonical order.
    Orbit(WeightArg),
    /// Dominant weights below a dominant weight, by decreasing height.
    DominantBelow(WeightArg),
    /// Weight multiplicity: `mult l1..l6 u1..u6`.
    Mult {
        #[arg(num_args = 12, allow_hyphen_values = true, value_names = ["L1", "L2", "L3", "L4", "L5", "L6", "U1", "U2", "U3", "U4", "U5", "U6"])]
        coords: Vec<i32>,
    },
    /// Character as a sum of monomial functions, with the dimension balance.
    CharExpand(WeightArg),
    /// Operator table access.
    Operator {
        #[command(subcommand)]
        op: OperatorCmd,
    },
    /// Apply the operator to a polynomial given in the text grammar.
    Apply {
        /// Coupling: a rational like 1, 0, or 2/3; omit for symbolic k.
        #[arg(long)]
        kappa: Option<String>,
        /// Polynomial, e.g. "z1*z6 - 6*z2 + 9".
        poly: String,
    },
    /// Eigenpolynomial of a dominant label.
    Solve {
        #[command(flatten)]
        m: WeightArg,
        #[arg(long)]
        kappa: Option<String>,
        /// iter, proj, or both.
        #[arg(long, default_value = "iter")]
        method: String,
        /// Also verify the eigen-equation and print the residual.
        #[arg(long)]
        check: bool,
    },
    /// Deformed Clebsch-Gordan series: `cg l1..l6 x r1..r6`.
    Cg {
        /// Twelve coordinates separated by a literal `x`.
        #[arg(num_args = 13, allow_hyphen_values = true)]
        spec: Vec<String>,
        #[arg(long)]
        kappa: Option<String>,
    },
    /// Recurrence coefficients of z1 * P_{n l_k}.
    Recur {
        /// Which fundamental weight carries n: 1..6.
        #[arg(long)]
        family: usize,
        #[arg(long)]
        n: i32,
        /// Compare against the printed closed forms for 1..=n.
        #[arg(long)]
        verify: bool,
    },
    /// Verify the transcription corpus; nonzero exit on any failure.
    Golden {
        /// Exact id or `prefix*` pattern.
        filter: Option<String>,
        /// Read the corpus from a directory instead of the embedded copy.
        #[arg(long)]
        dir: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand)]
enum OperatorCmd {
    /// Print the full coefficient tables in canonical form.
    Dump,
}

fn parse_kappa(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if s == "symbolic" || s == "k" {
        return Err("symbolic coupling: omit --kappa instead".into());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| format!("bad rational {s}"))?;
    let d: BigInt = den.trim().parse().map_err(|_| format!("bad rational {s}"))?;
    if d == BigInt::from(0) {
        return Err("zero denominator in coupling".into());
    }
    Ok(BigRational::new(n, d))
}

fn print_poly(p: &ZPoly, as_json: bool) {
    if as_json {
        println!("{}", zpoly_to_json(p));
    } else {
        println!("{p}");
    }
}

fn specialize(p: &ZPoly, kappa: &Option<String>) -> Result<ZPoly, String> {
    match kappa {
        None => Ok(p.clone()),
        Some(s) => {
            let k = parse_kappa(s)?;
            p.eval_kappa(&k).map_err(|e| e.to_string())
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Roots => {
            let mut groups: Vec<Vec<String>> = vec![Vec::new(); 11];
            for &(r, h) in positive_roots() {
                groups[(h - 1) as usize].push(r.label());
            }
            if cli.json {
                println!("{}", json!({ "heights": groups }));
            } else {
                for (i, g) in groups.iter().enumerate() {
                    println!("{}: {}", i + 1, g.join(" "));
                }
            }
        }
        Command::Dim(m) => {
            let d = weyl_dimension(&m.weight())?;
            if cli.json {
                println!("{}", json!({ "dim": d.to_string() }));
            } else {
                println!("{d}");
            }
        }
        Command::Orbit(m) => {
            let o = orbit(&m.weight());
            if cli.json {
                let members: Vec<Vec<i32>> = o.members.iter().map(|w| w.0.to_vec()).collect();
                println!(
                    "{}",
                    json!({ "representative": o.representative.0.to_vec(), "size": o.members.len(), "members": members })
                );
            } else {
                println!("representative {}", o.representative);
                println!("size {}", o.members.len());
                for w in &o.members {
                    println!("{w}");
                }
            }
        }
        Command::DominantBelow(m) => {
            let w = m.weight();
            if !w.is_dominant() {
                return Err(format!("weight {w} is not dominant"));
            }
            let below = dominant_weights_below(&w);
            if cli.json {
                let list: Vec<Vec<i32>> = below.iter().map(|w| w.0.to_vec()).collect();
                println!("{}", json!({ "below": list }));
            } else {
                for b in below {
                    println!("{b}");
                }
            }
        }
        Command::Mult { coords } => {
            let lambda = Weight(std::array::from_fn(|i| coords[i]));
            let mu = Weight(std::array::from_fn(|i| coords[i + RANK]));
            if !lambda.is_dominant() {
                return Err(format!("highest weight {lambda} is not dominant"));
            }
            let n = freudenthal(&lambda, &mu);
            if cli.json {
                println!("{}", json!({ "multiplicity": n.to_string() }));
            } else {
                println!("{n}");
            }
        }
        Command::CharExpand(m) => {
            let w = m.weight();
            if !w.is_dominant() {
                return Err(format!("weight {w} is not dominant"));
            }
            let exp = character_expansion(&w);
            let dim = weyl_dimension(&w)?;
            if cli.json {
                let terms: Vec<serde_json::Value> = exp
                    .terms
                    .iter()
                    .map(|(mu, n)| {
                        json!({
                            "weight": mu.0.to_vec(),
                            "multiplicity": n.to_string(),
                            "orbit_size": e6cs::orbits::orbit_size(mu),
                        })
                    })
                    .collect();
                println!("{}", json!({ "terms": terms, "dim": dim.to_string() }));
            } else {
                let mut balance = Vec::new();
                for (mu, n) in &exp.terms {
                    let size = e6cs::orbits::orbit_size(mu);
                    println!("M_{}  multiplicity {}  orbit {}", mu.label(), n, size);
                    balance.push(format!("{n}*{size}"));
                }
                println!("balance: {} = {}", balance.join(" + "), dim);
            }
        }
        Command::Operator { op: OperatorCmd::Dump } => {
            let op = operator();
            if cli.json {
                let mut a = Vec::new();
                for j in 1..=RANK {
                    for k in j..=RANK {
                        a.push(json!({ "j": j, "k": k, "poly": zpoly_to_json(op.a(j, k)) }));
                    }
                }
                let b: Vec<serde_json::Value> = (1..=RANK)
                    .map(|j| {
                        json!({
                            "j": j,
                            "b0": zpoly_to_json(op.b0(j)),
                            "b1": zpoly_to_json(op.b1(j)),
                        })
                    })
                    .collect();
                println!("{}", json!({ "a": a, "b": b }));
            } else {
                for j in 1..=RANK {
                    for k in j..=RANK {
                        println!("a[{j}][{k}] = {}", op.a(j, k));
                    }
                }
                for j in 1..=RANK {
                    println!("b0[{j}] = {}", op.b0(j));
                    println!("b1[{j}] = {}", op.b1(j));
                }
            }
        }
        Command::Apply { kappa, poly } => {
            let p = parse_zpoly(&poly).map_err(|e| e.to_string())?;
            let img = specialize(&operator().apply(&p), &kappa)?;
            print_poly(&img, cli.json);
        }
        Command::Solve { m, kappa, method, check } => {
            let w = m.weight();
            let solved = match method.as_str() {
                "iter" => vec![solve_iterative(&w)?],
                "proj" => vec![solve_projection(&w)?],
                "both" => vec![solve_iterative(&w)?, solve_projection(&w)?],
                other => return Err(format!("unknown method {other}; use iter, proj, or both")),
            };
            if solved.len() == 2 && solved[0].poly != solved[1].poly {
                return Err(format!("methods disagree for label {}", w.label()));
            }
            let mut failures = 0;
            for e in &solved {
                let p = specialize(&e.poly, &kappa)?;
                if cli.json {
                    let mut obj = json!({
                        "label": w.0.to_vec(),
                        "method": match e.method {
                            e6cs::solver::Method::Iterative => "iter",
                            e6cs::solver::Method::Projection => "proj",
                        },
                        "eigenvalue": krat_to_json(&epsilon(&w)),
                        "poly": zpoly_to_json(&p),
                    });
                    if check {
                        let r = e.eigen_residual();
                        obj["residual_zero"] = json!(r.is_zero());
                        if !r.is_zero() {
                            failures += 1;
                        }
                    }
                    println!("{obj}");
                } else {
                    println!("P_{} = {}", w.label(), p);
                    println!("eigenvalue {}", epsilon(&w));
                    if check {
                        let r = e.eigen_residual();
                        println!("residual {}", r);
                        if !r.is_zero() {
                            failures += 1;
                        }
                    }
                }
            }
            if failures > 0 {
                return Ok(1);
            }
        }
        Command::Cg { spec, kappa } => {
            if spec.len() != 13 || spec[RANK] != "x" {
                return Err("usage: cg l1 l2 l3 l4 l5 l6 x r1 r2 r3 r4 r5 r6".into());
            }
            let parse6 = |s: &[String]| -> Result<Weight, String> {
                let mut m = [0i32; RANK];
                for (i, t) in s.iter().enumerate() {
                    m[i] = t.parse().map_err(|_| format!("bad coordinate {t}"))?;
                }
                Ok(Weight(m))
            };
            let left = parse6(&spec[..RANK])?;
            let right = parse6(&spec[RANK + 1..])?;
            let series = deformed_cg(&left, &right)?;
            let eval = |c: &KRat| -> Result<KRat, String> {
                match &kappa {
                    None => Ok(c.clone()),
                    Some(s) => {
                        let k = parse_kappa(s)?;
                        c.eval(&k)
                            .map(|v| KRat::from_rational(&v))
                            .ok_or_else(|| format!("pole at k = {k}"))
                    }
                }
            };
            if cli.json {
                let mut terms = Vec::new();
                for (mu, c) in &series.terms {
                    terms.push(json!({ "label": mu.0.to_vec(), "coeff": krat_to_json(&eval(c)?) }));
                }
                println!("{}", json!({ "terms": terms }));
            } else {
                for (mu, c) in &series.terms {
                    println!("P_{} : {}", mu.label(), eval(c)?);
                }
            }
        }
        Command::Recur { family, n, verify } => {
            let fam = recurrence_coefficients(family, n)?;
            if cli.json {
                let terms: Vec<serde_json::Value> = fam
                    .coefficients
                    .iter()
                    .map(|(w, c)| json!({ "label": w.0.to_vec(), "coeff": krat_to_json(c) }))
                    .collect();
                let mut obj = json!({ "family": family, "n": n, "terms": terms });
                if verify {
                    let report = verify_closed_forms(family, n)?;
                    let checks: Vec<serde_json::Value> = report
                        .checks
                        .iter()
                        .map(|c| {
                            json!({
                                "name": c.name,
                                "n": c.n,
                                "printed_label": c.printed_label.0.to_vec(),
                                "used_label": c.used_label.0.to_vec(),
                                "pass": c.pass,
                            })
                        })
                        .collect();
                    obj["closed_forms"] = json!({ "checks": checks, "notes": report.notes });
                    println!("{obj}");
                    if !report.all_pass() {
                        return Ok(1);
                    }
                } else {
                    println!("{obj}");
                }
            } else {
                println!("z1 * P_{} =", label_of(family, n));
                for (w, c) in &fam.coefficients {
                    println!("  {} * P_{}", c, w.label());
                }
                if verify {
                    let report = verify_closed_forms(family, n)?;
                    for c in &report.checks {
                        let status = if c.pass { "ok" } else { "MISMATCH" };
                        if c.printed_label == c.used_label {
                            println!("{} n={} [{}] label {}", c.name, c.n, status, c.used_label.label());
                        } else {
                            println!(
                                "{} n={} [{}] printed label {} -> computed label {}",
                                c.name,
                                c.n,
                                status,
                                c.printed_label.label(),
                                c.used_label.label()
                            );
                        }
                        if !c.pass {
                            println!("  printed:  {}", c.printed);
                            println!("  computed: {}", c.computed);
                        }
                    }
                    for note in &report.notes {
                        println!("note: {note}");
                    }
                    if !report.all_pass() {
                        return Ok(1);
                    }
                }
            }
        }
        Command::Golden { filter, dir } => {
            let entries = match dir {
                Some(d) => corpus_from_dir(&d)?,
                None => embedded_corpus()?,
            };
            let report = run_golden(&entries, filter.as_deref())?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "lines": report.lines,
                        "passed": report.passed,
                        "failed": report.failed,
                    })
                );
            } else {
                print!("{}", report.text());
            }
            if report.failed > 0 {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn label_of(family: usize, n: i32) -> String {
    let mut m = Weight::ZERO;
    m.0[family - 1] = n;
    let _ = rho_height(&m);
    m.label()
}

fn main() {
    // restore default SIGPIPE so piping into `head` works quietly
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}
