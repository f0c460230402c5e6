//! Command-line front end: recognition with machine-readable reports,
//! reversing, word problems, normal forms, lcm/gcd, the simple-class table,
//! automata export, and the bounded presentation enumerator.
//!
//! Exit codes: 0 = success / Garside / yes; 1 = rejected / no;
//! 2 = budget exhausted / inconclusive; 3 = input error.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use garside::automata::{CharGraph, LeftGcdAutomaton, RightTransducer};
use garside::normalform::{mixed_nf, MixedNormalForm};
use garside::oracle::Ball;
use garside::recognizer::{
    check_homogeneous_shortcut, enumerate_presentations, recognize, Budgets,
    HomogeneousShortcut, Verdict,
};
use garside::reversing::{capture_grid, reverse_left, reverse_right, GridStatus};
use garside::structure::GarsideStructure;
use garside::words::SignedWord;
use garside::{
    EquivResult, Fuel, Presentation, PositiveWord, RecognitionReport, ReversalOutcome,
    WordOutcome,
};

#[derive(Parser)]
#[command(
    name = "garside",
    about = "Word reversing over complemented presentations and Garside-monoid recognition",
    version
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// Cap on elementary reversing steps per reversing computation.
    #[arg(long, global = true)]
    max_steps: Option<u64>,
    /// Cap on intermediate word length during reversing.
    #[arg(long, global = true)]
    max_word_len: Option<usize>,
    /// Cap on the size of the complement closure.
    #[arg(long, global = true)]
    closure_cap: Option<usize>,
    /// Cap on the size of the lcm closure.
    #[arg(long, global = true)]
    lcm_cap: Option<usize>,
    /// Worker threads for the cube check.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for randomized self-checks; current commands are fully
    /// deterministic, the flag is accepted for config stability.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cross-check answers against the brute-force ball oracle (debugging).
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the presentation satisfies the Garside criterion.
    Recognize { file: String },
    /// Reverse a signed word; --left uses the derived left selector.
    Reverse {
        file: String,
        word: String,
        #[arg(long)]
        left: bool,
        #[arg(long)]
        show_grid: bool,
        /// Write the reversing grid as DOT to this path.
        #[arg(long)]
        dot: Option<String>,
    },
    /// With one word: is it trivial in the group? With two: are the
    /// positive words equal in the monoid?
    WordProblem {
        file: String,
        word: String,
        word2: Option<String>,
    },
    /// Mixed canonical normal form of a signed word.
    Nf { file: String, word: String },
    /// Lattice operations on arbitrary positive words.
    LcmGcd {
        file: String,
        #[arg(value_enum)]
        op: LatticeOp,
        u: String,
        v: String,
    },
    /// Print the simple-class table.
    Simples {
        file: String,
        /// Write the characteristic graph as DOT to this path.
        #[arg(long)]
        dot: Option<String>,
    },
    /// Build a normal-form automaton and print or export it.
    Automaton {
        file: String,
        #[arg(long, value_enum)]
        kind: AutomatonKind,
        #[arg(long)]
        dot: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        max_states: usize,
    },
    /// Enumerate complemented presentations recognized Garside.
    Enumerate { n_letters: usize, max_f_len: usize },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum LatticeOp {
    LcmRight,
    LcmLeft,
    GcdLeft,
    GcdRight,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AutomatonKind {
    RightTransducer,
    LeftGcd,
    CharGraph,
}

impl Config {
    fn fuel(&self) -> Fuel {
        let d = Fuel::default();
        Fuel::new(
            self.max_steps.unwrap_or(d.max_steps),
            self.max_word_len.unwrap_or(d.max_word_len),
        )
    }

    fn budgets(&self) -> Budgets {
        let d = Budgets::default();
        Budgets {
            closure_cap: self.closure_cap.unwrap_or(d.closure_cap),
            lcm_cap: self.lcm_cap.unwrap_or(d.lcm_cap),
            fuel: self.fuel(),
            jobs: self.jobs,
        }
    }

    /// The enumerator visits many divergent tables; unless overridden it
    /// runs with tight budgets so each candidate settles quickly.
    fn enumerate_budgets(&self) -> Budgets {
        Budgets {
            closure_cap: self.closure_cap.unwrap_or(256),
            lcm_cap: self.lcm_cap.unwrap_or(512),
            fuel: Fuel::new(
                self.max_steps.unwrap_or(100_000),
                self.max_word_len.unwrap_or(2_000),
            ),
            jobs: self.jobs,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn load(file: &str) -> Result<Presentation, String> {
    let text = fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?;
    Presentation::parse(&text).map_err(|e| format!("{file}: {e}"))
}

/// Recognize and build the structure, or exit with the verdict.
fn require_structure(p: &Presentation, cfg: &Config) -> Result<GarsideStructure, ExitCode> {
    let report = recognize(p, &cfg.budgets());
    match &report.verdict {
        Verdict::Garside => GarsideStructure::build(p, &report, &cfg.fuel()).map_err(|e| {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }),
        Verdict::Rejected(r) => {
            eprintln!("presentation rejected: {}", r.name());
            Err(ExitCode::from(1))
        }
        Verdict::Inconclusive(s) => {
            eprintln!("recognition inconclusive at stage {}", s.name());
            Err(ExitCode::from(2))
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Recognize { file } => {
            let p = load(file)?;
            let report = recognize(&p, &cfg.budgets());
            print_recognition(&p, &report, cfg);
            Ok(match report.verdict {
                Verdict::Garside => ExitCode::SUCCESS,
                Verdict::Rejected(_) => ExitCode::from(1),
                Verdict::Inconclusive(_) => ExitCode::from(2),
            })
        }
        Command::Reverse { file, word, left, show_grid, dot } => {
            let p = load(file)?;
            let w = p.alphabet.parse_signed(word).map_err(|e| e.to_string())?;
            let fuel = cfg.fuel();
            let outcome = if *left {
                let g = match require_structure(&p, cfg) {
                    Ok(g) => g,
                    Err(code) => return Ok(code),
                };
                reverse_left(&w, g.left_selector(), &fuel)
            } else {
                reverse_right(&w, &p.f, &fuel)
            };
            if *show_grid || dot.is_some() {
                let (u, v) = split_quotient(&w, &p)?;
                let grid = capture_grid(&u, &v, &p.f, &fuel);
                if *show_grid {
                    print!("{}", grid.render_ascii(&p.alphabet));
                    if grid.status != GridStatus::Complete {
                        println!("(partial grid: {:?})", grid.status);
                    }
                }
                if let Some(path) = dot {
                    fs::write(path, grid.to_dot(&p.alphabet)).map_err(|e| e.to_string())?;
                }
            }
            print_reversal(&p, &outcome, *left, cfg);
            Ok(match outcome {
                ReversalOutcome::Converged { .. } => ExitCode::SUCCESS,
                ReversalOutcome::Blocked { .. } => ExitCode::from(1),
                ReversalOutcome::FuelExhausted { .. } => ExitCode::from(2),
            })
        }
        Command::WordProblem { file, word, word2 } => {
            let p = load(file)?;
            match word2 {
                Some(second) => {
                    let u = p.alphabet.parse_positive(word).map_err(|e| e.to_string())?;
                    let v = p.alphabet.parse_positive(second).map_err(|e| e.to_string())?;
                    let res = garside::reversing::equiv_pp(&u, &v, &p.f, &cfg.fuel());
                    if cfg.oracle {
                        let radius = u.len().max(v.len());
                        let slack = p.relations().iter().map(|(l, _)| l.len()).max().unwrap_or(1);
                        let ball = Ball::build(&p, radius, slack);
                        println!("oracle: {}", ball.equal(&u, &v));
                    }
                    match res {
                        EquivResult::Equivalent => {
                            println!("equal");
                            Ok(ExitCode::SUCCESS)
                        }
                        EquivResult::Distinct => {
                            println!("distinct");
                            Ok(ExitCode::from(1))
                        }
                        EquivResult::FuelExhausted => {
                            println!("fuel exhausted");
                            Ok(ExitCode::from(2))
                        }
                    }
                }
                None => {
                    let w = p.alphabet.parse_signed(word).map_err(|e| e.to_string())?;
                    let g = match require_structure(&p, cfg) {
                        Ok(g) => g,
                        Err(code) => return Ok(code),
                    };
                    match g.word_problem_group(&w) {
                        Ok(true) => {
                            println!("trivial");
                            Ok(ExitCode::SUCCESS)
                        }
                        Ok(false) => {
                            println!("nontrivial");
                            Ok(ExitCode::from(1))
                        }
                        Err(WordOutcome::FuelExhausted) => {
                            println!("fuel exhausted");
                            Ok(ExitCode::from(2))
                        }
                        Err(_) => {
                            println!("undefined");
                            Ok(ExitCode::from(1))
                        }
                    }
                }
            }
        }
        Command::Nf { file, word } => {
            let p = load(file)?;
            let w = p.alphabet.parse_signed(word).map_err(|e| e.to_string())?;
            let g = match require_structure(&p, cfg) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            match mixed_nf(&w, &g) {
                Ok(nf) => {
                    println!("{}", format_mixed(&nf, &g));
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::LcmGcd { file, op, u, v } => {
            let p = load(file)?;
            let uw = p.alphabet.parse_positive(u).map_err(|e| e.to_string())?;
            let vw = p.alphabet.parse_positive(v).map_err(|e| e.to_string())?;
            let g = match require_structure(&p, cfg) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            let out = match op {
                LatticeOp::LcmRight => g.lcm_right_word(&uw, &vw),
                LatticeOp::LcmLeft => g.lcm_left_word(&uw, &vw),
                LatticeOp::GcdLeft => g.gcd_left_word(&uw, &vw),
                LatticeOp::GcdRight => g.gcd_right_word(&uw, &vw),
            };
            match out {
                WordOutcome::Defined(w) => {
                    println!("{}", p.alphabet.display_positive(&w));
                    Ok(ExitCode::SUCCESS)
                }
                WordOutcome::Undefined => {
                    println!("undefined");
                    Ok(ExitCode::from(1))
                }
                WordOutcome::FuelExhausted => {
                    println!("fuel exhausted");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Simples { file, dot } => {
            let p = load(file)?;
            let g = match require_structure(&p, cfg) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            print_simples(&g);
            if let Some(path) = dot {
                let cg = CharGraph::build(&g);
                fs::write(path, cg.to_dot(&g)).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Automaton { file, kind, dot, max_states } => {
            let p = load(file)?;
            let g = match require_structure(&p, cfg) {
                Ok(g) => g,
                Err(code) => return Ok(code),
            };
            let (summary, dot_text) = match kind {
                AutomatonKind::RightTransducer => {
                    let t = RightTransducer::build(&g);
                    (
                        format!("right transducer: {} states", g.simple_count()),
                        t.to_dot(&g),
                    )
                }
                AutomatonKind::LeftGcd => {
                    let auto = LeftGcdAutomaton::build(&g, *max_states)
                        .map_err(|e| e.to_string())?;
                    (
                        format!(
                            "left-gcd automaton: {} primitives, {} states",
                            auto.primitives.len(),
                            auto.state_count()
                        ),
                        auto.to_dot(&g),
                    )
                }
                AutomatonKind::CharGraph => {
                    let cg = CharGraph::build(&g);
                    (
                        format!(
                            "characteristic graph: {} vertices, {} edges",
                            cg.vertices,
                            cg.edges.len()
                        ),
                        cg.to_dot(&g),
                    )
                }
            };
            println!("{summary}");
            if let Some(path) = dot {
                fs::write(path, dot_text).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n_letters, max_f_len } => {
            let found = enumerate_presentations(*n_letters, *max_f_len, &cfg.enumerate_budgets());
            for (p, report) in &found {
                if cfg.format == Format::Json {
                    let mut json = report.to_json(p);
                    let rels: Vec<serde_json::Value> = p
                        .relations()
                        .iter()
                        .map(|(l, r)| {
                            serde_json::Value::String(format!(
                                "{}={}",
                                p.alphabet.format_positive(l),
                                p.alphabet.format_positive(r)
                            ))
                        })
                        .collect();
                    json.as_object_mut()
                        .unwrap()
                        .insert("relations".into(), serde_json::Value::Array(rels));
                    println!("{}", serde_json::to_string(&json).unwrap());
                } else {
                    let rels: Vec<String> = p
                        .relations()
                        .iter()
                        .map(|(l, r)| {
                            format!(
                                "{} = {}",
                                p.alphabet.format_positive(l),
                                p.alphabet.format_positive(r)
                            )
                        })
                        .collect();
                    let rels = if rels.is_empty() {
                        "free".to_string()
                    } else {
                        rels.join(", ")
                    };
                    println!(
                        "{}  [lcm closure: {} words, omega: {}]",
                        rels,
                        report.lcm_closure.as_ref().map_or(0, |v| v.len()),
                        report
                            .omega
                            .as_ref()
                            .map(|w| p.alphabet.display_positive(w))
                            .unwrap_or_default()
                    );
                }
            }
            println!("total: {}", found.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Interprets a signed word u⁻¹·v (all negatives then all positives) for
/// grid capture; anything else is rejected.
fn split_quotient(w: &SignedWord, p: &Presentation) -> Result<(PositiveWord, PositiveWord), String> {
    use garside::words::Sign;
    let syll = w.syllables();
    let cut = syll
        .iter()
        .position(|&(_, s)| s == Sign::Plus)
        .unwrap_or(syll.len());
    if syll[cut..].iter().any(|&(_, s)| s == Sign::Minus) {
        return Err(format!(
            "grid capture expects a word of the shape u'v (negatives then positives), got `{}`",
            p.alphabet.format_signed(w)
        ));
    }
    let u = PositiveWord::new(syll[..cut].iter().rev().map(|&(l, _)| l).collect());
    let v = PositiveWord::new(syll[cut..].iter().map(|&(l, _)| l).collect());
    Ok((u, v))
}

fn print_recognition(p: &Presentation, report: &RecognitionReport, cfg: &Config) {
    if cfg.format == Format::Json {
        println!("{}", serde_json::to_string(&report.to_json(p)).unwrap());
        return;
    }
    match &report.verdict {
        Verdict::Garside => println!("verdict: Garside"),
        Verdict::Rejected(r) => println!("verdict: Rejected ({})", r.name()),
        Verdict::Inconclusive(s) => println!("verdict: Inconclusive (stage {})", s.name()),
    }
    if let Some(c) = &report.closure {
        println!(
            "closure ({}): {}",
            c.len(),
            c.iter()
                .map(|w| p.alphabet.display_positive(w))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    if let Some(c) = &report.lcm_closure {
        println!(
            "lcm closure ({}): {}",
            c.len(),
            c.iter()
                .map(|w| p.alphabet.display_positive(w))
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    if let Some(o) = &report.omega {
        println!("omega: {}", p.alphabet.display_positive(o));
    }
    match check_homogeneous_shortcut(p, &Fuel::default()) {
        HomogeneousShortcut::Applies(rep) => println!(
            "homogeneous shortcut: applies, cube on letters {}",
            if rep.holds() { "holds" } else { "fails" }
        ),
        HomogeneousShortcut::NotApplicable => {}
    }
    println!(
        "stats: {} reversing steps, {} cube triples",
        report.stats.reversing_steps, report.stats.triples_checked
    );
}

fn print_reversal(p: &Presentation, outcome: &ReversalOutcome, left: bool, cfg: &Config) {
    if cfg.format == Format::Json {
        let mut map = serde_json::Map::new();
        match outcome {
            ReversalOutcome::Converged { positive, negative, steps } => {
                map.insert("status".into(), "converged".into());
                map.insert(
                    "positive".into(),
                    p.alphabet.format_positive(positive).into(),
                );
                map.insert(
                    "negative".into(),
                    p.alphabet.format_positive(negative).into(),
                );
                map.insert("steps".into(), (*steps).into());
            }
            ReversalOutcome::Blocked { pair, steps } => {
                map.insert("status".into(), "blocked".into());
                map.insert(
                    "pair".into(),
                    format!("{},{}", p.alphabet.token(pair.0), p.alphabet.token(pair.1)).into(),
                );
                map.insert("steps".into(), (*steps).into());
            }
            ReversalOutcome::FuelExhausted { steps } => {
                map.insert("status".into(), "fuel_exhausted".into());
                map.insert("steps".into(), (*steps).into());
            }
        }
        println!("{}", serde_json::to_string(&serde_json::Value::Object(map)).unwrap());
        return;
    }
    match outcome {
        ReversalOutcome::Converged { positive, negative, steps } => {
            let pos = p.alphabet.display_positive(positive);
            let neg = p.alphabet.display_positive(negative);
            if left {
                println!("({neg})^-1 · {pos}   [{steps} steps]");
            } else {
                println!("{pos} · ({neg})^-1   [{steps} steps]");
            }
        }
        ReversalOutcome::Blocked { pair, steps } => println!(
            "blocked: complement of ({}, {}) undefined   [{steps} steps]",
            p.alphabet.token(pair.0),
            p.alphabet.token(pair.1)
        ),
        ReversalOutcome::FuelExhausted { steps } => {
            println!("fuel exhausted after {steps} steps")
        }
    }
}

fn format_mixed(nf: &MixedNormalForm, g: &GarsideStructure) -> String {
    let al = &g.presentation.alphabet;
    let mut parts: Vec<String> = nf
        .negatives
        .iter()
        .rev()
        .map(|&y| format!("({})^-1", al.display_positive(g.simple_word(y))))
        .collect();
    parts.push("|".to_string());
    parts.extend(
        nf.positives
            .iter()
            .map(|&x| al.display_positive(g.simple_word(x)).to_string()),
    );
    parts.join(" ")
}

fn print_simples(g: &GarsideStructure) {
    let al = &g.presentation.alphabet;
    println!("{} simple classes, delta = {}", g.simple_count(), al.display_positive(g.delta_word()));
    println!("{:<6} {:<12} {:<12} {:<12} {}", "index", "word", "star", "costar", "norm");
    for s in 0..g.simple_count() {
        println!(
            "{:<6} {:<12} {:<12} {:<12} {}",
            s,
            al.display_positive(g.simple_word(s)),
            al.display_positive(g.simple_word(g.star(s))),
            al.display_positive(g.simple_word(g.costar(s))),
            g.norm(s)
        );
    }
    let flagged = g.non_atomic_letter_pairs();
    if !flagged.is_empty() {
        let pairs: Vec<String> = flagged
            .iter()
            .map(|&(a, b)| format!("({}, {})", al.token(a), al.token(b)))
            .collect();
        println!(
            "note: empty complements on {}; some letters divide others, the letters are not all atoms",
            pairs.join(" ")
        );
    }
}
