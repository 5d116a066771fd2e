//! The thin command wrappers: colour, convert, bounds, construct, search,
//! lcf and enumerate.

use std::fs;
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::Duration;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Subcommand, ValueEnum};
use girthcolor::bounds::{build_bounds_table, AnchorSet};
use girthcolor::coloring::{chromatic_number, decide_k_colorable, random_colourable, LocalSearchParams};
use girthcolor::constructions::{
    droogendijk_condition_holds, droogendijk_construct, mycielski, search_qualifying_sets, CandidateVerdict,
    QualifyingSearchOptions, SearchItem,
};
use girthcolor::enumerate::{certify_all_colorable, generate, Certification, GenerationConstraints};
use girthcolor::graph::{emit_adjacency_list, encode_graph6, girth};
use girthcolor::lcf::{
    basic_search, emit_lcf_table, even_girth_search, exhaustive_search, EvenGirthHeuristics, SearchBudget,
    SearchOutcome, SearchParams,
};
use girthcolor::{ChromaticNumber, Decision};

use crate::budget::BudgetArgs;
use crate::input::{load, InputFormat, LoadedGraph};
use crate::output::{show_girth, usage, Format, Out, Outcome};

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file, `-` for stdin, `fixture:NAME`, or a built-in such as `cycle:5`.
    pub input: String,
    #[arg(long, value_enum, default_value = "auto")]
    pub input_format: InputFormat,
    /// Cycle length for LCF tables without an `LCF(r,s)` header.
    #[arg(long)]
    pub lcf_s: Option<usize>,
}

impl InputArgs {
    fn load(&self) -> Result<LoadedGraph> {
        load(&self.input, self.input_format, self.lcf_s)
    }
}

// ---- color ----

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Number of colours; defaults to the chromatic number.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

pub fn color(args: &ColorArgs, out: Out) -> Result<Outcome> {
    let input = args.input.load()?;
    let g = &input.graph;
    let budget = args.budget.budget();
    let k = match args.k {
        Some(k) => k,
        None => match chromatic_number(g, &budget) {
            ChromaticNumber::Exact(k) => k,
            ChromaticNumber::Bounds { lower, upper } => {
                out.fact(
                    "chromatic",
                    &[("value", format!("Bounds({lower}..={upper})")), ("status", "indeterminate".into())],
                );
                return Ok(Outcome::Indeterminate);
            }
        },
    };
    out.fact("seed", &[("value", args.seed.to_string())]);
    let decision = match random_colourable(g, k, &LocalSearchParams::default(), args.seed) {
        Some(c) => Decision::Colorable(c),
        None => decide_k_colorable(g, k, None, &budget),
    };
    match decision {
        Decision::Colorable(c) => {
            out.fact("colouring", &[("k", k.to_string()), ("status", "confirmed".into())]);
            for (v, c) in c.assignment().iter().enumerate() {
                println!("{v} {c}");
            }
            Ok(Outcome::Confirmed)
        }
        Decision::NotColorable => {
            out.fact("colouring", &[("k", k.to_string()), ("status", "refuted".into())]);
            Ok(Outcome::Refuted)
        }
        Decision::BudgetExhausted => {
            out.fact("colouring", &[("k", k.to_string()), ("status", "indeterminate".into())]);
            Ok(Outcome::Indeterminate)
        }
    }
}

// ---- convert ----

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OutputFormat {
    G6,
    Adj,
    Lcf,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Output format
    #[arg(long, value_enum)]
    pub to: OutputFormat,
}

pub fn convert(args: &ConvertArgs) -> Result<Outcome> {
    let input = args.input.load()?;
    match args.to {
        OutputFormat::G6 => println!("{}", encode_graph6(&input.graph)),
        OutputFormat::Adj => print!("{}", emit_adjacency_list(&input.graph)),
        OutputFormat::Lcf => {
            let scheme = input.scheme.ok_or_else(|| anyhow!("only LCF inputs can be written as LCF tables"))?;
            print!("{}", emit_lcf_table(&scheme));
        }
    }
    Ok(Outcome::Confirmed)
}

// ---- bounds ----

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, default_value_t = 7)]
    pub gmax: u64,
    #[arg(long, default_value_t = 8)]
    pub kmax: u64,
    /// TOML file of `[[lower]]` and `[[upper]]` anchors replacing the built-in set.
    #[arg(long)]
    pub anchors: Option<PathBuf>,
}

pub fn bounds(args: &BoundsArgs, out: Out) -> Result<Outcome> {
    let anchors = match &args.anchors {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|_| crate::input::InputMissing(path.display().to_string()))?;
            AnchorSet::from_toml(&text).with_context(|| format!("{}: invalid anchor file", path.display()))?
        }
        None => AnchorSet::known(),
    };
    let table = build_bounds_table(&anchors, args.gmax, args.kmax);
    match out.format {
        Format::Text => {
            print!("{}", table.render_grid());
            println!();
            print!("{}", table.render_provenance());
        }
        Format::Records => print!("{}", table.render_records()),
    }
    Ok(Outcome::Confirmed)
}

// ---- construct ----

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// The Mycielskian: order 2n + 1, chromatic number plus one.
    Mycielski {
        #[command(flatten)]
        input: InputArgs,
        /// Write graph6 here and provenance to `<OUT>.provenance`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The two-apex construction on 2n + 2 - |S| vertices.
    Droogendijk {
        #[command(flatten)]
        input: InputArgs,
        /// Independent set S, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        /// Chromatic number assumed for the input; computed when omitted.
        #[arg(long)]
        k: Option<usize>,
        /// Write graph6 here and provenance to `<OUT>.provenance`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

/// Emits the graph6 line and the provenance records, either to stdout and
/// stderr or to `out` and `out.provenance`.
fn emit_construction(graph6: &str, provenance: &[(&str, String)], out: &Option<PathBuf>) -> Result<()> {
    let records: String = provenance.iter().map(|(k, v)| format!("{k}={}\n", v.replace(' ', "_"))).collect();
    match out {
        Some(path) => {
            fs::write(path, format!("{graph6}\n")).with_context(|| format!("writing {}", path.display()))?;
            let mut side = path.clone().into_os_string();
            side.push(".provenance");
            fs::write(&side, records).with_context(|| format!("writing {}", side.to_string_lossy()))?;
        }
        None => {
            println!("{graph6}");
            for line in records.lines() {
                eprintln!("# {line}");
            }
        }
    }
    Ok(())
}

pub fn construct(cmd: &Construct) -> Result<Outcome> {
    match cmd {
        Construct::Mycielski { input, out } => {
            let input = input.load()?;
            let h = mycielski(&input.graph);
            emit_construction(
                &encode_graph6(&h),
                &[
                    ("construction", "mycielski".into()),
                    ("input_sha256", input.hash),
                    ("input_order", input.graph.order().to_string()),
                    ("order", h.order().to_string()),
                    ("input_triangle_free", input.graph.is_triangle_free().to_string()),
                ],
                out,
            )?;
            Ok(Outcome::Confirmed)
        }
        Construct::Droogendijk { input, set, k, out, budget } => {
            let input = input.load()?;
            let g = &input.graph;
            let budget = budget.budget();
            let k = match k {
                Some(k) => *k,
                None => chromatic_number(g, &budget)
                    .exact()
                    .ok_or_else(|| anyhow!("chromatic number of the input not settled within budget; pass --k"))?,
            };
            let h = droogendijk_construct(g, set)?;
            let (verdict, outcome) = match droogendijk_condition_holds(g, set, k, &budget) {
                Ok(true) => ("condition holds", Outcome::Confirmed),
                Ok(false) => ("condition fails", Outcome::Refuted),
                Err(_) => ("condition undecided", Outcome::Indeterminate),
            };
            let s: Vec<String> = set.iter().map(usize::to_string).collect();
            emit_construction(
                &encode_graph6(&h),
                &[
                    ("construction", "droogendijk".into()),
                    ("input_sha256", input.hash),
                    ("input_order", g.order().to_string()),
                    ("k", k.to_string()),
                    ("S", s.join(",")),
                    ("order", h.order().to_string()),
                    ("verdict", verdict.into()),
                ],
                out,
            )?;
            Ok(outcome)
        }
    }
}

// ---- search ----

#[derive(Debug, Subcommand)]
pub enum Search {
    /// Independent sets S for which the two-apex construction may raise the
    /// chromatic number.
    Droogendijk {
        #[command(flatten)]
        input: InputArgs,
        /// Chromatic number of the input.
        #[arg(long)]
        k: usize,
        /// Largest independent set tried.
        #[arg(long)]
        max_set: usize,
        /// Seed for the local-search colourings.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Settle every candidate exactly instead of reporting it unverified.
        #[arg(long)]
        verify_exact: bool,
        /// Also consider sets whose non-neighbourhood is empty.
        #[arg(long)]
        include_empty_b: bool,
        /// Stop after this many candidates.
        #[arg(long)]
        limit: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

pub fn search(cmd: &Search, out: Out) -> Result<Outcome> {
    let Search::Droogendijk { input, k, max_set, seed, verify_exact, include_empty_b, limit, budget } = cmd;
    let input = input.load()?;
    let mut opts = QualifyingSearchOptions::new(*k, *max_set);
    opts.seed = *seed;
    opts.verify_exact = *verify_exact;
    opts.skip_empty_b = !include_empty_b;
    opts.budget = budget.budget();
    out.fact("seed", &[("value", seed.to_string())]);
    let mut overall = None::<Outcome>;
    let mut count = 0usize;
    for item in search_qualifying_sets(&input.graph, opts) {
        if limit.is_some_and(|l| count >= l) {
            break;
        }
        count += 1;
        match item {
            SearchItem::Candidate(c) => {
                let (verdict, s) = match c.verdict {
                    CandidateVerdict::KColorable(_) => ("k-colourable", Outcome::Refuted),
                    CandidateVerdict::Confirmed => ("chromatic number raised", Outcome::Confirmed),
                    CandidateVerdict::Unverified => ("unverified", Outcome::Indeterminate),
                    CandidateVerdict::Indeterminate => ("budget exhausted", Outcome::Indeterminate),
                };
                overall = Some(overall.map_or(s, |o| o.min(s)));
                let set: Vec<String> = c.set.iter().map(usize::to_string).collect();
                out.fact(
                    "candidate",
                    &[("set", set.join(",")), ("verdict", verdict.into()), ("graph6", encode_graph6(&c.graph))],
                );
            }
            SearchItem::BudgetExhausted { set } => {
                let set: Vec<String> = set.iter().map(usize::to_string).collect();
                out.fact("exhausted", &[("set", set.join(",")), ("status", "indeterminate".into())]);
                overall = Some(overall.map_or(Outcome::Indeterminate, |o| o.min(Outcome::Indeterminate)));
                break;
            }
        }
    }
    let overall = overall.unwrap_or(Outcome::Refuted);
    out.fact("summary", &[("candidates", count.to_string()), ("status", overall.word().into())]);
    Ok(overall)
}

// ---- lcf ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Basic,
    Even,
    /// Every maximal girth-safe orbit set, for small `r * s`.
    Exhaustive,
}

#[derive(Debug, Subcommand)]
pub enum Lcf {
    /// Expand an LCF table into a graph.
    Realize {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "g6")]
        to: OutputFormat,
    },
    /// Randomized search for LCF(r,s) graphs of girth at least g that the
    /// local search cannot k-colour.
    Search {
        #[arg(long, value_enum, default_value = "even")]
        algo: Algo,
        /// Required girth lower bound.
        #[arg(long)]
        g: usize,
        /// Number of vertex orbits under the shift.
        #[arg(long)]
        r: usize,
        /// Length of each vertex orbit.
        #[arg(long)]
        s: usize,
        /// Colour count the local search tries.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Required for the randomized algorithms.
        #[arg(long)]
        seed: Option<u64>,
        /// Fraction of orbit picks made uniformly at random (even search).
        #[arg(long, default_value_t = 0.25)]
        random_frac: f64,
        /// Odd-cycle edge threshold; calibrated from early iterations when omitted.
        #[arg(long)]
        odd_threshold: Option<usize>,
        /// Stop after this many outer iterations.
        #[arg(long)]
        max_iterations: Option<u64>,
        /// Wall-clock limit for the search, in seconds; without this or
        /// `--max-iterations` the budget tier's limit applies.
        #[arg(long, value_name = "SECS")]
        search_time: Option<f64>,
        /// Orbit-count ceiling for the exhaustive search.
        #[arg(long, default_value_t = 24)]
        max_orbits: usize,
        /// Decide k-colourability of the candidate exactly.
        #[arg(long)]
        verify_exact: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

pub fn lcf(cmd: &Lcf, out: Out) -> Result<Outcome> {
    match cmd {
        Lcf::Realize { input, to } => convert(&ConvertArgs {
            input: InputArgs { input: input.input.clone(), input_format: InputFormat::Lcf, lcf_s: input.lcf_s },
            to: *to,
        }),
        Lcf::Search {
            algo,
            g,
            r,
            s,
            k,
            seed,
            random_frac,
            odd_threshold,
            max_iterations,
            search_time,
            max_orbits,
            verify_exact,
            budget,
        } => {
            if !(0.0..=1.0).contains(random_frac) {
                return Err(usage("--random-frac must lie in [0, 1]"));
            }
            if seed.is_none() && *algo != Algo::Exhaustive {
                return Err(usage("--seed is required for the randomized searches"));
            }
            let mut params = SearchParams::new(*g, *r, *s);
            params.k = *k;
            params.seed = seed.unwrap_or(0);
            if *algo != Algo::Exhaustive {
                out.fact("seed", &[("value", params.seed.to_string())]);
            }
            // without explicit limits the search runs under the budget tier
            let tier_limit = || if max_iterations.is_none() { budget.budget().time_limit } else { None };
            let search_budget = SearchBudget {
                max_iterations: *max_iterations,
                time_limit: search_time.map(|t| Duration::from_secs_f64(t.max(0.0))).or_else(tier_limit),
            };
            let candidate = match algo {
                Algo::Basic => report_search(basic_search(&params, &search_budget), out),
                Algo::Even => {
                    let heuristics = EvenGirthHeuristics {
                        random_pick_fraction: *random_frac,
                        odd_cycle_edge_threshold: *odd_threshold,
                        ..EvenGirthHeuristics::default()
                    };
                    report_search(even_girth_search(&params, &heuristics, &search_budget), out)
                }
                Algo::Exhaustive => {
                    let result = exhaustive_search(&params, *max_orbits)?;
                    out.fact("search", &[("maximal_sets", result.maximal_sets.to_string())]);
                    result.candidate
                }
            };
            let Some(c) = candidate else {
                out.fact("candidate", &[("value", "none".into()), ("status", "indeterminate".into())]);
                return Ok(Outcome::Indeterminate);
            };
            out.fact(
                "candidate",
                &[
                    ("iteration", c.iteration.to_string()),
                    ("order", c.graph.order().to_string()),
                    ("girth", show_girth(girth(&c.graph))),
                    ("graph6", encode_graph6(&c.graph)),
                ],
            );
            print!("{}", emit_lcf_table(&c.scheme));
            if !verify_exact {
                return Ok(Outcome::Confirmed);
            }
            let (value, outcome) = match decide_k_colorable(&c.graph, *k, None, &budget.budget()) {
                Decision::NotColorable => (format!("not {k}-colourable"), Outcome::Confirmed),
                Decision::Colorable(_) => (format!("{k}-colourable"), Outcome::Refuted),
                Decision::BudgetExhausted => ("budget exhausted".into(), Outcome::Indeterminate),
            };
            out.fact("exact", &[("value", value), ("status", outcome.word().into())]);
            Ok(outcome)
        }
    }
}

fn report_search(outcome: SearchOutcome, out: Out) -> Option<girthcolor::lcf::Candidate> {
    let mut fields = vec![("iterations", outcome.iterations.to_string())];
    if let Some(t) = outcome.odd_cycle_edge_threshold {
        fields.push(("odd_cycle_edge_threshold", t.to_string()));
    }
    out.fact("search", &fields);
    outcome.candidate
}

// ---- enumerate ----

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Largest order generated.
    #[arg(long)]
    pub max_n: usize,
    /// Smallest order reported.
    #[arg(long, default_value_t = 1)]
    pub min_n: usize,
    /// Girth lower bound.
    #[arg(long, default_value_t = 3)]
    pub girth: usize,
    /// Minimum degree of the reported graphs.
    #[arg(long, default_value_t = 0)]
    pub min_deg: usize,
    /// Maximum degree of every generated graph.
    #[arg(long)]
    pub max_deg: Option<usize>,
    /// Check that every generated graph is K-colourable.
    #[arg(long, value_name = "K")]
    pub assert_colorable: Option<usize>,
    /// Print the graph6 line of every generated graph.
    #[arg(long)]
    pub emit: bool,
    /// `--unbounded` also lifts the order cap.
    #[command(flatten)]
    pub budget: BudgetArgs,
}

pub fn enumerate(args: &EnumerateArgs, out: Out) -> Result<Outcome> {
    let mut c = GenerationConstraints::new(args.max_n)
        .with_min_order(args.min_n)
        .with_girth(args.girth)
        .with_degrees(args.min_deg, args.max_deg);
    if args.budget.unbounded {
        c = c.with_order_cap(64);
    }
    let print_counts = |counts: &girthcolor::enumerate::GenerationCounts| {
        for (n, count) in counts.nonzero() {
            out.fact("count", &[("order", n.to_string()), ("graphs", count.to_string())]);
        }
    };
    match args.assert_colorable {
        None => {
            let emitted = Mutex::new(Vec::new());
            let counts = generate(&c, |g| {
                if args.emit {
                    emitted.lock().expect("emit lock").push((g.order(), encode_graph6(g)));
                }
            })
            .map_err(|e| usage(&e.to_string()))?;
            let mut emitted = emitted.into_inner().expect("emit lock");
            emitted.sort();
            for (_, line) in emitted {
                println!("{line}");
            }
            print_counts(&counts);
            Ok(Outcome::Confirmed)
        }
        Some(k) => match certify_all_colorable(&c, k, &args.budget.budget()).map_err(|e| usage(&e.to_string()))? {
            Certification::AllColorable { counts } => {
                print_counts(&counts);
                out.fact("certificate", &[("value", format!("all {k}-colourable")), ("status", "confirmed".into())]);
                Ok(Outcome::Confirmed)
            }
            Certification::Counterexample(g) => {
                out.fact(
                    "counterexample",
                    &[("order", g.order().to_string()), ("graph6", encode_graph6(&g)), ("status", "refuted".into())],
                );
                Ok(Outcome::Refuted)
            }
            Certification::Indeterminate(g) => {
                out.fact(
                    "undecided",
                    &[
                        ("order", g.order().to_string()),
                        ("graph6", encode_graph6(&g)),
                        ("status", "indeterminate".into()),
                    ],
                );
                Ok(Outcome::Indeterminate)
            }
        },
    }
}
