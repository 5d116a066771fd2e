//! `verify`: check a graph against expected girth, degrees, chromatic
//! number, criticality and colourability.

use std::time::Instant;

use anyhow::Result;
use clap::Args;
use girthcolor::coloring::{
    chromatic_number, decide_k_colorable, decide_k_colorable_plain, random_colourable, vertex_criticality, Criticality,
    LocalSearchParams,
};
use girthcolor::graph::{girth, GirthValue};
use girthcolor::{ChromaticNumber, ColorBudget, Decision, Graph};

use crate::budget::BudgetArgs;
use crate::input::{load, InputFormat};
use crate::output::{show_girth, Out, Outcome};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Graph file, `-` for stdin, `fixture:NAME`, or a built-in such as `cycle:5`.
    pub input: String,
    #[arg(long, value_enum, default_value = "auto")]
    pub input_format: InputFormat,
    /// Cycle length for LCF tables without an `LCF(r,s)` header.
    #[arg(long)]
    pub lcf_s: Option<usize>,
    /// Expected girth, exactly.
    #[arg(long)]
    pub girth: Option<usize>,
    /// Expected common degree.
    #[arg(long)]
    pub regular: Option<usize>,
    /// Expected chromatic number, exactly.
    #[arg(long)]
    pub chromatic: Option<usize>,
    /// Expect every vertex deletion to lower the chromatic number.
    #[arg(long, requires = "chromatic")]
    pub critical: bool,
    /// Expect no triangles.
    #[arg(long)]
    pub triangle_free: bool,
    /// Expect a colouring with this many colours to be found.
    #[arg(long, value_name = "K", alias = "colorable")]
    pub colourable: Option<usize>,
    /// Repeat the chromatic decisions with the plain backtracking solver.
    #[arg(long)]
    pub cross_check: bool,
    /// Largest order the plain solver is run on.
    #[arg(long, default_value_t = 80)]
    pub cross_check_max_order: usize,
    /// Seed for the local-search colouring attempts.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

fn seconds(t: Instant) -> String {
    format!("{:.3}", t.elapsed().as_secs_f64())
}

fn status(ok: bool) -> Outcome {
    if ok {
        Outcome::Confirmed
    } else {
        Outcome::Refuted
    }
}

fn show_chromatic(c: ChromaticNumber) -> String {
    match c {
        ChromaticNumber::Exact(k) => format!("Exact({k})"),
        ChromaticNumber::Bounds { lower, upper } => format!("Bounds({lower}..={upper})"),
    }
}

/// Local search first, then the exact solver.
fn try_colour(g: &Graph, k: usize, budget: &ColorBudget, seed: u64) -> Decision {
    match random_colourable(g, k, &LocalSearchParams::default(), seed) {
        Some(c) => Decision::Colorable(c),
        None => decide_k_colorable(g, k, None, budget),
    }
}

pub fn run(args: &VerifyArgs, out: Out) -> Result<Outcome> {
    let input = load(&args.input, args.input_format, args.lcf_s)?;
    let g = &input.graph;
    let budget = args.budget.budget();
    let mut overall = Outcome::Confirmed;

    out.fact(
        "input",
        &[
            ("source", input.source.clone()),
            ("sha256", input.hash.clone()),
            ("order", g.order().to_string()),
            ("size", g.size().to_string()),
        ],
    );
    let deg = g.degree_summary();
    let mut fields = vec![
        ("min", deg.min_degree.to_string()),
        ("max", deg.max_degree.to_string()),
        ("regular", deg.is_regular.to_string()),
    ];
    if let Some(d) = args.regular {
        let s = status(deg.is_regular && deg.min_degree == d);
        overall = overall.and(s);
        fields.push(("expected", d.to_string()));
        fields.push(("status", s.word().into()));
    }
    out.fact("degrees", &fields);

    let t = Instant::now();
    let gv = girth(g);
    let mut fields = vec![("value", show_girth(gv))];
    if let Some(expected) = args.girth {
        let s = status(gv == GirthValue::Finite(expected));
        overall = overall.and(s);
        fields.push(("expected", expected.to_string()));
        fields.push(("status", s.word().into()));
    }
    fields.push(("seconds", seconds(t)));
    out.fact("girth", &fields);

    if args.triangle_free {
        let s = status(g.is_triangle_free());
        overall = overall.and(s);
        out.fact("triangle-free", &[("value", g.is_triangle_free().to_string()), ("status", s.word().into())]);
    }

    if let Some(k) = args.colourable {
        let t = Instant::now();
        let decision = try_colour(g, k, &budget, args.seed);
        let s = match &decision {
            Decision::Colorable(c) => status(c.is_proper(g) && c.colors_used() <= k),
            Decision::NotColorable => Outcome::Refuted,
            Decision::BudgetExhausted => Outcome::Indeterminate,
        };
        overall = overall.and(s);
        let value = match decision {
            Decision::Colorable(_) => "colouring found",
            Decision::NotColorable => "no colouring exists",
            Decision::BudgetExhausted => "budget exhausted",
        };
        out.fact(
            "colourable",
            &[("value", value.into()), ("k", k.to_string()), ("status", s.word().into()), ("seconds", seconds(t))],
        );
    }

    if let Some(k) = args.chromatic {
        let t = Instant::now();
        let upper = try_colour(g, k, &budget, args.seed);
        let lower = if k == 0 { Decision::NotColorable } else { decide_k_colorable(g, k - 1, None, &budget) };
        let (value, s) = match (&upper, &lower) {
            (Decision::Colorable(_), Decision::NotColorable) => (ChromaticNumber::Exact(k), Outcome::Confirmed),
            (Decision::NotColorable, _) | (_, Decision::Colorable(_)) => {
                (chromatic_number(g, &budget), Outcome::Refuted)
            }
            _ => {
                let lower_bound = if lower.is_not_colorable() { k } else { 1 };
                let upper_bound = if upper.is_colorable() { k } else { g.order() };
                (ChromaticNumber::Bounds { lower: lower_bound, upper: upper_bound }, Outcome::Indeterminate)
            }
        };
        overall = overall.and(s);
        out.fact(
            "chromatic",
            &[
                ("value", show_chromatic(value)),
                ("expected", k.to_string()),
                ("status", s.word().into()),
                ("seconds", seconds(t)),
            ],
        );

        if args.cross_check {
            overall = overall.and(cross_check(g, k, &upper, &lower, args, &budget, out));
        }

        if args.critical {
            let t = Instant::now();
            let (value, s) = if value != ChromaticNumber::Exact(k) {
                ("skipped, chromatic number not established".to_string(), Outcome::Indeterminate)
            } else {
                match vertex_criticality(g, k, &budget) {
                    Criticality::Critical => ("vertex-critical".into(), Outcome::Confirmed),
                    Criticality::NotCritical { vertex } => {
                        (format!("deleting vertex {vertex} keeps chromatic number {k}"), Outcome::Refuted)
                    }
                    Criticality::Indeterminate { vertices } => {
                        (format!("{} deletions undecided", vertices.len()), Outcome::Indeterminate)
                    }
                }
            };
            overall = overall.and(s);
            out.fact("critical", &[("value", value), ("status", s.word().into()), ("seconds", seconds(t))]);
        }
    }

    out.fact("verdict", &[("value", overall.word().into())]);
    Ok(overall)
}

/// Re-decides the two chromatic questions with the plain solver and reports
/// whether the answers agree with the main kernel.
fn cross_check(
    g: &Graph,
    k: usize,
    upper: &Decision,
    lower: &Decision,
    args: &VerifyArgs,
    budget: &ColorBudget,
    out: Out,
) -> Outcome {
    if g.order() > args.cross_check_max_order {
        out.fact(
            "cross-check",
            &[
                ("value", "skipped".into()),
                ("reason", format!("order above {}", args.cross_check_max_order)),
                ("status", Outcome::Indeterminate.word().into()),
            ],
        );
        return Outcome::Indeterminate;
    }
    let t = Instant::now();
    let mut questions = vec![(k, upper)];
    if k > 0 {
        questions.push((k - 1, lower));
    }
    let mut s = Outcome::Confirmed;
    for (j, main) in questions {
        let plain = decide_k_colorable_plain(g, j, None, budget);
        s = s.and(match (main, &plain) {
            (Decision::BudgetExhausted, _) | (_, Decision::BudgetExhausted) => Outcome::Indeterminate,
            (a, b) if a.is_colorable() == b.is_colorable() => Outcome::Confirmed,
            _ => Outcome::Refuted,
        });
    }
    let value = match s {
        Outcome::Confirmed => "agrees",
        Outcome::Refuted => "disagrees",
        Outcome::Indeterminate => "budget exhausted",
    };
    out.fact("cross-check", &[("value", value.into()), ("status", s.word().into()), ("seconds", seconds(t))]);
    s
}
