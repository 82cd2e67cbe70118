use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use planar_rook::enumeration::{
    ballot_decode, ballot_encode, enumerate_bn, order_bn, order_prn, order_recursive, BallotSequence,
};
use planar_rook::poset::{
    branch_compute, branch_even, branch_even_compute, branch_predict, cyclic_span, decompose, dim_cyclic,
    dim_oracle, dim_single, reduced_form, reduced_support, BranchSummand, ModuleVector, SummandLabel,
};
use planar_rook::presentation::{expand_std, rewrite, Word};
use planar_rook::rook::parse_element;
use planar_rook::verify::{self, Suite};
use planar_rook::{PrintStyle, Subset};

#[derive(Parser)]
#[command(name = "planar-rook", version, about = "Exact computation in the planar upper triangular rook monoid B_n")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderMethod {
    Catalan,
    Recursive,
    Enumerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Pairs,
    TwoLine,
    Matrix,
}

impl From<Style> for PrintStyle {
    fn from(s: Style) -> Self {
        match s {
            Style::Pairs => PrintStyle::Pairs,
            Style::TwoLine => PrintStyle::TwoLine,
            Style::Matrix => PrintStyle::Matrix,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Orders,
    Dims,
    Identities,
    Branching,
    Relations,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Orders => Suite::Orders,
            SuiteArg::Dims => Suite::Dims,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Branching => Suite::Branching,
            SuiteArg::Relations => Suite::Relations,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Order of B_n (or of PR_n with --planar).
    Order {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OrderMethod::Catalan)]
        method: OrderMethod,
        #[arg(long)]
        planar: bool,
    },
    /// Lists every element of B_n, ordered by domain then range bitmask.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Style::Pairs)]
        style: Style,
    },
    /// Ballot sequence of an element, or the element of a sequence.
    Ballot {
        #[arg(long, required_unless_present = "decode")]
        n: Option<usize>,
        /// Element such as "[{1,3}->{1,2}]".
        #[arg(long, conflicts_with = "decode", required_unless_present = "decode")]
        element: Option<String>,
        /// Sequence of 1 (+1) and 0 (-1), e.g. "1010".
        #[arg(long)]
        decode: Option<String>,
    },
    /// Dimension of the cyclic module B_n v_S.
    Dim {
        #[arg(long)]
        n: usize,
        /// Comma-separated ascending elements; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        /// Count sub-partitions instead of evaluating the closed formula.
        #[arg(long)]
        oracle: bool,
    },
    /// Basis of the cyclic module B_n v.
    Span(VectorArgs),
    /// Reduced support and reduced form of v.
    Reduce(VectorArgs),
    /// Splits B_n v into indecomposable summands.
    Decompose(VectorArgs),
    /// Branching of W^m_k to B_{m+l}, or of W_k to B_{2(k-1)} with --even.
    Branch {
        #[arg(long, required_unless_present = "even")]
        m: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long, required_unless_present = "even")]
        l: Option<usize>,
        #[arg(long, conflicts_with_all = ["m", "l"])]
        even: bool,
        /// Group the basis directly instead of using the closed formula.
        #[arg(long)]
        compute: bool,
    },
    /// Normal form (S, T) of a word in l<i>, e<j> and 1.
    Rewrite {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Runs verification sweeps and prints a pass/fail table.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        small: bool,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
    },
}

#[derive(Args)]
struct VectorArgs {
    #[arg(long)]
    n: usize,
    /// A term "coef:subset", e.g. "-3/2:1,4"; repeatable.
    #[arg(long = "term", allow_hyphen_values = true)]
    terms: Vec<String>,
    /// A term with coefficient 1; repeatable.
    #[arg(long = "subset", allow_hyphen_values = true)]
    subsets: Vec<String>,
}

type CliResult<T> = Result<T, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, ok)) => {
            print!("{output}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn err(e: planar_rook::Error) -> String {
    e.to_string()
}

fn set_json(s: &Subset) -> Value {
    json!(s.to_vec())
}

fn vector_json(v: &ModuleVector) -> Value {
    Value::Array(
        v.terms()
            .map(|(s, c)| json!({"subset": s.to_vec(), "numerator": c.numer().to_string(), "denominator": c.denom().to_string()}))
            .collect(),
    )
}

fn parse_vector(args: &VectorArgs) -> CliResult<ModuleVector> {
    let mut terms = Vec::new();
    for t in &args.terms {
        let (coef, set) = match t.split_once(':') {
            Some((c, s)) => {
                let c: BigRational = c.trim().parse().map_err(|_| format!("bad coefficient in term {t:?}"))?;
                (c, s)
            }
            None => (BigRational::from_integer(BigInt::from(1)), t.as_str()),
        };
        terms.push((Subset::parse(args.n, set).map_err(err)?, coef));
    }
    for s in &args.subsets {
        terms.push((Subset::parse(args.n, s).map_err(err)?, BigRational::from_integer(BigInt::from(1))));
    }
    ModuleVector::from_terms(args.n, terms).map_err(err)
}

fn summand_json(s: &BranchSummand) -> Value {
    match &s.label {
        SummandLabel::Interval { m, k } => json!({
            "m": m, "k": k,
            "multiplicity": s.multiplicity.to_string(),
            "dimension": s.dimension.to_string(),
        }),
        SummandLabel::Below(elems) => json!({
            "below": elems,
            "multiplicity": s.multiplicity.to_string(),
            "dimension": s.dimension.to_string(),
        }),
    }
}

fn summand_text(s: &BranchSummand) -> String {
    let label = match &s.label {
        SummandLabel::Interval { m, k } => format!("W^{m}_{k}"),
        SummandLabel::Below(elems) => {
            let inner: Vec<String> = elems.iter().map(usize::to_string).collect();
            format!("span below {{{}}}", inner.join(","))
        }
    };
    format!("{} x {label} (dimension {})", s.multiplicity, s.dimension)
}

/// Returns the rendered output and whether the command succeeded.
fn run(cli: &Cli) -> CliResult<(String, bool)> {
    let json_out = cli.format == Format::Json;
    let render = |value: Value, text: String| -> String {
        if json_out {
            format!("{value}\n")
        } else {
            text
        }
    };
    let out = match &cli.command {
        Command::Order { n, method, planar } => {
            planar_rook::subset::check_n(*n).map_err(err)?;
            let order = if *planar {
                order_prn(*n)
            } else {
                match method {
                    OrderMethod::Catalan => order_bn(*n),
                    OrderMethod::Recursive => order_recursive(*n),
                    OrderMethod::Enumerate => enumerate_bn(*n).map_err(err)?.count().into(),
                }
            };
            render(json!({"n": n, "order": order.to_string()}), format!("{order}\n"))
        }
        Command::Enumerate { n, style } => {
            let elements: Vec<_> = enumerate_bn(*n).map_err(err)?.collect();
            let value = json!({
                "n": n,
                "order": elements.len().to_string(),
                "elements": elements
                    .iter()
                    .map(|f| json!({"S": set_json(&f.domain()), "T": set_json(&f.range())}))
                    .collect::<Vec<_>>(),
            });
            let sep = if matches!(style, Style::Pairs) { "\n" } else { "\n\n" };
            let text: Vec<String> = elements.iter().map(|f| f.print((*style).into())).collect();
            render(value, format!("{}\n", text.join(sep)))
        }
        Command::Ballot { n, element, decode } => match decode {
            Some(seq) => {
                let b: BallotSequence = seq.parse().map_err(err)?;
                if let Some(n) = n {
                    if *n != b.n() {
                        return Err(format!("sequence has length {} but n = {n}", b.steps().len()));
                    }
                }
                let f = ballot_decode(&b).map_err(err)?;
                render(
                    json!({"n": b.n(), "sequence": b.to_string(), "S": set_json(&f.domain()), "T": set_json(&f.range())}),
                    format!("{f}\n"),
                )
            }
            None => {
                let n = n.expect("required by clap");
                let f = parse_element(n, element.as_deref().expect("required by clap")).map_err(err)?;
                let b = ballot_encode(&f).map_err(err)?;
                render(json!({"n": n, "sequence": b.to_string()}), format!("{b}\n"))
            }
        },
        Command::Dim { n, subset, oracle } => {
            let s = Subset::parse(*n, subset).map_err(err)?;
            let d = if *oracle { dim_oracle(&s) } else { dim_single(&s) };
            render(json!({"n": n, "subset": s.to_vec(), "dimension": d.to_string()}), format!("{d}\n"))
        }
        Command::Span(args) => {
            let v = parse_vector(args)?;
            let basis = cyclic_span(&v);
            let d = dim_cyclic(&v);
            let mut text = format!("dimension {d}\n");
            for s in &basis {
                text.push_str(&format!("{s}\n"));
            }
            render(
                json!({"n": args.n, "dimension": d.to_string(), "basis": basis.iter().map(set_json).collect::<Vec<_>>()}),
                text,
            )
        }
        Command::Reduce(args) => {
            let v = parse_vector(args)?;
            let red = reduced_support(&v);
            let form = reduced_form(&v);
            let sets: Vec<String> = red.sets().iter().map(Subset::to_string).collect();
            render(
                json!({
                    "n": args.n,
                    "reduced_support": red.sets().iter().map(set_json).collect::<Vec<_>>(),
                    "reduced_form": vector_json(&form),
                }),
                format!("reduced support: {}\nreduced form: {form}\n", sets.join(" ")),
            )
        }
        Command::Decompose(args) => {
            let v = parse_vector(args)?;
            let parts = decompose(&v);
            let mut text = String::new();
            let mut values = Vec::new();
            for p in &parts {
                let d = dim_cyclic(p);
                text.push_str(&format!("{p}  (dimension {d})\n"));
                values.push(json!({
                    "reduced_support": p.terms().map(|(s, _)| set_json(s)).collect::<Vec<_>>(),
                    "dimension": d.to_string(),
                }));
            }
            if parts.is_empty() {
                text.push_str("0\n");
            }
            render(json!({"n": args.n, "dimension": dim_cyclic(&v).to_string(), "summands": values}), text)
        }
        Command::Branch { m, k, l, even, compute } => {
            let summands = if *even {
                if *compute {
                    branch_even_compute(*k)
                } else {
                    branch_even(*k)
                }
            } else {
                let (m, l) = (m.expect("required by clap"), l.expect("required by clap"));
                if *compute {
                    branch_compute(m, *k, l)
                } else {
                    branch_predict(m, *k, l)
                }
            }
            .map_err(err)?;
            let text: String = summands.iter().map(|s| summand_text(s) + "\n").collect();
            render(json!({"summands": summands.iter().map(summand_json).collect::<Vec<_>>()}), text)
        }
        Command::Rewrite { n, word } => {
            let w = Word::parse(*n, word).map_err(err)?;
            let std = rewrite(&w).map_err(err)?;
            let compact = json!({"S": set_json(&std.s()), "T": set_json(&std.t())});
            render(
                json!({"n": n, "S": set_json(&std.s()), "T": set_json(&std.t()), "word": expand_std(&std).to_string()}),
                format!("{compact}\n"),
            )
        }
        Command::Verify { suite, seed, small, kmax, nmax } => {
            let opts = verify::Options { seed: *seed, small: *small, kmax: *kmax, nmax: *nmax };
            let results = verify::run((*suite).into(), &opts).map_err(err)?;
            let ok = results.iter().all(|r| r.passed());
            let text: String = results.iter().map(|r| format!("{r}\n")).collect::<String>()
                + if ok { "all checks passed\n" } else { "some checks FAILED\n" };
            let value = json!({
                "passed": ok,
                "results": results
                    .iter()
                    .map(|r| json!({"name": r.name, "cases": r.cases, "failures": r.failures, "passed": r.passed()}))
                    .collect::<Vec<_>>(),
            });
            return Ok((render(value, text), ok));
        }
    };
    Ok((out, true))
}
