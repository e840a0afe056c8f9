use std::process::ExitCode;
use std::sync::Arc;

use burnside_core::induced::{
    norm_partition, restriction_parks_hom, subgroup_table, transfer_parks_inclusion,
    transfer_parks_trivial, FrobeniusWielandt, ParksMapMatrix,
};
use burnside_core::json::{self, table_for_spec};
use burnside_core::partitions::enumerate_parts;
use burnside_core::verify::{self, Suite, VerifyConfig};
use burnside_core::wreath_power::{from_parks, parks_char, power_op, Level};
use burnside_core::{
    AAElement, BurnsideElement, Caps, DecoratedPartition, Error, GroupHom, PermGroup, Permutation,
    SubgroupRef, TableRef,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "burnside",
    version,
    about = "Burnside rings of wreath products"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest group whose elements may be listed.
    #[arg(long, default_value_t = Caps::default().max_elements, global = true)]
    cap_elements: usize,
    /// Largest group whose subgroup classes may be enumerated.
    #[arg(long, default_value_t = Caps::default().max_subgroup_order, global = true)]
    cap_subgroups: usize,
    /// Largest explicit G-set that may be built.
    #[arg(long, default_value_t = Caps::default().max_points, global = true)]
    cap_points: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Restriction,
    Transfer,
    Fw,
    Norm,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of marks `|(G/H)^K|`.
    Marks {
        #[arg(long)]
        group: String,
    },
    /// The decorated partitions `Parts(G, n)`.
    Parts {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
    },
    /// The total power operation `Pₙ(x)`.
    Power {
        #[arg(long)]
        group: String,
        /// A Burnside element: JSON, a coordinate array or an integer `k` for `k[G/G]`.
        #[arg(long)]
        element: String,
        #[arg(long)]
        n: usize,
        /// Also decompose the explicit power set and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// The parks character of an element of `𝔸(G, n)`.
    ParksChar {
        #[arg(long)]
        group: String,
        /// An 𝔸 element: JSON or a single partition such as `2·([e],1)`.
        #[arg(long)]
        element: String,
    },
    /// The transfer product `x ★ y` in `𝔸(G)`.
    Star {
        #[arg(long)]
        group: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        other: String,
    },
    /// The matrix of an induced map on parks, `Parks(from, n) → Parks(to, n)`.
    InducedMap {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Source group. For transfers a subgroup of `--to`, given by generators
        /// on the same points; for restrictions the ambient group.
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: String,
        /// Degree. Ignored for norms, which use the index.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Apply the map to this 𝔸 element of the source.
        #[arg(long)]
        element: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

/// Everything a command needs besides its own arguments.
struct RunConfig {
    format: Format,
    caps: Caps,
}

enum Failure {
    /// Exit 1.
    Verification(String),
    /// Exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        format: cli.format,
        caps: Caps {
            max_elements: cli.cap_elements,
            max_subgroup_order: cli.cap_subgroups,
            max_points: cli.cap_points,
        },
    };
    match run(&cli.command, &cfg) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            println!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: &Command, cfg: &RunConfig) -> Outcome {
    match cmd {
        Command::Marks { group } => marks(&table_for_spec(group, &cfg.caps)?, cfg),
        Command::Parts { group, n } => parts(&table_for_spec(group, &cfg.caps)?, *n, cfg),
        Command::Power {
            group,
            element,
            n,
            oracle,
        } => power(
            &table_for_spec(group, &cfg.caps)?,
            element,
            *n,
            *oracle,
            cfg,
        ),
        Command::ParksChar { group, element } => {
            let t = table_for_spec(group, &cfg.caps)?;
            let x = parse_aa(&t, element)?;
            Ok(emit_parks(&parks_char(&x), cfg))
        }
        Command::Star {
            group,
            element,
            other,
        } => {
            let t = table_for_spec(group, &cfg.caps)?;
            let z = parse_aa(&t, element)?.star(&parse_aa(&t, other)?)?;
            Ok(emit_aa(&z, cfg))
        }
        Command::InducedMap {
            kind,
            from,
            to,
            n,
            element,
        } => induced_map(*kind, from.as_deref(), to, *n, element.as_deref(), cfg),
        Command::Verify { suite, group, n } => {
            let suite: Suite = suite.parse()?;
            let t = table_for_spec(group, &cfg.caps)?;
            let report = verify::run(suite, &VerifyConfig::new(t, *n, cfg.caps));
            let out = match cfg.format {
                Format::Text => report.to_string(),
                Format::Json => json::to_string(&report),
            };
            if report.passed() {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn marks(t: &TableRef, cfg: &RunConfig) -> Outcome {
    let m = t.marks();
    let labels = t.labels();
    Ok(match cfg.format {
        Format::Json => json::to_string(&json!({
            "group": t.group().spec_string(),
            "classes": labels,
            "orders": (0..t.len()).map(|i| t.subgroup_order(i)).collect::<Vec<_>>(),
            "marks": m,
        })),
        Format::Text => {
            let width = labels
                .iter()
                .map(|l| l.chars().count())
                .chain(m.iter().flatten().map(|v| v.to_string().len()))
                .max()
                .unwrap_or(1);
            let mut lines = vec![format!(
                "{:w$} {}",
                "",
                labels
                    .iter()
                    .map(|l| format!("{l:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" "),
                w = width
            )];
            for (i, row) in m.iter().enumerate() {
                lines.push(format!(
                    "{:w$} {}",
                    labels[i],
                    row.iter()
                        .map(|v| format!("{v:>width$}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                    w = width
                ));
            }
            lines.join("\n")
        }
    })
}

fn parts(t: &TableRef, n: usize, cfg: &RunConfig) -> Outcome {
    let all = enumerate_parts(t.len(), n);
    Ok(match cfg.format {
        Format::Json => json::to_string(
            &all.iter()
                .map(|l| json::partition_to_json(t, l))
                .collect::<Vec<_>>(),
        ),
        Format::Text => all
            .iter()
            .map(|l| l.render(|x| t.label(x).to_string()))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn power(t: &TableRef, element: &str, n: usize, oracle: bool, cfg: &RunConfig) -> Outcome {
    let x = parse_burnside(t, element)?;
    let p = power_op(&x, n)?;
    let out = emit_aa(&p, cfg);
    if oracle {
        let lv = Level::new(t.clone(), n, &cfg.caps)?;
        let o = lv.oracle_power_op(&x)?;
        if o != p {
            return Err(Failure::Verification(format!(
                "{out}\noracle disagrees: {o}"
            )));
        }
    }
    Ok(out)
}

/// Burnside element from JSON, a JSON array of coordinates or an integer.
fn parse_burnside(t: &TableRef, text: &str) -> Result<BurnsideElement, Error> {
    let v: Value = json::from_str(text)?;
    match v {
        Value::Number(k) => {
            let k = k
                .as_i64()
                .ok_or_else(|| Error::Json(format!("bad integer `{text}`")))?;
            Ok(BurnsideElement::one(t.clone()).scale(&k.into()))
        }
        Value::Array(items) => {
            let coords = items
                .iter()
                .map(|c| {
                    c.as_i64()
                        .ok_or_else(|| Error::Json("coordinates must be integers".into()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != t.len() {
                return Err(Error::Json(format!("expected {} coordinates", t.len())));
            }
            Ok(BurnsideElement::from_coords(t.clone(), &coords))
        }
        _ => json::burnside_from_json(
            t,
            &serde_json::from_value(v).map_err(|e| Error::Json(e.to_string()))?,
        ),
    }
}

/// 𝔸 element from JSON or a single partition in text form.
fn parse_aa(t: &TableRef, text: &str) -> Result<AAElement, Error> {
    if text.trim_start().starts_with('{') {
        return json::aa_from_json(t, &json::from_str(text)?);
    }
    let lambda = DecoratedPartition::parse(text, |l| t.find_label(l))?;
    Ok(AAElement::basis(t.clone(), lambda))
}

/// Integer-partition notation such as `1+1` for the trivial group.
fn integer_key(lambda: &DecoratedPartition) -> String {
    let mut sizes: Vec<usize> = lambda
        .parts()
        .flat_map(|((_, m), k)| std::iter::repeat_n(m, k))
        .collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes.is_empty() {
        return "0".into();
    }
    sizes
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

fn emit_aa(x: &AAElement, cfg: &RunConfig) -> String {
    match cfg.format {
        Format::Json => json::to_string(&json::aa_to_json(x)),
        Format::Text if x.table().group().order() == 1 => {
            let mut terms: Vec<(String, String)> = x
                .terms()
                .map(|(l, c)| (integer_key(l), c.to_string()))
                .collect();
            terms.sort_by(|a, b| b.0.cmp(&a.0));
            let body: Vec<String> = terms.iter().map(|(k, c)| format!("\"{k}\":{c}")).collect();
            format!("{{{}}}", body.join(", "))
        }
        Format::Text => x.to_string(),
    }
}

fn emit_parks(f: &burnside_core::ParksVector, cfg: &RunConfig) -> String {
    match cfg.format {
        Format::Json => json::to_string(&json::parks_to_json(f)),
        Format::Text => {
            let t = f.table();
            let lines: Vec<String> = enumerate_parts(t.len(), f.degree())
                .iter()
                .map(|l| format!("{}: {}", l.render(|x| t.label(x).to_string()), f.value(l)))
                .collect();
            lines.join("\n")
        }
    }
}

fn emit_map(m: &ParksMapMatrix, cfg: &RunConfig) -> String {
    match cfg.format {
        Format::Json => json::to_string(&json::parks_map_to_json(m)),
        Format::Text => format!("{m:?}").trim_end().to_string(),
    }
}

/// The subgroup of `ambient` generated by the generators of `spec`, read as
/// permutations of the first points of the ambient domain.
fn subgroup_from_spec(
    spec: &str,
    ambient: &Arc<PermGroup>,
    caps: &Caps,
) -> Result<SubgroupRef, Error> {
    let small = PermGroup::from_spec(spec, caps)?;
    let d = ambient.degree();
    if small.degree() > d {
        return Err(Error::NotASubgroup);
    }
    let gens = small
        .generators()
        .iter()
        .map(|&g| {
            let mut images: Vec<usize> = small.element(g as usize).images().collect();
            images.extend(small.degree()..d);
            let p = Permutation::from_images(images).ok_or(Error::NotASubgroup)?;
            ambient.index_of(&p).ok_or(Error::NotASubgroup)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubgroupRef::generated_by(ambient.clone(), &gens))
}

fn induced_map(
    kind: Kind,
    from: Option<&str>,
    to: &str,
    n: usize,
    element: Option<&str>,
    cfg: &RunConfig,
) -> Outcome {
    let caps = &cfg.caps;
    let matrix = match kind {
        Kind::Transfer => {
            let tgt = table_for_spec(to, caps)?;
            let from = require(from)?;
            if tgt.group().order() == 1 {
                let src = table_for_spec(from, caps)?;
                transfer_parks_trivial(&src, &tgt, n)?
            } else {
                let (src, inc) =
                    subgroup_table(&subgroup_from_spec(from, tgt.group(), caps)?, caps)?;
                transfer_parks_inclusion(&inc, &src, &tgt, n)?
            }
        }
        Kind::Restriction => {
            let src = table_for_spec(require(from)?, caps)?;
            if src.group().order() == 1 {
                let tgt = table_for_spec(to, caps)?;
                let phi = GroupHom::to_trivial(tgt.group().clone(), src.group().clone());
                restriction_parks_hom(&phi, &tgt, &src, n)?
            } else {
                let (tgt, inc) = subgroup_table(&subgroup_from_spec(to, src.group(), caps)?, caps)?;
                restriction_parks_hom(&inc, &tgt, &src, n)?
            }
        }
        Kind::Fw => {
            let tgt = table_for_spec(to, caps)?;
            let fw = match from {
                Some(f) => FrobeniusWielandt::with_cyclic(tgt, table_for_spec(f, caps)?)?,
                None => FrobeniusWielandt::new(tgt, caps)?,
            };
            fw.lift(n)
        }
        Kind::Norm => return norm(require(from)?, to, element, cfg),
    };
    let mut out = emit_map(&matrix, cfg);
    if let Some(e) = element {
        let x = parse_aa(matrix.source(), e)?;
        let image = matrix.apply(&parks_char(&x))?;
        out.push('\n');
        out.push_str(&match from_parks(&image) {
            Ok(y) => emit_aa(&y, cfg),
            Err(_) => emit_parks(&image, cfg),
        });
    }
    Ok(out)
}

fn require(from: Option<&str>) -> Result<&str, Failure> {
    from.ok_or_else(|| Failure::Usage("--from is required for this kind".into()))
}

/// `R_G^H` as the map `[K] ↦ βφ[K]`, optionally evaluated on an element.
fn norm(from: &str, to: &str, element: Option<&str>, cfg: &RunConfig) -> Outcome {
    let caps = &cfg.caps;
    let tgt = table_for_spec(to, caps)?;
    let (src, inc) = subgroup_table(&subgroup_from_spec(from, tgt.group(), caps)?, caps)?;
    let index = tgt.group().order() / src.group().order();
    let rows = tgt
        .reps()
        .map(|k| norm_partition(&inc, &src, k))
        .collect::<Result<Vec<_>, _>>()?;
    let values = match element {
        Some(e) => {
            let x = parse_aa(&src, e)?;
            if x.degree() != index {
                return Err(Error::DegreeMismatch {
                    expected: index,
                    found: x.degree(),
                }
                .into());
            }
            let f = burnside_core::induced::norm_restriction(&inc, &src, &tgt, &parks_char(&x))?;
            Some(f)
        }
        None => None,
    };
    Ok(match cfg.format {
        Format::Json => {
            let mut v = json!({
                "source": src.group().spec_string(),
                "target": tgt.group().spec_string(),
                "n": index,
                "rows": (0..tgt.len()).map(|k| json!({
                    "class": tgt.label(k),
                    "partition": json::partition_to_json(&src, &rows[k]),
                })).collect::<Vec<_>>(),
            });
            if let Some(f) = &values {
                v["marks"] = serde_json::to_value(json::marks_to_json(f)).expect("plain data");
                if let Ok(b) = BurnsideElement::from_marks(f) {
                    v["element"] =
                        serde_json::to_value(json::burnside_to_json(&b)).expect("plain data");
                }
            }
            json::to_string(&v)
        }
        Format::Text => {
            let mut lines: Vec<String> = (0..tgt.len())
                .map(|k| {
                    format!(
                        "[{}] -> {}",
                        tgt.label(k),
                        rows[k].render(|x| src.label(x).to_string())
                    )
                })
                .collect();
            if let Some(f) = &values {
                lines.push(format!("marks: {f:?}"));
                if let Ok(b) = BurnsideElement::from_marks(f) {
                    lines.push(format!("element: {b}"));
                }
            }
            lines.join("\n")
        }
    })
}
