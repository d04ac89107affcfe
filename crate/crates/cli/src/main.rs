use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use blockdual::blocks::{classify_derived_equivalent, coinvariant_profile, hp_partial_flag};
use blockdual::coxeter::DEFAULT_CAP;
use blockdual::functor_calculus::{
    coringel_image_standard, derived_twist_standard, derived_zuckerman_standard, koszul_ringel_phi,
    ringel_image_standard, shuffle_translated_standard, theorem_d_check, translate_onto_wall_simple,
    translate_onto_wall_standard, translate_out_of_wall_standard, wall_crossing_decomposition,
    zuckerman_inclusion_decomposition,
};
use blockdual::json::{multiset_to_json, BlockJson, ModuleJson};
use blockdual::quiver::{block_quiver, self_duality_analysis, LeafFlags};
use blockdual::{
    BlockDescriptor, CartanDatum, ClassifierSpec, CosetSide, Error, GradedMultiset, GradedPolynomial, IdentityShift,
    IndexedModule, KLTable, ModuleKind, ParabolicSubset, RepFlavor, WeylElement,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "blockdual", version, about = "Combinatorics of blocks in parabolic and singular category O")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest group any operation may enumerate.
    #[arg(long, global = true, env = "BLOCKDUAL_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args, Clone)]
struct BlockArgs {
    /// Root system: a type such as `A3` or `B2xA1`, or a JSON Cartan matrix.
    #[arg(long)]
    cartan: String,
    /// Singular subset B_λ, e.g. `1,3`.
    #[arg(long, default_value = "")]
    lambda: String,
    /// Parabolic subset B_μ.
    #[arg(long, default_value = "")]
    mu: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    /// Cosets x W_J.
    Left,
    /// Cosets W_J x.
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Flavor {
    Shortest,
    Longest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// θ^on on a standard module of the regular block (∅, μ).
    On,
    /// θ^out on a standard module of (λ, μ).
    Out,
    /// θ^on on a simple module.
    OnSimple,
}

#[derive(Subcommand)]
enum Command {
    /// Group order, longest element and optionally coset representatives.
    Group {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
        #[arg(long, value_enum, default_value_t = Flavor::Shortest)]
        flavor: Flavor,
    },
    /// Split x as b1·b2 (left cosets, b1 longest) or x1·x^1 (right cosets, x^1 shortest).
    Decompose {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        subset: String,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
    },
    /// Translation of standard or simple modules onto or out of the wall.
    Translate {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value_t = Direction::On)]
        direction: Direction,
    },
    /// Derived Zuckerman functor on Δ(x·λ).
    Bott {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        x: String,
    },
    /// θ^on θ^out as a sum of shifted identities, or 𝓛Z^μ ı^μ with --zuckerman.
    Wallcross {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        zuckerman: bool,
    },
    /// Ringel dual block and images of standard modules.
    Ringel {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        x: Option<String>,
    },
    /// Koszul dual block.
    Koszul {
        #[command(flatten)]
        block: BlockArgs,
    },
    /// Koszul-Ringel map on a tilting, simple, standard or costandard module.
    Phi {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        x: String,
        #[arg(long, default_value = "tilting")]
        kind: String,
    },
    /// Applicability of the conjugation equivalences for a type-A subset ν.
    #[command(name = "thmD")]
    ThmD {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        nu: String,
    },
    /// Gradable derived equivalence of type-A regular blocks.
    Classify {
        /// Classifier JSON, e.g. '[{"n":4,"stabilizer":[2,2]}]'.
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        spec2: Option<String>,
        /// Derive the first spec from a regular type-A block instead.
        #[arg(long)]
        cartan: Option<String>,
        #[arg(long, default_value = "")]
        lambda: String,
    },
    /// Hilbert-Poincaré polynomials.
    Hp {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        parts: Option<String>,
        /// Coinvariant algebra of W_J, or the centre of a regular type-A block.
        #[arg(long)]
        cartan: Option<String>,
        #[arg(long, default_value = "")]
        lambda: String,
        /// With --cartan: the coinvariant profile of W_λ instead of the centre.
        #[arg(long)]
        coinvariant: bool,
    },
    /// Ext¹-quiver of a block.
    Quiver {
        #[command(flatten)]
        block: BlockArgs,
    },
    /// Compare a block with its Ringel dual through leaf flags.
    Selfdual {
        #[command(flatten)]
        block: BlockArgs,
    },
}

struct Ctx {
    format: Format,
    cap: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let ctx = Ctx { format: cli.format, cap: cli.cap };
    match run(&ctx, cli.command) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            // a closed pipe downstream is not an error
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn cartan(ctx: &Ctx, spec: &str) -> blockdual::Result<Arc<CartanDatum>> {
    Ok(Arc::new(CartanDatum::parse(spec)?.with_cap(ctx.cap)))
}

fn block_of(ctx: &Ctx, a: &BlockArgs) -> blockdual::Result<BlockDescriptor> {
    BlockDescriptor::new(cartan(ctx, &a.cartan)?, ParabolicSubset::parse(&a.lambda)?, ParabolicSubset::parse(&a.mu)?)
}

/// `2,3` or `s2s3` or `e`.
fn parse_word(s: &str) -> blockdual::Result<Vec<usize>> {
    let t = s.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let pieces: Vec<&str> = if t.contains(',') {
        t.split(',').collect()
    } else {
        t.split('s').filter(|p| !p.is_empty()).collect()
    };
    pieces
        .iter()
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad word `{s}`"))))
        .collect()
}

fn element(c: &CartanDatum, s: &str) -> blockdual::Result<WeylElement> {
    c.from_word(&parse_word(s)?)
}

fn word_text(w: &[usize]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.iter().map(|i| format!("s{i}")).collect()
    }
}

fn elem_text(c: &CartanDatum, w: &WeylElement) -> String {
    word_text(&c.reduced_word(w))
}

fn block_text(b: &BlockDescriptor) -> String {
    format!("{} lambda={} mu={}", b.cartan().label(), b.lambda(), b.mu())
}

fn block_json(b: &BlockDescriptor) -> Value {
    serde_json::to_value(BlockJson::from_block(b)).unwrap()
}

fn module_text(m: &IndexedModule) -> String {
    let mut s = format!("{}({})", m.kind, word_text(&m.word()));
    if m.shift != 0 {
        s.push_str(&format!("<{}>", m.shift));
    }
    if m.hshift != 0 {
        s.push_str(&format!("[{}]", m.hshift));
    }
    s
}

fn module_json(m: &IndexedModule) -> Value {
    serde_json::to_value(ModuleJson::from_module(m)).unwrap()
}

fn multiset_text(ms: &GradedMultiset<IndexedModule>) -> String {
    if ms.is_zero() {
        return "0".into();
    }
    ms.entries()
        .iter()
        .map(|(m, k)| if *k == 1 { module_text(m) } else { format!("{k} x {}", module_text(m)) })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn identity_text(ms: &GradedMultiset<IdentityShift>) -> String {
    ms.entries()
        .iter()
        .map(|(s, k)| {
            let mut t = String::from("Id");
            if s.hshift != 0 {
                t.push_str(&format!("[{}]", s.hshift));
            }
            if s.shift != 0 {
                t.push_str(&format!("<{}>", s.shift));
            }
            if *k > 1 {
                t = format!("{k} x {t}");
            }
            t
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn identity_json(ms: &GradedMultiset<IdentityShift>) -> Value {
    Value::Array(
        ms.entries().iter().map(|(s, k)| json!({"shift": s.shift, "hshift": s.hshift, "mult": k})).collect(),
    )
}

fn poly_json(p: &GradedPolynomial) -> Value {
    json!({"coefficients": p, "text": p.to_string()})
}

fn emit(ctx: &Ctx, text: String, value: Value) -> blockdual::Result<String> {
    match ctx.format {
        Format::Json => Ok(serde_json::to_string_pretty(&value).unwrap()),
        Format::Text => Ok(text),
        Format::Dot => Err(Error::InvalidArgument("dot output is only available for `quiver`".into())),
    }
}

fn run(ctx: &Ctx, cmd: Command) -> blockdual::Result<String> {
    match cmd {
        Command::Group { cartan: spec, subset, side, flavor } => {
            let c = cartan(ctx, &spec)?;
            let g = c.group()?;
            let w0 = c.longest();
            let mut text = format!("order {}\nlongest {} (length {})\n", g.order(), elem_text(&c, &w0), w0.length());
            let mut value = json!({"cartan": c.label(), "order": g.order(), "longest": c.reduced_word(&w0)});
            if let Some(j) = subset {
                let j = ParabolicSubset::parse(&j)?;
                let side = match side {
                    Side::Left => CosetSide::Left,
                    Side::Right => CosetSide::Right,
                };
                let flavor = match flavor {
                    Flavor::Shortest => RepFlavor::Shortest,
                    Flavor::Longest => RepFlavor::Longest,
                };
                let reps = c.coset_reps(&j, side, flavor)?;
                text.push_str(&format!("coset representatives ({}):\n", reps.len()));
                for r in &reps {
                    text.push_str(&format!("  {}\n", elem_text(&c, r)));
                }
                value["subset"] = json!(j.to_vec());
                value["representatives"] = json!(reps.iter().map(|r| c.reduced_word(r)).collect::<Vec<_>>());
            }
            emit(ctx, text, value)
        }
        Command::Decompose { cartan: spec, x, subset, side } => {
            let c = cartan(ctx, &spec)?;
            let x = element(&c, &x)?;
            let j = ParabolicSubset::parse(&subset)?;
            let (a, b, names) = match side {
                Side::Left => {
                    let (b1, b2) = c.decompose_right(&x, &j)?;
                    (b1, b2, ["b1", "b2"])
                }
                Side::Right => {
                    let (x1, xs) = c.decompose_left(&x, &j)?;
                    (x1, xs, ["x1", "x^1"])
                }
            };
            let text = format!(
                "{} = {} {}\n{} = {}\n{} = {}\n",
                elem_text(&c, &x),
                elem_text(&c, &a),
                elem_text(&c, &b),
                names[0],
                elem_text(&c, &a),
                names[1],
                elem_text(&c, &b)
            );
            let mut value = serde_json::Map::new();
            value.insert(names[0].into(), json!(c.reduced_word(&a)));
            value.insert(names[1].into(), json!(c.reduced_word(&b)));
            emit(ctx, text, Value::Object(value))
        }
        Command::Translate { block, x, direction } => {
            let b = block_of(ctx, &block)?;
            let c = b.cartan().clone();
            let x = element(&c, &x)?;
            let regular = BlockDescriptor::new(c.clone(), ParabolicSubset::empty(), b.mu().clone())?;
            let (image, violations) = match direction {
                Direction::On => (translate_onto_wall_standard(&x, &regular, b.lambda())?, Vec::new()),
                Direction::OnSimple => (translate_onto_wall_simple(&x, &regular, b.lambda())?, Vec::new()),
                Direction::Out => {
                    let out = translate_out_of_wall_standard(&x, &b)?;
                    (out.image, out.violations)
                }
            };
            let mut text = multiset_text(&image);
            for u in &violations {
                text.push_str(&format!("\nwarning: x{} leaves X^mu", elem_text(&c, u)));
            }
            let value = json!({
                "image": multiset_to_json(&image),
                "violations": violations.iter().map(|u| c.reduced_word(u)).collect::<Vec<_>>(),
            });
            emit(ctx, text, value)
        }
        Command::Bott { block, x } => {
            let b = block_of(ctx, &block)?;
            let c = b.cartan().clone();
            let x = element(&c, &x)?;
            let (k, image) = derived_zuckerman_standard(&c, &x, b.lambda(), b.mu())?;
            let text = if image.is_zero() {
                "0 in every degree".to_string()
            } else {
                format!("degree {k}: {}", multiset_text(&image))
            };
            let value = json!({"degree": if image.is_zero() { None } else { Some(k) }, "image": multiset_to_json(&image)});
            emit(ctx, text, value)
        }
        Command::Wallcross { block, zuckerman } => {
            let b = block_of(ctx, &block)?;
            let ms = if zuckerman {
                zuckerman_inclusion_decomposition(b.cartan(), b.mu())?
            } else {
                wall_crossing_decomposition(b.cartan(), b.lambda())?
            };
            emit(ctx, identity_text(&ms), identity_json(&ms))
        }
        Command::Ringel { block, x } => {
            let b = block_of(ctx, &block)?;
            let c = b.cartan().clone();
            let duals = b.ringel_dual_block()?;
            let xs = match x {
                Some(x) => vec![element(&c, &x)?],
                None => b.simple_index_set()?.elements,
            };
            let mut text =
                format!("ringel dual: {}\nalternative: {}\n", block_text(&duals.block), block_text(&duals.alternative));
            let mut images = Vec::new();
            for x in &xs {
                let r = ringel_image_standard(x, &b)?;
                let co = coringel_image_standard(x, &b)?;
                let tw = derived_twist_standard(x, &b)?;
                let sh = shuffle_translated_standard(x, &b)?;
                text.push_str(&format!(
                    "Standard({}): ringel {} | coringel {} | twist {} | shuffle theta_out[{}] {}\n",
                    elem_text(&c, x),
                    module_text(&r),
                    module_text(&co),
                    module_text(&tw),
                    sh.outer_lambda,
                    module_text(&sh.inner)
                ));
                images.push(json!({
                    "index": c.reduced_word(x),
                    "ringel": module_json(&r),
                    "coringel": module_json(&co),
                    "twist": module_json(&tw),
                    "shuffle": {"theta_out_lambda": sh.outer_lambda.to_vec(), "module": module_json(&sh.inner)},
                }));
            }
            let value =
                json!({"dual": block_json(&duals.block), "alternative": block_json(&duals.alternative), "images": images});
            emit(ctx, text, value)
        }
        Command::Koszul { block } => {
            let b = block_of(ctx, &block)?;
            let k = b.koszul_dual_block()?;
            emit(ctx, format!("koszul dual: {}", block_text(&k)), json!({"dual": block_json(&k)}))
        }
        Command::Phi { block, x, kind } => {
            let b = block_of(ctx, &block)?;
            let x = element(b.cartan(), &x)?;
            let kind: ModuleKind = kind.parse()?;
            let m = IndexedModule::new(b, kind, x)?;
            let img = koszul_ringel_phi(&m)?;
            let text = format!("{} in {}\n  -> {} in {}", module_text(&m), block_text(&m.block), module_text(&img), block_text(&img.block));
            emit(ctx, text, json!({"input": module_json(&m), "image": module_json(&img)}))
        }
        Command::ThmD { block, nu } => {
            let c = cartan(ctx, &block.cartan)?;
            let r = theorem_d_check(
                &c,
                &ParabolicSubset::parse(&nu)?,
                &ParabolicSubset::parse(&block.lambda)?,
                &ParabolicSubset::parse(&block.mu)?,
            )?;
            let opt = |s: &Option<ParabolicSubset>| s.as_ref().map_or("not applicable".to_string(), |s| s.to_string());
            let mut text = format!(
                "nu={} nu_dagger={} type_a={}\nmu contained: {}  mu'={}\nlambda contained: {}  lambda'={}\n",
                r.nu,
                r.nu_dagger,
                r.nu_is_type_a,
                r.mu_contained,
                opt(&r.mu_prime),
                r.lambda_contained,
                opt(&r.lambda_prime)
            );
            text.push_str("dictionary:");
            for (a, b) in &r.dictionary {
                text.push_str(&format!(" s{a}->s{b}"));
            }
            let value = json!({
                "nu": r.nu.to_vec(),
                "nu_dagger": r.nu_dagger.to_vec(),
                "nu_is_type_a": r.nu_is_type_a,
                "mu_contained": r.mu_contained,
                "lambda_contained": r.lambda_contained,
                "mu_prime": r.mu_prime.as_ref().map(|s| s.to_vec()),
                "lambda_prime": r.lambda_prime.as_ref().map(|s| s.to_vec()),
                "mu_equivalent_block": r.mu_equivalent_block.as_ref().map(block_json),
                "lambda_equivalent_block": r.lambda_equivalent_block.as_ref().map(block_json),
                "dictionary": r.dictionary,
            });
            emit(ctx, text, value)
        }
        Command::Classify { spec, spec2, cartan: spec_cartan, lambda } => {
            let parse = |s: &str| serde_json::from_str::<ClassifierSpec>(s).map_err(|e| Error::Parse(e.to_string()));
            let first = match (&spec, &spec_cartan) {
                (Some(s), _) => parse(s)?,
                (None, Some(c)) => {
                    BlockDescriptor::new(cartan(ctx, c)?, ParabolicSubset::parse(&lambda)?, ParabolicSubset::empty())?
                        .classifier_spec()?
                }
                (None, None) => return Err(Error::InvalidArgument("--spec or --cartan is required".into())),
            };
            first.validate()?;
            match spec2 {
                Some(s2) => {
                    let second = parse(&s2)?;
                    let eq = classify_derived_equivalent(&first, &second)?;
                    let text = if eq { "equivalent" } else { "not equivalent" }.to_string();
                    emit(ctx, text, json!({"equivalent": eq, "spec": first, "spec2": second}))
                }
                None => {
                    let text = serde_json::to_string(&first).unwrap();
                    emit(ctx, text, json!({"spec": first}))
                }
            }
        }
        Command::Hp { n, parts, cartan: spec, lambda, coinvariant } => {
            let p = match (n, spec) {
                (Some(n), _) => {
                    let parts = match parts {
                        Some(p) => p
                            .split(',')
                            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
                            .collect::<blockdual::Result<Vec<_>>>()?,
                        None => vec![1; n],
                    };
                    hp_partial_flag(n, &parts)?
                }
                (None, Some(spec)) => {
                    let c = cartan(ctx, &spec)?;
                    let lam = ParabolicSubset::parse(&lambda)?;
                    if coinvariant {
                        coinvariant_profile(&c, &lam)?
                    } else {
                        BlockDescriptor::new(c, lam, ParabolicSubset::empty())?.center_hp_regular()?
                    }
                }
                (None, None) => return Err(Error::InvalidArgument("--n or --cartan is required".into())),
            };
            emit(ctx, p.to_string(), poly_json(&p))
        }
        Command::Quiver { block } => {
            let b = block_of(ctx, &block)?;
            let table = KLTable::new(b.cartan().clone())?;
            let q = block_quiver(&b, &table)?;
            match ctx.format {
                Format::Dot => Ok(q.to_dot()),
                Format::Json => Ok(serde_json::to_string_pretty(&q).unwrap()),
                Format::Text => {
                    let mut text = format!("vertices ({}):\n", q.len());
                    for v in &q.vertices {
                        text.push_str(&format!("  {} (length {})\n", word_text(&v.word), v.length));
                    }
                    text.push_str(&format!("edges ({}):\n", q.edges.len()));
                    for (a, b, m) in q.edge_words() {
                        let mult = if m == 1 { String::new() } else { format!(" x{m}") };
                        text.push_str(&format!("  {} -- {}{mult}\n", word_text(&a), word_text(&b)));
                    }
                    Ok(text)
                }
            }
        }
        Command::Selfdual { block } => {
            let b = block_of(ctx, &block)?;
            let table = KLTable::new(b.cartan().clone())?;
            let r = self_duality_analysis(&b, &table)?;
            let leaves_text = |ls: &[LeafFlags]| {
                ls.iter()
                    .map(|l| {
                        format!(
                            "{} (simple standard: {}, bruhat minimal: {})",
                            word_text(&l.word),
                            l.simple_standard,
                            l.bruhat_minimal
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let verdict = serde_json::to_value(r.verdict).unwrap();
            let text = format!(
                "block: {}\n  leaves: {}\nringel dual: {}\n  leaves: {}\nverdict: {}",
                block_text(&r.block),
                leaves_text(&r.leaves),
                block_text(&r.dual),
                leaves_text(&r.dual_leaves),
                verdict.as_str().unwrap()
            );
            let value = json!({
                "block": block_json(&r.block),
                "dual": block_json(&r.dual),
                "quiver": r.quiver,
                "dual_quiver": r.dual_quiver,
                "leaves": r.leaves,
                "dual_leaves": r.dual_leaves,
                "verdict": verdict,
            });
            emit(ctx, text, value)
        }
    }
}
