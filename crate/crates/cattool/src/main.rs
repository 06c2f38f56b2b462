//! cattool: materialize small categories and mechanically verify the laws,
//! universal properties, monad laws and recursion-scheme identities, with
//! concrete counterexamples on failure.
//!
//! Exit codes: 0 — all checks pass / query answered; 1 — a law failed or a
//! required universal object does not exist; 2 — input error.

mod document;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use document::{
    build_adjunction, build_category, build_functor, build_nattrans, load_json, AdjunctionDocument,
    CategoryDocument, DocError, FunctorDocument, NatTransDocument,
};
use fincat::adjunction::{
    check_bijective, check_hom_naturality, check_triangles, check_unit_counit_naturality,
    hom_bijection_from_unit_counit, unit_counit_from_hom_bijection, CatSite, HomBijection,
    SiteMap, UnitCounit,
};
use fincat::algebra::{
    fold_library, fusion_map_map, fusion_sum_plus_one, parse_exp_literal, parse_list_literal,
    parse_nat_literal, AlgebraAction, AlgebraSpec, Carrier, NamedAlgebra, PolyF,
};
use fincat::coalgebra::{nats, stream_take, zip};
use fincat::finset::FinSet;
use fincat::free_monoid::{check_uvp, free_forget_adjunction, FreeForgetWindow};
use fincat::functor::{check_functor, check_naturality, classify_functor, finset_to_finord};
use fincat::kleisli::{
    check_kleisli_laws, check_monad_laws, check_roundtrip, InstanceName, InstanceParams,
    KleisliTriple,
};
use fincat::queries::{classify, find_binary, find_universal, BinaryKind, Polarity};
use fincat::report::{witness, Report, Status};

#[derive(Parser)]
#[command(name = "cattool", version, about = "finite category theory, mechanically checked")]
struct Cli {
    /// Emit the machine-readable report instead of human text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the category laws of a document.
    Laws(DocArg),
    /// Classify one morphism: mono, epi, iso, sections, retractions.
    Classify {
        #[command(flatten)]
        doc: DocArg,
        #[arg(long)]
        morphism: String,
    },
    /// Search for initial or terminal objects.
    Universal {
        #[command(flatten)]
        doc: DocArg,
        #[arg(long, value_parser = ["initial", "terminal"])]
        kind: String,
        /// Exit 1 when no universal object exists.
        #[arg(long)]
        require: bool,
    },
    /// Search for binary products or coproducts of two objects.
    Binary {
        #[command(flatten)]
        doc: DocArg,
        #[arg(long, value_parser = ["product", "coproduct"])]
        kind: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        require: bool,
    },
    /// Functor documents.
    Functor {
        #[command(subcommand)]
        sub: CheckSub,
    },
    /// Natural-transformation documents.
    Nattrans {
        #[command(subcommand)]
        sub: CheckSub,
    },
    /// Adjunction documents (unit/counit or α-table form).
    Adjunction {
        #[command(subcommand)]
        sub: CheckSub,
    },
    /// Monad instances.
    Monad {
        #[command(subcommand)]
        sub: MonadSub,
    },
    /// Evaluate a fold (catamorphism) on a term literal.
    Fold {
        #[arg(long, value_parser = ["list", "nat", "exp"])]
        datatype: String,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        term: String,
        /// Comma-separated label names for list datatypes (default "0,1").
        #[arg(long)]
        labels: Option<String>,
        /// Extra argument for append/map/filter algebras.
        #[arg(long)]
        arg: Option<String>,
    },
    /// Observe a stream process.
    Unfold {
        #[arg(long, value_parser = ["nats", "zip"])]
        stream: String,
        #[arg(long)]
        take: usize,
        #[arg(long, default_value_t = 0)]
        start: u64,
        /// Second start value for zip.
        #[arg(long, default_value_t = 0)]
        start2: u64,
    },
    /// Run a fold-fusion demonstration.
    Fusion {
        #[arg(long, value_parser = ["sum-plus-one", "map-map"])]
        demo: String,
    },
    /// Free monoids.
    #[command(name = "free-monoid")]
    FreeMonoid {
        #[command(subcommand)]
        sub: FreeMonoidSub,
    },
    /// Equivalence classification of a functor.
    Equiv {
        #[command(subcommand)]
        sub: EquivSub,
    },
}

#[derive(Args)]
struct DocArg {
    /// Path to a JSON document.
    path: PathBuf,
}

#[derive(Subcommand)]
enum CheckSub {
    /// Verify the laws of the document.
    Check(DocArg),
}

#[derive(Subcommand)]
enum MonadSub {
    /// Check the three Kleisli laws, the derived monad, and the roundtrip.
    Laws {
        #[arg(long, value_parser = ["list", "tree", "exception", "powerset", "reader", "continuation"])]
        instance: String,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        y: Option<usize>,
        #[arg(long)]
        z: Option<usize>,
        #[arg(long)]
        e: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, name = "max-len")]
        max_len: Option<usize>,
        #[arg(long, name = "max-depth")]
        max_depth: Option<usize>,
    },
}

#[derive(Subcommand)]
enum FreeMonoidSub {
    /// Universal property: lift exists, extends f, and is unique.
    Uvp {
        #[arg(long)]
        gens: usize,
        #[arg(long)]
        monoid: String,
        #[arg(long, name = "max-len", default_value_t = 3)]
        max_len: usize,
        /// Adjunction window checks too (naturality + triangles).
        #[arg(long)]
        adjunction: bool,
    },
}

#[derive(Subcommand)]
enum EquivSub {
    /// Classify a functor: full, faithful, essentially surjective,
    /// isomorphism, equivalence.
    Check {
        /// Path to a functor document.
        path: Option<PathBuf>,
        /// Built-in instance instead of a document.
        #[arg(long, value_parser = ["finset-finord"])]
        builtin: Option<String>,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

#[derive(Serialize)]
struct Envelope {
    command: String,
    status: &'static str,
    exit_code: i32,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    reports: Vec<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

struct Outcome {
    reports: Vec<Report>,
    result: Option<serde_json::Value>,
}

impl Outcome {
    fn reports(reports: Vec<Report>) -> Self {
        Outcome { reports, result: None }
    }

    fn with_result(mut self, v: serde_json::Value) -> Self {
        self.result = Some(v);
        self
    }
}

fn main() {
    let cli = Cli::parse();
    let command_name = command_name(&cli.command);
    let outcome = run(&cli.command);
    let envelope = match outcome {
        Ok(out) => {
            let failed = out.reports.iter().any(|r| r.status == Status::Fail);
            Envelope {
                command: command_name,
                status: if failed { "fail" } else { "pass" },
                exit_code: i32::from(failed),
                reports: out.reports,
                result: out.result,
                error: None,
            }
        }
        Err(e) => Envelope {
            command: command_name,
            status: "error",
            exit_code: 2,
            reports: Vec::new(),
            result: None,
            error: Some(e.to_string()),
        },
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&envelope).expect("report serializes"));
    } else {
        render_human(&envelope);
    }
    std::process::exit(envelope.exit_code);
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Laws(_) => "laws",
        Command::Classify { .. } => "classify",
        Command::Universal { .. } => "universal",
        Command::Binary { .. } => "binary",
        Command::Functor { .. } => "functor check",
        Command::Nattrans { .. } => "nattrans check",
        Command::Adjunction { .. } => "adjunction check",
        Command::Monad { .. } => "monad laws",
        Command::Fold { .. } => "fold",
        Command::Unfold { .. } => "unfold",
        Command::Fusion { .. } => "fusion",
        Command::FreeMonoid { .. } => "free-monoid uvp",
        Command::Equiv { .. } => "equiv check",
    }
    .to_string()
}

fn render_human(e: &Envelope) {
    println!("cattool {} — {}", e.command, e.status.to_uppercase());
    if let Some(err) = &e.error {
        println!("  error: {err}");
    }
    for r in &e.reports {
        println!(
            "  {} {}",
            match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            r.name
        );
        for w in &r.witnesses {
            println!("    {} = {}", w.role, w.value);
        }
        for d in &r.details {
            println!("    {d}");
        }
    }
    if let Some(result) = &e.result {
        println!("  result: {result}");
    }
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."))
}

fn run(command: &Command) -> Result<Outcome, DocError> {
    match command {
        Command::Laws(doc) => {
            let parsed: CategoryDocument = load_json(&doc.path)?;
            let built = build_category(&parsed)?;
            let cat = built.cat()?;
            Ok(Outcome::reports(vec![cat.check_laws()]))
        }
        Command::Classify { doc, morphism } => {
            let parsed: CategoryDocument = load_json(&doc.path)?;
            let built = build_category(&parsed)?;
            let cat = built.cat()?;
            let f = cat.morphism_by_name(morphism)?;
            let cls = classify(cat, f)?;
            let name = |m: fincat::MorId| cat.morphism_name(m).to_string();
            let result = serde_json::json!({
                "morphism": morphism,
                "is_mono": cls.is_mono,
                "is_epi": cls.is_epi,
                "is_iso": cls.is_iso,
                "inverse": cls.inverse.map(name),
                "retractions_of": cls.retractions_of.iter().map(|&m| name(m)).collect::<Vec<_>>(),
                "sections_of": cls.sections_of.iter().map(|&m| name(m)).collect::<Vec<_>>(),
            });
            Ok(Outcome::reports(vec![
                Report::pass(format!("classified `{morphism}`")).with_detail(format!(
                    "mono={}, epi={}, iso={}",
                    cls.is_mono, cls.is_epi, cls.is_iso
                )),
            ])
            .with_result(result))
        }
        Command::Universal { doc, kind, require } => {
            let parsed: CategoryDocument = load_json(&doc.path)?;
            let built = build_category(&parsed)?;
            let cat = built.cat()?;
            let polarity = if kind == "initial" { Polarity::Initial } else { Polarity::Terminal };
            let w = find_universal(cat, polarity);
            let uniqueness = fincat::queries::verify_uniqueness(cat, &w)?;
            let objects: Vec<String> =
                w.objects.iter().map(|&o| cat.object_name(o).to_string()).collect();
            let isos: Vec<serde_json::Value> = w
                .canonical_isos
                .iter()
                .filter(|((a, b), _)| a != b)
                .map(|((a, b), m)| {
                    serde_json::json!({
                        "from": cat.object_name(*a),
                        "to": cat.object_name(*b),
                        "morphism": cat.morphism_name(*m),
                    })
                })
                .collect();
            let mut reports = vec![];
            if w.objects.is_empty() && *require {
                reports.push(Report::fail(
                    format!("{kind} object exists"),
                    vec![witness("objects found", 0)],
                ));
            } else {
                reports.push(
                    Report::pass(format!("{kind} object search"))
                        .with_detail(format!("{} qualifying object(s)", w.objects.len())),
                );
                reports.push(uniqueness);
            }
            Ok(Outcome::reports(reports)
                .with_result(serde_json::json!({ "objects": objects, "canonical_isos": isos })))
        }
        Command::Binary { doc, kind, left, right, require } => {
            let parsed: CategoryDocument = load_json(&doc.path)?;
            let built = build_category(&parsed)?;
            let cat = built.cat()?;
            let a = cat.object_by_name(left)?;
            let b = cat.object_by_name(right)?;
            let k = if kind == "product" { BinaryKind::Product } else { BinaryKind::Coproduct };
            let w = find_binary(cat, k, a, b, None)?;
            let cones: Vec<serde_json::Value> = w
                .cones
                .iter()
                .map(|&(p, l, r)| {
                    serde_json::json!({
                        "object": cat.object_name(p),
                        "left": cat.morphism_name(l),
                        "right": cat.morphism_name(r),
                    })
                })
                .collect();
            let mut reports = vec![];
            if w.cones.is_empty() && *require {
                reports.push(Report::fail(
                    format!("{kind} of {left} and {right} exists"),
                    vec![witness("cones found", 0)],
                ));
            } else {
                reports.push(
                    Report::pass(format!("{kind} search for ({left}, {right})"))
                        .with_detail(format!("{} universal cone(s)", w.cones.len())),
                );
            }
            Ok(Outcome::reports(reports).with_result(serde_json::json!({ "cones": cones })))
        }
        Command::Functor { sub: CheckSub::Check(doc) } => {
            let parsed: FunctorDocument = load_json(&doc.path)?;
            let functor = build_functor(&parsed, &base_dir(&doc.path))?;
            Ok(Outcome::reports(vec![check_functor(&functor)?]))
        }
        Command::Nattrans { sub: CheckSub::Check(doc) } => {
            let parsed: NatTransDocument = load_json(&doc.path)?;
            let nt = build_nattrans(&parsed, &base_dir(&doc.path))?;
            let mut reports = vec![check_functor(&nt.from)?, check_functor(&nt.to)?];
            if reports.iter().all(|r| r.passed()) {
                reports.push(check_naturality(&nt)?);
            }
            Ok(Outcome::reports(reports))
        }
        Command::Adjunction { sub: CheckSub::Check(doc) } => {
            let parsed: AdjunctionDocument = load_json(&doc.path)?;
            let built = build_adjunction(&parsed, &base_dir(&doc.path))?;
            run_adjunction_checks(built)
        }
        Command::Monad { sub } => {
            let MonadSub::Laws { instance, x, y, z, e, r, max_len, max_depth } = sub;
            let name = InstanceName::parse(instance)?;
            let mut params = InstanceParams::defaults(name);
            if let Some(v) = x {
                params.x = *v;
            }
            if let Some(v) = y {
                params.y = *v;
            }
            if let Some(v) = z {
                params.z = *v;
            }
            if let Some(v) = e {
                params.e = *v;
            }
            if let Some(v) = r {
                params.r = *v;
            }
            if let Some(v) = max_len {
                params.max_len = *v;
            }
            if let Some(v) = max_depth {
                params.max_depth = *v;
            }
            let triple = KleisliTriple::new(params)?;
            Ok(Outcome::reports(vec![
                check_kleisli_laws(&triple),
                check_monad_laws(&triple),
                check_roundtrip(&triple),
            ]))
        }
        Command::Fold { datatype, algebra, term, labels, arg } => run_fold(datatype, algebra, term, labels.as_deref(), arg.as_deref()),
        Command::Unfold { stream, take, start, start2 } => {
            let result = match stream.as_str() {
                "nats" => {
                    let values = stream_take(&nats(*start), *take)?;
                    serde_json::json!({ "take": values })
                }
                "zip" => {
                    let values = stream_take(&zip(nats(*start), nats(*start2)), *take)?;
                    serde_json::json!({ "take": values })
                }
                _ => unreachable!("clap validates"),
            };
            Ok(Outcome::reports(vec![Report::pass(format!(
                "observed {take} element(s) of {stream}"
            ))])
            .with_result(result))
        }
        Command::Fusion { demo } => {
            let outcome = match demo.as_str() {
                "sum-plus-one" => fusion_sum_plus_one(-2, 2, 5)?,
                "map-map" => fusion_map_map(FinSet::new(2), vec![1, 0], vec![1, 1], 4)?,
                _ => unreachable!("clap validates"),
            };
            let mut reports = vec![outcome.premise];
            match outcome.conclusion {
                Some(c) => reports.push(c),
                None => reports.push(
                    Report::pass("conclusion not asserted").with_detail("the premise failed, so fusion claims nothing"),
                ),
            }
            Ok(Outcome::reports(reports))
        }
        Command::FreeMonoid { sub } => {
            let FreeMonoidSub::Uvp { gens, monoid, max_len, adjunction } = sub;
            let m = fincat::builders::monoid_catalog(monoid)?;
            let mut reports = Vec::new();
            // sweep every generator assignment
            let mut assignment = vec![0usize; *gens];
            loop {
                reports.push(check_uvp(*gens, &m, &assignment, *max_len)?);
                let mut i = *gens;
                let mut done = false;
                loop {
                    if i == 0 {
                        done = true;
                        break;
                    }
                    i -= 1;
                    assignment[i] += 1;
                    if assignment[i] < m.size() {
                        break;
                    }
                    assignment[i] = 0;
                }
                if done {
                    break;
                }
            }
            let summary = Report::combine(
                format!("UVP for all {} generator assignments", m.size().pow(*gens as u32)),
                reports,
            );
            let mut reports = vec![summary];
            if *adjunction {
                let window = FreeForgetWindow {
                    gen_sets: vec![1, *gens],
                    monoids: vec![m],
                    max_len: *max_len,
                };
                reports.push(free_forget_adjunction(&window)?);
            }
            Ok(Outcome::reports(reports))
        }
        Command::Equiv { sub } => {
            let EquivSub::Check { path, builtin, n } = sub;
            let functor = match (path, builtin) {
                (Some(p), None) => {
                    let parsed: FunctorDocument = load_json(p)?;
                    build_functor(&parsed, &base_dir(p))?
                }
                (None, Some(_)) => finset_to_finord(*n)?.functor,
                _ => {
                    return Err(DocError(
                        "give either a functor document or --builtin finset-finord".into(),
                    ))
                }
            };
            let flags = classify_functor(&functor)?;
            let witness_pair = flags.non_injective_witness.map(|(a, b)| {
                serde_json::json!([
                    functor.source.object_name(a),
                    functor.source.object_name(b),
                ])
            });
            let result = serde_json::json!({
                "injective_on_objects": flags.injective_on_objects,
                "surjective_on_objects": flags.surjective_on_objects,
                "full": flags.full,
                "faithful": flags.faithful,
                "essentially_surjective": flags.essentially_surjective,
                "is_isomorphism": flags.is_isomorphism,
                "is_equivalence": flags.is_equivalence,
                "non_injective_witness": witness_pair,
            });
            let report = if flags.is_equivalence {
                Report::pass("the functor is an equivalence").with_detail(format!(
                    "isomorphism: {}",
                    flags.is_isomorphism
                ))
            } else {
                Report::fail(
                    "the functor is an equivalence",
                    vec![witness(
                        "flags",
                        format!(
                            "full={}, faithful={}, essentially_surjective={}",
                            flags.full, flags.faithful, flags.essentially_surjective
                        ),
                    )],
                )
            };
            Ok(Outcome::reports(vec![report]).with_result(result))
        }
    }
}

fn run_adjunction_checks(built: document::BuiltAdjunction) -> Result<Outcome, DocError> {
    let left_cat = built.left.clone();
    let right_cat = built.right.clone();
    let left = CatSite(&left_cat);
    let right = CatSite(&right_cat);
    let f_obj = built.f.obj_map.clone();
    let f_mor = built.f.mor_map.clone();
    let g_obj = built.g.obj_map.clone();
    let g_mor = built.g.mor_map.clone();
    let mut reports = vec![check_functor(&built.f)?, check_functor(&built.g)?];
    if reports.iter().any(|r| !r.passed()) {
        return Ok(Outcome::reports(reports));
    }
    let f_map = || SiteMap::<CatSite, CatSite> {
        obj: Box::new(|c| f_obj[c].0),
        mor: Box::new(|_, _, m: &fincat::MorId| f_mor[m.0]),
    };
    let g_map = || SiteMap::<CatSite, CatSite> {
        obj: Box::new(|d| g_obj[d].0),
        mor: Box::new(|_, _, m: &fincat::MorId| g_mor[m.0]),
    };
    if let (Some(unit), Some(counit)) = (built.unit.clone(), built.counit.clone()) {
        let adj = UnitCounit {
            left: &left,
            right: &right,
            f: f_map(),
            g: g_map(),
            unit: Box::new(move |c| unit[c]),
            counit: Box::new(move |d| counit[d]),
        };
        reports.push(check_unit_counit_naturality(&adj));
        if reports.iter().all(|r| r.passed()) {
            reports.push(check_triangles(&adj));
        }
        if reports.iter().all(|r| r.passed()) {
            let bij = hom_bijection_from_unit_counit(&adj);
            reports.push(check_bijective(&bij));
            reports.push(check_hom_naturality(&bij));
        }
        return Ok(Outcome::reports(reports));
    }
    let alpha = built.alpha.clone().expect("validated by the document builder");
    // validate coverage: one total, invertible table per object pair
    let mut alpha_inv: std::collections::BTreeMap<
        (fincat::ObjId, fincat::ObjId),
        std::collections::BTreeMap<fincat::MorId, fincat::MorId>,
    > = Default::default();
    for c in left_cat.objects() {
        for d in right_cat.objects() {
            let table = alpha
                .get(&(c, d))
                .ok_or_else(|| {
                    DocError(format!(
                        "alpha: no table for pair ({}, {})",
                        left_cat.object_name(c),
                        right_cat.object_name(d)
                    ))
                })?;
            let fc = built.f.on_obj(c);
            let mut inverse = std::collections::BTreeMap::new();
            for &m in right_cat.hom(fc, d) {
                let img = table.get(&m).ok_or_else(|| {
                    DocError(format!(
                        "alpha: table for ({}, {}) misses `{}`",
                        left_cat.object_name(c),
                        right_cat.object_name(d),
                        right_cat.morphism_name(m)
                    ))
                })?;
                if inverse.insert(*img, m).is_some() {
                    return Err(DocError("alpha: table is not injective".into()));
                }
            }
            alpha_inv.insert((c, d), inverse);
        }
    }
    let alpha_ref = alpha.clone();
    let bij = HomBijection {
        left: &left,
        right: &right,
        f: f_map(),
        g: g_map(),
        alpha: Box::new(move |c, d, m: &fincat::MorId| {
            alpha_ref[&(fincat::ObjId(c), fincat::ObjId(d))][m]
        }),
        alpha_inv: Box::new(move |c, d, m: &fincat::MorId| {
            alpha_inv[&(fincat::ObjId(c), fincat::ObjId(d))][m]
        }),
    };
    reports.push(check_bijective(&bij));
    reports.push(check_hom_naturality(&bij));
    if reports.iter().all(|r| r.passed()) {
        let uc = unit_counit_from_hom_bijection(&bij);
        reports.push(check_triangles(&uc));
    }
    Ok(Outcome::reports(reports))
}

fn run_fold(
    datatype: &str,
    algebra: &str,
    term: &str,
    labels: Option<&str>,
    arg: Option<&str>,
) -> Result<Outcome, DocError> {
    let (value, rendered_term) = match datatype {
        "nat" => {
            let t = parse_nat_literal(term)?;
            if algebra != "value" {
                return Err(DocError(format!(
                    "unknown nat algebra `{algebra}` (try `value`)"
                )));
            }
            let alg = AlgebraSpec {
                functor: PolyF::nat(),
                carrier: Carrier::Int,
                action: AlgebraAction::Named(NamedAlgebra::NatValue),
            };
            (alg.cata(&t)?, fincat::algebra::render_nat(&t))
        }
        "exp" => {
            let t = parse_exp_literal(term)?;
            if algebra != "eval" {
                return Err(DocError(format!(
                    "unknown exp algebra `{algebra}` (try `eval`)"
                )));
            }
            let alg = AlgebraSpec {
                functor: PolyF::exp_default(),
                carrier: Carrier::Int,
                action: AlgebraAction::Named(NamedAlgebra::ExpEval),
            };
            (alg.cata(&t)?, term.trim().to_string())
        }
        "list" => {
            let label_set = match labels {
                Some(spec) => FinSet::labelled(spec.split(',').map(str::trim).collect::<Vec<_>>())?,
                None => FinSet::labelled(vec!["0", "1"])?,
            };
            let t = parse_list_literal(&label_set, term)?;
            let fold = fold_library(algebra, label_set, arg)?;
            (fold.apply(&t)?, term.trim().to_string())
        }
        _ => unreachable!("clap validates"),
    };
    Ok(Outcome::reports(vec![Report::pass(format!(
        "fold `{algebra}` evaluated"
    ))])
    .with_result(serde_json::json!({ "term": rendered_term, "value": value.to_string() })))
}
