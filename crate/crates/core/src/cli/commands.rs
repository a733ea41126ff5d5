use super::{sweep, Command, FamilyArgs, FamilyKind, GraphArgs, Output, VariantArg, ZfMode};
use crate::bitset::VertexSet;
use crate::config::Caps;
use crate::constructions::{
    grassmann_special_set_j2_4_2, grassmann_zfs_with, hamming_core, hamming_trace, hamming_zfs,
    johnson_zfs, kneser_zfs_edge, kneser_zfs_with, predicted_zf, z_hamming, ConstructionResult,
};
use crate::error::{Error, Result};
use crate::f2::{build_bn, even_terms_identity, f2_nullity, kernel_basis};
use crate::forcing::{
    closure, grundy_exact, is_zero_forcing, variant_number_exact, zero_forcing_number_exact, GrundyVariant,
    SearchOptions, ZfVariant,
};
use crate::graphs::{build, io, FamilySpec, Graph, IntersectionSet};
use crate::metrics::{
    bfs_distances, build_distance_walk, diameter, girth, grassmann_diameter_formula,
};
use crate::report::{load_graph, Certificate, GraphSource, Report};
use serde_json::Value;
use std::collections::HashMap;
use std::path::Path;
use std::time::Instant;

/// Exit code for a finished report: `1` if any verdict failed.
fn verdict_code(r: &Report) -> i32 {
    if r.passed() {
        0
    } else {
        1
    }
}

pub(crate) fn run(cmd: &Command, argv: &[String], caps: &Caps) -> Result<Output> {
    let start = Instant::now();
    let out = match cmd {
        Command::Build { family, out } => cmd_build(family, out.as_deref(), argv, caps)?,
        Command::Metrics { graph, diameter, girth, check_formula, walk } => {
            cmd_metrics(graph, *diameter, *girth, *check_formula, walk.as_deref(), argv, caps)?
        }
        Command::Zf { graph, mode, set, complement, variant, max_seconds, workers } => {
            let opts = SearchOptions {
                workers: *workers,
                max_seconds: *max_seconds,
                vertex_cap: caps.search_vertices,
                ..SearchOptions::default()
            };
            cmd_zf(graph, *mode, set.as_deref(), *complement, *variant, &opts, argv, caps)?
        }
        Command::Construct { family, verify } => cmd_construct(family, *verify, argv, caps)?,
        Command::Nullity { n, q } => cmd_nullity(*n, *q, argv, caps)?,
        Command::Sweep { config, format, out } => {
            return sweep::run(config, *format, out.as_deref(), caps);
        }
    };
    let (mut r, code) = out;
    r.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok(Output::Report(r, code))
}

fn load(args: &GraphArgs, caps: &Caps) -> Result<(Graph, GraphSource)> {
    match &args.graph {
        Some(path) => Ok((load_graph(path)?, GraphSource::File { path: path.clone() })),
        None => {
            let spec = args.family.spec()?;
            Ok((build(&spec, caps)?, GraphSource::Family { spec }))
        }
    }
}

fn cmd_build(family: &FamilyArgs, out: Option<&Path>, argv: &[String], caps: &Caps) -> Result<(Report, i32)> {
    let spec = family.spec()?;
    let g = build(&spec, caps)?;
    let mut r = Report::new(argv.to_vec(), Some(GraphSource::Family { spec }));
    r.value("vertices", g.v_count()).value("edges", g.edge_count());
    if let Some(path) = out {
        let text = matches!(path.extension().and_then(|e| e.to_str()), Some("txt" | "edges"));
        if text {
            io::export_edge_list(&g, path)?;
        } else {
            io::save(&g, path)?;
        }
        r.value("out", path).value("format", if text { "edge_list" } else { "binary" });
    }
    Ok((r, 0))
}

fn infinite_or(v: Option<usize>) -> Value {
    v.map_or_else(|| Value::from("infinity"), Value::from)
}

fn cmd_metrics(
    args: &GraphArgs,
    want_diameter: bool,
    want_girth: bool,
    check_formula: bool,
    walk: Option<&[usize]>,
    argv: &[String],
    caps: &Caps,
) -> Result<(Report, i32)> {
    let (g, source) = load(args, caps)?;
    let spec = g.spec().cloned();
    let mut r = Report::new(argv.to_vec(), Some(source));
    let none_asked = !want_diameter && !want_girth && !check_formula && walk.is_none();
    let mut diam = None;
    if want_diameter || check_formula || none_asked {
        diam = diameter(&g);
        r.value("diameter", infinite_or(diam)).exact("diameter", "bfs");
    }
    if want_girth || none_asked {
        r.value("girth", infinite_or(girth(&g))).exact("girth", "bfs");
    }
    if check_formula {
        match spec.as_ref().map(grassmann_diameter_formula) {
            Some(Ok(f)) => {
                r.value("diameter_formula", f).verdict("diameter_formula_match", diam == Some(f));
            }
            Some(Err(e)) => {
                r.value("diameter_formula", Value::Null).value("formula_not_applicable", e.to_string());
            }
            None => {
                r.value("formula_not_applicable", "graph has no family spec");
            }
        }
    }
    if let Some(ends) = walk {
        let &[u, v] = ends else {
            return Err(Error::Invalid("--walk takes two vertex ids U,V".into()));
        };
        let w = build_distance_walk(&g, u, v)?;
        let dist = bfs_distances(&g, u).get(v).copied().flatten();
        r.value("walk_length", w.length())
            .value("distance", infinite_or(dist))
            .exact("distance", "bfs")
            .verdict("walk_valid", w.validate(&g))
            .verdict("walk_is_shortest", dist == Some(w.length()));
        r.certificates.push(Certificate::Walk { walk: w });
    }
    let code = verdict_code(&r);
    Ok((r, code))
}

/// Reads a JSON array of vertex ids or vertex labels in display notation.
fn read_set(path: &Path, g: &Graph) -> Result<VertexSet> {
    let text = std::fs::read_to_string(path)?;
    let items: Vec<Value> = serde_json::from_str(&text)?;
    let names: HashMap<String, usize> = (0..g.v_count()).map(|v| (g.label(v).display(), v)).collect();
    let mut set = VertexSet::new(g.v_count());
    for item in items {
        let v = match &item {
            Value::Number(x) => x.as_u64().map(|x| x as usize).filter(|&x| x < g.v_count()),
            Value::String(s) => names.get(s.replace(' ', "").as_str()).copied(),
            _ => None,
        };
        set.insert(v.ok_or_else(|| Error::Invalid(format!("{item} is not a vertex of the graph")))?);
    }
    Ok(set)
}

fn zf_variant(v: VariantArg) -> Result<ZfVariant> {
    match v {
        VariantArg::Plain => Ok(ZfVariant::Plain),
        VariantArg::Total => Ok(ZfVariant::Total),
        VariantArg::Connected => Ok(ZfVariant::Connected),
        VariantArg::Z => Err(Error::Invalid("variant z only applies to --mode grundy".into())),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_zf(
    args: &GraphArgs,
    mode: ZfMode,
    set: Option<&Path>,
    complement: bool,
    variant: VariantArg,
    opts: &SearchOptions,
    argv: &[String],
    caps: &Caps,
) -> Result<(Report, i32)> {
    let (g, source) = load(args, caps)?;
    let n = g.v_count();
    let mut r = Report::new(argv.to_vec(), Some(source));
    if let Some(spec) = g.spec() {
        r.predicted = Some(serde_json::to_value(predicted_zf(spec))?);
    }
    let leader = || -> Result<VertexSet> {
        let path = set.ok_or_else(|| Error::Invalid("this mode needs --set".into()))?;
        let s = read_set(path, &g)?;
        Ok(if complement { s.complement() } else { s })
    };
    match mode {
        ZfMode::Closure => {
            let b = leader()?;
            let (black, trace) = closure(&g, &b);
            r.value("leader_size", b.count())
                .value("closure_size", black.count())
                .value("closure", black.to_vec())
                .value("zero_forcing", black.is_full());
            if black.is_full() {
                r.certificates.push(Certificate::Trace { trace });
            } else {
                r.certificates.push(Certificate::leader(&g, &b, false));
            }
            Ok((r, 0))
        }
        ZfMode::Verify => {
            let v = zf_variant(variant)?;
            let b = leader()?;
            let ok = v.accepts(&g, &b);
            let mut cert = Certificate::leader(&g, &b, is_zero_forcing(&g, &b));
            if let Certificate::LeaderSet { total, connected, .. } = &mut cert {
                match v {
                    ZfVariant::Total => *total = Some(ok),
                    ZfVariant::Connected => *connected = Some(ok),
                    ZfVariant::Plain => {}
                }
            }
            r.value("leader_size", b.count())
                .value("variant", v)
                .verdict("accepted", ok);
            r.certificates.push(cert);
            let code = verdict_code(&r);
            Ok((r, code))
        }
        ZfMode::Exact => {
            let v = zf_variant(variant)?;
            let key = match v {
                ZfVariant::Plain => "z",
                ZfVariant::Total => "z_total",
                ZfVariant::Connected => "z_connected",
            };
            if v != ZfVariant::Plain {
                return match variant_number_exact(&g, v, opts)? {
                    Some((size, cert)) => {
                        r.value(key, size).exact(key, "exhaustive_search");
                        let mut c = Certificate::leader(&g, &cert, true);
                        if let Certificate::LeaderSet { total, connected, .. } = &mut c {
                            if v == ZfVariant::Total {
                                *total = Some(true);
                            } else {
                                *connected = Some(true);
                            }
                        }
                        r.certificates.push(c);
                        Ok((r, 0))
                    }
                    None => {
                        r.value(key, Value::Null).value("exists", false);
                        Ok((r, 0))
                    }
                };
            }
            let res = zero_forcing_number_exact(&g, opts)?;
            r.value("lower", res.lower).value("upper", res.upper).value("closures", res.closures);
            if let Some(c) = &res.certificate {
                r.certificates.push(Certificate::leader(&g, c, true));
            }
            if res.exact {
                r.value("z", res.upper).exact("z", "exhaustive_search");
                if let Some(p) = g.spec().map(predicted_zf) {
                    let z = res.upper as u64;
                    if p.lower().is_some() || p.upper().is_some() {
                        let within = p.lower().is_none_or(|l| l <= z) && p.upper().is_none_or(|u| z <= u);
                        r.verdict("within_prediction", within);
                    }
                }
                let code = verdict_code(&r);
                Ok((r, code))
            } else {
                r.value("cutoff", &res.cutoff).value("partial", true);
                Ok((r, 3))
            }
        }
        ZfMode::Grundy => {
            let gv = match variant {
                VariantArg::Plain => GrundyVariant::Grundy,
                VariantArg::Z => GrundyVariant::ZGrundy,
                _ => return Err(Error::Invalid("--mode grundy takes --variant plain or z".into())),
            };
            let seq = grundy_exact(&g, gv, caps.search_vertices)?;
            let key = if gv == GrundyVariant::Grundy { "grundy" } else { "z_grundy" };
            r.value(key, seq.len()).exact(key, "exhaustive_search");
            if gv == GrundyVariant::ZGrundy {
                r.value("z", n - seq.len()).exact("z", "exhaustive_search");
            } else {
                r.value("z_lower_bound", n - seq.len());
            }
            r.verdict("sequence_valid", seq.validate(&g));
            r.certificates.push(Certificate::Domination { sequence: seq });
            let code = verdict_code(&r);
            Ok((r, code))
        }
    }
}

fn kneser_construction(n: usize, k: usize, s: &IntersectionSet, caps: &Caps) -> Result<ConstructionResult> {
    let t = s.max();
    if *s == IntersectionSet::up_to(t) && n + 2 * t == 3 * k {
        kneser_zfs_edge(n, k, t, caps)
    } else {
        kneser_zfs_with(n, k, s, caps)
    }
}

fn leader_certificate(g: &Graph, c: &ConstructionResult) -> Certificate {
    Certificate::LeaderSet {
        vertices: c.leader.to_vec(),
        labels: c.leader.iter().map(|v| g.label(v).display()).collect(),
        zero_forcing: c.claims.zfs,
        total: c.claims.total.then_some(true),
        connected: c.claims.connected.then_some(true),
    }
}

fn add_construction(r: &mut Report, prefix: &str, g: &Graph, c: &ConstructionResult, verify: bool) -> Result<()> {
    let key = |s: &str| format!("{prefix}{s}");
    r.value(&key("leader_size"), c.leader_size())
        .value(&key("predicted_size"), c.predicted_size)
        .value(&key("claims"), c.claims)
        .value(&key("white"), c.white.iter().map(|v| g.label(v).display()).collect::<Vec<_>>());
    if verify {
        let v = c.verify(g)?;
        r.value(&key("closure_size"), v.closure_size)
            .verdict(&key("partition"), v.partition_ok)
            .verdict(&key("size_matches_prediction"), v.size_ok)
            .verdict(&key("zero_forcing"), v.zero_forcing);
        if c.claims.total {
            r.verdict(&key("total"), v.total);
        }
        if c.claims.connected {
            r.verdict(&key("connected"), v.connected);
        }
    }
    r.certificates.push(leader_certificate(g, c));
    Ok(())
}

fn cmd_construct(family: &FamilyArgs, verify: bool, argv: &[String], caps: &Caps) -> Result<(Report, i32)> {
    let spec = family.spec()?;
    let kind = family.family.expect("spec() checked the family");
    let g = build(&spec, caps)?;
    let mut r = Report::new(argv.to_vec(), Some(GraphSource::Family { spec: spec.clone() }));
    let prediction = predicted_zf(&spec);
    r.predicted = Some(serde_json::to_value(&prediction)?);

    if kind == FamilyKind::GrassmannSpecial {
        let sets = grassmann_special_set_j2_4_2();
        add_construction(&mut r, "small.", &g, &sets.small, verify)?;
        add_construction(&mut r, "johnson_analogue.", &g, &sets.johnson_analogue, verify)?;
        let code = verdict_code(&r);
        return Ok((r, code));
    }

    let c = match (&spec, kind) {
        (FamilySpec::GeneralizedJohnson { n, k, s }, FamilyKind::Kneser) => kneser_construction(*n, *k, s, caps)?,
        (FamilySpec::GeneralizedJohnson { n, k, s }, _) => johnson_zfs(*n, *k, s, caps)?,
        (FamilySpec::GeneralizedGrassmann { n, k, q, s }, _) => grassmann_zfs_with(*n, *k, *q, s, caps)?,
        (FamilySpec::Hamming { n, q }, _) => hamming_zfs(*n, *q, caps)?,
    };
    add_construction(&mut r, "", &g, &c, verify)?;
    if c.claims.minimum_known {
        if let (Some(z), Some(tag)) = (prediction.exact(), prediction.upper_from.first()) {
            let tag = serde_json::to_value(tag)?;
            r.value("z", z).exact("z", format!("formula:{}", tag.as_str().unwrap_or_default()));
        }
    }

    if let (true, FamilySpec::Hamming { n, q }) = (verify, &spec) {
        let (n, q) = (*n, *q);
        let core = hamming_core(n, q, caps)?;
        r.value("core_size", core.count())
            .verdict("leader_contains_core", core.is_subset(&c.leader));
        match hamming_trace(&g, &c) {
            Ok(trace) => {
                let pivots_ok = trace.steps.iter().all(|&(p, _)| !core.contains(p));
                r.verdict("core_free_trace", pivots_ok && trace.replay(&g).is_ok_and(|b| b.is_full()));
                r.certificates.push(Certificate::Trace { trace });
            }
            Err(e) => {
                r.value("trace_error", e.to_string()).verdict("core_free_trace", false);
            }
        }
        let z = z_hamming(n, q)?;
        if n >= 2 {
            let lhs = (q as u128) * z_hamming(n - 1, q)? as u128 - ((q - 2) as u128).pow(n as u32 - 1);
            r.verdict("size_recursion", lhs == z as u128);
        }
        r.verdict("even_terms_identity", even_terms_identity(n, q)?.equal);
    }
    let code = verdict_code(&r);
    Ok((r, code))
}

fn cmd_nullity(n: usize, q: usize, argv: &[String], caps: &Caps) -> Result<(Report, i32)> {
    let spec = FamilySpec::hamming(n, q);
    let b = build_bn(n, q, caps)?;
    let nu = f2_nullity(&b);
    let z = z_hamming(n, q)?;
    let basis = kernel_basis(n, q, caps)?;
    let check = basis.verify(&b)?;
    let identity = even_terms_identity(n, q)?;
    let mut r = Report::new(argv.to_vec(), Some(GraphSource::Family { spec }));
    r.value("order", b.rows())
        .value("nullity", nu)
        .exact("nullity", "elimination")
        .value("z_formula", z)
        .value("zf_lower_bound", nu)
        .value("kernel_check", check)
        .value("kernel_construction", basis.construction)
        .value("even_terms", identity)
        .verdict("nullity_equals_formula", nu as u64 == z)
        .verdict("kernel_basis", check.ok())
        .verdict("even_terms_identity", identity.equal);
    let code = verdict_code(&r);
    Ok((r, code))
}
