use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twglue::construct::{glue_path_tree, glue_tw_pw_traced, glue_via_cover, glue_via_layouts};
use twglue::generate::{generate_family, random_banded, Family};
use twglue::io::{parse_gr, parse_perm, parse_td, write_gr, write_perm, write_td};
use twglue::lab::{
    badic_distance, balanced_cut_scan, balanced_tree, big_gap, crossing_edges, cut_size_formula, gap_windows,
    impossibility_probe, is_balanced, similarity_mu, subtree_profile, Cut, ProbeConfig, ProbeReport, ScanMode,
};
use twglue::{glue, validate_td, Graph, GluingResult, Permutation, RootedTree, Solver, TreeDecomposition};

use crate::config::{write, RunConfig};
use crate::inputs::{decomposition_for, layout_for};
use crate::suites::{self, CriterionReport};
use crate::{Cli, Command, ConstructCommand, FamilyName, LabCommand, EXIT_FAILURE, EXIT_USAGE};

/// A check that ran and came out negative (exit status 1).
#[derive(Debug)]
struct Failed(String);

impl fmt::Display for Failed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

struct Ctx {
    cfg: RunConfig,
    rng: ChaCha8Rng,
    solver: Solver,
}

pub(crate) fn execute(cli: Cli) -> i32 {
    if let Some(t) = cli.threads {
        // Fails only if a pool already exists in this process; that pool is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e:#}");
            let certification = matches!(e.downcast_ref::<twglue::Error>(), Some(twglue::Error::Invariant(_)));
            if e.downcast_ref::<Failed>().is_some() || certification {
                EXIT_FAILURE
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gen(_) => "gen",
        Command::Glue(_) => "glue",
        Command::Construct(ConstructCommand::Cover { .. }) => "construct cover",
        Command::Construct(ConstructCommand::Layouts { .. }) => "construct layouts",
        Command::Construct(ConstructCommand::TwPw { .. }) => "construct tw-pw",
        Command::Construct(ConstructCommand::PathTree { .. }) => "construct path-tree",
        Command::Tw(_) => "tw",
        Command::Pw(_) => "pw",
        Command::Validate(_) => "validate",
        Command::Lab(LabCommand::BalancedTree { .. }) => "lab balanced-tree",
        Command::Lab(LabCommand::CutFormula { .. }) => "lab cut-formula",
        Command::Lab(LabCommand::Scan { .. }) => "lab scan",
        Command::Lab(LabCommand::Mu { .. }) => "lab mu",
        Command::Lab(LabCommand::Badic { .. }) => "lab badic",
        Command::Lab(LabCommand::Biggap { .. }) => "lab biggap",
        Command::Lab(LabCommand::Probe { .. }) => "lab probe",
        Command::Reproduce(_) => "reproduce",
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    let solver = Solver::with_limit(cli.solver_limit)?;
    let cfg = RunConfig::new(command_name(&cli.command), cli.seed, cli.solver_limit, cli.out_dir.clone());
    let mut ctx = Ctx { cfg, rng: ChaCha8Rng::seed_from_u64(cli.seed), solver };
    match cli.command {
        Command::Gen(a) => gen(&mut ctx, a),
        Command::Glue(a) => glue_cmd(&mut ctx, a),
        Command::Construct(c) => construct(&mut ctx, c),
        Command::Tw(a) => tw(&mut ctx, &a.gr),
        Command::Pw(a) => pw(&mut ctx, &a.gr),
        Command::Validate(a) => validate(&mut ctx, &a.gr, &a.td, a.max_width),
        Command::Lab(l) => lab(&mut ctx, l),
        Command::Reproduce(a) => reproduce(&mut ctx, a),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_gr(&read(path)?).with_context(|| path.display().to_string())
}

fn read_td(path: &Path) -> Result<TreeDecomposition> {
    parse_td(&read(path)?).with_context(|| path.display().to_string())
}

fn read_perm(path: &Path) -> Result<Permutation> {
    parse_perm(&read(path)?).with_context(|| path.display().to_string())
}

fn header_with(cfg: &RunConfig, extra: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut h = cfg.header();
    h.extend(extra);
    h
}

/// CSV text with the config as `#` comment lines on top.
fn csv_text<F>(cfg: &RunConfig, fill: F) -> Result<String>
where
    F: FnOnce(&mut csv::Writer<&mut Vec<u8>>) -> Result<()>,
{
    let mut buf = Vec::new();
    for line in cfg.header() {
        buf.extend_from_slice(format!("# {line}\n").as_bytes());
    }
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        fill(&mut w)?;
        w.flush()?;
    }
    Ok(String::from_utf8(buf)?)
}

fn list(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn gen(ctx: &mut Ctx, a: crate::GenArgs) -> Result<()> {
    ctx.cfg.param("family", format!("{:?}", a.family)).param("n", a.n).param("shuffle", a.shuffle);
    let mut witness = None;
    let graph = match a.family {
        FamilyName::Balanced => {
            ctx.cfg.param("b", a.b);
            balanced_tree(a.b, a.n)?.graph().clone()
        }
        FamilyName::Banded => {
            if a.n == 0 {
                bail!("n must be positive");
            }
            ctx.cfg.param("band", a.band).param("keep", a.keep);
            random_banded(a.n, a.band, a.keep, &mut ctx.rng)
        }
        other => {
            let family = match other {
                FamilyName::Star => Family::Star,
                FamilyName::Path => Family::Path,
                FamilyName::Caterpillar => {
                    ctx.cfg.param("leaves", &a.leaves);
                    Family::Caterpillar { leaves: a.leaves.clone() }
                }
                FamilyName::RandomCaterpillar => Family::RandomCaterpillar,
                FamilyName::RandomTree => Family::RandomTree,
                FamilyName::PartialKtree => {
                    ctx.cfg.param("k", a.k).param("keep", a.keep);
                    Family::PartialKTree { k: a.k, keep: a.keep }
                }
                FamilyName::Balanced | FamilyName::Banded => unreachable!(),
            };
            let g = generate_family(&family, a.n, &mut ctx.rng)?;
            witness = g.decomposition;
            g.graph
        }
    };
    let (graph, witness) = if a.shuffle {
        let phi = Permutation::random(graph.n(), &mut ctx.rng);
        let d = witness.map(|d| d.map_vertices(|v| phi.apply(v)));
        (graph.relabel(&phi)?, d)
    } else {
        (graph, witness)
    };
    ctx.cfg.param("out", &a.out);
    ctx.cfg.persist()?;
    let path = ctx.cfg.path(&a.out);
    write(&path, &write_gr(&graph, &ctx.cfg.header()))?;
    if let Some(d) = witness {
        write(&path.with_extension("td"), &write_td(&d, &header_with(&ctx.cfg, [format!("width {}", d.width())])))?;
    }
    eprintln!("wrote {} ({} vertices, {} edges)", path.display(), graph.n(), graph.edge_count());
    Ok(())
}

fn glue_cmd(ctx: &mut Ctx, a: crate::GlueArgs) -> Result<()> {
    let g1 = read_graph(&a.g1)?;
    let g2 = read_graph(&a.g2)?;
    ctx.cfg.param("g1", &a.g1).param("g2", &a.g2).param("phi", &a.phi);
    let phi = match &a.phi {
        Some(p) => read_perm(p)?,
        None => Permutation::random(g1.n(), &mut ctx.rng),
    };
    let glued = glue(&g1, &g2, &phi)?;
    ctx.cfg.persist()?;
    write(&ctx.cfg.path("glued.gr"), &write_gr(&glued, &ctx.cfg.header()))?;
    write(&ctx.cfg.path("phi.perm"), &write_perm(&phi, &ctx.cfg.header()))?;
    eprintln!("glued graph: {} vertices, {} edges", glued.n(), glued.edge_count());
    Ok(())
}

fn construct(ctx: &mut Ctx, c: ConstructCommand) -> Result<()> {
    let result = match &c {
        ConstructCommand::Cover { g1, g2, td2, phi } => {
            ctx.cfg.param("g1", g1).param("g2", g2).param("td2", td2).param("phi", phi);
            let (g1, g2) = (read_graph(g1)?, read_graph(g2)?);
            let d2 = match td2 {
                Some(p) => read_td(p)?,
                None => decomposition_for(&g2, &ctx.solver)?,
            };
            let phi = match phi {
                Some(p) => read_perm(p)?,
                None => Permutation::random(g1.n(), &mut ctx.rng),
            };
            let cover = ctx.solver.vertex_cover(&g1)?;
            let r = glue_via_cover(&g1, &cover, &g2, &d2, &phi)?;
            eprintln!("vertex cover of G1: {} vertices; G2 decomposition width {}", cover.len(), d2.width());
            finish_construction(ctx, r)
        }
        ConstructCommand::Layouts { g1, g2 } => {
            ctx.cfg.param("g1", g1).param("g2", g2);
            let (g1, g2) = (read_graph(g1)?, read_graph(g2)?);
            let p1 = layout_for(&g1, &ctx.solver)?;
            let p2 = layout_for(&g2, &ctx.solver)?;
            finish_construction(ctx, glue_via_layouts(&g1, &g2, Some(&p1), Some(&p2), &ctx.solver)?)
        }
        ConstructCommand::TwPw { g1, g2, td1 } => {
            ctx.cfg.param("g1", g1).param("g2", g2).param("td1", td1);
            let (g1, g2) = (read_graph(g1)?, read_graph(g2)?);
            let d1 = match td1 {
                Some(p) => read_td(p)?,
                None => decomposition_for(&g1, &ctx.solver)?,
            };
            let p2 = layout_for(&g2, &ctx.solver)?;
            let (r, trace) = glue_tw_pw_traced(&g1, &g2, Some(&d1), Some(&p2), &ctx.solver)?;
            eprintln!(
                "k={}, l={}: {} smooth nodes, tilt degree {}, at most {} extensions per bag",
                trace.k, trace.ell, trace.smooth_nodes, trace.tilt_max_degree, trace.max_extensions
            );
            finish_construction(ctx, r)
        }
        ConstructCommand::PathTree { g1, g2 } => {
            ctx.cfg.param("g1", g1).param("g2", g2);
            let (p, t) = (read_graph(g1)?, read_graph(g2)?);
            finish_construction(ctx, glue_path_tree(&p, &t)?)
        }
    };
    result
}

fn finish_construction(ctx: &mut Ctx, r: GluingResult) -> Result<()> {
    ctx.cfg.persist()?;
    let note = format!("construction {} bound {} witness-width {}", r.kind, r.claimed_bound, r.witness.width());
    let header = header_with(&ctx.cfg, [note]);
    write(&ctx.cfg.path("glued.gr"), &write_gr(&r.glued, &header))?;
    write(&ctx.cfg.path("phi.perm"), &write_perm(&r.phi, &header))?;
    write(&ctx.cfg.path("witness.td"), &write_td(&r.witness, &header))?;
    eprintln!("width ≤ {}", r.claimed_bound);
    eprintln!("witness width {} on {} vertices, {} edges", r.witness.width(), r.glued.n(), r.glued.edge_count());
    Ok(())
}

fn tw(ctx: &mut Ctx, gr: &Path) -> Result<()> {
    ctx.cfg.param("gr", gr);
    let g = read_graph(gr)?;
    let r = ctx.solver.treewidth(&g)?;
    ctx.cfg.persist()?;
    let header = header_with(&ctx.cfg, [format!("treewidth {}", r.width)]);
    write(&ctx.cfg.path("treewidth.td"), &write_td(&r.decomposition, &header))?;
    eprintln!("treewidth {}", r.width);
    Ok(())
}

fn pw(ctx: &mut Ctx, gr: &Path) -> Result<()> {
    ctx.cfg.param("gr", gr);
    let g = read_graph(gr)?;
    let r = ctx.solver.pathwidth(&g)?;
    ctx.cfg.persist()?;
    let header = header_with(&ctx.cfg, [format!("pathwidth {}", r.width)]);
    write(&ctx.cfg.path("pathwidth.td"), &write_td(&r.decomposition, &header))?;
    let layout = Permutation::from_images(r.layout.order().to_vec())?;
    let layout_header = header_with(&ctx.cfg, ["layout: the i-th entry is the vertex at position i".to_string()]);
    write(&ctx.cfg.path("layout.perm"), &write_perm(&layout, &layout_header))?;
    eprintln!("pathwidth {}", r.width);
    Ok(())
}

fn validate(_ctx: &mut Ctx, gr: &Path, td: &Path, max_width: Option<usize>) -> Result<()> {
    let g = read_graph(gr)?;
    let d = read_td(td)?;
    let violations = validate_td(&g, &d);
    for v in violations.iter().take(20) {
        eprintln!("violation: {v}");
    }
    if !violations.is_empty() {
        return Err(Failed(format!("{} violations", violations.len())).into());
    }
    if let Some(w) = max_width.filter(|&w| d.width() > w) {
        return Err(Failed(format!("valid, but width {} exceeds {w}", d.width())).into());
    }
    eprintln!("valid tree decomposition of width {}", d.width());
    Ok(())
}

fn lab(ctx: &mut Ctx, l: LabCommand) -> Result<()> {
    match l {
        LabCommand::BalancedTree { b, n } => {
            ctx.cfg.param("b", b).param("n", n);
            let t = balanced_tree(b, n)?;
            let profile = subtree_profile(&t);
            ctx.cfg.persist()?;
            let name = format!("balanced_b{b}_n{n}");
            write(&ctx.cfg.path(format!("{name}.gr")), &write_gr(t.graph(), &ctx.cfg.header()))?;
            let text = csv_text(&ctx.cfg, |w| {
                w.write_record(["v", "level", "size", "predicted", "beta"])?;
                for e in &profile {
                    w.write_record([
                        e.v.to_string(),
                        e.level.to_string(),
                        e.size.to_string(),
                        e.predicted.to_string(),
                        e.beta.to_string(),
                    ])?;
                }
                Ok(())
            })?;
            write(&ctx.cfg.path(format!("{name}_profile.csv")), &text)?;
            let worst = profile.iter().map(|e| e.beta.numer().abs() as f64 / *e.beta.denom() as f64).fold(0.0, f64::max);
            eprintln!("T_{b}({n}): {} full levels, max |beta| = {worst:.4}", t.full_levels());
            if !is_balanced(&t.tree, b) {
                return Err(Failed("tree violates the balance invariants".into()).into());
            }
            Ok(())
        }
        LabCommand::CutFormula { trees, max_n } => {
            if max_n == 0 || max_n > 20 {
                bail!("--max-n must be in 1..=20");
            }
            ctx.cfg.param("trees", trees).param("max_n", max_n);
            let mut rows = Vec::new();
            for i in 0..trees {
                let n = rand::Rng::gen_range(&mut ctx.rng, 1..=max_n);
                let root = rand::Rng::gen_range(&mut ctx.rng, 1..=n);
                let t = RootedTree::new(&twglue::generate::random_tree(n, &mut ctx.rng), root)?;
                let mismatches = (0..1u64 << n)
                    .filter(|&mask| {
                        let u = Cut::from_mask(n, mask);
                        cut_size_formula(&t, &u).expect("sizes agree") != u.len() as i64
                    })
                    .count();
                rows.push((i, n, root, 1u64 << n, mismatches));
            }
            ctx.cfg.persist()?;
            let text = csv_text(&ctx.cfg, |w| {
                w.write_record(["tree", "n", "root", "subsets", "mismatches"])?;
                for r in &rows {
                    w.serialize(r)?;
                }
                Ok(())
            })?;
            write(&ctx.cfg.path("cut_formula.csv"), &text)?;
            let bad: usize = rows.iter().map(|r| r.4).sum();
            let total: u64 = rows.iter().map(|r| r.3).sum();
            eprintln!("{} of {total} subsets match", total - bad as u64);
            if bad > 0 {
                return Err(Failed(format!("{bad} mismatches")).into());
            }
            Ok(())
        }
        LabCommand::Scan { gr, samples, mu } => {
            ctx.cfg.param("gr", &gr).param("samples", samples).param("mu", mu);
            let g = read_graph(&gr)?;
            let mode = match samples {
                Some(count) => ScanMode::Sampled { count, seed: ctx.cfg.seed },
                None => ScanMode::Exhaustive,
            };
            let r = balanced_cut_scan(&g, mode, mu)?;
            ctx.cfg.persist()?;
            let text = csv_text(&ctx.cfg, |w| {
                w.write_record(["n", "edges", "exact", "cuts_examined", "min_e", "argmin_e", "min_mu", "argmin_mu"])?;
                w.write_record([
                    g.n().to_string(),
                    g.edge_count().to_string(),
                    r.exact.to_string(),
                    r.cuts_examined.to_string(),
                    r.min_e.to_string(),
                    list(&r.argmin_e.members()),
                    r.min_mu.map(|m| m.to_string()).unwrap_or_default(),
                    r.argmin_mu.as_ref().map(|c| list(&c.members())).unwrap_or_default(),
                ])?;
                Ok(())
            })?;
            write(&ctx.cfg.path("scan.csv"), &text)?;
            let kind = if r.exact { "exact" } else { "upper bound" };
            eprintln!("e = {} ({kind}, {} cuts)", r.min_e, r.cuts_examined);
            if let Some(m) = r.min_mu {
                eprintln!("mu = {m} ({kind})");
            }
            Ok(())
        }
        LabCommand::Mu { gr, cut } => {
            ctx.cfg.param("gr", &gr).param("cut", &cut);
            let g = read_graph(&gr)?;
            let u = Cut::new(g.n(), &cut)?;
            let mu = similarity_mu(&g, &u)?;
            let e = crossing_edges(&g, &u)?.len();
            ctx.cfg.persist()?;
            let text = csv_text(&ctx.cfg, |w| {
                w.write_record(["size", "balanced", "e", "mu"])?;
                w.serialize((u.len(), u.is_balanced(), e, mu))?;
                Ok(())
            })?;
            write(&ctx.cfg.path("mu.csv"), &text)?;
            eprintln!("|U| = {}, e = {e}, mu = {mu}", u.len());
            Ok(())
        }
        LabCommand::Badic { i, j } => {
            ctx.cfg.param("i", i).param("j", j);
            let r = badic_distance(i, j);
            let distance = r.distance.as_ref().map_or_else(|| "inf".to_string(), |d| d.to_string());
            ctx.cfg.persist()?;
            let text = csv_text(&ctx.cfg, |w| {
                w.write_record(["i", "j", "distance", "bound", "disjoint", "holds"])?;
                w.serialize((i, j, &distance, r.bound.to_string(), r.disjoint, r.holds))?;
                Ok(())
            })?;
            write(&ctx.cfg.path("badic.csv"), &text)?;
            eprintln!("d(R_2,{i}, R_3,{j}) = {distance}, bound 3^-{} = {}", i + j, r.bound);
            if !r.holds {
                return Err(Failed("distance below the bound or sets intersect".into()).into());
            }
            eprintln!("bound holds");
            Ok(())
        }
        LabCommand::Biggap { a, m, k, l, reds } => {
            ctx.cfg.param("a", a).param("m", m).param("k", k).param("l", l).param("reds", &reds);
            let reds: BTreeSet<u64> = reds.into_iter().collect();
            let c = big_gap(a, m, k, l, &reds)?;
            let w = gap_windows(a, m, l, &reds, c);
            ctx.cfg.persist()?;
            let text = csv_text(&ctx.cfg, |wr| {
                wr.write_record(["c", "above_a", "below_l_over_m", "short_window_black", "long_window_black", "long_window_exists"])?;
                wr.serialize((c, w.above_a, w.below_l_over_m, w.short_window_black, w.long_window_black, w.long_window_exists))?;
                Ok(())
            })?;
            write(&ctx.cfg.path("biggap.csv"), &text)?;
            eprintln!("C = {c}");
            eprintln!("{} < C < {l}/{m}: {}", a, w.above_a && w.below_l_over_m);
            eprintln!("C+1..{}C black: {}", m, w.short_window_black);
            eprintln!("the {m}C elements after C black: {}", w.long_window_black);
            if !w.interval_argument_holds() {
                return Err(Failed("returned C does not have a black window".into()).into());
            }
            Ok(())
        }
        LabCommand::Probe { n, tries, budget } => {
            ctx.cfg.param("n", &n).param("tries", tries).param("budget", budget);
            let mut reports = Vec::new();
            for &size in &n {
                let config = ProbeConfig { tries, seed: ctx.cfg.seed, budget, solver: ctx.solver };
                let r = impossibility_probe(size, &config)?;
                eprintln!(
                    "n={size}: min tw {} ({}) over {tries} tries",
                    r.min_tw(),
                    if r.certified() { "exact" } else { "greedy upper bound" }
                );
                reports.push(r);
            }
            ctx.cfg.persist()?;
            write_probe(&ctx.cfg, &reports)?;
            let monotone = reports.windows(2).all(|w| w[0].min_tw() <= w[1].min_tw());
            eprintln!("min tw non-decreasing in n: {monotone}");
            Ok(())
        }
    }
}

fn write_probe(cfg: &RunConfig, reports: &[ProbeReport]) -> Result<()> {
    for r in reports {
        for t in &r.tries {
            let header = header_with(cfg, [format!("n {} try {} tw {} certified {}", r.n, t.index, t.tw, t.certified)]);
            write(&cfg.path(phi_file(r.n, t.index)), &write_perm(&t.phi, &header))?;
        }
    }
    let text = csv_text(cfg, |w| {
        w.write_record(["n", "try", "seed", "phi_file", "tw", "certified", "min_balanced_e"])?;
        for r in reports {
            for t in &r.tries {
                w.write_record([
                    r.n.to_string(),
                    t.index.to_string(),
                    t.seed.to_string(),
                    phi_file(r.n, t.index),
                    t.tw.to_string(),
                    t.certified.to_string(),
                    String::new(),
                ])?;
            }
            let best = r.best_try();
            w.write_record([
                r.n.to_string(),
                "min".to_string(),
                best.seed.to_string(),
                phi_file(r.n, best.index),
                best.tw.to_string(),
                r.certified().to_string(),
                r.min_balanced_e.map(|e| e.to_string()).unwrap_or_default(),
            ])?;
        }
        Ok(())
    })?;
    write(&cfg.path("probe.csv"), &text)
}

fn phi_file(n: usize, index: usize) -> String {
    format!("probe_n{n}/try_{index:04}.perm")
}

fn reproduce(ctx: &mut Ctx, a: crate::ReproduceArgs) -> Result<()> {
    let ids = suites::suite_criteria(&a.suite).expect("validated by the parser");
    ctx.cfg.param("suite", &a.suite);
    if ids.contains(&12) {
        ctx.cfg.param("n", &a.n).param("tries", a.tries).param("budget", a.budget);
    }
    ctx.cfg.persist()?;
    let mut reports: Vec<CriterionReport> = Vec::new();
    for &id in ids {
        let report = if id == 12 {
            let (report, probes) = suites::probe_trend(ctx.cfg.seed, &a.n, a.tries, a.budget, ctx.solver);
            write_probe(&ctx.cfg, &probes)?;
            report
        } else {
            suites::run_criterion(id, ctx.cfg.seed)
        };
        eprintln!("{report}");
        reports.push(report);
    }
    let text = csv_text(&ctx.cfg, |w| {
        w.write_record(["criterion", "name", "status", "checks", "failures", "limit_s", "detail"])?;
        for r in &reports {
            w.write_record([
                r.id.to_string(),
                r.name.to_string(),
                if r.passed() { "PASS" } else { "FAIL" }.to_string(),
                r.checks.to_string(),
                r.failures.to_string(),
                r.limit.as_secs().to_string(),
                r.detail.clone(),
            ])?;
        }
        Ok(())
    })?;
    write(&ctx.cfg.path(format!("reproduce_{}.csv", a.suite)), &text)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(Failed(format!("{failed} of {} criteria failed", reports.len())).into());
    }
    Ok(())
}
