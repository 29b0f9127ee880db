//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
//! process exits non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use partree_core::coloring::{self, ColoringOptions, ListAssignment, Strategy};
use partree_core::connectivity::{enumerate_cutsets, single_cutsets, CutsetFamily};
use partree_core::critical::{
    classify_exactly_four, generate_critical_chain, is_critical, ChainDescription, ChainSpec,
    CriticalOptions, MiddleKind,
};
use partree_core::decomposition::{
    bt_tree, nonsingle_from_cycles, parts, tree_separation, DecompositionTree, Node, PartKind,
};
use partree_core::graph::families;
use partree_core::planarity::{base_planar, check_planarity, is_planar, PlanarityOptions};
use partree_core::{Graph, VertexSet};
use partree_oracles::enumerate::{canonical, connected_graphs};
use partree_oracles::{
    oracle_chromatic, oracle_critical, oracle_cutsets, oracle_parts, oracle_planar,
    random_biconnected, OracleBudget, SmallGraph,
};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CORPUS_SIZE: usize = 500;
const DENSITIES: [f64; 6] = [0.0, 0.05, 0.1, 0.2, 0.35, 0.6];

struct Entry {
    seed: u64,
    g: Graph,
    tree: DecompositionTree,
}

/// 500 seeded biconnected graphs, `n` cycling through `4..=10`.
fn corpus() -> &'static [Entry] {
    static CORPUS: OnceLock<Vec<Entry>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (0..CORPUS_SIZE as u64)
            .map(|seed| {
                let n = 4 + (seed % 7) as usize;
                let density = DENSITIES[(seed / 7) as usize % DENSITIES.len()];
                let g = random_biconnected(n, density, seed).expect("valid generator input");
                let tree = bt_tree(&g).expect("generator output is biconnected");
                Entry { seed, g, tree }
            })
            .collect()
    })
}

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Debug>(seed: u64) -> impl Fn(E) -> String {
    move |e| format!("seed {seed}: {e:?}")
}

fn budget() -> OracleBudget {
    OracleBudget::default()
}

fn mask(sg: &SmallGraph, s: &VertexSet) -> u32 {
    sg.to_mask(s).expect("set of graph vertices")
}

/// Bipartite tree whose leaves are parts, cutset degree equal to the number
/// of components of `G − S`, and tree separation matching graph separation.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut triples = 0usize;
    for e in corpus() {
        let t = &e.tree;
        check(t.is_tree(), || format!("seed {}: not a tree", e.seed))?;
        let sg = SmallGraph::from_graph(&e.g).map_err(err(e.seed))?;
        for (c, p) in t.edges() {
            check(t.cutset(c).is_subset(t.part(p).members()), || {
                format!(
                    "seed {}: edge joins a cutset to a part not containing it",
                    e.seed
                )
            })?;
        }
        for c in 0..t.family().len() {
            let s = t.cutset(c);
            let alive = sg.all() & !mask(&sg, s);
            let pieces = sg.components(alive).len();
            check(t.degree(Node::Cutset(c)) == pieces, || {
                format!(
                    "seed {}: cutset {s} has degree {} but G-S has {pieces} components",
                    e.seed,
                    t.degree(Node::Cutset(c))
                )
            })?;
            check(pieces >= 2, || {
                format!("seed {}: cutset node {s} is a leaf", e.seed)
            })?;
            for (i, b) in t.parts().iter().enumerate() {
                for b2 in &t.parts()[i + 1..] {
                    let x = mask(&sg, &b.members().difference(s));
                    let y = mask(&sg, &b2.members().difference(s));
                    let graph_sep = sg.reach(x.trailing_zeros() as usize, alive) & y == 0;
                    let tree_sep =
                        tree_separation(t, s, b.members(), b2.members()).map_err(err(e.seed))?;
                    check(graph_sep == tree_sep, || {
                        format!(
                            "seed {}: S={s}, B={}, B'={}: graph {graph_sep}, tree {tree_sep}",
                            e.seed,
                            b.members(),
                            b2.members()
                        )
                    })?;
                    triples += 1;
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(secs < 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!(
        "{} graphs, {triples} separation triples, {secs:.2}s",
        corpus().len()
    ))
}

fn sorted_members(family: &CutsetFamily) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = family.sets().cloned().collect();
    v.sort();
    v
}

/// `parts` agrees with the definition-level oracle for the single-cutset
/// family, the empty family, and every single cutset on its own.
fn criterion_2() -> Outcome {
    let mut comparisons = 0;
    for e in corpus() {
        let singles = single_cutsets(&e.g).map_err(err(e.seed))?;
        let mut families = vec![singles.clone(), CutsetFamily::empty(2)];
        for s in singles.sets() {
            families.push(CutsetFamily::new(&e.g, 2, [s.clone()]).map_err(err(e.seed))?);
        }
        for f in families {
            let mut ours: Vec<VertexSet> = parts(&e.g, &f)
                .map_err(err(e.seed))?
                .iter()
                .map(|p| p.members().clone())
                .collect();
            ours.sort();
            let theirs = oracle_parts(&e.g, &sorted_members(&f), &budget()).map_err(err(e.seed))?;
            check(ours == theirs, || {
                format!("seed {}: parts {ours:?} vs oracle {theirs:?}", e.seed)
            })?;
            comparisons += 1;
        }
    }
    Ok(format!("{comparisons} families, zero mismatches"))
}

/// Triconnected by bitmask brute force: at least four vertices and no pair
/// disconnects.
fn triconnected(sg: &SmallGraph) -> bool {
    let n = sg.n();
    n >= 4
        && sg.is_connected(sg.all())
        && (0..n).all(|a| (a + 1..n).all(|b| sg.is_connected(sg.all() & !(1 << a) & !(1 << b))))
}

fn simple_cycle(sg: &SmallGraph) -> bool {
    sg.n() >= 3 && sg.is_connected(sg.all()) && (0..sg.n()).all(|v| sg.degree(v) == 2)
}

fn criterion_3() -> Outcome {
    let (mut cycles, mut blocks, mut empty) = (0, 0, 0);
    for e in corpus() {
        let aug = e.tree.augmented(&e.g);
        for p in e.tree.parts() {
            let sub = SmallGraph::from_graph(&aug.induced(p.members()).map_err(err(e.seed))?)
                .map_err(err(e.seed))?;
            let (is_cycle, is_tri) = (simple_cycle(&sub), triconnected(&sub));
            match p.kind() {
                PartKind::Cycle(len) => {
                    check(is_cycle && !is_tri && len == p.len(), || {
                        format!("seed {}: {} labelled Cycle({len})", e.seed, p.members())
                    })?;
                    cycles += 1;
                }
                PartKind::Block => {
                    check(is_tri && !is_cycle, || {
                        format!("seed {}: {} labelled Block", e.seed, p.members())
                    })?;
                    blocks += 1;
                }
                PartKind::Unclassified => {
                    return Err(format!("seed {}: {} is unclassified", e.seed, p.members()))
                }
            }
        }
        if e.tree.family().is_empty() {
            let sg = SmallGraph::from_graph(&e.g).map_err(err(e.seed))?;
            check(triconnected(&sg) != simple_cycle(&sg), || {
                format!(
                    "seed {}: no single cutsets, yet neither triconnected nor a cycle",
                    e.seed
                )
            })?;
            empty += 1;
        }
    }
    Ok(format!(
        "{cycles} cycle parts, {blocks} block parts, {empty} graphs without single cutsets"
    ))
}

fn criterion_4() -> Outcome {
    let mut nonsingle = 0;
    for e in corpus() {
        let all = enumerate_cutsets(&e.g, 2).map_err(err(e.seed))?;
        let aug = e.tree.augmented(&e.g);
        let aug_all = enumerate_cutsets(&aug, 2).map_err(err(e.seed))?;
        check(sorted_members(&all) == sorted_members(&aug_all), || {
            format!("seed {}: 2-cutsets of G and G' differ", e.seed)
        })?;
        let oracle = oracle_cutsets(&e.g, 2, &budget()).map_err(err(e.seed))?;
        check(sorted_members(&all) == oracle, || {
            format!("seed {}: 2-cutsets differ from the oracle", e.seed)
        })?;
        let singles: BTreeSet<VertexSet> = e.tree.family().sets().cloned().collect();
        let expected: Vec<VertexSet> = sorted_members(&all)
            .into_iter()
            .filter(|s| !singles.contains(s))
            .collect();
        let found = sorted_members(&nonsingle_from_cycles(&e.g, &e.tree).map_err(err(e.seed))?);
        check(found == expected, || {
            format!(
                "seed {}: nonsingle {found:?}, expected {expected:?}",
                e.seed
            )
        })?;
        nonsingle += found.len();
        for s in &singles {
            for x in s.iter() {
                check(e.g.neighbors(x).len() >= 3, || {
                    format!(
                        "seed {}: vertex {x} of single cutset {s} has degree < 3",
                        e.seed
                    )
                })?;
            }
        }
    }
    Ok(format!(
        "{} graphs, {nonsingle} non-single cutsets recovered from cycles",
        corpus().len()
    ))
}

fn criterion_5() -> Outcome {
    let opts = PlanarityOptions::default();
    let mut count = 0;
    for e in corpus().iter().filter(|e| e.g.num_vertices() <= 9) {
        let part_path = is_planar(&e.g, &opts).map_err(err(e.seed))?;
        let whole = base_planar(&e.g).map_err(err(e.seed))?;
        let oracle = oracle_planar(&e.g, &budget()).map_err(err(e.seed))?;
        check(part_path == whole && whole == oracle, || {
            format!(
                "seed {}: is_planar {part_path}, base_planar {whole}, oracle {oracle}",
                e.seed
            )
        })?;
        if !part_path {
            let v = check_planarity(&e.g, &opts).map_err(err(e.seed))?;
            let w = v
                .witness
                .ok_or_else(|| format!("seed {}: no witness", e.seed))?;
            w.verify(&e.g).map_err(err(e.seed))?;
        }
        count += 1;
    }
    let petersen = families::petersen();
    let v = check_planarity(&petersen, &opts).map_err(err(0))?;
    let w = v.witness.ok_or("Petersen has no witness")?;
    check(!v.planar && w.model.num_vertices() == 6, || {
        "Petersen witness is not K3,3".into()
    })?;
    w.verify(&petersen).map_err(err(0))?;
    check(
        is_planar(&families::two_k4(), &opts).map_err(err(0))?,
        || "two-K4 reported non-planar".into(),
    )?;
    Ok(format!(
        "{count} graphs with n <= 9, Petersen K3,3 witness verified, two-K4 planar"
    ))
}

fn criterion_6() -> Outcome {
    let opts = ColoringOptions::default();
    let mut certs = 0;
    for e in corpus() {
        let chi = oracle_chromatic(&e.g, &budget()).map_err(err(e.seed))?;
        let aug = e.tree.augmented(&e.g);
        let chi_aug = oracle_chromatic(&aug, &budget()).map_err(err(e.seed))?;
        let mut max_part = 0;
        for p in e.tree.parts() {
            let sub = aug.induced(p.members()).map_err(err(e.seed))?;
            max_part = max_part.max(oracle_chromatic(&sub, &budget()).map_err(err(e.seed))?);
        }
        check(chi_aug == max_part, || {
            format!(
                "seed {}: chi(G') = {chi_aug}, max over parts = {max_part}",
                e.seed
            )
        })?;
        let all_cycles = e.tree.parts().iter().all(|p| p.is_cycle());
        for s in Strategy::ALL {
            let c = coloring::color(&e.g, &e.tree, s, &opts).map_err(err(e.seed))?;
            c.verify(&e.g)
                .map_err(|x| format!("seed {}: {s}: {x}", e.seed))?;
            check(chi <= c.bound, || {
                format!("seed {}: {s}: chi {chi} exceeds bound {}", e.seed, c.bound)
            })?;
            if s == Strategy::Augmented {
                check(c.colors_used() == chi_aug, || {
                    format!(
                        "seed {}: augmented used {}, chi(G') = {chi_aug}",
                        e.seed,
                        c.colors_used()
                    )
                })?;
            }
            if s != Strategy::List {
                check(c.colors_used() <= c.bound, || {
                    format!("seed {}: {s} over bound", e.seed)
                })?;
            }
            if all_cycles && matches!(s, Strategy::Augmented | Strategy::BlocksPlusOne) {
                check(c.colors_used() <= 3, || {
                    format!(
                        "seed {}: {s} used {} colors on an all-cycle graph",
                        e.seed,
                        c.colors_used()
                    )
                })?;
            }
            certs += 1;
        }
    }
    let fixed = [
        ("theta", families::theta(), 2),
        ("two-K4", families::two_k4(), 4),
        ("C5", families::cycle(5), 3),
    ];
    for (name, g, want) in fixed {
        let ours = coloring::chromatic_number(&g).map_err(err(0))?;
        let oracle = oracle_chromatic(&g, &budget()).map_err(err(0))?;
        check(ours == want && oracle == want, || {
            format!("chi({name}): solver {ours}, oracle {oracle}, expected {want}")
        })?;
    }
    Ok(format!(
        "{certs} certificates verified; chi(theta)=2, chi(two-K4)=4, chi(C5)=3"
    ))
}

fn criterion_7() -> Outcome {
    let opts = ColoringOptions::default();
    let small: Vec<&Entry> = corpus()
        .iter()
        .filter(|e| e.g.num_vertices() <= 8)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let e = small[trial * 7 % small.len()];
        let size = coloring::guaranteed_list_size(&e.g, &e.tree, &opts).map_err(err(e.seed))?;
        let palette = size + 1 + trial % 4;
        let lists: BTreeMap<_, BTreeSet<u32>> =
            e.g.vertices()
                .map(|v| {
                    (
                        v,
                        sample(&mut rng, palette, size)
                            .into_iter()
                            .map(|c| c as u32)
                            .collect(),
                    )
                })
                .collect();
        let lists = ListAssignment::new(lists).map_err(err(e.seed))?;
        let c = coloring::list_color(&e.g, &e.tree, &lists, &opts)
            .map_err(|x| format!("trial {trial}, seed {}: construction failed: {x}", e.seed))?;
        c.verify(&e.g).map_err(|x| format!("trial {trial}: {x}"))?;
        c.verify_lists(&e.g, &lists)
            .map_err(|x| format!("trial {trial}: {x}"))?;
    }
    Ok("200 trials, zero construction failures".into())
}

/// Deletion-critical by bitmask: biconnected, and no vertex deletion keeps
/// it biconnected.
fn critical_mask(sg: &SmallGraph) -> bool {
    sg.is_biconnected(sg.all()) && (0..sg.n()).all(|v| !sg.is_biconnected(sg.all() & !(1 << v)))
}

fn chain_vertices(spec: &ChainSpec) -> usize {
    4 + 2
        + spec
            .middle
            .iter()
            .map(|k| if *k == MiddleKind::Triangle { 1 } else { 2 })
            .sum::<usize>()
}

fn all_middles(max_len: usize) -> Vec<Vec<MiddleKind>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for m in &frontier {
            for k in MiddleKind::ALL {
                let mut m2: Vec<MiddleKind> = m.clone();
                m2.push(k);
                next.push(m2);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// A chain read from either end describes the same graph.
fn unoriented(middle: &[MiddleKind]) -> Vec<&'static str> {
    let forward: Vec<&str> = middle.iter().map(|k| k.name()).collect();
    let backward: Vec<&str> = forward.iter().rev().copied().collect();
    forward.min(backward)
}

fn criterion_8() -> Outcome {
    let no_check = CriticalOptions {
        deletion_check: false,
    };
    let mut critical_count = 0;
    for e in corpus() {
        let ours = is_critical(&e.g, &e.tree, &no_check).map_err(err(e.seed))?;
        let oracle = oracle_critical(&e.g, &budget()).map_err(err(e.seed))?;
        check(ours.critical == oracle, || {
            format!(
                "seed {}: structural {}, oracle {oracle}",
                e.seed, ours.critical
            )
        })?;
        if ours.critical {
            check(ours.degree2.len() >= 4, || {
                format!(
                    "seed {}: critical with {} degree-2 vertices",
                    e.seed,
                    ours.degree2.len()
                )
            })?;
            critical_count += 1;
        }
    }

    // Every critical biconnected graph on 4..=9 vertices with exactly four
    // degree-2 vertices, up to isomorphism. Graphs on 9 vertices come from
    // extending connected 8-vertex graphs, since deleting a vertex from a
    // biconnected graph leaves it connected.
    let mut found: BTreeMap<(usize, u64), SmallGraph> = BTreeMap::new();
    fn keep(sg: SmallGraph, found: &mut BTreeMap<(usize, u64), SmallGraph>) {
        if (0..sg.n()).filter(|&v| sg.degree(v) == 2).count() == 4 && critical_mask(&sg) {
            let (n, code, _) = canonical(&sg);
            found.entry((n, code)).or_insert(sg);
        }
    }
    for n in 4..=8 {
        for sg in connected_graphs(n) {
            if n == 8 {
                for nbrs in 1..=sg.all() {
                    if nbrs.count_ones() >= 2 {
                        keep(sg.extended(nbrs), &mut found);
                    }
                }
            }
            keep(sg, &mut found);
        }
    }
    // Every enumerated graph is classified. A chain spec fixes the part
    // kinds but not how consecutive triangles share vertices, so several
    // graphs can share one spec; the checks below compare specs, and that
    // each generated representative occurs in the enumeration.
    let mut described: BTreeSet<Vec<&str>> = BTreeSet::new();
    for (key, sg) in &found {
        let g = sg.to_graph();
        let t = bt_tree(&g).map_err(err(0))?;
        let c = classify_exactly_four(&g, &t).map_err(err(0))?;
        let desc = c
            .description
            .ok_or_else(|| format!("{g:?}: {:?}", c.diagnostics))?;
        match desc.spec() {
            None => {
                check(
                    matches!(desc, ChainDescription::FourCycle(_)) && key.0 == 4,
                    || format!("{g:?}: no spec but not the four-cycle"),
                )?;
                described.insert(vec!["four-cycle"]);
            }
            Some(spec) => {
                check(
                    spec.terminals == (4, 4) && chain_vertices(&spec) == key.0,
                    || format!("{g:?}: spec {spec:?} does not fit the graph"),
                )?;
                described.insert(unoriented(&spec.middle));
            }
        }
    }
    let mut expected: BTreeSet<Vec<&str>> = BTreeSet::from([vec!["four-cycle"]]);
    let mut specs = 0;
    for middle in all_middles(3) {
        let spec = ChainSpec {
            middle,
            terminals: (4, 4),
        };
        if chain_vertices(&spec) > 9 {
            continue;
        }
        let g = generate_critical_chain(&spec).map_err(err(0))?;
        let (n, code, _) = canonical(&SmallGraph::from_graph(&g).map_err(err(0))?);
        check(found.contains_key(&(n, code)), || {
            format!("{spec:?} is missing from the enumeration")
        })?;
        expected.insert(unoriented(&spec.middle));
        specs += 1;
    }
    check(expected == described, || {
        format!("classified specs {described:?}, generated specs {expected:?}")
    })?;

    // Round trips, including longer chains than the enumeration reaches.
    let mut round_trips = 0;
    for middle in all_middles(3) {
        let spec = ChainSpec {
            middle,
            terminals: (4, 4),
        };
        let g = generate_critical_chain(&spec).map_err(err(0))?;
        let t = bt_tree(&g).map_err(err(0))?;
        let r = is_critical(
            &g,
            &t,
            &CriticalOptions {
                deletion_check: true,
            },
        )
        .map_err(err(0))?;
        check(r.critical, || format!("{spec:?} is not critical"))?;
        let back = r.chain.and_then(|c| c.spec());
        check(back.as_ref() == Some(&spec), || {
            format!("{spec:?} came back as {back:?}")
        })?;
        round_trips += 1;
    }
    check(round_trips >= 20, || {
        format!("only {round_trips} round trips")
    })?;
    Ok(format!(
        "{critical_count} critical corpus graphs agree with the oracle; {} exactly-four graphs on n <= 9 all classified, covering {specs} chain specs; {round_trips} round trips",
        found.len()
    ))
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn criterion_9() -> Outcome {
    let theta = data("theta.txt");
    let two_k4 = data("two_k4.txt");
    let petersen = data("petersen.dimacs");
    let path = data("path5.txt");
    let (c4, lists, malformed) = (
        data("c4.txt"),
        data("theta_lists.txt"),
        data("malformed.txt"),
    );
    let cert_dir = std::env::temp_dir().join(format!("partree-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&cert_dir).map_err(|e| e.to_string())?;
    let cert = cert_dir.join("color.json");
    let color_out = Command::new(env!("CARGO_BIN_EXE_partree"))
        .args(["color", "--strategy", "parts+1", &theta])
        .output()
        .map_err(|e| e.to_string())?;
    std::fs::write(&cert, &color_out.stdout).map_err(|e| e.to_string())?;
    let cert = cert.to_string_lossy().into_owned();

    let runs: Vec<Vec<&str>> = vec![
        vec!["cutsets", &theta],
        vec!["cutsets", "--k", "1", &path],
        vec!["tree", &two_k4],
        vec!["tree", "--dot", &theta],
        vec!["tree", "--k1", "--dot", &path],
        vec!["color", "--strategy", "augmented", &two_k4],
        vec!["color", "--strategy", "parts+1", &theta],
        vec!["color", "--strategy", "blocks+1", &petersen],
        vec!["color", "--strategy", "list", "--lists", &lists, &theta],
        vec!["planar", &petersen],
        vec!["planar", &two_k4],
        vec!["critical", &c4],
        vec!["critical", "--deletion-check", &theta],
        vec!["generate", "--middle", "triangle,cycle4,block4"],
        vec!["verify", &theta, "--certificate", &cert],
        vec!["oracle", "parts", &theta],
        vec!["--text", "cutsets", &theta],
        vec!["cutsets", &malformed],
    ];
    for args in &runs {
        let mut outputs = Vec::new();
        for _ in 0..3 {
            let out = Command::new(env!("CARGO_BIN_EXE_partree"))
                .args(args)
                .env("NO_COLOR", "1")
                .output()
                .map_err(|e| e.to_string())?;
            outputs.push((out.status.code(), out.stdout, out.stderr));
        }
        check(outputs.windows(2).all(|w| w[0] == w[1]), || {
            format!("{args:?} is not deterministic")
        })?;
    }
    let _ = std::fs::remove_dir_all(&cert_dir);
    Ok(format!(
        "{} command lines, 3 runs each, byte-identical",
        runs.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("tree invariants", criterion_1),
        ("parts match the definition oracle", criterion_2),
        ("classification dichotomy", criterion_3),
        ("2-cutset laws", criterion_4),
        ("planarity", criterion_5),
        ("coloring bounds", criterion_6),
        ("list coloring", criterion_7),
        ("critical graphs", criterion_8),
        ("CLI determinism", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL  {name}: {why} [{secs:.2}s]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
