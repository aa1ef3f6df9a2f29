// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Runs as a plain binary (`harness = false`) so the lines always show.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use cycle_ramsey::bounds::{coefficient_for, int, lemma_dwa_host_size, ratio, theorem_coefficient, xi, HoleParams, Rational, TargetTriple};
use cycle_ramsey::constructions::{
    build_eeo_four_part, build_eeo_three_part, build_four_cliques, build_odd_triple, build_oee_four_part, verify_claims, ConstructionReport,
};
use cycle_ramsey::cycles::{erdos_gallai_cycle, longest_cycle, DEFAULT_BUDGET};
use cycle_ramsey::graph::Graph;
use cycle_ramsey::matching::{bipartite_split, closed_walk_through_matching, maximum_matching, tutte_partition, MatchingCertificate};
use cycle_ramsey::search::{arrow_exhaustive, lemma_harness, ArrowInstance, Arrows, ExhaustiveConfig, HarnessOptions, LemmaParams, Target};
use cycle_ramsey::{cli, EdgeColoring, Parity};
use rand::seq::SliceRandom;
use rand::Rng;

// Pinned limits.
const CONSTRUCTION_TIME: Duration = Duration::from_secs(60);
const SMALL_RAMSEY_TIME: Duration = Duration::from_secs(300);
const HARNESS_TIME: Duration = Duration::from_secs(900);
const HARNESS_SAMPLES: usize = 200;
const ORACLE_GRAPHS: usize = 500;
const PARTITION_GRAPHS: usize = 1000;
const LONG_CYCLE_PAIRS: usize = 300;
const SPLIT_GRAPHS: usize = 300;
const WALKS: usize = 300;
const RATIONAL_TRIPLES: usize = 10_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn listed(items: &[String]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!("; {}", items.join("; "))
    }
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("construction claims on the parameter grid", constructions),
        ("small Ramsey numbers R(C3,C3) = R(C4,C4) = 6", small_ramsey),
        ("matching and longest-cycle oracles", oracles),
        ("barrier partition suite", partition_suite),
        ("long cycles above the edge threshold", long_cycle_suite),
        ("bipartite split suite", split_suite),
        ("lemma harness", harness),
        ("closed walks through matchings", walk_suite),
        ("formula calculator", formulas),
        ("determinism across runs and worker counts", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2}. {name}: {} ({:.1}s)", i + 1, o.detail, start.elapsed().as_secs_f64());
        if !o.pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn constructions() -> Outcome {
    let start = Instant::now();
    let odd = [3, 5, 7, 9];
    let even = [4, 6, 8];
    let mut cases: Vec<(ConstructionReport, usize)> = Vec::new();
    for &m in &odd {
        cases.push((build_four_cliques(m).unwrap(), 4 * m - 4));
        cases.push((build_odd_triple(m).unwrap(), 4 * m - 4));
    }
    for &m1 in &even {
        for &m2 in even.iter().filter(|&&m2| m2 <= m1) {
            cases.push((build_eeo_four_part(m1, m2).unwrap(), 2 * m1 + m2 - 4));
        }
        for &m2 in &even {
            for &m3 in &odd {
                cases.push((build_eeo_three_part(m1, m2, m3).unwrap(), m1 / 2 + m2 / 2 + m3 - 3));
            }
        }
        for &m2 in &odd {
            cases.push((build_oee_four_part(m1, m2).unwrap(), m1 + 2 * m2 - 4));
        }
    }
    let total = cases.len();
    let mut bad = Vec::new();
    for (report, size) in cases {
        let label = format!("{:?}{:?}", report.construction, report.parameters);
        if report.vertex_count() != size {
            bad.push(format!("{label}: {} vertices, expected {size}", report.vertex_count()));
        }
        let checked = verify_claims(report, DEFAULT_BUDGET);
        if !checked.all_hold() {
            bad.push(format!("{label}: {:?}", checked.verdicts));
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < CONSTRUCTION_TIME;
    outcome(pass, format!("{}/{total} colorings verified, limit {}s{}", total - bad.len(), CONSTRUCTION_TIME.as_secs(), listed(&bad)))
}

// Independent check that no color class of `w` contains its target cycle.
fn avoids_cycles(w: &EdgeColoring, lengths: &[usize]) -> bool {
    let n = w.vertex_count();
    let full = (0..n).all(|v| (0..v).all(|u| w.color(u, v).is_some()));
    full && lengths.iter().enumerate().all(|(i, &l)| !brute_cycle_lengths(&w.color_class(i as u8 + 1)).contains(&l))
}

fn small_ramsey() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut pass = true;
    for l in [3, 4] {
        let targets = vec![Target::Cycle { length: l }, Target::Cycle { length: l }];
        for (name, cfg) in [("pruned", ExhaustiveConfig::default()), ("unpruned", ExhaustiveConfig::unpruned())] {
            let five = arrow_exhaustive(&ArrowInstance::complete(5, targets.clone()).unwrap(), &cfg).unwrap();
            let six = arrow_exhaustive(&ArrowInstance::complete(6, targets.clone()).unwrap(), &cfg).unwrap();
            let witness_ok = five.witness.as_ref().is_some_and(|w| avoids_cycles(w, &[l, l]));
            let ok = five.arrows == Arrows::False && witness_ok && six.arrows == Arrows::True;
            pass &= ok;
            notes.push(format!("C{l} {name}: N=5 {:?}, N=6 {:?}", five.arrows, six.arrows));
        }
    }
    pass &= start.elapsed() < SMALL_RAMSEY_TIME;
    outcome(pass, notes.join(", "))
}

fn oracles() -> Outcome {
    let mut rng = rng(0x0AC1E);
    let mut matching_bad = 0;
    for _ in 0..ORACLE_GRAPHS {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.05..0.9);
        let g = random_graph(&mut rng, n, p);
        let m = maximum_matching(&g);
        if !m.verify(&g) || m.len() != brute_matching(&g) {
            matching_bad += 1;
        }
    }
    let mut cycle_bad = 0;
    for _ in 0..ORACLE_GRAPHS {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.05..0.9);
        let g = random_graph(&mut rng, n, p);
        let found = longest_cycle(&g, None, DEFAULT_BUDGET).unwrap();
        let len = found.as_ref().map_or(0, |c| c.len());
        if found.is_some_and(|c| !is_cycle(&g, &c.vertices)) || len != brute_longest_cycle(&g) {
            cycle_bad += 1;
        }
    }
    outcome(
        matching_bad + cycle_bad == 0,
        format!("{matching_bad}/{ORACLE_GRAPHS} matching mismatches, {cycle_bad}/{ORACLE_GRAPHS} longest-cycle mismatches"),
    )
}

// Sparse random graphs, and graphs with a planted barrier: a few hubs
// joined to many small odd cliques.
fn partition_graph(rng: &mut rand_chacha::ChaCha8Rng) -> Graph {
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(2..=50);
        let p = rng.gen_range(0.01..0.15);
        return random_graph(rng, n, p);
    }
    let hubs = rng.gen_range(1..=5);
    let mut sizes = Vec::new();
    let mut n = hubs;
    while n < 40 && (sizes.len() < 2 || rng.gen_bool(0.85)) {
        let s = [1, 1, 3, 3, 5, 7, 9][rng.gen_range(0..7)];
        sizes.push(s);
        n += s;
    }
    let mut g = Graph::empty(n).unwrap();
    let mut at = hubs;
    for s in sizes {
        for v in at..at + s {
            for u in at..v {
                g.add_edge(u, v).unwrap();
            }
            for h in 0..hubs {
                if rng.gen_bool(0.3) {
                    g.add_edge(h, v).unwrap();
                }
            }
        }
        at += s;
    }
    g
}

fn partition_violations(g: &Graph, s: &BTreeSet<usize>, t: &BTreeSet<usize>, u: &BTreeSet<usize>, n_target: usize) -> Vec<String> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let all: BTreeSet<usize> = s.iter().chain(t).chain(u).copied().collect();
    if all.len() != n || s.len() + t.len() + u.len() != n {
        out.push("not a partition".to_string());
    }
    // Square roots compared exactly: d <= sqrt(n) - 1 iff (d + 1)^2 <= n.
    for &a in t {
        if u.iter().any(|&b| g.has_edge(a, b)) {
            out.push(format!("T-U edge at {a}"));
        }
        let d = t.iter().filter(|&&b| g.has_edge(a, b)).count();
        if (d + 1) * (d + 1) > n {
            out.push(format!("degree {d} in T at {a}"));
        }
    }
    let lhs = u.len() + 2 * s.len();
    if lhs >= n_target && (lhs - n_target) * (lhs - n_target) >= n {
        out.push(format!("|U| + 2|S| = {lhs}"));
    }
    out
}

fn partition_suite() -> Outcome {
    let mut rng = rng(0x7077E);
    let (mut done, mut bad, mut nonempty_t) = (0, Vec::new(), 0);
    while done < PARTITION_GRAPHS {
        let g = partition_graph(&mut rng);
        let n = g.vertex_count();
        let sat = 2 * brute_or_blossom_matching(&g);
        if sat >= n {
            continue;
        }
        let n_target = rng.gen_range(sat + 1..=n);
        done += 1;
        match tutte_partition(&g, n_target) {
            Ok(p) => {
                let set = |x: cycle_ramsey::VertexSet| x.iter().collect::<BTreeSet<_>>();
                let (s, t, u) = (set(p.s), set(p.t), set(p.u));
                nonempty_t += usize::from(!t.is_empty());
                let v = partition_violations(&g, &s, &t, &u, n_target);
                if !v.is_empty() {
                    bad.push(v.join(", "));
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} violations in {done} graphs ({nonempty_t} with T non-empty){}", bad.len(), listed(&bad[..bad.len().min(1)])),
    )
}

// Matching number: exhaustive on small graphs, otherwise the library's
// certificate (which is still checked to be a matching).
fn brute_or_blossom_matching(g: &Graph) -> usize {
    if g.vertex_count() <= 12 {
        return brute_matching(g);
    }
    let m = maximum_matching(g);
    assert!(m.verify(g));
    m.len()
}

fn long_cycle_suite() -> Outcome {
    let mut rng = rng(0xE6);
    let (mut done, mut bad) = (0, 0);
    while done < LONG_CYCLE_PAIRS {
        let n = rng.gen_range(3..=30);
        let m: usize = rng.gen_range(3..=n);
        let need = ((m - 1) * (n - 1) + 2).div_ceil(2);
        let max = n * (n - 1) / 2;
        if need > max {
            continue;
        }
        let count = rng.gen_range(need..=max.min(need + n));
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        pairs.shuffle(&mut rng);
        let g = Graph::from_edges(n, &pairs[..count]).unwrap();
        done += 1;
        match erdos_gallai_cycle(&g, m, DEFAULT_BUDGET) {
            Ok(c) if is_cycle(&g, &c.vertices) && c.len() >= m => {}
            _ => bad += 1,
        }
    }
    outcome(bad == 0, format!("{bad} violations in {done} pairs"))
}

fn split_suite() -> Outcome {
    let mut rng = rng(0x5011);
    let mut bad = Vec::new();
    let mut with_rest = 0;
    for _ in 0..SPLIT_GRAPHS {
        let mut sizes = Vec::new();
        let mut n = 0;
        while n < 35 && (sizes.is_empty() || rng.gen_bool(0.8)) {
            let s = rng.gen_range(1..=9);
            sizes.push(s);
            n += s;
        }
        let mut g = Graph::empty(n).unwrap();
        let mut at = 0;
        let p = rng.gen_range(0.2..0.9);
        for &s in &sizes {
            for v in at..at + s {
                for u in at..v {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            at += s;
        }
        let adj = adjacency(&g);
        let comps = components(&adj, &vec![true; n]);
        let mut expect_prime = BTreeSet::new();
        let mut largest = 0;
        for c in &comps {
            if is_bipartite(&adj, c) {
                expect_prime.extend(c.iter().copied());
            } else {
                let keep: cycle_ramsey::VertexSet = c.iter().copied().collect();
                largest = largest.max(2 * brute_matching(&g.induced(&keep)));
            }
        }
        // alpha * n just above the largest saturation, as a random fraction.
        let n_scale: usize = rng.gen_range(5..=50);
        let alpha_n = largest + rng.gen_range(1..=3);
        let alpha = ratio(alpha_n as i64, n_scale as i64);
        let split = match bipartite_split(&g, &alpha, n_scale) {
            Ok(s) => s,
            Err(e) => {
                bad.push(e.to_string());
                continue;
            }
        };
        let vp: BTreeSet<usize> = split.vprime.iter().collect();
        let vpp: BTreeSet<usize> = split.vdoubleprime.iter().collect();
        with_rest += usize::from(!vpp.is_empty());
        let mut why = Vec::new();
        if vp != expect_prime || vp.len() + vpp.len() != n || !vp.is_disjoint(&vpp) {
            why.push("parts are not the bipartite components and the rest");
        }
        if vp.iter().any(|&a| vpp.iter().any(|&b| g.has_edge(a, b))) {
            why.push("edge across the split");
        }
        if !is_bipartite(&adj, &vp.iter().copied().collect::<Vec<_>>()) {
            why.push("V' not bipartite");
        }
        let inner = vpp.iter().map(|&a| vpp.iter().filter(|&&b| b > a && g.has_edge(a, b)).count()).sum::<usize>();
        // |E(V'')| <= 0.5 * alpha * n * |V''|, in integers.
        if 2 * inner * n_scale > alpha_n * vpp.len() * n_scale {
            why.push("too many edges in V''");
        }
        if !why.is_empty() {
            bad.push(why.join(", "));
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} violations in {SPLIT_GRAPHS} graphs ({with_rest} with V'' non-empty){}", bad.len(), listed(&bad[..bad.len().min(1)])),
    )
}

fn harness() -> Outcome {
    let start = Instant::now();
    let r = |p: i64, q: i64| ratio(p, q);
    let hole = |nu: Rational| HoleParams { alpha: int(1), beta: int(1), nu, epsilon: r(9, 1000) };
    let runs = vec![
        LemmaParams::L2 { v1: 40, v2: 40, epsilon: r(5, 1000) },
        LemmaParams::Double { n: 60, nu1: r(1, 4), nu2: r(2, 5), epsilon: r(5, 1000) },
        LemmaParams::Double { n: 60, nu1: r(1, 4), nu2: r(3, 4), epsilon: r(5, 1000) },
        LemmaParams::Dwa { hole: hole(int(0)), n: 40 },
        LemmaParams::Dwa { hole: hole(r(1, 2)), n: 40 },
        LemmaParams::Dwa { hole: hole(int(1)), n: 40 },
        LemmaParams::Trzy { hole: hole(int(0)), n: 40 },
        LemmaParams::Trzy { hole: hole(r(1, 2)), n: 40 },
        LemmaParams::Trzy { hole: hole(int(1)), n: 40 },
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (i, p) in runs.iter().enumerate() {
        let rep = lemma_harness(p, HARNESS_SAMPLES, 1000 + i as u64, &HarnessOptions::default()).unwrap();
        let both = rep.uniform_samples > 0 && rep.adversarial_samples > 0;
        pass &= rep.genuine_failures() == 0 && both && rep.samples >= HARNESS_SAMPLES;
        for f in &rep.failures {
            println!("       {} failure: {}", rep.lemma, serde_json::to_string(f).unwrap());
        }
        let nu = rep.params.get("nu").or(rep.params.get("nu2")).map(|v| format!(" nu={v}")).unwrap_or_default();
        parts.push(format!("{}{nu} N={} {}/{} margin {}", rep.lemma, rep.host_size, rep.passed, rep.samples, rep.min_margin));
    }
    pass &= start.elapsed() < HARNESS_TIME;
    outcome(pass, parts.join("; "))
}

fn walk_suite() -> Outcome {
    let mut rng = rng(0xA11);
    let (mut bad, mut odd) = (Vec::new(), 0);
    for _ in 0..WALKS {
        let k = rng.gen_range(2..=25);
        let extra = rng.gen_range(0..=10);
        let n = k + extra;
        let mut labels: Vec<usize> = (0..n).collect();
        labels.shuffle(&mut rng);
        let mut g = Graph::empty(n).unwrap();
        for i in 1..k {
            let j = rng.gen_range(0..i);
            g.add_edge(labels[i], labels[j]).unwrap();
        }
        let p = rng.gen_range(0.0..0.25);
        for i in 0..k {
            for j in 0..i {
                if rng.gen_bool(p) {
                    g.add_edge(labels[i], labels[j]).unwrap();
                }
            }
        }
        for i in k..n {
            for j in k..i {
                if rng.gen_bool(0.3) {
                    g.add_edge(labels[i], labels[j]).unwrap();
                }
            }
        }
        let comp: BTreeSet<usize> = labels[..k].iter().copied().collect();
        let adj = adjacency(&g);
        let mut edges: Vec<(usize, usize)> = edge_list(&g).into_iter().filter(|e| comp.contains(&e.0)).collect();
        edges.shuffle(&mut rng);
        let mut used = BTreeSet::new();
        let mut m = Vec::new();
        for (u, v) in edges {
            if !used.contains(&u) && !used.contains(&v) {
                used.insert(u);
                used.insert(v);
                m.push((u, v));
            }
        }
        m.truncate(rng.gen_range(1..=m.len()));
        let bip = is_bipartite(&adj, &comp.iter().copied().collect::<Vec<_>>());
        let parity = if !bip && rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even };
        odd += usize::from(parity == Parity::Odd);
        let walk = match closed_walk_through_matching(&g, &MatchingCertificate::new(m.clone()), parity) {
            Ok(w) => w.vertices,
            Err(e) => {
                bad.push(e.to_string());
                continue;
            }
        };
        let p = walk.len();
        let steps: Vec<(usize, usize)> = (0..p).map(|i| (walk[i], walk[(i + 1) % p])).collect();
        let parity_ok = p > 0 && (p % 2 == 1) == (parity == Parity::Odd);
        let inside = steps.iter().all(|&(a, b)| g.has_edge(a, b) && comp.contains(&a) && comp.contains(&b));
        let covers = m.iter().all(|&(u, v)| steps.iter().any(|&s| s == (u, v) || s == (v, u)));
        if !(parity_ok && inside && covers) {
            bad.push(format!("parity {parity_ok}, containment {inside}, coverage {covers}"));
        }
    }
    outcome(bad.is_empty(), format!("{} violations in {WALKS} walks ({odd} odd){}", bad.len(), listed(&bad[..bad.len().min(1)])))
}

// The coefficient formula evaluated directly from the parity pattern.
fn coefficient_oracle(a: &[Rational; 3], p: &[Parity; 3]) -> Rational {
    let h = ratio(1, 2);
    let max = |xs: &[Rational]| xs.iter().max().unwrap().clone();
    let evens: Vec<Rational> = (0..3).filter(|&i| p[i] == Parity::Even).map(|i| a[i].clone()).collect();
    let odds: Vec<Rational> = (0..3).filter(|&i| p[i] == Parity::Odd).map(|i| a[i].clone()).collect();
    match evens.len() {
        3 => &h * (&a[0] + &a[1] + &a[2]) + &h * max(a),
        2 => {
            let (e1, e2, o) = (&evens[0], &evens[1], &odds[0]);
            max(&[int(2) * e1 + e2, e1 + int(2) * e2, &h * e1 + &h * e2 + o])
        }
        1 => {
            let e = &evens[0];
            max(&[int(4) * e, e + int(2) * &odds[0], e + int(2) * &odds[1]])
        }
        _ => int(4) * max(a),
    }
}

fn formulas() -> Outcome {
    use Parity::{Even, Odd};
    let q = |p, d| ratio(p, d);
    let coef = |a: [i64; 3], p: [Parity; 3]| theorem_coefficient(&TargetTriple::new(a.map(int), p, 10).unwrap()).unwrap().0;
    let hole = |a: Rational, b: Rational, nu: Rational| HoleParams { alpha: a, beta: b, nu, epsilon: q(1, 10_000) };
    let examples = [
        ("coefficient ooo (1,1,1)", coef([1, 1, 1], [Odd, Odd, Odd]), int(4)),
        ("coefficient eeo (1,1,1)", coef([1, 1, 1], [Even, Even, Odd]), int(3)),
        ("coefficient eoo (1,2,2)", coef([1, 2, 2], [Even, Odd, Odd]), int(5)),
        ("xi(1,1,0)", xi(&int(1), &int(1), &int(0)), int(2)),
        ("xi(1,1,1)", xi(&int(1), &int(1), &int(1)), q(5, 2)),
        ("xi(2,1,0)", xi(&int(2), &int(1), &int(0)), int(4)),
        ("dwa(1,1,0)", int(lemma_dwa_host_size(&hole(int(1), int(1), int(0)), 100).unwrap() as i64), int(153)),
        ("dwa(1,1,1)", int(lemma_dwa_host_size(&hole(int(1), int(1), int(1)), 100).unwrap() as i64), int(203)),
        ("dwa(1,1/2,1)", int(lemma_dwa_host_size(&hole(int(1), q(1, 2), int(1)), 100).unwrap() as i64), int(178)),
    ];
    let mut bad: Vec<String> =
        examples.iter().filter(|(_, got, want)| got != want).map(|(n, got, want)| format!("{n}: {got} != {want}")).collect();

    let mut rng = rng(0xF0);
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut symmetry_bad = 0;
    for _ in 0..RATIONAL_TRIPLES {
        let a: [Rational; 3] = std::array::from_fn(|_| q(rng.gen_range(1..=60), rng.gen_range(1..=20)));
        let p: [Parity; 3] = std::array::from_fn(|_| if rng.gen_bool(0.5) { Even } else { Odd });
        let (c, _) = coefficient_for(&a, &p);
        let mut ok = c == coefficient_oracle(&a, &p) && c >= *a.iter().max().unwrap();
        // Relabelling the targets (alphas with their parities) never matters;
        // swapping alphas between two targets of equal parity does not either.
        for perm in perms {
            ok &= coefficient_for(&perm.map(|i| a[i].clone()), &perm.map(|i| p[i])).0 == c;
            ok &= coefficient_for(&perm.map(|i| a[i].clone()), &p).0 == c || perm.iter().enumerate().any(|(j, &i)| p[i] != p[j]);
        }
        let nu = q(rng.gen_range(0..=40), rng.gen_range(1..=20));
        let x = xi(&a[0], &a[1], &nu);
        let h = ratio(1, 2);
        let first = &h * &a[0] + &h * &a[1] + [&h * &a[0], &h * &a[1], nu.clone()].into_iter().max().unwrap();
        ok &= x >= first;
        symmetry_bad += usize::from(!ok);
    }
    let exact = examples.len() - bad.len();
    if symmetry_bad > 0 {
        bad.push(format!("{symmetry_bad} random triples break an invariant"));
    }
    outcome(
        bad.is_empty(),
        format!("{}/{} example values exact, {RATIONAL_TRIPLES} random triples checked{}", exact, examples.len(), listed(&bad)),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let ops: Vec<(&str, Vec<&str>)> = vec![
        (
            "randomized search",
            vec!["search", "--targets", "C3:1,C3:2", "--n", "5", "--mode", "randomized", "--chains", "6", "--steps", "3000"],
        ),
        (
            "randomized search, no witness",
            vec!["search", "--targets", "C3:1,C3:2", "--n", "6", "--mode", "randomized", "--chains", "6", "--steps", "500"],
        ),
        ("exhaustive search", vec!["search", "--targets", "C3:1,C4:2", "--n", "6"]),
        ("three-color search", vec!["search", "--targets", "C3:1,C3:2,C3:3", "--n", "6"]),
        ("Ramsey range", vec!["search", "--targets", "C4:1,C4:2", "--ramsey", "4..7"]),
        ("matching search", vec!["search", "--targets", "M4:1,MN4:2", "--n", "6", "--mode", "tau"]),
        ("lemma l2", vec!["lemma", "--lemma", "l2", "--v1", "16", "--v2", "14", "--epsilon", "0.005", "--samples", "24"]),
        (
            "lemma double",
            vec!["lemma", "--lemma", "double", "--n", "30", "--nu1", "0.25", "--nu2", "0.5", "--epsilon", "0.005", "--samples", "24"],
        ),
        (
            "lemma dwa",
            vec![
                "lemma",
                "--lemma",
                "dwa",
                "--alpha",
                "1",
                "--beta",
                "1",
                "--nu",
                "0.5",
                "--epsilon",
                "0.009",
                "--n",
                "20",
                "--samples",
                "24",
            ],
        ),
        (
            "lemma trzy",
            vec![
                "lemma",
                "--lemma",
                "trzy",
                "--alpha",
                "1",
                "--beta",
                "1",
                "--nu",
                "1",
                "--epsilon",
                "0.009",
                "--n",
                "16",
                "--samples",
                "24",
            ],
        ),
        (
            "lemma f1",
            vec!["lemma", "--lemma", "f1", "--alpha1", "1", "--alpha2", "1", "--epsilon", "0.009", "--n", "10", "--samples", "24"],
        ),
        ("construction", vec!["construct", "--eeo-three", "6,4,5"]),
    ];
    let mut differ = Vec::new();
    for (i, (name, args)) in ops.iter().enumerate() {
        let mut outputs = Vec::new();
        for (run, threads) in ["1", "1", "8", "8"].iter().enumerate() {
            let path = dir.path().join(format!("op{i}-{run}.json"));
            let mut argv =
                vec!["cycle-ramsey", "--format", "json", "--seed", "99", "--threads", threads, "--report", path.to_str().unwrap()];
            argv.extend(args.iter().copied());
            let code = cli::run(argv);
            outputs.push((code, std::fs::read(&path).unwrap_or_default()));
        }
        if outputs[0].0 == 1 || outputs[0].1.is_empty() || outputs.iter().any(|o| *o != outputs[0]) {
            differ.push(*name);
        }
    }
    outcome(differ.is_empty(), format!("{} operations x 4 runs (1, 1, 8, 8 workers); differing: {:?}", ops.len(), differ))
}
