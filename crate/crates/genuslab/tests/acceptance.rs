//! End-to-end acceptance suite: eight exact criteria, one pass/fail line
//! each (run with `--nocapture` to see the lines on success).

use genuslab::census::{self, ClaimStatus, FamilyTag};
use genuslab::classes::{self, GenusMode};
use genuslab::embedding::{genus_profile, EmbeddingScheme, GenusProfile, PlanarityCache};
use genuslab::formulas::{self, CompositionIndexing};
use genuslab::graph::{graph_count, graph_from_index, Graph};
use genuslab::DEFAULT_BUDGET;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check(name: &'static str, result: Result<String, String>) -> Outcome {
    match result {
        Ok(detail) => Outcome { name, pass: true, detail },
        Err(detail) => Outcome { name, pass: false, detail },
    }
}

fn nonor(p: &GenusProfile) -> usize {
    if p.min_orientable_h == 0 {
        0
    } else {
        p.min_nonorientable_h.expect("nonplanar graphs admit nonorientable schemes")
    }
}

#[test]
fn acceptance_criteria() {
    // Shared exhaustive profile of every graph on [5].
    let all5: Vec<(Graph, GenusProfile)> = (0..graph_count(5))
        .map(|i| {
            let g = graph_from_index(5, i);
            let p = genus_profile(&g, DEFAULT_BUDGET).expect("within budget");
            (g, p)
        })
        .collect();

    let outcomes = vec![
        check("1 K5 pinned-rotation scan", criterion_1()),
        check("2 max genus equals cycle rank on [5]", criterion_2(&all5)),
        check("3 minimum genus values and complete-graph evaluator", criterion_3(&all5)),
        check("4 census counts and inequality registry", criterion_4()),
        check("5 minimum extension counts", criterion_5()),
        check("6 formulas equal their oracles", criterion_6()),
        check("7 surgery and generator properties", criterion_7()),
        check("8 excess bounds genus; positive excess forces faces", criterion_8(&all5)),
    ];

    let mut failures = 0;
    for o in &outcomes {
        println!("criterion {}: {} — {}", o.name, if o.pass { "pass" } else { "FAIL" }, o.detail);
        if !o.pass {
            failures += 1;
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criterion(s) failed");
}

fn criterion_1() -> Result<String, String> {
    let report = classes::check_k5_chered();
    if report.examined != 1296 {
        return Err(format!("examined {} systems, expected 1296", report.examined));
    }
    if report.certifying != 0 {
        return Err(format!("{} certifying systems found, expected none", report.certifying));
    }
    let expected: [Vec<usize>; 4] =
        [vec![1, 5, 4, 3], vec![1, 2, 5, 4], vec![1, 3, 2, 5], vec![1, 4, 3, 2]];
    if report.forced.len() != 1 || report.forced[0] != expected {
        return Err(format!("forced systems {:?}, expected exactly the known table", report.forced));
    }
    if !report.forced_walk_lengths[0].contains(&4) {
        return Err(format!(
            "forced induced walk lengths {:?} lack a length-4 facial walk",
            report.forced_walk_lengths[0]
        ));
    }
    Ok("no certifying system among 1296; forced table has a length-4 facial walk".into())
}

fn criterion_2(all5: &[(Graph, GenusProfile)]) -> Result<String, String> {
    for (g, p) in all5 {
        if p.max_h != g.cycle_rank() {
            return Err(format!(
                "graph with edges {:?}: max genus {} != cycle rank {}",
                g.edges(),
                p.max_h,
                g.cycle_rank()
            ));
        }
    }
    Ok(format!("max Euler genus equals cycle rank on all {} graphs", all5.len()))
}

fn criterion_3(all5: &[(Graph, GenusProfile)]) -> Result<String, String> {
    let k5 = &all5[all5.len() - 1].1; // last index = all edges present = K5
    if k5.min_orientable_h != 2 || nonor(k5) != 1 {
        return Err(format!("K5 genus ({}, {}), expected (2, 1)", k5.min_orientable_h, nonor(k5)));
    }
    let p = genus_profile(&Graph::complete_bipartite(3, 3), DEFAULT_BUDGET)
        .map_err(|e| e.to_string())?;
    if p.min_orientable_h != 2 || nonor(&p) != 1 {
        return Err(format!("K3,3 genus ({}, {}), expected (2, 1)", p.min_orientable_h, nonor(&p)));
    }
    for n in 1..=5usize {
        let p = genus_profile(&Graph::complete(n), DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        if p.min_orientable_h != classes::g_star(n, true) || nonor(&p) != classes::g_star(n, false)
        {
            return Err(format!("K{n}: search disagrees with the complete-graph evaluator"));
        }
    }
    if classes::g_star(7, true) != 2 || classes::g_star(7, false) != 3 {
        return Err("K7 evaluator should give (2, 3)".into());
    }
    Ok("K5 and K3,3 at (2,1); evaluator matches search for n <= 5 and gives (2,3) at n=7".into())
}

fn criterion_4() -> Result<String, String> {
    let census = census::run_census(7, DEFAULT_BUDGET, None).map_err(|e| e.to_string())?;
    let c = census.counts(5, FamilyTag::AnySurface, 0).unwrap();
    if c[0] != 1023 || c[1] != 33 {
        return Err(format!("|E^0(5)| = {} labelled / {} unlabelled, expected 1023/33", c[0], c[1]));
    }
    for h in 2..=census::h_ceiling(5) {
        let full = census.counts(5, FamilyTag::Orientable, h).unwrap()[0];
        if full != 1024 {
            return Err(format!("|OE^{h}(5)| = {full}, expected 1024"));
        }
    }
    let report = census::verify_inequalities(&census, DEFAULT_BUDGET);
    for claim in &report.claims {
        match claim.status {
            ClaimStatus::Holds | ClaimStatus::Reported => {}
            _ => return Err(format!("claim {}: {:?} — {}", claim.claim, claim.status, claim.witness)),
        }
    }
    Ok(format!("counts match; all {} registry claims hold (n <= 7)", report.claims.len()))
}

fn criterion_5() -> Result<String, String> {
    for (n, want) in [(4usize, 15usize), (5, 21)] {
        let got = classes::minext(n, 0, GenusMode::Any, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("minext({n},0) = {got}, expected {want} = 6n-9"));
        }
    }
    let mut cache = PlanarityCache::new();
    let ext3 = classes::ext_count(&Graph::complete(3), 0, GenusMode::Any, DEFAULT_BUDGET, &mut cache)
        .map_err(|e| e.to_string())?;
    if ext3 != 8 {
        return Err(format!("ext(K3, sphere) = {ext3}, expected 8"));
    }
    Ok("minext(4,0)=15, minext(5,0)=21, ext(K3)=8".into())
}

fn criterion_6() -> Result<String, String> {
    let mut euler_diverges = false;
    for n in 1..=6usize {
        for h in 0..=5usize {
            if n + h == 0 || n + h - 1 > 5 {
                continue;
            }
            let oracle = formulas::unicellular_orientable_oracle(n, h).map_err(|e| e.to_string())?;
            let genus_idx = formulas::unicellular_orientable_rooted(n, h, CompositionIndexing::Genus)
                .map_err(|e| e.to_string())?;
            if genus_idx != oracle {
                return Err(format!("unicellular ({n},{h}): formula {genus_idx} != oracle {oracle}"));
            }
            let euler_idx = formulas::unicellular_orientable_rooted(n, h, CompositionIndexing::Euler)
                .map_err(|e| e.to_string())?;
            if euler_idx != oracle {
                euler_diverges = true;
            }
        }
    }
    if !euler_diverges {
        return Err("both indexings match the oracle everywhere; expected exactly one to".into());
    }
    // h = 0 column collapses to Catalan numbers.
    let catalan = [1u64, 1, 2, 5, 14, 42];
    for n in 1..=6usize {
        let v = formulas::unicellular_orientable_rooted(n, 0, CompositionIndexing::Genus)
            .map_err(|e| e.to_string())?;
        if v != BigRational::from_integer(BigInt::from(catalan[n - 1])) {
            return Err(format!("unicellular ({n},0) = {v}, expected Catalan {}", catalan[n - 1]));
        }
    }
    for (m, h, want) in [(3usize, 2usize, 0u64), (5, 2, 6)] {
        let v = formulas::precubic_nonorientable_rooted(m, h).map_err(|e| e.to_string())?;
        let o = formulas::precubic_nonorientable_oracle(m, h).map_err(|e| e.to_string())?;
        let w = BigRational::from_integer(BigInt::from(want));
        if v != w || o != w {
            return Err(format!("precubic ({m},{h}): formula {v}, oracle {o}, expected {want}"));
        }
    }
    for k in 3..=8usize {
        for j in 0..=k - 3 {
            let dp = formulas::dissection_count(k, j).map_err(|e| e.to_string())?;
            let brute = formulas::dissection_count_oracle(k, j).map_err(|e| e.to_string())?;
            if dp != brute {
                return Err(format!("dissection ({k},{j}): DP {dp} != brute force {brute}"));
            }
        }
    }
    Ok("genus-indexed unicellular formula matches its oracle (the other indexing does not); Catalan column, precubic values and dissection DP all verified".into())
}

fn random_connected_scheme(rng: &mut ChaCha8Rng) -> EmbeddingScheme {
    loop {
        let n = rng.gen_range(2..=6usize);
        let mask = rng.gen_range(0..graph_count(n));
        let g = graph_from_index(n, mask);
        if !g.is_connected() || g.e() == 0 {
            continue;
        }
        let rotations: Vec<Vec<usize>> = (1..=n)
            .map(|v| {
                let mut d = g.darts_at(v);
                d.shuffle(rng);
                d
            })
            .collect();
        let signature: Vec<i8> = (0..g.e()).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        return EmbeddingScheme::new(g, rotations, signature).expect("valid random scheme");
    }
}

fn criterion_7() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let scheme = random_connected_scheme(&mut rng);
        let (e0, f0, h0) = (scheme.graph().e(), scheme.faces(), scheme.euler_genus());
        let uni = scheme.chordify_to_unicellular().map_err(|e| format!("trial {trial}: {e}"))?;
        if uni.faces() != 1
            || uni.euler_genus() != h0
            || e0 - uni.graph().e() != f0 - 1
        {
            return Err(format!(
                "trial {trial}: chordify gave f={}, h={} (was f={f0}, h={h0}), removed {} edges",
                uni.faces(),
                uni.euler_genus(),
                e0 - uni.graph().e()
            ));
        }
        let pre = uni.split_to_precubic().map_err(|e| format!("trial {trial}: {e}"))?;
        let g = pre.graph();
        if g.degrees().iter().any(|&d| d != 1 && d != 3) {
            return Err(format!("trial {trial}: split left a degree outside {{1,3}}"));
        }
        if pre.faces() != 1 || pre.euler_genus() != h0 {
            return Err(format!("trial {trial}: split broke unicellularity or genus"));
        }
        if g.e() >= 3 * (g.v() + h0) {
            return Err(format!("trial {trial}: split output violates e < 3(n+h)"));
        }
    }

    // The uniform subdivision generator.
    let order: Vec<usize> = (5..=16).collect();
    let z = classes::generate_zk(16, 4, &Graph::complete(4), &order).map_err(|e| e.to_string())?;
    if z.excess() != 2 {
        return Err(format!("subdivision generator: excess {}, expected k/2 = 2", z.excess()));
    }
    if z.girth() < Some(9) {
        return Err(format!("subdivision generator: girth {:?} below 3s+3 = 9", z.girth()));
    }
    // Full hereditary cycle-rank exhaustion at n = 12 with the bound
    // g(m) = floor(2m/(2+3s)) implied by the subdivision depth s.
    let mut rng2 = ChaCha8Rng::seed_from_u64(7);
    let mut order12: Vec<usize> = (5..=12).collect();
    order12.shuffle(&mut rng2);
    let z12 = classes::generate_zk(12, 4, &Graph::complete(4), &order12).map_err(|e| e.to_string())?;
    let s = 2 * (12 - 4) / (3 * 4);
    for mask in 1u32..(1 << 12) {
        let w: Vec<usize> = (1..=12).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let sub = z12.induced_subgraph(&w).map_err(|e| e.to_string())?;
        let bound = 2 * w.len() / (2 + 3 * s);
        if sub.cycle_rank() > bound {
            return Err(format!(
                "subset {:?}: cycle rank {} exceeds g({}) = {bound}",
                w,
                sub.cycle_rank(),
                w.len()
            ));
        }
    }
    Ok("1000 random chordify/split runs exact; subdivision outputs have excess k/2, girth >= 3s+3, and pass full hereditary cycle-rank exhaustion at n = 12".into())
}

fn criterion_8(all5: &[(Graph, GenusProfile)]) -> Result<String, String> {
    for (g, p) in all5 {
        let xs = g.excess();
        if p.min_orientable_h > xs || nonor(p) > xs {
            return Err(format!(
                "graph with edges {:?}: genus ({}, {}) exceeds excess {xs}",
                g.edges(),
                p.min_orientable_h,
                nonor(p)
            ));
        }
        if xs >= 1 {
            let kappa = g.components().kappa;
            let merged = g.e() + kappa + 1 - g.v() - p.min_orientable_h;
            if merged < 3 {
                return Err(format!(
                    "graph with edges {:?}: best orientable embedding has only {merged} merged faces",
                    g.edges()
                ));
            }
        }
    }
    Ok("minimum genus (both modes) <= excess on all of [5]; excess >= 1 forces >= 3 faces".into())
}
