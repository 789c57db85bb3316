//! Acceptance runner: one PASS/FAIL line per criterion, each with its time
//! budget. Exits nonzero if any criterion fails.

mod common;

use std::cell::RefCell;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trifree::classes::chordal_chi3;
use trifree::gadgets::{
    complete, cycle, gen_clover, gen_cycle_clique, gen_mycielski, gen_polar_gadget, gen_polar_triangle, path,
    polar_gadget_edges, polar_vertex,
};
use trifree::random::{gnp, k_tree};
use trifree::reductions::{reduce_q_to_q1, solve_polar_small_degree, PolarInstance, WitnessTranslation};
use trifree::solvers::SearchOptions;
use trifree::solvers::{decide_tf_q, decide_tf_q_with, fpt_tf_q_coloring, oracle_chi, oracle_chi3, oracle_omega};
use trifree::{contains_k4, verify_triangle_free, Color, Coloring, Graph};

use common::{
    check_nae_to_k4free, check_nae_to_polar, check_sat_to_nae, planted_unsatisfiable, random_formula,
    small_formula_family,
};

type Outcome = Result<String, String>;

/// Name, time budget in seconds, and the check itself.
type Criterion<'a> = (&'static str, u64, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn is_tf(g: &Graph, colors: &[Color], k: Color, polar: Option<&[(usize, usize)]>) -> bool {
    verify_triangle_free(g, &Coloring::new(k, colors.to_vec()).unwrap(), polar).unwrap()
}

/// Every `k`-coloring of `n` vertices, as a mixed-radix counter.
fn all_colorings(n: usize, k: Color) -> impl Iterator<Item = Vec<Color>> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let x = (code % k as u64) as Color + 1;
                code /= k as u64;
                x
            })
            .collect()
    })
}

fn gadget_certification() -> Outcome {
    let gadget = gen_polar_gadget();
    let g = &gadget.graph;
    ensure(*g == Graph::new(12, polar_gadget_edges()).unwrap(), || {
        "gadget graph mismatch".into()
    })?;
    ensure((gadget.u, gadget.v) == (polar_vertex::U, polar_vertex::V), || {
        "pole mismatch".into()
    })?;
    let mut good = 0;
    for colors in all_colorings(12, 2) {
        if is_tf(g, &colors, 2, None) {
            good += 1;
            ensure(colors[gadget.u] != colors[gadget.v], || {
                format!("poles share a color in {colors:?}")
            })?;
        }
    }
    ensure(good > 0, || "no triangle-free 2-coloring".into())?;
    ensure(!contains_k4(g), || "gadget contains K4".into())?;
    Ok(format!(
        "{good} triangle-free 2-colorings of 4096, poles always differ, K4-free"
    ))
}

fn cycle_clique_rainbow() -> Outcome {
    let cc = gen_cycle_clique(2).unwrap();
    let mut good = 0;
    for colors in all_colorings(10, 2) {
        if is_tf(&cc.graph, &colors, 2, None) {
            good += 1;
            for joint in &cc.joints {
                ensure(colors[joint[0]] != colors[joint[1]], || {
                    format!("joint {joint:?} not rainbow in {colors:?}")
                })?;
            }
        }
    }
    ensure(good > 0, || "no triangle-free 2-coloring".into())?;
    Ok(format!(
        "{good} triangle-free 2-colorings of 1024, all rainbow on every joint"
    ))
}

fn clover_extremality() -> Outcome {
    let mut notes = Vec::new();
    for k in [2usize, 3] {
        let clover = gen_clover(k).map_err(|e| e.to_string())?;
        let g = &clover.graph;
        let q = k as Color;
        ensure(oracle_omega(g) == 2 * k, || format!("k={k}: omega is not {}", 2 * k))?;
        ensure(decide_tf_q(g, q, None).is_none(), || {
            format!("k={k}: found a {k}-coloring")
        })?;
        let w = decide_tf_q(g, q + 1, None).ok_or_else(|| format!("k={k}: no {}-coloring", k + 1))?;
        ensure(verify_triangle_free(g, &w, None).unwrap(), || {
            format!("k={k}: witness fails")
        })?;
        let r = clover.rainbow_witness();
        ensure(r.k() == q + 1 && verify_triangle_free(g, &r, None).unwrap(), || {
            format!("k={k}: constructed witness fails")
        })?;
        let mut center: Vec<Color> = clover.center.iter().map(|&v| r.color(v)).collect();
        center.sort_unstable();
        center.dedup();
        ensure(center.len() == k + 1, || format!("k={k}: center is not rainbow"))?;
        notes.push(format!("k={k}: n={}, omega={}, chi3={}", g.n(), 2 * k, k + 1));
    }
    Ok(notes.join("; "))
}

fn polar_triangle() -> Outcome {
    let g = gen_polar_triangle();
    ensure(g.n() == 33, || format!("{} vertices", g.n()))?;
    ensure(!contains_k4(&g), || "contains K4".into())?;
    ensure(oracle_omega(&g) == 3, || "omega is not 3".into())?;
    ensure(decide_tf_q(&g, 2, None).is_none(), || "found a 2-coloring".into())?;
    let w = decide_tf_q(&g, 3, None).ok_or("no 3-coloring")?;
    ensure(verify_triangle_free(&g, &w, None).unwrap(), || "witness fails".into())?;
    Ok("n=33, K4-free, omega=3, chi3=3".into())
}

fn sandwich_and_degree_bound(sample: &RefCell<Vec<(Graph, usize, Color)>>) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut degree_checks = 0;
    for _ in 0..600 {
        let n = rng.gen_range(1..=9);
        let g = gnp(n, rng.gen_range(0.1..0.95), &mut rng);
        let omega = oracle_omega(&g);
        let chi = oracle_chi(&g);
        let (chi3, w) = oracle_chi3(&g, None);
        ensure(verify_triangle_free(&g, &w, None).unwrap(), || {
            format!("oracle witness fails on {g:?}")
        })?;
        ensure((omega as Color).div_ceil(2) <= chi3 && chi3 <= chi.div_ceil(2), || {
            format!("omega={omega} chi3={chi3} chi={chi} on {g:?}")
        })?;
        // The degree bound rests on Brooks' theorem, which is about
        // connected graphs, so it is checked component by component.
        for comp in g.components() {
            let h = g.induced_subgraph(&comp);
            if h.n() <= 3 || (h.is_complete() && h.n() % 2 == 1) {
                continue;
            }
            let bound = (h.max_degree() as Color).div_ceil(2);
            let value = oracle_chi3(&h, None).0;
            ensure(value <= bound, || {
                format!("chi3={value} > ceil(delta/2)={bound} on {h:?}")
            })?;
            degree_checks += 1;
        }
        sample.borrow_mut().push((g, omega, chi3));
    }
    Ok(format!(
        "600 graphs, sandwich holds; degree bound holds on {degree_checks} qualifying components"
    ))
}

fn mycielski_witness() -> Outcome {
    let g = gen_mycielski(2);
    ensure(g.n() == 11, || format!("{} vertices", g.n()))?;
    let chi3 = oracle_chi3(&g, None).0;
    let chi = oracle_chi(&g);
    ensure(chi3 == 1 && chi == 4, || format!("chi3={chi3} chi={chi}"))?;
    Ok("Groetzsch graph: chi3=1, chi=4".into())
}

fn even_cliques_pair_colors() -> Outcome {
    let mut notes = Vec::new();
    for k in 1..=3usize {
        let g = complete(2 * k);
        let mut good = 0;
        for colors in all_colorings(2 * k, k as Color) {
            if is_tf(&g, &colors, k as Color, None) {
                good += 1;
                for x in 1..=k as Color {
                    let count = colors.iter().filter(|&&c| c == x).count();
                    ensure(count == 2, || format!("K{}: color {x} used {count} times", 2 * k))?;
                }
            }
        }
        ensure(good > 0, || format!("K{} has no triangle-free {k}-coloring", 2 * k))?;
        notes.push(format!("K{}: {good}", 2 * k));
    }
    Ok(format!("colorings checked per clique: {}", notes.join(", ")))
}

fn fpt_matches_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut feasible = 0;
    for _ in 0..220 {
        let n = rng.gen_range(1..=12);
        let g = gnp(n, rng.gen_range(0.1..0.9), &mut rng);
        let chi3 = oracle_chi3(&g, None).0;
        for q in 1..=3 {
            let found = fpt_tf_q_coloring(&g, q);
            ensure(found.is_some() == (chi3 <= q), || {
                format!("q={q}, chi3={chi3} on {g:?}")
            })?;
            if let Some(c) = found {
                ensure(c.colors().iter().all(|&x| (1..=q).contains(&x)), || {
                    "color out of range".into()
                })?;
                ensure(verify_triangle_free(&g, &c, None).unwrap(), || {
                    format!("witness fails on {g:?}")
                })?;
                feasible += 1;
            }
        }
    }
    Ok(format!("220 graphs x 3 palettes agree; {feasible} witnesses verified"))
}

fn chordal_pipeline() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..220 {
        let k = rng.gen_range(1..=3);
        let g = k_tree(k, rng.gen_range(k..=10), &mut rng);
        let (value, c) = chordal_chi3(&g).map_err(|e| e.to_string())?;
        let expected = oracle_chi3(&g, None).0;
        ensure(value == expected, || {
            format!("chordal {value} vs oracle {expected} on {g:?}")
        })?;
        ensure(verify_triangle_free(&g, &c, None).unwrap(), || "witness fails".into())?;
    }
    Ok("220 k-trees agree with the oracle".into())
}

fn reduction_equivalences() -> Outcome {
    let family = small_formula_family();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut sat = [0usize; 3];
    let mut total = [0usize; 3];
    for phi in &family {
        sat[0] += check_sat_to_nae(phi)? as usize;
    }
    total[0] += family.len();
    for i in 0..200 {
        // Random formulas with bounded occurrences are nearly always
        // satisfiable, so every fourth one is planted unsatisfiable.
        let phi = if i % 4 == 0 {
            let (chain, fresh, extra) = (rng.gen_range(3..=5), rng.gen_range(0..=3), rng.gen_range(0..=3));
            planted_unsatisfiable(&mut rng, chain, fresh, extra)
        } else {
            random_formula(&mut rng, 8, 10, Some(4))
        };
        sat[0] += check_sat_to_nae(&phi)? as usize;
        sat[1] += check_nae_to_k4free(&random_formula(&mut rng, 4, 3, None))? as usize;
        sat[2] += check_nae_to_polar(&random_formula(&mut rng, 4, 3, Some(4)))? as usize;
    }
    total[0] += 200;
    total[1] += 200;
    total[2] += 200;
    for j in 0..3 {
        ensure(0 < sat[j] && sat[j] < total[j], || {
            format!("sample {j} lacks satisfiable or unsatisfiable instances")
        })?;
    }
    Ok(format!(
        "sat4->nae4 {}/{} satisfiable; nae->k4free {}/{}; nae4->polar {}/{}",
        sat[0], total[0], sat[1], total[1], sat[2], total[2]
    ))
}

fn q_plus_one_on_triangle() -> Outcome {
    let r = reduce_q_to_q1(&complete(3), 2).map_err(|e| e.to_string())?;
    ensure(r.graph.n() == 43, || format!("{} vertices", r.graph.n()))?;
    let source = Coloring::new(2, vec![1, 1, 2]).unwrap();
    let lifted = r.lift(&source).map_err(|e| e.to_string())?;
    ensure(verify_triangle_free(&r.graph, &lifted, None).unwrap(), || {
        "lifted witness fails".into()
    })?;
    for seed in 0..24 {
        let options = SearchOptions {
            seed: Some(seed),
            jobs: 1,
        };
        let w = decide_tf_q_with(&r.graph, 3, None, &options).ok_or("no 3-coloring")?;
        let hub = w.color(r.map.hub);
        ensure(r.map.vertex.iter().all(|&v| w.color(v) != hub), || {
            format!("seed {seed}: a vertex shares the hub color")
        })?;
        r.pull(&w).map_err(|e| e.to_string())?;
    }
    Ok("n=43, constructive witness verifies, hub color avoided in 24 seeded solves".into())
}

fn small_degree_polar() -> Outcome {
    let mut instances = 0;
    for n in 1..=9usize {
        let mut shapes = vec![path(n)];
        if n >= 3 {
            shapes.push(cycle(n).unwrap());
        }
        for g in shapes {
            let edges: Vec<_> = g.edges().collect();
            for mask in 0u32..1 << edges.len() {
                let polar: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let instance = PolarInstance::new(g.clone(), polar).unwrap();
                let fast = solve_polar_small_degree(&instance).map_err(|e| e.to_string())?;
                let (k, _) = oracle_chi3(&g, Some(instance.polar()));
                ensure(fast.is_some() == (k <= 2), || {
                    format!("n={n} mask={mask:b}: fast and oracle disagree")
                })?;
                if let Some(c) = fast {
                    ensure(instance.verify(&c).unwrap(), || {
                        format!("n={n} mask={mask:b}: witness fails")
                    })?;
                }
                instances += 1;
            }
        }
    }
    Ok(format!("{instances} path and cycle instances agree"))
}

fn clique_bound_gap_monitor(sample: &RefCell<Vec<(Graph, usize, Color)>>) -> Outcome {
    let sample = sample.borrow();
    let above: Vec<_> = sample
        .iter()
        .filter(|(_, omega, chi3)| *chi3 > (*omega as Color).div_ceil(2) + 1)
        .collect();
    for (g, omega, chi3) in &above {
        eprintln!("!!! COUNTEREXAMPLE CANDIDATE: chi3={chi3} omega={omega} graph={g:?}");
    }
    let tight = sample
        .iter()
        .filter(|(_, omega, chi3)| *chi3 == (*omega as Color).div_ceil(2) + 1)
        .count();
    Ok(format!(
        "report only: {} of {} sampled graphs exceed ceil(omega/2)+1; {tight} meet it",
        above.len(),
        sample.len()
    ))
}

fn main() -> ExitCode {
    let sample = RefCell::new(Vec::new());
    let criteria: Vec<Criterion> = vec![
        ("polar gadget certification", 1, Box::new(gadget_certification)),
        ("2-cycle-clique joints are rainbow", 1, Box::new(cycle_clique_rainbow)),
        (
            "clover graphs need one color above the clique bound",
            60,
            Box::new(clover_extremality),
        ),
        ("triangle of polar gadgets", 60, Box::new(polar_triangle)),
        (
            "bound sandwich and degree bound",
            120,
            Box::new(|| sandwich_and_degree_bound(&sample)),
        ),
        ("Mycielski witness", 5, Box::new(mycielski_witness)),
        (
            "even cliques use every color twice",
            30,
            Box::new(even_cliques_pair_colors),
        ),
        (
            "vertex cover algorithm matches oracle",
            120,
            Box::new(fpt_matches_oracle),
        ),
        ("chordal pipeline", 60, Box::new(chordal_pipeline)),
        ("reduction equivalences", 300, Box::new(reduction_equivalences)),
        ("q to q+1 reduction on K3", 120, Box::new(q_plus_one_on_triangle)),
        ("polar decision at max degree 2", 60, Box::new(small_degree_polar)),
        (
            "clique-bound-plus-one monitor",
            u64::MAX,
            Box::new(|| clique_bound_gap_monitor(&sample)),
        ),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(*limit);
        let (status, detail) = match outcome {
            Ok(_) if elapsed > limit => ("FAIL", format!("took longer than {} s", limit.as_secs())),
            Ok(detail) => ("PASS", detail),
            Err(err) => ("FAIL", err),
        };
        if status == "FAIL" {
            failures += 1;
        }
        let budget = if limit.as_secs() == u64::MAX {
            String::new()
        } else {
            format!(" / {} s", limit.as_secs())
        };
        println!(
            "{status} {:>2} {name} [{:.3} s{budget}]: {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
