//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{algebra, fixture_path, fixture_text, run_cli, setup};
use tiltkit::algebra::{parse_presentation, AlgebraBasis, PathWord};
use tiltkit::arquiver::{import_abstract, Depth};
use tiltkit::cuts::{
    analyze_cut, certify_tilted, convexity_checks, enumerate_cuts, enumerate_cuts_brute_force, hom_tau_test,
    is_cut, is_sincere, is_slice_by_definition, quotient_by_cut, CertifyOptions, Verdict, DEFAULT_CUT_CAP,
};
use tiltkit::exactla::Span;
use tiltkit::modrep::{annihilator, is_isomorphic, translate, Direction};
use tiltkit::{ARQuiver, Matrix, ModuleMap, Rational};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn names_set(arq: &ARQuiver<Rational>, ids: &[usize]) -> BTreeSet<String> {
    arq.names(ids).into_iter().collect()
}

fn tau_name(arq: &ARQuiver<Rational>, x: &str) -> Option<String> {
    arq.tau[arq.find(x)?].map(|t| arq.vertices[t].name.clone())
}

fn c1() -> Outcome {
    let start = Instant::now();
    let (a, arq) = setup("cycle4_rad2");
    let elapsed = start.elapsed();
    ensure!(a.dim() == 8, "dim A = {}", a.dim());
    ensure!(arq.len() == 8, "{} vertices", arq.len());
    let names: BTreeSet<String> = arq.vertices.iter().map(|v| v.name.clone()).collect();
    let expected: BTreeSet<String> =
        ["P_a", "P_b", "P_c", "P_d", "S_a", "S_b", "S_c", "S_d"].iter().map(|s| s.to_string()).collect();
    ensure!(names == expected, "names {names:?}");
    for (s, t) in [("S_a", "S_c"), ("S_b", "S_a"), ("S_c", "S_d"), ("S_d", "S_b")] {
        ensure!(tau_name(&arq, s).as_deref() == Some(t), "tau {s} = {:?}", tau_name(&arq, s));
    }
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(())
}

fn c2() -> Outcome {
    let (a, arq) = setup("cycle4_rad2");
    let delta = arq.resolve(&["P_b", "S_b", "P_d"]).map_err(|e| e.to_string())?;
    let r = analyze_cut(&a, &arq, &delta).map_err(|e| e.to_string())?;
    ensure!(r.cut.is_cut, "not a cut: {:?}", r.cut.violations);
    ensure!(r.hom_tau.all_zero, "hom table {:?}", r.hom_tau);
    ensure!(!r.faithful, "reported faithful");
    ensure!(r.annihilator_dim == 3, "annihilator dim {}", r.annihilator_dim);

    // oracle: joint kernel of the action maps on the three modules
    let mods: Vec<_> = delta.iter().map(|&x| arq.module(x).unwrap().clone()).collect();
    let cols: Vec<Vec<Rational>> = (0..a.dim())
        .map(|i| mods.iter().flat_map(|m| a.basis_action(m, i).entries().to_vec()).collect())
        .collect();
    let rows = cols[0].len();
    let kernel = Matrix::from_columns(rows, &cols).kernel_basis();
    let oracle = Span::from_vectors(a.dim(), kernel);
    let q = a.quiver();
    let expected = Span::from_vectors(
        a.dim(),
        vec![
            a.normal_form(&PathWord::idempotent(q.vertex_index("c").unwrap())),
            a.normal_form(&PathWord::arrow(q, q.arrow_index("alpha").unwrap())),
            a.normal_form(&PathWord::arrow(q, q.arrow_index("gamma").unwrap())),
        ],
    );
    let computed = Span::from_vectors(a.dim(), annihilator(&a, &mods));
    ensure!(oracle.dim() == 3, "oracle annihilator dim {}", oracle.dim());
    for s in [&oracle, &computed] {
        ensure!(s.contains_span(&expected) && expected.contains_span(s), "annihilator differs from span{{e_c, alpha, gamma}}");
    }
    let missed: Vec<BTreeSet<String>> = r.missed_tau_orbits.iter().map(|o| o.iter().cloned().collect()).collect();
    let want: Vec<BTreeSet<String>> = vec![["P_a".to_string()].into(), ["P_c".to_string()].into()];
    ensure!(missed == want, "missed orbits {missed:?}");
    Ok(())
}

fn c3() -> Outcome {
    let (a, arq) = setup("cycle4_rad2");
    let delta = arq.resolve(&["P_b", "S_b", "P_d"]).map_err(|e| e.to_string())?;
    let qt = quotient_by_cut(&a, &arq, &delta, &CertifyOptions::default()).map_err(|e| e.to_string())?;
    let p = &qt.presentation;
    let q = &p.quiver;
    ensure!(q.num_vertices() == 3, "{} vertices", q.num_vertices());
    let arrows: BTreeSet<(String, String)> = q
        .arrows
        .iter()
        .map(|ar| (q.vertices[ar.source].clone(), q.vertices[ar.target].clone()))
        .collect();
    let want: BTreeSet<(String, String)> =
        [("d".into(), "b".into()), ("b".into(), "a".into())].into_iter().collect();
    ensure!(arrows == want, "arrows {arrows:?}");
    ensure!(p.relations.len() == 1, "{} relations", p.relations.len());
    let r = &p.relations[0];
    ensure!(r.terms.len() == 1, "relation is not a single path");
    let w = &r.terms[0].1;
    ensure!(
        q.vertices[w.source] == "d" && q.vertices[w.target] == "a" && w.len() == 2,
        "relation {}",
        r.display(q)
    );
    ensure!(qt.algebra.dim() == 5, "dim B = {}", qt.algebra.dim());
    let c = &qt.certificate;
    ensure!(c.verdict == Verdict::CertifiedTilted, "verdict {}", c.verdict);
    ensure!(qt.cut_in_quotient && qt.slice_in_quotient, "cut not a slice of the quotient quiver");
    let x = c.crosscheck.as_ref().ok_or("no crosscheck")?;
    ensure!(
        x.pdim_le_1 && x.ext1_dim == 0 && x.summands == 3 && x.simples == 3 && x.end_hereditary && x.passes,
        "crosscheck {x:?}"
    );
    Ok(())
}

fn c4() -> Outcome {
    let (a, arq) = setup("cycle3_rad2");
    ensure!(a.dim() == 6, "dim A = {}", a.dim());
    ensure!(arq.len() == 6, "{} vertices", arq.len());
    let delta = arq.resolve(&["P_b", "S_b", "P_a"]).map_err(|e| e.to_string())?;
    let r = analyze_cut(&a, &arq, &delta).map_err(|e| e.to_string())?;
    ensure!(r.cut.is_cut && r.sincere && r.hom_tau.all_zero && !r.faithful, "report {r:?}");
    let c = certify_tilted(&a, &CertifyOptions::default()).map_err(|e| e.to_string())?;
    ensure!(c.verdict == Verdict::RefutedByEnumeration, "verdict {}", c.verdict);
    Ok(())
}

fn c5() -> Outcome {
    let (a, arq) = setup("cycle4_rad2");
    let fast = enumerate_cuts(&arq, DEFAULT_CUT_CAP).map_err(|e| e.to_string())?;
    let slow = enumerate_cuts_brute_force(&arq);
    ensure!(fast == slow, "enumerators disagree: {} vs {}", fast.len(), slow.len());
    let c = certify_tilted(&a, &CertifyOptions::default()).map_err(|e| e.to_string())?;
    ensure!(c.verdict == Verdict::RefutedByEnumeration, "verdict {}", c.verdict);
    ensure!(c.cuts_examined == fast.len(), "examined {} of {}", c.cuts_examined, fast.len());
    Ok(())
}

fn c6() -> Outcome {
    let mut qualifying = 0;
    for name in ["cycle4_rad2", "cycle3_rad2", "b_a3"] {
        let (_, arq) = setup(name);
        for delta in enumerate_cuts(&arq, DEFAULT_CUT_CAP).map_err(|e| e.to_string())? {
            let t = hom_tau_test(&arq, &delta).map_err(|e| e.to_string())?;
            let c = convexity_checks(&arq, &delta).map_err(|e| e.to_string())?;
            let label = format!("{name} {:?}", arq.names(&delta));
            ensure!(
                t.forward_zero == t.backward_zero && t.forward_zero == c.weakly_convex,
                "{label}: forward {} backward {} weakly convex {}",
                t.forward_zero,
                t.backward_zero,
                c.weakly_convex
            );
            if t.forward_zero {
                qualifying += 1;
                ensure!(c.acyclic, "{label}: oriented cycle");
                let overlap = delta.iter().any(|&x| {
                    arq.tau[x].is_some_and(|t| delta.contains(&t))
                        || arq.tau_inverse(x).is_some_and(|t| delta.contains(&t))
                });
                ensure!(!overlap, "{label}: contains X and a translate of X");
            }
        }
    }
    ensure!(qualifying > 0, "no qualifying cuts examined");
    Ok(())
}

fn c7() -> Outcome {
    for name in common::FIXTURES {
        let (a, arq) = setup(name);
        let q = a.quiver();
        arq.check_invariants().map_err(|e| format!("{name}: {e}"))?;
        for x in 0..arq.len() {
            let m = arq.module(x).unwrap();
            let v = &arq.vertices[x];
            let dtr = translate(&a, m, Direction::Forward);
            match arq.tau[x] {
                Some(t) => {
                    let iso = is_isomorphic(q, &dtr, arq.module(t).unwrap()).map_err(|e| e.to_string())?;
                    ensure!(iso, "{name}: tau {} disagrees with DTr", v.name);
                }
                None => ensure!(v.is_projective && dtr.is_zero(), "{name}: tau missing at {}", v.name),
            }
            if !v.is_injective {
                let back = translate(&a, &translate(&a, m, Direction::Backward), Direction::Forward);
                let iso = is_isomorphic(q, &back, m).map_err(|e| e.to_string())?;
                ensure!(iso, "{name}: tau tau^- {} is not {}", v.name, v.name);
                let ti = arq.tau_inverse(x).ok_or(format!("{name}: tau^- missing at {}", v.name))?;
                ensure!(arq.tau[ti] == Some(x), "{name}: tau tau^- index mismatch");
            }
            // mesh additivity and multiplicity symmetry, recomputed here
            if let Some(t) = arq.tau[x] {
                let mut middle = vec![0usize; q.num_vertices()];
                for e in arq.arrows.iter().filter(|e| e.target == x) {
                    ensure!(
                        arq.multiplicity(t, e.source) == e.multiplicity,
                        "{name}: asymmetric mesh at {}",
                        v.name
                    );
                    for (s, d) in middle.iter_mut().zip(arq.module(e.source).unwrap().dims.iter()) {
                        *s += e.multiplicity * d;
                    }
                }
                let sum: Vec<usize> =
                    m.dims.iter().zip(&arq.module(t).unwrap().dims).map(|(p, q)| p + q).collect();
                ensure!(middle == sum, "{name}: mesh at {} not additive", v.name);
            }
        }
    }
    Ok(())
}

/// Some choice of irreducible maps along `path` with composite of depth `n`.
fn presectional_depth_found(arq: &ARQuiver<Rational>, path: &[usize]) -> Result<bool, String> {
    let rf = arq.radical_filtration().map_err(|e| e.to_string())?;
    let n = path.len() - 1;
    let choices: Vec<Vec<ModuleMap<Rational>>> = path
        .windows(2)
        .map(|w| {
            let b = rf.irreducible_maps(w[0], w[1]);
            let mut all = b.clone();
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    all.push(b[i].add(&b[j]));
                    all.push(b[i].sub(&b[j]));
                }
            }
            all
        })
        .collect();
    let mut idx = vec![0usize; n];
    if choices.iter().any(Vec::is_empty) {
        return Ok(false);
    }
    loop {
        let mut f = choices[0][idx[0]].clone();
        for k in 1..n {
            f = choices[k][idx[k]].compose(&f);
        }
        if rf.depth(path[0], path[n], &f) == Depth::Finite(n) {
            return Ok(true);
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(false);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn c8() -> Outcome {
    let mut checked = 0;
    for name in common::FIXTURES {
        let (_, arq) = setup(name);
        for len in 1..=3 {
            for path in arq.paths_of_length(len) {
                if !arq.path_classify(&path).map_err(|e| e.to_string())?.presectional {
                    continue;
                }
                checked += 1;
                ensure!(
                    presectional_depth_found(&arq, &path)?,
                    "{name}: no composite of depth {len} along {:?}",
                    arq.names(&path)
                );
            }
        }
    }
    ensure!(checked > 0, "no presectional paths");
    Ok(())
}

fn c9() -> Outcome {
    for name in ["a2", "b_a3"] {
        let (a, arq) = setup(name);
        let n = arq.len();
        let mut by_definition = BTreeSet::new();
        for mask in 1u32..(1 << n) {
            let delta: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if is_slice_by_definition(&arq, &delta).map_err(|e| e.to_string())? {
                by_definition.insert(names_set(&arq, &delta).into_iter().collect::<Vec<_>>());
            }
        }
        let mut convex_cuts = BTreeSet::new();
        let mut witnesses = BTreeSet::new();
        for delta in enumerate_cuts(&arq, DEFAULT_CUT_CAP).map_err(|e| e.to_string())? {
            let key: Vec<String> = names_set(&arq, &delta).into_iter().collect();
            if is_sincere(&arq, &delta).unwrap() && convexity_checks(&arq, &delta).unwrap().convex_in_ind {
                convex_cuts.insert(key.clone());
            }
            let mods: Vec<_> = delta.iter().map(|&x| arq.module(x).unwrap().clone()).collect();
            if hom_tau_test(&arq, &delta).unwrap().forward_zero && annihilator(&a, &mods).is_empty() {
                witnesses.insert(key);
            }
        }
        ensure!(!by_definition.is_empty(), "{name}: no slices");
        ensure!(by_definition == convex_cuts, "{name}: {by_definition:?} vs {convex_cuts:?}");
        ensure!(convex_cuts == witnesses, "{name}: {convex_cuts:?} vs {witnesses:?}");
    }
    Ok(())
}

fn c10() -> Outcome {
    let text = std::fs::read_to_string(fixture_path("tube3.tq")).map_err(|e| e.to_string())?;
    let tube: ARQuiver<Rational> = import_abstract(&text).map_err(|e| e.to_string())?;
    let ray = tube.resolve(&["E0_1", "E0_2", "E0_3", "E0_4", "E0_5"]).map_err(|e| e.to_string())?;
    let orbit = tube.resolve(&["E0_1", "E1_1", "E2_1"]).map_err(|e| e.to_string())?;
    ensure!(is_cut(&tube, &ray).is_cut, "ray rejected: {:?}", is_cut(&tube, &ray).violations);
    ensure!(!is_cut(&tube, &orbit).is_cut, "mouth orbit accepted");
    Ok(())
}

fn c11() -> Outcome {
    let opts = CertifyOptions::default();
    let first = certify_tilted(&algebra("b_a3"), &opts).map_err(|e| e.to_string())?;
    let emitted = algebra("b_a3").presentation().to_text();
    let again: AlgebraBasis<Rational> =
        AlgebraBasis::build(&parse_presentation(&emitted).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let second = certify_tilted(&again, &opts).map_err(|e| e.to_string())?;
    let (j1, j2) = (serde_json::to_string_pretty(&first).unwrap(), serde_json::to_string_pretty(&second).unwrap());
    ensure!(j1 == j2, "library certificates differ");

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("b.alg");
    std::fs::write(&path, emitted).map_err(|e| e.to_string())?;
    let (c1, out1, _) = run_cli(&["tilted", "certify", &fixture_path("b_a3.alg")]);
    let (c2, out2, _) = run_cli(&["tilted", "certify", path.to_str().unwrap()]);
    ensure!(c1 == 0 && c2 == 0, "exit codes {c1} {c2}");
    ensure!(out1 == out2, "command line certificates differ");
    ensure!(!fixture_text("b_a3").is_empty(), "fixture missing");
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("4-cycle basis and AR quiver", c1),
        ("4-cycle cut {P_b, S_b, P_d}", c2),
        ("quotient of the 4-cycle is tilted", c3),
        ("3-cycle is not tilted", c4),
        ("4-cycle refuted; enumerators agree", c5),
        ("hom vanishing and weak convexity agree on all cuts", c6),
        ("knitted tau agrees with DTr; mesh invariants", c7),
        ("presectional paths have composites of exact depth", c8),
        ("slices equal sincere convex cuts equal witnesses", c9),
        ("tube: ray is a cut, mouth orbit is not", c10),
        ("certificate round trip is byte-identical", c11),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (label, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(()) => println!("PASS criterion {}: {label}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {label}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
