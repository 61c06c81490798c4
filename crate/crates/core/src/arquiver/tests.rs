use super::*;
use crate::algebra::{parse_presentation, AlgebraBasis};
use crate::exactla::{Fp, Rational};
use crate::modrep::{hom_basis, is_isomorphic, translate, Direction};

const CYCLE4: &str = "vertex a b c d
arrow alpha: a -> c
arrow beta: b -> a
arrow gamma: c -> d
arrow delta: d -> b
radical_square_zero
";
const CYCLE3: &str = "vertex a b c
arrow alpha: a -> b
arrow beta: b -> c
arrow gamma: c -> a
radical_square_zero
";
const A2: &str = "vertex a b\narrow x: a -> b\n";

fn alg(text: &str) -> AlgebraBasis<Rational> {
    AlgebraBasis::build(&parse_presentation(text).unwrap()).unwrap()
}

fn knitted(text: &str) -> (AlgebraBasis<Rational>, ARQuiver<Rational>) {
    let a = alg(text);
    let arq = knit(&a, KnitLimits::default()).unwrap();
    (a, arq)
}

fn sorted_names<F>(arq: &ARQuiver<F>) -> Vec<String> {
    let mut n: Vec<String> = arq.vertices.iter().map(|v| v.name.clone()).collect();
    n.sort();
    n
}

fn id(arq: &ARQuiver<Rational>, name: &str) -> usize {
    arq.find(name).unwrap()
}

#[test]
fn four_cycle_quiver() {
    let (_, arq) = knitted(CYCLE4);
    assert_eq!(sorted_names(&arq), ["P_a", "P_b", "P_c", "P_d", "S_a", "S_b", "S_c", "S_d"]);
    for v in ["a", "b", "c", "d"] {
        let p = &arq.vertices[id(&arq, &format!("P_{v}"))];
        assert!(p.is_projective && p.is_injective);
        assert!(p.aliases.iter().any(|n| n.starts_with("I_")));
    }
    for (x, t) in [("S_a", "S_c"), ("S_b", "S_a"), ("S_c", "S_d"), ("S_d", "S_b")] {
        assert_eq!(arq.tau[id(&arq, x)], Some(id(&arq, t)), "τ{x}");
    }
    assert!(arq.complete);
    assert_eq!(arq.arrows.len(), 8);
}

#[test]
fn three_cycle_and_a2() {
    let (_, arq) = knitted(CYCLE3);
    assert_eq!(sorted_names(&arq), ["P_a", "P_b", "P_c", "S_a", "S_b", "S_c"]);
    assert_eq!(arq.tau[id(&arq, "S_b")], Some(id(&arq, "S_c")));
    let (_, arq) = knitted(A2);
    assert_eq!(sorted_names(&arq), ["P_a", "S_a", "S_b"]);
    assert_eq!(arq.find("P_b"), arq.find("S_b"));
    assert_eq!(arq.tau[id(&arq, "S_a")], Some(id(&arq, "S_b")));
    assert_eq!(arq.multiplicity(id(&arq, "S_b"), id(&arq, "P_a")), 1);
    assert_eq!(arq.multiplicity(id(&arq, "P_a"), id(&arq, "S_a")), 1);
}

#[test]
fn knitted_tau_agrees_with_transpose() {
    for text in [CYCLE4, CYCLE3, A2] {
        let (a, arq) = knitted(text);
        for (x, t) in arq.tau.iter().enumerate() {
            let Some(t) = *t else { continue };
            let m = arq.module(x).unwrap();
            let direct = translate(&a, m, Direction::Forward);
            assert!(is_isomorphic(a.quiver(), &direct, arq.module(t).unwrap()).unwrap());
            let back = translate(&a, arq.module(t).unwrap(), Direction::Backward);
            assert!(is_isomorphic(a.quiver(), &back, m).unwrap());
        }
    }
}

#[test]
fn almost_split_sequences_of_simples() {
    let a = alg(CYCLE4);
    let s = almost_split_sequence(&a, &a.simple(0)).unwrap();
    assert!(is_isomorphic(a.quiver(), &s.left, &a.simple(2)).unwrap());
    assert!(is_isomorphic(a.quiver(), &s.middle, &a.projective(0)).unwrap());
    assert!(s.right_map.compose(&s.left_map).is_zero());
    assert!(s.left_map.is_injective() && s.right_map.is_surjective());
    assert!(matches!(almost_split_sequence(&a, &a.projective(0)), Err(Error::Precondition(_))));
}

#[test]
fn prime_field_knitting_matches() {
    let p = parse_presentation(CYCLE4).unwrap();
    let a: AlgebraBasis<Fp<101>> = AlgebraBasis::build(&p).unwrap();
    let arq = knit(&a, KnitLimits::default()).unwrap();
    let (_, q) = knitted(CYCLE4);
    assert!(arq.combinatorial_eq(&q));
}

#[test]
fn limits_report_partial_quiver() {
    let a = alg(CYCLE4);
    let (part, err) = knit_partial(&a, KnitLimits { max_vertices: 5, max_dim: 64 });
    assert!(matches!(err, Some(Error::LimitExceeded(_))));
    assert!(!part.complete);
    assert_eq!(part.len(), 5);
    // the Kronecker algebra is representation-infinite
    let k = alg("vertex 1 2\narrow x: 1 -> 2\narrow y: 1 -> 2\n");
    assert!(matches!(knit(&k, KnitLimits { max_vertices: 30, max_dim: 64 }), Err(Error::LimitExceeded(_))));
}

#[test]
fn path_classification() {
    let (_, arq) = knitted(CYCLE4);
    let p = arq.resolve(&["P_b"]).unwrap()[0];
    let path = [p, id(&arq, "S_b"), id(&arq, "P_d")];
    assert_eq!(arq.path_classify(&path).unwrap(), PathKind { sectional: true, presectional: true });
    let path = [id(&arq, "S_a"), id(&arq, "P_b"), id(&arq, "S_b")];
    assert!(!arq.path_classify(&path).unwrap().sectional);
    assert!(arq.path_classify(&[id(&arq, "S_a"), id(&arq, "S_b")]).is_err());
}

#[test]
fn depths_in_four_cycle() {
    let (a, arq) = knitted(CYCLE4);
    let q = a.quiver();
    let (sa, pb, sb, pd) = (id(&arq, "S_a"), id(&arq, "P_b"), id(&arq, "S_b"), id(&arq, "P_d"));
    let m = |x| arq.module(x).unwrap();
    let idm = crate::modrep::ModuleMap::identity(m(pb));
    assert_eq!(arq.rad_power_depth(pb, pb, &idm).unwrap(), Depth::Finite(0));
    let f = &hom_basis(q, m(sa), m(pb))[0];
    assert_eq!(arq.rad_power_depth(sa, pb, f).unwrap(), Depth::Finite(1));
    let g = &hom_basis(q, m(pb), m(sb))[0];
    let h = &hom_basis(q, m(sb), m(pd))[0];
    assert_eq!(arq.rad_power_depth(pb, pd, &h.compose(g)).unwrap(), Depth::Finite(2));
    let zero = crate::modrep::ModuleMap::zero(m(pb), m(pd));
    assert_eq!(arq.rad_power_depth(pb, pd, &zero).unwrap(), Depth::Infinite);
    let rf = arq.radical_filtration().unwrap();
    assert_eq!(rf.irreducible_maps(sa, pb).len(), 1);
    assert!(rf.irreducible_maps(pb, pd).is_empty());
}

#[test]
fn nonzero_paths_in_four_cycle() {
    let (_, arq) = knitted(CYCLE4);
    let (pb, sb, sc, pd, sa) = (id(&arq, "P_b"), id(&arq, "S_b"), id(&arq, "S_c"), id(&arq, "P_d"), id(&arq, "S_a"));
    assert!(arq.nonzero_path_exists(sa, pb, None, None).unwrap());
    assert!(arq.nonzero_path_exists(pb, pd, Some(sb), None).unwrap());
    assert!(!arq.nonzero_path_exists(pb, pd, Some(sc), None).unwrap());
    assert!(arq.nonzero_path_exists(pb, pd, None, Some(&[])).unwrap());
    assert!(!arq.nonzero_path_exists(pd, pb, None, Some(&[])).unwrap());
}

#[test]
fn filtration_vanishes_and_sectional_paths_are_short() {
    for text in [CYCLE4, CYCLE3, A2] {
        let (_, arq) = knitted(text);
        let rf = arq.radical_filtration().unwrap();
        assert!(rf.nilpotency() <= arq.len() + 1);
        let long = arq.paths_of_length(arq.len());
        assert!(long.iter().all(|p| !arq.path_classify(p).unwrap().sectional));
    }
}

#[test]
fn export_round_trip() {
    let (_, arq) = knitted(CYCLE4);
    let text = export_text(&arq);
    let back: ARQuiver<Rational> = import_abstract(&text).unwrap();
    assert!(back.combinatorial_eq(&arq));
    assert!(!back.has_modules());
    assert!(matches!(back.radical_filtration(), Err(Error::NoModuleData)));
}

#[test]
fn import_validation() {
    let bad = "vertex X proj\nvertex Y\ntau X = Y\n";
    assert!(matches!(import_abstract::<Rational>(bad), Err(Error::Validation(_))));
    let bad = "vertex X\nvertex Y inj\ntau X = Y\n";
    assert!(matches!(import_abstract::<Rational>(bad), Err(Error::Validation(_))));
    let bad = "vertex X\nvertex Y\nvertex Z\ntau X = Z\ntau Y = Z\n";
    assert!(matches!(import_abstract::<Rational>(bad), Err(Error::Validation(_))));
    match import_abstract::<Rational>("vertex X\narrow X -> W\n") {
        Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (2, 12)),
        other => panic!("{other:?}"),
    }
}
