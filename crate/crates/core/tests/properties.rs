use proptest::prelude::*;
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::{export_text, import_abstract, knit, KnitLimits};
use tiltkit::cuts::{enumerate_cuts, enumerate_cuts_brute_force, hom_tau_test, DEFAULT_CUT_CAP};
use tiltkit::exactla::Span;
use tiltkit::modrep::{is_isomorphic, translate, Direction};
use tiltkit::{ARQuiver, Matrix, Rational};

/// Type A quiver on `n` vertices with orientation `up[i]` for the arrow
/// between `v{i}` and `v{i+1}`, and a zero relation on each composable
/// pair flagged in `zero`.
fn type_a(n: usize, up: &[bool], zero: &[bool]) -> String {
    let mut s = String::from("vertex");
    for i in 0..n {
        s += &format!(" v{i}");
    }
    s.push('\n');
    for i in 0..n - 1 {
        let (a, b) = if up[i] { (i, i + 1) } else { (i + 1, i) };
        s += &format!("arrow x{i}: v{a} -> v{b}\n");
    }
    for i in 0..n.saturating_sub(2) {
        if !zero[i] || up[i] != up[i + 1] {
            continue;
        }
        let (first, second) = if up[i] { (i, i + 1) } else { (i + 1, i) };
        s += &format!("relation x{second}*x{first}\n");
    }
    s
}

fn type_a_strategy() -> impl Strategy<Value = String> {
    (2usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n)))
        .prop_map(|(n, up, zero)| type_a(n, &up, &zero))
}

fn setup(text: &str) -> (AlgebraBasis<Rational>, ARQuiver<Rational>) {
    let a = AlgebraBasis::build(&parse_presentation(text).unwrap()).unwrap();
    let arq = knit(&a, KnitLimits::default()).unwrap();
    (a, arq)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn knitting_matches_dtr(text in type_a_strategy()) {
        let (a, arq) = setup(&text);
        arq.check_invariants().unwrap();
        let q = a.quiver();
        for x in 0..arq.len() {
            let m = arq.module(x).unwrap();
            let t = translate(&a, m, Direction::Forward);
            match arq.tau[x] {
                Some(y) => prop_assert!(is_isomorphic(q, &t, arq.module(y).unwrap()).unwrap()),
                None => prop_assert!(t.is_zero()),
            }
        }
    }

    #[test]
    fn enumerators_agree(text in type_a_strategy()) {
        let (_, arq) = setup(&text);
        prop_assert_eq!(enumerate_cuts(&arq, DEFAULT_CUT_CAP).unwrap(), enumerate_cuts_brute_force(&arq));
    }

    #[test]
    fn forward_and_backward_vanishing_agree(text in type_a_strategy()) {
        let (_, arq) = setup(&text);
        for delta in enumerate_cuts(&arq, DEFAULT_CUT_CAP).unwrap() {
            let t = hom_tau_test(&arq, &delta).unwrap();
            prop_assert_eq!(t.forward_zero, t.backward_zero);
        }
    }

    #[test]
    fn text_export_round_trips(text in type_a_strategy()) {
        let (_, arq) = setup(&text);
        let exported = export_text(&arq);
        let back: ARQuiver<Rational> = import_abstract(&exported).unwrap();
        prop_assert!(arq.combinatorial_eq(&back));
        prop_assert_eq!(export_text(&back), exported);
    }

    #[test]
    fn opposite_swaps_projectives_and_injectives(text in type_a_strategy()) {
        let a: AlgebraBasis<Rational> = AlgebraBasis::build(&parse_presentation(&text).unwrap()).unwrap();
        let op = a.opposite();
        prop_assert_eq!(op.dim(), a.dim());
        for v in 0..a.num_vertices() {
            prop_assert_eq!(&op.injective(v).dims, &a.projective(v).dims);
        }
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..5)) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m: Matrix<Rational> = Matrix::from_i64(&refs);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), 4);
        for k in &kernel {
            prop_assert!(m.mul_vec(k).iter().all(|x| *x == Rational::new(0, 1)));
        }
        let rows = Span::from_vectors(4, (0..m.rows()).map(|i| m.row(i).to_vec()));
        prop_assert_eq!(rows.dim(), m.rank());
    }
}
