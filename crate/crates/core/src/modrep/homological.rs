use super::hom::hom_dim;
use super::{cokernel, kernel, submodule, Module, ModuleMap};
use crate::algebra::{AlgebraBasis, Quiver};
use crate::exactla::{is_zero_vec, Field, Matrix, Span};

/// `rad M`, the sum of the arrow images, with its inclusion.
pub fn radical_submodule<F: Field>(q: &Quiver, m: &Module<F>) -> (Module<F>, ModuleMap<F>) {
    let bases: Vec<Vec<Vec<F>>> = radical_spans(q, m).into_iter().map(|s| s.basis().to_vec()).collect();
    submodule(q, m, &bases)
}

fn radical_spans<F: Field>(q: &Quiver, m: &Module<F>) -> Vec<Span<F>> {
    let mut spans: Vec<Span<F>> = m.dims.iter().map(|&d| Span::new(d)).collect();
    for (a, arr) in q.arrows.iter().enumerate() {
        for j in 0..m.maps[a].cols() {
            spans[arr.target].insert(m.maps[a].column(j));
        }
    }
    spans
}

/// `P(M) -> M` with one indecomposable projective per top generator.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F> {
    pub module: Module<F>,
    pub epi: ModuleMap<F>,
    /// Vertex of each indecomposable summand `P_v`, in order.
    pub tops: Vec<usize>,
    /// Image of `e_v` for each summand.
    pub generators: Vec<Vec<F>>,
}

/// Basis indices of paths from `v` to `w`, in basis order.
fn paths_between<F: Field>(a: &AlgebraBasis<F>, v: usize, w: usize) -> Vec<usize> {
    a.basis_paths()
        .iter()
        .enumerate()
        .filter(|(_, p)| p.source == v && p.target == w)
        .map(|(i, _)| i)
        .collect()
}

fn sum_of_projectives<F: Field>(a: &AlgebraBasis<F>, tops: &[usize]) -> Module<F> {
    if tops.is_empty() {
        Module::zero(a.quiver())
    } else {
        Module::direct_sum(&tops.iter().map(|&v| a.projective(v)).collect::<Vec<_>>())
    }
}

fn cover_from_generators<F: Field>(
    a: &AlgebraBasis<F>,
    m: &Module<F>,
    tops: Vec<usize>,
    generators: Vec<Vec<F>>,
) -> ProjectiveCover<F> {
    let module = sum_of_projectives(a, &tops);
    let n = a.num_vertices();
    let mut blocks = vec![];
    for w in 0..n {
        let mut cols = vec![];
        for (&v, g) in tops.iter().zip(&generators) {
            for i in paths_between(a, v, w) {
                cols.push(a.path_action(m, &a.basis_paths()[i]).mul_vec(g));
            }
        }
        blocks.push(Matrix::from_columns(m.dims[w], &cols));
    }
    ProjectiveCover {
        module,
        epi: ModuleMap { blocks },
        tops,
        generators,
    }
}

pub fn projective_cover<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> ProjectiveCover<F> {
    let mut tops = vec![];
    let mut generators = vec![];
    for (v, mut span) in radical_spans(a.quiver(), m).into_iter().enumerate() {
        for i in 0..m.dims[v] {
            let mut e = vec![F::zero(); m.dims[v]];
            e[i] = F::one();
            if span.insert(e.clone()) {
                tops.push(v);
                generators.push(e);
            }
        }
    }
    cover_from_generators(a, m, tops, generators)
}

/// `Ω M`, the kernel of the projective cover, with its inclusion.
pub fn syzygy<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> (Module<F>, ModuleMap<F>, ProjectiveCover<F>) {
    let cover = projective_cover(a, m);
    let (k, incl) = kernel(a.quiver(), &cover.module, &cover.epi);
    (k, incl, cover)
}

/// `P_1 -d-> P_0 -> M -> 0` with both covers minimal.
#[derive(Clone, Debug)]
pub struct MinPresentation<F> {
    pub p0: ProjectiveCover<F>,
    pub p1: ProjectiveCover<F>,
    pub syzygy: Module<F>,
    pub d: ModuleMap<F>,
    /// `elements[j][i]` lies in `e_{u_j} A e_{v_i}`: the summand `P_{u_j}` of
    /// `P_1` maps to `P_{v_i}` by right multiplication with it.
    pub elements: Vec<Vec<Vec<F>>>,
}

fn summand_offsets<F: Field>(a: &AlgebraBasis<F>, tops: &[usize], w: usize) -> Vec<usize> {
    let mut out = vec![];
    let mut acc = 0;
    for &v in tops {
        out.push(acc);
        acc += paths_between(a, v, w).len();
    }
    out
}

pub fn min_presentation<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> MinPresentation<F> {
    let (omega, incl, p0) = syzygy(a, m);
    let p1 = projective_cover(a, &omega);
    let d = incl.compose(&p1.epi);
    let mut elements = vec![];
    for (j, &u) in p1.tops.iter().enumerate() {
        let src_off = summand_offsets(a, &p1.tops, u)[j];
        let col = d.blocks[u].column(src_off);
        let tgt_offs = summand_offsets(a, &p0.tops, u);
        let mut row = vec![];
        for (i, &v) in p0.tops.iter().enumerate() {
            let mut c = a.zero();
            for (k, idx) in paths_between(a, v, u).into_iter().enumerate() {
                c[idx] = col[tgt_offs[i] + k].clone();
            }
            row.push(c);
        }
        elements.push(row);
    }
    MinPresentation {
        p0,
        p1,
        syzygy: omega,
        d,
        elements,
    }
}

/// The map `⊕ P_{src_s} -> ⊕ P_{tgt_t}` sending `p` in summand `s` to
/// `sum_t p * elems[s][t]`.
fn map_of_projectives<F: Field>(
    a: &AlgebraBasis<F>,
    srcs: &[usize],
    tgts: &[usize],
    elems: &[Vec<Vec<F>>],
) -> (Module<F>, Module<F>, ModuleMap<F>) {
    let x = sum_of_projectives(a, srcs);
    let y = sum_of_projectives(a, tgts);
    let mut blocks = vec![];
    for w in 0..a.num_vertices() {
        let tgt_paths: Vec<Vec<usize>> = tgts.iter().map(|&t| paths_between(a, t, w)).collect();
        let mut cols = vec![];
        for (s, &u) in srcs.iter().enumerate() {
            for p in paths_between(a, u, w) {
                let pe = a.basis_element(p);
                let mut col = vec![];
                for (t, paths) in tgt_paths.iter().enumerate() {
                    let prod = a.multiply(&pe, &elems[s][t]);
                    col.extend(paths.iter().map(|&k| prod[k].clone()));
                }
                cols.push(col);
            }
        }
        blocks.push(Matrix::from_columns(y.dims[w], &cols));
    }
    (x, y, ModuleMap { blocks })
}

/// `Tr M`, a module over `A^op` (zero when `M` is projective).
pub fn transpose<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> Module<F> {
    let op = a.opposite();
    let pres = min_presentation(a, m);
    if pres.p1.tops.is_empty() {
        return Module::zero(op.quiver());
    }
    let elems: Vec<Vec<Vec<F>>> = (0..pres.p0.tops.len())
        .map(|i| (0..pres.p1.tops.len()).map(|j| pres.elements[j][i].clone()).collect())
        .collect();
    let (_, y, f) = map_of_projectives(&op, &pres.p0.tops, &pres.p1.tops, &elems);
    cokernel(op.quiver(), &y, &f).0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `τ = D Tr`
    Forward,
    /// `τ⁻ = Tr D`
    Backward,
}

pub fn translate<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>, dir: Direction) -> Module<F> {
    match dir {
        Direction::Forward => transpose(a, m).dual(),
        Direction::Backward => transpose(&a.opposite(), &m.dual()),
    }
}

/// `dim Ext¹(X, Y) = dim Hom(ΩX, Y) - dim Hom(P_0, Y) + dim Hom(X, Y)`.
pub fn ext1_dim<F: Field>(a: &AlgebraBasis<F>, x: &Module<F>, y: &Module<F>) -> usize {
    let q = a.quiver();
    let (omega, _, cover) = syzygy(a, x);
    let hom_p0: usize = cover.tops.iter().map(|&v| y.dims[v]).sum();
    hom_dim(q, &omega, y) + hom_dim(q, x, y) - hom_p0
}

/// Whether `ΩM` is projective, i.e. its own projective cover is injective.
pub fn pdim_le_1<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> bool {
    let (omega, _, _) = syzygy(a, m);
    projective_cover(a, &omega).module.total_dim() == omega.total_dim()
}

/// Basis of `{x in A : x M = 0 for all M}`, checked to be a two-sided ideal.
pub fn annihilator<F: Field>(a: &AlgebraBasis<F>, ms: &[Module<F>]) -> Vec<Vec<F>> {
    let cols: Vec<Vec<F>> = (0..a.dim())
        .map(|i| {
            ms.iter()
                .flat_map(|m| a.basis_action(m, i).entries().to_vec())
                .collect()
        })
        .collect();
    let rows = cols.first().map_or(0, Vec::len);
    let ann = Matrix::from_columns(rows, &cols).kernel_basis();
    let span = Span::from_vectors(a.dim(), ann.iter().cloned());
    for x in &ann {
        for i in 0..a.dim() {
            let b = a.basis_element(i);
            assert!(span.contains(&a.multiply(&b, x)), "annihilator not a left ideal");
            assert!(span.contains(&a.multiply(x, &b)), "annihilator not a right ideal");
        }
    }
    ann
}

/// `(sincere, faithful)` for the family `ms`.
pub fn sincere_faithful<F: Field>(a: &AlgebraBasis<F>, ms: &[Module<F>]) -> (bool, bool) {
    let sincere = (0..a.num_vertices()).all(|v| ms.iter().any(|m| m.dims[v] > 0));
    let faithful = annihilator(a, ms).iter().all(|x| is_zero_vec(x));
    (sincere, faithful)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_presentation;
    use crate::exactla::Rational;
    use crate::modrep::is_isomorphic;

    fn alg(text: &str) -> AlgebraBasis<Rational> {
        AlgebraBasis::build(&parse_presentation(text).unwrap()).unwrap()
    }

    fn cycle4() -> AlgebraBasis<Rational> {
        alg("vertex a b c d\narrow alpha: a -> c\narrow beta: b -> a\narrow gamma: c -> d\narrow delta: d -> b\nradical_square_zero\n")
    }

    fn cycle3() -> AlgebraBasis<Rational> {
        alg("vertex a b c\narrow alpha: a -> b\narrow beta: b -> c\narrow gamma: c -> a\nradical_square_zero\n")
    }

    #[test]
    fn covers() {
        let a = cycle4();
        let c = projective_cover(&a, &a.simple(1));
        assert_eq!(c.tops, vec![1]);
        assert!(c.epi.is_surjective());
        let c = projective_cover(&a, &a.projective(0));
        assert_eq!(c.tops, vec![0]);
        assert!(c.epi.is_invertible());
        let (rad, _) = radical_submodule(a.quiver(), &a.projective(0));
        assert_eq!(projective_cover(&a, &rad).tops, vec![2]);
    }

    #[test]
    fn presentations() {
        let a = cycle4();
        let p = min_presentation(&a, &a.simple(0));
        assert_eq!((p.p0.tops.clone(), p.p1.tops.clone()), (vec![0], vec![2]));
        assert!(min_presentation(&a, &a.projective(2)).p1.tops.is_empty());
        let c = cycle3();
        let p = min_presentation(&c, &c.simple(1));
        assert_eq!((p.p0.tops.clone(), p.p1.tops.clone()), (vec![1], vec![2]));
    }

    #[test]
    fn translates_of_simples() {
        let a = cycle4();
        let q = a.quiver();
        for (x, tx) in [(1, 0), (0, 2), (2, 3), (3, 1)] {
            let t = translate(&a, &a.simple(x), Direction::Forward);
            assert!(is_isomorphic(q, &t, &a.simple(tx)).unwrap(), "tau S_{x}");
            let back = translate(&a, &t, Direction::Backward);
            assert!(is_isomorphic(q, &back, &a.simple(x)).unwrap());
        }
        for v in 0..4 {
            assert!(translate(&a, &a.projective(v), Direction::Forward).is_zero());
        }
        let c = cycle3();
        let t = translate(&c, &c.simple(1), Direction::Forward);
        assert!(is_isomorphic(c.quiver(), &t, &c.simple(2)).unwrap());
    }

    #[test]
    fn ext_and_pdim() {
        let a2 = alg("vertex a b\narrow x: a -> b\n");
        assert_eq!(ext1_dim(&a2, &a2.simple(0), &a2.simple(1)), 1);
        assert_eq!(ext1_dim(&a2, &a2.simple(1), &a2.simple(0)), 0);
        assert_eq!(ext1_dim(&a2, &a2.projective(0), &a2.simple(1)), 0);
        assert!(pdim_le_1(&a2, &a2.simple(0)));
        let a = cycle4();
        assert!(!pdim_le_1(&a, &a.simple(0)));
        assert!(pdim_le_1(&a, &a.projective(0)));
        let t = Module::direct_sum(&[a.projective(1), a.simple(1), a.projective(3)]);
        assert_eq!(ext1_dim(&a, &t, &t), 0);
    }

    #[test]
    fn annihilators() {
        let a = cycle4();
        assert!(annihilator(&a, &[a.regular_module()]).is_empty());
        let delta = [a.projective(1), a.simple(1), a.projective(3)];
        let ann = annihilator(&a, &delta);
        assert_eq!(ann.len(), 3);
        let q = a.quiver();
        let expected = Span::from_vectors(
            a.dim(),
            [
                a.basis_element(a.idempotent(2)),
                a.basis_element(a.arrow_basis_index(q.arrow_index("alpha").unwrap())),
                a.basis_element(a.arrow_basis_index(q.arrow_index("gamma").unwrap())),
            ],
        );
        assert_eq!(Span::from_vectors(a.dim(), ann), expected);
        assert_eq!(sincere_faithful(&a, &delta), (false, false));
        assert_eq!(sincere_faithful(&a, &[a.regular_module()]), (true, true));
        let c = cycle3();
        let d2 = [c.projective(1), c.simple(1), c.projective(0)];
        assert_eq!(sincere_faithful(&c, &d2), (true, false));
    }
}
