use super::{Module, ModuleMap};
use crate::algebra::Quiver;
use crate::exactla::{Field, Matrix};

/// The linear system `f_w X_a - Y_a f_v = 0` in the entries of the `f_v`.
fn intertwining_system<F: Field>(q: &Quiver, x: &Module<F>, y: &Module<F>) -> (Matrix<F>, Vec<usize>) {
    let n = x.dims.len();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    }
    let unknowns = offset[n];
    let rows: usize = q
        .arrows
        .iter()
        .map(|a| y.dims[a.target] * x.dims[a.source])
        .sum();
    let mut sys: Matrix<F> = Matrix::zeros(rows, unknowns);
    let mut r0 = 0;
    for (a, arr) in q.arrows.iter().enumerate() {
        let (v, w) = (arr.source, arr.target);
        let (xa, ya) = (&x.maps[a], &y.maps[a]);
        for i in 0..y.dims[w] {
            for j in 0..x.dims[v] {
                let row = r0 + i * x.dims[v] + j;
                // (f_w X_a)_{ij} = sum_k f_w[i,k] X_a[k,j]
                for k in 0..x.dims[w] {
                    let c = xa.get(k, j);
                    if !c.is_zero() {
                        let col = offset[w] + i * x.dims[w] + k;
                        let cur = sys.get(row, col).add_ref(c);
                        sys.set(row, col, cur);
                    }
                }
                // (Y_a f_v)_{ij} = sum_k Y_a[i,k] f_v[k,j]
                for k in 0..y.dims[v] {
                    let c = ya.get(i, k);
                    if !c.is_zero() {
                        let col = offset[v] + k * x.dims[v] + j;
                        let cur = sys.get(row, col).sub_ref(c);
                        sys.set(row, col, cur);
                    }
                }
            }
        }
        r0 += y.dims[w] * x.dims[v];
    }
    (sys, offset)
}

/// Basis of `Hom(X, Y)`, in reduced echelon order of the intertwining system.
pub fn hom_basis<F: Field>(q: &Quiver, x: &Module<F>, y: &Module<F>) -> Vec<ModuleMap<F>> {
    let (sys, offset) = intertwining_system(q, x, y);
    sys.kernel_basis()
        .into_iter()
        .map(|k| ModuleMap {
            blocks: (0..x.dims.len())
                .map(|v| {
                    let (r, c) = (y.dims[v], x.dims[v]);
                    let mut m = Matrix::zeros(r, c);
                    for i in 0..r {
                        for j in 0..c {
                            m.set(i, j, k[offset[v] + i * c + j].clone());
                        }
                    }
                    m
                })
                .collect(),
        })
        .collect()
}

pub fn hom_dim<F: Field>(q: &Quiver, x: &Module<F>, y: &Module<F>) -> usize {
    let (sys, offset) = intertwining_system(q, x, y);
    offset[x.dims.len()] - sys.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_presentation, AlgebraBasis};
    use crate::exactla::Rational;

    fn cycle4() -> AlgebraBasis<Rational> {
        let p = parse_presentation(
            "vertex a b c d\narrow alpha: a -> c\narrow beta: b -> a\narrow gamma: c -> d\narrow delta: d -> b\nradical_square_zero\n",
        )
        .unwrap();
        AlgebraBasis::build(&p).unwrap()
    }

    #[test]
    fn homs_between_small_modules() {
        let a = cycle4();
        let q = a.quiver();
        let (sa, sb, pb) = (a.simple(0), a.simple(1), a.projective(1));
        assert_eq!(hom_basis(q, &sa, &sa).len(), 1);
        assert_eq!(hom_dim(q, &pb, &sa), 0);
        assert_eq!(hom_dim(q, &pb, &sb), 1);
        assert_eq!(hom_dim(q, &sa, &pb), 1);
        for f in hom_basis(q, &pb, &pb) {
            assert!(f.is_homomorphism(q, &pb, &pb));
        }
    }
}
