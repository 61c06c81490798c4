use crate::algebra::AlgebraBasis;
use crate::exactla::{Field, Matrix, Span};
use crate::modrep::{end_algebra, map_from_coords, translate, Direction, Module, ModuleMap};
use crate::Error;

/// `0 -> left -> middle -> right -> 0`.
#[derive(Clone, Debug)]
pub struct AlmostSplitSequence<F> {
    pub left: Module<F>,
    pub middle: Module<F>,
    pub right: Module<F>,
    pub left_map: ModuleMap<F>,
    pub right_map: ModuleMap<F>,
}

/// Almost split sequence ending at the indecomposable non-projective `x`.
pub fn almost_split_sequence<F: Field>(
    a: &AlgebraBasis<F>,
    x: &Module<F>,
) -> Result<AlmostSplitSequence<F>, Error> {
    let u = translate(a, x, Direction::Forward);
    if u.is_zero() {
        return Err(Error::Precondition("module is projective".into()));
    }
    almost_split_sequence_with(a, x, &u)
}

/// Matrix of the word `arrows` (traversed right to left) on `m`, starting at
/// vertex `start`.
fn word_action<F: Field>(m: &Module<F>, arrows: &[usize], start: usize) -> Matrix<F> {
    let mut acc = Matrix::identity(m.dims[start]);
    for &ar in arrows.iter().rev() {
        acc = m.maps[ar].mul(&acc);
    }
    acc
}

/// Radical of `End(m)` as maps; `NonLocalEndRing` unless `End(m)` is local.
fn local_radical<F: Field>(a: &AlgebraBasis<F>, m: &Module<F>) -> Result<Vec<ModuleMap<F>>, Error> {
    let (end, basis) = end_algebra(a.quiver(), m);
    let rad = end.radical()?;
    if end.dim() != rad.dim() + 1 {
        return Err(Error::NonLocalEndRing);
    }
    Ok(rad.basis().iter().map(|c| map_from_coords(&basis, c, m)).collect())
}

/// Same as [`almost_split_sequence`] with `τx ≅ u` supplied.
///
/// Extensions of `x` by `u` are the modules `[[U_a, h_a], [0, X_a]]`; the
/// class chosen spans the socle of `Ext¹(x, u)` under `rad End(x)`, which is
/// also checked against `rad End(u)`.
pub fn almost_split_sequence_with<F: Field>(
    a: &AlgebraBasis<F>,
    x: &Module<F>,
    u: &Module<F>,
) -> Result<AlmostSplitSequence<F>, Error> {
    let q = a.quiver();
    let rad_x = local_radical(a, x)?;
    let rad_u = local_radical(a, u)?;

    let arrows = &q.arrows;
    let mut off = vec![0; arrows.len() + 1];
    for (i, ar) in arrows.iter().enumerate() {
        off[i + 1] = off[i] + u.dims[ar.target] * x.dims[ar.source];
    }
    let hdim = off[arrows.len()];
    let unflatten = |h: &[F]| -> Vec<Matrix<F>> {
        arrows
            .iter()
            .enumerate()
            .map(|(i, ar)| {
                let (r, c) = (u.dims[ar.target], x.dims[ar.source]);
                let mut m = Matrix::zeros(r, c);
                for k in 0..r * c {
                    m.set(k / c, k % c, h[off[i] + k].clone());
                }
                m
            })
            .collect()
    };
    let flatten = |hs: &[Matrix<F>]| -> Vec<F> { hs.iter().flat_map(|m| m.entries().to_vec()).collect() };

    // cocycle condition: every ideal generator acts with zero corner block
    let gens = a.ideal_generators();
    let mut rows = 0;
    let mut row_off = vec![];
    for g in &gens {
        row_off.push(rows);
        rows += u.dims[g[0].1.target] * x.dims[g[0].1.source];
    }
    let mut cons: Matrix<F> = Matrix::zeros(rows, hdim);
    for (gi, g) in gens.iter().enumerate() {
        let (s, t) = (g[0].1.source, g[0].1.target);
        let xs = x.dims[s];
        for (coef, w) in g {
            for (i, &al) in w.arrows.iter().enumerate() {
                let ar = &arrows[al];
                let p = word_action(u, &w.arrows[..i], ar.target);
                let sfx = word_action(x, &w.arrows[i + 1..], s);
                let xc = x.dims[ar.source];
                for r in 0..u.dims[ar.target] {
                    for c in 0..xc {
                        let col = off[al] + r * xc + c;
                        for pp in 0..u.dims[t] {
                            let left = p.get(pp, r);
                            if left.is_zero() {
                                continue;
                            }
                            for qq in 0..xs {
                                let right = sfx.get(c, qq);
                                if right.is_zero() {
                                    continue;
                                }
                                let row = row_off[gi] + pp * xs + qq;
                                let cur = cons.get(row, col).add_ref(&coef.mul_ref(&left.mul_ref(right)));
                                cons.set(row, col, cur);
                            }
                        }
                    }
                }
            }
        }
    }
    let cocycles = cons.kernel_basis();

    // coboundaries h_a = U_a f_v - f_w X_a
    let mut bnd = Span::new(hdim);
    for v in 0..q.num_vertices() {
        for r in 0..u.dims[v] {
            for c in 0..x.dims[v] {
                let mut hs: Vec<Matrix<F>> = arrows
                    .iter()
                    .map(|ar| Matrix::zeros(u.dims[ar.target], x.dims[ar.source]))
                    .collect();
                for (i, ar) in arrows.iter().enumerate() {
                    if ar.source == v {
                        for rr in 0..u.dims[ar.target] {
                            let cur = hs[i].get(rr, c).add_ref(u.maps[i].get(rr, r));
                            hs[i].set(rr, c, cur);
                        }
                    }
                    if ar.target == v {
                        for cc in 0..x.dims[ar.source] {
                            let cur = hs[i].get(r, cc).sub_ref(x.maps[i].get(c, cc));
                            hs[i].set(r, cc, cur);
                        }
                    }
                }
                bnd.insert(flatten(&hs));
            }
        }
    }
    if cocycles.iter().all(|z| bnd.contains(z)) {
        return Err(Error::Precondition("Ext¹(X, τX) vanishes".into()));
    }

    // functionals vanishing on the coboundaries
    let bmat = if bnd.is_zero() {
        Matrix::zeros(0, hdim)
    } else {
        Matrix::from_rows(bnd.basis().to_vec())
    };
    let perp = bmat.kernel_basis();
    let pull = |h: &[F], r: &ModuleMap<F>| -> Vec<F> {
        let hs = unflatten(h);
        let out: Vec<Matrix<F>> = arrows
            .iter()
            .zip(&hs)
            .map(|(ar, m)| m.mul(&r.blocks[ar.source]))
            .collect();
        flatten(&out)
    };
    let push = |h: &[F], s: &ModuleMap<F>| -> Vec<F> {
        let hs = unflatten(h);
        let out: Vec<Matrix<F>> = arrows
            .iter()
            .zip(&hs)
            .map(|(ar, m)| s.blocks[ar.target].mul(m))
            .collect();
        flatten(&out)
    };
    let dot = |w: &[F], v: &[F]| -> F {
        w.iter().zip(v).fold(F::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
    };
    let mut sys_rows = vec![];
    for r in &rad_x {
        let images: Vec<Vec<F>> = cocycles.iter().map(|z| pull(z, r)).collect();
        for w in &perp {
            sys_rows.push(images.iter().map(|im| dot(w, im)).collect::<Vec<F>>());
        }
    }
    let sys = if sys_rows.is_empty() {
        Matrix::zeros(0, cocycles.len())
    } else {
        Matrix::from_rows(sys_rows)
    };
    let eta = sys
        .kernel_basis()
        .into_iter()
        .map(|c| {
            let mut h = vec![F::zero(); hdim];
            for (ck, z) in c.iter().zip(&cocycles) {
                crate::exactla::add_scaled(&mut h, ck, z);
            }
            h
        })
        .find(|h| !bnd.contains(h))
        .ok_or_else(|| Error::Precondition("no socle class in Ext¹(X, τX)".into()))?;
    for s in &rad_u {
        if !bnd.contains(&push(&eta, s)) {
            return Err(Error::Precondition(
                "extension class not annihilated by rad End(τX)".into(),
            ));
        }
    }

    let hs = unflatten(&eta);
    let dims: Vec<usize> = u.dims.iter().zip(&x.dims).map(|(a, b)| a + b).collect();
    let maps = arrows
        .iter()
        .enumerate()
        .map(|(i, ar)| {
            let mut m = Matrix::zeros(dims[ar.target], dims[ar.source]);
            m.set_block(0, 0, &u.maps[i]);
            m.set_block(0, u.dims[ar.source], &hs[i]);
            m.set_block(u.dims[ar.target], u.dims[ar.source], &x.maps[i]);
            m
        })
        .collect();
    let middle = Module::new(dims, maps);
    debug_assert!(a.is_module(&middle));
    let left_map = ModuleMap {
        blocks: (0..q.num_vertices())
            .map(|v| Matrix::identity(u.dims[v]).vstack(&Matrix::zeros(x.dims[v], u.dims[v])))
            .collect(),
    };
    let right_map = ModuleMap {
        blocks: (0..q.num_vertices())
            .map(|v| Matrix::zeros(x.dims[v], u.dims[v]).hstack(&Matrix::identity(x.dims[v])))
            .collect(),
    };
    Ok(AlmostSplitSequence {
        left: u.clone(),
        middle,
        right: x.clone(),
        left_map,
        right_map,
    })
}
