use super::hom::{hom_basis, hom_dim};
use super::structure::{end_algebra, map_from_coords};
use super::{image_bases, kernel, submodule, Module, ModuleMap};
use crate::algebra::Quiver;
use crate::exactla::Field;
use crate::Error;

/// An indecomposable direct summand with `projection ∘ inclusion = id`.
#[derive(Clone, Debug)]
pub struct Summand<F> {
    pub module: Module<F>,
    pub inclusion: ModuleMap<F>,
    pub projection: ModuleMap<F>,
}

fn candidates<F: Field>(d: usize) -> Vec<Vec<F>> {
    let unit = |i: usize| {
        let mut v = vec![F::zero(); d];
        v[i] = F::one();
        v
    };
    let mut out: Vec<Vec<F>> = (0..d).map(unit).collect();
    for i in 0..d {
        for j in i + 1..d {
            for c in [1, -1, 2] {
                let mut v = unit(i);
                v[j] = F::from_i64(c);
                out.push(v);
            }
        }
    }
    out.push((0..d).map(|k| F::from_i64(k as i64 + 1)).collect());
    out.push((0..d).map(|k| F::from_i64((k * k) as i64 + 1)).collect());
    out
}

/// Splits `M = ker φ^n ⊕ im φ^n` with `φ` an endomorphism whose class in
/// `End/rad` is a zero divisor that is not nilpotent.
fn fitting_split<F: Field>(
    q: &Quiver,
    m: &Module<F>,
    phi: &ModuleMap<F>,
) -> [(Module<F>, ModuleMap<F>, ModuleMap<F>); 2] {
    let mut psi = phi.clone();
    let mut k = 1;
    while k < m.total_dim() {
        psi = psi.compose(&psi);
        k *= 2;
    }
    let (km, ki) = kernel(q, m, &psi);
    let (im, ii) = submodule(q, m, &image_bases(&psi));
    let mut pk = vec![];
    let mut pi = vec![];
    for v in 0..m.dims.len() {
        let b = ki.blocks[v].hstack(&ii.blocks[v]);
        let inv = if b.rows() == 0 {
            b.clone()
        } else {
            b.inverse().expect("Fitting decomposition is direct")
        };
        let dk = km.dims[v];
        pk.push(inv.submatrix(0..dk, 0..inv.cols()));
        pi.push(inv.submatrix(dk..inv.rows(), 0..inv.cols()));
    }
    [
        (km, ki, ModuleMap { blocks: pk }),
        (im, ii, ModuleMap { blocks: pi }),
    ]
}

/// Decomposition into indecomposables, with explicit split maps.
pub fn decompose_with_maps<F: Field>(q: &Quiver, m: &Module<F>) -> Result<Vec<Summand<F>>, Error> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    let whole = || Summand {
        module: m.clone(),
        inclusion: ModuleMap::identity(m),
        projection: ModuleMap::identity(m),
    };
    let (end, basis) = end_algebra(q, m);
    if end.dim() == 1 {
        return Ok(vec![whole()]);
    }
    let rad = end.radical()?;
    if end.dim() - rad.dim() == 1 {
        return Ok(vec![whole()]);
    }
    for x in candidates::<F>(end.dim()) {
        let poly = end.min_poly_mod(&x, &rad);
        let roots = F::roots(&poly);
        let Some(lambda) = roots.into_iter().find(|l| {
            // skip (t - l)^deg: x - l would be nilpotent mod rad
            let deg = poly.len() - 1;
            let mut pw = vec![F::one()];
            for _ in 0..deg {
                let mut next = vec![F::zero(); pw.len() + 1];
                for (i, c) in pw.iter().enumerate() {
                    next[i + 1] = next[i + 1].add_ref(c);
                    next[i] = next[i].sub_ref(&c.mul_ref(l));
                }
                pw = next;
            }
            pw != poly
        }) else {
            continue;
        };
        let phi = map_from_coords(&basis, &x, m).sub(&ModuleMap::identity(m).scale(&lambda));
        let mut out = vec![];
        for (part, incl, proj) in fitting_split(q, m, &phi) {
            for s in decompose_with_maps(q, &part)? {
                out.push(Summand {
                    module: s.module,
                    inclusion: incl.compose(&s.inclusion),
                    projection: s.projection.compose(&proj),
                });
            }
        }
        return Ok(out);
    }
    Err(Error::NonSplitEndomorphismRing)
}

/// Indecomposable summands up to isomorphism, with multiplicities, in order of
/// first appearance.
pub fn decompose<F: Field>(q: &Quiver, m: &Module<F>) -> Result<Vec<(Module<F>, usize)>, Error> {
    let mut out: Vec<(Module<F>, usize)> = vec![];
    for s in decompose_with_maps(q, m)? {
        match out.iter_mut().find(|(x, _)| is_iso_indecomposable(q, x, &s.module)) {
            Some(entry) => entry.1 += 1,
            None => out.push((s.module, 1)),
        }
    }
    Ok(out)
}

/// Exact for modules with local endomorphism rings: `X ≅ Y` iff some
/// `g ∘ f` with `f`, `g` from the Hom bases is invertible.
pub(crate) fn is_iso_indecomposable<F: Field>(q: &Quiver, x: &Module<F>, y: &Module<F>) -> bool {
    if x.dims != y.dims {
        return false;
    }
    if x == y {
        return true;
    }
    let fs = hom_basis(q, x, y);
    if fs.is_empty() {
        return false;
    }
    let gs = hom_basis(q, y, x);
    fs.iter().any(|f| {
        f.is_invertible() || gs.iter().any(|g| g.compose(f).is_invertible())
    })
}

pub fn is_isomorphic<F: Field>(q: &Quiver, x: &Module<F>, y: &Module<F>) -> Result<bool, Error> {
    if x.dims != y.dims {
        return Ok(false);
    }
    if x == y {
        return Ok(true);
    }
    let hxy = hom_dim(q, x, y);
    if hxy != hom_dim(q, y, x) || hxy != hom_dim(q, x, x) || hxy != hom_dim(q, y, y) {
        return Ok(false);
    }
    let dx = decompose(q, x)?;
    let mut dy = decompose(q, y)?;
    if dx.len() != dy.len() {
        return Ok(false);
    }
    for (mx, kx) in &dx {
        match dy
            .iter()
            .position(|(my, ky)| ky == kx && is_iso_indecomposable(q, mx, my))
        {
            Some(i) => {
                dy.remove(i);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_presentation, AlgebraBasis};
    use crate::exactla::Rational;
    use crate::modrep::radical_submodule;

    fn cycle4() -> AlgebraBasis<Rational> {
        let p = parse_presentation(
            "vertex a b c d\narrow alpha: a -> c\narrow beta: b -> a\narrow gamma: c -> d\narrow delta: d -> b\nradical_square_zero\n",
        )
        .unwrap();
        AlgebraBasis::build(&p).unwrap()
    }

    #[test]
    fn indecomposables_stay_whole() {
        let a = cycle4();
        let d = decompose(a.quiver(), &a.projective(0)).unwrap();
        assert_eq!(d, vec![(a.projective(0), 1)]);
    }

    #[test]
    fn doubled_simple() {
        let a = cycle4();
        let s = a.simple(0);
        let d = decompose(a.quiver(), &Module::direct_sum(&[s.clone(), s.clone()])).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(is_isomorphic(a.quiver(), &d[0].0, &s).unwrap());
    }

    #[test]
    fn radical_of_projective_is_simple() {
        let a = cycle4();
        let (rad, _) = radical_submodule(a.quiver(), &a.projective(0));
        let d = decompose(a.quiver(), &rad).unwrap();
        assert_eq!(d.len(), 1);
        assert!(is_isomorphic(a.quiver(), &d[0].0, &a.simple(2)).unwrap());
    }

    #[test]
    fn regular_module_splits_into_projectives() {
        let a = cycle4();
        let q = a.quiver();
        let pieces = decompose_with_maps(q, &a.regular_module()).unwrap();
        assert_eq!(pieces.len(), 4);
        let reg = a.regular_module();
        let mut sum = ModuleMap::zero(&reg, &reg);
        for s in &pieces {
            assert!(s.projection.compose(&s.inclusion).is_invertible());
            sum = sum.add(&s.inclusion.compose(&s.projection));
        }
        assert_eq!(sum, ModuleMap::identity(&reg));
    }

    #[test]
    fn isomorphism_up_to_rescaling() {
        let a = cycle4();
        let q = a.quiver();
        let pa = a.projective(0);
        let mut scaled = pa.clone();
        scaled.maps[0] = scaled.maps[0].scale(&Rational::from_i64(2));
        assert_ne!(pa, scaled);
        assert!(is_isomorphic(q, &pa, &scaled).unwrap());
        assert!(!is_isomorphic(q, &a.simple(0), &a.simple(1)).unwrap());
    }
}
