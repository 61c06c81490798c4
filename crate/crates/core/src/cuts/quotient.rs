use std::collections::HashMap;

use super::{certify_with_quiver, hom_tau_test, is_cut, is_slice_section, CertifyOptions, Certificate};
use crate::algebra::{AlgebraBasis, AlgebraPresentation, PathWord, Quiver, Relation};
use crate::arquiver::{knit, ARQuiver};
use crate::exactla::{Field, Matrix, Span};
use crate::modrep::{annihilator, is_iso_indecomposable, translate, Direction, Module};
use crate::Error;

/// `B = A/ann(Δ)` with a recovered presentation and the cut lifted to `Γ_B`.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub presentation: AlgebraPresentation,
    pub algebra: AlgebraBasis<F>,
    pub annihilator: Vec<String>,
    pub annihilator_dim: usize,
    pub arq: ARQuiver<F>,
    /// Vertices of `Γ_B` holding the modules of the cut.
    pub lifted: Vec<usize>,
    pub certificate: Certificate,
    pub cut_in_quotient: bool,
    pub slice_in_quotient: bool,
    /// `τ_B X ≅ τX` for every cut module that is non-projective over both.
    pub tau_agrees: bool,
}

/// Restriction of an `A`-module annihilated by the kernel to the quotient
/// quiver, given surviving vertices and arrows (indices into `A`'s quiver).
pub fn restrict_to_quotient<F: Field>(m: &Module<F>, vertices: &[usize], arrows: &[usize]) -> Module<F> {
    Module::new(
        vertices.iter().map(|&v| m.dims[v]).collect(),
        arrows.iter().map(|&a| m.maps[a].clone()).collect(),
    )
}

/// Paths of `q` with 2 to `max_len` arrows, sorted by length then word.
fn long_paths(q: &Quiver, max_len: usize) -> Vec<PathWord> {
    let mut layer: Vec<PathWord> = (0..q.num_arrows()).map(|a| PathWord::arrow(q, a)).collect();
    let mut out = vec![];
    for _ in 2..=max_len {
        let mut next = vec![];
        for p in &layer {
            for a in 0..q.num_arrows() {
                if let Some(w) = PathWord::arrow(q, a).compose(p) {
                    next.push(w);
                }
            }
        }
        next.sort_by_key(|w| w.sort_key(q));
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Vertices, arrows and relations of `A/I` for a two-sided ideal `I`.
fn recover_presentation<F: Field>(
    a: &AlgebraBasis<F>,
    ideal: &Span<F>,
) -> Result<(AlgebraPresentation, Vec<usize>, Vec<usize>), Error> {
    let qa = a.quiver();
    let d = a.dim();
    let verts: Vec<usize> = (0..qa.num_vertices())
        .filter(|&v| !ideal.contains(&a.basis_element(a.idempotent(v))))
        .collect();
    // rad² + I, then arrows independent modulo it
    let rad: Vec<usize> = (0..d).filter(|&i| !a.basis_paths()[i].is_empty()).collect();
    let mut sq = ideal.clone();
    for &i in &rad {
        for &j in &rad {
            sq.insert(a.multiply(&a.basis_element(i), &a.basis_element(j)));
        }
    }
    let mut arrows = vec![];
    for al in 0..qa.num_arrows() {
        if sq.insert(a.normal_form(&PathWord::arrow(qa, al))) {
            arrows.push(al);
        }
    }
    let mut q = Quiver::new();
    for &v in &verts {
        q.add_vertex(&qa.vertices[v]);
    }
    let vpos = |v: usize| verts.iter().position(|&w| w == v).expect("arrow at a surviving vertex");
    for &al in &arrows {
        let ar = &qa.arrows[al];
        q.add_arrow(&ar.label, vpos(ar.source), vpos(ar.target));
    }

    let n = a.nilpotency_index();
    let paths = long_paths(&q, n);
    let index: HashMap<PathWord, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let image = |p: &PathWord| -> Vec<F> {
        let lifted = PathWord::from_arrows(qa, p.arrows.iter().map(|&x| arrows[x]).collect()).expect("composable");
        ideal.reduce(&a.normal_form(&lifted))
    };
    let images: Vec<Vec<F>> = paths.iter().map(image).collect();

    // ideal closure of chosen relations, truncated at length n
    let all_paths: Vec<PathWord> = (0..q.num_vertices())
        .map(PathWord::idempotent)
        .chain((0..q.num_arrows()).map(|x| PathWord::arrow(&q, x)))
        .chain(paths.iter().cloned())
        .collect();
    let mut closure = Span::new(paths.len());
    let mut relations: Vec<Vec<F>> = vec![];
    let add_closure = |closure: &mut Span<F>, r: &[F]| {
        for u in &all_paths {
            for v in &all_paths {
                let mut acc = vec![F::zero(); paths.len()];
                let mut any = false;
                for (k, c) in r.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let Some(w) = u.compose(&paths[k]).and_then(|x| x.compose(v)) else { continue };
                    if let Some(&j) = index.get(&w) {
                        acc[j] = acc[j].add_ref(c);
                        any = true;
                    }
                }
                if any {
                    closure.insert(acc);
                }
            }
        }
    };

    for s in 0..q.num_vertices() {
        for t in 0..q.num_vertices() {
            let cols: Vec<usize> = (0..paths.len())
                .filter(|&k| paths[k].source == s && paths[k].target == t)
                .collect();
            // kernel restricted to paths of length >= l
            let kernel_from = |l: usize| -> Vec<Vec<F>> {
                let sub: Vec<usize> = cols.iter().copied().filter(|&k| paths[k].len() >= l).collect();
                if sub.is_empty() {
                    return vec![];
                }
                let m = Matrix::from_columns(d, &sub.iter().map(|&k| images[k].clone()).collect::<Vec<_>>());
                m.kernel_basis()
                    .into_iter()
                    .map(|c| {
                        let mut full = vec![F::zero(); paths.len()];
                        for (x, &k) in c.into_iter().zip(&sub) {
                            full[k] = x;
                        }
                        full
                    })
                    .collect()
            };
            for l in 2..=n {
                let deeper = Span::from_vectors(paths.len(), kernel_from(l + 1));
                for r in kernel_from(l) {
                    let mut test = closure.sum(&deeper);
                    if test.insert(r.clone()) {
                        let lead = r.iter().find(|x| !x.is_zero()).unwrap().inv().unwrap();
                        let r: Vec<F> = r.iter().map(|x| x.mul_ref(&lead)).collect();
                        add_closure(&mut closure, &r);
                        relations.push(r);
                    }
                }
            }
        }
    }
    let relations = relations
        .iter()
        .map(|r| Relation {
            terms: r
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.to_rational(), paths[k].clone()))
                .collect(),
        })
        .collect();
    Ok((
        AlgebraPresentation {
            quiver: q,
            relations,
            field: a.field(),
        },
        verts,
        arrows,
    ))
}

/// Builds `B = A/ann(Δ)`, re-knits `Γ_B` and certifies `B`.  Requires `Δ`
/// to be a cut with vanishing `Hom(X, τY)`.
pub fn quotient_by_cut<F: Field>(
    a: &AlgebraBasis<F>,
    arq: &ARQuiver<F>,
    delta: &[usize],
    opts: &CertifyOptions,
) -> Result<Quotient<F>, Error> {
    if delta.is_empty() || !is_cut(arq, delta).is_cut {
        return Err(Error::Precondition("modules do not form a cut".into()));
    }
    if !hom_tau_test(arq, delta)?.forward_zero {
        return Err(Error::Precondition("Hom(X, τY) does not vanish on the cut".into()));
    }
    let mods: Vec<Module<F>> = delta.iter().map(|&x| arq.module(x).cloned()).collect::<Result<_, _>>()?;
    let ann = annihilator(a, &mods);
    let ideal = Span::from_vectors(a.dim(), ann.iter().cloned());
    let (presentation, verts, arrows) = recover_presentation(a, &ideal)?;
    let b = AlgebraBasis::<F>::build(&presentation)?;
    if b.dim() + ideal.dim() != a.dim() {
        return Err(Error::Validation(format!(
            "recovered presentation has dimension {}, expected {}",
            b.dim(),
            a.dim() - ideal.dim()
        )));
    }
    let qb = b.quiver();
    let arq_b = knit(&b, opts.limits)?;
    let mut lifted = vec![];
    for m in &mods {
        let r = restrict_to_quotient(m, &verts, &arrows);
        if !b.is_module(&r) {
            return Err(Error::Validation("cut module is not a module over the quotient".into()));
        }
        let i = (0..arq_b.len())
            .find(|&i| is_iso_indecomposable(qb, arq_b.module(i).unwrap(), &r))
            .ok_or_else(|| Error::Validation("cut module missing from the quotient quiver".into()))?;
        lifted.push(i);
    }
    lifted.sort_unstable();
    let mut tau_agrees = true;
    for (&x, m) in delta.iter().zip(&mods) {
        let Some(tx) = arq.tau[x] else { continue };
        let r = restrict_to_quotient(m, &verts, &arrows);
        let tb = translate(&b, &r, Direction::Forward);
        if tb.is_zero() {
            continue;
        }
        let ta = restrict_to_quotient(arq.module(tx)?, &verts, &arrows);
        let ok = b.is_module(&ta)
            && ta.dims.iter().sum::<usize>() == arq.module(tx)?.total_dim()
            && is_iso_indecomposable(qb, &ta, &tb);
        tau_agrees &= ok;
    }
    let certificate = certify_with_quiver(&b, &arq_b, opts.cap)?;
    Ok(Quotient {
        annihilator: ann.iter().map(|x| a.format_element(x)).collect(),
        annihilator_dim: ann.len(),
        cut_in_quotient: is_cut(&arq_b, &lifted).is_cut,
        slice_in_quotient: is_slice_section(&arq_b, &lifted)?.slice == Some(true),
        presentation,
        algebra: b,
        arq: arq_b,
        lifted,
        certificate,
        tau_agrees,
    })
}
