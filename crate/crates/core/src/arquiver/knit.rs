use std::collections::BTreeMap;

use super::almost_split::almost_split_sequence_with;
use super::{ARArrow, ARQuiver, ARVertex};
use crate::algebra::AlgebraBasis;
use crate::exactla::Field;
use crate::modrep::{
    cokernel, decompose, is_iso_indecomposable, radical_submodule, translate, Direction, Module,
    ModuleMap,
};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnitLimits {
    pub max_vertices: usize,
    pub max_dim: usize,
}

impl Default for KnitLimits {
    fn default() -> Self {
        KnitLimits {
            max_vertices: 200,
            max_dim: 64,
        }
    }
}

struct Knitter<'a, F> {
    alg: &'a AlgebraBasis<F>,
    limits: KnitLimits,
    modules: Vec<Module<F>>,
    projective: Vec<bool>,
    injective: Vec<bool>,
    arrows: BTreeMap<(usize, usize), usize>,
    tau: Vec<Option<usize>>,
}

impl<F: Field> Knitter<'_, F> {
    fn find(&self, m: &Module<F>) -> Option<usize> {
        let q = self.alg.quiver();
        self.modules.iter().position(|x| is_iso_indecomposable(q, x, m))
    }

    fn find_or_add(&mut self, m: Module<F>) -> Result<usize, Error> {
        if let Some(i) = self.find(&m) {
            return Ok(i);
        }
        if self.modules.len() >= self.limits.max_vertices {
            return Err(Error::LimitExceeded(format!(
                "more than {} indecomposables",
                self.limits.max_vertices
            )));
        }
        if m.total_dim() > self.limits.max_dim {
            return Err(Error::LimitExceeded(format!(
                "indecomposable of dimension {} exceeds {}",
                m.total_dim(),
                self.limits.max_dim
            )));
        }
        self.modules.push(m);
        self.projective.push(false);
        self.injective.push(false);
        self.tau.push(None);
        Ok(self.modules.len() - 1)
    }

    fn set_arrow(&mut self, from: usize, to: usize, mult: usize) -> Result<(), Error> {
        match self.arrows.insert((from, to), mult) {
            Some(old) if old != mult => Err(Error::Validation(format!(
                "inconsistent arrow multiplicity {old} vs {mult}"
            ))),
            _ => Ok(()),
        }
    }

    fn summands(&mut self, m: &Module<F>) -> Result<Vec<(usize, usize)>, Error> {
        let mut out = vec![];
        for (piece, mult) in decompose(self.alg.quiver(), m)? {
            out.push((self.find_or_add(piece)?, mult));
        }
        Ok(out)
    }

    fn set_tau(&mut self, x: usize, t: usize) -> Result<(), Error> {
        match self.tau[x] {
            Some(old) if old != t => Err(Error::Validation("inconsistent translate".into())),
            _ => {
                self.tau[x] = Some(t);
                Ok(())
            }
        }
    }

    /// Arrows ending at `x`.
    fn incoming(&mut self, x: usize) -> Result<(), Error> {
        let q = self.alg.quiver();
        let m = self.modules[x].clone();
        if self.projective[x] {
            let (rad, _) = radical_submodule(q, &m);
            for (z, k) in self.summands(&rad)? {
                self.set_arrow(z, x, k)?;
            }
            return Ok(());
        }
        if self.tau[x].is_some() {
            return Ok(());
        }
        let u = translate(self.alg, &m, Direction::Forward);
        let seq = almost_split_sequence_with(self.alg, &m, &u)?;
        let t = self.find_or_add(u)?;
        self.set_tau(x, t)?;
        for (z, k) in self.summands(&seq.middle)? {
            self.set_arrow(t, z, k)?;
            self.set_arrow(z, x, k)?;
        }
        Ok(())
    }

    /// Arrows starting at `x`.
    fn outgoing(&mut self, x: usize) -> Result<(), Error> {
        let q = self.alg.quiver();
        let m = self.modules[x].clone();
        if self.injective[x] {
            let (_, incl) = socle(q, &m);
            let (quot, _) = cokernel(q, &m, &incl);
            for (z, k) in self.summands(&quot)? {
                self.set_arrow(x, z, k)?;
            }
            return Ok(());
        }
        if self.tau.contains(&Some(x)) {
            return Ok(());
        }
        let y = translate(self.alg, &m, Direction::Backward);
        let seq = almost_split_sequence_with(self.alg, &y, &m)?;
        let yi = self.find_or_add(y)?;
        self.set_tau(yi, x)?;
        for (z, k) in self.summands(&seq.middle)? {
            self.set_arrow(x, z, k)?;
            self.set_arrow(z, yi, k)?;
        }
        Ok(())
    }
}

/// `soc M`: joint kernel of the arrows leaving each vertex.
fn socle<F: Field>(q: &crate::algebra::Quiver, m: &Module<F>) -> (Module<F>, ModuleMap<F>) {
    use crate::exactla::Matrix;
    let bases: Vec<Vec<Vec<F>>> = (0..q.num_vertices())
        .map(|v| {
            let mut stacked = Matrix::zeros(0, m.dims[v]);
            for (a, ar) in q.arrows.iter().enumerate() {
                if ar.source == v {
                    stacked = stacked.vstack(&m.maps[a]);
                }
            }
            stacked.kernel_basis()
        })
        .collect();
    crate::modrep::submodule(q, m, &bases)
}

/// Builds the AR quiver by closure; on failure returns what was built so far
/// (marked incomplete) together with the error.
pub fn knit_partial<F: Field>(
    alg: &AlgebraBasis<F>,
    limits: KnitLimits,
) -> (ARQuiver<F>, Option<Error>) {
    let mut k = Knitter {
        alg,
        limits,
        modules: vec![],
        projective: vec![],
        injective: vec![],
        arrows: BTreeMap::new(),
        tau: vec![],
    };
    let n = alg.num_vertices();
    let err = (|| -> Result<(), Error> {
        for v in 0..n {
            let i = k.find_or_add(alg.projective(v))?;
            k.projective[i] = true;
        }
        for v in 0..n {
            let i = k.find_or_add(alg.injective(v))?;
            k.injective[i] = true;
        }
        let mut next = 0;
        while next < k.modules.len() {
            k.incoming(next)?;
            k.outgoing(next)?;
            next += 1;
        }
        Ok(())
    })()
    .err();
    let arq = finish(alg, k, err.is_none());
    let err = err.or_else(|| arq.check_invariants().err());
    (arq, err)
}

pub fn knit<F: Field>(alg: &AlgebraBasis<F>, limits: KnitLimits) -> Result<ARQuiver<F>, Error> {
    match knit_partial(alg, limits) {
        (arq, None) => Ok(arq),
        (_, Some(e)) => Err(e),
    }
}

fn finish<F: Field>(alg: &AlgebraBasis<F>, k: Knitter<'_, F>, complete: bool) -> ARQuiver<F> {
    let q = alg.quiver();
    let labels = &q.vertices;
    let n = alg.num_vertices();
    let simples: Vec<Module<F>> = (0..n).map(|v| alg.simple(v)).collect();
    let projs: Vec<Module<F>> = (0..n).map(|v| alg.projective(v)).collect();
    let injs: Vec<Module<F>> = (0..n).map(|v| alg.injective(v)).collect();
    let mut counters: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut vertices = vec![];
    for (i, m) in k.modules.iter().enumerate() {
        let mut names = vec![];
        for (prefix, family) in [("S", &simples), ("P", &projs), ("I", &injs)] {
            for (v, c) in family.iter().enumerate() {
                if is_iso_indecomposable(q, c, m) {
                    names.push(format!("{prefix}_{}", labels[v]));
                }
            }
        }
        if names.is_empty() {
            let c = counters.entry(m.dims.clone()).or_insert(0);
            *c += 1;
            let dv: Vec<String> = m.dims.iter().map(usize::to_string).collect();
            names.push(format!("M{{{}}}#{}", dv.join("."), c));
        }
        vertices.push(ARVertex {
            name: names[0].clone(),
            aliases: names[1..].to_vec(),
            module: Some(m.clone()),
            is_projective: k.projective[i],
            is_injective: k.injective[i],
            boundary: false,
        });
    }
    let arrows = k
        .arrows
        .iter()
        .filter(|(_, &m)| m > 0)
        .map(|(&(s, t), &m)| ARArrow {
            source: s,
            target: t,
            multiplicity: m,
        })
        .collect();
    ARQuiver::from_parts(vertices, arrows, k.tau, complete, Some(q.clone()))
}
