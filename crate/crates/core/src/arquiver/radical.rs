use super::ARQuiver;
use crate::exactla::{Field, Matrix, Span};
use crate::modrep::{end_algebra, hom_basis, map_from_coords, Module, ModuleMap};
use crate::Error;

/// Depth of a map in the radical filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth {
    Finite(usize),
    /// Only the zero map, by convention.
    Infinite,
}

/// `rad^n(X, Y)` for all vertex pairs, as subspaces of flattened maps.
#[derive(Clone, Debug)]
pub struct RadicalFiltration<F> {
    /// `levels[n][x][y]`, starting with `rad^0 = Hom`; the last level is 0.
    levels: Vec<Vec<Vec<Span<F>>>>,
    modules: Vec<Module<F>>,
    /// Length bound for nonzero paths (`2^b - 1`).
    harada_sai: usize,
}

pub(crate) fn unflatten<F: Field>(x: &Module<F>, y: &Module<F>, v: &[F]) -> ModuleMap<F> {
    let mut k = 0;
    let blocks = x
        .dims
        .iter()
        .zip(&y.dims)
        .map(|(&c, &r)| {
            let mut m = Matrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, v[k].clone());
                    k += 1;
                }
            }
            m
        })
        .collect();
    ModuleMap { blocks }
}

fn flat_len<F: Field>(x: &Module<F>, y: &Module<F>) -> usize {
    x.dims.iter().zip(&y.dims).map(|(a, b)| a * b).sum()
}

impl<F: Field> RadicalFiltration<F> {
    pub fn build(arq: &ARQuiver<F>) -> Result<Self, Error> {
        if !arq.has_modules() {
            return Err(Error::NoModuleData);
        }
        if !arq.complete {
            return Err(Error::Precondition("AR quiver is incomplete".into()));
        }
        let q = arq_quiver(arq)?;
        let modules: Vec<Module<F>> = arq.vertices.iter().map(|v| v.module.clone().unwrap()).collect();
        let n = modules.len();
        let mut rad1 = vec![vec![Span::new(0); n]; n];
        let mut hom = vec![vec![Span::new(0); n]; n];
        for x in 0..n {
            for y in 0..n {
                let len = flat_len(&modules[x], &modules[y]);
                let basis: Vec<Vec<F>> = hom_basis(&q, &modules[x], &modules[y])
                    .iter()
                    .map(ModuleMap::flatten)
                    .collect();
                hom[x][y] = Span::from_vectors(len, basis.iter().cloned());
                rad1[x][y] = if x == y {
                    let (end, maps) = end_algebra(&q, &modules[x]);
                    let r = end.radical()?;
                    Span::from_vectors(
                        len,
                        r.basis().iter().map(|c| map_from_coords(&maps, c, &modules[x]).flatten()),
                    )
                } else {
                    hom[x][y].clone()
                };
            }
        }
        let b = modules.iter().map(Module::total_dim).max().unwrap_or(0);
        let harada_sai = if b >= 63 { usize::MAX } else { (1usize << b) - 1 };
        let mut levels = vec![hom, rad1.clone()];
        loop {
            let last = levels.last().unwrap();
            if last.iter().all(|row| row.iter().all(Span::is_zero)) {
                break;
            }
            if levels.len() > harada_sai.saturating_add(2) || levels.len() > 4 * n * b + 8 {
                return Err(Error::Precondition("radical filtration does not vanish".into()));
            }
            let mut next = vec![vec![Span::new(0); n]; n];
            for x in 0..n {
                for y in 0..n {
                    let mut s = Span::new(flat_len(&modules[x], &modules[y]));
                    for z in 0..n {
                        for g in last[z][y].basis() {
                            let g = unflatten(&modules[z], &modules[y], g);
                            for f in rad1[x][z].basis() {
                                let f = unflatten(&modules[x], &modules[z], f);
                                s.insert(g.compose(&f).flatten());
                            }
                        }
                    }
                    next[x][y] = s;
                }
            }
            levels.push(next);
        }
        Ok(RadicalFiltration {
            levels,
            modules,
            harada_sai,
        })
    }

    pub fn rad(&self, n: usize, x: usize, y: usize) -> &Span<F> {
        let n = n.min(self.levels.len() - 1);
        &self.levels[n][x][y]
    }

    /// Number of nonzero levels (the nilpotency index of the radical).
    pub fn nilpotency(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn harada_sai_bound(&self) -> usize {
        self.harada_sai
    }

    pub fn module(&self, x: usize) -> &Module<F> {
        &self.modules[x]
    }

    pub fn depth(&self, x: usize, y: usize, f: &ModuleMap<F>) -> Depth {
        let v = f.flatten();
        if v.iter().all(Field::is_zero) {
            return Depth::Infinite;
        }
        let mut n = 0;
        while n + 1 < self.levels.len() && self.levels[n + 1][x][y].contains(&v) {
            n += 1;
        }
        Depth::Finite(n)
    }

    /// A basis of a complement of `rad²(X, Y)` in `rad(X, Y)`: irreducible
    /// maps, as many as the arrow multiplicity.
    pub fn irreducible_maps(&self, x: usize, y: usize) -> Vec<ModuleMap<F>> {
        let mut s = self.rad(2, x, y).clone();
        let mut out = vec![];
        for v in self.rad(1, x, y).basis() {
            if s.insert(v.clone()) {
                out.push(unflatten(&self.modules[x], &self.modules[y], v));
            }
        }
        out
    }

    /// Whether some chain `x = Z_0 -> ... -> Z_n = y` (`n >= 1`) of radical
    /// maps has nonzero composite, with interior vertices in `allowed` and,
    /// if given, passing through `via` in the interior.
    pub fn nonzero_path_exists(
        &self,
        x: usize,
        y: usize,
        via: Option<usize>,
        allowed: Option<&[usize]>,
    ) -> bool {
        let n = self.modules.len();
        let permitted = |z: usize| allowed.is_none_or(|s| s.contains(&z));
        let len = |a: usize, b: usize| flat_len(&self.modules[a], &self.modules[b]);
        // w[z]: composites X -> z not yet through `via`; v[z]: through it
        let mut w: Vec<Span<F>> = (0..n).map(|z| Span::new(len(x, z))).collect();
        let mut v: Vec<Span<F>> = w.clone();
        w[x].insert(ModuleMap::identity(&self.modules[x]).flatten());
        let bound = self.harada_sai.min(4 * n * self.modules.iter().map(Module::total_dim).max().unwrap_or(1) + 8);
        for _step in 1..=bound {
            let mut nw: Vec<Span<F>> = (0..n).map(|z| Span::new(len(x, z))).collect();
            let mut nv = nw.clone();
            for z in 0..n {
                for zp in 0..n {
                    for (src, through) in [(&w[zp], false), (&v[zp], true)] {
                        if src.is_zero() || self.rad(1, zp, z).is_zero() {
                            continue;
                        }
                        for h in src.basis() {
                            let h = unflatten(&self.modules[x], &self.modules[zp], h);
                            for r in self.rad(1, zp, z).basis() {
                                let r = unflatten(&self.modules[zp], &self.modules[z], r);
                                let c = r.compose(&h).flatten();
                                if through {
                                    nv[z].insert(c);
                                } else {
                                    nw[z].insert(c);
                                }
                            }
                        }
                    }
                }
            }
            let hit = if via.is_some() { !nv[y].is_zero() } else { !nw[y].is_zero() };
            if hit {
                return true;
            }
            // only permitted interior vertices continue; `via` moves w into v
            for z in 0..n {
                if !permitted(z) {
                    nw[z] = Span::new(len(x, z));
                    nv[z] = Span::new(len(x, z));
                } else if Some(z) == via {
                    let moved = nw[z].clone();
                    nv[z] = nv[z].sum(&moved);
                    nw[z] = Span::new(len(x, z));
                }
            }
            if nw.iter().all(Span::is_zero) && nv.iter().all(Span::is_zero) {
                return false;
            }
            w = nw;
            v = nv;
        }
        false
    }
}

fn arq_quiver<F>(arq: &ARQuiver<F>) -> Result<crate::algebra::Quiver, Error> {
    arq.algebra_quiver
        .clone()
        .ok_or(Error::NoModuleData)
}

impl<F: Field> ARQuiver<F> {
    /// Radical filtration of the module category, computed once.
    pub fn radical_filtration(&self) -> Result<&RadicalFiltration<F>, Error> {
        self.radical
            .get_or_init(|| RadicalFiltration::build(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn rad_power_depth(&self, x: usize, y: usize, f: &ModuleMap<F>) -> Result<Depth, Error> {
        Ok(self.radical_filtration()?.depth(x, y, f))
    }

    pub fn nonzero_path_exists(
        &self,
        x: usize,
        y: usize,
        via: Option<usize>,
        allowed: Option<&[usize]>,
    ) -> Result<bool, Error> {
        Ok(self.radical_filtration()?.nonzero_path_exists(x, y, via, allowed))
    }
}
