//! Auslander-Reiten quivers: knitting, paths, radical depth, and a
//! combinatorial text format.

mod almost_split;
mod knit;
mod radical;
mod text;

pub use almost_split::{almost_split_sequence, almost_split_sequence_with, AlmostSplitSequence};
pub use knit::{knit, knit_partial, KnitLimits};
pub use radical::{Depth, RadicalFiltration};
pub use text::{export_text, import_abstract};

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::algebra::Quiver;
use crate::modrep::Module;
use crate::Error;

#[derive(Clone, Debug)]
pub struct ARVertex<F> {
    pub name: String,
    /// Other canonical names (`P_v`, `I_v`, `S_v`) of the same module.
    pub aliases: Vec<String>,
    pub module: Option<Module<F>>,
    pub is_projective: bool,
    pub is_injective: bool,
    /// Outside the truncation window of an abstract quiver.
    pub boundary: bool,
}

impl<F> ARVertex<F> {
    pub fn dim_vector(&self) -> Option<&[usize]> {
        self.module.as_ref().map(|m| m.dims.as_slice())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ARArrow {
    pub source: usize,
    pub target: usize,
    pub multiplicity: usize,
}

/// A translation quiver, with module data when it was knitted.
#[derive(Clone, Debug)]
pub struct ARQuiver<F> {
    pub vertices: Vec<ARVertex<F>>,
    pub arrows: Vec<ARArrow>,
    /// `tau[x] = Some(y)` iff `τx = y`.
    pub tau: Vec<Option<usize>>,
    /// Whether knitting reached closure.
    pub complete: bool,
    /// Vertex labels of the underlying algebra (empty for abstract quivers).
    pub algebra_vertices: Vec<String>,
    pub(crate) algebra_quiver: Option<Quiver>,
    pub(crate) radical: OnceLock<Result<RadicalFiltration<F>, Error>>,
}

/// `(sectional, presectional)` flags of a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathKind {
    pub sectional: bool,
    pub presectional: bool,
}

impl<F> ARQuiver<F> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_modules(&self) -> bool {
        !self.vertices.is_empty() && self.vertices.iter().all(|v| v.module.is_some())
    }

    /// Looks up a vertex by name or alias.
    pub fn find(&self, name: &str) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.name == name)
            .or_else(|| self.vertices.iter().position(|v| v.aliases.iter().any(|a| a == name)))
    }

    pub fn resolve(&self, names: &[&str]) -> Result<Vec<usize>, Error> {
        let mut out = vec![];
        for n in names {
            let i = self.find(n.trim()).ok_or_else(|| Error::UnknownVertex(n.trim().to_string()))?;
            if !out.contains(&i) {
                out.push(i);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn names(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&i| self.vertices[i].name.clone()).collect()
    }

    pub fn tau_inverse(&self, x: usize) -> Option<usize> {
        self.tau.iter().position(|t| *t == Some(x))
    }

    pub fn multiplicity(&self, x: usize, y: usize) -> usize {
        self.arrows
            .iter()
            .find(|a| a.source == x && a.target == y)
            .map_or(0, |a| a.multiplicity)
    }

    pub fn successors(&self, x: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.source == x).map(|a| a.target).collect()
    }

    pub fn predecessors(&self, x: usize) -> Vec<usize> {
        self.arrows.iter().filter(|a| a.target == x).map(|a| a.source).collect()
    }

    pub fn module(&self, x: usize) -> Result<&Module<F>, Error> {
        self.vertices[x].module.as_ref().ok_or(Error::NoModuleData)
    }

    /// Sectional: `X_{i-1} != τX_{i+1}` at every interior step.  Presectional:
    /// `τX_{i+1} ⊕ X_{i-1}` is a summand of the source of the minimal right
    /// almost split map into `X_i`, read off the arrow multiplicities.
    pub fn path_classify(&self, path: &[usize]) -> Result<PathKind, Error> {
        for w in path.windows(2) {
            if self.multiplicity(w[0], w[1]) == 0 {
                return Err(Error::Precondition(format!(
                    "no arrow {} -> {}",
                    self.vertices[w[0]].name, self.vertices[w[1]].name
                )));
            }
        }
        let mut sectional = true;
        let mut presectional = true;
        for i in 1..path.len().saturating_sub(1) {
            let (prev, cur, next) = (path[i - 1], path[i], path[i + 1]);
            if self.tau[next] == Some(prev) {
                sectional = false;
            }
            if let Some(t) = self.tau[next] {
                let ok = if t == prev {
                    self.multiplicity(prev, cur) >= 2
                } else {
                    self.multiplicity(t, cur) >= 1 && self.multiplicity(prev, cur) >= 1
                };
                presectional &= ok;
            }
        }
        Ok(PathKind {
            sectional,
            presectional,
        })
    }

    /// All paths with `len` arrows (vertex sequences), in lexicographic order.
    pub fn paths_of_length(&self, len: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.len()).map(|v| vec![v]).collect();
        for _ in 0..len {
            let mut next = vec![];
            for p in &out {
                let mut succ = self.successors(*p.last().unwrap());
                succ.sort_unstable();
                for s in succ {
                    let mut q = p.clone();
                    q.push(s);
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }

    /// τ-orbit of `x` (both directions), sorted.
    pub fn tau_orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![x];
        let mut cur = x;
        while let Some(t) = self.tau[cur] {
            if seen.contains(&t) {
                break;
            }
            seen.push(t);
            cur = t;
        }
        cur = x;
        while let Some(t) = self.tau_inverse(cur) {
            if seen.contains(&t) {
                break;
            }
            seen.push(t);
            cur = t;
        }
        seen.sort_unstable();
        seen
    }

    /// Vertices of the connected component containing `x`, sorted.
    pub fn component(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![x];
        seen[x] = true;
        while let Some(v) = stack.pop() {
            let mut nb = self.successors(v);
            nb.extend(self.predecessors(v));
            if let Some(t) = self.tau[v] {
                nb.push(t);
            }
            if let Some(t) = self.tau_inverse(v) {
                nb.push(t);
            }
            for n in nb {
                if !seen[n] {
                    seen[n] = true;
                    stack.push(n);
                }
            }
        }
        (0..self.len()).filter(|&v| seen[v]).collect()
    }

    /// Mesh additivity, multiplicity symmetry and the domain of τ.
    pub fn check_invariants(&self) -> Result<(), Error> {
        let fail = |m: String| Err(Error::Validation(m));
        let mut images = BTreeMap::new();
        for (x, t) in self.tau.iter().enumerate() {
            let Some(t) = *t else { continue };
            if self.vertices[x].is_projective {
                return fail(format!("τ defined on projective {}", self.vertices[x].name));
            }
            if self.vertices[t].is_injective {
                return fail(format!("τ{} = {} is injective", self.vertices[x].name, self.vertices[t].name));
            }
            if let Some(prev) = images.insert(t, x) {
                return fail(format!(
                    "τ not injective: {} and {}",
                    self.vertices[prev].name, self.vertices[x].name
                ));
            }
            if self.vertices[x].boundary || self.vertices[t].boundary {
                continue;
            }
            for z in 0..self.len() {
                if self.multiplicity(z, x) != self.multiplicity(t, z) {
                    return fail(format!(
                        "multiplicity asymmetry at mesh of {} through {}",
                        self.vertices[x].name, self.vertices[z].name
                    ));
                }
            }
            if let (Some(dx), Some(dt)) = (self.vertices[x].dim_vector(), self.vertices[t].dim_vector()) {
                let mut mid = vec![0; dx.len()];
                for a in self.arrows.iter().filter(|a| a.target == x) {
                    let dz = self.vertices[a.source].dim_vector().expect("module data");
                    for (m, d) in mid.iter_mut().zip(dz) {
                        *m += a.multiplicity * d;
                    }
                }
                let ends: Vec<usize> = dx.iter().zip(dt).map(|(a, b)| a + b).collect();
                if ends != mid {
                    return fail(format!("mesh additivity fails at {}", self.vertices[x].name));
                }
            }
        }
        if self.complete {
            for (x, v) in self.vertices.iter().enumerate() {
                if !v.boundary && !v.is_projective && self.tau[x].is_none() {
                    return fail(format!("τ missing on non-projective {}", v.name));
                }
            }
        }
        Ok(())
    }
}

impl<F> ARQuiver<F> {
    pub(crate) fn from_parts(
        vertices: Vec<ARVertex<F>>,
        arrows: Vec<ARArrow>,
        tau: Vec<Option<usize>>,
        complete: bool,
        algebra_quiver: Option<Quiver>,
    ) -> Self {
        ARQuiver {
            vertices,
            arrows,
            tau,
            complete,
            algebra_vertices: algebra_quiver.as_ref().map_or(vec![], |q| q.vertices.clone()),
            algebra_quiver,
            radical: OnceLock::new(),
        }
    }

    /// Combinatorial data only: names, flags, arrows, τ.
    pub fn combinatorial_eq<G>(&self, other: &ARQuiver<G>) -> bool {
        let key = |v: &ARVertex<_>| (v.name.clone(), v.is_projective, v.is_injective, v.boundary);
        let va: Vec<_> = self.vertices.iter().map(key).collect();
        let vb: Vec<_> = other.vertices.iter().map(|v| (v.name.clone(), v.is_projective, v.is_injective, v.boundary)).collect();
        let mut aa = self.arrows.clone();
        let mut ab = other.arrows.clone();
        aa.sort_by_key(|a| (a.source, a.target));
        ab.sort_by_key(|a| (a.source, a.target));
        va == vb && aa == ab && self.tau == other.tau
    }
}

#[cfg(test)]
mod tests;
