//! Cuts, slices and sections of an AR quiver; tilted-algebra certification
//! and quotients by annihilators of cuts.

mod certify;
mod enumerate;
mod quotient;

pub use certify::{
    certify_tilted, certify_with_quiver, tilting_crosscheck, CertifyOptions, Certificate,
    TiltingCrosscheck, Verdict,
};
pub use enumerate::{enumerate_cuts, enumerate_cuts_brute_force, DEFAULT_CUT_CAP};
pub use quotient::{quotient_by_cut, restrict_to_quotient, Quotient};

use serde::Serialize;

use crate::algebra::AlgebraBasis;
use crate::arquiver::ARQuiver;
use crate::exactla::Field;
use crate::modrep::{annihilator, hom_dim, Module};
use crate::Error;

/// An arrow `source -> target` breaking one of the two cut conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub source: String,
    pub target: String,
    /// 1: the source lies in the cut; 2: the target does.
    pub condition: u8,
    /// `"neither"` or `"both"`.
    pub kind: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutCheck {
    pub is_cut: bool,
    pub violations: Vec<Violation>,
}

pub(crate) fn contains(delta: &[usize], x: usize) -> bool {
    delta.contains(&x)
}

/// Conditions for the arrow `x -> y`, given membership so far.  Returns the
/// violated condition, if any.
pub(crate) fn arrow_violation<F>(
    arq: &ARQuiver<F>,
    x: usize,
    y: usize,
    member: impl Fn(usize) -> bool,
) -> Option<(u8, &'static str)> {
    let kind = |a: bool, b: bool| if a { "both" } else if !b { "neither" } else { "" };
    if member(x) {
        let a = member(y);
        let b = arq.tau[y].is_some_and(&member);
        if a == b {
            return Some((1, kind(a, b)));
        }
    }
    if member(y) {
        let a = member(x);
        let b = arq.tau_inverse(x).is_some_and(&member);
        if a == b {
            return Some((2, kind(a, b)));
        }
    }
    None
}

/// Arrows with a boundary endpoint lie outside the truncation window and are
/// not checked.
pub(crate) fn checked_arrows<F>(arq: &ARQuiver<F>) -> impl Iterator<Item = (usize, usize)> + '_ {
    arq.arrows
        .iter()
        .filter(|a| !arq.vertices[a.source].boundary && !arq.vertices[a.target].boundary)
        .map(|a| (a.source, a.target))
}

pub fn is_cut<F>(arq: &ARQuiver<F>, delta: &[usize]) -> CutCheck {
    let mut violations = vec![];
    for (x, y) in checked_arrows(arq) {
        if let Some((condition, kind)) = arrow_violation(arq, x, y, |v| contains(delta, v)) {
            violations.push(Violation {
                source: arq.vertices[x].name.clone(),
                target: arq.vertices[y].name.clone(),
                condition,
                kind,
            });
        }
    }
    CutCheck {
        is_cut: violations.is_empty(),
        violations,
    }
}

/// `dim Hom(X, τY)` and `dim Hom(τ⁻X, Y)` over `X, Y` in the cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomTauTable {
    pub vertices: Vec<String>,
    pub forward: Vec<Vec<usize>>,
    pub backward: Vec<Vec<usize>>,
    pub forward_zero: bool,
    pub backward_zero: bool,
    pub all_zero: bool,
}

/// Hom dimensions between all vertex modules of a knitted quiver.
pub(crate) fn hom_matrix<F: Field>(arq: &ARQuiver<F>) -> Result<Vec<Vec<usize>>, Error> {
    let q = arq.algebra_quiver.as_ref().ok_or(Error::NoModuleData)?;
    let mods: Vec<&Module<F>> = (0..arq.len()).map(|x| arq.module(x)).collect::<Result<_, _>>()?;
    Ok(mods
        .iter()
        .map(|x| mods.iter().map(|y| hom_dim(q, x, y)).collect())
        .collect())
}

pub(crate) fn hom_tau_from(arq: &ARQuiver<impl Sized>, hom: &[Vec<usize>], delta: &[usize]) -> HomTauTable {
    let forward: Vec<Vec<usize>> = delta
        .iter()
        .map(|&x| delta.iter().map(|&y| arq.tau[y].map_or(0, |t| hom[x][t])).collect())
        .collect();
    let backward: Vec<Vec<usize>> = delta
        .iter()
        .map(|&x| delta.iter().map(|&y| arq.tau_inverse(x).map_or(0, |t| hom[t][y])).collect())
        .collect();
    let zero = |t: &Vec<Vec<usize>>| t.iter().flatten().all(|&d| d == 0);
    let (forward_zero, backward_zero) = (zero(&forward), zero(&backward));
    HomTauTable {
        vertices: arq.names(delta),
        forward,
        backward,
        forward_zero,
        backward_zero,
        all_zero: forward_zero && backward_zero,
    }
}

pub fn hom_tau_test<F: Field>(arq: &ARQuiver<F>, delta: &[usize]) -> Result<HomTauTable, Error> {
    let q = arq.algebra_quiver.as_ref().ok_or(Error::NoModuleData)?;
    let mut hom = vec![vec![0; arq.len()]; arq.len()];
    for &x in delta {
        for &y in delta {
            if let Some(t) = arq.tau[y] {
                hom[x][t] = hom_dim(q, arq.module(x)?, arq.module(t)?);
            }
            if let Some(t) = arq.tau_inverse(x) {
                hom[t][y] = hom_dim(q, arq.module(t)?, arq.module(y)?);
            }
        }
    }
    Ok(hom_tau_from(arq, &hom, delta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Convexity {
    pub weakly_convex: bool,
    pub convex_in_ind: bool,
    pub acyclic: bool,
}

/// Whether the arrows of the quiver restricted to `delta` contain a cycle.
pub fn has_cycle<F>(arq: &ARQuiver<F>, delta: &[usize]) -> bool {
    // Kahn's algorithm on the full subquiver
    let mut indeg: Vec<usize> = delta
        .iter()
        .map(|&y| arq.predecessors(y).into_iter().filter(|x| delta.contains(x)).count())
        .collect();
    let mut ready: Vec<usize> = (0..delta.len()).filter(|&i| indeg[i] == 0).collect();
    let mut seen = 0;
    while let Some(i) = ready.pop() {
        seen += 1;
        for s in arq.successors(delta[i]) {
            if let Some(j) = delta.iter().position(|&d| d == s) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.push(j);
                }
            }
        }
    }
    seen < delta.len()
}

/// Vertices outside `delta` both reachable from it and reaching it along `edge`.
fn leaks(n: usize, delta: &[usize], edge: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let closure = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = delta.to_vec();
        for &d in delta {
            seen[d] = true;
        }
        while let Some(v) = stack.pop() {
            for w in 0..n {
                let e = if forward { edge(v, w) } else { edge(w, v) };
                if e && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    };
    let (fw, bw) = (closure(true), closure(false));
    (0..n).filter(|&m| !delta.contains(&m) && fw[m] && bw[m]).collect()
}

pub fn convexity_checks<F: Field>(arq: &ARQuiver<F>, delta: &[usize]) -> Result<Convexity, Error> {
    let hom = hom_matrix(arq)?;
    convexity_from(arq, &hom, delta)
}

pub(crate) fn convexity_from<F: Field>(
    arq: &ARQuiver<F>,
    hom: &[Vec<usize>],
    delta: &[usize],
) -> Result<Convexity, Error> {
    let rf = arq.radical_filtration()?;
    let mut weakly_convex = true;
    'outer: for m in (0..arq.len()).filter(|m| !delta.contains(m)) {
        for &x in delta {
            for &y in delta {
                if rf.nonzero_path_exists(x, y, Some(m), None) {
                    weakly_convex = false;
                    break 'outer;
                }
            }
        }
    }
    let convex_in_ind = leaks(arq.len(), delta, |z, w| z != w && hom[z][w] > 0).is_empty();
    Ok(Convexity {
        weakly_convex,
        convex_in_ind,
        acyclic: !has_cycle(arq, delta),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SliceSection {
    /// `None` without module data.
    pub slice: Option<bool>,
    pub section: bool,
}

pub fn is_sincere<F>(arq: &ARQuiver<F>, delta: &[usize]) -> Result<bool, Error> {
    let n = arq.algebra_vertices.len();
    let mut hit = vec![false; n];
    for &x in delta {
        for (h, &d) in hit.iter_mut().zip(&arq.module(x)?.dims) {
            *h |= d > 0;
        }
    }
    Ok(hit.into_iter().all(|h| h))
}

/// Connected, acyclic, one vertex per τ-orbit of its component, and convex
/// in that component.
pub fn is_section<F>(arq: &ARQuiver<F>, delta: &[usize]) -> bool {
    let Some(&first) = delta.first() else { return false };
    let comp = arq.component(first);
    if delta.iter().any(|d| !comp.contains(d)) {
        return false;
    }
    // connected as an undirected graph on delta
    let mut seen = vec![first];
    let mut stack = vec![first];
    while let Some(v) = stack.pop() {
        for w in arq.successors(v).into_iter().chain(arq.predecessors(v)) {
            if delta.contains(&w) && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    if seen.len() != delta.len() || has_cycle(arq, delta) {
        return false;
    }
    let mut orbits: Vec<Vec<usize>> = vec![];
    for &v in &comp {
        let o = arq.tau_orbit(v);
        if !orbits.contains(&o) {
            orbits.push(o);
        }
    }
    if orbits.iter().any(|o| o.iter().filter(|v| delta.contains(v)).count() != 1) {
        return false;
    }
    leaks(arq.len(), delta, |z, w| arq.multiplicity(z, w) > 0).is_empty()
}

pub fn is_slice_section<F: Field>(arq: &ARQuiver<F>, delta: &[usize]) -> Result<SliceSection, Error> {
    let section = is_section(arq, delta);
    if !arq.has_modules() {
        return Ok(SliceSection { slice: None, section });
    }
    let slice = is_cut(arq, delta).is_cut
        && is_sincere(arq, delta)?
        && convexity_checks(arq, delta)?.convex_in_ind;
    Ok(SliceSection {
        slice: Some(slice),
        section,
    })
}

/// The three conditions defining a slice, checked literally.
pub fn is_slice_by_definition<F: Field>(arq: &ARQuiver<F>, delta: &[usize]) -> Result<bool, Error> {
    if delta.is_empty() || !is_sincere(arq, delta)? || !convexity_checks(arq, delta)?.convex_in_ind {
        return Ok(false);
    }
    if delta.iter().any(|&x| arq.tau[x].is_some_and(|t| delta.contains(&t))) {
        return Ok(false);
    }
    for (x, y) in checked_arrows(arq) {
        if delta.contains(&y) && !delta.contains(&x) && !arq.tau_inverse(x).is_some_and(|t| delta.contains(&t)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// τ-orbits disjoint from `delta`, each sorted, in order of first vertex.
pub fn missed_tau_orbits<F>(arq: &ARQuiver<F>, delta: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![];
    for v in 0..arq.len() {
        let o = arq.tau_orbit(v);
        if !out.contains(&o) && o.iter().all(|x| !delta.contains(x)) {
            out.push(o);
        }
    }
    out
}

/// Everything known about one candidate cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutReport {
    pub vertices: Vec<String>,
    pub cut: CutCheck,
    pub hom_tau: HomTauTable,
    pub sincere: bool,
    pub faithful: bool,
    pub annihilator_dim: usize,
    pub annihilator: Vec<String>,
    pub convexity: Convexity,
    pub slice: Option<bool>,
    pub section: bool,
    pub missed_tau_orbits: Vec<Vec<String>>,
}

pub fn analyze_cut<F: Field>(
    a: &AlgebraBasis<F>,
    arq: &ARQuiver<F>,
    delta: &[usize],
) -> Result<CutReport, Error> {
    let hom = hom_matrix(arq)?;
    let mods: Vec<Module<F>> = delta.iter().map(|&x| arq.module(x).cloned()).collect::<Result<_, _>>()?;
    let ann = annihilator(a, &mods);
    let ss = is_slice_section(arq, delta)?;
    Ok(CutReport {
        vertices: arq.names(delta),
        cut: is_cut(arq, delta),
        hom_tau: hom_tau_from(arq, &hom, delta),
        sincere: is_sincere(arq, delta)?,
        faithful: ann.is_empty(),
        annihilator_dim: ann.len(),
        annihilator: ann.iter().map(|x| a.format_element(x)).collect(),
        convexity: convexity_from(arq, &hom, delta)?,
        slice: ss.slice,
        section: ss.section,
        missed_tau_orbits: missed_tau_orbits(arq, delta).iter().map(|o| arq.names(o)).collect(),
    })
}
