use serde::Serialize;

use super::{
    enumerate_cuts, hom_matrix, hom_tau_from, is_cut, is_sincere, is_slice_section, HomTauTable,
    DEFAULT_CUT_CAP,
};
use crate::algebra::{AlgebraBasis, AlgebraPresentation, Quiver, Relation};
use crate::arquiver::{knit, ARQuiver, KnitLimits};
use crate::exactla::Field;
use crate::modrep::{annihilator, decompose, end_algebra_analysis, ext1_dim, pdim_le_1, Module};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    CertifiedTilted,
    NotCertified,
    RefutedByEnumeration,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::CertifiedTilted => "CERTIFIED_TILTED",
            Verdict::NotCertified => "NOT_CERTIFIED",
            Verdict::RefutedByEnumeration => "REFUTED_BY_ENUMERATION",
        })
    }
}

/// The four tilting-module checks for `T = ⊕Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiltingCrosscheck {
    pub pdim_le_1: bool,
    pub ext1_dim: usize,
    pub summands: usize,
    pub simples: usize,
    pub end_hereditary: bool,
    pub passes: bool,
}

pub fn tilting_crosscheck<F: Field>(
    a: &AlgebraBasis<F>,
    modules: &[Module<F>],
) -> Result<TiltingCrosscheck, Error> {
    if modules.is_empty() {
        return Err(Error::Precondition("empty module family".into()));
    }
    let q = a.quiver();
    let t = Module::direct_sum(modules);
    let pd = modules.iter().all(|m| pdim_le_1(a, m));
    let ext = ext1_dim(a, &t, &t);
    let summands: usize = decompose(q, &t)?.len();
    let hered = end_algebra_analysis(q, &t)?.is_hereditary;
    let simples = a.num_vertices();
    Ok(TiltingCrosscheck {
        pdim_le_1: pd,
        ext1_dim: ext,
        summands,
        simples,
        end_hereditary: hered,
        passes: pd && ext == 0 && summands == simples && hered,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub limits: KnitLimits,
    pub cap: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            limits: KnitLimits::default(),
            cap: DEFAULT_CUT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub field: String,
    pub algebra_dim: usize,
    pub simples: usize,
    pub ar_vertices: usize,
    pub cuts_examined: usize,
    pub witness: Option<Vec<String>>,
    pub hom_tau: Option<HomTauTable>,
    /// Annihilator generators of the witness (empty when faithful).
    pub annihilator: Vec<String>,
    pub sincere: Option<bool>,
    pub faithful: Option<bool>,
    pub slice: Option<bool>,
    pub crosscheck: Option<TiltingCrosscheck>,
    /// Diagnostic: sincere cuts with vanishing Hom tables that are not faithful.
    pub sincere_only_cuts: Vec<Vec<String>>,
    /// Per-block certificates of a disconnected algebra.
    pub blocks: Vec<Certificate>,
    pub note: Option<String>,
}

pub fn certify_tilted<F: Field>(a: &AlgebraBasis<F>, opts: &CertifyOptions) -> Result<Certificate, Error> {
    let q = a.quiver();
    if !q.is_connected() && q.num_vertices() > 1 {
        let mut blocks = vec![];
        for p in block_presentations(a.presentation()) {
            let b = AlgebraBasis::<F>::build(&p)?;
            blocks.push(certify_tilted(&b, opts)?);
        }
        let verdict = if blocks.iter().all(|c| c.verdict == Verdict::CertifiedTilted) {
            Verdict::CertifiedTilted
        } else if blocks.iter().any(|c| c.verdict == Verdict::RefutedByEnumeration) {
            Verdict::RefutedByEnumeration
        } else {
            Verdict::NotCertified
        };
        let witness = (verdict == Verdict::CertifiedTilted)
            .then(|| blocks.iter().flat_map(|c| c.witness.clone().unwrap_or_default()).collect());
        return Ok(Certificate {
            verdict,
            field: a.field().to_string(),
            algebra_dim: a.dim(),
            simples: a.num_vertices(),
            ar_vertices: blocks.iter().map(|c| c.ar_vertices).sum(),
            cuts_examined: blocks.iter().map(|c| c.cuts_examined).sum(),
            witness,
            hom_tau: None,
            annihilator: vec![],
            sincere: None,
            faithful: None,
            slice: None,
            crosscheck: None,
            sincere_only_cuts: vec![],
            blocks,
            note: Some("disconnected algebra: verdict combined from blocks".into()),
        });
    }
    let arq = knit(a, opts.limits)?;
    certify_with_quiver(a, &arq, opts.cap)
}

/// Same as [`certify_tilted`] for a connected algebra whose AR quiver is known.
pub fn certify_with_quiver<F: Field>(
    a: &AlgebraBasis<F>,
    arq: &ARQuiver<F>,
    cap: usize,
) -> Result<Certificate, Error> {
    if !arq.has_modules() {
        return Err(Error::NoModuleData);
    }
    if !arq.complete {
        return Err(Error::Precondition("AR quiver is incomplete".into()));
    }
    let mut cert = Certificate {
        verdict: Verdict::RefutedByEnumeration,
        field: a.field().to_string(),
        algebra_dim: a.dim(),
        simples: a.num_vertices(),
        ar_vertices: arq.len(),
        cuts_examined: 0,
        witness: None,
        hom_tau: None,
        annihilator: vec![],
        sincere: None,
        faithful: None,
        slice: None,
        crosscheck: None,
        sincere_only_cuts: vec![],
        blocks: vec![],
        note: None,
    };
    let cuts = match enumerate_cuts(arq, cap) {
        Ok(c) => c,
        Err(Error::CapExceeded { cap }) => {
            cert.verdict = Verdict::NotCertified;
            cert.note = Some(format!("cut enumeration stopped at cap {cap}"));
            return Ok(cert);
        }
        Err(e) => return Err(e),
    };
    let hom = hom_matrix(arq)?;
    for delta in &cuts {
        cert.cuts_examined += 1;
        let table = hom_tau_from(arq, &hom, delta);
        if !table.forward_zero {
            continue;
        }
        let mods: Vec<Module<F>> = delta.iter().map(|&x| arq.module(x).cloned()).collect::<Result<_, _>>()?;
        let ann = annihilator(a, &mods);
        if !ann.is_empty() {
            if is_sincere(arq, delta)? {
                cert.sincere_only_cuts.push(arq.names(delta));
            }
            continue;
        }
        if cert.witness.is_some() {
            continue;
        }
        let slice = is_slice_section(arq, delta)?.slice == Some(true);
        if !slice {
            return Err(Error::Validation(format!(
                "faithful cut {:?} with vanishing Hom table is not a slice",
                arq.names(delta)
            )));
        }
        debug_assert!(is_cut(arq, delta).is_cut);
        cert.verdict = Verdict::CertifiedTilted;
        cert.witness = Some(arq.names(delta));
        cert.hom_tau = Some(table);
        cert.sincere = Some(is_sincere(arq, delta)?);
        cert.faithful = Some(true);
        cert.slice = Some(true);
        cert.crosscheck = Some(tilting_crosscheck(a, &mods)?);
    }
    Ok(cert)
}

/// Presentations of the connected blocks, vertices and arrows in input order.
pub(crate) fn block_presentations(p: &AlgebraPresentation) -> Vec<AlgebraPresentation> {
    let q = &p.quiver;
    q.components()
        .into_iter()
        .map(|comp| {
            let mut sub = Quiver::new();
            let mut vmap = vec![usize::MAX; q.num_vertices()];
            for &v in &comp {
                vmap[v] = sub.add_vertex(&q.vertices[v]);
            }
            let mut amap = vec![usize::MAX; q.num_arrows()];
            for (i, ar) in q.arrows.iter().enumerate() {
                if vmap[ar.source] != usize::MAX {
                    amap[i] = sub.add_arrow(&ar.label, vmap[ar.source], vmap[ar.target]);
                }
            }
            let relations = p
                .relations
                .iter()
                .filter(|r| vmap[r.source()] != usize::MAX)
                .map(|r| Relation {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, w)| {
                            let mut w = w.clone();
                            w.source = vmap[w.source];
                            w.target = vmap[w.target];
                            w.arrows.iter_mut().for_each(|a| *a = amap[*a]);
                            (c.clone(), w)
                        })
                        .collect(),
                })
                .collect();
            AlgebraPresentation {
                quiver: sub,
                relations,
                field: p.field,
            }
        })
        .collect()
}
