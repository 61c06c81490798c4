//! Modules as quiver representations.
//!
//! Arrow `a: v -> w` acts by a `dim M_w x dim M_v` matrix.  Vectors of the
//! total space `M = sum_v M_v` are concatenated vertex blocks.

mod decompose;
mod hom;
mod homological;
mod structure;

pub use decompose::{decompose, decompose_with_maps, is_isomorphic, Summand};
pub use hom::{hom_basis, hom_dim};
pub use homological::{
    annihilator, ext1_dim, min_presentation, pdim_le_1, projective_cover, radical_submodule,
    sincere_faithful, syzygy, transpose, translate, Direction, MinPresentation, ProjectiveCover,
};
pub use structure::{end_algebra, end_algebra_analysis, EndAnalysis, StructureAlgebra};
pub(crate) use decompose::is_iso_indecomposable;
pub(crate) use structure::map_from_coords;

use crate::algebra::Quiver;
use crate::exactla::{Coordinates, Field, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module<F> {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> Module<F> {
    pub fn new(dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        Module { dims, maps }
    }

    /// Checks matrix shapes against the quiver.
    pub fn is_well_formed(&self, q: &Quiver) -> bool {
        self.dims.len() == q.num_vertices()
            && self.maps.len() == q.num_arrows()
            && q.arrows
                .iter()
                .zip(&self.maps)
                .all(|(a, m)| m.shape() == (self.dims[a.target], self.dims[a.source]))
    }

    pub fn zero(q: &Quiver) -> Self {
        Module {
            dims: vec![0; q.num_vertices()],
            maps: vec![Matrix::zeros(0, 0); q.num_arrows()],
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dim_vector(&self) -> &[usize] {
        &self.dims
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Start of each vertex block in the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for d in &self.dims {
            out.push(acc);
            acc += d;
        }
        out
    }

    /// Vector-space dual, a module over the opposite quiver.
    pub fn dual(&self) -> Self {
        Module {
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Panics on an empty list.
    pub fn direct_sum(parts: &[Module<F>]) -> Self {
        let first = &parts[0];
        let n = first.dims.len();
        let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..first.maps.len())
            .map(|a| Matrix::block_diag(&parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>()))
            .collect();
        Module { dims, maps }
    }

    /// Same module with every vertex basis changed by `g_v` (new = g_v * old).
    pub fn rebase(&self, q: &Quiver, g: &[Matrix<F>]) -> Self {
        let maps = q
            .arrows
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| {
                let inv = g[a.source].inverse().expect("invertible base change");
                g[a.target].mul(m).mul(&inv)
            })
            .collect();
        Module {
            dims: self.dims.clone(),
            maps,
        }
    }

    /// Composition length (sum of the dimension vector).
    pub fn length(&self) -> usize {
        self.total_dim()
    }
}

/// A homomorphism given by one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<F> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> ModuleMap<F> {
    pub fn zero(x: &Module<F>, y: &Module<F>) -> Self {
        ModuleMap {
            blocks: x
                .dims
                .iter()
                .zip(&y.dims)
                .map(|(&dx, &dy)| Matrix::zeros(dy, dx))
                .collect(),
        }
    }

    pub fn identity(x: &Module<F>) -> Self {
        ModuleMap {
            blocks: x.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &ModuleMap<F>) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().zip(&f.blocks).map(|(g, f)| g.mul(f)).collect(),
        }
    }

    pub fn add(&self, other: &ModuleMap<F>) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &ModuleMap<F>) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.is_square() && b.is_invertible())
    }

    pub fn inverse(&self) -> Option<Self> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| if b.rows() == 0 && b.cols() == 0 { Some(b.clone()) } else { b.inverse() })
            .collect::<Option<Vec<_>>>()?;
        Some(ModuleMap { blocks })
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    /// Entries of all blocks, row-major, concatenated.
    pub fn flatten(&self) -> Vec<F> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    pub fn is_homomorphism(&self, q: &Quiver, x: &Module<F>, y: &Module<F>) -> bool {
        q.arrows.iter().enumerate().all(|(a, arr)| {
            self.blocks[arr.target].mul(&x.maps[a]) == y.maps[a].mul(&self.blocks[arr.source])
        })
    }

    /// Sum of the maps `parts[i]: X_i -> Y` out of `⊕ X_i`.
    pub fn hstack(parts: &[ModuleMap<F>]) -> Self {
        let n = parts[0].blocks.len();
        ModuleMap {
            blocks: (0..n)
                .map(|v| {
                    parts[1..]
                        .iter()
                        .fold(parts[0].blocks[v].clone(), |acc, p| acc.hstack(&p.blocks[v]))
                })
                .collect(),
        }
    }

    /// The map `X -> ⊕ Y_i` with components `parts[i]`.
    pub fn vstack(parts: &[ModuleMap<F>]) -> Self {
        let n = parts[0].blocks.len();
        ModuleMap {
            blocks: (0..n)
                .map(|v| {
                    parts[1..]
                        .iter()
                        .fold(parts[0].blocks[v].clone(), |acc, p| acc.vstack(&p.blocks[v]))
                })
                .collect(),
        }
    }
}

/// Submodule spanned, at each vertex, by the given vectors (assumed closed
/// under the arrows and linearly independent); returns it with its inclusion.
pub fn submodule<F: Field>(
    q: &Quiver,
    m: &Module<F>,
    bases: &[Vec<Vec<F>>],
) -> (Module<F>, ModuleMap<F>) {
    let coords: Vec<Coordinates<F>> = bases
        .iter()
        .enumerate()
        .map(|(v, b)| Coordinates::new(m.dims[v], b))
        .collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let cols: Vec<Vec<F>> = bases[arr.source]
                .iter()
                .map(|b| {
                    coords[arr.target]
                        .coords(&m.maps[a].mul_vec(b))
                        .expect("subspace closed under arrows")
                })
                .collect();
            Matrix::from_columns(dims[arr.target], &cols)
        })
        .collect();
    let incl = ModuleMap {
        blocks: bases
            .iter()
            .enumerate()
            .map(|(v, b)| Matrix::from_columns(m.dims[v], b))
            .collect(),
    };
    (Module::new(dims, maps), incl)
}

/// `M / N` for a submodule given by vertex bases, with the quotient map.
pub fn quotient<F: Field>(
    q: &Quiver,
    m: &Module<F>,
    bases: &[Vec<Vec<F>>],
) -> (Module<F>, ModuleMap<F>) {
    use crate::exactla::Span;
    // complement: standard vectors outside the running span
    let mut full: Vec<Vec<Vec<F>>> = vec![];
    let mut comp_dims = vec![];
    for (v, b) in bases.iter().enumerate() {
        let mut span = Span::from_vectors(m.dims[v], b.iter().cloned());
        let mut all = b.clone();
        let mut extra = 0;
        for i in 0..m.dims[v] {
            let mut e = vec![F::zero(); m.dims[v]];
            e[i] = F::one();
            if span.insert(e.clone()) {
                all.push(e);
                extra += 1;
            }
        }
        full.push(all);
        comp_dims.push(extra);
    }
    let coords: Vec<Coordinates<F>> = full
        .iter()
        .enumerate()
        .map(|(v, b)| Coordinates::new(m.dims[v], b))
        .collect();
    let sub_dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let project = |v: usize, x: &[F]| -> Vec<F> {
        coords[v].coords(x).expect("full basis")[sub_dims[v]..].to_vec()
    };
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let cols: Vec<Vec<F>> = full[arr.source][sub_dims[arr.source]..]
                .iter()
                .map(|c| project(arr.target, &m.maps[a].mul_vec(c)))
                .collect();
            Matrix::from_columns(comp_dims[arr.target], &cols)
        })
        .collect();
    let proj = ModuleMap {
        blocks: (0..m.dims.len())
            .map(|v| {
                let cols: Vec<Vec<F>> = (0..m.dims[v])
                    .map(|i| {
                        let mut e = vec![F::zero(); m.dims[v]];
                        e[i] = F::one();
                        project(v, &e)
                    })
                    .collect();
                Matrix::from_columns(comp_dims[v], &cols)
            })
            .collect(),
    };
    (Module::new(comp_dims, maps), proj)
}

pub fn kernel<F: Field>(q: &Quiver, x: &Module<F>, f: &ModuleMap<F>) -> (Module<F>, ModuleMap<F>) {
    let bases: Vec<Vec<Vec<F>>> = f.blocks.iter().map(Matrix::kernel_basis).collect();
    submodule(q, x, &bases)
}

/// Vertex bases of the image of `f` inside `y`.
pub fn image_bases<F: Field>(f: &ModuleMap<F>) -> Vec<Vec<Vec<F>>> {
    f.blocks
        .iter()
        .map(|b| {
            let (r, piv) = b.transpose().rref();
            (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
        })
        .collect()
}

pub fn image<F: Field>(q: &Quiver, y: &Module<F>, f: &ModuleMap<F>) -> (Module<F>, ModuleMap<F>) {
    submodule(q, y, &image_bases(f))
}

pub fn cokernel<F: Field>(q: &Quiver, y: &Module<F>, f: &ModuleMap<F>) -> (Module<F>, ModuleMap<F>) {
    quotient(q, y, &image_bases(f))
}
