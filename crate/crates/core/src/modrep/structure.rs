use super::decompose::{decompose_with_maps, is_iso_indecomposable};
use super::hom::hom_basis;
use super::{Module, ModuleMap};
use crate::algebra::Quiver;
use crate::exactla::{add_scaled, Coordinates, Field, Matrix, Span};
use crate::Error;

/// A finite-dimensional associative unital algebra given by structure
/// constants in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra<F> {
    table: Vec<Vec<Vec<F>>>,
    unit: Vec<F>,
}

impl<F: Field> StructureAlgebra<F> {
    /// `table[i][j]` holds the coordinates of `b_i b_j`.
    pub fn new(table: Vec<Vec<Vec<F>>>, unit: Vec<F>) -> Result<Self, Error> {
        let a = StructureAlgebra { table, unit };
        let d = a.dim();
        for i in 0..d {
            let bi = a.basis_element(i);
            if a.multiply(&a.unit, &bi) != bi || a.multiply(&bi, &a.unit) != bi {
                return Err(Error::Precondition("structure algebra is not unital".into()));
            }
            for j in 0..d {
                for k in 0..d {
                    let left = a.multiply(&a.table[i][j], &a.basis_element(k));
                    let right = a.multiply(&bi, &a.table[j][k]);
                    if left != right {
                        return Err(Error::Precondition("structure algebra is not associative".into()));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    pub fn product(&self, i: usize, j: usize) -> &[F] {
        &self.table[i][j]
    }

    pub fn multiply(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    add_scaled(&mut out, &a.mul_ref(b), &self.table[i][j]);
                }
            }
        }
        out
    }

    pub fn power(&self, x: &[F], k: usize) -> Vec<F> {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.multiply(&acc, x);
        }
        acc
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim())
            .map(|j| self.multiply(x, &self.basis_element(j)))
            .collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    fn trace_of_left_mult(&self, x: &[F]) -> F {
        // tr(L_x) = sum_j (x b_j)_j
        let mut t = F::zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                let c = &self.table[i][j][j];
                if !c.is_zero() {
                    t = t.add_ref(&a.mul_ref(c));
                }
            }
        }
        t
    }

    /// Jacobson radical as the kernel of the trace form `tr(L_{xy})`.
    ///
    /// Only valid in characteristic 0 or `p > dim`; refused otherwise.
    pub fn radical(&self) -> Result<Span<F>, Error> {
        let d = self.dim();
        let p = F::characteristic();
        if p != 0 && p <= d as u64 {
            return Err(Error::UnsupportedRadicalComputation { p, dim: d });
        }
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                gram.set(i, j, self.trace_of_left_mult(&self.table[i][j]));
            }
        }
        Ok(Span::from_vectors(d, gram.kernel_basis()))
    }

    /// Monic minimal polynomial of `x` in `A / ideal`, low degree first.
    pub fn min_poly_mod(&self, x: &[F], ideal: &Span<F>) -> Vec<F> {
        let mut residues: Vec<Vec<F>> = vec![];
        let mut pw = self.unit.clone();
        loop {
            let r = ideal.reduce(&pw);
            if !residues.is_empty() {
                let m = Matrix::from_columns(self.dim(), &residues);
                if let Some(c) = m.solve(&r).expect("shapes agree") {
                    let mut poly: Vec<F> = c.into_iter().map(|v| -v).collect();
                    poly.push(F::one());
                    return poly;
                }
            } else if r.iter().all(Field::is_zero) {
                return vec![F::one()];
            }
            residues.push(r);
            pw = self.multiply(&pw, x);
        }
    }
}

/// `End(M)` with the maps realizing its basis.
pub fn end_algebra<F: Field>(q: &Quiver, m: &Module<F>) -> (StructureAlgebra<F>, Vec<ModuleMap<F>>) {
    let basis = hom_basis(q, m, m);
    let d = basis.len();
    let flat: Vec<Vec<F>> = basis.iter().map(ModuleMap::flatten).collect();
    let len = flat.first().map_or(0, Vec::len);
    let coords = Coordinates::new(len, &flat);
    let mut table = vec![vec![vec![]; d]; d];
    for i in 0..d {
        for j in 0..d {
            table[i][j] = coords
                .coords(&basis[i].compose(&basis[j]).flatten())
                .expect("End(M) closed under composition");
        }
    }
    let unit = if d == 0 {
        vec![]
    } else {
        coords
            .coords(&ModuleMap::identity(m).flatten())
            .expect("identity is an endomorphism")
    };
    let alg = StructureAlgebra { table, unit };
    (alg, basis)
}

pub(crate) fn map_from_coords<F: Field>(basis: &[ModuleMap<F>], c: &[F], m: &Module<F>) -> ModuleMap<F> {
    let mut out = ModuleMap::zero(m, m);
    for (b, x) in basis.iter().zip(c) {
        if !x.is_zero() {
            out = out.add(&b.scale(x));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct EndAnalysis<F> {
    pub algebra: StructureAlgebra<F>,
    pub basis_maps: Vec<ModuleMap<F>>,
    pub radical: Vec<Vec<F>>,
    pub is_local: bool,
    pub is_hereditary: bool,
}

/// `End(M)`, its radical, locality, and whether it is hereditary (its
/// radical is projective as a left module).
pub fn end_algebra_analysis<F: Field>(q: &Quiver, m: &Module<F>) -> Result<EndAnalysis<F>, Error> {
    let (alg, basis_maps) = end_algebra(q, m);
    let rad = alg.radical()?;
    let d = alg.dim();
    let is_local = d > 0 && d - rad.dim() == 1;

    let summands = decompose_with_maps(q, m)?;
    let flat: Vec<Vec<F>> = basis_maps.iter().map(ModuleMap::flatten).collect();
    let coords = Coordinates::new(flat.first().map_or(0, Vec::len), &flat);
    let mut reps: Vec<usize> = vec![];
    for (k, s) in summands.iter().enumerate() {
        if !reps
            .iter()
            .any(|&r| is_iso_indecomposable(q, &summands[r].module, &s.module))
        {
            reps.push(k);
        }
    }
    let j = rad.basis().to_vec();
    let j2 = Span::from_vectors(
        d,
        j.iter()
            .flat_map(|x| j.iter().map(move |y| (x, y)))
            .map(|(x, y)| alg.multiply(x, y)),
    );
    let mut projective_dim = 0;
    for &r in &reps {
        let s = &summands[r];
        let e = coords
            .coords(&s.inclusion.compose(&s.projection).flatten())
            .expect("idempotent lies in End(M)");
        let ej = Span::from_vectors(d, j.iter().map(|x| alg.multiply(&e, x)));
        let ej2 = Span::from_vectors(d, j2.basis().iter().map(|x| alg.multiply(&e, x)));
        let top_mult = ej.dim() - ej2.dim();
        let he = Span::from_vectors(d, (0..d).map(|i| alg.multiply(&alg.basis_element(i), &e)));
        projective_dim += top_mult * he.dim();
    }
    let is_hereditary = projective_dim == rad.dim();
    Ok(EndAnalysis {
        algebra: alg,
        basis_maps,
        radical: j,
        is_local,
        is_hereditary,
    })
}
