use super::field::Field;
use super::matrix::Matrix;
use super::add_scaled;

/// A subspace of `F^n`, kept as reduced echelon rows.
///
/// Two spans compare equal iff they are the same subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span<F> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Span<F> {
    pub fn new(ambient: usize) -> Self {
        Span {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<F>>>(ambient: usize, vectors: I) -> Self {
        let mut s = Self::new(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after elimination against the echelon rows.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                add_scaled(&mut r, &(-c), row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Field::is_zero)
    }

    pub fn contains_span(&self, other: &Span<F>) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p].clone();
            if !c.is_zero() {
                add_scaled(row, &(-c), &r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn sum(&self, other: &Span<F>) -> Span<F> {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Span<F>) -> Span<F> {
        // solve a.self = b.other
        let m = self.dim();
        let mut cols = self.rows.clone();
        cols.extend(other.rows.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
        let mat = Matrix::from_columns(self.ambient, &cols);
        let mut out = Span::new(self.ambient);
        for k in mat.kernel_basis() {
            let mut v = vec![F::zero(); self.ambient];
            for (c, row) in k[..m].iter().zip(&self.rows) {
                add_scaled(&mut v, c, row);
            }
            out.insert(v);
        }
        out
    }
}

/// Coordinates with respect to a fixed list of linearly independent vectors.
#[derive(Clone, Debug)]
pub struct Coordinates<F> {
    ambient: usize,
    echelon: Vec<Vec<F>>,
    transform: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Coordinates<F> {
    /// Panics if the vectors are linearly dependent.
    pub fn new(ambient: usize, basis: &[Vec<F>]) -> Self {
        let m = basis.len();
        let mut aug = Matrix::zeros(m, ambient + m);
        for (i, v) in basis.iter().enumerate() {
            assert_eq!(v.len(), ambient, "vector length mismatch");
            for (j, x) in v.iter().enumerate() {
                aug.set(i, j, x.clone());
            }
            aug.set(i, ambient + i, F::one());
        }
        let pivots = aug.rref_in_place(ambient);
        assert_eq!(pivots.len(), m, "basis vectors are linearly dependent");
        let echelon = (0..m).map(|i| aug.row(i)[..ambient].to_vec()).collect();
        let transform = (0..m).map(|i| aug.row(i)[ambient..].to_vec()).collect();
        Coordinates {
            ambient,
            echelon,
            transform,
            pivots,
        }
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Coefficients `c` with `v = sum c_i basis_i`, or `None` if `v` is not in
    /// the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut residual = v.to_vec();
        let mut out = vec![F::zero(); self.len()];
        for ((row, t), &p) in self.echelon.iter().zip(&self.transform).zip(&self.pivots) {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            add_scaled(&mut residual, &(-c.clone()), row);
            add_scaled(&mut out, &c, t);
        }
        residual.iter().all(Field::is_zero).then_some(out)
    }
}
