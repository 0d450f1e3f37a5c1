use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::qfield::batch::{Batch, IntLaurent};
use crate::qfield::RatFunc;

/// Sparse vector over Q(q); no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector {
    dim: usize,
    entries: BTreeMap<usize, RatFunc>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Self { dim, entries: BTreeMap::new() }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.set(i, RatFunc::one());
        v
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, RatFunc)>>(dim: usize, it: I) -> Self {
        let mut v = Self::zero(dim);
        for (i, c) in it {
            v.add_at(i, &c);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> RatFunc {
        self.entries.get(&i).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &RatFunc)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn set(&mut self, i: usize, c: RatFunc) {
        assert!(i < self.dim, "index {i} out of range {}", self.dim);
        if c.is_zero() {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, c);
        }
    }

    pub fn add_at(&mut self, i: usize, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let s = &self.get(i) + c;
        self.set(i, s);
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Self { dim: self.dim, entries: self.entries.iter().map(|(&i, x)| (i, x * c)).collect() }
    }

    /// `self ⊗ other`, left factor most significant.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim * other.dim);
        for (&i, a) in &self.entries {
            for (&j, b) in &other.entries {
                out.entries.insert(i * other.dim + j, a * b);
            }
        }
        out
    }

    /// Sum of `c * v` over many pairs, each output entry reduced once.
    pub fn linear_combination<'a, I>(dim: usize, items: I) -> Self
    where
        I: IntoIterator<Item = (&'a RatFunc, &'a Vector)>,
    {
        let mut acc: BTreeMap<usize, Vec<RatFunc>> = BTreeMap::new();
        for (c, v) in items {
            assert_eq!(v.dim, dim, "dimension mismatch");
            if c.is_zero() {
                continue;
            }
            for (&i, x) in &v.entries {
                acc.entry(i).or_default().push(if c.is_one() { x.clone() } else { c * x });
            }
        }
        let entries = acc
            .into_iter()
            .map(|(i, xs)| (i, RatFunc::sum(&xs)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { dim, entries }
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (&i, c) in &rhs.entries {
            out.add_at(i, c);
        }
        out
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector { dim: self.dim, entries: self.entries.iter().map(|(&i, c)| (i, -c)).collect() }
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        self + &(-rhs)
    }
}

/// Sparse matrix over Q(q), stored by columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinOp {
    rows: usize,
    cols: Vec<Vector>,
}

impl LinOp {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols: vec![Vector::zero(rows); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: (0..n).map(|i| Vector::basis(n, i)).collect() }
    }

    pub fn diagonal(d: &[RatFunc]) -> Self {
        let n = d.len();
        Self {
            rows: n,
            cols: d.iter().enumerate().map(|(i, c)| Vector::from_entries(n, [(i, c.clone())])).collect(),
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<Vector>) -> Self {
        assert!(cols.iter().all(|c| c.dim() == rows), "column dimension mismatch");
        Self { rows, cols }
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, usize, RatFunc)>>(
        rows: usize,
        cols: usize,
        it: I,
    ) -> Self {
        let mut op = Self::zero(rows, cols);
        for (i, j, c) in it {
            op.cols[j].add_at(i, &c);
        }
        op
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> RatFunc {
        self.cols[j].get(i)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vector::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vector::is_zero)
    }

    /// Entries sorted by (row, column).
    pub fn entries(&self) -> Vec<(usize, usize, RatFunc)> {
        let mut out: Vec<(usize, usize, RatFunc)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.entries().map(move |(i, x)| (i, j, x.clone())))
            .collect();
        out.sort_by_key(|e| (e.0, e.1));
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols(), "dimension mismatch");
        Vector::linear_combination(self.rows, v.entries().map(|(j, c)| (c, &self.cols[j])))
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &LinOp) -> LinOp {
        assert_eq!(self.cols(), other.rows, "dimension mismatch");
        // integer arithmetic over one common denominator per factor
        let sb = Batch::new(self.cols.iter().flat_map(|c| c.entries.values()));
        let ob = Batch::new(other.cols.iter().flat_map(|c| c.entries.values()));
        let mut snums = sb.nums.iter();
        let scols: Vec<Vec<(usize, &IntLaurent)>> = self
            .cols
            .iter()
            .map(|c| c.entries.keys().map(|&i| (i, snums.next().unwrap())).collect())
            .collect();
        let mut onums = ob.nums.iter();
        let cols = other
            .cols
            .iter()
            .map(|c| {
                let mut acc: BTreeMap<usize, IntLaurent> = BTreeMap::new();
                for &k in c.entries.keys() {
                    let y = onums.next().unwrap();
                    for &(i, x) in &scols[k] {
                        *acc.entry(i).or_default() += &x.mul(y);
                    }
                }
                let entries = acc
                    .into_iter()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| (i, sb.product_value(&ob, &x)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                Vector { dim: self.rows, entries }
            })
            .collect();
        LinOp { rows: self.rows, cols }
    }

    pub fn scale(&self, c: &RatFunc) -> LinOp {
        LinOp { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    /// `self ⊗ other`, left factor most significant.
    pub fn kron(&self, other: &LinOp) -> LinOp {
        let mut cols = Vec::with_capacity(self.cols() * other.cols());
        for a in &self.cols {
            for b in &other.cols {
                cols.push(a.kron(b));
            }
        }
        LinOp { rows: self.rows * other.rows, cols }
    }

    pub fn trace(&self) -> RatFunc {
        assert_eq!(self.rows, self.cols(), "trace of a non-square matrix");
        let diag: Vec<RatFunc> = (0..self.rows).map(|i| self.get(i, i)).collect();
        RatFunc::sum(&diag)
    }

    /// Row-major flattening into one vector of length rows * cols.
    pub fn flatten(&self) -> Vector {
        let c = self.cols();
        Vector::from_entries(self.rows * c, self.entries().into_iter().map(|(i, j, x)| (i * c + j, x)))
    }
}

impl Add for &LinOp {
    type Output = LinOp;
    fn add(self, rhs: &LinOp) -> LinOp {
        assert_eq!((self.rows, self.cols()), (rhs.rows, rhs.cols()), "dimension mismatch");
        LinOp { rows: self.rows, cols: self.cols.iter().zip(&rhs.cols).map(|(a, b)| a + b).collect() }
    }
}

impl Neg for &LinOp {
    type Output = LinOp;
    fn neg(self) -> LinOp {
        LinOp { rows: self.rows, cols: self.cols.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LinOp {
    type Output = LinOp;
    fn sub(self, rhs: &LinOp) -> LinOp {
        self + &(-rhs)
    }
}

impl Mul for &LinOp {
    type Output = LinOp;
    fn mul(self, rhs: &LinOp) -> LinOp {
        self.compose(rhs)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MatrixJson {
    pub dims: [usize; 2],
    pub entries: Vec<(usize, usize, RatFunc)>,
}

impl From<&LinOp> for MatrixJson {
    fn from(op: &LinOp) -> Self {
        Self { dims: [op.rows(), op.cols()], entries: op.entries() }
    }
}

impl From<&Vector> for MatrixJson {
    fn from(v: &Vector) -> Self {
        Self { dims: [v.dim(), 1], entries: v.entries().map(|(i, c)| (i, 0, c.clone())).collect() }
    }
}

impl From<&MatrixJson> for LinOp {
    fn from(j: &MatrixJson) -> Self {
        LinOp::from_entries(j.dims[0], j.dims[1], j.entries.iter().cloned())
    }
}

impl LinOp {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatrixJson::from(self)).expect("serializable")
    }
}

impl Vector {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatrixJson::from(self)).expect("serializable")
    }
}
