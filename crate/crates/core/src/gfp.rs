//! Arithmetic in the prime field F_p and dense linear algebra on subspaces of F_p^n.
//!
//! Subspaces are always stored in reduced row echelon form, so two subspaces of the same
//! ambient space are equal exactly when their stored rows are equal. Over F_2 the rows are
//! bit-packed into `u64` limbs; for odd primes they are plain byte rows.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SUPPORTED_PRIMES: [u8; 4] = [2, 3, 5, 7];

/// A prime field F_p with p in {2, 3, 5, 7}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    p: u8,
}

impl Field {
    pub fn new(p: u32) -> Result<Field> {
        match p {
            2 | 3 | 5 | 7 => Ok(Field { p: p as u8 }),
            _ => Err(Error::UnsupportedPrime(p)),
        }
    }

    #[inline]
    pub fn p(self) -> u8 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        (self.p - a) % self.p
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn pow(self, a: u8, mut e: u64) -> u8 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u8) -> Option<u8> {
        let a = a % self.p;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.p as i64) as u8
    }

    pub fn element(self, value: i64) -> FieldElement {
        FieldElement { value: self.reduce(value), p: self.p }
    }

    pub fn check_same(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ModulusMismatch { left: self.p, right: other.p })
        }
    }
}

/// A residue in [0, p). Arithmetic between elements of different moduli panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u8,
    p: u8,
}

impl FieldElement {
    pub fn value(self) -> u8 {
        self.value
    }

    pub fn field(self) -> Field {
        Field { p: self.p }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<FieldElement> {
        self.field().inv(self.value).map(|value| FieldElement { value, p: self.p })
    }

    pub fn pow(self, e: u64) -> FieldElement {
        FieldElement { value: self.field().pow(self.value, e), p: self.p }
    }

    fn same(self, other: FieldElement) -> Field {
        assert_eq!(self.p, other.p, "mixing moduli {} and {}", self.p, other.p);
        self.field()
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        let f = self.same(rhs);
        FieldElement { value: f.add(self.value, rhs.value), p: self.p }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        let f = self.same(rhs);
        FieldElement { value: f.sub(self.value, rhs.value), p: self.p }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        let f = self.same(rhs);
        FieldElement { value: f.mul(self.value, rhs.value), p: self.p }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { value: self.field().neg(self.value), p: self.p }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A coordinate vector in F_p^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coords: Vec<u8>,
}

impl Vector {
    /// Builds a vector, reducing every coordinate mod p.
    pub fn new(field: Field, coords: Vec<u8>) -> Vector {
        let coords = coords.into_iter().map(|c| c % field.p).collect();
        Vector { field, coords }
    }

    pub fn from_i64(field: Field, coords: &[i64]) -> Vector {
        Vector { field, coords: coords.iter().map(|&c| field.reduce(c)).collect() }
    }

    pub fn zero(field: Field, n: usize) -> Vector {
        Vector { field, coords: vec![0; n] }
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Vector {
        let mut coords = vec![0; n];
        coords[i] = 1;
        Vector { field, coords }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u8> {
        self.coords
    }

    pub fn get(&self, i: usize) -> FieldElement {
        FieldElement { value: self.coords[i], p: self.field.p }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &Vector) -> Result<()> {
        self.field.check_same(other.field)?;
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Vector) -> Result<Vector> {
        self.check(other)?;
        let mut out = self.clone();
        add_scaled(self.field, &mut out.coords, 1, &other.coords);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Vector) -> Result<Vector> {
        self.check(other)?;
        let mut out = self.clone();
        add_scaled(self.field, &mut out.coords, self.field.neg(1), &other.coords);
        Ok(out)
    }

    pub fn scale(&self, c: u8) -> Vector {
        let f = self.field;
        Vector { field: f, coords: self.coords.iter().map(|&x| f.mul(x, c)).collect() }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: u8, other: &Vector) -> Result<()> {
        self.check(other)?;
        add_scaled(self.field, &mut self.coords, c, &other.coords);
        Ok(())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `dst += c * src` on raw coordinates.
#[inline]
pub fn add_scaled(field: Field, dst: &mut [u8], c: u8, src: &[u8]) {
    let c = c % field.p;
    if c == 0 {
        return;
    }
    let p = field.p as u16;
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = ((*d as u16 + c as u16 * s as u16) % p) as u8;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Rows {
    Packed(Vec<Vec<u64>>),
    Bytes(Vec<Vec<u8>>),
}

/// A subspace of F_p^n held as its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    pivots: Vec<usize>,
    rows: Rows,
}

#[inline]
fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn pack(v: &[u8]) -> Vec<u64> {
    let mut out = vec![0u64; words(v.len())];
    for (i, &c) in v.iter().enumerate() {
        if c & 1 == 1 {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

fn unpack(w: &[u64], n: usize) -> Vec<u8> {
    (0..n).map(|i| ((w[i / 64] >> (i % 64)) & 1) as u8).collect()
}

#[inline]
fn bit(w: &[u64], i: usize) -> bool {
    (w[i / 64] >> (i % 64)) & 1 == 1
}

fn leading_bit(w: &[u64]) -> Option<usize> {
    w.iter().enumerate().find(|(_, &x)| x != 0).map(|(k, &x)| k * 64 + x.trailing_zeros() as usize)
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        let rows = if field.p == 2 { Rows::Packed(Vec::new()) } else { Rows::Bytes(Vec::new()) };
        Subspace { field, ambient, pivots: Vec::new(), rows }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for i in 0..ambient {
            s.insert_unit(i);
        }
        s
    }

    /// Canonical RREF basis of the row span of `rows` in F_p^`ambient`.
    pub fn rref(field: Field, ambient: usize, rows: &[Vector]) -> Result<Subspace> {
        let mut s = Subspace::zero(field, ambient);
        for r in rows {
            s.insert(r)?;
        }
        Ok(s)
    }

    pub fn from_coords<'a, I>(field: Field, ambient: usize, rows: I) -> Subspace
    where
        I: IntoIterator<Item = &'a [u8]>,
    {
        let mut s = Subspace::zero(field, ambient);
        for r in rows {
            s.insert_coords(r);
        }
        s
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The `k`-th RREF basis row as raw coordinates.
    pub fn row(&self, k: usize) -> Vec<u8> {
        match &self.rows {
            Rows::Packed(r) => unpack(&r[k], self.ambient),
            Rows::Bytes(r) => r[k].clone(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.rank()).map(|k| self.row(k)).collect()
    }

    pub fn basis(&self) -> Vec<Vector> {
        (0..self.rank()).map(|k| Vector { field: self.field, coords: self.row(k) }).collect()
    }

    fn check_vec(&self, v: &Vector) -> Result<()> {
        self.field.check_same(v.field)?;
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(())
    }

    fn check_space(&self, other: &Subspace) -> Result<()> {
        self.field.check_same(other.field)?;
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn insert(&mut self, v: &Vector) -> Result<bool> {
        self.check_vec(v)?;
        Ok(self.insert_coords(&v.coords))
    }

    fn insert_unit(&mut self, i: usize) {
        let mut v = vec![0u8; self.ambient];
        v[i] = 1;
        self.insert_coords(&v);
    }

    /// Adds `v` to the span, keeping the basis in RREF. Returns whether the rank grew.
    /// Panics if `v.len()` differs from the ambient dimension.
    pub fn insert_coords(&mut self, v: &[u8]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let field = self.field;
        match &mut self.rows {
            Rows::Packed(rows) => {
                let mut w = pack(v);
                for (r, &piv) in rows.iter().zip(&self.pivots) {
                    if bit(&w, piv) {
                        for (a, b) in w.iter_mut().zip(r) {
                            *a ^= b;
                        }
                    }
                }
                let Some(lead) = leading_bit(&w) else { return false };
                for r in rows.iter_mut() {
                    if bit(r, lead) {
                        for (a, b) in r.iter_mut().zip(&w) {
                            *a ^= b;
                        }
                    }
                }
                let pos = self.pivots.partition_point(|&q| q < lead);
                self.pivots.insert(pos, lead);
                rows.insert(pos, w);
                true
            }
            Rows::Bytes(rows) => {
                let mut w: Vec<u8> = v.iter().map(|&c| c % field.p).collect();
                for (r, &piv) in rows.iter().zip(&self.pivots) {
                    let c = w[piv];
                    if c != 0 {
                        add_scaled(field, &mut w[piv..], field.neg(c), &r[piv..]);
                    }
                }
                let Some(lead) = w.iter().position(|&c| c != 0) else { return false };
                let inv = field.inv(w[lead]).unwrap();
                for c in w[lead..].iter_mut() {
                    *c = field.mul(*c, inv);
                }
                for r in rows.iter_mut() {
                    let c = r[lead];
                    if c != 0 {
                        add_scaled(field, &mut r[lead..], field.neg(c), &w[lead..]);
                    }
                }
                let pos = self.pivots.partition_point(|&q| q < lead);
                self.pivots.insert(pos, lead);
                rows.insert(pos, w);
                true
            }
        }
    }

    /// Reduces `v` in place against the basis; the result is zero iff `v` was in the span.
    pub fn reduce_coords(&self, v: &mut [u8]) {
        let field = self.field;
        match &self.rows {
            Rows::Packed(rows) => {
                for (r, &piv) in rows.iter().zip(&self.pivots) {
                    if v[piv] & 1 == 1 {
                        let row = unpack(r, self.ambient);
                        for (a, b) in v.iter_mut().zip(row) {
                            *a ^= b;
                        }
                    }
                }
            }
            Rows::Bytes(rows) => {
                for (r, &piv) in rows.iter().zip(&self.pivots) {
                    let c = v[piv] % field.p;
                    if c != 0 {
                        add_scaled(field, &mut v[piv..], field.neg(c), &r[piv..]);
                    }
                }
            }
        }
    }

    pub fn contains_coords(&self, v: &[u8]) -> bool {
        if self.is_full() {
            return true;
        }
        match &self.rows {
            Rows::Packed(rows) => {
                let mut w = pack(v);
                for (r, &piv) in rows.iter().zip(&self.pivots) {
                    if bit(&w, piv) {
                        for (a, b) in w.iter_mut().zip(r) {
                            *a ^= b;
                        }
                    }
                }
                w.iter().all(|&x| x == 0)
            }
            Rows::Bytes(_) => {
                let mut w = v.to_vec();
                self.reduce_coords(&mut w);
                w.iter().all(|&c| c % self.field.p == 0)
            }
        }
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        self.check_vec(v)?;
        Ok(self.contains_coords(&v.coords))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_space(other)?;
        let mut out = self.clone();
        out.absorb(other);
        Ok(out)
    }

    /// In-place `self += other`; ambient spaces must agree.
    pub fn absorb(&mut self, other: &Subspace) {
        assert_eq!(self.ambient, other.ambient);
        for k in 0..other.rank() {
            self.insert_coords(&other.row(k));
        }
    }

    /// Intersection by the Zassenhaus construction: row-reduce [a | a] over [b | 0].
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_space(other)?;
        let n = self.ambient;
        let mut big = Subspace::zero(self.field, 2 * n);
        for r in self.rows() {
            let mut w = r.clone();
            w.extend_from_slice(&r);
            big.insert_coords(&w);
        }
        for r in other.rows() {
            let mut w = r;
            w.extend(std::iter::repeat_n(0, n));
            big.insert_coords(&w);
        }
        let mut out = Subspace::zero(self.field, n);
        for (k, &piv) in big.pivots.clone().iter().enumerate() {
            if piv >= n {
                out.insert_coords(&big.row(k)[n..]);
            }
        }
        Ok(out)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.field == other.field
            && (0..self.rank()).all(|k| other.contains_coords(&self.row(k)))
    }

    /// Coefficients of `v` in the RREF basis; `v` must lie in the subspace.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        if !self.contains_coords(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&q| v[q] % self.field.p).collect())
    }

    /// Linear combination of basis rows with the given coefficients.
    pub fn combine(&self, coeffs: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.ambient];
        for (k, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                add_scaled(self.field, &mut out, c, &self.row(k));
            }
        }
        out
    }

    /// Every element of the subspace (p^rank of them), in a fixed order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        let p = self.field.p as u64;
        let r = self.rank() as u32;
        let rows = self.rows();
        (0..p.pow(r)).map(move |mut idx| {
            let mut out = vec![0u8; self.ambient];
            for row in &rows {
                let c = (idx % p) as u8;
                idx /= p;
                add_scaled(self.field, &mut out, c, row);
            }
            out
        })
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (k, v) in self.basis().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Dense matrix acting on row vectors from the right: `v -> v * M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<u8>>) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.into_iter().map(|c| c % field.p));
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v % self.field.p;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u8] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.field.check_same(other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u8; other.cols];
            for k in 0..self.cols {
                let c = self.get(i, k);
                if c != 0 {
                    add_scaled(self.field, &mut acc, c, other.row(k));
                }
            }
            out.row_mut(i).copy_from_slice(&acc);
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn add_scaled(&self, c: u8, other: &Matrix) -> Result<Matrix> {
        self.field.check_same(other.field)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.data.len(), found: other.data.len() });
        }
        let mut out = self.clone();
        add_scaled(self.field, &mut out.data, c, &other.data);
        Ok(out)
    }

    /// `v * M`
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        let mut acc = vec![0u8; self.cols];
        for (k, &c) in v.iter().enumerate() {
            if c != 0 {
                add_scaled(self.field, &mut acc, c, self.row(k));
            }
        }
        acc
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_coords(self.field, self.cols, (0..self.rows).map(|i| self.row(i)))
    }

    pub fn rank(&self) -> usize {
        self.row_space().rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// `{ v : v * M = 0 }`, computed by reducing [M | I].
    pub fn left_kernel(&self) -> Subspace {
        let (r, c) = (self.rows, self.cols);
        let mut big = Subspace::zero(self.field, c + r);
        for i in 0..r {
            let mut w = self.row(i).to_vec();
            w.extend((0..r).map(|j| u8::from(i == j)));
            big.insert_coords(&w);
        }
        let mut out = Subspace::zero(self.field, r);
        for (k, &piv) in big.pivots().iter().enumerate() {
            if piv >= c {
                out.insert_coords(&big.row(k)[c..]);
            }
        }
        out
    }

    /// Least k with M^k = 0, or `None` if M is not nilpotent.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let mut acc = Matrix::identity(self.field, self.rows);
        for k in 0..=self.rows {
            if acc.is_zero() {
                return Some(k);
            }
            acc = acc.mul(self).ok()?;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    fn v(field: Field, c: &[u8]) -> Vector {
        Vector::new(field, c.to_vec())
    }

    #[test]
    fn field_arithmetic() {
        let f7 = f(7);
        assert_eq!(f7.inv(3), Some(5));
        assert_eq!(f7.inv(0), None);
        assert_eq!(f7.pow(3, 6), 1);
        let a = f7.element(-1);
        assert_eq!(a.value(), 6);
        assert_eq!((a * a).value(), 1);
        assert!(Field::new(11).is_err());
        assert!(Field::new(4).is_err());
    }

    #[test]
    #[should_panic(expected = "mixing moduli")]
    fn mixing_moduli_panics() {
        let _ = f(2).element(1) + f(3).element(1);
    }

    #[test]
    fn rref_two_rows_over_f2() {
        let f2 = f(2);
        let s = Subspace::rref(f2, 3, &[v(f2, &[1, 1, 0]), v(f2, &[0, 1, 1])]).unwrap();
        assert_eq!(s.rows(), vec![vec![1, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn rref_empty_is_zero() {
        let s = Subspace::rref(f(3), 4, &[]).unwrap();
        assert_eq!(s.rank(), 0);
        assert!(s.is_zero());
    }

    #[test]
    fn rref_rank_one_over_f3() {
        let f3 = f(3);
        let rows = [v(f3, &[2, 1]), v(f3, &[1, 2])];
        // oracle: enumerate all 9 combinations a*r0 + b*r1
        let mut seen = std::collections::HashSet::new();
        for a in 0..3u8 {
            for b in 0..3u8 {
                let mut x = vec![0u8; 2];
                add_scaled(f3, &mut x, a, rows[0].coords());
                add_scaled(f3, &mut x, b, rows[1].coords());
                seen.insert(x);
            }
        }
        assert_eq!(seen.len(), 3);
        let s = Subspace::rref(f3, 2, &rows).unwrap();
        assert_eq!(3usize.pow(s.rank() as u32), seen.len());
        assert_eq!(s.rows(), vec![vec![1, 2]]);
    }

    #[test]
    fn rref_mixed_lengths_rejected() {
        let f2 = f(2);
        let err = Subspace::rref(f2, 3, &[v(f2, &[1, 0, 0]), v(f2, &[1, 0])]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn sum_cases() {
        let f5 = f(5);
        let a = Subspace::rref(f5, 3, &[v(f5, &[1, 2, 3])]).unwrap();
        let z = Subspace::zero(f5, 3);
        assert_eq!(a.sum(&z).unwrap(), a);
        assert_eq!(a.sum(&a).unwrap(), a);
        let e0 = Subspace::rref(f5, 3, &[v(f5, &[1, 0, 0])]).unwrap();
        let e1 = Subspace::rref(f5, 3, &[v(f5, &[0, 1, 0])]).unwrap();
        assert_eq!(e0.sum(&e1).unwrap().rank(), 2);
        assert!(a.sum(&Subspace::zero(f5, 2)).is_err());
    }

    #[test]
    fn intersect_cases() {
        let f2 = f(2);
        let a = Subspace::full(f2, 2);
        let b = Subspace::rref(f2, 2, &[v(f2, &[1, 1])]).unwrap();
        // oracle: elements common to both spans
        let ea: std::collections::HashSet<_> = a.elements().collect();
        let common: Vec<_> = b.elements().filter(|x| ea.contains(x)).collect();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, b);
        assert_eq!(common.len(), 2);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(a.intersect(&Subspace::zero(f2, 2)).unwrap().is_zero());
    }

    #[test]
    fn contains_cases() {
        let f3 = f(3);
        let a = Subspace::rref(f3, 3, &[v(f3, &[1, 0, 0]), v(f3, &[0, 1, 0])]).unwrap();
        assert!(a.contains(&Vector::zero(f3, 3)).unwrap());
        assert!(!a.contains(&v(f3, &[1, 1, 1])).unwrap());
        let w = v(f3, &[2, 1, 1]);
        let s = Subspace::rref(f3, 3, std::slice::from_ref(&w)).unwrap();
        assert!(s.contains(&w).unwrap());
        assert!(s.contains(&Vector::zero(f3, 2)).is_err());
    }

    #[test]
    fn packed_rows_past_one_limb() {
        let f2 = f(2);
        let n = 130;
        let mut a = vec![0u8; n];
        a[0] = 1;
        a[129] = 1;
        let mut b = vec![0u8; n];
        b[64] = 1;
        b[129] = 1;
        let s = Subspace::from_coords(f2, n, [a.as_slice(), b.as_slice()]);
        let mut c = vec![0u8; n];
        c[0] = 1;
        c[64] = 1;
        assert!(s.contains_coords(&c));
        assert_eq!(s.pivots(), &[0, 64]);
    }

    #[test]
    fn left_kernel_and_nilpotency() {
        let f3 = f(3);
        let m = Matrix::from_rows(f3, 2, vec![vec![1, 2], vec![2, 1]]).unwrap();
        let k = m.left_kernel();
        assert_eq!(k.rank(), 1);
        for x in k.elements() {
            assert!(m.apply(&x).iter().all(|&c| c == 0));
        }
        let n = Matrix::from_rows(f3, 3, vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
        assert_eq!(n.nilpotency_index(), Some(3));
        assert_eq!(m.nilpotency_index(), None);
        assert!(!m.is_invertible());
        assert!(Matrix::identity(f3, 4).is_invertible());
    }
}
