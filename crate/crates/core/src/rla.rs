//! Finite-dimensional restricted Lie algebras given by structure constants and p-map images
//! of the basis.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gfp::{add_scaled, Field, Matrix, Subspace, Vector};

/// Elements of L are coordinate vectors in the declared basis.
pub type LieElement = Vector;

/// Above this many elements, p-th power subalgebras are generated from basis powers only.
pub const POWER_ENUMERATION_CAP: u64 = 6561;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    Jacobi { i: usize, j: usize, k: usize },
    Restrictedness { i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Jacobi { i, j, k } => {
                write!(f, "Jacobi identity fails on basis triple ({i}, {j}, {k})")
            }
            Violation::Restrictedness { i } => {
                write!(f, "ad(b_{i}^[p]) differs from (ad b_{i})^p")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    LowerCentral,
    Derived,
    RestrictedPower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesVerdict {
    /// Class or length: for the lower central series the least c with term c+1 zero, for the
    /// derived series the least d with term d zero.
    Terminates(usize),
    /// The chain stabilized at a nonzero subspace of this dimension.
    Stabilizes { dim: usize },
}

impl SeriesVerdict {
    pub fn value(self) -> Option<usize> {
        match self {
            SeriesVerdict::Terminates(v) => Some(v),
            SeriesVerdict::Stabilizes { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Descending terms, ending with the zero subspace or the first repeated term.
    pub chain: Vec<Subspace>,
    pub verdict: SeriesVerdict,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::rank).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exponent {
    Finite(u32),
    NotPNilpotent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedLieAlgebra {
    field: Field,
    names: Vec<String>,
    /// Full n*n table; entry i*n+j holds [b_i, b_j].
    bracket: Vec<Vec<u8>>,
    pmap: Vec<Vec<u8>>,
}

/// Collects structure constants with i < j; the opposite entries and the diagonal follow.
pub struct AlgebraBuilder {
    field: Field,
    names: Vec<String>,
    bracket: Vec<Vec<u8>>,
    pmap: Vec<Vec<u8>>,
}

impl AlgebraBuilder {
    pub fn bracket(&mut self, i: usize, j: usize, value: &[i64]) -> Result<&mut Self> {
        let n = self.names.len();
        if i >= j || j >= n {
            return Err(Error::Invalid(format!("bracket entry ({i}, {j}) must satisfy i < j < {n}")));
        }
        self.check_len(value.len())?;
        let v: Vec<u8> = value.iter().map(|&c| self.field.reduce(c)).collect();
        let neg: Vec<u8> = v.iter().map(|&c| self.field.neg(c)).collect();
        self.bracket[i * n + j] = v;
        self.bracket[j * n + i] = neg;
        Ok(self)
    }

    pub fn pmap(&mut self, i: usize, value: &[i64]) -> Result<&mut Self> {
        if i >= self.names.len() {
            return Err(Error::Invalid(format!("pmap index {i} out of range")));
        }
        self.check_len(value.len())?;
        self.pmap[i] = value.iter().map(|&c| self.field.reduce(c)).collect();
        Ok(self)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.names.len() {
            return Err(Error::DimensionMismatch { expected: self.names.len(), found: len });
        }
        Ok(())
    }

    /// Builds without checking the axioms; see [`RestrictedLieAlgebra::validate`].
    pub fn build_unchecked(&self) -> RestrictedLieAlgebra {
        RestrictedLieAlgebra {
            field: self.field,
            names: self.names.clone(),
            bracket: self.bracket.clone(),
            pmap: self.pmap.clone(),
        }
    }

    pub fn build(&self) -> Result<RestrictedLieAlgebra> {
        let l = self.build_unchecked();
        let v = l.validate();
        if v.is_empty() {
            Ok(l)
        } else {
            Err(Error::Axiom(v))
        }
    }
}

impl RestrictedLieAlgebra {
    pub fn builder<S: Into<String>>(field: Field, names: impl IntoIterator<Item = S>) -> AlgebraBuilder {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        AlgebraBuilder { field, names, bracket: vec![vec![0; n]; n * n], pmap: vec![vec![0; n]; n] }
    }

    /// Abelian algebra of dimension `n` with zero p-map.
    pub fn abelian(field: Field, n: usize) -> RestrictedLieAlgebra {
        Self::builder(field, (0..n).map(|i| format!("a{i}"))).build_unchecked()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn p(&self) -> u8 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[u8] {
        &self.bracket[i * self.dim() + j]
    }

    pub fn basis_pmap(&self, i: usize) -> &[u8] {
        &self.pmap[i]
    }

    pub fn basis_element(&self, i: usize) -> LieElement {
        Vector::unit(self.field, self.dim(), i)
    }

    pub fn element(&self, coords: &[i64]) -> Result<LieElement> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: coords.len() });
        }
        Ok(Vector::from_i64(self.field, coords))
    }

    fn check(&self, u: &LieElement) -> Result<()> {
        self.field.check_same(u.field())?;
        if u.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: u.len() });
        }
        Ok(())
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn bracket_coords(&self, u: &[u8], v: &[u8]) -> Vec<u8> {
        let n = self.dim();
        let mut out = vec![0u8; n];
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b == 0 || i == j {
                    continue;
                }
                add_scaled(self.field, &mut out, self.field.mul(a, b), &self.bracket[i * n + j]);
            }
        }
        out
    }

    pub fn bracket(&self, u: &LieElement, v: &LieElement) -> Result<LieElement> {
        self.check(u)?;
        self.check(v)?;
        Ok(Vector::new(self.field, self.bracket_coords(u.coords(), v.coords())))
    }

    /// Matrix of `ad u = [u, -]` acting on row vectors: row i is [u, b_i].
    pub fn ad_matrix_coords(&self, u: &[u8]) -> Matrix {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                let mut e = vec![0u8; n];
                e[i] = 1;
                self.bracket_coords(u, &e)
            })
            .collect();
        Matrix::from_rows(self.field, n, rows).expect("square ad matrix")
    }

    pub fn ad_matrix(&self, u: &LieElement) -> Result<Matrix> {
        self.check(u)?;
        Ok(self.ad_matrix_coords(u.coords()))
    }

    /// Jacobi identity on every basis triple plus ad(b_i^[p]) = (ad b_i)^p for every i.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        let e = |i: usize| {
            let mut v = vec![0u8; n];
            v[i] = 1;
            v
        };
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let mut acc = self.bracket_coords(&x, &self.bracket_coords(&y, &z));
                    let t2 = self.bracket_coords(&y, &self.bracket_coords(&z, &x));
                    let t3 = self.bracket_coords(&z, &self.bracket_coords(&x, &y));
                    add_scaled(self.field, &mut acc, 1, &t2);
                    add_scaled(self.field, &mut acc, 1, &t3);
                    if acc.iter().any(|&c| c != 0) {
                        out.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            let lhs = self.ad_matrix_coords(&self.pmap[i]);
            let rhs = self.ad_matrix_coords(&e(i)).pow(self.p() as u64).expect("square");
            if lhs != rhs {
                out.push(Violation::Restrictedness { i });
            }
        }
        out
    }

    /// (x+y)^[p] from x, y and their p-th powers, by the Jacobson formula: the extra terms
    /// s_i satisfy i*s_i = coefficient of t^(i-1) in ad(tx+y)^(p-1)(x).
    fn jacobson(&self, x: &[u8], xp: &[u8], y: &[u8], yp: &[u8]) -> Vec<u8> {
        let p = self.p() as usize;
        let n = self.dim();
        let f = self.field;
        let mut out = xp.to_vec();
        add_scaled(f, &mut out, 1, yp);
        // polynomial in t with vector coefficients, degree < p
        let mut poly: Vec<Vec<u8>> = vec![vec![0u8; n]; p];
        poly[0] = x.to_vec();
        for _ in 0..p - 1 {
            let mut next = vec![vec![0u8; n]; p];
            for d in 0..p {
                if poly[d].iter().all(|&c| c == 0) {
                    continue;
                }
                let ty = self.bracket_coords(y, &poly[d]);
                add_scaled(f, &mut next[d], 1, &ty);
                if d + 1 < p {
                    let tx = self.bracket_coords(x, &poly[d]);
                    add_scaled(f, &mut next[d + 1], 1, &tx);
                }
            }
            poly = next;
        }
        for i in 1..p {
            let inv = f.inv(i as u8).expect("i < p");
            add_scaled(f, &mut out, inv, &poly[i - 1]);
        }
        out
    }

    pub fn pmap_coords(&self, u: &[u8]) -> Vec<u8> {
        let n = self.dim();
        let f = self.field;
        let mut acc = vec![0u8; n];
        let mut acc_p = vec![0u8; n];
        for (i, &c) in u.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut y = vec![0u8; n];
            y[i] = c;
            // (c b)^[p] = c^p b^[p] = c b^[p] over F_p
            let mut yp = vec![0u8; n];
            add_scaled(f, &mut yp, c, &self.pmap[i]);
            acc_p = self.jacobson(&acc, &acc_p, &y, &yp);
            add_scaled(f, &mut acc, 1, &y);
        }
        acc_p
    }

    pub fn pmap(&self, u: &LieElement) -> Result<LieElement> {
        self.check(u)?;
        Ok(Vector::new(self.field, self.pmap_coords(u.coords())))
    }

    /// x^{[p]^j}
    pub fn iterated_pmap_coords(&self, u: &[u8], j: u32) -> Vec<u8> {
        let mut v = u.to_vec();
        for _ in 0..j {
            if v.iter().all(|&c| c == 0) {
                break;
            }
            v = self.pmap_coords(&v);
        }
        v
    }

    /// [A, B]
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut out = self.zero_subspace();
        let brows = b.rows();
        for ra in a.rows() {
            for rb in &brows {
                out.insert_coords(&self.bracket_coords(&ra, rb));
                if out.is_full() {
                    return out;
                }
            }
        }
        out
    }

    pub fn lower_central_series(&self) -> SeriesReport {
        let whole = self.whole();
        let mut chain = vec![whole.clone()];
        loop {
            let last = chain.last().unwrap();
            if last.is_zero() {
                let c = chain.len() - 1;
                return SeriesReport {
                    kind: SeriesKind::LowerCentral,
                    chain,
                    verdict: SeriesVerdict::Terminates(c),
                };
            }
            let next = self.bracket_span(last, &whole);
            if &next == last {
                let dim = next.rank();
                return SeriesReport {
                    kind: SeriesKind::LowerCentral,
                    chain,
                    verdict: SeriesVerdict::Stabilizes { dim },
                };
            }
            chain.push(next);
        }
    }

    pub fn derived_series(&self) -> SeriesReport {
        let mut chain = vec![self.whole()];
        loop {
            let last = chain.last().unwrap();
            if last.is_zero() {
                let d = chain.len() - 1;
                return SeriesReport {
                    kind: SeriesKind::Derived,
                    chain,
                    verdict: SeriesVerdict::Terminates(d),
                };
            }
            let next = self.bracket_span(last, last);
            if &next == last {
                let dim = next.rank();
                return SeriesReport {
                    kind: SeriesKind::Derived,
                    chain,
                    verdict: SeriesVerdict::Stabilizes { dim },
                };
            }
            chain.push(next);
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|v| v.iter().all(|&c| c == 0))
    }

    pub fn is_nilpotent(&self) -> bool {
        matches!(self.lower_central_series().verdict, SeriesVerdict::Terminates(_))
    }

    /// L' = [L, L]
    pub fn derived_subalgebra(&self) -> Subspace {
        let w = self.whole();
        self.bracket_span(&w, &w)
    }

    /// L'_p, the restricted subalgebra generated by L'.
    pub fn derived_subalgebra_p(&self) -> Subspace {
        self.restricted_closure(&self.derived_subalgebra())
    }

    /// Least subspace containing `s` closed under brackets and p-th powers.
    pub fn restricted_closure(&self, s: &Subspace) -> Subspace {
        let mut v = s.clone();
        loop {
            let before = v.rank();
            let rows = v.rows();
            for (a, ra) in rows.iter().enumerate() {
                v.insert_coords(&self.pmap_coords(ra));
                for rb in &rows[a + 1..] {
                    v.insert_coords(&self.bracket_coords(ra, rb));
                }
            }
            if v.rank() == before {
                return v;
            }
        }
    }

    /// S^{[p]^j}: the restricted subalgebra generated by x^{[p]^j} for x in `s`. Every element
    /// is enumerated when |S| <= [`POWER_ENUMERATION_CAP`]; otherwise only basis powers are used.
    pub fn power_subalgebra(&self, s: &Subspace, j: u32) -> Subspace {
        let mut gens = self.zero_subspace();
        if j == 0 {
            gens = s.clone();
        } else if Self::power_enumeration_exact(s) {
            for x in s.elements() {
                gens.insert_coords(&self.iterated_pmap_coords(&x, j));
            }
        } else {
            for r in s.rows() {
                gens.insert_coords(&self.iterated_pmap_coords(&r, j));
            }
        }
        self.restricted_closure(&gens)
    }

    pub fn power_enumeration_exact(s: &Subspace) -> bool {
        (s.field().p() as u64).checked_pow(s.rank() as u32).is_some_and(|c| c <= POWER_ENUMERATION_CAP)
    }

    /// Least s with x^{[p]^s} = 0.
    pub fn exponent_coords(&self, x: &[u8]) -> Exponent {
        let mut seen = HashSet::new();
        let mut v = x.to_vec();
        let mut s = 0u32;
        loop {
            if v.iter().all(|&c| c == 0) {
                return Exponent::Finite(s);
            }
            if !seen.insert(v.clone()) {
                return Exponent::NotPNilpotent;
            }
            v = self.pmap_coords(&v);
            s += 1;
        }
    }

    pub fn exponent(&self, x: &LieElement) -> Result<Exponent> {
        self.check(x)?;
        Ok(self.exponent_coords(x.coords()))
    }

    /// Whether the iterated p-th power subalgebras of the restricted closure of `s` reach 0.
    pub fn is_p_nilpotent_subspace(&self, s: &Subspace) -> bool {
        matches!(self.restricted_power_series(s).verdict, SeriesVerdict::Terminates(_))
    }

    /// Chain <S>_p ⊇ (<S>_p)^[p] ⊇ ... until zero or stabilization.
    pub fn restricted_power_series(&self, s: &Subspace) -> SeriesReport {
        let mut chain = vec![self.restricted_closure(s)];
        loop {
            let last = chain.last().unwrap();
            if last.is_zero() {
                let d = chain.len() - 1;
                return SeriesReport {
                    kind: SeriesKind::RestrictedPower,
                    chain,
                    verdict: SeriesVerdict::Terminates(d),
                };
            }
            let next = self.power_subalgebra(last, 1);
            if &next == last {
                let dim = next.rank();
                return SeriesReport {
                    kind: SeriesKind::RestrictedPower,
                    chain,
                    verdict: SeriesVerdict::Stabilizes { dim },
                };
            }
            chain.push(next);
        }
    }

    /// Z(L) = { v : [v, b_i] = 0 for all i }
    pub fn centre(&self) -> Subspace {
        let n = self.dim();
        let rows = (0..n).map(|i| (0..n).flat_map(|j| self.basis_bracket(i, j).to_vec()).collect()).collect();
        Matrix::from_rows(self.field, n * n, rows).expect("rows have n*n entries").left_kernel()
    }

    pub fn is_central(&self, s: &Subspace) -> bool {
        self.bracket_span(s, &self.whole()).is_zero()
    }

    /// The restricted subalgebra `s` as an algebra in its own right, on its RREF basis.
    pub fn restrict_to(&self, s: &Subspace) -> Result<RestrictedLieAlgebra> {
        if &self.restricted_closure(s) != s {
            return Err(Error::Invalid("subspace is not a restricted subalgebra".into()));
        }
        let rows = s.rows();
        let r = rows.len();
        let names: Vec<String> = (0..r).map(|k| format!("s{k}")).collect();
        let mut b = Self::builder(self.field, names);
        let coords = |v: &[u8]| -> Vec<i64> {
            s.coordinates(v).expect("closed subspace").into_iter().map(i64::from).collect()
        };
        for a in 0..r {
            for c in (a + 1)..r {
                b.bracket(a, c, &coords(&self.bracket_coords(&rows[a], &rows[c])))?;
            }
            b.pmap(a, &coords(&self.pmap_coords(&rows[a])))?;
        }
        Ok(b.build_unchecked())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    /// [x,y] = z central, z^[p] = `zp` * z
    pub(crate) fn heisenberg(p: u32, zp: i64) -> RestrictedLieAlgebra {
        let mut b = RestrictedLieAlgebra::builder(f(p), ["x", "y", "z"]);
        b.bracket(0, 1, &[0, 0, 1]).unwrap();
        b.pmap(2, &[0, 0, zp]).unwrap();
        b.build().unwrap()
    }

    fn klein() -> RestrictedLieAlgebra {
        let mut b = RestrictedLieAlgebra::builder(f(2), ["x", "y"]);
        b.bracket(0, 1, &[1, 0]).unwrap();
        b.pmap(1, &[0, 1]).unwrap();
        b.build().unwrap()
    }

    fn example_six_one() -> RestrictedLieAlgebra {
        let mut b = RestrictedLieAlgebra::builder(f(2), ["x", "y", "z", "v", "w"]);
        b.bracket(0, 1, &[0, 0, 1, 0, 0]).unwrap();
        b.pmap(2, &[0, 0, 0, 1, 0]).unwrap();
        b.pmap(3, &[0, 0, 0, 0, 1]).unwrap();
        b.build().unwrap()
    }

    fn span(l: &RestrictedLieAlgebra, rows: &[&[i64]]) -> Subspace {
        let vs: Vec<Vector> = rows.iter().map(|r| l.element(r).unwrap()).collect();
        Subspace::rref(l.field(), l.dim(), &vs).unwrap()
    }

    #[test]
    fn validate_cases() {
        assert!(RestrictedLieAlgebra::abelian(f(3), 3).validate().is_empty());
        assert!(heisenberg(2, 0).validate().is_empty());
        let mut b = RestrictedLieAlgebra::builder(f(2), ["x", "y", "z"]);
        b.bracket(0, 1, &[0, 0, 1]).unwrap();
        b.pmap(0, &[0, 1, 0]).unwrap();
        let v = b.build_unchecked().validate();
        assert_eq!(v, vec![Violation::Restrictedness { i: 0 }]);
        assert!(b.build().is_err());
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [x,y]=y, [y,z]=x, [x,z]=0 breaks Jacobi on (x,y,z)
        let mut b = RestrictedLieAlgebra::builder(f(3), ["x", "y", "z"]);
        b.bracket(0, 1, &[0, 1, 0]).unwrap();
        b.bracket(1, 2, &[1, 0, 0]).unwrap();
        let v = b.build_unchecked().validate();
        assert!(v.contains(&Violation::Jacobi { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn builder_rejects_diagonal_and_reversed() {
        let mut b = RestrictedLieAlgebra::builder(f(2), ["x", "y"]);
        assert!(b.bracket(0, 0, &[0, 0]).is_err());
        assert!(b.bracket(1, 0, &[0, 0]).is_err());
    }

    #[test]
    fn bracket_examples() {
        let h = heisenberg(2, 0);
        let (x, y, z) = (h.basis_element(0), h.basis_element(1), h.basis_element(2));
        assert!(h.bracket(&x, &x).unwrap().is_zero());
        assert_eq!(h.bracket(&x, &y).unwrap(), z);
        let s = x.try_add(&y).unwrap();
        assert_eq!(h.bracket(&s, &y).unwrap(), z);
        let other = RestrictedLieAlgebra::abelian(f(3), 3);
        assert!(h.bracket(&x, &other.basis_element(0)).is_err());
    }

    #[test]
    fn pmap_examples() {
        let h = heisenberg(2, 0);
        let s = h.element(&[1, 1, 0]).unwrap();
        assert_eq!(h.pmap(&s).unwrap(), h.basis_element(2));
        assert!(h.pmap(&Vector::zero(f(2), 3)).unwrap().is_zero());
        // p = 2: (x+y)^[2] = x^[2] + y^[2] + [x,y]
        let k = klein();
        let s = k.element(&[1, 1]).unwrap();
        let expected = k.element(&[1, 1]).unwrap(); // 0 + y + x
        assert_eq!(k.pmap(&s).unwrap(), expected);
    }

    #[test]
    fn lower_central_examples() {
        assert_eq!(
            RestrictedLieAlgebra::abelian(f(2), 2).lower_central_series().verdict,
            SeriesVerdict::Terminates(1)
        );
        let h = heisenberg(3, 0);
        let r = h.lower_central_series();
        assert_eq!(r.verdict, SeriesVerdict::Terminates(2));
        assert_eq!(r.chain[1], span(&h, &[&[0, 0, 1]]));
        let k = klein();
        let r = k.lower_central_series();
        assert_eq!(r.verdict, SeriesVerdict::Stabilizes { dim: 1 });
        assert_eq!(r.chain[1], span(&k, &[&[1, 0]]));
    }

    #[test]
    fn derived_subalgebra_and_closure() {
        assert!(RestrictedLieAlgebra::abelian(f(5), 2).derived_subalgebra_p().is_zero());
        let e = example_six_one();
        let zvw = span(&e, &[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]);
        assert_eq!(e.derived_subalgebra_p(), zvw);
        assert_eq!(e.restricted_closure(&span(&e, &[&[0, 0, 1, 0, 0]])), zvw);
        assert_eq!(e.restricted_closure(&zvw), zvw);
        assert!(e.restricted_closure(&e.zero_subspace()).is_zero());
        let h = heisenberg(3, 0);
        assert_eq!(h.derived_subalgebra_p(), span(&h, &[&[0, 0, 1]]));
    }

    #[test]
    fn exponent_examples() {
        let e = example_six_one();
        assert_eq!(e.exponent(&Vector::zero(f(2), 5)).unwrap(), Exponent::Finite(0));
        assert_eq!(e.exponent(&e.basis_element(2)).unwrap(), Exponent::Finite(3));
        assert_eq!(klein().exponent(&klein().basis_element(1)).unwrap(), Exponent::NotPNilpotent);
    }

    #[test]
    fn p_nilpotent_subspaces() {
        let e = example_six_one();
        assert!(e.is_p_nilpotent_subspace(&e.zero_subspace()));
        assert!(e.is_p_nilpotent_subspace(&e.derived_subalgebra_p()));
        assert_eq!(e.restricted_power_series(&e.derived_subalgebra_p()).dims(), vec![3, 2, 1, 0]);
        let k = klein();
        assert!(!k.is_p_nilpotent_subspace(&span(&k, &[&[0, 1]])));
        let t = heisenberg(3, 1);
        assert!(!t.is_p_nilpotent_subspace(&t.derived_subalgebra()));
    }

    #[test]
    fn centre_examples() {
        let a = RestrictedLieAlgebra::abelian(f(7), 3);
        assert!(a.centre().is_full());
        let h = heisenberg(5, 0);
        assert_eq!(h.centre(), span(&h, &[&[0, 0, 1]]));
        assert!(klein().centre().is_zero());
    }

    #[test]
    fn restrict_to_subalgebra() {
        let e = example_six_one();
        let sub = e.restrict_to(&e.derived_subalgebra_p()).unwrap();
        assert_eq!(sub.dim(), 3);
        assert!(sub.is_abelian());
        assert_eq!(sub.exponent(&sub.basis_element(0)).unwrap(), Exponent::Finite(3));
        assert!(e.restrict_to(&span(&e, &[&[0, 0, 1, 0, 0]])).is_err());
    }

    #[test]
    fn ad_of_pmap_matches_power_on_sums() {
        for h in [heisenberg(3, 1), heisenberg(5, 0), klein(), example_six_one()] {
            let p = h.p() as u64;
            for x in h.whole().elements().take(200) {
                let lhs = h.ad_matrix_coords(&h.pmap_coords(&x));
                let rhs = h.ad_matrix_coords(&x).pow(p).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
