//! The restricted enveloping algebra u(L) on its PBW basis.
//!
//! Monomials b_1^{a_1}...b_n^{a_n} with 0 <= a_i < p are indexed by the mixed-radix rank
//! sum a_i p^(n-1-i), so the first declared generator is the most significant digit and the
//! unit has rank 0. Products are computed by straightening: moving a generator b_i past b_j
//! with j < i contributes [b_i, b_j], and b_i^p collapses to b_i^[p].

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gfp::{add_scaled, Field, Matrix, Subspace};
use crate::rla::{LieElement, RestrictedLieAlgebra};

pub const DEFAULT_MAX_ENV_DIM: usize = 4096;

/// Above this dimension the full monomial product table is not cached.
const PRODUCT_TABLE_MAX_DIM: usize = 512;

type Sparse = Vec<(u32, u8)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnvConfig {
    pub max_dim: usize,
}

impl Default for EnvConfig {
    fn default() -> Self {
        EnvConfig { max_dim: DEFAULT_MAX_ENV_DIM }
    }
}

/// A finite-dimensional unital associative algebra given on a basis by its multiplication.
/// Elements are dense coordinate slices.
pub trait AssocAlgebra {
    fn field(&self) -> Field;

    fn dim(&self) -> usize;

    /// `out += c * e_i * e_j`
    fn mul_basis_into(&self, i: usize, j: usize, c: u8, out: &mut [u8]);

    /// Basis elements that generate the algebra together with the unit.
    fn generators(&self) -> Vec<usize> {
        (0..self.dim()).collect()
    }

    fn multiply(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let f = self.field();
        let mut out = vec![0u8; self.dim()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    self.mul_basis_into(i, j, f.mul(x, y), &mut out);
                }
            }
        }
        out
    }

    /// ab - ba
    fn commutator(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let f = self.field();
        let mut out = vec![0u8; self.dim()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 && i != j {
                    let c = f.mul(x, y);
                    self.mul_basis_into(i, j, c, &mut out);
                    self.mul_basis_into(j, i, f.neg(c), &mut out);
                }
            }
        }
        out
    }

    fn unit_vector(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.dim()];
        v[i] = 1;
        v
    }
}

/// Exponent tuple of a PBW monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }
}

/// Sparse element of u(L): monomial rank to nonzero coefficient, sorted by rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EnvElement {
    dim: usize,
    terms: Vec<(usize, u8)>,
}

impl EnvElement {
    pub fn from_dense(v: &[u8]) -> EnvElement {
        EnvElement {
            dim: v.len(),
            terms: v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<u8> {
        let mut v = vec![0u8; self.dim];
        for &(i, c) in &self.terms {
            v[i] = c;
        }
        v
    }

    pub fn terms(&self) -> &[(usize, u8)] {
        &self.terms
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

pub struct EnvAlgebra {
    lie: RestrictedLieAlgebra,
    dim: usize,
    /// weights[i] = p^(n-1-i)
    weights: Vec<usize>,
    /// entry i*dim + m holds b_i * m
    gen_table: Vec<Sparse>,
    products: OnceLock<Vec<Sparse>>,
}

impl fmt::Debug for EnvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EnvAlgebra").field("p", &self.lie.p()).field("dim", &self.dim).finish()
    }
}

struct Straightener<'a> {
    lie: &'a RestrictedLieAlgebra,
    dim: usize,
    weights: &'a [usize],
    memo: Vec<Option<Sparse>>,
    busy: Vec<bool>,
}

impl Straightener<'_> {
    fn exponent(&self, m: usize, i: usize) -> usize {
        (m / self.weights[i]) % self.lie.p() as usize
    }

    fn first_generator(&self, m: usize) -> Option<usize> {
        (0..self.weights.len()).find(|&i| self.exponent(m, i) > 0)
    }

    fn accumulate(&self, acc: &mut [u8], c: u8, terms: &Sparse) {
        let f = self.lie.field();
        for &(r, v) in terms {
            acc[r as usize] = f.add(acc[r as usize], f.mul(c, v));
        }
    }

    fn sparse(acc: &[u8]) -> Sparse {
        acc.iter().enumerate().filter(|(_, &c)| c != 0).map(|(r, &c)| (r as u32, c)).collect()
    }

    /// b_i * m
    fn product(&mut self, i: usize, m: usize) -> Sparse {
        let key = i * self.dim + m;
        if let Some(t) = &self.memo[key] {
            return t.clone();
        }
        assert!(!self.busy[key], "straightening recursion revisited b_{i} * monomial {m}");
        self.busy[key] = true;
        let p = self.lie.p() as usize;
        let out = match self.first_generator(m) {
            None => vec![(self.weights[i] as u32, 1)],
            Some(j) if i < j => vec![((m + self.weights[i]) as u32, 1)],
            Some(j) if i == j => {
                if self.exponent(m, j) + 1 < p {
                    vec![((m + self.weights[j]) as u32, 1)]
                } else {
                    // b_j^p = b_j^[p]
                    let rest = m - (p - 1) * self.weights[j];
                    let mut acc = vec![0u8; self.dim];
                    for (k, &c) in self.lie.basis_pmap(j).to_vec().iter().enumerate() {
                        if c != 0 {
                            let t = self.product(k, rest);
                            self.accumulate(&mut acc, c, &t);
                        }
                    }
                    Self::sparse(&acc)
                }
            }
            Some(j) => {
                // b_i b_j m' = b_j (b_i m') + [b_i, b_j] m'
                let rest = m - self.weights[j];
                let mut acc = vec![0u8; self.dim];
                let inner = self.product(i, rest);
                for &(r, c) in &inner {
                    let t = self.product(j, r as usize);
                    self.accumulate(&mut acc, c, &t);
                }
                let br = self.lie.basis_bracket(i, j).to_vec();
                for (k, &c) in br.iter().enumerate() {
                    if c != 0 {
                        let t = self.product(k, rest);
                        self.accumulate(&mut acc, c, &t);
                    }
                }
                Self::sparse(&acc)
            }
        };
        self.busy[key] = false;
        self.memo[key] = Some(out.clone());
        out
    }
}

impl EnvAlgebra {
    pub fn build(lie: &RestrictedLieAlgebra) -> Result<EnvAlgebra> {
        Self::build_with(lie, &EnvConfig::default())
    }

    pub fn build_with(lie: &RestrictedLieAlgebra, config: &EnvConfig) -> Result<EnvAlgebra> {
        let n = lie.dim();
        let p = lie.p() as u64;
        let dim =
            p.checked_pow(n as u32).filter(|&d| d <= config.max_dim as u64).ok_or_else(|| Error::SizeCap {
                what: "u(L)".into(),
                dim: p.saturating_pow(n as u32),
                cap: config.max_dim as u64,
            })? as usize;
        let violations = lie.validate();
        if !violations.is_empty() {
            return Err(Error::Axiom(violations));
        }
        let weights: Vec<usize> = (0..n).map(|i| p.pow((n - 1 - i) as u32) as usize).collect();
        let mut s = Straightener {
            lie,
            dim,
            weights: &weights,
            memo: vec![None; n * dim],
            busy: vec![false; n * dim],
        };
        for i in 0..n {
            for m in 0..dim {
                s.product(i, m);
            }
        }
        let gen_table = s.memo.into_iter().map(|t| t.expect("filled")).collect();
        Ok(EnvAlgebra { lie: lie.clone(), dim, weights, gen_table, products: OnceLock::new() })
    }

    pub fn lie(&self) -> &RestrictedLieAlgebra {
        &self.lie
    }

    pub fn p(&self) -> u8 {
        self.lie.p()
    }

    pub fn monomial(&self, rank: usize) -> Monomial {
        let p = self.p() as usize;
        Monomial(self.weights.iter().map(|&w| ((rank / w) % p) as u8).collect())
    }

    pub fn rank_of(&self, m: &Monomial) -> Result<usize> {
        if m.0.len() != self.weights.len() || m.0.iter().any(|&a| a >= self.p()) {
            return Err(Error::Invalid(format!("exponent tuple {:?} is not a PBW monomial", m.0)));
        }
        Ok(m.0.iter().zip(&self.weights).map(|(&a, &w)| a as usize * w).sum())
    }

    pub fn degree(&self, rank: usize) -> usize {
        self.monomial(rank).degree()
    }

    pub fn monomial_name(&self, rank: usize) -> String {
        let m = self.monomial(rank);
        let parts: Vec<String> =
            m.0.iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| {
                    let name = &self.lie.names()[i];
                    if a == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{a}")
                    }
                })
                .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Generator word of a monomial, ascending.
    fn word(&self, rank: usize) -> Vec<usize> {
        let m = self.monomial(rank);
        m.0.iter().enumerate().flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize)).collect()
    }

    pub fn generator_rank(&self, i: usize) -> usize {
        self.weights[i]
    }

    pub fn gen_times_monomial(&self, i: usize, m: usize) -> EnvElement {
        let mut v = vec![0u8; self.dim];
        for &(r, c) in &self.gen_table[i * self.dim + m] {
            v[r as usize] = c;
        }
        EnvElement::from_dense(&v)
    }

    /// `b_i * a` for dense `a`.
    pub fn left_gen(&self, i: usize, a: &[u8]) -> Vec<u8> {
        let f = self.lie.field();
        let mut out = vec![0u8; self.dim];
        for (m, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(r, v) in &self.gen_table[i * self.dim + m] {
                out[r as usize] = f.add(out[r as usize], f.mul(c, v));
            }
        }
        out
    }

    fn monomial_product_dense(&self, m1: usize, m2: usize) -> Vec<u8> {
        let mut acc = vec![0u8; self.dim];
        acc[m2] = 1;
        for &g in self.word(m1).iter().rev() {
            acc = self.left_gen(g, &acc);
        }
        acc
    }

    fn product_table(&self) -> Option<&Vec<Sparse>> {
        if self.dim > PRODUCT_TABLE_MAX_DIM {
            return None;
        }
        Some(self.products.get_or_init(|| {
            let n = self.dim;
            let mut table: Vec<Sparse> = Vec::with_capacity(n * n);
            for m1 in 0..n {
                match self.word(m1).first() {
                    None => {
                        for m2 in 0..n {
                            table.push(vec![(m2 as u32, 1)]);
                        }
                    }
                    Some(&j) => {
                        // m1 = b_j * m1' with m1' of lower rank
                        let rest = m1 - self.weights[j];
                        for m2 in 0..n {
                            let mut dense = vec![0u8; n];
                            for &(r, c) in &table[rest * n + m2] {
                                dense[r as usize] = c;
                            }
                            let prod = self.left_gen(j, &dense);
                            table.push(Straightener::sparse(&prod));
                        }
                    }
                }
            }
            table
        }))
    }

    pub fn multiply_elements(&self, a: &EnvElement, b: &EnvElement) -> Result<EnvElement> {
        for x in [a, b] {
            if x.dim != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: x.dim });
            }
        }
        Ok(EnvElement::from_dense(&self.multiply(&a.to_dense(), &b.to_dense())))
    }

    pub fn one(&self) -> Vec<u8> {
        self.unit_vector(0)
    }

    pub fn embed_coords(&self, x: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.dim];
        for (i, &c) in x.iter().enumerate() {
            out[self.weights[i]] = c;
        }
        out
    }

    pub fn embed(&self, x: &LieElement) -> Result<EnvElement> {
        let f = self.lie.field();
        f.check_same(x.field())?;
        if x.len() != self.lie.dim() {
            return Err(Error::DimensionMismatch { expected: self.lie.dim(), found: x.len() });
        }
        Ok(EnvElement::from_dense(&self.embed_coords(x.coords())))
    }

    /// Image of L in u(L): the span of the degree-one monomials.
    pub fn embedded_lie(&self) -> Subspace {
        let n = self.lie.dim();
        Subspace::from_coords(
            self.lie.field(),
            self.dim,
            (0..n)
                .map(|i| self.unit_vector(self.weights[i]))
                .collect::<Vec<_>>()
                .iter()
                .map(|v| v.as_slice()),
        )
    }

    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<u8>> = s.rows().iter().map(|r| self.embed_coords(r)).collect();
        Subspace::from_coords(self.lie.field(), self.dim, rows.iter().map(|r| r.as_slice()))
    }

    /// Preimage in L of a subspace of u(L) contained in the image of L.
    pub fn restrict_to_lie(&self, s: &Subspace) -> Subspace {
        let n = self.lie.dim();
        let inter = s.intersect(&self.embedded_lie()).expect("same ambient");
        let rows: Vec<Vec<u8>> =
            inter.rows().iter().map(|r| (0..n).map(|i| r[self.weights[i]]).collect()).collect();
        Subspace::from_coords(self.lie.field(), n, rows.iter().map(|r| r.as_slice()))
    }

    pub fn power(&self, a: &[u8], e: u32) -> Vec<u8> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    /// Principal involution on a monomial: reverse the word and negate every generator.
    pub fn involution_monomial(&self, rank: usize) -> Vec<u8> {
        let word = self.word(rank);
        let mut acc = self.one();
        for &g in &word {
            acc = self.left_gen(g, &acc);
        }
        if word.len() % 2 == 1 {
            let f = self.lie.field();
            for c in acc.iter_mut() {
                *c = f.neg(*c);
            }
        }
        acc
    }

    pub fn involution_coords(&self, a: &[u8]) -> Vec<u8> {
        let f = self.lie.field();
        let mut out = vec![0u8; self.dim];
        for (m, &c) in a.iter().enumerate() {
            if c != 0 {
                add_scaled(f, &mut out, c, &self.involution_monomial(m));
            }
        }
        out
    }

    pub fn involution(&self, a: &EnvElement) -> Result<EnvElement> {
        if a.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: a.dim });
        }
        Ok(EnvElement::from_dense(&self.involution_coords(&a.to_dense())))
    }

    /// Row m is the image of monomial m.
    pub fn involution_matrix(&self) -> Matrix {
        let rows = (0..self.dim).map(|m| self.involution_monomial(m)).collect();
        Matrix::from_rows(self.lie.field(), self.dim, rows).expect("square")
    }

    /// Symmetric elements { a : a^T = a }; available for every p.
    pub fn fixed_space(&self) -> Subspace {
        let f = self.lie.field();
        let id = Matrix::identity(f, self.dim);
        self.involution_matrix().add_scaled(f.neg(1), &id).expect("square").left_kernel()
    }

    /// (u(L)^+, u(L)^-), the +1 and -1 eigenspaces of the involution. Requires p > 2.
    pub fn plus_minus_parts(&self) -> Result<(Subspace, Subspace)> {
        if self.p() == 2 {
            return Err(Error::Unsupported("symmetric and skew parts coincide in characteristic 2".into()));
        }
        let f = self.lie.field();
        let t = self.involution_matrix();
        let id = Matrix::identity(f, self.dim);
        let plus = t.add_scaled(f.neg(1), &id)?.left_kernel();
        let minus = t.add_scaled(1, &id)?.left_kernel();
        Ok((plus, minus))
    }

    /// Augmentation ideal: span of all monomials of positive degree.
    pub fn augmentation_ideal(&self) -> Subspace {
        let rows: Vec<Vec<u8>> = (1..self.dim).map(|m| self.unit_vector(m)).collect();
        Subspace::from_coords(self.lie.field(), self.dim, rows.iter().map(|r| r.as_slice()))
    }

    /// omega, omega^2, ... until zero or stabilization; omega^k = span{ u b_i : u in omega^(k-1) }.
    pub fn augmentation_powers(&self) -> Vec<Subspace> {
        let omega = self.augmentation_ideal();
        let gens: Vec<Vec<u8>> = (0..self.lie.dim()).map(|i| self.unit_vector(self.weights[i])).collect();
        let mut chain = vec![omega];
        loop {
            let last = chain.last().unwrap();
            if last.is_zero() {
                return chain;
            }
            let mut next = Subspace::zero(self.lie.field(), self.dim);
            for r in last.rows() {
                for g in &gens {
                    next.insert_coords(&self.multiply(&r, g));
                }
            }
            if &next == last {
                return chain;
            }
            chain.push(next);
        }
    }

    /// Matrix of x -> a x on row vectors.
    pub fn left_multiplication_matrix(&self, a: &[u8]) -> Matrix {
        let rows = (0..self.dim).map(|m| self.multiply(a, &self.unit_vector(m))).collect();
        Matrix::from_rows(self.lie.field(), self.dim, rows).expect("square")
    }
}

impl AssocAlgebra for EnvAlgebra {
    fn field(&self) -> Field {
        self.lie.field()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn mul_basis_into(&self, i: usize, j: usize, c: u8, out: &mut [u8]) {
        let f = self.lie.field();
        match self.product_table() {
            Some(t) => {
                for &(r, v) in &t[i * self.dim + j] {
                    out[r as usize] = f.add(out[r as usize], f.mul(c, v));
                }
            }
            None => add_scaled(f, out, c, &self.monomial_product_dense(i, j)),
        }
    }

    fn generators(&self) -> Vec<usize> {
        self.weights.clone()
    }
}

/// Least t with omega(u(L))^t = 0.
pub fn augmentation_nilpotency_index(lie: &RestrictedLieAlgebra, config: &EnvConfig) -> Result<usize> {
    let env = EnvAlgebra::build_with(lie, config)?;
    let chain = env.augmentation_powers();
    if chain.last().is_some_and(Subspace::is_zero) {
        Ok(chain.len())
    } else {
        Err(Error::NotPNilpotent(format!(
            "augmentation ideal powers stabilize at dimension {}",
            chain.last().map_or(0, Subspace::rank)
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::Field;

    fn f(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    fn heisenberg(p: u32, zp: i64) -> RestrictedLieAlgebra {
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

    fn mono(env: &EnvAlgebra, e: &[u8]) -> Vec<u8> {
        env.unit_vector(env.rank_of(&Monomial(e.to_vec())).unwrap())
    }

    #[test]
    fn abelian_one_generator() {
        let env = EnvAlgebra::build(&RestrictedLieAlgebra::abelian(f(2), 1)).unwrap();
        assert_eq!(env.dim(), 2);
        let x = mono(&env, &[1]);
        assert!(env.multiply(&x, &x).iter().all(|&c| c == 0));
    }

    #[test]
    fn heisenberg_straightening() {
        let env = EnvAlgebra::build(&heisenberg(2, 0)).unwrap();
        assert_eq!(env.dim(), 8);
        let x = mono(&env, &[1, 0, 0]);
        let y = mono(&env, &[0, 1, 0]);
        let z = mono(&env, &[0, 0, 1]);
        let xy = mono(&env, &[1, 1, 0]);
        assert_eq!(env.multiply(&x, &y), xy);
        let mut expected = xy.clone();
        add_scaled(f(2), &mut expected, 1, &z);
        assert_eq!(env.multiply(&y, &x), expected);
        let mut s = env.multiply(&x, &y);
        add_scaled(f(2), &mut s, 1, &env.multiply(&y, &x));
        assert_eq!(s, z);
        assert_eq!(env.monomial_name(env.rank_of(&Monomial(vec![1, 1, 0])).unwrap()), "x*y");
    }

    #[test]
    fn klein_straightening() {
        let env = EnvAlgebra::build(&klein()).unwrap();
        assert_eq!(env.dim(), 4);
        let x = mono(&env, &[1, 0]);
        let y = mono(&env, &[0, 1]);
        let mut expected = mono(&env, &[1, 1]);
        add_scaled(f(2), &mut expected, 1, &x);
        assert_eq!(env.multiply(&y, &x), expected);
        // y^2 = y
        assert_eq!(env.multiply(&y, &y), y);
    }

    #[test]
    fn unit_and_embedding() {
        let h = heisenberg(3, 0);
        let env = EnvAlgebra::build(&h).unwrap();
        let a = mono(&env, &[2, 1, 1]);
        assert_eq!(env.multiply(&env.one(), &a), a);
        assert_eq!(env.multiply(&a, &env.one()), a);
        assert!(env.embed(&h.element(&[0, 0, 0]).unwrap()).unwrap().is_zero());
        let e = env.embed(&h.basis_element(1)).unwrap();
        assert_eq!(e.terms(), &[(env.generator_rank(1), 1)]);
    }

    #[test]
    fn embed_preserves_pmap_p2() {
        let h = heisenberg(2, 0);
        let env = EnvAlgebra::build(&h).unwrap();
        let s = env.embed_coords(&[1, 1, 0]);
        assert_eq!(env.power(&s, 2), env.embed_coords(&h.pmap_coords(&[1, 1, 0])));
        assert_eq!(env.power(&s, 2), env.embed_coords(&[0, 0, 1]));
    }

    #[test]
    fn associativity_exhaustive_small() {
        for l in [heisenberg(2, 1), klein(), heisenberg(3, 1)] {
            let env = EnvAlgebra::build(&l).unwrap();
            let n = env.dim();
            for a in 0..n {
                for b in 0..n {
                    let ab = env.multiply(&env.unit_vector(a), &env.unit_vector(b));
                    for c in 0..n {
                        let lhs = env.multiply(&ab, &env.unit_vector(c));
                        let bc = env.multiply(&env.unit_vector(b), &env.unit_vector(c));
                        let rhs = env.multiply(&env.unit_vector(a), &bc);
                        assert_eq!(lhs, rhs, "({a},{b},{c})");
                    }
                }
            }
        }
    }

    #[test]
    fn involution_examples() {
        let h = heisenberg(3, 0);
        let env = EnvAlgebra::build(&h).unwrap();
        assert_eq!(env.involution_coords(&env.one()), env.one());
        let x = env.embed_coords(&[1, 0, 0]);
        let neg_x = env.embed_coords(&[2, 0, 0]);
        assert_eq!(env.involution_coords(&x), neg_x);
        // (xy)^T = yx = xy - z
        let xy = mono(&env, &[1, 1, 0]);
        let mut expected = xy.clone();
        add_scaled(f(3), &mut expected, 2, &env.embed_coords(&[0, 0, 1]));
        assert_eq!(env.involution_coords(&xy), expected);
        for m in 0..env.dim() {
            let v = env.unit_vector(m);
            assert_eq!(env.involution_coords(&env.involution_coords(&v)), v);
        }
    }

    #[test]
    fn plus_minus_abelian_p3() {
        let env = EnvAlgebra::build(&RestrictedLieAlgebra::abelian(f(3), 1)).unwrap();
        let (plus, minus) = env.plus_minus_parts().unwrap();
        let expect_plus = Subspace::from_coords(f(3), 3, [[1u8, 0, 0].as_slice(), [0, 0, 1].as_slice()]);
        let expect_minus = Subspace::from_coords(f(3), 3, [[0u8, 1, 0].as_slice()]);
        assert_eq!(plus, expect_plus);
        assert_eq!(minus, expect_minus);
    }

    #[test]
    fn plus_minus_complementary_and_refused_for_p2() {
        let env = EnvAlgebra::build(&heisenberg(3, 1)).unwrap();
        let (plus, minus) = env.plus_minus_parts().unwrap();
        assert_eq!(plus.rank() + minus.rank(), env.dim());
        assert!(plus.intersect(&minus).unwrap().is_zero());
        assert!(env.embedded_lie().is_subspace_of(&minus));
        let env2 = EnvAlgebra::build(&heisenberg(2, 0)).unwrap();
        assert!(matches!(env2.plus_minus_parts(), Err(Error::Unsupported(_))));
        assert!(env2.fixed_space().rank() > 0);
    }

    #[test]
    fn augmentation_index_examples() {
        let cfg = EnvConfig::default();
        assert_eq!(augmentation_nilpotency_index(&RestrictedLieAlgebra::abelian(f(2), 0), &cfg).unwrap(), 1);
        assert_eq!(augmentation_nilpotency_index(&RestrictedLieAlgebra::abelian(f(2), 1), &cfg).unwrap(), 2);
        let mut b = RestrictedLieAlgebra::builder(f(2), ["z", "v", "w"]);
        b.pmap(0, &[0, 1, 0]).unwrap();
        b.pmap(1, &[0, 0, 1]).unwrap();
        assert_eq!(augmentation_nilpotency_index(&b.build().unwrap(), &cfg).unwrap(), 8);
        assert!(matches!(augmentation_nilpotency_index(&klein(), &cfg), Err(Error::NotPNilpotent(_))));
    }

    #[test]
    fn size_cap_and_axiom_errors() {
        let cfg = EnvConfig { max_dim: 16 };
        assert!(matches!(EnvAlgebra::build_with(&heisenberg(3, 0), &cfg), Err(Error::SizeCap { .. })));
        let mut b = RestrictedLieAlgebra::builder(f(2), ["x", "y", "z"]);
        b.bracket(0, 1, &[0, 0, 1]).unwrap();
        b.pmap(0, &[0, 1, 0]).unwrap();
        assert!(matches!(EnvAlgebra::build(&b.build_unchecked()), Err(Error::Axiom(_))));
    }
}
