//! Lie structure of an associative algebra viewed through [a, b] = ab - ba: lower central,
//! upper Lie power, derived and strong derived series, their subset versions, and Engel checks.
//!
//! Every series term is a span, and the brackets involved are multilinear, so each term is
//! computed from basis rows of the previous one. The Engel condition is not multilinear and is
//! the one check that enumerates elements.

use std::collections::HashSet;

use serde::Serialize;

use crate::env::AssocAlgebra;
use crate::error::{Error, Result};
use crate::gfp::{Matrix, Subspace};
use crate::rla::SeriesVerdict;

/// Cap on p^dim for exhaustive Engel checks.
pub const ENGEL_EXHAUSTIVE_CAP: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub terms: Vec<Subspace>,
    pub verdict: SeriesVerdict,
}

impl Chain {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::rank).collect()
    }

    pub fn value(&self) -> Option<usize> {
        self.verdict.value()
    }

    /// Term at 0-based position `k`, zero past the end of a terminating chain and the stable
    /// term past the end of a stabilized one.
    pub fn term(&self, k: usize) -> Subspace {
        match self.terms.get(k) {
            Some(t) => t.clone(),
            None => self.terms.last().expect("nonempty chain").clone(),
        }
    }

    fn finish(terms: Vec<Subspace>) -> Chain {
        let last = terms.last().expect("nonempty chain");
        let verdict = if last.is_zero() {
            SeriesVerdict::Terminates(terms.len() - 1)
        } else {
            SeriesVerdict::Stabilizes { dim: last.rank() }
        };
        Chain { terms, verdict }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAnalysis {
    pub gamma: Chain,
    pub upper_powers: Chain,
    pub derived: Chain,
    pub strong_derived: Chain,
}

impl LieAnalysis {
    pub fn cl_lie(&self) -> Option<usize> {
        self.gamma.value()
    }

    pub fn cl_strong(&self) -> Option<usize> {
        self.upper_powers.value()
    }

    pub fn dl_lie(&self) -> Option<usize> {
        self.derived.value()
    }

    pub fn dl_strong(&self) -> Option<usize> {
        self.strong_derived.value()
    }
}

fn basis_rows<A: AssocAlgebra + ?Sized>(a: &A) -> Vec<Vec<u8>> {
    (0..a.dim()).map(|i| a.unit_vector(i)).collect()
}

/// [U, V]; stops early once `cap` dimensions are reached.
pub fn commutator_span<A: AssocAlgebra + ?Sized>(
    a: &A,
    u: &Subspace,
    v: &Subspace,
    cap: Option<usize>,
) -> Subspace {
    let mut out = Subspace::zero(a.field(), a.dim());
    let vrows = if v.is_full() { basis_rows(a) } else { v.rows() };
    let cap = cap.unwrap_or(a.dim());
    for ru in u.rows() {
        for rv in &vrows {
            out.insert_coords(&a.commutator(&ru, rv));
            if out.rank() >= cap {
                return out;
            }
        }
    }
    out
}

/// C * A: the least subspace containing `c` closed under right multiplication.
pub fn right_ideal_closure<A: AssocAlgebra + ?Sized>(a: &A, c: &Subspace) -> Subspace {
    let gens: Vec<Vec<u8>> = a.generators().into_iter().map(|g| a.unit_vector(g)).collect();
    let mut out = c.clone();
    let mut work = c.rows();
    while let Some(v) = work.pop() {
        for g in &gens {
            let w = a.multiply(&v, g);
            if out.insert_coords(&w) {
                work.push(w);
            }
        }
    }
    out
}

fn descending<A, F>(a: &A, step: F) -> Chain
where
    A: AssocAlgebra + ?Sized,
    F: Fn(&Subspace) -> Subspace,
{
    let mut terms = vec![Subspace::full(a.field(), a.dim())];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            return Chain::finish(terms);
        }
        let next = step(last);
        if &next == last {
            return Chain::finish(terms);
        }
        terms.push(next);
    }
}

/// gamma_1 = A, gamma_{k+1} = [gamma_k, A]; value is cl_Lie.
pub fn gamma_series<A: AssocAlgebra + ?Sized>(a: &A) -> Chain {
    let full = Subspace::full(a.field(), a.dim());
    descending(a, |g| commutator_span(a, g, &full, Some(g.rank())))
}

/// A^(1) = A, A^(i) = [A^(i-1), A] A; value is cl^Lie.
pub fn upper_lie_powers<A: AssocAlgebra + ?Sized>(a: &A) -> Chain {
    let full = Subspace::full(a.field(), a.dim());
    descending(a, |g| right_ideal_closure(a, &commutator_span(a, g, &full, Some(g.rank()))))
}

/// delta^[0] = A, delta^[k+1] = [delta^[k], delta^[k]]; value is dl_Lie.
pub fn derived_series<A: AssocAlgebra + ?Sized>(a: &A) -> Chain {
    descending(a, |d| commutator_span(a, d, d, Some(d.rank())))
}

/// delta^(0) = A, delta^(k+1) = [delta^(k), delta^(k)] A; value is dl^Lie.
pub fn strong_derived_series<A: AssocAlgebra + ?Sized>(a: &A) -> Chain {
    descending(a, |d| right_ideal_closure(a, &commutator_span(a, d, d, Some(d.rank()))))
}

pub fn analyze<A: AssocAlgebra + ?Sized>(a: &A) -> LieAnalysis {
    LieAnalysis {
        gamma: gamma_series(a),
        upper_powers: upper_lie_powers(a),
        derived: derived_series(a),
        strong_derived: strong_derived_series(a),
    }
}

/// Result of iterating a subset bracket until it vanishes or cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetChain {
    pub terms: Vec<Subspace>,
    /// `None` when the sequence revisits a nonzero term.
    pub value: Option<usize>,
}

impl SubsetChain {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::rank).collect()
    }
}

fn iterate_until_zero<F>(first: Subspace, step: F) -> Vec<Subspace>
where
    F: Fn(&Subspace) -> Subspace,
{
    let mut seen = HashSet::new();
    let mut terms = vec![first];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() || !seen.insert(last.clone()) {
            return terms;
        }
        let next = step(last);
        terms.push(next);
    }
}

/// U_1 = S, U_{k+1} = [U_k, S]. The value is the least c with U_{c+1} = 0, so every
/// (c+1)-fold left-normed bracket of elements of S vanishes.
pub fn subset_nilpotency<A: AssocAlgebra + ?Sized>(a: &A, s: &Subspace) -> SubsetChain {
    let terms = iterate_until_zero(s.clone(), |u| commutator_span(a, u, s, None));
    let value = terms.last().unwrap().is_zero().then(|| terms.len() - 1);
    SubsetChain { terms, value }
}

/// W_1 = [S, S], W_{k+1} = [W_k, W_k]. The value is the least n with W_n = 0, i.e. the o-bracket
/// on 2^n elements of S vanishes.
pub fn subset_derived_length<A: AssocAlgebra + ?Sized>(a: &A, s: &Subspace) -> SubsetChain {
    let first = commutator_span(a, s, s, None);
    let terms = iterate_until_zero(first, |w| commutator_span(a, w, w, None));
    let value = terms.last().unwrap().is_zero().then_some(terms.len());
    SubsetChain { terms, value }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EngelMode {
    Exhaustive,
    WitnessSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum EngelVerdict {
    /// Every ad y is nilpotent; `index` is the largest nilpotency index observed.
    Engel { index: usize },
    /// [x,_n y] != 0 for all n. `period` is the least k > 0 with [x,_k y] = x, when found.
    NotEngel { x: Vec<u8>, y: Vec<u8>, period: Option<usize> },
    /// Witness search found nothing and cannot certify the identity.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EngelReport {
    pub mode: EngelMode,
    pub verdict: EngelVerdict,
    pub examined: usize,
}

/// Matrix of x -> [x, y] on row vectors.
fn right_ad<A: AssocAlgebra + ?Sized>(a: &A, y: &[u8]) -> Matrix {
    let rows = (0..a.dim()).map(|i| a.commutator(&a.unit_vector(i), y)).collect();
    Matrix::from_rows(a.field(), a.dim(), rows).expect("square")
}

fn orbit_period<A: AssocAlgebra + ?Sized>(a: &A, x: &[u8], y: &[u8], limit: usize) -> Option<usize> {
    let mut v = a.commutator(x, y);
    for k in 1..=limit {
        if v == x {
            return Some(k);
        }
        v = a.commutator(&v, y);
    }
    None
}

/// [x,_n y] for n = dim(A); nonzero exactly when no power of ad y kills x.
fn engel_tail<A: AssocAlgebra + ?Sized>(a: &A, x: &[u8], y: &[u8]) -> Vec<u8> {
    let mut v = x.to_vec();
    for _ in 0..a.dim() {
        if v.iter().all(|&c| c == 0) {
            break;
        }
        v = a.commutator(&v, y);
    }
    v
}

fn not_engel<A: AssocAlgebra + ?Sized>(a: &A, x: Vec<u8>, y: Vec<u8>) -> EngelVerdict {
    let period = orbit_period(a, &x, &y, 4096);
    EngelVerdict::NotEngel { x, y, period }
}

/// (x, y) with [x,_n y] nonzero for every n.
pub type Witness = (Vec<u8>, Vec<u8>);

/// Searches basis vectors of `s` and their pairwise sums for y, and the same set for x, with
/// [x,_n y] nonzero for every n.
pub fn engel_witness_in<A: AssocAlgebra + ?Sized>(a: &A, s: &Subspace) -> (Option<Witness>, usize) {
    let f = a.field();
    let rows = s.rows();
    let mut candidates = rows.clone();
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let mut v = rows[i].clone();
            crate::gfp::add_scaled(f, &mut v, 1, &rows[j]);
            candidates.push(v);
        }
    }
    let mut examined = 0;
    for y in &candidates {
        for x in &candidates {
            examined += 1;
            let tail = engel_tail(a, x, y);
            if tail.iter().any(|&c| c != 0) {
                // tail lies in the part of A where ad y is invertible
                return (Some((tail, y.clone())), examined);
            }
        }
    }
    (None, examined)
}

pub fn is_bounded_engel<A: AssocAlgebra + ?Sized>(a: &A, mode: EngelMode) -> Result<EngelReport> {
    match mode {
        EngelMode::Exhaustive => {
            let count =
                (a.field().p() as u64).checked_pow(a.dim() as u32).filter(|&c| c <= ENGEL_EXHAUSTIVE_CAP);
            let Some(count) = count else {
                return Err(Error::SizeCap {
                    what: "exhaustive Engel check (p^dim)".into(),
                    dim: a.dim() as u64,
                    cap: ENGEL_EXHAUSTIVE_CAP,
                });
            };
            let full = Subspace::full(a.field(), a.dim());
            let mut index = 0;
            for (n, y) in full.elements().enumerate() {
                let m = right_ad(a, &y);
                match m.nilpotency_index() {
                    Some(k) => index = index.max(k),
                    None => {
                        let stable = m.pow(a.dim() as u64)?;
                        let x = (0..a.dim())
                            .map(|i| stable.row(i).to_vec())
                            .find(|r| r.iter().any(|&c| c != 0))
                            .expect("non-nilpotent map has nonzero stable image");
                        return Ok(EngelReport { mode, verdict: not_engel(a, x, y), examined: n + 1 });
                    }
                }
            }
            Ok(EngelReport { mode, verdict: EngelVerdict::Engel { index }, examined: count as usize })
        }
        EngelMode::WitnessSearch => {
            let full = Subspace::full(a.field(), a.dim());
            let (w, examined) = engel_witness_in(a, &full);
            let verdict = match w {
                Some((x, y)) => not_engel(a, x, y),
                None => EngelVerdict::Undecided,
            };
            Ok(EngelReport { mode, verdict, examined })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::env::EnvAlgebra;
    use crate::gfp::Field;
    use crate::rla::RestrictedLieAlgebra;

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

    /// 2x2 matrices over F_p on the basis e11, e12, e21, e22.
    struct Mat2(Field);

    impl AssocAlgebra for Mat2 {
        fn field(&self) -> Field {
            self.0
        }
        fn dim(&self) -> usize {
            4
        }
        fn mul_basis_into(&self, i: usize, j: usize, c: u8, out: &mut [u8]) {
            let (a, b) = (i / 2, i % 2);
            let (d, e) = (j / 2, j % 2);
            if b == d {
                let k = a * 2 + e;
                out[k] = self.0.add(out[k], c);
            }
        }
    }

    #[test]
    fn commutative_algebra_values() {
        let env = EnvAlgebra::build(&RestrictedLieAlgebra::abelian(f(3), 2)).unwrap();
        let an = analyze(&env);
        assert_eq!(an.cl_lie(), Some(1));
        assert_eq!(an.cl_strong(), Some(1));
        assert_eq!(an.dl_lie(), Some(1));
        assert_eq!(an.dl_strong(), Some(1));
        let r = is_bounded_engel(&env, EngelMode::Exhaustive).unwrap();
        assert_eq!(r.verdict, EngelVerdict::Engel { index: 1 });
    }

    #[test]
    fn heisenberg_classes() {
        let env = EnvAlgebra::build(&heisenberg(2, 0)).unwrap();
        assert_eq!(gamma_series(&env).value(), Some(2));
        let env = EnvAlgebra::build(&heisenberg(3, 0)).unwrap();
        assert_eq!(derived_series(&env).value(), Some(2));
        assert_eq!(gamma_series(&env).value(), Some(3));
    }

    #[test]
    fn m2_over_f2_is_solvable_but_not_strongly() {
        let m = Mat2(f(2));
        assert_eq!(derived_series(&m).value(), Some(3));
        assert_eq!(strong_derived_series(&m).value(), None);
        assert_eq!(gamma_series(&m).value(), None);
    }

    #[test]
    fn chains_descend_and_strong_terms_are_ideals() {
        for l in [heisenberg(3, 1), klein(), heisenberg(2, 0)] {
            let env = EnvAlgebra::build(&l).unwrap();
            let an = analyze(&env);
            for ch in [&an.gamma, &an.upper_powers, &an.derived, &an.strong_derived] {
                for w in ch.terms.windows(2) {
                    assert!(w[1].is_subspace_of(&w[0]));
                }
            }
            for ch in [&an.upper_powers, &an.strong_derived] {
                for t in &ch.terms {
                    assert_eq!(&right_ideal_closure(&env, t), t);
                }
            }
            for (k, t) in an.derived.terms.iter().enumerate() {
                assert!(t.is_subspace_of(&an.strong_derived.term(k)));
            }
        }
    }

    #[test]
    fn subset_checks() {
        let env = EnvAlgebra::build(&heisenberg(3, 0)).unwrap();
        let centre = Subspace::from_coords(f(3), env.dim(), [env.one().as_slice()]);
        assert_eq!(subset_nilpotency(&env, &centre).value, Some(1));
        let line = Subspace::from_coords(f(3), env.dim(), [env.embed_coords(&[1, 0, 0]).as_slice()]);
        assert_eq!(subset_derived_length(&env, &line).value, Some(1));
        let (_, minus) = env.plus_minus_parts().unwrap();
        assert!(subset_nilpotency(&env, &minus).value.is_some());

        let env = EnvAlgebra::build(&heisenberg(3, 1)).unwrap();
        let (_, minus) = env.plus_minus_parts().unwrap();
        assert_eq!(subset_nilpotency(&env, &minus).value, None);
    }

    #[test]
    fn klein_is_not_bounded_engel() {
        let env = EnvAlgebra::build(&klein()).unwrap();
        let x = env.embed_coords(&[1, 0]);
        let y = env.embed_coords(&[0, 1]);
        assert_eq!(env.commutator(&x, &y), x);
        for mode in [EngelMode::Exhaustive, EngelMode::WitnessSearch] {
            let r = is_bounded_engel(&env, mode).unwrap();
            match r.verdict {
                EngelVerdict::NotEngel { period, .. } => assert!(period.is_some()),
                v => panic!("expected a witness, got {v:?}"),
            }
        }
    }

    #[test]
    fn heisenberg_is_bounded_engel() {
        let env = EnvAlgebra::build(&heisenberg(2, 0)).unwrap();
        let r = is_bounded_engel(&env, EngelMode::Exhaustive).unwrap();
        assert!(matches!(r.verdict, EngelVerdict::Engel { .. }));
        let env = EnvAlgebra::build(&heisenberg(3, 0)).unwrap();
        assert!(matches!(is_bounded_engel(&env, EngelMode::Exhaustive), Err(Error::SizeCap { .. })));
    }
}
