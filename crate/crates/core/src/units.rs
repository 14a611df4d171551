//! Unit groups of small restricted enveloping algebras and their group-theoretic properties.

use std::collections::HashMap;

use serde::Serialize;

use crate::env::{AssocAlgebra, EnvAlgebra};
use crate::error::{Error, Result};

pub const UNIT_ENUMERATION_CAP: u64 = 1 << 16;
pub const GROUP_PROPERTIES_CAP: usize = 1 << 12;

/// A finite group of units, stored as coordinate vectors in u(L) with the identity first.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<u8>] {
        &self.elements
    }

    pub fn identity(&self) -> &[u8] {
        &self.elements[0]
    }

    pub fn contains(&self, a: &[u8]) -> bool {
        self.index.contains_key(a)
    }

    pub fn index_of(&self, a: &[u8]) -> Option<usize> {
        self.index.get(a).copied()
    }
}

/// Whether `a` is a unit: its left-multiplication matrix is invertible.
pub fn is_unit(env: &EnvAlgebra, a: &[u8]) -> bool {
    env.left_multiplication_matrix(a).is_invertible()
}

/// All units of u(L), the identity first.
pub fn enumerate_units(env: &EnvAlgebra) -> Result<FiniteGroup> {
    let total = (env.p() as u64).checked_pow(env.dim() as u32);
    let cap = UNIT_ENUMERATION_CAP;
    if total.is_none_or(|t| t > cap) {
        return Err(Error::SizeCap {
            what: "unit enumeration over p^dim u(L) elements".into(),
            dim: env.dim() as u64,
            cap,
        });
    }
    let one = env.one();
    let mut elements = vec![one.clone()];
    let whole = crate::gfp::Subspace::full(env.field(), env.dim());
    for a in whole.elements() {
        if a != one && is_unit(env, &a) {
            elements.push(a);
        }
    }
    let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
    Ok(FiniteGroup { elements, index })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub elementary_abelian: bool,
    pub nilpotent: bool,
    /// orders of the lower central series terms
    pub lower_central_orders: Vec<usize>,
    pub solvable: bool,
    pub derived_orders: Vec<usize>,
    /// `Some(true)` when nilpotency already implies the bounded Engel property.
    pub engel_via_nilpotency: Option<bool>,
}

struct Table {
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl Table {
    fn new(env: &EnvAlgebra, g: &FiniteGroup) -> Table {
        let n = g.order();
        let mut mul = vec![0u16; n * n];
        for (i, a) in g.elements.iter().enumerate() {
            for (j, b) in g.elements.iter().enumerate() {
                let c = env.multiply(a, b);
                mul[i * n + j] = g.index[&c] as u16;
            }
        }
        let mut inv = vec![0u16; n];
        for i in 0..n {
            inv[i] = (0..n).find(|&j| mul[i * n + j] == 0).expect("group element has an inverse") as u16;
        }
        Table { n, mul, inv }
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    fn commutator(&self, a: usize, b: usize) -> usize {
        let ai = self.inv[a] as usize;
        let bi = self.inv[b] as usize;
        self.m(self.m(ai, bi), self.m(a, b))
    }

    fn order_of(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.m(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`, as a membership mask.
    fn generated(&self, gens: &[bool]) -> Vec<bool> {
        let g: Vec<usize> = (0..self.n).filter(|&i| gens[i]).collect();
        let mut member = vec![false; self.n];
        member[0] = true;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &s in &g {
                let y = self.m(x, s);
                if !member[y] {
                    member[y] = true;
                    queue.push(y);
                }
            }
        }
        member
    }

    fn commutator_subgroup(&self, a: &[bool], b: &[bool]) -> Vec<bool> {
        let mut gens = vec![false; self.n];
        for x in (0..self.n).filter(|&i| a[i]) {
            for y in (0..self.n).filter(|&i| b[i]) {
                gens[self.commutator(x, y)] = true;
            }
        }
        self.generated(&gens)
    }
}

fn count(mask: &[bool]) -> usize {
    mask.iter().filter(|&&b| b).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Series G_1 = G, G_{k+1} = step(G_k) until trivial or repeating; returns orders and whether
/// the trivial group was reached.
fn series(t: &Table, step: impl Fn(&[bool]) -> Vec<bool>) -> (Vec<usize>, bool) {
    let mut cur = vec![true; t.n];
    let mut orders = vec![t.n];
    loop {
        if count(&cur) == 1 {
            return (orders, true);
        }
        let next = step(&cur);
        if next == cur {
            return (orders, false);
        }
        orders.push(count(&next));
        cur = next;
    }
}

pub fn group_properties(env: &EnvAlgebra, g: &FiniteGroup) -> Result<GroupReport> {
    if g.order() > GROUP_PROPERTIES_CAP {
        return Err(Error::SizeCap {
            what: "group order".into(),
            dim: g.order() as u64,
            cap: GROUP_PROPERTIES_CAP as u64,
        });
    }
    let t = Table::new(env, g);
    let n = t.n;
    let abelian = (0..n).all(|a| (0..n).all(|b| t.m(a, b) == t.m(b, a)));
    let exponent = (0..n).map(|a| t.order_of(a)).fold(1, |acc, o| acc / gcd(acc, o) * o);
    let prime_exponent = exponent > 1 && (2..exponent).all(|d| exponent % d != 0);
    let whole = vec![true; n];
    let (lower_central_orders, nilpotent) = series(&t, |c| t.commutator_subgroup(c, &whole));
    let (derived_orders, solvable) = series(&t, |c| t.commutator_subgroup(c, c));
    Ok(GroupReport {
        order: n,
        abelian,
        exponent,
        elementary_abelian: abelian && (n == 1 || prime_exponent),
        nilpotent,
        lower_central_orders,
        solvable,
        derived_orders,
        engel_via_nilpotency: nilpotent.then_some(true),
    })
}

/// Elements 1 + w with w in the augmentation ideal, in enumeration order.
pub fn one_plus_augmentation(env: &EnvAlgebra) -> Vec<Vec<u8>> {
    let f = env.field();
    env.augmentation_ideal()
        .elements()
        .map(|mut w| {
            w[0] = f.add(w[0], 1);
            w
        })
        .collect()
}
