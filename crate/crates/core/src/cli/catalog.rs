//! Named example algebras with their known invariants.

use serde::Serialize;
use serde_json::{json, Value};

use crate::cli::format::parse;
use crate::error::Result;
use crate::rla::RestrictedLieAlgebra;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// stated in the literature for this example
    Published,
    /// computed independently of the checked code path
    Derived,
    /// immediate from the definitions
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expectation {
    pub check: &'static str,
    pub value: Value,
    pub source: Source,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
    pub expected: Vec<Expectation>,
}

impl CatalogEntry {
    pub fn algebra(&self) -> Result<RestrictedLieAlgebra> {
        parse(self.text)
    }

    pub fn expectation(&self, check: &str) -> Option<&Expectation> {
        self.expected.iter().find(|e| e.check == check)
    }
}

fn e(check: &'static str, value: Value, source: Source) -> Expectation {
    Expectation { check, value, source }
}

fn classes(cl: Value, cl_strong: Value, dl: Value, dl_strong: Value, source: Source) -> Vec<Expectation> {
    vec![
        e("lie-class.cl-lie", cl, source),
        e("lie-class.cl-strong", cl_strong, source),
        e("derived-length.dl-lie", dl, source),
        e("derived-length.dl-strong", dl_strong, source),
    ]
}

fn abelian(name: &'static str, text: &'static str) -> CatalogEntry {
    let mut expected = classes(json!(1), json!(1), json!(1), json!(1), Source::Trivial);
    expected.push(e("class-formula.value", json!(1), Source::Trivial));
    CatalogEntry { name, summary: "abelian control, zero p-map", text, expected }
}

pub fn catalog() -> Vec<CatalogEntry> {
    use Source::*;
    vec![
        abelian("abelian-p2", "p = 2\nbasis = a b\n"),
        abelian("abelian-p3", "p = 3\nbasis = a b\n"),
        abelian("abelian-p5", "p = 5\nbasis = a\n"),
        CatalogEntry {
            name: "heisenberg-p2",
            summary: "Heisenberg algebra over F_2 with zero p-map",
            text: "p = 2\nbasis = x y z\n[brackets]\nx y = z\n",
            expected: [
                classes(json!(2), json!(2), json!(2), json!(2), Derived),
                vec![
                    e("class-formula.value", json!(2), Published),
                    e("theorem.metabelian", json!(true), Derived),
                    e("units.order", json!(128), Derived),
                    e("units.nilpotent", json!(true), Derived),
                ],
            ]
            .concat(),
        },
        CatalogEntry {
            name: "heisenberg-p3-central",
            summary: "Heisenberg algebra over F_3, z central with z^[3] = 0",
            text: "p = 3\nbasis = x y z\n[brackets]\nx y = z\n[pmap]\nz = 0\n",
            expected: [
                classes(json!(3), json!(3), json!(2), json!(2), Derived),
                vec![
                    e("class-formula.value", json!(3), Published),
                    e("theorem.metabelian", json!(true), Derived),
                    e("theorem.center-by-metabelian", json!(true), Derived),
                ],
            ]
            .concat(),
        },
        CatalogEntry {
            name: "heisenberg-p5",
            summary: "Heisenberg algebra over F_5 with zero p-map",
            text: "p = 5\nbasis = x y z\n[brackets]\nx y = z\n",
            expected: [
                classes(json!(5), json!(5), json!(3), json!(3), Published),
                vec![
                    e("class-formula.value", json!(5), Published),
                    e("theorem.metabelian", json!(false), Derived),
                    e("theorem.center-by-metabelian", json!(false), Derived),
                ],
            ]
            .concat(),
        },
        CatalogEntry {
            name: "heisenberg-p7",
            summary: "Heisenberg algebra over F_7 with zero p-map",
            text: "p = 7\nbasis = x y z\n[brackets]\nx y = z\n",
            expected: [
                classes(json!(7), json!(7), json!(3), json!(3), Derived),
                vec![e("class-formula.value", json!(7), Derived), e("env-info.dim-u", json!(343), Trivial)],
            ]
            .concat(),
        },
        CatalogEntry {
            name: "example-6-1",
            summary: "five-dimensional algebra over F_2 with [x,y] = z, z^[2] = v, v^[2] = w, z v w central",
            text: "p = 2\nbasis = x y z v w\n[brackets]\nx y = z\n[pmap]\nz = v\nv = w\n",
            expected: vec![
                e("derived-length.dl-lie", json!(3), Published),
                e("derived-length.dl-strong", json!(4), Published),
                e("lie-class.cl-lie", json!(8), Derived),
                e("lie-class.cl-strong", json!(8), Derived),
                e("class-formula.value", json!(8), Derived),
                e("bounds.derived-augmentation-index", json!(8), Derived),
                e("env-info.dim-u", json!(32), Trivial),
            ],
        },
        CatalogEntry {
            name: "klein-units",
            summary: "[x,y] = x, x^[2] = 0, y^[2] = y over F_2; unit group is a Klein four group",
            text: "p = 2\nbasis = x y\n[brackets]\nx y = x\n[pmap]\ny = y\n",
            expected: vec![
                e("units.order", json!(4), Published),
                e("units.abelian", json!(true), Published),
                e("units.exponent", json!(2), Published),
                e("units.elementary-abelian", json!(true), Published),
                e("theorem.bounded-engel", json!(false), Published),
                e("lie-class.cl-lie", Value::Null, Derived),
            ],
        },
        CatalogEntry {
            name: "sharpness-cbm",
            summary: "Heisenberg algebra over F_2 with z^[2] = z: center-by-metabelian, not metabelian",
            text: "p = 2\nbasis = x y z\n[brackets]\nx y = z\n[pmap]\nz = z\n",
            expected: vec![
                e("theorem.center-by-metabelian", json!(true), Published),
                e("theorem.metabelian", json!(false), Published),
            ],
        },
        CatalogEntry {
            name: "torus-nonsolvable",
            summary: "Heisenberg algebra over F_3 with central toral z^[3] = z",
            text: "p = 3\nbasis = x y z\n[brackets]\nx y = z\n[pmap]\nz = z\n",
            expected: vec![
                e("theorem.lie-solvable", json!(false), Derived),
                e("theorem.lie-nilpotent", json!(false), Derived),
                e("derived-length.dl-lie", Value::Null, Derived),
                e("lie-class.cl-lie", Value::Null, Derived),
            ],
        },
        CatalogEntry {
            name: "metabelian-p2-rank2",
            summary: "over F_2, [x,y] = z1, [x,w] = z2 with two-dimensional central L' and zero p-map",
            text: "p = 2\nbasis = x y w z1 z2\n[brackets]\nx y = z1\nx w = z2\n",
            expected: vec![
                e("theorem.metabelian", json!(true), Derived),
                e("theorem.min-derived-length", json!(true), Derived),
            ],
        },
    ]
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|c| c.name == name)
}
