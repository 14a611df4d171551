//! Command execution and report assembly.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cli::catalog::{CatalogEntry, Expectation};
use crate::cli::format::serialize;
use crate::env::{AssocAlgebra, EnvAlgebra, EnvConfig};
use crate::error::{Error, Result};
use crate::gfp::{Matrix, Subspace};
use crate::lieprops::Chain;
use crate::rla::RestrictedLieAlgebra;
use crate::theorems::{self, AlgebraStudy, BoundCheck, TheoremVerdict, VerdictStatus};
use crate::units;

pub const THEOREM_IDS: [&str; 6] = [
    "lie-nilpotent",
    "bounded-engel",
    "lie-solvable",
    "metabelian",
    "center-by-metabelian",
    "min-derived-length",
];

const ASSOCIATIVITY_EXHAUSTIVE_DIM: usize = 64;
const SAMPLES: usize = 200;
const PMAP_EXHAUSTIVE_CAP: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    EnvInfo,
    LieClass,
    DerivedLength,
    DimSubalgebras,
    ClassFormula,
    Bounds,
    Theorem(String),
    Involution,
    Units,
    All,
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Command> {
        let s = s.trim();
        let (head, arg) = match s.split_once(|c: char| c == ':' || c.is_whitespace()) {
            Some((h, a)) => (h, Some(a.trim())),
            None => (s, None),
        };
        let bad = || Error::Invalid(format!("unknown check `{s}`"));
        let cmd = match head {
            "validate" => Command::Validate,
            "env-info" => Command::EnvInfo,
            "lie-class" => Command::LieClass,
            "derived-length" => Command::DerivedLength,
            "dim-subalgebras" => Command::DimSubalgebras,
            "class-formula" => Command::ClassFormula,
            "bounds" => Command::Bounds,
            "involution" => Command::Involution,
            "units" => Command::Units,
            "all" => Command::All,
            "theorem" => {
                let id = arg.filter(|a| THEOREM_IDS.contains(a)).ok_or_else(|| {
                    Error::Invalid(format!("`theorem` needs one of: {}", THEOREM_IDS.join(", ")))
                })?;
                return Ok(Command::Theorem(id.to_string()));
            }
            _ => return Err(bad()),
        };
        if arg.is_some() {
            return Err(bad());
        }
        Ok(cmd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunOptions {
    pub max_env_dim: usize,
    pub emit_chains: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { max_env_dim: crate::env::DEFAULT_MAX_ENV_DIM, emit_chains: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Info,
    Skipped,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub verdict: Verdict,
    pub value: Value,
    pub evidence: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expectation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn new(id: impl Into<String>, verdict: Verdict, value: Value) -> Check {
        Check { id: id.into(), verdict, value, evidence: Map::new(), expected: None, note: None }
    }

    fn info(id: impl Into<String>, value: Value) -> Check {
        Check::new(id, Verdict::Info, value)
    }

    fn test(id: impl Into<String>, ok: bool, value: Value) -> Check {
        Check::new(id, if ok { Verdict::Pass } else { Verdict::Fail }, value)
    }

    fn skipped(id: impl Into<String>, why: impl Into<String>) -> Check {
        Check::new(id, Verdict::Skipped, Value::Null).with_note(why)
    }

    /// Size caps skip the check; anything else is an error.
    fn from_error(id: impl Into<String>, err: &Error) -> Check {
        match err {
            Error::SizeCap { .. } => Check::skipped(id, err.to_string()),
            _ => Check::new(id, Verdict::Error, Value::Null).with_note(err.to_string()),
        }
    }

    fn with(mut self, key: &str, v: Value) -> Check {
        self.evidence.insert(key.into(), v);
        self
    }

    fn with_map(mut self, m: Map<String, Value>) -> Check {
        self.evidence.extend(m);
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraInfo {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub p: u8,
    pub dim: usize,
    pub basis: Vec<String>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub section: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub options: RunOptions,
    pub algebra: AlgebraInfo,
    pub checks: Vec<Check>,
    pub timings: Vec<Timing>,
}

impl Report {
    pub fn disagreements(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail).count()
    }

    pub fn errors(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict == Verdict::Error).count()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// The comparable part of the report: no timings.
    pub fn payload(&self) -> Value {
        json!({
            "command": self.command,
            "options": self.options,
            "algebra": self.algebra,
            "checks": self.checks,
            "summary": {"disagreements": self.disagreements(), "errors": self.errors()},
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.payload();
        v["timings"] = json!(self.timings);
        v
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let a = &self.algebra;
        let _ = writeln!(
            s,
            "algebra: {} (p = {}, dim {}, basis {})",
            a.name.as_deref().unwrap_or("<file>"),
            a.p,
            a.dim,
            a.basis.join(" ")
        );
        for c in &self.checks {
            let verdict = serde_json::to_value(c.verdict).unwrap();
            let _ = write!(s, "  {:<8} {:<52} {}", verdict.as_str().unwrap(), c.id, compact(&c.value));
            if let Some(e) = &c.expected {
                let _ = write!(s, "  (expected {})", compact(&e.value));
            }
            if let Some(n) = &c.note {
                let _ = write!(s, "  [{n}]");
            }
            s.push('\n');
            if !c.evidence.is_empty() {
                let _ = writeln!(s, "           {}", compact(&Value::Object(c.evidence.clone())));
            }
        }
        let _ = writeln!(s, "  disagreements: {}, errors: {}", self.disagreements(), self.errors());
        s
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn opt(v: Option<usize>) -> Value {
    v.map_or(Value::Null, |x| json!(x))
}

fn subspace_names(env: &EnvAlgebra, s: &Subspace) -> Vec<String> {
    s.rows()
        .into_iter()
        .map(|row| {
            let terms: Vec<String> = row
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(
                    |(k, &c)| {
                        if c == 1 {
                            env.monomial_name(k)
                        } else {
                            format!("{c}*{}", env.monomial_name(k))
                        }
                    },
                )
                .collect();
            terms.join(" + ")
        })
        .collect()
}

fn chain_evidence(env: &EnvAlgebra, chain: &Chain, emit: bool) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("dims".into(), json!(chain.dims()));
    m.insert("verdict".into(), json!(chain.verdict));
    if emit {
        let bases: Vec<Vec<String>> = chain.terms.iter().map(|t| subspace_names(env, t)).collect();
        m.insert("bases".into(), json!(bases));
    }
    m
}

// ------------------------------------------------------------------------------------------
// sections

fn sample_elements(lie: &RestrictedLieAlgebra, rng: &mut ChaCha8Rng) -> Vec<Vec<u8>> {
    let n = lie.dim();
    let total = (lie.p() as u64).checked_pow(n as u32);
    if total.is_some_and(|t| t <= PMAP_EXHAUSTIVE_CAP) {
        return lie.whole().elements().collect();
    }
    let f = lie.field();
    let mut out: Vec<Vec<u8>> = (0..n).map(|i| lie.basis_element(i).into_coords()).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = lie.basis_element(i).into_coords();
            v[j] = f.add(v[j], 1);
            out.push(v);
        }
    }
    for _ in 0..SAMPLES {
        out.push((0..n).map(|_| rng.gen_range(0..lie.p())).collect());
    }
    out
}

fn validate(study: &AlgebraStudy) -> Vec<Check> {
    let lie = study.lie();
    let mut out = Vec::new();
    let violations = lie.validate();
    out.push(
        Check::test("validate.axioms", violations.is_empty(), json!(violations.len()))
            .with("violations", json!(violations)),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11e);
    let xs = sample_elements(lie, &mut rng);
    let p = lie.p() as u64;
    let bad_ad = xs
        .iter()
        .filter(|x| {
            let lhs = lie.ad_matrix_coords(&lie.pmap_coords(x));
            lhs != lie.ad_matrix_coords(x).pow(p).expect("square matrix")
        })
        .count();
    out.push(Check::test("validate.ad-pmap", bad_ad == 0, json!(bad_ad)).with("elements", json!(xs.len())));
    match study.env() {
        Ok(env) => {
            let bad = xs
                .iter()
                .filter(|x| {
                    env.embed_coords(&lie.pmap_coords(x)) != env.power(&env.embed_coords(x), p as u32)
                })
                .count();
            out.push(
                Check::test("validate.pmap-embed", bad == 0, json!(bad)).with("elements", json!(xs.len())),
            );
            let n = env.dim();
            let mut triples = Vec::new();
            let exhaustive = n <= ASSOCIATIVITY_EXHAUSTIVE_DIM;
            if exhaustive {
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            triples.push((a, b, c));
                        }
                    }
                }
            } else {
                for _ in 0..SAMPLES {
                    triples.push((rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)));
                }
            }
            let bad = triples
                .iter()
                .filter(|&&(a, b, c)| {
                    let (ea, eb, ec) = (env.unit_vector(a), env.unit_vector(b), env.unit_vector(c));
                    env.multiply(&env.multiply(&ea, &eb), &ec) != env.multiply(&ea, &env.multiply(&eb, &ec))
                })
                .count();
            out.push(
                Check::test("validate.associativity", bad == 0, json!(bad))
                    .with("triples", json!(triples.len()))
                    .with("regime", json!(if exhaustive { "exhaustive" } else { "sampled" })),
            );
        }
        Err(e) => {
            out.push(Check::from_error("validate.pmap-embed", &e));
            out.push(Check::from_error("validate.associativity", &e));
        }
    }
    out
}

fn env_info(study: &AlgebraStudy) -> Vec<Check> {
    let s = study.structure();
    let pi = Check::info("env-info.pi-conditions-with-derived", json!(s.pi_structure_with_derived()))
        .with("structure", json!(s));
    let mut out = vec![pi];
    out.extend(match study.env() {
        Ok(env) => {
            let gens: Vec<String> =
                (0..study.lie().dim()).map(|i| env.monomial_name(env.generator_rank(i))).collect();
            let embedded = env.embedded_lie().rank();
            vec![
                Check::info("env-info.dim-u", json!(env.dim())).with("generators", json!(gens)),
                Check::test("env-info.embedding-injective", embedded == study.lie().dim(), json!(embedded)),
            ]
        }
        Err(e) => vec![Check::from_error("env-info.dim-u", &e)],
    });
    out
}

fn lie_class(study: &AlgebraStudy, opts: &RunOptions) -> Vec<Check> {
    let (env, an) = match (study.env(), study.analysis()) {
        (Ok(e), Ok(a)) => (e, a),
        (Err(e), _) | (_, Err(e)) => return vec![Check::from_error("lie-class.cl-lie", &e)],
    };
    let (cl, cls) = (an.cl_lie(), an.cl_strong());
    let consistent = match (cl, cls) {
        (Some(a), Some(b)) => a <= b,
        (None, None) => true,
        _ => false,
    };
    vec![
        Check::info("lie-class.cl-lie", opt(cl)).with_map(chain_evidence(env, &an.gamma, opts.emit_chains)),
        Check::info("lie-class.cl-strong", opt(cls)).with_map(chain_evidence(
            env,
            &an.upper_powers,
            opts.emit_chains,
        )),
        Check::test("lie-class.consistency", consistent, json!(consistent)),
    ]
}

fn derived_length(study: &AlgebraStudy, opts: &RunOptions) -> Vec<Check> {
    let (env, an) = match (study.env(), study.analysis()) {
        (Ok(e), Ok(a)) => (e, a),
        (Err(e), _) | (_, Err(e)) => return vec![Check::from_error("derived-length.dl-lie", &e)],
    };
    let (dl, dls) = (an.dl_lie(), an.dl_strong());
    let consistent = match (dl, dls) {
        (Some(a), Some(b)) => a <= b,
        (None, Some(_)) => false,
        _ => true,
    };
    vec![
        Check::info("derived-length.dl-lie", opt(dl)).with_map(chain_evidence(
            env,
            &an.derived,
            opts.emit_chains,
        )),
        Check::info("derived-length.dl-strong", opt(dls)).with_map(chain_evidence(
            env,
            &an.strong_derived,
            opts.emit_chains,
        )),
        Check::test("derived-length.consistency", consistent, json!(consistent)),
    ]
}

fn dim_subalgebras(study: &AlgebraStudy) -> Vec<Check> {
    let m_max = theorems::default_m_max(study);
    let closed = theorems::dim_subalgebras_closed(study, m_max);
    let rec = theorems::dim_subalgebras_recursive(study, m_max);
    let base_ok = rec.terms.get(1).is_none_or(|d| *d == study.lie().derived_subalgebra_p());
    let mut out = vec![Check::test("dim-subalgebras.base-case", base_ok, json!(base_ok))];
    match theorems::dim_subalgebras_direct(study, m_max) {
        Ok(direct) => {
            let agree = direct.same_subspaces(&closed) && direct.same_subspaces(&rec);
            out.push(
                Check::test("dim-subalgebras.agreement", agree, json!(direct.dims()))
                    .with("direct", json!(direct.dims()))
                    .with("closed_form", json!(closed.dims()))
                    .with("recursive", json!(rec.dims()))
                    .with("m_max", json!(m_max)),
            );
        }
        Err(e) => {
            let agree = closed.same_subspaces(&rec);
            out.push(
                Check::test("dim-subalgebras.agreement", agree, json!(closed.dims()))
                    .with("closed_form", json!(closed.dims()))
                    .with("recursive", json!(rec.dims()))
                    .with_note(format!("direct method unavailable: {e}")),
            );
        }
    }
    out
}

fn class_formula(study: &AlgebraStudy) -> Vec<Check> {
    match theorems::class_formula(study) {
        Ok(v) => {
            let mut out = vec![Check::info("class-formula.value", json!(v))];
            match study.analysis() {
                Ok(an) => out.push(
                    Check::test(
                        "class-formula.matches-strong-class",
                        an.cl_strong() == Some(v),
                        opt(an.cl_strong()),
                    )
                    .with("formula", json!(v)),
                ),
                Err(e) => out.push(Check::from_error("class-formula.matches-strong-class", &e)),
            }
            out
        }
        Err(Error::Hypothesis(msg)) => {
            vec![Check::new("class-formula.value", Verdict::Skipped, Value::Null).with_note(msg)]
        }
        Err(e) => vec![Check::from_error("class-formula.value", &e)],
    }
}

fn bound_check(b: BoundCheck) -> Check {
    let id = format!("bounds.{}", b.id);
    match (b.skipped, b.holds) {
        (Some(why), _) => Check::skipped(id, why),
        (None, Some(h)) => Check::test(id, h, json!(h)).with_map(b.values),
        (None, None) => Check::new(id, Verdict::Error, Value::Null),
    }
}

fn bounds(study: &AlgebraStudy) -> Vec<Check> {
    match theorems::check_bounds(study) {
        Ok(list) => {
            let mut out: Vec<Check> = Vec::new();
            for b in list {
                if let Some(t) = b.values.get("t") {
                    out.push(Check::info("bounds.derived-augmentation-index", t.clone()));
                }
                out.push(bound_check(b));
            }
            out
        }
        Err(e) => vec![Check::from_error("bounds", &e)],
    }
}

fn verdict_check(id: String, v: TheoremVerdict) -> Check {
    let (verdict, note) = match &v.status {
        VerdictStatus::Agree => (Verdict::Pass, None),
        VerdictStatus::Disagree => {
            (Verdict::Fail, Some("structural and computational sides disagree".to_string()))
        }
        VerdictStatus::OneSided(r) => (Verdict::Info, Some(r.clone())),
        VerdictStatus::NotApplicable(r) => (Verdict::Skipped, Some(r.clone())),
    };
    let mut c = Check::new(id, verdict, json!(v.computational))
        .with("structural", json!(v.structural))
        .with("computational", json!(v.computational))
        .with_map(v.evidence);
    c.note = note;
    c
}

fn theorem(study: &AlgebraStudy, id: &str) -> Check {
    let v = match id {
        "lie-nilpotent" => theorems::predicate_lie_nilpotent(study),
        "bounded-engel" => theorems::predicate_bounded_engel(study),
        "lie-solvable" => theorems::predicate_lie_solvable(study),
        "metabelian" => theorems::predicate_metabelian(study),
        "center-by-metabelian" => theorems::predicate_center_by_metabelian(study),
        "min-derived-length" => theorems::predicate_min_derived_length(study),
        other => unreachable!("theorem id `{other}` is validated at parse time"),
    };
    verdict_check(format!("theorem.{id}"), v)
}

fn involution(study: &AlgebraStudy) -> Vec<Check> {
    if study.p() == 2 {
        return ["involution.square-identity", "involution.decomposition"]
            .iter()
            .map(|id| Check::skipped(*id, "requires p > 2"))
            .chain(theorems::involution_equivalences(study).into_iter().map(|v| {
                let id = v.id.clone();
                verdict_check(id.replacen("involution-", "involution.", 1), v)
            }))
            .collect();
    }
    let (env, (plus, minus)) = match (study.env(), study.plus_minus()) {
        (Ok(e), Ok(pm)) => (e, pm),
        (Err(e), _) | (_, Err(e)) => return vec![Check::from_error("involution.square-identity", &e)],
    };
    let t = env.involution_matrix();
    let square_ok = t.mul(&t).expect("square") == Matrix::identity(env.field(), env.dim());
    let direct =
        plus.rank() + minus.rank() == env.dim() && plus.intersect(minus).expect("same ambient").is_zero();
    let contains_lie = env.embedded_lie().is_subspace_of(minus);
    let mut out = vec![
        Check::test("involution.square-identity", square_ok, json!(square_ok))
            .with("monomials", json!(env.dim())),
        Check::test("involution.decomposition", direct, json!([plus.rank(), minus.rank()])),
        Check::test("involution.minus-contains-l", contains_lie, json!(contains_lie)),
    ];
    for v in theorems::involution_equivalences(study) {
        let id = v.id.replacen("involution-", "involution.", 1);
        out.push(verdict_check(id, v));
    }
    out
}

fn units_section(study: &AlgebraStudy) -> Vec<Check> {
    let env = match study.env() {
        Ok(e) => e,
        Err(e) => return vec![Check::from_error("units.order", &e)],
    };
    let g = match units::enumerate_units(env) {
        Ok(g) => g,
        Err(e) => return vec![Check::from_error("units.order", &e)],
    };
    let mut out = vec![Check::info("units.order", json!(g.order()))];
    let lie = study.lie();
    if lie.is_p_nilpotent_subspace(&lie.whole()) {
        let shifted = units::one_plus_augmentation(env);
        let aug_one = g.elements().iter().filter(|a| a[0] == 1).count();
        let ok = shifted.iter().all(|a| g.contains(a)) && aug_one == shifted.len();
        out.push(Check::test("units.one-plus-augmentation", ok, json!(shifted.len())));
    } else {
        out.push(Check::skipped("units.one-plus-augmentation", "L is not p-nilpotent"));
    }
    match units::group_properties(env, &g) {
        Ok(r) => {
            out.push(Check::info("units.abelian", json!(r.abelian)));
            out.push(Check::info("units.exponent", json!(r.exponent)));
            out.push(Check::info("units.elementary-abelian", json!(r.elementary_abelian)));
            out.push(
                Check::info("units.nilpotent", json!(r.nilpotent))
                    .with("lower_central_orders", json!(r.lower_central_orders)),
            );
            out.push(
                Check::info("units.solvable", json!(r.solvable))
                    .with("derived_orders", json!(r.derived_orders)),
            );
        }
        Err(e) => out.push(Check::from_error("units.abelian", &e)),
    }
    out
}

// ------------------------------------------------------------------------------------------

fn annotate(checks: &mut [Check], expected: &[Expectation]) {
    for c in checks.iter_mut() {
        if let Some(e) = expected.iter().find(|e| e.check == c.id) {
            if matches!(c.verdict, Verdict::Skipped | Verdict::Error) {
                c.expected = Some(e.clone());
                continue;
            }
            if c.value != e.value {
                c.verdict = Verdict::Fail;
                c.note = Some(format!("expected {}, computed {}", compact(&e.value), compact(&c.value)));
            } else if c.verdict == Verdict::Info {
                c.verdict = Verdict::Pass;
            }
            c.expected = Some(e.clone());
        }
    }
}

/// Runs `command` on `lie`, comparing against `expected` where check ids match.
pub fn run(
    command: &Command,
    lie: RestrictedLieAlgebra,
    name: Option<&str>,
    expected: &[Expectation],
    opts: &RunOptions,
) -> Report {
    let algebra = AlgebraInfo {
        name: name.map(String::from),
        p: lie.p(),
        dim: lie.dim(),
        basis: lie.names().to_vec(),
        text: serialize(&lie),
    };
    let study = AlgebraStudy::new(lie, EnvConfig { max_dim: opts.max_env_dim });
    let mut checks = Vec::new();
    let mut timings = Vec::new();
    let mut section = |label: &str, f: &dyn Fn() -> Vec<Check>| {
        let t = Instant::now();
        checks.extend(f());
        timings.push(Timing { section: label.into(), seconds: t.elapsed().as_secs_f64() });
    };
    let all = *command == Command::All;
    if all || *command == Command::Validate {
        section("validate", &|| validate(&study));
    }
    if all || *command == Command::EnvInfo {
        section("env-info", &|| env_info(&study));
    }
    if all || *command == Command::LieClass {
        section("lie-class", &|| lie_class(&study, opts));
    }
    if all || *command == Command::DerivedLength {
        section("derived-length", &|| derived_length(&study, opts));
    }
    if all || *command == Command::DimSubalgebras {
        section("dim-subalgebras", &|| dim_subalgebras(&study));
    }
    if all || *command == Command::ClassFormula {
        section("class-formula", &|| class_formula(&study));
    }
    if all || *command == Command::Bounds {
        section("bounds", &|| bounds(&study));
    }
    match command {
        Command::Theorem(id) => section("theorem", &|| vec![theorem(&study, id)]),
        Command::All => {
            for id in THEOREM_IDS {
                section(&format!("theorem.{id}"), &|| vec![theorem(&study, id)]);
            }
        }
        _ => {}
    }
    if all || *command == Command::Involution {
        section("involution", &|| involution(&study));
    }
    if all || *command == Command::Units {
        section("units", &|| units_section(&study));
    }
    annotate(&mut checks, expected);
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Report { command: command_label(command), options: opts.clone(), algebra, checks, timings }
}

fn command_label(c: &Command) -> String {
    match c {
        Command::Validate => "validate".into(),
        Command::EnvInfo => "env-info".into(),
        Command::LieClass => "lie-class".into(),
        Command::DerivedLength => "derived-length".into(),
        Command::DimSubalgebras => "dim-subalgebras".into(),
        Command::ClassFormula => "class-formula".into(),
        Command::Bounds => "bounds".into(),
        Command::Theorem(id) => format!("theorem {id}"),
        Command::Involution => "involution".into(),
        Command::Units => "units".into(),
        Command::All => "all".into(),
    }
}

/// Runs `command` on a catalog entry with its expectations.
pub fn run_entry(command: &Command, entry: &CatalogEntry, opts: &RunOptions) -> Result<Report> {
    Ok(run(command, entry.algebra()?, Some(entry.name), &entry.expected, opts))
}

/// 0 if no disagreements and no errors, 1 on any disagreement, 2 otherwise.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.disagreements() > 0) {
        1
    } else if reports.iter().any(|r| r.errors() > 0) {
        2
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::catalog::{catalog, find};

    #[test]
    fn command_parsing() {
        assert_eq!("all".parse::<Command>().unwrap(), Command::All);
        assert_eq!("theorem metabelian".parse::<Command>().unwrap(), Command::Theorem("metabelian".into()));
        assert_eq!(
            "theorem:lie-solvable".parse::<Command>().unwrap(),
            Command::Theorem("lie-solvable".into())
        );
        assert!("theorem".parse::<Command>().is_err());
        assert!("theorem nope".parse::<Command>().is_err());
        assert!("frobnicate".parse::<Command>().is_err());
    }

    #[test]
    fn lie_class_heisenberg_p5() {
        let r =
            run_entry(&Command::LieClass, &find("heisenberg-p5").unwrap(), &RunOptions::default()).unwrap();
        assert_eq!(r.check("lie-class.cl-lie").unwrap().value, json!(5));
        assert_eq!(r.check("lie-class.cl-strong").unwrap().value, json!(5));
        assert_eq!(r.check("lie-class.cl-lie").unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn derived_length_example() {
        let r = run_entry(&Command::DerivedLength, &find("example-6-1").unwrap(), &RunOptions::default())
            .unwrap();
        assert_eq!(r.check("derived-length.dl-lie").unwrap().value, json!(3));
        assert_eq!(r.check("derived-length.dl-strong").unwrap().value, json!(4));
    }

    #[test]
    fn deterministic_payload() {
        let e = find("klein-units").unwrap();
        let opts = RunOptions { emit_chains: true, ..RunOptions::default() };
        let a = run_entry(&Command::All, &e, &opts).unwrap();
        let b = run_entry(&Command::All, &e, &opts).unwrap();
        assert_eq!(a.payload().to_string(), b.payload().to_string());
        assert_eq!(exit_code(&[a]), 0);
    }

    #[test]
    fn size_cap_is_surfaced() {
        let opts = RunOptions { max_env_dim: 16, emit_chains: false };
        let r = run_entry(&Command::LieClass, &find("heisenberg-p3-central").unwrap(), &opts).unwrap();
        let c = r.check("lie-class.cl-lie").unwrap();
        assert_eq!(c.verdict, Verdict::Skipped);
        assert!(c.note.as_ref().unwrap().contains("27"), "{c:?}");
    }

    #[test]
    fn expectations_are_all_exercised() {
        for entry in catalog().iter().filter(|e| !matches!(e.name, "heisenberg-p5" | "heisenberg-p7")) {
            let r = run_entry(&Command::All, entry, &RunOptions::default()).unwrap();
            for exp in &entry.expected {
                let c =
                    r.check(exp.check).unwrap_or_else(|| panic!("{}: no check {}", entry.name, exp.check));
                assert_eq!(c.verdict, Verdict::Pass, "{}: {c:?}", entry.name);
            }
            assert_eq!(exit_code(std::slice::from_ref(&r)), 0, "{}\n{}", entry.name, r.to_text());
        }
    }
}
