//! Structural characterizations of Lie properties of u(L) checked against direct computation
//! in u(L), dimension subalgebras computed three independent ways, the strong class formula,
//! and the class and derived-length bounds.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::env::{augmentation_nilpotency_index, AssocAlgebra, EnvAlgebra, EnvConfig};
use crate::error::{Error, Result};
use crate::gfp::Subspace;
use crate::lieprops::{
    analyze, commutator_span, engel_witness_in, is_bounded_engel, subset_derived_length, subset_nilpotency,
    EngelMode, EngelVerdict, LieAnalysis, ENGEL_EXHAUSTIVE_CAP,
};
use crate::rla::{Exponent, RestrictedLieAlgebra, SeriesVerdict};

/// Element pairs are enumerated exhaustively for the class lower bound up to this many pairs.
const EXPONENT_PAIR_CAP: u64 = 1 << 16;
const EXPONENT_SAMPLES: usize = 256;

/// least k with 2^k >= x
pub fn ceil_log2(x: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < x {
        k += 1;
    }
    k
}

/// ceil(log2(p + 1)), the least Lie derived length of a non-commutative u(L).
pub fn min_derived_length(p: u8) -> usize {
    ceil_log2(p as usize + 1)
}

/// A restricted Lie algebra together with lazily computed data about u(L) shared by all checks.
pub struct AlgebraStudy {
    lie: RestrictedLieAlgebra,
    config: EnvConfig,
    env: OnceLock<std::result::Result<EnvAlgebra, Error>>,
    analysis: OnceLock<LieAnalysis>,
    parts: OnceLock<Result<(Subspace, Subspace)>>,
}

impl AlgebraStudy {
    pub fn new(lie: RestrictedLieAlgebra, config: EnvConfig) -> AlgebraStudy {
        AlgebraStudy { lie, config, env: OnceLock::new(), analysis: OnceLock::new(), parts: OnceLock::new() }
    }

    pub fn lie(&self) -> &RestrictedLieAlgebra {
        &self.lie
    }

    pub fn config(&self) -> &EnvConfig {
        &self.config
    }

    pub fn env(&self) -> Result<&EnvAlgebra> {
        self.env
            .get_or_init(|| EnvAlgebra::build_with(&self.lie, &self.config))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn analysis(&self) -> Result<&LieAnalysis> {
        let env = self.env()?;
        Ok(self.analysis.get_or_init(|| analyze(env)))
    }

    pub fn plus_minus(&self) -> Result<&(Subspace, Subspace)> {
        let env = self.env()?;
        self.parts.get_or_init(|| env.plus_minus_parts()).as_ref().map_err(Clone::clone)
    }

    pub fn p(&self) -> u8 {
        self.lie.p()
    }

    /// Facts about L used by the structural sides.
    pub fn structure(&self) -> Structure {
        let l = &self.lie;
        let derived = l.derived_subalgebra();
        let derived_p = l.restricted_closure(&derived);
        Structure {
            abelian: l.is_abelian(),
            nilpotent: l.is_nilpotent(),
            derived_dim: derived.rank(),
            derived_central: l.is_central(&derived),
            derived_power_zero: l.power_subalgebra(&derived, 1).is_zero(),
            derived_p_nilpotent: l.is_p_nilpotent_subspace(&derived),
            derived_p_dim: derived_p.rank(),
            derived_p_central: l.is_central(&derived_p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub abelian: bool,
    pub nilpotent: bool,
    pub derived_dim: usize,
    pub derived_central: bool,
    /// (L')^[p] = 0
    pub derived_power_zero: bool,
    pub derived_p_nilpotent: bool,
    pub derived_p_dim: usize,
    pub derived_p_central: bool,
}

impl Structure {
    /// L'_p is central and p-nilpotent: the subalgebras A = L, B = L'_p then satisfy the
    /// structural conditions for u(L) to be PI.
    pub fn pi_structure_with_derived(&self) -> bool {
        self.derived_p_central && self.derived_p_nilpotent
    }
}

// ------------------------------------------------------------------------------------------
// dimension subalgebras

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableMethod {
    Direct,
    ClosedForm,
    Recursive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionSubalgebraTable {
    pub method: TableMethod,
    /// terms[k] = D_(k+1), for k < m_max
    pub terms: Vec<Subspace>,
}

impl DimensionSubalgebraTable {
    pub fn get(&self, m: usize) -> &Subspace {
        &self.terms[m - 1]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::rank).collect()
    }

    /// d_(m) = dim D_(m) - dim D_(m+1), for m < m_max.
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.terms.windows(2).map(|w| w[0].rank() - w[1].rank()).collect()
    }

    pub fn vanishes(&self) -> bool {
        self.terms.last().is_some_and(Subspace::is_zero)
    }

    pub fn same_subspaces(&self, other: &DimensionSubalgebraTable) -> bool {
        self.terms == other.terms
    }
}

/// A row count that reaches the vanishing point whenever u(L) is strongly Lie nilpotent:
/// D_(m) = 0 once m exceeds p^(dim L'_p).
pub fn default_m_max(study: &AlgebraStudy) -> usize {
    let l = study.lie();
    let dp = l.derived_subalgebra_p().rank() as u32;
    let bound = (l.p() as usize).checked_pow(dp).unwrap_or(usize::MAX).min(4096);
    bound.max(l.dim()) + 2
}

/// D_(m) = L ∩ u(L)^(m), read off the upper Lie powers of u(L).
pub fn dim_subalgebras_direct(study: &AlgebraStudy, m_max: usize) -> Result<DimensionSubalgebraTable> {
    let env = study.env()?;
    let an = study.analysis()?;
    let terms = (0..m_max).map(|k| env.restrict_to_lie(&an.upper_powers.term(k))).collect();
    Ok(DimensionSubalgebraTable { method: TableMethod::Direct, terms })
}

/// D_(m+1) = sum over (i-1) p^j >= m of gamma_i(L)^{[p]^j}.
pub fn dim_subalgebras_closed(study: &AlgebraStudy, m_max: usize) -> DimensionSubalgebraTable {
    let l = study.lie();
    let gamma = l.lower_central_series();
    let gamma_at = |i: usize| -> Subspace {
        // gamma[0] = gamma_1
        gamma.chain.get(i - 1).cloned().unwrap_or_else(|| match gamma.verdict {
            SeriesVerdict::Terminates(_) => l.zero_subspace(),
            SeriesVerdict::Stabilizes { .. } => gamma.chain.last().unwrap().clone(),
        })
    };
    let p = l.p() as usize;
    let mut terms = vec![l.whole()];
    for m in 1..m_max {
        // past the stored chain gamma_i is constant, so the largest i needed is the one where
        // j = 0 first becomes admissible
        let i_max = (m + 1).max(gamma.chain.len() + 1);
        let mut d = l.zero_subspace();
        for i in 2..=i_max {
            let g = gamma_at(i);
            if g.is_zero() {
                continue;
            }
            let mut j = 0u32;
            while (i - 1) * p.pow(j) < m {
                j += 1;
            }
            d.absorb(&l.power_subalgebra(&g, j));
        }
        terms.push(d);
    }
    DimensionSubalgebraTable { method: TableMethod::ClosedForm, terms }
}

/// D_(1) = L, D_(2) = L'_p, D_(m+1) = D_(ceil((m+p)/p))^[p] + [D_(m), L] for m >= 2.
pub fn dim_subalgebras_recursive(study: &AlgebraStudy, m_max: usize) -> DimensionSubalgebraTable {
    let l = study.lie();
    let p = l.p() as usize;
    let mut memo: Vec<Option<Subspace>> = vec![None; m_max + 1];
    fn term(l: &RestrictedLieAlgebra, p: usize, m: usize, memo: &mut Vec<Option<Subspace>>) -> Subspace {
        if let Some(d) = &memo[m] {
            return d.clone();
        }
        let d = match m {
            1 => l.whole(),
            2 => l.derived_subalgebra_p(),
            _ => {
                let k = m - 1;
                let prev = term(l, p, k, memo);
                let earlier = term(l, p, (k + p).div_ceil(p), memo);
                let mut d = l.power_subalgebra(&earlier, 1);
                d.absorb(&l.bracket_span(&prev, &l.whole()));
                d
            }
        };
        memo[m] = Some(d.clone());
        d
    }
    let terms = (1..=m_max).map(|m| term(l, p, m, &mut memo)).collect();
    DimensionSubalgebraTable { method: TableMethod::Recursive, terms }
}

/// 1 + (p-1) * sum_{m>=1} m d_(m+1), from a table that reaches zero.
pub fn class_formula_from_table(p: u8, table: &DimensionSubalgebraTable) -> Result<usize> {
    if !table.vanishes() {
        return Err(Error::Hypothesis(
            "dimension subalgebras do not vanish; u(L) is not strongly Lie nilpotent".into(),
        ));
    }
    let d = table.quotient_dims();
    // d[k] = d_(k+1), so d_(m+1) = d[m]
    let sum: usize = (1..d.len()).map(|m| m * d[m]).sum();
    Ok(1 + (p as usize - 1) * sum)
}

/// The strong Lie nilpotency class of u(L) predicted from the dimension subalgebras of L.
pub fn class_formula(study: &AlgebraStudy) -> Result<usize> {
    let s = study.structure();
    if !(s.nilpotent && s.derived_p_nilpotent) {
        return Err(Error::Hypothesis(
            "L is not nilpotent with p-nilpotent L'; u(L) is not Lie nilpotent".into(),
        ));
    }
    let table = dim_subalgebras_closed(study, default_m_max(study));
    class_formula_from_table(study.p(), &table)
}

// ------------------------------------------------------------------------------------------
// verdicts

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "reason")]
pub enum VerdictStatus {
    Agree,
    Disagree,
    /// Only one side could be evaluated.
    OneSided(String),
    NotApplicable(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub id: String,
    pub structural: Option<bool>,
    pub computational: Option<bool>,
    pub status: VerdictStatus,
    pub evidence: Map<String, Value>,
}

impl TheoremVerdict {
    fn new(
        id: &str,
        structural: Option<bool>,
        computational: Option<bool>,
        consistent: bool,
        evidence: Map<String, Value>,
    ) -> Self {
        let status = if !consistent {
            VerdictStatus::Disagree
        } else {
            match (structural, computational) {
                (Some(a), Some(b)) if a == b => VerdictStatus::Agree,
                (Some(_), Some(_)) => VerdictStatus::Disagree,
                (Some(_), None) => VerdictStatus::OneSided("computational side unavailable".into()),
                (None, Some(_)) => VerdictStatus::OneSided("structural side not modeled".into()),
                (None, None) => VerdictStatus::OneSided("neither side evaluated".into()),
            }
        };
        TheoremVerdict { id: id.into(), structural, computational, status, evidence }
    }

    fn not_applicable(id: &str, reason: &str) -> Self {
        TheoremVerdict {
            id: id.into(),
            structural: None,
            computational: None,
            status: VerdictStatus::NotApplicable(reason.into()),
            evidence: Map::new(),
        }
    }

    pub fn agrees(&self) -> bool {
        self.status != VerdictStatus::Disagree
    }
}

fn ev(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn opt(v: Option<usize>) -> Value {
    v.map_or(Value::Null, |x| json!(x))
}

/// u(L) is Lie nilpotent iff strongly Lie nilpotent iff L is nilpotent and L' is p-nilpotent.
pub fn predicate_lie_nilpotent(study: &AlgebraStudy) -> TheoremVerdict {
    let s = study.structure();
    let structural = s.nilpotent && s.derived_p_nilpotent;
    let mut e =
        ev(vec![("l_nilpotent", json!(s.nilpotent)), ("derived_p_nilpotent", json!(s.derived_p_nilpotent))]);
    match study.analysis() {
        Ok(an) => {
            let weak = an.cl_lie().is_some();
            let strong = an.cl_strong().is_some();
            e.insert("gamma_dims".into(), json!(an.gamma.dims()));
            e.insert("upper_power_dims".into(), json!(an.upper_powers.dims()));
            e.insert("cl_lie".into(), opt(an.cl_lie()));
            e.insert("cl_strong".into(), opt(an.cl_strong()));
            TheoremVerdict::new("lie-nilpotent", Some(structural), Some(weak), weak == strong, e)
        }
        Err(err) => {
            e.insert("computational_error".into(), json!(err.to_string()));
            TheoremVerdict::new("lie-nilpotent", Some(structural), None, true, e)
        }
    }
}

fn engel_of_whole(study: &AlgebraStudy) -> Result<(Option<bool>, Value)> {
    let env = study.env()?;
    let exhaustive =
        (study.p() as u64).checked_pow(env.dim() as u32).is_some_and(|c| c <= ENGEL_EXHAUSTIVE_CAP);
    if exhaustive {
        let r = is_bounded_engel(env, EngelMode::Exhaustive)?;
        let v = matches!(r.verdict, EngelVerdict::Engel { .. });
        return Ok((Some(v), serde_json::to_value(&r).unwrap()));
    }
    let an = study.analysis()?;
    if an.cl_lie().is_some() {
        return Ok((Some(true), json!({"mode": "implied-by-lie-nilpotency"})));
    }
    let r = is_bounded_engel(env, EngelMode::WitnessSearch)?;
    let v = match r.verdict {
        EngelVerdict::NotEngel { .. } => Some(false),
        EngelVerdict::Engel { .. } => Some(true),
        EngelVerdict::Undecided => None,
    };
    Ok((v, serde_json::to_value(&r).unwrap()))
}

/// u(L) is bounded Lie Engel iff L is nilpotent and L' is p-nilpotent (the ideal condition is
/// vacuous in finite dimension).
pub fn predicate_bounded_engel(study: &AlgebraStudy) -> TheoremVerdict {
    let s = study.structure();
    let structural = s.nilpotent && s.derived_p_nilpotent;
    let mut e =
        ev(vec![("l_nilpotent", json!(s.nilpotent)), ("derived_p_nilpotent", json!(s.derived_p_nilpotent))]);
    match engel_of_whole(study) {
        Ok((c, report)) => {
            e.insert("engel".into(), report);
            TheoremVerdict::new("bounded-engel", Some(structural), c, true, e)
        }
        Err(err) => {
            e.insert("computational_error".into(), json!(err.to_string()));
            TheoremVerdict::new("bounded-engel", Some(structural), None, true, e)
        }
    }
}

/// For p > 2: u(L) Lie solvable iff strongly Lie solvable iff L' is p-nilpotent. For p = 2 only
/// the direct computation runs.
pub fn predicate_lie_solvable(study: &AlgebraStudy) -> TheoremVerdict {
    let s = study.structure();
    let p = study.p();
    let structural = (p > 2).then_some(s.derived_p_nilpotent);
    let mut e = ev(vec![("derived_p_nilpotent", json!(s.derived_p_nilpotent))]);
    match study.analysis() {
        Ok(an) => {
            let weak = an.dl_lie().is_some();
            let strong = an.dl_strong().is_some();
            e.insert("derived_dims".into(), json!(an.derived.dims()));
            e.insert("strong_derived_dims".into(), json!(an.strong_derived.dims()));
            e.insert("dl_lie".into(), opt(an.dl_lie()));
            e.insert("dl_strong".into(), opt(an.dl_strong()));
            // strong solvability implies solvability for every p; equivalence needs p > 2
            let consistent = if p > 2 { weak == strong } else { !strong || weak };
            TheoremVerdict::new("lie-solvable", structural, Some(weak), consistent, e)
        }
        Err(err) => {
            e.insert("computational_error".into(), json!(err.to_string()));
            TheoremVerdict::new("lie-solvable", structural, None, true, e)
        }
    }
}

/// Which of the three metabelian conditions hold: (p=3, dim L'=1, central, L'^[p]=0),
/// (p=2, dim L'=2, central, L'^[p]=0), (p=2, dim L'=1, L'^[p]=0).
pub fn metabelian_conditions(p: u8, s: &Structure) -> [bool; 3] {
    [
        p == 3 && s.derived_dim == 1 && s.derived_central && s.derived_power_zero,
        p == 2 && s.derived_dim == 2 && s.derived_central && s.derived_power_zero,
        p == 2 && s.derived_dim == 1 && s.derived_power_zero,
    ]
}

pub fn predicate_metabelian(study: &AlgebraStudy) -> TheoremVerdict {
    let s = study.structure();
    if s.abelian {
        return TheoremVerdict::not_applicable("metabelian", "L is abelian");
    }
    let conds = metabelian_conditions(study.p(), &s);
    let structural = conds.iter().any(|&c| c);
    let mut e = ev(vec![("conditions", json!(conds))]);
    match study.analysis() {
        Ok(an) => {
            let weak = an.derived.term(2).is_zero();
            let strong = an.strong_derived.term(2).is_zero();
            e.insert("delta2_dim".into(), json!(an.derived.term(2).rank()));
            e.insert("strong_delta2_dim".into(), json!(an.strong_derived.term(2).rank()));
            TheoremVerdict::new("metabelian", Some(structural), Some(weak), weak == strong, e)
        }
        Err(err) => {
            e.insert("computational_error".into(), json!(err.to_string()));
            TheoremVerdict::new("metabelian", Some(structural), None, true, e)
        }
    }
}

/// [delta^[2](u(L)), u(L)] = 0
pub fn is_center_by_metabelian(study: &AlgebraStudy) -> Result<bool> {
    let env = study.env()?;
    let an = study.analysis()?;
    let full = Subspace::full(env.field(), env.dim());
    Ok(commutator_span(env, &an.derived.term(2), &full, None).is_zero())
}

/// For p > 2: center-by-metabelian iff L abelian or (p=3, dim L'=1, central, L'^[p]=0).
pub fn predicate_center_by_metabelian(study: &AlgebraStudy) -> TheoremVerdict {
    let s = study.structure();
    let p = study.p();
    let structural = (p > 2).then(|| s.abelian || metabelian_conditions(p, &s)[0]);
    let mut e = Map::new();
    if p == 2 {
        e.insert("note".into(), json!("structural classification requires p > 2"));
    }
    match is_center_by_metabelian(study) {
        Ok(c) => {
            let an = study.analysis().expect("computed above");
            e.insert("metabelian".into(), json!(an.derived.term(2).is_zero()));
            // in odd characteristic center-by-metabelian forces metabelian
            let consistent = p == 2 || !c || an.derived.term(2).is_zero();
            TheoremVerdict::new("center-by-metabelian", structural, Some(c), consistent, e)
        }
        Err(err) => {
            e.insert("computational_error".into(), json!(err.to_string()));
            TheoremVerdict::new("center-by-metabelian", structural, None, true, e)
        }
    }
}

/// Conditions for dl to attain ceil(log2(p+1)): (p=2, dim L'=2, central, L'^[p]=0),
/// (p=2, dim L'=1, L'^[p]=0), (p>2, dim L'=1, central, L'^[p]=0).
pub fn min_length_conditions(p: u8, s: &Structure) -> [bool; 3] {
    [
        p == 2 && s.derived_dim == 2 && s.derived_central && s.derived_power_zero,
        p == 2 && s.derived_dim == 1 && s.derived_power_zero,
        p > 2 && s.derived_dim == 1 && s.derived_central && s.derived_power_zero,
    ]
}

pub fn predicate_min_derived_length(study: &AlgebraStudy) -> TheoremVerdict {
    let s = study.structure();
    if s.abelian {
        return TheoremVerdict::not_applicable("min-derived-length", "L is abelian");
    }
    let target = min_derived_length(study.p());
    let conds = min_length_conditions(study.p(), &s);
    let structural = conds.iter().any(|&c| c);
    let mut e = ev(vec![("conditions", json!(conds)), ("target", json!(target))]);
    match study.analysis() {
        Ok(an) => {
            let weak = an.dl_lie() == Some(target);
            let strong = an.dl_strong() == Some(target);
            e.insert("dl_lie".into(), opt(an.dl_lie()));
            e.insert("dl_strong".into(), opt(an.dl_strong()));
            TheoremVerdict::new("min-derived-length", Some(structural), Some(weak), weak == strong, e)
        }
        Err(err) => {
            e.insert("computational_error".into(), json!(err.to_string()));
            TheoremVerdict::new("min-derived-length", Some(structural), None, true, e)
        }
    }
}

// ------------------------------------------------------------------------------------------
// bounds

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub id: String,
    /// `None` when applicable; otherwise why the bound was skipped.
    pub skipped: Option<String>,
    pub holds: Option<bool>,
    pub values: Map<String, Value>,
}

impl BoundCheck {
    fn skip(id: &str, why: impl Into<String>) -> BoundCheck {
        BoundCheck { id: id.into(), skipped: Some(why.into()), holds: None, values: Map::new() }
    }

    fn done(id: &str, holds: bool, values: Map<String, Value>) -> BoundCheck {
        BoundCheck { id: id.into(), skipped: None, holds: Some(holds), values }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairRegime {
    Exhaustive,
    Sampled,
}

/// max over x, y of p^e([x,y]); basis pairs always, plus every element pair when there are at
/// most 2^16 of them and a fixed-seed sample otherwise.
pub fn max_commutator_exponent(lie: &RestrictedLieAlgebra) -> (Option<u32>, PairRegime) {
    let n = lie.dim();
    let p = lie.p() as u64;
    let mut best = Some(0u32);
    let consider = |x: &[u8], y: &[u8], best: &mut Option<u32>| {
        if let Some(b) = best {
            match lie.exponent_coords(&lie.bracket_coords(x, y)) {
                Exponent::Finite(e) => *b = (*b).max(e),
                Exponent::NotPNilpotent => *best = None,
            }
        }
    };
    for i in 0..n {
        for j in (i + 1)..n {
            consider(&lie.basis_element(i).into_coords(), &lie.basis_element(j).into_coords(), &mut best);
        }
    }
    let pairs = p.checked_pow(2 * n as u32);
    if pairs.is_some_and(|c| c <= EXPONENT_PAIR_CAP) {
        let all: Vec<Vec<u8>> = lie.whole().elements().collect();
        for x in &all {
            for y in &all {
                consider(x, y, &mut best);
            }
        }
        (best, PairRegime::Exhaustive)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..EXPONENT_SAMPLES {
            let x: Vec<u8> = (0..n).map(|_| rng.gen_range(0..lie.p())).collect();
            let y: Vec<u8> = (0..n).map(|_| rng.gen_range(0..lie.p())).collect();
            consider(&x, &y, &mut best);
        }
        (best, PairRegime::Sampled)
    }
}

/// t(L'_p): nilpotency index of the augmentation ideal of u(L'_p).
pub fn derived_augmentation_index(study: &AlgebraStudy) -> Result<usize> {
    let l = study.lie();
    let sub = l.restrict_to(&l.derived_subalgebra_p())?;
    augmentation_nilpotency_index(&sub, study.config())
}

pub fn check_bounds(study: &AlgebraStudy) -> Result<Vec<BoundCheck>> {
    let an = study.analysis()?;
    let l = study.lie();
    let p = study.p();
    let s = study.structure();
    let target = min_derived_length(p);
    let mut out = Vec::new();

    match (an.cl_lie(), an.cl_strong()) {
        (Some(cl), Some(cl_strong)) => {
            let (e, regime) = max_commutator_exponent(l);
            let e = e.expect("Lie nilpotent u(L) has p-nilpotent L'");
            let lower = (p as usize).pow(e);
            let upper = (p as usize).checked_pow(s.derived_p_dim as u32).unwrap_or(usize::MAX);
            let holds = lower <= cl && cl <= cl_strong && cl_strong <= upper;
            out.push(BoundCheck::done(
                "nilpotency-class-bounds",
                holds,
                ev(vec![
                    ("p_pow_max_exponent", json!(lower)),
                    ("max_exponent", json!(e)),
                    ("pair_regime", serde_json::to_value(regime).unwrap()),
                    ("cl_lie", json!(cl)),
                    ("cl_strong", json!(cl_strong)),
                    ("p_pow_dim_derived_p", json!(upper)),
                ]),
            ));
        }
        _ => out.push(BoundCheck::skip("nilpotency-class-bounds", "u(L) is not Lie nilpotent")),
    }

    if s.abelian {
        out.push(BoundCheck::skip("derived-length-lower-bound", "L is abelian"));
    } else if let Some(dl) = an.dl_lie() {
        out.push(BoundCheck::done(
            "derived-length-lower-bound",
            dl >= target,
            ev(vec![("dl_lie", json!(dl)), ("ceil_log2_p_plus_1", json!(target))]),
        ));
    } else {
        out.push(BoundCheck::skip("derived-length-lower-bound", "u(L) is not Lie solvable"));
    }

    match an.dl_strong() {
        Some(dl_strong) => {
            let t = derived_augmentation_index(study)?;
            let bound = ceil_log2(2 * t);
            out.push(BoundCheck::done(
                "strong-derived-length-upper-bound",
                dl_strong <= bound,
                ev(vec![("dl_strong", json!(dl_strong)), ("t", json!(t)), ("ceil_log2_2t", json!(bound))]),
            ));
        }
        None => out
            .push(BoundCheck::skip("strong-derived-length-upper-bound", "u(L) is not strongly Lie solvable")),
    }

    if p > 2 {
        let left = an.dl_lie() == Some(target);
        let right = an.cl_lie() == Some(p as usize);
        out.push(BoundCheck::done(
            "min-length-iff-class-p",
            left == right,
            ev(vec![("dl_is_min", json!(left)), ("cl_is_p", json!(right))]),
        ));
    } else {
        out.push(BoundCheck::skip("min-length-iff-class-p", "requires p > 2"));
    }
    Ok(out)
}

// ------------------------------------------------------------------------------------------
// involution

fn subset_engel(env: &EnvAlgebra, s: &Subspace, nilpotent: bool) -> Option<bool> {
    if nilpotent {
        return Some(true);
    }
    engel_witness_in(env, s).0.map(|_| false)
}

/// For p > 2, the Lie nilpotency, Lie solvability and bounded Engel properties of u(L)^+ and
/// u(L)^- each coincide with the same property of u(L) and with its structural condition on L.
pub fn involution_equivalences(study: &AlgebraStudy) -> Vec<TheoremVerdict> {
    let ids = ["involution-engel", "involution-nilpotent", "involution-solvable"];
    if study.p() == 2 {
        return ids.iter().map(|id| TheoremVerdict::not_applicable(id, "requires p > 2")).collect();
    }
    let s = study.structure();
    let (env, an, (plus, minus)) = match (study.env(), study.analysis(), study.plus_minus()) {
        (Ok(e), Ok(a), Ok(pm)) => (e, a, pm),
        (Err(err), ..) | (_, Err(err), _) | (.., Err(err)) => {
            let mut out = Vec::new();
            for id in ids {
                let mut e = Map::new();
                e.insert("computational_error".into(), json!(err.to_string()));
                out.push(TheoremVerdict::new(id, None, None, true, e));
            }
            return out;
        }
    };
    let nil_plus = subset_nilpotency(env, plus);
    let nil_minus = subset_nilpotency(env, minus);
    let sol_plus = subset_derived_length(env, plus);
    let sol_minus = subset_derived_length(env, minus);

    let four_way =
        |id: &str, structural: bool, sides: [(&str, Option<bool>); 3], mut e: Map<String, Value>| {
            for (k, v) in sides {
                e.insert(k.into(), json!(v));
            }
            let known: Vec<bool> = sides.iter().filter_map(|(_, v)| *v).collect();
            let consistent = known.windows(2).all(|w| w[0] == w[1]);
            let computational = if known.len() == 3 { Some(known[0]) } else { None };
            let mut v = TheoremVerdict::new(id, Some(structural), computational, consistent, e);
            if consistent && known.len() < 3 && known.iter().any(|&k| k != structural) {
                v.status = VerdictStatus::Disagree;
            }
            v
        };

    let whole_nil = an.cl_lie().is_some();
    let whole_sol = an.dl_lie().is_some();
    let whole_engel = engel_of_whole(study).ok().and_then(|x| x.0);
    let nil_struct = s.nilpotent && s.derived_p_nilpotent;

    vec![
        four_way(
            "involution-engel",
            nil_struct,
            [
                ("plus", subset_engel(env, plus, nil_plus.value.is_some())),
                ("minus", subset_engel(env, minus, nil_minus.value.is_some())),
                ("whole", whole_engel),
            ],
            Map::new(),
        ),
        four_way(
            "involution-nilpotent",
            nil_struct,
            [
                ("plus", Some(nil_plus.value.is_some())),
                ("minus", Some(nil_minus.value.is_some())),
                ("whole", Some(whole_nil)),
            ],
            ev(vec![
                ("plus_class", opt(nil_plus.value)),
                ("minus_class", opt(nil_minus.value)),
                ("plus_dim", json!(plus.rank())),
                ("minus_dim", json!(minus.rank())),
            ]),
        ),
        four_way(
            "involution-solvable",
            s.derived_p_nilpotent,
            [
                ("plus", Some(sol_plus.value.is_some())),
                ("minus", Some(sol_minus.value.is_some())),
                ("whole", Some(whole_sol)),
            ],
            ev(vec![("plus_length", opt(sol_plus.value)), ("minus_length", opt(sol_minus.value))]),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::Field;

    fn f(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    fn study(l: RestrictedLieAlgebra) -> AlgebraStudy {
        AlgebraStudy::new(l, EnvConfig::default())
    }

    fn heisenberg(p: u32, zp: i64) -> RestrictedLieAlgebra {
        let mut b = RestrictedLieAlgebra::builder(f(p), ["x", "y", "z"]);
        b.bracket(0, 1, &[0, 0, 1]).unwrap();
        b.pmap(2, &[0, 0, zp]).unwrap();
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
        let vs: Vec<_> = rows.iter().map(|r| l.element(r).unwrap()).collect();
        Subspace::rref(l.field(), l.dim(), &vs).unwrap()
    }

    #[test]
    fn log_helpers() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(16), 4);
        assert_eq!(ceil_log2(17), 5);
        assert_eq!(min_derived_length(2), 2);
        assert_eq!(min_derived_length(3), 2);
        assert_eq!(min_derived_length(5), 3);
        assert_eq!(min_derived_length(7), 3);
    }

    #[test]
    fn example_six_one_tables() {
        let st = study(example_six_one());
        let l = st.lie();
        let zvw = span(l, &[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]);
        let vw = span(l, &[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]);
        let w = span(l, &[&[0, 0, 0, 0, 1]]);
        let expected = vec![l.whole(), zvw, vw, w.clone(), w, l.zero_subspace(), l.zero_subspace()];
        let direct = dim_subalgebras_direct(&st, 7).unwrap();
        let closed = dim_subalgebras_closed(&st, 7);
        let rec = dim_subalgebras_recursive(&st, 7);
        assert_eq!(closed.terms, expected);
        assert_eq!(direct.terms, expected);
        assert_eq!(rec.terms, expected);
        assert_eq!(class_formula_from_table(2, &closed).unwrap(), 8);
        assert_eq!(class_formula(&st).unwrap(), 8);
    }

    #[test]
    fn heisenberg_tables() {
        let st = study(heisenberg(3, 0));
        let d = dim_subalgebras_direct(&st, 4).unwrap();
        assert_eq!(d.terms[1], span(st.lie(), &[&[0, 0, 1]]));
        assert!(d.terms[2].is_zero());
        assert_eq!(class_formula(&st).unwrap(), 3);
        let st2 = study(heisenberg(2, 0));
        let c = dim_subalgebras_closed(&st2, 3);
        assert_eq!(c.dims(), vec![3, 1, 0]);
        let a = study(RestrictedLieAlgebra::abelian(f(5), 2));
        assert_eq!(class_formula(&a).unwrap(), 1);
        assert_eq!(dim_subalgebras_closed(&a, 4).dims(), vec![2, 0, 0, 0]);
    }

    #[test]
    fn class_formula_rejects_non_nilpotent() {
        assert!(matches!(class_formula(&study(heisenberg(3, 1))), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn predicates_agree_on_small_cases() {
        for l in [heisenberg(2, 0), heisenberg(3, 0), heisenberg(3, 1), heisenberg(2, 1), example_six_one()] {
            let st = study(l);
            for v in [
                predicate_lie_nilpotent(&st),
                predicate_bounded_engel(&st),
                predicate_lie_solvable(&st),
                predicate_metabelian(&st),
                predicate_center_by_metabelian(&st),
                predicate_min_derived_length(&st),
            ] {
                assert!(v.agrees(), "{v:?}");
            }
            for b in check_bounds(&st).unwrap() {
                assert_ne!(b.holds, Some(false), "{b:?}");
            }
            for v in involution_equivalences(&st) {
                assert!(v.agrees(), "{v:?}");
            }
        }
    }

    #[test]
    fn torus_predicates_are_false() {
        let st = study(heisenberg(3, 1));
        let v = predicate_lie_nilpotent(&st);
        assert_eq!((v.structural, v.computational), (Some(false), Some(false)));
        let v = predicate_lie_solvable(&st);
        assert_eq!((v.structural, v.computational), (Some(false), Some(false)));
        for v in involution_equivalences(&st) {
            assert_eq!(v.status, VerdictStatus::Agree, "{v:?}");
            assert_eq!(v.structural, Some(false));
        }
    }

    #[test]
    fn example_six_one_bounds() {
        let st = study(example_six_one());
        let b = check_bounds(&st).unwrap();
        let nil = &b[0];
        assert_eq!(nil.values["p_pow_max_exponent"], json!(8));
        assert_eq!(nil.values["cl_lie"], json!(8));
        assert_eq!(nil.values["p_pow_dim_derived_p"], json!(8));
        let prop = &b[2];
        assert_eq!(prop.values["t"], json!(8));
        assert_eq!(prop.values["ceil_log2_2t"], json!(4));
        assert_eq!(prop.holds, Some(true));
        assert_eq!(max_commutator_exponent(st.lie()).0, Some(3));
    }

    #[test]
    fn sharpness_algebra_center_by_metabelian_only() {
        let st = study(heisenberg(2, 1));
        assert!(is_center_by_metabelian(&st).unwrap());
        assert!(!st.analysis().unwrap().derived.term(2).is_zero());
    }
}
