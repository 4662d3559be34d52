//! Depth and Cohen-Macaulayness of graded quotients `R/I`, computed with
//! regular sequences of linear forms, plus the fixture ideals and the
//! reduction-mod-p and Frobenius checks built on them.
//!
//! Depth is computed at the irrelevant ideal of the graded ring.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::ellfrob::{fedder_fpure, frobenius_power};
use crate::error::{Error, Result};
use crate::groebner::{Engine, Ideal};
use crate::polyring::{Field, Monomial, PolyRing, Polynomial};
use crate::report::{row_key, yes_no, Report};
use crate::segre::{seven_generators, CubicCurve};

/// Is `l` a nonzerodivisor on `R/J`, i.e. `(J : l) = J`?
pub fn is_regular(engine: &Engine, j: &Ideal, l: &Polynomial) -> Result<bool> {
    let q = engine.ideal_quotient(j, l)?;
    engine.contains_ideal(j, &q)
}

/// First candidate that is a nonzerodivisor on `R/I`.
pub fn regular_element_search(engine: &Engine, ideal: &Ideal, candidates: &[Polynomial]) -> Result<Option<Polynomial>> {
    if engine.is_unit_ideal(ideal)? {
        return Err(Error::ImproperIdeal);
    }
    for l in candidates {
        if !l.is_zero() && is_regular(engine, ideal, l)? {
            return Ok(Some(l.clone()));
        }
    }
    Ok(None)
}

/// Knobs for the linear-form search.
#[derive(Clone, Debug)]
pub struct DepthOptions {
    pub seed: u64,
    /// Largest coefficient of candidate forms over `Q`.
    pub c_max: u64,
    /// Largest number of candidates generated.
    pub cap: usize,
}

impl Default for DepthOptions {
    fn default() -> Self {
        DepthOptions {
            seed: 0,
            c_max: 3,
            cap: 1 << 20,
        }
    }
}

impl DepthOptions {
    pub fn with_seed(seed: u64) -> DepthOptions {
        DepthOptions {
            seed,
            ..DepthOptions::default()
        }
    }
}

/// Nonzero linear forms up to scaling, by increasing number of nonzero
/// coefficients, each weight class shuffled by the seed. Over `F_p` the
/// first nonzero coefficient is 1; over `Q` coefficients lie in
/// `1..=c_max` with gcd 1. Returns the forms and whether the list is complete.
pub fn candidate_forms(ring: &Arc<PolyRing>, opts: &DepthOptions) -> (Vec<Polynomial>, bool) {
    let n = ring.arity();
    let field = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    for weight in 1..=n {
        let mut class: Vec<Vec<u64>> = Vec::new();
        for support in subsets(n, weight) {
            let values: Vec<u64> = match field {
                Field::Prime(p) => (1..p).collect(),
                Field::Rationals => (1..=opts.c_max.max(1)).collect(),
            };
            let mut coeffs = vec![0u64; weight];
            fill(&mut coeffs, 0, &values, field, &mut |c| {
                let mut v = vec![0u64; n];
                for (&i, &c) in support.iter().zip(c) {
                    v[i] = c;
                }
                class.push(v);
                out.len() + class.len() < opts.cap
            });
            if out.len() + class.len() >= opts.cap {
                break;
            }
        }
        class.shuffle(&mut rng);
        for v in class {
            let terms = v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (field.from_i64(c as i64), Monomial::var(n, i)))
                .collect();
            out.push(Polynomial::from_terms(ring, terms));
        }
        if out.len() >= opts.cap {
            let complete = is_complete(n, field, opts, out.len());
            return (out, complete);
        }
    }
    (out, true)
}

fn is_complete(n: usize, field: Field, opts: &DepthOptions, got: usize) -> bool {
    let total: u128 = match field {
        Field::Prime(p) => (p as u128).pow(n as u32).saturating_sub(1) / (p as u128 - 1),
        Field::Rationals => (opts.c_max as u128 + 1).pow(n as u32),
    };
    (got as u128) >= total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Enumerates nonzero coefficient tuples for one support; returns false to stop.
fn fill(coeffs: &mut Vec<u64>, k: usize, values: &[u64], field: Field, emit: &mut dyn FnMut(&[u64]) -> bool) -> bool {
    if k == coeffs.len() {
        let keep = match field {
            Field::Prime(_) => coeffs[0] == 1,
            Field::Rationals => coeffs.iter().fold(0, |g, &c| num_integer::gcd(g, c)) == 1,
        };
        return !keep || emit(coeffs);
    }
    for &v in values {
        if k == 0 && matches!(field, Field::Prime(_)) && v != 1 {
            continue;
        }
        coeffs[k] = v;
        if !fill(coeffs, k + 1, values, field, emit) {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct DepthReport {
    pub description: String,
    pub characteristic: u64,
    pub dim: usize,
    pub depth: usize,
    /// False when the search ran out of candidates, making `depth` a lower bound.
    pub exact: bool,
    pub sequence: Vec<Polynomial>,
    pub is_cm: bool,
    pub candidates_tested: usize,
    pub seed: u64,
    pub note: String,
}

impl DepthReport {
    pub fn to_report(&self) -> Report {
        let mut r = Report::new("depth");
        let b = r.body_mut();
        b.set("ideal", &self.description)
            .set("characteristic", self.characteristic)
            .set("dim", self.dim)
            .set("depth", self.depth)
            .set("depth_exact", yes_no(self.exact))
            .set("cohen_macaulay", yes_no(self.is_cm))
            .set("seed", self.seed)
            .set("candidates_tested", self.candidates_tested)
            .set("search", &self.note)
            .set("locality", "graded depth at the irrelevant ideal");
        let seq = b.section("regular_sequence");
        for (k, l) in self.sequence.iter().enumerate() {
            seq.set(row_key("l", k as u64 + 1), l);
        }
        r
    }
}

pub fn depth_graded(engine: &Engine, ideal: &Ideal, seed: u64) -> Result<DepthReport> {
    depth_graded_with(engine, ideal, &DepthOptions::with_seed(seed))
}

/// Greedy regular sequence of linear forms. At each step the variables are
/// tried first; when none is regular, `(J : m) = J` is tested by
/// intersecting the quotients `(J : x_i)`. A nonzero socle certifies the
/// depth; otherwise the remaining candidates are searched.
pub fn depth_graded_with(engine: &Engine, ideal: &Ideal, opts: &DepthOptions) -> Result<DepthReport> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = ideal.ring().clone();
    let n = ring.arity();
    let dim = engine.krull_dimension(ideal)?;
    let (candidates, complete) = candidate_forms(&ring, opts);
    let mut j = ideal.clone();
    let mut sequence: Vec<Polynomial> = Vec::new();
    let mut tested = 0;
    let mut exact = true;
    let mut note = String::from("reached dim");
    while sequence.len() < dim {
        let mut found = None;
        let mut socle: Option<Ideal> = None;
        for l in &candidates[..n] {
            tested += 1;
            let q = engine.ideal_quotient(&j, l)?;
            if engine.contains_ideal(&j, &q)? {
                found = Some(l.clone());
                break;
            }
            socle = Some(match socle {
                None => q,
                Some(acc) => engine.ideal_intersection(&acc, &q)?,
            });
        }
        if found.is_none() {
            let socle = socle.expect("at least one variable");
            if !engine.contains_ideal(&j, &socle)? {
                note = "stopped at a nonzero socle".to_string();
                break;
            }
            for l in &candidates[n..] {
                tested += 1;
                if is_regular(engine, &j, l)? {
                    found = Some(l.clone());
                    break;
                }
            }
        }
        match found {
            Some(l) => {
                j = j.extended(std::slice::from_ref(&l))?;
                sequence.push(l);
            }
            None => {
                exact = false;
                note = if complete {
                    "all linear forms are zerodivisors; depth is a lower bound".to_string()
                } else {
                    "candidate cap reached; depth is a lower bound".to_string()
                };
                break;
            }
        }
    }
    let depth = sequence.len();
    Ok(DepthReport {
        description: format!("{ideal:?}"),
        characteristic: ring.characteristic(),
        dim,
        depth,
        exact: exact || depth == dim,
        is_cm: depth == dim,
        sequence,
        candidates_tested: tested,
        seed: opts.seed,
        note,
    })
}

/// `depth R/I = dim R/I`. A `false` from an inexact search is reported by
/// [`DepthReport::exact`].
pub fn is_cohen_macaulay(engine: &Engine, ideal: &Ideal, seed: u64) -> Result<bool> {
    Ok(depth_graded(engine, ideal, seed)?.is_cm)
}

/// Re-checks `(J_k : l_k) = J_k` for every step of a reported sequence.
pub fn recheck_sequence(engine: &Engine, ideal: &Ideal, sequence: &[Polynomial]) -> Result<bool> {
    let mut j = ideal.clone();
    for l in sequence {
        if !is_regular(engine, &j, l)? {
            return Ok(false);
        }
        j = j.extended(std::slice::from_ref(l))?;
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct InequalityReport {
    pub characteristic: u64,
    pub depth_a: DepthReport,
    pub depth_b: DepthReport,
    pub holds: bool,
}

impl InequalityReport {
    pub fn to_report(&self) -> Report {
        let mut r = Report::new("depth-inequality");
        let b = r.body_mut();
        b.set("characteristic", self.characteristic)
            .set("a_f_pure", "yes")
            .set("radicals_agree", "yes")
            .set("depth_a", self.depth_a.depth)
            .set("depth_b", self.depth_b.depth)
            .set("holds", yes_no(self.holds));
        r
    }
}

/// For `a = rad(b)` with `R/a` F-pure, checks `depth R/a >= depth R/b`.
pub fn depth_inequality_check(engine: &Engine, a: &Ideal, b: &Ideal, p: u64, seed: u64) -> Result<InequalityReport> {
    if a.ring().characteristic() != p || b.ring().characteristic() != p {
        return Err(Error::Precondition(format!("both ideals must live in characteristic {p}")));
    }
    for g in a.generators() {
        if !engine.radical_membership(g, b)? {
            return Err(Error::Precondition(format!("{g} is not in the radical of b")));
        }
    }
    for g in b.generators() {
        if !engine.radical_membership(g, a)? {
            return Err(Error::Precondition(format!("{g} is not in the radical of a")));
        }
    }
    if !fedder_fpure(engine, a, p)? {
        return Err(Error::Precondition("R/a is not F-pure".into()));
    }
    let depth_a = depth_graded(engine, a, seed)?;
    let depth_b = depth_graded(engine, b, seed)?;
    if !depth_b.exact {
        return Err(Error::Precondition(
            "depth of R/b is only bounded below, so the inequality cannot be decided".into(),
        ));
    }
    if depth_a.depth < depth_b.depth {
        if depth_a.exact {
            return Err(Error::ClaimFailed(format!(
                "depth R/a = {} < depth R/b = {} although R/a is F-pure",
                depth_a.depth, depth_b.depth
            )));
        }
        return Err(Error::Precondition("depth of R/a is only bounded below".into()));
    }
    Ok(InequalityReport {
        characteristic: p,
        depth_a,
        depth_b,
        holds: true,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModpOutcome {
    Regular,
    /// The sequence stops being regular at this 1-based step.
    FailsAt(usize),
    /// A form or generator does not survive reduction modulo p.
    Degenerate(String),
}

impl fmt::Display for ModpOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModpOutcome::Regular => write!(f, "regular"),
            ModpOutcome::FailsAt(k) => write!(f, "fails at step {k}"),
            ModpOutcome::Degenerate(why) => write!(f, "degenerate: {why}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ModpReport {
    pub forms: Vec<Polynomial>,
    pub rows: Vec<(u64, ModpOutcome)>,
}

impl ModpReport {
    pub fn outcome(&self, p: u64) -> Option<&ModpOutcome> {
        self.rows.iter().find(|r| r.0 == p).map(|r| &r.1)
    }

    pub fn failing_primes(&self) -> Vec<u64> {
        self.rows
            .iter()
            .filter(|r| matches!(r.1, ModpOutcome::FailsAt(_)))
            .map(|r| r.0)
            .collect()
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("modp-check");
        let b = r.body_mut();
        let forms: Vec<String> = self.forms.iter().map(|f| f.to_string()).collect();
        b.set("forms", forms.join(", "));
        let failing: Vec<String> = self.failing_primes().iter().map(|p| p.to_string()).collect();
        b.set("failing_primes", if failing.is_empty() { "none".into() } else { failing.join(", ") });
        let rows = b.section("primes");
        for (p, outcome) in &self.rows {
            rows.set(row_key("p", *p), outcome);
        }
        r
    }
}

/// Checks over `Q` that `forms` is a regular sequence on `R/I`, then re-runs
/// the check modulo each prime.
pub fn modp_regular_sequence_check(
    engine: &Engine,
    ideal: &Ideal,
    forms: &[Polynomial],
    primes: &[u64],
) -> Result<ModpReport> {
    let ring = ideal.ring();
    if ring.characteristic() != 0 {
        return Err(Error::InvalidArgument("the ideal must be defined over Q".into()));
    }
    if !recheck_sequence(engine, ideal, forms)? {
        return Err(Error::Precondition("the forms are not a regular sequence over Q".into()));
    }
    let primes: Vec<u64> = primes.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let rows = primes
        .par_iter()
        .map(|&p| Ok((p, modp_outcome(engine, ideal, forms, p)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ModpReport {
        forms: forms.to_vec(),
        rows,
    })
}

fn modp_outcome(engine: &Engine, ideal: &Ideal, forms: &[Polynomial], p: u64) -> Result<ModpOutcome> {
    let ring_p = ideal.ring().with_field(Field::prime(p)?);
    let Ok(ip) = ideal.change_field(&ring_p) else {
        return Ok(ModpOutcome::Degenerate("a generator has a denominator divisible by p".into()));
    };
    let mut fp = Vec::with_capacity(forms.len());
    for (k, l) in forms.iter().enumerate() {
        match l.change_field(&ring_p) {
            Ok(lp) if !lp.is_zero() => fp.push(lp),
            _ => return Ok(ModpOutcome::Degenerate(format!("form {} vanishes", k + 1))),
        }
    }
    if engine.is_unit_ideal(&ip)? {
        return Ok(ModpOutcome::Degenerate("the reduced ideal is the unit ideal".into()));
    }
    let mut j = ip;
    for (k, l) in fp.iter().enumerate() {
        if !is_regular(engine, &j, l)? {
            return Ok(ModpOutcome::FailsAt(k + 1));
        }
        j = j.extended(std::slice::from_ref(l))?;
    }
    Ok(ModpOutcome::Regular)
}

/// Fixture ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// Maximal minors of a generic `n x (n+1)` matrix.
    Determinantal(usize),
    /// The monomial curve `(s^4, s^3 t, s t^3, t^4)` in `K[w, x, y, z]`.
    Hartshorne,
    /// The Segre ideal of the Fermat cubic times the projective line.
    FermatSegre,
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fixture> {
        match s {
            "hartshorne" => return Ok(Fixture::Hartshorne),
            "fermat_segre" => return Ok(Fixture::FermatSegre),
            _ => {}
        }
        let n = s
            .strip_prefix("determinantal")
            .map(|r| r.trim_matches(|c| c == '(' || c == ')' || c == '_' || c == '-'))
            .and_then(|r| r.parse::<usize>().ok())
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))?;
        Ok(Fixture::Determinantal(n))
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::Determinantal(n) => write!(f, "determinantal{n}"),
            Fixture::Hartshorne => write!(f, "hartshorne"),
            Fixture::FermatSegre => write!(f, "fermat_segre"),
        }
    }
}

pub fn example_ideal(fixture: Fixture, characteristic: u64) -> Result<Ideal> {
    match fixture {
        Fixture::Determinantal(n) => {
            if n < 2 || n * (n + 1) > crate::polyring::MAX_VARS {
                return Err(Error::InvalidArgument(format!("determinantal({n}) is not supported")));
            }
            let names: Vec<String> = (0..n)
                .flat_map(|i| (0..=n).map(move |j| format!("x{i}{j}")))
                .collect();
            let ring = PolyRing::with_characteristic(&names, characteristic)?;
            let entry = |i: usize, j: usize| ring.var(i * (n + 1) + j);
            let mut minors = Vec::new();
            for skip in 0..=n {
                let cols: Vec<usize> = (0..=n).filter(|&c| c != skip).collect();
                minors.push(determinant(&ring, &cols, 0, n, &entry));
            }
            Ideal::new(&ring, minors)
        }
        Fixture::Hartshorne => {
            let ring = PolyRing::with_characteristic(&["w", "x", "y", "z"], characteristic)?;
            Ideal::parse(&ring, &["x*y - w*z", "y^3 - x*z^2", "w*y^2 - x^2*z", "x^3 - w^2*y"])
        }
        Fixture::FermatSegre => Ok(seven_generators(&CubicCurve::fermat(characteristic)?)?.ideal()),
    }
}

/// Determinant of rows `row..n` against `cols`, by Laplace expansion.
fn determinant(
    ring: &Arc<PolyRing>,
    cols: &[usize],
    row: usize,
    n: usize,
    entry: &dyn Fn(usize, usize) -> Polynomial,
) -> Polynomial {
    if row == n {
        return ring.one();
    }
    let mut acc = ring.zero();
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
        let term = &entry(row, c) * &determinant(ring, &rest, row + 1, n, entry);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Data of the non-Cohen-Macaulay step in the proof that an F-pure,
/// non-Cohen-Macaulay `R/a` is not set-theoretically Cohen-Macaulay.
#[derive(Clone, Debug)]
pub struct HunekeWitness {
    pub q: u64,
    /// System of parameters of `R/a`; its first `k - 1` entries are regular.
    pub parameters: Vec<Polynomial>,
    pub parameters_certified: bool,
    /// 1-based index of the parameter `x_k` that fails to be regular.
    pub k: usize,
    pub y: Polynomial,
    pub y_xk_in_ideal: bool,
    pub y_outside_ideal: bool,
    /// `y^q x_k^q` lies in `(x_1^q, ..., x_{k-1}^q) + a^[q]`.
    pub frobenius_membership: bool,
    /// `y^q` is not in `(x_1^q, ..., x_{k-1}^q) + a`.
    pub y_q_outside: bool,
}

impl HunekeWitness {
    pub fn verified(&self) -> bool {
        self.parameters_certified
            && self.y_xk_in_ideal
            && self.y_outside_ideal
            && self.frobenius_membership
            && self.y_q_outside
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("huneke-witness");
        let b = r.body_mut();
        b.set("q", self.q)
            .set("k", self.k)
            .set("y", &self.y)
            .set("x_k", &self.parameters[self.k - 1])
            .set("parameters_certified", yes_no(self.parameters_certified))
            .set("y_xk_in_ideal", yes_no(self.y_xk_in_ideal))
            .set("y_outside_ideal", yes_no(self.y_outside_ideal))
            .set("frobenius_membership", yes_no(self.frobenius_membership))
            .set("y_q_outside", yes_no(self.y_q_outside));
        let params = b.section("parameters");
        for (i, x) in self.parameters.iter().enumerate() {
            params.set(row_key("x", i as u64 + 1), x);
        }
        r
    }
}

/// Finds a system of parameters extending the depth sequence, an element
/// `y` with `y x_k` in `J = a + (x_1..x_{k-1})` but `y` outside `J`, and
/// checks that raising to the `q`-th power keeps `y^q x_k^q` inside
/// `(x_1^q..x_{k-1}^q) + a^[q]`.
pub fn huneke_witness(engine: &Engine, a: &Ideal, q: u64, seed: u64) -> Result<HunekeWitness> {
    let ring = a.ring().clone();
    let report = depth_graded(engine, a, seed)?;
    if report.is_cm {
        return Err(Error::Precondition("R/a is Cohen-Macaulay; there is no witness".into()));
    }
    if !report.exact {
        return Err(Error::Precondition("depth is only bounded below".into()));
    }
    let dim = report.dim;
    let mut params = report.sequence.clone();
    let (candidates, _) = candidate_forms(&ring, &DepthOptions::with_seed(seed));
    for l in &candidates {
        if params.len() == dim {
            break;
        }
        let mut trial = params.clone();
        trial.push(l.clone());
        let ext = a.extended(&trial)?;
        if !engine.is_unit_ideal(&ext)? && engine.krull_dimension(&ext)? == dim - trial.len() {
            params = trial;
        }
    }
    if params.len() != dim {
        return Err(Error::Precondition("no system of parameters among the candidates".into()));
    }
    let full = a.extended(&params)?;
    let mut parameters_certified = true;
    for x in ring.vars() {
        parameters_certified &= engine.radical_membership(&x, &full)?;
    }

    let k = report.depth + 1;
    let xk = params[k - 1].clone();
    let j = a.extended(&params[..k - 1])?;
    let colon = engine.ideal_quotient(&j, &xk)?;
    let mut y = None;
    for g in colon.generators() {
        let r = engine.normal_form(g, &j)?;
        if !r.is_zero() {
            y = Some(r);
            break;
        }
    }
    let y = y.ok_or_else(|| Error::ClaimFailed(format!("x_{k} is regular although depth is {}", report.depth)))?;
    let y_xk_in_ideal = engine.ideal_membership(&(&y * &xk), &j)?;
    let y_outside_ideal = !engine.ideal_membership(&y, &j)?;

    let qq = u32::try_from(q).map_err(|_| Error::InvalidArgument(format!("q = {q} too large")))?;
    let j_q = frobenius_power(&j, q)?;
    let frobenius_membership = engine.ideal_membership(&(&y * &xk).pow(qq), &j_q)?;
    let xs_q: Vec<Polynomial> = params[..k - 1].iter().map(|x| x.pow(qq)).collect();
    let mixed = a.extended(&xs_q)?;
    let y_q_outside = !engine.ideal_membership(&y.pow(qq), &mixed)?;

    Ok(HunekeWitness {
        q,
        parameters: params,
        parameters_certified,
        k,
        y,
        y_xk_in_ideal,
        y_outside_ideal,
        frobenius_membership,
        y_q_outside,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str], p: u64) -> Arc<PolyRing> {
        PolyRing::with_characteristic(names, p).unwrap()
    }

    #[test]
    fn regular_search_examples() {
        let e = Engine::default();
        let r = ring(&["x", "y"], 0);
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        let cands: Vec<Polynomial> = ["x", "y", "x + y"].iter().map(|s| r.parse(s).unwrap()).collect();
        assert_eq!(regular_element_search(&e, &i, &cands).unwrap(), Some(r.parse("x + y").unwrap()));

        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(regular_element_search(&e, &i, &cands[1..2]).unwrap(), Some(r.parse("y").unwrap()));

        let m = Ideal::maximal(&r);
        assert_eq!(regular_element_search(&e, &m, &cands).unwrap(), None);
        let unit = Ideal::parse(&r, &["1"]).unwrap();
        assert!(regular_element_search(&e, &unit, &cands).is_err());
    }

    #[test]
    fn candidates_cover_projective_space() {
        let r = ring(&["a", "b", "c"], 3);
        let (forms, complete) = candidate_forms(&r, &DepthOptions::default());
        assert!(complete);
        assert_eq!(forms.len(), 13);
        let distinct: BTreeSet<String> = forms.iter().map(|f| f.to_string()).collect();
        assert_eq!(distinct.len(), 13);
        assert!(forms[..3].iter().all(|f| f.len() == 1));

        let q = ring(&["a", "b"], 0);
        let (forms, complete) = candidate_forms(&q, &DepthOptions { c_max: 2, ..DepthOptions::default() });
        // a, b, a+b, a+2b, 2a+b
        assert!(complete);
        assert_eq!(forms.len(), 5);
    }

    #[test]
    fn candidate_order_depends_on_seed_only() {
        let r = ring(&["a", "b", "c", "d"], 5);
        let a = candidate_forms(&r, &DepthOptions::with_seed(3)).0;
        let b = candidate_forms(&r, &DepthOptions::with_seed(3)).0;
        let c = candidate_forms(&r, &DepthOptions::with_seed(4)).0;
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn small_depths() {
        let e = Engine::default();
        let r = ring(&["x", "y"], 0);
        let rep = depth_graded(&e, &Ideal::parse(&r, &["x*y"]).unwrap(), 0).unwrap();
        assert_eq!((rep.dim, rep.depth, rep.is_cm), (1, 1, true));
        assert!(recheck_sequence(&e, &Ideal::parse(&r, &["x*y"]).unwrap(), &rep.sequence).unwrap());

        let z = Ideal::zero(&ring(&["a", "b", "c"], 7));
        let rep = depth_graded(&e, &z, 0).unwrap();
        assert_eq!((rep.dim, rep.depth), (3, 3));
        assert!(is_cohen_macaulay(&e, &z, 0).unwrap());

        // embedded point: (x^2, xy) has depth 0
        let rep = depth_graded(&e, &Ideal::parse(&r, &["x^2", "x*y"]).unwrap(), 0).unwrap();
        assert_eq!((rep.dim, rep.depth, rep.exact), (1, 0, true));
    }

    #[test]
    fn fixtures() {
        assert_eq!("determinantal2".parse::<Fixture>().unwrap(), Fixture::Determinantal(2));
        assert_eq!("determinantal(3)".parse::<Fixture>().unwrap(), Fixture::Determinantal(3));
        assert!("segre".parse::<Fixture>().is_err());

        let d = example_ideal(Fixture::Determinantal(2), 7).unwrap();
        let r = d.ring().clone();
        let expect = ["x01*x12 - x02*x11", "x00*x12 - x02*x10", "x00*x11 - x01*x10"];
        for (g, s) in d.generators().iter().zip(expect) {
            assert_eq!(g, &r.parse(s).unwrap());
        }
        let h = example_ideal(Fixture::Hartshorne, 5).unwrap();
        assert_eq!(h.generators().len(), 4);
        assert_eq!(example_ideal(Fixture::FermatSegre, 7).unwrap().generators().len(), 7);
        assert!(example_ideal(Fixture::FermatSegre, 3).is_err());
        assert!(example_ideal(Fixture::Determinantal(4), 7).is_err());
    }

    #[test]
    fn modp_counterexample() {
        let e = Engine::default();
        let r = ring(&["x", "y"], 0);
        let i = Ideal::parse(&r, &["x^2 - 2*y^2"]).unwrap();
        let l = r.parse("x - 3*y").unwrap();
        let rep = modp_regular_sequence_check(&e, &i, &[l], &[11, 5, 7]).unwrap();
        assert_eq!(rep.failing_primes(), vec![7]);
        assert_eq!(rep.outcome(5), Some(&ModpOutcome::Regular));

        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        let rep = modp_regular_sequence_check(&e, &i, &[r.parse("x + y").unwrap()], &[2, 3, 5]).unwrap();
        assert!(rep.failing_primes().is_empty());

        let deg = modp_regular_sequence_check(&e, &i, &[r.parse("5*x + 5*y").unwrap()], &[5]).unwrap();
        assert!(matches!(deg.outcome(5), Some(ModpOutcome::Degenerate(_))));

        let not_regular = modp_regular_sequence_check(&e, &i, &[r.parse("x").unwrap()], &[5]);
        assert!(matches!(not_regular, Err(Error::Precondition(_))));
    }

    #[test]
    fn inequality_trivial_case() {
        let e = Engine::default();
        let r = ring(&["x", "y"], 5);
        let a = Ideal::parse(&r, &["x*y"]).unwrap();
        let rep = depth_inequality_check(&e, &a, &a.clone(), 5, 0).unwrap();
        assert_eq!(rep.depth_a.depth, rep.depth_b.depth);
    }
}
