//! Characteristic-p analysis of plane cubics: smoothness, the Hasse
//! invariant, Frobenius bracket powers, Fedder's F-purity criterion and the
//! predicted cohomological dimension of the Segre ideal.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{Engine, Ideal};
use crate::polyring::{is_prime, pow_mod, primes_between, Coefficient};
use crate::report::{row_key, yes_no, Report};
use crate::segre::CubicCurve;

/// `f` is smooth iff every variable lies in the radical of its Jacobian ideal.
pub fn is_smooth_cubic(engine: &Engine, c: &CubicCurve) -> Result<bool> {
    let ring = c.ring();
    let mut gens = vec![c.polynomial().clone()];
    gens.extend(c.partials()?);
    let jac = Ideal::new(ring, gens)?;
    for x in ring.vars() {
        if !engine.radical_membership(&x, &jac)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficient of `(x0 x1 x2)^(p-1)` in `f^(p-1)` over `F_p`, by summing the
/// multinomial expansion over exponent vectors that hit the target monomial.
/// `c` must already live over `F_p`.
pub(crate) fn hasse_coefficient(c: &CubicCurve) -> Coefficient {
    let p = c.characteristic();
    debug_assert!(p >= 5);
    let n = p - 1;
    let terms: Vec<(u64, [u64; 3])> = c
        .polynomial()
        .terms()
        .iter()
        .map(|(coef, m)| {
            let e = m.exponents();
            (coef.residue().expect("curve over F_p"), [e[0] as u64, e[1] as u64, e[2] as u64])
        })
        .collect();
    let mut fact = vec![1u64; n as usize + 1];
    for k in 1..=n as usize {
        fact[k] = fact[k - 1] * k as u64 % p;
    }
    let inv_fact: Vec<u64> = fact.iter().map(|&f| pow_mod(f, p - 2, p)).collect();
    let mut search = Search {
        p,
        terms: &terms,
        inv_fact: &inv_fact,
        total: 0,
    };
    // (p-1)! = -1 mod p
    search.run(0, n, [n, n, n], p - 1);
    c.field().from_i64(search.total as i64)
}

struct Search<'a> {
    p: u64,
    terms: &'a [(u64, [u64; 3])],
    inv_fact: &'a [u64],
    total: u64,
}

impl Search<'_> {
    /// Distributes `left` factors over terms `k..`, still needing exponents `need`.
    fn run(&mut self, k: usize, left: u64, need: [u64; 3], weight: u64) {
        let p = self.p;
        let rest = &self.terms[k..];
        if rest.len() == 1 {
            let (c, e) = rest[0];
            if (0..3).all(|v| e[v] * left == need[v]) {
                let w = weight * pow_mod(c, left, p) % p * self.inv_fact[left as usize] % p;
                self.total = (self.total + w) % p;
            }
            return;
        }
        let (c, e) = rest[0];
        for j in 0..=left {
            if (0..3).any(|v| e[v] * j > need[v]) {
                break;
            }
            let need2 = [need[0] - e[0] * j, need[1] - e[1] * j, need[2] - e[2] * j];
            let left2 = left - j;
            // every remaining term contributes between its min and max exponent
            let tail = &rest[1..];
            let feasible = (0..3).all(|v| {
                let lo = tail.iter().map(|t| t.1[v]).min().unwrap();
                let hi = tail.iter().map(|t| t.1[v]).max().unwrap();
                lo * left2 <= need2[v] && need2[v] <= hi * left2
            });
            if feasible {
                let w = weight * pow_mod(c, j, p) % p * self.inv_fact[j as usize] % p;
                self.run(k + 1, left2, need2, w);
            }
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p < 5 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not a prime >= 5")));
    }
    Ok(())
}

/// Reduction of `c` mod `p`, required to be smooth.
fn good_reduction(engine: &Engine, c: &CubicCurve, p: u64) -> Result<CubicCurve> {
    let cp = c.reduce_mod(p)?;
    if !is_smooth_cubic(engine, &cp)? {
        return Err(Error::BadReduction(p));
    }
    Ok(cp)
}

/// Hasse coefficient of the reduction of `c` modulo `p`; zero exactly when
/// the reduction is supersingular.
pub fn hasse_invariant(engine: &Engine, c: &CubicCurve, p: u64) -> Result<Coefficient> {
    check_prime(p)?;
    let cp = good_reduction(engine, c, p)?;
    Ok(hasse_coefficient(&cp))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionType {
    Bad,
    Supersingular,
    Ordinary,
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionType::Bad => "bad_reduction",
            ReductionType::Supersingular => "supersingular",
            ReductionType::Ordinary => "ordinary",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeClassification {
    pub prime: u64,
    pub status: ReductionType,
    /// `None` at primes of bad reduction.
    pub hasse_coefficient: Option<Coefficient>,
}

impl PrimeClassification {
    pub fn is_supersingular(&self) -> bool {
        self.status == ReductionType::Supersingular
    }
}

pub fn classify_prime(engine: &Engine, c: &CubicCurve, p: u64) -> Result<PrimeClassification> {
    check_prime(p)?;
    match hasse_invariant(engine, c, p) {
        Ok(h) => Ok(PrimeClassification {
            prime: p,
            status: if h.is_zero() {
                ReductionType::Supersingular
            } else {
                ReductionType::Ordinary
            },
            hasse_coefficient: Some(h),
        }),
        Err(Error::BadReduction(_)) => Ok(PrimeClassification {
            prime: p,
            status: ReductionType::Bad,
            hasse_coefficient: None,
        }),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub limit: u64,
    pub primes: usize,
    pub bad: usize,
    pub supersingular: usize,
    pub ordinary: usize,
}

impl SweepSummary {
    /// Supersingular primes among primes of good reduction.
    pub fn supersingular_fraction(&self) -> f64 {
        let good = self.supersingular + self.ordinary;
        if good == 0 {
            0.0
        } else {
            self.supersingular as f64 / good as f64
        }
    }
}

#[derive(Clone, Debug)]
pub struct Sweep {
    pub rows: Vec<PrimeClassification>,
    pub summary: SweepSummary,
}

/// Classifies every prime `5 <= p <= limit`, in increasing order.
pub fn classify_primes(engine: &Engine, c: &CubicCurve, limit: u64) -> Result<Sweep> {
    if c.characteristic() != 0 {
        return Err(Error::InvalidArgument("prime sweeps need a curve over Q".into()));
    }
    let primes = primes_between(5, limit);
    let rows = primes
        .par_iter()
        .map(|&p| classify_prime(engine, c, p))
        .collect::<Result<Vec<_>>>()?;
    let count = |s| rows.iter().filter(|r| r.status == s).count();
    let summary = SweepSummary {
        limit,
        primes: rows.len(),
        bad: count(ReductionType::Bad),
        supersingular: count(ReductionType::Supersingular),
        ordinary: count(ReductionType::Ordinary),
    };
    Ok(Sweep { rows, summary })
}

impl Sweep {
    pub fn to_report(&self, n: u32, with_rows: bool) -> Report {
        let mut r = Report::new("hasse-sweep");
        let s = &self.summary;
        r.body_mut()
            .section("summary")
            .set("limit", s.limit)
            .set("primes", s.primes)
            .set("bad_reduction", s.bad)
            .set("supersingular", s.supersingular)
            .set("ordinary", s.ordinary)
            .set("supersingular_fraction", format!("{:.4}", s.supersingular_fraction()));
        if with_rows {
            let rows = r.body_mut().section("primes");
            for row in &self.rows {
                let sec = rows.section(row_key("p", row.prime));
                sec.set("prime", row.prime).set("status", row.status);
                sec.set(
                    "hasse",
                    row.hasse_coefficient.as_ref().map_or("-".to_string(), |h| h.to_string()),
                );
                sec.set(
                    "predicted_cd",
                    cd_from_status(row.status, n).map_or("-".to_string(), |d| d.to_string()),
                );
            }
        }
        r.body_mut().set("cd_note", format!("predicted, not computed; n = {n}"));
        r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CdPrediction {
    pub prime: u64,
    pub n: u32,
    pub supersingular: bool,
    pub predicted_cd: u32,
}

fn cd_from_status(status: ReductionType, n: u32) -> Option<u32> {
    match status {
        ReductionType::Bad => None,
        ReductionType::Supersingular => Some(2 * n + 1),
        ReductionType::Ordinary => Some(3 * n + 1),
    }
}

/// Predicted `cd(R/pR, a)` for the Segre embedding of `E_p x P^n`:
/// `2n + 1` when `E_p` is supersingular, `3n + 1` when it is ordinary.
pub fn predict_cd(engine: &Engine, c: &CubicCurve, p: u64, n: u32) -> Result<CdPrediction> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let class = classify_prime(engine, c, p)?;
    let predicted_cd = cd_from_status(class.status, n).ok_or(Error::BadReduction(p))?;
    Ok(CdPrediction {
        prime: p,
        n,
        supersingular: class.is_supersingular(),
        predicted_cd,
    })
}

/// `q` is `p^e` with `e >= 1`.
fn is_power_of(q: u64, p: u64) -> bool {
    if p < 2 || q < p {
        return false;
    }
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// `I^[q]`, generated by the q-th powers of the generators of `I`.
pub fn frobenius_power(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let p = ideal.ring().characteristic();
    if p == 0 || !is_power_of(q, p) {
        return Err(Error::InvalidArgument(format!(
            "{q} is not a positive power of the characteristic {p}"
        )));
    }
    let q = u32::try_from(q).map_err(|_| Error::InvalidArgument(format!("q = {q} too large")))?;
    let gens = ideal.generators().iter().map(|g| g.frobenius_unchecked(q)).collect();
    Ideal::new(ideal.ring(), gens)
}

/// Fedder's criterion at the homogeneous maximal ideal:
/// `R/I` is F-pure iff `(I^[p] : I)` is not contained in `m^[p]`.
pub fn fedder_fpure(engine: &Engine, ideal: &Ideal, p: u64) -> Result<bool> {
    let ring = ideal.ring();
    if ring.characteristic() != p || !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "ideal lives in characteristic {}, not {p}",
            ring.characteristic()
        )));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let q = p as u32;
    if ideal.is_zero() {
        // 1 lies in (0 : 0)
        return Ok(true);
    }
    if engine.is_unit_ideal(ideal)? {
        return Err(Error::ImproperIdeal);
    }
    if let [f] = ideal.generators() {
        return Ok(!f.pow(q - 1).in_bracket_power_of_maximal(q));
    }
    let colon = engine.ideal_colon_ideal(&frobenius_power(ideal, p)?, ideal)?;
    // m^[p] is a monomial ideal, so membership is termwise
    Ok(colon.generators().iter().any(|g| !g.in_bracket_power_of_maximal(q)))
}

/// Fedder verdict for the cubic hypersurface `(f)` itself.
pub fn fedder_cubic(engine: &Engine, c: &CubicCurve, p: u64) -> Result<bool> {
    check_prime(p)?;
    let cp = good_reduction(engine, c, p)?;
    let ideal = Ideal::new(cp.ring(), vec![cp.polynomial().clone()])?;
    fedder_fpure(engine, &ideal, p)
}

pub fn fedder_report(label: &str, p: u64, fpure: bool) -> Report {
    let mut r = Report::new("fedder");
    r.body_mut()
        .set("ideal", label)
        .set("characteristic", p)
        .set("f_pure", yes_no(fpure));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Monomial, PolyRing};

    fn engine() -> Engine {
        Engine::default()
    }

    #[test]
    fn smoothness_examples() {
        let e = engine();
        assert!(is_smooth_cubic(&e, &CubicCurve::fermat(7).unwrap()).unwrap());
        assert!(!is_smooth_cubic(&e, &CubicCurve::fermat(3).unwrap()).unwrap());
        let cusp = CubicCurve::parse(0, &["x0", "x1", "x2"], "x0^3").unwrap();
        assert!(!is_smooth_cubic(&e, &cusp).unwrap());
        let nodal = CubicCurve::parse(0, &["x", "y", "z"], "y^2*z - x^3 - x^2*z").unwrap();
        assert!(!is_smooth_cubic(&e, &nodal).unwrap());
    }

    #[test]
    fn hasse_examples() {
        let e = engine();
        let f = CubicCurve::fermat(0).unwrap();
        assert!(hasse_invariant(&e, &f, 5).unwrap().is_zero());
        assert_eq!(hasse_invariant(&e, &f, 7).unwrap().residue(), Some(6));
        assert!(!hasse_invariant(&e, &f, 13).unwrap().is_zero());
        assert!(hasse_invariant(&e, &f, 3).is_err());
        assert!(hasse_invariant(&e, &f, 9).is_err());
    }

    #[test]
    fn hasse_matches_direct_power() {
        let e = engine();
        let c = CubicCurve::parse(0, &["a", "b", "c"], "a^3 + 2*b^3 - c^3 + a*b*c + 3*a^2*c").unwrap();
        for p in [5, 7, 11, 13] {
            let Ok(h) = hasse_invariant(&e, &c, p) else { continue };
            let cp = c.reduce_mod(p).unwrap();
            let k = (p - 1) as u32;
            let target = Monomial::from_exponents(&[k, k, k]);
            assert_eq!(cp.polynomial().pow(k).coefficient_of(&target), h, "p = {p}");
        }
    }

    #[test]
    fn bad_reduction_detected() {
        let e = engine();
        let c = CubicCurve::parse(0, &["x", "y", "z"], "x^3 + y^3 + 7*z^3").unwrap();
        assert!(matches!(hasse_invariant(&e, &c, 7), Err(Error::BadReduction(7))));
        assert_eq!(classify_prime(&e, &c, 7).unwrap().status, ReductionType::Bad);
    }

    #[test]
    fn classify_small_limits() {
        let e = engine();
        let f = CubicCurve::fermat(0).unwrap();
        assert!(classify_primes(&e, &f, 4).unwrap().rows.is_empty());
        let sweep = classify_primes(&e, &f, 100).unwrap();
        let ss: Vec<u64> = sweep.rows.iter().filter(|r| r.is_supersingular()).map(|r| r.prime).collect();
        assert_eq!(ss, vec![5, 11, 17, 23, 29, 41, 47, 53, 59, 71, 83, 89]);
    }

    #[test]
    fn cd_examples() {
        let e = engine();
        let f = CubicCurve::fermat(0).unwrap();
        assert_eq!(predict_cd(&e, &f, 5, 1).unwrap().predicted_cd, 3);
        assert_eq!(predict_cd(&e, &f, 7, 1).unwrap().predicted_cd, 4);
        assert_eq!(predict_cd(&e, &f, 7, 2).unwrap().predicted_cd, 7);
        assert!(predict_cd(&e, &f, 7, 0).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let r2 = PolyRing::with_characteristic(&["x", "y"], 2).unwrap();
        let i = Ideal::parse(&r2, &["x", "y"]).unwrap();
        let fi = frobenius_power(&i, 2).unwrap();
        assert_eq!(fi.generators(), Ideal::parse(&r2, &["x^2", "y^2"]).unwrap().generators());

        let r3 = PolyRing::with_characteristic(&["x", "y"], 3).unwrap();
        let fi = frobenius_power(&Ideal::parse(&r3, &["x + y"]).unwrap(), 3).unwrap();
        assert_eq!(fi.generators()[0], r3.parse("x^3 + y^3").unwrap());
        assert_eq!(fi.generators()[0], r3.parse("x + y").unwrap().pow(3));

        assert!(frobenius_power(&i, 3).is_err());
        assert!(frobenius_power(&i, 1).is_err());
        let r0 = PolyRing::with_characteristic(&["x"], 0).unwrap();
        assert!(frobenius_power(&Ideal::parse(&r0, &["x"]).unwrap(), 2).is_err());
    }

    #[test]
    fn frobenius_ignores_generating_set() {
        let e = engine();
        for p in [2u64, 5, 7] {
            let r = PolyRing::with_characteristic(&["x", "y"], p).unwrap();
            let a = frobenius_power(&Ideal::parse(&r, &["x", "y"]).unwrap(), p).unwrap();
            let b = frobenius_power(&Ideal::parse(&r, &["x", "x + y"]).unwrap(), p).unwrap();
            assert!(e.ideal_equal(&a, &b).unwrap());
        }
    }

    #[test]
    fn fedder_examples() {
        let e = engine();
        let r5 = PolyRing::with_characteristic(&["x", "y"], 5).unwrap();
        assert!(fedder_fpure(&e, &Ideal::parse(&r5, &["x*y"]).unwrap(), 5).unwrap());
        let f = CubicCurve::fermat(0).unwrap();
        assert!(fedder_cubic(&e, &f, 7).unwrap());
        assert!(!fedder_cubic(&e, &f, 5).unwrap());
        // the colon path agrees with the principal shortcut
        let r7 = PolyRing::with_characteristic(&["x", "y", "z"], 7).unwrap();
        let two = Ideal::parse(&r7, &["x*y", "z"]).unwrap();
        assert!(fedder_fpure(&e, &two, 7).unwrap());
        let cusp = Ideal::parse(&r7, &["y^2 - x^3", "z"]).unwrap();
        assert!(matches!(fedder_fpure(&e, &cusp, 7), Err(Error::NotHomogeneous)));
        let nonpure = Ideal::parse(&r7, &["x^2", "y"]).unwrap();
        assert!(!fedder_fpure(&e, &nonpure, 7).unwrap());
    }
}
