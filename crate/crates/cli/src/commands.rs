use std::time::Instant;

use anyhow::{bail, Result};
use segrelab::cache::DiskCache;
use segrelab::depthlab::{depth_graded, huneke_witness, modp_regular_sequence_check};
use segrelab::ellfrob::{classify_primes, fedder_cubic, fedder_fpure, fedder_report, hasse_invariant, Sweep};
use segrelab::report::{row_key, yes_no, Report};
use segrelab::segre::{display_name, kernel_by_elimination, seven_generators, verify_theorem1};
use segrelab::{Budget, Engine, MonomialOrder, Polynomial};

use crate::input::{curve_over, load_curve, load_ideal};
use crate::{Command, Common, Format};

fn engine(c: &Common) -> Result<Engine> {
    let mut budget = Budget::default();
    if let Some(d) = c.budget {
        budget = budget.with_time_limit(d);
    }
    if let Some(p) = c.max_pairs {
        budget = budget.with_max_pairs(p);
    }
    let cache = match &c.cache {
        Some(dir) => Some(DiskCache::new(dir)?),
        None => DiskCache::from_env()?,
    };
    let engine = Engine::new(budget);
    Ok(match cache {
        Some(cache) => engine.with_cache(cache),
        None => engine,
    })
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.text()),
        Format::Structured => print!("{}", report.structured()),
    }
}

pub fn run(cmd: &Command, c: &Common) -> Result<u8> {
    let engine = engine(c)?;
    match cmd {
        Command::VerifyTheorem1 => {
            let curve = curve_over(&load_curve(c.curve.as_deref())?, c.characteristic)?;
            let rep = verify_theorem1(&engine, &curve)?;
            emit(&rep.to_report(), c.format);
            Ok(if rep.all_verified() { 0 } else { 1 })
        }
        Command::HasseSweep { summary } => {
            let sweep = sweep(&engine, c)?;
            match c.format {
                Format::Structured => emit(&sweep.to_report(c.n, !summary), c.format),
                Format::Text => print_sweep(&sweep, c.n, *summary),
            }
            Ok(0)
        }
        Command::CdTable => {
            let sweep = sweep(&engine, c)?;
            emit(&cd_table(&sweep, c.n), c.format);
            Ok(0)
        }
        Command::Depth { witness } => {
            let named = load_ideal(c.fixture.as_deref(), c.ideal.as_deref(), c.characteristic)?;
            let clock = Instant::now();
            let rep = depth_graded(&engine, &named.ideal, c.seed)?;
            let mut out = rep.to_report();
            out.body_mut().set("ideal", &named.label);
            out.timing("depth", clock.elapsed());
            if *witness {
                let p = named.ideal.ring().characteristic();
                if p == 0 {
                    bail!(segrelab::Error::Precondition("the witness needs a prime characteristic".into()));
                }
                let clock = Instant::now();
                let w = huneke_witness(&engine, &named.ideal, p, c.seed)?;
                out.body_mut().insert("witness", w.to_report().body().clone());
                out.timing("witness", clock.elapsed());
                emit(&out, c.format);
                return Ok(if w.verified() { 0 } else { 1 });
            }
            emit(&out, c.format);
            Ok(0)
        }
        Command::Fedder => {
            let Some(p) = c.characteristic else {
                bail!(segrelab::Error::Precondition("fedder needs --char p".into()));
            };
            let clock = Instant::now();
            let mut out = if c.fixture.is_some() || c.ideal.is_some() {
                let named = load_ideal(c.fixture.as_deref(), c.ideal.as_deref(), Some(p))?;
                let fpure = fedder_fpure(&engine, &named.ideal, p)?;
                fedder_report(&named.label, p, fpure)
            } else {
                let curve = curve_over(&load_curve(c.curve.as_deref())?, Some(p))?;
                let fpure = fedder_cubic(&engine, &curve, p)?;
                let hasse = hasse_invariant(&engine, &curve, p)?;
                let mut r = fedder_report(&curve.polynomial().to_string(), p, fpure);
                r.body_mut()
                    .set("hasse_coefficient", &hasse)
                    .set("agrees_with_hasse", yes_no(fpure != hasse.is_zero()));
                if fpure == hasse.is_zero() {
                    emit(&r, c.format);
                    bail!(segrelab::Error::ClaimFailed(
                        "Fedder verdict disagrees with the Hasse coefficient".into()
                    ));
                }
                r
            };
            out.timing("fedder", clock.elapsed());
            emit(&out, c.format);
            Ok(0)
        }
        Command::ModpCheck { primes, forms } => {
            if c.characteristic.is_some_and(|p| p != 0) {
                bail!(segrelab::Error::Precondition("modp-check starts from an ideal over Q".into()));
            }
            let named = load_ideal(c.fixture.as_deref(), c.ideal.as_deref(), Some(0))?;
            let ring = named.ideal.ring().clone();
            let forms: Vec<Polynomial> = match forms {
                Some(text) => text
                    .split(';')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| ring.parse(s))
                    .collect::<segrelab::Result<_>>()?,
                None => depth_graded(&engine, &named.ideal, c.seed)?.sequence,
            };
            let clock = Instant::now();
            let rep = modp_regular_sequence_check(&engine, &named.ideal, &forms, primes)?;
            let mut out = rep.to_report();
            out.body_mut().set("ideal", &named.label);
            out.timing("modp", clock.elapsed());
            emit(&out, c.format);
            Ok(0)
        }
        Command::Kernel => {
            let curve = curve_over(&load_curve(c.curve.as_deref())?, c.characteristic)?;
            let clock = Instant::now();
            let kernel = kernel_by_elimination(&engine, &curve)?;
            let seven = seven_generators(&curve)?;
            let equal = engine.ideal_equal(&kernel, &seven.ideal())?;
            let basis = engine.groebner(&kernel, MonomialOrder::Grevlex)?;
            let mut out = Report::new("kernel");
            let b = out.body_mut();
            b.set("curve", curve.polynomial())
                .set("characteristic", curve.characteristic())
                .set("equals_seven_generators", yes_no(equal));
            let sec = b.section("kernel_basis");
            for (k, g) in basis.elements().iter().enumerate() {
                sec.set(row_key("g", k as u64 + 1), display_name(g));
            }
            let sec = b.section("seven_generators");
            for (k, g) in seven.seven().iter().enumerate() {
                sec.set(row_key("g", k as u64 + 1), display_name(g));
            }
            out.timing("kernel", clock.elapsed());
            emit(&out, c.format);
            Ok(if equal { 0 } else { 1 })
        }
    }
}

fn sweep(engine: &Engine, c: &Common) -> Result<Sweep> {
    if c.characteristic.is_some_and(|p| p != 0) {
        bail!(segrelab::Error::Precondition("prime sweeps start from a curve over Q".into()));
    }
    let curve = curve_over(&load_curve(c.curve.as_deref())?, Some(0))?;
    Ok(classify_primes(engine, &curve, c.limit)?)
}

fn print_sweep(sweep: &Sweep, n: u32, summary_only: bool) {
    if !summary_only {
        println!("{:>7}  {:<15} {:>7}  {:>3}", "prime", "status", "hasse", "cd");
        for row in &sweep.rows {
            let hasse = row.hasse_coefficient.as_ref().map_or("-".to_string(), |h| h.to_string());
            let cd = match row.status {
                segrelab::ellfrob::ReductionType::Bad => "-".to_string(),
                segrelab::ellfrob::ReductionType::Supersingular => (2 * n + 1).to_string(),
                segrelab::ellfrob::ReductionType::Ordinary => (3 * n + 1).to_string(),
            };
            println!("{:>7}  {:<15} {:>7}  {:>3}", row.prime, row.status.to_string(), hasse, cd);
        }
    }
    let s = &sweep.summary;
    println!(
        "primes {}  bad {}  supersingular {}  ordinary {}  supersingular fraction {:.4}",
        s.primes,
        s.bad,
        s.supersingular,
        s.ordinary,
        s.supersingular_fraction()
    );
}

fn cd_table(sweep: &Sweep, n: u32) -> Report {
    let mut r = Report::new("cd-table");
    let b = r.body_mut();
    b.set("n", n)
        .set("supersingular_cd", 2 * n + 1)
        .set("ordinary_cd", 3 * n + 1)
        .set("note", "predicted from the Hasse invariant, not computed from local cohomology");
    let rows = b.section("primes");
    for row in &sweep.rows {
        let cd = match row.status {
            segrelab::ellfrob::ReductionType::Bad => "bad_reduction".to_string(),
            segrelab::ellfrob::ReductionType::Supersingular => (2 * n + 1).to_string(),
            segrelab::ellfrob::ReductionType::Ordinary => (3 * n + 1).to_string(),
        };
        rows.set(row_key("p", row.prime), cd);
    }
    r
}
