//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria that fail are reported as FAIL and compared against
//! `KNOWN_FAILURES`; the target exits non-zero only when the outcome
//! differs from that list, in either direction.

use std::time::{Duration, Instant};

use loudspeaker::dynamics::decide_finiteness;
use loudspeaker::exact::{ratio, GaussianInt, QComplex, Rational};
use loudspeaker::families::{catalog_check, catalog_entry, FamilyInstance};
use loudspeaker::geometry::{subtract_cover, Cell, Frame, HalfPlane};
use loudspeaker::region::measure::{area_estimate, perimeter_estimate};
use loudspeaker::region::{region_contains, vertex};
use loudspeaker::verify::{
    critical_orbit_check, flood_fill_tiles, rotation_cycle_check, step_rule_check, verify_prefix, verify_sector_without,
    verify_sectors, Verdict,
};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Criteria expected to fail, with the reason recorded in the notes.
/// 3: sectors 7 and 9 keep uncovered cells. 4: the prefix keeps five.
const KNOWN_FAILURES: &[u32] = &[3, 4];

const PERIMETER: &str = "7.0317015814551";
const AREA: &str = "1.1616244963841";

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "explicit cycle catalog", explicit_catalog),
        (2, "family catalog n <= 30", family_catalog),
        (3, "regular sectors 7..=30", sectors),
        (4, "prefix coverage", prefix),
        (5, "witness tiles, radius 1/4", tiles),
        (6, "perimeter bracket", perimeter),
        (7, "area bracket", area),
        (8, "critical points", critical),
        (9, "decision procedure vs region", oracle_equivalence),
        (10, "subtract_cover probes", probes),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        let t = Instant::now();
        let o = run();
        let secs = t.elapsed().as_secs_f64();
        println!("{} criterion {id:>2} ({name}): {} [{secs:.1}s]", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.push(id);
        }
    }
    if failed != KNOWN_FAILURES {
        eprintln!("failing criteria {failed:?}, expected {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
}

fn timed<T>(limit: Duration, f: impl FnOnce() -> T) -> (T, bool, Duration) {
    let t = Instant::now();
    let v = f();
    let e = t.elapsed();
    (v, e <= limit, e)
}

fn explicit_catalog() -> Outcome {
    let frame = Frame::default();
    let (bad, fast, e) = timed(Duration::from_secs(1), || {
        (1..=14)
            .map(FamilyInstance::explicit)
            .filter(|i| !catalog_entry(i, &frame).map(|e| e.matches).unwrap_or(false))
            .collect::<Vec<_>>()
    });
    outcome(bad.is_empty() && fast, format!("{} of 14 differ, {e:.2?}", bad.len()))
}

fn family_catalog() -> Outcome {
    let (entries, fast, e) = timed(Duration::from_secs(300), || catalog_check(30, &Frame::default()));
    let entries = match entries {
        Ok(es) => es,
        Err(err) => return outcome(false, err.to_string()),
    };
    let families: Vec<_> = entries.iter().filter(|e| e.instance.family != 0).collect();
    let bad: Vec<String> = families.iter().filter(|e| !e.matches).map(|e| e.instance.to_string()).collect();
    outcome(bad.is_empty() && fast, format!("{} instances, mismatches {bad:?}, {e:.0?}", families.len()))
}

fn sectors() -> Outcome {
    let reports = match verify_sectors(7, 30) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| r.verdict != Verdict::Covered)
        .map(|r| format!("{}:{}", r.sector.unwrap_or(0), r.residuals.len()))
        .collect();
    let control = verify_sector_without(8, &[19]).map(|r| r.verdict == Verdict::Failed).unwrap_or(false);
    outcome(
        failing.is_empty() && control,
        format!("sectors with residuals (n:count) {failing:?}; without family 19 sector 8 fails: {control}"),
    )
}

fn prefix() -> Outcome {
    match verify_prefix() {
        Ok(r) => outcome(r.verdict == Verdict::Covered, format!("{} covers, {} residual cells", r.instances_used, r.residuals.len())),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn tiles() -> Outcome {
    match flood_fill_tiles(&ratio(1, 4), 2000) {
        Ok(r) => {
            let finite = r.tiles.iter().all(|t| t.finite);
            outcome(r.verdict == Verdict::Covered && finite, format!("{} tiles, all finite: {finite}", r.tiles.len()))
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn perimeter() -> Outcome {
    let b = match perimeter_estimate(100_000, 256) {
        Ok(b) => b,
        Err(e) => return outcome(false, e.to_string()),
    };
    let width = b.width();
    let hits = b.contains_decimal(PERIMETER).unwrap();
    let narrow = width <= ratio(1, 1000);
    let edges = (8..=100).all(|n: i64| {
        let d = &vertex(6, n).unwrap() - &vertex(5, n).unwrap();
        let (a, c) = (n * n + 1, n * n + n + 1);
        d.norm_sqr() == Rational::one() / Rational::from_integer((a * c * c).into())
    });
    outcome(
        narrow && hits && edges,
        format!("width {:.2e}, contains value: {}, P5-P6 lengths n=8..100: {edges}", to_f64(&width), hits),
    )
}

fn area() -> Outcome {
    let b = match area_estimate(10_000, 256) {
        Ok(b) => b,
        Err(e) => return outcome(false, e.to_string()),
    };
    let width = b.width();
    let hits = b.contains_decimal(AREA).unwrap();
    outcome(width <= ratio(1, 1_000_000) && hits, format!("width {:.2e}, contains value: {hits}", to_f64(&width)))
}

fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// A rational point on the unit circle with slope in `(0, 1/(n−1)]`.
fn circle_point(n: i64, rng: &mut ChaCha8Rng) -> QComplex {
    // (1 − t², 2t)/(1 + t²) with t = p/q has slope 2pq/(q² − p²).
    loop {
        let q: i64 = rng.gen_range(2..=400);
        let p: i64 = rng.gen_range(1..q);
        let (x, y, d) = (q * q - p * p, 2 * p * q, q * q + p * p);
        if y * (n - 1) <= x {
            return QComplex::frac(x, d, y, d);
        }
    }
}

/// A rational point of the closed unit disk with `0 < y(n−1) ≤ x`.
fn disk_point(n: i64, rng: &mut ChaCha8Rng) -> QComplex {
    loop {
        let x = ratio(rng.gen_range(1..=1024), 1024);
        let y = ratio(rng.gen_range(1..=1024), 1024);
        let r = QComplex::new(x.clone(), y.clone());
        if y * Rational::from_integer((n - 1).into()) <= x && r.norm_sqr() <= Rational::one() {
            return r;
        }
    }
}

fn critical() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut orbit_bad = Vec::new();
    for n in 2..=10 {
        for k in 0..5 {
            let r = if k < 2 { circle_point(n, &mut rng) } else { disk_point(n, &mut rng) };
            if !critical_orbit_check(n, &r).unwrap_or(false) {
                orbit_bad.push(format!("n={n} r={r}"));
            }
        }
    }
    let mut step_checked = 0;
    let mut step_bad = Vec::new();
    for n in 5..=8i64 {
        for _ in 0..3 {
            let r = circle_point(n, &mut rng);
            for a in -n..=n {
                for b in -n..=n {
                    let l1 = a.abs() + b.abs();
                    if (a, b) == (0, 0) || l1 > n || a.abs().max(b.abs()) >= n || ((a < 0 || b < 0) && l1 >= n) {
                        continue;
                    }
                    step_checked += 1;
                    if !step_rule_check(n, &r, &GaussianInt::new(a, b)).unwrap_or(false) {
                        step_bad.push(format!("n={n} r={r} z=({a},{b})"));
                    }
                }
            }
        }
    }
    let rot_bad = (0..100)
        .filter(|_| !rotation_cycle_check(&GaussianInt::new(rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000))))
        .count();
    outcome(
        orbit_bad.is_empty() && step_bad.is_empty() && rot_bad == 0,
        format!(
            "orbit failures {orbit_bad:?}; step rule {} of {step_checked} fail; rotation {rot_bad} of 100 fail",
            step_bad.len()
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let point = |rng: &mut ChaCha8Rng, radius: &Rational| loop {
        let coord = |rng: &mut ChaCha8Rng| radius * ratio(rng.gen_range(-4096..=4096), 4096);
        let r = QComplex::new(coord(rng), coord(rng));
        if r.norm_sqr() <= radius * radius {
            return r;
        }
    };
    let small = ratio(1, 4);
    let (mut inside, mut outside, mut unzoned) = (0, 0, 0);
    let mut disagree = Vec::new();
    for k in 0..200 {
        let r = point(&mut rng, &if k % 2 == 0 { ratio(63, 64) } else { small.clone() });
        let in_gc = region_contains(&r);
        if in_gc && r.norm_sqr() > &small * &small {
            unzoned += 1;
            continue;
        }
        let verdict = decide_finiteness(&r, 1 << 16);
        let agrees = if in_gc { verdict.is_finite() } else { verdict.is_infinite() };
        if in_gc { inside += 1 } else { outside += 1 }
        if !agrees {
            disagree.push(r.to_string());
        }
    }
    outcome(
        disagree.is_empty(),
        format!("{inside} finite-zone and {outside} outside points agree unless listed {disagree:?}; {unzoned} outside the zone"),
    )
}

/// Points of `target ∖ ⋃ covers` are exactly the points of the residual cells,
/// and residual cells are pairwise disjoint.
fn probes() -> Outcome {
    let frame = Frame::default();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut bad = 0;
    let mut total = 0;
    for _ in 0..10 {
        let random_cell = |rng: &mut ChaCha8Rng| {
            let hs: Vec<HalfPlane> = (0..rng.gen_range(3..=5))
                .map(|_| {
                    let c = |rng: &mut ChaCha8Rng| ratio(rng.gen_range(-8..=8), 8);
                    let (a, b) = loop {
                        let ab = (c(rng), c(rng));
                        if !(ab.0.is_zero() && ab.1.is_zero()) {
                            break ab;
                        }
                    };
                    HalfPlane::new(a, b, c(rng) + ratio(1, 2), rng.gen_bool(0.5))
                })
                .collect();
            Cell::from_halfplanes(hs, &frame)
        };
        let target = random_cell(&mut rng);
        let covers: Vec<Cell> = (0..rng.gen_range(1..=4)).map(|_| random_cell(&mut rng)).collect();
        let pieces = subtract_cover(&target, &covers);
        for _ in 0..1000 {
            // Small denominators hit edges and vertices often.
            let c = |rng: &mut ChaCha8Rng| ratio(rng.gen_range(-24..=24), 8);
            let p = QComplex::new(c(&mut rng), c(&mut rng));
            let want = target.contains(&p) && !covers.iter().any(|c| c.contains(&p));
            let hits = pieces.iter().filter(|c| c.contains(&p)).count();
            total += 1;
            if hits != usize::from(want) {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{bad} of {total} probes inconsistent; property suites run as separate test targets"))
}
