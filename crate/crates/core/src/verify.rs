//! Coverage campaigns: the exterior of 𝒢_C inside the unit disk is cut out
//! by cycle polygons, sector by sector; the interior near the origin is tiled
//! by witness polyhedra of finite parameters; and the orbit arguments about
//! the critical points.
//!
//! Only the closed upper half-plane is treated. Conjugating a cycle
//! conjugates its cutout polygon and 𝒢_C is symmetric, so the lower half
//! follows.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cutout::{cycle_polygon, witness_polyhedron};
use crate::dynamics::{Gsrs, OrbitResult};
use crate::error::{Error, Result};
use crate::exact::{ratio, rat_int, GaussianInt, QComplex, Rational};
use crate::families::{expand_generators, prefix_instances, selection_cells, valid_instances, FamilyInstance};
use crate::geometry::{subtract_cover_pruned, Cell, DiskSeparation, Frame, HalfPlane};
use crate::region::{local_gc_cells, prefix_gc_cells, region_contains, sector_halfplanes, sector_window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Covered,
    /// The tile budget ran out before the target was exhausted.
    Budget,
    Failed,
}

#[derive(Clone, Debug, Serialize)]
pub struct Residual {
    pub cell: Cell,
    pub separation: DiskSeparation,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverageReport {
    /// `None` for the prefix campaign.
    pub sector: Option<i64>,
    pub instances_used: usize,
    pub residuals: Vec<Residual>,
    pub verdict: Verdict,
}

fn outside(c: &Cell) -> bool {
    c.disk_separation() == DiskSeparation::Outside
}

fn cover_cells(instances: &[FamilyInstance], frame: &Frame) -> Result<Vec<Cell>> {
    instances
        .iter()
        .map(|i| Ok(cycle_polygon(&expand_generators(i)?, frame)))
        .filter(|c| !matches!(c, Ok(c) if c.is_empty()))
        .collect()
}

/// `target ∖ (𝒢_C ∪ covers)`, with every piece outside the closed unit disk
/// dropped along the way.
fn coverage(sector: Option<i64>, target: &Cell, gc: &[Cell], covers: &[Cell], instances_used: usize) -> CoverageReport {
    let residuals: Vec<Residual> = subtract_cover_pruned(target, gc, outside)
        .iter()
        .flat_map(|t| subtract_cover_pruned(t, covers, outside))
        .map(|cell| Residual { separation: cell.disk_separation(), cell })
        .collect();
    let verdict = if residuals.is_empty() { Verdict::Covered } else { Verdict::Failed };
    CoverageReport { sector, instances_used, residuals, verdict }
}

/// Whether the cycle polygons of `selection(n)` cut out everything of the
/// sector window inside the unit disk that is not in 𝒢_C.
pub fn verify_sector(n: i64) -> Result<CoverageReport> {
    verify_sector_without(n, &[])
}

/// [`verify_sector`] with whole families left out of the covers.
pub fn verify_sector_without(n: i64, omit: &[u8]) -> Result<CoverageReport> {
    let window = sector_window(n)?;
    let covers: Vec<Cell> = selection_cells(n)?
        .into_iter()
        .filter(|(i, c)| !omit.contains(&i.family) && !c.is_empty())
        .map(|(_, c)| c)
        .collect();
    Ok(coverage(Some(n), &window, &local_gc_cells(n)?, &covers, covers.len()))
}

/// [`verify_sector`] for every `n` in `lo..=hi`, in parallel.
pub fn verify_sectors(lo: i64, hi: i64) -> Result<Vec<CoverageReport>> {
    (lo..=hi).into_par_iter().map(verify_sector).collect()
}

/// The part of the upper half-plane above the sector windows: `y ≥ 0` and
/// `7y − x > 0`.
pub fn prefix_target(frame: &Frame) -> Cell {
    Cell::from_halfplanes(
        [
            HalfPlane::new(Rational::zero(), rat_int(1), Rational::zero(), false),
            HalfPlane::new(rat_int(-1), rat_int(7), Rational::zero(), true),
        ],
        frame,
    )
}

/// The cover list of the prefix: the fixed instances, every selection
/// instance of pikes up to 8, and every other valid instance with `n ≤ 9`.
pub fn prefix_covers(frame: &Frame) -> Result<(Vec<FamilyInstance>, Vec<Cell>)> {
    let mut instances = prefix_instances(8);
    for inst in valid_instances(9) {
        if !instances.contains(&inst) {
            instances.push(inst);
        }
    }
    let cells = cover_cells(&instances, frame)?;
    Ok((instances, cells))
}

/// Coverage of [`prefix_target`] minus 𝒢_C.
pub fn verify_prefix() -> Result<CoverageReport> {
    let frame = Frame::default();
    let (instances, covers) = prefix_covers(&frame)?;
    Ok(coverage(None, &prefix_target(&frame), &prefix_gc_cells(8, &frame), &covers, instances.len()))
}

#[derive(Clone, Debug, Serialize)]
pub struct Tile {
    pub cell: Cell,
    pub parameter: QComplex,
    pub finite: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TileReport {
    pub tiles: Vec<Tile>,
    pub uncovered: Vec<Cell>,
    pub verdict: Verdict,
}

/// 𝒢_C ∩ {0 ≤ y, |x| ≤ radius, |y| ≤ radius}, possibly overlapping cells.
///
/// The fan of rows `0..=K+1` covers slopes above `1/K`. Below that slope the
/// chain consists of pikes `K − 1` and later, whose vertices all have
/// `x ≥ 1 − 4/((K−1)² − 2)` (the smallest value is at `P_1`). Once this
/// exceeds the radius, the thin sector `0 < y ≤ x/K` lies in 𝒢_C within the
/// square.
fn upper_disk_target(radius: &Rational, frame: &Frame) -> Vec<Cell> {
    let r = radius;
    let square = [
        HalfPlane::new(rat_int(1), Rational::zero(), r.clone(), false),
        HalfPlane::new(rat_int(-1), Rational::zero(), r.clone(), false),
        HalfPlane::new(Rational::zero(), rat_int(1), r.clone(), false),
        HalfPlane::new(Rational::zero(), rat_int(-1), r.clone(), false),
    ];
    let mut k = 8;
    while Rational::one() - ratio(4, (k - 1) * (k - 1) - 2) <= *r {
        k += 1;
    }
    let mut out = crate::region::gc_cells(0, k + 1, &square, frame);
    let sector = Cell::from_halfplanes(
        [
            HalfPlane::new(Rational::zero(), rat_int(1), Rational::zero(), true),
            HalfPlane::new(rat_int(1), rat_int(-k), Rational::zero(), false),
        ]
        .into_iter()
        .chain(square),
        frame,
    );
    out.push(sector);
    out
}

/// Tiles `𝒢_C ∩ {|z| ≤ radius}` with witness polyhedra, each decided by the
/// witness graph of its probe point.
///
/// The probe of each step is the sample point of the first uncovered cell.
/// `Covered` needs every tile finite and nothing left; an infinite tile
/// stops the run with `Failed`.
pub fn flood_fill_tiles(radius: &Rational, budget: usize) -> Result<TileReport> {
    if !radius.is_positive() || radius >= &Rational::one() {
        return Err(Error::Precondition("target radius must lie in (0, 1)".into()));
    }
    let frame = Frame::default();
    let r2 = radius * radius;
    let beyond = |c: &Cell| c.disk_separation_r2(&r2) == DiskSeparation::Outside;
    let mut uncovered: Vec<Cell> = tile_target(radius, &frame).into_iter().filter(|c| !beyond(c)).collect();
    let mut tiles = Vec::new();
    while let Some(first) = uncovered.first() {
        if tiles.len() >= budget {
            return Ok(TileReport { tiles, uncovered, verdict: Verdict::Budget });
        }
        let probe = first.sample_point().expect("uncovered cells are nonempty");
        let g = Gsrs::new(&probe);
        let graph = g.witness_graph(WITNESS_BUDGET)?;
        let cell = witness_polyhedron(&graph, &frame);
        let finite = g.decide(WITNESS_BUDGET).is_finite();
        debug_assert!(cell.contains(&probe));
        tiles.push(Tile { cell: cell.clone(), parameter: probe, finite });
        if !finite {
            return Ok(TileReport { tiles, uncovered, verdict: Verdict::Failed });
        }
        uncovered = uncovered.iter().flat_map(|u| subtract_cover_pruned(u, std::slice::from_ref(&cell), beyond)).collect();
    }
    Ok(TileReport { tiles, uncovered, verdict: Verdict::Covered })
}

const WITNESS_BUDGET: usize = 1 << 16;

/// 𝒢_C within the square `|x|, |y| ≤ radius`, both halves.
fn tile_target(radius: &Rational, frame: &Frame) -> Vec<Cell> {
    let upper = upper_disk_target(radius, frame);
    // The mirror image, without the real axis a second time.
    let below = HalfPlane::new(Rational::zero(), rat_int(-1), Rational::zero(), true);
    let lower: Vec<Cell> = upper.iter().map(|c| c.conjugate().intersect_halfplanes([below.clone()])).collect();
    upper.into_iter().chain(lower).filter(|c| !c.is_empty()).collect()
}

fn in_orbit_sector(n: i64, r: &QComplex) -> bool {
    r.im.is_positive() && &r.im * rat_int(n - 1) <= r.re
}

/// `M_n`: `|a| + |b| ≤ n`, and `< n` when `a ≤ 0` or `b ≤ 0`.
pub fn orbit_lemma_set(n: i64) -> Vec<GaussianInt> {
    let mut out = Vec::new();
    for a in -n..=n {
        for b in -n..=n {
            let l1 = a.abs() + b.abs();
            if l1 <= n && (!(a <= 0 || b <= 0) || l1 < n) {
                out.push(GaussianInt::new(a, b));
            }
        }
    }
    out
}

/// Whether every element of `M_n` reaches `0` within `m = n² − ⌈n/2⌉`
/// steps of `γ_r²`, for `0 < y(n−1) ≤ x` and `|r| ≤ 1`.
///
/// The budget counts double steps: on the unit circle the orbits need up to
/// `2m` applications of `γ_r`, one unit move per `γ_r²`.
pub fn critical_orbit_check(n: i64, r: &QComplex) -> Result<bool> {
    let depth = orbit_lemma_depth(n, r)?;
    Ok(depth.is_some_and(|d| d as i64 <= 2 * (n * n - (n + 1) / 2)))
}

/// The largest number of `γ_r` steps an element of `M_n` takes to reach `0`,
/// or `None` if one of them does not get there within `4n²` steps.
pub fn orbit_lemma_depth(n: i64, r: &QComplex) -> Result<Option<usize>> {
    if n < 2 || !in_orbit_sector(n, r) || r.norm_sqr() > Rational::one() {
        return Err(Error::Precondition(format!("need n ≥ 2, 0 < y(n−1) ≤ x and |r| ≤ 1, got n = {n}, r = {r}")));
    }
    let limit = (4 * n * n) as usize;
    let g = Gsrs::new(r);
    let mut worst = 0;
    for z in orbit_lemma_set(n) {
        match g.orbit(&z, limit) {
            OrbitResult::ReachesZero { steps } => worst = worst.max(steps),
            _ => return Ok(None),
        }
    }
    Ok(Some(worst))
}

/// The displacement `γ_r²(z) − z` predicted for `z = (a, b) ≠ 0` on the
/// unit circle.
pub fn predicted_step(z: &GaussianInt) -> Option<(i64, i64)> {
    let (a, b) = z.to_i64_pair()?;
    Some(match () {
        _ if a > 1 && b >= 0 => (-1, 1),
        _ if a == 1 && b >= 0 => (-1, 0),
        _ if a <= 0 && b > 1 => (-1, -1),
        _ if a <= 0 && b == 1 => (0, -1),
        _ if a < 0 && b <= 0 => (1, -1),
        _ if a >= 0 && b < 0 => (1, 1),
        _ => return None,
    })
}

/// Whether `γ_r²(z) − z` is the predicted displacement, for `r` on the unit
/// circle with `0 < y(n−1) ≤ x` and `z` in the range where the prediction
/// is claimed.
pub fn step_rule_check(n: i64, r: &QComplex, z: &GaussianInt) -> Result<bool> {
    let pre = |m: String| Err(Error::Precondition(m));
    if n < 2 || !in_orbit_sector(n, r) || r.norm_sqr() != Rational::one() {
        return pre(format!("need |r| = 1 and 0 < y(n−1) ≤ x, got n = {n}, r = {r}"));
    }
    let Some((a, b)) = z.to_i64_pair() else { return pre(format!("{z} is too large")) };
    let l1 = a.abs() + b.abs();
    if l1 > n || a.abs().max(b.abs()) >= n || ((a < 0 || b < 0) && l1 >= n) {
        return pre(format!("{z} lies outside the range of the step rule for n = {n}"));
    }
    let Some((dx, dy)) = predicted_step(z) else { return pre("the step rule says nothing about 0".into()) };
    let g = Gsrs::new(r);
    let twice = g.gamma(&g.gamma(z));
    Ok(twice == &GaussianInt::new(a, b) + &GaussianInt::new(dx, dy))
}

/// Whether `(z, −iz, −z, iz)` is a cycle of `γ_i` and `(z, iz, −z, −iz)` one
/// of `γ_{−i}`.
pub fn rotation_cycle_check(z: &GaussianInt) -> bool {
    let i = GaussianInt::new(0, 1);
    let mi = GaussianInt::new(0, -1);
    let orbit_closes = |r: &QComplex, turn: &GaussianInt| {
        let g = Gsrs::new(r);
        let mut a = z.clone();
        (0..4).all(|_| {
            let next = &a * turn;
            let ok = g.gamma(&a) == next;
            a = next;
            ok
        }) && a == *z
    };
    orbit_closes(&QComplex::ints(0, 1), &mi) && orbit_closes(&QComplex::ints(0, -1), &i)
}

/// A rational point of the relative interior of a nonempty cell: a random
/// convex combination of its closure vertices with positive weights.
pub fn random_interior_point(c: &Cell, rng: &mut impl Rng) -> Option<QComplex> {
    let vs = c.vertices();
    if vs.is_empty() {
        return None;
    }
    let ws: Vec<i64> = vs.iter().map(|_| rng.gen_range(1..=64)).collect();
    let total: i64 = ws.iter().sum();
    let mut p = QComplex::zero();
    for (v, w) in vs.iter().zip(&ws) {
        p = &p + &v.scale(&ratio(*w, total));
    }
    Some(p)
}

fn grid(rng: &mut impl Rng, lo: &Rational, hi: &Rational) -> Rational {
    const DEN: i64 = 1 << 20;
    lo + (hi - lo) * ratio(rng.gen_range(0..=DEN), DEN)
}

/// Probes of the sector window of `n` inside the closed unit disk and not in
/// 𝒢_C; each must lie in a cover cell. Returns the number of probes checked
/// and any point that no cover contains.
///
/// Probes are drawn by slope and abscissa, with `x ≥ 1 − 3/(n−2)²`: every
/// chain vertex near the window lies to the right of that line.
pub fn audit_sector(n: i64, probes: usize, seed: u64) -> Result<(usize, Vec<QComplex>)> {
    let covers: Vec<Cell> = selection_cells(n)?.into_iter().map(|(_, c)| c).collect();
    let hs = sector_halfplanes(n);
    let (s0, s1) = (ratio(1, n), ratio(1, n - 1));
    let x0 = Rational::one() - ratio(3, (n - 2) * (n - 2));
    let sample = |rng: &mut ChaCha8Rng| {
        let x = grid(rng, &x0, &Rational::one());
        let y = &x * grid(rng, &s0, &s1);
        QComplex::new(x, y)
    };
    Ok(audit(&covers, probes, seed, sample, |p| hs.iter().all(|h| h.contains(p))))
}

/// [`audit_sector`] for the prefix target, sampled from `[−1, 1] × [0, 1]`.
pub fn audit_prefix(probes: usize, seed: u64) -> Result<(usize, Vec<QComplex>)> {
    let frame = Frame::default();
    let target = prefix_target(&frame);
    let (_, covers) = prefix_covers(&frame)?;
    let sample = |rng: &mut ChaCha8Rng| QComplex::new(grid(rng, &rat_int(-1), &rat_int(1)), grid(rng, &Rational::zero(), &rat_int(1)));
    Ok(audit(&covers, probes, seed, sample, |p| target.contains(p)))
}

fn audit(
    covers: &[Cell],
    probes: usize,
    seed: u64,
    sample: impl Fn(&mut ChaCha8Rng) -> QComplex,
    inside: impl Fn(&QComplex) -> bool,
) -> (usize, Vec<QComplex>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut missed = Vec::new();
    let mut attempts = 0;
    while checked < probes && attempts < probes * 1000 {
        attempts += 1;
        let p = sample(&mut rng);
        if !inside(&p) || p.norm_sqr() > Rational::one() || region_contains(&p) {
            continue;
        }
        checked += 1;
        if !covers.iter().any(|c| c.contains(&p)) {
            missed.push(p);
        }
    }
    (checked, missed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_lemma_set_size() {
        assert_eq!(orbit_lemma_set(3).len(), 15);
        assert_eq!(orbit_lemma_set(2).len(), 6);
        assert!(orbit_lemma_set(3).contains(&GaussianInt::new(2, 1)));
        assert!(!orbit_lemma_set(3).contains(&GaussianInt::new(-2, 1)));
    }

    #[test]
    fn critical_orbits() {
        assert!(critical_orbit_check(3, &QComplex::frac(4, 5, 1, 5)).unwrap());
        assert!(critical_orbit_check(2, &QComplex::frac(1, 2, 0, 1)).is_err());
        assert!(critical_orbit_check(2, &QComplex::ints(1, 0)).is_err());
        assert!(critical_orbit_check(5, &QComplex::frac(1, 2, 1, 2)).is_err());
        assert!(critical_orbit_check(5, &QComplex::frac(9, 10, 1, 10)).unwrap());
        // On the unit circle the longest orbit takes exactly 2m single steps.
        let r = QComplex::frac(40, 41, 9, 41);
        assert_eq!(orbit_lemma_depth(5, &r).unwrap(), Some(44));
        assert!(critical_orbit_check(5, &r).unwrap());
    }

    #[test]
    fn step_rule_cases() {
        let r = QComplex::frac(40, 41, 9, 41);
        for (a, b) in [(3, 1), (1, 2), (2, -1), (-1, 2), (0, 1), (-2, -1)] {
            assert!(step_rule_check(5, &r, &GaussianInt::new(a, b)).unwrap(), "({a},{b})");
        }
        assert!(step_rule_check(5, &r, &GaussianInt::zero()).is_err());
        assert!(step_rule_check(5, &QComplex::frac(9, 10, 1, 10), &GaussianInt::new(3, 1)).is_err());
        assert!(step_rule_check(5, &r, &GaussianInt::new(5, 0)).is_err());
    }

    #[test]
    fn rotation_cycles() {
        for (a, b) in [(1, 0), (0, 0), (3, -2), (-7, 4)] {
            assert!(rotation_cycle_check(&GaussianInt::new(a, b)));
        }
    }
}
