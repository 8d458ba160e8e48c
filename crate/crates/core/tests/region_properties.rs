use loudspeaker::exact::{ratio, QComplex, Rational};
use loudspeaker::region::{boundary_chain, local_gc_cells, region_contains, vertex, BoundaryChain};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn config(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

fn point() -> impl Strategy<Value = QComplex> {
    (-1024i64..=1024, -1024i64..=1024).prop_map(|(x, y)| QComplex::frac(x, 1024, y, 1024))
}

fn chain() -> &'static BoundaryChain {
    static C: OnceLock<BoundaryChain> = OnceLock::new();
    C.get_or_init(|| boundary_chain(40))
}

/// The closed curve: the upper chain from the origin, its mirror image back,
/// joined near `(1, 0)`.
fn closed_curve() -> Vec<QComplex> {
    let upper: Vec<QComplex> = chain().vertices[1..].iter().map(|v| v.point.clone()).collect();
    let lower = upper.iter().rev().map(QComplex::conj);
    upper.iter().cloned().chain(lower).collect()
}

fn on_segment(p: &QComplex, u: &QComplex, v: &QComplex) -> bool {
    (v - u).cross(&(p - u)).is_zero() && !(u - p).dot(&(v - p)).is_positive()
}

/// Even–odd rule against the polygon `vs`, or `None` on the boundary.
fn crossing_parity(vs: &[QComplex], p: &QComplex) -> Option<bool> {
    let mut inside = false;
    for k in 0..vs.len() {
        let (u, v) = (&vs[k], &vs[(k + 1) % vs.len()]);
        if on_segment(p, u, v) {
            return None;
        }
        if (u.im > p.im) != (v.im > p.im) {
            // The crossing lies to the right of p when (v − u) × (p − u) has
            // the sign of v.y − u.y.
            let side = (v - u).cross(&(p - u));
            if side.is_positive() == (v.im > u.im) {
                inside = !inside;
            }
        }
    }
    Some(inside)
}

proptest! {
    #![proptest_config(config(512, 1))]

    #[test]
    fn conjugation_symmetry(p in point()) {
        prop_assert_eq!(region_contains(&p), region_contains(&p.conj()));
    }

    /// Away from `(1, 0)` the truncated chain is the whole boundary, so an
    /// independent point-in-polygon test must agree off the boundary.
    #[test]
    fn agrees_with_crossing_parity(p in point()) {
        prop_assume!(p.re <= ratio(19, 20));
        let curve = closed_curve();
        if let Some(inside) = crossing_parity(&curve, &p) {
            prop_assert_eq!(region_contains(&p), inside, "{}", p);
        }
    }

    #[test]
    fn star_shaped(k in 0usize..500, s in 0i64..=1024, t in 1i64..1024) {
        let vs = &chain().vertices;
        let k = k % (vs.len() - 1);
        let (u, v) = (&vs[k].point, &vs[k + 1].point);
        let p = u + &(v - u).scale(&ratio(s, 1024));
        let q = p.scale(&ratio(t, 1024));
        prop_assert!(region_contains(&q), "{} scaled from {}", q, p);
    }
}

#[test]
fn markup_consistency() {
    let c = chain();
    let last = c.vertices.len() - 1;
    for (k, v) in c.vertices.iter().enumerate().take(last) {
        let before = if k > 0 { c.solid[k - 1] } else { false };
        if v.overline {
            assert!(region_contains(&v.point), "P_{}({}) is overlined", v.index, v.n);
        } else if !before && !c.solid[k] {
            assert!(!region_contains(&v.point), "P_{}({}) has only dotted edges", v.index, v.n);
        }
    }
}

#[test]
fn agrees_with_local_cells() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 7..=40i64 {
        let cells = local_gc_cells(n).unwrap();
        let x0 = Rational::one() - ratio(6, (n - 2) * (n - 2));
        for _ in 0..200 {
            let x = &x0 + (Rational::one() - &x0) * ratio(rng.gen_range(0..=4096), 4096);
            let slope = ratio(1, n) + (ratio(1, n - 1) - ratio(1, n)) * ratio(rng.gen_range(1..=4096), 4096);
            let p = QComplex::new(x.clone(), x * slope);
            assert_eq!(region_contains(&p), cells.iter().any(|c| c.contains(&p)), "n = {n}, p = {p}");
        }
    }
}

#[test]
fn vertices_approach_one() {
    let one = QComplex::ints(1, 0);
    for i in 1..=10u8 {
        let d: Vec<Rational> = (8..=200).map(|n| (&vertex(i, n).unwrap() - &one).norm_sqr()).collect();
        assert!(d.windows(2).all(|w| w[1] < w[0]), "P_{i}");
    }
}
