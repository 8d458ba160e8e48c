//! The Gaussian shift radix system `γ_r(a) = −⌊r·a⌋`, its four signed and
//! conjugated variants, orbits, witness sets and the finiteness decision.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{GaussianInt, QComplex, ScaledParam};

/// Default step budget for [`orbit`].
pub const DEFAULT_ORBIT_BUDGET: usize = 1_000_000;
/// Default size budget for [`brunotte_witnesses`] and friends.
pub const DEFAULT_WITNESS_BUDGET: usize = 1_000_000;

/// A cyclic sequence of Gaussian integers, stored rotated so that the
/// smallest element (by `(re, im)`) comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<GaussianInt>", into = "Vec<GaussianInt>")]
pub struct Cycle(Vec<GaussianInt>);

impl Cycle {
    /// Builds the canonical rotation. Errors on an empty sequence.
    pub fn new(mut elems: Vec<GaussianInt>) -> Result<Cycle> {
        if elems.is_empty() {
            return Err(Error::Precondition("a cycle needs at least one element".into()));
        }
        let start = elems
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        elems.rotate_left(start);
        Ok(Cycle(elems))
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Cycle> {
        Cycle::new(pairs.iter().map(|&(a, b)| GaussianInt::new(a, b)).collect())
    }

    pub fn trivial() -> Cycle {
        Cycle(vec![GaussianInt::zero()])
    }

    pub fn elements(&self) -> &[GaussianInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_zero()
    }

    /// Consecutive pairs `(a_i, a_{i+1})`, wrapping around.
    pub fn steps(&self) -> impl Iterator<Item = (&GaussianInt, &GaussianInt)> {
        let n = self.0.len();
        (0..n).map(move |i| (&self.0[i], &self.0[(i + 1) % n]))
    }

    /// True if no proper rotation of the sequence equals itself.
    pub fn is_primitive(&self) -> bool {
        let n = self.0.len();
        (1..n).filter(|d| n % d == 0).all(|d| (0..n).any(|i| self.0[i] != self.0[(i + d) % n]))
    }

    /// True if `γ_r` maps every element to its successor.
    pub fn is_cycle_of(&self, r: &QComplex) -> bool {
        let g = Gsrs::new(r);
        self.steps().all(|(a, b)| &g.gamma(a) == b)
    }
}

impl TryFrom<Vec<GaussianInt>> for Cycle {
    type Error = Error;
    fn try_from(v: Vec<GaussianInt>) -> Result<Cycle> {
        Cycle::new(v)
    }
}

impl From<Cycle> for Vec<GaussianInt> {
    fn from(c: Cycle) -> Self {
        c.0
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum OrbitResult {
    ReachesZero { steps: usize },
    EntersCycle { cycle: Cycle, preperiod: usize },
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "cycle", rename_all = "snake_case")]
pub enum Finiteness {
    Finite,
    Infinite(Cycle),
    Unknown,
}

impl Finiteness {
    pub fn is_finite(&self) -> bool {
        matches!(self, Finiteness::Finite)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Finiteness::Infinite(_))
    }
}

/// `γ_r` for a fixed parameter, with the parameter pre-scaled to integers.
#[derive(Clone, Debug)]
pub struct Gsrs {
    r: QComplex,
    scaled: ScaledParam,
}

impl Gsrs {
    pub fn new(r: &QComplex) -> Self {
        Gsrs { r: r.clone(), scaled: ScaledParam::new(r) }
    }

    pub fn parameter(&self) -> &QComplex {
        &self.r
    }

    pub fn gamma(&self, a: &GaussianInt) -> GaussianInt {
        -self.scaled.floor_mul(a)
    }

    /// The `i`-th variant, `i ∈ 1..=4`.
    pub fn variant(&self, i: usize, a: &GaussianInt) -> Result<GaussianInt> {
        Ok(match i {
            1 => self.gamma(a),
            2 => -self.gamma(&-a),
            3 => self.gamma(&a.conj()).conj(),
            4 => -self.gamma(&-a.conj()).conj(),
            _ => return Err(Error::InvalidVariant(i)),
        })
    }

    fn all_variants(&self, a: &GaussianInt) -> [GaussianInt; 4] {
        let na = -a;
        let ca = a.conj();
        let nca = -&ca;
        [
            self.gamma(a),
            -self.gamma(&na),
            self.gamma(&ca).conj(),
            -self.gamma(&nca).conj(),
        ]
    }

    pub fn orbit(&self, a: &GaussianInt, budget: usize) -> OrbitResult {
        let mut seen: HashMap<GaussianInt, usize> = HashMap::new();
        let mut path = Vec::new();
        let mut cur = a.clone();
        for step in 0..=budget {
            if cur.is_zero() {
                return OrbitResult::ReachesZero { steps: step };
            }
            if let Some(&start) = seen.get(&cur) {
                let cycle = Cycle::new(path[start..].to_vec()).expect("nonempty cycle");
                return OrbitResult::EntersCycle { cycle, preperiod: start };
            }
            seen.insert(cur.clone(), step);
            let next = self.gamma(&cur);
            path.push(cur);
            cur = next;
        }
        OrbitResult::BudgetExceeded
    }

    pub fn witnesses(&self, size_budget: usize) -> Result<BTreeSet<GaussianInt>> {
        match self.witness_search(size_budget) {
            (seen, true) => Ok(seen.into_iter().collect()),
            _ => Err(Error::BudgetExceeded(size_budget)),
        }
    }

    /// Breadth-first closure of `V_0` under the variants; the flag is false
    /// when the budget stopped the search early.
    fn witness_search(&self, size_budget: usize) -> (HashSet<GaussianInt>, bool) {
        let mut seen: HashSet<GaussianInt> = unit_witnesses().into_iter().collect();
        let mut queue: VecDeque<GaussianInt> = unit_witnesses().into_iter().collect();
        while let Some(a) = queue.pop_front() {
            for b in self.all_variants(&a) {
                if !seen.contains(&b) {
                    if seen.len() >= size_budget {
                        return (seen, false);
                    }
                    seen.insert(b.clone());
                    queue.push_back(b);
                }
            }
        }
        (seen, true)
    }

    pub fn witness_graph(&self, size_budget: usize) -> Result<WitnessGraph> {
        let vs = self.witnesses(size_budget)?;
        let edges = vs.into_iter().map(|a| {
            let imgs = self.all_variants(&a);
            (a, imgs)
        });
        Ok(WitnessGraph { edges: edges.collect() })
    }

    /// `Finite` needs a complete witness set. Without one, the orbits of the
    /// witnesses found so far are still searched for a cycle.
    pub fn decide(&self, size_budget: usize) -> Finiteness {
        let (seen, complete) = self.witness_search(size_budget);
        let mut vs: Vec<GaussianInt> = seen.into_iter().collect();
        vs.sort();
        let mut reaches: HashMap<GaussianInt, bool> = HashMap::new();
        // A complete set needs at most |V_r| steps in total; outside the disk
        // a partial set can have escaping orbits.
        let mut steps_left = size_budget.saturating_mul(16);
        for a in &vs {
            if let Some(cycle) = self.walk_to_zero(a, &mut reaches, &mut steps_left) {
                return Finiteness::Infinite(cycle);
            }
            if steps_left == 0 {
                break;
            }
        }
        if complete {
            Finiteness::Finite
        } else {
            Finiteness::Unknown
        }
    }

    /// Follows the orbit of `a`, memoising vertices known to reach zero.
    /// Returns the cycle if the orbit closes up before reaching zero.
    fn walk_to_zero(
        &self,
        a: &GaussianInt,
        reaches: &mut HashMap<GaussianInt, bool>,
        steps_left: &mut usize,
    ) -> Option<Cycle> {
        let mut path: Vec<GaussianInt> = Vec::new();
        let mut on_path: HashMap<GaussianInt, usize> = HashMap::new();
        let mut cur = a.clone();
        loop {
            if cur.is_zero() || reaches.contains_key(&cur) {
                break;
            }
            if let Some(&i) = on_path.get(&cur) {
                return Some(Cycle::new(path[i..].to_vec()).expect("nonempty"));
            }
            if *steps_left == 0 {
                return None;
            }
            *steps_left -= 1;
            on_path.insert(cur.clone(), path.len());
            let next = self.gamma(&cur);
            path.push(cur);
            cur = next;
        }
        for p in path {
            reaches.insert(p, true);
        }
        None
    }
}

/// `V_0 = {±1, ±i}`.
pub fn unit_witnesses() -> [GaussianInt; 4] {
    [
        GaussianInt::new(1, 0),
        GaussianInt::new(-1, 0),
        GaussianInt::new(0, 1),
        GaussianInt::new(0, -1),
    ]
}

/// `γ_r(a) = −⌊r·a⌋`.
pub fn gamma(r: &QComplex, a: &GaussianInt) -> GaussianInt {
    Gsrs::new(r).gamma(a)
}

pub fn gamma_variant(i: usize, r: &QComplex, a: &GaussianInt) -> Result<GaussianInt> {
    Gsrs::new(r).variant(i, a)
}

pub fn orbit(r: &QComplex, a: &GaussianInt, budget: usize) -> OrbitResult {
    Gsrs::new(r).orbit(a, budget)
}

/// Closure of `V_0` under all four variants. Stationary for `|r| < 1`;
/// elsewhere the budget decides.
pub fn brunotte_witnesses(r: &QComplex, size_budget: usize) -> Result<BTreeSet<GaussianInt>> {
    Gsrs::new(r).witnesses(size_budget)
}

pub fn witness_graph(r: &QComplex, size_budget: usize) -> Result<WitnessGraph> {
    Gsrs::new(r).witness_graph(size_budget)
}

/// Finite iff every witness reaches zero. When the witness set outgrows the
/// budget, the orbits of `V_0` are searched for a cycle instead; if none
/// shows up the answer is `Unknown`.
pub fn decide_finiteness(r: &QComplex, size_budget: usize) -> Finiteness {
    Gsrs::new(r).decide(size_budget)
}

/// Edge-coloured functional graph on a witness set: every vertex maps to its
/// four variant images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessGraph {
    edges: BTreeMap<GaussianInt, [GaussianInt; 4]>,
}

impl WitnessGraph {
    pub fn vertices(&self) -> impl Iterator<Item = &GaussianInt> {
        self.edges.keys()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Images of `a` under variants 1..=4.
    pub fn images(&self, a: &GaussianInt) -> Option<&[GaussianInt; 4]> {
        self.edges.get(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GaussianInt, &[GaussianInt; 4])> {
        self.edges.iter()
    }

    /// The edge set of colour `i ∈ 1..=4`.
    pub fn edges(&self, i: usize) -> Result<Vec<(GaussianInt, GaussianInt)>> {
        if !(1..=4).contains(&i) {
            return Err(Error::InvalidVariant(i));
        }
        Ok(self.edges.iter().map(|(a, im)| (a.clone(), im[i - 1].clone())).collect())
    }
}

impl Serialize for WitnessGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.edges.len()))?;
        for (a, im) in &self.edges {
            seq.serialize_element(&(a, im))?;
        }
        seq.end()
    }
}

/// Digits of `x` in the Gaussian numeration system with base `beta`,
/// least significant first. Uses `z_0 = −x`, `z_{i+1} = γ_{−1/β}(z_i)` and
/// `a_i = β·z_{i+1} − z_i`, which telescopes to `Σ a_i β^i = x`.
pub fn gns_digits(beta: &GaussianInt, x: &GaussianInt, budget: usize) -> Result<Vec<GaussianInt>> {
    let r = -&beta
        .to_qcomplex()
        .recip()
        .ok_or_else(|| Error::Precondition("base must be nonzero".into()))?;
    let g = Gsrs::new(&r);
    let mut z = -x;
    let mut digits = Vec::new();
    while !z.is_zero() {
        if digits.len() >= budget {
            return Err(Error::BudgetExceeded(budget));
        }
        let next = g.gamma(&z);
        digits.push(&(beta * &next) - &z);
        z = next;
    }
    Ok(digits)
}

/// `⌊c/β⌋ = 0`.
pub fn is_gns_digit(beta: &GaussianInt, c: &GaussianInt) -> bool {
    match beta.to_qcomplex().recip() {
        Some(inv) => crate::exact::complex_floor(&crate::exact::qc_mul(&inv, c)).is_zero(),
        None => false,
    }
}

/// `Σ a_i β^i`.
pub fn gns_value(beta: &GaussianInt, digits: &[GaussianInt]) -> GaussianInt {
    digits.iter().rev().fold(GaussianInt::zero(), |acc, d| &(&acc * beta) + d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GaussianInt {
        GaussianInt::new(a, b)
    }

    fn c01() -> Cycle {
        Cycle::from_pairs(&[(-2, 0), (2, 2), (0, -2), (-1, 2), (2, 0), (-1, -1), (0, 2), (2, -1)]).unwrap()
    }

    #[test]
    fn gamma_examples() {
        let r = QComplex::frac(2, 3, 2, 3);
        assert_eq!(gamma(&r, &g(-2, 0)), g(2, 2));
        assert_eq!(gamma(&QComplex::zero(), &g(7, -3)), g(0, 0));
        assert_eq!(gamma(&QComplex::frac(1, 2, 1, 2), &g(1, 0)), g(0, 0));
    }

    #[test]
    fn variant_examples() {
        let r = QComplex::frac(2, 3, 2, 3);
        assert_eq!(gamma_variant(1, &r, &g(5, 1)).unwrap(), gamma(&r, &g(5, 1)));
        assert_eq!(gamma_variant(2, &r, &g(2, 0)).unwrap(), g(-2, -2));
        for i in 1..=4 {
            assert_eq!(gamma_variant(i, &QComplex::frac(3, 7, -1, 9), &g(0, 0)).unwrap(), g(0, 0));
        }
        assert_eq!(gamma_variant(0, &r, &g(1, 0)), Err(Error::InvalidVariant(0)));
        assert_eq!(gamma_variant(5, &r, &g(1, 0)), Err(Error::InvalidVariant(5)));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            orbit(&QComplex::frac(1, 2, 1, 2), &g(1, 0), 100),
            OrbitResult::ReachesZero { steps: 1 }
        );
        assert_eq!(
            orbit(&QComplex::frac(2, 3, 2, 3), &g(-2, 0), 100),
            OrbitResult::EntersCycle { cycle: c01(), preperiod: 0 }
        );
        let rot = Cycle::from_pairs(&[(1, 0), (0, -1), (-1, 0), (0, 1)]).unwrap();
        assert_eq!(
            orbit(&QComplex::ints(0, 1), &g(1, 0), 100),
            OrbitResult::EntersCycle { cycle: rot, preperiod: 0 }
        );
        assert_eq!(orbit(&QComplex::ints(0, 0), &g(0, 0), 1), OrbitResult::ReachesZero { steps: 0 });
        // |r| > 1 escapes.
        assert_eq!(orbit(&QComplex::ints(-2, 0), &g(1, 0), 50), OrbitResult::BudgetExceeded);
    }

    #[test]
    fn canonical_rotation() {
        let c = Cycle::from_pairs(&[(2, 2), (0, -2), (-2, 0)]).unwrap();
        assert_eq!(c.elements()[0], g(-2, 0));
        assert!(Cycle::new(vec![]).is_err());
        assert!(c.is_primitive());
        assert!(!Cycle::from_pairs(&[(1, 0), (2, 0), (1, 0), (2, 0)]).unwrap().is_primitive());
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, "[[-2,0],[2,2],[0,-2]]");
        let back: Cycle = serde_json::from_str("[[2,2],[0,-2],[-2,0]]").unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn witnesses_at_zero() {
        let w = brunotte_witnesses(&QComplex::zero(), 100).unwrap();
        let expect: BTreeSet<_> = [g(1, 0), g(-1, 0), g(0, 1), g(0, -1), g(0, 0)].into_iter().collect();
        assert_eq!(w, expect);
        let graph = witness_graph(&QComplex::zero(), 100).unwrap();
        assert_eq!(graph.len(), 5);
        for (_, im) in graph.iter() {
            assert!(im.iter().all(|b| b.is_zero()));
        }
    }

    fn assert_closed(r: &QComplex, w: &BTreeSet<GaussianInt>) {
        for a in unit_witnesses() {
            assert!(w.contains(&a));
        }
        for a in w {
            for i in 1..=4 {
                assert!(w.contains(&gamma_variant(i, r, a).unwrap()), "{a} not closed under variant {i}");
            }
        }
    }

    #[test]
    fn witnesses_closed() {
        for r in [QComplex::frac(1, 2, 1, 2), QComplex::frac(2, 3, 2, 3), QComplex::frac(-9, 10, 1, 5)] {
            let w = brunotte_witnesses(&r, DEFAULT_WITNESS_BUDGET).unwrap();
            assert_closed(&r, &w);
        }
        let r = QComplex::frac(2, 3, 2, 3);
        let w = brunotte_witnesses(&r, DEFAULT_WITNESS_BUDGET).unwrap();
        // The witness orbits of V_0 fall into C_0(1) here.
        let hits = c01().elements().iter().filter(|a| w.contains(a)).count();
        assert!(hits > 0);
        assert_eq!(brunotte_witnesses(&QComplex::ints(2, 0), 1000), Err(Error::BudgetExceeded(1000)));
    }

    #[test]
    fn witness_graph_reaches_zero_at_half() {
        let r = QComplex::frac(1, 2, 1, 2);
        let graph = witness_graph(&r, DEFAULT_WITNESS_BUDGET).unwrap();
        for a in unit_witnesses() {
            let mut cur = a;
            for _ in 0..=graph.len() {
                if cur.is_zero() {
                    break;
                }
                cur = graph.images(&cur).unwrap()[0].clone();
            }
            assert!(cur.is_zero());
        }
        for i in 1..=4 {
            assert_eq!(graph.edges(i).unwrap().len(), graph.len());
        }
    }

    #[test]
    fn decide_examples() {
        assert_eq!(decide_finiteness(&QComplex::zero(), 100), Finiteness::Finite);
        assert_eq!(
            decide_finiteness(&QComplex::frac(2, 3, 2, 3), DEFAULT_WITNESS_BUDGET),
            Finiteness::Infinite(c01())
        );
        assert_eq!(decide_finiteness(&QComplex::frac(1, 2, 1, 2), DEFAULT_WITNESS_BUDGET), Finiteness::Finite);
        // Rotation by i: no finite witness set, but V_0 cycles.
        assert!(decide_finiteness(&QComplex::ints(0, 1), 1000).is_infinite());
        assert_eq!(decide_finiteness(&QComplex::ints(-3, 0), 1000), Finiteness::Unknown);
    }

    #[test]
    fn gns_examples() {
        let beta = g(-1, 1);
        assert!(gns_digits(&beta, &g(0, 0), 10).unwrap().is_empty());
        let d = gns_digits(&beta, &beta, 100).unwrap();
        assert_eq!(d, vec![g(0, 0), g(-1, 0), g(0, 0), g(-1, 0), g(-1, 0), g(-1, 0)]);
        assert_eq!(gns_value(&beta, &d), beta);
        for a in -3..=3 {
            for b in -3..=3 {
                let x = g(a, b);
                let d = gns_digits(&beta, &x, 1000).unwrap();
                assert_eq!(gns_value(&beta, &d), x);
                assert!(d.iter().all(|c| is_gns_digit(&beta, c)));
                assert!(d.iter().all(|c| c.is_zero() || *c == g(-1, 0)));
            }
        }
        assert!(gns_digits(&g(0, 0), &g(1, 0), 10).is_err());
        // −1/β = −1/2 lies outside the finiteness region; −1 is a fixed point of z ↦ γ(z).
        assert_eq!(gns_digits(&g(2, 0), &g(-1, 0), 50), Err(Error::BudgetExceeded(50)));
    }

    fn small_r() -> impl Strategy<Value = QComplex> {
        (-24i64..=24, -24i64..=24).prop_map(|(x, y)| QComplex::frac(x, 25, y, 25))
    }

    fn small_g() -> impl Strategy<Value = GaussianInt> {
        (-30i64..30, -30i64..30).prop_map(|(a, b)| g(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 128, rng_seed: proptest::test_runner::RngSeed::Fixed(11), failure_persistence: None, ..ProptestConfig::default() })]

        #[test]
        fn variant_identities(r in small_r(), a in small_g()) {
            let g1 = |v: &GaussianInt| gamma(&r, v);
            prop_assert_eq!(gamma_variant(2, &r, &a).unwrap(), -g1(&-&a));
            prop_assert_eq!(gamma_variant(3, &r, &a).unwrap(), g1(&a.conj()).conj());
            prop_assert_eq!(gamma_variant(4, &r, &a).unwrap(), -g1(&-a.conj()).conj());
        }

        #[test]
        fn witness_closure_inside_disk(r in small_r()) {
            prop_assume!(r.norm_sqr() < crate::exact::rat_int(1));
            let w = brunotte_witnesses(&r, DEFAULT_WITNESS_BUDGET).unwrap();
            assert_closed(&r, &w);
        }

        #[test]
        fn decide_is_consistent(r in small_r()) {
            prop_assume!(r.norm_sqr() < crate::exact::rat_int(1));
            match decide_finiteness(&r, DEFAULT_WITNESS_BUDGET) {
                Finiteness::Finite => {
                    for a in brunotte_witnesses(&r, DEFAULT_WITNESS_BUDGET).unwrap() {
                        let reached = matches!(orbit(&r, &a, DEFAULT_ORBIT_BUDGET), OrbitResult::ReachesZero { .. });
                        prop_assert!(reached);
                    }
                }
                Finiteness::Infinite(c) => {
                    prop_assert!(!c.is_trivial());
                    prop_assert!(c.is_cycle_of(&r));
                }
                Finiteness::Unknown => prop_assert!(false, "unknown inside the disk"),
            }
        }

        #[test]
        fn gns_reconstructs(a in -20i64..20, b in -20i64..20) {
            let beta = g(-1, 1);
            let x = g(a, b);
            let d = gns_digits(&beta, &x, 10_000).unwrap();
            prop_assert_eq!(gns_value(&beta, &d), x);
            prop_assert!(d.iter().all(|c| is_gns_digit(&beta, c)));
            prop_assert!(d.last().map_or(true, |c| !c.is_zero()));
        }
    }
}
