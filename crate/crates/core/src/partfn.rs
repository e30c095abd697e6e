//! Kostant-type partition functions, weight multiplicities and branching
//! coefficients for block-diagonal subalgebras of `sp_2m`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partition::{involution_i, MultiPartition, Partition, Weight};
use crate::weyl::{positive_roots, weyl_elements, Family, RootSystemId};

/// A sequence of block types and sizes `(X_1, k_1), ..., (X_r, k_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramSpec {
    pub symbols: Vec<Family>,
    pub sizes: Vec<usize>,
}

impl DiagramSpec {
    pub fn new(symbols: Vec<Family>, sizes: Vec<usize>) -> Result<Self> {
        if symbols.len() != sizes.len() {
            return Err(Error::LengthMismatch { expected: symbols.len(), got: sizes.len() });
        }
        if sizes.contains(&0) {
            return invalid("block sizes must be positive");
        }
        Ok(DiagramSpec { symbols, sizes })
    }

    pub fn rank(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Blocks in reverse order.
    pub fn reversed(&self) -> DiagramSpec {
        DiagramSpec {
            symbols: self.symbols.iter().rev().copied().collect(),
            sizes: self.sizes.iter().rev().copied().collect(),
        }
    }

    /// `(start, end, family)` index ranges of the blocks.
    pub fn block_ranges(&self) -> Vec<(usize, usize, Family)> {
        let mut start = 0;
        self.symbols
            .iter()
            .zip(&self.sizes)
            .map(|(&x, &k)| {
                let r = (start, start + k, x);
                start += k;
                r
            })
            .collect()
    }

    /// True when the root lies in the root system of some block.
    pub fn contains_root(&self, root: &Weight) -> bool {
        let support: Vec<usize> = (0..root.len()).filter(|&i| root.0[i] != 0).collect();
        self.block_ranges().iter().any(|&(a, b, x)| {
            if !support.iter().all(|&i| a <= i && i < b) {
                return false;
            }
            // A blocks only contain differences e_i - e_j
            x == Family::C || root.0.iter().sum::<i64>() == 0
        })
    }

    /// Positive roots of `C_m` outside the block subsystem.
    pub fn complement_roots(&self) -> Vec<Weight> {
        positive_roots(RootSystemId::c(self.rank()))
            .into_iter()
            .filter(|r| !self.contains_root(r))
            .collect()
    }

    /// Positive roots of the block subsystem.
    pub fn block_roots(&self) -> Vec<Weight> {
        positive_roots(RootSystemId::c(self.rank()))
            .into_iter()
            .filter(|r| self.contains_root(r))
            .collect()
    }
}

impl fmt::Display for DiagramSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().zip(&self.sizes).map(|(x, k)| format!("{x}{k}")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl std::str::FromStr for DiagramSpec {
    type Err = Error;

    /// Parses `"C2+A1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut symbols = Vec::new();
        let mut sizes = Vec::new();
        for block in s.split('+').map(str::trim) {
            let bad = || Error::InvalidInput(format!("bad block {block:?} in {s:?}"));
            let mut chars = block.chars();
            let x = chars.next().ok_or_else(bad)?;
            symbols.push(x.to_string().parse()?);
            sizes.push(chars.as_str().parse().map_err(|_| bad())?);
        }
        DiagramSpec::new(symbols, sizes)
    }
}

/// Memoised counter of decompositions `beta = sum c_a * a` over a fixed
/// root list. Reusing one counter across queries shares the memo.
pub struct KostantCounter {
    roots: Vec<Vec<i64>>,
    heights: Vec<i64>,
    functional: Vec<i64>,
    prefix_cone: bool,
    memo: HashMap<(usize, Vec<i64>), i64>,
}

impl KostantCounter {
    /// Every root must be positive under `(m, m-1, ..., 1)`.
    pub fn new(roots: &[Weight]) -> Result<Self> {
        let m = roots.first().map_or(0, Weight::len);
        if let Some(r) = roots.iter().find(|r| r.len() != m) {
            return Err(Error::LengthMismatch { expected: m, got: r.len() });
        }
        let functional: Vec<i64> = (1..=m as i64).rev().collect();
        let mut heights = Vec::with_capacity(roots.len());
        for r in roots {
            let h: i64 = r.0.iter().zip(&functional).map(|(a, b)| a * b).sum();
            if h <= 0 {
                return invalid(format!("root {r} is not positive"));
            }
            heights.push(h);
        }
        let prefix_cone = roots.iter().all(|r| {
            let mut acc = 0;
            r.0.iter().all(|&x| {
                acc += x;
                acc >= 0
            })
        });
        Ok(KostantCounter {
            roots: roots.iter().map(|r| r.0.clone()).collect(),
            heights,
            functional,
            prefix_cone,
            memo: HashMap::new(),
        })
    }

    pub fn count(&mut self, beta: &[i64]) -> Result<i64> {
        if self.roots.is_empty() {
            return Ok(beta.iter().all(|&x| x == 0) as i64);
        }
        if beta.len() != self.functional.len() {
            return Err(Error::LengthMismatch { expected: self.functional.len(), got: beta.len() });
        }
        self.count_from(0, beta)
    }

    fn rejects(&self, beta: &[i64]) -> bool {
        let h: i64 = beta.iter().zip(&self.functional).map(|(a, b)| a * b).sum();
        if h < 0 {
            return true;
        }
        if self.prefix_cone {
            let mut acc = 0;
            for &x in beta {
                acc += x;
                if acc < 0 {
                    return true;
                }
            }
        }
        false
    }

    fn count_from(&mut self, k: usize, beta: &[i64]) -> Result<i64> {
        if beta.iter().all(|&x| x == 0) {
            return Ok(1);
        }
        if k == self.roots.len() || self.rejects(beta) {
            return Ok(0);
        }
        if let Some(&v) = self.memo.get(&(k, beta.to_vec())) {
            return Ok(v);
        }
        let h: i64 = beta.iter().zip(&self.functional).map(|(a, b)| a * b).sum();
        let max_c = h / self.heights[k];
        let mut total: i64 = 0;
        let mut rest = beta.to_vec();
        for c in 0..=max_c {
            if c > 0 {
                for (x, r) in rest.iter_mut().zip(&self.roots[k]) {
                    *x -= r;
                }
            }
            let sub = self.count_from(k + 1, &rest)?;
            total = total.checked_add(sub).ok_or(Error::Overflow("partition function"))?;
        }
        self.memo.insert((k, beta.to_vec()), total);
        Ok(total)
    }
}

pub fn kostant_partition(roots: &[Weight], beta: &Weight) -> Result<i64> {
    if roots.is_empty() {
        return Ok(beta.is_zero() as i64);
    }
    KostantCounter::new(roots)?.count(beta.coords())
}

/// `P(I(beta))` over the positive roots of `C_m`.
pub fn twisted_partition_c(beta: &Weight, m: usize) -> Result<i64> {
    if beta.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: beta.len() });
    }
    kostant_partition(&positive_roots(RootSystemId::c(m)), &involution_i(beta))
}

/// Partition function over the `C_m` positive roots outside the blocks.
pub fn restricted_partition(spec: &DiagramSpec, beta: &Weight) -> Result<i64> {
    if beta.len() != spec.rank() {
        return Err(Error::LengthMismatch { expected: spec.rank(), got: beta.len() });
    }
    kostant_partition(&spec.complement_roots(), beta)
}

/// Alternating Weyl sum `sum_w sign(w) P(w(lam + rho) - (mu + rho))`.
fn alternating_sum(counter: &mut KostantCounter, id: RootSystemId, lam: &[i64], mu: &[i64]) -> Result<i64> {
    let rho = id.rho();
    let m = id.rank;
    let shifted: Vec<i64> = lam.iter().zip(rho.coords()).map(|(a, b)| a + b).collect();
    let target: Vec<i64> = mu.iter().zip(rho.coords()).map(|(a, b)| a + b).collect();
    let mut image = vec![0; m];
    let mut total: i64 = 0;
    for (w, s) in weyl_elements(id)?.iter() {
        w.act_into(&shifted, &mut image);
        for (x, t) in image.iter_mut().zip(&target) {
            *x -= t;
        }
        let p = counter.count(&image)?;
        if p != 0 {
            let term = p.checked_mul(*s).ok_or(Error::Overflow("weyl sum"))?;
            total = total.checked_add(term).ok_or(Error::Overflow("weyl sum"))?;
        }
    }
    Ok(total)
}

/// Reusable weight-multiplicity evaluator for one root system.
pub struct MultiplicityEngine {
    id: RootSystemId,
    counter: KostantCounter,
}

impl MultiplicityEngine {
    pub fn new(id: RootSystemId) -> Result<Self> {
        id.check_cap()?;
        Ok(MultiplicityEngine {
            id,
            counter: KostantCounter::new(&positive_roots(id))?,
        })
    }

    pub fn multiplicity(&mut self, lam: &Partition, mu: &Weight) -> Result<i64> {
        let m = self.id.rank;
        if mu.len() != m {
            return Err(Error::LengthMismatch { expected: m, got: mu.len() });
        }
        let lam = lam.to_weight(m)?;
        let k = alternating_sum(&mut self.counter, self.id, lam.coords(), mu.coords())?;
        if k < 0 {
            return Err(Error::NegativeMultiplicity { mult: k, at: format!("K[{lam},{mu}]") });
        }
        Ok(k)
    }
}

pub fn weight_multiplicity(id: RootSystemId, lam: &Partition, mu: &Weight) -> Result<i64> {
    MultiplicityEngine::new(id)?.multiplicity(lam, mu)
}

/// Reusable branching evaluator for one block decomposition of `C_m`.
pub struct BranchingEngine {
    spec: DiagramSpec,
    counter: KostantCounter,
}

impl BranchingEngine {
    pub fn new(spec: &DiagramSpec) -> Result<Self> {
        RootSystemId::c(spec.rank()).check_cap()?;
        let roots = spec.complement_roots();
        let counter = if roots.is_empty() {
            KostantCounter {
                roots: Vec::new(),
                heights: Vec::new(),
                functional: (1..=spec.rank() as i64).rev().collect(),
                prefix_cone: true,
                memo: HashMap::new(),
            }
        } else {
            KostantCounter::new(&roots)?
        };
        Ok(BranchingEngine { spec: spec.clone(), counter })
    }

    pub fn spec(&self) -> &DiagramSpec {
        &self.spec
    }

    /// `[V(kappa) : V(nu)]` with `nu` a dominant weight of the block algebra,
    /// given as one partition per block.
    pub fn coefficient(&mut self, kappa: &Partition, nu: &MultiPartition) -> Result<i64> {
        if nu.blocks != self.spec.sizes {
            return invalid(format!("blocks {:?} do not match {}", nu.blocks, self.spec));
        }
        let m = self.spec.rank();
        let k = kappa.to_weight(m)?;
        let v = nu.flatten()?;
        let c = alternating_sum(&mut self.counter, RootSystemId::c(m), k.coords(), v.coords())?;
        if c < 0 {
            return Err(Error::NegativeMultiplicity { mult: c, at: format!("[{k}:{v}]") });
        }
        Ok(c)
    }
}

pub fn branching_coefficient(kappa: &Partition, spec: &DiagramSpec, nu: &MultiPartition) -> Result<i64> {
    BranchingEngine::new(spec)?.coefficient(kappa, nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Tally of `sum c_a * a` over all coefficient vectors with entries in
    /// `0..=bound`.
    fn brute_table(roots: &[Weight], bound: i64) -> HashMap<Vec<i64>, i64> {
        let m = roots[0].len();
        let mut table = HashMap::new();
        for cs in (0..roots.len()).map(|_| 0..=bound).multi_cartesian_product() {
            let mut v = vec![0; m];
            for (c, r) in cs.iter().zip(roots) {
                for (x, y) in v.iter_mut().zip(&r.0) {
                    *x += c * y;
                }
            }
            *table.entry(v).or_insert(0) += 1;
        }
        table
    }

    #[test]
    fn spec_parses_its_display() {
        let spec: DiagramSpec = "C2+A1".parse().unwrap();
        assert_eq!(spec, DiagramSpec::new(vec![Family::C, Family::A], vec![2, 1]).unwrap());
        assert_eq!(spec.to_string().parse::<DiagramSpec>().unwrap(), spec);
        for bad in ["", "C", "B2", "C0", "C2+"] {
            assert!(bad.parse::<DiagramSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn small_values() {
        let c2 = positive_roots(RootSystemId::c(2));
        assert_eq!(kostant_partition(&c2, &w(&[0, 0])).unwrap(), 1);
        assert_eq!(brute_table(&c2, 4)[&vec![2, 0]], 3);
        assert_eq!(kostant_partition(&c2, &w(&[2, 0])).unwrap(), 3);
        assert_eq!(kostant_partition(&c2, &w(&[-1, 0])).unwrap(), 0);
        assert_eq!(twisted_partition_c(&w(&[0, 0]), 2).unwrap(), 1);
        assert_eq!(twisted_partition_c(&w(&[0, -2]), 2).unwrap(), 3);
    }

    #[test]
    fn matches_brute_force_on_box() {
        for id in [RootSystemId::c(1), RootSystemId::c(2), RootSystemId::a(3), RootSystemId::c(3)] {
            let roots = positive_roots(id);
            let mut counter = KostantCounter::new(&roots).unwrap();
            let m = id.rank;
            // every root has nonnegative prefix sums, so a coefficient is at
            // most a prefix sum of beta; these bounds cover the boxes used
            let (range, bound): (Vec<i64>, i64) = if m == 3 { ((-2..=2).collect(), 4) } else { ((-4..=4).collect(), 8) };
            let table = brute_table(&roots, bound);
            for beta in (0..m).map(|_| range.iter().copied()).multi_cartesian_product() {
                let expect = table.get(&beta).copied().unwrap_or(0);
                assert_eq!(counter.count(&beta).unwrap(), expect, "{id:?} {beta:?}");
            }
        }
    }

    #[test]
    fn twisted_equals_involution() {
        for beta in (0..2).map(|_| -3i64..=3).multi_cartesian_product() {
            let beta = Weight(beta);
            let direct = kostant_partition(&positive_roots(RootSystemId::c(2)), &involution_i(&beta)).unwrap();
            assert_eq!(twisted_partition_c(&beta, 2).unwrap(), direct);
        }
    }

    #[test]
    fn restricted_examples() {
        let full_c = DiagramSpec::new(vec![Family::C], vec![3]).unwrap();
        assert!(full_c.complement_roots().is_empty());
        assert_eq!(restricted_partition(&full_c, &w(&[0, 0, 0])).unwrap(), 1);
        assert_eq!(restricted_partition(&full_c, &w(&[1, 0, 0])).unwrap(), 0);
        let a1 = DiagramSpec::new(vec![Family::A], vec![1]).unwrap();
        assert_eq!(restricted_partition(&a1, &w(&[2])).unwrap(), 1);
        assert_eq!(restricted_partition(&a1, &w(&[1])).unwrap(), 0);
        let a2 = DiagramSpec::new(vec![Family::A], vec![2]).unwrap();
        // complement of the gl_2 roots: e1+e2, 2e1, 2e2
        assert_eq!(a2.complement_roots().len(), 3);
        let ca = DiagramSpec::new(vec![Family::C, Family::A], vec![2, 1]).unwrap();
        assert_eq!(ca.block_roots().len(), 4);
        assert_eq!(ca.complement_roots().len(), 5);
        assert_eq!(restricted_partition(&ca, &w(&[-1, 0, 0])).unwrap(), 0);
    }

    #[test]
    fn multiplicities_c2() {
        let id = RootSystemId::c(2);
        assert_eq!(weight_multiplicity(id, &p(&[2, 0]), &w(&[0, 0])).unwrap(), 2);
        assert_eq!(weight_multiplicity(id, &p(&[1, 1]), &w(&[0, 0])).unwrap(), 1);
        assert_eq!(weight_multiplicity(id, &p(&[2, 1]), &w(&[2, 1])).unwrap(), 1);
        assert_eq!(weight_multiplicity(id, &p(&[2, 1]), &w(&[3, 0])).unwrap(), 0);
    }

    #[test]
    fn multiplicities_are_weyl_invariant() {
        let id = RootSystemId::c(3);
        let mut eng = MultiplicityEngine::new(id).unwrap();
        let lam = p(&[2, 1, 1]);
        for mu in (0..3).map(|_| -2i64..=2).multi_cartesian_product() {
            let mu = Weight(mu);
            let k = eng.multiplicity(&lam, &mu).unwrap();
            for (g, _) in weyl_elements(id).unwrap().iter().step_by(7) {
                assert_eq!(eng.multiplicity(&lam, &g.act(&mu).unwrap()).unwrap(), k);
            }
        }
    }

    #[test]
    fn gl_multiplicities_are_kostka_numbers() {
        let id = RootSystemId::a(3);
        // K_{(2,1),(1,1,1)} = 2, K_{(2,1),(2,1,0)} = 1, K_{(2,1),(1,2,0)} = 1
        assert_eq!(weight_multiplicity(id, &p(&[2, 1]), &w(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(weight_multiplicity(id, &p(&[2, 1]), &w(&[2, 1, 0])).unwrap(), 1);
        assert_eq!(weight_multiplicity(id, &p(&[2, 1]), &w(&[1, 2, 0])).unwrap(), 1);
        assert_eq!(weight_multiplicity(id, &p(&[2, 1]), &w(&[3, 0, 0])).unwrap(), 0);
        assert_eq!(weight_multiplicity(id, &p(&[2, 1]), &w(&[1, 1, 0])).unwrap(), 0);
    }

    #[test]
    fn branching_examples() {
        let full = DiagramSpec::new(vec![Family::C], vec![2]).unwrap();
        let mut eng = BranchingEngine::new(&full).unwrap();
        for kappa in crate::partition::enumerate_rectangle(2, 2) {
            for nu in crate::partition::enumerate_rectangle(2, 2) {
                let nu_m = MultiPartition::new(vec![nu.clone()], vec![2]).unwrap();
                assert_eq!(eng.coefficient(&kappa, &nu_m).unwrap(), (kappa == nu) as i64);
            }
        }
        let a1 = DiagramSpec::new(vec![Family::A], vec![1]).unwrap();
        let mut eng = BranchingEngine::new(&a1).unwrap();
        for k in 0..6u32 {
            let nu = MultiPartition::new(vec![p(&[k])], vec![1]).unwrap();
            assert_eq!(eng.coefficient(&p(&[k]), &nu).unwrap(), 1);
            // weights k-2, k-4, ... also occur once
            if k >= 2 {
                let nu = MultiPartition::new(vec![p(&[k - 2])], vec![1]).unwrap();
                assert_eq!(eng.coefficient(&p(&[k]), &nu).unwrap(), 1);
            }
            let nu = MultiPartition::new(vec![p(&[k + 1])], vec![1]).unwrap();
            assert_eq!(eng.coefficient(&p(&[k]), &nu).unwrap(), 0);
        }
    }

    #[test]
    fn spec_json() {
        let s = DiagramSpec::new(vec![Family::C, Family::A], vec![2, 1]).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"symbols":["C","A"],"sizes":[2,1]}"#);
        assert_eq!(serde_json::from_str::<DiagramSpec>(&j).unwrap(), s);
    }
}
