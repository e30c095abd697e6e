//! Root data and Weyl groups for types A (realised on `Z^m`) and C.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Weight;

pub const CAP_A: usize = 10;
pub const CAP_C: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::C => "C",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "C" | "c" => Ok(Family::C),
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }
    }
}

/// `A` with rank `m` means `gl_m` acting on `Z^m`; `C` with rank `m` is `sp_2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystemId {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemId {
    pub fn a(rank: usize) -> Self {
        RootSystemId { family: Family::A, rank }
    }

    pub fn c(rank: usize) -> Self {
        RootSystemId { family: Family::C, rank }
    }

    pub fn check_cap(&self) -> Result<()> {
        let cap = match self.family {
            Family::A => CAP_A,
            Family::C => CAP_C,
        };
        if self.rank > cap {
            return Err(Error::RankCap { rank: self.rank, cap });
        }
        Ok(())
    }

    /// `(m, ..., 1)` for C, `(m-1, ..., 0)` for A.
    pub fn rho(&self) -> Weight {
        let m = self.rank as i64;
        match self.family {
            Family::C => Weight((1..=m).rev().collect()),
            Family::A => Weight((0..m).rev().collect()),
        }
    }
}

/// A signed permutation acting by `(w v)_k = signs[k] * v[perm[k]]`.
///
/// Type A elements have all signs `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct WeylElementRepr {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeylElementRepr {
            perm: self.perm.iter().map(|&p| p + 1).collect(),
            signs: self.signs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WeylElementRepr::deserialize(d)?;
        let perm = r
            .perm
            .iter()
            .map(|&p| p.checked_sub(1).ok_or_else(|| serde::de::Error::custom("perm is 1-based")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        WeylElement::new(perm, r.signs).map_err(serde::de::Error::custom)
    }
}

impl WeylElement {
    /// `perm` is 0-based.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let m = perm.len();
        if signs.len() != m {
            return Err(Error::LengthMismatch { expected: m, got: signs.len() });
        }
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || seen[p] {
                return Err(Error::InvalidInput(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidInput("signs must be +1 or -1".into()));
        }
        Ok(WeylElement { perm, signs })
    }

    pub fn identity(m: usize) -> Self {
        WeylElement {
            perm: (0..m).collect(),
            signs: vec![1; m],
        }
    }

    /// `s_i` for `1 <= i < m` swaps coordinates `i, i+1`; in type C, `s_m`
    /// negates the last coordinate.
    pub fn simple_reflection(id: RootSystemId, i: usize) -> Result<Self> {
        let m = id.rank;
        let mut w = WeylElement::identity(m);
        if i >= 1 && i < m {
            w.perm.swap(i - 1, i);
        } else if i == m && m > 0 && id.family == Family::C {
            w.signs[m - 1] = -1;
        } else {
            return Err(Error::InvalidInput(format!("no simple reflection s_{i} in {id:?}")));
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self) -> i64 {
        let mut visited = vec![false; self.perm.len()];
        let mut parity = 0usize;
        for start in 0..self.perm.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !visited[k] {
                visited[k] = true;
                k = self.perm[k];
                len += 1;
            }
            parity += len - 1;
        }
        let flips = self.signs.iter().filter(|&&s| s < 0).count();
        if (parity + flips) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Writes `w v` into `out` without allocating.
    pub fn act_into(&self, v: &[i64], out: &mut [i64]) {
        for k in 0..self.perm.len() {
            out[k] = self.signs[k] as i64 * v[self.perm[k]];
        }
    }

    pub fn act(&self, v: &Weight) -> Result<Weight> {
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), got: v.len() });
        }
        let mut out = vec![0; v.len()];
        self.act_into(v.coords(), &mut out);
        Ok(Weight(out))
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let m = self.rank();
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for k in 0..m {
            perm[k] = other.perm[self.perm[k]];
            signs[k] = self.signs[k] * other.signs[self.perm[k]];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let m = self.rank();
        let mut perm = vec![0; m];
        let mut signs = vec![1; m];
        for k in 0..m {
            perm[self.perm[k]] = k;
            signs[self.perm[k]] = self.signs[k];
        }
        WeylElement { perm, signs }
    }
}

/// Streams the Weyl group: `S_m` for A, signed permutations for C.
pub fn enumerate_weyl(id: RootSystemId) -> Result<impl Iterator<Item = WeylElement>> {
    id.check_cap()?;
    let m = id.rank;
    let sign_masks: u32 = match id.family {
        Family::A => 1,
        Family::C => 1 << m,
    };
    Ok((0..m).permutations(m).flat_map(move |perm| {
        (0..sign_masks).map(move |mask| WeylElement {
            perm: perm.clone(),
            signs: (0..m).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect(),
        })
    }))
}

/// Cached list of group elements with their signs, for repeated Weyl sums.
pub fn weyl_elements(id: RootSystemId) -> Result<Arc<Vec<(WeylElement, i64)>>> {
    static CACHE: OnceLock<Mutex<HashMap<RootSystemId, Arc<Vec<(WeylElement, i64)>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("weyl cache poisoned").get(&id) {
        return Ok(v.clone());
    }
    let list: Vec<_> = enumerate_weyl(id)?.map(|w| {
        let s = w.sign();
        (w, s)
    }).collect();
    let list = Arc::new(list);
    cache.lock().expect("weyl cache poisoned").insert(id, list.clone());
    Ok(list)
}

pub fn sign(w: &WeylElement) -> i64 {
    w.sign()
}

pub fn act(w: &WeylElement, v: &Weight) -> Result<Weight> {
    w.act(v)
}

/// `w(lam + rho) - rho`.
pub fn dot_rho(w: &WeylElement, lam: &Weight, id: RootSystemId) -> Result<Weight> {
    let rho = id.rho();
    w.act(&lam.plus(&rho)?)?.minus(&rho)
}

/// `(-n-1, ..., -n-m)`.
pub fn delta_c(n: usize, m: usize) -> Weight {
    Weight((1..=m as i64).map(|i| -(n as i64) - i).collect())
}

/// `w(beta + delta) - delta` with `delta = (-n-1, ..., -n-m)`.
pub fn dot_delta_c(w: &WeylElement, beta: &Weight, n: usize, m: usize) -> Result<Weight> {
    if beta.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: beta.len() });
    }
    let delta = delta_c(n, m);
    w.act(&beta.plus(&delta)?)?.minus(&delta)
}

/// Positive roots: `e_i - e_j` (i<j), then for C also `e_i + e_j` (i<j)
/// and `2 e_i`.
pub fn positive_roots(id: RootSystemId) -> Vec<Weight> {
    let m = id.rank;
    let unit = |i: usize, j: usize, a: i64, b: i64| {
        let mut v = vec![0; m];
        v[i] += a;
        v[j] += b;
        Weight(v)
    };
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            out.push(unit(i, j, 1, -1));
        }
    }
    if id.family == Family::C {
        for i in 0..m {
            for j in i + 1..m {
                out.push(unit(i, j, 1, 1));
            }
        }
        for i in 0..m {
            out.push(unit(i, i, 1, 1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_weyl(RootSystemId::c(2)).unwrap().count(), 8);
        assert_eq!(enumerate_weyl(RootSystemId::a(3)).unwrap().count(), 6);
        assert_eq!(enumerate_weyl(RootSystemId::c(3)).unwrap().count(), 48);
        let distinct: HashSet<_> = enumerate_weyl(RootSystemId::c(3)).unwrap().collect();
        assert_eq!(distinct.len(), 48);
        assert!(enumerate_weyl(RootSystemId::c(9)).is_err());
        assert!(enumerate_weyl(RootSystemId::a(11)).is_err());
    }

    #[test]
    fn sign_sums_vanish() {
        for id in [RootSystemId::a(2), RootSystemId::a(4), RootSystemId::c(1), RootSystemId::c(3)] {
            let s: i64 = enumerate_weyl(id).unwrap().map(|w| w.sign()).sum();
            assert_eq!(s, 0, "{id:?}");
        }
    }

    #[test]
    fn signs_of_generators() {
        let id = RootSystemId::c(3);
        assert_eq!(WeylElement::identity(3).sign(), 1);
        for i in 1..=3 {
            assert_eq!(WeylElement::simple_reflection(id, i).unwrap().sign(), -1);
        }
        assert!(WeylElement::simple_reflection(RootSystemId::a(3), 3).is_err());
    }

    #[test]
    fn action_examples() {
        let id = RootSystemId::c(2);
        let s1 = WeylElement::simple_reflection(id, 1).unwrap();
        let s2 = WeylElement::simple_reflection(id, 2).unwrap();
        let v = Weight(vec![3, 1]);
        assert_eq!(s1.act(&v).unwrap().0, vec![1, 3]);
        assert_eq!(s2.act(&v).unwrap().0, vec![3, -1]);
        assert_eq!(WeylElement::identity(2).act(&v).unwrap(), v);
        assert!(s1.act(&Weight(vec![1])).is_err());
    }

    #[test]
    fn dot_rho_example() {
        let id = RootSystemId::c(2);
        let s1 = WeylElement::simple_reflection(id, 1).unwrap();
        assert_eq!(dot_rho(&s1, &Weight::zero(2), id).unwrap().0, vec![-1, 1]);
        let lam = Weight(vec![2, 0]);
        assert_eq!(dot_rho(&WeylElement::identity(2), &lam, id).unwrap(), lam);
    }

    #[test]
    fn dot_actions_are_actions() {
        for id in [RootSystemId::c(3), RootSystemId::a(3)] {
            let elems: Vec<_> = enumerate_weyl(id).unwrap().collect();
            let lam = Weight(vec![3, -1, 2]);
            for a in elems.iter().step_by(5) {
                for b in elems.iter().step_by(7) {
                    let lhs = dot_rho(a, &dot_rho(b, &lam, id).unwrap(), id).unwrap();
                    let rhs = dot_rho(&a.compose(b), &lam, id).unwrap();
                    assert_eq!(lhs, rhs);
                    let lhs = dot_delta_c(a, &dot_delta_c(b, &lam, 2, 3).unwrap(), 2, 3).unwrap();
                    let rhs = dot_delta_c(&a.compose(b), &lam, 2, 3).unwrap();
                    assert_eq!(lhs, rhs);
                    assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
                }
                assert_eq!(a.compose(&a.inverse()), WeylElement::identity(3));
            }
        }
    }

    #[test]
    fn dot_delta_generators() {
        let (n, m) = (3, 3);
        let id = RootSystemId::c(m);
        let beta = Weight(vec![4, -1, 2]);
        let s1 = WeylElement::simple_reflection(id, 1).unwrap();
        assert_eq!(dot_delta_c(&s1, &beta, n, m).unwrap().0, vec![-2, 5, 2]);
        let s3 = WeylElement::simple_reflection(id, 3).unwrap();
        let r = dot_delta_c(&s3, &beta, n, m).unwrap();
        assert_eq!(r.0[2], -2 + 2 * n as i64 + 2 * m as i64);
        assert_eq!(&r.0[..2], &[4, -1]);
        assert_eq!(dot_delta_c(&WeylElement::identity(3), &beta, n, m).unwrap(), beta);
    }

    #[test]
    fn roots() {
        assert_eq!(positive_roots(RootSystemId::a(2)), vec![Weight(vec![1, -1])]);
        let c2: HashSet<_> = positive_roots(RootSystemId::c(2)).into_iter().collect();
        let expect: HashSet<_> = [vec![1, -1], vec![1, 1], vec![2, 0], vec![0, 2]]
            .into_iter()
            .map(Weight)
            .collect();
        assert_eq!(c2, expect);
        for m in 1..6 {
            assert_eq!(positive_roots(RootSystemId::c(m)).len(), m * m);
        }
    }

    #[test]
    fn json_shape() {
        let w = WeylElement::new(vec![1, 0], vec![1, -1]).unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"perm":[2,1],"signs":[1,-1]}"#);
        let back: WeylElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<WeylElement>(r#"{"perm":[1,1],"signs":[1,1]}"#).is_err());
    }
}
