//! Partitions, integer weights and multipartitions, with the shape maps
//! used throughout: conjugation, the rectangle complement `hat`, the
//! involution `I` and the stabilised family `mu[n]`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A weakly decreasing tuple of nonnegative integers.
///
/// The stored length is kept (trailing zeros are allowed) but comparison,
/// ordering and hashing only look at the nonzero parts.
#[derive(Clone, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("{parts:?} is not weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Parts including any stored trailing zeros.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trimmed().is_empty()
    }

    /// The nonzero parts.
    pub fn trimmed(&self) -> &[u32] {
        let k = self.parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        &self.parts[..k]
    }

    pub fn num_parts(&self) -> usize {
        self.trimmed().len()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True when the diagram fits in `rows` rows and `cols` columns.
    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.num_parts() <= rows && self.largest() as usize <= cols
    }

    /// Same partition stored with exactly `len` parts.
    pub fn padded(&self, len: usize) -> Result<Self> {
        let t = self.trimmed();
        if t.len() > len {
            return Err(Error::NotInRectangle {
                partition: self.to_string(),
                rows: len,
                cols: self.largest() as usize,
            });
        }
        let mut parts = t.to_vec();
        parts.resize(len, 0);
        Ok(Partition { parts })
    }

    pub fn to_weight(&self, len: usize) -> Result<Weight> {
        let p = self.padded(len)?;
        Ok(Weight::new(p.parts.iter().map(|&x| x as i64).collect()))
    }

    /// Transpose of the Young diagram, stored with `largest()` parts.
    pub fn conjugate(&self) -> Partition {
        let l = self.largest() as usize;
        let parts = (1..=l as u32)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// An integer vector of fixed length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    /// `(1, ..., 1)`.
    pub fn omega(len: usize) -> Self {
        Weight(vec![1; len])
    }

    /// `(m, m-1, ..., 1)`.
    pub fn rho_c(m: usize) -> Self {
        Weight((1..=m as i64).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    fn check_len(&self, other: &Weight) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }

    pub fn plus(&self, other: &Weight) -> Result<Weight> {
        self.check_len(other)?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn minus(&self, other: &Weight) -> Result<Weight> {
        self.check_len(other)?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Weakly decreasing and nonnegative.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().map_or(true, |&x| x >= 0)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_partition() {
            return invalid(format!("{:?} is not a partition", self.0));
        }
        Partition::new(self.0.iter().map(|&x| x as u32).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

/// A tuple of partitions attached to blocks of sizes `blocks`.
///
/// On the tensor side component `j` lies in `P_{n, m_j}` (parts bounded by
/// `m_j`); on the dual side it has at most `m_j` parts. The constructor only
/// checks that the lengths line up.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiPartition {
    pub components: Vec<Partition>,
    pub blocks: Vec<usize>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>, blocks: Vec<usize>) -> Result<Self> {
        if components.len() != blocks.len() {
            return Err(Error::LengthMismatch {
                expected: blocks.len(),
                got: components.len(),
            });
        }
        if blocks.contains(&0) {
            return invalid("block sizes must be positive");
        }
        Ok(MultiPartition { components, blocks })
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Concatenation of the components, each padded to its block size.
    pub fn flatten(&self) -> Result<Weight> {
        let mut out = Vec::with_capacity(self.rank());
        for (p, &b) in self.components.iter().zip(&self.blocks) {
            out.extend(p.to_weight(b)?.0);
        }
        Ok(Weight(out))
    }

    /// Concatenation of the conjugates, each padded to its block size.
    pub fn conjugate_flatten(&self) -> Result<Weight> {
        let mut out = Vec::with_capacity(self.rank());
        for (p, &b) in self.components.iter().zip(&self.blocks) {
            out.extend(p.conjugate().to_weight(b)?.0);
        }
        Ok(Weight(out))
    }

    /// Largest part over all components.
    pub fn largest(&self) -> u32 {
        self.components.iter().map(Partition::largest).max().unwrap_or(0)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.components.iter().join(","))
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// Conjugate of the complement of `p` in the `n x m` rectangle, with exactly
/// `m` coordinates.
pub fn hat(p: &Partition, n: usize, m: usize) -> Result<Partition> {
    if !p.fits(n, m) {
        return Err(Error::NotInRectangle {
            partition: p.to_string(),
            rows: n,
            cols: m,
        });
    }
    let c = p.conjugate().padded(m)?;
    let parts = (0..m).map(|i| n as u32 - c.parts[m - 1 - i]).collect();
    Partition::new(parts)
}

/// Componentwise hat (component `j` taken in `n x m_j`), components in
/// reverse order.
pub fn hat_multi(mu: &MultiPartition, n: usize) -> Result<MultiPartition> {
    let mut comps = Vec::with_capacity(mu.components.len());
    for (p, &b) in mu.components.iter().zip(&mu.blocks).rev() {
        comps.push(hat(p, n, b)?);
    }
    let blocks = mu.blocks.iter().rev().copied().collect();
    MultiPartition::new(comps, blocks)
}

/// `(w_1, ..., w_m) -> (-w_m, ..., -w_1)`.
pub fn involution_i(w: &Weight) -> Weight {
    Weight(w.0.iter().rev().map(|&x| -x).collect())
}

/// The unique `mu` with `hat_multi(mu, n) = mu_hat`.
pub fn mu_of_n(mu_hat: &MultiPartition, n: usize) -> Result<MultiPartition> {
    let top = mu_hat.largest() as usize;
    if n < top {
        return invalid(format!("n = {n} is below the largest part {top}"));
    }
    let mut comps = Vec::with_capacity(mu_hat.components.len());
    for (p, &b) in mu_hat.components.iter().zip(&mu_hat.blocks).rev() {
        comps.push(hat(p, b, n)?);
    }
    let blocks = mu_hat.blocks.iter().rev().copied().collect();
    MultiPartition::new(comps, blocks)
}

/// Drops every part equal to `bound`, padding with zeros.
pub fn reduce_column_full(p: &Partition, bound: u32) -> Partition {
    let mut parts: Vec<u32> = p.parts.iter().copied().filter(|&x| x != bound).collect();
    parts.resize(p.len(), 0);
    Partition { parts }
}

/// All partitions with at most `n` parts, each at most `m`, in
/// lexicographic order, stored with `n` parts.
pub fn enumerate_rectangle(n: usize, m: usize) -> Vec<Partition> {
    fn rec(pos: usize, n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if pos == n {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            rec(pos + 1, n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, m as u32, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every tuple of length `len` with entries in `0..=max`.
pub fn enumerate_compositions(len: usize, max: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    (0..len)
        .map(|_| 0..=max)
        .multi_cartesian_product()
        .collect()
}

/// All multipartitions whose component `j` lies in `P_{n, blocks[j]}`.
pub fn enumerate_multi_rectangle(n: usize, blocks: &[usize]) -> Vec<MultiPartition> {
    if blocks.is_empty() {
        return vec![MultiPartition {
            components: Vec::new(),
            blocks: Vec::new(),
        }];
    }
    blocks
        .iter()
        .map(|&b| enumerate_rectangle(n, b))
        .multi_cartesian_product()
        .map(|components| MultiPartition {
            components,
            blocks: blocks.to_vec(),
        })
        .collect()
}

/// Parses `"5,4,2,1"` or a JSON array.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.starts_with('[') {
        return serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()));
    }
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::InvalidInput(format!("bad partition {s:?}: {e}")))?;
    Partition::new(parts)
}

/// Parses `"2,-1,0"` or a JSON array.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let s = s.trim();
    if s.starts_with('[') {
        return serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()));
    }
    if s.is_empty() {
        return Ok(Weight::default());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Weight)
        .map_err(|e| Error::InvalidInput(format!("bad weight {s:?}: {e}")))
}
