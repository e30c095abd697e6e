//! The star duality between tensor products of type C_n columns and
//! tensor products of columns on `1 < 1̄ < 2 < 2̄ < ... < m < m̄`, and King
//! tableaux.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::crystal::{highest_weight_vertices, Column, Letter, TensorElement};
use crate::error::{invalid, Error, Result};
use crate::partition::{hat, Partition, Weight};

/// `j` or `j̄`, ordered by `2j - 1` and `2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KingEntry {
    pub value: u32,
    pub barred: bool,
}

impl KingEntry {
    pub fn new(value: u32, barred: bool) -> Self {
        KingEntry { value, barred }
    }

    pub fn key(&self) -> u32 {
        2 * self.value - u32::from(!self.barred)
    }

    pub fn from_key(key: u32) -> Self {
        KingEntry { value: key.div_ceil(2), barred: key % 2 == 0 }
    }
}

impl Ord for KingEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for KingEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KingEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.barred { "b" } else { "" })
    }
}

impl FromStr for KingEntry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, barred) = match s.strip_suffix('b') {
            Some(d) => (d, true),
            None => (s, false),
        };
        match digits.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(KingEntry::new(v, barred)),
            _ => invalid(format!("bad King entry {s:?}")),
        }
    }
}

impl Serialize for KingEntry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for KingEntry {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `d_1 ⊗ ... ⊗ d_n`, each `d_i` strictly increasing; empty columns are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KingElement {
    pub m: usize,
    pub columns: Vec<Vec<KingEntry>>,
}

impl KingElement {
    pub fn new(columns: Vec<Vec<KingEntry>>, m: usize) -> Result<Self> {
        for c in &columns {
            if c.windows(2).any(|w| w[0] >= w[1]) {
                return invalid(format!("King column {} is not strictly increasing", c.iter().join(",")));
            }
            if c.iter().any(|e| e.value == 0 || e.value as usize > m) {
                return invalid(format!("King column {} has an entry outside 1..{m}", c.iter().join(",")));
            }
        }
        Ok(KingElement { m, columns })
    }

    pub fn parse(columns: &[&[&str]], m: usize) -> Result<Self> {
        let cols = columns
            .iter()
            .map(|c| c.iter().map(|s| s.parse()).collect::<Result<Vec<KingEntry>>>())
            .collect::<Result<Vec<_>>>()?;
        KingElement::new(cols, m)
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    /// Heights of the nonempty columns, which is the shape's conjugate when
    /// the element is a tableau.
    pub fn heights(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    /// Shape of the assembled tableau: row `r` has as many boxes as there
    /// are columns of height greater than `r`.
    pub fn shape(&self) -> Partition {
        let conj = Partition::from_unsorted(self.columns.iter().map(|c| c.len() as u32).collect());
        conj.conjugate()
    }

    /// Rows of the tableau, left to right in tensor order.
    pub fn rows(&self) -> Vec<Vec<KingEntry>> {
        let depth = self.columns.iter().map(Vec::len).max().unwrap_or(0);
        (0..depth).map(|r| self.columns.iter().filter_map(|c| c.get(r).copied()).collect()).collect()
    }

    pub fn rows_string(&self) -> String {
        self.rows().iter().map(|r| r.iter().join(" ")).join(" / ")
    }
}

impl fmt::Display for KingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.columns.iter().map(|c| format!("({})", c.iter().join(","))).join(" x "))
    }
}

/// `(c̃_1, c̃_1̄, ..., c̃_m, c̃_m̄)` with `c̃_j = {x : x̄ ∉ c_j}` and
/// `c̃_j̄ = {x : x ∈ c_j}`.
pub fn tilde_expand(b: &TensorElement) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(2 * b.len());
    for c in &b.columns {
        out.push((1..=b.n as u32).filter(|&x| !c.contains(-(x as i32))).collect());
        out.push((1..=b.n as u32).filter(|&x| c.contains(x as i32)).collect());
    }
    out
}

/// `b* = d_1 ⊗ ... ⊗ d_n` with `d_i = {x : i ∈ c̃_x}`.
pub fn star(b: &TensorElement) -> KingElement {
    let m = b.len();
    let columns = (1..=b.n as i32)
        .map(|i| {
            let mut d = Vec::new();
            for (j, c) in b.columns.iter().enumerate() {
                let j = j as u32 + 1;
                if !c.contains(-i) {
                    d.push(KingEntry::new(j, false));
                }
                if c.contains(i) {
                    d.push(KingEntry::new(j, true));
                }
            }
            d
        })
        .collect();
    KingElement { m, columns }
}

pub fn star_inverse(t: &KingElement, n: usize) -> Result<TensorElement> {
    if t.n() != n {
        return Err(Error::LengthMismatch { expected: n, got: t.n() });
    }
    let mut columns = Vec::with_capacity(t.m);
    for j in 1..=t.m as u32 {
        let mut letters: Vec<Letter> = Vec::new();
        for (x, d) in t.columns.iter().enumerate() {
            let x = x as i32 + 1;
            if !d.contains(&KingEntry::new(j, false)) {
                letters.push(-x);
            }
            if d.contains(&KingEntry::new(j, true)) {
                letters.push(x);
            }
        }
        columns.push(Column::from_set(letters)?);
    }
    TensorElement::new(columns, n)
}

/// `(a_m, ..., a_1)` with `a_j = #j - #j̄`.
pub fn king_weight(t: &KingElement) -> Weight {
    let mut w = vec![0i64; t.m];
    for e in t.columns.iter().flatten() {
        w[t.m - e.value as usize] += if e.barred { -1 } else { 1 };
    }
    Weight(w)
}

fn check_heights(t: &KingElement) -> Result<()> {
    if t.columns.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Err(Error::MalformedTableau(format!("column heights {:?} are not weakly decreasing", t.heights())));
    }
    Ok(())
}

fn rows_weakly_increase(t: &KingElement) -> bool {
    t.rows().iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
}

/// Semistandard in tensor order; false when the heights do not form a shape.
pub fn is_semistandard(t: &KingElement) -> bool {
    check_heights(t).is_ok() && rows_weakly_increase(t)
}

/// Semistandard with every entry of row `r` at least `r`.
pub fn is_king_tableau(t: &KingElement) -> Result<bool> {
    check_heights(t)?;
    if !rows_weakly_increase(t) {
        return Ok(false);
    }
    Ok(t.rows().iter().enumerate().all(|(r, row)| row.iter().all(|e| e.key() > 2 * r as u32)))
}

const KING_ENUMERATION_CAP: usize = 10_000_000;

/// King tableaux of the given shape and weight `(a_m, ..., a_1)`, as
/// elements with `n` columns (trailing columns empty).
pub fn enumerate_king_tableaux(shape: &Partition, weight: &Weight, m: usize, n: usize) -> Result<Vec<KingElement>> {
    if weight.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: weight.len() });
    }
    if !shape.fits(m, n) {
        return Err(Error::NotInRectangle { partition: shape.to_string(), rows: m, cols: n });
    }
    let rows = shape.trimmed().to_vec();
    let cells: Vec<(usize, usize)> = rows.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = rows.iter().map(|&len| vec![0; len as usize]).collect();
    // remaining[j-1] = weight still owed by letter j
    let mut remaining: Vec<i64> = (1..=m).map(|j| weight.coords()[m - j]).collect();
    let mut out = Vec::new();
    let mut visited = 0usize;
    fill(&cells, 0, &mut grid, &mut remaining, m, n, &mut out, &mut visited)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    cells: &[(usize, usize)],
    k: usize,
    grid: &mut Vec<Vec<u32>>,
    remaining: &mut Vec<i64>,
    m: usize,
    n: usize,
    out: &mut Vec<KingElement>,
    visited: &mut usize,
) -> Result<()> {
    *visited += 1;
    if *visited > KING_ENUMERATION_CAP {
        return Err(Error::IterationCap(KING_ENUMERATION_CAP));
    }
    let left = (cells.len() - k) as i64;
    if remaining.iter().map(|r| r.abs()).sum::<i64>() > left {
        return Ok(());
    }
    if k == cells.len() {
        if remaining.iter().all(|&r| r == 0) {
            let mut columns = vec![Vec::new(); n];
            for (r, row) in grid.iter().enumerate() {
                for (c, &key) in row.iter().enumerate() {
                    debug_assert_eq!(columns[c].len(), r);
                    columns[c].push(KingEntry::from_key(key));
                }
            }
            out.push(KingElement { m, columns });
        }
        return Ok(());
    }
    let (r, c) = cells[k];
    let mut lo = 2 * r as u32 + 1;
    if c > 0 {
        lo = lo.max(grid[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    for key in lo..=2 * m as u32 {
        let e = KingEntry::from_key(key);
        let idx = e.value as usize - 1;
        let delta = if e.barred { -1 } else { 1 };
        remaining[idx] -= delta;
        grid[r][c] = key;
        fill(cells, k + 1, grid, remaining, m, n, out, visited)?;
        remaining[idx] += delta;
    }
    grid[r][c] = 0;
    Ok(())
}

/// `(n - mu'_m, ..., n - mu'_1)`.
pub fn hat_composition(mu_prime: &[usize], n: usize) -> Weight {
    Weight(mu_prime.iter().rev().map(|&h| n as i64 - h as i64).collect())
}

/// Pairing produced by the star map on one cell.
#[derive(Clone, Debug, Serialize)]
pub struct HoweBijection {
    pub n: usize,
    pub m: usize,
    pub mu_prime: Vec<usize>,
    pub lambda: Partition,
    pub pairs: Vec<(TensorElement, KingElement)>,
    pub king_count: usize,
    pub failure: Option<String>,
}

impl HoweBijection {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that star maps the highest weight vertices of weight `lam` in
/// `B_{mu'}` bijectively onto King tableaux of shape `hat(lam)` and
/// weight `hat(mu')`.
pub fn verify_combinatorial_howe(n: usize, m: usize, mu_prime: &[usize], lam: &Partition) -> Result<HoweBijection> {
    if mu_prime.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: mu_prime.len() });
    }
    let shape = hat(lam, n, m)?;
    let weight = hat_composition(mu_prime, n);
    let hw = highest_weight_vertices(mu_prime, &lam.to_weight(n)?, n)?;
    let kings = enumerate_king_tableaux(&shape, &weight, m, n)?;
    let king_set: HashSet<&KingElement> = kings.iter().collect();
    let mut report = HoweBijection {
        n,
        m,
        mu_prime: mu_prime.to_vec(),
        lambda: lam.clone(),
        pairs: Vec::with_capacity(hw.len()),
        king_count: kings.len(),
        failure: None,
    };
    let mut seen = HashSet::new();
    for b in hw {
        let t = star(&b);
        let back = star_inverse(&t, n)?;
        let problem = if back != b {
            Some("star_inverse does not invert star")
        } else if !king_set.contains(&t) {
            Some("image is not a King tableau of the expected shape and weight")
        } else if !seen.insert(t.clone()) {
            Some("two elements share an image")
        } else {
            None
        };
        if let Some(p) = problem {
            report.failure = Some(format!("{p}: {b} -> {t}"));
            return Ok(report);
        }
        report.pairs.push((b, t));
    }
    if report.pairs.len() != kings.len() {
        if let Some(t) = kings.iter().find(|t| !seen.contains(*t)) {
            report.failure = Some(format!("King tableau {t} has no highest weight preimage"));
        }
    }
    Ok(report)
}
