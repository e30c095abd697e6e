//! The type A_{2m-1} crystal on King elements, the operators it induces
//! on tensor products of type C columns through the star duality, column
//! jeu de taquin on bar complements, and the two charge statistics.

use std::fmt;

use serde::Serialize;

use crate::crystal::{bracket, Column, Letter, Positions, TensorElement};
use crate::duality::{king_weight, star, star_inverse, KingElement, KingEntry};
use crate::error::{invalid, Error, Result};

/// Index of an A_{2m-1} operator: `j` acts `j -> j̄`, `j̄` acts `j̄ -> j+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KingIndex {
    Unbarred(u32),
    Barred(u32),
}

impl fmt::Display for KingIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KingIndex::Unbarred(j) => write!(f, "{j}"),
            KingIndex::Barred(j) => write!(f, "{j}b"),
        }
    }
}

impl std::str::FromStr for KingIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let e: KingEntry = s.parse()?;
        Ok(if e.barred { KingIndex::Barred(e.value) } else { KingIndex::Unbarred(e.value) })
    }
}

impl KingIndex {
    fn valid(&self, m: usize) -> bool {
        match *self {
            KingIndex::Unbarred(j) => j >= 1 && j as usize <= m,
            KingIndex::Barred(j) => j >= 1 && (j as usize) < m,
        }
    }

    /// `(plus letter, minus letter)`.
    fn letters(&self) -> (KingEntry, KingEntry) {
        match *self {
            KingIndex::Unbarred(j) => (KingEntry::new(j, false), KingEntry::new(j, true)),
            KingIndex::Barred(j) => (KingEntry::new(j, true), KingEntry::new(j + 1, false)),
        }
    }
}

/// Columns right to left, each top to bottom.
fn king_positions(t: &KingElement) -> impl Iterator<Item = ((usize, usize), KingEntry)> + '_ {
    t.columns.iter().enumerate().rev().flat_map(|(c, col)| col.iter().enumerate().map(move |(r, &e)| ((c, r), e)))
}

fn king_free(idx: KingIndex, t: &KingElement) -> (Positions, Positions) {
    let (plus, minus) = idx.letters();
    bracket(king_positions(t).filter_map(|(pos, e)| {
        if e == plus {
            Some((pos, true))
        } else if e == minus {
            Some((pos, false))
        } else {
            None
        }
    }))
}

pub fn king_f(idx: KingIndex, t: &KingElement) -> Option<KingElement> {
    if !idx.valid(t.m) {
        return None;
    }
    let (_, plus) = king_free(idx, t);
    let (c, r) = *plus.first()?;
    let mut out = t.clone();
    out.columns[c][r] = idx.letters().1;
    Some(out)
}

pub fn king_e(idx: KingIndex, t: &KingElement) -> Option<KingElement> {
    if !idx.valid(t.m) {
        return None;
    }
    let (minus, _) = king_free(idx, t);
    let (c, r) = *minus.last()?;
    let mut out = t.clone();
    out.columns[c][r] = idx.letters().0;
    Some(out)
}

/// Maximal `k` with `king_e` applicable `k` times.
pub fn epsilon_string(idx: KingIndex, t: &KingElement) -> usize {
    if !idx.valid(t.m) {
        return 0;
    }
    king_free(idx, t).0.len()
}

pub fn phi_string(idx: KingIndex, t: &KingElement) -> usize {
    if !idx.valid(t.m) {
        return 0;
    }
    king_free(idx, t).1.len()
}

/// Applies every `f_j` (unbarred `j`) as long as possible.
pub fn to_lowest(t: &KingElement) -> KingElement {
    let mut out = t.clone();
    for j in 1..=t.m as u32 {
        while let Some(next) = king_f(KingIndex::Unbarred(j), &out) {
            out = next;
        }
    }
    out
}

fn transport(b: &TensorElement, op: impl Fn(&KingElement) -> Option<KingElement>) -> Option<TensorElement> {
    let t = op(&star(b))?;
    Some(star_inverse(&t, b.n).expect("star image has n columns"))
}

/// Contraction of column `j`.
pub fn kappa(j: u32, b: &TensorElement) -> Option<TensorElement> {
    transport(b, |t| king_e(KingIndex::Unbarred(j), t))
}

/// Dilatation of column `j`, the inverse of `kappa`.
pub fn dilate(j: u32, b: &TensorElement) -> Option<TensorElement> {
    transport(b, |t| king_f(KingIndex::Unbarred(j), t))
}

/// The operator transported from `e_j̄`.
pub fn kappa_bar(j: u32, b: &TensorElement) -> Option<TensorElement> {
    transport(b, |t| king_e(KingIndex::Barred(j), t))
}

/// `(c̄_1, c̄_1̄, ..., c̄_m, c̄_m̄)`: the barred letters of `c_j`, and the
/// bars of the unbarred letters missing from `c_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarComplement {
    pub n: usize,
    pub columns: Vec<Vec<Letter>>,
}

pub fn bar_complement(b: &TensorElement) -> BarComplement {
    let mut columns = Vec::with_capacity(2 * b.len());
    for c in &b.columns {
        columns.push(c.entries().iter().copied().filter(|&x| x < 0).collect());
        columns.push((1..=b.n as i32).rev().filter(|&x| !c.contains(x)).map(|x| -x).collect());
    }
    BarComplement { n: b.n, columns }
}

pub fn from_bar_complement(bc: &BarComplement) -> Result<TensorElement> {
    if bc.columns.len() % 2 != 0 {
        return invalid("bar complement needs an even number of columns");
    }
    let n = bc.n as i32;
    let mut columns = Vec::with_capacity(bc.columns.len() / 2);
    for pair in bc.columns.chunks(2) {
        if pair.iter().flatten().any(|&x| x >= 0 || x < -n) {
            return invalid("bar complement columns hold barred letters only");
        }
        let mut letters = pair[0].clone();
        letters.extend((1..=n).filter(|&x| !pair[1].contains(&-x)));
        columns.push(Column::from_set(letters)?);
    }
    TensorElement::new(columns, bc.n)
}

/// Smallest `l` such that `left`, pushed down by `l` rows, sits to the
/// left of `right` as a skew tableau (rows weakly increasing).
pub fn min_skew_offset(left: &[Letter], right: &[Letter]) -> usize {
    let fits = |l: usize| {
        l + left.len() >= right.len() && left.iter().enumerate().all(|(k, &x)| right.get(k + l).map_or(true, |&y| x <= y))
    };
    (0..).find(|&l| fits(l)).expect("large offsets always fit")
}

/// One slide into the top inner corner of the skew pair; returns the new
/// `(left, right)`.
fn slide(left: &[Letter], right: &[Letter]) -> Option<(Vec<Letter>, Vec<Letter>)> {
    let l = min_skew_offset(left, right);
    if l == 0 {
        return None;
    }
    // the hole starts at row l-1 of the left column; left[k] sits at row l+k
    let mut hole = l - 1;
    loop {
        let below = left.get(hole + 1 - l).copied();
        let across = right.get(hole).copied();
        match (across, below) {
            (Some(a), Some(d)) if a < d => return Some(moved(left, right, hole)),
            (Some(_), None) => return Some(moved(left, right, hole)),
            (_, Some(_)) => hole += 1,
            (None, None) => return None,
        }
    }
}

fn moved(left: &[Letter], right: &[Letter], row: usize) -> (Vec<Letter>, Vec<Letter>) {
    let x = right[row];
    let mut l = left.to_vec();
    l.push(x);
    l.sort_unstable();
    let r = right.iter().copied().filter(|&y| y != x).collect();
    (l, r)
}

/// One jeu de taquin slide of a box from `c̄_j̄` into `c̄_{j+1}`.
pub fn jdt_bar(j: u32, b: &TensorElement) -> Option<TensorElement> {
    let j = j as usize;
    if j == 0 || j >= b.len() {
        return None;
    }
    let mut bc = bar_complement(b);
    let (left, right) = slide(&bc.columns[2 * j], &bc.columns[2 * j - 1])?;
    bc.columns[2 * j] = left;
    bc.columns[2 * j - 1] = right;
    Some(from_bar_complement(&bc).expect("slides keep barred letters"))
}

/// `l` for the pair `(c̄_j̄, c̄_{j+1})`.
pub fn gamma_count(j: u32, b: &TensorElement) -> usize {
    let j = j as usize;
    if j == 0 || j >= b.len() {
        return 0;
    }
    let bc = bar_complement(b);
    min_skew_offset(&bc.columns[2 * j], &bc.columns[2 * j - 1])
}

/// Height of column `j` after contracting as long as possible.
pub fn admissible_height(j: u32, b: &TensorElement) -> usize {
    let mut cur = b.clone();
    while let Some(next) = kappa(j, &cur) {
        cur = next;
    }
    cur.columns[j as usize - 1].height()
}

/// `n - h` with `h` the height of the admissible column reached by
/// contraction.
pub fn delta_count(j: u32, b: &TensorElement) -> usize {
    b.n - admissible_height(j, b)
}

/// Every column dilated as long as possible.
pub fn dilate_fully(b: &TensorElement) -> TensorElement {
    let mut cur = b.clone();
    for j in 1..=b.len() as u32 {
        while let Some(next) = dilate(j, &cur) {
            cur = next;
        }
    }
    cur
}

fn charge_formula(m: usize, delta: &[usize], gamma: &[usize]) -> Result<u64> {
    let mut total = 0u64;
    for (k, &d) in delta.iter().enumerate() {
        if d % 2 != 0 {
            return invalid(format!("odd contraction count {d} in column {}", k + 1));
        }
        total += (2 * (m - k - 1) as u64 + 1) * (d as u64 / 2);
    }
    for (k, &g) in gamma.iter().enumerate() {
        total += 2 * (m - k - 1) as u64 * (g as u64).div_ceil(2);
    }
    Ok(total)
}

fn weight_zero(t: &KingElement) -> Result<()> {
    let w = king_weight(t);
    if !w.is_zero() {
        return Err(Error::WeightNotZero(w.to_string()));
    }
    Ok(())
}

/// Charge of a weight-zero King element, from the strings of its lowest
/// vertex for the unbarred operators.
pub fn charge_king(t: &KingElement) -> Result<u64> {
    weight_zero(t)?;
    let low = to_lowest(t);
    let m = t.m;
    let delta: Vec<usize> = (1..=m as u32).map(|j| epsilon_string(KingIndex::Unbarred(j), &low)).collect();
    let gamma: Vec<usize> = (1..m as u32).map(|j| epsilon_string(KingIndex::Barred(j), &low)).collect();
    charge_formula(m, &delta, &gamma)
}

/// Statistics behind `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeReport {
    pub charge: u64,
    #[serde(rename = "D")]
    pub d: u64,
    pub delta: Vec<usize>,
    pub gamma: Vec<usize>,
}

/// `D(b)` computed on the columns of `b` alone.
pub fn d_statistic(b: &TensorElement) -> Result<u64> {
    Ok(d_parts(b)?.0)
}

fn d_parts(b: &TensorElement) -> Result<(u64, Vec<usize>, Vec<usize>)> {
    if let Some(c) = b.columns.iter().find(|c| c.height() != b.n) {
        return Err(Error::WeightNotZero(format!("column {c} does not have height {}", b.n)));
    }
    let m = b.len();
    let delta: Vec<usize> = (1..=m as u32).map(|j| delta_count(j, b)).collect();
    let dil = dilate_fully(b);
    let gamma: Vec<usize> = (1..m as u32).map(|j| gamma_count(j, &dil)).collect();
    Ok((charge_formula(m, &delta, &gamma)?, delta, gamma))
}

pub fn charge_report(b: &TensorElement) -> Result<ChargeReport> {
    let (d, delta, gamma) = d_parts(b)?;
    let charge = charge_king(&star(b))?;
    Ok(ChargeReport { charge, d, delta, gamma })
}
