//! Type C_n Kashiwara-Nakashima columns, tensor products of columns and the
//! crystal operators on them.
//!
//! Letters are nonzero integers in `[-n, n]`; `-k` stands for the barred
//! letter `k̄`, so the alphabet order is the integer order.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::partition::{Partition, Weight};
use crate::weyl::Family;

pub type Letter = i32;

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;
pub const DEFAULT_ENUMERATION_CAP: u128 = 50_000_000;

fn letter_str(x: Letter) -> String {
    if x < 0 {
        format!("{}b", -x)
    } else {
        x.to_string()
    }
}

/// A strictly increasing set of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct Column(Vec<Letter>);

impl TryFrom<Vec<i32>> for Column {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        Column::new(v)
    }
}

impl From<Column> for Vec<i32> {
    fn from(c: Column) -> Self {
        c.0
    }
}

impl Column {
    pub fn new(entries: Vec<Letter>) -> Result<Self> {
        if entries.contains(&0) {
            return invalid("column letters must be nonzero");
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return invalid(format!("column {entries:?} is not strictly increasing"));
        }
        Ok(Column(entries))
    }

    /// Builds a column from letters in any order.
    pub fn from_set(mut entries: Vec<Letter>) -> Result<Self> {
        entries.sort_unstable();
        Column::new(entries)
    }

    pub fn empty() -> Self {
        Column(Vec::new())
    }

    /// `(n̄, ..., overline(n-h+1))`.
    pub fn top_barred(n: usize, h: usize) -> Self {
        Column((0..h).map(|k| -(n as i32) + k as i32).collect())
    }

    pub fn entries(&self) -> &[Letter] {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn max_abs(&self) -> u32 {
        self.0.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|&x| letter_str(x)).join(","))
    }
}

/// `c_1 ⊗ ... ⊗ c_m` over the alphabet of rank `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TensorElement {
    pub n: usize,
    pub columns: Vec<Column>,
}

impl TensorElement {
    pub fn new(columns: Vec<Column>, n: usize) -> Result<Self> {
        for c in &columns {
            if c.max_abs() as usize > n {
                return invalid(format!("column {c} has a letter beyond rank {n}"));
            }
        }
        Ok(TensorElement { n, columns })
    }

    pub fn from_vecs(columns: Vec<Vec<Letter>>, n: usize) -> Result<Self> {
        let cols = columns.into_iter().map(Column::new).collect::<Result<Vec<_>>>()?;
        TensorElement::new(cols, n)
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn heights(&self) -> Vec<usize> {
        self.columns.iter().map(Column::height).collect()
    }

    /// Columns left to right, each top to bottom.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.columns.iter().flat_map(|c| c.0.iter().copied()).collect()
    }

    fn positions(&self) -> impl Iterator<Item = (usize, usize, Letter)> + '_ {
        self.columns.iter().enumerate().flat_map(|(j, c)| c.0.iter().enumerate().map(move |(r, &x)| (j, r, x)))
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.columns.is_empty() {
            return write!(f, "()");
        }
        write!(f, "{}", self.columns.iter().join(" x "))
    }
}

/// `Some(true)` for `+`, `Some(false)` for `-`.
fn signature(i: usize, x: Letter) -> Option<bool> {
    let i = i as i32;
    if i == 0 {
        return match x {
            -1 => Some(true),
            1 => Some(false),
            _ => None,
        };
    }
    if x == -(i + 1) || x == i {
        Some(true)
    } else if x == -i || x == i + 1 {
        Some(false)
    } else {
        None
    }
}

fn f_letter(i: usize, x: Letter) -> Letter {
    match (i, x) {
        (0, -1) => 1,
        (_, x) => x + 1,
    }
}

fn e_letter(i: usize, x: Letter) -> Letter {
    match (i, x) {
        (0, 1) => -1,
        (_, x) => x - 1,
    }
}

/// Cancels `+-` pairs; returns the unbracketed `-` positions followed by
/// the unbracketed `+` positions, both left to right.
pub(crate) fn bracket<T: Copy>(symbols: impl Iterator<Item = (T, bool)>) -> (Vec<T>, Vec<T>) {
    let mut minus = Vec::new();
    let mut plus: Vec<T> = Vec::new();
    for (pos, s) in symbols {
        if s {
            plus.push(pos);
        } else if plus.pop().is_none() {
            minus.push(pos);
        }
    }
    (minus, plus)
}

/// `(column, row)` positions of symbols.
pub(crate) type Positions = Vec<(usize, usize)>;

fn free_symbols(i: usize, b: &TensorElement) -> (Positions, Positions) {
    bracket(b.positions().filter_map(|(j, r, x)| signature(i, x).map(|s| ((j, r), s))))
}

fn check_index(i: usize, n: usize) -> bool {
    i < n
}

fn replaced(b: &TensorElement, (j, r): (usize, usize), y: Letter) -> TensorElement {
    let mut out = b.clone();
    out.columns[j].0[r] = y;
    debug_assert!(out.columns[j].0.windows(2).all(|w| w[0] < w[1]));
    out
}

pub fn crystal_f(i: usize, b: &TensorElement) -> Option<TensorElement> {
    if !check_index(i, b.n) {
        return None;
    }
    let (_, plus) = free_symbols(i, b);
    let pos = *plus.first()?;
    let x = b.columns[pos.0].0[pos.1];
    Some(replaced(b, pos, f_letter(i, x)))
}

pub fn crystal_e(i: usize, b: &TensorElement) -> Option<TensorElement> {
    if !check_index(i, b.n) {
        return None;
    }
    let (minus, _) = free_symbols(i, b);
    let pos = *minus.last()?;
    let x = b.columns[pos.0].0[pos.1];
    Some(replaced(b, pos, e_letter(i, x)))
}

/// Number of times `e_i` applies.
pub fn crystal_epsilon(i: usize, b: &TensorElement) -> usize {
    if !check_index(i, b.n) {
        return 0;
    }
    free_symbols(i, b).0.len()
}

/// Number of times `f_i` applies.
pub fn crystal_phi(i: usize, b: &TensorElement) -> usize {
    if !check_index(i, b.n) {
        return 0;
    }
    free_symbols(i, b).1.len()
}

fn add_letter_weight(w: &mut [i64], n: usize, x: Letter) {
    let i = x.unsigned_abs() as usize;
    if x < 0 {
        w[n - i] += 1;
    } else {
        w[n - i] -= 1;
    }
}

/// `(a_n, ..., a_1)` with `a_i = #ī - #i`.
pub fn weight_of(b: &TensorElement) -> Weight {
    let mut w = vec![0; b.n];
    for x in b.reading_word() {
        add_letter_weight(&mut w, b.n, x);
    }
    Weight(w)
}

fn is_partition(w: &[i64]) -> bool {
    w.last().map_or(true, |&x| x >= 0) && w.windows(2).all(|p| p[0] >= p[1])
}

/// Every prefix of the reading word has a partition as weight.
pub fn is_highest_weight(b: &TensorElement) -> bool {
    let mut w = vec![0; b.n];
    for x in b.reading_word() {
        add_letter_weight(&mut w, b.n, x);
        if !is_partition(&w) {
            return false;
        }
    }
    true
}

/// `N_i(c) <= n - i + 1` where `N_i` counts letters with `|x| >= i`.
pub fn is_admissible(c: &Column, n: usize) -> bool {
    (1..=n).all(|i| c.0.iter().filter(|x| x.unsigned_abs() as usize >= i).count() <= n - i + 1)
}

/// `M_i(c) <= i` where `M_i` counts letters with `|x| <= i`.
pub fn is_coadmissible(c: &Column, n: usize) -> bool {
    (1..=n).all(|i| c.0.iter().filter(|x| x.unsigned_abs() as usize <= i).count() <= i)
}

fn alphabet(n: usize) -> Vec<Letter> {
    let n = n as i32;
    (-n..=n).filter(|&x| x != 0).collect()
}

/// All columns of height `h` over the rank `n` alphabet, in lex order.
pub fn columns_of_height(n: usize, h: usize) -> Vec<Column> {
    alphabet(n).into_iter().combinations(h).map(Column).collect()
}

fn binomial(a: u128, b: u128) -> u128 {
    if b > a {
        return 0;
    }
    (0..b).fold(1u128, |acc, k| acc * (a - k) / (k + 1))
}

fn check_heights(mu_prime: &[usize], n: usize, cap: u128) -> Result<()> {
    if let Some(&h) = mu_prime.iter().find(|&&h| h > 2 * n) {
        return invalid(format!("column height {h} exceeds 2n = {}", 2 * n));
    }
    let mut size: u128 = 1;
    for &h in mu_prime {
        size = size.saturating_mul(binomial(2 * n as u128, h as u128));
    }
    if size > cap {
        return Err(Error::SizeGuard { size, cap });
    }
    Ok(())
}

/// All elements of `B_{mu'}`, lexicographic in the columns.
pub fn enumerate_b(mu_prime: &[usize], n: usize) -> Result<Box<dyn Iterator<Item = TensorElement>>> {
    check_heights(mu_prime, n, DEFAULT_ENUMERATION_CAP)?;
    if mu_prime.is_empty() {
        return Ok(Box::new(std::iter::once(TensorElement { n, columns: Vec::new() })));
    }
    let lists: Vec<Vec<Column>> = mu_prime.iter().map(|&h| columns_of_height(n, h)).collect();
    Ok(Box::new(
        lists
            .into_iter()
            .map(|l| l.into_iter())
            .multi_cartesian_product()
            .map(move |columns| TensorElement { n, columns }),
    ))
}

/// Highest weight vertices of `B_{mu'}` of weight `lam`, found by a
/// depth-first search that prunes on prefix dominance.
pub fn highest_weight_vertices(mu_prime: &[usize], lam: &Weight, n: usize) -> Result<Vec<TensorElement>> {
    if lam.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: lam.len() });
    }
    check_heights(mu_prime, n, u128::MAX)?;
    let mut out = Vec::new();
    let mut current: Vec<Column> = Vec::new();
    let mut w = vec![0i64; n];
    hw_search(mu_prime, n, &mut current, &mut Vec::new(), &mut w, lam.coords(), &mut out);
    Ok(out)
}

fn hw_search(
    mu_prime: &[usize],
    n: usize,
    done: &mut Vec<Column>,
    col: &mut Vec<Letter>,
    w: &mut Vec<i64>,
    target: &[i64],
    out: &mut Vec<TensorElement>,
) {
    let j = done.len();
    if j == mu_prime.len() {
        if w.as_slice() == target {
            out.push(TensorElement { n, columns: done.clone() });
        }
        return;
    }
    if col.len() == mu_prime[j] {
        done.push(Column(std::mem::take(col)));
        hw_search(mu_prime, n, done, col, w, target, out);
        *col = done.pop().expect("pushed above").0;
        return;
    }
    let start = col.last().map_or(-(n as i32), |&x| if x == -1 { 1 } else { x + 1 });
    let remaining = mu_prime[j] - col.len();
    for x in alphabet(n).into_iter().filter(|&x| x >= start) {
        let left = alphabet(n).into_iter().filter(|&y| y > x).count();
        if left + 1 < remaining {
            break;
        }
        add_letter_weight(w, n, x);
        if is_partition(w) {
            col.push(x);
            hw_search(mu_prime, n, done, col, w, target, out);
            col.pop();
        }
        add_letter_weight(w, n, -x);
    }
}

/// Vertices in BFS order from the seed, with edges `(source, target, i)`.
#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph {
    pub vertices: Vec<TensorElement>,
    pub edges: Vec<(usize, usize, usize)>,
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  v{k} [label=\"{v}\"];\n"));
        }
        for (a, b, i) in &self.edges {
            s.push_str(&format!("  v{a} -> v{b} [label=\"{i}\"];\n"));
        }
        s.push_str("}\n");
        s
    }

    /// `sum_v x^{wt(v)}` with weight coordinate `k` on variable `x_{k+1}`.
    pub fn character(&self) -> Result<LaurentPolynomial> {
        let n = self.vertices.first().map_or(0, |v| v.n);
        let mut acc: HashMap<Vec<i32>, i64> = HashMap::new();
        for v in &self.vertices {
            let e = weight_of(v).coords().iter().map(|&a| a as i32).collect();
            *acc.entry(e).or_insert(0) += 1;
        }
        LaurentPolynomial::from_terms(n, acc.into_iter().map(|(exp, coef)| crate::laurent::Term { exp, coef }))
    }
}

pub fn generate_crystal_graph(seed: &TensorElement, ops: &[usize], vertex_cap: usize) -> Result<CrystalGraph> {
    if let Some(&i) = ops.iter().find(|&&i| i >= seed.n) {
        return invalid(format!("operator index {i} out of range for rank {}", seed.n));
    }
    let mut index: HashMap<TensorElement, usize> = HashMap::new();
    let mut vertices = vec![seed.clone()];
    let mut edges = Vec::new();
    index.insert(seed.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for &i in ops {
            if let Some(t) = crystal_f(i, &vertices[k]) {
                let target = match index.get(&t) {
                    Some(&id) => id,
                    None => {
                        if vertices.len() >= vertex_cap {
                            return Err(Error::SizeGuard { size: vertices.len() as u128 + 1, cap: vertex_cap as u128 });
                        }
                        let id = vertices.len();
                        index.insert(t.clone(), id);
                        vertices.push(t);
                        queue.push_back(id);
                        id
                    }
                };
                edges.push((k, target, i));
            }
        }
    }
    Ok(CrystalGraph { vertices, edges })
}

/// Highest weight seed `lam` for the family: columns of the conjugate
/// shape topped by `n̄`.
pub fn seed_for(lam: &Partition, n: usize) -> Result<TensorElement> {
    if lam.num_parts() > n {
        return Err(Error::NotInRectangle { partition: lam.to_string(), rows: n, cols: lam.largest() as usize });
    }
    let cols = lam.conjugate().trimmed().iter().map(|&h| Column::top_barred(n, h as usize)).collect();
    TensorElement::new(cols, n)
}

pub fn family_ops(family: Family, n: usize) -> Vec<usize> {
    match family {
        Family::C => (0..n).collect(),
        Family::A => (1..n).collect(),
    }
}

/// Character of the connected crystal generated from the highest weight
/// seed of `lam`; family A gives the polynomial `gl_n` character.
pub fn crystal_character(lam: &Partition, family: Family, n: usize) -> Result<LaurentPolynomial> {
    let seed = seed_for(lam, n)?;
    generate_crystal_graph(&seed, &family_ops(family, n), DEFAULT_VERTEX_CAP)?.character()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::weyl_character;
    use crate::partfn::weight_multiplicity;
    use crate::partition::enumerate_rectangle;
    use crate::weyl::RootSystemId;
    use proptest::prelude::*;

    fn word(letters: &[Letter], n: usize) -> TensorElement {
        TensorElement::from_vecs(letters.iter().map(|&x| vec![x]).collect(), n).unwrap()
    }

    fn hwv_example() -> TensorElement {
        TensorElement::from_vecs(vec![vec![-4, -3], vec![-2, -1, 1], vec![-4]], 4).unwrap()
    }

    #[test]
    fn bracketing_example() {
        let w = word(&[-1, 2, -2, 1, 2, 2, 1, -1, -2], 2);
        assert_eq!(crystal_f(1, &w).unwrap().reading_word(), vec![-1, 2, -2, 1, 2, 2, 1, -1, -1]);
        assert_eq!(crystal_e(1, &w).unwrap().reading_word(), vec![-1, 1, -2, 1, 2, 2, 1, -1, -2]);
        assert_eq!(crystal_epsilon(1, &w), 2);
        assert_eq!(crystal_phi(1, &w), 1);
    }

    #[test]
    fn vector_representation() {
        let one_bar = word(&[-1], 3);
        assert_eq!(crystal_f(0, &one_bar), Some(word(&[1], 3)));
        assert_eq!(crystal_f(0, &word(&[1], 3)), None);
        assert_eq!(crystal_f(2, &word(&[2], 3)), Some(word(&[3], 3)));
        assert_eq!(crystal_f(1, &word(&[-3], 3)), None);
        let g = generate_crystal_graph(&word(&[-3], 3), &[0, 1, 2], 100).unwrap();
        assert_eq!(g.vertices.len(), 6);
        let labels: Vec<i32> = g.vertices.iter().map(|v| v.columns[0].0[0]).collect();
        assert_eq!(labels, vec![-3, -2, -1, 1, 2, 3]);
    }

    #[test]
    fn hwv_example_checks() {
        let b = hwv_example();
        assert_eq!(b.reading_word(), vec![-4, -3, -2, -1, 1, -4]);
        assert!(is_highest_weight(&b));
        assert_eq!(weight_of(&b), Weight(vec![2, 1, 1, 0]));
        for i in 0..4 {
            assert_eq!(crystal_e(i, &b), None);
        }
        let found = highest_weight_vertices(&[2, 3, 1], &Weight(vec![2, 1, 1, 0]), 4).unwrap();
        assert!(found.contains(&b));
        assert!(!is_highest_weight(&word(&[1], 2)));
        assert!(is_highest_weight(&word(&[-2], 2)));
        assert_eq!(weight_of(&TensorElement::new(vec![], 3).unwrap()), Weight::zero(3));
    }

    #[test]
    fn admissibility_examples() {
        let c = Column::new(vec![-2, -1, 1, 3]).unwrap();
        assert!(!is_admissible(&c, 3));
        assert!(is_admissible(&c, 4));
        assert!(is_admissible(&Column::empty(), 2));
        assert!(is_coadmissible(&Column::empty(), 2));
        assert!(!is_admissible(&Column::new(vec![-3, 3]).unwrap(), 3));
        assert!(!is_coadmissible(&Column::new(vec![-1, 1]).unwrap(), 3));
    }

    #[test]
    fn omega_one_graph_for_rank_three() {
        let g = generate_crystal_graph(&TensorElement::from_vecs(vec![vec![-3, -2]], 3).unwrap(), &[0, 1, 2], 100).unwrap();
        assert_eq!(g.vertices.len(), 14);
        assert!(g.vertices.iter().all(|v| is_admissible(&v.columns[0], 3)));
        assert!(g.edges.contains(&(1, 2, 0)));
        let dot = g.to_dot();
        assert_eq!(dot.matches("[label=\"").count(), 14 + g.edges.len());
        for k in 1..g.vertices.len() {
            assert!(g.edges.iter().any(|&(_, t, _)| t == k));
        }
    }

    #[test]
    fn admissible_columns_are_fundamental_vertices() {
        for n in 1..=4 {
            for h in 1..=n {
                let seed = TensorElement::new(vec![Column::top_barred(n, h)], n).unwrap();
                let g = generate_crystal_graph(&seed, &family_ops(Family::C, n), 10_000).unwrap();
                let mut from_graph: Vec<Column> = g.vertices.iter().map(|v| v.columns[0].clone()).collect();
                from_graph.sort();
                let admissible: Vec<Column> = columns_of_height(n, h).into_iter().filter(|c| is_admissible(c, n)).collect();
                assert_eq!(from_graph, admissible, "n={n} h={h}");
            }
        }
    }

    #[test]
    fn operators_are_inverse_on_b() {
        for n in 1..=3 {
            for mu in [vec![1], vec![2, 1], vec![1, 2, 3], vec![3, 3], vec![2, 0, 2]] {
                if mu.iter().any(|&h| h > 2 * n) {
                    continue;
                }
                for b in enumerate_b(&mu, n).unwrap() {
                    for i in 0..n {
                        if let Some(f) = crystal_f(i, &b) {
                            assert_eq!(crystal_e(i, &f).as_ref(), Some(&b));
                            let mut expect = weight_of(&b).0;
                            if i == 0 {
                                expect[n - 1] -= 2;
                            } else {
                                expect[n - i - 1] -= 1;
                                expect[n - i] += 1;
                            }
                            assert_eq!(weight_of(&f).0, expect);
                        }
                        if let Some(e) = crystal_e(i, &b) {
                            assert_eq!(crystal_f(i, &e).as_ref(), Some(&b));
                        }
                    }
                    let hw = (0..n).all(|i| crystal_e(i, &b).is_none());
                    assert_eq!(hw, is_highest_weight(&b), "{b}");
                }
            }
        }
    }

    #[test]
    fn dimension_bookkeeping() {
        for n in 1..=3 {
            for mu in [vec![1, 1], vec![2, 1, 3], vec![3, 3, 0]] {
                if mu.iter().any(|&h| h > 2 * n) {
                    continue;
                }
                let total: u128 = mu.iter().map(|&h| binomial(2 * n as u128, h as u128)).product();
                let mut sum = 0u128;
                for lam in enumerate_rectangle(n, mu.len()) {
                    let count = highest_weight_vertices(&mu, &lam.to_weight(n).unwrap(), n).unwrap().len() as u128;
                    let dim = weyl_character(&lam, Family::C, n).unwrap().eval_ones().unwrap() as u128;
                    sum += count * dim;
                }
                assert_eq!(sum, total, "n={n} mu'={mu:?}");
                assert_eq!(enumerate_b(&mu, n).unwrap().count() as u128, total);
            }
        }
        assert_eq!(enumerate_b(&[1], 2).unwrap().count(), 4);
    }

    #[test]
    fn graph_weights_are_weight_multiplicities() {
        for n in 1..=3 {
            for lam in enumerate_rectangle(n, 3) {
                let ch = crystal_character(&lam, Family::C, n).unwrap();
                assert_eq!(ch, *weyl_character(&lam, Family::C, n).unwrap(), "{lam}");
                for (exp, c) in ch.terms() {
                    let mu = Weight(exp.iter().map(|&x| x as i64).collect());
                    if mu.is_partition() {
                        assert_eq!(weight_multiplicity(RootSystemId::c(n), &lam, &mu).unwrap(), c);
                    }
                }
            }
        }
    }

    #[test]
    fn type_a_graph_is_schur() {
        for n in 1..=3 {
            for lam in enumerate_rectangle(n, 3) {
                let ch = crystal_character(&lam, Family::A, n).unwrap();
                assert_eq!(ch, *weyl_character(&lam, Family::A, n).unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn column_json() {
        let c = Column::new(vec![-3, -2, 4, 5]).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), "[-3,-2,4,5]");
        assert!(serde_json::from_str::<Column>("[2,1]").is_err());
        assert_eq!(c.to_string(), "(3b,2b,4,5)");
    }

    fn arb_element(n: usize, m: usize) -> impl Strategy<Value = TensorElement> {
        let col = proptest::sample::subsequence(alphabet(n), 0..=2 * n);
        proptest::collection::vec(col, m).prop_map(move |cols| TensorElement::from_vecs(cols, n).unwrap())
    }

    proptest! {
        #[test]
        fn string_lengths_match_weight(b in arb_element(4, 3)) {
            let w = weight_of(&b);
            for i in 0..4 {
                let pairing = if i == 0 { w.0[3] } else { w.0[4 - i - 1] - w.0[4 - i] };
                prop_assert_eq!(crystal_phi(i, &b) as i64 - crystal_epsilon(i, &b) as i64, pairing);
            }
        }
    }
}
