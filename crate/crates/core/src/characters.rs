//! Characters as Laurent polynomials: elementary symmetric functions, the
//! `E` map, Weyl denominators, Jacobi-Trudi determinants, straightening,
//! alternant quotients and decomposition into irreducible characters.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::laurent::{Exponent, LaurentPolynomial};
use crate::partfn::DiagramSpec;
use crate::partition::{reduce_column_full, MultiPartition, Partition, Weight};
use crate::weyl::{weyl_elements, Family, RootSystemId};

const DECOMPOSE_ITERATION_CAP: usize = 1_000_000;

/// `e_0, ..., e_top` for one family and variable count.
///
/// Family A: `e_k(x_1, ..., x_n)`. Family C: `e_k(x_1, ..., x_n, 1/x_1, ..., 1/x_n)`.
pub struct ElementaryTable {
    n: usize,
    polys: Vec<LaurentPolynomial>,
}

impl ElementaryTable {
    pub fn get(family: Family, n: usize) -> Result<Arc<ElementaryTable>> {
        static CACHE: OnceLock<Mutex<HashMap<(Family, usize), Arc<ElementaryTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("elementary cache poisoned").get(&(family, n)) {
            return Ok(t.clone());
        }
        let t = Arc::new(Self::build(family, n)?);
        cache.lock().expect("elementary cache poisoned").insert((family, n), t.clone());
        Ok(t)
    }

    fn build(family: Family, n: usize) -> Result<Self> {
        let mut values = Vec::new();
        for i in 0..n {
            values.push(LaurentPolynomial::var(n, i, 1));
        }
        if family == Family::C {
            for i in 0..n {
                values.push(LaurentPolynomial::var(n, i, -1));
            }
        }
        let mut polys = vec![LaurentPolynomial::zero(n); values.len() + 1];
        polys[0] = LaurentPolynomial::one(n);
        for (count, y) in values.iter().enumerate() {
            for k in (1..=count + 1).rev() {
                let add = polys[k - 1].mul(y)?;
                polys[k] = polys[k].add(&add)?;
            }
        }
        Ok(ElementaryTable { n, polys })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// `e_k`, or `None` when it vanishes.
    pub fn at(&self, k: i64) -> Option<&LaurentPolynomial> {
        if k < 0 {
            return None;
        }
        self.polys.get(k as usize)
    }

    pub fn poly(&self, k: i64) -> LaurentPolynomial {
        self.at(k).cloned().unwrap_or_else(|| LaurentPolynomial::zero(self.n))
    }
}

pub fn elem_sym(k: i64, family: Family, n: usize) -> Result<LaurentPolynomial> {
    Ok(ElementaryTable::get(family, n)?.poly(k))
}

/// `prod_i e_{beta_i}`.
pub fn e_product(beta: &[i64], family: Family, n: usize) -> Result<LaurentPolynomial> {
    let table = ElementaryTable::get(family, n)?;
    let mut acc = LaurentPolynomial::one(n);
    for &b in beta {
        match table.at(b) {
            Some(e) => acc = acc.mul(e)?,
            None => return Ok(LaurentPolynomial::zero(n)),
        }
    }
    Ok(acc)
}

/// The linear map `x^beta -> e_beta`.
pub fn e_map(p: &LaurentPolynomial, family: Family, n: usize) -> Result<LaurentPolynomial> {
    let mut memo: HashMap<Vec<i32>, LaurentPolynomial> = HashMap::new();
    let mut out = LaurentPolynomial::zero(n);
    for (exp, c) in p.terms() {
        let mut key = exp.clone();
        key.sort_unstable();
        if !memo.contains_key(&key) {
            let beta: Vec<i64> = key.iter().map(|&x| x as i64).collect();
            memo.insert(key.clone(), e_product(&beta, family, n)?);
        }
        out = out.add(&memo[&key].scale(c)?)?;
    }
    Ok(out)
}

/// `1 - x^exp`.
fn one_minus(exp: Exponent) -> Result<LaurentPolynomial> {
    let n = exp.len();
    LaurentPolynomial::one(n).sub(&LaurentPolynomial::monomial(exp, 1))
}

/// The monomial `x^[alpha]`: `x_i/x_j` for `e_i - e_j`, `1/(x_i x_j)` for
/// `e_i + e_j` and `1/x_i^2` for `2 e_i`.
fn bracket_monomial(alpha: &Weight) -> Exponent {
    if alpha.coords().iter().sum::<i64>() == 0 {
        alpha.coords().iter().map(|&a| a as i32).collect()
    } else {
        alpha.coords().iter().map(|&a| -a as i32).collect()
    }
}

/// `prod_{i<j} (1 - x_i/x_j)` for A; for C additionally
/// `prod_{i<=j} (1 - 1/(x_i x_j))`.
pub fn delta_product(family: Family, m: usize) -> Result<LaurentPolynomial> {
    let spec = DiagramSpec::new(vec![family], vec![m])?;
    delta_for_spec(&spec)
}

/// `prod (1 - x^[alpha])` over the roots of the block subsystem.
pub fn delta_for_spec(spec: &DiagramSpec) -> Result<LaurentPolynomial> {
    let mut acc = LaurentPolynomial::one(spec.rank());
    for alpha in spec.block_roots() {
        acc = acc.mul(&one_minus(bracket_monomial(&alpha))?)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy)]
enum JtShape {
    /// `e_{b_i + j - i}`
    A,
    /// `e_{b_i - i + j} - e_{b_i - i - j}`
    C,
}

fn determinant(matrix: &[Vec<Option<LaurentPolynomial>>], n: usize) -> Result<LaurentPolynomial> {
    let m = matrix.len();
    let mut total = LaurentPolynomial::zero(n);
    for perm in (0..m).permutations(m) {
        if perm.iter().enumerate().any(|(i, &j)| matrix[i][j].is_none()) {
            continue;
        }
        let inversions = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = LaurentPolynomial::one(n);
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(matrix[i][j].as_ref().expect("checked above"))?;
            if term.is_zero() {
                break;
            }
        }
        total = if inversions % 2 == 0 { total.add(&term)? } else { total.sub(&term)? };
    }
    Ok(total)
}

fn jt_with(beta: &[i64], table: &ElementaryTable, shape: JtShape) -> Result<LaurentPolynomial> {
    let m = beta.len();
    let n = table.nvars();
    let mut matrix = Vec::with_capacity(m);
    for i in 1..=m {
        let b = beta[i - 1];
        let mut row = Vec::with_capacity(m);
        for j in 1..=m {
            let (i, j) = (i as i64, j as i64);
            let entry = match shape {
                JtShape::A => table.at(b + j - i).cloned(),
                JtShape::C => {
                    let plus = table.at(b - i + j);
                    let minus = table.at(b - i - j);
                    match (plus, minus) {
                        (None, None) => None,
                        (Some(p), None) => Some(p.clone()),
                        (None, Some(q)) => Some(q.neg()),
                        (Some(p), Some(q)) => Some(p.sub(q)?).filter(|d| !d.is_zero()),
                    }
                }
            };
            row.push(entry);
        }
        matrix.push(row);
    }
    determinant(&matrix, n)
}

/// `v_beta = det V(beta)` in `n` variables.
pub fn jt_determinant(beta: &Weight, family: Family, n: usize, m: usize) -> Result<LaurentPolynomial> {
    if beta.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: beta.len() });
    }
    let table = ElementaryTable::get(family, n)?;
    let shape = match family {
        Family::A => JtShape::A,
        Family::C => JtShape::C,
    };
    jt_with(beta.coords(), &table, shape)
}

/// The Schur function of `delta` in the `2n` values `x_i, 1/x_i`.
pub fn schur_a_specialized(delta: &Partition, n: usize) -> Result<LaurentPolynomial> {
    let table = ElementaryTable::get(Family::C, n)?;
    let conj: Vec<i64> = delta.conjugate().trimmed().iter().map(|&x| x as i64).collect();
    jt_with(&conj, &table, JtShape::A)
}

/// Outcome of straightening `v_beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Straightened {
    pub sign: i64,
    /// Dominant representative of the dot orbit.
    pub gamma: Partition,
    /// `gamma` with parts equal to `n` removed in type A; equal to `gamma`
    /// in type C.
    pub reduced: Partition,
}

fn sort_sign(values: &[i64], descending: bool) -> i64 {
    let mut inv = 0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let out_of_order = if descending { values[i] < values[j] } else { values[i] > values[j] };
            if out_of_order {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Full straightening data; `None` when `v_beta = 0`.
pub fn straighten_full(beta: &Weight, family: Family, n: usize, m: usize) -> Result<Option<Straightened>> {
    if beta.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: beta.len() });
    }
    let n_i = n as i64;
    match family {
        Family::C => {
            // y = beta + delta with delta_i = -n - i; W acts by signed permutations
            let y: Vec<i64> = beta.coords().iter().enumerate().map(|(i, &b)| b - n_i - 1 - i as i64).collect();
            if y.contains(&0) {
                return Ok(None);
            }
            let abs: Vec<i64> = y.iter().map(|v| v.abs()).collect();
            if abs.iter().duplicates().next().is_some() {
                return Ok(None);
            }
            let flips = y.iter().filter(|&&v| v > 0).count();
            let mut sign = sort_sign(&abs, false);
            if flips % 2 == 1 {
                sign = -sign;
            }
            let mut sorted = abs.clone();
            sorted.sort_unstable();
            let gamma: Vec<i64> = sorted.iter().enumerate().map(|(i, &a)| -a + n_i + 1 + i as i64).collect();
            if gamma.last().is_some_and(|&g| g < 0) {
                return Ok(None);
            }
            let gamma = Weight(gamma).to_partition()?;
            Ok(Some(Straightened { sign, reduced: gamma.clone(), gamma }))
        }
        Family::A => {
            let y: Vec<i64> = beta.coords().iter().enumerate().map(|(i, &b)| b - 1 - i as i64).collect();
            if y.iter().duplicates().next().is_some() {
                return Ok(None);
            }
            let sign = sort_sign(&y, true);
            let mut sorted = y.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let gamma: Vec<i64> = sorted.iter().enumerate().map(|(i, &v)| v + 1 + i as i64).collect();
            if gamma.first().is_some_and(|&g| g > n_i) || gamma.last().is_some_and(|&g| g < 0) {
                return Ok(None);
            }
            let gamma = Weight(gamma).to_partition()?;
            let reduced = reduce_column_full(&gamma, n as u32);
            Ok(Some(Straightened { sign, gamma, reduced }))
        }
    }
}

/// `Some((sign, gamma))` with `v_beta = sign * v_gamma`; in type A the
/// returned `gamma` has its parts equal to `n` removed.
pub fn straighten(beta: &Weight, family: Family, n: usize, m: usize) -> Result<Option<(i64, Partition)>> {
    Ok(straighten_full(beta, family, n, m)?.map(|s| (s.sign, s.reduced)))
}

fn alternant(exponent: &[i64], id: RootSystemId) -> Result<LaurentPolynomial> {
    let n = id.rank;
    let mut out = LaurentPolynomial::zero(n);
    let mut image = vec![0; n];
    for (w, s) in weyl_elements(id)?.iter() {
        w.act_into(exponent, &mut image);
        let e: Exponent = image.iter().map(|&x| x as i32).collect();
        out = out.add(&LaurentPolynomial::monomial(e, *s))?;
    }
    Ok(out)
}

/// Irreducible character `a_{lam+rho} / a_rho`; family A is `gl_rank`.
pub fn weyl_character(lam: &Partition, family: Family, rank: usize) -> Result<Arc<LaurentPolynomial>> {
    type Cache = Mutex<HashMap<(Family, usize, Vec<u32>), Arc<LaurentPolynomial>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let key = (family, rank, lam.trimmed().to_vec());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("character cache poisoned").get(&key) {
        return Ok(c.clone());
    }
    let id = RootSystemId { family, rank };
    id.check_cap()?;
    let lam_w = lam.to_weight(rank)?;
    let rho = id.rho();
    let num = alternant(lam_w.plus(&rho)?.coords(), id)?;
    let den = alternant(rho.coords(), id)?;
    let ch = Arc::new(num.div_exact(&den)?);
    cache.lock().expect("character cache poisoned").insert(key, ch.clone());
    Ok(ch)
}

/// Multiplicities of irreducible characters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterDecomposition {
    pub mults: BTreeMap<Partition, i64>,
}

#[derive(Serialize, Deserialize)]
struct DecompEntry {
    lambda: Partition,
    mult: i64,
}

impl Serialize for CharacterDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<DecompEntry> = self
            .mults
            .iter()
            .map(|(l, &m)| DecompEntry { lambda: Partition::new(l.trimmed().to_vec()).expect("trimmed"), mult: m })
            .collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharacterDecomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<DecompEntry>::deserialize(d)?;
        Ok(CharacterDecomposition { mults: entries.into_iter().map(|e| (e.lambda, e.mult)).collect() })
    }
}

impl CharacterDecomposition {
    pub fn get(&self, lam: &Partition) -> i64 {
        self.mults.get(lam).copied().unwrap_or(0)
    }

    pub fn reconstruct(&self, family: Family, rank: usize) -> Result<LaurentPolynomial> {
        let mut acc = LaurentPolynomial::zero(rank);
        for (lam, &m) in &self.mults {
            acc = acc.add(&weyl_character(lam, family, rank)?.scale(m)?)?;
        }
        Ok(acc)
    }
}

/// Peels off irreducible characters from the lexicographically greatest
/// monomial down.
pub fn decompose(p: &LaurentPolynomial, family: Family, rank: usize) -> Result<CharacterDecomposition> {
    if p.nvars() != rank {
        return Err(Error::LengthMismatch { expected: rank, got: p.nvars() });
    }
    if !p.is_invariant(family) {
        return Err(Error::NotInvariant);
    }
    let mut rem = p.clone();
    let mut out = CharacterDecomposition::default();
    for _ in 0..DECOMPOSE_ITERATION_CAP {
        let (exp, c) = match rem.leading() {
            None => return Ok(out),
            Some((e, c)) => (e.clone(), c),
        };
        let w = Weight(exp.iter().map(|&x| x as i64).collect());
        if !w.is_partition() {
            return invalid(format!("leading exponent {w} is not a partition"));
        }
        let lam = w.to_partition()?;
        if c < 0 {
            return Err(Error::NegativeMultiplicity { mult: c, at: lam.to_string() });
        }
        rem = rem.sub(&weyl_character(&lam, family, rank)?.scale(c)?)?;
        out.mults.insert(lam, c);
    }
    Err(Error::IterationCap(DECOMPOSE_ITERATION_CAP))
}

/// `prod_j s^{X_j}_{mu^(j)}` in `n` variables, where `s^A` is the Schur
/// function in `x_1, ..., x_n, 1/x_n, ..., 1/x_1`.
pub fn char_product(mu: &MultiPartition, spec: &DiagramSpec, n: usize) -> Result<LaurentPolynomial> {
    if mu.blocks != spec.sizes {
        return invalid(format!("blocks {:?} do not match {}", mu.blocks, spec));
    }
    let mut acc = LaurentPolynomial::one(n);
    for ((p, &mj), &x) in mu.components.iter().zip(&mu.blocks).zip(&spec.symbols) {
        if !p.fits(n, mj) {
            return Err(Error::NotInRectangle { partition: p.to_string(), rows: n, cols: mj });
        }
        let factor = match x {
            Family::C => (*weyl_character(p, Family::C, n)?).clone(),
            Family::A => schur_a_specialized(p, n)?,
        };
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}
