//! Sparse multivariate Laurent polynomials with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::Family;

pub type Exponent = Vec<i32>;

const DEFAULT_TERM_CAP: usize = 10_000_000;

/// Maximum number of stored monomials; `HOWEKIT_TERM_CAP` overrides it.
pub fn term_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("HOWEKIT_TERM_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_TERM_CAP)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: Exponent,
    pub coef: i64,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, i64>,
}

fn add_coef(terms: &mut BTreeMap<Exponent, i64>, exp: Exponent, c: i64) -> Result<()> {
    use std::collections::btree_map::Entry;
    match terms.entry(exp) {
        Entry::Vacant(v) => {
            if c != 0 {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            let s = o.get().checked_add(c).ok_or(Error::Overflow("polynomial coefficient"))?;
            if s == 0 {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
    Ok(())
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(nvars);
        if c != 0 {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn monomial(exp: Exponent, coef: i64) -> Self {
        let mut p = Self::zero(exp.len());
        if coef != 0 {
            p.terms.insert(exp, coef);
        }
        p
    }

    /// `x_i^power` (0-based `i`).
    pub fn var(nvars: usize, i: usize, power: i32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = power;
        Self::monomial(e, 1)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for t in terms {
            if t.exp.len() != nvars {
                return Err(Error::LengthMismatch { expected: nvars, got: t.exp.len() });
            }
            add_coef(&mut p.terms, t.exp, t.coef)?;
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn to_terms(&self) -> Vec<Term> {
        self.terms.iter().map(|(e, &c)| Term { exp: e.clone(), coef: c }).collect()
    }

    pub fn coeff(&self, exp: &[i32]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    /// Lexicographically greatest monomial.
    pub fn leading(&self) -> Option<(&Exponent, i64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            add_coef(&mut out.terms, e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            let neg = c.checked_neg().ok_or(Error::Overflow("polynomial coefficient"))?;
            add_coef(&mut out.terms, e.clone(), neg)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        if k == 0 {
            return Ok(out);
        }
        for (e, &c) in &self.terms {
            let v = c.checked_mul(k).ok_or(Error::Overflow("polynomial coefficient"))?;
            out.terms.insert(e.clone(), v);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect(),
        }
    }

    /// Multiplication by `coef * x^exp`.
    pub fn mul_monomial(&self, exp: &[i32], coef: i64) -> Result<Self> {
        let mut out = Self::zero(self.nvars);
        if coef == 0 {
            return Ok(out);
        }
        for (e, &c) in &self.terms {
            let ne: Exponent = e.iter().zip(exp).map(|(a, b)| a + b).collect();
            let v = c.checked_mul(coef).ok_or(Error::Overflow("polynomial coefficient"))?;
            out.terms.insert(ne, v);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let cap = term_cap();
        let mut out = Self::zero(self.nvars);
        let mut scratch = vec![0; self.nvars];
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                for k in 0..self.nvars {
                    scratch[k] = e1[k] + e2[k];
                }
                let c = c1.checked_mul(c2).ok_or(Error::Overflow("polynomial coefficient"))?;
                add_coef(&mut out.terms, scratch.clone(), c)?;
            }
            if out.terms.len() > cap {
                return Err(Error::TermCap(cap));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact quotient by `d`; fails when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        self.check_vars(d)?;
        let (lead_d, lead_c) = match d.leading() {
            Some((e, c)) => (e.clone(), c),
            None => return Err(Error::InvalidInput("division by zero polynomial".into())),
        };
        let mut quotient = Self::zero(self.nvars);
        if self.is_zero() {
            return Ok(quotient);
        }
        // exponents of an exact quotient lie coordinatewise between
        // min(self) - min(d) and max(self) - max(d), so the loop is finite
        let (lo_s, hi_s) = self.exponent_box();
        let (lo_d, hi_d) = d.exponent_box();
        let lo: Exponent = lo_s.iter().zip(&lo_d).map(|(a, b)| a - b).collect();
        let hi: Exponent = hi_s.iter().zip(&hi_d).map(|(a, b)| a - b).collect();
        let mut rem = self.clone();
        let cap = term_cap();
        while let Some((e, c)) = rem.leading() {
            let qe: Exponent = e.iter().zip(&lead_d).map(|(a, b)| a - b).collect();
            let inside = qe.iter().zip(lo.iter().zip(&hi)).all(|(q, (l, h))| l <= q && q <= h);
            if !inside || c % lead_c != 0 {
                return Err(Error::InexactDivision);
            }
            let qc = c / lead_c;
            rem = rem.sub(&d.mul_monomial(&qe, qc)?)?;
            add_coef(&mut quotient.terms, qe, qc)?;
            if quotient.terms.len() > cap {
                return Err(Error::TermCap(cap));
            }
        }
        Ok(quotient)
    }

    /// Coordinatewise minimum and maximum over the support.
    pub fn exponent_box(&self) -> (Exponent, Exponent) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for k in 0..self.nvars {
                lo[k] = lo[k].min(e[k]);
                hi[k] = hi[k].max(e[k]);
            }
        }
        (lo, hi)
    }

    /// Sum of the coefficients (value at `x = (1, ..., 1)`).
    pub fn eval_ones(&self) -> Result<i64> {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("evaluation"))
    }

    pub fn map_exponents(&self, f: impl Fn(&[i32]) -> Exponent) -> Result<Self> {
        let mut out: Option<Self> = None;
        for (e, &c) in &self.terms {
            let ne = f(e);
            let o = out.get_or_insert_with(|| Self::zero(ne.len()));
            add_coef(&mut o.terms, ne, c)?;
        }
        Ok(out.unwrap_or_else(|| Self::zero(self.nvars)))
    }

    /// Invariance under permutations of the variables, and for type C also
    /// under `x_i -> 1/x_i`. Checked on generators.
    pub fn is_invariant(&self, family: Family) -> bool {
        let n = self.nvars;
        for i in 0..n.saturating_sub(1) {
            let swapped = self.terms.iter().all(|(e, &c)| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.coeff(&f) == c
            });
            if !swapped {
                return false;
            }
        }
        if family == Family::C && n > 0 {
            return self.terms.iter().all(|(e, &c)| {
                let mut f = e.clone();
                f[n - 1] = -f[n - 1];
                self.coeff(&f) == c
            });
        }
        true
    }

    /// Image in the quotient by `x_1 ... x_n = 1`, represented by exponents
    /// with last coordinate zero.
    pub fn sl_reduce(&self) -> Result<Self> {
        self.map_exponents(|e| {
            let t = e.last().copied().unwrap_or(0);
            e.iter().map(|x| x - t).collect()
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_terms()).expect("terms serialize")
    }

    pub fn from_json(s: &str, nvars: usize) -> Result<Self> {
        let terms: Vec<Term> = serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))?;
        Self::from_terms(nvars, terms)
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_terms().serialize(s)
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                f.write_str(" ")?;
            }
            let mag = c.unsigned_abs();
            match (mono.is_empty(), mag) {
                (true, _) => write!(f, "{sign}{mag}")?,
                (false, 1) => write!(f, "{sign}{}", mono.join("*"))?,
                (false, _) => write!(f, "{sign}{mag}*{}", mono.join("*"))?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(n: usize, terms: &[(&[i32], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(n, terms.iter().map(|(e, c)| Term { exp: e.to_vec(), coef: *c })).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let x = LaurentPolynomial::var(2, 0, 1);
        let y = LaurentPolynomial::var(2, 1, -1);
        let s = x.add(&y).unwrap();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq, poly(2, &[(&[2, 0], 1), (&[1, -1], 2), (&[0, -2], 1)]));
        assert!(s.sub(&s).unwrap().is_zero());
        assert_eq!(sq.eval_ones().unwrap(), 4);
        assert_eq!(sq.leading().unwrap().0, &vec![2, 0]);
    }

    #[test]
    fn exact_division() {
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let b = poly(2, &[(&[2, 0], 3), (&[0, -1], 1), (&[1, 1], -2)]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        let off = prod.add(&LaurentPolynomial::one(2)).unwrap();
        assert_eq!(off.div_exact(&a), Err(Error::InexactDivision));
    }

    #[test]
    fn invariance_checks() {
        let e1 = poly(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[-1, 0], 1), (&[0, -1], 1)]);
        assert!(e1.is_invariant(Family::C));
        let h = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert!(h.is_invariant(Family::A));
        assert!(!h.is_invariant(Family::C));
        assert!(!poly(2, &[(&[1, 0], 1)]).is_invariant(Family::A));
    }

    #[test]
    fn sl_reduction() {
        let p = poly(2, &[(&[2, 1], 1), (&[1, 0], 1)]);
        assert_eq!(p.sl_reduce().unwrap(), poly(2, &[(&[1, 0], 2)]));
    }

    #[test]
    fn json_round_trip() {
        let p = poly(2, &[(&[0, -1], 3), (&[1, 0], -2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[{"exp":[0,-1],"coef":3},{"exp":[1,0],"coef":-2}]"#);
        assert_eq!(LaurentPolynomial::from_json(&s, 2).unwrap(), p);
        assert!(LaurentPolynomial::from_json(&s, 3).is_err());
    }

    #[test]
    fn display() {
        let p = poly(2, &[(&[0, -1], 3), (&[1, 0], -1), (&[0, 0], 1)]);
        assert_eq!(p.to_string(), "-x1 +1 +3*x2^-1");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((prop::collection::vec(-2i32..=2, 2), -3i64..=3), 0..6)
            .prop_map(|ts| LaurentPolynomial::from_terms(2, ts.into_iter().map(|(exp, coef)| Term { exp, coef })).unwrap())
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
            prop_assert!(a.mul(&b).unwrap().len() <= a.len() * b.len());
            if !b.is_zero() {
                prop_assert_eq!(a.mul(&b).unwrap().div_exact(&b).unwrap(), a);
            }
        }
    }
}
