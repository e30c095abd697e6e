//! Exhaustive verification sweeps. Every sweep returns a [`Report`] whose
//! failures are listed in cell order, independent of the thread count.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bicrystal::{charge_report, epsilon_string, jdt_bar, kappa, kappa_bar, KingIndex};
use crate::characters::{
    char_product, decompose, e_product, jt_determinant, straighten_full, weyl_character,
    CharacterDecomposition,
};
use crate::crystal::{crystal_character, crystal_e, enumerate_b, highest_weight_vertices, TensorElement};
use crate::duality::{star, verify_combinatorial_howe};
use crate::error::{invalid, Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::partfn::{BranchingEngine, DiagramSpec, MultiplicityEngine};
use crate::partition::{enumerate_multi_rectangle, enumerate_rectangle, hat, hat_multi, reduce_column_full, MultiPartition, Partition, Weight};
use crate::weyl::{Family, RootSystemId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub cell: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub cells: usize,
    pub failures: Vec<Failure>,
    pub runtime_ms: u64,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(reports: impl IntoIterator<Item = Report>) -> Report {
        let mut out = Report { cells: 0, failures: Vec::new(), runtime_ms: 0 };
        for r in reports {
            out.cells += r.cells;
            out.failures.extend(r.failures);
            out.runtime_ms += r.runtime_ms;
        }
        out
    }
}

/// Outcome of one cell: how many comparisons it made and what went wrong.
type CellOutcome = (usize, Vec<String>);

/// Runs `check` on every cell in parallel with per-job state from `init`.
fn sweep<C, S, I, F>(cells: Vec<C>, init: I, check: F) -> Report
where
    C: Debug + Sync,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &C) -> Result<CellOutcome> + Sync + Send,
{
    let start = Instant::now();
    let outcomes: Vec<(usize, Vec<Failure>)> = cells
        .par_iter()
        .map_init(&init, |state, cell| match check(state, cell) {
            Ok((count, problems)) => {
                (count, problems.into_iter().map(|detail| Failure { cell: format!("{cell:?}"), detail }).collect())
            }
            Err(e) => (1, vec![Failure { cell: format!("{cell:?}"), detail: format!("error: {e}") }]),
        })
        .collect();
    let mut report = Report { cells: 0, failures: Vec::new(), runtime_ms: 0 };
    for (count, failures) in outcomes {
        report.cells += count;
        report.failures.extend(failures);
    }
    report.runtime_ms = start.elapsed().as_millis() as u64;
    report
}

/// Sweep bounds. Requests beyond them need `allow_large`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub howe_max: usize,
    pub schur_max: usize,
    pub bijection_max: usize,
    pub straighten_max: usize,
    pub jacobi_trudi_box: usize,
    pub kostant_rank_max: usize,
    pub kostant_size_max: u64,
    pub crystal_n_max: usize,
    pub crystal_m_max: usize,
    pub charge_max: usize,
    pub generalized_r_max: usize,
    pub generalized_block_max: usize,
    pub generalized_n_max: usize,
    pub injectivity_part_bound: u32,
    pub injectivity_n_bound: u32,
    pub allow_large: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            howe_max: 3,
            schur_max: 4,
            bijection_max: 3,
            straighten_max: 3,
            jacobi_trudi_box: 3,
            kostant_rank_max: 3,
            kostant_size_max: 6,
            crystal_n_max: 3,
            crystal_m_max: 2,
            charge_max: 3,
            generalized_r_max: 2,
            generalized_block_max: 2,
            generalized_n_max: 3,
            injectivity_part_bound: 2,
            injectivity_n_bound: 3,
            allow_large: false,
        }
    }
}

impl SweepConfig {
    pub fn from_toml(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::InvalidInput(format!("config: {e}")))
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        Self::from_toml(&s)
    }

    /// Errors when `value` exceeds `cap` and large runs are not enabled.
    pub fn guard(&self, what: &str, value: usize, cap: usize) -> Result<()> {
        if value > cap && !self.allow_large {
            return invalid(format!("{what} = {value} exceeds the configured bound {cap}; pass the large-run opt-in to proceed"));
        }
        Ok(())
    }
}

/// Multiplicity of `V(lam)` in the tensor product, from the character.
pub fn multiplicity_char_route(lam: &Partition, spec: &DiagramSpec, mu: &MultiPartition, n: usize) -> Result<i64> {
    Ok(decompose(&char_product(mu, spec, n)?, Family::C, n)?.get(lam))
}

/// The same multiplicity as a branching coefficient of `sp_2m`.
pub fn multiplicity_branch_route(lam: &Partition, spec: &DiagramSpec, mu: &MultiPartition, n: usize) -> Result<i64> {
    let mut engine = BranchingEngine::new(&spec.reversed())?;
    branch_route_with(&mut engine, lam, mu, n)
}

fn branch_route_with(engine: &mut BranchingEngine, lam: &Partition, mu: &MultiPartition, n: usize) -> Result<i64> {
    let m = mu.rank();
    if !lam.fits(n, m) {
        return Ok(0);
    }
    engine.coefficient(&hat(lam, n, m)?, &hat_multi(mu, n)?)
}

fn keys_outside(d: &CharacterDecomposition, n: usize, m: usize) -> Vec<String> {
    d.mults
        .keys()
        .filter(|l| !l.fits(n, m))
        .map(|l| format!("component {l} lies outside the {n}x{m} rectangle"))
        .collect()
}

/// `mu'` padded to `m` entries.
fn conj_exponents(mu: &Partition, m: usize) -> Result<Vec<i64>> {
    Ok(mu.conjugate().to_weight(m)?.0)
}

/// Tensor products of exterior powers of `C^{2n}` against weight
/// multiplicities of `C_m`.
pub fn verify_howe_duality(n_max: usize, m_max: usize) -> Report {
    let cells: Vec<(usize, usize, Partition)> = (1..=n_max)
        .flat_map(|n| (1..=m_max).flat_map(move |m| enumerate_rectangle(n, m).into_iter().map(move |mu| (n, m, mu))))
        .collect();
    sweep(cells, HashMap::<usize, MultiplicityEngine>::new, |engines, (n, m, mu)| {
        let (n, m) = (*n, *m);
        let p = e_product(&conj_exponents(mu, m)?, Family::C, n)?;
        let d = decompose(&p, Family::C, n)?;
        let mut problems = keys_outside(&d, n, m);
        let engine = match engines.entry(m) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(v) => v.insert(MultiplicityEngine::new(RootSystemId::c(m))?),
        };
        let mu_hat = hat(mu, n, m)?.to_weight(m)?;
        let lams = enumerate_rectangle(n, m);
        for lam in &lams {
            let k = engine.multiplicity(&hat(lam, n, m)?, &mu_hat)?;
            let u = d.get(lam);
            if u != k {
                problems.push(format!("lambda {lam}: tensor multiplicity {u}, weight multiplicity {k}"));
            }
        }
        Ok((lams.len(), problems))
    })
}

/// Products of elementary symmetric polynomials in `n` variables against
/// `gl_m` Kostka numbers.
pub fn verify_schur_duality(n_max: usize, m_max: usize) -> Report {
    let cells: Vec<(usize, usize, Partition)> = (1..=n_max)
        .flat_map(|n| (1..=m_max).flat_map(move |m| enumerate_rectangle(n, m).into_iter().map(move |mu| (n, m, mu))))
        .collect();
    sweep(cells, HashMap::<usize, MultiplicityEngine>::new, |engines, (n, m, mu)| {
        let (n, m) = (*n, *m);
        let mu_conj = conj_exponents(mu, m)?;
        let p = e_product(&mu_conj, Family::A, n)?;
        let d = decompose(&p, Family::A, n)?;
        let mut problems = keys_outside(&d, n, m);
        for l in d.mults.keys() {
            if l.size() != mu.size() {
                problems.push(format!("component {l} has degree {} instead of {}", l.size(), mu.size()));
            }
        }
        // sl_n view: strip full columns, then lift back at degree |mu|
        let mut lifted: BTreeMap<Partition, i64> = BTreeMap::new();
        for (l, &c) in &d.mults {
            let r = reduce_column_full(&l.conjugate(), n as u32).conjugate();
            let missing = mu.size() - r.size();
            if missing % n as u64 != 0 {
                problems.push(format!("reduced component {r} cannot be lifted to degree {}", mu.size()));
                continue;
            }
            let k = (missing / n as u64) as u32;
            let parts = r.to_weight(n)?.0.iter().map(|&x| x as u32 + k).collect();
            *lifted.entry(Partition::new(parts)?).or_default() += c;
        }
        if lifted != d.mults {
            problems.push("sl-reduced decomposition does not lift to the gl decomposition".into());
        }
        let engine = match engines.entry(m) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(v) => v.insert(MultiplicityEngine::new(RootSystemId::a(m))?),
        };
        let target = Weight(mu_conj);
        let lams: Vec<Partition> = enumerate_rectangle(n, m).into_iter().filter(|l| l.size() == mu.size()).collect();
        for lam in &lams {
            let k = engine.multiplicity(&lam.conjugate(), &target)?;
            let u = d.get(lam);
            if u != k {
                problems.push(format!("lambda {lam}: multiplicity {u}, Kostka number {k}"));
            }
        }
        Ok((lams.len(), problems))
    })
}

/// Star is a bijection from highest weight vertices onto King tableaux,
/// for every composition with parts at most `2n`.
pub fn verify_bijection(n_max: usize, m_max: usize) -> Report {
    let cells: Vec<(usize, usize, Vec<usize>)> = (1..=n_max)
        .flat_map(|n| {
            (1..=m_max).flat_map(move |m| (0..m).map(|_| 0..=2 * n).multi_cartesian_product().map(move |h| (n, m, h)))
        })
        .collect();
    sweep(cells, || (), |_, (n, m, heights)| {
        let lams = enumerate_rectangle(*n, *m);
        let mut problems = Vec::new();
        for lam in &lams {
            let r = verify_combinatorial_howe(*n, *m, heights, lam)?;
            if let Some(f) = r.failure {
                problems.push(format!("lambda {lam}: {f}"));
            }
        }
        Ok((lams.len(), problems))
    })
}

/// Jacobi-Trudi determinants of arbitrary integer vectors against the
/// straightening rule.
pub fn verify_straightening(n_max: usize, m_max: usize) -> Report {
    let mut cells = Vec::new();
    for family in [Family::A, Family::C] {
        for n in 1..=n_max {
            for m in 1..=m_max {
                for beta in (0..m).map(|_| -2..=n as i64 + 2).multi_cartesian_product() {
                    cells.push((family, n, m, beta));
                }
            }
        }
    }
    sweep(cells, || (), |_, (family, n, m, beta)| {
        let (family, n, m) = (*family, *n, *m);
        let beta = Weight(beta.clone());
        let v = jt_determinant(&beta, family, n, m)?;
        let expect = match straighten_full(&beta, family, n, m)? {
            None => LaurentPolynomial::zero(n),
            Some(s) => {
                let direct = weyl_character(&s.gamma.conjugate(), family, n)?.scale(s.sign)?;
                if family == Family::A {
                    // full columns of gamma' are factors x_1 ... x_n
                    let k = s.gamma.parts().iter().filter(|&&g| g as usize == n).count() as i32;
                    let reduced = weyl_character(&s.reduced.conjugate(), family, n)?
                        .mul_monomial(&vec![k; n], s.sign)?;
                    if reduced != direct {
                        return Ok((1, vec!["reduced form disagrees with the direct form".into()]));
                    }
                }
                direct
            }
        };
        let problems = if v == expect { vec![] } else { vec![format!("determinant {v} but straightening gives {expect}")] };
        Ok((1, problems))
    })
}

/// Alternant quotient, Jacobi-Trudi determinant of the conjugate and the
/// crystal character agree for every shape inside the `box_size` square.
pub fn verify_jacobi_trudi(box_size: usize) -> Report {
    let mut cells = Vec::new();
    for family in [Family::A, Family::C] {
        for n in 1..=box_size {
            for lam in enumerate_rectangle(n, box_size) {
                cells.push((family, n, lam));
            }
        }
    }
    sweep(cells, || (), move |_, (family, n, lam)| {
        let (family, n) = (*family, *n);
        let s = weyl_character(lam, family, n)?;
        let v = jt_determinant(&lam.conjugate().to_weight(box_size)?, family, n, box_size)?;
        let c = crystal_character(lam, family, n)?;
        let mut problems = Vec::new();
        if *s != v {
            problems.push("alternant quotient differs from the determinant".into());
        }
        if *s != c {
            problems.push("alternant quotient differs from the crystal character".into());
        }
        Ok((1, problems))
    })
}

/// Alternating Kostant sums against coefficients of the characters.
pub fn verify_kostant(rank_max: usize, size_max: u64) -> Report {
    let cells: Vec<(usize, Partition)> = (1..=rank_max)
        .flat_map(|m| {
            enumerate_rectangle(m, size_max as usize).into_iter().filter(move |l| l.size() <= size_max).map(move |l| (m, l))
        })
        .collect();
    sweep(cells, HashMap::<usize, MultiplicityEngine>::new, |engines, (m, lam)| {
        let m = *m;
        let ch = weyl_character(lam, Family::C, m)?;
        let engine = match engines.entry(m) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(v) => v.insert(MultiplicityEngine::new(RootSystemId::c(m))?),
        };
        let mut problems = Vec::new();
        let mut count = 0;
        for mu in enumerate_rectangle(m, lam.largest() as usize) {
            if mu.size() > lam.size() {
                continue;
            }
            let w = mu.to_weight(m)?;
            let exp: Vec<i32> = w.coords().iter().map(|&x| x as i32).collect();
            let k = engine.multiplicity(lam, &w)?;
            count += 1;
            if k != ch.coeff(&exp) {
                problems.push(format!("mu {mu}: Kostant sum {k}, character coefficient {}", ch.coeff(&exp)));
            }
        }
        Ok((count, problems))
    })
}

/// Every element of the Fock space with `m` columns over rank `n`.
pub fn fock_space(n: usize, m: usize) -> Vec<TensorElement> {
    (0..m)
        .map(|_| 0..=2 * n)
        .multi_cartesian_product()
        .flat_map(|h| enumerate_b(&h, n).expect("heights bounded by 2n").collect::<Vec<_>>())
        .collect()
}

fn fock_cells(n_max: usize, m_max: usize) -> Vec<(usize, usize, TensorElement)> {
    let mut cells = Vec::new();
    for n in 1..=n_max {
        for m in 1..=m_max {
            cells.extend(fock_space(n, m).into_iter().map(|b| (n, m, b)));
        }
    }
    cells
}

/// Contraction removes one pair `(k̄, k)` from its column and commutes with
/// every `e_i`, including the domains of definition.
pub fn verify_contraction(n_max: usize, m_max: usize) -> Report {
    sweep(fock_cells(n_max, m_max), || (), |_, (n, m, b)| {
        let mut problems = Vec::new();
        let mut count = 0;
        for j in 1..=*m as u32 {
            let Some(a) = kappa(j, b) else { continue };
            count += 1;
            let (cb, ca) = (&b.columns[j as usize - 1], &a.columns[j as usize - 1]);
            let removed: Vec<i32> = cb.entries().iter().copied().filter(|x| !ca.contains(*x)).collect();
            let kept = ca.entries().iter().all(|&x| cb.contains(x));
            let others = (0..*m).all(|k| k + 1 == j as usize || a.columns[k] == b.columns[k]);
            if removed.len() != 2 || removed[0] != -removed[1] || !kept || !others {
                problems.push(format!("kappa_{j} gives {a}, not a single pair removal"));
            }
            for i in 0..*n {
                match (crystal_e(i, b), crystal_e(i, &a)) {
                    (Some(eb), Some(ea)) => {
                        if kappa(j, &eb).as_ref() != Some(&ea) {
                            problems.push(format!("kappa_{j} e_{i} differs from e_{i} kappa_{j}"));
                        }
                    }
                    (None, None) => {}
                    _ => problems.push(format!("e_{i} is defined on only one of b and kappa_{j} b")),
                }
            }
        }
        Ok((count, problems))
    })
}

/// Column jeu de taquin against the transported barred operators.
pub fn verify_jdt(n_max: usize, m_max: usize) -> Report {
    let cells: Vec<_> = fock_cells(n_max, m_max).into_iter().filter(|(_, m, _)| *m >= 2).collect();
    sweep(cells, || (), |_, (_, m, b)| {
        let mut problems = Vec::new();
        for j in 1..*m as u32 {
            let (jdt, transported) = (jdt_bar(j, b), kappa_bar(j, b));
            if jdt != transported {
                problems.push(format!("j = {j}: slide gives {jdt:?}, transport gives {transported:?}"));
            }
        }
        Ok((*m - 1, problems))
    })
}

/// `D(b) = ch(b*)` on every weight-zero highest weight vertex, with even
/// contraction counts.
pub fn verify_charge(n_max: usize, m_max: usize) -> Report {
    let mut cells = Vec::new();
    for n in 1..=n_max {
        for m in 1..=m_max {
            let hw = highest_weight_vertices(&vec![n; m], &Weight::zero(n), n).expect("heights bounded by 2n");
            cells.extend(hw.into_iter().map(|b| (n, m, b)));
        }
    }
    sweep(cells, || (), |_, (_, m, b)| {
        let r = charge_report(b)?;
        let mut problems = Vec::new();
        if r.charge != r.d {
            problems.push(format!("charge {} but D {}", r.charge, r.d));
        }
        if r.delta.iter().any(|d| d % 2 != 0) {
            problems.push(format!("odd contraction count in {:?}", r.delta));
        }
        let low = crate::bicrystal::to_lowest(&star(b));
        for j in 1..=*m as u32 {
            if epsilon_string(KingIndex::Unbarred(j), &low) != r.delta[j as usize - 1] {
                problems.push(format!("delta_{j} differs from the string length on the lowest vertex"));
            }
        }
        Ok((1, problems))
    })
}

/// All `(X, sizes)` with `r <= r_max` blocks of size at most `block_max`.
pub fn diagram_specs(r_max: usize, block_max: usize) -> Vec<DiagramSpec> {
    let mut out = Vec::new();
    for r in 1..=r_max {
        for symbols in (0..r).map(|_| [Family::A, Family::C]).multi_cartesian_product() {
            for sizes in (0..r).map(|_| 1..=block_max).multi_cartesian_product() {
                out.push(DiagramSpec::new(symbols.clone(), sizes).expect("positive sizes"));
            }
        }
    }
    out
}

/// Character route against branching route for every spec, `n` and
/// multipartition in range.
pub fn verify_generalized(r_max: usize, block_max: usize, n_max: usize) -> Report {
    let mut cells = Vec::new();
    for spec in diagram_specs(r_max, block_max) {
        for n in 1..=n_max {
            for mu in enumerate_multi_rectangle(n, &spec.sizes) {
                cells.push((spec.clone(), n, mu));
            }
        }
    }
    sweep(cells, HashMap::<DiagramSpec, BranchingEngine>::new, |engines, (spec, n, mu)| {
        let n = *n;
        let m = spec.rank();
        let d = decompose(&char_product(mu, spec, n)?, Family::C, n)?;
        let mut problems = keys_outside(&d, n, m);
        let engine = match engines.entry(spec.clone()) {
            std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::hash_map::Entry::Vacant(v) => v.insert(BranchingEngine::new(&spec.reversed())?),
        };
        let lams = enumerate_rectangle(n, m);
        for lam in &lams {
            let b = branch_route_with(engine, lam, mu, n)?;
            let c = d.get(lam);
            if b != c {
                problems.push(format!("lambda {lam}: character route {c}, branching route {b}"));
            }
        }
        Ok((lams.len(), problems))
    })
}

/// Two dual-side multipartitions whose branching vectors coincide although
/// they are not related by an allowed permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub spec: String,
    pub first: MultiPartition,
    pub second: MultiPartition,
}

fn is_parabolic(spec: &DiagramSpec) -> Result<bool> {
    if spec.symbols.iter().all(|&x| x == Family::C) {
        Ok(false)
    } else if spec.symbols[0] == Family::C && spec.symbols[1..].iter().all(|&x| x == Family::A) {
        Ok(true)
    } else {
        invalid(format!("{spec} is neither all C nor C followed by A blocks"))
    }
}

/// Canonical form under permutations of equal-size blocks; in the
/// parabolic case the last (C) component stays fixed.
fn canonical(nu: &MultiPartition, parabolic: bool) -> Vec<(usize, Partition)> {
    let k = nu.components.len();
    let movable = if parabolic { k - 1 } else { k };
    let mut items: Vec<(usize, Partition)> =
        nu.blocks[..movable].iter().copied().zip(nu.components[..movable].iter().cloned()).collect();
    items.sort();
    if parabolic {
        items.push((nu.blocks[k - 1], nu.components[k - 1].clone()));
    }
    items
}

/// Scans dual-side multipartitions with parts at most `part_bound` for
/// equal branching vectors over all `kappa` in the `m x n_bound` box.
pub fn injectivity_scan(spec: &DiagramSpec, part_bound: u32, n_bound: u32) -> Result<Vec<Violation>> {
    let parabolic = is_parabolic(spec)?;
    let dual = spec.reversed();
    let m = dual.rank();
    let nus: Vec<MultiPartition> = dual
        .sizes
        .iter()
        .map(|&b| enumerate_rectangle(b, part_bound as usize))
        .multi_cartesian_product()
        .map(|c| MultiPartition::new(c, dual.sizes.clone()).expect("lengths match"))
        .collect();
    let kappas = enumerate_rectangle(m, n_bound as usize);
    let vectors: Vec<Vec<i64>> = nus
        .par_iter()
        .map_init(
            || BranchingEngine::new(&dual),
            |engine, nu| {
                let engine = engine.as_mut().map_err(|e| e.clone())?;
                kappas.iter().map(|k| engine.coefficient(k, nu)).collect::<Result<Vec<i64>>>()
            },
        )
        .collect::<Result<Vec<_>>>()?;
    let mut groups: BTreeMap<&Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (i, v) in vectors.iter().enumerate() {
        groups.entry(v).or_default().push(i);
    }
    let mut out = Vec::new();
    for members in groups.values() {
        for (a, b) in members.iter().tuple_combinations() {
            if canonical(&nus[*a], parabolic) != canonical(&nus[*b], parabolic) {
                out.push(Violation { spec: spec.to_string(), first: nus[*a].clone(), second: nus[*b].clone() });
            }
        }
    }
    Ok(out)
}

/// The specs scanned by default: all C with up to two blocks of size at
/// most `block_max` plus three unit blocks, and the matching parabolic
/// shapes.
pub fn injectivity_specs(block_max: usize) -> Vec<DiagramSpec> {
    let mut out = Vec::new();
    for sizes in (1..=2).flat_map(|r| (0..r).map(|_| 1..=block_max).multi_cartesian_product()) {
        out.push(DiagramSpec::new(vec![Family::C; sizes.len()], sizes).expect("positive sizes"));
    }
    out.push(DiagramSpec::new(vec![Family::C; 3], vec![1; 3]).expect("positive sizes"));
    for sizes in (0..2).map(|_| 1..=block_max).multi_cartesian_product() {
        out.push(DiagramSpec::new(vec![Family::C, Family::A], sizes).expect("positive sizes"));
    }
    out.push(DiagramSpec::new(vec![Family::C, Family::A, Family::A], vec![1; 3]).expect("positive sizes"));
    out
}

pub fn verify_injectivity(specs: &[DiagramSpec], part_bound: u32, n_bound: u32) -> Report {
    let start = Instant::now();
    let mut report = Report { cells: 0, failures: Vec::new(), runtime_ms: 0 };
    for spec in specs {
        report.cells += 1;
        match injectivity_scan(spec, part_bound, n_bound) {
            Ok(vs) => report.failures.extend(vs.into_iter().map(|v| Failure {
                cell: v.spec.clone(),
                detail: format!("{} and {} have equal branching vectors", v.first, v.second),
            })),
            Err(e) => report.failures.push(Failure { cell: spec.to_string(), detail: format!("error: {e}") }),
        }
    }
    report.runtime_ms = start.elapsed().as_millis() as u64;
    report
}

/// Every sweep at the configured bounds.
pub fn run_all(cfg: &SweepConfig) -> Vec<(&'static str, Report)> {
    vec![
        ("howe", verify_howe_duality(cfg.howe_max, cfg.howe_max)),
        ("schur", verify_schur_duality(cfg.schur_max, cfg.schur_max)),
        ("bijection", verify_bijection(cfg.bijection_max, cfg.bijection_max)),
        ("straighten", verify_straightening(cfg.straighten_max, cfg.straighten_max)),
        ("jacobi-trudi", verify_jacobi_trudi(cfg.jacobi_trudi_box)),
        ("kostant", verify_kostant(cfg.kostant_rank_max, cfg.kostant_size_max)),
        ("contraction", verify_contraction(cfg.crystal_n_max, cfg.crystal_m_max)),
        ("jdt", verify_jdt(cfg.crystal_n_max, cfg.crystal_m_max)),
        ("charge", verify_charge(cfg.charge_max, cfg.charge_max)),
        ("generalized", verify_generalized(cfg.generalized_r_max, cfg.generalized_block_max, cfg.generalized_n_max)),
        (
            "injectivity",
            verify_injectivity(&injectivity_specs(cfg.generalized_block_max), cfg.injectivity_part_bound, cfg.injectivity_n_bound),
        ),
    ]
}

pub fn merged(reports: impl IntoIterator<Item = Report>) -> Report {
    Report::merge(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn assert_ok(r: &Report) {
        assert!(r.ok(), "{:?}", &r.failures[..r.failures.len().min(5)]);
        assert!(r.cells > 0);
    }

    #[test]
    fn small_sweeps_pass() {
        assert_ok(&verify_howe_duality(2, 2));
        assert_ok(&verify_schur_duality(2, 3));
        assert_ok(&verify_bijection(2, 2));
        assert_ok(&verify_straightening(2, 2));
        assert_ok(&verify_jacobi_trudi(2));
        assert_ok(&verify_kostant(2, 4));
        assert_ok(&verify_contraction(2, 2));
        assert_ok(&verify_jdt(2, 2));
        assert_ok(&verify_charge(2, 2));
        assert_ok(&verify_generalized(2, 1, 2));
    }

    #[test]
    fn single_c_block_is_a_delta() {
        let spec = DiagramSpec::new(vec![Family::C], vec![2]).unwrap();
        for n in 1..=3 {
            for mu in enumerate_multi_rectangle(n, &[2]) {
                for lam in enumerate_rectangle(n, 2) {
                    let expect = i64::from(lam == mu.components[0]);
                    assert_eq!(multiplicity_char_route(&lam, &spec, &mu, n).unwrap(), expect);
                    assert_eq!(multiplicity_branch_route(&lam, &spec, &mu, n).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn classical_reduction() {
        // exterior powers are A blocks of size one with column partitions
        let n = 2;
        let spec = DiagramSpec::new(vec![Family::A, Family::A], vec![1, 1]).unwrap();
        let mu = MultiPartition::new(vec![p(&[1]), p(&[1])], vec![1, 1]).unwrap();
        let expect = [(p(&[1, 1]), 1), (p(&[2]), 1), (p(&[]), 1)];
        for (lam, k) in expect {
            assert_eq!(multiplicity_char_route(&lam, &spec, &mu, n).unwrap(), k);
            assert_eq!(multiplicity_branch_route(&lam, &spec, &mu, n).unwrap(), k);
        }
    }

    #[test]
    fn injectivity_small() {
        let spec = DiagramSpec::new(vec![Family::C, Family::C], vec![1, 1]).unwrap();
        assert!(injectivity_scan(&spec, 2, 3).unwrap().is_empty());
        let spec = DiagramSpec::new(vec![Family::C, Family::A], vec![1, 1]).unwrap();
        assert!(injectivity_scan(&spec, 2, 3).unwrap().is_empty());
        let bad = DiagramSpec::new(vec![Family::A, Family::C], vec![1, 1]).unwrap();
        assert!(injectivity_scan(&bad, 2, 3).is_err());
    }

    #[test]
    fn swapped_blocks_are_exempt() {
        let a = MultiPartition::new(vec![p(&[1]), p(&[2])], vec![1, 1]).unwrap();
        let b = MultiPartition::new(vec![p(&[2]), p(&[1])], vec![1, 1]).unwrap();
        assert_eq!(canonical(&a, false), canonical(&b, false));
        assert_ne!(canonical(&a, true), canonical(&b, true));
    }

    #[test]
    fn config_round_trip() {
        let cfg = SweepConfig::from_toml("howe_max = 2\nallow_large = true\n").unwrap();
        assert_eq!(cfg.howe_max, 2);
        assert!(cfg.allow_large);
        assert_eq!(cfg.schur_max, 4);
        assert!(SweepConfig::from_toml("bogus = 1").is_err());
        let d = SweepConfig::default();
        assert!(d.guard("n", 5, 3).is_err());
        assert!(d.guard("n", 3, 3).is_ok());
    }

    #[test]
    fn report_json_shape() {
        let r = Report { cells: 3, failures: vec![], runtime_ms: 7 };
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"cells":3,"failures":[],"runtime_ms":7}"#);
    }
}
