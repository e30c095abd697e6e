//! Acceptance suite: one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use howekit::bicrystal::{
    bar_complement, jdt_bar, kappa, kappa_bar, king_e, king_f, KingIndex,
};
use howekit::characters::elem_sym;
use howekit::crystal::{
    crystal_e, crystal_f, generate_crystal_graph, is_admissible, is_highest_weight, weight_of, Column,
    TensorElement,
};
use howekit::duality::{is_king_tableau, king_weight, star, tilde_expand, verify_combinatorial_howe, KingElement};
use howekit::partition::{conjugate, hat, hat_multi, involution_i, mu_of_n};
use howekit::verify::{
    injectivity_specs, verify_bijection, verify_charge, verify_contraction, verify_generalized, verify_howe_duality,
    verify_injectivity, verify_jacobi_trudi, verify_jdt, verify_kostant, verify_schur_duality, verify_straightening,
    Report,
};
use howekit::weyl::{dot_delta_c, positive_roots, WeylElement};
use howekit::{Family, MultiPartition, Partition, RootSystemId, Weight};

type Check = std::result::Result<String, String>;

/// Name, time budget in seconds, and the check itself.
type Criterion = (&'static str, u64, Box<dyn Fn() -> Check>);

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn tensor(cols: Vec<Vec<i32>>, n: usize) -> TensorElement {
    TensorElement::from_vecs(cols, n).unwrap()
}

fn king(cols: &[&[&str]], m: usize) -> KingElement {
    KingElement::parse(cols, m).unwrap()
}

fn from_report(r: Report) -> Check {
    if r.ok() {
        Ok(format!("{} cells", r.cells))
    } else {
        let shown: Vec<String> = r.failures.iter().take(3).map(|f| format!("{}: {}", f.cell, f.detail)).collect();
        Err(format!("{} failures, first: {}", r.failures.len(), shown.join("; ")))
    }
}

macro_rules! expect_eq {
    ($left:expr, $right:expr) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return Err(format!("{} = {:?}, expected {:?}", stringify!($left), l, r));
        }
    }};
}

fn hwv_example() -> TensorElement {
    tensor(vec![vec![-4, -3], vec![-2, -1, 1], vec![-4]], 4)
}

fn combinatorial_howe() -> Check {
    let sweep = from_report(verify_bijection(3, 3))?;
    let cell = verify_combinatorial_howe(4, 3, &[2, 3, 1], &p(&[2, 1, 1, 0])).map_err(|e| e.to_string())?;
    if !cell.ok() {
        return Err(format!("worked cell: {:?}", cell.failure));
    }
    let pair = cell.pairs.iter().find(|(b, _)| *b == hwv_example()).ok_or("worked element missing from its cell")?;
    expect_eq!(pair.1.rows_string(), "1 1 2 2 / 2b 3 3 / 3");
    Ok(sweep)
}

fn contraction() -> Check {
    let sweep = from_report(verify_contraction(3, 2))?;
    contraction_square()?;
    Ok(sweep)
}

fn jdt() -> Check {
    let sweep = from_report(verify_jdt(3, 2))?;
    jdt_examples()?;
    Ok(sweep)
}

fn jdt_examples() -> std::result::Result<(), String> {
    let b = tensor(vec![vec![-3, 1, 5], vec![-5, -1, 2, 4, 5]], 5);
    expect_eq!(bar_complement(&b).columns, vec![vec![-3], vec![-4, -3, -2], vec![-5, -1], vec![-3, -1]]);
    let out = jdt_bar(1, &b).ok_or("slide undefined on the first example")?;
    expect_eq!(bar_complement(&out).columns, vec![vec![-3], vec![-4, -3], vec![-5, -2, -1], vec![-3, -1]]);
    expect_eq!(kappa_bar(1, &b), Some(out));

    let b = tensor(vec![vec![-4, -2, 1, 4, 5], vec![-5, -1, 1]], 5);
    expect_eq!(star(&b), king(&[&["1", "1b", "2b"], &["2"], &["1", "2"], &["1b", "2"], &["1", "1b"]], 2));
    let expect = tensor(vec![vec![-4, -2, 1, 2, 4, 5], vec![-5, -2, -1, 1]], 5);
    expect_eq!(jdt_bar(1, &b), Some(expect.clone()));
    expect_eq!(kappa_bar(1, &b), Some(expect));

    // the barred contraction does not commute with e_0
    let b = tensor(vec![vec![], vec![1]], 1);
    let e0 = crystal_e(0, &b).ok_or("e_0 undefined")?;
    expect_eq!(kappa_bar(1, &e0), None);
    let k = kappa_bar(1, &b).ok_or("barred contraction undefined")?;
    expect_eq!(crystal_e(0, &k).map(|x| x.to_string()), Some("(1b) x (1b,1)".to_string()));
    Ok(())
}

fn worked_examples() -> Check {
    let mut count = 0;
    let mut tick = || count += 1;

    expect_eq!(conjugate(&p(&[5, 4, 2, 1])).to_string(), "(4,3,2,2,1)");
    tick();
    expect_eq!(hat(&p(&[5, 4, 2, 1]), 4, 5).map_err(|e| e.to_string())?.to_string(), "(3,2,2,1,0)");
    tick();
    let mu = MultiPartition::new(vec![p(&[2, 1, 1]), p(&[2]), p(&[3, 2])], vec![2, 2, 3]).unwrap();
    let mu_hat = hat_multi(&mu, 3).map_err(|e| e.to_string())?;
    expect_eq!(mu_hat.to_string(), "[(2,1,1),(2,2),(2,0)]");
    tick();
    let flat = mu_hat.flatten().map_err(|e| e.to_string())?;
    let shifted: Vec<i64> = involution_i(&mu.conjugate_flatten().unwrap()).0.iter().map(|x| x + 3).collect();
    expect_eq!(flat.0, vec![2, 1, 1, 2, 2, 2, 0]);
    expect_eq!(shifted, vec![2, 1, 1, 2, 2, 2, 0]);
    tick();
    let hatted = MultiPartition::new(vec![p(&[2, 1, 1]), p(&[2, 2]), p(&[2])], vec![3, 2, 2]).unwrap();
    expect_eq!(mu_of_n(&hatted, 3).unwrap().components, vec![p(&[2, 1, 1]), p(&[2]), p(&[3, 2])]);
    expect_eq!(mu_of_n(&hatted, 5).unwrap().components, vec![p(&[2, 2, 2, 1, 1]), p(&[2, 2, 2]), p(&[3, 3, 3, 2])]);
    tick();

    let c3 = RootSystemId::c(3);
    let beta = Weight(vec![5, 0, 3]);
    let s1 = WeylElement::simple_reflection(c3, 1).unwrap();
    expect_eq!(dot_delta_c(&s1, &beta, 2, 3).unwrap(), Weight(vec![-1, 6, 3]));
    let s3 = WeylElement::simple_reflection(c3, 3).unwrap();
    expect_eq!(dot_delta_c(&s3, &beta, 2, 3).unwrap().0[2], -3 + 2 * 2 + 2 * 3);
    tick();
    let mut roots = positive_roots(RootSystemId::c(2));
    roots.sort();
    expect_eq!(roots, vec![Weight(vec![0, 2]), Weight(vec![1, -1]), Weight(vec![1, 1]), Weight(vec![2, 0])]);
    tick();
    for k in 0..=3 {
        expect_eq!(elem_sym(3 + k, Family::C, 3).unwrap(), elem_sym(3 - k, Family::C, 3).unwrap());
    }
    tick();

    let word = |letters: &[i32], n| tensor(letters.iter().map(|&x| vec![x]).collect(), n);
    let w = word(&[-1, 2, -2, 1, 2, 2, 1, -1, -2], 2);
    expect_eq!(crystal_f(1, &w).map(|x| x.reading_word()), Some(vec![-1, 2, -2, 1, 2, 2, 1, -1, -1]));
    expect_eq!(crystal_e(1, &w).map(|x| x.reading_word()), Some(vec![-1, 1, -2, 1, 2, 2, 1, -1, -2]));
    tick();
    expect_eq!(crystal_f(0, &word(&[-1], 3)), Some(word(&[1], 3)));
    tick();
    let b = hwv_example();
    expect_eq!(weight_of(&b), Weight(vec![2, 1, 1, 0]));
    expect_eq!(is_highest_weight(&b), true);
    expect_eq!((0..4).filter_map(|i| crystal_e(i, &b)).count(), 0);
    tick();
    let c = Column::new(vec![-2, -1, 1, 3]).unwrap();
    expect_eq!((is_admissible(&c, 3), is_admissible(&c, 4)), (false, true));
    tick();
    let g = generate_crystal_graph(&tensor(vec![vec![-3, -2]], 3), &[0, 1, 2], 1000).map_err(|e| e.to_string())?;
    expect_eq!(g.vertices.len(), 14);
    tick();

    let b5 = tensor(vec![vec![-3, -2, 4, 5], vec![-5, -2, -1, 1, 2, 4]], 5);
    expect_eq!(tilde_expand(&b5)[0], vec![1, 4, 5]);
    expect_eq!(tilde_expand(&b5)[1], vec![4, 5]);
    tick();
    expect_eq!(star(&b5).to_string(), king(&[&["1", "2b"], &["2b"], &["2"], &["1", "1b", "2", "2b"], &["1", "1b"]], 2).to_string());
    tick();
    let t = star(&hwv_example());
    expect_eq!(t.rows_string(), "1 1 2 2 / 2b 3 3 / 3");
    expect_eq!(t.shape().to_string(), "(4,3,1)");
    expect_eq!(king_weight(&t), Weight(vec![3, 1, 2]));
    expect_eq!(is_king_tableau(&t), Ok(true));
    tick();
    for n in 1..=4 {
        let t = star(&tensor(vec![vec![-(n as i32)]], n));
        let expect: Vec<usize> = (0..n).map(|i| usize::from(i + 1 < n)).collect();
        expect_eq!(t.heights(), expect);
        expect_eq!(king_weight(&t), Weight(vec![n as i64 - 1]));
    }
    tick();

    let t = king(&[&["1b", "2"], &["1", "1b", "2b"], &["1", "2"]], 2);
    expect_eq!(king_f(KingIndex::Barred(1), &t), Some(king(&[&["1b", "2"], &["1", "2", "2b"], &["1", "2"]], 2)));
    expect_eq!(king_e(KingIndex::Unbarred(1), &t), None);
    expect_eq!(king_e(KingIndex::Unbarred(2), &t), None);
    expect_eq!(king_f(KingIndex::Unbarred(1), &t), None);
    tick();
    contraction_square()?;
    tick();
    jdt_examples()?;
    tick();
    Ok(format!("{count} examples"))
}

fn contraction_square() -> std::result::Result<(), String> {
    let b = tensor(vec![vec![-4, -3, -2, 3]], 4);
    let down = kappa(1, &b).ok_or("kappa undefined on the square")?;
    expect_eq!(down.to_string(), "(4b,2b)");
    let right = crystal_e(2, &b).ok_or("e_2 undefined on the square")?;
    expect_eq!(right.to_string(), "(4b,3b,2b,2)");
    expect_eq!(crystal_e(2, &down).map(|x| x.to_string()), Some("(4b,3b)".to_string()));
    expect_eq!(kappa(1, &right).map(|x| x.to_string()), Some("(4b,3b)".to_string()));
    Ok(())
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("howe-duality", 60, Box::new(|| from_report(verify_howe_duality(3, 3)))),
        ("schur-duality", 60, Box::new(|| from_report(verify_schur_duality(4, 4)))),
        ("combinatorial-howe", 120, Box::new(combinatorial_howe)),
        ("straightening", 60, Box::new(|| from_report(verify_straightening(3, 3)))),
        ("jacobi-trudi", 30, Box::new(|| from_report(verify_jacobi_trudi(3)))),
        ("kostant", 30, Box::new(|| from_report(verify_kostant(3, 6)))),
        ("contraction", 60, Box::new(contraction)),
        ("jeu-de-taquin", 60, Box::new(jdt)),
        ("charge", 60, Box::new(|| from_report(verify_charge(3, 3)))),
        ("generalized-duality", 120, Box::new(|| from_report(verify_generalized(2, 2, 3)))),
        ("injectivity", 300, Box::new(|| from_report(verify_injectivity(&injectivity_specs(2), 2, 3)))),
        ("worked-examples", 10, Box::new(worked_examples)),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {:>2} {name} ({:.2} s, {detail})", k + 1, elapsed.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
