//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use toupie::ainf::{check_algebra, check_coalgebra, closed_delta, ext_table, tor_table, transfer_delta};
use toupie::duality::{
    double_dual, gr_algebra, hypotheses_check, ideal_equal, quotient_dimension, yoneda_presentation,
};
use toupie::examples;
use toupie::morse::{compare_sdr, verify_sdr, ClosedSdr, OracleSdr, Resolution, WordComb, HOMOTOPY};
use toupie::presentation::PathComb;
use toupie::random::{random_batch, RandomConfig};
use toupie::rewriting::Matrix;
use toupie::scalar::int;
use toupie::{Error, ToupieAlgebra, Word};

// Pinned tolerances. All algebraic comparisons are exact over Q.
const SEED: u64 = 20_241_019;
const RANDOM_COUNT: usize = 24;
const MAX_ARITY: usize = 5;
const MAX_DEGREE: usize = 5;
const MAX_BAR_DEGREE: usize = 4;
const C1_BUDGET: Duration = Duration::from_secs(1);
const C4_BUDGET: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg.into()) }
}

fn words(a: &ToupieAlgebra, letters: &[&str]) -> Vec<Word> {
    letters.iter().map(|l| a.word(&[l])).collect()
}

fn suite() -> Vec<ToupieAlgebra> {
    let mut algs = vec![examples::e1(), examples::algebra(examples::QUADRATIC_MONOMIAL)];
    algs.extend(random_batch(SEED, RANDOM_COUNT, RandomConfig::default()));
    algs
}

fn c1() -> Outcome {
    let start = Instant::now();
    let a = examples::e1();
    let ext = ext_table(&a, MAX_ARITY);
    let u = a.word(&["a1", "a2.a3"]);
    let v = a.word(&["b1", "b2"]);
    let expected = [
        (words(&a, &["b1", "b2"]), WordComb::term(v.clone(), int(-1))),
        (words(&a, &["c1", "c2"]), WordComb::basis(u.clone()) + WordComb::basis(v)),
        (words(&a, &["a1", "a2", "a3"]), WordComb::basis(u)),
    ];
    let mut checked = 0;
    for n in 2..=MAX_ARITY {
        for p in a.quiver().all_paths().unwrap().into_iter().filter(|p| p.len() == n) {
            let gens: Vec<Word> =
                (0..n).map(|k| Word::letter(a.quiver().subpath(&p, k, k + 1))).collect();
            let want = expected.iter().find(|(t, _)| *t == gens).map(|(_, v)| v.clone()).unwrap_or_default();
            ensure(ext.get(&gens) == want, format!("m{n} on {}", a.fmt_path(&p)))?;
            checked += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < C1_BUDGET, format!("took {took:?}"))?;
    Ok(format!("{checked} generator tuples, {took:.2?}"))
}

fn c2() -> Outcome {
    let c = Matrix::from_ints(&[
        &[1, 0, 0, 0, 1, 0, 1],
        &[0, 1, 0, 0, 0, 1, 1],
        &[0, 0, 1, 0, 1, 0, 0],
        &[0, 0, 0, 1, 0, 1, 0],
    ]);
    let want = Matrix::from_ints(&[
        &[1, -1, -1, 1, 0, 0, 0],
        &[0, 1, 0, -1, 0, 0, 1],
        &[0, 0, 1, 0, 1, 0, 0],
        &[0, 0, 0, 1, 0, 1, 0],
    ]);
    ensure(c.special_basis() == want, format!("got\n{}", c.special_basis()))?;
    Ok("C' matches".into())
}

fn c3() -> Outcome {
    let a = examples::e1();
    let q = a.quiver();
    let b = PathComb::basis(q.path(&["b1", "b2"]).unwrap());
    let c = PathComb::basis(q.path(&["c1", "c2"]).unwrap());
    let gr = gr_algebra(&a);
    let want_gr = vec![b.clone(), b.clone() - c.clone()];
    ensure(gr.presentation.relations() == want_gr.as_slice(), "gr relation set")?;
    let dd = double_dual(&a).map_err(|e| e.to_string())?;
    let rels = dd.presentation.relations();
    ensure(rels.len() == 2 && rels.contains(&b) && rels.contains(&c), "A!! relation set")?;
    ensure(ideal_equal(&dd.presentation, &gr.presentation).unwrap(), "ideal_equal")?;
    let dims = (a.dimension(), quotient_dimension(&gr.presentation).unwrap());
    ensure(dims == (16, 16), format!("dimensions {dims:?}"))?;
    Ok("gr = A!!, dim 16".into())
}

fn c4() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for text in [examples::E1, examples::QUADRATIC_MONOMIAL] {
        let a = examples::algebra(text);
        let closed = ClosedSdr::new(&a);
        let oracle = OracleSdr::build(&a).map_err(|e| e.to_string())?;
        let diff = compare_sdr(&a, &closed, &oracle, MAX_BAR_DEGREE);
        ensure(diff.is_empty(), format!("closed vs zigzag: {:?}", diff.first()))?;
        for maps in [&closed as &dyn toupie::morse::SdrMaps, &oracle] {
            let r = verify_sdr(&a, maps, MAX_BAR_DEGREE);
            ensure(r.passed(), format!("{:?}", r.first_failure()))?;
            cells += r.cells_checked;
        }
    }
    let took = start.elapsed();
    ensure(took < C4_BUDGET, format!("took {took:?}"))?;
    Ok(format!("{cells} cells, homotopy in the form {HOMOTOPY}, {took:.2?}"))
}

fn c5() -> Outcome {
    let mut compared = 0;
    let mut higher = 0;
    for a in suite() {
        for n in 2..=MAX_ARITY {
            for c in a.chains().all() {
                let closed = closed_delta(&a, n, c);
                let transfer = transfer_delta(&a, n, c).map_err(|e| e.to_string())?;
                ensure(closed == transfer, format!("Delta_{n}({})", a.fmt_word(c)))?;
                compared += 1;
                if n >= 3 && !closed.is_zero() {
                    higher += 1;
                }
            }
        }
    }
    ensure(higher > 0, "no nonzero higher coproduct exercised")?;
    Ok(format!("{compared} comparisons on {} algebras, {higher} nonzero with n >= 3", RANDOM_COUNT + 2))
}

fn c6() -> Outcome {
    for a in suite() {
        let si = check_algebra(&a, &ext_table(&a, MAX_ARITY), MAX_ARITY);
        ensure(si.passed(), format!("SI {:?}", si.failures.first()))?;
        let co = check_coalgebra(&a, &tor_table(&a, MAX_ARITY), MAX_ARITY);
        ensure(co.passed(), format!("SI' {:?}", co.failures.first()))?;
    }
    let a = examples::algebra(examples::QUADRATIC_MONOMIAL);
    let mut ext = ext_table(&a, MAX_ARITY);
    let pair = words(&a, &["d1", "d2"]);
    let flipped = -ext.get(&pair);
    ext.set(pair, flipped);
    let control = check_algebra(&a, &ext, MAX_ARITY);
    ensure(control.failures.iter().any(|(n, _)| *n == 3), "corrupted table passed SI(3)")?;
    Ok("SI and SI' hold; corrupted m2 fails SI(3)".into())
}

fn c7() -> Outcome {
    for a in suite() {
        let r = Resolution::new(&a).verify(MAX_DEGREE).map_err(|e| e.to_string())?;
        ensure(r.d_squared_zero && r.minimal && r.passed(), format!("{:?}", r.failures))?;
    }
    let betti = examples::e1().betti(3);
    ensure(betti == vec![6, 7, 2, 0], format!("E1 Betti {betti:?}"))?;
    Ok("d^2 = 0 and minimal; E1 Betti (6, 7, 2, 0)".into())
}

fn c8() -> Outcome {
    let mut algs = suite();
    algs.extend(random_batch(SEED, RANDOM_COUNT, RandomConfig { biased: true, ..RandomConfig::default() }));
    for a in &algs {
        let d = quotient_dimension(&gr_algebra(a).presentation).unwrap();
        ensure(d == a.dimension(), format!("dim {} vs gr {d}", a.dimension()))?;
    }
    Ok(format!("{} algebras", algs.len()))
}

fn c9() -> Outcome {
    let mut passing = 0;
    let cfg = RandomConfig { biased: true, ..RandomConfig::default() };
    for a in random_batch(SEED, RANDOM_COUNT, cfg).into_iter().chain(suite()) {
        if !hypotheses_check(&a).holds() {
            continue;
        }
        passing += 1;
        let dd = double_dual(&a).map_err(|e| e.to_string())?;
        ensure(ideal_equal(&dd.presentation, &gr_algebra(&a).presentation).unwrap(), "A!! differs from gr A")?;
    }
    ensure(passing >= RANDOM_COUNT / 2, format!("only {passing} presentations satisfy the hypotheses"))?;
    let violators = [examples::CUBIC_MONOMIAL, examples::OVERLAP, examples::CUBIC_ONLY, examples::TWO_CUBIC];
    for text in violators {
        let a = examples::algebra(text);
        match (yoneda_presentation(&a), double_dual(&a)) {
            (Err(Error::Hypotheses(r)), Err(Error::Hypotheses(s))) if !r.is_empty() && r == s => {}
            _ => return Err("hypothesis violation not refused".into()),
        }
    }
    Ok(format!("{passing} presentations with A!! = gr A; {} refusals", violators.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Ext products on E1", c1),
        ("special basis", c2),
        ("gr and double dual of E1", c3),
        ("SDR oracle equivalence", c4),
        ("A-infinity oracle equivalence", c5),
        ("Stasheff identities", c6),
        ("resolution", c7),
        ("gr dimension", c8),
        ("double dual", c9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

