//! Exit criteria. Every criterion runs in the single `acceptance` test and
//! prints one PASS/FAIL line; the test fails if any criterion fails.
//!
//! Run with `cargo test -p bartab-core --test acceptance`.

use std::io::Write;
use std::time::{Duration, Instant};

use bartab_core::bars::{
    enumerate_bar_tableaux, even_boundary_free, lemma2_structure, minimal_tableaux, srank_formula,
    RankOracle,
};
use bartab_core::partitions::{odd_partitions, strict_partitions, Partition, StrictPartition};
use bartab_core::qfunctions::{
    schur_expansion_with, verify_degree_bounds_with, PowerSumPolynomial, QFunctions,
};
use bartab_core::spin::{
    schur_special, schur_vanishing, vanishing_corollary_check_with, Sign, SpinCharacters, Vanishing,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn s(text: &str) -> StrictPartition {
    text.parse().unwrap()
}

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let elapsed = start.elapsed();
    check(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn c1_srank_examples() -> Outcome {
    check(srank_formula(&s("9,7,6,3,1")) == 4, || {
        "srank(97631) != 4".into()
    })?;
    check(srank_formula(&s("4,3,2")) == 3, || "srank(432) != 3".into())
}

fn c2_formula_sweep() -> Outcome {
    let start = Instant::now();
    let mut oracle = RankOracle::new();
    for n in 0..=12 {
        for lambda in strict_partitions(n) {
            let (formula, search) = (srank_formula(&lambda), oracle.min_bars(&lambda));
            check(formula == search, || {
                format!("{lambda}: formula {formula}, search {search}")
            })?;
        }
    }
    within(start, Duration::from_secs(60))
}

fn c3_character_values() -> Outcome {
    let mut chars = SpinCharacters::new();
    let lambda = s("5,1");
    for (pi, want) in [
        ("1,1,1,1,1,1", 16),
        ("3,1,1,1", 2),
        ("5,1", -1),
        ("3,3", -2),
    ] {
        let got = chars
            .character(&lambda, &p(pi))
            .map_err(|e| e.to_string())?;
        check(got == BigInt::from(want), || {
            format!("<51>({pi}) = {got}, want {want}")
        })?;
    }
    Ok(())
}

fn c4_vanishing_lists() -> Outcome {
    let mut chars = SpinCharacters::new();
    let lists = [
        (
            "3,2,1",
            vec!["6", "4,2", "4,1,1", "2,2,2", "2,2,1,1", "2,1,1,1,1"],
        ),
        (
            "5,1",
            vec![
                "6",
                "4,2",
                "4,1,1",
                "3,2,1",
                "2,2,2",
                "2,2,1,1",
                "2,1,1,1,1",
            ],
        ),
    ];
    for (shape, classes) in lists {
        let lambda = s(shape);
        for pi in classes {
            let pi = p(pi);
            let v = schur_vanishing(&lambda, &pi).map_err(|e| e.to_string())?;
            check(v == Vanishing::Zero, || {
                format!("<{lambda}>({pi}) not flagged zero")
            })?;
            let value = chars.value(&lambda, &pi).map_err(|e| e.to_string())?;
            check(value.is_zero(), || format!("<{lambda}>({pi}) = {value}"))?;
        }
    }
    Ok(())
}

fn c5_special_value() -> Outcome {
    let surd = schur_special(&s("3,2,1")).map_err(|e| e.to_string())?;
    check(surd.radicand == q(3, 1), || {
        format!("radicand {}", surd.radicand)
    })?;
    check(surd.sign == Sign::Indeterminate, || {
        format!("sign {:?}", surd.sign)
    })
}

fn c6_q51_coefficients() -> Outcome {
    let f = QFunctions::new()
        .q_lambda(&s("5,1"))
        .map_err(|e| e.to_string())?;
    let expected = [
        ("1,1,1,1,1,1", q(16, 45)),
        ("3,1,1,1", q(8, 9)),
        ("5,1", q(-4, 5)),
        ("3,3", q(-4, 9)),
    ];
    for (pi, c) in &expected {
        let got = f.coefficient(&p(pi));
        check(&got == c, || {
            format!("coefficient of p_{pi} is {got}, want {c}")
        })?;
    }
    for pi in
        bartab_core::partitions::generate_partitions(6, bartab_core::partitions::Constraint::All)
    {
        if expected.iter().all(|(e, _)| p(e) != pi) {
            let got = f.coefficient(&pi);
            check(got.is_zero(), || {
                format!("coefficient of p_{pi} is {got}, want 0")
            })?;
        }
    }
    check(f.len() == 4, || format!("{} terms", f.len()))
}

fn c7_cross_definition() -> Outcome {
    let start = Instant::now();
    let mut qf = QFunctions::new();
    let mut chars = SpinCharacters::new();
    for n in 0..=10 {
        for lambda in strict_partitions(n) {
            let inductive = qf.q_lambda(&lambda).map_err(|e| e.to_string())?;
            let expansion = schur_expansion_with(&mut chars, &lambda);
            check(inductive == expansion, || {
                format!("Q_{lambda}: inductive {inductive} vs expansion {expansion}")
            })?;
        }
    }
    within(start, Duration::from_secs(120))
}

fn c8_weight_sum() -> Outcome {
    let mut chars = SpinCharacters::new();
    for n in 0..=9 {
        for lambda in strict_partitions(n) {
            for pi in odd_partitions(n) {
                let sum: BigInt = enumerate_bar_tableaux(&lambda, &pi)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|t| t.weight().value())
                    .sum();
                let value = chars.character(&lambda, &pi).map_err(|e| e.to_string())?;
                check(sum == value, || {
                    format!("<{lambda}>({pi}): tableaux {sum}, recurrence {value}")
                })?;
            }
        }
    }
    Ok(())
}

fn c9_vanishing_sweep() -> Outcome {
    let mut chars = SpinCharacters::new();
    for n in 0..=10 {
        let report = vanishing_corollary_check_with(&mut chars, n);
        if let Some(v) = report.violations.first() {
            return Err(format!("<{}>({}) = {}", v.shape, v.class, v.value));
        }
    }
    Ok(())
}

fn c10_degree_bounds() -> Outcome {
    let start = Instant::now();
    let mut qf = QFunctions::new();
    for n in 0..=12 {
        let report = verify_degree_bounds_with(&mut qf, n).map_err(|e| e.to_string())?;
        for e in &report.entries {
            check(e.degree_bound_holds(), || {
                format!(
                    "Q_{}: min degree {} < srank {}",
                    e.shape, e.min_degree, e.srank
                )
            })?;
            check(e.divisibility_holds(), || {
                format!(
                    "Q_{}(1^t) = {} not divisible by t^{}",
                    e.shape, e.specialization, e.srank
                )
            })?;
            check(e.equality_holds(), || {
                format!(
                    "Q_{}: min degree {} != srank {}",
                    e.shape, e.min_degree, e.srank
                )
            })?;
        }
    }
    within(start, Duration::from_secs(300))
}

fn c11_lemmas() -> Outcome {
    for n in 0..=10 {
        for lambda in strict_partitions(n) {
            let minimal = minimal_tableaux(&lambda);
            let clean: Vec<_> = minimal.iter().filter(|t| even_boundary_free(t)).collect();
            check(!clean.is_empty(), || {
                format!("{lambda}: no minimal tableau free of even boundaries")
            })?;
            if let Some(t) = clean.iter().find(|t| !lemma2_structure(t)) {
                return Err(format!("{lambda}: row structure fails for\n{}", t.grid()));
            }
        }
    }
    Ok(())
}

fn c12_r_choice_independence() -> Outcome {
    let mut chars = SpinCharacters::new();
    for n in 0..=9 {
        for lambda in strict_partitions(n) {
            for pi in odd_partitions(n) {
                let canonical = chars.character(&lambda, &pi).map_err(|e| e.to_string())?;
                let mut parts = pi.parts().to_vec();
                parts.dedup();
                for r in parts {
                    let other = chars
                        .character_removing(&lambda, &pi, r)
                        .map_err(|e| e.to_string())?;
                    check(other == canonical, || {
                        format!("<{lambda}>({pi}): removing {r} first gives {other}, canonical {canonical}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn c13_q_k_oracle() -> Outcome {
    let mut qf = QFunctions::new();
    let expected = [
        (1, PowerSumPolynomial::term(p("1"), q(2, 1))),
        (2, PowerSumPolynomial::term(p("1,1"), q(2, 1))),
        (
            3,
            PowerSumPolynomial::from_terms([(p("1,1,1"), q(4, 3)), (p("3"), q(2, 3))]),
        ),
    ];
    for (k, f) in expected {
        let got = qf.q_function(k).map_err(|e| e.to_string())?;
        check(got == f, || format!("q_{k} = {got}, want {f}"))?;
    }
    for k in 0..=10u32 {
        let got = qf.q_function(k as i64).map_err(|e| e.to_string())?;
        check(got.supported_on_odd_classes(), || {
            format!("q_{k} has an even class")
        })?;
        // triangular transition, term by term
        let mut direct = PowerSumPolynomial::zero();
        for lambda in bartab_core::partitions::generate_partitions(
            k,
            bartab_core::partitions::Constraint::All,
        ) {
            let m = qf
                .monomial_to_powersum(&lambda)
                .map_err(|e| e.to_string())?;
            direct = &direct + &m.scale(&BigRational::from_integer(BigInt::one() << lambda.len()));
        }
        check(got == direct, || {
            format!("q_{k} differs from its monomial sum")
        })?;
        let closed = PowerSumPolynomial::from_terms(odd_partitions(k).into_iter().map(|pi| {
            let c = BigRational::new(
                BigInt::one() << pi.len(),
                BigInt::from(pi.centralizer_order()),
            );
            (pi, c)
        }));
        check(got == closed, || {
            format!("q_{k} = {got}, 2^l/z form {closed}")
        })?;
    }
    Ok(())
}

/// Writes past the test harness capture so the lines show up in every run.
fn report(line: &str) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").unwrap();
    out.flush().unwrap();
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 13] = [
        ("1  srank examples 97631 -> 4, 432 -> 3", c1_srank_examples),
        ("2  srank formula = search, n <= 12", c2_formula_sweep),
        ("3  <51> on 1^6, 1^3 3, 15, 3^2", c3_character_values),
        ("4  vanishing lists for 321 and 51", c4_vanishing_lists),
        (
            "5  special value of 321: radicand 3, sign ±",
            c5_special_value,
        ),
        ("6  Q_51 coefficients", c6_q51_coefficients),
        (
            "7  inductive Q = character expansion, n <= 10",
            c7_cross_definition,
        ),
        ("8  tableau weight sums = recurrence, n <= 9", c8_weight_sum),
        ("9  vanishing below srank, n <= 10", c9_vanishing_sweep),
        (
            "10 degree bounds, divisibility and equality, n <= 12",
            c10_degree_bounds,
        ),
        ("11 minimal tableau row structure, n <= 10", c11_lemmas),
        (
            "12 removed-part independence, n <= 9",
            c12_r_choice_independence,
        ),
        ("13 q_k from monomials, k <= 10", c13_q_k_oracle),
    ];
    let mut failures = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match &outcome {
            Ok(()) => report(&format!("PASS  {name}  ({elapsed:.2?})")),
            Err(why) => {
                report(&format!("FAIL  {name}  ({elapsed:.2?}): {why}"));
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
