//! Acceptance criteria, one line of output each. All comparisons are exact;
//! there is no tolerance anywhere except the benchmark's monotonicity check,
//! which compares measured ratios.

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use bernoulli_feq::bernoulli::{bernoulli_number, bernoulli_numbers, bernoulli_series, Convention};
use bernoulli_feq::cli::{self, BenchDoc};
use bernoulli_feq::faulhaber::{
    faulhaber_poly, faulhaber_variant_eval, sum_powers_closed, sum_powers_naive,
};
use bernoulli_feq::feqsolver::{
    extract_bernoulli, solve_by_elimination, solve_monomial, solve_shifted,
};
use bernoulli_feq::identities::{
    check_bernoulli_polynomial_relations, check_binomial_f_identity, check_difference_properties,
};
use bernoulli_feq::{Polynomial, Rational};
use num_bigint::{BigInt, BigUint};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn bernoulli_cross_oracle() {
    for conv in Convention::ALL {
        assert_eq!(
            bernoulli_series(conv, 60),
            bernoulli_numbers(conv, 60),
            "{conv}"
        );
        for j in (3..=59).step_by(2) {
            assert!(bernoulli_number(conv, j).is_zero(), "{conv} B_{j}");
        }
    }
    assert_eq!(bernoulli_number(Convention::Minus, 1), q(-1, 2));
    assert_eq!(bernoulli_number(Convention::Plus, 1), q(1, 2));
}

fn faulhaber_grid() {
    for p in 0..=25usize {
        for n in 0..=200u64 {
            let nb = BigUint::from(n);
            let naive = sum_powers_naive(&nb, p);
            assert_eq!(sum_powers_closed(&nb, p).unwrap(), naive, "eq2 n={n} p={p}");
            if p >= 1 {
                assert_eq!(
                    faulhaber_variant_eval(&nb, p).unwrap(),
                    naive,
                    "eq7 n={n} p={p}"
                );
            }
        }
    }
}

fn solver_reconstruction() {
    for k in 0..=50 {
        let m = solve_monomial(k);
        let s = solve_shifted(k);
        assert_eq!(
            m.polynomial(),
            faulhaber_poly(k, Convention::Minus),
            "monomial k={k}"
        );
        assert_eq!(
            s.polynomial(),
            faulhaber_poly(k, Convention::Plus),
            "shifted k={k}"
        );
        assert_eq!(m.polynomial().forward_difference(), Polynomial::monomial(k));
        assert_eq!(
            s.polynomial().forward_difference(),
            Polynomial::monomial(k).shift(&Rational::one())
        );
    }
}

fn propositions() {
    for k in 0..=50 {
        assert_eq!(
            extract_bernoulli(&solve_monomial(k), Convention::Minus).unwrap(),
            bernoulli_numbers(Convention::Minus, k),
            "B- k={k}"
        );
        assert_eq!(
            extract_bernoulli(&solve_shifted(k), Convention::Plus).unwrap(),
            bernoulli_numbers(Convention::Plus, k),
            "B+ k={k}"
        );
    }
}

fn identity_suite() {
    for report in [
        check_difference_properties(50),
        check_binomial_f_identity(50),
        check_bernoulli_polynomial_relations(50),
    ] {
        assert!(report.passed(), "{report}");
    }
}

fn minimality() {
    for k in 0..=5 {
        let rhs = Polynomial::monomial(k);
        for d in 0..=k {
            assert!(
                solve_by_elimination(&rhs, d).is_none(),
                "degree {d} solves k={k}"
            );
        }
        assert!(solve_by_elimination(&rhs, k + 1).is_some(), "k={k}");
    }
}

fn efficiency() {
    let mut out = Vec::new();
    let code = cli::run(
        [
            "bernoulli-feq",
            "--output",
            "structured",
            "bench",
            "--n",
            "1000,100000,1000000",
            "--p",
            "3",
        ],
        &mut out,
        &mut std::io::stderr(),
    );
    assert_eq!(code, 0);
    let rows = serde_json::from_slice::<BenchDoc>(&out).unwrap().rows;
    assert_eq!(rows.len(), 3);
    for (row, n) in rows.iter().zip([1_000u64, 100_000, 1_000_000]) {
        let n = BigInt::from(n);
        let tri: BigInt = &n * (&n + 1) / 2;
        assert_eq!(row.value, (&tri * &tri).to_string());
    }
    for w in rows.windows(2) {
        assert!(
            w[1].ratio > w[0].ratio,
            "ratio not increasing: n={} {:.1} vs n={} {:.1}",
            w[0].n,
            w[0].ratio,
            w[1].n,
            w[1].ratio
        );
    }
}

fn cli_contract() {
    let bin = env!("CARGO_BIN_EXE_bernoulli-feq");
    let all = Command::new(bin).args(["verify", "all"]).output().unwrap();
    let stdout = String::from_utf8_lossy(&all.stdout);
    assert_eq!(all.status.code(), Some(0), "{stdout}");
    assert!(stdout.lines().all(|l| l.starts_with("PASS ")), "{stdout}");

    let fixture =
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corrupted_minus_b4.json");
    let bad = Command::new(bin)
        .args(["verify", "all", "--bernoulli-table"])
        .arg(&fixture)
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&bad.stdout);
    assert_eq!(bad.status.code(), Some(1), "{stdout}");
    assert!(stdout.contains("FAIL lemma1-recurrence"), "{stdout}");
    assert!(stdout.contains("counterexample at minus m=4"), "{stdout}");
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 8] = [
        (
            "bernoulli recursion equals generating-function series, j <= 60",
            bernoulli_cross_oracle,
        ),
        (
            "closed forms equal naive sums, n <= 200, p <= 25",
            faulhaber_grid,
        ),
        (
            "difference-equation solvers reproduce f_k and g_k, k <= 50",
            solver_reconstruction,
        ),
        (
            "extracted coefficients reproduce B- and B+, k <= 50",
            propositions,
        ),
        (
            "difference, binomial and B_(k+1) identities, k <= 50",
            identity_suite,
        ),
        (
            "no polynomial of degree <= k solves the equation, k <= 5",
            minimality,
        ),
        (
            "naive/closed-form time ratio increases with n (p = 3)",
            efficiency,
        ),
        (
            "verify exits 0; corrupted table fails with counterexample",
            cli_contract,
        ),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS [{}] {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL [{}] {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
