//! Running the identity sweeps, once against the real tables and once
//! against a table with one wrong entry.
//!
//! ```bash
//! cargo run -p bernoulli-feq --example verify_identities
//! ```

use bernoulli_feq::bernoulli::{Convention, FixedTables};
use bernoulli_feq::identities::{Ranges, Suite, Verifier};
use bernoulli_feq::Rational;

fn main() {
    let ranges = Ranges {
        n_max: 60,
        p_max: 12,
        k_max: 30,
        ..Ranges::default()
    };

    println!("memoized tables:");
    for report in Verifier::default().run_suite(Suite::All, &ranges) {
        println!("  {report}");
    }

    let mut tampered = FixedTables::computed(60);
    tampered.table_mut(Convention::Minus)[10] = Rational::new(5, 67).unwrap();
    println!("B-_10 replaced by 5/67:");
    for report in Verifier::new(&tampered).run_suite(Suite::All, &ranges) {
        println!("  {}", report.to_string().replace('\n', "\n  "));
    }
}
