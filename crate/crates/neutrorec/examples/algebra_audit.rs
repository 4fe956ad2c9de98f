//! Seeded audit of every algebraic law, in each complement form.

use neutrorec::algebra::ComplementForm;
use neutrorec::audit::audit_all_with;

fn main() {
    let (samples, seed) = (10_000, 0);
    for form in ComplementForm::ALL {
        println!("complement = {}", form.name());
        for r in audit_all_with(samples, seed, form) {
            let cx = r
                .first_counterexample
                .as_ref()
                .map(|ts| ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            println!("  {:<44} {:>6}/{samples}  {cx}", r.law.name(), r.failures);
        }
    }
}
