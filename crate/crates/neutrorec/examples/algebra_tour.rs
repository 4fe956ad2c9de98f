//! Triple operations and their lifting to records, on the two-record
//! algebra example.

use neutrorec::algebra::{combine_sets, nrs_combine, OpKind, Triple};
use neutrorec::ingestion::example4;

fn main() -> neutrorec::Result<()> {
    let a = Triple::new(0.3, 0.5, 0.8)?;
    let b = Triple::new(0.4, 0.3, 0.7)?;
    println!("a = {a}, b = {b}");
    println!("a ∪ b          = {}", a.union(b));
    println!("a ∩ b          = {}", a.intersection(b));
    println!("complement(a)  = {}", a.complement());
    println!("a ⊕ b (prob)   = {}", a.prob_sum(b));
    println!("a ⊕ b (bold)   = {}", a.bold_sum(b));
    println!("a ⊙ b (bold)   = {}", a.bold_intersection(b));
    println!("a ∸ b          = {}", a.bounded_diff(b));
    println!("a Δ b          = {}", a.sym_diff(b));
    println!("convex(0.3)    = {}", a.convex_combo(b, 0.3)?);
    println!("a × b (alg.)   = {}", a.cart_prod_algebraic(b));
    println!("a × b (minmax) = {}", a.cart_prod_minmax(b));

    let e = example4();
    let (r1, r2) = (e.record(0), e.record(1));
    for kind in [OpKind::Union, OpKind::Intersection, OpKind::BoundedDiff] {
        let r = nrs_combine(kind, &r1, &r2)?;
        println!("\n{}:", kind.name());
        for (label, t) in r.x.entries().iter().chain(r.y.entries()) {
            println!("  {label}: {t}");
        }
    }
    let d = combine_sets(OpKind::ProbSum, &e.dx[0], &e.dx[1], "d")?;
    println!("\nprobabilistic sum of the two diseases over X:");
    for (label, t) in d.entries() {
        println!("  {label}: {t}");
    }
    Ok(())
}
