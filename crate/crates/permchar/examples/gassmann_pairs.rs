//! Non-conjugate subgroups with identical coset characters.
//!
//! Such pairs are exactly what makes character transfer interesting: the
//! coset character cannot tell the subgroups apart, conjugation can.
//! The smallest simple group with a pair, the projective group of order
//! 168 on seven points, has two conjugacy classes of index-7 subgroups
//! (point stabilizers and their duals) with the same character — the
//! same phenomenon that produces non-isomorphic number fields with equal
//! zeta functions.
//!
//! The search enumerates the full subgroup lattice, so it is capped by
//! group order; 168 is comfortably within range but takes a few seconds.
//!
//! Run with `cargo run --release --example gassmann_pairs`.

use permchar::catalog::group_by_name;
use permchar::gassmann_pairs;

fn main() -> permchar::Result<()> {
    // no pairs exist in any symmetric group this small
    for name in ["S3", "S4"] {
        let group = group_by_name(name)?;
        let pairs = gassmann_pairs(&group, 400)?;
        println!(
            "{}: {} equal-character non-conjugate pairs",
            name,
            pairs.len()
        );
        assert!(pairs.is_empty());
    }

    let group = group_by_name("PSL(3,2)")?;
    let pairs = gassmann_pairs(&group, 400)?;
    println!();
    println!(
        "{}: {} equal-character non-conjugate pairs",
        group.label(),
        pairs.len()
    );
    for pair in &pairs {
        println!();
        println!("  order {} (index {})", pair.order, pair.index);
        println!("  U = {}", pair.subgroup_u);
        println!("  V = {}", pair.subgroup_v);
        println!("  shared character {:?}", pair.character);
    }

    assert!(pairs.iter().any(|p| p.index == 7));
    Ok(())
}
