//! An exhaustive sweep: every identity in this crate, checked over every
//! subgroup pair of every catalog group up to a chosen order.
//!
//! For each group the sweep enumerates the full subgroup lattice, takes
//! each subgroup `U` against each normal subgroup `N`, and checks the
//! averaging identity, the orbit-counting route to it, and character
//! transfer for every equal-character pair, recording any violation.
//! The report is deterministic: two runs over the same universe produce
//! byte-identical serializations.
//!
//! Run with `cargo run --release --example sweep_catalog`.

use permchar::catalog::universe_by_max_order;
use permchar::{sweep, SweepCaps};

fn main() -> permchar::Result<()> {
    let universe = universe_by_max_order(16)?;
    println!("sweeping {} catalog groups of order ≤ 16", universe.len());

    let report = sweep(&universe, &SweepCaps::default())?;
    println!();
    println!("groups swept          {}", report.groups);
    println!("subgroups             {}", report.subgroups);
    println!("normal subgroups      {}", report.normal_subgroups);
    println!("lemma checks          {}", report.lemma_checks);
    println!("route cross-checks    {}", report.lemma_route_checks);
    println!("orbit-count checks    {}", report.fgs_checks);
    println!("transfer checks       {}", report.theorem_checks);
    println!("equal-character pairs {}", report.equal_character_pairs);
    println!("violations            {}", report.violations.len());
    println!("wall time             {:.3}s", report.wall.as_secs_f64());

    assert!(report.all_hold());
    assert!(report.truncated.is_empty());
    Ok(())
}
