//! Equality of coset characters survives absorbing a normal subgroup:
//! if `χ_U = χ_V` then `χ_UN = χ_VN` for every normal subgroup `N`.
//!
//! The averaging identity makes this immediate — both coarsened
//! characters are the same average of the same function — but the
//! conclusion is worth seeing concretely: subgroups that the coset
//! characters cannot tell apart stay indistinguishable after each is
//! multiplied by `N`.
//!
//! Run with `cargo run --example theorem_character_transfer`.

use permchar::catalog::group_by_name;
use permchar::{check_theorem, check_theorem_all, perm_character, Permutation};

fn main() -> permchar::Result<()> {
    let group = group_by_name("S4")?;
    let u = group.subgroup(&[Permutation::from_cycles("(1 2)", 4)?])?;
    let v = group.subgroup(&[Permutation::from_cycles("(3 4)", 4)?])?;
    let n = group.subgroup(&[
        Permutation::from_cycles("(1 2)(3 4)", 4)?,
        Permutation::from_cycles("(1 3)(2 4)", 4)?,
    ])?;

    let chi_u = perm_character(&group, &u)?;
    let chi_v = perm_character(&group, &v)?;
    println!("group {}", group.label());
    println!("χ_U for U = {}: {:?}", u.label(), chi_u.values());
    println!("χ_V for V = {}: {:?}", v.label(), chi_v.values());
    assert!(chi_u.equal(&chi_v)?);

    let check = check_theorem(&group, &u, &v, &n)?;
    println!();
    println!(
        "N = {}: hypothesis χ_U = χ_V {}, conclusion χ_UN = χ_VN {}",
        n.label(),
        check.hypothesis_holds,
        check.conclusion_holds
    );
    assert!(check.holds && !check.vacuous);

    // every normal subgroup of the parent group at once
    println!();
    println!("across all normal subgroups of {}:", group.label());
    for c in check_theorem_all(&group, &u, &v, 48)? {
        println!(
            "  N = {:24} hypothesis = {:5} conclusion = {:5} vacuous = {}",
            c.normal, c.hypothesis_holds, c.conclusion_holds, c.vacuous
        );
        assert!(c.holds);
    }

    // an unequal-character pair makes the statement vacuous, not false
    let w = group.subgroup(&[Permutation::from_cycles("(1 2 3)", 4)?])?;
    let vacuous = check_theorem(&group, &u, &w, &n)?;
    println!();
    println!(
        "U = {} vs W = {}: hypothesis = {}, so the check is vacuous = {}",
        u.label(),
        w.label(),
        vacuous.hypothesis_holds,
        vacuous.vacuous
    );
    assert!(vacuous.holds && vacuous.vacuous);
    Ok(())
}
