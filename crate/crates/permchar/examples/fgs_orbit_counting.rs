//! An orbit-counting refinement: averaging fixed points of `g·n` over a
//! normal subgroup `N` counts the orbits of `H = <N, g>` that consist of
//! a single `N`-orbit.
//!
//! With `g` the identity this is the classic orbit-counting average
//! (every `H`-orbit is an `N`-orbit), and the general statement explains
//! what the averaging identity for coset characters counts: cosets of
//! `UN` fixed by `g` correspond to `N`-orbits on cosets of `U` that `H`
//! does not merge with others.
//!
//! Run with `cargo run --example fgs_orbit_counting`.

use permchar::catalog::group_by_name;
use permchar::{check_fgs, CosetSpace, Permutation};

fn main() -> permchar::Result<()> {
    let group = group_by_name("S4")?;
    let u = group.subgroup(&[Permutation::from_cycles("(1 2)", 4)?])?;
    let n = group.subgroup(&[
        Permutation::from_cycles("(1 2)(3 4)", 4)?,
        Permutation::from_cycles("(1 3)(2 4)", 4)?,
    ])?;
    let g = Permutation::from_cycles("(1 2 3)", 4)?;

    let space = CosetSpace::right_cosets(&group, &u)?;
    let hom = space.action();
    println!(
        "{} acting on the {} right cosets of {}",
        group.label(),
        space.size(),
        u.label()
    );

    let h = group.generated_with(&n, &g)?;
    println!("N = {} (order {})", n.label(), n.order());
    println!(
        "g = {},  H = <N, g> = {} (order {})",
        g,
        h.label(),
        h.order()
    );

    println!();
    println!("fixed cosets of each element of the coset gN:");
    for n_el in n.elements() {
        let gn = g.compose(n_el)?;
        println!("  fix({}) = {}", gn, hom.fixed_points(&gn)?);
    }

    let n_orbits = hom.orbits_of_subgroup(&n)?;
    let h_orbits = hom.orbits_of_subgroup(&h)?;
    println!();
    println!(
        "N partitions the cosets into {} orbits, H into {}",
        n_orbits.len(),
        h_orbits.len()
    );
    println!(
        "H-orbits that are single N-orbits: {}",
        hom.nonsplit_orbit_count(&h, &n)?
    );

    let check = check_fgs(&space, &n, &g)?;
    println!();
    println!(
        "average of fix(g·n) over N = {} = nonsplit orbit count {}",
        check.average, check.nonsplit_orbits
    );
    assert!(check.holds);

    // g = identity recovers the plain orbit-counting average over N
    let burnside = check_fgs(&space, &n, &Permutation::identity(4))?;
    println!(
        "with g = identity: average {} = {} orbits of N itself",
        burnside.average, burnside.nonsplit_orbits
    );
    assert!(burnside.holds);
    assert_eq!(burnside.nonsplit_orbits, n_orbits.len());
    Ok(())
}
