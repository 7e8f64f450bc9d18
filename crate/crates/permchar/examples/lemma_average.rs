//! The averaging identity relating a coset character to its coarsening by
//! a normal subgroup:
//!
//! ```text
//! χ_UN(g) = (1/|N|) · Σ_{n ∈ N} χ_U(g·n)
//! ```
//!
//! Cosets of `UN` are unions of cosets of `U`, and a coset of `UN` is
//! fixed by `g` exactly when some coset of `U` inside it is fixed by some
//! element of the coset `gN`; counting carefully turns that into the
//! average above.  This example evaluates both sides on the symmetric
//! group on four points with `U` generated by a transposition and `N`
//! the normal Klein four-group.
//!
//! Run with `cargo run --example lemma_average`.

use permchar::catalog::group_by_name;
use permchar::{check_lemma_all, check_lemma_avg, perm_character, Permutation};

fn main() -> permchar::Result<()> {
    let group = group_by_name("S4")?;
    let u = group.subgroup(&[Permutation::from_cycles("(1 2)", 4)?])?;
    let n = group.subgroup(&[
        Permutation::from_cycles("(1 2)(3 4)", 4)?,
        Permutation::from_cycles("(1 3)(2 4)", 4)?,
    ])?;
    assert!(group.is_normal(&n)?);

    let un = group.subgroup_product(&u, &n)?;
    println!("group {}", group.label());
    println!("U  = {} (order {})", u.label(), u.order());
    println!("N  = {} (order {})", n.label(), n.order());
    println!("UN = {} (order {})", un.label(), un.order());

    let chi_u = perm_character(&group, &u)?;
    let chi_un = perm_character(&group, &un)?;
    println!();
    println!("one class representative per row:");
    for (c, (rep, _)) in group.conjugacy_classes().iter().enumerate() {
        let check = check_lemma_avg(&group, &u, &n, rep)?;
        println!(
            "  g = {:12}  χ_U(g) = {:2}  χ_UN(g) = {:2}  Σ χ_U(g·n) = {:2}  average = {}",
            rep.to_string(),
            chi_u.value_on_class(c),
            chi_un.value_on_class(c),
            check.rhs_numerator,
            check.rhs,
        );
        assert!(check.holds);
        assert_eq!(check.lhs, chi_un.value_on_class(c));
    }

    // the same identity, checked at every class (and, for a group this
    // small, at every single element behind the scenes)
    let checks = check_lemma_all(&group, &u, &n)?;
    assert!(checks.iter().all(|c| c.holds));
    println!();
    println!(
        "averaging identity holds at all {} classes of {}",
        checks.len(),
        group.label()
    );
    Ok(())
}
