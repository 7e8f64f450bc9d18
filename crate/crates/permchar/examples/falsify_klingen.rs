//! A coset character that is positive after absorbing a normal subgroup
//! but zero before.
//!
//! One might hope that whenever `χ_UN(σ) > 0` for a normal subgroup `N`,
//! the element `σ` could be adjusted within `σN` so that `χ_U` is already
//! positive, letting a positivity argument proceed one step at a time.
//! The smallest counterexample lives in the cyclic group of order four:
//! with `U` trivial and `N` generated by the square of a generator, the
//! involution is fixed-point-free on cosets of `U` (the regular action)
//! but fixes two of the four cosets of `UN = N`.
//!
//! Run with `cargo run --example falsify_klingen`.

use permchar::catalog::group_by_name;
use permchar::{falsify_klingen_step, perm_character};

fn main() -> permchar::Result<()> {
    let group = group_by_name("C4")?;
    let x = group.generators()[0].clone();
    let u = group.trivial_subgroup();
    let n = group.subgroup(&[x.compose(&x)?])?;

    println!("group   {}", group.label());
    println!("U       {} (order {})", u.label(), u.order());
    println!("N       {} (order {})", n.label(), n.order());

    let un = group.subgroup_product(&u, &n)?;
    let chi_u = perm_character(&group, &u)?;
    let chi_un = perm_character(&group, &un)?;
    println!();
    println!("class representatives and character values:");
    for (c, (rep, _)) in group.conjugacy_classes().iter().enumerate() {
        println!(
            "  {:12}  χ_U = {:2}   χ_UN = {:2}",
            rep.to_string(),
            chi_u.value_on_class(c),
            chi_un.value_on_class(c),
        );
    }

    let witness = falsify_klingen_step(&group, &u, &n)?
        .expect("the regular action of C4 always yields a witness");
    println!();
    println!(
        "witness σ = {}: χ_UN(σ) = {} > 0 while χ_U(σ) = {}",
        witness.element, witness.char_un, witness.char_u
    );
    println!("no element of σN is fixed on cosets of U, yet σ fixes cosets of UN");

    assert_eq!(witness.element, "(1 3)(2 4)");
    assert_eq!((witness.char_un, witness.char_u), (2, 0));
    Ok(())
}
