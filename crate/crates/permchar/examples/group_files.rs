//! The plain-text group file format and the command-line argument
//! grammar for subgroups and elements.
//!
//! A group file gives an optional `name`, a mandatory `degree`, and one
//! `gen` line per generator in cycle notation; `#` starts a comment.
//! Rendering a parsed group back out produces a canonical form with the
//! generators regenerated greedily from the element list, so any two
//! files describing the same group render identically.
//!
//! Run with `cargo run --example group_files`.

use permchar::groupfile::{
    parse_element_arg, parse_group_file, parse_subgroup_arg, render_group_file,
};

fn main() -> permchar::Result<()> {
    let text = "\
# the dihedral group of order 8, written with redundant generators
name D4
degree 4
gen (1 2 3 4)
gen (1 3)          # a reflection
gen (1 3)(2 4)     # redundant: the square of the rotation
";
    let group = parse_group_file(text)?;
    println!("parsed {} of order {}", group.label(), group.order());

    println!();
    println!("canonical form:");
    print!("{}", render_group_file(&group));

    // subgroup arguments are semicolon-separated generator lists
    let u = parse_subgroup_arg(&group, "(1 3);(2 4)")?;
    println!();
    println!("subgroup {} has order {}", u.label(), u.order());

    let g = parse_element_arg(&group, "(1 2 3 4)")?;
    println!("element {} has order {}", g, g.order());

    // parse errors carry the offending line number
    let bad = "degree 4\ngen (1 5)\n";
    match parse_group_file(bad) {
        Err(e) => println!("\nrejected bad file: {}", e),
        Ok(_) => unreachable!("point 5 exceeds degree 4"),
    }

    // an element outside the group is rejected up front
    assert!(parse_element_arg(&group, "(1 2)").is_err());
    Ok(())
}
