//! A catalog of named permutation groups — cyclic, elementary abelian,
//! dihedral, quaternion, symmetric, alternating, and the simple group of
//! order 168 — plus `x`-separated direct products of any of them.
//!
//! Every build is checked against the order the name promises, so a bad
//! generator word in this file cannot silently ship a wrong group.

use crate::error::{Error, Result};
use crate::group::{direct_product_capped, PermGroup, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;
use serde::Serialize;

/// The named entries, smallest families first; products are not listed
/// because they are formed on demand from these.
pub const CATALOG_NAMES: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14", "C15",
    "C16", "C2^2", "C2^3", "C2^4", "D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10",
    "D11", "D12", "Q8", "S1", "S2", "S3", "S4", "S5", "S6", "A1", "A2", "A3", "A4", "A5", "A6",
    "PSL(3,2)",
];

/// One row of the catalog listing.
#[derive(Clone, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub order: usize,
}

/// Builds the named group (default order cap).
pub fn group_by_name(name: &str) -> Result<PermGroup> {
    group_by_name_capped(name, DEFAULT_ORDER_CAP)
}

/// Builds the named group, failing with [`Error::OrderCapExceeded`] when
/// the name promises more elements than `cap`.
pub fn group_by_name_capped(name: &str, cap: usize) -> Result<PermGroup> {
    if name.contains('x') {
        let mut parts = name.split('x');
        let first = parts.next().expect("split yields at least one part");
        let mut product = resolve_atom(first, cap)?;
        for part in parts {
            let factor = resolve_atom(part, cap)?;
            product = direct_product_capped(&product, &factor, cap)?;
        }
        return Ok(product.with_name(name.to_string()));
    }
    resolve_atom(name, cap)
}

/// Every named entry as a `(name, degree, order)` row, in catalog order.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    CATALOG_NAMES
        .iter()
        .map(|name| {
            let g = group_by_name(name).expect("every catalog name builds");
            CatalogEntry {
                name: (*name).to_string(),
                degree: g.degree(),
                order: g.order(),
            }
        })
        .collect()
}

/// All named catalog groups of order at most `max`, in catalog order.
pub fn universe_by_max_order(max: usize) -> Result<Vec<PermGroup>> {
    let mut universe = Vec::new();
    for name in CATALOG_NAMES {
        let g = group_by_name(name)?;
        if g.order() <= max {
            universe.push(g);
        }
    }
    Ok(universe)
}

fn unknown(name: &str) -> Error {
    Error::UnknownName {
        name: name.to_string(),
    }
}

fn resolve_atom(name: &str, cap: usize) -> Result<PermGroup> {
    let (degree, generators, expected) = generators_for(name)?;
    if expected > cap {
        return Err(Error::OrderCapExceeded {
            cap,
            reached: expected,
        });
    }
    let group = PermGroup::build(degree, generators, cap, Some(name.to_string()))?;
    if group.order() != expected {
        return Err(Error::CatalogOrderMismatch {
            name: name.to_string(),
            expected,
            actual: group.order(),
        });
    }
    Ok(group)
}

/// Degree, generator list, and promised order for a non-product name.
fn generators_for(name: &str) -> Result<(usize, Vec<Permutation>, usize)> {
    if name == "Q8" {
        let gens = vec![
            Permutation::from_cycles("(1 3 2 4)(5 8 6 7)", 8).expect("fixed generator word"),
            Permutation::from_cycles("(1 5 2 6)(3 7 4 8)", 8).expect("fixed generator word"),
        ];
        return Ok((8, gens, 8));
    }
    if name == "PSL(3,2)" {
        let gens = vec![
            Permutation::from_cycles("(1 4 2)(3 5 6)", 7).expect("fixed generator word"),
            Permutation::from_cycles("(2 6)(3 7)", 7).expect("fixed generator word"),
        ];
        return Ok((7, gens, 168));
    }
    if let Some(rest) = name.strip_prefix("C2^") {
        let k: usize = rest.parse().map_err(|_| unknown(name))?;
        if k < 2 {
            return Err(unknown(name));
        }
        let gens = (0..k).map(|i| swap(2 * k, 2 * i, 2 * i + 1)).collect();
        let expected = 1usize.checked_shl(k as u32).ok_or_else(|| unknown(name))?;
        return Ok((2 * k, gens, expected));
    }
    let mut chars = name.chars();
    let family = chars.next().ok_or_else(|| unknown(name))?;
    let rest = chars.as_str();
    let n: usize = match rest.parse() {
        Ok(n) if n >= 1 && !rest.starts_with('0') && !rest.starts_with('+') => n,
        _ => return Err(unknown(name)),
    };
    match family {
        'C' => {
            let gens = if n == 1 {
                vec![]
            } else {
                vec![full_cycle(n, 0, n)]
            };
            Ok((n, gens, n))
        }
        'S' => {
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(swap(n, 0, 1));
            }
            if n >= 3 {
                gens.push(full_cycle(n, 0, n));
            }
            Ok((n, gens, factorial(n)?))
        }
        'A' => {
            let mut gens = Vec::new();
            if n >= 3 {
                gens.push(three_cycle(n));
            }
            if n >= 4 {
                // adjoin an even long cycle: the n-cycle when n is odd,
                // otherwise the (n-1)-cycle moving points 2..=n
                if n % 2 == 1 {
                    gens.push(full_cycle(n, 0, n));
                } else {
                    gens.push(full_cycle(n, 1, n));
                }
            }
            let expected = if n <= 2 { 1 } else { factorial(n)? / 2 };
            Ok((n, gens, expected))
        }
        'D' => match n {
            1 => Ok((2, vec![swap(2, 0, 1)], 2)),
            2 => Ok((4, vec![swap(4, 0, 1), swap(4, 2, 3)], 4)),
            _ => {
                let reflection =
                    Permutation::from_images((0..n).rev().collect()).expect("an involution");
                Ok((n, vec![full_cycle(n, 0, n), reflection], 2 * n))
            }
        },
        _ => Err(unknown(name)),
    }
}

/// The cycle moving points `from..to` (0-based) one step forward.
fn full_cycle(degree: usize, from: usize, to: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    images[from..to].rotate_left(1);
    Permutation::from_images(images).expect("a cycle is a bijection")
}

fn swap(degree: usize, a: usize, b: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    images.swap(a, b);
    Permutation::from_images(images).expect("a swap is a bijection")
}

fn three_cycle(degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    images[0] = 1;
    images[1] = 2;
    images[2] = 0;
    Permutation::from_images(images).expect("a cycle is a bijection")
}

fn factorial(n: usize) -> Result<usize> {
    let mut acc = 1usize;
    for k in 2..=n {
        acc = acc.checked_mul(k).ok_or(Error::OrderCapExceeded {
            cap: DEFAULT_ORDER_CAP,
            reached: usize::MAX,
        })?;
    }
    Ok(acc)
}
