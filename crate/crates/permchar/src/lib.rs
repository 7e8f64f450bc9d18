//! Exact, integer-arithmetic verification of how the permutation
//! character of a finite group `G` on cosets of a subgroup `U` relates to
//! the one on cosets of `UN`, for `N` normal in `G`.
//!
//! Three executable facts sit at the center:
//!
//! * **Averaging** — `χ_UN(g) = (1/|N|) Σ_{n∈N} χ_U(g·n)` for every
//!   `g ∈ G` ([`verify::check_lemma_avg`]).
//! * **Orbit counting** — for `H = <N, g>` acting on a coset space, the
//!   same average equals the number of `H`-orbits that stay in one piece
//!   as `N`-orbits ([`verify::check_fgs`]); the two facts chain into
//!   three independent routes to `χ_UN(g)`
//!   ([`verify::check_lemma_via_fgs`]).
//! * **Character transfer** — `χ_U = χ_V` forces `χ_UN = χ_VN`
//!   ([`verify::check_theorem`]). The transfer cannot be proved pointwise
//!   from positivity: `χ_UN(σ) > 0` does not imply `χ_U(σ) > 0`, and
//!   [`verify::falsify_klingen_step`] finds the smallest counterexample
//!   already in the cyclic group of order four.
//!
//! The statement has real content only where non-conjugate subgroups
//! share a character; [`verify::gassmann_pairs`] searches a group for
//! such pairs (the classical example of order 168 is in the
//! [`catalog`]).
//!
//! Groups are eagerly enumerated, every quotient is kept as an exact
//! fraction, and all listing orders are canonical, so every run of every
//! check is reproducible bit for bit.
//!
//! # Computing a character
//!
//! ```
//! use permchar::catalog::group_by_name;
//! use permchar::character::perm_character;
//! use permchar::perm::Permutation;
//!
//! let g = group_by_name("S3")?;
//! let u = g.subgroup(&[Permutation::from_cycles("(1 2)", 3)?])?;
//! let chi = perm_character(&g, &u)?;
//! // classes in order: identity, transpositions, 3-cycles
//! assert_eq!(chi.values(), &[3, 1, 0]);
//! # Ok::<(), permchar::error::Error>(())
//! ```
//!
//! # Falsifying the pointwise implication
//!
//! ```
//! use permchar::catalog::group_by_name;
//! use permchar::perm::Permutation;
//! use permchar::verify::falsify_klingen_step;
//!
//! let g = group_by_name("C4")?;
//! let u = g.trivial_subgroup();
//! let n = g.subgroup(&[Permutation::from_cycles("(1 3)(2 4)", 4)?])?;
//! let w = falsify_klingen_step(&g, &u, &n)?.expect("C4 defeats the implication");
//! assert_eq!(w.element, "(1 3)(2 4)");
//! assert_eq!((w.char_un, w.char_u), (2, 0));
//! # Ok::<(), permchar::error::Error>(())
//! ```
//!
//! # Module map
//!
//! * [`perm`] — permutations as image tables, cycle notation in and out.
//! * [`group`] — eagerly enumerated groups, conjugacy classes, subgroup
//!   handles, and the subgroup lattice.
//! * [`stabchain`] — an independent group-order oracle via stabilizer
//!   chains.
//! * [`action`] — right-coset spaces and their orbit and fixed-point
//!   queries.
//! * [`character`] — permutation characters as exact class functions.
//! * [`verify`] — the checks, the falsification search, the
//!   equal-character pair search, and the exhaustive sweep.
//! * [`catalog`] — named groups (`C*`, `D*`, `S*`, `A*`, `Q8`,
//!   `C2^k`, `PSL(3,2)`) and `x`-products of them.
//! * [`groupfile`] — a plain-text group format and argument parsers.
//! * [`report`] — stable text and JSON rendering of results.
//! * [`cli`] — the `permchar` command-line tool.

pub mod action;
pub mod catalog;
pub mod character;
pub mod cli;
pub mod error;
pub mod group;
pub mod groupfile;
pub mod perm;
pub mod report;
pub mod stabchain;
pub mod verify;

pub use action::{ActionHom, CosetSpace};
pub use character::{perm_character, PermutationCharacter};
pub use error::{Error, Result};
pub use group::{direct_product, PermGroup, SubgroupHandle};
pub use perm::Permutation;
pub use stabchain::StabilizerChain;
pub use verify::{
    check_fgs, check_lemma_all, check_lemma_avg, check_lemma_via_fgs, check_theorem,
    check_theorem_all, falsify_klingen_step, gassmann_pairs, sweep, Fraction, SweepCaps,
    SweepReport,
};
