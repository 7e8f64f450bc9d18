//! Permutation characters: for a subgroup `U ≤ G`, the class function
//! counting the right cosets of `U` fixed by each group element.
//!
//! Values are stored per conjugacy class (class 0 is the identity's, so
//! the degree of the character is always `values()[0]`).

use crate::action::CosetSpace;
use crate::error::{Error, Result};
use crate::group::{PermGroup, SubgroupHandle};
use crate::perm::Permutation;

/// The character of a group acting on the right cosets of a subgroup.
#[derive(Clone)]
pub struct PermutationCharacter {
    group: PermGroup,
    values: Vec<i64>,
}

/// Computes the permutation character of `group` on the right cosets of
/// `u`.
pub fn perm_character(group: &PermGroup, u: &SubgroupHandle) -> Result<PermutationCharacter> {
    let space = CosetSpace::right_cosets(group, u)?;
    let hom = space.action();
    let values = group
        .class_reps()
        .map(|rep| hom.fixed_points(rep).map(|n| n as i64))
        .collect::<Result<Vec<i64>>>()?;
    Ok(PermutationCharacter {
        group: group.clone(),
        values,
    })
}

impl PermutationCharacter {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// One value per conjugacy class, in class order.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The character's value at the identity: the index of the subgroup.
    pub fn degree(&self) -> i64 {
        self.values[0]
    }

    pub fn value_on_class(&self, c: usize) -> i64 {
        self.values[c]
    }

    /// The value at an arbitrary element of the group.
    pub fn value(&self, g: &Permutation) -> Result<i64> {
        Ok(self.values[self.group.class_index_of(g)?])
    }

    /// Whether two characters of the same group agree everywhere.
    pub fn equal(&self, other: &PermutationCharacter) -> Result<bool> {
        if !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(self.values == other.values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(text: &str, degree: usize) -> Permutation {
        Permutation::from_cycles(text, degree).unwrap()
    }

    fn c4() -> PermGroup {
        PermGroup::from_generators(4, vec![cyc("(1 2 3 4)", 4)]).unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::from_generators(3, vec![cyc("(1 2)", 3), cyc("(1 2 3)", 3)]).unwrap()
    }

    /// Independent route to the same class function: the count
    /// `|{x in G : x g x^-1 in U}| / |U|` never mentions cosets at all.
    fn oracle_value(group: &PermGroup, u: &SubgroupHandle, g: &Permutation) -> i64 {
        let hits = group
            .elements()
            .iter()
            .filter(|x| u.contains(&x.mul(g).mul(&x.inverse())))
            .count();
        assert_eq!(hits % u.order(), 0);
        (hits / u.order()) as i64
    }

    #[test]
    fn regular_character_of_c4() {
        let g = c4();
        let chi = perm_character(&g, &g.trivial_subgroup()).unwrap();
        assert_eq!(chi.values(), &[4, 0, 0, 0]);
        assert_eq!(chi.degree(), 4);
    }

    #[test]
    fn character_of_c4_on_cosets_of_its_center() {
        let g = c4();
        let n = g.subgroup(&[cyc("(1 3)(2 4)", 4)]).unwrap();
        let chi = perm_character(&g, &n).unwrap();
        // classes in element order: e, x, x^2, x^3
        assert_eq!(chi.values(), &[2, 0, 2, 0]);
        assert_eq!(chi.value(&cyc("(1 3)(2 4)", 4)).unwrap(), 2);
        assert_eq!(chi.value(&cyc("(1 4 3 2)", 4)).unwrap(), 0);
    }

    #[test]
    fn character_of_sym3_on_cosets_of_a_transposition_subgroup() {
        let g = s3();
        let u = g.subgroup(&[cyc("(1 2)", 3)]).unwrap();
        let chi = perm_character(&g, &u).unwrap();
        assert_eq!(chi.values(), &[3, 1, 0]);
        // value() answers for any member of a class, not just the rep
        assert_eq!(chi.value(&cyc("(1 3)", 3)).unwrap(), 1);
        assert_eq!(chi.value(&cyc("(1 3 2)", 3)).unwrap(), 0);
    }

    #[test]
    fn matches_the_conjugation_counting_oracle() {
        let s3 = s3();
        let c4 = c4();
        let cases: Vec<(PermGroup, SubgroupHandle)> = vec![
            (s3.clone(), s3.subgroup(&[cyc("(1 2)", 3)]).unwrap()),
            (s3.clone(), s3.subgroup(&[cyc("(1 2 3)", 3)]).unwrap()),
            (s3.clone(), s3.trivial_subgroup()),
            (s3.clone(), s3.full_subgroup()),
            (c4.clone(), c4.subgroup(&[cyc("(1 3)(2 4)", 4)]).unwrap()),
        ];
        for (g, u) in &cases {
            let chi = perm_character(g, u).unwrap();
            for c in 0..g.class_count() {
                assert_eq!(chi.value_on_class(c), oracle_value(g, u, g.class_rep(c)));
            }
        }
    }

    #[test]
    fn transitivity_shows_up_as_an_average_of_one() {
        // the mean of a transitive permutation character over the group is 1
        for (g, u) in [
            (s3(), s3().subgroup(&[cyc("(1 2)", 3)]).unwrap()),
            (c4(), c4().subgroup(&[cyc("(1 3)(2 4)", 4)]).unwrap()),
        ] {
            let chi = perm_character(&g, &u).unwrap();
            let total: i64 = (0..g.class_count())
                .map(|c| chi.value_on_class(c) * g.class_members(c).count() as i64)
                .sum();
            assert_eq!(total, g.order() as i64);
        }
    }

    #[test]
    fn equality_is_valuewise_and_group_checked() {
        let g = s3();
        let u = g.subgroup(&[cyc("(1 2)", 3)]).unwrap();
        let v = g.subgroup(&[cyc("(2 3)", 3)]).unwrap();
        let chi_u = perm_character(&g, &u).unwrap();
        let chi_v = perm_character(&g, &v).unwrap();
        assert!(chi_u.equal(&chi_v).unwrap());
        let chi_triv = perm_character(&g, &g.trivial_subgroup()).unwrap();
        assert!(!chi_u.equal(&chi_triv).unwrap());
        let other = c4();
        let chi_other = perm_character(&other, &other.trivial_subgroup()).unwrap();
        assert_eq!(chi_u.equal(&chi_other).unwrap_err(), Error::GroupMismatch);
    }
}
