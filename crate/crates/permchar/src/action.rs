//! The action of a group on the right cosets of a subgroup, with orbit
//! and fixed-point queries phrased on coset indices.
//!
//! Cosets are numbered by their minimal member, so coset 0 is always the
//! subgroup itself and every index, representative, and orbit listing is
//! reproducible across runs.

use crate::error::{Error, Result};
use crate::group::{PermGroup, SubgroupHandle};
use crate::perm::Permutation;

/// The right cosets `Ux` of a subgroup, with a total point-to-coset map.
pub struct CosetSpace {
    group: PermGroup,
    subgroup: SubgroupHandle,
    /// Minimal member of each coset, ascending; `reps[0]` is the identity.
    reps: Vec<Permutation>,
    /// Element index (in the parent's sorted list) -> coset index.
    coset_of: Vec<usize>,
}

impl std::fmt::Debug for CosetSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CosetSpace({} cosets of {} in {})",
            self.size(),
            self.subgroup.label(),
            self.group.label()
        )
    }
}

/// A view of a [`CosetSpace`] as a homomorphism into the symmetric group
/// on its coset indices.
pub struct ActionHom<'a> {
    space: &'a CosetSpace,
}

impl CosetSpace {
    /// Decomposes `group` into right cosets of `subgroup`.
    pub fn right_cosets(group: &PermGroup, subgroup: &SubgroupHandle) -> Result<Self> {
        group.ensure_subgroup(subgroup)?;
        let unassigned = usize::MAX;
        let mut coset_of = vec![unassigned; group.order()];
        let mut reps: Vec<Permutation> = Vec::new();
        for i in 0..group.order() {
            if coset_of[i] != unassigned {
                continue;
            }
            let rep = &group.elements()[i];
            let c = reps.len();
            for u in subgroup.elements() {
                let member = u.mul(rep);
                let idx = group
                    .element_index(&member)
                    .expect("a coset member lies in the group");
                debug_assert_eq!(coset_of[idx], unassigned);
                coset_of[idx] = c;
            }
            reps.push(rep.clone());
        }
        Ok(CosetSpace {
            group: group.clone(),
            subgroup: subgroup.clone(),
            reps,
            coset_of,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &SubgroupHandle {
        &self.subgroup
    }

    /// Number of cosets, i.e. the index of the subgroup.
    pub fn size(&self) -> usize {
        self.reps.len()
    }

    /// Minimal member of coset `i`.
    pub fn rep(&self, i: usize) -> &Permutation {
        &self.reps[i]
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    /// Index of the coset containing `p`.
    pub fn coset_index_of(&self, p: &Permutation) -> Result<usize> {
        let idx = self.group.element_index(p).ok_or(Error::NotInGroup)?;
        Ok(self.coset_of[idx])
    }

    /// The action homomorphism on this space.
    pub fn action(&self) -> ActionHom<'_> {
        ActionHom { space: self }
    }
}

impl<'a> ActionHom<'a> {
    pub fn space(&self) -> &CosetSpace {
        self.space
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.space.size()
    }

    fn point_image(&self, point: usize, g: &Permutation) -> usize {
        let target = self.space.reps[point].mul(g);
        let idx = self
            .space
            .group
            .element_index(&target)
            .expect("the group is closed under products");
        self.space.coset_of[idx]
    }

    /// The permutation of coset indices induced by `g` (`Ux ↦ Uxg`).
    pub fn image(&self, g: &Permutation) -> Result<Permutation> {
        if self.space.group.element_index(g).is_none() {
            return Err(Error::NotInGroup);
        }
        let images: Vec<usize> = (0..self.degree()).map(|i| self.point_image(i, g)).collect();
        Ok(Permutation::from_images(images).expect("a group action permutes the points"))
    }

    /// Number of cosets fixed by `g`.
    pub fn fixed_points(&self, g: &Permutation) -> Result<usize> {
        if self.space.group.element_index(g).is_none() {
            return Err(Error::NotInGroup);
        }
        Ok((0..self.degree())
            .filter(|&i| self.point_image(i, g) == i)
            .count())
    }

    fn generator_images(&self, sub: &SubgroupHandle) -> Result<Vec<Permutation>> {
        sub.generators().iter().map(|g| self.image(g)).collect()
    }

    fn orbit_of(point: usize, images: &[Permutation]) -> Vec<usize> {
        let mut orbit = vec![point];
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(point);
        let mut cursor = 0;
        while cursor < orbit.len() {
            let p = orbit[cursor];
            cursor += 1;
            for img in images {
                let q = img.image(p);
                if seen.insert(q) {
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbits of a subgroup on the cosets, each sorted ascending, ordered
    /// by minimal point.
    pub fn orbits_of_subgroup(&self, sub: &SubgroupHandle) -> Result<Vec<Vec<usize>>> {
        self.space.group.ensure_subgroup(sub)?;
        let images = self.generator_images(sub)?;
        let mut assigned = vec![false; self.degree()];
        let mut orbits = Vec::new();
        for start in 0..self.degree() {
            if assigned[start] {
                continue;
            }
            let orbit = Self::orbit_of(start, &images);
            for &p in &orbit {
                assigned[p] = true;
            }
            orbits.push(orbit);
        }
        Ok(orbits)
    }

    /// Counts the orbits of `h` on the cosets that are single orbits of
    /// `n` as well (they do not break apart when restricting to `n`);
    /// requires `n` to be normal in `h`.
    pub fn nonsplit_orbit_count(&self, h: &SubgroupHandle, n: &SubgroupHandle) -> Result<usize> {
        self.space.group.ensure_subgroup(h)?;
        self.space.group.ensure_subgroup(n)?;
        if !normal_in(n, h) {
            return Err(Error::NotNormalInH);
        }
        let h_orbits = self.orbits_of_subgroup(h)?;
        let n_images = self.generator_images(n)?;
        let mut count = 0;
        for orbit in &h_orbits {
            let n_orbit = Self::orbit_of(orbit[0], &n_images);
            if n_orbit.len() == orbit.len() {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// True when `n` is a subgroup of `h` normalized by all of `h`.
fn normal_in(n: &SubgroupHandle, h: &SubgroupHandle) -> bool {
    if !n.is_subgroup_of(h) {
        return false;
    }
    h.generators().iter().all(|g| {
        let ginv = g.inverse();
        n.elements()
            .iter()
            .all(|x| n.contains(&g.mul(x).mul(&ginv)))
    })
}
