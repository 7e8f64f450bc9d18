//! A base and strong generating set for computing group orders without
//! enumerating elements, built by the Schreier–Sims procedure.
//!
//! This exists as a second, independent route to a group's order: the
//! order is the product of the orbit sizes along the chain, whereas
//! [`PermGroup`](crate::group::PermGroup) counts elements directly.
//! Agreement between the two is a strong self-check.

use crate::perm::Permutation;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, VecDeque};

/// One level of the chain: a base point, the generators of the current
/// stabilizer, and a transversal mapping each orbit point to an element
/// carrying the base point there.
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    transversal: BTreeMap<usize, Permutation>,
}

/// A stabilizer chain for a permutation group on `0..degree`.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds a chain for the group generated by `generators`.
    pub fn from_generators(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            assert_eq!(
                g.degree(),
                degree,
                "all generators must act on the same points"
            );
        }
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return chain;
        }

        // Pick base points until every generator moves one of them.
        for g in &gens {
            if chain.levels.iter().all(|l| g.image(l.base) == l.base) {
                chain.push_level(min_moved_point(g));
            }
        }
        // A generator belongs to every level whose earlier base points it
        // fixes; level 0 holds them all.
        for i in 0..chain.levels.len() {
            chain.levels[i].gens = gens
                .iter()
                .filter(|g| chain.fixes_prefix(g, i))
                .cloned()
                .collect();
            chain.recompute_transversal(i);
        }
        chain.verify();
        chain
    }

    /// The group order: the product of the orbit sizes along the chain.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.transversal.len() as u128)
            .product()
    }

    fn push_level(&mut self, base: usize) {
        self.levels.push(Level {
            base,
            gens: Vec::new(),
            transversal: BTreeMap::new(),
        });
    }

    /// Whether `g` fixes the base points of every level before `level`.
    fn fixes_prefix(&self, g: &Permutation, level: usize) -> bool {
        self.levels[..level]
            .iter()
            .all(|l| g.image(l.base) == l.base)
    }

    /// Recomputes the orbit of the level's base point under the level's
    /// generators, storing one transversal element per orbit point.
    fn recompute_transversal(&mut self, level: usize) {
        let base = self.levels[level].base;
        let gens = self.levels[level].gens.clone();
        let mut transversal = BTreeMap::new();
        transversal.insert(base, Permutation::identity(self.degree));
        let mut queue = VecDeque::from([base]);
        while let Some(p) = queue.pop_front() {
            let u_p = transversal[&p].clone();
            for s in &gens {
                let q = s.image(p);
                if let Entry::Vacant(slot) = transversal.entry(q) {
                    slot.insert(u_p.mul(s));
                    queue.push_back(q);
                }
            }
        }
        self.levels[level].transversal = transversal;
    }

    /// Strips transversal parts from `h` through levels `from..`, returning
    /// the level where stripping stopped and whatever residue is left.  A
    /// stop level equal to the chain length means the residue fixes every
    /// current base point.
    fn sift(&self, from: usize, h: Permutation) -> (usize, Permutation) {
        let mut residue = h;
        let mut level = from;
        while level < self.levels.len() {
            if residue.is_identity() {
                break;
            }
            let target = residue.image(self.levels[level].base);
            match self.levels[level].transversal.get(&target) {
                Some(u) => {
                    residue = residue.mul(&u.inverse());
                    level += 1;
                }
                None => break,
            }
        }
        (level, residue)
    }

    /// Checks every level's Schreier generators, deepest level first, until
    /// a full pass makes no change.  Afterwards, each level's transversal
    /// is a full coset transversal of the next level's group, which is what
    /// makes the order formula exact.
    fn verify(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut level = self.levels.len() - 1;
        loop {
            match self.verify_level(level) {
                Some(resume) => level = resume,
                None => {
                    if level == 0 {
                        return;
                    }
                    level -= 1;
                }
            }
        }
    }

    /// Sifts every Schreier generator of `level` through the chain below.
    /// The first surviving residue is recorded as a new strong generator on
    /// each level between, and its resting level is returned so that
    /// verification can resume there.
    fn verify_level(&mut self, level: usize) -> Option<usize> {
        let points: Vec<usize> = self.levels[level].transversal.keys().copied().collect();
        let gens = self.levels[level].gens.clone();
        for p in points {
            let u_p = self.levels[level].transversal[&p].clone();
            for s in &gens {
                let q = s.image(p);
                let u_q = self.levels[level].transversal[&q].clone();
                let schreier = u_p.mul(s).mul(&u_q.inverse());
                if schreier.is_identity() {
                    continue;
                }
                let (stuck, residue) = self.sift(level + 1, schreier);
                if residue.is_identity() {
                    continue;
                }
                let resume = if stuck == self.levels.len() {
                    self.push_level(min_moved_point(&residue));
                    self.levels.len() - 1
                } else {
                    stuck
                };
                // The residue fixes every base point above its resting
                // level, so it strengthens each of those levels too.
                for m in (level + 1)..=resume {
                    self.levels[m].gens.push(residue.clone());
                    self.recompute_transversal(m);
                }
                return Some(resume);
            }
        }
        None
    }
}

fn min_moved_point(g: &Permutation) -> usize {
    (0..g.degree())
        .find(|&p| g.image(p) != p)
        .expect("a non-identity permutation moves some point")
}
