//! Finite permutation groups with eagerly enumerated elements, conjugacy
//! classes, and a subgroup-handle type for everything below the group.
//!
//! Groups at this scale (a few hundred thousand elements at most) are
//! cheapest to handle fully materialized: the element list is sorted once
//! and every later question — membership, class of an element, coset
//! decomposition, witness search — becomes a binary search or a linear
//! scan in a fixed, reproducible order.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

/// Default ceiling for group closure; exceeding it aborts construction.
pub const DEFAULT_ORDER_CAP: usize = 200_000;

/// Default ceiling on the order of a group whose full subgroup lattice is
/// enumerated.
pub const DEFAULT_SUBGROUP_CAP: usize = 48;

#[derive(Clone)]
struct GroupInner {
    name: Option<String>,
    degree: usize,
    generators: Vec<Permutation>,
    /// All elements, sorted ascending in the lexicographic image order.
    elements: Vec<Permutation>,
    /// Conjugacy classes as sorted element-index lists; `classes[c][0]`
    /// is the minimal member and serves as the class representative.
    classes: Vec<Vec<usize>>,
    /// Element index -> index of its conjugacy class.
    class_of: Vec<usize>,
}

/// A finite permutation group, immutable after construction and cheap to
/// clone (the data sits behind an `Arc`).
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<GroupInner>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermGroup({})", self.label())
    }
}

/// A subgroup of a [`PermGroup`], carrying its parent, a canonical
/// generating sequence, and its full sorted element list.
#[derive(Clone)]
pub struct SubgroupHandle {
    parent: PermGroup,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl std::fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SubgroupHandle({} in {})",
            self.label(),
            self.parent.label()
        )
    }
}

/// Closes `generators` under products. Returns the sorted element list or
/// [`Error::OrderCapExceeded`] once more than `cap` elements appear.
pub(crate) fn close_under_products(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>> {
    let identity = Permutation::identity(degree);
    let mut set: HashSet<Permutation> = HashSet::new();
    let mut queue: VecDeque<Permutation> = VecDeque::new();
    set.insert(identity.clone());
    queue.push_back(identity);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = p.mul(g);
            if !set.contains(&q) {
                if set.len() >= cap {
                    return Err(Error::OrderCapExceeded {
                        cap,
                        reached: set.len() + 1,
                    });
                }
                set.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    let mut elements: Vec<Permutation> = set.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

/// Rebuilds a small canonical generating sequence for a closed element
/// set: walk the sorted elements and keep each one not already generated.
fn canonical_generators(elements: &[Permutation]) -> Vec<Permutation> {
    let degree = elements[0].degree();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut closure = vec![Permutation::identity(degree)];
    for e in elements {
        if closure.binary_search(e).is_ok() {
            continue;
        }
        gens.push(e.clone());
        closure = close_under_products(degree, &gens, elements.len())
            .expect("closure of a subset of a closed set stays within it");
    }
    gens
}

/// True when `sub` (sorted) is a subset of `sup` (sorted).
fn is_sorted_subset(sub: &[Permutation], sup: &[Permutation]) -> bool {
    if sub.len() > sup.len() {
        return false;
    }
    sub.iter().all(|e| sup.binary_search(e).is_ok())
}

impl PermGroup {
    /// Builds the group generated by `generators` on `0..degree`,
    /// enumerating every element (default order cap).
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::build(degree, generators, DEFAULT_ORDER_CAP, None)
    }

    /// [`from_generators`](Self::from_generators) with an explicit order
    /// cap.
    pub fn from_generators_capped(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        Self::build(degree, generators, cap, None)
    }

    pub(crate) fn build(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
        name: Option<String>,
    ) -> Result<Self> {
        assert!(degree >= 1, "a permutation group needs at least one point");
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let elements = close_under_products(degree, &generators, cap)?;
        let (classes, class_of) = conjugacy_partition(&elements, &generators);
        Ok(PermGroup {
            inner: Arc::new(GroupInner {
                name,
                degree,
                generators,
                elements,
                classes,
                class_of,
            }),
        })
    }

    pub(crate) fn with_name(mut self, name: String) -> Self {
        Arc::make_mut(&mut self.inner).name = Some(name);
        self
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    /// The generators exactly as given at construction.
    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    /// All elements, sorted ascending.
    pub fn elements(&self) -> &[Permutation] {
        &self.inner.elements
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    /// A short printable identity: the name when there is one, otherwise
    /// degree and order.
    pub fn label(&self) -> String {
        match &self.inner.name {
            Some(n) => n.clone(),
            None => format!("group(degree={}, order={})", self.degree(), self.order()),
        }
    }

    /// Position of `p` in the sorted element list, if it is a member.
    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.degree() {
            return None;
        }
        self.inner.elements.binary_search(p).ok()
    }

    /// Membership test. Errors on degree mismatch rather than answering a
    /// different question than the one asked.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: p.degree(),
            });
        }
        Ok(self.inner.elements.binary_search(p).is_ok())
    }

    /// True when both handles refer to the same group (same allocation or
    /// structurally equal).
    pub fn same_as(&self, other: &PermGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.degree() == other.degree() && self.inner.elements == other.inner.elements)
    }

    pub fn class_count(&self) -> usize {
        self.inner.classes.len()
    }

    /// Minimal member of class `c`.
    pub fn class_rep(&self, c: usize) -> &Permutation {
        &self.inner.elements[self.inner.classes[c][0]]
    }

    /// Class representatives in class order (class 0 is the identity's).
    pub fn class_reps(&self) -> impl Iterator<Item = &Permutation> + '_ {
        (0..self.class_count()).map(|c| self.class_rep(c))
    }

    /// Members of class `c`, ascending.
    pub fn class_members(&self, c: usize) -> impl Iterator<Item = &Permutation> + '_ {
        self.inner.classes[c]
            .iter()
            .map(|&i| &self.inner.elements[i])
    }

    /// Class index of the element at position `i` in the element list.
    pub fn class_of_element_index(&self, i: usize) -> usize {
        self.inner.class_of[i]
    }

    /// Class index of an element.
    pub fn class_index_of(&self, p: &Permutation) -> Result<usize> {
        let i = self.element_index(p).ok_or(Error::NotInGroup)?;
        Ok(self.inner.class_of[i])
    }

    /// The full partition into conjugacy classes as
    /// `(representative, members)` pairs, classes ordered by their minimal
    /// member.
    pub fn conjugacy_classes(&self) -> Vec<(&Permutation, Vec<&Permutation>)> {
        (0..self.class_count())
            .map(|c| (self.class_rep(c), self.class_members(c).collect()))
            .collect()
    }

    pub(crate) fn ensure_subgroup(&self, u: &SubgroupHandle) -> Result<()> {
        if u.parent.same_as(self) {
            Ok(())
        } else {
            Err(Error::NotASubgroup)
        }
    }

    pub(crate) fn handle_from_elements(&self, elements: Vec<Permutation>) -> SubgroupHandle {
        let generators = canonical_generators(&elements);
        SubgroupHandle {
            parent: self.clone(),
            generators,
            elements,
        }
    }

    /// The subgroup generated by `generators`, all of which must be
    /// elements of this group.
    pub fn subgroup(&self, generators: &[Permutation]) -> Result<SubgroupHandle> {
        for g in generators {
            if self.element_index(g).is_none() {
                return Err(Error::NotInGroup);
            }
        }
        let elements = close_under_products(self.degree(), generators, self.order())?;
        Ok(self.handle_from_elements(elements))
    }

    /// The one-element subgroup.
    pub fn trivial_subgroup(&self) -> SubgroupHandle {
        self.handle_from_elements(vec![Permutation::identity(self.degree())])
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> SubgroupHandle {
        self.handle_from_elements(self.inner.elements.clone())
    }

    /// True when `g U g^-1 = U` for every generator `g` of this group
    /// (equivalently, for every element).
    pub fn is_normal(&self, u: &SubgroupHandle) -> Result<bool> {
        self.ensure_subgroup(u)?;
        for g in self.generators() {
            let ginv = g.inverse();
            for x in u.elements() {
                if !u.contains(&g.mul(x).mul(&ginv)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every subgroup, sorted by (order, element list). See
    /// [`subgroups_capped`](Self::subgroups_capped) for the algorithm.
    pub fn subgroups(&self) -> Result<Vec<SubgroupHandle>> {
        self.subgroups_capped(DEFAULT_SUBGROUP_CAP)
    }

    /// Every subgroup of a group of order at most `cap`.
    ///
    /// Every subgroup is the join of the cyclic subgroups of its elements,
    /// so the lattice is the closure of the cyclic subgroups under
    /// pairwise join; joins are computed by re-closing the union of two
    /// generating sequences.
    pub fn subgroups_capped(&self, cap: usize) -> Result<Vec<SubgroupHandle>> {
        if self.order() > cap {
            return Err(Error::SweepCapExceeded {
                cap,
                order: self.order(),
            });
        }
        let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
        // (elements, generating sequence) per subgroup found so far
        let mut found: Vec<(Vec<Permutation>, Vec<Permutation>)> = Vec::new();
        for e in self.elements() {
            let mut cyclic = vec![Permutation::identity(self.degree())];
            let mut power = e.clone();
            while !power.is_identity() {
                cyclic.push(power.clone());
                power = power.mul(e);
            }
            cyclic.sort_unstable();
            if seen.insert(cyclic.clone()) {
                let gens = if e.is_identity() {
                    vec![]
                } else {
                    vec![e.clone()]
                };
                found.push((cyclic, gens));
            }
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let (a_el, a_gens) = &found[i];
                let (b_el, b_gens) = &found[j];
                if is_sorted_subset(a_el, b_el) || is_sorted_subset(b_el, a_el) {
                    continue;
                }
                let mut gens = a_gens.clone();
                gens.extend_from_slice(b_gens);
                let join = close_under_products(self.degree(), &gens, self.order())
                    .expect("join of subgroups stays within the group");
                if seen.insert(join.clone()) {
                    found.push((join, gens));
                }
            }
            i += 1;
        }
        let mut subs: Vec<SubgroupHandle> = found
            .into_iter()
            .map(|(elements, _)| self.handle_from_elements(elements))
            .collect();
        subs.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
        Ok(subs)
    }

    /// Every normal subgroup, sorted like
    /// [`subgroups`](Self::subgroups).
    pub fn normal_subgroups(&self) -> Result<Vec<SubgroupHandle>> {
        self.normal_subgroups_capped(DEFAULT_SUBGROUP_CAP)
    }

    pub fn normal_subgroups_capped(&self, cap: usize) -> Result<Vec<SubgroupHandle>> {
        let subs = self.subgroups_capped(cap)?;
        let mut out = Vec::new();
        for u in subs {
            if self.is_normal(&u)? {
                out.push(u);
            }
        }
        Ok(out)
    }

    /// The smallest normal subgroup containing `seed`: close the seed
    /// under conjugation by the group's generators and under products, to
    /// a fixed point.
    pub fn normal_closure(&self, seed: &[Permutation]) -> Result<SubgroupHandle> {
        for s in seed {
            if self.element_index(s).is_none() {
                return Err(Error::NotInGroup);
            }
        }
        let gen_invs: Vec<(Permutation, Permutation)> = self
            .generators()
            .iter()
            .map(|g| (g.clone(), g.inverse()))
            .collect();
        let mut gens: Vec<Permutation> = seed.to_vec();
        let mut elements = close_under_products(self.degree(), &gens, self.order())?;
        loop {
            let mut new_gens: Vec<Permutation> = Vec::new();
            for x in &elements {
                for (g, ginv) in &gen_invs {
                    let c = g.mul(x).mul(ginv);
                    if elements.binary_search(&c).is_err() && !new_gens.contains(&c) {
                        new_gens.push(c);
                    }
                }
            }
            if new_gens.is_empty() {
                break;
            }
            gens.extend(new_gens);
            elements = close_under_products(self.degree(), &gens, self.order())?;
        }
        Ok(self.handle_from_elements(elements))
    }

    /// The product set `UN = {u·n}` as a subgroup; `n` must be normal in
    /// this group, which is exactly what makes the product a subgroup.
    pub fn subgroup_product(
        &self,
        u: &SubgroupHandle,
        n: &SubgroupHandle,
    ) -> Result<SubgroupHandle> {
        self.ensure_subgroup(u)?;
        self.ensure_subgroup(n)?;
        if !self.is_normal(n)? {
            return Err(Error::NotNormal);
        }
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        for a in u.elements() {
            for b in n.elements() {
                set.insert(a.mul(b));
            }
        }
        let elements: Vec<Permutation> = set.into_iter().collect();
        Ok(self.handle_from_elements(elements))
    }

    /// The subgroup `H = <N, g>` generated by a subgroup together with one
    /// more element.
    pub fn generated_with(&self, n: &SubgroupHandle, g: &Permutation) -> Result<SubgroupHandle> {
        self.ensure_subgroup(n)?;
        if self.element_index(g).is_none() {
            return Err(Error::NotInGroup);
        }
        let mut gens = n.generators().to_vec();
        gens.push(g.clone());
        let elements = close_under_products(self.degree(), &gens, self.order())?;
        Ok(self.handle_from_elements(elements))
    }

    /// Searches for `h` with `h U h^-1 = V`; returns the minimal such `h`
    /// in element order, or `None` when the subgroups are not conjugate.
    pub fn are_conjugate_subgroups(
        &self,
        u: &SubgroupHandle,
        v: &SubgroupHandle,
    ) -> Result<Option<Permutation>> {
        self.ensure_subgroup(u)?;
        self.ensure_subgroup(v)?;
        if u.order() != v.order() {
            return Ok(None);
        }
        for h in self.elements() {
            let hinv = h.inverse();
            if u.elements()
                .iter()
                .all(|x| v.contains(&h.mul(x).mul(&hinv)))
            {
                return Ok(Some(h.clone()));
            }
        }
        Ok(None)
    }
}

/// The direct product acting on the disjoint union of the two point sets
/// (left factor on `0..d1`, right factor on `d1..d1+d2`).
pub fn direct_product(left: &PermGroup, right: &PermGroup) -> Result<PermGroup> {
    direct_product_capped(left, right, DEFAULT_ORDER_CAP)
}

pub fn direct_product_capped(left: &PermGroup, right: &PermGroup, cap: usize) -> Result<PermGroup> {
    let expected = left.order() * right.order();
    if expected > cap {
        return Err(Error::OrderCapExceeded {
            cap,
            reached: expected,
        });
    }
    let d1 = left.degree();
    let d2 = right.degree();
    let mut gens: Vec<Permutation> = Vec::new();
    for g in left.generators() {
        let mut images: Vec<usize> = (0..d1 + d2).collect();
        for (i, item) in images.iter_mut().enumerate().take(d1) {
            *item = g.image(i);
        }
        gens.push(Permutation::from_images(images).expect("embedding preserves bijectivity"));
    }
    for g in right.generators() {
        let mut images: Vec<usize> = (0..d1 + d2).collect();
        for j in 0..d2 {
            images[d1 + j] = d1 + g.image(j);
        }
        gens.push(Permutation::from_images(images).expect("embedding preserves bijectivity"));
    }
    let product = PermGroup::build(d1 + d2, gens, cap, None)?;
    assert_eq!(
        product.order(),
        expected,
        "direct product order must be the product of the factor orders"
    );
    Ok(product)
}

impl SubgroupHandle {
    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    /// Canonical generating sequence (rebuilt at construction, so equal
    /// subgroups always carry equal generator lists).
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted ascending.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Index `[G : U]` in the parent group.
    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.parent.degree() && self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// True when every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.parent.same_as(&other.parent) && is_sorted_subset(&self.elements, &other.elements)
    }

    /// True when both handles describe the same subgroup of the same
    /// parent.
    pub fn same_subgroup(&self, other: &SubgroupHandle) -> bool {
        self.parent.same_as(&other.parent) && self.elements == other.elements
    }

    /// Printable identity: canonical generators in cycle notation, e.g.
    /// `<(1 2),(3 4)>`; the trivial subgroup prints as `<>`.
    pub fn label(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!("<{}>", gens.join(","))
    }
}

/// Partitions a closed, sorted element list into conjugacy classes by
/// orbit closure under conjugation by the generators.
fn conjugacy_partition(
    elements: &[Permutation],
    generators: &[Permutation],
) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = elements.len();
    let gen_invs: Vec<(Permutation, Permutation)> = generators
        .iter()
        .map(|g| (g.clone(), g.inverse()))
        .collect();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        class_of[start] = cid;
        let mut members = vec![start];
        let mut cursor = 0;
        while cursor < members.len() {
            let x = &elements[members[cursor]];
            cursor += 1;
            for (g, ginv) in &gen_invs {
                let conj = g.mul(x).mul(ginv);
                let idx = elements
                    .binary_search(&conj)
                    .expect("conjugate of a member stays in the group");
                if class_of[idx] == usize::MAX {
                    class_of[idx] = cid;
                    members.push(idx);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    (classes, class_of)
}
