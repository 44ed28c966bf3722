//! Triadic contexts, trisets and the derivation operators.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::bits::{AxisSet, EntitySet};
use crate::error::{Error, Result};

/// One of the three roles of a triadic context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Object = 0,
    Attribute = 1,
    Condition = 2,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Object, Axis::Attribute, Axis::Condition];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// Accepts the 1-based numbering used for derivation operators.
    pub fn from_number(n: usize) -> Option<Axis> {
        match n {
            1 => Some(Axis::Object),
            2 => Some(Axis::Attribute),
            3 => Some(Axis::Condition),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::Object => "object",
            Axis::Attribute => "attribute",
            Axis::Condition => "condition",
        }
    }

    /// The two remaining axes, in increasing order.
    #[inline]
    pub fn others(self) -> (Axis, Axis) {
        match self {
            Axis::Object => (Axis::Attribute, Axis::Condition),
            Axis::Attribute => (Axis::Object, Axis::Condition),
            Axis::Condition => (Axis::Object, Axis::Attribute),
        }
    }
}

/// A role-tagged entity. The same label on two axes gives two entities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntityRef {
    pub axis: Axis,
    pub index: usize,
}

/// Triple of subsets, one per axis, with no incidence constraint.
pub type Parts = [AxisSet; 3];

/// A triadic context `(G, M, B, I)`.
///
/// Incidence is stored as fibers: for each axis and each pair of indices on
/// the other two axes, the set of entities completing a triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriContext {
    labels: [Vec<String>; 3],
    fibers: [Vec<AxisSet>; 3],
    triples: usize,
}

impl TriContext {
    pub const MAX_PER_AXIS: usize = 64;

    /// Builds a context from labels and index triples `(object, attribute, condition)`.
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<String>,
        conditions: Vec<String>,
        triples: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let labels = [objects, attributes, conditions];
        for axis in Axis::ALL {
            let ls = &labels[axis.index()];
            if ls.len() > Self::MAX_PER_AXIS {
                return Err(Error::Capacity {
                    what: axis.name(),
                    len: ls.len(),
                    max: Self::MAX_PER_AXIS,
                });
            }
            for (i, l) in ls.iter().enumerate() {
                if l.is_empty() {
                    return Err(Error::Invalid(alloc::format!("empty {} label", axis.name())));
                }
                if ls[..i].contains(l) {
                    return Err(Error::Invalid(alloc::format!(
                        "duplicate {} label `{l}`",
                        axis.name()
                    )));
                }
            }
        }
        let n = [labels[0].len(), labels[1].len(), labels[2].len()];
        let mut fibers = [
            alloc::vec![AxisSet::new(); n[1] * n[2]],
            alloc::vec![AxisSet::new(); n[0] * n[2]],
            alloc::vec![AxisSet::new(); n[0] * n[1]],
        ];
        let mut count = 0;
        for &(g, m, b) in triples {
            if g >= n[0] || m >= n[1] || b >= n[2] {
                return Err(Error::UnknownEntity(alloc::format!("triple ({g}, {m}, {b})")));
            }
            if !fibers[0][m * n[2] + b].contains(g) {
                count += 1;
            }
            fibers[0][m * n[2] + b].insert(g);
            fibers[1][g * n[2] + b].insert(m);
            fibers[2][g * n[1] + m].insert(b);
        }
        Ok(TriContext {
            labels,
            fibers,
            triples: count,
        })
    }

    /// Builds a context from label lists and label triples.
    pub fn from_labels(
        objects: &[&str],
        attributes: &[&str],
        conditions: &[&str],
        triples: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let own = |ls: &[&str]| ls.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let find = |ls: &[&str], axis: Axis, l: &str| {
            ls.iter()
                .position(|x| *x == l)
                .ok_or_else(|| Error::UnknownEntity(alloc::format!("{} `{l}`", axis.name())))
        };
        let mut idx = Vec::with_capacity(triples.len());
        for &(g, m, b) in triples {
            idx.push((
                find(objects, Axis::Object, g)?,
                find(attributes, Axis::Attribute, m)?,
                find(conditions, Axis::Condition, b)?,
            ));
        }
        Self::new(own(objects), own(attributes), own(conditions), &idx)
    }

    /// A copy of this context with one more incidence triple.
    pub fn with_triple(&self, g: usize, m: usize, b: usize) -> Result<Self> {
        let mut t: Vec<_> = self.triples().collect();
        t.push((g, m, b));
        Self::new(
            self.labels[0].clone(),
            self.labels[1].clone(),
            self.labels[2].clone(),
            &t,
        )
    }

    #[inline]
    pub fn len(&self, axis: Axis) -> usize {
        self.labels[axis.index()].len()
    }

    pub fn sizes(&self) -> [usize; 3] {
        [self.labels[0].len(), self.labels[1].len(), self.labels[2].len()]
    }

    /// Number of incidence triples.
    pub fn incidence_len(&self) -> usize {
        self.triples
    }

    pub fn labels(&self, axis: Axis) -> &[String] {
        &self.labels[axis.index()]
    }

    pub fn label(&self, e: EntityRef) -> &str {
        &self.labels[e.axis.index()][e.index]
    }

    pub fn index_of(&self, axis: Axis, label: &str) -> Result<usize> {
        self.labels[axis.index()]
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownEntity(alloc::format!("{} `{label}`", axis.name())))
    }

    pub fn set_of(&self, axis: Axis, labels: &[&str]) -> Result<AxisSet> {
        let mut s = AxisSet::new();
        for l in labels {
            s.insert(self.index_of(axis, l)?);
        }
        Ok(s)
    }

    pub fn set_labels(&self, axis: Axis, set: &AxisSet) -> Vec<&str> {
        set.iter()
            .map(|i| self.labels[axis.index()][i].as_str())
            .collect()
    }

    #[inline]
    pub fn full(&self, axis: Axis) -> AxisSet {
        AxisSet::full(self.len(axis))
    }

    /// Fails when `set` mentions indices beyond the axis.
    pub fn check_set(&self, axis: Axis, set: &AxisSet) -> Result<()> {
        match set.last() {
            Some(i) if i >= self.len(axis) => Err(Error::UnknownEntity(alloc::format!(
                "{} #{i}",
                axis.name()
            ))),
            _ => Ok(()),
        }
    }

    fn check_parts(&self, p: &Parts) -> Result<()> {
        for axis in Axis::ALL {
            self.check_set(axis, &p[axis.index()])?;
        }
        Ok(())
    }

    #[inline]
    pub fn contains(&self, g: usize, m: usize, b: usize) -> bool {
        let n = self.sizes();
        g < n[0] && m < n[1] && b < n[2] && self.fibers[0][m * n[2] + b].contains(g)
    }

    /// All incidence triples in `(object, attribute, condition)` lexicographic order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.sizes();
        (0..n[0]).flat_map(move |g| {
            (0..n[1]).flat_map(move |m| {
                self.fibers[2][g * n[1] + m].iter().map(move |b| (g, m, b))
            })
        })
    }

    #[inline]
    fn fiber(&self, axis: Axis, p: usize, q: usize) -> AxisSet {
        let (_, qa) = axis.others();
        self.fibers[axis.index()][p * self.len(qa) + q]
    }

    /// The `(i)`-derivation of a set of pairs: entities of `axis` related to
    /// every pair. Pairs are given in the order of [`Axis::others`].
    pub fn derive(&self, axis: Axis, pairs: &[(usize, usize)]) -> Result<AxisSet> {
        let (pa, qa) = axis.others();
        let mut out = self.full(axis);
        for &(p, q) in pairs {
            if p >= self.len(pa) {
                return Err(Error::UnknownEntity(alloc::format!("{} #{p}", pa.name())));
            }
            if q >= self.len(qa) {
                return Err(Error::UnknownEntity(alloc::format!("{} #{q}", qa.name())));
            }
            out = out.intersection(&self.fiber(axis, p, q));
        }
        Ok(out)
    }

    /// Derivation of the product `p × q` of subsets of the two other axes.
    pub fn derive_product(&self, axis: Axis, p: &AxisSet, q: &AxisSet) -> AxisSet {
        let mut out = self.full(axis);
        for i in p {
            for j in q {
                out = out.intersection(&self.fiber(axis, i, j));
                if out.is_empty() {
                    return out;
                }
            }
        }
        out
    }

    /// The pairs on the other two axes related to every element of `set`.
    pub fn derive_pairs(&self, axis: Axis, set: &AxisSet) -> Result<Vec<(usize, usize)>> {
        self.check_set(axis, set)?;
        let (pa, qa) = axis.others();
        let mut out = Vec::new();
        for p in 0..self.len(pa) {
            for q in 0..self.len(qa) {
                if set.is_subset(&self.fiber(axis, p, q)) {
                    out.push((p, q));
                }
            }
        }
        Ok(out)
    }

    /// Whether `x × y × z` lies inside the incidence.
    pub fn is_triset(&self, x: &AxisSet, y: &AxisSet, z: &AxisSet) -> Result<bool> {
        self.check_parts(&[*x, *y, *z])?;
        Ok(self.product_inside(&[*x, *y, *z]))
    }

    #[inline]
    pub(crate) fn product_inside(&self, p: &Parts) -> bool {
        if p.iter().any(|s| s.is_empty()) {
            return true;
        }
        p[0].is_subset(&self.derive_product(Axis::Object, &p[1], &p[2]))
    }

    pub fn triset(&self, x: AxisSet, y: AxisSet, z: AxisSet) -> Result<Triset> {
        if self.is_triset(&x, &y, &z)? {
            Ok(Triset { x, y, z })
        } else {
            Err(Error::NotATriset)
        }
    }

    pub fn triset_from_parts(&self, p: Parts) -> Result<Triset> {
        self.triset(p[0], p[1], p[2])
    }

    /// Triset from label lists, mainly for fixtures and tests.
    pub fn triset_of(&self, x: &[&str], y: &[&str], z: &[&str]) -> Result<Triset> {
        self.triset(
            self.set_of(Axis::Object, x)?,
            self.set_of(Axis::Attribute, y)?,
            self.set_of(Axis::Condition, z)?,
        )
    }

    /// Checks the three derivation conditions.
    pub fn triconcept(&self, a: AxisSet, b: AxisSet, c: AxisSet) -> Result<Triconcept> {
        self.check_parts(&[a, b, c])?;
        if self.derive_product(Axis::Object, &b, &c) == a
            && self.derive_product(Axis::Attribute, &a, &c) == b
            && self.derive_product(Axis::Condition, &a, &b) == c
        {
            Ok(Triconcept {
                extent: a,
                intent: b,
                modus: c,
            })
        } else {
            Err(Error::NotATriconcept)
        }
    }

    pub fn triconcept_of(&self, a: &[&str], b: &[&str], c: &[&str]) -> Result<Triconcept> {
        self.triconcept(
            self.set_of(Axis::Object, a)?,
            self.set_of(Axis::Attribute, b)?,
            self.set_of(Axis::Condition, c)?,
        )
    }

    /// Size of the flat ground set `G ⊔ M ⊔ B`.
    pub fn flat_len(&self) -> usize {
        self.labels.iter().map(|l| l.len()).sum()
    }

    /// Flat index of an entity: objects first, then attributes, then conditions.
    pub fn flat_index(&self, e: EntityRef) -> usize {
        match e.axis {
            Axis::Object => e.index,
            Axis::Attribute => self.len(Axis::Object) + e.index,
            Axis::Condition => self.len(Axis::Object) + self.len(Axis::Attribute) + e.index,
        }
    }

    pub fn flat_entity(&self, i: usize) -> Option<EntityRef> {
        let [g, m, b] = self.sizes();
        let (axis, index) = if i < g {
            (Axis::Object, i)
        } else if i < g + m {
            (Axis::Attribute, i - g)
        } else if i < g + m + b {
            (Axis::Condition, i - g - m)
        } else {
            return None;
        };
        Some(EntityRef { axis, index })
    }

    /// Role-tagged disjoint union of the three components.
    pub fn flat(&self, p: &Parts) -> FlatSet {
        let mut s = EntitySet::new();
        for axis in Axis::ALL {
            for i in &p[axis.index()] {
                s.insert(self.flat_index(EntityRef { axis, index: i }));
            }
        }
        s
    }

    /// Splits a flat set by role. Inverse of [`TriContext::flat`].
    pub fn tuple(&self, s: &FlatSet) -> Result<Parts> {
        let mut p = [AxisSet::new(); 3];
        for i in s {
            let e = self
                .flat_entity(i)
                .ok_or_else(|| Error::UnknownEntity(alloc::format!("flat element #{i}")))?;
            p[e.axis.index()].insert(e.index);
        }
        Ok(p)
    }

    pub fn flat_labels(&self, s: &FlatSet) -> Vec<&str> {
        s.iter()
            .filter_map(|i| self.flat_entity(i))
            .map(|e| self.label(e))
            .collect()
    }

    /// `({a,b},{c},{})` rendering used by reports and test messages.
    pub fn fmt_parts(&self, p: &Parts) -> String {
        let mut out = String::from("(");
        for axis in Axis::ALL {
            if axis != Axis::Object {
                out.push(',');
            }
            out.push('{');
            for (k, l) in self.set_labels(axis, &p[axis.index()]).iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{l}");
            }
            out.push('}');
        }
        out.push(')');
        out
    }

    /// Dyadic context on attributes × conditions with `(m, b)` present iff some
    /// object of `x` has `(g, m, b)`.
    pub fn slice_context(&self, x: &AxisSet) -> Result<DyadicContext> {
        self.check_set(Axis::Object, x)?;
        if x.is_empty() {
            return Err(Error::EmptySlice);
        }
        let [_, nm, nb] = self.sizes();
        let mut rows = alloc::vec![AxisSet::new(); nm];
        for g in x {
            for (m, row) in rows.iter_mut().enumerate() {
                for b in 0..nb {
                    if self.contains(g, m, b) {
                        row.insert(b);
                    }
                }
            }
        }
        Ok(DyadicContext { rows, n_cols: nb })
    }
}

/// Flat representation of a triple of subsets.
pub type FlatSet = EntitySet;

/// A triple of subsets whose product lies inside the incidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triset {
    x: AxisSet,
    y: AxisSet,
    z: AxisSet,
}

impl Triset {
    pub(crate) fn new_unchecked(p: Parts) -> Self {
        Triset {
            x: p[0],
            y: p[1],
            z: p[2],
        }
    }

    pub fn x(&self) -> AxisSet {
        self.x
    }
    pub fn y(&self) -> AxisSet {
        self.y
    }
    pub fn z(&self) -> AxisSet {
        self.z
    }

    pub fn parts(&self) -> Parts {
        [self.x, self.y, self.z]
    }

    pub fn is_empty_product(&self) -> bool {
        self.x.is_empty() || self.y.is_empty() || self.z.is_empty()
    }

    pub fn product_len(&self) -> usize {
        self.x.len() * self.y.len() * self.z.len()
    }

    /// Component-wise inclusion.
    pub fn is_sub(&self, other: &Triset) -> bool {
        self.x.is_subset(&other.x) && self.y.is_subset(&other.y) && self.z.is_subset(&other.z)
    }

    /// Product inclusion; see [`triset_leq`].
    pub fn leq(&self, other: &Triset) -> bool {
        triset_leq(self, other)
    }

    pub fn meet(&self, other: &Triset) -> Triset {
        Triset {
            x: self.x.intersection(&other.x),
            y: self.y.intersection(&other.y),
            z: self.z.intersection(&other.z),
        }
    }
}

/// `a ⊑ b`: the product of `a` is contained in the product of `b`.
///
/// Every empty-product triset is below everything. For non-empty products,
/// product inclusion is component-wise inclusion.
pub fn triset_leq(a: &Triset, b: &Triset) -> bool {
    if a.is_empty_product() {
        return true;
    }
    !b.is_empty_product() && a.is_sub(b)
}

/// A maximal triset: extent, intent and modus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triconcept {
    extent: AxisSet,
    intent: AxisSet,
    modus: AxisSet,
}

impl Triconcept {
    pub(crate) fn new_unchecked(p: Parts) -> Self {
        Triconcept {
            extent: p[0],
            intent: p[1],
            modus: p[2],
        }
    }

    pub fn extent(&self) -> AxisSet {
        self.extent
    }
    pub fn intent(&self) -> AxisSet {
        self.intent
    }
    pub fn modus(&self) -> AxisSet {
        self.modus
    }

    pub fn parts(&self) -> Parts {
        [self.extent, self.intent, self.modus]
    }

    pub fn as_triset(&self) -> Triset {
        Triset::new_unchecked(self.parts())
    }

    pub fn is_empty_product(&self) -> bool {
        self.as_triset().is_empty_product()
    }
}

impl From<Triconcept> for Triset {
    fn from(c: Triconcept) -> Triset {
        c.as_triset()
    }
}

/// A dyadic context given by object rows over `n_cols` attributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicContext {
    rows: Vec<AxisSet>,
    n_cols: usize,
}

impl DyadicContext {
    pub fn new(n_rows: usize, n_cols: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n_rows > 64 || n_cols > 64 {
            return Err(Error::Capacity {
                what: "dyadic entries",
                len: n_rows.max(n_cols),
                max: 64,
            });
        }
        let mut rows = alloc::vec![AxisSet::new(); n_rows];
        for &(g, m) in pairs {
            if g >= n_rows || m >= n_cols {
                return Err(Error::UnknownEntity(alloc::format!("pair ({g}, {m})")));
            }
            rows[g].insert(m);
        }
        Ok(DyadicContext { rows, n_cols })
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn contains(&self, g: usize, m: usize) -> bool {
        self.rows.get(g).is_some_and(|r| r.contains(m))
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(g, r)| r.iter().map(move |m| (g, m)))
            .collect()
    }

    /// `A'`: attributes shared by all objects of `a`.
    pub fn intent_of(&self, a: &AxisSet) -> AxisSet {
        a.iter()
            .fold(AxisSet::full(self.n_cols), |acc, g| acc.intersection(&self.rows[g]))
    }

    /// `B'`: objects having all attributes of `b`.
    pub fn extent_of(&self, b: &AxisSet) -> AxisSet {
        (0..self.rows.len())
            .filter(|&g| b.is_subset(&self.rows[g]))
            .collect()
    }

    /// All formal concepts `(A, B)` sorted by extent.
    pub fn concepts(&self) -> Vec<(AxisSet, AxisSet)> {
        // Intents are the intersections of object rows together with the full set.
        let mut intents = alloc::vec![AxisSet::full(self.n_cols)];
        for row in &self.rows {
            let mut next = intents.clone();
            for i in &intents {
                let m = i.intersection(row);
                if !next.contains(&m) {
                    next.push(m);
                }
            }
            intents = next;
        }
        let mut out: Vec<_> = intents
            .into_iter()
            .map(|b| {
                let a = self.extent_of(&b);
                (a, self.intent_of(&a))
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// True iff the concept lattice of `ctx` is a chain under extent inclusion.
pub fn is_ferrers_of_concepts(ctx: &DyadicContext) -> bool {
    let cs = ctx.concepts();
    cs.iter().all(|(a1, _)| {
        cs.iter()
            .all(|(a2, _)| a1.is_subset(a2) || a2.is_subset(a1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn derive_scans_incidence() {
        let k = fixtures::nonmonotone();
        let t1 = k.index_of(Axis::Attribute, "t1").unwrap();
        let r1 = k.index_of(Axis::Condition, "r1").unwrap();
        let got = k.derive(Axis::Object, &[(t1, r1)]).unwrap();
        assert_eq!(got, k.set_of(Axis::Object, &["u1", "u2"]).unwrap());
        assert_eq!(k.derive(Axis::Attribute, &[]).unwrap(), k.full(Axis::Attribute));
        let all: Vec<_> = (0..3).flat_map(|m| (0..2).map(move |b| (m, b))).collect();
        assert!(k.derive(Axis::Object, &all).unwrap().is_empty());
        assert!(matches!(
            k.derive(Axis::Object, &[(9, 0)]),
            Err(Error::UnknownEntity(_))
        ));
    }

    #[test]
    fn derive_pairs_examples() {
        let k = fixtures::nonmonotone();
        let r2 = k.set_of(Axis::Condition, &["r2"]).unwrap();
        assert_eq!(k.derive_pairs(Axis::Condition, &r2).unwrap(), [(0, 0), (1, 0)]);
        assert_eq!(
            k.derive_pairs(Axis::Condition, &AxisSet::new()).unwrap().len(),
            9
        );
        let u12 = k.set_of(Axis::Object, &["u1", "u2"]).unwrap();
        // (t1,r1), (t1,r2), (t2,r1)
        assert_eq!(
            k.derive_pairs(Axis::Object, &u12).unwrap(),
            [(0, 0), (0, 1), (1, 0)]
        );
    }

    #[test]
    fn triset_checks() {
        let k = fixtures::nonmonotone();
        assert!(k.triset_of(&["u1", "u2"], &["t1"], &["r1", "r2"]).is_ok());
        assert!(k.triset_of(&["u1", "u2", "u3"], &["t1"], &[]).is_ok());
        assert_eq!(
            k.triset_of(&["u1", "u2"], &["t1", "t2"], &["r1", "r2"]),
            Err(Error::NotATriset)
        );
        assert!(matches!(
            k.triset_of(&["u9"], &[], &[]),
            Err(Error::UnknownEntity(_))
        ));
    }

    #[test]
    fn flat_and_tuple() {
        let k = fixtures::nonmonotone();
        let s = k.triset_of(&["u1", "u2"], &["t1"], &["r1"]).unwrap();
        let f = k.flat(&s.parts());
        assert_eq!(k.flat_labels(&f), ["u1", "u2", "t1", "r1"]);
        assert_eq!(k.tuple(&f).unwrap(), s.parts());
        assert!(k.flat(&[AxisSet::new(); 3]).is_empty());
        assert_eq!(k.tuple(&EntitySet::new()).unwrap(), [AxisSet::new(); 3]);
        assert!(k.tuple(&EntitySet::singleton(40)).is_err());
    }

    #[test]
    fn leq_examples() {
        let k = fixtures::nonmonotone();
        let x = k.triset_of(&["u1", "u2"], &["t1"], &["r1"]).unwrap();
        let y = k.triset_of(&["u1", "u2"], &["t1"], &["r1", "r2"]).unwrap();
        let w = k.triset_of(&["u1", "u2"], &["t1", "t2"], &["r1"]).unwrap();
        assert!(x.leq(&y));
        assert!(!w.leq(&y));
        let e1 = k.triset_of(&["u1"], &["t1"], &[]).unwrap();
        let e2 = k.triset_of(&[], &["t2"], &["r1"]).unwrap();
        assert!(e1.leq(&e2) && e2.leq(&e1));
        assert_ne!(e1, e2);
    }

    #[test]
    fn slices_and_ferrers() {
        let k = fixtures::nonmonotone();
        let u12 = k.set_of(Axis::Object, &["u1", "u2"]).unwrap();
        let s = k.slice_context(&u12).unwrap();
        assert_eq!(s.pairs(), [(0, 0), (0, 1), (1, 0)]);
        let u1 = k.set_of(Axis::Object, &["u1"]).unwrap();
        assert_eq!(k.slice_context(&u1).unwrap(), s);
        let u3 = k.set_of(Axis::Object, &["u3"]).unwrap();
        assert!(k.slice_context(&u3).unwrap().pairs().is_empty());
        assert_eq!(k.slice_context(&AxisSet::new()), Err(Error::EmptySlice));
        assert!(is_ferrers_of_concepts(&s));

        let chain = DyadicContext::new(2, 2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert!(is_ferrers_of_concepts(&chain));
        let anti = DyadicContext::new(2, 2, &[(0, 0), (1, 1)]).unwrap();
        assert!(!is_ferrers_of_concepts(&anti));
    }

    #[test]
    fn triconcept_conditions() {
        let k = fixtures::nonmonotone();
        assert!(k.triconcept_of(&["u1", "u2"], &["t1", "t2"], &["r1"]).is_ok());
        assert_eq!(
            k.triconcept_of(&["u1", "u2"], &["t1"], &["r1"]),
            Err(Error::NotATriconcept)
        );
    }

    #[test]
    fn rejects_bad_labels() {
        let dup = TriContext::from_labels(&["a", "a"], &["m"], &["b"], &[]);
        assert!(matches!(dup, Err(Error::Invalid(_))));
        let shared = TriContext::from_labels(&["x"], &["x"], &["x"], &[("x", "x", "x")]).unwrap();
        assert_eq!(shared.flat_len(), 3);
        assert_eq!(shared.incidence_len(), 1);
    }
}
