//! Multi-relational data: typed entities joined by typed binary edges.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bits::EntitySet;
use crate::closure::h_close;
use crate::concepts::SizeCap;
use crate::context::{Axis, TriContext, Triconcept, Triset};
use crate::error::{Error, Result};
use crate::listing::{list_closed_sets, PartialClosure, SetSystem};

/// A k-partite graph. Entities are indexed by type (declaration order), then
/// by declaration order inside the type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mrd {
    types: Vec<String>,
    entity_type: Vec<usize>,
    entity_label: Vec<String>,
    related_types: Vec<Vec<bool>>,
    adjacency: Vec<EntitySet>,
    /// Entities whose type pair with `e` is a relationship type.
    related: Vec<EntitySet>,
}

#[derive(Clone, Debug, Default)]
pub struct MrdBuilder {
    types: Vec<String>,
    entities: Vec<Vec<String>>,
    relationship_types: Vec<(String, String)>,
    edges: Vec<((String, String), (String, String))>,
}

impl MrdBuilder {
    pub fn new<S: AsRef<str>>(types: &[S]) -> Self {
        MrdBuilder {
            types: types.iter().map(|t| t.as_ref().to_string()).collect(),
            entities: alloc::vec![Vec::new(); types.len()],
            ..Default::default()
        }
    }

    pub fn entity(mut self, ty: &str, label: &str) -> Self {
        if let Some(i) = self.types.iter().position(|t| t == ty) {
            self.entities[i].push(label.to_string());
        } else {
            // Reported by `build`.
            self.entities.push(alloc::vec![label.to_string()]);
            self.types.push(alloc::format!("\u{0}{ty}"));
        }
        self
    }

    pub fn entities(mut self, ty: &str, labels: &[&str]) -> Self {
        for l in labels {
            self = self.entity(ty, l);
        }
        self
    }

    pub fn relationship(mut self, a: &str, b: &str) -> Self {
        self.relationship_types.push((a.to_string(), b.to_string()));
        self
    }

    pub fn edge(mut self, a: (&str, &str), b: (&str, &str)) -> Self {
        self.edges.push((
            (a.0.to_string(), a.1.to_string()),
            (b.0.to_string(), b.1.to_string()),
        ));
        self
    }

    pub fn build(self) -> Result<Mrd> {
        for (i, t) in self.types.iter().enumerate() {
            if let Some(bad) = t.strip_prefix('\u{0}') {
                return Err(Error::UnknownEntity(alloc::format!("entity type `{bad}`")));
            }
            if t.is_empty() {
                return Err(Error::Invalid("empty entity type name".into()));
            }
            if self.types[..i].contains(t) {
                return Err(Error::Invalid(alloc::format!("duplicate entity type `{t}`")));
            }
        }
        let mut entity_type = Vec::new();
        let mut entity_label = Vec::new();
        for (t, ls) in self.entities.iter().enumerate() {
            for (j, l) in ls.iter().enumerate() {
                if l.is_empty() {
                    return Err(Error::Invalid("empty entity label".into()));
                }
                if ls[..j].contains(l) {
                    return Err(Error::Invalid(alloc::format!(
                        "duplicate entity `{}:{l}`",
                        self.types[t]
                    )));
                }
                entity_type.push(t);
                entity_label.push(l.clone());
            }
        }
        let n = entity_type.len();
        if n > EntitySet::CAPACITY {
            return Err(Error::Capacity {
                what: "entities",
                len: n,
                max: EntitySet::CAPACITY,
            });
        }
        let type_index = |t: &str| {
            self.types
                .iter()
                .position(|x| x == t)
                .ok_or_else(|| Error::UnknownEntity(alloc::format!("entity type `{t}`")))
        };
        let k = self.types.len();
        let mut related_types = alloc::vec![alloc::vec![false; k]; k];
        for (a, b) in &self.relationship_types {
            let (a, b) = (type_index(a)?, type_index(b)?);
            if a == b {
                return Err(Error::Invalid(alloc::format!(
                    "relationship type between `{}` and itself",
                    self.types[a]
                )));
            }
            related_types[a][b] = true;
            related_types[b][a] = true;
        }
        let find = |(t, l): &(String, String)| {
            let ti = type_index(t)?;
            (0..n)
                .find(|&e| entity_type[e] == ti && entity_label[e] == *l)
                .ok_or_else(|| Error::UnknownEntity(alloc::format!("{t}:{l}")))
        };
        let mut adjacency = alloc::vec![EntitySet::new(); n];
        for (a, b) in &self.edges {
            let (a, b) = (find(a)?, find(b)?);
            if !related_types[entity_type[a]][entity_type[b]] {
                return Err(Error::Invalid(alloc::format!(
                    "edge {}:{} - {}:{} has no relationship type",
                    self.types[entity_type[a]],
                    entity_label[a],
                    self.types[entity_type[b]],
                    entity_label[b]
                )));
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        let related = (0..n)
            .map(|e| {
                (0..n)
                    .filter(|&f| related_types[entity_type[e]][entity_type[f]])
                    .collect()
            })
            .collect();
        Ok(Mrd {
            types: self.types,
            entity_type,
            entity_label,
            related_types,
            adjacency,
            related,
        })
    }
}

impl Mrd {
    pub fn builder<S: AsRef<str>>(types: &[S]) -> MrdBuilder {
        MrdBuilder::new(types)
    }

    pub fn len(&self) -> usize {
        self.entity_type.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entity_type.is_empty()
    }

    pub fn types(&self) -> &[String] {
        &self.types
    }

    pub fn entity_type(&self, e: usize) -> usize {
        self.entity_type[e]
    }

    pub fn label(&self, e: usize) -> &str {
        &self.entity_label[e]
    }

    /// `type:label`.
    pub fn qualified(&self, e: usize) -> String {
        alloc::format!("{}:{}", self.types[self.entity_type[e]], self.entity_label[e])
    }

    pub fn entity(&self, ty: &str, label: &str) -> Result<usize> {
        let t = self
            .types
            .iter()
            .position(|x| x == ty)
            .ok_or_else(|| Error::UnknownEntity(alloc::format!("entity type `{ty}`")))?;
        (0..self.len())
            .find(|&e| self.entity_type[e] == t && self.entity_label[e] == label)
            .ok_or_else(|| Error::UnknownEntity(alloc::format!("{ty}:{label}")))
    }

    /// Set from labels, looked up across all types; labels must be unambiguous.
    pub fn set_of(&self, labels: &[&str]) -> Result<EntitySet> {
        let mut s = EntitySet::new();
        for l in labels {
            let hits: Vec<_> = (0..self.len()).filter(|&e| self.entity_label[e] == *l).collect();
            match hits[..] {
                [e] => s.insert(e),
                [] => return Err(Error::UnknownEntity(String::from(*l))),
                _ => return Err(Error::Invalid(alloc::format!("ambiguous label `{l}`"))),
            }
        }
        Ok(s)
    }

    pub fn labels_of(&self, s: &EntitySet) -> Vec<&str> {
        s.iter().map(|e| self.label(e)).collect()
    }

    pub fn relationship_types(&self) -> Vec<(usize, usize)> {
        let k = self.types.len();
        (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .filter(|&(a, b)| self.related_types[a][b])
            .collect()
    }

    pub fn is_relationship_type(&self, a: usize, b: usize) -> bool {
        self.related_types[a][b]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.adjacency[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn entities_of_type(&self, t: usize) -> EntitySet {
        (0..self.len()).filter(|&e| self.entity_type[e] == t).collect()
    }

    pub fn all(&self) -> EntitySet {
        EntitySet::full(self.len())
    }

    fn check(&self, f: &EntitySet) -> Result<()> {
        match f.last() {
            Some(e) if e >= self.len() => Err(Error::UnknownEntity(alloc::format!("entity #{e}"))),
            _ => Ok(()),
        }
    }

    fn complete(&self, f: &EntitySet) -> bool {
        f.iter()
            .all(|e| self.related[e].intersection(f).is_subset(&self.adjacency[e]))
    }

    fn connected(&self, f: &EntitySet) -> bool {
        let Some(start) = f.first() else {
            return true;
        };
        let mut seen = EntitySet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = EntitySet::new();
            for e in &frontier {
                next = next.union(&self.adjacency[e].intersection(f));
            }
            frontier = next.difference(&seen);
            seen = seen.union(&frontier);
        }
        seen == *f
    }

    /// Every related pair inside `f` is an edge.
    pub fn is_complete(&self, f: &EntitySet) -> Result<bool> {
        self.check(f)?;
        Ok(self.complete(f))
    }

    /// `f` induces a connected subgraph; `∅` and singletons are connected.
    pub fn is_connected(&self, f: &EntitySet) -> Result<bool> {
        self.check(f)?;
        Ok(self.connected(f))
    }

    pub fn is_ccs(&self, f: &EntitySet) -> Result<bool> {
        self.check(f)?;
        Ok(self.complete(f) && self.connected(f))
    }

    fn require_ccs(&self, f: &EntitySet) -> Result<()> {
        if self.is_ccs(f)? {
            Ok(())
        } else {
            Err(Error::NotCcs)
        }
    }

    // e keeps f ∪ {e} complete, given f complete
    fn compatible(&self, f: &EntitySet, e: usize) -> bool {
        f.contains(e) || self.related[e].intersection(f).is_subset(&self.adjacency[e])
    }

    fn comp_unchecked(&self, f: &EntitySet) -> EntitySet {
        (0..self.len()).filter(|&e| self.compatible(f, e)).collect()
    }

    fn aug_unchecked(&self, f: &EntitySet) -> EntitySet {
        (0..self.len())
            .filter(|&e| {
                self.compatible(f, e)
                    && (f.is_empty() || f.contains(e) || !self.adjacency[e].is_disjoint(f))
            })
            .collect()
    }

    fn g_unchecked(&self, f: &EntitySet) -> EntitySet {
        let c = self.comp_unchecked(f);
        self.aug_unchecked(f)
            .iter()
            .filter(|&e| self.comp_unchecked(&f.with(e)) == c)
            .collect()
    }

    /// `{ e | f ∪ {e} complete }`, which contains `f`.
    pub fn comp(&self, f: &EntitySet) -> Result<EntitySet> {
        self.require_ccs(f)?;
        Ok(self.comp_unchecked(f))
    }

    /// `{ e | f ∪ {e} complete and connected }`, which contains `f`.
    pub fn aug(&self, f: &EntitySet) -> Result<EntitySet> {
        self.require_ccs(f)?;
        Ok(self.aug_unchecked(f))
    }

    /// `{ e ∈ Aug(f) | Comp(f ∪ {e}) = Comp(f) }`.
    pub fn g_close(&self, f: &EntitySet) -> Result<EntitySet> {
        self.require_ccs(f)?;
        Ok(self.g_unchecked(f))
    }

    pub fn is_mccs(&self, f: &EntitySet) -> Result<bool> {
        Ok(!f.is_empty() && self.is_ccs(f)? && self.aug_unchecked(f) == *f)
    }

    pub fn ccs_family(&self) -> CcsFamily<'_> {
        CcsFamily { mrd: self }
    }

    /// Maximal CCSs, sorted: the `g`-closed sets of the CCS family that admit
    /// no augmentation.
    pub fn enumerate_mccs(&self, cap: SizeCap) -> Result<Vec<EntitySet>> {
        cap.check_entities(self.len())?;
        let closed = list_closed_sets(&self.ccs_family(), &GClosure { mrd: self })?;
        Ok(closed
            .into_iter()
            .filter(|f| self.aug_unchecked(f) == *f)
            .collect())
    }

    /// Types `i` for which some entity of another type completes `E_i` to a CCS.
    pub fn idempotency_condition_violations(&self) -> Vec<usize> {
        (0..self.types.len())
            .filter(|&t| {
                let ei = self.entities_of_type(t);
                !ei.is_empty()
                    && (0..self.len()).any(|e| {
                        self.entity_type[e] != t && {
                            let s = ei.with(e);
                            self.complete(&s) && self.connected(&s)
                        }
                    })
            })
            .collect()
    }

    /// Adds one isolated entity `"<type>#0"` to every type failing the
    /// idempotency condition.
    pub fn add_isolated_elements(&self) -> Mrd {
        let bad = self.idempotency_condition_violations();
        if bad.is_empty() {
            return self.clone();
        }
        let mut m = self.clone();
        // Entity indices shift, so rebuild in type order.
        let mut order: Vec<(usize, String)> = (0..self.len())
            .map(|e| (self.entity_type[e], self.entity_label[e].clone()))
            .collect();
        for &t in &bad {
            let mut k = 0;
            let label = loop {
                let l = alloc::format!("{}#{k}", self.types[t]);
                if !order.iter().any(|(ty, x)| *ty == t && *x == l) {
                    break l;
                }
                k += 1;
            };
            let pos = order.iter().rposition(|(ty, _)| *ty <= t).map_or(0, |p| p + 1);
            order.insert(pos, (t, label));
        }
        let old_index = |t: usize, l: &str| {
            (0..self.len()).find(|&e| self.entity_type[e] == t && self.entity_label[e] == l)
        };
        let remap: Vec<Option<usize>> = order.iter().map(|(t, l)| old_index(*t, l)).collect();
        let n = order.len();
        let mut adjacency = alloc::vec![EntitySet::new(); n];
        for a in 0..n {
            for b in 0..n {
                if let (Some(x), Some(y)) = (remap[a], remap[b]) {
                    if self.adjacency[x].contains(y) {
                        adjacency[a].insert(b);
                    }
                }
            }
        }
        m.entity_type = order.iter().map(|(t, _)| *t).collect();
        m.entity_label = order.into_iter().map(|(_, l)| l).collect();
        m.related = (0..n)
            .map(|e| {
                (0..n)
                    .filter(|&f| m.related_types[m.entity_type[e]][m.entity_type[f]])
                    .collect()
            })
            .collect();
        m.adjacency = adjacency;
        m
    }

    /// A non-empty CCS that is the intersection of at least two MCCSs, fixed
    /// by `g`, and strictly contained in some larger CCS.
    pub fn closed_non_maximal_witness(&self, cap: SizeCap) -> Result<Option<ClosedNonMaximal>> {
        let mccs = self.enumerate_mccs(cap)?;
        if mccs.len() > 20 {
            return Err(Error::SizeCap {
                axis: None,
                len: mccs.len(),
                cap: 20,
            });
        }
        let mut candidates = BTreeSet::new();
        for mask in 1u32..(1 << mccs.len()) {
            if mask.count_ones() < 2 {
                continue;
            }
            let meet = (0..mccs.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(self.all(), |acc, i| acc.intersection(&mccs[i]));
            if !meet.is_empty()
                && self.complete(&meet)
                && self.connected(&meet)
                && self.g_unchecked(&meet) == meet
                && self.aug_unchecked(&meet) != meet
            {
                candidates.insert(meet);
            }
        }
        Ok(candidates.into_iter().next().map(|set| ClosedNonMaximal {
            set,
            supersets: mccs.iter().filter(|m| set.is_subset(m)).copied().collect(),
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedNonMaximal {
    pub set: EntitySet,
    /// The MCCSs containing `set`.
    pub supersets: Vec<EntitySet>,
}

/// Complete and connected subsets, `∅` included.
#[derive(Clone, Copy, Debug)]
pub struct CcsFamily<'a> {
    mrd: &'a Mrd,
}

impl SetSystem for CcsFamily<'_> {
    fn ground_len(&self) -> usize {
        self.mrd.len()
    }
    fn contains(&self, s: &EntitySet) -> bool {
        self.mrd.is_ccs(s).unwrap_or(false)
    }
}

/// `g` as a partial closure on the CCS family; undefined on `∅`, where
/// `Aug(∅)` holds every entity and the result need not be connected.
#[derive(Clone, Copy, Debug)]
pub struct GClosure<'a> {
    pub mrd: &'a Mrd,
}

impl PartialClosure for GClosure<'_> {
    fn close(&self, s: &EntitySet) -> Option<EntitySet> {
        if s.is_empty() || !self.mrd.is_ccs(s).ok()? {
            return None;
        }
        Some(self.mrd.g_unchecked(s))
    }
}

pub const TRIPARTITE_TYPES: [&str; 3] = ["object", "attribute", "condition"];

/// Three entity types, all three relationship types, and the pairwise
/// projections of every incidence triple as edges. Entity indices follow the
/// flat layout of the context.
pub fn encode_tripartite(ctx: &TriContext) -> Mrd {
    let mut b = Mrd::builder(&TRIPARTITE_TYPES);
    for axis in Axis::ALL {
        for l in ctx.labels(axis) {
            b = b.entity(TRIPARTITE_TYPES[axis.index()], l);
        }
    }
    b = b
        .relationship("object", "attribute")
        .relationship("object", "condition")
        .relationship("attribute", "condition");
    let lab = |a: Axis, i: usize| (TRIPARTITE_TYPES[a.index()], ctx.labels(a)[i].as_str());
    for (g, m, c) in ctx.triples() {
        let (g, m, c) = (
            lab(Axis::Object, g),
            lab(Axis::Attribute, m),
            lab(Axis::Condition, c),
        );
        b = b.edge(g, m).edge(g, c).edge(m, c);
    }
    b.build().expect("a valid context encodes to a valid database")
}

/// A triple outside the incidence whose three projections are all edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhantomEdge {
    pub object: usize,
    pub attribute: usize,
    pub condition: usize,
}

pub fn phantom_edges(ctx: &TriContext) -> Vec<PhantomEdge> {
    let [ng, nm, nb] = ctx.sizes();
    let gm = |g, m| (0..nb).any(|b| ctx.contains(g, m, b));
    let gb = |g, b| (0..nm).any(|m| ctx.contains(g, m, b));
    let mb = |m, b| (0..ng).any(|g| ctx.contains(g, m, b));
    let mut out = Vec::new();
    for g in 0..ng {
        for m in 0..nm {
            for b in 0..nb {
                if !ctx.contains(g, m, b) && gm(g, m) && gb(g, b) && mb(m, b) {
                    out.push(PhantomEdge {
                        object: g,
                        attribute: m,
                        condition: b,
                    });
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepairOutcome {
    /// The phantom-free remainder is a triset fixed by `h`.
    Repaired(Triconcept),
    /// The remainder is not a product of subsets inside the incidence.
    NotATriset,
    /// The remainder is a triset but `h` moves it.
    NotClosed(Triset),
}

/// Drops phantom triples from `X × Y × Z` of an MCCS and tests whether the
/// rest is a triconcept.
pub fn mccs_to_triset(ctx: &TriContext, mccs: &EntitySet) -> Result<RepairOutcome> {
    let mrd = encode_tripartite(ctx);
    if !mrd.is_mccs(mccs)? {
        return Err(Error::NotMccs);
    }
    let [x, y, z] = ctx.tuple(mccs)?;
    let phantoms: BTreeSet<_> = phantom_edges(ctx)
        .into_iter()
        .map(|p| (p.object, p.attribute, p.condition))
        .collect();
    let mut rest = Vec::new();
    for g in &x {
        for m in &y {
            for b in &z {
                if !phantoms.contains(&(g, m, b)) {
                    rest.push((g, m, b));
                }
            }
        }
    }
    if rest.is_empty() {
        return Ok(RepairOutcome::NotATriset);
    }
    let a: crate::AxisSet = rest.iter().map(|t| t.0).collect();
    let bb: crate::AxisSet = rest.iter().map(|t| t.1).collect();
    let c: crate::AxisSet = rest.iter().map(|t| t.2).collect();
    let is_product = rest.len() == a.len() * bb.len() * c.len();
    if !is_product || !rest.iter().all(|&(g, m, b)| ctx.contains(g, m, b)) {
        return Ok(RepairOutcome::NotATriset);
    }
    let t = Triset::new_unchecked([a, bb, c]);
    let closed = h_close(ctx, &t);
    Ok(if closed.as_triset() == t {
        RepairOutcome::Repaired(closed)
    } else {
        RepairOutcome::NotClosed(t)
    })
}
