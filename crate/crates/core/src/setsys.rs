//! Checkers for properties of explicitly enumerated set systems.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bits::EntitySet;
use crate::error::{Error, Result};
use crate::listing::SetSystem;

/// A non-empty family of subsets of `{0, .., ground_len - 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitFamily {
    ground_len: usize,
    members: BTreeSet<EntitySet>,
}

/// Whether `∅` is forced in or out when materialising a family.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EmptySetPolicy {
    #[default]
    AsIs,
    Include,
    Exclude,
}

/// Reading of the common subset `I` in the confluence condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ConfluenceReading {
    /// `I ≠ ∅`.
    #[default]
    NonEmptyCommonSubset,
    /// Any member `I`, the empty set included.
    AnyCommonSubset,
}

/// Largest ground set [`ExplicitFamily::materialize`] will scan.
pub const MATERIALIZE_LIMIT: usize = 24;

impl ExplicitFamily {
    pub fn new<I: IntoIterator<Item = EntitySet>>(ground_len: usize, members: I) -> Result<Self> {
        let members: BTreeSet<_> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::Invalid("a set system needs at least one member".into()));
        }
        if ground_len > EntitySet::CAPACITY
            || members.iter().any(|m| m.last().is_some_and(|e| e >= ground_len))
        {
            return Err(Error::Invalid("member outside the ground set".into()));
        }
        Ok(ExplicitFamily {
            ground_len,
            members,
        })
    }

    /// Enumerates every subset of the ground set and keeps the members.
    pub fn materialize<S: SetSystem + ?Sized>(sys: &S, policy: EmptySetPolicy) -> Result<Self> {
        let n = sys.ground_len();
        if n > MATERIALIZE_LIMIT {
            return Err(Error::SizeCap {
                axis: None,
                len: n,
                cap: MATERIALIZE_LIMIT,
            });
        }
        let mut members = Vec::new();
        for code in 0u64..(1 << n) {
            let s: EntitySet = (0..n).filter(|i| code >> i & 1 == 1).collect();
            if sys.contains(&s) {
                members.push(s);
            }
        }
        Self::new(n, members)?.with_empty(policy)
    }

    pub fn with_empty(mut self, policy: EmptySetPolicy) -> Result<Self> {
        match policy {
            EmptySetPolicy::AsIs => {}
            EmptySetPolicy::Include => {
                self.members.insert(EntitySet::new());
            }
            EmptySetPolicy::Exclude => {
                self.members.remove(&EntitySet::new());
                if self.members.is_empty() {
                    return Err(Error::Invalid("a set system needs at least one member".into()));
                }
            }
        }
        Ok(self)
    }

    pub fn ground_len(&self) -> usize {
        self.ground_len
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &EntitySet) -> bool {
        self.members.contains(s)
    }

    pub fn members(&self) -> impl Iterator<Item = &EntitySet> {
        self.members.iter()
    }

    /// Every non-empty member has a member one element smaller.
    pub fn is_accessible(&self) -> bool {
        self.members
            .iter()
            .filter(|x| !x.is_empty())
            .all(|x| x.iter().any(|e| self.contains(&x.without(e))))
    }

    /// Closed under taking subsets.
    pub fn is_independence_system(&self) -> bool {
        // One-element removals suffice by induction.
        self.members
            .iter()
            .all(|x| x.iter().all(|e| self.contains(&x.without(e))))
    }

    /// For members `I ⊆ X, Y`, the union `X ∪ Y` is a member.
    pub fn is_confluent(&self, reading: ConfluenceReading) -> bool {
        let ms: Vec<_> = self.members.iter().collect();
        for i in &ms {
            if i.is_empty() && reading == ConfluenceReading::NonEmptyCommonSubset {
                continue;
            }
            let above: Vec<_> = ms.iter().filter(|x| i.is_subset(x)).collect();
            for x in &above {
                for y in &above {
                    if !self.contains(&x.union(y)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Accessible, and every `X ⊂ Y` in the family has `X ∪ {e}` in the family
    /// for some `e ∈ Y ∖ X`.
    pub fn is_strongly_accessible(&self) -> bool {
        if !self.is_accessible() {
            return false;
        }
        let ms: Vec<_> = self.members.iter().collect();
        ms.iter().all(|x| {
            ms.iter().all(|y| {
                x == y
                    || !x.is_subset(y)
                    || y.difference(x).iter().any(|e| self.contains(&x.with(e)))
            })
        })
    }

    /// Contains the ground set and is closed under pairwise intersection.
    pub fn is_closure_system(&self) -> bool {
        if !self.contains(&EntitySet::full(self.ground_len)) {
            return false;
        }
        let ms: Vec<_> = self.members.iter().collect();
        ms.iter()
            .all(|x| ms.iter().all(|y| self.contains(&x.intersection(y))))
    }
}

impl SetSystem for ExplicitFamily {
    fn ground_len(&self) -> usize {
        self.ground_len
    }
    fn contains(&self, s: &EntitySet) -> bool {
        self.members.contains(s)
    }
}

/// Verdicts of all checkers on one family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub accessible: bool,
    pub independence_system: bool,
    pub confluent: bool,
    pub confluent_any_subset: bool,
    pub strongly_accessible: bool,
    pub closure_system: bool,
}

impl ExplicitFamily {
    pub fn verdicts(&self) -> Verdicts {
        Verdicts {
            accessible: self.is_accessible(),
            independence_system: self.is_independence_system(),
            confluent: self.is_confluent(ConfluenceReading::NonEmptyCommonSubset),
            confluent_any_subset: self.is_confluent(ConfluenceReading::AnyCommonSubset),
            strongly_accessible: self.is_strongly_accessible(),
            closure_system: self.is_closure_system(),
        }
    }
}
