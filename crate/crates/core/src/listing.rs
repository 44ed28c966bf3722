//! Generic listing of closed sets over an accessible set system.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bits::EntitySet;
use crate::error::{Error, Result};

/// A family of subsets of `{0, .., ground_len - 1}` given by a membership test.
pub trait SetSystem {
    fn ground_len(&self) -> usize;
    fn contains(&self, s: &EntitySet) -> bool;
}

/// An operator defined on (part of) a set system.
pub trait PartialClosure {
    /// `None` where the operator is undefined.
    fn close(&self, s: &EntitySet) -> Option<EntitySet>;
}

/// Fixes every set.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityClosure;

impl PartialClosure for IdentityClosure {
    fn close(&self, s: &EntitySet) -> Option<EntitySet> {
        Some(*s)
    }
}

impl<F: Fn(&EntitySet) -> bool> SetSystem for (usize, F) {
    fn ground_len(&self) -> usize {
        self.0
    }
    fn contains(&self, s: &EntitySet) -> bool {
        (self.1)(s)
    }
}

/// The parent of a non-empty member: remove the largest element whose removal
/// stays in the family.
fn canonical_parent<S: SetSystem + ?Sized>(sys: &S, x: &EntitySet) -> Option<EntitySet> {
    let elems: Vec<_> = x.iter().collect();
    elems
        .into_iter()
        .rev()
        .map(|e| x.without(e))
        .find(|p| sys.contains(p))
}

/// Every member reachable from `∅` by one-element additions.
///
/// Reverse search over canonical parents. A seen-set guards against duplicate
/// visits even if the membership test is inconsistent.
pub fn reachable_members<S: SetSystem + ?Sized>(sys: &S) -> Result<Vec<EntitySet>> {
    let empty = EntitySet::new();
    if !sys.contains(&empty) {
        return Err(Error::ContractViolation("the empty set is not a member".into()));
    }
    let n = sys.ground_len();
    if n > EntitySet::CAPACITY {
        return Err(Error::Capacity {
            what: "ground elements",
            len: n,
            max: EntitySet::CAPACITY,
        });
    }
    let mut seen = BTreeSet::new();
    seen.insert(empty);
    let mut stack = alloc::vec![empty];
    let mut out = Vec::new();
    while let Some(x) = stack.pop() {
        out.push(x);
        for e in (0..n).rev() {
            if x.contains(e) {
                continue;
            }
            let y = x.with(e);
            if sys.contains(&y) && canonical_parent(sys, &y) == Some(x) && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Members `F` with `closure(F) = F`, sorted.
///
/// The family must be accessible for the listing to be complete. Fails when
/// `closure` maps a member outside the family.
pub fn list_closed_sets<S, C>(sys: &S, closure: &C) -> Result<Vec<EntitySet>>
where
    S: SetSystem + ?Sized,
    C: PartialClosure + ?Sized,
{
    let mut out = Vec::new();
    for x in reachable_members(sys)? {
        if let Some(c) = closure.close(&x) {
            if !sys.contains(&c) {
                return Err(Error::ContractViolation(alloc::format!(
                    "closure of {x:?} leaves the family"
                )));
            }
            if c == x {
                out.push(x);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(members: &[&[usize]]) -> (usize, impl Fn(&EntitySet) -> bool) {
        let sets: Vec<EntitySet> = members.iter().map(|m| m.iter().copied().collect()).collect();
        (3, move |s: &EntitySet| sets.contains(s))
    }

    #[test]
    fn identity_lists_chain() {
        let f = fam(&[&[], &[0], &[0, 1]]);
        let got = list_closed_sets(&f, &IdentityClosure).unwrap();
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn requires_empty_member() {
        let f = fam(&[&[0]]);
        assert!(matches!(
            list_closed_sets(&f, &IdentityClosure),
            Err(Error::ContractViolation(_))
        ));
    }

    struct Escape;
    impl PartialClosure for Escape {
        fn close(&self, s: &EntitySet) -> Option<EntitySet> {
            Some(s.with(2))
        }
    }

    #[test]
    fn closure_leaving_family_is_reported() {
        let f = fam(&[&[], &[0]]);
        assert!(matches!(
            list_closed_sets(&f, &Escape),
            Err(Error::ContractViolation(_))
        ));
    }

    #[test]
    fn powerset_visited_once() {
        let f = (5usize, |_: &EntitySet| true);
        assert_eq!(reachable_members(&f).unwrap().len(), 32);
    }
}
