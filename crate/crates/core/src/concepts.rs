//! Triconcept enumeration and the parameterised context families.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::bits::AxisSet;
use crate::closure::h_close;
use crate::context::{Axis, TriContext, Triconcept, Triset};
use crate::error::{Error, Result};

/// Bound on exhaustive searches: at most `per_axis` entities on each axis,
/// and at most `3 * per_axis` entities for multi-relational inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCap {
    pub per_axis: usize,
}

impl SizeCap {
    pub const DEFAULT: SizeCap = SizeCap { per_axis: 5 };

    pub fn new(per_axis: usize) -> Self {
        SizeCap { per_axis }
    }

    pub fn check(&self, ctx: &TriContext) -> Result<()> {
        for axis in Axis::ALL {
            let len = ctx.len(axis);
            if len > self.per_axis {
                return Err(Error::SizeCap {
                    axis: Some(axis),
                    len,
                    cap: self.per_axis,
                });
            }
        }
        Ok(())
    }

    pub fn entities(&self) -> usize {
        3 * self.per_axis
    }

    pub fn check_entities(&self, len: usize) -> Result<()> {
        if len > self.entities() {
            return Err(Error::SizeCap {
                axis: None,
                len,
                cap: self.entities(),
            });
        }
        Ok(())
    }
}

impl Default for SizeCap {
    fn default() -> Self {
        SizeCap::DEFAULT
    }
}

/// Triconcepts as the component-wise maximal trisets.
///
/// For every pair `(A, B)` the largest fitting `C` is taken by scanning the
/// incidence; a triple is kept when no single element can be added to any
/// component. Never calls `h`.
pub fn brute_force_triconcepts(ctx: &TriContext, cap: SizeCap) -> Result<Vec<Triconcept>> {
    cap.check(ctx)?;
    let [ng, nm, nb] = ctx.sizes();
    let fits = |a: &AxisSet, b: &AxisSet, c: &AxisSet| {
        a.iter()
            .all(|g| b.iter().all(|m| c.iter().all(|k| ctx.contains(g, m, k))))
    };
    let mut out = BTreeSet::new();
    for a in ctx.full(Axis::Object).subsets() {
        for b in ctx.full(Axis::Attribute).subsets() {
            let c: AxisSet = (0..nb)
                .filter(|&k| a.iter().all(|g| b.iter().all(|m| ctx.contains(g, m, k))))
                .collect();
            let grows_a = (0..ng).any(|g| !a.contains(g) && fits(&a.with(g), &b, &c));
            let grows_b = (0..nm).any(|m| !b.contains(m) && fits(&a, &b.with(m), &c));
            if !grows_a && !grows_b {
                out.insert(Triconcept::new_unchecked([a, b, c]));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Every triset of the context, empty-product ones included, sorted.
pub fn all_trisets(ctx: &TriContext, cap: SizeCap) -> Result<Vec<Triset>> {
    cap.check(ctx)?;
    let mut out = Vec::new();
    for x in ctx.full(Axis::Object).subsets() {
        for y in ctx.full(Axis::Attribute).subsets() {
            let zmax = ctx.derive_product(Axis::Condition, &x, &y);
            for z in zmax.subsets() {
                out.push(Triset::new_unchecked([x, y, z]));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `{ h(s) : s a triset }`, sorted.
pub fn fixpoint_triconcepts(ctx: &TriContext, cap: SizeCap) -> Result<Vec<Triconcept>> {
    let set: BTreeSet<_> = all_trisets(ctx, cap)?
        .iter()
        .map(|s| h_close(ctx, s))
        .collect();
    Ok(set.into_iter().collect())
}

/// Reading of `≠` in the power context.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PowerVariant {
    /// All triples except `(a, a, a)`.
    #[default]
    NotAllEqual,
    /// Only triples with three distinct entries.
    PairwiseDistinct,
}

fn numbered(n: usize) -> Vec<alloc::string::String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// The `n × n × n` power context.
pub fn power_context(n: usize, variant: PowerVariant) -> Result<TriContext> {
    let mut t = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let keep = match variant {
                    PowerVariant::NotAllEqual => !(a == b && b == c),
                    PowerVariant::PairwiseDistinct => a != b && b != c && a != c,
                };
                if keep {
                    t.push((a, b, c));
                }
            }
        }
    }
    TriContext::new(numbered(n), numbered(n), numbered(n), &t)
}

/// The `m × m × m` diagonal context `{(a, a, a)}`.
pub fn diagonal_context(m: usize) -> Result<TriContext> {
    let t: Vec<_> = (0..m).map(|a| (a, a, a)).collect();
    TriContext::new(numbered(m), numbered(m), numbered(m), &t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const CAP: SizeCap = SizeCap::DEFAULT;

    #[test]
    fn k1_concepts() {
        let k = fixtures::nonmonotone();
        let got = brute_force_triconcepts(&k, CAP).unwrap();
        let want: BTreeSet<_> = [
            k.triconcept_of(&["u1", "u2"], &["t1", "t2"], &["r1"]),
            k.triconcept_of(&["u1", "u2"], &["t1"], &["r1", "r2"]),
            k.triconcept_of(&["u1", "u2", "u3"], &["t1", "t2", "t3"], &[]),
            k.triconcept_of(&["u1", "u2", "u3"], &[], &["r1", "r2"]),
            k.triconcept_of(&[], &["t1", "t2", "t3"], &["r1", "r2"]),
        ]
        .into_iter()
        .map(|c| c.unwrap())
        .collect();
        assert_eq!(got, want.into_iter().collect::<Vec<_>>());
        assert_eq!(fixpoint_triconcepts(&k, CAP).unwrap(), got);
    }

    #[test]
    fn families() {
        assert_eq!(power_context(1, PowerVariant::NotAllEqual).unwrap().incidence_len(), 0);
        assert_eq!(power_context(2, PowerVariant::NotAllEqual).unwrap().incidence_len(), 6);
        assert_eq!(power_context(3, PowerVariant::PairwiseDistinct).unwrap().incidence_len(), 6);
        assert_eq!(diagonal_context(3).unwrap().incidence_len(), 3);
        for n in 1..=3 {
            let p = power_context(n, PowerVariant::NotAllEqual).unwrap();
            assert_eq!(brute_force_triconcepts(&p, CAP).unwrap().len(), 3usize.pow(n as u32));
        }
    }

    #[test]
    fn diagonal_concepts() {
        let d = diagonal_context(2).unwrap();
        let cs = brute_force_triconcepts(&d, CAP).unwrap();
        assert_eq!(cs.len(), 5);
        assert!(cs.contains(&d.triconcept_of(&["1"], &["1"], &["1"]).unwrap()));
        assert!(cs.contains(&d.triconcept_of(&["2"], &["2"], &["2"]).unwrap()));
    }

    #[test]
    fn empty_incidence_has_three_boundary_concepts() {
        let k = TriContext::from_labels(&["a", "b"], &["m", "n"], &["x", "y"], &[]).unwrap();
        assert_eq!(brute_force_triconcepts(&k, CAP).unwrap().len(), 3);
        assert_eq!(fixpoint_triconcepts(&k, CAP).unwrap().len(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let p = power_context(6, PowerVariant::NotAllEqual).unwrap();
        assert!(matches!(
            brute_force_triconcepts(&p, CAP),
            Err(Error::SizeCap { .. })
        ));
        assert!(brute_force_triconcepts(&p, SizeCap::new(6)).is_ok());
    }
}
