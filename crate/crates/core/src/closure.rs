//! The operator `h`, the `σ_ijk` family and searches for their failures.

use alloc::vec::Vec;
use core::fmt;

use crate::concepts::{all_trisets, fixpoint_triconcepts, SizeCap};
use crate::context::{Axis, TriContext, Triconcept, Triset};
use crate::error::Result;
use crate::switching::{switching_generators, WeededSystem, WeedingRule};

/// A permutation `(i, j, k)` of the three axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AxisOrdering([Axis; 3]);

impl AxisOrdering {
    /// All six orderings, lexicographic by index triple.
    pub const ALL: [AxisOrdering; 6] = {
        use Axis::*;
        [
            AxisOrdering([Object, Attribute, Condition]),
            AxisOrdering([Object, Condition, Attribute]),
            AxisOrdering([Attribute, Object, Condition]),
            AxisOrdering([Attribute, Condition, Object]),
            AxisOrdering([Condition, Object, Attribute]),
            AxisOrdering([Condition, Attribute, Object]),
        ]
    };

    /// The ordering `(1, 2, 3)`, which is `h`.
    pub const H: AxisOrdering = AxisOrdering::ALL[0];

    /// From 1-based indices; `None` unless they form a permutation.
    pub fn new(i: usize, j: usize, k: usize) -> Option<Self> {
        let a = [Axis::from_number(i)?, Axis::from_number(j)?, Axis::from_number(k)?];
        (a[0] != a[1] && a[1] != a[2] && a[0] != a[2]).then_some(AxisOrdering(a))
    }

    pub fn axes(&self) -> [Axis; 3] {
        self.0
    }
}

impl fmt::Display for AxisOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in self.0 {
            write!(f, "{}", a.index() + 1)?;
        }
        Ok(())
    }
}

/// `h(X, Y, Z) = (U, V, W)` with `U = (Y×Z)⁽¹⁾`, `V = (U×Z)⁽²⁾`, `W = (U×V)⁽³⁾`.
///
/// Written directly against the incidence so it can serve as an oracle for
/// [`sigma_close`].
pub fn h_close(ctx: &TriContext, s: &Triset) -> Triconcept {
    let [ng, nm, nb] = ctx.sizes();
    let (y, z) = (s.y(), s.z());
    let u: crate::AxisSet = (0..ng)
        .filter(|&g| y.iter().all(|m| z.iter().all(|b| ctx.contains(g, m, b))))
        .collect();
    let v: crate::AxisSet = (0..nm)
        .filter(|&m| u.iter().all(|g| z.iter().all(|b| ctx.contains(g, m, b))))
        .collect();
    let w: crate::AxisSet = (0..nb)
        .filter(|&b| u.iter().all(|g| v.iter().all(|m| ctx.contains(g, m, b))))
        .collect();
    Triconcept::new_unchecked([u, v, w])
}

/// Cascade of derivations in the order given by `ord`.
pub fn sigma_close(ctx: &TriContext, ord: AxisOrdering, s: &Triset) -> Triconcept {
    let mut p = s.parts();
    for a in ord.0 {
        let (q, r) = a.others();
        p[a.index()] = ctx.derive_product(a, &p[q.index()], &p[r.index()]);
    }
    Triconcept::new_unchecked(p)
}

/// The operators whose monotonicity is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    H,
    Sigma(AxisOrdering),
}

impl Operator {
    pub fn apply(&self, ctx: &TriContext, s: &Triset) -> Triconcept {
        match *self {
            Operator::H => h_close(ctx, s),
            Operator::Sigma(o) => sigma_close(ctx, o, s),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::H => f.write_str("h"),
            Operator::Sigma(o) => write!(f, "sigma_{o}"),
        }
    }
}

/// Family of trisets searched for monotonicity violations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrisetDomain {
    Full,
    Weeded(WeedingRule),
}

/// `lower ⊑ upper` while the closures are not comparable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonotonicityWitness {
    pub lower: Triset,
    pub upper: Triset,
    pub closed_lower: Triconcept,
    pub closed_upper: Triconcept,
}

/// Members of `domain` in search order: lower candidates and upper candidates.
///
/// Lowers have non-empty product; switching generators come first, then the
/// rest, each by (product size, canonical order). Uppers are the triconcepts
/// of the domain followed by the other members in the same order.
fn search_order(
    ctx: &TriContext,
    domain: TrisetDomain,
    cap: SizeCap,
) -> Result<(Vec<Triset>, Vec<Triset>)> {
    let mut members = all_trisets(ctx, cap)?;
    if let TrisetDomain::Weeded(rule) = domain {
        let w = WeededSystem::new(ctx, rule, cap)?;
        members.retain(|t| w.contains(t));
    }
    let gens = switching_generators(ctx, cap)?;
    let concepts = fixpoint_triconcepts(ctx, cap)?;
    let is_gen = |t: &Triset| gens.proper.iter().any(|g| g.triset == *t);
    let is_concept = |t: &Triset| concepts.binary_search(&Triconcept::new_unchecked(t.parts())).is_ok();

    let mut lowers: Vec<_> = members.iter().filter(|t| !t.is_empty_product()).copied().collect();
    lowers.sort_by_key(|t| (!is_gen(t), t.product_len(), *t));
    let mut uppers = members;
    uppers.sort_by_key(|t| (!is_concept(t), t.product_len(), *t));
    Ok((lowers, uppers))
}

/// Exhaustive search for `x ⊑ y` in `domain` with `op(x) ⋢ op(y)`.
///
/// Lower trisets with empty product are skipped: they form the ⊑-bottom class
/// and are not constrained by the monotonicity claim.
pub fn find_monotonicity_witness(
    ctx: &TriContext,
    op: Operator,
    domain: TrisetDomain,
    cap: SizeCap,
) -> Result<Option<MonotonicityWitness>> {
    let (lowers, uppers) = search_order(ctx, domain, cap)?;
    let up: Vec<_> = uppers.iter().map(|u| (u, op.apply(ctx, u))).collect();
    for x in &lowers {
        let cx = op.apply(ctx, x);
        for (y, cy) in &up {
            if x.leq(y) && !cx.as_triset().leq(&cy.as_triset()) {
                return Ok(Some(MonotonicityWitness {
                    lower: *x,
                    upper: **y,
                    closed_lower: cx,
                    closed_upper: *cy,
                }));
            }
        }
    }
    Ok(None)
}

/// Pairs of non-empty-product triconcepts with equal extent, `Y₁ ⊂ Y₂` and `Z₁ ⊃ Z₂`.
pub fn same_extent_antiordinal_pairs(
    ctx: &TriContext,
    cap: SizeCap,
) -> Result<Vec<(Triconcept, Triconcept)>> {
    let cs: Vec<_> = fixpoint_triconcepts(ctx, cap)?
        .into_iter()
        .filter(|c| !c.is_empty_product())
        .collect();
    let mut out = Vec::new();
    for a in &cs {
        for b in &cs {
            if a.extent() == b.extent()
                && a.intent() != b.intent()
                && a.intent().is_subset(&b.intent())
                && b.modus().is_subset(&a.modus())
                && a.modus() != b.modus()
            {
                out.push((*a, *b));
            }
        }
    }
    Ok(out)
}

/// Distinct triconcepts whose meet has a non-empty product, with that meet.
pub fn global_closure_obstructions(
    ctx: &TriContext,
    cap: SizeCap,
) -> Result<Vec<(Triconcept, Triconcept, Triset)>> {
    let cs = fixpoint_triconcepts(ctx, cap)?;
    let mut out = Vec::new();
    for (i, a) in cs.iter().enumerate() {
        for b in &cs[i + 1..] {
            let s = a.as_triset().meet(&b.as_triset());
            if !s.is_empty_product() {
                out.push((*a, *b, s));
            }
        }
    }
    Ok(out)
}

/// First obstruction in canonical pair order, if any.
pub fn no_global_closure_condition(
    ctx: &TriContext,
    cap: SizeCap,
) -> Result<Option<(Triconcept, Triconcept, Triset)>> {
    Ok(global_closure_obstructions(ctx, cap)?.into_iter().next())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonCommutativity {
    pub first: AxisOrdering,
    pub second: AxisOrdering,
    pub triset: Triset,
    /// `σ_first(σ_second(s))`
    pub first_after_second: Triconcept,
    /// `σ_second(σ_first(s))`
    pub second_after_first: Triconcept,
}

/// Searches trisets (non-empty product, generators first) and ordering pairs
/// for `σ_a ∘ σ_b ≠ σ_b ∘ σ_a`.
pub fn check_non_commutativity(
    ctx: &TriContext,
    cap: SizeCap,
) -> Result<Option<NonCommutativity>> {
    let (lowers, _) = search_order(ctx, TrisetDomain::Full, cap)?;
    for s in &lowers {
        for (i, &a) in AxisOrdering::ALL.iter().enumerate() {
            for &b in &AxisOrdering::ALL[i + 1..] {
                let ab = sigma_close(ctx, a, &sigma_close(ctx, b, s).as_triset());
                let ba = sigma_close(ctx, b, &sigma_close(ctx, a, s).as_triset());
                if ab != ba {
                    return Ok(Some(NonCommutativity {
                        first: a,
                        second: b,
                        triset: *s,
                        first_after_second: ab,
                        second_after_first: ba,
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::diagonal_context;
    use crate::fixtures;

    const CAP: SizeCap = SizeCap::DEFAULT;

    #[test]
    fn orderings() {
        assert_eq!(AxisOrdering::ALL.len(), 6);
        assert_eq!(AxisOrdering::new(1, 2, 3), Some(AxisOrdering::H));
        assert_eq!(AxisOrdering::new(1, 1, 3), None);
        assert_eq!(AxisOrdering::new(0, 1, 2), None);
        let names: Vec<_> = AxisOrdering::ALL.iter().map(|o| alloc::format!("{o}")).collect();
        assert_eq!(names, ["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn h_on_k1() {
        let k = fixtures::nonmonotone();
        let x = k.triset_of(&["u1", "u2"], &["t1"], &["r1"]).unwrap();
        let y = k.triset_of(&["u1", "u2"], &["t1"], &["r1", "r2"]).unwrap();
        let hx = k.triconcept_of(&["u1", "u2"], &["t1", "t2"], &["r1"]).unwrap();
        assert_eq!(h_close(&k, &x), hx);
        assert_eq!(h_close(&k, &y).as_triset(), y);
        let e = k.triset_of(&[], &[], &[]).unwrap();
        let he = k.triconcept_of(&["u1", "u2", "u3"], &["t1", "t2", "t3"], &[]).unwrap();
        assert_eq!(h_close(&k, &e), he);
    }

    #[test]
    fn sigma_on_k4() {
        let k = fixtures::noncommuting();
        let s1 = k.triset_of(&["u1"], &["t4"], &["r1"]).unwrap();
        let o = |i, j, l| AxisOrdering::new(i, j, l).unwrap();
        assert_eq!(
            sigma_close(&k, o(1, 2, 3), &s1),
            k.triconcept_of(&["u1", "u2", "u3", "u4"], &["t4"], &["r1"]).unwrap()
        );
        assert_eq!(
            sigma_close(&k, o(2, 1, 3), &s1),
            k.triconcept_of(&["u1"], &["t1", "t2", "t3", "t4"], &["r1"]).unwrap()
        );
        assert_eq!(
            sigma_close(&k, o(3, 1, 2), &s1),
            k.triconcept_of(&["u1"], &["t4"], &["r1", "r2", "r3"]).unwrap()
        );
    }

    #[test]
    fn k1_witness_and_weeding() {
        let k = fixtures::nonmonotone();
        let w = find_monotonicity_witness(&k, Operator::H, TrisetDomain::Full, CAP)
            .unwrap()
            .unwrap();
        assert_eq!(w.lower, k.triset_of(&["u1", "u2"], &["t1"], &["r1"]).unwrap());
        assert_eq!(w.upper, k.triset_of(&["u1", "u2"], &["t1"], &["r1", "r2"]).unwrap());
        let weeded = TrisetDomain::Weeded(WeedingRule::SingleCover);
        assert_eq!(find_monotonicity_witness(&k, Operator::H, weeded, CAP).unwrap(), None);
        let literal = TrisetDomain::Weeded(WeedingRule::Literal);
        let lw = find_monotonicity_witness(&k, Operator::H, literal, CAP).unwrap().unwrap();
        assert_eq!(lw.lower, k.triset_of(&["u1"], &["t1"], &["r1"]).unwrap());
    }

    #[test]
    fn diagonal_has_no_witnesses() {
        let d2 = diagonal_context(2).unwrap();
        assert_eq!(
            find_monotonicity_witness(&d2, Operator::H, TrisetDomain::Full, CAP).unwrap(),
            None
        );
        assert!(same_extent_antiordinal_pairs(&d2, CAP).unwrap().is_empty());
        assert_eq!(check_non_commutativity(&d2, CAP).unwrap(), None);
        let d3 = diagonal_context(3).unwrap();
        assert_eq!(no_global_closure_condition(&d3, CAP).unwrap(), None);
    }

    #[test]
    fn k1_antiordinal_pair() {
        let k = fixtures::nonmonotone();
        let pairs = same_extent_antiordinal_pairs(&k, CAP).unwrap();
        let a = k.triconcept_of(&["u1", "u2"], &["t1"], &["r1", "r2"]).unwrap();
        let b = k.triconcept_of(&["u1", "u2"], &["t1", "t2"], &["r1"]).unwrap();
        assert_eq!(pairs, [(a, b)]);
        let (c1, c2, s) = no_global_closure_condition(&k, CAP).unwrap().unwrap();
        assert_eq!(s, k.triset_of(&["u1", "u2"], &["t1"], &["r1"]).unwrap());
        assert_eq!([c1, c2], [a, b]);
    }

    #[test]
    fn non_commutativity_examples() {
        let k4 = fixtures::noncommuting();
        let nc = check_non_commutativity(&k4, CAP).unwrap().unwrap();
        assert_eq!(nc.triset, k4.triset_of(&["u1"], &["t4"], &["r1"]).unwrap());
        let k1 = fixtures::nonmonotone();
        let nc = check_non_commutativity(&k1, CAP).unwrap().unwrap();
        assert_eq!(nc.triset, k1.triset_of(&["u1", "u2"], &["t1"], &["r1"]).unwrap());
        assert_eq!((nc.first, nc.second), (AxisOrdering::H, AxisOrdering::new(1, 3, 2).unwrap()));
    }
}
