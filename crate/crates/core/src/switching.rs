//! Switching generators, their counts and the weeded triset system.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bits::EntitySet;
use crate::closure::h_close;
use crate::concepts::{fixpoint_triconcepts, SizeCap};
use crate::context::{TriContext, Triconcept, Triset};
use crate::error::Result;
use crate::listing::{PartialClosure, SetSystem};

/// `tuple(flat(c₁) ∩ flat(c₂))` for distinct triconcepts, with non-empty flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingGenerator {
    pub triset: Triset,
    /// Every pair `(c₁, c₂)` with `c₁ < c₂` producing the triset.
    pub witnesses: Vec<(Triconcept, Triconcept)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SwitchingGenerators {
    /// Generators with non-empty product, sorted.
    pub proper: Vec<SwitchingGenerator>,
    /// Generators whose product is empty; all ⊑-equivalent.
    pub empty_product: Vec<SwitchingGenerator>,
}

impl SwitchingGenerators {
    pub fn contains(&self, t: &Triset) -> bool {
        self.proper
            .iter()
            .chain(&self.empty_product)
            .any(|g| g.triset == *t)
    }
}

fn pairwise(concepts: &[Triconcept]) -> SwitchingGenerators {
    let mut by: BTreeMap<Triset, Vec<(Triconcept, Triconcept)>> = BTreeMap::new();
    for (i, a) in concepts.iter().enumerate() {
        for b in &concepts[i + 1..] {
            let s = a.as_triset().meet(&b.as_triset());
            if s.parts().iter().any(|p| !p.is_empty()) {
                by.entry(s).or_default().push((*a, *b));
            }
        }
    }
    let mut out = SwitchingGenerators::default();
    for (triset, witnesses) in by {
        let g = SwitchingGenerator { triset, witnesses };
        if triset.is_empty_product() {
            out.empty_product.push(g);
        } else {
            out.proper.push(g);
        }
    }
    out
}

/// All switching generators of the context.
pub fn switching_generators(ctx: &TriContext, cap: SizeCap) -> Result<SwitchingGenerators> {
    Ok(pairwise(&fixpoint_triconcepts(ctx, cap)?))
}

/// A non-empty-product triset equal to the meet of all (at least two)
/// triconcepts containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGenerator {
    pub triset: Triset,
    pub covering: Vec<Triconcept>,
}

/// Meets of two or more triconcepts with non-empty product.
///
/// Contains every proper pairwise generator, plus meets that need three or
/// more concepts.
pub fn intersection_generators(
    ctx: &TriContext,
    cap: SizeCap,
) -> Result<Vec<IntersectionGenerator>> {
    let cs = fixpoint_triconcepts(ctx, cap)?;
    let mut meets: Vec<Triset> = cs.iter().map(|c| c.as_triset()).collect();
    let mut i = 0;
    while i < meets.len() {
        for j in 0..i {
            let m = meets[i].meet(&meets[j]);
            if !m.is_empty_product() && !meets.contains(&m) {
                meets.push(m);
            }
        }
        i += 1;
    }
    let mut out: Vec<_> = meets
        .into_iter()
        .filter(|t| !t.is_empty_product())
        .filter_map(|t| {
            let covering: Vec<_> = cs.iter().filter(|c| t.is_sub(&c.as_triset())).copied().collect();
            (covering.len() >= 2).then_some(IntersectionGenerator { triset: t, covering })
        })
        .collect();
    out.sort_by_key(|g| g.triset);
    Ok(out)
}

/// How distinct generators are counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CountConvention {
    /// Equal products are one generator; all empty products count once.
    #[default]
    Product,
    /// Distinct component triples.
    Componentwise,
}

pub fn count_switching_generators(
    ctx: &TriContext,
    convention: CountConvention,
    cap: SizeCap,
) -> Result<usize> {
    let g = switching_generators(ctx, cap)?;
    // Non-empty products determine their components, so only the empty class collapses.
    Ok(match convention {
        CountConvention::Product => g.proper.len() + usize::from(!g.empty_product.is_empty()),
        CountConvention::Componentwise => g.proper.len() + g.empty_product.len(),
    })
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// `Σ_{k₁=0}^{n-1} Σ_{k₂=0}^{n-k₁-1} Σ_{k₃=0}^{n-k₁-k₂-1} C(n,k₁) C(n-k₁,k₂) C(n-k₁-k₂,k₃)`.
pub fn triple_sum(n: u32) -> u128 {
    let mut total = 0;
    for k1 in 0..n {
        for k2 in 0..n - k1 {
            for k3 in 0..n - k1 - k2 {
                total += binomial(n, k1) * binomial(n - k1, k2) * binomial(n - k1 - k2, k3);
            }
        }
    }
    total
}

/// `4ⁿ − 3ⁿ`.
pub fn closed_form(n: u32) -> u128 {
    4u128.pow(n) - 3u128.pow(n)
}

/// Which trisets are removed to obtain the weeded system.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WeedingRule {
    /// Keep empty-product trisets and trisets lying under exactly one
    /// triconcept; this drops everything under a proper generator.
    #[default]
    SingleCover,
    /// Remove exactly the switching generators.
    Literal,
}

/// Trisets surviving the removal of switching generators.
#[derive(Clone, Debug)]
pub struct WeededSystem<'a> {
    ctx: &'a TriContext,
    rule: WeedingRule,
    concepts: Vec<Triconcept>,
    generators: SwitchingGenerators,
}

impl<'a> WeededSystem<'a> {
    pub fn new(ctx: &'a TriContext, rule: WeedingRule, cap: SizeCap) -> Result<Self> {
        let concepts = fixpoint_triconcepts(ctx, cap)?;
        let generators = pairwise(&concepts);
        Ok(WeededSystem {
            ctx,
            rule,
            concepts,
            generators,
        })
    }

    pub fn context(&self) -> &'a TriContext {
        self.ctx
    }

    pub fn rule(&self) -> WeedingRule {
        self.rule
    }

    pub fn concepts(&self) -> &[Triconcept] {
        &self.concepts
    }

    pub fn generators(&self) -> &SwitchingGenerators {
        &self.generators
    }

    pub fn contains(&self, t: &Triset) -> bool {
        match self.rule {
            WeedingRule::Literal => !self.generators.contains(t),
            WeedingRule::SingleCover => {
                t.is_empty_product()
                    || self
                        .concepts
                        .iter()
                        .filter(|c| t.is_sub(&c.as_triset()))
                        .take(2)
                        .count()
                        == 1
            }
        }
    }

    /// The members as flat sets over `G ⊔ M ⊔ B`.
    pub fn flat_family(&self) -> WeededFlatFamily<'_, 'a> {
        WeededFlatFamily { system: self }
    }
}

/// A [`WeededSystem`] seen as a family of flat sets.
#[derive(Clone, Copy, Debug)]
pub struct WeededFlatFamily<'s, 'a> {
    system: &'s WeededSystem<'a>,
}

impl SetSystem for WeededFlatFamily<'_, '_> {
    fn ground_len(&self) -> usize {
        self.system.ctx.flat_len()
    }

    fn contains(&self, s: &EntitySet) -> bool {
        let ctx = self.system.ctx;
        match ctx.tuple(s) {
            Ok(p) if ctx.product_inside(&p) => self.system.contains(&Triset::new_unchecked(p)),
            _ => false,
        }
    }
}

/// `h` acting on flat sets: `flat ∘ h ∘ tuple`, undefined off trisets.
#[derive(Clone, Copy, Debug)]
pub struct FlatH<'a> {
    pub ctx: &'a TriContext,
}

impl PartialClosure for FlatH<'_> {
    fn close(&self, s: &EntitySet) -> Option<EntitySet> {
        let p = self.ctx.tuple(s).ok()?;
        self.ctx
            .product_inside(&p)
            .then(|| self.ctx.flat(&h_close(self.ctx, &Triset::new_unchecked(p)).parts()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::{diagonal_context, power_context, PowerVariant};
    use crate::fixtures;
    use crate::listing::list_closed_sets;

    const CAP: SizeCap = SizeCap::DEFAULT;

    #[test]
    fn k1_generator() {
        let k = fixtures::nonmonotone();
        let g = switching_generators(&k, CAP).unwrap();
        let s = k.triset_of(&["u1", "u2"], &["t1"], &["r1"]).unwrap();
        assert_eq!(g.proper.len(), 1);
        assert_eq!(g.proper[0].triset, s);
        assert_eq!(g.proper[0].witnesses.len(), 1);
        for gen in g.proper.iter().chain(&g.empty_product) {
            for (a, b) in &gen.witnesses {
                assert_ne!(a, b);
                assert_eq!(a.as_triset().meet(&b.as_triset()), gen.triset);
            }
        }
    }

    #[test]
    fn k4_generators() {
        let k = fixtures::noncommuting();
        let g = switching_generators(&k, CAP).unwrap();
        let s1 = k.triset_of(&["u1"], &["t4"], &["r1"]).unwrap();
        let s2 = k.triset_of(&["u1", "u2"], &["t3", "t4"], &["r1"]).unwrap();
        assert!(g.contains(&s1));
        assert!(!g.contains(&s2));
        let multi = intersection_generators(&k, CAP).unwrap();
        assert!(multi.iter().any(|m| m.triset == s1));
        let m2 = multi.iter().find(|m| m.triset == s2).unwrap();
        assert_eq!(m2.covering.len(), 3);
    }

    #[test]
    fn diagonal_is_generator_free() {
        for m in 1..=4 {
            let d = diagonal_context(m).unwrap();
            assert!(switching_generators(&d, CAP).unwrap().proper.is_empty());
        }
    }

    #[test]
    fn power_counts() {
        let want = [(1, 1, 3), (2, 7, 27), (3, 115, 189)];
        for (n, product, comp) in want {
            let p = power_context(n, PowerVariant::NotAllEqual).unwrap();
            assert_eq!(count_switching_generators(&p, CountConvention::Product, CAP).unwrap(), product);
            assert_eq!(
                count_switching_generators(&p, CountConvention::Componentwise, CAP).unwrap(),
                comp
            );
        }
    }

    #[test]
    fn triple_sum_matches_closed_form() {
        // Direct count of (k1, k2, k3, k4) compositions with k4 >= 1.
        for n in 0..=8u32 {
            let mut brute = 0u128;
            for code in 0..4u32.pow(n) {
                let mut c = code;
                let mut has_fourth = false;
                for _ in 0..n {
                    has_fourth |= c % 4 == 3;
                    c /= 4;
                }
                brute += u128::from(has_fourth);
            }
            assert_eq!(triple_sum(n), brute);
            assert_eq!(closed_form(n), brute);
        }
    }

    #[test]
    fn weeded_membership() {
        let k = fixtures::nonmonotone();
        let w = WeededSystem::new(&k, WeedingRule::SingleCover, CAP).unwrap();
        let lit = WeededSystem::new(&k, WeedingRule::Literal, CAP).unwrap();
        let gen = k.triset_of(&["u1", "u2"], &["t1"], &["r1"]).unwrap();
        let c = k.triset_of(&["u1", "u2"], &["t1", "t2"], &["r1"]).unwrap();
        let small = k.triset_of(&["u1"], &["t1"], &["r1"]).unwrap();
        assert!(!w.contains(&gen) && !lit.contains(&gen));
        assert!(w.contains(&c) && lit.contains(&c));
        assert!(lit.contains(&small));
        assert!(!w.contains(&small));
        for t in w.concepts() {
            assert!(w.contains(&t.as_triset()));
        }
    }

    #[test]
    fn listing_weeded_recovers_concepts() {
        for k in [
            fixtures::nonmonotone(),
            fixtures::closed_non_maximal(),
            fixtures::noncommuting(),
            diagonal_context(3).unwrap(),
        ] {
            let w = WeededSystem::new(&k, WeedingRule::SingleCover, CAP).unwrap();
            let fixed = list_closed_sets(&w.flat_family(), &FlatH { ctx: &k }).unwrap();
            let mut want: Vec<_> = w.concepts().iter().map(|c| k.flat(&c.parts())).collect();
            want.sort();
            assert_eq!(fixed, want);
        }
    }

    #[test]
    fn power3_weeded_family_is_not_accessible() {
        use crate::setsys::{EmptySetPolicy, ExplicitFamily};
        let p = power_context(3, PowerVariant::NotAllEqual).unwrap();
        let w = WeededSystem::new(&p, WeedingRule::SingleCover, CAP).unwrap();
        let fam = ExplicitFamily::materialize(&w.flat_family(), EmptySetPolicy::AsIs).unwrap();
        assert!(!fam.is_accessible());
    }
}
