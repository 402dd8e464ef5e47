//! Pushouts and direct sums of kind-embeddings; purity against splitting.

use super::{describe_hom, SuiteConfig, SuiteReport, Tally, TEST_RINGS};
use crate::error::Result;
use crate::hom::{Hom, HomGroup};
use crate::injectivity::UniverseSpec;
use crate::module::{all_submodules, direct_sum};
use crate::pp::{classify_embedding, is_mode_embedding, Mode};
use crate::pushout::pushout;

/// Every kind-embedding `f1: M -> N1` (up to automorphisms of `M`, which do
/// not change the pushout) against every map `f2: M -> N2`.
pub(super) fn push_preservation(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(12);
    let mut t = Tally::new("push-preservation", &rings, Some(bound));
    for ring in &rings {
        for mode in Mode::ALL {
            let u = UniverseSpec::new(ring, mode, bound).with_limits(cfg.limits).realize()?;
            for i in 0..u.members.len() {
                for s in u.mode_submodules(i) {
                    let f1 = s.inclusion();
                    for n2 in &u.members {
                        for f2 in HomGroup::new(s.module(), n2)?.elements() {
                            let p = pushout(f1, &f2)?;
                            let c = p.check_legs(mode);
                            t.count("squares", 1);
                            if c.f2 {
                                t.count("both-legs", 1);
                            }
                            t.check(c.preserved(), || {
                                format!("{mode}: f1 {} f2 {} {c:?}", describe_hom(f1), describe_hom(&f2))
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(t.finish())
}

/// `f + g: A + B -> C + D` for kind-embeddings `f`, `g` with `|C||D|`
/// within the bound.
pub(super) fn direct_sums(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(12);
    let mut t = Tally::new("direct-sums", &rings, Some(bound));
    for ring in &rings {
        for mode in Mode::ALL {
            let u = UniverseSpec::new(ring, mode, bound).with_limits(cfg.limits).realize()?;
            let n = u.members.len();
            for i in 0..n {
                for j in 0..n {
                    let (c, d) = (&u.members[i], &u.members[j]);
                    if c.cardinality() * d.cardinality() > bound {
                        continue;
                    }
                    let cd = direct_sum(c, d)?;
                    for s in u.mode_submodules(i) {
                        for r in u.mode_submodules(j) {
                            let ab = direct_sum(s.module(), r.module())?;
                            let left = cd.inj[0].compose_after(s.inclusion())?.compose_after(&ab.proj[0])?;
                            let right = cd.inj[1].compose_after(r.inclusion())?.compose_after(&ab.proj[1])?;
                            let sum = left.add(&right);
                            t.count("pairs", 1);
                            t.check(is_mode_embedding(&sum, mode), || format!("{mode}: {}", describe_hom(&sum)));
                        }
                    }
                }
            }
        }
    }
    Ok(t.finish())
}

/// Over `Z/n` the divisibility check and the retraction agree; everywhere
/// the verdicts are nested and every failure carries a witness that
/// replays.
pub(super) fn purity_split(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(16);
    let mut t = Tally::new("purity-split", &rings, Some(bound));
    t.note("rd = split is required over cyclic rings only");
    for ring in &rings {
        let u = UniverseSpec::new(ring, Mode::Emb, bound).with_limits(cfg.limits).realize()?;
        for b in &u.members {
            for s in all_submodules(b) {
                let f: &Hom = s.inclusion();
                let c = classify_embedding(f);
                t.count("embeddings", 1);
                t.check(c.is_embedding, || format!("inclusion not injective: {}", describe_hom(f)));
                t.check(!c.is_split || c.is_pure, || format!("split but not pure: {}", describe_hom(f)));
                t.check(!c.is_pure || c.is_rd, || format!("pure but not rd: {}", describe_hom(f)));
                t.check(c.is_pure == is_mode_embedding(f, Mode::Pure), || format!("mode check: {}", describe_hom(f)));
                t.check(c.is_rd == is_mode_embedding(f, Mode::Rd), || format!("rd check: {}", describe_hom(f)));
                if ring.is_cyclic() {
                    t.count("rd-vs-split", 1);
                    t.check(c.is_rd == c.is_split, || format!("rd {} split {}: {}", c.is_rd, c.is_split, describe_hom(f)));
                }
                match &c.witness {
                    None => t.check(c.is_split, || format!("no witness for non-split {}", describe_hom(f))),
                    Some(w) => {
                        t.count("witnesses", 1);
                        let ok = !c.is_split && w.replay(f)?;
                        t.check(ok, || format!("witness {w:?} does not replay on {}", describe_hom(f)));
                    }
                }
            }
        }
    }
    Ok(t.finish())
}
