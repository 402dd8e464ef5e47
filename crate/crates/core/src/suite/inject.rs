//! Extension by decomposition, relative injectivity and class closure.

use super::{describe_hom, describe_module, SuiteConfig, SuiteReport, Tally, TEST_RINGS};
use crate::error::Result;
use crate::hom::{solve_extension, HomGroup};
use crate::injectivity::{
    audit_class_closure, baer_ideal_test, is_rel_injective, is_rel_injective_by_extension, noetherian_bounded_check,
    DecompositionPlan, UniverseSpec,
};
use crate::pp::Mode;

/// The chain-based extension agrees with the direct linear solve on every
/// kind-submodule inclusion `f` and every `g: A -> E`.
pub(super) fn extension_algorithm(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(8);
    let mut t = Tally::new("extension-algorithm", &rings, Some(bound));
    for ring in &rings {
        for mode in Mode::ALL {
            let u = UniverseSpec::new(ring, mode, bound).with_limits(cfg.limits).realize()?;
            for i in 0..u.members.len() {
                for s in u.mode_submodules(i) {
                    let f = s.inclusion();
                    let plan = match DecompositionPlan::new(f, mode) {
                        Ok(p) => p,
                        Err(e) => {
                            t.check(false, || format!("{mode}: no decomposition of {}: {e}", describe_hom(f)));
                            continue;
                        }
                    };
                    t.count("embeddings", 1);
                    t.count("steps", plan.chain.len() as u64 - 1);
                    for e in &u.members {
                        for g in HomGroup::new(f.source(), e)?.elements() {
                            let run = plan.extend(&g, &cfg.limits)?;
                            let direct = solve_extension(f, &g)?;
                            t.count("problems", 1);
                            t.count("nodes", run.nodes);
                            if direct.is_some() {
                                t.count("extendable", 1);
                            }
                            let ok = match &run.h {
                                Some(h) => direct.is_some() && h.compose_after(f)? == g,
                                None => direct.is_none(),
                            };
                            t.check(ok, || {
                                format!("{mode}: f {} g {} chain {} direct {}", describe_hom(f), describe_hom(&g), run.h.is_some(), direct.is_some())
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(t.finish())
}

/// Over `Z/n` the plain injectives within the bound are exactly the free
/// modules; the ideal test and the per-map solver agree with the verdict;
/// in the pure mode every module is injective.
pub(super) fn classification(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(16);
    let mut t = Tally::new("injectivity-classification", &rings, Some(bound));
    t.note("the per-map solver is cross-checked on subjects of size at most 12");
    t.note("the ideal test and the free-module oracle run only when the ring itself is within the bound");
    for ring in &rings {
        for mode in Mode::ALL {
            let u = UniverseSpec::new(ring, mode, bound).with_limits(cfg.limits).realize()?;
            for e in &u.members {
                let rep = is_rel_injective(e, &u)?;
                t.count("subjects", 1);
                if rep.verdict {
                    t.count("injective", 1);
                }
                if let Some(c) = &rep.counterexample {
                    t.check(c.replay()?, || format!("{mode}: counterexample does not replay for {}", describe_module(e)));
                }
                if e.cardinality() <= 12 {
                    t.count("dual-path", 1);
                    t.check(is_rel_injective_by_extension(e, &u)? == rep.verdict, || {
                        format!("{mode}: solver disagrees on {}", describe_module(e))
                    });
                }
                match mode {
                    Mode::Pure => t.check(rep.verdict, || format!("pure: not injective {}", describe_module(e))),
                    Mode::Emb => {
                        if ring.cardinality() <= bound {
                            t.count("baer", 1);
                            let b = baer_ideal_test(e, mode)?;
                            t.check(b.pass == rep.verdict, || {
                                format!("ideal test {} verdict {} on {}", b.pass, rep.verdict, describe_module(e))
                            });
                        }
                        // the oracle needs R itself in the universe
                        if ring.is_cyclic() && ring.cardinality() <= bound {
                            let n = ring.cardinality() as i64;
                            let free = e.orders().iter().all(|&o| o == n);
                            t.count("free-vs-injective", 1);
                            t.check(free == rep.verdict, || {
                                format!("free {free} verdict {} on {}", rep.verdict, describe_module(e))
                            });
                        }
                    }
                    Mode::Rd => {}
                }
            }
        }
    }
    Ok(t.finish())
}

/// Sums, split chains and mutual embeddings among the verdict-injectives.
pub(super) fn noetherian(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(16);
    let mut t = Tally::new("noetherian", &rings, Some(bound));
    t.note("sums of up to three injectives");
    for ring in &rings {
        for mode in Mode::ALL {
            let u = UniverseSpec::new(ring, mode, bound).with_limits(cfg.limits).realize()?;
            let rep = noetherian_bounded_check(&u, 3)?;
            t.count("injectives", rep.injectives.len() as u64);
            t.count("sums", rep.sums_checked as u64);
            t.count("chains", rep.chains_checked as u64);
            t.count("mutual-embeddings", rep.csb_checked as u64);
            t.check(rep.closed(), || format!("{mode} over {}: {rep:?}", super::ring_label(ring)));
        }
    }
    Ok(t.finish())
}

/// The full bounded class is closed under the operations the audit checks.
pub(super) fn class_closure(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(16);
    let mut t = Tally::new("class-closure", &rings, Some(bound));
    for ring in &rings {
        for mode in Mode::ALL {
            let u = UniverseSpec::new(ring, mode, bound).with_limits(cfg.limits).realize()?;
            let rep = audit_class_closure(&u)?;
            t.count("members", rep.members as u64);
            t.count("checked", rep.checked as u64);
            t.check(rep.closed(), || {
                let v = &rep.violations[0];
                format!("{mode} over {}: {:?} from {:?}", super::ring_label(ring), v.kind, v.from)
            });
        }
    }
    Ok(t.finish())
}
