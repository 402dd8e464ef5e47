//! The independence calculus on squares of kind-submodules.

use std::collections::BTreeSet;

use super::{describe_module, SuiteConfig, SuiteReport, Tally, TEST_RINGS};
use crate::error::Result;
use crate::exactlin::CanonicalSubgroup;
use crate::injectivity::UniverseSpec;
use crate::module::{Module, Submodule};
use crate::pp::Mode;
use crate::pushout::{
    find_independence_base_in, is_independent_square, is_independent_submodules, submodule_square,
};

fn indep(m0: &Submodule, m1: &Submodule, m2: &Submodule, m3: &Submodule, mode: Mode) -> Result<bool> {
    is_independent_submodules(m0, m1, m2, m3, mode)
}

fn square_text(mode: Mode, n: &Module, parts: &[(&str, &Submodule)]) -> String {
    let mut s = format!("{mode} in [{}]:", describe_module(n));
    for (name, m) in parts {
        s.push_str(&format!(" {name}={:?}", m.generators()));
    }
    s
}

/// Symmetry, monotonicity, base monotonicity and pasting.
pub(super) fn calculus(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(8);
    let mut t = Tally::new("independence-calculus", &rings, Some(bound));
    t.note("base monotonicity is checked with M1 + M0' as the enlarged left corner");
    for ring in &rings {
        for mode in Mode::ALL {
            let u = UniverseSpec::new(ring, mode, bound).with_limits(cfg.limits).realize()?;
            for (idx, n) in u.members.iter().enumerate() {
                let subs = u.mode_submodules(idx);
                let full = Submodule::full(n);
                for m0 in subs {
                    let above: Vec<&Submodule> = subs.iter().filter(|s| m0.is_subset_of(s)).collect();
                    for m1 in &above {
                        for m2 in &above {
                            let v = indep(m0, m1, m2, &full, mode)?;
                            // the pushout-based verdict, both ways round
                            let [f1, f2, h1, h2] = submodule_square(m0, m1, m2, &full)?;
                            let a = is_independent_square(&f1, &f2, &h1, &h2, mode)?.verdict;
                            let b = is_independent_square(&f2, &f1, &h2, &h1, mode)?.verdict;
                            t.count("squares", 1);
                            t.check(a == b, || format!("symmetry: {}", square_text(mode, n, &[("M0", m0), ("M1", m1), ("M2", m2)])));
                            t.check(a == v, || format!("corner map vs submodules: {}", square_text(mode, n, &[("M0", m0), ("M1", m1), ("M2", m2)])));
                            if !v {
                                continue;
                            }
                            t.count("independent", 1);
                            for m2s in above.iter().filter(|s| s.is_subset_of(m2)) {
                                t.count("monotonicity", 1);
                                t.check(indep(m0, m1, m2s, &full, mode)?, || {
                                    format!("monotonicity: {}", square_text(mode, n, &[("M0", m0), ("M1", m1), ("M2", m2), ("M2'", m2s)]))
                                });
                            }
                            for m1s in above.iter().filter(|s| s.is_subset_of(m1)) {
                                t.count("monotonicity", 1);
                                t.check(indep(m0, m1s, m2, &full, mode)?, || {
                                    format!("monotonicity: {}", square_text(mode, n, &[("M0", m0), ("M1", m1), ("M2", m2), ("M1'", m1s)]))
                                });
                            }
                            for m0s in above.iter().filter(|s| s.is_subset_of(m2)) {
                                let low = m1.sum(m0s);
                                let ok = subs.contains(&low) && indep(m0s, &low, m2, &full, mode)?;
                                t.count("base-monotonicity", 1);
                                t.check(ok, || {
                                    format!("base monotonicity: {}", square_text(mode, n, &[("M0", m0), ("M1", m1), ("M2", m2), ("M0'", m0s)]))
                                });
                            }
                            // pasting along M2 -> M3
                            let low = m1.sum(m2);
                            for m3 in subs.iter().filter(|s| low.is_subset_of(s)) {
                                if !indep(m0, m1, m2, m3, mode)? {
                                    continue;
                                }
                                for m4 in above.iter().filter(|s| m2.is_subset_of(s)) {
                                    if indep(m2, m3, m4, &full, mode)? {
                                        t.count("pasting", 1);
                                        t.check(indep(m0, m1, m4, &full, mode)?, || {
                                            format!(
                                                "pasting: {}",
                                                square_text(mode, n, &[("M0", m0), ("M1", m1), ("M2", m2), ("M3", m3), ("M4", m4)])
                                            )
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(t.finish())
}

/// Every pair of kind-submodules has an independence base.
pub(super) fn local_character(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(12);
    let mut t = Tally::new("local-character", &rings, Some(bound));
    for ring in &rings {
        for mode in Mode::ALL {
            let u = UniverseSpec::new(ring, mode, bound).with_limits(cfg.limits).realize()?;
            for (idx, n) in u.members.iter().enumerate() {
                let subs = u.mode_submodules(idx);
                let full = Submodule::full(n);
                for m1 in subs {
                    for m2 in subs {
                        t.count("pairs", 1);
                        match find_independence_base_in(subs, m1, m2, mode) {
                            Ok((m0, m1e)) => {
                                let nested = m1.is_subset_of(&m1e) && m0.is_subset_of(m2) && m0.is_subset_of(&m1e);
                                let ok = nested && {
                                    let [f1, f2, h1, h2] = submodule_square(&m0, &m1e, m2, &full)?;
                                    is_independent_square(&f1, &f2, &h1, &h2, mode)?.verdict
                                };
                                t.check(ok, || {
                                    format!("base does not verify: {}", square_text(mode, n, &[("M1", m1), ("M2", m2), ("M0", &m0), ("M1'", &m1e)]))
                                });
                            }
                            Err(e) => t.check(false, || {
                                format!("{}: {}", e, square_text(mode, n, &[("M1", m1), ("M2", m2)]))
                            }),
                        }
                    }
                }
            }
        }
    }
    Ok(t.finish())
}

/// Bounded stand-in for the finite witness property: extensions of the
/// outer corner are not searched, so the premise only uses witnesses inside
/// the ambient module.
pub(super) fn witness_surrogate(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let rings = cfg.rings_or(&TEST_RINGS);
    let bound = cfg.bound_or(8);
    let mut t = Tally::new("witness-surrogate", &rings, Some(bound));
    t.note("bounded surrogate: witnesses are searched inside the outer corner only, never in its extensions");
    for ring in &rings {
        for mode in Mode::ALL {
            let u = UniverseSpec::new(ring, mode, bound).with_limits(cfg.limits).realize()?;
            for (idx, n) in u.members.iter().enumerate() {
                let subs = u.mode_submodules(idx);
                let full = Submodule::full(n);
                for m0 in subs {
                    let above: Vec<&Submodule> = subs.iter().filter(|s| m0.is_subset_of(s)).collect();
                    for m1 in &above {
                        for m2 in &above {
                            let pieces: BTreeSet<CanonicalSubgroup> = m2
                                .elements()
                                .iter()
                                .flat_map(|a| m2.elements().into_iter().map(move |b| (a.clone(), b)))
                                .map(|(a, b)| Submodule::generate(n, &[a, b]).expect("elements of n").subgroup().clone())
                                .collect();
                            let mut premise = true;
                            for piece in &pieces {
                                let low = Submodule::from_subgroup(n, piece.clone())?.sum(m0);
                                let mut found = false;
                                'search: for s in subs.iter().filter(|s| low.is_subset_of(s)) {
                                    for m1s in subs.iter().filter(|x| m1.is_subset_of(x) && m0.is_subset_of(x)) {
                                        if indep(m0, m1s, s, &full, mode)? {
                                            found = true;
                                            break 'search;
                                        }
                                    }
                                }
                                if !found {
                                    premise = false;
                                    break;
                                }
                            }
                            t.count("squares", 1);
                            if premise {
                                t.count("premise-holds", 1);
                                t.check(indep(m0, m1, m2, &full, mode)?, || {
                                    format!("witnesses without independence: {}", square_text(mode, n, &[("M0", m0), ("M1", m1), ("M2", m2)]))
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(t.finish())
}
