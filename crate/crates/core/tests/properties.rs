//! Randomized invariants.

use proptest::prelude::*;

use ppmod::exactlin::Matrix;
use ppmod::module::{all_submodules, are_isomorphic, enumerate_modules};
use ppmod::pp::{classify_embedding, Mode};
use ppmod::pushout::pushout;
use ppmod::{HomGroup, Module, PpFormula, Ring};

fn z4_modules() -> Vec<Module> {
    enumerate_modules(&Ring::zmod(4).unwrap(), 8).unwrap()
}

fn f2xy_modules() -> Vec<Module> {
    enumerate_modules(&Ring::preset("f2xy").unwrap(), 8).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Any list of cyclic orders over Z/12 presents the same group in any order.
    #[test]
    fn presentations_normalize(orders in prop::collection::vec(prop::sample::select(vec![1i64, 2, 3, 4, 6, 12]), 0..4)) {
        let r = Ring::zmod(12).unwrap();
        let k = orders.len();
        let m = Module::new(&r, orders.clone(), vec![Matrix::identity(k)]).unwrap();
        prop_assert_eq!(m.cardinality(), orders.iter().product::<i64>() as u64);
        let mut rev = orders.clone();
        rev.reverse();
        let n = Module::new(&r, rev, vec![Matrix::identity(k)]).unwrap();
        prop_assert_eq!(&m, &n);
        prop_assert!(m.orders().windows(2).all(|w| w[1] % w[0] == 0));
    }

    #[test]
    fn composition_is_associative_and_additive(a in 0usize..6, b in 0usize..6, c in 0usize..6, d in 0usize..6, seed in any::<u64>()) {
        let ms = z4_modules();
        let (a, b, c, d) = (&ms[a], &ms[b], &ms[c], &ms[d]);
        let pick = |x: &Module, y: &Module, s: u64| {
            let es = HomGroup::new(x, y).unwrap().elements();
            es[(s % es.len() as u64) as usize].clone()
        };
        let f = pick(a, b, seed);
        let f2 = pick(a, b, seed / 7);
        let g = pick(b, c, seed / 3);
        let h = pick(c, d, seed / 5);
        let left = h.compose_after(&g.compose_after(&f).unwrap()).unwrap();
        let right = h.compose_after(&g).unwrap().compose_after(&f).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(g.compose_after(&f.add(&f2)).unwrap(), g.compose_after(&f).unwrap().add(&g.compose_after(&f2).unwrap()));
    }

    /// The square commutes, the apex has the right size and an injective
    /// map pushes out to an injective leg.
    #[test]
    fn pushout_squares(m in 0usize..12, n1 in 0usize..12, n2 in 0usize..12, s1 in any::<u64>(), s2 in any::<u64>()) {
        let ms = f2xy_modules();
        let (m, n1, n2) = (&ms[m], &ms[n1], &ms[n2]);
        prop_assume!(m.cardinality() * n1.cardinality() * n2.cardinality() <= 128);
        let f1s = HomGroup::new(m, n1).unwrap().elements();
        let f2s = HomGroup::new(m, n2).unwrap().elements();
        let f1 = &f1s[(s1 % f1s.len() as u64) as usize];
        let f2 = &f2s[(s2 % f2s.len() as u64) as usize];
        let p = pushout(f1, f2).unwrap();
        prop_assert_eq!(p.leg2().compose_after(f1).unwrap(), p.leg1().compose_after(f2).unwrap());
        // |P| |image of M in N1 + N2| = |N1| |N2|
        let antidiag: std::collections::BTreeSet<(Vec<i64>, Vec<i64>)> =
            m.elements().iter().map(|x| (f1.apply(x), f2.apply(&m.neg(x)))).collect();
        prop_assert_eq!(p.apex.cardinality() * antidiag.len() as u64, n1.cardinality() * n2.cardinality());
        if f1.is_injective() {
            prop_assert!(p.leg1().is_injective());
        }
        for mode in Mode::ALL {
            prop_assert!(p.check_legs(mode).preserved());
        }
    }

    /// Modular sizes: |A + B| |A ∩ B| = |A| |B|.
    #[test]
    fn submodule_lattice(i in 0usize..12, a in any::<u64>(), b in any::<u64>()) {
        let ms = f2xy_modules();
        let subs = all_submodules(&ms[i]);
        let x = &subs[(a % subs.len() as u64) as usize];
        let y = &subs[(b % subs.len() as u64) as usize];
        prop_assert_eq!(x.sum(y).cardinality() * x.intersection(y).cardinality(), x.cardinality() * y.cardinality());
        prop_assert!(x.intersection(y).is_subset_of(x) && x.is_subset_of(&x.sum(y)));
    }

    /// Printing and parsing are inverse, and the defined subgroups are
    /// invariant under the isomorphisms found.
    #[test]
    fn formula_text(free in 1usize..3, bound in 0usize..3, eqs in prop::collection::vec(prop::collection::vec(0i64..8, 6), 1..3)) {
        let r = Ring::zmod(8).unwrap();
        let mut phi = PpFormula::empty(&r, free, bound);
        for e in &eqs {
            phi.push_equation(e[..free].iter().map(|&c| vec![c]).collect(), e[free..free + bound].iter().map(|&c| vec![c]).collect());
        }
        let back = PpFormula::parse(&phi.to_string(), &r).unwrap();
        prop_assert_eq!(&back, &phi);
        let m = Module::new(&r, vec![8, 2, 4], vec![Matrix::identity(3)]).unwrap();
        let n = Module::new(&r, vec![2, 4, 8], vec![Matrix::identity(3)]).unwrap();
        prop_assert!(are_isomorphic(&m, &n).unwrap().is_some());
        prop_assert_eq!(phi.subgroup(&m).unwrap().cardinality(), back.subgroup(&n).unwrap().cardinality());
    }

    /// Verdicts are nested and every failure comes with a witness that replays.
    #[test]
    fn classification_is_nested(i in 0usize..12, s in any::<u64>()) {
        let ms = f2xy_modules();
        let subs = all_submodules(&ms[i]);
        let f = subs[(s % subs.len() as u64) as usize].inclusion();
        let c = classify_embedding(f);
        prop_assert!(c.is_embedding && (!c.is_split || c.is_pure) && (!c.is_pure || c.is_rd));
        if let Some(w) = &c.witness {
            prop_assert!(w.replay(f).unwrap());
        }
    }
}
