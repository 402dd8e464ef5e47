//! Relative injectivity of every small module over Z/4 and F2[x,y]/(x,y)^2
//! in each mode, with the ideal test alongside.
//!
//! ```bash
//! cargo run -p ppmod --release --example injectivity -- 16
//! ```

use ppmod::injectivity::{baer_ideal_test, is_rel_injective, sigma_injective_bounded, UniverseSpec};
use ppmod::pp::Mode;
use ppmod::Ring;

fn main() -> ppmod::Result<()> {
    let bound: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for name in ["z4", "f2xy"] {
        let ring = Ring::preset(name).expect("preset");
        for mode in Mode::ALL {
            let u = UniverseSpec::new(&ring, mode, bound).realize()?;
            let mut injective = Vec::new();
            for e in &u.members {
                let rep = is_rel_injective(e, &u)?;
                if rep.verdict {
                    injective.push(e.orders().to_vec());
                }
                if mode == Mode::Emb {
                    assert_eq!(baer_ideal_test(e, mode)?.pass, rep.verdict || ring.cardinality() > bound);
                }
            }
            println!("{name} {mode}: {} of {} verdict-injective at bound {bound}: {injective:?}", injective.len(), u.members.len());
        }
        let u = UniverseSpec::new(&ring, Mode::Emb, bound).realize()?;
        let reg = ppmod::Module::regular(&ring);
        println!("  R, R^2 injective: {:?}", sigma_injective_bounded(&reg, &u, 2)?.powers);
    }
    Ok(())
}
