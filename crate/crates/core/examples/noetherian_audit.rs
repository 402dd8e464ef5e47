//! Class closure and the noetherian checks on bounded universes.
//!
//! ```bash
//! cargo run -p ppmod --release --example noetherian_audit -- 16
//! ```

use ppmod::injectivity::{audit_class_closure, noetherian_bounded_check, ClassFilter, UniverseSpec};
use ppmod::module::enumerate_modules;
use ppmod::pp::Mode;
use ppmod::Ring;

fn main() -> ppmod::Result<()> {
    let bound: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for name in ["z4", "z8", "f2xy"] {
        let ring = Ring::preset(name).expect("preset");
        for mode in Mode::ALL {
            let u = UniverseSpec::new(&ring, mode, bound).realize()?;
            let audit = audit_class_closure(&u)?;
            let rep = noetherian_bounded_check(&u, 3)?;
            println!(
                "{name} {mode}: {} members, closed {}; {} injectives, {} sums, closed {}",
                audit.members,
                audit.closed(),
                rep.injectives.len(),
                rep.sums_checked,
                rep.closed()
            );
        }
    }

    // an explicit class missing a submodule fails the audit
    let z4 = Ring::zmod(4)?;
    let only_free: Vec<_> = enumerate_modules(&z4, 16)?.into_iter().filter(|m| m.orders().iter().all(|&o| o == 4)).collect();
    let u = UniverseSpec::new(&z4, Mode::Emb, 16).with_filter(ClassFilter::Explicit(only_free)).realize()?;
    let audit = audit_class_closure(&u)?;
    println!("free Z/4-modules only: closed {}, first violation {:?}", audit.closed(), audit.violations.first().map(|v| &v.kind));
    Ok(())
}
