//! Builds the standard test rings and lists their small modules.
//!
//! ```bash
//! cargo run -p ppmod --example rings_and_modules -- 16
//! ```

use std::time::Instant;

use ppmod::module::enumerate_modules;
use ppmod::Ring;

fn main() -> ppmod::Result<()> {
    let bound: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for name in ["z2", "z4", "z8", "z9", "f2xy", "ut2"] {
        let ring = Ring::preset(name).expect("preset ring");
        let start = Instant::now();
        let modules = enumerate_modules(&ring, bound)?;
        println!(
            "{:<16} |R|={:<3} commutative={:<5} local={:<5} modules<={bound}: {:>3}  ({:.2?})",
            ring.name().unwrap_or(name),
            ring.cardinality(),
            ring.is_commutative(),
            ring.is_local(),
            modules.len(),
            start.elapsed()
        );
        for m in modules.iter().filter(|m| m.cardinality() <= 4) {
            println!("    orders {:?}", m.orders());
        }
    }
    Ok(())
}
