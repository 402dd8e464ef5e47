//! Cutting an embedding into a chain of independent squares and using the
//! chain to extend maps.
//!
//! ```bash
//! cargo run -p ppmod --example chain_decomposition
//! ```

use ppmod::injectivity::DecompositionPlan;
use ppmod::pp::Mode;
use ppmod::pushout::{decompose_chain, ChainStart};
use ppmod::{HomGroup, Limits, Module, Ring, Submodule};

fn main() -> ppmod::Result<()> {
    let z4 = Ring::zmod(4)?;
    let b = Module::free(&z4, 2);
    let a = Submodule::generate(&b, &[vec![2, 0]])?;
    let f = a.inclusion();

    for start in [ChainStart::Source, ChainStart::Zero] {
        let c = decompose_chain(f, Mode::Emb, 1, start)?;
        let sizes: Vec<u64> = c.b.iter().map(|s| s.cardinality()).collect();
        println!("{start:?}: {} squares, B_j sizes {sizes:?}, verified {}", c.len() - 1, c.verify()?);
    }

    let plan = DecompositionPlan::new(f, Mode::Emb)?;
    let e = Module::regular(&z4);
    let limits = Limits::default();
    for g in HomGroup::new(a.module(), &e)?.elements() {
        let run = plan.extend(&g, &limits)?;
        println!(
            "g = {:?}: extended {} after {} nodes",
            g.matrix().to_rows(),
            run.h.map(|h| format!("{:?}", h.matrix().to_rows())).unwrap_or_else(|| "no".into()),
            run.nodes
        );
    }
    Ok(())
}
