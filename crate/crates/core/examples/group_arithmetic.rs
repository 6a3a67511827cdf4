//! Elements, orders, conjugacy classes and automorphisms of C11 ⋊ C5.

use surface_actions::group::{automorphism_group, conjugacy_classes, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // 3 has order 5 modulo 11
    let g = GroupSpec::new(11, 5, 3, false)?;
    let (a, b) = (g.a(), g.twist_generator());
    println!("{} has order {}", g, g.order());
    println!("b a b^-1 = {}  (a^3 = {})", g.conjugate(b, a), g.power(a, 3));
    println!("order of ab^2: {}", g.element_order(g.multiply(a, g.power(b, 2))));

    let classes = conjugacy_classes(&g);
    println!("{} conjugacy classes:", classes.len());
    for c in &classes {
        println!("  size {:>2}, order {:>2}, e.g. {}", c.len(), g.element_order(c[0]), c[0]);
    }
    println!("|Aut| = {}", automorphism_group(g)?.len());
    Ok(())
}
