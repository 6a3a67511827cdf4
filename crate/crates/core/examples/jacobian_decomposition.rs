//! Isogeny decompositions of the Jacobians in the genus-12 and genus-14 families.

use surface_actions::actions::{OrbitSpace, SearchLimits};
use surface_actions::extensions::{order_10q_group, order_12q_group, order_6q_family_group};
use surface_actions::jacobian::{admissibility_table, irreducible_representations, BuiltinCollection};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (order_10q_group(11)?, "0;2,5,10", BuiltinCollection::TwistCosets),
        (order_6q_family_group(13)?, "0;2,2,3,3", BuiltinCollection::TwistCosets),
        (order_12q_group(13)?, "0;2,6,6", BuiltinCollection::CentralTwistCosets),
    ];
    for (group, sig, collection) in cases {
        let degrees: Vec<u32> = irreducible_representations(group)?.iter().map(|v| v.degree).collect();
        println!("{group}: {} irreducible representations, degrees {degrees:?}", degrees.len());
        let space = OrbitSpace::build(group, &sig.parse()?, SearchLimits::default())?;
        let v = space.representative(0);
        for row in admissibility_table(&v, &collection.subgroups(group))? {
            println!("  {:<10} Σ d^H = {} of {}", row.irrep, row.fixed_sum, row.degree);
        }
        let report = collection.decompose(&v)?;
        let parts: Vec<String> =
            report.factors.iter().map(|f| format!("J(S/{})^{} (dim {})", f.subgroup, f.multiplicity, f.genus)).collect();
        println!("  genus {}: {} x P (dim {})", report.genus, parts.join(" x "), report.remainder_dim);
    }
    Ok(())
}
