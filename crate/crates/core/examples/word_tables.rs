//! Restricting an action of C11 ⋊ C10 to C11 ⋊ C5 through the T1 words.

use surface_actions::actions::are_equivalent;
use surface_actions::extensions::{evaluate_word_table, order_10q_form, order_10q_group, order_5q_forms, word_table};
use surface_actions::group::GroupSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let big = order_10q_group(11)?;
    let small = GroupSpec::new(11, 5, 3, false)?;
    let t1 = word_table("T1").ok_or("missing table")?;
    println!("{} : {} ⊂ {}", t1.name, t1.sub_signature, t1.super_signature);
    for (i, w) in t1.words.iter().enumerate() {
        println!("  x{} = {w}", i + 1);
    }
    let forms = order_5q_forms(small)?;
    for n in 1..=4 {
        let theta = order_10q_form(big, n)?;
        let restriction = evaluate_word_table(&t1, &theta, None)?;
        let image = restriction.transport(small)?;
        let hit = (0..4).find(|&i| are_equivalent(&image, &forms[i]).unwrap_or(false));
        println!("Θ_{n}: index {}, restricts to θ_{}", restriction.index(), hit.map_or(0, |i| i + 1));
    }
    Ok(())
}
