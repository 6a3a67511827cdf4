use surface_actions::arith::root_of_order;
use surface_actions::group::{conjugacy_classes, GroupSpec};
use surface_actions::jacobian::{inner_product, irreducible_representations};

fn groups() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for (q, m, d) in [(11u32, 5u32, 5u64), (11, 10, 10), (7, 6, 6), (13, 6, 6), (7, 3, 3), (13, 3, 3), (31, 15, 15)] {
        let r = root_of_order(q as u64, d).unwrap() as u32;
        out.push(GroupSpec::new(q, m, r, false).unwrap());
    }
    out.push(GroupSpec::new(7, 6, 3, true).unwrap());
    out.push(GroupSpec::new(13, 6, 4, true).unwrap());
    out
}

#[test]
fn degrees_square_sum_to_the_order() {
    for g in groups() {
        let irreps = irreducible_representations(g).unwrap();
        let total: u64 = irreps.iter().map(|v| (v.degree as u64).pow(2)).sum();
        assert_eq!(total, g.order() as u64, "{g}");
        assert_eq!(irreps.len(), conjugacy_classes(&g).len(), "{g}");
    }
}

#[test]
fn characters_are_orthonormal() {
    for g in groups().into_iter().filter(|g| g.order() <= 200) {
        let irreps = irreducible_representations(g).unwrap();
        for (i, v) in irreps.iter().enumerate() {
            for (j, w) in irreps.iter().enumerate() {
                assert_eq!(inner_product(v, w).unwrap(), (i == j) as i64, "{g}: {v} vs {w}");
            }
        }
    }
}
