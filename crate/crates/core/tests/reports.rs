use surface_actions::actions::{are_equivalent, OrbitSpace, SearchLimits};
use surface_actions::error::Error;
use surface_actions::extensions::{
    check_extension, classify_genus, evaluate_word_table, family_form, order_10q_form, order_10q_group, order_12q_form,
    order_12q_group, order_5q_forms, order_6q_family_group, word_table, ClassificationReport, WordParams,
};
use surface_actions::group::GroupSpec;

#[test]
fn reports_round_trip_through_json() {
    for (g, l) in [(12, 5), (8, 6), (8, 3), (14, 6), (14, 3), (32, 5)] {
        let r = classify_genus(g, l).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: ClassificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

#[test]
fn json_field_shapes() {
    let r = classify_genus(12, 5).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    let s = &v["strata"][0];
    assert_eq!(s["signature"], serde_json::json!([0, [5, 5, 5]]));
    assert_eq!(s["group"], serde_json::json!({"n": 11, "m": 5, "r": 3, "central": false}));
    assert_eq!(s["orbit_count"], 4);
    assert_eq!(s["representatives"][0]["period_images"].as_array().unwrap().len(), 3);
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let run = |n| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
        pool.install(|| serde_json::to_string(&classify_genus(14, 6).unwrap()).unwrap())
    };
    assert_eq!(run(1), run(3));
}

#[test]
fn t1_pairs_the_four_forms_with_the_four_extended_actions() {
    for q in [11u32, 31] {
        let r5 = surface_actions::arith::root_of_order(q as u64, 5).unwrap() as u32;
        let sub = GroupSpec::new(q, 5, r5, false).unwrap();
        let sup = order_10q_group(q).unwrap();
        let t1 = word_table("T1").unwrap();
        let forms = order_5q_forms(sub).unwrap();
        let mut hits = vec![0; 4];
        for n in 1..=4 {
            let big = order_10q_form(sup, n).unwrap();
            let matches: Vec<usize> =
                (0..4).filter(|&i| check_extension(&forms[i], &big, &t1, None).unwrap()).collect();
            assert_eq!(matches.len(), 1, "q={q} n={n}");
            hits[matches[0]] += 1;
        }
        assert_eq!(hits, vec![1; 4]);
    }
}

#[test]
fn t3_restricts_both_surfaces_to_the_family() {
    let q = 13;
    let family = family_form(order_6q_family_group(q).unwrap(), 0).unwrap();
    let t3 = word_table("T3").unwrap();
    for i in [1, 2] {
        let big = order_12q_form(order_12q_group(q).unwrap(), i).unwrap();
        // The triangle action is a point of the family, so the dimensions differ.
        assert!(matches!(check_extension(&family, &big, &t3, None), Err(Error::DimensionMismatch { sub: 1, sup: 0 })));
        let restricted = evaluate_word_table(&t3, &big, None).unwrap().transport(family.group()).unwrap();
        assert!(are_equivalent(&restricted, &family).unwrap());
    }
}

#[test]
fn t4b_covers_case_b() {
    let q = 7u32;
    let sup = order_6q_family_group(q).unwrap();
    let sub = GroupSpec::new(q, 3, 2, false).unwrap();
    let t4b = word_table("T4b").unwrap();
    let case_b = surface_actions::extensions::order_3q_case_b(sub, 1).unwrap();
    let space = OrbitSpace::build(sub, case_b.signature(), SearchLimits::default()).unwrap();
    let r = surface_actions::group::root_of_order(q as u64, 6).unwrap() as i64;
    let found = (0..q as i64).any(|m| {
        let big = family_form(sup, m).unwrap();
        (0..q as i64).any(|l| {
            let params = Some(WordParams { l, m, r });
            check_extension(&case_b, &big, &t4b, params).unwrap_or(false)
        })
    });
    assert!(found);
    assert_eq!(space.orbit_count(), 1);
}

#[test]
fn check_extension_rejects_unequal_dimensions() {
    let q = 7;
    let family = family_form(order_6q_family_group(q).unwrap(), 0).unwrap();
    let big = order_12q_form(order_12q_group(q).unwrap(), 1).unwrap();
    let t1 = word_table("T1").unwrap();
    assert!(matches!(check_extension(&family, &family, &t1, None), Err(Error::OrderMismatch { .. })));
    let t2a = word_table("T2a").unwrap();
    assert!(matches!(
        check_extension(&family, &big, &t2a, None),
        Err(Error::DimensionMismatch { sub: 1, sup: 0 })
    ));
}
