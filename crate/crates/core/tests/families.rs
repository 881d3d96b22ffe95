use flatfold::coloring::{count_colorings, verify_bijection};
use flatfold::generators::{miura, miura_with_angle, snake, triangle_twist, PatternSpec};
use flatfold::oracle::count_locally_valid;
use flatfold::saw::build_saw;
use flatfold::Count;

#[test]
fn miura_counts_do_not_depend_on_the_angle() {
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let base = count_locally_valid(&miura(m, n).unwrap()).unwrap();
        let steep = miura_with_angle(m, n, 75).unwrap();
        assert_eq!(count_locally_valid(&steep).unwrap(), base);
        let (_, g) = build_saw(&steep).unwrap();
        assert_eq!(count_colorings(&g), base);
    }
}

#[test]
fn snake_saw_graphs_biject() {
    for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 3)] {
        let (cp, g) = build_saw(&snake(m, n).unwrap()).unwrap();
        let r = verify_bijection(&cp, &g).unwrap();
        assert!(r.passed, "{m}x{n}: {:?}", r.counterexample);
        assert_eq!(r.colorings, count_locally_valid(&miura(m, n).unwrap()).unwrap());
    }
}

#[test]
fn twist_chains() {
    for (k, want) in [(1, 26u32), (2, 170), (3, 1112)] {
        let cp = triangle_twist(k).unwrap();
        assert_eq!(count_locally_valid(&cp).unwrap(), Count::from(want));
        let (cp, g) = build_saw(&cp).unwrap();
        assert!(verify_bijection(&cp, &g).unwrap().passed);
    }
}

#[test]
fn specs_generate_the_same_patterns() {
    let spec = PatternSpec::Miura { m: 3, n: 2, angle: 60 };
    assert_eq!(spec.generate().unwrap().creases(), miura(3, 2).unwrap().creases());
    assert!(PatternSpec::TriangleTwist { count: 4 }.generate().is_err());
    assert!(PatternSpec::ModifiedMiura { m: 2, n: 2, mask: vec![true] }.generate().is_err());
}
