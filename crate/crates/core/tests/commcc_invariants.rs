use regcc_core::commcc::{
    builtin_function, exact_deterministic_cc, max_fooling_set, max_rectangle_measure, min_cover,
    min_disjoint_cover, CommFunction, RectangleMeasure, BUILTIN_FUNCTIONS,
};

fn ceil_log2(k: usize) -> usize {
    k.next_power_of_two().trailing_zeros() as usize
}

fn small_builtins() -> Vec<CommFunction> {
    let mut out = Vec::new();
    for name in BUILTIN_FUNCTIONS {
        for n in 1..=3 {
            out.push(builtin_function(name, n, None).unwrap());
        }
    }
    for q in [3, 4] {
        for n in 1..=3 {
            out.push(builtin_function("IP", n, Some(q)).unwrap());
        }
    }
    out
}

#[test]
fn sandwich_and_product_bounds() {
    for f in small_builtins() {
        let tag = format!("{} n={} q={:?}", f.name, f.n, f.q);
        let (cd, partition) = min_disjoint_cover(&f).unwrap();
        assert!(partition.is_valid_partition(&f), "{tag}");
        let (d, tree) = exact_deterministic_cc(&f).unwrap();
        assert!(tree.is_valid_for(&f), "{tag}");
        assert!(tree.leaf_count() <= 1 << d, "{tag}");
        assert!(d >= ceil_log2(cd), "{tag}");
        let mut c = [0usize; 2];
        for z in [false, true] {
            if f.count(z) == 0 {
                continue;
            }
            let (cz, cover) = min_cover(&f, z).unwrap();
            assert!(cover.is_valid_cover(&f, z), "{tag}");
            assert!(max_fooling_set(&f, z).len() <= cz, "{tag} z={z}");
            assert!(cz <= cd, "{tag} z={z}");
            c[usize::from(z)] = cz;
        }
        let bound = (ceil_log2(c[0].max(1)) + 2) * (ceil_log2(c[1].max(1)) + 2);
        assert!(d <= bound, "{tag}");
    }
}

#[test]
fn rectangle_size_bound_on_covers() {
    for f in small_builtins() {
        for z in [false, true] {
            if f.count(z) == 0 {
                continue;
            }
            let (cz, _) = min_cover(&f, z).unwrap();
            let measures = [
                RectangleMeasure::indicator(&f, z),
                RectangleMeasure::from_fn(&f, |r, c| {
                    num_rational::Ratio::from_integer((r + 2 * c) as u64 % 3)
                }),
            ];
            for mu in measures {
                let mass = mu.mass_of(&f, z);
                let (best, _) = max_rectangle_measure(&f, z, &mu).unwrap();
                if best > num_rational::Ratio::from_integer(0) {
                    assert!(num_rational::Ratio::from_integer(cz as u64) * best >= mass);
                }
            }
        }
    }
}

#[test]
fn promise_monotonicity() {
    for (name, n) in [("EQ", 2), ("LT", 2), ("DISJ", 2), ("IP", 2), ("NEQ", 3)] {
        let f = builtin_function(name, n, None).unwrap();
        let cells: Vec<(usize, usize)> = (0..f.row_count())
            .flat_map(|r| (0..f.col_count()).map(move |c| (r, c)))
            .filter(|&(r, c)| (r * 7 + c * 3) % 5 == 0)
            .collect();
        let g = f.with_undefined(&cells).unwrap();
        for z in [false, true] {
            if g.count(z) > 0 {
                assert!(min_cover(&g, z).unwrap().0 <= min_cover(&f, z).unwrap().0);
            }
        }
        assert!(exact_deterministic_cc(&g).unwrap().0 <= exact_deterministic_cc(&f).unwrap().0);
    }
}

#[test]
fn disj_one_mass_closed_form() {
    for n in 1..=12u32 {
        let f = builtin_function("DISJ", n as usize, None).unwrap();
        assert_eq!(f.count(true), 3usize.pow(n));
    }
}
