//! Property tests over randomly drawn tables, complementing the exhaustive
//! sweeps with wider (sampled) size ranges.

use fincat::finset::{all_functions, curry, function_at, function_index, uncurry, FinFun, FinSet};
use proptest::prelude::*;

fn fin_fun(max_size: usize) -> impl Strategy<Value = FinFun> {
    (0..=max_size, 1..=max_size).prop_flat_map(|(dom, cod)| {
        proptest::collection::vec(0..cod, dom).prop_map(move |table| {
            FinFun::new(FinSet::new(dom), FinSet::new(cod), table).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn composition_is_associative_on_random_chains(
        sizes in proptest::collection::vec(1usize..=6, 4),
        seed in 0u64..1_000_000,
    ) {
        // draw one morphism per consecutive size pair, deterministically
        let pick = |dom: usize, cod: usize, salt: u64| {
            let count = cod.pow(dom as u32);
            function_at(&FinSet::new(dom), &FinSet::new(cod), (seed ^ salt) as usize % count)
        };
        let f = pick(sizes[0], sizes[1], 1);
        let g = pick(sizes[1], sizes[2], 2);
        let h = pick(sizes[2], sizes[3], 3);
        let lhs = f.then(&g).unwrap().then(&h).unwrap();
        let rhs = f.then(&g.then(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn identities_are_units(f in fin_fun(6)) {
        prop_assert_eq!(FinFun::identity(&f.dom).then(&f).unwrap(), f.clone());
        prop_assert_eq!(f.then(&FinFun::identity(&f.cod)).unwrap(), f);
    }

    #[test]
    fn function_indexing_roundtrips(f in fin_fun(5)) {
        let idx = function_index(&f);
        prop_assert_eq!(function_at(&f.dom, &f.cod, idx), f);
    }

    #[test]
    fn curry_uncurry_roundtrip(x in 0usize..=3, y in 1usize..=3, z in 1usize..=3, pick in 0usize..10_000) {
        let fns = all_functions(&FinSet::new(x * y), &FinSet::new(z));
        let f = fns[pick % fns.len()].clone();
        let curried = curry(&f, &FinSet::new(x), &FinSet::new(y)).unwrap();
        prop_assert_eq!(uncurry(&curried, &FinSet::new(y), &FinSet::new(z)).table, f.table);
    }
}
