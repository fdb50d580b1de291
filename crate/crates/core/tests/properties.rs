//! Property-based invariants of the orbit arithmetic.

use proptest::prelude::*;
use zschur_core::algebra::SchurAlgebra;
use zschur_core::combinatorics::{collapse, meet, refinement_le, Composition, Decomposition};
use zschur_core::modules::transport_element;
use zschur_core::orbits::{degenerates_to, orbits_with_col_sums, OrbitMatrix};

/// A random matrix for fixed (n, r): distribute r units over n² cells.
fn arb_orbit(n: usize, r: u32) -> impl Strategy<Value = OrbitMatrix> {
    prop::collection::vec(0..(n * n) as u32, r as usize).prop_map(move |cells| {
        let mut rows = vec![vec![0u32; n]; n];
        for cell in cells {
            rows[(cell as usize) / n][(cell as usize) % n] += 1;
        }
        OrbitMatrix::from_rows(rows).unwrap()
    })
}

fn arb_decomposition(n: usize) -> impl Strategy<Value = Decomposition> {
    prop::collection::vec(any::<bool>(), n - 1).prop_map(move |bits| {
        let cuts: Vec<usize> = (1..n).filter(|&i| bits[i - 1]).collect();
        Decomposition::from_boundaries(n, &cuts)
    })
}

proptest! {
    #[test]
    fn product_margins_compose(a in arb_orbit(3, 4), b in arb_orbit(3, 4)) {
        let engine = SchurAlgebra::new(3, 4);
        match engine.product(&a, &b) {
            None => prop_assert_ne!(a.col_vector(), b.row_vector()),
            Some(c) => {
                prop_assert_eq!(c.row_vector(), a.row_vector());
                prop_assert_eq!(c.col_vector(), b.col_vector());
            }
        }
    }

    #[test]
    fn associativity_random(a in arb_orbit(3, 4), b in arb_orbit(3, 4), c in arb_orbit(3, 4)) {
        let engine = SchurAlgebra::new(3, 4);
        // realign the margins so the triple composes
        let b2 = orbits_with_col_sums(&b.col_vector())
            .into_iter()
            .find(|m| m.row_vector() == a.col_vector());
        prop_assume!(b2.is_some());
        let b2 = b2.unwrap();
        let c2 = orbits_with_col_sums(&c.col_vector())
            .into_iter()
            .find(|m| m.row_vector() == b2.col_vector());
        prop_assume!(c2.is_some());
        let c2 = c2.unwrap();
        let ab = engine.product(&a, &b2).unwrap();
        let bc = engine.product(&b2, &c2).unwrap();
        prop_assert_eq!(engine.product(&ab, &c2), engine.product(&a, &bc));
    }

    #[test]
    fn degeneration_is_reflexive_and_antisymmetric(a in arb_orbit(3, 4), b in arb_orbit(3, 4)) {
        prop_assert!(degenerates_to(&a, &a));
        if degenerates_to(&a, &b) && degenerates_to(&b, &a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn meet_is_greatest_lower_bound(m in arb_decomposition(5), p in arb_decomposition(5), q in arb_decomposition(5)) {
        let g = meet(&m, &p).unwrap();
        prop_assert!(refinement_le(&g, &m).unwrap());
        prop_assert!(refinement_le(&g, &p).unwrap());
        if refinement_le(&q, &m).unwrap() && refinement_le(&q, &p).unwrap() {
            prop_assert!(refinement_le(&q, &g).unwrap());
        }
    }

    #[test]
    fn collapse_sees_only_block_sums(a in arb_orbit(4, 5), m in arb_decomposition(4)) {
        let lam = a.col_vector();
        let sums: Vec<u32> = m.split(&lam).into_iter().map(|b| b.iter().sum()).collect();
        let fat = Composition::new(sums.clone());
        let whole = Decomposition::singletons(fat.n());
        prop_assert_eq!(collapse(&lam, &m), collapse(&fat, &whole));
    }

    #[test]
    fn matrix_text_round_trips(a in arb_orbit(4, 6)) {
        let text = a.to_string();
        let back: OrbitMatrix = text.parse().unwrap();
        prop_assert_eq!(&a, &back);
        let json = format!("[[{}]]", text.replace(";", "],["));
        let back2: OrbitMatrix = json.parse().unwrap();
        prop_assert_eq!(&a, &back2);
    }

    #[test]
    fn transports_invert(a in arb_orbit(4, 5), bits in prop::collection::vec(any::<bool>(), 4)) {
        let lam = a.col_vector();
        // scramble the placement of the class of λ
        let class = lam.reduced();
        let placements = class.placements(4);
        let pick = bits.iter().fold(0usize, |acc, &b| acc * 2 + b as usize) % placements.len();
        let other = placements[pick].clone();
        let engine = SchurAlgebra::new(4, 5);
        let there = transport_element(&lam, &other).unwrap();
        let back = transport_element(&other, &lam).unwrap();
        let round = engine.element_multiply(&there, &back);
        let identity = zschur_core::AlgebraElement::from_orbit(OrbitMatrix::diagonal(&lam));
        prop_assert_eq!(round, identity);
    }
}
