use std::sync::OnceLock;

use burnside_core::burnside::oracle_multiply;
use burnside_core::json::{
    aa_from_json, aa_to_json, burnside_from_json, burnside_to_json, from_str, parks_from_json,
    parks_to_json, table_for_spec, to_string,
};
use burnside_core::linalg::rat_frac;
use burnside_core::partitions::enumerate_parts;
use burnside_core::wreath_power::{
    from_parks, parks_char, parks_power_char, power_op, power_series,
};
use burnside_core::{AAElement, BurnsideElement, Caps, TableRef};
use num_bigint::BigInt;
use proptest::prelude::*;

fn s3() -> TableRef {
    static T: OnceLock<TableRef> = OnceLock::new();
    T.get_or_init(|| table_for_spec("S3", &Caps::default()).unwrap())
        .clone()
}

fn c4() -> TableRef {
    static T: OnceLock<TableRef> = OnceLock::new();
    T.get_or_init(|| table_for_spec("C4", &Caps::default()).unwrap())
        .clone()
}

fn element(t: TableRef, lo: i64, hi: i64) -> impl Strategy<Value = BurnsideElement> {
    prop::collection::vec(lo..=hi, t.len())
        .prop_map(move |c| BurnsideElement::from_coords(t.clone(), &c))
}

fn aa(t: TableRef, n: usize) -> impl Strategy<Value = AAElement> {
    let parts = enumerate_parts(t.len(), n);
    prop::collection::vec(-3i64..=3, parts.len()).prop_map(move |c| {
        let terms = parts.iter().cloned().zip(c.into_iter().map(BigInt::from));
        AAElement::from_terms(t.clone(), n, terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn burnside_json_round_trips(x in element(s3(), -1000, 1000)) {
        let text = to_string(&burnside_to_json(&x));
        prop_assert_eq!(burnside_from_json(&s3(), &from_str(&text).unwrap()).unwrap(), x);
    }

    #[test]
    fn aa_json_round_trips(x in aa(s3(), 3)) {
        let text = to_string(&aa_to_json(&x));
        prop_assert_eq!(aa_from_json(&s3(), &from_str(&text).unwrap()).unwrap(), x);
    }

    #[test]
    fn parks_json_round_trips(x in aa(c4(), 2), num in -7i64..7, den in 1i64..7) {
        let f = parks_char(&x).scale(&rat_frac(num, den));
        let text = to_string(&parks_to_json(&f));
        prop_assert_eq!(parks_from_json(&c4(), &from_str(&text).unwrap()).unwrap(), f);
    }

    #[test]
    fn marks_are_a_ring_map(x in element(s3(), -4, 4), y in element(s3(), -4, 4)) {
        let prod = &x * &y;
        prop_assert_eq!(prod.chi(), x.chi().checked_mul(&y.chi()).unwrap());
        prop_assert_eq!(BurnsideElement::from_marks(&prod.chi()).unwrap(), prod);
    }

    #[test]
    fn product_matches_explicit_sets(x in element(s3(), 0, 2), y in element(s3(), 0, 2)) {
        prop_assert_eq!(oracle_multiply(&x, &y, &Caps::default()).unwrap(), &x * &y);
    }

    #[test]
    fn power_character_is_pointwise(x in element(c4(), -3, 3), n in 0usize..4) {
        prop_assert_eq!(parks_char(&power_op(&x, n).unwrap()), parks_power_char(&x.chi(), n));
    }

    #[test]
    fn power_of_sum_is_a_convolution(x in element(s3(), -2, 2), y in element(s3(), -2, 2), n in 0usize..4) {
        let (px, py) = (power_series(&x, n).unwrap(), power_series(&y, n).unwrap());
        let mut expected = AAElement::zero(s3(), n);
        for i in 0..=n {
            expected = expected.checked_add(&px[i].star(&py[n - i]).unwrap()).unwrap();
        }
        prop_assert_eq!(power_op(&(&x + &y), n).unwrap(), expected);
    }

    #[test]
    fn power_is_multiplicative(x in element(c4(), -2, 2), y in element(c4(), -2, 2), n in 0usize..4) {
        let lhs = parks_char(&power_op(&(&x * &y), n).unwrap());
        let rhs = parks_char(&power_op(&x, n).unwrap()).pointwise(&parks_char(&power_op(&y, n).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn parks_character_inverts(x in aa(s3(), 3)) {
        prop_assert_eq!(from_parks(&parks_char(&x)).unwrap(), x);
    }

    #[test]
    fn star_is_commutative_and_matches_characters(x in aa(c4(), 1), y in aa(c4(), 2)) {
        let xy = x.star(&y).unwrap();
        prop_assert_eq!(&xy, &y.star(&x).unwrap());
        prop_assert_eq!(parks_char(&xy), parks_char(&x).star(&parks_char(&y)).unwrap());
    }
}
