mod common;

use std::collections::BTreeMap;

use common::{config, rational, scalar};
use num_traits::{One, Zero};
use omega_lie::field::gaussian_roots;
use omega_lie::{parse_scalar, Scalar, UniPoly};
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn addition_is_associative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_distributes(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn inverses(a in scalar()) {
        prop_assert!((&a + &(-&a)).is_zero());
        match a.inv() {
            Some(inv) => prop_assert!((&a * &inv).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn render_then_parse(a in scalar()) {
        prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn parse_then_render_normalizes(re in (-20i64..20, 1i64..12), im in (-20i64..20, 1i64..12)) {
        let text = format!("{}/{}{}{}/{}i", re.0, re.1, if im.0 < 0 { "-" } else { "+" }, im.0.abs(), im.1);
        let a = parse_scalar(&text).unwrap();
        prop_assert_eq!(&a, &(&Scalar::from_ratio(re.0, re.1) + &(&Scalar::from_ratio(im.0, im.1) * &Scalar::i())));
        let rendered = a.to_string();
        prop_assert_eq!(parse_scalar(&rendered).unwrap().to_string(), rendered);
    }

    #[test]
    fn planted_roots_are_recovered(
        roots in proptest::collection::vec((scalar(), 1usize..=2), 1..=3),
        lead in rational().prop_filter("nonzero", |c| !c.is_zero()),
        irreducible in any::<bool>(),
    ) {
        let mut planted: BTreeMap<Scalar, usize> = BTreeMap::new();
        let mut p = UniPoly::constant(lead.clone());
        for (r, m) in &roots {
            *planted.entry(r.clone()).or_default() += m;
            p = &p * &UniPoly::linear(r).pow(*m as u32);
        }
        // t^2 - 3 has no root in Q(i)
        let extra = UniPoly::from_ints(&[-3, 0, 1]);
        if irreducible {
            p = &p * &extra;
        }
        let split = gaussian_roots(&p).unwrap();
        let found: BTreeMap<Scalar, usize> = split.roots.iter().cloned().collect();
        prop_assert_eq!(found, planted);
        let expected = if irreducible { extra.scale(&lead) } else { UniPoly::constant(lead) };
        prop_assert_eq!(split.nonsplit, expected);
    }
}
