use std::collections::BTreeSet;

use proptest::prelude::*;

use crate::icosa_group::*;

fn element() -> impl Strategy<Value = GroupElement2x2F5> {
    (0usize..120).prop_map(|i| enumerate_group()[i])
}

proptest! {
    #[test]
    fn associativity(x in element(), y in element(), z in element()) {
        prop_assert_eq!((x * y) * z, x * (y * z));
    }

    #[test]
    fn inverses_and_identity(x in element()) {
        prop_assert_eq!(x * x.inverse(), GroupElement2x2F5::IDENTITY);
        prop_assert_eq!(x.inverse() * x, GroupElement2x2F5::IDENTITY);
        prop_assert_eq!(x * GroupElement2x2F5::IDENTITY, x);
        prop_assert_eq!(x.pow(x.order()), GroupElement2x2F5::IDENTITY);
    }
}

#[test]
fn closure() {
    let group = enumerate_group();
    let set: BTreeSet<_> = group.iter().copied().collect();
    assert_eq!(set.len(), 120);
    for x in &group {
        for y in &group {
            assert!(set.contains(&(*x * *y)));
        }
    }
}

#[test]
fn central_quotient_has_order_sixty() {
    let classes: BTreeSet<_> = enumerate_group().iter().map(|g| g.central_class()).collect();
    assert_eq!(classes.len(), 60);
}
