//! Fixtures shared by the benchmarks.

use howekit::{DiagramSpec, Family, MultiPartition, Partition, TensorElement};

pub fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

/// The rank 5 element with two columns used in the star and slide benches.
pub fn two_column_element() -> TensorElement {
    TensorElement::from_vecs(vec![vec![-4, -2, 1, 4, 5], vec![-5, -1, 1]], 5).expect("valid element")
}

/// `C2+A1` with a multipartition that fits it for `n = 3`.
pub fn mixed_spec() -> (DiagramSpec, MultiPartition) {
    let spec = DiagramSpec::new(vec![Family::C, Family::A], vec![2, 1]).expect("valid spec");
    let mu = MultiPartition::new(vec![partition(&[2, 1]), partition(&[1, 1])], vec![2, 1]).expect("valid blocks");
    (spec, mu)
}
