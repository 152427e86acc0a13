//! Small example algebras shipped with the crate.
//!
//! | name       | operations         | description                                  |
//! |------------|--------------------|----------------------------------------------|
//! | `z1`..`z6` | `mul`, `inv`, `e`  | cyclic groups                                |
//! | `s3`       | `mul`, `inv`, `e`  | symmetric group on three points              |
//! | `chain3`   | `meet`             | the chain `0 < 1 < 2` with `min`             |
//! | `z3sub`    | `mul`              | quasigroup `x - y mod 3`                     |
//! | `loop5`    | `mul`, `e`         | non-associative loop of order 5              |
//! | `maltsev2` | `mu`               | two-element Mal'tsev operation from a retraction |

use crate::algebra::{load_algebra, FiniteAlgebra};

const DOCUMENTS: &[(&str, &str)] = &[
    ("z1", include_str!("../algebras/z1.json")),
    ("z2", include_str!("../algebras/z2.json")),
    ("z3", include_str!("../algebras/z3.json")),
    ("z4", include_str!("../algebras/z4.json")),
    ("z5", include_str!("../algebras/z5.json")),
    ("z6", include_str!("../algebras/z6.json")),
    ("s3", include_str!("../algebras/s3.json")),
    ("chain3", include_str!("../algebras/chain3.json")),
    ("z3sub", include_str!("../algebras/z3sub.json")),
    ("loop5", include_str!("../algebras/loop5.json")),
    ("maltsev2", include_str!("../algebras/maltsev2.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    DOCUMENTS.iter().map(|(n, _)| *n)
}

pub fn document(name: &str) -> Option<&'static str> {
    DOCUMENTS.iter().find(|(n, _)| *n == name).map(|(_, d)| *d)
}

pub fn by_name(name: &str) -> Option<FiniteAlgebra> {
    document(name).map(|d| load_algebra(d).expect("bundled algebra is valid"))
}

pub fn all() -> Vec<FiniteAlgebra> {
    names().filter_map(by_name).collect()
}
