//! A fixed list of group specs used for exhaustive sweeps.

use alloc::vec::Vec;

use crate::group::{FiniteGroup, GroupError};
use crate::spec::{GroupSpec, SpecBuildError};

/// Every entry has order at most 512.
pub const CATALOG: &[&str] = &[
    "cyclic:1",
    "cyclic:2",
    "cyclic:6",
    "cyclic:8",
    "dihedral:6",
    "dihedral:8",
    "dihedral:10",
    "dihedral:12",
    "dihedral:14",
    "dihedral:16",
    "dihedral:32",
    "quaternion:8",
    "m3",
    "heisenberg:5",
    "heisenberg:7",
    "jgroup",
    "extraspecial:p=2,n=1,type=+",
    "extraspecial:p=2,n=1,type=-",
    "extraspecial:p=2,n=2,type=+",
    "extraspecial:p=2,n=2,type=-",
    "extraspecial:p=2,n=3,type=+",
    "extraspecial:p=2,n=3,type=-",
    "extraspecial:p=2,n=4,type=+",
    "extraspecial:p=2,n=4,type=-",
    "extraspecial:p=3,n=1,type=+",
    "extraspecial:p=3,n=2,type=+",
    "direct(cyclic:3,extraspecial:p=2,n=2,type=+)",
    "direct(cyclic:5,extraspecial:p=2,n=2,type=+)",
    "direct(cyclic:3,extraspecial:p=2,n=3,type=-)",
    "direct(cyclic:4,extraspecial:p=2,n=3,type=+)",
    "direct(cyclic:2,extraspecial:p=2,n=2,type=-)",
    "direct(cyclic:3,m3)",
    "direct(cyclic:5,m3)",
    "direct(cyclic:4,heisenberg:5)",
    "direct(cyclic:2,dihedral:8)",
    "direct(cyclic:2,quaternion:8)",
    "direct(cyclic:3,dihedral:8)",
    "direct(cyclic:3,quaternion:8)",
    "direct(cyclic:4,dihedral:8)",
    "direct(cyclic:7,dihedral:8)",
    "direct(cyclic:2,dihedral:16)",
    "direct(cyclic:2,jgroup)",
    "direct(dihedral:8,quaternion:8)",
    "direct(dihedral:6,dihedral:6)",
    "central(dihedral:8,dihedral:16)",
];

/// Builds every catalog entry of order at most `max_order`, in catalog
/// order. Entries above the bound are skipped, not reported.
pub fn catalog_groups(max_order: usize) -> Result<Vec<(GroupSpec, FiniteGroup)>, SpecBuildError> {
    let mut out = Vec::new();
    for text in CATALOG {
        let spec = GroupSpec::parse(text).expect("catalog entries parse");
        match spec.build_pure(max_order) {
            Ok(g) => out.push((spec, g)),
            Err(SpecBuildError::Group(GroupError::OrderCapExceeded { .. })) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
