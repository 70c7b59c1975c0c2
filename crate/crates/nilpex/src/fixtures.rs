//! Unit-test loaders for the shipped fixture files. Integration tests and
//! the guide exercise the same files from disk.

use crate::algebra::Algebra;
use crate::automorphism::ParametricMatrixFamily;
use crate::identity::IdentitySet;

pub(crate) fn moufang() -> IdentitySet {
    IdentitySet::parse(include_str!("../../../fixtures/moufang.ids"))
        .expect("shipped identity file parses")
}

pub(crate) fn m3(k: usize) -> Algebra {
    let text = match k {
        1 => include_str!("../../../fixtures/m3_01.alg"),
        2 => include_str!("../../../fixtures/m3_02.alg"),
        3 => include_str!("../../../fixtures/m3_03.alg"),
        4 => include_str!("../../../fixtures/m3_04.alg"),
        5 => include_str!("../../../fixtures/m3_05.alg"),
        other => panic!("no fixture M3_{other:02}"),
    };
    Algebra::parse(text).expect("shipped algebra file parses")
}

pub(crate) fn aut_m3(k: usize) -> ParametricMatrixFamily {
    let text = match k {
        1 => include_str!("../../../fixtures/aut_m3_01.fam"),
        2 => include_str!("../../../fixtures/aut_m3_02.fam"),
        3 => include_str!("../../../fixtures/aut_m3_03.fam"),
        4 => include_str!("../../../fixtures/aut_m3_04.fam"),
        5 => include_str!("../../../fixtures/aut_m3_05.fam"),
        other => panic!("no fixture family for M3_{other:02}"),
    };
    ParametricMatrixFamily::parse(text).expect("shipped family file parses")
}
