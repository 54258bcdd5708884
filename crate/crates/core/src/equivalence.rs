//! Term-operation translations between the connexive algebras and their
//! Heyting counterparts, with round-trip verification.
//!
//! Both directions rewrite only the arrow table; the lattice reduct is
//! carried over untouched. The translated table is re-validated eagerly and
//! the outcome recorded, so the operations stay total on arbitrary input
//! while the result is honest about where the laws actually hold.

use crate::algebra::{AlgebraError, SemiHeytingAlgebra};
use crate::lattice::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationDirection {
    /// Replace x -> y by x -> (x ^ y).
    ToHeyting,
    /// Replace x -> y by (x -> y) ^ (x* -> y*).
    ToConnexive,
}

impl TranslationDirection {
    pub fn label(self) -> &'static str {
        match self {
            TranslationDirection::ToHeyting => "heyting",
            TranslationDirection::ToConnexive => "connexive",
        }
    }
}

/// Outcome of one translation. `target` always carries the translated
/// tables; `target_validation` records whether they pass the full law check.
#[derive(Debug, Clone)]
pub struct TranslationResult {
    pub direction: TranslationDirection,
    pub source: SemiHeytingAlgebra,
    pub target: SemiHeytingAlgebra,
    pub target_validation: Result<(), AlgebraError>,
}

fn translate_arrow(
    a: &SemiHeytingAlgebra,
    direction: TranslationDirection,
    x: Elem,
    y: Elem,
) -> Elem {
    match direction {
        TranslationDirection::ToHeyting => a.arrow(x, a.meet(x, y)),
        TranslationDirection::ToConnexive => {
            a.meet(a.arrow(x, y), a.arrow(a.star(x), a.star(y)))
        }
    }
}

pub fn translate(
    a: &SemiHeytingAlgebra,
    direction: TranslationDirection,
) -> TranslationResult {
    let n = a.size();
    let arrow: Vec<Vec<Elem>> = (0..n)
        .map(|x| (0..n).map(|y| translate_arrow(a, direction, x, y)).collect())
        .collect();
    let mut target = SemiHeytingAlgebra::from_parts_unchecked(a.lattice().clone(), arrow);
    if let Some(name) = a.name() {
        let prefix = match direction {
            TranslationDirection::ToHeyting => "h",
            TranslationDirection::ToConnexive => "c",
        };
        target = target.with_name(format!("{prefix}({name})"));
    }
    let target_validation = target.validate();
    TranslationResult {
        direction,
        source: a.clone(),
        target,
        target_validation,
    }
}

/// x -> y becomes x -> (x ^ y).
pub fn to_heyting(a: &SemiHeytingAlgebra) -> TranslationResult {
    translate(a, TranslationDirection::ToHeyting)
}

/// x -> y becomes (x -> y) ^ (x* -> y*).
pub fn to_connexive(a: &SemiHeytingAlgebra) -> TranslationResult {
    translate(a, TranslationDirection::ToConnexive)
}

/// Round-trip verdicts: whether composing the two translations, in either
/// order, reproduces the original arrow table exactly. Composition works on
/// the raw tables, regardless of the intermediate validation outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    /// to_connexive(to_heyting(a)) has a's arrow table.
    pub connexive_of_heyting: bool,
    /// to_heyting(to_connexive(a)) has a's arrow table.
    pub heyting_of_connexive: bool,
}

impl RoundtripReport {
    pub fn both_pass(&self) -> bool {
        self.connexive_of_heyting && self.heyting_of_connexive
    }
}

pub fn roundtrip_check(a: &SemiHeytingAlgebra) -> RoundtripReport {
    let ch = to_connexive(&to_heyting(a).target).target;
    let hc = to_heyting(&to_connexive(a).target).target;
    RoundtripReport {
        connexive_of_heyting: ch.arrow_table() == a.arrow_table(),
        heyting_of_connexive: hc.arrow_table() == a.arrow_table(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::corpus_algebra;
    use crate::lattice::make_chain;
    use crate::varieties::{descriptor_by_name, satisfies_descriptor};

    fn in_class(a: &SemiHeytingAlgebra, name: &str) -> bool {
        satisfies_descriptor(a, descriptor_by_name(name).unwrap())
    }

    #[test]
    fn csh3_translates_to_l1() {
        let r = to_heyting(&corpus_algebra("CSH3").unwrap());
        assert_eq!(
            r.target.arrow_table(),
            corpus_algebra("L1").unwrap().arrow_table()
        );
        assert!(r.target_validation.is_ok());
        assert_eq!(r.target.name(), Some("h(CSH3)"));
    }

    #[test]
    fn heyting_algebras_are_fixed_points() {
        let l1 = corpus_algebra("L1").unwrap();
        let r = to_heyting(&l1);
        assert_eq!(r.target.arrow_table(), l1.arrow_table());
    }

    #[test]
    fn twobar_translates_to_two() {
        let r = to_heyting(&corpus_algebra("2bar").unwrap());
        assert_eq!(r.target.arrow(0, 1), 1);
        assert_eq!(
            r.target.arrow_table(),
            corpus_algebra("2").unwrap().arrow_table()
        );
    }

    #[test]
    fn l1_translates_to_csh3() {
        let r = to_connexive(&corpus_algebra("L1").unwrap());
        assert_eq!(
            r.target.arrow_table(),
            corpus_algebra("CSH3").unwrap().arrow_table()
        );
        assert!(r.target_validation.is_ok());
        assert_eq!(r.target.name(), Some("c(L1)"));
    }

    #[test]
    fn two_translates_to_twobar() {
        let r = to_connexive(&corpus_algebra("2").unwrap());
        assert_eq!(
            r.target.arrow_table(),
            corpus_algebra("2bar").unwrap().arrow_table()
        );
    }

    #[test]
    fn one_element_algebra_is_unchanged() {
        let one =
            SemiHeytingAlgebra::new(make_chain(1).unwrap(), vec![vec![0]]).unwrap();
        assert_eq!(to_connexive(&one).target.arrow_table(), one.arrow_table());
        assert_eq!(to_heyting(&one).target.arrow_table(), one.arrow_table());
    }

    #[test]
    fn roundtrips_on_corpus_members() {
        // the composite is the identity on the side the algebra lives on:
        // connexive members survive c . h, their Heyting counterparts h . c
        for name in ["2bar", "CSH3"] {
            let a = corpus_algebra(name).unwrap();
            assert!(roundtrip_check(&a).connexive_of_heyting, "{name}");
        }
        for name in ["2", "L1"] {
            let a = corpus_algebra(name).unwrap();
            assert!(roundtrip_check(&a).heyting_of_connexive, "{name}");
        }
        // and not on the opposite side: translating 2 lands on 2bar
        let two = corpus_algebra("2").unwrap();
        assert!(!roundtrip_check(&two).connexive_of_heyting);
    }

    #[test]
    fn translations_land_in_the_expected_classes() {
        let h = to_heyting(&corpus_algebra("CSH3").unwrap()).target;
        assert!(in_class(&h, "H"));
        assert!(in_class(&h, "H3-I2"));
        let c = to_connexive(&corpus_algebra("L1").unwrap()).target;
        assert!(in_class(&c, "CSH3"));
    }

    #[test]
    fn lattice_reduct_is_preserved() {
        for name in ["2", "2bar", "L1", "CSH3", "L10", "W4", "W5"] {
            let a = corpus_algebra(name).unwrap();
            assert_eq!(to_heyting(&a).target.lattice(), a.lattice());
            assert_eq!(to_connexive(&a).target.lattice(), a.lattice());
        }
    }
}
