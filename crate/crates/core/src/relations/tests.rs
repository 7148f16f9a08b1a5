use super::*;
use crate::report::FailureKind;
use num_rational::Rational64;

#[test]
fn registry_has_every_statement_once() {
    let registry = builtin_registry();
    assert!(registry.len() >= 20, "registry holds {} entries", registry.len());
    let mut ids: Vec<&str> = registry.iter().map(|e| e.id()).collect();
    ids.sort_unstable();
    let before = ids.len();
    ids.dedup();
    assert_eq!(ids.len(), before, "duplicate registry ids");
}

#[test]
fn instantiate_thm_2_3_sorts_forms() {
    let RegistryEntry::Family(family) = find_entry("thm2.3").unwrap() else {
        panic!("thm2.3 is a family");
    };
    let spec = family.instantiate(&Params::akm(3, 1, 0)).unwrap();
    assert_eq!(
        spec.render(),
        "t(1,1,3,9;n) == 2/3*N(2,2,3,9;8*n+14)"
    );
}

#[test]
fn instantiate_thm_2_5_substitutes() {
    let RegistryEntry::Family(family) = find_entry("thm2.5").unwrap() else {
        panic!("thm2.5 is a family");
    };
    let spec = family.instantiate(&Params::akm(1, 1, 0)).unwrap();
    assert_eq!(spec.render(), "t(1,1,4,6;4*n+3) == 2*t(1,1,1,6;n)");
}

#[test]
fn side_conditions_enforced() {
    let RegistryEntry::Family(thm22) = find_entry("thm2.2").unwrap() else {
        panic!();
    };
    assert!(thm22.instantiate(&Params::akm(1, 0, 2)).is_ok());
    assert!(matches!(
        thm22.instantiate(&Params::akm(1, 0, 1)),
        Err(Error::SideCondition { .. })
    ));
    assert!(matches!(
        thm22.instantiate(&Params::akm(2, 0, 2)),
        Err(Error::SideCondition { .. })
    ));
    let RegistryEntry::Family(thm23) = find_entry("thm2.3").unwrap() else {
        panic!();
    };
    assert!(matches!(
        thm23.instantiate(&Params::akm(1, 2, 0)),
        Err(Error::SideCondition { .. })
    ));
}

#[test]
fn thm_2_4_predicate_specializes() {
    let RegistryEntry::Family(family) = find_entry("thm2.4").unwrap() else {
        panic!();
    };
    let spec = family.instantiate(&Params::akm(3, 1, 0)).unwrap();
    // k + (a-1)/2 = 2, so the domain is the even class
    assert_eq!(spec.predicate, Predicate::residues(2, [0]));
}

#[test]
fn default_grids_respect_side_conditions() {
    for entry in builtin_registry() {
        if let RegistryEntry::Family(f) = entry {
            let specs = f.grid_specs();
            assert!(!specs.is_empty(), "{} grid empty", f.id);
        }
    }
}

#[test]
fn check_thm_2_11_against_enumeration() {
    let RegistryEntry::Spec(spec) = find_entry("thm2.11").unwrap() else {
        panic!();
    };
    let report = check(&spec, 100, Backend::Enumerate).unwrap();
    assert!(report.passed(), "{}", report.summary_line());
    // n = 1,2 mod 4 within 0..=100
    assert_eq!(report.tested_count, 50);
}

#[test]
fn check_remark_form_1112() {
    let RegistryEntry::Spec(spec) = find_entry("remark2.1-1112").unwrap() else {
        panic!();
    };
    let report = check(&spec, 100, Backend::Enumerate).unwrap();
    assert!(report.passed(), "{}", report.summary_line());
}

#[test]
fn corrupted_coefficient_fails_with_witness() {
    let RegistryEntry::Spec(mut spec) = find_entry("thm2.12").unwrap() else {
        panic!();
    };
    spec.rhs.terms[0].0 = Rational64::new(1, 3);
    let report = check(&spec, 40, Backend::Enumerate).unwrap();
    assert!(!report.passed());
    // n = 1 is vacuous (both counts are 0); the first real witness is n = 5
    let w = &report.failures[0];
    assert_eq!(w.n, 5);
    assert_eq!(w.lhs, 32.into());
    assert_eq!(w.rhs, 8.into());
}

#[test]
fn non_integral_is_its_own_failure_kind() {
    let spec = parse_relation("1/3*N(1,1,1,1;n) == 1/3*N(1,1,1,1;n)").unwrap();
    let report = check(&spec, 4, Backend::Enumerate).unwrap();
    assert!(!report.passed());
    let w = report.failures.iter().find(|w| w.n == 1).unwrap();
    assert_eq!(w.kind, FailureKind::NonIntegral);
    assert_eq!(w.lhs, Rational64::new(8, 3));
}

#[test]
fn backends_agree_on_registry() {
    for (_, spec) in registry_specs() {
        let oracle = check(&spec, 100, Backend::Enumerate).unwrap();
        let series = check(&spec, 100, Backend::Series).unwrap();
        assert_eq!(oracle, series, "backends disagree on {}", spec.id);
        assert!(oracle.passed(), "{}", oracle.summary_line());
    }
}

#[test]
fn series_precision_is_auto_sized() {
    // largest index the 16n+22 atom touches must be readable
    let RegistryEntry::Spec(spec) = find_entry("thm2.13b").unwrap() else {
        panic!();
    };
    let report = check(&spec, 97, Backend::Series).unwrap();
    assert!(report.passed());
    assert!(matches!(
        check_with_precision(&spec, 97, Backend::Series, Some(100)),
        Err(Error::PrecisionTooSmall { given: 100, needed: 1575 })
    ));
}

#[test]
fn parse_matches_registry_encoding() {
    let parsed =
        parse_relation("t(1,1,4,6;n) == 2*N(1,1,4,6;2n+3) for n % 4 in {1,2}").unwrap();
    let RegistryEntry::Spec(builtin) = find_entry("thm2.11").unwrap() else {
        panic!();
    };
    assert_eq!(parsed.lhs, builtin.lhs);
    assert_eq!(parsed.rhs, builtin.rhs);
    assert_eq!(parsed.predicate, builtin.predicate);
}

#[test]
fn parse_trivial_and_errors() {
    let spec = parse_relation("t(1,1,1,1;n) == t(1,1,1,1;n)").unwrap();
    assert!(check(&spec, 30, Backend::Enumerate).unwrap().passed());

    assert!(matches!(
        parse_relation("t(1,2;n) == 1"),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        parse_relation("t(1,1,1,1;n) = 1"),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        parse_relation("q(1,1,1,1;n) == 1"),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        parse_relation("t(1,1,1,1;n) == 1 for n % 0 in {0}"),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        parse_relation("t(1,1,1,1;n) == 1/0"),
        Err(Error::Parse { .. })
    ));
    assert!(matches!(
        parse_relation("t(1,1,1,1;n) == 1 extra"),
        Err(Error::Parse { .. })
    ));
}

#[test]
fn print_parse_round_trip() {
    let mut specs: Vec<RelationSpec> = registry_specs().into_iter().map(|(_, s)| s).collect();
    specs.push(parse_relation("t(1,1,1,1;n) == 16*t'(1,1,1,1;n)").unwrap());
    specs.push(parse_relation("-2*N(1,2,3,4;2*n-1) + 7/2 == t(1,1,1,1;n) - 1").unwrap());
    for spec in specs {
        let printed = spec.render();
        let reparsed = parse_relation(&printed)
            .unwrap_or_else(|e| panic!("reparse of `{printed}` failed: {e}"));
        assert_eq!(reparsed.lhs, spec.lhs, "{printed}");
        assert_eq!(reparsed.rhs, spec.rhs, "{printed}");
        assert_eq!(reparsed.predicate, spec.predicate, "{printed}");
    }
}

#[test]
fn eq_1_1_as_adhoc_relation() {
    let spec = parse_relation("t(1,1,1,1;n) == 16*t'(1,1,1,1;n)").unwrap();
    let report = check(&spec, 60, Backend::Enumerate).unwrap();
    assert!(report.passed());
}

#[test]
fn negative_index_needs_predicate_cover() {
    let spec = parse_relation("t(1,1,1,1;n-2) == t(1,1,1,1;n-2)").unwrap();
    assert!(matches!(
        check(&spec, 10, Backend::Enumerate),
        Err(Error::NegativeIndex { .. })
    ));
    // guarded by a residue class that keeps the index nonnegative, it checks
    let spec =
        parse_relation("t(1,1,1,1;n-2) == t(1,1,1,1;n-2) for n % 4 in {2,3}").unwrap();
    assert!(check(&spec, 10, Backend::Enumerate).unwrap().passed());
}

#[test]
fn thm_2_1_statement_and_probe_disagree() {
    // the statement's subtracted index passes; the variant offset fails
    let RegistryEntry::Family(stated) = find_entry("thm2.1b").unwrap() else {
        panic!();
    };
    for spec in stated.grid_specs() {
        let report = check(&spec, 25, Backend::Enumerate).unwrap();
        assert!(report.passed(), "{}", report.summary_line());
    }
    let variant = thm_2_1b_variant();
    let mut failed_somewhere = false;
    for spec in variant.grid_specs() {
        if !check(&spec, 25, Backend::Enumerate).unwrap().passed() {
            failed_somewhere = true;
            break;
        }
    }
    assert!(
        failed_somewhere,
        "variant index shape unexpectedly matches the statement on the whole grid"
    );
}
