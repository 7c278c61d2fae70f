use poisson_hopf::coalgebra::{
    builtin, load_spec, load_spec_unvalidated, parse_spec, parse_spec_unvalidated, save_spec, validate_coalgebra,
    CoalgebraSpec, TargetHopfSpec,
};
use poisson_hopf::linear::int;
use poisson_hopf::Error;

const BUILTINS: [&str; 6] = ["grouplike-1", "grouplike-2", "matrix-1", "matrix-2", "matrix-3", "trig"];

#[test]
fn builtins_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in BUILTINS {
        let spec = builtin(name).unwrap();
        assert!(validate_coalgebra(&spec).is_clean(), "{name}");
        let path = dir.path().join(format!("{name}.json"));
        save_spec(&spec, &path).unwrap();
        let back = load_spec(path.to_str().unwrap()).unwrap();
        assert_eq!(back, spec, "{name}");
        assert_eq!(back.to_json(), spec.to_json());
        assert_eq!(load_spec(&format!("builtin:{name}")).unwrap(), spec);
    }
    assert_eq!(builtin("matrix-2").unwrap().dim(), 4);
    assert_eq!(builtin("grouplike-1").unwrap().basis(), ["g".to_string()]);
    assert!(matches!(builtin("matrix-0"), Err(Error::UnknownBuiltin(_))));
    assert!(matches!(builtin("cube"), Err(Error::UnknownBuiltin(_))));
}

#[test]
fn malformed_scalar_is_a_parse_error() {
    let text = "{\n  \"basis\": [\"g\"], \"delta\": {\"g\": [[\"g\", \"g\", \"1/0\"]]}, \"epsilon\": {\"g\": \"1\"}\n}";
    match parse_spec(text) {
        Err(e @ Error::Parse { line: 2, .. }) => assert_eq!(e.exit_code(), 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn structural_errors() {
    let unknown_name = r#"{"basis": ["g"], "delta": {"g": [["g", "h", "1"]]}, "epsilon": {"g": "1"}}"#;
    assert!(matches!(parse_spec_unvalidated(unknown_name), Err(Error::Validation(_))));
    let unknown_field = r#"{"basis": ["g"], "delta": {"g": [["g", "g", "1"]]}, "epsilon": {"g": "1"}, "x": 1}"#;
    assert!(matches!(parse_spec(unknown_field), Err(Error::Parse { .. })));
    let missing = r#"{"basis": ["g", "h"], "delta": {"g": [["g", "g", "1"]]}, "epsilon": {"g": "1", "h": "1"}}"#;
    assert!(parse_spec_unvalidated(missing).is_err());
    let bad_ident = r#"{"basis": ["1g"], "delta": {"1g": [["1g", "1g", "1"]]}, "epsilon": {"1g": "1"}}"#;
    assert!(parse_spec_unvalidated(bad_ident).is_err());
    let dir = tempfile::tempdir().unwrap();
    let absent = dir.path().join("absent.json");
    assert!(matches!(load_spec(absent.to_str().unwrap()), Err(Error::Io(_))));
}

#[test]
fn axiom_failures_are_named() {
    // Δg = g⊗g + g⊗1 is not coassociative
    let text = r#"{"basis": ["g"], "delta": {"g": [["g", "g", "1"]]}, "epsilon": {"g": "0"}}"#;
    let spec = parse_spec_unvalidated(text).unwrap();
    let report = validate_coalgebra(&spec);
    assert!(report.has_law("counit-left") && report.has_law("counit-right"));
    assert!(matches!(parse_spec(text), Err(Error::Validation(_))));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, text).unwrap();
    assert!(load_spec_unvalidated(path.to_str().unwrap()).is_ok());
    let err = load_spec(path.to_str().unwrap()).unwrap_err();
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn coassociativity_failure() {
    // basis {g, u}: Δg = g⊗g + g⊗u, Δu = u⊗u, ε = (1, 0)
    let spec = CoalgebraSpec::new(
        vec!["g".into(), "u".into()],
        vec![vec![(0, 0, int(1)), (0, 1, int(1))], vec![(1, 1, int(1))]],
        vec![int(1), int(0)],
    )
    .unwrap();
    assert!(validate_coalgebra(&spec).has_law("coassociativity"));
}

#[test]
fn cop_and_direct_sum_stay_valid() {
    for name in BUILTINS {
        let spec = builtin(name).unwrap();
        assert!(validate_coalgebra(&spec.cop()).is_clean());
        assert_eq!(spec.cop().cop(), spec);
        let sum = spec.direct_sum(&builtin("trig").unwrap());
        assert!(validate_coalgebra(&sum).is_clean());
    }
}

#[test]
fn targets_are_poisson_hopf() {
    let affine = TargetHopfSpec::symmetric_lie(vec!["e".into(), "f".into()], &[((0, 1), vec![(1, int(1))])]).unwrap();
    assert!(affine.structure_report(4).is_clean());
    let sl2 = TargetHopfSpec::symmetric_lie(
        vec!["h".into(), "e".into(), "f".into()],
        &[
            ((0, 1), vec![(1, int(2))]),
            ((0, 2), vec![(2, int(-2))]),
            ((1, 2), vec![(0, int(1))]),
        ],
    )
    .unwrap();
    assert!(sl2.structure_report(3).is_clean());
    assert!(TargetHopfSpec::group_algebra(2).structure_report(3).is_clean());
    // [x,y] = z, [y,z] = x, [z,x] = x violates Jacobi
    let bad = TargetHopfSpec::symmetric_lie(
        vec!["x".into(), "y".into(), "z".into()],
        &[((0, 1), vec![(2, int(1))]), ((1, 2), vec![(0, int(1))]), ((2, 0), vec![(0, int(1))])],
    );
    assert!(bad.is_err());
}
