use hugheslab::algebra::PrimeSet;
use hugheslab::harness::{
    analyze, analyze_with, builtin, builtin_catalog, parse_catalog, render_table, write_catalog,
    AnalysisReport, AnalyzeOptions, GroupRecord,
};
use hugheslab::hughes::{PiCase, PiChoice};

#[test]
fn s3_report() {
    let r = analyze("S3", &builtin("S3").unwrap(), &PiChoice::All).unwrap();
    assert_eq!(r.order, 6);
    assert_eq!(r.case, PiCase::Trivial);
    assert_eq!(r.hughes_order(2), Some(3));
    assert_eq!(r.hughes_order(3), Some(6));
    assert_eq!(r.intersection_order, Some(3));
    let f = r.frobenius.as_ref().unwrap();
    assert_eq!((f.kernel_order, f.complement_order), (3, 2));
    assert!(r.is_clean());
    assert!(!r.is_exceptional());
}

#[test]
fn d30_equals_some_hp() {
    let g = builtin("D30").unwrap();
    let pi: PrimeSet = "2,3".parse().unwrap();
    let r = analyze("D30", &g, &PiChoice::Set(pi)).unwrap();
    assert_eq!(r.case, PiCase::EqualsSomeHp);
    assert_eq!(r.case_prime, Some(2));
    assert_eq!(r.h_pi_order, 15);
    assert!(r.is_clean(), "{:?}", r.violations);
}

#[test]
fn p_group_summary() {
    let r = analyze("D8", &builtin("D8").unwrap(), &PiChoice::All).unwrap();
    let pg = r.p_group.as_ref().unwrap();
    assert_eq!(pg.p, 2);
    assert_eq!(pg.class, Some(2));
    assert!(!pg.regular);
    assert_eq!(r.hughes_order(2), Some(4));

    let e = builtin("3^(1+2):exp3").unwrap();
    let r = analyze("3^(1+2):exp3", &e, &PiChoice::All).unwrap();
    let pg = r.p_group.unwrap();
    assert!(pg.regular);
    assert!(pg.omega1_exact);
    assert_eq!(pg.omega1_order, 27);

    let quick = analyze_with(
        "D8",
        &builtin("D8").unwrap(),
        &PiChoice::All,
        AnalyzeOptions {
            max_subset: 1,
            regularity: false,
        },
    )
    .unwrap();
    assert!(!quick.p_group.unwrap().regular);
}

#[test]
fn nonsolvable_group_skips_solvable_checks() {
    let r = analyze("A5", &builtin("A5").unwrap(), &PiChoice::All).unwrap();
    assert!(!r.solvable);
    assert!(r.main_theorem.is_none());
    assert_eq!(r.case, PiCase::Trivial);
    assert!(r.is_clean());
}

#[test]
fn report_lines_roundtrip() {
    let r = analyze("A4", &builtin("A4").unwrap(), &PiChoice::All).unwrap();
    let back: AnalysisReport = serde_json::from_str(&r.to_line()).unwrap();
    assert_eq!(back, r);
    assert_eq!(
        r.to_line(),
        analyze("A4", &builtin("A4").unwrap(), &PiChoice::All)
            .unwrap()
            .to_line()
    );
}

#[test]
fn table_has_one_row_per_report() {
    let reports: Vec<AnalysisReport> = ["C6", "S3", "Q8"]
        .iter()
        .map(|n| analyze(n, &builtin(n).unwrap(), &PiChoice::All).unwrap())
        .collect();
    let table = render_table(&reports);
    let rows: Vec<&str> = table.lines().collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[2].starts_with("S3 "));
    assert!(rows[2].contains("TRIVIAL"));
}

#[test]
fn builtin_catalog_roundtrips_through_text() {
    let records: Vec<GroupRecord> = builtin_catalog().iter().map(|e| e.record()).collect();
    let text = write_catalog(&records);
    let parsed: Vec<GroupRecord> = parse_catalog(&text)
        .into_iter()
        .map(Result::unwrap)
        .collect();
    assert_eq!(parsed, records);
    for (rec, e) in parsed.iter().zip(builtin_catalog()) {
        assert!(rec.to_group().unwrap().same_group(&e.group), "{}", rec.name);
    }
}

#[test]
fn duplicate_names_are_rejected() {
    let line = r#"{"name":"x","degree":2,"generators":[[1,0]]}"#;
    let parsed = parse_catalog(&format!("{line}\n{line}\n"));
    assert!(parsed[0].is_ok());
    assert_eq!(parsed[1].as_ref().unwrap_err().line, 2);
}
