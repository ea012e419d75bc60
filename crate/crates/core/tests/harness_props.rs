use ghseq::harness::{
    fragments, run_ccf_experiment, run_table1, table1_csv, write_ccf, write_table1,
    ExperimentConfig, ExperimentKind,
};
use ghseq::{b_sequence, ccf, peak_ccf, Error, Exact};

#[test]
fn table_matches_single_experiments() {
    let config = ExperimentConfig::default();
    let rows = run_table1(&config).unwrap();
    assert_eq!(rows.len(), 5);
    for row in &rows {
        for (kind, peak) in [
            (ExperimentKind::Gh, row.gh_peak),
            (ExperimentKind::PnSame, row.pn_same_peak),
            (ExperimentKind::PnDiff, row.pn_diff_peak),
        ] {
            let series = run_ccf_experiment::<Exact>(kind, row.length, &config).unwrap();
            assert_eq!(peak_ccf(&series, false).unwrap(), peak);
        }
        if row.length >= 50 {
            assert!(row.gh_peak < row.pn_same_peak, "length {}", row.length);
        }
    }
}

#[test]
fn gh_fragments_are_consecutive_windows() {
    let config = ExperimentConfig::default();
    let bn = b_sequence(200).unwrap();
    let (a, b) = fragments(ExperimentKind::Gh, 100, &config).unwrap();
    assert_eq!(a.as_slice(), &bn[..100]);
    assert_eq!(b.as_slice(), &bn[100..]);
    let direct = ccf::<Exact>(&a, &b).unwrap();
    assert_eq!(
        run_ccf_experiment::<Exact>(ExperimentKind::Gh, 100, &config).unwrap(),
        direct
    );
}

#[test]
fn identical_windows_give_unit_peak() {
    let config = ExperimentConfig {
        lengths: vec![2],
        gh_offsets: Some((0, 0)),
        ..Default::default()
    };
    let rows = run_table1(&config).unwrap();
    assert_eq!(rows[0].gh_peak, Exact::from_integer(1));
}

#[test]
fn short_lengths_rejected() {
    let config = ExperimentConfig::default();
    for kind in [
        ExperimentKind::Gh,
        ExperimentKind::PnSame,
        ExperimentKind::PnDiff,
    ] {
        assert!(matches!(
            run_ccf_experiment::<f64>(kind, 1, &config),
            Err(Error::InvalidConfig(_))
        ));
    }
    let config = ExperimentConfig {
        lengths: vec![25, 1],
        ..Default::default()
    };
    assert!(run_table1(&config).is_err());
}

#[test]
fn oversized_prefix_reports_requirement() {
    let config = ExperimentConfig {
        gh_offsets: Some((0, 10_000_000)),
        ..Default::default()
    };
    match run_ccf_experiment::<f64>(ExperimentKind::Gh, 10, &config) {
        Err(Error::InsufficientPrefix { required }) => assert_eq!(required, 10_000_010),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn outputs_are_byte_identical() {
    let config = ExperimentConfig::default();
    let (d1, d2) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let a = write_table1(&config, d1.path(), true).unwrap();
    let b = write_table1(&config, d2.path(), true).unwrap();
    assert_eq!(
        std::fs::read(&a.csv).unwrap(),
        std::fs::read(&b.csv).unwrap()
    );
    assert_eq!(
        std::fs::read(a.svg.unwrap()).unwrap(),
        std::fs::read(b.svg.unwrap()).unwrap()
    );
    let csv = std::fs::read_to_string(&a.csv).unwrap();
    assert_eq!(csv, table1_csv(&a.rows, &config));
    assert!(csv.starts_with("# offsets=0,L (gh)\n"));

    let c = write_ccf(ExperimentKind::PnSame, 100, &config, d1.path(), true).unwrap();
    let d = write_ccf(ExperimentKind::PnSame, 100, &config, d2.path(), true).unwrap();
    assert_eq!(
        std::fs::read(&c.csv).unwrap(),
        std::fs::read(&d.csv).unwrap()
    );
    assert_eq!(
        std::fs::read(c.svg.unwrap()).unwrap(),
        std::fs::read(d.svg.unwrap()).unwrap()
    );
}
