use clap::Parser;
use demazure_cli::{execute, Cache, Cli, CommandRequest, Format, Report};

fn request(args: &[&str]) -> CommandRequest {
    let cli = Cli::try_parse_from(std::iter::once("demazure").chain(args.iter().copied())).unwrap();
    CommandRequest::from_cli(&cli).unwrap()
}

const REQUESTS: &[&[&str]] = &[
    &["weyl-char", "--type", "C2", "--lambda", "2,1"],
    &["demazure-char", "--type", "A2", "--level", "1", "--lambda", "1,1", "--grade", "3"],
    &["level-flag", "--type", "A2", "--level", "1", "--to-level", "3", "--lambda", "2,2"],
    &["demazure-dim", "--type", "B2", "--level", "2", "--lambda", "1,1"],
    &["local-weyl", "--type", "G2", "--factor", "1,0@a", "--factor", "0,1@b"],
    &["crystal-check", "--type", "A1", "--lambda", "2,1", "--sigma", "0,1,0"],
    &["joseph", "--type", "A1", "--mu", "1,1", "--lambda", "1,0", "--sigma", "1,0"],
    &["joseph", "--type", "A1", "--mu", "0,1", "--lambda", "1,0", "--sigma", ""],
    &["weyl-finite", "--type", "B3", "--lambda", "0,0,1"],
    &["dim-check", "--type", "G2", "--lambda", "2,0"],
    &["dim-check", "--type", "A2", "--lambda", "0,0"],
];

#[test]
fn every_format_round_trips() {
    for args in REQUESTS {
        let rep = execute(&request(args)).unwrap();
        for format in [Format::Json, Format::Csv, Format::Table] {
            let text = rep.render(format).unwrap();
            let back = Report::parse(&text, format).unwrap_or_else(|e| panic!("{args:?} {format:?}: {e}\n{text}"));
            assert_eq!(back, rep, "{args:?} {format:?}");
            assert_eq!(back.render(format).unwrap(), text);
        }
    }
}

#[test]
fn formats_agree_with_each_other() {
    let rep = execute(&request(&["weyl-char", "--type", "C2", "--lambda", "1,1"])).unwrap();
    let via_csv = Report::parse(&rep.render(Format::Csv).unwrap(), Format::Csv).unwrap();
    let via_table = Report::parse(&rep.render(Format::Table).unwrap(), Format::Table).unwrap();
    assert_eq!(via_csv.render(Format::Json).unwrap(), rep.render(Format::Json).unwrap());
    assert_eq!(via_table, via_csv);
}

#[test]
fn malformed_input_is_rejected() {
    for (text, format) in [
        ("{\"type\":\"A1\",\"bogus\":1}", Format::Json),
        ("# character\ngrade,h1,coeff\n0,0,1\n", Format::Csv),
        ("# type\ntype\nA1\n# dim\ndim\nx\n", Format::Csv),
        ("[type]\ntype\nA1\n[dim]\ndim\n1 2\n", Format::Table),
    ] {
        assert!(Report::parse(text, format).is_err(), "{text}");
    }
}

#[test]
fn cache_keys_ignore_spelling_but_not_content() {
    let a = Cache::key(&request(&["flag", "--type", "C2", "--lambda", "2,0"]));
    let b = Cache::key(&request(&["flag", "--type", "C2", "--lambda", " 02, 0"]));
    let c = Cache::key(&request(&["flag", "--type", "C2", "--lambda", "0,2"]));
    let d = Cache::key(&request(&["flag", "--type", "C2", "--lambda", "2,0", "--format", "csv"]));
    let e = Cache::key(&request(&["weyl-char", "--type", "C2", "--lambda", "2,0"]));
    assert_eq!(a, b);
    assert!(a != c && a != d && a != e);
    let f1 = Cache::key(&request(&["local-weyl", "--type", "A1", "--factor", "1@a", "--factor", "2@b"]));
    let f2 = Cache::key(&request(&["local-weyl", "--type", "A1", "--factor", "2@b", "--factor", "1@a"]));
    assert_eq!(f1, f2);
}

#[test]
fn schema_is_enforced_before_computing() {
    let bad: &[&[&str]] = &[
        &["demazure-char", "--type", "A2", "--lambda", "1,0"],
        &["demazure-dim", "--type", "A2", "--lambda", "1,0", "--level", "1", "--grade", "2"],
        &["crystal-check", "--type", "A2", "--lambda", "1,0", "--sigma", "0"],
        &["joseph", "--type", "A1", "--mu", "1,0", "--lambda", "1,0", "--sigma", "x"],
        &["local-weyl", "--type", "A1", "--factor", "1@"],
    ];
    for args in bad {
        let cli = Cli::try_parse_from(std::iter::once("demazure").chain(args.iter().copied())).unwrap();
        let err = CommandRequest::from_cli(&cli).unwrap_err();
        assert_eq!(err.exit_code(), 2, "{args:?}");
    }
}
