use mattol_cli::{parse_matrix_file, parse_matrix_str, parse_vector_str, InputError};

fn rows(src: &str) -> Vec<f64> {
    parse_matrix_str(src).unwrap().to_row_major()
}

#[test]
fn plain_text() {
    let m = parse_matrix_str("2\n10 -2\n-1 10\n").unwrap();
    assert_eq!(m.n(), 2);
    assert_eq!(m.to_row_major(), [10.0, -2.0, -1.0, 10.0]);
}

#[test]
fn layout_of_plain_text_is_free() {
    assert_eq!(rows("2 10 -2 -1 10"), rows("2\n10\n-2\n\n-1\t10\n"));
}

#[test]
fn csv() {
    assert_eq!(rows("10,-2\n-1,10\n"), [10.0, -2.0, -1.0, 10.0]);
    assert_eq!(rows(" 1.5 , 2e-3\n\n-0.25,4\n"), [1.5, 0.002, -0.25, 4.0]);
}

#[test]
fn wrong_count_is_a_parse_error() {
    let e = parse_matrix_str("2\n1 2 3\n").unwrap_err();
    assert_eq!(
        e,
        InputError::Parse {
            line: 2,
            col: 6,
            msg: "expected 4 entries for n = 2, found 3".into()
        }
    );
}

#[test]
fn surplus_entry_is_located() {
    match parse_matrix_str("1\n4\n  5\n").unwrap_err() {
        InputError::Parse { line, col, .. } => assert_eq!((line, col), (3, 3)),
        e => panic!("{e:?}"),
    }
}

#[test]
fn bad_dimension_and_bad_number() {
    assert!(matches!(parse_matrix_str("0\n"), Err(InputError::Parse { line: 1, col: 1, .. })));
    assert!(matches!(parse_matrix_str("x 1"), Err(InputError::Parse { line: 1, col: 1, .. })));
    assert!(matches!(
        parse_matrix_str("2\n1 2\n3 four\n"),
        Err(InputError::Parse { line: 3, col: 3, .. })
    ));
    assert!(matches!(parse_matrix_str(""), Err(InputError::Parse { .. })));
}

#[test]
fn csv_shape_errors() {
    assert_eq!(
        parse_matrix_str("1,2,3\n4,5,6\n").unwrap_err(),
        InputError::NonSquare { rows: 2, row: 1, cols: 3 }
    );
    assert_eq!(
        parse_matrix_str("1,2\n3\n").unwrap_err(),
        InputError::NonSquare { rows: 2, row: 2, cols: 1 }
    );
    assert!(matches!(
        parse_matrix_str("1,,2\n"),
        Err(InputError::Parse { line: 1, col: 3, .. })
    ));
}

#[test]
fn non_finite_entries() {
    assert_eq!(
        parse_matrix_str("2\n1 2\nnan 4\n").unwrap_err(),
        InputError::NonFinite { line: 3, col: 1 }
    );
    assert_eq!(
        parse_matrix_str("1,inf\n3,4\n").unwrap_err(),
        InputError::NonFinite { line: 1, col: 3 }
    );
}

#[test]
fn vectors() {
    assert_eq!(parse_vector_str("1, -2 3\n4").unwrap(), [1.0, -2.0, 3.0, 4.0]);
    assert!(parse_vector_str("  \n").is_err());
}

#[test]
fn missing_file() {
    assert!(matches!(
        parse_matrix_file("/nonexistent/matrix.txt"),
        Err(InputError::Io { .. })
    ));
}
