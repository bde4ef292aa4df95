use pfsdist::repro::data;
use pfsdist::{Dataset, DistanceMethod, Error};

#[test]
fn embedded_files_round_trip() {
    for (name, text) in data::ALL {
        let parsed = Dataset::from_json_str(text, pfsdist::DEFAULT_EPSILON).unwrap();
        let again =
            Dataset::from_json_str(&parsed.to_json_string(), pfsdist::DEFAULT_EPSILON).unwrap();
        assert_eq!(parsed, again, "{name}");
    }
}

#[test]
fn files_on_disk_match_embedded_copies() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for (name, text) in data::ALL {
        let on_disk = std::fs::read_to_string(dir.join(name)).unwrap();
        assert_eq!(on_disk, text, "{name}");
    }
}

#[test]
fn strict_epsilon_rejects_the_boundary_pair_in_application_two() {
    let err = Dataset::from_json_str(data::APP2_PATIENTS, 0.0).unwrap_err();
    match err {
        Error::Dataset {
            line: Some(_),
            message,
        } => {
            assert!(
                message.contains("'P2'") && message.contains("'Chest pain'"),
                "{message}"
            );
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn missing_file_is_a_dataset_error() {
    let err = Dataset::from_path("/nonexistent/set.json", 1e-3).unwrap_err();
    assert!(matches!(err, Error::Dataset { line: None, .. }));
}

#[test]
fn printed_and_exact_cases_differ_only_in_first_five() {
    let printed = pfsdist::repro::cases_printed();
    let exact = pfsdist::repro::cases_squared();
    for i in 1..=8 {
        for side in ["A", "B"] {
            let name = format!("{side}{i}");
            let d = DistanceMethod::PfsEuclidean
                .distance(
                    printed.require(&name).unwrap(),
                    exact.require(&name).unwrap(),
                )
                .unwrap()
                .value();
            if i <= 5 {
                // two-decimal rounding of the degrees
                assert!(d > 0.0 && d < 0.01, "{name}: {d}");
            } else {
                assert_eq!(d, 0.0, "{name}");
            }
        }
    }
}
