//! Acceptance: the verification command must catch a corrupted matrix and
//! exit 4 naming the failed check.

mod common;

use common::{run, write_graph, DIRECTED_C3, P4};

#[test]
fn criterion_10_negative_control() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_graph(&dir, "p4.graph", P4);
    let file = file.to_str().unwrap();

    // sanity: the honest run is clean
    let clean = run(&["verify", file, "--n-from", "2", "--n-to", "4"]);
    assert_eq!(clean.status, Some(0), "stderr: {}", clean.stderr);
    assert!(clean.stdout.contains("all checks passed"));
    assert!(!clean.stdout.contains("FAIL"));

    // corrupting the reduced Laplacian must trip exactly the named check
    let out = run(&[
        "verify", file, "--n-from", "2", "--n-to", "4", "--inject-fault", "block_reduction",
    ]);
    assert_eq!(out.status, Some(4), "stdout: {}\nstderr: {}", out.stdout, out.stderr);
    assert!(
        out.stderr.contains("verification failed: block_reduction"),
        "stderr: {}",
        out.stderr
    );
    assert!(out.stdout.contains("block_reduction FAIL"));

    // every check is individually falsifiable, and the failure names it
    let all_checks = [
        "block_reduction",
        "structure_equality",
        "order_formula",
        "all_ones_order",
        "det_identity",
        "ses_consistency",
    ];
    for check in all_checks {
        let out = run(&["verify", file, "--n-from", "2", "--n-to", "3", "--inject-fault", check]);
        assert_eq!(out.status, Some(4), "check: {check}");
        assert!(out.stderr.contains(check), "check {check} missing from: {}", out.stderr);
        assert!(out.stdout.contains(&format!("{check} FAIL")), "stdout: {}", out.stdout);
        for other in all_checks {
            if other != check {
                assert!(
                    !out.stdout.contains(&format!("{other} FAIL")),
                    "fault {check} also tripped {other}"
                );
            }
        }
    }

    // a genuinely directed input behaves the same way
    let c3 = write_graph(&dir, "c3.graph", DIRECTED_C3);
    let c3 = c3.to_str().unwrap();
    assert_eq!(run(&["verify", c3, "--n-from", "2", "--n-to", "5"]).status, Some(0));
    let out = run(&["verify", c3, "--n-from", "2", "--n-to", "2", "--inject-fault", "ses_consistency"]);
    assert_eq!(out.status, Some(4));
    assert!(out.stderr.contains("ses_consistency"));

    println!("criterion 10 (negative control): PASS");
}
