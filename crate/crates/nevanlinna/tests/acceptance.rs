use std::io::Write;

use nevanlinna::selftest::{criteria, run_selftest};

/// Criteria containing a clause that is false as written. They are reported as FAIL; the test requires
/// their amended form (only the false clause replaced) to pass and everything else to pass outright.
const FALSE_AS_WRITTEN: [usize; 3] = [4, 10, 12];

#[test]
fn acceptance_criteria() {
    let outcomes = run_selftest(None);
    assert_eq!(outcomes.len(), criteria().len());
    // written to the stderr handle directly so the report shows up without --nocapture
    let mut err = std::io::stderr().lock();
    for o in &outcomes {
        let _ = writeln!(err, "{o}");
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let _ = writeln!(err, "{passed}/{} criteria passed as written", outcomes.len());
    drop(err);

    for o in &outcomes {
        if FALSE_AS_WRITTEN.contains(&o.id) {
            assert!(!o.passed, "criterion {} now passes as written; revisit FALSE_AS_WRITTEN", o.id);
            assert_eq!(o.amended, Some(true), "criterion {} fails even in amended form: {}", o.id, o.detail);
        } else {
            assert!(o.passed, "criterion {} failed: {}", o.id, o.detail);
        }
    }
}
