//! Plain-text rendering.

use capelli_core::verify::VerdictRecord;

pub fn tuple(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// One aligned row per record and a closing summary line.
pub fn verdict_table(records: &[VerdictRecord]) -> String {
    let sw = records.iter().map(|r| r.suite.len()).max().unwrap_or(0).max(5);
    let cw = records.iter().map(|r| r.case.len()).max().unwrap_or(0).max(4);
    let mut out = format!("{:sw$}  {:cw$}  status  elapsed\n", "suite", "case");
    for r in records {
        let elapsed = r.elapsed.map(|e| format!("{e} ms")).unwrap_or_else(|| "-".into());
        out.push_str(&format!("{:sw$}  {:cw$}  {:6}  {elapsed}", r.suite, r.case, r.status.to_string()));
        if let Some(w) = &r.witness {
            out.push_str(&format!("  {w}"));
        }
        out.push('\n');
    }
    let failed = records.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!("{} passed, {failed} failed\n", records.len() - failed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use capelli_core::verify::Status;

    #[test]
    fn table_lists_witnesses() {
        let r = VerdictRecord {
            suite: "gl".into(),
            case: "N=2 nu=[1]".into(),
            status: Status::Fail,
            witness: Some("w".into()),
            elapsed: None,
        };
        let t = verdict_table(&[r]);
        assert!(t.contains("fail    -  w"));
        assert!(t.ends_with("0 passed, 1 failed\n"));
        assert_eq!(tuple(&[0, -1, 2]), "(0,-1,2)");
    }
}
