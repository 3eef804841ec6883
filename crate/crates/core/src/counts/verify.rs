use super::{shared, SequenceFamily};
use crate::{Count, Oracle, Result};

/// Oracle, formula and (where one exists) recurrence value at a single `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRow {
    pub n: u64,
    pub oracle: Count,
    pub formula: Count,
    pub recurrence: Option<Count>,
    pub all_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub family: SequenceFamily,
    pub rows: Vec<VerificationRow>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn first_failure(&self) -> Option<&VerificationRow> {
        self.rows.iter().find(|r| !r.all_equal)
    }
}

/// Compares enumeration against the closed form and recurrence for
/// `n = 1..=n_max`, using the default oracle ceiling.
pub fn verify_family(family: SequenceFamily, n_max: u64) -> Result<VerificationReport> {
    verify_family_with(&Oracle::default(), family, n_max)
}

pub fn verify_family_with(
    oracle: &Oracle,
    family: SequenceFamily,
    n_max: u64,
) -> Result<VerificationReport> {
    let spec = family.oracle_spec();
    let table = shared();
    let rows = (1..=n_max)
        .map(|n| {
            let oracle = oracle.count_matching(n, &spec)?;
            let formula = table.formula(family, n)?;
            let recurrence = table.recurrence(family, n)?;
            let all_equal =
                oracle == formula && recurrence.as_ref().is_none_or(|r| *r == formula);
            Ok(VerificationRow { n, oracle, formula, recurrence, all_equal })
        })
        .collect::<Result<Vec<_>>>()?;
    let overall_pass = rows.iter().all(|r| r.all_equal);
    Ok(VerificationReport { family, rows, overall_pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::Gap;

    #[test]
    fn c_up_to_ten() {
        let report = verify_family(SequenceFamily::C, 10).unwrap();
        assert!(report.overall_pass);
        let row = &report.rows[2];
        assert_eq!((row.n, row.oracle.clone(), row.formula.clone()), (3, 5u8.into(), 5u8.into()));
    }

    #[test]
    fn h_with_gap_two() {
        let report = verify_family(SequenceFamily::H(Gap::new(2).unwrap()), 12).unwrap();
        assert!(report.overall_pass);
        let row = &report.rows[3];
        assert_eq!(row.oracle, Count::from(2u8));
        assert_eq!(row.formula, Count::from(2u8));
        assert_eq!(row.recurrence, Some(Count::from(2u8)));
    }

    #[test]
    fn m_matches_listed_values() {
        let report = verify_family(SequenceFamily::M, 9).unwrap();
        let got: Vec<_> = report.rows.iter().map(|r| r.oracle.clone()).collect();
        let want: Vec<Count> = [1u8, 1, 2, 3, 5, 8, 13, 21, 34].map(Count::from).to_vec();
        assert_eq!(got, want);
        assert!(report.first_failure().is_none());
    }

    #[test]
    fn ceiling_errors_propagate() {
        let oracle = Oracle::with_ceiling(4).unwrap();
        assert!(verify_family_with(&oracle, SequenceFamily::M, 5).is_err());
    }
}
