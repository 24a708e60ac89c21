use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Letter grade on the 12-step scale, ordered so that `A` is the highest
/// and `F` the lowest. Comparison is the only grade arithmetic in the
/// pipeline; there is no numeric GPA mapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LetterGrade {
    A,
    AMinus,
    BPlus,
    B,
    BMinus,
    CPlus,
    C,
    CMinus,
    DPlus,
    D,
    DMinus,
    F,
}

impl LetterGrade {
    /// All grades from highest to lowest.
    pub const ALL: [LetterGrade; 12] = [
        LetterGrade::A,
        LetterGrade::AMinus,
        LetterGrade::BPlus,
        LetterGrade::B,
        LetterGrade::BMinus,
        LetterGrade::CPlus,
        LetterGrade::C,
        LetterGrade::CMinus,
        LetterGrade::DPlus,
        LetterGrade::D,
        LetterGrade::DMinus,
        LetterGrade::F,
    ];

    // Rank increases with grade quality; F = 0, A = 11.
    fn rank(self) -> u8 {
        11 - Self::ALL.iter().position(|g| *g == self).unwrap() as u8
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LetterGrade::A => "A",
            LetterGrade::AMinus => "A-",
            LetterGrade::BPlus => "B+",
            LetterGrade::B => "B",
            LetterGrade::BMinus => "B-",
            LetterGrade::CPlus => "C+",
            LetterGrade::C => "C",
            LetterGrade::CMinus => "C-",
            LetterGrade::DPlus => "D+",
            LetterGrade::D => "D",
            LetterGrade::DMinus => "D-",
            LetterGrade::F => "F",
        }
    }

    pub fn parse(s: &str) -> Option<LetterGrade> {
        Self::ALL.iter().copied().find(|g| g.as_str() == s)
    }
}

impl PartialOrd for LetterGrade {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LetterGrade {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for LetterGrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for LetterGrade {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for LetterGrade {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        LetterGrade::parse(&s).ok_or_else(|| de::Error::custom(format!("unknown letter grade {s:?}")))
    }
}

/// True iff `g` is strictly lower than `threshold` in the grade order.
pub fn grade_below(g: LetterGrade, threshold: LetterGrade) -> bool {
    g < threshold
}

/// Per-course, per-week grade standing after disambiguation.
///
/// `Dropped` is absorbing within a semester. `ReportMissing` applies to a
/// whole weekly report, never to one course inside an otherwise-present
/// report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GradeStatus {
    Reported(LetterGrade),
    NotYetPosted,
    Dropped,
    PassFail,
    ReportMissing,
}

impl GradeStatus {
    pub fn reported(self) -> Option<LetterGrade> {
        match self {
            GradeStatus::Reported(g) => Some(g),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_agrees_with_enumeration_for_all_pairs() {
        let all = LetterGrade::ALL;
        for i in 0..all.len() {
            for j in 0..all.len() {
                // ALL is listed highest to lowest: earlier index = higher grade.
                let expected = j.cmp(&i);
                assert_eq!(
                    all[i].cmp(&all[j]),
                    expected,
                    "{} vs {}",
                    all[i],
                    all[j]
                );
            }
        }
    }

    #[test]
    fn below_threshold_examples() {
        use LetterGrade::*;
        assert!(grade_below(CPlus, BMinus));
        assert!(!grade_below(BMinus, BMinus));
        assert!(!grade_below(A, CMinus));
    }

    #[test]
    fn parse_display_round_trip() {
        for g in LetterGrade::ALL {
            assert_eq!(LetterGrade::parse(g.as_str()), Some(g));
        }
        assert_eq!(LetterGrade::parse("E"), None);
        assert_eq!(LetterGrade::parse("a"), None);
    }
}
