use serde::{Deserialize, Serialize};

use super::grade::GradeStatus;

/// Course bucket used when choosing interventions: required CS courses,
/// required non-CS STEM courses, and everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum CourseCategory {
    CsTrackCore,
    CsTrackStem,
    #[default]
    OtherElectives,
}

impl CourseCategory {
    pub fn as_str(self) -> &'static str {
        match self {
            CourseCategory::CsTrackCore => "cs_track_core",
            CourseCategory::CsTrackStem => "cs_track_stem",
            CourseCategory::OtherElectives => "other_electives",
        }
    }
}

/// One course line within a weekly report. The category is attached during
/// ingestion (parse fills in the default until the catalog is consulted).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CourseEntry {
    pub code: String,
    pub status: GradeStatus,
    #[serde(default)]
    pub category: CourseCategory,
}

impl CourseEntry {
    pub fn new(code: impl Into<String>, status: GradeStatus) -> Self {
        CourseEntry { code: code.into(), status, category: CourseCategory::default() }
    }
}

/// One student-week: grade statuses per course plus the three journal
/// fields. `missing = true` means the student submitted nothing that week,
/// in which case courses and journals are empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeeklyReport {
    pub student_id: String,
    pub report_week: u32,
    /// Official semester week; 0 until alignment fills it in.
    #[serde(default)]
    pub semester_week: u32,
    pub courses: Vec<CourseEntry>,
    #[serde(default)]
    pub journal_cs: String,
    #[serde(default)]
    pub journal_noncs: String,
    #[serde(default)]
    pub journal_personal: String,
    #[serde(default)]
    pub missing: bool,
}

impl WeeklyReport {
    /// Synthetic placeholder for a week with no submission.
    pub fn missing_week(student_id: &str, semester_week: u32) -> Self {
        WeeklyReport {
            student_id: student_id.to_string(),
            report_week: 0,
            semester_week,
            courses: Vec::new(),
            journal_cs: String::new(),
            journal_noncs: String::new(),
            journal_personal: String::new(),
            missing: true,
        }
    }

    pub fn journals_empty(&self) -> bool {
        self.journal_cs.is_empty() && self.journal_noncs.is_empty() && self.journal_personal.is_empty()
    }

    pub fn course(&self, code: &str) -> Option<&CourseEntry> {
        self.courses.iter().find(|c| c.code == code)
    }
}

/// Per-student-semester escalation memory carried across weeks by the rule
/// engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct EscalationState {
    pub consecutive_misses: u32,
    /// Workshops (S2/S3/S4) already delivered this semester.
    pub workshops_attended: super::interventions::InterventionSet,
    pub escalation_halted: bool,
    pub past_late_drop: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::grade::LetterGrade;

    #[test]
    fn missing_week_has_no_content() {
        let r = WeeklyReport::missing_week("s1", 4);
        assert!(r.missing);
        assert!(r.courses.is_empty());
        assert!(r.journals_empty());
        assert_eq!(r.semester_week, 4);
    }

    #[test]
    fn report_serde_round_trip() {
        let r = WeeklyReport {
            student_id: "s1".into(),
            report_week: 3,
            semester_week: 3,
            courses: vec![CourseEntry::new("CS101", GradeStatus::Reported(LetterGrade::BPlus))],
            journal_cs: "went fine".into(),
            journal_noncs: String::new(),
            journal_personal: String::new(),
            missing: false,
        };
        let json = serde_json::to_string(&r).unwrap();
        let back: WeeklyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
