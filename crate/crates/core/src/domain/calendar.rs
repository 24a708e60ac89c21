use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CalendarError {
    #[error("semester must span at least 10 weeks, got {0}")]
    TooShort(u32),
    #[error("deadline anchors must satisfy 1 <= drop ({drop}) < late drop ({late_drop}) < final ({final_week}) <= weeks ({weeks})")]
    BadAnchors {
        drop: u32,
        late_drop: u32,
        final_week: u32,
        weeks: u32,
    },
    #[error("week offset map must be injective and monotonically increasing (report week {0})")]
    BadOffsetMap(u32),
    #[error("report week {0} appears in both the offset map and the holiday set")]
    HolidayOverlap(u32),
    #[error("failed to read calendar file: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse calendar file: {0}")]
    Parse(#[from] toml::de::Error),
}

/// Semester week map with the deadline anchors the grade features hang off.
///
/// `week_offset_map` translates raw report-week indices to official semester
/// weeks; `holiday_weeks` are report weeks that carry no semester week at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CalendarFile", into = "CalendarFile")]
pub struct AcademicCalendar {
    semester_id: String,
    weeks: u32,
    drop_deadline_week: u32,
    late_drop_deadline_week: u32,
    final_week: u32,
    holiday_weeks: BTreeSet<u32>,
    week_offset_map: BTreeMap<u32, u32>,
}

/// On-disk shape: `week_offset_map` as `[report_week, semester_week]` pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct CalendarFile {
    semester_id: String,
    weeks: u32,
    drop_deadline_week: u32,
    late_drop_deadline_week: u32,
    final_week: u32,
    #[serde(default)]
    holiday_weeks: Vec<u32>,
    week_offset_map: Vec<(u32, u32)>,
}

impl TryFrom<CalendarFile> for AcademicCalendar {
    type Error = CalendarError;

    fn try_from(f: CalendarFile) -> Result<Self, CalendarError> {
        AcademicCalendar::new(
            f.semester_id,
            f.weeks,
            f.drop_deadline_week,
            f.late_drop_deadline_week,
            f.final_week,
            f.holiday_weeks.into_iter().collect(),
            f.week_offset_map.into_iter().collect(),
        )
    }
}

impl From<AcademicCalendar> for CalendarFile {
    fn from(c: AcademicCalendar) -> CalendarFile {
        CalendarFile {
            semester_id: c.semester_id,
            weeks: c.weeks,
            drop_deadline_week: c.drop_deadline_week,
            late_drop_deadline_week: c.late_drop_deadline_week,
            final_week: c.final_week,
            holiday_weeks: c.holiday_weeks.into_iter().collect(),
            week_offset_map: c.week_offset_map.into_iter().collect(),
        }
    }
}

impl AcademicCalendar {
    pub fn new(
        semester_id: String,
        weeks: u32,
        drop_deadline_week: u32,
        late_drop_deadline_week: u32,
        final_week: u32,
        holiday_weeks: BTreeSet<u32>,
        week_offset_map: BTreeMap<u32, u32>,
    ) -> Result<Self, CalendarError> {
        if weeks < 10 {
            return Err(CalendarError::TooShort(weeks));
        }
        if !(1 <= drop_deadline_week
            && drop_deadline_week < late_drop_deadline_week
            && late_drop_deadline_week < final_week
            && final_week <= weeks)
        {
            return Err(CalendarError::BadAnchors {
                drop: drop_deadline_week,
                late_drop: late_drop_deadline_week,
                final_week,
                weeks,
            });
        }
        // BTreeMap keys are already sorted and unique; monotone + injective
        // reduces to strictly increasing values in key order.
        let mut prev: Option<u32> = None;
        for (&report_week, &semester_week) in &week_offset_map {
            if semester_week == 0 || prev.is_some_and(|p| semester_week <= p) {
                return Err(CalendarError::BadOffsetMap(report_week));
            }
            prev = Some(semester_week);
        }
        if let Some(&w) = holiday_weeks.iter().find(|w| week_offset_map.contains_key(w)) {
            return Err(CalendarError::HolidayOverlap(w));
        }
        Ok(AcademicCalendar {
            semester_id,
            weeks,
            drop_deadline_week,
            late_drop_deadline_week,
            final_week,
            holiday_weeks,
            week_offset_map,
        })
    }

    /// Identity-mapped calendar without holidays, running `final_week` weeks.
    pub fn identity(
        semester_id: &str,
        weeks: u32,
        drop_deadline_week: u32,
        late_drop_deadline_week: u32,
        final_week: u32,
    ) -> Result<Self, CalendarError> {
        Self::new(
            semester_id.to_string(),
            weeks,
            drop_deadline_week,
            late_drop_deadline_week,
            final_week,
            BTreeSet::new(),
            (1..=weeks).map(|w| (w, w)).collect(),
        )
    }

    pub fn load(path: &Path) -> Result<Self, CalendarError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_toml_str(&text)
    }

    pub fn from_toml_str(text: &str) -> Result<Self, CalendarError> {
        let file: CalendarFile = toml::from_str(text)?;
        Self::try_from(file)
    }

    pub fn semester_id(&self) -> &str {
        &self.semester_id
    }

    pub fn weeks(&self) -> u32 {
        self.weeks
    }

    pub fn drop_deadline_week(&self) -> u32 {
        self.drop_deadline_week
    }

    pub fn late_drop_deadline_week(&self) -> u32 {
        self.late_drop_deadline_week
    }

    pub fn final_week(&self) -> u32 {
        self.final_week
    }

    pub fn is_holiday(&self, report_week: u32) -> bool {
        self.holiday_weeks.contains(&report_week)
    }

    pub fn semester_week_of(&self, report_week: u32) -> Option<u32> {
        self.week_offset_map.get(&report_week).copied()
    }

    /// Inverse of the offset map (injective, so well defined).
    pub fn report_week_of(&self, semester_week: u32) -> Option<u32> {
        self.week_offset_map
            .iter()
            .find(|(_, &s)| s == semester_week)
            .map(|(&r, _)| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_anchor_ordering() {
        assert!(AcademicCalendar::identity("s", 15, 9, 9, 15).is_err());
        assert!(AcademicCalendar::identity("s", 15, 5, 9, 16).is_err());
        assert!(AcademicCalendar::identity("s", 9, 2, 5, 9).is_err());
        assert!(AcademicCalendar::identity("s", 15, 5, 9, 15).is_ok());
    }

    #[test]
    fn rejects_non_monotone_offset_map() {
        let map: BTreeMap<u32, u32> = [(1, 1), (2, 3), (3, 2)].into_iter().collect();
        let err = AcademicCalendar::new("s".into(), 15, 5, 9, 15, BTreeSet::new(), map);
        assert!(matches!(err, Err(CalendarError::BadOffsetMap(3))));
    }

    #[test]
    fn rejects_holiday_inside_offset_map() {
        let map: BTreeMap<u32, u32> = (1..=15).map(|w| (w, w)).collect();
        let holidays: BTreeSet<u32> = [6].into_iter().collect();
        let err = AcademicCalendar::new("s".into(), 15, 5, 9, 15, holidays, map);
        assert!(matches!(err, Err(CalendarError::HolidayOverlap(6))));
    }

    #[test]
    fn toml_round_trip() {
        let cal = AcademicCalendar::identity("2025-fall", 15, 5, 10, 15).unwrap();
        let text = toml::to_string(&cal).unwrap();
        let back = AcademicCalendar::from_toml_str(&text).unwrap();
        assert_eq!(cal, back);
    }
}
