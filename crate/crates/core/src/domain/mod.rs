//! Shared domain types: grades and statuses, the academic calendar, weekly
//! reports, the trigger-feature vectors, and the intervention code table.
//!
//! All types here are immutable values, safe to share and send between
//! threads. Canonical text codes ("G1.1".."O" for triggers, "C1.1".."R6"
//! for interventions) are the external form used in every file format.

mod calendar;
mod features;
mod grade;
mod interventions;
mod report;

pub use calendar::{AcademicCalendar, CalendarError};
pub use features::{fired_triggers, QualCode, QualFeatures, QuantCode, QuantFeatures, TriggerCode};
pub use grade::{grade_below, GradeStatus, LetterGrade};
pub use interventions::{
    intervention_parse, Intervention, InterventionSet, UnknownCode, INTERVENTION_COUNT,
};
pub use report::{CourseCategory, CourseEntry, EscalationState, WeeklyReport};
