use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// One of the 23 intervention codes, in canonical table order:
/// communication (C), alternatives (B), support (S), referrals (R).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Intervention {
    C1_1,
    C1_2,
    C1_3,
    C2,
    C3,
    C4,
    B1_1,
    B1_2,
    B2,
    B3,
    B4,
    B5,
    S1,
    S2,
    S3,
    S4,
    S5,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

pub const INTERVENTION_COUNT: usize = 23;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown intervention code {0:?}")]
pub struct UnknownCode(pub String);

impl Intervention {
    pub const ALL: [Intervention; INTERVENTION_COUNT] = [
        Intervention::C1_1,
        Intervention::C1_2,
        Intervention::C1_3,
        Intervention::C2,
        Intervention::C3,
        Intervention::C4,
        Intervention::B1_1,
        Intervention::B1_2,
        Intervention::B2,
        Intervention::B3,
        Intervention::B4,
        Intervention::B5,
        Intervention::S1,
        Intervention::S2,
        Intervention::S3,
        Intervention::S4,
        Intervention::S5,
        Intervention::R1,
        Intervention::R2,
        Intervention::R3,
        Intervention::R4,
        Intervention::R5,
        Intervention::R6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Intervention::C1_1 => "C1.1",
            Intervention::C1_2 => "C1.2",
            Intervention::C1_3 => "C1.3",
            Intervention::C2 => "C2",
            Intervention::C3 => "C3",
            Intervention::C4 => "C4",
            Intervention::B1_1 => "B1.1",
            Intervention::B1_2 => "B1.2",
            Intervention::B2 => "B2",
            Intervention::B3 => "B3",
            Intervention::B4 => "B4",
            Intervention::B5 => "B5",
            Intervention::S1 => "S1",
            Intervention::S2 => "S2",
            Intervention::S3 => "S3",
            Intervention::S4 => "S4",
            Intervention::S5 => "S5",
            Intervention::R1 => "R1",
            Intervention::R2 => "R2",
            Intervention::R3 => "R3",
            Intervention::R4 => "R4",
            Intervention::R5 => "R5",
            Intervention::R6 => "R6",
        }
    }

    /// What the code asks staff to do; shipped with decision output so the
    /// records are readable without the code table at hand.
    pub fn description(self) -> &'static str {
        match self {
            Intervention::C1_1 => "Email the student",
            Intervention::C1_2 => "Text the student",
            Intervention::C1_3 => "Call the student",
            Intervention::C2 => "Contact the student counselor",
            Intervention::C3 => "Contact instructors for grades",
            Intervention::C4 => "Forward student comments to the curriculum committee",
            Intervention::B1_1 => "Remind about drop/withdraw deadlines and minimum GPA rules",
            Intervention::B1_2 => "Suggest switching to a CS degree program with lower requirements",
            Intervention::B2 => "Recommend retroactive withdrawal",
            Intervention::B3 => "Advise taking a course elsewhere for transferable credits",
            Intervention::B4 => "Recommend lowering the job workload",
            Intervention::B5 => "Suggest prioritizing schoolwork or CS-track core courses",
            Intervention::S1 => "Offer dedicated tutor support or workshops",
            Intervention::S2 => "Study skills and exam-taking workshop",
            Intervention::S3 => "Time management workshop",
            Intervention::S4 => "College transition seminar",
            Intervention::S5 => "Social engagement event/workshop",
            Intervention::R1 => "Refer to university mentoring/tutoring or course TAs",
            Intervention::R2 => "Refer to case management support",
            Intervention::R3 => "Refer to psychological services",
            Intervention::R4 => "Refer to the financial aid office and job placement resources",
            Intervention::R5 => "Refer to the CS student counselor",
            Intervention::R6 => "Refer to the IT department",
        }
    }
}

/// Maps a canonical code ("C1.1", "R6", ...) to its identifier.
/// Case-sensitive; feature codes are not interventions.
pub fn intervention_parse(code: &str) -> Result<Intervention, UnknownCode> {
    Intervention::ALL
        .iter()
        .copied()
        .find(|i| i.as_str() == code)
        .ok_or_else(|| UnknownCode(code.to_string()))
}

impl fmt::Display for Intervention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Intervention {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Intervention {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        intervention_parse(&s).map_err(de::Error::custom)
    }
}

/// Set of interventions for one student-week. Union is idempotent; the
/// serialized form is the sorted list of member codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct InterventionSet {
    bits: u32,
}

impl InterventionSet {
    pub const EMPTY: InterventionSet = InterventionSet { bits: 0 };

    pub fn insert(&mut self, i: Intervention) {
        self.bits |= 1 << i as u32;
    }

    pub fn remove(&mut self, i: Intervention) {
        self.bits &= !(1 << i as u32);
    }

    pub fn contains(&self, i: Intervention) -> bool {
        self.bits & (1 << i as u32) != 0
    }

    pub fn union(&self, other: &InterventionSet) -> InterventionSet {
        InterventionSet { bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &InterventionSet) -> InterventionSet {
        InterventionSet { bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: &InterventionSet) -> InterventionSet {
        InterventionSet { bits: self.bits & !other.bits }
    }

    pub fn is_subset(&self, other: &InterventionSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Members in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = Intervention> + '_ {
        Intervention::ALL.iter().copied().filter(|i| self.contains(*i))
    }

    pub fn to_bits(&self) -> [u8; INTERVENTION_COUNT] {
        let mut out = [0u8; INTERVENTION_COUNT];
        for (k, i) in Intervention::ALL.iter().enumerate() {
            out[k] = self.contains(*i) as u8;
        }
        out
    }

    pub fn from_bits(bits: &[u8]) -> Option<Self> {
        if bits.len() != INTERVENTION_COUNT {
            return None;
        }
        let mut set = InterventionSet::EMPTY;
        for (k, i) in Intervention::ALL.iter().enumerate() {
            if bits[k] != 0 {
                set.insert(*i);
            }
        }
        Some(set)
    }

    /// Space-joined sorted codes; empty string for the empty set. This is
    /// the cell format of label and decision files.
    pub fn to_code_string(&self) -> String {
        self.iter().map(|i| i.as_str()).collect::<Vec<_>>().join(" ")
    }

    pub fn from_code_string(s: &str) -> Result<Self, UnknownCode> {
        let mut set = InterventionSet::EMPTY;
        for code in s.split_whitespace() {
            set.insert(intervention_parse(code)?);
        }
        Ok(set)
    }
}

impl FromIterator<Intervention> for InterventionSet {
    fn from_iter<T: IntoIterator<Item = Intervention>>(iter: T) -> Self {
        let mut set = InterventionSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Display for InterventionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for InterventionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.iter().collect::<Vec<_>>().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for InterventionSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let codes: Vec<Intervention> = Vec::deserialize(deserializer)?;
        Ok(codes.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(intervention_parse("R6"), Ok(Intervention::R6));
        assert_eq!(intervention_parse("r6"), Err(UnknownCode("r6".into())));
        assert_eq!(intervention_parse("M1.1"), Err(UnknownCode("M1.1".into())));
    }

    #[test]
    fn parse_round_trips_with_serializer() {
        for i in Intervention::ALL {
            assert_eq!(intervention_parse(i.as_str()), Ok(i));
        }
    }

    #[test]
    fn set_semantics_and_sorted_encoding() {
        let mut set = InterventionSet::EMPTY;
        set.insert(Intervention::R1);
        set.insert(Intervention::C1_1);
        set.insert(Intervention::R1);
        assert_eq!(set.len(), 2);
        assert_eq!(serde_json::to_string(&set).unwrap(), r#"["C1.1","R1"]"#);
        assert_eq!(set.to_string(), "{C1.1, R1}");
        assert_eq!(set.to_code_string(), "C1.1 R1");
        assert_eq!(InterventionSet::from_code_string("R1 C1.1").unwrap(), set);
        assert_eq!(InterventionSet::from_code_string("").unwrap(), InterventionSet::EMPTY);
    }
}
