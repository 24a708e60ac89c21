use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

macro_rules! flag_vector {
    ($(#[$meta:meta])* $vec:ident, $code:ident, $count:literal, [$(($variant:ident, $field:ident, $text:literal)),+ $(,)?]) => {
        /// Canonical code for one flag of the vector, in table order.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum $code {
            $($variant,)+
        }

        impl $code {
            pub const ALL: [$code; $count] = [$($code::$variant,)+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($code::$variant => $text,)+
                }
            }

            pub fn parse(s: &str) -> Option<$code> {
                match s {
                    $($text => Some($code::$variant),)+
                    _ => None,
                }
            }
        }

        impl fmt::Display for $code {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl Serialize for $code {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.serialize_str(self.as_str())
            }
        }

        impl<'de> Deserialize<'de> for $code {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                $code::parse(&s).ok_or_else(|| de::Error::custom(format!("unknown code {s:?}")))
            }
        }

        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
        pub struct $vec {
            $(pub $field: bool,)+
        }

        impl $vec {
            pub fn get(&self, code: $code) -> bool {
                match code {
                    $($code::$variant => self.$field,)+
                }
            }

            pub fn set(&mut self, code: $code, value: bool) {
                match code {
                    $($code::$variant => self.$field = value,)+
                }
            }

            /// Codes that are set, in canonical order.
            pub fn true_codes(&self) -> Vec<$code> {
                $code::ALL.iter().copied().filter(|c| self.get(*c)).collect()
            }

            pub fn from_codes<I: IntoIterator<Item = $code>>(codes: I) -> Self {
                let mut v = Self::default();
                for c in codes {
                    v.set(c, true);
                }
                v
            }

            pub fn any(&self) -> bool {
                $code::ALL.iter().any(|c| self.get(*c))
            }

            /// 0/1 cells in canonical order, for matrix export and encoding.
            pub fn to_bits(&self) -> [u8; $count] {
                let mut out = [0u8; $count];
                for (i, c) in $code::ALL.iter().enumerate() {
                    out[i] = self.get(*c) as u8;
                }
                out
            }

            pub fn from_bits(bits: &[u8]) -> Option<Self> {
                if bits.len() != $count {
                    return None;
                }
                let mut v = Self::default();
                for (i, c) in $code::ALL.iter().enumerate() {
                    v.set(*c, bits[i] != 0);
                }
                Some(v)
            }
        }

        impl fmt::Display for $vec {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{")?;
                for (i, c) in self.true_codes().into_iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "}}")
            }
        }

        // Stable encoding: the sorted list of true flag codes.
        impl Serialize for $vec {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                self.true_codes().serialize(serializer)
            }
        }

        impl<'de> Deserialize<'de> for $vec {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let codes: Vec<$code> = Vec::deserialize(deserializer)?;
                Ok($vec::from_codes(codes))
            }
        }
    };
}

flag_vector!(
    /// The 13 binary quantitative triggers: grade standings relative to the
    /// drop/late-drop/final anchors (G) and missing-report streaks (M).
    ///
    /// At most one of the `m1_*` tier flags is set in any week, and the
    /// G/M2 flags can only be set in their anchor weeks.
    QuantFeatures,
    QuantCode,
    13,
    [
        (G1_1, g1_1, "G1.1"),
        (G1_2, g1_2, "G1.2"),
        (G2_1, g2_1, "G2.1"),
        (G2_2, g2_2, "G2.2"),
        (G3_1, g3_1, "G3.1"),
        (G3_2, g3_2, "G3.2"),
        (G3_3, g3_3, "G3.3"),
        (M1_1, m1_1, "M1.1"),
        (M1_2, m1_2, "M1.2"),
        (M1_3, m1_3, "M1.3"),
        (M1_4, m1_4, "M1.4"),
        (M2_1, m2_1, "M2.1"),
        (M2_2, m2_2, "M2.2"),
    ]
);

flag_vector!(
    /// The 14 binary qualitative triggers extracted from journal text:
    /// academic (A), health (H), personal (P), and other (O) concerns.
    ///
    /// `h1_2` in week w implies an illness flag in week w-1; the extraction
    /// post-pass enforces that streak semantics.
    QualFeatures,
    QualCode,
    14,
    [
        (A1, a1, "A1"),
        (A2, a2, "A2"),
        (A3, a3, "A3"),
        (A4, a4, "A4"),
        (H1_1, h1_1, "H1.1"),
        (H1_2, h1_2, "H1.2"),
        (H2, h2, "H2"),
        (P1, p1, "P1"),
        (P2_1, p2_1, "P2.1"),
        (P2_2, p2_2, "P2.2"),
        (P3, p3, "P3"),
        (P4, p4, "P4"),
        (P5, p5, "P5"),
        (O, o, "O"),
    ]
);

impl QualCode {
    /// Category letter (A, H, P, or O) used by prompt-template validation.
    pub fn category(self) -> char {
        self.as_str().chars().next().unwrap()
    }
}

/// Any trigger code from either feature table; the rule table is keyed by
/// these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriggerCode {
    Quant(QuantCode),
    Qual(QualCode),
}

impl TriggerCode {
    pub const COUNT: usize = 27;

    pub fn all() -> impl Iterator<Item = TriggerCode> {
        QuantCode::ALL
            .iter()
            .map(|c| TriggerCode::Quant(*c))
            .chain(QualCode::ALL.iter().map(|c| TriggerCode::Qual(*c)))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TriggerCode::Quant(c) => c.as_str(),
            TriggerCode::Qual(c) => c.as_str(),
        }
    }

    pub fn parse(s: &str) -> Option<TriggerCode> {
        QuantCode::parse(s)
            .map(TriggerCode::Quant)
            .or_else(|| QualCode::parse(s).map(TriggerCode::Qual))
    }

    fn index(self) -> usize {
        match self {
            TriggerCode::Quant(c) => c as usize,
            TriggerCode::Qual(c) => QuantCode::ALL.len() + c as usize,
        }
    }

    pub fn is_missing_report(self) -> bool {
        matches!(
            self,
            TriggerCode::Quant(
                QuantCode::M1_1
                    | QuantCode::M1_2
                    | QuantCode::M1_3
                    | QuantCode::M1_4
                    | QuantCode::M2_1
                    | QuantCode::M2_2
            )
        )
    }
}

impl PartialOrd for TriggerCode {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TriggerCode {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Display for TriggerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TriggerCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TriggerCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        TriggerCode::parse(&s).ok_or_else(|| de::Error::custom(format!("unknown trigger code {s:?}")))
    }
}

/// Set of fired triggers for one week, used by rule-overlay guards.
pub fn fired_triggers(quant: &QuantFeatures, qual: &QualFeatures) -> Vec<TriggerCode> {
    quant
        .true_codes()
        .into_iter()
        .map(TriggerCode::Quant)
        .chain(qual.true_codes().into_iter().map(TriggerCode::Qual))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_parse_is_case_sensitive_and_exact() {
        assert_eq!(QuantCode::parse("G1.1"), Some(QuantCode::G1_1));
        assert_eq!(QuantCode::parse("g1.1"), None);
        assert_eq!(QualCode::parse("P2.1"), Some(QualCode::P2_1));
        assert_eq!(QualCode::parse("P2_1"), None);
        assert_eq!(TriggerCode::parse("O"), Some(TriggerCode::Qual(QualCode::O)));
    }

    #[test]
    fn trigger_order_is_quant_then_qual() {
        let all: Vec<TriggerCode> = TriggerCode::all().collect();
        assert_eq!(all.len(), TriggerCode::COUNT);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[0].as_str(), "G1.1");
        assert_eq!(all[26].as_str(), "O");
    }

    #[test]
    fn flag_vector_round_trips_as_sorted_code_list() {
        let mut q = QuantFeatures::default();
        q.set(QuantCode::M1_2, true);
        q.set(QuantCode::G1_1, true);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"["G1.1","M1.2"]"#);
        let back: QuantFeatures = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn bits_round_trip() {
        let v = QualFeatures::from_codes([QualCode::A2, QualCode::H1_1, QualCode::O]);
        let bits = v.to_bits();
        assert_eq!(bits.iter().map(|b| *b as u32).sum::<u32>(), 3);
        assert_eq!(QualFeatures::from_bits(&bits), Some(v));
    }
}
