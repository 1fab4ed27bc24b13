//! The Telugu-to-roman mapping table.
//!
//! A [`MappingTable`] is an ordered list of `(telugu_unit, roman_token,
//! category)` entries loaded from a TSV file (or the built-in table in
//! `data/telugu_roman.tsv`). The roman tokens form a case-sensitive
//! alphabet scanned by longest match; validation rejects any table whose
//! tokens would decode ambiguously under that grammar.
//!
//! Sharing a token between a `VOWEL_INDEPENDENT` and a `VOWEL_SIGN` entry
//! is legal (the decode grammar distinguishes them by position). Any other
//! sharing is a [`Error::DuplicateToken`].

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::Error;

const BUILTIN_TSV: &str = include_str!("../data/telugu_roman.tsv");

/// Entry kinds, mirroring the TSV category column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Category {
    VowelIndependent,
    VowelSign,
    Consonant,
    Anusvara,
    Visarga,
    Virama,
}

impl Category {
    fn parse(s: &str) -> Option<Category> {
        match s {
            "VOWEL_INDEPENDENT" => Some(Category::VowelIndependent),
            "VOWEL_SIGN" => Some(Category::VowelSign),
            "CONSONANT" => Some(Category::Consonant),
            "ANUSVARA" => Some(Category::Anusvara),
            "VISARGA" => Some(Category::Visarga),
            "VIRAMA" => Some(Category::Virama),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Category::VowelIndependent => "VOWEL_INDEPENDENT",
            Category::VowelSign => "VOWEL_SIGN",
            Category::Consonant => "CONSONANT",
            Category::Anusvara => "ANUSVARA",
            Category::Visarga => "VISARGA",
            Category::Virama => "VIRAMA",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One mapping row: a Telugu unit of one or two codepoints and its roman
/// token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingEntry {
    pub telugu: String,
    pub roman: String,
    pub category: Category,
}

/// Decode-side slot for one roman token: which entries it may resolve to,
/// by grammar position.
#[derive(Debug, Clone, Default)]
pub(crate) struct RomanSlot {
    pub consonant: Option<usize>,
    pub vowel_independent: Option<usize>,
    pub vowel_sign: Option<usize>,
    pub anusvara: Option<usize>,
    pub visarga: Option<usize>,
    pub virama: Option<usize>,
}

impl RomanSlot {
    fn is_vowel(&self) -> bool {
        self.vowel_independent.is_some() || self.vowel_sign.is_some()
    }
}

/// Validated, immutable transliteration table. Safe to share across
/// threads; all lookups are read-only.
#[derive(Debug, Clone)]
pub struct MappingTable {
    entries: Vec<MappingEntry>,
    telugu_index: HashMap<(char, Option<char>), usize>,
    roman_index: HashMap<String, RomanSlot>,
    max_roman_len: usize,
    max_telugu_len: usize,
}

impl MappingTable {
    /// Parse and validate a table from TSV text.
    pub fn from_tsv_str(src: &str) -> Result<MappingTable, Error> {
        let mut entries = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in src.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(Error::MalformedRow {
                    reason: format!("expected 3 tab-separated fields, found {}", fields.len()),
                    line: line_no,
                });
            }
            let telugu = fields[0];
            let roman = fields[1];
            let unit_len = telugu.chars().count();
            if !(1..=2).contains(&unit_len) {
                return Err(Error::MalformedRow {
                    reason: format!("telugu unit must be 1 or 2 codepoints, found {unit_len}"),
                    line: line_no,
                });
            }
            let category = Category::parse(fields[2]).ok_or_else(|| Error::BadCategory {
                value: fields[2].to_string(),
                line: line_no,
            })?;
            let token_ok = match category {
                Category::Virama => roman == "^",
                _ => {
                    (1..=3).contains(&roman.len()) && roman.bytes().all(|b| b.is_ascii_alphabetic())
                }
            };
            if !token_ok {
                return Err(Error::MalformedRow {
                    reason: format!(
                        "roman token {roman:?} invalid for category {category} \
                         (1-3 ASCII letters, or \"^\" for VIRAMA)"
                    ),
                    line: line_no,
                });
            }
            entries.push(MappingEntry {
                telugu: telugu.to_string(),
                roman: roman.to_string(),
                category,
            });
            lines.push(line_no);
        }
        MappingTable::build(entries, &lines)
    }

    /// Load a table from a TSV file.
    pub fn from_tsv_path(path: impl AsRef<Path>) -> Result<MappingTable, Error> {
        let path = path.as_ref();
        let src =
            std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        MappingTable::from_tsv_str(&src).map_err(|e| Error::in_file(path.display().to_string(), e))
    }

    /// The built-in Telugu table.
    pub fn builtin() -> &'static MappingTable {
        static TABLE: OnceLock<MappingTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            MappingTable::from_tsv_str(BUILTIN_TSV).expect("built-in table is valid")
        })
    }

    fn build(entries: Vec<MappingEntry>, lines: &[usize]) -> Result<MappingTable, Error> {
        let mut telugu_index = HashMap::new();
        let mut roman_index: HashMap<String, RomanSlot> = HashMap::new();
        let mut max_roman_len = 0;
        let mut max_telugu_len = 0;

        for (idx, entry) in entries.iter().enumerate() {
            let line = lines.get(idx).copied().unwrap_or(0);
            let mut chars = entry.telugu.chars();
            let unit = (chars.next().expect("validated non-empty"), chars.next());
            if telugu_index.insert(unit, idx).is_some() {
                return Err(Error::MalformedRow {
                    reason: format!("duplicate telugu unit {:?}", entry.telugu),
                    line,
                });
            }
            max_telugu_len = max_telugu_len.max(entry.telugu.chars().count());
            max_roman_len = max_roman_len.max(entry.roman.len());

            // The inherent vowel "a" never takes a sign; a sign spelled "a"
            // could never be decoded.
            if entry.category == Category::VowelSign && entry.roman == "a" {
                return Err(Error::DuplicateToken {
                    token: entry.roman.clone(),
                    line,
                });
            }

            let slot = roman_index.entry(entry.roman.clone()).or_default();
            let field = match entry.category {
                Category::Consonant => &mut slot.consonant,
                Category::VowelIndependent => &mut slot.vowel_independent,
                Category::VowelSign => &mut slot.vowel_sign,
                Category::Anusvara => &mut slot.anusvara,
                Category::Visarga => &mut slot.visarga,
                Category::Virama => &mut slot.virama,
            };
            if field.is_some() {
                return Err(Error::DuplicateToken {
                    token: entry.roman.clone(),
                    line,
                });
            }
            *field = Some(idx);

            // Cross-class sharing: only independent vowel + vowel sign may
            // coexist on one token.
            let s = &roman_index[&entry.roman];
            let classes = [
                s.consonant.is_some(),
                s.is_vowel(),
                s.anusvara.is_some(),
                s.visarga.is_some(),
                s.virama.is_some(),
            ];
            if classes.iter().filter(|&&c| c).count() > 1 {
                return Err(Error::DuplicateToken {
                    token: entry.roman.clone(),
                    line,
                });
            }
        }

        Ok(MappingTable {
            entries,
            telugu_index,
            roman_index,
            max_roman_len,
            max_telugu_len,
        })
    }

    pub fn entries(&self) -> &[MappingEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn entry(&self, idx: usize) -> &MappingEntry {
        &self.entries[idx]
    }

    pub(crate) fn max_roman_len(&self) -> usize {
        self.max_roman_len
    }

    /// Longest match against the table's Telugu units, starting at
    /// `chars[0]`. Returns the number of codepoints consumed.
    pub(crate) fn scan_telugu(&self, chars: &[(usize, char)]) -> Option<(usize, &MappingEntry)> {
        if chars.is_empty() {
            return None;
        }
        if self.max_telugu_len >= 2 && chars.len() >= 2 {
            let key = (chars[0].1, Some(chars[1].1));
            if let Some(&idx) = self.telugu_index.get(&key) {
                return Some((2, &self.entries[idx]));
            }
        }
        let key = (chars[0].1, None);
        self.telugu_index
            .get(&key)
            .map(|&idx| (1, &self.entries[idx]))
    }

    pub(crate) fn roman_slot(&self, token: &str) -> Option<&RomanSlot> {
        self.roman_index.get(token)
    }

    /// The virama codepoint, if the table defines one.
    pub(crate) fn virama_char(&self) -> Option<char> {
        self.entries
            .iter()
            .find(|e| e.category == Category::Virama)
            .and_then(|e| e.telugu.chars().next())
    }
}

/// Load a mapping table from an optional TSV path, falling back to the
/// built-in Telugu table.
pub fn load_mapping(source: Option<&Path>) -> Result<MappingTable, Error> {
    match source {
        Some(path) => MappingTable::from_tsv_path(path),
        None => Ok(MappingTable::builtin().clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads_and_has_ka() {
        let table = MappingTable::builtin();
        assert!(table
            .entries()
            .iter()
            .any(|e| e.telugu == "క" && e.roman == "k" && e.category == Category::Consonant));
        assert!(table.virama_char().is_some());
    }

    #[test]
    fn load_mapping_defaults_to_builtin() {
        let table = load_mapping(None).unwrap();
        assert_eq!(table.len(), MappingTable::builtin().len());
    }

    #[test]
    fn duplicate_vowel_token_rejected() {
        let tsv = "అ\ta\tVOWEL_INDEPENDENT\nా\tA\tVOWEL_SIGN\nి\tA\tVOWEL_SIGN\n";
        match MappingTable::from_tsv_str(tsv) {
            Err(Error::DuplicateToken { token, line }) => {
                assert_eq!(token, "A");
                assert_eq!(line, 3);
            }
            other => panic!("expected DuplicateToken, got {other:?}"),
        }
    }

    #[test]
    fn consonant_vowel_collision_rejected() {
        let tsv = "క\tk\tCONSONANT\nఅ\tk\tVOWEL_INDEPENDENT\n";
        assert!(matches!(
            MappingTable::from_tsv_str(tsv),
            Err(Error::DuplicateToken { .. })
        ));
    }

    #[test]
    fn bad_category_rejected() {
        let tsv = "క\tk\tGLYPH\n";
        match MappingTable::from_tsv_str(tsv) {
            Err(Error::BadCategory { value, .. }) => assert_eq!(value, "GLYPH"),
            other => panic!("expected BadCategory, got {other:?}"),
        }
    }

    #[test]
    fn malformed_row_rejected() {
        assert!(matches!(
            MappingTable::from_tsv_str("క\tk\n"),
            Err(Error::MalformedRow { .. })
        ));
        // four-char roman token
        assert!(matches!(
            MappingTable::from_tsv_str("క\tkkkk\tCONSONANT\n"),
            Err(Error::MalformedRow { .. })
        ));
        // duplicate telugu unit
        assert!(matches!(
            MappingTable::from_tsv_str("క\tk\tCONSONANT\nక\tg\tCONSONANT\n"),
            Err(Error::MalformedRow { .. })
        ));
        // non-ascii roman token
        assert!(matches!(
            MappingTable::from_tsv_str("క\tk²\tCONSONANT\n"),
            Err(Error::MalformedRow { .. })
        ));
    }

    #[test]
    fn vowel_sign_spelled_a_rejected() {
        let tsv = "ా\ta\tVOWEL_SIGN\n";
        assert!(matches!(
            MappingTable::from_tsv_str(tsv),
            Err(Error::DuplicateToken { .. })
        ));
    }

    #[test]
    fn independent_and_sign_may_share_token() {
        let tsv = "ఆ\tA\tVOWEL_INDEPENDENT\nా\tA\tVOWEL_SIGN\n";
        let table = MappingTable::from_tsv_str(tsv).unwrap();
        let slot = table.roman_slot("A").unwrap();
        assert!(slot.vowel_independent.is_some());
        assert!(slot.vowel_sign.is_some());
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let tsv = "# comment\n\nక\tk\tCONSONANT\n";
        let table = MappingTable::from_tsv_str(tsv).unwrap();
        assert_eq!(table.len(), 1);
    }
}
