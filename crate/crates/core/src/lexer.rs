//! Longest-match scanner for roman word fragments.
//!
//! Words are ASCII by construction, so byte offsets equal character
//! offsets within a word.

use crate::error::Error;
use crate::mapping::MappingTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Consonant,
    Vowel,
    Anusvara,
    Visarga,
    Caret,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct RomanToken<'a> {
    pub text: &'a str,
    pub kind: TokenKind,
    /// Character offset within the word.
    pub offset: usize,
}

/// Scan a whitespace-free word into roman tokens, longest match first.
pub(crate) fn lex_word<'a>(
    word: &'a str,
    table: &MappingTable,
) -> Result<Vec<RomanToken<'a>>, Error> {
    let mut tokens = Vec::new();
    let bytes = word.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if !bytes[i].is_ascii() {
            return Err(Error::UndecodableSequence { char_offset: i });
        }
        let mut matched = None;
        let max = table.max_roman_len().min(bytes.len() - i);
        for len in (1..=max).rev() {
            let cand = &word[i..i + len];
            if let Some(slot) = table.roman_slot(cand) {
                let kind = if slot.consonant.is_some() {
                    TokenKind::Consonant
                } else if slot.vowel_independent.is_some() || slot.vowel_sign.is_some() {
                    TokenKind::Vowel
                } else if slot.anusvara.is_some() {
                    TokenKind::Anusvara
                } else if slot.visarga.is_some() {
                    TokenKind::Visarga
                } else {
                    TokenKind::Caret
                };
                matched = Some(RomanToken {
                    text: cand,
                    kind,
                    offset: i,
                });
                break;
            }
        }
        match matched {
            Some(tok) => {
                i += tok.text.len();
                tokens.push(tok);
            }
            None => return Err(Error::UndecodableSequence { char_offset: i }),
        }
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_match_wins() {
        let table = MappingTable::builtin();
        let toks = lex_word("Sha", table).unwrap();
        assert_eq!(toks.len(), 2);
        assert_eq!(toks[0].text, "Sh");
        assert_eq!(toks[0].kind, TokenKind::Consonant);
        assert_eq!(toks[1].text, "a");
        assert_eq!(toks[1].kind, TokenKind::Vowel);
    }

    #[test]
    fn diphthong_beats_single_vowel() {
        let table = MappingTable::builtin();
        let toks = lex_word("mai", table).unwrap();
        let texts: Vec<&str> = toks.iter().map(|t| t.text).collect();
        assert_eq!(texts, vec!["m", "ai"]);
    }

    #[test]
    fn unknown_letter_reports_offset() {
        let table = MappingTable::builtin();
        match lex_word("kaf", table) {
            Err(Error::UndecodableSequence { char_offset }) => assert_eq!(char_offset, 2),
            other => panic!("expected UndecodableSequence, got {other:?}"),
        }
    }
}
