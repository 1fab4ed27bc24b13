//! Telugu Unicode to case-sensitive roman text, and back.
//!
//! Encoding walks the input akshara by akshara: a consonant with a vowel
//! sign maps to consonant token + vowel token, a consonant with neither
//! sign nor virama takes the inherent "a", a virama inside a cluster is
//! silent, and a virama that ends its cluster becomes "^". ASCII input
//! passes through unchanged; any other unmapped codepoint is an error with
//! its byte offset.
//!
//! Decoding is the exact left inverse on encoder output: roman words are
//! scanned by longest match and rebuilt with viramas inserted between
//! clustered consonants. Sequences no encoder output can contain (a bare
//! consonant before a separator, a marker with nothing to attach to)
//! report [`Error::UndecodableSequence`] with a character offset.

use crate::error::Error;
use crate::lexer::{lex_word, TokenKind};
use crate::mapping::{Category, MappingEntry, MappingTable};

/// Transliterate NFC-normalized Telugu text to roman.
pub fn to_roman(text: &str, table: &MappingTable) -> Result<String, Error> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = String::with_capacity(text.len());
    // Consonant waiting for a vowel sign, a virama, or the inherent vowel.
    let mut pending: Option<&MappingEntry> = None;
    let mut pending_virama = false;
    // Whether the current word already holds something a marker can follow.
    let mut word_open = false;
    let mut i = 0;

    fn resolve(out: &mut String, pending: &mut Option<&MappingEntry>, virama: &mut bool) {
        if let Some(entry) = pending.take() {
            out.push_str(&entry.roman);
            out.push(if *virama { '^' } else { 'a' });
        }
        *virama = false;
    }

    while i < chars.len() {
        let (byte_off, c) = chars[i];
        let Some((consumed, entry)) = table.scan_telugu(&chars[i..]) else {
            if c.is_ascii() {
                resolve(&mut out, &mut pending, &mut pending_virama);
                out.push(c);
                word_open = false;
                i += 1;
                continue;
            }
            return Err(Error::UnmappedCodepoint {
                codepoint: c,
                byte_offset: byte_off,
            });
        };
        match entry.category {
            Category::Consonant => {
                if let Some(prev) = pending.take() {
                    out.push_str(&prev.roman);
                    if !pending_virama {
                        out.push('a');
                    }
                    // with a virama the consonants join into a cluster
                    pending_virama = false;
                }
                pending = Some(entry);
                word_open = true;
            }
            Category::VowelSign => {
                match pending.take() {
                    Some(prev) if !pending_virama => {
                        out.push_str(&prev.roman);
                        out.push_str(&entry.roman);
                    }
                    _ => {
                        return Err(Error::OrphanMarker {
                            marker: c,
                            offset: byte_off,
                        });
                    }
                }
                word_open = true;
            }
            Category::VowelIndependent => {
                resolve(&mut out, &mut pending, &mut pending_virama);
                out.push_str(&entry.roman);
                word_open = true;
            }
            Category::Anusvara | Category::Visarga => {
                resolve(&mut out, &mut pending, &mut pending_virama);
                if !word_open {
                    return Err(Error::OrphanMarker {
                        marker: c,
                        offset: byte_off,
                    });
                }
                out.push_str(&entry.roman);
            }
            Category::Virama => {
                if pending.is_some() && !pending_virama {
                    pending_virama = true;
                } else {
                    return Err(Error::OrphanMarker {
                        marker: c,
                        offset: byte_off,
                    });
                }
            }
        }
        i += consumed;
    }
    resolve(&mut out, &mut pending, &mut pending_virama);
    Ok(out)
}

/// Transliterate roman text back to Telugu. Exact inverse of [`to_roman`]
/// on its output.
pub fn to_telugu(text: &str, table: &MappingTable) -> Result<String, Error> {
    let mut out = String::with_capacity(text.len() * 2);
    let mut word = String::new();
    let mut word_start = 0;
    for (char_off, c) in text.chars().enumerate() {
        if c.is_ascii_alphabetic() || c == '^' {
            if word.is_empty() {
                word_start = char_off;
            }
            word.push(c);
        } else {
            if !word.is_empty() {
                decode_word(&word, word_start, table, &mut out)?;
                word.clear();
            }
            out.push(c);
        }
    }
    if !word.is_empty() {
        decode_word(&word, word_start, table, &mut out)?;
    }
    Ok(out)
}

fn decode_word(
    word: &str,
    base_offset: usize,
    table: &MappingTable,
    out: &mut String,
) -> Result<(), Error> {
    enum State {
        Start,
        Pending(usize),
        AfterAkshara,
    }

    let undecodable = |local: usize| Error::UndecodableSequence {
        char_offset: base_offset + local,
    };
    let tokens = lex_word(word, table).map_err(|e| match e {
        Error::UndecodableSequence { char_offset } => undecodable(char_offset),
        other => other,
    })?;

    let virama = table.virama_char();
    let mut state = State::Start;
    for tok in &tokens {
        let slot = table.roman_slot(tok.text).expect("lexed token is mapped");
        state = match (state, tok.kind) {
            (State::Pending(c), TokenKind::Vowel) => {
                out.push_str(&table.entry(c).telugu);
                if tok.text != "a" {
                    let sign = slot.vowel_sign.ok_or_else(|| undecodable(tok.offset))?;
                    out.push_str(&table.entry(sign).telugu);
                }
                State::AfterAkshara
            }
            (State::Pending(c), TokenKind::Consonant) => {
                out.push_str(&table.entry(c).telugu);
                out.push(virama.ok_or_else(|| undecodable(tok.offset))?);
                State::Pending(slot.consonant.expect("consonant kind"))
            }
            (State::Pending(c), TokenKind::Caret) => {
                out.push_str(&table.entry(c).telugu);
                out.push(virama.ok_or_else(|| undecodable(tok.offset))?);
                State::AfterAkshara
            }
            (State::Start | State::AfterAkshara, TokenKind::Consonant) => {
                State::Pending(slot.consonant.expect("consonant kind"))
            }
            (State::Start | State::AfterAkshara, TokenKind::Vowel) => {
                let indep = slot
                    .vowel_independent
                    .ok_or_else(|| undecodable(tok.offset))?;
                out.push_str(&table.entry(indep).telugu);
                State::AfterAkshara
            }
            (State::AfterAkshara, TokenKind::Anusvara) => {
                out.push_str(&table.entry(slot.anusvara.expect("anusvara kind")).telugu);
                State::AfterAkshara
            }
            (State::AfterAkshara, TokenKind::Visarga) => {
                out.push_str(&table.entry(slot.visarga.expect("visarga kind")).telugu);
                State::AfterAkshara
            }
            (_, _) => return Err(undecodable(tok.offset)),
        };
    }
    if let State::Pending(_) = state {
        // a bare consonant with no vowel and no "^" cannot come from the
        // encoder
        return Err(undecodable(word.chars().count()));
    }
    Ok(())
}
