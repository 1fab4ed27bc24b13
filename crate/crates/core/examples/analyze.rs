//! Minimal end-to-end use: transliterate, segment, report bigram entropy.

use telentropy::syllable::Word;
use telentropy::{syllable_ngram_entropy, to_roman, tokenize, MappingTable, WindowSpec};

fn main() -> Result<(), telentropy::Error> {
    let table = MappingTable::builtin();
    let roman = to_roman("పద్మవిభూషణ్ కార్యాలయం", table)?;
    let words: Vec<Word> = tokenize(&roman)
        .into_iter()
        .map(|w| Word::segment(w, table))
        .collect::<Result<_, _>>()?;
    let report = syllable_ngram_entropy::<f64>(&words, &WindowSpec::new(2), 2.0)?;
    println!(
        "H2 = {} bits over {} windows",
        report.entropy_bits, report.total_tokens
    );
    Ok(())
}
