//! Deterministic synthetic Telugu text.
//!
//! The generators here back the bundled sample corpus and the statistical
//! calibration tests. Words are assembled akshara by akshara from the
//! standard letter inventory with a seeded [`SplitMix64`], so the same
//! seed always yields the same text.
//!
//! Two sequences are avoided on purpose because the roman scheme cannot
//! represent them distinctly: a cluster whose second consonant is హ (the
//! roman would merge into an aspirate digraph) and an independent vowel
//! anywhere but word-initially (hiatus after an inherent vowel would
//! re-scan as a diphthong).

use crate::jumble::SplitMix64;
use crate::mapping::MappingTable;
use crate::syllable::Word;

/// Seed of the bundled sample corpus.
pub const SAMPLE_SEED: u64 = 0x7e1f;
/// Number of generated words in the bundled sample corpus.
pub const SAMPLE_WORDS: usize = 2600;

const WORD_LENGTHS: &[(usize, u32)] = &[(1, 8), (2, 28), (3, 34), (4, 18), (5, 8), (6, 3), (7, 1)];

const CONSONANTS: &[(char, u32)] = &[
    ('క', 70),
    ('ఖ', 4),
    ('గ', 40),
    ('ఘ', 3),
    ('ఙ', 1),
    ('చ', 35),
    ('ఛ', 2),
    ('జ', 25),
    ('ఝ', 1),
    ('ఞ', 1),
    ('ట', 30),
    ('ఠ', 2),
    ('డ', 30),
    ('ఢ', 2),
    ('ణ', 15),
    ('త', 65),
    ('థ', 4),
    ('ద', 55),
    ('ధ', 10),
    ('న', 80),
    ('ప', 55),
    ('ఫ', 3),
    ('బ', 25),
    ('భ', 12),
    ('మ', 65),
    ('య', 45),
    ('ర', 75),
    ('ఱ', 1),
    ('ల', 60),
    ('ళ', 10),
    ('వ', 55),
    ('శ', 15),
    ('ష', 12),
    ('స', 50),
    ('హ', 20),
];

// second members of conjuncts; హ is deliberately absent
const CLUSTER_SECOND: &[(char, u32)] = &[
    ('ర', 30),
    ('య', 25),
    ('ల', 15),
    ('వ', 12),
    ('మ', 8),
    ('న', 8),
    ('త', 6),
    ('ద', 5),
    ('క', 5),
    ('ట', 4),
    ('డ', 4),
    ('ప', 4),
    ('స', 4),
    ('గ', 3),
    ('బ', 3),
    ('చ', 2),
    ('జ', 2),
    ('ణ', 2),
    ('థ', 2),
    ('ధ', 2),
    ('ష', 2),
    ('శ', 1),
    ('ళ', 1),
    ('ఖ', 1),
    ('భ', 1),
];

// None is the inherent vowel
const VOWEL_SIGNS: &[(Option<char>, u32)] = &[
    (None, 45),
    (Some('ా'), 10),
    (Some('ి'), 12),
    (Some('ీ'), 4),
    (Some('ు'), 12),
    (Some('ూ'), 3),
    (Some('ృ'), 1),
    (Some('ౄ'), 1),
    (Some('ె'), 4),
    (Some('ే'), 4),
    (Some('ై'), 2),
    (Some('ొ'), 2),
    (Some('ో'), 3),
    (Some('ౌ'), 1),
];

const INDEPENDENT_VOWELS: &[(char, u32)] = &[
    ('అ', 20),
    ('ఆ', 12),
    ('ఇ', 10),
    ('ఈ', 4),
    ('ఉ', 8),
    ('ఊ', 2),
    ('ఋ', 1),
    ('ఎ', 6),
    ('ఏ', 4),
    ('ఐ', 2),
    ('ఒ', 3),
    ('ఓ', 2),
    ('ఔ', 1),
];

const FINAL_BARE: &[(char, u32)] = &[
    ('ణ', 3),
    ('న', 4),
    ('ర', 3),
    ('ల', 2),
    ('మ', 2),
    ('ట', 1),
    ('డ', 1),
    ('త', 1),
    ('ప', 1),
    ('క', 1),
    ('స', 1),
];

const VIRAMA: char = '్';
const ANUSVARA: char = 'ం';
const VISARGA: char = 'ః';

fn pick<'a, T>(rng: &mut SplitMix64, items: &'a [(T, u32)]) -> &'a T {
    let total: u32 = items.iter().map(|(_, w)| w).sum();
    let mut roll = rng.next_below(total as u64) as u32;
    for (item, w) in items {
        if roll < *w {
            return item;
        }
        roll -= w;
    }
    &items[items.len() - 1].0
}

fn push_onset(word: &mut String, rng: &mut SplitMix64, allow_cluster: bool) {
    let first = *pick(rng, CONSONANTS);
    word.push(first);
    if allow_cluster && rng.next_below(100) < 16 {
        word.push(VIRAMA);
        let roll = rng.next_below(100);
        if roll < 40 {
            // geminate
            word.push(first);
        } else if roll < 97 {
            word.push(*pick(rng, CLUSTER_SECOND));
        } else {
            // a three-consonant cluster ending in ra
            word.push(*pick(rng, CLUSTER_SECOND));
            word.push(VIRAMA);
            word.push('ర');
        }
    }
}

fn push_coda(word: &mut String, rng: &mut SplitMix64) {
    let roll = rng.next_below(100);
    if roll < 8 {
        word.push(ANUSVARA);
    } else if roll < 9 {
        word.push(VISARGA);
    }
}

/// Generate one Telugu word of `length` aksharas.
fn telugu_word(rng: &mut SplitMix64, length: usize) -> String {
    let mut word = String::new();
    let bare_final = length >= 2 && rng.next_below(100) < 6;
    let body = if bare_final { length - 1 } else { length };
    for i in 0..body {
        if i == 0 && rng.next_below(100) < 12 {
            word.push(*pick(rng, INDEPENDENT_VOWELS));
        } else {
            let cluster_ok = if i == 0 {
                rng.next_below(100) < 10
            } else {
                true
            };
            push_onset(&mut word, rng, cluster_ok);
            if let Some(sign) = pick(rng, VOWEL_SIGNS) {
                word.push(*sign);
            }
        }
        push_coda(&mut word, rng);
    }
    if bare_final {
        word.push(*pick(rng, FINAL_BARE));
        word.push(VIRAMA);
    }
    word
}

/// Deterministic list of synthetic Telugu words.
pub fn telugu_words(seed: u64, count: usize) -> Vec<String> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let length = *pick(&mut rng, WORD_LENGTHS);
            telugu_word(&mut rng, length)
        })
        .collect()
}

/// The bundled sample corpus: a handful of everyday words up front,
/// then [`SAMPLE_WORDS`] generated ones, ten per line.
pub fn sample_corpus() -> String {
    let mut out = String::new();
    out.push_str("కార్యాలయం ప్రతిపాదించినట్లు పద్మవిభూషణ్ వయస్సు సాధ్యమైనంత\n");
    let words = telugu_words(SAMPLE_SEED, SAMPLE_WORDS);
    for chunk in words.chunks(10) {
        out.push_str(&chunk.join(" "));
        out.push('\n');
    }
    out
}

/// Roman words whose syllables are drawn i.i.d. from `symbols` with the
/// given cumulative weights, grouped eight syllables per word, segmented
/// through the standard pipeline.
pub fn iid_syllable_words(
    seed: u64,
    total_syllables: usize,
    symbols: &[&str],
    probs: &[f64],
) -> Vec<Word> {
    assert_eq!(symbols.len(), probs.len());
    let table = MappingTable::builtin();
    let mut rng = SplitMix64::new(seed);
    let mut words = Vec::with_capacity(total_syllables / 8 + 1);
    let mut surface = String::new();
    let mut in_word = 0;
    for _ in 0..total_syllables {
        let roll = rng.next_f64();
        let mut acc = 0.0;
        let mut chosen = symbols[symbols.len() - 1];
        for (sym, p) in symbols.iter().zip(probs.iter()) {
            acc += p;
            if roll < acc {
                chosen = sym;
                break;
            }
        }
        surface.push_str(chosen);
        in_word += 1;
        if in_word == 8 {
            words.push(Word::segment(&surface, table).expect("synthetic word segments"));
            surface.clear();
            in_word = 0;
        }
    }
    if !surface.is_empty() {
        words.push(Word::segment(&surface, table).expect("synthetic word segments"));
    }
    words
}
