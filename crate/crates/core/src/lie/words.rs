//! Lyndon words over an indexed alphabet and their bracket expansions.
//!
//! Words are sequences of generator indices compared lexicographically; a
//! word is Lyndon when it is strictly smaller than every proper suffix.
//! Bracketing each Lyndon word by its standard factorization yields a basis
//! of the free Lie algebra. The associative expansion of a bracketed word
//! is triangular: the word itself plus lexicographically larger terms, so
//! coordinates of a Lie element are recovered by greedy subtraction from
//! its least word.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

pub type Letter = u16;
pub type Word = Vec<Letter>;

/// Noncommutative polynomial in the free associative algebra: words mapped
/// to nonzero coefficients.
pub type Assoc = BTreeMap<Word, BigRational>;

pub fn is_lyndon(w: &[Letter]) -> bool {
    !w.is_empty() && (1..w.len()).all(|k| w < &w[k..])
}

/// The index where a Lyndon word of length >= 2 splits as `u v` with `v`
/// its longest proper Lyndon suffix; `[b(u), b(v)]` is its bracketing.
pub fn standard_split(w: &[Letter]) -> usize {
    assert!(w.len() >= 2, "standard_split: word too short");
    (1..w.len()).find(|&k| is_lyndon(&w[k..])).expect("a single letter is Lyndon")
}

/// All Lyndon words containing letter `i` exactly `counts[i]` times, in
/// lexicographic order.
pub fn lyndon_words_with_content(counts: &[u32]) -> Vec<Word> {
    let len: u32 = counts.iter().sum();
    let mut remaining = counts.to_vec();
    let mut prefix = Word::with_capacity(len as usize);
    let mut out = Vec::new();
    fill_words(&mut remaining, &mut prefix, len as usize, &mut out);
    out
}

fn fill_words(remaining: &mut [u32], prefix: &mut Word, len: usize, out: &mut Vec<Word>) {
    if prefix.len() == len {
        if is_lyndon(prefix) {
            out.push(prefix.clone());
        }
        return;
    }
    for i in 0..remaining.len() {
        if remaining[i] > 0 {
            remaining[i] -= 1;
            prefix.push(i as Letter);
            fill_words(remaining, prefix, len, out);
            prefix.pop();
            remaining[i] += 1;
        }
    }
}

/// Associative expansion of the bracketing of a Lyndon word.
pub fn expand_lyndon(w: &[Letter]) -> Assoc {
    debug_assert!(is_lyndon(w), "expand_lyndon: not a Lyndon word");
    if w.len() == 1 {
        let mut p = Assoc::new();
        p.insert(w.to_vec(), BigRational::one());
        return p;
    }
    let k = standard_split(w);
    commutator(&expand_lyndon(&w[..k]), &expand_lyndon(&w[k..]))
}

pub fn assoc_mul(a: &Assoc, b: &Assoc) -> Assoc {
    let mut out = Assoc::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            add_term(&mut out, w, ca * cb);
        }
    }
    out
}

pub fn commutator(a: &Assoc, b: &Assoc) -> Assoc {
    let mut out = assoc_mul(a, b);
    for (w, c) in assoc_mul(b, a) {
        add_term(&mut out, w, -c);
    }
    out
}

/// `target += c * src`, dropping entries that cancel to zero.
pub fn assoc_add_scaled(target: &mut Assoc, src: &Assoc, c: &BigRational) {
    if c.is_zero() {
        return;
    }
    for (w, x) in src {
        add_term(target, w.clone(), c * x);
    }
}

fn add_term(p: &mut Assoc, w: Word, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match p.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Coordinates of an associative polynomial in the Lyndon basis, or `None`
/// when it does not lie in the free Lie algebra. Consumes the input by
/// repeatedly stripping the expansion of its least word, which must always
/// be Lyndon for a Lie element.
pub fn lie_coordinates(mut p: Assoc) -> Option<BTreeMap<Word, BigRational>> {
    let mut out = BTreeMap::new();
    while let Some((w, c)) = p.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        if !is_lyndon(&w) {
            return None;
        }
        let neg = -&c;
        assoc_add_scaled(&mut p, &expand_lyndon(&w), &neg);
        out.insert(w, c);
    }
    Some(out)
}
