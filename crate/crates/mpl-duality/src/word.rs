//! Noncommutative words and polynomials over the letters `e0, e1, ez`.
//!
//! Two alphabets are in play. The input alphabet is `{e0, e1, ez}`. The
//! basis alphabet is `{x, y0, y1}` with
//!
//! ```text
//! x = e0,    y0 = -ez,    y1 = ez - e1,
//! ```
//!
//! so that `e0 = x`, `ez = -y0`, `e1 = -y0 - y1`. Words of the shape
//! `y_{mu_1} x^{k_1-1} ... y_{mu_r} x^{k_r-1}` are in bijection with
//! augmented indices, and the admissible ones form a basis of the subspace
//! `A0 = Q + Q ez + e1 A e0 + e1 A ez + ez A e0 + ez A ez`.
//!
//! The anti-automorphism `tau` is determined by
//! `tau(e0) = ez - e1`, `tau(e1) = ez - e0`, `tau(ez) = ez`; on basis
//! letters it acts letterwise as `x <-> y1`, `y0 -> y0` combined with word
//! reversal. Duals of augmented indices are computed through this
//! letterwise rule.

use crate::error::{Error, Result};
use crate::index::{AugmentedIndex, Component};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Q = BigRational;

/// Letter of the input alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InputLetter {
    E0,
    E1,
    Ez,
}

/// Letter of the basis alphabet, ordered `X < Y0 < Y1` for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLetter {
    X,
    Y0,
    Y1,
}

/// Word over the input alphabet, e.g. `100` for `e1 e0 e0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct InputWord(pub Vec<InputLetter>);

/// Word over the basis alphabet, rendered as space-separated `x y0 y1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BasisWord(pub Vec<BasisLetter>);

impl InputWord {
    pub fn empty() -> Self {
        InputWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parse a string over the characters `0`, `1`, `z`; the empty word is
    /// written `empty`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "empty" {
            return Ok(InputWord::empty());
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            letters.push(match c {
                '0' => InputLetter::E0,
                '1' => InputLetter::E1,
                'z' => InputLetter::Ez,
                other => return Err(Error::Parse(format!("bad input letter `{other}`"))),
            });
        }
        Ok(InputWord(letters))
    }
}

impl fmt::Display for InputWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "empty");
        }
        for l in &self.0 {
            let c = match l {
                InputLetter::E0 => '0',
                InputLetter::E1 => '1',
                InputLetter::Ez => 'z',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl BasisWord {
    pub fn empty() -> Self {
        BasisWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parse space-separated `x`, `y0`, `y1` tokens; `1` is the empty word.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(BasisWord::empty());
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            letters.push(match tok {
                "x" => BasisLetter::X,
                "y0" => BasisLetter::Y0,
                "y1" => BasisLetter::Y1,
                other => return Err(Error::Parse(format!("bad basis letter `{other}`"))),
            });
        }
        Ok(BasisWord(letters))
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let toks: Vec<&str> = self
            .0
            .iter()
            .map(|l| match l {
                BasisLetter::X => "x",
                BasisLetter::Y0 => "y0",
                BasisLetter::Y1 => "y1",
            })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// Finite rational linear combination of words over a fixed alphabet.
///
/// Zero coefficients are never stored; multiplication is concatenation
/// extended bilinearly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly<W: Ord + Clone>(BTreeMap<W, Q>);

pub type InputPoly = Poly<InputWord>;
pub type BasisPoly = Poly<BasisWord>;

impl<W: Ord + Clone> Poly<W> {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn from_word(w: W) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w, Q::one());
        Poly(m)
    }

    pub fn from_term(w: W, c: Q) -> Self {
        let mut p = Poly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&W, &Q)> {
        self.0.iter()
    }

    pub fn coefficient(&self, w: &W) -> Q {
        self.0.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: W, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&w) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.0.remove(&w);
                }
            }
            None => {
                self.0.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly(self.0.iter().map(|(w, c)| (w.clone(), -c.clone())).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|(w, k)| (w.clone(), k * c)).collect())
    }
}

macro_rules! impl_word_poly_ops {
    ($word:ty) => {
        impl Poly<$word> {
            /// Multiplicative unit: the empty word with coefficient 1.
            pub fn one() -> Self {
                Poly::from_word(<$word>::default())
            }

            /// Noncommutative product (word concatenation, bilinear).
            pub fn mul(&self, other: &Self) -> Self {
                let mut out = Poly::zero();
                for (u, a) in self.terms() {
                    for (v, b) in other.terms() {
                        let mut w = u.clone();
                        w.0.extend_from_slice(&v.0);
                        out.add_term(w, a * b);
                    }
                }
                out
            }
        }
    };
}

impl_word_poly_ops!(InputWord);
impl_word_poly_ops!(BasisWord);

fn fmt_poly<W: Ord + Clone + fmt::Display>(p: &Poly<W>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (w, c) in p.terms() {
        let (sign, mag) = if c.is_negative() {
            ("-", -c.clone())
        } else {
            ("+", c.clone())
        };
        if first {
            if sign == "-" {
                write!(f, "-")?;
            }
            first = false;
        } else {
            write!(f, " {sign} ")?;
        }
        if mag.is_one() {
            write!(f, "{w}")?;
        } else {
            write!(f, "{mag}*{w}")?;
        }
    }
    Ok(())
}

impl fmt::Display for InputPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

impl fmt::Display for BasisPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self, f)
    }
}

/// `w(k)`: the basis word `y_{mu_1} x^{k_1-1} ... y_{mu_r} x^{k_r-1}`.
pub fn word_of_index(idx: &AugmentedIndex) -> BasisWord {
    let mut letters = Vec::with_capacity(idx.weight() as usize);
    for c in &idx.0 {
        letters.push(if c.mu == 0 { BasisLetter::Y0 } else { BasisLetter::Y1 });
        for _ in 1..c.k {
            letters.push(BasisLetter::X);
        }
    }
    BasisWord(letters)
}

/// Inverse of [`word_of_index`]: greedy block parse of a basis word.
///
/// Fails when the word starts with `x`.
pub fn index_of_word(w: &BasisWord) -> Result<AugmentedIndex> {
    let mut comps: Vec<Component> = Vec::new();
    for &l in &w.0 {
        match l {
            BasisLetter::X => match comps.last_mut() {
                Some(c) => c.k += 1,
                None => return Err(Error::NotParseable(w.to_string())),
            },
            BasisLetter::Y0 => comps.push(Component::new(1, 0)),
            BasisLetter::Y1 => comps.push(Component::new(1, 1)),
        }
    }
    Ok(AugmentedIndex(comps))
}

/// `tau` on a single input letter, as a polynomial.
pub fn tau_letter(l: InputLetter) -> InputPoly {
    let mut p = InputPoly::zero();
    match l {
        InputLetter::E0 => {
            p.add_term(InputWord(vec![InputLetter::Ez]), Q::one());
            p.add_term(InputWord(vec![InputLetter::E1]), -Q::one());
        }
        InputLetter::E1 => {
            p.add_term(InputWord(vec![InputLetter::Ez]), Q::one());
            p.add_term(InputWord(vec![InputLetter::E0]), -Q::one());
        }
        InputLetter::Ez => {
            p.add_term(InputWord(vec![InputLetter::Ez]), Q::one());
        }
    }
    p
}

/// The anti-automorphism `tau` on input polynomials: reverses each word
/// and substitutes the letter images.
pub fn tau_input(p: &InputPoly) -> InputPoly {
    let mut out = InputPoly::zero();
    for (w, c) in p.terms() {
        let mut prod = InputPoly::one();
        for &l in w.0.iter().rev() {
            prod = prod.mul(&tau_letter(l));
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// `tau` on a basis word: reverse and swap `x <-> y1`, fixing `y0`.
pub fn tau_basis_word(w: &BasisWord) -> BasisWord {
    BasisWord(
        w.0.iter()
            .rev()
            .map(|l| match l {
                BasisLetter::X => BasisLetter::Y1,
                BasisLetter::Y1 => BasisLetter::X,
                BasisLetter::Y0 => BasisLetter::Y0,
            })
            .collect(),
    )
}

/// `tau` on basis polynomials (letterwise rule, term by term).
pub fn tau_basis(p: &BasisPoly) -> BasisPoly {
    let mut out = BasisPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(tau_basis_word(w), c.clone());
    }
    out
}

/// Dual of an admissible augmented index: the unique admissible index with
/// `tau(w(k)) = w(k_dual)`.
pub fn dual_index(idx: &AugmentedIndex) -> Result<AugmentedIndex> {
    idx.ensure_admissible()?;
    let dual_word = tau_basis_word(&word_of_index(idx));
    let dual = index_of_word(&dual_word)?;
    debug_assert!(dual.is_admissible());
    Ok(dual)
}

/// Substitution of one input letter into the basis alphabet:
/// `e0 = x`, `ez = -y0`, `e1 = -y0 - y1`.
fn basis_image(l: InputLetter) -> BasisPoly {
    let mut p = BasisPoly::zero();
    match l {
        InputLetter::E0 => p.add_term(BasisWord(vec![BasisLetter::X]), Q::one()),
        InputLetter::Ez => p.add_term(BasisWord(vec![BasisLetter::Y0]), -Q::one()),
        InputLetter::E1 => {
            p.add_term(BasisWord(vec![BasisLetter::Y0]), -Q::one());
            p.add_term(BasisWord(vec![BasisLetter::Y1]), -Q::one());
        }
    }
    p
}

/// Embedding of one basis letter back into the input alphabet:
/// `x = e0`, `y0 = -ez`, `y1 = ez - e1`.
fn input_image(l: BasisLetter) -> InputPoly {
    let mut p = InputPoly::zero();
    match l {
        BasisLetter::X => p.add_term(InputWord(vec![InputLetter::E0]), Q::one()),
        BasisLetter::Y0 => p.add_term(InputWord(vec![InputLetter::Ez]), -Q::one()),
        BasisLetter::Y1 => {
            p.add_term(InputWord(vec![InputLetter::Ez]), Q::one());
            p.add_term(InputWord(vec![InputLetter::E1]), -Q::one());
        }
    }
    p
}

/// Expand an input polynomial in the basis alphabet, exactly.
pub fn expand_in_basis(p: &InputPoly) -> BasisPoly {
    let mut out = BasisPoly::zero();
    for (w, c) in p.terms() {
        let mut prod = BasisPoly::one();
        for &l in &w.0 {
            prod = prod.mul(&basis_image(l));
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// Rewrite a basis polynomial over the input alphabet.
pub fn embed_in_input(p: &BasisPoly) -> InputPoly {
    let mut out = InputPoly::zero();
    for (w, c) in p.terms() {
        let mut prod = InputPoly::one();
        for &l in &w.0 {
            prod = prod.mul(&input_image(l));
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// Membership in `A0`: every basis word of the expansion must parse to an
/// admissible augmented index.
pub fn is_in_a0(p: &InputPoly) -> bool {
    let expanded = expand_in_basis(p);
    let ok = expanded.terms().all(|(w, _)| match index_of_word(w) {
        Ok(idx) => idx.is_admissible(),
        Err(_) => false,
    });
    ok
}

/// All admissible augmented indices of weight `1..=max_weight`.
///
/// Ordered by weight, then lexicographically on the basis word with
/// `x < y0 < y1`.
pub fn enumerate_admissible(max_weight: u32) -> Vec<AugmentedIndex> {
    let letters = [BasisLetter::X, BasisLetter::Y0, BasisLetter::Y1];
    let mut out = Vec::new();
    for w in 1..=max_weight {
        let len = w as usize;
        let mut digits = vec![0usize; len];
        'words: loop {
            let word = BasisWord(digits.iter().map(|&d| letters[d]).collect());
            let starts_ok = !matches!(word.0.first(), Some(BasisLetter::X) | None);
            let ends_ok = !matches!(word.0.last(), Some(BasisLetter::Y1));
            if starts_ok && ends_ok {
                if let Ok(idx) = index_of_word(&word) {
                    debug_assert!(idx.is_admissible());
                    out.push(idx);
                }
            }
            // advance to the next word in lexicographic order
            let mut i = len;
            while i > 0 {
                i -= 1;
                if digits[i] < 2 {
                    digits[i] += 1;
                    for d in digits.iter_mut().skip(i + 1) {
                        *d = 0;
                    }
                    continue 'words;
                }
            }
            break;
        }
    }
    out
}

/// Block decomposition of an input monomial `e_{h_1} e0^{k_1-1} ... e_{h_r} e0^{k_r-1}`
/// with heads `h_i` in `{e1, ez}`. Returns `(k, I)` where `I` collects the
/// positions (1-based) whose head is `ez`.
pub fn parse_blocks(w: &InputWord) -> Result<(Vec<u32>, Vec<usize>)> {
    let mut ks: Vec<u32> = Vec::new();
    let mut zs: Vec<usize> = Vec::new();
    for &l in &w.0 {
        match l {
            InputLetter::E0 => match ks.last_mut() {
                Some(k) => *k += 1,
                None => {
                    return Err(Error::NotParseable(format!(
                        "monomial starts with e0: {w}"
                    )))
                }
            },
            InputLetter::E1 => ks.push(1),
            InputLetter::Ez => {
                ks.push(1);
                zs.push(ks.len());
            }
        }
    }
    Ok((ks, zs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(pairs: &[(u32, u8)]) -> AugmentedIndex {
        AugmentedIndex::from_pairs(pairs)
    }

    #[test]
    fn word_of_index_examples() {
        assert_eq!(word_of_index(&AugmentedIndex::empty()), BasisWord::empty());
        assert_eq!(
            word_of_index(&idx(&[(2, 1)])),
            BasisWord(vec![BasisLetter::Y1, BasisLetter::X])
        );
        assert_eq!(
            word_of_index(&idx(&[(2, 0), (1, 1), (3, 1)])),
            BasisWord::parse("y0 x y1 y1 x x").unwrap()
        );
    }

    #[test]
    fn index_of_word_examples() {
        assert_eq!(
            index_of_word(&BasisWord::parse("y1 x").unwrap()).unwrap(),
            idx(&[(2, 1)])
        );
        assert_eq!(
            index_of_word(&BasisWord::empty()).unwrap(),
            AugmentedIndex::empty()
        );
        assert_eq!(
            index_of_word(&BasisWord::parse("y1 y1 x x y1 y0").unwrap()).unwrap(),
            idx(&[(1, 1), (3, 1), (1, 1), (1, 0)])
        );
        assert!(index_of_word(&BasisWord::parse("x y1").unwrap()).is_err());
    }

    #[test]
    fn tau_letter_images() {
        let t = tau_letter(InputLetter::E0);
        assert_eq!(t.coefficient(&InputWord::parse("z").unwrap()), Q::one());
        assert_eq!(t.coefficient(&InputWord::parse("1").unwrap()), -Q::one());
        assert_eq!(t.num_terms(), 2);
    }

    #[test]
    fn tau_is_involution_on_input() {
        let p = InputPoly::from_word(InputWord::parse("100").unwrap());
        let tt = tau_input(&tau_input(&p));
        assert_eq!(tt, p);
    }

    #[test]
    fn tau_basis_word_examples() {
        let w = BasisWord::parse("y1 x").unwrap();
        assert_eq!(tau_basis_word(&w), w);
        let v = BasisWord::parse("y1 x x").unwrap();
        assert_eq!(tau_basis_word(&v), BasisWord::parse("y1 y1 x").unwrap());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_index(&idx(&[(2, 1)])).unwrap(), idx(&[(2, 1)]));
        assert_eq!(dual_index(&idx(&[(3, 1)])).unwrap(), idx(&[(1, 1), (2, 1)]));
        assert_eq!(
            dual_index(&idx(&[(2, 0), (1, 1), (3, 1)])).unwrap(),
            idx(&[(1, 1), (3, 1), (1, 1), (1, 0)])
        );
        assert_eq!(dual_index(&idx(&[(1, 0)])).unwrap(), idx(&[(1, 0)]));
        assert!(dual_index(&idx(&[(1, 1)])).is_err());
    }

    #[test]
    fn expand_examples() {
        let e1 = InputPoly::from_word(InputWord::parse("1").unwrap());
        let exp = expand_in_basis(&e1);
        assert_eq!(exp.coefficient(&BasisWord::parse("y0").unwrap()), -Q::one());
        assert_eq!(exp.coefficient(&BasisWord::parse("y1").unwrap()), -Q::one());
        assert_eq!(exp.num_terms(), 2);

        let e100 = InputPoly::from_word(InputWord::parse("100").unwrap());
        let exp = expand_in_basis(&e100);
        assert_eq!(
            exp.coefficient(&BasisWord::parse("y0 x x").unwrap()),
            -Q::one()
        );
        assert_eq!(
            exp.coefficient(&BasisWord::parse("y1 x x").unwrap()),
            -Q::one()
        );
        assert_eq!(exp.num_terms(), 2);

        let ez = InputPoly::from_word(InputWord::parse("z").unwrap());
        let exp = expand_in_basis(&ez);
        assert_eq!(exp.coefficient(&BasisWord::parse("y0").unwrap()), -Q::one());
        assert_eq!(exp.num_terms(), 1);
    }

    #[test]
    fn a0_membership() {
        assert!(is_in_a0(&InputPoly::one()));
        assert!(!is_in_a0(&InputPoly::from_word(InputWord::parse("0").unwrap())));
        assert!(is_in_a0(&InputPoly::from_word(InputWord::parse("100").unwrap())));
        // e1 alone ends in e1 and is not in A0
        assert!(!is_in_a0(&InputPoly::from_word(InputWord::parse("1").unwrap())));
    }

    #[test]
    fn enumeration_small_weights() {
        let w1 = enumerate_admissible(1);
        assert_eq!(w1, vec![idx(&[(1, 0)])]);
        let w2 = enumerate_admissible(2);
        assert!(w2.contains(&idx(&[(2, 1)])));
        assert_eq!(w2.len(), 1 + 4);
        // closed under duality, weight by weight
        let all = enumerate_admissible(4);
        for k in &all {
            let d = dual_index(k).unwrap();
            assert_eq!(d.weight(), k.weight());
            assert!(all.contains(&d));
        }
    }

    #[test]
    fn letterwise_dual_agrees_with_generic_tau() {
        // tau(w(k)) computed through the full anti-automorphism on the
        // input alphabet must expand to the basis word of the dual.
        for k in enumerate_admissible(5) {
            let w = word_of_index(&k);
            let as_input = embed_in_input(&BasisPoly::from_word(w));
            let taued = tau_input(&as_input);
            let expanded = expand_in_basis(&taued);
            let expected = BasisPoly::from_word(word_of_index(&dual_index(&k).unwrap()));
            assert_eq!(expanded, expected, "index {k}");
        }
    }

    #[test]
    fn parse_blocks_examples() {
        let (ks, zs) = parse_blocks(&InputWord::parse("100").unwrap()).unwrap();
        assert_eq!(ks, vec![3]);
        assert!(zs.is_empty());
        let (ks, zs) = parse_blocks(&InputWord::parse("z01z").unwrap()).unwrap();
        assert_eq!(ks, vec![2, 1, 1]);
        assert_eq!(zs, vec![1, 3]);
        assert!(parse_blocks(&InputWord::parse("01").unwrap()).is_err());
    }
}
