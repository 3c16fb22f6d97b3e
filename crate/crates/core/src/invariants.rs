//! Linking invariants read off clasp words.

use crate::complex::CComplex;
use crate::error::{Error, Result};
use crate::word::ClaspWord;

/// Signed count of `x_i` occurrences preceding `x_j` occurrences in `word`:
/// the sum over pairs `u <= v` with letter `u` an `x_i^±` and letter `v` an
/// `x_j^±` of the product of their signs.
///
/// One pass, carrying the running signed count of `x_i`.
pub fn e_ij(word: &ClaspWord, i: u32, j: u32) -> Result<i64> {
    if i == j {
        return Err(Error::RepeatedIndex(i));
    }
    let mut running_i = 0i64;
    let mut total = 0i64;
    for letter in word.letters() {
        let s = letter.sign().value();
        if letter.index() == i {
            running_i += s;
        } else if letter.index() == j {
            total += running_i * s;
        }
    }
    Ok(total)
}

/// Signed count of clasps joining components `i` and `j`.
pub fn pairwise_linking(f: &CComplex, i: u32, j: u32) -> Result<i64> {
    f.check_component(i)?;
    f.check_component(j)?;
    if i == j {
        return Err(Error::RepeatedIndex(i));
    }
    Ok(f.clasps()
        .iter()
        .filter(|c| c.joins(i, j))
        .map(|c| c.sign().value())
        .sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleLinking {
    pub value: i64,
    /// `e_ij(w_k)`, `e_jk(w_i)`, `e_ki(w_j)` in that order.
    pub contributions: [i64; 3],
    /// All three pairwise linking numbers among `i, j, k` vanish, so the value
    /// does not depend on basepoints or on the complex.
    pub well_defined: bool,
}

/// `μ_ijk = e_ij(w_k) + e_jk(w_i) + e_ki(w_j)` from the complex's clasp words.
///
/// Computed even when a pairwise linking number is nonzero; `well_defined`
/// records whether the result is an invariant.
pub fn triple_linking(f: &CComplex, i: u32, j: u32, k: u32) -> Result<TripleLinking> {
    for idx in [i, j, k] {
        f.check_component(idx)?;
    }
    if i == j || i == k {
        return Err(Error::RepeatedIndex(i));
    }
    if j == k {
        return Err(Error::RepeatedIndex(j));
    }
    f.ensure_valid()?;
    let w = |c: u32| f.clasp_word(c);
    let contributions = [e_ij(&w(k)?, i, j)?, e_ij(&w(i)?, j, k)?, e_ij(&w(j)?, k, i)?];
    let well_defined = [(i, j), (j, k), (k, i)]
        .into_iter()
        .map(|(a, b)| pairwise_linking(f, a, b))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|&lk| lk == 0);
    Ok(TripleLinking {
        value: contributions.iter().sum(),
        contributions,
        well_defined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::LatticeCurve;
    use crate::word::SignedLetter;
    use proptest::prelude::*;

    fn w(s: &str) -> ClaspWord {
        s.parse().unwrap()
    }

    /// The double sum taken literally, O(m^2).
    fn e_ij_double_sum(word: &ClaspWord, i: u32, j: u32) -> i64 {
        let l = word.letters();
        let mut total = 0;
        for v in 0..l.len() {
            for u in 0..=v {
                if l[u].index() == i && l[v].index() == j {
                    total += l[u].sign().value() * l[v].sign().value();
                }
            }
        }
        total
    }

    #[test]
    fn worked_values() {
        assert_eq!(e_ij(&w("x1 x2 x1^-1 x2^-1"), 1, 2).unwrap(), 1);
        assert_eq!(e_ij(&w("x3^-1 x2 x3 x2^-1"), 2, 3).unwrap(), 1);
        assert_eq!(e_ij(&w("x1 x2 x1 x2 x1^-2 x2^-2"), 1, 2).unwrap(), 3);
        assert_eq!(e_ij(&ClaspWord::new(), 1, 2).unwrap(), 0);
        assert_eq!(e_ij(&w("x1^-1 x1"), 3, 1).unwrap(), 0);
        assert_eq!(e_ij(&w("x1"), 1, 1), Err(Error::RepeatedIndex(1)));
    }

    #[test]
    fn borromean_linking() {
        let f = CComplex::borromean();
        for (i, j) in [(1, 2), (2, 3), (1, 3)] {
            assert_eq!(pairwise_linking(&f, i, j).unwrap(), 0);
        }
        let mu = triple_linking(&f, 1, 2, 3).unwrap();
        assert_eq!(mu, TripleLinking { value: 1, contributions: [0, 1, 0], well_defined: true });
    }

    #[test]
    fn clasp_counting() {
        let f: CComplex = "components 2\nclasp a 1 2 +\norder 1 a\norder 2 a\n".parse().unwrap();
        assert_eq!(pairwise_linking(&f, 1, 2).unwrap(), 1);
        assert_eq!(pairwise_linking(&f, 2, 1).unwrap(), 1);
        assert!(pairwise_linking(&f, 1, 3).is_err());
        assert!(pairwise_linking(&f, 1, 1).is_err());

        let text = "components 2\nclasp a 1 2 +\nclasp b 1 2 +\nclasp c 1 2 +\norder 1 a b c\norder 2 c b a\n";
        assert_eq!(pairwise_linking(&text.parse().unwrap(), 1, 2).unwrap(), 3);
    }

    #[test]
    fn boundary_complex_has_zero_mu() {
        let mu = triple_linking(&CComplex::boundary(3), 1, 2, 3).unwrap();
        assert_eq!(mu, TripleLinking { value: 0, contributions: [0, 0, 0], well_defined: true });
    }

    #[test]
    fn triple_linking_argument_errors() {
        let f = CComplex::borromean();
        assert!(matches!(triple_linking(&f, 1, 1, 3), Err(Error::RepeatedIndex(1))));
        assert!(matches!(triple_linking(&f, 1, 2, 2), Err(Error::RepeatedIndex(2))));
        assert!(matches!(triple_linking(&f, 1, 2, 4), Err(Error::ComponentOutOfRange { .. })));
    }

    #[test]
    fn nonzero_linking_is_reported_not_refused() {
        let text = "components 3\nclasp a 1 2 +\nclasp b 2 3 +\norder 1 a\norder 2 a b\norder 3 b\n";
        let mu = triple_linking(&text.parse().unwrap(), 1, 2, 3).unwrap();
        assert!(!mu.well_defined);
        assert_eq!(mu.value, mu.contributions.iter().sum::<i64>());
    }

    #[test]
    fn brn_sign_flip_and_reversal() {
        for n in 1..=8 {
            let f = CComplex::generalized_borromean(n).unwrap();
            let n = n as i64;
            assert_eq!(triple_linking(&f, 1, 2, 3).unwrap().value, n * n);
            // each e_ij is quadratic in the signs
            assert_eq!(triple_linking(&f.mirrored(), 1, 2, 3).unwrap().value, n * n);
            // reading every boundary backwards swaps e_ij and e_ji = -e_ij
            assert_eq!(triple_linking(&f.reversed(), 1, 2, 3).unwrap().value, -n * n);
            assert_eq!(triple_linking(&f.reversed().mirrored(), 1, 2, 3).unwrap().value, -n * n);
        }
    }

    #[test]
    fn linking_matches_signed_letter_counts() {
        let f = CComplex::generalized_borromean(3).unwrap();
        let words = f.clasp_words().unwrap();
        for (i, j) in [(1u32, 2u32), (1, 3), (2, 3)] {
            let lk = pairwise_linking(&f, i, j).unwrap();
            assert_eq!(lk, words[i as usize - 1].signed_count(j));
            assert_eq!(lk, words[j as usize - 1].signed_count(i));
        }
    }

    fn arb_word(max_index: u32, max_len: usize) -> impl Strategy<Value = ClaspWord> {
        prop::collection::vec((1..=max_index, any::<bool>()), 0..=max_len).prop_map(|v| {
            v.into_iter()
                .map(|(i, p)| if p { SignedLetter::pos(i) } else { SignedLetter::neg(i) })
                .collect()
        })
    }

    fn distinct_pair() -> impl Strategy<Value = (u32, u32)> {
        prop::sample::select(vec![(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn single_pass_matches_double_sum(word in arb_word(3, 30), (i, j) in distinct_pair()) {
            prop_assert_eq!(e_ij(&word, i, j).unwrap(), e_ij_double_sum(&word, i, j));
        }

        #[test]
        fn restriction_does_not_change_e_ij(word in arb_word(3, 30), (i, j) in distinct_pair()) {
            prop_assert_eq!(e_ij(&word.restrict(i, j).unwrap(), i, j).unwrap(), e_ij(&word, i, j).unwrap());
        }

        #[test]
        fn matches_line_integral(word in arb_word(3, 30), (i, j) in distinct_pair()) {
            let c = LatticeCurve::from_word(&word, i, j).unwrap();
            prop_assert_eq!(e_ij(&word, i, j).unwrap(), c.line_integral_x_dy());
            let balanced = word.signed_count(i) == 0 && word.signed_count(j) == 0;
            prop_assert_eq!(c.is_closed(), balanced);
        }
    }

    /// Every word over `{x1^±, x2^±}` of exactly `len` letters.
    fn all_words(len: usize) -> impl Iterator<Item = ClaspWord> {
        let letters = [SignedLetter::pos(1), SignedLetter::neg(1), SignedLetter::pos(2), SignedLetter::neg(2)];
        (0..4usize.pow(len as u32)).map(move |mut code| {
            (0..len)
                .map(|_| {
                    let l = letters[code % 4];
                    code /= 4;
                    l
                })
                .collect()
        })
    }

    #[test]
    fn exhaustive_short_words() {
        for len in 0..=8 {
            for word in all_words(len) {
                let e = e_ij(&word, 1, 2).unwrap();
                assert_eq!(e, e_ij_double_sum(&word, 1, 2));
                assert_eq!(e, LatticeCurve::from_word(&word, 1, 2).unwrap().line_integral_x_dy());
                if word.signed_count(1) == 0 && word.signed_count(2) == 0 {
                    for k in 0..len as i64 {
                        assert_eq!(e_ij(&word.rotate(k), 1, 2).unwrap(), e, "{word} rotated by {k}");
                    }
                }
            }
        }
    }
}
