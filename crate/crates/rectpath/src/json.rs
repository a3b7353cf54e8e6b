//! Wire formats.
//!
//! Exact values travel as strings: rationals as `"p"` or `"p/q"`, Gaussian
//! rationals as `{"re": "p/q", "im": "p/q"}`, series as arrays of
//! coefficient strings ordered by degree. Words carry a truncation degree
//! and their letters in time order. All serialization is canonical, so
//! identical inputs reproduce identical bytes.

use serde::{Deserialize, Serialize};

use crate::algebra::NcSeries;
use crate::bautin::BautinSystem;
use crate::center::CenterVerdict;
use crate::error::Error;
use crate::poly::MPoly;
use crate::scalar::{format_rational, parse_rational, GaussianRational, Scalar};
use crate::series::MapSeries;
use crate::word::{Letter, Word};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GaussJson {
    pub re: String,
    pub im: String,
}

impl GaussJson {
    pub fn encode(v: &GaussianRational) -> Self {
        Self {
            re: format_rational(&v.re),
            im: format_rational(&v.im),
        }
    }

    pub fn decode(&self, at: &str) -> Result<GaussianRational, Error> {
        let re = parse_rational(&self.re)
            .map_err(|e| Error::Parse(format!("{at}.re: {e}")))?;
        let im = parse_rational(&self.im)
            .map_err(|e| Error::Parse(format!("{at}.im: {e}")))?;
        Ok(GaussianRational::new(re, im))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LetterJson {
    pub axis: u32,
    pub amp: GaussJson,
}

fn default_truncation() -> usize {
    crate::series::DEFAULT_SCALAR_TRUNCATION
}

/// `{"truncation": N, "letters": [{"axis": k, "amp": {...}}, ...]}`,
/// letters in time order. A missing truncation defaults to
/// [`crate::series::DEFAULT_SCALAR_TRUNCATION`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WordJson {
    #[serde(default = "default_truncation")]
    pub truncation: usize,
    pub letters: Vec<LetterJson>,
}

impl WordJson {
    pub fn encode(w: &Word<GaussianRational>) -> Self {
        Self {
            truncation: w.trunc(),
            letters: w
                .letters()
                .iter()
                .map(|l| LetterJson {
                    axis: l.axis,
                    amp: GaussJson::encode(&l.amp),
                })
                .collect(),
        }
    }

    pub fn decode(&self) -> Result<Word<GaussianRational>, Error> {
        let mut letters = Vec::with_capacity(self.letters.len());
        for (idx, l) in self.letters.iter().enumerate() {
            if l.axis < 1 {
                return Err(Error::Parse(format!(
                    "letters[{idx}].axis: axes are positive, got {}",
                    l.axis
                )));
            }
            let amp = l.amp.decode(&format!("letters[{idx}].amp"))?;
            letters.push(Letter::new(l.axis, amp));
        }
        Ok(Word::new(self.truncation, letters))
    }
}

/// Parse a word from the JSON schema; zero-amplitude letters are dropped on
/// ingestion.
pub fn parse_word_str(s: &str) -> Result<Word<GaussianRational>, Error> {
    let json: WordJson =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("word json: {e}")))?;
    json.decode()
}

pub fn parse_word_file(path: &std::path::Path) -> Result<Word<GaussianRational>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_word_str(&text)
}

/// Map series as an array of coefficient strings `[c_1, ..., c_N]`.
pub fn encode_map_series(m: &MapSeries<GaussianRational>) -> Vec<String> {
    m.coeffs().iter().map(|c| c.to_string()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct NcTermJson {
    pub composition: Vec<u32>,
    pub value: String,
}

/// Noncommutative series as a list of `{composition, value}` entries in
/// canonical (weight, lex) order.
pub fn encode_nc_series<S: Scalar>(e: &NcSeries<S>) -> Vec<NcTermJson> {
    e.terms()
        .map(|(c, v)| NcTermJson {
            composition: c.parts().to_vec(),
            value: v.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyTermJson {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

/// Polynomial as a list of `{exponents, coeff}` terms, leading term first.
pub fn encode_poly(p: &MPoly) -> Vec<PolyTermJson> {
    p.terms()
        .rev()
        .map(|(m, c)| PolyTermJson {
            exponents: m.0.clone(),
            coeff: format_rational(c),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct BautinSystemJson {
    pub pattern: Vec<u32>,
    pub d: u64,
    pub variables: Vec<String>,
    pub polynomials: Vec<Vec<PolyTermJson>>,
}

impl BautinSystemJson {
    pub fn encode(sys: &BautinSystem) -> Self {
        Self {
            pattern: sys.axes.clone(),
            d: sys.bound_d,
            variables: sys.variables.as_ref().clone(),
            polynomials: sys.polynomials.iter().map(encode_poly).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientJson {
    pub index: usize,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterVerdictJson {
    pub is_center: bool,
    pub reduced_word: WordJson,
    pub bound_d: u64,
    pub coefficients_checked: Vec<CoefficientJson>,
    pub method: String,
}

impl CenterVerdictJson {
    pub fn encode(v: &CenterVerdict<GaussianRational>) -> Self {
        Self {
            is_center: v.is_center,
            reduced_word: WordJson::encode(&v.reduced_word),
            bound_d: v.bound_d,
            coefficients_checked: v
                .coefficients_checked
                .iter()
                .map(|(i, c)| CoefficientJson {
                    index: *i,
                    value: c.to_string(),
                })
                .collect(),
            method: v.method.as_str().to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        let text = r#"{"truncation":8,"letters":[{"axis":1,"amp":{"re":"1/2","im":"0"}}]}"#;
        let w = parse_word_str(text).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.trunc(), 8);
        assert_eq!(w.letters()[0].amp, GaussianRational::ratio(1, 2));

        let encoded = serde_json::to_string(&WordJson::encode(&w)).unwrap();
        assert_eq!(encoded, text);
    }

    #[test]
    fn empty_letter_list_is_the_empty_word() {
        let w = parse_word_str(r#"{"truncation":4,"letters":[]}"#).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn missing_truncation_defaults() {
        let w = parse_word_str(r#"{"letters":[{"axis":1,"amp":{"re":"1","im":"0"}}]}"#).unwrap();
        assert_eq!(w.trunc(), crate::series::DEFAULT_SCALAR_TRUNCATION);
    }

    #[test]
    fn zero_amplitudes_dropped_on_parse() {
        let text = r#"{"truncation":4,"letters":[
            {"axis":2,"amp":{"re":"0","im":"0"}},
            {"axis":1,"amp":{"re":"1","im":"0"}}]}"#;
        let w = parse_word_str(text).unwrap();
        assert_eq!(w.axes(), vec![1]);
    }

    #[test]
    fn nc_series_and_bautin_encodings() {
        let w = crate::word::Word::from_pairs(
            3,
            &[(1, GaussianRational::ratio(1, 2)), (2, GaussianRational::ratio(1, 3))],
        );
        let e = crate::algebra::chen_series(&w.to_step_coefficients(), 3).unwrap();
        let terms = encode_nc_series(&e);
        // canonical (weight, lex) order: (1) < (2) < (1,1) < ...
        assert_eq!(terms[0].composition, vec![1]);
        assert_eq!(terms[0].value, "1/2");
        assert!(terms
            .iter()
            .any(|t| t.composition == vec![1, 2] && t.value == "1/6"));

        let sys = crate::bautin::bautin_system(&[1, 2], 2).unwrap();
        let json = BautinSystemJson::encode(&sys);
        assert_eq!(json.pattern, vec![1, 2]);
        assert_eq!(json.d, 1);
        // c2 = a1^2 + a2: leading term first
        assert_eq!(json.polynomials[1][0].exponents, vec![2, 0]);
        assert_eq!(json.polynomials[1][0].coeff, "1");
        assert_eq!(json.polynomials[1][1].exponents, vec![0, 1]);
    }

    #[test]
    fn parse_errors_carry_location() {
        let text = r#"{"truncation":4,"letters":[{"axis":1,"amp":{"re":"1/0","im":"0"}}]}"#;
        let err = parse_word_str(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("letters[0].amp.re"), "{msg}");

        let text = r#"{"truncation":4,"letters":[{"axis":0,"amp":{"re":"1","im":"0"}}]}"#;
        let err = parse_word_str(text).unwrap_err();
        assert!(err.to_string().contains("letters[0].axis"));
    }
}
