use serde::{Deserialize, Serialize};

use super::frame::MeasurementFrame;
use crate::error::Result;
use crate::exact_arith::{classify_third_side, niven_classify, CosClass, Irrationality, PiAngle, Rational};

/// One CHSH slot: a rational correlation, or undefined with the witness of
/// the irrational cosine behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Correlation {
    Defined(Rational),
    Undefined(Irrationality),
}

impl Correlation {
    /// Singlet correlation `−cos θ` from the exact class of `cos θ`.
    pub fn from_cos(c: CosClass) -> Self {
        match c {
            CosClass::RationalCos(v) => Correlation::Defined(-v),
            CosClass::IrrationalCos(w) => Correlation::Undefined(w),
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            Correlation::Defined(v) => Some(v),
            Correlation::Undefined(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrelationQuadruple {
    pub c00: Correlation,
    pub c10: Correlation,
    pub c01: Correlation,
    pub c11: Correlation,
}

impl CorrelationQuadruple {
    pub fn from_array([c00, c10, c01, c11]: [Correlation; 4]) -> Self {
        CorrelationQuadruple { c00, c10, c01, c11 }
    }

    pub fn defined(values: [Rational; 4]) -> Self {
        Self::from_array(values.map(Correlation::Defined))
    }

    pub fn entries(&self) -> [&Correlation; 4] {
        [&self.c00, &self.c10, &self.c01, &self.c11]
    }

    /// All four values, when every slot is defined.
    pub fn values(&self) -> Option<[Rational; 4]> {
        let [a, b, c, d] = self.entries().map(|e| e.value().cloned());
        Some([a?, b?, c?, d?])
    }
}

/// The CHSH value, or undefined with the first irrationality witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChshValue {
    Defined(Rational),
    Undefined(Irrationality),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChshResult {
    pub s: ChshValue,
    /// `S > 2`.
    pub violates_bell: bool,
    /// `S ≤ 2√2 + 1e-9` numerically.
    pub within_tsirelson: bool,
}

pub const TSIRELSON_TOLERANCE: f64 = 1e-9;

impl ChshResult {
    pub fn value(&self) -> Option<&Rational> {
        match &self.s {
            ChshValue::Defined(v) => Some(v),
            ChshValue::Undefined(_) => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        self.value().is_some()
    }

    pub fn witness(&self) -> Option<&Irrationality> {
        match &self.s {
            ChshValue::Defined(_) => None,
            ChshValue::Undefined(w) => Some(w),
        }
    }

    pub fn s_float(&self) -> Option<f64> {
        self.value().map(Rational::to_f64)
    }

    fn defined(s: Rational) -> Self {
        let f = s.to_f64();
        ChshResult {
            violates_bell: s > 2,
            within_tsirelson: f <= 2.0 * std::f64::consts::SQRT_2 + TSIRELSON_TOLERANCE,
            s: ChshValue::Defined(s),
        }
    }
}

#[derive(Serialize)]
struct ChshResultJson<'a> {
    defined: bool,
    #[serde(rename = "S")]
    s: Option<&'a Rational>,
    #[serde(rename = "S_float")]
    s_float: Option<f64>,
    violates_bell: bool,
    within_tsirelson: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Irrationality>,
}

impl Serialize for ChshResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ChshResultJson {
            defined: self.is_defined(),
            s: self.value(),
            s_float: self.s_float(),
            violates_bell: self.violates_bell,
            within_tsirelson: self.within_tsirelson,
            witness: self.witness(),
        }
        .serialize(s)
    }
}

/// `|c00 + c10 + c01 − c11|`, exact; undefined if any slot is.
pub fn chsh_evaluate(q: &CorrelationQuadruple) -> ChshResult {
    if let Some(w) = q.entries().into_iter().find_map(|c| match c {
        Correlation::Undefined(w) => Some(w),
        Correlation::Defined(_) => None,
    }) {
        return ChshResult {
            s: ChshValue::Undefined(w.clone()),
            violates_bell: false,
            within_tsirelson: false,
        };
    }
    let [c00, c10, c01, c11] = q.values().expect("all defined");
    ChshResult::defined((c00 + c10 + c01 - c11).abs())
}

/// Whether the counterfactual side, opposite `γ` in the triangle with sides
/// `cos_realized` and `cos_apparatus`, has a rational cosine.
pub fn counterfactual_definability(
    cos_realized: &Rational,
    cos_apparatus: &Rational,
    gamma: &PiAngle,
) -> Result<CosClass> {
    classify_third_side(cos_realized, cos_apparatus, gamma)
}

/// Correlations of a frame taken at its exact relative angles.
pub fn exact_quadruple(frame: &MeasurementFrame) -> CorrelationQuadruple {
    CorrelationQuadruple::from_array(
        frame
            .relative_angles()
            .map(|theta| Correlation::from_cos(niven_classify(&theta))),
    )
}

pub fn evaluate_exact_frame(frame: &MeasurementFrame) -> ChshResult {
    chsh_evaluate(&exact_quadruple(frame))
}

/// The textbook frame at its exact angles.
pub fn bell_exact_configuration() -> ChshResult {
    evaluate_exact_frame(&MeasurementFrame::textbook())
}
