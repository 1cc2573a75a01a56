//! Exact rational and quadratic arithmetic, plus the rationality decisions
//! for `cos(aπ/b)` and for the third side of a spherical triangle.

mod angle;
mod niven;
mod poly;
mod quadratic;
mod rational;
mod third_side;

pub use angle::PiAngle;
pub use niven::{
    chebyshev_double, cos_degree, cos_minimal_polynomial, descending_i64, niven_classify,
    quadratic_cos, rational_cos, two_cos_minimal_polynomial_of, CosClass, Irrationality, NivenClassifier,
    MINPOLY_ORDER_CAP,
};
pub use poly::{cyclotomic, euler_phi, IntPolynomial};
pub use quadratic::{
    sqrt_classify, square_free_combine, square_free_decompose, square_free_decompose_product,
    QuadraticValue, SqrtValue,
};
pub use rational::Rational;
pub use third_side::classify_third_side;
