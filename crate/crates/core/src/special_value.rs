use std::fmt;

use crate::exact::Cyclotomic;
use crate::numeric::{Complex, Precision, Real};

/// Exact value `coeff * pi^pi_power`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialValue {
    pub coeff: Cyclotomic,
    pub pi_power: u32,
}

impl SpecialValue {
    /// The coefficient is stored in its smallest field.
    pub fn new(coeff: Cyclotomic, pi_power: u32) -> Self {
        SpecialValue {
            coeff: coeff.normalized(),
            pi_power,
        }
    }

    pub fn embed(&self, prec: Precision) -> Complex {
        let p = prec.with_guard(10);
        let pi_k = Real::pi(p.bits()).powi(self.pi_power as u64);
        self.coeff.embed(p).scale(&pi_k).with_precision(prec)
    }
}

impl fmt::Display for SpecialValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.coeff.as_rational() {
            Some(r) => r.to_string(),
            None => self.coeff.to_string(),
        };
        match self.pi_power {
            0 => write!(f, "{c}"),
            1 => write!(f, "({c}) * pi"),
            k => write!(f, "({c}) * pi^{k}"),
        }
    }
}
