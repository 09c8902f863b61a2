//! Dirichlet characters with exact values in Q(zeta_n).

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::group::{unit_group, UnitGroup};
use crate::exact::rational::{gcd_u64, lcm_u64};
use crate::exact::{Cyclotomic, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_integer(n: u64) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// A character mod q; chi(a) = zeta_order^{exponent(a)} on units, 0 elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    index: usize,
    order: u64,
    /// Exponent tuple on the canonical generators of (Z/q)^*.
    tuple: Vec<u64>,
    /// values[a mod q]; `None` for non-units.
    values: Vec<Option<u64>>,
    parity: Parity,
    conductor: u64,
}

type Table = Arc<Vec<DirichletCharacter>>;

fn cache() -> &'static RwLock<HashMap<u64, Table>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Table>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All phi(q) characters mod q, ordered lexicographically by exponent tuple.
/// Index 0 is the principal character.
pub fn characters(q: u64) -> Table {
    assert!(q >= 1, "modulus must be positive");
    if let Some(t) = cache().read().expect("character cache poisoned").get(&q) {
        return t.clone();
    }
    let table = Arc::new(build(q));
    cache()
        .write()
        .expect("character cache poisoned")
        .entry(q)
        .or_insert(table)
        .clone()
}

/// Character `index` mod q in the ordering of [`characters`].
pub fn character(q: u64, index: usize) -> Option<DirichletCharacter> {
    characters(q).get(index).cloned()
}

fn build(q: u64) -> Vec<DirichletCharacter> {
    let group = unit_group(q);
    let logs = group.discrete_logs();
    let big_l = group.orders.iter().fold(1, |a, &b| lcm_u64(a, b));
    let mut out = Vec::new();
    let mut tuple = vec![0u64; group.orders.len()];
    loop {
        out.push(make(q, out.len(), &group, &logs, big_l, &tuple));
        let mut i = tuple.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < group.orders[i] {
                break;
            }
            tuple[i] = 0;
        }
    }
}

fn make(
    q: u64,
    index: usize,
    group: &UnitGroup,
    logs: &HashMap<u64, Vec<u64>>,
    big_l: u64,
    tuple: &[u64],
) -> DirichletCharacter {
    let order = tuple
        .iter()
        .zip(&group.orders)
        .fold(1, |acc, (&e, &o)| lcm_u64(acc, o / gcd_u64(e, o)));
    let values: Vec<Option<u64>> = (0..q)
        .map(|a| {
            logs.get(&a).map(|l| {
                let e: u64 = l
                    .iter()
                    .zip(tuple)
                    .zip(&group.orders)
                    .map(|((&li, &ei), &oi)| li * ei % oi * (big_l / oi))
                    .sum::<u64>()
                    % big_l;
                debug_assert_eq!(e % (big_l / order), 0);
                e / (big_l / order)
            })
        })
        .collect();
    let parity = match values[((q as i64 - 1).rem_euclid(q as i64)) as usize] {
        Some(0) | None => Parity::Even,
        _ => Parity::Odd,
    };
    let mut chi = DirichletCharacter {
        modulus: q,
        index,
        order,
        tuple: tuple.to_vec(),
        values,
        parity,
        conductor: q,
    };
    chi.conductor = chi.compute_conductor();
    chi
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    pub fn exponent_tuple(&self) -> &[u64] {
        &self.tuple
    }

    /// e with chi(a) = zeta_order^e, or `None` when gcd(a, q) > 1.
    pub fn exponent(&self, a: i64) -> Option<u64> {
        self.values[a.rem_euclid(self.modulus as i64) as usize]
    }

    /// chi(a) as an element of Q(zeta_order).
    pub fn value(&self, a: i64) -> Cyclotomic {
        match self.exponent(a) {
            Some(e) => Cyclotomic::root_of_unity(self.order, e as i64),
            None => Cyclotomic::zero(),
        }
    }

    /// The complex-conjugate character.
    pub fn conj(&self) -> DirichletCharacter {
        let group = unit_group(self.modulus);
        let tuple: Vec<u64> = self
            .tuple
            .iter()
            .zip(&group.orders)
            .map(|(&e, &o)| (o - e) % o)
            .collect();
        let table = characters(self.modulus);
        table
            .iter()
            .find(|c| c.tuple == tuple)
            .cloned()
            .expect("dual group is closed under conjugation")
    }

    /// Smallest d | q such that chi is trivial on units congruent to 1 mod d.
    fn compute_conductor(&self) -> u64 {
        let q = self.modulus;
        (1..=q)
            .filter(|d| q % d == 0)
            .find(|&d| {
                (1..q.max(2))
                    .step_by(d as usize)
                    .all(|a| self.values[(a % q) as usize].map_or(true, |e| e == 0))
            })
            .unwrap_or(q)
    }

    /// tau(chi) = sum_a chi(a) e^{2 pi i a / q}, in Q(zeta_lcm(order, q)).
    pub fn gauss_sum(&self) -> Cyclotomic {
        let big = lcm_u64(self.order, self.modulus);
        let mut raw = vec![Rational::zero(); big as usize];
        for a in 0..self.modulus {
            if let Some(e) = self.values[a as usize] {
                let k = (e * (big / self.order) + a * (big / self.modulus)) % big;
                raw[k as usize] += Rational::from_integer(BigInt::from(1));
            }
        }
        Cyclotomic::new(big, raw)
    }

    /// 1/tau(chi) = chi(-1) tau(conj chi) / q, for primitive chi. Avoids a
    /// field inversion, which is very slow in large cyclotomic fields.
    pub fn gauss_sum_inverse(&self) -> Result<Cyclotomic> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive {
                modulus: self.modulus,
                conductor: self.conductor(),
            });
        }
        let sign = if self.is_even() { 1 } else { -1 };
        Ok(self.conj().gauss_sum().scale(&crate::exact::rat(sign, self.modulus as i64)))
    }

    /// Short label such as `chi[5,2]`.
    pub fn label(&self) -> String {
        format!("chi[{},{}]", self.modulus, self.index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    #[test]
    fn mod4_and_mod3() {
        let c4 = characters(4);
        assert_eq!(c4.len(), 2);
        assert_eq!(c4.iter().filter(|c| c.is_odd()).count(), 1);
        assert_eq!(c4[1].value(3), Cyclotomic::from_rational(rat(-1, 1)));
        assert_eq!(c4[1].conductor(), 4);
        assert_eq!(c4[0].conductor(), 1);
        assert_eq!(character(3, 1).unwrap().value(2), Cyclotomic::from_rational(rat(-1, 1)));
    }

    #[test]
    fn induced_character_conductor() {
        // The mod 8 character agreeing with chi_4 on units.
        let chi4 = character(4, 1).unwrap();
        let induced = characters(8)
            .iter()
            .find(|c| (1..8).step_by(2).all(|a| c.value(a) == chi4.value(a)))
            .cloned()
            .unwrap();
        assert_eq!(induced.conductor(), 4);
        assert!(!induced.is_primitive());
    }

    #[test]
    fn gauss_sums() {
        let chi4 = character(4, 1).unwrap();
        assert_eq!(chi4.gauss_sum(), Cyclotomic::root_of_unity(4, 1).scale(&rat(2, 1)));
        let chi3 = character(3, 1).unwrap();
        let expect = &Cyclotomic::root_of_unity(3, 1) - &Cyclotomic::root_of_unity(3, 2);
        assert_eq!(chi3.gauss_sum(), expect);
        let quad5 = character(5, 2).unwrap();
        assert_eq!(quad5.order(), 2);
        let t = quad5.gauss_sum();
        assert_eq!(&t * &t, Cyclotomic::from_rational(rat_int(5)));
    }

    #[test]
    fn gauss_sum_inverse_matches_field_inverse() {
        for q in [3u64, 4, 5, 7, 8, 9] {
            for chi in characters(q).iter().filter(|c| c.is_primitive()) {
                let inv = chi.gauss_sum_inverse().unwrap();
                assert_eq!(inv, chi.gauss_sum().inv().unwrap(), "{}", chi.label());
            }
        }
        assert!(character(8, 2).unwrap().gauss_sum_inverse().is_err());
    }

    #[test]
    fn multiplicative_and_counted() {
        for q in 1..=30u64 {
            let chars = characters(q);
            assert_eq!(chars.len() as u64, crate::exact::totient(q));
            for chi in chars.iter() {
                assert_eq!(chi.exponent(1), Some(0));
                for a in 0..q as i64 {
                    for b in 0..q as i64 {
                        if let (Some(x), Some(y)) = (chi.exponent(a), chi.exponent(b)) {
                            assert_eq!(chi.exponent(a * b), Some((x + y) % chi.order()));
                        }
                    }
                }
                assert_eq!(chi.conj().conj(), *chi);
            }
        }
    }
}
