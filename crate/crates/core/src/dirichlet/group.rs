//! Structure of the unit group (Z/q)^*.

use std::collections::HashMap;

use crate::exact::rational::gcd_u64;

/// Independent generators of (Z/q)^* with their orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    pub modulus: u64,
    pub generators: Vec<u64>,
    pub orders: Vec<u64>,
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc = 1u128 % m128;
    let mut b128 = b as u128 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b128 % m128;
        }
        b128 = b128 * b128 % m128;
        e >>= 1;
    }
    acc as u64
}

fn is_primitive_root(g: u64, m: u64, phi: u64) -> bool {
    gcd_u64(g, m) == 1 && factorize(phi).iter().all(|&(r, _)| pow_mod(g, phi / r, m) != 1)
}

/// x with x = a (mod m) and x = 1 (mod n), for coprime m, n.
fn crt_one(a: u64, m: u64, n: u64) -> u64 {
    (0..n).map(|t| a + t * m).find(|x| x % n == 1 % n).expect("coprime moduli") % (m * n)
}

/// Generators ordered by prime; for 2^k (k >= 3) the factor -1 precedes 5.
pub fn unit_group(q: u64) -> UnitGroup {
    assert!(q >= 1, "modulus must be positive");
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    for (p, k) in factorize(q) {
        let pk = p.pow(k);
        let rest = q / pk;
        let local: Vec<(u64, u64)> = if p == 2 {
            match k {
                1 => vec![],
                2 => vec![(3, 2)],
                _ => vec![(pk - 1, 2), (5, pk / 4)],
            }
        } else {
            let phi = pk / p * (p - 1);
            let g = (2..pk)
                .find(|&g| is_primitive_root(g, pk, phi))
                .expect("odd prime powers are cyclic");
            vec![(g, phi)]
        };
        for (g, ord) in local {
            generators.push(crt_one(g, pk, rest));
            orders.push(ord);
        }
    }
    UnitGroup {
        modulus: q,
        generators,
        orders,
    }
}

impl UnitGroup {
    pub fn size(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Exponent vector of every unit on the generator basis.
    pub fn discrete_logs(&self) -> HashMap<u64, Vec<u64>> {
        let q = self.modulus;
        let mut table = HashMap::new();
        let mut exps = vec![0u64; self.orders.len()];
        loop {
            let a = self
                .generators
                .iter()
                .zip(&exps)
                .fold(1 % q, |acc, (&g, &e)| acc * pow_mod(g, e, q) % q);
            table.insert(a, exps.clone());
            // Odometer over the exponent box.
            let mut i = exps.len();
            loop {
                if i == 0 {
                    return table;
                }
                i -= 1;
                exps[i] += 1;
                if exps[i] < self.orders[i] {
                    break;
                }
                exps[i] = 0;
            }
        }
    }
}
