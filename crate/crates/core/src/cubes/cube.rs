use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, one, ratio, zero, Rational};

/// An axis-aligned box `[lo, hi] ⊂ [0,1]^n` with `0 ≤ lo_j < hi_j ≤ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LittleCube {
    n: usize,
    #[serde(with = "rational::serde_vec")]
    lo: Vec<Rational>,
    #[serde(with = "rational::serde_vec")]
    hi: Vec<Rational>,
}

impl LittleCube {
    pub fn new(lo: Vec<Rational>, hi: Vec<Rational>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::Dimension { expected: lo.len(), found: hi.len() });
        }
        if lo.is_empty() {
            return Err(Error::Malformed("a little cube needs dimension ≥ 1".into()));
        }
        for (j, (l, h)) in lo.iter().zip(&hi).enumerate() {
            if !(zero() <= *l && l < h && *h <= one()) {
                return Err(Error::Malformed(format!(
                    "axis {}: need 0 ≤ {} < {} ≤ 1",
                    j + 1,
                    rational::format(l),
                    rational::format(h)
                )));
            }
        }
        Ok(LittleCube { n: lo.len(), lo, hi })
    }

    /// Builds from `(p_lo, q_lo, p_hi, q_hi)` per axis, i.e. `[p_lo/q_lo, p_hi/q_hi]`.
    pub fn from_fractions(axes: &[(i64, i64, i64, i64)]) -> Result<Self> {
        let lo = axes.iter().map(|&(a, b, _, _)| ratio(a, b)).collect();
        let hi = axes.iter().map(|&(_, _, c, d)| ratio(c, d)).collect();
        Self::new(lo, hi)
    }

    /// The whole cube `[0,1]^n`, the operad unit.
    pub fn identity(n: usize) -> Self {
        LittleCube { n, lo: vec![zero(); n], hi: vec![one(); n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn lo(&self) -> &[Rational] {
        &self.lo
    }

    pub fn hi(&self) -> &[Rational] {
        &self.hi
    }

    /// Random cube whose corners are multiples of `1/denominator`.
    pub fn random<R: Rng + ?Sized>(n: usize, denominator: i64, rng: &mut R) -> Self {
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for _ in 0..n {
            let a = rng.gen_range(0..denominator);
            let b = rng.gen_range(a + 1..=denominator);
            lo.push(ratio(a, denominator));
            hi.push(ratio(b, denominator));
        }
        LittleCube { n, lo, hi }
    }
}

impl<'de> Deserialize<'de> for LittleCube {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            #[serde(with = "rational::serde_vec")]
            lo: Vec<Rational>,
            #[serde(with = "rational::serde_vec")]
            hi: Vec<Rational>,
        }
        let r = Repr::deserialize(d)?;
        if r.lo.len() != r.n {
            return Err(serde::de::Error::custom(format!("n = {} but {} lower coordinates", r.n, r.lo.len())));
        }
        LittleCube::new(r.lo, r.hi).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for LittleCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, (l, h)) in self.lo.iter().zip(&self.hi).enumerate() {
            if j > 0 {
                write!(f, "×")?;
            }
            write!(f, "[{l},{h}]")?;
        }
        Ok(())
    }
}

fn check_dims(c1: &LittleCube, c2: &LittleCube) -> Result<()> {
    if c1.n != c2.n {
        return Err(Error::Dimension { expected: c1.n, found: c2.n });
    }
    Ok(())
}

/// `c1 <_axis c2`: the highest corner of `c1` does not exceed the lowest
/// corner of `c2` in coordinate `axis` (one-based, `1..=n`).
pub fn less_i(c1: &LittleCube, c2: &LittleCube, axis: usize) -> Result<bool> {
    check_dims(c1, c2)?;
    if axis == 0 || axis > c1.n {
        return Err(Error::OutOfRange { index: axis, bound: c1.n });
    }
    Ok(c1.hi[axis - 1] <= c2.lo[axis - 1])
}

/// Interior-disjointness, decided by separation along some axis.
pub fn disjoint_interiors(c1: &LittleCube, c2: &LittleCube) -> Result<bool> {
    check_dims(c1, c2)?;
    for axis in 1..=c1.n {
        if less_i(c1, c2, axis)? || less_i(c2, c1, axis)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `c ∘ inner`: the image of `inner` under the affine map `[0,1]^n → c`.
pub fn compose_cubes(c: &LittleCube, inner: &LittleCube) -> Result<LittleCube> {
    check_dims(c, inner)?;
    let mut lo = Vec::with_capacity(c.n);
    let mut hi = Vec::with_capacity(c.n);
    for j in 0..c.n {
        let width = &c.hi[j] - &c.lo[j];
        lo.push(&c.lo[j] + &width * &inner.lo[j]);
        hi.push(&c.lo[j] + &width * &inner.hi[j]);
    }
    Ok(LittleCube { n: c.n, lo, hi })
}

/// A `k`-tuple of little cubes of a common dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Configuration {
    cubes: Vec<LittleCube>,
}

impl Configuration {
    pub fn new(cubes: Vec<LittleCube>) -> Result<Self> {
        if let Some(first) = cubes.first() {
            for c in &cubes {
                check_dims(first, c)?;
            }
        }
        Ok(Configuration { cubes })
    }

    pub fn cubes(&self) -> &[LittleCube] {
        &self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    /// Ambient dimension, `None` for the empty configuration.
    pub fn dim(&self) -> Option<usize> {
        self.cubes.first().map(|c| c.dim())
    }

    pub fn pairwise_disjoint(&self) -> bool {
        let k = self.cubes.len();
        (0..k).all(|p| (p + 1..k).all(|q| disjoint_interiors(&self.cubes[p], &self.cubes[q]).unwrap_or(false)))
    }

    /// Coordinates in the variable layout of [`LinearSystem`](super::LinearSystem).
    pub fn to_point(&self) -> Vec<Rational> {
        let mut v = Vec::new();
        for c in &self.cubes {
            for j in 0..c.n {
                v.push(c.lo[j].clone());
                v.push(c.hi[j].clone());
            }
        }
        v
    }

    pub fn random<R: Rng + ?Sized>(k: usize, n: usize, denominator: i64, rng: &mut R) -> Self {
        Configuration { cubes: (0..k).map(|_| LittleCube::random(n, denominator, rng)).collect() }
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let cubes = Vec::<LittleCube>::deserialize(d)?;
        Configuration::new(cubes).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cube(axes: &[(i64, i64, i64, i64)]) -> LittleCube {
        LittleCube::from_fractions(axes).unwrap()
    }

    #[test]
    fn validates_corners() {
        assert!(LittleCube::from_fractions(&[(1, 2, 1, 2)]).is_err());
        assert!(LittleCube::from_fractions(&[(-1, 2, 1, 2)]).is_err());
        assert!(LittleCube::from_fractions(&[(0, 1, 3, 2)]).is_err());
        assert!(LittleCube::new(vec![], vec![]).is_err());
    }

    #[test]
    fn less_examples() {
        let a = cube(&[(0, 1, 1, 4), (0, 1, 1, 4)]);
        let b = cube(&[(1, 2, 1, 1), (1, 2, 1, 1)]);
        for i in 1..=2 {
            assert!(less_i(&a, &b, i).unwrap());
            assert!(!less_i(&a, &a, i).unwrap());
        }
        assert!(less_i(&a, &b, 3).is_err());
        assert!(less_i(&a, &b, 0).is_err());
        assert!(less_i(&a, &LittleCube::identity(3), 1).is_err());
    }

    #[test]
    fn disjoint_examples() {
        let a = cube(&[(0, 1, 1, 2), (0, 1, 1, 1)]);
        let b = cube(&[(1, 2, 1, 1), (0, 1, 1, 1)]);
        assert!(!disjoint_interiors(&a, &a).unwrap());
        assert!(disjoint_interiors(&a, &b).unwrap());
    }

    #[test]
    fn disjoint_agrees_with_open_interval_oracle() {
        // interiors meet iff every axis has overlapping open intervals
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let n = rng.gen_range(1..=3);
            let a = LittleCube::random(n, 6, &mut rng);
            let b = LittleCube::random(n, 6, &mut rng);
            let meet = (0..n).all(|j| a.lo[j] < b.hi[j] && b.lo[j] < a.hi[j]);
            assert_eq!(disjoint_interiors(&a, &b).unwrap(), !meet);
        }
    }

    #[test]
    fn compose_examples() {
        let c = cube(&[(0, 1, 1, 2)]);
        assert_eq!(compose_cubes(&c, &LittleCube::identity(1)).unwrap(), c);
        assert_eq!(compose_cubes(&LittleCube::identity(1), &c).unwrap(), c);
        let inner = cube(&[(1, 2, 1, 1)]);
        assert_eq!(compose_cubes(&c, &inner).unwrap(), cube(&[(1, 4, 1, 2)]));
    }

    #[test]
    fn json_form() {
        let c = cube(&[(0, 1, 1, 2), (2, 3, 1, 1)]);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"n":2,"lo":["0/1","2/3"],"hi":["1/2","1/1"]}"#);
        assert_eq!(serde_json::from_str::<LittleCube>(&json).unwrap(), c);
        let bad = r#"{"n":1,"lo":["1/2"],"hi":["1/3"]}"#;
        assert!(serde_json::from_str::<LittleCube>(bad).is_err());
        let config = Configuration::new(vec![c.clone(), c]).unwrap();
        let json = serde_json::to_string(&config).unwrap();
        assert!(json.starts_with('['));
        assert_eq!(serde_json::from_str::<Configuration>(&json).unwrap(), config);
    }

    #[test]
    fn configuration_dims_must_agree() {
        assert!(Configuration::new(vec![LittleCube::identity(1), LittleCube::identity(2)]).is_err());
    }
}
