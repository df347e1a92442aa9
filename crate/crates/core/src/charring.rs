//! Formal characters and Demazure operators.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_data::{AffineDatum, Datum, RootDatum};
use crate::weight::{Weight, WeylWord};

/// A finite sum `Σ c_μ e^μ` with nonzero integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, i64>,
}

impl FormalCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e^μ`.
    pub fn monomial(mu: Weight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mu, 1);
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(terms: I) -> Self {
        let mut f = Self::zero();
        for (mu, c) in terms {
            f.add_term(mu, c);
        }
        f
    }

    pub fn add_term(&mut self, mu: Weight, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(e) => {
                *e += c;
                if *e == 0 {
                    self.terms.remove(&mu);
                }
            }
            None => {
                self.terms.insert(mu, c);
            }
        }
    }

    pub fn coefficient(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients; the dimension for characters of modules.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }
}

impl Add<&FormalCharacter> for &FormalCharacter {
    type Output = FormalCharacter;
    fn add(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (mu, c) in rhs.iter() {
            out.add_term(mu.clone(), c);
        }
        out
    }
}

impl Sub<&FormalCharacter> for &FormalCharacter {
    type Output = FormalCharacter;
    fn sub(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut out = self.clone();
        for (mu, c) in rhs.iter() {
            out.add_term(mu.clone(), -c);
        }
        out
    }
}

impl Neg for &FormalCharacter {
    type Output = FormalCharacter;
    fn neg(self) -> FormalCharacter {
        self.scale(-1)
    }
}

/// Convolution: `e^μ · e^ν = e^{μ+ν}`.
impl Mul<&FormalCharacter> for &FormalCharacter {
    type Output = FormalCharacter;
    fn mul(self, rhs: &FormalCharacter) -> FormalCharacter {
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (a, ca) in self.iter() {
            for (b, cb) in rhs.iter() {
                *acc.entry(a + b).or_insert(0) += ca * cb;
            }
        }
        acc.retain(|_, c| *c != 0);
        FormalCharacter { terms: acc }
    }
}

/// A classical weight at a given grade.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GradedWeight {
    pub grade: i64,
    pub weight: Weight,
}

/// A finite sum of classical weights graded by the value on `d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedClassicalCharacter {
    terms: BTreeMap<GradedWeight, i64>,
}

impl GradedClassicalCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, i64, i64)>>(terms: I) -> Self {
        let mut g = Self::zero();
        for (weight, grade, c) in terms {
            g.add_term(weight, grade, c);
        }
        g
    }

    pub fn add_term(&mut self, weight: Weight, grade: i64, c: i64) {
        if c == 0 {
            return;
        }
        let key = GradedWeight { grade, weight };
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, weight: &Weight, grade: i64) -> i64 {
        self.terms
            .get(&GradedWeight {
                grade,
                weight: weight.clone(),
            })
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Terms as `(weight, grade, coefficient)`, ordered by grade then weight.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64, i64)> {
        self.terms.iter().map(|(k, &c)| (&k.weight, k.grade, c))
    }

    pub fn min_grade(&self) -> Option<i64> {
        self.terms.keys().next().map(|k| k.grade)
    }

    pub fn max_grade(&self) -> Option<i64> {
        self.terms.keys().next_back().map(|k| k.grade)
    }

    pub fn grades(&self) -> Vec<i64> {
        let mut g: Vec<i64> = self.terms.keys().map(|k| k.grade).collect();
        g.dedup();
        g
    }

    /// The slice of a single grade as an ungraded character.
    pub fn slice(&self, grade: i64) -> FormalCharacter {
        FormalCharacter::from_terms(
            self.iter()
                .filter(|(_, g, _)| *g == grade)
                .map(|(w, _, c)| (w.clone(), c)),
        )
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.iter().map(|(w, g, c)| (w.clone(), g, c * k)))
    }
}

impl Add<&GradedClassicalCharacter> for &GradedClassicalCharacter {
    type Output = GradedClassicalCharacter;
    fn add(self, rhs: &GradedClassicalCharacter) -> GradedClassicalCharacter {
        let mut out = self.clone();
        for (w, g, c) in rhs.iter() {
            out.add_term(w.clone(), g, c);
        }
        out
    }
}

impl Sub<&GradedClassicalCharacter> for &GradedClassicalCharacter {
    type Output = GradedClassicalCharacter;
    fn sub(self, rhs: &GradedClassicalCharacter) -> GradedClassicalCharacter {
        let mut out = self.clone();
        for (w, g, c) in rhs.iter() {
            out.add_term(w.clone(), g, -c);
        }
        out
    }
}

/// The Demazure operator `D_i`, extended linearly.
pub fn demazure_step<D: Datum + ?Sized>(
    datum: &D,
    i: usize,
    f: &FormalCharacter,
) -> Result<FormalCharacter> {
    let p = datum.position(i)?;
    let alpha = &datum.simple_roots()[p];
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (mu, c) in f.iter() {
        datum.check_weight(mu)?;
        let n = mu.h[p];
        if n >= 0 {
            let mut cur = mu.clone();
            for _ in 0..=n {
                let next = cur.add_scaled(-1, alpha);
                *acc.entry(cur).or_insert(0) += c;
                cur = next;
            }
        } else if n <= -2 {
            let mut cur = mu.clone();
            for _ in 1..=(-n - 1) {
                cur = cur.add_scaled(1, alpha);
                *acc.entry(cur.clone()).or_insert(0) -= c;
            }
        }
    }
    acc.retain(|_, c| *c != 0);
    Ok(FormalCharacter { terms: acc })
}

/// `D_{i_1}(D_{i_2}(... D_{i_n}(e^seed)))`.
pub fn demazure_word_char<D: Datum + ?Sized>(
    datum: &D,
    w: &WeylWord,
    seed: &Weight,
) -> Result<FormalCharacter> {
    datum.check_weight(seed)?;
    let mut f = FormalCharacter::monomial(seed.clone());
    for &i in w.letters().iter().rev() {
        f = demazure_step(datum, i, &f)?;
    }
    Ok(f)
}

/// Character of the irreducible module of highest weight `λ`.
pub fn weyl_character_finite(rd: &RootDatum, lambda: &Weight) -> Result<FormalCharacter> {
    rd.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    demazure_word_char(rd, rd.w0(), lambda)
}

/// Regroups affine weights by their classical restriction and grade.
pub fn project_graded_classical(ad: &AffineDatum, f: &FormalCharacter) -> GradedClassicalCharacter {
    GradedClassicalCharacter::from_terms(
        f.iter()
            .map(|(mu, c)| (ad.restrict_classical(mu), mu.d, c)),
    )
}

pub fn forget_grading(g: &GradedClassicalCharacter) -> FormalCharacter {
    FormalCharacter::from_terms(g.iter().map(|(w, _, c)| (w.clone(), c)))
}

/// True iff every grade slice is invariant under every simple reflection.
pub fn check_w_invariance_per_grade(rd: &RootDatum, g: &GradedClassicalCharacter) -> bool {
    g.iter().all(|(w, grade, c)| {
        rd.indices().all(|i| match rd.reflect_weight(i, w) {
            Ok(s) => g.coefficient(&s, grade) == c,
            Err(_) => false,
        })
    })
}

/// Ungraded version of [`check_w_invariance_per_grade`].
pub fn check_w_invariance(rd: &RootDatum, f: &FormalCharacter) -> bool {
    f.iter().all(|(w, c)| {
        rd.indices().all(|i| match rd.reflect_weight(i, w) {
            Ok(s) => f.coefficient(&s) == c,
            Err(_) => false,
        })
    })
}

pub fn shift_grade(g: &GradedClassicalCharacter, m: i64) -> GradedClassicalCharacter {
    GradedClassicalCharacter::from_terms(g.iter().map(|(w, grade, c)| (w.clone(), grade + m, c)))
}
