//! Demazure flags of graded characters and characters of local Weyl modules.
//!
//! A graded character that admits a filtration by level-`ℓ′` Demazure
//! modules is decomposed by leading-term subtraction: the character of
//! `D(ℓ′, μ, m)` contains `(μ, m)` with coefficient 1 and otherwise only
//! classical weights strictly below `μ`, so picking a dominance-maximal
//! term and subtracting is triangular.
//!
//! Graded local Weyl modules agree with `D(1, λ)` in simply-laced type.
//! Otherwise the level-`r^∨` flag of the short subdatum's Demazure module
//! `D_sh(1, λ̄)` is lifted to a level-1 flag through `η_λ`, keeping grades.
//! The resulting characters are characteristic-free. In type G2 the module
//! theoretic statement behind them needs characteristic other than 2 and 3.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::charring::{
    check_w_invariance_per_grade, forget_grading, shift_grade, FormalCharacter,
    GradedClassicalCharacter,
};
use crate::demazure::{demazure_character, DemazureLabel};
use crate::error::{Error, Result};
use crate::root_data::{AffineDatum, Datum, RootDatum, Q};
use crate::weight::Weight;

mod classical_h {
    use crate::weight::Weight;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Repr {
        h: Vec<i64>,
    }

    pub fn serialize<S: Serializer>(w: &Weight, s: S) -> Result<S::Ok, S::Error> {
        Repr { h: w.h.clone() }.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Weight, D::Error> {
        Repr::deserialize(d).map(|r| Weight::classical(r.h))
    }
}

/// One quotient `D(ℓ′, λ, m)` of a flag, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagPiece {
    #[serde(with = "classical_h")]
    pub lambda: Weight,
    pub grade: i64,
    pub mult: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagDecomposition {
    pub level: i64,
    pub pieces: Vec<FlagPiece>,
}

impl FlagDecomposition {
    /// Pieces sorted, for comparisons that ignore extraction order.
    pub fn sorted_pieces(&self) -> Vec<FlagPiece> {
        let mut p = self.pieces.clone();
        p.sort();
        p
    }

    pub fn total_multiplicity(&self) -> i64 {
        self.pieces.iter().map(|p| p.mult).sum()
    }
}

/// Which candidate to take when several leading weights are incomparable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeadingOrder {
    First,
    Last,
}

struct DemazureCache<'a> {
    ad: &'a AffineDatum,
    level: i64,
    chars: BTreeMap<Weight, GradedClassicalCharacter>,
}

impl<'a> DemazureCache<'a> {
    fn new(ad: &'a AffineDatum, level: i64) -> Self {
        Self {
            ad,
            level,
            chars: BTreeMap::new(),
        }
    }

    fn get(&mut self, lambda: &Weight) -> Result<&GradedClassicalCharacter> {
        if !self.chars.contains_key(lambda) {
            let lab = DemazureLabel::new(self.level, lambda.clone(), 0);
            let ch = demazure_character(self.ad, &lab)?;
            self.chars.insert(lambda.clone(), ch);
        }
        Ok(&self.chars[lambda])
    }
}

pub fn greedy_decompose(
    ad: &AffineDatum,
    g: &GradedClassicalCharacter,
    level: i64,
) -> Result<FlagDecomposition> {
    greedy_decompose_with(ad, g, level, LeadingOrder::First)
}

pub fn greedy_decompose_with(
    ad: &AffineDatum,
    g: &GradedClassicalCharacter,
    level: i64,
    order: LeadingOrder,
) -> Result<FlagDecomposition> {
    if level <= 0 {
        return Err(Error::ZeroLevel(level));
    }
    let rd = ad.finite();
    if !check_w_invariance_per_grade(rd, g) {
        let (w, grade, _) = g
            .iter()
            .find(|(w, grade, c)| {
                rd.indices().any(|i| {
                    let s = rd.reflect_weight(i, w).unwrap();
                    g.coefficient(&s, *grade) != *c
                })
            })
            .expect("a term breaking invariance");
        return Err(Error::NonDominantLeading {
            weight: w.to_string(),
            grade,
        });
    }
    let mut cache = DemazureCache::new(ad, level);
    let mut residual = g.clone();
    let mut pieces = Vec::new();
    while !residual.is_zero() {
        let mut best: Option<Q> = None;
        let mut candidates: BTreeSet<Weight> = BTreeSet::new();
        for (w, _, _) in residual.iter() {
            let ht = rd.height(w).expect("finite Cartan matrix is invertible");
            match best {
                Some(b) if ht < b => {}
                Some(b) if ht == b => {
                    candidates.insert(w.clone());
                }
                _ => {
                    best = Some(ht);
                    candidates.clear();
                    candidates.insert(w.clone());
                }
            }
        }
        let mu = match order {
            LeadingOrder::First => candidates.iter().next(),
            LeadingOrder::Last => candidates.iter().next_back(),
        }
        .unwrap()
        .clone();
        let (grade, mult) = residual
            .iter()
            .filter(|(w, _, _)| **w == mu)
            .map(|(_, g, c)| (g, c))
            .min()
            .unwrap();
        if !mu.is_dominant() {
            return Err(Error::NonDominantLeading {
                weight: mu.to_string(),
                grade,
            });
        }
        if mult < 0 {
            return Err(Error::NegativeMultiplicity {
                weight: mu.to_string(),
                grade,
                mult,
            });
        }
        let piece = shift_grade(cache.get(&mu)?, grade).scale(mult);
        residual = &residual - &piece;
        pieces.push(FlagPiece {
            lambda: mu,
            grade,
            mult,
        });
    }
    Ok(FlagDecomposition { level, pieces })
}

/// `Σ_j c_j · ch D(ℓ′, λ_j, m_j)`.
pub fn reconstruct(ad: &AffineDatum, fd: &FlagDecomposition) -> Result<GradedClassicalCharacter> {
    let mut cache = DemazureCache::new(ad, fd.level);
    let mut out = GradedClassicalCharacter::zero();
    for p in &fd.pieces {
        let piece = shift_grade(cache.get(&p.lambda)?, p.grade).scale(p.mult);
        out = &out + &piece;
    }
    Ok(out)
}

/// Flag of `D(ℓ, λ)` by level-`ℓ′` Demazure modules, simply-laced type only.
pub fn level_flag(ad: &AffineDatum, from: i64, to: i64, lambda: &Weight) -> Result<FlagDecomposition> {
    if !ad.finite().is_simply_laced() {
        return Err(Error::NotSimplyLaced(ad.finite().label()));
    }
    if from < 1 || to <= from {
        return Err(Error::InvalidLevels { from, to });
    }
    let ch = demazure_character(ad, &DemazureLabel::new(from, lambda.clone(), 0))?;
    greedy_decompose(ad, &ch, to)
}

/// Graded character of the local Weyl module `W^c(λ)` with its level-1 flag.
pub fn graded_weyl_character(
    rd: &RootDatum,
    lambda: &Weight,
) -> Result<(GradedClassicalCharacter, FlagDecomposition)> {
    rd.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let ad = rd.affinize();
    if rd.is_simply_laced() {
        let ch = demazure_character(&ad, &DemazureLabel::new(1, lambda.clone(), 0))?;
        let fd = FlagDecomposition {
            level: 1,
            pieces: vec![FlagPiece {
                lambda: lambda.clone(),
                grade: 0,
                mult: 1,
            }],
        };
        return Ok((ch, fd));
    }
    let se = rd.short_subdatum()?;
    let sub_ad = se.sub().affinize();
    let bar = se.restrict(lambda)?;
    let ch_sh = demazure_character(&sub_ad, &DemazureLabel::new(1, bar, 0))?;
    let fd_sh = greedy_decompose(&sub_ad, &ch_sh, rd.lacing())?;
    let pieces = fd_sh
        .pieces
        .iter()
        .map(|p| {
            Ok(FlagPiece {
                lambda: se.eta_lambda(lambda, &p.lambda)?,
                grade: p.grade,
                mult: p.mult,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let fd = FlagDecomposition { level: 1, pieces };
    let ch = reconstruct(&ad, &fd)?;
    Ok((ch, fd))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimCheck {
    pub holds: bool,
    /// `dim W^c(λ)`.
    pub dim: i64,
    /// `Π_i dim W^c(ω_i)^{λ(h_i)}`.
    pub product: i64,
    /// `dim W^c(ω_i)` for every `i` with `λ(h_i) > 0`, in node order.
    pub fundamentals: Vec<(usize, i64)>,
}

pub fn weyl_dim_product_check(rd: &RootDatum, lambda: &Weight) -> Result<DimCheck> {
    let dim = graded_weyl_character(rd, lambda)?.0.mass();
    let mut product = 1i64;
    let mut fundamentals = Vec::new();
    for i in rd.indices() {
        let k = lambda.h[i - 1];
        if k == 0 {
            continue;
        }
        let f = graded_weyl_character(rd, &rd.fundamental(i)?)?.0.mass();
        fundamentals.push((i, f));
        product *= f.pow(k as u32);
    }
    Ok(DimCheck {
        holds: dim == product,
        dim,
        product,
        fundamentals,
    })
}

/// A dominant ℓ-weight `Π ω_{λ_j, a_j}` seen through its characters: dominant
/// weights attached to pairwise distinct evaluation points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantLWeight {
    factors: Vec<(Weight, String)>,
}

impl DominantLWeight {
    pub fn new(factors: Vec<(Weight, String)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (w, a) in &factors {
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.to_string()));
            }
            if !seen.insert(a.clone()) {
                return Err(Error::DuplicatePoint(a.clone()));
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[(Weight, String)] {
        &self.factors
    }

    pub fn weight(&self, rank: usize) -> Weight {
        self.factors
            .iter()
            .fold(Weight::zero(rank), |acc, (w, _)| &acc + w)
    }
}

/// `ch W(ϖ) = Π_j ch W^c(λ_j)` with gradings forgotten.
pub fn local_weyl_character(rd: &RootDatum, varpi: &DominantLWeight) -> Result<FormalCharacter> {
    let mut out = FormalCharacter::monomial(Weight::zero(rd.rank()));
    for (lambda, _) in varpi.factors() {
        let (g, _) = graded_weyl_character(rd, lambda)?;
        out = &out * &forget_grading(&g);
    }
    Ok(out)
}
