//! `g`-stable affine Demazure modules `D(ℓ, λ, m)` at the level of characters.
//!
//! The module `D(ℓ, λ, m)` is realised as the Demazure module `V^σ(Λ)`
//! where `σΛ = ℓΛ_0 + w_0λ + mδ` with `Λ` dominant. Its character is the
//! Demazure operator expansion along `σ`, projected to classical weights
//! graded by the value on `d`. Characters do not depend on the ground
//! field, so no field parameter appears anywhere.

use serde::{Deserialize, Serialize};

use crate::charring::{demazure_word_char, project_graded_classical, GradedClassicalCharacter};
use crate::error::{Error, Result};
use crate::root_data::{AffineDatum, Datum};
use crate::weight::{Weight, WeylWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DemazureLabel {
    pub level: i64,
    pub lambda: Weight,
    pub grade: i64,
}

impl DemazureLabel {
    pub fn new(level: i64, lambda: Weight, grade: i64) -> Self {
        Self {
            level,
            lambda,
            grade,
        }
    }

    fn validate(&self, ad: &AffineDatum) -> Result<()> {
        ad.finite().check_weight(&self.lambda)?;
        if self.level <= 0 {
            return Err(Error::ZeroLevel(self.level));
        }
        if !self.lambda.is_dominant() {
            return Err(Error::NotDominant(self.lambda.to_string()));
        }
        Ok(())
    }
}

/// Finds dominant `Λ` and `σ` with `σΛ = ℓΛ_0 + w_0λ + mδ`.
pub fn solve_extremal(ad: &AffineDatum, lab: &DemazureLabel) -> Result<(Weight, WeylWord)> {
    lab.validate(ad)?;
    let low = ad.finite().w0_apply(&lab.lambda)?;
    let target = ad.affine_weight(lab.level, &low, lab.grade)?;
    ad.make_dominant(&target)
}

pub fn demazure_character(ad: &AffineDatum, lab: &DemazureLabel) -> Result<GradedClassicalCharacter> {
    let (lam, sigma) = solve_extremal(ad, lab)?;
    let f = demazure_word_char(ad, &sigma, &lam)?;
    Ok(project_graded_classical(ad, &f))
}

pub fn demazure_dim(ad: &AffineDatum, lab: &DemazureLabel) -> Result<i64> {
    let lab = DemazureLabel {
        grade: 0,
        ..lab.clone()
    };
    Ok(demazure_character(ad, &lab)?.mass())
}
