use std::fmt::Write;

use demazure_core::charring::{demazure_word_char, weyl_character_finite};
use demazure_core::demazure::{demazure_character, demazure_dim};
use demazure_core::flags::{graded_weyl_character, level_flag, local_weyl_character, weyl_dim_product_check};
use demazure_core::lspath::{crystal_character, generate_demazure_set, joseph_highest};
use demazure_core::{
    DemazureLabel, DominantLWeight, FlagDecomposition, FormalCharacter, GradedClassicalCharacter,
    LSPath, Weight,
};

use crate::cache::Cache;
use crate::error::Result;
use crate::report::{ClassicalH, CrystalVerdict, DimCheckOut, GradedTerm, JosephEntry, Report, Term};
use crate::request::{Command, CommandRequest};

// Schema validation guarantees the parameters a command needs are present.
fn need<T: Clone>(v: &Option<T>) -> T {
    v.clone().expect("validated request")
}

fn graded_terms(g: &GradedClassicalCharacter) -> Vec<GradedTerm> {
    g.iter()
        .map(|(w, grade, coeff)| GradedTerm { weight: ClassicalH { h: w.h.clone() }, grade, coeff })
        .collect()
}

fn terms(f: &FormalCharacter) -> Vec<Term> {
    f.iter()
        .map(|(w, coeff)| Term { weight: ClassicalH { h: w.h.clone() }, coeff })
        .collect()
}

/// Pieces ordered by (grade, h-values), like character terms.
fn sorted(fd: FlagDecomposition) -> FlagDecomposition {
    let mut pieces = fd.pieces;
    pieces.sort_by(|a, b| (a.grade, &a.lambda.h).cmp(&(b.grade, &b.lambda.h)));
    FlagDecomposition { level: fd.level, pieces }
}

fn path_string(p: &LSPath) -> String {
    let mut s = String::new();
    for (k, seg) in p.segments().iter().enumerate() {
        if k > 0 {
            s.push('+');
        }
        let h: Vec<String> = seg.direction.h.iter().map(|x| x.to_string()).collect();
        write!(s, "{}*({}|{})", seg.duration, h.join(","), seg.direction.d).unwrap();
    }
    s
}

/// Runs the computation behind a validated request.
pub fn execute(req: &CommandRequest) -> Result<Report> {
    let rd = &req.datum;
    let ad = rd.affinize();
    let mut rep = Report::new(&rd.label());
    match req.command {
        Command::DemazureChar => {
            let lab = DemazureLabel::new(need(&req.level), need(&req.lambda), req.grade);
            rep.character = Some(graded_terms(&demazure_character(&ad, &lab)?));
        }
        Command::DemazureDim => {
            let lab = DemazureLabel::new(need(&req.level), need(&req.lambda), 0);
            rep.dim = Some(demazure_dim(&ad, &lab)?);
        }
        Command::WeylChar => {
            let (ch, fd) = graded_weyl_character(rd, &need(&req.lambda))?;
            rep.character = Some(graded_terms(&ch));
            rep.flag = Some(sorted(fd));
        }
        Command::Flag => {
            let (_, fd) = graded_weyl_character(rd, &need(&req.lambda))?;
            rep.flag = Some(sorted(fd));
        }
        Command::LevelFlag => {
            let fd = level_flag(&ad, need(&req.level), need(&req.to_level), &need(&req.lambda))?;
            rep.flag = Some(sorted(fd));
        }
        Command::LocalWeyl => {
            let varpi = DominantLWeight::new(req.factors.clone())?;
            rep.terms = Some(terms(&local_weyl_character(rd, &varpi)?));
        }
        Command::CrystalCheck => {
            let lambda = need(&req.lambda);
            let sigma = need(&req.sigma);
            let ps = generate_demazure_set(&ad, &lambda, &sigma)?;
            let op = demazure_word_char(&ad, &sigma, &lambda)?;
            rep.crystal = Some(CrystalVerdict {
                paths: ps.len() as i64,
                mass: op.mass(),
                equal: crystal_character(&ad, &ps) == op,
            });
        }
        Command::Joseph => {
            let found = joseph_highest(&ad, &need(&req.mu), &need(&req.lambda), &need(&req.sigma))?;
            rep.joseph = Some(
                found
                    .iter()
                    .map(|(b, nu): &(LSPath, Weight)| JosephEntry { weight: nu.clone(), path: path_string(b) })
                    .collect(),
            );
        }
        Command::WeylFinite => {
            rep.terms = Some(terms(&weyl_character_finite(rd, &need(&req.lambda))?));
        }
        Command::DimCheck => {
            let dc = weyl_dim_product_check(rd, &need(&req.lambda))?;
            rep.dim_check = Some(DimCheckOut {
                holds: dc.holds,
                dim: dc.dim,
                product: dc.product,
                fundamentals: dc.fundamentals,
            });
        }
    }
    Ok(rep)
}

/// Rendered output for a request, served from `cache` when possible.
pub fn run_command(req: &CommandRequest, cache: Option<&Cache>) -> Result<String> {
    let key = cache.map(|_| Cache::key(req));
    if let (Some(c), Some(k)) = (cache, &key) {
        if let Some(hit) = c.get(k)? {
            return Ok(hit);
        }
    }
    let out = execute(req)?.render(req.format)?;
    if let (Some(c), Some(k)) = (cache, &key) {
        c.put(k, &out)?;
    }
    Ok(out)
}
