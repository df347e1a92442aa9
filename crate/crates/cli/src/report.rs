//! Command results and their json / csv / table encodings.
//!
//! csv and table share a sectioned layout: a title line, a header row and
//! data rows. Every encoding parses back to the same [`Report`].

use demazure_core::{FlagDecomposition, FlagPiece, RootDatum, Weight};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::request::Format;

/// Classical weight on the wire: `{"h": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassicalH {
    pub h: Vec<i64>,
}

/// One term of a graded classical character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedTerm {
    pub weight: ClassicalH,
    pub grade: i64,
    pub coeff: i64,
}

/// One term of an ungraded classical character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub weight: ClassicalH,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrystalVerdict {
    pub paths: i64,
    pub mass: i64,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JosephEntry {
    /// `μ + wt(b)`.
    pub weight: Weight,
    /// `b` as `duration*(h_0,..,h_n|d)` segments joined by `+`.
    pub path: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimCheckOut {
    pub holds: bool,
    pub dim: i64,
    pub product: i64,
    /// `(node, dim W(ω_node))`.
    pub fundamentals: Vec<(usize, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    #[serde(rename = "type")]
    pub datum: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<Vec<GradedTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Term>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<FlagDecomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crystal: Option<CrystalVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub joseph: Option<Vec<JosephEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_check: Option<DimCheckOut>,
}

impl Report {
    pub fn new(datum: &str) -> Self {
        Self {
            datum: datum.to_string(),
            character: None,
            terms: None,
            flag: None,
            dim: None,
            crystal: None,
            joseph: None,
            dim_check: None,
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => render_csv(&self.sections()?),
            Format::Table => Ok(render_table(&self.sections()?)),
        }
    }

    pub fn parse(text: &str, format: Format) -> Result<Self> {
        match format {
            Format::Json => serde_json::from_str(text).map_err(|e| parse_err(format, e)),
            Format::Csv => Self::from_sections(parse_csv(text)?, format),
            Format::Table => Self::from_sections(parse_table(text, format)?, format),
        }
    }

    fn rank(&self) -> Result<usize> {
        RootDatum::from_label(&self.datum)
            .map(|rd| rd.rank())
            .map_err(|e| CliError::Validation(e.to_string()))
    }

    fn sections(&self) -> Result<Vec<Section>> {
        let n = self.rank()?;
        let hs = |prefix_from: usize, count: usize| -> Vec<String> {
            (prefix_from..prefix_from + count).map(|i| format!("h{i}")).collect()
        };
        let mut out = vec![Section {
            title: "type".into(),
            header: vec!["type".into()],
            rows: vec![vec![self.datum.clone()]],
        }];
        if let Some(ch) = &self.character {
            out.push(Section {
                title: "character".into(),
                header: cols(["grade"], hs(1, n), ["coeff"]),
                rows: ch
                    .iter()
                    .map(|t| row([t.grade], &t.weight.h, [t.coeff]))
                    .collect(),
            });
        }
        if let Some(ts) = &self.terms {
            out.push(Section {
                title: "terms".into(),
                header: cols([], hs(1, n), ["coeff"]),
                rows: ts.iter().map(|t| row([], &t.weight.h, [t.coeff])).collect(),
            });
        }
        if let Some(fd) = &self.flag {
            out.push(Section {
                title: format!("flag level={}", fd.level),
                header: cols(["grade"], hs(1, n), ["mult"]),
                rows: fd
                    .pieces
                    .iter()
                    .map(|p| row([p.grade], &p.lambda.h, [p.mult]))
                    .collect(),
            });
        }
        if let Some(d) = self.dim {
            out.push(Section {
                title: "dim".into(),
                header: vec!["dim".into()],
                rows: vec![vec![d.to_string()]],
            });
        }
        if let Some(c) = &self.crystal {
            out.push(Section {
                title: "crystal".into(),
                header: vec!["paths".into(), "mass".into(), "equal".into()],
                rows: vec![vec![c.paths.to_string(), c.mass.to_string(), c.equal.to_string()]],
            });
        }
        if let Some(js) = &self.joseph {
            out.push(Section {
                title: "joseph".into(),
                header: cols([], hs(0, n + 1), ["d", "path"]),
                rows: js
                    .iter()
                    .map(|j| {
                        let mut r = row([], &j.weight.h, [j.weight.d]);
                        r.push(j.path.clone());
                        r
                    })
                    .collect(),
            });
        }
        if let Some(dc) = &self.dim_check {
            out.push(Section {
                title: "dim_check".into(),
                header: vec!["holds".into(), "dim".into(), "product".into()],
                rows: vec![vec![dc.holds.to_string(), dc.dim.to_string(), dc.product.to_string()]],
            });
            out.push(Section {
                title: "fundamentals".into(),
                header: vec!["node".into(), "dim".into()],
                rows: dc
                    .fundamentals
                    .iter()
                    .map(|(i, d)| vec![i.to_string(), d.to_string()])
                    .collect(),
            });
        }
        Ok(out)
    }

    fn from_sections(sections: Vec<Section>, format: Format) -> Result<Self> {
        let bad = |msg: String| CliError::Parse { format: format.name(), msg };
        let mut iter = sections.into_iter();
        let first = iter.next().ok_or_else(|| bad("empty document".into()))?;
        if first.title != "type" || first.rows.len() != 1 || first.rows[0].len() != 1 {
            return Err(bad("document must start with a type section".into()));
        }
        let mut rep = Report::new(&first.rows[0][0]);
        let n = rep.rank()?;
        let mut pending_check: Option<(bool, i64, i64)> = None;
        for sec in iter {
            let ints = |r: &[String]| -> Result<Vec<i64>> {
                r.iter()
                    .map(|c| c.parse::<i64>().map_err(|_| bad(format!("'{c}' is not an integer"))))
                    .collect()
            };
            let boolean = |c: &str| -> Result<bool> {
                c.parse::<bool>().map_err(|_| bad(format!("'{c}' is not a boolean")))
            };
            let width = sec.header.len();
            for r in &sec.rows {
                if r.len() != width {
                    return Err(bad(format!("row of width {} in section '{}'", r.len(), sec.title)));
                }
            }
            let single = || -> Result<&Vec<String>> {
                match sec.rows.as_slice() {
                    [r] => Ok(r),
                    _ => Err(bad(format!("section '{}' must have one row", sec.title))),
                }
            };
            match sec.title.as_str() {
                "character" if width == n + 2 => {
                    let terms = sec
                        .rows
                        .iter()
                        .map(|r| {
                            let v = ints(r)?;
                            Ok(GradedTerm {
                                grade: v[0],
                                weight: ClassicalH { h: v[1..=n].to_vec() },
                                coeff: v[n + 1],
                            })
                        })
                        .collect::<Result<_>>()?;
                    rep.character = Some(terms);
                }
                "terms" if width == n + 1 => {
                    let terms = sec
                        .rows
                        .iter()
                        .map(|r| {
                            let v = ints(r)?;
                            Ok(Term { weight: ClassicalH { h: v[..n].to_vec() }, coeff: v[n] })
                        })
                        .collect::<Result<_>>()?;
                    rep.terms = Some(terms);
                }
                t if t.starts_with("flag level=") && width == n + 2 => {
                    let level = t["flag level=".len()..]
                        .parse::<i64>()
                        .map_err(|_| bad(format!("bad flag level in '{t}'")))?;
                    let pieces = sec
                        .rows
                        .iter()
                        .map(|r| {
                            let v = ints(r)?;
                            Ok(FlagPiece {
                                grade: v[0],
                                lambda: Weight::classical(v[1..=n].to_vec()),
                                mult: v[n + 1],
                            })
                        })
                        .collect::<Result<_>>()?;
                    rep.flag = Some(FlagDecomposition { level, pieces });
                }
                "dim" if width == 1 => rep.dim = Some(ints(single()?)?[0]),
                "crystal" if width == 3 => {
                    let r = single()?;
                    let v = ints(&r[..2])?;
                    rep.crystal = Some(CrystalVerdict { paths: v[0], mass: v[1], equal: boolean(&r[2])? });
                }
                "joseph" if width == n + 3 => {
                    let entries = sec
                        .rows
                        .iter()
                        .map(|r| {
                            let v = ints(&r[..=n + 1])?;
                            Ok(JosephEntry {
                                weight: Weight::new(v[..=n].to_vec(), v[n + 1]),
                                path: r[n + 2].clone(),
                            })
                        })
                        .collect::<Result<_>>()?;
                    rep.joseph = Some(entries);
                }
                "dim_check" if width == 3 => {
                    let r = single()?;
                    let v = ints(&r[1..])?;
                    pending_check = Some((boolean(&r[0])?, v[0], v[1]));
                }
                "fundamentals" if width == 2 => {
                    let (holds, dim, product) = pending_check
                        .take()
                        .ok_or_else(|| bad("fundamentals without dim_check".into()))?;
                    let fundamentals = sec
                        .rows
                        .iter()
                        .map(|r| {
                            let v = ints(r)?;
                            let node = usize::try_from(v[0]).map_err(|_| bad(format!("bad node {}", v[0])))?;
                            Ok((node, v[1]))
                        })
                        .collect::<Result<_>>()?;
                    rep.dim_check = Some(DimCheckOut { holds, dim, product, fundamentals });
                }
                t => return Err(bad(format!("unexpected section '{t}' of width {width}"))),
            }
        }
        if pending_check.is_some() {
            return Err(bad("dim_check without fundamentals".into()));
        }
        Ok(rep)
    }
}

fn parse_err(format: Format, e: impl std::fmt::Display) -> CliError {
    CliError::Parse { format: format.name(), msg: e.to_string() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Section {
    title: String,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

fn cols<const A: usize, const B: usize>(pre: [&str; A], mid: Vec<String>, post: [&str; B]) -> Vec<String> {
    pre.iter()
        .map(|s| s.to_string())
        .chain(mid)
        .chain(post.iter().map(|s| s.to_string()))
        .collect()
}

fn row<const A: usize, const B: usize>(pre: [i64; A], mid: &[i64], post: [i64; B]) -> Vec<String> {
    pre.iter().chain(mid).chain(post.iter()).map(i64::to_string).collect()
}

// csv: `# title`, then a header record and data records.

fn render_csv(sections: &[Section]) -> Result<String> {
    let mut out = String::new();
    for sec in sections {
        out.push_str("# ");
        out.push_str(&sec.title);
        out.push('\n');
        let mut w = csv::Writer::from_writer(Vec::new());
        let rec = |w: &mut csv::Writer<Vec<u8>>, r: &[String]| {
            w.write_record(r).map_err(|e| parse_err(Format::Csv, e))
        };
        rec(&mut w, &sec.header)?;
        for r in &sec.rows {
            rec(&mut w, r)?;
        }
        let bytes = w.into_inner().map_err(|e| parse_err(Format::Csv, e))?;
        out.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
    }
    Ok(out)
}

fn parse_csv(text: &str) -> Result<Vec<Section>> {
    let mut chunks: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        if let Some(title) = line.strip_prefix("# ") {
            chunks.push((title.to_string(), String::new()));
        } else if let Some((_, body)) = chunks.last_mut() {
            body.push_str(line);
            body.push('\n');
        } else if !line.trim().is_empty() {
            return Err(parse_err(Format::Csv, "data before the first section"));
        }
    }
    chunks
        .into_iter()
        .map(|(title, body)| {
            let mut rd = csv::ReaderBuilder::new()
                .has_headers(false)
                .flexible(true)
                .from_reader(body.as_bytes());
            let mut records = rd.records().map(|r| {
                r.map(|r| r.iter().map(str::to_string).collect::<Vec<_>>())
                    .map_err(|e| parse_err(Format::Csv, e))
            });
            let header = records
                .next()
                .ok_or_else(|| parse_err(Format::Csv, format!("section '{title}' has no header")))??;
            let rows = records.collect::<Result<Vec<_>>>()?;
            Ok(Section { title, header, rows })
        })
        .collect()
}

// table: `[title]`, then whitespace-aligned columns; sections separated by a
// blank line. Cells never contain whitespace.

fn render_table(sections: &[Section]) -> String {
    let mut out = String::new();
    for (k, sec) in sections.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        out.push_str(&format!("[{}]\n", sec.title));
        let widths: Vec<usize> = (0..sec.header.len())
            .map(|c| {
                std::iter::once(&sec.header)
                    .chain(&sec.rows)
                    .map(|r| r[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for r in std::iter::once(&sec.header).chain(&sec.rows) {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            out.push_str(&cells.join("  "));
            out.push('\n');
        }
    }
    out
}

fn parse_table(text: &str, format: Format) -> Result<Vec<Section>> {
    let mut out: Vec<Section> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(title) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            out.push(Section { title: title.to_string(), header: Vec::new(), rows: Vec::new() });
            continue;
        }
        let sec = out
            .last_mut()
            .ok_or_else(|| parse_err(format, "data before the first section"))?;
        let cells: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if sec.header.is_empty() {
            sec.header = cells;
        } else {
            sec.rows.push(cells);
        }
    }
    Ok(out)
}
