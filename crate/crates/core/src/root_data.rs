//! Finite and untwisted affine root data.
//!
//! Nodes follow Bourbaki numbering. Finite nodes are labelled `1..=n`;
//! the affine node is labelled `0`. Cartan entries are `c_ij = α_j(h_i)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{Weight, WeylWord};

pub type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            "E" | "e" => Ok(Series::E),
            "F" | "f" => Ok(Series::F),
            "G" | "g" => Ok(Series::G),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }
}

/// Order in which [`Datum::make_dominant_with`] picks among negative nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    SmallestFirst,
    LargestFirst,
}

/// Shared behaviour of finite and affine data: a set of simple roots
/// written in the coordinates of the weight lattice.
pub trait Datum {
    fn name(&self) -> String;

    /// Label of the first node: 1 for finite type, 0 for affine type.
    fn first_index(&self) -> usize;

    fn simple_roots(&self) -> &[Weight];

    /// Value of the level functional, `None` in finite type.
    fn level(&self, mu: &Weight) -> Option<i64>;

    /// Coordinates of `beta` in the basis of simple roots, if it lies in
    /// their rational span.
    fn root_coordinates(&self, beta: &Weight) -> Option<Vec<Q>>;

    fn num_nodes(&self) -> usize {
        self.simple_roots().len()
    }

    fn indices(&self) -> std::ops::Range<usize> {
        self.first_index()..self.first_index() + self.num_nodes()
    }

    fn position(&self, i: usize) -> Result<usize> {
        if self.indices().contains(&i) {
            Ok(i - self.first_index())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                datum: self.name(),
            })
        }
    }

    fn simple_root(&self, i: usize) -> Result<&Weight> {
        Ok(&self.simple_roots()[self.position(i)?])
    }

    fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.h.len() == self.num_nodes() {
            Ok(())
        } else {
            Err(Error::WrongLength {
                expected: self.num_nodes(),
                got: mu.h.len(),
            })
        }
    }

    /// `s_i(μ) = μ − μ(h_i) α_i`.
    fn reflect_weight(&self, i: usize, mu: &Weight) -> Result<Weight> {
        let p = self.position(i)?;
        self.check_weight(mu)?;
        Ok(mu.add_scaled(-mu.h[p], &self.simple_roots()[p]))
    }

    /// `s_{i_1}(s_{i_2}(... s_{i_n}(μ)))`.
    fn apply_word(&self, w: &WeylWord, mu: &Weight) -> Result<Weight> {
        self.check_weight(mu)?;
        let mut cur = mu.clone();
        for &i in w.letters().iter().rev() {
            cur = self.reflect_weight(i, &cur)?;
        }
        Ok(cur)
    }

    fn make_dominant(&self, mu: &Weight) -> Result<(Weight, WeylWord)> {
        self.make_dominant_with(mu, TieBreak::SmallestFirst)
    }

    /// Returns the dominant `Λ` in the orbit of `μ` and the word `w`
    /// with `apply_word(w, Λ) = μ`.
    fn make_dominant_with(&self, mu: &Weight, order: TieBreak) -> Result<(Weight, WeylWord)> {
        self.check_weight(mu)?;
        if let Some(l) = self.level(mu) {
            if l <= 0 {
                return Err(Error::ZeroLevel(l));
            }
        }
        let roots = self.simple_roots();
        let mut cur = mu.clone();
        let mut word = Vec::new();
        loop {
            let neg = match order {
                TieBreak::SmallestFirst => cur.h.iter().position(|&x| x < 0),
                TieBreak::LargestFirst => cur.h.iter().rposition(|&x| x < 0),
            };
            let Some(p) = neg else { break };
            cur = cur.add_scaled(-cur.h[p], &roots[p]);
            word.push(p + self.first_index());
        }
        Ok((cur, WeylWord(word)))
    }

    /// `μ ≤ λ` iff `λ − μ` is a nonnegative integral combination of simple roots.
    fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        match self.root_coordinates(&(lambda - mu)) {
            Some(n) => n.iter().all(|x| x.is_integer() && *x >= Q::zero()),
            None => false,
        }
    }

    /// Height `Σ n_i` of a weight written in simple-root coordinates.
    fn height(&self, mu: &Weight) -> Option<Q> {
        self.root_coordinates(mu)
            .map(|n| n.into_iter().fold(Q::zero(), |a, b| a + b))
    }
}

/// Solves `M x = v` over the rationals for square invertible `M`.
pub(crate) fn solve_rational(m: &[Vec<i64>], v: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .zip(v)
        .map(|(row, &rhs)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.push(rhs);
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in &mut a[col][col..] {
            *x /= p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= y * f;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n]).collect())
}

fn cartan_matrix(series: Series, n: usize) -> Option<Vec<Vec<i64>>> {
    let valid = match series {
        Series::A => (1..=8).contains(&n),
        Series::B | Series::C => (2..=8).contains(&n),
        Series::D => (4..=8).contains(&n),
        Series::E => (6..=8).contains(&n),
        Series::F => n == 4,
        Series::G => n == 2,
    };
    if !valid {
        return None;
    }
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    // 1-based edge setter
    let mut edge = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i - 1][j - 1] = cij;
        c[j - 1][i - 1] = cji;
    };
    match series {
        Series::A => (1..n).for_each(|k| edge(k, k + 1, -1, -1)),
        Series::B => {
            (1..n - 1).for_each(|k| edge(k, k + 1, -1, -1));
            edge(n, n - 1, -2, -1);
        }
        Series::C => {
            (1..n - 1).for_each(|k| edge(k, k + 1, -1, -1));
            edge(n - 1, n, -2, -1);
        }
        Series::D => {
            (1..n - 1).for_each(|k| edge(k, k + 1, -1, -1));
            edge(n - 2, n, -1, -1);
        }
        Series::E => {
            edge(1, 3, -1, -1);
            edge(2, 4, -1, -1);
            (3..n).for_each(|k| edge(k, k + 1, -1, -1));
        }
        Series::F => {
            edge(1, 2, -1, -1);
            edge(3, 2, -2, -1);
            edge(3, 4, -1, -1);
        }
        Series::G => edge(1, 2, -3, -1),
    }
    Some(c)
}

/// A finite root datum of type `series` and rank `rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Vec<i64>>,
    highest_root: Vec<i64>,
    highest_root_h: Vec<i64>,
    dual_marks: Vec<i64>,
    root_lengths: Vec<i64>,
    lacing: i64,
    w0: WeylWord,
}

impl RootDatum {
    pub fn build(series: Series, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(series, rank)
            .ok_or_else(|| Error::UnknownType(format!("{series}{rank}")))?;
        Ok(Self::from_cartan(series, rank, cartan))
    }

    /// Parses labels such as `"A1"`, `"C2"`, `"G2"`.
    pub fn from_label(label: &str) -> Result<Self> {
        let label = label.trim();
        let unknown = || Error::UnknownType(label.to_string());
        let mut chars = label.chars();
        let series: Series = chars.next().ok_or_else(unknown)?.to_string().parse()?;
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        Self::build(series, rank)
    }

    fn from_cartan(series: Series, rank: usize, cartan: Vec<Vec<i64>>) -> Self {
        let n = rank;
        let simple_roots: Vec<Weight> = (0..n)
            .map(|j| Weight::classical((0..n).map(|i| cartan[i][j]).collect()))
            .collect();
        let positive_roots = positive_roots(&cartan);
        let highest_root = positive_roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .cloned()
            .expect("at least one positive root");
        let highest_root_h = (0..n)
            .map(|i| (0..n).map(|j| highest_root[j] * cartan[i][j]).sum())
            .collect();
        let root_lengths = root_lengths(&cartan);
        let long = *root_lengths.iter().max().unwrap();
        let short = *root_lengths.iter().min().unwrap();
        let dual_marks = highest_root
            .iter()
            .zip(&root_lengths)
            .map(|(a, len)| a * len / long)
            .collect();
        let mut rd = RootDatum {
            series,
            rank,
            cartan,
            simple_roots,
            positive_roots,
            highest_root,
            highest_root_h,
            dual_marks,
            root_lengths,
            lacing: long / short,
            w0: WeylWord::empty(),
        };
        let minus_rho = Weight::classical(vec![-1; n]);
        rd.w0 = rd.make_dominant(&minus_rho).expect("finite reduction").1;
        rd
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    /// `cartan()[i][j] = α_{j+1}(h_{i+1})`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Highest root in simple-root coordinates; these are the marks `a_i`.
    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    /// `θ(h_i)` for `i ∈ I`.
    pub fn highest_root_h(&self) -> &[i64] {
        &self.highest_root_h
    }

    pub fn marks(&self) -> &[i64] {
        &self.highest_root
    }

    /// Coefficients of `h_θ` in the basis `h_i`.
    pub fn dual_marks(&self) -> &[i64] {
        &self.dual_marks
    }

    /// Lacing number `r^∨`.
    pub fn lacing(&self) -> i64 {
        self.lacing
    }

    pub fn is_simply_laced(&self) -> bool {
        self.lacing == 1
    }

    /// Squared lengths of the simple roots, normalised so short roots have length 1.
    pub fn root_lengths(&self) -> &[i64] {
        &self.root_lengths
    }

    pub fn is_short(&self, i: usize) -> Result<bool> {
        let p = self.position(i)?;
        Ok(self.root_lengths[p] < self.lacing * self.root_lengths.iter().min().unwrap())
    }

    /// `r^∨_{α_i}`: 1 on long simple roots, `r^∨` on short ones.
    pub fn lacing_of(&self, i: usize) -> Result<i64> {
        let p = self.position(i)?;
        let long = *self.root_lengths.iter().max().unwrap();
        Ok(long / self.root_lengths[p])
    }

    /// A reduced word for the longest element of `W`.
    pub fn w0(&self) -> &WeylWord {
        &self.w0
    }

    pub fn fundamental(&self, i: usize) -> Result<Weight> {
        let p = self.position(i)?;
        let mut h = vec![0; self.rank];
        h[p] = 1;
        Ok(Weight::classical(h))
    }

    pub fn rho(&self) -> Weight {
        Weight::classical(vec![1; self.rank])
    }

    /// `w_0 λ`.
    pub fn w0_apply(&self, lambda: &Weight) -> Result<Weight> {
        self.apply_word(&self.w0, lambda)
    }

    pub fn affinize(&self) -> AffineDatum {
        AffineDatum::new(self.clone())
    }

    /// The simply-laced subdatum spanned by the short simple roots.
    pub fn short_subdatum(&self) -> Result<ShortEmbedding> {
        ShortEmbedding::new(self)
    }
}

impl Datum for RootDatum {
    fn name(&self) -> String {
        self.label()
    }

    fn first_index(&self) -> usize {
        1
    }

    fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    fn level(&self, _mu: &Weight) -> Option<i64> {
        None
    }

    fn root_coordinates(&self, beta: &Weight) -> Option<Vec<Q>> {
        if beta.h.len() != self.rank || beta.d != 0 {
            return None;
        }
        let v: Vec<Q> = beta.h.iter().map(|&x| Q::from_integer(x)).collect();
        solve_rational(&self.cartan, &v)
    }
}

fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    all.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().filter(|r| !all.contains(r)).collect();
        all.extend(layer.iter().cloned());
    }
    let mut out: Vec<Vec<i64>> = all.into_iter().collect();
    out.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    out
}

fn root_lengths(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut len: Vec<Option<Q>> = vec![None; n];
    len[0] = Some(Q::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && len[j].is_none() {
                len[j] = Some(len[i].unwrap() * Q::new(cartan[i][j], cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let len: Vec<Q> = len.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = *len.iter().min().unwrap();
    len.into_iter()
        .map(|x| {
            let r = x / min;
            debug_assert!(r.is_integer());
            r.to_integer()
        })
        .collect()
}

/// The untwisted affinization of a finite root datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineDatum {
    finite: RootDatum,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    dual_marks: Vec<i64>,
    marks: Vec<i64>,
}

impl AffineDatum {
    pub fn new(finite: RootDatum) -> Self {
        let n = finite.rank;
        let av = finite.dual_marks.clone();
        let mut simple_roots = Vec::with_capacity(n + 1);
        let mut alpha0 = vec![2];
        alpha0.extend(finite.highest_root_h.iter().map(|x| -x));
        simple_roots.push(Weight::new(alpha0, 1));
        for j in 0..n {
            let col: Vec<i64> = (0..n).map(|i| finite.cartan[i][j]).collect();
            let h0 = -(0..n).map(|i| av[i] * col[i]).sum::<i64>();
            let mut h = vec![h0];
            h.extend(col);
            simple_roots.push(Weight::new(h, 0));
        }
        let cartan = (0..=n)
            .map(|i| (0..=n).map(|j| simple_roots[j].h[i]).collect())
            .collect();
        let mut dual_marks = vec![1];
        dual_marks.extend(av);
        let mut marks = vec![1];
        marks.extend(finite.highest_root.iter().copied());
        Self {
            finite,
            cartan,
            simple_roots,
            dual_marks,
            marks,
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(RootDatum::from_label(label)?.affinize())
    }

    pub fn finite(&self) -> &RootDatum {
        &self.finite
    }

    pub fn rank(&self) -> usize {
        self.finite.rank
    }

    /// Extended Cartan matrix over `Î`, node 0 first.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Dual marks `a^∨_i`, `i ∈ Î`, with `a^∨_0 = 1`.
    pub fn dual_marks(&self) -> &[i64] {
        &self.dual_marks
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn delta(&self) -> Weight {
        Weight::new(vec![0; self.rank() + 1], 1)
    }

    /// Fundamental weight `Λ_i`, `i ∈ Î`.
    pub fn fundamental(&self, i: usize) -> Result<Weight> {
        let p = self.position(i)?;
        let mut h = vec![0; self.rank() + 1];
        h[p] = 1;
        Ok(Weight::new(h, 0))
    }

    /// Embeds a classical weight with `λ(h_0) = −λ(h_θ)` and grade 0.
    pub fn embed_classical(&self, lambda: &Weight) -> Result<Weight> {
        self.finite.check_weight(lambda)?;
        let h_theta: i64 = self
            .finite
            .dual_marks
            .iter()
            .zip(&lambda.h)
            .map(|(a, x)| a * x)
            .sum();
        let mut h = vec![-h_theta];
        h.extend(lambda.h.iter().copied());
        Ok(Weight::new(h, 0))
    }

    /// Drops `h_0`; the grade is returned separately by callers that need it.
    pub fn restrict_classical(&self, mu: &Weight) -> Weight {
        Weight::classical(mu.h[1..].to_vec())
    }

    /// `ℓΛ_0 + λ + mδ` for a classical `λ`.
    pub fn affine_weight(&self, level: i64, lambda: &Weight, grade: i64) -> Result<Weight> {
        let mut w = self.embed_classical(lambda)?;
        w.h[0] += level;
        w.d = grade;
        Ok(w)
    }
}

impl Datum for AffineDatum {
    fn name(&self) -> String {
        format!("{}^(1)", self.finite.label())
    }

    fn first_index(&self) -> usize {
        0
    }

    fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    fn level(&self, mu: &Weight) -> Option<i64> {
        Some(self.dual_marks.iter().zip(&mu.h).map(|(a, x)| a * x).sum())
    }

    fn root_coordinates(&self, beta: &Weight) -> Option<Vec<Q>> {
        if beta.h.len() != self.rank() + 1 {
            return None;
        }
        let n0 = beta.d;
        let rest = beta.add_scaled(-n0, &self.simple_roots[0]);
        let v: Vec<Q> = rest.h[1..].iter().map(|&x| Q::from_integer(x)).collect();
        let n = solve_rational(&self.finite.cartan, &v)?;
        let h0: Q = n
            .iter()
            .enumerate()
            .map(|(k, x)| *x * Q::from_integer(self.simple_roots[k + 1].h[0]))
            .fold(Q::zero(), |a, b| a + b);
        if h0 != Q::from_integer(rest.h[0]) {
            return None;
        }
        let mut out = vec![Q::from_integer(n0)];
        out.extend(n);
        Some(out)
    }
}

/// The short-root subdatum `g_sh` together with its restriction and
/// section maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortEmbedding {
    full: RootDatum,
    sub: RootDatum,
    nodes: Vec<usize>,
}

impl ShortEmbedding {
    fn new(full: &RootDatum) -> Result<Self> {
        if full.is_simply_laced() {
            return Err(Error::SimplyLaced(full.label()));
        }
        let nodes: Vec<usize> = full
            .indices()
            .filter(|&i| full.is_short(i).unwrap())
            .collect();
        let sub = RootDatum::build(Series::A, nodes.len())?;
        for (a, &i) in nodes.iter().enumerate() {
            for (b, &j) in nodes.iter().enumerate() {
                debug_assert_eq!(sub.cartan[a][b], full.cartan[i - 1][j - 1]);
            }
        }
        Ok(Self {
            full: full.clone(),
            sub,
            nodes,
        })
    }

    pub fn full(&self) -> &RootDatum {
        &self.full
    }

    pub fn sub(&self) -> &RootDatum {
        &self.sub
    }

    /// `I_sh` as labels of the full datum, ascending.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// `λ ↦ λ̄`.
    pub fn restrict(&self, lambda: &Weight) -> Result<Weight> {
        self.full.check_weight(lambda)?;
        Ok(Weight::classical(
            self.nodes.iter().map(|&i| lambda.h[i - 1]).collect(),
        ))
    }

    /// `i_sh` on the subdatum's weight space, with rational values.
    pub fn section_rational(&self, mu: &Weight) -> Result<Vec<Q>> {
        self.sub.check_weight(mu)?;
        let coords = self
            .sub
            .root_coordinates(mu)
            .expect("finite Cartan matrix is invertible");
        let mut out = vec![Q::zero(); self.full.rank];
        for (k, &i) in self.nodes.iter().enumerate() {
            let alpha = &self.full.simple_roots[i - 1];
            for (o, &a) in out.iter_mut().zip(&alpha.h) {
                *o += coords[k] * Q::from_integer(a);
            }
        }
        Ok(out)
    }

    /// `i_sh` on the subdatum's root lattice.
    pub fn section(&self, mu: &Weight) -> Result<Weight> {
        let q = self.section_rational(mu)?;
        let coords = self.sub.root_coordinates(mu).unwrap();
        if !coords.iter().all(|x| x.is_integer()) {
            return Err(Error::NotInRootLattice(mu.to_string()));
        }
        Ok(Weight::classical(q.iter().map(|x| x.to_integer()).collect()))
    }

    /// `η_λ(μ) = λ − Σ m_i α_i` where `μ = λ̄ − Σ m_i ᾱ_i`.
    pub fn eta_lambda(&self, lambda: &Weight, mu: &Weight) -> Result<Weight> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        self.sub.check_weight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let bar = self.restrict(lambda)?;
        let not_below = || Error::NotBelow {
            mu: mu.to_string(),
            lambda: bar.to_string(),
        };
        let m = self.sub.root_coordinates(&(&bar - mu)).ok_or_else(not_below)?;
        if !m.iter().all(|x| x.is_integer() && *x >= Q::zero()) {
            return Err(not_below());
        }
        let mut out = lambda.clone();
        for (k, &i) in self.nodes.iter().enumerate() {
            out = out.add_scaled(-m[k].to_integer(), &self.full.simple_roots[i - 1]);
        }
        Ok(out)
    }
}
