//! Littelmann paths realising highest-weight crystals and their Demazure
//! subsets.
//!
//! A path is a piecewise-linear map `[0,1] → P̂ ⊗ Q` starting at 0, stored as
//! a list of segments. Two paths are equal when their sequences of
//! displacement vectors agree after merging collinear neighbours, so
//! equality does not depend on the parametrisation.
//!
//! Root operators follow the usual construction: with `h(t) = ⟨π(t), h_i⟩`
//! and `m = min h`, the operator `f_i` reflects the piece of the path
//! between the last time `h = m` and the following first time `h = m + 1`,
//! and translates the rest by `−α_i`. `e_i` is the mirror construction.
//! Since `h` is piecewise linear, all minima are attained at breakpoints.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use num_traits::{One, Signed, Zero};

use crate::charring::FormalCharacter;
use crate::error::{Error, Result};
use crate::root_data::{AffineDatum, Datum, Q};
use crate::weight::{Weight, WeylWord};

/// A weight with rational coordinates: values on `h_i` followed by the value on `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatWeight {
    pub h: Vec<Q>,
    pub d: Q,
}

impl RatWeight {
    pub fn zero(len: usize) -> Self {
        Self {
            h: vec![Q::zero(); len],
            d: Q::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero() && self.h.iter().all(Q::is_zero)
    }

    fn scale(&self, k: Q) -> Self {
        Self {
            h: self.h.iter().map(|x| *x * k).collect(),
            d: self.d * k,
        }
    }

    fn add(&self, other: &RatWeight) -> Self {
        Self {
            h: self.h.iter().zip(&other.h).map(|(a, b)| *a + *b).collect(),
            d: self.d + other.d,
        }
    }

    fn add_integral(&self, k: Q, w: &Weight) -> Self {
        Self {
            h: self
                .h
                .iter()
                .zip(&w.h)
                .map(|(a, &b)| *a + k * Q::from_integer(b))
                .collect(),
            d: self.d + k * Q::from_integer(w.d),
        }
    }

    /// `Some(c)` with `c > 0` if `other = c · self`.
    fn positive_ratio(&self, other: &RatWeight) -> Option<Q> {
        let (k, x) = self
            .h
            .iter()
            .chain(std::iter::once(&self.d))
            .enumerate()
            .find(|(_, x)| !x.is_zero())?;
        let y = if k < self.h.len() { other.h[k] } else { other.d };
        let c = y / *x;
        if c.is_positive() && self.scale(c) == *other {
            Some(c)
        } else {
            None
        }
    }

    pub fn to_weight(&self) -> Option<Weight> {
        if self.d.is_integer() && self.h.iter().all(Q::is_integer) {
            Some(Weight::new(
                self.h.iter().map(Q::to_integer).collect(),
                self.d.to_integer(),
            ))
        } else {
            None
        }
    }
}

impl From<&Weight> for RatWeight {
    fn from(w: &Weight) -> Self {
        Self {
            h: w.h.iter().map(|&x| Q::from_integer(x)).collect(),
            d: Q::from_integer(w.d),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub direction: RatWeight,
    pub duration: Q,
}

impl Segment {
    fn displacement(&self) -> RatWeight {
        self.direction.scale(self.duration)
    }
}

#[derive(Clone, Debug)]
pub struct LSPath {
    segments: Vec<Segment>,
    key: Vec<RatWeight>,
}

impl PartialEq for LSPath {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for LSPath {}

impl Hash for LSPath {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl PartialOrd for LSPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LSPath {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl LSPath {
    /// Builds a path in canonical form: zero segments dropped, consecutive
    /// positively proportional segments merged.
    pub fn from_segments(segments: Vec<Segment>) -> Self {
        let mut out: Vec<Segment> = Vec::with_capacity(segments.len());
        for s in segments {
            if s.duration.is_zero() || s.direction.is_zero() {
                continue;
            }
            if let Some(last) = out.last_mut() {
                if last.direction.positive_ratio(&s.direction).is_some() {
                    let total = last.duration + s.duration;
                    let disp = last.displacement().add(&s.displacement());
                    last.direction = disp.scale(Q::one() / total);
                    last.duration = total;
                    continue;
                }
            }
            out.push(s);
        }
        let key = out.iter().map(Segment::displacement).collect();
        Self { segments: out, key }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Displacement vectors of the canonical segments.
    pub fn displacements(&self) -> &[RatWeight] {
        &self.key
    }

    pub fn endpoint(&self, len: usize) -> RatWeight {
        self.key
            .iter()
            .fold(RatWeight::zero(len), |acc, v| acc.add(v))
    }

    /// `wt(π) = π(1)`.
    pub fn weight(&self, ad: &AffineDatum) -> Weight {
        self.endpoint(ad.num_nodes())
            .to_weight()
            .expect("crystal paths end at integral weights")
    }

    /// Values of `⟨π(t), h_p⟩` at the breakpoints, starting with 0.
    fn coordinate_values(&self, p: usize) -> Vec<Q> {
        let mut out = Vec::with_capacity(self.key.len() + 1);
        let mut acc = Q::zero();
        out.push(acc);
        for v in &self.key {
            acc += v.h[p];
            out.push(acc);
        }
        out
    }

    /// `min_t ⟨π(t), h_i⟩`.
    pub fn min_coordinate(&self, ad: &AffineDatum, i: usize) -> Result<Q> {
        let p = ad.position(i)?;
        Ok(self
            .coordinate_values(p)
            .into_iter()
            .min()
            .expect("at least one breakpoint"))
    }
}

fn reflect_segment(seg: &Segment, alpha: &Weight, p: usize) -> Segment {
    let k = -seg.direction.h[p];
    Segment {
        direction: seg.direction.add_integral(k, alpha),
        duration: seg.duration,
    }
}

fn split(seg: &Segment, frac: Q) -> (Segment, Segment) {
    (
        Segment {
            direction: seg.direction.clone(),
            duration: seg.duration * frac,
        },
        Segment {
            direction: seg.direction.clone(),
            duration: seg.duration * (Q::one() - frac),
        },
    )
}

/// The path `t ↦ tΛ` realising the highest-weight element `b_Λ`.
pub fn straight_path(lambda: &Weight) -> Result<LSPath> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(LSPath::from_segments(vec![Segment {
        direction: lambda.into(),
        duration: Q::one(),
    }]))
}

/// `f̃_i π`, or `None` when `φ_i(π) = 0`.
pub fn root_op_f(ad: &AffineDatum, i: usize, path: &LSPath) -> Result<Option<LSPath>> {
    let p = ad.position(i)?;
    let alpha = &ad.simple_roots()[p];
    let hv = path.coordinate_values(p);
    let r = path.segments.len();
    let m = *hv.iter().min().unwrap();
    if hv[r] - m < Q::one() {
        return Ok(None);
    }
    let target = m + Q::one();
    let k0 = hv.iter().rposition(|x| *x == m).unwrap();
    let j = (k0..r)
        .find(|&j| hv[j + 1] >= target)
        .expect("h reaches m + 1 after its last minimum");
    let frac = (target - hv[j]) / (hv[j + 1] - hv[j]);
    let segs = &path.segments;
    let mut out: Vec<Segment> = segs[..k0].to_vec();
    out.extend(segs[k0..j].iter().map(|s| reflect_segment(s, alpha, p)));
    let (a, b) = split(&segs[j], frac);
    out.push(reflect_segment(&a, alpha, p));
    out.push(b);
    out.extend(segs[j + 1..].iter().cloned());
    Ok(Some(LSPath::from_segments(out)))
}

/// `ẽ_i π`, or `None` when `ε_i(π) = 0`.
pub fn root_op_e(ad: &AffineDatum, i: usize, path: &LSPath) -> Result<Option<LSPath>> {
    let p = ad.position(i)?;
    let alpha = &ad.simple_roots()[p];
    let hv = path.coordinate_values(p);
    let m = *hv.iter().min().unwrap();
    if m > -Q::one() {
        return Ok(None);
    }
    let target = m + Q::one();
    let k1 = hv.iter().position(|x| *x == m).unwrap();
    let j = (0..k1)
        .rev()
        .find(|&j| hv[j] >= target)
        .expect("h starts at 0 ≥ m + 1");
    let frac = (hv[j] - target) / (hv[j] - hv[j + 1]);
    let segs = &path.segments;
    let mut out: Vec<Segment> = segs[..j].to_vec();
    let (a, b) = split(&segs[j], frac);
    out.push(a);
    out.push(reflect_segment(&b, alpha, p));
    out.extend(segs[j + 1..k1].iter().map(|s| reflect_segment(s, alpha, p)));
    out.extend(segs[k1..].iter().cloned());
    Ok(Some(LSPath::from_segments(out)))
}

/// `(ε_i(π), φ_i(π))`.
pub fn eps_phi(ad: &AffineDatum, i: usize, path: &LSPath) -> Result<(i64, i64)> {
    let p = ad.position(i)?;
    let hv = path.coordinate_values(p);
    let m = *hv.iter().min().unwrap();
    if !m.is_integer() {
        return Err(Error::NonIntegralMin(m.to_string()));
    }
    let end = hv[hv.len() - 1];
    Ok(((-m).to_integer(), (end - m).to_integer()))
}

/// Concatenation `π_1 * π_2`, traversing each factor in half the time.
pub fn concat_paths(first: &LSPath, second: &LSPath) -> LSPath {
    let two = Q::from_integer(2);
    let half = Q::new(1, 2);
    let segs = first
        .segments
        .iter()
        .chain(&second.segments)
        .map(|s| Segment {
            direction: s.direction.scale(two),
            duration: s.duration * half,
        })
        .collect();
    LSPath::from_segments(segs)
}

/// The Demazure subset `B^σ(Λ) = F^σ b_Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSet {
    pub highest: Weight,
    pub word: WeylWord,
    paths: Vec<LSPath>,
}

impl PathSet {
    /// Paths in canonical order.
    pub fn paths(&self) -> &[LSPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn contains(&self, path: &LSPath) -> bool {
        self.paths.binary_search(path).is_ok()
    }
}

pub fn generate_demazure_set(ad: &AffineDatum, lambda: &Weight, w: &WeylWord) -> Result<PathSet> {
    ad.check_weight(lambda)?;
    let mut set = BTreeSet::new();
    set.insert(straight_path(lambda)?);
    for &i in w.letters().iter().rev() {
        let mut next = set.clone();
        for path in &set {
            let mut cur = path.clone();
            while let Some(f) = root_op_f(ad, i, &cur)? {
                next.insert(f.clone());
                cur = f;
            }
        }
        set = next;
    }
    Ok(PathSet {
        highest: lambda.clone(),
        word: w.clone(),
        paths: set.into_iter().collect(),
    })
}

/// `Σ_{π} e^{wt(π)}`.
pub fn crystal_character(ad: &AffineDatum, ps: &PathSet) -> FormalCharacter {
    FormalCharacter::from_terms(ps.paths.iter().map(|p| (p.weight(ad), 1)))
}

/// Elements `b` of `B^σ(Λ)` with `b_μ ⊗ b` killed by every `ẽ_i`, paired
/// with `μ + wt(b)`.
pub fn joseph_highest(
    ad: &AffineDatum,
    mu: &Weight,
    lambda: &Weight,
    w: &WeylWord,
) -> Result<Vec<(LSPath, Weight)>> {
    let head = straight_path(mu)?;
    let ps = generate_demazure_set(ad, lambda, w)?;
    let mut out = Vec::new();
    for b in ps.paths {
        let joined = concat_paths(&head, &b);
        let mut highest = true;
        for i in ad.indices() {
            if joined.min_coordinate(ad, i)? < Q::zero() {
                highest = false;
                break;
            }
        }
        if highest {
            let nu = mu + &b.weight(ad);
            out.push((b, nu));
        }
    }
    Ok(out)
}

/// Line-oriented dump of the `f̃`-edges inside a Demazure set.
///
/// Lines starting with `#` list `id weight`; every other line is
/// `source i target`.
pub fn export_f_graph(ad: &AffineDatum, ps: &PathSet) -> Result<String> {
    let ids: BTreeMap<&LSPath, usize> = ps.paths.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut out = String::new();
    for (k, p) in ps.paths.iter().enumerate() {
        writeln!(out, "# {k} {}", p.weight(ad)).unwrap();
    }
    for (k, p) in ps.paths.iter().enumerate() {
        for i in ad.indices() {
            if let Some(f) = root_op_f(ad, i, p)? {
                if let Some(t) = ids.get(&f) {
                    writeln!(out, "{k} {i} {t}").unwrap();
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::demazure_word_char;

    fn a1() -> AffineDatum {
        AffineDatum::from_label("A1").unwrap()
    }

    fn w(h: &[i64], d: i64) -> Weight {
        Weight::new(h.to_vec(), d)
    }

    #[test]
    fn straight_paths() {
        let ad = a1();
        for lam in [w(&[1, 0], 0), w(&[0, 1], 0), w(&[0, 2], 0)] {
            let p = straight_path(&lam).unwrap();
            assert_eq!(p.segments().len(), 1);
            assert_eq!(p.weight(&ad), lam);
            for i in ad.indices() {
                assert_eq!(eps_phi(&ad, i, &p).unwrap(), (0, lam.h[i]));
                assert_eq!(root_op_e(&ad, i, &p).unwrap(), None);
            }
        }
        assert!(matches!(
            straight_path(&w(&[2, -1], 0)),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn f_and_e_on_fundamental() {
        let ad = a1();
        let l1 = w(&[0, 1], 0);
        let b = straight_path(&l1).unwrap();
        let fb = root_op_f(&ad, 1, &b).unwrap().unwrap();
        let alpha1 = ad.simple_root(1).unwrap();
        let expected = LSPath::from_segments(vec![Segment {
            direction: (&(&l1 - alpha1)).into(),
            duration: Q::one(),
        }]);
        assert_eq!(fb, expected);
        assert_eq!(fb.weight(&ad), &l1 - alpha1);
        assert_eq!(root_op_f(&ad, 1, &fb).unwrap(), None);
        assert_eq!(eps_phi(&ad, 1, &fb).unwrap(), (1, 0));
        assert_eq!(root_op_e(&ad, 1, &fb).unwrap(), Some(b.clone()));

        let l0 = w(&[1, 0], 0);
        let b0 = straight_path(&l0).unwrap();
        assert_eq!(root_op_f(&ad, 1, &b0).unwrap(), None);
        let f0 = root_op_f(&ad, 0, &b0).unwrap().unwrap();
        assert_eq!(f0.weight(&ad), &l0 - ad.simple_root(0).unwrap());
    }

    #[test]
    fn demazure_sets_small() {
        let ad = a1();
        let l1 = w(&[0, 1], 0);
        let ps = generate_demazure_set(&ad, &l1, &WeylWord::empty()).unwrap();
        assert_eq!(ps.len(), 1);
        let ps = generate_demazure_set(&ad, &l1, &WeylWord(vec![1])).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(
            crystal_character(&ad, &ps),
            demazure_word_char(&ad, &WeylWord(vec![1]), &l1).unwrap()
        );
        let seed = w(&[1, 0], 1);
        let word = WeylWord(vec![1, 0]);
        let ps = generate_demazure_set(&ad, &seed, &word).unwrap();
        assert_eq!(ps.len(), 4);
        assert_eq!(
            crystal_character(&ad, &ps),
            demazure_word_char(&ad, &word, &seed).unwrap()
        );
    }

    #[test]
    fn crystal_axioms_on_demazure_sets() {
        let ad = AffineDatum::from_label("A2").unwrap();
        let lam = w(&[1, 1, 0], 0);
        let ps = generate_demazure_set(&ad, &lam, &WeylWord(vec![0, 2, 1, 0])).unwrap();
        for p in ps.paths() {
            let wt = p.weight(&ad);
            for i in ad.indices() {
                let (eps, phi) = eps_phi(&ad, i, p).unwrap();
                assert_eq!(phi - eps, wt.h[i]);
                if let Some(e) = root_op_e(&ad, i, p).unwrap() {
                    assert!(ps.contains(&e));
                    assert_eq!(e.weight(&ad), &wt + ad.simple_root(i).unwrap());
                    assert_eq!(root_op_f(&ad, i, &e).unwrap().as_ref(), Some(p));
                }
                if let Some(f) = root_op_f(&ad, i, p).unwrap() {
                    assert_eq!(root_op_e(&ad, i, &f).unwrap().as_ref(), Some(p));
                }
            }
        }
    }

    #[test]
    fn concatenation_adds_weights() {
        let ad = AffineDatum::from_label("A2").unwrap();
        let cases = [
            (w(&[1, 0, 0], 0), w(&[0, 1, 0], 0)),
            (w(&[0, 1, 1], 0), w(&[2, 0, 0], 1)),
            (w(&[1, 1, 1], 3), w(&[0, 0, 1], -1)),
        ];
        for (a, b) in cases {
            let p = concat_paths(&straight_path(&a).unwrap(), &straight_path(&b).unwrap());
            assert_eq!(p.weight(&ad), &a + &b);
            let total: Q = p.segments().iter().map(|s| s.duration).sum();
            assert_eq!(total, Q::one());
        }
        // collinear factors merge into a straight path
        let l = w(&[1, 1, 0], 0);
        let sp = straight_path(&l).unwrap();
        assert_eq!(concat_paths(&sp, &sp), straight_path(&(2 * &l)).unwrap());
    }

    #[test]
    fn joseph_examples() {
        let ad = a1();
        let l0 = w(&[1, 0], 0);
        let l1 = w(&[0, 1], 0);
        let out = joseph_highest(&ad, &l0, &l1, &WeylWord(vec![1])).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].0, straight_path(&l1).unwrap());
        assert_eq!(out[0].1, w(&[1, 1], 0));

        let out = joseph_highest(&ad, &l0, &l1, &WeylWord::empty()).unwrap();
        assert_eq!(out, vec![(straight_path(&l1).unwrap(), w(&[1, 1], 0))]);

        let seed = w(&[1, 0], 1);
        let out = joseph_highest(&ad, &l0, &seed, &WeylWord(vec![1, 0])).unwrap();
        let mut nus: Vec<Weight> = out.into_iter().map(|(_, nu)| nu).collect();
        nus.sort();
        // level-2 extremal representatives of D(2, 2ω, 0) and D(2, 0, 1)
        assert_eq!(nus, vec![w(&[0, 2], 0), w(&[2, 0], 1)]);
        assert!(nus.iter().all(Weight::is_dominant));
    }

    #[test]
    fn graph_export() {
        let ad = a1();
        let ps = generate_demazure_set(&ad, &w(&[1, 0], 1), &WeylWord(vec![1, 0])).unwrap();
        let g = export_f_graph(&ad, &ps).unwrap();
        let edges: Vec<&str> = g.lines().filter(|l| !l.starts_with('#')).collect();
        let nodes = g.lines().filter(|l| l.starts_with('#')).count();
        assert_eq!(nodes, 4);
        // b -f0-> x -f1-> y -f1-> z
        assert_eq!(edges.len(), 3);
    }
}
