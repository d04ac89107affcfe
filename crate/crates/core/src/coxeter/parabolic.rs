use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::cartan::{CartanDatum, Component, RootType};
use super::element::WeylElement;
use crate::error::{Error, Result};

/// A subset of the simple roots, by 1-based index. Generates the parabolic subgroup `W_J`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParabolicSubset(BTreeSet<usize>);

impl ParabolicSubset {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        ParabolicSubset(indices.into_iter().collect())
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full(rank: usize) -> Self {
        Self::new(1..=rank)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &ParabolicSubset) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &ParabolicSubset) -> ParabolicSubset {
        ParabolicSubset(self.0.union(&other.0).copied().collect())
    }

    /// Parse a comma separated list such as `1,3`; the empty string is the empty subset.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad simple index `{t}`"))))
            .collect::<Result<BTreeSet<_>>>()
            .map(ParabolicSubset)
    }

    /// Every subset of `{1..rank}`.
    pub fn all_subsets(rank: usize) -> Vec<ParabolicSubset> {
        (0u32..1 << rank).map(|mask| Self::new((1..=rank).filter(|i| mask & (1 << (i - 1)) != 0))).collect()
    }
}

impl fmt::Debug for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Which cosets: `Left` means `w W_J`, `Right` means `W_J w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CosetSide {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepFlavor {
    Shortest,
    Longest,
}

impl CartanDatum {
    pub fn check_subset(&self, j: &ParabolicSubset) -> Result<()> {
        for i in j.indices() {
            self.check_index(i)?;
        }
        Ok(())
    }

    /// Irreducible components of the sub-diagram on `J`.
    pub fn subsystem_components(&self, j: &ParabolicSubset) -> Result<Vec<Component>> {
        self.check_subset(j)?;
        let idx: Vec<usize> = j.indices().map(|i| i - 1).collect();
        Ok(self.classify_subdiagram(&idx))
    }

    pub fn is_type_a_subset(&self, j: &ParabolicSubset) -> Result<bool> {
        Ok(self.subsystem_components(j)?.iter().all(|c| c.kind == RootType::A))
    }

    /// |W_J|.
    pub fn parabolic_order(&self, j: &ParabolicSubset) -> Result<u128> {
        Ok(self.subsystem_components(j)?.iter().map(|c| c.kind.group_order(c.rank)).product())
    }

    /// All elements of `W_J`, sorted by length.
    pub fn parabolic_elements(&self, j: &ParabolicSubset) -> Result<Vec<WeylElement>> {
        self.check_cap(self.parabolic_order(j)?)?;
        let mut seen = HashSet::from([self.identity()]);
        let mut out = vec![self.identity()];
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(w) = queue.pop_front() {
            for i in j.indices() {
                let next = self.right_mul_simple(&w, i);
                if seen.insert(next.clone()) {
                    out.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        out.sort_by_key(|w| w.length());
        Ok(out)
    }

    /// `w_0^J`, the longest element of `W_J`.
    pub fn longest_element(&self, j: &ParabolicSubset) -> Result<WeylElement> {
        self.check_subset(j)?;
        Ok(self.longest_in(&j.to_vec()))
    }

    /// Whether `x` is the `flavor` representative of its `side` coset of `W_J`.
    pub fn is_coset_rep(&self, x: &WeylElement, j: &ParabolicSubset, side: CosetSide, flavor: RepFlavor) -> bool {
        let want = flavor == RepFlavor::Longest;
        j.indices().all(|i| {
            let descent = match side {
                CosetSide::Left => x.has_right_descent(i),
                CosetSide::Right => self.has_left_descent(x, i),
            };
            descent == want
        })
    }

    /// One representative per coset of `W_J` in `W`, sorted by length then canonical word.
    pub fn coset_reps(&self, j: &ParabolicSubset, side: CosetSide, flavor: RepFlavor) -> Result<Vec<WeylElement>> {
        self.check_subset(j)?;
        let g = self.group()?;
        let mut reps: Vec<WeylElement> = g
            .elements()
            .iter()
            .filter(|x| match side {
                CosetSide::Left => {
                    let want = flavor == RepFlavor::Longest;
                    j.indices().all(|i| x.has_right_descent(i) == want)
                }
                CosetSide::Right => {
                    let id = g.id_of(x).unwrap();
                    let want = flavor == RepFlavor::Longest;
                    j.indices().all(|i| g.is_left_descent(i, id) == want)
                }
            })
            .cloned()
            .collect();
        self.sort_canonical(&mut reps);
        Ok(reps)
    }

    /// Sort by length, then canonical reduced word.
    pub fn sort_canonical(&self, v: &mut [WeylElement]) {
        let mut keyed: BTreeMap<(usize, Vec<usize>), WeylElement> = BTreeMap::new();
        for w in v.iter() {
            keyed.insert((w.length(), self.reduced_word(w)), w.clone());
        }
        for (slot, w) in v.iter_mut().zip(keyed.into_values()) {
            *slot = w;
        }
    }

    /// `x = b1 b2` with `b1` the longest element of `x W_J` and `b2 ∈ W_J`.
    pub fn decompose_right(&self, x: &WeylElement, j: &ParabolicSubset) -> Result<(WeylElement, WeylElement)> {
        self.check_subset(j)?;
        let mut b1 = x.clone();
        while let Some(i) = j.indices().find(|&i| !b1.has_right_descent(i)) {
            b1 = self.right_mul_simple(&b1, i);
        }
        let b2 = self.mul(&self.inv(&b1), x);
        Ok((b1, b2))
    }

    /// `x = x1 x_sup` with `x1 ∈ W_J` and `x_sup` the shortest element of `W_J x`.
    pub fn decompose_left(&self, x: &WeylElement, j: &ParabolicSubset) -> Result<(WeylElement, WeylElement)> {
        self.check_subset(j)?;
        let mut sup = x.clone();
        while let Some(i) = j.indices().find(|&i| self.has_left_descent(&sup, i)) {
            sup = self.left_mul_simple(i, &sup);
        }
        let x1 = self.mul(x, &self.inv(&sup));
        Ok((x1, sup))
    }

    /// `Ĵ = { i' : alpha_{i'} = -w_0(alpha_i), i ∈ J }`.
    pub fn hat_subset(&self, j: &ParabolicSubset) -> Result<ParabolicSubset> {
        self.check_subset(j)?;
        let w0 = self.longest();
        let mut out = BTreeSet::new();
        for i in j.indices() {
            let img: Vec<i64> = self.act(&w0, &self.simple_root(i)).into_iter().map(|c| -c).collect();
            let k = self.simple_index_of(&img).ok_or_else(|| {
                Error::InternalInvariantViolation(format!("-w0(alpha_{i}) is not a simple root"))
            })?;
            out.insert(k + 1);
        }
        Ok(ParabolicSubset(out))
    }

    /// Simple indices outside `J` orthogonal to every root of the subsystem spanned by `J`.
    pub fn orthogonal_complement(&self, j: &ParabolicSubset) -> Result<ParabolicSubset> {
        self.check_subset(j)?;
        // roots of the J-subsystem are combinations of the alpha_j, so testing those suffices
        Ok(ParabolicSubset::new(
            (1..=self.rank()).filter(|&i| !j.contains(i) && j.indices().all(|k| self.bilinear_form().get(i - 1, k - 1) == 0)),
        ))
    }

    /// `J'` with `W_{J'} = w W_J w^{-1}`, when `w` maps each `alpha_i` (i ∈ J) to ± a simple root.
    pub fn conjugate_subset(&self, j: &ParabolicSubset, w: &WeylElement) -> Result<ParabolicSubset> {
        self.check_subset(j)?;
        let mut out = BTreeSet::new();
        for i in j.indices() {
            let img = self.act(w, &self.simple_root(i));
            let abs: Vec<i64> = if img.iter().sum::<i64>() < 0 { img.iter().map(|c| -c).collect() } else { img };
            let k = self.simple_index_of(&abs).ok_or(Error::NotStandardParabolic { index: i })?;
            out.insert(k + 1);
        }
        Ok(ParabolicSubset(out))
    }
}
