//! Images of indexed structural modules under translation, Zuckerman,
//! twisting/shuffling and Koszul-Ringel functors, computed at the index level.
//!
//! Grading conventions: `M⟨b⟩` adds `b` to the internal shift, `M[a]` adds `a`
//! to the homological shift. The dominant index is `e`, so `Δ(e)` is
//! projective and `Δ(w0) = L(w0)`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::blocks::{coinvariant_profile, BlockDescriptor};
use crate::coxeter::{CartanDatum, ParabolicSubset, WeylElement};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModuleKind {
    Simple,
    Standard,
    Costandard,
    Projective,
    Injective,
    Tilting,
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for ModuleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "simple" | "l" => ModuleKind::Simple,
            "standard" | "delta" => ModuleKind::Standard,
            "costandard" | "nabla" => ModuleKind::Costandard,
            "projective" | "p" => ModuleKind::Projective,
            "injective" | "i" => ModuleKind::Injective,
            "tilting" | "t" => ModuleKind::Tilting,
            _ => return Err(Error::Parse(format!("unknown module kind `{s}`"))),
        })
    }
}

/// A structural module `K(x·λ)⟨shift⟩[hshift]` of a block.
#[derive(Clone, PartialEq, Eq)]
pub struct IndexedModule {
    pub block: BlockDescriptor,
    pub kind: ModuleKind,
    pub index: WeylElement,
    pub shift: i64,
    pub hshift: i64,
}

impl fmt::Debug for IndexedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({:?})<{}>[{}] in {:?}",
            self.kind,
            self.block.cartan().reduced_word(&self.index),
            self.shift,
            self.hshift,
            self.block
        )
    }
}

impl IndexedModule {
    /// Unshifted module; fails unless `index ∈ X_λ^μ`.
    pub fn new(block: BlockDescriptor, kind: ModuleKind, index: WeylElement) -> Result<Self> {
        block.require(&index)?;
        Ok(IndexedModule { block, kind, index, shift: 0, hshift: 0 })
    }

    /// `M⟨b⟩`.
    pub fn grade(mut self, b: i64) -> Self {
        self.shift += b;
        self
    }

    /// `M[a]`.
    pub fn hom_shift(mut self, a: i64) -> Self {
        self.hshift += a;
        self
    }

    pub fn word(&self) -> Vec<usize> {
        self.block.cartan().reduced_word(&self.index)
    }

    /// True when the index is Bruhat-maximal in `X_λ^μ`, so that `Δ^μ(x·λ)` is simple.
    pub fn standard_is_simple(&self) -> Result<bool> {
        let c = self.block.cartan();
        for y in &self.block.simple_index_set()?.elements {
            if y != &self.index && c.bruhat_leq(&self.index, y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A summand `Id⟨shift⟩[hshift]` of an endofunctor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdentityShift {
    pub shift: i64,
    pub hshift: i64,
}

/// Finite direct sum with positive multiplicities; equal entries are merged.
/// The empty multiset is the zero object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMultiset<T> {
    entries: Vec<(T, u64)>,
}

impl<T> Default for GradedMultiset<T> {
    fn default() -> Self {
        GradedMultiset { entries: Vec::new() }
    }
}

impl<T: PartialEq> GradedMultiset<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(item: T) -> Self {
        GradedMultiset { entries: vec![(item, 1)] }
    }

    pub fn add(&mut self, item: T, mult: u64) {
        if mult == 0 {
            return;
        }
        match self.entries.iter_mut().find(|(t, _)| *t == item) {
            Some((_, m)) => *m += mult,
            None => self.entries.push((item, mult)),
        }
    }

    pub fn entries(&self) -> &[(T, u64)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, item: &T) -> u64 {
        self.entries.iter().find(|(t, _)| t == item).map_or(0, |(_, m)| *m)
    }

    /// Equality as multisets, ignoring entry order.
    pub fn same_as(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len() && self.entries.iter().all(|(t, m)| other.multiplicity(t) == *m)
    }
}

impl<T: PartialEq> FromIterator<(T, u64)> for GradedMultiset<T> {
    fn from_iter<I: IntoIterator<Item = (T, u64)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (t, m) in iter {
            out.add(t, m);
        }
        out
    }
}

impl GradedMultiset<IdentityShift> {
    /// Apply a sum of shifted identity functors to one module.
    pub fn apply_to(&self, m: &IndexedModule) -> GradedMultiset<IndexedModule> {
        self.entries.iter().map(|(s, k)| (m.clone().grade(s.shift).hom_shift(s.hshift), *k)).collect()
    }
}

fn lw0(cartan: &CartanDatum, j: &ParabolicSubset) -> Result<i64> {
    Ok(cartan.longest_element(j)?.length() as i64)
}

/// `θ^on_λ Δ^μ(x)` from the regular block `source = (∅, μ)`:
/// `Δ^μ(b1·λ)⟨l(b2) - l(w0^λ)⟩` when `b1 ∈ X^μ`, else zero, where `x = b1 b2`
/// with `b1` longest in `x W_λ`.
pub fn translate_onto_wall_standard(
    x: &WeylElement,
    source: &BlockDescriptor,
    target_lambda: &ParabolicSubset,
) -> Result<GradedMultiset<IndexedModule>> {
    if !source.lambda().is_empty() {
        return Err(Error::InvalidArgument("source block must be regular".into()));
    }
    source.require(x)?;
    let c = source.cartan();
    let target = BlockDescriptor::new(c.clone(), target_lambda.clone(), source.mu().clone())?;
    let (b1, b2) = c.decompose_right(x, target_lambda)?;
    if !target.contains(&b1) {
        return Ok(GradedMultiset::zero());
    }
    let shift = b2.length() as i64 - lw0(c, target_lambda)?;
    Ok(GradedMultiset::single(IndexedModule::new(target, ModuleKind::Standard, b1)?.grade(shift)))
}

/// `θ^out_λ Δ^μ(x·λ)` together with the `u ∈ W_λ` whose `xu` left `X^μ`.
#[derive(Clone, Debug)]
pub struct OutOfWallImage {
    pub image: GradedMultiset<IndexedModule>,
    pub violations: Vec<WeylElement>,
}

/// Standard flag of `θ^out_λ Δ^μ(x·λ)`: `Δ^μ(xu)⟨l(u)⟩` once for each `u ∈ W_λ`.
pub fn translate_out_of_wall_standard(x: &WeylElement, block: &BlockDescriptor) -> Result<OutOfWallImage> {
    block.require(x)?;
    let c = block.cartan();
    let regular = BlockDescriptor::new(c.clone(), ParabolicSubset::empty(), block.mu().clone())?;
    let mut image = GradedMultiset::zero();
    let mut violations = Vec::new();
    for u in c.parabolic_elements(block.lambda())? {
        let xu = c.mul(x, &u);
        if regular.contains(&xu) {
            image.add(IndexedModule::new(regular.clone(), ModuleKind::Standard, xu)?.grade(u.length() as i64), 1);
        } else {
            violations.push(u);
        }
    }
    Ok(OutOfWallImage { image, violations })
}

/// `θ^on_λ L(x)`: `L(x·λ)⟨-l(w0^λ)⟩` for `x ∈ X_λ`, else zero. The result lives in the
/// block `(λ, μ)`; zero is also returned when `x ∉ X^μ` there.
pub fn translate_onto_wall_simple(
    x: &WeylElement,
    source: &BlockDescriptor,
    target_lambda: &ParabolicSubset,
) -> Result<GradedMultiset<IndexedModule>> {
    let c = source.cartan();
    let target = BlockDescriptor::new(c.clone(), target_lambda.clone(), source.mu().clone())?;
    if !target.contains(x) {
        return Ok(GradedMultiset::zero());
    }
    let shift = -lw0(c, target_lambda)?;
    Ok(GradedMultiset::single(IndexedModule::new(target, ModuleKind::Simple, x.clone())?.grade(shift)))
}

/// `θ^on_λ θ^out_λ ≅ ⊕_j Id^{c_j}⟨j - l(w0^λ)⟩`, `c_j` the coinvariant dimensions.
pub fn wall_crossing_decomposition(
    cartan: &CartanDatum,
    target_lambda: &ParabolicSubset,
) -> Result<GradedMultiset<IdentityShift>> {
    let top = lw0(cartan, target_lambda)?;
    let profile = coinvariant_profile(cartan, target_lambda)?;
    Ok(profile.terms().map(|(j, c)| (IdentityShift { shift: j - top, hshift: 0 }, c)).collect())
}

/// `𝓛Z^μ ∘ ı^μ ≅ ⊕_j Id^{c_j}[j]⟨j⟩`.
pub fn zuckerman_inclusion_decomposition(
    cartan: &CartanDatum,
    mu: &ParabolicSubset,
) -> Result<GradedMultiset<IdentityShift>> {
    let profile = coinvariant_profile(cartan, mu)?;
    Ok(profile.terms().map(|(j, c)| (IdentityShift { shift: j, hshift: j }, c)).collect())
}

/// Derived Zuckerman functor on a standard module of `O_λ`:
/// `𝓛_k Z^μ Δ(x·λ) = δ_{k,l(x1)} Δ^μ(x^1·λ)` when `x^1 ∈ X_λ`, where `x = x1 x^1`
/// with `x1 ∈ W_μ`. Returns the degree `k` and the image; on vanishing the
/// image is empty (and `k` is reported as 0).
pub fn derived_zuckerman_standard(
    cartan: &Arc<CartanDatum>,
    x: &WeylElement,
    lambda: &ParabolicSubset,
    mu: &ParabolicSubset,
) -> Result<(usize, GradedMultiset<IndexedModule>)> {
    let singular = BlockDescriptor::new(cartan.clone(), lambda.clone(), ParabolicSubset::empty())?;
    singular.require(x)?;
    let target = BlockDescriptor::new(cartan.clone(), lambda.clone(), mu.clone())?;
    let (x1, xsup) = cartan.decompose_left(x, mu)?;
    if !target.contains(&xsup) {
        return Ok((0, GradedMultiset::zero()));
    }
    Ok((x1.length(), GradedMultiset::single(IndexedModule::new(target, ModuleKind::Standard, xsup)?)))
}

fn validated(block: BlockDescriptor, kind: ModuleKind, index: WeylElement, what: &str) -> Result<IndexedModule> {
    if !block.contains(&index) {
        return Err(Error::InternalInvariantViolation(format!(
            "{what} index {:?} is outside {:?}",
            block.cartan().reduced_word(&index),
            block
        )));
    }
    Ok(IndexedModule { block, kind, index, shift: 0, hshift: 0 })
}

/// Ringel duality on standards: `Δ^μ(x·λ) ↦ ∇^{ŵμ}(w0 w0^μ x w0^λ · λ)` in `(λ, ŵμ)`.
pub fn ringel_image_standard(x: &WeylElement, block: &BlockDescriptor) -> Result<IndexedModule> {
    block.require(x)?;
    let c = block.cartan();
    let dual = block.ringel_dual_block()?.block;
    let idx = c.product(&[&c.longest(), &c.longest_element(block.mu())?, x, &c.longest_element(block.lambda())?]);
    validated(dual, ModuleKind::Costandard, idx, "Ringel image")
}

/// The other Ringel realization: `Δ^μ(x·λ) ↦ ∇^μ(w0^μ x w0^λ w0 · ŵλ)` in `(ŵλ, μ)`.
pub fn coringel_image_standard(x: &WeylElement, block: &BlockDescriptor) -> Result<IndexedModule> {
    block.require(x)?;
    let c = block.cartan();
    let dual = block.ringel_dual_block()?.alternative;
    let idx = c.product(&[&c.longest_element(block.mu())?, x, &c.longest_element(block.lambda())?, &c.longest()]);
    validated(dual, ModuleKind::Costandard, idx, "coRingel image")
}

/// `𝓛T_{w0} Δ^μ(x·λ) ≅ ∇^{ŵμ}(w0 w0^μ x w0^λ·λ)[l(w0^μ)]`.
pub fn derived_twist_standard(x: &WeylElement, block: &BlockDescriptor) -> Result<IndexedModule> {
    let shift = lw0(block.cartan(), block.mu())?;
    Ok(ringel_image_standard(x, block)?.hom_shift(shift))
}

/// `𝓛C_{w0} θ^out_λ Δ^μ(x·λ) ≅ θ^out_{ŵλ} ∇^μ(w0^μ x w0^λ w0·ŵλ)[l(w0^μ)]`.
///
/// The returned module is the argument of `θ^out_{ŵλ}`; `outer_lambda` records that subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffledStandard {
    pub outer_lambda: ParabolicSubset,
    pub inner: IndexedModule,
}

pub fn shuffle_translated_standard(x: &WeylElement, block: &BlockDescriptor) -> Result<ShuffledStandard> {
    let shift = lw0(block.cartan(), block.mu())?;
    let inner = coringel_image_standard(x, block)?.hom_shift(shift);
    Ok(ShuffledStandard { outer_lambda: inner.block.lambda().clone(), inner })
}

/// Koszul-Ringel map `Φ^μ_λ` from block `(λ, μ)` to `(μ, λ)`, index `x ↦ w0^λ x⁻¹ w0^μ`:
/// tilting and simple modules swap, and so do standard and costandard ones.
pub fn koszul_ringel_phi(m: &IndexedModule) -> Result<IndexedModule> {
    if m.shift != 0 || m.hshift != 0 {
        return Err(Error::InvalidArgument("Φ is tabulated for unshifted modules only".into()));
    }
    let kind = match m.kind {
        ModuleKind::Tilting => ModuleKind::Simple,
        ModuleKind::Simple => ModuleKind::Tilting,
        ModuleKind::Costandard => ModuleKind::Standard,
        ModuleKind::Standard => ModuleKind::Costandard,
        k @ (ModuleKind::Projective | ModuleKind::Injective) => return Err(Error::UnsupportedKind(k.to_string())),
    };
    m.block.require(&m.index)?;
    let b = &m.block;
    let c = b.cartan();
    let target = BlockDescriptor::new(c.clone(), b.mu().clone(), b.lambda().clone())?;
    let idx = c.product(&[&c.longest_element(b.lambda())?, &c.inv(&m.index), &c.longest_element(b.mu())?]);
    validated(target, kind, idx, "Koszul-Ringel image")
}

/// Applicability of the `ν`-conjugation equivalences
/// `D^b(O_λ^μ) ≅ D^b(O_λ^{μ'})` and `D^b(O_λ^μ) ≅ D^b(O_{λ'}^μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremDReport {
    pub nu: ParabolicSubset,
    pub nu_dagger: ParabolicSubset,
    pub nu_is_type_a: bool,
    /// `W_μ ⊆ W_ν × W_ν^†`.
    pub mu_contained: bool,
    /// `W_λ ⊆ W_ν × W_ν^†`.
    pub lambda_contained: bool,
    pub mu_prime: Option<ParabolicSubset>,
    pub lambda_prime: Option<ParabolicSubset>,
    /// `(λ, μ')` when part (i) applies.
    pub mu_equivalent_block: Option<BlockDescriptor>,
    /// `(λ', μ)` when part (ii) applies.
    pub lambda_equivalent_block: Option<BlockDescriptor>,
    /// `s_i ↦ w0^ν s_i w0^ν` for `i ∈ ν ∪ ν^†`.
    pub dictionary: Vec<(usize, usize)>,
}

impl TheoremDReport {
    pub fn part_i_applies(&self) -> bool {
        self.mu_prime.is_some()
    }

    pub fn part_ii_applies(&self) -> bool {
        self.lambda_prime.is_some()
    }
}

pub fn theorem_d_check(
    cartan: &Arc<CartanDatum>,
    nu: &ParabolicSubset,
    lambda: &ParabolicSubset,
    mu: &ParabolicSubset,
) -> Result<TheoremDReport> {
    for j in [nu, lambda, mu] {
        cartan.check_subset(j)?;
    }
    let nu_dagger = cartan.orthogonal_complement(nu)?;
    let nu_is_type_a = cartan.is_type_a_subset(nu)?;
    let ambient = nu.union(&nu_dagger);
    let mu_contained = mu.is_subset(&ambient);
    let lambda_contained = lambda.is_subset(&ambient);
    let w0nu = cartan.longest_element(nu)?;
    let mu_prime = if nu_is_type_a && mu_contained { Some(cartan.conjugate_subset(mu, &w0nu)?) } else { None };
    let lambda_prime =
        if nu_is_type_a && lambda_contained { Some(cartan.conjugate_subset(lambda, &w0nu)?) } else { None };
    let mut dictionary = Vec::new();
    for i in ambient.indices() {
        let image = cartan.conjugate_subset(&ParabolicSubset::new([i]), &w0nu)?;
        dictionary.push((i, image.indices().next().expect("conjugate of a singleton")));
    }
    let block = |l: &ParabolicSubset, m: &ParabolicSubset| BlockDescriptor::new(cartan.clone(), l.clone(), m.clone());
    Ok(TheoremDReport {
        mu_equivalent_block: mu_prime.as_ref().map(|m| block(lambda, m)).transpose()?,
        lambda_equivalent_block: lambda_prime.as_ref().map(|l| block(l, mu)).transpose()?,
        nu: nu.clone(),
        nu_dagger,
        nu_is_type_a,
        mu_contained,
        lambda_contained,
        mu_prime,
        lambda_prime,
        dictionary,
    })
}

/// `T^μ(x) ≅ θ_y L(w0^μ w0)` with `y = w0 w0^μ x`, in the regular parabolic block `(∅, μ)`.
/// Here `θ_y` is the indecomposable projective functor sending `P(e)` to `P(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingViaTheta {
    pub y: WeylElement,
    pub base: IndexedModule,
}

pub fn tilting_via_theta(cartan: &Arc<CartanDatum>, x: &WeylElement, mu: &ParabolicSubset) -> Result<TiltingViaTheta> {
    let block = BlockDescriptor::new(cartan.clone(), ParabolicSubset::empty(), mu.clone())?;
    block.require(x)?;
    let w0mu = cartan.longest_element(mu)?;
    let y = cartan.product(&[&cartan.longest(), &w0mu, x]);
    let base = IndexedModule::new(block, ModuleKind::Simple, cartan.mul(&w0mu, &cartan.longest()))?;
    Ok(TiltingViaTheta { y, base })
}
