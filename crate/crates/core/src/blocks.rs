//! Block descriptors, their simple index sets, coinvariant Hilbert-Poincaré
//! polynomials and the type-A derived-equivalence classifier.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CartanDatum, ParabolicSubset, WeylElement};
use crate::error::{Error, Result};
use crate::poly::GradedPolynomial;

/// Identifies `O_λ^μ` up to equivalence by `(root system, B_λ, B_μ)`.
#[derive(Clone)]
pub struct BlockDescriptor {
    cartan: Arc<CartanDatum>,
    lambda: ParabolicSubset,
    mu: ParabolicSubset,
}

impl PartialEq for BlockDescriptor {
    fn eq(&self, other: &Self) -> bool {
        *self.cartan == *other.cartan && self.lambda == other.lambda && self.mu == other.mu
    }
}

impl Eq for BlockDescriptor {}

impl fmt::Debug for BlockDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Block({}, λ={}, μ={})", self.cartan.label(), self.lambda, self.mu)
    }
}

impl BlockDescriptor {
    pub fn new(cartan: Arc<CartanDatum>, lambda: ParabolicSubset, mu: ParabolicSubset) -> Result<Self> {
        cartan.check_subset(&lambda)?;
        cartan.check_subset(&mu)?;
        Ok(BlockDescriptor { cartan, lambda, mu })
    }

    /// The regular principal block `O_0`.
    pub fn principal(cartan: Arc<CartanDatum>) -> Self {
        BlockDescriptor { cartan, lambda: ParabolicSubset::empty(), mu: ParabolicSubset::empty() }
    }

    pub fn cartan(&self) -> &Arc<CartanDatum> {
        &self.cartan
    }

    pub fn lambda(&self) -> &ParabolicSubset {
        &self.lambda
    }

    pub fn mu(&self) -> &ParabolicSubset {
        &self.mu
    }

    pub(crate) fn with(&self, lambda: ParabolicSubset, mu: ParabolicSubset) -> Self {
        BlockDescriptor { cartan: self.cartan.clone(), lambda, mu }
    }

    /// `x ∈ X_λ`: longest in `x W_λ`.
    pub fn in_x_lambda(&self, x: &WeylElement) -> bool {
        self.lambda.indices().all(|i| x.has_right_descent(i))
    }

    /// `x ∈ X^μ`: shortest in `W_μ x`.
    pub fn in_x_upper_mu(&self, x: &WeylElement) -> bool {
        self.mu.indices().all(|i| !self.cartan.has_left_descent(x, i))
    }

    /// `x ∈ X_λ^μ`, the index set of simple modules in the block.
    pub fn contains(&self, x: &WeylElement) -> bool {
        x.matrix().dim() == self.cartan.rank() && self.in_x_lambda(x) && self.in_x_upper_mu(x)
    }

    pub(crate) fn require(&self, x: &WeylElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::IndexNotInBlock(format!("{:?} in {:?}", self.cartan.reduced_word(x), self)))
        }
    }

    pub fn simple_index_set(&self) -> Result<SimpleIndexSet> {
        let g = self.cartan.group()?;
        let mut elements: Vec<WeylElement> = g.elements().iter().filter(|x| self.contains(x)).cloned().collect();
        self.cartan.sort_canonical(&mut elements);
        Ok(SimpleIndexSet { block: self.clone(), elements })
    }

    /// Ringel dual `(λ, ŵμ)`, together with the equivalent realization `(ŵλ, μ)`.
    pub fn ringel_dual_block(&self) -> Result<RingelDual> {
        Ok(RingelDual {
            block: self.with(self.lambda.clone(), self.cartan.hat_subset(&self.mu)?),
            alternative: self.with(self.cartan.hat_subset(&self.lambda)?, self.mu.clone()),
        })
    }

    /// Koszul dual `(ŵμ, λ)`: the two subsets swap roles, the new singular one hatted.
    pub fn koszul_dual_block(&self) -> Result<BlockDescriptor> {
        Ok(self.with(self.cartan.hat_subset(&self.mu)?, self.lambda.clone()))
    }

    /// The block with both subsets replaced by their hats; equivalent to `self`
    /// through the diagram automorphism `-w0`.
    pub fn hatted(&self) -> Result<BlockDescriptor> {
        Ok(self.with(self.cartan.hat_subset(&self.lambda)?, self.cartan.hat_subset(&self.mu)?))
    }

    fn require_regular_type_a(&self) -> Result<()> {
        if !self.cartan.is_type_a() {
            return Err(Error::NotTypeA);
        }
        if !self.mu.is_empty() {
            return Err(Error::NotRegularParabolic);
        }
        Ok(())
    }

    /// Classifier data: one factor `S_{r+1}` per A_r component, with the
    /// composition read off the runs of `B_λ` along the component's path.
    pub fn classifier_spec(&self) -> Result<ClassifierSpec> {
        self.require_regular_type_a()?;
        let factors = self
            .cartan
            .components()
            .iter()
            .map(|c| ClassifierFactor { n: c.rank + 1, stabilizer: composition_along(&c.indices, &self.lambda) })
            .collect();
        Ok(ClassifierSpec { factors })
    }

    /// Hilbert-Poincaré polynomial of the centre `Z(A_λ) ≅ C^{W_λ}`, in the
    /// grading where `h` sits in degree 2.
    pub fn center_hp_regular(&self) -> Result<GradedPolynomial> {
        let spec = self.classifier_spec()?;
        spec.factors.iter().try_fold(GradedPolynomial::one(), |acc, f| {
            Ok(&acc * &hp_partial_flag(f.n, &f.stabilizer)?.substitute_power(2))
        })
    }
}

fn composition_along(path: &[usize], lambda: &ParabolicSubset) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut cur = 1;
    for &i in path {
        if lambda.contains(i) {
            cur += 1;
        } else {
            parts.push(cur);
            cur = 1;
        }
    }
    parts.push(cur);
    parts
}

/// `(λ, ŵμ)` and the alternative `(ŵλ, μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingelDual {
    pub block: BlockDescriptor,
    pub alternative: BlockDescriptor,
}

/// `X_λ^μ`, ordered by length and then canonical reduced word.
#[derive(Clone, Debug)]
pub struct SimpleIndexSet {
    pub block: BlockDescriptor,
    pub elements: Vec<WeylElement>,
}

impl SimpleIndexSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, x: &WeylElement) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }

    pub fn words(&self) -> Vec<Vec<usize>> {
        self.elements.iter().map(|w| self.block.cartan.reduced_word(w)).collect()
    }
}

/// `Σ_j dim C(W_J)_j z^j`, with `h` in degree 2; so `c_{2i}` counts elements of length `i`.
pub fn coinvariant_profile(cartan: &CartanDatum, j: &ParabolicSubset) -> Result<GradedPolynomial> {
    let mut p = GradedPolynomial::zero();
    for w in cartan.parabolic_elements(j)? {
        p.add_term(2 * w.length() as i64, 1);
    }
    Ok(p)
}

fn check_composition(n: usize, parts: &[usize]) -> Result<()> {
    if n == 0 || parts.is_empty() || parts.contains(&0) || parts.iter().sum::<usize>() != n {
        return Err(Error::NotAComposition { n, parts: parts.to_vec() });
    }
    Ok(())
}

/// Divide by `1 - z^l`; the division must be exact.
fn divide_one_minus(a: &[i128], l: usize) -> Vec<i128> {
    let mut q = vec![0i128; a.len()];
    for k in 0..a.len() {
        q[k] = a[k] + if k >= l { q[k - l] } else { 0 };
    }
    let keep = a.len() - l;
    assert!(q[keep..].iter().all(|&c| c == 0), "inexact division by 1 - z^{l}");
    q.truncate(keep);
    q
}

/// `∏_{i=1}^n (1 - z^i) / ∏_j ∏_{l=1}^{p_j} (1 - z^l)`, expanded.
pub fn hp_partial_flag(n: usize, parts: &[usize]) -> Result<GradedPolynomial> {
    check_composition(n, parts)?;
    let mut num = vec![1i128];
    for i in 1..=n {
        let mut next = vec![0i128; num.len() + i];
        for (d, &c) in num.iter().enumerate() {
            next[d] += c;
            next[d + i] -= c;
        }
        num = next;
    }
    for &p in parts {
        for l in 1..=p {
            num = divide_one_minus(&num, l);
        }
    }
    let mut out = GradedPolynomial::zero();
    for (d, &c) in num.iter().enumerate() {
        if c < 0 {
            return Err(Error::InternalInvariantViolation("negative Poincaré coefficient".into()));
        }
        out.add_term(d as i64, c as u64);
    }
    Ok(out)
}

/// One irreducible factor `X_i ≅ S_n` with its Young subgroup given by `stabilizer` parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassifierFactor {
    pub n: usize,
    pub stabilizer: Vec<usize>,
}

/// `W_Λ ≅ Π S_{n_i}` with the stabilizer of λ in each factor; JSON `[{"n":4,"stabilizer":[2,2]}]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassifierSpec {
    pub factors: Vec<ClassifierFactor>,
}

impl ClassifierSpec {
    pub fn validate(&self) -> Result<()> {
        for f in &self.factors {
            check_composition(f.n, &f.stabilizer)?;
        }
        Ok(())
    }

    /// Sorted multiset of `(n, sorted parts)`, dropping trivial `S_1` factors,
    /// which are not irreducible Weyl groups.
    pub fn normalized(&self) -> Vec<ClassifierFactor> {
        let mut v: Vec<ClassifierFactor> = self
            .factors
            .iter()
            .filter(|f| f.n > 1)
            .map(|f| {
                let mut parts = f.stabilizer.clone();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                ClassifierFactor { n: f.n, stabilizer: parts }
            })
            .collect();
        v.sort();
        v
    }

    /// HP polynomial of the centre of the corresponding regular block (degree-2 grading).
    pub fn center_hp(&self) -> Result<GradedPolynomial> {
        self.factors.iter().try_fold(GradedPolynomial::one(), |acc, f| {
            Ok(&acc * &hp_partial_flag(f.n, &f.stabilizer)?.substitute_power(2))
        })
    }

    /// A type-A block realizing this spec: `A_{n_1-1} x A_{n_2-1} x ...` with λ from the compositions.
    pub fn realize(&self) -> Result<BlockDescriptor> {
        self.validate()?;
        let factors: Vec<&ClassifierFactor> = self.factors.iter().filter(|f| f.n > 1).collect();
        if factors.is_empty() {
            return Err(Error::InvalidArgument("spec has no nontrivial factor".into()));
        }
        let label = factors.iter().map(|f| format!("A{}", f.n - 1)).collect::<Vec<_>>().join("x");
        let cartan = Arc::new(CartanDatum::from_type(&label)?);
        let mut lambda = Vec::new();
        let mut offset = 0;
        for f in &factors {
            let mut pos = offset;
            for &p in &f.stabilizer {
                lambda.extend(pos + 1..pos + p);
                pos += p;
            }
            offset += f.n - 1;
        }
        BlockDescriptor::new(cartan, ParabolicSubset::new(lambda), ParabolicSubset::empty())
    }
}

/// Gradable derived equivalence of type-A regular blocks: equal multisets of
/// `(n_i, Young subgroup type)` up to permuting factors.
pub fn classify_derived_equivalent(a: &ClassifierSpec, b: &ClassifierSpec) -> Result<bool> {
    a.validate()?;
    b.validate()?;
    Ok(a.normalized() == b.normalized())
}
