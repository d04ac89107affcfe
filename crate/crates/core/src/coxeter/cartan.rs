use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::group::WeylGroup;
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Default bound on the number of group elements any operation may enumerate (|S_8|).
pub const DEFAULT_CAP: usize = 40320;

/// Cartan-Killing type letter of an irreducible component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => RootType::A,
            'B' => RootType::B,
            'C' => RootType::C,
            'D' => RootType::D,
            'E' => RootType::E,
            'F' => RootType::F,
            'G' => RootType::G,
            _ => return None,
        })
    }

    fn valid_rank(self, rank: usize) -> bool {
        match self {
            RootType::A => rank >= 1,
            RootType::B | RootType::C => rank >= 2,
            RootType::D => rank >= 4,
            RootType::E => (6..=8).contains(&rank),
            RootType::F => rank == 4,
            RootType::G => rank == 2,
        }
    }

    /// Order of the Weyl group of the irreducible system of this type and rank.
    pub fn group_order(self, rank: usize) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            RootType::A => fact(rank + 1),
            RootType::B | RootType::C => (1u128 << rank) * fact(rank),
            RootType::D => (1u128 << (rank - 1)) * fact(rank),
            RootType::E => match rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            RootType::F => 1152,
            RootType::G => 12,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// An irreducible component of the Dynkin diagram.
///
/// `indices` are 1-based simple-root indices. For type A they are listed in
/// path order, so consecutive entries are joined by an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub kind: RootType,
    pub rank: usize,
    pub indices: Vec<usize>,
}

/// A finite crystallographic root system given by its Cartan matrix.
///
/// Roots are integer vectors in simple-root coordinates. The Cartan matrix
/// convention is `a_ij = <alpha_i^vee, alpha_j>`, so the simple reflection
/// `s_i` sends `beta` to `beta - (sum_j a_ij beta_j) alpha_i`.
pub struct CartanDatum {
    label: String,
    components: Vec<Component>,
    cartan: IntMatrix,
    form: IntMatrix,
    positive_roots: Vec<Vec<i64>>,
    root_lookup: HashMap<Vec<i64>, usize>,
    reflections: Vec<IntMatrix>,
    fingerprint: u64,
    cap: usize,
    group: OnceLock<WeylGroup>,
}

impl Clone for CartanDatum {
    fn clone(&self) -> Self {
        CartanDatum {
            label: self.label.clone(),
            components: self.components.clone(),
            cartan: self.cartan.clone(),
            form: self.form.clone(),
            positive_roots: self.positive_roots.clone(),
            root_lookup: self.root_lookup.clone(),
            reflections: self.reflections.clone(),
            fingerprint: self.fingerprint,
            cap: self.cap,
            group: self.group.clone(),
        }
    }
}

impl fmt::Debug for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CartanDatum")
            .field("label", &self.label)
            .field("rank", &self.rank())
            .field("positive_roots", &self.positive_roots.len())
            .finish()
    }
}

impl PartialEq for CartanDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl Eq for CartanDatum {}

fn cartan_for(kind: RootType, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        m.set(i, i, 2);
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        m.set(i, j, aij);
        m.set(j, i, aji);
    };
    match kind {
        RootType::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        RootType::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n short
            link(n - 2, n - 1, -1, -2);
        }
        RootType::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n long
            link(n - 2, n - 1, -2, -1);
        }
        RootType::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        RootType::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        RootType::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        RootType::G => {
            // alpha_1 short, alpha_2 long
            link(0, 1, -3, -1);
        }
    }
    m
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Connected components of the Dynkin diagram, as sorted 0-based index lists.
fn diagram_components(a: &IntMatrix, within: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; a.dim()];
    let mut out = Vec::new();
    for &start in within {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for &j in within {
                if !seen[j] && a.get(i, j) != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Symmetrizing weights `d` with `d_i a_ij = d_j a_ji`, minimal positive integers per component.
fn symmetrizer(a: &IntMatrix) -> Result<Vec<i64>> {
    let n = a.dim();
    let all: Vec<usize> = (0..n).collect();
    // rational weights as (num, den)
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for comp in diagram_components(a, &all) {
        d[comp[0]] = Some((1, 1));
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            let (p, q) = d[i].unwrap();
            for &j in &comp {
                if i == j || a.get(i, j) == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let (mut num, mut den) = (p * a.get(i, j), q * a.get(j, i));
                let g = gcd(num, den);
                num /= g;
                den /= g;
                if den < 0 {
                    num = -num;
                    den = -den;
                }
                match d[j] {
                    None => {
                        d[j] = Some((num, den));
                        queue.push_back(j);
                    }
                    Some((x, y)) => {
                        if x * den != num * y {
                            return Err(Error::NotFiniteType("matrix is not symmetrizable".into()));
                        }
                    }
                }
            }
        }
        let lcm_den = comp.iter().fold(1i64, |acc, &i| {
            let den = d[i].unwrap().1;
            acc / gcd(acc, den) * den
        });
        let ints: Vec<i64> = comp.iter().map(|&i| d[i].unwrap().0 * (lcm_den / d[i].unwrap().1)).collect();
        let g = ints.iter().fold(0, |acc, &v| gcd(acc, v));
        for (&i, v) in comp.iter().zip(ints) {
            d[i] = Some((v / g, 1));
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().0).collect())
}

fn classify_component(a: &IntMatrix, d: &[i64], comp: &[usize], root_count: usize) -> Result<Component> {
    let r = comp.len();
    let simply_laced = comp.iter().all(|&i| d[i] == d[comp[0]]);
    let kind = if simply_laced {
        if root_count == r * (r + 1) / 2 {
            RootType::A
        } else if r >= 4 && root_count == r * (r - 1) {
            RootType::D
        } else if (r, root_count) == (6, 36) || (r, root_count) == (7, 63) || (r, root_count) == (8, 120) {
            RootType::E
        } else {
            return Err(Error::InternalInvariantViolation(format!(
                "cannot classify simply-laced component of rank {r} with {root_count} positive roots"
            )));
        }
    } else if r == 2 && root_count == 6 {
        RootType::G
    } else if r == 4 && root_count == 24 {
        RootType::F
    } else if root_count == r * r {
        let max = comp.iter().map(|&i| d[i]).max().unwrap();
        let long = comp.iter().filter(|&&i| d[i] == max).count();
        if r == 2 || long == r - 1 {
            RootType::B
        } else {
            RootType::C
        }
    } else {
        return Err(Error::InternalInvariantViolation(format!(
            "cannot classify component of rank {r} with {root_count} positive roots"
        )));
    };
    let mut indices: Vec<usize> = comp.to_vec();
    if kind == RootType::A && r > 1 {
        // walk the path from an end node
        let degree = |i: usize| comp.iter().filter(|&&j| j != i && a.get(i, j) != 0).count();
        let start = *comp.iter().find(|&&i| degree(i) == 1).unwrap();
        indices = vec![start];
        while indices.len() < r {
            let last = *indices.last().unwrap();
            let next = *comp
                .iter()
                .find(|&&j| j != last && a.get(last, j) != 0 && !indices.contains(&j))
                .unwrap();
            indices.push(next);
        }
        if indices[0] > indices[r - 1] {
            indices.reverse();
        }
    }
    Ok(Component { kind, rank: r, indices: indices.into_iter().map(|i| i + 1).collect() })
}

impl CartanDatum {
    /// Parse either a type string such as `A3` or `B2xA1`, or a JSON array of integer rows.
    pub fn parse(spec: &str) -> Result<Self> {
        let trimmed = spec.trim();
        if trimmed.starts_with('[') {
            let rows: Vec<Vec<i64>> =
                serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("cartan matrix: {e}")))?;
            Self::from_matrix(&rows)
        } else {
            Self::from_type(trimmed)
        }
    }

    /// Build the root system of a product of named finite types, e.g. `A2xA1`.
    pub fn from_type(spec: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in spec.split(['x', 'X', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let kind = chars
                .next()
                .and_then(RootType::from_letter)
                .ok_or_else(|| Error::UnknownType(spec.to_string()))?;
            let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownType(spec.to_string()))?;
            if !kind.valid_rank(rank) {
                return Err(Error::UnknownType(spec.to_string()));
            }
            blocks.push(cartan_for(kind, rank));
        }
        let n: usize = blocks.iter().map(|b| b.dim()).sum();
        let mut m = IntMatrix::zeros(n);
        let mut off = 0;
        for b in &blocks {
            for i in 0..b.dim() {
                for j in 0..b.dim() {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.dim();
        }
        let label = spec.split(['x', 'X', '*']).map(|p| p.trim().to_ascii_uppercase()).collect::<Vec<_>>().join("x");
        Self::build(m, label)
    }

    pub fn from_matrix(rows: &[Vec<i64>]) -> Result<Self> {
        let m = IntMatrix::from_rows(rows).ok_or_else(|| Error::Parse("cartan matrix must be square".into()))?;
        let label = serde_json::to_string(rows).expect("integer rows serialize");
        Self::build(m, label)
    }

    fn build(a: IntMatrix, label: String) -> Result<Self> {
        let n = a.dim();
        if n == 0 {
            return Err(Error::NotFiniteType("empty matrix".into()));
        }
        for i in 0..n {
            if a.get(i, i) != 2 {
                return Err(Error::NotFiniteType("diagonal entries must be 2".into()));
            }
            for j in 0..n {
                if i != j && (a.get(i, j) > 0 || (a.get(i, j) == 0) != (a.get(j, i) == 0)) {
                    return Err(Error::NotFiniteType("not a generalized Cartan matrix".into()));
                }
            }
        }
        let d = symmetrizer(&a)?;
        let mut form = IntMatrix::zeros(n);
        for (i, &di) in d.iter().enumerate() {
            for j in 0..n {
                form.set(i, j, di * a.get(i, j));
            }
        }
        for k in 1..=n {
            let idx: Vec<usize> = (0..k).collect();
            if form.submatrix(&idx).determinant() <= 0 {
                return Err(Error::NotFiniteType("symmetrized matrix is not positive definite".into()));
            }
        }

        let reflections: Vec<IntMatrix> = (0..n)
            .map(|i| {
                let mut s = IntMatrix::identity(n);
                for j in 0..n {
                    s.set(i, j, if i == j { 1 } else { 0 } - a.get(i, j));
                }
                s
            })
            .collect();

        // orbit-generate positive roots from the simple roots
        let mut positive_roots: Vec<Vec<i64>> = Vec::new();
        let mut root_lookup = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            root_lookup.insert(e.clone(), positive_roots.len());
            positive_roots.push(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for s in &reflections {
                let image = s.apply(&beta);
                if image.iter().all(|&c| c >= 0) && !root_lookup.contains_key(&image) {
                    root_lookup.insert(image.clone(), positive_roots.len());
                    positive_roots.push(image.clone());
                    queue.push_back(image);
                }
            }
        }

        let all: Vec<usize> = (0..n).collect();
        let mut components = Vec::new();
        for comp in diagram_components(&a, &all) {
            let count = positive_roots.iter().filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || comp.contains(&i))).count();
            components.push(classify_component(&a, &d, &comp, count)?);
        }

        let mut hasher = DefaultHasher::new();
        a.hash(&mut hasher);
        Ok(CartanDatum {
            label,
            components,
            cartan: a,
            form,
            positive_roots,
            root_lookup,
            reflections,
            fingerprint: hasher.finish(),
            cap: DEFAULT_CAP,
            group: OnceLock::new(),
        })
    }

    /// Replace the enumeration cap (default [`DEFAULT_CAP`]).
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self.group = OnceLock::new();
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.dim()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn cartan_matrix(&self) -> &IntMatrix {
        &self.cartan
    }

    /// The W-invariant symmetric form on simple roots.
    pub fn bilinear_form(&self) -> &IntMatrix {
        &self.form
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.root_lookup.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|c| -c).collect();
        self.root_lookup.contains_key(&neg)
    }

    /// Index (0-based) of the simple root equal to `v`, if any.
    pub(crate) fn simple_index_of(&self, v: &[i64]) -> Option<usize> {
        let mut hit = None;
        for (i, &c) in v.iter().enumerate() {
            match c {
                0 => {}
                1 if hit.is_none() => hit = Some(i),
                _ => return None,
            }
        }
        hit
    }

    pub fn inner_product(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &ai) in a.iter().enumerate().filter(|(_, &ai)| ai != 0) {
            for (j, &bj) in b.iter().enumerate() {
                s += ai * self.form.get(i, j) * bj;
            }
        }
        s
    }

    pub(crate) fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub(crate) fn reflection_matrix(&self, i: usize) -> &IntMatrix {
        &self.reflections[i]
    }

    /// |W| computed from the component types.
    pub fn group_order(&self) -> u128 {
        self.components.iter().map(|c| c.kind.group_order(c.rank)).product()
    }

    pub(crate) fn check_cap(&self, required: u128) -> Result<()> {
        if required > self.cap as u128 {
            Err(Error::CapExceeded { required, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// The fully enumerated Weyl group, built on first use.
    pub fn group(&self) -> Result<&WeylGroup> {
        if let Some(g) = self.group.get() {
            return Ok(g);
        }
        self.check_cap(self.group_order())?;
        let g = WeylGroup::enumerate(self);
        let _ = self.group.set(g);
        Ok(self.group.get().expect("group just initialized"))
    }

    /// True if every component of the diagram is of type A.
    pub fn is_type_a(&self) -> bool {
        self.components.iter().all(|c| c.kind == RootType::A)
    }

    /// Classify the sub-diagram on the given 0-based indices.
    pub(crate) fn classify_subdiagram(&self, idx: &[usize]) -> Vec<Component> {
        let d: Vec<i64> = (0..self.rank()).map(|i| self.form.get(i, i)).collect();
        diagram_components(&self.cartan, idx)
            .into_iter()
            .map(|comp| {
                let count = self
                    .positive_roots
                    .iter()
                    .filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || comp.contains(&i)))
                    .count();
                classify_component(&self.cartan, &d, &comp, count)
                    .expect("sub-diagrams of finite-type diagrams are finite type")
            })
            .collect()
    }
}
