use std::collections::{HashMap, VecDeque};

use super::cartan::CartanDatum;
use super::element::WeylElement;
use super::matrix::IntMatrix;

/// Dense id of an element inside an enumerated [`WeylGroup`].
pub type ElemId = u32;

/// A fully enumerated Weyl group with left and right multiplication tables
/// by simple reflections. Ids are assigned in breadth-first order, so they
/// are sorted by length; id 0 is the identity.
#[derive(Clone)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    lookup: HashMap<IntMatrix, ElemId>,
    right: Vec<ElemId>,
    left: Vec<ElemId>,
    inverse: Vec<ElemId>,
    longest: ElemId,
}

impl WeylGroup {
    pub(crate) fn enumerate(cartan: &CartanDatum) -> Self {
        let rank = cartan.rank();
        let mut elements = vec![cartan.identity()];
        let mut lookup = HashMap::from([(elements[0].matrix().clone(), 0)]);
        let mut right: Vec<ElemId> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(id) = queue.pop_front() {
            if right.len() < (id + 1) * rank {
                right.resize((id + 1) * rank, 0);
            }
            for s in 1..=rank {
                let next = cartan.right_mul_simple(&elements[id], s);
                let nid = match lookup.get(next.matrix()) {
                    Some(&n) => n,
                    None => {
                        let n = elements.len() as ElemId;
                        lookup.insert(next.matrix().clone(), n);
                        elements.push(next);
                        queue.push_back(n as usize);
                        n
                    }
                };
                right[id * rank + s - 1] = nid;
            }
        }
        let n = elements.len();
        let mut left = vec![0; n * rank];
        for (id, w) in elements.iter().enumerate() {
            for s in 1..=rank {
                let m = cartan.reflection_matrix(s - 1).mul(w.matrix());
                left[id * rank + s - 1] = lookup[&m];
            }
        }
        // inverse via right table walks along reduced words
        let mut inverse = vec![0; n];
        for id in 1..n {
            let w = &elements[id];
            let s = (1..=rank).find(|&s| w.has_right_descent(s)).unwrap();
            // w = u s with u shorter, so w^{-1} = s u^{-1}
            let u = right[id * rank + s - 1] as usize;
            inverse[id] = left[inverse[u] as usize * rank + s - 1];
        }
        let longest = (0..n).max_by_key(|&i| elements[i].length()).unwrap() as ElemId;
        WeylGroup { rank, elements, lookup, right, left, inverse, longest }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, id: ElemId) -> &WeylElement {
        &self.elements[id as usize]
    }

    pub fn id_of(&self, w: &WeylElement) -> Option<ElemId> {
        self.lookup.get(w.matrix()).copied()
    }

    #[inline]
    pub fn length(&self, id: ElemId) -> usize {
        self.elements[id as usize].length()
    }

    /// `w s_i`, `i` 1-based.
    #[inline]
    pub fn right_mul(&self, id: ElemId, i: usize) -> ElemId {
        self.right[id as usize * self.rank + i - 1]
    }

    /// `s_i w`, `i` 1-based.
    #[inline]
    pub fn left_mul(&self, i: usize, id: ElemId) -> ElemId {
        self.left[id as usize * self.rank + i - 1]
    }

    #[inline]
    pub fn inverse(&self, id: ElemId) -> ElemId {
        self.inverse[id as usize]
    }

    pub fn longest(&self) -> ElemId {
        self.longest
    }

    #[inline]
    pub fn is_left_descent(&self, i: usize, id: ElemId) -> bool {
        self.length(self.left_mul(i, id)) < self.length(id)
    }

    #[inline]
    pub fn is_right_descent(&self, id: ElemId, i: usize) -> bool {
        self.length(self.right_mul(id, i)) < self.length(id)
    }

    /// Bruhat order on ids, by the same right-descent walk as
    /// [`CartanDatum::bruhat_leq`].
    pub fn bruhat_leq(&self, mut x: ElemId, mut y: ElemId) -> bool {
        loop {
            if self.length(x) > self.length(y) {
                return false;
            }
            if x == 0 {
                return true;
            }
            let s = (1..=self.rank).find(|&s| self.is_right_descent(y, s)).unwrap();
            if self.is_right_descent(x, s) {
                x = self.right_mul(x, s);
            }
            y = self.right_mul(y, s);
        }
    }

    /// Lower Bruhat interval `[e, y]`, via `[e, y] = [e, sy] ∪ s[e, sy]` for a left descent `s`.
    pub fn lower_interval(&self, y: ElemId) -> Vec<ElemId> {
        let mut chain = Vec::new();
        let mut cur = y;
        while cur != 0 {
            let s = (1..=self.rank).find(|&s| self.is_left_descent(s, cur)).unwrap();
            chain.push(s);
            cur = self.left_mul(s, cur);
        }
        let mut seen = vec![false; self.order()];
        let mut set = vec![0 as ElemId];
        seen[0] = true;
        for &s in chain.iter().rev() {
            let extra: Vec<ElemId> = set.iter().map(|&z| self.left_mul(s, z)).filter(|&z| !seen[z as usize]).collect();
            for z in extra {
                seen[z as usize] = true;
                set.push(z);
            }
        }
        set
    }
}
