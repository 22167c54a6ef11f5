use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use thiserror::Error;

use super::schreier::StabChain;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image list is not a permutation of 0..{0}")]
    NotBijective(usize),
    #[error("generator has degree {found}, group has degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
}

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || std::mem::replace(&mut seen[i], true) {
                return Err(PermError::NotBijective(d));
            }
        }
        Ok(Perm(images.into_iter().map(|i| i as u32).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    /// Cycle notation with points renamed by `label`; `()` for the identity.
    pub fn cycle_notation(&self, label: impl Fn(usize) -> String) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                format!(
                    "({})",
                    c.iter().map(|&x| label(x)).collect::<Vec<_>>().join(" ")
                )
            })
            .collect()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation(|x| x.to_string()))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A permutation group given by generators. The order and stabilizer chain
/// are computed on demand.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    order: OnceLock<BigUint>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators == other.generators
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Identity generators are dropped.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, PermError> {
        if let Some(p) = generators.iter().find(|p| p.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: p.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators: generators
                .into_iter()
                .filter(|p| !p.is_identity())
                .collect(),
            order: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn order(&self) -> BigUint {
        self.order.get_or_init(|| self.chain(&[]).order()).clone()
    }

    /// Stabilizer chain whose base starts with `prefix`.
    pub fn chain(&self, prefix: &[usize]) -> StabChain {
        StabChain::new(self.degree, &self.generators, prefix)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.chain(&[]).contains(p)
    }

    /// The subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let mut prefix: Vec<usize> = points.to_vec();
        prefix.sort_unstable();
        prefix.dedup();
        let gens = self.chain(&prefix).stabilizer_generators(prefix.len());
        PermGroup::new(self.degree, gens).unwrap()
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut out = vec![point];
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// All orbits, each sorted, in order of their smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !done[p] {
                let o = self.orbit(p);
                for &x in &o {
                    done[x] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Orbit of a tuple under the coordinatewise action.
    pub fn tuple_orbit(&self, tuple: &[usize]) -> HashSet<Vec<usize>> {
        let start = tuple.to_vec();
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            for g in &self.generators {
                let img: Vec<usize> = t.iter().map(|&x| g.apply(x)).collect();
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        seen
    }

    /// Whether the tuples form a single orbit. The set is assumed to be
    /// invariant; the empty set counts as transitive.
    pub fn is_transitive_on(&self, tuples: &[Vec<usize>]) -> bool {
        match tuples.first() {
            None => true,
            Some(t) => {
                let orbit = self.tuple_orbit(t);
                tuples.iter().all(|u| orbit.contains(u))
            }
        }
    }

    /// Orbit representatives (first in the given order) of an invariant set
    /// of tuples.
    pub fn tuple_orbit_representatives(&self, tuples: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut covered: HashSet<Vec<usize>> = HashSet::new();
        let mut reps = Vec::new();
        for t in tuples {
            if !covered.contains(t) {
                covered.extend(self.tuple_orbit(t));
                reps.push(t.clone());
            }
        }
        reps
    }
}
