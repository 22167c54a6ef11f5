//! Deterministic Schreier–Sims.

use num_bigint::BigUint;

use super::perm::Perm;

/// One level of the chain: the base point and a transversal of its orbit
/// under the pointwise stabilizer of the earlier base points.
#[derive(Debug, Clone)]
struct Level {
    point: usize,
    /// `transversal[β]` maps `point` to `β`.
    transversal: Vec<Option<Perm>>,
}

/// Base and strong generating set of a permutation group.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base begins with `prefix` (extended as needed).
    pub fn new(degree: usize, generators: &[Perm], prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            base: prefix.to_vec(),
            strong: generators
                .iter()
                .filter(|g| !g.is_identity())
                .cloned()
                .collect(),
            levels: Vec::new(),
        };
        chain.complete();
        chain
    }

    fn fixes_prefix(g: &Perm, base: &[usize], k: usize) -> bool {
        base[..k].iter().all(|&b| g.apply(b) == b)
    }

    fn extend_base(&mut self) {
        for g in &self.strong {
            if Self::fixes_prefix(g, &self.base, self.base.len()) {
                let moved = (0..self.degree).find(|&x| g.apply(x) != x).unwrap();
                self.base.push(moved);
            }
        }
    }

    fn level_generators(&self, k: usize) -> Vec<&Perm> {
        self.strong
            .iter()
            .filter(|g| Self::fixes_prefix(g, &self.base, k))
            .collect()
    }

    fn build_levels(&mut self) {
        self.levels = (0..self.base.len())
            .map(|k| {
                let point = self.base[k];
                let gens = self.level_generators(k);
                let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
                transversal[point] = Some(Perm::identity(self.degree));
                let mut queue = vec![point];
                while let Some(x) = queue.pop() {
                    let ux = transversal[x].clone().unwrap();
                    for g in &gens {
                        let y = g.apply(x);
                        if transversal[y].is_none() {
                            transversal[y] = Some(ux.then(g));
                            queue.push(y);
                        }
                    }
                }
                Level { point, transversal }
            })
            .collect();
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it went all the way).
    fn sift(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for k in from..self.levels.len() {
            let lvl = &self.levels[k];
            let beta = g.apply(lvl.point);
            match &lvl.transversal[beta] {
                None => return (g, k),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        'outer: loop {
            self.extend_base();
            self.build_levels();
            for k in (0..self.levels.len()).rev() {
                let gens: Vec<Perm> = self.level_generators(k).into_iter().cloned().collect();
                let lvl = &self.levels[k];
                for beta in 0..self.degree {
                    let Some(u) = &lvl.transversal[beta] else {
                        continue;
                    };
                    for s in &gens {
                        let img = s.apply(beta);
                        let v = lvl.transversal[img].as_ref().unwrap();
                        let schreier = u.then(s).then(&v.inverse());
                        let (residue, stop) = self.sift(schreier, k + 1);
                        if stop < self.levels.len() || !residue.is_identity() {
                            self.strong.push(residue);
                            continue 'outer;
                        }
                    }
                }
            }
            return;
        }
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    /// Sizes of the basic orbits.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| l.transversal.iter().filter(|t| t.is_some()).count())
            .collect()
    }

    pub fn order(&self) -> BigUint {
        self.orbit_sizes()
            .into_iter()
            .fold(BigUint::from(1u32), |acc, s| acc * BigUint::from(s))
    }

    pub fn contains(&self, p: &Perm) -> bool {
        let (residue, stop) = self.sift(p.clone(), 0);
        stop == self.levels.len() && residue.is_identity()
    }

    /// Strong generators fixing the first `k` base points; they generate the
    /// pointwise stabilizer of those points.
    pub fn stabilizer_generators(&self, k: usize) -> Vec<Perm> {
        let k = k.min(self.base.len());
        self.level_generators(k).into_iter().cloned().collect()
    }
}
