//! Permutation groups on at most [`MAX_ORDER`] points via Schreier-Sims.

use super::MAX_ORDER;
use alloc::vec::Vec;

/// A permutation of `0..MAX_ORDER`; `p[i]` is the image of `i`.
/// Points at or beyond the active degree are fixed.
pub type Perm = [u8; MAX_ORDER];

pub fn identity() -> Perm {
    core::array::from_fn(|i| i as u8)
}

/// `a` then `b`.
#[inline]
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    core::array::from_fn(|i| b[a[i] as usize])
}

#[inline]
pub fn inverse(a: &Perm) -> Perm {
    let mut out = [0u8; MAX_ORDER];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: [Option<Perm>; MAX_ORDER],
}

/// A permutation group given by generators, with a stabiliser chain.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut group = PermGroup { degree, generators: generators.to_vec(), levels: Vec::new() };
        let id = identity();
        for g in generators {
            let (residue, level) = group.sift(g, 0);
            if residue != id {
                group.add_generator(level, residue);
            }
        }
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Group order, the product of the basic orbit lengths.
    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .map(|l| l.transversal.iter().filter(|t| t.is_some()).count() as u64)
            .product()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.sift(p, 0).0 == identity()
    }

    /// Vertex orbits as a map from each point to its least orbit member.
    pub fn orbit_roots(&self) -> [u8; MAX_ORDER] {
        orbit_roots(self.degree, &self.generators)
    }

    fn sift(&self, p: &Perm, from: usize) -> (Perm, usize) {
        let mut g = *p;
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let img = g[level.base] as usize;
            match &level.transversal[img] {
                Some(t) => g = compose(&g, &inverse(t)),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    fn add_generator(&mut self, level: usize, g: Perm) {
        self.push_generator(level, g);
        self.close();
    }

    fn push_generator(&mut self, level: usize, g: Perm) {
        if level == self.levels.len() {
            let base = (0..self.degree).find(|&i| g[i] as usize != i).expect("non-identity residue");
            self.levels.push(Level { base, gens: Vec::new(), transversal: [None; MAX_ORDER] });
        }
        self.levels[level].gens.push(g);
    }

    /// Rebuilds basic orbits and sifts Schreier generators until every level
    /// is closed. Level `l` is acted on by the generators stored at levels `>= l`.
    fn close(&mut self) {
        let id = identity();
        'restart: loop {
            for level in (0..self.levels.len()).rev() {
                let gens: Vec<Perm> = self.levels[level..].iter().flat_map(|l| l.gens.iter().copied()).collect();
                self.rebuild_orbit(level, &gens);
                let lv = &self.levels[level];
                let mut schreier = Vec::new();
                for x in 0..self.degree {
                    if let Some(ux) = &lv.transversal[x] {
                        for s in &gens {
                            let uy = lv.transversal[s[x] as usize].as_ref().expect("orbit closed");
                            schreier.push(compose(&compose(ux, s), &inverse(uy)));
                        }
                    }
                }
                for h in schreier {
                    let (residue, at) = self.sift(&h, level + 1);
                    if residue != id {
                        self.push_generator(at, residue);
                        continue 'restart;
                    }
                }
            }
            return;
        }
    }

    fn rebuild_orbit(&mut self, level: usize, gens: &[Perm]) {
        let lv = &mut self.levels[level];
        lv.transversal = [None; MAX_ORDER];
        lv.transversal[lv.base] = Some(identity());
        let mut queue = Vec::from([lv.base]);
        while let Some(x) = queue.pop() {
            let ux = lv.transversal[x].expect("visited");
            for s in gens {
                let y = s[x] as usize;
                if lv.transversal[y].is_none() {
                    lv.transversal[y] = Some(compose(&ux, s));
                    queue.push(y);
                }
            }
        }
    }
}

/// Maps each point in `0..degree` to the least member of its orbit.
pub fn orbit_roots(degree: usize, gens: &[Perm]) -> [u8; MAX_ORDER] {
    let mut parent: [u8; MAX_ORDER] = identity();
    fn find(parent: &mut [u8; MAX_ORDER], mut x: usize) -> usize {
        while parent[x] as usize != x {
            parent[x] = parent[parent[x] as usize];
            x = parent[x] as usize;
        }
        x
    }
    for g in gens {
        for i in 0..degree {
            let a = find(&mut parent, i);
            let b = find(&mut parent, g[i] as usize);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo as u8;
            }
        }
    }
    for i in 0..degree {
        parent[i] = find(&mut parent, i) as u8;
    }
    parent
}
